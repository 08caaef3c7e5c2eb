//! Prefixes of characteristic Sturmian sequences with irrational slopes
//! given by continued-fraction generators, the map T on streams, and
//! balance and complexity checks.

mod balance;
mod prefix;
mod spec;

pub use balance::{factor_complexity, is_balanced};
pub use prefix::{apply_t_stream, slope_estimate, sturmian_prefix, SturmianPrefix};
pub use spec::SlopeSpec;
