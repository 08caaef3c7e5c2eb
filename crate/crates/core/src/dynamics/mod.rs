//! The maps F, R, G, S on the extended positive reals, the odometer and
//! doubling map on dyadic strings, the encoding rho, the Van der Corput and
//! hyperbinary sequences, invariant densities, and the tree random walk.

mod density;
mod dyadic;
mod hyperbinary;
mod maps;
mod walk;

pub use density::{invariant_density, transfer, DensityMap};
pub use dyadic::{map_d, map_k, rho, rho_inv, van_der_corput, van_der_corput_digits, DyadicString};
pub use hyperbinary::hyperbinary;
pub use maps::{
    fibonacci, fibonacci_interval, iterate, map_f, map_f_cf, map_f_preimages, map_g, map_r,
    map_r_cf, map_r_inv, map_s, map_s_cf_rule, map_s_right_limit, orbit, RealMap,
};
pub use walk::{random_walk, FrequencyReport, RandomWalk};
