//! Exact arithmetic on the Stern-Brocot tree and the objects it indexes:
//! continued fractions, Christoffel words, the maps that generate the tree,
//! Sturmian prefixes and Ford-circle geometry.

pub mod dynamics;
pub mod error;
pub mod hyperbolic;
pub mod numbers;
pub mod sturmian;
pub mod words;

pub use error::{Error, Result};
