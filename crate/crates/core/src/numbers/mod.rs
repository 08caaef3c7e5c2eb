//! Rationals, continued fractions, unimodular matrices and tree navigation.

mod cf;
mod matrix;
mod rational;
mod tree;

pub use cf::{raw_value, CfExpansion};
pub use matrix::UnimodularMatrix;
pub use rational::Rational;
#[allow(unused_imports)]
pub(crate) use tree::f_step;
pub use tree::{
    antecedent, depth, descendants, dual, is_farey_pair, matrix_from_cf, matrix_of,
    matrix_to_rational, mediant, parents, path_from_cf, path_of_index, path_to_matrix, phi,
    phi_inv, rational_from_index, sb_index, sb_path, PathBits,
};

pub fn cf_expand(x: &Rational) -> crate::Result<CfExpansion> {
    CfExpansion::expand(x)
}

pub fn cf_value(c: &CfExpansion) -> Rational {
    c.value()
}
