//! Farey-Christoffel words: constructions, factorizations, palindromic
//! closure, derivation and the horizontal map.

mod construct;
mod derive;
mod factor;
mod palindrome;
mod word;

pub use construct::{
    children_words, dual_word, fc_word, fc_word_by_rotation, fc_word_by_translation, word_from_path,
};
pub use derive::{derive, step_t, word_to_cf};
pub use factor::{palindromic_factorization, standard_factorization};
pub use palindrome::pal_closure;
pub use word::{conjugates, slope, substitute, value, FcWord, Substitution, Value, Word};

pub(crate) use palindrome::close as close_in_place;
