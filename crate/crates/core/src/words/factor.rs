use super::construct::fc_word;
use super::{FcWord, Word};
use crate::error::{Error, Result};
use crate::numbers::parents;

fn checked(w: &Word, op: &'static str) -> Result<FcWord> {
    if w.len() < 2 {
        return Err(Error::WordTooShort {
            op,
            word: w.to_string(),
            min: 2,
        });
    }
    FcWord::new(w.clone())
}

fn len_of(x: &crate::numbers::Rational) -> usize {
    use num_traits::ToPrimitive;
    (x.numer() + x.denom())
        .to_usize()
        .expect("word length exceeds addressable memory")
}

/// The unique split `w = u v` into two nonempty palindromes. The cut falls
/// after `p'' + q''` symbols, the size of the right parent.
pub fn palindromic_factorization(w: &Word) -> Result<(Word, Word)> {
    let fc = checked(w, "palindromic_factorization")?;
    let (_, right) = parents(fc.slope())?;
    let cut = len_of(&right);
    let (u, v) = w.symbols().split_at(cut);
    let (u, v) = (Word::from_bits(u.to_vec()), Word::from_bits(v.to_vec()));
    debug_assert!(u.is_palindrome() && v.is_palindrome());
    Ok((u, v))
}

/// `w = w' w''` with `w'`, `w''` the words of the left and right parents.
pub fn standard_factorization(w: &Word) -> Result<(FcWord, FcWord)> {
    let fc = checked(w, "standard_factorization")?;
    let (left, right) = parents(fc.slope())?;
    let (a, b) = (fc_word(&left), fc_word(&right));
    debug_assert_eq!(&a.concat(&b), fc.word());
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn pal(s: &str) -> (String, String) {
        let (u, v) = palindromic_factorization(&w(s)).unwrap();
        (u.to_string(), v.to_string())
    }

    fn std(s: &str) -> (String, String) {
        let (u, v) = standard_factorization(&w(s)).unwrap();
        (u.to_string(), v.to_string())
    }

    #[test]
    fn palindromic_examples() {
        assert_eq!(pal("00100101"), ("00100".into(), "101".into()));
        assert_eq!(pal("01"), ("0".into(), "1".into()));
        assert_eq!(pal("001"), ("00".into(), "1".into()));
        assert!(palindromic_factorization(&w("0")).is_err());
    }

    #[test]
    fn standard_examples() {
        assert_eq!(std("00100101"), ("001".into(), "00101".into()));
        assert_eq!(std("01"), ("0".into(), "1".into()));
        assert_eq!(std("0001001"), ("0001".into(), "001".into()));
        assert!(matches!(
            standard_factorization(&w("0110")),
            Err(Error::NotFcWord(_))
        ));
    }
}
