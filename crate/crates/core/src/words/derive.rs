use num_traits::ToPrimitive;

use super::{value, FcWord, Value, Word};
use crate::error::{domain, Error, Result};
use crate::numbers::CfExpansion;

fn checked(w: &Word, op: &'static str, min: usize) -> Result<FcWord> {
    if w.len() < min {
        return Err(Error::WordTooShort {
            op,
            word: w.to_string(),
            min,
        });
    }
    FcWord::new(w.clone())
}

fn block_value(w: &Word) -> usize {
    match value(w).expect("nonempty") {
        Value::Finite(k) => k.to_usize().expect("value bounded by word length"),
        Value::Infinite => unreachable!("FC words of length > 1 contain both symbols"),
    }
}

/// Lengths of the blocks `0^n 1` (when `below` is set) or `0 1^n`.
fn blocks(w: &[u8], below: bool) -> Vec<usize> {
    let mut out = Vec::new();
    if below {
        let mut n = 0;
        for &b in w {
            if b == 0 {
                n += 1;
            } else {
                out.push(n);
                n = 0;
            }
        }
    } else {
        for &b in w {
            if b == 0 {
                out.push(0);
            } else {
                *out.last_mut().expect("FC words start with 0") += 1;
            }
        }
    }
    out
}

fn is_below_one(w: &Word) -> bool {
    w.count(1) < w.count(0)
}

pub(crate) fn derive_fc(w: &FcWord) -> FcWord {
    let k = block_value(w);
    let mut out = Vec::new();
    if w.count(1) <= w.count(0) {
        // 0^k 1 -> 1, 0^(k+1) 1 -> 01
        for n in blocks(w.symbols(), true) {
            debug_assert!(n == k || n == k + 1);
            if n > k {
                out.push(0);
            }
            out.push(1);
        }
    } else {
        // 0 1^k -> 0, 0 1^(k+1) -> 01
        for n in blocks(w.symbols(), false) {
            debug_assert!(n == k || n == k + 1);
            out.push(0);
            if n > k {
                out.push(1);
            }
        }
    }
    let word = Word::from_bits(out);
    let slope = super::slope(&word).expect("nonempty");
    FcWord::trusted(word, slope)
}

/// Collapses each block around the value of `w`; the result is the FC word
/// of slope `F^k(x)`.
pub fn derive(w: &Word) -> Result<FcWord> {
    Ok(derive_fc(&checked(w, "derive", 2)?))
}

/// Continued fraction read off the values of the successive derived words.
pub fn word_to_cf(w: &Word) -> Result<CfExpansion> {
    let mut cur = checked(w, "word_to_cf", 1)?;
    if cur.len() == 1 {
        return Err(domain("word_to_cf", cur.slope()));
    }
    let mut quotients = Vec::new();
    if is_below_one(&cur) {
        quotients.push(0u32.into());
    }
    while cur.len() > 1 {
        quotients.push(block_value(&cur).into());
        cur = derive_fc(&cur);
    }
    CfExpansion::new(quotients)
}

pub(crate) fn step_t_fc(w: &FcWord) -> FcWord {
    let k = block_value(w);
    let mut out = Vec::with_capacity(2 * w.len());
    if is_below_one(w) {
        // 0^n 1 -> (01)^(n-1) 1
        for n in blocks(w.symbols(), true) {
            for _ in 1..n {
                out.extend_from_slice(&[0, 1]);
            }
            out.push(1);
        }
    } else {
        // 0 1^n -> 0^(2k+1-n) 1
        for n in blocks(w.symbols(), false) {
            out.extend(std::iter::repeat_n(0, 2 * k + 1 - n));
            out.push(1);
        }
    }
    let word = Word::from_bits(out);
    let slope = super::slope(&word).expect("nonempty");
    FcWord::trusted(word, slope)
}

/// The horizontal map on FC words: the image has slope `R(slope(w))`. The
/// last word of a level goes to the first word of the next.
pub fn step_t(w: &Word) -> Result<FcWord> {
    Ok(step_t_fc(&checked(w, "step_t", 2)?))
}
