use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::palindrome::close;
use super::{FcWord, Word};
use crate::error::{Error, Result};
use crate::numbers::{mediant, parents, path_to_matrix, sb_path, CfExpansion, PathBits, Rational};

fn small(n: &BigUint) -> usize {
    n.to_usize()
        .expect("word length exceeds addressable memory")
}

fn repeat(w: &[u8], times: usize) -> Vec<u8> {
    w.repeat(times)
}

/// The Farey-Christoffel word of `x`, built by concatenating the words of
/// the two parents down the tree (`w_0 = 0`, `w_inf = 1`). Runs of equal
/// moves are handled in one step.
pub fn fc_word(x: &Rational) -> FcWord {
    if x.is_zero() {
        return FcWord::trusted(Word::from_bits(vec![0]), x.clone());
    }
    if x.is_infinite() {
        return FcWord::trusted(Word::from_bits(vec![1]), x.clone());
    }
    let cf = CfExpansion::expand(x).expect("finite nonzero");
    let q = cf.quotients();
    let (mut left, mut right) = (vec![0u8], vec![1u8]);
    for (i, a) in q.iter().enumerate() {
        let mut run = small(a);
        if i == q.len() - 1 {
            run -= 1;
        }
        if run == 0 {
            continue;
        }
        if i % 2 == 0 {
            left.extend(repeat(&right, run));
        } else {
            let mut r = repeat(&left, run);
            r.extend_from_slice(&right);
            right = r;
        }
    }
    left.extend_from_slice(&right);
    FcWord::trusted(Word::from_bits(left), x.clone())
}

/// Mechanical construction `u_k = floor(k b) - floor((k-1) b)` with
/// `b = p/(p+q)`, `k = 1..p+q`.
pub fn fc_word_by_rotation(x: &Rational) -> Result<FcWord> {
    if x.is_infinite() {
        return Err(crate::error::domain("fc_word_by_rotation", x));
    }
    let p = small(x.numer()) as u128;
    let n = p + small(x.denom()) as u128;
    let bits = (1..=n)
        .map(|k| ((k * p) / n - ((k - 1) * p) / n) as u8)
        .collect();
    Ok(FcWord::trusted(Word::from_bits(bits), x.clone()))
}

/// Classifies the orbit of 0 under `+p mod (p+q)` by the cut
/// `{0..q-1} | {q..p+q-1}`.
pub fn fc_word_by_translation(x: &Rational) -> Result<FcWord> {
    if x.is_zero() || x.is_infinite() {
        return Err(crate::error::domain("fc_word_by_translation", x));
    }
    let p = small(x.numer());
    let q = small(x.denom());
    let n = p + q;
    let mut bits = Vec::with_capacity(n);
    let mut y = 0usize;
    for _ in 0..n {
        bits.push(u8::from(y >= q));
        y = (y + p) % n;
    }
    Ok(FcWord::trusted(Word::from_bits(bits), x.clone()))
}

/// `0 c 1` where `c` is the iterated palindromic closure of the path,
/// applying the first bit first.
pub fn word_from_path(path: &PathBits) -> FcWord {
    let mut c = Vec::new();
    for &b in path.bits() {
        close(&mut c, b);
    }
    let mut w = Vec::with_capacity(c.len() + 2);
    w.push(0);
    w.extend(c);
    w.push(1);
    let slope = path_to_matrix(path)
        .to_rational()
        .expect("products of A and B are nonnegative");
    FcWord::trusted(Word::from_bits(w), slope)
}

fn checked_fc(w: &Word, op: &'static str) -> Result<FcWord> {
    if w.len() < 2 {
        return Err(Error::WordTooShort {
            op,
            word: w.to_string(),
            min: 2,
        });
    }
    FcWord::new(w.clone())
}

/// The word of the rational whose path is the reversed path of `w`.
pub fn dual_word(w: &Word) -> Result<FcWord> {
    let fc = checked_fc(w, "dual_word")?;
    Ok(word_from_path(&sb_path(fc.slope())?.reversed()))
}

/// Left and right children `0 (c0)^+ 1` and `0 (c1)^+ 1` of `w = 0 c 1` on
/// the Stern-Brocot tree.
pub fn children_words(w: &Word) -> Result<(FcWord, FcWord)> {
    let fc = checked_fc(w, "children_words")?;
    let (lp, rp) = parents(fc.slope())?;
    let ls = mediant(&lp, fc.slope());
    let rs = mediant(fc.slope(), &rp);
    let c = fc.central()?.into_symbols();
    let child = |a: u8, slope: Rational| {
        let mut s = c.clone();
        close(&mut s, a);
        let mut out = vec![0];
        out.extend(s);
        out.push(1);
        FcWord::trusted(Word::from_bits(out), slope)
    };
    Ok((child(0, ls), child(1, rs)))
}
