use super::Word;
use crate::error::{Error, Result};

pub(crate) fn is_palindrome(s: &[u8]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// Length of the longest palindromic suffix of `s`, from the KMP failure
/// function of `rev(s) # s`.
pub(crate) fn longest_palindromic_suffix(s: &[u8]) -> usize {
    const SEP: u8 = 2;
    let text: Vec<u8> = s
        .iter()
        .rev()
        .copied()
        .chain(std::iter::once(SEP))
        .chain(s.iter().copied())
        .collect();
    let mut fail = vec![0usize; text.len()];
    for i in 1..text.len() {
        let mut k = fail[i - 1];
        while k > 0 && text[i] != text[k] {
            k = fail[k - 1];
        }
        if text[i] == text[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail.last().copied().unwrap_or(0)
}

/// `(s a)^+` for a palindrome `s`, in place.
pub(crate) fn close(s: &mut Vec<u8>, a: u8) {
    s.push(a);
    let keep = s.len() - longest_palindromic_suffix(s);
    let head: Vec<u8> = s[..keep].iter().rev().copied().collect();
    s.extend(head);
}

/// The palindromic closure `(u a)^+`: the shortest palindrome having
/// `u a` as a prefix.
pub fn pal_closure(u: &Word, a: u8) -> Result<Word> {
    if !u.is_palindrome() {
        return Err(Error::NotPalindrome(u.to_string()));
    }
    if a > 1 {
        return Err(Error::Parse {
            what: "symbol",
            input: a.to_string(),
        });
    }
    let mut s = u.symbols().to_vec();
    close(&mut s, a);
    Ok(Word::from_bits(s))
}
