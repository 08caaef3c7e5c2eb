use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::words::Word;

const NONE: usize = usize::MAX;

/// Palindromic tree (eertree) of a binary word. Node 0 is the imaginary
/// root of length -1, node 1 the empty palindrome.
struct Eertree {
    len: Vec<isize>,
    link: Vec<usize>,
    next: Vec<[usize; 2]>,
}

impl Eertree {
    fn build(s: &[u8]) -> Self {
        let mut t = Eertree {
            len: vec![-1, 0],
            link: vec![0, 0],
            next: vec![[NONE; 2], [NONE; 2]],
        };
        let mut last = 1;
        for (i, &c) in s.iter().enumerate() {
            let c = c as usize;
            let fits = |t: &Eertree, v: usize| {
                let j = i as isize - 1 - t.len[v];
                j >= 0 && s[j as usize] as usize == c
            };
            let mut cur = last;
            while !fits(&t, cur) {
                cur = t.link[cur];
            }
            if t.next[cur][c] != NONE {
                last = t.next[cur][c];
                continue;
            }
            let node = t.len.len();
            let len = t.len[cur] + 2;
            let link = if len == 1 {
                1
            } else {
                let mut v = t.link[cur];
                while !fits(&t, v) {
                    v = t.link[v];
                }
                t.next[v][c]
            };
            t.len.push(len);
            t.link.push(link);
            t.next.push([NONE; 2]);
            t.next[cur][c] = node;
            last = node;
        }
        t
    }
}

/// Whether any two factors of equal length differ by at most one in their
/// number of 1s. A binary word is unbalanced exactly when it has factors
/// `0p0` and `1p1` for some palindrome `p`, i.e. when some real node of the
/// eertree has both outgoing edges. Linear time.
pub fn is_balanced(w: &Word) -> bool {
    let t = Eertree::build(w.symbols());
    !(1..t.len.len()).any(|v| t.next[v][0] != NONE && t.next[v][1] != NONE)
}

/// Number of distinct factors of length `n`.
pub fn factor_complexity(w: &Word, n: usize) -> Result<usize> {
    if n > w.len() {
        return Err(Error::FactorTooLong { n, len: w.len() });
    }
    let set: HashSet<&[u8]> = w.symbols().windows(n.max(1)).collect();
    Ok(if n == 0 { 1 } else { set.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn balance_examples() {
        assert!(!is_balanced(&w("0011")));
        assert!(is_balanced(&w("00100101")));
        assert!(is_balanced(&Word::empty()));
        assert!(is_balanced(&w("1")));
        // 0 1 0 | 1 0 1 around the empty palindrome is fine; 00 and 11 are not
        assert!(is_balanced(&w("010")));
        assert!(!is_balanced(&w("001011")));
        assert!(!is_balanced(&w("0100101101")));
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(factor_complexity(&w("000000"), 2).unwrap(), 1);
        assert_eq!(factor_complexity(&w("0110"), 0).unwrap(), 1);
        assert_eq!(factor_complexity(&w("00100101"), 2).unwrap(), 3);
        assert_eq!(factor_complexity(&Word::empty(), 0).unwrap(), 1);
        assert!(matches!(
            factor_complexity(&w("01"), 3),
            Err(Error::FactorTooLong { n: 3, len: 2 })
        ));
    }
}
