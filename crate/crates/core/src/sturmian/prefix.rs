use crate::error::{Error, Result};
use crate::numbers::Rational;
use crate::words::{close_in_place, Word};

use super::SlopeSpec;

/// A finite prefix of the characteristic Sturmian sequence `0 c` of an
/// irrational slope.
#[derive(Clone, Debug)]
pub struct SturmianPrefix {
    pub symbols: Word,
    pub slope: SlopeSpec,
    /// Number of leading symbols known to agree with the infinite sequence.
    pub guaranteed_length: usize,
}

/// The first `len` symbols of `0 c`, where `c` is the limit of the central
/// palindromes obtained by closing along the path `1^a0 0^a1 1^a2 ...`.
pub fn sturmian_prefix(slope: &SlopeSpec, len: usize) -> Result<SturmianPrefix> {
    if len == 0 {
        return Err(Error::PrefixTooShort("length must be at least 1"));
    }
    let mut c: Vec<u8> = Vec::new();
    let mut i = 0;
    'outer: while c.len() + 1 < len {
        let a = slope.quotient(i).ok_or(Error::GeneratorExhausted {
            produced: c.len() + 1,
            needed: len,
        })?;
        let bit = if i % 2 == 0 { 1 } else { 0 };
        for _ in 0..a {
            close_in_place(&mut c, bit);
            if c.len() + 1 >= len {
                break 'outer;
            }
        }
        i += 1;
    }
    let mut symbols = Vec::with_capacity(len);
    symbols.push(0);
    symbols.extend_from_slice(&c[..len - 1]);
    Ok(SturmianPrefix {
        symbols: Word::new(symbols).expect("binary"),
        slope: slope.clone(),
        guaranteed_length: len,
    })
}

/// Applies the horizontal map T block by block to a prefix of `0 w`.
///
/// With `k` the value of the slope (`a1` below 1, `a0` above 1), blocks
/// `0^n 1` become `(01)^(n-1) 1` and blocks `0 1^n` become `0^(2k+1-n) 1`.
/// Only complete blocks are rewritten; the output slope is `R(x)`.
pub fn apply_t_stream(w: &SturmianPrefix) -> Result<SturmianPrefix> {
    let a0 = w
        .slope
        .quotient(0)
        .ok_or(Error::PrefixTooShort("slope has no quotients"))?;
    let below = a0 == 0;
    let k = if below {
        w.slope
            .quotient(1)
            .ok_or(Error::PrefixTooShort("slope has no quotient a1"))?
    } else {
        a0
    } as usize;
    let s = &w.symbols.symbols()[..w.guaranteed_length.min(w.symbols.len())];
    let mut out = Vec::with_capacity(2 * s.len());
    let mut blocks = 0usize;
    if below {
        let mut n = 0usize;
        for &b in s {
            if b == 0 {
                n += 1;
                continue;
            }
            check_block(n, k)?;
            for _ in 1..n {
                out.extend_from_slice(&[0, 1]);
            }
            out.push(1);
            blocks += 1;
            n = 0;
        }
    } else {
        // a block 0 1^n is complete once the next 0 is seen
        let mut n: Option<usize> = None;
        for &b in s {
            match (b, n.as_mut()) {
                (0, Some(m)) => {
                    check_block(*m, k)?;
                    out.extend(std::iter::repeat_n(0, 2 * k + 1 - *m));
                    out.push(1);
                    blocks += 1;
                    n = Some(0);
                }
                (0, None) => n = Some(0),
                (_, Some(m)) => *m += 1,
                (_, None) => return Err(Error::PrefixTooShort("sequence must start with 0")),
            }
        }
    }
    if blocks == 0 {
        return Err(Error::PrefixTooShort("no complete block"));
    }
    let len = out.len();
    Ok(SturmianPrefix {
        symbols: Word::new(out).expect("binary"),
        slope: w.slope.r_image()?,
        guaranteed_length: len,
    })
}

fn check_block(n: usize, k: usize) -> Result<()> {
    if n == k || n == k + 1 {
        Ok(())
    } else {
        Err(Error::InvalidSlope(format!(
            "block exponent {n} does not match value {k}"
        )))
    }
}

/// `|w|_1 / |w|_0`.
pub fn slope_estimate(w: &Word) -> Result<Rational> {
    if w.len() < 2 {
        return Err(Error::WordTooShort {
            op: "slope_estimate",
            word: w.to_string(),
            min: 2,
        });
    }
    if w.count(0) == 0 {
        return Err(crate::error::domain("slope_estimate", w));
    }
    crate::words::slope(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> SlopeSpec {
        s.parse().unwrap()
    }

    #[test]
    fn golden_prefix() {
        let p = sturmian_prefix(&SlopeSpec::golden(), 8).unwrap();
        assert_eq!(p.symbols.to_string(), "01011010");
        assert_eq!(
            sturmian_prefix(&spec("3;(1)"), 1)
                .unwrap()
                .symbols
                .to_string(),
            "0"
        );
        assert_eq!(slope_estimate(&p.symbols).unwrap(), Rational::one());
    }

    #[test]
    fn exhaustion() {
        assert!(matches!(
            sturmian_prefix(&spec("0;2,3"), 100),
            Err(Error::GeneratorExhausted { .. })
        ));
    }

    #[test]
    fn golden_t_image() {
        let p = sturmian_prefix(&SlopeSpec::golden(), 13).unwrap();
        assert_eq!(p.symbols.to_string(), "0101101011011");
        let t = apply_t_stream(&p).unwrap();
        // blocks 01 011 01 011 011 (last 011 incomplete) -> 001 01 001 01
        assert_eq!(t.symbols.to_string(), "0010100101");
        let direct = sturmian_prefix(&t.slope, t.guaranteed_length).unwrap();
        assert_eq!(direct.symbols, t.symbols);
    }

    #[test]
    fn too_short_for_a_block() {
        let p = sturmian_prefix(&SlopeSpec::golden(), 2).unwrap();
        assert!(matches!(apply_t_stream(&p), Err(Error::PrefixTooShort(_))));
        let p = sturmian_prefix(&spec("0;(3)"), 3).unwrap();
        assert!(matches!(apply_t_stream(&p), Err(Error::PrefixTooShort(_))));
    }

    #[test]
    fn slope_estimate_errors() {
        assert!(slope_estimate(&"1".parse().unwrap()).is_err());
        assert!(slope_estimate(&"11".parse().unwrap()).is_err());
        assert_eq!(
            slope_estimate(&"00100101".parse().unwrap())
                .unwrap()
                .to_string(),
            "3/5"
        );
    }
}
