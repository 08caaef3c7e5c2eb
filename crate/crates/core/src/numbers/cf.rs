use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{domain, Error, Result};

/// A finite simple continued fraction `[a0; a1, ..., an]` in canonical form:
/// `a0 >= 0`, `ai >= 1` for `i >= 1`, and the last quotient is at least 2
/// whenever there is more than one (so the value 1 is `[1]`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CfExpansion {
    quotients: Vec<BigUint>,
}

impl CfExpansion {
    /// Validates and normalizes a list of partial quotients. A trailing 1 is
    /// folded into its predecessor.
    pub fn new(quotients: Vec<BigUint>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::Parse {
                what: "continued fraction",
                input: String::new(),
            });
        }
        if quotients.iter().skip(1).any(Zero::is_zero) {
            return Err(domain("continued fraction", fmt_quotients(&quotients)));
        }
        let mut quotients = quotients;
        if quotients.len() > 1 && quotients.last().is_some_and(One::is_one) {
            quotients.pop();
            *quotients.last_mut().expect("nonempty") += 1u32;
        }
        if quotients.len() == 1 && quotients[0].is_zero() {
            return Err(domain("continued fraction", "[0]"));
        }
        Ok(Self { quotients })
    }

    /// Canonical expansion of `x` by the Euclidean algorithm.
    pub fn expand(x: &Rational) -> Result<Self> {
        if x.is_zero() || x.is_infinite() {
            return Err(domain("continued fraction expansion", x));
        }
        let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
        let mut quotients = Vec::new();
        while !q.is_zero() {
            let (a, r) = p.div_rem(&q);
            quotients.push(a);
            p = q;
            q = r;
        }
        Ok(Self { quotients })
    }

    pub fn quotients(&self) -> &[BigUint] {
        &self.quotients
    }

    pub fn into_quotients(self) -> Vec<BigUint> {
        self.quotients
    }

    /// Index `n` of the last quotient `an`.
    pub fn last_index(&self) -> usize {
        self.quotients.len() - 1
    }

    pub fn value(&self) -> Rational {
        raw_value(&self.quotients)
    }

    /// Sum of the partial quotients, which is the Stern-Brocot depth.
    pub fn depth(&self) -> BigUint {
        self.quotients.iter().sum()
    }
}

/// Value of an arbitrary quotient list, zeros allowed: evaluates
/// `a0 + 1/(a1 + 1/(...))` right to left with `1/0 = inf` and `1/inf = 0`.
pub fn raw_value(quotients: &[BigUint]) -> Rational {
    let mut acc = Rational::infinity();
    for a in quotients.iter().rev() {
        let tail = acc.recip();
        acc = if tail.is_infinite() {
            Rational::infinity()
        } else {
            let (n, d) = tail.into_parts();
            Rational::from_coprime(a * &d + n, d)
        };
    }
    acc
}

fn fmt_quotients(q: &[BigUint]) -> String {
    let mut s = String::from("[");
    for (i, a) in q.iter().enumerate() {
        match i {
            0 => {}
            1 => s.push(';'),
            _ => s.push(','),
        }
        s.push_str(&a.to_string());
    }
    s.push(']');
    s
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_quotients(&self.quotients))
    }
}

impl FromStr for CfExpansion {
    type Err = Error;

    /// Parses `[a0;a1,...,an]` (brackets optional).
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "continued fraction",
            input: s.to_string(),
        };
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let (head, tail) = match body.split_once(';') {
            Some((h, t)) => (h, Some(t)),
            None => (body, None),
        };
        let mut quotients = vec![head.trim().parse::<BigUint>().map_err(|_| err())?];
        if let Some(tail) = tail {
            for part in tail.split(',') {
                quotients.push(part.trim().parse::<BigUint>().map_err(|_| err())?);
            }
        }
        Self::new(quotients)
    }
}
