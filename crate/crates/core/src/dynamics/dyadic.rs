use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::numbers::{path_to_matrix, sb_path, PathBits, Rational};

/// A finite binary expansion `0.d1 d2 ... dk`, or the single point `1.`
/// with integer part one. Equality is digit-string equality: `0.1` and
/// `0.10` are different strings with the same value.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DyadicString {
    integer: bool,
    digits: Vec<u8>,
}

impl DyadicString {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.iter().any(|&d| d > 1) {
            return Err(Error::Parse {
                what: "binary digits",
                input: format!("{digits:?}"),
            });
        }
        Ok(Self {
            integer: false,
            digits,
        })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The expansion `1.` (value 1), the image of infinity.
    pub fn one() -> Self {
        Self {
            integer: true,
            digits: Vec::new(),
        }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn has_integer_part(&self) -> bool {
        self.integer
    }

    pub fn value(&self) -> Rational {
        if self.integer {
            return Rational::one();
        }
        let mut num = BigUint::zero();
        for &d in &self.digits {
            num <<= 1;
            if d == 1 {
                num += 1u32;
            }
        }
        Rational::new(num, BigUint::one() << self.digits.len()).expect("positive denominator")
    }

    /// Odometer step: add one at the first digit and carry to the right.
    pub fn odometer(&self) -> Self {
        if self.integer {
            return Self::zero();
        }
        let mut digits = self.digits.clone();
        match digits.iter().position(|&d| d == 0) {
            Some(i) => {
                digits[i] = 1;
                digits[..i].fill(0);
            }
            None => {
                digits.fill(0);
                digits.push(1);
            }
        }
        Self {
            integer: false,
            digits,
        }
    }

    /// Doubling map: drop the first digit. `1.` is fixed.
    pub fn shift(&self) -> Self {
        if self.integer {
            return self.clone();
        }
        Self {
            integer: false,
            digits: self.digits.iter().skip(1).copied().collect(),
        }
    }
}

impl fmt::Display for DyadicString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.integer { "1." } else { "0." })?;
        for &d in &self.digits {
            f.write_str(if d == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl FromStr for DyadicString {
    type Err = Error;

    /// Accepts `0.d1d2...`, a bare digit string, or `1.`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "binary digits",
            input: s.to_string(),
        };
        let t = s.trim();
        if t == "1." || t == "1.0" {
            return Ok(Self::one());
        }
        let body = t.strip_prefix("0.").unwrap_or(t);
        body.bytes()
            .map(|c| match c {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(err()),
            })
            .collect::<Result<Vec<u8>>>()
            .map(|digits| Self {
                integer: false,
                digits,
            })
    }
}

impl Serialize for DyadicString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn check_unit(op: &'static str, x: &Rational) -> Result<()> {
    if x > &Rational::one() {
        Err(domain(op, x))
    } else {
        Ok(())
    }
}

/// The dyadic odometer on `[0, 1]`: `K(1) = 0` and
/// `K(x) = x + 2^{1-n} + 2^{-n} - 1` on `[1 - 2^{1-n}, 1 - 2^{-n})`.
pub fn map_k(x: &Rational) -> Result<Rational> {
    check_unit("K", x)?;
    if x.is_one() {
        return Ok(Rational::zero());
    }
    let (p, q) = (x.numer(), x.denom());
    let gap = q - p;
    let mut n = 1usize;
    while (&gap << n) <= *q {
        n += 1;
    }
    let scale = BigUint::one() << n;
    // x - 1 + 3/2^n
    let num = &scale * p + 3u32 * q - &scale * q;
    Rational::new(num, scale * q)
}

/// Doubling map `2x mod 1` on `[0, 1]`.
pub fn map_d(x: &Rational) -> Result<Rational> {
    check_unit("D", x)?;
    let (p, q) = (x.numer(), x.denom());
    Rational::new((p << 1u32) % q, q.clone())
}

/// Binary encoding of the tree path: the digits of `sb_path(x)` followed by
/// a single 1, so that the length equals the depth. `rho(0)` is empty and
/// `rho(inf)` is `1.`.
pub fn rho(x: &Rational) -> DyadicString {
    if x.is_zero() {
        return DyadicString::zero();
    }
    if x.is_infinite() {
        return DyadicString::one();
    }
    let mut digits = sb_path(x).expect("positive finite").bits().to_vec();
    digits.push(1);
    DyadicString {
        integer: false,
        digits,
    }
}

/// Inverse of [`rho`] on values; trailing zeros are ignored.
pub fn rho_inv(d: &DyadicString) -> Rational {
    if d.integer {
        return Rational::infinity();
    }
    let end = match d.digits.iter().rposition(|&b| b == 1) {
        Some(i) => i,
        None => return Rational::zero(),
    };
    let path = PathBits::new(d.digits[..end].to_vec()).expect("binary digits");
    path_to_matrix(&path)
        .to_rational()
        .expect("products of A and B are nonnegative")
}

/// Digits of `t_n`: the bits of `n` below its leading one, least
/// significant first, followed by a 1.
pub fn van_der_corput_digits(n: &BigUint) -> Result<DyadicString> {
    if n.is_zero() {
        return Err(Error::ZeroIndex);
    }
    let k = n.bits() - 1;
    let mut digits: Vec<u8> = (0..k).map(|i| u8::from(n.bit(i))).collect();
    digits.push(1);
    Ok(DyadicString {
        integer: false,
        digits,
    })
}

/// The `n`-th Van der Corput point, `t_1 = 1/2`.
pub fn van_der_corput(n: &BigUint) -> Result<Rational> {
    Ok(van_der_corput_digits(n)?.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn d(s: &str) -> DyadicString {
        s.parse().unwrap()
    }

    #[test]
    fn odometer_values() {
        assert_eq!(map_k(&r("1/2")).unwrap(), r("1/4"));
        assert_eq!(map_k(&r("1")).unwrap(), r("0"));
        assert_eq!(map_k(&r("1/4")).unwrap(), r("3/4"));
        assert_eq!(map_k(&r("0")).unwrap(), r("1/2"));
        assert_eq!(map_k(&r("7/8")).unwrap(), r("1/16"));
        assert!(map_k(&r("3/2")).is_err());
    }

    #[test]
    fn odometer_strings() {
        assert_eq!(d("1").odometer(), d("01"));
        assert_eq!(d("01").odometer(), d("11"));
        assert_eq!(d("11").odometer(), d("001"));
        assert_eq!(d("10").odometer(), d("01"));
        assert_eq!(DyadicString::one().odometer(), DyadicString::zero());
    }

    #[test]
    fn doubling() {
        assert_eq!(map_d(&r("1/4")).unwrap(), r("1/2"));
        assert_eq!(map_d(&r("5/16")).unwrap(), r("5/8"));
        assert_eq!(map_d(&r("0")).unwrap(), r("0"));
        assert_eq!(map_d(&r("1")).unwrap(), r("0"));
        assert_eq!(d("0101").shift(), d("101"));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&r("1")).to_string(), "0.1");
        assert_eq!(rho(&r("1")).value(), r("1/2"));
        assert_eq!(rho(&r("2")).to_string(), "0.11");
        assert_eq!(rho(&r("2")).value(), r("3/4"));
        assert_eq!(rho(&r("3/5")).to_string(), "0.0101");
        assert_eq!(rho(&r("3/5")).value(), r("5/16"));
        assert_eq!(rho(&r("0")).value(), r("0"));
        assert_eq!(rho(&r("inf")).value(), r("1"));
        assert_eq!(rho_inv(&rho(&r("65/19"))), r("65/19"));
        assert_eq!(rho_inv(&d("010100")), r("3/5"));
    }

    #[test]
    fn van_der_corput_prefix() {
        let t: Vec<String> = (1u32..=8)
            .map(|n| van_der_corput(&n.into()).unwrap().to_string())
            .collect();
        assert_eq!(t, ["1/2", "1/4", "3/4", "1/8", "5/8", "3/8", "7/8", "1/16"]);
        assert_eq!(van_der_corput(&BigUint::zero()), Err(Error::ZeroIndex));
    }
}
