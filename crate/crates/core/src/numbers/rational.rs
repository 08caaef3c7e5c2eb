use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonnegative rational `p/q` in lowest terms, including the point at
/// infinity `1/0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigUint,
    den: BigUint,
}

impl Rational {
    /// Builds `num/den` reduced to lowest terms. Any `p/0` with `p > 0`
    /// collapses to infinity.
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Result<Self> {
        let num = num.into();
        let den = den.into();
        if num.is_zero() && den.is_zero() {
            return Err(Error::Indeterminate);
        }
        Ok(Self::reduced(num, den))
    }

    // caller guarantees (num, den) != (0, 0)
    pub(crate) fn reduced(num: BigUint, den: BigUint) -> Self {
        debug_assert!(!(num.is_zero() && den.is_zero()));
        let g = num.gcd(&den);
        if g.is_one() {
            Self { num, den }
        } else {
            Self {
                num: num / &g,
                den: den / &g,
            }
        }
    }

    pub(crate) fn from_coprime(num: BigUint, den: BigUint) -> Self {
        debug_assert!(num.gcd(&den).is_one());
        Self { num, den }
    }

    pub fn integer(n: impl Into<BigUint>) -> Self {
        Self {
            num: n.into(),
            den: BigUint::one(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0u32)
    }

    pub fn one() -> Self {
        Self::integer(1u32)
    }

    pub fn infinity() -> Self {
        Self {
            num: BigUint::one(),
            den: BigUint::zero(),
        }
    }

    pub fn numer(&self) -> &BigUint {
        &self.num
    }

    pub fn denom(&self) -> &BigUint {
        &self.den
    }

    pub fn into_parts(self) -> (BigUint, BigUint) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Integer part; `None` at infinity.
    pub fn floor(&self) -> Option<BigUint> {
        if self.is_infinite() {
            None
        } else {
            Some(&self.num / &self.den)
        }
    }

    /// `1/x`, with `1/0 = inf` and `1/inf = 0`.
    pub fn recip(&self) -> Self {
        Self {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    /// `self - other`, or `None` when the difference is negative or
    /// of the form `inf - inf`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => None,
            (true, false) => Some(Self::infinity()),
            (false, true) => None,
            (false, false) => {
                let lhs = &self.num * &other.den;
                let rhs = &other.num * &self.den;
                if lhs < rhs {
                    None
                } else {
                    Some(Self::reduced(lhs - rhs, &self.den * &other.den))
                }
            }
        }
    }

    /// `|self - other|` for finite operands.
    pub fn abs_diff(&self, other: &Self) -> Self {
        assert!(
            self.is_finite() && other.is_finite(),
            "abs_diff needs finite operands"
        );
        if self >= other {
            self.checked_sub(other).expect("ordered")
        } else {
            other.checked_sub(self).expect("ordered")
        }
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            return f64::INFINITY;
        }
        match (self.num.to_f64(), self.den.to_f64()) {
            (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
            _ => {
                // scale both down to keep the quotient representable
                let shift = self.num.bits().max(self.den.bits()).saturating_sub(1000);
                let n = (&self.num >> shift).to_f64().unwrap_or(f64::INFINITY);
                let d = (&self.den >> shift).to_f64().unwrap_or(f64::INFINITY);
                n / d
            }
        }
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Self::integer(n)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Rational {
    type Output = Rational;

    fn add(self, rhs: &Rational) -> Rational {
        if self.is_infinite() || rhs.is_infinite() {
            return Rational::infinity();
        }
        Rational::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &Rational {
    type Output = Rational;

    /// Panics on `0 * inf`.
    fn mul(self, rhs: &Rational) -> Rational {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        assert!(!(num.is_zero() && den.is_zero()), "0 * inf is undefined");
        Rational::reduced(num, den)
    }
}

impl Div for &Rational {
    type Output = Rational;

    /// Panics on `0 / 0` and `inf / inf`.
    fn div(self, rhs: &Rational) -> Rational {
        let num = &self.num * &rhs.den;
        let den = &self.den * &rhs.num;
        assert!(!(num.is_zero() && den.is_zero()), "0/0 is undefined");
        Rational::reduced(num, den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q`, a bare integer `p`, and `inf` (or `∞`) for `1/0`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "rational",
            input: s.to_string(),
        };
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Self::infinity());
        }
        let digits = |t: &str| -> Result<BigUint> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse::<BigUint>().map_err(|_| err())
        };
        match s.split_once('/') {
            Some((p, q)) => Self::new(digits(p)?, digits(q)?).map_err(|_| err()),
            None => Ok(Self::integer(digits(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
