use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A 2x2 integer matrix `(n m; t s)` with determinant `n*s - m*t = 1`.
///
/// Acting on the right by [`UnimodularMatrix::a`] and [`UnimodularMatrix::b`]
/// moves down the Stern-Brocot tree to the left and to the right child.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    n: BigInt,
    m: BigInt,
    t: BigInt,
    s: BigInt,
}

impl UnimodularMatrix {
    pub fn new(
        n: impl Into<BigInt>,
        m: impl Into<BigInt>,
        t: impl Into<BigInt>,
        s: impl Into<BigInt>,
    ) -> Result<Self> {
        let (n, m, t, s) = (n.into(), m.into(), t.into(), s.into());
        if &n * &s - &m * &t != BigInt::one() {
            return Err(Error::NotUnimodular {
                n: n.to_string(),
                m: m.to_string(),
                t: t.to_string(),
                s: s.to_string(),
            });
        }
        Ok(Self { n, m, t, s })
    }

    fn raw(n: BigInt, m: BigInt, t: BigInt, s: BigInt) -> Self {
        debug_assert!(&n * &s - &m * &t == BigInt::one());
        Self { n, m, t, s }
    }

    pub fn identity() -> Self {
        Self::raw(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// `A = (1 0; 1 1)`, the left move.
    pub fn a() -> Self {
        Self::a_pow(1u32)
    }

    /// `B = (1 1; 0 1)`, the right move.
    pub fn b() -> Self {
        Self::b_pow(1u32)
    }

    /// `A^k = (1 0; k 1)`; `k` may be negative.
    pub fn a_pow(k: impl Into<BigInt>) -> Self {
        Self::raw(BigInt::one(), BigInt::zero(), k.into(), BigInt::one())
    }

    /// `B^k = (1 k; 0 1)`; `k` may be negative.
    pub fn b_pow(k: impl Into<BigInt>) -> Self {
        Self::raw(BigInt::one(), k.into(), BigInt::zero(), BigInt::one())
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.n, &self.m, &self.t, &self.s]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().iter().all(|e| !e.is_negative())
    }

    /// The rational `X(1) = (n+m)/(t+s)`.
    pub fn to_rational(&self) -> Result<Rational> {
        let p = &self.n + &self.m;
        let q = &self.t + &self.s;
        match (p.to_biguint(), q.to_biguint()) {
            (Some(p), Some(q)) => Rational::new(p, q),
            _ => Err(Error::NegativeMatrix),
        }
    }

    /// Columns read as fractions: `(m/s, n/t)`, the left and right parents
    /// of `X(1)` for a matrix built from A and B.
    pub fn columns(&self) -> Result<(Rational, Rational)> {
        let frac = |p: &BigInt, q: &BigInt| match (p.to_biguint(), q.to_biguint()) {
            (Some(p), Some(q)) => Rational::new(p, q),
            _ => Err(Error::NegativeMatrix),
        };
        Ok((frac(&self.m, &self.s)?, frac(&self.n, &self.t)?))
    }

    pub fn transpose(&self) -> Self {
        Self::raw(
            self.n.clone(),
            self.t.clone(),
            self.m.clone(),
            self.s.clone(),
        )
    }

    /// Inverse `(s -m; -t n)`.
    pub fn inverse(&self) -> Self {
        Self::raw(
            self.s.clone(),
            -self.m.clone(),
            -self.t.clone(),
            self.n.clone(),
        )
    }
}

impl Mul for &UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn mul(self, r: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix::raw(
            &self.n * &r.n + &self.m * &r.t,
            &self.n * &r.m + &self.m * &r.s,
            &self.t * &r.n + &self.s * &r.t,
            &self.t * &r.m + &self.s * &r.s,
        )
    }
}

impl Mul for UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn mul(self, r: UnimodularMatrix) -> UnimodularMatrix {
        &self * &r
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.n, self.m, self.t, self.s)
    }
}

impl fmt::Debug for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
