//! Navigation on the Stern-Brocot tree: paths, matrices, breadth-first
//! indices, parents and the dual (reversed-path) permutation.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use super::{CfExpansion, Rational, UnimodularMatrix};
use crate::error::{domain, Error, Result};

/// The descending path from the root `1/1` to a node: `0` for a left move
/// (matrix A), `1` for a right move (matrix B).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PathBits(Vec<u8>);

impl PathBits {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::Parse {
                what: "path",
                input: format!("{bits:?}"),
            });
        }
        Ok(Self(bits))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for PathBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PathBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PathBits({self})")
    }
}

impl FromStr for PathBits {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" || s == "-" {
            return Ok(Self::empty());
        }
        s.bytes()
            .map(|c| match c {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(Error::Parse {
                    what: "path",
                    input: s.to_string(),
                }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Self)
    }
}

/// `(a.num + b.num) / (a.den + b.den)`, reduced.
pub fn mediant(a: &Rational, b: &Rational) -> Rational {
    Rational::reduced(a.numer() + b.numer(), a.denom() + b.denom())
}

/// Whether `a < b` satisfy `b.num * a.den - a.num * b.den = 1`.
pub fn is_farey_pair(a: &Rational, b: &Rational) -> Result<bool> {
    if a >= b {
        return Err(Error::Order {
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    let lhs = b.numer() * a.denom();
    let rhs = a.numer() * b.denom();
    Ok(lhs == rhs + 1u32)
}

fn require_node(op: &'static str, x: &Rational) -> Result<()> {
    if x.is_zero() || x.is_infinite() {
        Err(domain(op, x))
    } else {
        Ok(())
    }
}

/// Level of `x` on the tree (the root `1/1` has depth 1).
pub fn depth(x: &Rational) -> Result<BigUint> {
    Ok(CfExpansion::expand(x)?.depth())
}

/// `x / (x + 1)`, with `phi(inf) = 1`. Maps the tree onto the Farey
/// subtree of `[0, 1]`.
pub fn phi(x: &Rational) -> Rational {
    if x.is_infinite() {
        return Rational::one();
    }
    Rational::from_coprime(x.numer().clone(), x.numer() + x.denom())
}

/// Inverse of [`phi`]: `y / (1 - y)` on `[0, 1]`.
pub fn phi_inv(y: &Rational) -> Result<Rational> {
    if y > &Rational::one() {
        return Err(domain("phi_inv", y));
    }
    Ok(Rational::from_coprime(
        y.numer().clone(),
        y.denom() - y.numer(),
    ))
}

/// One step of the antecedent map: `x/(1-x)` below 1, `x-1` from 1 on.
pub(crate) fn f_step(x: &Rational) -> Rational {
    let (p, q) = (x.numer(), x.denom());
    if x.is_infinite() {
        Rational::infinity()
    } else if p < q {
        Rational::from_coprime(p.clone(), q - p)
    } else {
        Rational::from_coprime(p - q, q.clone())
    }
}

/// Path of `x` read off its orbit under the antecedent map: bit `i` is 0
/// when the `(i-1)`-th antecedent is at most 1.
pub fn sb_path(x: &Rational) -> Result<PathBits> {
    require_node("sb_path", x)?;
    let mut bits = Vec::new();
    let mut y = x.clone();
    while !y.is_one() {
        bits.push(u8::from(y > Rational::one()));
        y = f_step(&y);
    }
    Ok(PathBits(bits))
}

/// Path from the continued fraction: `1^a0 0^a1 1^a2 ...` with the last run
/// shortened by one.
pub fn path_from_cf(cf: &CfExpansion) -> PathBits {
    let q = cf.quotients();
    let mut bits = Vec::new();
    for (i, a) in q.iter().enumerate() {
        let mut run = a.to_usize().expect("partial quotient fits in memory");
        if i == q.len() - 1 {
            run -= 1;
        }
        let bit = if i % 2 == 0 { 1 } else { 0 };
        bits.extend(std::iter::repeat_n(bit, run));
    }
    PathBits(bits)
}

/// `0 -> A`, `1 -> B`, multiplied left to right.
pub fn path_to_matrix(path: &PathBits) -> UnimodularMatrix {
    let (mut n, mut m, mut t, mut s) =
        (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    for &b in path.bits() {
        if b == 0 {
            // X * A = (n+m  m; t+s  s)
            n += &m;
            t += &s;
        } else {
            // X * B = (n  m+n; t  s+t)
            m += &n;
            s += &t;
        }
    }
    UnimodularMatrix::new(n, m, t, s).expect("products of A and B are unimodular")
}

/// The matrix `B^a0 A^a1 B^a2 ...` with the last exponent `an - 1`.
pub fn matrix_from_cf(cf: &CfExpansion) -> UnimodularMatrix {
    let q = cf.quotients();
    let mut x = UnimodularMatrix::identity();
    for (i, a) in q.iter().enumerate() {
        let mut e = BigInt::from(a.clone());
        if i == q.len() - 1 {
            e -= 1;
        }
        let factor = if i % 2 == 0 {
            UnimodularMatrix::b_pow(e)
        } else {
            UnimodularMatrix::a_pow(e)
        };
        x = &x * &factor;
    }
    x
}

/// `X(1)` for an arbitrary 2x2 integer matrix, rejecting determinant != 1.
pub fn matrix_to_rational(
    n: impl Into<BigInt>,
    m: impl Into<BigInt>,
    t: impl Into<BigInt>,
    s: impl Into<BigInt>,
) -> Result<Rational> {
    UnimodularMatrix::new(n, m, t, s)?.to_rational()
}

pub fn matrix_of(x: &Rational) -> Result<UnimodularMatrix> {
    Ok(path_to_matrix(&sb_path(x)?))
}

/// Breadth-first index of `x`: the binary numeral `1 s1 s2 ... sk`.
pub fn sb_index(x: &Rational) -> Result<BigUint> {
    let path = sb_path(x)?;
    let mut n = BigUint::one();
    for &b in path.bits() {
        n <<= 1;
        if b == 1 {
            n += 1u32;
        }
    }
    Ok(n)
}

/// The path encoded by a breadth-first index (its bits after the leading 1).
pub fn path_of_index(n: &BigUint) -> Result<PathBits> {
    if n.is_zero() {
        return Err(Error::ZeroIndex);
    }
    let k = n.bits() - 1;
    let bits = (0..k).rev().map(|i| u8::from(n.bit(i))).collect();
    Ok(PathBits(bits))
}

/// The `n`-th rational read row by row from the root (`r_1 = 1/1`).
pub fn rational_from_index(n: &BigUint) -> Result<Rational> {
    path_to_matrix(&path_of_index(n)?).to_rational()
}

/// Rational named by the reversed matrix product of `x`.
pub fn dual(x: &Rational) -> Result<Rational> {
    path_to_matrix(&sb_path(x)?.reversed()).to_rational()
}

/// The Farey pair `(left, right)` whose mediant is `x`, read off the
/// columns of the matrix of `x`.
pub fn parents(x: &Rational) -> Result<(Rational, Rational)> {
    matrix_of(x)?.columns()
}

/// Left and right descendants `p/(p+q)` and `(p+q)/q`.
pub fn descendants(x: &Rational) -> Result<(Rational, Rational)> {
    require_node("descendants", x)?;
    let (p, q) = (x.numer(), x.denom());
    Ok((
        Rational::from_coprime(p.clone(), p + q),
        Rational::from_coprime(p + q, q.clone()),
    ))
}

/// The node one level up on the permuted tree; undefined at the root.
pub fn antecedent(x: &Rational) -> Result<Rational> {
    require_node("antecedent", x)?;
    if x.is_one() {
        return Err(domain("antecedent", x));
    }
    Ok(f_step(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn mediant_examples() {
        assert_eq!(mediant(&r("0"), &r("inf")), r("1"));
        assert_eq!(mediant(&r("1/2"), &r("2/3")), r("3/5"));
        assert_eq!(mediant(&r("1"), &r("1")), r("1"));
        // not a Farey pair: result gets reduced
        assert_eq!(mediant(&r("1/3"), &r("1/1")), r("1/2"));
    }

    #[test]
    fn farey_pair_examples() {
        assert_eq!(is_farey_pair(&r("1/3"), &r("1/2")), Ok(true));
        assert_eq!(is_farey_pair(&r("1/3"), &r("2/3")), Ok(false));
        assert_eq!(is_farey_pair(&r("0"), &r("inf")), Ok(true));
        assert!(matches!(
            is_farey_pair(&r("1/2"), &r("1/3")),
            Err(Error::Order { .. })
        ));
        assert!(is_farey_pair(&r("1/2"), &r("1/2")).is_err());
    }

    #[test]
    fn depth_examples() {
        assert_eq!(depth(&r("1")).unwrap(), BigUint::from(1u32));
        assert_eq!(depth(&r("3/5")).unwrap(), BigUint::from(4u32));
        assert_eq!(depth(&r("65/19")).unwrap(), BigUint::from(10u32));
        assert!(depth(&r("0")).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&r("inf")), r("1"));
        assert_eq!(phi(&r("1")), r("1/2"));
        assert_eq!(phi(&r("0")), r("0"));
        assert_eq!(phi_inv(&r("3/8")).unwrap(), r("3/5"));
        assert_eq!(phi_inv(&r("1")).unwrap(), r("inf"));
        assert!(phi_inv(&r("3/2")).is_err());
    }

    #[test]
    fn path_examples() {
        assert_eq!(sb_path(&r("3/5")).unwrap().to_string(), "010");
        assert_eq!(sb_path(&r("65/19")).unwrap().to_string(), "111001101");
        assert_eq!(sb_path(&r("1/2")).unwrap().to_string(), "0");
        assert!(sb_path(&r("1")).unwrap().is_empty());
        assert!(sb_path(&r("inf")).is_err());
    }

    #[test]
    fn matrix_examples() {
        let x = path_to_matrix(&"010".parse().unwrap());
        assert_eq!(x, UnimodularMatrix::new(2, 1, 3, 2).unwrap());
        assert_eq!(x.to_rational().unwrap(), r("3/5"));
        assert_eq!(
            path_to_matrix(&PathBits::empty()),
            UnimodularMatrix::identity()
        );
        assert_eq!(matrix_to_rational(2, 1, 3, 2).unwrap(), r("3/5"));
        assert!(matches!(
            matrix_to_rational(2, 1, 1, 2),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn index_examples() {
        assert_eq!(sb_index(&r("65/19")).unwrap(), BigUint::from(973u32));
        assert_eq!(sb_index(&r("3/5")).unwrap(), BigUint::from(10u32));
        assert_eq!(sb_index(&r("1")).unwrap(), BigUint::from(1u32));
        assert_eq!(rational_from_index(&BigUint::from(8u32)).unwrap(), r("1/4"));
        assert_eq!(
            rational_from_index(&BigUint::from(973u32)).unwrap(),
            r("65/19")
        );
        assert_eq!(rational_from_index(&BigUint::zero()), Err(Error::ZeroIndex));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&r("2/5")).unwrap(), r("4/3"));
        assert_eq!(dual(&r("3/5")).unwrap(), r("3/5"));
        assert_eq!(dual(&r("1/2")).unwrap(), r("1/2"));
        assert!(dual(&r("0")).is_err());
    }

    #[test]
    fn family_examples() {
        assert_eq!(parents(&r("3/5")).unwrap(), (r("1/2"), r("2/3")));
        assert_eq!(parents(&r("1")).unwrap(), (r("0"), r("inf")));
        assert_eq!(descendants(&r("3/5")).unwrap(), (r("3/8"), r("8/5")));
        assert_eq!(antecedent(&r("65/19")).unwrap(), r("46/19"));
        assert!(antecedent(&r("1")).is_err());
    }

    #[test]
    fn cf_route_agrees_with_orbit_route() {
        for p in 1u32..40 {
            for q in 1u32..40 {
                let x = Rational::new(p, q).unwrap();
                let cf = CfExpansion::expand(&x).unwrap();
                assert_eq!(path_from_cf(&cf), sb_path(&x).unwrap(), "{x}");
                assert_eq!(matrix_from_cf(&cf), matrix_of(&x).unwrap(), "{x}");
            }
        }
    }
}
