use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::numbers::{f_step, raw_value, CfExpansion, Rational};

/// `x/(1-x)` on `[0, 1)`, `x - 1` on `[1, inf]`. Taking `F(1) = 0` rather
/// than `inf` keeps `R^m F^n = F^n R^(2^n m)` and `F = rho^-1 D rho` valid
/// at every node, and matches the action on `[1] -> [0]`.
pub fn map_f(x: &Rational) -> Rational {
    f_step(x)
}

/// The two branches of `F^{-1}(x)`: `x/(x+1)` and `x+1`. Both are `inf`
/// at `inf`.
pub fn map_f_preimages(x: &Rational) -> (Rational, Rational) {
    if x.is_infinite() {
        return (Rational::infinity(), Rational::infinity());
    }
    let (p, q) = (x.numer(), x.denom());
    (
        Rational::from_coprime(p.clone(), p + q),
        Rational::from_coprime(p + q, q.clone()),
    )
}

/// `1/(1 - x + 2 floor(x))`, with `R(0) = 1` and `R(inf) = 0`.
pub fn map_r(x: &Rational) -> Rational {
    let Some(f) = x.floor() else {
        return Rational::zero();
    };
    let (p, q) = (x.numer(), x.denom());
    Rational::from_coprime(q.clone(), q + (f << 1u32) * q - p)
}

/// The inverse of [`map_r`]. On `y = a/b` the branch is
/// `f = ceil(b/a) - 1`, which differs from `floor(1/y)` exactly at the
/// reciprocals of integers: `R^{-1}(1/n) = n - 1`.
pub fn map_r_inv(y: &Rational) -> Result<Rational> {
    if y.is_infinite() {
        return Err(domain("R^-1", y));
    }
    if y.is_zero() {
        return Ok(Rational::infinity());
    }
    let (a, b) = (y.numer(), y.denom());
    let f: BigUint = if b.is_zero() {
        BigUint::zero()
    } else {
        (b - 1u32) / a
    };
    Ok(Rational::from_coprime(a + (f << 1u32) * a - b, a.clone()))
}

/// `x/(1-x)` on `[0, 1]`, `1/(x-1)` above 1; `G(inf) = inf`, as for F.
pub fn map_g(x: &Rational) -> Rational {
    if x.is_infinite() {
        return Rational::infinity();
    }
    let (p, q) = (x.numer(), x.denom());
    if p <= q {
        Rational::from_coprime(p.clone(), q - p)
    } else {
        Rational::from_coprime(q.clone(), p - q)
    }
}

/// Fibonacci numbers with `F_{-1} = 1`, `F_0 = 0`.
pub fn fibonacci(l: i64) -> Result<BigUint> {
    if l < -1 {
        return Err(domain("fibonacci", l));
    }
    let (mut a, mut b) = (BigUint::one(), BigUint::zero());
    for _ in -1..l {
        let next = &a + &b;
        a = b;
        b = next;
    }
    // (a, b) = (F_l, F_{l+1})
    Ok(a)
}

/// Fibonacci ratio `x_k = F_k / F_{k-1}`.
fn fib_ratio(k: u64, fib: &[BigUint]) -> Rational {
    // fib[i] holds F_{i-1}
    let k = k as usize;
    Rational::from_coprime(fib[k + 1].clone(), fib[k].clone())
}

/// Index `k` of the Fibonacci interval `C_k` containing `x`, with
/// `C_{2r} = [x_{2r}, x_{2r+2})` and `C_{2r+1} = (x_{2r+3}, x_{2r+1}]`.
/// The odd intervals are closed at their larger end, so `S` agrees with
/// its continued-fraction rule at every `x_k`.
pub fn fibonacci_interval(x: &Rational) -> u64 {
    interval_index(x, true)
}

fn interval_index(x: &Rational, odd_closed_above: bool) -> u64 {
    let one = Rational::one();
    let two = Rational::integer(2u32);
    if x < &one {
        return 0;
    }
    if x > &two || (x == &two && !odd_closed_above) {
        return 1;
    }
    let mut fib = vec![BigUint::one(), BigUint::zero()];
    let mut k = 2u64;
    loop {
        while fib.len() < k as usize + 4 {
            let n = fib.len();
            let next = &fib[n - 1] + &fib[n - 2];
            fib.push(next);
        }
        let inside = if k.is_multiple_of(2) {
            &fib_ratio(k, &fib) <= x && x < &fib_ratio(k + 2, &fib)
        } else if odd_closed_above {
            &fib_ratio(k + 2, &fib) < x && x <= &fib_ratio(k, &fib)
        } else {
            &fib_ratio(k + 2, &fib) <= x && x < &fib_ratio(k, &fib)
        };
        if inside {
            return k;
        }
        k += 1;
    }
}

fn to_signed(n: &BigUint) -> BigInt {
    BigInt::from(n.clone())
}

fn mobius_s(x: &Rational, k: u64) -> Rational {
    let kk = BigInt::from(k);
    let f = |i: i64| to_signed(&fibonacci(i).expect("index >= -1"));
    let (fk, fk1, fkm) = (f(k as i64), f(k as i64 + 1), f(k as i64 - 1));
    let (p, q) = (to_signed(x.numer()), to_signed(x.denom()));
    let num = &fk * &p - &fk1 * &q;
    let den = (&kk * &fk - &fkm) * &p - (&kk * &fk1 - &fk) * &q;
    debug_assert!(num.is_zero() || den.is_zero() || num.sign() == den.sign());
    Rational::new(
        num.abs().to_biguint().expect("abs"),
        den.abs().to_biguint().expect("abs"),
    )
    .expect("numerator and denominator not both zero")
}

/// The orientation-reversing analogue of R, piecewise Möbius on the
/// Fibonacci intervals of [`fibonacci_interval`]; `S(0) = inf`,
/// `S(inf) = 1`.
pub fn map_s(x: &Rational) -> Rational {
    if x.is_infinite() {
        return Rational::one();
    }
    if x.is_zero() {
        return Rational::infinity();
    }
    mobius_s(x, fibonacci_interval(x))
}

/// S with every `C_k` closed on the left, `C_{2r+1} = [x_{2r+3}, x_{2r+1})`:
/// the right limit of S. It differs from [`map_s`] exactly at the odd
/// Fibonacci ratios `x_3 = 2, x_5 = 5/3, ...` (2 maps to 1/2, not 1/3), and
/// with it `S^m G^n = G^n S^(2^n m)` fails, e.g. at `x = 2`.
pub fn map_s_right_limit(x: &Rational) -> Rational {
    if x.is_infinite() {
        return Rational::one();
    }
    if x.is_zero() {
        return Rational::infinity();
    }
    mobius_s(x, interval_index(x, false))
}

/// S computed from the continued-fraction rule, with the Fibonacci-ratio
/// case `[1;1,...,1,2] -> [0; l+2]` tested first. Agrees with [`map_s`].
pub fn map_s_cf_rule(x: &Rational) -> Rational {
    if x.is_infinite() {
        return Rational::one();
    }
    if x.is_zero() {
        return Rational::infinity();
    }
    let cf = CfExpansion::expand(x).expect("finite nonzero");
    let a = cf.quotients();
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let n = a.len();
    // [1] is x_2; [1;1,...,1,2] of length l is x_{l+2}
    if a == [one.clone()] {
        return Rational::from_coprime(one, 2u32.into());
    }
    if a[n - 1] == two && a[..n - 1].iter().all(|q| q == &one) {
        return Rational::from_coprime(one, BigUint::from(n + 2));
    }
    if a[0].is_zero() {
        return raw_value(&a[1..]);
    }
    let m = a
        .iter()
        .position(|q| q > &one)
        .expect("canonical tail >= 2");
    let mut out = vec![BigUint::zero(), BigUint::from(m as u64 + 1), &a[m] - 1u32];
    out.extend_from_slice(&a[m + 1..]);
    raw_value(&out)
}

/// F acting on canonical quotient lists:
/// `[0;a1,...] -> [0;a1-1,...]`, `[a0;a1,...] -> [a0-1;a1,...]`.
pub fn map_f_cf(x: &Rational) -> Result<Rational> {
    let a = CfExpansion::expand(x)?.into_quotients();
    let mut out = a.clone();
    if a[0].is_zero() {
        out[1] -= 1u32;
    } else {
        out[0] -= 1u32;
    }
    Ok(raw_value(&out))
}

/// R acting on canonical quotient lists:
/// `[0;a1,...] -> [1;a1-1,...]`, `[a0;a1,...] -> [0;a0,1,a1-1,...]`.
pub fn map_r_cf(x: &Rational) -> Result<Rational> {
    let a = CfExpansion::expand(x)?.into_quotients();
    let out = if a[0].is_zero() {
        let mut out = vec![BigUint::one(), &a[1] - 1u32];
        out.extend_from_slice(&a[2..]);
        out
    } else {
        let mut out = vec![BigUint::zero(), a[0].clone(), BigUint::one()];
        if a.len() > 1 {
            out.push(&a[1] - 1u32);
            out.extend_from_slice(&a[2..]);
        }
        out
    };
    Ok(raw_value(&out))
}

/// The maps that can be iterated from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealMap {
    F,
    R,
    RInv,
    G,
    S,
    K,
    D,
}

impl RealMap {
    pub fn apply(self, x: &Rational) -> Result<Rational> {
        match self {
            RealMap::F => Ok(map_f(x)),
            RealMap::R => Ok(map_r(x)),
            RealMap::RInv => map_r_inv(x),
            RealMap::G => Ok(map_g(x)),
            RealMap::S => Ok(map_s(x)),
            RealMap::K => super::dyadic::map_k(x),
            RealMap::D => super::dyadic::map_d(x),
        }
    }
}

impl fmt::Display for RealMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealMap::F => "F",
            RealMap::R => "R",
            RealMap::RInv => "Rinv",
            RealMap::G => "G",
            RealMap::S => "S",
            RealMap::K => "K",
            RealMap::D => "D",
        })
    }
}

impl FromStr for RealMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "f" => RealMap::F,
            "r" => RealMap::R,
            "rinv" | "r-inv" | "r^-1" => RealMap::RInv,
            "g" => RealMap::G,
            "s" => RealMap::S,
            "k" => RealMap::K,
            "d" => RealMap::D,
            _ => {
                return Err(Error::Parse {
                    what: "map",
                    input: s.to_string(),
                })
            }
        })
    }
}

/// `x, M(x), ..., M^steps(x)`.
pub fn orbit(map: RealMap, start: &Rational, steps: usize) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(start.clone());
    for _ in 0..steps {
        let next = map.apply(out.last().expect("nonempty"))?;
        out.push(next);
    }
    Ok(out)
}

pub fn iterate(map: RealMap, x: &Rational, times: usize) -> Result<Rational> {
    let mut y = x.clone();
    for _ in 0..times {
        y = map.apply(&y)?;
    }
    Ok(y)
}
