use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::numbers::{mediant, Rational, UnimodularMatrix};

fn big(r: &Rational) -> BigRational {
    BigRational::new(r.numer().clone().into(), r.denom().clone().into())
}

fn ser_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    if r.is_integer() {
        s.collect_str(&format!("{}/1", r.numer()))
    } else {
        s.collect_str(r)
    }
}

/// The Ford circle tangent to the real line at `p/q`, of diameter `1/q^2`.
/// At `1/0` it degenerates to the horizontal line `y = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FordCircle {
    touch: Rational,
}

pub fn ford_circle(x: &Rational) -> FordCircle {
    FordCircle { touch: x.clone() }
}

impl FordCircle {
    pub fn touch(&self) -> &Rational {
        &self.touch
    }

    pub fn is_line(&self) -> bool {
        self.touch.is_infinite()
    }

    /// `1/(2q^2)`; `None` for the line.
    pub fn radius(&self) -> Option<Rational> {
        if self.is_line() {
            return None;
        }
        let q = self.touch.denom();
        Some(Rational::new(1u32, q * q * 2u32).expect("positive"))
    }

    /// `(p/q, 1/(2q^2))`; `None` for the line.
    pub fn center(&self) -> Option<(Rational, Rational)> {
        self.radius().map(|r| (self.touch.clone(), r))
    }

    /// Whether `(x, y)` lies on the circle (or on the line `y = 1`).
    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        match self.center() {
            None => y.is_one(),
            Some((cx, r)) => {
                let (cx, r) = (big(&cx), big(&r));
                let dx = x - cx;
                let dy = y - &r;
                &dx * &dx + &dy * &dy == &r * &r
            }
        }
    }
}

/// `|p'q - pq'|` for the two touch points.
fn cross(a: &Rational, b: &Rational) -> BigInt {
    let l = BigInt::from(b.numer() * a.denom());
    let r = BigInt::from(a.numer() * b.denom());
    (l - r).abs()
}

/// Distinct Ford circles either touch (`|p'q - pq'| = 1`) or are disjoint.
pub fn are_tangent(a: &FordCircle, b: &FordCircle) -> Result<bool> {
    if a.touch == b.touch {
        return Err(Error::IdenticalCircles);
    }
    Ok(cross(&a.touch, &b.touch).is_one())
}

/// For touch points `a < b < c`: whether the three circles are pairwise
/// tangent, which happens exactly when `b` is the mediant of the tangent
/// pair `a`, `c`.
pub fn three_tangent(a: &FordCircle, b: &FordCircle, c: &FordCircle) -> Result<bool> {
    for (l, r) in [(a, b), (b, c)] {
        if l.touch >= r.touch {
            return Err(Error::Order {
                left: l.touch.to_string(),
                right: r.touch.to_string(),
            });
        }
    }
    Ok(are_tangent(a, c)? && mediant(&a.touch, &c.touch) == b.touch)
}

/// A point `z = x + iy` of the upper half plane together with the bottom
/// row `(c, d)` of a matrix carrying `i` to it; the direction angle
/// `-2 arg(d + ic)` is only evaluated in floating point on request.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentPoint {
    #[serde(serialize_with = "ser_ratio")]
    pub x: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub y: BigRational,
    #[serde(skip)]
    pub c: BigInt,
    #[serde(skip)]
    pub d: BigInt,
}

impl TangentPoint {
    pub fn theta(&self) -> f64 {
        let c = self.c.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        -2.0 * c.atan2(d)
    }

    /// Same point of the half plane, ignoring direction.
    pub fn same_point(&self, other: &TangentPoint) -> bool {
        self.x == other.x && self.y == other.y
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// `X(i) = ((ac + bd) + i) / (c^2 + d^2)` for `X = (a b; c d)`.
pub fn matrix_tangent_point(x: &UnimodularMatrix) -> TangentPoint {
    let [a, b, c, d] = x.entries();
    let den = c * c + d * d;
    TangentPoint {
        x: BigRational::new(a * c + b * d, den.clone()),
        y: BigRational::new(BigInt::one(), den),
        c: c.clone(),
        d: d.clone(),
    }
}

/// The point where two tangent Ford circles `a/b < c/d` touch:
/// `((ab + cd)/(b^2 + d^2), 1/(b^2 + d^2))`.
pub fn tangency_point(l: &FordCircle, r: &FordCircle) -> Result<(BigRational, BigRational)> {
    if !are_tangent(l, r)? {
        return Err(domain(
            "tangency_point",
            format!("{} and {}", l.touch, r.touch),
        ));
    }
    let (a, b) = (
        BigInt::from(l.touch.numer().clone()),
        BigInt::from(l.touch.denom().clone()),
    );
    let (c, d) = (
        BigInt::from(r.touch.numer().clone()),
        BigInt::from(r.touch.denom().clone()),
    );
    let den = &b * &b + &d * &d;
    Ok((
        BigRational::new(a * b + c * d, den.clone()),
        BigRational::new(BigInt::one(), den),
    ))
}

/// Endpoints `(u, w)` of a geodesic crossing the imaginary axis, `u < 0 < w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeodesicEndpoints {
    #[serde(serialize_with = "ser_ratio")]
    pub u: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub w: BigRational,
}

impl GeodesicEndpoints {
    pub fn new(u: BigRational, w: BigRational) -> Result<Self> {
        if !(u.is_negative() && w.is_positive()) {
            return Err(Error::NotInSection);
        }
        Ok(Self { u, w })
    }
}

/// First return to the section: `(u/(1-u), w/(1-w))` when `w < 1`,
/// `(u-1, w-1)` when `w > 1`. The second coordinate follows F.
pub fn geodesic_return(p: &GeodesicEndpoints) -> Result<GeodesicEndpoints> {
    let one = BigRational::one();
    if p.w == one {
        return Err(Error::CuspOrbit);
    }
    if p.w < one {
        GeodesicEndpoints::new(&p.u / (&one - &p.u), &p.w / (&one - &p.w))
    } else {
        GeodesicEndpoints::new(&p.u - &one, &p.w - &one)
    }
}
