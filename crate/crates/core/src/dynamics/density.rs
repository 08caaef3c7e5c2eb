use crate::error::{domain, Result};
use crate::numbers::Rational;

/// Maps with an explicit absolutely continuous invariant density.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensityMap {
    /// `h(x) = 1/x`, infinite mass.
    F,
    /// `h(x) = 1/(x(1+x))`.
    G,
}

fn positive(x: &Rational) -> Result<()> {
    if x.is_zero() || x.is_infinite() {
        Err(domain("density", x))
    } else {
        Ok(())
    }
}

pub fn invariant_density(map: DensityMap, x: &Rational) -> Result<Rational> {
    positive(x)?;
    Ok(match map {
        DensityMap::F => x.recip(),
        DensityMap::G => (x * &(x + &Rational::one())).recip(),
    })
}

/// Transfer operator `sum_{M(y) = x} h(y) / |M'(y)|`, evaluated exactly.
/// Both maps share the branch `y = x/(1+x)` with `|M'(y)| = (1+x)^2`; the
/// other preimage is `x+1` (slope 1) for F and `1 + 1/x` (slope `x^2`) for G.
pub fn transfer<H>(map: DensityMap, h: H, x: &Rational) -> Result<Rational>
where
    H: Fn(&Rational) -> Result<Rational>,
{
    positive(x)?;
    let one = Rational::one();
    let x1 = x + &one;
    let left = &h(&(x / &x1))? / &(&x1 * &x1);
    let right = match map {
        DensityMap::F => h(&x1)?,
        DensityMap::G => &h(&(&one + &x.recip()))? / &(x * x),
    };
    Ok(&left + &right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_points_of_transfer() {
        for s in ["1/3", "1", "5/2", "17/4"] {
            let x: Rational = s.parse().unwrap();
            for m in [DensityMap::F, DensityMap::G] {
                let h = |y: &Rational| invariant_density(m, y);
                assert_eq!(transfer(m, h, &x).unwrap(), h(&x).unwrap(), "{m:?} at {x}");
            }
        }
    }
}
