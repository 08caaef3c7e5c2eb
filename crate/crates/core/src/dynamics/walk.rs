use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::dyadic::rho;
use crate::error::{Error, Result};
use crate::numbers::Rational;

/// Symmetric random walk on the permuted tree: from `p/q` move to
/// `p/(p+q)` or `(p+q)/q` with probability 1/2 each, starting at `1/1`.
/// Driven by ChaCha8 seeded with `seed_from_u64`.
#[derive(Clone, Debug)]
pub struct RandomWalk {
    p: BigUint,
    q: BigUint,
    step_count: u64,
    rng: ChaCha8Rng,
}

impl RandomWalk {
    pub fn new(seed: u64) -> Self {
        Self {
            p: BigUint::one(),
            q: BigUint::one(),
            step_count: 1,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// `Z_k` for the current index `k` (starting at 1).
    pub fn current(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone()).expect("positive")
    }

    pub fn step_count(&self) -> u64 {
        self.step_count
    }

    pub fn step(&mut self) {
        let s = &self.p + &self.q;
        if self.rng.random::<bool>() {
            self.p = s;
        } else {
            self.q = s;
        }
        self.step_count += 1;
    }

    fn inside(&self, a: &Rational, b: &Rational) -> bool {
        // a < p/q < b, with b possibly infinite
        let above = &self.p * a.denom() > &self.q * a.numer();
        let below = b.is_infinite() || &self.p * b.denom() < &self.q * b.numer();
        above && below
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrequencyReport {
    pub interval: (Rational, Rational),
    /// Fraction of `k = 1..=steps` with `Z_k` in the open interval.
    pub observed: f64,
    /// `rho(b) - rho(a)`.
    pub expected: f64,
    pub steps: u64,
    pub seed: u64,
}

/// Runs one walk of `steps` points and reports the visit frequency of
/// every open interval `(a, b)`.
pub fn random_walk(
    steps: u64,
    seed: u64,
    intervals: &[(Rational, Rational)],
) -> Result<Vec<FrequencyReport>> {
    if steps == 0 {
        return Err(crate::error::domain("random_walk", "steps = 0"));
    }
    for (a, b) in intervals {
        if a >= b {
            return Err(Error::EmptyInterval(a.to_string(), b.to_string()));
        }
    }
    let mut hits = vec![0u64; intervals.len()];
    let mut walk = RandomWalk::new(seed);
    for k in 1..=steps {
        for (h, (a, b)) in hits.iter_mut().zip(intervals) {
            if walk.inside(a, b) {
                *h += 1;
            }
        }
        if k < steps {
            walk.step();
        }
    }
    Ok(intervals
        .iter()
        .zip(hits)
        .map(|((a, b), h)| {
            let expected = rho(b).value().to_f64() - rho(a).value().to_f64();
            FrequencyReport {
                interval: (a.clone(), b.clone()),
                observed: h as f64 / steps as f64,
                expected,
                steps,
                seed,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn walk_moves_to_descendants() {
        let mut w = RandomWalk::new(7);
        assert_eq!(w.current(), r("1"));
        for _ in 0..20 {
            let before = w.current();
            w.step();
            let after = w.current();
            assert_eq!(crate::numbers::antecedent(&after).unwrap(), before);
        }
        assert_eq!(w.step_count(), 21);
    }

    #[test]
    fn deterministic_for_a_seed() {
        let iv = [(r("1"), r("inf"))];
        let a = random_walk(2000, 3, &iv).unwrap();
        let b = random_walk(2000, 3, &iv).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0].expected, 0.5);
    }

    #[test]
    fn rejects_empty_interval() {
        assert!(matches!(
            random_walk(10, 1, &[(r("1"), r("1"))]),
            Err(Error::EmptyInterval(..))
        ));
        assert!(random_walk(0, 1, &[]).is_err());
    }
}
