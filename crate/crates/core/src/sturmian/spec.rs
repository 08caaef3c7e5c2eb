use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numbers::{raw_value, Rational};

type QuotientFn = Arc<dyn Fn(usize) -> Option<u64> + Send + Sync>;

/// Partial quotients `a0; a1, a2, ...` of a slope.
#[derive(Clone)]
pub enum SlopeSpec {
    /// `pre` followed by `period` repeated forever: a quadratic surd.
    Periodic { pre: Vec<u64>, period: Vec<u64> },
    /// A finite list; reading past its end is an exhaustion error.
    Finite(Vec<u64>),
    /// Quotient `i` computed on demand; `None` means exhausted.
    Func(QuotientFn),
}

impl SlopeSpec {
    pub fn periodic(pre: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidSlope("empty period".into()));
        }
        let spec = SlopeSpec::Periodic { pre, period };
        spec.validate()?;
        Ok(spec)
    }

    pub fn finite(quotients: Vec<u64>) -> Result<Self> {
        let spec = SlopeSpec::Finite(quotients);
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(usize) -> Option<u64> + Send + Sync + 'static,
    {
        SlopeSpec::Func(Arc::new(f))
    }

    /// The golden ratio `[1; 1, 1, ...]`.
    pub fn golden() -> Self {
        SlopeSpec::Periodic {
            pre: vec![],
            period: vec![1],
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = match self {
            // period entries recur at positive indices
            SlopeSpec::Periodic { pre, period } => {
                pre.iter().skip(1).chain(period).any(|&a| a == 0)
            }
            SlopeSpec::Finite(q) => q.iter().skip(1).any(|&a| a == 0),
            SlopeSpec::Func(_) => false,
        };
        if bad {
            Err(Error::InvalidSlope(format!(
                "quotients after a0 must be positive: {self}"
            )))
        } else {
            Ok(())
        }
    }

    pub fn quotient(&self, i: usize) -> Option<u64> {
        match self {
            SlopeSpec::Periodic { pre, period } => Some(if i < pre.len() {
                pre[i]
            } else {
                period[(i - pre.len()) % period.len()]
            }),
            SlopeSpec::Finite(q) => q.get(i).copied(),
            SlopeSpec::Func(f) => f(i),
        }
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self, SlopeSpec::Periodic { .. })
    }

    /// Value of `[a0; a1, ..., ak]`, or `None` if fewer than `k+1`
    /// quotients are available.
    pub fn convergent(&self, k: usize) -> Option<Rational> {
        let q: Option<Vec<BigUint>> = (0..=k)
            .map(|i| self.quotient(i).map(BigUint::from))
            .collect();
        q.map(|q| raw_value(&q))
    }

    /// The first convergent whose denominator exceeds `min_den`.
    pub fn convergent_beyond(&self, min_den: &BigUint) -> Option<Rational> {
        let mut k = 0;
        loop {
            let c = self.convergent(k)?;
            if c.denom() > min_den {
                return Some(c);
            }
            k += 1;
        }
    }

    pub fn truncate(&self, k: usize) -> Result<SlopeSpec> {
        let q: Option<Vec<u64>> = (0..=k).map(|i| self.quotient(i)).collect();
        q.map(SlopeSpec::Finite)
            .ok_or_else(|| Error::GeneratorExhausted {
                produced: k,
                needed: k + 1,
            })
    }

    fn tail_from(&self, j: usize) -> SlopeSpec {
        match self {
            SlopeSpec::Periodic { pre, period } => {
                if j <= pre.len() {
                    SlopeSpec::Periodic {
                        pre: pre[j..].to_vec(),
                        period: period.clone(),
                    }
                } else {
                    let mut p = period.clone();
                    p.rotate_left((j - pre.len()) % period.len());
                    SlopeSpec::Periodic {
                        pre: vec![],
                        period: p,
                    }
                }
            }
            SlopeSpec::Finite(q) => SlopeSpec::Finite(q.get(j..).unwrap_or(&[]).to_vec()),
            SlopeSpec::Func(f) => {
                let f = Arc::clone(f);
                SlopeSpec::Func(Arc::new(move |i| f(i + j)))
            }
        }
    }

    /// `head` followed by the quotients of `self` from index `j` on.
    fn with_head(&self, head: Vec<u64>, j: usize) -> SlopeSpec {
        match self.tail_from(j) {
            SlopeSpec::Periodic { pre, period } => {
                let mut p = head;
                p.extend(pre);
                SlopeSpec::Periodic { pre: p, period }
            }
            SlopeSpec::Finite(q) => {
                let mut p = head;
                p.extend(q);
                SlopeSpec::Finite(p)
            }
            SlopeSpec::Func(f) => {
                let n = head.len();
                SlopeSpec::Func(Arc::new(
                    move |i| if i < n { Some(head[i]) } else { f(i - n) },
                ))
            }
        }
    }

    /// Quotients of `R(x)`: `[0;a1,...] -> [1;a1-1,a2,...]` and
    /// `[a0;a1,...] -> [0;a0,1,a1-1,a2,...]`, merging the zero that appears
    /// when `a1 = 1`.
    pub fn r_image(&self) -> Result<SlopeSpec> {
        let need = |i| {
            self.quotient(i).ok_or(Error::GeneratorExhausted {
                produced: i,
                needed: i + 1,
            })
        };
        let (a0, a1) = (need(0)?, need(1)?);
        Ok(match (a0, a1) {
            (0, 1) => self.with_head(vec![1 + need(2)?], 3),
            (0, _) => self.with_head(vec![1, a1 - 1], 2),
            (_, 1) => self.with_head(vec![0, a0, 1 + need(2)?], 3),
            (_, _) => self.with_head(vec![0, a0, 1, a1 - 1], 2),
        })
    }
}

impl fmt::Display for SlopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            SlopeSpec::Periodic { pre, period } => {
                if pre.is_empty() {
                    write!(f, "({})", join(period))
                } else {
                    write!(f, "{}", pre[0])?;
                    f.write_str(";")?;
                    if pre.len() > 1 {
                        write!(f, "{},", join(&pre[1..]))?;
                    }
                    write!(f, "({})", join(period))
                }
            }
            SlopeSpec::Finite(q) => match q.split_first() {
                None => Ok(()),
                Some((a0, [])) => write!(f, "{a0}"),
                Some((a0, rest)) => write!(f, "{a0};{}", join(rest)),
            },
            SlopeSpec::Func(_) => f.write_str("<generator>"),
        }
    }
}

impl fmt::Debug for SlopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SlopeSpec({self})")
    }
}

impl FromStr for SlopeSpec {
    type Err = Error;

    /// `a0;a1,...,(p1,...,pm)`, the parenthesized tail being the period.
    /// Without parentheses the list is finite.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "slope",
            input: s.to_string(),
        };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.trim_start_matches('[').trim_end_matches(']');
        let (head, period) = match t.find('(') {
            Some(i) => {
                let body = t[i..]
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(err)?;
                (&t[..i], Some(body))
            }
            None => (t, None),
        };
        let nums = |part: &str| -> Result<Vec<u64>> {
            part.split([',', ';'])
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<u64>().map_err(|_| err()))
                .collect()
        };
        let pre = nums(head)?;
        match period {
            Some(p) => SlopeSpec::periodic(pre, nums(p)?),
            None if pre.is_empty() => Err(err()),
            None => SlopeSpec::finite(pre),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> SlopeSpec {
        s.parse().unwrap()
    }

    fn first(s: &SlopeSpec, n: usize) -> Vec<u64> {
        (0..n).map(|i| s.quotient(i).unwrap()).collect()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(first(&spec("1;(1)"), 4), [1, 1, 1, 1]);
        assert_eq!(first(&spec("0;2,(2)"), 4), [0, 2, 2, 2]);
        assert_eq!(first(&spec("(1,2)"), 5), [1, 2, 1, 2, 1]);
        assert_eq!(spec("1;(2)").to_string(), "1;(2)");
        assert_eq!(spec("0;2,(2)").to_string(), "0;2,(2)");
        assert_eq!(spec("3;7,15").to_string(), "3;7,15");
        assert!("1;()".parse::<SlopeSpec>().is_err());
        assert!("1;0,(2)".parse::<SlopeSpec>().is_err());
        assert!("x".parse::<SlopeSpec>().is_err());
    }

    #[test]
    fn convergents() {
        let g = SlopeSpec::golden();
        assert_eq!(g.convergent(4).unwrap().to_string(), "8/5");
        assert_eq!(spec("3;7,15").convergent(3), None);
        let c = spec("1;(2)")
            .convergent_beyond(&BigUint::from(1000u32))
            .unwrap();
        assert_eq!(c.to_string(), "3363/2378");
    }

    #[test]
    fn r_image_quotients() {
        // R(golden) = [0;1,2,1,1,...]
        let r = SlopeSpec::golden().r_image().unwrap();
        assert_eq!(first(&r, 6), [0, 1, 2, 1, 1, 1]);
        // R(sqrt 2) = [0;1,1,1,2,2,...] = (3 + sqrt 2)/7
        let r = spec("1;(2)").r_image().unwrap();
        assert_eq!(first(&r, 6), [0, 1, 1, 1, 2, 2]);
        let r = spec("0;(2)").r_image().unwrap();
        assert_eq!(first(&r, 4), [1, 1, 2, 2]);
        let r = spec("0;1,(3)").r_image().unwrap();
        assert_eq!(first(&r, 3), [4, 3, 3]);
    }
}
