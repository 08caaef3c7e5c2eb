//! Plain-integer oracles shared by the integration tests. Nothing here
//! calls into the library.
#![allow(dead_code)]

use farey_core::numbers::Rational;

pub fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn rat(p: u64, q: u64) -> Rational {
    Rational::new(p, q).unwrap()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

/// Stern-Brocot levels `1..=max`, each left to right, built from mediants
/// of neighbouring Farey fractions.
pub fn sb_levels(max: usize) -> Vec<Vec<(u64, u64)>> {
    let mut row: Vec<(u64, u64)> = vec![(0, 1), (1, 0)];
    let mut levels = Vec::new();
    for _ in 0..max {
        let mut next = Vec::with_capacity(row.len() * 2);
        let mut level = Vec::new();
        for w in row.windows(2) {
            let m = (w[0].0 + w[1].0, w[0].1 + w[1].1);
            next.push(w[0]);
            next.push(m);
            level.push(m);
        }
        next.push(*row.last().unwrap());
        row = next;
        levels.push(level);
    }
    levels
}

/// All Stern-Brocot nodes of depth `1..=max` as rationals.
pub fn nodes(max: usize) -> Vec<Rational> {
    sb_levels(max)
        .into_iter()
        .flatten()
        .map(|(p, q)| rat(p, q))
        .collect()
}

/// Permuted tree read breadth first: children of `p/q` are `p/(p+q)` and
/// `(p+q)/q`.
pub fn permuted_bfs(count: usize) -> Vec<(u64, u64)> {
    let mut out = vec![(1u64, 1u64)];
    let mut i = 0;
    while out.len() < count {
        let (p, q) = out[i];
        out.push((p, p + q));
        out.push((p + q, q));
        i += 1;
    }
    out.truncate(count);
    out
}

/// Lower Christoffel word of slope `p/q` (p ones, q zeros):
/// letter `i` is `floor(ip/n) - floor((i-1)p/n)` with `n = p + q`.
pub fn christoffel(p: u64, q: u64) -> String {
    let n = p + q;
    (1..=n)
        .map(|i| {
            if i * p / n - (i - 1) * p / n == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// Partial quotients by the Euclidean algorithm.
pub fn euclid(mut p: u64, mut q: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while q != 0 {
        out.push(p / q);
        (p, q) = (q, p % q);
    }
    out
}

/// Brute-force balance: all factors of each length have 1-counts within one.
pub fn naive_balanced(w: &[u8]) -> bool {
    (1..=w.len()).all(|n| {
        let counts: Vec<usize> = w
            .windows(n)
            .map(|f| f.iter().filter(|&&b| b == 1).count())
            .collect();
        counts.iter().max().unwrap() - counts.iter().min().unwrap() <= 1
    })
}

pub fn naive_complexity(w: &[u8], n: usize) -> usize {
    let mut set: Vec<&[u8]> = w.windows(n).collect();
    set.sort();
    set.dedup();
    set.len()
}

/// Number of ways to write `n` as a sum of powers of two, each used at
/// most twice.
pub fn hyperbinary_count(n: u64) -> u64 {
    fn go(n: u64, k: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        let p = 1u64 << k;
        if p > n {
            return 0;
        }
        (0..=2)
            .filter(|c| c * p <= n)
            .map(|c| go(n - c * p, k + 1))
            .sum()
    }
    go(n, 0)
}

/// 2x2 integer matrix product, row-major.
pub fn mat_mul(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}
