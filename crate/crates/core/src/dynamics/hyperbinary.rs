use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Number of ways to write `n` as a sum of powers of two, each used at most
/// twice. Satisfies `b(0) = 1`, `b(2n+1) = b(n)`, `b(2n+2) = b(n) + b(n+1)`;
/// evaluated in one pass over the bits of `n + 1` (it is Stern's diatomic
/// sequence shifted by one).
pub fn hyperbinary(n: &BigUint) -> BigUint {
    let m = n + 1u32;
    // fusc(m) with (a, b) = (fusc(k+1), fusc(k)) along the bits
    let (mut a, mut b) = (BigUint::one(), BigUint::zero());
    for i in 0..m.bits() {
        if m.bit(i) {
            b += &a;
        } else {
            a += &b;
        }
    }
    debug_assert!(!b.is_zero());
    b
}
