mod common;

use common::*;
use farey_core::numbers::*;
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn entries(m: &UnimodularMatrix) -> [i64; 4] {
    m.entries().map(|e| i64::try_from(e).unwrap())
}

#[test]
fn mediant_of_farey_pairs_is_between_and_adjacent() {
    let mut fracs = Vec::new();
    for q in 1..=50u64 {
        for p in 0..=50u64 {
            if gcd(p, q) == 1 {
                fracs.push((p, q));
            }
        }
    }
    let mut pairs = 0;
    for &(a, b) in &fracs {
        for &(c, d) in &fracs {
            if b as i64 * c as i64 - a as i64 * d as i64 != 1 {
                continue;
            }
            pairs += 1;
            let (x, y) = (rat(a, b), rat(c, d));
            assert!(is_farey_pair(&x, &y).unwrap());
            let m = mediant(&x, &y);
            assert!(x < m && m < y);
            assert!(is_farey_pair(&x, &m).unwrap() && is_farey_pair(&m, &y).unwrap());
        }
    }
    assert!(pairs > 1000);
}

#[test]
fn matrix_round_trip_and_product_form() {
    for levels in sb_levels(12).into_iter().skip(1) {
        for (p, q) in levels {
            let x = rat(p, q);
            let m = path_to_matrix(&sb_path(&x).unwrap());
            let [n, mm, t, s] = entries(&m);
            assert_eq!(matrix_to_rational(n, mm, t, s).unwrap(), x);

            let cf = euclid(p, q);
            let mut expect = [1, 0, 0, 1];
            for (i, &a) in cf.iter().enumerate() {
                let e = if i + 1 == cf.len() { a - 1 } else { a } as i64;
                let f = if i % 2 == 0 {
                    [1, e, 0, 1]
                } else {
                    [1, 0, e, 1]
                };
                expect = mat_mul(expect, f);
            }
            assert_eq!(entries(&m), expect, "{x}");
            assert_eq!(matrix_from_cf(&cf_expand(&x).unwrap()), m);
        }
    }
}

#[test]
fn breadth_first_reading() {
    let first: Vec<String> = (1u32..=8)
        .map(|n| rational_from_index(&BigUint::from(n)).unwrap().to_string())
        .collect();
    assert_eq!(
        first,
        ["1/1", "1/2", "2/1", "1/3", "2/3", "3/2", "3/1", "1/4"]
    );

    let mut n = 1u64;
    for (level, row) in sb_levels(12).into_iter().enumerate() {
        for (p, q) in row {
            let x = rat(p, q);
            assert_eq!(depth(&x).unwrap(), BigUint::from(level + 1));
            assert_eq!(sb_index(&x).unwrap(), BigUint::from(n));
            assert_eq!(rational_from_index(&BigUint::from(n)).unwrap(), x);
            n += 1;
        }
    }
}

#[test]
fn duals_are_inverses_mod_p_plus_q() {
    for x in nodes(12) {
        let d = dual(&x).unwrap();
        let n = x.numer() + x.denom();
        assert_eq!(d.numer() + d.denom(), n);
        assert_eq!(
            (x.numer() * d.numer()) % &n,
            BigUint::from(1u32) % &n,
            "{x}"
        );
        assert_eq!(
            (x.denom() * d.denom()) % &n,
            BigUint::from(1u32) % &n,
            "{x}"
        );
        assert_eq!(dual(&d).unwrap(), x);
        if x.is_one() {
            continue;
        }
        // parents p'/q' < p''/q'' give the dual as (p' + q')/(p'' + q'')
        let (l, rr) = parents(&x).unwrap();
        let expect = Rational::new(l.numer() + l.denom(), rr.numer() + rr.denom()).unwrap();
        assert_eq!(d, expect, "{x}");
    }
}

#[test]
fn antecedent_chain_of_65_19() {
    let mut x = r("65/19");
    let mut chain = vec![x.clone()];
    while !x.is_one() {
        x = antecedent(&x).unwrap();
        chain.push(x.clone());
    }
    let expect = [
        "65/19", "46/19", "27/19", "8/19", "8/11", "8/3", "5/3", "2/3", "2/1", "1/1",
    ];
    assert_eq!(chain, expect.map(r));
    assert!(antecedent(&r("1")).is_err());
}

#[test]
fn rejects_points_outside_the_tree() {
    for x in [r("0"), r("inf")] {
        assert!(sb_path(&x).is_err());
        assert!(sb_index(&x).is_err());
        assert!(dual(&x).is_err());
        assert!(parents(&x).is_err());
        assert!(cf_expand(&x).is_err());
    }
    assert!(rational_from_index(&BigUint::from(0u32)).is_err());
    assert!(matrix_to_rational(2, 1, 1, 2).is_err());
    assert!(matrix_to_rational(BigInt::from(1), -2, 0, 1).is_err());
}

proptest! {
    #[test]
    fn cf_round_trip(p in 1u64..1_000_000, q in 1u64..1_000_000) {
        let x = rat(p, q);
        let cf = cf_expand(&x).unwrap();
        prop_assert_eq!(cf_value(&cf), x.clone());
        let digits: Vec<u64> = cf.quotients().iter().map(|a| u64::try_from(a).unwrap()).collect();
        let raw = euclid(p / gcd(p, q), q / gcd(p, q));
        prop_assert_eq!(digits, raw);
        prop_assert_eq!(cf.to_string().parse::<CfExpansion>().unwrap(), cf);
    }

    #[test]
    fn path_index_round_trip(p in 1u64..100_000, q in 1u64..100_000) {
        let x = rat(p, q);
        let path = sb_path(&x).unwrap();
        prop_assert_eq!(path_from_cf(&cf_expand(&x).unwrap()), path.clone());
        prop_assert_eq!(BigUint::from(path.len() + 1), depth(&x).unwrap());
        let n = sb_index(&x).unwrap();
        prop_assert_eq!(path_of_index(&n).unwrap(), path.clone());
        prop_assert_eq!(rational_from_index(&n).unwrap(), x.clone());
        prop_assert_eq!(path.to_string().parse::<PathBits>().unwrap(), path);
    }

    #[test]
    fn parents_and_descendants(p in 1u64..100_000, q in 1u64..100_000) {
        let x = rat(p, q);
        if !x.is_one() {
            let (l, rr) = parents(&x).unwrap();
            prop_assert!(is_farey_pair(&l, &rr).unwrap());
            prop_assert_eq!(mediant(&l, &rr), x.clone());
        }
        let (a, b) = descendants(&x).unwrap();
        prop_assert_eq!(antecedent(&a).unwrap(), x.clone());
        prop_assert_eq!(antecedent(&b).unwrap(), x.clone());
        prop_assert_eq!(phi_inv(&phi(&x)).unwrap(), x);
    }
}
