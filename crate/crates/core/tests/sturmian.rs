mod common;

use common::*;
use farey_core::sturmian::*;
use farey_core::words::{fc_word, Word};
use num_bigint::BigUint;
use proptest::prelude::*;

fn slopes() -> Vec<SlopeSpec> {
    let e = SlopeSpec::from_fn(|i| {
        Some(match i {
            0 => 2,
            i if i % 3 == 2 => 2 * (i as u64 + 1) / 3,
            _ => 1,
        })
    });
    vec![
        SlopeSpec::golden(),
        "1;(2)".parse().unwrap(),
        "1;(1,2)".parse().unwrap(),
        "0;(2,1,3)".parse().unwrap(),
        "0;1,(4)".parse().unwrap(),
        "3;(1,1,5)".parse().unwrap(),
        e,
    ]
}

#[test]
fn convergents_give_prefixes() {
    for s in slopes() {
        let long = sturmian_prefix(&s, 5000).unwrap();
        for k in 1..=12 {
            let c = s.convergent(k).unwrap();
            let fw = fc_word(&c);
            if fw.len() < 3 {
                continue;
            }
            let expect = Word::new(vec![0]).unwrap().concat(&fw.central().unwrap());
            let n = expect.len();
            if n > long.symbols.len() {
                break;
            }
            assert_eq!(
                &long.symbols.symbols()[..n],
                expect.symbols(),
                "{s} k = {k}"
            );
            let short = sturmian_prefix(&s.truncate(k).unwrap(), n).unwrap();
            assert_eq!(short.symbols, expect, "{s} truncated at {k}");
        }
    }
}

#[test]
fn prefixes_are_balanced_with_complexity_n_plus_one() {
    for s in slopes() {
        let w = sturmian_prefix(&s, 3000).unwrap().symbols;
        assert!(is_balanced(&w), "{s}");
        for n in 1..=20 {
            assert_eq!(factor_complexity(&w, n).unwrap(), n + 1, "{s} n = {n}");
        }
        let t = apply_t_stream(&sturmian_prefix(&s, 3000).unwrap()).unwrap();
        assert!(is_balanced(&t.symbols), "T image of {s}");
    }
}

#[test]
fn t_stream_matches_prefix_of_r_image() {
    for s in slopes() {
        let t = apply_t_stream(&sturmian_prefix(&s, 4000).unwrap()).unwrap();
        let n = t.guaranteed_length;
        let direct = sturmian_prefix(&t.slope, n).unwrap();
        assert_eq!(t.symbols, direct.symbols, "{s}");
        let x = s
            .r_image()
            .unwrap()
            .convergent_beyond(&BigUint::from(1u64 << 40))
            .unwrap();
        let est = slope_estimate(&t.symbols).unwrap();
        let bound = 2.0 / (n as f64).sqrt();
        assert!((est.to_f64() - x.to_f64()).abs() <= bound, "{s}");
    }
}

#[test]
fn slope_syntax_round_trips() {
    for text in ["1;(2)", "0;2,(2)", "(1)", "3;7,15", "0;1,(4)"] {
        let s: SlopeSpec = text.parse().unwrap();
        assert_eq!(s.to_string(), text);
    }
    assert!("0;0,(1)".parse::<SlopeSpec>().is_err());
    assert!("1;()".parse::<SlopeSpec>().is_err());
    assert!(sturmian_prefix(&"3;7,15".parse().unwrap(), 1000).is_err());
    assert!(sturmian_prefix(&SlopeSpec::golden(), 0).is_err());
}

#[test]
fn r_image_of_golden_mean() {
    // R(x) = 1/(3 - x) for 1 < x < 2
    let r = SlopeSpec::golden().r_image().unwrap();
    assert_eq!(r.to_string(), "0;1,2,(1)");
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let got = r.convergent(20).unwrap();
    assert!((got.to_f64() - 1.0 / (3.0 - phi)).abs() < 1e-8);
}

fn word(bits: &[u8]) -> Word {
    Word::new(bits.to_vec()).unwrap()
}

proptest! {
    #[test]
    fn balance_matches_brute_force(bits in proptest::collection::vec(0u8..2, 0..40)) {
        prop_assert_eq!(is_balanced(&word(&bits)), naive_balanced(&bits));
    }

    #[test]
    fn complexity_matches_brute_force(bits in proptest::collection::vec(0u8..2, 1..60), n in 1usize..8) {
        if n <= bits.len() {
            prop_assert_eq!(factor_complexity(&word(&bits), n).unwrap(), naive_complexity(&bits, n));
        } else {
            prop_assert!(factor_complexity(&word(&bits), n).is_err());
        }
    }

    #[test]
    fn christoffel_words_are_balanced(p in 1u64..200, q in 1u64..200) {
        let g = gcd(p, q);
        let bits: Vec<u8> = christoffel(p / g, q / g).bytes().map(|b| b - b'0').collect();
        prop_assert!(is_balanced(&word(&bits)));
    }
}
