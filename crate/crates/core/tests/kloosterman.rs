use mocktheta::exact_series::f_weakly_holomorphic_coeffs;
use mocktheta::kloosterman::{a_coefficient_series, b0_series, detect_plateau, kloosterman_sum, KloostermanParams};
use proptest::prelude::*;
use rug::Float;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetric_in_a_and_b(a in -300i64..300, b in -300i64..300, c in 1i64..=200) {
        let ab = kloosterman_sum(KloostermanParams { a, b, c }, 96).unwrap();
        let ba = kloosterman_sum(KloostermanParams { a: b, b: a, c }, 96).unwrap();
        prop_assert!(Float::with_val(96, &ab - &ba).abs() < 1e-20);
        // Weil-type growth: crude check that the sum stays below c
        prop_assert!(ab.to_f64().abs() <= c as f64 + 1e-9);
    }
}

#[test]
fn b0_error_shrinks_like_one_over_c() {
    let target = Float::with_val(128, -4);
    let err = |c: u64| Float::with_val(128, &b0_series(c, 128).unwrap().total - &target).abs().to_f64();
    let (e1, e2, e4) = (err(1000), err(2000), err(4000));
    assert!(e2 < e1 && e4 < e2, "{e1} {e2} {e4}");
    // c·error stays bounded
    for (c, e) in [(1000.0, e1), (2000.0, e2), (4000.0, e4)] {
        assert!(c * e < 10.0, "c={c} err={e}");
    }
}

#[test]
fn series_signs_match_exact_coefficients() {
    let f = f_weakly_holomorphic_coeffs(10).unwrap();
    for n in 1..=10u64 {
        let s = a_coefficient_series(n, 1500, 96).unwrap();
        let p = detect_plateau(&s, 0.2, 0.1);
        let exact = f.coeff(n as i64).to_f64();
        assert_eq!(p.value.signum(), exact.signum(), "n={n}");
        assert!(p.accepted, "n={n}");
    }
}
