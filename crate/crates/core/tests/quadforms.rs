use mocktheta::heegner::discriminant;
use mocktheta::quadforms::{
    act, assign_coset, coset_representatives, reduce, reduced_primitive_forms, small_leading_forms, CuspClass, GL2Int,
    QForm,
};
use proptest::prelude::*;

/// `c = (k n + m)/d` for `(a, |b|)`, transcribed row by row.
const TABLE2: &[(i64, i64, i64, i64, i64)] = &[
    (1, 1, 6, 0, 1),
    (2, 1, 3, 0, 1),
    (3, 1, 2, 0, 1),
    (4, 1, 3, 0, 2),
    (4, 3, 3, 1, 2),
    (5, 1, 6, 0, 5),
    (5, 3, 6, 2, 5),
    (6, 1, 1, 0, 1),
    (6, 5, 1, 1, 1),
    (7, 1, 6, 0, 7),
    (7, 3, 6, 2, 7),
    (7, 5, 6, 6, 7),
    (8, 1, 3, 0, 4),
    (8, 3, 3, 1, 4),
    (8, 5, 3, 3, 4),
    (8, 7, 3, 6, 4),
    (9, 1, 2, 0, 3),
    (9, 5, 2, 2, 3),
    (9, 7, 2, 4, 3),
    (10, 1, 3, 0, 5),
    (10, 3, 3, 1, 5),
    (10, 7, 3, 6, 5),
    (10, 9, 3, 10, 5),
    (11, 1, 6, 0, 11),
    (11, 3, 6, 2, 11),
    (11, 5, 6, 6, 11),
    (11, 7, 6, 12, 11),
    (11, 9, 6, 20, 11),
    (12, 1, 1, 0, 2),
    (12, 5, 1, 1, 2),
    (12, 7, 1, 2, 2),
    (12, 11, 1, 5, 2),
];

/// Cells left blank in the table although `c` is integral for some `n`.
const OMITTED: &[(i64, i64, i64, i64, i64)] =
    &[(5, 5, 6, 6, 5), (7, 7, 6, 12, 7), (10, 5, 3, 3, 5), (11, 11, 6, 30, 11)];

fn table2_forms(n: i64, rows: &[&[(i64, i64, i64, i64, i64)]]) -> Vec<QForm> {
    let mut out = Vec::new();
    for &(a, b, k, m, d) in rows.iter().copied().flatten() {
        if (k * n + m) % d != 0 {
            continue;
        }
        let c = (k * n + m) / d;
        for q in [QForm::new(a, -b, c), QForm::new(a, b, c)] {
            if q.is_reduced() && q.is_primitive() {
                out.push(q);
            }
        }
    }
    out.sort_by_key(|q| (q.a, q.b));
    out.dedup();
    out
}

#[test]
fn table2_matches_reduced_forms() {
    for n in 1..=50i64 {
        let d = discriminant(n as u64);
        let from_table = table2_forms(n, &[TABLE2]);
        let completed = table2_forms(n, &[TABLE2, OMITTED]);
        assert!(completed.iter().all(|q| q.discriminant() == d), "n={n}");
        let mut reduced: Vec<QForm> = reduced_primitive_forms(d).unwrap().into_iter().filter(|q| q.a <= 12).collect();
        reduced.sort_by_key(|q| (q.a, q.b));
        assert_eq!(completed, reduced, "n={n}");
        let omitted = table2_forms(n, &[OMITTED]);
        assert!(reduced.iter().all(|q| from_table.contains(q) != omitted.contains(q)), "n={n}");
        assert_eq!(small_leading_forms(n as u64, 12), reduced, "n={n}");
    }
}

#[test]
fn level6_images_of_small_forms() {
    // every reduced form's level-6 image keeps a' ≡ 0 (mod 6) and the discriminant
    for n in 1..=50u64 {
        for q in small_leading_forms(n, 12) {
            let g = assign_coset(&q).unwrap();
            let image = act(&q, &g.gamma.inverse());
            assert_eq!(image, g.level6_form);
            assert_eq!(image.a % 6, 0, "{q} -> {image}");
            assert_eq!(image.discriminant(), q.discriminant());
        }
    }
}

fn cusp_and_shift(q: QForm) -> (CuspClass, i64, i64) {
    let g = assign_coset(&q).unwrap();
    (g.cusp, g.shift, g.zeta6_exponent())
}

#[test]
fn forms_with_ah_6() {
    for n in 6..=80i64 {
        assert_eq!(cusp_and_shift(QForm::new(1, 1, 6 * n)), (CuspClass::Zero, 1, 2));
        // γ_{1/2,-1}: the shift is read modulo the width 3
        assert_eq!(cusp_and_shift(QForm::new(2, 1, 3 * n)), (CuspClass::OneHalf, 2, 5));
        assert_eq!(cusp_and_shift(QForm::new(3, 1, 2 * n)), (CuspClass::OneThird, 0, 3));
        assert_eq!(cusp_and_shift(QForm::new(6, 1, n)), (CuspClass::Infinity, 0, 0));
    }
}

#[test]
fn forms_with_ah_12() {
    for n in 12..=80i64 {
        let (q6, q8, parity) = if n % 2 == 0 {
            (QForm::new(4, 1, 3 * n / 2), QForm::new(12, 1, n / 2), 0)
        } else {
            (QForm::new(4, -3, (3 * n + 1) / 2), QForm::new(12, -11, (n + 5) / 2), 1)
        };
        let q5 = QForm::new(2, -1, 3 * n);
        let q7 = QForm::new(6, -5, n + 1);
        if parity == 0 {
            assert_eq!(cusp_and_shift(q5), (CuspClass::Zero, 0, 3));
            assert_eq!(cusp_and_shift(q6), (CuspClass::OneHalf, 1, 1));
            assert_eq!(cusp_and_shift(q7), (CuspClass::OneThird, 0, 3));
        } else {
            assert_eq!(cusp_and_shift(q5), (CuspClass::Zero, 3, 0));
            assert_eq!(cusp_and_shift(q6), (CuspClass::OneHalf, 2, 5));
            assert_eq!(cusp_and_shift(q7), (CuspClass::OneThird, 1, 0));
        }
        assert_eq!(cusp_and_shift(q8), (CuspClass::Infinity, 0, 0));
        for q in [q5, q6, q7, q8] {
            assert_eq!(q.discriminant(), discriminant(n as u64));
            let g = assign_coset(&q).unwrap();
            assert_eq!(q.a * g.width as i64, 12, "{q}");
        }
    }
}

fn root(order: f64, k: f64) -> (f64, f64) {
    let t = 2.0 * std::f64::consts::PI * k / order;
    (t.cos(), t.sin())
}

fn weighted_sum(terms: &[(i64, i64)], order: f64) -> (f64, f64) {
    // Σ ζ₆^k ζ_order^b
    terms.iter().fold((0.0, 0.0), |(x, y), &(k, b)| {
        let (c1, s1) = root(6.0, k as f64);
        let (c2, s2) = root(order, b as f64);
        (x + c1 * c2 - s1 * s2, y + c1 * s2 + s1 * c2)
    })
}

#[test]
fn leading_roots_of_unity_cancel_or_give_i_root6() {
    let (x, y) = weighted_sum(&[(2, 1), (5, 1), (3, 1), (0, 1)], 12.0);
    assert!(x.abs() < 1e-12 && y.abs() < 1e-12);

    let r6 = 6f64.sqrt();
    let (x, y) = weighted_sum(&[(3, -1), (1, 1), (3, -5), (0, 1)], 24.0);
    assert!(x.abs() < 1e-12 && (y - r6).abs() < 1e-12);
    let (x, y) = weighted_sum(&[(0, -1), (5, -3), (0, -5), (0, -11)], 24.0);
    assert!(x.abs() < 1e-12 && (y + r6).abs() < 1e-12);
}

#[test]
fn table1_roots_by_coset() {
    let expected = |cusp: CuspClass, s: i64| -> i64 {
        match cusp {
            CuspClass::Infinity => 0,
            CuspClass::OneThird => 3 - 3 * s,
            CuspClass::OneHalf => 3 - 2 * s,
            CuspClass::Zero => 3 - s,
        }
        .rem_euclid(6)
    };
    for n in 1..=200u64 {
        for q in reduced_primitive_forms(discriminant(n)).unwrap() {
            let g = assign_coset(&q).unwrap();
            assert!(g.shift >= 0 && g.shift < g.width as i64);
            assert_eq!(g.zeta6_exponent(), expected(g.cusp, g.shift));
        }
    }
    assert_eq!(coset_representatives().len(), 12);
}

fn unimodular() -> impl Strategy<Value = GL2Int> {
    // products of a few generators S and T^k
    proptest::collection::vec((-4i64..=4, any::<bool>()), 1..5).prop_map(|steps| {
        steps.into_iter().fold(GL2Int::IDENTITY, |m, (k, s)| {
            let m = m.mul(&GL2Int::translation(k));
            if s {
                m.mul(&GL2Int::S)
            } else {
                m
            }
        })
    })
}

fn forms() -> impl Strategy<Value = QForm> {
    (1i64..40).prop_flat_map(|n| {
        let d = discriminant(n as u64);
        let forms = reduced_primitive_forms(d).unwrap();
        proptest::sample::select(forms)
    })
}

proptest! {
    #[test]
    fn act_is_a_right_action(q in forms(), s1 in unimodular(), s2 in unimodular()) {
        prop_assert_eq!(act(&q, &s1.mul(&s2)), act(&act(&q, &s1), &s2));
    }

    #[test]
    fn reduce_certifies_equivalence(q in forms(), s in unimodular()) {
        let moved = act(&q, &s);
        let (r, sigma) = reduce(&moved);
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.discriminant(), q.discriminant());
        prop_assert_eq!(act(&moved, &sigma), r);
        prop_assert_eq!(sigma.det(), 1);
        prop_assert_eq!(reduce(&r).0, r);
        prop_assert_eq!(r, q);
    }

    #[test]
    fn class_count_independent_of_scan_order(n in 1u64..300) {
        let d = discriminant(n);
        let listed = reduced_primitive_forms(d).unwrap().len();
        // scan c first, then b downwards
        let mut count = 0;
        let bound = ((-d) as f64).sqrt() as i64 + 1;
        for c in 1..=(-d) {
            for b in (-bound..=bound).rev() {
                let num = b * b - d;
                if num % (4 * c) != 0 {
                    continue;
                }
                let q = QForm::new(num / (4 * c), b, c);
                if q.a >= 1 && q.is_reduced() && q.is_primitive() {
                    count += 1;
                }
            }
        }
        prop_assert_eq!(count, listed);
    }
}

#[test]
fn every_class_gets_one_coset() {
    for n in 1..=200u64 {
        for q in reduced_primitive_forms(discriminant(n)).unwrap() {
            let g = assign_coset(&q).unwrap();
            assert!(g.gamma.det() == 1);
            assert_eq!(g.level6_form.a % 6, 0);
        }
    }
}
