use mocktheta::heegner::{discriminant, f_at_class, f_eval, trace_s, PrecisionPolicy};
use mocktheta::numeric::{ell, pi, BigComplex};
use mocktheta::quadforms::{
    act, assign_coset, coset_representatives, heegner_point, reduced_primitive_forms, GL2Int, QForm,
};
use proptest::prelude::*;
use rug::Float;

fn int(prec: u32, k: i64) -> BigComplex {
    BigComplex::new(Float::with_val(prec, k), Float::new(prec))
}

fn mobius(g: &GL2Int, z: &BigComplex) -> BigComplex {
    let p = z.prec();
    let num = &(z * &int(p, g.w)) + &int(p, g.x);
    let den = &(z * &int(p, g.y)) + &int(p, g.z);
    num.div(&den)
}

fn tau(q: &QForm, prec: u32) -> BigComplex {
    let h = heegner_point(q, prec).unwrap();
    BigComplex::new(h.re, h.im)
}

fn close(a: &BigComplex, b: &BigComplex, tol: f64) -> bool {
    (a - b).abs() < tol * (1.0 + b.abs().to_f64())
}

#[test]
fn transform_matches_direct_evaluation() {
    // pick z with c(z + s) + d = 1.5i so that both γz and (z + s')/h stay well inside
    let policy = PrecisionPolicy::with_bits(1, 160);
    let p = policy.working_bits;
    for (cusp, shift, gamma) in coset_representatives() {
        if gamma.y == 0 {
            continue;
        }
        let q = QForm::new(6, 1, 1);
        let g = assign_coset(&q).unwrap();
        let assignment = mocktheta::quadforms::CosetAssignment { gamma, cusp, width: cusp.width(), shift, ..g };
        let (sign, s2) = assignment.transform();
        let c = Float::with_val(p, gamma.y);
        let re = Float::with_val(p, -gamma.z) / &c;
        let im = Float::with_val(p, 1.5) / &c;
        let z = BigComplex::new(re, im);
        let direct = f_eval(&mobius(&gamma, &z), &policy).unwrap();
        let h = Float::with_val(p, cusp.width());
        let moved = (&z + &int(p, s2)).scale(&h.recip());
        let via = f_eval(&moved, &policy).unwrap();
        let via = if sign < 0 { -via } else { via };
        assert!(close(&direct, &via, 1e-40), "{cusp} {shift}: {direct} vs {via}");
    }
}

#[test]
fn leading_coefficients_at_height_8() {
    // F(γz) = ζ₆^k e(-z/h) + O(1) with ζ from the cusp table
    let policy = PrecisionPolicy::with_bits(1, 128);
    let p = policy.working_bits;
    let table1 = |label: &str, s: i64| -> i64 {
        match label {
            "inf" => 0,
            "1/3" => 3 - 3 * s,
            "1/2" => 3 - 2 * s,
            _ => 3 - s,
        }
    };
    for x in [-0.37, 0.0, 0.21] {
        for (cusp, shift, gamma) in coset_representatives() {
            let q = QForm::new(6, 1, 1);
            let base = assign_coset(&q).unwrap();
            let g = mocktheta::quadforms::CosetAssignment { gamma, cusp, width: cusp.width(), shift, ..base };
            let (sign, s2) = g.transform();
            let z = BigComplex::from_f64(p, x, 8.0);
            let h = Float::with_val(p, cusp.width());
            let w = (&z + &int(p, s2)).scale(&h.recip());
            let v = f_eval(&w, &policy).unwrap();
            let v = if sign < 0 { -v } else { v };
            let lead = z.scale(&Float::with_val(p, -1.0 / cusp.width() as f64)).e();
            let zeta = v.div(&lead);
            let k = table1(cusp.label(), shift) as f64;
            let t = std::f64::consts::PI * k / 3.0;
            let expected = BigComplex::from_f64(p, t.cos(), t.sin());
            assert!((&zeta - &expected).abs() < 1e-3, "{cusp} {shift}: {zeta}");
        }
    }
}

#[test]
fn ah6_terms_cancel() {
    for n in 6..=50u64 {
        let t = trace_s(n, &PrecisionPolicy::for_n(n)).unwrap();
        let p = t.working_bits;
        let ni = n as i64;
        let targets = [QForm::new(1, 1, 6 * ni), QForm::new(2, 1, 3 * ni), QForm::new(3, 1, 2 * ni), QForm::new(6, 1, ni)];
        let mut sum = BigComplex::zero(p);
        let mut found = 0;
        for term in t.per_class_terms.iter().filter(|c| c.u == 1 && targets.contains(&c.form)) {
            sum = &sum + &term.value;
            found += 1;
        }
        assert_eq!(found, 4, "n={n}");
        let abs_d = Float::with_val(p, -discriminant(n));
        let scale = (pi(p) * abs_d.sqrt() / 6u32).exp();
        let ratio = sum.abs() / scale;
        assert!(ratio < 1e-3, "n={n}: {ratio}");
    }
}

#[test]
fn trace_leading_term_is_i_root6() {
    let deviation = |n: u64| {
        let t = trace_s(n, &PrecisionPolicy::for_n(n)).unwrap();
        let p = t.working_bits;
        let scaled = t.s.im.clone() / (ell(p, n as f64) / 2u32).exp();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        (scaled.to_f64() - sign * 6f64.sqrt()).abs()
    };
    let early = (20..=40).map(deviation).fold(0.0, f64::max);
    let late = (180..=200).map(deviation).fold(0.0, f64::max);
    assert!(late < early, "{early} -> {late}");
    assert!(late < 0.05, "{late}");
}

#[test]
fn two_routes_agree_where_raw_point_is_high() {
    let mut checked = 0;
    for n in 1..=60u64 {
        let policy = PrecisionPolicy::for_n(n);
        let p = policy.working_bits;
        for q in reduced_primitive_forms(discriminant(n)).unwrap() {
            let g = assign_coset(&q).unwrap();
            let raw = tau(&g.level6_form, p);
            if raw.im < 0.5 {
                continue;
            }
            let direct = f_eval(&raw, &policy).unwrap();
            let routed = f_at_class(&q, &g, &policy).unwrap();
            let tol = Float::with_val(64, Float::i_exp(1, -(p as i32) / 2)).to_f64();
            assert!(close(&direct, &routed, tol), "n={n} {q}");
            checked += 1;
        }
    }
    assert!(checked > 20);
}

fn gamma0_6() -> impl Strategy<Value = GL2Int> {
    // products of T^k and the lower-triangular [[1,0],[6,1]]^m
    proptest::collection::vec((-3i64..=3, -2i64..=2), 1..4).prop_map(|steps| {
        steps.into_iter().fold(GL2Int::IDENTITY, |m, (k, j)| {
            m.mul(&GL2Int::translation(k)).mul(&GL2Int::new(1, 0, 6 * j, 1))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn heegner_points_are_compatible(n in 1u64..60, idx in 0usize..64, sigma in gamma0_6()) {
        prop_assume!(sigma.in_gamma0(6));
        let forms = reduced_primitive_forms(discriminant(n)).unwrap();
        let q = forms[idx % forms.len()];
        let level6 = assign_coset(&q).unwrap().level6_form;
        let moved = act(&level6, &sigma.inverse());
        let lhs = mobius(&sigma, &tau(&level6, 200));
        let rhs = tau(&moved, 200);
        prop_assert!(close(&lhs, &rhs, 1e-50));
    }
}
