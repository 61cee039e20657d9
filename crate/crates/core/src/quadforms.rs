//! Positive definite binary quadratic forms, their reduction, class numbers,
//! and the assignment of level-one classes to `Γ₀(6)` cosets.

use std::fmt;

use rug::Float;

use crate::error::{Error, Result};
use crate::numeric::BigReal;

/// The form `aX² + bXY + cY²`.
///
/// Coefficients are machine integers: every discriminant handled here is far
/// below `2^62`, and [`act`] works in `i128` before narrowing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QForm {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        QForm { a, b, c }
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn content(&self) -> i64 {
        gcd(gcd(self.a, self.b), self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a > 0 && self.discriminant() < 0
    }

    /// `|b| ≤ a ≤ c`, with `b ≥ 0` whenever `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let QForm { a, b, c } = *self;
        b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    pub fn evaluate(&self, x: i64, y: i64) -> i128 {
        let (a, b, c, x, y) = (self.a as i128, self.b as i128, self.c as i128, x as i128, y as i128);
        a * x * x + b * x * y + c * y * y
    }
}

impl fmt::Display for QForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

/// An integral matrix `(w x; y z)` of determinant one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GL2Int {
    pub w: i64,
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl GL2Int {
    pub const IDENTITY: GL2Int = GL2Int::new(1, 0, 0, 1);
    pub const S: GL2Int = GL2Int::new(0, -1, 1, 0);

    pub const fn new(w: i64, x: i64, y: i64, z: i64) -> Self {
        GL2Int { w, x, y, z }
    }

    pub const fn translation(k: i64) -> Self {
        GL2Int::new(1, k, 0, 1)
    }

    pub fn det(&self) -> i64 {
        self.w * self.z - self.x * self.y
    }

    pub fn mul(&self, o: &GL2Int) -> GL2Int {
        GL2Int::new(
            self.w * o.w + self.x * o.y,
            self.w * o.x + self.x * o.z,
            self.y * o.w + self.z * o.y,
            self.y * o.x + self.z * o.z,
        )
    }

    pub fn inverse(&self) -> GL2Int {
        debug_assert_eq!(self.det(), 1);
        GL2Int::new(self.z, -self.x, -self.y, self.w)
    }

    pub fn in_gamma0(&self, level: i64) -> bool {
        self.y % level == 0
    }
}

impl fmt::Display for GL2Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.w, self.x, self.y, self.z)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Form action `Q ∘ σ`, i.e. `(Q∘σ)(X,Y) = Q(wX + xY, yX + zY)`.
///
/// This is a right action: `act(act(Q, σ₁), σ₂) = act(Q, σ₁σ₂)`.
pub fn act(q: &QForm, s: &GL2Int) -> QForm {
    try_act(q, s).expect("form coefficients overflow i64")
}

pub fn try_act(q: &QForm, s: &GL2Int) -> Option<QForm> {
    let (a, b, c) = (q.a as i128, q.b as i128, q.c as i128);
    let (w, x, y, z) = (s.w as i128, s.x as i128, s.y as i128, s.z as i128);
    let a2 = a * w * w + b * w * y + c * y * y;
    let b2 = 2 * a * w * x + b * (w * z + x * y) + 2 * c * y * z;
    let c2 = a * x * x + b * x * z + c * z * z;
    Some(QForm::new(a2.try_into().ok()?, b2.try_into().ok()?, c2.try_into().ok()?))
}

/// Reduces a positive definite form, returning the reduced form and `σ` with
/// `act(q, σ)` equal to it.
pub fn reduce(q: &QForm) -> (QForm, GL2Int) {
    assert!(q.is_positive_definite(), "reduce needs a positive definite form, got {q}");
    let mut cur = *q;
    let mut sigma = GL2Int::IDENTITY;
    loop {
        // translate b into (-a, a]
        let two_a = 2 * cur.a;
        let k = (cur.a - cur.b).div_euclid(two_a);
        if k != 0 {
            let t = GL2Int::translation(k);
            cur = act(&cur, &t);
            sigma = sigma.mul(&t);
        }
        if cur.a > cur.c || (cur.a == cur.c && cur.b < 0) {
            cur = act(&cur, &GL2Int::S);
            sigma = sigma.mul(&GL2Int::S);
            continue;
        }
        return (cur, sigma);
    }
}

fn check_discriminant(d: i64) -> Result<()> {
    if d >= 0 || !(d.rem_euclid(4) == 0 || d.rem_euclid(4) == 1) {
        return Err(Error::InvalidDiscriminant(d));
    }
    Ok(())
}

/// All reduced primitive forms of discriminant `d`, sorted by `(a, b)`.
pub fn reduced_primitive_forms(d: i64) -> Result<Vec<QForm>> {
    check_discriminant(d)?;
    let mut out = Vec::new();
    let abs_d = -d;
    let mut a = 1i64;
    while 3 * a * a <= abs_d {
        for b in (-a + 1)..=a {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let q = QForm::new(a, b, num / (4 * a));
            if q.is_reduced() && q.is_primitive() {
                out.push(q);
            }
        }
        a += 1;
    }
    Ok(out)
}

/// `h(D)`, the number of classes of primitive forms.
pub fn class_number(d: i64) -> Result<u64> {
    Ok(reduced_primitive_forms(d)?.len() as u64)
}

/// `H(D) = Σ_{u>0, u²|D} h(D/u²)` for `D ≡ 1 (mod 24)`, where no weighted
/// classes can occur.
pub fn hurwitz_class_number(d: i64) -> Result<u64> {
    if d >= 0 || d.rem_euclid(24) != 1 {
        return Err(Error::InvalidDiscriminant(d));
    }
    square_divisors_with_sign(d)?
        .iter()
        .map(|&(u, _)| class_number(d / (u * u)))
        .sum()
}

/// `ε(u)` for `u` a unit mod 12: `+1` if `u ≡ 1, 7` and `-1` if `u ≡ 5, 11`.
pub fn genus_sign(u: i64) -> Option<i32> {
    match u.rem_euclid(12) {
        1 | 7 => Some(1),
        5 | 11 => Some(-1),
        _ => None,
    }
}

/// Every `u > 0` with `u² | D`, paired with `ε(u)`.
pub fn square_divisors_with_sign(d: i64) -> Result<Vec<(i64, i32)>> {
    check_discriminant(d)?;
    let abs_d = -d;
    let mut out = Vec::new();
    let mut u = 1i64;
    while u * u <= abs_d {
        if abs_d % (u * u) == 0 {
            let sign = genus_sign(u).ok_or(Error::NonUnitSquareDivisor { d, u })?;
            out.push((u, sign));
        }
        u += 1;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CuspClass {
    Infinity,
    OneThird,
    OneHalf,
    Zero,
}

impl CuspClass {
    /// Width of the cusp of `Γ₀(6)`.
    pub fn width(self) -> u32 {
        match self {
            CuspClass::Infinity => 1,
            CuspClass::OneThird => 2,
            CuspClass::OneHalf => 3,
            CuspClass::Zero => 6,
        }
    }

    /// Atkin–Lehner eigenvalue of `F` at the matching involution.
    pub fn beta(self) -> i32 {
        match self {
            CuspClass::Infinity | CuspClass::OneThird => 1,
            CuspClass::OneHalf | CuspClass::Zero => -1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CuspClass::Infinity => "inf",
            CuspClass::OneThird => "1/3",
            CuspClass::OneHalf => "1/2",
            CuspClass::Zero => "0",
        }
    }
}

impl fmt::Display for CuspClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The twelve right coset representatives of `Γ₀(6)` in `SL₂(ℤ)`, labelled by
/// cusp and translation parameter.
pub fn coset_representatives() -> [(CuspClass, i64, GL2Int); 12] {
    let t = GL2Int::translation;
    let third = GL2Int::new(1, 0, 3, 1);
    let half = GL2Int::new(1, 1, 2, 3);
    [
        (CuspClass::Infinity, 0, GL2Int::IDENTITY),
        (CuspClass::OneThird, 0, third.mul(&t(0))),
        (CuspClass::OneThird, 1, third.mul(&t(1))),
        (CuspClass::OneHalf, 0, half.mul(&t(0))),
        (CuspClass::OneHalf, 1, half.mul(&t(1))),
        (CuspClass::OneHalf, 2, half.mul(&t(2))),
        (CuspClass::Zero, 0, GL2Int::S.mul(&t(0))),
        (CuspClass::Zero, 1, GL2Int::S.mul(&t(1))),
        (CuspClass::Zero, 2, GL2Int::S.mul(&t(2))),
        (CuspClass::Zero, 3, GL2Int::S.mul(&t(3))),
        (CuspClass::Zero, 4, GL2Int::S.mul(&t(4))),
        (CuspClass::Zero, 5, GL2Int::S.mul(&t(5))),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetAssignment {
    pub gamma: GL2Int,
    pub cusp: CuspClass,
    pub width: u32,
    /// Translation parameter `r`, `s` or `t`, in `0..width`.
    pub shift: i64,
    /// The level-6 representative `act(Q, γ⁻¹)`.
    pub level6_form: QForm,
}

impl CosetAssignment {
    /// Sign and translation `(±, shift')` with `F(γ τ) = ± F((τ + shift')/width)`.
    pub fn transform(&self) -> (i32, i64) {
        match self.cusp {
            CuspClass::Infinity => (1, 0),
            CuspClass::OneThird => (1, self.shift + 1),
            CuspClass::OneHalf => (-1, self.shift),
            CuspClass::Zero => (-1, self.shift),
        }
    }

    /// `k` in `0..6` with `F(γ z) = ζ₆^k e(-z/width) + O(1)` as `Im z → ∞`.
    pub fn zeta6_exponent(&self) -> i64 {
        let k = match self.cusp {
            CuspClass::Infinity => 0,
            CuspClass::OneThird => 3 - 3 * self.shift,
            CuspClass::OneHalf => 3 - 2 * self.shift,
            CuspClass::Zero => 3 - self.shift,
        };
        k.rem_euclid(6)
    }
}

/// Reduced primitive forms `[a, b, (b² + 24n - 1)/(4a)]` of discriminant
/// `1 - 24n` with `a ≤ a_max`, sorted by `(a, b)`.
pub fn small_leading_forms(n: u64, a_max: i64) -> Vec<QForm> {
    let shift = 24 * n as i64 - 1;
    let mut out = Vec::new();
    for a in 1..=a_max {
        for b in (-a..=a).filter(|b| b.rem_euclid(2) == 1) {
            let num = b * b + shift;
            if num % (4 * a) == 0 {
                let q = QForm::new(a, b, num / (4 * a));
                if q.is_reduced() && q.is_primitive() {
                    out.push(q);
                }
            }
        }
    }
    out
}

/// Finds the unique coset representative `γ` for which `act(q, γ⁻¹)` has
/// `6 | a` and `b ≡ 1 (mod 12)`.
pub fn assign_coset(q: &QForm) -> Result<CosetAssignment> {
    let d = q.discriminant();
    if d >= 0 || d.rem_euclid(24) != 1 {
        return Err(Error::InvalidDiscriminant(d));
    }
    let mut found = None;
    let mut matches = 0;
    for (cusp, shift, gamma) in coset_representatives() {
        let image = act(q, &gamma.inverse());
        if image.a.rem_euclid(6) == 0 && image.b.rem_euclid(12) == 1 {
            matches += 1;
            found = Some(CosetAssignment { gamma, cusp, width: cusp.width(), shift, level6_form: image });
        }
    }
    match (matches, found) {
        (1, Some(a)) => Ok(a),
        _ => Err(Error::CosetUniqueness { form: *q, matches }),
    }
}

#[derive(Clone, Debug)]
pub struct HeegnerPoint {
    pub re: BigReal,
    pub im: BigReal,
    pub source: QForm,
}

pub const MIN_HEEGNER_PRECISION: u32 = 32;

/// The root `τ_Q = (-b + sqrt(D))/(2a)` in the upper half-plane.
pub fn heegner_point(q: &QForm, precision: u32) -> Result<HeegnerPoint> {
    if precision < MIN_HEEGNER_PRECISION {
        return Err(Error::PrecisionTooLow(precision));
    }
    if !q.is_positive_definite() {
        return Err(Error::InvalidDiscriminant(q.discriminant()));
    }
    let two_a = 2 * q.a;
    let re = Float::with_val(precision, -q.b) / two_a;
    let im = Float::with_val(precision, -q.discriminant()).sqrt() / two_a;
    Ok(HeegnerPoint { re, im, source: *q })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_action() {
        let q = QForm::new(1, 1, 6);
        assert_eq!(act(&q, &GL2Int::IDENTITY), q);
    }

    #[test]
    fn action_preserves_discriminant() {
        let q = act(&QForm::new(1, 1, 6), &GL2Int::new(1, 0, 3, 1));
        assert_eq!(q.discriminant(), -23);
        assert_eq!(q, QForm::new(1 + 3 + 54, 1 + 36, 6));
    }

    #[test]
    fn reduction_examples() {
        let (r, s) = reduce(&QForm::new(1, 1, 6));
        assert_eq!((r, s), (QForm::new(1, 1, 6), GL2Int::IDENTITY));
        let (r, s) = reduce(&QForm::new(6, 1, 1));
        assert_eq!(r, QForm::new(1, 1, 6));
        assert_eq!(act(&QForm::new(6, 1, 1), &s), r);
        let (r, _) = reduce(&QForm::new(12, 13, 4));
        assert_eq!(r.discriminant(), -23);
        assert!(r.is_reduced());
    }

    #[test]
    fn forms_of_small_discriminants() {
        assert_eq!(
            reduced_primitive_forms(-23).unwrap(),
            vec![QForm::new(1, 1, 6), QForm::new(2, -1, 3), QForm::new(2, 1, 3)]
        );
        assert_eq!(reduced_primitive_forms(-4).unwrap(), vec![QForm::new(1, 0, 1)]);
        assert_eq!(class_number(-575).unwrap(), 18);
        assert!(matches!(reduced_primitive_forms(-5), Err(Error::InvalidDiscriminant(-5))));
        assert!(reduced_primitive_forms(5).is_err());
    }

    #[test]
    fn hurwitz_numbers() {
        assert_eq!(hurwitz_class_number(-23).unwrap(), 3);
        assert_eq!(
            hurwitz_class_number(-575).unwrap(),
            class_number(-575).unwrap() + class_number(-23).unwrap()
        );
        assert!(hurwitz_class_number(-20).is_err());
    }

    #[test]
    fn square_divisor_signs() {
        assert_eq!(square_divisors_with_sign(-23).unwrap(), vec![(1, 1)]);
        assert_eq!(square_divisors_with_sign(-575).unwrap(), vec![(1, 1), (5, -1)]);
        assert_eq!(square_divisors_with_sign(-1079).unwrap(), vec![(1, 1)]);
        // 2² | -4·13 but 2 is not a unit mod 12
        assert!(matches!(square_divisors_with_sign(-52), Err(Error::NonUnitSquareDivisor { u: 2, .. })));
    }

    #[test]
    fn coset_representatives_are_unimodular() {
        let reps = coset_representatives();
        for (_, _, g) in reps {
            assert_eq!(g.det(), 1);
        }
        // pairwise distinct modulo Γ₀(6)
        for i in 0..12 {
            for j in 0..12 {
                let q = reps[i].2.mul(&reps[j].2.inverse());
                assert_eq!(q.in_gamma0(6), i == j, "{i} {j}");
            }
        }
    }

    #[test]
    fn coset_examples() {
        let n = 1;
        let a = assign_coset(&QForm::new(1, 1, 6 * n)).unwrap();
        assert_eq!((a.cusp, a.shift), (CuspClass::Zero, 1));
        assert_eq!(a.level6_form, QForm::new(6, 1, 1));
        let a = assign_coset(&QForm::new(6, 1, 7)).unwrap();
        assert_eq!(a.cusp, CuspClass::Infinity);
        assert_eq!(a.gamma, GL2Int::IDENTITY);
    }

    #[test]
    fn each_class_has_one_coset() {
        for d in [-23, -47, -71, -95, -575] {
            for q in reduced_primitive_forms(d).unwrap() {
                let a = assign_coset(&q).unwrap();
                assert_eq!(a.level6_form.a % 6, 0);
                assert_eq!(a.level6_form.b.rem_euclid(12), 1);
                assert_eq!(a.level6_form.discriminant(), d);
            }
        }
    }

    #[test]
    fn heegner_points() {
        let p = heegner_point(&QForm::new(1, 0, 1), 64).unwrap();
        assert_eq!(p.re, 0);
        assert_eq!(p.im, 1);
        let p = heegner_point(&QForm::new(1, 1, 6), 128).unwrap();
        assert_eq!(p.re.to_f64(), -0.5);
        assert!((p.im.to_f64() - 2.397916).abs() < 1e-6);
        assert!(matches!(heegner_point(&QForm::new(1, 1, 6), 16), Err(Error::PrecisionTooLow(16))));
    }
}
