//! Binary quadratic forms `ax^2 + bxy + cy^2`: unimodular substitutions,
//! continued fraction reduction of indefinite forms, automorphs and the
//! Pell equation `t^2 - D u^2 = 4`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::contfrac::{iteration_guard, QuadraticSurd};
use crate::error::{domain, internal, Result};
use crate::intcore::{big, gcd, is_square, isqrt};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormClass {
    Indefinite,
    PositiveDefinite,
    NegativeDefinite,
    /// `D` is a perfect square, so the form splits into linear factors.
    DegenerateSquare,
}

impl Form {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        Form {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - big(4) * &self.a * &self.c
    }

    pub fn classify(&self) -> Result<FormClass> {
        if self.is_zero() {
            return domain("the zero form has no type");
        }
        let d = self.discriminant();
        Ok(if d.is_negative() {
            if self.a.is_positive() {
                FormClass::PositiveDefinite
            } else {
                FormClass::NegativeDefinite
            }
        } else if is_square(&d) {
            FormClass::DegenerateSquare
        } else {
            FormClass::Indefinite
        })
    }

    pub fn is_primitive(&self) -> bool {
        gcd(&gcd(&self.a, &self.b), &self.c).is_one()
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// `F_- = (-a, b, -c)`.
    pub fn conj(&self) -> Form {
        Form::new(-&self.a, self.b.clone(), -&self.c)
    }

    /// `-F`.
    pub fn neg(&self) -> Form {
        Form::new(-&self.a, -&self.b, -&self.c)
    }

    /// `F^A(x, y) = F(αx + βy, γx + δy)`.
    pub fn transform(&self, m: &Mat2) -> Result<Form> {
        if !m.det().abs().is_one() {
            return domain(format!("{m} is not unimodular"));
        }
        Ok(self.transform_unchecked(m))
    }

    fn transform_unchecked(&self, m: &Mat2) -> Form {
        let Form { a, b, c } = self;
        let (al, be, ga, de) = (&m.alpha, &m.beta, &m.gamma, &m.delta);
        Form::new(
            self.eval(al, ga),
            big(2) * a * al * be + b * (al * de + be * ga) + big(2) * c * ga * de,
            self.eval(be, de),
        )
    }

    fn require_indefinite(&self) -> Result<BigInt> {
        match self.classify()? {
            FormClass::Indefinite => Ok(self.discriminant()),
            other => domain(format!("{self} is not indefinite ({other:?})")),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// An integer 2x2 matrix `[[α, β], [γ, δ]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
    pub delta: BigInt,
}

impl Mat2 {
    pub fn new(
        alpha: impl Into<BigInt>,
        beta: impl Into<BigInt>,
        gamma: impl Into<BigInt>,
        delta: impl Into<BigInt>,
    ) -> Self {
        Mat2 {
            alpha: alpha.into(),
            beta: beta.into(),
            gamma: gamma.into(),
            delta: delta.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.alpha * &self.delta - &self.beta * &self.gamma
    }

    pub fn trace(&self) -> BigInt {
        &self.alpha + &self.delta
    }

    pub fn neg(&self) -> Mat2 {
        Mat2::new(-&self.alpha, -&self.beta, -&self.gamma, -&self.delta)
    }

    /// The inverse of a matrix with determinant ±1.
    pub fn inverse(&self) -> Result<Mat2> {
        let d = self.det();
        if !d.abs().is_one() {
            return domain(format!("{self} is not unimodular"));
        }
        Ok(Mat2::new(
            &self.delta * &d,
            -&self.beta * &d,
            -&self.gamma * &d,
            &self.alpha * &d,
        ))
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.alpha * &o.alpha + &self.beta * &o.gamma,
            &self.alpha * &o.beta + &self.beta * &o.delta,
            &self.gamma * &o.alpha + &self.delta * &o.gamma,
            &self.gamma * &o.beta + &self.delta * &o.delta,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.alpha, self.beta, self.gamma, self.delta
        )
    }
}

/// `X(F) = (sqrt(D) - b) / 2a`.
pub fn surd_of_form(form: &Form) -> Result<QuadraticSurd> {
    let d = form.require_indefinite()?;
    QuadraticSurd::new(form.a.clone(), form.b.clone(), d)
}

/// `q = floor(1/X(G))` and the K-successor `G' = -G^[[0,1],[1,q]]`.
pub fn k_successor(g: &Form) -> Result<(BigInt, Form)> {
    let d = g.require_indefinite()?;
    let f = isqrt(&d)?;
    Ok(k_step(g, &f))
}

fn k_step(g: &Form, f: &BigInt) -> (BigInt, Form) {
    let Form { a, b, c } = g;
    let q = if c.is_negative() {
        (f + b).div_floor(&(big(-2) * c))
    } else {
        (-(f + b + 1u32)).div_floor(&(big(2) * c))
    };
    let next = Form::new(-c, big(-2) * c * &q - b, &q * (-c * &q - b) - a);
    (q, next)
}

fn k_reduced_with(g: &Form, f: &BigInt) -> bool {
    let Form { a, b, c } = g;
    if !a.is_positive() || !b.is_positive() {
        return false;
    }
    let m = (big(2) * a).min(big(2) * c.abs());
    &(f - m) < b && b <= f
}

pub fn is_k_reduced(g: &Form) -> Result<bool> {
    let d = g.require_indefinite()?;
    let f = isqrt(&d)?;
    let def = k_reduced_with(g, &f);
    let Form { a, b, c } = g;
    let ii = a.is_positive() && c.is_negative() && (a + c).abs() < *b;
    let iii = a.is_positive() && b.is_positive() && c.is_negative() && (a - c) <= f;
    if def != ii || def != iii {
        return Err(internal(format!("K-reduction criteria disagree on {g}")));
    }
    Ok(def)
}

pub fn is_reduced(g: &Form) -> Result<bool> {
    let d = g.require_indefinite()?;
    let f = isqrt(&d)?;
    let def = k_reduced_with(g, &f) || k_reduced_with(&g.conj(), &f);
    let Form { a, b, c } = g;
    let ac_neg = (a * c).is_negative();
    let ii = ac_neg && (a + c).abs() < *b;
    let iii = b.is_positive() && ac_neg && (a.abs() + c.abs()) <= f;
    if def != ii || def != iii {
        return Err(internal(format!("reduction criteria disagree on {g}")));
    }
    Ok(def)
}

/// One line of the reduction scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRow {
    pub j: usize,
    pub g: Form,
    pub q: BigInt,
    pub f: Form,
    pub t: Mat2,
    pub a: Mat2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub form: Form,
    pub discriminant: BigInt,
    pub q0: BigInt,
    /// Rows `j = 1 ..= period_start + L'`, where `L'` is the smallest even
    /// multiple of the period length.
    pub rows: Vec<ReductionRow>,
    pub period_start: usize,
    pub period_length: usize,
}

impl ReductionReport {
    pub fn row(&self, j: usize) -> &ReductionRow {
        &self.rows[j - 1]
    }

    /// The K-reduced forms of the period, starting at `G_{j*}`.
    pub fn period(&self) -> Vec<&Form> {
        (0..self.period_length)
            .map(|k| &self.row(self.period_start + k).g)
            .collect()
    }

    /// The partial quotients `q_0, q_1, ...` of `X(F)` as far as the table
    /// goes.
    pub fn quotients(&self) -> Vec<BigInt> {
        std::iter::once(self.q0.clone())
            .chain(self.rows.iter().map(|r| r.q.clone()))
            .collect()
    }

    fn even_length(&self) -> usize {
        if self.period_length % 2 == 0 {
            self.period_length
        } else {
            2 * self.period_length
        }
    }

    /// `T_{j*+L'} T_{j*}^{-1}`.
    pub fn automorphism(&self) -> Mat2 {
        let start = &self.row(self.period_start).t;
        let end = &self.row(self.period_start + self.even_length()).t;
        end * &start.inverse().expect("T_j has determinant 1")
    }
}

fn sign(j: usize) -> BigInt {
    if j % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Reduces an indefinite form through the chain of K-successors until the
/// period of K-reduced forms closes, recording `G_j, q_j, F_j, T_j, A_j`.
pub fn reduce(form: &Form) -> Result<ReductionReport> {
    let d = form.require_indefinite()?;
    let f = isqrt(&d)?;
    let Form { a, b, c } = form;
    let q0 = if a.is_positive() {
        (&f - b).div_floor(&(big(2) * a))
    } else {
        (b - &f - 1u32).div_floor(&(big(-2) * a))
    };
    let mut g = Form::new(a.clone(), b + big(2) * a * &q0, c + &q0 * (b + a * &q0));
    let mut t = Mat2::new(1, q0.clone(), 0, 1);

    let guard = iteration_guard(a, b, c, &d);
    let mut seen: HashMap<Form, usize> = HashMap::new();
    let mut rows: Vec<ReductionRow> = Vec::new();
    let mut period: Option<(usize, usize)> = None;
    let mut j = 1usize;
    loop {
        if period.is_none() {
            if let Some(&j0) = seen.get(&g) {
                let len = j - j0;
                period = Some((j0, len));
            } else {
                seen.insert(g.clone(), j);
            }
        }
        if let Some((j0, len)) = period {
            let even = if len % 2 == 0 { len } else { 2 * len };
            if j > j0 + even {
                break;
            }
        }
        if j as u64 > guard {
            return Err(internal(format!(
                "reduction of {form} did not become periodic within {guard} steps"
            )));
        }
        let (q, next) = k_step(&g, &f);
        let s = -sign(j);
        let fj = Form::new(&s * &g.a, g.b.clone(), &s * &g.c);
        if form.transform_unchecked(&t) != fj {
            return Err(internal(format!("row {j}: F^T differs from F_j = {fj}")));
        }
        let step = Mat2::new(0, s.clone(), -s, q.clone());
        if let Some(prev) = rows.last() {
            if g.b.abs() > f && prev.g.b.abs() > f {
                let before = (&prev.g.a + &prev.g.c).abs();
                let after = (&g.a + &g.c).abs();
                if big(2) * after >= before {
                    return Err(internal(format!("row {j}: |a + c| failed to halve")));
                }
            }
        }
        let t_next = &t * &step;
        rows.push(ReductionRow {
            j,
            g: g.clone(),
            q,
            f: fj,
            t: t.clone(),
            a: step,
        });
        g = next;
        t = t_next;
        j += 1;
    }
    let (period_start, period_length) = period.expect("loop exits only after a period");
    for r in &rows[period_start - 1..] {
        if !k_reduced_with(&r.g, &f) {
            return Err(internal(format!("period form {} is not K-reduced", r.g)));
        }
    }
    Ok(ReductionReport {
        form: form.clone(),
        discriminant: d,
        q0,
        rows,
        period_start,
        period_length,
    })
}

/// A nontrivial proper automorph of a primitive indefinite form, read off
/// one (even) run through its period.
pub fn automorphism_from_period(form: &Form) -> Result<Mat2> {
    if !form.is_primitive() {
        return domain(format!("{form} is not primitive"));
    }
    let report = reduce(form)?;
    let m = report.automorphism();
    if form.transform_unchecked(&m) != *form || !m.det().is_one() {
        return Err(internal(format!("{m} is not an automorph of {form}")));
    }
    Ok(m)
}

fn require_pell_discriminant(d: &BigInt) -> Result<()> {
    let r = d.mod_floor(&big(4));
    if !(r.is_zero() || r.is_one()) {
        return domain(format!("{d} is not 0 or 1 modulo 4"));
    }
    if is_square(d) {
        return domain(format!("{d} is a perfect square"));
    }
    Ok(())
}

/// The principal form of discriminant `D`.
pub fn hauptform(d: &BigInt) -> Result<Form> {
    require_pell_discriminant(d)?;
    Ok(if d.mod_floor(&big(4)).is_zero() {
        Form::new(1, 0, -(d / 4u32))
    } else {
        Form::new(1, 1, -((d - 1u32) / 4u32))
    })
}

/// Scans `u = 1, 2, ..., bound` for the smallest solution of
/// `t^2 - D u^2 = 4` with `t, u > 0`.
pub fn pell_scan(d: &BigInt, bound: u64) -> Option<(BigInt, BigInt)> {
    (1..=bound).find_map(|u| {
        let u = BigInt::from(u);
        let t2 = d * &u * &u + 4u32;
        is_square(&t2).then(|| (t2.sqrt(), u))
    })
}

/// Fundamental solutions up to this size of `u` are double checked by
/// exhaustive search.
const PELL_SCAN_LIMIT: u64 = 10_000;

/// The smallest positive solution of `t^2 - D u^2 = 4`, for `D > 0`
/// nonsquare and `D = 0, 1 (mod 4)`.
pub fn pell(d: &BigInt) -> Result<(BigInt, BigInt)> {
    if !d.is_positive() {
        return domain(format!("Pell discriminant must be positive, got {d}"));
    }
    let h = hauptform(d)?;
    let mut m = automorphism_from_period(&h)?;
    if m.trace().is_negative() {
        m = m.neg();
    }
    let t = m.trace();
    let u = m.gamma.abs();
    if &t * &t - d * &u * &u != big(4) || u.is_zero() {
        return Err(internal(format!(
            "{m} does not give a Pell solution for {d}"
        )));
    }
    if u <= BigInt::from(PELL_SCAN_LIMIT) {
        let limit: u64 = (&u).try_into().expect("checked above");
        if let Some(smaller) = pell_scan(d, limit - 1) {
            return Err(internal(format!(
                "period solution ({t}, {u}) is not minimal, ({}, {}) is smaller",
                smaller.0, smaller.1
            )));
        }
    }
    Ok((t, u))
}

/// The smallest positive solution of `x^2 - m y^2 = 1`.
pub fn pell_unit(m: &BigInt) -> Result<(BigInt, BigInt)> {
    if m < &big(2) || is_square(m) {
        return domain(format!("{m} must be a nonsquare at least 2"));
    }
    let (t, u) = pell(&(m * 4u32))?;
    Ok((t / 2u32, u))
}

/// The automorph `[[(t - bu)/2, -cu], [au, (t + bu)/2]]` belonging to a
/// solution of `t^2 - D u^2 = 4`.
pub fn automorph_from_pell(form: &Form, t: &BigInt, u: &BigInt) -> Result<Mat2> {
    let d = form.discriminant();
    if t * t - &d * u * u != big(4) {
        return domain(format!("({t}, {u}) does not solve t^2 - {d} u^2 = 4"));
    }
    let Form { a, b, c } = form;
    let lo = t - b * u;
    let hi = t + b * u;
    if lo.is_odd() {
        return Err(internal("t and bu have different parity"));
    }
    let m = Mat2::new(lo / 2u32, -c * u, a * u, hi / 2u32);
    if form.transform_unchecked(&m) != *form {
        return Err(internal(format!("{m} is not an automorph of {form}")));
    }
    Ok(m)
}

/// All automorphs of a primitive definite form.
pub fn definite_automorphisms(form: &Form) -> Result<Vec<Mat2>> {
    match form.classify()? {
        FormClass::PositiveDefinite | FormClass::NegativeDefinite => {}
        other => return domain(format!("{form} is not definite ({other:?})")),
    }
    if !form.is_primitive() {
        return domain(format!("{form} is not primitive"));
    }
    let Form { a, b, c } = form;
    let d = form.discriminant();
    let mut base = vec![Mat2::identity()];
    if d == big(-3) {
        base.push(Mat2::new((1 - b) / 2, -c, a.clone(), (1 + b) / 2));
        base.push(Mat2::new((1 + b) / 2, c.clone(), -a, (1 - b) / 2));
    } else if d == big(-4) {
        base.push(Mat2::new(-b / 2, -c, a.clone(), b / 2));
    }
    let mut out = Vec::with_capacity(2 * base.len());
    for m in base {
        out.push(m.neg());
        out.push(m);
    }
    for m in &out {
        if form.transform_unchecked(m) != *form {
            return Err(internal(format!("{m} is not an automorph of {form}")));
        }
    }
    Ok(out)
}

/// A matrix `A` with determinant 1 and `F^A = F'`, if one exists.
pub fn properly_equivalent(f1: &Form, f2: &Form) -> Result<Option<Mat2>> {
    let d1 = f1.require_indefinite()?;
    let d2 = f2.require_indefinite()?;
    if d1 != d2 {
        return domain(format!("discriminants differ: {d1} and {d2}"));
    }
    for f in [f1, f2] {
        if !f.is_primitive() {
            return domain(format!("{f} is not primitive"));
        }
    }
    let r1 = reduce(f1)?;
    let r2 = reduce(f2)?;
    let target = r2.row(r2.period_start);
    let window = r1.period_start..r1.period_start + r1.even_length();
    for j in window {
        let row = r1.row(j);
        if row.f == target.f {
            let m = &row.t * &target.t.inverse()?;
            if f1.transform_unchecked(&m) != *f2 {
                return Err(internal(format!("witness {m} does not map {f1} to {f2}")));
            }
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::cf_of_surd;

    fn bs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| big(x)).collect()
    }

    #[test]
    fn classification() {
        let f = Form::new(-17, -29, -7);
        assert_eq!(f.discriminant(), big(365));
        assert_eq!(f.classify().unwrap(), FormClass::Indefinite);
        assert_eq!(
            Form::new(1, 0, 1).classify().unwrap(),
            FormClass::PositiveDefinite
        );
        assert_eq!(
            Form::new(-1, 1, -1).classify().unwrap(),
            FormClass::NegativeDefinite
        );
        assert_eq!(
            Form::new(1, 0, -1).classify().unwrap(),
            FormClass::DegenerateSquare
        );
        assert!(Form::new(0, 0, 0).classify().is_err());
        assert!(f.is_primitive());
        assert!(!Form::new(2, 4, 6).is_primitive());
        assert!(Form::new(1, 0, -2).is_primitive());
    }

    #[test]
    fn surds() {
        let x = surd_of_form(&Form::new(-17, -29, -7)).unwrap();
        assert_eq!((x.a(), x.b(), x.d()), (&big(-17), &big(-29), &big(365)));
        let x = surd_of_form(&Form::new(1, 0, -7)).unwrap();
        assert_eq!(x, QuadraticSurd::sqrt(&big(7)).unwrap());
        let x = surd_of_form(&Form::new(5, 15, -7)).unwrap();
        assert_eq!((x.a(), x.b()), (&big(5), &big(15)));
        assert!(surd_of_form(&Form::new(1, 0, -4)).is_err());
    }

    #[test]
    fn transforms() {
        let f = Form::new(-17, -29, -7);
        let t3 = Mat2::new(-1, -3, 1, 2);
        assert_eq!(f.transform(&t3).unwrap(), Form::new(5, 15, -7));
        assert_eq!(f.transform(&Mat2::identity()).unwrap(), f);
        let auto = Mat2::new(457, 133, -323, -94);
        assert_eq!(f.transform(&auto).unwrap(), f);
        assert!(f.transform(&Mat2::new(2, 0, 0, 1)).is_err());
        let a = Mat2::new(2, 1, 1, 1);
        let b = Mat2::new(1, -3, 0, 1);
        assert_eq!(
            f.transform(&a).unwrap().transform(&b).unwrap(),
            f.transform(&(&a * &b)).unwrap()
        );
    }

    #[test]
    fn successors() {
        assert_eq!(
            k_successor(&Form::new(5, 15, -7)).unwrap(),
            (big(2), Form::new(7, 13, -7))
        );
        assert_eq!(
            k_successor(&Form::new(7, 15, -5)).unwrap(),
            (big(3), Form::new(5, 15, -7))
        );
        assert_eq!(
            k_successor(&Form::new(-17, 39, -17)).unwrap(),
            (big(1), Form::new(17, -5, -5))
        );
        let g = Form::new(5, 15, -7);
        let (q, next) = k_successor(&g).unwrap();
        assert_eq!(next, g.transform(&Mat2::new(0, 1, 1, q)).unwrap().neg());
    }

    #[test]
    fn reduced_predicates() {
        assert!(is_k_reduced(&Form::new(5, 15, -7)).unwrap());
        assert!(!is_reduced(&Form::new(1, 3, 1)).unwrap());
        assert!(is_reduced(&Form::new(-5, 15, 7)).unwrap());
        assert!(!is_k_reduced(&Form::new(-5, 15, 7)).unwrap());
        assert!(is_k_reduced(&Form::new(1, 0, -1)).is_err());
    }

    #[test]
    fn book_reduction() {
        let r = reduce(&Form::new(-17, -29, -7)).unwrap();
        assert_eq!(r.q0, big(-2));
        assert_eq!((r.period_start, r.period_length), (3, 3));
        assert_eq!(r.rows.len(), 9);
        let g = [
            (-17, 39, -17),
            (17, -5, -5),
            (5, 15, -7),
            (7, 13, -7),
            (7, 15, -5),
            (5, 15, -7),
            (7, 13, -7),
            (7, 15, -5),
            (5, 15, -7),
        ];
        let q = [1, 1, 2, 2, 3, 2, 2, 3, 2];
        let f = [
            (-17, 39, -17),
            (-17, -5, 5),
            (5, 15, -7),
            (-7, 13, 7),
            (7, 15, -5),
            (-5, 15, 7),
            (7, 13, -7),
            (-7, 15, 5),
            (5, 15, -7),
        ];
        let t = [
            (1, -2, 0, 1),
            (2, -1, -1, 1),
            (-1, -3, 1, 2),
            (3, -7, -2, 5),
            (-7, -17, 5, 12),
            (17, -58, -12, 41),
            (-58, -133, 41, 94),
            (133, -324, -94, 229),
            (-324, -1105, 229, 781),
        ];
        for (i, row) in r.rows.iter().enumerate() {
            assert_eq!(row.j, i + 1);
            assert_eq!(row.g, Form::new(g[i].0, g[i].1, g[i].2));
            assert_eq!(row.q, big(q[i]));
            assert_eq!(row.f, Form::new(f[i].0, f[i].1, f[i].2));
            assert_eq!(row.t, Mat2::new(t[i].0, t[i].1, t[i].2, t[i].3));
            let s = if i % 2 == 0 { 1 } else { -1 };
            assert_eq!(row.a, Mat2::new(0, s, -s, q[i]));
        }
        assert_eq!(r.automorphism(), Mat2::new(457, 133, -323, -94));
        assert_eq!(
            automorphism_from_period(&Form::new(-17, -29, -7)).unwrap(),
            Mat2::new(457, 133, -323, -94)
        );
    }

    #[test]
    fn small_reductions() {
        let r = reduce(&Form::new(1, 0, -7)).unwrap();
        assert_eq!(r.period_length, 4);
        let r = reduce(&Form::new(1, 0, -2)).unwrap();
        assert_eq!(r.period_length, 1);
        assert_eq!(r.q0, big(1));
        let m = automorphism_from_period(&Form::new(1, 0, -2)).unwrap();
        assert_ne!(m, Mat2::identity());
        assert_eq!(
            Form::new(1, 0, -2).transform(&m).unwrap(),
            Form::new(1, 0, -2)
        );
        assert!(automorphism_from_period(&Form::new(2, 0, -4)).is_err());
    }

    #[test]
    fn quotients_match_continued_fraction() {
        for (a, b, c) in [
            (-17, -29, -7),
            (1, 0, -7),
            (3, 7, -11),
            (-5, 2, 9),
            (13, 101, 5),
        ] {
            let form = Form::new(a, b, c);
            let r = reduce(&form).unwrap();
            let cf = cf_of_surd(&surd_of_form(&form).unwrap()).unwrap();
            let qs = r.quotients();
            assert_eq!(qs, cf.terms(qs.len()), "{form}");
        }
    }

    #[test]
    fn hauptformen() {
        assert_eq!(hauptform(&big(8)).unwrap(), Form::new(1, 0, -2));
        assert_eq!(hauptform(&big(5)).unwrap(), Form::new(1, 1, -1));
        assert_eq!(hauptform(&big(365)).unwrap(), Form::new(1, 1, -91));
        assert!(hauptform(&big(7)).is_err());
        assert!(hauptform(&big(16)).is_err());
    }

    #[test]
    fn pell_solutions() {
        assert_eq!(pell(&big(8)).unwrap(), (big(6), big(2)));
        assert_eq!(pell(&big(5)).unwrap(), (big(3), big(1)));
        assert_eq!(pell_unit(&big(2)).unwrap(), (big(3), big(2)));
        assert_eq!(pell_unit(&big(7)).unwrap(), (big(8), big(3)));
        let (t, u) = pell(&big(365)).unwrap();
        assert_eq!(&t * &t - big(365) * &u * &u, big(4));
        assert_eq!(pell_scan(&big(365), 1000), Some((t, u)));
        let (x, y) = pell_unit(&big(91)).unwrap();
        assert_eq!(&x * &x - big(91) * &y * &y, big(1));
        assert_eq!((x, y), (big(1574), big(165)));
        assert_eq!(
            pell_unit(&big(61)).unwrap(),
            (big(1766319049), big(226153980))
        );
        assert!(pell_unit(&big(9)).is_err());
        assert!(pell(&big(-3)).is_err());
    }

    #[test]
    fn pell_automorphs() {
        let f = Form::new(1, 0, -2);
        assert_eq!(
            automorph_from_pell(&f, &big(6), &big(2)).unwrap(),
            Mat2::new(3, 4, 2, 3)
        );
        assert_eq!(
            automorph_from_pell(&f, &big(2), &big(0)).unwrap(),
            Mat2::identity()
        );
        assert_eq!(
            automorph_from_pell(&f, &big(-2), &big(0)).unwrap(),
            Mat2::identity().neg()
        );
        assert!(automorph_from_pell(&f, &big(5), &big(2)).is_err());
        for d in [5, 8, 12, 13, 21, 28, 365] {
            let h = hauptform(&big(d)).unwrap();
            let (t, u) = pell(&big(d)).unwrap();
            let m = automorph_from_pell(&h, &t, &u).unwrap();
            assert_eq!(h.transform(&m).unwrap(), h);
        }
    }

    #[test]
    fn definite() {
        let four = definite_automorphisms(&Form::new(1, 0, 1)).unwrap();
        assert_eq!(four.len(), 4);
        assert!(four.contains(&Mat2::new(0, -1, 1, 0)));
        assert!(four.contains(&Mat2::new(0, 1, -1, 0)));
        let six = definite_automorphisms(&Form::new(1, 1, 1)).unwrap();
        assert_eq!(six.len(), 6);
        assert!(six.contains(&Mat2::new(0, -1, 1, 1)));
        assert!(six.contains(&Mat2::new(0, 1, -1, -1)));
        let two = definite_automorphisms(&Form::new(1, 0, 2)).unwrap();
        assert_eq!(two, vec![Mat2::identity().neg(), Mat2::identity()]);
        assert!(definite_automorphisms(&Form::new(1, 0, -2)).is_err());
    }

    #[test]
    fn equivalence() {
        let f = Form::new(-17, -29, -7);
        let g = Form::new(5, 15, -7);
        let m = properly_equivalent(&f, &g).unwrap().unwrap();
        assert_eq!(f.transform(&m).unwrap(), g);
        assert_eq!(m.det(), big(1));
        let m = properly_equivalent(&f, &f).unwrap().unwrap();
        assert_eq!(f.transform(&m).unwrap(), f);
        let a = Form::new(1, 0, -2);
        let b = Form::new(-1, 0, 2);
        let w = properly_equivalent(&a, &b).unwrap();
        if let Some(m) = w {
            assert_eq!(a.transform(&m).unwrap(), b);
        }
        // x^2 - 3y^2 does not represent -1, so it is not equivalent to its negative
        assert_eq!(
            properly_equivalent(&Form::new(1, 0, -3), &Form::new(-1, 0, 3)).unwrap(),
            None
        );
        assert!(properly_equivalent(&f, &Form::new(1, 0, -2)).is_err());
    }

    #[test]
    fn closing_families() {
        for n in 2..=12i64 {
            let form = Form::new((n + 1).pow(2) - 2, -2 * (n * n + n - 2), n * n - 2);
            assert_eq!(form.discriminant(), big(8));
            let cf = cf_of_surd(&surd_of_form(&form).unwrap()).unwrap();
            assert_eq!(cf.preperiod, bs(&[0, 1, n + 1]));
            assert_eq!(cf.period, bs(&[2]));
            reduce(&form).unwrap();
            let form = Form::new(n, -n, -1);
            let cf = cf_of_surd(&surd_of_form(&form).unwrap()).unwrap();
            assert!(cf.preperiod.is_empty());
            assert_eq!(cf.period, bs(&[1, n]));
        }
    }
}
