//! Continued fractions of rationals and of quadratic surds.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, internal, Result};
use crate::intcore::{big, is_square, isqrt, Rational};

/// `<head; tail[0], tail[1], ...>` with every tail entry at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCF {
    pub head: BigInt,
    pub tail: Vec<BigInt>,
}

impl FiniteCF {
    pub fn new(head: BigInt, tail: Vec<BigInt>) -> Result<Self> {
        if let Some(bad) = tail.iter().find(|x| !x.is_positive()) {
            return domain(format!("continued fraction entry {bad} is not positive"));
        }
        Ok(FiniteCF { head, tail })
    }

    pub fn from_terms(terms: &[BigInt]) -> Result<Self> {
        match terms.split_first() {
            Some((h, t)) => FiniteCF::new(h.clone(), t.to_vec()),
            None => domain("empty continued fraction"),
        }
    }

    pub fn terms(&self) -> Vec<BigInt> {
        std::iter::once(self.head.clone())
            .chain(self.tail.iter().cloned())
            .collect()
    }

    pub fn is_canonical(&self) -> bool {
        self.tail.last().is_none_or(|x| !x.is_one())
    }
}

impl fmt::Display for FiniteCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().iter().map(|x| x.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// Value of a finite continued fraction, evaluated from the right.
pub fn eval_finite_cf(cf: &FiniteCF) -> Rational {
    let mut acc: Option<Rational> = None;
    for x in cf.terms().into_iter().rev() {
        let x = Rational::from_integer(x);
        acc = Some(match acc {
            None => x,
            Some(v) => x + v.recip(),
        });
    }
    acc.expect("a continued fraction has at least one term")
}

/// Rows `(s_j, t_j)` with `s_0/t_0 = 1/0`, `s_1/t_1 = q_0/1` and
/// `s_{j+1} = s_{j-1} + q_j s_j`, likewise for `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergents {
    pub rows: Vec<(BigInt, BigInt)>,
}

impl Convergents {
    fn from_quotients<'a>(qs: impl IntoIterator<Item = &'a BigInt>) -> Self {
        let mut rows = vec![(BigInt::one(), BigInt::zero())];
        let mut prev = (BigInt::zero(), BigInt::one());
        for q in qs {
            let cur = rows.last().unwrap().clone();
            let next = (&prev.0 + q * &cur.0, &prev.1 + q * &cur.1);
            prev = cur;
            rows.push(next);
        }
        Convergents { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn value(&self, j: usize) -> Option<Rational> {
        let (s, t) = self.rows.get(j)?;
        if t.is_zero() {
            None
        } else {
            Some(Rational::new(s.clone(), t.clone()))
        }
    }

    /// `s_j t_{j+1} - t_j s_{j+1}`, which is `(-1)^j`.
    pub fn determinant(&self, j: usize) -> BigInt {
        let (s0, t0) = &self.rows[j];
        let (s1, t1) = &self.rows[j + 1];
        s0 * t1 - t0 * s1
    }
}

pub fn convergents(cf: &FiniteCF) -> Convergents {
    Convergents::from_quotients(cf.terms().iter())
}

/// Continued fraction of a rational. With `canonical` the last term exceeds
/// one; otherwise the variant ending in 1 is returned (when there are at
/// least two terms in the canonical form).
pub fn cf_of_rational(x: &Rational, canonical: bool) -> FiniteCF {
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    let mut terms = Vec::new();
    loop {
        let (q, r) = num.div_mod_floor(&den);
        terms.push(q);
        if r.is_zero() {
            break;
        }
        num = den;
        den = r;
    }
    if !canonical && terms.len() >= 2 {
        let last = terms.pop().unwrap();
        terms.push(last - 1);
        terms.push(BigInt::one());
    }
    FiniteCF::from_terms(&terms).expect("Euclid quotients after the first are positive")
}

/// The real number `(sqrt(D) - b) / (2a)` with `4a | b^2 - D` and `D` a
/// positive nonsquare.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    d: BigInt,
}

impl QuadraticSurd {
    pub fn new(a: BigInt, b: BigInt, d: BigInt) -> Result<Self> {
        if a.is_zero() {
            return domain("surd denominator a must be nonzero");
        }
        if !d.is_positive() || is_square(&d) {
            return domain(format!("D = {d} must be a positive nonsquare"));
        }
        if !((&b * &b - &d) % (big(4) * &a)).is_zero() {
            return domain(format!(
                "4a = {} does not divide b^2 - D = {}",
                big(4) * &a,
                &b * &b - &d
            ));
        }
        Ok(QuadraticSurd { a, b, d })
    }

    /// `sqrt(n)` written as `sqrt(4n) / 2`.
    pub fn sqrt(n: &BigInt) -> Result<Self> {
        QuadraticSurd::new(BigInt::one(), BigInt::zero(), big(4) * n)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// `c = (b^2 - D) / (4a)`, the third coefficient of the attached form.
    pub fn c(&self) -> BigInt {
        (&self.b * &self.b - &self.d) / (big(4) * &self.a)
    }

    /// `floor(sqrt(D))`.
    pub fn f(&self) -> BigInt {
        isqrt(&self.d).expect("D is positive")
    }

    /// Exact comparison of the surd with a rational number.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        // x = (sqrt(D) - b)/(2a) against p/q with q > 0:
        // for a > 0 compare sqrt(D)*q with R = b*q + 2a*p, for a < 0 flip.
        let (p, q) = (r.numer(), r.denom());
        let rhs = &self.b * q + big(2) * &self.a * p;
        let ord = if rhs.is_negative() {
            Ordering::Greater
        } else {
            (&self.d * q * q).cmp(&(&rhs * &rhs))
        };
        if self.a.is_positive() {
            ord
        } else {
            ord.reverse()
        }
    }

    /// Exact comparison of two surds with the same `D`.
    pub fn cmp_surd(&self, other: &QuadraticSurd) -> Result<Ordering> {
        if self.d != other.d {
            return domain("surds with different discriminants");
        }
        // sign of (sqrt(D) - b1)/(2a1) - (sqrt(D) - b2)/(2a2)
        //  = [ (a2 - a1) sqrt(D) - (b1 a2 - b2 a1) ] / (2 a1 a2)
        let u = &other.a - &self.a;
        let v = &self.b * &other.a - &other.b * &self.a;
        let s = sign_of_linear(&u, &v, &self.d);
        let den_sign = (&self.a * &other.a).signum();
        Ok(if den_sign.is_negative() {
            s.reverse()
        } else {
            s
        })
    }

    pub fn to_f64(&self) -> f64 {
        let d: f64 = self.d.to_string().parse().unwrap_or(f64::NAN);
        let a: f64 = self.a.to_string().parse().unwrap_or(f64::NAN);
        let b: f64 = self.b.to_string().parse().unwrap_or(f64::NAN);
        (d.sqrt() - b) / (2.0 * a)
    }
}

/// Sign of `u*sqrt(D) - v` for nonsquare `D > 0`.
pub(crate) fn sign_of_linear(u: &BigInt, v: &BigInt, d: &BigInt) -> Ordering {
    let zero = BigInt::zero();
    match (u.cmp(&zero), v.cmp(&zero)) {
        (Ordering::Equal, _) => zero.cmp(v),
        (Ordering::Greater, Ordering::Less | Ordering::Equal) => Ordering::Greater,
        (Ordering::Less, Ordering::Greater | Ordering::Equal) => Ordering::Less,
        (Ordering::Greater, Ordering::Greater) => (u * u * d).cmp(&(v * v)),
        (Ordering::Less, Ordering::Less) => (v * v).cmp(&(u * u * d)),
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let minus_b = -&self.b;
        let num = if minus_b.is_zero() {
            format!("sqrt({})", self.d)
        } else if minus_b.is_negative() {
            format!("sqrt({}) - {}", self.d, self.b)
        } else {
            format!("sqrt({}) + {}", self.d, minus_b)
        };
        write!(f, "({num})/{}", big(2) * &self.a)
    }
}

/// `floor(x)` computed from `f = floor(sqrt(D))` alone.
pub fn surd_floor(x: &QuadraticSurd) -> BigInt {
    let f = x.f();
    if x.a.is_positive() {
        (&f - &x.b).div_floor(&(big(2) * &x.a))
    } else {
        (&x.b - &f - big(1)).div_floor(&(big(-2) * &x.a))
    }
}

/// One continued fraction step: `q = floor(x)` and `1/(x - q)`.
pub fn cf_step(x: &QuadraticSurd) -> (BigInt, QuadraticSurd) {
    let q = surd_floor(x);
    let (a, b, c) = (&x.a, &x.b, x.c());
    // shift x -> x - q
    let b1 = b + big(2) * a * &q;
    let c1 = &c + &q * (b + a * &q);
    // reciprocal (a, b, c) -> (-c, -b, -a)
    let next = QuadraticSurd {
        a: -c1,
        b: -b1,
        d: x.d.clone(),
    };
    (q, next)
}

/// Endless stream of partial quotients of a surd.
#[derive(Debug, Clone)]
pub struct SurdQuotients {
    state: QuadraticSurd,
}

impl SurdQuotients {
    pub fn new(x: &QuadraticSurd) -> Self {
        SurdQuotients { state: x.clone() }
    }
}

impl Iterator for SurdQuotients {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let (q, next) = cf_step(&self.state);
        self.state = next;
        Some(q)
    }
}

/// Eventually periodic continued fraction `<pre; overline(period)>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicCF {
    pub preperiod: Vec<BigInt>,
    pub period: Vec<BigInt>,
}

impl PeriodicCF {
    /// The `k`-th partial quotient.
    pub fn term(&self, k: usize) -> &BigInt {
        if k < self.preperiod.len() {
            &self.preperiod[k]
        } else {
            &self.period[(k - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn terms(&self, n: usize) -> Vec<BigInt> {
        (0..n).map(|k| self.term(k).clone()).collect()
    }
}

impl fmt::Display for PeriodicCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.preperiod.is_empty() {
            write!(f, "<overline({})>", join(&self.period))
        } else {
            write!(
                f,
                "<{}; overline({})>",
                join(&self.preperiod),
                join(&self.period)
            )
        }
    }
}

/// Upper bound on the number of steps before the expansion of a surd (or
/// the reduction of a form) becomes periodic, plus the length of one period.
///
/// The pre-period shrinks `|a + c|` geometrically, so it is bounded by the bit
/// sizes involved. A period consists of K-reduced states, and there are fewer
/// than `f^2` of those for a given `D`.
pub(crate) fn iteration_guard(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> u64 {
    let size = a.abs() + b.abs() + c.abs();
    let pre = 2 * (d.bits() + size.bits()) + 64;
    let f = isqrt(d).unwrap_or_default();
    let period = &f * &f + 2u32;
    let period: u64 = period.try_into().unwrap_or(u64::MAX / 2);
    pre.saturating_add(period)
}

/// Expansion of a surd, split at the first repeated state.
pub fn cf_of_surd(x: &QuadraticSurd) -> Result<PeriodicCF> {
    let guard = iteration_guard(&x.a, &x.b, &x.c(), &x.d);
    let mut seen: std::collections::HashMap<(BigInt, BigInt), usize> = Default::default();
    let mut quotients = Vec::new();
    let mut state = x.clone();
    for k in 0..=guard as usize {
        if let Some(&start) = seen.get(&(state.a.clone(), state.b.clone())) {
            let period = quotients.split_off(start);
            return Ok(PeriodicCF {
                preperiod: quotients,
                period,
            });
        }
        seen.insert((state.a.clone(), state.b.clone()), k);
        let (q, next) = cf_step(&state);
        quotients.push(q);
        state = next;
    }
    Err(internal(format!(
        "no period found for {x} within {guard} steps"
    )))
}

/// The surd `<overline(a, b)>`, i.e. `a/2 + sqrt(a^2/4 + a/b)`.
///
/// The raw data `(b, -ab)` with `D = a^2 b^2 + 4ab` is divided by
/// `gcd(a, b)` so that the attached form is primitive.
pub fn periodic_two_cycle(a: &BigInt, b: &BigInt) -> Result<QuadraticSurd> {
    if !a.is_positive() || !b.is_positive() {
        return domain(format!(
            "periodic_two_cycle needs a, b >= 1, got ({a}, {b})"
        ));
    }
    let g = a.gcd(b);
    let d = a * a * b * b + big(4) * a * b;
    QuadraticSurd::new(b / &g, -(a * b) / &g, d / (&g * &g))
}

/// Convergents `s_j/t_j` for `j = 0..=j_max` of the expansion of `x`.
/// For `j >= 2` these are best approximations of `x`.
pub fn best_approximations(x: &QuadraticSurd, j_max: usize) -> Result<Convergents> {
    if j_max < 2 {
        return domain(format!("best_approximations needs j_max >= 2, got {j_max}"));
    }
    let qs: Vec<BigInt> = SurdQuotients::new(x).take(j_max).collect();
    Ok(Convergents::from_quotients(qs.iter()))
}

/// A real number the library can represent exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Real {
    Rational(Rational),
    Surd(QuadraticSurd),
}
