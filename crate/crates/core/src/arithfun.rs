//! Arithmetic functions on a finite horizon `1..=N` and the Dirichlet
//! convolution.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::intcore::{factorize, Rational};

fn require_positive(n: &BigInt, name: &str) -> Result<()> {
    if n.is_positive() {
        Ok(())
    } else {
        domain(format!("{name} is defined for n >= 1, got {n}"))
    }
}

/// Möbius function.
pub fn mu(n: &BigInt) -> Result<BigInt> {
    require_positive(n, "mu")?;
    let fac = factorize(n)?;
    if fac.iter().any(|pp| pp.alpha > 1) {
        return Ok(BigInt::zero());
    }
    Ok(if fac.len() % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    })
}

/// Euler's totient.
pub fn phi(n: &BigInt) -> Result<BigInt> {
    require_positive(n, "phi")?;
    let mut out = BigInt::one();
    for pp in factorize(n)? {
        out *= pp.p.pow(pp.alpha - 1) * (&pp.p - 1u32);
    }
    Ok(out)
}

/// Number of divisors, evaluated as `(1 * 1)(n)`.
pub fn tau(n: &BigInt) -> Result<BigInt> {
    require_positive(n, "tau")?;
    Ok(divisors(n)?
        .iter()
        .map(|d| one(d).unwrap() * one(&(n / d)).unwrap())
        .sum())
}

pub fn epsilon(n: &BigInt) -> Result<BigInt> {
    require_positive(n, "epsilon")?;
    Ok(if n.is_one() {
        BigInt::one()
    } else {
        BigInt::zero()
    })
}

pub fn one(n: &BigInt) -> Result<BigInt> {
    require_positive(n, "one")?;
    Ok(BigInt::one())
}

pub fn ident(n: &BigInt) -> Result<BigInt> {
    require_positive(n, "ident")?;
    Ok(n.clone())
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    require_positive(n, "divisors")?;
    let mut out = vec![BigInt::one()];
    for pp in factorize(n)? {
        let mut grown = Vec::with_capacity(out.len() * (pp.alpha as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=pp.alpha {
                grown.push(d * &pk);
                pk *= &pp.p;
            }
        }
        out = grown;
    }
    out.sort();
    Ok(out)
}

/// An arithmetic function known on `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithFn {
    values: Vec<Rational>,
}

impl ArithFn {
    pub fn new(values: Vec<Rational>) -> Self {
        ArithFn { values }
    }

    pub fn from_fn(horizon: usize, mut f: impl FnMut(u64) -> Rational) -> Self {
        ArithFn {
            values: (1..=horizon as u64).map(&mut f).collect(),
        }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        ArithFn {
            values: values
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        }
    }

    fn builtin(horizon: usize, f: fn(&BigInt) -> Result<BigInt>) -> Self {
        Self::from_fn(horizon, |k| Rational::from_integer(f(&k.into()).unwrap()))
    }

    pub fn mu(horizon: usize) -> Self {
        // sieve instead of factoring every n
        let mut m = vec![1i64; horizon + 1];
        let mut composite = vec![false; horizon + 1];
        for p in 2..=horizon {
            if composite[p] {
                continue;
            }
            for k in (p..=horizon).step_by(p) {
                if k > p {
                    composite[k] = true;
                }
                m[k] = -m[k];
            }
            if let Some(p2) = p.checked_mul(p) {
                for k in (p2..=horizon).step_by(p2) {
                    m[k] = 0;
                }
            }
        }
        Self::from_integers(&m[1..])
    }

    pub fn phi(horizon: usize) -> Self {
        let mut v: Vec<u64> = (0..=horizon as u64).collect();
        for p in 2..=horizon {
            if v[p] == p as u64 {
                for k in (p..=horizon).step_by(p) {
                    v[k] -= v[k] / p as u64;
                }
            }
        }
        Self::from_fn(horizon, |k| Rational::from_integer(v[k as usize].into()))
    }

    pub fn tau(horizon: usize) -> Self {
        let one = Self::one(horizon);
        one.convolve(&one).unwrap()
    }

    pub fn epsilon(horizon: usize) -> Self {
        Self::builtin(horizon, epsilon)
    }

    pub fn one(horizon: usize) -> Self {
        Self::builtin(horizon, one)
    }

    pub fn ident(horizon: usize) -> Self {
        Self::builtin(horizon, ident)
    }

    pub fn horizon(&self) -> usize {
        self.values.len()
    }

    /// `f(n)` for `1 <= n <= N`.
    pub fn at(&self, n: usize) -> &Rational {
        &self.values[n - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Values as integers, when all of them are integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.values
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }

    fn same_horizon(&self, other: &ArithFn) -> Result<()> {
        if self.horizon() == other.horizon() {
            Ok(())
        } else {
            domain(format!(
                "horizon mismatch: {} vs {}",
                self.horizon(),
                other.horizon()
            ))
        }
    }

    pub fn plus(&self, other: &ArithFn) -> Result<ArithFn> {
        self.same_horizon(other)?;
        Ok(ArithFn::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(x, y)| x + y)
                .collect(),
        ))
    }

    /// Pointwise product `(f·g)(n) = f(n) g(n)`.
    pub fn pointwise(&self, other: &ArithFn) -> Result<ArithFn> {
        self.same_horizon(other)?;
        Ok(ArithFn::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(x, y)| x * y)
                .collect(),
        ))
    }

    /// Dirichlet convolution `(f*g)(n) = sum over d | n of f(d) g(n/d)`.
    pub fn convolve(&self, other: &ArithFn) -> Result<ArithFn> {
        self.same_horizon(other)?;
        let n = self.horizon();
        let mut out = vec![Rational::zero(); n];
        for d in 1..=n {
            let fd = &self.values[d - 1];
            if fd.is_zero() {
                continue;
            }
            for e in 1..=n / d {
                let ge = &other.values[e - 1];
                if !ge.is_zero() {
                    out[d * e - 1] += fd * ge;
                }
            }
        }
        Ok(ArithFn::new(out))
    }

    /// The convolution inverse, by the recursion on proper divisors.
    pub fn dirichlet_inverse(&self) -> Result<ArithFn> {
        let n = self.horizon();
        if n == 0 {
            return Ok(self.clone());
        }
        let f1 = &self.values[0];
        if f1.is_zero() {
            return Err(Error::Domain("f(1) = 0, f is not invertible".into()));
        }
        let inv_f1 = f1.recip();
        // acc[m] collects sum over d | m, d > 1 of f(d) g(m/d) as g fills in
        let mut g = vec![Rational::zero(); n];
        let mut acc = vec![Rational::zero(); n];
        g[0] = inv_f1.clone();
        for m in 1..=n {
            if m > 1 {
                g[m - 1] = -&inv_f1 * &acc[m - 1];
            }
            let gm = g[m - 1].clone();
            if gm.is_zero() {
                continue;
            }
            for d in 2..=n / m {
                let fd = &self.values[d - 1];
                if !fd.is_zero() {
                    acc[d * m - 1] += fd * &gm;
                }
            }
        }
        Ok(ArithFn::new(g))
    }

    pub fn is_multiplicative(&self) -> bool {
        let n = self.horizon();
        if n == 0 || !self.values[0].is_one() {
            return false;
        }
        for a in 2..=n {
            for b in a..=n / a {
                if a.gcd(&b) == 1 && *self.at(a * b) != self.at(a) * self.at(b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_completely_multiplicative(&self) -> bool {
        let n = self.horizon();
        if n == 0 || !self.values[0].is_one() {
            return false;
        }
        for a in 2..=n {
            for b in a..=n / a {
                if *self.at(a * b) != self.at(a) * self.at(b) {
                    return false;
                }
            }
        }
        true
    }

    /// `f·μ`, the inverse of a completely multiplicative `f`.
    pub fn completely_mult_inverse(&self) -> Result<ArithFn> {
        if !self.is_completely_multiplicative() {
            return domain("f is not completely multiplicative on its horizon");
        }
        let out = self.pointwise(&ArithFn::mu(self.horizon()))?;
        debug_assert_eq!(
            out.convolve(self).unwrap(),
            ArithFn::epsilon(self.horizon())
        );
        Ok(out)
    }
}

/// The unique `f` with `f * 1 = g`, namely `μ * g`.
pub fn mobius_invert(g: &ArithFn) -> ArithFn {
    ArithFn::mu(g.horizon()).convolve(g).unwrap()
}

/// The points `floor(x/n)` for `1 <= n <= x`, descending.
pub fn floor_quotients(x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = 1;
    while n <= x {
        let q = x / n;
        out.push(q);
        n = x / q + 1;
    }
    out
}

fn lookup(g: &HashMap<u64, Rational>, q: u64) -> Result<&Rational> {
    g.get(&q)
        .ok_or_else(|| Error::Domain(format!("no value supplied at the point {q}")))
}

/// `F(x) = sum over n <= x of μ(n) G(x/n)`, with `G` given at every point
/// `floor(x/n)`.
pub fn summatory_mobius_invert(g: &HashMap<u64, Rational>, x: u64) -> Result<Rational> {
    let mu = ArithFn::mu(x as usize);
    let mut total = Rational::zero();
    for n in 1..=x {
        let m = mu.at(n as usize);
        if !m.is_zero() {
            total += m * lookup(g, x / n)?;
        }
    }
    Ok(total)
}

/// The forward direction `G(x) = sum over n <= x of F(x/n)`.
pub fn summatory_sum(f: &HashMap<u64, Rational>, x: u64) -> Result<Rational> {
    let mut total = Rational::zero();
    for n in 1..=x {
        total += lookup(f, x / n)?;
    }
    Ok(total)
}

pub type Matrix = Vec<Vec<Rational>>;

/// The divisor matrices `A` and `B` of size `n` for a completely
/// multiplicative `λ`; they are mutually inverse.
pub fn divisor_matrix_pair(lambda: &ArithFn, n: usize) -> Result<(Matrix, Matrix)> {
    if lambda.horizon() < n {
        return domain(format!(
            "lambda known up to {} but size {n} requested",
            lambda.horizon()
        ));
    }
    if n > 0 && !lambda.at(1).is_one() {
        return domain("lambda(1) must be 1");
    }
    if !lambda.is_completely_multiplicative() {
        return domain("lambda is not completely multiplicative");
    }
    let mu = ArithFn::mu(n);
    let mut a = vec![vec![Rational::zero(); n]; n];
    let mut b = vec![vec![Rational::zero(); n]; n];
    for j in 1..=n {
        for k in (j..=n).step_by(j) {
            a[j - 1][k - 1] = lambda.at(k / j).clone();
            b[j - 1][k - 1] = mu.at(k / j) * lambda.at(k / j);
        }
    }
    let prod = mat_mul(&a, &b);
    for (i, row) in prod.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let want = if i == j {
                Rational::one()
            } else {
                Rational::zero()
            };
            if *v != want {
                return Err(crate::error::internal("divisor matrices are not inverse"));
            }
        }
    }
    Ok((a, b))
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][k] * &bk[j];
            }
        }
    }
    out
}

/// `n (1 - 1/p1) ... (1 - 1/pr)`.
pub fn phi_product_formula(n: &BigInt) -> Result<Rational> {
    require_positive(n, "phi")?;
    let mut out = Rational::from_integer(n.clone());
    for pp in factorize(n)? {
        out *= Rational::one() - Rational::new(BigInt::one(), pp.p);
    }
    Ok(out)
}
