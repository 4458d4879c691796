//! Integer primitives: floor division, gcd family, extended Euclid traces,
//! factorization, digits, Fibonacci numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};

pub type Rational = BigRational;

pub(crate) fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Floor division with nonnegative remainder: `a = q*b + r`, `0 <= r < b`.
///
/// The divisor must be positive. Callers with a negative divisor normalize
/// the sign themselves.
pub fn floor_div(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
    if !b.is_positive() {
        return domain(format!("floor_div needs a positive divisor, got {b}"));
    }
    Ok(a.div_mod_floor(b))
}

/// Largest `k` with `k*k <= n`.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return domain(format!("isqrt of negative number {n}"));
    }
    Ok(n.sqrt())
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// One row of the extended Euclidean scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub j: usize,
    /// Partial quotient, absent in the final row.
    pub q: Option<BigInt>,
    pub r: BigInt,
    pub s: BigInt,
    pub t: BigInt,
}

/// Full table of the extended Euclidean algorithm for the normalized pair
/// `(a, b)` with `b > 0`.
///
/// Rows run from `j = 0` to `j = n_star`, where `r_{n_star} = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtEuclidTrace {
    pub a: BigInt,
    pub b: BigInt,
    /// True when the inputs were swapped because the second one was zero.
    pub swapped: bool,
    /// True when the sign of the second input was flipped.
    pub negated: bool,
    pub rows: Vec<TraceRow>,
    pub n_star: usize,
}

impl ExtEuclidTrace {
    pub fn gcd(&self) -> &BigInt {
        &self.rows[self.n_star - 1].r
    }

    /// The check column `b*s_j - a*t_j`, which equals `(-1)^j r_j`.
    pub fn check(&self, j: usize) -> BigInt {
        let row = &self.rows[j];
        &self.b * &row.s - &self.a * &row.t
    }

    /// `s_{n*} / t_{n*}`, the reduced value of `a/b`.
    pub fn reduced(&self) -> (BigInt, BigInt) {
        let last = &self.rows[self.n_star];
        (last.s.clone(), last.t.clone())
    }

    /// Partial quotients `q_0 .. q_{n*-1}`, the continued fraction of `a/b`.
    pub fn quotients(&self) -> Vec<BigInt> {
        self.rows.iter().filter_map(|r| r.q.clone()).collect()
    }
}

/// Extended Euclidean algorithm with the full `(q, r, s, t)` table.
///
/// Inputs are normalized first: a zero second argument is swapped to the
/// front, then the second argument is replaced by its absolute value.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> Result<ExtEuclidTrace> {
    if a.is_zero() && b.is_zero() {
        return domain("ext_gcd(0, 0) is undefined");
    }
    let (a, mut b, swapped) = if b.is_zero() {
        (b.clone(), a.clone(), true)
    } else {
        (a.clone(), b.clone(), false)
    };
    let negated = b.is_negative();
    if negated {
        b = -b;
    }

    let (q0, r1) = a.div_mod_floor(&b);
    let mut rows = vec![TraceRow {
        j: 0,
        q: Some(q0.clone()),
        r: b.clone(),
        s: BigInt::one(),
        t: BigInt::zero(),
    }];
    let mut prev = (b.clone(), BigInt::one(), BigInt::zero());
    let mut cur = (r1, q0, BigInt::one());
    let mut j = 1;
    while !cur.0.is_zero() {
        let (q, r_next) = prev.0.div_mod_floor(&cur.0);
        let s_next = &prev.1 + &q * &cur.1;
        let t_next = &prev.2 + &q * &cur.2;
        rows.push(TraceRow {
            j,
            q: Some(q),
            r: cur.0.clone(),
            s: cur.1.clone(),
            t: cur.2.clone(),
        });
        prev = cur;
        cur = (r_next, s_next, t_next);
        j += 1;
    }
    rows.push(TraceRow {
        j,
        q: None,
        r: cur.0,
        s: cur.1,
        t: cur.2,
    });
    Ok(ExtEuclidTrace {
        a,
        b,
        swapped,
        negated,
        rows,
        n_star: j,
    })
}

/// Returns `(g, lambda, mu)` with `g = gcd(a, b) = lambda*a + mu*b`.
///
/// The coefficients are read off row `n* - 1` of the Euclid trace.
pub fn bezout(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    let tr = ext_gcd(a, b)?;
    let row = &tr.rows[tr.n_star - 1];
    let g = row.r.clone();
    // b*s - a*t = (-1)^(n*-1) g
    let (mut lam, mut mu) = if (tr.n_star - 1) % 2 == 0 {
        (-&row.t, row.s.clone())
    } else {
        (row.t.clone(), -&row.s)
    };
    if tr.negated {
        mu = -mu;
    }
    if tr.swapped {
        std::mem::swap(&mut lam, &mut mu);
    }
    Ok((g, lam, mu))
}

/// gcd of several integers together with coefficients `c` such that
/// `g = sum c_k a_k`.
pub fn gcd_multi(values: &[BigInt]) -> Result<(BigInt, Vec<BigInt>)> {
    if values.iter().all(Zero::is_zero) {
        return domain("gcd_multi needs at least one nonzero value");
    }
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(values.len());
    for v in values {
        if g.is_zero() && v.is_zero() {
            coeffs.push(BigInt::zero());
            continue;
        }
        let (g2, lam, mu) = bezout(&g, v)?;
        for c in coeffs.iter_mut() {
            *c = &*c * &lam;
        }
        coeffs.push(mu);
        g = g2;
    }
    Ok((g, coeffs))
}

pub fn lcm(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if !a.is_positive() || !b.is_positive() {
        return domain(format!("lcm needs positive arguments, got ({a}, {b})"));
    }
    Ok(a * b / a.gcd(b))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimePower {
    pub p: BigInt,
    pub alpha: u32,
}

impl PrimePower {
    pub fn value(&self) -> BigInt {
        num_traits::pow(self.p.clone(), self.alpha as usize)
    }
}

fn factorize_u64(mut n: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    let mut push = |p: u64, alpha: u32| {
        out.push(PrimePower {
            p: BigInt::from(p),
            alpha,
        })
    };
    for p in [2u64, 3] {
        let mut alpha = 0;
        while n % p == 0 {
            n /= p;
            alpha += 1;
        }
        if alpha > 0 {
            push(p, alpha);
        }
    }
    let mut p = 5u64;
    let mut step = 2;
    while p.saturating_mul(p) <= n {
        let mut alpha = 0;
        while n % p == 0 {
            n /= p;
            alpha += 1;
        }
        if alpha > 0 {
            push(p, alpha);
        }
        p += step;
        step = 6 - step;
    }
    if n > 1 {
        push(n, 1);
    }
    out
}

/// Canonical prime factorization by trial division, ascending primes.
pub fn factorize(n: &BigInt) -> Result<Vec<PrimePower>> {
    if !n.is_positive() {
        return domain(format!("factorize needs n >= 1, got {n}"));
    }
    if let Some(small) = n.to_u64() {
        return Ok(factorize_u64(small));
    }
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = big(2);
    while &p * &p <= n {
        let mut alpha = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            alpha += 1;
        }
        if alpha > 0 {
            out.push(PrimePower {
                p: p.clone(),
                alpha,
            });
        }
        p += if p == big(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push(PrimePower { p: n, alpha: 1 });
    }
    Ok(out)
}

pub fn is_prime(n: &BigInt) -> bool {
    if n < &big(2) {
        return false;
    }
    match factorize(n) {
        Ok(f) => f.len() == 1 && f[0].alpha == 1,
        Err(_) => false,
    }
}

/// Number of distinct prime factors.
pub fn omega(n: &BigInt) -> Result<usize> {
    Ok(factorize(n)?.len())
}

pub fn is_squarefree(n: &BigInt) -> Result<bool> {
    Ok(factorize(n)?.iter().all(|pp| pp.alpha == 1))
}

/// Exponent of the prime `p` in `n!`, by summing `floor(n / p^k)`.
pub fn factorial_prime_exponent(p: &BigInt, n: &BigInt) -> Result<BigInt> {
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    if n.is_negative() {
        return domain(format!("factorial of negative number {n}"));
    }
    let mut total = BigInt::zero();
    let mut pk = p.clone();
    while &pk <= n {
        total += n / &pk;
        pk *= p;
    }
    Ok(total)
}

/// Base-`base` digits of `a`, most significant first.
pub fn digits(a: &BigInt, base: &BigInt) -> Result<Vec<BigInt>> {
    if a.is_negative() {
        return domain(format!("digits of negative number {a}"));
    }
    if base < &big(2) {
        return domain(format!("base must be at least 2, got {base}"));
    }
    if a.is_zero() {
        return Ok(vec![BigInt::zero()]);
    }
    let mut out = Vec::new();
    let mut n = a.clone();
    while !n.is_zero() {
        let (q, r) = n.div_mod_floor(base);
        out.push(r);
        n = q;
    }
    out.reverse();
    Ok(out)
}

pub fn from_digits(ds: &[BigInt], base: &BigInt) -> Result<BigInt> {
    if base < &big(2) {
        return domain(format!("base must be at least 2, got {base}"));
    }
    let mut n = BigInt::zero();
    for (i, d) in ds.iter().enumerate() {
        if d.is_negative() || d >= base {
            return domain(format!(
                "digit {d} at position {i} is invalid in base {base}"
            ));
        }
        n = n * base + d;
    }
    Ok(n)
}

/// Decimal digit sum.
pub fn digit_sum(a: &BigInt) -> Result<BigInt> {
    Ok(digits(a, &big(10))?.iter().sum())
}

/// Alternating decimal digit sum, starting with `+` at the units digit.
pub fn alternating_digit_sum(a: &BigInt) -> Result<BigInt> {
    let ds = digits(a, &big(10))?;
    let mut total = BigInt::zero();
    for (k, d) in ds.iter().rev().enumerate() {
        if k % 2 == 0 {
            total += d;
        } else {
            total -= d;
        }
    }
    Ok(total)
}

type Mat2 = [[BigInt; 2]; 2];

fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    [
        [
            &x[0][0] * &y[0][0] + &x[0][1] * &y[1][0],
            &x[0][0] * &y[0][1] + &x[0][1] * &y[1][1],
        ],
        [
            &x[1][0] * &y[0][0] + &x[1][1] * &y[1][0],
            &x[1][0] * &y[0][1] + &x[1][1] * &y[1][1],
        ],
    ]
}

/// Fibonacci number `f_n` for `n >= -1`, with `f_{-1} = 1`.
///
/// Uses `[[1,1],[1,0]]^n = [[f_{n+1}, f_n], [f_n, f_{n-1}]]`.
pub fn fibonacci(n: i64) -> Result<BigInt> {
    if n < -1 {
        return domain(format!("fibonacci index must be >= -1, got {n}"));
    }
    if n == -1 {
        return Ok(BigInt::one());
    }
    let mut result: Mat2 = [
        [BigInt::one(), BigInt::zero()],
        [BigInt::zero(), BigInt::one()],
    ];
    let mut base: Mat2 = [
        [BigInt::one(), BigInt::one()],
        [BigInt::one(), BigInt::zero()],
    ];
    let mut e = n as u64;
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul(&result, &base);
        }
        base = mat_mul(&base, &base);
        e >>= 1;
    }
    Ok(result[0][1].clone())
}

/// Primitive Pythagorean triple `(u^2 - v^2, 2uv, u^2 + v^2)`.
pub fn pythagorean_triple(u: &BigInt, v: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if !v.is_positive() || u <= v {
        return domain(format!("need u > v >= 1, got u = {u}, v = {v}"));
    }
    if !u.gcd(v).is_one() {
        return domain(format!("u = {u} and v = {v} are not coprime"));
    }
    if !(u * v).is_even() {
        return domain(format!("u = {u} and v = {v} are both odd"));
    }
    let (u2, v2) = (u * u, v * v);
    Ok((&u2 - &v2, big(2) * u * v, u2 + v2))
}
