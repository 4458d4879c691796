//! Farey sequences and their extended versions: neighbor tests, neighbor
//! recursions, sections, and Farey approximation of quadratic surds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::contfrac::{QuadraticSurd, Real, SurdQuotients};
use crate::error::{domain, internal, Result};
use crate::intcore::{ext_gcd, Rational};

/// Two consecutive members `left < right` of the extended Farey sequence of
/// the given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyPair {
    pub left: Rational,
    pub right: Rational,
    pub order: BigInt,
}

fn parts(x: &Rational) -> (&BigInt, &BigInt) {
    (x.numer(), x.denom())
}

fn frac(num: BigInt, den: BigInt) -> Rational {
    Rational::new(num, den)
}

fn neighbors_unchecked(x: &Rational, y: &Rational, n: &BigInt) -> bool {
    let (a, b) = parts(x);
    let (a2, b2) = parts(y);
    a2 * b - a * b2 == BigInt::one() && b <= n && b2 <= n && &(b + b2) > n
}

/// Whether `x < y` are adjacent in the extended Farey sequence of order `n`.
pub fn is_neighbors(x: &Rational, y: &Rational, n: &BigInt) -> Result<bool> {
    if x >= y {
        return domain(format!("is_neighbors needs x < y, got {x} and {y}"));
    }
    Ok(neighbors_unchecked(x, y, n))
}

fn require_neighbors(x: &Rational, y: &Rational, n: &BigInt) -> Result<()> {
    if is_neighbors(x, y, n)? {
        Ok(())
    } else {
        domain(format!("{x} and {y} are not neighbors of order {n}"))
    }
}

/// The right neighbor of `a/b` in the sequence of order `n >= b`, given its
/// right neighbor `a*/b*` in the sequence of order `b`.
pub fn right_neighbor(ab: &Rational, upper: &Rational, n: &BigInt) -> Result<Rational> {
    let (a, b) = parts(ab);
    require_neighbors(ab, upper, b)?;
    if n < b {
        return domain(format!("order {n} is below the denominator {b}"));
    }
    let (a_up, b_up) = parts(upper);
    let k = (n - b_up).div_floor(b);
    Ok(frac(a_up + a * &k, b_up + b * &k))
}

/// The left neighbor of `a/b` in the sequence of order `n >= b`, given its
/// left neighbor `a_*/b_*` in the sequence of order `b`.
pub fn left_neighbor(ab: &Rational, lower: &Rational, n: &BigInt) -> Result<Rational> {
    let (a, b) = parts(ab);
    require_neighbors(lower, ab, b)?;
    if n < b {
        return domain(format!("order {n} is below the denominator {b}"));
    }
    let (a_lo, b_lo) = parts(lower);
    let k = (n - b_lo).div_floor(b);
    Ok(frac(a_lo + a * &k, b_lo + b * &k))
}

/// Both neighbors of `a/b` in the extended sequence of order `b`, read off
/// the Euclid trace of `(a, b)` by the parity of its abort index.
pub fn neighbor_seeds(ab: &Rational) -> (Rational, Rational) {
    let (a, b) = parts(ab);
    if b.is_one() {
        return (frac(a - 1, BigInt::one()), frac(a + 1, BigInt::one()));
    }
    let tr = ext_gcd(a, b).expect("denominator is positive");
    let row = &tr.rows[tr.n_star - 1];
    let (s, t) = (row.s.clone(), row.t.clone());
    if tr.n_star % 2 == 0 {
        let right = frac(a - &s, b - &t);
        (frac(s, t), right)
    } else {
        let left = frac(a - &s, b - &t);
        (left, frac(s, t))
    }
}

/// The right neighbor of `a/b` in the extended sequence of order `b`.
pub fn neighbor_seed(ab: &Rational) -> Rational {
    neighbor_seeds(ab).1
}

/// The fraction following the adjacent pair `prev < cur` in order `n`.
pub fn next_in_section(prev: &Rational, cur: &Rational, n: &BigInt) -> Result<Rational> {
    require_neighbors(prev, cur, n)?;
    let (a, b) = parts(prev);
    let (a1, b1) = parts(cur);
    let k = (n + b).div_floor(b1);
    Ok(frac(a1 * &k - a, b1 * &k - b))
}

/// The fraction preceding the adjacent pair `cur < next` in order `n`.
pub fn prev_in_section(cur: &Rational, next: &Rational, n: &BigInt) -> Result<Rational> {
    require_neighbors(cur, next, n)?;
    let (a1, b1) = parts(cur);
    let (a2, b2) = parts(next);
    let k = (n + b2).div_floor(b1);
    Ok(frac(a1 * &k - a2, b1 * &k - b2))
}

/// All members of the extended Farey sequence of order `n` in `[lo, hi]`,
/// ascending.
pub fn section(lo: &Rational, hi: &Rational, n: &BigInt) -> Result<Vec<Rational>> {
    if !n.is_positive() {
        return domain(format!("Farey order must be positive, got {n}"));
    }
    for x in [lo, hi] {
        if x.denom() > n {
            return domain(format!(
                "{x} does not belong to the Farey sequence of order {n}"
            ));
        }
    }
    if lo > hi {
        return domain(format!("empty section: {lo} > {hi}"));
    }
    let mut out = vec![lo.clone()];
    if lo == hi {
        return Ok(out);
    }
    let seed = neighbor_seed(lo);
    let mut cur = right_neighbor(lo, &seed, n)?;
    while &cur <= hi {
        out.push(cur.clone());
        if &cur == hi {
            return Ok(out);
        }
        let len = out.len();
        cur = next_in_section(&out[len - 2], &cur, n)?;
    }
    Err(internal(format!("section walk stepped over {hi}")))
}

/// The two neighbors of order `n` that enclose the irrational `x`.
pub fn farey_approx(x: &Real, n: &BigInt) -> Result<FareyPair> {
    let x = match x {
        Real::Surd(s) => s,
        Real::Rational(r) => return domain(format!("{r} is rational; there is no enclosing pair")),
    };
    farey_approx_surd(x, n)
}

pub fn farey_approx_surd(x: &QuadraticSurd, n: &BigInt) -> Result<FareyPair> {
    if !n.is_positive() {
        return domain(format!("Farey order must be positive, got {n}"));
    }
    // rows[j] = (s_j, t_j); find the largest j >= 1 with t_j < n (j = 1 if n = 1)
    let mut rows = vec![(BigInt::one(), BigInt::zero())];
    let mut prev = (BigInt::zero(), BigInt::one());
    let mut quotients = SurdQuotients::new(x);
    loop {
        let q = quotients.next().expect("endless stream");
        let cur = rows.last().unwrap().clone();
        let next = (&prev.0 + &q * &cur.0, &prev.1 + &q * &cur.1);
        prev = cur;
        let done = rows.len() >= 2 && &next.1 >= n;
        rows.push(next);
        if done {
            break;
        }
    }
    let j = if n.is_one() { 1 } else { rows.len() - 2 };
    let (s_prev, t_prev) = &rows[j - 1];
    let (s_j, t_j) = &rows[j];
    let q_n = (n - t_prev).div_floor(t_j);
    let s_n = s_prev + &q_n * s_j;
    let t_n = t_prev + &q_n * t_j;
    let conv = frac(s_j.clone(), t_j.clone());
    let other = frac(s_n, t_n);
    let (left, right) = if j % 2 == 1 {
        (conv, other)
    } else {
        (other, conv)
    };
    debug_assert!(neighbors_unchecked(&left, &right, n));
    Ok(FareyPair {
        left,
        right,
        order: n.clone(),
    })
}
