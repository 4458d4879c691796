//! Quadratic residues: Legendre and Jacobi symbols and square roots modulo
//! primes, prime powers and composite moduli.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};
use crate::intcore::{factorize, gcd, is_prime};
use crate::modular::crt;

/// A symbol value in `{-1, 0, 1}`.
pub type Symbol = i8;

fn require_odd_prime(p: &BigInt) -> Result<()> {
    if p.is_odd() && p.is_positive() && is_prime(p) {
        Ok(())
    } else {
        domain(format!("{p} is not an odd prime"))
    }
}

/// `(a|p)` by Euler's criterion.
pub fn legendre(a: &BigInt, p: &BigInt) -> Result<Symbol> {
    require_odd_prime(p)?;
    let r = a.mod_floor(p).modpow(&((p - 1u32) >> 1), p);
    Ok(if r.is_zero() {
        0
    } else if r.is_one() {
        1
    } else {
        -1
    })
}

/// `(a|p)` by Gauss's lemma: the parity of the number of least positive
/// residues of `a, 2a, ..., (p-1)/2 a` above `p/2`.
pub fn legendre_gauss(a: &BigInt, p: &BigInt) -> Result<Symbol> {
    require_odd_prime(p)?;
    if (a % p).is_zero() {
        return domain(format!("{p} divides {a}"));
    }
    let half = (p - 1u32) >> 1;
    let a = a.mod_floor(p);
    let mut t = 0u64;
    let mut r = BigInt::zero();
    let mut k = BigInt::zero();
    while k < half {
        r = (r + &a) % p;
        if &r * 2u32 > *p {
            t += 1;
        }
        k += 1;
    }
    Ok(if t % 2 == 0 { 1 } else { -1 })
}

/// `(P|Q)` for odd `Q >= 1`, by reciprocity; `0` when `gcd(P, Q) > 1`.
pub fn jacobi(p: &BigInt, q: &BigInt) -> Result<Symbol> {
    if !q.is_positive() || q.is_even() {
        return domain(format!(
            "Jacobi symbol needs an odd positive modulus, got {q}"
        ));
    }
    let mut a = p.mod_floor(q);
    let mut n = q.clone();
    let mut sign: Symbol = 1;
    let eight = BigInt::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = (&n % &eight).to_u8().unwrap();
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32) == BigInt::from(3) && (&n % 4u32) == BigInt::from(3) {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { sign } else { 0 })
}

/// Both square roots of `a` modulo the odd prime `p`, `x` and `p - x`, with
/// `x <= p - x`. `None` for a non-residue; `(0, 0)` when `p | a`.
pub fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Result<Option<(BigInt, BigInt)>> {
    let s = legendre(a, p)?;
    let a = a.mod_floor(p);
    if s == 0 {
        return Ok(Some((BigInt::zero(), BigInt::zero())));
    }
    if s == -1 {
        return Ok(None);
    }
    let r8 = (p % 8u32).to_u8().unwrap();
    let x = if r8 % 4 == 3 {
        a.modpow(&((p + 1u32) >> 2), p)
    } else if r8 == 5 {
        let x = a.modpow(&((p + 3u32) >> 3), p);
        if (&x * &x - &a).mod_floor(p).is_zero() {
            x
        } else {
            (x * BigInt::from(2).modpow(&((p - 1u32) >> 2), p)) % p
        }
    } else {
        let mut x = BigInt::one();
        let half = (p - 1u32) >> 1;
        while x <= half && (&x * &x) % p != a {
            x += 1;
        }
        x
    };
    debug_assert!((&x * &x - &a).mod_floor(p).is_zero());
    let y = p - &x;
    Ok(Some(if x <= y { (x, y) } else { (y, x) }))
}

/// Both roots of `a` modulo `p^alpha`, lifted from a root modulo `p` by the
/// quadratically converging step `2 x_n x_{n+1} = x_n^2 + a`.
pub fn lift_sqrt_prime_power(
    a: &BigInt,
    p: &BigInt,
    alpha: u32,
) -> Result<Option<(BigInt, BigInt)>> {
    require_odd_prime(p)?;
    if alpha == 0 {
        return domain("exponent must be at least 1");
    }
    if (a % p).is_zero() {
        return domain(format!("{p} divides {a}"));
    }
    let Some((mut x, _)) = sqrt_mod_prime(a, p)? else {
        return Ok(None);
    };
    let target = p.pow(alpha);
    let mut exp = 1u32;
    while exp < alpha {
        exp = (2 * exp).min(alpha);
        let m = p.pow(exp);
        let inv = crate::modular::mod_inverse(&(&x * 2u32), &m)?.value;
        x = ((&x * &x + a) * inv).mod_floor(&m);
    }
    let x = x.mod_floor(&target);
    debug_assert!((&x * &x - a).mod_floor(&target).is_zero());
    let y = &target - &x;
    Ok(Some(if x <= y { (x, y) } else { (y, x) }))
}

/// All roots of the odd number `a` modulo `2^alpha`, ascending.
pub fn sqrt_mod_pow2(a: &BigInt, alpha: u32) -> Result<Option<Vec<BigInt>>> {
    if a.is_even() {
        return domain(format!("{a} is even"));
    }
    if alpha == 0 {
        return domain("exponent must be at least 1");
    }
    let big = |v: u32| BigInt::from(v);
    match alpha {
        1 => return Ok(Some(vec![big(1)])),
        2 => {
            return Ok((a.mod_floor(&big(4)) == big(1)).then(|| vec![big(1), big(3)]));
        }
        _ => {}
    }
    if a.mod_floor(&big(8)) != big(1) {
        return Ok(None);
    }
    // x^2 = a (mod 2^k) with k = 3 to start; the correction x + λ 2^(k-1)
    // moves it to k + 1
    let mut x = BigInt::one();
    for k in 3..alpha {
        let m = BigInt::one() << k;
        let lambda = ((a - &x * &x) / &m).mod_floor(&big(2));
        x += lambda << (k - 1);
    }
    let m = BigInt::one() << alpha;
    let half = BigInt::one() << (alpha - 1);
    let mut roots = vec![
        x.mod_floor(&m),
        (-&x).mod_floor(&m),
        (&x + &half).mod_floor(&m),
        (-&x + &half).mod_floor(&m),
    ];
    roots.sort();
    debug_assert!(roots.iter().all(|r| (r * r - a).mod_floor(&m).is_zero()));
    Ok(Some(roots))
}

fn require_coprime(a: &BigInt, m: &BigInt) -> Result<()> {
    if !m.is_positive() {
        return domain(format!("modulus must be positive, got {m}"));
    }
    let g = gcd(a, m);
    if g.is_one() {
        Ok(())
    } else {
        domain(format!("{a} and {m} are not coprime (gcd {g})"))
    }
}

/// All `x` in `[0, m)` with `x^2 = a (mod m)`, ascending.
pub fn sqrt_mod(a: &BigInt, m: &BigInt) -> Result<Vec<BigInt>> {
    require_coprime(a, m)?;
    if m.is_one() {
        return Ok(vec![BigInt::zero()]);
    }
    // per prime power: the list of roots and the modulus
    let mut local: Vec<(Vec<BigInt>, BigInt)> = Vec::new();
    for pp in factorize(m)? {
        let q = pp.value();
        let roots = if pp.p == BigInt::from(2) {
            sqrt_mod_pow2(a, pp.alpha)?
        } else {
            lift_sqrt_prime_power(a, &pp.p, pp.alpha)?.map(|(x, y)| vec![x, y])
        };
        match roots {
            Some(r) => local.push((r, q)),
            None => return Ok(Vec::new()),
        }
    }
    let mut out = vec![(BigInt::zero(), BigInt::one())];
    for (roots, q) in &local {
        let mut next = Vec::with_capacity(out.len() * roots.len());
        for (x, n) in &out {
            for r in roots {
                let c = crt(&[(x.clone(), n.clone()), (r.clone(), q.clone())])?;
                next.push((c.value, c.modulus));
            }
        }
        out = next;
    }
    let mut xs: Vec<BigInt> = out.into_iter().map(|(x, _)| x).collect();
    xs.sort();
    xs.dedup();
    Ok(xs)
}

/// The number of roots of `a` modulo `m` by the closed formula
/// `min(4, 2^(max(α,1)-1)) 2^ω(m')` where `m = 2^α m'`, or 0.
pub fn count_sqrt_solutions(a: &BigInt, m: &BigInt) -> Result<BigInt> {
    require_coprime(a, m)?;
    let mut alpha = 0u32;
    let mut odd_primes = 0u32;
    for pp in factorize(m)? {
        if pp.p == BigInt::from(2) {
            alpha = pp.alpha;
        } else {
            if legendre(a, &pp.p)? != 1 {
                return Ok(BigInt::zero());
            }
            odd_primes += 1;
        }
    }
    let need = match alpha {
        0 | 1 => 1u32,
        2 => 4,
        _ => 8,
    };
    if a.mod_floor(&BigInt::from(need)) != BigInt::one() % need {
        return Ok(BigInt::zero());
    }
    let two_part = 1u32 << (alpha.max(1) - 1).min(2);
    Ok(BigInt::from(two_part) << odd_primes)
}

/// The closed congruence criteria for `(a|p) = 1` with
/// `a` in `{-1, ±2, ±3, ±5, ±6}`.
pub fn qr_condition(a: i64, p: &BigInt) -> Result<bool> {
    require_odd_prime(p)?;
    if (BigInt::from(a) % p).is_zero() {
        return domain(format!("{p} divides {a}"));
    }
    let r = |m: u32| p.mod_floor(&BigInt::from(m)).to_u32().unwrap();
    let holds = match a {
        -1 => r(4) == 1,
        2 => matches!(r(8), 1 | 7),
        -2 => matches!(r(8), 1 | 3),
        3 => matches!(r(12), 1 | 11),
        -3 => r(3) == 1,
        5 => matches!(r(10), 1 | 9),
        -5 => matches!(r(20), 1 | 3 | 7 | 9),
        6 => matches!(r(24), 1 | 5 | 19 | 23),
        -6 => matches!(r(24), 1 | 5 | 7 | 11),
        _ => return domain(format!("no closed criterion for a = {a}")),
    };
    Ok(holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intcore::big;

    fn brute(a: i64, m: u64) -> Vec<u64> {
        let a = a.rem_euclid(m as i64) as u64;
        (0..m).filter(|x| x * x % m == a).collect()
    }

    fn small(v: &[BigInt]) -> Vec<u64> {
        v.iter().map(|x| x.to_u64().unwrap()).collect()
    }

    #[test]
    fn symbols() {
        assert_eq!(legendre(&big(-1), &big(13)).unwrap(), 1);
        assert_eq!(legendre(&big(2), &big(7)).unwrap(), 1);
        assert_eq!(legendre(&big(3), &big(5)).unwrap(), -1);
        assert_eq!(legendre(&big(14), &big(7)).unwrap(), 0);
        assert!(legendre(&big(1), &big(9)).is_err());
        assert!(legendre(&big(1), &big(2)).is_err());
        assert_eq!(legendre_gauss(&big(2), &big(7)).unwrap(), 1);
        assert_eq!(legendre_gauss(&big(1), &big(11)).unwrap(), 1);
        assert!(legendre_gauss(&big(7), &big(7)).is_err());
        assert_eq!(jacobi(&big(-6), &big(101)).unwrap(), 1);
        assert_eq!(jacobi(&big(5), &big(1)).unwrap(), 1);
        assert_eq!(jacobi(&big(3), &big(9)).unwrap(), 0);
        assert_eq!(jacobi(&big(2), &big(15)).unwrap(), 1);
        assert!(jacobi(&big(2), &big(10)).is_err());
    }

    #[test]
    fn symbol_agreement() {
        for p in (3..=101).filter(|&p| is_prime(&big(p))) {
            for a in -50..=50 {
                let e = legendre(&big(a), &big(p)).unwrap();
                assert_eq!(jacobi(&big(a), &big(p)).unwrap(), e);
                if a % p != 0 {
                    assert_eq!(legendre_gauss(&big(a), &big(p)).unwrap(), e);
                }
            }
        }
    }

    #[test]
    fn prime_roots() {
        assert_eq!(
            sqrt_mod_prime(&big(-1), &big(5)).unwrap(),
            Some((big(2), big(3)))
        );
        assert_eq!(
            sqrt_mod_prime(&big(13), &big(3)).unwrap(),
            Some((big(1), big(2)))
        );
        assert_eq!(sqrt_mod_prime(&big(3), &big(5)).unwrap(), None);
        assert_eq!(
            sqrt_mod_prime(&big(10), &big(5)).unwrap(),
            Some((big(0), big(0)))
        );
        assert!(sqrt_mod_prime(&big(1), &big(15)).is_err());
        for p in (3..=400u64).filter(|&p| is_prime(&big(p as i64))) {
            for a in 1..p {
                let got = sqrt_mod_prime(&big(a as i64), &big(p as i64)).unwrap();
                let want = brute(a as i64, p);
                match got {
                    Some((x, y)) => assert_eq!(small(&[x, y]), want),
                    None => assert!(want.is_empty()),
                }
            }
        }
    }

    #[test]
    fn lifted_roots() {
        assert_eq!(
            lift_sqrt_prime_power(&big(13), &big(3), 4).unwrap(),
            Some((big(16), big(65)))
        );
        assert_eq!(
            lift_sqrt_prime_power(&big(13), &big(3), 2).unwrap(),
            Some((big(2), big(7)))
        );
        assert_eq!(
            lift_sqrt_prime_power(&big(-1), &big(5), 1).unwrap(),
            sqrt_mod_prime(&big(-1), &big(5)).unwrap()
        );
        assert_eq!(lift_sqrt_prime_power(&big(2), &big(3), 3).unwrap(), None);
        for (p, alpha) in [(3u64, 7u32), (5, 5), (7, 4), (13, 3)] {
            let m = p.pow(alpha);
            for a in 1..200 {
                if a % p == 0 {
                    continue;
                }
                let got = lift_sqrt_prime_power(&big(a as i64), &big(p as i64), alpha).unwrap();
                let want = brute(a as i64, m);
                match got {
                    Some((x, y)) => assert_eq!(small(&[x, y]), want),
                    None => assert!(want.is_empty()),
                }
            }
        }
    }

    #[test]
    fn power_of_two_roots() {
        assert_eq!(
            sqrt_mod_pow2(&big(13), 2).unwrap(),
            Some(vec![big(1), big(3)])
        );
        assert_eq!(sqrt_mod_pow2(&big(3), 3).unwrap(), None);
        assert_eq!(sqrt_mod_pow2(&big(5), 1).unwrap(), Some(vec![big(1)]));
        assert!(sqrt_mod_pow2(&big(4), 3).is_err());
        for alpha in 1..=11u32 {
            let m = 1u64 << alpha;
            for a in (1..m as i64).step_by(2) {
                let got = sqrt_mod_pow2(&big(a), alpha).unwrap().unwrap_or_default();
                assert_eq!(small(&got), brute(a, m), "a = {a}, alpha = {alpha}");
            }
        }
        assert_eq!(
            small(&sqrt_mod_pow2(&big(17), 5).unwrap().unwrap()),
            [7, 9, 23, 25]
        );
    }

    #[test]
    fn composite_roots() {
        assert_eq!(
            small(&sqrt_mod(&big(13), &big(324)).unwrap()),
            [65, 97, 227, 259]
        );
        assert_eq!(
            small(&sqrt_mod(&big(-1), &big(65)).unwrap()),
            [8, 18, 47, 57]
        );
        assert!(sqrt_mod(&big(2), &big(3)).unwrap().is_empty());
        assert!(sqrt_mod(&big(6), &big(9)).is_err());
        assert_eq!(count_sqrt_solutions(&big(1), &big(360)).unwrap(), big(16));
        assert_eq!(count_sqrt_solutions(&big(13), &big(324)).unwrap(), big(4));
        assert_eq!(count_sqrt_solutions(&big(1), &big(2)).unwrap(), big(1));
        for m in 1..=300u64 {
            for a in 0..m as i64 {
                if num_integer::gcd(a as u64, m) != 1 {
                    continue;
                }
                let want = brute(a, m);
                assert_eq!(small(&sqrt_mod(&big(a), &big(m as i64)).unwrap()), want);
                assert_eq!(
                    count_sqrt_solutions(&big(a), &big(m as i64)).unwrap(),
                    big(want.len() as i64)
                );
            }
        }
    }

    #[test]
    fn closed_criteria() {
        assert!(qr_condition(-5, &big(23)).unwrap());
        assert!(qr_condition(6, &big(5)).unwrap());
        assert!(qr_condition(-2, &big(11)).unwrap());
        assert!(qr_condition(3, &big(3)).is_err());
        assert!(qr_condition(7, &big(11)).is_err());
        for p in (3..=997).filter(|&p| is_prime(&big(p))) {
            for a in [-1, 2, -2, 3, -3, 5, -5, 6, -6] {
                if a % p == 0 {
                    continue;
                }
                assert_eq!(
                    qr_condition(a, &big(p)).unwrap(),
                    legendre(&big(a), &big(p)).unwrap() == 1,
                    "a = {a}, p = {p}"
                );
            }
        }
    }
}
