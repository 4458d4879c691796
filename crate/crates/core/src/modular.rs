//! Residue classes: powers, inverses, the Chinese remainder theorem,
//! multiplicative orders and primitive roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arithfun::phi;
use crate::error::{domain, Error, Result};
use crate::intcore::{bezout, factorize, gcd};

/// A class `[value]_n` with `0 <= value < n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    pub value: BigInt,
    pub modulus: BigInt,
}

impl Residue {
    pub fn new(a: &BigInt, n: &BigInt) -> Result<Self> {
        require_modulus(n)?;
        Ok(Residue {
            value: a.mod_floor(n),
            modulus: n.clone(),
        })
    }

    /// The representative in `(-n/2, n/2]`.
    pub fn symmetric(&self) -> BigInt {
        if &self.value * 2u32 > self.modulus {
            &self.value - &self.modulus
        } else {
            self.value.clone()
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

fn require_modulus(n: &BigInt) -> Result<()> {
    if n.is_positive() {
        Ok(())
    } else {
        domain(format!("modulus must be at least 1, got {n}"))
    }
}

/// `a^e mod n`; a negative exponent goes through the inverse.
pub fn mod_pow(a: &BigInt, e: &BigInt, n: &BigInt) -> Result<Residue> {
    require_modulus(n)?;
    let base = if e.is_negative() {
        mod_inverse(a, n)?.value
    } else {
        a.mod_floor(n)
    };
    Ok(Residue {
        value: base.modpow(&e.abs(), n),
        modulus: n.clone(),
    })
}

/// The inverse of `a` modulo `n`.
pub fn mod_inverse(a: &BigInt, n: &BigInt) -> Result<Residue> {
    require_modulus(n)?;
    let (g, x, _) = bezout(a, n)?;
    if !g.is_one() {
        return Err(Error::NotInvertible {
            value: a.clone(),
            modulus: n.clone(),
            gcd: g,
        });
    }
    Residue::new(&x, n)
}

/// The common solution of `x = a_i (mod n_i)` for pairwise coprime moduli.
pub fn crt(congruences: &[(BigInt, BigInt)]) -> Result<Residue> {
    for (_, n) in congruences {
        require_modulus(n)?;
    }
    for (i, (_, ni)) in congruences.iter().enumerate() {
        for (_, nj) in &congruences[i + 1..] {
            let g = gcd(ni, nj);
            if !g.is_one() {
                return domain(format!("moduli {ni} and {nj} are not coprime (gcd {g})"));
            }
        }
    }
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (a, n) in congruences {
        // x + m*k = a (mod n)
        let inv = mod_inverse(&m, n)?.value;
        let k = ((a - &x) * inv).mod_floor(n);
        x += &m * k;
        m *= n;
    }
    Residue::new(&x, &m)
}

/// The multiplicative order of `a` modulo `n`.
pub fn order(a: &BigInt, n: &BigInt) -> Result<BigInt> {
    require_modulus(n)?;
    let g = gcd(a, n);
    if !g.is_one() {
        return domain(format!("{a} is not a unit modulo {n} (gcd {g})"));
    }
    let a = a.mod_floor(n);
    let mut h = phi(n)?;
    for pp in factorize(&h.clone())? {
        for _ in 0..pp.alpha {
            let smaller = &h / &pp.p;
            if a.modpow(&smaller, n) == BigInt::one() % n {
                h = smaller;
            } else {
                break;
            }
        }
    }
    Ok(h)
}

/// Whether `n` is one of `1, 2, 4, p^k, 2p^k` with `p` an odd prime.
pub fn has_primitive_root(n: &BigInt) -> bool {
    if !n.is_positive() {
        return false;
    }
    if *n <= BigInt::from(4) {
        return true;
    }
    let odd = if n.is_even() { n / 2 } else { n.clone() };
    if odd.is_even() {
        return false;
    }
    let fac = factorize(&odd).unwrap();
    fac.len() == 1
}

pub fn is_primitive_root(a: &BigInt, n: &BigInt) -> Result<bool> {
    require_modulus(n)?;
    if n.is_one() {
        return Ok(true);
    }
    if !gcd(a, n).is_one() {
        return Ok(false);
    }
    let ph = phi(n)?;
    let a = a.mod_floor(n);
    for pp in factorize(&ph)? {
        if a.modpow(&(&ph / &pp.p), n).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The smallest positive primitive root, `0` for `n = 1`, `None` outside the
/// admissible family.
pub fn primitive_root(n: &BigInt) -> Result<Option<BigInt>> {
    require_modulus(n)?;
    if n.is_one() {
        return Ok(Some(BigInt::zero()));
    }
    if !has_primitive_root(n) {
        return Ok(None);
    }
    let mut a = BigInt::one();
    while &a < n {
        if is_primitive_root(&a, n)? {
            return Ok(Some(a));
        }
        a += 1;
    }
    Err(crate::error::internal(format!(
        "no primitive root found modulo {n}"
    )))
}

/// A primitive root built the way the existence proof does: a root `g`
/// modulo `p`, replaced by `g + p` when `g^(p-1) = 1 (mod p^2)`, then made
/// odd for the modulus `2p^k`.
pub fn construct_primitive_root(n: &BigInt) -> Result<Option<BigInt>> {
    require_modulus(n)?;
    match n.to_u64() {
        Some(1) => return Ok(Some(BigInt::zero())),
        Some(2) => return Ok(Some(BigInt::one())),
        Some(4) => return Ok(Some(BigInt::from(3))),
        _ => {}
    }
    if !has_primitive_root(n) {
        return Ok(None);
    }
    let doubled = n.is_even();
    let odd = if doubled { n / 2 } else { n.clone() };
    let p = factorize(&odd)?[0].p.clone();
    let g = primitive_root(&p)?.expect("primes have primitive roots");
    let p2 = &p * &p;
    let g = if g.modpow(&(&p - 1), &p2).is_one() {
        g + &p
    } else {
        g
    };
    let g = g.mod_floor(&odd);
    let g = if doubled && g.is_even() { g + &odd } else { g };
    Ok(Some(g))
}

/// The units `1 <= a < n` coprime to `n`; `{0}` for `n = 1`.
pub fn reduced_residues(n: &BigInt) -> Result<Vec<BigInt>> {
    require_modulus(n)?;
    if n.is_one() {
        return Ok(vec![BigInt::zero()]);
    }
    let mut out = Vec::new();
    let mut a = BigInt::one();
    while &a < n {
        if gcd(&a, n).is_one() {
            out.push(a.clone());
        }
        a += 1;
    }
    Ok(out)
}

pub fn complete_residues(n: &BigInt) -> Result<Vec<BigInt>> {
    require_modulus(n)?;
    let mut out = Vec::new();
    let mut a = BigInt::zero();
    while &a < n {
        out.push(a.clone());
        a += 1;
    }
    Ok(out)
}

/// `(n-1)! mod n`.
pub fn factorial_mod(n: &BigInt) -> Result<BigInt> {
    require_modulus(n)?;
    let mut acc = BigInt::one() % n;
    let mut k = BigInt::from(2);
    while &k < n {
        acc = (acc * &k) % n;
        k += 1;
    }
    Ok(acc)
}

/// Wilson's criterion `(n-1)! = -1 (mod n)`.
pub fn wilson_holds(n: &BigInt) -> Result<bool> {
    Ok(factorial_mod(n)? == (n - 1u32).mod_floor(n))
}
