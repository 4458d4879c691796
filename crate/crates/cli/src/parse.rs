//! Parsers for numbers written on the command line.
//!
//! A surd is accepted as `sqrt(N)`, as `(sqrt(N)+p)/q` (or with `-p`), or as
//! a raw triple `a,b,D` meaning `(sqrt(D) - b)/(2a)`. The first two forms
//! are rewritten as `(sqrt(k^2 N) + kp)/(kq)` with the smallest `k >= 1` for
//! which `4a | b^2 - D` holds; `k` is reported as the extension factor.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use zahlen::contfrac::{QuadraticSurd, Real};
use zahlen::{Error, Rational, Result};

/// A parsed real number together with the factor its representation was
/// extended by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdSpec {
    pub value: Real,
    pub factor: BigInt,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{token}'")))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[self.pos..];
        let mut len = 0;
        if rest.starts_with(['-', '+']) {
            len = 1;
        }
        let digits = rest[len..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected an integer"));
        }
        len += digits;
        self.pos += len;
        self.text[start..start + len]
            .trim_start_matches('+')
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "malformed integer".into(),
            })
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }
}

/// `p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let mut c = Cursor { text, pos: 0 };
    let r = rational_at(&mut c)?;
    c.finish()?;
    Ok(r)
}

fn rational_at(c: &mut Cursor) -> Result<Rational> {
    let p = c.int()?;
    if c.eat("/") {
        let at = c.pos;
        let q = c.int()?;
        if q.is_zero() {
            return Err(Error::Parse {
                pos: at,
                msg: "zero denominator".into(),
            });
        }
        Ok(Rational::new(p, q))
    } else {
        Ok(Rational::from_integer(p))
    }
}

/// Parses a rational or a quadratic surd.
pub fn parse_surd(text: &str) -> Result<SurdSpec> {
    let mut c = Cursor { text, pos: 0 };
    c.skip_ws();
    let rest = &text[c.pos..];
    if rest.starts_with("sqrt") {
        c.expect("sqrt")?;
        c.expect("(")?;
        let n = radicand(&mut c)?;
        c.expect(")")?;
        c.finish()?;
        return extend(n, BigInt::zero(), BigInt::one());
    }
    if rest.starts_with('(') {
        c.expect("(")?;
        c.expect("sqrt")?;
        c.expect("(")?;
        let n = radicand(&mut c)?;
        c.expect(")")?;
        c.skip_ws();
        let sign_at = c.pos;
        let negative = if c.eat("+") {
            false
        } else if c.eat("-") {
            true
        } else {
            return Err(Error::Parse {
                pos: sign_at,
                msg: "expected '+' or '-'".into(),
            });
        };
        let p = c.int()?;
        let p = if negative { -p } else { p };
        c.expect(")")?;
        c.expect("/")?;
        let at = c.pos;
        let q = c.int()?;
        c.finish()?;
        if q.is_zero() {
            return Err(Error::Parse {
                pos: at,
                msg: "zero denominator".into(),
            });
        }
        return extend(n, p, q);
    }
    if rest.contains(',') {
        let a = c.int()?;
        c.expect(",")?;
        let b = c.int()?;
        c.expect(",")?;
        let d = c.int()?;
        c.finish()?;
        let surd = QuadraticSurd::new(a, b, d)?;
        return Ok(SurdSpec {
            value: Real::Surd(surd),
            factor: BigInt::one(),
        });
    }
    let r = rational_at(&mut c)?;
    c.finish()?;
    Ok(SurdSpec {
        value: Real::Rational(r),
        factor: BigInt::one(),
    })
}

fn radicand(c: &mut Cursor) -> Result<BigInt> {
    let at = c.pos;
    let n = c.int()?;
    if !n.is_positive() {
        return Err(Error::Parse {
            pos: at,
            msg: "radicand must be positive".into(),
        });
    }
    Ok(n)
}

/// `(sqrt(n) + p)/q` as `(sqrt(D) - b)/(2a)`.
fn extend(n: BigInt, p: BigInt, q: BigInt) -> Result<SurdSpec> {
    if zahlen::intcore::is_square(&n) {
        return Err(Error::Domain(format!("sqrt({n}) is rational")));
    }
    let mut k = BigInt::one();
    loop {
        let kq = &k * &q;
        let diff = &k * &k * (&p * &p - &n);
        if (&kq % 2u32).is_zero() && (&diff % (&kq * 2u32)).is_zero() {
            let surd = QuadraticSurd::new(&kq / 2u32, -(&k * &p), &k * &k * &n)?;
            return Ok(SurdSpec {
                value: Real::Surd(surd),
                factor: k,
            });
        }
        k += 1u32;
        if k > q.abs() * 2u32 {
            return Err(zahlen::Error::Internal("no extension factor found".into()));
        }
    }
}
