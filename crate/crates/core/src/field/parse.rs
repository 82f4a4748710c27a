//! Parser for the text form produced by the `Display` impls.
//!
//! A value is a signed sum of terms `coef basis`, where `coef` is an
//! integer, `p/q`, or `(p/q)` and `basis` is one of `φ`, `√φ`, `φ√φ`, `√5`
//! (ASCII spellings `phi`, `sqrtphi`, `sqrt(phi)`, `sqrt5`, `sqrt(5)` are
//! accepted too). Either part may be omitted, and a basis may carry a
//! trailing `/q` divisor, so `√5/2` parses.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{GoldenExt, GoldenScalar, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Basis {
    One,
    Phi,
    SqrtPhi,
    PhiSqrtPhi,
    Sqrt5,
}

// Longest spellings first so prefixes do not shadow them.
const BASIS_SPELLINGS: &[(&str, Basis)] = &[
    ("φ√φ", Basis::PhiSqrtPhi),
    ("phi*sqrt(phi)", Basis::PhiSqrtPhi),
    ("phisqrtphi", Basis::PhiSqrtPhi),
    ("√φ", Basis::SqrtPhi),
    ("sqrt(phi)", Basis::SqrtPhi),
    ("sqrtphi", Basis::SqrtPhi),
    ("√5", Basis::Sqrt5),
    ("sqrt(5)", Basis::Sqrt5),
    ("sqrt5", Basis::Sqrt5),
    ("φ", Basis::Phi),
    ("phi", Basis::Phi),
];

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} in {:?}", self.pos, self.src))
    }

    fn integer(&mut self) -> Option<BigInt> {
        let digits: &str = {
            let r = self.rest();
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            &r[..end]
        };
        if digits.is_empty() {
            return None;
        }
        self.pos += digits.len();
        digits.parse().ok()
    }

    /// `p` or `p/q`, unsigned.
    fn fraction(&mut self) -> Result<Option<Rational>> {
        let Some(num) = self.integer() else {
            return Ok(None);
        };
        self.skip_ws();
        let save = self.pos;
        if self.eat("/") {
            self.skip_ws();
            match self.integer() {
                Some(den) if !den.is_zero() => return Ok(Some(Rational::new(num, den))),
                Some(_) => return Err(Error::DivisionByZero),
                None => {
                    // `/` belongs to something else
                    self.pos = save;
                }
            }
        }
        Ok(Some(Rational::from_integer(num)))
    }

    fn coefficient(&mut self) -> Result<Option<Rational>> {
        if self.eat("(") {
            self.skip_ws();
            let neg = self.eat("-");
            self.skip_ws();
            let r = self.fraction()?.ok_or_else(|| self.err("expected number"))?;
            self.skip_ws();
            if !self.eat(")") {
                return Err(self.err("expected ')'"));
            }
            return Ok(Some(if neg { -r } else { r }));
        }
        self.fraction()
    }

    fn basis(&mut self) -> Option<Basis> {
        for (spelling, basis) in BASIS_SPELLINGS {
            if self.eat(spelling) {
                return Some(*basis);
            }
        }
        None
    }

    fn term(&mut self) -> Result<(Rational, Basis)> {
        let coef = self.coefficient()?;
        self.skip_ws();
        let had_star = self.eat("*");
        self.skip_ws();
        let basis = self.basis();
        if coef.is_none() && basis.is_none() {
            return Err(self.err("expected a term"));
        }
        if had_star && basis.is_none() {
            return Err(self.err("expected basis after '*'"));
        }
        let mut coef = coef.unwrap_or_else(|| Rational::from_integer(1.into()));
        let basis = basis.unwrap_or(Basis::One);
        if basis != Basis::One {
            self.skip_ws();
            let save = self.pos;
            if self.eat("/") {
                self.skip_ws();
                match self.integer() {
                    Some(d) if !d.is_zero() => coef /= Rational::from_integer(d),
                    Some(_) => return Err(Error::DivisionByZero),
                    None => self.pos = save,
                }
            }
        }
        Ok((coef, basis))
    }
}

/// Parse a `GoldenExt` literal.
pub fn parse_ext(src: &str) -> Result<GoldenExt> {
    let mut c = Cursor { src, pos: 0 };
    let mut acc = GoldenExt::zero();
    c.skip_ws();
    if c.peek().is_none() {
        return Err(c.err("empty literal"));
    }
    let mut first = true;
    loop {
        c.skip_ws();
        if c.peek().is_none() {
            break;
        }
        let neg = if c.eat("-") || c.eat("−") {
            true
        } else if c.eat("+") || first {
            false
        } else {
            return Err(c.err("expected '+' or '-'"));
        };
        first = false;
        c.skip_ws();
        let (coef, basis) = c.term()?;
        let coef = if neg { -coef } else { coef };
        let z = Rational::zero;
        let term = match basis {
            Basis::One => GoldenExt::from_scalar(GoldenScalar::new(coef, z())),
            Basis::Phi => GoldenExt::from_scalar(GoldenScalar::new(z(), coef)),
            Basis::Sqrt5 => GoldenExt::from_scalar(GoldenScalar::from_sqrt5_coords(z(), coef)),
            Basis::SqrtPhi => GoldenExt::new(GoldenScalar::zero(), GoldenScalar::new(coef, z())),
            Basis::PhiSqrtPhi => GoldenExt::new(GoldenScalar::zero(), GoldenScalar::new(z(), coef)),
        };
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Parse a `GoldenScalar` literal; fails on a nonzero √φ part.
pub fn parse_scalar(src: &str) -> Result<GoldenScalar> {
    let x = parse_ext(src)?;
    x.as_scalar()
        .cloned()
        .ok_or_else(|| Error::Parse(format!("{src:?} is not in Q(sqrt5)")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn parses_basic_forms() {
        assert_eq!(parse_scalar("1 - φ").unwrap(), GoldenScalar::from_ints(1, -1));
        assert_eq!(parse_scalar("-phi").unwrap(), GoldenScalar::from_ints(0, -1));
        assert_eq!(
            parse_scalar("1/2 + (3/2)φ").unwrap(),
            GoldenScalar::new(rat(1, 2), rat(3, 2))
        );
        assert_eq!(parse_scalar("√5").unwrap(), GoldenScalar::sqrt5());
        assert_eq!(parse_scalar("sqrt5/2").unwrap(), GoldenScalar::new(rat(-1, 2), rat(1, 1)));
        assert_eq!(parse_scalar("0").unwrap(), GoldenScalar::zero());
        assert_eq!(parse_scalar("2*phi").unwrap(), GoldenScalar::from_ints(0, 2));
    }

    #[test]
    fn parses_ext_terms() {
        let x = parse_ext("-√φ + (1/2)φ√φ").unwrap();
        assert_eq!(x.v(), &GoldenScalar::new(rat(-1, 1), rat(1, 2)));
        assert!(x.u().is_zero());
        assert_eq!(parse_ext("sqrt(phi)").unwrap(), GoldenExt::sqrt_phi());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ext("").is_err());
        assert!(parse_ext("1 2").is_err());
        assert!(parse_ext("x").is_err());
        assert!(parse_ext("(1/2").is_err());
        assert_eq!(parse_ext("1/0"), Err(Error::DivisionByZero));
        assert!(parse_scalar("√φ").is_err());
    }
}
