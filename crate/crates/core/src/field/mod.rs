//! Exact arithmetic in Q(√5) and its quadratic extension Q(√5)(√φ).
//!
//! [`GoldenScalar`] stores `a + b·φ` with rational `a`, `b`; multiplication
//! reduces with φ² = φ + 1 and √5 is the element `-1 + 2φ`.
//! [`GoldenExt`] stores `u + v·√φ` with `u`, `v` golden scalars and
//! (√φ)² = φ. Both keep canonical form (reduced big rationals), so derived
//! equality is mathematical equality.

mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use parse::{parse_ext, parse_scalar};

/// Arbitrary precision rational.
pub type Rational = BigRational;

/// φ = (1 + √5)/2 at double precision.
pub const PHI_F64: f64 = 1.618_033_988_749_895;

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn rat_to_f64(r: &Rational) -> f64 {
    // Ratio::to_f64 handles big numerators/denominators without overflowing
    r.to_f64().unwrap_or(f64::NAN)
}

/// Element `a + b·φ` of Q(√5).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenScalar {
    a: Rational,
    b: Rational,
}

impl GoldenScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(rat_int(a), rat_int(b))
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }

    pub fn integer(n: i64) -> Self {
        Self::from_ints(n, 0)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn phi() -> Self {
        Self::from_ints(0, 1)
    }

    /// √5 = 2φ − 1.
    pub fn sqrt5() -> Self {
        Self::from_ints(-1, 2)
    }

    /// Rational coefficient of 1.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Rational coefficient of φ.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.is_integer()
    }

    /// Coordinates `(c, d)` with `self = c + d·√5`.
    pub fn sqrt5_coords(&self) -> (Rational, Rational) {
        let half = rat(1, 2);
        (&self.a + &self.b * &half, &self.b * &half)
    }

    /// Build `c + d·√5`.
    pub fn from_sqrt5_coords(c: Rational, d: Rational) -> Self {
        // c + d(2φ − 1) = (c − d) + 2dφ
        Self::new(&c - &d, d * rat_int(2))
    }

    /// Galois conjugate: φ ↦ 1 − φ.
    pub fn conjugate(&self) -> Self {
        Self::new(&self.a + &self.b, -self.b.clone())
    }

    /// Field norm `a² + ab − b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.a * r, &self.b * r)
    }

    pub fn checked_inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv_n = n.recip();
        Ok(self.conjugate().scale(&inv_n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.checked_inv()?)
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.checked_inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Exact sign under the real embedding φ ↦ (1 + √5)/2.
    ///
    /// `a + bφ = ((2a + b) + b√5)/2`; with `s = 2a + b`, the sign of
    /// `s + b√5` follows from the signs of `s`, `b` and, when they differ,
    /// from comparing `s²` with `5b²`.
    pub fn signum(&self) -> i32 {
        let s = &self.a * rat_int(2) + &self.b;
        let t = &self.b;
        let ss = sign_of(&s);
        let st = sign_of(t);
        if ss >= 0 && st >= 0 {
            return if ss == 0 && st == 0 { 0 } else { 1 };
        }
        if ss <= 0 && st <= 0 {
            return -1;
        }
        let lhs = &s * &s;
        let rhs = t * t * rat_int(5);
        let cmp = match lhs.cmp(&rhs) {
            Ordering::Greater => 1,
            Ordering::Less => -1,
            Ordering::Equal => 0,
        };
        // s > 0 > t: sign(s² − 5t²); s < 0 < t: sign(5t² − s²)
        if ss > 0 {
            cmp
        } else {
            -cmp
        }
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * PHI_F64
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for GoldenScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenScalar {
    /// Real-embedding order.
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl From<i64> for GoldenScalar {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<Rational> for GoldenScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a GoldenScalar> for &'a GoldenScalar {
    type Output = GoldenScalar;
    fn add(self, rhs: &GoldenScalar) -> GoldenScalar {
        GoldenScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a GoldenScalar> for &'a GoldenScalar {
    type Output = GoldenScalar;
    fn sub(self, rhs: &GoldenScalar) -> GoldenScalar {
        GoldenScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a GoldenScalar> for &'a GoldenScalar {
    type Output = GoldenScalar;
    fn mul(self, rhs: &GoldenScalar) -> GoldenScalar {
        // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ
        let bd = &self.b * &rhs.b;
        GoldenScalar::new(
            &self.a * &rhs.a + &bd,
            &self.a * &rhs.b + &self.b * &rhs.a + bd,
        )
    }
}

impl Neg for &GoldenScalar {
    type Output = GoldenScalar;
    fn neg(self) -> GoldenScalar {
        GoldenScalar::new(-self.a.clone(), -self.b.clone())
    }
}

/// Element `u + v·√φ` with `u`, `v` in Q(√5).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenExt {
    u: GoldenScalar,
    v: GoldenScalar,
}

impl GoldenExt {
    pub fn new(u: GoldenScalar, v: GoldenScalar) -> Self {
        Self { u, v }
    }

    pub fn from_scalar(u: GoldenScalar) -> Self {
        Self::new(u, GoldenScalar::zero())
    }

    pub fn integer(n: i64) -> Self {
        Self::from_scalar(GoldenScalar::integer(n))
    }

    /// `a + b·φ` with integer coefficients, no √φ part.
    pub fn from_ints_phi(a: i64, b: i64) -> Self {
        Self::from_scalar(GoldenScalar::from_ints(a, b))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn phi() -> Self {
        Self::from_scalar(GoldenScalar::phi())
    }

    pub fn sqrt5() -> Self {
        Self::from_scalar(GoldenScalar::sqrt5())
    }

    pub fn sqrt_phi() -> Self {
        Self::new(GoldenScalar::zero(), GoldenScalar::one())
    }

    pub fn u(&self) -> &GoldenScalar {
        &self.u
    }

    pub fn v(&self) -> &GoldenScalar {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.v.is_zero() && self.u == GoldenScalar::one()
    }

    /// `Some` iff the element lies in Q(√5).
    pub fn as_scalar(&self) -> Option<&GoldenScalar> {
        self.v.is_zero().then_some(&self.u)
    }

    /// Conjugate over Q(√5): √φ ↦ −√φ.
    pub fn conjugate(&self) -> Self {
        Self::new(self.u.clone(), -&self.v)
    }

    /// Relative norm `u² − v²φ` down to Q(√5).
    pub fn norm(&self) -> GoldenScalar {
        let vv = &self.v * &self.v;
        &(&self.u * &self.u) - &(&vv * &GoldenScalar::phi())
    }

    pub fn scale(&self, s: &GoldenScalar) -> Self {
        Self::new(&self.u * s, &self.v * s)
    }

    pub fn checked_inv(&self) -> Result<Self> {
        // √φ ∉ Q(√5), so the norm vanishes only at zero
        let inv_n = self.norm().checked_inv()?;
        Ok(self.conjugate().scale(&inv_n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.checked_inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.checked_inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn to_f64(&self) -> f64 {
        self.u.to_f64() + self.v.to_f64() * PHI_F64.sqrt()
    }
}

impl From<GoldenScalar> for GoldenExt {
    fn from(s: GoldenScalar) -> Self {
        Self::from_scalar(s)
    }
}

impl From<i64> for GoldenExt {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl<'a> Add<&'a GoldenExt> for &'a GoldenExt {
    type Output = GoldenExt;
    fn add(self, rhs: &GoldenExt) -> GoldenExt {
        GoldenExt::new(&self.u + &rhs.u, &self.v + &rhs.v)
    }
}

impl<'a> Sub<&'a GoldenExt> for &'a GoldenExt {
    type Output = GoldenExt;
    fn sub(self, rhs: &GoldenExt) -> GoldenExt {
        GoldenExt::new(&self.u - &rhs.u, &self.v - &rhs.v)
    }
}

impl<'a> Mul<&'a GoldenExt> for &'a GoldenExt {
    type Output = GoldenExt;
    fn mul(self, rhs: &GoldenExt) -> GoldenExt {
        let vv = &self.v * &rhs.v;
        GoldenExt::new(
            &(&self.u * &rhs.u) + &(&vv * &GoldenScalar::phi()),
            &(&self.u * &rhs.v) + &(&self.v * &rhs.u),
        )
    }
}

impl Neg for &GoldenExt {
    type Output = GoldenExt;
    fn neg(self) -> GoldenExt {
        GoldenExt::new(-&self.u, -&self.v)
    }
}

macro_rules! forward_owned_binops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

forward_owned_binops!(GoldenScalar);
forward_owned_binops!(GoldenExt);

/// One signed term `coef · basis` of the text form.
fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    coef: &Rational,
    basis: &str,
) -> fmt::Result {
    if coef.is_zero() {
        return Ok(());
    }
    let neg = coef.is_negative();
    let mag = coef.abs();
    if *first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    *first = false;
    if basis.is_empty() {
        return write!(f, "{mag}");
    }
    if mag.is_one() {
        f.write_str(basis)
    } else if mag.is_integer() {
        write!(f, "{mag}{basis}")
    } else {
        write!(f, "({mag}){basis}")
    }
}

impl fmt::Display for GoldenScalar {
    /// `p/q + (r/s)φ`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        write_term(f, &mut first, &self.a, "")?;
        write_term(f, &mut first, &self.b, "φ")
    }
}

impl fmt::Display for GoldenExt {
    /// `p/q + (r/s)φ + (t/w)√φ + (x/y)φ√φ`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        write_term(f, &mut first, self.u.a(), "")?;
        write_term(f, &mut first, self.u.b(), "φ")?;
        write_term(f, &mut first, self.v.a(), "√φ")?;
        write_term(f, &mut first, self.v.b(), "φ√φ")
    }
}

/// Render a golden scalar in the `c + d√5` basis.
pub fn format_sqrt5(x: &GoldenScalar) -> String {
    struct Sqrt5<'a>(&'a GoldenScalar);
    impl fmt::Display for Sqrt5<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.0.is_zero() {
                return f.write_str("0");
            }
            let (c, d) = self.0.sqrt5_coords();
            let mut first = true;
            write_term(f, &mut first, &c, "")?;
            write_term(f, &mut first, &d, "√5")
        }
    }
    Sqrt5(x).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(a: (i64, i64), b: (i64, i64)) -> GoldenScalar {
        GoldenScalar::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = GoldenScalar::phi();
        assert_eq!(&phi * &phi, GoldenScalar::from_ints(1, 1));
    }

    #[test]
    fn phi_minus_inverse_is_one() {
        let phi = GoldenScalar::phi();
        let inv = phi.checked_inv().unwrap();
        assert_eq!(&phi - &inv, GoldenScalar::one());
    }

    #[test]
    fn sqrt5_squares_to_five() {
        let s = GoldenScalar::sqrt5();
        assert_eq!(&s * &s, GoldenScalar::integer(5));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let x = GoldenScalar::phi();
        assert_eq!(
            x.checked_div(&GoldenScalar::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(GoldenExt::zero().checked_inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn signs() {
        assert_eq!(GoldenScalar::from_ints(1, -1).signum(), -1);
        assert_eq!(GoldenScalar::zero().signum(), 0);
        assert_eq!(GoldenScalar::sqrt5().signum(), 1);
        // 1/φ − 0.618 > 0 but 1/φ − 0.6181 < 0
        let inv = GoldenScalar::phi().checked_inv().unwrap();
        assert_eq!((&inv - &gs((618, 1000), (0, 1))).signum(), 1);
        assert_eq!((&inv - &gs((6181, 10000), (0, 1))).signum(), -1);
        // 2φ − √5 − 1 = 0 exactly
        let z = &(&GoldenScalar::from_ints(0, 2) - &GoldenScalar::sqrt5()) - &GoldenScalar::one();
        assert_eq!(z.signum(), 0);
    }

    #[test]
    fn sqrt_phi_squared_is_phi() {
        let r = GoldenExt::sqrt_phi();
        assert_eq!(&r * &r, GoldenExt::phi());
    }

    #[test]
    fn u_denominator_inverse_pair() {
        let two_sqrt_phi = GoldenExt::new(GoldenScalar::zero(), GoldenScalar::integer(2));
        let inv = two_sqrt_phi.checked_inv().unwrap();
        assert_eq!(&inv * &two_sqrt_phi, GoldenExt::one());
        assert!((inv.to_f64() - 0.393_075_688_878_482).abs() < 1e-12);
    }

    #[test]
    fn corner_entry_square() {
        // (−φ²/(2√φ))² = φ⁴/(4φ) = φ³/4
        let two_sqrt_phi = GoldenExt::new(GoldenScalar::zero(), GoldenScalar::integer(2));
        let phi2 = GoldenExt::from_ints_phi(1, 1);
        let x = (-&phi2).checked_div(&two_sqrt_phi).unwrap();
        let sq = &x * &x;
        let phi3_over_4 = GoldenExt::from_scalar(GoldenScalar::new(rat(1, 4), rat(2, 4)));
        assert_eq!(sq, phi3_over_4);
        let float = (PHI_F64.powi(2) / (2.0 * PHI_F64.sqrt())).powi(2);
        assert!((sq.to_f64() - float).abs() < 1e-12);
    }

    #[test]
    fn float_bridge() {
        assert!((GoldenExt::phi().to_f64() - 1.618_033_988_749_895).abs() < 1e-12);
        assert!((GoldenExt::sqrt5().to_f64() - 2.236_067_977_499_79).abs() < 1e-12);
    }

    #[test]
    fn display_forms() {
        assert_eq!(GoldenScalar::from_ints(1, -1).to_string(), "1 - φ");
        assert_eq!(gs((1, 2), (3, 2)).to_string(), "1/2 + (3/2)φ");
        assert_eq!(GoldenScalar::zero().to_string(), "0");
        assert_eq!(GoldenScalar::from_ints(0, -2).to_string(), "-2φ");
        let x = GoldenExt::new(GoldenScalar::zero(), gs((-1, 1), (1, 2)));
        assert_eq!(x.to_string(), "-√φ + (1/2)φ√φ");
        assert_eq!(format_sqrt5(&GoldenScalar::sqrt5()), "√5");
        assert_eq!(format_sqrt5(&GoldenScalar::from_ints(2, 1)), "5/2 + (1/2)√5");
    }

    #[test]
    fn sqrt5_coordinates_round_trip() {
        let x = gs((3, 7), (-5, 11));
        let (c, d) = x.sqrt5_coords();
        assert_eq!(GoldenScalar::from_sqrt5_coords(c, d), x);
    }

    #[test]
    fn powers() {
        let phi = GoldenScalar::phi();
        // φ⁴ = 3φ + 2
        assert_eq!(phi.pow(4).unwrap(), GoldenScalar::from_ints(2, 3));
        assert_eq!(&phi.pow(-3).unwrap() * &phi.pow(3).unwrap(), GoldenScalar::one());
        assert_eq!(phi.pow(0).unwrap(), GoldenScalar::one());
    }
}
