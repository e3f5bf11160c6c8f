//! Exact scalars: arbitrary-precision rationals and elements of a single
//! quadratic extension ℚ(√d).
//!
//! Every polynomial type in this crate is generic over [`Field`], which is
//! implemented by [`Rat`] and [`QuadExt`]. A `QuadExt` value carries its own
//! radicand; combining two values with different radicands is an
//! incompatible-field error (the `checked_*` methods report it, the operator
//! impls panic).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::uni::{self, UniPoly};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a rational, if it has one.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Splits `d` as `k² · s` with `s` squarefree (sign kept on `s`).
pub fn squarefree_split(d: i64) -> (i64, i64) {
    assert!(d != 0, "squarefree_split of zero");
    let sign = d.signum();
    let mut rest = d.unsigned_abs();
    let mut k: u64 = 1;
    let mut s: u64 = 1;
    let mut p: u64 = 2;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    s *= rest;
    (sign * s as i64, k as i64)
}

/// Squarefree integer `s` with `r = q² · s` for some rational `q`.
pub fn rat_squarefree_class(r: &Rat) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    // r = n/d ~ n·d (mod squares)
    let nd: BigInt = r.numer() * r.denom();
    let v: i64 = i64::try_from(&nd).ok()?;
    Some(squarefree_split(v).0)
}

/// The exact coefficient fields used throughout the crate.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rat(r: Rat) -> Self;

    /// `Some` when the value is rational.
    fn as_rat(&self) -> Option<Rat>;

    /// Radicand of the quadratic field the value lives in, `None` for ℚ.
    fn radicand(&self) -> Option<i64> {
        None
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rat(int(n))
    }

    /// Square root inside the field ℚ(√d) (or ℚ when `field` is `None`).
    fn sqrt_in(&self, field: Option<i64>) -> Option<Self>;

    /// Monic gcd of two univariate polynomials.
    fn poly_gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> UniPoly<Self> {
        uni::euclid_gcd(a, b)
    }

    /// Rendering split: (is negative, magnitude text, needs parentheses
    /// when used as a product factor).
    fn render_parts(&self) -> (bool, String, bool);
}

impl Field for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }

    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }

    fn sqrt_in(&self, _field: Option<i64>) -> Option<Self> {
        rat_sqrt(self)
    }

    fn poly_gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> UniPoly<Self> {
        uni::prs_gcd(a, b)
    }

    fn render_parts(&self) -> (bool, String, bool) {
        (self.is_negative(), self.abs().to_string(), false)
    }
}

/// `a + b·√d` with `d` squarefree and `d ∉ {0, 1}`. Values with `b = 0`
/// forget their radicand and compare equal to plain rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadExt {
    a: Rat,
    b: Rat,
    d: Option<i64>,
}

impl QuadExt {
    pub fn rational(a: Rat) -> Self {
        QuadExt { a, b: Rat::zero(), d: None }
    }

    /// Builds `a + b√d`, reducing `d` to its squarefree part. `d = 0` is
    /// rejected.
    pub fn normalize(a: Rat, b: Rat, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("radicand must be nonzero".into()));
        }
        let (s, k) = squarefree_split(d);
        let b = b * int(k);
        if s == 1 {
            return Ok(QuadExt::rational(a + b));
        }
        Ok(Self::raw(a, b, Some(s)))
    }

    /// `√d` itself.
    pub fn sqrt_of(d: i64) -> Result<Self> {
        Self::normalize(Rat::zero(), Rat::one(), d)
    }

    fn raw(a: Rat, b: Rat, d: Option<i64>) -> Self {
        if b.is_zero() {
            QuadExt { a, b, d: None }
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn re(&self) -> &Rat {
        &self.a
    }

    pub fn im(&self) -> &Rat {
        &self.b
    }

    pub fn d(&self) -> Option<i64> {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d.is_none()
    }

    /// `a − b√d`.
    pub fn conjugate(&self) -> Self {
        Self::raw(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rat {
        match self.d {
            None => &self.a * &self.a,
            Some(d) => &self.a * &self.a - int(d) * &self.b * &self.b,
        }
    }

    fn join(x: Option<i64>, y: Option<i64>) -> Result<Option<i64>> {
        match (x, y) {
            (Some(p), Some(q)) if p != q => Err(Error::IncompatibleField(p, q)),
            (Some(p), _) | (_, Some(p)) => Ok(Some(p)),
            _ => Ok(None),
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let d = Self::join(self.d, o.d)?;
        Ok(Self::raw(&self.a + &o.a, &self.b + &o.b, d))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        let d = Self::join(self.d, o.d)?;
        Ok(Self::raw(&self.a - &o.a, &self.b - &o.b, d))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let d = Self::join(self.d, o.d)?;
        let dd = int(d.unwrap_or(0));
        let a = &self.a * &o.a + dd * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(Self::raw(a, b, d))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        let n = o.norm();
        let num = self.checked_mul(&o.conjugate())?;
        Ok(Self::raw(num.a / &n, num.b / &n, num.d))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        match self.d {
            None => (a, 0.0),
            Some(d) if d > 0 => (a + b * (d as f64).sqrt(), 0.0),
            Some(d) => (a, b * (-(d as f64)).sqrt()),
        }
    }
}

impl From<Rat> for QuadExt {
    fn from(r: Rat) -> Self {
        QuadExt::rational(r)
    }
}

macro_rules! quad_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: QuadExt) -> QuadExt {
                self.$checked(&o).expect("quadratic field arithmetic")
            }
        }
        impl<'a> $tr<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &QuadExt) -> QuadExt {
                self.$checked(o).expect("quadratic field arithmetic")
            }
        }
    };
}

quad_op!(Add, add, checked_add);
quad_op!(Sub, sub, checked_sub);
quad_op!(Mul, mul, checked_mul);
quad_op!(Div, div, checked_div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        Self::raw(-self.a, -self.b, self.d)
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::rational(Rat::one())
    }
}

impl Field for QuadExt {
    fn from_rat(r: Rat) -> Self {
        QuadExt::rational(r)
    }

    fn as_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.a.clone())
    }

    fn radicand(&self) -> Option<i64> {
        self.d
    }

    fn conj(&self) -> Self {
        self.conjugate()
    }

    fn sqrt_in(&self, field: Option<i64>) -> Option<Self> {
        let field = Self::join(self.d, field).ok()?;
        if self.is_rational() {
            if let Some(r) = rat_sqrt(&self.a) {
                return Some(QuadExt::rational(r));
            }
            let d = field?;
            let s = rat_sqrt(&(&self.a / int(d)))?;
            return Some(Self::raw(Rat::zero(), s, Some(d)));
        }
        let d = int(self.d?);
        let s = rat_sqrt(&self.norm())?;
        let two = int(2);
        for cand in [(&self.a + &s) / &two, (&self.a - &s) / &two] {
            if let Some(p) = rat_sqrt(&cand) {
                if p.is_zero() {
                    continue;
                }
                let q = &self.b / (&two * &p);
                if &p * &p + &d * &q * &q == self.a {
                    return Some(Self::raw(p, q, self.d));
                }
            }
        }
        None
    }

    fn render_parts(&self) -> (bool, String, bool) {
        if self.is_rational() {
            return self.a.render_parts();
        }
        if self.a.is_zero() {
            let neg = self.b.is_negative();
            let m = QuadExt::raw(Rat::zero(), self.b.abs(), self.d);
            return (neg, m.to_string(), false);
        }
        (false, self.to_string(), true)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.d else {
            return write!(f, "{}", self.a);
        };
        let root = format!("sqrt({d})");
        let b_abs = self.b.abs();
        let radical = if b_abs.is_one() { root } else { format!("{b_abs}*{root}") };
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{radical}"),
            (true, true) => write!(f, "-{radical}"),
            (false, false) => write!(f, "{} + {radical}", self.a),
            (false, true) => write!(f, "{} - {radical}", self.a),
        }
    }
}

/// Integer-valued check for rationals.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Least common multiple of the denominators of `values`.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_absorbs_square_factors() {
        let x = QuadExt::normalize(int(1), int(1), 8).unwrap();
        assert_eq!(x, QuadExt::normalize(int(1), int(2), 2).unwrap());
        assert_eq!(x.to_string(), "1 + 2*sqrt(2)");
        assert_eq!(QuadExt::normalize(int(3), int(0), -1).unwrap(), QuadExt::rational(int(3)));
        assert_eq!(QuadExt::normalize(int(0), int(1), 9).unwrap(), QuadExt::rational(int(3)));
        assert!(QuadExt::normalize(int(1), int(1), 0).is_err());
    }

    #[test]
    fn conjugate_and_norm() {
        let i = QuadExt::sqrt_of(-1).unwrap();
        let x = QuadExt::rational(int(1)) + i.clone();
        assert_eq!(x.conjugate(), QuadExt::rational(int(1)) - i);
        assert_eq!(QuadExt::rational(int(5)).conjugate(), QuadExt::rational(int(5)));
        let y = QuadExt::normalize(int(2), int(3), 2).unwrap();
        assert_eq!(&y * &y.conjugate(), QuadExt::rational(int(-14)));
        assert_eq!(y.norm(), int(-14));
    }

    #[test]
    fn mixed_radicals_are_rejected() {
        let r2 = QuadExt::sqrt_of(2).unwrap();
        let r3 = QuadExt::sqrt_of(3).unwrap();
        assert!(matches!(r2.checked_add(&r3), Err(Error::IncompatibleField(2, 3))));
        // a rational-valued result forgets its radicand
        let zero = r2.checked_sub(&r2).unwrap();
        assert!(zero.checked_add(&r3).is_ok());
    }

    #[test]
    fn division_inverts_multiplication() {
        let x = QuadExt::normalize(rat(1, 2), int(-3), 5).unwrap();
        let y = QuadExt::normalize(int(7), rat(2, 3), 5).unwrap();
        assert_eq!((&x * &y) / y.clone(), x);
        assert_eq!(&x / &x, QuadExt::one());
    }

    #[test]
    fn square_roots_inside_the_field() {
        let i = QuadExt::sqrt_of(-1).unwrap();
        // 2i = (1 + i)^2
        let two_i = QuadExt::rational(int(2)) * i.clone();
        let r = two_i.sqrt_in(Some(-1)).unwrap();
        assert_eq!(&r * &r, two_i);
        assert_eq!(QuadExt::rational(int(-4)).sqrt_in(Some(-1)).unwrap(), QuadExt::rational(int(2)) * i);
        assert!(QuadExt::rational(int(-32)).sqrt_in(Some(-1)).is_none());
        assert_eq!(QuadExt::rational(int(8)).sqrt_in(Some(2)).unwrap().to_string(), "2*sqrt(2)");
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
    }

    #[test]
    fn rendering() {
        assert_eq!(rat(3, 1).to_string(), "3");
        assert_eq!(rat(-3, 6).to_string(), "-1/2");
        assert_eq!(QuadExt::sqrt_of(-1).unwrap().to_string(), "sqrt(-1)");
        assert_eq!((-QuadExt::sqrt_of(-1).unwrap()).to_string(), "-sqrt(-1)");
        assert_eq!(QuadExt::normalize(int(1), int(-1), 3).unwrap().to_string(), "1 - sqrt(3)");
    }

    #[test]
    fn squarefree_classes() {
        assert_eq!(squarefree_split(72), (2, 6));
        assert_eq!(squarefree_split(-32), (-2, 4));
        assert_eq!(rat_squarefree_class(&rat(-32, 1)), Some(-2));
        assert_eq!(rat_squarefree_class(&rat(1, 3)), Some(3));
    }
}
