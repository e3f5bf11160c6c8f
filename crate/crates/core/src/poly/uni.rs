//! Dense univariate polynomials over an exact field.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{denominator_lcm, Field, Rat};

/// `coeffs[i]` is the coefficient of `T^i`; the leading coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> UniPoly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// `c · T^k`
    pub fn monomial(c: K, k: usize) -> Self {
        let mut v = vec![K::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// The variable `T`.
    pub fn var() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| K::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> UniPoly<L> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) => {
                let inv = K::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = K::one() / d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![K::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap().clone() * inv.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - c.clone() * dc.clone();
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * K::from_i64(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let mut v = vec![K::zero()];
        v.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.clone() / K::from_i64(i as i64 + 1)),
        );
        Self::new(v)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        K::poly_gcd(self, other)
    }

    /// Monic squarefree part `A / gcd(A, A')`.
    pub fn radical(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("polynomial"));
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_exact(&g).expect("gcd divides").monic())
    }

    /// Substitutes `T ↦ p(T)`.
    pub fn compose(&self, p: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * p) + &Self::constant(c.clone()))
    }
}

impl UniPoly<Rat> {
    /// Splits into a rational content and a primitive integer polynomial
    /// with positive leading coefficient.
    pub fn primitive_integer(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let l = denominator_lcm(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rat::new(g, l), prim)
    }

    pub fn from_integers(cs: &[BigInt]) -> Self {
        Self::new(cs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }
}

/// Plain Euclidean gcd over a field, made monic.
pub fn euclid_gcd<K: Field>(a: &UniPoly<K>, b: &UniPoly<K>) -> UniPoly<K> {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.div_rem(&y).1;
        x = y;
        y = r;
    }
    x.monic()
}

fn int_degree(p: &[BigInt]) -> usize {
    p.len() - 1
}

fn int_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn int_primitive(p: Vec<BigInt>) -> Vec<BigInt> {
    let g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of integer polynomials: `lc(b)^(deg a − deg b + 1)·a mod b`.
pub(crate) fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = int_degree(b);
    let lb = b[db].clone();
    let mut r = a.to_vec();
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &lr * bc;
        }
        r.pop();
        r = int_trim(r);
    }
    r
}

/// Monic gcd over ℚ through the primitive pseudo-remainder sequence over ℤ.
pub fn prs_gcd(a: &UniPoly<Rat>, b: &UniPoly<Rat>) -> UniPoly<Rat> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (_, mut x) = a.primitive_integer();
    let (_, mut y) = b.primitive_integer();
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = int_primitive(int_prem(&x, &y));
        x = y;
        y = r;
    }
    UniPoly::from_integers(&x).monic()
}

macro_rules! uni_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, K: Field> $tr<&'a UniPoly<K>> for &'a UniPoly<K> {
            type Output = UniPoly<K>;
            fn $m(self, o: &UniPoly<K>) -> UniPoly<K> {
                let f: fn(&UniPoly<K>, &UniPoly<K>) -> UniPoly<K> = $body;
                f(self, o)
            }
        }
        impl<K: Field> $tr for UniPoly<K> {
            type Output = UniPoly<K>;
            fn $m(self, o: UniPoly<K>) -> UniPoly<K> {
                (&self).$m(&o)
            }
        }
    };
}

uni_binop!(Add, add, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    UniPoly::new((0..n).map(|i| a.coeff(i) + b.coeff(i)).collect())
});

uni_binop!(Sub, sub, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    UniPoly::new((0..n).map(|i| a.coeff(i) - b.coeff(i)).collect())
});

uni_binop!(Mul, mul, |a, b| {
    if a.is_zero() || b.is_zero() {
        return UniPoly::zero();
    }
    let mut v = vec![K::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            v[i + j] = v[i + j].clone() + x.clone() * y.clone();
        }
    }
    UniPoly::new(v)
});

impl<K: Field> Neg for UniPoly<K> {
    type Output = UniPoly<K>;
    fn neg(self) -> UniPoly<K> {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<K: Field> Neg for &UniPoly<K> {
    type Output = UniPoly<K>;
    fn neg(self) -> UniPoly<K> {
        -self.clone()
    }
}
