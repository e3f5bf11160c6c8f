//! Sparse polynomials in up to three variables.
//!
//! Curves are stored as `TriPoly` in `(X, Y, Z)`; affine curves simply never
//! use the third slot. Terms are kept in a `BTreeMap` keyed by [`Mono`],
//! whose order is graded lexicographic with `X > Y > Z`, so iteration order
//! (and therefore rendering) is deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::uni::UniPoly;
use crate::scalar::{denominator_lcm, Field, Rat};

/// Exponent vector of a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub [u32; 3]);

impl Mono {
    pub const ONE: Mono = Mono([0, 0, 0]);

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn var(i: usize) -> Mono {
        let mut e = [0; 3];
        e[i] = 1;
        Mono(e)
    }

    fn divides(&self, o: &Mono) -> bool {
        (0..3).all(|i| self.0[i] <= o.0[i])
    }

    fn sub(&self, o: &Mono) -> Mono {
        Mono([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }

    fn add(&self, o: &Mono) -> Mono {
        Mono([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.total().cmp(&o.total()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriPoly<K> {
    terms: BTreeMap<Mono, K>,
}

impl<K: Field> Default for TriPoly<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Field> TriPoly<K> {
    pub fn zero() -> Self {
        TriPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, Mono::ONE)
    }

    pub fn monomial(c: K, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        TriPoly { terms }
    }

    /// The `i`-th variable.
    pub fn var(i: usize) -> Self {
        Self::monomial(K::one(), Mono::var(i))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, K)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &K)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, m: &Mono) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    /// Total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::total).max()
    }

    /// Least total degree of a term, `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::total).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_degree()
    }

    pub fn is_constant(&self) -> bool {
        self.total_degree().is_none_or(|d| d == 0)
    }

    pub fn constant_term(&self) -> K {
        self.coeff(&Mono::ONE)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Which variables actually occur.
    pub fn uses(&self) -> [bool; 3] {
        let mut u = [false; 3];
        for m in self.terms.keys() {
            for (i, e) in m.0.iter().enumerate() {
                u[i] |= *e > 0;
            }
        }
        u
    }

    /// Graded-lex leading term.
    pub fn leading(&self) -> Option<(&Mono, &K)> {
        self.terms.iter().next_back()
    }

    pub fn homogeneous_part(&self, deg: u32) -> Self {
        TriPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total() == deg)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> TriPoly<L> {
        TriPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TriPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        TriPoly {
            terms: self.terms.iter().map(|(k, c)| (k.add(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        TriPoly::from_terms(self.terms.iter().filter(|(m, _)| m.0[var] > 0).map(|(m, c)| {
            let mut e = m.0;
            let k = e[var];
            e[var] -= 1;
            (Mono(e), c.clone() * K::from_i64(k as i64))
        }))
    }

    /// Evaluates at a point in an extension field `L`.
    pub fn eval_in<L: Field>(&self, pt: &[L; 3], embed: impl Fn(&K) -> L) -> L {
        let mut powers: [Vec<L>; 3] = Default::default();
        for i in 0..3 {
            let top = self.degree_in(i).unwrap_or(0) as usize;
            let mut v = Vec::with_capacity(top + 1);
            v.push(L::one());
            for k in 1..=top {
                let next = v[k - 1].clone() * pt[i].clone();
                v.push(next);
            }
            powers[i] = v;
        }
        self.terms.iter().fold(L::zero(), |acc, (m, c)| {
            let t = embed(c)
                * powers[0][m.0[0] as usize].clone()
                * powers[1][m.0[1] as usize].clone()
                * powers[2][m.0[2] as usize].clone();
            acc + t
        })
    }

    pub fn eval(&self, pt: &[K; 3]) -> K {
        self.eval_in(pt, K::clone)
    }

    /// Substitutes each variable by a polynomial.
    pub fn substitute(&self, vals: &[TriPoly<K>; 3]) -> TriPoly<K> {
        let mut powers: [Vec<TriPoly<K>>; 3] = Default::default();
        for i in 0..3 {
            let top = self.degree_in(i).unwrap_or(0) as usize;
            let mut v = Vec::with_capacity(top + 1);
            v.push(TriPoly::one());
            for k in 1..=top {
                let next = &v[k - 1] * &vals[i];
                v.push(next);
            }
            powers[i] = v;
        }
        let mut out = TriPoly::zero();
        for (m, c) in &self.terms {
            let t = &(&powers[0][m.0[0] as usize] * &powers[1][m.0[1] as usize])
                * &powers[2][m.0[2] as usize];
            out = &out + &t.scale(c);
        }
        out
    }

    /// Sets `var = value`; the variable disappears from the result.
    pub fn set_var(&self, var: usize, value: &K) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            let k = e[var];
            e[var] = 0;
            let mut coeff = c.clone();
            for _ in 0..k {
                coeff = coeff * value.clone();
            }
            out.add_term(Mono(e), coeff);
        }
        out
    }

    /// Multiplies each term by a power of `var` so every term reaches the
    /// total degree.
    pub fn homogenize(&self, var: usize) -> Self {
        let Some(d) = self.total_degree() else {
            return Self::zero();
        };
        TriPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = m.0;
            e[var] += d - m.total();
            (Mono(e), c.clone())
        }))
    }

    pub fn dehomogenize(&self, var: usize) -> Self {
        self.set_var(var, &K::one())
    }

    /// Coefficients with respect to `var`: entry `i` multiplies `var^i`.
    pub fn coeffs_in(&self, var: usize) -> Vec<TriPoly<K>> {
        let n = self.degree_in(var).map_or(0, |d| d as usize + 1);
        let mut out = vec![TriPoly::zero(); n];
        for (m, c) in &self.terms {
            let mut e = m.0;
            let k = e[var] as usize;
            e[var] = 0;
            out[k].add_term(Mono(e), c.clone());
        }
        out
    }

    /// Univariate view when only `var` occurs.
    pub fn to_uni(&self, var: usize) -> Option<UniPoly<K>> {
        let cs = self.coeffs_in(var);
        let mut v = Vec::with_capacity(cs.len());
        for c in cs {
            if !c.is_constant() {
                return None;
            }
            v.push(c.constant_term());
        }
        Some(UniPoly::new(v))
    }

    pub fn from_uni(p: &UniPoly<K>, var: usize) -> Self {
        TriPoly::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| {
            let mut e = [0; 3];
            e[var] = i as u32;
            (Mono(e), c.clone())
        }))
    }

    /// Exact quotient by multivariate division in graded-lex order; `None`
    /// when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading()?;
        let (dm, inv) = (*dm, K::one() / dc.clone());
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((rm, rc)) = r.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let m = rm.sub(&dm);
            let c = rc.clone() * inv.clone();
            let t = d.mul_mono(&m).scale(&c);
            r = &r - &t;
            q.add_term(m, c);
        }
        Some(q)
    }
}

impl TriPoly<Rat> {
    /// Integer content removed, graded-lex leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = denominator_lcm(self.terms.values());
        let ints: Vec<(Mono, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (*m, (c * Rat::from_integer(l.clone())).to_integer()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if self.leading().unwrap().1.is_negative() {
            g = -g;
        }
        TriPoly::from_terms(ints.into_iter().map(|(m, c)| (m, Rat::from_integer(c / &g))))
    }

    /// `Some(c)` when `self = c · other` for a rational `c`.
    pub fn scalar_ratio(&self, other: &Self) -> Option<Rat> {
        let (m, c) = self.leading()?;
        let oc = other.coeff(m);
        if oc.is_zero() {
            return None;
        }
        let r = c / &oc;
        (other.scale(&r) == *self).then_some(r)
    }
}

impl<K: Field> TriPoly<K> {
    /// True when `self = c · other` for some nonzero scalar `c`.
    pub fn proportional_to(&self, other: &Self) -> bool {
        match (self.leading(), other.leading()) {
            (Some((m, c)), Some(_)) => {
                let oc = other.coeff(m);
                !oc.is_zero() && other.scale(&(c.clone() / oc)) == *self
            }
            (None, None) => true,
            _ => false,
        }
    }
}

macro_rules! tri_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, K: Field> $tr<&'a TriPoly<K>> for &'a TriPoly<K> {
            type Output = TriPoly<K>;
            fn $m(self, o: &TriPoly<K>) -> TriPoly<K> {
                let f: fn(&TriPoly<K>, &TriPoly<K>) -> TriPoly<K> = $body;
                f(self, o)
            }
        }
        impl<K: Field> $tr for TriPoly<K> {
            type Output = TriPoly<K>;
            fn $m(self, o: TriPoly<K>) -> TriPoly<K> {
                (&self).$m(&o)
            }
        }
    };
}

tri_binop!(Add, add, |a, b| {
    let mut out = a.clone();
    for (m, c) in &b.terms {
        out.add_term(*m, c.clone());
    }
    out
});

tri_binop!(Sub, sub, |a, b| {
    let mut out = a.clone();
    for (m, c) in &b.terms {
        out.add_term(*m, -c.clone());
    }
    out
});

tri_binop!(Mul, mul, |a, b| {
    let mut out = TriPoly::zero();
    for (m1, c1) in &a.terms {
        for (m2, c2) in &b.terms {
            out.add_term(m1.add(m2), c1.clone() * c2.clone());
        }
    }
    out
});

impl<K: Field> Neg for TriPoly<K> {
    type Output = TriPoly<K>;
    fn neg(self) -> TriPoly<K> {
        TriPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<K: Field> Neg for &TriPoly<K> {
    type Output = TriPoly<K>;
    fn neg(self) -> TriPoly<K> {
        -self.clone()
    }
}

impl<K: Field> One for TriPoly<K> {
    fn one() -> Self {
        TriPoly::constant(K::one())
    }
}

impl<K: Field> Zero for TriPoly<K> {
    fn zero() -> Self {
        TriPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn x() -> TriPoly<Rat> {
        TriPoly::var(0)
    }
    fn y() -> TriPoly<Rat> {
        TriPoly::var(1)
    }
    fn z() -> TriPoly<Rat> {
        TriPoly::var(2)
    }
    fn c(n: i64) -> TriPoly<Rat> {
        TriPoly::constant(int(n))
    }

    #[test]
    fn grlex_order() {
        assert!(Mono([1, 0, 0]) > Mono([0, 1, 0]));
        assert!(Mono([0, 0, 2]) > Mono([1, 0, 0]));
        assert!(Mono([2, 0, 0]) > Mono([1, 1, 0]));
    }

    #[test]
    fn partial_derivatives() {
        let f = &(&y().pow(2) * &z().pow(2)) - &(&x().pow(4) + &z().pow(4));
        assert_eq!(f.partial(0), c(-4) * x().pow(3));
        assert!(c(5).partial(0).is_zero());
        let g = &(&x().pow(3) + &(&x().pow(2) * &z())) - &(&y().pow(2) * &z());
        assert_eq!(g.partial(1), &(&c(-2) * &y()) * &z());
    }

    #[test]
    fn homogenize_round_trip() {
        let f = &(&y().pow(2) - &x().pow(4)) - &c(1);
        let h = f.homogenize(2);
        assert_eq!(h, &(&y().pow(2) * &z().pow(2)) - &(&x().pow(4) + &z().pow(4)));
        assert_eq!(h.dehomogenize(2), f);
        assert_eq!((&x() + &c(1)).homogenize(2), &x() + &z());
        let cubic = &(&x().pow(3) + &x().pow(2)) - &y().pow(2);
        assert_eq!(cubic.homogenize(2), &(&x().pow(3) + &(&x().pow(2) * &z())) - &(&y().pow(2) * &z()));
    }

    #[test]
    fn dehomogenize_charts() {
        let h = &(&y().pow(2) * &z().pow(2)) - &(&x().pow(4) + &z().pow(4));
        assert_eq!(h.dehomogenize(1), &(&z().pow(2) - &x().pow(4)) - &z().pow(4));
        assert_eq!(z().pow(3).dehomogenize(2), c(1));
    }

    #[test]
    fn exact_division() {
        let a = &(&x() + &y()) * &(&x() - &(&c(2) * &z()));
        assert_eq!(a.div_exact(&(&x() + &y())), Some(&x() - &(&c(2) * &z())));
        assert_eq!(a.div_exact(&(&x() + &c(1))), None);
    }

    #[test]
    fn primitive_normalization() {
        let a = &(&c(-4) * &x().pow(2)) + &(&c(6) * &y());
        assert_eq!(a.primitive(), &(&c(2) * &x().pow(2)) - &(&c(3) * &y()));
    }
}
