//! Binary forms: homogeneous polynomials in `(U, V)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::tri::{Mono, TriPoly};
use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// A homogeneous polynomial `Σ c_i U^i V^(m−i)` of degree `m`.
///
/// The zero form keeps a nominal degree so that sums and products of forms
/// stay degree-consistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm<K> {
    degree: usize,
    coeffs: Vec<K>,
}

impl<K: Field> BinaryForm<K> {
    /// `coeffs[i]` multiplies `U^i V^(m−i)` where `m = coeffs.len() − 1`.
    pub fn new(coeffs: Vec<K>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { degree: coeffs.len() - 1, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { degree, coeffs: vec![K::zero(); degree + 1] }
    }

    pub fn constant(c: K) -> Self {
        BinaryForm { degree: 0, coeffs: vec![c] }
    }

    pub fn u() -> Self {
        Self::new(vec![K::zero(), K::one()])
    }

    pub fn v() -> Self {
        Self::new(vec![K::one(), K::zero()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| K::from_i64(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0 || self.is_zero()
    }

    /// Homogenizes `p(t)` with `t = U/V` to the given degree.
    pub fn from_uni(p: &UniPoly<K>, degree: usize) -> Self {
        assert!(p.degree().is_none_or(|d| d <= degree), "degree too small for homogenization");
        Self { degree, coeffs: (0..=degree).map(|i| p.coeff(i)).collect() }
    }

    /// The affine view `f(t, 1)`.
    pub fn to_uni(&self) -> UniPoly<K> {
        UniPoly::new(self.coeffs.clone())
    }

    /// Leading coefficient in graded-lex order (`U > V`): the coefficient of
    /// the highest power of `U` present.
    pub fn leading_coeff(&self) -> Option<&K> {
        self.coeffs.iter().rev().find(|c| !c.is_zero())
    }

    pub fn eval(&self, u: &K, v: &K) -> K {
        let mut acc = K::zero();
        let mut upow = K::one();
        let vpows: Vec<K> = std::iter::successors(Some(K::one()), |p| Some(p.clone() * v.clone()))
            .take(self.degree + 1)
            .collect();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc + c.clone() * upow.clone() * vpows[self.degree - i].clone();
            upow = upow * u.clone();
        }
        acc
    }

    pub fn scale(&self, c: &K) -> Self {
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> BinaryForm<L> {
        BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(K::one()), |acc, _| &acc * self)
    }

    /// `∂/∂U`
    pub fn d_u(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        Self {
            degree: self.degree - 1,
            coeffs: (1..=self.degree)
                .map(|i| self.coeffs[i].clone() * K::from_i64(i as i64))
                .collect(),
        }
    }

    /// `∂/∂V`
    pub fn d_v(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        Self {
            degree: self.degree - 1,
            coeffs: (0..self.degree)
                .map(|i| self.coeffs[i].clone() * K::from_i64((self.degree - i) as i64))
                .collect(),
        }
    }

    /// Exponent of the largest power of `V` dividing the form.
    fn v_valuation(&self) -> usize {
        match self.to_uni().degree() {
            None => self.degree,
            Some(d) => self.degree - d,
        }
    }

    /// Monic (in graded-lex) gcd of a family of forms; zero forms are
    /// ignored, and the gcd of nothing but zeros is `None`.
    pub fn gcd_all<'a>(forms: impl IntoIterator<Item = &'a Self>) -> Option<Self>
    where
        K: 'a,
    {
        let mut acc: Option<(UniPoly<K>, usize)> = None;
        for f in forms {
            if f.is_zero() {
                continue;
            }
            let (p, k) = (f.to_uni(), f.v_valuation());
            acc = Some(match acc {
                None => (p.monic(), k),
                Some((g, kk)) => (g.gcd(&p), kk.min(k)),
            });
        }
        acc.map(|(g, k)| {
            let d = g.degree().unwrap_or(0);
            Self::from_uni(&g, d + k)
        })
    }

    pub fn gcd(&self, other: &Self) -> Option<Self> {
        Self::gcd_all([self, other])
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || d.degree > self.degree {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.degree - d.degree));
        }
        let (q, r) = self.to_uni().div_rem(&d.to_uni());
        if !r.is_zero() {
            return None;
        }
        let deg = self.degree - d.degree;
        if q.degree().is_some_and(|qd| qd > deg) {
            return None;
        }
        Some(Self::from_uni(&q, deg))
    }

    /// View as a [`TriPoly`] with `U`, `V` in slots 0 and 1.
    pub fn to_tri(&self) -> TriPoly<K> {
        TriPoly::from_terms(self.coeffs.iter().enumerate().map(|(i, c)| {
            (Mono([i as u32, (self.degree - i) as u32, 0]), c.clone())
        }))
    }

    /// Inverse of [`BinaryForm::to_tri`]; `degree` is used for the zero form.
    pub fn from_tri(p: &TriPoly<K>, degree: usize) -> Option<Self> {
        if p.is_zero() {
            return Some(Self::zero(degree));
        }
        if p.uses()[2] || !p.is_homogeneous() {
            return None;
        }
        let m = p.total_degree().unwrap() as usize;
        let mut coeffs = vec![K::zero(); m + 1];
        for (mono, c) in p.terms() {
            coeffs[mono.0[0] as usize] = c.clone();
        }
        Some(Self { degree: m, coeffs })
    }
}

/// `F(f, g, h)`: a form of degree `n·m` for `F` homogeneous of degree `n`
/// and forms of common degree `m`.
pub fn substitute_forms<K: Field>(f: &TriPoly<K>, forms: [&BinaryForm<K>; 3]) -> Result<BinaryForm<K>> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let m = forms[0].degree();
    if forms.iter().any(|g| g.degree() != m) {
        return Err(Error::InvalidInput("map components must have equal degrees".into()));
    }
    let n = f.total_degree().unwrap_or(0) as usize;
    let sub = f.substitute(&forms.map(|g| g.to_tri()));
    Ok(BinaryForm::from_tri(&sub, n * m).expect("substituting forms into a form gives a form"))
}

impl<'a, K: Field> Add<&'a BinaryForm<K>> for &'a BinaryForm<K> {
    type Output = BinaryForm<K>;
    fn add(self, o: &BinaryForm<K>) -> BinaryForm<K> {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        assert_eq!(self.degree, o.degree, "adding forms of different degree");
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<'a, K: Field> Sub<&'a BinaryForm<K>> for &'a BinaryForm<K> {
    type Output = BinaryForm<K>;
    fn sub(self, o: &BinaryForm<K>) -> BinaryForm<K> {
        self + &(-o.clone())
    }
}

impl<'a, K: Field> Mul<&'a BinaryForm<K>> for &'a BinaryForm<K> {
    type Output = BinaryForm<K>;
    fn mul(self, o: &BinaryForm<K>) -> BinaryForm<K> {
        let mut coeffs = vec![K::zero(); self.degree + o.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        BinaryForm { degree: self.degree + o.degree, coeffs }
    }
}

impl<K: Field> Neg for BinaryForm<K> {
    type Output = BinaryForm<K>;
    fn neg(self) -> BinaryForm<K> {
        BinaryForm { degree: self.degree, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<K: Field> Zero for BinaryForm<K> {
    fn zero() -> Self {
        BinaryForm::zero(0)
    }
    fn is_zero(&self) -> bool {
        BinaryForm::is_zero(self)
    }
}

impl<K: Field> Add for BinaryForm<K> {
    type Output = BinaryForm<K>;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn bf(cs: &[i64]) -> BinaryForm<Rat> {
        BinaryForm::from_i64s(cs)
    }

    #[test]
    fn euler_identity_for_forms() {
        // m f = U f_U + V f_V
        let f = bf(&[3, -1, 0, 2, 5]);
        let lhs = f.scale(&Rat::from_integer(4.into()));
        let rhs = &(&BinaryForm::u() * &f.d_u()) + &(&BinaryForm::v() * &f.d_v());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_tracks_powers_of_v() {
        // U V^2 and U^2 V share U V
        let a = bf(&[0, 1, 0, 0]);
        let b = bf(&[0, 0, 1, 0]);
        assert_eq!(a.gcd(&b).unwrap(), bf(&[0, 1, 0]));
        // (U^2 - V^2) V^2 and U (U^2 - V^2)
        let c = bf(&[-1, 0, 1]);
        let g = (&c * &bf(&[1, 0, 0])).gcd(&(&c * &bf(&[0, 1]))).unwrap();
        assert_eq!(g, c);
        assert_eq!(BinaryForm::gcd_all([&BinaryForm::<Rat>::zero(3)]), None);
    }

    #[test]
    fn tri_round_trip() {
        let f = bf(&[1, 0, -2, 7]);
        assert_eq!(BinaryForm::from_tri(&f.to_tri(), 3).unwrap(), f);
    }

    #[test]
    fn exact_division() {
        let a = bf(&[-1, 0, 1]);
        let b = bf(&[1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), bf(&[-1, 1]));
        assert!(a.div_exact(&bf(&[0, 0, 1])).is_none());
    }

    #[test]
    fn substitution_of_forms() {
        let circle = TriPoly::from_terms([
            (Mono([2, 0, 0]), Rat::from_integer(1.into())),
            (Mono([0, 2, 0]), Rat::from_integer(1.into())),
            (Mono([0, 0, 2]), Rat::from_integer((-1).into())),
        ]);
        let (f, g, h) = (bf(&[1, 0, -1]), bf(&[0, 2, 0]), bf(&[1, 0, 1]));
        assert!(substitute_forms(&circle, [&f, &g, &h]).unwrap().is_zero());
        assert_eq!(substitute_forms(&TriPoly::var(0), [&f, &g, &h]).unwrap(), f);
        assert!(substitute_forms(&circle, [&f, &bf(&[0, 1]), &h]).is_err());
    }
}
