//! Sylvester resultants and implicitization of rational curves.

use crate::error::{Error, Result};
use crate::poly::bivariate::gcd2_all;
use crate::poly::{TriPoly, UniPoly, X, Y};
use crate::scalar::{Field, Rat};

/// Sylvester matrix of two polynomials viewed in one variable.
///
/// With `deg A = m` and `deg B = n` the matrix is `(m + n) × (m + n)`: the
/// first `n` rows hold the coefficients of `A` (highest power first), each
/// shifted one column right of the previous, followed by `m` rows for `B`.
#[derive(Clone, Debug)]
pub struct SylvesterMatrix<K> {
    pub entries: Vec<Vec<TriPoly<K>>>,
    pub var: usize,
}

impl<K: Field> SylvesterMatrix<K> {
    pub fn new(a: &TriPoly<K>, b: &TriPoly<K>, var: usize) -> Result<Self> {
        let da = a.degree_in(var).filter(|&d| d > 0);
        let db = b.degree_in(var).filter(|&d| d > 0);
        let (Some(m), Some(n)) = (da, db) else {
            return Err(Error::DegreeZeroIn(format!("variable slot {var}")));
        };
        let (m, n) = (m as usize, n as usize);
        let size = m + n;
        let ca = a.coeffs_in(var);
        let cb = b.coeffs_in(var);
        let mut entries = vec![vec![TriPoly::zero(); size]; size];
        for r in 0..n {
            for (k, c) in ca.iter().rev().enumerate() {
                entries[r][r + k] = c.clone();
            }
        }
        for r in 0..m {
            for (k, c) in cb.iter().rev().enumerate() {
                entries[n + r][r + k] = c.clone();
            }
        }
        Ok(SylvesterMatrix { entries, var })
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> TriPoly<K> {
        bareiss(self.entries.clone())
    }
}

/// Fraction-free determinant over a polynomial ring.
pub fn bareiss<K: Field>(mut m: Vec<Vec<TriPoly<K>>>) -> TriPoly<K> {
    let n = m.len();
    if n == 0 {
        return TriPoly::one();
    }
    let mut negate = false;
    let mut prev = TriPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return TriPoly::zero();
            };
            m.swap(k, i);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = TriPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `Res_var(A, B)`; the remaining variables survive in the result.
pub fn resultant_in<K: Field>(a: &TriPoly<K>, b: &TriPoly<K>, var: usize) -> Result<TriPoly<K>> {
    Ok(SylvesterMatrix::new(a, b, var)?.determinant())
}

/// Resultant of two univariate polynomials.
pub fn resultant_uni<K: Field>(a: &UniPoly<K>, b: &UniPoly<K>) -> Result<K> {
    let r = resultant_in(&TriPoly::from_uni(a, 0), &TriPoly::from_uni(b, 0), 0)?;
    Ok(r.constant_term())
}

/// A plane curve given affinely as `x = fx(t)/h(t)`, `y = fy(t)/h(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineParam {
    pub fx: UniPoly<Rat>,
    pub fy: UniPoly<Rat>,
    pub h: UniPoly<Rat>,
}

impl AffineParam {
    /// Brings `x = a/b`, `y = c/d` to a common denominator.
    pub fn from_fractions(
        x: (UniPoly<Rat>, UniPoly<Rat>),
        y: (UniPoly<Rat>, UniPoly<Rat>),
    ) -> Result<Self> {
        if x.1.is_zero() || y.1.is_zero() {
            return Err(Error::ZeroPolynomial("denominator"));
        }
        let gx = x.0.gcd(&x.1);
        let gy = y.0.gcd(&y.1);
        let (xn, xd) = if gx.is_zero() { x } else { (x.0.div_exact(&gx).unwrap(), x.1.div_exact(&gx).unwrap()) };
        let (yn, yd) = if gy.is_zero() { y } else { (y.0.div_exact(&gy).unwrap(), y.1.div_exact(&gy).unwrap()) };
        let g = xd.gcd(&yd);
        let h = &xd * &yd.div_exact(&g).unwrap();
        let fx = &xn * &h.div_exact(&xd).unwrap();
        let fy = &yn * &h.div_exact(&yd).unwrap();
        Ok(AffineParam { fx, fy, h })
    }

    fn is_constant(&self) -> bool {
        let const_ratio = |f: &UniPoly<Rat>| {
            let g = f.gcd(&self.h);
            f.is_zero() || (self.h.div_exact(&g).unwrap().is_constant() && f.div_exact(&g).unwrap().is_constant())
        };
        const_ratio(&self.fx) && const_ratio(&self.fy)
    }
}

/// Implicit equation of the image of an affine parametrization.
///
/// The raw resultant `Res_t(h·x − fx, h·y − fy)` is normalized: integer
/// content removed, graded-lex leading coefficient made positive, and a
/// perfect power `c·G^k` (a map tracing the curve `k` times) reduced to `G`.
pub fn implicitize(map: &AffineParam) -> Result<TriPoly<Rat>> {
    if map.h.is_zero() {
        return Err(Error::ZeroPolynomial("denominator"));
    }
    if map.is_constant() {
        return Err(Error::ConstantMap);
    }
    const T: usize = 2;
    let lift = |p: &UniPoly<Rat>| TriPoly::from_uni(p, T);
    let h = lift(&map.h);
    let a = &(&h * &TriPoly::var(X)) - &lift(&map.fx);
    let b = &(&h * &TriPoly::var(Y)) - &lift(&map.fy);
    let raw = match (a.degree_in(T), b.degree_in(T)) {
        (Some(0), _) => a.clone(),
        (_, Some(0)) => b.clone(),
        _ => resultant_in(&a, &b, T)?,
    };
    if raw.is_zero() {
        return Err(Error::ResultantVanishes);
    }
    Ok(reduce_power(&raw.primitive()))
}

/// `G` when `r = c·G^k` with `G` the squarefree part, else `r` unchanged.
fn reduce_power(r: &TriPoly<Rat>) -> TriPoly<Rat> {
    let g = gcd2_all([r, &r.partial(X), &r.partial(Y)]);
    if g.is_constant() {
        return r.clone();
    }
    let Some(s) = r.div_exact(&g) else {
        return r.clone();
    };
    let (dr, ds) = (r.total_degree().unwrap_or(0), s.total_degree().unwrap_or(0));
    if ds == 0 || dr % ds != 0 {
        return r.clone();
    }
    if s.pow(dr / ds).proportional_to(r) {
        s.primitive()
    } else {
        r.clone()
    }
}
