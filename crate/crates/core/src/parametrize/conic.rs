//! Conics through a known point, parametrized by the pencil of lines
//! through it.

use num_traits::Zero;

use super::{verify_param, MapScalar, RationalMap};
use crate::error::{Error, Result};
use crate::poly::{substitute_forms, BinaryForm, Mono, TriPoly, X, Y, Z};
use crate::scalar::{Field, QuadExt, Rat};
use crate::singular::ProjPoint;

/// Symmetric matrix `A` with `F(w) = wᵀ A w`.
pub fn conic_matrix(f: &TriPoly<Rat>) -> Result<[[Rat; 3]; 3]> {
    if f.total_degree() != Some(2) || !f.is_homogeneous() {
        return Err(Error::InvalidInput("a conic must be a homogeneous quadratic in X, Y, Z".into()));
    }
    let half = Rat::new(1.into(), 2.into());
    let mut a: [[Rat; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            let mut e = [0u32; 3];
            e[i] += 1;
            e[j] += 1;
            let c = f.coeff(&Mono(e));
            a[i][j] = if i == j { c } else { c * &half };
        }
    }
    Ok(a)
}

fn det3<K: Field>(m: &[[K; 3]; 3]) -> K {
    let t = |a: usize, b: usize, c: usize| m[0][a].clone() * m[1][b].clone() * m[2][c].clone();
    t(0, 1, 2) + t(1, 2, 0) + t(2, 0, 1) - t(2, 1, 0) - t(0, 2, 1) - t(1, 0, 2)
}

/// Second intersection of the line through `p` and `w = u·e_i + v·e_j`:
/// `(∇F(p)·w)·w − F(w)·p`.
pub(super) fn conic_map<K: MapScalar>(f: &TriPoly<Rat>, p: &[K; 3]) -> Result<RationalMap<K>> {
    let a = conic_matrix(f)?;
    if det3(&a).is_zero() {
        return Err(Error::Reducible("the conic is degenerate (a pair of lines)".into()));
    }
    let fk = f.map(|c| K::from_rat(c.clone()));
    if !fk.eval(p).is_zero() {
        return Err(Error::NotOnCurve("the given point".into()));
    }
    let grad: Vec<K> = [X, Y, Z].iter().map(|&v| fk.partial(v).eval(p)).collect();
    // (i, j) spans a complement of p when the remaining coordinate of p is nonzero
    let (i, j) = [(Y, Z), (Y, X), (X, Z)]
        .into_iter()
        .find(|&(i, j)| !p[3 - i - j].is_zero())
        .expect("a point has a nonzero coordinate");
    let mut w: [BinaryForm<K>; 3] = [BinaryForm::zero(1), BinaryForm::zero(1), BinaryForm::zero(1)];
    w[i] = BinaryForm::u();
    w[j] = BinaryForm::v();
    let lin = (0..3).fold(BinaryForm::zero(1), |acc, k| &acc + &w[k].scale(&grad[k]));
    let fw = substitute_forms(&fk, [&w[0], &w[1], &w[2]])?;
    let comps = [0, 1, 2].map(|k| &(&lin * &w[k]) - &fw.scale(&p[k]));
    let [cf, cg, ch] = comps;
    let map = RationalMap::new(cf, cg, ch)?;
    if !verify_param(f, &map) {
        return Err(Error::Contradiction("conic parametrization failed verification".into()));
    }
    Ok(map)
}

/// Parametrizes a nondegenerate conic from a rational point on it.
pub fn param_conic(f: &TriPoly<Rat>, p: &ProjPoint) -> Result<RationalMap<Rat>> {
    let Some(pt) = p.rational_coords() else {
        return Err(Error::InvalidInput(format!(
            "point {p} is not rational; use the quadratic-field variant"
        )));
    };
    conic_map(f, &pt).map_err(|e| with_point(e, p))
}

/// Parametrization with coefficients in ℚ(√d) from a point over ℚ(√d).
pub fn param_conic_over(f: &TriPoly<Rat>, p: &ProjPoint) -> Result<RationalMap<QuadExt>> {
    conic_map(f, p.coords()).map_err(|e| with_point(e, p))
}

fn with_point(e: Error, p: &ProjPoint) -> Error {
    match e {
        Error::NotOnCurve(_) => Error::NotOnCurve(p.to_string()),
        other => other,
    }
}
