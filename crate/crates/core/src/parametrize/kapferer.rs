//! The degree argument against parametrizing smooth curves, made
//! executable.
//!
//! For a parametrization `(f : g : h)` of degree `m` of a curve of degree
//! `n`, the 2×2 minors `P, Q, R` of the Jacobian of `(f, g, h)` are
//! proportional to the evaluated partials `F_X(f,g,h)`, `F_Y(f,g,h)`,
//! `F_Z(f,g,h)`. When the evaluated partials are coprime the factor is a
//! form `p` of degree `2m − 2 − m(n − 1)`, which forces `2m − 2 ≥ m(n − 1)`,
//! hence `n ≤ 2`. A common root of the evaluated partials instead maps to a
//! singular point of the curve.

use num_traits::{One, Zero};

use super::{verify_param, RationalMap};
use crate::error::{Error, Result};
use crate::poly::factor::low_degree_factors;
use crate::poly::{substitute_forms, BinaryForm, KroneckerConfig, TriPoly, UniPoly, X, Y, Z};
use crate::scalar::{QuadExt, Rat};
use crate::singular::{
    is_singular_at, nonsingularity_certificate, roots_of, NonsingularityEvidence, ProjPoint, SingularConfig,
    SingularPointReport, Smoothness,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeComparison {
    /// `2m − 2`, the degree of the minors.
    pub minors_degree: usize,
    /// `m(n − 1)`, the degree of the evaluated partials.
    pub partials_degree: usize,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct KapfererWitness {
    pub curve_degree: usize,
    pub map_degree: usize,
    /// `P = g_U h_V − g_V h_U`, `Q = −(f_U h_V − f_V h_U)`, `R = f_U g_V − f_V g_U`.
    pub minors: [BinaryForm<Rat>; 3],
    /// `F_X(f,g,h)`, `F_Y(f,g,h)`, `F_Z(f,g,h)`.
    pub evaluated_partials: [BinaryForm<Rat>; 3],
    /// Monic gcd of the evaluated partials.
    pub gcd: BinaryForm<Rat>,
    /// With `q = 1`: `q·P = p·F_X(f,g,h)` and likewise for `Q`, `R`.
    pub p: Option<BinaryForm<Rat>>,
    pub q: Rat,
    pub complete: bool,
    pub degree_check: DegreeComparison,
    /// Images of the roots of `gcd` that could be written down.
    pub singular_points: Vec<ProjPoint>,
    /// Factors of `gcd` of degree above 2 whose roots were not computed.
    pub unresolved_factors: Vec<UniPoly<Rat>>,
}

impl KapfererWitness {
    /// Re-checks the three proportionalities when the witness is complete.
    pub fn identities_hold(&self) -> bool {
        let Some(p) = &self.p else { return false };
        self.minors
            .iter()
            .zip(&self.evaluated_partials)
            .all(|(m, e)| m.scale(&self.q) == p * e)
    }
}

fn jacobian_minors(map: &RationalMap<Rat>) -> [BinaryForm<Rat>; 3] {
    let [f, g, h] = map.forms();
    let det = |a: &BinaryForm<Rat>, b: &BinaryForm<Rat>| &(&a.d_u() * &b.d_v()) - &(&a.d_v() * &b.d_u());
    [det(g, h), -det(f, h), det(f, g)]
}

pub fn kapferer_witness(curve: &TriPoly<Rat>, map: &RationalMap<Rat>) -> Result<KapfererWitness> {
    if !curve.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = curve.total_degree().ok_or(Error::ZeroPolynomial("curve"))? as usize;
    if !verify_param(curve, map) {
        return Err(Error::NotAParametrization);
    }
    let m = map.degree();
    let minors = jacobian_minors(map);
    if minors.iter().all(|x| x.is_zero()) {
        return Err(Error::Contradiction("Jacobian of a nonconstant map has rank below 2".into()));
    }
    let [f, g, h] = map.forms();
    let evaluated = [X, Y, Z].map(|v| substitute_forms(&curve.partial(v), [f, g, h]).expect("homogeneous"));
    let Some(gcd) = BinaryForm::gcd_all(&evaluated) else {
        return Err(Error::NotSquarefree);
    };
    let minors_degree = 2 * m - 2;
    let partials_degree = m * (n - 1);
    let degree_check = DegreeComparison {
        minors_degree,
        partials_degree,
        holds: minors_degree >= partials_degree,
    };
    let mut w = KapfererWitness {
        curve_degree: n,
        map_degree: m,
        minors,
        evaluated_partials: evaluated,
        gcd: gcd.clone(),
        p: None,
        q: Rat::one(),
        complete: false,
        degree_check,
        singular_points: Vec::new(),
        unresolved_factors: Vec::new(),
    };
    if gcd.is_constant() {
        let k = (0..3).find(|&i| !w.evaluated_partials[i].is_zero()).expect("gcd exists");
        let p = w.minors[k].div_exact(&w.evaluated_partials[k]).ok_or_else(|| {
            Error::Contradiction("minor is not a multiple of the evaluated partial".into())
        })?;
        w.p = Some(p);
        if !w.identities_hold() {
            return Err(Error::Contradiction("minors are not proportional to the evaluated partials".into()));
        }
        if !w.degree_check.holds {
            return Err(Error::Contradiction(format!(
                "complete witness with 2m-2 = {} < m(n-1) = {}",
                minors_degree, partials_degree
            )));
        }
        w.complete = true;
        return Ok(w);
    }
    // roots of the gcd map to singular points
    let mut params: Vec<(QuadExt, QuadExt)> = Vec::new();
    let gu = gcd.to_uni();
    if gu.degree() < Some(gcd.degree()) {
        params.push((QuadExt::one(), QuadExt::zero()));
    }
    if !gu.is_constant() {
        let part = low_degree_factors(&gu, 2, &KroneckerConfig::default())?;
        for (fac, _) in part.factors.iter().chain(&part.unresolved) {
            match roots_of(fac) {
                Some(rs) => params.extend(rs.into_iter().map(|t| (t, QuadExt::one()))),
                None => w.unresolved_factors.push(fac.clone()),
            }
        }
    }
    let qmap = map.to_quadratic();
    for (u, v) in params {
        let p = ProjPoint::new(qmap.eval(&u, &v))?;
        if !is_singular_at(curve, &p)? {
            return Err(Error::Contradiction(format!("root of the gcd maps to the smooth point {p}")));
        }
        if !w.singular_points.contains(&p) {
            w.singular_points.push(p);
        }
    }
    w.singular_points.sort();
    Ok(w)
}

/// A proof that a smooth curve of degree at least 3 has no rational
/// parametrization.
#[derive(Clone, Debug)]
pub struct NonParamCertificate {
    pub curve: TriPoly<Rat>,
    pub degree: usize,
    pub evidence: NonsingularityEvidence,
    pub conclusion: String,
}

impl NonParamCertificate {
    pub fn recheck(&self, cfg: &SingularConfig) -> bool {
        self.degree >= 3
            && self.curve.total_degree() == Some(self.degree as u32)
            && self.evidence.recheck(&self.curve, cfg)
    }
}

#[derive(Clone, Debug)]
pub enum NonParamOutcome {
    Certificate(Box<NonParamCertificate>),
    /// The hypotheses fail: degree at most 2, or a singular point exists.
    Inapplicable { reason: String, singular_point: Option<Box<SingularPointReport>> },
}

pub fn nonparam_certificate(curve: &TriPoly<Rat>, cfg: &SingularConfig) -> Result<NonParamOutcome> {
    if !curve.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = curve.total_degree().ok_or(Error::ZeroPolynomial("curve"))? as usize;
    if n <= 2 {
        return Ok(NonParamOutcome::Inapplicable {
            reason: format!("degree {n} <= 2: lines and smooth conics with a point are parametrizable"),
            singular_point: None,
        });
    }
    match nonsingularity_certificate(curve, cfg)? {
        Smoothness::Smooth(evidence) => Ok(NonParamOutcome::Certificate(Box::new(NonParamCertificate {
            curve: curve.clone(),
            degree: n,
            evidence,
            conclusion: format!(
                "the curve is smooth of degree {n} >= 3, so 2m - 2 < m(n - 1) for every m >= 1: \
                 no nonconstant coprime (f, g, h) with F(f, g, h) = 0 exists over any field of characteristic 0"
            ),
        }))),
        Smoothness::Singular(r) => Ok(NonParamOutcome::Inapplicable {
            reason: format!("the curve is singular at {}", r.point),
            singular_point: Some(r),
        }),
        Smoothness::Inconclusive { cluster_degree } => Err(Error::UnresolvedCluster(cluster_degree)),
    }
}
