//! Singular points of projective plane curves.
//!
//! A point is singular when `F_X`, `F_Y` and `F_Z` all vanish there. The
//! search splits the plane into the line at infinity `Z = 0`, handled by the
//! gcd of the three partials restricted to it, and the affine chart `Z = 1`,
//! where the partials are eliminated pairwise with resultants in `y`. A
//! shear `X ↦ X + cY` is applied first when needed so that every partial has
//! a constant leading coefficient in `y`; then the roots of the eliminants
//! are exactly the `x`-coordinates of common zeros. Roots of degree one and
//! two over ℚ are back-substituted exactly in ℚ or ℚ(√d). Higher-degree
//! eliminant factors are checked in the number field they define and, if
//! they really carry singular points, reported as unresolved clusters.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::bivariate::gcd2_all;
use crate::poly::factor::{low_degree_factors, KroneckerConfig};
use crate::poly::{BinaryForm, Mono, TriPoly, UniPoly, X, Y, Z};
use crate::resultant::resultant_in;
use crate::scalar::{int, rat_squarefree_class, Field, QuadExt, Rat};

pub const DEFAULT_SINGULAR_DEGREE_CAP: usize = 8;

#[derive(Clone, Debug)]
pub struct SingularConfig {
    pub degree_cap: usize,
    pub kronecker: KroneckerConfig,
}

impl Default for SingularConfig {
    fn default() -> Self {
        SingularConfig { degree_cap: DEFAULT_SINGULAR_DEGREE_CAP, kronecker: KroneckerConfig::default() }
    }
}

/// A point of the projective plane with coordinates in ℚ or one ℚ(√d),
/// scaled so that its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [QuadExt; 3],
}

impl ProjPoint {
    pub fn new(coords: [QuadExt; 3]) -> Result<Self> {
        let Some(lead) = coords.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::InvalidInput("the zero triple is not a projective point".into()));
        };
        let mut out: [QuadExt; 3] = Default::default();
        for (o, c) in out.iter_mut().zip(&coords) {
            *o = c.checked_div(&lead)?;
        }
        let p = ProjPoint { coords: out };
        p.field_checked()?;
        Ok(p)
    }

    pub fn rational(x: Rat, y: Rat, z: Rat) -> Result<Self> {
        Self::new([x.into(), y.into(), z.into()])
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::rational(int(x), int(y), int(z))
    }

    pub fn coords(&self) -> &[QuadExt; 3] {
        &self.coords
    }

    fn field_checked(&self) -> Result<Option<i64>> {
        let mut d = None;
        for c in &self.coords {
            match (d, c.d()) {
                (Some(a), Some(b)) if a != b => return Err(Error::IncompatibleField(a, b)),
                (None, Some(b)) => d = Some(b),
                _ => {}
            }
        }
        Ok(d)
    }

    /// Radicand of the field of definition, `None` for ℚ.
    pub fn field(&self) -> Option<i64> {
        self.field_checked().expect("validated on construction")
    }

    pub fn is_rational(&self) -> bool {
        self.field().is_none()
    }

    pub fn rational_coords(&self) -> Option<[Rat; 3]> {
        let [a, b, c] = &self.coords;
        Some([a.as_rat()?, b.as_rat()?, c.as_rat()?])
    }

    pub fn conjugate(&self) -> ProjPoint {
        ProjPoint::new(self.coords.clone().map(|c| c.conjugate())).expect("conjugate of a point")
    }

    fn sort_key(&self) -> Vec<(Rat, Rat)> {
        self.coords.iter().map(|c| (c.re().clone(), -c.im().clone())).collect()
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, o: &Self) -> Ordering {
        self.sort_key().cmp(&o.sort_key())
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::render_point(&self.coords))
    }
}

fn require_homogeneous(f: &TriPoly<Rat>) -> Result<u32> {
    match f.total_degree() {
        None => Err(Error::ZeroPolynomial("curve")),
        Some(_) if !f.is_homogeneous() => Err(Error::NotHomogeneous),
        Some(d) => Ok(d),
    }
}

fn gradient(f: &TriPoly<Rat>) -> [TriPoly<Rat>; 3] {
    [f.partial(X), f.partial(Y), f.partial(Z)]
}

/// True iff all three partial derivatives vanish at `p`.
pub fn is_singular_at(f: &TriPoly<Rat>, p: &ProjPoint) -> Result<bool> {
    let deg = require_homogeneous(f)?;
    if deg == 0 {
        return Err(Error::InvalidInput("curve of degree 0".into()));
    }
    let pt = p.coords();
    let singular = gradient(f)
        .iter()
        .all(|g| g.eval_in(pt, |c| QuadExt::from(c.clone())).is_zero());
    // Euler: X F_X + Y F_Y + Z F_Z = deg · F
    debug_assert!(!singular || f.eval_in(pt, |c| QuadExt::from(c.clone())).is_zero());
    Ok(singular)
}

/// Shape of a singularity read off its tangent cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeKind {
    /// Multiplicity 1.
    Smooth,
    /// Double point with two distinct tangents defined over the point's field.
    Node,
    /// Double point with a repeated tangent.
    Cusp,
    /// Double point whose two tangents are conjugate over a quadratic
    /// extension of the point's field; `discriminant` is that of the cone.
    ConjugateNode { discriminant: QuadExt, tangent_field: Option<i64> },
    /// Multiplicity at least 3.
    Higher,
}

impl fmt::Display for ConeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeKind::Smooth => write!(f, "smooth"),
            ConeKind::Node => write!(f, "node"),
            ConeKind::Cusp => write!(f, "cusp"),
            ConeKind::ConjugateNode { tangent_field: Some(d), .. } => {
                write!(f, "conjugate-tangent node over Q(sqrt({d}))")
            }
            ConeKind::ConjugateNode { discriminant, .. } => {
                write!(f, "conjugate-tangent node (cone discriminant {discriminant})")
            }
            ConeKind::Higher => write!(f, "higher"),
        }
    }
}

/// Local structure at a point: the curve is moved to the affine chart where
/// the point's first nonzero coordinate is 1 and the point is translated to
/// the origin. `chart_vars` names the two remaining coordinates, which are
/// slots 0 and 1 of `cone`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalStructure {
    pub multiplicity: usize,
    pub chart: usize,
    pub chart_vars: [usize; 2],
    pub cone: TriPoly<QuadExt>,
    pub kind: ConeKind,
    /// The translated affine equation.
    pub local_equation: TriPoly<QuadExt>,
}

pub fn multiplicity_and_cone(f: &TriPoly<Rat>, p: &ProjPoint) -> Result<LocalStructure> {
    require_homogeneous(f)?;
    let pt = p.coords();
    let chart = (0..3).find(|&i| !pt[i].is_zero()).expect("nonzero point");
    let chart_vars: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
    let chart_vars = [chart_vars[0], chart_vars[1]];
    let mut vals: [TriPoly<QuadExt>; 3] = Default::default();
    vals[chart] = TriPoly::one();
    for (slot, &v) in chart_vars.iter().enumerate() {
        vals[v] = &TriPoly::var(slot) + &TriPoly::constant(pt[v].clone());
    }
    let local = f.map(|c| QuadExt::from(c.clone())).substitute(&vals);
    let m = local.min_degree().ok_or(Error::ZeroPolynomial("curve"))? as usize;
    if m == 0 {
        return Err(Error::NotOnCurve(p.to_string()));
    }
    let cone = local.homogeneous_part(m as u32);
    let kind = match m {
        1 => ConeKind::Smooth,
        2 => {
            let a = cone.coeff(&Mono([2, 0, 0]));
            let b = cone.coeff(&Mono([1, 1, 0]));
            let c = cone.coeff(&Mono([0, 2, 0]));
            let disc = &b * &b - QuadExt::from(int(4)) * a * c;
            if disc.is_zero() {
                ConeKind::Cusp
            } else if disc.sqrt_in(p.field()).is_some() {
                ConeKind::Node
            } else {
                let tangent_field = disc.as_rat().and_then(|r| rat_squarefree_class(&r));
                ConeKind::ConjugateNode { discriminant: disc, tangent_field }
            }
        }
        _ => ConeKind::Higher,
    };
    Ok(LocalStructure { multiplicity: m, chart, chart_vars, cone, kind, local_equation: local })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularPointReport {
    pub point: ProjPoint,
    pub multiplicity: usize,
    pub local: LocalStructure,
    pub conjugate_partner: Option<ProjPoint>,
}

impl SingularPointReport {
    pub fn kind(&self) -> &ConeKind {
        &self.local.kind
    }

    pub fn field(&self) -> Option<i64> {
        self.point.field()
    }
}

/// Singular points over ℚ̄ that could not be written down in ℚ or ℚ(√d).
#[derive(Clone, Debug, PartialEq)]
pub struct Cluster {
    /// Number of points over ℚ̄ in the cluster.
    pub degree: usize,
    /// Where it was found: the `x`-eliminant factor (chart) or the binary
    /// form factor at infinity.
    pub defining_factor: UniPoly<Rat>,
    pub at_infinity: bool,
}

#[derive(Clone, Debug)]
pub struct SingularLocus {
    pub points: Vec<SingularPointReport>,
    pub clusters: Vec<Cluster>,
    pub evidence: EliminationRecord,
}

/// Everything needed to redo the elimination and confirm its outcome.
#[derive(Clone, Debug, PartialEq)]
pub struct EliminationRecord {
    /// Shear `X ↦ X + shear·Y` applied before working in the chart `Z = 1`.
    pub shear: i64,
    /// Univariate eliminants in `x` of the sheared partials.
    pub chart_eliminants: Vec<UniPoly<Rat>>,
    /// Their monic gcd.
    pub chart_gcd: UniPoly<Rat>,
    /// `F_X, F_Y, F_Z` restricted to `Z = 0`, as forms in `(X, Y)`.
    pub infinity_forms: [BinaryForm<Rat>; 3],
    pub infinity_gcd: BinaryForm<Rat>,
    /// Factors of the gcds that were checked and carry no singular point.
    pub rejected_factors: Vec<UniPoly<Rat>>,
}

/// Outcome of [`nonsingularity_certificate`].
#[derive(Clone, Debug)]
pub enum Smoothness {
    /// No singular point over ℚ̄.
    Smooth(NonsingularityEvidence),
    Singular(Box<SingularPointReport>),
    Inconclusive { cluster_degree: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct NonsingularityEvidence {
    pub record: EliminationRecord,
}

impl NonsingularityEvidence {
    /// Recomputes the elimination from `f` and compares it with the stored
    /// record.
    pub fn recheck(&self, f: &TriPoly<Rat>, cfg: &SingularConfig) -> bool {
        match analyze(f, cfg) {
            Ok(locus) => {
                locus.points.is_empty() && locus.clusters.is_empty() && locus.evidence == self.record
            }
            Err(_) => false,
        }
    }

    /// True when both gcds are constant, so smoothness follows without any
    /// back-substitution.
    pub fn gcds_constant(&self) -> bool {
        self.record.chart_gcd.is_constant() && self.record.infinity_gcd.is_constant()
    }
}

/// Is `F` free of repeated components? Uses `gcd(f, f_x, f_y)` on the chart
/// `Z = 1` and a direct test for `Z² | F`.
pub fn is_squarefree(f: &TriPoly<Rat>) -> Result<bool> {
    require_homogeneous(f)?;
    let at_inf = f.set_var(Z, &Rat::zero());
    let dz_at_inf = f.partial(Z).set_var(Z, &Rat::zero());
    if at_inf.is_zero() && dz_at_inf.is_zero() {
        return Ok(false);
    }
    let a = f.dehomogenize(Z);
    if a.is_constant() {
        return Ok(true);
    }
    let g = gcd2_all([&a, &a.partial(X), &a.partial(Y)]);
    Ok(g.is_constant())
}

/// All singular points over ℚ and quadratic fields, plus any unresolved
/// clusters.
pub fn enumerate_singular_points(f: &TriPoly<Rat>, cfg: &SingularConfig) -> Result<SingularLocus> {
    analyze(f, cfg)
}

fn analyze(f: &TriPoly<Rat>, cfg: &SingularConfig) -> Result<SingularLocus> {
    let deg = require_homogeneous(f)? as usize;
    if deg == 0 {
        return Err(Error::InvalidInput("curve of degree 0".into()));
    }
    if deg > cfg.degree_cap {
        return Err(Error::DegreeCap { degree: deg, cap: cfg.degree_cap });
    }
    if !is_squarefree(f)? {
        return Err(Error::NotSquarefree);
    }
    let mut points: Vec<ProjPoint> = Vec::new();
    let mut clusters = Vec::new();
    let mut rejected = Vec::new();

    // line at infinity
    let infinity_forms = gradient(f).map(|g| {
        BinaryForm::from_tri(&g.set_var(Z, &Rat::zero()), deg - 1).expect("restriction to Z = 0 is a form")
    });
    let infinity_gcd = BinaryForm::gcd_all(&infinity_forms).expect("Z^2 does not divide F");
    if !infinity_gcd.is_constant() {
        let g = infinity_gcd.to_uni();
        if g.degree() < Some(infinity_gcd.degree()) {
            points.push(ProjPoint::from_ints(1, 0, 0)?);
        }
        if !g.is_constant() {
            let part = low_degree_factors(&g, 2, &cfg.kronecker)?;
            for (p, _) in part.factors.iter().chain(&part.unresolved) {
                match roots_of(p) {
                    Some(rs) => {
                        for t in rs {
                            points.push(ProjPoint::new([t, QuadExt::one(), QuadExt::zero()])?);
                        }
                    }
                    None => clusters.push(Cluster {
                        degree: p.degree().unwrap(),
                        defining_factor: p.clone(),
                        at_infinity: true,
                    }),
                }
            }
        }
    }

    // chart Z = 1 after a shear
    let shear = choose_shear(f);
    let sheared = apply_shear(f, shear);
    let chart: Vec<TriPoly<Rat>> = gradient(&sheared).iter().map(|g| g.dehomogenize(Z)).collect();
    let chart_eliminants = eliminants(&chart)?;
    let chart_gcd = chart_eliminants.iter().fold(UniPoly::zero(), |acc, e| acc.gcd(e));
    if !chart_gcd.is_constant() {
        let part = low_degree_factors(&chart_gcd, 2, &cfg.kronecker)?;
        for (p, _) in part.factors.iter().chain(&part.unresolved) {
            let found = match roots_of(p) {
                Some(xs) => {
                    let mut found = false;
                    for x0 in xs {
                        match fiber_points(&chart, &x0, &cfg.kronecker)? {
                            Fiber::Points(ys) => {
                                for y0 in ys {
                                    found = true;
                                    let x = &x0 + &(&QuadExt::from(int(shear)) * &y0);
                                    points.push(ProjPoint::new([x, y0, QuadExt::one()])?);
                                }
                            }
                            Fiber::Cluster(k) => {
                                found = true;
                                clusters.push(Cluster {
                                    degree: k * p.degree().unwrap(),
                                    defining_factor: p.clone(),
                                    at_infinity: false,
                                });
                                break;
                            }
                        }
                    }
                    found
                }
                None => match number_field_fiber_degree(&chart, p) {
                    Some(0) => false,
                    Some(k) => {
                        clusters.push(Cluster {
                            degree: k * p.degree().unwrap(),
                            defining_factor: p.clone(),
                            at_infinity: false,
                        });
                        true
                    }
                    None => {
                        clusters.push(Cluster {
                            degree: p.degree().unwrap(),
                            defining_factor: p.clone(),
                            at_infinity: false,
                        });
                        true
                    }
                },
            };
            if !found {
                rejected.push(p.clone());
            }
        }
    }

    points.sort();
    points.dedup();
    let mut reports = Vec::with_capacity(points.len());
    for p in &points {
        if !is_singular_at(f, p)? {
            return Err(Error::Contradiction(format!("back-substituted point {p} is not singular")));
        }
        let local = multiplicity_and_cone(f, p)?;
        let conjugate_partner = (!p.is_rational()).then(|| p.conjugate());
        reports.push(SingularPointReport { point: p.clone(), multiplicity: local.multiplicity, local, conjugate_partner });
    }
    Ok(SingularLocus {
        points: reports,
        clusters,
        evidence: EliminationRecord {
            shear,
            chart_eliminants,
            chart_gcd,
            infinity_forms,
            infinity_gcd,
            rejected_factors: rejected,
        },
    })
}

fn apply_shear(f: &TriPoly<Rat>, c: i64) -> TriPoly<Rat> {
    if c == 0 {
        return f.clone();
    }
    let x = &TriPoly::var(X) + &TriPoly::var(Y).scale(&int(c));
    f.substitute(&[x, TriPoly::var(Y), TriPoly::var(Z)])
}

/// Smallest shear making every nonzero partial monic-in-`y` up to a
/// constant on the chart `Z = 1`; 0 when none in range works.
fn choose_shear(f: &TriPoly<Rat>) -> i64 {
    let good = |c: i64| {
        gradient(&apply_shear(f, c)).iter().all(|g| {
            let a = g.dehomogenize(Z);
            a.is_zero() || a.degree_in(Y) == a.total_degree()
        })
    };
    std::iter::once(0)
        .chain((1..=12).flat_map(|k| [k, -k]))
        .find(|&c| good(c))
        .unwrap_or(0)
}

/// Univariate polynomials in `x` vanishing at the `x`-coordinate of every
/// common zero of the given chart polynomials.
fn eliminants(polys: &[TriPoly<Rat>]) -> Result<Vec<UniPoly<Rat>>> {
    let nonzero: Vec<&TriPoly<Rat>> = polys.iter().filter(|p| !p.is_zero()).collect();
    let mut out = Vec::new();
    for p in &nonzero {
        if p.degree_in(Y) == Some(0) {
            out.push(p.to_uni(X).expect("polynomial in x only"));
        }
    }
    let positive: Vec<&TriPoly<Rat>> =
        nonzero.iter().copied().filter(|p| p.degree_in(Y).unwrap_or(0) > 0).collect();
    for i in 0..positive.len() {
        for j in i + 1..positive.len() {
            let r = resultant_in(positive[i], positive[j], Y)?;
            if !r.is_zero() {
                out.push(r.to_uni(X).expect("resultant in x"));
            }
        }
    }
    if out.is_empty() && positive.len() >= 2 {
        // pairs share components; try generic combinations
        let deg = positive.iter().filter_map(|p| p.total_degree()).max().unwrap_or(1) as i64;
        'search: for k in 1..=deg + 3 {
            for i in 0..positive.len() {
                for j in 0..positive.len() {
                    for l in 0..positive.len() {
                        if i == j || j == l || i == l {
                            continue;
                        }
                        let comb = positive[j] + &positive[l].scale(&int(k));
                        if comb.degree_in(Y).unwrap_or(0) == 0 {
                            continue;
                        }
                        let r = resultant_in(positive[i], &comb, Y)?;
                        if !r.is_zero() {
                            out.push(r.to_uni(X).expect("resultant in x"));
                            break 'search;
                        }
                    }
                }
            }
        }
        if out.is_empty() {
            return Err(Error::NotSquarefree);
        }
    }
    if out.is_empty() && positive.len() == 1 {
        // a single nonzero partial cannot cut out finitely many points
        return Err(Error::NotSquarefree);
    }
    Ok(out)
}

/// Roots of an irreducible factor of degree 1 or 2 as elements of ℚ or
/// ℚ(√d); `None` for higher degree.
pub(crate) fn roots_of(p: &UniPoly<Rat>) -> Option<Vec<QuadExt>> {
    let p = p.monic();
    match p.degree()? {
        1 => Some(vec![QuadExt::from(-p.coeff(0))]),
        2 => {
            let (b, c) = (p.coeff(1), p.coeff(0));
            let disc = &b * &b - int(4) * c;
            let half = Rat::new(1.into(), 2.into());
            let center = -&b * &half;
            let (n, m) = (disc.numer().clone(), disc.denom().clone());
            let radicand = i64::try_from(n * &m).ok()?;
            let scale = &half / Rat::from_integer(m);
            Some(vec![
                QuadExt::normalize(center.clone(), scale.clone(), radicand).ok()?,
                QuadExt::normalize(center, -scale, radicand).ok()?,
            ])
        }
        _ => None,
    }
}

enum Fiber {
    Points(Vec<QuadExt>),
    Cluster(usize),
}

/// Common `y`-roots of the chart polynomials over `x = x0`.
fn fiber_points(chart: &[TriPoly<Rat>], x0: &QuadExt, kcfg: &KroneckerConfig) -> Result<Fiber> {
    let restricted: Vec<UniPoly<QuadExt>> = chart
        .iter()
        .map(|p| {
            p.map(|c| QuadExt::from(c.clone()))
                .set_var(X, x0)
                .to_uni(Y)
                .expect("only y remains")
        })
        .collect();
    let g = restricted.iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p));
    if g.is_zero() {
        return Err(Error::NotSquarefree);
    }
    if g.is_constant() {
        return Ok(Fiber::Points(Vec::new()));
    }
    if x0.is_rational() {
        let gq = g.map(|c| c.as_rat().expect("rational fiber"));
        let part = low_degree_factors(&gq, 2, kcfg)?;
        let mut ys = Vec::new();
        for (q, _) in part.factors.iter().chain(&part.unresolved) {
            match roots_of(q) {
                Some(rs) => ys.extend(rs),
                None => return Ok(Fiber::Cluster(q.degree().unwrap())),
            }
        }
        return Ok(Fiber::Points(ys));
    }
    match g.degree() {
        Some(1) => Ok(Fiber::Points(vec![-g.coeff(0) / g.coeff(1)])),
        Some(2) => {
            let g = g.monic();
            let (b, c) = (g.coeff(1), g.coeff(0));
            let disc = &b * &b - QuadExt::from(int(4)) * c;
            match disc.sqrt_in(x0.d()) {
                Some(s) => {
                    let half = QuadExt::from(Rat::new(1.into(), 2.into()));
                    Ok(Fiber::Points(vec![
                        &(&s - &b) * &half,
                        &(&(-s) - &b) * &half,
                    ]))
                }
                None => Ok(Fiber::Cluster(2)),
            }
        }
        Some(k) => Ok(Fiber::Cluster(k)),
        None => unreachable!(),
    }
}

/// Arithmetic in ℚ[x]/(m).
struct NumberField<'a> {
    modulus: &'a UniPoly<Rat>,
}

impl NumberField<'_> {
    fn reduce(&self, a: &UniPoly<Rat>) -> UniPoly<Rat> {
        a.div_rem(self.modulus).1
    }

    fn mul(&self, a: &UniPoly<Rat>, b: &UniPoly<Rat>) -> UniPoly<Rat> {
        self.reduce(&(a * b))
    }

    /// Inverse by the extended Euclidean algorithm; `None` if `a` is a zero
    /// divisor (only possible when the modulus is reducible).
    fn inv(&self, a: &UniPoly<Rat>) -> Option<UniPoly<Rat>> {
        let (mut r0, mut r1) = (self.modulus.clone(), self.reduce(a));
        let (mut s0, mut s1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        (r0.degree() == Some(0)).then(|| self.reduce(&s0.scale(&(Rat::one() / r0.coeff(0)))))
    }

    fn poly_rem(&self, a: &[UniPoly<Rat>], b: &[UniPoly<Rat>]) -> Option<Vec<UniPoly<Rat>>> {
        let inv = self.inv(b.last()?)?;
        let mut r = a.to_vec();
        let db = b.len() - 1;
        while r.len() > db {
            let k = r.len() - 1 - db;
            let c = self.mul(r.last().unwrap(), &inv);
            for (i, bc) in b.iter().enumerate() {
                r[k + i] = self.reduce(&(&r[k + i] - &(&c * bc)));
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Some(r)
    }
}

/// Degree of `gcd(A(α, y), B(α, y), C(α, y))` for a root `α` of the
/// irreducible `p`, computed in ℚ(α); `None` if `p` is not a field modulus.
fn number_field_fiber_degree(chart: &[TriPoly<Rat>], p: &UniPoly<Rat>) -> Option<usize> {
    let nf = NumberField { modulus: p };
    let polys: Vec<Vec<UniPoly<Rat>>> = chart
        .iter()
        .map(|q| {
            let mut v: Vec<UniPoly<Rat>> =
                q.coeffs_in(Y).iter().map(|c| nf.reduce(&c.to_uni(X).expect("x only"))).collect();
            while v.last().is_some_and(|c| c.is_zero()) {
                v.pop();
            }
            v
        })
        .filter(|v| !v.is_empty())
        .collect();
    let mut g: Vec<UniPoly<Rat>> = Vec::new();
    for p in polys {
        let (mut a, mut b) = (p, g);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = nf.poly_rem(&a, &b)?;
            a = b;
            b = r;
        }
        g = a;
    }
    Some(g.len().saturating_sub(1))
}

/// Either a proof of smoothness over ℚ̄, a singular point, or an
/// inconclusive outcome when only clusters were found.
pub fn nonsingularity_certificate(f: &TriPoly<Rat>, cfg: &SingularConfig) -> Result<Smoothness> {
    let locus = analyze(f, cfg)?;
    if let Some(first) = locus.points.into_iter().next() {
        return Ok(Smoothness::Singular(Box::new(first)));
    }
    if let Some(c) = locus.clusters.first() {
        return Ok(Smoothness::Inconclusive { cluster_degree: c.degree });
    }
    Ok(Smoothness::Smooth(NonsingularityEvidence { record: locus.evidence }))
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenusReport {
    pub genus: usize,
    pub degree: usize,
    pub double_points: usize,
    /// Hypotheses that were assumed rather than verified.
    pub assumptions: Vec<String>,
}

/// `(d−1)(d−2)/2 − r` for a curve whose singularities are all double points.
pub fn genus(f: &TriPoly<Rat>, locus: &SingularLocus) -> Result<GenusReport> {
    let d = require_homogeneous(f)? as usize;
    if let Some(line) = find_linear_component(f) {
        return Err(Error::Reducible(line));
    }
    if let Some(c) = locus.clusters.first() {
        return Err(Error::UnresolvedCluster(c.degree));
    }
    if let Some(p) = locus.points.iter().find(|p| p.multiplicity != 2) {
        return Err(Error::HigherMultiplicity { point: p.point.to_string(), multiplicity: p.multiplicity });
    }
    let bound = (d - 1) * d.saturating_sub(2) / 2;
    let r = locus.points.len();
    if r > bound {
        return Err(Error::TooManyDoublePoints { found: r, bound });
    }
    let assumptions = if d >= 3 {
        vec!["irreducibility over Q-bar assumed (no linear component found)".to_string()]
    } else {
        Vec::new()
    };
    Ok(GenusReport { genus: bound - r, degree: d, double_points: r, assumptions })
}

/// Searches lines `aX + bY + cZ` with `|a|, |b|, |c| <= 2` contained in the
/// curve; returns the first one found, rendered.
pub fn find_linear_component(f: &TriPoly<Rat>) -> Option<String> {
    if f.total_degree() == Some(1) {
        return None;
    }
    let r = -2..=2i64;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                // first nonzero coefficient positive, gcd 1
                let first = [a, b, c].into_iter().find(|&v| v != 0);
                if first.is_none_or(|v| v < 0) {
                    continue;
                }
                if num_integer::gcd(num_integer::gcd(a, b), c) != 1 {
                    continue;
                }
                let line = &(&TriPoly::var(X).scale(&int(a)) + &TriPoly::var(Y).scale(&int(b)))
                    + &TriPoly::var(Z).scale(&int(c));
                if vanishes_on_line(f, [a, b, c]) {
                    return Some(crate::parse::render_poly(&line, &["X", "Y", "Z"]));
                }
            }
        }
    }
    None
}

fn vanishes_on_line(f: &TriPoly<Rat>, l: [i64; 3]) -> bool {
    // two independent solutions of a X + b Y + c Z = 0
    let [a, b, c] = l;
    let basis: Vec<[i64; 3]> = [[b, -a, 0], [c, 0, -a], [0, c, -b]]
        .into_iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    let (p, q) = (basis[0], basis.iter().find(|v| !proportional(**v, basis[0])).copied().unwrap_or(basis[0]));
    let form = |i: usize| {
        &BinaryForm::<Rat>::u().scale(&int(p[i])) + &BinaryForm::v().scale(&int(q[i]))
    };
    let forms = [form(0).to_tri(), form(1).to_tri(), form(2).to_tri()];
    f.substitute(&forms).is_zero()
}

fn proportional(u: [i64; 3], v: [i64; 3]) -> bool {
    u[0] * v[1] == u[1] * v[0] && u[0] * v[2] == u[2] * v[0] && u[1] * v[2] == u[2] * v[1]
}

/// Convenience: enumerate and then apply the genus formula.
pub fn genus_of(f: &TriPoly<Rat>, cfg: &SingularConfig) -> Result<GenusReport> {
    genus(f, &analyze(f, cfg)?)
}
