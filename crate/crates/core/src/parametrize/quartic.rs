//! Quartics with three rational double points, via the standard quadratic
//! (Cremona) transformation.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::conic::conic_map;
use super::{verify_param, RationalMap, DEFAULT_HEIGHT_BOUND};
use crate::error::{Error, Result};
use crate::parse::render_poly;
use crate::poly::{BinaryForm, Mono, TriPoly, X, Y, Z};
use crate::scalar::{int, Rat};
use crate::singular::{enumerate_singular_points, is_singular_at, multiplicity_and_cone, ProjPoint, SingularConfig};

#[derive(Clone, Debug)]
pub struct QuarticConfig {
    /// Largest `max(|x|, |y|, |z|)` tried when looking for a rational point
    /// on the transformed conic.
    pub height_bound: u64,
    pub singular: SingularConfig,
}

impl Default for QuarticConfig {
    fn default() -> Self {
        QuarticConfig { height_bound: DEFAULT_HEIGHT_BOUND, singular: SingularConfig::default() }
    }
}

/// Monomials allowed once the nodes sit at the coordinate points.
const NODE_SHAPE: [[u32; 3]; 6] = [[2, 2, 0], [0, 2, 2], [2, 0, 2], [1, 1, 2], [2, 1, 1], [1, 2, 1]];

/// The three double points of `f`, when there are exactly three and all
/// are rational.
pub fn find_rational_nodes(f: &TriPoly<Rat>, cfg: &SingularConfig) -> Result<[ProjPoint; 3]> {
    let locus = enumerate_singular_points(f, cfg)?;
    if let Some(c) = locus.clusters.first() {
        return Err(Error::UnresolvedCluster(c.degree));
    }
    let pts: Vec<ProjPoint> = locus.points.iter().map(|r| r.point.clone()).collect();
    if pts.len() != 3 {
        return Err(Error::MethodInapplicable(format!(
            "the quartic has {} singular points; three are needed",
            pts.len()
        )));
    }
    if let Some(bad) = pts.iter().find(|p| !p.is_rational()) {
        return Err(Error::MethodInapplicable(format!("node {bad} is not rational")));
    }
    Ok([pts[0].clone(), pts[1].clone(), pts[2].clone()])
}

/// Parametrizes a quartic with three rational, non-collinear nodes.
pub fn param_quartic_three_nodes(
    f: &TriPoly<Rat>,
    nodes: &[ProjPoint; 3],
    cfg: &QuarticConfig,
) -> Result<RationalMap<Rat>> {
    if f.total_degree() != Some(4) || !f.is_homogeneous() {
        return Err(Error::InvalidInput("expected a homogeneous quartic in X, Y, Z".into()));
    }
    let irrational: Vec<String> = nodes.iter().filter(|p| !p.is_rational()).map(|p| p.to_string()).collect();
    if !irrational.is_empty() {
        return Err(Error::MethodInapplicable(format!(
            "nodes {} are not rational",
            irrational.join(", ")
        )));
    }
    for p in nodes {
        if !is_singular_at(f, p)? {
            return Err(Error::InvalidInput(format!("{p} is not a singular point of the curve")));
        }
        let m = multiplicity_and_cone(f, p)?.multiplicity;
        if m != 2 {
            return Err(Error::MethodInapplicable(format!("{p} has multiplicity {m}, not 2")));
        }
    }
    let cols: Vec<[Rat; 3]> = nodes.iter().map(|p| p.rational_coords().unwrap()).collect();
    // m[i][j] = coordinate i of node j
    let m: [[Rat; 3]; 3] = [0, 1, 2].map(|i| [0, 1, 2].map(|j| cols[j][i].clone()));
    let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    if det.is_zero() {
        return Err(Error::MethodInapplicable("the three nodes are collinear".into()));
    }
    let linear = |row: &[Rat; 3]| {
        (0..3).fold(TriPoly::zero(), |acc, j| &acc + &TriPoly::var(j).scale(&row[j]))
    };
    let g = f.substitute(&[linear(&m[0]), linear(&m[1]), linear(&m[2])]);
    if let Some((mono, _)) = g.terms().find(|(mono, _)| !NODE_SHAPE.contains(&mono.0)) {
        return Err(Error::MethodInapplicable(format!(
            "after moving the nodes to the coordinate points the quartic has the term {}; \
             a singular point is worse than a node",
            render_poly(&TriPoly::monomial(int(1), *mono), &["X", "Y", "Z"])
        )));
    }
    // (X : Y : Z) -> (YZ : XZ : XY) and cancel X^2 Y^2 Z^2
    let cremona = [
        &TriPoly::var(Y) * &TriPoly::var(Z),
        &TriPoly::var(X) * &TriPoly::var(Z),
        &TriPoly::var(X) * &TriPoly::var(Y),
    ];
    let conic = g
        .substitute(&cremona)
        .div_exact(&TriPoly::monomial(int(1), Mono([2, 2, 2])))
        .expect("six-term shape is divisible by X^2 Y^2 Z^2");
    let Some(q) = rational_point_on_conic(&conic, cfg.height_bound) else {
        return Err(Error::NoRationalPoint {
            conic: render_poly(&conic.primitive(), &["X", "Y", "Z"]),
            bound: cfg.height_bound,
        });
    };
    let conic_param = conic_map(&conic, &q.map(int))?;
    let [cf, cg, ch] = conic_param.forms().clone();
    let back = [&cg * &ch, &cf * &ch, &cf * &cg];
    let comps: Vec<BinaryForm<Rat>> = m
        .iter()
        .map(|row| (0..3).fold(BinaryForm::zero(4), |acc, j| &acc + &back[j].scale(&row[j])))
        .collect();
    let [a, b, c]: [BinaryForm<Rat>; 3] = comps.try_into().expect("three components");
    let map = RationalMap::new(a, b, c)?;
    if !verify_param(f, &map) {
        return Err(Error::Contradiction("three-node parametrization failed verification".into()));
    }
    Ok(map)
}

/// First point of `conic` in order of height `max(|x|, |y|, |z|)`, then
/// lexicographic `(x, y, z)`, among primitive integer triples whose last
/// nonzero coordinate is positive.
pub fn rational_point_on_conic(conic: &TriPoly<Rat>, bound: u64) -> Option<[i64; 3]> {
    let prim = conic.primitive();
    let terms: Option<Vec<([u32; 3], i128)>> =
        prim.terms().map(|(m, c)| Some((m.0, c.to_integer().to_i128()?))).collect();
    let fast = |p: [i64; 3]| -> Option<bool> {
        let mut acc: i128 = 0;
        for (e, c) in terms.as_ref()? {
            let mut t = *c;
            for k in 0..3 {
                t = t.checked_mul((p[k] as i128).checked_pow(e[k])?)?;
            }
            acc = acc.checked_add(t)?;
        }
        Some(acc == 0)
    };
    let on_conic = |p: [i64; 3]| fast(p).unwrap_or_else(|| prim.eval(&p.map(int)).is_zero());
    let bound = bound.min(i64::MAX as u64 / 2) as i64;
    for h in 1..=bound {
        for x in -h..=h {
            for y in -h..=h {
                let zs: Vec<i64> = if x.abs() == h || y.abs() == h { (-h..=h).collect() } else { vec![-h, h] };
                for z in zs {
                    let p = [x, y, z];
                    if p.iter().rev().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
                        continue;
                    }
                    if x.gcd(&y).gcd(&z) != 1 {
                        continue;
                    }
                    if on_conic(p) {
                        return Some(p);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_point, parse_poly};

    fn curve(s: &str) -> TriPoly<Rat> {
        parse_poly(&s.into(), &["X", "Y", "Z"]).unwrap()
    }

    fn pt(s: &str) -> ProjPoint {
        ProjPoint::new(parse_point(&s.into()).unwrap()).unwrap()
    }

    fn coordinate_nodes() -> [ProjPoint; 3] {
        [pt("[1:0:0]"), pt("[0:1:0]"), pt("[0:0:1]")]
    }

    #[test]
    fn point_search_order() {
        assert_eq!(rational_point_on_conic(&curve("X^2 + Y^2 - Z^2"), 5), Some([-1, 0, 1]));
        assert_eq!(rational_point_on_conic(&curve("X^2 + Y^2 + Z^2"), 20), None);
        // (-1, -1, 1) and (-1, 0, 1) come earlier in the order but miss
        assert_eq!(rational_point_on_conic(&curve("X^2 - 2*Z^2 + Y*Z"), 3), Some([-1, 1, 1]));
    }

    #[test]
    fn cremona_example() {
        let f = curve("X^2*Y^2 - Y^2*Z^2 - X^2*Z^2");
        let m = param_quartic_three_nodes(&f, &coordinate_nodes(), &QuarticConfig::default()).unwrap();
        assert_eq!(m.degree(), 4);
        assert!(verify_param(&f, &m));
        // proportional to (2uv(u^2+v^2) : (v^2-u^2)(u^2+v^2) : 2uv(v^2-u^2))
        let expect = [
            BinaryForm::from_i64s(&[0, 2, 0, 2, 0]),
            BinaryForm::from_i64s(&[1, 0, 0, 0, -1]),
            BinaryForm::from_i64s(&[0, 2, 0, -2, 0]),
        ];
        let s = int(-1);
        for (got, want) in m.forms().iter().zip(&expect) {
            assert_eq!(*got, want.scale(&s));
        }
    }

    #[test]
    fn anisotropic_conic() {
        let f = curve("X^2*Y^2 + Y^2*Z^2 + X^2*Z^2");
        let err = param_quartic_three_nodes(&f, &coordinate_nodes(), &QuarticConfig::default()).unwrap_err();
        assert!(matches!(err, Error::NoRationalPoint { bound: 50, .. }), "{err}");
        assert_eq!(err.class(), crate::ErrorClass::Inconclusive);
    }

    #[test]
    fn lemniscate_nodes_are_not_rational() {
        let f = curve("(X^2 + Y^2)^2 - (X^2 - Y^2)*Z^2");
        let nodes = [pt("[0:0:1]"), pt("[1:i:0]"), pt("[1:-i:0]")];
        let err = param_quartic_three_nodes(&f, &nodes, &QuarticConfig::default()).unwrap_err();
        assert!(matches!(err, Error::MethodInapplicable(_)));
        assert!(matches!(find_rational_nodes(&f, &SingularConfig::default()), Err(Error::MethodInapplicable(_))));
    }

    #[test]
    fn moved_nodes() {
        // the Cremona example pulled back by X -> X + Z, so the nodes move
        let f = curve("X^2*Y^2 - Y^2*Z^2 - X^2*Z^2")
            .substitute(&[&TriPoly::var(X) + &TriPoly::var(Z), TriPoly::var(Y), TriPoly::var(Z)]);
        let nodes = find_rational_nodes(&f, &SingularConfig::default()).unwrap();
        let m = param_quartic_three_nodes(&f, &nodes, &QuarticConfig::default()).unwrap();
        assert!(verify_param(&f, &m));
        assert_eq!(m.degree(), 4);
    }

    #[test]
    fn wrong_nodes() {
        let f = curve("X^2*Y^2 - Y^2*Z^2 - X^2*Z^2");
        let nodes = [pt("[1:0:0]"), pt("[0:1:0]"), pt("[1:1:1]")];
        assert!(matches!(
            param_quartic_three_nodes(&f, &nodes, &QuarticConfig::default()),
            Err(Error::InvalidInput(_))
        ));
    }
}
