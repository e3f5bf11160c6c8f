//! Rational parametrizations of plane curves.
//!
//! Maps are stored projectively as three binary forms `(f : g : h)` in
//! `(U, V)`; the affine view `x(t) = f(t,1)/h(t,1)`, `y(t) = g(t,1)/h(t,1)`
//! is derived on demand.

mod area;
mod conic;
mod kapferer;
mod quartic;
mod split;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::parse::render_form;
use crate::poly::{substitute_forms, BinaryForm, TriPoly, UniPoly};
use crate::resultant::AffineParam;
use crate::scalar::{Field, QuadExt, Rat};

pub use area::{loop_area, pythagorean_triple};
pub use conic::{conic_matrix, param_conic, param_conic_over};
pub use kapferer::{
    kapferer_witness, nonparam_certificate, DegreeComparison, KapfererWitness, NonParamCertificate,
    NonParamOutcome,
};
pub use quartic::{find_rational_nodes, param_quartic_three_nodes, rational_point_on_conic, QuarticConfig};
pub use split::param_split_degree;

pub const DEFAULT_HEIGHT_BOUND: u64 = 50;

/// Scalars a map can be normalized over.
pub trait MapScalar: Field {
    /// Removes a common scalar from the three forms so the output is
    /// canonical.
    fn normalize_forms(forms: &mut [BinaryForm<Self>; 3]);
}

fn lead_of(forms: &[BinaryForm<impl Field>; 3]) -> usize {
    [2, 1, 0].into_iter().find(|&i| !forms[i].is_zero()).expect("not all forms are zero")
}

/// `L / G` where `L` clears all denominators of `values` and `G` is the gcd
/// of the resulting integers.
fn primitive_scale<'a>(values: impl IntoIterator<Item = &'a Rat> + Clone) -> Rat {
    let l = values.clone().into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let g = values
        .into_iter()
        .fold(BigInt::zero(), |acc, r| acc.gcd(&(r * Rat::from_integer(l.clone())).to_integer()));
    if g.is_zero() {
        Rat::one()
    } else {
        Rat::new(l, g)
    }
}

impl MapScalar for Rat {
    fn normalize_forms(forms: &mut [BinaryForm<Rat>; 3]) {
        let mut s = primitive_scale(forms.iter().flat_map(|f| f.coeffs()));
        let lead = forms[lead_of(forms)].leading_coeff().unwrap().clone();
        if lead.is_negative() {
            s = -s;
        }
        for f in forms.iter_mut() {
            *f = f.scale(&s);
        }
    }
}

impl MapScalar for QuadExt {
    fn normalize_forms(forms: &mut [BinaryForm<QuadExt>; 3]) {
        let lead = forms[lead_of(forms)].leading_coeff().unwrap().clone();
        let inv = QuadExt::one() / lead;
        for f in forms.iter_mut() {
            *f = f.scale(&inv);
        }
        let parts: Vec<Rat> =
            forms.iter().flat_map(|f| f.coeffs()).flat_map(|c| [c.re().clone(), c.im().clone()]).collect();
        let s = QuadExt::from(primitive_scale(parts.iter()));
        for f in forms.iter_mut() {
            *f = f.scale(&s);
        }
    }
}

/// A projective parametrization `(f : g : h)` by coprime binary forms of a
/// common degree `m ≥ 1`, with content removed and the graded-lex leading
/// coefficient of `h` (or of `g`, then `f`, when `h = 0`) positive.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap<K = Rat> {
    forms: [BinaryForm<K>; 3],
}

impl<K: MapScalar> RationalMap<K> {
    pub fn new(f: BinaryForm<K>, g: BinaryForm<K>, h: BinaryForm<K>) -> Result<Self> {
        let m = f.degree();
        if g.degree() != m || h.degree() != m {
            return Err(Error::InvalidInput(format!(
                "map components have degrees {}, {}, {}; they must be equal",
                f.degree(),
                g.degree(),
                h.degree()
            )));
        }
        let Some(common) = BinaryForm::gcd_all([&f, &g, &h]) else {
            return Err(Error::ZeroPolynomial("map"));
        };
        let mut forms = [f, g, h].map(|c| c.div_exact(&common).expect("gcd divides"));
        if forms[0].degree() == 0 {
            return Err(Error::ConstantMap);
        }
        K::normalize_forms(&mut forms);
        Ok(RationalMap { forms })
    }

    pub fn forms(&self) -> &[BinaryForm<K>; 3] {
        &self.forms
    }

    pub fn f(&self) -> &BinaryForm<K> {
        &self.forms[0]
    }

    pub fn g(&self) -> &BinaryForm<K> {
        &self.forms[1]
    }

    pub fn h(&self) -> &BinaryForm<K> {
        &self.forms[2]
    }

    pub fn degree(&self) -> usize {
        self.forms[0].degree()
    }

    pub fn eval(&self, u: &K, v: &K) -> [K; 3] {
        [0, 1, 2].map(|i| self.forms[i].eval(u, v))
    }

    /// `x(t)` and `y(t)` as reduced fractions with monic denominators.
    pub fn affine_view(&self) -> Result<[(UniPoly<K>, UniPoly<K>); 2]> {
        let h = self.h().to_uni();
        if h.is_zero() {
            return Err(Error::InvalidInput("h = 0: the map lies on the line at infinity".into()));
        }
        let reduce = |n: UniPoly<K>| {
            let g = n.gcd(&h);
            let (mut n, mut d) = if g.is_zero() {
                (n, h.clone())
            } else {
                (n.div_exact(&g).unwrap(), h.div_exact(&g).unwrap())
            };
            let lc = d.lc();
            n = n.scale(&(K::one() / lc.clone()));
            d = d.scale(&(K::one() / lc));
            (n, d)
        };
        Ok([reduce(self.f().to_uni()), reduce(self.g().to_uni())])
    }

    /// `F(f, g, h)`.
    pub fn substitute_into(&self, curve: &TriPoly<Rat>) -> Result<BinaryForm<K>> {
        let lifted = curve.map(|c| K::from_rat(c.clone()));
        substitute_forms(&lifted, [&self.forms[0], &self.forms[1], &self.forms[2]])
    }
}

impl RationalMap<Rat> {
    /// From `x = xn/xd`, `y = yn/yd` in `t = U/V`.
    pub fn from_affine(x: (UniPoly<Rat>, UniPoly<Rat>), y: (UniPoly<Rat>, UniPoly<Rat>)) -> Result<Self> {
        let p = AffineParam::from_fractions(x, y)?;
        let m = [&p.fx, &p.fy, &p.h].iter().filter_map(|q| q.degree()).max().unwrap_or(0);
        if m == 0 {
            return Err(Error::ConstantMap);
        }
        Self::new(BinaryForm::from_uni(&p.fx, m), BinaryForm::from_uni(&p.fy, m), BinaryForm::from_uni(&p.h, m))
    }

    pub fn to_affine_param(&self) -> Result<AffineParam> {
        let [x, y] = self.affine_view()?;
        AffineParam::from_fractions(x, y)
    }

    pub fn to_quadratic(&self) -> RationalMap<QuadExt> {
        RationalMap { forms: self.forms.clone().map(|f| f.map(|c| QuadExt::from(c.clone()))) }
    }
}

impl<K: MapScalar> fmt::Display for RationalMap<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |g: &BinaryForm<K>| render_form(g, ["u", "v"]);
        write!(f, "({} : {} : {})", r(self.f()), r(self.g()), r(self.h()))
    }
}

/// True iff `F(f, g, h)` is the zero form.
pub fn verify_param<K: MapScalar>(curve: &TriPoly<Rat>, map: &RationalMap<K>) -> bool {
    map.substitute_into(curve).is_ok_and(|r| r.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_uni};

    fn bf(cs: &[i64]) -> BinaryForm<Rat> {
        BinaryForm::from_i64s(cs)
    }

    fn u(s: &str) -> UniPoly<Rat> {
        parse_uni(&s.into(), "t").unwrap()
    }

    fn curve(s: &str) -> TriPoly<Rat> {
        parse_poly(&s.into(), &["X", "Y", "Z"]).unwrap()
    }

    #[test]
    fn normalization() {
        // (2u^2 - 2v^2 : -4uv : -2u^2 - 2v^2) scales to the unit-circle map
        let m = RationalMap::new(bf(&[-2, 0, 2]), bf(&[0, -4, 0]), bf(&[-2, 0, -2])).unwrap();
        assert_eq!(m.to_string(), "(-u^2 + v^2 : 2*u*v : u^2 + v^2)");
        // common factor u is removed
        let m = RationalMap::new(bf(&[0, 1, 0]), bf(&[0, 0, 1]), bf(&[0, 1, 1])).unwrap();
        assert_eq!(m.degree(), 1);
        assert!(matches!(
            RationalMap::new(bf(&[0, 1]), bf(&[0, 2]), bf(&[0, 0])),
            Err(Error::ConstantMap)
        ));
        assert!(RationalMap::new(bf(&[0, 1]), bf(&[0, 0, 1]), bf(&[1, 0])).is_err());
    }

    #[test]
    fn affine_round_trip() {
        let m = RationalMap::from_affine((u("1 - t^2"), u("1 + t^2")), (u("2*t"), u("1 + t^2"))).unwrap();
        assert_eq!(m.to_string(), "(-u^2 + v^2 : 2*u*v : u^2 + v^2)");
        let [x, y] = m.affine_view().unwrap();
        assert_eq!((x.0, x.1), (u("1 - t^2"), u("1 + t^2")));
        assert_eq!((y.0, y.1), (u("2*t"), u("1 + t^2")));
    }

    #[test]
    fn verification() {
        let circle = curve("X^2 + Y^2 - Z^2");
        let pt = RationalMap::from_affine((u("1 - t^2"), u("1 + t^2")), (u("2*t"), u("1 + t^2"))).unwrap();
        assert!(verify_param(&circle, &pt));
        let diag = RationalMap::from_affine((u("t"), u("1")), (u("t"), u("1"))).unwrap();
        assert!(!verify_param(&circle, &diag));
        let lem = curve("(X^2 + Y^2)^2 - (X^2 - Y^2)*Z^2");
        let m = RationalMap::from_affine((u("t*(t^2+1)"), u("t^4+1")), (u("t*(t^2-1)"), u("t^4+1"))).unwrap();
        assert!(verify_param(&lem, &m));
        assert!(!verify_param(&curve("X^2 + Y"), &pt));
    }

    #[test]
    fn quadratic_normalization_makes_lead_one() {
        let i = QuadExt::sqrt_of(-1).unwrap();
        let f = BinaryForm::new(vec![i.clone(), QuadExt::zero()]);
        let g = BinaryForm::new(vec![QuadExt::zero(), QuadExt::from(Rat::from_integer(2.into()))]);
        let h = BinaryForm::new(vec![QuadExt::one(), i.clone()]);
        let m = RationalMap::new(f, g, h).unwrap();
        // h = 1*v + i*u becomes u - i*v after dividing by its lead i
        assert!(m.h().leading_coeff().unwrap().is_one());
    }
}
