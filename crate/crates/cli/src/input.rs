//! Reading curves, maps, points and univariate polynomials from argument
//! text.

use curve_forge::parse::{identifiers, parse_point, parse_poly, parse_rational, ExprSource};
use curve_forge::parametrize::RationalMap;
use curve_forge::poly::{BinaryForm, TriPoly, UniPoly, Z};
use curve_forge::singular::ProjPoint;
use curve_forge::{Error, Rat, Result};

/// A curve as typed, and its projective closure.
pub struct Curve {
    pub projective: TriPoly<Rat>,
    /// The affine equation when the input was affine.
    pub affine: Option<TriPoly<Rat>>,
    pub diagnostics: Vec<String>,
}

pub fn curve(text: &str) -> Result<Curve> {
    let src = ExprSource::new(text, "curve");
    let ids = identifiers(&src)?;
    let lower = ids.iter().all(|v| v == "x" || v == "y");
    let upper = ids.iter().all(|v| v == "X" || v == "Y" || v == "Z");
    if lower && !ids.is_empty() {
        let f = parse_poly(&src, &["x", "y"])?;
        return Ok(homogenized(f, "x, y"));
    }
    if !upper {
        // let the parser report the first stray identifier with its position
        parse_poly(&src, &["X", "Y", "Z"])?;
        return Err(Error::InvalidInput("curves use x, y or X, Y, Z, not a mix".into()));
    }
    let f = parse_poly(&src, &["X", "Y", "Z"])?;
    if f.is_zero() || f.is_constant() {
        return Err(Error::InvalidInput("the curve equation is constant".into()));
    }
    if f.is_homogeneous() {
        return Ok(Curve { projective: f, affine: None, diagnostics: Vec::new() });
    }
    if ids.contains("Z") {
        return Err(Error::NotHomogeneous);
    }
    Ok(homogenized(f, "X, Y"))
}

fn homogenized(f: TriPoly<Rat>, vars: &str) -> Curve {
    let projective = f.homogenize(Z);
    Curve {
        projective,
        affine: Some(f),
        diagnostics: vec![format!("affine input in {vars} homogenized; affine chart Z = 1")],
    }
}

impl Curve {
    /// The affine equation in the chart `Z = 1`.
    pub fn affine_equation(&mut self) -> TriPoly<Rat> {
        if let Some(f) = &self.affine {
            return f.clone();
        }
        self.diagnostics.push("projective input dehomogenized in the chart Z = 1".into());
        self.projective.dehomogenize(Z)
    }
}

pub fn point(text: &str) -> Result<ProjPoint> {
    ProjPoint::new(parse_point(&ExprSource::new(text, "point"))?)
}

pub fn points(text: &str) -> Result<Vec<ProjPoint>> {
    text.split(';').map(point).collect()
}

/// `x(t)` as a reduced pair `(numerator, denominator)`.
pub fn fraction_in_t(text: &str, origin: &str) -> Result<(UniPoly<Rat>, UniPoly<Rat>)> {
    let (n, d) = parse_rational(&ExprSource::new(text, origin), &["t"])?;
    let uni = |p: TriPoly<Rat>| p.to_uni(0).expect("single variable");
    Ok((uni(n), uni(d)))
}

/// `"x;y"` in `t`, or `"f;g;h"` binary forms in `u, v` (or `U, V`).
pub fn map(text: &str) -> Result<RationalMap<Rat>> {
    let parts: Vec<&str> = text.split(';').collect();
    match parts.len() {
        2 => RationalMap::from_affine(fraction_in_t(parts[0], "map x")?, fraction_in_t(parts[1], "map y")?),
        3 => {
            let upper = parts.iter().any(|p| p.contains('U') || p.contains('V'));
            let vars: &[&str] = if upper { &["U", "V"] } else { &["u", "v"] };
            let mut forms = Vec::with_capacity(3);
            let mut degree = None;
            for (k, part) in parts.iter().enumerate() {
                let origin = ["map f", "map g", "map h"][k];
                let p = parse_poly(&ExprSource::new(part, origin), vars)?;
                if !p.is_zero() && !p.is_homogeneous() {
                    return Err(Error::InvalidInput(format!("{origin} is not homogeneous in {}", vars.join(", "))));
                }
                degree = degree.or(p.total_degree());
                forms.push(p);
            }
            let d = degree.ok_or(Error::ConstantMap)? as usize;
            let mut bf = forms.iter().map(|p| BinaryForm::from_tri(p, d).expect("homogeneous in two variables"));
            let (f, g, h) = (bf.next().unwrap(), bf.next().unwrap(), bf.next().unwrap());
            RationalMap::new(f, g, h)
        }
        n => Err(Error::InvalidInput(format!("a map has 2 parts (x;y) or 3 parts (f;g;h), got {n}"))),
    }
}

/// A univariate polynomial in `T` (or `t`).
pub fn uni(text: &str, origin: &str) -> Result<UniPoly<Rat>> {
    let src = ExprSource::new(text, origin);
    let var = if identifiers(&src)?.contains("t") { "t" } else { "T" };
    Ok(parse_poly(&src, &[var])?.to_uni(0).expect("single variable"))
}

pub fn rational(text: &str, origin: &str) -> Result<Rat> {
    let p = parse_poly(&ExprSource::new(text, origin), &[])?;
    Ok(p.constant_term())
}

#[cfg(test)]
mod tests {
    use super::*;
    use curve_forge::parse::render_poly;

    #[test]
    fn affine_curves_are_homogenized() {
        let c = curve("y^2 = x^3 + x^2").unwrap();
        assert_eq!(render_poly(&c.projective, &["X", "Y", "Z"]), "-X^3 - X^2*Z + Y^2*Z");
        assert_eq!(c.diagnostics.len(), 1);
        // uppercase without Z and not homogeneous is read affinely too
        let c = curve("X^3 + X^2 - Y^2").unwrap();
        assert!(c.affine.is_some());
    }

    #[test]
    fn bad_curves() {
        assert!(matches!(curve("X^2 + Z"), Err(Error::NotHomogeneous)));
        assert!(matches!(curve("x^2 + Y^2"), Err(Error::Parse(_))));
        assert!(curve("3").is_err());
    }

    #[test]
    fn maps_in_both_notations() {
        let a = map("(1-t^2)/(1+t^2);2*t/(1+t^2)").unwrap();
        let b = map("v^2 - u^2; 2*u*v; u^2 + v^2").unwrap();
        let c = map("V^2 - U^2; 2*U*V; U^2 + V^2").unwrap();
        assert_eq!(a.forms(), b.forms());
        assert_eq!(b.forms(), c.forms());
        assert!(map("t").is_err());
        assert!(map("u^2; u; v").is_err());
    }

    #[test]
    fn univariate_variable_choice() {
        assert_eq!(uni("T^2 - 1", "D").unwrap(), uni("t^2 - 1", "D").unwrap());
        assert_eq!(rational("-8/15", "r").unwrap(), Rat::new((-8).into(), 15.into()));
        assert!(rational("t", "r").is_err());
    }
}
