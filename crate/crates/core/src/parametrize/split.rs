//! Curves `F_n + F_{n−1} = 0` with a point of multiplicity `n − 1` at the
//! origin: each line `y = t·x` meets the curve in one further point.

use std::collections::BTreeSet;

use super::{verify_param, RationalMap};
use crate::error::{Error, Result};
use crate::poly::{TriPoly, UniPoly, X, Y, Z};
use crate::scalar::Rat;

/// `x = −F_{n−1}(1,t)/F_n(1,t)`, `y = t·x` for an affine curve in `x, y`.
///
/// Absolute irreducibility of the curve is assumed, not checked.
pub fn param_split_degree(f: &TriPoly<Rat>) -> Result<RationalMap<Rat>> {
    if f.uses()[Z] {
        return Err(Error::InvalidInput("expected an affine curve in x and y".into()));
    }
    let degrees: BTreeSet<u32> = f.terms().map(|(m, _)| m.total()).collect();
    let n = *degrees.last().ok_or(Error::ZeroPolynomial("curve"))?;
    if n < 2 || degrees.len() != 2 || !degrees.contains(&(n - 1)) {
        let found: Vec<String> = degrees.iter().map(u32::to_string).collect();
        return Err(Error::MethodInapplicable(format!(
            "split-degree method needs exactly the degrees n and n-1 with n >= 2; found {{{}}}",
            found.join(", ")
        )));
    }
    let at_x1 = |d: u32| -> UniPoly<Rat> {
        f.homogeneous_part(d).set_var(X, &Rat::from_integer(1.into())).to_uni(Y).expect("only y remains")
    };
    let (top, next) = (at_x1(n), at_x1(n - 1));
    if top.is_zero() {
        return Err(Error::MethodInapplicable("F_n(1, t) vanishes identically".into()));
    }
    let x_num = -next;
    let y_num = &x_num * &UniPoly::var();
    let map = RationalMap::from_affine((x_num, top.clone()), (y_num, top))?;
    if !verify_param(&f.homogenize(Z), &map) {
        return Err(Error::Contradiction("split-degree parametrization failed verification".into()));
    }
    Ok(map)
}
