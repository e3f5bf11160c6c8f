//! Areas under polynomial parametrizations, and the Pythagorean triple
//! formula.

use num_bigint::BigInt;
use num_traits::Signed;

use super::RationalMap;
use crate::error::{Error, Result};
use crate::scalar::Rat;

/// `|∫_{t0}^{t1} y(t) x'(t) dt|` for a map whose affine view is polynomial.
pub fn loop_area(map: &RationalMap<Rat>, t0: &Rat, t1: &Rat) -> Result<Rat> {
    let [(xn, xd), (yn, yd)] = map.affine_view()?;
    if !xd.is_constant() || !yd.is_constant() {
        return Err(Error::InvalidInput("the affine view of the map is not polynomial".into()));
    }
    let x = xn.scale(&(Rat::from_integer(1.into()) / xd.coeff(0)));
    let y = yn.scale(&(Rat::from_integer(1.into()) / yd.coeff(0)));
    let antiderivative = (&y * &x.derivative()).integrate();
    Ok((antiderivative.eval(t1) - antiderivative.eval(t0)).abs())
}

/// `(m² − n², 2mn, m² + n²)`.
pub fn pythagorean_triple(m: &BigInt, n: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (a, b, c) = (m * m - n * n, 2 * m * n, m * m + n * n);
    assert_eq!(&a * &a + &b * &b, &c * &c);
    (a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_uni;
    use crate::poly::UniPoly;
    use crate::scalar::{int, rat};

    fn u(s: &str) -> UniPoly<Rat> {
        parse_uni(&s.into(), "t").unwrap()
    }

    #[test]
    fn areas() {
        let cubic = RationalMap::from_affine((u("t^2 - 1"), u("1")), (u("t^3 - t"), u("1"))).unwrap();
        assert_eq!(loop_area(&cubic, &int(-1), &int(1)).unwrap(), rat(8, 15));
        assert_eq!(loop_area(&cubic, &rat(3, 7), &rat(3, 7)).unwrap(), int(0));
        let diag = RationalMap::from_affine((u("t"), u("1")), (u("t"), u("1"))).unwrap();
        assert_eq!(loop_area(&diag, &int(0), &int(1)).unwrap(), rat(1, 2));
        let circle = RationalMap::from_affine((u("1 - t^2"), u("1 + t^2")), (u("2*t"), u("1 + t^2"))).unwrap();
        assert!(loop_area(&circle, &int(0), &int(1)).is_err());
    }

    #[test]
    fn triples() {
        let t = |m: i64, n: i64| pythagorean_triple(&m.into(), &n.into());
        assert_eq!(t(2, 1), (3.into(), 4.into(), 5.into()));
        assert_eq!(t(1, 1), (0.into(), 2.into(), 2.into()));
        assert_eq!(t(3, 2), (5.into(), 12.into(), 13.into()));
    }
}
