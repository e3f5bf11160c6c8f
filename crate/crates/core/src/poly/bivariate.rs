//! Gcd of polynomials in two variables (slots 0 and 1 of a [`TriPoly`]),
//! by the recursive primitive pseudo-remainder sequence over `ℚ[y][x]`.

use super::tri::TriPoly;
use super::uni::UniPoly;
use crate::scalar::Rat;

type Bi = Vec<UniPoly<Rat>>;

fn to_bi(p: &TriPoly<Rat>) -> Bi {
    p.coeffs_in(0)
        .iter()
        .map(|c| c.to_uni(1).expect("bivariate polynomial in slots 0 and 1"))
        .collect()
}

fn from_bi(b: &[UniPoly<Rat>]) -> TriPoly<Rat> {
    let mut out = TriPoly::zero();
    for (i, c) in b.iter().enumerate() {
        out = &out + &TriPoly::from_uni(c, 1).mul_mono(&super::tri::Mono([i as u32, 0, 0]));
    }
    out
}

fn trim(mut b: Bi) -> Bi {
    while b.last().is_some_and(|c| c.is_zero()) {
        b.pop();
    }
    b
}

fn content(b: &[UniPoly<Rat>]) -> UniPoly<Rat> {
    b.iter().fold(UniPoly::zero(), |acc, c| acc.gcd(c))
}

fn div_by(b: &[UniPoly<Rat>], c: &UniPoly<Rat>) -> Bi {
    b.iter().map(|x| x.div_exact(c).expect("content divides")).collect()
}

fn prem(a: &[UniPoly<Rat>], b: &[UniPoly<Rat>]) -> Bi {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r: Bi = a.to_vec();
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] = &r[k + i] - &(&lr * bc);
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Gcd up to a rational scalar, returned primitive with positive leading
/// coefficient. Both inputs must only use slots 0 and 1.
pub fn gcd2(a: &TriPoly<Rat>, b: &TriPoly<Rat>) -> TriPoly<Rat> {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let (mut x, mut y) = (trim(to_bi(a)), trim(to_bi(b)));
    let cx = content(&x);
    let cy = content(&y);
    let c = cx.gcd(&cy);
    x = div_by(&x, &cx);
    y = div_by(&y, &cy);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { div_by(&r, &content(&r)) };
    }
    let g = if x.len() <= 1 { vec![UniPoly::one()] } else { x };
    let g: Bi = g.iter().map(|coef| coef * &c).collect();
    from_bi(&g).primitive()
}

pub fn gcd2_all<'a>(ps: impl IntoIterator<Item = &'a TriPoly<Rat>>) -> TriPoly<Rat> {
    ps.into_iter().fold(TriPoly::zero(), |acc, p| gcd2(&acc, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn x() -> TriPoly<Rat> {
        TriPoly::var(0)
    }
    fn y() -> TriPoly<Rat> {
        TriPoly::var(1)
    }
    fn c(n: i64) -> TriPoly<Rat> {
        TriPoly::constant(int(n))
    }

    #[test]
    fn common_factor_is_found() {
        let g = &(&x() * &y()) + &c(1);
        let a = &g * &(&x() - &y().pow(2));
        let b = &g * &(&(&x() + &y()) + &c(3));
        assert_eq!(gcd2(&a, &b), g);
    }

    #[test]
    fn factors_only_in_y() {
        let a = &(&y() - &c(1)) * &x();
        let b = &(&y() - &c(1)) * &(&x() + &c(2));
        assert_eq!(gcd2(&a, &b), &y() - &c(1));
    }

    #[test]
    fn coprime_inputs() {
        let a = &x().pow(2) + &y().pow(2);
        let b = &x() - &c(1);
        assert_eq!(gcd2(&a, &b), c(1));
    }
}
