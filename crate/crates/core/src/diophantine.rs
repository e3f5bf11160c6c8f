//! Polynomial Diophantine checks: the abc inequality for polynomials,
//! polynomial Fermat and Pell equations, and local solvability of
//! `b1·m⁴ + a·m²n² + b2·n⁴ = e²` at odd primes.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::factor::is_prime_u64;
use crate::poly::UniPoly;
use crate::scalar::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasonReport {
    pub degrees: [usize; 3],
    /// Degree of the radical of `ABC`.
    pub radical_degree: usize,
    /// `deg rad(ABC) − 1 − max deg`; nonnegative when the inequality holds.
    pub slack: i64,
    pub holds: bool,
}

/// Checks `max(deg A, deg B, deg C) ≤ deg rad(ABC) − 1` for coprime
/// `A + B + C = 0`, not all constant.
pub fn mason_check(a: &UniPoly<Rat>, b: &UniPoly<Rat>, c: &UniPoly<Rat>) -> Result<MasonReport> {
    let (Some(da), Some(db), Some(dc)) = (a.degree(), b.degree(), c.degree()) else {
        return Err(Error::ZeroPolynomial("each of A, B, C"));
    };
    if !(&(a + b) + c).is_zero() {
        return Err(Error::InvalidInput("A + B + C is not zero".into()));
    }
    let g = a.gcd(b).gcd(c);
    if !g.is_constant() {
        return Err(Error::InvalidInput(format!(
            "A, B, C share the factor {}",
            crate::parse::render_uni(&g, "T")
        )));
    }
    if da == 0 && db == 0 && dc == 0 {
        return Err(Error::InvalidInput("A, B, C are all constant".into()));
    }
    let radical_degree = (&(a * b) * c).radical()?.degree().unwrap_or(0);
    let top = da.max(db).max(dc);
    let slack = radical_degree as i64 - 1 - top as i64;
    if slack < 0 {
        return Err(Error::Contradiction(format!(
            "max degree {top} exceeds deg rad(ABC) - 1 = {}",
            radical_degree as i64 - 1
        )));
    }
    Ok(MasonReport { degrees: [da, db, dc], radical_degree, slack, holds: true })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FermatVerdict {
    /// `xⁿ + yⁿ ≠ zⁿ`.
    NotASolution,
    /// A component is zero.
    Trivial,
    /// After removing the common factor all components are constant.
    ConstantSolution,
    /// A coprime nonconstant solution with `n = 2`.
    Pythagorean,
}

impl fmt::Display for FermatVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FermatVerdict::NotASolution => "not a solution",
            FermatVerdict::Trivial => "trivial (a component is zero)",
            FermatVerdict::ConstantSolution => "constant solution up to a common factor",
            FermatVerdict::Pythagorean => "valid polynomial Pythagorean solution",
        })
    }
}

pub fn fermat_poly_check(x: &UniPoly<Rat>, y: &UniPoly<Rat>, z: &UniPoly<Rat>, n: u32) -> Result<FermatVerdict> {
    if n < 2 {
        return Err(Error::InvalidInput("the exponent must be at least 2".into()));
    }
    if &x.pow(n) + &y.pow(n) != z.pow(n) {
        return Ok(FermatVerdict::NotASolution);
    }
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return Ok(FermatVerdict::Trivial);
    }
    let g = x.gcd(y).gcd(z);
    let reduced = [x, y, z].map(|p| p.div_exact(&g).expect("gcd divides"));
    if reduced.iter().all(|p| p.is_constant()) {
        return Ok(FermatVerdict::ConstantSolution);
    }
    if n > 2 {
        return Err(Error::Contradiction(format!(
            "nonconstant coprime polynomial solution of x^{n} + y^{n} = z^{n}"
        )));
    }
    Ok(FermatVerdict::Pythagorean)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PellReport {
    pub degree: usize,
    /// Number of distinct complex roots of `D`.
    pub distinct_roots: usize,
    /// `2·n(D) − 2`.
    pub bound: i64,
    pub possible: bool,
    pub solution: Option<(UniPoly<Rat>, UniPoly<Rat>)>,
}

/// Degree obstruction for `X² − D·Y² = 1` with `Y ≠ 0`.
pub fn pell_bound_check(d: &UniPoly<Rat>, solution: Option<(UniPoly<Rat>, UniPoly<Rat>)>) -> Result<PellReport> {
    let degree = match d.degree() {
        Some(k) if k > 0 => k,
        _ => return Err(Error::InvalidInput("D must be nonconstant".into())),
    };
    let distinct_roots = d.radical()?.degree().unwrap_or(0);
    let bound = 2 * distinct_roots as i64 - 2;
    let possible = degree as i64 <= bound;
    if let Some((x, y)) = &solution {
        if y.is_zero() {
            return Err(Error::InvalidInput("Y must be nonzero".into()));
        }
        if &(x * x) - &(&(d * y) * y) != UniPoly::one() {
            return Err(Error::InvalidInput("the supplied pair does not satisfy X^2 - D*Y^2 = 1".into()));
        }
        if !possible {
            return Err(Error::Contradiction(format!(
                "a solution exists although deg D = {degree} > 2n(D) - 2 = {bound}"
            )));
        }
    }
    Ok(PellReport { degree, distinct_roots, bound, possible, solution })
}

pub const DEFAULT_PRIME_CAP: u64 = 10007;

#[derive(Clone, Debug)]
pub struct LocalConfig {
    pub prime_cap: u64,
    /// Also run the conic route and require agreement.
    pub cross_check: bool,
}

impl Default for LocalConfig {
    fn default() -> Self {
        LocalConfig { prime_cap: DEFAULT_PRIME_CAP, cross_check: false }
    }
}

/// Which first partial derivative is nonzero mod `p` at the solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmoothWitness {
    /// `2e`.
    E(u64),
    /// `4·b1·m³ + 2·a·m·n²`.
    M(u64),
    /// `2·a·m²·n + 4·b2·n³`.
    N(u64),
}

impl fmt::Display for SmoothWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmoothWitness::E(v) => write!(f, "d/de = 2e = {v}"),
            SmoothWitness::M(v) => write!(f, "d/dm = {v}"),
            SmoothWitness::N(v) => write!(f, "d/dn = {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCert {
    pub b1: i64,
    pub a: i64,
    pub b2: i64,
    pub p: u64,
    pub m: u64,
    pub n: u64,
    pub e: u64,
    pub witness: SmoothWitness,
    /// Whether `p ∤ 2·a·b1·b2·(a² − 4·b1·b2)`.
    pub condition_holds: bool,
}

struct Quartic {
    b1: i128,
    a: i128,
    b2: i128,
    p: i128,
}

impl Quartic {
    fn new(b1: i64, a: i64, b2: i64, p: u64) -> Self {
        let p = p as i128;
        let r = |v: i64| (v as i128).rem_euclid(p);
        Quartic { b1: r(b1), a: r(a), b2: r(b2), p }
    }

    fn md(&self, v: i128) -> i128 {
        v.rem_euclid(self.p)
    }

    fn value(&self, m: i128, n: i128) -> i128 {
        let (m2, n2) = (self.md(m * m), self.md(n * n));
        self.md(self.md(self.b1 * self.md(m2 * m2)) + self.md(self.a * self.md(m2 * n2)) + self.md(self.b2 * self.md(n2 * n2)))
    }

    fn witness(&self, m: i128, n: i128, e: i128) -> Option<SmoothWitness> {
        let de = self.md(2 * e);
        if de != 0 {
            return Some(SmoothWitness::E(de as u64));
        }
        let dm = self.md(4 * self.b1 * self.md(m * m * m) + 2 * self.a * self.md(m * n * n));
        if dm != 0 {
            return Some(SmoothWitness::M(dm as u64));
        }
        let dn = self.md(2 * self.a * self.md(m * m * n) + 4 * self.b2 * self.md(n * n * n));
        (dn != 0).then_some(SmoothWitness::N(dn as u64))
    }
}

impl LocalCert {
    /// Recomputes the congruence and the smoothness witness from scratch.
    pub fn recheck(&self) -> bool {
        if self.p == 2 || !is_prime_u64(self.p) || (self.m.is_multiple_of(self.p) && self.n.is_multiple_of(self.p)) {
            return false;
        }
        let q = Quartic::new(self.b1, self.a, self.b2, self.p);
        let (m, n, e) = (self.m as i128, self.n as i128, self.e as i128);
        q.value(m, n) == q.md(e * e)
            && q.witness(m, n, e) == Some(self.witness)
            && condition_holds(self.b1, self.a, self.b2, self.p) == self.condition_holds
    }
}

fn condition_holds(b1: i64, a: i64, b2: i64, p: u64) -> bool {
    let p = p as i128;
    let r = |v: i128| v.rem_euclid(p);
    let (b1, a, b2) = (b1 as i128, a as i128, b2 as i128);
    let disc = r(r(a * a) - r(4 * r(b1 * b2)));
    r(r(r(2 * r(a)) * r(b1)) * r(b2)) * disc % p != 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalOutcome {
    Certificate(LocalCert),
    /// No smooth solution mod `p`; only possible when the condition fails.
    Exhausted { condition_holds: bool },
}

/// Searches `𝔽_p²` for a smooth solution of `b1·m⁴ + a·m²n² + b2·n⁴ = e²`
/// with `(m, n) ≠ (0, 0)`, which lifts to `ℤ_p` by Hensel's lemma. The
/// order is `n` outer, `m` inner, smallest `e`.
pub fn local_solvability(b1: i64, a: i64, b2: i64, p: u64, cfg: &LocalConfig) -> Result<LocalOutcome> {
    if p == 2 {
        return Err(Error::InvalidInput("p = 2 is not supported".into()));
    }
    if !is_prime_u64(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if p > cfg.prime_cap {
        return Err(Error::InvalidInput(format!("p = {p} exceeds the prime cap {}", cfg.prime_cap)));
    }
    if b1 == 0 || b2 == 0 {
        return Err(Error::InvalidInput("b1 and b2 must be nonzero".into()));
    }
    let q = Quartic::new(b1, a, b2, p);
    let pp = p as i128;
    let mut root = vec![None; p as usize];
    for e in (0..pp).rev() {
        root[q.md(e * e) as usize] = Some(e);
    }
    let cond = condition_holds(b1, a, b2, p);
    let mut found = None;
    'search: for n in 0..pp {
        for m in 0..pp {
            if m == 0 && n == 0 {
                continue;
            }
            if let Some(e) = root[q.value(m, n) as usize] {
                if let Some(w) = q.witness(m, n, e) {
                    found = Some(LocalCert {
                        b1,
                        a,
                        b2,
                        p,
                        m: m as u64,
                        n: n as u64,
                        e: e as u64,
                        witness: w,
                        condition_holds: cond,
                    });
                    break 'search;
                }
            }
        }
    }
    if cfg.cross_check && cond {
        let other = conic_route(&q, &root);
        if other.is_some() != found.is_some() {
            return Err(Error::Contradiction("brute force and the conic route disagree".into()));
        }
    }
    match found {
        Some(c) => Ok(LocalOutcome::Certificate(c)),
        None if cond => Err(Error::Contradiction(format!(
            "no smooth solution mod {p} although p does not divide 2*a*b1*b2*(a^2 - 4*b1*b2)"
        ))),
        None => Ok(LocalOutcome::Exhausted { condition_holds: false }),
    }
}

/// The route through the conic `b1·X² + a·XY + b2·Y² = W²`: parametrize
/// it by lines through one of its points and keep points where `X·Y` is a
/// square, so that `X = λm²`, `Y = λn²` after scaling. Returns a smooth
/// `(m, n, e)`. Needs a nondegenerate conic.
fn conic_route(q: &Quartic, root: &[Option<i128>]) -> Option<(i128, i128, i128)> {
    let p = q.p;
    let md = |v: i128| v.rem_euclid(p);
    let c = |x: i128, y: i128, w: i128| md(q.b1 * md(x * x) + q.a * md(x * y) + q.b2 * md(y * y) - md(w * w));
    let p0 = (0..p)
        .flat_map(|x| (0..p).map(move |y| (x, y)))
        .find_map(|(x, y)| {
            if x == 0 && y == 0 {
                return None;
            }
            root[c(x, y, 0) as usize].map(|w| [x, y, w])
        })?;
    let grad = [
        md(2 * q.b1 * p0[0] + q.a * p0[1]),
        md(q.a * p0[0] + 2 * q.b2 * p0[1]),
        md(-2 * p0[2]),
    ];
    // p0 has x or y nonzero, so a complement is spanned by W and the other axis
    let (i, j) = if p0[0] != 0 { (1, 2) } else { (0, 2) };
    let params = (0..p).map(|t| (t, 1)).chain(std::iter::once((1, 0)));
    for (u, v) in params {
        let mut w = [0i128; 3];
        w[i] = u;
        w[j] = v;
        let lin = md(grad[0] * w[0] + grad[1] * w[1] + grad[2] * w[2]);
        let cw = c(w[0], w[1], w[2]);
        let pt = [0, 1, 2].map(|k| md(lin * w[k] - cw * p0[k]));
        let (x, y, wv) = (pt[0], pt[1], pt[2]);
        if x == 0 && y == 0 {
            continue;
        }
        let lam = if x != 0 { x } else { y };
        let (Some(m), Some(n)) = (root[md(lam * x) as usize], root[md(lam * y) as usize]) else {
            continue;
        };
        let e = md(lam * wv);
        debug_assert_eq!(q.value(m, n), md(e * e));
        if q.witness(m, n, e).is_some() {
            return Some((m, n, e));
        }
    }
    None
}
