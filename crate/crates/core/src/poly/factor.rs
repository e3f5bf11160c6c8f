//! Factorization over ℚ by Kronecker's method.
//!
//! A factor of degree `k` of an integer polynomial `f` is pinned down by its
//! values at `k + 1` integer points, and each value must divide the
//! corresponding value of `f`. Enumerating those divisor tuples and
//! interpolating finds every factor; searching `k = 1, 2, …` in order makes
//! each factor found irreducible. The search is exponential, so it is
//! bounded by a degree cap and a budget on interpolation attempts.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::scalar::Rat;

pub const DEFAULT_DEGREE_CAP: usize = 12;

#[derive(Clone, Debug)]
pub struct KroneckerConfig {
    /// Largest input degree accepted by [`kronecker_factor`].
    pub degree_cap: usize,
    /// Maximum number of candidate interpolations per factor search.
    pub budget: u64,
    /// First evaluation point; points then alternate around it.
    pub offset: i64,
}

impl Default for KroneckerConfig {
    fn default() -> Self {
        KroneckerConfig { degree_cap: DEFAULT_DEGREE_CAP, budget: 2_000_000, offset: 0 }
    }
}

/// `content · Π factor^multiplicity`, factors monic and irreducible over ℚ.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub content: Rat,
    pub factors: Vec<(UniPoly<Rat>, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly<Rat> {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.content.clone()), |acc, (f, e)| &acc * &f.pow(*e as u32))
    }
}

/// Irreducible monic factors found so far, plus cofactors known to have no
/// factor of degree at most the search bound but not proven irreducible.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialFactorization {
    pub factors: Vec<(UniPoly<Rat>, usize)>,
    pub unresolved: Vec<(UniPoly<Rat>, usize)>,
}

/// Yun's squarefree decomposition: monic `(s_i, i)` with `a ~ Π s_i^i`.
pub fn squarefree_decomposition(a: &UniPoly<Rat>) -> Vec<(UniPoly<Rat>, usize)> {
    let mut out = Vec::new();
    if a.is_constant() {
        return out;
    }
    let a = a.monic();
    let da = a.derivative();
    let mut g = a.gcd(&da);
    let mut b = a.div_exact(&g).unwrap();
    let mut c = da.div_exact(&g).unwrap();
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        g = b.gcd(&d);
        if !g.is_constant() {
            out.push((g.clone(), i));
        }
        b = b.div_exact(&g).unwrap();
        if b.is_constant() {
            break;
        }
        c = d.div_exact(&g).unwrap();
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Complete factorization over ℚ.
pub fn kronecker_factor(a: &UniPoly<Rat>, cfg: &KroneckerConfig) -> Result<Factorization> {
    let Some(deg) = a.degree() else {
        return Err(Error::ZeroPolynomial("polynomial to factor"));
    };
    if deg > cfg.degree_cap {
        return Err(Error::DegreeCap { degree: deg, cap: cfg.degree_cap });
    }
    let part = factor_up_to(a, usize::MAX, cfg)?;
    debug_assert!(part.unresolved.is_empty());
    let mut factors = part.factors;
    factors.sort_by(|(f, e), (g, h)| {
        f.degree().cmp(&g.degree()).then(e.cmp(h)).then_with(|| format!("{f:?}").cmp(&format!("{g:?}")))
    });
    Ok(Factorization { content: a.lc(), factors })
}

/// Extracts every irreducible factor of degree `<= max_degree`. Cofactors
/// that turn out irreducible are reported as factors too.
pub fn low_degree_factors(
    a: &UniPoly<Rat>,
    max_degree: usize,
    cfg: &KroneckerConfig,
) -> Result<PartialFactorization> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial("polynomial to factor"));
    }
    factor_up_to(a, max_degree, cfg)
}

fn factor_up_to(a: &UniPoly<Rat>, max_degree: usize, cfg: &KroneckerConfig) -> Result<PartialFactorization> {
    let mut factors = Vec::new();
    let mut unresolved = Vec::new();
    for (s, mult) in squarefree_decomposition(a) {
        let (_, mut f) = s.primitive_integer();
        let mut k = 1;
        while 2 * k <= degree(&f) && k <= max_degree {
            match find_factor(&f, k, cfg)? {
                Some(g) => {
                    f = int_div_exact(&f, &g).expect("factor divides");
                    factors.push((UniPoly::from_integers(&g).monic(), mult));
                }
                None => k += 1,
            }
        }
        if degree(&f) >= 1 {
            let rest = UniPoly::from_integers(&f).monic();
            if degree(&f) <= max_degree || 2 * k > degree(&f) {
                factors.push((rest, mult));
            } else {
                unresolved.push((rest, mult));
            }
        }
    }
    Ok(PartialFactorization { factors, unresolved })
}

fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

fn int_eval(p: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

fn int_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = degree(b);
    let lb = &b[db];
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let top = &r[k + db];
        if !(top % lb).is_zero() {
            return None;
        }
        let c = top / lb;
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        q[k] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

fn eval_points(offset: i64) -> impl Iterator<Item = i64> {
    std::iter::once(offset).chain((1..).flat_map(move |i| [offset + i, offset - i]))
}

/// Searches for an integer factor of degree exactly `k`.
fn find_factor(f: &[BigInt], k: usize, cfg: &KroneckerConfig) -> Result<Option<Vec<BigInt>>> {
    // sample points, preferring values with few divisors
    let mut samples: Vec<(i64, Vec<BigInt>)> = Vec::new();
    for x in eval_points(cfg.offset).take(4 * k + 8) {
        let v = int_eval(f, x);
        if v.is_zero() {
            if k == 1 {
                return Ok(Some(vec![BigInt::from(-x), BigInt::one()]));
            }
            continue;
        }
        samples.push((x, positive_divisors(&v.abs())?));
    }
    samples.sort_by_key(|(x, d)| (d.len(), x.abs()));
    samples.truncate(k + 1);
    if samples.len() < k + 1 {
        return Ok(None);
    }
    let lc_f = f.last().unwrap().clone();
    let c0_f = f[0].clone();
    let radices: Vec<usize> = samples
        .iter()
        .enumerate()
        .map(|(i, (_, d))| if i == 0 { d.len() } else { 2 * d.len() })
        .collect();
    let mut idx = vec![0usize; k + 1];
    let mut spent: u64 = 0;
    loop {
        spent += 1;
        if spent > cfg.budget {
            return Err(Error::BudgetExceeded(format!(
                "Kronecker search for a degree-{k} factor exceeded {} candidates",
                cfg.budget
            )));
        }
        let vals: Vec<BigInt> = samples
            .iter()
            .zip(&idx)
            .map(|((_, ds), &j)| {
                // the first sample only ranges over positive divisors
                if j < ds.len() {
                    ds[j].clone()
                } else {
                    -ds[j - ds.len()].clone()
                }
            })
            .collect();
        if let Some(g) = interpolate(&samples.iter().map(|(x, _)| *x).collect::<Vec<_>>(), &vals) {
            if degree(&g) == k
                && (&lc_f % g.last().unwrap()).is_zero()
                && (c0_f.is_zero() || (!g[0].is_zero() && (&c0_f % &g[0]).is_zero()))
                && int_div_exact(f, &g).is_some()
            {
                let mut g = g;
                if g.last().unwrap().is_negative() {
                    g.iter_mut().for_each(|c| *c = -c.clone());
                }
                return Ok(Some(g));
            }
        }
        // mixed-radix increment
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < radices[pos] {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Integer-coefficient polynomial through the points, if one exists.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = xs.len();
    // Newton divided differences over ℚ.
    let mut dd: Vec<Rat> = ys.iter().map(|y| Rat::from_integer(y.clone())).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let den = Rat::from_integer(BigInt::from(xs[i] - xs[i - j]));
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    let mut poly = UniPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = UniPoly::new(vec![Rat::from_integer(BigInt::from(-xs[i])), Rat::one()]);
        poly = &(&poly * &lin) + &UniPoly::constant(dd[i].clone());
    }
    if poly.is_zero() {
        return None;
    }
    poly.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// All positive divisors of `n > 0`, sorted.
fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let Some(mut m) = n.to_u128() else {
        return Err(Error::BudgetExceeded(format!("cannot factor evaluation value {n}")));
    };
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut p: u128 = 2;
    while p * p <= m && p <= TRIAL_LIMIT as u128 {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        let limit = TRIAL_LIMIT as u128;
        if m > limit * limit && !u64::try_from(m).is_ok_and(is_prime_u64) {
            return Err(Error::BudgetExceeded(format!("cannot factor evaluation value {n}")));
        }
        primes.push((m, 1));
    }
    let mut divs: Vec<BigInt> = vec![BigInt::one()];
    for (p, e) in primes {
        let cur = divs.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= BigInt::from(p);
            divs.extend(cur.iter().map(|d| d * &pk));
        }
    }
    divs.sort();
    Ok(divs)
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Rational roots of `a`, each once, in increasing order.
pub fn rational_roots(a: &UniPoly<Rat>, cfg: &KroneckerConfig) -> Result<Vec<Rat>> {
    let part = low_degree_factors(a, 1, cfg)?;
    let mut roots: Vec<Rat> = part
        .factors
        .iter()
        .filter(|(f, _)| f.degree() == Some(1))
        .map(|(f, _)| -f.coeff(0))
        .collect();
    roots.sort();
    roots.dedup();
    Ok(roots)
}
