//! Floating-point root analysis, the constant of the maximum-degree root
//! bound, and exact parity checks on `P(G, 1)` and the coefficient signs.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::family::{family_poly, FamilyKind};
use crate::graph::SimpleGraph;
use crate::poly::IntPoly;

pub const ROOT_STEP_TOLERANCE: f64 = 1e-12;
pub const ROOT_MAX_ITERATIONS: usize = 500;
/// Bound on `|p(r)| / (1 + max |c_i|)` for every reported root.
pub const ROOT_RESIDUAL_TOLERANCE: f64 = 1e-8;
/// Slack added to `K·Δ` when comparing root moduli.
pub const BOUND_SLACK: f64 = 1e-6;

/// Complex roots of an integer polynomial, repeated by multiplicity, with
/// normalized residuals.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// `|p(r)| / (1 + max |c_i|)`, aligned with `roots`.
    pub residuals: Vec<f64>,
}

impl RootSet {
    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|r| r.norm()).fold(0.0, f64::max)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

fn rat_trim(mut c: Vec<BigRational>) -> Vec<BigRational> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn rat_derivative(p: &[BigRational]) -> Vec<BigRational> {
    rat_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect(),
    )
}

/// Quotient and remainder; `d` must be nonzero.
fn rat_divrem(p: &[BigRational], d: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = p.to_vec();
    let dd = d.len() - 1;
    if r.len() < d.len() {
        return (Vec::new(), rat_trim(r));
    }
    let lead = &d[dd];
    let mut q = vec![BigRational::zero(); r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = &r[i + dd] / lead;
        if !c.is_zero() {
            for (j, dj) in d.iter().enumerate() {
                r[i + j] -= &c * dj;
            }
        }
        q[i] = c;
    }
    r.truncate(dd);
    (rat_trim(q), rat_trim(r))
}

fn rat_monic(p: Vec<BigRational>) -> Vec<BigRational> {
    match p.last().cloned() {
        Some(lead) => p.into_iter().map(|c| c / &lead).collect(),
        None => p,
    }
}

fn rat_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (mut a, mut b) = (rat_trim(a.to_vec()), rat_trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = rat_divrem(&a, &b);
        a = b;
        b = r;
    }
    rat_monic(a)
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let zero = BigRational::zero();
    rat_trim(
        (0..len)
            .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
            .collect(),
    )
}

/// Square-free decomposition (Yun): pairs `(factor, multiplicity)` whose
/// product is `p` up to a constant.
fn square_free_factors(p: &[BigRational]) -> Vec<(Vec<BigRational>, usize)> {
    let mut out = Vec::new();
    let dp = rat_derivative(p);
    let a0 = rat_gcd(p, &dp);
    let mut b = rat_divrem(p, &a0).0;
    let c = rat_divrem(&dp, &a0).0;
    let mut d = rat_sub(&c, &rat_derivative(&b));
    let mut i = 1;
    while b.len() > 1 {
        let a = rat_gcd(&b, &d);
        let next_b = rat_divrem(&b, &a).0;
        let next_c = rat_divrem(&d, &a).0;
        if a.len() > 1 {
            out.push((a, i));
        }
        d = rat_sub(&next_c, &rat_derivative(&next_b));
        b = next_b;
        i += 1;
    }
    out
}

fn horner(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a)
}

/// Durand–Kerner on a polynomial with simple roots; returns the roots and
/// whether the step criterion was met.
fn durand_kerner(c: &[f64]) -> (Vec<Complex64>, bool) {
    let d = c.len() - 1;
    let lead = c[d];
    let monic: Vec<f64> = c.iter().map(|a| a / lead).collect();
    if d == 1 {
        return (vec![Complex64::new(-monic[0], 0.0)], true);
    }
    let cauchy = 1.0 + monic[..d].iter().map(|a| a.abs()).fold(0.0, f64::max);
    let radius = cauchy * 1.1;
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / d as f64 + 0.4))
        .collect();
    for _ in 0..ROOT_MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for i in 0..d {
            let mut denom = Complex64::one();
            for j in 0..d {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = horner(&monic, z[i]) / denom;
            z[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < ROOT_STEP_TOLERANCE {
            return (z, true);
        }
    }
    (z, false)
}

fn to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

/// All complex roots of `p` by simultaneous iteration, repeated by
/// multiplicity. Repeated roots are separated exactly first.
pub fn poly_roots(p: &IntPoly) -> Result<RootSet> {
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::Domain(format!("root finding needs degree at least 1, got {p}"))),
    };
    let zeros = p.zero_root_multiplicity();
    let mut roots = vec![Complex64::zero(); zeros];
    let cofactor: Vec<BigRational> = p.to_rat().coeffs()[zeros..].to_vec();
    for (factor, mult) in square_free_factors(&cofactor) {
        let f: Vec<f64> = factor.iter().map(to_f64).collect();
        let (found, converged) = durand_kerner(&f);
        if !converged {
            let scale = 1.0 + f.iter().map(|a| a.abs()).fold(0.0, f64::max);
            let worst = found.iter().map(|&r| horner(&f, r).norm() / scale).fold(0.0, f64::max);
            if worst.is_nan() || worst >= ROOT_RESIDUAL_TOLERANCE {
                return Err(Error::Numeric(format!(
                    "no convergence after {ROOT_MAX_ITERATIONS} iterations on a degree {} factor of {p}; worst residual {worst:e}",
                    f.len() - 1
                )));
            }
        }
        for r in found {
            roots.extend(std::iter::repeat_n(r, mult));
        }
    }
    if roots.len() != degree {
        return Err(Error::Consistency(format!(
            "found {} roots for degree {degree} polynomial {p}",
            roots.len()
        )));
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let norm = 1.0 + c.iter().map(|a| a.abs()).fold(0.0, f64::max);
    let residuals = roots.iter().map(|&r| horner(&c, r).norm() / norm).collect();
    Ok(RootSet { roots, residuals })
}

/// `(a + e^a) / ln(1 + a e^{-a})`.
pub fn sokal_g(a: f64) -> f64 {
    (a + a.exp()) / (a * (-a).exp()).ln_1p()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SokalMinimum {
    pub minimizer: f64,
    pub value: f64,
}

const SCAN_STEP: f64 = 0.01;
const SCAN_END: f64 = 4.0;

/// Minimizes `sokal_g` over `(0, 4]`: a coarse scan brackets the smallest
/// sample, then golden-section search narrows the bracket below `tol`.
pub fn sokal_minimize(tol: f64) -> Result<SokalMinimum> {
    if tol.is_nan() || tol < 1e-9 {
        return Err(Error::Domain(format!("tolerance must be at least 1e-9, got {tol}")));
    }
    let samples = (SCAN_END / SCAN_STEP).round() as usize;
    let best = (1..=samples)
        .map(|i| i as f64 * SCAN_STEP)
        .min_by(|a, b| sokal_g(*a).total_cmp(&sokal_g(*b)))
        .unwrap_or(SCAN_STEP);
    let (mut lo, mut hi) = ((best - SCAN_STEP).max(f64::EPSILON), (best + SCAN_STEP).min(SCAN_END));
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - ratio * (hi - lo);
    let mut d = lo + ratio * (hi - lo);
    let (mut gc, mut gd) = (sokal_g(c), sokal_g(d));
    while hi - lo > tol {
        if gc < gd {
            hi = d;
            d = c;
            gd = gc;
            c = hi - ratio * (hi - lo);
            gc = sokal_g(c);
        } else {
            lo = c;
            c = d;
            gc = gd;
            d = lo + ratio * (hi - lo);
            gd = sokal_g(d);
        }
    }
    let minimizer = (lo + hi) / 2.0;
    Ok(SokalMinimum {
        minimizer,
        value: sokal_g(minimizer),
    })
}

pub fn sokal_constant(tol: f64) -> Result<f64> {
    Ok(sokal_minimize(tol)?.value)
}

fn bound_constant() -> f64 {
    static K: OnceLock<f64> = OnceLock::new();
    *K.get_or_init(|| sokal_constant(1e-9).unwrap_or(f64::NAN))
}

/// Every root of the co-adjoint polynomial has modulus at most `K·Δ(g)`.
pub fn sokal_bound_check(g: &SimpleGraph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::Domain("the root bound needs at least one edge".into()));
    }
    let p = family_poly(g, FamilyKind::CoAdjoint)?;
    let roots = poly_roots(&p)?;
    Ok(roots.max_modulus() <= bound_constant() * g.max_degree() as f64 + BOUND_SLACK)
}

/// `|P(g, 1)|` is 1 when every degree is even and 0 otherwise.
pub fn eulerian_consequence_check(g: &SimpleGraph) -> Result<bool> {
    let value = family_poly(g, FamilyKind::CoAdjoint)?.eval_int(&BigInt::one()).abs();
    let expected = if g.is_eulerian() { BigInt::one() } else { BigInt::zero() };
    Ok(value == expected)
}

/// `(-1)^{n-k} [x^k] p ≥ 0` for every `k`.
pub fn alternating_signs_check(p: &IntPoly, n: usize) -> bool {
    p.coeffs().iter().enumerate().all(|(k, c)| {
        if c.is_zero() {
            return true;
        }
        let positive = c.is_positive();
        if k > n {
            return false;
        }
        positive == (n - k).is_multiple_of(2)
    })
}
