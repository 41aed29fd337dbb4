//! Truncated power series over the rationals, and the generating function
//! of the co-adjoint polynomials of complete graphs.
//!
//! `F(z) = ∫ (1 + sin z)/cos z dz = ln((1 + sin z)/cos² z)` has
//! `n!·[z^n] F = E_{n-1}`, and `Σ p_n(x) z^n/n! = exp(x F(z))` where
//! `p_n(x) = (-1)^n P(K_n, -x)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};

pub const MAX_F_ORDER: usize = 16;
pub const MAX_EGF_ORDER: usize = 10;

/// `Σ_{k ≤ order} c_k z^k`, exact. Binary operations truncate to the smaller
/// order of their operands.
#[derive(Clone, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl RatSeries {
    /// Coefficients `c_0..=c_order`; missing entries are zero.
    pub fn new(order: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        RatSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![BigRational::one()])
    }

    /// The series `z`.
    pub fn variable(order: usize) -> Self {
        Self::new(order, vec![BigRational::zero(), BigRational::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        Self::new(order, (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect())
    }

    pub fn sub(&self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        Self::new(order, (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect())
    }

    pub fn scale(&self, c: &BigRational) -> RatSeries {
        Self::new(self.order(), self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(BigRational::zero(), |acc, k| {
                    acc + &self.coeffs[k] * &rhs.coeffs[n - k]
                })
            })
            .collect();
        Self::new(order, coeffs)
    }

    /// Requires a nonzero constant term in `rhs`.
    pub fn div(&self, rhs: &RatSeries) -> Result<RatSeries> {
        let d0 = &rhs.coeffs[0];
        if d0.is_zero() {
            return Err(Error::Domain("series division by a series with zero constant term".into()));
        }
        let order = self.order().min(rhs.order());
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc -= &rhs.coeffs[k] * &q[n - k];
            }
            q.push(acc / d0);
        }
        Ok(Self::new(order, q))
    }

    pub fn derivative(&self) -> RatSeries {
        let order = self.order().saturating_sub(1);
        Self::new(
            order,
            (1..=self.order())
                .map(|k| &self.coeffs[k] * rat(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term; known one order further.
    pub fn integrate(&self) -> RatSeries {
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / rat(k as i64 + 1)),
        );
        Self::new(self.order() + 1, coeffs)
    }

    /// Requires constant term 1: `log f = ∫ f'/f`.
    pub fn log(&self) -> Result<RatSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain("log needs constant term 1".into()));
        }
        let ratio = self.derivative().div(&self.truncate(self.order().saturating_sub(1)))?;
        Ok(ratio.integrate().truncate(self.order()))
    }

    /// Requires zero constant term. Uses `n e_n = Σ_k k a_k e_{n-k}`.
    pub fn exp(&self) -> Result<RatSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("exp needs zero constant term".into()));
        }
        let order = self.order();
        let mut e = vec![BigRational::one()];
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * rat(k as i64) * &e[n - k];
            }
            e.push(acc / rat(n as i64));
        }
        Ok(Self::new(order, e))
    }

    /// `(sin a, cos a)` for `a` with zero constant term, from
    /// `s' = c·a'`, `c' = -s·a'`.
    pub fn sin_cos(&self) -> Result<(RatSeries, RatSeries)> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("sin/cos need zero constant term".into()));
        }
        let order = self.order();
        let da: Vec<BigRational> = (1..=order).map(|k| &self.coeffs[k] * rat(k as i64)).collect();
        let mut s = vec![BigRational::zero()];
        let mut c = vec![BigRational::one()];
        for n in 1..=order {
            // n s_n = Σ_{k=1..n} (k a_k) c_{n-k}
            let mut sn = BigRational::zero();
            let mut cn = BigRational::zero();
            for k in 1..=n {
                sn += &da[k - 1] * &c[n - k];
                cn -= &da[k - 1] * &s[n - k];
            }
            s.push(sn / rat(n as i64));
            c.push(cn / rat(n as i64));
        }
        Ok((Self::new(order, s), Self::new(order, c)))
    }

    pub fn sin(&self) -> Result<RatSeries> {
        Ok(self.sin_cos()?.0)
    }

    pub fn cos(&self) -> Result<RatSeries> {
        Ok(self.sin_cos()?.1)
    }
}

impl std::fmt::Debug for RatSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "RatSeries[{}; O(z^{})]", parts.join(", "), self.order() + 1)
    }
}

/// `(1 + sin z)/cos z` to the given order.
pub fn f_integrand(order: usize) -> Result<RatSeries> {
    let (s, c) = RatSeries::variable(order).sin_cos()?;
    RatSeries::one(order).add(&s).div(&c)
}

/// `F(z)` to order `order`, computed both as the integral of
/// `(1 + sin z)/cos z` and as `ln((1 + sin z)/cos² z)`; the two must agree.
pub fn build_f(order: usize) -> Result<RatSeries> {
    if order > MAX_F_ORDER {
        return Err(Error::capacity("series order", order, MAX_F_ORDER));
    }
    let by_integral = f_integrand(order.saturating_sub(1))?.integrate().truncate(order);
    let (s, c) = RatSeries::variable(order).sin_cos()?;
    let by_log = RatSeries::one(order).add(&s).div(&c.mul(&c))?.log()?;
    if by_integral != by_log {
        return Err(Error::Consistency(format!(
            "integral and logarithm forms of F differ: {by_integral:?} vs {by_log:?}"
        )));
    }
    Ok(by_log)
}

/// `n!·[z^n] exp(x F(z))` for `n = 0..=order`, each required to have integer
/// coefficients.
pub fn egf_reconstruct(order: usize) -> Result<Vec<IntPoly>> {
    if order > MAX_EGF_ORDER {
        return Err(Error::capacity("generating function order", order, MAX_EGF_ORDER));
    }
    let f = build_f(order)?;
    // exp(g) with g_k = F_k·x: c_n = (1/n) Σ_k k g_k c_{n-k}
    let mut c: Vec<RatPoly> = vec![RatPoly::constant(BigRational::one())];
    for n in 1..=order {
        let mut acc = RatPoly::zero();
        for k in 1..=n {
            let weight = f.coeff(k) * rat(k as i64);
            acc = acc.add(&c[n - k].shift(1).scale(&weight));
        }
        c.push(acc.scale(&(BigRational::one() / rat(n as i64))));
    }
    c.iter()
        .enumerate()
        .map(|(n, cn)| {
            let scaled = cn.scale(&BigRational::from_integer(factorial(n)));
            scaled.to_int().ok_or_else(|| {
                Error::Consistency(format!("n!·[z^{n}] exp(xF) = {scaled:?} is not integral"))
            })
        })
        .collect()
}

/// `n!·[z^n] F` for `n = 0..=order`.
pub fn f_egf_coefficients(order: usize) -> Result<Vec<BigRational>> {
    let f = build_f(order)?;
    Ok((0..=order)
        .map(|n| f.coeff(n) * BigRational::from_integer(factorial(n)))
        .collect())
}
