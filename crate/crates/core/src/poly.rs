//! Dense polynomials with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial over the integers; `coeffs[i]` multiplies `x^i`.
/// No trailing zeros; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `p(x + y)` expanded by the binomial theorem.
    pub fn substitute_sum(&self) -> BiPoly {
        let d = self.coeffs.len();
        let mut out = vec![vec![BigInt::zero(); d]; d];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, b) in binomial_row(k).into_iter().enumerate() {
                out[i][k - i] += c * b;
            }
        }
        BiPoly::new(out)
    }

    /// `(-1)^deg · p(-x)`. The zero polynomial maps to itself.
    pub fn reflect_negate(&self) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if (d - k) % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(a + b·x)`.
    pub fn compose_affine(&self, a: &BigInt, b: &BigInt) -> Self {
        let lin = IntPoly::new(vec![a.clone(), b.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, c| &(&acc * &lin) + &IntPoly::constant(c.clone()))
    }

    /// Multiplicity of the root `0`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Renders with variable name `var`, e.g. `x^4-6x^3+7x^2-2x`.
    pub fn render(&self, var: &str) -> String {
        let terms: Vec<(BigInt, Vec<(&str, usize)>)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), vec![(var, k)]))
            .collect();
        render_terms(&terms)
    }

    /// `{"var": .., "coeffs": [c0, .., cd]}` with decimal-string coefficients.
    pub fn to_json(&self, var: &str) -> serde_json::Value {
        serde_json::json!({
            "var": var,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Shared term renderer: descending order is the caller's job.
fn render_terms(terms: &[(BigInt, Vec<(&str, usize)>)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, vars)) in terms.iter().enumerate() {
        let mono: String = vars
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        if mono.is_empty() || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&mono);
    }
    out
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(IntPoly, Add, add);
forward_owned!(IntPoly, Sub, sub);
forward_owned!(IntPoly, Mul, mul);

/// Univariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs }
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    /// Integer polynomial if every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    pub fn add(&self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "RatPoly[{}]", parts.join(", "))
    }
}

/// Bivariate polynomial over the integers; `coeffs[i][j]` multiplies
/// `x^i y^j`. Trailing zero rows and columns are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: Vec<Vec<BigInt>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![vec![BigInt::one()]])
    }

    pub fn new(coeffs: Vec<Vec<BigInt>>) -> Self {
        let mut coeffs = coeffs;
        let width = coeffs
            .iter()
            .map(|row| row.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1))
            .max()
            .unwrap_or(0);
        for row in coeffs.iter_mut() {
            row.resize(width, BigInt::zero());
        }
        while coeffs
            .last()
            .is_some_and(|row| row.iter().all(Zero::is_zero))
        {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    /// `x^i y^j`.
    pub fn monomial(i: usize, j: usize) -> Self {
        let mut coeffs = vec![vec![BigInt::zero(); j + 1]; i + 1];
        coeffs[i][j] = BigInt::one();
        BiPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        BiPoly::new(
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|a| a * c).collect())
                .collect(),
        )
    }

    /// `p(x) · q(y)`.
    pub fn outer(p: &IntPoly, q: &IntPoly) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|a| q.coeffs().iter().map(|b| a * b).collect())
                .collect(),
        )
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest power of `x` and of `y` present.
    pub fn degrees(&self) -> (usize, usize) {
        (
            self.coeffs.len().saturating_sub(1),
            self.coeffs.first().map_or(0, |r| r.len().saturating_sub(1)),
        )
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, row| {
            let inner = row
                .iter()
                .rev()
                .fold(BigRational::zero(), |a, c| a * y + BigRational::from_integer(c.clone()));
            acc * x + inner
        })
    }

    /// Substitutes an integer for `y`, leaving a polynomial in `x`.
    pub fn eval_y(&self, y: &BigInt) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|row| row.iter().rev().fold(BigInt::zero(), |a, c| a * y + c))
                .collect(),
        )
    }

    /// Substitutes an integer for `x`, leaving a polynomial in `y`.
    pub fn eval_x(&self, x: &BigInt) -> IntPoly {
        let (_, dy) = self.degrees();
        if self.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(
            (0..=dy)
                .map(|j| {
                    self.coeffs
                        .iter()
                        .rev()
                        .fold(BigInt::zero(), |a, row| a * x + &row[j])
                })
                .collect(),
        )
    }

    /// Renders in descending `x` power, then descending `y` power.
    pub fn render(&self, xvar: &str, yvar: &str) -> String {
        let mut terms = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate().rev() {
            for (j, c) in row.iter().enumerate().rev() {
                if !c.is_zero() {
                    terms.push((c.clone(), vec![(xvar, i), (yvar, j)]));
                }
            }
        }
        render_terms(&terms)
    }

    /// Coefficients as nested arrays of decimal strings, `[i][j]`.
    pub fn to_json(&self, xvar: &str, yvar: &str) -> serde_json::Value {
        serde_json::json!({
            "vars": [xvar, yvar],
            "coeffs": self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x", "y"))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let rows = self.coeffs.len().max(rhs.coeffs.len());
        let cols = self.degrees().1.max(rhs.degrees().1) + 1;
        let mut out = vec![vec![BigInt::zero(); cols]; rows];
        for src in [self, rhs] {
            for (i, row) in src.coeffs.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    out[i][j] += c;
                }
            }
        }
        BiPoly::new(out)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let neg = BiPoly {
            coeffs: rhs
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| -c).collect())
                .collect(),
        };
        self + &neg
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let (ax, ay) = self.degrees();
        let (bx, by) = rhs.degrees();
        let mut out = vec![vec![BigInt::zero(); ay + by + 1]; ax + bx + 1];
        for (i, ra) in self.coeffs.iter().enumerate() {
            for (j, a) in ra.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, rb) in rhs.coeffs.iter().enumerate() {
                    for (l, b) in rb.iter().enumerate() {
                        out[i + k][j + l] += a * b;
                    }
                }
            }
        }
        BiPoly::new(out)
    }
}

forward_owned!(BiPoly, Add, add);
forward_owned!(BiPoly, Sub, sub);
forward_owned!(BiPoly, Mul, mul);
