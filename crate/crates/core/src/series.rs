//! Truncated power series with complex coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0, ..., c_N` and represents
//! `c_0 + c_1 z + ... + c_N z^N + O(z^{N+1})`. Every operation is truncated at
//! the order of its inputs; nothing reads beyond `N` and nothing grows the
//! order implicitly. Higher-accuracy evaluation goes through
//! [`eval_refined`], which asks the owner of a series to regenerate it at a
//! larger order.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance used when checking that a constant term equals 0 or 1.
pub const UNIT_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

/// Binary operations of [`ring_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Unary operations of [`analytic_op`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnalyticOp {
    Exp,
    Log,
    Pow(f64),
    Sqrt,
    Derivative,
    ZTimesDerivative,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients. An empty vector yields the zero
    /// series of order 0.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Series whose coefficient `m` is `gen(m)` for `m = 0..=order`.
    pub fn from_fn(order: usize, gen: impl FnMut(usize) -> Complex64) -> Self {
        Self::new((0..=order).map(gen).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![ZERO; order + 1])
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ONE, order)
    }

    /// `z^exponent`, or the zero series when the exponent exceeds the order.
    pub fn monomial(exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = ONE;
        }
        s
    }

    /// The identity map `z`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `m`, or zero beyond the order.
    pub fn coeff(&self, m: usize) -> Complex64 {
        self.coeffs.get(m).copied().unwrap_or(ZERO)
    }

    /// True iff every imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im == 0.0)
    }

    /// Drops coefficients above `order` or pads with zeros up to it.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, ZERO);
        Self { coeffs }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    /// Coefficient-wise sum, truncated at the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |m| self.coeffs[m] + other.coeffs[m])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |m| self.coeffs[m] - other.coeffs[m])
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![ZERO; n + 1];
        for (i, &a) in self.coeffs[..=n].iter().enumerate() {
            if a == ZERO {
                continue;
            }
            for (j, &b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Long division `self / other`, truncated at the smaller order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let n = self.order().min(other.order());
        let b0 = other.coeffs[0];
        if b0.norm() <= 1e-14 {
            return Err(Error::DivisionByNonUnit);
        }
        let mut q = vec![ZERO; n + 1];
        for m in 0..=n {
            let mut acc = self.coeffs[m];
            for k in 1..=m {
                acc -= other.coeffs[k] * q[m - k];
            }
            q[m] = acc / b0;
        }
        Ok(Self::new(q))
    }

    /// Multiplication by `z`; the top coefficient falls off.
    pub fn shift_up(&self) -> Self {
        let n = self.order();
        Self::from_fn(n, |m| if m == 0 { ZERO } else { self.coeffs[m - 1] })
    }

    /// Division by `z` of a series vanishing at 0; the order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if self.coeffs[0].norm() > UNIT_TOL {
            return Err(Error::NonZeroConstantTerm {
                found: self.coeffs[0].norm(),
            });
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(Self::new(self.coeffs[1..].to_vec()))
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        Self::from_fn(n, |m| {
            if m < n {
                self.coeffs[m + 1] * (m + 1) as f64
            } else {
                ZERO
            }
        })
    }

    /// `z f'(z)`: coefficient `m` scaled by `m`.
    pub fn z_derivative(&self) -> Self {
        Self::from_fn(self.order(), |m| self.coeffs[m] * m as f64)
    }

    /// Term-wise primitive `∫_0^z f(t) dt`, same order.
    pub fn integrate(&self) -> Self {
        Self::from_fn(self.order(), |m| {
            if m == 0 {
                ZERO
            } else {
                self.coeffs[m - 1] / m as f64
            }
        })
    }

    /// `∫_0^z (s(t) - 1)/t dt` for a series with `s(0) = 1`.
    pub fn integrate_logkernel(&self) -> Result<Self> {
        self.require_unit()?;
        Ok(Self::from_fn(self.order(), |m| {
            if m == 0 {
                ZERO
            } else {
                self.coeffs[m] / m as f64
            }
        }))
    }

    /// Coefficient-wise modulus.
    pub fn majorant(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| Complex64::new(c.norm(), 0.0))
                .collect(),
        )
    }

    pub fn exp(&self) -> Result<Self> {
        if self.coeffs[0].norm() > UNIT_TOL {
            return Err(Error::NonZeroConstantTerm {
                found: self.coeffs[0].norm(),
            });
        }
        // f = exp(a)  =>  m f_m = sum_{k=1}^m k a_k f_{m-k}
        let n = self.order();
        let mut f = vec![ZERO; n + 1];
        f[0] = ONE;
        for m in 1..=n {
            let mut acc = ZERO;
            for k in 1..=m {
                acc += self.coeffs[k] * (k as f64) * f[m - k];
            }
            f[m] = acc / m as f64;
        }
        Ok(Self::new(f))
    }

    /// Principal logarithm of a series with constant term 1.
    pub fn ln(&self) -> Result<Self> {
        self.require_unit()?;
        // a = exp(b)  =>  b_m = a_m - (1/m) sum_{k=1}^{m-1} k b_k a_{m-k}
        let n = self.order();
        let a = &self.coeffs;
        let mut b = vec![ZERO; n + 1];
        for m in 1..=n {
            let mut acc = ZERO;
            for k in 1..m {
                acc += b[k] * (k as f64) * a[m - k];
            }
            b[m] = a[m] - acc / m as f64;
        }
        Ok(Self::new(b))
    }

    /// `a^alpha = exp(alpha log a)` on the principal branch.
    pub fn powf(&self, alpha: f64) -> Result<Self> {
        self.ln()?.scale_real(alpha).exp()
    }

    pub fn sqrt(&self) -> Result<Self> {
        self.powf(0.5)
    }

    /// `self ∘ inner`, truncated at the smaller order. `inner` must vanish at 0.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.coeffs[0].norm() > 1e-14 {
            return Err(Error::InnerNotVanishing {
                found: inner.coeffs[0].norm(),
            });
        }
        let n = self.order().min(inner.order());
        let outer = &self.coeffs;
        let w = &inner.coeffs;

        let nonzero: Vec<usize> = (1..=n).filter(|&j| w[j] != ZERO).collect();
        if nonzero.is_empty() {
            return Ok(Self::constant(outer[0], n));
        }
        if nonzero.len() == 1 {
            // monomial c z^j: coefficient m lands on exponent m j
            let j = nonzero[0];
            let c = w[j];
            let mut out = vec![ZERO; n + 1];
            let mut cm = ONE;
            let mut m = 0;
            while m * j <= n {
                out[m * j] = outer[m] * cm;
                cm *= c;
                m += 1;
            }
            return Ok(Self::new(out));
        }

        // Horner: acc holds sum_{j>=m} outer_j w^{j-m}; after processing index m
        // only exponents up to n - m can survive the remaining m factors of w.
        let mut acc = vec![outer[n]];
        for m in (0..n).rev() {
            let need = n - m;
            let mut next = vec![ZERO; need + 1];
            for (i, &a) in acc.iter().enumerate() {
                if a == ZERO {
                    continue;
                }
                for j in 1..=need - i {
                    next[i + j] += a * w[j];
                }
            }
            next[0] += outer[m];
            acc = next;
        }
        Ok(Self::new(acc))
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Evaluation at a real point `r`.
    pub fn eval_real(&self, r: f64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * r + c)
    }

    /// Largest coefficient-wise distance to another series over the common order.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.order().min(other.order());
        (0..=n)
            .map(|m| (self.coeffs[m] - other.coeffs[m]).norm())
            .fold(0.0, f64::max)
    }

    fn require_unit(&self) -> Result<()> {
        let d = (self.coeffs[0] - ONE).norm();
        if d > UNIT_TOL {
            return Err(Error::NonUnitConstantTerm {
                found: self.coeffs[0].norm(),
            });
        }
        Ok(())
    }
}

/// Add/sub/mul/div of two series of the same order.
pub fn ring_op(a: &TruncatedSeries, b: &TruncatedSeries, op: RingOp) -> Result<TruncatedSeries> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    match op {
        RingOp::Add => Ok(a.add(b)),
        RingOp::Sub => Ok(a.sub(b)),
        RingOp::Mul => Ok(a.mul(b)),
        RingOp::Div => a.div(b),
    }
}

pub fn analytic_op(a: &TruncatedSeries, op: AnalyticOp) -> Result<TruncatedSeries> {
    match op {
        AnalyticOp::Exp => a.exp(),
        AnalyticOp::Log => a.ln(),
        AnalyticOp::Pow(alpha) => a.powf(alpha),
        AnalyticOp::Sqrt => a.sqrt(),
        AnalyticOp::Derivative => Ok(a.derivative()),
        AnalyticOp::ZTimesDerivative => Ok(a.z_derivative()),
    }
}

/// Acceptance rule for [`eval_refined`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefinePolicy {
    /// Accept when `|v_2N - v_N| <= tol * max(1, |v_2N|)`.
    pub tol: f64,
    /// Largest order the source may be regenerated at.
    pub max_order: usize,
}

impl Default for RefinePolicy {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_order: 512,
        }
    }
}

impl RefinePolicy {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }
}

/// Result of a refined evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    /// `|v_2N - v_N|` at the accepted order.
    pub tail_estimate: f64,
    pub order_used: usize,
}

/// Evaluates a regenerable series at `r`, doubling the order until two
/// consecutive orders agree.
///
/// `regen(order)` must return the source truncated at `order`.
pub fn eval_refined<F>(
    mut regen: F,
    base_order: usize,
    r: f64,
    policy: &RefinePolicy,
) -> Result<Evaluation>
where
    F: FnMut(usize) -> Result<TruncatedSeries>,
{
    if !(0.0..1.0).contains(&r) {
        return Err(Error::PointOutOfRange { r });
    }
    let mut order = base_order.max(1);
    let mut low = regen(order)?.eval_real(r);
    loop {
        let high_order = order * 2;
        let high = regen(high_order)?.eval_real(r);
        let diff = (high - low).norm();
        if diff <= policy.tol * high.norm().max(1.0) {
            return Ok(Evaluation {
                value: high,
                tail_estimate: diff,
                order_used: high_order,
            });
        }
        if high_order * 2 > policy.max_order {
            return Err(Error::TruncationNotConverged {
                order,
                high_order,
                low: low.norm(),
                high: high.norm(),
            });
        }
        order = high_order;
        low = high;
    }
}
