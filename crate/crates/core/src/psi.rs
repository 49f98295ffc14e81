//! Catalog of generating functions ψ (Carathéodory functions with ψ(0) = 1)
//! and grid-based geometric probes.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Order of the regenerated series the probes run on.
pub const PROBE_ORDER: usize = 256;
pub const PROBE_R_MAX: f64 = 0.9;
pub const PROBE_GRID: usize = 720;

#[derive(Debug, Clone, PartialEq)]
pub enum PsiFamily {
    /// `(1 + D z)/(1 + E z)`, `-1 <= E < D <= 1`.
    Janowski { d: f64, e: f64 },
    /// `(1 + (1 - 2α) z)/(1 - z)`, `0 <= α < 1`.
    OrderAlpha { alpha: f64 },
    /// `((1 + z)/(1 - z))^η`, `0 < η <= 1`.
    Power { eta: f64 },
    /// `√2 - (√2 - 1) √((1 - z)/(1 + 2(√2 - 1) z))`.
    Crescent,
    /// `(b (1 + z))^{1/a}`, `a >= 1`, `b >= 1/2`. Not normalized unless `b = 1`.
    RootAb { a: f64, b: f64 },
    /// `α + (1 - α) e^z`, `0 <= α < 1`.
    ExpAlpha { alpha: f64 },
    /// `α + (1 - α) √(1 + z)`, `0 <= α < 1`.
    SqrtAlpha { alpha: f64 },
    /// `2/(1 + e^{-z})`.
    Sigmoid,
    /// A user polynomial; regeneration pads with zeros.
    Custom { series: TruncatedSeries },
}

impl PsiFamily {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ParamOutOfRange(msg));
        match *self {
            PsiFamily::Janowski { d, e } => {
                if !(-1.0..=1.0).contains(&e) || !(-1.0..=1.0).contains(&d) || e >= d {
                    return bad(format!("janowski needs -1 <= E < D <= 1, got D={d}, E={e}"));
                }
            }
            PsiFamily::OrderAlpha { alpha }
            | PsiFamily::ExpAlpha { alpha }
            | PsiFamily::SqrtAlpha { alpha } => {
                if !(0.0..1.0).contains(&alpha) {
                    return bad(format!("alpha must lie in [0, 1), got {alpha}"));
                }
            }
            PsiFamily::Power { eta } => {
                if !(eta > 0.0 && eta <= 1.0) {
                    return bad(format!("eta must lie in (0, 1], got {eta}"));
                }
            }
            PsiFamily::RootAb { a, b } => {
                if !(a >= 1.0 && b >= 0.5) || !a.is_finite() || !b.is_finite() {
                    return bad(format!("root family needs a >= 1, b >= 1/2, got a={a}, b={b}"));
                }
            }
            PsiFamily::Crescent | PsiFamily::Sigmoid => {}
            PsiFamily::Custom { ref series } => {
                if series.coeffs().iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
                    return bad("custom series has non-finite coefficients".into());
                }
                if (series.coeff(0) - Complex64::new(1.0, 0.0)).norm() > crate::series::UNIT_TOL {
                    return bad("custom series must have constant term 1".into());
                }
            }
        }
        Ok(())
    }

    /// Taylor series of ψ truncated at `order`. Assumes [`validate`](Self::validate) passed.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        let lin = |a: f64, b: f64| TruncatedSeries::from_real(&[a, b]).with_order(order);
        let z = TruncatedSeries::identity(order);
        let s = match *self {
            PsiFamily::Janowski { d, e } => lin(1.0, d).div(&lin(1.0, e))?,
            PsiFamily::OrderAlpha { alpha } => lin(1.0, 1.0 - 2.0 * alpha).div(&lin(1.0, -1.0))?,
            PsiFamily::Power { eta } => lin(1.0, 1.0).div(&lin(1.0, -1.0))?.powf(eta)?,
            PsiFamily::Crescent => {
                let c = 2.0 * (SQRT_2 - 1.0);
                let root = lin(1.0, -1.0).div(&lin(1.0, c))?.sqrt()?;
                TruncatedSeries::constant(Complex64::new(SQRT_2, 0.0), order)
                    .sub(&root.scale_real(SQRT_2 - 1.0))
            }
            PsiFamily::RootAb { a, b } => lin(1.0, 1.0).powf(1.0 / a)?.scale_real(b.powf(1.0 / a)),
            PsiFamily::ExpAlpha { alpha } => TruncatedSeries::constant(Complex64::new(alpha, 0.0), order)
                .add(&z.exp()?.scale_real(1.0 - alpha)),
            PsiFamily::SqrtAlpha { alpha } => TruncatedSeries::constant(Complex64::new(alpha, 0.0), order)
                .add(&lin(1.0, 1.0).sqrt()?.scale_real(1.0 - alpha)),
            PsiFamily::Sigmoid => {
                let denom = TruncatedSeries::one(order).add(&z.scale_real(-1.0).exp()?);
                TruncatedSeries::constant(Complex64::new(2.0, 0.0), order).div(&denom)?
            }
            PsiFamily::Custom { ref series } => series.with_order(order),
        };
        Ok(s)
    }

    /// Closed-form value ψ(z) (principal branches); custom polynomials use Horner.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match *self {
            PsiFamily::Janowski { d, e } => (one + z * d) / (one + z * e),
            PsiFamily::OrderAlpha { alpha } => (one + z * (1.0 - 2.0 * alpha)) / (one - z),
            PsiFamily::Power { eta } => {
                let w = (one + z) / (one - z);
                if w.norm() == 0.0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    (w.ln() * eta).exp()
                }
            }
            PsiFamily::Crescent => {
                let c = 2.0 * (SQRT_2 - 1.0);
                Complex64::new(SQRT_2, 0.0) - ((one - z) / (one + z * c)).sqrt() * (SQRT_2 - 1.0)
            }
            PsiFamily::RootAb { a, b } => {
                let w = (one + z) * b;
                if w.norm() == 0.0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    (w.ln() / a).exp()
                }
            }
            PsiFamily::ExpAlpha { alpha } => z.exp() * (1.0 - alpha) + alpha,
            PsiFamily::SqrtAlpha { alpha } => (one + z).sqrt() * (1.0 - alpha) + alpha,
            PsiFamily::Sigmoid => Complex64::new(2.0, 0.0) / (one + (-z).exp()),
            PsiFamily::Custom { ref series } => series.eval(z),
        }
    }

    /// Whether ψ(0) = 1 for this family and parameter set.
    pub fn is_normalized(&self) -> bool {
        match *self {
            PsiFamily::RootAb { b, .. } => b == 1.0,
            _ => true,
        }
    }

    /// Short tag used in reports.
    pub fn tag(&self) -> &'static str {
        match self {
            PsiFamily::Janowski { .. } => "janowski",
            PsiFamily::OrderAlpha { .. } => "alpha",
            PsiFamily::Power { .. } => "power",
            PsiFamily::Crescent => "crescent",
            PsiFamily::RootAb { .. } => "root",
            PsiFamily::ExpAlpha { .. } => "exp",
            PsiFamily::SqrtAlpha { .. } => "sqrt",
            PsiFamily::Sigmoid => "sigmoid",
            PsiFamily::Custom { .. } => "custom",
        }
    }
}

impl fmt::Display for PsiFamily {
    /// Renders the CLI specifier grammar (`janowski:D,E`, `alpha:A`, ...).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsiFamily::Janowski { d, e } => write!(f, "janowski:{d},{e}"),
            PsiFamily::OrderAlpha { alpha } => write!(f, "alpha:{alpha}"),
            PsiFamily::Power { eta } => write!(f, "power:{eta}"),
            PsiFamily::Crescent => write!(f, "crescent"),
            PsiFamily::RootAb { a, b } => write!(f, "root:{a},{b}"),
            PsiFamily::ExpAlpha { alpha } => write!(f, "exp:{alpha}"),
            PsiFamily::SqrtAlpha { alpha } => write!(f, "sqrt:{alpha}"),
            PsiFamily::Sigmoid => write!(f, "sigmoid"),
            PsiFamily::Custom { series } => write!(f, "custom(order {})", series.order()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeStatus {
    Verified,
    Failed,
    NotChecked,
}

/// Outcome of a grid probe.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbeOutcome {
    pub status: ProbeStatus,
    /// Smallest sampled value of the probed real part.
    pub worst_margin: f64,
    pub worst_radius: f64,
    pub worst_angle: f64,
    /// Winding number of the probed auxiliary function stayed correct on every circle.
    pub winding_ok: bool,
}

impl ProbeOutcome {
    pub fn not_checked() -> Self {
        Self {
            status: ProbeStatus::NotChecked,
            worst_margin: f64::NAN,
            worst_radius: f64::NAN,
            worst_angle: f64::NAN,
            winding_ok: true,
        }
    }

    pub fn failed(&self) -> bool {
        self.status == ProbeStatus::Failed
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PsiFunction {
    pub family: PsiFamily,
    pub series: TruncatedSeries,
    pub b1: f64,
    pub b2: f64,
    pub normalized: bool,
    pub convex_probe: ProbeOutcome,
    pub starlike_wrt_one_probe: ProbeOutcome,
}

impl PsiFunction {
    /// Validates the parameters, generates the series and runs both probes.
    pub fn new(family: PsiFamily, order: usize) -> Result<Self> {
        family.validate()?;
        let series = family.series(order)?;
        let normalized = family.is_normalized();
        let b1 = series.coeff(1).re;
        let b2 = series.coeff(2).re;

        let (convex_probe, starlike_wrt_one_probe) = if normalized && b1 != 0.0 {
            let probe_series = match family {
                PsiFamily::Custom { .. } => series.clone(),
                _ => family.series(PROBE_ORDER.max(order))?,
            };
            (
                convexity_probe(&probe_series, PROBE_R_MAX, PROBE_GRID)?,
                starlike_wrt_one_probe(&probe_series, PROBE_R_MAX, PROBE_GRID)?,
            )
        } else {
            (ProbeOutcome::not_checked(), ProbeOutcome::not_checked())
        };

        Ok(Self {
            family,
            series,
            b1,
            b2,
            normalized,
            convex_probe,
            starlike_wrt_one_probe,
        })
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// The series regenerated at another order.
    pub fn series_at(&self, order: usize) -> Result<TruncatedSeries> {
        if order == self.series.order() {
            return Ok(self.series.clone());
        }
        self.family.series(order)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.family.eval(z)
    }

    pub fn require_normalized(&self) -> Result<()> {
        if self.normalized {
            Ok(())
        } else {
            Err(Error::NonUnitConstantTerm {
                found: self.series.coeff(0).norm(),
            })
        }
    }
}

/// Convenience wrapper around [`PsiFunction::new`].
pub fn make_psi(family: PsiFamily, order: usize) -> Result<PsiFunction> {
    PsiFunction::new(family, order)
}

fn probe_radii(r_max: f64) -> Vec<f64> {
    let mut radii = vec![0.5, 0.7];
    radii.retain(|&r| r < r_max);
    radii.push(r_max);
    radii
}

fn classify(min_margin: f64, winding_ok: bool) -> ProbeStatus {
    if !winding_ok || min_margin < -1e-4 {
        ProbeStatus::Failed
    } else if min_margin > -1e-8 {
        ProbeStatus::Verified
    } else {
        ProbeStatus::NotChecked
    }
}

fn winding_number(values: &[Complex64]) -> i64 {
    let n = values.len();
    let mut total = 0.0;
    for i in 0..n {
        let a = values[i];
        let b = values[(i + 1) % n];
        total += (b / a).arg();
    }
    (total / (2.0 * PI)).round() as i64
}

fn check_probe_series(s: &TruncatedSeries) -> Result<()> {
    if (s.coeff(0) - Complex64::new(1.0, 0.0)).norm() > crate::series::UNIT_TOL {
        return Err(Error::NonUnitConstantTerm {
            found: s.coeff(0).norm(),
        });
    }
    if s.coeff(1).norm() == 0.0 {
        return Err(Error::DegenerateDerivative);
    }
    Ok(())
}

/// Samples `Re(1 + z s''(z)/s'(z))` on circles of radius 0.5, 0.7 and `r_max`.
///
/// The image of a circle is convex iff this curvature term stays positive and
/// the tangent turns exactly once, so the probe also requires `s'` to have
/// winding number 0 on every sampled circle.
pub fn convexity_probe(s: &TruncatedSeries, r_max: f64, grid_size: usize) -> Result<ProbeOutcome> {
    check_probe_series(s)?;
    let d1 = s.derivative();
    let d2 = d1.derivative();
    let mut worst = (f64::INFINITY, 0.0, 0.0);
    let mut winding_ok = true;
    for r in probe_radii(r_max) {
        let mut values = Vec::with_capacity(grid_size);
        for j in 0..grid_size {
            let theta = 2.0 * PI * j as f64 / grid_size as f64;
            let z = Complex64::from_polar(r, theta);
            let sp = d1.eval(z);
            values.push(sp);
            let margin = (Complex64::new(1.0, 0.0) + z * d2.eval(z) / sp).re;
            if margin < worst.0 {
                worst = (margin, r, theta);
            }
        }
        if winding_number(&values) != 0 {
            winding_ok = false;
        }
    }
    Ok(ProbeOutcome {
        status: classify(worst.0, winding_ok),
        worst_margin: worst.0,
        worst_radius: worst.1,
        worst_angle: worst.2,
        winding_ok,
    })
}

/// Samples `Re(z s'(z)/(s(z) - 1))` on the probe circles; points with
/// `|s(z) - 1| < 1e-14` are skipped. `s - 1` must wind exactly once.
pub fn starlike_wrt_one_probe(s: &TruncatedSeries, r_max: f64, grid_size: usize) -> Result<ProbeOutcome> {
    check_probe_series(s)?;
    let d1 = s.derivative();
    let one = Complex64::new(1.0, 0.0);
    let mut worst = (f64::INFINITY, 0.0, 0.0);
    let mut winding_ok = true;
    for r in probe_radii(r_max) {
        let mut values = Vec::with_capacity(grid_size);
        for j in 0..grid_size {
            let theta = 2.0 * PI * j as f64 / grid_size as f64;
            let z = Complex64::from_polar(r, theta);
            let w = s.eval(z) - one;
            if w.norm() < 1e-14 {
                continue;
            }
            values.push(w);
            let margin = (z * d1.eval(z) / w).re;
            if margin < worst.0 {
                worst = (margin, r, theta);
            }
        }
        if winding_number(&values) != 1 {
            winding_ok = false;
        }
    }
    Ok(ProbeOutcome {
        status: classify(worst.0, winding_ok),
        worst_margin: worst.0,
        worst_radius: worst.1,
        worst_angle: worst.2,
        winding_ok,
    })
}

/// Grid minimum of `Re f` on `|z| = r` and the angle attaining it.
pub fn min_real_part_by<F: Fn(Complex64) -> Complex64>(f: F, r: f64, grid_size: usize) -> (f64, f64) {
    let mut best = (f64::INFINITY, 0.0);
    for j in 0..grid_size {
        let theta = 2.0 * PI * j as f64 / grid_size as f64;
        let v = f(Complex64::from_polar(r, theta)).re;
        if v < best.0 {
            best = (v, theta);
        }
    }
    best
}

/// `min_{|z| = r} Re ψ(z)` by grid scan of the closed form.
pub fn min_real_part(p: &PsiFunction, r: f64, grid_size: usize) -> Result<(f64, f64)> {
    if !(0.0..=0.95).contains(&r) {
        return Err(Error::ParamOutOfRange(format!("min_real_part needs 0 <= r <= 0.95, got {r}")));
    }
    Ok(min_real_part_by(|z| p.eval(z), r, grid_size))
}

/// Series of `q` solving the Janowski Briot–Bouquet equation:
/// `₂F₁(1 - D/E, 1; 2; Ez/(1 + Ez))` for `E ≠ 0`, `₁F₁(1; 2; -Dz)` for `E = 0`.
pub fn hyp_q_janowski(d: f64, e: f64, order: usize) -> Result<TruncatedSeries> {
    PsiFamily::Janowski { d, e }.validate()?;
    if e == 0.0 {
        // (-Dz)^m / (m + 1)!
        let mut c = 1.0;
        let mut coeffs = Vec::with_capacity(order + 1);
        for m in 0..=order {
            if m > 0 {
                c *= -d / (m as f64 + 1.0);
            }
            coeffs.push(c);
        }
        return Ok(TruncatedSeries::from_real(&coeffs));
    }
    // ₂F₁(a, 1; 2; w) = sum (a)_m / (m + 1)! w^m
    let a = 1.0 - d / e;
    let mut t = 1.0;
    let mut hyp = Vec::with_capacity(order + 1);
    for m in 0..=order {
        if m > 0 {
            t *= (a + m as f64 - 1.0) / (m as f64 + 1.0);
        }
        hyp.push(t);
    }
    let hyp = TruncatedSeries::from_real(&hyp);
    let w = TruncatedSeries::from_real(&[0.0, e])
        .with_order(order)
        .div(&TruncatedSeries::from_real(&[1.0, e]).with_order(order))?;
    hyp.compose(&w)
}
