//! Extremal functions of the Ma–Minda classes, their boundary distances,
//! best dominants of the differential subordinations and logarithmic
//! coefficients.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::psi::{PsiFamily, PsiFunction};
use crate::quadrature::{integrate_from_zero_smoothed, DEFAULT_MAX_DEPTH, DEFAULT_TOL};
use crate::series::TruncatedSeries;

const ALEXANDER_TOL: f64 = 1e-12;
const POSITIVE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    Starlike,
    Convex,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalFunction {
    pub source: PsiFunction,
    pub class: ClassTag,
    /// Rotation index: `z f_n'/f_n = ψ(z^{n+1})`. Always 0 for the convex class.
    pub n: usize,
    pub f0: TruncatedSeries,
    pub f0_hat: TruncatedSeries,
    /// Signed boundary value; `f0(-1)` when `n = 0`.
    pub f0_at_minus1: f64,
    pub positive_coeffs: bool,
}

impl ExtremalFunction {
    pub fn order(&self) -> usize {
        self.f0.order()
    }

    /// The extremal function rebuilt at another order.
    pub fn series_at(&self, order: usize) -> Result<TruncatedSeries> {
        if order == self.f0.order() {
            return Ok(self.f0.clone());
        }
        let psi = self.source.series_at(order)?;
        match self.class {
            ClassTag::Starlike => starlike_series(&psi, self.n),
            ClassTag::Convex => convex_series(&psi),
        }
    }

    /// Majorant `f̂0` at another order.
    pub fn majorant_at(&self, order: usize) -> Result<TruncatedSeries> {
        if order == self.f0_hat.order() {
            return Ok(self.f0_hat.clone());
        }
        Ok(self.series_at(order)?.majorant())
    }
}

/// `z exp(∫_0^z (ψ(t^{n+1}) - 1)/t dt)` from a ψ series with constant term 1.
pub fn starlike_series(psi: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    let order = psi.order();
    let inner = TruncatedSeries::monomial(n + 1, order);
    let p = psi.compose(&inner)?;
    Ok(p.integrate_logkernel()?.exp()?.shift_up())
}

/// Solution of `1 + z f''/f' = ψ`: `f' = exp(∫_0^z (ψ(t) - 1)/t dt)`.
pub fn convex_series(psi: &TruncatedSeries) -> Result<TruncatedSeries> {
    Ok(psi.integrate_logkernel()?.exp()?.integrate())
}

/// Alexander transform `∫_0^z s(t)/t dt` of a series with `s(0) = 0`.
pub fn alexander_transform(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    if s.coeff(0).norm() > crate::series::UNIT_TOL {
        return Err(Error::NonZeroConstantTerm {
            found: s.coeff(0).norm(),
        });
    }
    Ok(TruncatedSeries::from_fn(s.order(), |m| {
        if m == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            s.coeff(m) / m as f64
        }
    }))
}

fn has_positive_coeffs(f: &TruncatedSeries) -> bool {
    f.coeffs()
        .iter()
        .all(|c| c.im.abs() <= POSITIVE_TOL && c.re >= -POSITIVE_TOL)
}

fn finish(p: &PsiFunction, class: ClassTag, n: usize, f0: TruncatedSeries) -> Result<ExtremalFunction> {
    let value = boundary_value(p, class, n)?;
    if !(value < 0.0) {
        return Err(Error::BoundaryNotNegative { value });
    }
    Ok(ExtremalFunction {
        source: p.clone(),
        class,
        n,
        f0_hat: f0.majorant(),
        positive_coeffs: has_positive_coeffs(&f0),
        f0,
        f0_at_minus1: value,
    })
}

pub fn starlike_extremal(p: &PsiFunction, n: usize, order: usize) -> Result<ExtremalFunction> {
    p.require_normalized()?;
    let f0 = starlike_series(&p.series_at(order)?, n)?;
    finish(p, ClassTag::Starlike, n, f0)
}

/// Convex extremal; also built as the Alexander transform of the starlike
/// extremal and the two constructions are required to agree.
pub fn convex_extremal(p: &PsiFunction, order: usize) -> Result<ExtremalFunction> {
    p.require_normalized()?;
    let psi = p.series_at(order)?;
    let f0 = convex_series(&psi)?;
    let via_alexander = alexander_transform(&starlike_series(&psi, 0)?)?;
    let deviation = f0
        .coeffs()
        .iter()
        .zip(via_alexander.coeffs())
        .map(|(a, b)| (a - b).norm() / a.norm().max(1.0))
        .fold(0.0, f64::max);
    if deviation > ALEXANDER_TOL {
        return Err(Error::ConsistencyCheck {
            what: "convex extremal vs Alexander transform of the starlike extremal".into(),
            deviation,
        });
    }
    finish(p, ClassTag::Convex, 0, f0)
}

/// Distance from 0 to the boundary of the image, `-f0(-1)`.
pub fn boundary_distance(e: &ExtremalFunction) -> f64 {
    -e.f0_at_minus1
}

/// Signed boundary value: closed form where one is known, quadrature otherwise.
pub fn boundary_value(p: &PsiFunction, class: ClassTag, n: usize) -> Result<f64> {
    match boundary_value_closed_form(&p.family, class, n) {
        Some(v) => Ok(v),
        None => boundary_value_quadrature(p, class, n),
    }
}

/// Closed-form boundary values of the Janowski extremals.
///
/// Starlike: `f0(-1) = -(1 - E)^{(D-E)/E}`, or `-e^{-D}` when `E = 0`; for
/// `n > 0` the distance is the `(n+1)`-th root of the `n = 0` distance.
/// Convex: `((1 - E)^{D/E} - 1)/D`, `log(1 - E)/E` when `D = 0`,
/// `(e^{-D} - 1)/D` when `E = 0`.
pub fn boundary_value_closed_form(family: &PsiFamily, class: ClassTag, n: usize) -> Option<f64> {
    let PsiFamily::Janowski { d, e } = *family else {
        return None;
    };
    match class {
        ClassTag::Starlike => {
            let dist = if e == 0.0 {
                (-d).exp()
            } else {
                (1.0 - e).powf((d - e) / e)
            };
            Some(-dist.powf(1.0 / (n as f64 + 1.0)))
        }
        ClassTag::Convex => {
            if n != 0 {
                return None;
            }
            Some(if e == 0.0 {
                ((-d).exp() - 1.0) / d
            } else if d == 0.0 {
                (1.0 - e).ln() / e
            } else {
                ((1.0 - e).powf(d / e) - 1.0) / d
            })
        }
    }
}

/// Boundary value by adaptive quadrature along the negative real axis.
///
/// Starlike: `log(-f0(-1)) = (1/(n+1)) ∫_0^1 (ψ(-u) - 1)/u du`, the value at
/// the boundary point `ζ` with `ζ^{n+1} = -1` taken with a minus sign.
/// Convex: `-f0(-1) = ∫_0^1 exp(∫_0^s (ψ(-v) - 1)/v dv) ds`.
pub fn boundary_value_quadrature(p: &PsiFunction, class: ClassTag, n: usize) -> Result<f64> {
    p.require_normalized()?;
    let g = |v: f64| (p.eval(Complex64::new(-v, 0.0)).re - 1.0) / v;
    match class {
        ClassTag::Starlike => {
            let log_dist = integrate_from_zero_smoothed(g, 1.0, DEFAULT_TOL, DEFAULT_MAX_DEPTH)?;
            Ok(-(log_dist / (n as f64 + 1.0)).exp())
        }
        ClassTag::Convex => {
            if n != 0 {
                return Err(Error::ParamOutOfRange(
                    "convex extremals have no rotation index".into(),
                ));
            }
            // the inner failure is smuggled out of the closure
            let mut inner_err = None;
            let outer = integrate_from_zero_smoothed(
                |s| match integrate_from_zero_smoothed(g, s, 0.1 * DEFAULT_TOL, DEFAULT_MAX_DEPTH) {
                    Ok(l) => l.exp(),
                    Err(e) => {
                        inner_err.get_or_insert(e);
                        f64::NAN
                    }
                },
                1.0,
                DEFAULT_TOL,
                DEFAULT_MAX_DEPTH,
            );
            if let Some(e) = inner_err {
                return Err(e);
            }
            Ok(-outer?)
        }
    }
}

/// Coefficient-wise residual of the defining equation of an extremal:
/// `z f'/f - ψ(z^{n+1})` (starlike) or `1 + z f''/f' - ψ` (convex), up to
/// `order - 1`.
pub fn extremal_residual(e: &ExtremalFunction) -> Result<f64> {
    let order = e.order();
    let psi = e.source.series_at(order)?;
    let lhs = match e.class {
        ClassTag::Starlike => e.f0.z_derivative().shift_down()?.div(&e.f0.shift_down()?)?,
        ClassTag::Convex => {
            let d1 = e.f0.derivative();
            TruncatedSeries::one(order).add(&d1.derivative().shift_up().div(&d1)?)
        }
    };
    let target = psi.compose(&TruncatedSeries::monomial(e.n + 1, order))?;
    let top = lhs.order().min(target.order()).saturating_sub(1);
    Ok((0..=top)
        .map(|m| (lhs.coeff(m) - target.coeff(m)).norm())
        .fold(0.0, f64::max))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DominantKind {
    /// Solution of `ψ + zψ'/ψ = φ`.
    BriotBouquet,
    /// `(1/z) ∫_0^z φ`.
    Hallenbeck,
    /// Square root of the Hallenbeck dominant.
    SqrtOfHallenbeck,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DominantFunction {
    pub kind: DominantKind,
    pub phi: PsiFunction,
    pub series: TruncatedSeries,
    /// First coefficient of the dominant itself (not of φ).
    pub b1_eff: f64,
}

impl DominantFunction {
    pub fn build(kind: DominantKind, phi: &PsiFunction, order: usize) -> Result<Self> {
        match kind {
            DominantKind::BriotBouquet => briot_bouquet_dominant(phi, order),
            DominantKind::Hallenbeck => hallenbeck_dominant(phi, order),
            DominantKind::SqrtOfHallenbeck => sqrt_dominant(phi, order),
        }
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn series_at(&self, order: usize) -> Result<TruncatedSeries> {
        if order == self.series.order() {
            return Ok(self.series.clone());
        }
        dominant_series(self.kind, &self.phi.series_at(order)?)
    }
}

/// Coefficient `m` scaled by `1/(m + 1)`: the series of `(1/z) ∫_0^z s`.
pub fn hallenbeck_series(s: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries::from_fn(s.order(), |m| s.coeff(m) / (m as f64 + 1.0))
}

fn dominant_series(kind: DominantKind, phi: &TruncatedSeries) -> Result<TruncatedSeries> {
    match kind {
        DominantKind::BriotBouquet => {
            // h = z H, H = exp(∫(φ-1)/t); dominant = h / ∫_0^z h(t)/t dt = H / hallen(H)
            let h = phi.integrate_logkernel()?.exp()?;
            h.div(&hallenbeck_series(&h))
        }
        DominantKind::Hallenbeck => Ok(hallenbeck_series(phi)),
        DominantKind::SqrtOfHallenbeck => hallenbeck_series(phi).sqrt(),
    }
}

fn check_coeff(what: &str, got: f64, expected: f64) -> Result<()> {
    let deviation = (got - expected).abs();
    if deviation > 1e-10 {
        return Err(Error::ConsistencyCheck {
            what: what.into(),
            deviation,
        });
    }
    Ok(())
}

fn finish_dominant(kind: DominantKind, phi: &PsiFunction, series: TruncatedSeries) -> DominantFunction {
    DominantFunction {
        kind,
        phi: phi.clone(),
        b1_eff: series.coeff(1).re,
        series,
    }
}

/// Best dominant of the Briot–Bouquet subordination `p + zp'/p ≺ φ`.
/// The first two coefficients are checked against `B1/2` and `(B1² + 4B2)/12`.
pub fn briot_bouquet_dominant(phi: &PsiFunction, order: usize) -> Result<DominantFunction> {
    if phi.convex_probe.failed() {
        return Err(Error::ProbeFailed(format!("{} is not convex on the probe grid", phi.family)));
    }
    phi.require_normalized()?;
    let series = dominant_series(DominantKind::BriotBouquet, &phi.series_at(order)?)?;
    if order >= 2 {
        check_coeff("Briot-Bouquet dominant, coefficient 1", series.coeff(1).re, phi.b1 / 2.0)?;
        check_coeff(
            "Briot-Bouquet dominant, coefficient 2",
            series.coeff(2).re,
            (phi.b1 * phi.b1 + 4.0 * phi.b2) / 12.0,
        )?;
    }
    Ok(finish_dominant(DominantKind::BriotBouquet, phi, series))
}

/// `(1/z) ∫_0^z φ`: coefficient `m` equals `B_m/(m + 1)`.
pub fn hallenbeck_dominant(phi: &PsiFunction, order: usize) -> Result<DominantFunction> {
    let series = dominant_series(DominantKind::Hallenbeck, &phi.series_at(order)?)?;
    Ok(finish_dominant(DominantKind::Hallenbeck, phi, series))
}

/// `√((1/z) ∫_0^z φ)`, checked against `B1/4` and `B2/6 - B1²/32`.
pub fn sqrt_dominant(phi: &PsiFunction, order: usize) -> Result<DominantFunction> {
    let series = dominant_series(DominantKind::SqrtOfHallenbeck, &phi.series_at(order)?)?;
    if order >= 2 {
        check_coeff("square-root dominant, coefficient 1", series.coeff(1).re, phi.b1 / 4.0)?;
        check_coeff(
            "square-root dominant, coefficient 2",
            series.coeff(2).re,
            phi.b2 / 6.0 - phi.b1 * phi.b1 / 32.0,
        )?;
    }
    Ok(finish_dominant(DominantKind::SqrtOfHallenbeck, phi, series))
}

/// Coefficient-wise residual of `ψ + zψ'/ψ - φ` up to `order - 1`.
pub fn briot_bouquet_residual(dom: &DominantFunction) -> Result<f64> {
    let order = dom.order();
    let psi = &dom.series;
    let lhs = psi.add(&psi.z_derivative().div(psi)?);
    let phi = dom.phi.series_at(order)?;
    Ok((0..order)
        .map(|m| (lhs.coeff(m) - phi.coeff(m)).norm())
        .fold(0.0, f64::max))
}

/// Explicit closed form of the Janowski Briot–Bouquet dominant:
/// `Dz (1+Ez)^{D/E-1} / ((1+Ez)^{D/E} - 1)`, `Ez/((1+Ez) log(1+Ez))` for
/// `D = 0` and `Dz e^{Dz}/(e^{Dz} - 1)` for `E = 0`.
pub fn janowski_explicit_dominant(d: f64, e: f64, order: usize) -> Result<TruncatedSeries> {
    PsiFamily::Janowski { d, e }.validate()?;
    // one spare order is consumed by the division by z
    let n = order + 1;
    let base = TruncatedSeries::from_real(&[1.0, e]).with_order(n);
    let z = TruncatedSeries::identity(n);
    let (num, den) = if e == 0.0 {
        let edz = z.scale_real(d).exp()?;
        (z.scale_real(d).mul(&edz), edz.sub(&TruncatedSeries::one(n)))
    } else if d == 0.0 {
        let log = base.ln()?;
        (z.scale_real(e), base.mul(&log))
    } else {
        let pow = base.powf(d / e)?;
        (
            z.scale_real(d).mul(&base.powf(d / e - 1.0)?),
            pow.sub(&TruncatedSeries::one(n)),
        )
    };
    num.shift_down()?.div(&den.shift_down()?)
}

/// `γ_1, ..., γ_M` where `log(f(z)/z) = 2 Σ γ_m z^m`.
pub fn log_gamma_coeffs(f: &TruncatedSeries, m_max: usize) -> Result<Vec<Complex64>> {
    if f.order() < 1
        || f.coeff(0).norm() > crate::series::UNIT_TOL
        || (f.coeff(1) - Complex64::new(1.0, 0.0)).norm() > crate::series::UNIT_TOL
    {
        return Err(Error::NotNormalized);
    }
    if m_max >= f.order() {
        return Err(Error::OrderTooSmall {
            order: f.order(),
            needed: m_max + 1,
        });
    }
    let log = f.shift_down()?.ln()?;
    Ok((1..=m_max).map(|m| log.coeff(m) * 0.5).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi(family: PsiFamily, order: usize) -> PsiFunction {
        PsiFunction::new(family, order).unwrap()
    }

    fn koebe_psi(order: usize) -> PsiFunction {
        psi(PsiFamily::Janowski { d: 1.0, e: -1.0 }, order)
    }

    #[test]
    fn koebe_and_half_plane_extremals() {
        let s = starlike_extremal(&koebe_psi(10), 0, 10).unwrap();
        for m in 0..=10 {
            assert!((s.f0.coeff(m).re - m as f64).abs() < 1e-12);
        }
        assert!(s.positive_coeffs);
        assert!((boundary_distance(&s) - 0.25).abs() < 1e-15);

        let c = convex_extremal(&koebe_psi(10), 10).unwrap();
        for m in 1..=10 {
            assert!((c.f0.coeff(m).re - 1.0).abs() < 1e-12);
        }
        assert!((boundary_distance(&c) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn janowski_disk_extremal_is_z_exp() {
        let d = 0.7;
        let s = starlike_extremal(&psi(PsiFamily::Janowski { d, e: 0.0 }, 12), 0, 12).unwrap();
        let mut fact = 1.0;
        for m in 1..=12 {
            if m > 1 {
                fact *= (m - 1) as f64;
            }
            let expected = d.powi(m as i32 - 1) / fact;
            assert!((s.f0.coeff(m).re - expected).abs() < 1e-14);
        }
        assert!((boundary_distance(&s) - (-d).exp()).abs() < 1e-15);
    }

    #[test]
    fn janowski_product_formula() {
        let (d, e) = (0.6, -0.3);
        let s = starlike_extremal(&psi(PsiFamily::Janowski { d, e }, 20), 0, 20).unwrap();
        for m in 2..=20 {
            let prod: f64 = (0..=m - 2)
                .map(|t| (e - d + e * t as f64).abs() / (t as f64 + 1.0))
                .product();
            assert!((s.f0_hat.coeff(m).re - prod).abs() < 1e-13, "m = {m}");
        }
    }

    #[test]
    fn convex_log2_boundary() {
        let c = convex_extremal(&psi(PsiFamily::Janowski { d: 0.0, e: -1.0 }, 16), 16).unwrap();
        assert!((c.f0_at_minus1 + 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn quadrature_matches_closed_forms() {
        for (d, e) in [(1.0, -1.0), (0.5, -0.5), (1.0, 0.0), (0.5, 0.0), (0.3, 0.2), (0.0, -0.7)] {
            let p = psi(PsiFamily::Janowski { d, e }, 8);
            for class in [ClassTag::Starlike, ClassTag::Convex] {
                let closed = boundary_value_closed_form(&p.family, class, 0).unwrap();
                let quad = boundary_value_quadrature(&p, class, 0).unwrap();
                assert!((closed - quad).abs() < 1e-10, "{d} {e} {class:?}: {closed} vs {quad}");
            }
        }
    }

    #[test]
    fn rotated_extremal_boundary() {
        // z f'/f = (1+z²)/(1-z²): f = z/(1-z²), |f(i)| = 1/2
        let p = koebe_psi(8);
        assert!((boundary_value_quadrature(&p, ClassTag::Starlike, 1).unwrap() + 0.5).abs() < 1e-12);
        assert!((boundary_value_closed_form(&p.family, ClassTag::Starlike, 1).unwrap() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn extremal_residuals_are_small() {
        for fam in [PsiFamily::Power { eta: 0.5 }, PsiFamily::Crescent, PsiFamily::Sigmoid] {
            let p = psi(fam, 40);
            let s = starlike_extremal(&p, 1, 40).unwrap();
            assert!(extremal_residual(&s).unwrap() < 1e-10);
            let c = convex_extremal(&p, 40).unwrap();
            assert!(extremal_residual(&c).unwrap() < 1e-10);
            assert!(c.f0_at_minus1 < 0.0);
        }
    }

    #[test]
    fn non_normalized_psi_is_rejected() {
        let p = psi(PsiFamily::RootAb { a: 2.0, b: 0.5 }, 8);
        assert!(matches!(starlike_extremal(&p, 0, 8), Err(Error::NonUnitConstantTerm { .. })));
    }

    #[test]
    fn briot_bouquet_examples() {
        let dom = briot_bouquet_dominant(&koebe_psi(12), 12).unwrap();
        for m in 0..=12 {
            assert!((dom.series.coeff(m).re - 1.0).abs() < 1e-12);
        }
        assert!(briot_bouquet_residual(&dom).unwrap() < 1e-10);

        let dom = briot_bouquet_dominant(&psi(PsiFamily::Janowski { d: 0.0, e: -1.0 }, 12), 12).unwrap();
        assert!((dom.series.coeff(1).re - 0.5).abs() < 1e-14);
        assert!((dom.series.coeff(2).re - 5.0 / 12.0).abs() < 1e-14);

        let d = 0.8;
        let dom = briot_bouquet_dominant(&psi(PsiFamily::Janowski { d, e: 0.0 }, 12), 12).unwrap();
        assert!((dom.series.coeff(1).re - d / 2.0).abs() < 1e-14);
        assert!((dom.series.coeff(2).re - d * d / 12.0).abs() < 1e-14);
    }

    #[test]
    fn explicit_janowski_dominant_matches() {
        for (d, e) in [(1.0, -1.0), (0.5, -0.5), (1.0, 0.0), (0.5, 0.0), (0.0, -0.5)] {
            let dom = briot_bouquet_dominant(&psi(PsiFamily::Janowski { d, e }, 30), 30).unwrap();
            let explicit = janowski_explicit_dominant(d, e, 30).unwrap();
            assert!(dom.series.max_abs_diff(&explicit) < 1e-10, "{d} {e}");
        }
    }

    #[test]
    fn hallenbeck_and_sqrt_examples() {
        let h = hallenbeck_dominant(&koebe_psi(6), 6).unwrap();
        for m in 1..=6 {
            assert!((h.series.coeff(m).re - 2.0 / (m as f64 + 1.0)).abs() < 1e-15);
        }
        let e = hallenbeck_dominant(&psi(PsiFamily::ExpAlpha { alpha: 0.0 }, 6), 6).unwrap();
        assert!((e.series.coeff(3).re - 1.0 / 24.0).abs() < 1e-15);

        let s = sqrt_dominant(&koebe_psi(16), 16).unwrap();
        assert!((s.b1_eff - 0.5).abs() < 1e-15);
        assert!(s.series.mul(&s.series).max_abs_diff(&h.series_at(16).unwrap()) < 1e-12);

        let lin = psi(PsiFamily::Custom { series: TruncatedSeries::from_real(&[1.0, 0.3]) }, 1);
        assert!((sqrt_dominant(&lin, 4).unwrap().b1_eff - 0.075).abs() < 1e-15);
    }

    #[test]
    fn log_gamma_examples() {
        let koebe = starlike_extremal(&koebe_psi(41), 0, 41).unwrap();
        for (i, g) in log_gamma_coeffs(&koebe.f0, 40).unwrap().iter().enumerate() {
            assert!((g.re * (i + 1) as f64 - 1.0).abs() < 1e-12);
        }
        let zexp = TruncatedSeries::identity(8).mul(&TruncatedSeries::identity(8).exp().unwrap());
        let g = log_gamma_coeffs(&zexp, 5).unwrap();
        assert!((g[0].re - 0.5).abs() < 1e-15);
        assert!(g[1..].iter().all(|c| c.norm() < 1e-15));

        assert_eq!(log_gamma_coeffs(&TruncatedSeries::from_real(&[0.0, 2.0]), 1), Err(Error::NotNormalized));
        assert!(matches!(log_gamma_coeffs(&koebe.f0, 41), Err(Error::OrderTooSmall { .. })));
    }
}
