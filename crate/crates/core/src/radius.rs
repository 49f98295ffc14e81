//! Radius equations: assembly, bracketed bisection and closed forms.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{
    briot_bouquet_dominant, convex_extremal, starlike_extremal, ExtremalFunction,
};
use crate::psi::{convexity_probe, PsiFamily, PsiFunction, PROBE_GRID, PROBE_ORDER, PROBE_R_MAX};
use crate::series::{eval_refined, RefinePolicy, TruncatedSeries};

pub const DEFAULT_ORDER: usize = 64;
pub const DEFAULT_TOL: f64 = 1e-12;
/// Cap `r* = min(r0, 1/3)` of the quasiconformal Bohr theorems.
pub const BOHR_CAP: f64 = 1.0 / 3.0;

const EPS: f64 = 1e-6;
const DEFAULT_HINT: f64 = 0.25;
const MONOTONE_GRID: usize = 32;
const MONOTONE_TOL: f64 = 1e-9;
const MAX_BISECTIONS: usize = 200;

/// `k = (K - 1)/(K + 1)`.
pub fn dilatation_bound(big_k: f64) -> f64 {
    (big_k - 1.0) / (big_k + 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormKind {
    /// `(5K + 1 - √(8K(3K + 1)))/(K + 1)`.
    StarlikeUnivalent,
    /// `(K + 1)/(5K + 1)`.
    ConvexUnivalent,
    /// Root of `K 2^{2(1-α)+1} r - (K + 1)(1 - r)^{2(1-α)} = 0`.
    OrderAlphaEquation { alpha: f64 },
    /// Root of `2Kr/(1 - r)^{2(1-δ)} - (K + 1)/4^{1-δ} = 0` for the
    /// `k`-uniformly convex class of order α.
    Kucst { k: f64, alpha: f64 },
}

/// Closed forms of the logarithmic Bohr radius in terms of `B1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LogMode {
    /// `1 - exp(-1/B1)`, `f ∈ S*(ψ)` with ψ convex.
    StarlikeConvexPsi,
    /// `1/(1 + B1)`, ψ starlike with respect to 1.
    StarlikeWrt1,
    /// `1 - exp(-2/B1)`, `f ∈ C(φ)`.
    ConvexClass,
    /// `1 - exp(-2/B1)`, `p + zp' ≺ φ` with `p = zf'/f`.
    Hallen,
    /// `1 - exp(-4/B1)`, `p² + 2zpp' ≺ φ`.
    P2,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    QuasiStarlike,
    QuasiConvex,
    /// Head `|f(z^n)|`, tail from index `big_n`.
    BohrRogosinski { n: u32, big_n: usize },
    Log(LogMode),
    ClosedForm(ClosedFormKind),
}

impl Theorem {
    pub fn default_cap(&self) -> f64 {
        match self {
            Theorem::QuasiStarlike | Theorem::QuasiConvex | Theorem::BohrRogosinski { .. } => BOHR_CAP,
            Theorem::Log(_) | Theorem::ClosedForm(_) => 1.0,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Theorem::QuasiStarlike => "quasi_starlike",
            Theorem::QuasiConvex => "quasi_convex",
            Theorem::BohrRogosinski { .. } => "bohr_rogosinski",
            Theorem::Log(LogMode::StarlikeConvexPsi) => "log_starlike",
            Theorem::Log(LogMode::StarlikeWrt1) => "log_starlike_wrt1",
            Theorem::Log(LogMode::ConvexClass) => "log_convex",
            Theorem::Log(LogMode::Hallen) => "log_hallen",
            Theorem::Log(LogMode::P2) => "log_p2",
            Theorem::ClosedForm(_) => "closed_form",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusQuery {
    pub theorem: Theorem,
    pub psi: PsiFunction,
    /// Quasiconformality constant `K >= 1`.
    pub big_k: f64,
    pub cap: f64,
    /// Base truncation order; refinement doubles it as needed.
    pub order: usize,
    pub tol: f64,
}

impl RadiusQuery {
    pub fn new(theorem: Theorem, psi: PsiFunction, big_k: f64) -> Self {
        Self {
            cap: theorem.default_cap(),
            theorem,
            psi,
            big_k,
            order: DEFAULT_ORDER,
            tol: DEFAULT_TOL,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.big_k >= 1.0) || !self.big_k.is_finite() {
            return Err(Error::ParamOutOfRange(format!("K must be >= 1, got {}", self.big_k)));
        }
        if !(self.cap > 0.0 && self.cap <= 1.0) {
            return Err(Error::ParamOutOfRange(format!("cap must lie in (0, 1], got {}", self.cap)));
        }
        if !(self.tol > 0.0) {
            return Err(Error::ParamOutOfRange(format!("tolerance must be positive, got {}", self.tol)));
        }
        if self.order < 2 {
            return Err(Error::ParamOutOfRange(format!("order must be >= 2, got {}", self.order)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusResult {
    pub r0: f64,
    pub r_star: f64,
    pub residual: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub capped: bool,
    /// Highest series order any evaluation needed (0 for pure closed forms).
    pub order_used: usize,
}

impl RadiusResult {
    fn exact(r0: f64, cap: f64) -> Self {
        Self {
            r0,
            r_star: r0.min(cap),
            residual: 0.0,
            bracket: (r0, r0),
            iterations: 0,
            capped: r0 > cap,
            order_used: 0,
        }
    }

    fn from_root(root: RootSolution, cap: f64, order_used: usize) -> Self {
        Self {
            r0: root.root,
            r_star: root.root.min(cap),
            residual: root.residual,
            bracket: root.bracket,
            iterations: root.iterations,
            capped: root.root > cap,
            order_used,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootSolution {
    pub root: f64,
    pub residual: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
}

/// Root of a nondecreasing `F` on `(0, 1)` with `F(1e-6) < 0`.
///
/// The upper end starts at `hint` (0.25 by default) and moves halfway to 1
/// until `F >= 0`. Monotonicity is sampled on 32 grid points before
/// bisecting to a bracket narrower than `tol`.
pub fn solve_monotone_root<F>(mut f: F, hint: Option<f64>, tol: f64) -> Result<RootSolution>
where
    F: FnMut(f64) -> Result<f64>,
{
    let r_max = 1.0 - EPS;
    let mut lo = EPS;
    let f_lo = f(lo)?;
    if !(f_lo < 0.0) {
        return Err(Error::NoSignChange {
            r_low: lo,
            r_high: lo,
            f_low: f_lo,
            f_high: f_lo,
        });
    }
    let mut hi = hint.unwrap_or(DEFAULT_HINT).clamp(2.0 * EPS, r_max);
    let mut f_hi = f(hi)?;
    while f_hi < 0.0 {
        if hi >= r_max {
            return Err(Error::NoSignChange {
                r_low: EPS,
                r_high: hi,
                f_low: f_lo,
                f_high: f_hi,
            });
        }
        lo = hi;
        hi = (1.0 - 0.5 * (1.0 - hi)).min(r_max);
        if r_max - hi < 0.5 * EPS {
            hi = r_max;
        }
        f_hi = f(hi)?;
    }

    let mut prev = f_lo;
    for j in 1..=MONOTONE_GRID {
        let r = EPS + (hi - EPS) * j as f64 / MONOTONE_GRID as f64;
        let v = f(r)?;
        let drop = prev - v;
        if drop > MONOTONE_TOL * prev.abs().max(v.abs()).max(1.0) {
            return Err(Error::MonotonicityViolated { r, drop });
        }
        prev = v;
    }

    let mut iterations = 0;
    while hi - lo >= tol && iterations < MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if f(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let root = 0.5 * (lo + hi);
    Ok(RootSolution {
        root,
        residual: f(root)?.abs(),
        bracket: (lo, hi),
        iterations,
    })
}

/// Positive-coefficient series evaluated with order doubling. Past the
/// refinement limit the partial sum is still a lower bound for the full sum.
struct MajorantEvaluator<'a> {
    extremal: &'a ExtremalFunction,
    cache: HashMap<usize, TruncatedSeries>,
    policy: RefinePolicy,
    base_order: usize,
    max_order_used: usize,
}

enum Sum {
    Exact(f64),
    /// Partial sum at the refinement limit, with the error it came from.
    LowerBound(f64, Error),
}

impl<'a> MajorantEvaluator<'a> {
    fn new(extremal: &'a ExtremalFunction, base_order: usize, tol: f64) -> Self {
        Self {
            extremal,
            cache: HashMap::new(),
            policy: RefinePolicy::with_tol(tol),
            base_order,
            max_order_used: 0,
        }
    }

    fn series(&mut self, order: usize) -> Result<TruncatedSeries> {
        if let Some(s) = self.cache.get(&order) {
            return Ok(s.clone());
        }
        let s = self.extremal.majorant_at(order)?;
        self.cache.insert(order, s.clone());
        Ok(s)
    }

    /// `Σ_{m >= skip} |a_m| r^m`.
    fn tail(&mut self, r: f64, skip: usize) -> Result<Sum> {
        let policy = self.policy;
        let base = self.base_order;
        let mut top = 0;
        let out = eval_refined(
            |order| {
                top = top.max(order);
                let s = self.series(order)?;
                Ok(TruncatedSeries::from_fn(order, |m| {
                    if m < skip {
                        num_complex::Complex64::new(0.0, 0.0)
                    } else {
                        s.coeff(m)
                    }
                }))
            },
            base,
            r,
            &policy,
        );
        self.max_order_used = self.max_order_used.max(top);
        match out {
            Ok(ev) => Ok(Sum::Exact(ev.value.re)),
            Err(e @ Error::TruncationNotConverged { high, .. }) => Ok(Sum::LowerBound(high, e)),
            Err(e) => Err(e),
        }
    }
}

/// Resolves the sign of `offset + Σ weight_i * sum_i`, where lower bounds
/// are only acceptable if they already make the total positive.
fn combine(offset: f64, parts: Vec<(f64, Sum)>) -> Result<f64> {
    let mut total = offset;
    let mut unresolved = None;
    for (w, s) in parts {
        match s {
            Sum::Exact(v) => total += w * v,
            Sum::LowerBound(v, e) => {
                total += w * v;
                unresolved.get_or_insert(e);
            }
        }
    }
    match unresolved {
        Some(e) if total <= 0.0 => Err(e),
        _ => Ok(total),
    }
}

fn require_normalized(p: &PsiFunction) -> Result<()> {
    p.require_normalized()
}

/// Extremal function for a quasiconformal theorem.
pub fn theorem_extremal(q: &RadiusQuery) -> Result<ExtremalFunction> {
    require_normalized(&q.psi)?;
    match q.theorem {
        Theorem::QuasiConvex => convex_extremal(&q.psi, q.order),
        _ => starlike_extremal(&q.psi, 0, q.order),
    }
}

/// Root of `T(r) = (2K/(K+1)) f̂0(r) + f0(-1)` with the starlike or convex extremal.
pub fn bohr_radius_quasiconformal(q: &RadiusQuery) -> Result<RadiusResult> {
    q.validate()?;
    if !matches!(q.theorem, Theorem::QuasiStarlike | Theorem::QuasiConvex) {
        return Err(Error::ParamOutOfRange(format!("{} is not a quasiconformal Bohr theorem", q.theorem.tag())));
    }
    let e = theorem_extremal(q)?;
    let weight = 1.0 + dilatation_bound(q.big_k);
    let mut eval = MajorantEvaluator::new(&e, q.order, q.tol);
    let root = solve_monotone_root(
        |r| {
            let s = eval.tail(r, 0)?;
            combine(e.f0_at_minus1, vec![(weight, s)])
        },
        None,
        q.tol,
    )?;
    Ok(RadiusResult::from_root(root, q.cap, eval.max_order_used))
}

/// Root of `f̂0(r^n) + f0(-1) + (2K/(K+1)) (f̂0(r) - S_N(r))`, `S_N = Σ_{m<N}`.
pub fn bohr_rogosinski_radius(q: &RadiusQuery) -> Result<RadiusResult> {
    q.validate()?;
    let Theorem::BohrRogosinski { n, big_n } = q.theorem else {
        return Err(Error::ParamOutOfRange(format!("{} is not a Bohr-Rogosinski theorem", q.theorem.tag())));
    };
    if n < 1 || big_n < 1 {
        return Err(Error::ParamOutOfRange(format!("need n >= 1 and N >= 1, got n={n}, N={big_n}")));
    }
    let e = starlike_extremal(&q.psi, 0, q.order)?;
    let weight = 1.0 + dilatation_bound(q.big_k);
    let mut eval = MajorantEvaluator::new(&e, q.order, q.tol);
    let root = solve_monotone_root(
        |r| {
            let head = eval.tail(r.powi(n as i32), 0)?;
            let tail = eval.tail(r, big_n)?;
            combine(e.f0_at_minus1, vec![(1.0, head), (weight, tail)])
        },
        None,
        q.tol,
    )?;
    Ok(RadiusResult::from_root(root, q.cap, eval.max_order_used))
}

fn probe_gate(ok: bool, what: &str, p: &PsiFunction) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ProbeFailed(format!("{what} failed for {}", p.family)))
    }
}

/// Checks the geometric hypotheses of a logarithmic Bohr theorem on the
/// probe grid.
pub fn check_log_hypotheses(mode: LogMode, p: &PsiFunction) -> Result<()> {
    require_normalized(p)?;
    match mode {
        LogMode::StarlikeWrt1 => probe_gate(
            !p.starlike_wrt_one_probe.failed(),
            "starlikeness with respect to 1",
            p,
        ),
        LogMode::ConvexClass => {
            probe_gate(!p.convex_probe.failed(), "convexity probe", p)?;
            let dom = briot_bouquet_dominant(p, PROBE_ORDER)?;
            let probe = convexity_probe(&dom.series, PROBE_R_MAX, PROBE_GRID)?;
            probe_gate(!probe.failed(), "convexity probe of the Briot-Bouquet dominant", p)
        }
        LogMode::StarlikeConvexPsi | LogMode::Hallen | LogMode::P2 => {
            probe_gate(!p.convex_probe.failed(), "convexity probe", p)
        }
    }
}

pub fn log_bohr_radius(mode: LogMode, b1: f64) -> Result<f64> {
    if !(b1 > 0.0) || !b1.is_finite() {
        return Err(Error::ParamOutOfRange(format!("log radii need B1 > 0, got {b1}")));
    }
    Ok(match mode {
        LogMode::StarlikeConvexPsi => 1.0 - (-1.0 / b1).exp(),
        LogMode::StarlikeWrt1 => 1.0 / (1.0 + b1),
        LogMode::ConvexClass | LogMode::Hallen => 1.0 - (-2.0 / b1).exp(),
        LogMode::P2 => 1.0 - (-4.0 / b1).exp(),
    })
}

/// `δ` of the `k`-uniformly convex radius.
pub fn kucst_delta(k: f64, alpha: f64) -> f64 {
    let beta = (1.0 + alpha * k) / (1.0 + k);
    let gamma = 1.0 / (1.0 + k);
    let a = 2.0 * gamma - beta;
    (a + (a * a + 8.0 * beta).sqrt()) / 4.0
}

pub fn closed_form_radius(kind: ClosedFormKind, big_k: f64) -> Result<RadiusResult> {
    if !(big_k >= 1.0) || !big_k.is_finite() {
        return Err(Error::ParamOutOfRange(format!("K must be >= 1, got {big_k}")));
    }
    let kk = big_k;
    match kind {
        ClosedFormKind::StarlikeUnivalent => Ok(RadiusResult::exact(
            (5.0 * kk + 1.0 - (8.0 * kk * (3.0 * kk + 1.0)).sqrt()) / (kk + 1.0),
            1.0,
        )),
        ClosedFormKind::ConvexUnivalent => Ok(RadiusResult::exact((kk + 1.0) / (5.0 * kk + 1.0), 1.0)),
        ClosedFormKind::OrderAlphaEquation { alpha } => {
            if !(0.0..=0.5).contains(&alpha) {
                return Err(Error::ParamOutOfRange(format!("alpha must lie in [0, 1/2], got {alpha}")));
            }
            let p = 2.0 * (1.0 - alpha);
            let c = kk * 2f64.powf(p + 1.0);
            let root = solve_monotone_root(|r| Ok(c * r - (kk + 1.0) * (1.0 - r).powf(p)), None, DEFAULT_TOL)?;
            Ok(RadiusResult::from_root(root, 1.0, 0))
        }
        ClosedFormKind::Kucst { k, alpha } => {
            if !(k >= 0.0) || !(0.0..1.0).contains(&alpha) {
                return Err(Error::ParamOutOfRange(format!("need k >= 0 and 0 <= alpha < 1, got k={k}, alpha={alpha}")));
            }
            let adm = (1.0 - alpha) * k * k - (1.0 + alpha) * k - 2.0;
            if adm < 0.0 {
                return Err(Error::AdmissibilityFailed(format!(
                    "(1-alpha)k^2 - (1+alpha)k - 2 = {adm} < 0 for k={k}, alpha={alpha}"
                )));
            }
            let delta = kucst_delta(k, alpha);
            let p = 2.0 * (1.0 - delta);
            let rhs = (kk + 1.0) / 4f64.powf(1.0 - delta);
            let root = solve_monotone_root(|r| Ok(2.0 * kk * r / (1.0 - r).powf(p) - rhs), None, DEFAULT_TOL)?;
            Ok(RadiusResult::from_root(root, 1.0, 0))
        }
    }
}

/// Dispatches a query to the matching solver.
pub fn solve_radius(q: &RadiusQuery) -> Result<RadiusResult> {
    q.validate()?;
    match q.theorem {
        Theorem::QuasiStarlike | Theorem::QuasiConvex => bohr_radius_quasiconformal(q),
        Theorem::BohrRogosinski { .. } => bohr_rogosinski_radius(q),
        Theorem::Log(mode) => {
            check_log_hypotheses(mode, &q.psi)?;
            Ok(RadiusResult::exact(log_bohr_radius(mode, q.psi.b1)?, q.cap))
        }
        Theorem::ClosedForm(kind) => {
            let mut out = closed_form_radius(kind, q.big_k)?;
            out.r_star = out.r0.min(q.cap);
            out.capped = out.r0 > q.cap;
            Ok(out)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SharpnessBranch {
    /// `3(1-E)^{(D-E)/E} <= (1 + E/3)^{(D-E)/E}`.
    NonZeroE,
    /// `D >= (3/4) log 3`.
    ZeroE,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharpnessCondition {
    pub satisfied: bool,
    pub branch: SharpnessBranch,
    pub lhs: f64,
    pub rhs: f64,
}

/// Condition on `(D, E)` under which the Janowski Bohr radius is sharp.
pub fn janowski_sharpness_condition(d: f64, e: f64) -> Result<SharpnessCondition> {
    PsiFamily::Janowski { d, e }.validate()?;
    Ok(if e != 0.0 {
        let p = (d - e) / e;
        let lhs = 3.0 * (1.0 - e).powf(p);
        let rhs = (1.0 + e / 3.0).powf(p);
        SharpnessCondition {
            satisfied: lhs <= rhs,
            branch: SharpnessBranch::NonZeroE,
            lhs,
            rhs,
        }
    } else {
        let rhs = 0.75 * 3f64.ln();
        SharpnessCondition {
            satisfied: d >= rhs,
            branch: SharpnessBranch::ZeroE,
            lhs: d,
            rhs,
        }
    })
}

/// `r + Σ_{m>=2} Π_{t=0}^{m-2} |E - D + Et|/(t+1) r^m`, summed directly from
/// the product formula until terms drop below `1e-18` of the running sum.
pub fn janowski_product_series(d: f64, e: f64, r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::PointOutOfRange { r });
    }
    let mut coeff = 1.0;
    let mut power = r;
    let mut sum = r;
    for m in 2..200_000usize {
        let t = (m - 2) as f64;
        coeff *= (e - d + e * t).abs() / (t + 1.0);
        power *= r;
        let term = coeff * power;
        sum += term;
        if term <= 1e-18 * sum && m > 8 {
            return Ok(sum);
        }
    }
    Err(Error::TruncationNotConverged {
        order: 200_000,
        high_order: 200_000,
        low: sum,
        high: sum,
    })
}

/// Root of `(2K/(K+1)) (r + Σ Π ... r^m) - (1-E)^{(D-E)/E} = 0`, the Janowski
/// radius equation written with explicit coefficients (`e^{-D}` when `E = 0`).
pub fn janowski_product_root(d: f64, e: f64, big_k: f64) -> Result<RadiusResult> {
    PsiFamily::Janowski { d, e }.validate()?;
    if !(big_k >= 1.0) {
        return Err(Error::ParamOutOfRange(format!("K must be >= 1, got {big_k}")));
    }
    let dist = if e == 0.0 { (-d).exp() } else { (1.0 - e).powf((d - e) / e) };
    let w = 1.0 + dilatation_bound(big_k);
    let root = solve_monotone_root(|r| Ok(w * janowski_product_series(d, e, r)? - dist), None, DEFAULT_TOL)?;
    Ok(RadiusResult::from_root(root, BOHR_CAP, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn koebe() -> PsiFunction {
        PsiFunction::new(PsiFamily::Janowski { d: 1.0, e: -1.0 }, 64).unwrap()
    }

    #[test]
    fn solver_examples() {
        let s = solve_monotone_root(|r| Ok(r / (1.0 - r).powi(2) - 0.25), None, 1e-12).unwrap();
        assert!((s.root - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-10);
        let s = solve_monotone_root(|r| Ok(r - 0.5), None, 1e-12).unwrap();
        assert!((s.root - 0.5).abs() < 1e-12);
        let s = solve_monotone_root(|r| Ok(2.0 * r / (1.0 - r).powi(2) - 0.25), None, 1e-12).unwrap();
        assert!((s.root - (5.0 - 2.0 * 6f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn solver_errors() {
        assert!(matches!(
            solve_monotone_root(|r| Ok(r - 2.0), None, 1e-12),
            Err(Error::NoSignChange { .. })
        ));
        assert!(matches!(
            solve_monotone_root(|_| Ok(1.0), None, 1e-12),
            Err(Error::NoSignChange { .. })
        ));
        // dips below its starting value before crossing
        assert!(matches!(
            solve_monotone_root(|r| Ok((8.0 * r).sin() - 0.1 - 2.0 * r * r), None, 1e-12),
            Err(Error::MonotonicityViolated { .. })
        ));
    }

    #[test]
    fn quasi_starlike_examples() {
        let q = RadiusQuery::new(Theorem::QuasiStarlike, koebe(), 1.0);
        let out = solve_radius(&q).unwrap();
        assert!((out.r0 - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-10);
        assert!(!out.capped);
        assert_eq!(out.r_star, out.r0);

        let q = RadiusQuery::new(Theorem::QuasiStarlike, koebe(), 3.0);
        assert!((solve_radius(&q).unwrap().r0 - (4.0 - 15f64.sqrt())).abs() < 1e-10);

        let q = RadiusQuery::new(Theorem::QuasiConvex, koebe(), 1.0);
        assert!((solve_radius(&q).unwrap().r0 - 1.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn uncapped_root_above_one_third() {
        let p = PsiFunction::new(PsiFamily::Janowski { d: 0.2, e: 0.0 }, 64).unwrap();
        let out = solve_radius(&RadiusQuery::new(Theorem::QuasiStarlike, p, 1.0)).unwrap();
        assert!(out.capped);
        assert_eq!(out.r_star, BOHR_CAP);
        // r e^{0.2 r} = e^{-0.2}
        assert!((out.r0 * (0.2 * out.r0).exp() - (-0.2f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn rogosinski_examples() {
        let q = RadiusQuery::new(Theorem::BohrRogosinski { n: 1, big_n: 1 }, koebe(), 1.0);
        let r1 = solve_radius(&q).unwrap().r0;
        assert!((r1 - (5.0 - 2.0 * 6f64.sqrt())).abs() < 1e-10);

        let q2 = RadiusQuery::new(Theorem::BohrRogosinski { n: 2, big_n: 1 }, koebe(), 1.0);
        assert!(solve_radius(&q2).unwrap().r0 > r1);

        let qn = RadiusQuery::new(Theorem::BohrRogosinski { n: 1, big_n: 100_000 }, koebe(), 1.0);
        let direct = RadiusQuery::new(Theorem::QuasiStarlike, koebe(), 1.0);
        assert!((solve_radius(&qn).unwrap().r0 - solve_radius(&direct).unwrap().r0).abs() < 1e-10);
    }

    #[test]
    fn closed_forms() {
        let r = closed_form_radius(ClosedFormKind::StarlikeUnivalent, 1.0).unwrap().r0;
        assert!((r - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-15);
        assert_eq!(closed_form_radius(ClosedFormKind::ConvexUnivalent, 3.0).unwrap().r0, 0.25);
        let r = closed_form_radius(ClosedFormKind::OrderAlphaEquation { alpha: 0.0 }, 1.0).unwrap().r0;
        assert!((r - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-11);
        assert!((kucst_delta(2.0, 0.0) - 0.5).abs() < 1e-15);
        let r = closed_form_radius(ClosedFormKind::Kucst { k: 2.0, alpha: 0.0 }, 1.0).unwrap().r0;
        assert!((r - 1.0 / 3.0).abs() < 1e-11);
        assert!(matches!(
            closed_form_radius(ClosedFormKind::Kucst { k: 0.5, alpha: 0.0 }, 1.0),
            Err(Error::AdmissibilityFailed(_))
        ));
    }

    #[test]
    fn log_radii() {
        assert!((log_bohr_radius(LogMode::Hallen, 2.0).unwrap() - 0.632121).abs() < 5e-7);
        assert!((log_bohr_radius(LogMode::Hallen, 1.0).unwrap() - 0.864665).abs() < 5e-7);
        assert_eq!(
            log_bohr_radius(LogMode::ConvexClass, 2.0).unwrap(),
            1.0 - (-1.0f64).exp()
        );
        assert!(matches!(log_bohr_radius(LogMode::P2, 0.0), Err(Error::ParamOutOfRange(_))));
    }

    #[test]
    fn sharpness_condition_examples() {
        assert!(janowski_sharpness_condition(0.9, 0.0).unwrap().satisfied);
        assert!(!janowski_sharpness_condition(0.5, 0.0).unwrap().satisfied);
        let c = janowski_sharpness_condition(1.0, -1.0).unwrap();
        assert!(c.satisfied);
        assert!((c.lhs - 0.75).abs() < 1e-15 && (c.rhs - 2.25).abs() < 1e-14);
    }

    #[test]
    fn product_root_matches_generic() {
        for (d, e) in [(1.0, -1.0), (0.5, -0.5)] {
            let p = PsiFunction::new(PsiFamily::Janowski { d, e }, 64).unwrap();
            let generic = solve_radius(&RadiusQuery::new(Theorem::QuasiStarlike, p, 2.0)).unwrap();
            let product = janowski_product_root(d, e, 2.0).unwrap();
            assert!((generic.r0 - product.r0).abs() < 1e-9);
        }
    }

    #[test]
    fn query_validation() {
        let q = RadiusQuery::new(Theorem::QuasiStarlike, koebe(), 0.5);
        assert!(matches!(solve_radius(&q), Err(Error::ParamOutOfRange(_))));
    }
}
