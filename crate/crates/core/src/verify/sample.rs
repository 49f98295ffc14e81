//! Random class members and K-quasiconformal harmonic mappings, stored as
//! recipes so they can be rebuilt at any truncation order.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::extremal::{ClassTag, DominantFunction};
use crate::psi::PsiFunction;
use crate::radius::dilatation_bound;
use crate::series::{eval_refined, RefinePolicy, TruncatedSeries};

use super::schwarz::{gen_schwarz, gen_unit_factor, SchwarzMap, UnitFactor};

/// The function a member's `z f'/f` (or `1 + z f''/f'`) is subordinate to.
#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    Psi(PsiFunction),
    Dominant(DominantFunction),
}

impl Target {
    pub fn series_at(&self, order: usize) -> Result<TruncatedSeries> {
        match self {
            Target::Psi(p) => {
                p.require_normalized()?;
                p.series_at(order)
            }
            Target::Dominant(d) => d.series_at(order),
        }
    }
}

/// `f` with `z f'/f = P(ω)` (starlike) or `1 + z f''/f' = P(ω)` (convex).
#[derive(Debug, Clone, PartialEq)]
pub struct MemberRecipe {
    pub target: Target,
    pub class: ClassTag,
    pub omega: SchwarzMap,
}

impl MemberRecipe {
    /// `log(z f'/f)`-type kernel `∫_0^z (P(ω(t)) - 1)/t dt`.
    pub fn log_kernel(&self, order: usize) -> Result<TruncatedSeries> {
        let p = self.target.series_at(order)?;
        let w = self.omega.series(order)?;
        p.compose(&w)?.integrate_logkernel()
    }

    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        let kernel = self.log_kernel(order)?.exp()?;
        Ok(match self.class {
            ClassTag::Starlike => kernel.shift_up(),
            ClassTag::Convex => kernel.integrate(),
        })
    }

    /// `2 Σ γ_m z^m = log(f(z)/z)`; for starlike members this is the kernel itself.
    pub fn log_series(&self, order: usize) -> Result<TruncatedSeries> {
        match self.class {
            ClassTag::Starlike => self.log_kernel(order),
            // one extra order is consumed by the division by z
            ClassTag::Convex => Ok(self.series(order + 1)?.shift_down()?.ln()?),
        }
    }

    /// Largest coefficient-wise residual of the defining subordination
    /// equation, up to `order - 1`.
    pub fn residual(&self, order: usize) -> Result<f64> {
        let f = self.series(order)?;
        let lhs = match self.class {
            ClassTag::Starlike => f.z_derivative().shift_down()?.div(&f.shift_down()?)?,
            ClassTag::Convex => {
                let d1 = f.derivative();
                TruncatedSeries::one(order).add(&d1.derivative().shift_up().div(&d1)?)
            }
        };
        let rhs = self.target.series_at(order)?.compose(&self.omega.series(order)?)?;
        let top = lhs.order().min(rhs.order()).saturating_sub(1);
        Ok((0..=top)
            .map(|m| (lhs.coeff(m) - rhs.coeff(m)).norm())
            .fold(0.0, f64::max))
    }
}

/// Random member of `S*(ψ)` or `C(ψ)`: `ω` has 1 to 3 Blaschke factors.
pub fn gen_member_recipe(target: Target, class: ClassTag, rng: &mut impl Rng) -> MemberRecipe {
    let complexity = rng.gen_range(1..=3);
    MemberRecipe {
        target,
        class,
        omega: gen_schwarz(rng, complexity),
    }
}

/// Series of a random member of the class, truncated at `order`.
pub fn gen_member(p: &PsiFunction, class: ClassTag, rng: &mut impl Rng, order: usize) -> Result<TruncatedSeries> {
    gen_member_recipe(Target::Psi(p.clone()), class, rng).series(order)
}

/// Where the analytic part of a harmonic sample comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Member(MemberRecipe),
    /// A fixed series, zero-padded when a higher order is requested.
    Fixed(TruncatedSeries),
}

impl Source {
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        match self {
            Source::Member(m) => m.series(order),
            Source::Fixed(s) => Ok(s.with_order(order)),
        }
    }
}

/// `h = f + conj(g)` with `g' = kφf'`, and optionally `h1 = h ∘ ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicMapSample {
    pub source: Source,
    pub big_k: f64,
    pub k: f64,
    pub phi: UnitFactor,
    pub omega: Option<SchwarzMap>,
}

/// Truncated parts of a harmonic sample at one order.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicParts {
    pub f: TruncatedSeries,
    pub g: TruncatedSeries,
    /// `f ∘ ω` (equal to `f` without a subordination map).
    pub f1: TruncatedSeries,
    pub g1: TruncatedSeries,
}

impl HarmonicMapSample {
    pub fn new(source: Source, big_k: f64, phi: UnitFactor, omega: Option<SchwarzMap>) -> Result<Self> {
        if !(big_k >= 1.0) || !big_k.is_finite() {
            return Err(Error::ParamOutOfRange(format!("K must be >= 1, got {big_k}")));
        }
        Ok(Self {
            source,
            big_k,
            k: dilatation_bound(big_k),
            phi,
            omega,
        })
    }

    /// `p = f0 + k conj(f0)`: `φ ≡ 1` and no subordination map.
    pub fn sharp(f0: TruncatedSeries, big_k: f64) -> Result<Self> {
        Self::new(Source::Fixed(f0), big_k, UnitFactor::Constant(Complex64::new(1.0, 0.0)), None)
    }

    pub fn parts(&self, order: usize) -> Result<HarmonicParts> {
        let f = self.source.series(order)?;
        let g = if self.k == 0.0 {
            TruncatedSeries::zero(order)
        } else {
            self.phi.series(order)?.mul(&f.derivative()).scale_real(self.k).integrate()
        };
        let (f1, g1) = match &self.omega {
            Some(w) => {
                let ws = w.series(order)?;
                (f.compose(&ws)?, g.compose(&ws)?)
            }
            None => (f.clone(), g.clone()),
        };
        Ok(HarmonicParts { f, g, f1, g1 })
    }

    /// Coefficient-wise `|g' - kφf'|` up to `order - 1`.
    pub fn dilatation_residual(&self, order: usize) -> Result<f64> {
        let parts = self.parts(order)?;
        let rhs = self.phi.series(order)?.mul(&parts.f.derivative()).scale_real(self.k);
        let lhs = parts.g.derivative();
        Ok((0..order)
            .map(|m| (lhs.coeff(m) - rhs.coeff(m)).norm())
            .fold(0.0, f64::max))
    }

    /// Grid maximum of `|g'/f'| = k|φ|` on `|z| = r`.
    pub fn max_dilatation(&self, r: f64, grid: usize) -> f64 {
        (0..grid)
            .map(|j| {
                let z = Complex64::from_polar(r, 2.0 * std::f64::consts::PI * j as f64 / grid as f64);
                self.k * self.phi.eval(z).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// Random harmonic sample over `source`: `φ` from [`gen_unit_factor`] and,
/// with probability 3/4, a subordination map `ω` giving `h1 = h ∘ ω`.
pub fn gen_quasiconformal(source: Source, big_k: f64, rng: &mut impl Rng) -> Result<HarmonicMapSample> {
    let phi = gen_unit_factor(rng);
    let omega = if rng.gen_range(0..4) == 0 {
        None
    } else {
        let complexity = rng.gen_range(1..=3);
        Some(gen_schwarz(rng, complexity))
    };
    HarmonicMapSample::new(source, big_k, phi, omega)
}

/// `Σ_{m >= skip} |s_m| r^m` for a source rebuilt at doubling orders.
pub fn refined_tail_sum<F>(regen: F, base_order: usize, r: f64, skip: usize) -> Result<f64>
where
    F: FnMut(usize) -> Result<TruncatedSeries>,
{
    let mut regen = regen;
    let ev = eval_refined(
        |order| {
            let s = regen(order)?.majorant();
            Ok(TruncatedSeries::from_fn(order, |m| {
                if m < skip {
                    Complex64::new(0.0, 0.0)
                } else {
                    s.coeff(m)
                }
            }))
        },
        base_order,
        r,
        &RefinePolicy::default(),
    )?;
    Ok(ev.value.re)
}

/// `Σ_{m >= n_start} (|c_m| + |d_m|) r^m` over `(f1, g1)`.
pub fn bohr_sum(sample: &HarmonicMapSample, r: f64, n_start: usize, base_order: usize) -> Result<f64> {
    refined_tail_sum(
        |order| {
            let p = sample.parts(order)?;
            Ok(p.f1.majorant().add(&p.g1.majorant()))
        },
        base_order,
        r,
        n_start,
    )
}
