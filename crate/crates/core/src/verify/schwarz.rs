//! Schwarz functions (analytic self-maps of the disk fixing 0) and
//! unit-bounded analytic factors, with seeded generators.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Largest modulus of a drawn Blaschke zero.
pub const ZERO_RADIUS: f64 = 0.8;

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

#[derive(Debug, Clone, PartialEq)]
pub enum SchwarzKind {
    /// `z^j`, `j >= 1`.
    Monomial(usize),
    /// `rotation · z · Π (a_i - z)/(1 - conj(a_i) z)`.
    Blaschke {
        zeros: Vec<Complex64>,
        rotation: Complex64,
    },
    /// `ω_1 ∘ ω_2 ∘ ...`, outermost first.
    Composition(Vec<SchwarzMap>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzMap {
    pub kind: SchwarzKind,
    /// Analytic bound on `|ω|` over the disk.
    pub sup_bound: f64,
}

/// `(a - w)/(1 - conj(a) w)` applied to a series `w`.
fn disk_automorphism(a: Complex64, w: &TruncatedSeries) -> Result<TruncatedSeries> {
    let n = w.order();
    let num = TruncatedSeries::constant(a, n).sub(w);
    let den = TruncatedSeries::one(n).sub(&w.scale(a.conj()));
    num.div(&den)
}

/// `Π (a_i - w)/(1 - conj(a_i) w)` applied to a series `w`.
fn blaschke_factor_series(zeros: &[Complex64], rotation: Complex64, w: &TruncatedSeries) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::constant(rotation, w.order());
    for &a in zeros {
        acc = acc.mul(&disk_automorphism(a, w)?);
    }
    Ok(acc)
}

fn blaschke_factor_eval(zeros: &[Complex64], rotation: Complex64, z: Complex64) -> Complex64 {
    zeros
        .iter()
        .fold(rotation, |acc, &a| acc * (a - z) / (ONE - a.conj() * z))
}

fn check_zeros(zeros: &[Complex64], rotation: Complex64) -> Result<()> {
    if zeros.iter().any(|a| !(a.norm() < 1.0)) {
        return Err(Error::ParamOutOfRange("Blaschke zeros must lie in the open unit disk".into()));
    }
    if (rotation.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::ParamOutOfRange("rotation must be unimodular".into()));
    }
    Ok(())
}

impl SchwarzMap {
    pub fn identity() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(j: usize) -> Self {
        Self {
            kind: SchwarzKind::Monomial(j.max(1)),
            sup_bound: 1.0,
        }
    }

    pub fn blaschke(zeros: Vec<Complex64>, rotation: Complex64) -> Result<Self> {
        check_zeros(&zeros, rotation)?;
        Ok(Self {
            kind: SchwarzKind::Blaschke { zeros, rotation },
            sup_bound: 1.0,
        })
    }

    /// `maps[0] ∘ maps[1] ∘ ...`; at most three factors.
    pub fn composition(maps: Vec<SchwarzMap>) -> Result<Self> {
        if maps.is_empty() || maps.len() > 3 {
            return Err(Error::ParamOutOfRange(format!(
                "a composition takes 1 to 3 factors, got {}",
                maps.len()
            )));
        }
        let sup_bound = maps.iter().map(|m| m.sup_bound).fold(1.0, f64::min);
        Ok(Self {
            kind: SchwarzKind::Composition(maps),
            sup_bound,
        })
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        match &self.kind {
            SchwarzKind::Monomial(j) => z.powu(*j as u32),
            SchwarzKind::Blaschke { zeros, rotation } => z * blaschke_factor_eval(zeros, *rotation, z),
            SchwarzKind::Composition(maps) => maps.iter().rev().fold(z, |w, m| m.eval(w)),
        }
    }

    /// `self ∘ w` for a series `w` vanishing at 0, by series arithmetic on
    /// the rational closed form.
    pub fn apply(&self, w: &TruncatedSeries) -> Result<TruncatedSeries> {
        match &self.kind {
            SchwarzKind::Monomial(j) => {
                let mut acc = w.clone();
                for _ in 1..*j {
                    acc = acc.mul(w);
                }
                Ok(acc)
            }
            SchwarzKind::Blaschke { zeros, rotation } => {
                Ok(w.mul(&blaschke_factor_series(zeros, *rotation, w)?))
            }
            SchwarzKind::Composition(maps) => {
                let mut acc = w.clone();
                for m in maps.iter().rev() {
                    acc = m.apply(&acc)?;
                }
                Ok(acc)
            }
        }
    }

    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        if let SchwarzKind::Monomial(j) = self.kind {
            return Ok(TruncatedSeries::monomial(j, order));
        }
        self.apply(&TruncatedSeries::identity(order))
    }

    /// Grid maximum of `|ω|` on `|z| = r`.
    pub fn max_on_circle(&self, r: f64, grid: usize) -> f64 {
        (0..grid)
            .map(|j| self.eval(Complex64::from_polar(r, 2.0 * PI * j as f64 / grid as f64)).norm())
            .fold(0.0, f64::max)
    }
}

/// Analytic `φ` with `|φ| <= 1` on the disk (no zero at the origin required).
#[derive(Debug, Clone, PartialEq)]
pub enum UnitFactor {
    Constant(Complex64),
    Blaschke {
        zeros: Vec<Complex64>,
        rotation: Complex64,
    },
}

impl UnitFactor {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            UnitFactor::Constant(c) => *c,
            UnitFactor::Blaschke { zeros, rotation } => blaschke_factor_eval(zeros, *rotation, z),
        }
    }

    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        match self {
            UnitFactor::Constant(c) => Ok(TruncatedSeries::constant(*c, order)),
            UnitFactor::Blaschke { zeros, rotation } => {
                blaschke_factor_series(zeros, *rotation, &TruncatedSeries::identity(order))
            }
        }
    }

    pub fn sup_bound(&self) -> f64 {
        match self {
            UnitFactor::Constant(c) => c.norm(),
            UnitFactor::Blaschke { .. } => 1.0,
        }
    }
}

fn unit(rng: &mut impl Rng) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * rng.gen::<f64>())
}

/// Uniform (by area) point of the disk of radius `radius`.
fn disk_point(rng: &mut impl Rng, radius: f64) -> Complex64 {
    Complex64::from_polar(radius * rng.gen::<f64>().sqrt(), 2.0 * PI * rng.gen::<f64>())
}

fn draw_factor(rng: &mut impl Rng) -> (Vec<Complex64>, Complex64) {
    let count = rng.gen_range(0..=2);
    let zeros = (0..count).map(|_| disk_point(rng, ZERO_RADIUS)).collect();
    (zeros, unit(rng))
}

/// Draws a Schwarz function composed of `complexity` (1 to 3) Blaschke
/// factors, each `z · rotation · Π (a - z)/(1 - conj(a) z)` with 0 to 2 zeros
/// uniform in `|a| <= 0.8`. A single factor is rotated so `ω'(0) >= 0`.
pub fn gen_schwarz(rng: &mut impl Rng, complexity: usize) -> SchwarzMap {
    let complexity = complexity.clamp(1, 3);
    let mut maps = Vec::with_capacity(complexity);
    for _ in 0..complexity {
        let (zeros, mut rotation) = draw_factor(rng);
        if complexity == 1 {
            let lead: Complex64 = zeros.iter().product();
            rotation = if lead.norm() > 0.0 { lead.conj() / lead.norm() } else { ONE };
        }
        maps.push(SchwarzMap {
            kind: SchwarzKind::Blaschke { zeros, rotation },
            sup_bound: 1.0,
        });
    }
    if maps.len() == 1 {
        maps.pop().unwrap()
    } else {
        SchwarzMap {
            kind: SchwarzKind::Composition(maps),
            sup_bound: 1.0,
        }
    }
}

/// [`gen_schwarz`] driven by its own generator seeded with `seed`.
pub fn gen_schwarz_seeded(seed: u64, complexity: usize) -> SchwarzMap {
    gen_schwarz(&mut ChaCha8Rng::seed_from_u64(seed), complexity)
}

/// Draws `φ` for the dilatation `g' = kφf'`: a unimodular constant, a
/// constant inside the disk, or a Blaschke factor with 1 or 2 zeros, with
/// probabilities 1/4, 1/4 and 1/2.
pub fn gen_unit_factor(rng: &mut impl Rng) -> UnitFactor {
    match rng.gen_range(0..4) {
        0 => UnitFactor::Constant(unit(rng)),
        1 => UnitFactor::Constant(disk_point(rng, 1.0)),
        _ => {
            let count = rng.gen_range(1..=2);
            let zeros = (0..count).map(|_| disk_point(rng, ZERO_RADIUS)).collect();
            UnitFactor::Blaschke {
                zeros,
                rotation: unit(rng),
            }
        }
    }
}
