//! Adaptive Gauss–Legendre quadrature on finite intervals.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const NODES: usize = 15;

/// Default target accuracy for boundary values.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Default bisection depth limit.
pub const DEFAULT_MAX_DEPTH: u32 = 20;

/// Gauss–Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre polynomial.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(NODES))
}

fn panel<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> f64 {
    let (x, w) = rule();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (b + a);
    x.iter()
        .zip(w)
        .map(|(&xi, &wi)| wi * f(mid + half * xi))
        .sum::<f64>()
        * half
}

/// `∫_a^b f`, bisecting panels until a panel and its two halves agree to
/// within the (width-scaled) tolerance.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64, max_depth: u32) -> Result<f64> {
    let whole = panel(&mut f, a, b);
    recurse(&mut f, a, b, whole, tol, max_depth)
}

fn recurse<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let left = panel(f, a, m);
    let right = panel(f, m, b);
    let fine = left + right;
    if !fine.is_finite() {
        return Err(Error::QuadratureNotConverged { a, b });
    }
    if (fine - whole).abs() <= tol.max(1e-15 * fine.abs()) {
        return Ok(fine);
    }
    if depth == 0 {
        return Err(Error::QuadratureNotConverged { a, b });
    }
    Ok(recurse(f, a, m, left, 0.5 * tol, depth - 1)? + recurse(f, m, b, right, 0.5 * tol, depth - 1)?)
}

/// `∫_0^upper g(s) ds` after the substitution `s = upper (1 - u^2)`, which
/// smooths algebraic endpoint behaviour at `s = upper`.
pub fn integrate_from_zero_smoothed<F: FnMut(f64) -> f64>(
    mut g: F,
    upper: f64,
    tol: f64,
    max_depth: u32,
) -> Result<f64> {
    if upper == 0.0 {
        return Ok(0.0);
    }
    integrate(
        |u| 2.0 * upper * u * g(upper * (1.0 - u * u)),
        0.0,
        1.0,
        tol,
        max_depth,
    )
}
