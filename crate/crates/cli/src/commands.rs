//! The four subcommands. Each returns the text to print on stdout and
//! whether the run found inequality failures.

use std::time::Instant;

use bohr_core::extremal::{
    briot_bouquet_dominant, convex_extremal, hallenbeck_dominant, log_gamma_coeffs, sqrt_dominant,
    starlike_extremal, ClassTag,
};
use bohr_core::radius::{
    closed_form_radius, janowski_product_root, solve_radius, ClosedFormKind, LogMode, RadiusQuery, RadiusResult,
    Theorem,
};
use bohr_core::verify::{
    check_bohr_theorem, check_generalized_lemma, check_log_bohr, check_log_gamma_bounds, check_majorant_suite,
    check_rogosinski, LogGammaMode, SuiteConfig, VerificationReport,
};
use bohr_core::{PsiFamily, PsiFunction, TruncatedSeries};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::args::{
    ClassArg, Format, ModeArg, RadiusArgs, SeriesArgs, SeriesTarget, SuiteArg, SweepArg, TableArgs,
    TheoremArg, VerifyArgs,
};
use crate::error::CliError;
use crate::output::{fmt_num, render_csv, render_json, Cell};
use crate::psi_spec::parse_psi;

/// Largest base order accepted; refinement doubles up to 512.
const MAX_BASE_ORDER: usize = 256;

pub struct Output {
    pub text: String,
    pub failures: bool,
}

impl Output {
    fn data(text: String) -> Self {
        Self { text, failures: false }
    }
}

fn check_k(big_k: f64) -> Result<(), CliError> {
    if !(big_k >= 1.0) || !big_k.is_finite() {
        return Err(CliError::flag("--K", format!("must be a finite number >= 1, got {big_k}")));
    }
    Ok(())
}

fn check_order(order: usize, max: usize) -> Result<(), CliError> {
    if !(2..=max).contains(&order) {
        return Err(CliError::flag("--order", format!("must lie in [2, {max}], got {order}")));
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if !(tol > 0.0 && tol < 1e-3) {
        return Err(CliError::flag("--tol", format!("must lie in (0, 1e-3), got {tol}")));
    }
    Ok(())
}

fn build_psi(spec: &str, order: usize) -> Result<(PsiFamily, PsiFunction), CliError> {
    let family = parse_psi("--psi", spec)?;
    let p = PsiFunction::new(family.clone(), order).map_err(|e| CliError::flag("--psi", e.to_string()))?;
    Ok((family, p))
}

/// Maps a theorem flag to the solver's query type.
fn theorem_for(
    t: TheoremArg,
    n: u32,
    big_n: usize,
    alpha: Option<f64>,
    k_uniform: Option<f64>,
) -> Result<Theorem, CliError> {
    let need_alpha = || alpha.ok_or_else(|| CliError::flag("--alpha", format!("required by --theorem {}", t.name())));
    Ok(match t {
        TheoremArg::QuasiStarlike => Theorem::QuasiStarlike,
        TheoremArg::QuasiConvex => Theorem::QuasiConvex,
        TheoremArg::Rogosinski => {
            if n < 1 {
                return Err(CliError::flag("--n", "must be >= 1"));
            }
            if big_n < 1 {
                return Err(CliError::flag("--N", "must be >= 1"));
            }
            Theorem::BohrRogosinski { n, big_n }
        }
        TheoremArg::LogStarlike => Theorem::Log(LogMode::StarlikeConvexPsi),
        TheoremArg::LogStarlikeWrt1 => Theorem::Log(LogMode::StarlikeWrt1),
        TheoremArg::LogConvex => Theorem::Log(LogMode::ConvexClass),
        TheoremArg::LogHallen => Theorem::Log(LogMode::Hallen),
        TheoremArg::LogP2 => Theorem::Log(LogMode::P2),
        TheoremArg::StarlikeUnivalent => Theorem::ClosedForm(ClosedFormKind::StarlikeUnivalent),
        TheoremArg::ConvexUnivalent => Theorem::ClosedForm(ClosedFormKind::ConvexUnivalent),
        TheoremArg::OrderAlpha => Theorem::ClosedForm(ClosedFormKind::OrderAlphaEquation { alpha: need_alpha()? }),
        TheoremArg::Kucst => {
            let k = k_uniform
                .ok_or_else(|| CliError::flag("--k-uniform", "required by --theorem kucst"))?;
            Theorem::ClosedForm(ClosedFormKind::Kucst { k, alpha: need_alpha()? })
        }
    })
}

fn solve(theorem: Theorem, p: &PsiFunction, big_k: f64, cap: Option<f64>, order: usize, tol: f64) -> Result<RadiusResult, CliError> {
    let mut q = RadiusQuery::new(theorem, p.clone(), big_k);
    if let Some(c) = cap {
        if !(c > 0.0 && c <= 1.0) {
            return Err(CliError::flag("--cap", format!("must lie in (0, 1], got {c}")));
        }
        q.cap = c;
    }
    q.order = order;
    q.tol = tol;
    Ok(solve_radius(&q)?)
}

pub fn radius(a: &RadiusArgs) -> Result<Output, CliError> {
    check_k(a.common.big_k)?;
    check_order(a.order, MAX_BASE_ORDER)?;
    check_tol(a.tol)?;
    let theorem = theorem_for(a.theorem, a.n, a.big_n, a.alpha, a.k_uniform)?;
    let (family, p) = build_psi(&a.common.psi, a.order)?;
    let res = solve(theorem, &p, a.common.big_k, a.cap, a.order, a.tol)?;
    let prec = a.common.precision;
    let text = match a.format {
        Format::Json => render_json(
            &json!({
                "theorem": a.theorem.name(),
                "psi": family.to_string(),
                "K": a.common.big_k,
                "r0": res.r0,
                "r_star": res.r_star,
                "capped": res.capped,
                "residual": res.residual,
                "iterations": res.iterations,
                "order_used": res.order_used,
            }),
            prec,
        ),
        Format::Csv => render_csv(
            &["theorem", "psi", "K", "r0", "r_star", "capped", "residual", "iterations", "order_used"],
            &[vec![
                Cell::Text(a.theorem.name()),
                Cell::Text(family.to_string()),
                Cell::Num(a.common.big_k),
                Cell::Num(res.r0),
                Cell::Num(res.r_star),
                Cell::Bool(res.capped),
                Cell::Num(res.residual),
                Cell::Int(res.iterations as u64),
                Cell::Int(res.order_used as u64),
            ]],
            prec,
        )?,
    };
    Ok(Output::data(text))
}

fn log_mode(m: ModeArg) -> LogMode {
    match m {
        ModeArg::StarlikeConvexPsi => LogMode::StarlikeConvexPsi,
        ModeArg::StarlikeWrt1 => LogMode::StarlikeWrt1,
        ModeArg::ConvexClass => LogMode::ConvexClass,
        ModeArg::Hallen => LogMode::Hallen,
        ModeArg::P2 => LogMode::P2,
    }
}

fn single_n(a: &VerifyArgs) -> Result<usize, CliError> {
    match a.big_n.as_slice() {
        [n] => Ok(*n),
        _ => Err(CliError::flag("--N", "this suite takes a single value")),
    }
}

pub fn verify(a: &VerifyArgs) -> Result<Output, CliError> {
    check_k(a.common.big_k)?;
    check_order(a.order, MAX_BASE_ORDER)?;
    if a.samples == 0 {
        return Err(CliError::flag("--samples", "must be >= 1"));
    }
    if a.big_n.iter().any(|&n| n < 1) {
        return Err(CliError::flag("--N", "values must be >= 1"));
    }
    let (_, p) = build_psi(&a.common.psi, a.order.max(64))?;
    let cfg = SuiteConfig {
        samples: a.samples,
        seed: a.seed,
        order: a.order,
    };
    let start = Instant::now();
    let report: VerificationReport = match a.suite {
        SuiteArg::Bohr => {
            let class = match a.class {
                ClassArg::Starlike => ClassTag::Starlike,
                ClassArg::Convex => ClassTag::Convex,
            };
            check_bohr_theorem(&p, class, a.common.big_k, &cfg)?
        }
        SuiteArg::Rogosinski => {
            if a.n < 1 {
                return Err(CliError::flag("--n", "must be >= 1"));
            }
            check_rogosinski(&p, a.common.big_k, a.n, single_n(a)?, &cfg)?
        }
        SuiteArg::Majorant => {
            if a.tau != 1.0 || a.big_m != 1.0 {
                if a.r.is_some() {
                    return Err(CliError::flag("--r", "the generalized form always uses r = tau/3"));
                }
                check_generalized_lemma(&p, a.tau, a.big_m, single_n(a)?, &cfg)?
            } else {
                check_majorant_suite(&p, &a.big_n, a.r.unwrap_or(1.0 / 3.0), &cfg)?
            }
        }
        SuiteArg::LogGamma => {
            let mode = match a.mode {
                ModeArg::StarlikeConvexPsi => LogGammaMode::StarlikeConvexPsi,
                ModeArg::StarlikeWrt1 => LogGammaMode::StarlikeWrt1,
                ModeArg::ConvexClass => LogGammaMode::ConvexClass,
                other => {
                    return Err(CliError::flag(
                        "--mode",
                        format!("log-gamma takes starlike-convex-psi, starlike-wrt1 or convex-class, got {other:?}"),
                    ))
                }
            };
            if a.terms < 1 || a.terms > MAX_BASE_ORDER {
                return Err(CliError::flag("--terms", format!("must lie in [1, {MAX_BASE_ORDER}]")));
            }
            check_log_gamma_bounds(&p, mode, &cfg, a.terms)?
        }
        SuiteArg::LogBohr => check_log_bohr(&p, log_mode(a.mode), &cfg)?,
    };
    let elapsed = start.elapsed();
    let failures = !report.passed();
    let text = match a.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).map_err(|e| CliError::Output(e.to_string()))?;
            if let (Value::Object(map), true) = (&mut v, a.timing) {
                map.insert("runtime_ms".into(), json!(elapsed.as_millis() as u64));
            }
            render_json(&v, a.common.precision)
        }
        Format::Csv => {
            let rows: Vec<Vec<Cell>> = report
                .failures
                .iter()
                .map(|f| {
                    vec![
                        f.sample_id.map(Cell::Int).unwrap_or(Cell::Empty),
                        Cell::Text(f.check.clone()),
                        Cell::Num(f.r),
                        Cell::Num(f.lhs),
                        Cell::Num(f.rhs),
                        Cell::Num(f.slack),
                    ]
                })
                .collect();
            render_csv(&["sample_id", "check", "r", "lhs", "rhs", "slack"], &rows, a.common.precision)?
        }
    };
    Ok(Output { text, failures })
}

fn series_of(target: SeriesTarget, p: &PsiFunction, order: usize, n: usize) -> Result<TruncatedSeries, CliError> {
    Ok(match target {
        SeriesTarget::Psi => p.series_at(order)?,
        SeriesTarget::ExtremalStarlike => starlike_extremal(p, n, order)?.f0,
        SeriesTarget::ExtremalConvex => convex_extremal(p, order)?.f0,
        SeriesTarget::BbDominant => briot_bouquet_dominant(p, order)?.series,
        SeriesTarget::HallenDominant => hallenbeck_dominant(p, order)?.series,
        SeriesTarget::SqrtDominant => sqrt_dominant(p, order)?.series,
        SeriesTarget::LogGamma => return Err(CliError::flag("--of", "log-gamma cannot be nested")),
    })
}

pub fn series(a: &SeriesArgs) -> Result<Output, CliError> {
    check_order(a.order, 512)?;
    let (_, p) = build_psi(&a.common.psi, a.order.max(64))?;
    let prec = a.common.precision;
    let (header, rows): ([&str; 3], Vec<(usize, f64, f64)>) = if a.target == SeriesTarget::LogGamma {
        if a.terms < 1 || a.terms >= 512 {
            return Err(CliError::flag("--terms", "must lie in [1, 511]"));
        }
        let f = series_of(a.of, &p, a.terms + 1, a.n)?;
        let gamma = log_gamma_coeffs(&f, a.terms)?;
        (
            ["m", "gamma_re", "gamma_im"],
            gamma.iter().enumerate().map(|(i, g)| (i + 1, g.re, g.im)).collect(),
        )
    } else {
        let s = series_of(a.target, &p, a.order, a.n)?;
        (
            ["exponent", "re", "im"],
            s.coeffs().iter().enumerate().map(|(m, c)| (m, c.re, c.im)).collect(),
        )
    };
    let text = match a.format {
        Format::Csv => render_csv(
            &header,
            &rows
                .iter()
                .map(|&(m, re, im)| vec![Cell::Int(m as u64), Cell::Num(re), Cell::Num(im)])
                .collect::<Vec<_>>(),
            prec,
        )?,
        Format::Json => render_json(
            &Value::Array(
                rows.iter()
                    .map(|&(m, re, im)| {
                        let mut o = Map::new();
                        o.insert(header[0].into(), json!(m));
                        o.insert(header[1].into(), json!(re));
                        o.insert(header[2].into(), json!(im));
                        Value::Object(o)
                    })
                    .collect(),
            ),
            prec,
        ),
    };
    Ok(Output::data(text))
}

/// One grid point of a sweep.
struct Row {
    theorem: TheoremArg,
    params: String,
    result: RadiusResult,
    closed_form: Option<f64>,
}

/// Splits a `;`-separated list, dropping empty entries.
fn parse_list(s: &str) -> Vec<String> {
    s.split(';').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
}

fn parse_de_grid(s: &str) -> Result<Vec<(f64, f64)>, CliError> {
    parse_list(s)
        .iter()
        .map(|pair| {
            let (d, e) = pair
                .split_once(':')
                .ok_or_else(|| CliError::flag("--de-grid", format!("`{pair}` is not D:E")))?;
            let num = |x: &str| {
                x.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::flag("--de-grid", format!("`{x}` is not a number")))
            };
            Ok((num(d)?, num(e)?))
        })
        .collect()
}

pub fn table(a: &TableArgs) -> Result<Output, CliError> {
    check_k(a.common.big_k)?;
    check_order(a.order, MAX_BASE_ORDER)?;
    check_tol(a.tol)?;
    let theorem_arg = a.theorem.unwrap_or(match a.sweep {
        SweepArg::B1 => TheoremArg::LogStarlike,
        _ => TheoremArg::QuasiStarlike,
    });
    let theorem = theorem_for(theorem_arg, 1, 1, None, None)
        .map_err(|_| CliError::flag("--theorem", "sweeps take a theorem without extra parameters"))?;
    let big_k = a.common.big_k;
    let order = a.order;
    let tol = a.tol;

    // (params label, ψ spec, K) per grid point
    let grid: Vec<(String, String, f64)> = match a.sweep {
        SweepArg::K => {
            if a.k_list.is_empty() {
                return Err(CliError::flag("--k-list", "empty list"));
            }
            for &k in &a.k_list {
                check_k(k).map_err(|_| CliError::flag("--k-list", format!("K must be >= 1, got {k}")))?;
            }
            a.k_list.iter().map(|&k| (format!("K={k}"), a.common.psi.clone(), k)).collect()
        }
        SweepArg::Alpha => a
            .alpha_list
            .iter()
            .map(|&al| (format!("alpha={al};K={big_k}"), format!("alpha:{al}"), big_k))
            .collect(),
        SweepArg::De => parse_de_grid(&a.de_grid)?
            .into_iter()
            .map(|(d, e)| (format!("D={d};E={e};K={big_k}"), format!("janowski:{d},{e}"), big_k))
            .collect(),
        SweepArg::B1 => parse_list(&a.psi_list)
            .into_iter()
            .map(|s| (String::new(), s, big_k))
            .collect(),
    };
    // parse every ψ up front so a bad grid entry fails before any work
    let psis: Vec<(PsiFamily, PsiFunction)> = grid
        .iter()
        .map(|(_, spec, _)| build_psi(spec, order))
        .collect::<Result<_, _>>()?;
    let koebe = PsiFamily::Janowski { d: 1.0, e: -1.0 };

    let mut rows: Vec<Row> = grid
        .par_iter()
        .zip(psis.par_iter())
        .map(|((label, _, k), (family, p))| -> Result<Row, CliError> {
            let result = solve(theorem, p, *k, None, order, tol)?;
            let closed_form = match (a.sweep, theorem_arg, family) {
                (SweepArg::K, TheoremArg::QuasiStarlike, f) if *f == koebe => {
                    Some(closed_form_radius(ClosedFormKind::StarlikeUnivalent, *k)?.r0)
                }
                (SweepArg::K, TheoremArg::QuasiConvex, f) if *f == koebe => {
                    Some(closed_form_radius(ClosedFormKind::ConvexUnivalent, *k)?.r0)
                }
                (SweepArg::K | SweepArg::Alpha, TheoremArg::QuasiStarlike, PsiFamily::OrderAlpha { alpha })
                    if *alpha <= 0.5 =>
                {
                    Some(closed_form_radius(ClosedFormKind::OrderAlphaEquation { alpha: *alpha }, *k)?.r0)
                }
                (SweepArg::De, TheoremArg::QuasiStarlike, PsiFamily::Janowski { d, e }) => {
                    Some(janowski_product_root(*d, *e, *k)?.r0)
                }
                _ => None,
            };
            let params = if a.sweep == SweepArg::B1 {
                format!("psi={family};B1={}", fmt_num(p.b1, a.common.precision))
            } else {
                label.clone()
            };
            Ok(Row {
                theorem: theorem_arg,
                params,
                result,
                closed_form,
            })
        })
        .collect::<Result<_, _>>()?;
    if a.sweep == SweepArg::B1 {
        // ascending B1; the log radii then decrease down the table
        let mut keyed: Vec<(f64, Row)> = psis.iter().map(|(_, p)| p.b1).zip(rows).collect();
        keyed.sort_by(|x, y| x.0.total_cmp(&y.0));
        rows = keyed.into_iter().map(|(_, r)| r).collect();
    }

    let prec = a.common.precision;
    let text = match a.format {
        Format::Csv => render_csv(
            &["theorem", "params", "r0", "r_star", "capped", "residual", "closed_form", "abs_diff"],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        Cell::Text(r.theorem.name()),
                        Cell::Text(r.params.clone()),
                        Cell::Num(r.result.r0),
                        Cell::Num(r.result.r_star),
                        Cell::Bool(r.result.capped),
                        Cell::Num(r.result.residual),
                        r.closed_form.map(Cell::Num).unwrap_or(Cell::Empty),
                        r.closed_form.map(|c| Cell::Num((c - r.result.r0).abs())).unwrap_or(Cell::Empty),
                    ]
                })
                .collect::<Vec<_>>(),
            prec,
        )?,
        Format::Json => render_json(
            &Value::Array(
                rows.iter()
                    .map(|r| {
                        json!({
                            "theorem": r.theorem.name(),
                            "params": r.params,
                            "r0": r.result.r0,
                            "r_star": r.result.r_star,
                            "capped": r.result.capped,
                            "residual": r.result.residual,
                            "closed_form": r.closed_form,
                            "abs_diff": r.closed_form.map(|c| (c - r.result.r0).abs()),
                        })
                    })
                    .collect(),
            ),
            prec,
        ),
    };
    Ok(Output::data(text))
}
