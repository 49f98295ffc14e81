//! Acceptance gate: one PASS/FAIL line per criterion, all tolerances pinned
//! here. Runs without the libtest harness so the lines always print; exits
//! nonzero if a criterion fails without a recorded explanation.

use std::time::Instant;

use bohr_core::extremal::{
    boundary_value_closed_form, boundary_value_quadrature, briot_bouquet_dominant, janowski_explicit_dominant,
    log_gamma_coeffs, starlike_extremal, ClassTag,
};
use bohr_core::psi::hyp_q_janowski;
use bohr_core::radius::{
    closed_form_radius, dilatation_bound, janowski_product_root, log_bohr_radius, solve_radius, ClosedFormKind,
    LogMode, RadiusQuery, Theorem,
};
use bohr_core::verify::{
    check_bohr_theorem, check_generalized_lemma, check_log_bohr, check_log_gamma_bounds, check_majorant_suite,
    LogGammaMode, MemberRecipe, SchwarzMap, SuiteConfig, Target, VerificationReport,
};
use bohr_core::{PsiFamily, PsiFunction, TruncatedSeries};

const ROOT_TOL: f64 = 1e-9;
const EXACT_TOL: f64 = 1e-10;
const LOG_GOLDEN_TOL: f64 = 5e-7;
const GAMMA_TOL: f64 = 1e-12;
const SHARP_TOL: f64 = 1e-8;
const ORACLE_TOL: f64 = 1e-10;
const K_GRID: [f64; 5] = [1.0, 1.5, 2.0, 3.0, 10.0];
const JANOWSKI_GRID: [(f64, f64); 4] = [(1.0, -1.0), (0.5, -0.5), (1.0, 0.0), (0.5, 0.0)];
const SEED: u64 = 42;
const SAMPLES: usize = 1000;

struct Outcome {
    pass: bool,
    detail: String,
    /// Set when a failure is fully explained by a counterexample to the
    /// checked statement (see `majorant_lemma_fails_beyond_first_index` in the golden tests).
    known_gap: Option<String>,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Self {
            pass,
            detail,
            known_gap: None,
        }
    }
}

fn psi(family: PsiFamily) -> PsiFunction {
    PsiFunction::new(family, 64).expect("catalog member")
}

fn koebe_psi() -> PsiFunction {
    psi(PsiFamily::Janowski { d: 1.0, e: -1.0 })
}

fn root(theorem: Theorem, p: &PsiFunction, big_k: f64) -> f64 {
    solve_radius(&RadiusQuery::new(theorem, p.clone(), big_k)).expect("radius").r0
}

fn worst(pairs: impl IntoIterator<Item = f64>) -> f64 {
    pairs.into_iter().fold(0.0, f64::max)
}

fn starlike_roots() -> Outcome {
    let p = koebe_psi();
    let dev = worst(K_GRID.iter().map(|&k| {
        let formula = (5.0 * k + 1.0 - (8.0 * k * (3.0 * k + 1.0)).sqrt()) / (k + 1.0);
        (root(Theorem::QuasiStarlike, &p, k) - formula).abs()
    }));
    let k1 = (root(Theorem::QuasiStarlike, &p, 1.0) - (3.0 - 8f64.sqrt())).abs();
    Outcome::new(dev <= ROOT_TOL && k1 <= EXACT_TOL, format!("max |root - formula| = {dev:.3e}, |r(K=1) - (3 - 2 sqrt 2)| = {k1:.3e}"))
}

fn convex_roots() -> Outcome {
    let p = koebe_psi();
    let dev = worst(K_GRID.iter().map(|&k| (root(Theorem::QuasiConvex, &p, k) - (k + 1.0) / (5.0 * k + 1.0)).abs()));
    let k1 = (root(Theorem::QuasiConvex, &p, 1.0) - 1.0 / 3.0).abs();
    Outcome::new(dev <= ROOT_TOL && k1 <= ROOT_TOL, format!("max |root - (K+1)/(5K+1)| = {dev:.3e}, |r(K=1) - 1/3| = {k1:.3e}"))
}

fn order_alpha_roots() -> Outcome {
    let mut dev = 0.0f64;
    for alpha in [0.0, 0.25, 0.5] {
        let p = psi(PsiFamily::OrderAlpha { alpha });
        for k in [1.0, 2.0] {
            let eq = closed_form_radius(ClosedFormKind::OrderAlphaEquation { alpha }, k).unwrap().r0;
            dev = dev.max((eq - root(Theorem::QuasiStarlike, &p, k)).abs());
        }
    }
    Outcome::new(dev <= ROOT_TOL, format!("max |equation root - generic root| = {dev:.3e}"))
}

fn janowski_equivalence() -> Outcome {
    let mut root_dev = 0.0f64;
    let mut dist_dev = 0.0f64;
    for (d, e) in JANOWSKI_GRID {
        let family = PsiFamily::Janowski { d, e };
        let p = psi(family.clone());
        for k in [1.0, 2.0] {
            let product = janowski_product_root(d, e, k).unwrap().r0;
            root_dev = root_dev.max((product - root(Theorem::QuasiStarlike, &p, k)).abs());
        }
        let expected = if e == 0.0 { (-d).exp() } else { (1.0 - e).powf((d - e) / e) };
        let closed = -boundary_value_closed_form(&family, ClassTag::Starlike, 0).unwrap();
        let quad = -boundary_value_quadrature(&p, ClassTag::Starlike, 0).unwrap();
        dist_dev = dist_dev.max((closed - expected).abs()).max((quad - expected).abs());
    }
    Outcome::new(root_dev <= ROOT_TOL && dist_dev <= EXACT_TOL, format!("max root deviation = {root_dev:.3e}, max boundary distance deviation = {dist_dev:.3e}"))
}

fn log_golden() -> Outcome {
    let koebe = koebe_psi();
    let exp = psi(PsiFamily::ExpAlpha { alpha: 0.0 });
    let convex = log_bohr_radius(LogMode::ConvexClass, koebe.b1).unwrap();
    let hallen_koebe = log_bohr_radius(LogMode::Hallen, koebe.b1).unwrap();
    let hallen_exp = log_bohr_radius(LogMode::Hallen, exp.b1).unwrap();
    let d1 = (convex - 0.6321205588).abs();
    let d2 = (hallen_koebe - 0.632121).abs();
    let d3 = (hallen_exp - 0.864665).abs();
    Outcome::new(d1 <= EXACT_TOL && d2 <= LOG_GOLDEN_TOL && d3 <= LOG_GOLDEN_TOL, format!(
            "convex {convex:.10} (dev {d1:.1e}), hallen (1+z)/(1-z) {hallen_koebe:.6} (dev {d2:.1e}), hallen e^z {hallen_exp:.6} (dev {d3:.1e})"
        ))
}

fn extremal_equalities() -> Outcome {
    let p = koebe_psi();
    let koebe = starlike_extremal(&p, 0, 64).unwrap();
    let gamma = log_gamma_coeffs(&koebe.f0, 40).unwrap();
    let gamma_dev = worst(gamma.iter().enumerate().map(|(i, g)| (g.re * (i + 1) as f64 - 1.0).abs() + g.im.abs()));

    let r = 1.0 - (-1.0f64).exp();
    let convex = MemberRecipe {
        target: Target::Psi(p.clone()),
        class: ClassTag::Convex,
        omega: SchwarzMap::identity(),
    };
    let log_sum = convex
        .log_series(256)
        .unwrap()
        .majorant()
        .eval_real(r)
        .re;
    let log_dev = (log_sum - 1.0).abs();

    let mut sharp_dev = 0.0f64;
    for k in [2.0, 3.0] {
        let q = RadiusQuery::new(Theorem::QuasiStarlike, p.clone(), k);
        let res = solve_radius(&q).unwrap();
        assert!(res.r0 <= 1.0 / 3.0);
        let f0 = starlike_extremal(&p, 0, 256).unwrap();
        let lhs = (1.0 + dilatation_bound(k)) * f0.f0_hat.eval_real(res.r0).re;
        sharp_dev = sharp_dev.max((lhs + f0.f0_at_minus1).abs());
    }
    Outcome::new(gamma_dev <= GAMMA_TOL && log_dev <= SHARP_TOL && sharp_dev <= SHARP_TOL, format!(
            "Koebe max |m gamma_m - 1| = {gamma_dev:.3e}, convex log sum dev = {log_dev:.3e}, sharp Bohr dev = {sharp_dev:.3e}"
        ))
}

fn summarize(name: &str, rep: &VerificationReport, elapsed: f64) -> String {
    format!(
        "{name}: {} failures / {} checks, max slack {:.3e} ({elapsed:.1}s)",
        rep.failures.len(),
        rep.checks,
        rep.max_slack
    )
}

fn property_suites(bohr_reports: &mut Vec<VerificationReport>) -> Outcome {
    let cfg = SuiteConfig {
        samples: SAMPLES,
        seed: SEED,
        order: 48,
    };
    let koebe = koebe_psi();
    let mut lines = Vec::new();
    let mut others_pass = true;
    let mut record = |name: &str, rep: VerificationReport, t: Instant| {
        lines.push(summarize(name, &rep, t.elapsed().as_secs_f64()));
        for f in rep.failures.iter().take(3) {
            eprintln!("  {name} failure: {f:?}");
        }
        rep
    };

    let t = Instant::now();
    let majorant = record(
        "majorant N=1,2,5",
        check_majorant_suite(&koebe, &[1, 2, 5], 1.0 / 3.0, &cfg).unwrap(),
        t,
    );
    for (tau, m) in [(1.0, 1.0), (0.5, 2.0)] {
        let t = Instant::now();
        let rep = check_generalized_lemma(&koebe, tau, m, 1, &cfg).unwrap();
        others_pass &= record(&format!("generalized tau={tau} M={m}"), rep, t).passed();
    }
    for k in [1.0, 2.0, 3.0] {
        let t = Instant::now();
        let rep = record(&format!("bohr K={k}"), check_bohr_theorem(&koebe, ClassTag::Starlike, k, &cfg).unwrap(), t);
        others_pass &= rep.passed();
        bohr_reports.push(rep);
    }
    for (name, mode) in [("log-gamma mode 1", LogGammaMode::StarlikeConvexPsi), ("log-gamma mode 3", LogGammaMode::ConvexClass)] {
        let t = Instant::now();
        others_pass &= record(name, check_log_gamma_bounds(&koebe, mode, &cfg, 40).unwrap(), t).passed();
    }
    for (name, mode) in [("log-bohr hallen", LogMode::Hallen), ("log-bohr p2", LogMode::P2)] {
        let t = Instant::now();
        others_pass &= record(name, check_log_bohr(&koebe, mode, &cfg).unwrap(), t).passed();
    }

    let per_n: Vec<String> = [1, 2, 5]
        .iter()
        .map(|n| {
            let name = format!("majorant_tail_N{n}");
            format!("N={n}: {}", majorant.failures.iter().filter(|f| f.check == name).count())
        })
        .collect();
    let confined_to_higher_n = majorant
        .failures
        .iter()
        .all(|f| f.check == "majorant_tail_N2" || f.check == "majorant_tail_N5");
    let mut out = Outcome::new(
        others_pass && majorant.passed(),
        format!("{}; majorant failures by N: {}", lines.join("; "), per_n.join(", ")),
    );
    if !out.pass && others_pass && confined_to_higher_n {
        out.known_gap = Some("tail majorant inequality is false for N >= 2 (f = z, w = z^2 gives r^2 <= 0)".into());
    }
    out
}

fn sharpness_controls(bohr_reports: &[VerificationReport]) -> Outcome {
    let controls: Vec<_> = bohr_reports.iter().flat_map(|r| r.controls.iter()).collect();
    let pass = !controls.is_empty() && controls.len() == bohr_reports.len() && controls.iter().all(|c| c.violated);
    let margins: Vec<String> = controls.iter().map(|c| format!("r={:.4} excess {:.3e}", c.r, c.lhs - c.rhs)).collect();
    Outcome::new(pass, format!("expected violations at r* + 0.05: {}", margins.join(", ")))
}

fn catalog() -> Vec<PsiFamily> {
    vec![
        PsiFamily::Janowski { d: 1.0, e: -1.0 },
        PsiFamily::Janowski { d: 0.5, e: 0.0 },
        PsiFamily::OrderAlpha { alpha: 0.25 },
        PsiFamily::Power { eta: 0.5 },
        PsiFamily::Crescent,
        PsiFamily::RootAb { a: 2.0, b: 1.0 },
        PsiFamily::ExpAlpha { alpha: 0.0 },
        PsiFamily::SqrtAlpha { alpha: 0.0 },
        PsiFamily::Sigmoid,
    ]
}

fn oracle_cross_checks() -> Outcome {
    let order = 40;
    let mut q_dev = 0.0f64;
    for (d, e) in JANOWSKI_GRID {
        let q = hyp_q_janowski(d, e, order).unwrap();
        let explicit = janowski_explicit_dominant(d, e, order).unwrap();
        q_dev = q_dev.max(q.mul(&explicit).max_abs_diff(&TruncatedSeries::one(order)));
    }
    let mut bb_dev = 0.0f64;
    for family in catalog() {
        let p = psi(family);
        let dom = briot_bouquet_dominant(&p, 32).unwrap();
        let c1 = dom.series.coeff(1).re;
        let c2 = dom.series.coeff(2).re;
        bb_dev = bb_dev
            .max((c1 - p.b1 / 2.0).abs())
            .max((c2 - (p.b1 * p.b1 + 4.0 * p.b2) / 12.0).abs());
    }
    Outcome::new(q_dev <= ORACLE_TOL && bb_dev <= ORACLE_TOL, format!("max |q psi - 1| = {q_dev:.3e}, max Briot-Bouquet coefficient deviation = {bb_dev:.3e}"))
}

fn main() {
    let mut bohr_reports = Vec::new();
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    results.push((1, "root vs formula, starlike", starlike_roots()));
    results.push((2, "root vs formula, convex", convex_roots()));
    results.push((3, "order-alpha equation", order_alpha_roots()));
    results.push((4, "Janowski equation equivalence", janowski_equivalence()));
    results.push((5, "log-Bohr golden values", log_golden()));
    results.push((6, "equality at extremals", extremal_equalities()));
    results.push((7, "property suites", property_suites(&mut bohr_reports)));
    results.push((8, "sharpness controls", sharpness_controls(&bohr_reports)));
    results.push((9, "oracle cross-checks", oracle_cross_checks()));

    for (id, name, o) in &results {
        println!("{} criterion {id} ({name}): {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    for (id, _, o) in &results {
        if let (false, Some(gap)) = (o.pass, &o.known_gap) {
            println!("  criterion {id} failure is explained: {gap}");
        }
    }
    let unexplained: Vec<usize> = results
        .iter()
        .filter(|r| !r.2.pass && r.2.known_gap.is_none())
        .map(|r| r.0)
        .collect();
    if !unexplained.is_empty() {
        eprintln!("failed criteria: {unexplained:?}");
        std::process::exit(1);
    }
}
