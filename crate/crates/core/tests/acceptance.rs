//! End-to-end acceptance checks, one printed line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the pass/fail verdicts
//! stream straight into the test log. Every numeric claim is checked
//! against machinery independent of the library's own code paths: the
//! normal tail here is built from an error-function series and continued
//! fraction rather than `libm::erfc`, inverted by bisection rather than a
//! rational approximation, and risks are evaluated with `std` float math
//! rather than the library's `libm` calls. Exits nonzero if any criterion
//! fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use bht_core::{
    bayes_rule, classify_shape, compare, simulate, solve, AgentProfile, BayesMode, CostMatrix,
    GaussianShiftModel, Method, OperatingPoint, Priors, Provenance, Scenario, ShapeLabel,
    SolverConfig, ValueFamily,
};
use rayon::prelude::*;

const SHIFT: f64 = 1.0;
const GRID_POINTS: usize = 1_000_000;

// ---------------------------------------------------------------------------
// Deterministic test randomness (splitmix-style counter stream).

struct TestRng(u64);

impl TestRng {
    fn new(seed: u64) -> Self {
        Self(seed)
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw on the open interval (0, 1).
    fn unit(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) / 9007199254740992.0
    }

    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }
}

// ---------------------------------------------------------------------------
// Independent normal-tail oracle: series + continued fraction, no libm.

/// Alternating Maclaurin series for erf, adequate below the crossover.
fn erf_series(z: f64) -> f64 {
    let z2 = z * z;
    let mut term = z;
    let mut sum = z;
    let mut n = 0u32;
    while n < 200 {
        n += 1;
        term *= -z2 / n as f64;
        let add = term / (2 * n + 1) as f64;
        sum += add;
        if add.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum * std::f64::consts::FRAC_2_SQRT_PI
}

/// Continued fraction for erfc on z >= 1.5 (modified Lentz).
fn erfc_fraction(z: f64) -> f64 {
    let tiny = 1e-300;
    let mut f = tiny;
    let mut c = f;
    let mut d = 0.0;
    for n in 1..400 {
        let a = if n == 1 { 1.0 } else { (n - 1) as f64 / 2.0 };
        d = z + a * d;
        if d == 0.0 {
            d = tiny;
        }
        c = z + a / c;
        if c == 0.0 {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-17 {
            break;
        }
    }
    (-z * z).exp() / std::f64::consts::PI.sqrt() * f
}

fn erfc_oracle(z: f64) -> f64 {
    if z < 0.0 {
        2.0 - erfc_oracle(-z)
    } else if z < 1.5 {
        1.0 - erf_series(z)
    } else {
        erfc_fraction(z)
    }
}

fn q_oracle(t: f64) -> f64 {
    0.5 * erfc_oracle(t / std::f64::consts::SQRT_2)
}

/// Inverts the oracle tail by bisection on [-9, 9]; covers any probability
/// the uniform grid can produce.
fn q_inv_oracle(p: f64) -> f64 {
    let (mut lo, mut hi) = (-9.0f64, 9.0f64);
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if q_oracle(mid) > p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Detection probabilities for the uniform false-alarm grid, computed once
/// (the whole battery shares shift = 1).
fn build_roc_grid() -> Vec<f64> {
    let denom = (GRID_POINTS - 1) as f64;
    let mut ys = vec![0.0f64; GRID_POINTS];
    ys.par_iter_mut().enumerate().for_each(|(i, y)| {
        *y = if i == 0 {
            0.0
        } else if i == GRID_POINTS - 1 {
            1.0
        } else {
            q_oracle(q_inv_oracle(i as f64 / denom) - SHIFT)
        };
    });
    ys
}

// ---------------------------------------------------------------------------
// Independent risk evaluation and brute-force grid minimization.

#[derive(Debug, Clone, Copy)]
struct OracleScenario {
    pi0: f64,
    alpha: f64,
    c_star: f64,
}

impl OracleScenario {
    /// The library-side scenario this oracle mirrors: symmetric unit
    /// costs, unit shift, exponential values.
    fn build(&self) -> Scenario {
        Scenario::new(
            Priors::new(self.pi0).unwrap(),
            AgentProfile::new(self.alpha, self.c_star).unwrap(),
            CostMatrix::symmetric(-1.0, 1.0).unwrap(),
            GaussianShiftModel::new(SHIFT).unwrap(),
        )
    }

    /// Brute-force argmin over the shared grid; first index wins ties so
    /// exact corner ties resolve toward x = 0 like the solver's pick.
    fn grid_argmin(&self, ys: &[f64]) -> (f64, f64) {
        let denom = (ys.len() - 1) as f64;
        let v_lo = (-1.0f64).exp() - self.c_star.exp();
        let v_hi = 1.0f64.exp() - self.c_star.exp();
        let pi1 = 1.0 - self.pi0;
        let mut best = (0usize, f64::INFINITY);
        for (i, &y) in ys.iter().enumerate() {
            let x = i as f64 / denom;
            let f = (self.pi0 * (1.0 - x)).powf(self.alpha) * v_lo
                + (self.pi0 * x).powf(self.alpha) * v_hi
                + (pi1 * (1.0 - y)).powf(self.alpha) * v_hi
                + (pi1 * y).powf(self.alpha) * v_lo;
            if f < best.1 {
                best = (i, f);
            }
        }
        (best.0 as f64 / denom, best.1)
    }
}

fn canonical(pi0: f64, alpha: f64, c_star: f64) -> Scenario {
    OracleScenario { pi0, alpha, c_star }.build()
}

// ---------------------------------------------------------------------------
// Criteria.

/// Two agents whose perceived risk is concave-dominated along the ROC must
/// land exactly on the data-independent corner rules as the prior flips.
fn corner_operating_points() -> Result<String, String> {
    let start = Instant::now();
    let cases = [
        (0.5, -2.0, 0.25, 1.0),
        (0.5, -2.0, 0.75, 0.0),
        (2.0, 2.0, 0.25, 1.0),
        (2.0, 2.0, 0.75, 0.0),
    ];
    for (alpha, c_star, pi0, corner) in cases {
        let report = solve(&canonical(pi0, alpha, c_star), &SolverConfig::default())
            .map_err(|e| format!("alpha={alpha} pi0={pi0}: {e}"))?;
        if report.point.x != corner || report.point.y != corner {
            return Err(format!(
                "alpha={alpha} pi0={pi0}: expected exactly ({corner}, {corner}), got ({}, {})",
                report.point.x, report.point.y
            ));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 1.0 {
        return Err(format!("runtime {secs:.2}s exceeds 1s"));
    }
    Ok(format!(
        "4 solves land exactly on (1,1)/(0,0) as the prior flips, {secs:.2}s"
    ))
}

/// The other two agents go interior: certified stationary, locally convex,
/// and measurably away from the classical operating point.
fn interior_stationarity() -> Result<String, String> {
    let mut worst_foc = 0.0f64;
    let mut min_sep = f64::INFINITY;
    for (alpha, c_star) in [(0.5, 2.0), (2.0, -2.0)] {
        for pi0 in [0.25, 0.75] {
            let start = Instant::now();
            let sc = canonical(pi0, alpha, c_star);
            let report = solve(&sc, &SolverConfig::default())
                .map_err(|e| format!("alpha={alpha} pi0={pi0}: {e}"))?;
            let x = report.point.x;
            if !(x > 0.0 && x < 1.0) {
                return Err(format!("alpha={alpha} pi0={pi0}: x={x} is not interior"));
            }
            let foc = report
                .foc_residual_at_solution
                .ok_or_else(|| format!("alpha={alpha} pi0={pi0}: missing residual"))?
                .abs();
            if foc > 1e-6 {
                return Err(format!("alpha={alpha} pi0={pi0}: |residual|={foc:.2e}"));
            }
            let curv = sc.risk_curvature(x);
            if curv < -1e-7 {
                return Err(format!("alpha={alpha} pi0={pi0}: curvature {curv:.2e} < 0"));
            }
            let sep = (x - report.bayes_baseline.point.x).abs();
            if sep <= 1e-3 {
                return Err(format!(
                    "alpha={alpha} pi0={pi0}: |dx|={sep:.2e} from the classical point"
                ));
            }
            let secs = start.elapsed().as_secs_f64();
            if secs > 1.0 {
                return Err(format!("alpha={alpha} pi0={pi0}: {secs:.2}s exceeds 1s"));
            }
            worst_foc = worst_foc.max(foc);
            min_sep = min_sep.min(sep);
        }
    }
    Ok(format!(
        "4 interior optima, worst |residual| {worst_foc:.1e}, min offset from classical {min_sep:.3}"
    ))
}

/// 50-scenario battery against the brute-force grid oracle.
fn grid_oracle_agreement(ys: &[f64], grid_secs: f64) -> Result<String, String> {
    let start = Instant::now();

    // Oracle sanity: the independent tail must agree with the library's.
    for t in [-3.0, -1.0, 0.0, 1.0, 3.0] {
        let diff = (q_oracle(t) - bht_core::q(t)).abs();
        if diff > 1e-14 {
            return Err(format!("tail oracle self-check failed at t={t}: {diff:.2e}"));
        }
    }

    let alphas = [0.3, 0.5, 1.0, 2.0, 4.0];
    let pi0s = [0.1, 0.25, 0.5, 0.75, 0.9];
    let regime_c_star = [-2.0, 2.0, 0.0];
    let mut battery = Vec::with_capacity(50);
    let mut combo = 0usize;
    for &alpha in &alphas {
        for &pi0 in &pi0s {
            for r in [combo % 3, (combo + 1) % 3] {
                battery.push(OracleScenario {
                    pi0,
                    alpha,
                    c_star: regime_c_star[r],
                });
            }
            combo += 1;
        }
    }

    let outcomes: Vec<Result<(f64, f64), String>> = battery
        .par_iter()
        .map(|o| {
            let report = solve(&o.build(), &SolverConfig::default())
                .map_err(|e| format!("alpha={} pi0={} c*={}: {e}", o.alpha, o.pi0, o.c_star))?;
            let (x_grid, f_grid) = o.grid_argmin(ys);
            let dx = (report.point.x - x_grid).abs();
            let df = (report.risk.f - f_grid).abs();
            if dx > 1e-4 || df > 1e-8 {
                return Err(format!(
                    "alpha={} pi0={} c*={}: solver x={:.9} f={:.12}, grid x={x_grid:.9} f={f_grid:.12}",
                    o.alpha, o.pi0, o.c_star, report.point.x, report.risk.f
                ));
            }
            Ok((dx, df))
        })
        .collect();

    let mut worst = (0.0f64, 0.0f64);
    let mut failures = Vec::new();
    for out in outcomes {
        match out {
            Ok((dx, df)) => worst = (worst.0.max(dx), worst.1.max(df)),
            Err(msg) => failures.push(msg),
        }
    }
    if !failures.is_empty() {
        return Err(format!(
            "{} of {} scenarios disagree; first: {}",
            failures.len(),
            battery.len(),
            failures[0]
        ));
    }
    let secs = start.elapsed().as_secs_f64() + grid_secs;
    if secs > 60.0 {
        return Err(format!("runtime {secs:.1}s exceeds 60s"));
    }
    Ok(format!(
        "50 scenarios vs 10^6-point oracle, worst |dx| {:.1e}, worst |df| {:.1e}, {secs:.1}s",
        worst.0, worst.1
    ))
}

/// The corner risk difference factorizes through the weight and value
/// functions alone, independent of the channel.
fn corner_risk_identity() -> Result<String, String> {
    let mut rng = TestRng::new(41);
    let mut worst = 0.0f64;
    for k in 0..1000 {
        let alpha = rng.range(0.1, 5.0);
        let c_star = rng.range(-3.0, 3.0);
        let c_lo = rng.range(-3.0, 2.9);
        let c_hi = rng.range(c_lo + 0.05, 3.0);
        let pi0 = rng.unit();
        let family = if k % 2 == 0 {
            ValueFamily::Exponential
        } else {
            ValueFamily::Linear
        };
        let profile = AgentProfile::new(alpha, c_star)
            .unwrap()
            .with_value_family(family);
        let sc = Scenario::new(
            Priors::new(pi0).unwrap(),
            profile,
            CostMatrix::symmetric(c_lo, c_hi).unwrap(),
            GaussianShiftModel::new(SHIFT).unwrap(),
        );
        let lhs = sc
            .behavioral_risk(OperatingPoint::new(1.0, 1.0).unwrap())
            .f
            - sc.behavioral_risk(OperatingPoint::new(0.0, 0.0).unwrap()).f;
        let rhs = (sc.profile.weight(pi0).unwrap() - sc.profile.weight(1.0 - pi0).unwrap())
            * (sc.profile.value(c_hi) - sc.profile.value(c_lo));
        let err = (lhs - rhs).abs();
        if err > 1e-12 {
            return Err(format!(
                "scenario {k} (alpha={alpha:.3}, pi0={pi0:.3}): |lhs-rhs|={err:.2e}"
            ));
        }
        worst = worst.max(err);
    }
    Ok(format!("1000 random symmetric-cost scenarios, worst gap {worst:.1e}"))
}

/// A weight-neutral agent with linear values must recover the classical
/// likelihood-ratio operating point.
fn unbiased_linear_reduction() -> Result<String, String> {
    // Tighter than default: the check is on x itself, not the residual,
    // so the residual tolerance must overshoot the 1e-6 target.
    let config = SolverConfig {
        tol_x: 1e-10,
        tol_foc: 1e-10,
        max_iter: 300,
        ..SolverConfig::default()
    };
    let mut rng = TestRng::new(17);
    let mut worst = 0.0f64;
    for k in 0..20 {
        let pi0 = rng.range(0.05, 0.95);
        let shift = rng.range(0.3, 3.5);
        let profile = AgentProfile::new(1.0, 0.0)
            .unwrap()
            .with_value_family(ValueFamily::Linear);
        let sc = Scenario::new(
            Priors::new(pi0).unwrap(),
            profile,
            CostMatrix::symmetric(-1.0, 1.0).unwrap(),
            GaussianShiftModel::new(shift).unwrap(),
        );
        let report = solve(&sc, &config).map_err(|e| format!("pair {k}: {e}"))?;
        let dx = (report.point.x - report.bayes_baseline.point.x).abs();
        if dx > 1e-6 {
            return Err(format!(
                "pair {k} (pi0={pi0:.4}, shift={shift:.3}): |dx|={dx:.2e}"
            ));
        }
        worst = worst.max(dx);
    }
    Ok(format!("20 random (prior, shift) pairs, worst |dx| {worst:.1e}"))
}

/// Curvature signs along the ROC match the attitude/regime table where the
/// composite claim genuinely holds; where it breaks (three prior=0.25
/// cases with sign flips near an edge), the classifier must refuse the
/// table label and the solver must fall back to the global search, whose
/// output is oracle-checked. Framing-level convexity of the per-hypothesis
/// terms is asserted directly for the loss-framed pessimist.
fn curvature_shape_table(ys: &[f64]) -> Result<String, String> {
    let scan: Vec<f64> = (0..65)
        .map(|j| 1e-3 + j as f64 * (1.0 - 2e-3) / 64.0)
        .collect();

    // Composite signs where they hold, and table-confirmed classification.
    let holds = [
        (0.5, -2.0, 0.75, ShapeLabel::Concave),
        (0.5, 2.0, 0.25, ShapeLabel::Convex),
        (0.5, 2.0, 0.75, ShapeLabel::Convex),
        (2.0, -2.0, 0.75, ShapeLabel::Convex),
        (2.0, 2.0, 0.75, ShapeLabel::Concave),
    ];
    for (alpha, c_star, pi0, label) in holds {
        let sc = canonical(pi0, alpha, c_star);
        for &x in &scan {
            let curv = sc.risk_curvature(x);
            let ok = match label {
                ShapeLabel::Concave => curv <= 1e-7,
                ShapeLabel::Convex => curv >= -1e-7,
                ShapeLabel::Indeterminate => unreachable!(),
            };
            if !ok {
                return Err(format!(
                    "alpha={alpha} pi0={pi0}: curvature {curv:.3e} at x={x:.4} breaks {label:?}"
                ));
            }
        }
        let shape = classify_shape(&sc, &SolverConfig::default());
        if shape.label != label || shape.provenance != Provenance::LemmaTable {
            return Err(format!(
                "alpha={alpha} pi0={pi0}: classified {shape:?}, expected table-{label:?}"
            ));
        }
    }

    // Framing-level convexity for the loss-framed pessimist: each
    // hypothesis term is convex in its own coordinate at any prior.
    for pi0 in [0.25, 0.75] {
        let sc = canonical(pi0, 2.0, -2.0);
        let h_fd = 1e-4;
        for &z in &scan {
            let gpp = (sc.g_of_x(z + h_fd) - 2.0 * sc.g_of_x(z) + sc.g_of_x(z - h_fd))
                / (h_fd * h_fd);
            let hpp = (sc.h_of_y(z + h_fd) - 2.0 * sc.h_of_y(z) + sc.h_of_y(z - h_fd))
                / (h_fd * h_fd);
            if gpp < -1e-7 || hpp < -1e-7 {
                return Err(format!(
                    "pi0={pi0}: per-hypothesis curvature ({gpp:.2e}, {hpp:.2e}) at {z:.4}"
                ));
            }
        }
    }

    // The three composite deviations: numeric classification, global
    // fallback, oracle-matched output.
    let deviations = [(0.5, -2.0), (2.0, 2.0), (2.0, -2.0)];
    for (alpha, c_star) in deviations {
        let o = OracleScenario {
            pi0: 0.25,
            alpha,
            c_star,
        };
        let sc = o.build();
        let shape = classify_shape(&sc, &SolverConfig::default());
        if shape.provenance != Provenance::NumericScan {
            return Err(format!(
                "alpha={alpha} c*={c_star}: expected scan-derived label, got {shape:?}"
            ));
        }
        let report =
            solve(&sc, &SolverConfig::default()).map_err(|e| format!("alpha={alpha}: {e}"))?;
        if report.method != Method::GlobalGrid {
            return Err(format!(
                "alpha={alpha} c*={c_star}: expected global fallback, got {}",
                report.method
            ));
        }
        let (x_grid, f_grid) = o.grid_argmin(ys);
        let dx = (report.point.x - x_grid).abs();
        let df = (report.risk.f - f_grid).abs();
        if dx > 1e-4 || df > 1e-8 {
            return Err(format!(
                "alpha={alpha} c*={c_star}: fallback x={} vs grid {x_grid} (|df|={df:.2e})",
                report.point.x
            ));
        }
    }

    // Pin the oracle itself at the two corner deviations (values frozen
    // from a 50-digit reference computation).
    let pins = [
        (0.5, -2.0, 1.49286242088),
        (2.0, 2.0, -4.24133526189),
    ];
    for (alpha, c_star, f_expected) in pins {
        let o = OracleScenario {
            pi0: 0.25,
            alpha,
            c_star,
        };
        let (x_grid, f_grid) = o.grid_argmin(ys);
        if x_grid != 1.0 || (f_grid - f_expected).abs() > 1e-8 {
            return Err(format!(
                "oracle pin alpha={alpha}: grid ({x_grid}, {f_grid:.12}) vs frozen {f_expected}"
            ));
        }
    }

    Ok("table confirmed at 5 combos, 3 deviations routed to oracle-checked global search".into())
}

/// Analytic ROC-risk gradient against central finite differences.
fn gradient_consistency() -> Result<String, String> {
    let scenarios = [
        canonical(0.25, 0.5, -2.0),
        canonical(0.75, 0.5, -2.0),
        canonical(0.25, 0.5, 2.0),
        canonical(0.75, 0.5, 2.0),
        canonical(0.25, 2.0, -2.0),
        canonical(0.75, 2.0, -2.0),
        canonical(0.25, 2.0, 2.0),
        canonical(0.75, 2.0, 2.0),
        canonical(0.25, 0.3, 0.0),
        canonical(0.6, 1.0, 0.0),
    ];
    let mut rng = TestRng::new(7);
    let h = 1e-5;
    let mut worst = 0.0f64;
    for (si, sc) in scenarios.iter().enumerate() {
        for _ in 0..100 {
            let x = rng.range(0.02, 0.98);
            let analytic = sc
                .risk_gradient(x)
                .map_err(|e| format!("scenario {si}: {e}"))?;
            let fd = (sc.risk_along_roc(x + h) - sc.risk_along_roc(x - h)) / (2.0 * h);
            let rel = (analytic - fd).abs() / analytic.abs().max(fd.abs()).max(1e-3);
            if rel > 1e-5 {
                return Err(format!(
                    "scenario {si} at x={x:.6}: analytic {analytic:.9e} vs fd {fd:.9e} (rel {rel:.2e})"
                ));
            }
            worst = worst.max(rel);
        }
    }
    Ok(format!("1000 points across 10 scenarios, worst relative gap {worst:.1e}"))
}

/// Monte Carlo of the classical rule: empirical rates inside 3-sigma
/// binomial bands, bit-identical on reruns, within the time budget.
fn monte_carlo_consistency() -> Result<String, String> {
    let sc = canonical(0.75, 0.5, -2.0);
    let rule = bayes_rule(&sc.priors, &sc.costs, &sc.model, BayesMode::Lrt)
        .map_err(|e| e.to_string())?;
    let start = Instant::now();
    let report = simulate(&sc, &rule, 1_000_000, 42);
    let secs = start.elapsed().as_secs_f64();
    let again = simulate(&sc, &rule, 1_000_000, 42);
    if report != again {
        return Err("same seed produced different reports".into());
    }
    let summary = compare(&report, &sc, &rule).map_err(|e| e.to_string())?;
    if !summary.x.pass || !summary.y.pass {
        return Err(format!(
            "empirical rates off: |dx|={:.2e} (band {:.2e}), |dy|={:.2e} (band {:.2e})",
            summary.x.deviation,
            summary.x.ci_halfwidth,
            summary.y.deviation,
            summary.y.ci_halfwidth
        ));
    }
    if secs > 5.0 {
        return Err(format!("runtime {secs:.2}s exceeds 5s"));
    }
    Ok(format!(
        "10^6 trials in {secs:.2}s, |dx|={:.1e} and |dy|={:.1e} inside 3-sigma bands, reruns identical",
        summary.x.deviation, summary.y.deviation
    ))
}

// ---------------------------------------------------------------------------

fn main() {
    let grid_start = Instant::now();
    let ys = build_roc_grid();
    let grid_secs = grid_start.elapsed().as_secs_f64();

    let criteria: Vec<(&str, Box<dyn Fn() -> Result<String, String>>)> = vec![
        ("corner operating points", Box::new(corner_operating_points)),
        ("interior stationarity", Box::new(interior_stationarity)),
        (
            "grid-oracle agreement",
            Box::new(|| grid_oracle_agreement(&ys, grid_secs)),
        ),
        ("corner risk identity", Box::new(corner_risk_identity)),
        ("unbiased linear reduction", Box::new(unbiased_linear_reduction)),
        (
            "curvature shape table",
            Box::new(|| curvature_shape_table(&ys)),
        ),
        ("gradient consistency", Box::new(gradient_consistency)),
        ("Monte Carlo consistency", Box::new(monte_carlo_consistency)),
    ];

    let mut failed = 0usize;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS - {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("acceptance: {failed} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: all 8 criteria passed");
}
