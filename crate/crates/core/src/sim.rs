//! Seeded Monte Carlo validation of analytic operating points and risks.
//!
//! Each trial draws the hypothesis, draws the observation from the matching
//! Gaussian, applies the decision rule, and tallies the joint (decision,
//! truth) counts. Randomness comes from a counter-based generator keyed by
//! `(seed, trial, slot)`, so every trial owns an independent substream and
//! the report is bit-identical whether trials run serially or across any
//! number of threads.

use crate::detection::{q_inv, rule_to_point, DecisionRule};
use crate::error::{Error, Result};
use crate::risk::{Fnv, Scenario};
use rayon::prelude::*;

/// Outcome of a seeded simulation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationReport {
    pub trials: u64,
    /// Empirical false-alarm probability, `count(u=1, th=0) / count(th=0)`.
    pub x_hat: f64,
    /// Empirical detection probability, `count(u=1, th=1) / count(th=1)`.
    pub y_hat: f64,
    /// `joint_counts[u][th]`.
    pub joint_counts: [[u64; 2]; 2],
    pub empirical_bayes_risk: f64,
    /// Weight and value applied to the empirical joint frequencies; a
    /// plug-in estimator, consistent but slightly biased since the weight
    /// function is nonlinear.
    pub empirical_behavioral_risk: f64,
    /// 3-sigma binomial half-widths around the analytic x and y.
    pub ci_halfwidth_x: f64,
    pub ci_halfwidth_y: f64,
    pub seed: u64,
    /// Hash of the scenario and rule that produced this report.
    pub scenario_digest: u64,
}

/// One measured quantity against its analytic value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deviation {
    pub deviation: f64,
    pub ci_halfwidth: f64,
    pub pass: bool,
}

/// Empirical-vs-analytic comparison for a simulation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviationSummary {
    pub x: Deviation,
    pub y: Deviation,
    pub bayes_risk: Deviation,
    pub behavioral_risk: Deviation,
}

impl DeviationSummary {
    pub fn all_pass(&self) -> bool {
        self.x.pass && self.y.pass && self.bayes_risk.pass && self.behavioral_risk.pass
    }
}

/// SplitMix-style finalizer: full-avalanche bijection on 64 bits.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Counter-based stream: an independent 64-bit word per (seed, trial,
/// slot) triple, no sequential state anywhere.
fn stream_word(seed: u64, trial: u64, slot: u64) -> u64 {
    let a = mix64(seed ^ 0x9e3779b97f4a7c15);
    let b = mix64(a ^ trial.wrapping_mul(0xd1b54a32d192ed03));
    mix64(b ^ slot.wrapping_mul(0x8cb92ba72f3d8dd7))
}

/// Maps a word to the open interval (0, 1) on the 2^-53 lattice.
fn to_unit(word: u64) -> f64 {
    ((word >> 11) as f64 + 0.5) / 9007199254740992.0
}

/// Substream slots: one draw each per trial.
const SLOT_HYPOTHESIS: u64 = 0;
const SLOT_OBSERVATION: u64 = 1;
const SLOT_COIN: u64 = 2;

fn rule_digest(scenario: &Scenario, rule: &DecisionRule) -> u64 {
    let mut acc = Fnv::new();
    acc.push_u64(scenario.digest());
    match *rule {
        DecisionRule::AlwaysH0 => acc.push_u8(0),
        DecisionRule::AlwaysH1 => acc.push_u8(1),
        DecisionRule::Threshold { tau } => {
            acc.push_u8(2);
            acc.push_f64(tau);
        }
        DecisionRule::RandomizedThreshold { tau, gamma } => {
            acc.push_u8(3);
            acc.push_f64(tau);
            acc.push_f64(gamma);
        }
    }
    acc.finish()
}

/// Runs `trials` independent draws of the hypothesis/observation/decision
/// pipeline under `rule`. Deterministic in `(scenario, rule, trials,
/// seed)` regardless of the parallel schedule.
pub fn simulate(
    scenario: &Scenario,
    rule: &DecisionRule,
    trials: u64,
    seed: u64,
) -> SimulationReport {
    assert!(trials >= 1, "need at least one trial");
    let pi0 = scenario.priors.pi0();
    let shift = scenario.model.shift;
    let rule = *rule;

    let counts = (0..trials)
        .into_par_iter()
        .fold(
            || [[0u64; 2]; 2],
            |mut acc, trial| {
                let theta =
                    usize::from(to_unit(stream_word(seed, trial, SLOT_HYPOTHESIS)) >= pi0);
                let z = q_inv(to_unit(stream_word(seed, trial, SLOT_OBSERVATION)));
                let r = z + shift * theta as f64;
                let u = match rule {
                    DecisionRule::AlwaysH0 => 0,
                    DecisionRule::AlwaysH1 => 1,
                    DecisionRule::Threshold { tau } => usize::from(r >= tau),
                    DecisionRule::RandomizedThreshold { tau, gamma } => {
                        if r > tau {
                            1
                        } else if r < tau {
                            0
                        } else {
                            usize::from(to_unit(stream_word(seed, trial, SLOT_COIN)) < gamma)
                        }
                    }
                };
                acc[u][theta] += 1;
                acc
            },
        )
        .reduce(
            || [[0u64; 2]; 2],
            |a, b| {
                [
                    [a[0][0] + b[0][0], a[0][1] + b[0][1]],
                    [a[1][0] + b[1][0], a[1][1] + b[1][1]],
                ]
            },
        );

    let n0 = counts[0][0] + counts[1][0];
    let n1 = counts[0][1] + counts[1][1];
    let x_hat = if n0 > 0 {
        counts[1][0] as f64 / n0 as f64
    } else {
        f64::NAN
    };
    let y_hat = if n1 > 0 {
        counts[1][1] as f64 / n1 as f64
    } else {
        f64::NAN
    };

    let total = trials as f64;
    let costs = [
        [scenario.costs.c00, scenario.costs.c01],
        [scenario.costs.c10, scenario.costs.c11],
    ];
    let mut empirical_bayes = 0.0;
    let mut empirical_behavioral = 0.0;
    for u in 0..2 {
        for th in 0..2 {
            let freq = counts[u][th] as f64 / total;
            empirical_bayes += freq * costs[u][th];
            empirical_behavioral += scenario
                .profile
                .weight(freq)
                .expect("frequency lies in [0,1]")
                * scenario.profile.value(costs[u][th]);
        }
    }

    // Half-widths from the analytic probabilities: under the hypothesis
    // that simulation and analysis agree, x_hat is binomial around the
    // analytic x with a random (but concentrated) denominator.
    let analytic = rule_to_point(&rule, &scenario.model);
    let ci = |p: f64, n: u64| {
        if n == 0 {
            f64::NAN
        } else {
            3.0 * (p * (1.0 - p) / n as f64).sqrt()
        }
    };

    SimulationReport {
        trials,
        x_hat,
        y_hat,
        joint_counts: counts,
        empirical_bayes_risk: empirical_bayes,
        empirical_behavioral_risk: empirical_behavioral,
        ci_halfwidth_x: ci(analytic.x, n0),
        ci_halfwidth_y: ci(analytic.y, n1),
        seed,
        scenario_digest: rule_digest(scenario, &rule),
    }
}

/// Checks a report against the analytic operating point and risks of the
/// same scenario and rule. Refuses reports generated elsewhere.
pub fn compare(
    report: &SimulationReport,
    scenario: &Scenario,
    rule: &DecisionRule,
) -> Result<DeviationSummary> {
    let expected = rule_digest(scenario, rule);
    if report.scenario_digest != expected {
        return Err(Error::ReportMismatch {
            report: report.scenario_digest,
            expected,
        });
    }

    let analytic_point = rule_to_point(rule, &scenario.model);
    let analytic = scenario.behavioral_risk(analytic_point);
    let pi0 = scenario.priors.pi0();
    let pi1 = scenario.priors.pi1();
    let total = report.trials as f64;

    // Joint probabilities of (u, th) under the analytic operating point.
    let joint = [
        [pi0 * (1.0 - analytic_point.x), pi1 * (1.0 - analytic_point.y)],
        [pi0 * analytic_point.x, pi1 * analytic_point.y],
    ];
    let costs = [
        [scenario.costs.c00, scenario.costs.c01],
        [scenario.costs.c10, scenario.costs.c11],
    ];

    // Delta-method 3-sigma half-widths for the two risk estimators: the
    // per-cell sensitivities are c_ij for the classical risk and
    // w'(p_ij) v(c_ij) for the behavioral one. Cells with probability
    // zero never vary, so they are skipped (their weight derivative may
    // diverge even though they contribute nothing).
    let mut var_bayes = 0.0;
    let mut mean_bayes = 0.0;
    let mut var_beh = 0.0;
    let mut mean_beh = 0.0;
    for u in 0..2 {
        for th in 0..2 {
            let p = joint[u][th];
            if p == 0.0 {
                continue;
            }
            let sens_bayes = costs[u][th];
            let sens_beh = scenario
                .profile
                .weight_deriv(p)
                .expect("joint probability lies in [0,1]")
                * scenario.profile.value(costs[u][th]);
            var_bayes += p * sens_bayes * sens_bayes;
            mean_bayes += p * sens_bayes;
            var_beh += p * sens_beh * sens_beh;
            mean_beh += p * sens_beh;
        }
    }
    var_bayes -= mean_bayes * mean_bayes;
    var_beh -= mean_beh * mean_beh;
    let ci_bayes = 3.0 * (var_bayes.max(0.0) / total).sqrt();
    let ci_beh = 3.0 * (var_beh.max(0.0) / total).sqrt();

    let check = |deviation: f64, ci: f64| Deviation {
        deviation,
        ci_halfwidth: ci,
        pass: deviation <= ci,
    };

    Ok(DeviationSummary {
        x: check((report.x_hat - analytic_point.x).abs(), report.ci_halfwidth_x),
        y: check((report.y_hat - analytic_point.y).abs(), report.ci_halfwidth_y),
        bayes_risk: check(
            (report.empirical_bayes_risk - analytic.bayes).abs(),
            ci_bayes,
        ),
        behavioral_risk: check(
            (report.empirical_behavioral_risk - analytic.f).abs(),
            ci_beh,
        ),
    })
}
