//! CSV assembly: fixed column order, 12 significant digits, LF endings.
//!
//! Numbers print in plain decimal whenever 12 significant digits fit
//! comfortably (decimal exponent in [-4, 14]) and in scientific notation
//! otherwise, so values round-trip through `f64` parsing for regression
//! comparisons.

use bht_core::{rule_to_point, DecisionRule, DeviationSummary, Scenario, SimulationReport,
    SolveReport};

use crate::config::ScenarioFile;

pub const SOLVE_HEADER: &str = "pi0,shift,alpha,c_star,c00,c01,c10,c11,value_family,bayes_mode,\
attitude,regime,shape,method,x_star,y_star,f_star,g_star,h_star,foc_residual,bayes_x,bayes_y,\
bayes_risk_at_star,bayes_risk_at_bayes,grid_gap";

pub const SIMULATE_HEADER: &str = "trials,seed,rule,x_hat,y_hat,n00,n01,n10,n11,\
empirical_bayes_risk,empirical_behavioral_risk,analytic_x,analytic_y,analytic_bayes_risk,\
analytic_behavioral_risk,dev_x,ci_x,pass_x,dev_y,ci_y,pass_y,dev_bayes,ci_bayes,pass_bayes,\
dev_behavioral,ci_behavioral,pass_behavioral";

pub const ROC_HEADER: &str = "x,y,f,g,h,bayes_risk";

pub fn fmt_f64(v: f64) -> String {
    if v == 0.0 {
        // Covers -0.0 as well; keeps zero aligned with the unit-scale shape.
        return "0.00000000000".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{v:e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-4..=14).contains(&exp) {
        let prec = (11 - exp).max(0) as usize;
        format!("{v:.prec$}")
    } else {
        format!("{v:.11e}")
    }
}

pub fn rule_str(rule: &DecisionRule) -> String {
    match rule {
        DecisionRule::AlwaysH0 => "always0".into(),
        DecisionRule::AlwaysH1 => "always1".into(),
        DecisionRule::Threshold { tau } => format!("threshold={}", fmt_f64(*tau)),
        DecisionRule::RandomizedThreshold { tau, gamma } => {
            format!("randomized-threshold={};gamma={}", fmt_f64(*tau), fmt_f64(*gamma))
        }
    }
}

pub fn solve_row(file: &ScenarioFile, scenario: &Scenario, report: &SolveReport) -> String {
    let attitude = match scenario.profile.attitude() {
        bht_core::AttitudeClass::Optimist => "optimist",
        bht_core::AttitudeClass::Unbiased => "unbiased",
        bht_core::AttitudeClass::Pessimist => "pessimist",
    };
    let regime = match scenario.profile.cost_regime(&scenario.costs) {
        bht_core::CostRegime::Type1 => "type1",
        bht_core::CostRegime::Type2 => "type2",
        bht_core::CostRegime::Mixed => "mixed",
    };
    let foc = report
        .foc_residual_at_solution
        .map(fmt_f64)
        .unwrap_or_default();
    [
        fmt_f64(file.pi0),
        fmt_f64(file.shift),
        fmt_f64(file.alpha),
        fmt_f64(file.c_star),
        fmt_f64(file.costs.c00),
        fmt_f64(file.costs.c01),
        fmt_f64(file.costs.c10),
        fmt_f64(file.costs.c11),
        file.value_family.as_str().into(),
        file.bayes_mode.as_str().into(),
        attitude.into(),
        regime.into(),
        report.shape.label.to_string(),
        report.method.to_string(),
        fmt_f64(report.point.x),
        fmt_f64(report.point.y),
        fmt_f64(report.risk.f),
        fmt_f64(report.risk.g),
        fmt_f64(report.risk.h),
        foc,
        fmt_f64(report.bayes_baseline.point.x),
        fmt_f64(report.bayes_baseline.point.y),
        fmt_f64(report.risk.bayes),
        fmt_f64(report.bayes_baseline.risk.bayes),
        fmt_f64(report.grid_gap),
    ]
    .join(",")
}

pub fn simulate_row(
    scenario: &Scenario,
    rule: &DecisionRule,
    report: &SimulationReport,
    summary: &DeviationSummary,
) -> String {
    let point = rule_to_point(rule, &scenario.model);
    let analytic = scenario.behavioral_risk(point);
    let flag = |b: bool| if b { "true" } else { "false" };
    [
        report.trials.to_string(),
        report.seed.to_string(),
        rule_str(rule),
        fmt_f64(report.x_hat),
        fmt_f64(report.y_hat),
        report.joint_counts[0][0].to_string(),
        report.joint_counts[0][1].to_string(),
        report.joint_counts[1][0].to_string(),
        report.joint_counts[1][1].to_string(),
        fmt_f64(report.empirical_bayes_risk),
        fmt_f64(report.empirical_behavioral_risk),
        fmt_f64(point.x),
        fmt_f64(point.y),
        fmt_f64(analytic.bayes),
        fmt_f64(analytic.f),
        fmt_f64(summary.x.deviation),
        fmt_f64(summary.x.ci_halfwidth),
        flag(summary.x.pass).into(),
        fmt_f64(summary.y.deviation),
        fmt_f64(summary.y.ci_halfwidth),
        flag(summary.y.pass).into(),
        fmt_f64(summary.bayes_risk.deviation),
        fmt_f64(summary.bayes_risk.ci_halfwidth),
        flag(summary.bayes_risk.pass).into(),
        fmt_f64(summary.behavioral_risk.deviation),
        fmt_f64(summary.behavioral_risk.ci_halfwidth),
        flag(summary.behavioral_risk.pass).into(),
    ]
    .join(",")
}

#[cfg(test)]
mod tests {
    use super::fmt_f64;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_f64(1.0), "1.00000000000");
        assert_eq!(fmt_f64(0.25), "0.250000000000");
        assert_eq!(fmt_f64(-2.0), "-2.00000000000");
        assert_eq!(fmt_f64(0.0), "0.00000000000");
        assert_eq!(fmt_f64(-0.0), "0.00000000000");
        assert_eq!(fmt_f64(1e-4), "0.000100000000000");
        assert_eq!(fmt_f64(123456.789), "123456.789000");
    }

    #[test]
    fn extreme_magnitudes_switch_to_scientific() {
        assert_eq!(fmt_f64(1e-17), "1.00000000000e-17");
        assert_eq!(fmt_f64(-6.625e-34), "-6.62500000000e-34");
        assert_eq!(fmt_f64(2.5e16), "2.50000000000e16");
    }

    #[test]
    fn values_round_trip() {
        for v in [0.30900835206236739, -11.519475644319102, 1.0 / 3.0, 1e-9] {
            let parsed: f64 = fmt_f64(v).parse().unwrap();
            assert!((parsed - v).abs() <= v.abs() * 1e-11);
        }
    }
}
