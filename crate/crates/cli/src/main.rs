//! `bht`: decision rules for behavioral agents from the command line.
//!
//! Four subcommands, all driven by a JSON scenario config: `solve` one
//! scenario, `sweep` a parameter range, `simulate` a rule by Monte Carlo,
//! and `roc` to tabulate plot-ready risk curves. Results go to standard
//! output as CSV; diagnostics go to standard error. Exit codes: 0 on
//! success, 2 for configuration or usage problems, 3 for numeric
//! failures. Set `BHT_THREADS` to cap worker parallelism (default: all
//! cores).

mod config;
mod output;

use std::path::{Path, PathBuf};

use bht_core::{
    bayes_rule, compare, roc, simulate, solve, sweep, DecisionRule, Error as CoreError,
    OperatingPoint, SweepParam,
};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bht",
    version,
    about = "Optimal decision rules for behavioral agents in binary hypothesis testing"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one scenario; print the report as a CSV row.
    Solve {
        /// Path to a JSON scenario config.
        config: PathBuf,
    },
    /// Solve across a parameter range; one CSV row per step.
    Sweep {
        config: PathBuf,
        /// Axis to walk: alpha, pi0, c_star, or shift.
        #[arg(long)]
        param: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        /// Number of evenly spaced values, endpoints included (>= 2).
        #[arg(long)]
        steps: usize,
    },
    /// Monte Carlo run of a decision rule with analytic cross-checks.
    Simulate {
        config: PathBuf,
        /// solved | bayes | always0 | always1 | threshold=<tau>
        #[arg(long, default_value = "solved")]
        rule: String,
    },
    /// Tabulate the ROC and the risks along it; plot-ready CSV.
    Roc {
        config: PathBuf,
        /// Uniformly spaced false-alarm values, endpoints included (>= 2).
        #[arg(long, default_value_t = 4097)]
        points: usize,
    },
}

/// CLI failures, partitioned by exit code.
pub enum CliError {
    /// Bad config or usage; exits 2.
    Config(String),
    /// Numeric failure in an otherwise valid run; exits 3.
    Runtime(String),
}

impl CliError {
    fn config_from(e: CoreError) -> Self {
        CliError::Config(e.to_string())
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Runtime(m) => m,
        }
    }
}

/// Scenario-validation failures are config errors even when they surface
/// mid-computation (a sweep stepping out of a parameter's domain); genuine
/// numeric breakdowns are runtime errors.
fn classify_core(e: CoreError) -> CliError {
    fn is_config(e: &CoreError) -> bool {
        match e {
            CoreError::Domain { .. }
            | CoreError::InvalidScenario { .. }
            | CoreError::DegenerateCosts { .. } => true,
            CoreError::SweepStep { source, .. } => is_config(source),
            _ => false,
        }
    }
    if is_config(&e) {
        CliError::Config(e.to_string())
    } else {
        CliError::Runtime(e.to_string())
    }
}

fn init_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("BHT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| format!("invalid BHT_THREADS '{raw}': expected a positive integer"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn cmd_solve(path: &Path) -> Result<String, CliError> {
    let loaded = config::load(path)?;
    let report = solve(&loaded.scenario, &loaded.solver).map_err(classify_core)?;
    Ok(format!(
        "{}\n{}\n",
        output::SOLVE_HEADER,
        output::solve_row(&loaded.file, &loaded.scenario, &report)
    ))
}

fn cmd_sweep(
    path: &Path,
    param: &str,
    from: f64,
    to: f64,
    steps: usize,
) -> Result<String, CliError> {
    let loaded = config::load(path)?;
    let param: SweepParam = param.parse().map_err(CliError::Config)?;
    let reports = sweep(&loaded.scenario, param, from, to, steps, &loaded.solver)
        .map_err(classify_core)?;

    let mut out = format!("param_value,{}\n", output::SOLVE_HEADER);
    for (i, report) in reports.iter().enumerate() {
        let value = from + (to - from) * i as f64 / (steps - 1) as f64;
        let mut file = loaded.file.clone();
        match param {
            SweepParam::Alpha => file.alpha = value,
            SweepParam::Pi0 => file.pi0 = value,
            SweepParam::CStar => file.c_star = value,
            SweepParam::Shift => file.shift = value,
        }
        // Rebuilt so the attitude/regime columns track the swept value.
        let scenario = config::build_scenario(&file)?;
        out.push_str(&output::fmt_f64(value));
        out.push(',');
        out.push_str(&output::solve_row(&file, &scenario, report));
        out.push('\n');
    }
    Ok(out)
}

fn resolve_rule(arg: &str, loaded: &config::Loaded) -> Result<DecisionRule, CliError> {
    match arg {
        "solved" => Ok(solve(&loaded.scenario, &loaded.solver)
            .map_err(classify_core)?
            .rule),
        "bayes" => bayes_rule(
            &loaded.scenario.priors,
            &loaded.scenario.costs,
            &loaded.scenario.model,
            loaded.scenario.bayes_mode,
        )
        .map_err(classify_core),
        "always0" => Ok(DecisionRule::AlwaysH0),
        "always1" => Ok(DecisionRule::AlwaysH1),
        other => {
            let Some(tau_text) = other.strip_prefix("threshold=") else {
                return Err(CliError::Config(format!(
                    "unknown rule '{other}' (expected solved, bayes, always0, always1, or threshold=<tau>)"
                )));
            };
            let tau: f64 = tau_text.parse().map_err(|_| {
                CliError::Config(format!("invalid threshold '{tau_text}': expected a real number"))
            })?;
            if !tau.is_finite() {
                return Err(CliError::Config(format!(
                    "invalid threshold '{tau_text}': must be finite"
                )));
            }
            Ok(DecisionRule::Threshold { tau })
        }
    }
}

fn cmd_simulate(path: &Path, rule_arg: &str) -> Result<String, CliError> {
    let loaded = config::load(path)?;
    let sim = loaded.file.sim.ok_or_else(|| {
        CliError::Config("missing sim block: simulate needs \"sim\": {\"trials\", \"seed\"} in the config".into())
    })?;
    let rule = resolve_rule(rule_arg, &loaded)?;
    let report = simulate(&loaded.scenario, &rule, sim.trials, sim.seed);
    let summary = compare(&report, &loaded.scenario, &rule).map_err(classify_core)?;
    Ok(format!(
        "{}\n{}\n",
        output::SIMULATE_HEADER,
        output::simulate_row(&loaded.scenario, &rule, &report, &summary)
    ))
}

fn cmd_roc(path: &Path, points: usize) -> Result<String, CliError> {
    let loaded = config::load(path)?;
    if points < 2 {
        return Err(CliError::Config(format!(
            "invalid points: need at least 2, got {points}"
        )));
    }
    let sc = &loaded.scenario;
    let mut out = String::with_capacity(points * 96 + 64);
    out.push_str(output::ROC_HEADER);
    out.push('\n');
    for i in 0..points {
        let x = i as f64 / (points - 1) as f64;
        let y = roc(x, &sc.model);
        let g = sc.g_of_x(x);
        let h = sc.h_of_y(y);
        let bayes = sc.bayes_risk(OperatingPoint::new(x, y).map_err(classify_core)?);
        for (k, v) in [x, y, g + h, g, h, bayes].into_iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&output::fmt_f64(v));
        }
        out.push('\n');
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Solve { config } => cmd_solve(&config),
        Command::Sweep {
            config,
            param,
            from,
            to,
            steps,
        } => cmd_sweep(&config, &param, from, to, steps),
        Command::Simulate { config, rule } => cmd_simulate(&config, &rule),
        Command::Roc { config, points } => cmd_roc(&config, points),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(msg) = init_threads() {
        eprintln!("error: {msg}");
        std::process::exit(2);
    }
    match run(cli) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}
