//! Scenario configuration files.
//!
//! A flat JSON document with nested blocks for costs, solver tuning, and
//! simulation settings. Unknown keys are rejected by name so a typo never
//! silently falls back to a default.

use std::path::Path;

use bht_core::{
    AgentProfile, BayesMode, CostMatrix, GaussianShiftModel, Priors, Scenario, SolverConfig,
    ValueFamily,
};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    #[default]
    Exponential,
    Linear,
}

impl FamilyTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::Exponential => "exponential",
            FamilyTag::Linear => "linear",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
pub enum ModeTag {
    #[default]
    #[serde(rename = "lrt")]
    Lrt,
    #[serde(rename = "prior-ratio")]
    PriorRatio,
}

impl ModeTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ModeTag::Lrt => "lrt",
            ModeTag::PriorRatio => "prior-ratio",
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostsBlock {
    pub c00: f64,
    pub c01: f64,
    pub c10: f64,
    pub c11: f64,
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverBlock {
    pub grid_points: Option<usize>,
    pub tol_x: Option<f64>,
    pub tol_foc: Option<f64>,
    pub max_iter: Option<usize>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimBlock {
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub pi0: f64,
    pub shift: f64,
    pub alpha: f64,
    pub c_star: f64,
    pub costs: CostsBlock,
    #[serde(default)]
    pub value_family: FamilyTag,
    #[serde(default)]
    pub bayes_mode: ModeTag,
    #[serde(default)]
    pub solver: SolverBlock,
    pub sim: Option<SimBlock>,
}

/// A parsed config together with the validated scenario it describes.
pub struct Loaded {
    pub file: ScenarioFile,
    pub scenario: Scenario,
    pub solver: SolverConfig,
}

/// Builds the validated scenario a config (or a swept variant of one)
/// describes; errors carry the offending field's name.
pub fn build_scenario(file: &ScenarioFile) -> Result<Scenario, CliError> {
    let priors = Priors::new(file.pi0).map_err(CliError::config_from)?;
    let family = match file.value_family {
        FamilyTag::Exponential => ValueFamily::Exponential,
        FamilyTag::Linear => ValueFamily::Linear,
    };
    let profile = AgentProfile::new(file.alpha, file.c_star)
        .map_err(CliError::config_from)?
        .with_value_family(family);
    let costs = CostMatrix::new(file.costs.c00, file.costs.c01, file.costs.c10, file.costs.c11)
        .map_err(CliError::config_from)?;
    let model = GaussianShiftModel::new(file.shift).map_err(CliError::config_from)?;
    let mode = match file.bayes_mode {
        ModeTag::Lrt => BayesMode::Lrt,
        ModeTag::PriorRatio => BayesMode::PriorRatio,
    };
    Ok(Scenario::new(priors, profile, costs, model).with_bayes_mode(mode))
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let file: ScenarioFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    let scenario = build_scenario(&file)?;

    let defaults = SolverConfig::default();
    let solver = SolverConfig {
        grid_points: file.solver.grid_points.unwrap_or(defaults.grid_points),
        tol_x: file.solver.tol_x.unwrap_or(defaults.tol_x),
        tol_foc: file.solver.tol_foc.unwrap_or(defaults.tol_foc),
        max_iter: file.solver.max_iter.unwrap_or(defaults.max_iter),
    };
    solver.validate().map_err(CliError::config_from)?;

    if let Some(sim) = &file.sim {
        if sim.trials == 0 {
            return Err(CliError::Config(
                "invalid sim.trials: must be at least 1".into(),
            ));
        }
    }

    Ok(Loaded {
        file,
        scenario,
        solver,
    })
}
