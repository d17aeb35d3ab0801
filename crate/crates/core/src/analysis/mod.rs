//! Network statistics built on triangle counts, the continuous power-law
//! degree model, threshold formulas, and the empirical threshold sweep.

mod powerlaw;
mod stats;
mod tune;

pub use powerlaw::{k_formula, KRule, PowerLawModel};
pub use stats::{
    clustering_coefficients, degree_distribution, fit_alpha, transitivity, ClusteringReport,
    DegreeHistogram,
};
pub use tune::{default_k_ladder, tune_k, KSweepResult, KSweepRow};
