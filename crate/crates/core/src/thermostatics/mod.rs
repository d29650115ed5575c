//! Three-parameter entropy thermostatics of the classical ideal gas.
//!
//! [`deformed`] holds the q-logarithm family and the entropy of a discrete
//! distribution; [`ensemble`] applies the entropy to the phase-space volume
//! of each adiabatic ensemble and solves for the heat function in terms of
//! the logarithmic Lambert function.

pub mod deformed;
pub mod ensemble;

pub use deformed::{
    entropy_of_distribution, q_exp, q_log, three_param_log, three_param_log_of_ln,
    DeformationParams,
};
pub use ensemble::{
    derived_constants, entropy_of_system, heat_function, phase_volume_log, select_branch,
    specific_heat, DerivedConstants, EnsembleSpec, GasConstants, HeatModel, HeatResult,
};
