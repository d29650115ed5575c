//! Logarithmic Lambert function W_L, the real inverse of y ↦ y·ln(By)·eʸ,
//! together with the deformed-entropy thermostatics of the classical ideal
//! gas whose heat functions it expresses.
//!
//! - [`special`]: principal Lambert W, exponential integral Ei, ln Γ.
//! - [`log_lambert`]: branch points, branch-aware evaluation, derivative,
//!   antiderivative, Taylor and large-x approximations.
//! - [`thermostatics`]: q-deformed logarithms, the three-parameter entropy
//!   and the four adiabatic ensembles.
//! - [`cli`]: CSV front end used by the `loglambert` binary.
//!
//! ```
//! use loglambert::{BranchId, LogLambertContext, SolverOptions};
//!
//! let ctx = LogLambertContext::new(1.0, SolverOptions::default())?;
//! let (y, _) = ctx.eval(302.7564, BranchId::Pos0)?;
//! assert!((y - 4.0).abs() < 1e-6);
//! // the same x on the other branch has no preimage
//! assert!(ctx.eval(302.7564, BranchId::Pos1).is_err());
//! # Ok::<(), loglambert::Error>(())
//! ```

// `!(x > 0.0)` is used on purpose so that NaN takes the error path.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod log_lambert;
pub mod special;
pub mod thermostatics;

pub use error::{Error, Result};
pub use log_lambert::{
    asymptotic_approx, branch_points, forward, taylor_coefficients, taylor_eval, BranchId,
    BranchPoints, EvalDiagnostics, Interval, LogLambertContext,
};
pub use special::{exp_integral_ei, lambert_w0, log_gamma, SolverOptions};
