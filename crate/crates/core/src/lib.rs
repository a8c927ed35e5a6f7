//! Two-parameter (k, ν)-deformed Gamma, Beta, Psi and Zeta functions.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the `*64` / `*32`
//! aliases below pin the scalar for callers who do not care.

pub mod beta;
pub mod bounds;
pub mod error;
pub mod gamma;
pub mod oracle;
pub mod psi;
pub mod real;
pub mod scalar;
pub mod signmap;
pub mod verify;
pub mod zeta;

pub use beta::{beta_knu, beta_product, ln_beta_knu, BetaArgs};
pub use bounds::{
    beta_gamma_upper, chebyshev_beta_bound, half_shift_upper, jensen_beta_bound,
    jensen_gamma_bound, ln_product_lower, ln_product_lower_plain, novariable_upper, ratio_bounds,
    superadditivity_gap, BoundReport, Direction,
};
pub use error::{DomainError, ErrorKind, Result};
pub use gamma::{
    gamma_knu, ln_gamma_knu, ln_stirling_approx, param_transform, pochhammer, recip_gamma_product,
    stirling_approx, GammaValue, Params,
};
pub use oracle::{oracle_eval, EvalControl, OracleResult, Target};
pub use psi::{
    pde_residuals, polygamma_ext, polygamma_knu, psi_knu, psi_shift_sum, PdeResiduals,
    PDE_DEFAULT_STEP,
};
pub use real::Real;
pub use signmap::{grid_signmap, sign_f, GridMode, GridSpec, SignMap};
pub use verify::{run_suite, CheckOutcome, Suite, SuiteReport, VerifyConfig};
pub use zeta::{hurwitz_knu, zeta_knu, ZetaArgs};

pub type Params64 = Params<f64>;
pub type Params32 = Params<f32>;
pub type GammaValue64 = GammaValue<f64>;
pub type BetaArgs64 = BetaArgs<f64>;
pub type ZetaArgs64 = ZetaArgs<f64>;
pub type BoundReport64 = BoundReport<f64>;
pub type PdeResiduals64 = PdeResiduals<f64>;
