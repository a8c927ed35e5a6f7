//! (k, ν)-Digamma and Polygamma functions.
//!
//! `Ψ_{k,ν}(x) = (ln(k/ν) + ψ(x/kν)) / kν` and
//! `Ψ^{(m)}_{k,ν}(x) = ψ^{(m)}(x/kν) / (kν)^{m+1}`.

use serde::Serialize;

use crate::error::{DomainError, ErrorKind, Result};
use crate::gamma::{ln_gamma_knu, require_pole_free, Params};
use crate::real::Real;
use crate::scalar;

fn as_pole(e: DomainError) -> DomainError {
    match e.kind {
        ErrorKind::NonPositiveArgument => DomainError::pole(e.detail),
        _ => e,
    }
}

/// `Ψ_{k,ν}(x) = d/dx ln Γ_{k,ν}(x)`.
pub fn psi_knu<T: Real>(p: &Params<T>, x: T) -> Result<T> {
    require_pole_free(x)?;
    let psi = scalar::digamma(p.reduce(x)).map_err(as_pole)?;
    Ok((p.r().ln() + psi) / p.c())
}

/// `Ψ^{(m)}_{k,ν}(x)` for `m ≥ 1`.
pub fn polygamma_knu<T: Real>(p: &Params<T>, m: u32, x: T) -> Result<T> {
    if m == 0 {
        return Err(DomainError::new(
            ErrorKind::InvalidParameter,
            "polygamma order must be at least 1",
        ));
    }
    require_pole_free(x)?;
    let v = scalar::polygamma(m, p.reduce(x)).map_err(as_pole)?;
    let scaled = v / p.c().powi(m as i32 + 1);
    if scaled.is_finite() {
        Ok(scaled)
    } else {
        Err(DomainError::overflow(format!(
            "Ψ^({m}) at x = {x} overflows"
        )))
    }
}

/// Polygamma of any order `m ≥ −1` with `Ψ^{(0)} = Ψ` and
/// `Ψ^{(−1)} = ln Γ_{k,ν}`.
pub fn polygamma_ext<T: Real>(p: &Params<T>, m: i32, x: T) -> Result<T> {
    match m {
        -1 => ln_gamma_knu(p, x),
        0 => psi_knu(p, x),
        m if m > 0 => polygamma_knu(p, m as u32, x),
        _ => Err(DomainError::new(
            ErrorKind::InvalidParameter,
            format!("order {m} is below −1"),
        )),
    }
}

/// `Σ_{j=0}^{n} 1/(x + jkν)`, which equals `Ψ(x + (n+1)kν) − Ψ(x)`.
pub fn psi_shift_sum<T: Real>(p: &Params<T>, x: T, n: usize) -> T {
    (0..=n).rev().fold(T::zero(), |acc, j| {
        acc + (x + T::from_count(j) * p.c()).recip()
    })
}

/// Left-minus-right values of the two second-order PDEs satisfied by
/// `ln Γ_{k,ν}(x)`, measured with central differences.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PdeResiduals<T> {
    pub res_k: T,
    pub res_nu: T,
    pub step: T,
}

/// Default relative step for [`pde_residuals`].
pub const PDE_DEFAULT_STEP: f64 = 1e-4;

/// Residuals of
///
/// * `k² ∂²_k L + 2k ∂_k L − x² ∂²_x L = −1 − x/kν`
/// * `ν² ∂²_ν L + 2ν ∂_ν L − x² ∂²_x L = 1 + x/kν`
///
/// for `L(k, ν, x) = ln Γ_{k,ν}(x)`. Each step is `step · max(1, |var|)`.
/// Both identities hold exactly, so the residuals are pure
/// finite-difference truncation (`O(step²)`) plus rounding.
pub fn pde_residuals<T: Real>(p: &Params<T>, x: T, step: T) -> Result<PdeResiduals<T>> {
    if !(step > T::zero() && step.is_finite()) {
        return Err(DomainError::new(
            ErrorKind::InvalidParameter,
            format!("step = {step} must be positive"),
        ));
    }
    require_pole_free(x)?;
    let one = T::one();
    let two = T::lit(2.0);
    let (k, nu) = (p.k(), p.nu());
    let hk = step * k.max(one);
    let hn = step * nu.max(one);
    let hx = step * x.max(one);
    if k - hk <= T::zero() || nu - hn <= T::zero() || x - hx <= T::zero() {
        return Err(DomainError::pole(
            "finite-difference stencil leaves the positive domain",
        ));
    }
    let eval = |k: T, nu: T, x: T| -> Result<T> {
        let q = Params::new(k, nu).map_err(|e| DomainError::pole(e.detail))?;
        ln_gamma_knu(&q, x)
    };
    let centre = eval(k, nu, x)?;

    let (kp, km) = (eval(k + hk, nu, x)?, eval(k - hk, nu, x)?);
    let dk = (kp - km) / (two * hk);
    let dkk = (kp - two * centre + km) / (hk * hk);

    let (np, nm) = (eval(k, nu + hn, x)?, eval(k, nu - hn, x)?);
    let dn = (np - nm) / (two * hn);
    let dnn = (np - two * centre + nm) / (hn * hn);

    let (xp, xm) = (eval(k, nu, x + hx)?, eval(k, nu, x - hx)?);
    let dxx = (xp - two * centre + xm) / (hx * hx);

    let a = p.reduce(x);
    let x2dxx = x * x * dxx;
    let res_k = k * k * dkk + two * k * dk - x2dxx - (-one - a);
    let res_nu = nu * nu * dnn + two * nu * dn - x2dxx - (one + a);
    Ok(PdeResiduals {
        res_k,
        res_nu,
        step,
    })
}
