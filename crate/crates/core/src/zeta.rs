//! (k, ν)-Riemann and Hurwitz Zeta functions.
//!
//! `ζ_{k,ν}(x) = Σ_{n≥1} (nkν)^{−x/kν} = (kν)^{−x/kν} ζ(x/kν)` for `x > kν`, and
//! `ζ_{k,ν}(x, s) = Σ_{n≥0} (x + nkν)^{−s/kν} = (kν)^{−s/kν} ζ(s/kν, x/kν)`
//! for `x > 0`, `s > kν`. No continuation past the convergence boundary.

use serde::Serialize;

use crate::error::{DomainError, ErrorKind, Result};
use crate::gamma::{require_pole_free, Params};
use crate::real::Real;
use crate::scalar;

/// Validated Hurwitz arguments: offset `x > 0` and exponent `s > kν`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZetaArgs<T> {
    x: T,
    s: T,
}

impl<T: Real> ZetaArgs<T> {
    pub fn new(p: &Params<T>, x: T, s: T) -> Result<Self> {
        require_pole_free(x)?;
        require_convergent(p, s)?;
        Ok(Self { x, s })
    }

    pub fn x(&self) -> T {
        self.x
    }

    pub fn s(&self) -> T {
        self.s
    }
}

fn require_convergent<T: Real>(p: &Params<T>, s: T) -> Result<()> {
    if s.is_nan() || s <= p.c() {
        return Err(DomainError::divergent(format!(
            "exponent {s} must exceed kν = {}",
            p.c()
        )));
    }
    Ok(())
}

fn finish<T: Real>(what: &str, log_scale: T, series: Result<T>) -> Result<T> {
    let v = series? * log_scale.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(DomainError::new(
            ErrorKind::Overflow,
            format!("{what} overflows"),
        ))
    }
}

/// `ζ_{k,ν}(x)` for `x > kν`.
pub fn zeta_knu<T: Real>(p: &Params<T>, x: T) -> Result<T> {
    require_convergent(p, x)?;
    let s = p.reduce(x);
    finish("ζ_{k,ν}(x)", -s * p.c().ln(), scalar::riemann_zeta(s))
}

/// `ζ_{k,ν}(x, s)` for `x > 0`, `s > kν`.
pub fn hurwitz_knu<T: Real>(p: &Params<T>, x: T, s: T) -> Result<T> {
    let args = ZetaArgs::new(p, x, s)?;
    hurwitz_args(p, args)
}

pub fn hurwitz_args<T: Real>(p: &Params<T>, args: ZetaArgs<T>) -> Result<T> {
    let e = p.reduce(args.s);
    finish(
        "ζ_{k,ν}(x, s)",
        -e * p.c().ln(),
        scalar::hurwitz_zeta(e, p.reduce(args.x)),
    )
}
