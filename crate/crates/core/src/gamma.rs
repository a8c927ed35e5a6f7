//! The (k, ν)-Gamma function and its companions.
//!
//! Values are computed through the closed-form reduction
//! `Γ_{k,ν}(x) = (k/ν)^{x/kν − 1} Γ(x/kν)`; the integral, limit and product
//! representations live in [`crate::oracle`] as independent cross-checks.

use serde::Serialize;

use crate::error::{DomainError, ErrorKind, Result};
use crate::real::Real;
use crate::scalar;

/// The deformation pair `(k, ν)` with the two composites that appear in
/// nearly every formula: `c = kν` and `r = k/ν`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Params<T> {
    k: T,
    nu: T,
    c: T,
    r: T,
}

impl<T: Real> Params<T> {
    pub fn new(k: T, nu: T) -> Result<Self> {
        if !(k > T::zero() && k.is_finite()) {
            return Err(DomainError::new(
                ErrorKind::InvalidParameter,
                format!("k = {k} must be a positive finite number"),
            ));
        }
        if !(nu > T::zero() && nu.is_finite()) {
            return Err(DomainError::new(
                ErrorKind::InvalidParameter,
                format!("nu = {nu} must be a positive finite number"),
            ));
        }
        Ok(Self {
            k,
            nu,
            c: k * nu,
            r: k / nu,
        })
    }

    /// The classical case `k = ν = 1`.
    pub fn classical() -> Self {
        Self::new(T::one(), T::one()).expect("unit parameters are valid")
    }

    #[inline]
    pub fn k(&self) -> T {
        self.k
    }

    #[inline]
    pub fn nu(&self) -> T {
        self.nu
    }

    /// `kν`, the spacing of the pole lattice.
    #[inline]
    pub fn c(&self) -> T {
        self.c
    }

    /// `k/ν`.
    #[inline]
    pub fn r(&self) -> T {
        self.r
    }

    /// Reduced argument `x / kν`.
    #[inline]
    pub fn reduce(&self, x: T) -> T {
        x / self.c
    }
}

/// Overflow-safe carrier for a Gamma value.
///
/// `value` is `exp(log_value)` and becomes `+∞` once the true value
/// leaves the representable range; `log_value` stays accurate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaValue<T> {
    pub log_value: T,
    pub value: T,
}

impl<T: Real> GammaValue<T> {
    pub fn from_log(log_value: T) -> Self {
        Self {
            log_value,
            value: log_value.exp(),
        }
    }
}

pub(crate) fn require_pole_free<T: Real>(x: T) -> Result<()> {
    if x.is_nan() || x <= T::zero() {
        return Err(DomainError::pole(format!(
            "x = {x} is not in the open positive half-line"
        )));
    }
    Ok(())
}

/// `ln Γ_{k,ν}(x)` for `x > 0`.
pub fn ln_gamma_knu<T: Real>(p: &Params<T>, x: T) -> Result<T> {
    require_pole_free(x)?;
    let a = p.reduce(x);
    let lg = scalar::ln_gamma(a).map_err(|e| match e.kind {
        ErrorKind::NonPositiveArgument => DomainError::pole(e.detail),
        _ => e,
    })?;
    Ok((a - T::one()) * p.r().ln() + lg)
}

/// `Γ_{k,ν}(x)` in both linear and log form.
pub fn gamma_knu<T: Real>(p: &Params<T>, x: T) -> Result<GammaValue<T>> {
    ln_gamma_knu(p, x).map(GammaValue::from_log)
}

/// Pochhammer `a`-symbol `(x)_{n,a} = x (x + a) ⋯ (x + (n − 1) a)`.
pub fn pochhammer<T: Real>(x: T, n: usize, a: T) -> Result<T> {
    let mut acc = T::one();
    let mut term = x;
    for _ in 0..n {
        acc = acc * term;
        if !acc.is_finite() {
            return Err(DomainError::overflow(format!(
                "({x})_{{{n},{a}}} exceeds the representable range"
            )));
        }
        term = term + a;
    }
    Ok(acc)
}

/// Evaluates `Γ_{to}(x)` by rescaling a `Γ_{from}` evaluation:
/// `Γ_{l,μ}(x) = (lν/kμ)^{x/lμ − 1} Γ_{k,ν}(kν x / lμ)` with
/// `from = (k, ν)` and `to = (l, μ)`.
pub fn param_transform<T: Real>(from: &Params<T>, to: &Params<T>, x: T) -> Result<T> {
    require_pole_free(x)?;
    let factor_base = (to.k() * from.nu()) / (from.k() * to.nu());
    let exponent = x / to.c() - T::one();
    let inner = ln_gamma_knu(from, from.c() * x / to.c())?;
    let v = (exponent * factor_base.ln() + inner).exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(DomainError::overflow(format!("Γ at x = {x} overflows")))
    }
}

/// Partial Weierstrass-type product for `1/Γ_{k,ν}(x)`:
///
/// `ν^{x/kν−1} k^{−x/kν} (x/ν) e^{γx/kν} Π_{j=1}^{n} (1 + x/(jkν)) e^{−x/(jkν)}`.
///
/// The truncation error decays like `O(1/n)`.
pub fn recip_gamma_product<T: Real>(p: &Params<T>, x: T, n_terms: usize) -> Result<T> {
    require_pole_free(x)?;
    if n_terms == 0 {
        return Err(DomainError::new(
            ErrorKind::InvalidParameter,
            "n_terms must be at least 1",
        ));
    }
    let one = T::one();
    let a = p.reduce(x);
    let mut log_prod = T::zero();
    // smallest terms first
    for j in (1..=n_terms).rev() {
        let u = x / (T::from_count(j) * p.c());
        log_prod = log_prod + (u.ln_1p() - u);
    }
    let log_prefactor =
        (a - one) * p.nu().ln() - a * p.k().ln() + (x / p.nu()).ln() + T::euler_gamma() * a;
    let v = (log_prefactor + log_prod).exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(DomainError::overflow("reciprocal product overflows"))
    }
}

/// Log of the leading Stirling term
/// `√(2π) (x/ν²)^{x/kν − 1} (x/kν)^{1/2} e^{−x/kν}`.
pub fn ln_stirling_approx<T: Real>(p: &Params<T>, x: T) -> Result<T> {
    require_pole_free(x)?;
    let a = p.reduce(x);
    let half = T::lit(0.5);
    let ln_sqrt_2pi = T::lit(0.918_938_533_204_672_8);
    Ok(ln_sqrt_2pi + (a - T::one()) * (x / (p.nu() * p.nu())).ln() + half * a.ln() - a)
}

/// Leading Stirling term for `Γ_{k,ν}(x)`; no remainder is included.
pub fn stirling_approx<T: Real>(p: &Params<T>, x: T) -> Result<T> {
    let v = ln_stirling_approx(p, x)?.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(DomainError::overflow(format!(
            "Stirling term at x = {x} overflows"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn params(k: f64, nu: f64) -> Params<f64> {
        Params::new(k, nu).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    const GRID: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
    const XS: [f64; 6] = [0.3, 0.7, 1.5, 2.9, 4.2, 7.7];

    #[test]
    fn params_reject_non_positive() {
        assert_eq!(
            Params::new(0.0, 1.0).unwrap_err().kind,
            ErrorKind::InvalidParameter
        );
        assert_eq!(
            Params::new(1.0, -2.0).unwrap_err().kind,
            ErrorKind::InvalidParameter
        );
        assert!(Params::new(f64::INFINITY, 1.0).is_err());
        let p = params(2.0, 3.0);
        assert_eq!(p.c(), 6.0);
        assert_eq!(p.r(), 2.0 / 3.0);
    }

    #[test]
    fn gamma_examples() {
        assert!((gamma_knu(&params(1.0, 1.0), 1.0).unwrap().value - 1.0).abs() < 1e-15);
        assert!((gamma_knu(&params(2.0, 3.0), 6.0).unwrap().value - 1.0).abs() < 1e-15);
        let expect = (1.5f64).sqrt() * PI.sqrt();
        assert!(rel(gamma_knu(&params(2.0, 3.0), 3.0).unwrap().value, expect) < 1e-14);
    }

    #[test]
    fn gamma_poles_are_errors() {
        let p = params(2.0, 3.0);
        for x in [0.0, -6.0, -1.3] {
            assert_eq!(gamma_knu(&p, x).unwrap_err().kind, ErrorKind::PoleHit);
        }
    }

    #[test]
    fn gamma_value_log_consistency() {
        let p = params(0.5, 2.0);
        for &x in &XS {
            let g = gamma_knu(&p, x).unwrap();
            assert!((g.value.ln() - g.log_value).abs() <= 1e-12 * g.log_value.abs().max(1.0));
        }
        // large arguments overflow in linear space but keep the log
        let g = gamma_knu(&params(1.0, 1.0), 500.0).unwrap();
        assert!(g.value.is_infinite());
        assert!((g.log_value - 2605.1158503617339).abs() < 1e-9);
    }

    #[test]
    fn recurrence_on_grid() {
        for &k in &GRID {
            for &nu in &GRID {
                let p = params(k, nu);
                for &x in &XS {
                    let lhs = gamma_knu(&p, x + p.c()).unwrap().value;
                    let rhs = x / (nu * nu) * gamma_knu(&p, x).unwrap().value;
                    assert!(rel(lhs, rhs) <= 1e-11, "k={k} nu={nu} x={x}");
                }
            }
        }
    }

    #[test]
    fn reflection_on_grid() {
        for &k in &GRID {
            for &nu in &GRID {
                let p = params(k, nu);
                for i in 1..10 {
                    let x = p.c() * i as f64 / 10.0;
                    let lhs =
                        gamma_knu(&p, x).unwrap().value * gamma_knu(&p, p.c() - x).unwrap().value;
                    let rhs = nu / k * PI / (PI * x / p.c()).sin();
                    assert!(rel(lhs, rhs) <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(5.0, 0, 7.0).unwrap(), 1.0);
        assert_eq!(pochhammer(1.0, 3, 1.0).unwrap(), 6.0);
        assert_eq!(pochhammer(2.0, 2, 3.0).unwrap(), 10.0);
        assert_eq!(
            pochhammer(1e200, 3, 1.0).unwrap_err().kind,
            ErrorKind::Overflow
        );
    }

    #[test]
    fn param_transform_examples() {
        let from = params(2.0, 3.0);
        let direct = gamma_knu(&from, 4.5).unwrap().value;
        assert!(rel(param_transform(&from, &from, 4.5).unwrap(), direct) < 1e-14);
        let classical = params(1.0, 1.0);
        let to = params(2.0, 3.0);
        assert!(rel(param_transform(&classical, &to, 6.0).unwrap(), 1.0) < 1e-14);
        let expect = (2.0f64 / 3.0).sqrt() * (PI.sqrt() / 2.0);
        assert!(rel(param_transform(&classical, &to, 9.0).unwrap(), expect) < 1e-13);
        assert!((expect - 0.7236).abs() < 1e-4);
    }

    #[test]
    fn param_transform_agrees_with_direct() {
        let sets = [(1.0, 1.0), (2.0, 3.0), (0.5, 2.0), (3.0, 0.5)];
        for &(k, nu) in &sets {
            for &(l, mu) in &sets {
                for &x in &XS {
                    let got = param_transform(&params(k, nu), &params(l, mu), x).unwrap();
                    let want = gamma_knu(&params(l, mu), x).unwrap().value;
                    assert!(rel(got, want) <= 1e-12, "({k},{nu}) -> ({l},{mu}) at {x}");
                }
            }
        }
    }

    #[test]
    fn reciprocal_product_converges() {
        for &(k, nu, x) in &[(1.0, 1.0, 1.0), (2.0, 3.0, 6.0), (1.0, 1.0, 2.0)] {
            let p = params(k, nu);
            let v = recip_gamma_product(&p, x, 100_000).unwrap();
            assert!((v - 1.0).abs() < 1e-4, "({k},{nu},{x}) -> {v}");
        }
        // O(1/n): doubling the number of factors roughly halves the error
        let p = params(2.0, 3.0);
        let exact = 1.0 / gamma_knu(&p, 4.5).unwrap().value;
        let e1 = (recip_gamma_product(&p, 4.5, 10_000).unwrap() - exact).abs();
        let e2 = (recip_gamma_product(&p, 4.5, 20_000).unwrap() - exact).abs();
        assert!((e1 / e2 - 2.0).abs() < 0.1, "ratio {}", e1 / e2);
        assert!(recip_gamma_product(&p, 1.0, 0).is_err());
    }

    #[test]
    fn stirling_examples() {
        let p = params(1.0, 1.0);
        let s10 = stirling_approx(&p, 10.0).unwrap();
        assert!((s10 - 359_869.56).abs() < 1.0, "{s10}");
        let err10 = rel(s10, 362_880.0);
        assert!((err10 - 0.0083).abs() < 0.0003);
        let g100 = gamma_knu(&p, 100.0).unwrap().log_value;
        let err100 = (ln_stirling_approx(&p, 100.0).unwrap() - g100)
            .exp_m1()
            .abs();
        assert!(err100 < 1e-3);
    }

    #[test]
    fn stirling_error_decays_for_deformed_parameters() {
        for &(k, nu) in &[(1.0, 1.0), (2.0, 3.0), (0.5, 2.0)] {
            let p = params(k, nu);
            let err = |x: f64| {
                (ln_stirling_approx(&p, x).unwrap() - ln_gamma_knu(&p, x).unwrap())
                    .exp_m1()
                    .abs()
            };
            let e10 = err(10.0 * p.c());
            let e100 = err(100.0 * p.c());
            assert!(e100 < e10);
            // same relative error as the classical Stirling term at x/kν
            assert!((e10 - 0.00829).abs() < 1e-4, "({k},{nu}) -> {e10}");
            assert!(stirling_approx(&p, 0.37).unwrap() > 0.0);
        }
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn rescaling_identities(k in 0.2f64..4.0, nu in 0.2f64..4.0, x in 0.05f64..20.0) {
                let p = Params::new(k, nu).unwrap();
                // Γ_{k,ν}(kx) = k^{x/ν−1} Γ_{1,ν}(x)
                let lhs = ln_gamma_knu(&p, k * x).unwrap();
                let rhs = (x / nu - 1.0) * k.ln() + ln_gamma_knu(&Params::new(1.0, nu).unwrap(), x).unwrap();
                prop_assert!((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(1.0));
                // Γ_{k,ν}(νx) = ν^{1−x/k} Γ_{k,1}(x)
                let lhs = ln_gamma_knu(&p, nu * x).unwrap();
                let rhs = (1.0 - x / k) * nu.ln() + ln_gamma_knu(&Params::new(k, 1.0).unwrap(), x).unwrap();
                prop_assert!((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(1.0));
            }

            #[test]
            fn log_convex_midpoint(k in 0.2f64..4.0, nu in 0.2f64..4.0, x in 0.05f64..30.0, y in 0.05f64..30.0) {
                prop_assume!((x - y).abs() > 1e-3);
                let p = Params::new(k, nu).unwrap();
                let mid = ln_gamma_knu(&p, 0.5 * (x + y)).unwrap();
                let avg = 0.5 * ln_gamma_knu(&p, x).unwrap() + 0.5 * ln_gamma_knu(&p, y).unwrap();
                prop_assert!(mid <= avg + 1e-12 * avg.abs().max(1.0));
            }
        }
    }
}
