//! The (k, ν)-Beta function `B_{k,ν}(x, y) = Γ_{k,ν}(x) Γ_{k,ν}(y) / Γ_{k,ν}(x + y)`.
//!
//! B is finite everywhere on the open positive quadrant, so there is no
//! near-pole special casing: `x + y > 0` whenever both arguments are.

use serde::Serialize;

use crate::error::{DomainError, Result};
use crate::gamma::{ln_gamma_knu, Params};
use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BetaArgs<T> {
    x: T,
    y: T,
}

impl<T: Real> BetaArgs<T> {
    pub fn new(x: T, y: T) -> Result<Self> {
        if x.is_nan() || x <= T::zero() || y.is_nan() || y <= T::zero() {
            return Err(DomainError::pole(format!(
                "Beta arguments ({x}, {y}) must both be > 0"
            )));
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> T {
        self.x
    }

    pub fn y(&self) -> T {
        self.y
    }

    pub fn swapped(&self) -> Self {
        Self {
            x: self.y,
            y: self.x,
        }
    }
}

/// `ln B_{k,ν}(x, y)`.
pub fn ln_beta_knu<T: Real>(p: &Params<T>, args: BetaArgs<T>) -> Result<T> {
    let (x, y) = (args.x, args.y);
    Ok(ln_gamma_knu(p, x)? + ln_gamma_knu(p, y)? - ln_gamma_knu(p, x + y)?)
}

/// `B_{k,ν}(x, y)`, evaluated as a difference of log-Gammas.
pub fn beta_knu<T: Real>(p: &Params<T>, args: BetaArgs<T>) -> Result<T> {
    let v = ln_beta_knu(p, args)?.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(DomainError::overflow(format!(
            "B({}, {}) overflows",
            args.x, args.y
        )))
    }
}

/// Truncated product `(x+y)/(xy) ν² Π_{j=1}^{n} (jkν)(jkν+x+y) / ((jkν+x)(jkν+y))`.
/// Converges to `B_{k,ν}(x, y)` at rate `O(1/n)`.
pub fn beta_product<T: Real>(p: &Params<T>, args: BetaArgs<T>, n_terms: usize) -> T {
    let (x, y) = (args.x, args.y);
    let c = p.c();
    let mut log_prod = T::zero();
    for j in (1..=n_terms).rev() {
        let jc = T::from_count(j) * c;
        // (jc)(jc + x + y) / ((jc + x)(jc + y)) = 1 − xy / ((jc + x)(jc + y))
        let t = -(x * y) / ((jc + x) * (jc + y));
        log_prod = log_prod + t.ln_1p();
    }
    (((x + y) / (x * y) * p.nu() * p.nu()).ln() + log_prod).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::pochhammer;
    use std::f64::consts::PI;

    fn params(k: f64, nu: f64) -> Params<f64> {
        Params::new(k, nu).unwrap()
    }

    fn b(p: &Params<f64>, x: f64, y: f64) -> f64 {
        beta_knu(p, BetaArgs::new(x, y).unwrap()).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    const KS: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
    const XS: [f64; 4] = [0.4, 1.1, 2.5, 6.0];

    fn each(mut f: impl FnMut(&Params<f64>, f64, f64)) {
        for &k in &KS {
            for &nu in &KS {
                let p = params(k, nu);
                for &x in &XS {
                    for &y in &XS {
                        f(&p, x, y);
                    }
                }
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert!((b(&params(1.0, 1.0), 1.0, 1.0) - 1.0).abs() < 1e-15);
        assert!(rel(b(&params(2.0, 3.0), 6.0, 6.0), 1.5) < 1e-14);
        assert!(rel(b(&params(1.0, 1.0), 0.5, 0.5), PI) < 1e-14);
    }

    #[test]
    fn args_reject_non_positive() {
        assert!(BetaArgs::new(0.0, 1.0).is_err());
        assert!(BetaArgs::new(1.0, -1.0).is_err());
        assert!(BetaArgs::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn shift_and_pascal_identities() {
        each(|p, x, y| {
            let c = p.c();
            let base = b(p, x, y);
            assert!(rel(b(p, x + c, y), x / (x + y) * base) < 1e-10);
            assert!(rel(b(p, x, y + c), y / (x + y) * base) < 1e-10);
            assert!(rel(b(p, x + c, y) + b(p, x, y + c), base) < 1e-10);
            assert!(rel(b(p, x, y), b(p, y, x)) < 1e-14);
        });
    }

    #[test]
    fn ratio_identity() {
        each(|p, x, y| {
            let c = p.c();
            for n in 1..=2usize {
                for m in 1..=2usize {
                    let lhs = b(p, x + n as f64 * c, y + m as f64 * c) / b(p, x, y);
                    let rhs = pochhammer(x, n, c).unwrap() * pochhammer(y, m, c).unwrap()
                        / pochhammer(x + y, n + m, c).unwrap();
                    assert!(rel(lhs, rhs) < 1e-10);
                }
            }
        });
    }

    #[test]
    fn secant_and_self_duplication() {
        for &k in &KS {
            for &nu in &KS {
                let p = params(k, nu);
                let c = p.c();
                for i in 1..=7 {
                    let x = c * i as f64 / 8.0;
                    let lhs = b(&p, 0.5 * (x + c), 0.5 * (c - x));
                    let rhs = nu / k * PI / (PI * x / (2.0 * c)).cos();
                    assert!(rel(lhs, rhs) < 1e-10);
                }
                for &x in &XS {
                    let lhs = b(&p, x, x);
                    let rhs = (2f64).powf(1.0 - 2.0 * x / c) * b(&p, x, 0.5 * c);
                    assert!(rel(lhs, rhs) < 1e-10);
                }
            }
        }
    }

    #[test]
    fn product_form_converges() {
        // the truncation gap is xy/(kν)²/N to leading order, so 1e-3 at
        // N = 1e5 needs xy/(kν)² ≤ 100; beyond that check the gap itself
        let n = 100_000;
        each(|p, x, y| {
            let args = BetaArgs::new(x, y).unwrap();
            let gap = rel(beta_product(p, args, n), b(p, x, y));
            let predicted = x * y / (p.c() * p.c()) / n as f64;
            if predicted <= 0.9e-3 {
                assert!(gap < 1e-3);
            }
            assert!((gap / predicted - 1.0).abs() < 0.05, "{gap} vs {predicted}");
        });
    }
}
