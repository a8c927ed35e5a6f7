//! Inequality bounds for Γ_{k,ν} and B_{k,ν} as evaluable quantities.
//!
//! Everything that can overflow is formed in log space and exponentiated
//! once at the end.

use serde::Serialize;

use crate::beta::{ln_beta_knu, BetaArgs};
use crate::error::{DomainError, ErrorKind, Result};
use crate::gamma::{ln_gamma_knu, Params};
use crate::real::Real;

/// Which side of the true value a bound sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// the function is ≥ the bound
    Lower,
    /// the function is ≤ the bound
    Upper,
    /// the bound is attained
    Equality,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
            Direction::Equality => "equality",
        }
    }

    /// Whether `value` sits on the correct side of `bound`, allowing a
    /// relative slack `tol` (equality is checked to the same slack).
    pub fn holds<T: Real>(self, value: T, bound: T, tol: T) -> bool {
        let slack = tol * value.abs().max(bound.abs());
        match self {
            Direction::Lower => value >= bound - slack,
            Direction::Upper => value <= bound + slack,
            Direction::Equality => (value - bound).abs() <= slack,
        }
    }
}

/// `kν³/(xy)` and the side of `B_{k,ν}(x, y)` it lies on.
///
/// `Γ(x + y) ≥ xy/(kν³) Γ(x)Γ(y)` when `(x − kν)(y − kν) ≥ 0`, which makes
/// the bound an *upper* bound for B there and a lower bound in the mixed
/// quadrants. On the lines `x = kν` or `y = kν` it is attained exactly.
pub fn chebyshev_beta_bound<T: Real>(p: &Params<T>, x: T, y: T) -> (T, Direction) {
    let c = p.c();
    let bound = p.k() * p.nu().powi(3) / (x * y);
    let s = (x - c) * (y - c);
    let dir = if s > T::zero() {
        Direction::Upper
    } else if s < T::zero() {
        Direction::Lower
    } else {
        Direction::Equality
    };
    (bound, dir)
}

/// `(ν/k)(1/2)^{(x+y)/kν − 2}` where the Beta integrand is convex
/// (lower bound) or concave (upper bound) in t; `None` elsewhere.
pub fn jensen_beta_bound<T: Real>(p: &Params<T>, x: T, y: T) -> Option<(T, Direction)> {
    let (a, b) = (p.reduce(x), p.reduce(y));
    let one = T::one();
    let two = T::lit(2.0);
    let le1 = |t: T| t > T::zero() && t <= one;
    let ge2 = |t: T| t >= two;
    let in12 = |t: T| t >= one && t <= two;
    let convex = (le1(a) && ge2(b)) || (ge2(a) && le1(b));
    let concave = in12(a) && in12(b);
    let dir = match (convex, concave) {
        (true, true) => Direction::Equality,
        (true, false) => Direction::Lower,
        (false, true) => Direction::Upper,
        (false, false) => return None,
    };
    let bound = p.nu() / p.k() * T::lit(0.5).powf(a + b - two);
    Some((bound, dir))
}

/// `(k/ν)^{x/kν − 1}` and its side of `Γ_{k,ν}(x)`: below for
/// `x/kν ∈ (0, 1] ∪ [2, ∞)`, above for `[1, 2]`, attained at 1 and 2.
pub fn jensen_gamma_bound<T: Real>(p: &Params<T>, x: T) -> (T, Direction) {
    let a = p.reduce(x);
    let bound = p.r().powf(a - T::one());
    let dir = if a == T::one() || a == T::lit(2.0) {
        Direction::Equality
    } else if a < T::one() || a > T::lit(2.0) {
        Direction::Lower
    } else {
        Direction::Upper
    };
    (bound, dir)
}

/// The two-sided estimates of `B_{k,ν}(x₂, y) / B_{k,ν}(x₁, y)`.
#[allow(non_snake_case)]
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport<T> {
    pub lower_T1: T,
    pub upper_T1: T,
    pub upper_T2: T,
    pub lower_T31: T,
    pub upper_T32: T,
    pub actual_ratio: T,
}

impl<T: Real> BoundReport<T> {
    /// The tighter of the two lower bounds, with its field name.
    pub fn best_lower(&self) -> (&'static str, T) {
        if self.lower_T31 >= self.lower_T1 {
            ("lower_T31", self.lower_T31)
        } else {
            ("lower_T1", self.lower_T1)
        }
    }

    /// The tightest of the three upper bounds, with its field name.
    pub fn best_upper(&self) -> (&'static str, T) {
        [
            ("upper_T1", self.upper_T1),
            ("upper_T2", self.upper_T2),
            ("upper_T32", self.upper_T32),
        ]
        .into_iter()
        .fold(("upper_T1", self.upper_T1), |best, cand| {
            if cand.1 < best.1 {
                cand
            } else {
                best
            }
        })
    }

    /// `lower_T1 < ratio < upper_T1`, `ratio < upper_T2` and
    /// `lower_T31 ≤ ratio ≤ upper_T32`, each to a relative slack `tol`.
    pub fn chain_holds(&self, tol: T) -> bool {
        let r = self.actual_ratio;
        let s = tol * r.abs();
        self.lower_T1 < r + s
            && r < self.upper_T1 + s
            && r < self.upper_T2 + s
            && self.lower_T31 <= r + s
            && r <= self.upper_T32 + s
    }
}

/// All five ratio bounds and the actual ratio at `(x₁, x₂, y)`, `0 < x₁ < x₂`.
pub fn ratio_bounds<T: Real>(p: &Params<T>, x1: T, x2: T, y: T) -> Result<BoundReport<T>> {
    if !(x1 > T::zero() && x1 < x2 && y > T::zero()) {
        return Err(DomainError::new(
            ErrorKind::InvalidParameter,
            format!("ratio bounds need 0 < x1 < x2 and y > 0, got x1 = {x1}, x2 = {x2}, y = {y}"),
        ));
    }
    let one = T::one();
    let c = p.c();
    let (a1, a2, b) = (x1 / c, x2 / c, y / c);
    let ln_front = ((x2 + y) / (x1 + y)).ln();
    let ln_q = (x1 / x2).ln();

    let lower_t1 = ln_front + (b + one) * ln_q;
    let upper_t1 = ln_front + ln_q + b * ((x1 + y + c) / (x2 + y + c)).ln();
    let upper_t2 = b * ((x1 + y) / (x2 + y)).ln();
    // t ↦ t ln t, written out so the four terms cancel in log space
    let lower_t31 = (a2 - one) * a2.ln()
        + (one - a1) * a1.ln()
        + (one - a2 - b) * (a2 + b).ln()
        + (a1 + b - one) * (a1 + b).ln();
    let upper_t32 =
        a2 * a2.ln() - a1 * a1.ln() - (a2 + b) * (a2 + b).ln() + (a1 + b) * (a1 + b).ln();
    let actual = ln_beta_knu(p, BetaArgs::new(x2, y)?)? - ln_beta_knu(p, BetaArgs::new(x1, y)?)?;

    Ok(BoundReport {
        lower_T1: lower_t1.exp(),
        upper_T1: upper_t1.exp(),
        upper_T2: upper_t2.exp(),
        lower_T31: lower_t31.exp(),
        upper_T32: upper_t32.exp(),
        actual_ratio: actual.exp(),
    })
}

/// `√π 2^{1 − 2x/kν} (ν/k)^{1/2} Γ_{k,ν}(x) / Γ_{k,ν}(x + kν/2)`, an upper
/// bound for `B_{k,ν}(x, y)` valid for every `y > x`.
pub fn beta_gamma_upper<T: Real>(p: &Params<T>, x: T) -> Result<T> {
    let half = T::lit(0.5);
    let ln = half * T::PI().ln() + (T::one() - T::lit(2.0) * p.reduce(x)) * T::LN_2()
        - half * p.r().ln()
        + ln_gamma_knu(p, x)?
        - ln_gamma_knu(p, x + half * p.c())?;
    Ok(ln.exp())
}

/// `(ν/k) √π 2^{1 − 2x/kν}`, the constant bound for `B_{k,ν}(x, y)`,
/// `y > x`, valid in the window `3kν/2 ≤ x ≤ 2kν`.
pub fn novariable_upper<T: Real>(p: &Params<T>, x: T) -> Result<T> {
    let c = p.c();
    if !(x >= T::lit(1.5) * c && x <= T::lit(2.0) * c) {
        return Err(DomainError::new(
            ErrorKind::DomainWindow,
            format!(
                "x = {x} is outside [3kν/2, 2kν] = [{}, {}]",
                T::lit(1.5) * c,
                T::lit(2.0) * c
            ),
        ));
    }
    Ok(T::one() / p.r() * T::PI().sqrt() * T::lit(2.0).powf(T::one() - T::lit(2.0) * p.reduce(x)))
}

/// `ln Γ(x + y) − ln Γ(x) − ln Γ(y)`; non-negative for `x, y > kν` when `k ≥ ν`.
pub fn superadditivity_gap<T: Real>(p: &Params<T>, x: T, y: T) -> Result<T> {
    Ok(ln_gamma_knu(p, x + y)? - ln_gamma_knu(p, x)? - ln_gamma_knu(p, y)?)
}

/// `ln[(n−1)! x^{2(n−1)} (kν³)^{1−n} Γ(x)^n]`, a lower bound for
/// `ln Γ_{k,ν}(nx)` when `x ≥ kν` or `(n − 1)x ≤ kν` (so that each step of
/// the induction stays in a sign-consistent quadrant).
pub fn ln_product_lower<T: Real>(p: &Params<T>, x: T, n: usize) -> Result<T> {
    let m = T::from_count(n - 1);
    Ok(
        ln_factorial::<T>(n - 1) + T::lit(2.0) * m * x.ln() - m * (p.k() * p.nu().powi(3)).ln()
            + T::from_count(n) * ln_gamma_knu(p, x)?,
    )
}

/// `ln[(n−1)! (kν³)^{1−n} Γ(x)^n]`, the same bound without the
/// `x^{2(n−1)}` factor; it is implied by [`ln_product_lower`] once `x ≥ 1`.
pub fn ln_product_lower_plain<T: Real>(p: &Params<T>, x: T, n: usize) -> Result<T> {
    let m = T::from_count(n - 1);
    Ok(ln_factorial::<T>(n - 1) - m * (p.k() * p.nu().powi(3)).ln()
        + T::from_count(n) * ln_gamma_knu(p, x)?)
}

fn ln_factorial<T: Real>(n: usize) -> T {
    (2..=n).fold(T::zero(), |acc, j| acc + T::from_count(j).ln())
}

/// `k^{3/2} ν^{5/2} 2^{2x/kν − 1} / (x² √π) · Γ_{k,ν}(x + kν/2)`, an upper
/// bound for `Γ_{k,ν}(x)` at every `x > 0`.
pub fn half_shift_upper<T: Real>(p: &Params<T>, x: T) -> Result<T> {
    let half = T::lit(0.5);
    let ln = T::lit(1.5) * p.k().ln()
        + T::lit(2.5) * p.nu().ln()
        + (T::lit(2.0) * p.reduce(x) - T::one()) * T::LN_2()
        - T::lit(2.0) * x.ln()
        - half * T::PI().ln()
        + ln_gamma_knu(p, x + half * p.c())?;
    Ok(ln.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beta::beta_knu;
    use std::f64::consts::PI;

    fn params(k: f64, nu: f64) -> Params<f64> {
        Params::new(k, nu).unwrap()
    }

    fn b(p: &Params<f64>, x: f64, y: f64) -> f64 {
        beta_knu(p, BetaArgs::new(x, y).unwrap()).unwrap()
    }

    #[test]
    fn chebyshev_examples() {
        // B(2, 3) = 1/12 sits below 1/6
        let (bound, dir) = chebyshev_beta_bound(&params(1.0, 1.0), 2.0, 3.0);
        assert!((bound - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(dir, Direction::Upper);
        assert!(b(&params(1.0, 1.0), 2.0, 3.0) < bound);

        let (bound, dir) = chebyshev_beta_bound(&params(1.0, 1.0), 1.0, 5.0);
        assert!((bound - 0.2).abs() < 1e-15);
        assert_eq!(dir, Direction::Equality);
        assert!((b(&params(1.0, 1.0), 1.0, 5.0) - bound).abs() < 1e-14);

        // B_{2,1}(1, 3) = B(1/2, 3/2)/2 = π/4 ≥ 2/3
        let p = params(2.0, 1.0);
        let (bound, dir) = chebyshev_beta_bound(&p, 1.0, 3.0);
        assert!((bound - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(dir, Direction::Lower);
        assert!((b(&p, 1.0, 3.0) - PI / 4.0).abs() < 1e-14);
    }

    #[test]
    fn jensen_examples() {
        let p = params(1.0, 1.0);
        let (v, d) = jensen_beta_bound(&p, 0.5, 3.0).unwrap();
        assert!((v - 2f64.powf(-1.5)).abs() < 1e-15 && d == Direction::Lower);
        let (v, d) = jensen_beta_bound(&p, 1.5, 1.5).unwrap();
        assert!((v - 0.5).abs() < 1e-15 && d == Direction::Upper);
        assert!(jensen_beta_bound(&p, 1.5, 5.0).is_none());
        // (1, 2) is in both regions: B(1, 2) = 1/2 = bound
        assert_eq!(
            jensen_beta_bound(&p, 1.0, 2.0).unwrap().1,
            Direction::Equality
        );
    }

    #[test]
    fn ratio_bound_example() {
        let r = ratio_bounds(&params(1.0, 1.0), 1.0, 2.0, 1.0).unwrap();
        assert!((r.actual_ratio - 0.5).abs() < 1e-14);
        assert!((r.lower_T1 - 0.375).abs() < 1e-14);
        assert!((r.upper_T1 - 0.5625).abs() < 1e-14);
        assert!((r.upper_T2 - 2.0 / 3.0).abs() < 1e-14);
        assert!(r.chain_holds(0.0));
        assert!(ratio_bounds(&params(1.0, 1.0), 2.0, 1.0, 1.0).is_err());
        assert!(ratio_bounds(&params(2.0, 3.0), 3.0, 9.0, 6.0)
            .unwrap()
            .chain_holds(0.0));
    }

    #[test]
    fn degenerate_ratio_tends_to_one() {
        let r = ratio_bounds(&params(2.0, 3.0), 4.0 - 1e-9, 4.0, 2.5).unwrap();
        for v in [
            r.lower_T1,
            r.upper_T1,
            r.upper_T2,
            r.lower_T31,
            r.upper_T32,
            r.actual_ratio,
        ] {
            assert!((v - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn beta_gamma_examples() {
        let p = params(1.0, 1.0);
        assert!((beta_gamma_upper(&p, 0.5).unwrap() - PI).abs() < 1e-13);
        assert!((beta_gamma_upper(&p, 1.0).unwrap() - 1.0).abs() < 1e-13);
        let p = params(2.0, 3.0);
        let u = beta_gamma_upper(&p, 9.0).unwrap();
        assert!(u.is_finite() && u >= b(&p, 9.0, 10.0) && u >= b(&p, 9.0, 20.0));
    }

    #[test]
    fn novariable_examples() {
        let p = params(1.0, 1.0);
        assert!((novariable_upper(&p, 1.5).unwrap() - PI.sqrt() / 4.0).abs() < 1e-15);
        assert!((novariable_upper(&p, 2.0).unwrap() - PI.sqrt() / 8.0).abs() < 1e-15);
        assert_eq!(
            novariable_upper(&p, 1.0).unwrap_err().kind,
            ErrorKind::DomainWindow
        );
    }

    #[test]
    fn product_bound_domain_matters() {
        // with the x^{2(n−1)} factor dropped the bound fails for small x
        let p = params(1.0, 1.0);
        let lhs = ln_gamma_knu(&p, 1.0).unwrap();
        assert!(lhs >= ln_product_lower(&p, 0.5, 2).unwrap());
        assert!(lhs < ln_product_lower_plain(&p, 0.5, 2).unwrap());
    }
}
