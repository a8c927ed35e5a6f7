//! Classical special functions on the positive real axis.
//!
//! Everything in the deformed family reduces to these through
//! `Γ_{k,ν}(x) = (k/ν)^{x/kν − 1} Γ(x/kν)`, so they carry the accuracy
//! budget for the whole crate.
//!
//! Coefficient tables were generated with mpmath at 40 digits
//! (`bernoulli(2j)` and `zeta(k) - 1`) and rounded to the nearest `f64`.

use crate::error::{DomainError, Result};
use crate::real::Real;

/// `B_{2j}` for `j = 1..=20`.
const BERNOULLI_EVEN: [f64; 20] = [
    0.16666666666666666,
    -0.03333333333333333,
    0.023809523809523808,
    -0.03333333333333333,
    0.07575757575757576,
    -0.2531135531135531,
    1.1666666666666667,
    -7.092156862745098,
    54.971177944862156,
    -529.1242424242424,
    6192.123188405797,
    -86580.25311355312,
    1425517.1666666667,
    -27298231.067816094,
    601580873.9006424,
    -15116315767.092157,
    429614643061.1667,
    -13711655205088.332,
    488332318973593.2,
    -1.9296579341940068e+16,
];

/// `ζ(k) − 1` for `k = 2..=40`.
const ZETA_MINUS_ONE: [f64; 39] = [
    0.6449340668482264,
    0.2020569031595943,
    0.08232323371113819,
    0.03692775514336993,
    0.01734306198444914,
    0.008349277381922827,
    0.00407735619794434,
    0.0020083928260822143,
    0.0009945751278180853,
    0.0004941886041194645,
    0.0002460865533080483,
    0.00012271334757848915,
    6.124813505870483e-05,
    3.058823630702049e-05,
    1.528225940865187e-05,
    7.637197637899763e-06,
    3.81729326499984e-06,
    1.908212716553939e-06,
    9.539620338727962e-07,
    4.769329867878064e-07,
    2.38450502727733e-07,
    1.1921992596531106e-07,
    5.960818905125948e-08,
    2.980350351465228e-08,
    1.4901554828365043e-08,
    7.45071178983543e-09,
    3.725334024788457e-09,
    1.862659723513049e-09,
    9.313274324196682e-10,
    4.656629065033784e-10,
    2.3283118336765053e-10,
    1.164155017270052e-10,
    5.820772087902701e-11,
    2.9103850444971e-11,
    1.4551921891041985e-11,
    7.275959835057482e-12,
    3.637979547378651e-12,
    1.818989650307066e-12,
    9.094947840263888e-13,
];

/// Below this the ψ family is shifted upward before the asymptotic series.
pub const ASYMPTOTIC_THRESHOLD: f64 = 10.0;

/// Direct terms summed before the Euler–Maclaurin tail.
pub const EM_DIRECT_TERMS: usize = 16;

/// Upper bound on Bernoulli corrections used anywhere in this module.
pub const MAX_BERNOULLI_TERMS: usize = BERNOULLI_EVEN.len();

fn bernoulli<T: Real>(j: usize) -> T {
    T::lit(BERNOULLI_EVEN[j - 1])
}

fn require_positive<T: Real>(name: &str, x: T) -> Result<()> {
    if x.is_nan() || x <= T::zero() {
        return Err(DomainError::non_positive(format!(
            "{name} = {x} must be > 0"
        )));
    }
    Ok(())
}

fn finite_or_overflow<T: Real>(what: &str, v: T) -> Result<T> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(DomainError::overflow(format!(
            "{what} is not representable"
        )))
    }
}

/// `Σ_{k≥2} (−1)^k (ζ(k) − 1) z^k / k` for `|z| ≤ 1/2`.
fn log_gamma_series_tail<T: Real>(z: T) -> T {
    let eps = T::epsilon();
    let mut sum = T::zero();
    let mut zk = z;
    for (i, zm1) in ZETA_MINUS_ONE.iter().enumerate() {
        let k = i + 2;
        zk = zk * z;
        let term = T::lit(*zm1) * zk / T::from_count(k);
        if k % 2 == 0 {
            sum = sum + term;
        } else {
            sum = sum - term;
        }
        if term.abs() <= eps * sum.abs() * T::lit(0.01) {
            break;
        }
    }
    sum
}

/// `ln Γ(x)` for `x ≥ ASYMPTOTIC_THRESHOLD` by the Stirling series.
fn log_gamma_stirling<T: Real>(x: T) -> T {
    let half = T::lit(0.5);
    let ln_sqrt_2pi = T::lit(0.918_938_533_204_672_8);
    let mut sum = (x - half) * x.ln() - x + ln_sqrt_2pi;
    let inv = x.recip();
    let inv2 = inv * inv;
    let mut pow = inv;
    for j in 1..=10 {
        let denom = T::from_count(2 * j * (2 * j - 1));
        let term = bernoulli::<T>(j) / denom * pow;
        sum = sum + term;
        if term.abs() <= T::epsilon() * sum.abs() * T::lit(0.01) {
            break;
        }
        pow = pow * inv2;
    }
    sum
}

/// Natural logarithm of the classical Gamma function for `x > 0`.
///
/// Near the zeros at 1 and 2 a Taylor expansion in `ζ(k) − 1` keeps the
/// relative error small; elsewhere the Stirling series is used after an
/// upward shift.
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    require_positive("x", x)?;
    if x.is_infinite() {
        return Err(DomainError::overflow("ln Γ(∞)"));
    }
    let one = T::one();
    let half = T::lit(0.5);
    let one_minus_gamma = one - T::euler_gamma();

    if x < half {
        // ln Γ(x) = ln Γ(x + 1) − ln x, with x + 1 in [1, 1.5)
        let z = x;
        let at_one = -z.ln_1p() + z * one_minus_gamma + log_gamma_series_tail(z);
        return Ok(at_one - x.ln());
    }
    if x < T::lit(1.5) {
        let z = x - one;
        return Ok(-z.ln_1p() + z * one_minus_gamma + log_gamma_series_tail(z));
    }
    if x < T::lit(2.5) {
        // ln Γ(2 + z) = ln Γ(1 + z) + ln(1 + z); the ln1p terms cancel.
        let z = x - T::lit(2.0);
        return Ok(z * one_minus_gamma + log_gamma_series_tail(z));
    }
    let threshold = T::lit(ASYMPTOTIC_THRESHOLD);
    if x >= threshold {
        return finite_or_overflow("ln Γ(x)", log_gamma_stirling(x));
    }
    let mut shifted = x;
    let mut product = one;
    while shifted < threshold {
        product = product * shifted;
        shifted = shifted + one;
    }
    Ok(log_gamma_stirling(shifted) - product.ln())
}

/// Digamma `ψ(x) = d/dx ln Γ(x)` for `x > 0`.
pub fn digamma<T: Real>(x: T) -> Result<T> {
    require_positive("x", x)?;
    let one = T::one();
    let threshold = T::lit(ASYMPTOTIC_THRESHOLD);
    let mut shift = T::zero();
    let mut y = x;
    while y < threshold {
        shift = shift + y.recip();
        y = y + one;
    }
    let inv = y.recip();
    let inv2 = inv * inv;
    let mut tail = T::zero();
    let mut pow = inv2;
    for j in 1..=10 {
        let term = bernoulli::<T>(j) / T::from_count(2 * j) * pow;
        tail = tail + term;
        if term.abs() <= T::epsilon() * T::lit(0.01) {
            break;
        }
        pow = pow * inv2;
    }
    Ok(y.ln() - T::lit(0.5) * inv - tail - shift)
}

fn factorial<T: Real>(m: u32) -> T {
    (1..=m).fold(T::one(), |acc, i| acc * T::from_count(i as usize))
}

/// Polygamma `ψ^{(m)}(x)` for `m ≥ 1`, `x > 0`.
///
/// The shift threshold grows with `m` so the asymptotic series stays in
/// its convergent-looking regime.
pub fn polygamma<T: Real>(m: u32, x: T) -> Result<T> {
    if m == 0 {
        return digamma(x);
    }
    require_positive("x", x)?;
    let one = T::one();
    let mf = T::from_count(m as usize);
    let m_fact = factorial::<T>(m);
    if !m_fact.is_finite() {
        return Err(DomainError::overflow(format!("{m}! overflows")));
    }
    let exponent = -(mf + one);
    let threshold = T::lit(ASYMPTOTIC_THRESHOLD).max(T::lit(2.0) * mf);

    let mut direct = T::zero();
    let mut y = x;
    while y < threshold {
        direct = direct + y.powf(exponent);
        y = y + one;
    }

    // (m−1)!/y^m + m!/(2 y^{m+1}) + Σ_j B_{2j} (2j+m−1)!/(2j)! / y^{2j+m}
    let inv = y.recip();
    let inv2 = inv * inv;
    let m_minus_1_fact = m_fact / mf;
    let y_pow_m = y.powf(mf);
    let mut asym = m_minus_1_fact / y_pow_m + m_fact * T::lit(0.5) * inv / y_pow_m;
    // (2j+m−1)!/(2j)! at j = 1
    let mut ratio =
        (1..=m + 1).fold(T::one(), |acc, i| acc * T::from_count(i as usize)) / T::lit(2.0);
    let mut pow = inv2 / y_pow_m;
    for j in 1..=MAX_BERNOULLI_TERMS {
        let term = bernoulli::<T>(j) * ratio * pow;
        asym = asym + term;
        if term.abs() <= T::epsilon() * asym.abs() * T::lit(0.01) {
            break;
        }
        let jj = T::from_count(2 * j);
        ratio = ratio * (jj + mf) * (jj + mf + one) / ((jj + one) * (jj + T::lit(2.0)));
        pow = pow * inv2;
    }
    let magnitude = m_fact * direct + asym;
    let signed = if m % 2 == 1 { magnitude } else { -magnitude };
    finite_or_overflow("ψ^(m)(x)", signed)
}

/// Hurwitz zeta `ζ(s, q) = Σ_{n≥0} (q + n)^{−s}` for `s > 1`, `q > 0`.
pub fn hurwitz_zeta<T: Real>(s: T, q: T) -> Result<T> {
    if s.is_nan() || s <= T::one() {
        return Err(DomainError::divergent(format!(
            "ζ(s, q) diverges for s = {s} ≤ 1"
        )));
    }
    require_positive("q", q)?;
    let one = T::one();
    let mut direct = T::zero();
    let mut a = q;
    for _ in 0..EM_DIRECT_TERMS {
        direct = direct + a.powf(-s);
        a = a + one;
    }
    if !direct.is_finite() {
        return Err(DomainError::overflow(format!(
            "ζ(s, q) overflows at q = {q}"
        )));
    }
    // a = q + N
    let a_pow = a.powf(-s);
    let mut tail = a * a_pow / (s - one) + T::lit(0.5) * a_pow;
    let inv2 = (a * a).recip();
    // rising factorial s(s+1)…(s+2j−2) / (2j)!, times a^{−s−2j+1}
    let mut coeff = s / T::lit(2.0);
    let mut pow = a_pow / a;
    for j in 1..=MAX_BERNOULLI_TERMS {
        let term = bernoulli::<T>(j) * coeff * pow;
        tail = tail + term;
        if term.abs() <= T::epsilon() * (direct + tail).abs() * T::lit(0.01) {
            break;
        }
        let jj = T::from_count(2 * j);
        coeff = coeff * (s + jj - one) * (s + jj) / ((jj + one) * (jj + T::lit(2.0)));
        pow = pow * inv2;
    }
    finite_or_overflow("ζ(s, q)", direct + tail)
}

/// Riemann zeta `ζ(s)` for `s > 1`.
pub fn riemann_zeta<T: Real>(s: T) -> Result<T> {
    hurwitz_zeta(s, T::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    const EULER: f64 = 0.5772156649015329;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn ln_gamma_known_values() {
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert!(rel(ln_gamma(5.0).unwrap(), 24f64.ln()) < 1e-14);
        assert!(rel(ln_gamma(0.5).unwrap(), 0.5723649429247001) < 1e-14);
        assert!(ln_gamma(2.0f64).unwrap().abs() < 1e-16);
    }

    #[test]
    fn ln_gamma_matches_factorials() {
        let mut ln_fact = 0.0f64;
        for n in 1..170 {
            // Γ(n + 1) = n!
            ln_fact += (n as f64).ln();
            let got = ln_gamma(n as f64 + 1.0).unwrap();
            assert!((got - ln_fact).abs() <= 1e-13 * ln_fact.max(1.0), "n = {n}");
        }
    }

    #[test]
    fn ln_gamma_near_zeros_is_relative_accurate() {
        // ln Γ(1 + z) ≈ −γ z + ζ(2) z²/2 for tiny z
        let z = 1e-8;
        let expect = -EULER * z + (PI * PI / 12.0) * z * z;
        assert!(rel(ln_gamma(1.0 + z).unwrap(), expect) < 1e-7);
        let expect2 = (1.0 - EULER) * z;
        assert!(rel(ln_gamma(2.0 + z).unwrap(), expect2) < 1e-7);
    }

    #[test]
    fn ln_gamma_recurrence() {
        for &x in &[0.1, 0.5, 1.7, 3.3, 9.9] {
            let d = ln_gamma(x + 1.0).unwrap() - ln_gamma(x).unwrap() - f64::ln(x);
            assert!(d.abs() <= 1e-12, "x = {x}: {d}");
        }
    }

    #[test]
    fn ln_gamma_rejects_non_positive() {
        use crate::error::ErrorKind;
        assert_eq!(
            ln_gamma(0.0).unwrap_err().kind,
            ErrorKind::NonPositiveArgument
        );
        assert_eq!(
            ln_gamma(-2.5).unwrap_err().kind,
            ErrorKind::NonPositiveArgument
        );
        assert!(ln_gamma(f64::NAN).is_err());
    }

    #[test]
    fn digamma_known_values() {
        assert!(rel(digamma(1.0).unwrap(), -EULER) < 1e-14);
        assert!(rel(digamma(2.0).unwrap(), 1.0 - EULER) < 1e-14);
        assert!(rel(digamma(0.5).unwrap(), -EULER - 2.0 * LN_2) < 1e-14);
        // −1/x − γ + ζ(2)x − ζ(3)x² + ζ(4)x³ − …
        assert!(rel(digamma(1e-3).unwrap(), -1000.5755719318103) < 1e-13);
    }

    #[test]
    fn digamma_strictly_increasing() {
        let mut prev = f64::NEG_INFINITY;
        let mut x = 0.01;
        while x <= 100.0 {
            let v = digamma(x).unwrap();
            assert!(v > prev);
            prev = v;
            x *= 1.07;
        }
    }

    #[test]
    fn polygamma_known_values() {
        let zeta2 = PI * PI / 6.0;
        let zeta3 = 1.2020569031595942;
        assert!(rel(polygamma(1, 1.0).unwrap(), zeta2) < 1e-13);
        assert!(rel(polygamma(1, 2.0).unwrap(), zeta2 - 1.0) < 1e-13);
        assert!(rel(polygamma(2, 1.0).unwrap(), -2.0 * zeta3) < 1e-13);
        // ψ'''(1) = 6 ζ(4) = π⁴/15
        assert!(rel(polygamma(3, 1.0).unwrap(), PI.powi(4) / 15.0) < 1e-13);
    }

    #[test]
    fn polygamma_sign_pattern() {
        for m in 1..=5u32 {
            for &x in &[1e-3, 0.2, 1.0, 3.7, 12.0, 150.0] {
                let v = polygamma(m, x).unwrap();
                let expected_positive = m % 2 == 1;
                assert_eq!(v > 0.0, expected_positive, "m = {m}, x = {x}");
            }
        }
    }

    #[test]
    fn polygamma_matches_brute_force_sum() {
        // Partial sums with the integral tail bound, evaluated in the test.
        for m in 1..=4u32 {
            for &x in &[0.3, 2.2, 11.5] {
                let n = 200_000usize;
                let mut s = 0.0;
                for i in (0..n).rev() {
                    s += (x + i as f64).powi(-(m as i32 + 1));
                }
                let last = x + n as f64;
                s += last.powi(-(m as i32)) / m as f64 + 0.5 * last.powi(-(m as i32 + 1));
                let fact: f64 = (1..=m).map(f64::from).product();
                let expect = if m % 2 == 1 { fact * s } else { -fact * s };
                assert!(
                    rel(polygamma(m, x).unwrap(), expect) < 1e-11,
                    "m = {m}, x = {x}"
                );
            }
        }
    }

    #[test]
    fn riemann_zeta_values() {
        assert!(rel(riemann_zeta(2.0).unwrap(), PI * PI / 6.0) < 1e-14);
        assert!(rel(riemann_zeta(4.0).unwrap(), PI.powi(4) / 90.0) < 1e-14);
        // partial sum to 10⁶ plus ∫ tail and half-term correction
        let n = 1_000_000u64;
        let mut s = 0.0;
        for i in (1..=n).rev() {
            s += (i as f64).powi(-3);
        }
        let nf = n as f64;
        s += 0.5 / (nf * nf) - 0.5 / nf.powi(3);
        assert!(rel(riemann_zeta(3.0).unwrap(), s) < 1e-12);
        assert!(rel(riemann_zeta(3.0).unwrap(), 1.2020569031595942) < 1e-14);
    }

    #[test]
    fn zeta_domain_errors() {
        use crate::error::ErrorKind;
        assert_eq!(
            riemann_zeta(1.0).unwrap_err().kind,
            ErrorKind::DivergentSeries
        );
        assert_eq!(
            hurwitz_zeta(0.5, 1.0).unwrap_err().kind,
            ErrorKind::DivergentSeries
        );
        assert_eq!(
            hurwitz_zeta(2.0, 0.0).unwrap_err().kind,
            ErrorKind::NonPositiveArgument
        );
    }

    #[test]
    fn hurwitz_values() {
        assert!(rel(hurwitz_zeta(2.0, 1.0).unwrap(), PI * PI / 6.0) < 1e-14);
        assert!(rel(hurwitz_zeta(2.0, 0.5).unwrap(), PI * PI / 2.0) < 1e-13);
        assert!(rel(hurwitz_zeta(2.0, 2.0).unwrap(), PI * PI / 6.0 - 1.0) < 1e-13);
    }

    #[test]
    fn hurwitz_shift() {
        for &s in &[1.5, 2.0, 4.0] {
            for &q in &[0.3, 1.0, 7.0] {
                let lhs = hurwitz_zeta(s, q).unwrap() - hurwitz_zeta(s, q + 1.0).unwrap();
                assert!(rel(lhs, f64::powf(q, -s)) < 1e-11, "s = {s}, q = {q}");
            }
        }
    }

    #[test]
    fn single_precision_is_usable() {
        assert!((ln_gamma(5.0f32).unwrap() - 24f32.ln()).abs() < 1e-5);
        assert!((digamma(1.0f32).unwrap() + 0.577_215_7).abs() < 1e-5);
        assert!((riemann_zeta(2.0f32).unwrap() - 1.644_934).abs() < 1e-5);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn ln_gamma_recurrence_holds(x in 1e-3f64..500.0) {
                let d = ln_gamma(x + 1.0).unwrap() - ln_gamma(x).unwrap() - x.ln();
                let scale = ln_gamma(x + 1.0).unwrap().abs().max(1.0);
                prop_assert!(d.abs() <= 2e-14 * scale, "x = {}, d = {}", x, d);
            }

            #[test]
            fn digamma_recurrence_holds(x in 1e-3f64..500.0) {
                let d = digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x;
                prop_assert!(d.abs() <= 1e-13 * (1.0 / x).max(1.0));
            }
        }
    }
}
