//! Weyl-law constants: the series c_n by two independent methods, the
//! closed-form table, W(H_n), W(R^k), W(H_n x R^k), and product composition.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::specfun::{exp_tracked, hurwitz_zeta, lng};
use crate::value::{Method, Value};

pub const CN_SERIES_N_MAX: u32 = 13;
pub const CN_HURWITZ_N_MAX: u32 = 40;
const SERIES_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CnMethod {
    DirectSeries,
    HurwitzReduction,
    ClosedFormTable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CnResult {
    pub n: u32,
    pub value: Value,
    pub method: CnMethod,
}

impl CnResult {
    pub fn new(n: u32, value: Value, method: CnMethod) -> Result<Self> {
        if value.estimate <= 0.0 {
            return Err(Error::mismatch("CnResult", "value must be positive"));
        }
        Ok(CnResult { n, value, method })
    }
}

/// c_n = sum_{m >= 0} binom(m+n-1, m) (2m+n)^(-(n+1)), summed directly to a
/// tracked tail bound. For M >= n the tail is below 1/(4 (n-1)! (M-1)),
/// since binom(m+n-1, n-1) <= (2m)^(n-1)/(n-1)! once m >= n.
pub fn cn_series(n: u32, tol: f64) -> Result<Value> {
    if !(1..=CN_SERIES_N_MAX).contains(&n) {
        return Err(Error::domain("cn_series", format!("n = {n} outside 1..=13")));
    }
    if !(1e-8..=1e-3).contains(&tol) {
        return Err(Error::domain("cn_series", format!("tol = {tol} outside [1e-8, 1e-3]")));
    }
    let mut factorial = 1.0f64; // (n-1)!
    for i in 2..n {
        factorial *= i as f64;
    }
    let needed = (1.0 + 1.0 / (4.0 * factorial * tol)).ceil();
    if needed > SERIES_BUDGET as f64 {
        return Err(Error::budget(
            "cn_series",
            format!("{needed:.0} terms exceed the {SERIES_BUDGET} budget"),
        ));
    }
    let m_top = (needed as u64).max(n as u64);
    let tail = 1.0 / (4.0 * factorial * (m_top as f64 - 1.0));

    // smallest terms first, compensated
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for m in (0..m_top).rev() {
        let mf = m as f64;
        let mut binom = 1.0f64; // binom(m+n-1, n-1); equals 1 for n = 1
        for i in 1..n {
            binom *= (mf + i as f64) / i as f64;
        }
        let u = 2.0 * mf + n as f64;
        let term = binom * u.powi(-(n as i32 + 1));
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let rounding = (n as f64 + 4.0) * f64::EPSILON * sum;
    Ok(Value::new(sum, tail + rounding, Method::Series))
}

/// Expand binom(m+n-1, n-1) = prod_{i=1}^{n-1} (m+i)/(n-1)! as an exact
/// rational polynomial in u = 2m + n, so that
/// c_n = sum_j a_j 2^(-(n+1-j)) zeta(n+1-j, n/2).
/// Coefficients are exact big rationals; they overflow any fixed integer
/// width near n = 40 (the elementary symmetric sums reach ~4e45).
fn cn_polynomial(n: u32) -> Vec<BigRational> {
    // prod_{i=1}^{n-1} (u + (2i - n)) over integers
    let mut coeffs: Vec<BigInt> = vec![BigInt::one()];
    for i in 1..n {
        let shift = BigInt::from(2 * i as i64 - n as i64);
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] += c * &shift;
        }
        coeffs = next;
    }
    let mut den = BigInt::one();
    for i in 1..n {
        den *= BigInt::from(i);
    }
    den *= BigInt::from(2).pow(n - 1);
    coeffs
        .into_iter()
        .map(|c| BigRational::new(c, den.clone()))
        .collect()
}

/// c_n by the exact Hurwitz-zeta reduction; relative error well below 1e-10
/// for the full 1..=40 range (the cancellation factor of the reduction stays
/// below ~65).
pub fn cn_hurwitz(n: u32) -> Result<Value> {
    if n < 1 {
        return Err(Error::domain("cn_hurwitz", "n must be >= 1"));
    }
    if n > CN_HURWITZ_N_MAX {
        return Err(Error::overflow(
            "cn_hurwitz",
            format!("exact coefficients beyond n = {CN_HURWITZ_N_MAX} exceed the width budget"),
        ));
    }
    let coeffs = cn_polynomial(n);
    let a = n as f64 / 2.0;
    let mut sum = 0.0f64;
    let mut err = 0.0f64;
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = n + 1 - j as u32; // >= 2 since j <= n-1
        let z = hurwitz_zeta(s, a)?;
        let cf = c.to_f64().ok_or_else(|| {
            Error::overflow("cn_hurwitz", format!("coefficient at u^{j} not representable"))
        })?;
        let weight = cf * 2f64.powi(-(s as i32));
        let term = weight * z.estimate;
        sum += term;
        // propagated zeta error plus conversion/multiply/accumulate rounding
        err += weight.abs() * z.err + 6.0 * f64::EPSILON * term.abs();
    }
    err += coeffs.len() as f64 * f64::EPSILON * sum.abs();
    Ok(Value::new(sum, err, Method::Series))
}

/// The printed closed forms, polynomials in pi^2, for n = 1..=10.
/// The err field carries the rigorous Horner bound, which is dominated by
/// the intrinsic cancellation of the printed polynomial (condition ~6e5 at
/// n = 9).
pub fn cn_closed_form(n: u32) -> Result<Value> {
    const TABLE: [(&[f64], f64); 10] = [
        (&[1.0], 8.0),
        (&[1.0], 48.0),
        (&[12.0, -1.0], 768.0),
        (&[15.0, -1.0], 17280.0),
        (&[120.0, -100.0, 9.0], 368640.0),
        (&[315.0, -105.0, 8.0], 29030400.0),
        (&[6720.0, -19600.0, 14504.0, -1275.0], 2477260800.0),
        (&[1575.0, -1470.0, 490.0, -36.0], 24385536000.0),
        (&[40320.0, -282240.0, 663264.0, -439144.0, 37975.0], 3329438515200.0),
        (&[3465.0, -6930.0, 6006.0, -1804.0, 128.0], 15450675609600.0),
    ];
    if !(1..=10).contains(&n) {
        return Err(Error::domain(
            "cn_closed_form",
            format!("no printed closed form for n = {n}; only 1..=10"),
        ));
    }
    let (coeffs, den) = TABLE[n as usize - 1];
    let pp = std::f64::consts::PI * std::f64::consts::PI;
    let mut acc = 0.0f64;
    let mut mag = 0.0f64;
    for &c in coeffs.iter().rev() {
        acc = acc * pp + c;
        mag = mag * pp + c.abs();
    }
    let est = acc * pp / den;
    let err = (2.0 * coeffs.len() as f64 + 2.0) * f64::EPSILON * mag * pp / den;
    Ok(Value::new(est, err, Method::ExactFormula))
}

/// W(H_n) = c_n / (2 (n+1) (2 pi)^(n+1)).
pub fn weyl_heisenberg(n: u32) -> Result<Value> {
    if !(1..=CN_SERIES_N_MAX).contains(&n) {
        return Err(Error::domain("weyl_heisenberg", format!("n = {n} outside 1..=13")));
    }
    let cn = cn_hurwitz(n)?;
    let denom = 2.0 * (n as f64 + 1.0) * (2.0 * std::f64::consts::PI).powi(n as i32 + 1);
    Ok(cn.scale(1.0 / denom))
}

/// W(R^k) = (4 pi)^(-k/2) / Gamma(k/2 + 1).
pub fn weyl_euclidean(k: u32) -> Result<Value> {
    if !(1..=300).contains(&k) {
        return Err(Error::domain("weyl_euclidean", format!("k = {k} outside 1..=300")));
    }
    let kf = k as f64;
    let lnv = -0.5 * kf * (4.0 * std::f64::consts::PI).ln() - lng(0.5 * kf + 1.0);
    Ok(exp_tracked(lnv))
}

/// W(H_n x R^k) = W(H_n) (4 pi)^(-k/2) Gamma(n+2) / Gamma((2n+k+4)/2).
pub fn weyl_hn_rk(g: GroupSpec) -> Result<Value> {
    if g.n < 1 {
        return Err(Error::domain("weyl_hn_rk", "requires n >= 1; use weyl_euclidean for n = 0"));
    }
    if g.k > 300 {
        return Err(Error::domain("weyl_hn_rk", format!("k = {} outside 0..=300", g.k)));
    }
    let base = weyl_heisenberg(g.n)?;
    if g.k == 0 {
        return Ok(base);
    }
    let kf = g.k as f64;
    let nf = g.n as f64;
    let lnfac =
        -0.5 * kf * (4.0 * std::f64::consts::PI).ln() + lng(nf + 2.0) - lng(nf + 2.0 + 0.5 * kf);
    Ok(base.mul(exp_tracked(lnfac)))
}

/// Product-group composition:
/// W(G1 x G2) = W(G1) W(G2) Gamma(Q1/2+1) Gamma(Q2/2+1) / Gamma(Q/2+1).
pub fn weyl_product(w1: Value, q1: f64, w2: Value, q2: f64) -> Result<Value> {
    if !(q1 >= 1.0) || !(q2 >= 0.0) {
        return Err(Error::domain("weyl_product", format!("dimensions q1 = {q1}, q2 = {q2}")));
    }
    if w1.estimate <= 0.0 || w2.estimate <= 0.0 {
        return Err(Error::domain("weyl_product", "Weyl constants must be positive"));
    }
    let lnfac = lng(0.5 * q1 + 1.0) + lng(0.5 * q2 + 1.0) - lng(0.5 * (q1 + q2) + 1.0);
    Ok(w1.mul(w2).mul(exp_tracked(lnfac)))
}

/// theta_n(m) = ((m+n-1)/(2m+n)) (1 - 1/(2m+n))^n, whose infimum over m
/// controls the quotient c_n / c_{n-1} from below.
pub fn theta_ratio(n: u32, m: u64) -> f64 {
    let nf = n as f64;
    let mf = m as f64;
    let u = 2.0 * mf + nf;
    (mf + nf - 1.0) / u * (nf * (-1.0 / u).ln_1p()).exp()
}

/// (n-1)^(-1) min_{0 <= m <= 1e5} theta_n(m), a lower bound for c_n/c_{n-1}.
pub fn cn_quotient_lower_bound(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("cn_quotient_lower_bound", "n must be >= 2"));
    }
    let mut min = f64::INFINITY;
    for m in 0..=100_000u64 {
        let t = theta_ratio(n, m);
        if t < min {
            min = t;
        }
    }
    Ok(min / (n as f64 - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn exact_low_n() {
        let c1 = cn_hurwitz(1).unwrap();
        assert!((c1.estimate - PI * PI / 8.0).abs() < 1e-12 * c1.estimate);
        let c2 = cn_hurwitz(2).unwrap();
        assert!((c2.estimate - PI * PI / 48.0).abs() < 1e-12 * c2.estimate);
    }

    #[test]
    fn series_matches_reduction() {
        for n in 1..=13 {
            let s = cn_series(n, 1e-7).unwrap();
            let h = cn_hurwitz(n).unwrap();
            let diff = (s.estimate - h.estimate).abs();
            assert!(diff <= s.err + h.err, "n = {n}: diff {diff:.2e} err {:.2e}", s.err + h.err);
        }
    }

    #[test]
    fn closed_forms_match_reduction() {
        for n in 1..=10 {
            let h = cn_hurwitz(n).unwrap();
            let c = cn_closed_form(n).unwrap();
            let rel = (h.estimate - c.estimate).abs() / c.estimate;
            assert!(rel <= 1e-10, "n = {n}: rel {rel:.2e}");
            assert!((h.estimate - c.estimate).abs() <= h.err + c.err, "n = {n} combined err");
        }
        assert!(cn_closed_form(11).is_err());
    }

    #[test]
    fn printed_accuracy_examples() {
        let c3 = cn_series(3, 1e-6).unwrap();
        assert!((c3.estimate - 2.7378e-2).abs() < 5e-4 * 2.7378e-2 + c3.err);
        let c4 = cn_hurwitz(4).unwrap();
        assert!((c4.estimate - 2.9303e-3).abs() < 5e-4 * 2.9303e-3);
        let c10 = cn_hurwitz(10).unwrap();
        assert!((c10.estimate - 1.8749e-10).abs() < 5e-4 * 1.8749e-10);
    }

    #[test]
    fn series_budget_and_domain() {
        assert!(cn_series(0, 1e-6).is_err());
        assert!(cn_series(14, 1e-6).is_err());
        assert!(cn_series(1, 1e-9).is_err()); // tol below the precondition
        assert!(cn_hurwitz(41).is_err());
    }

    #[test]
    fn hurwitz_reduction_far_range() {
        // the reduction keeps working to n = 40 without exact-width overflow
        let c40 = cn_hurwitz(40).unwrap();
        assert!(c40.estimate > 0.0 && c40.estimate < 1e-40);
    }

    #[test]
    fn weyl_values() {
        let w1 = weyl_heisenberg(1).unwrap();
        assert!((w1.estimate - 1.0 / 128.0).abs() < 1e-12 / 128.0);
        let w2 = weyl_heisenberg(2).unwrap();
        assert!((w2.estimate - 1.0 / (2304.0 * PI)).abs() < 1e-12 / (2304.0 * PI));
        // W(H_3) = c_3 / (8 (2 pi)^4)
        let w3 = weyl_heisenberg(3).unwrap();
        let want = cn_closed_form(3).unwrap().estimate / (8.0 * (2.0 * PI).powi(4));
        assert!((w3.estimate - want).abs() < 1e-12 * want);
    }

    #[test]
    fn weyl_euclidean_values() {
        assert!((weyl_euclidean(2).unwrap().estimate - 1.0 / (4.0 * PI)).abs() < 1e-15);
        assert!((weyl_euclidean(1).unwrap().estimate - 1.0 / PI).abs() < 1e-15);
        let w4 = weyl_euclidean(4).unwrap();
        assert!((w4.estimate - (4.0 * PI).powi(-2) / 2.0).abs() < 1e-16);
    }

    #[test]
    fn eigenvalue_count_oracle_k1() {
        // Dirichlet eigenvalues of -d^2/dx^2 on a unit interval are (m pi)^2;
        // the counting function must track W(R^1) lambda^(1/2).
        let w = weyl_euclidean(1).unwrap().estimate;
        for lam in [1e4f64, 1e6, 1e8] {
            let count = (lam.sqrt() / PI).floor();
            let rel = (count / lam.sqrt() - w).abs();
            assert!(rel <= 1.1 / lam.sqrt(), "lambda = {lam}");
        }
    }

    #[test]
    fn hn_rk_values() {
        let g = GroupSpec::new(1, 0).unwrap();
        assert_eq!(weyl_hn_rk(g).unwrap().estimate, weyl_heisenberg(1).unwrap().estimate);
        let g12 = GroupSpec::new(1, 2).unwrap();
        let want = 1.0 / (1536.0 * PI);
        assert!((weyl_hn_rk(g12).unwrap().estimate - want).abs() < 1e-12 * want);
    }

    #[test]
    fn product_composition_coherence() {
        for n in 1..=5u32 {
            for k in 1..=10u32 {
                let direct = weyl_hn_rk(GroupSpec::new(n, k).unwrap()).unwrap();
                let composed = weyl_product(
                    weyl_heisenberg(n).unwrap(),
                    (2 * n + 2) as f64,
                    weyl_euclidean(k).unwrap(),
                    k as f64,
                )
                .unwrap();
                let rel = (direct.estimate - composed.estimate).abs() / direct.estimate;
                assert!(rel < 1e-12, "(n,k) = ({n},{k}): rel {rel:.2e}");
            }
        }
    }

    #[test]
    fn product_trivial_factor() {
        let w = Value::exact(0.25);
        let out = weyl_product(w, 5.0, Value::literal(1.0), 0.0).unwrap();
        assert!((out.estimate - 0.25).abs() < 1e-16);
    }

    #[test]
    fn product_two_heisenberg() {
        // W(H_1) W(H_2) Gamma(3) Gamma(4) / Gamma(6)
        let got = weyl_product(
            weyl_heisenberg(1).unwrap(),
            4.0,
            weyl_heisenberg(2).unwrap(),
            6.0,
        )
        .unwrap();
        let want = 1.0793385355081878e-7;
        assert!((got.estimate - want).abs() < 1e-12 * want);
    }

    #[test]
    fn series_quotient_bound() {
        for n in 2..=13 {
            let lhs = cn_hurwitz(n).unwrap().estimate / cn_hurwitz(n - 1).unwrap().estimate;
            let rhs = cn_quotient_lower_bound(n).unwrap();
            assert!(lhs >= rhs, "n = {n}: {lhs} < {rhs}");
        }
    }
}
