//! Sharp Sobolev and Gagliardo-Nirenberg constants and the dimensional
//! lifting lower bounds for the Sobolev constant on H_n x R^k.

use serde::{Deserialize, Serialize};

use crate::bound::{Bound, Direction, Hypothesis, Quantity};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::specfun::{exp_tracked, lng};
use crate::value::Value;

/// Interpolation-inequality parameters on R^k; theta is fixed by scaling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GnParams {
    pub k: u32,
    pub q: f64,
    pub theta: f64,
}

impl GnParams {
    pub fn new(k: u32, q: f64) -> Result<Self> {
        if k < 1 {
            return Err(Error::domain("GnParams", "k must be >= 1"));
        }
        if !(q > 2.0) || !q.is_finite() {
            return Err(Error::domain("GnParams", format!("q = {q} must exceed 2")));
        }
        if k >= 3 {
            let qmax = 2.0 * k as f64 / (k as f64 - 2.0);
            if q > qmax * (1.0 + 1e-12) {
                return Err(Error::domain(
                    "GnParams",
                    format!("q = {q} above the critical exponent {qmax} for k = {k}"),
                ));
            }
        }
        let theta = k as f64 * (0.5 - 1.0 / q);
        // theta = 1 exactly at the critical exponent; above it the
        // interpolation inequality has no meaning
        if !(0.0..=1.0 + 1e-12).contains(&theta) {
            return Err(Error::domain("GnParams", format!("theta = {theta} outside [0, 1]")));
        }
        Ok(GnParams { k, q, theta })
    }
}

/// C_Sob(H_n) = 4 pi n^2 / (2^(2n) n!)^(1/(n+1)).
pub fn sobolev_heisenberg(n: u32) -> Result<Value> {
    if !(1..=100).contains(&n) {
        return Err(Error::domain("sobolev_heisenberg", format!("n = {n} outside 1..=100")));
    }
    let nf = n as f64;
    let lnv = (4.0 * std::f64::consts::PI * nf * nf).ln()
        - (2.0 * nf * std::f64::consts::LN_2 + lng(nf + 1.0)) / (nf + 1.0);
    Ok(exp_tracked(lnv))
}

/// C_Sob(R^k) = k(k-2)/4 * 2^(2/k) pi^(1+1/k) Gamma((k+1)/2)^(-2/k), k >= 3.
pub fn sobolev_euclidean(k: u32) -> Result<Value> {
    if !(3..=300).contains(&k) {
        return Err(Error::domain("sobolev_euclidean", format!("k = {k} outside 3..=300")));
    }
    let kf = k as f64;
    let lnv = (kf * (kf - 2.0) / 4.0).ln()
        + 2.0 / kf * std::f64::consts::LN_2
        + (1.0 + 1.0 / kf) * std::f64::consts::PI.ln()
        - 2.0 / kf * lng((kf + 1.0) / 2.0);
    Ok(exp_tracked(lnv))
}

/// The sharp one-dimensional Gagliardo-Nirenberg constant
/// S_q = ((q+2)^(q+2) / ((q-2)^(q-2) 2^(2(q+2))))^(1/(2q))
///       (sqrt(pi) Gamma(q/(q-2)) / Gamma(q/(q-2) + 1/2))^((q-2)/q).
pub fn gn_nagy(q: f64) -> Result<Value> {
    if !(q > 2.0 && q <= 1e3) || !q.is_finite() {
        return Err(Error::domain("gn_nagy", format!("q = {q} outside (2, 1000]")));
    }
    let r = q / (q - 2.0);
    let ln_first = ((q + 2.0) * (q + 2.0).ln()
        - (q - 2.0) * (q - 2.0).ln()
        - 2.0 * (q + 2.0) * std::f64::consts::LN_2)
        / (2.0 * q);
    let ln_second =
        (q - 2.0) / q * (0.5 * std::f64::consts::PI.ln() + lng(r) - lng(r + 0.5));
    Ok(exp_tracked(ln_first + ln_second))
}

/// The same constant rewritten at q = 2(Q+1)/(Q-1):
/// (Q^Q / (4 (Q-1)^(Q-1)))^(1/(Q+1)) (sqrt(pi) Gamma((Q+1)/2)/Gamma((Q+2)/2))^(2/(Q+1)).
pub fn gn_nagy_q(big_q: f64) -> Result<Value> {
    if !(big_q > 1.0) || !big_q.is_finite() {
        return Err(Error::domain("gn_nagy_q", format!("Q = {big_q} must exceed 1")));
    }
    let q = big_q;
    let ln_first = (q * q.ln() - 2.0 * std::f64::consts::LN_2 - (q - 1.0) * (q - 1.0).ln())
        / (q + 1.0);
    let ln_second = 2.0 / (q + 1.0)
        * (0.5 * std::f64::consts::PI.ln() + lng((q + 1.0) / 2.0) - lng((q + 2.0) / 2.0));
    Ok(exp_tracked(ln_first + ln_second))
}

/// Lower bound C_GN_q(R^k) >= (C_Sob(R^k))^(k(q-2)/(2q)) for k >= 3 and
/// 2 <= q <= 2k/(k-2).
pub fn gn_from_sobolev(k: u32, q: f64) -> Result<Value> {
    if k < 3 {
        return Err(Error::domain("gn_from_sobolev", format!("k = {k} must be >= 3")));
    }
    let qmax = 2.0 * k as f64 / (k as f64 - 2.0);
    if !(2.0..=1e12).contains(&q) || q > qmax * (1.0 + 1e-12) {
        return Err(Error::domain(
            "gn_from_sobolev",
            format!("q = {q} outside [2, {qmax}] for k = {k}"),
        ));
    }
    let exponent = k as f64 * (q - 2.0) / (2.0 * q);
    Ok(sobolev_euclidean(k)?.powf(exponent))
}

fn lift_factor(big_q: f64, k: f64) -> f64 {
    // (Q+k) / (Q^(Q/(Q+k)) k^(k/(Q+k))) in log space
    ((big_q + k).ln() - (big_q * big_q.ln() + k * k.ln()) / (big_q + k)).exp()
}

/// Lifting lower bound for C_Sob(H_n x R^k), k != 2:
/// C_GN_q(R^k) (C_Sob(H_n))^(Q/(Q+k)) (Q+k) / (Q^(Q/(Q+k)) k^(k/(Q+k))),
/// with Q = 2n+2 and q = 2(Q+k)/(Q+k-2). For k = 1 the explicit
/// one-dimensional constant applies; for k >= 3 the constant is bounded by
/// the Euclidean Sobolev route. k = 2 has no explicit constant.
pub fn sobolev_lift(g: GroupSpec) -> Result<Bound> {
    if g.n < 1 || g.k < 1 {
        return Err(Error::domain("sobolev_lift", format!("requires n, k >= 1, got {g}")));
    }
    if g.k == 2 {
        return Err(Error::route_unavailable(
            "sobolev_lift",
            "no explicit Gagliardo-Nirenberg constant for k = 2",
        ));
    }
    let big_q = (2 * g.n + 2) as f64;
    let kf = g.k as f64;
    let (gn, gn_op) = if g.k == 1 {
        (gn_nagy_q(big_q)?, "gn_nagy_q")
    } else {
        let q = 2.0 * (big_q + kf) / (big_q + kf - 2.0);
        (gn_from_sobolev(g.k, q)?, "gn_from_sobolev")
    };
    let base = sobolev_heisenberg(g.n)?.powf(big_q / (big_q + kf));
    let value = gn.mul(base).scale(lift_factor(big_q, kf));
    Bound::new(
        Quantity::SobolevConst,
        Direction::Lower,
        value,
        Hypothesis::Unconditional,
        vec!["sobolev_lift".into(), gn_op.into(), "sobolev_heisenberg".into()],
    )
}

/// Symmetric form of the lift for k >= 3:
/// (C_Sob(R^k))^(k/(Q+k)) (C_Sob(H_n))^(Q/(Q+k)) (Q+k)/(Q^(Q/(Q+k)) k^(k/(Q+k))).
pub fn sobolev_lift_symmetric(g: GroupSpec) -> Result<Bound> {
    if g.n < 1 || g.k < 3 {
        return Err(Error::domain(
            "sobolev_lift_symmetric",
            format!("requires n >= 1 and k >= 3, got {g}"),
        ));
    }
    let big_q = (2 * g.n + 2) as f64;
    let kf = g.k as f64;
    let value = sobolev_euclidean(g.k)?
        .powf(kf / (big_q + kf))
        .mul(sobolev_heisenberg(g.n)?.powf(big_q / (big_q + kf)))
        .scale(lift_factor(big_q, kf));
    Bound::new(
        Quantity::SobolevConst,
        Direction::Lower,
        value,
        Hypothesis::Unconditional,
        vec![
            "sobolev_lift_symmetric".into(),
            "sobolev_euclidean".into(),
            "sobolev_heisenberg".into(),
        ],
    )
}

/// General product-group Sobolev lower bound:
/// C_Sob(G1 x G2) >= C1^(Q1/Q) C2^(Q2/Q) Q / (Q1^(Q1/Q) Q2^(Q2/Q)),
/// both homogeneous dimensions >= 3.
pub fn product_sobolev(c1: Value, q1: f64, c2: Value, q2: f64) -> Result<Value> {
    if !(q1 >= 3.0 && q2 >= 3.0) {
        return Err(Error::domain(
            "product_sobolev",
            format!("homogeneous dimensions {q1}, {q2} must both be >= 3"),
        ));
    }
    let q = q1 + q2;
    Ok(c1.powf(q1 / q).mul(c2.powf(q2 / q)).scale(lift_factor(q1, q2)))
}

/// lim_{q -> 2} S_q^GN(R^k)^(-q/(q-2)) = (2/(pi e k))^(k/2).
pub fn wangzhang_limit(k: u32) -> Result<Value> {
    if !(1..=300).contains(&k) {
        return Err(Error::domain("wangzhang_limit", format!("k = {k} outside 1..=300")));
    }
    let kf = k as f64;
    let lnv = 0.5 * kf * (2.0 / (std::f64::consts::PI * std::f64::consts::E * kf)).ln();
    Ok(exp_tracked(lnv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn jerison_lee_values() {
        let s1 = sobolev_heisenberg(1).unwrap();
        assert!((s1.estimate - 2.0 * PI).abs() < 1e-12 * s1.estimate);
        // n = 2: 16 pi / 32^(1/3)
        let s2 = sobolev_heisenberg(2).unwrap();
        let want = 16.0 * PI / 32f64.powf(1.0 / 3.0);
        assert!((s2.estimate - want).abs() < 1e-12 * want);
        // n = 3: 36 pi / (2^6 * 6)^(1/4)
        let s3 = sobolev_heisenberg(3).unwrap();
        let want3 = 36.0 * PI / 384f64.powf(0.25);
        assert!((s3.estimate - want3).abs() < 1e-12 * want3);
    }

    #[test]
    fn aubin_talenti_values() {
        let s3 = sobolev_euclidean(3).unwrap();
        let want = 3.0 * (PI / 2.0).powf(4.0 / 3.0);
        assert!((s3.estimate - want).abs() < 1e-12 * want);
        assert!(sobolev_euclidean(2).is_err());
        // monotone growth over the range
        let mut prev = s3.estimate;
        for k in 4..=300 {
            let v = sobolev_euclidean(k).unwrap().estimate;
            assert!(v > prev, "not increasing at k = {k}");
            prev = v;
        }
    }

    #[test]
    fn nagy_identity() {
        for big_q in [2.0f64, 3.0, 4.0, 6.0, 8.0, 12.0, 30.0] {
            let q = 2.0 * (big_q + 1.0) / (big_q - 1.0);
            let a = gn_nagy(q).unwrap();
            let b = gn_nagy_q(big_q).unwrap();
            let rel = (a.estimate - b.estimate).abs() / b.estimate;
            assert!(rel < 1e-12, "Q = {big_q}: rel {rel:.2e}");
        }
    }

    #[test]
    fn nagy_q6_gamma_factor() {
        // the gamma factor at q = 6 is (sqrt(pi) Gamma(3/2)/Gamma(2))^(2/3) = (pi/2)^(2/3)
        let v = gn_nagy(6.0).unwrap();
        let first = (8f64.powi(8) / (256.0 * 65536.0)).powf(1.0 / 12.0);
        let want = first * (PI / 2.0).powf(2.0 / 3.0);
        assert!((v.estimate - want).abs() < 1e-12 * want);
    }

    #[test]
    fn wangzhang_values() {
        let w1 = wangzhang_limit(1).unwrap();
        assert!((w1.estimate - (2.0 / (PI * std::f64::consts::E)).sqrt()).abs() < 1e-14);
        let w2 = wangzhang_limit(2).unwrap();
        assert!((w2.estimate - 1.0 / (PI * std::f64::consts::E)).abs() < 1e-15);
        let w4 = wangzhang_limit(4).unwrap();
        let want = (2.0 / (4.0 * PI * std::f64::consts::E)).powi(2);
        assert!((w4.estimate - want).abs() < 1e-16);
    }

    #[test]
    fn wangzhang_limit_from_nagy() {
        // S_q^(-q/(q-2)) converges to the limit monotonically from above
        let w = wangzhang_limit(1).unwrap().estimate;
        let mut prev = f64::INFINITY;
        for q in [2.1f64, 2.01, 2.001] {
            let s = gn_nagy(q).unwrap().estimate.powf(-q / (q - 2.0));
            assert!(s < prev && s > w, "q = {q}");
            prev = s;
        }
        assert!((prev - w).abs() / w < 0.01, "limit gap {}", (prev - w).abs() / w);
    }

    #[test]
    fn gn_from_sobolev_endpoints() {
        // exponent 1 at the critical q, exponent 0 at q = 2
        let crit = gn_from_sobolev(3, 6.0).unwrap();
        let sob = sobolev_euclidean(3).unwrap();
        assert!((crit.estimate - sob.estimate).abs() < 1e-13 * sob.estimate);
        let flat = gn_from_sobolev(5, 2.0).unwrap();
        assert!((flat.estimate - 1.0).abs() < 1e-14);
        let mid = gn_from_sobolev(4, 3.0).unwrap();
        let want = sobolev_euclidean(4).unwrap().estimate.powf(2.0 / 3.0);
        assert!((mid.estimate - want).abs() < 1e-13 * want);
        assert!(gn_from_sobolev(3, 6.5).is_err());
        assert!(gn_from_sobolev(2, 3.0).is_err());
    }

    #[test]
    fn gn_params_scaling() {
        let p = GnParams::new(1, 4.0).unwrap();
        assert!((p.theta - 0.25).abs() < 1e-15);
        let crit = GnParams::new(3, 6.0).unwrap();
        assert!((crit.theta - 1.0).abs() < 1e-15);
        assert!(GnParams::new(3, 6.1).is_err());
        assert!(GnParams::new(1, 2.0).is_err());
    }

    #[test]
    fn lift_k1_closed_form() {
        // two independent codings of the k = 1 bound
        for n in 1..=6u32 {
            let got = sobolev_lift(GroupSpec::new(n, 1).unwrap()).unwrap();
            let big_q = (2 * n + 2) as f64;
            let closed = (big_q + 1.0)
                * (1.0 / (4.0 * (big_q - 1.0).powf(big_q - 1.0))).powf(1.0 / (big_q + 1.0))
                * (PI.sqrt() * (lng((big_q + 1.0) / 2.0) - lng((big_q + 2.0) / 2.0)).exp())
                    .powf(2.0 / (big_q + 1.0))
                * sobolev_heisenberg(n).unwrap().estimate.powf(big_q / (big_q + 1.0));
            let rel = (got.value.estimate - closed).abs() / closed;
            assert!(rel < 1e-12, "n = {n}: rel {rel:.2e}");
        }
    }

    #[test]
    fn lift_route_gap_at_k2() {
        match sobolev_lift(GroupSpec::new(1, 2).unwrap()) {
            Err(crate::error::Error::RouteUnavailable { .. }) => {}
            other => panic!("expected route-unavailable, got {other:?}"),
        }
    }

    #[test]
    fn lift_variants_agree_for_k_ge_3() {
        // the GN-route lift at q = 2(Q+k)/(Q+k-2) and the symmetric form are
        // the same algebra; both match the product composition
        for (n, k) in [(1u32, 3u32), (2, 4), (1, 5)] {
            let a = sobolev_lift(GroupSpec::new(n, k).unwrap()).unwrap();
            let b = sobolev_lift_symmetric(GroupSpec::new(n, k).unwrap()).unwrap();
            let rel = (a.value.estimate - b.value.estimate).abs() / b.value.estimate;
            assert!(rel < 1e-12, "(n,k) = ({n},{k}): rel {rel:.2e}");
            let c = product_sobolev(
                sobolev_heisenberg(n).unwrap(),
                (2 * n + 2) as f64,
                sobolev_euclidean(k).unwrap(),
                k as f64,
            )
            .unwrap();
            let rel2 = (c.estimate - b.value.estimate).abs() / b.value.estimate;
            assert!(rel2 < 1e-12, "(n,k) = ({n},{k}): rel {rel2:.2e}");
        }
    }

    #[test]
    fn lift_31_frozen() {
        let got = sobolev_lift(GroupSpec::new(3, 1).unwrap()).unwrap();
        let want = 29.2670365342082941;
        assert!((got.value.estimate - want).abs() < 1e-12 * want);
    }

    #[test]
    fn product_symmetric_double_r3() {
        // two copies of R^3 give lower bound 2 C_Sob(R^3); record the ratio
        // against the true C_Sob(R^6)
        let c3 = sobolev_euclidean(3).unwrap();
        let got = product_sobolev(c3, 3.0, c3, 3.0).unwrap();
        assert!((got.estimate - 2.0 * c3.estimate).abs() < 1e-12 * got.estimate);
        let true6 = sobolev_euclidean(6).unwrap().estimate;
        let ratio = got.estimate / true6;
        assert!(ratio < 1.0, "product bound must stay below the sharp constant");
        assert!(ratio > 0.5, "ratio {ratio} unexpectedly small");
    }
}
