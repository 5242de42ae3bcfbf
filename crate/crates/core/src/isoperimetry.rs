//! Isoperimetric constants: exact Euclidean values, the lower bound on
//! I(H_n) through the representation and bathtub constants, the conjectured
//! sharp value, and the lifting to H_n x R^k.

use crate::bound::{Bound, Direction, Hypothesis, IsoValue, Quantity};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::quad::composite_gl16;
use crate::specfun::{exp_tracked, lng};
use crate::value::{Method, Value};

/// Representation-formula constant C_n = 2^(n-3) n Gamma(n/2)^2 / pi^(n+1).
pub fn rep_constant(n: u32) -> Result<Value> {
    if !(1..=50).contains(&n) {
        return Err(Error::domain("rep_constant", format!("n = {n} outside 1..=50")));
    }
    let nf = n as f64;
    let lnv = (nf - 3.0) * std::f64::consts::LN_2 + nf.ln() + 2.0 * lng(nf / 2.0)
        - (nf + 1.0) * std::f64::consts::PI.ln();
    Ok(exp_tracked(lnv))
}

/// Bathtub-optimization constant, Q = 2n+2:
/// C'_n = Q^(1/Q) ( pi^n G(a)/G(a+1/2) * G(b)/G(b+1/2) * G(1+c)/G(n+c) )^((Q-1)/Q)
/// with a = (2Q-1)/(2(Q-1)), b = n/2 + Q/(4(Q-1)), c = Q/(2(Q-1)).
pub fn bathtub_constant(n: u32) -> Result<Value> {
    if !(1..=50).contains(&n) {
        return Err(Error::domain("bathtub_constant", format!("n = {n} outside 1..=50")));
    }
    let nf = n as f64;
    let q = 2.0 * nf + 2.0;
    let a = (2.0 * q - 1.0) / (2.0 * (q - 1.0));
    let b = nf / 2.0 + q / (4.0 * (q - 1.0));
    let c = q / (2.0 * (q - 1.0));
    let ln_inner = nf * std::f64::consts::PI.ln() + lng(a) - lng(a + 0.5) + lng(b)
        - lng(b + 0.5)
        + lng(1.0 + c)
        - lng(nf + c);
    Ok(exp_tracked(q.ln() / q + (q - 1.0) / q * ln_inner))
}

/// The n = 1 constant without gamma functions: 2^(-1) 3^(9/8) pi^(3/4).
pub fn bathtub_constant_n1_closed() -> Value {
    Value::exact(0.5 * 3f64.powf(1.125) * std::f64::consts::PI.powf(0.75))
}

/// Unconditional lower bound I(H_n) >= C_n^(-1) (C'_n)^(-1).
pub fn iso_lower_heisenberg(n: u32) -> Result<IsoValue> {
    let value = rep_constant(n)?.mul(bathtub_constant(n)?).recip();
    let bound = Bound::new(
        Quantity::IsoConst,
        Direction::Lower,
        value,
        Hypothesis::Unconditional,
        vec!["iso_lower_heisenberg".into(), "rep_constant".into(), "bathtub_constant".into()],
    )?;
    IsoValue::new(GroupSpec::new(n, 0)?, bound)
}

/// The conjectured sharp value
/// I(H_n) = (2n/(2n+1)) (2n+2)^((2n+1)/(2n+2)) Gamma((2n+3)/2)^(1/(2n+2))
///          pi^((2n+1)/(2(2n+2))) 2^(1/(n+1)) / Gamma(n+1)^(1/(n+1)),
/// carried as a conjecture-conditional exact value.
pub fn pansu_isoperimetric(n: u32) -> Result<IsoValue> {
    if !(1..=50).contains(&n) {
        return Err(Error::domain("pansu_isoperimetric", format!("n = {n} outside 1..=50")));
    }
    let nf = n as f64;
    let q = 2.0 * nf + 2.0;
    let lnv = (2.0 * nf / (2.0 * nf + 1.0)).ln()
        + (q - 1.0) / q * q.ln()
        + lng((2.0 * nf + 3.0) / 2.0) / q
        + (q - 1.0) / (2.0 * q) * std::f64::consts::PI.ln()
        + std::f64::consts::LN_2 / (nf + 1.0)
        - lng(nf + 1.0) / (nf + 1.0);
    let bound = Bound::new(
        Quantity::IsoConst,
        Direction::Exact,
        exp_tracked(lnv),
        Hypothesis::PansuConjecture,
        vec!["pansu_isoperimetric".into()],
    )?;
    IsoValue::new(GroupSpec::new(n, 0)?, bound)
}

/// Exact Euclidean constant I(R^d) = d^((d-1)/d) |S^(d-1)|^(1/d).
pub fn iso_euclidean(d: u32) -> Result<Value> {
    if !(1..=300).contains(&d) {
        return Err(Error::domain("iso_euclidean", format!("d = {d} outside 1..=300")));
    }
    let df = d as f64;
    let lnv = (df - 1.0) / df * df.ln()
        + (std::f64::consts::LN_2 + 0.5 * df * std::f64::consts::PI.ln() - lng(df / 2.0)) / df;
    Ok(exp_tracked(lnv))
}

/// Exact Euclidean constant as an IsoValue for route compositions.
pub fn iso_euclidean_value(d: u32) -> Result<IsoValue> {
    let bound = Bound::new(
        Quantity::IsoConst,
        Direction::Exact,
        iso_euclidean(d)?,
        Hypothesis::Unconditional,
        vec!["iso_euclidean".into()],
    )?;
    IsoValue::new(GroupSpec::new(0, d)?, bound)
}

/// Lifted lower bound
/// I(H_n x R^k) >= I(R^(2n+2+k)) (I(H_n)/I(R^(2n+2)))^((2n+2)/(2n+2+k)),
/// inheriting the hypothesis of the Heisenberg-factor input.
pub fn iso_lift(g: GroupSpec, iso_hn: &IsoValue) -> Result<IsoValue> {
    if g.n < 1 {
        return Err(Error::domain("iso_lift", "requires n >= 1"));
    }
    if iso_hn.group != GroupSpec::new(g.n, 0)? {
        return Err(Error::mismatch(
            "iso_lift",
            format!("input is for {}, expected H_{}", iso_hn.group, g.n),
        ));
    }
    if !iso_hn.bound.is_lower_or_exact() {
        return Err(Error::mismatch("iso_lift", "input must be a lower or exact bound"));
    }
    if g.k == 0 {
        return Ok(iso_hn.clone());
    }
    let d_heis = 2 * g.n + 2;
    let d_total = d_heis + g.k;
    let exponent = d_heis as f64 / d_total as f64;
    let value = iso_euclidean(d_total)?
        .mul(iso_hn.bound.value.div(iso_euclidean(d_heis)?).powf(exponent));
    let bound = Bound::new(
        Quantity::IsoConst,
        Direction::Lower,
        value,
        iso_hn.bound.hypothesis,
        {
            let mut r = vec!["iso_lift".into(), "iso_euclidean".into()];
            r.extend(iso_hn.bound.route.iter().cloned());
            r
        },
    )?;
    IsoValue::new(g, bound)
}

/// Quadrature re-derivation of C'_n for n = 1, 2 from the reduced product of
/// one-dimensional integrals
///   (2 pi)^(n-1) * int_0^pi sin^(Q/(Q-1)) phi dphi
///                * int_0^pi sin^(n-1+Q/(2(Q-1))) theta dtheta
///                * int_Sigma omega_n^(Q/(Q-1)) dmu(omega),
/// reassembled as C'_n = Q^(1/Q) (integral)^((Q-1)/Q). `grid` is the panel
/// count per axis; the error field comes from comparing against the doubled
/// grid.
pub fn bathtub_oracle(n: u32, grid: u32) -> Result<Value> {
    if !(n == 1 || n == 2) {
        return Err(Error::domain("bathtub_oracle", format!("n = {n} must be 1 or 2")));
    }
    if grid < 256 {
        return Err(Error::domain("bathtub_oracle", format!("grid = {grid} below 256")));
    }
    let assemble = |panels: u32| -> f64 {
        let nf = n as f64;
        let q = 2.0 * nf + 2.0;
        let p_phi = q / (q - 1.0);
        let p_theta = nf - 1.0 + q / (2.0 * (q - 1.0));
        let i_phi = composite_gl16(|t| t.sin().powf(p_phi), 0.0, std::f64::consts::PI, panels);
        let i_theta = composite_gl16(|t| t.sin().powf(p_theta), 0.0, std::f64::consts::PI, panels);
        // Sigma factor: trivial measure for n = 1; for n = 2 the explicit
        // parametrization dmu = sin t cos t dt with omega_2 = cos t
        let i_sigma = if n == 1 {
            1.0
        } else {
            composite_gl16(
                |t| t.sin() * t.cos().powf(1.0 + p_phi),
                0.0,
                0.5 * std::f64::consts::PI,
                panels,
            )
        };
        let integral =
            (2.0 * std::f64::consts::PI).powi(n as i32 - 1) * i_phi * i_theta * i_sigma;
        q.powf(1.0 / q) * integral.powf((q - 1.0) / q)
    };
    let coarse = assemble(grid / 2);
    let mid = assemble(grid);
    let fine = assemble(2 * grid);
    let err = (fine - mid).abs() + 1e-14 * fine.abs();
    if (fine - mid).abs() > 10.0 * (mid - coarse).abs().max(1e-13 * fine.abs()) {
        return Err(Error::convergence(
            "bathtub_oracle",
            format!("refinement did not contract: {} vs {}", fine - mid, mid - coarse),
        ));
    }
    Ok(Value::new(fine, err, Method::Quadrature))
}
