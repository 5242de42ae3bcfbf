use crate::error::{Error, Result};
use crate::value::{Method, Value};

/// Lanczos coefficients, g = 7, 9 terms (GSL set).
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Chebyshev coefficients of R(x) = ln\u{0393}(x) / ((x-1)(x-2)) on [0.75, 2.75].
/// Factoring out the two zeros keeps the absolute error of ln\u{0393} at the
/// machine level where the function itself vanishes, which plain Lanczos
/// cannot do.
const LNG_CHEB_A: f64 = 0.75;
const LNG_CHEB_B: f64 = 2.75;
const LNG_CHEB: [f64; 41] = [
    0.4765439350046888,
    -0.13718104605005443,
    0.027952203944246856,
    -0.006560136509739029,
    0.0016581695771470922,
    -0.0004381830584422672,
    0.00011921024895127895,
    -3.309695596257723e-5,
    9.326939259429468e-6,
    -2.6585769732214094e-6,
    7.646928687764432e-7,
    -2.2157619853262335e-7,
    6.459859674690878e-8,
    -1.8931425257708437e-8,
    5.573019623077092e-9,
    -1.6470095801073615e-9,
    4.884256427974655e-10,
    -1.4528859174573847e-10,
    4.333676322281121e-11,
    -1.295853247427128e-11,
    3.8835513235463435e-12,
    -1.1662439018694372e-12,
    3.5088219988105323e-13,
    -1.0574960640813453e-13,
    3.192150410274377e-14,
    -9.64991341844512e-15,
    2.9211437840806793e-15,
    -8.853820384439309e-16,
    2.6867034087843283e-16,
    -8.161812498000414e-17,
    2.481996474198052e-17,
    -7.555025550232497e-18,
    2.3017914022113796e-18,
    -7.018889761792637e-19,
    2.1420145434250507e-19,
    -6.541973186876466e-20,
    1.9994465524793617e-20,
    -6.115180057649838e-21,
    1.871509586619673e-21,
    -5.731183037605518e-22,
    1.756115111064942e-22,
];

fn clenshaw_r(x: f64) -> f64 {
    let t = (2.0 * x - LNG_CHEB_A - LNG_CHEB_B) / (LNG_CHEB_B - LNG_CHEB_A);
    let t2 = 2.0 * t;
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &c in LNG_CHEB[1..].iter().rev() {
        let b0 = t2 * b1 - b2 + c;
        b2 = b1;
        b1 = b0;
    }
    t * b1 - b2 + LNG_CHEB[0]
}

/// Raw ln Gamma for x > 0; callers guarantee the domain.
pub(crate) fn lng(x: f64) -> f64 {
    debug_assert!(x > 0.0 && x.is_finite());
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    if (LNG_CHEB_A..=LNG_CHEB_B).contains(&x) {
        return (x - 1.0) * (x - 2.0) * clenshaw_r(x);
    }
    if x < 0.5 {
        return (std::f64::consts::PI / (std::f64::consts::PI * x).sin()).ln() - lng(1.0 - x);
    }
    let xx = x - 1.0;
    let mut t = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        t += c / (xx + i as f64);
    }
    let w = xx + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (xx + 0.5) * w.ln() - w + t.ln()
}

/// ln Gamma(x) for x > 0, with tracked error.
pub fn ln_gamma(x: f64) -> Result<Value> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("ln_gamma", format!("x = {x} must be positive finite")));
    }
    let v = lng(x);
    Ok(Value::new(v, 1e-14 * v.abs() + 1e-15, Method::ExactFormula))
}

/// Surface measure of the unit sphere S^(d-1): 2 pi^(d/2) / Gamma(d/2).
pub fn sphere_area(d: u32) -> Result<Value> {
    if !(1..=300).contains(&d) {
        return Err(Error::domain("sphere_area", format!("d = {d} outside 1..=300")));
    }
    let half = d as f64 / 2.0;
    let lnv = std::f64::consts::LN_2 + half * std::f64::consts::PI.ln() - lng(half);
    Ok(exp_tracked(lnv))
}

/// Volume of the unit ball in R^d: pi^(d/2) / Gamma(d/2 + 1).
pub fn ball_volume(d: u32) -> Result<Value> {
    if !(1..=300).contains(&d) {
        return Err(Error::domain("ball_volume", format!("d = {d} outside 1..=300")));
    }
    let half = d as f64 / 2.0;
    let lnv = half * std::f64::consts::PI.ln() - lng(half + 1.0);
    Ok(exp_tracked(lnv))
}

/// exp of a log-space result whose absolute error is ~(|lnv|+2) eps.
pub(crate) fn exp_tracked(lnv: f64) -> Value {
    let v = lnv.exp();
    let rel = (lnv.abs() + 2.0) * 4.0 * f64::EPSILON;
    Value::new(v, rel * v.abs(), Method::ExactFormula)
}
