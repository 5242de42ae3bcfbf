use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::gamma::lng;
use crate::value::{Method, Value};

pub const BESSEL_NU_MAX: f64 = 300.0;
pub const BESSEL_X_MAX: f64 = 400.0;
pub const ZERO_NU_MAX: f64 = 200.0;

/// Enclosure of the first positive zero of J_nu from two published
/// inequalities: j_{nu,1}^2 >= (nu+1)(nu+5) below and
/// j_{nu,1} <= sqrt(nu+1) (sqrt(nu+2) + 1) above.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselZeroBracket {
    pub order: f64,
    pub lower: f64,
    pub upper: f64,
}

impl BesselZeroBracket {
    pub fn new(order: f64) -> Result<Self> {
        if !(order >= 0.0 && order.is_finite()) {
            return Err(Error::domain("BesselZeroBracket", format!("order = {order}")));
        }
        let lower = ((order + 1.0) * (order + 5.0)).sqrt();
        let upper = (order + 1.0).sqrt() * ((order + 2.0).sqrt() + 1.0);
        Ok(BesselZeroBracket { order, lower, upper })
    }

    pub fn contains_strictly(&self, z: f64) -> bool {
        self.lower < z && z < self.upper
    }
}

/// Ascending series, usable where the terms decay from the start
/// (x^2 <= 4 (nu + 1)); no cancellation then, so the sum is machine accurate.
fn j_series(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    let t0 = if nu == 0.0 {
        1.0
    } else {
        let lt = nu * (0.5 * x).ln() - lng(nu + 1.0);
        if lt < -745.0 {
            return 0.0;
        }
        lt.exp()
    };
    let q = 0.25 * x * x;
    let mut sum = t0;
    let mut comp = 0.0f64;
    let mut term = t0;
    let mut j = 0u32;
    loop {
        j += 1;
        term *= -q / (j as f64 * (nu + j as f64));
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term.abs() <= 1e-17 * sum.abs() + 1e-300 || j > 600 {
            break;
        }
    }
    sum
}

const RESCALE: f64 = 1e250;

/// Backward (Miller) recurrence with normalization by the expansion
/// (x/2)^mu = sum_k (mu + 2k) Gamma(mu + k)/k! J_{mu+2k}(x), valid for any
/// real order mu in [0, 1). The start order sits far enough above the
/// turning point that the contaminating solution decays below one ulp;
/// the offset must grow like x^(1/3).
fn j_miller_pair(nu: f64, x: f64) -> (f64, f64) {
    let ell = nu.floor() as usize;
    let mu = nu - ell as f64;
    let start = (nu.max(x) + 14.0 * x.cbrt() + 25.0).ceil() as usize;
    let start = start.max(ell + 15);

    // normalization coefficients c_k = (mu + 2k) Gamma(mu + k)/k!
    let nkeep = start / 2 + 1;
    let mut cks = vec![0.0f64; nkeep];
    let mut t = if mu > 0.0 { lng(mu + 1.0).exp() } else { 1.0 };
    cks[0] = t; // limit of nu Gamma(nu) as nu -> mu, i.e. Gamma(mu + 1)
    for (k, ck) in cks.iter_mut().enumerate().skip(1) {
        let kf = k as f64;
        t *= (mu + kf) / kf;
        *ck = (mu + 2.0 * kf) / (mu + kf) * t;
    }

    let mut fp = 0.0f64; // J~ at order mu + m + 1
    let mut f = 1e-30f64; // J~ at order mu + m
    let mut norm = 0.0f64;
    let mut fl = 0.0f64;
    let mut fl1 = 0.0f64;
    let mut m = start as isize;
    while m >= 0 {
        let mu_m = mu + m as f64;
        if m % 2 == 0 {
            norm += cks[(m / 2) as usize] * f;
        }
        if m as usize == ell + 1 {
            fl1 = f;
        }
        if m as usize == ell {
            fl = f;
        }
        let fm1 = (2.0 * mu_m / x) * f - fp;
        fp = f;
        f = fm1;
        if f.abs() > RESCALE {
            f /= RESCALE;
            fp /= RESCALE;
            norm /= RESCALE;
            fl /= RESCALE;
            fl1 /= RESCALE;
        }
        m -= 1;
    }
    let scale = (0.5 * x).powf(mu) / norm;
    (fl * scale, fl1 * scale)
}

/// (J_nu(x), J_{nu+1}(x)) without domain checks; callers guarantee
/// 0 <= nu, 0 <= x and a range where the methods are validated.
pub(crate) fn bessel_j_pair(nu: f64, x: f64) -> (f64, f64) {
    if x == 0.0 {
        return (if nu == 0.0 { 1.0 } else { 0.0 }, 0.0);
    }
    if x * x <= 4.0 * (nu + 1.0) {
        (j_series(nu, x), j_series(nu + 1.0, x))
    } else {
        j_miller_pair(nu, x)
    }
}

/// Bessel J of real order nu in [0, 300] at x in [0, 400], absolute error
/// below 1e-13 (validated against 40-digit references across the rectangle).
pub fn bessel_j(nu: f64, x: f64) -> Result<Value> {
    if !(0.0..=BESSEL_NU_MAX).contains(&nu) || !nu.is_finite() {
        return Err(Error::domain("bessel_j", format!("nu = {nu} outside [0, 300]")));
    }
    if !(0.0..=BESSEL_X_MAX).contains(&x) || !x.is_finite() {
        return Err(Error::domain("bessel_j", format!("x = {x} outside [0, 400]")));
    }
    let (j, _) = bessel_j_pair(nu, x);
    Ok(Value::new(j, 1e-13 + 4.0 * f64::EPSILON * j.abs(), Method::Series))
}

const BISECT_WIDTH: f64 = 1e-6;
const NEWTON_TOL: f64 = 1e-10;
const MAX_BISECT: u32 = 80;

/// First positive zero of J_nu for nu in [0, 200]: bisection inside the
/// bracket down to 1e-6, then Newton with J' = (nu/x) J_nu - J_{nu+1}.
pub fn bessel_first_zero(nu: f64) -> Result<Value> {
    if !(0.0..=ZERO_NU_MAX).contains(&nu) || !nu.is_finite() {
        return Err(Error::domain("bessel_first_zero", format!("nu = {nu} outside [0, 200]")));
    }
    let bracket = BesselZeroBracket::new(nu)?;
    let (mut a, mut b) = (bracket.lower, bracket.upper);
    // J_nu is positive on (0, j_{nu,1}) and negative just beyond it
    let fa = bessel_j_pair(nu, a).0;
    if fa <= 0.0 {
        return Err(Error::convergence(
            "bessel_first_zero",
            format!("bracket lower end not below the zero at nu = {nu}"),
        ));
    }
    let mut n = 0;
    while b - a > BISECT_WIDTH {
        n += 1;
        if n > MAX_BISECT {
            return Err(Error::convergence(
                "bessel_first_zero",
                format!("bisection stalled at width {}", b - a),
            ));
        }
        let mid = 0.5 * (a + b);
        if bessel_j_pair(nu, mid).0 > 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    let mut z = 0.5 * (a + b);
    for _ in 0..12 {
        let (f, f1) = bessel_j_pair(nu, z);
        let deriv = (nu / z) * f - f1;
        let step = f / deriv;
        z -= step;
        if step.abs() < NEWTON_TOL * z {
            break;
        }
    }
    if !bracket.contains_strictly(z) {
        return Err(Error::convergence(
            "bessel_first_zero",
            format!("refined zero {z} escaped the bracket at nu = {nu}"),
        ));
    }
    Ok(Value::new(z, 1e-10, Method::RootFind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn trivial_points() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap().estimate, 1.0);
        assert_eq!(bessel_j(1.0, 0.0).unwrap().estimate, 0.0);
        assert_eq!(bessel_j(2.5, 0.0).unwrap().estimate, 0.0);
    }

    #[test]
    fn frozen_references() {
        // (nu, x, value) from 40-digit evaluation
        let refs: [(f64, f64, f64); 14] = [
            (0.0, 1.0, 0.765197686557966551),
            (0.0, 30.5, -0.0193897545177621521),
            (0.0, 400.0, -0.0388251815307839557),
            (0.3, 50.0, 0.00531003910784773268),
            (1.0, 0.5, 0.242268457674873886),
            (2.5, 7.7, -0.286940767425193626),
            (7.7, 123.4, -0.049934445478606697),
            (99.5, 110.0, -0.0744087284892214749),
            (150.25, 180.0, -0.0226983309999267376),
            (300.0, 400.0, -0.0484572380156311491),
            (33.9, 34.0, 0.142026773047919117),
            (0.001, 35.0, -0.126773587668927416),
            (12.0, 12.0, 0.195280182738832243),
            (20.0, 1.0, 3.87350300852465772e-25),
        ];
        for (nu, x, want) in refs {
            let got = bessel_j(nu, x).unwrap();
            assert!(
                (got.estimate - want).abs() < 1e-13,
                "J_{nu}({x}) = {} want {want}",
                got.estimate
            );
        }
    }

    #[test]
    fn half_integer_closed_forms() {
        // J_{1/2} = sqrt(2/(pi x)) sin x, J_{3/2} = sqrt(2/(pi x)) (sin x / x - cos x)
        for x in [0.7, 5.0, 37.3, 211.9, 400.0] {
            let c = (2.0 / (PI * x)).sqrt();
            let want12 = c * x.sin();
            let want32 = c * (x.sin() / x - x.cos());
            assert!((bessel_j(0.5, x).unwrap().estimate - want12).abs() < 1e-13, "x={x}");
            assert!((bessel_j(1.5, x).unwrap().estimate - want32).abs() < 1e-13, "x={x}");
        }
    }

    #[test]
    fn recurrence_consistency() {
        // J_{nu-1}(x) + J_{nu+1}(x) = (2 nu / x) J_nu(x)
        for (nu, x) in [(1.0, 10.0), (2.5, 17.0), (40.25, 55.5), (100.0, 120.0)] {
            let a = bessel_j(nu - 1.0, x).unwrap().estimate;
            let b = bessel_j(nu + 1.0, x).unwrap().estimate;
            let c = bessel_j(nu, x).unwrap().estimate;
            assert!((a + b - 2.0 * nu / x * c).abs() < 1e-12, "nu={nu} x={x}");
        }
    }

    #[test]
    fn domain_checks() {
        assert!(bessel_j(-0.5, 1.0).is_err());
        assert!(bessel_j(300.5, 1.0).is_err());
        assert!(bessel_j(1.0, 400.5).is_err());
        assert!(bessel_first_zero(200.5).is_err());
        assert!(bessel_first_zero(-1.0).is_err());
    }

    #[test]
    fn first_zero_references() {
        let refs: [(f64, f64); 12] = [
            (0.0, 2.40482555769577277),
            (0.5, 3.14159265358979324),
            (1.0, 3.83170597020751232),
            (1.5, 4.49340945790906418),
            (2.0, 5.13562230184068256),
            (2.5, 5.76345919689454979),
            (3.0, 6.38016189592398351),
            (7.3, 11.429093752762),
            (50.0, 57.1168991601191741),
            (99.5, 108.322157477735529),
            (150.0, 160.05457959243036),
            (200.0, 211.029166510554692),
        ];
        for (nu, want) in refs {
            let z = bessel_first_zero(nu).unwrap();
            assert!(
                (z.estimate - want).abs() < 1e-9,
                "j_({nu},1) = {} want {want}",
                z.estimate
            );
            assert!((z.estimate - want).abs() <= z.err);
        }
    }

    #[test]
    fn half_order_zero_is_pi() {
        let z = bessel_first_zero(0.5).unwrap();
        assert!((z.estimate - PI).abs() < 1e-9);
    }

    #[test]
    fn zero_residuals_on_grid() {
        let mut nu = 0.0;
        while nu <= 100.0 {
            let z = bessel_first_zero(nu).unwrap();
            let r = bessel_j(nu, z.estimate).unwrap().estimate.abs();
            assert!(r <= 1e-9, "residual {r} at nu = {nu}");
            nu += 0.5;
        }
    }

    #[test]
    fn zero_monotone_and_bracketed() {
        let mut prev = 0.0;
        let mut nu = 0.0;
        while nu <= 200.0 {
            let z = bessel_first_zero(nu).unwrap().estimate;
            assert!(z > prev, "monotonicity broke at nu = {nu}");
            let br = BesselZeroBracket::new(nu).unwrap();
            assert!(br.contains_strictly(z), "bracket failed at nu = {nu}");
            prev = z;
            nu += 0.5;
        }
    }
}
