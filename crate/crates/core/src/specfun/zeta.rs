use crate::error::{Error, Result};
use crate::value::{Method, Value};

/// Bernoulli numbers B_2 .. B_30.
const BERNOULLI: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

const DIRECT_TERMS: u32 = 25;

/// Integer power by squaring; exponent s >= 1.
fn powi(base: f64, mut s: u32) -> f64 {
    let mut r = 1.0;
    let mut b = base;
    while s > 0 {
        if s & 1 == 1 {
            r *= b;
        }
        b *= b;
        s >>= 1;
    }
    r
}

/// Hurwitz zeta(s, a) = sum_{m >= 0} (m + a)^(-s) for integer 2 <= s <= 64,
/// 0 < a <= 1000, by Euler-Maclaurin with 25 direct terms and Bernoulli
/// corrections through B_30. The reported err is twice the last correction
/// term plus the summation rounding.
pub fn hurwitz_zeta(s: u32, a: f64) -> Result<Value> {
    if !(2..=64).contains(&s) {
        return Err(Error::domain("hurwitz_zeta", format!("s = {s} outside 2..=64")));
    }
    if !(a > 0.0 && a <= 1e3) {
        return Err(Error::domain("hurwitz_zeta", format!("a = {a} outside (0, 1000]")));
    }

    // direct block, summed smallest term first with compensation
    let mut acc = 0.0f64;
    let mut comp = 0.0f64;
    for m in (0..DIRECT_TERMS).rev() {
        let term = 1.0 / powi(m as f64 + a, s);
        let y = term - comp;
        let t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }

    let w = DIRECT_TERMS as f64 + a;
    let winv = 1.0 / w;
    let wps = 1.0 / powi(w, s); // w^(-s)
    let sf = s as f64;
    acc += wps * w / (sf - 1.0); // integral tail w^(1-s)/(s-1)
    acc += 0.5 * wps;

    // corrections: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * w^(-s-2j+1)
    let mut rising = sf;
    let mut fact = 2.0f64;
    let mut wpow = wps * winv;
    let mut last = 0.0f64;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let j = (j + 1) as f64;
        let corr = b / fact * rising * wpow;
        acc += corr;
        last = corr.abs();
        rising *= (sf + 2.0 * j - 1.0) * (sf + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        wpow *= winv * winv;
    }

    let err = 2.0 * last + 1e-15 * acc.abs();
    Ok(Value::new(acc, err, Method::Series))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn basel_and_half() {
        let z = hurwitz_zeta(2, 1.0).unwrap();
        assert!((z.estimate - PI * PI / 6.0).abs() < 1e-14);
        let zh = hurwitz_zeta(2, 0.5).unwrap();
        assert!((zh.estimate - PI * PI / 2.0).abs() < 1e-13);
    }

    #[test]
    fn half_argument_by_direct_summation() {
        // independent check: 1e6 direct terms plus integral tail brackets
        let mut s = 0.0f64;
        let m_top = 1_000_000u32;
        for m in (0..m_top).rev() {
            let t = m as f64 + 0.5;
            s += 1.0 / (t * t);
        }
        let lo = s + 1.0 / (m_top as f64 + 0.5);
        let hi = s + 1.0 / (m_top as f64 - 0.5);
        let z = hurwitz_zeta(2, 0.5).unwrap().estimate;
        assert!(lo - 1e-9 <= z && z <= hi + 1e-9, "{lo} <= {z} <= {hi}");
    }

    #[test]
    fn frozen_references() {
        // (s, a, value) computed independently at 60-digit precision
        let refs: [(u32, f64, f64); 11] = [
            (2, 0.5, 4.93480220054467931),
            (2, 1.0, 1.64493406684822644),
            (3, 0.25, 64.6638699687684602),
            (4, 0.5, 16.2348485056670729),
            (7, 3.75, 1.21710182069126864e-4),
            (13, 6.5, 3.23568118975604766e-11),
            (16, 2.5, 4.31505652969179402e-7),
            (32, 333.25, 2.102888329472122e-80),
            (64, 0.5, 1.84467440737095516e19),
            (64, 1000.0, 1.63783488250572336e-191),
            (21, 0.75, 420.449148142985792),
        ];
        for (s, a, want) in refs {
            let z = hurwitz_zeta(s, a).unwrap();
            let rel = (z.estimate - want).abs() / want.abs();
            assert!(rel < 5e-14, "zeta({s},{a}): rel {rel:.2e}");
            assert!((z.estimate - want).abs() <= z.err + 1e-15 * want.abs());
        }
    }

    #[test]
    fn recurrence_shift() {
        // zeta(s, a) = a^(-s) + zeta(s, a + 1)
        for s in [2u32, 3, 7, 16] {
            for a in [0.5, 1.0, 1.5, 2.5] {
                let lhs = hurwitz_zeta(s, a).unwrap().estimate;
                let rhs = (a as f64).powi(-(s as i32)) + hurwitz_zeta(s, a + 1.0).unwrap().estimate;
                assert!(
                    (lhs - rhs).abs() <= 1e-12 * lhs.abs(),
                    "s={s} a={a}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn domain_checks() {
        assert!(hurwitz_zeta(1, 1.0).is_err());
        assert!(hurwitz_zeta(65, 1.0).is_err());
        assert!(hurwitz_zeta(2, 0.0).is_err());
        assert!(hurwitz_zeta(2, 1000.5).is_err());
    }
}
