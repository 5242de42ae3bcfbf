//! Lower bounds on the Faber-Krahn constant: the Sobolev route, the
//! isoperimetric/symmetrization route, exact Euclidean values, and best-of
//! selection.

use serde::{Deserialize, Serialize};

use crate::bound::{Bound, Direction, Hypothesis, IsoValue, Quantity};
use crate::error::{Error, Result};
use crate::functional::{sobolev_heisenberg, sobolev_lift, sobolev_lift_symmetric};
use crate::group::GroupSpec;
use crate::isoperimetry::{iso_lift, iso_lower_heisenberg, pansu_isoperimetric};
use crate::specfun::{ball_volume, bessel_first_zero};
use crate::value::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FkRouteName {
    FromSobolevJl,
    FromSobolevLift,
    FromIsoUnconditional,
    FromIsoPansu,
    EuclideanExact,
}

/// One evaluated Faber-Krahn route.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FkRoute {
    pub name: FkRouteName,
    pub bound: Bound,
}

impl FkRoute {
    fn new(name: FkRouteName, bound: Bound) -> Result<Self> {
        if bound.quantity != Quantity::FkConst {
            return Err(Error::mismatch("FkRoute", "bound must target FkConst"));
        }
        let conditional = bound.hypothesis == Hypothesis::PansuConjecture;
        if conditional != matches!(name, FkRouteName::FromIsoPansu) {
            return Err(Error::mismatch(
                "FkRoute",
                "only the conjectural isoperimetric route may carry the conjecture hypothesis",
            ));
        }
        Ok(FkRoute { name, bound })
    }
}

/// C_FK >= C_Sob: relabel a Sobolev lower bound as a Faber-Krahn one.
pub fn fk_from_sobolev(c_sob: &Bound) -> Result<Bound> {
    if c_sob.quantity != Quantity::SobolevConst {
        return Err(Error::mismatch("fk_from_sobolev", "input must bound SobolevConst"));
    }
    if !c_sob.is_lower_or_exact() {
        return Err(Error::mismatch("fk_from_sobolev", "input must be a lower or exact bound"));
    }
    Bound::new(
        Quantity::FkConst,
        Direction::Lower,
        c_sob.value,
        c_sob.hypothesis,
        {
            let mut r = vec!["fk_from_sobolev".to_string()];
            r.extend(c_sob.route.iter().cloned());
            r
        },
    )
}

/// Symmetrization: C_FK >= I^2 D^(-2) j_{(D-2)/2,1}^2 for a group of
/// homogeneous dimension D.
pub fn fk_from_iso(iso: &IsoValue, d: u32) -> Result<Bound> {
    if iso.group.homogeneous_dimension() != d {
        return Err(Error::mismatch(
            "fk_from_iso",
            format!("group {} has dimension {}, not {d}", iso.group, iso.group.homogeneous_dimension()),
        ));
    }
    if d < 2 {
        return Err(Error::domain("fk_from_iso", "dimension must be >= 2"));
    }
    if !iso.bound.is_lower_or_exact() {
        return Err(Error::mismatch("fk_from_iso", "input must be a lower or exact bound"));
    }
    let j = bessel_first_zero((d as f64 - 2.0) / 2.0)?;
    let value = iso
        .bound
        .value
        .powi(2)
        .mul(j.powi(2))
        .scale(1.0 / (d as f64 * d as f64));
    Bound::new(Quantity::FkConst, Direction::Lower, value, iso.bound.hypothesis, {
        let mut r = vec!["fk_from_iso".to_string(), "bessel_first_zero".to_string()];
        r.extend(iso.bound.route.iter().cloned());
        r
    })
}

/// Exact Euclidean value C_FK(R^d) = omega_d^(2/d) j_{(d-2)/2,1}^2.
/// For d = 1 the half-line zero j_{-1/2,1} = pi/2 is classical; the order
/// lies outside the root-finder's domain, so it is applied directly.
pub fn fk_euclidean(d: u32) -> Result<Value> {
    if !(1..=300).contains(&d) {
        return Err(Error::domain("fk_euclidean", format!("d = {d} outside 1..=300")));
    }
    let om = ball_volume(d)?;
    let j2 = if d == 1 {
        Value::exact(std::f64::consts::FRAC_PI_2).powi(2)
    } else {
        bessel_first_zero((d as f64 - 2.0) / 2.0)?.powi(2)
    };
    Ok(om.powf(2.0 / d as f64).mul(j2))
}

/// All Faber-Krahn routes available for a group under a hypothesis.
pub fn fk_candidates(g: GroupSpec, hypothesis: Hypothesis) -> Result<Vec<FkRoute>> {
    if g.is_euclidean() {
        let bound = Bound::new(
            Quantity::FkConst,
            Direction::Exact,
            fk_euclidean(g.k)?,
            Hypothesis::Unconditional,
            vec!["fk_euclidean".into()],
        )?;
        return Ok(vec![FkRoute::new(FkRouteName::EuclideanExact, bound)?]);
    }
    let d = g.homogeneous_dimension();
    let mut routes = Vec::new();
    if g.k == 0 {
        let jl = Bound::new(
            Quantity::SobolevConst,
            Direction::Exact,
            sobolev_heisenberg(g.n)?,
            Hypothesis::Unconditional,
            vec!["sobolev_heisenberg".into()],
        )?;
        routes.push(FkRoute::new(FkRouteName::FromSobolevJl, fk_from_sobolev(&jl)?)?);
    } else if g.k != 2 {
        // better of the two algebraically equivalent lift codings
        let mut lift = sobolev_lift(g)?;
        if g.k >= 3 {
            let sym = sobolev_lift_symmetric(g)?;
            if sym.value.estimate > lift.value.estimate {
                lift = sym;
            }
        }
        routes.push(FkRoute::new(FkRouteName::FromSobolevLift, fk_from_sobolev(&lift)?)?);
    }
    let unconditional = iso_lift(g, &iso_lower_heisenberg(g.n)?)?;
    routes.push(FkRoute::new(
        FkRouteName::FromIsoUnconditional,
        fk_from_iso(&unconditional, d)?,
    )?);
    if hypothesis == Hypothesis::PansuConjecture {
        let conjectural = iso_lift(g, &pansu_isoperimetric(g.n)?)?;
        routes.push(FkRoute::new(FkRouteName::FromIsoPansu, fk_from_iso(&conjectural, d)?)?);
    }
    Ok(routes)
}

/// The largest available lower bound; the returned route list names the
/// winner first and then every other candidate evaluated.
pub fn fk_best(g: GroupSpec, hypothesis: Hypothesis) -> Result<Bound> {
    let candidates = fk_candidates(g, hypothesis)?;
    let best = candidates
        .iter()
        .max_by(|a, b| {
            a.bound
                .value
                .estimate
                .partial_cmp(&b.bound.value.estimate)
                .expect("finite estimates")
        })
        .ok_or_else(|| Error::route_unavailable("fk_best", "no route applies"))?
        .clone();
    let mut route = vec!["fk_best".to_string()];
    route.extend(best.bound.route.iter().cloned());
    for other in &candidates {
        if other.name != best.name {
            route.extend(other.bound.route.iter().cloned());
        }
    }
    Bound::new(Quantity::FkConst, best.bound.direction, best.bound.value, best.bound.hypothesis, route)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isoperimetry::iso_euclidean_value;
    use std::f64::consts::PI;

    #[test]
    fn euclidean_values() {
        // d = 3: omega_3^(2/3) pi^2 because j_{1/2,1} = pi
        let want3 = (4.0 * PI / 3.0).powf(2.0 / 3.0) * PI * PI;
        assert!((fk_euclidean(3).unwrap().estimate - want3).abs() < 1e-10);
        // d = 1: omega_1^2 (pi/2)^2 = pi^2
        assert!((fk_euclidean(1).unwrap().estimate - PI * PI).abs() < 1e-13);
        // d = 2: pi j_{0,1}^2
        let j01 = 2.40482555769577277;
        assert!((fk_euclidean(2).unwrap().estimate - PI * j01 * j01).abs() < 1e-9);
    }

    #[test]
    fn symmetrization_equality_case() {
        for d in 2..=40u32 {
            let iso = iso_euclidean_value(d).unwrap();
            let via_iso = fk_from_iso(&iso, d).unwrap();
            let exact = fk_euclidean(d).unwrap();
            let rel = (via_iso.value.estimate - exact.estimate).abs() / exact.estimate;
            assert!(rel < 1e-10, "d = {d}: rel {rel:.2e}");
        }
    }

    #[test]
    fn heisenberg_iso_route_values() {
        let h1 = iso_lower_heisenberg(1).unwrap();
        let fk1 = fk_from_iso(&h1, 4).unwrap();
        assert!((fk1.value.estimate - 8.78812966018655634).abs() < 1e-9);
        let h2 = iso_lower_heisenberg(2).unwrap();
        let fk2 = fk_from_iso(&h2, 6).unwrap();
        assert!((fk2.value.estimate - 17.9012113733906758).abs() < 1e-9);
    }

    #[test]
    fn relabel_guards() {
        let h1 = iso_lower_heisenberg(1).unwrap();
        assert!(fk_from_iso(&h1, 6).is_err()); // wrong dimension
        let fk = fk_from_iso(&h1, 4).unwrap();
        assert!(fk_from_sobolev(&fk).is_err()); // wrong quantity
    }

    #[test]
    fn zero_vacuous_bound() {
        let zero = Bound::new(
            Quantity::SobolevConst,
            Direction::Lower,
            Value::literal(0.0),
            Hypothesis::Unconditional,
            vec!["sobolev_lift".into()],
        )
        .unwrap();
        let fk = fk_from_sobolev(&zero).unwrap();
        assert_eq!(fk.value.estimate, 0.0);
    }

    #[test]
    fn best_route_selection() {
        // (1,0): iso route 8.788 beats Jerison-Lee 2 pi
        let best = fk_best(GroupSpec::new(1, 0).unwrap(), Hypothesis::Unconditional).unwrap();
        assert!((best.value.estimate - 8.78812966018655634).abs() < 1e-8);
        assert_eq!(best.route[0], "fk_best");
        assert!(best.route.iter().any(|r| r == "sobolev_heisenberg"));
        // Euclidean factor goes through the exact value
        let eu = fk_best(GroupSpec::new(0, 5).unwrap(), Hypothesis::Unconditional).unwrap();
        assert_eq!(eu.direction, Direction::Exact);
        assert!((eu.value.estimate - fk_euclidean(5).unwrap().estimate).abs() < 1e-14);
        // (1,2): no Sobolev lift; iso route only
        let g12 = fk_best(GroupSpec::new(1, 2).unwrap(), Hypothesis::Unconditional).unwrap();
        assert!((g12.value.estimate - 19.0226241855753478).abs() < 1e-8);
        assert!(!g12.route.iter().any(|r| r.contains("sobolev")));
    }

    #[test]
    fn pansu_mode_dominates() {
        for (n, k) in [(1u32, 0u32), (1, 2), (2, 1), (3, 5), (5, 10)] {
            let g = GroupSpec::new(n, k).unwrap();
            let un = fk_best(g, Hypothesis::Unconditional).unwrap();
            let pa = fk_best(g, Hypothesis::PansuConjecture).unwrap();
            assert!(
                pa.value.estimate >= un.value.estimate,
                "({n},{k}): {} < {}",
                pa.value.estimate,
                un.value.estimate
            );
        }
    }
}
