use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::value::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    WeylConst,
    SobolevConst,
    GnConst,
    IsoConst,
    FkConst,
    PleijelConst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Lower,
    Upper,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    Unconditional,
    PansuConjecture,
}

/// Every operation name that may appear in a route.
pub const OP_NAMES: &[&str] = &[
    "homogeneous_dimension",
    "ln_gamma",
    "bessel_j",
    "bessel_first_zero",
    "hurwitz_zeta",
    "sphere_area",
    "ball_volume",
    "cn_series",
    "cn_hurwitz",
    "cn_closed_form",
    "weyl_heisenberg",
    "weyl_euclidean",
    "weyl_hn_rk",
    "weyl_product",
    "sobolev_heisenberg",
    "sobolev_euclidean",
    "gn_nagy",
    "gn_nagy_q",
    "gn_from_sobolev",
    "sobolev_lift",
    "sobolev_lift_symmetric",
    "product_sobolev",
    "wangzhang_limit",
    "rep_constant",
    "bathtub_constant",
    "iso_lower_heisenberg",
    "pansu_isoperimetric",
    "iso_euclidean",
    "iso_lift",
    "bathtub_oracle",
    "fk_from_sobolev",
    "fk_from_iso",
    "fk_euclidean",
    "fk_best",
    "gamma_from",
    "gamma_tilde",
    "gamma_euclidean",
    "pleijel_lifting_bound",
    "pleijel_iso_bound",
    "pleijel_pansu",
    "pansu_quotient_suite",
    "best_gamma_bound",
    "example_criterion",
    "large_dimension_scan",
    "run_campaign",
    "emit_table",
    "cli_main",
];

/// A directed estimate for a named quantity, carrying its hypothesis and the
/// chain of operations that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bound {
    pub quantity: Quantity,
    pub direction: Direction,
    pub value: Value,
    pub hypothesis: Hypothesis,
    pub route: Vec<String>,
}

impl Bound {
    pub fn new(
        quantity: Quantity,
        direction: Direction,
        value: Value,
        hypothesis: Hypothesis,
        route: Vec<String>,
    ) -> Result<Self> {
        if route.is_empty() {
            return Err(Error::mismatch("Bound", "route must be non-empty"));
        }
        for entry in &route {
            if !OP_NAMES.contains(&entry.as_str()) {
                return Err(Error::mismatch(
                    "Bound",
                    format!("route entry '{entry}' is not a known operation"),
                ));
            }
        }
        if hypothesis == Hypothesis::PansuConjecture
            && !route
                .iter()
                .any(|r| r == "pansu_isoperimetric" || r == "pleijel_pansu")
        {
            return Err(Error::mismatch(
                "Bound",
                "conjecture-conditional bound must route through pansu_isoperimetric or pleijel_pansu",
            ));
        }
        Ok(Bound { quantity, direction, value, hypothesis, route })
    }

    /// Prepend an operation to the provenance route.
    pub fn pushed(mut self, op: &str) -> Self {
        self.route.insert(0, op.to_string());
        self
    }

    pub fn is_lower_or_exact(&self) -> bool {
        matches!(self.direction, Direction::Lower | Direction::Exact)
    }
}

/// An isoperimetric bound together with the group it refers to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsoValue {
    pub group: GroupSpec,
    pub bound: Bound,
}

impl IsoValue {
    pub fn new(group: GroupSpec, bound: Bound) -> Result<Self> {
        if bound.quantity != Quantity::IsoConst {
            return Err(Error::mismatch("IsoValue", "bound must target IsoConst"));
        }
        // Exact direction is reserved for Euclidean groups or conjecture-
        // conditional values; unconditional non-Euclidean bounds are Lower.
        if bound.direction == Direction::Exact
            && group.n >= 1
            && bound.hypothesis == Hypothesis::Unconditional
        {
            return Err(Error::mismatch(
                "IsoValue",
                "exact unconditional isoperimetric constants exist only for n = 0",
            ));
        }
        Ok(IsoValue { group, bound })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::Method;

    #[test]
    fn pansu_bound_requires_pansu_route() {
        let v = Value::new(1.0, 0.0, Method::ExactFormula);
        let bad = Bound::new(
            Quantity::IsoConst,
            Direction::Exact,
            v,
            Hypothesis::PansuConjecture,
            vec!["iso_euclidean".into()],
        );
        assert!(bad.is_err());
        let good = Bound::new(
            Quantity::IsoConst,
            Direction::Exact,
            v,
            Hypothesis::PansuConjecture,
            vec!["pansu_isoperimetric".into()],
        );
        assert!(good.is_ok());
    }

    #[test]
    fn route_entries_validated() {
        let v = Value::new(1.0, 0.0, Method::ExactFormula);
        let bad = Bound::new(
            Quantity::FkConst,
            Direction::Lower,
            v,
            Hypothesis::Unconditional,
            vec!["not_an_op".into()],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn iso_value_rejects_unconditional_exact_heisenberg() {
        let v = Value::new(3.0, 0.0, Method::ExactFormula);
        let b = Bound::new(
            Quantity::IsoConst,
            Direction::Exact,
            v,
            Hypothesis::Unconditional,
            vec!["iso_euclidean".into()],
        )
        .unwrap();
        assert!(IsoValue::new(GroupSpec::new(1, 0).unwrap(), b.clone()).is_err());
        assert!(IsoValue::new(GroupSpec::new(0, 3).unwrap(), b).is_ok());
    }
}
