use serde::{Deserialize, Serialize};

/// How a numeric estimate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ExactFormula,
    Series,
    RootFind,
    Quadrature,
    PaperTable,
}

const EPS: f64 = f64::EPSILON;

/// A real estimate together with a non-negative absolute error bound.
///
/// Arithmetic propagates the bound by first-order interval rules with the
/// second-order cross term included, plus a rounding allowance, so that the
/// resulting interval contains the image of the operand intervals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Value {
    pub estimate: f64,
    pub err: f64,
    pub method: Method,
}

impl Value {
    pub fn new(estimate: f64, err: f64, method: Method) -> Self {
        debug_assert!(estimate.is_finite(), "estimate must be finite");
        debug_assert!(err.is_finite() && err >= 0.0, "err must be finite and >= 0");
        Value { estimate, err, method }
    }

    /// A closed-form evaluation; err covers floating-point rounding only.
    pub fn exact(estimate: f64) -> Self {
        Value::new(estimate, 4.0 * EPS * estimate.abs(), Method::ExactFormula)
    }

    /// A machine-representable constant with zero error (integers, 1/128, ...).
    pub fn literal(estimate: f64) -> Self {
        Value::new(estimate, 0.0, Method::ExactFormula)
    }

    /// A value as printed in a reference table, with `ulp` the unit in the
    /// last printed digit. The recorded uncertainty is one such unit.
    pub fn paper(estimate: f64, ulp: f64) -> Self {
        Value::new(estimate, ulp, Method::PaperTable)
    }

    fn combine_method(a: Method, b: Method) -> Method {
        a.max(b)
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn add(self, rhs: Value) -> Value {
        let est = self.estimate + rhs.estimate;
        Value::new(
            est,
            self.err + rhs.err + EPS * est.abs(),
            Self::combine_method(self.method, rhs.method),
        )
    }

    pub fn sub(self, rhs: Value) -> Value {
        let est = self.estimate - rhs.estimate;
        Value::new(
            est,
            self.err + rhs.err + EPS * est.abs(),
            Self::combine_method(self.method, rhs.method),
        )
    }

    pub fn mul(self, rhs: Value) -> Value {
        let est = self.estimate * rhs.estimate;
        let err = self.estimate.abs() * rhs.err
            + rhs.estimate.abs() * self.err
            + self.err * rhs.err
            + EPS * est.abs();
        Value::new(est, err, Self::combine_method(self.method, rhs.method))
    }

    /// Division; denominator interval must stay away from zero.
    pub fn div(self, rhs: Value) -> Value {
        let d = rhs.estimate.abs() - rhs.err;
        assert!(d > 0.0, "division by interval containing zero");
        let est = self.estimate / rhs.estimate;
        let err = (self.err + est.abs() * rhs.err) / d + EPS * est.abs();
        Value::new(est, err, Self::combine_method(self.method, rhs.method))
    }

    pub fn recip(self) -> Value {
        Value::literal(1.0).div(self)
    }

    /// Multiply by an error-free scalar.
    pub fn scale(self, c: f64) -> Value {
        let est = c * self.estimate;
        Value::new(est, c.abs() * self.err + EPS * est.abs(), self.method)
    }

    /// Real power of a positive value. For `p` with |p| >= 1 the first-order
    /// amplification |p| x^(p-1) err grows, for |p| < 1 it shrinks; a rounding
    /// allowance proportional to |p ln x| covers the powf evaluation itself.
    pub fn powf(self, p: f64) -> Value {
        if p == 0.0 {
            return Value::literal(1.0).with_method(self.method);
        }
        if p == 1.0 {
            return self;
        }
        assert!(
            self.estimate > self.err,
            "powf requires an interval strictly above zero"
        );
        let est = self.estimate.powf(p);
        let deriv = p.abs() * self.estimate.powf(p - 1.0);
        let round = ((p * self.estimate.ln()).abs() + 2.0) * EPS * est.abs();
        // second-order guard: evaluate at the worse interval end
        let hi = (self.estimate + self.err).powf(p);
        let lo = (self.estimate - self.err).powf(p);
        let spread = (hi - est).abs().max((est - lo).abs());
        Value::new(est, spread.max(deriv * self.err) + round, self.method)
    }

    pub fn powi(self, p: i32) -> Value {
        self.powf(p as f64)
    }

    pub fn ln(self) -> Value {
        assert!(self.estimate > self.err, "ln requires interval above zero");
        let est = self.estimate.ln();
        let err = self.err / (self.estimate - self.err) + EPS * (est.abs() + 1.0);
        Value::new(est, err, self.method)
    }

    pub fn exp(self) -> Value {
        let est = self.estimate.exp();
        let err = est * ((self.err).exp_m1() + EPS * (self.estimate.abs() + 2.0));
        Value::new(est, err, self.method)
    }

    pub fn abs(self) -> Value {
        Value::new(self.estimate.abs(), self.err, self.method)
    }

    /// Interval [estimate - err, estimate + err].
    pub fn interval(&self) -> (f64, f64) {
        (self.estimate - self.err, self.estimate + self.err)
    }

    /// Whether `x` lies in the tracked interval.
    pub fn contains(&self, x: f64) -> bool {
        let (lo, hi) = self.interval();
        lo <= x && x <= hi
    }

    /// Relative error bound (err / |estimate|), infinite for estimate 0.
    pub fn rel_err(&self) -> f64 {
        if self.estimate == 0.0 {
            if self.err == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.err / self.estimate.abs()
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:.9e} (err {:.3e})", self.estimate, self.err)
    }
}
