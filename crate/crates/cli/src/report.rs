use std::fmt::Write;

use serde::Serialize;

/// Per-point results of a verification or sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub parameter: String,
    pub grid: Vec<f64>,
    pub quantity: String,
    pub values: Vec<f64>,
    /// Closed-form values the sweep is checked against, when there are any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Vec<f64>>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl SweepReport {
    /// Report whose `values` are themselves residuals.
    pub fn residuals(
        parameter: &str,
        quantity: &str,
        grid: Vec<f64>,
        values: Vec<f64>,
        tolerance: f64,
    ) -> Self {
        let max_residual = max_of(values.iter().copied());
        Self::finish(
            parameter,
            quantity,
            grid,
            values,
            None,
            max_residual,
            tolerance,
        )
    }

    /// Report comparing `values` with `expected` pointwise.
    pub fn against(
        parameter: &str,
        quantity: &str,
        grid: Vec<f64>,
        values: Vec<f64>,
        expected: Vec<f64>,
        tolerance: f64,
    ) -> Self {
        let max_residual = max_of(values.iter().zip(&expected).map(|(v, e)| (v - e).abs()));
        Self::finish(
            parameter,
            quantity,
            grid,
            values,
            Some(expected),
            max_residual,
            tolerance,
        )
    }

    fn finish(
        parameter: &str,
        quantity: &str,
        grid: Vec<f64>,
        values: Vec<f64>,
        expected: Option<Vec<f64>>,
        max_residual: f64,
        tolerance: f64,
    ) -> Self {
        SweepReport {
            parameter: parameter.to_owned(),
            grid,
            quantity: quantity.to_owned(),
            values,
            expected,
            max_residual,
            // NaN never passes
            pass: max_residual < tolerance,
            tolerance,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// `param,value,quantity` rows: parameter name, grid value, result.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("param,value,quantity\n");
        for (g, v) in self.grid.iter().zip(&self.values) {
            let _ = writeln!(out, "{},{},{}", self.parameter, fmt_f64(*g), fmt_f64(*v));
        }
        out
    }
}

/// Maximum that propagates NaN.
fn max_of(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(0.0, |m, v| {
        if v.is_nan() || m.is_nan() {
            f64::NAN
        } else {
            m.max(v)
        }
    })
}

/// Shortest representation that parses back to the same `f64`.
pub fn fmt_f64(v: f64) -> String {
    ryu::Buffer::new().format(v).to_owned()
}
