//! Bound report: the computable parts of the least non-split prime bound for
//! a base field `F` and relative degree `n`, each tagged with whether it is
//! rigorous.

use std::fmt::Write as _;

use nonsplit_core::admissible::AdmissiblePolynomial;
use nonsplit_core::bounds::{
    b_f, comparison_exponents, consistency_notes, log_c_f_scale, n_f_constant, non_galois_factor,
    theorem1_exponent, x0, BaseFieldParams, BoundConfig,
};
use nonsplit_core::exponent::{maximize_a, ExponentResult};
use nonsplit_core::real::Precision;
use serde::Serialize;
use serde_json::{json, Value};

use crate::json::ExponentJson;

/// Everything the report was computed from, echoed back.
#[derive(Debug, Clone, Serialize)]
pub struct BoundInputs {
    #[serde(rename = "n_F")]
    pub n_f: u32,
    #[serde(rename = "D_F")]
    pub d_f: f64,
    #[serde(rename = "log_D_F")]
    pub log_d_f: f64,
    pub normal_tower: bool,
    pub n: u64,
    pub degree: usize,
    pub epsilon: f64,
    pub eta: f64,
    pub c1: f64,
    pub implied_field_log_disc: f64,
    pub implied_siegel: f64,
    pub precision_bits: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Flagged {
    pub value: Value,
    pub rigorous: bool,
}

impl Flagged {
    fn new(value: impl Into<Value>, rigorous: bool) -> Self {
        Self {
            value: value.into(),
            rigorous,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundOutputs {
    #[serde(rename = "four_A")]
    pub four_a: Flagged,
    #[serde(rename = "A")]
    pub a: Flagged,
    pub lambda: Flagged,
    pub exponent: Flagged,
    #[serde(rename = "N_F")]
    pub n_f: Flagged,
    #[serde(rename = "B_F")]
    pub b_f: Flagged,
    #[serde(rename = "log_X0")]
    pub log_x0: Flagged,
    #[serde(rename = "X0")]
    pub x0: Flagged,
    #[serde(rename = "log_C_F_scale")]
    pub log_c_f_scale: Flagged,
    pub non_galois_log_factor: Flagged,
    pub burgess: Flagged,
    pub li_four_a: Flagged,
    pub li_exponent: Flagged,
    pub murty_patankar: Flagged,
    pub improvement_over_murty_patankar: Flagged,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub inputs: BoundInputs,
    pub outputs: BoundOutputs,
    pub notes: Vec<String>,
}

pub fn bound_report(
    base: &BaseFieldParams,
    d_f: f64,
    n: u64,
    polynomial: &AdmissiblePolynomial,
    cfg: &BoundConfig,
    prec: Precision,
) -> nonsplit_core::Result<BoundReport> {
    cfg.validate()?;
    let result = maximize_a(n, polynomial, prec)?;
    bound_report_with(base, d_f, polynomial, &result, cfg, prec)
}

/// As [`bound_report`] with `A(n, P)` already computed.
pub fn bound_report_with(
    base: &BaseFieldParams,
    d_f: f64,
    polynomial: &AdmissiblePolynomial,
    result: &ExponentResult,
    cfg: &BoundConfig,
    prec: Precision,
) -> nonsplit_core::Result<BoundReport> {
    cfg.validate()?;
    let n = result.n;
    let a = result.a_f64();
    let four_a = result.four_a_f64();
    let exponent = theorem1_exponent(n, a, cfg.epsilon);
    let cmp = comparison_exponents(n, prec)?;
    let x = x0(base, cfg.eta, cfg)?;
    // With D_F = 1 the c_1 branch of B_F is beaten by N_F log D_F = 0.
    let field_exact = base.log_disc == 0.0;
    let exact = ExponentJson::from(result);

    let outputs = BoundOutputs {
        four_a: Flagged::new(exact.four_a, true),
        a: Flagged::new(exact.a, true),
        lambda: Flagged::new(exact.lambda, true),
        exponent: Flagged::new(exponent, true),
        n_f: Flagged::new(n_f_constant(base).to_string(), true),
        b_f: Flagged::new(b_f(base, cfg), field_exact),
        log_x0: Flagged::new(x.log_value, field_exact),
        x0: Flagged::new(x.value.map_or(Value::Null, Value::from), field_exact),
        log_c_f_scale: Flagged::new(log_c_f_scale(base, cfg), false),
        non_galois_log_factor: Flagged::new(non_galois_factor(n, polynomial, a), true),
        burgess: Flagged::new(cmp.burgess.map_or(Value::Null, Value::from), true),
        li_four_a: Flagged::new(cmp.li_four_a, true),
        li_exponent: Flagged::new(theorem1_exponent(n, cmp.li_four_a / 4.0, cfg.epsilon), true),
        murty_patankar: Flagged::new(cmp.murty_patankar, true),
        improvement_over_murty_patankar: Flagged::new(cmp.murty_patankar / exponent, true),
    };

    let mut notes: Vec<String> = consistency_notes(n, result.degree, four_a)
        .into_iter()
        .map(str::to_owned)
        .collect();
    if n == 2 {
        let rel = if exponent < 5.0 / 12.0 { "<" } else { ">=" };
        notes.push(format!("(1+eps)/(4A) = {exponent:.4} {rel} 5/12"));
    }
    notes.push(
        "c_1 and the implied constants in C_F are not determined by the theory; \
         outputs depending on them are marked non-rigorous"
            .to_owned(),
    );

    Ok(BoundReport {
        inputs: BoundInputs {
            n_f: base.degree,
            d_f,
            log_d_f: base.log_disc,
            normal_tower: base.normal_tower,
            n,
            degree: result.degree,
            epsilon: cfg.epsilon,
            eta: cfg.eta,
            c1: cfg.c1,
            implied_field_log_disc: cfg.implied.field_log_disc,
            implied_siegel: cfg.implied.siegel,
            precision_bits: result.precision_bits,
        },
        outputs,
        notes,
    })
}

impl BoundReport {
    pub fn to_json(&self) -> Value {
        json!(self)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let i = &self.inputs;
        let _ = writeln!(
            s,
            "F: n_F = {}, D_F = {}, normal tower = {}",
            i.n_f, i.d_f, i.normal_tower
        );
        let _ = writeln!(
            s,
            "n = {}, P = P_{}, eps = {}, eta = {}, c_1 = {}",
            i.n, i.degree, i.epsilon, i.eta, i.c1
        );
        let Value::Object(map) = json!(self.outputs) else {
            unreachable!("outputs serialize to an object")
        };
        for (key, v) in map {
            let value = &v["value"];
            let shown = match value {
                Value::String(t) => t.clone(),
                Value::Null => "n/a".to_owned(),
                other => other.to_string(),
            };
            let tag = if v["rigorous"] == Value::Bool(true) { "" } else { "  [non-rigorous]" };
            let _ = writeln!(s, "{key}: {shown}{tag}");
        }
        for note in &self.notes {
            let _ = writeln!(s, "note: {note}");
        }
        s
    }
}
