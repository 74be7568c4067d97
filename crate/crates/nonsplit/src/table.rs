//! `4A(n, P_d)` and `λ(n, P_d)` over a grid of `n` and `d`, rounded to four
//! figures with small `λ` written as `.0142`.

use std::collections::BTreeMap;

use nonsplit_core::admissible::{generate_extremal, AdmissiblePolynomial};
use nonsplit_core::exponent::{maximize_a, ExponentResult};
use nonsplit_core::real::{to_fixed_decimals, to_sig_digits, Precision};
use rayon::prelude::*;
use serde::Serialize;

use crate::json::ExponentJson;

pub const DEFAULT_DEGREES: [usize; 2] = [100, 1];

/// `4A` to four significant figures.
pub fn format_four_a(r: &ExponentResult) -> String {
    to_sig_digits(&r.four_a, 4)
}

/// `λ ≥ 1` to four significant figures, `λ < 1` to four decimals without the
/// leading zero (`.0142`).
pub fn format_lambda(r: &ExponentResult) -> String {
    if r.lambda_f64() >= 1.0 {
        to_sig_digits(&r.lambda_star, 4)
    } else {
        let s = to_fixed_decimals(&r.lambda_star, 4);
        s.strip_prefix('0').map(str::to_owned).unwrap_or(s)
    }
}

/// Generates `P_d` once for each requested degree.
pub fn extremal_polynomials(
    degrees: &[usize],
) -> nonsplit_core::Result<BTreeMap<usize, AdmissiblePolynomial>> {
    let mut unique: Vec<usize> = degrees.to_vec();
    unique.sort_unstable();
    unique.dedup();
    unique
        .into_par_iter()
        .map(|d| generate_extremal(d).map(|c| (d, c.polynomial)))
        .collect()
}

/// `A(n, P_d)` for every pair, computed in parallel; keys are `(n, d)`.
pub fn exponent_grid(
    ns: &[u64],
    polys: &BTreeMap<usize, AdmissiblePolynomial>,
    prec: Precision,
) -> nonsplit_core::Result<BTreeMap<(u64, usize), ExponentResult>> {
    let pairs: Vec<(u64, usize)> = ns
        .iter()
        .flat_map(|&n| polys.keys().map(move |&d| (n, d)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(n, d)| maximize_a(n, &polys[&d], prec).map(|r| ((n, d), r)))
        .collect()
}

#[derive(Debug, Clone)]
pub struct Table {
    pub degrees: Vec<usize>,
    pub rows: Vec<(u64, Vec<ExponentResult>)>,
}

pub fn compute(degrees: &[usize], ns: &[u64], prec: Precision) -> nonsplit_core::Result<Table> {
    let polys = extremal_polynomials(degrees)?;
    let grid = exponent_grid(ns, &polys, prec)?;
    let rows = ns
        .iter()
        .map(|&n| (n, degrees.iter().map(|&d| grid[&(n, d)].clone()).collect()))
        .collect();
    Ok(Table {
        degrees: degrees.to_vec(),
        rows,
    })
}

impl Table {
    pub fn to_text(&self) -> String {
        let mut header = vec!["n".to_string()];
        for d in &self.degrees {
            header.push(format!("4A(n,P_{d})"));
            header.push(format!("lambda(n,P_{d})"));
        }
        let mut out = header.join(" | ");
        out.push('\n');
        for (n, cells) in &self.rows {
            let mut line = vec![n.to_string()];
            for r in cells {
                line.push(format_four_a(r));
                line.push(format_lambda(r));
            }
            out.push_str(&line.join(" | "));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["n".to_string()];
        for d in &self.degrees {
            header.push(format!("four_a_d{d}"));
            header.push(format!("lambda_d{d}"));
        }
        w.write_record(&header)?;
        for (n, cells) in &self.rows {
            let mut rec = vec![n.to_string()];
            for r in cells {
                rec.push(format_four_a(r));
                rec.push(format_lambda(r));
            }
            w.write_record(&rec)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Cell {
            degree: usize,
            four_a_rounded: String,
            lambda_rounded: String,
            result: ExponentJson,
        }
        #[derive(Serialize)]
        struct Row {
            n: u64,
            cells: Vec<Cell>,
        }
        let rows: Vec<Row> = self
            .rows
            .iter()
            .map(|(n, cells)| Row {
                n: *n,
                cells: cells
                    .iter()
                    .map(|r| Cell {
                        degree: r.degree,
                        four_a_rounded: format_four_a(r),
                        lambda_rounded: format_lambda(r),
                        result: ExponentJson::from(r),
                    })
                    .collect(),
            })
            .collect();
        serde_json::to_value(rows).expect("table rows serialize")
    }
}
