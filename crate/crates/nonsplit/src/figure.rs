//! `f(n) = 4A(n, P_d)` for `d = 1` (red circles) and `d = 100` (blue
//! diamonds) as a standalone SVG, plus the plotted data as CSV.

use std::fmt::Write as _;

use nonsplit_core::exponent::ExponentResult;
use nonsplit_core::real::{to_sig_digits, Precision};
use serde::Serialize;

use crate::table::{exponent_grid, extremal_polynomials};

pub const LOW_DEGREE: usize = 1;
pub const HIGH_DEGREE: usize = 100;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 70.0;

#[derive(Debug, Clone)]
pub struct FigureData {
    pub ns: Vec<u64>,
    pub low: Vec<ExponentResult>,
    pub high: Vec<ExponentResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FigurePoint {
    pub n: u64,
    pub four_a_d1: String,
    pub four_a_d100: String,
}

pub fn compute(n_min: u64, n_max: u64, prec: Precision) -> nonsplit_core::Result<FigureData> {
    let ns: Vec<u64> = (n_min..=n_max).collect();
    let polys = extremal_polynomials(&[LOW_DEGREE, HIGH_DEGREE])?;
    let grid = exponent_grid(&ns, &polys, prec)?;
    Ok(FigureData {
        low: ns.iter().map(|&n| grid[&(n, LOW_DEGREE)].clone()).collect(),
        high: ns.iter().map(|&n| grid[&(n, HIGH_DEGREE)].clone()).collect(),
        ns,
    })
}

impl FigureData {
    pub fn points(&self) -> Vec<FigurePoint> {
        self.ns
            .iter()
            .zip(self.low.iter().zip(&self.high))
            .map(|(&n, (lo, hi))| FigurePoint {
                n,
                four_a_d1: to_sig_digits(&lo.four_a, 4),
                four_a_d100: to_sig_digits(&hi.four_a, 4),
            })
            .collect()
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for p in self.points() {
            w.serialize(p)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_svg(&self) -> String {
        let lo: Vec<f64> = self.low.iter().map(ExponentResult::four_a_f64).collect();
        let hi: Vec<f64> = self.high.iter().map(ExponentResult::four_a_f64).collect();
        let series = [(lo, Marker::Circle), (hi, Marker::Diamond)];
        render(&self.ns, &series)
    }
}

#[derive(Clone, Copy)]
enum Marker {
    Circle,
    Diamond,
}

impl Marker {
    fn color(self) -> &'static str {
        match self {
            Marker::Circle => "red",
            Marker::Diamond => "blue",
        }
    }

    fn draw(self, out: &mut String, x: f64, y: f64) {
        match self {
            Marker::Circle => {
                let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3.5" fill="red"/>"#);
            }
            Marker::Diamond => {
                let r = 4.5;
                let _ = writeln!(
                    out,
                    r#"<polygon points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="blue"/>"#,
                    x,
                    y - r,
                    x + r,
                    y,
                    x,
                    y + r,
                    x - r,
                    y
                );
            }
        }
    }
}

/// Tick spacing of 1, 2 or 5 times a power of ten giving at most `max_ticks`.
fn tick_step(span: f64, max_ticks: usize) -> f64 {
    let raw = span / max_ticks as f64;
    let mag = 10f64.powf(raw.log10().floor());
    [1.0, 2.0, 5.0, 10.0]
        .into_iter()
        .map(|m| m * mag)
        .find(|&s| s >= raw)
        .unwrap_or(10.0 * mag)
}

fn render(ns: &[u64], series: &[(Vec<f64>, Marker)]) -> String {
    let x_min = *ns.first().expect("non-empty range") as f64;
    let x_max = *ns.last().expect("non-empty range") as f64;
    let all = series.iter().flat_map(|(v, _)| v.iter().copied());
    let (y_lo, y_hi) = all.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    let y_step = tick_step(y_hi - y_lo, 8);
    let y_min = (y_lo / y_step).floor() * y_step;
    let y_max = (y_hi / y_step).ceil() * y_step;
    let x_step = tick_step(x_max - x_min, 10);

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |x: f64| LEFT + (x - x_min) / (x_max - x_min) * plot_w;
    let py = |y: f64| TOP + (y_max - y) / (y_max - y_min) * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="14">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="30" text-anchor="middle" font-size="16">f(n) = 4A(n, P_d)</text>"#,
        LEFT + plot_w / 2.0
    );

    // Axes and ticks.
    let _ = writeln!(
        s,
        r#"<path d="M{LEFT},{TOP} V{:.2} H{:.2}" fill="none" stroke="black"/>"#,
        TOP + plot_h,
        LEFT + plot_w
    );
    let mut x = (x_min / x_step).ceil() * x_step;
    while x <= x_max + 1e-9 {
        let sx = px(x);
        let _ = writeln!(
            s,
            r#"<line x1="{sx:.2}" y1="{:.2}" x2="{sx:.2}" y2="{:.2}" stroke="black"/><text x="{sx:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            TOP + plot_h,
            TOP + plot_h + 6.0,
            TOP + plot_h + 24.0,
            x
        );
        x += x_step;
    }
    let decimals = if y_step >= 1.0 { 0 } else { (-y_step.log10()).ceil() as usize };
    let mut y = y_min;
    while y <= y_max + 1e-9 {
        let sy = py(y);
        let _ = writeln!(
            s,
            r##"<line x1="{:.2}" y1="{sy:.2}" x2="{LEFT}" y2="{sy:.2}" stroke="black"/><line x1="{LEFT}" y1="{sy:.2}" x2="{:.2}" y2="{sy:.2}" stroke="#dddddd"/><text x="{:.2}" y="{:.2}" text-anchor="end">{:.*}</text>"##,
            LEFT - 6.0,
            LEFT + plot_w,
            LEFT - 10.0,
            sy + 5.0,
            decimals,
            y
        );
        y += y_step;
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">n</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 20.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">4A(n, P_d)</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );

    for (values, marker) in series {
        let _ = writeln!(s, r#"<g fill="{}">"#, marker.color());
        for (&n, &v) in ns.iter().zip(values) {
            marker.draw(&mut s, px(n as f64), py(v));
        }
        s.push_str("</g>\n");
    }

    // Legend, lower right where both series sit high above.
    let lx = LEFT + plot_w - 170.0;
    let ly = TOP + plot_h - 60.0;
    let _ = writeln!(
        s,
        r#"<rect x="{:.2}" y="{:.2}" width="160" height="50" fill="white" stroke="black"/>"#,
        lx,
        ly
    );
    Marker::Diamond.draw(&mut s, lx + 15.0, ly + 16.0);
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">d = {HIGH_DEGREE}</text>"#, lx + 30.0, ly + 21.0);
    Marker::Circle.draw(&mut s, lx + 15.0, ly + 36.0);
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">d = {LOW_DEGREE}</text>"#, lx + 30.0, ly + 41.0);
    s.push_str("</svg>\n");
    s
}
