use std::fmt::Write as _;

use crate::glcm::DiagonalEnergies;
use crate::{Method, Real};

pub const REPORT_HEADER: &str = "method,rate,T,seed,n,e0_cover,e1_cover,e2_cover,e3_cover,e4_cover,\
e0_stego,e1_stego,e2_stego,e3_stego,e4_stego,detect_pct";

#[derive(Clone, Debug, PartialEq)]
pub struct ReportRow<F> {
    pub method: Method,
    pub rate: f64,
    pub threshold: u32,
    pub seed: u64,
    /// Corpus size.
    pub n: usize,
    pub cover: DiagonalEnergies<F>,
    pub stego: DiagonalEnergies<F>,
    /// Held-out detection accuracy in percent; 50 is chance.
    pub detect_pct: F,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExperimentReport<F> {
    pub rows: Vec<ReportRow<F>>,
}

pub fn report_csv<F: Real>(report: &ExperimentReport<F>) -> Vec<u8> {
    let mut out = String::from(REPORT_HEADER);
    out.push('\n');
    for r in &report.rows {
        write!(out, "{},{},{},{},{}", r.method, r.rate, r.threshold, r.seed, r.n).unwrap();
        for v in r.cover.e.iter().chain(&r.stego.e) {
            write!(out, ",{v}").unwrap();
        }
        writeln!(out, ",{}", r.detect_pct).unwrap();
    }
    out.into_bytes()
}

const PALETTE: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

/// Line plot of main-diagonal energy e0 against payload rate, one polyline
/// per method plus the cover level.
pub fn report_svg<F: Real>(report: &ExperimentReport<F>) -> String {
    let (w, h, pad) = (640.0, 400.0, 50.0);
    let mut methods: Vec<Method> = Vec::new();
    for r in &report.rows {
        if !methods.contains(&r.method) {
            methods.push(r.method);
        }
    }
    let to_f = |v: F| v.to_f64().unwrap_or(0.0);
    let rates: Vec<f64> = report.rows.iter().map(|r| r.rate).collect();
    let e0s: Vec<f64> = report
        .rows
        .iter()
        .flat_map(|r| [to_f(r.cover.e[0]), to_f(r.stego.e[0])])
        .collect();
    let (rmin, rmax) = bounds(&rates, 0.0, 1.0);
    let (emin, emax) = bounds(&e0s, 0.0, 1.0);
    let sx = |r: f64| pad + (r - rmin) / (rmax - rmin) * (w - 2.0 * pad);
    let sy = |e: f64| h - pad - (e - emin) / (emax - emin) * (h - 2.0 * pad);

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(svg, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    writeln!(
        svg,
        r#"<path d="M{pad} {pad} V{} H{}" fill="none" stroke="black"/>"#,
        h - pad,
        w - pad
    )
    .unwrap();
    writeln!(
        svg,
        r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">rate (bpp)</text>"#,
        w / 2.0,
        h - 12.0
    )
    .unwrap();
    writeln!(
        svg,
        r#"<text x="14" y="{}" font-size="12" transform="rotate(-90 14 {})" text-anchor="middle">e0</text>"#,
        h / 2.0,
        h / 2.0
    )
    .unwrap();
    for (k, label) in [(rmin, format!("{rmin}")), (rmax, format!("{rmax}"))] {
        writeln!(
            svg,
            r#"<text x="{:.1}" y="{}" font-size="10" text-anchor="middle">{label}</text>"#,
            sx(k),
            h - pad + 14.0
        )
        .unwrap();
    }
    for e in [emin, emax] {
        writeln!(
            svg,
            r#"<text x="{}" y="{:.1}" font-size="10" text-anchor="end">{e:.3}</text>"#,
            pad - 4.0,
            sy(e)
        )
        .unwrap();
    }

    let mut series: Vec<(String, Vec<(f64, f64)>)> = Vec::new();
    if let Some(first) = methods.first() {
        let cover: Vec<(f64, f64)> = report
            .rows
            .iter()
            .filter(|r| r.method == *first)
            .map(|r| (r.rate, to_f(r.cover.e[0])))
            .collect();
        series.push(("cover".into(), cover));
    }
    for m in &methods {
        let pts = report
            .rows
            .iter()
            .filter(|r| r.method == *m)
            .map(|r| (r.rate, to_f(r.stego.e[0])))
            .collect();
        series.push((m.name().to_string(), pts));
    }
    for (idx, (name, mut pts)) in series.into_iter().enumerate() {
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        let color = PALETTE[idx % PALETTE.len()];
        let points: Vec<String> = pts
            .iter()
            .map(|&(r, e)| format!("{:.1},{:.1}", sx(r), sy(e)))
            .collect();
        writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
            points.join(" ")
        )
        .unwrap();
        writeln!(
            svg,
            r#"<text x="{}" y="{}" font-size="11" fill="{color}">{name}</text>"#,
            w - pad + 4.0 - 90.0,
            pad + 14.0 * idx as f64
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    svg
}

fn bounds(values: &[f64], lo: f64, hi: f64) -> (f64, f64) {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !min.is_finite() || !max.is_finite() {
        return (lo, hi);
    }
    if max - min < 1e-9 {
        (min - 0.5, max + 0.5)
    } else {
        (min, max)
    }
}
