//! Browser bindings: draw a graph, compute its tree function, plot the
//! normalised label-count MGF. Everything returns strings (SVG or JSON).

use std::fmt::Write;

use fractal_forest::algebra::WeightTriple;
use fractal_forest::graph::{build, Family};
use fractal_forest::report::{gf_report, gf_report_all, GfRequest};
use fractal_forest::stats::{label_stat_gf, mgf_normalized_label, StatModel};
use fractal_forest::{Error, Label};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Levels drawn in the browser; past this the SVG gets unwieldy.
pub const MAX_RENDER_LEVEL: u32 = 6;

fn js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

fn colour(l: Label) -> &'static str {
    match l {
        Label::A => "#d1495b",
        Label::B => "#00798c",
        Label::C => "#edae49",
    }
}

pub fn render_svg(family: &str, level: u32) -> Result<String, Error> {
    if level > MAX_RENDER_LEVEL {
        return Err(Error::Capability(format!("rendering goes up to level {MAX_RENDER_LEVEL}")));
    }
    let g = build(family.parse()?, level, false)?;
    let pts: Vec<(f64, f64)> = (0..g.num_vertices()).map(|v| g.position(v)).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        (x0, x1, y0, y1) = (x0.min(x), x1.max(x), y0.min(y), y1.max(y));
    }
    let size = 480.0;
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let k = (size - 40.0) / span;
    // flip y so the top corner is drawn on top
    let map = |(x, y): (f64, f64)| (20.0 + (x - x0) * k, size - 20.0 - (y - y0) * k);
    let r = (k * 0.12).clamp(1.5, 6.0);
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{size}" height="{size}">"#).unwrap();
    for e in g.non_loop_edges() {
        let ((ax, ay), (bx, by)) = (map(pts[e.u]), map(pts[e.v]));
        writeln!(
            s,
            r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}" stroke="{}" stroke-width="2"><title>{}</title></line>"#,
            colour(e.label),
            e.label
        )
        .unwrap();
    }
    for (i, &p) in pts.iter().enumerate() {
        let (x, y) = map(p);
        writeln!(s, r##"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}" fill="#222"><title>{}</title></circle>"##, g.vertices[i]).unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn tree_gf_json(family: &str, level: u32, a: &str, b: &str, c: &str, method: &str) -> Result<String, Error> {
    let family: Family = family.parse()?;
    let req = GfRequest::new(family, level, WeightTriple::parse(a, b, c)?);
    let r = if method == "all" { gf_report_all(&req)? } else { gf_report(&req, method.parse()?)? };
    Ok(serde_json::to_string(&r).expect("report serializes"))
}

/// `[[t, mgf, exp(t^2/2)], ...]` on an evenly spaced grid over `[-2, 2]`.
pub fn mgf_curve_json(n: u32, label: &str, points: u32) -> Result<String, Error> {
    let label: Label = label.parse()?;
    let stat = label_stat_gf(StatModel::Rotational, n, label)?;
    let points = points.clamp(2, 401);
    let mut rows = Vec::new();
    for i in 0..points {
        let t = -2.0 + 4.0 * i as f64 / (points - 1) as f64;
        let m = mgf_normalized_label(n, label, t)?.to_f64();
        rows.push(json!([t, m, (t * t / 2.0).exp()]));
    }
    Ok(json!({
        "n": n,
        "label": label,
        "mean": stat.mean.to_string(),
        "variance": stat.variance.to_string(),
        "curve": rows,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn render_graph(family: &str, level: u32) -> Result<String, JsError> {
    render_svg(family, level).map_err(js)
}

#[wasm_bindgen]
pub fn spanning_tree_gf(family: &str, level: u32, a: &str, b: &str, c: &str, method: &str) -> Result<String, JsError> {
    tree_gf_json(family, level, a, b, c, method).map_err(js)
}

#[wasm_bindgen]
pub fn mgf_curve(n: u32, label: &str, points: u32) -> Result<String, JsError> {
    mgf_curve_json(n, label, points).map_err(js)
}
