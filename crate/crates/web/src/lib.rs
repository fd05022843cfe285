//! Browser bindings for three interactive views: the zeta function of a
//! line arrangement, walls crossed between two points of the plane, and
//! the diagonal-embedding filtration.
//!
//! Every export takes and returns strings. Results are JSON objects; on
//! failure the object has a single `error` key.

use hyparr::algebra::{format_rational, parse_rational};
use hyparr::harness::lct;
use hyparr::io::rational_texts;
use hyparr::vmono::{diag_annihilator, diag_s_eigenvalue, diag_vres_member, diag_walls, DiagClass};
use hyparr::walls::{
    chamber_path, extend_restricted_walls, separating_walls, walls_from_resolution, WallInstance,
    WallSet,
};
use hyparr::zeta::{candidate_poles, local_zeta};
use hyparr::{Arrangement, Rational};
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn finish(result: Result<Value, String>) -> String {
    let v = result.unwrap_or_else(|e| json!({ "error": e }));
    serde_json::to_string(&v).expect("serializes")
}

fn point(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|t| parse_rational(t).map_err(|e| e.to_string()))
        .collect()
}

/// Lines through the origin given as `a b [mult]` per line, e.g.
/// `"1 0\n0 1\n1 -1 2"`.
pub fn parse_lines(text: &str) -> Result<Arrangement, String> {
    let mut normals = Vec::new();
    let mut mults = Vec::new();
    for (i, line) in text.lines().map(str::trim).filter(|l| !l.is_empty()).enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(format!("line {}: expected `a b` or `a b mult`", i + 1));
        }
        let a = parse_rational(fields[0]).map_err(|e| e.to_string())?;
        let b = parse_rational(fields[1]).map_err(|e| e.to_string())?;
        let m = match fields.get(2) {
            Some(m) => m.parse::<u64>().map_err(|_| format!("line {}: bad multiplicity", i + 1))?,
            None => 1,
        };
        normals.push(vec![a, b]);
        mults.push(m);
    }
    Arrangement::new(2, normals, mults).map_err(|e| e.to_string())
}

fn line_zeta_value(text: &str) -> Result<Value, String> {
    let arr = parse_lines(text)?;
    if arr.is_empty() {
        return Err("enter at least one line".into());
    }
    let z = local_zeta(&arr).map_err(|e| e.to_string())?;
    let poles: Vec<String> = z
        .poles()
        .univariate
        .iter()
        .map(|(p, _)| format_rational(p))
        .collect();
    Ok(json!({
        "zeta": z.to_string(),
        "poles": poles,
        "candidates": rational_texts(&candidate_poles(&arr).map_err(|e| e.to_string())?),
        "lct": format_rational(&lct(&arr).map_err(|e| e.to_string())?),
        "degree": arr.degree(),
    }))
}

/// Local zeta function, poles, candidate poles and lct of a line
/// arrangement.
#[wasm_bindgen]
pub fn line_zeta(text: &str) -> String {
    finish(line_zeta_value(text))
}

/// Wall sets offered by the chamber view.
pub fn named_walls(name: &str) -> Result<WallSet, String> {
    match name {
        "diagonal" => Ok(diag_walls()),
        "skew" => walls_from_resolution(&[vec![2, 1]])
            .and_then(|ws| extend_restricted_walls(&ws))
            .map_err(|e| e.to_string()),
        "lines" => walls_from_resolution(&[vec![1, 0], vec![0, 1], vec![1, 2], vec![3, 1]])
            .map_err(|e| e.to_string()),
        _ => Err(format!("unknown wall set {name:?}")),
    }
}

const VIEW: (f64, f64) = (-0.5, 3.5);
const SIZE: f64 = 400.0;

fn to_px(x: f64, y: f64) -> (f64, f64) {
    let scale = SIZE / (VIEW.1 - VIEW.0);
    ((x - VIEW.0) * scale, SIZE - (y - VIEW.0) * scale)
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

/// Segment of `l1 x + l2 y = c` inside the view square.
fn clip(l1: f64, l2: f64, c: f64) -> Option<((f64, f64), (f64, f64))> {
    let (lo, hi) = VIEW;
    let mut pts = Vec::new();
    if l2 != 0.0 {
        for x in [lo, hi] {
            let y = (c - l1 * x) / l2;
            if (lo..=hi).contains(&y) {
                pts.push((x, y));
            }
        }
    }
    if l1 != 0.0 {
        for y in [lo, hi] {
            let x = (c - l2 * y) / l1;
            if (lo..=hi).contains(&x) {
                pts.push((x, y));
            }
        }
    }
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    pts.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
    (pts.len() >= 2).then(|| (pts[0], pts[pts.len() - 1]))
}

fn svg_line(p: (f64, f64), q: (f64, f64), style: &str) -> String {
    let (x1, y1) = to_px(p.0, p.1);
    let (x2, y2) = to_px(q.0, q.1);
    format!("<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" {style}/>")
}

fn wall_label(w: &WallInstance) -> String {
    let terms: Vec<String> = w
        .normal
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(i, c)| {
            if num_traits::One::is_one(c) {
                format!("a{}", i + 1)
            } else {
                format!("{c}a{}", i + 1)
            }
        })
        .collect();
    format!("{} = {}", terms.join(" + "), format_rational(&w.level))
}

/// Every wall of a planar wall set meeting the view, as SVG lines.
fn walls_svg(ws: &WallSet, crossed: &[WallInstance]) -> String {
    let mut out = String::new();
    for fam in ws.families() {
        let l1 = fam.normal()[0].to_f64().unwrap_or(0.0);
        let l2 = fam.normal()[1].to_f64().unwrap_or(0.0);
        let corners = [(VIEW.0, VIEW.0), (VIEW.0, VIEW.1), (VIEW.1, VIEW.0), (VIEW.1, VIEW.1)];
        let vals: Vec<f64> = corners.iter().map(|(x, y)| l1 * x + l2 * y).collect();
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min).floor() as i64;
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max).ceil() as i64;
        for k in lo..=hi {
            for o in fam.offsets() {
                let level = Rational::from_integer(k.into()) + o;
                let hit = crossed
                    .iter()
                    .any(|w| w.normal == fam.normal() && w.level == level);
                let style = if hit {
                    "stroke=\"#c0392b\" stroke-width=\"2.5\""
                } else {
                    "stroke=\"#7f8c8d\" stroke-width=\"1\""
                };
                if let Some((p, q)) = clip(l1, l2, f(&level)) {
                    out.push_str(&svg_line(p, q, style));
                }
            }
        }
    }
    out
}

fn chamber_value(name: &str, a: &str, b: &str) -> Result<Value, String> {
    let ws = named_walls(name)?;
    let (a, b) = (point(a)?, point(b)?);
    if a.len() != 2 || b.len() != 2 {
        return Err("points need two coordinates".into());
    }
    let separating = separating_walls(&ws, &a, &b).map_err(|e| e.to_string())?;
    let order = if a == b {
        Vec::new()
    } else {
        chamber_path(&ws, &a, &b).map_err(|e| e.to_string())?.walls
    };
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\" width=\"{SIZE}\" height=\"{SIZE}\">"
    );
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"#fdfdfd\"/>");
    svg.push_str(&walls_svg(&ws, &separating));
    svg.push_str(&svg_line(
        (f(&a[0]), f(&a[1])),
        (f(&b[0]), f(&b[1])),
        "stroke=\"#2c3e50\" stroke-width=\"2\" stroke-dasharray=\"5 3\"",
    ));
    for (p, color) in [(&a, "#27ae60"), (&b, "#2980b9")] {
        let (x, y) = to_px(f(&p[0]), f(&p[1]));
        svg.push_str(&format!("<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"5\" fill=\"{color}\"/>"));
    }
    svg.push_str("</svg>");
    Ok(json!({
        "same_chamber": separating.is_empty(),
        "crossings": order.iter().map(wall_label).collect::<Vec<_>>(),
        "svg": svg,
    }))
}

/// Walls crossed between `a` and `b` (comma-separated coordinates) for a
/// named wall set, in crossing order, with an SVG picture.
#[wasm_bindgen]
pub fn chamber_view(walls: &str, a: &str, b: &str) -> String {
    finish(chamber_value(walls, a, b))
}

fn diag_value(m: u32, n: u32, k: u32, alpha: &str, beta: &str) -> Result<Value, String> {
    let c = DiagClass::new(m.into(), n.into(), k.into());
    let a = point(alpha)?;
    let b = point(beta)?;
    if a.len() != 2 || b.len() != 2 {
        return Err("points need two coordinates".into());
    }
    let a = [a[0].clone(), a[1].clone()];
    let b = [b[0].clone(), b[1].clone()];
    let levels = diag_annihilator(&a, &b).map_err(|e| e.to_string())?;
    Ok(json!({
        "member_at_alpha": diag_vres_member(c, &a),
        "member_at_beta": diag_vres_member(c, &b),
        "eigenvalue": format_rational(&diag_s_eigenvalue(c)),
        "annihilator": levels.iter().map(|l| format!("(s1 + s2 + {l})")).collect::<String>(),
    }))
}

/// Membership of `t1^m t2^n / (t1 - t2)^k` at `alpha` and `beta`, its
/// eigenvalue, and the annihilator of the quotient between them.
#[wasm_bindgen]
pub fn diag_explorer(m: u32, n: u32, k: u32, alpha: &str, beta: &str) -> String {
    finish(diag_value(m, n, k, alpha, beta))
}
