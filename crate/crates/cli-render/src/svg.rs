//! SVG rendering of a realized geodesic fan and its escaping horocyclic
//! path, in the disk or half-plane model.
//!
//! Every drawn element is preceded by a machine-readable comment carrying
//! its exact geometry at full float precision, so downstream checks can
//! verify orthogonality to the unit circle and arc-to-arc connectivity
//! without re-deriving the construction.

use fenchel_nielsen::derive_sequences;
use hyperbolic_core::{cayley_interior, cayley_to_disk, MobiusMap};
use shear_fan::{
    assemble_shears, measure_path, realize_fan, GeodesicFan, HorocyclicPath, JunctionParity,
};

use crate::config::{RenderModel, RunConfig};
use crate::emit::fmt_f64;
use crate::error::CliError;

/// A rendered fan: the SVG document plus any warnings (clamped depth or
/// exhausted resolution) that a strict caller may escalate.
#[derive(Debug, Clone)]
pub struct FanRender {
    pub svg: String,
    pub warnings: Vec<String>,
}

fn inversion() -> MobiusMap {
    MobiusMap { a: 0.0, b: -1.0, c: 1.0, d: 0.0 }
}

fn sample_segment(m: &MobiusMap, u0: f64, u1: f64, h: f64, samples: usize) -> Vec<(f64, f64)> {
    (0..samples)
        .map(|k| {
            let t = k as f64 / (samples - 1) as f64;
            m.apply_interior(u0 + (u1 - u0) * t, h)
        })
        .collect()
}

/// Replays the junction walk to place every horocyclic arc in the upper half
/// plane. Each arc is a horizontal segment in its junction's frame (or that
/// frame's image under `z -> -1/z` at odd junctions and for the anchor arc),
/// so uniform samples in the local coordinate are uniform in arc length.
fn sample_arcs(
    fan: &GeodesicFan,
    path: &HorocyclicPath,
    s1: f64,
    samples: usize,
) -> Vec<Vec<(f64, f64)>> {
    let inv = inversion();
    let mut g = MobiusMap { a: -1.0, b: -1.0, c: 1.0, d: 0.0 };
    let mut y = (-s1).exp();
    let mut arcs = Vec::with_capacity(path.len());
    arcs.push(sample_segment(&g.compose(&inv), 1.0, 0.0, 1.0 / y, samples));
    for idx in 0..path.len().saturating_sub(1) {
        let m = idx + 2;
        let c = fan.width(m).expect("path only covers walked junctions");
        let parity = fan.parity(m).expect("path only covers walked junctions");
        let arc = match parity {
            JunctionParity::Even => sample_segment(&g, 0.0, c, y, samples),
            JunctionParity::Odd => sample_segment(&g.compose(&inv), 0.0, -1.0 / c, 1.0 / y, samples),
        };
        arcs.push(arc);
        let tinv = match parity {
            JunctionParity::Even => MobiusMap { a: c, b: c, c: 0.0, d: 1.0 },
            JunctionParity::Odd => MobiusMap { a: c, b: 0.0, c: 1.0, d: 1.0 },
        };
        g = g.compose(&tinv);
        y /= c;
    }
    arcs
}

enum DiskGeo {
    /// Circular arc orthogonal to the unit circle: center and radius satisfy
    /// cx^2 + cy^2 = r^2 + 1.
    Arc { cx: f64, cy: f64, r: f64 },
    /// Diameter (or numerically indistinguishable from one).
    Line,
}

fn disk_geodesic(t1: f64, t2: f64) -> DiskGeo {
    let (x1, y1) = (t1.cos(), t1.sin());
    let (x2, y2) = (t2.cos(), t2.sin());
    let den = 1.0 + (x1 * x2 + y1 * y2);
    if den < 1e-6 {
        return DiskGeo::Line;
    }
    let cx = (x1 + x2) / den;
    let cy = (y1 + y2) / den;
    let r = (cx * cx + cy * cy - 1.0).max(0.0).sqrt();
    DiskGeo::Arc { cx, cy, r }
}

const DISK_C: f64 = 500.0;
const DISK_R: f64 = 480.0;

fn disk_screen(x: f64, y: f64) -> (f64, f64) {
    (DISK_C + DISK_R * x, DISK_C - DISK_R * y)
}

fn push_polyline(out: &mut String, screen_pts: &[(f64, f64)], stroke: &str, width: &str) {
    out.push_str("<polyline points=\"");
    for (i, (x, y)) in screen_pts.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&format!("{x:.3},{y:.3}"));
    }
    out.push_str(&format!("\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{width}\"/>\n"));
}

fn svg_header(out: &mut String, cfg: &RunConfig, terms_eff: usize) {
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n",
    );
    out.push_str(&format!(
        "<!-- config terms={} s1={} model={} samples_per_arc={} -->\n",
        terms_eff,
        fmt_f64(cfg.path.s1),
        cfg.render.model.as_str(),
        cfg.render.samples_per_arc,
    ));
    out.push_str("<rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n");
}

fn svg_footer(out: &mut String, warnings: &[String]) {
    for w in warnings {
        out.push_str(&format!("<!-- {w} -->\n"));
    }
    out.push_str("</svg>\n");
}

fn render_disk(
    cfg: &RunConfig,
    fan: &GeodesicFan,
    arcs: &[Vec<(f64, f64)>],
    warnings: &[String],
    terms_eff: usize,
) -> String {
    let mut out = String::new();
    svg_header(&mut out, cfg, terms_eff);
    out.push_str(&format!(
        "<circle cx=\"{DISK_C}\" cy=\"{DISK_C}\" r=\"{DISK_R}\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n",
    ));
    for i in 0..fan.len() {
        let (a, b) = fan.endpoints(i).expect("index below len");
        let t1 = cayley_to_disk(a).disk_angle().expect("half-plane endpoint");
        let t2 = cayley_to_disk(b).disk_angle().expect("half-plane endpoint");
        let (x1, y1) = (t1.cos(), t1.sin());
        let (x2, y2) = (t2.cos(), t2.sin());
        let (sx1, sy1) = disk_screen(x1, y1);
        let (sx2, sy2) = disk_screen(x2, y2);
        match disk_geodesic(t1, t2) {
            DiskGeo::Arc { cx, cy, r } => {
                out.push_str(&format!(
                    "<!-- geodesic m={} theta1={} theta2={} kind=arc cx={} cy={} r={} -->\n",
                    i + 1,
                    fmt_f64(t1),
                    fmt_f64(t2),
                    fmt_f64(cx),
                    fmt_f64(cy),
                    fmt_f64(r),
                ));
                let (scx, scy) = disk_screen(cx, cy);
                let cross = (sx1 - scx) * (sy2 - scy) - (sy1 - scy) * (sx2 - scx);
                let sweep = if cross > 0.0 { 1 } else { 0 };
                let sr = DISK_R * r;
                out.push_str(&format!(
                    "<path d=\"M {sx1:.3},{sy1:.3} A {sr:.3},{sr:.3} 0 0,{sweep} {sx2:.3},{sy2:.3}\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n",
                ));
            }
            DiskGeo::Line => {
                out.push_str(&format!(
                    "<!-- geodesic m={} theta1={} theta2={} kind=line x1={} y1={} x2={} y2={} -->\n",
                    i + 1,
                    fmt_f64(t1),
                    fmt_f64(t2),
                    fmt_f64(x1),
                    fmt_f64(y1),
                    fmt_f64(x2),
                    fmt_f64(y2),
                ));
                out.push_str(&format!(
                    "<path d=\"M {sx1:.3},{sy1:.3} L {sx2:.3},{sy2:.3}\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n",
                ));
            }
        }
    }
    for (j, pts) in arcs.iter().enumerate() {
        let disk_pts: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| cayley_interior(x, y)).collect();
        let (fx, fy) = disk_pts[0];
        let (tx, ty) = disk_pts[disk_pts.len() - 1];
        out.push_str(&format!(
            "<!-- path_arc j={} from_x={} from_y={} to_x={} to_y={} -->\n",
            j + 1,
            fmt_f64(fx),
            fmt_f64(fy),
            fmt_f64(tx),
            fmt_f64(ty),
        ));
        let screen: Vec<(f64, f64)> = disk_pts.iter().map(|&(x, y)| disk_screen(x, y)).collect();
        push_polyline(&mut out, &screen, "#d62728", "1.2");
    }
    svg_footer(&mut out, warnings);
    out
}

fn render_halfplane(
    cfg: &RunConfig,
    fan: &GeodesicFan,
    arcs: &[Vec<(f64, f64)>],
    warnings: &[String],
    terms_eff: usize,
) -> String {
    let mut scale = 2.0f64.max(cfg.path.s1.exp());
    for i in 0..fan.len() {
        let (a, b) = fan.endpoints(i).expect("index below len");
        for p in [a, b] {
            if let Some(x) = p.finite_value() {
                scale = scale.max(x.abs());
            }
        }
    }
    for pts in arcs {
        for &(x, y) in pts {
            scale = scale.max(x.abs()).max(y);
        }
    }
    scale *= 1.05;
    let sx = |x: f64| 500.0 + 500.0 * x / scale;
    let sy = |y: f64| 1000.0 - 500.0 * y / scale;

    let mut out = String::new();
    svg_header(&mut out, cfg, terms_eff);
    out.push_str(&format!(
        "<line x1=\"0\" y1=\"{:.3}\" x2=\"1000\" y2=\"{:.3}\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n",
        sy(0.0),
        sy(0.0),
    ));
    for i in 0..fan.len() {
        let (a, b) = fan.endpoints(i).expect("index below len");
        match (a.finite_value(), b.finite_value()) {
            (Some(p), Some(q)) => {
                let cx = 0.5 * (p + q);
                let r = 0.5 * (q - p).abs();
                out.push_str(&format!(
                    "<!-- geodesic m={} kind=semicircle cx={} r={} -->\n",
                    i + 1,
                    fmt_f64(cx),
                    fmt_f64(r),
                ));
                let (left, right) = (p.min(q), p.max(q));
                let sr = 500.0 * r / scale;
                out.push_str(&format!(
                    "<path d=\"M {:.3},{:.3} A {sr:.3},{sr:.3} 0 0,1 {:.3},{:.3}\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n",
                    sx(left),
                    sy(0.0),
                    sx(right),
                    sy(0.0),
                ));
            }
            (finite, _) => {
                let x = finite
                    .or_else(|| b.finite_value())
                    .expect("a geodesic has at most one infinite endpoint");
                out.push_str(&format!(
                    "<!-- geodesic m={} kind=vertical x={} -->\n",
                    i + 1,
                    fmt_f64(x),
                ));
                out.push_str(&format!(
                    "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"0\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n",
                    sx(x),
                    sy(0.0),
                    sx(x),
                ));
            }
        }
    }
    for (j, pts) in arcs.iter().enumerate() {
        let (fx, fy) = pts[0];
        let (tx, ty) = pts[pts.len() - 1];
        out.push_str(&format!(
            "<!-- path_arc j={} from_x={} from_y={} to_x={} to_y={} -->\n",
            j + 1,
            fmt_f64(fx),
            fmt_f64(fy),
            fmt_f64(tx),
            fmt_f64(ty),
        ));
        let screen: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| (sx(x), sy(y))).collect();
        push_polyline(&mut out, &screen, "#d62728", "1.2");
    }
    svg_footer(&mut out, warnings);
    out
}

/// Realizes the fan described by the configuration and renders it.
///
/// The fan depth is `path.terms` geodesics, clamped to what the declared
/// cuff count can support; a clamp or a resolution-exhausted walk is
/// reported as a warning, not an error. Output is deterministic: the same
/// configuration always produces byte-identical SVG.
pub fn render_fan_svg(cfg: &RunConfig) -> Result<FanRender, CliError> {
    let terms = cfg.path.terms;
    if terms < 2 {
        return Err(CliError::validation(format!(
            "a fan needs at least two geodesics, got path.terms = {terms}"
        )));
    }
    let declared = cfg.surface.cuff_lengths.declared_count();
    let n_cuffs = (terms / 2 + 1).min(declared);
    let terms_eff = terms.min(2 * n_cuffs.saturating_sub(1) + 1);
    let mut warnings = Vec::new();
    if terms_eff < terms {
        warnings.push(format!(
            "description provides {declared} cuffs, enough for {terms_eff} geodesics; requested {terms}"
        ));
    }
    let seq = derive_sequences(&cfg.surface, n_cuffs)?;
    let sh = assemble_shears(&seq, cfg.path.s1)?;
    let fan = realize_fan(&sh, terms_eff)?;
    let path = measure_path(&fan, cfg.path.s1)?;
    if let Some(m) = path.truncation {
        warnings.push(format!("resolution exhausted at junction {m}"));
    }
    let arcs = sample_arcs(&fan, &path, cfg.path.s1, cfg.render.samples_per_arc);
    let svg = match cfg.render.model {
        RenderModel::Disk => render_disk(cfg, &fan, &arcs, &warnings, terms_eff),
        RenderModel::HalfPlane => render_halfplane(cfg, &fan, &arcs, &warnings, terms_eff),
    };
    Ok(FanRender { svg, warnings })
}
