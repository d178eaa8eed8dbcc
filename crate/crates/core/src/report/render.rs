use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::frontier::FrontierDomain;
use super::ReportError;
use crate::digit::{DigitModel, RasterImage, SIDE};
use crate::drive::{DrivingTrace, Outcome};
use crate::geom::Point;
use crate::road::{RoadConcrete, RoadModel};
use crate::search::Archive;

pub const PANEL: f64 = 320.0;
const MARGIN: f64 = 10.0;

/// Maps world coordinates into a square panel, keeping the aspect ratio. `flip_y` puts world y
/// upwards.
struct Viewport {
    lo: Point,
    scale: f64,
    size: f64,
    flip_y: bool,
}

impl Viewport {
    fn fit(points: impl Iterator<Item = Point>, size: f64, flip_y: bool) -> Self {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
        let scale = (size - 2.0 * MARGIN) / span;
        // center the shorter axis
        let pad = Point::new(span - (hi.x - lo.x), span - (hi.y - lo.y)) * 0.5;
        Self { lo: lo - pad, scale, size, flip_y }
    }

    fn map(&self, p: Point) -> Point {
        let q = (p - self.lo) * self.scale;
        if self.flip_y {
            Point::new(MARGIN + q.x, self.size - MARGIN - q.y)
        } else {
            Point::new(MARGIN + q.x, MARGIN + q.y)
        }
    }
}

fn polyline(out: &mut String, vp: &Viewport, pts: &[Point], style: &str) {
    let coords: Vec<String> = pts
        .iter()
        .map(|&p| {
            let q = vp.map(p);
            format!("{:.2},{:.2}", q.x, q.y)
        })
        .collect();
    let _ = writeln!(out, r#"<polyline points="{}" fill="none" {style}/>"#, coords.join(" "));
}

/// Road panel: lane edges, center line, driven path and the out-of-bound point if any.
pub fn road_panel(model: &RoadModel, concrete: &RoadConcrete, trace: &DrivingTrace) -> String {
    let w = model.lane_width;
    let left = concrete.geometry.offset(-w);
    let right = concrete.geometry.offset(w);
    let driven: Vec<Point> = trace.states.iter().map(|s| s.position).collect();
    let vp = Viewport::fit(left.iter().chain(&right).chain(&driven).copied(), PANEL, true);

    let mut out = String::new();
    let _ = writeln!(out, r##"<rect width="{PANEL}" height="{PANEL}" fill="#f4f1e8"/>"##);
    polyline(&mut out, &vp, &left, r##"stroke="#555" stroke-width="1.5""##);
    polyline(&mut out, &vp, &right, r##"stroke="#555" stroke-width="1.5""##);
    polyline(&mut out, &vp, &concrete.geometry.spine, r##"stroke="#c9a400" stroke-width="1" stroke-dasharray="4 3""##);
    if !driven.is_empty() {
        polyline(&mut out, &vp, &driven, r##"stroke="#1f6fd1" stroke-width="1.5""##);
        let start = vp.map(driven[0]);
        let _ = writeln!(out, r##"<circle cx="{:.2}" cy="{:.2}" r="3" fill="#1f6fd1"/>"##, start.x, start.y);
    }
    if trace.outcome == Outcome::OutOfBound {
        if let Some(last) = trace.states.last() {
            let p = vp.map(last.position);
            let _ = writeln!(
                out,
                r##"<circle class="out-of-bound" cx="{:.2}" cy="{:.2}" r="6" fill="none" stroke="#d11f1f" stroke-width="2"/>"##,
                p.x, p.y
            );
        }
    }
    out
}

/// Digit panel: the raster as grey squares under the red vector outline.
pub fn digit_panel(model: &DigitModel, raster: &RasterImage) -> String {
    let cell = PANEL / SIDE as f64;
    let mut out = String::new();
    let _ = writeln!(out, r##"<rect width="{PANEL}" height="{PANEL}" fill="#ffffff"/>"##);
    for r in 0..SIDE {
        for c in 0..SIDE {
            let v = raster.get(r, c);
            if v > 0 {
                let g = 255 - v;
                let _ = writeln!(
                    out,
                    r#"<rect x="{:.2}" y="{:.2}" width="{cell:.2}" height="{cell:.2}" fill="rgb({g},{g},{g})"/>"#,
                    c as f64 * cell,
                    r as f64 * cell
                );
            }
        }
    }
    let mut d = String::new();
    for path in &model.subpaths {
        let Some(first) = path.first() else { continue };
        let _ = write!(d, "M{:.3},{:.3} ", first.start.x * cell, first.start.y * cell);
        for s in path {
            let _ = write!(
                d,
                "C{:.3},{:.3} {:.3},{:.3} {:.3},{:.3} ",
                s.c1.x * cell,
                s.c1.y * cell,
                s.c2.x * cell,
                s.c2.y * cell,
                s.end.x * cell,
                s.end.y * cell
            );
        }
        d.push_str("Z ");
    }
    let _ = writeln!(
        out,
        r##"<path d="{}" fill="none" fill-rule="evenodd" stroke="#d11f1f" stroke-width="1"/>"##,
        d.trim_end()
    );
    out
}

/// Standalone SVG of a digit model.
pub fn digit_svg(model: &DigitModel, raster: &RasterImage) -> String {
    wrap(PANEL, PANEL, &digit_panel(model, raster))
}

fn wrap(width: f64, height: f64, body: &str) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n{body}</svg>\n"
    )
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Two panels side by side with captions.
pub fn pair_svg(left: &str, right: &str, captions: [&str; 2]) -> String {
    let mut body = String::new();
    for (k, (panel, caption)) in [left, right].into_iter().zip(captions).enumerate() {
        let x = k as f64 * (PANEL + MARGIN);
        let _ = writeln!(body, r#"<g transform="translate({x},0)">"#);
        body.push_str(panel);
        let _ = writeln!(
            body,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="13" text-anchor="middle">{}</text>"#,
            PANEL / 2.0,
            PANEL + 18.0,
            escape(caption)
        );
        body.push_str("</g>\n");
    }
    wrap(2.0 * PANEL + MARGIN, PANEL + 28.0, &body)
}

pub fn entry_file_name(index: usize, f2: f64) -> String {
    format!("entry_{index:03}_f2_{f2:.4}.svg")
}

/// Writes one SVG per archive entry and returns the paths.
pub fn render_frontier<D: FrontierDomain>(
    archive: &Archive<D>,
    domain: &D,
    out_dir: &Path,
) -> Result<Vec<PathBuf>, ReportError> {
    if archive.is_empty() {
        return Err(ReportError::EmptyArchive);
    }
    std::fs::create_dir_all(out_dir).map_err(|e| ReportError::io(out_dir, e))?;
    let mut written = Vec::with_capacity(archive.len());
    for (i, e) in archive.entries().iter().enumerate() {
        let x = &e.individual;
        let caption = |label: &str, eval: Option<f64>| match eval {
            Some(v) => format!("{label} eval {v:.4}"),
            None => label.to_string(),
        };
        let svg = pair_svg(
            &domain.panel(&x.m1.model, x.m1.concrete()),
            &domain.panel(&x.m2.model, x.m2.concrete()),
            [&caption("m1", x.m1.eval()), &caption("m2", x.m2.eval())],
        );
        let path = out_dir.join(entry_file_name(i, x.f2));
        std::fs::write(&path, svg).map_err(|err| ReportError::io(&path, err))?;
        written.push(path);
    }
    Ok(written)
}
