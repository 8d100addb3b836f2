//! Self-contained SVG rendering of the crossover figures: a log-log energy
//! panel with the two power-law asymptotes, and the logarithmic-slope panel
//! beneath it. No plotting dependencies; the document is assembled with
//! fixed-precision coordinates so identical inputs give identical bytes.

use vdw_core::retarded::{asymptote_casimir_polder, asymptote_london};

use crate::sweeps::CrossoverData;

const WIDTH: f64 = 860.0;
const PANEL_HEIGHT: f64 = 430.0;
const MARGIN_LEFT: f64 = 90.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;

struct Frame {
    x0: f64,
    y0: f64, // top-left of the plotting area
    w: f64,
    h: f64,
    lx_min: f64,
    lx_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn x(&self, r: f64) -> f64 {
        self.x0 + (r.ln() - self.lx_min) / (self.lx_max - self.lx_min) * self.w
    }

    fn y(&self, v: f64) -> f64 {
        self.y0 + self.h - (v - self.y_min) / (self.y_max - self.y_min) * self.h
    }
}

fn coord(v: f64) -> String {
    format!("{v:.2}")
}

fn path_from(points: impl Iterator<Item = (f64, f64)>) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.enumerate() {
        d.push_str(if i == 0 { "M" } else { " L" });
        d.push_str(&coord(x));
        d.push(' ');
        d.push_str(&coord(y));
    }
    d
}

fn decade_ticks(r_min: f64, r_max: f64) -> Vec<f64> {
    let lo = r_min.log10().ceil() as i32;
    let hi = r_max.log10().floor() as i32;
    (lo..=hi).map(|k| 10f64.powi(k)).collect()
}

fn axes(out: &mut String, frame: &Frame, r_min: f64, r_max: f64, x_labels: bool) {
    out.push_str(&format!(
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="1"/>"#,
        coord(frame.x0),
        coord(frame.y0),
        coord(frame.w),
        coord(frame.h)
    ));
    out.push('\n');
    for tick in decade_ticks(r_min, r_max) {
        let x = frame.x(tick);
        out.push_str(&format!(
            r#"<line x1="{x}" y1="{y1}" x2="{x}" y2="{y2}" stroke="black" stroke-width="1"/>"#,
            x = coord(x),
            y1 = coord(frame.y0 + frame.h),
            y2 = coord(frame.y0 + frame.h - 6.0)
        ));
        out.push('\n');
        if x_labels {
            out.push_str(&format!(
                r#"<text x="{}" y="{}" text-anchor="middle" font-family="monospace" font-size="13">1e{}</text>"#,
                coord(x),
                coord(frame.y0 + frame.h + 20.0),
                tick.log10().round() as i32
            ));
            out.push('\n');
        }
    }
}

/// Render the two-panel figure. The document contains exactly two top-level
/// `<g>` groups, `id="energy-panel"` and `id="slope-panel"`.
pub fn render_crossover(data: &CrossoverData) -> String {
    let r_min = *data.grid.first().expect("nonempty grid");
    let r_max = *data.grid.last().expect("nonempty grid");
    let total_height = 2.0 * PANEL_HEIGHT + 60.0;

    let mut out = String::new();
    out.push_str(&format!(
        r#"<svg version="1.1" xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{total_height}" viewBox="0 0 {WIDTH} {total_height}">"#
    ));
    out.push('\n');

    // energy panel: log-log with both asymptotes
    let cp = asymptote_casimir_polder();
    let london = asymptote_london();
    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    for &e in &data.energy {
        y_lo = y_lo.min(e.ln());
        y_hi = y_hi.max(e.ln());
    }
    y_lo = y_lo.min((cp / r_max).ln());
    y_hi = y_hi.max(london.ln());
    let pad = 0.05 * (y_hi - y_lo).max(1e-3);
    let frame = Frame {
        x0: MARGIN_LEFT,
        y0: MARGIN_TOP,
        w: WIDTH - MARGIN_LEFT - MARGIN_RIGHT,
        h: PANEL_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM,
        lx_min: r_min.ln(),
        lx_max: r_max.ln(),
        y_min: y_lo - pad,
        y_max: y_hi + pad,
    };

    out.push_str("<g id=\"energy-panel\">\n");
    axes(&mut out, &frame, r_min, r_max, false);
    let curve =
        path_from(data.grid.iter().zip(&data.energy).map(|(&r, &e)| (frame.x(r), frame.y(e.ln()))));
    out.push_str(&format!(r#"<path d="{curve}" fill="none" stroke="black" stroke-width="2.5"/>"#));
    out.push('\n');
    let london_line = path_from([r_min, r_max].iter().map(|&r| (frame.x(r), frame.y(london.ln()))));
    out.push_str(&format!(
        r#"<path d="{london_line}" fill="none" stroke="black" stroke-width="1.2" stroke-dasharray="8 5"/>"#
    ));
    out.push('\n');
    let cp_line = path_from(data.grid.iter().map(|&r| (frame.x(r), frame.y((cp / r).ln()))));
    out.push_str(&format!(
        r#"<path d="{cp_line}" fill="none" stroke="black" stroke-width="1.2" stroke-dasharray="3 4"/>"#
    ));
    out.push('\n');
    out.push_str(&format!(
        r#"<text x="{}" y="{}" text-anchor="middle" font-family="monospace" font-size="15">-E r^6 / A^2 vs r (log-log)</text>"#,
        coord(MARGIN_LEFT + frame.w / 2.0),
        coord(MARGIN_TOP - 14.0)
    ));
    out.push('\n');
    out.push_str("</g>\n");

    // slope panel: linear vertical axis on [-1.05, 0.05]
    let frame2 = Frame {
        x0: MARGIN_LEFT,
        y0: PANEL_HEIGHT + 60.0 + MARGIN_TOP,
        w: WIDTH - MARGIN_LEFT - MARGIN_RIGHT,
        h: PANEL_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM,
        lx_min: r_min.ln(),
        lx_max: r_max.ln(),
        y_min: -1.05,
        y_max: 0.05,
    };
    out.push_str("<g id=\"slope-panel\">\n");
    axes(&mut out, &frame2, r_min, r_max, true);
    for guide in [0.0, -1.0] {
        let line = path_from([r_min, r_max].iter().map(|&r| (frame2.x(r), frame2.y(guide))));
        out.push_str(&format!(
            r#"<path d="{line}" fill="none" stroke="black" stroke-width="0.8" stroke-dasharray="2 5"/>"#
        ));
        out.push('\n');
    }
    if let Some(slope) = &data.slope {
        let path =
            path_from(data.grid.iter().zip(slope).map(|(&r, &s)| (frame2.x(r), frame2.y(s))));
        out.push_str(&format!(
            r#"<path d="{path}" fill="none" stroke="black" stroke-width="2.5"/>"#
        ));
        out.push('\n');
    }
    out.push_str(&format!(
        r#"<text x="{}" y="{}" text-anchor="middle" font-family="monospace" font-size="15">d log(-E r^6) / d log r</text>"#,
        coord(MARGIN_LEFT + frame2.w / 2.0),
        coord(frame2.y0 - 14.0)
    ));
    out.push('\n');
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweeps::{crossover_data, Grid};

    #[test]
    fn document_structure() {
        let grid = Grid::new(1e-2, 1e2, 33).unwrap();
        let data = crossover_data(&grid).unwrap();
        let svg = render_crossover(&data);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<g ").count(), 2, "exactly two plot groups");
        assert_eq!(svg.matches("</g>").count(), 2);
        // tag balance for well-formedness
        for tag in ["path", "rect", "text", "line"] {
            let opens = svg.matches(&format!("<{tag} ")).count();
            let closes = svg.matches("/>").count() + svg.matches(&format!("</{tag}>")).count();
            assert!(opens <= closes, "unbalanced <{tag}>");
        }
    }

    #[test]
    fn deterministic_bytes() {
        let grid = Grid::new(1e-1, 1e1, 17).unwrap();
        let a = render_crossover(&crossover_data(&grid).unwrap());
        let b = render_crossover(&crossover_data(&grid).unwrap());
        assert_eq!(a, b);
    }
}
