//! Static SVG plot of a frontier in log-log axes, where every segment is a
//! straight line.

use std::fmt::Write;

use crate::bicriteria::ParetoFrontier;

const W: f64 = 480.0;
const H: f64 = 360.0;
const MARGIN: f64 = 56.0;

fn fmt_num(v: f64) -> String {
    let s = format!("{:.4}", v);
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

struct Axes {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Axes {
    fn px(&self, lx: f64) -> f64 {
        MARGIN + (lx - self.x0) / (self.x1 - self.x0) * (W - 2.0 * MARGIN)
    }

    fn py(&self, ly: f64) -> f64 {
        H - MARGIN - (ly - self.y0) / (self.y1 - self.y0) * (H - 2.0 * MARGIN)
    }
}

fn padded(lo: f64, hi: f64) -> (f64, f64) {
    let pad = if hi - lo < 1e-9 {
        0.25
    } else {
        0.08 * (hi - lo)
    };
    (lo - pad, hi + pad)
}

/// Renders the frontier polyline with ticks at the breakpoints and both
/// endpoints marked; a degenerate frontier is drawn as a single marker.
pub fn frontier_svg(f: &ParetoFrontier) -> String {
    let endpoints = f.endpoints();
    let mut pts: Vec<(f64, f64)> = Vec::new();
    if f.degenerate {
        pts.push((f.mu.log(), f.nu.log()));
    } else {
        pts.push((f.mu.log(), endpoints[0].1.log()));
        for s in &f.segments {
            pts.push((s.alpha_hi.log(), s.term.eval(s.alpha_hi).add(f.nu).log()));
        }
    }
    let (x0, x1) = padded(
        pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min),
        pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max),
    );
    let (y0, y1) = padded(
        pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min),
        pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max),
    );
    let ax = Axes { x0, x1, y0, y1 };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(out, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let (bx, by) = (MARGIN, H - MARGIN);
    let _ = writeln!(
        out,
        r#"<path d="M{bx} {t} V{by} H{r}" fill="none" stroke="black"/>"#,
        t = MARGIN,
        r = W - MARGIN
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">α = x⁻Ax (log scale)</text>"#,
        W / 2.0,
        H - 12.0
    );
    let _ = writeln!(
        out,
        r#"<text x="14" y="{}" text-anchor="middle" transform="rotate(-90 14 {})">β = x⁻Bx (log scale)</text>"#,
        H / 2.0,
        H / 2.0
    );

    // x ticks at the endpoints and breakpoints, y ticks at endpoint values
    let mut xticks: Vec<f64> = endpoints.iter().map(|e| e.0.log()).collect();
    xticks.extend(f.breakpoints().iter().map(|b| b.log()));
    for lx in xticks {
        let x = ax.px(lx);
        let _ = writeln!(
            out,
            r#"<line class="tick" x1="{x:.2}" y1="{by}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            by + 5.0,
            by + 18.0,
            fmt_num(lx.exp())
        );
    }
    for e in &endpoints {
        let y = ax.py(e.1.log());
        let _ = writeln!(
            out,
            r#"<line class="tick" x1="{:.2}" y1="{y:.2}" x2="{bx}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            bx - 5.0,
            bx - 8.0,
            y + 4.0,
            fmt_num(e.1.value())
        );
    }

    if pts.len() > 1 {
        let path: Vec<String> = pts
            .iter()
            .map(|&(lx, ly)| format!("{:.2},{:.2}", ax.px(lx), ax.py(ly)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline class="frontier" points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
            path.join(" ")
        );
    }
    for e in &endpoints {
        let _ = writeln!(
            out,
            r#"<circle class="endpoint" cx="{:.2}" cy="{:.2}" r="4" fill="crimson"/>"#,
            ax.px(e.0.log()),
            ax.py(e.1.log())
        );
    }
    out.push_str("</svg>\n");
    out
}
