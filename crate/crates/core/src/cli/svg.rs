//! Minimal SVG line plots on a fixed 800×600 viewBox.

use std::fmt::Write as _;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 60.0;

#[derive(Debug, Clone)]
pub struct Series {
    pub points: Vec<(f64, f64)>,
    pub dashed: bool,
    /// 0 = black, 1 = lightest gray. Larger parameter values get lighter shades.
    pub shade: f64,
    pub label: String,
}

#[derive(Debug, Clone, Default)]
pub struct Plot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
}

/// Shade for the `k`-th of `count` parameter values in ascending order.
pub fn shade(k: usize, count: usize) -> f64 {
    if count <= 1 {
        0.0
    } else {
        k as f64 / (count - 1) as f64
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

impl Plot {
    fn bounds(&self) -> (f64, f64, f64, f64) {
        let mut b = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for &(x, y) in self.series.iter().flat_map(|s| s.points.iter()) {
            if x.is_finite() && y.is_finite() {
                b = (b.0.min(x), b.1.max(x), b.2.min(y), b.3.max(y));
            }
        }
        if b.1 <= b.0 {
            b.1 = b.0 + 1.0;
        }
        if b.3 <= b.2 {
            b.3 = b.2 + 1.0;
        }
        b
    }

    pub fn render(&self) -> String {
        let (x0, x1, y0, y1) = self.bounds();
        let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
        let sy = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
        );
        let _ = writeln!(
            out,
            r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="30" font-size="18" text-anchor="middle">{}</text>"#,
            WIDTH / 2.0,
            escape(&self.title)
        );
        // axes through the origin when it is in range, else along the frame
        let ax = sx(0.0f64.clamp(x0, x1));
        let ay = sy(0.0f64.clamp(y0, y1));
        let _ = writeln!(
            out,
            r#"<g id="axes" stroke="black" stroke-width="1"><line x1="{:.2}" y1="{ay:.2}" x2="{:.2}" y2="{ay:.2}"/><line x1="{ax:.2}" y1="{:.2}" x2="{ax:.2}" y2="{:.2}"/></g>"#,
            MARGIN,
            WIDTH - MARGIN,
            HEIGHT - MARGIN,
            MARGIN
        );
        let _ = writeln!(
            out,
            r#"<g font-size="12"><text x="{:.2}" y="{:.2}">{}</text><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text><text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text><text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text></g>"#,
            WIDTH - MARGIN,
            HEIGHT - MARGIN / 2.0,
            escape(&self.x_label),
            MARGIN - 8.0,
            MARGIN,
            escape(&self.y_label),
            MARGIN,
            HEIGHT - MARGIN + 16.0,
            super::format::general(x0, 4),
            WIDTH - MARGIN,
            HEIGHT - MARGIN + 16.0,
            super::format::general(x1, 4),
        );
        for s in &self.series {
            let gray = (200.0 * s.shade.clamp(0.0, 1.0)).round() as u8;
            let points: Vec<String> = s
                .points
                .iter()
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
                .collect();
            let dash = if s.dashed {
                r#" stroke-dasharray="6,4""#
            } else {
                ""
            };
            let _ = writeln!(
                out,
                r#"<polyline fill="none" stroke="rgb({gray},{gray},{gray})" stroke-width="1.5"{dash} points="{}"><title>{}</title></polyline>"#,
                points.join(" "),
                escape(&s.label)
            );
        }
        out.push_str("</svg>\n");
        out
    }
}
