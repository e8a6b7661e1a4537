//! Minimal SVG charts for the CLI's optional `--plot` output. The plots are
//! a convenience view over the CSV data; the CSVs stay authoritative.

use std::fmt::Write;

const WIDTH: f64 = 860.0;
const HEIGHT: f64 = 520.0;
const MARGIN_L: f64 = 70.0;
const MARGIN_R: f64 = 20.0;
const MARGIN_T: f64 = 40.0;
const MARGIN_B: f64 = 50.0;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn from_points<'a>(groups: impl Iterator<Item = &'a [(f64, f64)]>) -> Self {
        let mut x_min = f64::INFINITY;
        let mut x_max = f64::NEG_INFINITY;
        let mut y_min = f64::INFINITY;
        let mut y_max = f64::NEG_INFINITY;
        for points in groups {
            for &(x, y) in points {
                x_min = x_min.min(x);
                x_max = x_max.max(x);
                y_min = y_min.min(y);
                y_max = y_max.max(y);
            }
        }
        if !x_min.is_finite() {
            (x_min, x_max, y_min, y_max) = (0.0, 1.0, 0.0, 1.0);
        }
        if x_max == x_min {
            x_max = x_min + 1.0;
        }
        if y_max == y_min {
            y_max = y_min + 1.0;
        }
        // A little headroom keeps the curves off the frame.
        let pad = (y_max - y_min) * 0.05;
        Frame {
            x_min,
            x_max,
            y_min: y_min - pad,
            y_max: y_max + pad,
        }
    }

    fn sx(&self, x: f64) -> f64 {
        MARGIN_L + (x - self.x_min) / (self.x_max - self.x_min) * (WIDTH - MARGIN_L - MARGIN_R)
    }

    fn sy(&self, y: f64) -> f64 {
        HEIGHT - MARGIN_B
            - (y - self.y_min) / (self.y_max - self.y_min) * (HEIGHT - MARGIN_T - MARGIN_B)
    }
}

fn header(out: &mut String, title: &str, x_label: &str, y_label: &str, frame: &Frame) {
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">
<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>
<text x="{tx}" y="24" text-anchor="middle" font-family="sans-serif" font-size="16">{title}</text>
<text x="{tx}" y="{bx}" text-anchor="middle" font-family="sans-serif" font-size="13">{x_label}</text>
<text x="16" y="{my}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 16 {my})">{y_label}</text>
"#,
        tx = (MARGIN_L + WIDTH - MARGIN_R) / 2.0,
        bx = HEIGHT - 12.0,
        my = (MARGIN_T + HEIGHT - MARGIN_B) / 2.0,
    );
    // Frame and ticks.
    let _ = write!(
        out,
        r##"<rect x="{x}" y="{y}" width="{w}" height="{h}" fill="none" stroke="#333"/>
"##,
        x = MARGIN_L,
        y = MARGIN_T,
        w = WIDTH - MARGIN_L - MARGIN_R,
        h = HEIGHT - MARGIN_T - MARGIN_B,
    );
    for i in 0..=4 {
        let fx = frame.x_min + (frame.x_max - frame.x_min) * i as f64 / 4.0;
        let fy = frame.y_min + (frame.y_max - frame.y_min) * i as f64 / 4.0;
        let _ = write!(
            out,
            r#"<text x="{px}" y="{py}" text-anchor="middle" font-family="sans-serif" font-size="11">{fx:.4}</text>
<text x="{qx}" y="{qy}" text-anchor="end" font-family="sans-serif" font-size="11">{fy:.4}</text>
"#,
            px = frame.sx(fx),
            py = HEIGHT - MARGIN_B + 18.0,
            qx = MARGIN_L - 6.0,
            qy = frame.sy(fy) + 4.0,
        );
    }
}

/// Line chart with one polyline per named series.
pub(crate) fn line_chart(
    title: &str,
    x_label: &str,
    y_label: &str,
    series: &[(String, Vec<(f64, f64)>)],
) -> String {
    let frame = Frame::from_points(series.iter().map(|(_, pts)| pts.as_slice()));
    let mut out = String::new();
    header(&mut out, title, x_label, y_label, &frame);
    for (idx, (name, points)) in series.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let _ = write!(out, r#"<polyline fill="none" stroke="{color}" stroke-width="1.2" points=""#);
        for &(x, y) in points {
            let _ = write!(out, "{:.2},{:.2} ", frame.sx(x), frame.sy(y));
        }
        let _ = writeln!(out, r#""/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="{y}" font-family="sans-serif" font-size="12" fill="{color}">{name}</text>"#,
            x = WIDTH - MARGIN_R - 150.0,
            y = MARGIN_T + 16.0 + 16.0 * idx as f64,
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Scatter chart with one dot class per named group.
pub(crate) fn scatter_chart(
    title: &str,
    x_label: &str,
    y_label: &str,
    groups: &[(String, Vec<(f64, f64)>)],
) -> String {
    let frame = Frame::from_points(groups.iter().map(|(_, pts)| pts.as_slice()));
    let mut out = String::new();
    header(&mut out, title, x_label, y_label, &frame);
    let colors = ["#000000", "#9e9e9e", "#1f77b4", "#d62728"];
    for (idx, (name, points)) in groups.iter().enumerate() {
        let color = colors[idx % colors.len()];
        for &(x, y) in points {
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="1.6" fill="{color}"/>"#,
                frame.sx(x),
                frame.sy(y),
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="{y}" font-family="sans-serif" font-size="12" fill="{color}">{name}</text>"#,
            x = WIDTH - MARGIN_R - 150.0,
            y = MARGIN_T + 16.0 + 16.0 * idx as f64,
        );
    }
    out.push_str("</svg>\n");
    out
}
