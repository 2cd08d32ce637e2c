//! Minimal self-contained SVG charts.

use std::fmt::Write;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;

pub const PALETTE: [&str; 6] = ["#d62728", "#7f7f7f", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd"];

pub struct Series<'a> {
    pub name: &'a str,
    pub values: Vec<f64>,
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn header(out: &mut String, title: &str, y_label: &str) {
    let _ = write!(
        out,
        concat!(
            r#"<?xml version="1.0" encoding="UTF-8"?>"#, "\n",
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#, "\n",
            r#"<rect width="{w}" height="{h}" fill="white"/>"#, "\n",
            r#"<text x="{tx}" y="22" text-anchor="middle" font-size="15">{title}</text>"#, "\n",
            r#"<text transform="translate(18,{ty}) rotate(-90)" text-anchor="middle">{y}</text>"#, "\n",
        ),
        w = WIDTH,
        h = HEIGHT,
        tx = (LEFT + WIDTH - RIGHT) / 2.0,
        ty = (TOP + HEIGHT - BOTTOM) / 2.0,
        title = escape(title),
        y = escape(y_label),
    );
}

/// Value range padded to include zero.
fn y_range(series: &[Series]) -> (f64, f64) {
    let finite = series.iter().flat_map(|s| s.values.iter().copied()).filter(|v| v.is_finite());
    let (mut lo, mut hi) = finite.fold((0.0_f64, 0.0_f64), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if hi == lo {
        hi = lo + 1.0;
    }
    let pad = (hi - lo) * 0.05;
    if lo < 0.0 {
        lo -= pad;
    }
    (lo, hi + pad)
}

fn axes(out: &mut String, lo: f64, hi: f64, x_label: &str) -> impl Fn(f64) -> f64 {
    let plot_h = HEIGHT - TOP - BOTTOM;
    let y_of = move |v: f64| TOP + plot_h * (1.0 - (v - lo) / (hi - lo));
    for tick in 0..=5 {
        let v = lo + (hi - lo) * tick as f64 / 5.0;
        let y = y_of(v);
        let _ = writeln!(
            out,
            r##"<line x1="{LEFT}" y1="{y:.2}" x2="{x2}" y2="{y:.2}" stroke="#dddddd"/><text x="{tx}" y="{ty:.2}" text-anchor="end">{v:.3e}</text>"##,
            x2 = WIDTH - RIGHT,
            tx = LEFT - 6.0,
            ty = y + 4.0,
        );
    }
    let _ = writeln!(
        out,
        r##"<line x1="{LEFT}" y1="{y0:.2}" x2="{x2}" y2="{y0:.2}" stroke="black"/><line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{yb}" stroke="black"/><text x="{tx}" y="{ly}" text-anchor="middle">{label}</text>"##,
        y0 = y_of(lo.max(0.0).min(hi)),
        x2 = WIDTH - RIGHT,
        yb = HEIGHT - BOTTOM,
        tx = (LEFT + WIDTH - RIGHT) / 2.0,
        ly = HEIGHT - 15.0,
        label = escape(x_label),
    );
    y_of
}

fn legend(out: &mut String, series: &[Series]) {
    for (i, s) in series.iter().enumerate() {
        let y = TOP + 10.0 + 20.0 * i as f64;
        let x = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            out,
            r#"<rect x="{x}" y="{ry}" width="12" height="12" fill="{c}"/><text x="{tx}" y="{ty}">{name}</text>"#,
            ry = y - 10.0,
            c = PALETTE[i % PALETTE.len()],
            tx = x + 18.0,
            ty = y,
            name = escape(s.name),
        );
    }
}

/// Grouped bar chart: one group per category, one bar per series.
pub fn bar_chart(title: &str, x_label: &str, y_label: &str, categories: &[String], series: &[Series]) -> String {
    let mut out = String::new();
    header(&mut out, title, y_label);
    let (lo, hi) = y_range(series);
    let y_of = axes(&mut out, lo, hi, x_label);
    let plot_w = WIDTH - LEFT - RIGHT;
    let group_w = plot_w / categories.len().max(1) as f64;
    let bar_w = group_w * 0.8 / series.len().max(1) as f64;
    let base = y_of(0.0_f64.clamp(lo, hi));
    for (c, category) in categories.iter().enumerate() {
        let gx = LEFT + group_w * c as f64;
        for (s, ser) in series.iter().enumerate() {
            let v = ser.values.get(c).copied().unwrap_or(f64::NAN);
            if !v.is_finite() {
                continue;
            }
            let y = y_of(v);
            let _ = writeln!(
                out,
                r#"<rect x="{x:.2}" y="{top:.2}" width="{bar_w:.2}" height="{h:.2}" fill="{color}"/>"#,
                x = gx + group_w * 0.1 + bar_w * s as f64,
                top = y.min(base),
                h = (y - base).abs(),
                color = PALETTE[s % PALETTE.len()],
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{y}" text-anchor="middle">{label}</text>"#,
            x = gx + group_w / 2.0,
            y = HEIGHT - BOTTOM + 16.0,
            label = escape(category),
        );
    }
    legend(&mut out, series);
    out.push_str("</svg>\n");
    out
}

/// Line chart over shared x values.
pub fn line_chart(title: &str, x_label: &str, y_label: &str, xs: &[f64], series: &[Series]) -> String {
    let mut out = String::new();
    header(&mut out, title, y_label);
    let (lo, hi) = y_range(series);
    let y_of = axes(&mut out, lo, hi, x_label);
    let (x_lo, x_hi) = xs
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)));
    let span = if x_hi > x_lo { x_hi - x_lo } else { 1.0 };
    let plot_w = WIDTH - LEFT - RIGHT;
    let x_of = |x: f64| LEFT + plot_w * (x - x_lo) / span;
    for &x in xs {
        let _ = writeln!(
            out,
            r#"<text x="{px:.2}" y="{y}" text-anchor="middle">{x}</text>"#,
            px = x_of(x),
            y = HEIGHT - BOTTOM + 16.0,
        );
    }
    for (s, ser) in series.iter().enumerate() {
        let points: Vec<String> = xs
            .iter()
            .zip(&ser.values)
            .filter(|(_, v)| v.is_finite())
            .map(|(&x, &v)| format!("{:.2},{:.2}", x_of(x), y_of(v)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{pts}" fill="none" stroke="{c}" stroke-width="2"/>"#,
            pts = points.join(" "),
            c = PALETTE[s % PALETTE.len()],
        );
    }
    legend(&mut out, series);
    out.push_str("</svg>\n");
    out
}

/// Histogram of integer observations, one bar per value, with series side by side.
pub fn histogram(title: &str, x_label: &str, series: &[(&str, &[usize])]) -> String {
    let lo = series.iter().flat_map(|(_, v)| v.iter().copied()).min().unwrap_or(0);
    let hi = series.iter().flat_map(|(_, v)| v.iter().copied()).max().unwrap_or(0);
    let categories: Vec<String> = (lo..=hi).map(|v| v.to_string()).collect();
    let counts: Vec<Series> = series
        .iter()
        .map(|(name, values)| {
            let mut bins = vec![0.0; hi - lo + 1];
            for &v in values.iter() {
                bins[v - lo] += 1.0;
            }
            Series { name, values: bins }
        })
        .collect();
    bar_chart(title, x_label, "runs", &categories, &counts)
}
