//! Static SVG line charts of emotion arcs: narrative time on x, emotion
//! state on y, both over [0, 1].

use std::fmt::Write;

use crate::arc::EmotionArc;
use crate::scalar::Scalar;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 56.0;
const MARGIN_RIGHT: f64 = 16.0;
const MARGIN_TOP: f64 = 36.0;
const MARGIN_BOTTOM: f64 = 44.0;

/// Longer arcs are reduced to this many bucket means before plotting.
pub const MAX_POINTS: usize = 1000;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Bucket means over consecutive points, keeping at most `max` of them.
pub fn downsample(times: &[f64], states: &[f64], max: usize) -> Vec<(f64, f64)> {
    let n = times.len().min(states.len());
    if n <= max {
        return times.iter().copied().zip(states.iter().copied()).take(n).collect();
    }
    (0..max)
        .map(|b| {
            let lo = b * n / max;
            let hi = ((b + 1) * n / max).max(lo + 1);
            let k = (hi - lo) as f64;
            let t = times[lo..hi].iter().sum::<f64>() / k;
            let s = states[lo..hi].iter().sum::<f64>() / k;
            (t, s)
        })
        .collect()
}

fn x(t: f64) -> f64 {
    MARGIN_LEFT + t.clamp(0.0, 1.0) * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
}

fn y(s: f64) -> f64 {
    HEIGHT - MARGIN_BOTTOM - s.clamp(0.0, 1.0) * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
}

/// Renders one or more labelled arcs on shared unit axes.
pub fn line_chart(title: &str, series: &[(String, Vec<f64>, Vec<f64>)]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="22" text-anchor="middle" font-size="14">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
    for i in 0..=4 {
        let v = i as f64 / 4.0;
        let _ = writeln!(
            out,
            r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#e0e0e0"/>"##,
            x(0.0),
            y(v),
            x(1.0),
            y(v)
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{v:.2}</text>"#,
            x(0.0) - 6.0,
            y(v) + 4.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{v:.2}</text>"#,
            x(v),
            y(0.0) + 16.0
        );
    }
    let _ = writeln!(
        out,
        r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        x(0.0),
        y(1.0),
        x(1.0) - x(0.0),
        y(0.0) - y(1.0)
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">narrative time</text>"#,
        (x(0.0) + x(1.0)) / 2.0,
        HEIGHT - 8.0
    );
    let _ = writeln!(
        out,
        r#"<text x="14" y="{:.2}" text-anchor="middle" transform="rotate(-90 14 {:.2})">emotion state</text>"#,
        (y(0.0) + y(1.0)) / 2.0,
        (y(0.0) + y(1.0)) / 2.0
    );
    for (i, (label, times, states)) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let points = downsample(times, states, MAX_POINTS);
        let mut path = String::new();
        for (t, s) in &points {
            let _ = write!(path, "{:.2},{:.2} ", x(*t), y(*s));
        }
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{}"/>"#,
            path.trim_end()
        );
        let ly = MARGIN_TOP + 14.0 + 16.0 * i as f64;
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/>"#,
            x(0.0) + 10.0,
            x(0.0) + 30.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            x(0.0) + 36.0,
            ly + 4.0,
            escape(label)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Chart of a single arc, titled with its label and dimension.
pub fn arc_chart<T: Scalar>(arc: &EmotionArc<T>) -> String {
    let to_f64 = |v: &[T]| v.iter().map(|x| x.to_f64_lossy()).collect::<Vec<_>>();
    let label = arc.label();
    line_chart(
        &format!("{label} ({})", arc.dimension),
        &[(label, to_f64(&arc.times), to_f64(&arc.states))],
    )
}
