//! Hand-written SVG figures.

use std::fmt::Write;

use qgd_core::experiments::{Classification, RegionMap};
use qgd_core::spectral::{criterion_threshold, necessary_threshold, sufficient_threshold};
use qgd_core::MeshState;

const W: f64 = 640.0;
const H: f64 = 440.0;
const MARGIN: (f64, f64, f64, f64) = (64.0, 24.0, 40.0, 52.0); // left, right, top, bottom

const SOLID: &str = "";
const DASH: &str = " stroke-dasharray=\"7,4\"";
const DASH_DOT: &str = " stroke-dasharray=\"9,3,2,3\"";

/// Linear map from data to pixel coordinates for one panel.
#[derive(Clone, Copy)]
struct Frame {
    x0: f64,
    y0: f64,
    w: f64,
    h: f64,
    xr: (f64, f64),
    yr: (f64, f64),
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        self.x0 + (x - self.xr.0) / (self.xr.1 - self.xr.0) * self.w
    }

    fn py(&self, y: f64) -> f64 {
        self.y0 + self.h - (y - self.yr.0) / (self.yr.1 - self.yr.0) * self.h
    }

    fn axes(&self, out: &mut String, xlabel: &str, ylabel: &str) {
        let (x0, y0, w, h) = (self.x0, self.y0, self.w, self.h);
        let _ = writeln!(
            out,
            r#"<rect x="{x0:.1}" y="{y0:.1}" width="{w:.1}" height="{h:.1}" fill="none" stroke="black"/>"#
        );
        for i in 0..=5 {
            let fx = self.xr.0 + (self.xr.1 - self.xr.0) * i as f64 / 5.0;
            let fy = self.yr.0 + (self.yr.1 - self.yr.0) * i as f64 / 5.0;
            let (px, py) = (self.px(fx), self.py(fy));
            let _ = writeln!(
                out,
                r#"<line x1="{px:.1}" y1="{:.1}" x2="{px:.1}" y2="{:.1}" stroke="black"/><text x="{px:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
                y0 + h,
                y0 + h + 5.0,
                y0 + h + 19.0,
                tick(fx)
            );
            let _ = writeln!(
                out,
                r#"<line x1="{:.1}" y1="{py:.1}" x2="{x0:.1}" y2="{py:.1}" stroke="black"/><text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#,
                x0 - 5.0,
                x0 - 8.0,
                py + 4.0,
                tick(fy)
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{xlabel}</text>"#,
            x0 + w / 2.0,
            y0 + h + 40.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" transform="rotate(-90 {:.1} {:.1})">{ylabel}</text>"#,
            x0 - 46.0,
            y0 + h / 2.0,
            x0 - 46.0,
            y0 + h / 2.0
        );
    }

    fn polyline(&self, out: &mut String, pts: impl IntoIterator<Item = (f64, f64)>, style: &str) {
        let coords: Vec<String> = pts
            .into_iter()
            .filter(|(_, y)| y.is_finite())
            .map(|(x, y)| {
                format!(
                    "{:.2},{:.2}",
                    self.px(x),
                    self.py(y.clamp(self.yr.0, self.yr.1))
                )
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="black" stroke-width="1.4"{style}/>"#,
            coords.join(" ")
        );
    }
}

fn tick(v: f64) -> String {
    let s = format!("{v:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn header(width: f64, height: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\" font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    )
}

/// (α, β) plane: filled circles for conservative runs, hollow ones otherwise,
/// and the three threshold curves (solid, dashed, dash-dot).
pub fn region_svg(map: &RegionMap, title: &str) -> String {
    let (l, r, t, b) = MARGIN;
    let a_max = map.columns.iter().map(|c| c.alpha).fold(0.0, f64::max) * 1.1;
    let b_max = map
        .columns
        .iter()
        .flat_map(|c| c.betas.iter().copied().chain([c.criterion]))
        .fold(0.0, f64::max)
        * 1.08;
    let f = Frame {
        x0: l,
        y0: t,
        w: W - l - r,
        h: H - t - b,
        xr: (0.0, a_max),
        yr: (0.0, b_max),
    };
    let mut out = header(W, H);
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="16" text-anchor="middle">{title}</text>"#,
        W / 2.0
    );
    f.axes(&mut out, "α", "β");

    let samples: Vec<f64> = (1..=200).map(|i| a_max * i as f64 / 200.0).collect();
    let curve = |g: &dyn Fn(f64) -> Option<f64>| {
        samples
            .iter()
            .filter_map(|&a| g(a).map(|v| (a, v)))
            .collect::<Vec<_>>()
    };
    f.polyline(
        &mut out,
        curve(&|a| necessary_threshold(a, map.kappa, map.variant).ok()),
        SOLID,
    );
    f.polyline(
        &mut out,
        curve(&|a| criterion_threshold(a, map.kappa, map.variant).ok()),
        DASH,
    );
    if map.columns.iter().any(|c| c.sufficient.is_some()) {
        f.polyline(
            &mut out,
            curve(&|a| Some(sufficient_threshold(a))),
            DASH_DOT,
        );
    }

    for col in &map.columns {
        for (&beta, v) in col.betas.iter().zip(&col.verdicts) {
            let fill = if v.classification == Classification::Conservative {
                "black"
            } else {
                "white"
            };
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{fill}" stroke="black"/>"#,
                f.px(col.alpha),
                f.py(beta)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

type Field<'a> = &'a dyn Fn(&MeshState) -> &[f64];

/// ρ and u against x, side by side, one polyline per labelled state.
pub fn profile_svg(x: &[f64], states: &[(&str, &MeshState)], title: &str) -> String {
    let width = 2.0 * W;
    let (l, r, t, b) = MARGIN;
    let xr = (
        x.first().copied().unwrap_or(0.0),
        x.last().copied().unwrap_or(1.0),
    );
    let range = |pick: Field| {
        let (lo, hi) = states
            .iter()
            .flat_map(|(_, s)| pick(s).iter().copied())
            .filter(|v| v.is_finite())
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            });
        if lo < hi {
            let pad = 0.05 * (hi - lo);
            (lo - pad, hi + pad)
        } else {
            (lo - 1.0, lo + 1.0)
        }
    };
    let styles = [SOLID, DASH, DASH_DOT];
    let mut out = header(width, H);
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="16" text-anchor="middle">{title}</text>"#,
        width / 2.0
    );
    let panels: [(&str, Field); 2] = [("ρ", &|s| &s.rho), ("u", &|s| &s.u)];
    for (p, (name, pick)) in panels.iter().enumerate() {
        let f = Frame {
            x0: p as f64 * W + l,
            y0: t,
            w: W - l - r,
            h: H - t - b,
            xr,
            yr: range(*pick),
        };
        f.axes(&mut out, "x", name);
        for (i, (label, s)) in states.iter().enumerate() {
            let style = styles[i % styles.len()];
            f.polyline(
                &mut out,
                x.iter().copied().zip(pick(s).iter().copied()),
                style,
            );
            let ly = t + 14.0 + 16.0 * i as f64;
            let lx = f.x0 + f.w - 150.0;
            let _ = writeln!(
                out,
                r#"<line x1="{lx:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="black"{style}/><text x="{:.1}" y="{:.1}">{label}</text>"#,
                lx + 30.0,
                lx + 36.0,
                ly + 4.0
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
