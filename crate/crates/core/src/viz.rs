//! Stereo pictures of a 2-DoF beam: a gray bar for `Σ⁰₀` and red, green and
//! blue arrows for `Σ⃗¹, Σ⃗², Σ⃗³`, drawn with the 1-axis upright, the 2-axis
//! to the left and the 3-axis to the right.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dirac::BeamMatrix4;
use crate::vec3::{self, Vec3};

/// Pairwise dot products shown in the heading.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Dots {
    pub rg: f64,
    pub rb: f64,
    pub gb: f64,
}

/// One eye of the stereo pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Camera {
    pub azimuth_deg: f64,
    pub elevation_deg: f64,
}

pub const STEREO_CAMERAS: [Camera; 2] = [
    Camera {
        azimuth_deg: -2.5,
        elevation_deg: 20.0,
    },
    Camera {
        azimuth_deg: 2.5,
        elevation_deg: 20.0,
    },
];

fn stereo_cameras() -> [Camera; 2] {
    STEREO_CAMERAS
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub sigma00: f64,
    pub v1: Vec3,
    pub v2: Vec3,
    pub v3: Vec3,
    pub dots: Dots,
    #[serde(skip, default = "stereo_cameras")]
    pub cameras: [Camera; 2],
}

pub fn scene_of(b: &BeamMatrix4) -> Scene {
    Scene {
        sigma00: b.sigma00,
        v1: b.v1,
        v2: b.v2,
        v3: b.v3,
        dots: Dots {
            rg: vec3::dot(b.v1, b.v2),
            rb: vec3::dot(b.v1, b.v3),
            gb: vec3::dot(b.v2, b.v3),
        },
        cameras: STEREO_CAMERAS,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub pane_width: u32,
    pub height: u32,
    /// Extra line above the dot products.
    pub title: Option<String>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            pane_width: 320,
            height: 360,
            title: None,
        }
    }
}

/// Fixed four decimals, without a negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Screen offset (right, up) of a point, before scaling.
fn project(p: Vec3, cam: &Camera) -> (f64, f64) {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let hx = (p[2] - p[1]) * r;
    let hz = (p[1] + p[2]) * r;
    let (sa, ca) = cam.azimuth_deg.to_radians().sin_cos();
    let (se, ce) = cam.elevation_deg.to_radians().sin_cos();
    let x = hx * ca + hz * sa;
    let z = -hx * sa + hz * ca;
    (x, p[0] * ce - z * se)
}

const COLORS: [(&str, &str); 3] = [
    ("red", "#d62728"),
    ("green", "#2ca02c"),
    ("blue", "#1f77b4"),
];

fn pane(out: &mut String, scene: &Scene, cam: &Camera, index: usize, opts: &RenderOptions) {
    let w = opts.pane_width as f64;
    let top = 60.0;
    let h = opts.height as f64 - top;
    let (cx, cy) = (w * index as f64 + w / 2.0, top + h / 2.0);
    let extent = [
        scene.sigma00.abs(),
        vec3::norm(scene.v1),
        vec3::norm(scene.v2),
        vec3::norm(scene.v3),
    ]
    .into_iter()
    .fold(1.0, f64::max);
    let unit = (w.min(h) / 2.0 - 20.0) / extent;
    let at = |p: Vec3| {
        let (x, y) = project(p, cam);
        (cx + unit * x, cy - unit * y)
    };
    let _ = writeln!(out, r#"<g class="pane" id="pane-{index}">"#);
    let (ox, oy) = at(vec3::ZERO);
    for (k, label) in ["1", "2", "3"].iter().enumerate() {
        let (x, y) = at(vec3::scale(vec3::axis(k), extent));
        let _ = writeln!(
            out,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#bbbbbb" stroke-width="1"/>"##,
            num(ox),
            num(oy),
            num(x),
            num(y)
        );
        let _ = writeln!(
            out,
            r##"<text x="{}" y="{}" font-size="11" fill="#888888">{label}</text>"##,
            num(x + 3.0),
            num(y - 3.0)
        );
    }
    if scene.sigma00 != 0.0 {
        let (x, y) = at([scene.sigma00, 0.0, 0.0]);
        let _ = writeln!(
            out,
            r##"<line class="scalar" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#808080" stroke-width="8" stroke-opacity="0.6"/>"##,
            num(ox),
            num(oy),
            num(x),
            num(y)
        );
    }
    for (v, (name, color)) in [scene.v1, scene.v2, scene.v3].iter().zip(COLORS) {
        if vec3::norm(*v) == 0.0 {
            continue;
        }
        let (x, y) = at(*v);
        let _ = writeln!(
            out,
            r#"<line class="vector {name}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="2.5" marker-end="url(#head-{name})"/>"#,
            num(ox),
            num(oy),
            num(x),
            num(y)
        );
    }
    let _ = writeln!(out, "</g>");
}

/// Two-pane SVG; the same scene and options always give the same bytes.
pub fn render_svg(scene: &Scene, opts: &RenderOptions) -> String {
    let width = 2 * opts.pane_width;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{}" viewBox="0 0 {width} {}">"#,
        opts.height, opts.height
    );
    let _ = writeln!(out, "<defs>");
    for (name, color) in COLORS {
        let _ = writeln!(
            out,
            r#"<marker id="head-{name}" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="{color}"/></marker>"#
        );
    }
    let _ = writeln!(out, "</defs>");
    let _ = writeln!(
        out,
        r#"<rect width="{width}" height="{}" fill="white"/>"#,
        opts.height
    );
    let mut y = 20;
    if let Some(t) = &opts.title {
        let _ = writeln!(
            out,
            r#"<text x="10" y="{y}" font-family="sans-serif" font-size="14">{}</text>"#,
            escape(t)
        );
        y += 20;
    }
    let d = &scene.dots;
    let _ = writeln!(
        out,
        r#"<text class="heading" x="10" y="{y}" font-family="sans-serif" font-size="13">(R,G) = {}  (R,B) = {}  (G,B) = {}</text>"#,
        num(d.rg),
        num(d.rb),
        num(d.gb)
    );
    for (i, cam) in scene.cameras.iter().enumerate() {
        pane(&mut out, scene, cam, i, opts);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_beam() -> BeamMatrix4 {
        BeamMatrix4::new(4.4, [-1.5, -1.5, 1.7], [-1.6, 0.7, -1.6], [0.9, -0.9, -2.6])
    }

    #[test]
    fn heading_dots() {
        let s = scene_of(&reference_beam());
        assert!((s.dots.rg - (-1.37)).abs() < 1e-12);
        let n = scene_of(&BeamMatrix4::normal(1.0, 5.0));
        assert_eq!((n.dots.rg, n.dots.rb, n.dots.gb), (0.0, 0.0, 0.0));
        assert_eq!(n.v2, vec3::ZERO);
    }

    #[test]
    fn json_round_trip() {
        let s = scene_of(&reference_beam());
        let j = serde_json::to_string(&s).unwrap();
        assert!(!j.contains("camera"));
        let back: Scene = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn two_panes_and_stable_bytes() {
        let s = scene_of(&reference_beam());
        let a = render_svg(&s, &RenderOptions::default());
        assert_eq!(a, render_svg(&s, &RenderOptions::default()));
        assert_eq!(a.matches(r#"class="pane""#).count(), 2);
        assert_eq!(a.matches("class=\"vector").count(), 6);
        assert!(!a.contains("-0.0000"));
    }

    #[test]
    fn zero_beam_has_axes_only() {
        let a = render_svg(
            &scene_of(&BeamMatrix4::default()),
            &RenderOptions::default(),
        );
        assert_eq!(a.matches(r#"class="pane""#).count(), 2);
        assert!(!a.contains("class=\"vector"));
        assert!(!a.contains("class=\"scalar"));
        assert_eq!(a.matches("<line").count(), 6);
    }

    #[test]
    fn axes_point_the_right_way() {
        let cam = Camera {
            azimuth_deg: 0.0,
            elevation_deg: 20.0,
        };
        assert!(project([1.0, 0.0, 0.0], &cam).1 > 0.0);
        assert!(project([0.0, 1.0, 0.0], &cam).0 < 0.0);
        assert!(project([0.0, 0.0, 1.0], &cam).0 > 0.0);
    }
}
