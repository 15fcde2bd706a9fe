//! Scene export: tagged JSON elements with exact coordinates, and SVG
//! rendering of planar scenes in the affine chart `w = 1`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{parse_rational, Field, FieldTag};
use crate::projective::{Collineation, HLine2, HPlane3, HPoint2, HPoint3, PluckerLine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SceneError {
    #[error("element {0:?} does not belong to a planar scene")]
    DimensionMismatch(String),
    #[error("element {0:?} has coordinates that cannot be drawn")]
    UnrepresentableElement(String),
    #[error("invalid scene JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Point2,
    Line2,
    Point3,
    Plane3,
    Line3,
    Collineation,
}

/// One element of a scene. Coordinates use the exact text form of the field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Element {
    pub kind: Kind,
    pub coords: Vec<String>,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<String>,
    /// Drawn as a small sample dot rather than a labeled point.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub sample: bool,
}

/// A finite piece of a space line between two of its points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub label: String,
    pub color: String,
    pub from: Vec<String>,
    pub to: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scene {
    pub field: String,
    pub elements: Vec<Element>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub segments: Vec<Segment>,
}

fn texts<F: Field>(v: &[F]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl Scene {
    pub fn new(tag: FieldTag) -> Self {
        Scene {
            field: tag.to_string(),
            elements: Vec::new(),
            segments: Vec::new(),
        }
    }

    fn push(
        &mut self,
        kind: Kind,
        coords: Vec<String>,
        label: &str,
        color: Option<&str>,
    ) -> &mut Element {
        self.elements.push(Element {
            kind,
            coords,
            label: label.to_string(),
            color: color.map(str::to_string),
            sample: false,
        });
        self.elements.last_mut().expect("just pushed")
    }

    pub fn point2<F: Field>(&mut self, p: &HPoint2<F>, label: &str) -> &mut Self {
        self.push(Kind::Point2, texts(p.coords()), label, None);
        self
    }

    pub fn sample2<F: Field>(&mut self, p: &HPoint2<F>) -> &mut Self {
        self.push(Kind::Point2, texts(p.coords()), "", None).sample = true;
        self
    }

    pub fn line2<F: Field>(&mut self, l: &HLine2<F>, label: &str) -> &mut Self {
        self.push(Kind::Line2, texts(l.coords()), label, None);
        self
    }

    pub fn point3<F: Field>(&mut self, p: &HPoint3<F>, label: &str) -> &mut Self {
        self.push(Kind::Point3, texts(p.coords()), label, None);
        self
    }

    pub fn plane3<F: Field>(&mut self, p: &HPlane3<F>, label: &str) -> &mut Self {
        self.push(Kind::Plane3, texts(p.coords()), label, None);
        self
    }

    /// A space line with a segment between its two reference points.
    pub fn line3<F: Field>(&mut self, l: &PluckerLine<F>, label: &str, color: &str) -> &mut Self {
        self.push(Kind::Line3, texts(l.coords()), label, Some(color));
        let (a, b) = l.point_pair();
        self.segments.push(Segment {
            label: label.to_string(),
            color: color.to_string(),
            from: texts(a.coords()),
            to: texts(b.coords()),
        });
        self
    }

    pub fn collineation<F: Field, const N: usize>(
        &mut self,
        g: &Collineation<F, N>,
        label: &str,
    ) -> &mut Self {
        self.push(
            Kind::Collineation,
            texts(&g.matrix().flatten()),
            label,
            None,
        );
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, SceneError> {
        serde_json::from_str(s).map_err(|e| SceneError::Json(e.to_string()))
    }
}

/// The affine window drawn and the output size in pixels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub min: (f64, f64),
    pub max: (f64, f64),
    pub pixels: f64,
}

impl Default for Viewport {
    fn default() -> Self {
        Viewport {
            min: (-2.5, -2.5),
            max: (2.5, 2.5),
            pixels: 600.0,
        }
    }
}

impl Viewport {
    fn pixel(&self, x: f64, y: f64) -> (f64, f64) {
        let sx = self.pixels / (self.max.0 - self.min.0);
        let sy = self.pixels / (self.max.1 - self.min.1);
        ((x - self.min.0) * sx, (self.max.1 - y) * sy)
    }

    /// Clips `ax + by + c = 0` to the window.
    fn clip(&self, a: f64, b: f64, c: f64) -> Option<((f64, f64), (f64, f64))> {
        let (x0, y0, x1, y1) = (self.min.0, self.min.1, self.max.0, self.max.1);
        let mut hits: Vec<(f64, f64)> = Vec::new();
        if b != 0.0 {
            for x in [x0, x1] {
                let y = -(a * x + c) / b;
                if (y0..=y1).contains(&y) {
                    hits.push((x, y));
                }
            }
        }
        if a != 0.0 {
            for y in [y0, y1] {
                let x = -(b * y + c) / a;
                if (x0..=x1).contains(&x) {
                    hits.push((x, y));
                }
            }
        }
        hits.dedup_by(|p, q| (p.0 - q.0).abs() < 1e-12 && (p.1 - q.1).abs() < 1e-12);
        let first = *hits.first()?;
        let last = *hits.iter().rev().find(|&&h| h != first)?;
        Some((first, last))
    }
}

fn approx(coords: &[String], label: &str) -> Result<Vec<f64>, SceneError> {
    coords
        .iter()
        .map(|c| {
            parse_rational(c)
                .ok()
                .and_then(|r| r.to_f64())
                .ok_or_else(|| SceneError::UnrepresentableElement(label.to_string()))
        })
        .collect()
}

const PALETTE: [&str; 4] = ["#1f5fa8", "#b8322a", "#2f8a3b", "#8a5a00"];

/// Renders the planar elements of a rational scene. Points at infinity become
/// arrows at the window edge, the line at infinity and lines missing the
/// window become annotations in the margin.
pub fn render_svg(scene: &Scene, view: &Viewport) -> Result<String, SceneError> {
    let size = view.pixels;
    let mut body = String::new();
    let mut notes: Vec<String> = Vec::new();
    for (i, e) in scene.elements.iter().enumerate() {
        let color = e
            .color
            .clone()
            .unwrap_or_else(|| PALETTE[i % PALETTE.len()].to_string());
        match e.kind {
            Kind::Point2 => {
                let v = approx(&e.coords, &e.label)?;
                if v[2] == 0.0 {
                    let norm = v[0].hypot(v[1]);
                    let (cx, cy) = (size / 2.0, size / 2.0);
                    let r = size / 2.0 - 12.0;
                    let (dx, dy) = (v[0] / norm, -v[1] / norm);
                    let (tx, ty) = (cx + r * dx, cy + r * dy);
                    let _ = writeln!(
                        body,
                        r#"<line x1="{:.3}" y1="{:.3}" x2="{tx:.3}" y2="{ty:.3}" stroke="{color}" stroke-dasharray="4 3" marker-end="url(#arrow)"/>"#,
                        cx + (r - 40.0) * dx,
                        cy + (r - 40.0) * dy,
                    );
                    notes.push(format!(
                        "{} at infinity, direction ({}, {})",
                        label_or(e, "point"),
                        e.coords[0],
                        e.coords[1]
                    ));
                    if !e.label.is_empty() {
                        let _ = writeln!(
                            body,
                            r#"<text x="{tx:.3}" y="{ty:.3}" fill="{color}">{}</text>"#,
                            e.label
                        );
                    }
                    continue;
                }
                let (x, y) = view.pixel(v[0] / v[2], v[1] / v[2]);
                if e.sample {
                    let _ = writeln!(
                        body,
                        r##"<circle cx="{x:.3}" cy="{y:.3}" r="2" fill="#333"/>"##
                    );
                } else {
                    let _ = writeln!(
                        body,
                        r#"<circle cx="{x:.3}" cy="{y:.3}" r="4" fill="{color}"/>"#
                    );
                    let _ = writeln!(
                        body,
                        r#"<text x="{:.3}" y="{:.3}" fill="{color}">{}</text>"#,
                        x + 6.0,
                        y - 6.0,
                        e.label
                    );
                }
            }
            Kind::Line2 => {
                let v = approx(&e.coords, &e.label)?;
                if v[0] == 0.0 && v[1] == 0.0 {
                    notes.push(format!("{} is the line at infinity", label_or(e, "line")));
                    continue;
                }
                match view.clip(v[0], v[1], v[2]) {
                    Some((p, q)) => {
                        let (p, q) = (view.pixel(p.0, p.1), view.pixel(q.0, q.1));
                        let _ = writeln!(
                            body,
                            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{color}"/>"#,
                            p.0, p.1, q.0, q.1
                        );
                        let _ = writeln!(
                            body,
                            r#"<text x="{:.3}" y="{:.3}" fill="{color}">{}</text>"#,
                            q.0, q.1, e.label
                        );
                    }
                    None => notes.push(format!("{} misses the window", label_or(e, "line"))),
                }
            }
            _ => return Err(SceneError::DimensionMismatch(e.label.clone())),
        }
    }
    let mut out = String::new();
    let height = size + 16.0 * notes.len() as f64;
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{height}" viewBox="0 0 {size} {height}" font-family="sans-serif" font-size="12">"#
    );
    out.push_str(
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0L10,5L0,10z"/></marker></defs>"#,
    );
    out.push('\n');
    let _ = writeln!(
        out,
        r##"<rect width="{size}" height="{size}" fill="none" stroke="#999"/>"##
    );
    out.push_str(&body);
    for (k, n) in notes.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<text x="4" y="{:.3}">{n}</text>"#,
            size + 12.0 + 16.0 * k as f64
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn label_or(e: &Element, fallback: &str) -> String {
    if e.label.is_empty() {
        fallback.to_string()
    } else {
        e.label.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    const T: FieldTag = FieldTag::Rational;

    #[test]
    fn json_round_trip() {
        let mut s = Scene::new(T);
        s.point2(&HPoint2::<Rational>::from_ints(T, [1, -2, 3]).unwrap(), "A")
            .line2(&HLine2::<Rational>::from_ints(T, [0, 1, 0]).unwrap(), "a");
        let l = PluckerLine::join(
            &HPoint3::<Rational>::from_ints(T, [0, 0, 0, 1]).unwrap(),
            &HPoint3::from_ints(T, [1, 0, 0, 0]).unwrap(),
        )
        .unwrap();
        s.line3(&l, "r", "red");
        let json = s.to_json();
        assert!(json.contains(r#""kind": "point2""#));
        assert!(json.contains(r#""1/3""#) || json.contains(r#""-2""#));
        assert_eq!(Scene::from_json(&json).unwrap(), s);
    }

    #[test]
    fn empty_scene_is_valid() {
        let s = Scene::new(T);
        assert_eq!(Scene::from_json(&s.to_json()).unwrap(), s);
        let svg = render_svg(&s, &Viewport::default()).unwrap();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn infinity_is_annotated() {
        let mut s = Scene::new(T);
        s.point2(&HPoint2::<Rational>::from_ints(T, [1, 1, 0]).unwrap(), "P")
            .line2(&HLine2::<Rational>::from_ints(T, [0, 0, 1]).unwrap(), "p")
            .line2(&HLine2::<Rational>::from_ints(T, [1, 0, -9]).unwrap(), "m");
        let svg = render_svg(&s, &Viewport::default()).unwrap();
        assert!(svg.contains("P at infinity"));
        assert!(svg.contains("p is the line at infinity"));
        assert!(svg.contains("m misses the window"));
    }

    #[test]
    fn rejects_space_and_prime_elements() {
        let mut s = Scene::new(T);
        s.point3(
            &HPoint3::<Rational>::from_ints(T, [1, 0, 0, 1]).unwrap(),
            "X",
        );
        assert!(matches!(
            render_svg(&s, &Viewport::default()),
            Err(SceneError::DimensionMismatch(_))
        ));
        let g = FieldTag::Prime(5);
        let mut s = Scene::new(g);
        s.point2(
            &HPoint2::<crate::field::Fp>::from_ints(g, [1, 2, 3]).unwrap(),
            "A",
        );
        assert!(matches!(
            render_svg(&s, &Viewport::default()),
            Err(SceneError::UnrepresentableElement(_))
        ));
    }
}
