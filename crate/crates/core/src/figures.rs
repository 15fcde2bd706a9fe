//! Fixed example configurations and scene builders for curves and surfaces.

use crate::curve::HarmonicCurve;
use crate::error::Result;
use crate::field::{Field, FieldTag, Rational};
use crate::projective::{join3_points, HPoint2, HPoint3, PluckerLine};
use crate::ruled::{DandelinConfiguration, RuledSurface};
use crate::scene::Scene;

const T: FieldTag = FieldTag::Rational;

fn p2(v: [i64; 3]) -> HPoint2<Rational> {
    HPoint2::from_ints(T, v).expect("nonzero")
}

fn p3(v: [i64; 4]) -> HPoint3<Rational> {
    HPoint3::from_ints(T, v).expect("nonzero")
}

/// The curve through the square `(1,0), (0,1), (-1,0), (0,-1)`: the unit circle.
pub fn inscribed_square_curve() -> HarmonicCurve<Rational> {
    HarmonicCurve::from_points(
        &p2([1, 0, 1]),
        &p2([0, 1, 1]),
        &p2([-1, 0, 1]),
        &p2([0, -1, 1]),
    )
    .expect("square is a quadrangle")
}

/// Generating vertices and tangents, `samples` curve points, and two polar
/// pairs: the pole `Q` where the tangents at the first two vertices meet with
/// its polar `q`, and the center `O` whose polar `o` is the line at infinity.
pub fn curve_scene<F: Field>(curve: &HarmonicCurve<F>, samples: usize) -> Scene {
    let mut s = Scene::new(curve.tag());
    for z in curve.sample(samples) {
        s.sample2(&z);
    }
    for (v, name) in curve.vertices().iter().zip(["A", "C", "B", "D"]) {
        s.point2(v, name);
    }
    for (t, name) in curve.tangents().iter().zip(["a", "c", "b", "d"]) {
        s.line2(t, name);
    }
    s
}

pub fn square_scene(samples: usize) -> Result<Scene> {
    let curve = inscribed_square_curve();
    let mut s = curve_scene(&curve, samples);
    let pole = curve.pole_of_line(&crate::projective::join2(
        &curve.vertices()[0],
        &curve.vertices()[1],
    )?);
    s.point2(&pole, "Q")
        .line2(&curve.polar_of_point(&pole), "q");
    let center = p2([0, 0, 1]);
    s.point2(&center, "O")
        .line2(&curve.polar_of_point(&center), "o");
    Ok(s)
}

/// Rules of the saddle `xy = zw`: the first family through `(s,0,0)` and the
/// ideal point `[0:1:s:0]`, the second through `(0,t,0)` and `[1:0:t:0]`.
pub fn saddle_rule(first: bool, s: i64) -> PluckerLine<Rational> {
    if first {
        join3_points(&p3([s, 0, 0, 1]), &p3([0, 1, s, 0])).expect("distinct")
    } else {
        join3_points(&p3([0, s, 0, 1]), &p3([1, 0, s, 0])).expect("distinct")
    }
}

pub fn saddle_surface() -> RuledSurface<Rational> {
    let r = |first| {
        [
            saddle_rule(first, 0),
            saddle_rule(first, 1),
            saddle_rule(first, 2),
        ]
    };
    RuledSurface::from_lines(r(true), r(false)).expect("saddle rules")
}

/// The configuration of the saddle seen from `(0,0,1)`.
pub fn saddle_dandelin() -> Result<DandelinConfiguration<Rational>> {
    saddle_surface().dandelin_from_point(&p3([0, 0, 1, 1]))
}

/// Six colored lines and their nine basic points.
pub fn dandelin_scene<F: Field>(cfg: &DandelinConfiguration<F>) -> Result<Scene> {
    let tag = cfg.red()[0].tag();
    let mut s = Scene::new(tag);
    for (i, l) in cfg.red().iter().enumerate() {
        s.line3(l, &format!("r{}", i + 1), "red");
    }
    for (i, l) in cfg.blue().iter().enumerate() {
        s.line3(l, &format!("b{}", i + 1), "blue");
    }
    for (i, row) in cfg.basic_points()?.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            s.point3(x, &format!("r{}b{}", i + 1, j + 1));
        }
    }
    Ok(s)
}

/// `count` rules of each family.
pub fn surface_scene<F: Field>(surface: &RuledSurface<F>, count: usize) -> Scene {
    let mut s = Scene::new(surface.tag());
    for (i, l) in surface.red_rules(count).iter().enumerate() {
        s.line3(l, &format!("r{}", i + 1), "red");
    }
    for (i, l) in surface.blue_rules(count).iter().enumerate() {
        s.line3(l, &format!("b{}", i + 1), "blue");
    }
    s
}
