//! Quadrangles, harmonic sets and pencils, and harmonic reflections.

use std::array;

use crate::error::{GeometryError, Result};
use crate::field::{Field, FieldTag};
use crate::linalg::{axpy, det, dot, Matrix};
use crate::projective::{
    general_position_points2, join2, join3_points, meet2, meet_lines3, reference_points2,
    reference_points3, Collineation, HLine2, HPlane3, HPoint2, HPoint3, PlaneCollineation,
    SpaceCollineation, Transform,
};

pub(crate) fn reject_char_two(tag: FieldTag) -> Result<()> {
    if tag.characteristic() == 2 {
        Err(GeometryError::CharacteristicTwo)
    } else {
        Ok(())
    }
}

/// Four points in general position, listed in dihedral (cyclic) order.
///
/// With vertices `v0, v1, v2, v3`, the sides are `v0v1, v1v2, v2v3, v3v0`, the
/// diagonal lines are `v0v2` and `v1v3`, and the diagonal points are the
/// meets of opposite sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quadrangle<F> {
    vertices: [HPoint2<F>; 4],
}

impl<F: Field> Quadrangle<F> {
    pub fn new(vertices: [HPoint2<F>; 4]) -> Result<Self> {
        if !general_position_points2(&vertices) {
            return Err(GeometryError::NotAQuadrangle);
        }
        Ok(Quadrangle { vertices })
    }

    pub fn vertices(&self) -> &[HPoint2<F>; 4] {
        &self.vertices
    }

    fn edge(&self, i: usize, j: usize) -> HLine2<F> {
        join2(&self.vertices[i], &self.vertices[j]).expect("vertices are distinct")
    }

    pub fn sides(&self) -> [HLine2<F>; 4] {
        array::from_fn(|i| self.edge(i, (i + 1) % 4))
    }

    pub fn diagonals(&self) -> [HLine2<F>; 2] {
        [self.edge(0, 2), self.edge(1, 3)]
    }

    /// Meet of the two diagonal lines.
    pub fn center(&self) -> HPoint2<F> {
        let [d0, d1] = self.diagonals();
        meet2(&d0, &d1).expect("diagonals are distinct")
    }

    /// `v0v1 ∧ v2v3` and `v1v2 ∧ v3v0`.
    pub fn diagonal_points(&self) -> [HPoint2<F>; 2] {
        let s = self.sides();
        [
            meet2(&s[0], &s[2]).expect("opposite sides are distinct"),
            meet2(&s[1], &s[3]).expect("opposite sides are distinct"),
        ]
    }

    /// Join of the two diagonal points.
    pub fn horizon(&self) -> HLine2<F> {
        let [p, q] = self.diagonal_points();
        join2(&p, &q).expect("diagonal points are distinct")
    }

    /// The center together with the two diagonal points.
    pub fn diagonal_triangle(&self) -> [HPoint2<F>; 3] {
        let [p, q] = self.diagonal_points();
        [self.center(), p, q]
    }
}

/// The output of one harmonic fourth construction, with the quadrangle it used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicFigure<F> {
    pub fourth: HPoint2<F>,
    /// `[P1, P3, P2, P4]`: diagonal points `A`, `B`; `C` on `P1P2`, `D` on `P3P4`.
    /// `None` in the singular cases, where the quadrangle collapses.
    pub quadrangle: Option<Quadrangle<F>>,
}

fn check_base<F: Field>(a: &HPoint2<F>, c: &HPoint2<F>, b: &HPoint2<F>) -> Result<HLine2<F>> {
    reject_char_two(a.tag())?;
    if a == b {
        return Err(GeometryError::CoincidentBase);
    }
    let l = join2(a, b)?;
    if !c.lies_on(&l) {
        return Err(GeometryError::NotCollinear);
    }
    Ok(l)
}

/// Harmonic fourth construction with explicit auxiliary points on a line through `C`.
pub fn harmonic_fourth_figure<F: Field>(
    a: &HPoint2<F>,
    c: &HPoint2<F>,
    b: &HPoint2<F>,
    aux1: &HPoint2<F>,
    aux2: &HPoint2<F>,
) -> Result<HarmonicFigure<F>> {
    let l = check_base(a, c, b)?;
    let bad = |_| GeometryError::DegenerateAuxiliaries;
    if aux1 == aux2
        || aux1.lies_on(&l)
        || aux2.lies_on(&l)
        || !join2(aux1, aux2).map_err(bad)?.contains(c)
    {
        return Err(GeometryError::DegenerateAuxiliaries);
    }
    let p3 = meet2(&join2(a, aux1)?, &join2(b, aux2)?).map_err(bad)?;
    let p4 = meet2(&join2(a, aux2)?, &join2(b, aux1)?).map_err(bad)?;
    let fourth = meet2(&join2(&p3, &p4).map_err(bad)?, &l).map_err(bad)?;
    let quadrangle = Quadrangle::new([aux1.clone(), p3, aux2.clone(), p4]).ok();
    Ok(HarmonicFigure { fourth, quadrangle })
}

/// The harmonic conjugate of `C` with respect to `A` and `B`, built from the
/// given auxiliary points. `C = A` yields `A` and `C = B` yields `B`.
pub fn harmonic_fourth<F: Field>(
    a: &HPoint2<F>,
    c: &HPoint2<F>,
    b: &HPoint2<F>,
    aux1: &HPoint2<F>,
    aux2: &HPoint2<F>,
) -> Result<HPoint2<F>> {
    harmonic_fourth_figure(a, c, b, aux1, aux2).map(|f| f.fourth)
}

/// Auxiliary points chosen deterministically: the first reference point off
/// the support line, then its sum with `C`.
pub fn canonical_auxiliaries<F: Field>(
    a: &HPoint2<F>,
    c: &HPoint2<F>,
    b: &HPoint2<F>,
) -> Result<(HPoint2<F>, HPoint2<F>)> {
    let l = check_base(a, c, b)?;
    let one = c.coords()[0].one_like();
    for r in reference_points2::<F>(a.tag()) {
        if r.lies_on(&l) {
            continue;
        }
        for k in 1..=3 {
            let Ok(second) = HPoint2::new(axpy(r.coords(), &one.int_like(k), c.coords())) else {
                continue;
            };
            if second != r {
                return Ok((r, second));
            }
        }
    }
    Err(GeometryError::DegenerateAuxiliaries)
}

/// [`harmonic_fourth`] with [`canonical_auxiliaries`].
pub fn harmonic_fourth_canonical<F: Field>(
    a: &HPoint2<F>,
    c: &HPoint2<F>,
    b: &HPoint2<F>,
) -> Result<HPoint2<F>> {
    let (p1, p2) = canonical_auxiliaries(a, c, b)?;
    harmonic_fourth(a, c, b, &p1, &p2)
}

/// Harmonic fourth of three collinear points of space, built in a plane
/// through their line.
pub fn harmonic_fourth3<F: Field>(
    a: &HPoint3<F>,
    c: &HPoint3<F>,
    b: &HPoint3<F>,
) -> Result<HPoint3<F>> {
    reject_char_two(a.tag())?;
    if a == b {
        return Err(GeometryError::CoincidentBase);
    }
    let l = join3_points(a, b)?;
    if !l.contains(c) {
        return Err(GeometryError::NotCollinear);
    }
    let bad = |_| GeometryError::DegenerateAuxiliaries;
    let p1 = reference_points3::<F>(a.tag())
        .into_iter()
        .find(|r| !l.contains(r))
        .ok_or(GeometryError::DegenerateAuxiliaries)?;
    let one = c.coords()[0].one_like();
    let p2 = HPoint3::new(axpy(p1.coords(), &one, c.coords()))?;
    let p3 = meet_lines3(&join3_points(a, &p1)?, &join3_points(b, &p2)?).map_err(bad)?;
    let p4 = meet_lines3(&join3_points(a, &p2)?, &join3_points(b, &p1)?).map_err(bad)?;
    meet_lines3(&join3_points(&p3, &p4).map_err(bad)?, &l).map_err(bad)
}

/// Dual construction: the fourth line `d` of the harmonic pencil `a, c, b, d`.
pub fn harmonic_fourth_lines<F: Field>(
    a: &HLine2<F>,
    c: &HLine2<F>,
    b: &HLine2<F>,
) -> Result<HLine2<F>> {
    let center = pencil_center(a, c, b)?;
    let s = section_line(&center);
    let cut = |x: &HLine2<F>| meet2(x, &s).expect("section avoids the center");
    let d = harmonic_fourth_canonical(&cut(a), &cut(c), &cut(b))?;
    join2(&center, &d)
}

fn pencil_center<F: Field>(a: &HLine2<F>, c: &HLine2<F>, b: &HLine2<F>) -> Result<HPoint2<F>> {
    reject_char_two(a.tag())?;
    if a == b {
        return Err(GeometryError::CoincidentBase);
    }
    let center = meet2(a, b)?;
    if !c.contains(&center) {
        return Err(GeometryError::NotConcurrent);
    }
    Ok(center)
}

fn section_line<F: Field>(center: &HPoint2<F>) -> HLine2<F> {
    reference_points2::<F>(center.tag())
        .into_iter()
        .map(|p| p.dual())
        .find(|l| !l.contains(center))
        .expect("reference lines are not all concurrent")
}

/// Projective cross-ratio of four collinear points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossRatio<F> {
    Finite(F),
    Infinite,
}

impl<F: Field> CrossRatio<F> {
    pub fn is_minus_one(&self) -> bool {
        matches!(self, CrossRatio::Finite(x) if (x.clone() + x.one_like()).is_zero())
    }
}

/// `(A,B;C,D) = [A,D][B,C] / ([A,C][B,D])`, where `[X,Y] = det(X, Y, R)` for a
/// fixed point `R` off the common line. In the frame `A = 0, B = ∞, C = 1` this
/// is the coordinate of `D`; harmonic quadruples give `-1`.
pub fn cross_ratio<F: Field>(
    a: &HPoint2<F>,
    b: &HPoint2<F>,
    c: &HPoint2<F>,
    d: &HPoint2<F>,
) -> Result<CrossRatio<F>> {
    let pts = [a, b, c, d];
    let (i, j) = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .find(|&(i, j)| pts[i] != pts[j])
        .ok_or(GeometryError::CoincidentPoints)?;
    let l = join2(pts[i], pts[j])?;
    if pts.iter().any(|p| !p.lies_on(&l)) {
        return Err(GeometryError::NotCollinear);
    }
    let r = reference_points2::<F>(a.tag())
        .into_iter()
        .find(|r| !r.lies_on(&l))
        .expect("some reference point is off the line");
    let br = |x: &HPoint2<F>, y: &HPoint2<F>| {
        det(&[
            x.coords().to_vec(),
            y.coords().to_vec(),
            r.coords().to_vec(),
        ])
    };
    let num = br(a, d) * br(b, c);
    let den = br(a, c) * br(b, d);
    match (num.is_zero(), den.is_zero()) {
        (true, true) => Err(GeometryError::CoincidentPoints),
        (false, true) => Ok(CrossRatio::Infinite),
        _ => Ok(CrossRatio::Finite(num.checked_div(&den)?)),
    }
}

/// Whether `A, C, B, D` (in dihedral order) is a harmonic set, i.e. `D` is the
/// harmonic conjugate of `C` with respect to `A` and `B`.
pub fn is_harmonic_set<F: Field>(
    a: &HPoint2<F>,
    c: &HPoint2<F>,
    b: &HPoint2<F>,
    d: &HPoint2<F>,
) -> Result<bool> {
    reject_char_two(a.tag())?;
    if a == b {
        return Ok(false);
    }
    let l = join2(a, b)?;
    if !c.lies_on(&l) || !d.lies_on(&l) {
        return Err(GeometryError::NotCollinear);
    }
    Ok(harmonic_fourth_canonical(a, c, b)? == *d)
}

/// Whether four concurrent lines `a, c, b, d` form a harmonic pencil, tested
/// on a section by a line missing the center.
pub fn is_harmonic_pencil<F: Field>(
    a: &HLine2<F>,
    c: &HLine2<F>,
    b: &HLine2<F>,
    d: &HLine2<F>,
) -> Result<bool> {
    let center = match pencil_center(a, c, b) {
        Err(GeometryError::CoincidentBase) => return Ok(false),
        other => other?,
    };
    if !d.contains(&center) {
        return Err(GeometryError::NotConcurrent);
    }
    let s = section_line(&center);
    let cut = |x: &HLine2<F>| meet2(x, &s).expect("section avoids the center");
    is_harmonic_set(&cut(a), &cut(c), &cut(b), &cut(d))
}

/// The harmonic reflection of the line `A∨B` fixing `A` and `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineReflection<F> {
    a: HPoint2<F>,
    b: HPoint2<F>,
    line: HLine2<F>,
}

impl<F: Field> LineReflection<F> {
    pub fn new(a: &HPoint2<F>, b: &HPoint2<F>) -> Result<Self> {
        reject_char_two(a.tag())?;
        if a == b {
            return Err(GeometryError::CoincidentBase);
        }
        Ok(LineReflection {
            a: a.clone(),
            b: b.clone(),
            line: join2(a, b)?,
        })
    }

    pub fn line(&self) -> &HLine2<F> {
        &self.line
    }

    pub fn apply(&self, x: &HPoint2<F>) -> Result<HPoint2<F>> {
        if !x.lies_on(&self.line) {
            return Err(GeometryError::ArgumentOffLine);
        }
        harmonic_fourth_canonical(&self.a, x, &self.b)
    }
}

pub fn harmonic_reflection_on_line<F: Field>(
    a: &HPoint2<F>,
    b: &HPoint2<F>,
) -> Result<LineReflection<F>> {
    LineReflection::new(a, b)
}

/// `(m·C)·I − 2·C·mᵀ`: eigenvalue `-1` on `C`, `+1` on the hyperplane `m`.
fn reflection_matrix<F: Field, const N: usize>(
    c: &[F; N],
    m: &[F; N],
) -> Result<Collineation<F, N>> {
    reject_char_two(c[0].tag())?;
    let mc = dot(m, c);
    if mc.is_zero() {
        return Err(GeometryError::IncidentCenterMirror);
    }
    let two = mc.int_like(2);
    let rows = array::from_fn(|i| {
        array::from_fn(|j| {
            let diag = if i == j { mc.clone() } else { mc.zero_like() };
            diag - two.clone() * c[i].clone() * m[j].clone()
        })
    });
    Collineation::new(Matrix::from_rows(rows))
}

/// The harmonic reflection of the plane with center `C` and mirror `m`.
pub fn harmonic_reflection<F: Field>(
    c: &HPoint2<F>,
    m: &HLine2<F>,
) -> Result<PlaneCollineation<F>> {
    reflection_matrix(c.coords(), m.coords())
}

/// The harmonic reflection of space with center `C` and mirror plane `m`.
pub fn harmonic_reflection3<F: Field>(
    c: &HPoint3<F>,
    m: &HPlane3<F>,
) -> Result<SpaceCollineation<F>> {
    reflection_matrix(c.coords(), m.coords())
}

/// `[id, ρ_{A,a}, ρ_{B,b}, ρ_{C,c}]` for a triangle with vertices `A, B, C`
/// and opposite sides `a, b, c`.
pub fn klein_triangle<F: Field>(
    a: &HPoint2<F>,
    side_a: &HLine2<F>,
    b: &HPoint2<F>,
    side_b: &HLine2<F>,
    c: &HPoint2<F>,
    side_c: &HLine2<F>,
) -> Result<[PlaneCollineation<F>; 4]> {
    let vertex =
        |l: &HLine2<F>, m: &HLine2<F>| meet2(l, m).map_err(|_| GeometryError::NotATriangle);
    if vertex(side_b, side_c)? != *a
        || vertex(side_a, side_c)? != *b
        || vertex(side_a, side_b)? != *c
        || a.lies_on(side_a)
    {
        return Err(GeometryError::NotATriangle);
    }
    Ok([
        Collineation::identity(a.tag()),
        harmonic_reflection(a, side_a)?,
        harmonic_reflection(b, side_b)?,
        harmonic_reflection(c, side_c)?,
    ])
}

/// [`klein_triangle`] from the vertices alone.
pub fn klein_triangle_from_vertices<F: Field>(
    a: &HPoint2<F>,
    b: &HPoint2<F>,
    c: &HPoint2<F>,
) -> Result<[PlaneCollineation<F>; 4]> {
    let side =
        |x: &HPoint2<F>, y: &HPoint2<F>| join2(x, y).map_err(|_| GeometryError::NotATriangle);
    klein_triangle(a, &side(b, c)?, b, &side(a, c)?, c, &side(a, b)?)
}

/// The orbit `{X, Xρ_{A,a}, Xρ_{B,b}, Xρ_{C,c}}` of a point under a Klein group.
pub fn klein_orbit<F: Field>(group: &[PlaneCollineation<F>; 4], x: &HPoint2<F>) -> [HPoint2<F>; 4] {
    array::from_fn(|i| group[i].apply(x))
}
