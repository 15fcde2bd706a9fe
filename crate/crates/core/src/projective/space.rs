use std::array;

use crate::error::{GeometryError, Result};
use crate::field::{Field, FieldTag};
use crate::linalg::dot;

use super::homogeneous;
use super::plane::pairs;

homogeneous!(
    /// A point of projective 3-space.
    HPoint3,
    4
);
homogeneous!(
    /// A plane of projective 3-space.
    HPlane3,
    4
);

/// Index pairs of the Plücker coordinates, in storage order.
pub(crate) const PLUCKER_PAIRS: [(usize, usize); 6] =
    [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// A line of projective 3-space in Plücker coordinates
/// `(p01, p02, p03, p12, p13, p23)` with `p_ij = x_i y_j - x_j y_i` for
/// any two points `x`, `y` spanning it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PluckerLine<F> {
    p: [F; 6],
}

impl<F: Field> HPoint3<F> {
    pub fn affine(x: F, y: F, z: F) -> Self {
        let one = x.one_like();
        Self::new([x, y, z, one]).expect("w = 1")
    }

    pub fn lies_on(&self, plane: &HPlane3<F>) -> bool {
        dot(&self.coords, plane.coords()).is_zero()
    }

    /// The common point of three planes.
    pub fn meet_planes(a: &HPlane3<F>, b: &HPlane3<F>, c: &HPlane3<F>) -> Result<Self> {
        let line =
            PluckerLine::meet_planes(a, b).map_err(|_| GeometryError::DegenerateIntersection)?;
        meet_line_plane(&line, c).map_err(|_| GeometryError::DegenerateIntersection)
    }
}

impl<F: Field> HPlane3<F> {
    pub fn contains(&self, p: &HPoint3<F>) -> bool {
        p.lies_on(self)
    }

    pub fn contains_line(&self, l: &PluckerLine<F>) -> bool {
        l.lies_in(self)
    }

    /// The plane through three non-collinear points.
    pub fn through_points(a: &HPoint3<F>, b: &HPoint3<F>, c: &HPoint3<F>) -> Result<Self> {
        let ab = join3_points(a, b)?;
        join_line_point(&ab, c).map_err(|_| GeometryError::DegenerateSpan)
    }
}

impl<F: Field> PluckerLine<F> {
    /// Validates the Grassmann–Plücker relation and canonicalizes.
    pub fn new(mut p: [F; 6]) -> Result<Self> {
        if !F::canonicalize(&mut p) {
            return Err(GeometryError::ZeroVector);
        }
        let rel =
            p[0].clone() * p[5].clone() - p[1].clone() * p[4].clone() + p[2].clone() * p[3].clone();
        if !rel.is_zero() {
            return Err(GeometryError::NotALine);
        }
        Ok(PluckerLine { p })
    }

    pub fn coords(&self) -> &[F; 6] {
        &self.p
    }

    pub fn tag(&self) -> FieldTag {
        self.p[0].tag()
    }

    pub fn join(a: &HPoint3<F>, b: &HPoint3<F>) -> Result<Self> {
        join3_points(a, b)
    }

    /// The line of intersection of two distinct planes.
    pub fn meet_planes(a: &HPlane3<F>, b: &HPlane3<F>) -> Result<Self> {
        let (u, v) = (a.coords(), b.coords());
        let q = |i: usize, j: usize| u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone();
        let p = [q(2, 3), -q(1, 3), q(1, 2), q(0, 3), -q(0, 2), q(0, 1)];
        Self::new(p).map_err(|_| GeometryError::CoincidentArguments)
    }

    /// The antisymmetric matrix `(p_ij)`.
    fn primal(&self) -> [[F; 4]; 4] {
        antisymmetric(&self.p)
    }

    /// The antisymmetric matrix of the dual (plane) coordinates.
    fn dual(&self) -> [[F; 4]; 4] {
        let p = &self.p;
        let s = [
            p[5].clone(),
            -p[4].clone(),
            p[3].clone(),
            p[2].clone(),
            -p[1].clone(),
            p[0].clone(),
        ];
        antisymmetric(&s)
    }

    /// The bilinear pairing that vanishes exactly on coplanar pairs.
    pub fn pairing(&self, o: &Self) -> F {
        let (p, q) = (&self.p, &o.p);
        p[0].clone() * q[5].clone() - p[1].clone() * q[4].clone()
            + p[2].clone() * q[3].clone()
            + p[3].clone() * q[2].clone()
            - p[4].clone() * q[1].clone()
            + p[5].clone() * q[0].clone()
    }

    pub fn meets(&self, o: &Self) -> bool {
        self.pairing(o).is_zero()
    }

    pub fn is_skew_to(&self, o: &Self) -> bool {
        !self.meets(o)
    }

    pub fn contains(&self, x: &HPoint3<F>) -> bool {
        let d = self.dual();
        d.iter().all(|row| dot(row, x.coords()).is_zero())
    }

    pub fn lies_in(&self, plane: &HPlane3<F>) -> bool {
        let m = self.primal();
        m.iter().all(|row| dot(row, plane.coords()).is_zero())
    }

    /// Two distinct points spanning the line.
    pub fn point_pair(&self) -> (HPoint3<F>, HPoint3<F>) {
        let tag = self.tag();
        let mut found: Vec<HPoint3<F>> = Vec::new();
        for k in 0..4 {
            let mut e = [0i64; 4];
            e[k] = 1;
            let plane = HPlane3::from_ints(tag, e).expect("unit vector");
            if let Ok(x) = meet_line_plane(self, &plane) {
                if !found.contains(&x) {
                    found.push(x);
                }
            }
            if found.len() == 2 {
                break;
            }
        }
        let b = found
            .pop()
            .expect("a line meets two coordinate planes in distinct points");
        let a = found
            .pop()
            .expect("a line meets two coordinate planes in distinct points");
        (a, b)
    }

    /// The point `u + t·v` for the spanning pair `(u, v)` of [`Self::point_pair`].
    pub fn point_at(&self, t: &F) -> HPoint3<F> {
        let (u, v) = self.point_pair();
        let c: [F; 4] =
            array::from_fn(|i| u.coords()[i].clone() + t.clone() * v.coords()[i].clone());
        HPoint3::new(c).expect("distinct spanning points")
    }

    /// Two distinct planes through the line.
    pub fn plane_pair(&self) -> (HPlane3<F>, HPlane3<F>) {
        let mut found: Vec<HPlane3<F>> = Vec::new();
        for r in reference_points3::<F>(self.tag()) {
            if let Ok(pl) = join_line_point(self, &r) {
                if !found.contains(&pl) {
                    found.push(pl);
                }
            }
            if found.len() == 2 {
                break;
            }
        }
        let b = found.pop().expect("pencil of planes has two members");
        let a = found.pop().expect("pencil of planes has two members");
        (a, b)
    }
}

fn antisymmetric<F: Field>(p: &[F; 6]) -> [[F; 4]; 4] {
    let zero = p[0].zero_like();
    let mut m: [[F; 4]; 4] = array::from_fn(|_| array::from_fn(|_| zero.clone()));
    for (k, &(i, j)) in PLUCKER_PAIRS.iter().enumerate() {
        m[i][j] = p[k].clone();
        m[j][i] = -p[k].clone();
    }
    m
}

impl<F: std::fmt::Display> std::fmt::Display for PluckerLine<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.p.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The line through two distinct points.
pub fn join3_points<F: Field>(a: &HPoint3<F>, b: &HPoint3<F>) -> Result<PluckerLine<F>> {
    let (x, y) = (a.coords(), b.coords());
    let p = PLUCKER_PAIRS.map(|(i, j)| x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone());
    PluckerLine::new(p).map_err(|_| GeometryError::DegenerateSpan)
}

/// The point where a line crosses a plane not containing it.
pub fn meet_line_plane<F: Field>(l: &PluckerLine<F>, plane: &HPlane3<F>) -> Result<HPoint3<F>> {
    let m = l.primal();
    let x = array::from_fn(|i| dot(&m[i], plane.coords()));
    HPoint3::new(x).map_err(|_| GeometryError::LineInPlane)
}

/// The plane spanned by a line and a point off it.
pub fn join_line_point<F: Field>(l: &PluckerLine<F>, x: &HPoint3<F>) -> Result<HPlane3<F>> {
    let d = l.dual();
    let u = array::from_fn(|i| dot(&d[i], x.coords()));
    HPlane3::new(u).map_err(|_| GeometryError::PointOnLine)
}

/// Whether two lines meet (coincident lines count as meeting).
pub fn lines_coplanar<F: Field>(l: &PluckerLine<F>, m: &PluckerLine<F>) -> bool {
    l.meets(m)
}

/// The common point of two distinct coplanar lines.
pub fn meet_lines3<F: Field>(l: &PluckerLine<F>, m: &PluckerLine<F>) -> Result<HPoint3<F>> {
    if l == m {
        return Err(GeometryError::CoincidentLines);
    }
    if !l.meets(m) {
        return Err(GeometryError::SkewLines);
    }
    for r in reference_points3::<F>(l.tag()) {
        let Ok(plane) = join_line_point(m, &r) else {
            continue;
        };
        if let Ok(x) = meet_line_plane(l, &plane) {
            return Ok(x);
        }
    }
    unreachable!("some reference point lies off the plane of two distinct meeting lines")
}

/// The plane containing two distinct meeting lines.
pub fn join_lines3<F: Field>(l: &PluckerLine<F>, m: &PluckerLine<F>) -> Result<HPlane3<F>> {
    if l == m {
        return Err(GeometryError::CoincidentLines);
    }
    if !l.meets(m) {
        return Err(GeometryError::SkewLines);
    }
    let (a, b) = m.point_pair();
    let x = if l.contains(&a) { b } else { a };
    join_line_point(l, &x)
}

/// Pairwise skew (no pair coplanar).
pub fn general_position_lines3<F: Field>(lines: &[PluckerLine<F>]) -> bool {
    pairs(lines.len()).all(|(i, j)| lines[i].is_skew_to(&lines[j]))
}

pub fn reference_points3<F: Field>(tag: FieldTag) -> Vec<HPoint3<F>> {
    const REFS: [[i64; 4]; 12] = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 1, 1],
        [1, 2, 3, 4],
        [1, -1, 2, -3],
        [2, 1, -1, 3],
        [1, 3, -2, 1],
        [3, -1, 1, 2],
        [1, 1, 0, 0],
        [0, 1, 1, 1],
    ];
    let mut out: Vec<HPoint3<F>> = Vec::new();
    for r in REFS {
        if let Ok(p) = HPoint3::from_ints(tag, r) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, Rational};

    const T: FieldTag = FieldTag::Rational;

    fn pt(v: [i64; 4]) -> HPoint3<Rational> {
        HPoint3::from_ints(T, v).unwrap()
    }

    fn pl(v: [i64; 4]) -> HPlane3<Rational> {
        HPlane3::from_ints(T, v).unwrap()
    }

    fn line(v: [i64; 6]) -> PluckerLine<Rational> {
        PluckerLine::new(v.map(|x| q(x, 1))).unwrap()
    }

    fn x_axis() -> PluckerLine<Rational> {
        join3_points(&pt([0, 0, 0, 1]), &pt([1, 0, 0, 1])).unwrap()
    }

    fn y_axis() -> PluckerLine<Rational> {
        join3_points(&pt([0, 0, 0, 1]), &pt([0, 1, 0, 1])).unwrap()
    }

    #[test]
    fn reference_edge() {
        assert_eq!(
            join3_points(&pt([1, 0, 0, 0]), &pt([0, 1, 0, 0])).unwrap(),
            line([1, 0, 0, 0, 0, 0])
        );
    }

    #[test]
    fn edge_meets_plane() {
        let e01 = line([1, 0, 0, 0, 0, 0]);
        assert_eq!(
            meet_line_plane(&e01, &pl([0, 0, 1, 0])),
            Err(GeometryError::LineInPlane)
        );
        assert_eq!(
            meet_line_plane(&x_axis(), &pl([0, 0, 0, 1])).unwrap(),
            pt([1, 0, 0, 0])
        );
    }

    #[test]
    fn plane_through_axis_and_point() {
        let plane = join_line_point(&x_axis(), &pt([0, 0, 1, 1])).unwrap();
        assert_eq!(plane, pl([0, 1, 0, 0]));
        assert_eq!(
            join_line_point(&x_axis(), &pt([3, 0, 0, 1])),
            Err(GeometryError::PointOnLine)
        );
    }

    #[test]
    fn coplanarity() {
        assert!(lines_coplanar(&x_axis(), &y_axis()));
        assert_eq!(meet_lines3(&x_axis(), &y_axis()).unwrap(), pt([0, 0, 0, 1]));
        let other = join3_points(&pt([0, 0, 1, 1]), &pt([0, 1, 1, 1])).unwrap();
        assert!(!x_axis().pairing(&other).is_zero());
        assert!(lines_coplanar(&x_axis(), &x_axis()));
        assert_eq!(
            meet_lines3(&x_axis(), &x_axis()),
            Err(GeometryError::CoincidentLines)
        );
    }

    #[test]
    fn invalid_plucker_rejected() {
        assert_eq!(
            PluckerLine::new([1, 0, 0, 0, 0, 1].map(|x| q(x, 1))),
            Err(GeometryError::NotALine)
        );
    }

    #[test]
    fn plane_meet_line() {
        let l = PluckerLine::meet_planes(&pl([0, 1, 0, 0]), &pl([0, 0, 1, 0])).unwrap();
        assert_eq!(l, x_axis());
        let (a, b) = l.point_pair();
        assert!(l.contains(&a) && l.contains(&b) && a != b);
    }

    #[test]
    fn saddle_rules_skew() {
        // x = k on z = xy, through (k,0,0) and (k,1,k)
        let rule = |k: i64| join3_points(&pt([k, 0, 0, 1]), &pt([k, 1, k, 1])).unwrap();
        assert!(general_position_lines3(&[rule(0), rule(1), rule(2)]));
    }

    #[test]
    fn incidence_consistency_random() {
        let pts = [
            pt([1, 2, 3, 4]),
            pt([-2, 0, 1, 5]),
            pt([3, 3, -1, 2]),
            pt([0, 1, -4, 1]),
        ];
        let l = join3_points(&pts[0], &pts[1]).unwrap();
        assert!(l.contains(&pts[0]) && l.contains(&pts[1]) && !l.contains(&pts[2]));
        let plane = join_line_point(&l, &pts[2]).unwrap();
        assert!(pts[..3].iter().all(|p| plane.contains(p)));
        assert!(plane.contains_line(&l));
        let m = join3_points(&pts[2], &pts[3]).unwrap();
        let x = meet_line_plane(&m, &plane).unwrap();
        assert!(m.contains(&x) && plane.contains(&x));
        let through = HPlane3::through_points(&pts[0], &pts[1], &pts[3]).unwrap();
        let back =
            HPoint3::meet_planes(&plane, &through, &join_line_point(&m, &pts[0]).unwrap()).unwrap();
        assert_eq!(back, pts[0]);
    }
}
