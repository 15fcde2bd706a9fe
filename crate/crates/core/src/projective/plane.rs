use crate::error::{GeometryError, Result};
use crate::field::{Field, FieldTag};
use crate::linalg::{cross3, det, dot};

use super::homogeneous;

homogeneous!(
    /// A point of the projective plane.
    HPoint2,
    3
);
homogeneous!(
    /// A line of the projective plane, as the coefficient triple of its equation.
    HLine2,
    3
);

impl<F: Field> HPoint2<F> {
    /// The affine point `(x, y)`, i.e. `[x:y:1]`.
    pub fn affine(x: F, y: F) -> Self {
        let one = x.one_like();
        Self::new([x, y, one]).expect("w = 1")
    }

    pub fn is_ideal(&self) -> bool {
        self.coords[2].is_zero()
    }

    pub fn lies_on(&self, l: &HLine2<F>) -> bool {
        dot(&self.coords, l.coords()).is_zero()
    }

    pub fn join(&self, other: &Self) -> Result<HLine2<F>> {
        join2(self, other)
    }
}

impl<F: Field> HLine2<F> {
    pub fn contains(&self, p: &HPoint2<F>) -> bool {
        p.lies_on(self)
    }

    pub fn meet(&self, other: &Self) -> Result<HPoint2<F>> {
        meet2(self, other)
    }

    /// The line at infinity `w = 0`.
    pub fn at_infinity(tag: FieldTag) -> Result<Self> {
        Self::from_ints(tag, [0, 0, 1])
    }

    /// The point with the same coordinates (pole–polar by the identity form).
    pub fn dual(&self) -> HPoint2<F> {
        HPoint2 {
            coords: self.coords.clone(),
        }
    }
}

impl<F: Field> HPoint2<F> {
    pub fn dual(&self) -> HLine2<F> {
        HLine2 {
            coords: self.coords.clone(),
        }
    }
}

/// The line through two distinct points.
pub fn join2<F: Field>(p: &HPoint2<F>, q: &HPoint2<F>) -> Result<HLine2<F>> {
    HLine2::new(cross3(p.coords(), q.coords())).map_err(|_| GeometryError::CoincidentArguments)
}

/// The common point of two distinct lines.
pub fn meet2<F: Field>(l: &HLine2<F>, m: &HLine2<F>) -> Result<HPoint2<F>> {
    HPoint2::new(cross3(l.coords(), m.coords())).map_err(|_| GeometryError::CoincidentArguments)
}

fn det3<F: Field>(a: &[F; 3], b: &[F; 3], c: &[F; 3]) -> F {
    det(&[a.to_vec(), b.to_vec(), c.to_vec()])
}

pub fn collinear<F: Field>(a: &HPoint2<F>, b: &HPoint2<F>, c: &HPoint2<F>) -> bool {
    det3(a.coords(), b.coords(), c.coords()).is_zero()
}

pub fn concurrent<F: Field>(a: &HLine2<F>, b: &HLine2<F>, c: &HLine2<F>) -> bool {
    det3(a.coords(), b.coords(), c.coords()).is_zero()
}

/// No three of the given points are collinear (and no two coincide).
pub fn general_position_points2<F: Field>(pts: &[HPoint2<F>]) -> bool {
    triples(pts.len()).all(|(i, j, k)| !collinear(&pts[i], &pts[j], &pts[k]))
        && pairs(pts.len()).all(|(i, j)| pts[i] != pts[j])
}

/// No three of the given lines are concurrent (and no two coincide).
pub fn general_position_lines2<F: Field>(lines: &[HLine2<F>]) -> bool {
    triples(lines.len()).all(|(i, j, k)| !concurrent(&lines[i], &lines[j], &lines[k]))
        && pairs(lines.len()).all(|(i, j)| lines[i] != lines[j])
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

/// Fixed list of reference points used for deterministic auxiliary choices.
pub fn reference_points2<F: Field>(tag: FieldTag) -> Vec<HPoint2<F>> {
    const REFS: [[i64; 3]; 10] = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 1],
        [1, 2, 3],
        [1, -1, 2],
        [2, 1, -1],
        [1, 3, -2],
        [3, -2, 1],
        [1, 1, 0],
    ];
    let mut out: Vec<HPoint2<F>> = Vec::new();
    for r in REFS {
        // Over small prime fields some references collapse; skip zero vectors and repeats.
        if let Ok(p) = HPoint2::from_ints(tag, r) {
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

    fn p(v: [i64; 3]) -> HPoint2<Rational> {
        HPoint2::from_ints(FieldTag::Rational, v).unwrap()
    }

    fn l(v: [i64; 3]) -> HLine2<Rational> {
        HLine2::from_ints(FieldTag::Rational, v).unwrap()
    }

    #[test]
    fn join_of_axis_points() {
        assert_eq!(join2(&p([1, 0, 0]), &p([0, 1, 0])).unwrap(), l([0, 0, 1]));
        assert_eq!(meet2(&l([0, 0, 1]), &l([0, 1, 0])).unwrap(), p([1, 0, 0]));
    }

    #[test]
    fn join_checked_by_incidence() {
        let a = p([1, 0, 1]);
        let b = p([0, 1, 1]);
        let ab = join2(&a, &b).unwrap();
        assert_eq!(ab, l([1, 1, -1]));
        assert!(a.lies_on(&ab) && b.lies_on(&ab));
    }

    #[test]
    fn coincident_join_fails() {
        assert_eq!(
            join2(&p([1, 2, 3]), &p([2, 4, 6])),
            Err(GeometryError::CoincidentArguments)
        );
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = HPoint2::new([q(-1, 2), q(1, 3), q(0, 1)]).unwrap();
        let b = HPoint2::new([q(3, 1), q(-2, 1), q(0, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "[3:-2:0]");
        let again = HPoint2::new(a.coords().clone()).unwrap();
        assert_eq!(again, a);
    }

    #[test]
    fn general_position_checks() {
        let quad = [p([1, 0, 0]), p([0, 1, 0]), p([0, 0, 1]), p([1, 1, 1])];
        assert!(general_position_points2(&quad));
        assert!(!general_position_points2(&[
            p([0, 0, 1]),
            p([1, 0, 1]),
            p([2, 0, 1])
        ]));
    }

    #[test]
    fn join_meet_duality() {
        let (a, b, c) = (p([1, 2, 3]), p([-1, 0, 4]), p([2, 3, -1]));
        assert_eq!(
            meet2(&join2(&a, &b).unwrap(), &join2(&a, &c).unwrap()).unwrap(),
            a
        );
    }
}
