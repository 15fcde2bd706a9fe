use std::array;

use crate::error::{GeometryError, Result};
use crate::field::Field;
use crate::linalg::{nullspace, solve_in_span};

use super::{join2, join3_points, HLine2, HPlane3, HPoint2, HPoint3, PluckerLine};

/// Coordinates on a plane of space: a basis of three points identifies the
/// plane with the projective plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneChart<F> {
    plane: HPlane3<F>,
    basis: [[F; 4]; 3],
}

impl<F: Field> PlaneChart<F> {
    /// A deterministic basis read off the plane equation.
    pub fn new(plane: &HPlane3<F>) -> Self {
        let ns = nullspace(&[plane.coords().to_vec()]);
        let basis = array::from_fn(|i| array::from_fn(|j| ns[i][j].clone()));
        PlaneChart {
            plane: plane.clone(),
            basis,
        }
    }

    /// The chart sending `a, b, c` to `[1:0:0], [0:1:0], [0:0:1]`.
    pub fn from_points(a: &HPoint3<F>, b: &HPoint3<F>, c: &HPoint3<F>) -> Result<Self> {
        let plane = HPlane3::through_points(a, b, c)?;
        Ok(PlaneChart {
            plane,
            basis: [a.coords().clone(), b.coords().clone(), c.coords().clone()],
        })
    }

    pub fn plane(&self) -> &HPlane3<F> {
        &self.plane
    }

    pub fn embed(&self, p: &HPoint2<F>) -> HPoint3<F> {
        let v = array::from_fn(|j| {
            (0..3)
                .map(|i| p.coords()[i].clone() * self.basis[i][j].clone())
                .reduce(|a, b| a + b)
                .expect("three terms")
        });
        HPoint3::new(v).expect("basis is independent")
    }

    pub fn project(&self, x: &HPoint3<F>) -> Result<HPoint2<F>> {
        if !self.plane.contains(x) {
            return Err(GeometryError::ArgumentOffLine);
        }
        let basis: Vec<Vec<F>> = self.basis.iter().map(|b| b.to_vec()).collect();
        let c = solve_in_span(&basis, x.coords()).expect("point lies in the span");
        HPoint2::new([c[0].clone(), c[1].clone(), c[2].clone()])
    }

    pub fn embed_line(&self, l: &HLine2<F>) -> PluckerLine<F> {
        let tag = l.tag();
        let mut pts: Vec<HPoint2<F>> = Vec::new();
        for e in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            if let Ok(x) = HLine2::from_ints(tag, e).and_then(|m| l.meet(&m)) {
                if !pts.contains(&x) {
                    pts.push(x);
                }
            }
        }
        join3_points(&self.embed(&pts[0]), &self.embed(&pts[1])).expect("distinct points")
    }

    pub fn project_line(&self, l: &PluckerLine<F>) -> Result<HLine2<F>> {
        if !l.lies_in(&self.plane) {
            return Err(GeometryError::ArgumentOffLine);
        }
        let (u, v) = l.point_pair();
        join2(&self.project(&u)?, &self.project(&v)?)
    }
}
