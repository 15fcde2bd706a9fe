use std::array;

use crate::error::{GeometryError, Result};
use crate::field::{Field, FieldTag};
use crate::linalg::{dot, Matrix};

use super::space::PLUCKER_PAIRS;
use super::{HLine2, HPlane3, HPoint2, HPoint3, PluckerLine};

/// An invertible projective map, stored as a matrix acting on column vectors
/// and canonicalized up to scale so that equality is projective equality.
///
/// Composition follows the right-action convention: `s.then(&t)` applies `s`
/// first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Collineation<F, const N: usize> {
    matrix: Matrix<F, N>,
}

pub type PlaneCollineation<F> = Collineation<F, 3>;
pub type SpaceCollineation<F> = Collineation<F, 4>;

impl<F: Field, const N: usize> Collineation<F, N> {
    pub fn new(matrix: Matrix<F, N>) -> Result<Self> {
        if matrix.det().is_zero() {
            return Err(GeometryError::SingularMatrix);
        }
        let mut flat = matrix.flatten();
        F::canonicalize(&mut flat);
        Ok(Collineation {
            matrix: Matrix::from_flat(&flat).expect("N×N entries"),
        })
    }

    pub fn identity(tag: FieldTag) -> Self {
        let one = F::from_fraction(tag, 1, 1).expect("1 embeds");
        Collineation {
            matrix: Matrix::identity_like(&one),
        }
    }

    pub fn matrix(&self) -> &Matrix<F, N> {
        &self.matrix
    }

    pub fn tag(&self) -> FieldTag {
        self.matrix.get(0, 0).tag()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Self) -> Self {
        Self::new(next.matrix.mul(&self.matrix)).expect("product of invertible maps")
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.matrix.adjugate()).expect("adjugate of invertible map")
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.tag())
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.then(self).is_identity()
    }

    pub fn map_point(&self, v: &[F; N]) -> [F; N] {
        self.matrix.mul_vec(v)
    }

    /// Hyperplanes transform by the inverse transpose; the adjugate transpose
    /// is proportional to it.
    pub fn map_hyperplane(&self, u: &[F; N]) -> [F; N] {
        self.matrix.adjugate().transpose().mul_vec(u)
    }
}

pub trait Transform<T> {
    fn apply(&self, x: &T) -> T;
}

impl<F: Field> Transform<HPoint2<F>> for Collineation<F, 3> {
    fn apply(&self, x: &HPoint2<F>) -> HPoint2<F> {
        HPoint2::new(self.map_point(x.coords())).expect("invertible")
    }
}

impl<F: Field> Transform<HLine2<F>> for Collineation<F, 3> {
    fn apply(&self, x: &HLine2<F>) -> HLine2<F> {
        HLine2::new(self.map_hyperplane(x.coords())).expect("invertible")
    }
}

impl<F: Field> Transform<HPoint3<F>> for Collineation<F, 4> {
    fn apply(&self, x: &HPoint3<F>) -> HPoint3<F> {
        HPoint3::new(self.map_point(x.coords())).expect("invertible")
    }
}

impl<F: Field> Transform<HPlane3<F>> for Collineation<F, 4> {
    fn apply(&self, x: &HPlane3<F>) -> HPlane3<F> {
        HPlane3::new(self.map_hyperplane(x.coords())).expect("invertible")
    }
}

impl<F: Field> Transform<PluckerLine<F>> for Collineation<F, 4> {
    /// Action on Plücker coordinates by the second compound matrix.
    fn apply(&self, x: &PluckerLine<F>) -> PluckerLine<F> {
        let m = self.matrix.rows();
        let compound: [[F; 6]; 6] = array::from_fn(|r| {
            let (i, j) = PLUCKER_PAIRS[r];
            array::from_fn(|c| {
                let (k, l) = PLUCKER_PAIRS[c];
                m[i][k].clone() * m[j][l].clone() - m[i][l].clone() * m[j][k].clone()
            })
        });
        let p = array::from_fn(|r| dot(&compound[r], x.coords()));
        PluckerLine::new(p).expect("invertible maps send lines to lines")
    }
}
