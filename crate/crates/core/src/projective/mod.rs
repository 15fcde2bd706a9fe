//! Homogeneous-coordinate models of the projective plane and 3-space.
//!
//! Points and hyperplanes are stored canonically (see [`Field::canonicalize`]),
//! so projective equality is structural equality and every element can be
//! hashed. Lines of space are kept in Plücker form.
//!
//! [`Field::canonicalize`]: crate::field::Field::canonicalize

mod chart;
mod collineation;
mod plane;
mod space;

pub use chart::PlaneChart;
pub use collineation::{Collineation, PlaneCollineation, SpaceCollineation, Transform};
pub use plane::{
    collinear, concurrent, general_position_lines2, general_position_points2, join2, meet2,
    reference_points2, HLine2, HPoint2,
};
pub use space::{
    general_position_lines3, join3_points, join_line_point, join_lines3, lines_coplanar,
    meet_line_plane, meet_lines3, reference_points3, HPlane3, HPoint3, PluckerLine,
};

macro_rules! homogeneous {
    ($(#[$meta:meta])* $name:ident, $n:expr) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name<F> {
            coords: [F; $n],
        }

        impl<F: $crate::field::Field> $name<F> {
            /// Canonicalizes `coords`; fails only on the zero vector.
            pub fn new(mut coords: [F; $n]) -> $crate::error::Result<Self> {
                if F::canonicalize(&mut coords) {
                    Ok(Self { coords })
                } else {
                    Err($crate::error::GeometryError::ZeroVector)
                }
            }

            pub fn from_ints(
                tag: $crate::field::FieldTag,
                v: [i64; $n],
            ) -> $crate::error::Result<Self> {
                Self::new($crate::projective::embed_ints(tag, v)?)
            }

            pub fn coords(&self) -> &[F; $n] {
                &self.coords
            }

            pub fn into_coords(self) -> [F; $n] {
                self.coords
            }

            pub fn tag(&self) -> $crate::field::FieldTag {
                self.coords[0].tag()
            }
        }

        impl<F: std::fmt::Display> std::fmt::Display for $name<F> {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "[")?;
                for (i, c) in self.coords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ":")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    };
}
pub(crate) use homogeneous;

pub(crate) fn embed_ints<F: crate::field::Field, const N: usize>(
    tag: crate::field::FieldTag,
    v: [i64; N],
) -> crate::error::Result<[F; N]> {
    let items = v
        .iter()
        .map(|&x| F::from_fraction(tag, x, 1))
        .collect::<Result<Vec<F>, _>>()?;
    Ok(items.try_into().unwrap_or_else(|_| unreachable!()))
}
