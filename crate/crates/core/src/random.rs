//! Seeded random instances.
//!
//! Every instance draws from its own ChaCha8 stream, keyed by the run seed,
//! the property name, and the instance index, so any single instance can be
//! replayed without generating the ones before it. Rationals are sampled as
//! `n/d` with `n` uniform in `[-h, h]` and `d` uniform in `[1, h]` for the
//! height `h`; prime-field elements are uniform residues.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::HarmonicCurve;
use crate::error::{GeometryError, Result};
use crate::field::{Field, FieldTag};
use crate::linalg::{axpy, Matrix};
use crate::projective::{
    collinear, general_position_points2, join2, Collineation, HLine2, HPlane3, HPoint2, HPoint3,
    PlaneCollineation, PluckerLine, SpaceCollineation,
};
use crate::ruled::RuledSurface;

/// Default height of sampled rationals.
pub const DEFAULT_HEIGHT: i64 = 9;

const MAX_TRIES: usize = 1000;

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

pub struct Sampler<F> {
    rng: ChaCha8Rng,
    tag: FieldTag,
    height: i64,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> Sampler<F> {
    pub fn new(tag: FieldTag, seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            tag,
            height: DEFAULT_HEIGHT,
            _field: std::marker::PhantomData,
        }
    }

    /// The stream for instance `index` of `property` in a run with `seed`.
    pub fn for_instance(tag: FieldTag, seed: u64, property: &str, index: u64) -> Self {
        let mut s = Self::new(tag, seed ^ fnv1a(property));
        s.rng.set_stream(index);
        s
    }

    pub fn with_height(mut self, height: i64) -> Self {
        self.height = height.max(1);
        self
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    fn retry<T>(&mut self, mut f: impl FnMut(&mut Self) -> Option<T>) -> Result<T> {
        (0..MAX_TRIES)
            .find_map(|_| f(self))
            .ok_or(GeometryError::DegenerateConfiguration)
    }

    pub fn scalar(&mut self) -> F {
        match self.tag {
            FieldTag::Rational => {
                let n = self.rng.gen_range(-self.height..=self.height);
                let d = self.rng.gen_range(1..=self.height);
                F::from_fraction(self.tag, n, d).expect("nonzero denominator")
            }
            FieldTag::Prime(p) => {
                let n = self.rng.gen_range(0..p as i64);
                F::from_fraction(self.tag, n, 1).expect("residue")
            }
        }
    }

    pub fn nonzero_scalar(&mut self) -> F {
        loop {
            let x = self.scalar();
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn vector<const N: usize>(&mut self) -> [F; N] {
        std::array::from_fn(|_| self.scalar())
    }

    pub fn point2(&mut self) -> HPoint2<F> {
        loop {
            if let Ok(p) = HPoint2::new(self.vector()) {
                return p;
            }
        }
    }

    pub fn line2(&mut self) -> HLine2<F> {
        self.point2().dual()
    }

    pub fn point3(&mut self) -> HPoint3<F> {
        loop {
            if let Ok(p) = HPoint3::new(self.vector()) {
                return p;
            }
        }
    }

    pub fn plane3(&mut self) -> HPlane3<F> {
        loop {
            if let Ok(p) = HPlane3::new(self.vector()) {
                return p;
            }
        }
    }

    pub fn line3(&mut self) -> PluckerLine<F> {
        loop {
            if let Ok(l) = PluckerLine::join(&self.point3(), &self.point3()) {
                return l;
            }
        }
    }

    /// Two distinct points `A, B` and a third `C` on their line.
    pub fn collinear_triple(&mut self) -> Result<[HPoint2<F>; 3]> {
        self.retry(|s| {
            let (a, b) = (s.point2(), s.point2());
            let t = s.nonzero_scalar();
            let c = HPoint2::new(axpy(a.coords(), &t, b.coords())).ok()?;
            (a != b && c != a && c != b).then_some([a, c, b])
        })
    }

    /// A point of the line `A∨B` other than `A` and `B`.
    pub fn point_on_line_between(&mut self, a: &HPoint2<F>, b: &HPoint2<F>) -> Result<HPoint2<F>> {
        self.retry(|s| {
            let t = s.nonzero_scalar();
            HPoint2::new(axpy(a.coords(), &t, b.coords()))
                .ok()
                .filter(|c| c != a && c != b)
        })
    }

    pub fn point_off_line(&mut self, l: &HLine2<F>) -> Result<HPoint2<F>> {
        self.retry(|s| Some(s.point2()).filter(|p| !p.lies_on(l)))
    }

    pub fn triangle(&mut self) -> Result<[HPoint2<F>; 3]> {
        self.retry(|s| {
            let t = [s.point2(), s.point2(), s.point2()];
            (!collinear(&t[0], &t[1], &t[2])).then_some(t)
        })
    }

    pub fn quadrangle(&mut self) -> Result<[HPoint2<F>; 4]> {
        self.retry(|s| {
            let q = [s.point2(), s.point2(), s.point2(), s.point2()];
            general_position_points2(&q).then_some(q)
        })
    }

    pub fn harmonic_curve(&mut self) -> Result<HarmonicCurve<F>> {
        self.retry(|s| {
            let [a, c, b, d] = s.quadrangle().ok()?;
            HarmonicCurve::from_points(&a, &c, &b, &d).ok()
        })
    }

    /// A random point of the curve, reached through a random parameter.
    pub fn curve_point(&mut self, curve: &HarmonicCurve<F>) -> Result<HPoint2<F>> {
        self.retry(|s| {
            let t = s.nonzero_scalar();
            curve.hc_point(&curve.parameter_point(&t)).ok()
        })
    }

    /// `count` distinct random curve points.
    pub fn curve_points(
        &mut self,
        curve: &HarmonicCurve<F>,
        count: usize,
    ) -> Result<Vec<HPoint2<F>>> {
        let mut out: Vec<HPoint2<F>> = Vec::with_capacity(count);
        for _ in 0..MAX_TRIES {
            if out.len() == count {
                break;
            }
            let z = self.curve_point(curve)?;
            if !out.contains(&z) {
                out.push(z);
            }
        }
        if out.len() == count {
            Ok(out)
        } else {
            Err(GeometryError::DegenerateConfiguration)
        }
    }

    pub fn point_off_curve(&mut self, curve: &HarmonicCurve<F>) -> Result<HPoint2<F>> {
        self.retry(|s| Some(s.point2()).filter(|p| !curve.conic().contains(p)))
    }

    fn matrix<const N: usize>(&mut self) -> Matrix<F, N> {
        Matrix::from_rows(std::array::from_fn(|_| self.vector()))
    }

    pub fn collineation2(&mut self) -> Result<PlaneCollineation<F>> {
        self.retry(|s| {
            let m = s.matrix::<3>();
            Collineation::new(m).ok()
        })
    }

    pub fn collineation3(&mut self) -> Result<SpaceCollineation<F>> {
        self.retry(|s| {
            let m = s.matrix::<4>();
            Collineation::new(m).ok()
        })
    }

    /// Three pairwise skew lines.
    pub fn skew_lines(&mut self) -> Result<[PluckerLine<F>; 3]> {
        self.retry(|s| {
            let l = [s.line3(), s.line3(), s.line3()];
            (l[0].is_skew_to(&l[1]) && l[0].is_skew_to(&l[2]) && l[1].is_skew_to(&l[2]))
                .then_some(l)
        })
    }

    pub fn ruled_surface(&mut self) -> Result<RuledSurface<F>> {
        self.retry(|s| RuledSurface::from_generators(s.skew_lines().ok()?).ok())
    }

    pub fn point_off_surface(&mut self, surface: &RuledSurface<F>) -> Result<HPoint3<F>> {
        self.retry(|s| Some(s.point3()).filter(|p| !surface.quadric().contains(p)))
    }

    /// Two lines and three points on each, distinct and off their meet, as
    /// `(a0, b0, B on a0, A on b0)`.
    #[allow(clippy::type_complexity)]
    pub fn pappus_hexagon(
        &mut self,
    ) -> Result<(HLine2<F>, HLine2<F>, [HPoint2<F>; 3], [HPoint2<F>; 3])> {
        self.retry(|s| {
            let [o, u, v] = s.triangle().ok()?;
            let on = |s: &mut Self, x: &HPoint2<F>| -> Option<[HPoint2<F>; 3]> {
                let pts = [
                    s.point_on_line_between(&o, x).ok()?,
                    s.point_on_line_between(&o, x).ok()?,
                    s.point_on_line_between(&o, x).ok()?,
                ];
                (pts[0] != pts[1] && pts[0] != pts[2] && pts[1] != pts[2]).then_some(pts)
            };
            let b = on(s, &u)?;
            let a = on(s, &v)?;
            Some((join2(&o, &u).ok()?, join2(&o, &v).ok()?, b, a))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    #[test]
    fn instances_are_reproducible() {
        let draw = |i| {
            let mut s = Sampler::<Rational>::for_instance(FieldTag::Rational, 7, "prop", i);
            (s.point2(), s.collinear_triple().unwrap())
        };
        assert_eq!(draw(3), draw(3));
        assert_ne!(draw(3), draw(4));
        let mut s = Sampler::<Rational>::for_instance(FieldTag::Rational, 7, "other", 3);
        assert_ne!(s.point2(), draw(3).0);
    }

    #[test]
    fn generated_shapes_are_valid() {
        let mut s = Sampler::<Rational>::new(FieldTag::Rational, 1);
        let [a, c, b] = s.collinear_triple().unwrap();
        assert!(collinear(&a, &c, &b) && a != b && c != a && c != b);
        assert!(general_position_points2(&s.quadrangle().unwrap()));
        let curve = s.harmonic_curve().unwrap();
        for z in s.curve_points(&curve, 5).unwrap() {
            assert!(curve.curve_membership(&z));
        }
        let surface = s.ruled_surface().unwrap();
        assert!(!surface
            .quadric()
            .contains(&s.point_off_surface(&surface).unwrap()));
        let (a0, b0, bs, as_) = s.pappus_hexagon().unwrap();
        assert!(bs.iter().all(|x| x.lies_on(&a0)) && as_.iter().all(|x| x.lies_on(&b0)));
    }

    #[test]
    fn prime_field_sampling() {
        let mut s = Sampler::<Fp>::new(FieldTag::Prime(7), 2);
        for _ in 0..50 {
            assert!(s.scalar().value() < 7);
        }
        assert!(general_position_points2(&s.quadrangle().unwrap()));
    }
}
