//! Harmonic curves of quadrangles, their tangents and the induced polarity.

use num_traits::Signed;

use crate::error::{GeometryError, Result};
use crate::field::{Field, FieldTag, Rational};
use crate::harmonic::{
    harmonic_fourth_canonical, harmonic_fourth_lines, harmonic_reflection, reject_char_two,
    Quadrangle,
};
use crate::linalg::{axpy, nullspace, scale, Matrix};
use crate::projective::{
    join2, meet2, reference_points2, HLine2, HPoint2, PlaneCollineation, Transform,
};

/// A nondegenerate conic as a symmetric 3×3 matrix, canonical up to scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConicMatrix<F> {
    m: Matrix<F, 3>,
}

impl<F: Field> ConicMatrix<F> {
    pub fn new(m: Matrix<F, 3>) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(GeometryError::DimensionMismatch);
        }
        if m.det().is_zero() {
            return Err(GeometryError::SingularMatrix);
        }
        let mut flat = m.flatten();
        F::canonicalize(&mut flat);
        Ok(ConicMatrix {
            m: Matrix::from_flat(&flat).expect("nine entries"),
        })
    }

    pub fn matrix(&self) -> &Matrix<F, 3> {
        &self.m
    }

    /// `ZᵀMZ`.
    pub fn form(&self, z: &HPoint2<F>) -> F {
        self.m.bilinear(z.coords(), z.coords())
    }

    pub fn contains(&self, z: &HPoint2<F>) -> bool {
        self.form(z).is_zero()
    }

    pub fn polar(&self, p: &HPoint2<F>) -> HLine2<F> {
        HLine2::new(self.m.mul_vec(p.coords())).expect("nonsingular form")
    }

    pub fn pole(&self, l: &HLine2<F>) -> HPoint2<F> {
        HPoint2::new(self.m.adjugate().mul_vec(l.coords())).expect("nonsingular form")
    }

    /// The other point where the line through `T` (on the conic) and `R` meets
    /// the conic; `T` itself when the line is tangent.
    pub fn second_intersection(&self, t: &HPoint2<F>, r: &HPoint2<F>) -> HPoint2<F> {
        let qr = self.form(r);
        let b = self.m.bilinear(t.coords(), r.coords());
        let v = axpy(&scale(&qr, t.coords()), &(-(b.int_like(2) * b)), r.coords());
        HPoint2::new(v).unwrap_or_else(|_| t.clone())
    }

    /// Whether `ρᵀMρ` is proportional to `M`.
    pub fn invariant_under(&self, g: &PlaneCollineation<F>) -> bool {
        let t = g.matrix();
        t.transpose().mul(&self.m).mul(t).proportional_to(&self.m)
    }
}

impl ConicMatrix<Rational> {
    /// Points where the form, normalized to negative determinant, is negative.
    /// For a real conic with points this is the inside.
    pub fn is_interior(&self, z: &HPoint2<Rational>) -> bool {
        let v = self.form(z);
        if self.m.det().is_positive() {
            v.is_positive()
        } else {
            v.is_negative()
        }
    }
}

/// The conic through five points.
pub fn conic_fit<F: Field>(points: &[HPoint2<F>; 5]) -> Result<ConicMatrix<F>> {
    reject_char_two(points[0].tag())?;
    let rows: Vec<Vec<F>> = points
        .iter()
        .map(|p| {
            let [x, y, w] = p.coords().clone();
            vec![
                x.clone() * x.clone(),
                y.clone() * y.clone(),
                w.clone() * w.clone(),
                x.clone() * y.clone(),
                x * w.clone(),
                y * w,
            ]
        })
        .collect();
    let ns = nullspace(&rows);
    let [v] = ns.as_slice() else {
        return Err(GeometryError::DegeneratePointSet);
    };
    // Off-diagonal entries carry the whole mixed coefficient, so the matrix is twice the form.
    let two = |x: &F| x.int_like(2) * x.clone();
    let m = Matrix::from_rows([
        [two(&v[0]), v[3].clone(), v[4].clone()],
        [v[3].clone(), two(&v[1]), v[5].clone()],
        [v[4].clone(), v[5].clone(), two(&v[2])],
    ]);
    ConicMatrix::new(m).map_err(|_| GeometryError::DegeneratePointSet)
}

/// Tangent at vertex `i`: the harmonic conjugate of the diagonal through the
/// vertex with respect to the two sides through it.
pub fn vertex_tangent<F: Field>(quad: &Quadrangle<F>, i: usize) -> Result<HLine2<F>> {
    let v = quad.vertices();
    let at = &v[i % 4];
    let side = |j: usize| join2(at, &v[j % 4]).expect("distinct vertices");
    harmonic_fourth_lines(&side(i + 1), &side(i + 2), &side(i + 3))
}

/// Small-height parameters `t ≠ 0`: 1, -1, 2, -2, 1/2, -1/2, 3, ...
pub fn parameter_ladder<F: Field>(tag: FieldTag, count: usize) -> Vec<F> {
    let mut out: Vec<F> = Vec::new();
    let mut h = 1i64;
    while out.len() < count && h < 10_000 {
        for (num, den) in (1..=h).flat_map(|n| (1..=h).map(move |d| (n, d))) {
            if num.max(den) != h || num_integer::gcd(num, den) != 1 {
                continue;
            }
            for s in [num, -num] {
                if let Ok(t) = F::from_fraction(tag, s, den) {
                    if !t.is_zero() && !out.contains(&t) && out.len() < count {
                        out.push(t);
                    }
                }
            }
        }
        h += 1;
        if let FieldTag::Prime(p) = tag {
            if h > p as i64 {
                break;
            }
        }
    }
    out
}

/// The harmonic curve of a quadrangle `A, C, B, D`, with its tangents
/// `a, c, b, d` and the conic matrix it lies on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicCurve<F> {
    quad: Quadrangle<F>,
    tangents: [HLine2<F>; 4],
    conic: ConicMatrix<F>,
}

impl<F: Field> HarmonicCurve<F> {
    /// Vertices in dihedral order `A, C, B, D`.
    pub fn from_quadrangle(quad: Quadrangle<F>) -> Result<Self> {
        reject_char_two(quad.vertices()[0].tag())?;
        let tangents: Vec<HLine2<F>> = (0..4)
            .map(|i| vertex_tangent(&quad, i))
            .collect::<Result<_>>()?;
        let Ok(tangents) = <[HLine2<F>; 4]>::try_from(tangents) else {
            unreachable!("four vertices")
        };
        let conic = fit_conic(quad.vertices())?;
        Ok(HarmonicCurve {
            quad,
            tangents,
            conic,
        })
    }

    pub fn from_points(
        a: &HPoint2<F>,
        c: &HPoint2<F>,
        b: &HPoint2<F>,
        d: &HPoint2<F>,
    ) -> Result<Self> {
        Self::from_quadrangle(Quadrangle::new([
            a.clone(),
            c.clone(),
            b.clone(),
            d.clone(),
        ])?)
    }

    /// The curve through `A, B, C` tangent to `a` at `A` and `b` at `B`; its
    /// fourth vertex is `D = C·ρ_{Q,q}` with `Q = a∧b`, `q = A∨B`.
    pub fn from_tangent_data(
        a: &HPoint2<F>,
        ta: &HLine2<F>,
        b: &HPoint2<F>,
        tb: &HLine2<F>,
        c: &HPoint2<F>,
    ) -> Result<Self> {
        let (qq, q) = tangent_pole(a, ta, b, tb)?;
        if c.lies_on(&q) || c.lies_on(ta) || c.lies_on(tb) {
            return Err(GeometryError::DegenerateTangentData);
        }
        let d = harmonic_reflection(&qq, &q)?.apply(c);
        Self::from_points(a, c, b, &d)
    }

    /// The curve of a conic through three of its points, `D` as above.
    pub fn from_conic(
        conic: &ConicMatrix<F>,
        a: &HPoint2<F>,
        c: &HPoint2<F>,
        b: &HPoint2<F>,
    ) -> Result<Self> {
        if ![a, b, c].iter().all(|p| conic.contains(p)) {
            return Err(GeometryError::NotOnCurve);
        }
        Self::from_tangent_data(a, &conic.polar(a), b, &conic.polar(b), c)
    }

    pub fn tag(&self) -> FieldTag {
        self.quad.vertices()[0].tag()
    }

    pub fn quadrangle(&self) -> &Quadrangle<F> {
        &self.quad
    }

    /// `[A, C, B, D]`.
    pub fn vertices(&self) -> &[HPoint2<F>; 4] {
        self.quad.vertices()
    }

    /// `[a, c, b, d]`.
    pub fn tangents(&self) -> &[HLine2<F>; 4] {
        &self.tangents
    }

    pub fn conic(&self) -> &ConicMatrix<F> {
        &self.conic
    }

    /// `q = A∨B`.
    pub fn base_line(&self) -> HLine2<F> {
        let v = self.vertices();
        join2(&v[0], &v[2]).expect("distinct vertices")
    }

    /// `Q = a∧b`.
    pub fn base_pole(&self) -> HPoint2<F> {
        meet2(&self.tangents[0], &self.tangents[2]).expect("distinct tangents")
    }

    /// The point `A + t·B` of `q`.
    pub fn parameter_point(&self, t: &F) -> HPoint2<F> {
        let v = self.vertices();
        HPoint2::new(axpy(v[0].coords(), t, v[2].coords())).expect("A and B are distinct")
    }

    /// The parameter point `X = q ∧ (C∨Z)` that [`hc_point`](Self::hc_point) maps to `Z`.
    pub fn parameter_of(&self, z: &HPoint2<F>) -> Result<HPoint2<F>> {
        let v = self.vertices();
        if z == &v[1] {
            let center = meet2(&self.base_line(), &join2(&v[1], &v[3])?)?;
            return harmonic_fourth_canonical(&v[0], &center, &v[2]);
        }
        meet2(&self.base_line(), &join2(&v[1], z)?)
    }

    /// `Y = X·ρ_{A,B}`, `Z = (C∨X)∧(D∨Y)`.
    pub fn hc_point(&self, x: &HPoint2<F>) -> Result<HPoint2<F>> {
        if !x.lies_on(&self.base_line()) {
            return Err(GeometryError::ArgumentOffLine);
        }
        hc_point_of(self.vertices(), x)
    }

    /// The vertices followed by `hc_point` at `A + t·B` along the parameter ladder.
    pub fn sample(&self, count: usize) -> Vec<HPoint2<F>> {
        let mut out: Vec<HPoint2<F>> = self.vertices().to_vec();
        for t in parameter_ladder::<F>(self.tag(), count * 2) {
            if out.len() >= count {
                break;
            }
            let z = self
                .hc_point(&self.parameter_point(&t))
                .expect("parameter on q");
            if !out.contains(&z) {
                out.push(z);
            }
        }
        out.truncate(count);
        out
    }

    /// Whether the pencil `Z∨A, Z∨C, Z∨B, Z∨D` is harmonic; vertices are members.
    pub fn curve_membership(&self, z: &HPoint2<F>) -> bool {
        let v = self.vertices();
        if v.contains(z) {
            return true;
        }
        let l = |p: &HPoint2<F>| join2(z, p).expect("z is not a vertex");
        crate::harmonic::is_harmonic_pencil(&l(&v[0]), &l(&v[1]), &l(&v[2]), &l(&v[3]))
            .unwrap_or(false)
    }

    /// The line `z = c·ρ_{X,x}` of the tangent bundle through `Z`.
    pub fn tangent_at(&self, z: &HPoint2<F>) -> Result<HLine2<F>> {
        if let Some(i) = self.vertices().iter().position(|v| v == z) {
            return Ok(self.tangents[i].clone());
        }
        if !self.curve_membership(z) {
            return Err(GeometryError::NotOnCurve);
        }
        let (x, xl) = self.reflection_pair(&self.parameter_of(z)?)?;
        Ok(harmonic_reflection(&x, &xl)?.apply(&self.tangents[1]))
    }

    /// `(X, x)` with `x = (X·ρ_{A,B}) ∨ Q`, for `X ∈ q \ {A, B}`.
    pub fn reflection_pair(&self, x: &HPoint2<F>) -> Result<(HPoint2<F>, HLine2<F>)> {
        let v = self.vertices();
        if !x.lies_on(&self.base_line()) || x == &v[0] || x == &v[2] {
            return Err(GeometryError::ArgumentOffLine);
        }
        let y = harmonic_fourth_canonical(&v[0], x, &v[2])?;
        Ok((x.clone(), join2(&y, &self.base_pole())?))
    }

    pub fn polar_of_point(&self, p: &HPoint2<F>) -> HLine2<F> {
        self.conic.polar(p)
    }

    pub fn pole_of_line(&self, l: &HLine2<F>) -> HPoint2<F> {
        self.conic.pole(l)
    }

    /// Whether `ρ_{P,p}` maps a 20-point sample of the curve back onto it.
    pub fn polar_reflection_invariance(&self, p: &HPoint2<F>) -> Result<bool> {
        let polar = self.polar_of_point(p);
        if p.lies_on(&polar) {
            return Err(GeometryError::PoleOnCurve);
        }
        let rho = harmonic_reflection(p, &polar)?;
        Ok(self.sample(20).iter().all(|z| {
            let w = rho.apply(z);
            self.curve_membership(&w) && self.conic.contains(&w)
        }))
    }

    /// `X ↦ t ∧ x` from the curve to the tangent `t` at `T`, with `T ↦ T`.
    pub fn tangential_map(&self, t: &HPoint2<F>, x: &HPoint2<F>) -> Result<HPoint2<F>> {
        if !self.curve_membership(t) || !self.curve_membership(x) {
            return Err(GeometryError::NotOnCurve);
        }
        if t == x {
            return Ok(t.clone());
        }
        meet2(&self.tangent_at(t)?, &self.tangent_at(x)?)
    }

    /// Inverse of [`tangential_map`](Self::tangential_map): the polar of `X′`
    /// cuts the curve in `T` and the preimage.
    pub fn tangential_inverse(&self, t: &HPoint2<F>, xp: &HPoint2<F>) -> Result<HPoint2<F>> {
        if !self.curve_membership(t) {
            return Err(GeometryError::NotOnCurve);
        }
        if !xp.lies_on(&self.tangent_at(t)?) {
            return Err(GeometryError::ArgumentOffLine);
        }
        if xp == t {
            return Ok(t.clone());
        }
        let chord = self.polar_of_point(xp);
        let r = reference_points2::<F>(self.tag())
            .into_iter()
            .map(|p| p.dual())
            .find_map(|l| meet2(&chord, &l).ok().filter(|r| r != t))
            .expect("some reference line meets the chord away from T");
        Ok(self.conic.second_intersection(t, &r))
    }

    /// `η_q = ρ_{Q,q}` for the chord `q = A∨B` and its pole `Q`.
    pub fn hyperbolic_reflection(
        &self,
        a: &HPoint2<F>,
        b: &HPoint2<F>,
    ) -> Result<PlaneCollineation<F>> {
        if a == b {
            return Err(GeometryError::CoincidentPoints);
        }
        if !self.curve_membership(a) || !self.curve_membership(b) {
            return Err(GeometryError::NotOnCurve);
        }
        let q = join2(a, b)?;
        harmonic_reflection(&self.pole_of_line(&q), &q)
    }

    pub fn transformed(&self, g: &PlaneCollineation<F>) -> Result<Self> {
        Self::from_quadrangle(Quadrangle::new(
            self.vertices().clone().map(|v| g.apply(&v)),
        )?)
    }
}

impl HarmonicCurve<Rational> {
    pub fn is_interior(&self, z: &HPoint2<Rational>) -> bool {
        self.conic.is_interior(z)
    }
}

fn hc_point_of<F: Field>(v: &[HPoint2<F>; 4], x: &HPoint2<F>) -> Result<HPoint2<F>> {
    let [a, c, b, d] = v;
    let y = harmonic_fourth_canonical(a, x, b)?;
    meet2(&join2(c, x)?, &join2(d, &y)?)
}

/// Conic through the four vertices and one further curve point.
fn fit_conic<F: Field>(v: &[HPoint2<F>; 4]) -> Result<ConicMatrix<F>> {
    let (a, b) = (&v[0], &v[2]);
    for t in parameter_ladder::<F>(a.tag(), 16) {
        let x = HPoint2::new(axpy(a.coords(), &t, b.coords()))?;
        let z = hc_point_of(v, &x)?;
        if v.contains(&z) {
            continue;
        }
        if let Ok(m) = conic_fit(&[v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), z]) {
            return Ok(m);
        }
    }
    Err(GeometryError::DegeneratePointSet)
}

fn tangent_pole<F: Field>(
    a: &HPoint2<F>,
    ta: &HLine2<F>,
    b: &HPoint2<F>,
    tb: &HLine2<F>,
) -> Result<(HPoint2<F>, HLine2<F>)> {
    reject_char_two(a.tag())?;
    if a == b || ta == tb || !a.lies_on(ta) || !b.lies_on(tb) {
        return Err(GeometryError::DegenerateTangentData);
    }
    let qq = meet2(ta, tb)?;
    let q = join2(a, b)?;
    if qq.lies_on(&q) {
        return Err(GeometryError::DegenerateTangentData);
    }
    Ok((qq, q))
}

/// `C·ρ_{X,x}` with `x = (X·ρ_{A,B}) ∨ (a∧b)`, for `X ∈ A∨B` other than `A, B`.
pub fn a_construction_point<F: Field>(
    a: &HPoint2<F>,
    ta: &HLine2<F>,
    b: &HPoint2<F>,
    tb: &HLine2<F>,
    c: &HPoint2<F>,
    x: &HPoint2<F>,
) -> Result<HPoint2<F>> {
    let (qq, q) = tangent_pole(a, ta, b, tb)?;
    if !x.lies_on(&q) || x == a || x == b {
        return Err(GeometryError::ArgumentOffLine);
    }
    let y = harmonic_fourth_canonical(a, x, b)?;
    Ok(harmonic_reflection(x, &join2(&y, &qq)?)?.apply(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, Fp};
    use crate::harmonic::{harmonic_reflection, is_harmonic_set};
    use crate::projective::Collineation;

    const T: FieldTag = FieldTag::Rational;

    fn p(v: [i64; 3]) -> HPoint2<Rational> {
        HPoint2::from_ints(T, v).unwrap()
    }

    fn l(v: [i64; 3]) -> HLine2<Rational> {
        HLine2::from_ints(T, v).unwrap()
    }

    /// Square inscribed in the unit circle: A=(1,0), C=(0,1), B=(-1,0), D=(0,-1).
    fn circle() -> HarmonicCurve<Rational> {
        HarmonicCurve::from_points(&p([1, 0, 1]), &p([0, 1, 1]), &p([-1, 0, 1]), &p([0, -1, 1]))
            .unwrap()
    }

    fn unit_circle_form() -> ConicMatrix<Rational> {
        ConicMatrix::new(Matrix::diagonal([q(1, 1), q(1, 1), q(-1, 1)])).unwrap()
    }

    #[test]
    fn square_vertex_tangents() {
        let c = circle();
        assert_eq!(c.tangents()[0], l([1, 0, -1]));
        assert_eq!(c.tangents()[2], l([1, 0, 1]));
        assert_eq!(c.tangents()[1], l([0, 1, -1]));
        assert_eq!(c.conic(), &unit_circle_form());
    }

    #[test]
    fn tangent_is_fourth_of_its_cuts() {
        let c = circle();
        let t = c.tangents();
        for i in 0..4 {
            let cut = |j: usize| meet2(&t[i], &t[j % 4]).unwrap();
            let contact = harmonic_fourth_canonical(&cut(i + 1), &cut(i + 2), &cut(i + 3)).unwrap();
            assert_eq!(contact, c.vertices()[i]);
        }
    }

    #[test]
    fn hc_point_examples() {
        let c = circle();
        assert_eq!(c.hc_point(&p([2, 0, 1])).unwrap(), p([4, 3, 5]));
        assert_eq!(c.hc_point(&p([1, 0, 1])).unwrap(), p([1, 0, 1]));
        assert_eq!(c.hc_point(&p([0, 0, 1])).unwrap(), p([0, -1, 1]));
        assert_eq!(
            c.hc_point(&p([0, 1, 1])),
            Err(GeometryError::ArgumentOffLine)
        );
        for z in c.sample(24) {
            let x = c.parameter_of(&z).unwrap();
            assert_eq!(c.hc_point(&x).unwrap(), z);
            let [a, b, w] = z.coords().clone();
            assert_eq!(a.clone() * a + b.clone() * b, w.clone() * w);
        }
    }

    #[test]
    fn a_construction_examples() {
        let (a, b, cc) = (p([1, 0, 1]), p([-1, 0, 1]), p([0, 1, 1]));
        let (ta, tb) = (l([1, 0, -1]), l([1, 0, 1]));
        assert_eq!(
            a_construction_point(&a, &ta, &b, &tb, &cc, &p([2, 0, 1])).unwrap(),
            p([4, 3, 5])
        );
        assert_eq!(
            a_construction_point(&a, &ta, &b, &tb, &cc, &p([0, 0, 1])).unwrap(),
            p([0, -1, 1])
        );
        assert_eq!(
            a_construction_point(&a, &ta, &b, &tb, &cc, &a),
            Err(GeometryError::ArgumentOffLine)
        );
        assert_eq!(
            a_construction_point(&a, &ta, &b, &ta, &cc, &p([2, 0, 1])),
            Err(GeometryError::DegenerateTangentData)
        );
    }

    #[test]
    fn membership_examples() {
        let c = circle();
        assert!(c.curve_membership(&p([4, 3, 5])));
        assert!(!c.curve_membership(&p([0, 0, 1])));
        assert!(c.curve_membership(&p([1, 0, 1])));
        assert!(!c.curve_membership(&p([1, 1, 2])));
    }

    #[test]
    fn tangent_examples() {
        let c = circle();
        assert_eq!(c.tangent_at(&p([0, 1, 1])).unwrap(), l([0, 1, -1]));
        assert_eq!(c.tangent_at(&p([4, 3, 5])).unwrap(), l([4, 3, -5]));
        assert_eq!(c.tangent_at(&p([1, 0, 1])).unwrap(), c.tangents()[0]);
        assert_eq!(c.tangent_at(&p([0, 0, 1])), Err(GeometryError::NotOnCurve));
        for z in c.sample(16) {
            assert_eq!(c.tangent_at(&z).unwrap(), c.polar_of_point(&z));
        }
    }

    #[test]
    fn fit_examples() {
        let pts = [
            p([1, 0, 1]),
            p([-1, 0, 1]),
            p([0, 1, 1]),
            p([0, -1, 1]),
            p([4, 3, 5]),
        ];
        assert_eq!(conic_fit(&pts).unwrap(), unit_circle_form());
        let bad = [
            p([0, 0, 1]),
            p([1, 0, 1]),
            p([2, 0, 1]),
            p([3, 0, 1]),
            p([0, 1, 1]),
        ];
        assert_eq!(conic_fit(&bad), Err(GeometryError::DegeneratePointSet));
    }

    #[test]
    fn polarity_examples() {
        let c = circle();
        assert_eq!(c.polar_of_point(&p([2, 0, 1])), l([2, 0, -1]));
        let pa = p([1, 0, 1]);
        assert!(pa.lies_on(&c.polar_of_point(&pa)));
        for x in [p([2, 0, 1]), p([3, -1, 7]), p([1, 1, 0])] {
            assert_eq!(c.pole_of_line(&c.polar_of_point(&x)), x);
        }
        assert!(c.polar_reflection_invariance(&p([0, 0, 1])).unwrap());
        assert!(c.polar_reflection_invariance(&p([2, 0, 1])).unwrap());
        assert_eq!(
            c.polar_reflection_invariance(&pa),
            Err(GeometryError::PoleOnCurve)
        );
        let rho = harmonic_reflection(&p([2, 0, 1]), &l([2, 0, -1])).unwrap();
        assert!(c.conic().invariant_under(&rho));
    }

    #[test]
    fn tangential_map_examples() {
        let c = circle();
        let t = p([0, 1, 1]);
        assert_eq!(c.tangential_map(&t, &p([1, 0, 1])).unwrap(), p([1, 1, 1]));
        assert_eq!(c.tangential_map(&t, &t).unwrap(), t);
        let images: Vec<_> = c
            .vertices()
            .iter()
            .map(|v| c.tangential_map(&t, v).unwrap())
            .collect();
        assert!(is_harmonic_set(&images[0], &images[1], &images[2], &images[3]).unwrap());
        for z in c.sample(12) {
            let zp = c.tangential_map(&t, &z).unwrap();
            assert_eq!(c.tangential_inverse(&t, &zp).unwrap(), z);
        }
    }

    #[test]
    fn hyperbolic_reflection_example() {
        let c = circle();
        let eta = c
            .hyperbolic_reflection(&p([1, 0, 1]), &p([-1, 0, 1]))
            .unwrap();
        let want = Collineation::new(Matrix::diagonal([q(1, 1), q(-1, 1), q(1, 1)])).unwrap();
        assert_eq!(eta, want);
        assert!(eta.is_involution());
        assert_eq!(
            c.hyperbolic_reflection(&p([1, 0, 1]), &p([1, 0, 1])),
            Err(GeometryError::CoincidentPoints)
        );
    }

    #[test]
    fn interior() {
        let c = circle();
        assert!(c.is_interior(&p([0, 0, 1])));
        assert!(c.is_interior(&p([1, 1, 2])));
        assert!(!c.is_interior(&p([2, 0, 1])));
        let flipped = ConicMatrix::new(Matrix::diagonal([q(-1, 1), q(-1, 1), q(1, 1)])).unwrap();
        assert!(flipped.is_interior(&p([0, 0, 1])));
    }

    #[test]
    fn tangent_data_and_conic_reconstruction() {
        let c = circle();
        let again = HarmonicCurve::from_tangent_data(
            &p([1, 0, 1]),
            &l([1, 0, -1]),
            &p([-1, 0, 1]),
            &l([1, 0, 1]),
            &p([0, 1, 1]),
        )
        .unwrap();
        assert_eq!(again, c);
        // Parabola y w = x², through A=(0,0), C=(1,1), B=(-2,4).
        let parabola = ConicMatrix::new(Matrix::from_rows([
            [q(2, 1), q(0, 1), q(0, 1)],
            [q(0, 1), q(0, 1), q(-1, 1)],
            [q(0, 1), q(-1, 1), q(0, 1)],
        ]))
        .unwrap();
        let curve =
            HarmonicCurve::from_conic(&parabola, &p([0, 0, 1]), &p([1, 1, 1]), &p([-2, 4, 1]))
                .unwrap();
        assert_eq!(curve.conic(), &parabola);
        for z in curve.sample(20) {
            assert!(parabola.contains(&z));
        }
        for x in [-3, 5, 7] {
            assert!(curve.curve_membership(&p([x, x * x, 1])));
        }
    }

    #[test]
    fn prime_field_curve() {
        let t = FieldTag::Prime(7);
        let pt = |v| HPoint2::<Fp>::from_ints(t, v).unwrap();
        let c = HarmonicCurve::from_points(
            &pt([1, 0, 1]),
            &pt([0, 1, 1]),
            &pt([-1, 0, 1]),
            &pt([0, -1, 1]),
        )
        .unwrap();
        for z in c.sample(8) {
            assert!(c.curve_membership(&z));
            assert!(c.conic().contains(&z));
        }
    }
}
