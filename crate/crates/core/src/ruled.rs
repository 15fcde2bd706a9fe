//! Transversal rulings, doubly ruled surfaces and their polarity, plane
//! sections, and the Pappus/Pascal verifiers built on them.

use std::array;

use crate::curve::{parameter_ladder, HarmonicCurve};
use crate::error::{GeometryError, Result};
use crate::field::{Field, FieldTag};
use crate::harmonic::{harmonic_fourth3, is_harmonic_pencil, reject_char_two};
use crate::linalg::{axpy, det, nullspace, Matrix};
use crate::projective::{
    collinear, join2, join3_points, join_line_point, join_lines3, meet2, meet_line_plane,
    meet_lines3, reference_points3, HLine2, HPlane3, HPoint2, HPoint3, PlaneChart, PluckerLine,
    SpaceCollineation,
};

/// The unique line through `X` meeting the skew lines `a` and `b`: `(X∨a)∧(X∨b)`.
pub fn transversal_through_point<F: Field>(
    x: &HPoint3<F>,
    a: &PluckerLine<F>,
    b: &PluckerLine<F>,
) -> Result<PluckerLine<F>> {
    if a.meets(b) {
        return Err(GeometryError::CoplanarGenerators);
    }
    if a.contains(x) || b.contains(x) {
        return Err(GeometryError::PointOnGenerator);
    }
    PluckerLine::meet_planes(&join_line_point(a, x)?, &join_line_point(b, x)?)
}

fn others(i: usize) -> (usize, usize) {
    ((i + 1) % 3, (i + 2) % 3)
}

/// The lines transversal to three pairwise skew generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ruling<F> {
    generators: [PluckerLine<F>; 3],
}

impl<F: Field> Ruling<F> {
    pub fn new(generators: [PluckerLine<F>; 3]) -> Result<Self> {
        let [a, b, c] = &generators;
        if a.meets(b) || a.meets(c) || b.meets(c) {
            return Err(GeometryError::CoplanarGenerators);
        }
        Ok(Ruling { generators })
    }

    pub fn generators(&self) -> &[PluckerLine<F>; 3] {
        &self.generators
    }

    pub fn tag(&self) -> FieldTag {
        self.generators[0].tag()
    }

    /// Meets all three generators.
    pub fn is_rule(&self, l: &PluckerLine<F>) -> bool {
        self.generators.iter().all(|g| g.meets(l))
    }

    /// The unique rule through a point of one of the generators.
    pub fn rule_through_point(&self, p: &HPoint3<F>) -> Result<PluckerLine<F>> {
        let i = self
            .generators
            .iter()
            .position(|g| g.contains(p))
            .ok_or(GeometryError::PointNotOnGenerator)?;
        let (j, k) = others(i);
        transversal_through_point(p, &self.generators[j], &self.generators[k])
    }

    /// `(b∧α)∨(c∧α)` for a plane `α` through the generator `a`.
    pub fn rule_from_plane(&self, alpha: &HPlane3<F>) -> Result<PluckerLine<F>> {
        let i = self
            .generators
            .iter()
            .position(|g| g.lies_in(alpha))
            .ok_or(GeometryError::PlaneNotThroughGenerator)?;
        let (j, k) = others(i);
        let pj = meet_line_plane(&self.generators[j], alpha)?;
        let pk = meet_line_plane(&self.generators[k], alpha)?;
        join3_points(&pj, &pk)
    }

    /// The rule through the point at parameter `t` of the first generator.
    pub fn rule_at(&self, t: &F) -> PluckerLine<F> {
        self.rule_through_point(&self.generators[0].point_at(t))
            .expect("points of a generator lie off the other two")
    }

    /// Rules through the first generator at parameters `0` and then the ladder.
    pub fn sample_rules(&self, count: usize) -> Vec<PluckerLine<F>> {
        let zero = self.generators[0].coords()[0].zero_like();
        let mut params = vec![zero];
        params.extend(parameter_ladder::<F>(self.tag(), count));
        params.truncate(count);
        params.iter().map(|t| self.rule_at(t)).collect()
    }
}

/// A symmetric 4×4 form, canonical up to scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadricMatrix<F> {
    m: Matrix<F, 4>,
}

impl<F: Field> QuadricMatrix<F> {
    pub fn new(m: Matrix<F, 4>) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(GeometryError::DimensionMismatch);
        }
        let mut flat = m.flatten();
        if !F::canonicalize(&mut flat) {
            return Err(GeometryError::ZeroVector);
        }
        Ok(QuadricMatrix {
            m: Matrix::from_flat(&flat).expect("sixteen entries"),
        })
    }

    pub fn matrix(&self) -> &Matrix<F, 4> {
        &self.m
    }

    pub fn rank(&self) -> usize {
        self.m.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == 4
    }

    pub fn form(&self, p: &HPoint3<F>) -> F {
        self.m.bilinear(p.coords(), p.coords())
    }

    pub fn contains(&self, p: &HPoint3<F>) -> bool {
        self.form(p).is_zero()
    }

    /// `M·P`; fails at singular points of a degenerate quadric.
    pub fn polar(&self, p: &HPoint3<F>) -> Result<HPlane3<F>> {
        HPlane3::new(self.m.mul_vec(p.coords()))
    }

    pub fn pole(&self, plane: &HPlane3<F>) -> Result<HPoint3<F>> {
        HPoint3::new(self.m.adjugate().mul_vec(plane.coords()))
    }

    /// Whether the plane contains its own pole.
    pub fn is_tangent_plane(&self, plane: &HPlane3<F>) -> bool {
        self.m
            .adjugate()
            .bilinear(plane.coords(), plane.coords())
            .is_zero()
    }

    /// Whether `TᵀMT` is proportional to `M`.
    pub fn invariant_under(&self, g: &SpaceCollineation<F>) -> bool {
        let t = g.matrix();
        t.transpose().mul(&self.m).mul(t).proportional_to(&self.m)
    }

    /// The conic cut on a plane, in the chart's coordinates.
    pub fn restrict(&self, chart: &PlaneChart<F>) -> Matrix<F, 3> {
        let e: [HPoint3<F>; 3] = array::from_fn(|i| {
            let mut v = [0i64; 3];
            v[i] = 1;
            chart.embed(&HPoint2::from_ints(chart.plane().tag(), v).expect("unit vector"))
        });
        Matrix::from_rows(array::from_fn(|i| {
            array::from_fn(|j| self.m.bilinear(e[i].coords(), e[j].coords()))
        }))
    }
}

/// The quadric through nine points.
pub fn quadric_fit<F: Field>(points: &[HPoint3<F>; 9]) -> Result<QuadricMatrix<F>> {
    reject_char_two(points[0].tag())?;
    const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let rows: Vec<Vec<F>> = points
        .iter()
        .map(|p| {
            let x = p.coords();
            let mut row: Vec<F> = (0..4).map(|i| x[i].clone() * x[i].clone()).collect();
            row.extend(PAIRS.iter().map(|&(i, j)| x[i].clone() * x[j].clone()));
            row
        })
        .collect();
    let ns = nullspace(&rows);
    let [v] = ns.as_slice() else {
        return Err(GeometryError::DegeneratePointSet);
    };
    // Twice the form, so mixed coefficients need no halving.
    let zero = v[0].zero_like();
    let mut m: [[F; 4]; 4] = array::from_fn(|_| array::from_fn(|_| zero.clone()));
    for i in 0..4 {
        m[i][i] = v[i].int_like(2) * v[i].clone();
    }
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        m[i][j] = v[4 + k].clone();
        m[j][i] = v[4 + k].clone();
    }
    QuadricMatrix::new(Matrix::from_rows(m))
}

/// Six lines in two colors, where lines meet exactly when their colors differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DandelinConfiguration<F> {
    red: [PluckerLine<F>; 3],
    blue: [PluckerLine<F>; 3],
}

impl<F: Field> DandelinConfiguration<F> {
    pub fn new(red: [PluckerLine<F>; 3], blue: [PluckerLine<F>; 3]) -> Result<Self> {
        let cfg = DandelinConfiguration { red, blue };
        if cfg.is_valid() {
            Ok(cfg)
        } else {
            Err(GeometryError::DegenerateConfiguration)
        }
    }

    /// Skips validation; used to inject faults into checks.
    pub fn unchecked(red: [PluckerLine<F>; 3], blue: [PluckerLine<F>; 3]) -> Self {
        DandelinConfiguration { red, blue }
    }

    pub fn is_valid(&self) -> bool {
        let skew = |l: &[PluckerLine<F>; 3]| (0..3).all(|i| l[i].is_skew_to(&l[(i + 1) % 3]));
        skew(&self.red)
            && skew(&self.blue)
            && self
                .red
                .iter()
                .all(|r| self.blue.iter().all(|b| r.meets(b)))
    }

    pub fn red(&self) -> &[PluckerLine<F>; 3] {
        &self.red
    }

    pub fn blue(&self) -> &[PluckerLine<F>; 3] {
        &self.blue
    }

    /// `red_i ∧ blue_j`.
    pub fn basic_points(&self) -> Result<[[HPoint3<F>; 3]; 3]> {
        let mut out = Vec::with_capacity(9);
        for r in &self.red {
            for b in &self.blue {
                out.push(meet_lines3(r, b)?);
            }
        }
        Ok(array::from_fn(|i| {
            array::from_fn(|j| out[3 * i + j].clone())
        }))
    }

    /// `red_i ∨ blue_j`.
    pub fn tangent_planes(&self) -> Result<[[HPlane3<F>; 3]; 3]> {
        let mut out = Vec::with_capacity(9);
        for r in &self.red {
            for b in &self.blue {
                out.push(join_lines3(r, b)?);
            }
        }
        Ok(array::from_fn(|i| {
            array::from_fn(|j| out[3 * i + j].clone())
        }))
    }

    /// `red_i ∧ blue_i`.
    pub fn contact(&self, i: usize) -> Result<HPoint3<F>> {
        meet_lines3(&self.red[i], &self.blue[i]).map_err(|_| GeometryError::DegenerateConfiguration)
    }

    /// The four basic points of the plane `red_i ∨ blue_i` off its two
    /// lines' contact, in dihedral order: diagonals are `red_i` and `blue_i`.
    pub fn alpha_quadrangle(&self, i: usize) -> Result<[HPoint3<F>; 4]> {
        let (j, k) = others(i);
        let m = |r: usize, b: usize| meet_lines3(&self.red[r], &self.blue[b]);
        Ok([m(i, j)?, m(j, i)?, m(i, k)?, m(k, i)?])
    }
}

/// Whether `red_i, A∨P, blue_i, α∧π` is a harmonic pencil about `A = red_i ∧ blue_i`
/// in the plane `α = red_i ∨ blue_i`, for `i = 0, 1, 2`.
pub fn harmonic_pencil_at_contact<F: Field>(
    cfg: &DandelinConfiguration<F>,
    p: &HPoint3<F>,
    pi: &HPlane3<F>,
) -> Result<bool> {
    for i in 0..3 {
        if !harmonic_pencil_at(cfg, i, p, pi)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn harmonic_pencil_at<F: Field>(
    cfg: &DandelinConfiguration<F>,
    i: usize,
    p: &HPoint3<F>,
    pi: &HPlane3<F>,
) -> Result<bool> {
    let degenerate = |_| GeometryError::DegenerateConfiguration;
    let (r, b) = (&cfg.red[i], &cfg.blue[i]);
    let a = cfg.contact(i)?;
    let alpha = join_lines3(r, b).map_err(degenerate)?;
    if !alpha.contains(p) {
        return Ok(false);
    }
    let ap = join3_points(&a, p).map_err(degenerate)?;
    let cut = PluckerLine::meet_planes(&alpha, pi).map_err(degenerate)?;
    let chart = PlaneChart::new(&alpha);
    let flat = |l: &PluckerLine<F>| chart.project_line(l).map_err(degenerate);
    match is_harmonic_pencil(&flat(r)?, &flat(&ap)?, &flat(b)?, &flat(&cut)?) {
        Err(GeometryError::NotConcurrent) => Ok(false),
        other => other,
    }
}

/// A doubly ruled surface: three red generators, three blue rules of their
/// transversal ruling, and the quadric they lie on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuledSurface<F> {
    red: Ruling<F>,
    blue: Ruling<F>,
    quadric: QuadricMatrix<F>,
}

/// A point off a ruled surface with its polar plane and the configuration defining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarPair<F> {
    pub point: HPoint3<F>,
    pub plane: HPlane3<F>,
    pub configuration: DandelinConfiguration<F>,
}

impl<F: Field> RuledSurface<F> {
    /// The surface of the transversal ruling to three skew lines.
    pub fn from_generators(red: [PluckerLine<F>; 3]) -> Result<Self> {
        let red = Ruling::new(red)?;
        let blue: Vec<PluckerLine<F>> = red.sample_rules(3);
        let Ok(blue) = <[PluckerLine<F>; 3]>::try_from(blue) else {
            return Err(GeometryError::DegenerateConfiguration);
        };
        Self::from_lines(red.generators.clone(), blue)
    }

    pub fn from_lines(red: [PluckerLine<F>; 3], blue: [PluckerLine<F>; 3]) -> Result<Self> {
        reject_char_two(red[0].tag())?;
        let cfg = DandelinConfiguration::new(red, blue)?;
        let red = Ruling::new(cfg.red)?;
        let blue = Ruling::new(cfg.blue)?;
        let one = red.generators[0].coords()[0].one_like();
        let params = [one.zero_like(), one.clone(), -one];
        let pts: Vec<HPoint3<F>> = red
            .generators
            .iter()
            .flat_map(|g| params.iter().map(|t| g.point_at(t)))
            .collect();
        let Ok(pts) = <[HPoint3<F>; 9]>::try_from(pts) else {
            unreachable!("three points on three lines")
        };
        let quadric = quadric_fit(&pts).map_err(|_| GeometryError::DegenerateConfiguration)?;
        if !quadric.is_nondegenerate() {
            return Err(GeometryError::DegenerateConfiguration);
        }
        Ok(RuledSurface { red, blue, quadric })
    }

    pub fn tag(&self) -> FieldTag {
        self.red.tag()
    }

    /// The ruling spanned by the red generators; its rules are blue.
    pub fn red(&self) -> &Ruling<F> {
        &self.red
    }

    pub fn blue(&self) -> &Ruling<F> {
        &self.blue
    }

    pub fn quadric(&self) -> &QuadricMatrix<F> {
        &self.quadric
    }

    /// Blue rules: the transversal ruling of the red generators.
    pub fn blue_rules(&self, count: usize) -> Vec<PluckerLine<F>> {
        self.red.sample_rules(count)
    }

    /// Red rules: the transversal ruling of the blue lines.
    pub fn red_rules(&self, count: usize) -> Vec<PluckerLine<F>> {
        self.blue.sample_rules(count)
    }

    fn rule_through(gens: &[PluckerLine<F>; 3], p: &HPoint3<F>) -> Option<PluckerLine<F>> {
        let free: Vec<&PluckerLine<F>> = gens.iter().filter(|g| !g.contains(p)).collect();
        let t = transversal_through_point(p, free[0], free[1]).ok()?;
        gens.iter().all(|g| g.meets(&t)).then_some(t)
    }

    /// The blue rule through a surface point.
    pub fn blue_rule_through(&self, p: &HPoint3<F>) -> Result<PluckerLine<F>> {
        Self::rule_through(&self.red.generators, p).ok_or(GeometryError::PointNotOnSurface)
    }

    /// The red rule through a surface point.
    pub fn red_rule_through(&self, p: &HPoint3<F>) -> Result<PluckerLine<F>> {
        Self::rule_through(&self.blue.generators, p).ok_or(GeometryError::PointNotOnSurface)
    }

    /// Incidence test: some blue rule passes through the point.
    pub fn contains(&self, p: &HPoint3<F>) -> bool {
        self.blue_rule_through(p).is_ok()
    }

    /// The plane of the two rules through a surface point.
    pub fn tangent_plane_at(&self, z: &HPoint3<F>) -> Result<HPlane3<F>> {
        let red = self.red_rule_through(z)?;
        let blue = self.blue_rule_through(z)?;
        join_lines3(&red, &blue)
    }

    /// Blue rules `a′` with `P ∈ a∨a′`, one for each red generator.
    pub fn dandelin_from_point(&self, p: &HPoint3<F>) -> Result<DandelinConfiguration<F>> {
        if self.contains(p) {
            return Err(GeometryError::PointOnSurface);
        }
        let blue: Vec<PluckerLine<F>> = self
            .red
            .generators
            .iter()
            .map(|g| self.red.rule_from_plane(&join_line_point(g, p)?))
            .collect::<Result<_>>()?;
        let Ok(blue) = <[PluckerLine<F>; 3]>::try_from(blue) else {
            unreachable!("three generators")
        };
        DandelinConfiguration::new(self.red.generators.clone(), blue)
    }

    /// `π = A∨B∨C` with `A = a∧a′` etc., for the configuration of `P`.
    pub fn polar_pair(&self, p: &HPoint3<F>) -> Result<PolarPair<F>> {
        let configuration = self.dandelin_from_point(p)?;
        let c: Vec<HPoint3<F>> = (0..3)
            .map(|i| configuration.contact(i))
            .collect::<Result<_>>()?;
        let plane = HPlane3::through_points(&c[0], &c[1], &c[2])?;
        Ok(PolarPair {
            point: p.clone(),
            plane,
            configuration,
        })
    }

    pub fn polar_plane(&self, p: &HPoint3<F>) -> Result<HPlane3<F>> {
        self.polar_pair(p).map(|pp| pp.plane)
    }

    /// Meet of the tangent planes at the points where the red generators cross `π`.
    pub fn pole_of_plane(&self, pi: &HPlane3<F>) -> Result<HPoint3<F>> {
        if self.quadric.is_tangent_plane(pi) {
            return Err(GeometryError::TangentPlane);
        }
        let planes: Vec<HPlane3<F>> = self
            .red
            .generators
            .iter()
            .map(|g| {
                let a = meet_line_plane(g, pi).map_err(|_| GeometryError::TangentPlane)?;
                self.tangent_plane_at(&a)
            })
            .collect::<Result<_>>()?;
        HPoint3::meet_planes(&planes[0], &planes[1], &planes[2])
            .map_err(|_| GeometryError::TangentPlane)
    }

    /// The section by a non-tangent plane, as a harmonic curve in the plane's chart.
    pub fn section(&self, pi: &HPlane3<F>) -> Result<Section<F>> {
        if self.quadric.is_tangent_plane(pi) {
            return Err(GeometryError::TangentPlane);
        }
        let chart = PlaneChart::new(pi);
        let mut pts = Vec::new();
        let mut tangents = Vec::new();
        for g in &self.red.generators {
            let a = meet_line_plane(g, pi).map_err(|_| GeometryError::TangentPlane)?;
            let t = PluckerLine::meet_planes(&self.tangent_plane_at(&a)?, pi)?;
            pts.push(chart.project(&a)?);
            tangents.push(chart.project_line(&t)?);
        }
        let curve = HarmonicCurve::from_tangent_data(
            &pts[0],
            &tangents[0],
            &pts[1],
            &tangents[1],
            &pts[2],
        )?;
        Ok(Section { chart, curve })
    }

    /// The image of the surface under a collineation.
    pub fn transformed(&self, g: &SpaceCollineation<F>) -> Result<Self> {
        use crate::projective::Transform;
        Self::from_lines(
            self.red.generators.clone().map(|l| g.apply(&l)),
            self.blue.generators.clone().map(|l| g.apply(&l)),
        )
    }
}

/// A plane section of a ruled surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section<F> {
    pub chart: PlaneChart<F>,
    pub curve: HarmonicCurve<F>,
}

impl<F: Field> Section<F> {
    /// Where sampled rules of the surface cross the plane, in chart coordinates.
    pub fn points(&self, surface: &RuledSurface<F>, count: usize) -> Vec<HPoint2<F>> {
        surface
            .blue_rules(count)
            .iter()
            .filter_map(|r| meet_line_plane(r, self.chart.plane()).ok())
            .filter_map(|x| self.chart.project(&x).ok())
            .collect()
    }
}

/// Whether `a′, b′, c′` extend `R`: they meet its generators, and sampled
/// rules of `R(a′, b′, c′)` meet sampled rules of `R`.
pub fn equipal_check<F: Field>(
    ruling: &Ruling<F>,
    rules: &[PluckerLine<F>; 3],
    n_samples: usize,
) -> Result<bool> {
    let opposite = Ruling::new(rules.clone()).map_err(|_| GeometryError::NotRulesOfR)?;
    if !rules.iter().all(|r| ruling.is_rule(r)) {
        return Ok(false);
    }
    if n_samples == 0 {
        return Ok(true);
    }
    let ours = ruling.sample_rules(n_samples);
    let theirs = opposite.sample_rules(n_samples);
    Ok(theirs.iter().all(|t| ours.iter().all(|o| t.meets(o))))
}

/// A ruled surface with a given harmonic curve as its section by the chart's plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift<F> {
    pub surface: RuledSurface<F>,
    /// The pole of the section plane.
    pub pole: HPoint3<F>,
}

/// Builds a surface over the curve: with `Q = a∧b`, points `P`, `S` off the
/// plane collinear with `Q`, and `S′ = S·ρ_{P,Q}`, the red lines are `S∨A`,
/// `S′∨B` and the blue lines `S∨B`, `S′∨A`, completed by the transversals
/// through `C`. `P` and `S` are taken from a fixed ladder.
pub fn lift_curve_to_surface<F: Field>(
    curve: &HarmonicCurve<F>,
    chart: &PlaneChart<F>,
) -> Result<Lift<F>> {
    let [a, c, b, _] = curve.vertices().clone().map(|v| chart.embed(&v));
    let q = chart.embed(&curve.base_pole());
    let plane = chart.plane();
    let one = q.coords()[0].one_like();
    for p in reference_points3::<F>(curve.tag())
        .into_iter()
        .filter(|p| !plane.contains(p))
    {
        for k in parameter_ladder::<F>(curve.tag(), 4) {
            let Ok(s) = HPoint3::new(axpy(p.coords(), &(k * one.clone()), q.coords())) else {
                continue;
            };
            let Ok(lift) = lift_with(&a, &b, &c, &p, &s, &q) else {
                continue;
            };
            return Ok(lift);
        }
    }
    Err(GeometryError::DegenerateLiftChoice)
}

fn lift_with<F: Field>(
    a: &HPoint3<F>,
    b: &HPoint3<F>,
    c: &HPoint3<F>,
    p: &HPoint3<F>,
    s: &HPoint3<F>,
    q: &HPoint3<F>,
) -> Result<Lift<F>> {
    let s2 = harmonic_fourth3(p, s, q)?;
    let red = [join3_points(s, a)?, join3_points(&s2, b)?];
    let blue = [join3_points(s, b)?, join3_points(&s2, a)?];
    let red3 = transversal_through_point(c, &blue[0], &blue[1])?;
    let blue3 = transversal_through_point(c, &red[0], &red[1])?;
    let [r0, r1] = red;
    let [b0, b1] = blue;
    let surface = RuledSurface::from_lines([r0, r1, red3], [b0, b1, blue3])?;
    Ok(Lift {
        surface,
        pole: p.clone(),
    })
}

/// The three Pappus/Pascal points together with their collinearity verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HexagonPoints<F> {
    pub points: [HPoint2<F>; 3],
    pub collinear: bool,
}

fn hexagon_meet<F: Field>(
    p: &HPoint2<F>,
    q: &HPoint2<F>,
    r: &HPoint2<F>,
    s: &HPoint2<F>,
) -> Result<HPoint2<F>> {
    let degenerate = |_| GeometryError::DegenerateHexagon;
    meet2(
        &join2(p, q).map_err(degenerate)?,
        &join2(r, s).map_err(degenerate)?,
    )
    .map_err(degenerate)
}

/// `P_i = (A_j∨B_k) ∧ (A_k∨B_j)` for `{i, j, k} = {1, 2, 3}`.
pub fn pappus_points<F: Field>(
    b: &[HPoint2<F>; 3],
    a: &[HPoint2<F>; 3],
) -> Result<HexagonPoints<F>> {
    let pts: Vec<HPoint2<F>> = (0..3)
        .map(|i| {
            let (j, k) = others(i);
            hexagon_meet(&a[j], &b[k], &a[k], &b[j])
        })
        .collect::<Result<_>>()?;
    let collinear = collinear(&pts[0], &pts[1], &pts[2]);
    Ok(HexagonPoints {
        points: [pts[0].clone(), pts[1].clone(), pts[2].clone()],
        collinear,
    })
}

/// Pappus points of `B_1, B_2, B_3` on `a0` and `A_1, A_2, A_3` on `b0`.
pub fn pappus_check<F: Field>(
    a0: &HLine2<F>,
    b0: &HLine2<F>,
    b: &[HPoint2<F>; 3],
    a: &[HPoint2<F>; 3],
) -> Result<HexagonPoints<F>> {
    let o = meet2(a0, b0).map_err(|_| GeometryError::DegenerateHexagon)?;
    let valid = |pts: &[HPoint2<F>; 3], l: &HLine2<F>| {
        pts.iter().all(|p| p.lies_on(l) && *p != o)
            && pts[0] != pts[1]
            && pts[1] != pts[2]
            && pts[0] != pts[2]
    };
    if !valid(b, a0) || !valid(a, b0) {
        return Err(GeometryError::DegenerateHexagon);
    }
    pappus_points(b, a)
}

/// Meets of opposite sides of the hexagon `Z0 … Z5` inscribed in the curve.
pub fn pascal_check<F: Field>(
    curve: &HarmonicCurve<F>,
    z: &[HPoint2<F>; 6],
) -> Result<HexagonPoints<F>> {
    for i in 0..6 {
        if (i + 1..6).any(|j| z[i] == z[j]) {
            return Err(GeometryError::DegenerateHexagon);
        }
    }
    if !z.iter().all(|p| curve.curve_membership(p)) {
        return Err(GeometryError::NotOnCurve);
    }
    let pts: Vec<HPoint2<F>> = (0..3)
        .map(|i| hexagon_meet(&z[i], &z[i + 1], &z[i + 3], &z[(i + 4) % 6]))
        .collect::<Result<_>>()?;
    let collinear = collinear(&pts[0], &pts[1], &pts[2]);
    Ok(HexagonPoints {
        points: [pts[0].clone(), pts[1].clone(), pts[2].clone()],
        collinear,
    })
}

/// Eight lines `a_0..a_3`, `b_0..b_3` over a planar Pappus hexagon: `a_0, b_0`
/// span the plane, `a_i` passes through `A_i` and `b_j` through `B_j`, and
/// `a_i` meets `b_j` whenever `i ≠ 3 ≠ j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PappusWitness<F> {
    pub chart: PlaneChart<F>,
    pub a: [PluckerLine<F>; 4],
    pub b: [PluckerLine<F>; 4],
    /// `B_1, B_2, B_3` and `A_1, A_2, A_3` in chart coordinates.
    pub b_points: [HPoint2<F>; 3],
    pub a_points: [HPoint2<F>; 3],
}

/// Builds the witness: `a_1, a_2` through `A_1, A_2` off the plane,
/// `b_j` the rules of `R(a_0, a_1, a_2)` through `B_j`, and `a_3` the rule of
/// `R(b_0, b_1, b_2)` through `A_3`.
pub fn pappus_witness<F: Field>(
    chart: &PlaneChart<F>,
    a0: &HLine2<F>,
    b0: &HLine2<F>,
    b: &[HPoint2<F>; 3],
    a: &[HPoint2<F>; 3],
) -> Result<PappusWitness<F>> {
    pappus_check(a0, b0, b, a)?;
    let degenerate = |_| GeometryError::DegenerateConfiguration;
    let a3d = a.clone().map(|p| chart.embed(&p));
    let b3d = b.clone().map(|p| chart.embed(&p));
    let (la0, lb0) = (chart.embed_line(a0), chart.embed_line(b0));
    let off: Vec<HPoint3<F>> = reference_points3::<F>(a0.tag())
        .into_iter()
        .filter(|p| !chart.plane().contains(p))
        .collect();
    for x1 in &off {
        for x2 in &off {
            let (Ok(a1), Ok(a2)) = (join3_points(&a3d[0], x1), join3_points(&a3d[1], x2)) else {
                continue;
            };
            if a1.meets(&a2) {
                continue;
            }
            let bl: Vec<PluckerLine<F>> = b3d
                .iter()
                .map(|p| transversal_through_point(p, &a1, &a2))
                .collect::<Result<_>>()
                .map_err(degenerate)?;
            let a3 = transversal_through_point(&a3d[2], &bl[0], &bl[1]).map_err(degenerate)?;
            return Ok(PappusWitness {
                chart: chart.clone(),
                a: [la0, a1, a2, a3],
                b: [lb0, bl[0].clone(), bl[1].clone(), bl[2].clone()],
                b_points: b.clone(),
                a_points: a.clone(),
            });
        }
    }
    Err(GeometryError::DegenerateConfiguration)
}

impl<F: Field> PappusWitness<F> {
    /// The witness with `b_3` replaced by the line through `B` (in chart
    /// coordinates) meeting `a_1` and `a_2`.
    pub fn with_b3_through(&self, b3: &HPoint2<F>) -> Result<Self> {
        let mut w = self.clone();
        w.b[3] = transversal_through_point(&self.chart.embed(b3), &self.a[1], &self.a[2])?;
        w.b_points[2] = b3.clone();
        Ok(w)
    }

    pub fn pappus_points(&self) -> Result<HexagonPoints<F>> {
        pappus_points(&self.b_points, &self.a_points)
    }

    /// `((a_1∧b_1) ∨ (a_2∧b_2) ∨ (a_3∧b_3)) ∧ π`, when `a_3` meets `b_3`.
    pub fn pappus_line(&self) -> Result<HLine2<F>> {
        let degenerate = |_| GeometryError::DegenerateConfiguration;
        let v: Vec<HPoint3<F>> = (1..4)
            .map(|i| meet_lines3(&self.a[i], &self.b[i]))
            .collect::<Result<_>>()
            .map_err(degenerate)?;
        let delta = HPlane3::through_points(&v[0], &v[1], &v[2]).map_err(degenerate)?;
        let l = PluckerLine::meet_planes(&delta, self.chart.plane()).map_err(degenerate)?;
        self.chart.project_line(&l)
    }

    /// `W = ℓ1 ∧ ℓ2` with `ℓ1 = P_1 ∨ (a_2∧b_2)`, `ℓ2 = P_2 ∨ (a_1∧b_1)`, and its
    /// two expressions as a meet of three planes; true when all agree and `W`
    /// lies on `a_3` and `b_3`.
    pub fn w_point_check(&self) -> Result<bool> {
        let degenerate = |_| GeometryError::DegenerateConfiguration;
        let pp = self.pappus_points()?;
        if !pp.collinear {
            return Ok(false);
        }
        let p = pp.points.clone().map(|x| self.chart.embed(&x));
        let v1 = meet_lines3(&self.a[1], &self.b[1]).map_err(degenerate)?;
        let v2 = meet_lines3(&self.a[2], &self.b[2]).map_err(degenerate)?;
        let pline = join3_points(&p[0], &p[1]).map_err(degenerate)?;
        let delta = join_lines3(&pline, &join3_points(&v1, &v2).map_err(degenerate)?)
            .map_err(degenerate)?;
        let l1 = join3_points(&p[0], &v2).map_err(degenerate)?;
        let l2 = join3_points(&p[1], &v1).map_err(degenerate)?;
        let w = meet_lines3(&l1, &l2).map_err(degenerate)?;
        let plane = |x: &PluckerLine<F>, y: &PluckerLine<F>| join_lines3(x, y).map_err(degenerate);
        let w1 = HPoint3::meet_planes(
            &delta,
            &plane(&self.a[3], &self.b[1])?,
            &plane(&self.a[3], &self.b[2])?,
        )?;
        let w2 = HPoint3::meet_planes(
            &delta,
            &plane(&self.a[1], &self.b[3])?,
            &plane(&self.a[2], &self.b[3])?,
        )?;
        Ok(w == w1 && w == w2 && self.a[3].contains(&w) && self.b[3].contains(&w))
    }
}

/// Whether `a_3` meets `b_3`.
pub fn equipal_from_pappus_witness<F: Field>(w: &PappusWitness<F>) -> bool {
    w.a[3].meets(&w.b[3])
}

/// `det` of four points, zero exactly when they are coplanar.
pub fn coplanar_points<F: Field>(p: &[HPoint3<F>; 4]) -> bool {
    det(&p.iter().map(|x| x.coords().to_vec()).collect::<Vec<_>>()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, Rational};
    use crate::harmonic::harmonic_reflection3;
    use crate::projective::Transform;

    const T: FieldTag = FieldTag::Rational;

    fn pt(v: [i64; 4]) -> HPoint3<Rational> {
        HPoint3::from_ints(T, v).unwrap()
    }

    fn plane(v: [i64; 4]) -> HPlane3<Rational> {
        HPlane3::from_ints(T, v).unwrap()
    }

    fn p2(v: [i64; 3]) -> HPoint2<Rational> {
        HPoint2::from_ints(T, v).unwrap()
    }

    fn l2(v: [i64; 3]) -> HLine2<Rational> {
        HLine2::from_ints(T, v).unwrap()
    }

    /// Rule `x = s` of the saddle `z = xy`, i.e. `xy = zw`.
    fn red(s: i64) -> PluckerLine<Rational> {
        join3_points(&pt([s, 0, 0, 1]), &pt([0, 1, s, 0])).unwrap()
    }

    /// Rule `y = t` of the saddle.
    fn blue(t: i64) -> PluckerLine<Rational> {
        join3_points(&pt([0, t, 0, 1]), &pt([1, 0, t, 0])).unwrap()
    }

    fn saddle() -> RuledSurface<Rational> {
        RuledSurface::from_lines([red(0), red(1), red(2)], [blue(0), blue(1), blue(2)]).unwrap()
    }

    fn saddle_form() -> QuadricMatrix<Rational> {
        let z = q(0, 1);
        let (o, m) = (q(1, 1), q(-1, 1));
        QuadricMatrix::new(Matrix::from_rows([
            [z.clone(), o, z.clone(), z.clone()],
            [q(1, 1), z.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone(), m.clone()],
            [z.clone(), z.clone(), m, z],
        ]))
        .unwrap()
    }

    fn on_saddle(x: i64, y: i64) -> HPoint3<Rational> {
        pt([x, y, x * y, 1])
    }

    #[test]
    fn transversal_examples() {
        let x = HPoint3::affine(q(1, 2), q(2, 1), q(1, 1));
        let t = transversal_through_point(&x, &red(0), &red(1)).unwrap();
        assert_eq!(
            t,
            join3_points(&pt([0, 2, 0, 1]), &pt([1, 2, 2, 1])).unwrap()
        );
        assert_eq!(t, transversal_through_point(&x, &red(1), &red(0)).unwrap());
        let x = HPoint3::affine(q(1, 2), q(0, 1), q(0, 1));
        let axis = join3_points(&pt([0, 0, 0, 1]), &pt([1, 0, 0, 0])).unwrap();
        assert_eq!(
            transversal_through_point(&x, &red(0), &red(1)).unwrap(),
            axis
        );
        assert_eq!(
            transversal_through_point(&pt([0, 5, 0, 1]), &red(0), &red(1)),
            Err(GeometryError::PointOnGenerator)
        );
        assert_eq!(
            transversal_through_point(&x, &red(0), &blue(3)),
            Err(GeometryError::CoplanarGenerators)
        );
    }

    #[test]
    fn ruling_examples() {
        let r = Ruling::new([red(0), red(1), red(2)]).unwrap();
        let alpha = join_line_point(&red(0), &pt([1, 2, 2, 1])).unwrap();
        assert_eq!(r.rule_from_plane(&alpha).unwrap(), blue(2));
        assert_eq!(
            r.rule_from_plane(&plane([0, 1, 0, -2])),
            Err(GeometryError::PlaneNotThroughGenerator)
        );
        assert_eq!(r.rule_through_point(&pt([0, 3, 0, 1])).unwrap(), blue(3));
        assert_eq!(
            r.rule_through_point(&pt([5, 5, 5, 1])),
            Err(GeometryError::PointNotOnGenerator)
        );
        let rules = r.sample_rules(10);
        assert_eq!(rules.len(), 10);
        for (i, x) in rules.iter().enumerate() {
            assert!(r.is_rule(x));
            let back = r
                .rule_through_point(&meet_lines3(x, &red(0)).unwrap())
                .unwrap();
            assert_eq!(&back, x);
            for y in &rules[i + 1..] {
                assert!(x.is_skew_to(y));
            }
        }
        assert_eq!(
            Ruling::new([red(0), red(1), blue(0)]),
            Err(GeometryError::CoplanarGenerators)
        );
    }

    #[test]
    fn equipal_examples() {
        let r = Ruling::new([red(0), red(1), red(2)]).unwrap();
        let rules = [blue(0), blue(1), blue(2)];
        assert!(equipal_check(&r, &rules, 0).unwrap());
        assert!(equipal_check(&r, &rules, 10).unwrap());
        assert!(Ruling::new(rules.clone()).unwrap().is_rule(&red(3)));
        let stray = join3_points(&pt([0, 0, 7, 1]), &pt([1, 3, 0, 2])).unwrap();
        assert!(!equipal_check(&r, &[blue(0), blue(1), stray], 10).unwrap());
        assert_eq!(
            equipal_check(&r, &[blue(0), blue(0), blue(1)], 3),
            Err(GeometryError::NotRulesOfR)
        );
    }

    #[test]
    fn quadric_fit_examples() {
        let pts: Vec<_> = [
            (0, 0),
            (1, 0),
            (0, 1),
            (1, 1),
            (2, 3),
            (-1, 2),
            (3, -2),
            (2, 2),
            (-3, -1),
        ]
        .iter()
        .map(|&(x, y)| on_saddle(x, y))
        .collect();
        let m = quadric_fit(&<[_; 9]>::try_from(pts).unwrap()).unwrap();
        assert_eq!(m, saddle_form());
        assert_eq!(m.rank(), 4);
        let pair: Vec<_> = (0..9)
            .map(|i| {
                if i < 5 {
                    pt([i, 1, 0, 1])
                } else {
                    pt([1, i, 1, 1])
                }
            })
            .collect();
        let pair: [_; 9] = pair.try_into().unwrap();
        match quadric_fit(&pair) {
            Ok(m) => assert!(m.rank() < 4),
            Err(e) => assert_eq!(e, GeometryError::DegeneratePointSet),
        }
        let s = saddle();
        assert_eq!(s.quadric(), &saddle_form());
        for r in s.red_rules(5).iter().chain(&s.blue_rules(5)) {
            for t in [q(0, 1), q(3, 1), q(-2, 7), q(5, 3)] {
                assert!(s.quadric().contains(&r.point_at(&t)));
            }
        }
    }

    #[test]
    fn double_ruling_pairing() {
        let s = saddle();
        let (reds, blues) = (s.red_rules(8), s.blue_rules(8));
        for r in &reds {
            assert!(blues.iter().all(|b| r.meets(b)));
        }
        for i in 0..8 {
            for j in i + 1..8 {
                assert!(reds[i].is_skew_to(&reds[j]) && blues[i].is_skew_to(&blues[j]));
            }
        }
        assert!(s.contains(&on_saddle(7, -3)));
        assert!(s.contains(&pt([0, 0, 0, 1])));
        assert!(!s.contains(&pt([0, 0, 1, 1])));
    }

    #[test]
    fn tangent_plane_examples() {
        let s = saddle();
        assert_eq!(
            s.tangent_plane_at(&pt([0, 0, 0, 1])).unwrap(),
            plane([0, 0, 1, 0])
        );
        let z = on_saddle(1, 1);
        let tp = s.tangent_plane_at(&z).unwrap();
        assert_eq!(tp, plane([1, 1, -1, -1]));
        assert_eq!(tp, s.quadric().polar(&z).unwrap());
        let rules: Vec<_> = s
            .red_rules(10)
            .into_iter()
            .chain(s.blue_rules(10))
            .collect();
        assert_eq!(rules.iter().filter(|r| r.lies_in(&tp)).count(), 2);
        assert_eq!(
            s.tangent_plane_at(&pt([0, 0, 1, 1])),
            Err(GeometryError::PointNotOnSurface)
        );
    }

    #[test]
    fn polarity_examples() {
        let s = saddle();
        let p = pt([0, 0, 1, -1]);
        let pi = s.polar_plane(&p).unwrap();
        assert_eq!(pi, plane([0, 0, 1, -1]));
        assert_eq!(pi, s.quadric().polar(&p).unwrap());
        assert!(!pi.contains(&p));
        assert_eq!(s.pole_of_plane(&pi).unwrap(), p);
        assert_eq!(
            s.pole_of_plane(&plane([0, 0, 1, 0])),
            Err(GeometryError::TangentPlane)
        );
        assert_eq!(
            s.polar_plane(&on_saddle(2, 3)),
            Err(GeometryError::PointOnSurface)
        );
        for x in [pt([0, 0, 1, 1]), pt([1, 2, 3, 4]), pt([5, -1, 2, 0])] {
            let pi = s.polar_plane(&x).unwrap();
            assert_eq!(pi, s.quadric().polar(&x).unwrap());
            assert_eq!(s.pole_of_plane(&pi).unwrap(), x);
            let rho = harmonic_reflection3(&x, &pi).unwrap();
            assert!(s.quadric().invariant_under(&rho));
            for r in s.red_rules(10) {
                let image = rho.apply(&r);
                assert!(s.red().is_rule(&image), "red rules map to blue rules");
            }
        }
    }

    #[test]
    fn polar_plane_is_independent_of_generators() {
        let s = saddle();
        let other =
            RuledSurface::from_lines([red(3), red(-1), red(5)], [blue(4), blue(-2), blue(1)])
                .unwrap();
        for x in [pt([0, 0, 1, 1]), pt([1, 2, 3, 4]), pt([2, -1, 7, 3])] {
            assert_eq!(s.polar_plane(&x).unwrap(), other.polar_plane(&x).unwrap());
        }
    }

    #[test]
    fn dandelin_examples() {
        let s = saddle();
        let p = pt([0, 0, 1, 1]);
        let cfg = s.dandelin_from_point(&p).unwrap();
        assert!(cfg.is_valid());
        for (g, b) in cfg.red().iter().zip(cfg.blue()) {
            assert!(join_lines3(g, b).unwrap().contains(&p));
        }
        let pi = s.polar_plane(&p).unwrap();
        assert!(harmonic_pencil_at_contact(&cfg, &p, &pi).unwrap());
        let planes = cfg.tangent_planes().unwrap();
        let points = cfg.basic_points().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!(planes[i][j].contains(&points[i][j]));
            }
        }
        for i in 0..3 {
            let quad = cfg.alpha_quadrangle(i).unwrap();
            let alpha = join_lines3(&cfg.red()[i], &cfg.blue()[i]).unwrap();
            assert!(quad.iter().all(|v| alpha.contains(v)));
            let d = meet_lines3(
                &join3_points(&quad[0], &quad[1]).unwrap(),
                &join3_points(&quad[2], &quad[3]).unwrap(),
            )
            .unwrap();
            assert_eq!(d, p);
        }
        let a = cfg.contact(0).unwrap();
        let on_red = cfg.red()[0].point_at(&q(3, 1));
        let on_blue = cfg.blue()[0].point_at(&q(5, 1));
        let x = HPoint3::new(axpy(on_red.coords(), &q(2, 1), on_blue.coords())).unwrap();
        let stray = join3_points(&a, &x).unwrap();
        assert!(!stray.contains(&p) && stray != cfg.blue()[0]);
        let broken = DandelinConfiguration::unchecked(
            cfg.red().clone(),
            [stray, cfg.blue()[1].clone(), cfg.blue()[2].clone()],
        );
        assert!(!broken.is_valid());
        assert!(!harmonic_pencil_at_contact(&broken, &p, &pi).unwrap());
        assert_eq!(
            s.dandelin_from_point(&on_saddle(1, 1)),
            Err(GeometryError::PointOnSurface)
        );
    }

    fn circle() -> HarmonicCurve<Rational> {
        HarmonicCurve::from_points(
            &p2([1, 0, 1]),
            &p2([0, 1, 1]),
            &p2([-1, 0, 1]),
            &p2([0, -1, 1]),
        )
        .unwrap()
    }

    #[test]
    fn lift_of_circle() {
        let c = circle();
        let chart = PlaneChart::new(&plane([0, 0, 1, 0]));
        let lift = lift_curve_to_surface(&c, &chart).unwrap();
        let s = &lift.surface;
        let restricted = s.quadric().restrict(&chart);
        assert!(restricted.proportional_to(&Matrix::diagonal([q(1, 1), q(1, 1), q(-1, 1)])));
        for v in c.vertices() {
            assert!(s.contains(&chart.embed(v)));
        }
        for z in c.sample(20) {
            let x = chart.embed(&z);
            assert!(s.contains(&x) && s.quadric().contains(&x));
        }
        assert_eq!(s.polar_plane(&lift.pole).unwrap(), *chart.plane());
        let section = s.section(chart.plane()).unwrap();
        for z in c.sample(20) {
            assert!(section
                .curve
                .curve_membership(&section.chart.project(&chart.embed(&z)).unwrap()));
        }
    }

    #[test]
    fn section_examples() {
        let s = saddle();
        let pi = plane([0, 0, 1, -1]);
        let sec = s.section(&pi).unwrap();
        let pts = sec.points(&s, 12);
        assert!(pts.len() >= 10);
        for z in &pts {
            assert!(sec.curve.curve_membership(z));
            assert!(s.quadric().contains(&sec.chart.embed(z)));
        }
        assert_eq!(
            s.section(&plane([0, 0, 1, 0])),
            Err(GeometryError::TangentPlane)
        );
        let pole = s.pole_of_plane(&pi).unwrap();
        for r in s.blue_rules(6) {
            let x = meet_line_plane(&r, &pi).unwrap();
            let proj = PluckerLine::meet_planes(&join_line_point(&r, &pole).unwrap(), &pi).unwrap();
            let t = sec.chart.project_line(&proj).unwrap();
            assert_eq!(
                t,
                sec.curve
                    .tangent_at(&sec.chart.project(&x).unwrap())
                    .unwrap()
            );
        }
    }

    #[test]
    fn pappus_example() {
        let b = [p2([1, 0, 1]), p2([2, 0, 1]), p2([3, 0, 1])];
        let a = [p2([0, 1, 1]), p2([1, 1, 1]), p2([2, 1, 1])];
        let r = pappus_check(&l2([0, 1, 0]), &l2([0, 1, -1]), &b, &a).unwrap();
        let half = |x: i64, d: i64| HPoint2::new([q(x, d), q(1, 2), q(1, 1)]).unwrap();
        assert_eq!(r.points, [half(2, 1), half(3, 2), half(1, 1)]);
        assert!(r.collinear);
        let bad = [p2([1, 0, 1]), p2([1, 0, 1]), p2([3, 0, 1])];
        assert_eq!(
            pappus_check(&l2([0, 1, 0]), &l2([0, 1, -1]), &bad, &a),
            Err(GeometryError::DegenerateHexagon)
        );
    }

    #[test]
    fn pascal_on_circle() {
        let c = circle();
        let z = [
            p2([1, 0, 1]),
            p2([0, 1, 1]),
            p2([-1, 0, 1]),
            p2([0, -1, 1]),
            p2([3, 4, 5]),
            p2([-3, -4, 5]),
        ];
        assert!(pascal_check(&c, &z).unwrap().collinear);
        let mut twice = z.clone();
        twice[5] = twice[0].clone();
        assert_eq!(
            pascal_check(&c, &twice),
            Err(GeometryError::DegenerateHexagon)
        );
        let mut off = z;
        off[5] = p2([0, 0, 1]);
        assert_eq!(pascal_check(&c, &off), Err(GeometryError::NotOnCurve));
    }

    #[test]
    fn pappus_witness_examples() {
        let chart = PlaneChart::new(&plane([0, 0, 1, 0]));
        let (a0, b0) = (l2([0, 1, 0]), l2([0, 1, -1]));
        let b = [p2([1, 0, 1]), p2([2, 0, 1]), p2([3, 0, 1])];
        let a = [p2([0, 1, 1]), p2([1, 1, 1]), p2([2, 1, 1])];
        let w = pappus_witness(&chart, &a0, &b0, &b, &a).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!(w.a[i].meets(&w.b[j]));
            }
        }
        assert!(equipal_from_pappus_witness(&w));
        assert!(w.pappus_points().unwrap().collinear);
        assert_eq!(w.pappus_line().unwrap(), l2([0, 2, -1]));
        assert!(w.w_point_check().unwrap());
        let displaced = w.with_b3_through(&p2([3, 1, 4])).unwrap();
        assert!(!equipal_from_pappus_witness(&displaced));
        assert!(!displaced.pappus_points().unwrap().collinear);
        assert!(!displaced.w_point_check().unwrap());
    }
}
