//! Finite projective planes and spaces over prime fields, held as incidence
//! tables, with exhaustive checks of the incidence axioms, Pappus, and the
//! uniqueness of rulings.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::error::Result as GeoResult;
use crate::field::{is_prime, Field, FieldTag};
use crate::harmonic::harmonic_fourth_canonical;
use crate::projective::HPoint2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("dimension {0} is not supported (use 2 or 3)")]
    UnsupportedDimension(u8),
    #[error("{check} over GF({p}) exceeds the budget p <= {limit}")]
    BudgetExceeded {
        check: &'static str,
        p: u32,
        limit: u32,
    },
    #[error("{check} needs a model of dimension {expected}")]
    WrongDimension { check: &'static str, expected: u8 },
}

pub type Result<T, E = FiniteError> = std::result::Result<T, E>;

/// Largest primes admitted by the exhaustive checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub plane: u32,
    pub space: u32,
    pub pappus: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            plane: 7,
            space: 3,
            pappus: 5,
        }
    }
}

fn check_budget(check: &'static str, p: u32, limit: u32) -> Result<()> {
    if p > limit {
        Err(FiniteError::BudgetExceeded { check, p, limit })
    } else {
        Ok(())
    }
}

/// A worker pool capped by `HARMONIA_THREADS` when set.
pub fn worker_pool() -> rayon::ThreadPool {
    let n = std::env::var("HARMONIA_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .expect("thread pool")
}

fn inv_mod(x: u32, p: u32) -> u32 {
    let (mut base, mut e, mut acc) = (x as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Scales so the first nonzero coordinate is 1; `None` for the zero vector.
fn normalize(v: &[u32], p: u32) -> Option<Vec<u32>> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let k = inv_mod(lead, p) as u64;
    Some(
        v.iter()
            .map(|&x| (x as u64 * k % p as u64) as u32)
            .collect(),
    )
}

fn canonical_vectors(len: usize, p: u32) -> Vec<Vec<u32>> {
    let total = (p as usize).pow(len as u32);
    (0..total)
        .map(|mut n| {
            let mut v = vec![0u32; len];
            for x in v.iter_mut().rev() {
                *x = (n % p as usize) as u32;
                n /= p as usize;
            }
            v
        })
        .filter(|v| normalize(v, p).as_ref() == Some(v))
        .collect()
}

fn dot_mod(a: &[u32], b: &[u32], p: u32) -> u32 {
    (a.iter()
        .zip(b)
        .map(|(&x, &y)| x as u64 * y as u64)
        .sum::<u64>()
        % p as u64) as u32
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and3(a: &Self, b: &Self, c: &Self) -> Self {
        BitSet(
            a.0.iter()
                .zip(&b.0)
                .zip(&c.0)
                .map(|((x, y), z)| x & y & z)
                .collect(),
        )
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

/// `PG(2, p)` or `PG(3, p)` as point, line and plane incidence tables.
///
/// Points are the canonical representatives over GF(p) in lexicographic
/// order. Derived lookups (joins, meets) are read from the line table, so a
/// corrupted table is visible to every check.
#[derive(Clone, Debug)]
pub struct FiniteGeometry {
    dimension: u8,
    p: u32,
    points: Vec<Vec<u32>>,
    lines: Vec<Vec<usize>>,
    planes: Vec<Vec<usize>>,
    on_line: Vec<Vec<bool>>,
    join: Vec<Vec<Option<usize>>>,
    meet: Vec<Vec<Option<usize>>>,
    meets: Vec<BitSet>,
}

impl FiniteGeometry {
    /// The full model, subject to the enumeration budget.
    pub fn enumerate(dimension: u8, p: u32, budget: &Budget) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(FiniteError::NotPrime(p));
        }
        match dimension {
            2 => check_budget("enumeration", p, budget.plane)?,
            3 => check_budget("enumeration", p, budget.space)?,
            d => return Err(FiniteError::UnsupportedDimension(d)),
        }
        let len = dimension as usize + 1;
        let points = canonical_vectors(len, p);
        let index: HashMap<Vec<u32>, usize> = points
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let hyperplanes: Vec<Vec<usize>> = points
            .iter()
            .map(|u| {
                (0..points.len())
                    .filter(|&i| dot_mod(u, &points[i], p) == 0)
                    .collect()
            })
            .collect();
        let (lines, planes) = if dimension == 2 {
            (hyperplanes, Vec::new())
        } else {
            let mut set = BTreeSet::new();
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    let mut line: Vec<usize> = (0..p)
                        .map(|t| {
                            let v: Vec<u32> = (0..len)
                                .map(|k| (points[j][k] + t * points[i][k]) % p)
                                .collect();
                            index[&normalize(&v, p).expect("independent points")]
                        })
                        .collect();
                    line.push(i);
                    line.sort_unstable();
                    set.insert(line);
                }
            }
            (set.into_iter().collect(), hyperplanes)
        };
        Ok(Self::from_tables(dimension, p, points, lines, planes))
    }

    fn from_tables(
        dimension: u8,
        p: u32,
        points: Vec<Vec<u32>>,
        lines: Vec<Vec<usize>>,
        planes: Vec<Vec<usize>>,
    ) -> Self {
        let n = points.len();
        let mut on_line = vec![vec![false; n]; lines.len()];
        let mut join = vec![vec![None; n]; n];
        for (l, pts) in lines.iter().enumerate() {
            for &a in pts {
                on_line[l][a] = true;
                for &b in pts {
                    if a != b && join[a][b].is_none() {
                        join[a][b] = Some(l);
                    }
                }
            }
        }
        let mut meet = vec![vec![None; lines.len()]; lines.len()];
        let mut meets = vec![BitSet::new(lines.len()); lines.len()];
        for l in 0..lines.len() {
            for m in 0..lines.len() {
                if l != m {
                    meet[l][m] = lines[l].iter().copied().find(|&x| on_line[m][x]);
                    if meet[l][m].is_some() {
                        meets[l].insert(m);
                    }
                }
            }
        }
        FiniteGeometry {
            dimension,
            p,
            points,
            lines,
            planes,
            on_line,
            join,
            meet,
            meets,
        }
    }

    /// A copy where one point of `line` is replaced by the first point off it.
    pub fn corrupted(&self, line: usize) -> Self {
        let mut lines = self.lines.clone();
        let outsider = (0..self.points.len())
            .find(|&x| !self.on_line[line][x])
            .expect("a line misses some point");
        lines[line].pop();
        lines[line].push(outsider);
        lines[line].sort_unstable();
        Self::from_tables(
            self.dimension,
            self.p,
            self.points.clone(),
            lines,
            self.planes.clone(),
        )
    }

    pub fn dimension(&self) -> u8 {
        self.dimension
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn planes(&self) -> &[Vec<usize>] {
        &self.planes
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.on_line[line][point]
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join[a][b]
    }

    /// The common point of two distinct lines that meet.
    pub fn meet(&self, l: usize, m: usize) -> Option<usize> {
        self.meet[l][m]
    }

    pub fn lines_meet(&self, l: usize, m: usize) -> bool {
        l == m || self.meet[l][m].is_some()
    }

    /// Whether the point–line incidence matrix equals its transpose, which
    /// holds for planes since lines and points share their coordinate list.
    pub fn is_self_dual(&self) -> bool {
        self.dimension == 2
            && self.lines.len() == self.points.len()
            && (0..self.lines.len())
                .all(|l| (0..self.points.len()).all(|x| self.on_line[l][x] == self.on_line[x][l]))
    }

    fn collinear(&self, a: usize, b: usize, c: usize) -> bool {
        if a == b || a == c || b == c {
            return true;
        }
        self.join(a, b).is_some_and(|l| self.on_line[l][c])
    }

    /// `(P3∨P4) ∧ (A∨B)` with `P3 = (A∨P1)∧(B∨P2)`, `P4 = (A∨P2)∧(B∨P1)`,
    /// where `P1∨P2` passes through the point being reflected.
    pub fn harmonic_fourth_with(&self, a: usize, b: usize, p1: usize, p2: usize) -> Option<usize> {
        let l = self.join(a, b)?;
        let m =
            |x: usize, y: usize, u: usize, v: usize| self.meet(self.join(x, y)?, self.join(u, v)?);
        let p3 = m(a, p1, b, p2)?;
        let p4 = m(a, p2, b, p1)?;
        self.meet(self.join(p3, p4)?, l)
    }

    /// Auxiliaries: the first point `P1` off `A∨B`, then the first other point of `C∨P1`.
    pub fn canonical_auxiliaries(&self, a: usize, c: usize, b: usize) -> Option<(usize, usize)> {
        let l = self.join(a, b)?;
        let p1 = (0..self.points.len()).find(|&x| !self.on_line[l][x])?;
        let cp = self.join(c, p1)?;
        let p2 = self.lines[cp]
            .iter()
            .copied()
            .find(|&x| x != c && x != p1)?;
        Some((p1, p2))
    }

    pub fn harmonic_fourth(&self, a: usize, c: usize, b: usize) -> Option<usize> {
        let (p1, p2) = self.canonical_auxiliaries(a, c, b)?;
        self.harmonic_fourth_with(a, b, p1, p2)
    }

    /// Ordered triples `(A, C, B)` of distinct collinear points.
    fn collinear_triples(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for line in &self.lines {
            for &a in line {
                for &c in line {
                    for &b in line {
                        if a != c && c != b && a != b {
                            out.push([a, c, b]);
                        }
                    }
                }
            }
        }
        out
    }

    /// Axioms 1–5: unique joins, the meeting of opposite sides, a skew pair
    /// (space only), at least three points per line, and a harmonic fourth
    /// distinct from its three arguments.
    pub fn check_axioms(&self) -> AxiomReport {
        let pool = worker_pool();
        let results = pool.install(|| {
            vec![
                self.axiom_unique_join(),
                self.axiom_quadrilateral(),
                self.axiom_skew_pair(),
                self.axiom_three_points(),
                self.axiom_harmonic_fourth(),
            ]
        });
        AxiomReport {
            dimension: self.dimension,
            p: self.p,
            results,
        }
    }

    fn axiom_unique_join(&self) -> AxiomResult {
        let n = self.points.len();
        let mut count = vec![vec![0u32; n]; n];
        for line in &self.lines {
            for &a in line {
                for &b in line {
                    count[a][b] += 1;
                }
            }
        }
        let witness = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| count[a][b] != 1)
            .map(|(a, b)| vec![a, b]);
        AxiomResult::from_witness(1, (n * (n - 1) / 2) as u64, witness)
    }

    fn axiom_quadrilateral(&self) -> AxiomResult {
        let n = self.points.len();
        let witness = (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if a == b || a == c || a == d || b == c || b == d || c == d {
                            continue;
                        }
                        let j = |x, y| self.join(x, y);
                        let (Some(ab), Some(cd), Some(ac), Some(bd)) =
                            (j(a, b), j(c, d), j(a, c), j(b, d))
                        else {
                            return Some(vec![a, b, c, d]);
                        };
                        if self.lines_meet(ab, cd) && !self.lines_meet(ac, bd) {
                            return Some(vec![a, b, c, d]);
                        }
                    }
                }
            }
            None
        });
        AxiomResult::from_witness(2, (n * (n - 1) * (n - 2) * (n - 3)) as u64, witness)
    }

    fn axiom_skew_pair(&self) -> AxiomResult {
        if self.dimension < 3 {
            return AxiomResult {
                axiom: 3,
                verdict: Verdict::NotApplicable,
                instances: 0,
                witness: None,
            };
        }
        let m = self.lines.len();
        let pair = (0..m)
            .flat_map(|l| (l + 1..m).map(move |k| (l, k)))
            .find(|&(l, k)| !self.lines_meet(l, k));
        AxiomResult {
            axiom: 3,
            verdict: if pair.is_some() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            instances: (m * (m - 1) / 2) as u64,
            witness: pair.map(|(l, k)| vec![l, k]),
        }
    }

    fn axiom_three_points(&self) -> AxiomResult {
        let witness = self.lines.iter().position(|l| l.len() < 3).map(|l| vec![l]);
        AxiomResult::from_witness(4, self.lines.len() as u64, witness)
    }

    /// The witness lists `A, C, B, D` then the quadrangle `P1, P3, P2, P4`,
    /// whose diagonal points are `A`, `B` and, when the check fails, `C`.
    fn axiom_harmonic_fourth(&self) -> AxiomResult {
        let triples = self.collinear_triples();
        let witness = triples.par_iter().find_map_first(|&[a, c, b]| {
            let Some((p1, p2)) = self.canonical_auxiliaries(a, c, b) else {
                return Some(vec![a, c, b]);
            };
            let d = self.harmonic_fourth_with(a, b, p1, p2);
            match d {
                Some(d) if d != a && d != b && d != c => None,
                _ => {
                    let m = |x: usize, y: usize, u: usize, v: usize| {
                        self.meet(self.join(x, y)?, self.join(u, v)?)
                    };
                    let mut w = vec![a, c, b];
                    w.extend(d);
                    w.extend(
                        [Some(p1), m(a, p1, b, p2), Some(p2), m(a, p2, b, p1)]
                            .into_iter()
                            .flatten(),
                    );
                    Some(w)
                }
            }
        });
        AxiomResult::from_witness(5, triples.len() as u64, witness)
    }

    /// Every choice of auxiliaries yields the same harmonic fourth.
    pub fn harmonic_independence_exhaustive(&self) -> Exhaustive {
        let triples = self.collinear_triples();
        let count = std::sync::atomic::AtomicU64::new(0);
        let witness = worker_pool().install(|| {
            triples.par_iter().find_map_first(|&[a, c, b]| {
                let l = self.join(a, b)?;
                let reference = self.harmonic_fourth(a, c, b);
                for p1 in (0..self.points.len()).filter(|&x| !self.on_line[l][x]) {
                    let cp = self.join(c, p1)?;
                    for &p2 in self.lines[cp].iter().filter(|&&x| x != c && x != p1) {
                        count.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if self.harmonic_fourth_with(a, b, p1, p2) != reference {
                            return Some(vec![a, c, b, p1, p2]);
                        }
                    }
                }
                None
            })
        });
        Exhaustive::new(count.into_inner(), witness)
    }

    /// Pappus points of every hexagon inscribed in two lines are collinear.
    /// The witness is `a0, b0, B1, B2, B3, A1, A2, A3`.
    pub fn pappus_exhaustive(&self, budget: &Budget) -> Result<Exhaustive> {
        self.require_dimension("pappus_exhaustive", 2)?;
        check_budget("pappus_exhaustive", self.p, budget.pappus)?;
        let m = self.lines.len();
        let pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|l| (l + 1..m).map(move |k| (l, k)))
            .collect();
        let per_pair = {
            let k = self.p as u64;
            (k * (k - 1) * (k - 2) / 6) * (k * (k - 1) * (k - 2))
        };
        let witness = worker_pool().install(|| {
            pairs.par_iter().find_map_first(|&(a0, b0)| {
                let o = self.meet(a0, b0)?;
                let bs: Vec<usize> = self.lines[a0].iter().copied().filter(|&x| x != o).collect();
                let as_: Vec<usize> = self.lines[b0].iter().copied().filter(|&x| x != o).collect();
                for (i, &b1) in bs.iter().enumerate() {
                    for (j, &b2) in bs.iter().enumerate().skip(i + 1) {
                        for &b3 in &bs[j + 1..] {
                            for &a1 in &as_ {
                                for &a2 in &as_ {
                                    for &a3 in &as_ {
                                        if a1 == a2 || a1 == a3 || a2 == a3 {
                                            continue;
                                        }
                                        if !self.pappus_holds([b1, b2, b3], [a1, a2, a3]) {
                                            return Some(vec![a0, b0, b1, b2, b3, a1, a2, a3]);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                None
            })
        });
        Ok(Exhaustive::new(pairs.len() as u64 * per_pair, witness))
    }

    fn pappus_holds(&self, b: [usize; 3], a: [usize; 3]) -> bool {
        let pt = |j: usize, k: usize| -> Option<usize> {
            self.meet(self.join(a[j], b[k])?, self.join(a[k], b[j])?)
        };
        match (pt(1, 2), pt(2, 0), pt(0, 1)) {
            (Some(x), Some(y), Some(z)) => self.collinear(x, y, z),
            _ => false,
        }
    }

    /// Lines meeting each of three lines.
    pub fn transversals(&self, a: usize, b: usize, c: usize) -> Vec<usize> {
        BitSet::and3(&self.meets[a], &self.meets[b], &self.meets[c])
            .iter()
            .collect()
    }

    /// For every skew triple, every skew triple of its transversals has the
    /// same transversals, and these include the original three lines. The
    /// witness is the original triple followed by the offending rule triple.
    pub fn equipal_exhaustive(&self, budget: &Budget) -> Result<Exhaustive> {
        self.require_dimension("equipal_exhaustive", 3)?;
        check_budget("equipal_exhaustive", self.p, budget.space)?;
        let m = self.lines.len();
        let count = std::sync::atomic::AtomicU64::new(0);
        let witness = worker_pool().install(|| {
            (0..m).into_par_iter().find_map_first(|a| {
                for b in a + 1..m {
                    if self.lines_meet(a, b) {
                        continue;
                    }
                    for c in b + 1..m {
                        if self.lines_meet(a, c) || self.lines_meet(b, c) {
                            continue;
                        }
                        count.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if let Some(w) = self.equipal_instance(a, b, c) {
                            return Some(w);
                        }
                    }
                }
                None
            })
        });
        Ok(Exhaustive::new(count.into_inner(), witness))
    }

    /// `None` when the ruling of `a, b, c` extends uniquely; otherwise a witness.
    pub fn equipal_instance(&self, a: usize, b: usize, c: usize) -> Option<Vec<usize>> {
        let rules = self.transversals(a, b, c);
        if rules.len() < 3 {
            return Some(vec![a, b, c]);
        }
        let mut closure: Option<Vec<usize>> = None;
        for (i, &x) in rules.iter().enumerate() {
            for (j, &y) in rules.iter().enumerate().skip(i + 1) {
                for &z in &rules[j + 1..] {
                    if self.lines_meet(x, y) || self.lines_meet(x, z) || self.lines_meet(y, z) {
                        return Some(vec![a, b, c, x, y, z]);
                    }
                    let t = self.transversals(x, y, z);
                    if ![a, b, c].iter().all(|g| t.contains(g)) {
                        return Some(vec![a, b, c, x, y, z]);
                    }
                    match &closure {
                        None => closure = Some(t),
                        Some(prev) if *prev != t => return Some(vec![a, b, c, x, y, z]),
                        _ => {}
                    }
                }
            }
        }
        None
    }

    /// Steps `X_{n+1}` = harmonic conjugate of `X_{n-1}` with respect to
    /// `X_n` and a fixed point at infinity, from `X_0, X_1` on the first line,
    /// and returns the first `n > 0` with `X_n = X_0`.
    pub fn characteristic_probe(&self) -> u64 {
        let line = &self.lines[0];
        let (x0, inf, x1) = (line[0], line[1], line[2]);
        let (mut prev, mut cur) = (x0, x1);
        for n in 1..=self.points.len() as u64 {
            if cur == x0 {
                return n;
            }
            let Some(next) = self.harmonic_fourth(cur, prev, inf) else {
                return 0;
            };
            (prev, cur) = (cur, next);
        }
        0
    }

    fn require_dimension(&self, check: &'static str, expected: u8) -> Result<()> {
        if self.dimension == expected {
            Ok(())
        } else {
            Err(FiniteError::WrongDimension { check, expected })
        }
    }
}

/// The same harmonic sequence in the plane over an arbitrary field, using
/// the coordinate construction; 0 when no return happens within `budget` steps.
pub fn characteristic_probe_field<F: Field>(tag: FieldTag, budget: u64) -> GeoResult<u64> {
    let x0 = HPoint2::<F>::from_ints(tag, [0, 0, 1])?;
    let inf = HPoint2::<F>::from_ints(tag, [1, 0, 0])?;
    let (mut prev, mut cur) = (x0.clone(), HPoint2::<F>::from_ints(tag, [1, 0, 1])?);
    for n in 1..=budget {
        if cur == x0 {
            return Ok(n);
        }
        let next = harmonic_fourth_canonical(&cur, &prev, &inf)?;
        (prev, cur) = (cur, next);
    }
    Ok(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: u8,
    pub verdict: Verdict,
    pub instances: u64,
    /// Point (or line) indices of a counterexample.
    pub witness: Option<Vec<usize>>,
}

impl AxiomResult {
    fn from_witness(axiom: u8, instances: u64, witness: Option<Vec<usize>>) -> Self {
        AxiomResult {
            axiom,
            verdict: if witness.is_some() {
                Verdict::Fail
            } else {
                Verdict::Pass
            },
            instances,
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub dimension: u8,
    pub p: u32,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn failed(&self) -> Vec<u8> {
        self.results
            .iter()
            .filter(|r| r.verdict == Verdict::Fail)
            .map(|r| r.axiom)
            .collect()
    }

    pub fn verdict(&self, axiom: u8) -> Option<Verdict> {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .map(|r| r.verdict)
    }
}

/// Outcome of an exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exhaustive {
    pub holds: bool,
    pub instances: u64,
    pub witness: Option<Vec<usize>>,
}

impl Exhaustive {
    fn new(instances: u64, witness: Option<Vec<usize>>) -> Self {
        Exhaustive {
            holds: witness.is_none(),
            instances,
            witness,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    fn model(d: u8, p: u32) -> FiniteGeometry {
        FiniteGeometry::enumerate(d, p, &Budget::default()).unwrap()
    }

    #[test]
    fn counts() {
        let g = model(2, 3);
        assert_eq!((g.points().len(), g.lines().len()), (13, 13));
        assert!(g.lines().iter().all(|l| l.len() == 4));
        let g = model(2, 2);
        assert_eq!((g.points().len(), g.lines().len()), (7, 7));
        let g = model(3, 3);
        assert_eq!(
            (g.points().len(), g.lines().len(), g.planes().len()),
            (40, 130, 40)
        );
        for p in [2, 3, 5, 7] {
            let g = model(2, p);
            assert_eq!(g.points().len() as u32, p * p + p + 1);
            assert!(g.is_self_dual());
        }
    }

    #[test]
    fn budgets_and_primes() {
        let b = Budget::default();
        assert_eq!(
            FiniteGeometry::enumerate(2, 4, &b).unwrap_err(),
            FiniteError::NotPrime(4)
        );
        assert!(matches!(
            FiniteGeometry::enumerate(2, 11, &b),
            Err(FiniteError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            FiniteGeometry::enumerate(3, 5, &b),
            Err(FiniteError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            model(2, 7).pappus_exhaustive(&b),
            Err(FiniteError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            model(2, 3).equipal_exhaustive(&b),
            Err(FiniteError::WrongDimension { .. })
        ));
    }

    #[test]
    fn axioms() {
        let r = model(3, 3).check_axioms();
        assert!(r.failed().is_empty());
        let r = model(2, 3).check_axioms();
        assert_eq!(r.verdict(3), Some(Verdict::NotApplicable));
        assert!(r.failed().is_empty());
        let r = model(2, 2).check_axioms();
        assert_eq!(r.failed(), vec![5]);
        let w = r.results[4].witness.clone().unwrap();
        assert_eq!(w[3], w[1], "the fourth collapses onto the third point");
        let g = model(2, 2);
        let (a, c, b) = (w[0], w[1], w[2]);
        assert!(g.collinear(a, b, c));
    }

    #[test]
    fn harmonic_fourth_tables() {
        let g = model(2, 5);
        assert!(g.harmonic_independence_exhaustive().holds);
        let g = model(2, 3);
        assert!(g.harmonic_independence_exhaustive().holds);
    }

    #[test]
    fn pappus_models() {
        let b = Budget::default();
        assert!(model(2, 3).pappus_exhaustive(&b).unwrap().holds);
        let r = model(2, 5).pappus_exhaustive(&b).unwrap();
        assert!(r.holds);
        let bad = model(2, 3).corrupted(0).pappus_exhaustive(&b).unwrap();
        assert!(!bad.holds);
        assert_eq!(bad.witness.unwrap().len(), 8);
    }

    #[test]
    fn equipal_model() {
        let b = Budget::default();
        let g = model(3, 3);
        let r = g.equipal_exhaustive(&b).unwrap();
        assert!(r.holds);
        assert!(r.instances > 10_000);
        let (a, bb) = (0, (1..130).find(|&l| !g.lines_meet(0, l)).unwrap());
        let c = (bb + 1..130)
            .find(|&l| !g.lines_meet(0, l) && !g.lines_meet(bb, l))
            .unwrap();
        assert_eq!(g.transversals(a, bb, c).len(), 4);
        assert_eq!(g.equipal_instance(a, bb, c), None);
        let bad = g.corrupted(0).equipal_exhaustive(&b).unwrap();
        assert!(!bad.holds && bad.witness.is_some());
    }

    #[test]
    fn probes() {
        assert_eq!(model(2, 3).characteristic_probe(), 3);
        assert_eq!(model(2, 5).characteristic_probe(), 5);
        assert_eq!(model(2, 7).characteristic_probe(), 7);
        assert_eq!(
            characteristic_probe_field::<Fp>(FieldTag::Prime(5), 50).unwrap(),
            5
        );
        assert_eq!(
            characteristic_probe_field::<Fp>(FieldTag::Prime(3), 50).unwrap(),
            3
        );
        assert_eq!(
            characteristic_probe_field::<Rational>(FieldTag::Rational, 50).unwrap(),
            0
        );
    }
}
