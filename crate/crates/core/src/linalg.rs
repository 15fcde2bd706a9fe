//! Exact dense linear algebra over a [`Field`].

use std::array;

use crate::field::Field;

/// Reduces `m` in place to reduced row echelon form; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// A basis of `{x : rows · x = 0}`.
pub fn nullspace<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    let Some(sample) = rows.iter().flatten().next().cloned() else {
        return Vec::new();
    };
    let cols = rows[0].len();
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let zero = sample.zero_like();
    let one = sample.one_like();
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![zero.clone(); cols];
            v[free] = one.clone();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Coefficients `c` with `Σ c_i · basis_i = target`, if they exist.
pub fn solve_in_span<F: Field>(basis: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let n = basis.len();
    let dim = target.len();
    let mut m: Vec<Vec<F>> = (0..dim)
        .map(|i| {
            let mut row: Vec<F> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&n) {
        return None;
    }
    let zero = target[0].zero_like();
    let mut x = vec![zero; n];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][n].clone();
    }
    Some(x)
}

/// Determinant by fraction-based elimination.
pub fn det<F: Field>(rows: &[Vec<F>]) -> F {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut acc = m[0][0].one_like();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return acc.zero_like();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        let pivot = m[c][c].clone();
        acc = acc * pivot.clone();
        let inv = pivot.inv().expect("pivot is nonzero");
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() * inv.clone();
            let pivot_row = m[c].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row).skip(c) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
    }
    acc
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() * y.clone())
        .reduce(|s, t| s + t)
        .expect("non-empty vectors")
}

pub fn cross3<F: Field>(a: &[F; 3], b: &[F; 3]) -> [F; 3] {
    let m = |i: usize, j: usize| a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
    [m(1, 2), m(2, 0), m(0, 1)]
}

/// `a + s·b` componentwise.
pub fn axpy<F: Field, const N: usize>(a: &[F; N], s: &F, b: &[F; N]) -> [F; N] {
    array::from_fn(|i| a[i].clone() + s.clone() * b[i].clone())
}

pub fn scale<F: Field, const N: usize>(s: &F, a: &[F; N]) -> [F; N] {
    array::from_fn(|i| s.clone() * a[i].clone())
}

/// Whether two nonzero vectors span the same 1-dimensional subspace.
pub fn proportional<F: Field>(a: &[F], b: &[F]) -> bool {
    let Some(k) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[k].is_zero() {
        return false;
    }
    a.iter()
        .zip(b)
        .all(|(x, y)| x.clone() * b[k].clone() == y.clone() * a[k].clone())
}

/// A square matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<F, const N: usize> {
    rows: [[F; N]; N],
}

impl<F: Field, const N: usize> Matrix<F, N> {
    pub fn from_rows(rows: [[F; N]; N]) -> Self {
        Matrix { rows }
    }

    pub fn identity_like(sample: &F) -> Self {
        let (z, o) = (sample.zero_like(), sample.one_like());
        Matrix {
            rows: array::from_fn(|i| {
                array::from_fn(|j| if i == j { o.clone() } else { z.clone() })
            }),
        }
    }

    pub fn diagonal(d: [F; N]) -> Self {
        let z = d[0].zero_like();
        Matrix {
            rows: array::from_fn(|i| {
                array::from_fn(|j| if i == j { d[i].clone() } else { z.clone() })
            }),
        }
    }

    pub fn rows(&self) -> &[[F; N]; N] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        Matrix {
            rows: array::from_fn(|i| array::from_fn(|j| self.rows[j][i].clone())),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Matrix {
            rows: array::from_fn(|i| {
                array::from_fn(|j| {
                    (0..N)
                        .map(|k| self.rows[i][k].clone() * o.rows[k][j].clone())
                        .reduce(|a, b| a + b)
                        .unwrap()
                })
            }),
        }
    }

    pub fn mul_vec(&self, v: &[F; N]) -> [F; N] {
        array::from_fn(|i| dot(&self.rows[i], v))
    }

    pub fn scaled(&self, s: &F) -> Self {
        Matrix {
            rows: array::from_fn(|i| scale(s, &self.rows[i])),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Matrix {
            rows: array::from_fn(|i| {
                array::from_fn(|j| self.rows[i][j].clone() + o.rows[i][j].clone())
            }),
        }
    }

    fn as_vecs(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|r| r.to_vec()).collect()
    }

    pub fn det(&self) -> F {
        det(&self.as_vecs())
    }

    pub fn rank(&self) -> usize {
        rank(&self.as_vecs())
    }

    /// Classical adjoint, so that `M · adj(M) = det(M) · I`.
    pub fn adjugate(&self) -> Self {
        let cof = |i: usize, j: usize| -> F {
            let minor: Vec<Vec<F>> = (0..N)
                .filter(|&r| r != i)
                .map(|r| {
                    (0..N)
                        .filter(|&c| c != j)
                        .map(|c| self.rows[r][c].clone())
                        .collect()
                })
                .collect();
            let d = if N == 1 {
                self.rows[0][0].one_like()
            } else {
                det(&minor)
            };
            if (i + j).is_multiple_of(2) {
                d
            } else {
                -d
            }
        };
        Matrix {
            rows: array::from_fn(|i| array::from_fn(|j| cof(j, i))),
        }
    }

    pub fn flatten(&self) -> Vec<F> {
        self.rows.iter().flat_map(|r| r.iter().cloned()).collect()
    }

    pub fn from_flat(v: &[F]) -> Option<Self> {
        if v.len() != N * N {
            return None;
        }
        Some(Matrix {
            rows: array::from_fn(|i| array::from_fn(|j| v[i * N + j].clone())),
        })
    }

    /// Equality up to a nonzero scalar factor.
    pub fn proportional_to(&self, o: &Self) -> bool {
        proportional(&self.flatten(), &o.flatten())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// `vᵀ M w`.
    pub fn bilinear(&self, v: &[F; N], w: &[F; N]) -> F {
        dot(v, &self.mul_vec(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, Fp, Rational};

    fn m3(v: [[i64; 3]; 3]) -> Matrix<Rational, 3> {
        Matrix::from_rows(v.map(|r| r.map(|x| q(x, 1))))
    }

    #[test]
    fn determinant_and_adjugate() {
        let a = m3([[2, 0, 1], [1, 3, 2], [1, 1, 2]]);
        assert_eq!(a.det(), q(6, 1));
        let prod = a.mul(&a.adjugate());
        assert_eq!(prod, Matrix::identity_like(&q(0, 1)).scaled(&a.det()));
    }

    #[test]
    fn nullspace_of_rank_two() {
        let rows = vec![
            vec![q(1, 1), q(2, 1), q(3, 1)],
            vec![q(2, 1), q(4, 1), q(7, 1)],
        ];
        let ns = nullspace(&rows);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert!(dot(r, &ns[0]).is_zero());
        }
    }

    #[test]
    fn span_solution() {
        let basis = vec![
            vec![q(1, 1), q(0, 1), q(1, 1)],
            vec![q(0, 1), q(1, 1), q(1, 1)],
        ];
        let x = solve_in_span(&basis, &[q(2, 1), q(3, 1), q(5, 1)]).unwrap();
        assert_eq!(x, vec![q(2, 1), q(3, 1)]);
        assert!(solve_in_span(&basis, &[q(1, 1), q(0, 1), q(0, 1)]).is_none());
    }

    #[test]
    fn prime_field_determinant() {
        let f = |x| Fp::new(x, 5).unwrap();
        let a = Matrix::from_rows([[f(1), f(2)], [f(3), f(4)]]);
        assert_eq!(a.det(), f(-2));
    }
}
