//! Dense exact-rational linear algebra: just enough Gaussian elimination to
//! solve affine systems and compute ranks. No pivoting heuristics are needed
//! since arithmetic is exact; the first nonzero entry wins.

use num_traits::{One, Zero};

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn scale_row(&mut self, i: usize, f: &Rat) {
        for k in 0..self.cols {
            let idx = i * self.cols + k;
            if !self.data[idx].is_zero() {
                self.data[idx] *= f;
            }
        }
    }

    /// row[i] -= f * row[j]
    fn eliminate(&mut self, i: usize, j: usize, f: &Rat) {
        if f.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let v = &self.data[j * self.cols + k] * f;
            self.data[i * self.cols + k] -= v;
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.at(r, c).recip();
            self.scale_row(r, &inv);
            for i in 0..self.rows {
                if i != r {
                    let f = self.at(i, c).clone();
                    self.eliminate(i, r, &f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }
}

/// Solution set of `A x = b` described as `particular + span(nullspace)`.
#[derive(Debug, Clone)]
pub struct AffineSolution {
    pub particular: Vec<Rat>,
    /// Basis of the homogeneous solution space, one vector per free column.
    pub nullspace: Vec<Vec<Rat>>,
}

impl AffineSolution {
    /// Point reached from the particular solution with the given free
    /// coordinates.
    pub fn point(&self, coeffs: &[Rat]) -> Vec<Rat> {
        assert_eq!(coeffs.len(), self.nullspace.len());
        let mut p = self.particular.clone();
        for (c, basis) in coeffs.iter().zip(&self.nullspace) {
            for (pi, bi) in p.iter_mut().zip(basis) {
                *pi += c * bi;
            }
        }
        p
    }
}

/// Solves `A x = b` exactly. Returns `None` when the system is inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Rat]) -> Option<AffineSolution> {
    assert_eq!(a.rows(), b.len());
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug.set(i, j, a.at(i, j).clone());
        }
        aug.set(i, n, b[i].clone());
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&n) {
        return None; // a row reads 0 = 1
    }
    let mut particular = vec![Rat::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug.at(r, n).clone();
    }
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut nullspace = Vec::new();
    for free in 0..n {
        if is_pivot[free] {
            continue;
        }
        let mut vec_ = vec![Rat::zero(); n];
        vec_[free] = Rat::one();
        for (r, &c) in pivots.iter().enumerate() {
            vec_[c] = -aug.at(r, free).clone();
        }
        nullspace.push(vec_);
    }
    Some(AffineSolution {
        particular,
        nullspace,
    })
}

pub fn dot(x: &[Rat], y: &[Rat]) -> Rat {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Rank of the set of points viewed as an affine family (differences from the
/// first point). Affine independence of k points means affine rank k-1.
pub fn affine_rank(points: &[Vec<Rat>]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        return 0;
    }
    Matrix::from_rows(diffs).rank()
}

pub fn affinely_independent(points: &[Vec<Rat>]) -> bool {
    points.len() <= 1 || affine_rank(points) == points.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn rref_identifies_pivots() {
        let mut m = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(2), rat_int(4), rat_int(6)],
            vec![rat_int(0), rat_int(1), rat_int(1)],
        ]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.at(0, 2), &rat_int(1));
        assert_eq!(m.at(1, 2), &rat_int(1));
    }

    #[test]
    fn solve_unique_system() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let a = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(-1)],
        ]);
        let sol = solve_affine(&a, &[rat_int(3), rat_int(1)]).unwrap();
        assert_eq!(sol.particular, vec![rat_int(2), rat_int(1)]);
        assert!(sol.nullspace.is_empty());
    }

    #[test]
    fn solve_underdetermined_system() {
        // x + y + z = 1
        let a = Matrix::from_rows(vec![vec![rat_int(1), rat_int(1), rat_int(1)]]);
        let sol = solve_affine(&a, &[rat_int(1)]).unwrap();
        assert_eq!(sol.nullspace.len(), 2);
        // every generated point must still satisfy the equation
        let p = sol.point(&[rat(1, 3), rat(-2, 7)]);
        assert_eq!(p.iter().sum::<Rat>(), rat_int(1));
    }

    #[test]
    fn inconsistent_system_is_detected() {
        let a = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(2), rat_int(2)],
        ]);
        assert!(solve_affine(&a, &[rat_int(1), rat_int(3)]).is_none());
    }

    #[test]
    fn affine_independence_of_simplex_vertices() {
        let pts = vec![
            vec![rat_int(0), rat_int(0)],
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
        ];
        assert!(affinely_independent(&pts));
        let mut pts4 = pts.clone();
        pts4.push(vec![rat(1, 2), rat(1, 2)]);
        assert!(!affinely_independent(&pts4));
    }
}
