//! Two-phase primal simplex over exact rationals.
//!
//! Solves `min c.x  s.t.  A x = b, x >= 0`. Bland's rule picks both the
//! entering and the leaving variable, so the method terminates without any
//! perturbation even on degenerate bases. Artificial columns may not
//! re-enter the basis once they leave; redundant rows left behind by a
//! degenerate phase 1 are dropped.
//!
//! Problem sizes here are tiny (a few dozen variables), so the tableau is
//! dense and every entry is a [`Rat`].

use num_traits::{One, Zero};

use crate::linalg::Matrix;
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rat, x: Vec<Rat> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<(Rat, Vec<Rat>)> {
        match self {
            LpOutcome::Optimal { value, x } => Some((value, x)),
            _ => None,
        }
    }
}

#[derive(PartialEq)]
enum PivotEnd {
    Optimal,
    Unbounded,
}

struct Tableau {
    /// columns per row, excluding the trailing RHS entry
    width: usize,
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
}

impl Tableau {
    /// Eliminates basic columns from a freshly built cost row, turning it
    /// into reduced costs with `-value` in the RHS slot.
    fn reduce_cost(&self, cost: &mut [Rat]) {
        debug_assert_eq!(cost.len(), self.width + 1);
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let f = cost[b].clone();
            if !f.is_zero() {
                for (ck, rk) in cost.iter_mut().zip(row) {
                    *ck -= &f * rk;
                }
            }
        }
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let inv = self.rows[r][col].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][col].clone();
            if f.is_zero() {
                continue;
            }
            for k in 0..=self.width {
                let v = &f * &self.rows[r][k];
                self.rows[i][k] -= v;
            }
        }
        self.basis[r] = col;
    }

    /// Runs Bland-rule pivots until no entering column below `enter_limit`
    /// has negative reduced cost, updating `cost` alongside the rows.
    fn pivot_to_optimum(&mut self, cost: &mut [Rat], enter_limit: usize) -> PivotEnd {
        loop {
            let Some(col) = (0..enter_limit).find(|&j| cost[j] < Rat::zero()) else {
                return PivotEnd::Optimal;
            };
            let mut leave: Option<usize> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col] <= Rat::zero() {
                    continue;
                }
                let better = match leave {
                    None => true,
                    Some(l) => {
                        // compare rhs_i / a_i against rhs_l / a_l with both
                        // denominators positive
                        let lhs = &self.rows[i][self.width] * &self.rows[l][col];
                        let rhs = &self.rows[l][self.width] * &self.rows[i][col];
                        lhs < rhs || (lhs == rhs && self.basis[i] < self.basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
            let Some(r) = leave else {
                return PivotEnd::Unbounded;
            };
            self.pivot(r, col);
            let f = cost[col].clone();
            if !f.is_zero() {
                for (ck, rk) in cost.iter_mut().zip(&self.rows[r]) {
                    *ck -= &f * rk;
                }
            }
        }
    }
}

/// Minimizes `c.x` subject to `A x = b`, `x >= 0`.
pub fn solve_standard(a: &Matrix, b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.rows();
    let n = a.cols();
    assert_eq!(b.len(), m);
    assert_eq!(c.len(), n);

    // artificial start: one unit column per row, b normalized nonnegative
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i] < Rat::zero();
        let mut row: Vec<Rat> = Vec::with_capacity(width + 1);
        for j in 0..n {
            let v = a.at(i, j).clone();
            row.push(if flip { -v } else { v });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        rows.push(row);
    }
    let mut t = Tableau {
        width,
        rows,
        basis: (n..width).collect(),
    };

    let mut cost = vec![Rat::zero(); width + 1];
    for slot in &mut cost[n..width] {
        *slot = Rat::one();
    }
    t.reduce_cost(&mut cost);
    if t.pivot_to_optimum(&mut cost, n) == PivotEnd::Unbounded {
        unreachable!("phase 1 objective is bounded below by zero");
    }
    if !cost[width].is_zero() {
        return LpOutcome::Infeasible;
    }

    // pivot surviving artificials out; a row with no eligible pivot is a
    // redundant constraint and goes away
    let mut i = 0;
    while i < t.basis.len() {
        if t.basis[i] < n {
            i += 1;
            continue;
        }
        match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
            Some(j) => {
                t.pivot(i, j);
                i += 1;
            }
            None => {
                t.rows.remove(i);
                t.basis.remove(i);
            }
        }
    }
    for row in &mut t.rows {
        row.drain(n..width);
    }
    t.width = n;

    let mut cost = vec![Rat::zero(); n + 1];
    cost[..n].clone_from_slice(c);
    t.reduce_cost(&mut cost);
    match t.pivot_to_optimum(&mut cost, n) {
        PivotEnd::Unbounded => LpOutcome::Unbounded,
        PivotEnd::Optimal => {
            let mut x = vec![Rat::zero(); n];
            for (row, &b) in t.rows.iter().zip(&t.basis) {
                x[b] = row[n].clone();
            }
            LpOutcome::Optimal {
                value: -cost[n].clone(),
                x,
            }
        }
    }
}

/// Maximizes `c.x` subject to `A x = b`, `x >= 0`.
pub fn maximize_standard(a: &Matrix, b: &[Rat], c: &[Rat]) -> LpOutcome {
    let neg: Vec<Rat> = c.iter().map(|v| -v).collect();
    match solve_standard(a, b, &neg) {
        LpOutcome::Optimal { value, x } => LpOutcome::Optimal { value: -value, x },
        other => other,
    }
}

/// Phase-1 feasibility of `A x = b, x >= 0`.
pub fn feasible_point(a: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    let c = vec![Rat::zero(); a.cols()];
    solve_standard(a, b, &c).optimal().map(|(_, x)| x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn picks_the_cheaper_vertex() {
        // min x + y  s.t.  x + 2y = 3
        let a = Matrix::from_rows(vec![vec![rat_int(1), rat_int(2)]]);
        let out = solve_standard(&a, &[rat_int(3)], &[rat_int(1), rat_int(1)]);
        let (value, x) = out.optimal().unwrap();
        assert_eq!(value, rat(3, 2));
        assert_eq!(x, vec![rat_int(0), rat(3, 2)]);
    }

    #[test]
    fn detects_infeasibility() {
        let a = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ]);
        let out = solve_standard(&a, &[rat_int(1), rat_int(2)], &[rat_int(0), rat_int(0)]);
        assert_eq!(out, LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unboundedness() {
        let a = Matrix::zeros(0, 1);
        let out = solve_standard(&a, &[], &[rat_int(-1)]);
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn box_maximum_via_slacks() {
        // max x + y  s.t.  x <= 1, y <= 1  (slacks s1, s2)
        let a = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(0), rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1), rat_int(0), rat_int(1)],
        ]);
        let c = [rat_int(1), rat_int(1), rat_int(0), rat_int(0)];
        let (value, x) = maximize_standard(&a, &[rat_int(1), rat_int(1)], &c)
            .optimal()
            .unwrap();
        assert_eq!(value, rat_int(2));
        assert_eq!(&x[..2], &[rat_int(1), rat_int(1)]);
    }

    #[test]
    fn survives_redundant_rows() {
        let a = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(2), rat_int(2)],
            vec![rat_int(1), rat_int(0)],
        ]);
        let b = [rat_int(1), rat_int(2), rat(1, 3)];
        let (value, x) = solve_standard(&a, &b, &[rat_int(0), rat_int(1)])
            .optimal()
            .unwrap();
        assert_eq!(value, rat(2, 3));
        assert_eq!(x, vec![rat(1, 3), rat(2, 3)]);
    }

    #[test]
    fn negative_rhs_is_normalized() {
        // -x - y = -1 is x + y = 1
        let a = Matrix::from_rows(vec![vec![rat_int(-1), rat_int(-1)]]);
        let (value, _) = solve_standard(&a, &[rat_int(-1)], &[rat_int(1), rat_int(2)])
            .optimal()
            .unwrap();
        assert_eq!(value, rat_int(1));
    }

    #[test]
    fn feasibility_probe() {
        let a = Matrix::from_rows(vec![vec![rat_int(1), rat_int(1)]]);
        assert!(feasible_point(&a, &[rat_int(1)]).is_some());
        assert!(feasible_point(&a, &[rat_int(-1)]).is_none());
    }
}
