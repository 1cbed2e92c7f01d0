//! State polytopes: exact H-representation, vertex enumeration, simplex
//! certification, and barycentric representation of states and Jordan
//! measures by finitely supported weightings over the extreme states.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{CertifiedAlgebra, Elem};
use crate::error::{Error, Result};
use crate::linalg::{affine_rank, affinely_independent, dot, solve_affine, Matrix};
use crate::lp::{feasible_point, maximize_standard, solve_standard};
use crate::measure::{jordan_decompose, SignedMeasure};
use crate::rat::{rat_string, Rat};
use crate::riesz::has_rdp;

/// `coeffs . x = rhs` for equalities, `coeffs . x >= rhs` for inequalities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

impl LinearConstraint {
    fn holds_eq(&self, x: &[Rat]) -> bool {
        dot(&self.coeffs, x) == self.rhs
    }

    fn holds_ge(&self, x: &[Rat]) -> bool {
        dot(&self.coeffs, x) >= self.rhs
    }
}

#[derive(Debug, Clone)]
pub struct StatePolytope {
    pub ambient_dim: usize,
    /// additivity relations, `m(0) = 0`, and the normalization `m(1) = 1`
    pub equalities: Vec<LinearConstraint>,
    /// positivity `m(a) >= 0`, one row per element
    pub inequalities: Vec<LinearConstraint>,
    /// extreme states, sorted lexicographically by value vector
    pub vertices: Vec<SignedMeasure>,
    pub affinely_independent: bool,
}

impl StatePolytope {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Affine dimension of the polytope itself.
    pub fn dim(&self) -> usize {
        let pts: Vec<Vec<Rat>> = self.vertices.iter().map(|v| v.values().to_vec()).collect();
        affine_rank(&pts)
    }

    pub fn contains(&self, m: &SignedMeasure) -> bool {
        m.values().len() == self.ambient_dim
            && self.equalities.iter().all(|c| c.holds_eq(m.values()))
            && self.inequalities.iter().all(|c| c.holds_ge(m.values()))
    }
}

fn unit_row(n: usize, at: Elem) -> Vec<Rat> {
    let mut row = vec![Rat::zero(); n];
    row[at] = Rat::one();
    row
}

/// Assembles the exact H-representation from the addition table and
/// enumerates its vertices as basic feasible solutions.
pub fn compute_state_space(alg: &CertifiedAlgebra) -> StatePolytope {
    let n = alg.size();
    let mut equalities = Vec::new();
    equalities.push(LinearConstraint {
        coeffs: unit_row(n, alg.zero()),
        rhs: Rat::zero(),
    });
    equalities.push(LinearConstraint {
        coeffs: unit_row(n, alg.one()),
        rhs: Rat::one(),
    });
    for a in 0..n {
        for b in 0..n {
            let Some(s) = alg.add(a, b) else { continue };
            let mut coeffs = vec![Rat::zero(); n];
            coeffs[a] += Rat::one();
            coeffs[b] += Rat::one();
            coeffs[s] -= Rat::one();
            equalities.push(LinearConstraint {
                coeffs,
                rhs: Rat::zero(),
            });
        }
    }
    equalities.sort();
    equalities.dedup();
    let inequalities: Vec<LinearConstraint> = (0..n)
        .map(|a| LinearConstraint {
            coeffs: unit_row(n, a),
            rhs: Rat::zero(),
        })
        .collect();

    let vertices = enumerate_vertices(&equalities, &inequalities, n);
    let pts: Vec<Vec<Rat>> = vertices.iter().map(|v| v.values().to_vec()).collect();
    let affinely_independent = affinely_independent(&pts);
    StatePolytope {
        ambient_dim: n,
        equalities,
        inequalities,
        vertices,
        affinely_independent,
    }
}

/// Solves the equality system once, then scans every d-subset of the
/// inequality rows (d = remaining degrees of freedom) for basic feasible
/// solutions. The polytope is bounded (states live in [0,1] pointwise), so
/// this finds every vertex.
fn enumerate_vertices(
    equalities: &[LinearConstraint],
    inequalities: &[LinearConstraint],
    n: usize,
) -> Vec<SignedMeasure> {
    let a = Matrix::from_rows(equalities.iter().map(|c| c.coeffs.clone()).collect());
    let b: Vec<Rat> = equalities.iter().map(|c| c.rhs.clone()).collect();
    let Some(solution) = solve_affine(&a, &b) else {
        return Vec::new();
    };
    let d = solution.nullspace.len();

    // inequality rows rewritten over the free coordinates:
    // row_i . lambda >= -p_i
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            solution
                .nullspace
                .iter()
                .map(|basis| basis[i].clone())
                .collect()
        })
        .collect();
    let feasible = |x: &[Rat]| {
        inequalities.iter().all(|c| c.holds_ge(x))
    };

    let subsets: Vec<Vec<usize>> = (0..n).combinations(d).collect();
    let mut points: Vec<Vec<Rat>> = subsets
        .par_iter()
        .filter_map(|subset| {
            let sys = Matrix::from_rows(subset.iter().map(|&i| rows[i].clone()).collect());
            let rhs: Vec<Rat> = subset
                .iter()
                .map(|&i| -solution.particular[i].clone())
                .collect();
            let tight = solve_affine(&sys, &rhs)?;
            if !tight.nullspace.is_empty() {
                return None; // tight rows not independent: no unique point
            }
            let x = solution.point(&tight.particular);
            feasible(&x).then_some(x)
        })
        .collect();
    points.sort();
    points.dedup();
    points
        .into_iter()
        .map(SignedMeasure::from_values_unchecked)
        .collect()
}

#[derive(Debug, Clone)]
pub struct SimplexReport {
    pub is_choquet_simplex: bool,
    /// Extreme boundaries of finite polytopes are closed, so the Bauer and
    /// Choquet verdicts coincide here.
    pub is_bauer: bool,
    /// Nontrivial affine dependency among the vertices when not a simplex:
    /// coefficients summing to zero with vanishing weighted vertex sum.
    pub dependency_witness: Option<Vec<Rat>>,
}

pub fn simplex_report(p: &StatePolytope) -> Result<SimplexReport> {
    if p.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let simplex = p.affinely_independent;
    let dependency_witness = if simplex {
        None
    } else {
        Some(affine_dependency(&p.vertices))
    };
    Ok(SimplexReport {
        is_choquet_simplex: simplex,
        is_bauer: simplex,
        dependency_witness,
    })
}

/// Nonzero `c` with `sum c_i = 0` and `sum c_i v_i = 0`.
fn affine_dependency(vertices: &[SignedMeasure]) -> Vec<Rat> {
    let k = vertices.len();
    let dim = vertices[0].values().len();
    let mut rows: Vec<Vec<Rat>> = (0..dim)
        .map(|x| vertices.iter().map(|v| v.value(x).clone()).collect())
        .collect();
    rows.push(vec![Rat::one(); k]);
    let rhs = vec![Rat::zero(); dim + 1];
    let sol = solve_affine(&Matrix::from_rows(rows), &rhs)
        .expect("homogeneous system is always consistent");
    sol.nullspace
        .into_iter()
        .next()
        .expect("affinely dependent vertices admit a dependency")
}

/// Finitely supported signed weighting over states.
#[derive(Debug, Clone)]
pub struct DiscreteMeasure {
    pub support: Vec<SignedMeasure>,
    pub weights: Vec<Rat>,
}

impl DiscreteMeasure {
    pub fn barycenter(&self, ambient_dim: usize) -> Vec<Rat> {
        let mut acc = vec![Rat::zero(); ambient_dim];
        for (s, w) in self.support.iter().zip(&self.weights) {
            for (a, v) in acc.iter_mut().zip(s.values()) {
                *a += w * v;
            }
        }
        acc
    }

    pub fn total_weight(&self) -> Rat {
        self.weights.iter().cloned().sum()
    }

    pub fn is_probability(&self) -> bool {
        self.weights.iter().all(|w| !w.is_negative()) && self.total_weight() == Rat::one()
    }

    /// Drops zero-weight support points.
    pub fn pruned(self) -> DiscreteMeasure {
        let (support, weights) = self
            .support
            .into_iter()
            .zip(self.weights)
            .filter(|(_, w)| !w.is_zero())
            .unzip();
        DiscreteMeasure { support, weights }
    }
}

#[derive(Debug, Clone)]
pub struct Barycentric {
    pub representation: DiscreteMeasure,
    pub unique: bool,
    /// Second, distinct representation when one exists.
    pub alternative: Option<DiscreteMeasure>,
}

/// Weight system over the vertex list: rows are the ambient coordinates plus
/// the normalization `sum w = 1`.
fn weight_system(p: &StatePolytope, target: &[Rat]) -> (Matrix, Vec<Rat>) {
    let k = p.vertices.len();
    let mut rows: Vec<Vec<Rat>> = (0..p.ambient_dim)
        .map(|x| p.vertices.iter().map(|v| v.value(x).clone()).collect())
        .collect();
    rows.push(vec![Rat::one(); k]);
    let mut rhs: Vec<Rat> = target.to_vec();
    rhs.push(Rat::one());
    (Matrix::from_rows(rows), rhs)
}

/// Expresses a state as a convex combination of the extreme states.
///
/// For a simplex the weights are unique outright. Otherwise every weight
/// coordinate is pushed to both of its extremes; a second solution found
/// along the way is returned as a non-uniqueness certificate.
pub fn barycentric_represent(p: &StatePolytope, s: &SignedMeasure) -> Result<Barycentric> {
    if p.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    if s.values().len() != p.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim,
            got: s.values().len(),
        });
    }
    if !s.is_positive() {
        return Err(Error::NotAState("negative value".into()));
    }
    if !p.contains(s) {
        return Err(Error::NotAState(
            "values violate the state polytope constraints".into(),
        ));
    }
    let (a, b) = weight_system(p, s.values());
    let Some(w0) = feasible_point(&a, &b) else {
        return Err(Error::NotAState(
            "state is not a convex combination of the vertices".into(),
        ));
    };
    let representation = DiscreteMeasure {
        support: p.vertices.clone(),
        weights: w0.clone(),
    };
    debug_assert_eq!(representation.barycenter(p.ambient_dim), s.values());

    if p.affinely_independent {
        return Ok(Barycentric {
            representation,
            unique: true,
            alternative: None,
        });
    }
    let k = p.vertices.len();
    for i in 0..k {
        let mut objective = vec![Rat::zero(); k];
        objective[i] = Rat::one();
        for maximize in [false, true] {
            let outcome = if maximize {
                maximize_standard(&a, &b, &objective)
            } else {
                solve_standard(&a, &b, &objective)
            };
            if let Some((_, w)) = outcome.optimal() {
                if w != w0 {
                    let alternative = DiscreteMeasure {
                        support: p.vertices.clone(),
                        weights: w,
                    };
                    return Ok(Barycentric {
                        representation,
                        unique: false,
                        alternative: Some(alternative),
                    });
                }
            }
        }
    }
    Ok(Barycentric {
        representation,
        unique: true,
        alternative: None,
    })
}

/// Canonical signed representation `alpha1 * mu_{s1} - alpha2 * mu_{s2}` of a
/// Jordan measure over the vertices of a simplex state space.
pub fn represent_jordan(
    alg: &CertifiedAlgebra,
    p: &StatePolytope,
    m: &SignedMeasure,
) -> Result<DiscreteMeasure> {
    if p.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    if !p.affinely_independent {
        return Err(Error::NotASimplex);
    }
    let pair = jordan_decompose(alg, m)?;
    let mut weights = vec![Rat::zero(); p.vertices.len()];
    if let Some(s1) = &pair.s1 {
        let rep = barycentric_represent(p, s1)?;
        for (acc, w) in weights.iter_mut().zip(&rep.representation.weights) {
            *acc += &pair.alpha1 * w;
        }
    }
    if let Some(s2) = &pair.s2 {
        let rep = barycentric_represent(p, s2)?;
        for (acc, w) in weights.iter_mut().zip(&rep.representation.weights) {
            *acc -= &pair.alpha2 * w;
        }
    }
    let result = DiscreteMeasure {
        support: p.vertices.clone(),
        weights,
    }
    .pruned();
    // reconstruction m(a) = sum_i w_i * v_i(a) must be exact
    let bary = result.barycenter(p.ambient_dim);
    if let Some(at) = (0..p.ambient_dim).find(|&x| bary[x] != *m.value(x)) {
        return Err(Error::EquivalenceViolation(format!(
            "signed representation reconstructs {} instead of {} at element {at}",
            rat_string(&bary[at]),
            rat_string(m.value(at)),
        )));
    }
    Ok(result)
}

/// Barycenter equality: affine functions separate exactly the barycenters in
/// finite dimension.
pub fn choquet_equivalent(p: &StatePolytope, mu: &DiscreteMeasure, nu: &DiscreteMeasure) -> bool {
    mu.barycenter(p.ambient_dim) == nu.barycenter(p.ambient_dim)
}

/// The evaluation functional `a-hat(s) = s(a)`.
#[derive(Debug, Clone, Copy)]
pub struct AffEval {
    pub element: Elem,
}

pub fn aff_eval(alg: &CertifiedAlgebra, a: Elem) -> AffEval {
    assert!(a < alg.size());
    AffEval { element: a }
}

impl AffEval {
    pub fn at(&self, s: &SignedMeasure) -> Rat {
        s.value(self.element).clone()
    }
}

#[derive(Debug, Clone)]
pub struct SuiteEntry {
    pub name: String,
    pub rdp: bool,
    pub vertex_count: usize,
    /// theorem hypothesis: RDP and a nonempty state space
    pub applicable: bool,
    pub is_simplex: bool,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
    pub falsifications: usize,
}

/// RDP plus a nonempty state space must yield a simplex; a falsification
/// would contradict a theorem and therefore signals an implementation bug.
pub fn rdp_implies_simplex_suite(corpus: &[(String, CertifiedAlgebra)]) -> SuiteReport {
    let entries: Vec<SuiteEntry> = corpus
        .par_iter()
        .map(|(name, alg)| {
            let rdp = has_rdp(alg);
            let polytope = compute_state_space(alg);
            let applicable = rdp && !polytope.is_empty();
            let is_simplex = polytope.affinely_independent && !polytope.is_empty();
            SuiteEntry {
                name: name.clone(),
                rdp,
                vertex_count: polytope.vertices.len(),
                applicable,
                is_simplex,
                passed: !applicable || is_simplex,
            }
        })
        .collect();
    let falsifications = entries.iter().filter(|e| !e.passed).count();
    SuiteReport {
        entries,
        falsifications,
    }
}
