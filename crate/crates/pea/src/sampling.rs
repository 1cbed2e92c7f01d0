//! Seeded generators for measures: signed, positive, states, and points of
//! an interval [0, m]. Everything is driven by an explicit seed so test runs
//! replay exactly.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::CertifiedAlgebra;
use crate::error::Result;
use crate::linalg::{solve_affine, Matrix};
use crate::measure::{meet, SignedMeasure};
use crate::rat::{rat, Rat};
use crate::state::StatePolytope;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in [-bound, bound] and a small denominator.
pub fn small_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=4);
    rat(num, den)
}

fn small_nonneg_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let num = rng.gen_range(0..=bound);
    let den = rng.gen_range(1..=4);
    rat(num, den)
}

/// Basis of the linear space of additive assignments, from the homogeneous
/// additivity system.
pub fn additive_basis(alg: &CertifiedAlgebra) -> Vec<Vec<Rat>> {
    let n = alg.size();
    let mut rows = Vec::new();
    let mut at_zero = vec![Rat::zero(); n];
    at_zero[alg.zero()] = Rat::one();
    rows.push(at_zero);
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = alg.add(a, b) {
                let mut row = vec![Rat::zero(); n];
                row[a] += Rat::one();
                row[b] += Rat::one();
                row[c] -= Rat::one();
                rows.push(row);
            }
        }
    }
    let rhs = vec![Rat::zero(); rows.len()];
    solve_affine(&Matrix::from_rows(rows), &rhs)
        .expect("homogeneous system is consistent")
        .nullspace
}

fn combine(n: usize, basis: &[Vec<Rat>], coeffs: &[Rat]) -> Vec<Rat> {
    let mut vals = vec![Rat::zero(); n];
    for (c, v) in coeffs.iter().zip(basis) {
        for (slot, x) in vals.iter_mut().zip(v) {
            *slot += c * x;
        }
    }
    vals
}

pub fn random_signed_measures(
    alg: &CertifiedAlgebra,
    count: usize,
    seed: u64,
) -> Vec<SignedMeasure> {
    let basis = additive_basis(alg);
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let coeffs: Vec<Rat> = (0..basis.len()).map(|_| small_rat(&mut rng, 3)).collect();
            SignedMeasure::new(alg, combine(alg.size(), &basis, &coeffs))
                .expect("combinations of additive maps are additive")
        })
        .collect()
}

/// Nonnegative combinations of the extreme states; these run over the whole
/// cone of positive measures.
pub fn random_positive_measures(
    alg: &CertifiedAlgebra,
    polytope: &StatePolytope,
    count: usize,
    seed: u64,
) -> Vec<SignedMeasure> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let mut m = SignedMeasure::zero_measure(alg);
            for v in &polytope.vertices {
                m = m.plus(&v.scale(&small_nonneg_rat(&mut rng, 3)));
            }
            m
        })
        .collect()
}

/// Convex combination of the extreme states with strictly positive weights;
/// None when there are no states.
pub fn random_state(polytope: &StatePolytope, rng: &mut ChaCha8Rng) -> Option<SignedMeasure> {
    let vertices = &polytope.vertices;
    if vertices.is_empty() {
        return None;
    }
    let raw: Vec<Rat> = (0..vertices.len())
        .map(|_| rat(rng.gen_range(1..=8), 1))
        .collect();
    let total = raw.iter().fold(Rat::zero(), |acc, w| acc + w);
    let mut s = vertices[0].scale(&(&raw[0] / &total));
    for (v, w) in vertices.iter().zip(&raw).skip(1) {
        s = s.plus(&v.scale(&(w / &total)));
    }
    Some(s)
}

/// Pairs inside [0, unit], produced by clamping random positive measures
/// with the lattice meet. Needs RDP for the meet.
pub fn sample_interval_pairs(
    alg: &CertifiedAlgebra,
    polytope: &StatePolytope,
    unit: &SignedMeasure,
    count: usize,
    seed: u64,
) -> Result<Vec<(SignedMeasure, SignedMeasure)>> {
    let raw = random_positive_measures(alg, polytope, 2 * count, seed);
    let mut pairs = Vec::with_capacity(count);
    for chunk in raw.chunks_exact(2) {
        let s = meet(alg, &chunk[0], unit)?;
        let t = meet(alg, &chunk[1], unit)?;
        pairs.push((s, t));
    }
    Ok(pairs)
}
