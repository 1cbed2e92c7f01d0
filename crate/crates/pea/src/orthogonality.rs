//! Orthogonality of states: the four equivalent conditions (disjoint
//! generated faces, meet zero, join equals sum, and epsilon-splittability of
//! every element) evaluated independently and cross-checked.

use num_traits::Zero;

use crate::algebra::CertifiedAlgebra;
use crate::error::{Error, Result};
use crate::measure::{join, meet, SignedMeasure};
use crate::rat::{rat, Rat};
use crate::riesz::has_rdp;
use crate::state::{compute_state_space, StatePolytope};

pub const DEFAULT_EPSILON_SCHEDULE: [(i64, i64); 3] = [(1, 2), (1, 4), (1, 8)];

/// Converse search floor: when the meet is nonzero, some epsilon at or above
/// 2^-10 must already defeat the splitting condition.
const CONVERSE_DEPTH: u32 = 10;

#[derive(Debug, Clone)]
pub struct OrthogonalityReport {
    /// (i) the faces generated by the two states have no common state
    pub faces_disjoint: bool,
    /// (ii) the lattice meet vanishes
    pub meet_is_zero: bool,
    /// (iii) the lattice join is the sum
    pub join_is_sum: bool,
    /// (iv) outcome per scheduled epsilon
    pub epsilon_schedule: Vec<Rat>,
    pub epsilon_outcomes: Vec<bool>,
    /// epsilon defeating the splitting condition when the meet is nonzero
    pub failing_epsilon: Option<Rat>,
    pub orthogonal: bool,
}

pub fn default_schedule() -> Vec<Rat> {
    DEFAULT_EPSILON_SCHEDULE
        .iter()
        .map(|&(p, q)| rat(p, q))
        .collect()
}

/// Evaluates all four conditions and insists that they agree; a disagreement
/// would contradict their proven equivalence and is reported as an error,
/// not a result.
pub fn orthogonality_report(
    alg: &CertifiedAlgebra,
    s1: &SignedMeasure,
    s2: &SignedMeasure,
    schedule: &[Rat],
) -> Result<OrthogonalityReport> {
    if !has_rdp(alg) {
        return Err(Error::RdpRequired);
    }
    for s in [s1, s2] {
        if !s.is_state(alg) {
            return Err(Error::NotAState("orthogonality is between states".into()));
        }
    }
    let polytope = compute_state_space(alg);
    let faces_disjoint = faces_disjoint(&polytope, s1, s2);

    let m = meet(alg, s1, s2)?;
    let meet_is_zero = m == SignedMeasure::zero_measure(alg);
    let join_is_sum = join(alg, s1, s2)? == s1.plus(s2);

    let epsilon_schedule = schedule.to_vec();
    let epsilon_outcomes: Vec<bool> = epsilon_schedule
        .iter()
        .map(|eps| splits_below(alg, s1, s2, eps))
        .collect();

    let failing_epsilon = if meet_is_zero {
        None
    } else {
        (1..=CONVERSE_DEPTH)
            .map(|k| rat(1, 1 << k))
            .find(|eps| !splits_below(alg, s1, s2, eps))
    };

    // the four conditions are equivalent; (iv) holds for every epsilon
    // exactly in the orthogonal case
    if faces_disjoint != meet_is_zero || join_is_sum != meet_is_zero {
        return Err(Error::EquivalenceViolation(format!(
            "faces_disjoint={faces_disjoint}, meet_is_zero={meet_is_zero}, join_is_sum={join_is_sum}"
        )));
    }
    if meet_is_zero {
        if let Some(i) = epsilon_outcomes.iter().position(|ok| !ok) {
            return Err(Error::EquivalenceViolation(format!(
                "meet is zero but splitting fails at epsilon {}",
                epsilon_schedule[i]
            )));
        }
    } else if failing_epsilon.is_none() {
        return Err(Error::EquivalenceViolation(format!(
            "meet is nonzero but splitting survives down to 2^-{CONVERSE_DEPTH}"
        )));
    }

    Ok(OrthogonalityReport {
        faces_disjoint,
        meet_is_zero,
        join_is_sum,
        epsilon_schedule,
        epsilon_outcomes,
        failing_epsilon,
        orthogonal: meet_is_zero,
    })
}

/// A vertex lies in the face generated by a state exactly when its support
/// is contained in the state's support (then a scalar multiple of the state
/// dominates it). Faces intersect iff they share a vertex.
fn faces_disjoint(polytope: &StatePolytope, s1: &SignedMeasure, s2: &SignedMeasure) -> bool {
    let support = |s: &SignedMeasure| -> Vec<bool> {
        s.values().iter().map(|v| !v.is_zero()).collect()
    };
    let sup1 = support(s1);
    let sup2 = support(s2);
    let inside = |v: &SignedMeasure, sup: &[bool]| {
        v.values()
            .iter()
            .enumerate()
            .all(|(i, x)| x.is_zero() || sup[i])
    };
    !polytope
        .vertices
        .iter()
        .any(|v| inside(v, &sup1) && inside(v, &sup2))
}

/// Condition (iv) at one epsilon: every element splits as `x = x1 + x2` with
/// `s1(x2) < eps` and `s2(x1) < eps`.
fn splits_below(alg: &CertifiedAlgebra, s1: &SignedMeasure, s2: &SignedMeasure, eps: &Rat) -> bool {
    alg.elements().all(|x| {
        (0..alg.size()).any(|x1| match alg.right_diff(x1, x) {
            Some(x2) => s1.value(x2) < eps && s2.value(x1) < eps,
            None => false,
        })
    })
}

/// Extreme states of `alg`, in vertex enumeration order.
pub fn extreme_states(alg: &CertifiedAlgebra) -> Vec<SignedMeasure> {
    compute_state_space(alg).vertices
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean, chain, direct_product, mo};
    use crate::rat::rat_int;

    #[test]
    fn distinct_extreme_states_on_boolean_are_orthogonal() {
        let b = boolean(3).unwrap();
        let vertices = extreme_states(&b);
        assert_eq!(vertices.len(), 3);
        let schedule = default_schedule();
        for i in 0..vertices.len() {
            for j in 0..vertices.len() {
                let rep =
                    orthogonality_report(&b, &vertices[i], &vertices[j], &schedule).unwrap();
                assert_eq!(rep.orthogonal, i != j, "pair ({i},{j})");
                if i != j {
                    assert!(rep.epsilon_outcomes.iter().all(|&ok| ok));
                    assert!(rep.failing_epsilon.is_none());
                } else {
                    assert!(rep.failing_epsilon.is_some());
                }
            }
        }
    }

    #[test]
    fn a_state_is_not_orthogonal_to_itself() {
        let c = chain(4).unwrap();
        let s = extreme_states(&c).pop().unwrap();
        let rep = orthogonality_report(&c, &s, &s, &default_schedule()).unwrap();
        assert!(!rep.orthogonal);
        assert!(!rep.faces_disjoint);
        assert!(!rep.meet_is_zero);
        assert!(!rep.join_is_sum);
        // meet(s, s) = s has total 1, so epsilon 1/2 already defeats splitting
        assert_eq!(rep.failing_epsilon, Some(rat(1, 2)));
    }

    #[test]
    fn product_segment_endpoints_are_orthogonal() {
        let p = direct_product(&chain(2).unwrap(), &chain(3).unwrap()).unwrap();
        let vertices = extreme_states(&p);
        assert_eq!(vertices.len(), 2);
        let rep =
            orthogonality_report(&p, &vertices[0], &vertices[1], &default_schedule()).unwrap();
        assert!(rep.orthogonal);
        assert!(rep.faces_disjoint && rep.meet_is_zero && rep.join_is_sum);
    }

    #[test]
    fn convex_mixtures_are_not_orthogonal_to_their_parts() {
        let b = boolean(2).unwrap();
        let vertices = extreme_states(&b);
        let mix = vertices[0]
            .scale(&rat(1, 2))
            .plus(&vertices[1].scale(&rat(1, 2)));
        let rep = orthogonality_report(&b, &mix, &vertices[0], &default_schedule()).unwrap();
        assert!(!rep.orthogonal);
        // the mixture's face is the whole segment, so faces are not disjoint
        assert!(!rep.faces_disjoint);
    }

    #[test]
    fn non_rdp_algebras_are_rejected() {
        let m = mo(2).unwrap();
        let vertices = extreme_states(&m);
        let err = orthogonality_report(&m, &vertices[0], &vertices[1], &default_schedule())
            .unwrap_err();
        assert!(matches!(err, Error::RdpRequired));
    }

    #[test]
    fn non_states_are_rejected() {
        let b = boolean(2).unwrap();
        let vertices = extreme_states(&b);
        let two = vertices[0].scale(&rat_int(2));
        let err =
            orthogonality_report(&b, &two, &vertices[0], &default_schedule()).unwrap_err();
        assert!(matches!(err, Error::NotAState(_)));
    }
}
