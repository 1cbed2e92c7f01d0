//! Exhaustive deciders for the Riesz interpolation and decomposition
//! properties on a certified finite algebra.
//!
//! The five properties form a chain
//! `RDP2 => RDP1 => RDP => RDP0 => RIP`,
//! and for commutative tables `RDP1`, `RDP` and `RDP0` coincide. Both facts
//! are theorems, so [`check_hierarchy`] re-verifies them on every run and
//! treats a violation as an implementation bug.
//!
//! At this scale (tables of a few dozen elements) sigma-complete refinement
//! variants collapse to plain `RDP`; only the five finite properties are
//! implemented.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{com, meet_elems, CertifiedAlgebra, Elem};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum RieszProperty {
    Rip,
    Rdp0,
    Rdp,
    Rdp1,
    Rdp2,
}

impl fmt::Display for RieszProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RieszProperty::Rip => "RIP",
            RieszProperty::Rdp0 => "RDP0",
            RieszProperty::Rdp => "RDP",
            RieszProperty::Rdp1 => "RDP1",
            RieszProperty::Rdp2 => "RDP2",
        };
        f.write_str(s)
    }
}

/// Outcome of one exhaustive property check.
///
/// When the property holds, `witness_table` maps every instance to the first
/// witness in lexicographic search order, so reports are reproducible.
/// When it fails, `counterexample` is the lexicographically first instance
/// with no witness.
#[derive(Debug, Clone, Serialize)]
pub struct RieszReport {
    pub property: RieszProperty,
    pub holds: bool,
    pub counterexample: Option<Vec<Elem>>,
    pub witness_table: Option<BTreeMap<Vec<Elem>, Vec<Elem>>>,
}

impl RieszReport {
    fn decided(
        property: RieszProperty,
        counterexample: Option<Vec<Elem>>,
        table: BTreeMap<Vec<Elem>, Vec<Elem>>,
    ) -> Self {
        let holds = counterexample.is_none();
        RieszReport {
            property,
            holds,
            counterexample,
            witness_table: holds.then_some(table),
        }
    }
}

/// Riesz interpolation: for `a1, a2 <= b1, b2` some `c` sits in between.
pub fn check_rip(alg: &CertifiedAlgebra) -> RieszReport {
    let n = alg.size();
    let mut table = BTreeMap::new();
    for a1 in 0..n {
        for a2 in 0..n {
            for b1 in 0..n {
                if !alg.leq(a1, b1) || !alg.leq(a2, b1) {
                    continue;
                }
                for b2 in 0..n {
                    if !alg.leq(a1, b2) || !alg.leq(a2, b2) {
                        continue;
                    }
                    let witness = (0..n).find(|&c| {
                        alg.leq(a1, c) && alg.leq(a2, c) && alg.leq(c, b1) && alg.leq(c, b2)
                    });
                    match witness {
                        Some(c) => {
                            table.insert(vec![a1, a2, b1, b2], vec![c]);
                        }
                        None => {
                            return RieszReport::decided(
                                RieszProperty::Rip,
                                Some(vec![a1, a2, b1, b2]),
                                table,
                            )
                        }
                    }
                }
            }
        }
    }
    RieszReport::decided(RieszProperty::Rip, None, table)
}

/// Weak decomposition: `a <= b1 + b2` splits as `a = d1 + d2` with
/// `d1 <= b1`, `d2 <= b2`.
pub fn check_rdp0(alg: &CertifiedAlgebra) -> RieszReport {
    let n = alg.size();
    let mut table = BTreeMap::new();
    for a in 0..n {
        for b1 in 0..n {
            for b2 in 0..n {
                let Some(s) = alg.add(b1, b2) else { continue };
                if !alg.leq(a, s) {
                    continue;
                }
                // d2 is forced once d1 is chosen, so scanning d1 ascending is
                // the lexicographic order on (d1, d2).
                let witness = (0..n).find_map(|d1| {
                    if !alg.leq(d1, b1) {
                        return None;
                    }
                    let d2 = alg.right_diff(d1, a)?;
                    alg.leq(d2, b2).then_some(vec![d1, d2])
                });
                match witness {
                    Some(w) => {
                        table.insert(vec![a, b1, b2], w);
                    }
                    None => {
                        return RieszReport::decided(
                            RieszProperty::Rdp0,
                            Some(vec![a, b1, b2]),
                            table,
                        )
                    }
                }
            }
        }
    }
    RieszReport::decided(RieszProperty::Rdp0, None, table)
}

/// Refinement constraint shared by RDP, RDP1 and RDP2. The side condition is
/// applied to the middle entries `d2`, `d3` of a candidate refinement.
fn check_refinement(
    alg: &CertifiedAlgebra,
    property: RieszProperty,
    side: impl Fn(&CertifiedAlgebra, Elem, Elem) -> bool,
) -> RieszReport {
    let n = alg.size();
    let mut table = BTreeMap::new();
    for a1 in 0..n {
        for a2 in 0..n {
            let Some(s) = alg.add(a1, a2) else { continue };
            for b1 in 0..n {
                for b2 in 0..n {
                    if alg.add(b1, b2) != Some(s) {
                        continue;
                    }
                    // Every refinement is determined by d1: cancellativity
                    // forces d2 = a1 - d1, d3 = b1 - d1, d4 = a2 - d3. The
                    // scan over d1 ascending therefore visits candidate
                    // quadruples in lexicographic order.
                    let witness = (0..n).find_map(|d1| {
                        let d2 = alg.right_diff(d1, a1)?;
                        let d3 = alg.right_diff(d1, b1)?;
                        let d4 = alg.right_diff(d3, a2)?;
                        if alg.add(d2, d4) == Some(b2) && side(alg, d2, d3) {
                            Some(vec![d1, d2, d3, d4])
                        } else {
                            None
                        }
                    });
                    match witness {
                        Some(w) => {
                            table.insert(vec![a1, a2, b1, b2], w);
                        }
                        None => {
                            return RieszReport::decided(
                                property,
                                Some(vec![a1, a2, b1, b2]),
                                table,
                            )
                        }
                    }
                }
            }
        }
    }
    RieszReport::decided(property, None, table)
}

/// Riesz decomposition: equal sums `a1 + a2 = b1 + b2` admit a common
/// refinement `d1..d4` with `d1+d2 = a1`, `d3+d4 = a2`, `d1+d3 = b1`,
/// `d2+d4 = b2`.
pub fn check_rdp(alg: &CertifiedAlgebra) -> RieszReport {
    check_refinement(alg, RieszProperty::Rdp, |_, _, _| true)
}

/// RDP strengthened by `d2 com d3`: all elements below `d2` commute with all
/// elements below `d3`.
pub fn check_rdp1(alg: &CertifiedAlgebra) -> RieszReport {
    check_refinement(alg, RieszProperty::Rdp1, com)
}

/// RDP strengthened by `d2 ^ d3 = 0`: the only common lower bound of the
/// middle entries is zero.
pub fn check_rdp2(alg: &CertifiedAlgebra) -> RieszReport {
    check_refinement(alg, RieszProperty::Rdp2, |alg, d2, d3| {
        meet_elems(alg, d2, d3) == Some(alg.zero())
    })
}

pub fn check(alg: &CertifiedAlgebra, property: RieszProperty) -> RieszReport {
    match property {
        RieszProperty::Rip => check_rip(alg),
        RieszProperty::Rdp0 => check_rdp0(alg),
        RieszProperty::Rdp => check_rdp(alg),
        RieszProperty::Rdp1 => check_rdp1(alg),
        RieszProperty::Rdp2 => check_rdp2(alg),
    }
}

pub const ALL_PROPERTIES: [RieszProperty; 5] = [
    RieszProperty::Rip,
    RieszProperty::Rdp0,
    RieszProperty::Rdp,
    RieszProperty::Rdp1,
    RieszProperty::Rdp2,
];

/// Cached yes/no answers in the order of [`ALL_PROPERTIES`].
pub fn riesz_flags(alg: &CertifiedAlgebra) -> [bool; 5] {
    *alg.riesz_cache().get_or_init(|| {
        let mut flags = [false; 5];
        for (i, p) in ALL_PROPERTIES.iter().enumerate() {
            flags[i] = check(alg, *p).holds;
        }
        flags
    })
}

pub fn has_rdp(alg: &CertifiedAlgebra) -> bool {
    riesz_flags(alg)[2]
}

/// Runs all five checks and re-verifies the implication chain
/// `RDP2 => RDP1 => RDP => RDP0 => RIP` on the outcome.
pub fn check_hierarchy(alg: &CertifiedAlgebra) -> Result<Vec<RieszReport>> {
    let reports: Vec<RieszReport> = ALL_PROPERTIES.iter().map(|p| check(alg, *p)).collect();
    let holds: Vec<bool> = reports.iter().map(|r| r.holds).collect();
    // chain order: weakest first in `reports`, so implication runs right to left
    for i in (1..5).rev() {
        if holds[i] && !holds[i - 1] {
            return Err(Error::InconsistentHierarchy(format!(
                "{} holds but {} fails",
                reports[i].property, reports[i - 1].property
            )));
        }
    }
    Ok(reports)
}

/// Replays a counterexample against the table: true when the instance really
/// admits no witness. Used by tests to keep reports honest.
pub fn replay_counterexample(
    alg: &CertifiedAlgebra,
    property: RieszProperty,
    instance: &[Elem],
) -> bool {
    let n = alg.size();
    match property {
        RieszProperty::Rip => {
            let [a1, a2, b1, b2] = instance else {
                return false;
            };
            let (a1, a2, b1, b2) = (*a1, *a2, *b1, *b2);
            let applicable = alg.leq(a1, b1) && alg.leq(a1, b2) && alg.leq(a2, b1) && alg.leq(a2, b2);
            applicable
                && !(0..n).any(|c| {
                    alg.leq(a1, c) && alg.leq(a2, c) && alg.leq(c, b1) && alg.leq(c, b2)
                })
        }
        RieszProperty::Rdp0 => {
            let [a, b1, b2] = instance else {
                return false;
            };
            let (a, b1, b2) = (*a, *b1, *b2);
            let applicable = alg
                .add(b1, b2)
                .map(|s| alg.leq(a, s))
                .unwrap_or(false);
            applicable
                && !(0..n).any(|d1| {
                    alg.leq(d1, b1)
                        && alg
                            .right_diff(d1, a)
                            .map(|d2| alg.leq(d2, b2))
                            .unwrap_or(false)
                })
        }
        RieszProperty::Rdp | RieszProperty::Rdp1 | RieszProperty::Rdp2 => {
            let [a1, a2, b1, b2] = instance else {
                return false;
            };
            let (a1, a2, b1, b2) = (*a1, *a2, *b1, *b2);
            let applicable = match (alg.add(a1, a2), alg.add(b1, b2)) {
                (Some(s), Some(t)) => s == t,
                _ => false,
            };
            applicable
                && !(0..n).any(|d1| {
                    let refine = (|| {
                        let d2 = alg.right_diff(d1, a1)?;
                        let d3 = alg.right_diff(d1, b1)?;
                        let d4 = alg.right_diff(d3, a2)?;
                        (alg.add(d2, d4) == Some(b2)).then_some((d2, d3))
                    })();
                    match refine {
                        Some((d2, d3)) => match property {
                            RieszProperty::Rdp => true,
                            RieszProperty::Rdp1 => com(alg, d2, d3),
                            RieszProperty::Rdp2 => meet_elems(alg, d2, d3) == Some(alg.zero()),
                            _ => unreachable!(),
                        },
                        None => false,
                    }
                })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_commutative;
    use crate::construct::{boolean, chain, horizontal_sum, mo, strict_square};

    #[test]
    fn chains_satisfy_everything() {
        for n in [2, 3, 5] {
            let c = chain(n).unwrap();
            for p in ALL_PROPERTIES {
                assert!(check(&c, p).holds, "chain-{n} should satisfy {p}");
            }
        }
    }

    #[test]
    fn boolean_algebras_reach_rdp2() {
        for n in [2, 3] {
            let b = boolean(n).unwrap();
            assert!(check_rdp2(&b).holds);
        }
    }

    #[test]
    fn witness_tables_cover_every_instance_and_validate() {
        let b = boolean(2).unwrap();
        let rep = check_rdp(&b);
        assert!(rep.holds);
        let table = rep.witness_table.unwrap();
        // spot-check every recorded witness
        for (inst, w) in &table {
            let (a1, a2, b1, b2) = (inst[0], inst[1], inst[2], inst[3]);
            let (d1, d2, d3, d4) = (w[0], w[1], w[2], w[3]);
            assert_eq!(b.add(d1, d2), Some(a1));
            assert_eq!(b.add(d3, d4), Some(a2));
            assert_eq!(b.add(d1, d3), Some(b1));
            assert_eq!(b.add(d2, d4), Some(b2));
        }
        // instance count: pairs of equal-sum splits, summed over all values
        let n = b.size();
        let mut expected = 0;
        for v in 0..n {
            let splits = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .filter(|&(x, y)| b.add(x, y) == Some(v))
                .count();
            expected += splits * splits;
        }
        assert_eq!(table.len(), expected);
    }

    #[test]
    fn mo2_fails_rdp0_with_an_atom_against_a_foreign_complement_pair() {
        let m = mo(2).unwrap();
        let rep = check_rdp0(&m);
        assert!(!rep.holds);
        let ce = rep.counterexample.unwrap();
        assert!(replay_counterexample(&m, RieszProperty::Rdp0, &ce));
        // shape: an atom below the sum of the other complement pair
        let (a, b1, b2) = (ce[0], ce[1], ce[2]);
        assert_eq!(m.add(b1, b2), Some(m.one()));
        assert!(a != m.zero() && a != m.one());
        assert!(a != b1 && a != b2);
    }

    #[test]
    fn mo2_satisfies_interpolation() {
        assert!(check_rip(&mo(2).unwrap()).holds);
    }

    /// The integer strict square loses RDP0 at every size: (1,1) <= (1,2) +
    /// (2,1) only splits through parts of the summands, and the only
    /// elements below (1,2) are 0 and (1,2) itself. Unlike the dense
    /// rational analogue, no coordinate can be shaved by an arbitrarily
    /// small amount to repair a refinement. At u = (3,3) interpolation still
    /// holds, but from (4,4) on even that goes: a1 = (1,1), a2 = (2,1),
    /// b1 = (3,2), b2 = (3,3) admit no interpolant because the common upper
    /// bounds of the a's, (3,2) and (3,3), are incomparable with the b's.
    #[test]
    fn strict_square_fails_rdp0_at_every_size() {
        for n in [3, 4, 5] {
            let s = strict_square(n).unwrap();
            let rep = check_rdp0(&s);
            assert!(!rep.holds, "strict-square-{n} RDP0 should fail");
            let ce = rep.counterexample.unwrap();
            assert!(replay_counterexample(&s, RieszProperty::Rdp0, &ce));
        }
    }

    #[test]
    fn strict_square_interpolation_stops_at_four() {
        assert!(check_rip(&strict_square(3).unwrap()).holds);
        for n in [4, 5] {
            let rep = check_rip(&strict_square(n).unwrap());
            assert!(!rep.holds, "strict-square-{n} RIP should fail");
            let ce = rep.counterexample.unwrap();
            assert!(replay_counterexample(
                &strict_square(n).unwrap(),
                RieszProperty::Rip,
                &ce
            ));
        }
    }

    #[test]
    fn strict_square_3_rdp_counterexample_is_the_diagonal_split() {
        let s = strict_square(3).unwrap();
        let rep = check_rdp(&s);
        assert!(!rep.holds);
        // (1,1) + (2,2) = (1,2) + (2,1) = top admits no refinement
        assert!(replay_counterexample(
            &s,
            RieszProperty::Rdp,
            &[1, 4, 2, 3]
        ));
    }

    #[test]
    fn horizontal_sum_of_chains_fails_rdp0() {
        let c2 = chain(2).unwrap();
        let h = horizontal_sum(&c2, &c2).unwrap();
        assert!(check_rip(&h).holds);
        assert!(!check_rdp0(&h).holds);
    }

    #[test]
    fn hierarchy_is_consistent_on_the_corpus() {
        for (name, alg) in crate::construct::standard_corpus() {
            let reports = check_hierarchy(&alg)
                .unwrap_or_else(|e| panic!("hierarchy inconsistent on {name}: {e}"));
            assert_eq!(reports.len(), 5);
        }
    }

    #[test]
    fn commutative_tables_collapse_rdp0_rdp_rdp1() {
        for (name, alg) in crate::construct::standard_corpus() {
            if !is_commutative(&alg) {
                continue;
            }
            let flags = riesz_flags(&alg);
            // flags order: RIP, RDP0, RDP, RDP1, RDP2
            assert_eq!(flags[1], flags[2], "{name}: RDP0 vs RDP");
            assert_eq!(flags[2], flags[3], "{name}: RDP vs RDP1");
        }
    }
}
