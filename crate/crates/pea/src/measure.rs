//! Signed measures on a certified algebra and the lattice structure they
//! carry when the algebra has the Riesz decomposition property.
//!
//! Joins and meets are computed three independent ways across this crate:
//! the binary two-split formula and the family formula over full
//! decompositions live here; the exact-LP bound in [`lub_oracle`] is the
//! third route and shares no code with the first two.

use num_traits::{One, Signed, Zero};

use crate::algebra::{CertifiedAlgebra, Elem};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::lp::{solve_standard, LpOutcome};
use crate::rat::{rat_string, Rat};
use crate::riesz::has_rdp;

/// Additive rational-valued map on the carrier.
///
/// Invariants (enforced by [`SignedMeasure::new`]): `values[zero] = 0` and
/// `values[a] + values[b] = values[a+b]` whenever `a+b` is defined. Equality
/// of the two complement values `m(lneg a) = m(rneg a)` follows and is not
/// stored separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMeasure {
    values: Vec<Rat>,
}

impl SignedMeasure {
    pub fn new(alg: &CertifiedAlgebra, values: Vec<Rat>) -> Result<Self> {
        if values.len() != alg.size() {
            return Err(Error::DimensionMismatch {
                expected: alg.size(),
                got: values.len(),
            });
        }
        for a in alg.elements() {
            for b in alg.elements() {
                if let Some(s) = alg.add(a, b) {
                    if &values[a] + &values[b] != values[s] {
                        return Err(Error::NotAdditive { a, b });
                    }
                }
            }
        }
        Ok(SignedMeasure { values })
    }

    /// For values already known to be additive (exact linear algebra output,
    /// pointwise sums of measures, ...).
    pub(crate) fn from_values_unchecked(values: Vec<Rat>) -> Self {
        SignedMeasure { values }
    }

    pub fn zero_measure(alg: &CertifiedAlgebra) -> Self {
        SignedMeasure {
            values: vec![Rat::zero(); alg.size()],
        }
    }

    pub fn value(&self, x: Elem) -> &Rat {
        &self.values[x]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn total(&self, alg: &CertifiedAlgebra) -> &Rat {
        &self.values[alg.one()]
    }

    pub fn is_positive(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    pub fn is_state(&self, alg: &CertifiedAlgebra) -> bool {
        self.is_positive() && self.total(alg) == &Rat::one()
    }

    /// `self <=+ other`: the difference is a (positive) measure.
    pub fn leq_plus(&self, other: &SignedMeasure) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a <= b)
    }

    pub fn plus(&self, other: &SignedMeasure) -> SignedMeasure {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn minus(&self, other: &SignedMeasure) -> SignedMeasure {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> SignedMeasure {
        SignedMeasure {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    pub fn scale(&self, f: &Rat) -> SignedMeasure {
        SignedMeasure {
            values: self.values.iter().map(|v| v * f).collect(),
        }
    }

    fn zip_with(&self, other: &SignedMeasure, f: impl Fn(&Rat, &Rat) -> Rat) -> SignedMeasure {
        assert_eq!(self.values.len(), other.values.len());
        SignedMeasure {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

/// Ordered split of `target` into nonzero parts whose left-to-right sum is
/// defined and equals `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub target: Elem,
    pub parts: Vec<Elem>,
}

impl Decomposition {
    /// Re-evaluates the left-to-right sum against the table.
    pub fn verify(&self, alg: &CertifiedAlgebra) -> bool {
        if self.parts.is_empty() {
            return self.target == alg.zero();
        }
        if self.parts.contains(&alg.zero()) {
            return false;
        }
        let mut acc = self.parts[0];
        for &p in &self.parts[1..] {
            match alg.add(acc, p) {
                Some(s) => acc = s,
                None => return false,
            }
        }
        acc == self.target
    }

    /// Left-to-right partial sums; strictly ascending in the induced order.
    pub fn partial_sums(&self, alg: &CertifiedAlgebra) -> Vec<Elem> {
        let mut sums = Vec::with_capacity(self.parts.len());
        let mut acc = None;
        for &p in &self.parts {
            acc = Some(match acc {
                None => p,
                Some(prev) => alg.add(prev, p).expect("decomposition sums are defined"),
            });
            sums.push(acc.unwrap());
        }
        sums
    }
}

/// All decomposition part lists for every element, built once per algebra.
///
/// Recursion on the first part: the remainder `right_diff(p, x)` is strictly
/// below `x` for nonzero `p`, so filling elements in a linear extension of
/// the order needs no backtracking.
fn decomp_table(alg: &CertifiedAlgebra) -> &Vec<Vec<Vec<Elem>>> {
    alg.decomp_cache().get_or_init(|| {
        let n = alg.size();
        let mut order: Vec<Elem> = (0..n).collect();
        order.sort_by_key(|&x| alg.lower_set(x).len());
        let mut table: Vec<Vec<Vec<Elem>>> = vec![Vec::new(); n];
        for &x in &order {
            let mut ds: Vec<Vec<Elem>> = Vec::new();
            if x == alg.zero() {
                ds.push(Vec::new());
            } else {
                for p in 0..n {
                    if p == alg.zero() {
                        continue;
                    }
                    let Some(rest) = alg.right_diff(p, x) else {
                        continue;
                    };
                    for tail in &table[rest] {
                        let mut parts = Vec::with_capacity(1 + tail.len());
                        parts.push(p);
                        parts.extend_from_slice(tail);
                        ds.push(parts);
                    }
                }
            }
            table[x] = ds;
        }
        table
    })
}

pub fn decompositions(alg: &CertifiedAlgebra, x: Elem) -> &[Vec<Elem>] {
    &decomp_table(alg)[x]
}

pub fn enumerate_decompositions<'a>(
    alg: &'a CertifiedAlgebra,
    x: Elem,
) -> impl Iterator<Item = Decomposition> + 'a {
    decompositions(alg, x).iter().map(move |parts| Decomposition {
        target: x,
        parts: parts.clone(),
    })
}

/// Pointwise `max over decompositions of sum of d(part)`: the least additive
/// map dominating `d` when the algebra has RDP.
fn sup_over_decompositions(alg: &CertifiedAlgebra, d: &[Rat]) -> Vec<Rat> {
    fold_over_decompositions(alg, d, |best, cand| cand > best)
}

fn inf_over_decompositions(alg: &CertifiedAlgebra, d: &[Rat]) -> Vec<Rat> {
    fold_over_decompositions(alg, d, |best, cand| cand < best)
}

fn fold_over_decompositions(
    alg: &CertifiedAlgebra,
    d: &[Rat],
    replace: impl Fn(&Rat, &Rat) -> bool,
) -> Vec<Rat> {
    (0..alg.size())
        .map(|x| {
            let mut best: Option<Rat> = None;
            for parts in decompositions(alg, x) {
                let total: Rat = parts.iter().map(|&p| d[p].clone()).sum();
                if best.as_ref().map_or(true, |b| replace(b, &total)) {
                    best = Some(total);
                }
            }
            best.expect("every element has at least one decomposition")
        })
        .collect()
}

fn verify_additive(alg: &CertifiedAlgebra, values: Vec<Rat>) -> Result<SignedMeasure> {
    SignedMeasure::new(alg, values)
}

fn require_rdp(alg: &CertifiedAlgebra) -> Result<()> {
    if has_rdp(alg) {
        Ok(())
    } else {
        Err(Error::RdpRequired)
    }
}

/// Least additive map above a subadditive `d` with `d(0) = 0`, computed as
/// the decomposition supremum. Additivity of the result is re-verified even
/// though RDP guarantees it.
pub fn measure_from_subadditive(alg: &CertifiedAlgebra, d: &[Rat]) -> Result<SignedMeasure> {
    require_rdp(alg)?;
    if d.len() != alg.size() {
        return Err(Error::DimensionMismatch {
            expected: alg.size(),
            got: d.len(),
        });
    }
    if !d[alg.zero()].is_zero() {
        return Err(Error::NonzeroAtZero);
    }
    for x in alg.elements() {
        for y in alg.elements() {
            if let Some(s) = alg.add(x, y) {
                if d[s] > &d[x] + &d[y] {
                    return Err(Error::NotSubadditive { x, y });
                }
            }
        }
    }
    verify_additive(alg, sup_over_decompositions(alg, d))
}

/// Least upper bound in the `<=+` order via the binary two-split formula:
/// `(m1 v m2)(x) = max { m1(x1) + m2(x2) : x1 + x2 = x }`, zero parts
/// allowed.
pub fn join(
    alg: &CertifiedAlgebra,
    m1: &SignedMeasure,
    m2: &SignedMeasure,
) -> Result<SignedMeasure> {
    require_rdp(alg)?;
    two_split(alg, m1, m2, |best, cand| cand > best)
}

pub fn meet(
    alg: &CertifiedAlgebra,
    m1: &SignedMeasure,
    m2: &SignedMeasure,
) -> Result<SignedMeasure> {
    require_rdp(alg)?;
    two_split(alg, m1, m2, |best, cand| cand < best)
}

fn two_split(
    alg: &CertifiedAlgebra,
    m1: &SignedMeasure,
    m2: &SignedMeasure,
    replace: impl Fn(&Rat, &Rat) -> bool,
) -> Result<SignedMeasure> {
    let n = alg.size();
    let mut values = Vec::with_capacity(n);
    for x in 0..n {
        let mut best: Option<Rat> = None;
        for x1 in 0..n {
            let Some(x2) = alg.right_diff(x1, x) else {
                continue;
            };
            let cand = m1.value(x1) + m2.value(x2);
            if best.as_ref().map_or(true, |b| replace(b, &cand)) {
                best = Some(cand);
            }
        }
        values.push(best.expect("x = x + 0 is always a split"));
    }
    verify_additive(alg, values)
}

/// Family join: decomposition supremum of the pointwise maximum.
pub fn join_many(alg: &CertifiedAlgebra, ms: &[SignedMeasure]) -> Result<SignedMeasure> {
    require_rdp(alg)?;
    family(alg, ms, true)
}

pub fn meet_many(alg: &CertifiedAlgebra, ms: &[SignedMeasure]) -> Result<SignedMeasure> {
    require_rdp(alg)?;
    family(alg, ms, false)
}

fn family(alg: &CertifiedAlgebra, ms: &[SignedMeasure], upper: bool) -> Result<SignedMeasure> {
    assert!(!ms.is_empty(), "family join/meet needs at least one measure");
    let n = alg.size();
    let envelope: Vec<Rat> = (0..n)
        .map(|x| {
            let vals = ms.iter().map(|m| m.value(x));
            if upper {
                vals.max().unwrap().clone()
            } else {
                vals.min().unwrap().clone()
            }
        })
        .collect();
    let values = if upper {
        sup_over_decompositions(alg, &envelope)
    } else {
        inf_over_decompositions(alg, &envelope)
    };
    verify_additive(alg, values)
}

/// Exact-LP least upper bound: minimize `t(1)` over additive `t` dominating
/// `m1` and `m2` pointwise. When the algebra has RDP the optimum is unique
/// and equals the lattice join; a positive measure vanishing at the top
/// vanishes everywhere, so two optima cannot differ.
pub fn lub_oracle(
    alg: &CertifiedAlgebra,
    m1: &SignedMeasure,
    m2: &SignedMeasure,
) -> Result<SignedMeasure> {
    let n = alg.size();
    // substitute y_x = t(x) - L(x) >= 0 with L the pointwise envelope
    let envelope: Vec<Rat> = (0..n)
        .map(|x| m1.value(x).max(m2.value(x)).clone())
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let Some(s) = alg.add(a, b) else { continue };
            let mut row = vec![Rat::zero(); n];
            row[a] += Rat::one();
            row[b] += Rat::one();
            row[s] -= Rat::one();
            rhs.push(&envelope[s] - &envelope[a] - &envelope[b]);
            rows.push(row);
        }
    }
    let mut objective = vec![Rat::zero(); n];
    objective[alg.one()] = Rat::one();
    match solve_standard(&Matrix::from_rows(rows), &rhs, &objective) {
        LpOutcome::Optimal { x, .. } => {
            let values: Vec<Rat> = x.iter().zip(&envelope).map(|(y, l)| y + l).collect();
            verify_additive(alg, values)
        }
        LpOutcome::Infeasible => Err(Error::Infeasible),
        LpOutcome::Unbounded => Err(Error::Unbounded),
    }
}

/// Exact-LP greatest lower bound, by order duality with [`lub_oracle`].
pub fn glb_oracle(
    alg: &CertifiedAlgebra,
    m1: &SignedMeasure,
    m2: &SignedMeasure,
) -> Result<SignedMeasure> {
    lub_oracle(alg, &m1.neg(), &m2.neg()).map(|t| t.neg())
}

/// Canonical Jordan decomposition data: `m = positive_part - negative_part`
/// with the two parts meeting at zero, and the normalized form
/// `m = alpha1 * s1 - alpha2 * s2` when the parts are nonzero.
#[derive(Debug, Clone)]
pub struct JordanPair {
    pub positive_part: SignedMeasure,
    pub negative_part: SignedMeasure,
    pub alpha1: Rat,
    pub alpha2: Rat,
    pub s1: Option<SignedMeasure>,
    pub s2: Option<SignedMeasure>,
}

/// `m+(a) = max { m(x) : x <= a }`, `m-(a) = -min { m(x) : x <= a }`.
///
/// The two order formulas are computed independently and must reconstruct
/// `m` as their difference; the parts must also meet at zero.
pub fn jordan_decompose(alg: &CertifiedAlgebra, m: &SignedMeasure) -> Result<JordanPair> {
    require_rdp(alg)?;
    let n = alg.size();
    let mut pos = Vec::with_capacity(n);
    let mut neg = Vec::with_capacity(n);
    for a in 0..n {
        let below = alg.lower_set(a);
        let max = below.iter().map(|&x| m.value(x)).max().unwrap().clone();
        let min = below.iter().map(|&x| m.value(x)).min().unwrap().clone();
        pos.push(max);
        neg.push(-min);
    }
    let positive_part = verify_additive(alg, pos)?;
    let negative_part = verify_additive(alg, neg)?;
    if &positive_part.minus(&negative_part) != m {
        return Err(Error::EquivalenceViolation(
            "upper and lower order envelopes do not reconstruct the measure".into(),
        ));
    }
    if !positive_part.is_positive() || !negative_part.is_positive() {
        return Err(Error::EquivalenceViolation(
            "an order envelope failed positivity".into(),
        ));
    }
    let disjoint = meet(alg, &positive_part, &negative_part)?;
    if disjoint != SignedMeasure::zero_measure(alg) {
        return Err(Error::EquivalenceViolation(
            "positive and negative parts do not meet at zero".into(),
        ));
    }
    let alpha1 = positive_part.total(alg).clone();
    let alpha2 = negative_part.total(alg).clone();
    let s1 =
        (!alpha1.is_zero()).then(|| positive_part.scale(&alpha1.recip()));
    let s2 =
        (!alpha2.is_zero()).then(|| negative_part.scale(&alpha2.recip()));
    Ok(JordanPair {
        positive_part,
        negative_part,
        alpha1,
        alpha2,
        s1,
        s2,
    })
}

/// Minimality of the canonical pair against a competing decomposition
/// `m = m1 - m2` into measures: the canonical parts are dominated pointwise.
pub fn jordan_minimal_against(
    alg: &CertifiedAlgebra,
    m: &SignedMeasure,
    pair: &JordanPair,
    m1: &SignedMeasure,
    m2: &SignedMeasure,
) -> Result<bool> {
    if !m1.is_positive() || !m2.is_positive() {
        return Err(Error::NotPositive);
    }
    if &m1.minus(m2) != m {
        return Err(Error::InvalidSpec(
            "competing pair does not decompose the measure".into(),
        ));
    }
    let _ = alg;
    Ok(pair.positive_part.leq_plus(m1) && pair.negative_part.leq_plus(m2))
}

/// `v_m(x) = max over decompositions of sum |m(part)|`, which must agree
/// with `m+ + m-`.
pub fn total_variation(alg: &CertifiedAlgebra, m: &SignedMeasure) -> Result<SignedMeasure> {
    require_rdp(alg)?;
    let d: Vec<Rat> = m.values().iter().map(|v| v.abs()).collect();
    let variation = verify_additive(alg, sup_over_decompositions(alg, &d))?;
    let pair = jordan_decompose(alg, m)?;
    let jordan_sum = pair.positive_part.plus(&pair.negative_part);
    if let Some(at) = (0..alg.size()).find(|&x| variation.value(x) != jordan_sum.value(x)) {
        return Err(Error::VariationMismatch {
            at,
            variation: rat_string(variation.value(at)),
            jordan: rat_string(jordan_sum.value(at)),
        });
    }
    Ok(variation)
}

/// Boundedness certificate for Prop-style "every signed measure on a finite
/// carrier is Jordan": the bound is the largest absolute value attained.
#[derive(Debug, Clone)]
pub struct JordanCertificate {
    pub bound: Rat,
    pub pair: JordanPair,
}

pub fn is_jordan(alg: &CertifiedAlgebra, m: &SignedMeasure) -> Result<JordanCertificate> {
    let bound = m
        .values()
        .iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(Rat::zero);
    let pair = jordan_decompose(alg, m)?;
    Ok(JordanCertificate { bound, pair })
}

/// The unique `z` with `z + x = x + y`, when `x + y` is defined. Reordering
/// a decomposition replaces `y` by its conjugate; any additive map takes the
/// same value on both.
pub fn conjugate(alg: &CertifiedAlgebra, x: Elem, y: Elem) -> Option<Elem> {
    let s = alg.add(x, y)?;
    alg.left_diff(x, s)
}
