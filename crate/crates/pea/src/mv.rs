//! The interval [0, m] below a positive measure, equipped with the truncated
//! sum, truncated product and relative complement. With a nonzero positive
//! unit this carries an MV structure whose axioms are verified on demand.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{CertifiedAlgebra, Elem};
use crate::error::{Error, Result};
use crate::measure::{join, meet, SignedMeasure};
use crate::rat::Rat;
use crate::riesz::has_rdp;

#[derive(Debug)]
pub struct MvInterval<'a> {
    alg: &'a CertifiedAlgebra,
    unit: SignedMeasure,
}

/// Builds the interval below `m`. The unit must be positive and nonzero at
/// the top, and the lattice operations used by the truncations need RDP.
pub fn mv_interval<'a>(
    alg: &'a CertifiedAlgebra,
    m: &SignedMeasure,
) -> Result<MvInterval<'a>> {
    if !has_rdp(alg) {
        return Err(Error::RdpRequired);
    }
    if !m.is_positive() {
        return Err(Error::NotPositive);
    }
    if m.total(alg).is_zero() {
        return Err(Error::ZeroUnit);
    }
    Ok(MvInterval {
        alg,
        unit: m.clone(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct MvAxiomReport {
    pub pairs_checked: usize,
    pub commutative: bool,
    pub associative: bool,
    pub zero_neutral: bool,
    pub involution: bool,
    pub unit_absorbing: bool,
    pub lukasiewicz: bool,
    pub product_dual: bool,
    pub holds: bool,
}

impl<'a> MvInterval<'a> {
    pub fn algebra(&self) -> &'a CertifiedAlgebra {
        self.alg
    }

    pub fn unit(&self) -> &SignedMeasure {
        &self.unit
    }

    pub fn bottom(&self) -> SignedMeasure {
        SignedMeasure::zero_measure(self.alg)
    }

    pub fn contains(&self, s: &SignedMeasure) -> bool {
        s.is_positive() && s.leq_plus(&self.unit)
    }

    fn admit(&self, s: &SignedMeasure) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::OutsideInterval)
        }
    }

    /// Truncated sum (s + t) meet m.
    pub fn oplus(&self, s: &SignedMeasure, t: &SignedMeasure) -> Result<SignedMeasure> {
        self.admit(s)?;
        self.admit(t)?;
        meet(self.alg, &s.plus(t), &self.unit)
    }

    /// Truncated product (s + t - m) join 0.
    pub fn odot(&self, s: &SignedMeasure, t: &SignedMeasure) -> Result<SignedMeasure> {
        self.admit(s)?;
        self.admit(t)?;
        join(self.alg, &s.plus(t).minus(&self.unit), &self.bottom())
    }

    /// Complement m - s.
    pub fn star(&self, s: &SignedMeasure) -> Result<SignedMeasure> {
        self.admit(s)?;
        Ok(self.unit.minus(s))
    }

    /// The partial sum inherited from the measure group: defined exactly
    /// when s + t stays below the unit, where it agrees with `oplus`.
    pub fn partial_add(
        &self,
        s: &SignedMeasure,
        t: &SignedMeasure,
    ) -> Result<Option<SignedMeasure>> {
        self.admit(s)?;
        self.admit(t)?;
        let sum = s.plus(t);
        Ok(if sum.leq_plus(&self.unit) {
            Some(sum)
        } else {
            None
        })
    }

    /// Evaluation of the interval at a fixed element. These evaluations are
    /// jointly order determining: dominance at every element is exactly the
    /// interval order.
    pub fn mu(&self, a: Elem, s: &SignedMeasure) -> Result<Rat> {
        self.admit(s)?;
        Ok(s.value(a).clone())
    }

    pub fn order_determined(&self, s: &SignedMeasure, t: &SignedMeasure) -> Result<bool> {
        self.admit(s)?;
        self.admit(t)?;
        let pointwise = (0..self.alg.size()).all(|a| s.value(a) <= t.value(a));
        Ok(pointwise == s.leq_plus(t))
    }

    /// Checks the MV axioms on the supplied sample: commutativity and
    /// associativity of the truncated sum with 0 neutral, double complement,
    /// absorption by the unit, the exchange identity
    /// s + (s + t*)* = t + (t + s*)*, and the complement duality of the
    /// truncated product. Associativity consumes consecutive sample pairs as
    /// triples.
    pub fn verify_axioms(
        &self,
        samples: &[(SignedMeasure, SignedMeasure)],
    ) -> Result<MvAxiomReport> {
        let mut report = MvAxiomReport {
            pairs_checked: samples.len(),
            commutative: true,
            associative: true,
            zero_neutral: true,
            involution: true,
            unit_absorbing: true,
            lukasiewicz: true,
            product_dual: true,
            holds: true,
        };
        let zero = self.bottom();
        for (s, t) in samples {
            let st = self.oplus(s, t)?;
            report.commutative &= st == self.oplus(t, s)?;
            report.zero_neutral &= self.oplus(s, &zero)? == *s;
            report.involution &= self.star(&self.star(s)?)? == *s;
            report.unit_absorbing &= self.oplus(s, &self.unit)? == self.unit;
            let lhs = self.oplus(s, &self.star(&self.oplus(s, &self.star(t)?)?)?)?;
            let rhs = self.oplus(t, &self.star(&self.oplus(t, &self.star(s)?)?)?)?;
            report.lukasiewicz &= lhs == rhs;
            let dual = self.star(&self.oplus(&self.star(s)?, &self.star(t)?)?)?;
            report.product_dual &= self.odot(s, t)? == dual;
        }
        for window in samples.windows(2) {
            let (s, t) = &window[0];
            let u = &window[1].0;
            let left = self.oplus(&self.oplus(s, t)?, u)?;
            let right = self.oplus(s, &self.oplus(t, u)?)?;
            report.associative &= left == right;
        }
        report.holds = report.commutative
            && report.associative
            && report.zero_neutral
            && report.involution
            && report.unit_absorbing
            && report.lukasiewicz
            && report.product_dual;
        Ok(report)
    }
}
