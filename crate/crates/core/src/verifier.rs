//! Executable checks for the complementation results on `Γ_I(R)`, and the
//! catalogue driver that runs them over many `(R, I)` pairs.
//!
//! Each check either does not apply to a pair (its hypotheses fail), passes,
//! or fails with a counterexample carrying enough witnesses to reproduce it.

use std::time::Instant;

use log::{debug, info};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalogue::Catalogue;
use crate::error::{Error, Result};
use crate::graph::{gamma, gamma_ideal, Completeness, SimpleGraph, Vertex};
use crate::ideal::{
    all_ideals, generate_ideal, is_prime, quotient_ring, radical, Ideal, Quotient,
    DEFAULT_ENUMERATION_CAP,
};
use crate::ring::{build_poly_quotient, build_zn, Element, FiniteRing, DEFAULT_MAX_ORDER};

/// Rings above this order skip the cubic axiom scan.
pub const AXIOM_SCAN_CAP: usize = 512;

/// At most this many counterexamples are stored per check; all are counted.
pub const STORED_FAILURES_PER_CHECK: usize = 25;

/// Every check applicable to fewer pairs than this in a catalogue is flagged.
pub const MIN_APPLICABLE: usize = 5;

pub const TOTAL_QUOTIENT_NOTE: &str = "T(R/I) is evaluated as R/I itself: in a finite ring every \
     regular element is a unit, which is verified for every quotient before use. This is not a \
     general localization.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Cardinality,
    NonradicalNotComplemented,
    CompleteLemma,
    NonradicalTheorem,
    CompTheorem,
    ClassificationCorollary,
    PerpLifting,
    AnnihilatorLemma,
    CompIffUc,
    RadicalEquivalences,
    InflationStructure,
    NonemptyIffNotPrime,
    GammaConnected,
    RingConsistency,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Cardinality,
        Check::NonradicalNotComplemented,
        Check::CompleteLemma,
        Check::NonradicalTheorem,
        Check::CompTheorem,
        Check::ClassificationCorollary,
        Check::PerpLifting,
        Check::AnnihilatorLemma,
        Check::CompIffUc,
        Check::RadicalEquivalences,
        Check::InflationStructure,
        Check::NonemptyIffNotPrime,
        Check::GammaConnected,
        Check::RingConsistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Cardinality => "cardinality",
            Check::NonradicalNotComplemented => "nonradical_not_complemented",
            Check::CompleteLemma => "complete_lemma",
            Check::NonradicalTheorem => "nonradical_theorem",
            Check::CompTheorem => "comp_theorem",
            Check::ClassificationCorollary => "classification_corollary",
            Check::PerpLifting => "perp_lifting",
            Check::AnnihilatorLemma => "annihilator_lemma",
            Check::CompIffUc => "comp_iff_uc",
            Check::RadicalEquivalences => "radical_equivalences",
            Check::InflationStructure => "inflation_structure",
            Check::NonemptyIffNotPrime => "nonempty_iff_not_prime",
            Check::GammaConnected => "gamma_connected",
            Check::RingConsistency => "ring_consistency",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Check::Cardinality => "|V(Γ_I(R))| = |I|·|V(Γ(R/I))|",
            Check::NonradicalNotComplemented => {
                "I ≠ 0, √I ≠ I, |V(Γ(R/I))| ≥ 2 ⇒ Γ_I(R) not complemented"
            }
            Check::CompleteLemma => "Γ(R/I) ≅ K^1 ⇒ Γ_I(R) ≅ K^|I|",
            Check::NonradicalTheorem => "√I ≠ I ⇒ (Γ_I(R) complemented ⟺ Γ_I(R) ≅ K^2)",
            Check::CompTheorem => {
                "I ≠ 0 non-prime: (Γ_I(R) complemented ∧ |V(Γ(R/I))| ≥ 2) ⟺ (Γ(R/I) complemented ∧ √I = I)"
            }
            Check::ClassificationCorollary => {
                "I ≠ 0 non-prime: Γ_I(R) complemented ⟺ exactly one of (1) |Z(R/I)| = 2 ∧ |I| = 2, (2) Γ(R/I) complemented ∧ √I = I; never both"
            }
            Check::PerpLifting => "√I = I: x ⊥ y in Γ_I(R) ⟺ x+I ⊥ y+I in Γ(R/I)",
            Check::AnnihilatorLemma => {
                "√I = I, Γ(R/I) uniquely complemented, x ⊥ y, x ⊥ z, α ∉ I ⇒ (αy ∈ I ⟺ αz ∈ I)"
            }
            Check::CompIffUc => "Γ_I(R) complemented ⟺ Γ_I(R) uniquely complemented",
            Check::RadicalEquivalences => {
                "√I = I: Γ_I(R) comp ⟺ Γ_I(R) uc ⟺ Γ(R/I) comp ⟺ Γ(R/I) uc ⟺ T(R/I) von Neumann regular"
            }
            Check::InflationStructure => {
                "x — y in Γ_I(R) ⟺ (x+I ≠ y+I ∧ (x+I)(y+I) = 0) ∨ (x+I = y+I ∧ (x+I)² = 0)"
            }
            Check::NonemptyIffNotPrime => "Γ_I(R) and Γ(R/I) nonempty ⟺ I not prime",
            Check::GammaConnected => "Γ(R/I) and Γ_I(R) connected with diameter ≤ 3",
            Check::RingConsistency => {
                "ring axioms; R/I reduced ⟺ √I = I ⟺ R/I von Neumann regular; I prime ⟺ R/I a domain; |R| = |I|·|R/I|; regular ⇒ unit"
            }
        }
    }
}

/// Test hook that corrupts the computed `Γ_I(R)` before checks run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum FaultInjection {
    #[default]
    None,
    /// Remove the first edge of every nonempty `Γ_I(R)`.
    DropEdge,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_order: usize,
    pub enumeration_cap: usize,
    /// Worker threads; `Some(1)` runs single-threaded, `None` uses all cores.
    pub jobs: Option<usize>,
    pub fault: FaultInjection,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_order: DEFAULT_MAX_ORDER,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            jobs: None,
            fault: FaultInjection::None,
        }
    }
}

/// Everything the checks need about one `(R, I)` pair, computed once.
pub struct PairAnalysis<'r> {
    pub ring: &'r FiniteRing,
    pub ideal: Ideal,
    pub radical: Ideal,
    pub is_radical: bool,
    pub is_prime: bool,
    pub quotient: Quotient,
    /// `Γ_I(R)`.
    pub gi: SimpleGraph,
    /// `Γ(R/I)`.
    pub gq: SimpleGraph,
    pub gi_complemented: bool,
    pub gi_uniquely_complemented: bool,
    pub gq_complemented: bool,
    pub gq_uniquely_complemented: bool,
    pub gi_complete: Completeness,
    pub quotient_reduced: bool,
    /// `None` when the regular-implies-unit check failed.
    pub quotient_vnr: Option<bool>,
    pub quotient_z_count: usize,
}

impl<'r> PairAnalysis<'r> {
    pub fn new(ring: &'r FiniteRing, ideal: Ideal) -> Result<Self> {
        Self::with_fault(ring, ideal, FaultInjection::None)
    }

    pub fn with_fault(ring: &'r FiniteRing, ideal: Ideal, fault: FaultInjection) -> Result<Self> {
        let quotient = quotient_ring(ring, &ideal)?;
        let radical = radical(ring, &ideal)?;
        let is_radical = radical.members() == ideal.members();
        let is_prime = is_prime(ring, &ideal);
        let mut gi = gamma_ideal(ring, &ideal)?;
        if fault == FaultInjection::DropEdge {
            if let Some(&(a, b)) = gi.edges().first() {
                gi = gi.without_edge(a, b);
            }
        }
        let gq = gamma(&quotient.ring);
        let quotient_vnr = quotient
            .ring
            .total_quotient_ring()
            .ok()
            .map(FiniteRing::is_von_neumann_regular);
        Ok(PairAnalysis {
            ring,
            radical,
            is_radical,
            is_prime,
            gi_complemented: gi.is_complemented(),
            gi_uniquely_complemented: gi.is_uniquely_complemented(),
            gq_complemented: gq.is_complemented(),
            gq_uniquely_complemented: gq.is_uniquely_complemented(),
            gi_complete: gi.is_complete(),
            quotient_reduced: quotient.ring.is_reduced(),
            quotient_vnr,
            quotient_z_count: quotient.ring.zero_divisors().len(),
            ideal,
            quotient,
            gi,
            gq,
        })
    }

    fn is_k2(&self) -> bool {
        self.gi_complete.complete && self.gi_complete.n == 2
    }

    /// Case (1): `|Z(R/I)| = 2` and `|I| = 2`.
    pub fn case_one(&self) -> bool {
        self.quotient_z_count == 2 && self.ideal.len() == 2
    }

    /// Case (2): `Γ(R/I)` complemented and `I` radical.
    pub fn case_two(&self) -> bool {
        self.gq_complemented && self.is_radical
    }

    /// Which classification case holds, for proper nonzero non-prime `I`.
    pub fn classification_case(&self) -> Option<u8> {
        if self.ideal.is_zero() || self.is_prime {
            return None;
        }
        match (self.case_one(), self.case_two()) {
            (true, false) => Some(1),
            (false, true) => Some(2),
            _ => None,
        }
    }

    /// `R/I` as a known small ring when it has exactly two zero-divisors.
    pub fn quotient_label(&self) -> Option<&'static str> {
        if self.quotient_z_count != 2 || self.quotient.ring.order() != 4 {
            return None;
        }
        let z4 = build_zn(4).ok()?;
        let dual = build_poly_quotient(2, &[0, 0, 1]).ok()?;
        if self.quotient.ring.is_isomorphic_small(&z4).ok()? {
            Some("Z_4")
        } else if self.quotient.ring.is_isomorphic_small(&dual).ok()? {
            Some("Z_2[x]/(x^2)")
        } else {
            None
        }
    }

    pub fn verdict(&self) -> PropertyVerdict {
        PropertyVerdict {
            ring_spec: self.ring.spec().to_string(),
            ring_order: self.ring.order(),
            ideal_members: self.ideal.members().members().to_vec(),
            ideal_generators: self.ideal.generators().to_vec(),
            ideal_is_zero: self.ideal.is_zero(),
            ideal_is_radical: self.is_radical,
            ideal_is_prime: self.is_prime,
            quotient_order: self.quotient.ring.order(),
            quotient_label: self.quotient_label().map(str::to_string),
            quotient_vertex_count: self.gq.vertex_count(),
            gi_vertex_count: self.gi.vertex_count(),
            gi_edge_count: self.gi.edge_count(),
            gi_complete_n: self.gi_complete.complete.then_some(self.gi_complete.n),
            gi_complemented: self.gi_complemented,
            gi_uniquely_complemented: self.gi_uniquely_complemented,
            quotient_graph_complemented: self.gq_complemented,
            quotient_graph_uniquely_complemented: self.gq_uniquely_complemented,
            quotient_reduced: self.quotient_reduced,
            quotient_vnr: self.quotient_vnr.unwrap_or(false),
            quotient_z_count: self.quotient_z_count,
            classification_case: self.classification_case(),
        }
    }

    fn name(&self, x: Element) -> String {
        self.ring.name(x).to_string()
    }

    fn vertex_name(&self, v: Vertex) -> String {
        self.gi.label(v).to_string()
    }

    fn fail(&self, detail: impl Into<String>, witness: Vec<String>) -> Outcome {
        Outcome::Fail(Counterexample {
            ring_spec: self.ring.spec().to_string(),
            ideal_members: self.ideal.members().members().to_vec(),
            ideal_generators: self.ideal.generators().to_vec(),
            detail: detail.into(),
            witness,
        })
    }

    fn biconditional(&self, lhs: bool, rhs: bool, what: &str) -> Outcome {
        if lhs == rhs {
            Outcome::Pass
        } else {
            self.fail(format!("{what}: left side {lhs}, right side {rhs}"), vec![])
        }
    }

    pub fn evaluate(&self, check: Check) -> Outcome {
        match check {
            Check::Cardinality => self.check_cardinality(),
            Check::NonradicalNotComplemented => self.check_nonradical_not_complemented(),
            Check::CompleteLemma => self.check_complete_lemma(),
            Check::NonradicalTheorem => self.check_nonradical_theorem(),
            Check::CompTheorem => self.check_comp_theorem(),
            Check::ClassificationCorollary => self.check_classification_corollary(),
            Check::PerpLifting => self.check_perp_lifting(),
            Check::AnnihilatorLemma => self.check_annihilator_lemma(),
            Check::CompIffUc => self.check_comp_iff_uc(),
            Check::RadicalEquivalences => self.check_radical_equivalences(),
            Check::InflationStructure => self.check_inflation_structure(),
            Check::NonemptyIffNotPrime => self.check_nonempty_iff_not_prime(),
            Check::GammaConnected => self.check_gamma_connected(),
            Check::RingConsistency => self.check_ring_consistency(None),
        }
    }

    pub fn check_cardinality(&self) -> Outcome {
        let lhs = self.gi.vertex_count();
        let rhs = self.ideal.len() * self.gq.vertex_count();
        if lhs == rhs {
            Outcome::Pass
        } else {
            self.fail(
                format!(
                    "|V(Γ_I(R))| = {lhs} but |I|·|V(Γ(R/I))| = {}·{}",
                    self.ideal.len(),
                    self.gq.vertex_count()
                ),
                vec![],
            )
        }
    }

    pub fn check_nonradical_not_complemented(&self) -> Outcome {
        if self.ideal.is_zero() || self.is_radical || self.gq.vertex_count() < 2 {
            return Outcome::NotApplicable;
        }
        if !self.gi_complemented {
            return Outcome::Pass;
        }
        // the witness the argument predicts: r outside I with r² in I
        let r = self
            .ring
            .elements()
            .find(|&r| !self.ideal.contains(r) && self.ideal.contains(self.ring.mul(r, r)));
        let mut witness = Vec::new();
        if let Some(v) = r.and_then(|r| self.gi.position_of(r)) {
            witness.push(self.vertex_name(v));
            if let Some(&c) = self.gi.complements(v).unwrap_or_default().first() {
                witness.push(self.vertex_name(c));
            }
        }
        self.fail("Γ_I(R) is complemented", witness)
    }

    pub fn check_complete_lemma(&self) -> Outcome {
        if self.gq.vertex_count() != 1 {
            return Outcome::NotApplicable;
        }
        if self.gi_complete.complete && self.gi_complete.n == self.ideal.len() {
            Outcome::Pass
        } else {
            let missing = self
                .gi
                .edges_missing()
                .map(|(a, b)| vec![self.vertex_name(a), self.vertex_name(b)])
                .unwrap_or_default();
            self.fail(
                format!(
                    "Γ_I(R) has {} vertices (complete: {}), expected K^{}",
                    self.gi_complete.n,
                    self.gi_complete.complete,
                    self.ideal.len()
                ),
                missing,
            )
        }
    }

    pub fn check_nonradical_theorem(&self) -> Outcome {
        if self.is_radical || self.is_prime {
            return Outcome::NotApplicable;
        }
        self.biconditional(
            self.gi_complemented,
            self.is_k2(),
            "Γ_I(R) complemented vs Γ_I(R) ≅ K^2",
        )
    }

    pub fn check_comp_theorem(&self) -> Outcome {
        if self.ideal.is_zero() || self.is_prime {
            return Outcome::NotApplicable;
        }
        self.biconditional(
            self.gi_complemented && self.gq.vertex_count() >= 2,
            self.gq_complemented && self.is_radical,
            "(Γ_I(R) complemented ∧ |V(Γ(R/I))| ≥ 2) vs (Γ(R/I) complemented ∧ √I = I)",
        )
    }

    pub fn check_classification_corollary(&self) -> Outcome {
        if self.ideal.is_zero() || self.is_prime {
            return Outcome::NotApplicable;
        }
        let (one, two) = (self.case_one(), self.case_two());
        if one && two {
            return self.fail("cases (1) and (2) hold simultaneously", vec![]);
        }
        self.biconditional(
            self.gi_complemented,
            one || two,
            "Γ_I(R) complemented vs case (1) ∨ case (2)",
        )
    }

    pub fn check_perp_lifting(&self) -> Outcome {
        if !self.is_radical || self.is_prime {
            return Outcome::NotApplicable;
        }
        let n = self.gi.vertex_count();
        for x in 0..n {
            for y in x + 1..n {
                let lhs = self.gi.are_orthogonal(x, y).unwrap_or(false);
                let cx = self.quotient.project(self.gi.element(x));
                let cy = self.quotient.project(self.gi.element(y));
                let witness = || vec![self.vertex_name(x), self.vertex_name(y)];
                if lhs && cx == cy {
                    return self.fail("orthogonal vertices share a coset", witness());
                }
                let rhs = cx != cy
                    && match (self.gq.position_of(cx), self.gq.position_of(cy)) {
                        (Some(qx), Some(qy)) => self.gq.are_orthogonal(qx, qy).unwrap_or(false),
                        _ => {
                            return self
                                .fail("coset of a Γ_I(R) vertex is not in Γ(R/I)", witness())
                        }
                    };
                if lhs != rhs {
                    return self.fail(
                        format!("x ⊥ y in Γ_I(R) is {lhs}, x+I ⊥ y+I in Γ(R/I) is {rhs}"),
                        witness(),
                    );
                }
            }
        }
        Outcome::Pass
    }

    pub fn check_annihilator_lemma(&self) -> Outcome {
        if !self.is_radical || !self.gq_uniquely_complemented {
            return Outcome::NotApplicable;
        }
        let outside: Vec<Element> = self
            .ring
            .elements()
            .filter(|&a| !self.ideal.contains(a))
            .collect();
        let kills = |alpha: Element, v: Vertex| {
            self.ideal
                .contains(self.ring.mul(alpha, self.gi.element(v)))
        };
        // "αy ∈ I ⟺ αz ∈ I for all α" is an equivalence, so comparing
        // every complement against the first one suffices
        for x in 0..self.gi.vertex_count() {
            let comps = self.gi.complements(x).unwrap_or_default();
            let Some((&y, rest)) = comps.split_first() else {
                continue;
            };
            for &z in rest {
                if let Some(&alpha) = outside.iter().find(|&&a| kills(a, y) != kills(a, z)) {
                    return self.fail(
                        "α·y ∈ I and α·z ∈ I disagree",
                        vec![
                            self.vertex_name(x),
                            self.vertex_name(y),
                            self.vertex_name(z),
                            self.name(alpha),
                        ],
                    );
                }
            }
        }
        Outcome::Pass
    }

    pub fn check_comp_iff_uc(&self) -> Outcome {
        if self.gi_complemented == self.gi_uniquely_complemented {
            return Outcome::Pass;
        }
        let witness = self
            .gi
            .unique_complement_violation()
            .map(|(a, b, c)| {
                vec![
                    self.vertex_name(a),
                    self.vertex_name(b),
                    self.vertex_name(c),
                ]
            })
            .unwrap_or_default();
        self.fail(
            "Γ_I(R) is complemented but not uniquely complemented",
            witness,
        )
    }

    pub fn check_radical_equivalences(&self) -> Outcome {
        if !self.is_radical {
            return Outcome::NotApplicable;
        }
        let Some(vnr) = self.quotient_vnr else {
            return self.fail("R/I has a regular element that is not a unit", vec![]);
        };
        let values = [
            self.gi_complemented,
            self.gi_uniquely_complemented,
            self.gq_complemented,
            self.gq_uniquely_complemented,
            vnr,
        ];
        if values.iter().all(|&v| v == values[0]) {
            Outcome::Pass
        } else {
            self.fail(
                format!(
                    "Γ_I comp {}, Γ_I uc {}, Γ(R/I) comp {}, Γ(R/I) uc {}, T(R/I) VNR {}",
                    values[0], values[1], values[2], values[3], values[4]
                ),
                vec![],
            )
        }
    }

    pub fn check_inflation_structure(&self) -> Outcome {
        let q = &self.quotient;
        let qr = &q.ring;
        let expected: Vec<Element> = self
            .ring
            .elements()
            .filter(|&x| !self.ideal.contains(x) && self.gq.position_of(q.project(x)).is_some())
            .collect();
        if expected != self.gi.elements() {
            return self.fail("vertex set differs from the preimage of V(Γ(R/I))", vec![]);
        }
        let n = self.gi.vertex_count();
        for a in 0..n {
            for b in a + 1..n {
                let (ca, cb) = (q.project(self.gi.element(a)), q.project(self.gi.element(b)));
                let predicted = if ca != cb {
                    qr.mul(ca, cb) == qr.zero()
                } else {
                    qr.mul(ca, ca) == qr.zero()
                };
                if predicted != self.gi.is_adjacent(a, b) {
                    return self.fail(
                        format!(
                            "adjacency is {} but the coset rule predicts {predicted}",
                            self.gi.is_adjacent(a, b)
                        ),
                        vec![self.vertex_name(a), self.vertex_name(b)],
                    );
                }
            }
        }
        Outcome::Pass
    }

    pub fn check_nonempty_iff_not_prime(&self) -> Outcome {
        if self.gi.is_empty() != self.is_prime || self.gq.is_empty() != self.is_prime {
            return self.fail(
                format!(
                    "prime {}, Γ_I(R) empty {}, Γ(R/I) empty {}",
                    self.is_prime,
                    self.gi.is_empty(),
                    self.gq.is_empty()
                ),
                vec![],
            );
        }
        Outcome::Pass
    }

    pub fn check_gamma_connected(&self) -> Outcome {
        if self.gq.is_empty() && self.gi.is_empty() {
            return Outcome::NotApplicable;
        }
        for (which, g) in [("Γ(R/I)", &self.gq), ("Γ_I(R)", &self.gi)] {
            let c = g.connectivity();
            if !c.connected || c.diameter.is_some_and(|d| d > 3) {
                return self.fail(
                    format!(
                        "{which}: connected {}, diameter {:?}",
                        c.connected, c.diameter
                    ),
                    vec![],
                );
            }
        }
        Outcome::Pass
    }

    /// `ring_axioms` carries the (cached) axiom scan of `R`, if already run.
    pub fn check_ring_consistency(&self, ring_axioms: Option<&Result<()>>) -> Outcome {
        let own;
        let ring_axioms = match ring_axioms {
            Some(r) => r,
            None => {
                own = scan_axioms(self.ring);
                &own
            }
        };
        if let Err(e) = ring_axioms {
            return self.fail(format!("R: {e}"), vec![]);
        }
        let qr = &self.quotient.ring;
        if let Err(e) = scan_axioms(qr) {
            return self.fail(format!("R/I: {e}"), vec![]);
        }
        let Some(vnr) = self.quotient_vnr else {
            return self.fail("R/I has a regular element that is not a unit", vec![]);
        };
        if !(self.quotient_reduced == self.is_radical && vnr == self.is_radical) {
            return self.fail(
                format!(
                    "R/I reduced {}, √I = I {}, R/I VNR {vnr}",
                    self.quotient_reduced, self.is_radical
                ),
                vec![],
            );
        }
        let domain = qr.zero_divisors().len() == 1;
        if domain != self.is_prime {
            return self.fail(
                format!("I prime {} but R/I domain {domain}", self.is_prime),
                vec![],
            );
        }
        if self.ring.order() != self.ideal.len() * qr.order() {
            return self.fail("|R| ≠ |I|·|R/I|", vec![]);
        }
        let idempotent = radical(self.ring, &self.radical)
            .map(|r| r.members() == self.radical.members())
            .unwrap_or(false);
        let contains = self
            .ideal
            .members()
            .iter()
            .all(|x| self.radical.contains(x));
        if !idempotent || !contains {
            return self.fail("√I is not an idempotent enlargement of I", vec![]);
        }
        Outcome::Pass
    }
}

fn scan_axioms(ring: &FiniteRing) -> Result<()> {
    if ring.order() <= AXIOM_SCAN_CAP {
        ring.verify_axioms()
    } else {
        Ok(())
    }
}

trait MissingEdge {
    fn edges_missing(&self) -> Option<(Vertex, Vertex)>;
}

impl MissingEdge for SimpleGraph {
    fn edges_missing(&self) -> Option<(Vertex, Vertex)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| !self.is_adjacent(a, b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub ring_spec: String,
    pub ideal_members: Vec<Element>,
    pub ideal_generators: Vec<Element>,
    pub detail: String,
    /// Element names of the witnessing vertices or scalars.
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    NotApplicable,
    Pass,
    Fail(Counterexample),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self, Outcome::NotApplicable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub ring_spec: String,
    pub ring_order: usize,
    pub ideal_members: Vec<Element>,
    pub ideal_generators: Vec<Element>,
    pub ideal_is_zero: bool,
    pub ideal_is_radical: bool,
    pub ideal_is_prime: bool,
    pub quotient_order: usize,
    pub quotient_label: Option<String>,
    pub quotient_vertex_count: usize,
    pub gi_vertex_count: usize,
    pub gi_edge_count: usize,
    pub gi_complete_n: Option<usize>,
    pub gi_complemented: bool,
    pub gi_uniquely_complemented: bool,
    pub quotient_graph_complemented: bool,
    pub quotient_graph_uniquely_complemented: bool,
    pub quotient_reduced: bool,
    pub quotient_vnr: bool,
    pub quotient_z_count: usize,
    pub classification_case: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_name: &'static str,
    pub statement: &'static str,
    pub pairs_tested: usize,
    pub pairs_applicable: usize,
    pub failure_count: usize,
    pub passed: bool,
    /// Applicable to fewer than [`MIN_APPLICABLE`] pairs.
    pub low_coverage: bool,
    pub failures: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedEntry {
    pub ring_spec: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub tool_version: &'static str,
    pub catalogue: String,
    pub notes: Vec<&'static str>,
    pub rings_tested: usize,
    pub pairs_tested: usize,
    pub skipped: Vec<SkippedEntry>,
    pub checks: Vec<CheckResult>,
    pub verdicts: Vec<PropertyVerdict>,
    pub failures_total: usize,
}

impl VerificationReport {
    pub fn check(&self, check: Check) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_name == check.name())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

struct PairResult {
    verdict: PropertyVerdict,
    outcomes: Vec<Outcome>,
}

enum EntryResult {
    Pairs(Vec<PairResult>),
    Skipped(SkippedEntry),
}

fn entry_ideals(
    ring: &FiniteRing,
    filter: Option<&Vec<Vec<Element>>>,
    cap: usize,
) -> Result<Vec<Ideal>> {
    let ideals = match filter {
        None => all_ideals(ring, cap)?,
        Some(lists) => {
            let mut out: Vec<Ideal> = Vec::new();
            for gens in lists {
                let ideal = generate_ideal(ring, gens)?;
                if !ideal.is_proper() {
                    return Err(Error::ImproperIdeal);
                }
                if !out.iter().any(|i| i.members() == ideal.members()) {
                    out.push(ideal);
                }
            }
            out
        }
    };
    Ok(ideals.into_iter().filter(Ideal::is_proper).collect())
}

fn evaluate_entry(entry: &crate::catalogue::CatalogueEntry, config: &VerifyConfig) -> EntryResult {
    let spec = entry.spec.to_string();
    let skipped = |e: Error| {
        info!("skipping {spec}: {e}");
        EntryResult::Skipped(SkippedEntry {
            ring_spec: spec.clone(),
            reason: e.to_string(),
        })
    };
    let ring = match entry.spec.build(config.max_order) {
        Ok(r) => r,
        Err(e) => return skipped(e),
    };
    let ideals = match entry_ideals(&ring, entry.ideals.as_ref(), config.enumeration_cap) {
        Ok(i) => i,
        Err(e) => return skipped(e),
    };
    let axioms = scan_axioms(&ring);
    let mut pairs = Vec::with_capacity(ideals.len());
    for ideal in ideals {
        let analysis = match PairAnalysis::with_fault(&ring, ideal, config.fault) {
            Ok(a) => a,
            Err(e) => return skipped(e),
        };
        let outcomes = Check::ALL
            .iter()
            .map(|&check| match check {
                Check::RingConsistency => analysis.check_ring_consistency(Some(&axioms)),
                other => analysis.evaluate(other),
            })
            .collect();
        pairs.push(PairResult {
            verdict: analysis.verdict(),
            outcomes,
        });
    }
    debug!("{spec}: {} pair(s)", pairs.len());
    EntryResult::Pairs(pairs)
}

/// Runs every check over every proper ideal of every catalogue ring.
pub fn run_catalogue(catalogue: &Catalogue, config: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let results: Vec<EntryResult> = match config.jobs {
        Some(1) => catalogue
            .entries
            .iter()
            .map(|e| evaluate_entry(e, config))
            .collect(),
        jobs => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| Error::Catalogue(format!("thread pool: {e}")))?;
            pool.install(|| {
                catalogue
                    .entries
                    .par_iter()
                    .map(|e| evaluate_entry(e, config))
                    .collect()
            })
        }
    };

    let mut pairs = Vec::new();
    let mut skipped = Vec::new();
    let mut rings_tested = 0;
    for r in results {
        match r {
            EntryResult::Pairs(p) => {
                rings_tested += 1;
                pairs.extend(p);
            }
            EntryResult::Skipped(s) => skipped.push(s),
        }
    }
    pairs.sort_by(|a, b| {
        (&a.verdict.ring_spec, &a.verdict.ideal_members)
            .cmp(&(&b.verdict.ring_spec, &b.verdict.ideal_members))
    });
    skipped.sort_by(|a, b| a.ring_spec.cmp(&b.ring_spec));

    let checks: Vec<CheckResult> = Check::ALL
        .iter()
        .enumerate()
        .map(|(k, &check)| {
            let mut applicable = 0;
            let mut failures = Vec::new();
            let mut failure_count = 0;
            for p in &pairs {
                match &p.outcomes[k] {
                    Outcome::NotApplicable => {}
                    Outcome::Pass => applicable += 1,
                    Outcome::Fail(c) => {
                        applicable += 1;
                        failure_count += 1;
                        if failures.len() < STORED_FAILURES_PER_CHECK {
                            failures.push(c.clone());
                        }
                    }
                }
            }
            CheckResult {
                check_name: check.name(),
                statement: check.statement(),
                pairs_tested: pairs.len(),
                pairs_applicable: applicable,
                failure_count,
                passed: failure_count == 0,
                low_coverage: applicable < MIN_APPLICABLE,
                failures,
            }
        })
        .collect();
    let failures_total = checks.iter().map(|c| c.failure_count).sum();
    info!(
        "verified {} pair(s) over {} ring(s) in {:.2?}; {} failure(s)",
        pairs.len(),
        rings_tested,
        started.elapsed(),
        failures_total
    );
    Ok(VerificationReport {
        tool_version: env!("CARGO_PKG_VERSION"),
        catalogue: catalogue.description.clone(),
        notes: vec![TOTAL_QUOTIENT_NOTE],
        rings_tested,
        pairs_tested: pairs.len(),
        skipped,
        checks,
        verdicts: pairs.into_iter().map(|p| p.verdict).collect(),
        failures_total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_zn, direct_product};

    fn analyze(n: u64, gens: &[Element]) -> (FiniteRing, Vec<Element>) {
        (build_zn(n).unwrap(), gens.to_vec())
    }

    fn with<T>(n: u64, gens: &[Element], f: impl FnOnce(&PairAnalysis<'_>) -> T) -> T {
        let (ring, gens) = analyze(n, gens);
        let ideal = generate_ideal(&ring, &gens).unwrap();
        let a = PairAnalysis::new(&ring, ideal).unwrap();
        f(&a)
    }

    #[test]
    fn z8_mod_4() {
        with(8, &[4], |a| {
            assert!(a.gi_complemented && a.gi_uniquely_complemented);
            assert_eq!(a.classification_case(), Some(1));
            assert_eq!(a.quotient_label(), Some("Z_4"));
            assert_eq!(a.check_cardinality(), Outcome::Pass);
            assert_eq!(
                a.check_nonradical_not_complemented(),
                Outcome::NotApplicable
            );
            assert_eq!(a.check_complete_lemma(), Outcome::Pass);
            assert_eq!(a.check_nonradical_theorem(), Outcome::Pass);
            assert_eq!(a.check_comp_theorem(), Outcome::Pass);
            assert!(!(a.gi_complemented && a.gq.vertex_count() >= 2));
            assert_eq!(a.check_comp_iff_uc(), Outcome::Pass);
        });
    }

    #[test]
    fn z12_mod_6() {
        with(12, &[6], |a| {
            assert_eq!(a.classification_case(), Some(2));
            assert!(a.is_radical);
            for check in Check::ALL {
                assert!(!a.evaluate(check).is_fail(), "{check:?}");
            }
            assert!(a.check_perp_lifting().is_applicable());
            assert!(a.check_annihilator_lemma().is_applicable());
            assert_eq!(a.check_radical_equivalences(), Outcome::Pass);
            assert_eq!(a.quotient_vnr, Some(true));
        });
    }

    #[test]
    fn nonradical_cases_are_not_complemented() {
        with(24, &[8], |a| {
            assert_eq!(a.gi.vertex_count(), 9);
            assert_eq!(a.gq.vertex_count(), 3);
            assert!(!a.gi_complemented);
            assert_eq!(a.check_nonradical_not_complemented(), Outcome::Pass);
            assert_eq!(a.check_comp_theorem(), Outcome::Pass);
        });
        with(36, &[12], |a| {
            assert_eq!(a.gi.vertex_count(), 21);
            assert_eq!(a.gq.vertex_count(), 7);
            assert!(!a.gi_complemented);
            assert_eq!(a.check_nonradical_not_complemented(), Outcome::Pass);
            assert_eq!(a.check_nonradical_theorem(), Outcome::Pass);
        });
        with(16, &[4], |a| {
            assert_eq!(
                a.gi_complete,
                Completeness {
                    complete: true,
                    n: 4
                }
            );
            assert!(!a.gi_complemented);
            assert_eq!(a.check_complete_lemma(), Outcome::Pass);
            assert_eq!(a.classification_case(), None);
            assert_eq!(a.check_classification_corollary(), Outcome::Pass);
        });
    }

    #[test]
    fn prime_ideals_are_vacuous() {
        with(12, &[3], |a| {
            assert!(a.is_prime && a.gi.is_empty() && a.gq.is_empty());
            assert!(a.gi_complemented && a.gi_uniquely_complemented);
            assert_eq!(a.check_comp_iff_uc(), Outcome::Pass);
            assert_eq!(a.check_radical_equivalences(), Outcome::Pass);
            assert_eq!(a.check_cardinality(), Outcome::Pass);
            assert_eq!(a.check_comp_theorem(), Outcome::NotApplicable);
        });
    }

    #[test]
    fn zero_ideal_in_z6() {
        with(6, &[], |a| {
            assert_eq!(a.check_radical_equivalences(), Outcome::Pass);
            assert!(a.gi_complemented);
            assert_eq!(a.check_perp_lifting(), Outcome::Pass);
        });
    }

    #[test]
    fn fault_injection_is_detected() {
        let ring = build_zn(12).unwrap();
        let ideal = generate_ideal(&ring, &[6]).unwrap();
        let a = PairAnalysis::with_fault(&ring, ideal, FaultInjection::DropEdge).unwrap();
        match a.check_inflation_structure() {
            Outcome::Fail(c) => {
                assert_eq!(c.witness.len(), 2);
                assert_eq!(c.ring_spec, "Zn:12");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn products_of_fields_satisfy_everything() {
        let z2 = build_zn(2).unwrap();
        let z3 = build_zn(3).unwrap();
        let ring = direct_product(&direct_product(&z2, &z3).unwrap(), &z2).unwrap();
        for ideal in all_ideals(&ring, 256)
            .unwrap()
            .into_iter()
            .filter(Ideal::is_proper)
        {
            let a = PairAnalysis::new(&ring, ideal).unwrap();
            for check in Check::ALL {
                assert!(!a.evaluate(check).is_fail(), "{check:?}");
            }
        }
    }

    #[test]
    fn improper_ideal_is_an_error() {
        let ring = build_zn(6).unwrap();
        let whole = generate_ideal(&ring, &[1]).unwrap();
        assert!(matches!(
            PairAnalysis::new(&ring, whole),
            Err(Error::ImproperIdeal)
        ));
    }
}
