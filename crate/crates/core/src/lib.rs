//! Finite commutative rings, their ideal-based zero-divisor graphs, and an
//! exhaustive checker for when those graphs are (uniquely) complemented.

pub mod catalogue;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod ring;
pub mod spec;
pub mod verifier;

pub use catalogue::{Catalogue, CatalogueEntry};
pub use error::{Error, Result};
pub use graph::{gamma, gamma_ideal, Completeness, Connectivity, SimpleGraph, Vertex};
pub use ideal::{
    all_ideals, generate_ideal, is_prime, is_radical, quotient_ring, radical, Ideal, IdealRecord,
    Quotient, DEFAULT_ENUMERATION_CAP,
};
pub use ring::{
    build_poly_quotient, build_zn, direct_product, Element, ElementSet, FiniteRing,
    DEFAULT_MAX_ORDER,
};
pub use spec::{parse_ring_spec, RingSpec};
pub use verifier::{
    run_catalogue, Check, CheckResult, Counterexample, FaultInjection, Outcome, PairAnalysis,
    PropertyVerdict, VerificationReport, VerifyConfig,
};
