//! Shared workloads for the criterion benchmarks under `benches/`.

use zdgraph::{parse_ring_spec, Catalogue, FiniteRing, Ideal, DEFAULT_MAX_ORDER};

/// Rings of increasing size paired with one nonzero non-prime ideal each.
pub const GRAPH_CASES: [(&str, usize); 4] = [
    ("Zn:36", 12),
    ("Zn:96", 8),
    ("prod(Zn:8,Zn:8)", 18),
    ("polyq:3:0,0,0,0,1", 9),
];

pub fn ring(spec: &str) -> FiniteRing {
    parse_ring_spec(spec)
        .and_then(|s| s.build(DEFAULT_MAX_ORDER))
        .expect("benchmark ring spec")
}

pub fn ring_with_ideal(spec: &str, generator: usize) -> (FiniteRing, Ideal) {
    let r = ring(spec);
    let ideal = zdgraph::generate_ideal(&r, &[generator]).expect("benchmark ideal");
    (r, ideal)
}

/// The first `n` rings of the default catalogue.
pub fn catalogue_prefix(n: usize) -> Catalogue {
    let mut cat = Catalogue::default_catalogue();
    cat.entries.truncate(n);
    cat.description = format!("first {n} default rings");
    cat
}
