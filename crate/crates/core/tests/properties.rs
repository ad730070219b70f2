use std::collections::BTreeSet;

use proptest::prelude::*;
use zdgraph::{
    all_ideals, build_zn, direct_product, gamma, gamma_ideal, generate_ideal, is_prime,
    quotient_ring, radical, run_catalogue, Catalogue, Check, FiniteRing, Ideal, VerifyConfig,
};

fn catalogue_rings() -> Vec<FiniteRing> {
    Catalogue::default_catalogue()
        .entries
        .iter()
        .map(|e| e.spec.build(4096).unwrap())
        .collect()
}

#[test]
fn ring_invariants_over_catalogue() {
    for ring in catalogue_rings() {
        ring.verify_axioms().unwrap();
        assert_eq!(
            ring.is_reduced(),
            ring.is_von_neumann_regular(),
            "{}",
            ring.spec()
        );
        let zd = ring.zero_divisors();
        let units = ring.units();
        for x in ring.elements() {
            assert!(
                zd.contains(x) ^ units.contains(x),
                "{} element {x}",
                ring.spec()
            );
        }
        ring.total_quotient_ring().unwrap();
        for x in ring.elements().step_by(7) {
            let ann = ring.annihilator(x).unwrap();
            let ideal = generate_ideal(&ring, ann.members()).unwrap();
            assert_eq!(ideal.members(), &ann, "ann({x}) in {}", ring.spec());
        }
    }
}

#[test]
fn ideal_invariants_over_catalogue() {
    for ring in catalogue_rings() {
        let ideals = all_ideals(&ring, 256).unwrap();
        let distinct: BTreeSet<Vec<usize>> = ideals
            .iter()
            .map(|i| i.members().members().to_vec())
            .collect();
        assert_eq!(distinct.len(), ideals.len());
        assert_eq!(ideals.first().unwrap().len(), 1);
        assert_eq!(ideals.last().unwrap().len(), ring.order());
        for ideal in ideals.iter().filter(|i| i.is_proper()) {
            ideal.validate(&ring).unwrap();
            let regenerated = generate_ideal(&ring, ideal.generators()).unwrap();
            assert_eq!(regenerated.members(), ideal.members());

            let rad = radical(&ring, ideal).unwrap();
            assert!(ideal.members().iter().all(|x| rad.contains(x)));
            assert_eq!(radical(&ring, &rad).unwrap().members(), rad.members());

            let q = quotient_ring(&ring, ideal).unwrap();
            assert_eq!(ring.order(), ideal.len() * q.ring.order());
            assert_eq!(q.ring.is_reduced(), rad.members() == ideal.members());
            assert_eq!(is_prime(&ring, ideal), q.ring.zero_divisors().len() == 1);
        }
    }
}

#[test]
fn graph_invariants_over_catalogue() {
    for ring in catalogue_rings() {
        let g = gamma(&ring);
        if !g.is_empty() {
            let c = g.connectivity();
            assert!(c.connected && c.diameter.unwrap() <= 3, "{}", ring.spec());
        }
        for ideal in all_ideals(&ring, 256)
            .unwrap()
            .iter()
            .filter(|i| i.is_proper())
        {
            let gi = gamma_ideal(&ring, ideal).unwrap();
            let gq = gamma(&quotient_ring(&ring, ideal).unwrap().ring);
            assert_eq!(gi.vertex_count(), ideal.len() * gq.vertex_count());
            assert_eq!(gi.is_empty(), is_prime(&ring, ideal));
            let n = gi.vertex_count();
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    if gi.are_orthogonal(a, b).unwrap() {
                        assert!(gi.is_adjacent(a, b));
                    }
                    if gi.are_similar(a, b).unwrap() {
                        assert!(!gi.is_adjacent(a, b));
                    }
                }
            }
        }
    }
}

/// Every failure in the default catalogue sits at the zero ideal of a
/// non-reduced ring; on nonzero ideals every check holds.
#[test]
fn default_catalogue_failures_are_exactly_zero_ideals_of_nonreduced_rings() {
    let report = run_catalogue(
        &Catalogue::default_catalogue(),
        &VerifyConfig {
            jobs: None,
            ..VerifyConfig::default()
        },
    )
    .unwrap();
    for check in &report.checks {
        let allowed = check.check_name == Check::NonradicalTheorem.name()
            || check.check_name == Check::CompIffUc.name();
        if !allowed {
            assert_eq!(check.failure_count, 0, "{}", check.check_name);
        }
        for f in &check.failures {
            assert_eq!(
                f.ideal_members,
                [0],
                "{} on {}",
                check.check_name,
                f.ring_spec
            );
        }
    }
    for v in &report.verdicts {
        let moreover_fails = v.gi_complemented != v.gi_uniquely_complemented;
        let nonradical_fails =
            !v.ideal_is_radical && v.gi_complemented != (v.gi_complete_n == Some(2));
        if moreover_fails || nonradical_fails {
            assert!(v.ideal_is_zero && !v.ideal_is_radical, "{}", v.ring_spec);
        }
    }
    assert_eq!(
        report
            .check(Check::NonradicalTheorem)
            .unwrap()
            .failure_count,
        21
    );
    assert_eq!(report.check(Check::CompIffUc).unwrap().failure_count, 18);
    let z12 = report
        .check(Check::CompIffUc)
        .unwrap()
        .failures
        .iter()
        .find(|f| f.ring_spec == "Zn:12")
        .unwrap();
    assert_eq!(z12.witness, ["4", "3", "6"]);
}

fn zn_oracle_graph(n: usize, ideal: &[usize]) -> (Vec<usize>, BTreeSet<(usize, usize)>) {
    let inside = |x: usize| ideal.contains(&x);
    let outside: Vec<usize> = (0..n).filter(|&x| !inside(x)).collect();
    let vertices: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| outside.iter().any(|&y| inside(x * y % n)))
        .collect();
    let mut edges = BTreeSet::new();
    for &a in &vertices {
        for &b in &vertices {
            if a < b && inside(a * b % n) {
                edges.insert((a, b));
            }
        }
    }
    (vertices, edges)
}

proptest! {
    #[test]
    fn gamma_ideal_matches_integer_oracle(n in 2u64..80, g in 0usize..80) {
        let ring = build_zn(n).unwrap();
        let gen = g % n as usize;
        let ideal: Ideal = generate_ideal(&ring, &[gen]).unwrap();
        prop_assume!(ideal.is_proper());
        let d = gcd(gen, n as usize);
        let expected_members: Vec<usize> = (0..n as usize).filter(|x| x % d == 0).collect();
        prop_assert_eq!(ideal.members().members(), &expected_members[..]);

        let graph = gamma_ideal(&ring, &ideal).unwrap();
        let (vertices, edges) = zn_oracle_graph(n as usize, &expected_members);
        prop_assert_eq!(graph.elements(), &vertices[..]);
        let got: BTreeSet<(usize, usize)> = graph
            .edges()
            .into_iter()
            .map(|(a, b)| (graph.element(a), graph.element(b)))
            .collect();
        prop_assert_eq!(got, edges);
    }

    #[test]
    fn product_ideal_quotients_are_consistent(m in 2u64..9, n in 2u64..9, gens in prop::collection::vec(0usize..64, 0..3)) {
        let ring = direct_product(&build_zn(m).unwrap(), &build_zn(n).unwrap()).unwrap();
        let gens: Vec<usize> = gens.into_iter().map(|g| g % ring.order()).collect();
        let ideal = generate_ideal(&ring, &gens).unwrap();
        ideal.validate(&ring).unwrap();
        prop_assume!(ideal.is_proper());
        let q = quotient_ring(&ring, &ideal).unwrap();
        q.ring.verify_axioms().unwrap();
        for x in ring.elements() {
            for y in ring.elements() {
                prop_assert_eq!(q.project(ring.mul(x, y)), q.ring.mul(q.project(x), q.project(y)));
                prop_assert_eq!(q.project(ring.add(x, y)), q.ring.add(q.project(x), q.project(y)));
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
