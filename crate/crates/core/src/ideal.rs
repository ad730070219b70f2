//! Ideals of a finite ring: closure, enumeration, radicals, quotients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Element, ElementSet, FiniteRing};

/// Default cap on ring order for [`all_ideals`].
pub const DEFAULT_ENUMERATION_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: ElementSet,
    generators: Vec<Element>,
}

/// JSON view of an ideal: sorted members plus generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealRecord {
    pub members: Vec<Element>,
    pub generators: Vec<Element>,
}

impl Ideal {
    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Never true: every ideal contains zero.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.members.universe()
    }

    pub fn record(&self) -> IdealRecord {
        IdealRecord {
            members: self.members.members().to_vec(),
            generators: self.generators.clone(),
        }
    }

    /// Generators joined for display, `"0"` for the zero ideal with no generators.
    pub fn generator_list(&self) -> String {
        if self.generators.is_empty() {
            "0".to_string()
        } else {
            self.generators
                .iter()
                .map(Element::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Checks 0-membership, additive closure, and absorption.
    pub fn validate(&self, ring: &FiniteRing) -> Result<()> {
        if self.members.universe() != ring.order() {
            return Err(Error::OrderMismatch(self.members.universe(), ring.order()));
        }
        if !self.contains(ring.zero()) {
            return Err(Error::Inconsistent("ideal is missing zero".into()));
        }
        for a in self.members.iter() {
            for b in self.members.iter() {
                if !self.contains(ring.add(a, b)) {
                    return Err(Error::Inconsistent(format!(
                        "ideal not closed under {a}+{b}"
                    )));
                }
            }
            for r in ring.elements() {
                if !self.contains(ring.mul(r, a)) {
                    return Err(Error::Inconsistent(format!(
                        "ideal does not absorb {r}*{a}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Additive closure of `seeds` together with zero.
fn additive_closure(ring: &FiniteRing, seeds: &[Element]) -> Vec<bool> {
    let mut mask = vec![false; ring.order()];
    mask[ring.zero()] = true;
    let mut found = vec![ring.zero()];
    let mut next = 0;
    while next < found.len() {
        let x = found[next];
        next += 1;
        for &s in seeds {
            let y = ring.add(x, s);
            if !mask[y] {
                mask[y] = true;
                found.push(y);
            }
        }
    }
    mask
}

/// The smallest ideal containing `gens`.
pub fn generate_ideal(ring: &FiniteRing, gens: &[Element]) -> Result<Ideal> {
    for &g in gens {
        ring.check_element(g)?;
    }
    let mut seeds_mask = vec![false; ring.order()];
    for &g in gens {
        for r in ring.elements() {
            seeds_mask[ring.mul(r, g)] = true;
        }
    }
    let seeds: Vec<Element> = (0..ring.order()).filter(|&x| seeds_mask[x]).collect();
    Ok(Ideal {
        members: ElementSet::from_mask(additive_closure(ring, &seeds)),
        generators: gens.to_vec(),
    })
}

/// Wraps an ideal given by its member mask, choosing generators greedily in
/// index order. Fails if the mask is not an ideal.
pub fn ideal_from_mask(ring: &FiniteRing, mask: Vec<bool>) -> Result<Ideal> {
    let target = ElementSet::from_mask(mask);
    let mut gens = Vec::new();
    let mut current = generate_ideal(ring, &[])?;
    for x in target.iter() {
        if !current.contains(x) {
            gens.push(x);
            current = generate_ideal(ring, &gens)?;
        }
    }
    if current.members != target {
        return Err(Error::Inconsistent("member set is not an ideal".into()));
    }
    Ok(current)
}

fn ideal_sum(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Ideal {
    let mut mask = vec![false; ring.order()];
    for x in a.members.iter() {
        for y in b.members.iter() {
            mask[ring.add(x, y)] = true;
        }
    }
    let mut generators = a.generators.clone();
    for &g in &b.generators {
        if !generators.contains(&g) {
            generators.push(g);
        }
    }
    generators.sort_unstable();
    Ideal {
        members: ElementSet::from_mask(mask),
        generators,
    }
}

/// Every ideal of `ring`, from the principal ideals closed under pairwise
/// sums. Sorted by size, then member sequence.
pub fn all_ideals(ring: &FiniteRing, cap: usize) -> Result<Vec<Ideal>> {
    if ring.order() > cap {
        return Err(Error::EnumerationCapExceeded {
            order: ring.order(),
            cap,
        });
    }
    let mut ideals: Vec<Ideal> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for x in ring.elements() {
        let principal = generate_ideal(ring, &[x])?;
        if seen.insert(principal.members.mask().to_vec()) {
            ideals.push(principal);
        }
    }
    let mut i = 0;
    while i < ideals.len() {
        for j in 0..i {
            let sum = ideal_sum(ring, &ideals[i], &ideals[j]);
            if seen.insert(sum.members.mask().to_vec()) {
                ideals.push(sum);
            }
        }
        i += 1;
    }
    ideals.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members.members().cmp(b.members.members()))
    });
    Ok(ideals)
}

/// `sqrt(I) = { r : r^k in I for some 1 <= k <= |R| }`.
pub fn radical(ring: &FiniteRing, ideal: &Ideal) -> Result<Ideal> {
    let mask = ring
        .elements()
        .map(|x| {
            let mut acc = x;
            for _ in 0..ring.order() {
                if ideal.contains(acc) {
                    return true;
                }
                acc = ring.mul(acc, x);
            }
            false
        })
        .collect();
    ideal_from_mask(ring, mask)
}

pub fn is_radical(ring: &FiniteRing, ideal: &Ideal) -> Result<bool> {
    Ok(radical(ring, ideal)?.members == ideal.members)
}

pub fn is_prime(ring: &FiniteRing, ideal: &Ideal) -> bool {
    if !ideal.is_proper() {
        return false;
    }
    ring.elements().filter(|&x| !ideal.contains(x)).all(|x| {
        ring.elements()
            .filter(|&y| !ideal.contains(y))
            .all(|y| !ideal.contains(ring.mul(x, y)))
    })
}

/// `R/I` together with the canonical surjection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: FiniteRing,
    /// Element of `R` to its coset index in `ring`.
    pub coset_of: Vec<Element>,
    /// Coset index to its least element in `R`.
    pub representatives: Vec<Element>,
}

impl Quotient {
    pub fn project(&self, x: Element) -> Element {
        self.coset_of[x]
    }
}

/// Builds `R/I` on least-index coset representatives. Coset `k+I` is named
/// after its representative.
pub fn quotient_ring(ring: &FiniteRing, ideal: &Ideal) -> Result<Quotient> {
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let n = ring.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in ring.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(x);
        for i in ideal.members.iter() {
            coset_of[ring.add(x, i)] = c;
        }
    }
    let m = representatives.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &representatives {
        for &b in &representatives {
            add.push(coset_of[ring.add(a, b)] as u32);
            mul.push(coset_of[ring.mul(a, b)] as u32);
        }
    }
    let names = representatives
        .iter()
        .map(|&r| format!("{}+I", ring.name(r)))
        .collect();
    let spec = format!("quot({};{})", ring.spec(), ideal.generator_list());
    let quotient = FiniteRing::from_tables(
        spec,
        names,
        coset_of[ring.zero()],
        coset_of[ring.one()],
        add,
        mul,
    )?;
    Ok(Quotient {
        ring: quotient,
        coset_of,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_poly_quotient, build_zn, direct_product};

    #[test]
    fn generation() {
        let z8 = build_zn(8).unwrap();
        assert_eq!(
            generate_ideal(&z8, &[4]).unwrap().members().members(),
            &[0, 4]
        );
        assert_eq!(
            generate_ideal(&z8, &[2]).unwrap().members().members(),
            &[0, 2, 4, 6]
        );
        assert_eq!(generate_ideal(&z8, &[]).unwrap().members().members(), &[0]);
        assert_eq!(generate_ideal(&z8, &[6, 4]).unwrap().len(), 4);
        assert!(matches!(
            generate_ideal(&z8, &[8]),
            Err(Error::InvalidElement { .. })
        ));
    }

    #[test]
    fn enumeration_counts() {
        let z12 = build_zn(12).unwrap();
        let ideals = all_ideals(&z12, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(ideals.len(), 6);
        let sizes: Vec<usize> = ideals.iter().map(Ideal::len).collect();
        assert_eq!(sizes, [1, 2, 3, 4, 6, 12]);

        assert_eq!(all_ideals(&build_zn(7).unwrap(), 256).unwrap().len(), 2);
        let f4 = build_poly_quotient(2, &[1, 1, 1]).unwrap();
        assert_eq!(all_ideals(&f4, 256).unwrap().len(), 2);

        let z2 = build_zn(2).unwrap();
        let v4 = direct_product(&z2, &z2).unwrap();
        assert_eq!(all_ideals(&v4, 256).unwrap().len(), 4);

        let z8 = build_zn(8).unwrap();
        let gens: Vec<Vec<Element>> = all_ideals(&z8, 256)
            .unwrap()
            .iter()
            .map(|i| i.generators().to_vec())
            .collect();
        assert_eq!(gens, [vec![0], vec![4], vec![2], vec![1]]);

        assert!(matches!(
            all_ideals(&build_zn(300).unwrap(), 256),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }

    #[test]
    fn product_ideals_are_products() {
        // Z_m x Z_n has d(m) d(n) ideals
        let z4 = build_zn(4).unwrap();
        let z6 = build_zn(6).unwrap();
        let r = direct_product(&z4, &z6).unwrap();
        let ideals = all_ideals(&r, 256).unwrap();
        assert_eq!(ideals.len(), 3 * 4);
        for i in &ideals {
            i.validate(&r).unwrap();
        }
    }

    #[test]
    fn radicals() {
        let z8 = build_zn(8).unwrap();
        let i = generate_ideal(&z8, &[4]).unwrap();
        assert_eq!(radical(&z8, &i).unwrap().members().members(), &[0, 2, 4, 6]);
        assert!(!is_radical(&z8, &i).unwrap());

        let z12 = build_zn(12).unwrap();
        let i = generate_ideal(&z12, &[6]).unwrap();
        assert_eq!(radical(&z12, &i).unwrap().members().members(), &[0, 6]);
        assert!(is_radical(&z12, &i).unwrap());

        let whole = generate_ideal(&z12, &[1]).unwrap();
        assert_eq!(radical(&z12, &whole).unwrap().len(), 12);
    }

    #[test]
    fn primes() {
        let z12 = build_zn(12).unwrap();
        assert!(is_prime(&z12, &generate_ideal(&z12, &[3]).unwrap()));
        assert!(is_prime(&z12, &generate_ideal(&z12, &[2]).unwrap()));
        assert!(!is_prime(&z12, &generate_ideal(&z12, &[4]).unwrap()));
        assert!(!is_prime(&z12, &generate_ideal(&z12, &[1]).unwrap()));
        assert!(!is_prime(&z12, &generate_ideal(&z12, &[]).unwrap()));
        assert!(is_prime(
            &build_zn(5).unwrap(),
            &generate_ideal(&build_zn(5).unwrap(), &[]).unwrap()
        ));
    }

    #[test]
    fn quotients() {
        let z8 = build_zn(8).unwrap();
        let q = quotient_ring(&z8, &generate_ideal(&z8, &[4]).unwrap()).unwrap();
        assert_eq!(q.ring.order(), 4);
        assert_eq!(q.ring.zero_divisors().len(), 2);
        assert!(q.ring.is_isomorphic_small(&build_zn(4).unwrap()).unwrap());
        assert_eq!(q.ring.spec(), "quot(Zn:8;4)");
        assert_eq!(q.representatives, [0, 1, 2, 3]);
        assert_eq!(q.project(6), 2);

        let z12 = build_zn(12).unwrap();
        let q = quotient_ring(&z12, &generate_ideal(&z12, &[6]).unwrap()).unwrap();
        assert_eq!(q.ring.order(), 6);
        assert_eq!(q.ring.zero_divisors().len() - 1, 3);
        assert!(q.ring.is_isomorphic_small(&build_zn(6).unwrap()).unwrap());

        let trivial = quotient_ring(&z12, &generate_ideal(&z12, &[]).unwrap()).unwrap();
        assert_eq!(trivial.ring.order(), 12);
        for a in z12.elements() {
            for b in z12.elements() {
                assert_eq!(trivial.ring.mul(a, b), z12.mul(a, b));
                assert_eq!(trivial.ring.add(a, b), z12.add(a, b));
            }
        }
        assert_eq!(
            quotient_ring(&z12, &generate_ideal(&z12, &[5]).unwrap()).unwrap_err(),
            Error::ImproperIdeal
        );
    }

    #[test]
    fn ideal_from_mask_rejects_non_ideals() {
        let z8 = build_zn(8).unwrap();
        let mut mask = vec![false; 8];
        mask[0] = true;
        mask[2] = true;
        assert!(ideal_from_mask(&z8, mask).is_err());
    }
}
