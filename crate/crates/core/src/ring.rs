//! Finite commutative rings with identity, stored as dense Cayley tables.
//!
//! Elements are the indices `0..order`. Every constructor here produces
//! tables that satisfy the commutative ring axioms; [`FiniteRing::from_tables`]
//! accepts arbitrary tables and runs the cheap quadratic checks, while
//! [`FiniteRing::verify_axioms`] runs the full cubic scan.

use std::fmt;

use crate::error::{Error, Result};

/// Default cap on ring order. Two `order x order` tables are kept in memory.
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Orders above this are refused by the brute-force isomorphism search.
pub const ISOMORPHISM_CAP: usize = 12;

/// An element of a [`FiniteRing`], identified by its table index.
pub type Element = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    order: usize,
    zero: Element,
    one: Element,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    names: Vec<String>,
    spec: String,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("spec", &self.spec)
            .field("order", &self.order)
            .finish()
    }
}

/// A subset of a ring's elements, kept both as a sorted list and a mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    members: Vec<Element>,
    mask: Vec<bool>,
}

impl ElementSet {
    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        ElementSet { members, mask }
    }

    pub fn from_members(order: usize, members: impl IntoIterator<Item = Element>) -> Self {
        let mut mask = vec![false; order];
        for m in members {
            mask[m] = true;
        }
        Self::from_mask(mask)
    }

    pub fn full(order: usize) -> Self {
        Self::from_mask(vec![true; order])
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sorted member list.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().copied()
    }

    /// Size of the ambient ring.
    pub fn universe(&self) -> usize {
        self.mask.len()
    }
}

fn check_order(order: u64, cap: usize) -> Result<usize> {
    if order < 2 {
        return Err(Error::InvalidOrder(order));
    }
    if order > cap as u64 {
        return Err(Error::OrderCapExceeded { order, cap });
    }
    Ok(order as usize)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Z_n`, with element `i` named `"i"`.
pub fn build_zn(n: u64) -> Result<FiniteRing> {
    build_zn_capped(n, DEFAULT_MAX_ORDER)
}

pub fn build_zn_capped(n: u64, cap: usize) -> Result<FiniteRing> {
    let n = check_order(n, cap)?;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u32);
            mul.push(((a * b) % n) as u32);
        }
    }
    let names = (0..n).map(|i| i.to_string()).collect();
    Ok(FiniteRing::assemble(
        format!("Zn:{n}"),
        names,
        0,
        1,
        add,
        mul,
    ))
}

/// `Z_p[x]/(f)` for a monic `f` given constant term first.
///
/// Element index `sum c_i p^i` stands for the residue `sum c_i x^i`.
pub fn build_poly_quotient(p: u64, coeffs: &[u64]) -> Result<FiniteRing> {
    build_poly_quotient_capped(p, coeffs, DEFAULT_MAX_ORDER)
}

pub fn build_poly_quotient_capped(p: u64, coeffs: &[u64], cap: usize) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::InvalidModulus(p));
    }
    validate_poly(p, coeffs)?;
    let k = coeffs.len() - 1;
    let order = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let n = check_order(order.min(u64::MAX as u128) as u64, cap)?;
    let p = p as usize;

    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; k];
        for slot in d.iter_mut() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let encode = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
    let tail: Vec<usize> = coeffs[..k].iter().map(|&c| c as usize).collect();

    let polys: Vec<Vec<usize>> = (0..n).map(digits).collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut prod = vec![0usize; 2 * k];
    for a in &polys {
        for b in &polys {
            let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
            add.push(encode(&s) as u32);

            prod.iter_mut().for_each(|c| *c = 0);
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // x^k = -(c_0 + ... + c_{k-1} x^{k-1})
            for deg in (k..2 * k).rev() {
                let lead = prod[deg];
                if lead == 0 {
                    continue;
                }
                prod[deg] = 0;
                for (i, &c) in tail.iter().enumerate() {
                    let idx = deg - k + i;
                    prod[idx] = (prod[idx] + (p - c) * lead) % p;
                }
            }
            mul.push(encode(&prod[..k]) as u32);
        }
    }
    let names = polys.iter().map(|d| poly_name(d)).collect();
    let spec = format!(
        "polyq:{p}:{}",
        coeffs
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    Ok(FiniteRing::assemble(spec, names, 0, 1, add, mul))
}

pub(crate) fn validate_poly(p: u64, coeffs: &[u64]) -> Result<()> {
    if coeffs.len() < 2 {
        return Err(Error::InvalidPolynomial(
            "modulus must have degree at least 1".into(),
        ));
    }
    if let Some(&c) = coeffs.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidPolynomial(format!(
            "coefficient {c} is not reduced mod {p}"
        )));
    }
    if coeffs[coeffs.len() - 1] != 1 {
        return Err(Error::InvalidPolynomial(format!(
            "leading coefficient must be 1, got {}",
            coeffs[coeffs.len() - 1]
        )));
    }
    Ok(())
}

fn poly_name(digits: &[usize]) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in digits.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && deg > 0 {
            String::new()
        } else {
            c.to_string()
        };
        terms.push(match deg {
            0 => coef,
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{deg}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Componentwise product `a x b`; the pair `(i, j)` has index `i * |b| + j`.
pub fn direct_product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing> {
    direct_product_capped(a, b, DEFAULT_MAX_ORDER)
}

pub fn direct_product_capped(a: &FiniteRing, b: &FiniteRing, cap: usize) -> Result<FiniteRing> {
    let (na, nb) = (a.order, b.order);
    let n = check_order((na as u64).saturating_mul(nb as u64), cap)?;
    let pair = |i: usize, j: usize| i * nb + j;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (x1, x2) = (x / nb, x % nb);
        for y in 0..n {
            let (y1, y2) = (y / nb, y % nb);
            add.push(pair(a.add(x1, y1), b.add(x2, y2)) as u32);
            mul.push(pair(a.mul(x1, y1), b.mul(x2, y2)) as u32);
        }
    }
    let names = (0..n)
        .map(|x| format!("({},{})", a.name(x / nb), b.name(x % nb)))
        .collect();
    Ok(FiniteRing::assemble(
        format!("prod({},{})", a.spec, b.spec),
        names,
        pair(a.zero, b.zero),
        pair(a.one, b.one),
        add,
        mul,
    ))
}

impl FiniteRing {
    fn assemble(
        spec: String,
        names: Vec<String>,
        zero: Element,
        one: Element,
        add: Vec<u32>,
        mul: Vec<u32>,
    ) -> Self {
        let order = names.len();
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] as usize == zero)
                    .expect("additive inverse") as u32
            })
            .collect();
        FiniteRing {
            order,
            zero,
            one,
            add,
            mul,
            neg,
            names,
            spec,
        }
    }

    /// Builds a ring from raw row-major tables, checking the identities,
    /// commutativity, and additive inverses. Associativity and distributivity
    /// are left to [`FiniteRing::verify_axioms`].
    pub fn from_tables(
        spec: impl Into<String>,
        names: Vec<String>,
        zero: Element,
        one: Element,
        add: Vec<u32>,
        mul: Vec<u32>,
    ) -> Result<Self> {
        let order = names.len();
        check_order(order as u64, usize::MAX)?;
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::AxiomViolation("table dimensions".into()));
        }
        if add.iter().chain(&mul).any(|&v| v as usize >= order) {
            return Err(Error::AxiomViolation("closure: entry out of range".into()));
        }
        for e in [zero, one] {
            if e >= order {
                return Err(Error::InvalidElement { index: e, order });
            }
        }
        if zero == one {
            return Err(Error::AxiomViolation("nonzero identity (0 = 1)".into()));
        }
        for a in 0..order {
            if !(0..order).any(|b| add[a * order + b] as usize == zero) {
                return Err(Error::AxiomViolation(format!("additive inverse of {a}")));
            }
        }
        let ring = FiniteRing::assemble(spec.into(), names, zero, one, add, mul);
        ring.verify_quadratic()?;
        Ok(ring)
    }

    fn verify_quadratic(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return Err(Error::AxiomViolation(format!("additive identity at {a}")));
            }
            if self.mul(a, self.one) != a {
                return Err(Error::AxiomViolation(format!(
                    "multiplicative identity at {a}"
                )));
            }
            if self.add(a, self.neg(a)) != self.zero {
                return Err(Error::AxiomViolation(format!("additive inverse of {a}")));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::AxiomViolation(format!(
                        "additive commutativity at ({a},{b})"
                    )));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::AxiomViolation(format!(
                        "multiplicative commutativity at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Exhaustive scan of every commutative-ring-with-identity axiom.
    pub fn verify_axioms(&self) -> Result<()> {
        self.verify_quadratic()?;
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab_add = self.add(a, b);
                let ab_mul = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab_add, c) != self.add(a, self.add(b, c)) {
                        return Err(Error::AxiomViolation(format!(
                            "additive associativity at ({a},{b},{c})"
                        )));
                    }
                    if self.mul(ab_mul, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::AxiomViolation(format!(
                            "multiplicative associativity at ({a},{b},{c})"
                        )));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(ab_mul, self.mul(a, c)) {
                        return Err(Error::AxiomViolation(format!(
                            "distributivity at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Element {
        self.zero
    }

    pub fn one(&self) -> Element {
        self.one
    }

    /// Canonical ring-spec string this ring was built from.
    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn name(&self, x: Element) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        self.add[a * self.order + b] as Element
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul[a * self.order + b] as Element
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        self.neg[a] as Element
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, x: Element, k: usize) -> Element {
        (0..k).fold(self.one, |acc, _| self.mul(acc, x))
    }

    pub fn check_element(&self, x: Element) -> Result<Element> {
        if x < self.order {
            Ok(x)
        } else {
            Err(Error::InvalidElement {
                index: x,
                order: self.order,
            })
        }
    }

    /// `Z(R)`: elements killed by some nonzero element. Always contains 0.
    pub fn zero_divisors(&self) -> ElementSet {
        let mask = self
            .elements()
            .map(|x| {
                self.elements()
                    .any(|y| y != self.zero && self.mul(x, y) == self.zero)
            })
            .collect();
        ElementSet::from_mask(mask)
    }

    pub fn units(&self) -> ElementSet {
        let mask = self
            .elements()
            .map(|x| self.elements().any(|y| self.mul(x, y) == self.one))
            .collect();
        ElementSet::from_mask(mask)
    }

    /// `nil(R)`. The power sequence of any element cycles within `order`
    /// steps, so exponents up to `order` suffice.
    pub fn nilpotents(&self) -> ElementSet {
        let mask = self
            .elements()
            .map(|x| {
                let mut acc = x;
                for _ in 0..self.order {
                    if acc == self.zero {
                        return true;
                    }
                    acc = self.mul(acc, x);
                }
                false
            })
            .collect();
        ElementSet::from_mask(mask)
    }

    pub fn is_reduced(&self) -> bool {
        self.nilpotents().len() == 1
    }

    /// Every `x` has some `y` with `x y x = x`.
    pub fn is_von_neumann_regular(&self) -> bool {
        self.elements()
            .all(|x| self.elements().any(|y| self.mul(self.mul(x, y), x) == x))
    }

    /// The total quotient ring. In a finite ring every regular element is
    /// already a unit, so the localization is the ring itself; this is
    /// checked rather than assumed.
    pub fn total_quotient_ring(&self) -> Result<&FiniteRing> {
        let zd = self.zero_divisors();
        let units = self.units();
        if let Some(x) = self
            .elements()
            .find(|&x| !zd.contains(x) && !units.contains(x))
        {
            return Err(Error::Inconsistent(format!(
                "regular element {} of {} is not a unit",
                self.name(x),
                self.spec
            )));
        }
        Ok(self)
    }

    /// `ann(x) = { a : a x = 0 }`.
    pub fn annihilator(&self, x: Element) -> Result<ElementSet> {
        self.check_element(x)?;
        let mask = self
            .elements()
            .map(|a| self.mul(a, x) == self.zero)
            .collect();
        Ok(ElementSet::from_mask(mask))
    }

    /// Brute-force isomorphism test for rings of order at most
    /// [`ISOMORPHISM_CAP`]. Only bijections fixing 0 and 1 are tried.
    pub fn is_isomorphic_small(&self, other: &FiniteRing) -> Result<bool> {
        for r in [self, other] {
            if r.order > ISOMORPHISM_CAP {
                return Err(Error::IsomorphismCapExceeded {
                    order: r.order,
                    cap: ISOMORPHISM_CAP,
                });
            }
        }
        if self.order != other.order {
            return Ok(false);
        }
        let n = self.order;
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.zero] = other.zero;
        map[self.one] = other.one;
        used[other.zero] = true;
        used[other.one] = true;
        let order: Vec<Element> = std::iter::once(self.zero)
            .chain(std::iter::once(self.one))
            .chain(self.elements().filter(|&x| x != self.zero && x != self.one))
            .collect();
        if !self.consistent(other, &map, &order[..2]) {
            return Ok(false);
        }
        Ok(self.extend_iso(other, &mut map, &mut used, &order, 2))
    }

    fn consistent(&self, other: &FiniteRing, map: &[usize], assigned: &[Element]) -> bool {
        // a newly mapped element may be the sum or product of an earlier pair
        assigned.iter().all(|&x| {
            assigned.iter().all(|&y| {
                let s = self.add(x, y);
                let p = self.mul(x, y);
                (map[s] == usize::MAX || map[s] == other.add(map[x], map[y]))
                    && (map[p] == usize::MAX || map[p] == other.mul(map[x], map[y]))
            })
        })
    }

    fn extend_iso(
        &self,
        other: &FiniteRing,
        map: &mut [usize],
        used: &mut [bool],
        order: &[Element],
        depth: usize,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for img in 0..other.order {
            if used[img] {
                continue;
            }
            map[x] = img;
            used[img] = true;
            if self.consistent(other, map, &order[..=depth])
                && self.extend_iso(other, map, used, order, depth + 1)
            {
                return true;
            }
            used[img] = false;
            map[x] = usize::MAX;
        }
        false
    }

    pub(crate) fn with_spec(mut self, spec: String) -> Self {
        self.spec = spec;
        self
    }
}
