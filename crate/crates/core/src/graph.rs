//! Zero-divisor graphs and the orthogonality-based graph predicates.
//!
//! Vertices are addressed by position (`0..vertex_count`), and positions
//! follow ring element order, so every export is deterministic.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{Element, FiniteRing};

/// A vertex position inside a [`SimpleGraph`].
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    name: String,
    labels: Vec<String>,
    elements: Vec<Element>,
    neighbors: Vec<Vec<Vertex>>,
    adjacency: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Completeness {
    pub complete: bool,
    /// The graph is `K^n` with this `n` when `complete` holds.
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
}

#[derive(Serialize)]
struct GraphJson<'a> {
    vertices: &'a [String],
    edges: Vec<[Vertex; 2]>,
}

impl SimpleGraph {
    /// Builds a graph from labels, their ring elements, and an edge list.
    /// Loops are rejected; duplicate edges collapse.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        elements: Vec<Element>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let n = labels.len();
        if elements.len() != n {
            return Err(Error::Inconsistent(
                "one ring element per vertex is required".into(),
            ));
        }
        let mut adjacency = vec![false; n * n];
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if a == b {
                return Err(Error::SameVertex(a));
            }
            adjacency[a * n + b] = true;
            adjacency[b * n + a] = true;
        }
        Ok(Self::from_adjacency(
            name.into(),
            labels,
            elements,
            adjacency,
        ))
    }

    fn from_adjacency(
        name: String,
        labels: Vec<String>,
        elements: Vec<Element>,
        adjacency: Vec<bool>,
    ) -> Self {
        let n = labels.len();
        let neighbors = (0..n)
            .map(|a| (0..n).filter(|&b| adjacency[a * n + b]).collect())
            .collect();
        SimpleGraph {
            name,
            labels,
            elements,
            neighbors,
            adjacency,
        }
    }

    /// `K^n` with vertices labelled `0..n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Self::new(
            format!("K{n}"),
            (0..n).map(|i| i.to_string()).collect(),
            (0..n).collect(),
            edges,
        )
        .expect("complete graph")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::new(
            format!("P{n}"),
            (0..n).map(|i| i.to_string()).collect(),
            (0..n).collect(),
            (1..n).map(|b| (b - 1, b)),
        )
        .expect("path graph")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    /// Ring element behind each vertex.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, v: Vertex) -> Element {
        self.elements[v]
    }

    pub fn position_of(&self, element: Element) -> Option<Vertex> {
        self.elements.binary_search(&element).ok()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.vertex_count())
            .flat_map(|a| {
                self.neighbors[a]
                    .iter()
                    .copied()
                    .filter(move |&b| b > a)
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn check(&self, v: Vertex) -> Result<Vertex> {
        if v < self.vertex_count() {
            Ok(v)
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    #[inline]
    pub fn is_adjacent(&self, a: Vertex, b: Vertex) -> bool {
        let n = self.vertex_count();
        a < n && b < n && self.adjacency[a * n + b]
    }

    pub fn neighbors(&self, a: Vertex) -> Result<&[Vertex]> {
        Ok(&self.neighbors[self.check(a)?])
    }

    /// `a ⊥ b`: adjacent, and the edge lies in no triangle.
    pub fn are_orthogonal(&self, a: Vertex, b: Vertex) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Err(Error::SameVertex(a));
        }
        Ok(self.orthogonal(a, b))
    }

    fn orthogonal(&self, a: Vertex, b: Vertex) -> bool {
        if !self.is_adjacent(a, b) {
            return false;
        }
        let (small, other) = if self.neighbors[a].len() <= self.neighbors[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        !self.neighbors[small]
            .iter()
            .any(|&c| c != other && self.is_adjacent(c, other))
    }

    /// `a ∼ b`: non-adjacent with identical neighborhoods. Reflexive.
    pub fn are_similar(&self, a: Vertex, b: Vertex) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.similar(a, b))
    }

    fn similar(&self, a: Vertex, b: Vertex) -> bool {
        a == b || (!self.is_adjacent(a, b) && self.neighbors[a] == self.neighbors[b])
    }

    /// All `b` with `a ⊥ b`.
    pub fn complements(&self, a: Vertex) -> Result<Vec<Vertex>> {
        self.check(a)?;
        Ok(self.complements_of(a))
    }

    fn complements_of(&self, a: Vertex) -> Vec<Vertex> {
        self.neighbors[a]
            .iter()
            .copied()
            .filter(|&b| self.orthogonal(a, b))
            .collect()
    }

    /// First vertex with no orthogonal partner.
    pub fn uncomplemented_vertex(&self) -> Option<Vertex> {
        (0..self.vertex_count())
            .find(|&a| !self.neighbors[a].iter().any(|&b| self.orthogonal(a, b)))
    }

    pub fn is_complemented(&self) -> bool {
        self.uncomplemented_vertex().is_none()
    }

    /// A triple `(a, b, c)` with `a ⊥ b`, `a ⊥ c`, and `b ≁ c`.
    pub fn unique_complement_violation(&self) -> Option<(Vertex, Vertex, Vertex)> {
        for a in 0..self.vertex_count() {
            let comps = self.complements_of(a);
            for (i, &b) in comps.iter().enumerate() {
                for &c in &comps[i + 1..] {
                    if !self.similar(b, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_uniquely_complemented(&self) -> bool {
        self.is_complemented() && self.unique_complement_violation().is_none()
    }

    pub fn is_complete(&self) -> Completeness {
        let n = self.vertex_count();
        Completeness {
            complete: self.neighbors.iter().all(|nb| nb.len() + 1 == n),
            n,
        }
    }

    fn eccentricity(&self, source: Vertex) -> (usize, usize) {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        let (mut reached, mut far) = (1, 0);
        while let Some(v) = queue.pop_front() {
            for &w in &self.neighbors[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    far = far.max(dist[w]);
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        (reached, far)
    }

    /// Breadth-first connectivity; the empty graph is connected with diameter 0.
    pub fn connectivity(&self) -> Connectivity {
        let n = self.vertex_count();
        let mut diameter = 0;
        for v in 0..n {
            let (reached, far) = self.eccentricity(v);
            if reached < n {
                return Connectivity {
                    connected: false,
                    diameter: None,
                };
            }
            diameter = diameter.max(far);
        }
        Connectivity {
            connected: true,
            diameter: Some(diameter),
        }
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, a: Vertex, b: Vertex) -> Self {
        let n = self.vertex_count();
        let mut adjacency = self.adjacency.clone();
        if a < n && b < n {
            adjacency[a * n + b] = false;
            adjacency[b * n + a] = false;
        }
        Self::from_adjacency(
            self.name.clone(),
            self.labels.clone(),
            self.elements.clone(),
            adjacency,
        )
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", escape(&self.name));
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  v{v} [label=\"{}\"];", escape(label));
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  v{a} -- v{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            vertices: &self.labels,
            edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("graph serializes");
        s.push('\n');
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// `Γ(R)`: nonzero zero-divisors, `x — y` iff `xy = 0`.
pub fn gamma(ring: &FiniteRing) -> SimpleGraph {
    let zero = ring.zero();
    let elements: Vec<Element> = ring.zero_divisors().iter().filter(|&x| x != zero).collect();
    build(format!("Gamma({})", ring.spec()), ring, elements, |x, y| {
        ring.mul(x, y) == zero
    })
}

/// `Γ_I(R)`: elements outside `I` that multiply some element outside `I`
/// into `I`, with `x — y` iff `xy ∈ I`.
pub fn gamma_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<SimpleGraph> {
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let outside: Vec<Element> = ring.elements().filter(|&x| !ideal.contains(x)).collect();
    let elements: Vec<Element> = outside
        .iter()
        .copied()
        .filter(|&x| outside.iter().any(|&y| ideal.contains(ring.mul(x, y))))
        .collect();
    Ok(build(
        format!("Gamma_I({}; I=({}))", ring.spec(), ideal.generator_list()),
        ring,
        elements,
        |x, y| ideal.contains(ring.mul(x, y)),
    ))
}

fn build(
    name: String,
    ring: &FiniteRing,
    elements: Vec<Element>,
    adjacent: impl Fn(Element, Element) -> bool,
) -> SimpleGraph {
    let n = elements.len();
    let mut adjacency = vec![false; n * n];
    for a in 0..n {
        for b in a + 1..n {
            if adjacent(elements[a], elements[b]) {
                adjacency[a * n + b] = true;
                adjacency[b * n + a] = true;
            }
        }
    }
    let labels = elements.iter().map(|&x| ring.name(x).to_string()).collect();
    SimpleGraph::from_adjacency(name, labels, elements, adjacency)
}
