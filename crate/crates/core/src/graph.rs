//! The gram multigraph associated to an instance.
//!
//! Each component contributes one unit of multiplicity to the edge
//! `(leading t-gram, trailing t-gram)`. Vertices are stored sorted by gram
//! and addressed by their position in that order; edges are stored sorted by
//! `(from, to)` with an explicit multiplicity rather than by duplication.

use std::collections::HashMap;
use std::fmt;

use crate::instance::{Instance, Symbol, SymbolMode};

/// A vertex of the gram multigraph: a sequence of exactly `t` symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel(Vec<Symbol>);

impl VertexLabel {
    pub fn new(gram: Vec<Symbol>) -> Self {
        VertexLabel(gram)
    }

    /// Character-mode label, one symbol per char.
    pub fn from_chars(gram: &str) -> Self {
        VertexLabel(SymbolMode::Chars.split(gram))
    }

    pub fn gram(&self) -> &[Symbol] {
        &self.0
    }

    pub fn render(&self, mode: SymbolMode) -> String {
        mode.render(&self.0)
    }
}

impl From<&[Symbol]> for VertexLabel {
    fn from(gram: &[Symbol]) -> Self {
        VertexLabel(gram.to_vec())
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single_chars = self.0.iter().all(|s| s.as_str().chars().count() == 1);
        let mode = if single_chars {
            SymbolMode::Chars
        } else {
            SymbolMode::Tokens
        };
        f.write_str(&mode.render(&self.0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub multiplicity: usize,
}

/// Directed multigraph `(V, E, f)` with self-loops allowed.
///
/// Invariants: every edge endpoint is a vertex, every stored multiplicity is
/// at least 1, vertices are sorted and distinct, edges are sorted by
/// `(from, to)` and distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pseudodigraph {
    vertices: Vec<VertexLabel>,
    edges: Vec<Edge>,
}

impl Pseudodigraph {
    /// Builds a graph from weighted labeled edges. Repeated edges are summed
    /// and zero weights dropped. Vertices are exactly the edge endpoints.
    pub fn from_weighted_edges<I>(edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexLabel, VertexLabel, usize)>,
    {
        let mut weights: HashMap<(VertexLabel, VertexLabel), usize> = HashMap::new();
        for (a, b, w) in edges {
            if w > 0 {
                *weights.entry((a, b)).or_default() += w;
            }
        }
        Self::from_weight_map(weights)
    }

    fn from_weight_map<K>(weights: HashMap<(K, K), usize>) -> Self
    where
        K: Ord + Clone + Into<VertexLabel>,
    {
        let mut grams: Vec<K> = weights
            .keys()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        grams.sort_unstable();
        grams.dedup();
        let id = |g: &K| grams.binary_search(g).expect("endpoint collected above");
        let mut edges: Vec<Edge> = weights
            .iter()
            .map(|((a, b), &multiplicity)| Edge {
                from: id(a),
                to: id(b),
                multiplicity,
            })
            .collect();
        edges.sort_unstable();
        Pseudodigraph {
            vertices: grams.into_iter().map(Into::into).collect(),
            edges,
        }
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, id: usize) -> &VertexLabel {
        &self.vertices[id]
    }

    pub fn vertex_id(&self, label: &VertexLabel) -> Option<usize> {
        self.vertices.binary_search(label).ok()
    }

    /// `f(from, to)`, zero when the edge is absent.
    pub fn multiplicity(&self, from: &VertexLabel, to: &VertexLabel) -> usize {
        match (self.vertex_id(from), self.vertex_id(to)) {
            (Some(a), Some(b)) => self
                .edges
                .binary_search_by(|e| (e.from, e.to).cmp(&(a, b)))
                .map_or(0, |i| self.edges[i].multiplicity),
            _ => 0,
        }
    }

    /// Sum of all multiplicities.
    pub fn total_multiplicity(&self) -> usize {
        self.edges.iter().map(|e| e.multiplicity).sum()
    }

    /// The edge set as vertex-id pairs, without multiplicities.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.from, e.to)).collect()
    }

    /// The edge set as label pairs, without multiplicities.
    pub fn labeled_edges(&self) -> Vec<(VertexLabel, VertexLabel)> {
        self.edges
            .iter()
            .map(|e| (self.vertices[e.from].clone(), self.vertices[e.to].clone()))
            .collect()
    }
}

/// Builds the gram multigraph of `u`. Linear in `n` apart from sorting the
/// distinct vertices and edges.
pub fn build_pseudodigraph(u: &Instance) -> Pseudodigraph {
    let mut weights: HashMap<(&[Symbol], &[Symbol]), usize> = HashMap::new();
    for i in 0..u.len() {
        *weights.entry((u.head(i), u.tail(i))).or_default() += 1;
    }
    Pseudodigraph::from_weight_map(weights)
}

/// Out-weight `F+` and in-weight `F-` per vertex, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable {
    out_weight: Vec<usize>,
    in_weight: Vec<usize>,
}

impl DegreeTable {
    pub fn out_weight(&self, id: usize) -> usize {
        self.out_weight[id]
    }

    pub fn in_weight(&self, id: usize) -> usize {
        self.in_weight[id]
    }

    /// `F+(v) - F-(v)`.
    pub fn excess(&self, id: usize) -> i64 {
        self.out_weight[id] as i64 - self.in_weight[id] as i64
    }

    pub fn len(&self) -> usize {
        self.out_weight.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out_weight.is_empty()
    }

    pub fn total_out(&self) -> usize {
        self.out_weight.iter().sum()
    }

    pub fn total_in(&self) -> usize {
        self.in_weight.iter().sum()
    }
}

/// A self-loop at `v` adds its multiplicity to both weights of `v`.
pub fn degree_table(g: &Pseudodigraph) -> DegreeTable {
    let mut out_weight = vec![0; g.vertices.len()];
    let mut in_weight = vec![0; g.vertices.len()];
    for e in &g.edges {
        out_weight[e.from] += e.multiplicity;
        in_weight[e.to] += e.multiplicity;
    }
    DegreeTable {
        out_weight,
        in_weight,
    }
}
