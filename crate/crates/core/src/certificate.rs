//! Witness orderings for YES instances.
//!
//! Extraction walks unused edge multiplicity from a start vertex, always
//! taking the outgoing edge with the smallest target gram, and splices in
//! the closed detours it finds at vertices that still have unused
//! multiplicity (the stack form of Hierholzer's algorithm). In a connected
//! graph that passes the degree test every such detour closes, so the walk
//! ends having consumed all `n` units.
//!
//! With one excess pair `(v1, v2)` there are two constructions. `Direct`
//! starts the walk at `v1`. `AugmentAndRotate` adds one edge `(v2, v1)`,
//! builds a closed walk of the balanced graph, and rotates it so that it
//! starts right after the first occurrence of the added edge.
//!
//! [`verify_certificate`] shares no code with extraction.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::decision::{decide_graph, BalanceCase, ConnectivityMethod};
use crate::graph::{build_pseudodigraph, Pseudodigraph, VertexLabel};
use crate::instance::{Instance, Symbol};

/// A permutation of `1..=n` and the edge path it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// 1-based component indices.
    pub permutation: Vec<usize>,
    pub path: Vec<(VertexLabel, VertexLabel)>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateDefect {
    #[error("permutation has {found} entries, instance has {expected} components")]
    WrongLength { expected: usize, found: usize },
    #[error("index {index} at position {position} is outside 1..=n")]
    IndexOutOfRange { position: usize, index: usize },
    #[error("index {index} appears more than once")]
    DuplicateIndex { index: usize },
    #[error("overlap breaks between positions {position} and {}", position + 1)]
    OverlapBreak { position: usize },
    #[error("path has {found} edges, expected {expected}")]
    PathLength { expected: usize, found: usize },
    #[error("edge {from}->{to} used {used} times, multiplicity is {multiplicity}")]
    MultiplicityMismatch {
        from: VertexLabel,
        to: VertexLabel,
        used: usize,
        multiplicity: usize,
    },
    #[error("path edge at position {position} does not match its component")]
    PathMismatch { position: usize },
}

impl CertificateDefect {
    pub fn code(&self) -> &'static str {
        match self {
            CertificateDefect::WrongLength { .. } => "wrong_length",
            CertificateDefect::IndexOutOfRange { .. } => "index_out_of_range",
            CertificateDefect::DuplicateIndex { .. } => "duplicate_index",
            CertificateDefect::OverlapBreak { .. } => "overlap_break",
            CertificateDefect::PathLength { .. } => "path_length",
            CertificateDefect::MultiplicityMismatch { .. } => "multiplicity_mismatch",
            CertificateDefect::PathMismatch { .. } => "path_mismatch",
        }
    }
}

impl Certificate {
    /// Attaches the induced path to a 1-based permutation.
    pub fn from_permutation(
        u: &Instance,
        permutation: Vec<usize>,
    ) -> Result<Self, CertificateDefect> {
        let path = permutation
            .iter()
            .enumerate()
            .map(|(position, &index)| {
                if index == 0 || index > u.len() {
                    return Err(CertificateDefect::IndexOutOfRange {
                        position: position + 1,
                        index,
                    });
                }
                Ok((u.head(index - 1).into(), u.tail(index - 1).into()))
            })
            .collect::<Result<_, _>>()?;
        Ok(Certificate { permutation, path })
    }

    /// Recovers a permutation from an edge path, giving each edge occurrence
    /// the lowest unused component index with that `(head, tail)` pair.
    pub fn from_path(
        u: &Instance,
        path: Vec<(VertexLabel, VertexLabel)>,
    ) -> Result<Self, CertificateDefect> {
        let mut pools = component_pools(u);
        let mut permutation = Vec::with_capacity(path.len());
        for (from, to) in &path {
            let key = (from.gram(), to.gram());
            match pools.get_mut(&key).and_then(VecDeque::pop_front) {
                Some(i) => permutation.push(i + 1),
                None => {
                    let used = path.iter().filter(|(a, b)| a == from && b == to).count();
                    let multiplicity = (0..u.len())
                        .filter(|&i| u.head(i) == from.gram() && u.tail(i) == to.gram())
                        .count();
                    return Err(CertificateDefect::MultiplicityMismatch {
                        from: from.clone(),
                        to: to.clone(),
                        used,
                        multiplicity,
                    });
                }
            }
        }
        Ok(Certificate { permutation, path })
    }

    /// Components in certificate order joined by arrows, e.g. `ab→bf→fe`.
    pub fn render_chain(&self, u: &Instance) -> String {
        self.permutation
            .iter()
            .map(|&j| {
                if (1..=u.len()).contains(&j) {
                    u.render(j - 1)
                } else {
                    format!("?{j}")
                }
            })
            .collect::<Vec<_>>()
            .join("→")
    }
}

/// Component indices (0-based, ascending) grouped by `(head, tail)`.
fn component_pools(u: &Instance) -> HashMap<(&[Symbol], &[Symbol]), VecDeque<usize>> {
    let mut pools: HashMap<(&[Symbol], &[Symbol]), VecDeque<usize>> = HashMap::new();
    for i in 0..u.len() {
        pools
            .entry((u.head(i), u.tail(i)))
            .or_default()
            .push_back(i);
    }
    pools
}

/// How the one-excess-pair case is handled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Start the walk at the +1 vertex.
    #[default]
    Direct,
    /// Close the path with an extra edge, walk the circuit, rotate it open.
    AugmentAndRotate,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CertifyOptions {
    pub connectivity: ConnectivityMethod,
    pub construction: Construction,
}

impl CertifyOptions {
    /// Group-merging connectivity and augment-and-rotate construction.
    pub fn fidelity() -> Self {
        CertifyOptions {
            connectivity: ConnectivityMethod::Paper,
            construction: Construction::AugmentAndRotate,
        }
    }
}

pub fn extract_certificate(u: &Instance) -> Option<Certificate> {
    extract_certificate_with(u, CertifyOptions::default())
}

/// `None` exactly when the instance is a NO instance.
pub fn extract_certificate_with(u: &Instance, options: CertifyOptions) -> Option<Certificate> {
    let g = build_pseudodigraph(u);
    let verdict = decide_graph(&g, options.connectivity);
    if !verdict.answer.is_yes() {
        return None;
    }
    let endpoints = match verdict.case {
        BalanceCase::OneExcessPair => {
            let start = verdict.odd_vertices.iter().find(|(_, d)| *d == 1)?;
            let end = verdict.odd_vertices.iter().find(|(_, d)| *d == -1)?;
            Some((g.vertex_id(&start.0)?, g.vertex_id(&end.0)?))
        }
        _ => None,
    };

    let walk = match (endpoints, options.construction) {
        (None, _) => eulerian_walk(&Adjacency::new(&g, None), 0)?,
        (Some((start, _)), Construction::Direct) => {
            eulerian_walk(&Adjacency::new(&g, None), start)?
        }
        (Some((start, end)), Construction::AugmentAndRotate) => {
            let circuit = eulerian_walk(&Adjacency::new(&g, Some((end, start))), 0)?;
            rotate_open(&circuit, (end, start))?
        }
    };
    if walk.len() != u.len() + 1 {
        return None;
    }

    let mut pools: HashMap<(usize, usize), VecDeque<usize>> = HashMap::new();
    for i in 0..u.len() {
        let from = vertex_of(&g, u.head(i))?;
        let to = vertex_of(&g, u.tail(i))?;
        pools.entry((from, to)).or_default().push_back(i);
    }
    let mut permutation = Vec::with_capacity(u.len());
    let mut path = Vec::with_capacity(u.len());
    for step in walk.windows(2) {
        let i = pools.get_mut(&(step[0], step[1]))?.pop_front()?;
        permutation.push(i + 1);
        path.push((g.vertex(step[0]).clone(), g.vertex(step[1]).clone()));
    }
    Some(Certificate { permutation, path })
}

fn vertex_of(g: &Pseudodigraph, gram: &[Symbol]) -> Option<usize> {
    g.vertices().binary_search_by(|v| v.gram().cmp(gram)).ok()
}

/// Per-vertex outgoing edges, sorted by target, with remaining multiplicity.
struct Adjacency {
    out: Vec<Vec<(usize, usize)>>,
}

impl Adjacency {
    fn new(g: &Pseudodigraph, extra: Option<(usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); g.vertices().len()];
        for e in g.edges() {
            out[e.from].push((e.to, e.multiplicity));
        }
        if let Some((from, to)) = extra {
            let row: &mut Vec<(usize, usize)> = &mut out[from];
            match row.binary_search_by_key(&to, |&(t, _)| t) {
                Ok(i) => row[i].1 += 1,
                Err(i) => row.insert(i, (to, 1)),
            }
        }
        Adjacency { out }
    }
}

/// Vertex sequence of a walk using every unit of multiplicity reachable
/// from `start`, or `None` when `start` is out of range.
fn eulerian_walk(adjacency: &Adjacency, start: usize) -> Option<Vec<usize>> {
    if start >= adjacency.out.len() {
        return None;
    }
    let mut remaining: Vec<Vec<(usize, usize)>> = adjacency.out.clone();
    let mut cursor = vec![0usize; remaining.len()];
    let mut stack = vec![start];
    let mut walk = Vec::new();
    while let Some(&v) = stack.last() {
        let row = &mut remaining[v];
        while cursor[v] < row.len() && row[cursor[v]].1 == 0 {
            cursor[v] += 1;
        }
        if let Some(slot) = row.get_mut(cursor[v]) {
            slot.1 -= 1;
            stack.push(slot.0);
        } else {
            walk.push(v);
            stack.pop();
        }
    }
    walk.reverse();
    Some(walk)
}

/// Drops the first occurrence of `edge` from a closed walk and returns the
/// open walk that follows it around the cycle.
fn rotate_open(circuit: &[usize], edge: (usize, usize)) -> Option<Vec<usize>> {
    let i = circuit.windows(2).position(|w| (w[0], w[1]) == edge)?;
    let edges = circuit.len() - 1;
    // circuit[k] for k in i+1 ..= i+edges, indices taken modulo the cycle.
    Some((1..=edges).map(|k| circuit[(i + k) % edges]).collect())
}

type GramPair<'a> = (&'a [Symbol], &'a [Symbol]);

/// Checks a certificate against `u` without consulting the graph module:
/// the permutation must be a bijection on `1..=n`, consecutive components
/// must overlap, the path must use each `(head, tail)` pair exactly as often
/// as the instance contains it, and each path edge must match its component.
pub fn verify_certificate(u: &Instance, c: &Certificate) -> Result<(), CertificateDefect> {
    let n = u.len();
    if c.permutation.len() != n {
        return Err(CertificateDefect::WrongLength {
            expected: n,
            found: c.permutation.len(),
        });
    }
    let mut seen = vec![false; n];
    for (position, &index) in c.permutation.iter().enumerate() {
        if index == 0 || index > n {
            return Err(CertificateDefect::IndexOutOfRange {
                position: position + 1,
                index,
            });
        }
        if std::mem::replace(&mut seen[index - 1], true) {
            return Err(CertificateDefect::DuplicateIndex { index });
        }
    }
    for (position, pair) in c.permutation.windows(2).enumerate() {
        let (x, y) = (u.component(pair[0] - 1), u.component(pair[1] - 1));
        if x[x.len() - u.t()..] != y[..u.t()] {
            return Err(CertificateDefect::OverlapBreak {
                position: position + 1,
            });
        }
    }

    if c.path.len() != n {
        return Err(CertificateDefect::PathLength {
            expected: n,
            found: c.path.len(),
        });
    }
    // (multiplicity in u, uses in the path) per gram pair
    let mut balance: HashMap<GramPair, (usize, usize)> = HashMap::new();
    for x in u.strings() {
        balance
            .entry((&x[..u.t()], &x[x.len() - u.t()..]))
            .or_default()
            .0 += 1;
    }
    for (from, to) in &c.path {
        balance.entry((from.gram(), to.gram())).or_default().1 += 1;
    }
    let mut mismatches: Vec<_> = balance
        .into_iter()
        .filter(|(_, (multiplicity, used))| multiplicity != used)
        .collect();
    mismatches.sort();
    if let Some(((from, to), (multiplicity, used))) = mismatches.into_iter().next() {
        return Err(CertificateDefect::MultiplicityMismatch {
            from: from.into(),
            to: to.into(),
            used,
            multiplicity,
        });
    }
    for (position, (&index, (from, to))) in c.permutation.iter().zip(&c.path).enumerate() {
        let x = u.component(index - 1);
        if from.gram() != &x[..u.t()] || to.gram() != &x[x.len() - u.t()..] {
            return Err(CertificateDefect::PathMismatch {
                position: position + 1,
            });
        }
    }
    Ok(())
}
