//! Weak connectivity of an edge set.
//!
//! Two implementations with one contract: [`connected_paper`] keeps an
//! ordered list of disjoint vertex groups and merges them edge by edge with
//! linear lookups (quadratic worst case); [`connected_fast`] uses a
//! union-find forest. Both answer `false` for an empty edge set, since the
//! group count then ends at zero rather than one.

use std::collections::HashMap;
use std::hash::Hash;

/// Disjoint vertex groups covering every edge endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition<V> {
    groups: Vec<Vec<V>>,
}

impl<V> ComponentPartition<V> {
    pub fn groups(&self) -> &[Vec<V>] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

impl<V: Ord> ComponentPartition<V> {
    /// Groups and their members sorted, for order-insensitive comparison.
    pub fn normalized(mut self) -> Self {
        for g in &mut self.groups {
            g.sort();
        }
        self.groups.sort();
        self
    }
}

/// Runs the group-merging scan and returns the final groups.
///
/// For each edge the groups holding each endpoint are located by scanning
/// every member of every group. An edge touching no group opens a new one;
/// an edge touching one group adds its other endpoint to it; an edge
/// bridging two groups replaces both with their union, appended at the end.
pub fn partition_paper<V: PartialEq + Clone>(edges: &[(V, V)]) -> ComponentPartition<V> {
    let mut groups: Vec<Vec<V>> = Vec::new();
    for (a, b) in edges {
        let mut idx_a = None;
        let mut idx_b = None;
        for (i, group) in groups.iter().enumerate() {
            for x in group {
                if x == a {
                    idx_a = Some(i);
                }
                if x == b {
                    idx_b = Some(i);
                }
            }
        }
        match (idx_a, idx_b) {
            (None, None) => {
                let mut fresh = vec![a.clone()];
                if b != a {
                    fresh.push(b.clone());
                }
                groups.push(fresh);
            }
            (None, Some(j)) => groups[j].push(a.clone()),
            (Some(i), None) => groups[i].push(b.clone()),
            (Some(i), Some(j)) if i != j => {
                // Remove the higher index first so the lower stays valid.
                let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                let mut merged = groups.remove(hi);
                merged.extend(groups.remove(lo));
                groups.push(merged);
            }
            (Some(_), Some(_)) => {}
        }
    }
    ComponentPartition { groups }
}

/// Weak connectivity by group merging. `false` on an empty edge set.
pub fn connected_paper<V: PartialEq + Clone>(edges: &[(V, V)]) -> bool {
    partition_paper(edges).len() == 1
}

/// Union-find with path compression and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
            sets: len,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns `true` when `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.sets -= 1;
        true
    }

    /// Number of disjoint sets.
    pub fn count(&self) -> usize {
        self.sets
    }
}

/// Weak connectivity over dense vertex ids `0..vertex_count`. Every id is
/// assumed to be an endpoint of some edge.
pub fn connected_ids(vertex_count: usize, edges: &[(usize, usize)]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut uf = UnionFind::new(vertex_count);
    for &(a, b) in edges {
        uf.union(a, b);
    }
    uf.count() == 1
}

/// Weak connectivity by union-find. `false` on an empty edge set.
pub fn connected_fast<V: Eq + Hash>(edges: &[(V, V)]) -> bool {
    let mut ids: HashMap<&V, usize> = HashMap::new();
    let mut pairs = Vec::with_capacity(edges.len());
    for (a, b) in edges {
        let next = ids.len();
        let ia = *ids.entry(a).or_insert(next);
        let next = ids.len();
        let ib = *ids.entry(b).or_insert(next);
        pairs.push((ia, ib));
    }
    connected_ids(ids.len(), &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_pseudodigraph;
    use crate::instance::Instance;

    #[test]
    fn sample_edges_connected() {
        let u = Instance::from_strs(&["ca", "eb", "ad", "bf", "dc", "fe", "ab", "ab", "ba"], 1)
            .unwrap();
        let g = build_pseudodigraph(&u);
        let edges = g.labeled_edges();
        assert!(connected_paper(&edges));
        assert!(connected_fast(&edges));
        assert!(connected_ids(g.vertices().len(), &g.edge_pairs()));
    }

    #[test]
    fn small_cases() {
        assert!(connected_paper(&[('a', 'b')]));
        assert!(connected_fast(&[('a', 'b')]));
        assert!(connected_paper(&[('a', 'a')]));
        assert!(connected_fast(&[('a', 'a')]));
        assert!(!connected_paper(&[('a', 'b'), ('c', 'd')]));
        assert!(!connected_fast(&[('a', 'b'), ('c', 'd')]));
    }

    #[test]
    fn empty_edge_set_is_not_connected() {
        let none: [(char, char); 0] = [];
        assert!(!connected_paper(&none));
        assert!(!connected_fast(&none));
        assert!(partition_paper(&none).is_empty());
    }

    #[test]
    fn merge_order_irrelevant() {
        // groups {a,b}, {c,d} bridged in both directions
        let forward = [('a', 'b'), ('c', 'd'), ('b', 'c')];
        let backward = [('a', 'b'), ('c', 'd'), ('c', 'b')];
        assert!(connected_paper(&forward));
        assert!(connected_paper(&backward));
        let p = partition_paper(&[('a', 'b'), ('c', 'd'), ('e', 'e'), ('d', 'a')]).normalized();
        assert_eq!(p.groups(), &[vec!['a', 'b', 'c', 'd'], vec!['e']]);
    }

    #[test]
    fn self_loop_singleton() {
        let p = partition_paper(&[('x', 'x'), ('x', 'x')]);
        assert_eq!(p.groups(), &[vec!['x']]);
    }

    #[test]
    fn union_find_counts() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 1));
        assert!(uf.union(3, 4));
        assert!(!uf.union(1, 0));
        assert_eq!(uf.count(), 3);
        assert!(uf.union(1, 4));
        assert_eq!(uf.find(0), uf.find(3));
        assert_eq!(uf.count(), 2);
    }
}
