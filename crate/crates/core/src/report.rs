//! JSON documents for verdicts and certificates. Grams are rendered as
//! strings in the instance's symbol mode.

use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, CertificateDefect};
use crate::connectivity::UnionFind;
use crate::decision::{Answer, BalanceCase, FailureReason, Verdict};
use crate::graph::{Pseudodigraph, VertexLabel};
use crate::instance::{Instance, SymbolMode};

/// `{answer, failure_reason, case, odd_vertices}`, with each odd vertex as
/// a `[gram, F+ - F-]` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub answer: Answer,
    pub failure_reason: FailureReason,
    pub case: BalanceCase,
    pub odd_vertices: Vec<(String, i64)>,
    /// Weakly connected components, present only when explaining.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<String>>>,
}

impl VerdictReport {
    pub fn new(verdict: &Verdict, mode: SymbolMode) -> Self {
        VerdictReport {
            answer: verdict.answer,
            failure_reason: verdict.failure_reason,
            case: verdict.case,
            odd_vertices: verdict
                .odd_vertices
                .iter()
                .map(|(v, d)| (v.render(mode), *d))
                .collect(),
            components: None,
        }
    }

    pub fn with_components(mut self, g: &Pseudodigraph, mode: SymbolMode) -> Self {
        self.components = Some(
            components(g)
                .into_iter()
                .map(|group| {
                    group
                        .into_iter()
                        .map(|v| g.vertex(v).render(mode))
                        .collect()
                })
                .collect(),
        );
        self
    }
}

/// Vertex ids grouped by weak component, each group ascending, groups
/// ordered by their smallest id.
pub fn components(g: &Pseudodigraph) -> Vec<Vec<usize>> {
    let mut sets = UnionFind::new(g.vertices().len());
    for (a, b) in g.edge_pairs() {
        sets.union(a, b);
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; g.vertices().len()];
    for v in 0..g.vertices().len() {
        let root = sets.find(v);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(v);
    }
    groups
}

/// `{permutation: [1-based ints], path: [[from, to], ...]}`. The path may be
/// omitted when reading, in which case it is induced from the permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub permutation: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<[String; 2]>>,
}

impl CertificateReport {
    pub fn new(c: &Certificate, mode: SymbolMode) -> Self {
        CertificateReport {
            permutation: c.permutation.clone(),
            path: Some(
                c.path
                    .iter()
                    .map(|(a, b)| [a.render(mode), b.render(mode)])
                    .collect(),
            ),
        }
    }

    pub fn into_certificate(self, u: &Instance) -> Result<Certificate, CertificateDefect> {
        match self.path {
            None => Certificate::from_permutation(u, self.permutation),
            Some(path) => Ok(Certificate {
                permutation: self.permutation,
                path: path
                    .iter()
                    .map(|[a, b]| {
                        (
                            VertexLabel::new(u.mode().split(a)),
                            VertexLabel::new(u.mode().split(b)),
                        )
                    })
                    .collect(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{extract_certificate, verify_certificate};
    use crate::decision::decide;

    #[test]
    fn verdict_json_shape() {
        let u = Instance::from_strs(&["ca", "eb", "ad", "bf", "dc", "fe", "ab", "ab", "ba"], 1)
            .unwrap();
        let json = serde_json::to_value(VerdictReport::new(&decide(&u), u.mode())).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "answer": "yes",
                "failure_reason": "none",
                "case": "one_excess_pair",
                "odd_vertices": [["a", 1], ["b", -1]]
            })
        );
    }

    #[test]
    fn explained_components() {
        let u = Instance::from_strs(&["ab", "cd", "ba", "ee"], 1).unwrap();
        let g = crate::graph::build_pseudodigraph(&u);
        let report = VerdictReport::new(&decide(&u), u.mode()).with_components(&g, u.mode());
        assert_eq!(
            serde_json::to_value(&report).unwrap()["components"],
            serde_json::json!([["a", "b"], ["c", "d"], ["e"]])
        );
    }

    #[test]
    fn certificate_json_roundtrip() {
        let u = Instance::from_strs(&["ab", "ac", "cb", "cc", "ba"], 1).unwrap();
        let c = extract_certificate(&u).unwrap();
        let text = serde_json::to_string(&CertificateReport::new(&c, u.mode())).unwrap();
        let back: CertificateReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_certificate(&u).unwrap(), c);

        let bare: CertificateReport =
            serde_json::from_str(r#"{"permutation":[1,5,2,4,3]}"#).unwrap();
        assert_eq!(
            verify_certificate(&u, &bare.into_certificate(&u).unwrap()),
            Ok(())
        );
    }
}
