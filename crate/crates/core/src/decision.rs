//! Polynomial-time decision: an instance chains iff its gram multigraph is
//! weakly connected and either every vertex is balanced or exactly one
//! vertex has out-excess +1 and exactly one has out-excess -1.

use serde::Serialize;

use crate::connectivity::{connected_ids, connected_paper};
use crate::graph::{build_pseudodigraph, degree_table, Pseudodigraph, VertexLabel};
use crate::instance::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }
}

impl From<bool> for Answer {
    fn from(yes: bool) -> Self {
        if yes {
            Answer::Yes
        } else {
            Answer::No
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    None,
    NotConnected,
    DegreeConditionViolated,
}

/// Which degree condition holds, if any. A single value, so the two
/// conditions can never be reported together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BalanceCase {
    /// `F+(v) = F-(v)` everywhere.
    Balanced,
    /// One vertex at +1, one at -1, all others balanced.
    OneExcessPair,
    NotApplicable,
}

/// Outcome of the degree test. `odd_vertices` lists every unbalanced vertex
/// with `F+ - F-`, in vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionTest {
    pub holds: bool,
    pub case: BalanceCase,
    pub odd_vertices: Vec<(VertexLabel, i64)>,
}

impl ConditionTest {
    /// The `(+1, -1)` endpoints in the one-excess-pair case.
    pub fn excess_pair(&self) -> Option<(&VertexLabel, &VertexLabel)> {
        if self.case != BalanceCase::OneExcessPair {
            return None;
        }
        let start = self.odd_vertices.iter().find(|(_, d)| *d == 1)?;
        let end = self.odd_vertices.iter().find(|(_, d)| *d == -1)?;
        Some((&start.0, &end.0))
    }
}

pub fn test_conditions(g: &Pseudodigraph) -> ConditionTest {
    let degrees = degree_table(g);
    let odd_vertices: Vec<(VertexLabel, i64)> = (0..degrees.len())
        .filter(|&id| degrees.excess(id) != 0)
        .map(|id| (g.vertex(id).clone(), degrees.excess(id)))
        .collect();
    let case = match odd_vertices.as_slice() {
        [] => BalanceCase::Balanced,
        [(_, 1), (_, -1)] | [(_, -1), (_, 1)] => BalanceCase::OneExcessPair,
        _ => BalanceCase::NotApplicable,
    };
    ConditionTest {
        holds: case != BalanceCase::NotApplicable,
        case,
        odd_vertices,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ConnectivityMethod {
    /// Union-find.
    #[default]
    Fast,
    /// Group-merging scan.
    Paper,
}

impl ConnectivityMethod {
    pub fn is_connected(self, g: &Pseudodigraph) -> bool {
        match self {
            ConnectivityMethod::Fast => connected_ids(g.vertices().len(), &g.edge_pairs()),
            ConnectivityMethod::Paper => connected_paper(&g.edge_pairs()),
        }
    }
}

/// Decision plus diagnostics. `case` and `odd_vertices` always describe the
/// degree test, even when connectivity already failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub answer: Answer,
    pub failure_reason: FailureReason,
    pub case: BalanceCase,
    pub odd_vertices: Vec<(VertexLabel, i64)>,
}

pub fn decide(u: &Instance) -> Verdict {
    decide_with(u, ConnectivityMethod::default())
}

pub fn decide_with(u: &Instance, method: ConnectivityMethod) -> Verdict {
    decide_graph(&build_pseudodigraph(u), method)
}

/// Connectivity is checked first, so a disconnected graph reports
/// `NotConnected` regardless of its degrees.
pub fn decide_graph(g: &Pseudodigraph, method: ConnectivityMethod) -> Verdict {
    let connected = method.is_connected(g);
    let test = test_conditions(g);
    let failure_reason = if !connected {
        FailureReason::NotConnected
    } else if !test.holds {
        FailureReason::DegreeConditionViolated
    } else {
        FailureReason::None
    };
    Verdict {
        answer: Answer::from(failure_reason == FailureReason::None),
        failure_reason,
        case: test.case,
        odd_vertices: test.odd_vertices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &str) -> VertexLabel {
        VertexLabel::from_chars(x)
    }

    fn inst(xs: &[&str]) -> Instance {
        Instance::from_strs(xs, 1).unwrap()
    }

    #[test]
    fn sample_conditions() {
        let u = inst(&["ca", "eb", "ad", "bf", "dc", "fe", "ab", "ab", "ba"]);
        let test = test_conditions(&build_pseudodigraph(&u));
        assert!(test.holds);
        assert_eq!(test.case, BalanceCase::OneExcessPair);
        assert_eq!(test.odd_vertices, vec![(v("a"), 1), (v("b"), -1)]);
        assert_eq!(test.excess_pair(), Some((&v("a"), &v("b"))));
    }

    #[test]
    fn symmetric_cycle_is_balanced() {
        let test = test_conditions(&build_pseudodigraph(&inst(&["ab", "ba"])));
        assert!(test.holds);
        assert_eq!(test.case, BalanceCase::Balanced);
        assert!(test.odd_vertices.is_empty());
        assert_eq!(test.excess_pair(), None);
    }

    #[test]
    fn excess_two_fails() {
        let test = test_conditions(&build_pseudodigraph(&inst(&["ab", "ab"])));
        assert!(!test.holds);
        assert_eq!(test.case, BalanceCase::NotApplicable);
        assert_eq!(test.odd_vertices, vec![(v("a"), 2), (v("b"), -2)]);
    }

    #[test]
    fn reports_all_odd_vertices() {
        // four unbalanced vertices
        let test = test_conditions(&build_pseudodigraph(&inst(&["ab", "cd"])));
        assert!(!test.holds);
        assert_eq!(test.odd_vertices.len(), 4);
    }

    #[test]
    fn pair_in_reverse_vertex_order() {
        // -1 at a, +1 at b
        let test = test_conditions(&build_pseudodigraph(&inst(&["ba", "aa"])));
        assert_eq!(test.case, BalanceCase::OneExcessPair);
        assert_eq!(test.excess_pair(), Some((&v("b"), &v("a"))));
    }

    #[test]
    fn decide_examples() {
        let yes = decide(&inst(&[
            "ca", "eb", "ad", "bf", "dc", "fe", "ab", "ab", "ba",
        ]));
        assert_eq!(yes.answer, Answer::Yes);
        assert_eq!(yes.failure_reason, FailureReason::None);
        assert_eq!(yes.case, BalanceCase::OneExcessPair);

        let yes = decide(&inst(&["ab", "ac", "cb", "cc", "ba"]));
        assert_eq!(yes.answer, Answer::Yes);

        let no = decide(&inst(&["ab", "cd"]));
        assert_eq!(no.answer, Answer::No);
        assert_eq!(no.failure_reason, FailureReason::NotConnected);
    }

    #[test]
    fn disconnected_balanced_graph() {
        let u = inst(&["aa", "bb"]);
        let verdict = decide(&u);
        assert_eq!(verdict.failure_reason, FailureReason::NotConnected);
        assert_eq!(verdict.case, BalanceCase::Balanced);
        assert_eq!(decide_with(&u, ConnectivityMethod::Paper), verdict);
    }

    #[test]
    fn degree_failure_reason() {
        let verdict = decide(&inst(&["ab", "ab"]));
        assert_eq!(
            verdict.failure_reason,
            FailureReason::DegreeConditionViolated
        );
    }
}
