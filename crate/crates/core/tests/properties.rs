use std::collections::{BTreeSet, HashMap, VecDeque};

use overlap_chain::certificate::{extract_certificate_with, verify_certificate, CertifyOptions};
use overlap_chain::connectivity::{connected_fast, connected_paper, partition_paper};
use overlap_chain::decision::{decide_with, BalanceCase, ConnectivityMethod};
use overlap_chain::generate::alphabet_symbol;
use overlap_chain::{
    build_pseudodigraph, decide, degree_table, extract_certificate, first_gram, last_gram,
    oracle_backtrack, oracle_permutations, Instance, Symbol, SymbolMode,
};
use proptest::prelude::*;

/// Instances over `a`.. with `alphabet` symbols, `s`/`t` drawn small.
fn instance_strategy(max_n: usize, alphabet: usize) -> impl Strategy<Value = Instance> {
    (2usize..=4)
        .prop_flat_map(|s| (Just(s), 1..s))
        .prop_flat_map(move |(s, t)| {
            let string = prop::collection::vec(0..alphabet, s);
            (Just(s), Just(t), prop::collection::vec(string, 2..=max_n))
        })
        .prop_map(|(s, t, raw)| {
            let strings = raw
                .into_iter()
                .map(|x| x.into_iter().map(alphabet_symbol).collect())
                .collect();
            Instance::new(strings, s, t, SymbolMode::Chars).unwrap()
        })
}

fn edge_set_strategy() -> impl Strategy<Value = Vec<(u8, u8)>> {
    prop::collection::vec((0u8..12, 0u8..12), 1..30)
}

/// Weakly connected components by breadth-first search.
fn bfs_components(edges: &[(u8, u8)]) -> Vec<Vec<u8>> {
    let mut adjacent: HashMap<u8, Vec<u8>> = HashMap::new();
    for &(a, b) in edges {
        adjacent.entry(a).or_default().push(b);
        adjacent.entry(b).or_default().push(a);
    }
    let mut vertices: Vec<u8> = adjacent.keys().copied().collect();
    vertices.sort_unstable();
    let mut seen = BTreeSet::new();
    let mut components = Vec::new();
    for v in vertices {
        if !seen.insert(v) {
            continue;
        }
        let mut component = vec![v];
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in &adjacent[&x] {
                if seen.insert(y) {
                    component.push(y);
                    queue.push_back(y);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components.sort();
    components
}

proptest! {
    #[test]
    fn multiplicities_and_degrees_sum_to_n(u in instance_strategy(12, 3)) {
        let g = build_pseudodigraph(&u);
        prop_assert_eq!(g.total_multiplicity(), u.len());
        let d = degree_table(&g);
        prop_assert_eq!(d.total_out(), u.len());
        prop_assert_eq!(d.total_in(), u.len());
        prop_assert!(g.edges().iter().all(|e| e.multiplicity >= 1));
    }

    #[test]
    fn grams_reconstruct(x in prop::collection::vec("[a-d]", 1..8), k in 0usize..8) {
        let x: Vec<Symbol> = x.into_iter().map(Symbol::new).collect();
        let k = k % (x.len() + 1);
        let mut joined = if k == 0 { Vec::new() } else { first_gram(&x, k).unwrap().to_vec() };
        if k < x.len() {
            joined.extend_from_slice(last_gram(&x, x.len() - k).unwrap());
        }
        prop_assert_eq!(joined, x);
    }

    #[test]
    fn build_ignores_component_order(u in instance_strategy(10, 3), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..u.len()).collect();
        // deterministic shuffle from the seed
        let mut state = seed;
        for i in (1..order.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let shuffled = u.permuted(&order);
        prop_assert_eq!(build_pseudodigraph(&u), build_pseudodigraph(&shuffled));
        prop_assert_eq!(decide(&u), decide(&shuffled));
    }

    #[test]
    fn connectivity_variants_agree(edges in edge_set_strategy()) {
        prop_assert_eq!(connected_paper(&edges), connected_fast(&edges));
    }

    #[test]
    fn partition_matches_bfs(edges in edge_set_strategy()) {
        let groups = partition_paper(&edges).normalized().groups().to_vec();
        prop_assert_eq!(groups, bfs_components(&edges));
    }

    #[test]
    fn connectivity_ignores_direction(edges in edge_set_strategy(), flips in prop::collection::vec(any::<bool>(), 30)) {
        let flipped: Vec<(u8, u8)> = edges
            .iter()
            .zip(flips.iter().cycle())
            .map(|(&(a, b), &flip)| if flip { (b, a) } else { (a, b) })
            .collect();
        prop_assert_eq!(connected_paper(&edges), connected_paper(&flipped));
        prop_assert_eq!(connected_fast(&edges), connected_fast(&flipped));
    }

    #[test]
    fn adding_internal_edge_keeps_connectivity(edges in edge_set_strategy(), i in any::<usize>(), j in any::<usize>()) {
        let endpoints: Vec<u8> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        let extra = (endpoints[i % endpoints.len()], endpoints[j % endpoints.len()]);
        let mut more = edges.clone();
        more.push(extra);
        if connected_fast(&edges) {
            prop_assert!(connected_fast(&more));
            prop_assert!(connected_paper(&more));
        }
    }

    #[test]
    fn reversal_preserves_answer(u in instance_strategy(12, 3)) {
        prop_assert_eq!(decide(&u).answer, decide(&u.reversed()).answer);
    }

    #[test]
    fn verdict_shape(u in instance_strategy(12, 3)) {
        let v = decide(&u);
        match v.case {
            BalanceCase::Balanced => prop_assert!(v.odd_vertices.is_empty()),
            BalanceCase::OneExcessPair => {
                let mut diffs: Vec<i64> = v.odd_vertices.iter().map(|(_, d)| *d).collect();
                diffs.sort_unstable();
                prop_assert_eq!(diffs, vec![-1, 1]);
            }
            BalanceCase::NotApplicable => prop_assert!(!v.answer.is_yes()),
        }
    }

    #[test]
    fn yes_iff_certificate(u in instance_strategy(14, 3)) {
        let yes = decide(&u).answer.is_yes();
        for options in [CertifyOptions::default(), CertifyOptions::fidelity()] {
            let cert = extract_certificate_with(&u, options);
            prop_assert_eq!(cert.is_some(), yes);
            if let Some(c) = cert {
                prop_assert_eq!(verify_certificate(&u, &c), Ok(()));
                let (start, end) = (&c.path[0].0, &c.path[c.path.len() - 1].1);
                match decide(&u).case {
                    BalanceCase::Balanced => prop_assert_eq!(start, end),
                    BalanceCase::OneExcessPair => {
                        let v = decide(&u);
                        let plus = v.odd_vertices.iter().find(|(_, d)| *d == 1).unwrap();
                        let minus = v.odd_vertices.iter().find(|(_, d)| *d == -1).unwrap();
                        prop_assert_eq!(start, &plus.0);
                        prop_assert_eq!(end, &minus.0);
                    }
                    BalanceCase::NotApplicable => prop_assert!(false, "YES without a degree case"),
                }
            }
        }
    }

    #[test]
    fn decide_matches_oracles(u in instance_strategy(7, 3)) {
        let expected = oracle_backtrack(&u).unwrap();
        prop_assert_eq!(oracle_permutations(&u).unwrap(), expected);
        prop_assert_eq!(decide(&u).answer.is_yes(), expected);
        prop_assert_eq!(decide_with(&u, ConnectivityMethod::Paper).answer.is_yes(), expected);
    }

    #[test]
    fn planted_instances_are_yes(seed in any::<u64>(), n in 2usize..200, alphabet in 2usize..6, t in 1usize..3) {
        let spec = overlap_chain::GeneratorSpec::new(n, 3, t, alphabet)
            .seed(seed)
            .mode(overlap_chain::GeneratorMode::PlantedYes);
        let u = overlap_chain::generate(&spec).unwrap();
        prop_assert!(decide(&u).answer.is_yes());
        prop_assert!(extract_certificate(&u).is_some());
    }
}

#[test]
fn planted_over_a_thousand_seeds() {
    for seed in 0..1000 {
        let spec = overlap_chain::GeneratorSpec::new(40, 2, 1, 3)
            .seed(seed)
            .mode(overlap_chain::GeneratorMode::PlantedYes);
        let u = overlap_chain::generate(&spec).unwrap();
        assert!(decide(&u).answer.is_yes(), "seed {seed}");
    }
}

#[test]
fn uniform_batch_matches_backtracking() {
    for seed in 0..1000 {
        let spec = overlap_chain::GeneratorSpec::new(6, 2, 1, 2).seed(seed);
        let u = overlap_chain::generate(&spec).unwrap();
        assert_eq!(
            decide(&u).answer.is_yes(),
            oracle_backtrack(&u).unwrap(),
            "seed {seed}"
        );
    }
}

#[test]
fn large_random_edge_set_agreement() {
    let spec = overlap_chain::GeneratorSpec::new(10_000, 2, 1, 200).seed(11);
    let u = overlap_chain::generate(&spec).unwrap();
    let edges = build_pseudodigraph(&u).labeled_edges();
    assert_eq!(connected_paper(&edges), connected_fast(&edges));
}
