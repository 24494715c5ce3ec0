mod common;

use conndim::{is_resolving, kappa_matrix, pair_coverage, representation, twin_classes, Graph, KappaValue, Verdict};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_connected, resolves, table_of};

fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>(), 0.0..1.0f64)
        .prop_map(|(n, seed, p)| random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p))
}

fn with_subset(min_n: usize, max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    connected_graph(min_n, max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=n))
    })
}

proptest! {
    #[test]
    fn all_but_one_vertex_resolves(g in connected_graph(2, 10)) {
        let km = kappa_matrix(&g);
        for v in 0..g.order() {
            let rest: Vec<usize> = (0..g.order()).filter(|&x| x != v).collect();
            prop_assert_eq!(is_resolving(&km, &rest).unwrap(), Verdict::Resolving);
        }
    }

    #[test]
    fn supersets_of_resolving_sets_resolve((g, set) in with_subset(2, 9)) {
        let km = kappa_matrix(&g);
        let verdict = is_resolving(&km, &set).unwrap();
        prop_assert_eq!(verdict.is_resolving(), resolves(&table_of(&km), &set));
        if verdict.is_resolving() {
            for extra in 0..g.order() {
                if !set.contains(&extra) {
                    let mut bigger = set.clone();
                    bigger.push(extra);
                    prop_assert!(is_resolving(&km, &bigger).unwrap().is_resolving());
                }
            }
        }
    }

    #[test]
    fn witnesses_share_a_representation((g, set) in with_subset(2, 9)) {
        let km = kappa_matrix(&g);
        if let Verdict::Unresolved(u, v) = is_resolving(&km, &set).unwrap() {
            prop_assert!(u < v);
            prop_assert_eq!(representation(&km, u, &set).unwrap().values, representation(&km, v, &set).unwrap().values);
            for a in 0..g.order() {
                for b in a + 1..g.order() {
                    if (a, b) < (u, v) {
                        prop_assert_ne!(representation(&km, a, &set).unwrap().values, representation(&km, b, &set).unwrap().values);
                    }
                }
            }
        }
    }

    #[test]
    fn twins_are_never_told_apart_by_third_vertices(g in connected_graph(2, 10)) {
        let km = kappa_matrix(&g);
        for (u, v) in twin_classes(&g).twin_pairs {
            for w in (0..g.order()).filter(|&w| w != u && w != v) {
                prop_assert_eq!(km.get(u, w), km.get(v, w));
            }
        }
    }

    #[test]
    fn cover_sets_match_distinctions(g in connected_graph(2, 9)) {
        let km = kappa_matrix(&g);
        let cov = pair_coverage(&km);
        prop_assert_eq!(cov.pair_count(), g.order() * (g.order() - 1) / 2);
        for (index, (u, v)) in cov.pairs().enumerate() {
            prop_assert_eq!(cov.pair_index(u, v), index);
            for w in 0..g.order() {
                prop_assert_eq!(cov.covers(w, u, v), km.get(u, w) != km.get(v, w));
            }
        }
    }
}

#[test]
fn representation_reports_landmarks_in_order() {
    let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let km = kappa_matrix(&g);
    let r = representation(&km, 1, &[2, 1]).unwrap();
    assert_eq!(r.values, vec![KappaValue::Finite(1), KappaValue::Infinity]);
    assert!(representation(&km, 3, &[0]).is_err());
    assert!(is_resolving(&km, &[5]).is_err());
}
