use proptest::prelude::*;

use powerlabel::labeling::{id_bits, sweep_thresholds};
use powerlabel::realize::{havel_hakimi, is_graphical};
use powerlabel::{decode, encode, DegreeSequence, Graph, Mode};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=n * 3).prop_map(move |e| Graph::from_edges(n, e))
    })
}

fn graph_and_threshold() -> impl Strategy<Value = (Graph, usize)> {
    graph_strategy(40).prop_flat_map(|g| {
        let top = g.max_degree() + 2;
        (Just(g), 0..=top)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn decode_matches_adjacency_and_is_symmetric((g, t) in graph_and_threshold()) {
        let n = g.vertex_count();
        for mode in [Mode::Bitstring, Mode::Concat] {
            let ls = encode(&g, t, mode);
            for u in 0..n {
                for v in 0..n {
                    let a = decode(&ls.params, &ls.labels[u], &ls.labels[v]).unwrap();
                    let b = decode(&ls.params, &ls.labels[v], &ls.labels[u]).unwrap();
                    prop_assert_eq!(a, b);
                    prop_assert_eq!(a, g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn label_lengths_follow_layout((g, t) in graph_and_threshold()) {
        let n = g.vertex_count();
        let w = id_bits(n);
        let bits = encode(&g, t, Mode::Bitstring);
        let concat = encode(&g, t, Mode::Concat);
        prop_assert_eq!(&bits.id_of, &concat.id_of);
        let k = bits.fat_count;
        for v in 0..n {
            let d = g.degree(v);
            if d >= t.max(1) {
                prop_assert!(bits.is_fat(v));
                prop_assert!(bits.id_of[v] <= k);
                prop_assert_eq!(bits.labels[v].len(), 1 + w + k);
                let fat_nbrs = g.neighbors(v).iter().filter(|&&u| bits.is_fat(u as usize)).count();
                prop_assert_eq!(concat.labels[v].len(), 1 + w + fat_nbrs * w);
            } else {
                prop_assert!(!bits.is_fat(v));
                prop_assert!(bits.id_of[v] > k);
                prop_assert_eq!(bits.labels[v].len(), 1 + w + d * w);
                prop_assert_eq!(&bits.labels[v], &concat.labels[v]);
            }
        }
    }

    #[test]
    fn sweep_rows_match_encoded_maxima((g, t) in graph_and_threshold()) {
        let n = g.vertex_count();
        for mode in [Mode::Bitstring, Mode::Concat] {
            let ls = encode(&g, t, mode);
            let (mut thin, mut fat) = (0, 0);
            for v in 0..n {
                let len = ls.labels[v].len();
                if ls.is_fat(v) { fat = fat.max(len) } else { thin = thin.max(len) }
            }
            let row = sweep_thresholds(&g, mode).row(t);
            prop_assert_eq!((row.max_thin, row.max_fat), (thin, fat));
        }
    }
}

fn degree_sequence() -> impl Strategy<Value = DegreeSequence> {
    prop_oneof![
        // Degrees of a random graph: always graphical.
        graph_strategy(64).prop_map(|g| DegreeSequence(g.degrees())),
        // Arbitrary sequences: graphical or not.
        (1..=64usize).prop_flat_map(|n| prop::collection::vec(0..n, n).prop_map(DegreeSequence)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn havel_hakimi_preserves_degrees(seq in degree_sequence()) {
        match havel_hakimi(&seq) {
            Ok(g) => {
                prop_assert!(is_graphical(&seq));
                g.check_invariants().map_err(TestCaseError::fail)?;
                prop_assert_eq!(g.degrees(), seq.0);
            }
            Err(_) => prop_assert!(!is_graphical(&seq)),
        }
    }
}
