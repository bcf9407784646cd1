//! Property tests for the library's cross-cutting invariants.

use std::collections::BTreeSet;

use proptest::prelude::*;

use wordrep_core::config::Config;
use wordrep_core::graph::{
    connected_components, find_induced_wheels, is_proper_colouring, k_colour, parse_graph,
    verify_wheel, write_graph, Graph,
};
use wordrep_core::words::{alternates, graph_from_word, represents, Word};

fn letters_strategy() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1usize..=7, 0..18)
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let count = pairs.len();
        proptest::bits::u32::masked((1u64 << count) as u32 - 1).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::with_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    /// Alternation is symmetric in its two letters.
    #[test]
    fn alternation_is_symmetric(letters in letters_strategy()) {
        let w = Word::new(letters).unwrap();
        let alpha: Vec<usize> = w.alphabet().into_iter().collect();
        for (i, &x) in alpha.iter().enumerate() {
            for &y in &alpha[i + 1..] {
                prop_assert_eq!(
                    alternates(&w, x, y).unwrap(),
                    alternates(&w, y, x).unwrap()
                );
            }
        }
    }

    /// The compiled alternation graph has an edge exactly where the letters
    /// alternate; graph_from_word is recomputed from scratch, so this stays
    /// true after appending a copy of any letter.
    #[test]
    fn compiled_edges_match_pairwise_alternation(
        letters in letters_strategy(),
        extra in 1usize..=7,
    ) {
        for w in [Word::new(letters.clone()).unwrap(), {
            let mut l = letters.clone();
            l.push(extra);
            Word::new(l).unwrap()
        }] {
            let wg = graph_from_word(&w);
            for i in 0..wg.letter_of.len() {
                for j in i + 1..wg.letter_of.len() {
                    prop_assert_eq!(
                        wg.graph.has_edge(i + 1, j + 1),
                        alternates(&w, wg.letter_of[i], wg.letter_of[j]).unwrap()
                    );
                }
            }
        }
    }

    /// Restricting the word first and compiling commutes with compiling
    /// first and taking the induced subgraph (hereditariness of alternation
    /// graphs).
    #[test]
    fn restriction_commutes_with_compilation(
        letters in letters_strategy(),
        submask in 0u8..128,
    ) {
        let w = Word::new(letters).unwrap();
        let s: BTreeSet<usize> = (1usize..=7)
            .filter(|i| submask >> (i - 1) & 1 == 1)
            .filter(|i| w.alphabet().contains(i))
            .collect();
        let restricted_first = graph_from_word(&w.restrict(&s));
        let wg = graph_from_word(&w);
        let s_as_vertices: BTreeSet<usize> = wg
            .letter_of
            .iter()
            .enumerate()
            .filter(|(_, l)| s.contains(l))
            .map(|(i, _)| i + 1)
            .collect();
        let induced = wg.graph.induced_subgraph(&s_as_vertices).unwrap();
        prop_assert_eq!(restricted_first.graph, induced.graph);
        // and the recorded maps agree letter by letter
        let via_induced: Vec<usize> =
            induced.vertex_map.iter().map(|&v| wg.letter_of[v - 1]).collect();
        prop_assert_eq!(restricted_first.letter_of, via_induced);
    }

    /// A single-occurrence word over 1..=n represents the complete graph.
    #[test]
    fn permutations_represent_complete_graphs(n in 1usize..=7, shift in 0usize..7) {
        let letters: Vec<usize> = (0..n).map(|i| (i + shift) % n + 1).collect();
        let w = Word::new(letters).unwrap();
        prop_assert!(represents(&w, &Graph::complete(n).unwrap()).unwrap());
    }

    /// k_colour outputs are proper and stay within their palette.
    #[test]
    fn colouring_oracle_is_sound(g in graph_strategy(6), k in 1usize..=4) {
        let cfg = Config::default();
        if let Some(c) = k_colour(&g, k, &cfg).unwrap() {
            prop_assert!(is_proper_colouring(&g, &c).unwrap());
            prop_assert!(c.colours_used().len() <= k);
        }
    }

    /// Components partition the vertex set.
    #[test]
    fn components_partition_vertices(g in graph_strategy(8)) {
        let comps = connected_components(&g);
        let mut seen = BTreeSet::new();
        for comp in &comps {
            for &v in comp {
                prop_assert!(seen.insert(v), "vertex {} in two components", v);
            }
        }
        prop_assert_eq!(seen.len(), g.vertex_count());
    }

    /// Every reported induced wheel passes the exact shape check
    /// (2|rim| induced edges, chordless rim).
    #[test]
    fn reported_wheels_are_wheels(g in graph_strategy(8)) {
        for (hub, rim) in find_induced_wheels(&g, 4) {
            prop_assert!(verify_wheel(&g, hub, &rim));
        }
    }

    /// Induced subgraph edges come from base edges through the recorded map.
    #[test]
    fn induced_edges_lift_to_base_edges(g in graph_strategy(8), mask in 0u8..=255) {
        let s: BTreeSet<usize> =
            (1..=g.vertex_count()).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let sub = g.induced_subgraph(&s).unwrap();
        for (u, v) in sub.graph.edges() {
            prop_assert!(g.has_edge(sub.vertex_map[u - 1], sub.vertex_map[v - 1]));
        }
        // and nothing was dropped
        for (i, &a) in sub.vertex_map.iter().enumerate() {
            for (j, &b) in sub.vertex_map.iter().enumerate().skip(i + 1) {
                prop_assert_eq!(g.has_edge(a, b), sub.graph.has_edge(i + 1, j + 1));
            }
        }
    }

    /// Graph text format round-trips.
    #[test]
    fn graph_format_roundtrip(g in graph_strategy(8)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}
