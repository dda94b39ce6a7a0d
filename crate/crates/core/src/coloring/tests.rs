use proptest::prelude::*;

use super::*;
use crate::decomposition::find_special_split;
use crate::fixtures::{complete, complete_bipartite, cycle, graph, h7, path};
use crate::generate::generate_chordless;
use crate::oracle::brute_force_aci;
use crate::verify::{verify_acyclic, verify_total};

fn with_colors(palette: Color, colored: &[((Vertex, Vertex), Color)]) -> PartialEdgeColoring {
    let mut c = PartialEdgeColoring::new(palette);
    for &((u, v), col) in colored {
        c.assign(Edge::new(u, v), col);
    }
    c
}

fn square_1213() -> (Graph, PartialEdgeColoring) {
    let g = cycle(4);
    let c = with_colors(3, &[((0, 1), 1), ((1, 2), 2), ((2, 3), 1), ((3, 0), 3)]);
    (g, c)
}

fn assert_optimal(g: &Graph) -> PartialEdgeColoring {
    let c = color_graph(g).unwrap();
    verify_total(g, &c).unwrap();
    verify_acyclic(g, &c).unwrap();
    assert_eq!(c.palette(), optimal_palette(g));
    c
}

#[test]
fn color_sets_and_f() {
    let (g, c) = square_1213();
    assert_eq!(color_sets(&c, &g, 1).unwrap(), vec![1, 2]);
    assert_eq!(f_ab(&c, &g, 0, 1).unwrap(), vec![2]);
    assert_eq!(f_ab(&c, &g, 1, 0).unwrap(), vec![3]);
    assert!(matches!(
        f_ab(&c, &g, 0, 2),
        Err(ColoringError::EdgeNotPresent(_))
    ));
}

#[test]
fn bichromatic_path_on_square() {
    let (g, c) = square_1213();
    let p = maximal_bichromatic_path(&c, &g, 3, 1, 2).unwrap().unwrap();
    assert_eq!(p.vertices, vec![3, 2, 1, 0]);
    assert_eq!(p.to_string(), "(1, 2) 3-2-1-0");
    assert_eq!(maximal_bichromatic_path(&c, &g, 1, 3, 2).unwrap(), None);
}

#[test]
fn bichromatic_cycle_is_an_error() {
    let g = cycle(4);
    let c = with_colors(2, &[((0, 1), 1), ((1, 2), 2), ((2, 3), 1), ((3, 0), 2)]);
    assert_eq!(
        maximal_bichromatic_path(&c, &g, 0, 1, 2),
        Err(ColoringError::BichromaticCycle(0))
    );
}

#[test]
fn critical_paths() {
    // Path 0-1-2-3 colored 1,2,1 plus the open edge (0, 3): the walk from 0
    // along 1, 2, 1 ends at 3 with a 1-edge.
    let g = cycle(4);
    let c = with_colors(3, &[((0, 1), 1), ((1, 2), 2), ((2, 3), 1)]);
    assert!(critical_path_exists(&c, &g, 1, 2, 0, 3).unwrap());
    assert!(!critical_path_exists(&c, &g, 1, 3, 0, 3).unwrap());
    assert_eq!(
        candidate_colors(&c, &g, Edge::new(0, 3)).unwrap(),
        vec![2, 3]
    );
    assert!(!is_valid(&c, &g, Edge::new(0, 3), 2).unwrap());
    assert!(is_valid(&c, &g, Edge::new(0, 3), 3).unwrap());
    assert!(!is_valid(&c, &g, Edge::new(0, 3), 1).unwrap());
    assert_eq!(
        candidate_colors(&c, &g, Edge::new(0, 1)),
        Err(ColoringError::EdgeAlreadyColored(Edge::new(0, 1)))
    );
}

#[test]
fn star_candidates() {
    let g = graph(4, &[(0, 1), (0, 2), (0, 3)]);
    let c = with_colors(3, &[((0, 1), 1), ((0, 2), 2)]);
    assert_eq!(candidate_colors(&c, &g, Edge::new(0, 3)).unwrap(), vec![3]);
}

#[test]
fn exchanges() {
    let (g, c) = square_1213();
    let swapped = color_exchange(&c, &g, 0, 1, 3).unwrap();
    assert_eq!(swapped.get(Edge::new(0, 1)), Some(3));
    assert_eq!(swapped.get(Edge::new(0, 3)), Some(1));
    // Now 0-3 and 3-2 are both 1.
    assert!(!exchange_is_valid(&c, &g, 0, 1, 3).unwrap());
    assert!(color_exchange(&c, &g, 0, 1, 2).is_err());

    let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
    let c = with_colors(3, &[((0, 1), 1), ((0, 2), 2), ((0, 3), 3)]);
    assert!(exchange_is_valid(&c, &star, 0, 1, 2).unwrap());
    let open = with_colors(3, &[((0, 1), 1)]);
    assert!(matches!(
        color_exchange(&open, &star, 0, 1, 2),
        Err(ColoringError::PreconditionViolated(_))
    ));
}

#[test]
fn merge_two_triangles() {
    // Triangles 0-1-2 and 0-3-4 meeting at 0, each colored 1, 2, 3.
    let left = with_colors(4, &[((0, 1), 1), ((0, 2), 2), ((1, 2), 3)]);
    let right = with_colors(4, &[((0, 3), 1), ((0, 4), 2), ((3, 4), 3)]);
    let merged = merge_at_cut_vertex(&[left, right], 0).unwrap();
    let g = graph(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]);
    let mut at_zero = color_sets(&merged, &g, 0).unwrap();
    at_zero.dedup();
    assert_eq!(at_zero.len(), 4);
    verify_acyclic(&g, &merged).unwrap();

    let small = with_colors(3, &[((0, 1), 1), ((0, 2), 2), ((1, 2), 3)]);
    let other = with_colors(3, &[((0, 3), 1), ((0, 4), 2), ((3, 4), 3)]);
    assert_eq!(
        merge_at_cut_vertex(&[small, other], 0),
        Err(ColoringError::PaletteTooSmall {
            palette: 3,
            needed: 4
        })
    );
}

#[test]
fn named_graphs() {
    assert_eq!(assert_optimal(&complete_bipartite(2, 3)).palette(), 3);
    assert_eq!(assert_optimal(&h7()).palette(), 4);
    assert_eq!(assert_optimal(&cycle(5)).palette(), 3);
    assert_eq!(assert_optimal(&path(6)).palette(), 2);
    assert_eq!(assert_optimal(&graph(2, &[(0, 1)])).palette(), 1);
    assert_eq!(assert_optimal(&Graph::empty(4)).palette(), 0);
    assert_eq!(assert_optimal(&complete_bipartite(2, 7)).palette(), 7);
}

#[test]
fn disjoint_cycle_and_star() {
    let g = graph(8, &[(0, 1), (1, 2), (2, 0), (3, 4), (3, 5), (3, 6), (3, 7)]);
    let c = assert_optimal(&g);
    assert_eq!(c.palette(), 4);
}

#[test]
fn chords_are_rejected() {
    assert_eq!(
        color_graph(&complete(4)),
        Err(ColoringError::NotChordless {
            witness: Edge::new(0, 1)
        })
    );
}

#[test]
fn path_extension_preconditions() {
    let g = h7();
    let c = PartialEdgeColoring::new(4);
    let p = BichromaticPath {
        vertices: vec![5, 1],
        start_color: 1,
        other_color: 2,
    };
    assert!(matches!(
        extend_by_lemma4(&c, &g, &p, 2),
        Err(ColoringError::PreconditionViolated(_))
    ));
}

#[test]
fn split_edge_on_h7() {
    let g = h7();
    let split = find_special_split(&g).unwrap();
    let x = g
        .neighbors(split.a)
        .iter()
        .copied()
        .find(|&w| split.x.contains(w) && g.degree(w) == 2 && !g.has_edge(w, split.b))
        .unwrap();
    let open = Edge::new(x, split.a);
    let rest = g.delete_edge(open).unwrap();
    let partial = color_graph(&rest).unwrap();
    let mut c = PartialEdgeColoring::new(4);
    for (e, col) in partial.iter() {
        c.assign(e, col);
    }
    let done = color_split_edge(&c, &g, &split, x).unwrap();
    verify_total(&g, &done).unwrap();
    verify_acyclic(&g, &done).unwrap();
}

#[test]
fn two_sparse_edge_on_k23() {
    let g = complete_bipartite(2, 3);
    let open = Edge::new(0, 4);
    let partial = color_graph(&g.delete_edge(open).unwrap()).unwrap();
    let mut c = PartialEdgeColoring::new(3);
    for (e, col) in partial.iter() {
        c.assign(e, col);
    }
    let done = color_two_sparse_edge(&c, &g, 4, 0).unwrap();
    verify_total(&g, &done).unwrap();
    verify_acyclic(&g, &done).unwrap();
    assert!(matches!(
        color_two_sparse_edge(&done, &g, 4, 0),
        Err(ColoringError::EdgeAlreadyColored(_))
    ));
}

#[test]
fn renaming_is_a_bijection() {
    let used = [false, true, false, true, false];
    let mine = [false, true, true, false, false];
    let r = renaming(4, &used, &mine).unwrap();
    assert_eq!(r[1..].to_vec(), vec![2, 4, 1, 3]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_graphs_match_the_oracle(n in 4usize..11, seed in any::<u64>()) {
        let g = generate_chordless(n, seed);
        let c = assert_optimal(&g);
        if g.m() <= 16 {
            prop_assert_eq!(c.palette(), brute_force_aci(&g, 8).unwrap().aci);
        }
    }

    #[test]
    fn medium_graphs_are_colored_acyclically(n in 20usize..120, seed in any::<u64>()) {
        assert_optimal(&generate_chordless(n, seed));
    }
}

/// A 2-sparse graph: hubs `0..hubs`, and one degree-2 connector per entry
/// of `links`, given as a hub and an offset to a second, distinct hub.
fn hub_graph(hubs: usize, links: &[(usize, usize)]) -> Option<Graph> {
    let mut edges = Vec::new();
    for (i, &(p, step)) in links.iter().enumerate() {
        let (p, q) = (p % hubs, (p + 1 + step % (hubs - 1)) % hubs);
        edges.push((p, hubs + i));
        edges.push((q, hubs + i));
    }
    let g = Graph::from_edge_list(hubs + links.len(), edges).ok()?;
    let ok = (0..hubs).all(|h| g.degree(h) >= 3) && two_connected(&g);
    ok.then_some(g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// The path extension succeeds for every second color that meets its
    /// preconditions, not just the one the engine picks.
    #[test]
    fn path_extension_works_for_every_second_color(
        hubs in 2usize..5,
        links in proptest::collection::vec((0usize..5, 0usize..5), 3..9),
        pick in any::<prop::sample::Index>(),
    ) {
        let g = hub_graph(hubs, &links);
        prop_assume!(g.is_some());
        let g = g.unwrap();
        let k = g.max_degree() as Color;
        let connectors: Vec<Edge> = g.edges().iter().copied().filter(|e| e.v() >= hubs).collect();
        let open = *pick.get(&connectors);
        let (y, x) = open.endpoints();
        let rest = color_graph(&g.delete_edge(open).unwrap()).unwrap();
        let mut c = PartialEdgeColoring::new(k);
        for (e, col) in rest.iter() {
            c.assign(e, col);
        }
        let alpha = color_sets(&c, &g, x).unwrap()[0];
        for beta in (1..=k).filter(|&b| b != alpha) {
            let Some(path) = maximal_bichromatic_path(&c, &g, x, alpha, beta).unwrap() else { continue };
            if path.vertices.contains(&y) {
                continue;
            }
            let done = extend_by_lemma4(&c, &g, &path, y).unwrap();
            verify_total(&g, &done).unwrap();
            prop_assert!(verify_acyclic(&g, &done).is_ok(), "beta {} on {:?}", beta, g.edges());
        }
    }
}
