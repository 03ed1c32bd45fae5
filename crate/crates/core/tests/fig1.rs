//! The three 12-vertex reference graphs through every operation.
//!
//! Vertex ids are 0-based; the comments give 1-based labels (id + 1).

use esbss::connectivity::{
    blocks, is_biconnected, is_strongly_connected, is_two_edge_connected, sccs, strong_bridges,
};
use esbss::graph::{underlying, UndirectedView};
use esbss::optimizer::augment_to_biconnected;
use esbss::oracle::{brute_feasible, brute_sbcs, exact_m2esbss};
use esbss::sbc::{b_bridges, is_strongly_biconnected, k_edge_sbc_check, sbcs};
use esbss::testkit::{fig1, Fig1};
use esbss::{
    approx_m2esbss, bound_report, is_two_edge_strongly_biconnected, minimal_two_ecss, to_dot,
    ArcId, ArcSet, Digraph, Witness,
};

fn a() -> Digraph {
    fig1(Fig1::A).graph
}
fn b() -> Digraph {
    fig1(Fig1::B).graph
}
fn c() -> Digraph {
    fig1(Fig1::C).graph
}

fn ids(range: std::ops::Range<usize>) -> Vec<ArcId> {
    range.map(ArcId).collect()
}

/// Articulation points by deleting each vertex and testing connectivity.
fn brute_cut_vertices(u: &UndirectedView) -> Vec<usize> {
    let n = u.n();
    let connected_without = |x: usize| {
        let start = (0..n).find(|&v| v != x).unwrap();
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in u.neighbors(v) {
                if w != x && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..n).filter(|&v| v != x).all(|v| seen[v])
    };
    (0..n).filter(|&x| !connected_without(x)).collect()
}

#[test]
fn every_fixture_fact_holds() {
    for variant in [Fig1::A, Fig1::B, Fig1::C] {
        let fx = fig1(variant);
        for (name, ok) in fx.verify() {
            assert!(ok, "{}: fact {name} failed", fx.name);
        }
    }
}

#[test]
fn graph_core_operations() {
    let g = a();
    assert_eq!((g.n(), g.m()), (12, 29));
    assert_eq!(underlying(&g).edges().len(), 16);

    // Dropping 2->10 (arc 0) leaves exactly the C fixture.
    assert_eq!(g.remove_arc(ArcId(0)).unwrap(), c());

    // Labels {1,2,3,5,9,10}: six bidirected pairs survive.
    let (h, map) = b().induced(&[0, 1, 2, 4, 8, 9]).unwrap();
    assert_eq!(map, vec![0, 1, 2, 4, 8, 9]);
    assert_eq!(h.m(), 12);

    let dot = to_dot(&g, &ArcSet::empty(g.m()));
    let node_lines = dot
        .lines()
        .filter(|l| l.trim_end().ends_with(';') && !l.contains("->") && !l.contains('['))
        .count();
    assert_eq!(node_lines, 12);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 29);
}

#[test]
fn connectivity_on_fixtures() {
    assert_eq!(sccs(&a()).components, vec![(0..12).collect::<Vec<_>>()]);
    assert!(is_strongly_connected(&b()));
    assert!(is_biconnected(&underlying(&a())));
    assert!(strong_bridges(&a()).unwrap().is_empty());
    assert!(is_two_edge_connected(&b()));

    let ub = underlying(&b());
    let dec = blocks(&ub);
    assert_eq!(
        dec.blocks,
        vec![vec![0, 1, 2, 4, 8, 9], vec![3, 4, 5, 6, 7, 10, 11]]
    );
    // Vertex 5 in 1-based labels.
    assert_eq!(dec.cut_vertices, vec![4]);
    assert_eq!(brute_cut_vertices(&ub), dec.cut_vertices);
    assert!(brute_cut_vertices(&underlying(&a())).is_empty());
}

#[test]
fn strong_biconnectivity_on_fixtures() {
    assert!(!is_strongly_biconnected(&b()));
    let dec = sbcs(&b());
    assert_eq!(dec.count(), 2);
    assert_eq!(brute_sbcs(&b()).unwrap(), dec);

    assert!(b_bridges(&a()).unwrap().is_empty());
    assert!(b_bridges(&c()).unwrap().is_empty());

    assert!(is_two_edge_strongly_biconnected(&a()).two_edge_sbc);
    assert!(is_two_edge_strongly_biconnected(&c()).two_edge_sbc);
    let report = is_two_edge_strongly_biconnected(&b());
    assert!(!report.two_edge_sbc);
    assert_eq!(report.witness, Some(Witness::CutVertex { vertex: 4 }));
    assert_eq!(report.witness.unwrap().describe(1), "cut vertex 5");

    assert!(k_edge_sbc_check(&a(), 1).unwrap());
    assert!(k_edge_sbc_check(&a(), 2).unwrap());
    assert!(!k_edge_sbc_check(&a(), 3).unwrap());
}

#[test]
fn minimal_two_ecss_of_a_is_b() {
    // The three non-paired arcs come first and are deleted first; what is
    // left is the bidirected B fixture, where every arc is needed.
    let u = minimal_two_ecss(&a()).unwrap();
    assert_eq!(u.to_vec(), ids(3..29));
}

#[test]
fn augmenting_b_inside_a_adds_one_crossing_arc() {
    let g = a();
    let mut current = ArcSet::from_ids(g.m(), ids(3..29));
    let added = augment_to_biconnected(&g, &mut current, None).unwrap();
    // 2->10 lies inside the block {1,2,3,5,9,10}; 6->10 is the lowest arc
    // joining the two blocks.
    assert_eq!(added, vec![ArcId(1)]);
    assert!(is_biconnected(&underlying(&esbss::Subgraph::new(
        &g, &current
    ))));
}

#[test]
fn approximation_on_a_reaches_the_optimum() {
    let g = a();
    let trace = approx_m2esbss(&g).unwrap();
    assert_eq!(trace.u, ids(3..29));
    assert!(!trace.early_exit);
    assert_eq!(trace.phase1_added, vec![ArcId(1)]);
    assert_eq!(trace.bbridges_found, vec![ArcId(1)]);
    assert_eq!(trace.per_bridge_added.len(), 1);
    assert_eq!(trace.per_bridge_added[0].added, vec![ArcId(2)]);
    assert_eq!(trace.e2e, ids(1..29));
    assert!((28..=29).contains(&trace.size()));

    let report = bound_report(&trace);
    assert_eq!(report.lower_bound, 24);
    assert_eq!(report.upper_bound, 11 + 60);
    assert_eq!(report.ratio_upper, 3.0);
    assert!(report.sandwich_holds);
}

#[test]
fn exact_optimum_of_a_is_c() {
    let g = a();
    let r = exact_m2esbss(&g, 100_000).unwrap();
    assert_eq!(r.opt_size, 28);
    assert_eq!(r.witness, ids(1..29));
    // C(29, 27) subsets of size 27, all rejected.
    assert_eq!(r.certificate_checks, 406);
    // All 29 subsets of size 28 come before them; C is the last one.
    assert_eq!(r.explored, 29 + 406);
}

#[test]
fn brute_feasibility_on_fixtures() {
    let g = a();
    assert!(brute_feasible(&g, &ArcSet::from_ids(29, ids(1..29))));
    assert!(!brute_feasible(&g, &ArcSet::from_ids(29, ids(3..29))));
    assert!(!brute_feasible(&g, &ArcSet::from_ids(29, ids(0..23))));
}
