//! Reference fixtures and a seeded instance generator.
//!
//! The fixtures are the three 12-vertex graphs shipped under `data/`. Their
//! files use ids `0..12`; the conventional labels for the same vertices are
//! `1..=12`, so [`FIG1_LABEL_OFFSET`] converts back.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connectivity::is_two_edge_connected;
use crate::error::{Error, Result};
use crate::graph::{
    parse_edge_list, underlying, ArcId, ArcSet, Digraph, Subgraph, Vertex, Without,
};
use crate::optimizer::ApproxTrace;
use crate::oracle::{brute_feasible, exact_m2esbss};
use crate::sbc::{is_two_edge_strongly_biconnected, sbcs};

pub const FIG1A_EDGES: &str = include_str!("../../../data/fig1a.edges");
pub const FIG1B_EDGES: &str = include_str!("../../../data/fig1b.edges");
pub const FIG1C_EDGES: &str = include_str!("../../../data/fig1c.edges");

/// Added to an internal vertex id to get its conventional 1-based label.
pub const FIG1_LABEL_OFFSET: usize = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fig1 {
    /// The full 29-arc input.
    A,
    /// 26 arcs: a minimal 2-edge-connected subgraph with a cut vertex.
    B,
    /// 28 arcs: an optimal 2-edge strongly biconnected subgraph of `A`.
    C,
}

/// Where an expected fact comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    /// Given with the reference graphs.
    Given,
    /// Worked out from the arc list (by hand or with the brute-force oracle).
    Computed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fact {
    TwoEdgeStronglyBiconnected(bool),
    TwoEdgeConnected(bool),
    ArcCount(usize),
    UnderlyingEdgeCount(usize),
    StronglyBiconnectedComponents(Vec<Vec<Vertex>>),
    /// The graph is a minimum-size 2-edge strongly biconnected subgraph of
    /// the `A` fixture.
    OptimalForFig1A,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedFact {
    pub name: &'static str,
    pub fact: Fact,
    pub basis: Basis,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Digraph,
    pub expected: Vec<ExpectedFact>,
}

impl Fixture {
    pub fn label(&self, v: Vertex) -> usize {
        v + FIG1_LABEL_OFFSET
    }

    /// Evaluates every expected fact against the module operations.
    pub fn verify(&self) -> Vec<(&'static str, bool)> {
        self.expected
            .iter()
            .map(|e| (e.name, check_fact(&self.graph, &e.fact)))
            .collect()
    }
}

fn check_fact(g: &Digraph, fact: &Fact) -> bool {
    match fact {
        Fact::TwoEdgeStronglyBiconnected(want) => {
            is_two_edge_strongly_biconnected(g).two_edge_sbc == *want
        }
        Fact::TwoEdgeConnected(want) => is_two_edge_connected(g) == *want,
        Fact::ArcCount(m) => g.m() == *m,
        Fact::UnderlyingEdgeCount(e) => underlying(g).edges().len() == *e,
        Fact::StronglyBiconnectedComponents(want) => sbcs(g).components() == want.as_slice(),
        Fact::OptimalForFig1A => {
            let a = fig1(Fig1::A).graph;
            let Ok(exact) = exact_m2esbss(&a, 10_000) else {
                return false;
            };
            let as_subset = ArcSet::from_ids(
                a.m(),
                g.arcs().iter().filter_map(|arc| a.find(arc.tail, arc.head)),
            );
            as_subset.len() == g.m() && g.m() == exact.opt_size && brute_feasible(&a, &as_subset)
        }
    }
}

fn parse_fixture(text: &str) -> Digraph {
    parse_edge_list(text.as_bytes()).expect("shipped fixture parses")
}

pub fn fig1(variant: Fig1) -> Fixture {
    use Basis::*;
    let fact = |name, fact, basis| ExpectedFact { name, fact, basis };
    match variant {
        Fig1::A => Fixture {
            name: "fig1a",
            graph: parse_fixture(FIG1A_EDGES),
            expected: vec![
                fact(
                    "two_edge_sbc",
                    Fact::TwoEdgeStronglyBiconnected(true),
                    Given,
                ),
                fact("arc_count", Fact::ArcCount(29), Given),
                fact("underlying_edges", Fact::UnderlyingEdgeCount(16), Computed),
            ],
        },
        Fig1::B => Fixture {
            name: "fig1b",
            graph: parse_fixture(FIG1B_EDGES),
            expected: vec![
                fact(
                    "two_edge_sbc",
                    Fact::TwoEdgeStronglyBiconnected(false),
                    Given,
                ),
                fact("two_edge_connected", Fact::TwoEdgeConnected(true), Given),
                fact("arc_count", Fact::ArcCount(26), Given),
                fact(
                    "sbcs",
                    // Labels {1,2,3,5,9,10} and {4,5,6,7,8,11,12}.
                    Fact::StronglyBiconnectedComponents(vec![
                        vec![0, 1, 2, 4, 8, 9],
                        vec![3, 4, 5, 6, 7, 10, 11],
                    ]),
                    Computed,
                ),
            ],
        },
        Fig1::C => Fixture {
            name: "fig1c",
            graph: parse_fixture(FIG1C_EDGES),
            expected: vec![
                fact(
                    "two_edge_sbc",
                    Fact::TwoEdgeStronglyBiconnected(true),
                    Given,
                ),
                fact("arc_count", Fact::ArcCount(28), Given),
                fact("optimal_for_fig1a", Fact::OptimalForFig1A, Given),
            ],
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub extra: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, extra: usize, seed: u64) -> Self {
        GenSpec { n, extra, seed }
    }

    /// Largest `extra` accepted for `n` vertices.
    pub fn max_extra(n: usize) -> usize {
        (n * n.saturating_sub(1)).saturating_sub(2 * n)
    }
}

/// Bidirected Hamiltonian cycle `0 <-> 1 <-> ... <-> n-1 <-> 0` followed by
/// `extra` distinct random arcs. Cycle arcs come first, pair by pair.
pub fn generate(spec: GenSpec) -> Result<Digraph> {
    let GenSpec { n, extra, seed } = spec;
    if n < 3 {
        return Err(Error::InvalidParameters(format!(
            "n = {n} must be at least 3"
        )));
    }
    if extra > GenSpec::max_extra(n) {
        return Err(Error::InvalidParameters(format!(
            "extra = {extra} exceeds the {} arcs available for n = {n}",
            GenSpec::max_extra(n)
        )));
    }
    let mut arcs = Vec::with_capacity(2 * n + extra);
    let mut used = vec![false; n * n];
    for v in 0..n {
        let w = (v + 1) % n;
        arcs.push((v, w));
        arcs.push((w, v));
        used[v * n + w] = true;
        used[w * n + v] = true;
    }
    let mut free: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && !used[u * n + v])
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (picked, _) = free.partial_shuffle(&mut rng, extra);
    arcs.extend_from_slice(picked);
    Digraph::new(n, arcs)
}

/// One augmentation step replayed from an [`ApproxTrace`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeStep {
    pub added: ArcId,
    /// The b-bridge held out during this step, if any.
    pub forbidden: Option<ArcId>,
    /// The arc's endpoints lay in different SBCs before it was added.
    pub crossed: bool,
    pub sbcs_before: usize,
    pub sbcs_after: usize,
}

impl MergeStep {
    /// Adding an arc across two SBCs must strictly reduce their number.
    pub fn merged(&self) -> bool {
        self.crossed && self.sbcs_after < self.sbcs_before
    }
}

/// The subgraph an augmentation step started from: the arcs in `current`
/// minus `forbidden`, about to receive `next`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceState {
    pub current: ArcSet,
    pub forbidden: Option<ArcId>,
    pub next: ArcId,
}

impl TraceState {
    pub fn removed(&self) -> Vec<ArcId> {
        self.forbidden.into_iter().collect()
    }
}

/// Every intermediate state of the augmentation phases of `trace`, in order.
pub fn trace_states(g: &Digraph, trace: &ApproxTrace) -> Result<Vec<TraceState>> {
    let mut current = ArcSet::from_ids(g.m(), trace.u.iter().copied());
    let stages = std::iter::once((None, &trace.phase1_added)).chain(
        trace
            .per_bridge_added
            .iter()
            .map(|r| (Some(r.bridge), &r.added)),
    );
    let mut states = Vec::new();
    for (forbidden, added) in stages {
        for &next in added {
            if next.0 >= g.m() {
                return Err(Error::ArcOutOfRange { id: next, m: g.m() });
            }
            states.push(TraceState {
                current: current.clone(),
                forbidden,
                next,
            });
            current.insert(next);
        }
    }
    Ok(states)
}

/// Re-runs every addition recorded in `trace` against `g`, measuring the
/// SBC count of the intermediate subgraph before and after each one.
pub fn replay_merges(g: &Digraph, trace: &ApproxTrace) -> Result<Vec<MergeStep>> {
    let states = trace_states(g, trace)?;
    Ok(states
        .into_iter()
        .map(|st| {
            let removed = st.removed();
            let before = sbcs(&Without::new(&Subgraph::new(g, &st.current), &removed));
            let mut after_set = st.current.clone();
            after_set.insert(st.next);
            let after = sbcs(&Without::new(&Subgraph::new(g, &after_set), &removed)).count();
            let arc = g.arc(st.next);
            MergeStep {
                added: st.next,
                forbidden: st.forbidden,
                crossed: !before.same_component(arc.tail, arc.head),
                sbcs_before: before.count(),
                sbcs_after: after,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Arc;

    #[test]
    fn fixture_sizes() {
        let a = fig1(Fig1::A).graph;
        assert_eq!((a.n(), a.m()), (12, 29));
        assert_eq!(FIG1A_EDGES.lines().count(), 29);
        assert_eq!(fig1(Fig1::B).graph.m(), 26);
        assert_eq!(fig1(Fig1::C).graph.m(), 28);
    }

    #[test]
    fn fixture_arc_lists_nest() {
        let a = fig1(Fig1::A).graph;
        let b = fig1(Fig1::B).graph;
        let c = fig1(Fig1::C).graph;
        assert_eq!(&a.arcs()[3..], b.arcs());
        assert_eq!(&a.arcs()[1..], c.arcs());
        // Extra arcs in 1-based labels: 2->10, 6->10, 2->4.
        let extras: Vec<Arc> = a.arcs()[..3].to_vec();
        assert_eq!(extras, vec![Arc::new(1, 9), Arc::new(5, 9), Arc::new(1, 3)]);
        for arc in b.arcs() {
            assert!(b.find(arc.head, arc.tail).is_some(), "b is bidirected");
        }
    }

    #[test]
    fn generator_small_cases() {
        let g = generate(GenSpec::new(3, 0, 7)).unwrap();
        assert_eq!(g.m(), 6);
        assert!(is_two_edge_strongly_biconnected(&g).two_edge_sbc);
        assert!(generate(GenSpec::new(3, 99, 1)).is_err());
        assert!(generate(GenSpec::new(2, 0, 1)).is_err());
        assert_eq!(GenSpec::max_extra(3), 0);
        assert_eq!(GenSpec::max_extra(4), 4);
    }

    #[test]
    fn generator_is_reproducible() {
        let spec = GenSpec::new(10, 15, 42);
        let g = generate(spec).unwrap();
        assert_eq!(g.m(), 35);
        assert_eq!(g.to_edge_list(), generate(spec).unwrap().to_edge_list());
        assert_ne!(
            g.to_edge_list(),
            generate(GenSpec::new(10, 15, 43)).unwrap().to_edge_list()
        );
        assert!(brute_feasible(&g, &ArcSet::full(g.m())));
    }

    #[test]
    fn generator_fills_complete_digraph() {
        let n = 5;
        let g = generate(GenSpec::new(n, GenSpec::max_extra(n), 3)).unwrap();
        assert_eq!(g.m(), n * (n - 1));
    }
}
