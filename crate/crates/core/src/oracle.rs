//! Brute-force ground truth.
//!
//! Nothing here calls into [`crate::connectivity`] or [`crate::sbc`]:
//! reachability comes from a transitive closure, articulation points from
//! deleting each vertex in turn, and blocks from the pairwise edge relation
//! "no single vertex separates these two edges". The exact solver enumerates
//! arc subsets, so it is only usable on small instances.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ArcId, ArcSet, Digraph, Vertex};
use crate::sbc::{is_two_edge_strongly_biconnected, SbcDecomposition};

/// Size limit for [`brute_sbcs`].
pub const BRUTE_SBCS_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactResult {
    pub opt_size: usize,
    /// Lexicographically first feasible arc subset of minimum size.
    pub witness: Vec<ArcId>,
    /// Feasibility checks performed in total.
    pub explored: u64,
    /// Checks spent proving that no subset of size `opt_size - 1` works.
    pub certificate_checks: u64,
}

#[allow(clippy::needless_range_loop)]
fn closure(n: usize, arcs: &[(Vertex, Vertex)]) -> Vec<Vec<bool>> {
    let mut reach = vec![vec![false; n]; n];
    for (v, row) in reach.iter_mut().enumerate() {
        row[v] = true;
    }
    for &(u, v) in arcs {
        reach[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    reach
}

fn all_mutually_reachable(n: usize, arcs: &[(Vertex, Vertex)]) -> bool {
    let reach = closure(n, arcs);
    n >= 1 && reach.iter().all(|row| row.iter().all(|&r| r))
}

/// Union-find labels of the graph on `vertices` with `edges`, ignoring any
/// edge touching `skip`.
fn component_labels(n: usize, edges: &[(Vertex, Vertex)], skip: Option<Vertex>) -> Vec<usize> {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for &(u, v) in edges {
        if Some(u) == skip || Some(v) == skip {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

fn connected_without(n: usize, edges: &[(Vertex, Vertex)], skip: Option<Vertex>) -> bool {
    let labels = component_labels(n, edges, skip);
    let mut alive = (0..n).filter(|&v| Some(v) != skip);
    match alive.next() {
        None => true,
        Some(first) => alive.all(|v| labels[v] == labels[first]),
    }
}

fn undirected_pairs(arcs: &[(Vertex, Vertex)]) -> Vec<(Vertex, Vertex)> {
    let mut pairs: Vec<_> = arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

fn underlying_biconnected(n: usize, arcs: &[(Vertex, Vertex)]) -> bool {
    let edges = undirected_pairs(arcs);
    n >= 3
        && connected_without(n, &edges, None)
        && (0..n).all(|x| connected_without(n, &edges, Some(x)))
}

fn strongly_biconnected(n: usize, arcs: &[(Vertex, Vertex)]) -> bool {
    all_mutually_reachable(n, arcs) && underlying_biconnected(n, arcs)
}

fn feasible_arcs(n: usize, arcs: &[(Vertex, Vertex)]) -> bool {
    if n < 3 || !strongly_biconnected(n, arcs) {
        return false;
    }
    let mut rest = Vec::with_capacity(arcs.len().saturating_sub(1));
    (0..arcs.len()).all(|skip| {
        rest.clear();
        rest.extend(
            arcs.iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &a)| a),
        );
        strongly_biconnected(n, &rest)
    })
}

/// Definition-level check that `(V, s)` is 2-edge strongly biconnected.
pub fn brute_feasible(g: &Digraph, s: &ArcSet) -> bool {
    let arcs: Vec<(Vertex, Vertex)> = s
        .iter()
        .map(|a| {
            let arc = g.arc(a);
            (arc.tail, arc.head)
        })
        .collect();
    feasible_arcs(g.n(), &arcs)
}

/// Strongly biconnected components by exhaustive pairwise tests.
pub fn brute_sbcs(g: &Digraph) -> Result<SbcDecomposition> {
    let n = g.n();
    if n > BRUTE_SBCS_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_SBCS_MAX_N,
        });
    }
    let arcs: Vec<(Vertex, Vertex)> = g.arcs().iter().map(|a| (a.tail, a.head)).collect();
    let reach = closure(n, &arcs);
    let same_scc = |u: Vertex, v: Vertex| reach[u][v] && reach[v][u];

    let inner: Vec<(Vertex, Vertex)> = undirected_pairs(&arcs)
        .into_iter()
        .filter(|&(u, v)| same_scc(u, v))
        .collect();

    // labels[x]: components after deleting vertex x.
    let base = component_labels(n, &inner, None);
    let labels: Vec<Vec<usize>> = (0..n)
        .map(|x| component_labels(n, &inner, Some(x)))
        .collect();
    let survivor = |e: (Vertex, Vertex), x: Vertex| if e.0 == x { e.1 } else { e.0 };
    let together = |e: (Vertex, Vertex), f: (Vertex, Vertex)| {
        base[e.0] == base[f.0]
            && (0..n).all(|x| labels[x][survivor(e, x)] == labels[x][survivor(f, x)])
    };

    let mut class: Vec<usize> = (0..inner.len()).collect();
    for i in 0..inner.len() {
        if class[i] != i {
            continue;
        }
        for j in i + 1..inner.len() {
            if class[j] == j && together(inner[i], inner[j]) {
                class[j] = i;
            }
        }
    }

    let mut components: Vec<Vec<Vertex>> = Vec::new();
    for i in 0..inner.len() {
        if class[i] != i {
            continue;
        }
        let mut vs: Vec<Vertex> = (0..inner.len())
            .filter(|&j| class[j] == i)
            .flat_map(|j| [inner[j].0, inner[j].1])
            .collect();
        vs.sort_unstable();
        vs.dedup();
        components.push(vs);
    }
    for v in 0..n {
        if !inner.iter().any(|&(a, b)| a == v || b == v) {
            components.push(vec![v]);
        }
    }
    Ok(SbcDecomposition::from_components(n, components))
}

/// Every vertex keeps in- and out-degree at least 2; necessary for
/// feasibility since a vertex with a single in- or out-arc makes that arc a
/// strong bridge.
fn degrees_ok(n: usize, arcs: &[(Vertex, Vertex)]) -> bool {
    let mut out = vec![0u32; n];
    let mut inc = vec![0u32; n];
    for &(u, v) in arcs {
        out[u] += 1;
        inc[v] += 1;
    }
    out.iter().chain(inc.iter()).all(|&d| d >= 2)
}

/// Minimum 2-edge strongly biconnected spanning subgraph by exhaustive
/// search, descending from `m - 1` arcs. Feasibility is monotone under adding
/// arcs, so the first size with no feasible subset certifies the optimum.
/// Fails once more than `budget` subsets would be checked.
pub fn exact_m2esbss(g: &Digraph, budget: u64) -> Result<ExactResult> {
    let report = is_two_edge_strongly_biconnected(g);
    if let Some(w) = report.witness {
        return Err(Error::NotTwoEdgeStronglyBiconnected(w));
    }
    let n = g.n();
    let all: Vec<(Vertex, Vertex)> = g.arcs().iter().map(|a| (a.tail, a.head)).collect();
    let mut best: Vec<ArcId> = (0..g.m()).map(ArcId).collect();
    let mut explored: u64 = 0;
    let mut subset = Vec::with_capacity(g.m());

    for k in (0..g.m()).rev() {
        let mut level_checks = 0u64;
        let mut found = None;
        for combo in (0..g.m()).combinations(k) {
            if explored == budget {
                return Err(Error::BudgetExceeded {
                    explored,
                    best_known: best.len(),
                });
            }
            explored += 1;
            level_checks += 1;
            subset.clear();
            subset.extend(combo.iter().map(|&a| all[a]));
            if degrees_ok(n, &subset) && feasible_arcs(n, &subset) {
                found = Some(combo);
                break;
            }
        }
        match found {
            Some(combo) => best = combo.into_iter().map(ArcId).collect(),
            None => {
                return Ok(ExactResult {
                    opt_size: best.len(),
                    witness: best,
                    explored,
                    certificate_checks: level_checks,
                })
            }
        }
    }
    Err(Error::Invariant(
        "the empty arc set cannot be feasible".to_string(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bidirected(n: usize, pairs: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, pairs.iter().flat_map(|&(u, v)| [(u, v), (v, u)])).unwrap()
    }

    #[test]
    fn triangle_optimum_is_the_whole_graph() {
        let g = bidirected(3, &[(0, 1), (1, 2), (2, 0)]);
        let r = exact_m2esbss(&g, 1_000).unwrap();
        assert_eq!(r.opt_size, 6);
        assert_eq!(r.certificate_checks, 6);
    }

    #[test]
    fn bidirected_k4_optimum_is_eight() {
        let g = bidirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let r = exact_m2esbss(&g, 10_000).unwrap();
        assert_eq!(r.opt_size, 8);
        assert!(brute_feasible(
            &g,
            &ArcSet::from_ids(12, r.witness.iter().copied())
        ));
        // C(12, 7) subsets of size 7 are all rejected.
        assert_eq!(r.certificate_checks, 792);
    }

    #[test]
    fn budget_is_enforced() {
        let g = bidirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        match exact_m2esbss(&g, 5) {
            Err(Error::BudgetExceeded {
                explored,
                best_known,
            }) => {
                assert_eq!(explored, 5);
                assert!(best_known <= 12);
            }
            other => panic!("expected budget failure, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_input_is_rejected() {
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            exact_m2esbss(&c3, 100),
            Err(Error::NotTwoEdgeStronglyBiconnected(_))
        ));
    }

    #[test]
    fn brute_feasible_basics() {
        let g = bidirected(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(brute_feasible(&g, &ArcSet::full(6)));
        assert!(!brute_feasible(&g, &ArcSet::from_ids(6, (0..5).map(ArcId))));
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!brute_feasible(&c3, &ArcSet::full(3)));
    }

    #[test]
    fn brute_sbcs_small_cases() {
        let g = bidirected(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(brute_sbcs(&g).unwrap().components(), &[vec![0, 1, 2]]);

        let two = Digraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(
            brute_sbcs(&two).unwrap().components(),
            &[vec![0, 1, 2], vec![3, 4, 5]]
        );

        let big = Digraph::new(13, []).unwrap();
        assert!(matches!(brute_sbcs(&big), Err(Error::TooLarge { .. })));
    }
}
