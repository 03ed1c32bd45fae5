//! Minimal 2-edge-connected spanning subgraphs and the approximation for
//! minimum 2-edge strongly biconnected spanning subgraphs.
//!
//! The approximation runs in three phases over a 2-edge strongly
//! biconnected input `G = (V, E)`:
//!
//! 1. Extract a minimal 2-edge-connected spanning subgraph `U`. If `(V, U)`
//!    is already 2-edge strongly biconnected it is returned as is.
//! 2. While the underlying graph of the current subgraph is not biconnected,
//!    add an arc of `E` whose endpoints lie in different strongly
//!    biconnected components. Each such arc merges components, so at most
//!    `n - 1` arcs are added.
//! 3. Compute the b-bridges of the result once. For every b-bridge `t`,
//!    repeat step 2 on the current subgraph with `t` deleted.
//!
//! Every scan goes in ascending arc id order, which makes runs
//! deterministic. The output has at most `i(n - 1) + 5n` arcs where `i` is
//! the number of b-bridges found in phase 3, and every feasible solution has
//! at least `2n` arcs.

use serde::{Deserialize, Serialize};

use crate::connectivity::{is_biconnected, is_strongly_connected, is_two_edge_connected};
use crate::error::{Error, Result};
use crate::graph::{underlying, ArcId, ArcSet, Digraph, DigraphView, Subgraph, Without};
use crate::sbc::{b_bridges, is_two_edge_strongly_biconnected, sbcs};

/// Arcs added while repairing one b-bridge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeRepair {
    pub bridge: ArcId,
    pub added: Vec<ArcId>,
}

/// Complete record of one approximation run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxTrace {
    pub n: usize,
    pub m: usize,
    /// Minimal 2-edge-connected spanning subgraph from phase 1.
    pub u: Vec<ArcId>,
    /// `U` already satisfied the target property.
    pub early_exit: bool,
    pub phase1_added: Vec<ArcId>,
    pub bbridges_found: Vec<ArcId>,
    pub per_bridge_added: Vec<BridgeRepair>,
    /// Final arc set, ascending.
    pub e2e: Vec<ArcId>,
    /// `i(n - 1) + 5n`.
    pub bound: usize,
    /// `2n`.
    pub lower_bound: usize,
}

impl ApproxTrace {
    /// Number of b-bridges found after phase 2.
    pub fn i(&self) -> usize {
        self.bbridges_found.len()
    }

    pub fn size(&self) -> usize {
        self.e2e.len()
    }
}

/// Size statistics of a trace against the proven bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub size: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    /// `(5 + i) / 2`, the worst-case ratio to an optimum.
    pub ratio_upper: f64,
    /// `lower_bound <= size <= min(m, upper_bound)`.
    pub sandwich_holds: bool,
}

pub fn upper_bound(n: usize, i: usize) -> usize {
    i * n.saturating_sub(1) + 5 * n
}

pub fn lower_bound(n: usize) -> usize {
    2 * n
}

pub fn bound_report(trace: &ApproxTrace) -> BoundReport {
    let size = trace.size();
    let i = trace.i();
    let lower = lower_bound(trace.n);
    let upper = upper_bound(trace.n, i);
    BoundReport {
        size,
        lower_bound: lower,
        upper_bound: upper,
        ratio_upper: (5 + i) as f64 / 2.0,
        sandwich_holds: lower <= size && size <= trace.m.min(upper),
    }
}

/// Greedy deletion scan: drop every arc, in ascending id order, whose
/// removal keeps the subgraph 2-edge-connected. The result is minimal.
pub fn minimal_two_ecss(g: &Digraph) -> Result<ArcSet> {
    if !is_two_edge_connected(g) {
        return Err(Error::NotTwoEdgeConnected);
    }
    let n = g.n();
    let mut keep = ArcSet::full(g.m());
    let mut out_deg: Vec<usize> = (0..n).map(|v| g.out_arc_ids(v).len()).collect();
    let mut in_deg: Vec<usize> = (0..n).map(|v| g.in_arc_ids(v).len()).collect();

    for k in 0..g.m() {
        let id = ArcId(k);
        let arc = g.arc(id);
        // 2-edge-connectivity needs in- and out-degree at least 2.
        if out_deg[arc.tail] <= 2 || in_deg[arc.head] <= 2 {
            continue;
        }
        keep.remove(id);
        if is_two_edge_connected(&Subgraph::new(g, &keep)) {
            out_deg[arc.tail] -= 1;
            in_deg[arc.head] -= 1;
        } else {
            keep.insert(id);
        }
    }
    Ok(keep)
}

/// Adds arcs of `g_full` to `current` until the underlying graph of
/// `current` minus `forbidden` is biconnected. Each round takes the
/// lowest-id arc outside `current` whose endpoints share no strongly
/// biconnected component of that subgraph. Returns the additions in order.
pub fn augment_to_biconnected(
    g_full: &Digraph,
    current: &mut ArcSet,
    forbidden: Option<ArcId>,
) -> Result<Vec<ArcId>> {
    let removed: Vec<ArcId> = forbidden.into_iter().collect();
    {
        let sub = Subgraph::new(g_full, current);
        if !is_strongly_connected(&Without::new(&sub, &removed)) {
            return Err(Error::NotStronglyConnected);
        }
    }

    let mut added = Vec::new();
    loop {
        let sub = Subgraph::new(g_full, current);
        let view = Without::new(&sub, &removed);
        if is_biconnected(&underlying(&view)) {
            return Ok(added);
        }
        if added.len() >= g_full.n() {
            return Err(Error::Invariant(
                "augmentation exceeded n additions".to_string(),
            ));
        }
        let dec = sbcs(&view);
        let pick = g_full.arc_ids().find(|&a| {
            let arc = g_full.arc(a);
            !current.contains(a) && Some(a) != forbidden && !dec.same_component(arc.tail, arc.head)
        });
        let Some(a) = pick else {
            return Err(Error::AugmentationStuck);
        };
        current.insert(a);
        added.push(a);
    }
}

/// The full approximation. The input must be 2-edge strongly biconnected.
pub fn approx_m2esbss(g: &Digraph) -> Result<ApproxTrace> {
    let check = is_two_edge_strongly_biconnected(g);
    if let Some(witness) = check.witness {
        return Err(Error::NotTwoEdgeStronglyBiconnected(witness));
    }
    let n = g.n();

    let u_set = minimal_two_ecss(g)?;
    let u = u_set.to_vec();
    let mut trace = ApproxTrace {
        n,
        m: g.m(),
        u: u.clone(),
        early_exit: false,
        phase1_added: Vec::new(),
        bbridges_found: Vec::new(),
        per_bridge_added: Vec::new(),
        e2e: u,
        bound: upper_bound(n, 0),
        lower_bound: lower_bound(n),
    };
    if is_two_edge_strongly_biconnected(&Subgraph::new(g, &u_set)).two_edge_sbc {
        trace.early_exit = true;
        return Ok(trace);
    }

    let mut current = u_set;
    trace.phase1_added = augment_to_biconnected(g, &mut current, None)?;

    trace.bbridges_found = b_bridges(&Subgraph::new(g, &current))?;
    for &bridge in &trace.bbridges_found {
        let added = augment_to_biconnected(g, &mut current, Some(bridge))?;
        trace.per_bridge_added.push(BridgeRepair { bridge, added });
    }

    trace.e2e = current.to_vec();
    trace.bound = upper_bound(n, trace.i());

    let final_check = is_two_edge_strongly_biconnected(&Subgraph::new(g, &current));
    if let Some(w) = final_check.witness {
        return Err(Error::Invariant(format!(
            "output is not 2-edge strongly biconnected: {w}"
        )));
    }
    Ok(trace)
}
