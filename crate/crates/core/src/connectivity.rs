//! Strongly connected components, blocks of undirected graphs, strong
//! bridges and 2-edge-connectivity of digraphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{ArcId, DigraphView, UndirectedView, Vertex};

/// Partition of the vertices into strongly connected components, numbered
/// by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccPartition {
    pub comp_of: Vec<usize>,
    pub components: Vec<Vec<Vertex>>,
}

impl SccPartition {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

/// Blocks (maximal biconnected pieces, bridges as 2-vertex blocks, isolated
/// vertices as singletons) and articulation points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
}

fn out_lists<V: DigraphView>(g: &V) -> Vec<Vec<Vertex>> {
    (0..g.vertex_count())
        .map(|v| g.out_arcs(v).map(|(_, w)| w).collect())
        .collect()
}

/// Tarjan's algorithm, iterative.
pub fn sccs<V: DigraphView>(g: &V) -> SccPartition {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let adj = out_lists(g);
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw: Vec<Vec<Vertex>> = Vec::new();
    let mut next = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(Vertex, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                raw.push(comp);
            }
        }
    }

    raw.sort_unstable_by_key(|c| c[0]);
    let mut comp_of = vec![0; n];
    for (k, comp) in raw.iter().enumerate() {
        for &v in comp {
            comp_of[v] = k;
        }
    }
    SccPartition {
        comp_of,
        components: raw,
    }
}

fn bfs_covers_all<I>(n: usize, mut step: impl FnMut(Vertex) -> I) -> bool
where
    I: Iterator<Item = Vertex>,
{
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for w in step(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

/// True iff every vertex reaches every other; false on the empty graph.
pub fn is_strongly_connected<V: DigraphView>(g: &V) -> bool {
    let n = g.vertex_count();
    n >= 1
        && bfs_covers_all(n, |v| g.out_arcs(v).map(|(_, w)| w))
        && bfs_covers_all(n, |v| g.in_arcs(v).map(|(_, w)| w))
}

/// Whether `to` is reachable from `from` without using arc `skip`.
fn reaches_avoiding<V: DigraphView>(g: &V, from: Vertex, to: Vertex, skip: ArcId) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(v) = stack.pop() {
        for (a, w) in g.out_arcs(v) {
            if a == skip || seen[w] {
                continue;
            }
            if w == to {
                return true;
            }
            seen[w] = true;
            stack.push(w);
        }
    }
    false
}

/// Whether deleting `arc` from the strongly connected `g` leaves it strongly
/// connected. Any route through `(u, v)` can be replaced by a `u -> v` path
/// avoiding it, so one reachability query decides this.
pub(crate) fn survives_arc_removal<V: DigraphView>(g: &V, arc: ArcId) -> bool {
    let a = g.endpoints(arc);
    reaches_avoiding(g, a.tail, a.head, arc)
}

/// Arcs whose deletion destroys strong connectivity, ascending by id.
pub fn strong_bridges<V: DigraphView>(g: &V) -> Result<Vec<ArcId>> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    Ok(g.arc_ids()
        .filter(|&a| !survives_arc_removal(g, a))
        .collect())
}

/// Strongly connected with no strong bridge. Requires at least two
/// vertices, so that every 2-edge-connected digraph has in- and out-degree
/// at least 2 everywhere.
pub fn is_two_edge_connected<V: DigraphView>(g: &V) -> bool {
    g.vertex_count() >= 2
        && is_strongly_connected(g)
        && g.arc_ids().all(|a| survives_arc_removal(g, a))
}

/// Hopcroft–Tarjan block decomposition, iterative.
pub fn blocks(u: &UndirectedView) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = u.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut found: Vec<Vec<Vertex>> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if u.neighbors(root).is_empty() {
            found.push(vec![root]);
            continue;
        }
        // (vertex, parent, next neighbor position)
        let mut call: Vec<(Vertex, Vertex, usize)> = vec![(root, UNSEEN, 0)];
        while let Some(&mut (v, parent, ref mut pos)) = call.last_mut() {
            if let Some(&w) = u.neighbors(v).get(*pos) {
                *pos += 1;
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    call.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            call.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                found.push(block);
            }
        }
    }

    found.sort_unstable();
    let mut hits = vec![0usize; n];
    for block in &found {
        for &v in block {
            hits[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| hits[v] >= 2).collect();
    BlockDecomposition {
        blocks: found,
        cut_vertices,
    }
}

/// Connected, at least three vertices, no articulation point.
pub fn is_biconnected(u: &UndirectedView) -> bool {
    if u.n() < 3 {
        return false;
    }
    let dec = blocks(u);
    dec.blocks.len() == 1 && dec.blocks[0].len() == u.n()
}
