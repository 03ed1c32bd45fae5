//! Digraph data model, borrowed subgraph views, and the edge-list / DOT
//! formats.
//!
//! Vertices are dense integers `0..n`. Arcs are identified by their position
//! in the arc list ([`ArcId`]); views such as [`Subgraph`] and [`Without`]
//! keep the ids of the graph they borrow from, so an arc found in a subgraph
//! can be reported against the original input.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, ParseErrorKind, Result};

pub type Vertex = usize;

/// Stable index of an arc in its digraph's arc list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcId(pub usize);

impl ArcId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arc {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        Arc { tail, head }
    }

    pub fn reversed(self) -> Self {
        Arc::new(self.head, self.tail)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tail, self.head)
    }
}

/// Immutable simple digraph: no self-loops, at most one arc per ordered pair.
#[derive(Debug, Clone)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
    out_adj: Vec<Vec<ArcId>>,
    in_adj: Vec<Vec<ArcId>>,
    index: HashMap<(Vertex, Vertex), ArcId>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arcs == other.arcs
    }
}

impl Eq for Digraph {}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Digraph {
            n,
            arcs: Vec::new(),
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            index: HashMap::new(),
        };
        for (tail, head) in arcs {
            g.push_arc(tail, head)?;
        }
        Ok(g)
    }

    fn push_arc(&mut self, tail: Vertex, head: Vertex) -> Result<ArcId> {
        if tail >= self.n || head >= self.n {
            return Err(Error::VertexOutOfRange {
                id: tail.max(head),
                n: self.n,
            });
        }
        if tail == head {
            return Err(Error::InvalidArc {
                tail,
                head,
                reason: "self-loop",
            });
        }
        let id = ArcId(self.arcs.len());
        if self.index.insert((tail, head), id).is_some() {
            return Err(Error::InvalidArc {
                tail,
                head,
                reason: "duplicate arc",
            });
        }
        self.arcs.push(Arc::new(tail, head));
        self.out_adj[tail].push(id);
        self.in_adj[head].push(id);
        Ok(id)
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Arc count.
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: ArcId) -> Arc {
        self.arcs[id.0]
    }

    pub fn find(&self, tail: Vertex, head: Vertex) -> Option<ArcId> {
        self.index.get(&(tail, head)).copied()
    }

    pub fn out_arc_ids(&self, v: Vertex) -> &[ArcId] {
        &self.out_adj[v]
    }

    pub fn in_arc_ids(&self, v: Vertex) -> &[ArcId] {
        &self.in_adj[v]
    }

    /// A copy of the graph with arc `id` deleted. Remaining arcs keep their
    /// relative order, so ids above `id` shift down by one.
    pub fn remove_arc(&self, id: ArcId) -> Result<Digraph> {
        if id.0 >= self.m() {
            return Err(Error::ArcOutOfRange { id, m: self.m() });
        }
        Digraph::new(
            self.n,
            self.arcs
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != id.0)
                .map(|(_, a)| (a.tail, a.head)),
        )
    }

    /// Subgraph induced by `vertices`, relabeled densely in ascending vertex
    /// order. The second value maps new ids back to original ones.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<(Digraph, Vec<Vertex>)> {
        let mut keep: Vec<Vertex> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { id: bad, n: self.n });
        }
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            relabel[old] = new;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|a| relabel[a.tail] != usize::MAX && relabel[a.head] != usize::MAX)
            .map(|a| (relabel[a.tail], relabel[a.head]));
        Ok((Digraph::new(keep.len(), arcs)?, keep))
    }

    /// Serializes to the edge-list format with an explicit `n` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}", self.n).unwrap();
        for a in &self.arcs {
            writeln!(out, "{} {}", a.tail, a.head).unwrap();
        }
        out
    }
}

/// Set of arc ids drawn from `0..capacity`, iterated in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcSet {
    mask: Vec<bool>,
    len: usize,
}

impl ArcSet {
    pub fn empty(capacity: usize) -> Self {
        ArcSet {
            mask: vec![false; capacity],
            len: 0,
        }
    }

    pub fn full(capacity: usize) -> Self {
        ArcSet {
            mask: vec![true; capacity],
            len: capacity,
        }
    }

    pub fn from_ids<I: IntoIterator<Item = ArcId>>(capacity: usize, ids: I) -> Self {
        let mut set = ArcSet::empty(capacity);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, id: ArcId) -> bool {
        self.mask.get(id.0).copied().unwrap_or(false)
    }

    /// Returns true if the id was not yet present. Panics if `id` is beyond
    /// the capacity.
    pub fn insert(&mut self, id: ArcId) -> bool {
        let slot = &mut self.mask[id.0];
        let added = !*slot;
        *slot = true;
        self.len += added as usize;
        added
    }

    pub fn remove(&mut self, id: ArcId) -> bool {
        match self.mask.get_mut(id.0) {
            Some(slot) if *slot => {
                *slot = false;
                self.len -= 1;
                true
            }
            _ => false,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ArcId> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b)
            .map(|(k, _)| ArcId(k))
    }

    pub fn to_vec(&self) -> Vec<ArcId> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.iter().all(|a| other.contains(a))
    }
}

/// Read-only access to a digraph, possibly a restriction of a larger one.
///
/// Arc ids are those of the underlying [`Digraph`]; `arc_space` bounds them.
pub trait DigraphView {
    fn vertex_count(&self) -> usize;
    fn arc_space(&self) -> usize;
    fn contains_arc(&self, id: ArcId) -> bool;
    /// Endpoints of `id`; only meaningful if `contains_arc(id)`.
    fn endpoints(&self, id: ArcId) -> Arc;
    fn find_arc(&self, tail: Vertex, head: Vertex) -> Option<ArcId>;
    fn arc_ids(&self) -> impl Iterator<Item = ArcId> + '_;
    fn out_arcs(&self, v: Vertex) -> impl Iterator<Item = (ArcId, Vertex)> + '_;
    fn in_arcs(&self, v: Vertex) -> impl Iterator<Item = (ArcId, Vertex)> + '_;

    fn arc_count(&self) -> usize {
        self.arc_ids().count()
    }

    /// Materializes the view, keeping arcs in ascending id order. Returns the
    /// new graph and, per new arc, its id in the source.
    fn to_digraph(&self) -> (Digraph, Vec<ArcId>) {
        let ids: Vec<ArcId> = self.arc_ids().collect();
        let g = Digraph::new(
            self.vertex_count(),
            ids.iter().map(|&a| {
                let arc = self.endpoints(a);
                (arc.tail, arc.head)
            }),
        )
        .expect("a view of a simple digraph is simple");
        (g, ids)
    }
}

impl DigraphView for Digraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn arc_space(&self) -> usize {
        self.arcs.len()
    }

    fn contains_arc(&self, id: ArcId) -> bool {
        id.0 < self.arcs.len()
    }

    fn endpoints(&self, id: ArcId) -> Arc {
        self.arcs[id.0]
    }

    fn find_arc(&self, tail: Vertex, head: Vertex) -> Option<ArcId> {
        self.find(tail, head)
    }

    fn arc_ids(&self) -> impl Iterator<Item = ArcId> + '_ {
        (0..self.arcs.len()).map(ArcId)
    }

    fn out_arcs(&self, v: Vertex) -> impl Iterator<Item = (ArcId, Vertex)> + '_ {
        self.out_adj[v]
            .iter()
            .map(move |&a| (a, self.arcs[a.0].head))
    }

    fn in_arcs(&self, v: Vertex) -> impl Iterator<Item = (ArcId, Vertex)> + '_ {
        self.in_adj[v]
            .iter()
            .map(move |&a| (a, self.arcs[a.0].tail))
    }

    fn arc_count(&self) -> usize {
        self.arcs.len()
    }
}

/// Spanning subgraph `(V, keep)` of a borrowed digraph.
#[derive(Debug, Clone, Copy)]
pub struct Subgraph<'g> {
    graph: &'g Digraph,
    keep: &'g ArcSet,
}

impl<'g> Subgraph<'g> {
    pub fn new(graph: &'g Digraph, keep: &'g ArcSet) -> Self {
        assert_eq!(
            keep.capacity(),
            graph.m(),
            "arc set capacity must match the graph's arc count"
        );
        Subgraph { graph, keep }
    }

    pub fn graph(&self) -> &'g Digraph {
        self.graph
    }

    pub fn keep(&self) -> &'g ArcSet {
        self.keep
    }
}

impl DigraphView for Subgraph<'_> {
    fn vertex_count(&self) -> usize {
        self.graph.n
    }

    fn arc_space(&self) -> usize {
        self.graph.m()
    }

    fn contains_arc(&self, id: ArcId) -> bool {
        self.keep.contains(id)
    }

    fn endpoints(&self, id: ArcId) -> Arc {
        self.graph.arc(id)
    }

    fn find_arc(&self, tail: Vertex, head: Vertex) -> Option<ArcId> {
        self.graph
            .find(tail, head)
            .filter(|&a| self.keep.contains(a))
    }

    fn arc_ids(&self) -> impl Iterator<Item = ArcId> + '_ {
        self.keep.iter()
    }

    fn out_arcs(&self, v: Vertex) -> impl Iterator<Item = (ArcId, Vertex)> + '_ {
        self.graph
            .out_arcs(v)
            .filter(|&(a, _)| self.keep.contains(a))
    }

    fn in_arcs(&self, v: Vertex) -> impl Iterator<Item = (ArcId, Vertex)> + '_ {
        self.graph
            .in_arcs(v)
            .filter(|&(a, _)| self.keep.contains(a))
    }

    fn arc_count(&self) -> usize {
        self.keep.len()
    }
}

/// A view with a few arcs deleted.
#[derive(Debug, Clone, Copy)]
pub struct Without<'a, V> {
    inner: &'a V,
    removed: &'a [ArcId],
}

impl<'a, V: DigraphView> Without<'a, V> {
    pub fn new(inner: &'a V, removed: &'a [ArcId]) -> Self {
        Without { inner, removed }
    }

    #[inline]
    fn is_removed(&self, id: ArcId) -> bool {
        self.removed.contains(&id)
    }
}

impl<V: DigraphView> DigraphView for Without<'_, V> {
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn arc_space(&self) -> usize {
        self.inner.arc_space()
    }

    fn contains_arc(&self, id: ArcId) -> bool {
        !self.is_removed(id) && self.inner.contains_arc(id)
    }

    fn endpoints(&self, id: ArcId) -> Arc {
        self.inner.endpoints(id)
    }

    fn find_arc(&self, tail: Vertex, head: Vertex) -> Option<ArcId> {
        self.inner
            .find_arc(tail, head)
            .filter(|&a| !self.is_removed(a))
    }

    fn arc_ids(&self) -> impl Iterator<Item = ArcId> + '_ {
        self.inner.arc_ids().filter(|&a| !self.is_removed(a))
    }

    fn out_arcs(&self, v: Vertex) -> impl Iterator<Item = (ArcId, Vertex)> + '_ {
        self.inner.out_arcs(v).filter(|&(a, _)| !self.is_removed(a))
    }

    fn in_arcs(&self, v: Vertex) -> impl Iterator<Item = (ArcId, Vertex)> + '_ {
        self.inner.in_arcs(v).filter(|&(a, _)| !self.is_removed(a))
    }
}

/// Simple undirected graph; each unordered pair is stored once as `(u, v)`
/// with `u < v`, edges sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedView {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl UndirectedView {
    /// Builds the view from arbitrary pairs; orientation and repeats are
    /// ignored. Panics on self-loops or out-of-range endpoints.
    pub fn new<I>(n: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges: Vec<(Vertex, Vertex)> = pairs
            .into_iter()
            .map(|(u, v)| {
                assert!(u != v && u < n && v < n, "bad undirected edge ({u}, {v})");
                (u.min(v), u.max(v))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        UndirectedView { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn is_subgraph_of(&self, other: &UndirectedView) -> bool {
        self.n == other.n
            && self
                .edges
                .iter()
                .all(|e| other.edges.binary_search(e).is_ok())
    }
}

/// Forgets arc directions; antiparallel arcs collapse to one edge.
pub fn underlying<V: DigraphView>(g: &V) -> UndirectedView {
    UndirectedView::new(
        g.vertex_count(),
        g.arc_ids().map(|a| {
            let arc = g.endpoints(a);
            (arc.tail, arc.head)
        }),
    )
}

/// Parses the edge-list format: optional first line `n <N>`, then one
/// `<u> <v>` arc per line; `#` comments run to end of line.
pub fn parse_edge_list(input: &[u8]) -> std::result::Result<Digraph, ParseError> {
    let text = std::str::from_utf8(input).map_err(|e| ParseError {
        line: 1 + input[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count(),
        kind: ParseErrorKind::InvalidUtf8,
    })?;

    let mut declared: Option<usize> = None;
    let mut seen_content = false;
    let mut arcs: Vec<(Vertex, Vertex, usize)> = Vec::new();
    let mut pairs = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |kind| ParseError { line, kind };
        let malformed = || err(ParseErrorKind::Malformed(content.to_string()));
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(malformed());
        }
        if tokens[0] == "n" {
            if seen_content {
                return Err(malformed());
            }
            seen_content = true;
            declared = Some(tokens[1].parse().map_err(|_| malformed())?);
            continue;
        }
        seen_content = true;
        let u: usize = tokens[0].parse().map_err(|_| malformed())?;
        let v: usize = tokens[1].parse().map_err(|_| malformed())?;
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(err(ParseErrorKind::VertexOutOfRange { id: u.max(v), n }));
            }
        }
        if u == v {
            return Err(err(ParseErrorKind::SelfLoop(u)));
        }
        if !pairs.insert((u, v)) {
            return Err(err(ParseErrorKind::DuplicateArc(u, v)));
        }
        arcs.push((u, v, line));
    }

    let n = declared.unwrap_or_else(|| {
        arcs.iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0)
    });
    Ok(Digraph::new(n, arcs.into_iter().map(|(u, v, _)| (u, v)))
        .expect("arcs were validated while parsing"))
}

/// DOT rendering; highlighted arcs are drawn red and bold.
pub fn to_dot(g: &Digraph, highlight: &ArcSet) -> String {
    to_dot_labeled(g, highlight, 0)
}

/// Like [`to_dot`] with every vertex id shifted by `label_offset`.
pub fn to_dot_labeled(g: &Digraph, highlight: &ArcSet, label_offset: usize) -> String {
    let mut out = String::from("digraph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        writeln!(out, "  {};", v + label_offset).unwrap();
    }
    for (k, a) in g.arcs().iter().enumerate() {
        let (t, h) = (a.tail + label_offset, a.head + label_offset);
        if highlight.contains(ArcId(k)) {
            writeln!(out, "  {t} -> {h} [color=red, penwidth=2.0];").unwrap();
        } else {
            writeln!(out, "  {t} -> {h};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
