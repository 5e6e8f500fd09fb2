//! Core graph types: finite multigraphs and simple graphs over dense
//! 0-based vertex and edge indices.
//!
//! A [`MultiGraph`] is a vertex count together with a list of unordered
//! edges; parallel edges are allowed, loops are not. Edge identity matters
//! throughout this crate (line-graph vertices *are* edge ids), so edges keep
//! their position in the construction order. A [`SimpleGraph`] stores a
//! symmetric, irreflexive adjacency structure in CSR form with sorted
//! neighbor lists. Both types are immutable once built; use the builders or
//! the `from_edges` constructors.

use std::collections::VecDeque;

use thiserror::Error;

/// Index of a vertex. Dense and 0-based within its graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

/// Index of a multigraph edge. Dense and 0-based; parallel edges get
/// distinct ids.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(u32);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn new(index: usize) -> Self {
        EdgeId(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Debug for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl std::fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Errors raised while assembling a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex index {index} out of range for {vertex_count} vertices")]
    VertexOutOfRange { index: usize, vertex_count: usize },
    #[error("duplicate edge {0}-{1} in simple graph")]
    DuplicateEdge(usize, usize),
}

/// An undirected multigraph: parallel edges allowed, loops rejected.
///
/// Edge endpoints are normalized so the smaller vertex comes first; the edge
/// *order* is the construction order and is preserved, since [`EdgeId`]s are
/// the identity of line-graph vertices downstream. An incidence index is
/// precomputed so traversals are O(|V| + |E|).
#[derive(Clone, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    // CSR incidence: for vertex v, inc[inc_offsets[v]..inc_offsets[v+1]]
    // lists (edge, other endpoint), sorted by edge id.
    inc_offsets: Vec<usize>,
    inc: Vec<(EdgeId, VertexId)>,
}

impl std::fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiGraph(n={}, edges={:?})", self.vertex_count, self.edges)
    }
}

impl MultiGraph {
    /// Build from a plain edge list. Endpoints are normalized; edge ids are
    /// list positions.
    pub fn from_edges(
        vertex_count: usize,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let mut b = MultiGraphBuilder::new(vertex_count);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    fn assemble(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut inc_offsets = vec![0usize; vertex_count + 1];
        for &(u, v) in &edges {
            inc_offsets[u.index() + 1] += 1;
            inc_offsets[v.index() + 1] += 1;
        }
        for i in 0..vertex_count {
            inc_offsets[i + 1] += inc_offsets[i];
        }
        let mut cursor = inc_offsets.clone();
        let mut inc = vec![(EdgeId(0), VertexId(0)); edges.len() * 2];
        for (i, &(u, v)) in edges.iter().enumerate() {
            let e = EdgeId::new(i);
            inc[cursor[u.index()]] = (e, v);
            cursor[u.index()] += 1;
            inc[cursor[v.index()]] = (e, u);
            cursor[v.index()] += 1;
        }
        MultiGraph { vertex_count, edges, inc_offsets, inc }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count).map(VertexId::new)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId::new)
    }

    /// Endpoints of an edge, smaller vertex first.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.index()]
    }

    /// All edges as normalized endpoint pairs, in edge-id order.
    pub fn edge_pairs(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Edges incident to `v` as (edge, other endpoint), in edge-id order.
    pub fn incident_edges(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.inc[self.inc_offsets[v.index()]..self.inc_offsets[v.index() + 1]]
    }

    /// Degree counting multiplicity.
    pub fn degree(&self, v: VertexId) -> usize {
        self.inc_offsets[v.index() + 1] - self.inc_offsets[v.index()]
    }

    /// Multiplicity of the vertex pair `{u, v}`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.incident_edges(u).iter().filter(|&&(_, w)| w == v).count()
    }

    /// The underlying simple graph: same vertices, one edge per adjacent
    /// pair. Each multigraph edge corresponds to the simple edge on its own
    /// endpoints (see [`MultiGraph::endpoints`]).
    pub fn underlying_simple(&self) -> SimpleGraph {
        let pairs: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.0, v.0))
            .collect();
        SimpleGraph::from_pairs_dedup(self.vertex_count, &pairs)
    }

    /// Group edges into parallel classes (maximal sets of edges sharing both
    /// endpoints). Classes are ordered by their lowest edge id; the edges
    /// within a class are in edge-id order.
    pub fn parallel_classes(&self) -> Vec<ParallelClass> {
        // Bucket edge ids by endpoint pair by scanning the incidence lists
        // of the smaller endpoint; incidence lists are already in edge-id
        // order, so classes come out sorted.
        let mut classes: Vec<ParallelClass> = Vec::new();
        let mut class_at: Vec<usize> = vec![usize::MAX; self.vertex_count];
        for u in self.vertices() {
            let mut touched: Vec<usize> = Vec::new();
            for &(e, w) in self.incident_edges(u) {
                if w < u {
                    continue; // handled from the smaller endpoint
                }
                if class_at[w.index()] == usize::MAX {
                    class_at[w.index()] = classes.len();
                    classes.push(ParallelClass { endpoints: (u, w), edges: Vec::new() });
                    touched.push(w.index());
                }
                classes[class_at[w.index()]].edges.push(e);
            }
            for w in touched {
                class_at[w] = usize::MAX;
            }
        }
        // Order classes by lowest edge id rather than by endpoint scan order.
        classes.sort_by_key(|c| c.edges[0]);
        classes
    }

    /// True when the graph is connected. The empty graph (0 vertices) is not
    /// connected; a single vertex is.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        self.components().len() == 1
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// contained vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        components_impl(self.vertex_count, |v, f| {
            for &(_, w) in self.incident_edges(v) {
                f(w);
            }
        })
    }
}

/// A maximal set of parallel edges with its common endpoint pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelClass {
    pub endpoints: (VertexId, VertexId),
    pub edges: Vec<EdgeId>,
}

impl ParallelClass {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Accumulates edges for a [`MultiGraph`], validating as it goes.
pub struct MultiGraphBuilder {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl MultiGraphBuilder {
    pub fn new(vertex_count: usize) -> Self {
        MultiGraphBuilder { vertex_count, edges: Vec::new() }
    }

    /// Add an edge; parallel repeats are fine, loops are not.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let (u, v) = check_pair(u, v, self.vertex_count)?;
        self.edges.push((u, v));
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn build(self) -> MultiGraph {
        MultiGraph::assemble(self.vertex_count, self.edges)
    }
}

fn check_pair(
    u: usize,
    v: usize,
    vertex_count: usize,
) -> Result<(VertexId, VertexId), GraphError> {
    if u >= vertex_count {
        return Err(GraphError::VertexOutOfRange { index: u, vertex_count });
    }
    if v >= vertex_count {
        return Err(GraphError::VertexOutOfRange { index: v, vertex_count });
    }
    if u == v {
        return Err(GraphError::LoopEdge(u));
    }
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    Ok((VertexId::new(a), VertexId::new(b)))
}

/// An undirected simple graph in CSR form. Neighbor lists are sorted, the
/// adjacency relation is symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    offsets: Vec<usize>,
    adj: Vec<VertexId>,
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimpleGraph(n={}, edges={:?})",
            self.vertex_count(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl SimpleGraph {
    /// Build from an edge list, rejecting loops, out-of-range endpoints and
    /// duplicate edges.
    pub fn from_edges(
        vertex_count: usize,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let mut b = SimpleGraphBuilder::new(vertex_count);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        b.build()
    }

    /// Internal constructor for algorithm output: pairs may repeat and are
    /// deduplicated silently. Pairs must already be loop-free and in range.
    pub(crate) fn from_pairs_dedup(vertex_count: usize, pairs: &[(u32, u32)]) -> Self {
        let (offsets, adj) = csr_from_pairs(vertex_count, pairs, true);
        SimpleGraph { offsets, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId::new)
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[self.offsets[v.index()]..self.offsets[v.index() + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v.index() + 1] - self.offsets[v.index()]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// All edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// True when the graph is connected; 0 vertices is not connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return false;
        }
        self.components().len() == 1
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// contained vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        components_impl(self.vertex_count(), |v, f| {
            for &w in self.neighbors(v) {
                f(w);
            }
        })
    }

    /// The subgraph induced on `keep` (which must be sorted and duplicate
    /// free), with vertices relabeled to 0..keep.len() in that order.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> SimpleGraph {
        let mut position: Vec<u32> = vec![u32::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            position[v.index()] = i as u32;
        }
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = position[w.index()];
                if j != u32::MAX && (i as u32) < j {
                    pairs.push((i as u32, j));
                }
            }
        }
        SimpleGraph::from_pairs_dedup(keep.len(), &pairs)
    }
}

/// Accumulates edges for a [`SimpleGraph`], validating as it goes.
pub struct SimpleGraphBuilder {
    vertex_count: usize,
    pairs: Vec<(u32, u32)>,
}

impl SimpleGraphBuilder {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraphBuilder { vertex_count, pairs: Vec::new() }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let (u, v) = check_pair(u, v, self.vertex_count)?;
        self.pairs.push((u.0, v.0));
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn build(self) -> Result<SimpleGraph, GraphError> {
        let n = self.vertex_count;
        let (offsets, adj) = csr_from_pairs(n, &self.pairs, false);
        // Duplicates show up as equal consecutive entries in a sorted list.
        for v in 0..n {
            let row = &adj[offsets[v]..offsets[v + 1]];
            for w in row.windows(2) {
                if w[0] == w[1] {
                    return Err(GraphError::DuplicateEdge(v.min(w[0].index()), v.max(w[0].index())));
                }
            }
        }
        Ok(SimpleGraph { offsets, adj })
    }
}

/// Build sorted CSR adjacency from undirected pairs via two counting-sort
/// passes (no comparison sort), optionally dropping duplicate entries.
fn csr_from_pairs(
    vertex_count: usize,
    pairs: &[(u32, u32)],
    dedup: bool,
) -> (Vec<usize>, Vec<VertexId>) {
    let m2 = pairs.len() * 2;
    // Directed copies sorted by target first, then stably by source: each
    // source's list ends up sorted by target.
    let mut by_target: Vec<(u32, u32)> = Vec::with_capacity(m2);
    let mut count = vec![0usize; vertex_count + 1];
    for &(u, v) in pairs {
        count[v as usize + 1] += 1;
        count[u as usize + 1] += 1;
    }
    for i in 0..vertex_count {
        count[i + 1] += count[i];
    }
    let mut cursor = count.clone();
    by_target.resize(m2, (0, 0));
    for &(u, v) in pairs {
        by_target[cursor[v as usize]] = (u, v);
        cursor[v as usize] += 1;
        by_target[cursor[u as usize]] = (v, u);
        cursor[u as usize] += 1;
    }
    let mut offsets = vec![0usize; vertex_count + 1];
    for &(s, _) in &by_target {
        offsets[s as usize + 1] += 1;
    }
    for i in 0..vertex_count {
        offsets[i + 1] += offsets[i];
    }
    let mut cursor = offsets.clone();
    let mut adj = vec![VertexId(0); m2];
    for &(s, t) in &by_target {
        adj[cursor[s as usize]] = VertexId(t);
        cursor[s as usize] += 1;
    }
    if !dedup {
        return (offsets, adj);
    }
    // Compact equal runs per row.
    let mut out = Vec::with_capacity(m2);
    let mut new_offsets = vec![0usize; vertex_count + 1];
    for v in 0..vertex_count {
        let row = &adj[offsets[v]..offsets[v + 1]];
        let mut prev: Option<VertexId> = None;
        for &w in row {
            if prev != Some(w) {
                out.push(w);
                prev = Some(w);
            }
        }
        new_offsets[v + 1] = out.len();
    }
    (new_offsets, out)
}

fn components_impl(
    vertex_count: usize,
    for_each_neighbor: impl Fn(VertexId, &mut dyn FnMut(VertexId)),
) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; vertex_count];
    let mut comps = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..vertex_count {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(VertexId::new(start));
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for_each_neighbor(v, &mut |w| {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    queue.push_back(w);
                }
            });
        }
        comp.sort();
        comps.push(comp);
    }
    comps
}
