//! Multigraph isomorphism: a desk-scale backtracking search, plus a
//! linear-time routine that extends a known edge bijection to a full
//! isomorphism (used when a correspondence between edge sets is already in
//! hand and only the vertex matching is missing).

use std::collections::BTreeMap;

use crate::graph::{EdgeId, MultiGraph, VertexId};

/// A pair of consistent bijections witnessing `a ≅ b`: `vertex_bijection[v]` is
/// the image of vertex `v`, `edge_bijection[e]` the image of edge `e`, and every
/// edge's endpoints map onto its image's endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraphIsomorphism {
    pub vertex_bijection: Vec<VertexId>,
    pub edge_bijection: Vec<EdgeId>,
}

impl MultiGraphIsomorphism {
    /// Independent incidence-preservation check: both maps are bijections
    /// and endpoints are transported elementwise as sets.
    pub fn is_valid(&self, a: &MultiGraph, b: &MultiGraph) -> bool {
        if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        if self.vertex_bijection.len() != a.vertex_count() || self.edge_bijection.len() != a.edge_count() {
            return false;
        }
        if !is_permutation(self.vertex_bijection.iter().map(|v| v.index()), a.vertex_count()) {
            return false;
        }
        if !is_permutation(self.edge_bijection.iter().map(|e| e.index()), a.edge_count()) {
            return false;
        }
        for e in a.edge_ids() {
            let (u, v) = a.endpoints(e);
            let (x, y) = b.endpoints(self.edge_bijection[e.index()]);
            let (fu, fv) = (self.vertex_bijection[u.index()], self.vertex_bijection[v.index()]);
            if (fu, fv) != (x, y) && (fv, fu) != (x, y) {
                return false;
            }
        }
        true
    }
}

fn is_permutation(values: impl Iterator<Item = usize>, len: usize) -> bool {
    let mut seen = vec![false; len];
    let mut count = 0;
    for v in values {
        if v >= len || seen[v] {
            return false;
        }
        seen[v] = true;
        count += 1;
    }
    count == len
}

/// Per-vertex invariant used for pruning and candidate bucketing: the sorted
/// multiset of parallel-class sizes at the vertex.
fn vertex_signature(g: &MultiGraph, v: VertexId) -> Vec<u32> {
    let mut mults: BTreeMap<VertexId, u32> = BTreeMap::new();
    for &(_, w) in g.incident_edges(v) {
        *mults.entry(w).or_insert(0) += 1;
    }
    let mut sig: Vec<u32> = mults.values().copied().collect();
    sig.sort_unstable();
    sig
}

/// Decide whether two multigraphs are isomorphic and return a witness.
///
/// Backtracking over vertex bijections with signature pruning; intended for
/// small instances (roughly ten vertices or so), as used by the enumeration
/// oracles and unit tests. Deterministic: the witness depends only on the
/// inputs.
pub fn multigraph_isomorphic(a: &MultiGraph, b: &MultiGraph) -> Option<MultiGraphIsomorphism> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let n = a.vertex_count();
    if n == 0 {
        return Some(MultiGraphIsomorphism { vertex_bijection: vec![], edge_bijection: vec![] });
    }

    let sig_a: Vec<Vec<u32>> = (0..n).map(|v| vertex_signature(a, VertexId::new(v))).collect();
    let sig_b: Vec<Vec<u32>> = (0..n).map(|v| vertex_signature(b, VertexId::new(v))).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }

    // Candidate images per a-vertex, by signature equality.
    let candidates: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| sig_a[v] == sig_b[w])
                .map(|w| w as u32)
                .collect()
        })
        .collect();

    // Assign the most constrained vertices first, preferring ones adjacent
    // to already-ordered vertices so multiplicity checks bite early.
    let order = assignment_order(a, &candidates);

    let mut image: Vec<u32> = vec![u32::MAX; n];
    let mut used: Vec<bool> = vec![false; n];
    if !assign(a, b, &order, 0, &mut image, &mut used) {
        return None;
    }

    let vertex_bijection: Vec<VertexId> = image.iter().map(|&w| VertexId::new(w as usize)).collect();
    let edge_map = edge_map_from_vertex_bijection(a, b, &vertex_bijection)?;
    let iso = MultiGraphIsomorphism { vertex_bijection, edge_bijection: edge_map };
    debug_assert!(iso.is_valid(a, b));
    Some(iso)
}

fn assignment_order(a: &MultiGraph, candidates: &[Vec<u32>]) -> Vec<u32> {
    let n = candidates.len();
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None; // (not adjacent, cand count, v)
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let adjacent_placed = a
                .incident_edges(VertexId::new(v))
                .iter()
                .any(|&(_, w)| placed[w.index()]);
            let key = (usize::from(!adjacent_placed), candidates[v].len(), v);
            if best.map_or(true, |b| key < b) {
                best = Some(key);
            }
        }
        let v = best.unwrap().2;
        placed[v] = true;
        order.push(v as u32);
    }
    order
}

fn assign(
    a: &MultiGraph,
    b: &MultiGraph,
    order: &[u32],
    depth: usize,
    image: &mut Vec<u32>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth] as usize;
    let n = a.vertex_count();
    'candidates: for w in 0..n {
        if used[w] {
            continue;
        }
        // Multiplicities to every already-assigned vertex must agree.
        for u in order[..depth].iter().map(|&u| u as usize) {
            let want = a.multiplicity(VertexId::new(v), VertexId::new(u));
            let have = b.multiplicity(VertexId::new(w), VertexId::new(image[u] as usize));
            if want != have {
                continue 'candidates;
            }
        }
        if a.degree(VertexId::new(v)) != b.degree(VertexId::new(w)) {
            continue;
        }
        image[v] = w as u32;
        used[w] = true;
        if assign(a, b, order, depth + 1, image, used) {
            return true;
        }
        image[v] = u32::MAX;
        used[w] = false;
    }
    false
}

/// Given a vertex bijection that preserves pair multiplicities, pair up the
/// edges class by class (edge ids in order on both sides).
fn edge_map_from_vertex_bijection(
    a: &MultiGraph,
    b: &MultiGraph,
    vertex_bijection: &[VertexId],
) -> Option<Vec<EdgeId>> {
    let mut b_classes: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
    for e in b.edge_ids() {
        b_classes.entry(b.endpoints(e)).or_default().push(e);
    }
    let mut cursor: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    let mut edge_map = Vec::with_capacity(a.edge_count());
    for e in a.edge_ids() {
        let (u, v) = a.endpoints(e);
        let (x, y) = (vertex_bijection[u.index()], vertex_bijection[v.index()]);
        let key = if x < y { (x, y) } else { (y, x) };
        let class = b_classes.get(&key)?;
        let at = cursor.entry(key).or_insert(0);
        if *at >= class.len() {
            return None;
        }
        edge_map.push(class[*at]);
        *at += 1;
    }
    Some(edge_map)
}

/// Extend a known edge bijection `a → b` to a full isomorphism, if one
/// inducing it exists. Linear in the graph size.
///
/// The vertex matching is forced by endpoint propagation: a vertex incident
/// to two non-parallel edges must map to the unique common endpoint of their
/// images, and each further edge determines its far endpoint. Graphs whose
/// edges are all mutually parallel (a single bundle) admit two matchings;
/// the lexicographically least is returned.
pub fn isomorphism_from_edge_map(
    a: &MultiGraph,
    b: &MultiGraph,
    edge_map: &[EdgeId],
) -> Option<MultiGraphIsomorphism> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    if edge_map.len() != a.edge_count()
        || !is_permutation(edge_map.iter().map(|e| e.index()), a.edge_count())
    {
        return None;
    }
    let n = a.vertex_count();
    let mut image: Vec<u32> = vec![u32::MAX; n];

    // Seed every vertex that has two incident edges with distinct far
    // endpoints: its image is the shared endpoint of the two image edges.
    for v in 0..n {
        let inc = a.incident_edges(VertexId::new(v));
        let Some(&(e0, w0)) = inc.first() else { continue };
        let Some(&(e1, _)) = inc.iter().find(|&&(_, w)| w != w0) else { continue };
        let (x0, y0) = b.endpoints(edge_map[e0.index()]);
        let (x1, y1) = b.endpoints(edge_map[e1.index()]);
        let shared = if x0 == x1 || x0 == y1 {
            if y0 == x1 || y0 == y1 {
                return None; // image edges parallel, sources were not
            }
            x0
        } else if y0 == x1 || y0 == y1 {
            y0
        } else {
            return None;
        };
        image[v] = shared.index() as u32;
    }

    // Propagate across edges until stable; one sweep per remaining unknown
    // suffices because each edge has at most one undetermined endpoint once
    // the seeds are in.
    let mut changed = true;
    while changed {
        changed = false;
        for e in a.edge_ids() {
            let (u, v) = a.endpoints(e);
            let (x, y) = b.endpoints(edge_map[e.index()]);
            let (iu, iv) = (image[u.index()], image[v.index()]);
            if iu != u32::MAX && iv == u32::MAX {
                let other = if iu == x.index() as u32 { y } else { x };
                image[v.index()] = other.index() as u32;
                changed = true;
            } else if iv != u32::MAX && iu == u32::MAX {
                let other = if iv == x.index() as u32 { y } else { x };
                image[u.index()] = other.index() as u32;
                changed = true;
            }
        }
    }

    // Anything still unknown sits in a component whose edges form a single
    // parallel bundle (or is an isolated vertex). Bundle endpoints are
    // forced up to swapping the pair, so place them first (least available
    // image breaks the tie); isolated vertices then take what remains.
    let mut taken = vec![false; n];
    for &w in image.iter().filter(|&&w| w != u32::MAX) {
        if taken[w as usize] {
            return None;
        }
        taken[w as usize] = true;
    }
    for v in 0..n {
        if image[v] != u32::MAX || a.degree(VertexId::new(v)) == 0 {
            continue;
        }
        let &(e, _) = a.incident_edges(VertexId::new(v)).first().unwrap();
        let (x, y) = b.endpoints(edge_map[e.index()]);
        let pick = [x, y]
            .into_iter()
            .filter(|p| !taken[p.index()])
            .min_by_key(|p| p.index())?;
        image[v] = pick.index() as u32;
        taken[pick.index()] = true;
        // The far end of the bundle is now forced.
        let (u, vv) = a.endpoints(e);
        let far = if u.index() == v { vv } else { u };
        if image[far.index()] == u32::MAX {
            let other = if pick == x { y } else { x };
            if taken[other.index()] {
                return None;
            }
            image[far.index()] = other.index() as u32;
            taken[other.index()] = true;
        }
    }
    for v in 0..n {
        if image[v] != u32::MAX {
            continue;
        }
        let pick = (0..n).find(|&w| !taken[w])?;
        image[v] = pick as u32;
        taken[pick] = true;
    }

    let iso = MultiGraphIsomorphism {
        vertex_bijection: image.iter().map(|&w| VertexId::new(w as usize)).collect(),
        edge_bijection: edge_map.to_vec(),
    };
    if iso.is_valid(a, b) {
        Some(iso)
    } else {
        None
    }
}
