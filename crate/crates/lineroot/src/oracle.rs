//! Brute-force oracles and generators for the test suites: exhaustive
//! enumeration of small graphs up to isomorphism, seeded random multigraph
//! generation, exhaustive root search, and the iterated-rewriting collapse
//! that independently cross-checks the pipeline's canonical ≥1-root.
//!
//! Everything here trades speed for trustworthiness; the enumerators carry
//! hard budgets and refuse larger instances.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::canon::canonical_key;
use crate::graph::{EdgeId, MultiGraph, SimpleGraph, VertexId};
use crate::iso::multigraph_isomorphic;
use crate::linegraph::{geq1_line_graph, l1_line_graph};
use crate::reconstruct::{delta0_witness, Delta0Witness, InvalidInput, LineMode, ReconstructError};

/// Largest vertex count the exhaustive enumerators accept. Seven is enough
/// for every tree root of a six-vertex line graph while staying well inside
/// a second of work.
pub const MAX_ENUM_VERTICES: usize = 7;
/// Largest edge count the exhaustive enumerators accept.
pub const MAX_ENUM_EDGES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("could not satisfy the requested constraints: {0}")]
    ConstraintUnsatisfiable(String),
}

/// Enumerate one representative per isomorphism class of multigraphs on
/// exactly `vertices` vertices with at most `max_edges` edges.
///
/// The order is deterministic but unspecified across versions. Budget:
/// at most [`MAX_ENUM_VERTICES`] vertices and [`MAX_ENUM_EDGES`] edges.
pub fn enumerate_multigraphs(
    vertices: usize,
    max_edges: usize,
    connected_only: bool,
) -> Result<Vec<MultiGraph>, OracleError> {
    if vertices > MAX_ENUM_VERTICES || max_edges > MAX_ENUM_EDGES {
        return Err(OracleError::BudgetExceeded(format!(
            "{vertices} vertices / {max_edges} edges (limits are {MAX_ENUM_VERTICES} / {MAX_ENUM_EDGES})"
        )));
    }
    let pairs: Vec<(u32, u32)> = all_pairs(vertices);
    let mut counts = vec![0u32; pairs.len()];
    let mut reps: Vec<MultiGraph> = Vec::new();
    let mut by_sig: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();

    // Walk every multiplicity assignment (a multiset of pairs) in
    // lexicographic order.
    fn walk(
        pairs: &[(u32, u32)],
        counts: &mut Vec<u32>,
        at: usize,
        remaining: u32,
        vertices: usize,
        connected_only: bool,
        reps: &mut Vec<MultiGraph>,
        by_sig: &mut HashMap<Vec<u32>, Vec<usize>>,
    ) {
        if at == pairs.len() {
            if connected_only && !counts_connected(vertices, pairs, counts) {
                return;
            }
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for (i, &(u, v)) in pairs.iter().enumerate() {
                for _ in 0..counts[i] {
                    edges.push((u as usize, v as usize));
                }
            }
            let g = MultiGraph::from_edges(vertices, &edges).expect("generated edges are valid");
            let sig = multigraph_signature(&g);
            let bucket = by_sig.entry(sig).or_default();
            if bucket.iter().all(|&i| multigraph_isomorphic(&reps[i], &g).is_none()) {
                bucket.push(reps.len());
                reps.push(g);
            }
            return;
        }
        for c in 0..=remaining {
            counts[at] = c;
            walk(pairs, counts, at + 1, remaining - c, vertices, connected_only, reps, by_sig);
        }
        counts[at] = 0;
    }
    walk(
        &pairs,
        &mut counts,
        0,
        max_edges as u32,
        vertices,
        connected_only,
        &mut reps,
        &mut by_sig,
    );
    Ok(reps)
}

/// Enumerate one representative per isomorphism class of simple graphs on
/// exactly `vertices` vertices with at most `max_edges` edges.
///
/// Same budget rationale as [`enumerate_multigraphs`]; the vertex budget
/// here is what the canonical-form helper supports minus headroom, and the
/// edge budget is the full pair count.
pub fn enumerate_simple_graphs(
    vertices: usize,
    max_edges: usize,
    connected_only: bool,
) -> Result<Vec<SimpleGraph>, OracleError> {
    if vertices > MAX_ENUM_VERTICES {
        return Err(OracleError::BudgetExceeded(format!(
            "{vertices} vertices (limit is {MAX_ENUM_VERTICES})"
        )));
    }
    let pairs = all_pairs(vertices);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        if mask.count_ones() as usize > max_edges {
            continue;
        }
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(u, v))| (u as usize, v as usize))
            .collect();
        if connected_only && !pairs_connected(vertices, &chosen) {
            continue;
        }
        let g = SimpleGraph::from_edges(vertices, &chosen).expect("mask edges are distinct");
        if seen.insert(canonical_key(&g)) {
            out.push(g);
        }
    }
    Ok(out)
}

fn all_pairs(vertices: usize) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for u in 0..vertices as u32 {
        for v in (u + 1)..vertices as u32 {
            pairs.push((u, v));
        }
    }
    pairs
}

fn counts_connected(vertices: usize, pairs: &[(u32, u32)], counts: &[u32]) -> bool {
    let chosen: Vec<(usize, usize)> = pairs
        .iter()
        .zip(counts)
        .filter(|&(_, &c)| c > 0)
        .map(|(&(u, v), _)| (u as usize, v as usize))
        .collect();
    pairs_connected(vertices, &chosen)
}

fn pairs_connected(vertices: usize, edges: &[(usize, usize)]) -> bool {
    if vertices == 0 {
        return false;
    }
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = vertices;
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            components -= 1;
        }
    }
    components == 1
}

/// Cheap isomorphism invariant: per-vertex blocks of (degree, sorted
/// multiplicities, sorted neighbor degrees), sorted. Equal for isomorphic
/// graphs; used only to bucket candidates before exact checks.
fn multigraph_signature(g: &MultiGraph) -> Vec<u32> {
    let degrees: Vec<u32> = g.vertices().map(|v| g.degree(v) as u32).collect();
    let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let mut mults: HashMap<VertexId, u32> = HashMap::new();
        for &(_, w) in g.incident_edges(v) {
            *mults.entry(w).or_insert(0) += 1;
        }
        let mut mult_list: Vec<u32> = mults.values().copied().collect();
        mult_list.sort_unstable();
        let mut nbr_degs: Vec<u32> = mults.keys().map(|w| degrees[w.index()]).collect();
        nbr_degs.sort_unstable();
        let mut block = vec![degrees[v.index()]];
        block.push(u32::MAX); // separator
        block.extend(mult_list);
        block.push(u32::MAX);
        block.extend(nbr_degs);
        blocks.push(block);
    }
    blocks.sort();
    let mut flat = vec![g.edge_count() as u32];
    for b in blocks {
        flat.push(u32::MAX - 1);
        flat.extend(b);
    }
    flat
}

/// Constraints for [`random_multigraph`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RandomConstraints {
    pub connected: bool,
    pub delta0_free: bool,
}

/// Sample a multigraph on `n` vertices with `m` edges, reproducibly for a
/// given seed.
///
/// When connectivity is requested the generator first plants a random
/// spanning tree (each vertex attaches to a uniformly random earlier one)
/// and then distributes the remaining edges uniformly over vertex pairs,
/// so parallel edges arise naturally. Constraint violations are retried
/// with fresh randomness up to a fixed budget.
pub fn random_multigraph(
    n: usize,
    m: usize,
    seed: u64,
    constraints: RandomConstraints,
) -> Result<MultiGraph, OracleError> {
    if n < 2 && m > 0 {
        return Err(OracleError::ConstraintUnsatisfiable(format!(
            "{m} loop-free edges cannot be placed on {n} vertex(es)"
        )));
    }
    if constraints.connected {
        if n == 0 {
            return Err(OracleError::ConstraintUnsatisfiable(
                "a graph with no vertices is not connected".into(),
            ));
        }
        if m + 1 < n {
            return Err(OracleError::ConstraintUnsatisfiable(format!(
                "{m} edges cannot connect {n} vertices"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 1000;
    for _ in 0..ATTEMPTS {
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
        if constraints.connected && n >= 2 {
            for v in 1..n {
                edges.push((rng.gen_range(0..v), v));
            }
        }
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                edges.push((u, v));
            }
        }
        let g = MultiGraph::from_edges(n, &edges).expect("sampled edges are valid");
        if constraints.delta0_free && delta0_witness(&g).is_some() {
            continue;
        }
        return Ok(g);
    }
    Err(OracleError::ConstraintUnsatisfiable(format!(
        "no sample met the constraints within {ATTEMPTS} attempts"
    )))
}

/// Exhaustively find every root of `gamma` under `mode`, up to isomorphism:
/// connected multigraphs with exactly |V(gamma)| edges and at most
/// `max_vertices` vertices whose line graph of the requested flavor is
/// isomorphic to `gamma`.
///
/// Roots are required to be connected; allowing isolated vertices would pad
/// every class with spurious variants. Budget as in the enumerators.
pub fn brute_force_roots(
    gamma: &SimpleGraph,
    mode: LineMode,
    max_vertices: usize,
) -> Result<Vec<MultiGraph>, OracleError> {
    let k = gamma.vertex_count();
    if k > MAX_ENUM_EDGES || max_vertices > MAX_ENUM_VERTICES {
        return Err(OracleError::BudgetExceeded(format!(
            "{k} edges to place / {max_vertices} root vertices (limits are {MAX_ENUM_EDGES} / {MAX_ENUM_VERTICES})"
        )));
    }
    let target_key = canonical_key(gamma);
    let target_edges = gamma.edge_count();
    let mut roots = Vec::new();
    for n_root in 1..=max_vertices {
        for candidate in enumerate_multigraphs(n_root, k, true)? {
            if candidate.edge_count() != k {
                continue;
            }
            let line = match mode {
                LineMode::L1 => l1_line_graph(&candidate),
                LineMode::Geq1 => geq1_line_graph(&candidate),
            };
            if line.edge_count() != target_edges || canonical_key(&line) != target_key {
                continue;
            }
            roots.push(candidate);
        }
    }
    Ok(roots)
}

/// One application of a collapse move in [`collapse_by_rewriting`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    /// The collapsible configuration that was found, in the labeling of the
    /// graph at the time of the step (merges renumber later vertices down).
    pub witness: Delta0Witness,
    /// Number of x–y edges re-hung onto a fresh pendant vertex; zero when
    /// the endpoints were non-adjacent and simply merged.
    pub rehung_edges: usize,
}

/// Collapse a connected multigraph to its ≥1-canonical form by iterating
/// the two local moves, returning the fixed point and the step trace.
///
/// The moves: for a path x–z–y whose outer vertices have no neighbors
/// beyond the triple, merge x and y if they are non-adjacent; if they are
/// adjacent, merge them and re-hang the former x–y edges on a fresh pendant
/// vertex. This is the independent oracle for the pipeline-based collapse;
/// the two must agree up to isomorphism.
pub fn collapse_by_rewriting(
    g: &MultiGraph,
) -> Result<(MultiGraph, Vec<RewriteStep>), ReconstructError> {
    if !g.is_connected() {
        return Err(ReconstructError::InvalidInput(InvalidInput::Disconnected));
    }
    if g.edge_count() == 0 {
        return Err(ReconstructError::InvalidInput(InvalidInput::Empty));
    }
    let mut current = g.clone();
    let mut steps = Vec::new();
    let budget = 2 * (g.vertex_count() + g.edge_count()) + 16;
    while let Some(witness) = delta0_witness(&current) {
        assert!(steps.len() < budget, "rewriting failed to terminate");
        let (x, y) = (witness.x, witness.y);
        let joining = current.multiplicity(x, y);
        let n = current.vertex_count();
        // Dense relabeling with y removed; the fresh pendant (if any) takes
        // the last index.
        let map = |v: VertexId| -> usize {
            if v == y {
                // y is absorbed into x, so it takes x's post-removal index.
                x.index() - usize::from(x > y)
            } else if v > y {
                v.index() - 1
            } else {
                v.index()
            }
        };
        let fresh = n - 1;
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(current.edge_count());
        for e in current.edge_ids() {
            let (u, v) = current.endpoints(e);
            if joining > 0 && ((u, v) == (x, y) || (u, v) == (y, x)) {
                edges.push((map(x), fresh));
            } else {
                edges.push((map(u), map(v)));
            }
        }
        let new_n = if joining > 0 { n } else { n - 1 };
        current = MultiGraph::from_edges(new_n, &edges)
            .expect("rewriting moves preserve edge validity");
        steps.push(RewriteStep { witness, rehung_edges: joining });
    }
    Ok((current, steps))
}

/// Relabel a multigraph along explicit vertex and edge permutations: edge
/// `edge_perm[e]` of the result carries the images of `e`'s endpoints.
/// Used by tests that plant a known isomorphism.
pub fn permuted_multigraph(
    g: &MultiGraph,
    vertex_perm: &[VertexId],
    edge_perm: &[EdgeId],
) -> MultiGraph {
    assert_eq!(vertex_perm.len(), g.vertex_count());
    assert_eq!(edge_perm.len(), g.edge_count());
    let mut edges = vec![(0usize, 0usize); g.edge_count()];
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        edges[edge_perm[e.index()].index()] =
            (vertex_perm[u.index()].index(), vertex_perm[v.index()].index());
    }
    MultiGraph::from_edges(g.vertex_count(), &edges).expect("permutation preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_vertex_connected_classes_are_the_bananas() {
        let classes = enumerate_multigraphs(2, 3, true).unwrap();
        assert_eq!(classes.len(), 3);
        let mut sizes: Vec<usize> = classes.iter().map(|g| g.edge_count()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn one_isolated_vertex_is_a_single_class() {
        let classes = enumerate_multigraphs(1, 0, false).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].vertex_count(), 1);
    }

    #[test]
    fn three_vertices_two_edges_connected_is_only_the_path() {
        let classes = enumerate_multigraphs(3, 2, true).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].edge_count(), 2);
        assert_eq!(classes[0].underlying_simple().edge_count(), 2);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_multigraphs(8, 3, true),
            Err(OracleError::BudgetExceeded(_))
        ));
        assert!(matches!(
            enumerate_multigraphs(3, 8, true),
            Err(OracleError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn four_vertex_connected_simple_graph_classes_number_six() {
        // The classical count: P4, K1,3, paw, C4, diamond, K4.
        let classes = enumerate_simple_graphs(4, 6, true).unwrap();
        assert_eq!(classes.len(), 6);
    }

    #[test]
    fn random_generation_is_reproducible_and_respects_connectivity() {
        let constraints = RandomConstraints { connected: true, delta0_free: false };
        let a = random_multigraph(4, 6, 1, constraints).unwrap();
        let b = random_multigraph(4, 6, 1, constraints).unwrap();
        assert_eq!(a.edge_pairs(), b.edge_pairs());
        assert!(a.is_connected());
    }

    #[test]
    fn five_edges_on_two_vertices_is_always_the_banana() {
        let g = random_multigraph(2, 5, 42, RandomConstraints::default()).unwrap();
        assert_eq!(g.multiplicity(VertexId::new(0), VertexId::new(1)), 5);
    }

    #[test]
    fn rewriting_collapses_a_triangle_to_the_three_banana() {
        let k3 = MultiGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let (collapsed, steps) = collapse_by_rewriting(&k3).unwrap();
        assert_eq!(collapsed.vertex_count(), 2);
        assert_eq!(collapsed.edge_count(), 3);
        assert_eq!(
            collapsed.multiplicity(VertexId::new(0), VertexId::new(1)),
            3
        );
        assert!(!steps.is_empty());
    }

    #[test]
    fn rewriting_leaves_a_fixed_point_alone() {
        let p4 = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (collapsed, steps) = collapse_by_rewriting(&p4).unwrap();
        assert!(steps.is_empty());
        assert_eq!(collapsed.edge_pairs(), p4.edge_pairs());
    }

    #[test]
    fn permuted_multigraph_plants_a_checkable_isomorphism() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let vperm: Vec<VertexId> = [2, 0, 1].iter().map(|&i| VertexId::new(i)).collect();
        let eperm: Vec<EdgeId> = [1, 2, 0].iter().map(|&i| EdgeId::new(i)).collect();
        let h = permuted_multigraph(&g, &vperm, &eperm);
        let iso = multigraph_isomorphic(&g, &h).expect("planted isomorphism");
        assert!(iso.is_valid(&g, &h));
    }
}
