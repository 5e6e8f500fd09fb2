//! The reconstruction pipeline: decide whether a graph is a line graph of
//! a multigraph under either adjacency flavor, and if so return the
//! canonical root with an explicit vertex → root-edge correspondence.
//!
//! The pipeline runs in four steps: group twin vertices (parallel edges in
//! a root are exactly open- or closed-neighborhood twins, depending on the
//! flavor), take the twin-free quotient, root the quotient over a simple
//! graph, and re-inflate each twin class into a bundle of parallel edges.
//! Canonicality falls out of the construction rather than a post-processing
//! step: the one-share root is never on four vertices, and the
//! at-least-one-share root never contains a collapsible triple, so both
//! properties are asserted.

use thiserror::Error;

use crate::graph::{EdgeId, MultiGraph, MultiGraphBuilder, SimpleGraph, VertexId};
use crate::iso::{isomorphism_from_edge_map, MultiGraphIsomorphism};
use crate::krausz::{simple_line_graph_root, K3Policy, NotALineGraph};
use crate::linegraph::{geq1_line_graph, l1_line_graph};
use crate::twins::{false_twin_partition, quotient, true_twin_partition};

/// Which line-graph flavor a root is taken under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineMode {
    /// Vertices adjacent when their edges share exactly one endpoint;
    /// parallel edges are non-adjacent.
    L1,
    /// Vertices adjacent when their edges share at least one endpoint;
    /// parallel edges are adjacent.
    Geq1,
}

impl LineMode {
    /// The line graph of `g` under this flavor.
    pub fn line_graph(self, g: &MultiGraph) -> SimpleGraph {
        match self {
            LineMode::L1 => l1_line_graph(g),
            LineMode::Geq1 => geq1_line_graph(g),
        }
    }
}

/// A reconstructed root with its certificate: input vertex `v` corresponds
/// to root edge `vertex_to_edge[v]`, and `class_of[v]` names the twin
/// class of `v`, which is also the parallel class of its root edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootResult {
    pub mode: LineMode,
    pub root: MultiGraph,
    pub vertex_to_edge: Vec<EdgeId>,
    pub class_of: Vec<u32>,
}

/// The input fails a structural precondition rather than failing to be a
/// line graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidInput {
    #[error("the graph has no vertices")]
    Empty,
    #[error("the graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("not a line graph: {0}")]
    NotLineGraph(#[from] NotALineGraph),
    #[error("invalid input: {0}")]
    InvalidInput(#[from] InvalidInput),
}

/// Why a vertex map between two graphs could not be lifted to an
/// isomorphism of their roots.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CannotLift {
    #[error("the first graph has no root: {0}")]
    Left(ReconstructError),
    #[error("the second graph has no root: {0}")]
    Right(ReconstructError),
    #[error("the map is not an isomorphism between the two graphs")]
    NotInduced,
}

/// A collapsible triple x–z–y: both outer vertices have all their edges
/// inside the triple. Any multigraph containing one shares its
/// at-least-one-share line graph with a smaller multigraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Delta0Witness {
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
}

/// Reconstruct the canonical root of a connected graph under `mode`.
///
/// Under [`LineMode::L1`] the root is the unique connected multigraph not
/// on four vertices whose one-share line graph is the input; under
/// [`LineMode::Geq1`] it is a multigraph free of collapsible triples. The
/// triple-free root is unique up to isomorphism whenever it has five or
/// more vertices (or at most six edges); on exactly four vertices with a
/// dense underlying shape two non-isomorphic triple-free roots can share
/// one ≥1-line graph, and this function deterministically returns one of
/// them. The underlying simple graph and the multiset of parallel-class
/// sizes are the same for all such roots, and the returned correspondence
/// always verifies against the input.
pub fn reconstruct_root(
    gamma: &SimpleGraph,
    mode: LineMode,
) -> Result<RootResult, ReconstructError> {
    if gamma.vertex_count() == 0 {
        return Err(InvalidInput::Empty.into());
    }
    if !gamma.is_connected() {
        return Err(InvalidInput::Disconnected.into());
    }
    let partition = match mode {
        LineMode::L1 => false_twin_partition(gamma),
        LineMode::Geq1 => true_twin_partition(gamma),
    };
    let class_of = partition.class_of.clone();
    let quotiented = quotient(gamma, partition);
    let simple = simple_line_graph_root(&quotiented.graph, K3Policy::Triangle)?;

    // Re-inflate: each input vertex becomes one copy of its class's root
    // edge, in vertex order, so vertex v corresponds to root edge v.
    let n = gamma.vertex_count();
    let mut builder = MultiGraphBuilder::new(simple.root.vertex_count());
    for v in 0..n {
        let (a, b) = simple.vertex_to_edge[class_of[v] as usize];
        builder.add_edge(a.index(), b.index()).expect("root edges are in range");
    }
    let root = builder.build();
    let vertex_to_edge = (0..n).map(EdgeId::new).collect();

    match mode {
        LineMode::L1 => assert!(
            root.vertex_count() != 4,
            "the one-share root can never land on four vertices"
        ),
        LineMode::Geq1 => assert!(
            delta0_witness(&root).is_none(),
            "the at-least-one-share root can never contain a collapsible triple"
        ),
    }
    debug_assert!(root.is_connected());
    Ok(RootResult { mode, root, vertex_to_edge, class_of })
}

/// Check a reconstruction certificate: `vertex_to_edge` must biject the
/// input vertices onto the root's edges and transport the root's
/// mode-line-graph adjacency exactly onto the input's.
pub fn verify(gamma: &SimpleGraph, result: &RootResult) -> bool {
    let n = gamma.vertex_count();
    if result.vertex_to_edge.len() != n || result.root.edge_count() != n {
        return false;
    }
    let mut edge_to_vertex = vec![usize::MAX; n];
    for (v, e) in result.vertex_to_edge.iter().enumerate() {
        if e.index() >= n || edge_to_vertex[e.index()] != usize::MAX {
            return false;
        }
        edge_to_vertex[e.index()] = v;
    }
    let line = result.mode.line_graph(&result.root);
    let transported: Vec<(usize, usize)> = line
        .edges()
        .map(|(a, b)| (edge_to_vertex[a.index()], edge_to_vertex[b.index()]))
        .collect();
    match SimpleGraph::from_edges(n, &transported) {
        Ok(mapped) => mapped == *gamma,
        Err(_) => false,
    }
}

/// Find a collapsible triple if one exists, deterministically.
///
/// The triple's outer vertices see nothing outside it, so in terms of
/// distinct-neighbor sets there are exactly two shapes: two vertices whose
/// only neighbor is the same third vertex, or two adjacent vertices each
/// seeing exactly the other and one shared third vertex.
pub fn delta0_witness(g: &MultiGraph) -> Option<Delta0Witness> {
    let s = g.underlying_simple();
    let n = g.vertex_count();
    let mut pendant_on: Vec<Option<VertexId>> = vec![None; n];
    for x in s.vertices() {
        if let [z] = s.neighbors(x) {
            match pendant_on[z.index()] {
                Some(earlier) => return Some(Delta0Witness { x: earlier, y: x, z: *z }),
                None => pendant_on[z.index()] = Some(x),
            }
        }
    }
    for x in s.vertices() {
        if let [p, q] = s.neighbors(x) {
            for (y, z) in [(*p, *q), (*q, *p)] {
                if s.neighbors(y) == [x.min(z), x.max(z)] {
                    return Some(Delta0Witness { x, y, z });
                }
            }
        }
    }
    None
}

/// Whether no collapsible triple exists; the defining property of
/// canonical at-least-one-share roots.
pub fn is_delta0_free(g: &MultiGraph) -> bool {
    delta0_witness(g).is_none()
}

/// Collapse a connected multigraph with at least one edge to a canonical
/// (triple-free) multigraph sharing its at-least-one-share line graph.
/// The result is deterministic; see [`reconstruct_root`] for the one
/// four-vertex boundary where the triple-free form is not unique.
pub fn delta0_collapse(g: &MultiGraph) -> Result<MultiGraph, ReconstructError> {
    if g.vertex_count() == 0 {
        return Err(InvalidInput::Empty.into());
    }
    if !g.is_connected() {
        return Err(InvalidInput::Disconnected.into());
    }
    let gamma = geq1_line_graph(g);
    // A connected multigraph with an edge has a connected line graph, so
    // the only remaining rejection is the edgeless input, surfacing as an
    // empty line graph.
    let result = reconstruct_root(&gamma, LineMode::Geq1)?;
    Ok(result.root)
}

/// Decide whether a connected graph is the one-share line graph of a
/// multigraph in which every parallel class has at most two edges and
/// every doubled pair has an endpoint on no other edges. Returns such a
/// root if one exists.
pub fn is_generalized_line_graph(gamma: &SimpleGraph) -> Option<MultiGraph> {
    if gamma.vertex_count() == 0 || !gamma.is_connected() {
        return None;
    }
    // Twin classes become parallel classes, so a class of three or more
    // already rules every root out.
    let partition = false_twin_partition(gamma);
    if (0..partition.class_count()).any(|c| partition.size(c) > 2) {
        return None;
    }
    let root = reconstruct_root(gamma, LineMode::L1).ok()?.root;
    if respects_doubled_edge_rule(&root) {
        return Some(root);
    }
    // The canonical root is disqualified only by a double between two
    // busier vertices. Its only siblings with the same line graph are the
    // four-vertex relatives of a three-vertex all-adjacent root, obtained
    // by splitting each side across an opposite pair; search those. Roots
    // on five or more vertices have no sibling at all, and path-shaped
    // three-vertex roots pass the rule outright, so only the all-adjacent
    // case reaches this point.
    if root.vertex_count() != 3 {
        return None;
    }
    let v = |i: usize| VertexId::new(i);
    let sides = [
        root.multiplicity(v(0), v(1)),
        root.multiplicity(v(0), v(2)),
        root.multiplicity(v(1), v(2)),
    ];
    if sides.iter().any(|&s| s == 0) {
        return None;
    }
    let mut fallback: Option<MultiGraph> = None;
    for k in 0..=sides[0] {
        for l in 0..=sides[1] {
            for q in 0..=sides[2] {
                // Opposite sides of the four-vertex sibling sum back to
                // the collapsed triangle's sides.
                let mut edges: Vec<(usize, usize)> = Vec::new();
                let push = |pair: (usize, usize), count: usize, edges: &mut Vec<_>| {
                    for _ in 0..count {
                        edges.push(pair);
                    }
                };
                push((0, 1), k, &mut edges);
                push((0, 2), l, &mut edges);
                push((0, 3), q, &mut edges);
                push((1, 2), sides[2] - q, &mut edges);
                push((1, 3), sides[1] - l, &mut edges);
                push((2, 3), sides[0] - k, &mut edges);
                let candidate = MultiGraph::from_edges(4, &edges).expect("valid sibling edges");
                if !candidate.is_connected() || !respects_doubled_edge_rule(&candidate) {
                    continue;
                }
                debug_assert!(
                    crate::iso::multigraph_isomorphic(
                        &as_multigraph(&l1_line_graph(&candidate)),
                        &as_multigraph(gamma),
                    )
                    .is_some(),
                    "a sibling root must reproduce the input"
                );
                let simple = candidate.parallel_classes().iter().all(|c| c.len() == 1);
                if simple {
                    return Some(candidate);
                }
                fallback.get_or_insert(candidate);
            }
        }
    }
    fallback
}

fn respects_doubled_edge_rule(g: &MultiGraph) -> bool {
    g.parallel_classes().iter().all(|class| match class.len() {
        0 | 1 => true,
        2 => {
            let (u, v) = class.endpoints;
            g.degree(u) == 2 || g.degree(v) == 2
        }
        _ => false,
    })
}

fn as_multigraph(g: &SimpleGraph) -> MultiGraph {
    let pairs: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u.index(), v.index())).collect();
    MultiGraph::from_edges(g.vertex_count(), &pairs).expect("simple edges are valid")
}

/// Lift a vertex isomorphism between two line graphs to an isomorphism of
/// their canonical roots, in linear time.
///
/// `phi[v]` is the image in `gamma_image` of vertex `v` of `gamma`. The
/// lift exists exactly when `phi` is an isomorphism; the certificate edge
/// maps of the two roots transport it to a root-edge bijection, which
/// extends uniquely to the root vertices.
pub fn lift_isomorphism(
    gamma: &SimpleGraph,
    gamma_image: &SimpleGraph,
    phi: &[VertexId],
    mode: LineMode,
) -> Result<MultiGraphIsomorphism, CannotLift> {
    let left = reconstruct_root(gamma, mode).map_err(CannotLift::Left)?;
    let right = reconstruct_root(gamma_image, mode).map_err(CannotLift::Right)?;
    let n = gamma.vertex_count();
    if phi.len() != n || gamma_image.vertex_count() != n {
        return Err(CannotLift::NotInduced);
    }
    let mut edge_map = vec![EdgeId::new(0); n];
    let mut hit = vec![false; n];
    for v in 0..n {
        let image = phi[v].index();
        if image >= n || hit[image] {
            return Err(CannotLift::NotInduced);
        }
        hit[image] = true;
        edge_map[left.vertex_to_edge[v].index()] = right.vertex_to_edge[image];
    }
    isomorphism_from_edge_map(&left.root, &right.root, &edge_map).ok_or(CannotLift::NotInduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;
    use crate::iso::multigraph_isomorphic;
    use crate::oracle::{random_multigraph, RandomConstraints};

    fn simple(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_edges(n, edges).unwrap()
    }

    fn multi(n: usize, edges: &[(usize, usize)]) -> MultiGraph {
        MultiGraph::from_edges(n, edges).unwrap()
    }

    fn parallel_profile(g: &MultiGraph) -> Vec<usize> {
        let mut sizes: Vec<usize> = g.parallel_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn two_path_roots_to_a_doubled_pendant_path() {
        let p3 = simple(3, &[(0, 1), (1, 2)]);
        let result = reconstruct_root(&p3, LineMode::L1).unwrap();
        assert_eq!(result.root.vertex_count(), 3);
        assert_eq!(result.root.edge_count(), 3);
        assert_eq!(parallel_profile(&result.root), vec![1, 2]);
        assert_eq!(result.class_of, vec![0, 1, 0]);
        // The twin endpoints of the path share a parallel class.
        assert_eq!(
            result.root.endpoints(result.vertex_to_edge[0]),
            result.root.endpoints(result.vertex_to_edge[2]),
        );
        assert!(verify(&p3, &result));
    }

    #[test]
    fn diamond_roots_to_a_doubled_triangle() {
        let diamond = simple(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let result = reconstruct_root(&diamond, LineMode::L1).unwrap();
        let expected = multi(3, &[(0, 1), (0, 1), (0, 2), (1, 2)]);
        assert!(multigraph_isomorphic(&result.root, &expected).is_some());
        assert!(verify(&diamond, &result));
    }

    #[test]
    fn triangle_roots_differ_by_mode() {
        let k3 = simple(3, &[(0, 1), (0, 2), (1, 2)]);
        let one_share = reconstruct_root(&k3, LineMode::L1).unwrap();
        assert_eq!(one_share.root.vertex_count(), 3);
        assert_eq!(parallel_profile(&one_share.root), vec![1, 1, 1]);
        assert!(verify(&k3, &one_share));
        let at_least = reconstruct_root(&k3, LineMode::Geq1).unwrap();
        assert_eq!(at_least.root.vertex_count(), 2);
        assert_eq!(parallel_profile(&at_least.root), vec![3]);
        assert!(verify(&k3, &at_least));
    }

    #[test]
    fn claw_is_a_line_graph_in_one_mode_only() {
        let claw = simple(4, &[(0, 1), (0, 2), (0, 3)]);
        let result = reconstruct_root(&claw, LineMode::L1).unwrap();
        assert_eq!(result.root.vertex_count(), 3);
        assert_eq!(parallel_profile(&result.root), vec![1, 3]);
        assert!(verify(&claw, &result));
        assert!(matches!(
            reconstruct_root(&claw, LineMode::Geq1),
            Err(ReconstructError::NotLineGraph(_))
        ));
    }

    #[test]
    fn four_cycle_roots_to_a_doubly_doubled_path() {
        let c4 = simple(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let result = reconstruct_root(&c4, LineMode::L1).unwrap();
        assert_eq!(result.root.vertex_count(), 3);
        assert_eq!(parallel_profile(&result.root), vec![2, 2]);
        assert!(verify(&c4, &result));
    }

    #[test]
    fn single_vertex_roots_to_a_single_edge_in_both_modes() {
        let k1 = simple(1, &[]);
        for mode in [LineMode::L1, LineMode::Geq1] {
            let result = reconstruct_root(&k1, mode).unwrap();
            assert_eq!(result.root.vertex_count(), 2);
            assert_eq!(result.root.edge_count(), 1);
            assert!(verify(&k1, &result));
        }
    }

    #[test]
    fn invalid_inputs_are_distinguished_from_non_line_graphs() {
        let empty = simple(0, &[]);
        assert_eq!(
            reconstruct_root(&empty, LineMode::L1),
            Err(ReconstructError::InvalidInput(InvalidInput::Empty))
        );
        let split = simple(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            reconstruct_root(&split, LineMode::L1),
            Err(ReconstructError::InvalidInput(InvalidInput::Disconnected))
        );
    }

    #[test]
    fn seven_cycle_roots_to_itself() {
        let c7 = simple(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6)]);
        let result = reconstruct_root(&c7, LineMode::L1).unwrap();
        assert_eq!(result.root.vertex_count(), 7);
        assert_eq!(parallel_profile(&result.root), vec![1; 7]);
        assert!(verify(&c7, &result));
    }

    #[test]
    fn witness_detection_matches_both_collapsible_shapes() {
        let claw = multi(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(
            delta0_witness(&claw),
            Some(Delta0Witness { x: VertexId::new(1), y: VertexId::new(2), z: VertexId::new(0) })
        );
        let triangle = multi(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(
            delta0_witness(&triangle),
            Some(Delta0Witness { x: VertexId::new(0), y: VertexId::new(1), z: VertexId::new(2) })
        );
        let doubled_pendant = multi(3, &[(0, 1), (0, 1), (1, 2)]);
        assert!(delta0_witness(&doubled_pendant).is_some());
        let banana = multi(2, &[(0, 1), (0, 1), (0, 1)]);
        assert!(is_delta0_free(&banana));
        let p4 = multi(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(is_delta0_free(&p4));
    }

    #[test]
    fn collapse_reaches_the_canonical_form() {
        let triangle = multi(3, &[(0, 1), (0, 2), (1, 2)]);
        let collapsed = delta0_collapse(&triangle).unwrap();
        assert_eq!(collapsed.vertex_count(), 2);
        assert_eq!(parallel_profile(&collapsed), vec![3]);

        // A collapsible-free input only gets relabeled, never reshaped.
        let p4 = multi(4, &[(0, 1), (1, 2), (2, 3)]);
        let collapsed = delta0_collapse(&p4).unwrap();
        assert!(multigraph_isomorphic(&collapsed, &p4).is_some());

        // Collapsing preserves the at-least-one-share line graph.
        let claw = multi(4, &[(0, 1), (0, 2), (0, 3)]);
        let collapsed = delta0_collapse(&claw).unwrap();
        assert!(is_delta0_free(&collapsed));
        assert_eq!(
            canonical_key(&geq1_line_graph(&collapsed)),
            canonical_key(&geq1_line_graph(&claw)),
        );

        let edgeless = multi(1, &[]);
        assert_eq!(
            delta0_collapse(&edgeless),
            Err(ReconstructError::InvalidInput(InvalidInput::Empty))
        );
        let split = multi(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            delta0_collapse(&split),
            Err(ReconstructError::InvalidInput(InvalidInput::Disconnected))
        );
    }

    /// Canonicality has a genuine boundary on four vertices: over K4 minus
    /// an edge (and over K4), the line graph has symmetries that no vertex
    /// bijection of the root induces. Sliding the parallel-class sizes
    /// along one produces a second collapsible-free root that shares the
    /// at-least-one-share line graph without being isomorphic to the first.
    #[test]
    fn four_vertex_roots_are_ambiguous_up_to_line_graph_symmetry() {
        // Diamond on {0,1,2,3} with 0,1 the non-adjacent pair; class sizes
        // (02, 03, 12, 13, 23) = (2,1,3,1,1) versus the rotated (1,1,2,3,1).
        let a = multi(4, &[(0, 2), (0, 2), (0, 3), (1, 2), (1, 2), (1, 2), (1, 3), (2, 3)]);
        let b = multi(4, &[(0, 2), (0, 3), (1, 2), (1, 2), (1, 3), (1, 3), (1, 3), (2, 3)]);
        assert!(is_delta0_free(&a) && is_delta0_free(&b));
        assert!(multigraph_isomorphic(&a, &b).is_none());
        assert_eq!(
            canonical_key(&geq1_line_graph(&a)),
            canonical_key(&geq1_line_graph(&b)),
        );

        // Each reconstruction is still a certified collapsible-free root of
        // its own line graph; uniqueness is what the boundary costs.
        for planted in [&a, &b] {
            let gamma = geq1_line_graph(planted);
            let result = reconstruct_root(&gamma, LineMode::Geq1).unwrap();
            assert!(verify(&gamma, &result));
            assert!(is_delta0_free(&result.root));
            assert_eq!(result.root.vertex_count(), 4);
        }
    }

    #[test]
    fn diamond_is_a_generalized_line_graph_via_the_paw() {
        let diamond = simple(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let root = is_generalized_line_graph(&diamond).expect("the diamond qualifies");
        // The canonical doubled triangle fails the rule, but the paw — a
        // triangle with one pendant edge — is a qualifying sibling, and it
        // is simple, so it wins.
        assert_eq!(root.vertex_count(), 4);
        assert_eq!(parallel_profile(&root), vec![1, 1, 1, 1]);
        let mut degrees: Vec<usize> = root.vertices().map(|v| root.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 2, 2, 3]);
        assert!(
            multigraph_isomorphic(&as_multigraph(&l1_line_graph(&root)), &as_multigraph(&diamond))
                .is_some()
        );
    }

    #[test]
    fn octahedron_is_a_generalized_line_graph_via_complete_four() {
        let octa = simple(
            6,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4),
                (1, 2), (1, 4), (1, 5),
                (2, 3), (2, 5),
                (3, 4), (3, 5),
                (4, 5),
            ],
        );
        let root = is_generalized_line_graph(&octa).expect("the octahedron qualifies");
        assert_eq!(root.vertex_count(), 4);
        assert_eq!(root.edge_count(), 6);
        assert_eq!(parallel_profile(&root), vec![1; 6]);
    }

    #[test]
    fn generalized_line_graph_rejections() {
        // A twin class of three: the claw.
        let claw = simple(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(is_generalized_line_graph(&claw).is_none());
        // A five-vertex canonical root with a double between two busy
        // vertices: the four-cycle with one pendant.
        let banner = simple(5, &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)]);
        assert!(is_generalized_line_graph(&banner).is_none());
        // Not a line graph at all.
        let wheel = simple(
            7,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6),
                (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6),
            ],
        );
        assert!(is_generalized_line_graph(&wheel).is_none());
    }

    #[test]
    fn generalized_line_graph_accepts_plain_and_pendant_doubled_roots() {
        // A simple root passes untouched.
        let c5 = simple(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let root = is_generalized_line_graph(&c5).expect("cycles are line graphs");
        assert_eq!(parallel_profile(&root), vec![1; 5]);
        // A double with a degree-two endpoint passes directly.
        let p3 = simple(3, &[(0, 1), (1, 2)]);
        let root = is_generalized_line_graph(&p3).expect("the two-path qualifies");
        assert_eq!(parallel_profile(&root), vec![1, 2]);
    }

    #[test]
    fn lifting_transports_automorphisms_of_the_diamond() {
        let diamond = simple(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let identity: Vec<VertexId> = (0..4).map(VertexId::new).collect();
        let result = reconstruct_root(&diamond, LineMode::L1).unwrap();
        let iso = lift_isomorphism(&diamond, &diamond, &identity, LineMode::L1).unwrap();
        assert!(iso.is_valid(&result.root, &result.root));

        let swap: Vec<VertexId> = [1, 0, 2, 3].iter().map(|&i| VertexId::new(i)).collect();
        let iso = lift_isomorphism(&diamond, &diamond, &swap, LineMode::L1).unwrap();
        assert!(iso.is_valid(&result.root, &result.root));
    }

    #[test]
    fn lifting_rejects_maps_that_are_not_isomorphisms() {
        let p4 = simple(4, &[(0, 1), (1, 2), (2, 3)]);
        // Swapping one end with an interior vertex breaks adjacency.
        let bad: Vec<VertexId> = [1, 0, 2, 3].iter().map(|&i| VertexId::new(i)).collect();
        assert_eq!(
            lift_isomorphism(&p4, &p4, &bad, LineMode::L1),
            Err(CannotLift::NotInduced)
        );
        // Reversal is fine.
        let reverse: Vec<VertexId> = [3, 2, 1, 0].iter().map(|&i| VertexId::new(i)).collect();
        assert!(lift_isomorphism(&p4, &p4, &reverse, LineMode::L1).is_ok());
    }

    #[test]
    fn lifting_reports_which_side_failed() {
        let claw = simple(4, &[(0, 1), (0, 2), (0, 3)]);
        let c4 = simple(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let identity: Vec<VertexId> = (0..4).map(VertexId::new).collect();
        assert!(matches!(
            lift_isomorphism(&claw, &c4, &identity, LineMode::Geq1),
            Err(CannotLift::Left(_))
        ));
        assert!(matches!(
            lift_isomorphism(&c4, &claw, &identity, LineMode::Geq1),
            Err(CannotLift::Right(_))
        ));
    }

    #[test]
    fn random_roots_round_trip_under_both_modes() {
        let mut checked = 0usize;
        for seed in 0..400u64 {
            let n = 2 + (seed as usize) % 5;
            let m = 1 + (seed as usize * 7) % 7;
            let Ok(g) = random_multigraph(n, m, seed, RandomConstraints::default()) else {
                continue;
            };
            for mode in [LineMode::L1, LineMode::Geq1] {
                let gamma = mode.line_graph(&g);
                if gamma.vertex_count() == 0 || !gamma.is_connected() {
                    continue;
                }
                let result = reconstruct_root(&gamma, mode)
                    .unwrap_or_else(|e| panic!("a planted line graph must root: {e}"));
                assert!(verify(&gamma, &result));
                assert_eq!(
                    canonical_key(&mode.line_graph(&result.root)),
                    canonical_key(&gamma),
                    "the root's line graph must reproduce the input"
                );
                match mode {
                    LineMode::L1 => assert_ne!(result.root.vertex_count(), 4),
                    LineMode::Geq1 => assert!(is_delta0_free(&result.root)),
                }
                checked += 1;
            }
        }
        assert!(checked > 300, "expected a substantial sweep, got {checked}");
    }
}
