//! Twin partitions of a simple graph and the induced quotient.
//!
//! Two vertices are *false twins* when their open neighborhoods are equal
//! (which forces them non-adjacent) and *true twins* when their closed
//! neighborhoods are equal (which forces them adjacent). Both relations are
//! equivalences; the classes of the first are independent sets, the classes
//! of the second cliques. Collapsing each class to its representative yields
//! a quotient with no nontrivial twins of the same kind.
//!
//! Grouping fingerprints each (closed) neighborhood list with a 64-bit
//! mix, sorts the fingerprints so equal lists land adjacent, and confirms
//! each grouping by comparing the actual lists — fingerprint collisions
//! only cost extra comparisons, never wrong classes. Every pass walks the
//! adjacency structure sequentially, so the running time is O(|V|+|E|)
//! beyond the sort of one machine word per vertex. Class indices are
//! assigned by first appearance in vertex order, making every downstream
//! labeling reproducible.

use crate::graph::{SimpleGraph, VertexId};

/// Which twin relation a partition was computed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    FalseTwins,
    TrueTwins,
}

/// Partition of a graph's vertices into maximal twin classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    pub kind: TwinKind,
    /// Class members in ascending vertex order; classes ordered by their
    /// first vertex.
    pub classes: Vec<Vec<VertexId>>,
    /// Class index of every vertex.
    pub class_of: Vec<u32>,
}

impl TwinPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Lowest vertex of the class; the member kept by the quotient.
    pub fn representative(&self, class: usize) -> VertexId {
        self.classes[class][0]
    }

    pub fn size(&self, class: usize) -> usize {
        self.classes[class].len()
    }

    /// True when every class is a singleton.
    pub fn is_twin_free(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

/// Quotient of a graph by one of its twin partitions: the induced subgraph
/// on class representatives, relabeled to class indices.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    pub graph: SimpleGraph,
    pub partition: TwinPartition,
}

/// Group vertices by equal open neighborhoods.
pub fn false_twin_partition(g: &SimpleGraph) -> TwinPartition {
    group_by_neighborhoods(g, TwinKind::FalseTwins)
}

/// Group vertices by equal closed neighborhoods.
pub fn true_twin_partition(g: &SimpleGraph) -> TwinPartition {
    group_by_neighborhoods(g, TwinKind::TrueTwins)
}

/// The list a vertex is grouped under: its sorted neighbors, with the
/// vertex itself spliced in at its sorted position for closed
/// neighborhoods.
fn key_stream(
    g: &SimpleGraph,
    kind: TwinKind,
    v: VertexId,
) -> impl Iterator<Item = VertexId> + '_ {
    let ns = g.neighbors(v);
    let split = match kind {
        TwinKind::FalseTwins => ns.len(),
        TwinKind::TrueTwins => ns.partition_point(|&w| w < v),
    };
    let spliced = (kind == TwinKind::TrueTwins).then_some(v);
    ns[..split].iter().copied().chain(spliced).chain(ns[split..].iter().copied())
}

/// One step of a running 64-bit combine (a multiply–xor–shift finalizer);
/// order-sensitive, and strong enough that unequal lists virtually never
/// share a fingerprint. Equality is re-checked exactly either way.
fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn group_by_neighborhoods(g: &SimpleGraph, kind: TwinKind) -> TwinPartition {
    let n = g.vertex_count();
    // Fingerprint every key stream, then sort so equal streams become
    // adjacent runs.
    let mut keyed: Vec<(u64, u32)> = Vec::with_capacity(n);
    for v in g.vertices() {
        let mut h = g.degree(v) as u64;
        for w in key_stream(g, kind, v) {
            h = mix(h, w.index() as u64);
        }
        keyed.push((h, v.index() as u32));
    }
    keyed.sort_unstable();
    // Within a run, a vertex joins the first subgroup whose actual stream
    // matches; a fresh subgroup starts otherwise. Subgroup ids are raw —
    // they follow fingerprint order, not vertex order.
    let mut raw_of: Vec<u32> = vec![0; n];
    let mut raw_reps: Vec<u32> = Vec::new();
    let mut run = 0;
    while run < keyed.len() {
        let fingerprint = keyed[run].0;
        let mut end = run;
        while end < keyed.len() && keyed[end].0 == fingerprint {
            end += 1;
        }
        let first_sub = raw_reps.len();
        for &(_, v) in &keyed[run..end] {
            let vertex = VertexId::new(v as usize);
            let found = raw_reps[first_sub..].iter().position(|&rep| {
                key_stream(g, kind, VertexId::new(rep as usize)).eq(key_stream(g, kind, vertex))
            });
            raw_of[v as usize] = match found {
                Some(offset) => (first_sub + offset) as u32,
                None => {
                    raw_reps.push(v);
                    (raw_reps.len() - 1) as u32
                }
            };
        }
        run = end;
    }
    // Renumber by first appearance in vertex order.
    let mut class_of_raw: Vec<u32> = vec![u32::MAX; raw_reps.len()];
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    let mut class_of: Vec<u32> = Vec::with_capacity(n);
    for v in 0..n {
        let raw = raw_of[v] as usize;
        if class_of_raw[raw] == u32::MAX {
            class_of_raw[raw] = classes.len() as u32;
            classes.push(Vec::new());
        }
        let c = class_of_raw[raw];
        classes[c as usize].push(VertexId::new(v));
        class_of.push(c);
    }
    TwinPartition { kind, classes, class_of }
}

/// Collapse each class of `partition` to its representative.
///
/// The result is the induced subgraph on representatives with vertex labels
/// equal to class indices; adjacency between classes is well-defined because
/// twins have interchangeable neighborhoods.
pub fn quotient(g: &SimpleGraph, partition: TwinPartition) -> QuotientGraph {
    assert_eq!(
        partition.class_of.len(),
        g.vertex_count(),
        "partition does not belong to this graph"
    );
    let representatives: Vec<VertexId> =
        (0..partition.class_count()).map(|c| partition.representative(c)).collect();
    let graph = g.induced_subgraph(&representatives);
    QuotientGraph { graph, partition }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn claw() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn octahedron() -> SimpleGraph {
        // Opposite pairs (0,1), (2,3), (4,5); everything else adjacent.
        let mut edges = Vec::new();
        for u in 0..6usize {
            for v in (u + 1)..6 {
                if !matches!((u, v), (0, 1) | (2, 3) | (4, 5)) {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::from_edges(6, &edges).unwrap()
    }

    fn class_sizes(p: &TwinPartition) -> Vec<usize> {
        p.classes.iter().map(|c| c.len()).collect()
    }

    #[test]
    fn claw_leaves_are_false_twins_but_not_true_twins() {
        let p = false_twin_partition(&claw());
        assert_eq!(class_sizes(&p), vec![1, 3]);
        assert_eq!(p.representative(1), VertexId::new(1));

        let t = true_twin_partition(&claw());
        assert_eq!(class_sizes(&t), vec![1, 1, 1, 1]);
    }

    #[test]
    fn triangle_vertices_are_true_twins_but_not_false_twins() {
        let k3 = SimpleGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(class_sizes(&false_twin_partition(&k3)), vec![1, 1, 1]);
        assert_eq!(class_sizes(&true_twin_partition(&k3)), vec![3]);
    }

    #[test]
    fn octahedron_false_twins_are_the_opposite_pairs() {
        let p = false_twin_partition(&octahedron());
        assert_eq!(
            p.classes,
            vec![
                vec![VertexId::new(0), VertexId::new(1)],
                vec![VertexId::new(2), VertexId::new(3)],
                vec![VertexId::new(4), VertexId::new(5)],
            ]
        );
    }

    #[test]
    fn path_on_three_vertices_has_no_true_twins() {
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(true_twin_partition(&p3).is_twin_free());
        // The endpoints are false twins, though.
        assert_eq!(class_sizes(&false_twin_partition(&p3)), vec![2, 1]);
    }

    #[test]
    fn quotients_collapse_to_the_expected_shapes() {
        let q = quotient(&claw(), false_twin_partition(&claw()));
        assert_eq!(q.graph.vertex_count(), 2);
        assert_eq!(q.graph.edge_count(), 1);

        let q = quotient(&octahedron(), false_twin_partition(&octahedron()));
        assert_eq!(q.graph.vertex_count(), 3);
        assert_eq!(q.graph.edge_count(), 3);
    }

    #[test]
    fn twin_free_graph_quotients_to_itself() {
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = false_twin_partition(&p4);
        assert!(p.is_twin_free());
        let q = quotient(&p4, p);
        let original: Vec<_> = p4.edges().collect();
        let collapsed: Vec<_> = q.graph.edges().collect();
        assert_eq!(original, collapsed);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arbitrary_simple_graph() -> impl Strategy<Value = SimpleGraph> {
            (1usize..9).prop_flat_map(|n| {
                prop::collection::btree_set(
                    (0..n, 0..n).prop_filter_map("distinct sorted", |(u, v)| {
                        if u < v {
                            Some((u, v))
                        } else if v < u {
                            Some((v, u))
                        } else {
                            None
                        }
                    }),
                    0..=(n * (n - 1) / 2).min(16),
                )
                .prop_map(move |edges| {
                    SimpleGraph::from_edges(n, &edges.into_iter().collect::<Vec<_>>()).unwrap()
                })
            })
        }

        fn naive_partition(g: &SimpleGraph, closed: bool) -> Vec<u32> {
            let key = |v: usize| {
                let mut k: Vec<usize> =
                    g.neighbors(VertexId::new(v)).iter().map(|w| w.index()).collect();
                if closed {
                    k.push(v);
                    k.sort_unstable();
                }
                k
            };
            let mut class_of = vec![u32::MAX; g.vertex_count()];
            let mut next = 0;
            for v in 0..g.vertex_count() {
                if class_of[v] != u32::MAX {
                    continue;
                }
                class_of[v] = next;
                for w in (v + 1)..g.vertex_count() {
                    if class_of[w] == u32::MAX && key(v) == key(w) {
                        class_of[w] = next;
                    }
                }
                next += 1;
            }
            class_of
        }

        proptest! {
            #[test]
            fn partitions_match_the_pairwise_comparison(g in arbitrary_simple_graph()) {
                prop_assert_eq!(false_twin_partition(&g).class_of, naive_partition(&g, false));
                prop_assert_eq!(true_twin_partition(&g).class_of, naive_partition(&g, true));
            }

            #[test]
            fn classes_are_independent_sets_or_cliques(g in arbitrary_simple_graph()) {
                let fp = false_twin_partition(&g);
                for class in &fp.classes {
                    for (i, &u) in class.iter().enumerate() {
                        for &v in &class[i + 1..] {
                            prop_assert!(!g.has_edge(u, v));
                        }
                    }
                }
                let tp = true_twin_partition(&g);
                for class in &tp.classes {
                    for (i, &u) in class.iter().enumerate() {
                        for &v in &class[i + 1..] {
                            prop_assert!(g.has_edge(u, v));
                        }
                    }
                }
            }

            #[test]
            fn quotients_are_twin_free_of_their_kind(g in arbitrary_simple_graph()) {
                let q = quotient(&g, false_twin_partition(&g));
                prop_assert!(false_twin_partition(&q.graph).is_twin_free());
                let q = quotient(&g, true_twin_partition(&g));
                prop_assert!(true_twin_partition(&q.graph).is_twin_free());
            }
        }
    }
}
