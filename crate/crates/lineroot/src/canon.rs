//! Canonical forms for very small simple graphs (at most 8 vertices), found
//! by brute-force minimization of an adjacency bitmask over all vertex
//! permutations. Used to key lookup tables and to compare tiny graphs for
//! isomorphism exactly and deterministically.

use crate::graph::SimpleGraph;

pub(crate) const MAX_CANON_VERTICES: usize = 8;

/// Smallest adjacency bitmask over all relabelings, together with the first
/// (lexicographically least) permutation achieving it; `perm[v]` is the
/// canonical position of vertex `v`. Two graphs on the same number of
/// vertices are isomorphic iff their keys are equal.
pub(crate) fn canonical_form(g: &SimpleGraph) -> (u64, Vec<u32>) {
    let n = g.vertex_count();
    assert!(
        n <= MAX_CANON_VERTICES,
        "canonical form is brute-force; {n} vertices exceeds the supported {MAX_CANON_VERTICES}"
    );
    let edges: Vec<(u8, u8)> = g
        .edges()
        .map(|(u, v)| (u.index() as u8, v.index() as u8))
        .collect();

    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut best_key = u64::MAX;
    let mut best_perm = perm.clone();
    loop {
        let mut key = 0u64;
        for &(u, v) in &edges {
            let (a, b) = (perm[u as usize], perm[v as usize]);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            key |= 1u64 << (lo * 8 + hi);
        }
        if key < best_key {
            best_key = key;
            best_perm.copy_from_slice(&perm);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (best_key, best_perm.into_iter().map(u32::from).collect())
}

pub(crate) fn canonical_key(g: &SimpleGraph) -> u64 {
    canonical_form(g).0
}

/// Advance to the next permutation in lexicographic order; false after the
/// last one.
fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    #[test]
    fn relabelings_share_a_key_and_distinct_shapes_do_not() {
        let path = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let path_shuffled = SimpleGraph::from_edges(4, &[(2, 0), (3, 1), (0, 3)]).unwrap();
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_key(&path), canonical_key(&path_shuffled));
        assert_ne!(canonical_key(&path), canonical_key(&star));
    }

    #[test]
    fn permutation_transports_onto_the_canonical_graph() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)])
            .unwrap();
        let (key, perm) = canonical_form(&g);
        // Rebuild the graph at canonical positions; its identity mask must
        // equal the key.
        let relabeled: Vec<(usize, usize)> = g
            .edges()
            .map(|(u, v)| (perm[u.index()] as usize, perm[v.index()] as usize))
            .collect();
        let h = SimpleGraph::from_edges(5, &relabeled).unwrap();
        let mut mask = 0u64;
        for (u, v) in h.edges() {
            mask |= 1u64 << (u.index() * 8 + v.index());
        }
        assert_eq!(mask, key);
    }

    #[test]
    fn next_permutation_walks_all_orderings() {
        let mut p = [0u8, 1, 2];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(p, [2, 1, 0]);
    }
}
