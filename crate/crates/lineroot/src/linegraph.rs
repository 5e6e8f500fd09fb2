//! Forward construction of the two line-graph flavors of a multigraph.
//!
//! Both graphs live on the multigraph's edges. In the *1-line graph* two
//! edges are adjacent when they share exactly one endpoint, so parallel
//! edges (which share two) are non-adjacent; in the *≥1-line graph* sharing
//! at least one endpoint suffices and parallel edges are adjacent. The two
//! constructions agree on simple multigraphs, where both reduce to the
//! classical line graph.
//!
//! These are the oracles against which root reconstruction is verified; they
//! run in O(Σ d(v)²) time, which is fine for the forward direction and is
//! not on the recognition path.

use crate::graph::{MultiGraph, SimpleGraph};

/// Line graph on `g`'s edges with adjacency "shares exactly one endpoint".
pub fn l1_line_graph(g: &MultiGraph) -> SimpleGraph {
    line_graph(g, false)
}

/// Line graph on `g`'s edges with adjacency "shares at least one endpoint".
pub fn geq1_line_graph(g: &MultiGraph) -> SimpleGraph {
    line_graph(g, true)
}

fn line_graph(g: &MultiGraph, parallels_adjacent: bool) -> SimpleGraph {
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for v in g.vertices() {
        let inc = g.incident_edges(v);
        for (i, &(e, _)) in inc.iter().enumerate() {
            for &(f, _) in &inc[i + 1..] {
                let parallel = g.endpoints(e) == g.endpoints(f);
                if parallel {
                    // A parallel pair shows up in both endpoint buckets; emit
                    // at most once, from the smaller endpoint.
                    if parallels_adjacent && g.endpoints(e).0 == v {
                        pairs.push((e.index() as u32, f.index() as u32));
                    }
                } else {
                    // Exactly one shared endpoint, namely v: this bucket is
                    // the only one containing the pair.
                    pairs.push((e.index() as u32, f.index() as u32));
                }
            }
        }
    }
    let pairs: Vec<(usize, usize)> = pairs
        .into_iter()
        .map(|(a, b)| (a as usize, b as usize))
        .collect();
    SimpleGraph::from_edges(g.edge_count(), &pairs)
        .expect("line-graph pairs are distinct edges by construction")
}
