//! End-to-end self-checks of the library's advertised guarantees, shared
//! by the `selftest` CLI subcommand (desk scale) and the acceptance test
//! target (full scale). Each check prints one line; the run passes only
//! if every check does.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::canonical_key;
use crate::graph::{MultiGraph, SimpleGraph, VertexId};
use crate::iso::{isomorphism_from_edge_map, multigraph_isomorphic};
use crate::linegraph::{geq1_line_graph, l1_line_graph};
use crate::oracle::{
    brute_force_roots, collapse_by_rewriting, enumerate_multigraphs, enumerate_simple_graphs,
    random_multigraph, RandomConstraints,
};
use crate::reconstruct::{
    is_delta0_free, is_generalized_line_graph, reconstruct_root, verify, LineMode,
    ReconstructError,
};
use crate::twins::{false_twin_partition, quotient, true_twin_partition, TwinKind};

/// How hard the self-checks work: `Desk` finishes in seconds for
/// interactive use, `Full` runs the acceptance-grade sample counts and
/// instance sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Desk,
    Full,
}

/// Run every check, printing one line per check to `out`. Returns whether
/// all of them passed.
pub fn run(scale: Scale, out: &mut dyn Write) -> bool {
    let checks: [(&str, fn(Scale) -> Result<String, String>); 8] = [
        ("one-share reconstruction is exact", check_one_share_exactness),
        ("at-least-one-share reconstruction is exact", check_at_least_one_share_exactness),
        ("small graphs are classified exactly in both modes", check_small_graph_classification),
        ("the triangle's root ambiguity is resolved canonically", check_triangle_ambiguity),
        ("graphs without roots are rejected", check_non_line_rejection),
        ("twin partitions match pairwise comparison", check_twin_partitions),
        ("reconstruction scales linearly", check_linear_scaling),
        ("generalized-line-graph detection returns qualifying roots", check_generalized_line_graphs),
    ];
    let mut all = true;
    for (i, (name, check)) in checks.iter().enumerate() {
        match check(scale) {
            Ok(detail) => {
                let _ = writeln!(out, "check {} ok   — {}: {}", i + 1, name, detail);
            }
            Err(why) => {
                all = false;
                let _ = writeln!(out, "check {} FAIL — {}: {}", i + 1, name, why);
            }
        }
    }
    all
}

/// Reconstruct a planted line graph and confirm the result: certificate
/// valid, line graph reproduced, canonical shape, and — via the planted
/// numbering, where input vertex v is root edge v — an explicit
/// isomorphism back to the planted root.
fn confirm_planted(root: &MultiGraph, mode: LineMode) -> Result<(), String> {
    let gamma = mode.line_graph(root);
    if gamma.vertex_count() == 0 || !gamma.is_connected() {
        return Err("planted instance unexpectedly empty or disconnected".into());
    }
    let result = reconstruct_root(&gamma, mode)
        .map_err(|e| format!("failed to reconstruct a planted line graph: {e}"))?;
    if !verify(&gamma, &result) {
        return Err("certificate failed verification".into());
    }
    match mode {
        LineMode::L1 => {
            if result.root.vertex_count() == 4 {
                return Err("one-share root landed on four vertices".into());
            }
        }
        LineMode::Geq1 => {
            if !is_delta0_free(&result.root) {
                return Err("at-least-one-share root kept a collapsible triple".into());
            }
        }
    }
    let canonical_planted = match mode {
        LineMode::L1 => root.vertex_count() != 4,
        LineMode::Geq1 => is_delta0_free(root),
    };
    if canonical_planted && root.vertex_count() >= 5 {
        // On five or more vertices every adjacency-preserving edge bijection
        // is induced by a vertex bijection, so the certificate's own edge
        // correspondence must lift to an isomorphism onto the planted root.
        let iso = isomorphism_from_edge_map(root, &result.root, &result.vertex_to_edge)
            .ok_or("could not exhibit an isomorphism onto the planted root")?;
        if !iso.is_valid(root, &result.root) {
            return Err("exhibited isomorphism failed validation".into());
        }
    } else if canonical_planted
        && mode == LineMode::Geq1
        && root.vertex_count() == 4
        && root.underlying_simple().edge_count() >= 5
    {
        // A four-vertex root over K4 or K4 minus an edge is a genuine
        // ambiguity: the line graph has symmetries no root isomorphism
        // induces, and sliding the parallel-class sizes along one changes
        // the root's isomorphism class without changing the line graph.
        // The underlying shape and the size multiset are still forced.
        if canonical_key(&root.underlying_simple())
            != canonical_key(&result.root.underlying_simple())
            || class_size_multiset(root) != class_size_multiset(&result.root)
        {
            return Err("four-vertex root lost its underlying shape or class sizes".into());
        }
    } else if canonical_planted {
        // Up to four vertices the edge correspondence itself may be one of
        // the exceptional non-induced bijections (K4 and K4 minus an edge
        // admit them), but the root is still unique up to relabeling.
        if multigraph_isomorphic(root, &result.root).is_none() {
            return Err("reconstructed root is not isomorphic to the planted root".into());
        }
    } else if mode == LineMode::L1 {
        // A four-vertex root is not canonical; it collapses onto the
        // triangle pooling opposite vertex pairs onto one side each.
        if multigraph_isomorphic(&four_vertex_collapse(root), &result.root).is_none() {
            return Err("four-vertex root did not collapse to the opposite-pair triangle".into());
        }
    }
    Ok(())
}

fn class_size_multiset(g: &MultiGraph) -> Vec<usize> {
    let mut sizes: Vec<usize> = g.parallel_classes().iter().map(|c| c.edges.len()).collect();
    sizes.sort_unstable();
    sizes
}

/// The triangle a connected four-vertex root collapses to in one-share
/// mode: each of the three opposite vertex pairs pools its multiplicities
/// onto one triangle side.
fn four_vertex_collapse(root: &MultiGraph) -> MultiGraph {
    let sum = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        root.multiplicity(VertexId::new(a), VertexId::new(b))
            + root.multiplicity(VertexId::new(c), VertexId::new(d))
    };
    let sides = [
        ((0, 1), sum((0, 1), (2, 3))),
        ((0, 2), sum((0, 2), (1, 3))),
        ((1, 2), sum((0, 3), (1, 2))),
    ];
    let mut pairs = Vec::new();
    for ((a, b), s) in sides {
        pairs.extend(std::iter::repeat((a, b)).take(s));
    }
    MultiGraph::from_edges(3, &pairs).expect("triangle sides are loop free")
}

fn exhaustive_planted_roots(scale: Scale) -> Vec<MultiGraph> {
    let (max_vertices, max_edges) = match scale {
        Scale::Desk => (4, 5),
        Scale::Full => (5, 6),
    };
    let mut roots = Vec::new();
    for n in 1..=max_vertices {
        for g in enumerate_multigraphs(n, max_edges, true).expect("within budget") {
            if g.edge_count() > 0 {
                roots.push(g);
            }
        }
    }
    roots
}

fn random_planted_root(seed: u64, mode: LineMode) -> MultiGraph {
    // Connected roots of varied size, up to fifty vertices and two hundred
    // edges; for the one-share flavor, resample until the line graph is
    // connected (an all-parallel root disconnects it).
    let mut sizes = ChaCha8Rng::seed_from_u64(seed ^ 0x706c_616e_7465_64);
    for attempt in 0..50 {
        let n = sizes.gen_range(2..=50);
        let m = sizes.gen_range(n - 1..=200);
        let root = random_multigraph(
            n,
            m.max(1),
            seed.wrapping_mul(1000).wrapping_add(attempt),
            RandomConstraints { connected: true, delta0_free: false },
        )
        .expect("satisfiable constraints");
        if mode == LineMode::Geq1 || l1_line_graph(&root).is_connected() {
            return root;
        }
    }
    unreachable!("a connected one-share instance always appears within the attempt budget")
}

fn check_one_share_exactness(scale: Scale) -> Result<String, String> {
    let roots = exhaustive_planted_roots(scale);
    let mut exhaustive = 0usize;
    for root in &roots {
        if !l1_line_graph(root).is_connected() {
            continue;
        }
        confirm_planted(root, LineMode::L1)?;
        exhaustive += 1;
    }
    let samples = match scale {
        Scale::Desk => 300,
        Scale::Full => 10_000,
    };
    for seed in 0..samples {
        let root = random_planted_root(seed as u64, LineMode::L1);
        confirm_planted(&root, LineMode::L1)?;
    }
    Ok(format!(
        "{exhaustive} exhaustive roots, {samples} planted roots up to 50 vertices / 200 edges"
    ))
}

fn check_at_least_one_share_exactness(scale: Scale) -> Result<String, String> {
    let roots = exhaustive_planted_roots(scale);
    let mut exhaustive = 0usize;
    for root in &roots {
        confirm_planted(root, LineMode::Geq1)?;
        // The iterated-rewriting oracle must land on the same canonical
        // form the pipeline produces.
        let gamma = geq1_line_graph(root);
        let pipeline = reconstruct_root(&gamma, LineMode::Geq1)
            .map_err(|e| format!("pipeline rejected a planted line graph: {e}"))?;
        let (rewritten, _) = collapse_by_rewriting(root)
            .map_err(|e| format!("rewriting rejected a planted root: {e}"))?;
        if !is_delta0_free(&rewritten) {
            return Err("rewriting stopped before a fixed point".into());
        }
        if multigraph_isomorphic(&rewritten, &pipeline.root).is_none() {
            return Err("rewriting and the pipeline disagree on the canonical form".into());
        }
        exhaustive += 1;
    }
    let samples = match scale {
        Scale::Desk => 300,
        Scale::Full => 10_000,
    };
    for seed in 0..samples {
        let root = random_planted_root(seed as u64, LineMode::Geq1);
        confirm_planted(&root, LineMode::Geq1)?;
    }
    Ok(format!(
        "{exhaustive} exhaustive roots cross-checked against rewriting, {samples} planted roots up to 50 vertices / 200 edges"
    ))
}

/// Everything known about the connected multigraph roots with exactly `k`
/// edges and up to seven vertices: the root and the canonical keys of both
/// of its line graphs.
struct RootClass {
    graph: MultiGraph,
    l1_key: u64,
    geq1_key: u64,
}

fn root_classes_with_edges(k: usize) -> Vec<RootClass> {
    let mut out = Vec::new();
    for n_root in 1..=7 {
        for g in enumerate_multigraphs(n_root, k, true).expect("within budget") {
            if g.edge_count() != k {
                continue;
            }
            let l1_key = canonical_key(&l1_line_graph(&g));
            let geq1_key = canonical_key(&geq1_line_graph(&g));
            out.push(RootClass { graph: g, l1_key, geq1_key });
        }
    }
    out
}

fn check_small_graph_classification(scale: Scale) -> Result<String, String> {
    let max_vertices = match scale {
        Scale::Desk => 5,
        Scale::Full => 6,
    };
    let mut classes_by_edge_count: Vec<Option<Vec<RootClass>>> =
        (0..=max_vertices).map(|_| None).collect();
    let mut line_graphs = 0usize;
    let mut non_line_graphs = 0usize;
    for n in 1..=max_vertices {
        let all = enumerate_simple_graphs(n, n * (n - 1) / 2, true).expect("within budget");
        let classes =
            classes_by_edge_count[n].get_or_insert_with(|| root_classes_with_edges(n));
        for gamma in all {
            let key = canonical_key(&gamma);
            for mode in [LineMode::L1, LineMode::Geq1] {
                let matching: Vec<&RootClass> = classes
                    .iter()
                    .filter(|c| match mode {
                        LineMode::L1 => c.l1_key == key,
                        LineMode::Geq1 => c.geq1_key == key,
                    })
                    .collect();
                let result = reconstruct_root(&gamma, mode);
                match (&result, matching.is_empty()) {
                    (Ok(_), true) => {
                        return Err(format!(
                            "accepted a {n}-vertex graph that brute force says has no root"
                        ))
                    }
                    (Err(_), false) => {
                        return Err(format!(
                            "rejected a {n}-vertex graph that brute force roots"
                        ))
                    }
                    _ => {}
                }
                match result {
                    Ok(result) => {
                        line_graphs += 1;
                        if !verify(&gamma, &result) {
                            return Err("certificate failed verification".into());
                        }
                        let canonical: Vec<&&RootClass> = matching
                            .iter()
                            .filter(|c| match mode {
                                LineMode::L1 => c.graph.vertex_count() != 4,
                                LineMode::Geq1 => is_delta0_free(&c.graph),
                            })
                            .collect();
                        if canonical.len() != 1 {
                            return Err(format!(
                                "expected exactly one canonical root, found {}",
                                canonical.len()
                            ));
                        }
                        if multigraph_isomorphic(&result.root, &canonical[0].graph).is_none() {
                            return Err("the pipeline root differs from the canonical class".into());
                        }
                    }
                    Err(ReconstructError::InvalidInput(_)) => {
                        return Err("a connected input was misreported as invalid".into())
                    }
                    Err(ReconstructError::NotLineGraph(_)) => non_line_graphs += 1,
                }
            }
        }
    }
    // Tie the sweep to the public exhaustive-search entry point on a few
    // fixed instances.
    let fixed: [(&str, SimpleGraph); 3] = [
        ("single vertex", SimpleGraph::from_edges(1, &[]).unwrap()),
        ("two-path", SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()),
        ("four-cycle", SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()),
    ];
    for (name, gamma) in &fixed {
        for mode in [LineMode::L1, LineMode::Geq1] {
            let brute = brute_force_roots(gamma, mode, 7).map_err(|e| e.to_string())?;
            let classes = classes_by_edge_count[gamma.vertex_count()]
                .get_or_insert_with(|| root_classes_with_edges(gamma.vertex_count()));
            let key = canonical_key(gamma);
            let expected = classes
                .iter()
                .filter(|c| match mode {
                    LineMode::L1 => c.l1_key == key,
                    LineMode::Geq1 => c.geq1_key == key,
                })
                .count();
            if brute.len() != expected {
                return Err(format!("exhaustive search disagrees with the sweep on the {name}"));
            }
        }
    }
    Ok(format!(
        "all connected graphs on up to {max_vertices} vertices: {line_graphs} rooted, {non_line_graphs} rejected, both modes"
    ))
}

fn check_triangle_ambiguity(_scale: Scale) -> Result<String, String> {
    let k3 = SimpleGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
    let roots = brute_force_roots(&k3, LineMode::L1, 4).map_err(|e| e.to_string())?;
    if roots.len() != 2 {
        return Err(format!("expected exactly two root classes, found {}", roots.len()));
    }
    let mut vertex_counts: Vec<usize> = roots.iter().map(|g| g.vertex_count()).collect();
    vertex_counts.sort_unstable();
    if vertex_counts != [3, 4] {
        return Err(format!("expected a three- and a four-vertex root, got {vertex_counts:?}"));
    }
    for root in &roots {
        let simple = root.parallel_classes().iter().all(|c| c.len() == 1);
        if !simple {
            return Err("a triangle root unexpectedly used parallel edges".into());
        }
    }
    let picked = reconstruct_root(&k3, LineMode::L1).map_err(|e| e.to_string())?;
    if picked.root.vertex_count() != 3 {
        return Err("the pipeline picked the four-vertex root".into());
    }
    Ok("two simple roots found; the three-vertex one is returned".into())
}

fn check_non_line_rejection(scale: Scale) -> Result<String, String> {
    // The four-star is the boundary case: rooted in one mode, rejected in
    // the other.
    let claw = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    if reconstruct_root(&claw, LineMode::L1).is_err() {
        return Err("the four-star must be rooted in one-share mode".into());
    }
    match reconstruct_root(&claw, LineMode::Geq1) {
        Err(ReconstructError::NotLineGraph(_)) => {}
        other => return Err(format!("expected a rejection of the four-star, got {other:?}")),
    }

    // Random connected graphs, classified by the exhaustive caches; every
    // graph certified rootless must be rejected with the right error.
    let samples = match scale {
        Scale::Desk => 200,
        Scale::Full => 1000,
    };
    let mut caches: Vec<Option<Vec<RootClass>>> = (0..7).map(|_| None).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut rejected = 0usize;
    for _ in 0..samples {
        let n = rng.gen_range(4..=6usize);
        let gamma = loop {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = SimpleGraph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                break g;
            }
        };
        let key = canonical_key(&gamma);
        let classes = caches[gamma.vertex_count()]
            .get_or_insert_with(|| root_classes_with_edges(gamma.vertex_count()));
        for mode in [LineMode::L1, LineMode::Geq1] {
            let has_root = classes.iter().any(|c| match mode {
                LineMode::L1 => c.l1_key == key,
                LineMode::Geq1 => c.geq1_key == key,
            });
            let result = reconstruct_root(&gamma, mode);
            if has_root != result.is_ok() {
                return Err("classification disagrees with exhaustive search".into());
            }
            if !has_root {
                rejected += 1;
                if !matches!(result, Err(ReconstructError::NotLineGraph(_))) {
                    return Err("a rootless graph was rejected with the wrong error".into());
                }
            }
        }
    }
    if rejected == 0 {
        return Err("the random sweep never produced a rootless graph".into());
    }
    Ok(format!("{samples} random graphs classified, {rejected} rootless cases rejected correctly"))
}

fn naive_partition_class_of(g: &SimpleGraph, kind: TwinKind) -> Vec<u32> {
    let n = g.vertex_count();
    let neighborhood = |v: usize| -> Vec<usize> {
        let mut set: Vec<usize> =
            g.neighbors(VertexId::new(v)).iter().map(|w| w.index()).collect();
        if kind == TwinKind::TrueTwins {
            set.push(v);
            set.sort_unstable();
        }
        set
    };
    let mut class_of = vec![u32::MAX; n];
    let mut next = 0u32;
    for v in 0..n {
        let nv = neighborhood(v);
        let mut assigned = None;
        for u in 0..v {
            if neighborhood(u) == nv {
                assigned = Some(class_of[u]);
                break;
            }
        }
        class_of[v] = assigned.unwrap_or_else(|| {
            next += 1;
            next - 1
        });
    }
    class_of
}

fn check_twin_partitions(scale: Scale) -> Result<String, String> {
    let samples = match scale {
        Scale::Desk => 200,
        Scale::Full => 1000,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for _ in 0..samples {
        let n = rng.gen_range(1..=8usize);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        let g = SimpleGraph::from_edges(n, &edges).unwrap();
        for kind in [TwinKind::FalseTwins, TwinKind::TrueTwins] {
            let partition = match kind {
                TwinKind::FalseTwins => false_twin_partition(&g),
                TwinKind::TrueTwins => true_twin_partition(&g),
            };
            if partition.class_of != naive_partition_class_of(&g, kind) {
                return Err("partition disagrees with pairwise comparison".into());
            }
            let quotiented = quotient(&g, partition);
            let requotiented = match kind {
                TwinKind::FalseTwins => false_twin_partition(&quotiented.graph),
                TwinKind::TrueTwins => true_twin_partition(&quotiented.graph),
            };
            if !requotiented.is_twin_free() {
                return Err("a quotient still contains twins".into());
            }
        }
    }
    Ok(format!("{samples} random graphs, both twin kinds, quotients twin-free"))
}

fn check_linear_scaling(scale: Scale) -> Result<String, String> {
    let (exponents, runs): (std::ops::RangeInclusive<u32>, usize) = match scale {
        Scale::Desk => (13..=16, 3),
        Scale::Full => (15..=20, 5),
    };
    let mut instances: Vec<SimpleGraph> = Vec::new();
    for k in exponents {
        let n = 1usize << (k - 3);
        let m = 1usize << (k - 2);
        let mut instance = None;
        for attempt in 0..20u64 {
            let root = random_multigraph(
                n,
                m,
                0xca11_0000 + u64::from(k) * 100 + attempt,
                RandomConstraints { connected: true, delta0_free: false },
            )
            .map_err(|e| e.to_string())?;
            let gamma = l1_line_graph(&root);
            if gamma.is_connected() {
                instance = Some(gamma);
                break;
            }
        }
        instances
            .push(instance.ok_or_else(|| format!("no connected instance near 2^{k} edges"))?);
    }
    // Interleave the timed rounds across sizes, after one untimed warm-up
    // round, so allocator growth and load spikes spread over every size
    // instead of biasing the largest doubling.
    let mut times: Vec<Vec<Duration>> = vec![Vec::with_capacity(runs); instances.len()];
    for round in 0..=runs {
        for (i, gamma) in instances.iter().enumerate() {
            let start = Instant::now();
            let result = reconstruct_root(gamma, LineMode::L1)
                .map_err(|e| format!("rejected a planted instance: {e}"))?;
            let elapsed = start.elapsed();
            std::hint::black_box(&result);
            if round > 0 {
                times[i].push(elapsed);
            }
        }
    }
    let mut rows: Vec<(usize, Duration)> = Vec::with_capacity(instances.len());
    for (gamma, per_size) in instances.iter().zip(&mut times) {
        per_size.sort_unstable();
        rows.push((gamma.edge_count(), per_size[per_size.len() / 2]));
    }
    for pair in rows.windows(2) {
        let (e0, t0) = pair[0];
        let (e1, t1) = pair[1];
        let ratio = t1.as_secs_f64() / t0.as_secs_f64().max(1e-9);
        // Small instances are too fast to time meaningfully; superlinear
        // growth would still be caught at the larger sizes.
        if ratio > 2.5 && t1 > Duration::from_millis(20) {
            return Err(format!(
                "time grew {ratio:.2}x while edges grew {e0} -> {e1}"
            ));
        }
    }
    let &(largest_edges, largest_time) = rows.last().expect("at least one size");
    if largest_time > Duration::from_secs(10) {
        return Err(format!(
            "{largest_edges} edges took {largest_time:?}, over the ten-second bound"
        ));
    }
    let summary: Vec<String> = rows
        .iter()
        .map(|(e, t)| format!("{e} edges in {:.1} ms", t.as_secs_f64() * 1e3))
        .collect();
    Ok(summary.join(", "))
}

fn check_generalized_line_graphs(_scale: Scale) -> Result<String, String> {
    let qualifies = |g: &MultiGraph| -> bool {
        g.parallel_classes().iter().all(|class| match class.len() {
            0 | 1 => true,
            2 => {
                let (u, v) = class.endpoints;
                g.degree(u) == 2 || g.degree(v) == 2
            }
            _ => false,
        })
    };
    let diamond = SimpleGraph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let root = is_generalized_line_graph(&diamond).ok_or("the diamond must qualify")?;
    if root.vertex_count() != 4 || !qualifies(&root) {
        return Err("the diamond's returned root does not satisfy the rules".into());
    }
    if canonical_key(&l1_line_graph(&root)) != canonical_key(&diamond) {
        return Err("the diamond's returned root has the wrong line graph".into());
    }
    // The paw is a qualifying certificate, so detection had real room to
    // succeed.
    let paw = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
    if !qualifies(&paw) || canonical_key(&l1_line_graph(&paw)) != canonical_key(&diamond) {
        return Err("the paw must certify the diamond".into());
    }
    let claw = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    if is_generalized_line_graph(&claw).is_some() {
        return Err("the four-star must not qualify".into());
    }
    let banner = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
    if is_generalized_line_graph(&banner).is_some() {
        return Err("a doubled edge between busy vertices must disqualify".into());
    }
    Ok("diamond accepted via a qualifying four-vertex root; four-star and banner rejected".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn desk_scale_passes() {
        let mut out = Vec::new();
        let passed = run(Scale::Desk, &mut out);
        let report = String::from_utf8(out).unwrap();
        assert!(passed, "desk-scale self-checks failed:\n{report}");
        assert_eq!(report.lines().count(), 8);
    }
}
