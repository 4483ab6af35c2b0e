//! Exhaustive unlabeled enumeration of small graphs by one-vertex
//! augmentation with isomorphism deduplication. Supplies the audit corpora:
//! every graph on up to 8 vertices, and every bipartite graph on up to 10,
//! are within easy reach.
//!
//! Every graph on k+1 vertices contains a graph on k vertices as an induced
//! subgraph (delete any vertex), so extending each k-vertex graph by one new
//! vertex with every possible neighbourhood reaches everything; duplicates
//! are removed per invariant bucket with the exact isomorphism test.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::iso::{invariant_signature, is_isomorphic};

fn extend(g: &Graph, mask: u64) -> Graph {
    let n = g.n();
    let mut out = crate::graph::add_isolated(g);
    for v in 0..n {
        if mask >> v & 1 == 1 {
            out.set_edge(v, n);
        }
    }
    out
}

fn dedupe_push(
    buckets: &mut HashMap<Vec<u8>, Vec<usize>>,
    level: &mut Vec<Graph>,
    candidate: Graph,
) {
    let key = invariant_signature(&candidate);
    let entries = buckets.entry(key).or_default();
    for &idx in entries.iter() {
        if is_isomorphic(&level[idx], &candidate).expect("orders within the iso limit") {
            return;
        }
    }
    entries.push(level.len());
    level.push(candidate);
}

fn enumerate_levels(max_n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    assert!(
        (1..=12).contains(&max_n),
        "enumeration is meant for small orders"
    );
    let mut levels: Vec<Vec<Graph>> = vec![Vec::new(); max_n + 1];
    levels[1].push(Graph::new(1).expect("order 1"));
    for k in 1..max_n {
        let mut next: Vec<Graph> = Vec::new();
        let mut buckets: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
        let parents = std::mem::take(&mut levels[k]);
        for parent in &parents {
            for mask in 0u64..(1u64 << k) {
                let candidate = extend(parent, mask);
                if keep(&candidate) {
                    dedupe_push(&mut buckets, &mut next, candidate);
                }
            }
        }
        levels[k] = parents;
        levels[k + 1] = next;
    }
    levels
}

/// All unlabeled graphs of each order 1..=max_n (index = order).
pub fn all_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    enumerate_levels(max_n, |_| true)
}

/// All unlabeled bipartite graphs of each order 1..=max_n. Bipartiteness is
/// hereditary, so the augmentation may filter at every level.
pub fn bipartite_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    enumerate_levels(max_n, |g| g.bipartition().is_some())
}

/// The connected graphs of one level.
pub fn connected_only(level: &[Graph]) -> Vec<&Graph> {
    level.iter().filter(|g| g.is_connected()).collect()
}
