//! Shared test support: a plain backtracking Hamiltonicity oracle kept
//! deliberately independent of the subset-DP implementation it cross-checks,
//! plus random graph generation and witness validation.
//!
//! Each test target compiles this module separately and none uses all of it.
#![allow(dead_code)]

use qdham_core::graph::Graph;
use rand::Rng;

/// Recursive backtracking: extend a partial path until every vertex is used.
fn extend_path(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], close_to: Option<usize>) -> bool {
    if path.len() == g.n() {
        return match close_to {
            Some(start) => g.has_edge(*path.last().unwrap(), start),
            None => true,
        };
    }
    let last = *path.last().unwrap();
    for v in 0..g.n() {
        if !used[v] && g.has_edge(last, v) {
            used[v] = true;
            path.push(v);
            if extend_path(g, path, used, close_to) {
                return true;
            }
            path.pop();
            used[v] = false;
        }
    }
    false
}

pub fn backtrack_hamilton_cycle(g: &Graph) -> bool {
    if g.n() < 3 {
        return false;
    }
    let mut used = vec![false; g.n()];
    used[0] = true;
    extend_path(g, &mut vec![0], &mut used, Some(0))
}

pub fn backtrack_hamilton_path(g: &Graph) -> bool {
    if g.n() == 1 {
        return true;
    }
    for start in 0..g.n() {
        let mut used = vec![false; g.n()];
        used[start] = true;
        if extend_path(g, &mut vec![start], &mut used, None) {
            return true;
        }
    }
    false
}

pub fn backtrack_hamilton_path_between(g: &Graph, u: usize, v: usize) -> bool {
    // walk from u and accept only completions ending at v
    fn go(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], target: usize) -> bool {
        if path.len() == g.n() {
            return *path.last().unwrap() == target;
        }
        let last = *path.last().unwrap();
        for w in 0..g.n() {
            if !used[w] && g.has_edge(last, w) {
                if w == target && path.len() != g.n() - 1 {
                    continue;
                }
                used[w] = true;
                path.push(w);
                if go(g, path, used, target) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    let mut used = vec![false; g.n()];
    used[u] = true;
    go(g, &mut vec![u], &mut used, v)
}

/// Random graph with each edge present with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Random connected graph by rejection sampling.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn validate_cycle_witness(g: &Graph, w: &[usize]) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    w.len() == n
        && w.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && w.windows(2).all(|e| g.has_edge(e[0], e[1]))
        && g.has_edge(w[n - 1], w[0])
}

pub fn validate_path_witness(g: &Graph, w: &[usize]) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    w.len() == n
        && w.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && w.windows(2).all(|e| g.has_edge(e[0], e[1]))
}
