//! Exact isomorphism testing for small graphs: invariant refinement
//! (degree, then the per-vertex multiset of BFS distances) followed by
//! backtracking over label assignments. Intended for the exception-family
//! checks, so the hard limit is deliberately small.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard order limit for the backtracking search.
pub const ISO_LIMIT: usize = 16;

/// Per-vertex refinement key: degree plus the sorted row of BFS distances
/// (unreachable encoded as 255, fine below the order limit).
pub(crate) fn vertex_keys(g: &Graph) -> Vec<Vec<u8>> {
    let n = g.n();
    (0..n)
        .map(|v| {
            let mut key = Vec::with_capacity(n + 1);
            key.push(g.degree(v) as u8);
            let mut row: Vec<u8> = g
                .bfs_distances(v)
                .iter()
                .map(|&d| if d == u32::MAX { 255 } else { d as u8 })
                .collect();
            row.sort_unstable();
            key.extend(row);
            key
        })
        .collect()
}

/// Whole-graph signature: the sorted multiset of vertex keys, flattened.
/// Equal signatures are necessary (not sufficient) for isomorphism; used as
/// a bucket key when deduplicating enumerated graphs.
pub fn invariant_signature(g: &Graph) -> Vec<u8> {
    let mut keys = vertex_keys(g);
    keys.sort_unstable();
    keys.concat()
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    mapping: Vec<usize>,
    used: u32,
}

impl Search<'_> {
    fn assign(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for idx in 0..self.candidates[u].len() {
            let w = self.candidates[u][idx];
            if self.used >> w & 1 == 1 {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&p| {
                self.g1.has_edge(u, p) == self.g2.has_edge(w, self.mapping[p])
            });
            if !consistent {
                continue;
            }
            self.mapping[u] = w;
            self.used |= 1 << w;
            if self.assign(depth + 1) {
                return true;
            }
            self.used &= !(1 << w);
        }
        false
    }
}

/// Exact test: does an adjacency-preserving bijection exist? Both graphs must
/// have order at most [`ISO_LIMIT`].
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    let n = g1.n();
    let limit = n.max(g2.n());
    if limit > ISO_LIMIT {
        return Err(Error::SizeLimit {
            what: "isomorphism test",
            n: limit,
            limit: ISO_LIMIT,
        });
    }
    if n != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }

    let k1 = vertex_keys(g1);
    let k2 = vertex_keys(g2);
    {
        let mut s1 = k1.clone();
        let mut s2 = k2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        if s1 != s2 {
            return Ok(false);
        }
    }

    // candidate targets share the refinement key
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).filter(|&w| k2[w] == k1[u]).collect())
        .collect();

    // rarest classes first, then grow along adjacency to bind constraints early
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&u| !placed[u])
            .min_by_key(|&u| {
                let attached = order.iter().filter(|&&p| g1.has_edge(u, p)).count();
                (usize::MAX - attached, candidates[u].len(), u)
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }

    let mut search = Search {
        g1,
        g2,
        order,
        candidates,
        mapping: vec![usize::MAX; n],
        used: 0,
    };
    Ok(search.assign(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, join, path, star, Graph};

    #[test]
    fn cycle5_self_complementary() {
        let c5 = cycle(5).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn star_vs_path() {
        assert!(!is_isomorphic(&star(3).unwrap(), &path(4).unwrap()).unwrap());
    }

    #[test]
    fn same_graph_two_constructions() {
        // K_2 v K_{2,4} built via join vs. assembled by explicit edges
        let a = join(&complete(2).unwrap(), &complete_bipartite(2, 4).unwrap());
        let mut edges = vec![(0usize, 1usize)];
        for u in [2, 3] {
            for v in [4, 5, 6, 7] {
                edges.push((u, v));
            }
        }
        for u in [0, 1] {
            for v in 2..8 {
                edges.push((u, v));
            }
        }
        // scramble the labels
        let perm = [5usize, 0, 3, 7, 1, 2, 6, 4];
        let scrambled: Vec<(usize, usize)> =
            edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let b = Graph::from_edges(8, &scrambled).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn respects_size_limit() {
        let g = complete(17).unwrap();
        assert!(matches!(
            is_isomorphic(&g, &g),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn disconnected_graphs_compare() {
        use crate::graph::{add_isolated, disjoint_union, empty};
        let a = add_isolated(&complete(4).unwrap());
        let b = disjoint_union(&empty(1).unwrap(), &complete(4).unwrap());
        assert!(is_isomorphic(&a, &b).unwrap());
        let c = disjoint_union(&empty(1).unwrap(), &star(3).unwrap());
        assert!(!is_isomorphic(&a, &c).unwrap());
    }
}
