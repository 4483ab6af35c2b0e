//! Undirected simple graphs as bit-row adjacency, plus the constructors used
//! throughout the crate (complete graphs, joins, unions, complements, ...).
//!
//! Vertex labelling of every constructor is canonical and documented on the
//! constructor itself; `join` lists the first operand's vertices before the
//! second's, so positional vertex classes of composite graphs are predictable.
//! Nothing downstream depends on labels for correctness, only for convenience
//! (quotient partitions are derived positionally).

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Undirected simple graph on vertices `0..n`, adjacency stored as one bit row
/// per vertex. Rows are kept symmetric and the diagonal is always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Empty graph on `n` vertices. `n = 0` is rejected.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph order must be at least 1".into(),
            ));
        }
        let words = n.div_ceil(WORD_BITS);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    /// Graph from an explicit edge list. Duplicate edges are collapsed,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter_map(move |v| {
            self.has_edge(u, v).then_some((u, v))
        }))
    }

    pub fn edge_count(&self) -> u64 {
        let deg_sum: u64 = (0..self.n).map(|u| self.degree(u) as u64).sum();
        deg_sum / 2
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// Complement within the same vertex set; an involution at the bit level.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("order preserved");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Hop distances from `src`; unreachable vertices get `u32::MAX`.
    pub(crate) fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::with_capacity(self.n);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for v in self.neighbors(u) {
                if dist[v] == u32::MAX {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != u32::MAX)
    }

    /// Two-colouring; `None` when the graph has an odd cycle. Works per
    /// component, the lowest unvisited vertex of each component goes to `x`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let x: Vec<usize> = (0..self.n).filter(|&v| color[v] == 0).collect();
        let y: Vec<usize> = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some(Bipartition { x, y })
    }

    /// Copy with the labels of `a` and `b` exchanged.
    pub(crate) fn swap_labels(&self, a: usize, b: usize) -> Graph {
        let map = |v: usize| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        };
        let mut g = Graph::new(self.n).expect("order preserved");
        for (u, v) in self.edges() {
            g.set_edge(map(u), map(v));
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// A two-colouring of the vertex set: every edge joins `x` to `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

/// Edge count, minimum degree, connectivity, and bipartition (when one exists).
#[derive(Debug, Clone)]
pub struct BasicStats {
    pub m: u64,
    pub min_degree: usize,
    pub connected: bool,
    pub bipartition: Option<Bipartition>,
}

pub fn basic_stats(g: &Graph) -> BasicStats {
    BasicStats {
        m: g.edge_count(),
        min_degree: g.min_degree(),
        connected: g.is_connected(),
        bipartition: g.bipartition(),
    }
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v);
        }
    }
    Ok(g)
}

/// Edgeless graph on `n >= 1` vertices.
pub fn empty(n: usize) -> Result<Graph> {
    Graph::new(n)
}

/// Path v0 - v1 - ... - v{n-1}.
pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n.saturating_sub(1) {
        g.set_edge(u, u + 1);
    }
    Ok(g)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut g = path(n)?;
    g.set_edge(n - 1, 0);
    Ok(g)
}

/// Star with `k >= 1` leaves: vertex 0 is the centre, order is k + 1.
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("star needs at least 1 leaf".into()));
    }
    let mut g = Graph::new(k + 1)?;
    for v in 1..=k {
        g.set_edge(0, v);
    }
    Ok(g)
}

/// Complete bipartite graph; part of size `a` gets labels `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(
            "complete bipartite parts must be nonempty".into(),
        ));
    }
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.set_edge(u, v);
        }
    }
    Ok(g)
}

/// Disjoint union: `g1`'s vertices keep their labels, `g2`'s are shifted up.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.n();
    let mut g = Graph::new(n1 + g2.n()).expect("orders are positive");
    for (u, v) in g1.edges() {
        g.set_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.set_edge(n1 + u, n1 + v);
    }
    g
}

/// Join: disjoint union plus all edges between the two vertex sets.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.n();
    let mut g = disjoint_union(g1, g2);
    for u in 0..n1 {
        for v in n1..n1 + g2.n() {
            g.set_edge(u, v);
        }
    }
    g
}

/// `k >= 1` disjoint copies of `g`.
pub fn replicate(k: usize, g: &Graph) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "replication count must be at least 1".into(),
        ));
    }
    let mut out = g.clone();
    for _ in 1..k {
        out = disjoint_union(&out, g);
    }
    Ok(out)
}

/// One new vertex (label n) joined to vertex 0 by a pendant edge.
pub fn add_pendant(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::new(n + 1).expect("order grows");
    for (u, v) in g.edges() {
        out.set_edge(u, v);
    }
    out.set_edge(0, n);
    out
}

/// One new isolated vertex (label n).
pub fn add_isolated(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::new(n + 1).expect("order grows");
    for (u, v) in g.edges() {
        out.set_edge(u, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert!(complete(0).is_err());
        let k1 = complete(1).unwrap();
        assert_eq!(k1.edge_count(), 0);
        let k4 = complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!((0..4).all(|v| k4.degree(v) == 3));
    }

    #[test]
    fn union_and_join_counts() {
        let k1 = complete(1).unwrap();
        let two_k1 = disjoint_union(&k1, &k1);
        assert_eq!(two_k1.edge_count(), 0);
        assert_eq!(two_k1.n(), 2);

        // K_2 + 2K_1 on 4 vertices has a single edge.
        let g = disjoint_union(&complete(2).unwrap(), &empty(2).unwrap());
        assert_eq!((g.n(), g.edge_count()), (4, 1));

        let five_k1 = replicate(5, &k1).unwrap();
        assert_eq!((five_k1.n(), five_k1.edge_count()), (5, 0));
        let g = join(&five_k1, &complete(5).unwrap());
        assert_eq!((g.n(), g.edge_count()), (10, 10 + 25));

        // K_1 v (n-1)K_1 is the star.
        let s = join(&k1, &empty(6).unwrap());
        assert_eq!(s.degree(0), 6);
        assert_eq!(s.edge_count(), 6);

        // K_4 v 4K_1: m = 6 + 16 = 22.
        let g = join(&complete(4).unwrap(), &empty(4).unwrap());
        assert_eq!((g.n(), g.edge_count()), (8, 22));
    }

    #[test]
    fn complement_involution_and_cases() {
        let kn = complete(6).unwrap();
        let c = kn.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.complement(), kn);

        // complement of K_{n-1} + isolated vertex is the star K_{1,n-1}
        let g = add_isolated(&complete(4).unwrap());
        let c = g.complement();
        assert_eq!(c.n(), 5);
        assert_eq!(c.edge_count(), 4);
        assert_eq!(c.degree(4), 4);
    }

    #[test]
    fn pendant_and_isolated() {
        let g = add_isolated(&complete(4).unwrap());
        assert_eq!((g.n(), g.edge_count(), g.min_degree()), (5, 6, 0));
        assert!(!g.is_connected());

        let g = add_pendant(&complete(4).unwrap());
        assert_eq!((g.n(), g.edge_count(), g.min_degree()), (5, 7, 1));
        assert!(g.is_connected());
    }

    #[test]
    fn stats_and_bipartition() {
        let g = join(&complete(4).unwrap(), &empty(4).unwrap());
        let s = basic_stats(&g);
        assert_eq!((s.m, s.min_degree, s.connected), (22, 4, true));
        assert!(s.bipartition.is_none());

        let g = disjoint_union(&empty(1).unwrap(), &empty(1).unwrap());
        let s = basic_stats(&g);
        assert_eq!((s.m, s.min_degree, s.connected), (0, 0, false));

        let b = complete_bipartite(3, 4).unwrap().bipartition().unwrap();
        assert_eq!(b.x, vec![0, 1, 2]);
        assert_eq!(b.y, vec![3, 4, 5, 6]);

        assert!(cycle(5).unwrap().bipartition().is_none());
        assert!(cycle(6).unwrap().bipartition().is_some());
    }

    #[test]
    fn from_edges_validation() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }
}
