//! All-pairs hop distances, per-vertex transmissions, the total transmission
//! sigma, and assembly of the distance signless Laplacian matrix
//! Q = diag(transmissions) + D.
//!
//! Distances stay exact integers; conversion to floating point happens only
//! when the Q matrix is built for spectral work.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact distance data of a connected graph: the n x n hop-distance matrix,
/// the transmission (row sum) of every vertex, and sigma = half the sum of
/// all transmissions.
#[derive(Debug, Clone)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>,
    pub tr: Vec<u64>,
    pub sigma: u64,
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn d(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn max_transmission(&self) -> u64 {
        *self.tr.iter().max().expect("n >= 1")
    }

    pub fn min_transmission(&self) -> u64 {
        *self.tr.iter().min().expect("n >= 1")
    }
}

/// BFS from every vertex. Disconnected input is a hard error naming an
/// unreached pair; callers that may face disconnected graphs (complement
/// arguments in particular) must test connectivity first.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceData> {
    let n = g.n();
    let mut dist = vec![0u32; n * n];
    let mut tr = vec![0u64; n];
    for u in 0..n {
        let row = g.bfs_distances(u);
        for v in 0..n {
            if row[v] == u32::MAX {
                return Err(Error::Disconnected { u, v });
            }
            dist[u * n + v] = row[v];
            tr[u] += row[v] as u64;
        }
    }
    let total: u64 = tr.iter().sum();
    debug_assert_eq!(total % 2, 0);
    Ok(DistanceData {
        n,
        dist,
        sigma: total / 2,
        tr,
    })
}

/// Dense symmetric distance signless Laplacian, entries as f64.
#[derive(Debug, Clone)]
pub struct QdMatrix {
    pub n: usize,
    q: Vec<f64>,
}

impl QdMatrix {
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.q[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.q[i * self.n..(i + 1) * self.n]
    }

    pub fn max_diagonal(&self) -> f64 {
        (0..self.n).map(|i| self.at(i, i)).fold(f64::MIN, f64::max)
    }
}

/// Q[i][i] = Tr(i), Q[i][j] = d(i, j) for i != j.
pub fn qd_matrix(d: &DistanceData) -> QdMatrix {
    let n = d.n();
    let mut q = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            q[i * n + j] = if i == j {
                d.tr[i] as f64
            } else {
                d.d(i, j) as f64
            };
        }
    }
    QdMatrix { n, q }
}

pub fn is_transmission_regular(d: &DistanceData) -> bool {
    d.tr.iter().all(|&t| t == d.tr[0])
}

/// Per-vertex slack of Tr(v) >= 2(n-1) - deg(v); zero exactly when v reaches
/// every other vertex within two hops.
pub fn degree_transmission_slack(g: &Graph, d: &DistanceData) -> Vec<i64> {
    let n = g.n() as i64;
    (0..g.n())
        .map(|v| d.tr[v] as i64 - (2 * (n - 1) - g.degree(v) as i64))
        .collect()
}
