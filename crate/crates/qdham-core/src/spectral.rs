//! Spectral radius of the distance signless Laplacian by power iteration,
//! the two lower bounds used by the sufficient conditions, distance-equitable
//! quotient matrices, and the closed-form characteristic cubics of the two
//! parametrized exception families.

use crate::error::{Error, Result};
use crate::family::ExceptionFamily;
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, qd_matrix, DistanceData, QdMatrix};

/// Default residual tolerance of the power iteration.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Iteration cap before giving up with a no-convergence error.
pub const MAX_ITERATIONS: usize = 100_000;

/// Converged dominant-eigenpair estimate.
///
/// `vector` is unit 2-norm with strictly positive entries (Perron vector of a
/// connected graph); `residual` is the max norm of Q x - rho x.
#[derive(Debug, Clone)]
pub struct SpectralEstimate {
    pub rho: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

fn matvec(q: &QdMatrix, x: &[f64], y: &mut [f64]) {
    for (i, out) in y.iter_mut().enumerate() {
        *out = q.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
    }
}

/// Power iteration on Q with a fixed all-ones start. Q is entrywise
/// nonnegative and irreducible for connected graphs, so the dominant
/// eigenvalue is simple and the iteration converges; the Rayleigh quotient
/// supplies the eigenvalue estimate and the residual the stopping test.
pub fn spectral_radius(q: &QdMatrix, tol: f64) -> Result<SpectralEstimate> {
    spectral_radius_from(q, &vec![1.0; q.n], tol)
}

/// Same iteration from an explicit start vector (must not be orthogonal to
/// the Perron vector; any entrywise-positive start qualifies).
pub fn spectral_radius_from(q: &QdMatrix, start: &[f64], tol: f64) -> Result<SpectralEstimate> {
    let n = q.n;
    assert_eq!(start.len(), n, "start vector length mismatch");
    if n == 1 {
        // Q of a single vertex is the 1x1 zero matrix.
        return Ok(SpectralEstimate {
            rho: q.at(0, 0),
            vector: vec![1.0],
            residual: 0.0,
            iterations: 0,
        });
    }
    let norm = |v: &[f64]| v.iter().map(|a| a * a).sum::<f64>().sqrt();
    let mut x: Vec<f64> = start.to_vec();
    let s = norm(&x);
    if s == 0.0 {
        return Err(Error::InvalidParameter("start vector is zero".into()));
    }
    x.iter_mut().for_each(|a| *a /= s);
    let mut y = vec![0.0; n];
    let mut best_rho = 0.0;
    let mut best_residual = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        matvec(q, &x, &mut y);
        let rho: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let mut residual = 0.0f64;
        for i in 0..n {
            residual = residual.max((y[i] - rho * x[i]).abs());
        }
        if residual <= tol {
            return Ok(SpectralEstimate {
                rho,
                vector: x,
                residual,
                iterations: it,
            });
        }
        if residual < best_residual {
            best_residual = residual;
            best_rho = rho;
        }
        let s = norm(&y);
        for i in 0..n {
            x[i] = y[i] / s;
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        best_rho,
        residual: best_residual,
    })
}

/// Convenience: distances, Q matrix, and the spectral radius of a connected
/// graph at the default tolerance.
pub fn rho_d(g: &Graph) -> Result<SpectralEstimate> {
    let d = all_pairs_distances(g)?;
    spectral_radius(&qd_matrix(&d), DEFAULT_TOL)
}

/// Lower bound on the spectral radius of any connected bipartite graph of the
/// given total order: 3n - 4 for even n, (5n - 8 + sqrt(n^2 + 8)) / 2 for odd.
pub fn lower_bound_bipartite(order: usize) -> Result<f64> {
    if order < 2 {
        return Err(Error::InvalidParameter(
            "bipartite bound needs order >= 2".into(),
        ));
    }
    let n = order as f64;
    Ok(if order.is_multiple_of(2) {
        3.0 * n - 4.0
    } else {
        (5.0 * n - 8.0 + (n * n + 8.0).sqrt()) / 2.0
    })
}

/// Lower bound 4 sigma / n; attained exactly by transmission-regular graphs.
pub fn lower_bound_sigma(d: &DistanceData) -> f64 {
    4.0 * d.sigma as f64 / d.n() as f64
}

/// Quotient of Q over a distance-equitable ordered partition. Entry (i, j) is
/// the distance sum from any vertex of class i into class j, plus the class
/// transmission on the diagonal. Equitability is checked, not assumed.
#[derive(Debug, Clone)]
pub struct PartitionQuotient {
    pub classes: Vec<Vec<usize>>,
    pub k: usize,
    b: Vec<f64>,
}

impl PartitionQuotient {
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.b[i * self.k + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.b[i * self.k..(i + 1) * self.k]
    }

    /// Perron root of the (entrywise nonnegative, irreducible) quotient.
    /// Because class-constant vectors lift eigenvectors of the quotient to
    /// eigenvectors of Q, and the lifted Perron vector is positive, this
    /// equals the spectral radius of the full matrix.
    pub fn largest_eigenvalue(&self, tol: f64) -> Result<f64> {
        let k = self.k;
        if k == 1 {
            return Ok(self.b[0]);
        }
        let mut x = vec![1.0; k];
        let mut y = vec![0.0; k];
        let mut best = (0.0, f64::INFINITY);
        for it in 1..=MAX_ITERATIONS {
            for (i, out) in y.iter_mut().enumerate() {
                *out = self.row(i).iter().zip(&x).map(|(a, b)| a * b).sum();
            }
            let num: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
            let den: f64 = x.iter().map(|a| a * a).sum();
            let rho = num / den;
            let mut residual = 0.0f64;
            for i in 0..k {
                residual = residual.max((y[i] - rho * x[i]).abs());
            }
            let scale = y.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
            if residual <= tol * scale.max(1.0) {
                return Ok(rho);
            }
            if residual < best.1 {
                best = (rho, residual);
            }
            for i in 0..k {
                x[i] = y[i] / scale;
            }
            let _ = it;
        }
        Err(Error::NoConvergence {
            iterations: MAX_ITERATIONS,
            best_rho: best.0,
            residual: best.1,
        })
    }
}

/// Build and verify the quotient matrix for an ordered partition of the
/// vertex set. Every vertex must appear exactly once; for each pair of
/// classes (i, j) the distance sum into class j must be constant over class i
/// (violations report the offending class pair and two witnesses).
pub fn quotient_matrix(d: &DistanceData, classes: &[Vec<usize>]) -> Result<PartitionQuotient> {
    let n = d.n();
    let k = classes.len();
    let mut seen = vec![false; n];
    for class in classes {
        if class.is_empty() {
            return Err(Error::InvalidParameter("empty partition class".into()));
        }
        for &v in class {
            if v >= n || seen[v] {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} missing from range or repeated in partition"
                )));
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::InvalidParameter(
            "partition does not cover the vertex set".into(),
        ));
    }

    let mut b = vec![0.0; k * k];
    for (i, class_i) in classes.iter().enumerate() {
        let rep = class_i[0];
        for (j, class_j) in classes.iter().enumerate() {
            let sum_for = |u: usize| -> u64 {
                class_j.iter().map(|&v| d.d(u, v) as u64).sum()
            };
            let s = sum_for(rep);
            for &u in &class_i[1..] {
                if sum_for(u) != s {
                    return Err(Error::NonEquitable {
                        class_u: i,
                        class_v: j,
                        u: rep,
                        v: u,
                    });
                }
            }
            b[i * k + j] = s as f64 + if i == j { d.tr[rep] as f64 } else { 0.0 };
        }
        // equal row distance sums imply equal transmissions inside the class,
        // so the diagonal formula is well defined once all (i, j) pass
        for &u in &class_i[1..] {
            if d.tr[u] != d.tr[rep] {
                return Err(Error::NonEquitable {
                    class_u: i,
                    class_v: i,
                    u: rep,
                    v: u,
                });
            }
        }
    }
    Ok(PartitionQuotient { classes: classes.to_vec(), k, b })
}

/// Monic cubic x^3 + c2 x^2 + c1 x + c0 with the critical points of its
/// derivative (when they are real).
#[derive(Debug, Clone, Copy)]
pub struct Cubic {
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
    /// Roots x1 <= x2 of the derivative, when the discriminant is nonnegative.
    pub critical: Option<(f64, f64)>,
}

impl Cubic {
    pub fn new(c2: f64, c1: f64, c0: f64) -> Cubic {
        // 3x^2 + 2 c2 x + c1 = 0  =>  x = (-c2 -+ sqrt(c2^2 - 3 c1)) / 3
        let disc = c2 * c2 - 3.0 * c1;
        let critical = (disc >= 0.0).then(|| {
            let r = disc.sqrt();
            ((-c2 - r) / 3.0, (-c2 + r) / 3.0)
        });
        Cubic { c2, c1, c0, critical }
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.c2) * x + self.c1) * x + self.c0
    }

    pub fn deriv(&self, x: f64) -> f64 {
        (3.0 * x + 2.0 * self.c2) * x + self.c1
    }
}

/// Characteristic cubic of the quotient matrix of the parametrized family
/// member on `n` vertices, in monic form:
///
/// * Hamilton-connected family, n >= 7:
///   x^3 - (5n-7) x^2 + (8n^2-31n+56) x - 4n^3 + 26n^2 - 82n + 80,
///   critical points (5n - 7 -+ sqrt(n^2 + 23n - 119)) / 3.
/// * traceable-from-every-vertex family, n >= 6:
///   x^3 - (5n-6) x^2 + (8n^2-28n+44) x - 4n^3 + 24n^2 - 68n + 64,
///   critical points (5n - 6 -+ sqrt(n^2 + 24n - 96)) / 3.
pub fn family_char_cubic(family: ExceptionFamily, n: usize) -> Result<Cubic> {
    let (min_n, what) = match family {
        ExceptionFamily::HamiltonConnected => (7, "Hamilton-connected family cubic"),
        ExceptionFamily::TraceableFromEveryVertex => (6, "traceable family cubic"),
    };
    if n < min_n {
        return Err(Error::InvalidParameter(format!(
            "{what} needs n >= {min_n}, got {n}"
        )));
    }
    let nf = n as f64;
    let cubic = match family {
        ExceptionFamily::HamiltonConnected => Cubic::new(
            -(5.0 * nf - 7.0),
            8.0 * nf * nf - 31.0 * nf + 56.0,
            -4.0 * nf * nf * nf + 26.0 * nf * nf - 82.0 * nf + 80.0,
        ),
        ExceptionFamily::TraceableFromEveryVertex => Cubic::new(
            -(5.0 * nf - 6.0),
            8.0 * nf * nf - 28.0 * nf + 44.0,
            -4.0 * nf * nf * nf + 24.0 * nf * nf - 68.0 * nf + 64.0,
        ),
    };
    if cubic.critical.is_none() {
        return Err(Error::Internal(format!(
            "{what} at n = {n} has no real critical points"
        )));
    }
    Ok(cubic)
}

/// The unique root right of the larger critical point x2, by safeguarded
/// Newton started from |c2| + 1 and bracketed inside (x2, start]. The target
/// residual is 1e-12 on the cubic; when rounding noise floors above that the
/// iteration stops once the bracket collapses to a few ulps.
pub fn largest_cubic_root(c: &Cubic) -> Result<f64> {
    let (x1, x2) = c.critical.ok_or_else(|| {
        Error::Bracketing("cubic has no real critical points".into())
    })?;
    let start = c.c2.abs() + 1.0;
    let f_lo = c.eval(x2);
    let f_hi = c.eval(start);
    if f_lo > 0.0 || f_hi < 0.0 || start <= x2 {
        return Err(Error::Bracketing(format!(
            "sign table: f({x1}) = {}, f({x2}) = {}, f({start}) = {}",
            c.eval(x1),
            f_lo,
            f_hi
        )));
    }
    let mut lo = x2;
    let mut hi = start;
    let mut x = start;
    for _ in 0..200 {
        let fx = c.eval(x);
        if fx.abs() <= 1e-12 {
            return Ok(x);
        }
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let dfx = c.deriv(x);
        let mut next = if dfx != 0.0 { x - fx / dfx } else { x };
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (hi - lo) <= 4.0 * f64::EPSILON * hi.abs().max(1.0) {
            return Ok(0.5 * (lo + hi));
        }
        x = next;
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, disjoint_union, empty, join, path};
    use crate::metric::is_transmission_regular;

    fn rho(g: &Graph) -> f64 {
        rho_d(g).unwrap().rho
    }

    #[test]
    fn complete_graph_closed_form() {
        // Q of K_n is (n-2) I + J, top eigenvalue 2n - 2
        for n in 2..=12usize {
            assert!((rho(&complete(n).unwrap()) - (2 * n - 2) as f64).abs() < 1e-9);
        }
        let est = rho_d(&complete(8).unwrap()).unwrap();
        assert!((est.rho - 14.0).abs() < 1e-9);
        assert!(est.vector.iter().all(|&x| x > 0.0));
        assert!(est.residual <= DEFAULT_TOL);
    }

    #[test]
    fn path3_value() {
        let expected = (7.0 + 17.0f64.sqrt()) / 2.0;
        assert!((rho(&path(3).unwrap()) - expected).abs() < 1e-9);
    }

    #[test]
    fn single_vertex_degenerate() {
        let est = rho_d(&complete(1).unwrap()).unwrap();
        assert_eq!(est.rho, 0.0);
    }

    #[test]
    fn join_clique_independent_is_18() {
        let g = join(&complete(4).unwrap(), &empty(4).unwrap());
        assert!((rho(&g) - 18.0).abs() < 1e-9);
    }

    #[test]
    fn bipartite_bound_values() {
        assert!(lower_bound_bipartite(1).is_err());
        assert!((lower_bound_bipartite(12).unwrap() - 32.0).abs() < 1e-12);
        // odd case at order 3 equals the path's spectral radius
        let b3 = lower_bound_bipartite(3).unwrap();
        assert!((b3 - (7.0 + 17.0f64.sqrt()) / 2.0).abs() < 1e-12);
        // balanced complete bipartite graphs attain the even bound
        for m in 2..=5usize {
            let g = complete_bipartite(m, m).unwrap();
            assert!((rho(&g) - (6 * m - 4) as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn sigma_bound_and_equality() {
        let d = all_pairs_distances(&cycle(6).unwrap()).unwrap();
        assert!((lower_bound_sigma(&d) - 18.0).abs() < 1e-12);
        assert!(is_transmission_regular(&d));
        assert!((rho(&cycle(6).unwrap()) - 18.0).abs() < 1e-9);

        // strict on the path
        let p = path(3).unwrap();
        let d = all_pairs_distances(&p).unwrap();
        assert!(rho(&p) > lower_bound_sigma(&d) + 0.1);
    }

    #[test]
    fn quotient_of_clique_join() {
        // K_4 v 4K_1 with classes (clique | independent): [[10, 4], [4, 16]]
        let g = join(&complete(4).unwrap(), &empty(4).unwrap());
        let d = all_pairs_distances(&g).unwrap();
        let q = quotient_matrix(&d, &[(0..4).collect(), (4..8).collect()]).unwrap();
        assert_eq!(q.row(0), &[10.0, 4.0]);
        assert_eq!(q.row(1), &[4.0, 16.0]);
        assert!((q.largest_eigenvalue(1e-12).unwrap() - 18.0).abs() < 1e-9);
    }

    #[test]
    fn quotient_rejects_non_equitable() {
        let g = path(4).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        let err = quotient_matrix(&d, &[vec![0, 1], vec![2, 3]]).unwrap_err();
        match err {
            Error::NonEquitable { u, v, .. } => assert_ne!(u, v),
            other => panic!("expected non-equitable, got {other:?}"),
        }
    }

    #[test]
    fn family_quotients_match_displayed_matrices() {
        // K_3 v (K_{n-5} + 2K_1), classes (K_3 | 2K_1 | K_{n-5})
        for n in 7..=12usize {
            let g = join(
                &complete(3).unwrap(),
                &disjoint_union(&complete(n - 5).unwrap(), &empty(2).unwrap()),
            );
            let d = all_pairs_distances(&g).unwrap();
            let classes = vec![
                (0..3).collect::<Vec<_>>(),
                (n - 2..n).collect(),
                (3..n - 2).collect(),
            ];
            let q = quotient_matrix(&d, &classes).unwrap();
            let nf = n as f64;
            assert_eq!(q.row(0), &[nf + 1.0, 2.0, nf - 5.0]);
            assert_eq!(q.row(1), &[3.0, 2.0 * nf - 3.0, 2.0 * nf - 10.0]);
            assert_eq!(q.row(2), &[3.0, 4.0, 2.0 * nf - 5.0]);
        }
        // K_2 v (K_{n-4} + 2K_1), classes (K_2 | 2K_1 | K_{n-4})
        for n in 6..=12usize {
            let g = join(
                &complete(2).unwrap(),
                &disjoint_union(&complete(n - 4).unwrap(), &empty(2).unwrap()),
            );
            let d = all_pairs_distances(&g).unwrap();
            let classes = vec![
                (0..2).collect::<Vec<_>>(),
                (n - 2..n).collect(),
                (2..n - 2).collect(),
            ];
            let q = quotient_matrix(&d, &classes).unwrap();
            let nf = n as f64;
            assert_eq!(q.row(0), &[nf, 2.0, nf - 4.0]);
            assert_eq!(q.row(1), &[2.0, 2.0 * nf - 2.0, 2.0 * nf - 8.0]);
            assert_eq!(q.row(2), &[2.0, 4.0, 2.0 * nf - 4.0]);
        }
    }

    #[test]
    fn cubic_coefficients_and_critical_points() {
        let c = family_char_cubic(ExceptionFamily::HamiltonConnected, 7).unwrap();
        assert_eq!((c.c2, c.c1, c.c0), (-28.0, 231.0, -592.0));
        let (_, x2) = c.critical.unwrap();
        assert!((x2 - (28.0 + 91.0f64.sqrt()) / 3.0).abs() < 1e-12);

        // direct determinant expansion of the displayed quotient at n = 6
        // gives x^3 - 24x^2 + 164x - 344
        let c = family_char_cubic(ExceptionFamily::TraceableFromEveryVertex, 6).unwrap();
        assert_eq!((c.c2, c.c1, c.c0), (-24.0, 164.0, -344.0));

        assert!(family_char_cubic(ExceptionFamily::HamiltonConnected, 6).is_err());
        assert!(family_char_cubic(ExceptionFamily::TraceableFromEveryVertex, 5).is_err());
    }

    #[test]
    fn largest_root_simple_cases() {
        // x^3 - 3x^2 has roots {0, 0, 3} and x2 = 2
        let c = Cubic::new(-3.0, 0.0, 0.0);
        assert!((largest_cubic_root(&c).unwrap() - 3.0).abs() < 1e-10);

        // family cubic at n = 6 matches the direct eigensolve of the built graph
        let c = family_char_cubic(ExceptionFamily::TraceableFromEveryVertex, 6).unwrap();
        let root = largest_cubic_root(&c).unwrap();
        let g = join(
            &complete(2).unwrap(),
            &disjoint_union(&complete(2).unwrap(), &empty(2).unwrap()),
        );
        assert!((root - rho(&g)).abs() < 1e-8);
        // and clears the traceability threshold (2n^2 + 6n - 28) / n = 80/6
        assert!(root > 80.0 / 6.0);
    }

    #[test]
    fn roots_exceed_thresholds() {
        // threshold (2n^2 + 6n - 36)/n at n = 7 is 104/7, and the family
        // cubic evaluates negative there, so the root lies to its right
        let c = family_char_cubic(ExceptionFamily::HamiltonConnected, 7).unwrap();
        let thr = 104.0 / 7.0;
        assert!(c.eval(thr) < 0.0);
        assert!(largest_cubic_root(&c).unwrap() > thr);
    }
}
