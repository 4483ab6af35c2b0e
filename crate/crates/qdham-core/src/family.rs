//! The named graph families behind the exception clauses: the extremal
//! balanced bipartite graphs H(t, h), and the two finite-plus-parametrized
//! families of graphs that meet the edge-count bounds yet fail
//! Hamilton-connectivity (family one) or traceability from every vertex
//! (family two).

use crate::error::{Error, Result};
use crate::graph::{complete, complete_bipartite, disjoint_union, empty, join, star, Graph};

/// Balanced bipartite graph on parts of size `h`: part X = `0..h`, then the
/// fully-joined part Y1 = `h..2h-t`, then `t` extra vertices Y2, each adjacent
/// to the same first `t` vertices of X. Requires `1 <= t` and `h >= 2t`.
///
/// Edge count is h^2 - t*h + t^2 and the minimum degree is `t`; this is the
/// unique non-Hamiltonian graph at the balanced-bipartite edge bound.
pub fn build_h(t: usize, h: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParameter("build_h needs t >= 1".into()));
    }
    if h < 2 * t {
        return Err(Error::InvalidParameter(format!(
            "build_h needs part size >= 2t, got t = {t}, part size = {h}"
        )));
    }
    let mut g = Graph::new(2 * h)?;
    // X - Y1 complete
    for x in 0..h {
        for y in h..2 * h - t {
            g.set_edge(x, y);
        }
    }
    // each Y2 vertex attaches to the lexicographically first t vertices of X
    for y in 2 * h - t..2 * h {
        for x in 0..t {
            g.set_edge(x, y);
        }
    }
    Ok(g)
}

/// The two exception families, named by the property their members fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionFamily {
    /// Graphs meeting m >= C(n-2,2) + 6 that are not Hamilton-connected.
    HamiltonConnected,
    /// Graphs meeting m >= C(n-2,2) + 4 that are not traceable from every vertex.
    TraceableFromEveryVertex,
}

/// One family member: a display name plus the constructed graph.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub name: String,
    pub graph: Graph,
}

fn member(name: &str, graph: Graph) -> FamilyMember {
    FamilyMember {
        name: name.to_string(),
        graph,
    }
}

/// All members of the family having exactly `order` vertices, fixed members
/// first (in the family's definition order), then the parametrized member.
/// The parametrized members K_3 v (K_{n-5}+2K_1) and K_2 v (K_{n-4}+2K_1)
/// are emitted for n >= 7 and n >= 6 respectively, so the clique factor is
/// nonempty and the minimum-degree hypotheses (3 resp. 2) hold.
pub fn build_family(family: ExceptionFamily, order: usize) -> Vec<FamilyMember> {
    let mut out = Vec::new();
    let k = |n| complete(n).expect("n >= 1");
    let e = |n| empty(n).expect("n >= 1");
    let s = |l| star(l).expect("l >= 1");
    let kb = |a, b| complete_bipartite(a, b).expect("parts nonempty");
    match family {
        ExceptionFamily::HamiltonConnected => {
            match order {
                12 => out.push(member("K_6 v 6K_1", join(&k(6), &e(6)))),
                9 => out.push(member(
                    "K_4 v (K_2+3K_1)",
                    join(&k(4), &disjoint_union(&k(2), &e(3))),
                )),
                10 => {
                    out.push(member("5K_1 v K_5", join(&e(5), &k(5))));
                    out.push(member(
                        "K_4 v (K_{1,4}+K_1)",
                        join(&k(4), &disjoint_union(&s(4), &e(1))),
                    ));
                    out.push(member(
                        "K_4 v (K_{1,3}+K_2)",
                        join(&k(4), &disjoint_union(&s(3), &k(2))),
                    ));
                    out.push(member("K_3 v K_{2,5}", join(&k(3), &kb(2, 5))));
                }
                8 => {
                    out.push(member("K_4 v 4K_1", join(&k(4), &e(4))));
                    out.push(member(
                        "K_3 v (K_1+K_{1,3})",
                        join(&k(3), &disjoint_union(&e(1), &s(3))),
                    ));
                    out.push(member(
                        "K_3 v (K_{1,2}+K_2)",
                        join(&k(3), &disjoint_union(&s(2), &k(2))),
                    ));
                    out.push(member("K_2 v K_{2,4}", join(&k(2), &kb(2, 4))));
                }
                _ => {}
            }
            if order >= 7 {
                out.push(member(
                    &format!("K_3 v (K_{}+2K_1)", order - 5),
                    join(&k(3), &disjoint_union(&k(order - 5), &e(2))),
                ));
            }
        }
        ExceptionFamily::TraceableFromEveryVertex => {
            match order {
                11 => out.push(member("K_5 v 6K_1", join(&k(5), &e(6)))),
                8 => out.push(member(
                    "K_3 v (K_2+3K_1)",
                    join(&k(3), &disjoint_union(&k(2), &e(3))),
                )),
                9 => {
                    out.push(member("5K_1 v K_4", join(&e(5), &k(4))));
                    out.push(member(
                        "K_3 v (K_{1,4}+K_1)",
                        join(&k(3), &disjoint_union(&s(4), &e(1))),
                    ));
                    out.push(member(
                        "K_3 v (K_{1,3}+K_2)",
                        join(&k(3), &disjoint_union(&s(3), &k(2))),
                    ));
                    out.push(member("K_2 v K_{2,5}", join(&k(2), &kb(2, 5))));
                }
                7 => {
                    out.push(member("K_3 v 4K_1", join(&k(3), &e(4))));
                    out.push(member(
                        "K_2 v (K_1+K_{1,3})",
                        join(&k(2), &disjoint_union(&e(1), &s(3))),
                    ));
                    out.push(member(
                        "K_2 v (K_{1,2}+K_2)",
                        join(&k(2), &disjoint_union(&s(2), &k(2))),
                    ));
                    out.push(member("K_1 v K_{2,4}", join(&k(1), &kb(2, 4))));
                }
                _ => {}
            }
            if order >= 6 {
                out.push(member(
                    &format!("K_2 v (K_{}+2K_1)", order - 4),
                    join(&k(2), &disjoint_union(&k(order - 4), &e(2))),
                ));
            }
        }
    }
    debug_assert!(out.iter().all(|mb| mb.graph.n() == order));
    out
}
