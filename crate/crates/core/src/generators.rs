//! Named graph families and fixture graphs.
//!
//! Index conventions (fixed, so examples can refer to vertices by name):
//!
//! | family | vertices |
//! |---|---|
//! | `path(len)` | `len + 1` vertices `0-1-..-len` |
//! | `cycle(n)`, `complete(n)`, `empty(n)` | `0..n` |
//! | `star(k)` | centre `0`, leaves `1..=k` |
//! | `complete_bipartite(m, n)` | parts `0..m` and `m..m+n` |
//! | `cube_q3` | `0..8`, adjacent iff the labels differ in one bit |
//! | `prism_c3p2` | triangles `{0,1,2}`, `{3,4,5}`, matching `i ~ i+3` |
//! | `tadpole(3, 4)` | `1,u,2,v,3,4 -> 0..6`: triangle `{0,1,2}`, tail `2-3-4-5`; `u = 1`, `v = 3` |
//! | `fig1` | `v = 0, x = 1, y = 2, z = 3`; edges `vx vy xy yz` |
//! | `fig3_g1` | path `a-b-x-c-d` with `x = 0, a = 1, b = 2, c = 3, d = 4` |
//! | `fig3_g2` | path `b-x-c` plus isolated `a`, `d`; `x = 0, b = 1, c = 2, a = 3, d = 4` |
//! | `half_join(m, n, ..)` | `A = 0..m`, `B = m..m+n` |
//! | `path_plus_clique(p, k)` | `x = 0`, `y = 1`, clique on `2..p+2` |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const TADPOLE_U: usize = 1;
pub const TADPOLE_V: usize = 3;
pub const FIG1_V: usize = 0;
pub const FIG1_X: usize = 1;
pub const FIG1_Y: usize = 2;
pub const FIG1_Z: usize = 3;
pub const FIG3_X: usize = 0;

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Graph::new(n, &edges)
}

pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// Path with `len` edges.
pub fn path(len: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..len).map(|i| (i, i + 1)).collect();
    Graph::new(len + 1, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Params(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// `K_{1,k}`.
pub fn star(k: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::new(k + 1, &edges)
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::Params("both parts of K_{m,n} must be non-empty".into()));
    }
    let edges: Vec<_> = (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j))).collect();
    Graph::new(m + n, &edges)
}

pub fn cube_q3() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            let w = v ^ 1 << bit;
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::new(8, &edges).expect("valid fixture")
}

pub fn prism_c3p2() -> Graph {
    Graph::new(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .expect("valid fixture")
}

/// Cycle on `0..k` closed through `k-1`, with a tail of `l - 1` further
/// vertices hanging off vertex `k - 1` (so the tail path, including its
/// attachment vertex, has `l` vertices).
pub fn tadpole(k: usize, l: usize) -> Result<Graph> {
    if k < 3 || l < 1 {
        return Err(Error::Params(format!("tadpole({k},{l}) needs k >= 3 and l >= 1")));
    }
    let n = k + l - 1;
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((k - 1..n - 1).map(|i| (i, i + 1)));
    Graph::new(n, &edges)
}

pub fn fig1() -> Graph {
    Graph::new(
        4,
        &[(FIG1_V, FIG1_X), (FIG1_V, FIG1_Y), (FIG1_X, FIG1_Y), (FIG1_Y, FIG1_Z)],
    )
    .expect("valid fixture")
}

/// The five-vertex path with `x` in the middle.
pub fn fig3_g1() -> Graph {
    Graph::new(5, &[(1, 2), (2, 0), (0, 3), (3, 4)]).expect("valid fixture")
}

/// A three-vertex path centred at `x` plus two isolated vertices.
pub fn fig3_g2() -> Graph {
    Graph::new(5, &[(1, 0), (0, 2)]).expect("valid fixture")
}

/// `A` (clique or independent, `m` vertices) and `B` (`n` vertices) joined
/// by exactly `mn/2` cross edges. With `n` even, `a_i` is joined to
/// `b_{(i n/2 + j) mod n}` for `j < n/2`; otherwise `m` is even and the same
/// rule runs with the roles of `A` and `B` swapped.
pub fn half_join(m: usize, n: usize, a_complete: bool, b_complete: bool) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::Params("half_join needs non-empty parts".into()));
    }
    if m % 2 == 1 && n % 2 == 1 {
        return Err(Error::Params(format!("half_join({m},{n}): one part size must be even")));
    }
    let a = |i: usize| i;
    let b = |j: usize| m + j;
    let mut edges = Vec::new();
    if a_complete {
        edges.extend((0..m).flat_map(|j| (0..j).map(move |i| (a(i), a(j)))));
    }
    if b_complete {
        edges.extend((0..n).flat_map(|j| (0..j).map(move |i| (b(i), b(j)))));
    }
    if n.is_multiple_of(2) {
        for i in 0..m {
            for j in 0..n / 2 {
                edges.push((a(i), b((i * (n / 2) + j) % n)));
            }
        }
    } else {
        for i in 0..n {
            for j in 0..m / 2 {
                edges.push((b(i), a((i * (m / 2) + j) % m)));
            }
        }
    }
    Graph::new(m + n, &edges)
}

pub fn half_join_parts(m: usize, n: usize) -> Result<(VertexSet, VertexSet)> {
    let a = VertexSet::from_indices(m + n, &(0..m).collect::<Vec<_>>())?;
    Ok((a, a.complement()))
}

/// Edge `xy` plus a clique on `p` vertices; `x` is joined to the first
/// `edges_to_x` clique vertices and `y` to the rest.
pub fn path_plus_clique(p: usize, edges_to_x: usize) -> Result<Graph> {
    if edges_to_x > p {
        return Err(Error::Params(format!(
            "path_plus_clique: edges_to_x = {edges_to_x} exceeds p = {p}"
        )));
    }
    let mut edges = vec![(0, 1)];
    edges.extend((0..p).flat_map(|j| (0..j).map(move |i| (2 + i, 2 + j))));
    edges.extend((0..p).map(|i| (if i < edges_to_x { 0 } else { 1 }, 2 + i)));
    Graph::new(p + 2, &edges)
}

pub fn path_plus_clique_set(p: usize) -> Result<VertexSet> {
    VertexSet::from_indices(p + 2, &(2..p + 2).collect::<Vec<_>>())
}

/// Family names accepted by [`gen`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Empty,
    Path,
    Cycle,
    Star,
    CompleteBipartite,
    CubeQ3,
    PrismC3P2,
    Tadpole,
    Fig1,
    Fig3G1,
    Fig3G2,
    HalfJoin,
    PathPlusClique,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Complete,
        Family::Empty,
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::CompleteBipartite,
        Family::CubeQ3,
        Family::PrismC3P2,
        Family::Tadpole,
        Family::Fig1,
        Family::Fig3G1,
        Family::Fig3G2,
        Family::HalfJoin,
        Family::PathPlusClique,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::CompleteBipartite => "complete_bipartite",
            Family::CubeQ3 => "cube_q3",
            Family::PrismC3P2 => "prism_c3p2",
            Family::Tadpole => "tadpole",
            Family::Fig1 => "fig1",
            Family::Fig3G1 => "fig3_g1",
            Family::Fig3G2 => "fig3_g2",
            Family::HalfJoin => "half_join",
            Family::PathPlusClique => "path_plus_clique",
        }
    }

    /// Number of integer parameters.
    pub fn arity(self) -> usize {
        match self {
            Family::Complete | Family::Empty | Family::Path | Family::Cycle | Family::Star => 1,
            Family::CompleteBipartite | Family::Tadpole | Family::HalfJoin | Family::PathPlusClique => 2,
            Family::CubeQ3 | Family::PrismC3P2 | Family::Fig1 | Family::Fig3G1 | Family::Fig3G2 => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Params(format!("unknown family {s:?}")))
    }
}

/// Builds a family member. `half_join` takes its clique flags separately;
/// other families ignore them.
pub fn gen(family: Family, params: &[usize], a_complete: bool, b_complete: bool) -> Result<Graph> {
    if params.len() != family.arity() {
        return Err(Error::Params(format!(
            "{family} takes {} parameter(s), got {}",
            family.arity(),
            params.len()
        )));
    }
    match family {
        Family::Complete => complete(params[0]),
        Family::Empty => empty(params[0]),
        Family::Path => path(params[0]),
        Family::Cycle => cycle(params[0]),
        Family::Star => star(params[0]),
        Family::CompleteBipartite => complete_bipartite(params[0], params[1]),
        Family::CubeQ3 => Ok(cube_q3()),
        Family::PrismC3P2 => Ok(prism_c3p2()),
        Family::Tadpole => tadpole(params[0], params[1]),
        Family::Fig1 => Ok(fig1()),
        Family::Fig3G1 => Ok(fig3_g1()),
        Family::Fig3G2 => Ok(fig3_g2()),
        Family::HalfJoin => half_join(params[0], params[1], a_complete, b_complete),
        Family::PathPlusClique => path_plus_clique(params[0], params[1]),
    }
}
