//! Identity Seidel switches: subsets `S` with `S(G) ≅ G`.
//!
//! Membership is always decided by the direct oracle (canonical form of the
//! switched graph against that of `G`). The edge criterion in
//! [`edge_iss_theorem`] is evaluated independently and compared against the
//! oracle in every report.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{check_bound, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::{self, canonical_form, CanonicalForm, MAX_AUTOMORPHISM_ORDER};
use crate::switching::switch_mask;

/// Largest order for the `2^(n-1)` subset scan.
pub const MAX_FAMILY_ORDER: usize = 10;

/// Caches the canonical form of `G` so repeated membership tests only
/// canonicalize the switched graph.
struct Oracle<'a> {
    g: &'a Graph,
    form: CanonicalForm,
}

impl<'a> Oracle<'a> {
    fn new(g: &'a Graph) -> Result<Self> {
        Ok(Oracle {
            g,
            form: canonical_form(g)?,
        })
    }

    fn accepts(&self, mask: u64) -> bool {
        let switched = switch_mask(self.g, mask);
        switched.edge_count() == self.g.edge_count()
            && canonical_form(&switched).expect("order already checked") == self.form
    }
}

pub fn is_iss(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(Oracle::new(g)?.accepts(s.mask()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IssFamily {
    pub graph: Graph,
    /// Sorted by mask.
    pub members: Vec<VertexSet>,
    pub closed_under_delta: bool,
    /// First `(S, T, S Δ T)` with `S, T` members and `S Δ T` not a member,
    /// scanning member pairs in mask order.
    pub witness: Option<(VertexSet, VertexSet, VertexSet)>,
}

impl IssFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.members.binary_search(s).is_ok()
    }
}

/// All identity switches of `g`. Subsets avoiding vertex 0 are scanned and
/// each hit is paired with its complement, which switches identically.
pub fn iss_family(g: &Graph) -> Result<IssFamily> {
    let n = g.order();
    check_bound("iss_family", n, MAX_FAMILY_ORDER)?;
    let oracle = Oracle::new(g)?;
    let mut members = Vec::new();
    for half in 0..1u64 << (n - 1) {
        let mask = half << 1;
        if oracle.accepts(mask) {
            let s = VertexSet::from_mask(n, mask)?;
            members.push(s);
            members.push(s.complement());
        }
    }
    members.sort();
    let (closed_under_delta, witness) = delta_closure(&members);
    Ok(IssFamily {
        graph: g.clone(),
        members,
        closed_under_delta,
        witness,
    })
}

fn delta_closure(members: &[VertexSet]) -> (bool, Option<(VertexSet, VertexSet, VertexSet)>) {
    let masks: HashSet<u64> = members.iter().map(VertexSet::mask).collect();
    for (i, s) in members.iter().enumerate() {
        for t in &members[i + 1..] {
            let d = s.symmetric_difference(t);
            if !masks.contains(&d.mask()) {
                return (false, Some((*s, *t, d)));
            }
        }
    }
    (true, None)
}

/// Vertices `v` for which `{v}` is an identity switch.
pub fn vertex_iss_set(g: &Graph) -> Result<VertexSet> {
    let oracle = Oracle::new(g)?;
    let mask = (0..g.order())
        .filter(|&v| oracle.accepts(1 << v))
        .fold(0u64, |m, v| m | 1 << v);
    VertexSet::from_mask(g.order(), mask)
}

pub fn all_vertices_iss(g: &Graph) -> Result<bool> {
    Ok(vertex_iss_set(g)?.is_full())
}

/// Outcome of the minimum/maximum degree adjacency check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DeltaCheck {
    /// Not every vertex is a vertex-ISS.
    Vacuous,
    Holds,
    /// A minimum-degree vertex and a maximum-degree vertex that are not
    /// adjacent.
    Violated { min_vertex: usize, max_vertex: usize },
}

/// When every vertex is a vertex-ISS, every vertex of minimum degree must be
/// adjacent to every vertex of maximum degree.
pub fn check_delta_delta(g: &Graph) -> Result<DeltaCheck> {
    if !all_vertices_iss(g)? {
        return Ok(DeltaCheck::Vacuous);
    }
    let degrees = g.degrees();
    let lo = *degrees.iter().min().expect("order >= 1");
    let hi = *degrees.iter().max().expect("order >= 1");
    for x in (0..g.order()).filter(|&v| degrees[v] == lo) {
        for y in (0..g.order()).filter(|&v| degrees[v] == hi) {
            if x != y && !g.has_edge(x, y) {
                return Ok(DeltaCheck::Violated {
                    min_vertex: x,
                    max_vertex: y,
                });
            }
        }
    }
    Ok(DeltaCheck::Holds)
}

fn require_edge(g: &Graph, x: usize, y: usize) -> Result<()> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if g.has_edge(x, y) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(x, y))
    }
}

fn pair(g: &Graph, x: usize, y: usize) -> Result<VertexSet> {
    VertexSet::from_indices(g.order(), &[x, y])
}

/// Direct verdict: `{x, y}(G) ≅ G` for an edge `xy`.
pub fn edge_iss_direct(g: &Graph, x: usize, y: usize) -> Result<bool> {
    require_edge(g, x, y)?;
    is_iss(g, &pair(g, x, y)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeIssReport {
    pub edge: (usize, usize),
    /// Oracle verdict.
    pub direct: bool,
    /// `deg x + deg y == n`.
    pub condition_i: bool,
    /// Some automorphism of `H = G - {x, y}` maps `N(x) \ {y}` onto
    /// `V(H) \ N(y)`.
    pub condition_ii: bool,
    pub theorem_verdict: bool,
    pub agree: bool,
}

/// Evaluates the degree-sum and core-automorphism conditions for the edge
/// `xy` and compares their conjunction with the direct oracle.
pub fn edge_iss_theorem(g: &Graph, x: usize, y: usize) -> Result<EdgeIssReport> {
    require_edge(g, x, y)?;
    let n = g.order();
    check_bound("edge_iss_theorem", n.saturating_sub(2), MAX_AUTOMORPHISM_ORDER)?;
    let condition_i = g.degree(x)? + g.degree(y)? == n;
    let condition_ii = core_automorphism_exists(g, x, y)?;
    let theorem_verdict = condition_i && condition_ii;
    let direct = edge_iss_direct(g, x, y)?;
    Ok(EdgeIssReport {
        edge: (x.min(y), x.max(y)),
        direct,
        condition_i,
        condition_ii,
        theorem_verdict,
        agree: direct == theorem_verdict,
    })
}

fn core_automorphism_exists(g: &Graph, x: usize, y: usize) -> Result<bool> {
    let n = g.order();
    let core = pair(g, x, y)?.complement();
    if core.is_empty() {
        // H has no vertices; the empty map qualifies.
        return Ok(true);
    }
    let (h, map) = g.induced_subgraph(&core)?;
    let to_h = |s: VertexSet| -> Result<VertexSet> {
        let idx: Vec<usize> = s.intersection(&core).iter().filter_map(|v| map[v]).collect();
        VertexSet::from_indices(h.order(), &idx)
    };
    let from = to_h(g.neighborhood(x)?.remove(y))?;
    let to = to_h(core.intersection(&g.neighborhood(y)?.complement()))?;
    debug_assert_eq!(core.len(), n - 2);
    Ok(iso::find_automorphism_mapping(&h, &from, &to)?.is_some())
}

fn require_edge_iss(g: &Graph, x: usize, y: usize) -> Result<()> {
    if edge_iss_direct(g, x, y)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{{{x},{y}}} is not an edge-ISS")))
    }
}

/// For an edge-ISS `xy`: do `N(x) \ {y}` and `N(y) \ {x}` partition
/// `V(G) \ {x, y}`?
pub fn check_neighborhood_decomposition(g: &Graph, x: usize, y: usize) -> Result<bool> {
    require_edge_iss(g, x, y)?;
    let core = pair(g, x, y)?.complement();
    let a = g.neighborhood(x)?.remove(y);
    let b = g.neighborhood(y)?.remove(x);
    Ok(a.intersection(&b).is_empty() && a.union(&b) == core)
}

/// Does "xy is an edge-ISS of G" agree with "{x, y} is an ISS of G - xy"?
pub fn check_g_minus_e_remark(g: &Graph, x: usize, y: usize) -> Result<bool> {
    let direct = edge_iss_direct(g, x, y)?;
    let minus = g.without_edge(x, y)?;
    Ok(direct == is_iss(&minus, &pair(g, x, y)?)?)
}

/// `G` with the core `G - {x, y}` replaced by its complement; adjacencies
/// at `x` and `y` are kept.
pub fn complement_core(g: &Graph, x: usize, y: usize) -> Result<Graph> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    let core = pair(g, x, y)?.complement();
    let rows = g
        .rows()
        .iter()
        .enumerate()
        .map(|(v, &row)| {
            if core.contains(v) {
                row ^ (core.mask() & !(1 << v))
            } else {
                row
            }
        })
        .collect();
    Graph::from_rows(rows)
}

/// For an edge-ISS `xy`: is `xy` still an edge-ISS after complementing the
/// core?
pub fn check_core_complement_corollary(g: &Graph, x: usize, y: usize) -> Result<bool> {
    require_edge_iss(g, x, y)?;
    edge_iss_direct(&complement_core(g, x, y)?, x, y)
}
