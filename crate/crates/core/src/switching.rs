//! Seidel switching.
//!
//! Switching `g` by `S` complements every adjacency between `S` and `V \ S`
//! and keeps the pairs inside `S` and inside `V \ S`. [`switch_set`] is the
//! single kernel; the vertex and sequence forms delegate to it.

use crate::error::Result;
use crate::graph::{low_mask, Graph, VertexSet};

/// The two sides of an identity that failed to hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub left: Graph,
    pub right: Graph,
}

/// `Ok(())` when both sides agree bit for bit.
pub type IdentityCheck = std::result::Result<(), Mismatch>;

fn compare(left: Graph, right: Graph) -> IdentityCheck {
    if left == right {
        Ok(())
    } else {
        Err(Mismatch { left, right })
    }
}

/// Switches `g` by `s`. `∅` and `V(G)` leave `g` unchanged.
pub fn switch_set(g: &Graph, s: &VertexSet) -> Result<Graph> {
    g.check_set(s)?;
    Ok(switch_mask(g, s.mask()))
}

/// Kernel: row `i` is XORed with the crossing mask of its side.
pub(crate) fn switch_mask(g: &Graph, mask: u64) -> Graph {
    let full = low_mask(g.order());
    let outside = !mask & full;
    let rows = g
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            if mask >> i & 1 == 1 {
                row ^ outside
            } else {
                row ^ mask
            }
        })
        .collect();
    Graph::from_rows_unchecked(rows)
}

pub fn switch_vertex(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    Ok(switch_mask(g, 1 << v))
}

/// Applies the vertex switches in `vs` one after another. Only the parity of
/// each vertex's multiplicity matters.
pub fn switch_sequence(g: &Graph, vs: &[usize]) -> Result<Graph> {
    let mut mask = 0u64;
    for &v in vs {
        g.check_vertex(v)?;
        mask ^= 1 << v;
    }
    Ok(switch_mask(g, mask))
}

/// `S(T(G)) = (S Δ T)(G)`.
pub fn check_symmetric_difference(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<IdentityCheck> {
    let twice = switch_set(&switch_set(g, t)?, s)?;
    let once = switch_set(g, &s.symmetric_difference(t))?;
    Ok(compare(twice, once))
}

/// `S(G) = (V \ S)(G)`.
pub fn check_complement_switch(g: &Graph, s: &VertexSet) -> Result<IdentityCheck> {
    Ok(compare(switch_set(g, s)?, switch_set(g, &s.complement())?))
}

/// `complement(S(G)) = S(complement(G))`.
pub fn check_complement_commutes(g: &Graph, s: &VertexSet) -> Result<IdentityCheck> {
    Ok(compare(
        switch_set(g, s)?.complement(),
        switch_set(&g.complement(), s)?,
    ))
}

/// `V(G)(G) = G`.
pub fn check_full_set(g: &Graph) -> IdentityCheck {
    compare(switch_mask(g, low_mask(g.order())), g.clone())
}
