//! Immutable graphs, vertex subsets and permutations.
//!
//! A [`Graph`] of order `n` stores one `u64` row per vertex; bit `j` of row
//! `i` is set iff `{i, j}` is an edge. Every constructor returns a value that
//! is symmetric, irreflexive and has no bits at positions `>= n`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. Keeps a row in one machine word and the graph6
/// size field in a single byte.
pub const MAX_ORDER: usize = 62;

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs coalesce.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(i, j) in edges {
            check_index(i, n)?;
            check_index(j, n)?;
            if i == j {
                return Err(Error::LoopEdge(i));
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(Graph { n, adj })
    }

    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from raw rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let outside = !low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & outside != 0 {
                return Err(Error::Precondition(format!("row {i} has bits beyond order {n}")));
            }
            if row >> i & 1 == 1 {
                return Err(Error::LoopEdge(i));
            }
            let mut rest = row;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::Precondition(format!("rows {i} and {j} are not symmetric")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Internal constructor for kernels that preserve the invariants by
    /// construction.
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    /// Builds the graph whose upper triangle is encoded by `code`: the pairs
    /// `(i, j)`, `i < j`, are visited column by column (`j = 1..n`, then
    /// `i = 0..j`) and the `k`-th pair is an edge iff bit `k` of `code` is set.
    pub fn from_upper_triangle(n: usize, code: u64) -> Result<Self> {
        check_order(n)?;
        if n * (n - 1) / 2 > 64 {
            return Err(Error::OrderBound {
                op: "from_upper_triangle",
                order: n,
                max: 11,
            });
        }
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if code >> k & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Adjacency rows.
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.adj[i] >> j & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(i, j)` pairs with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            let mut rest = self.adj[i] & !low_mask(i + 1);
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((i, j));
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        check_index(v, self.n)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        check_index(v, self.n)?;
        Ok(VertexSet {
            n: self.n,
            mask: self.adj[v],
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn complement(&self) -> Graph {
        let full = low_mask(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &r)| !r & full & !(1 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `s`, together with the order-preserving index map
    /// (`map[old] = Some(new)` for members of `s`).
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let members: Vec<usize> = s.iter().collect();
        let mut map = vec![None; self.n];
        for (new, &old) in members.iter().enumerate() {
            map[old] = Some(new);
        }
        let adj = members
            .iter()
            .map(|&old| compress(self.adj[old], s.mask))
            .collect();
        Ok((
            Graph {
                n: members.len(),
                adj,
            },
            map,
        ))
    }

    pub fn with_edge(&self, i: usize, j: usize) -> Result<Graph> {
        self.toggled_pair(i, j, true)
    }

    pub fn without_edge(&self, i: usize, j: usize) -> Result<Graph> {
        self.toggled_pair(i, j, false)
    }

    fn toggled_pair(&self, i: usize, j: usize, present: bool) -> Result<Graph> {
        check_index(i, self.n)?;
        check_index(j, self.n)?;
        if i == j {
            return Err(Error::LoopEdge(i));
        }
        let mut adj = self.adj.clone();
        if present {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        } else {
            adj[i] &= !(1 << j);
            adj[j] &= !(1 << i);
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Relabels vertices: vertex `v` of `self` becomes `p.apply(v)`.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.len() != self.n {
            return Err(Error::OrderMismatch {
                set: p.len(),
                graph: self.n,
            });
        }
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            let mut rest = row;
            let mut image = 0u64;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                image |= 1 << p.apply(w);
            }
            adj[p.apply(v)] = image;
        }
        Ok(Graph { n: self.n, adj })
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.n != self.n {
            return Err(Error::OrderMismatch {
                set: s.n,
                graph: self.n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        check_index(v, self.n)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

/// Packs the bits of `row` selected by `keep` into the low bits, preserving
/// their order.
fn compress(row: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    let mut k = 0;
    let mut rest = keep;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        out |= (row >> j & 1) << k;
        k += 1;
    }
    out
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::OrderOutOfRange(n))
    } else {
        Ok(())
    }
}

fn check_index(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::IndexOutOfRange { index: v, order: n })
    } else {
        Ok(())
    }
}

/// A subset of `{0, .., n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    mask: u64,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { n, mask: 0 }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            n,
            mask: low_mask(n),
        }
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        if mask & !low_mask(n) != 0 {
            let index = 63 - mask.leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, order: n });
        }
        Ok(VertexSet { n, mask })
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut mask = 0u64;
        for &i in indices {
            check_index(i, n)?;
            mask |= 1 << i;
        }
        Ok(VertexSet { n, mask })
    }

    pub fn singleton(n: usize, v: usize) -> Result<Self> {
        Self::from_indices(n, &[v])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == low_mask(self.n)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.mask >> v & 1 == 1
    }

    pub fn insert(self, v: usize) -> Result<Self> {
        check_index(v, self.n)?;
        Ok(VertexSet {
            n: self.n,
            mask: self.mask | 1 << v,
        })
    }

    pub fn remove(self, v: usize) -> Self {
        VertexSet {
            n: self.n,
            mask: self.mask & !(1u64 << (v & 63)),
        }
    }

    /// `V \ self`.
    pub fn complement(&self) -> Self {
        VertexSet {
            n: self.n,
            mask: !self.mask & low_mask(self.n),
        }
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> Self {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            mask: self.mask ^ other.mask,
        }
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        VertexSet {
            n: self.n,
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> Self {
        VertexSet {
            n: self.n,
            mask: self.mask & other.mask,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Mask as a binary string with vertex 0 as the rightmost digit.
    pub fn to_binary(&self) -> String {
        (0..self.n)
            .rev()
            .map(|i| if self.mask >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A bijection on `{0, .., n-1}`; `image[v]` is where `v` goes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            check_index(v, n)?;
            if seen[v] {
                return Err(Error::Precondition(format!("{v} appears twice in permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn apply_set(&self, s: &VertexSet) -> VertexSet {
        let mask = s.iter().fold(0u64, |m, v| m | 1 << self.image[v]);
        VertexSet { n: s.n, mask }
    }

    /// True iff the permutation maps every edge of `g` onto an edge of `h`
    /// (and therefore, counting edges, `E(g)` onto `E(h)`).
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        g.order() == self.len()
            && h.order() == self.len()
            && g.edge_count() == h.edge_count()
            && g.edges()
                .iter()
                .all(|&(i, j)| h.has_edge(self.apply(i), self.apply(j)))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({:?})", self.image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_graph_edges() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert_eq!(g.neighborhood(0).unwrap().to_vec(), vec![1, 2]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(0, &[]), Err(Error::OrderOutOfRange(0)));
        assert_eq!(Graph::new(63, &[]), Err(Error::OrderOutOfRange(63)));
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::IndexOutOfRange { index: 3, order: 3 })
        );
        assert!(Graph::new(62, &[(0, 61)]).is_ok());
    }

    #[test]
    fn k1_and_duplicates() {
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
        let g = Graph::new(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let k3 = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
        assert_eq!(k3.complement().complement(), k3);
    }

    #[test]
    fn induced_subgraph_maps_indices() {
        let fig1 = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let s = VertexSet::from_indices(4, &[1, 2, 3]).unwrap();
        let (h, map) = fig1.induced_subgraph(&s).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(map, vec![None, Some(0), Some(1), Some(2)]);
        assert_eq!(
            fig1.induced_subgraph(&VertexSet::empty(4)),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn degree_errors_and_values() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(g.degree(0), Ok(1));
        assert_eq!(g.degree(2), Ok(0));
        assert!(g.degree(3).is_err());
        assert!(g.neighborhood(5).is_err());
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b100, 0]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn vertex_set_algebra() {
        let s = VertexSet::from_indices(5, &[0, 3]).unwrap();
        let t = VertexSet::from_indices(5, &[3, 4]).unwrap();
        assert_eq!(s.symmetric_difference(&t).to_vec(), vec![0, 4]);
        assert_eq!(s.complement().to_vec(), vec![1, 2, 4]);
        assert_eq!(s.to_binary(), "01001");
        assert_eq!(s.to_string(), "{0,3}");
        assert!(VertexSet::from_mask(3, 0b1000).is_err());
    }

    #[test]
    fn permutation_rules() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).images(), &[2, 0, 1]);
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let moved = path.relabel(&p).unwrap();
        assert!(p.is_isomorphism(&path, &moved));
    }
}
