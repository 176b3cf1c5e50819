//! Canonical forms, isomorphism witnesses, automorphism groups and
//! similarity orbits.
//!
//! Canonical labelling refines the unit partition to an equitable ordered
//! partition, then individualizes vertices of the first smallest
//! non-singleton cell and recurses. Every discrete leaf yields a labelling;
//! the canonical form is the lexicographically smallest upper-triangle bit
//! string among all leaves. Two leaves with equal strings give an
//! automorphism, and automorphisms fixing the current prefix pointwise are
//! used to skip children in the same orbit.

use std::fmt;

use crate::error::{check_bound, Result};
use crate::graph::{Graph, Permutation, VertexSet};
use crate::graph6;

/// Largest order accepted by [`canonical_form`] and friends.
pub const MAX_CANONICAL_ORDER: usize = 12;
/// Largest order accepted by full automorphism enumeration.
pub const MAX_AUTOMORPHISM_ORDER: usize = 10;

/// Upper-triangle bit string (column-major, packed MSB first) of the
/// canonically relabelled graph. Ordered by `(n, bits)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// The canonically labelled graph.
    pub fn to_graph(&self) -> Graph {
        let mut rows = vec![0u64; self.n];
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    pub fn graph6(&self) -> String {
        graph6::to_graph6(&self.to_graph())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

/// Bit string of `g` relabelled so that position `p` holds vertex `lab[p]`.
fn encode(g: &Graph, lab: &[usize]) -> Vec<u8> {
    let n = lab.len();
    let mut bits = vec![0u8; (n * n.saturating_sub(1) / 2).div_ceil(8)];
    let mut k = 0;
    for j in 1..n {
        let row = g.row(lab[j]);
        for &vi in &lab[..j] {
            if row >> vi & 1 == 1 {
                bits[k / 8] |= 1 << (7 - k % 8);
            }
            k += 1;
        }
    }
    bits
}

/// Refines an ordered partition until it is equitable: within every cell,
/// all vertices have the same number of neighbours in every cell. Split
/// cells are ordered by neighbour-count signature, so the result depends only
/// on the isomorphism type of `(g, cells)`.
pub(crate) fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.row(v);
                    (masks.iter().map(|m| (row & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    if start > 0 || k < keyed.len() {
                        changed = true;
                    }
                    next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                    start = k;
                }
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn run(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(cells.into_iter().flatten().collect());
            return;
        };
        let mut candidates = cells[t].clone();
        candidates.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for &w in &candidates {
            if !tried.is_empty() && self.same_orbit_as_tried(prefix, &tried, w) {
                continue;
            }
            tried.push(w);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..t].iter().cloned());
            child.push(vec![w]);
            child.push(cells[t].iter().copied().filter(|&v| v != w).collect());
            child.extend(cells[t + 1..].iter().cloned());
            prefix.push(w);
            self.run(refine(self.g, child), prefix);
            prefix.pop();
        }
    }

    fn same_orbit_as_tried(&self, prefix: &[usize], tried: &[usize], w: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (v, &image) in gamma.iter().enumerate() {
                    union(&mut parent, v, image);
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let code = encode(self.g, &lab);
        match &self.best {
            None => self.best = Some((code, lab)),
            Some((best, best_lab)) => match code.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((code, lab)),
                std::cmp::Ordering::Equal => {
                    let mut gamma = vec![0; lab.len()];
                    for (&from, &to) in lab.iter().zip(best_lab) {
                        gamma[from] = to;
                    }
                    if gamma.iter().enumerate().any(|(i, &v)| i != v) {
                        self.automorphisms.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

/// Canonical form plus the labelling that produces it: position `p` of the
/// canonical graph is vertex `labelling[p]` of `g`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    check_bound("canonical_form", g.order(), MAX_CANONICAL_ORDER)?;
    Ok(canonical_labeling_unbounded(g))
}

pub(crate) fn canonical_labeling_unbounded(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    let mut search = CanonSearch {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.run(refine(g, vec![(0..n).collect()]), &mut Vec::new());
    let (bits, lab) = search.best.expect("search visits at least one leaf");
    (CanonicalForm { n, bits }, lab)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_bound("is_isomorphic", g.order().max(h.order()), MAX_CANONICAL_ORDER)?;
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// A permutation `p` with `{i, j} ∈ E(g) ⇔ {p(i), p(j)} ∈ E(h)`, if any.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Permutation>> {
    check_bound("find_isomorphism", g.order().max(h.order()), MAX_CANONICAL_ORDER)?;
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (fg, lab_g) = canonical_labeling(g)?;
    let (fh, lab_h) = canonical_labeling(h)?;
    if fg != fh {
        return Ok(None);
    }
    let mut image = vec![0; g.order()];
    for (&from, &to) in lab_g.iter().zip(&lab_h) {
        image[from] = to;
    }
    let p = Permutation::from_vec_unchecked(image);
    debug_assert!(p.is_isomorphism(g, h));
    Ok(Some(p))
}

/// Backtracking search over vertex maps `g -> h` that respect `compatible`
/// and adjacency. `visit` receives each complete map and returns `false` to
/// stop the search.
fn search_maps(
    g: &Graph,
    h: &Graph,
    compatible: &dyn Fn(usize, usize) -> bool,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    fn step(
        g: &Graph,
        h: &Graph,
        compatible: &dyn Fn(usize, usize) -> bool,
        visit: &mut dyn FnMut(&[usize]) -> bool,
        image: &mut Vec<usize>,
        used: u64,
    ) -> bool {
        let v = image.len();
        if v == g.order() {
            return visit(image);
        }
        let row = g.row(v);
        for w in 0..h.order() {
            if used >> w & 1 == 1 || !compatible(v, w) {
                continue;
            }
            let hrow = h.row(w);
            let consistent = image
                .iter()
                .enumerate()
                .all(|(u, &pu)| (row >> u & 1) == (hrow >> pu & 1));
            if !consistent {
                continue;
            }
            image.push(w);
            let keep_going = step(g, h, compatible, visit, image, used | 1 << w);
            image.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    if g.order() != h.order() {
        return;
    }
    step(g, h, compatible, visit, &mut Vec::with_capacity(g.order()), 0);
}

/// Isomorphism by direct permutation search (degree-compatible backtracking),
/// independent of canonical forms.
pub fn search_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Permutation>> {
    check_bound("search_isomorphism", g.order().max(h.order()), MAX_CANONICAL_ORDER)?;
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (dg, dh) = (g.degrees(), h.degrees());
    let mut found = None;
    search_maps(g, h, &|v, w| dg[v] == dh[w], &mut |image| {
        found = Some(Permutation::from_vec_unchecked(image.to_vec()));
        false
    });
    Ok(found)
}

/// The full automorphism group as an element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic order of their image lists; the identity
    /// comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Orbit of `v` as a sorted list.
    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = self.elements.iter().map(|p| p.apply(v)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }
}

/// Colour classes of the equitable refinement of the unit partition. Any
/// automorphism maps each class onto itself.
fn cell_colours(g: &Graph) -> Vec<usize> {
    let mut colour = vec![0; g.order()];
    for (c, cell) in refine(g, vec![(0..g.order()).collect()]).iter().enumerate() {
        for &v in cell {
            colour[v] = c;
        }
    }
    colour
}

pub fn automorphisms(g: &Graph) -> Result<AutomorphismGroup> {
    check_bound("automorphisms", g.order(), MAX_AUTOMORPHISM_ORDER)?;
    let colour = cell_colours(g);
    let mut elements = Vec::new();
    search_maps(g, g, &|v, w| colour[v] == colour[w], &mut |image| {
        elements.push(Permutation::from_vec_unchecked(image.to_vec()));
        true
    });
    Ok(AutomorphismGroup { elements })
}

/// An automorphism `φ` of `g` with `φ(from) = to`, if one exists.
pub fn find_automorphism_mapping(
    g: &Graph,
    from: &VertexSet,
    to: &VertexSet,
) -> Result<Option<Permutation>> {
    check_bound("find_automorphism_mapping", g.order(), MAX_AUTOMORPHISM_ORDER)?;
    g.check_set(from)?;
    g.check_set(to)?;
    if from.len() != to.len() {
        return Ok(None);
    }
    let colour = cell_colours(g);
    let mut found = None;
    search_maps(
        g,
        g,
        &|v, w| colour[v] == colour[w] && from.contains(v) == to.contains(w),
        &mut |image| {
            found = Some(Permutation::from_vec_unchecked(image.to_vec()));
            false
        },
    );
    Ok(found)
}

/// Vertex orbits of `Aut(g)`: blocks sorted internally and by first element.
pub fn similarity_orbits(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let group = automorphisms(g)?;
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    for p in group.elements() {
        for v in 0..n {
            union(&mut parent, v, p.apply(v));
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of_root = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if block_of_root[r] == usize::MAX {
            block_of_root[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_of_root[r]].push(v);
    }
    Ok(blocks)
}

pub fn are_similar(g: &Graph, u: usize, v: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(similarity_orbits(g)?
        .iter()
        .any(|b| b.contains(&u) && b.contains(&v)))
}
