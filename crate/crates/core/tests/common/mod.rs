//! Reference implementations used as test oracles. Slow and direct on
//! purpose: nothing here calls into the library except `Graph` accessors.

#![allow(dead_code)]

use itertools::Itertools;
use seidel_core::Graph;

/// Upper-triangle bit string of `g` relabelled by `p` (vertex `v` goes to
/// `p[v]`), column by column.
pub fn relabelled_code(g: &Graph, p: &[usize]) -> Vec<bool> {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &pv) in p.iter().enumerate() {
        inv[pv] = v;
    }
    let mut code = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            code.push(g.has_edge(inv[i], inv[j]));
        }
    }
    code
}

/// Lexicographically largest relabelled code over all `n!` permutations.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.order();
    (0..n)
        .permutations(n)
        .map(|p| relabelled_code(g, &p))
        .max()
        .unwrap_or_default()
}

pub fn preserves_edges(g: &Graph, h: &Graph, p: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|i| (i + 1..n).all(|j| g.has_edge(i, j) == h.has_edge(p[i], p[j])))
}

/// Tries every permutation.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    n == h.order()
        && g.edge_count() == h.edge_count()
        && (0..n).permutations(n).any(|p| preserves_edges(g, h, &p))
}

pub fn brute_automorphism_count(g: &Graph) -> usize {
    let n = g.order();
    (0..n).permutations(n).filter(|p| preserves_edges(g, g, p)).count()
}

/// Two vertices are similar if some automorphism maps one to the other.
pub fn brute_similar(g: &Graph, u: usize, v: usize) -> bool {
    let n = g.order();
    (0..n)
        .permutations(n)
        .any(|p| p[u] == v && preserves_edges(g, g, &p))
}

pub fn seidel_entry(g: &Graph, i: usize, j: usize) -> i128 {
    if i == j {
        0
    } else if g.has_edge(i, j) {
        -1
    } else {
        1
    }
}

/// Bareiss fraction-free determinant.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Characteristic polynomial of the Seidel matrix from principal minors:
/// the coefficient of `x^(n-k)` is `(-1)^k` times the sum of all `k x k`
/// principal minors. Constant term first.
pub fn char_poly_by_minors(g: &Graph) -> Vec<i128> {
    let n = g.order();
    let mut coeffs = vec![0i128; n + 1];
    for mask in 0u64..1 << n {
        let idx: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let k = idx.len();
        let minor: Vec<Vec<i128>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| seidel_entry(g, i, j)).collect())
            .collect();
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        coeffs[n - k] += sign * bareiss_det(minor);
    }
    coeffs
}

/// graph6 for `n < 63`: one size byte, then the upper triangle column by
/// column packed six bits at a time, big end first, each chunk plus 63.
pub fn graph6_reference(g: &Graph) -> String {
    let n = g.order();
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j) as u8);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(0);
    }
    let mut out = vec![(n + 63) as u8];
    for chunk in bits.chunks(6) {
        let value = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b);
        out.push(value + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Seidel switch straight from the definition: pairs split by `s` flip,
/// all others stay.
pub fn switch_by_definition(g: &Graph, s: u64) -> Graph {
    let n = g.order();
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let split = (s >> i & 1) != (s >> j & 1);
            if g.has_edge(i, j) != split {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}
