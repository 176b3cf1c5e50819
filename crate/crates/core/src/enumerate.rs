//! Exhaustive enumeration of small graphs.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{check_bound, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalForm};

/// Orders above this are refused by the exhaustive enumerators.
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labelled graph on `{0, .., n-1}`, in upper-triangle code order.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_bound("labeled_graphs", n, MAX_EXHAUSTIVE_ORDER)?;
    Graph::empty(n)?;
    let total = 1u64 << pair_count(n);
    Ok((0..total).map(move |code| Graph::from_upper_triangle(n, code).expect("order checked")))
}

/// Isomorphism classes of order `n` with the number of labelled graphs in
/// each, keyed and sorted by canonical form.
pub fn iso_classes_with_counts(n: usize) -> Result<BTreeMap<CanonicalForm, u64>> {
    check_bound("iso_classes", n, MAX_EXHAUSTIVE_ORDER)?;
    Graph::empty(n)?;
    let total = 1u64 << pair_count(n);
    const CHUNK: u64 = 1 << 12;
    let chunks = total.div_ceil(CHUNK);
    let partial: Vec<BTreeMap<CanonicalForm, u64>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local = BTreeMap::new();
            for code in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let g = Graph::from_upper_triangle(n, code).expect("order checked");
                let form = canonical_form(&g).expect("order checked");
                *local.entry(form).or_insert(0) += 1;
            }
            local
        })
        .collect();
    let mut merged = BTreeMap::new();
    for local in partial {
        for (form, count) in local {
            *merged.entry(form).or_insert(0) += count;
        }
    }
    Ok(merged)
}

/// One canonical representative per isomorphism class of order `n`, sorted
/// by canonical form.
pub fn iso_class_representatives(n: usize) -> Result<Vec<Graph>> {
    Ok(iso_classes_with_counts(n)?
        .keys()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// Representatives for every order in `1..=max_order`.
pub fn representatives_up_to(max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(iso_class_representatives(n)?);
    }
    Ok(out)
}
