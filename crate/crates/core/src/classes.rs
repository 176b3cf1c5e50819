//! Switching classes `[G] = {S(G) : S ⊆ V(G)}` up to isomorphism, and the
//! per-order census.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::iso_classes_with_counts;
use crate::error::{check_bound, Error, Result};
use crate::graph::Graph;
use crate::invariants::{seidel_char_poly, IntPolynomial};
use crate::iso::{canonical_form, CanonicalForm};
use crate::iss::iss_family;
use crate::switching::switch_mask;

pub const MAX_CLASS_ORDER: usize = 10;
pub const MAX_CENSUS_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingClass {
    /// Smallest member.
    pub representative: CanonicalForm,
    pub members: BTreeSet<CanonicalForm>,
}

impl SwitchingClass {
    /// Number of isomorphism classes in the switching class.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: &Graph) -> Result<bool> {
        Ok(self.members.contains(&canonical_form(g)?))
    }
}

/// Canonical forms of `S(G)` over the `2^(n-1)` subsets avoiding vertex 0;
/// the remaining subsets are complements and switch identically.
pub fn switching_class(g: &Graph) -> Result<SwitchingClass> {
    let n = g.order();
    check_bound("switching_class", n, MAX_CLASS_ORDER)?;
    let members: BTreeSet<CanonicalForm> = (0..1u64 << (n - 1))
        .map(|half| canonical_form(&switch_mask(g, half << 1)))
        .collect::<Result<_>>()?;
    let representative = members.first().expect("contains G itself").clone();
    Ok(SwitchingClass {
        representative,
        members,
    })
}

/// Do `[G]` and `[complement(G)]` have the same number of isomorphism
/// classes? Returns both sizes.
pub fn check_complement_class(g: &Graph) -> Result<(bool, usize, usize)> {
    check_bound("check_complement_class", g.order(), 8)?;
    let a = switching_class(g)?.size();
    let b = switching_class(&g.complement())?.size();
    Ok((a == b, a, b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub order: usize,
    pub class_id: usize,
    pub rep_g6: String,
    pub iso_class_count: usize,
    pub labeled_count: u64,
    /// Constant term first.
    pub seidel_poly: Vec<i64>,
    pub iss_min: usize,
    pub iss_max: usize,
    #[serde(skip)]
    pub class: SwitchingClass,
}

/// Partitions the isomorphism classes of order `n` into switching classes by
/// full subset enumeration from the smallest unassigned class.
pub fn switching_partition(n: usize) -> Result<Vec<(SwitchingClass, u64)>> {
    check_bound("census", n, MAX_CENSUS_ORDER)?;
    let counts = iso_classes_with_counts(n)?;
    let mut assigned: BTreeSet<&CanonicalForm> = BTreeSet::new();
    let mut out = Vec::new();
    for form in counts.keys() {
        if assigned.contains(form) {
            continue;
        }
        let class = switching_class(&form.to_graph())?;
        debug_assert_eq!(&class.representative, form);
        let mut labeled = 0;
        for member in &class.members {
            let (key, count) = counts
                .get_key_value(member)
                .ok_or_else(|| Error::Precondition(format!("{member:?} missing from census")))?;
            if !assigned.insert(key) {
                return Err(Error::Precondition(format!("{member:?} reached from two classes")));
            }
            labeled += count;
        }
        out.push((class, labeled));
    }
    Ok(out)
}

/// Switching classes by union-find over single-vertex switches, an
/// independent route to the same partition. Classes sorted by smallest
/// member.
pub fn switching_partition_union_find(n: usize) -> Result<Vec<BTreeSet<CanonicalForm>>> {
    check_bound("census", n, MAX_CENSUS_ORDER)?;
    let forms: Vec<CanonicalForm> = iso_classes_with_counts(n)?.into_keys().collect();
    let index: BTreeMap<&CanonicalForm, usize> = forms.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let neighbours: Vec<Vec<usize>> = forms
        .par_iter()
        .map(|form| {
            let g = form.to_graph();
            (0..n)
                .map(|v| {
                    let switched = canonical_form(&switch_mask(&g, 1 << v)).expect("order checked");
                    index[&switched]
                })
                .collect()
        })
        .collect();
    let mut parent: Vec<usize> = (0..forms.len()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for (i, list) in neighbours.iter().enumerate() {
        for &j in list {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
    for (i, form) in forms.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().insert(form.clone());
    }
    let mut classes: Vec<_> = groups.into_values().collect();
    classes.sort_by(|a, b| a.first().cmp(&b.first()));
    Ok(classes)
}

/// One record per switching class of order `n`, in order of representative.
/// Fails if the Seidel polynomial is not constant on a class.
pub fn census(n: usize) -> Result<Vec<CensusRecord>> {
    let partition = switching_partition(n)?;
    partition
        .into_par_iter()
        .enumerate()
        .map(|(class_id, (class, labeled_count))| {
            let rep = class.representative.to_graph();
            let poly = seidel_char_poly(&rep)?;
            let mut iss_min = usize::MAX;
            let mut iss_max = 0;
            for member in &class.members {
                let g = member.to_graph();
                if seidel_char_poly(&g)? != poly {
                    return Err(Error::Precondition(format!(
                        "Seidel polynomial differs inside class {class_id} at {member:?}"
                    )));
                }
                let size = iss_family(&g)?.len();
                iss_min = iss_min.min(size);
                iss_max = iss_max.max(size);
            }
            Ok(CensusRecord {
                order: n,
                class_id,
                rep_g6: class.representative.graph6(),
                iso_class_count: class.size(),
                labeled_count,
                seidel_poly: poly_to_i64(&poly)?,
                iss_min,
                iss_max,
                class,
            })
        })
        .collect()
}

fn poly_to_i64(p: &IntPolynomial) -> Result<Vec<i64>> {
    p.to_i64_vec()
        .ok_or_else(|| Error::Precondition(format!("coefficient of {p} exceeds i64")))
}

pub fn census_jsonl(records: &[CensusRecord]) -> String {
    records
        .iter()
        .map(|r| serde_json::to_string(r).expect("record serializes") + "\n")
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn tiny_classes() {
        assert_eq!(switching_class(&complete(1).unwrap()).unwrap().size(), 1);
        let k2 = switching_class(&complete(2).unwrap()).unwrap();
        assert_eq!(k2.size(), 2);
        assert!(k2.contains(&Graph::empty(2).unwrap()).unwrap());
    }

    #[test]
    fn order_four_classes() {
        let p4 = switching_class(&path(3).unwrap()).unwrap();
        let c4 = switching_class(&cycle(4).unwrap()).unwrap();
        let k4 = switching_class(&complete(4).unwrap()).unwrap();
        assert_eq!(p4.size() + c4.size() + k4.size(), 11);
        assert!(p4.members.is_disjoint(&c4.members));
        assert!(p4.members.is_disjoint(&k4.members));
        assert!(c4.members.is_disjoint(&k4.members));
    }

    #[test]
    fn census_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| census(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 7, 16]);
    }

    #[test]
    fn union_find_agrees() {
        for n in 1..=6 {
            let direct: Vec<_> = switching_partition(n)
                .unwrap()
                .into_iter()
                .map(|(c, _)| c.members)
                .collect();
            assert_eq!(direct, switching_partition_union_find(n).unwrap(), "order {n}");
        }
    }

    #[test]
    fn labelled_counts_sum() {
        let records = census(5).unwrap();
        assert_eq!(records.iter().map(|r| r.labeled_count).sum::<u64>(), 1 << 10);
        for r in &records {
            assert_eq!(r.labeled_count % (1 << 4), 0);
        }
    }

    #[test]
    fn complement_class_on_k3_plus_k1() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let (ok, a, b) = check_complement_class(&g).unwrap();
        assert!(ok);
        assert_eq!(a, b);
    }

    #[test]
    fn census_bound() {
        assert!(census(8).is_err());
    }
}
