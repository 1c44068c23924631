//! Incremental row reduction of sparse vectors over the rationals.

use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::upbw::Coeff;

pub type SparseVec<K> = BTreeMap<K, Coeff>;

/// An echelon basis keyed by leading column.
///
/// Every stored row has leading coefficient 1 and no other stored row has a
/// nonzero entry in its leading column once [`SparseEchelon::reduced_rows`]
/// has been called; insertion only keeps rows in echelon form.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon {
            rows: BTreeMap::new(),
        }
    }
}

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, row: &SparseVec<K>, factor: &Coeff) {
    for (k, v) in row {
        let d = v * factor;
        match target.entry(k.clone()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(d);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += d;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis, returning the remainder.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        v.retain(|_, c| !c.is_zero());
        let mut floor: Option<K> = None;
        loop {
            // first entry at or after `floor` whose column has a pivot
            let next = match &floor {
                None => v.iter().find(|(k, _)| self.rows.contains_key(*k)),
                Some(f) => v
                    .range(f.clone()..)
                    .find(|(k, _)| self.rows.contains_key(*k)),
            }
            .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = next else {
                return v;
            };
            let row = &self.rows[&k];
            axpy(&mut v, row, &-c);
            floor = Some(k);
        }
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns true if the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((lead, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = Coeff::one() / c;
        for val in r.values_mut() {
            *val *= &inv;
        }
        self.rows.insert(lead, r);
        true
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Rows of the reduced row echelon form, ordered by pivot column.
    pub fn reduced_rows(&self) -> Vec<SparseVec<K>> {
        let mut done: BTreeMap<K, SparseVec<K>> = BTreeMap::new();
        // back-substitute from the last pivot to the first
        for (lead, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            let hits: Vec<(K, Coeff)> = r
                .iter()
                .filter(|(k, _)| *k != lead && done.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect();
            // finished rows vanish on each other's pivots, so the hit coefficients stay valid
            for (k, c) in hits {
                axpy(&mut r, &done[&k], &-c);
            }
            done.insert(lead.clone(), r);
        }
        done.into_values().collect()
    }

    /// Builds the span from already reduced rows (for example loaded from a cache).
    pub fn from_rows(rows: impl IntoIterator<Item = SparseVec<K>>) -> Self {
        let mut e = SparseEchelon::new();
        for r in rows {
            e.insert(r);
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries
            .iter()
            .map(|&(k, c)| (k, Coeff::from_integer(c.into())))
            .collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(v(&[(0, 1), (1, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(v(&[(0, 2), (1, 4)])));
        assert!(!e.contains(v(&[(2, 1)])));
        assert!(!e.insert(v(&[])));
    }

    #[test]
    fn reduced_form_is_canonical() {
        let a = SparseEchelon::from_rows([v(&[(0, 1), (1, 2)]), v(&[(1, 1), (2, 1)])]);
        let b = SparseEchelon::from_rows([v(&[(0, 1), (1, 3), (2, 1)]), v(&[(1, 2), (2, 2)])]);
        assert_eq!(a.reduced_rows(), b.reduced_rows());
        let rows = a.reduced_rows();
        assert_eq!(rows[0], v(&[(0, 1), (2, -2)]));
    }
}
