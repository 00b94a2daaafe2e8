//! Sparse row echelon forms over `F_p`.
//!
//! Rows are maps from column keys to nonzero residues. The pivot of a row is
//! its largest key, so with keys ordered by degree first, the rows whose pivot
//! has degree at most `n` span exactly the intersection with the degree `≤ n`
//! filtration step.

use std::collections::BTreeMap;

use crate::field::Modulus;

pub type SparseRow<K> = BTreeMap<K, u64>;

/// Echelon basis keyed by pivot; every stored row is monic at its pivot.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    modulus: Modulus,
    rows: BTreeMap<K, SparseRow<K>>,
}

fn axpy<K: Ord + Clone>(m: Modulus, v: &mut SparseRow<K>, c: u64, row: &SparseRow<K>) {
    for (k, r) in row {
        let delta = m.mul(c, *r);
        let slot = v.entry(k.clone()).or_insert(0);
        *slot = m.add(*slot, delta);
        if *slot == 0 {
            v.remove(k);
        }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new(modulus: Modulus) -> Self {
        SparseEchelon {
            modulus,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (&K, &SparseRow<K>)> {
        self.rows.iter()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Remainder of `v` after eliminating every pivot it touches.
    pub fn reduce(&self, mut v: SparseRow<K>) -> SparseRow<K> {
        let m = self.modulus;
        let mut cursor = v.keys().next_back().cloned();
        while let Some(k) = cursor {
            if let (Some(row), Some(&c)) = (self.rows.get(&k), v.get(&k)) {
                axpy(m, &mut v, m.neg(c), row);
            }
            cursor = v.range(..&k).next_back().map(|(k, _)| k.clone());
        }
        v
    }

    pub fn contains(&self, v: SparseRow<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns the new monic row if the rank grew.
    pub fn insert(&mut self, v: SparseRow<K>) -> Option<SparseRow<K>> {
        let mut r = self.reduce(v);
        let (pivot, &lead) = r.iter().next_back()?;
        let pivot = pivot.clone();
        let inv = self.modulus.inv(lead).expect("nonzero lead");
        for c in r.values_mut() {
            *c = self.modulus.mul(*c, inv);
        }
        self.rows.insert(pivot, r.clone());
        Some(r)
    }

    /// Reduced row echelon form: no row has a nonzero entry in another row's
    /// pivot column. Unique for a given span.
    pub fn canonicalize(&mut self) {
        let m = self.modulus;
        let pivots: Vec<K> = self.rows.keys().cloned().collect();
        for p in &pivots {
            let mut row = self.rows.remove(p).unwrap();
            let below: Vec<K> = row.range(..p).map(|(k, _)| k.clone()).rev().collect();
            for k in below {
                if let (Some(other), Some(&c)) = (self.rows.get(&k), row.get(&k)) {
                    axpy(m, &mut row, m.neg(c), other);
                }
            }
            self.rows.insert(p.clone(), row);
        }
    }
}
