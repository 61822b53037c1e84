//! Exact sparse Gaussian elimination over ℚ.

use std::collections::BTreeMap;

use crate::scalars::{Rational, Ring};

pub type SparseRow<K> = BTreeMap<K, Rational>;

/// Incrementally built row-echelon basis of a span. Each stored row is
/// normalised to 1 at its smallest key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    pivots: BTreeMap<K, SparseRow<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of `row` after elimination against the stored pivots.
    pub fn reduce(&self, mut row: SparseRow<K>) -> SparseRow<K> {
        row.retain(|_, v| !v.is_zero());
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => row.keys().find(|k| self.pivots.contains_key(*k)).cloned(),
                Some(c) => row
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .map(|(k, _)| k)
                    .find(|k| self.pivots.contains_key(*k))
                    .cloned(),
            };
            let Some(k) = next else { break };
            let f = row[&k].clone();
            for (j, v) in &self.pivots[&k] {
                let e = row.entry(j.clone()).or_insert_with(Rational::zero);
                *e = e.sub(&f.mul(v));
                if e.is_zero() {
                    row.remove(j);
                }
            }
            cursor = Some(k);
        }
        row
    }

    /// Adds `row` to the span; true when it was independent.
    pub fn insert(&mut self, row: SparseRow<K>) -> bool {
        let r = self.reduce(row);
        let Some((k, lead)) = r.iter().next().map(|(k, v)| (k.clone(), v.clone())) else {
            return false;
        };
        let inv = lead.inv().unwrap();
        let r: SparseRow<K> = r.into_iter().map(|(j, v)| (j, v.mul(&inv))).collect();
        self.pivots.insert(k, r);
        true
    }

    pub fn contains(&self, row: SparseRow<K>) -> bool {
        self.reduce(row).is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inconsistent;

/// Solves `Σ_j a_ij x_j = b_i` for `x ∈ ℚ^n`; free variables are set to 0.
pub fn solve_affine(n: usize, eqs: &[(SparseRow<usize>, Rational)]) -> Result<Vec<Rational>, Inconsistent> {
    // the constant sits at key n so that it is never a pivot
    let mut ech: Echelon<usize> = Echelon::new();
    for (a, b) in eqs {
        let mut row = a.clone();
        if !b.is_zero() {
            row.insert(n, b.clone());
        }
        let r = ech.reduce(row);
        match r.keys().next() {
            None => {}
            Some(&k) if k == n => return Err(Inconsistent),
            Some(_) => {
                ech.insert(r);
            }
        }
    }
    // back substitution, largest pivot first
    let mut x = vec![Rational::zero(); n];
    for (&p, row) in ech.pivots.iter().rev() {
        let mut val = row.get(&n).cloned().unwrap_or_else(Rational::zero);
        for (&j, v) in row.range(p + 1..n) {
            val = val.sub(&v.mul(&x[j]));
        }
        x[p] = val;
    }
    Ok(x)
}
