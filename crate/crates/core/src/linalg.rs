//! Sparse row echelon forms over a [`Field`].
//!
//! Columns are plain indices; the pivot of a row is its largest column. After
//! [`Echelon::finish`] every pivot row is monic and free of other pivot
//! columns, so the reduced row of column c reads c = -(rest).

use std::collections::BTreeMap;

use crate::cyclotomic::Field;

/// Sorted by column, no zero entries.
pub type SparseRow<E> = Vec<(usize, E)>;

/// `a + scale·b` for sorted sparse rows.
pub fn axpy<F: Field>(field: &F, a: &SparseRow<F::Elem>, scale: &F::Elem, b: &SparseRow<F::Elem>) -> SparseRow<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = field.mul(scale, &b[j].1);
            if !field.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(scale, &b[j].1));
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Builds a sorted sparse row from unsorted (column, value) pairs, summing duplicates.
pub fn collect_row<F: Field>(field: &F, entries: impl IntoIterator<Item = (usize, F::Elem)>) -> SparseRow<F::Elem> {
    let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
    for (c, v) in entries {
        match acc.get_mut(&c) {
            Some(slot) => *slot = field.add(slot, &v),
            None => {
                acc.insert(c, v);
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !field.is_zero(v)).collect()
}

/// Incremental echelon form, pivot = largest column of each row.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pivots: BTreeMap<usize, SparseRow<F::Elem>>,
    reduced: bool,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self { pivots: BTreeMap::new(), reduced: true }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseRow<F::Elem>> {
        self.pivots.get(&col)
    }

    /// Reduces `row` until its largest column is not a pivot (or it vanishes).
    pub fn reduce_top(&self, field: &F, mut row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        while let Some((col, coeff)) = row.last().cloned() {
            match self.pivots.get(&col) {
                Some(p) => row = axpy(field, &row, &field.neg(&coeff), p),
                None => break,
            }
        }
        row
    }

    /// Eliminates every pivot column from `row`.
    pub fn reduce_full(&self, field: &F, mut row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let mut idx = row.len();
        while idx > 0 {
            idx -= 1;
            let (col, coeff) = row[idx].clone();
            if let Some(p) = self.pivots.get(&col) {
                row = axpy(field, &row, &field.neg(&coeff), p);
                // pivot rows only touch columns ≤ col, so everything above idx is untouched
                idx = row.partition_point(|(c, _)| *c < col);
            }
        }
        row
    }

    /// Inserts a row; returns true when it raised the rank.
    pub fn insert(&mut self, field: &F, row: SparseRow<F::Elem>) -> bool {
        let row = self.reduce_top(field, row);
        let Some((col, lead)) = row.last().cloned() else {
            return false;
        };
        let inv = field.inv(&lead).expect("nonzero leading coefficient");
        let row: SparseRow<F::Elem> = row.into_iter().map(|(c, v)| (c, field.mul(&v, &inv))).collect();
        self.pivots.insert(col, row);
        self.reduced = false;
        true
    }

    /// Back-substitution: afterwards pivot rows contain no other pivot column.
    pub fn finish(&mut self, field: &F) {
        if self.reduced {
            return;
        }
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for col in cols {
            let row = self.pivots.remove(&col).expect("pivot present");
            let (lead, rest) = row.split_last().expect("nonempty pivot row");
            let rest = self.reduce_full(field, rest.to_vec());
            let mut row = rest;
            row.push(lead.clone());
            self.pivots.insert(col, row);
        }
        self.reduced = true;
    }

    pub fn into_pivots(self) -> BTreeMap<usize, SparseRow<F::Elem>> {
        self.pivots
    }
}

/// Rank of a set of rows.
pub fn rank<F: Field>(field: &F, rows: impl IntoIterator<Item = SparseRow<F::Elem>>) -> usize {
    let mut ech = Echelon::<F>::new();
    for r in rows {
        ech.insert(field, r);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::PrimeField;

    #[test]
    fn reduced_echelon_has_clean_pivots() {
        let f = PrimeField::with_prime(5, 11).unwrap();
        let rows: Vec<SparseRow<u64>> = vec![vec![(0, 1), (2, 1)], vec![(1, 1), (2, 1)], vec![(0, 1), (1, 1), (2, 2)], vec![(0, 3)]];
        let mut e = Echelon::<PrimeField>::new();
        let ranks: Vec<bool> = rows.into_iter().map(|r| e.insert(&f, r)).collect();
        assert_eq!(ranks, vec![true, true, false, true]);
        e.finish(&f);
        for (col, row) in e.into_pivots() {
            assert_eq!(row.last().unwrap(), &(col, 1));
            assert_eq!(row.len(), 1, "column {col} should be fully eliminated");
        }
    }

    #[test]
    fn reduce_full_lands_outside_pivots() {
        let f = PrimeField::with_prime(5, 11).unwrap();
        let mut e = Echelon::<PrimeField>::new();
        e.insert(&f, vec![(0, 1), (3, 1)]);
        e.insert(&f, vec![(1, 2), (2, 1)]);
        e.finish(&f);
        let r = e.reduce_full(&f, vec![(0, 1), (1, 1), (2, 1), (3, 1)]);
        assert!(r.iter().all(|(c, _)| !e.is_pivot(*c)));
        assert_eq!(rank(&f, vec![vec![(0, 1u64)], vec![(0, 2)], vec![(1, 1)]]), 2);
    }
}
