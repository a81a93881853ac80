use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Field, Row};

const NO_PIVOT: u32 = u32::MAX;

/// Incremental Gaussian elimination over sparse rows.
///
/// Rows are kept in echelon form (leading entry 1, distinct pivots) while
/// inserting; [`Echelon::into_rref`] back-substitutes to the reduced form.
/// Reduction uses a dense scratch accumulator plus a min-heap of touched
/// columns, so a vector is reduced in increasing column order in one sweep.
pub(crate) struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Row<F::Elem>>,
    pivot_row: Vec<u32>,
    acc: Vec<F::Elem>,
    mark: Vec<bool>,
    heap: BinaryHeap<Reverse<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, ncols: usize) -> Self {
        Self {
            field: field.clone(),
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
            acc: vec![field.zero(); ncols],
            mark: vec![false; ncols],
            heap: BinaryHeap::new(),
        }
    }

    /// Seeds the eliminator with rows that are already in echelon form.
    pub fn with_echelon_rows(field: &F, ncols: usize, rows: Vec<Row<F::Elem>>) -> Self {
        let mut e = Self::new(field, ncols);
        for row in rows {
            let (p, _) = row[0];
            debug_assert!(field.is_zero(&field.sub(&row[0].1, &field.one())));
            debug_assert_eq!(e.pivot_row[p], NO_PIVOT);
            e.pivot_row[p] = e.rows.len() as u32;
            e.rows.push(row);
        }
        e
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `v` against the current rows. The result has no entries in
    /// pivot columns.
    pub fn reduce<I>(&mut self, v: I) -> Row<F::Elem>
    where
        I: IntoIterator<Item = (usize, F::Elem)>,
    {
        let f = &self.field;
        for (c, x) in v {
            assert!(c < self.ncols, "column {c} out of range {}", self.ncols);
            if self.mark[c] {
                self.acc[c] = f.add(&self.acc[c], &x);
            } else {
                self.acc[c] = x;
                self.mark[c] = true;
                self.heap.push(Reverse(c));
            }
        }
        let mut out = Vec::new();
        let zero = f.zero();
        while let Some(Reverse(c)) = self.heap.pop() {
            self.mark[c] = false;
            let x = std::mem::replace(&mut self.acc[c], zero.clone());
            if f.is_zero(&x) {
                continue;
            }
            let r = self.pivot_row[c];
            if r == NO_PIVOT {
                out.push((c, x));
                continue;
            }
            for (c2, y) in self.rows[r as usize].iter().skip(1) {
                let t = f.mul(&x, y);
                if self.mark[*c2] {
                    self.acc[*c2] = f.sub(&self.acc[*c2], &t);
                } else {
                    self.acc[*c2] = f.neg(&t);
                    self.mark[*c2] = true;
                    self.heap.push(Reverse(*c2));
                }
            }
        }
        out
    }

    /// Inserts a vector; returns `true` when the rank grew.
    pub fn insert<I>(&mut self, v: I) -> bool
    where
        I: IntoIterator<Item = (usize, F::Elem)>,
    {
        let mut out = self.reduce(v);
        if out.is_empty() {
            return false;
        }
        let lead = self.field.inv(&out[0].1);
        for (_, x) in out.iter_mut() {
            *x = self.field.mul(x, &lead);
        }
        self.pivot_row[out[0].0] = self.rows.len() as u32;
        self.rows.push(out);
        true
    }

    /// Rows of the current echelon form (not necessarily reduced).
    pub fn rows(&self) -> &[Row<F::Elem>] {
        &self.rows
    }

    /// Back-substitutes and returns the reduced row-echelon basis sorted by
    /// pivot column.
    pub fn into_rref(mut self) -> Vec<Row<F::Elem>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| Reverse(self.rows[i][0].0));
        for i in order {
            let row = std::mem::take(&mut self.rows[i]);
            let mut it = row.into_iter();
            let lead = it.next().expect("echelon rows are nonempty");
            let tail = self.reduce(it);
            let mut full = Vec::with_capacity(tail.len() + 1);
            full.push(lead);
            full.extend(tail);
            self.rows[i] = full;
        }
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn insert_detects_dependence() {
        let f = PrimeField::new(7).unwrap();
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(vec![(0, 1), (1, 2)]));
        assert!(e.insert(vec![(1, 1), (2, 1)]));
        // (1,3,1) = row0 + row1
        assert!(!e.insert(vec![(0, 1), (1, 3), (2, 1)]));
        assert_eq!(e.rank(), 2);
        let rref = e.into_rref();
        assert_eq!(rref, vec![vec![(0, 1), (2, 5)], vec![(1, 1), (2, 1)]]);
    }
}
