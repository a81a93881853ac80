use crate::error::{Error, Result};

use super::{Echelon, Field, Row};

/// A subspace of `F^ambient`, stored as its reduced row-echelon basis.
///
/// The representation is canonical: two values compare equal iff they are
/// the same subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Row<F::Elem>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Self {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Self {
            field: field.clone(),
            ambient,
            rows: (0..ambient).map(|c| vec![(c, field.one())]).collect(),
        }
    }

    /// Span of arbitrary sparse vectors. Panics if a column is out of range.
    pub fn span<I>(field: &F, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Row<F::Elem>>,
    {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            e.insert(v);
        }
        Self::from_echelon(e)
    }

    pub(crate) fn from_echelon(e: Echelon<F>) -> Self {
        let ambient = e.ncols();
        let field = e.field().clone();
        Self {
            field,
            ambient,
            rows: e.into_rref(),
        }
    }

    /// Trusted constructor for rows already in reduced echelon form.
    pub(crate) fn from_rref_rows(field: &F, ambient: usize, rows: Vec<Row<F::Elem>>) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0][0].0 < w[1][0].0));
        Self {
            field: field.clone(),
            ambient,
            rows,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Basis rows in reduced echelon form, sorted by pivot column.
    pub fn rows(&self) -> &[Row<F::Elem>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Row<F::Elem>> {
        self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    pub(crate) fn echelon(&self) -> Echelon<F> {
        Echelon::with_echelon_rows(&self.field, self.ambient, self.rows.clone())
    }

    /// Canonical representative of `v` modulo this subspace, supported on
    /// non-pivot columns.
    pub fn reduce(&self, v: &Row<F::Elem>) -> Row<F::Elem> {
        self.echelon().reduce(v.iter().cloned())
    }

    pub fn contains(&self, v: &Row<F::Elem>) -> bool {
        self.reduce(v).is_empty()
    }

    /// `other ⊆ self`.
    pub fn contains_subspace(&self, other: &Self) -> bool {
        let mut e = self.echelon();
        other
            .rows
            .iter()
            .all(|r| e.reduce(r.iter().cloned()).is_empty())
    }

    fn check_ambient(&self, other: &Self, op: &str) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "{op} of subspaces with ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other, "sum")?;
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_zero() {
            return Ok(big.clone());
        }
        let mut e = big.echelon();
        for r in &small.rows {
            e.insert(r.iter().cloned());
        }
        Ok(Self::from_echelon(e))
    }

    /// Sum of many subspaces of a common ambient space.
    pub fn sum_all<'a, I>(field: &F, ambient: usize, parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
        F: 'a,
    {
        let mut e = Echelon::new(field, ambient);
        for p in parts {
            if p.ambient != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "sum of subspaces with ambient dimensions {ambient} and {}",
                    p.ambient
                )));
            }
            for r in &p.rows {
                e.insert(r.iter().cloned());
            }
        }
        Ok(Self::from_echelon(e))
    }

    /// Intersection, from the kernel of the stacked map
    /// `x ↦ Σ x_j (b_j mod a)`: rows `[b_j mod a | b_j]` are eliminated and
    /// the rows whose left half vanished span `a ∩ b` in their right half.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other, "intersection")?;
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_zero() || big.is_full() {
            return Ok(small.clone());
        }
        let n = self.ambient;
        let mut red = big.echelon();
        let mut stacked = Echelon::new(&self.field, 2 * n);
        for b in &small.rows {
            let left = red.reduce(b.iter().cloned());
            let right = b.iter().map(|(c, x)| (c + n, x.clone()));
            stacked.insert(left.into_iter().chain(right));
        }
        let meet: Vec<Row<F::Elem>> = stacked
            .rows()
            .iter()
            .filter(|r| r[0].0 >= n)
            .map(|r| r.iter().map(|(c, x)| (c - n, x.clone())).collect())
            .collect();
        Ok(Self::span(&self.field, n, meet))
    }

    /// Intersection of a nonempty family.
    pub fn intersect_all<'a, I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
        F: 'a,
    {
        let mut it = parts.into_iter();
        let mut acc = it.next().expect("intersection of an empty family").clone();
        for p in it {
            acc = acc.intersect(p)?;
        }
        Ok(acc)
    }

    /// Tensor product with respect to the coordinate order
    /// `(i, j) ↦ i * other.ambient + j`.
    ///
    /// For reduced echelon bases the pairwise products are again in reduced
    /// echelon form (a product row meets a pivot column only at its own
    /// pivot), so no elimination is needed.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        let m = other.ambient;
        let ambient = self
            .ambient
            .checked_mul(m)
            .ok_or_else(|| Error::DimensionMismatch("tensor product overflows usize".into()))?;
        let f = &self.field;
        let mut rows = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.rows {
            for b in &other.rows {
                let mut r = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (j, y) in b {
                        r.push((i * m + j, f.mul(x, y)));
                    }
                }
                rows.push(r);
            }
        }
        Ok(Self::from_rref_rows(f, ambient, rows))
    }

    /// Orthogonal complement under the standard dot product.
    pub fn orthogonal_complement(&self) -> Self {
        let f = &self.field;
        let mut pivot_of = vec![false; self.ambient];
        for p in self.pivots() {
            pivot_of[p] = true;
        }
        // one kernel vector per free column c: e_c - Σ_r row_r[c] e_{pivot r}
        let mut free: Vec<Row<F::Elem>> = (0..self.ambient)
            .filter(|&c| !pivot_of[c])
            .map(|c| vec![(c, f.one())])
            .collect();
        let mut slot = vec![usize::MAX; self.ambient];
        for (k, v) in free.iter().enumerate() {
            slot[v[0].0] = k;
        }
        for row in &self.rows {
            let p = row[0].0;
            for (c, x) in row.iter().skip(1) {
                free[slot[*c]].push((p, f.neg(x)));
            }
        }
        for v in free.iter_mut() {
            v.sort_by_key(|(c, _)| *c);
        }
        Self::span(f, self.ambient, free)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn gf7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn sum_identities() {
        let f = gf7();
        let a = Subspace::span(&f, 3, vec![vec![(0, 1), (1, 1)]]);
        let z = Subspace::zero(&f, 3);
        assert_eq!(a.sum(&z).unwrap(), a);
        assert_eq!(a.sum(&a).unwrap(), a);
        let e1 = Subspace::span(&f, 2, vec![vec![(0, 1)]]);
        let e2 = Subspace::span(&f, 2, vec![vec![(1, 1)]]);
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
    }

    #[test]
    fn intersect_examples() {
        let f = gf7();
        let a = Subspace::span(&f, 2, vec![vec![(0, 1), (1, 1)]]);
        let e1 = Subspace::span(&f, 2, vec![vec![(0, 1)]]);
        assert!(a.intersect(&e1).unwrap().is_zero());
        let full = Subspace::full(&f, 2);
        assert_eq!(a.intersect(&full).unwrap(), a);
        assert_eq!(full.intersect(&a).unwrap(), a);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f = gf7();
        let a = Subspace::zero(&f, 2);
        let b = Subspace::zero(&f, 3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch(_))));
        assert!(matches!(a.intersect(&b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn zero_dimensional_ambient_has_one_subspace() {
        let f = gf7();
        assert_eq!(Subspace::zero(&f, 0), Subspace::full(&f, 0));
    }

    #[test]
    fn kron_of_line_with_point() {
        let f = gf7();
        // span(u - w) ⊗ span(x) with letters u=0, w=1, x=2 in a 3-letter alphabet
        let a = Subspace::span(&f, 3, vec![vec![(0, 1), (1, 6)]]);
        let b = Subspace::span(&f, 3, vec![vec![(2, 1)]]);
        let ab = a.kron(&b).unwrap();
        assert_eq!(ab.dim(), 1);
        assert_eq!(ab.rows()[0], vec![(2, 1), (5, 6)]);
        let full = Subspace::full(&f, 3);
        assert_eq!(a.kron(&full).unwrap().dim(), 3);
        assert!(Subspace::zero(&f, 3).kron(&b).unwrap().is_zero());
    }

    #[test]
    fn complement_dimensions() {
        let f = gf7();
        let a = Subspace::span(
            &f,
            4,
            vec![vec![(0, 1), (1, 2), (3, 1)], vec![(1, 1), (2, 3)]],
        );
        let c = a.orthogonal_complement();
        assert_eq!(c.dim(), 2);
        for x in a.rows() {
            for y in c.rows() {
                let dot = crate::field::combine(&f, [(&1u32, x)]);
                let s = dot.iter().fold(0u32, |s, (col, v)| {
                    let w = y
                        .iter()
                        .find(|(c2, _)| c2 == col)
                        .map(|(_, w)| *w)
                        .unwrap_or(0);
                    f.add(&s, &f.mul(v, &w))
                });
                assert_eq!(s, 0);
            }
        }
        assert_eq!(c.orthogonal_complement(), a);
    }
}
