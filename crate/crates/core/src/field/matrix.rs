use crate::error::{Error, Result};

use super::{Echelon, Field, Row, Subspace};

/// A sparse matrix acting on column vectors: `x ↦ M x`, mapping
/// `F^cols` (the domain) to `F^rows` (the codomain).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<Row<F::Elem>>,
}

impl<F: Field> Matrix<F> {
    pub fn from_rows(field: &F, cols: usize, data: Vec<Row<F::Elem>>) -> Self {
        debug_assert!(data.iter().all(|r| r.iter().all(|(c, _)| *c < cols)));
        Self {
            field: field.clone(),
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: &F, rows: usize, columns: Vec<Row<F::Elem>>) -> Self {
        let cols = columns.len();
        let t = Self {
            field: field.clone(),
            rows: cols,
            cols: rows,
            data: columns,
        };
        t.transpose()
    }

    pub fn identity(field: &F, n: usize) -> Self {
        Self::from_rows(field, n, (0..n).map(|i| vec![(i, field.one())]).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &Row<F::Elem> {
        &self.data[i]
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn transpose(&self) -> Self {
        let mut t: Vec<Row<F::Elem>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                t[*j].push((i, x.clone()));
            }
        }
        Self {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data: t,
        }
    }

    /// Columns as sparse vectors, i.e. the images of the standard basis.
    pub fn columns(&self) -> Vec<Row<F::Elem>> {
        self.transpose().data
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(&self.field, self.cols);
        for r in &self.data {
            e.insert(r.iter().cloned());
        }
        e.rank()
    }

    /// `M x` for a sparse `x` in the domain.
    pub fn apply(&self, x: &Row<F::Elem>) -> Row<F::Elem> {
        let cols = self.columns();
        apply_columns(&self.field, &cols, x)
    }

    /// Image of a subspace of the domain.
    pub fn image(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        if s.ambient() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "map with domain {} applied to subspace of ambient {}",
                self.cols,
                s.ambient()
            )));
        }
        let cols = self.columns();
        let mut e = Echelon::new(&self.field, self.rows);
        for r in s.rows() {
            e.insert(apply_columns(&self.field, &cols, r));
        }
        Ok(Subspace::from_echelon(e))
    }

    /// Null space, a subspace of the domain.
    pub fn kernel(&self) -> Subspace<F> {
        kernel_of_images(&self.field, self.rows, self.columns())
    }

    /// `{x : M x ∈ s}`, the kernel of the composite with the quotient map by `s`.
    pub fn preimage(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        if s.ambient() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "preimage under map with codomain {} of subspace of ambient {}",
                self.rows,
                s.ambient()
            )));
        }
        let mut red = s.echelon();
        let images = self.columns().into_iter().map(|c| red.reduce(c)).collect();
        Ok(kernel_of_images(&self.field, self.rows, images))
    }
}

/// Reduced row-echelon form with zero rows dropped.
pub fn rref<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let s = Subspace::span(&m.field, m.cols, m.data.iter().cloned());
    Matrix::from_rows(&m.field, m.cols, s.into_rows())
}

fn apply_columns<F: Field>(field: &F, cols: &[Row<F::Elem>], x: &Row<F::Elem>) -> Row<F::Elem> {
    super::combine(field, x.iter().map(|(j, c)| (c, &cols[*j])))
}

/// Kernel of the linear map sending `e_j` to `images[j]` (vectors of length
/// `codomain`): rows `[images[j] | e_j]` are eliminated, and the rows whose
/// pivot lies in the identity block carry the kernel.
pub(crate) fn kernel_of_images<F: Field>(
    field: &F,
    codomain: usize,
    images: Vec<Row<F::Elem>>,
) -> Subspace<F> {
    let domain = images.len();
    let mut e = Echelon::new(field, codomain + domain);
    for (j, img) in images.into_iter().enumerate() {
        let mut row = img;
        row.push((codomain + j, field.one()));
        e.insert(row);
    }
    let kernel: Vec<Row<F::Elem>> = e
        .rows()
        .iter()
        .filter(|r| r[0].0 >= codomain)
        .map(|r| r.iter().map(|(c, x)| (c - codomain, x.clone())).collect())
        .collect();
    Subspace::span(field, domain, kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn rref_small_example() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(&f, 2, vec![vec![(0, 2), (1, 4)], vec![(0, 1), (1, 2)]]);
        let r = rref(&m);
        assert_eq!(r.nrows(), 1);
        assert_eq!(r.row(0), &vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rref_of_identity_and_zero() {
        let f = PrimeField::new(7).unwrap();
        let id = Matrix::identity(&f, 4);
        assert_eq!(rref(&id), id);
        let z = Matrix::from_rows(&f, 3, vec![vec![], vec![]]);
        assert_eq!(rref(&z).nrows(), 0);
    }

    #[test]
    fn kernel_of_all_ones_functional() {
        let f = PrimeField::new(7).unwrap();
        let d = 5;
        let ones = Matrix::from_rows(&f, d, vec![(0..d).map(|i| (i, 1)).collect()]);
        let k = ones.kernel();
        assert_eq!(k.dim(), d - 1);
        for r in k.rows() {
            let s = r.iter().fold(0, |s, (_, x)| f.add(&s, x));
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn identity_image_and_preimage() {
        let f = PrimeField::new(7).unwrap();
        let s = Subspace::span(&f, 3, vec![vec![(0, 1), (2, 3)]]);
        let id = Matrix::identity(&f, 3);
        assert_eq!(id.image(&s).unwrap(), s);
        assert_eq!(id.preimage(&s).unwrap(), s);
    }

    #[test]
    fn dimension_mismatch_errors() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(&f, 3, vec![vec![(0, 1)]]);
        assert!(m.image(&Subspace::zero(&f, 2)).is_err());
        assert!(m.preimage(&Subspace::zero(&f, 3)).is_err());
    }
}
