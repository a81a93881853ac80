//! Homogeneous components of the tensor algebra on the vertices of positive
//! level.
//!
//! Letters are vertex ids `0..n` with `n = |V^+|`. The length-`k` component
//! has coordinates `0..n^k`; the word `x_0 x_1 ... x_{k-1}` sits at index
//! `Σ x_i n^{k-1-i}`, so coordinate order is lexicographic word order under
//! the canonical vertex order.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::field::{Field, Matrix, Row, Subspace};
use crate::graph::{LayeredGraph, VertexId};

/// Default bound on the dimension of any tensor component materialized.
pub const DEFAULT_AMBIENT_CAP: usize = 2_000_000;

/// `n^k`, or [`Error::AmbientCap`] when it exceeds `cap`.
pub fn component_dim(n: usize, k: usize, cap: usize) -> Result<usize> {
    let too_large = || Error::AmbientCap {
        what: format!("length-{k} words in {n} letters"),
        needed: (n as u128).saturating_pow(k as u32),
        cap,
    };
    let d = u32::try_from(k)
        .ok()
        .and_then(|k| n.checked_pow(k))
        .ok_or_else(too_large)?;
    if d > cap {
        return Err(too_large());
    }
    Ok(d)
}

/// Coordinate of a word in its component.
pub fn word_index(n: usize, word: &[VertexId]) -> usize {
    word.iter().fold(0, |acc, v| {
        debug_assert!(v.0 < n, "letter {} outside alphabet of size {n}", v.0);
        acc * n + v.0
    })
}

/// The length-`k` word at coordinate `index`.
pub fn word_at(n: usize, k: usize, mut index: usize) -> Vec<VertexId> {
    let mut w = vec![VertexId(0); k];
    for slot in w.iter_mut().rev() {
        *slot = VertexId(index % n);
        index /= n;
    }
    w
}

/// Sum of the levels of the letters.
pub fn weight(graph: &LayeredGraph, word: &[VertexId]) -> usize {
    word.iter().map(|&v| graph.level(v)).sum()
}

/// A finite integer combination of words of a common length, over vertex
/// letters or edge letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector<L: Ord> {
    length: usize,
    terms: BTreeMap<Vec<L>, i64>,
}

impl<L: Ord + Clone> TensorVector<L> {
    pub fn zero(length: usize) -> Self {
        Self {
            length,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(word: Vec<L>, coeff: i64) -> Self {
        let mut v = Self::zero(word.len());
        v.add_term(word, coeff);
        v
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in word order.
    pub fn terms(&self) -> impl Iterator<Item = (&[L], i64)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), *c))
    }

    pub fn coeff(&self, word: &[L]) -> i64 {
        self.terms.get(word).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, word: Vec<L>, coeff: i64) {
        assert_eq!(
            word.len(),
            self.length,
            "word length differs from component"
        );
        if coeff == 0 {
            return;
        }
        match self.terms.entry(word) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.length, other.length);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero(self.length);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// Concatenation product.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.length + other.length);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// Renders as `+1·[a|b] -1·[c|d]` using `name` for letters; the zero
    /// vector renders as `0`.
    pub fn format_with(&self, mut name: impl FnMut(&L) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (w, c) in &self.terms {
            if !s.is_empty() {
                s.push(' ');
            }
            let letters: Vec<String> = w.iter().map(&mut name).collect();
            write!(s, "{c:+}·[{}]", letters.join("|")).unwrap();
        }
        s
    }
}

impl TensorVector<VertexId> {
    /// Coordinates in the length-`k` component over `n` letters.
    pub fn to_row<F: Field>(&self, field: &F, n: usize) -> Row<F::Elem> {
        let mut row: Row<F::Elem> = self
            .terms
            .iter()
            .map(|(w, c)| (word_index(n, w), field.from_i64(*c)))
            .filter(|(_, x)| !field.is_zero(x))
            .collect();
        row.sort_by_key(|(i, _)| *i);
        row
    }

    pub fn format(&self, graph: &LayeredGraph) -> String {
        self.format_with(|v| graph.name(*v).to_string())
    }
}

/// Renders a coordinate vector of the length-`k` component in the monomial
/// format, with field elements in signed form.
pub fn format_row<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    k: usize,
    row: &Row<F::Elem>,
) -> String {
    if row.is_empty() {
        return "0".to_string();
    }
    let n = graph.num_positive();
    let terms: Vec<String> = row
        .iter()
        .map(|(i, x)| {
            let letters: Vec<&str> = word_at(n, k, *i).iter().map(|&v| graph.name(v)).collect();
            format!("{}·[{}]", field.format(x), letters.join("|"))
        })
        .collect();
    terms.join(" ")
}

/// Matrix of `I^position ⊗ f ⊗ I^(k-position-1)` from the length-`k`
/// component to the length-`(k-1)` component, where `f` sends every letter
/// to 1. It deletes the letter at `position`.
pub fn f_map<F: Field>(
    field: &F,
    n: usize,
    k: usize,
    position: usize,
    cap: usize,
) -> Result<Matrix<F>> {
    if position >= k {
        return Err(Error::OutOfRange(format!(
            "position {position} outside words of length {k}"
        )));
    }
    let dim = component_dim(n, k, cap)?;
    let low = n.pow((k - position - 1) as u32);
    let columns = (0..dim)
        .map(|i| {
            let (high, rest) = (i / (low * n), i % low);
            vec![(high * low + rest, field.one())]
        })
        .collect();
    Ok(Matrix::from_columns(field, dim / n.max(1), columns))
}

/// `a ⊗ b` as a subspace of the concatenated component.
pub fn concat_subspaces<F: Field>(
    a: &Subspace<F>,
    b: &Subspace<F>,
    cap: usize,
) -> Result<Subspace<F>> {
    let needed = a.ambient() as u128 * b.ambient() as u128;
    if needed > cap as u128 {
        return Err(Error::AmbientCap {
            what: "tensor product of subspaces".into(),
            needed,
            cap,
        });
    }
    a.kron(b)
}

/// `V^left ⊗ w ⊗ V^right` for `w` in a component over `n` letters.
pub fn sandwich<F: Field>(
    w: &Subspace<F>,
    n: usize,
    left: usize,
    right: usize,
    cap: usize,
) -> Result<Subspace<F>> {
    let f = w.field();
    let lo = component_dim(n, left, cap)?;
    let hi = component_dim(n, right, cap)?;
    let mid = concat_subspaces(&Subspace::full(f, lo), w, cap)?;
    concat_subspaces(&mid, &Subspace::full(f, hi), cap)
}
