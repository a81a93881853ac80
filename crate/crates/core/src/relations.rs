//! Defining relations of `A` and `gr A` and the subspaces built from them.
//!
//! The letter `*` never occurs in words: wherever an expansion produces it,
//! it is replaced by zero.

use crate::error::{Error, Result};
use crate::field::{Field, Matrix, Subspace};
use crate::graph::{EdgeId, LayeredGraph, Path, VertexId};
use crate::tensor::{component_dim, f_map, sandwich, weight, TensorVector};
use crate::Caps;

/// Generators plus the relation subspace of the length-2 component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPresentation<F: Field> {
    generator_dim: usize,
    relation_space: Subspace<F>,
}

impl<F: Field> QuadraticPresentation<F> {
    pub fn new(generator_dim: usize, relation_space: Subspace<F>) -> Result<Self> {
        if relation_space.ambient() != generator_dim * generator_dim {
            return Err(Error::DimensionMismatch(format!(
                "relations live in ambient {}, expected {generator_dim}^2",
                relation_space.ambient()
            )));
        }
        Ok(Self {
            generator_dim,
            relation_space,
        })
    }

    pub fn generator_dim(&self) -> usize {
        self.generator_dim
    }

    pub fn relation_space(&self) -> &Subspace<F> {
        &self.relation_space
    }

    pub fn field(&self) -> &F {
        self.relation_space.field()
    }

    /// Degree-`k` component `Σ_i V^i R V^(k-i-2)` of the two-sided ideal.
    pub fn ideal_component(&self, k: usize, cap: usize) -> Result<Subspace<F>> {
        let n = self.generator_dim;
        let dim = component_dim(n, k, cap)?;
        if k < 2 {
            return Ok(Subspace::zero(self.field(), dim));
        }
        let parts = (0..=k - 2)
            .map(|i| sandwich(&self.relation_space, n, i, k - 2 - i, cap))
            .collect::<Result<Vec<_>>>()?;
        Subspace::sum_all(self.field(), dim, &parts)
    }

    /// Ideal components of degrees `0..=max`, each built from the previous
    /// one as `I_k = I_(k-1) V + V^(k-2) R`.
    pub fn ideal_components(&self, max: usize, cap: usize) -> Result<Vec<Subspace<F>>> {
        let n = self.generator_dim;
        let f = self.field();
        let mut out = Vec::with_capacity(max + 1);
        for k in 0..=max {
            let dim = component_dim(n, k, cap)?;
            let next = if k < 2 {
                Subspace::zero(f, dim)
            } else {
                let prev = sandwich(&out[k - 1], n, 0, 1, cap)?;
                prev.sum(&sandwich(&self.relation_space, n, k - 2, 0, cap)?)?
            };
            out.push(next);
        }
        Ok(out)
    }

    /// Graded dimensions `n^k - dim I_k` of the quotient algebra.
    pub fn hilbert(&self, max: usize, cap: usize) -> Result<Vec<usize>> {
        Ok(self
            .ideal_components(max, cap)?
            .iter()
            .map(|i| i.ambient() - i.dim())
            .collect())
    }

    /// `R^(k) = ∩_{i=0}^{k-2} V^i R V^(k-i-2)`.
    pub fn r_intersect(&self, k: usize, cap: usize) -> Result<Subspace<F>> {
        if k < 2 {
            return Err(Error::OutOfRange(format!("R^(k) needs k >= 2, got {k}")));
        }
        let parts = (0..=k - 2)
            .map(|i| sandwich(&self.relation_space, self.generator_dim, i, k - 2 - i, cap))
            .collect::<Result<Vec<_>>>()?;
        Subspace::intersect_all(&parts)
    }
}

/// Coefficient of `t^k` in `(1 - t e_1)...(1 - t e_m)`:
/// `(-1)^k Σ_{i_1<...<i_k} e_(i_1)...e_(i_k)`.
pub fn path_coeff(path: &Path, k: usize) -> Result<TensorVector<EdgeId>> {
    let m = path.len();
    if k > m {
        return Err(Error::OutOfRange(format!(
            "coefficient {k} of a path of length {m}"
        )));
    }
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let mut out = TensorVector::zero(k);
    for subset in subsets(m, k) {
        out.add_term(subset.iter().map(|&i| path.edges()[i]).collect(), sign);
    }
    Ok(out)
}

/// Image of [`path_coeff`] in the vertex presentation: each edge `e_i` of
/// the path `v_0 → v_1 → ... → v_m` becomes `-(v_(i-1) - v_i)`, with `*`
/// replaced by zero.
pub fn theta_path_coeff(
    graph: &LayeredGraph,
    path: &Path,
    k: usize,
) -> Result<TensorVector<VertexId>> {
    let m = path.len();
    if k == 0 || k > m {
        return Err(Error::OutOfRange(format!(
            "vertex coefficient {k} of a path of length {m}"
        )));
    }
    let vs = path.vertices(graph);
    let star = graph.star();
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let mut out = TensorVector::zero(k);
    for subset in subsets(m, k) {
        // the factor for edge i is v_i - v_(i+1) (0-based edges)
        let mut partial: Vec<(Vec<VertexId>, i64)> = vec![(Vec::new(), sign)];
        for &i in &subset {
            let mut next = Vec::with_capacity(partial.len() * 2);
            for (w, c) in &partial {
                for (x, s) in [(vs[i], 1), (vs[i + 1], -1)] {
                    if Some(x) == star {
                        continue;
                    }
                    let mut w2 = w.clone();
                    w2.push(x);
                    next.push((w2, c * s));
                }
            }
            partial = next;
        }
        for (w, c) in partial {
            out.add_term(w, c);
        }
    }
    Ok(out)
}

/// `v_0 v_1 ... v_(k-1)`, the first `k` vertices of the path.
pub fn v_word(graph: &LayeredGraph, path: &Path, k: usize) -> Result<Vec<VertexId>> {
    let vs = path.vertices(graph);
    if k == 0 || k > vs.len() {
        return Err(Error::OutOfRange(format!(
            "prefix of {k} vertices of a path with {} vertices",
            vs.len()
        )));
    }
    let w = vs[..k].to_vec();
    if w.iter().any(|&v| graph.level(v) == 0) {
        return Err(Error::OutOfRange(format!(
            "prefix of {k} vertices reaches *"
        )));
    }
    Ok(w)
}

/// The part of `x` of largest weight (sum of letter levels).
pub fn leading_part(graph: &LayeredGraph, x: &TensorVector<VertexId>) -> TensorVector<VertexId> {
    let top = x.terms().map(|(w, _)| weight(graph, w)).max();
    let mut out = TensorVector::zero(x.length());
    for (w, c) in x.terms() {
        if Some(weight(graph, w)) == top {
            out.add_term(w.to_vec(), c);
        }
    }
    out
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

fn word(letters: &[VertexId], star: Option<VertexId>) -> Option<Vec<VertexId>> {
    if letters.iter().any(|&x| Some(x) == star) {
        None
    } else {
        Some(letters.to_vec())
    }
}

/// Triples `(v, u, w, x)` with `u < w` children of `v` sharing the child `x`.
fn shared_child_quads(graph: &LayeredGraph) -> Vec<(VertexId, VertexId, VertexId, VertexId)> {
    let mut out = Vec::new();
    for v in graph.positive_vertices() {
        if graph.level(v) < 2 {
            continue;
        }
        let kids = graph.s_set(v, 1);
        for (a, &u) in kids.iter().enumerate() {
            let uk = graph.s_set(u, 1);
            for &w in &kids[a + 1..] {
                for x in graph.s_set(w, 1) {
                    if uk.contains(&x) {
                        out.push((v, u, w, x));
                    }
                }
            }
        }
    }
    out
}

/// The quadratic relations `v(u-w) - u^2 + w^2 + (u-w)x` of `A`, one per
/// vertex `v` of level at least 2, pair of children `u < w` and shared
/// grandchild `x`. Fails on non-uniform graphs.
pub fn quadratic_generators_a(graph: &LayeredGraph) -> Result<Vec<TensorVector<VertexId>>> {
    graph.require_uniform()?;
    let star = graph.star();
    let mut out = Vec::new();
    for (v, u, w, x) in shared_child_quads(graph) {
        let mut r = TensorVector::zero(2);
        for (letters, c) in [
            ([v, u], 1),
            ([v, w], -1),
            ([u, u], -1),
            ([w, w], 1),
            ([u, x], 1),
            ([w, x], -1),
        ] {
            if let Some(wd) = word(&letters, star) {
                r.add_term(wd, c);
            }
        }
        out.push(r);
    }
    Ok(out)
}

/// The quadratic relations `v(u-w)` of `gr A` for children `u < w` of `v`
/// sharing a child. Fails on non-uniform graphs.
pub fn quadratic_generators_gr(graph: &LayeredGraph) -> Result<Vec<TensorVector<VertexId>>> {
    graph.require_uniform()?;
    let mut out: Vec<TensorVector<VertexId>> = Vec::new();
    for (v, u, w, _) in shared_child_quads(graph) {
        let r = TensorVector::monomial(vec![v, u], 1).sub(&TensorVector::monomial(vec![v, w], 1));
        if out.last() != Some(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

fn presentation<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    gens: &[TensorVector<VertexId>],
) -> Result<QuadraticPresentation<F>> {
    let n = graph.num_positive();
    let space = Subspace::span(field, n * n, gens.iter().map(|g| g.to_row(field, n)));
    QuadraticPresentation::new(n, space)
}

pub fn quadratic_relations_a<F: Field>(
    graph: &LayeredGraph,
    field: &F,
) -> Result<QuadraticPresentation<F>> {
    presentation(graph, field, &quadratic_generators_a(graph)?)
}

pub fn quadratic_relations_gr<F: Field>(
    graph: &LayeredGraph,
    field: &F,
) -> Result<QuadraticPresentation<F>> {
    presentation(graph, field, &quadratic_generators_gr(graph)?)
}

/// Which of the two presentations to work with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Presentation {
    A,
    Graded,
}

pub fn quadratic_relations<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    which: Presentation,
) -> Result<QuadraticPresentation<F>> {
    match which {
        Presentation::A => quadratic_relations_a(graph, field),
        Presentation::Graded => quadratic_relations_gr(graph, field),
    }
}

/// For each degree `j` in `1..=max`, the span of
/// `θ(e(π₁,j)) - θ(e(π₂,j))` over pairs of paths from a common vertex to `*`.
pub fn path_relation_generators<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    max: usize,
    caps: &Caps,
) -> Result<Vec<Subspace<F>>> {
    let n = graph.num_positive();
    let star = graph
        .star()
        .ok_or_else(|| Error::UnknownVertex("*".into()))?;
    let mut rows: Vec<Vec<_>> = vec![Vec::new(); max + 1];
    for v in graph.positive_vertices() {
        let paths = graph.enumerate_paths(v, star, caps.paths)?;
        for j in 1..=max.min(graph.level(v)) {
            component_dim(n, j, caps.ambient)?;
            let first = theta_path_coeff(graph, &paths[0], j)?;
            for p in &paths[1..] {
                let d = theta_path_coeff(graph, p, j)?.sub(&first);
                if !d.is_zero() {
                    rows[j].push(d.to_row(field, n));
                }
            }
        }
    }
    rows.into_iter()
        .enumerate()
        .map(|(j, r)| Ok(Subspace::span(field, component_dim(n, j, caps.ambient)?, r)))
        .collect()
}

/// Degree-`k` component of the ideal generated by all path relations of
/// every degree, assembled as `Σ_j Σ_a V^a G_j V^(k-j-a)`.
pub fn full_relation_span<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    k: usize,
    caps: &Caps,
) -> Result<Subspace<F>> {
    let n = graph.num_positive();
    let dim = component_dim(n, k, caps.ambient)?;
    let gens = path_relation_generators(graph, field, k, caps)?;
    let mut parts = Vec::new();
    for (j, g) in gens.iter().enumerate().skip(1) {
        if g.is_zero() {
            continue;
        }
        for a in 0..=k - j {
            parts.push(sandwich(g, n, a, k - j - a, caps.ambient)?);
        }
    }
    Subspace::sum_all(field, dim, &parts)
}

/// `S_l(v)`: span of the vertices `l` levels below `v`; `S_0(v) = span{v}`.
pub fn s_span<F: Field>(graph: &LayeredGraph, field: &F, v: VertexId, l: usize) -> Subspace<F> {
    let n = graph.num_positive();
    let members: Vec<VertexId> = if l == 0 { vec![v] } else { graph.s_set(v, l) };
    Subspace::span(
        field,
        n,
        members
            .into_iter()
            .filter(|&u| graph.level(u) > 0)
            .map(|u| vec![(u.0, field.one())]),
    )
}

/// `P_l(v)`: span of differences of vertices `l` levels below `v`.
pub fn p_span<F: Field>(graph: &LayeredGraph, field: &F, v: VertexId, l: usize) -> Subspace<F> {
    let n = graph.num_positive();
    if l == 0 {
        return Subspace::zero(field, n);
    }
    let members: Vec<VertexId> = graph
        .s_set(v, l)
        .into_iter()
        .filter(|&u| graph.level(u) > 0)
        .collect();
    let Some(&first) = members.first() else {
        return Subspace::zero(field, n);
    };
    Subspace::span(
        field,
        n,
        members[1..].iter().map(|u| {
            let mut r = vec![(first.0, field.one()), (u.0, field.neg(&field.one()))];
            r.sort_by_key(|(c, _)| *c);
            r
        }),
    )
}

fn extend_words(graph: &LayeredGraph, prefix: &mut Vec<VertexId>, k: usize, out: &mut Vec<usize>) {
    if prefix.len() == k {
        let last = *prefix.last().expect("k >= 1");
        assert!(
            !graph.out_edges(last).is_empty(),
            "positive vertex {} without outgoing edge",
            graph.name(last)
        );
        out.push(crate::tensor::word_index(graph.num_positive(), prefix));
        return;
    }
    let last = *prefix.last().expect("nonempty prefix");
    let mut heads: Vec<VertexId> = graph
        .out_edges(last)
        .iter()
        .map(|&e| graph.edge(e).head)
        .filter(|&h| graph.level(h) > 0)
        .collect();
    heads.dedup();
    for h in heads {
        prefix.push(h);
        extend_words(graph, prefix, k, out);
        prefix.pop();
    }
}

/// `Path_k(v)`: span of the edge-consecutive length-`k` words of positive
/// vertices starting at `v`.
pub fn path_span_from<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    v: VertexId,
    k: usize,
    caps: &Caps,
) -> Result<Subspace<F>> {
    path_words(graph, field, std::iter::once(v), k, caps)
}

/// `Path_k`: span of all edge-consecutive length-`k` words of positive
/// vertices.
pub fn path_span<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    k: usize,
    caps: &Caps,
) -> Result<Subspace<F>> {
    path_words(graph, field, graph.positive_vertices(), k, caps)
}

fn path_words<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    starts: impl Iterator<Item = VertexId>,
    k: usize,
    caps: &Caps,
) -> Result<Subspace<F>> {
    if k == 0 {
        return Err(Error::OutOfRange("path words need k >= 1".into()));
    }
    let dim = component_dim(graph.num_positive(), k, caps.ambient)?;
    let mut idx = Vec::new();
    for v in starts.filter(|&v| graph.level(v) > 0) {
        extend_words(graph, &mut vec![v], k, &mut idx);
    }
    idx.sort_unstable();
    idx.dedup();
    let rows = idx.into_iter().map(|i| vec![(i, field.one())]).collect();
    Ok(Subspace::from_rref_rows(field, dim, rows))
}

/// `∩_{p=1}^{k-1} ker(I^p ⊗ f ⊗ I^(k-p-1))` in the length-`k` component.
pub fn f_kernels<F: Field>(field: &F, n: usize, k: usize, cap: usize) -> Result<Subspace<F>> {
    let dim = component_dim(n, k, cap)?;
    let mut acc = Subspace::full(field, dim);
    for p in 1..k {
        let m: Matrix<F> = f_map(field, n, k, p, cap)?;
        acc = acc.intersect(&m.kernel())?;
    }
    Ok(acc)
}
