//! Koszulity checks at bounded degree: the quadratic dual, the Euler
//! characteristic condition, `Tor` of the ground field from the reduced bar
//! complex, and distributivity of finitely generated subspace lattices.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::{Echelon, Field, Row, Subspace};
use crate::graph::{LayeredGraph, VertexId};
use crate::relations::{
    f_kernels, p_span, path_span, quadratic_relations_gr, s_span, QuadraticPresentation,
};
use crate::tensor::{component_dim, f_map, sandwich};
use crate::Caps;

/// Default bound on the size of a lattice closure.
pub const DEFAULT_LATTICE_CAP: usize = 5000;

/// The quadratic dual: same generators, relations the orthogonal complement
/// under the pairing in which words form an orthonormal basis.
pub fn quadratic_dual<F: Field>(p: &QuadraticPresentation<F>) -> QuadraticPresentation<F> {
    QuadraticPresentation::new(
        p.generator_dim(),
        p.relation_space().orthogonal_complement(),
    )
    .expect("complement keeps the ambient dimension")
}

/// Residuals `r_n = Σ_{i=0}^n (-1)^i dim A^!_i dim A_(n-i)` for
/// `n = 1..=max`; a Koszul algebra has all of them zero.
pub fn euler_check<F: Field>(
    p: &QuadraticPresentation<F>,
    max: usize,
    cap: usize,
) -> Result<Vec<i128>> {
    let a = p.hilbert(max, cap)?;
    let dual = quadratic_dual(p).hilbert(max, cap)?;
    Ok((1..=max)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    let t = dual[i] as i128 * a[n - i] as i128;
                    if i % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum()
        })
        .collect())
}

/// Dimensions of `Tor_(i,j)(F, F)` for `i + j <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorTable {
    bound: usize,
    entries: BTreeMap<(usize, usize), usize>,
}

impl TorTable {
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `Tor_(i,j)`; `None` outside the computed range.
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.entries.get(&(i, j)).copied()
    }

    /// All entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// Nonzero entries off the diagonal `i = j`.
    pub fn off_diagonal(&self) -> Vec<((usize, usize), usize)> {
        self.entries()
            .filter(|((i, j), d)| i != j && *d != 0)
            .collect()
    }

    /// Whether every off-diagonal entry within the bound vanishes.
    pub fn koszul_up_to_bound(&self) -> bool {
        self.off_diagonal().is_empty()
    }
}

/// Multiplication table of a graded quotient `T(V)/I` in degrees up to
/// `max`, on the basis of normal words (coordinates that are not pivots of
/// the reduced ideal component).
struct NormalWords<F: Field> {
    field: F,
    n: usize,
    /// Normal words of each degree, as word indices.
    words: Vec<Vec<usize>>,
    /// For each degree and word index: its position among normal words, or
    /// the row of the ideal basis with that pivot.
    slot: Vec<Vec<Slot>>,
    ideal: Vec<Subspace<F>>,
}

#[derive(Clone, Copy)]
enum Slot {
    Normal(u32),
    Pivot(u32),
}

impl<F: Field> NormalWords<F> {
    fn new(p: &QuadraticPresentation<F>, max: usize, cap: usize) -> Result<Self> {
        let ideal = p.ideal_components(max, cap)?;
        let mut words = Vec::with_capacity(max + 1);
        let mut slot = Vec::with_capacity(max + 1);
        for comp in &ideal {
            let mut s = vec![Slot::Normal(0); comp.ambient()];
            for (r, piv) in comp.pivots().enumerate() {
                s[piv] = Slot::Pivot(r as u32);
            }
            let mut w = Vec::new();
            for (c, x) in s.iter_mut().enumerate() {
                if let Slot::Normal(_) = x {
                    *x = Slot::Normal(w.len() as u32);
                    w.push(c);
                }
            }
            words.push(w);
            slot.push(s);
        }
        Ok(Self {
            field: p.field().clone(),
            n: p.generator_dim(),
            words,
            slot,
            ideal,
        })
    }

    fn dim(&self, k: usize) -> usize {
        self.words[k].len()
    }

    /// Product of the `a`-th normal word of degree `p` and the `b`-th of
    /// degree `q`, in normal-word coordinates of degree `p + q`.
    fn multiply(&self, p: usize, a: usize, q: usize, b: usize) -> Vec<(usize, F::Elem)> {
        let word = self.words[p][a] * self.n.pow(q as u32) + self.words[q][b];
        let k = p + q;
        match self.slot[k][word] {
            Slot::Normal(i) => vec![(i as usize, self.field.one())],
            Slot::Pivot(r) => self.ideal[k].rows()[r as usize][1..]
                .iter()
                .map(|(c, x)| match self.slot[k][*c] {
                    Slot::Normal(i) => (i as usize, self.field.neg(x)),
                    Slot::Pivot(_) => unreachable!("reduced rows avoid other pivots"),
                })
                .collect(),
        }
    }
}

/// Ordered compositions of `j` into `i` positive parts.
fn compositions(j: usize, i: usize) -> Vec<Vec<usize>> {
    if i == 0 {
        return if j == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=j.saturating_sub(i - 1) {
        for mut rest in compositions(j - first, i - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Basis of the bar complex in bidegree `(i, j)`: one block per
/// composition, each block a product of normal-word bases.
struct BarBlock {
    offset: usize,
    size: usize,
}

struct BarDegree {
    blocks: HashMap<Vec<usize>, BarBlock>,
    comps: Vec<Vec<usize>>,
    dim: usize,
}

impl BarDegree {
    fn new<F: Field>(alg: &NormalWords<F>, i: usize, j: usize) -> Self {
        let comps = compositions(j, i);
        let mut blocks = HashMap::new();
        let mut offset = 0;
        for c in &comps {
            let size = c.iter().map(|&d| alg.dim(d)).product();
            blocks.insert(c.clone(), BarBlock { offset, size });
            offset += size;
        }
        Self {
            blocks,
            comps,
            dim: offset,
        }
    }
}

/// Mixed-radix decoding of a position within a block.
fn decode<F: Field>(alg: &NormalWords<F>, comp: &[usize], mut pos: usize) -> Vec<usize> {
    let mut out = vec![0; comp.len()];
    for t in (0..comp.len()).rev() {
        let d = alg.dim(comp[t]);
        out[t] = pos % d;
        pos /= d;
    }
    out
}

fn encode<F: Field>(alg: &NormalWords<F>, comp: &[usize], idx: &[usize]) -> usize {
    comp.iter()
        .zip(idx)
        .fold(0, |acc, (&d, &x)| acc * alg.dim(d) + x)
}

/// Rank of the bar differential `B_(i,j) → B_(i-1,j)`,
/// `d(a_1|...|a_i) = Σ_{t=1}^{i-1} (-1)^t (...|a_t a_(t+1)|...)`.
fn bar_rank<F: Field>(alg: &NormalWords<F>, src: &BarDegree, dst: &BarDegree) -> usize {
    let f = &alg.field;
    let mut ech = Echelon::new(f, dst.dim);
    for comp in &src.comps {
        let block = &src.blocks[comp];
        for pos in 0..block.size {
            let idx = decode(alg, comp, pos);
            let mut image: BTreeMap<usize, F::Elem> = BTreeMap::new();
            for t in 0..comp.len() - 1 {
                let sign = if t % 2 == 0 { f.neg(&f.one()) } else { f.one() };
                let prod = alg.multiply(comp[t], idx[t], comp[t + 1], idx[t + 1]);
                let mut merged = comp.clone();
                merged[t] = comp[t] + comp[t + 1];
                merged.remove(t + 1);
                let target = &dst.blocks[&merged];
                let mut nidx = idx.clone();
                nidx.remove(t + 1);
                for (c, x) in prod {
                    nidx[t] = c;
                    let col = target.offset + encode(alg, &merged, &nidx);
                    let e = image.entry(col).or_insert_with(|| f.zero());
                    *e = f.add(e, &f.mul(&sign, &x));
                }
            }
            let row: Row<F::Elem> = image.into_iter().filter(|(_, x)| !f.is_zero(x)).collect();
            if !row.is_empty() {
                ech.insert(row);
            }
        }
    }
    ech.rank()
}

/// `Tor_(i,j)(F, F)` over `T(V)/(R)` for all `i + j <= bound`, as
/// `dim B_(i,j) - rank d_(i,j) - rank d_(i+1,j)` in the reduced bar complex.
pub fn tor_table<F: Field>(
    p: &QuadraticPresentation<F>,
    bound: usize,
    cap: usize,
) -> Result<TorTable> {
    let alg = NormalWords::new(p, bound, cap)?;
    let mut entries = BTreeMap::new();
    entries.insert((0, 0), 1);
    for j in 1..=bound {
        // homological degrees needed for this internal degree
        let top_i = (bound - j).min(j);
        let degrees: Vec<BarDegree> = (0..=(top_i + 1).min(j))
            .map(|i| BarDegree::new(&alg, i, j))
            .collect();
        let mut ranks = vec![0usize; degrees.len() + 1];
        for i in 2..degrees.len() {
            ranks[i] = bar_rank(&alg, &degrees[i], &degrees[i - 1]);
        }
        entries.insert((0, j), 0);
        for i in 1..=top_i {
            let tor = degrees[i].dim - ranks[i] - ranks.get(i + 1).copied().unwrap_or(0);
            entries.insert((i, j), tor);
        }
    }
    for i in 1..=bound {
        entries.insert((i, 0), 0);
    }
    Ok(TorTable { bound, entries })
}

/// A family of subspaces closed under sum and intersection, with the join
/// and meet tables recorded during closure.
#[derive(Clone, Debug)]
pub struct SubspaceLattice<F: Field> {
    elements: Vec<Subspace<F>>,
    generators: Vec<usize>,
    join: Vec<Vec<u32>>,
    meet: Vec<Vec<u32>>,
}

impl<F: Field> SubspaceLattice<F> {
    pub fn elements(&self) -> &[Subspace<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Indices of the generating subspaces among the elements.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        let (x, y) = if a >= b { (a, b) } else { (b, a) };
        self.join[x][y] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let (x, y) = if a >= b { (a, b) } else { (b, a) };
        self.meet[x][y] as usize
    }
}

/// Closes `gens` under sum and intersection by a worklist, failing once
/// more than `cap` elements appear.
pub fn lattice_closure<F: Field>(gens: &[Subspace<F>], cap: usize) -> Result<SubspaceLattice<F>> {
    let Some(first) = gens.first() else {
        return Err(Error::OutOfRange(
            "lattice closure of an empty family".into(),
        ));
    };
    let mut elements: Vec<Subspace<F>> = Vec::new();
    let mut index: HashMap<Subspace<F>, usize> = HashMap::new();
    let mut intern = |s: Subspace<F>, elements: &mut Vec<Subspace<F>>| -> Result<usize> {
        if s.ambient() != first.ambient() {
            return Err(Error::DimensionMismatch(format!(
                "lattice generators in ambients {} and {}",
                first.ambient(),
                s.ambient()
            )));
        }
        if let Some(&i) = index.get(&s) {
            return Ok(i);
        }
        if elements.len() == cap {
            return Err(Error::LatticeCap { cap });
        }
        index.insert(s.clone(), elements.len());
        elements.push(s);
        Ok(elements.len() - 1)
    };
    let mut generators = Vec::new();
    for g in gens {
        let i = intern(g.clone(), &mut elements)?;
        if !generators.contains(&i) {
            generators.push(i);
        }
    }
    let mut join: Vec<Vec<u32>> = Vec::new();
    let mut meet: Vec<Vec<u32>> = Vec::new();
    let mut next = 0;
    while next < elements.len() {
        let mut jrow = Vec::with_capacity(next + 1);
        let mut mrow = Vec::with_capacity(next + 1);
        for other in 0..=next {
            let (a, b) = (&elements[next], &elements[other]);
            let (s, m) = if a.contains_subspace(b) {
                (a.clone(), b.clone())
            } else if b.contains_subspace(a) {
                (b.clone(), a.clone())
            } else {
                (a.sum(b)?, a.intersect(b)?)
            };
            jrow.push(intern(s, &mut elements)? as u32);
            mrow.push(intern(m, &mut elements)? as u32);
        }
        join.push(jrow);
        meet.push(mrow);
        next += 1;
    }
    Ok(SubspaceLattice {
        elements,
        generators,
        join,
        meet,
    })
}

/// Outcome of the distributivity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distributivity {
    Distributive,
    /// Element indices with `a ∩ (b + c) ≠ (a ∩ b) + (a ∩ c)`.
    Violated {
        a: usize,
        b: usize,
        c: usize,
    },
}

/// Checks `a ∩ (b + c) = (a ∩ b) + (a ∩ c)` on every triple, using the
/// closure tables.
pub fn is_distributive<F: Field>(lat: &SubspaceLattice<F>) -> Distributivity {
    let n = lat.len();
    for a in 0..n {
        for b in 0..n {
            let ab = lat.meet(a, b);
            for c in b + 1..n {
                let lhs = lat.meet(a, lat.join(b, c));
                let rhs = lat.join(ab, lat.meet(a, c));
                if lhs != rhs {
                    return Distributivity::Violated { a, b, c };
                }
            }
        }
    }
    Distributivity::Distributive
}

/// Both sides of the identity `R^(k) = Path_k ∩ ∩_{i=0}^{k-2} ker(I^(i+1) ⊗ f ⊗ I^(k-i-2))`
/// for the relations of `gr A`.
pub fn lemma42_sides<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    k: usize,
    caps: &Caps,
) -> Result<(Subspace<F>, Subspace<F>)> {
    let p = quadratic_relations_gr(graph, field)?;
    let lhs = p.r_intersect(k, caps.ambient)?;
    let paths = path_span(graph, field, k, caps)?;
    let rhs = paths.intersect(&f_kernels(field, graph.num_positive(), k, caps.ambient)?)?;
    Ok((lhs, rhs))
}

pub fn lemma42_check<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    k: usize,
    caps: &Caps,
) -> Result<bool> {
    let (lhs, rhs) = lemma42_sides(graph, field, k, caps)?;
    Ok(lhs == rhs)
}

/// Both sides of
/// `P_j(v) V^(l+1) ∩ R^(l+2) = g_(l+3)(S_(j-1)(v) V^(l+2) ∩ R^(l+3))`
/// for the relations of `gr A`, where `g_m` applies `f` to the first letter.
pub fn lemma44_sides<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    v: VertexId,
    j: usize,
    l: usize,
    caps: &Caps,
) -> Result<(Subspace<F>, Subspace<F>)> {
    if j == 0 || graph.level(v) < 2 {
        return Err(Error::OutOfRange(format!(
            "needs j >= 1 and a vertex of level >= 2, got j = {j} and {} of level {}",
            graph.name(v),
            graph.level(v)
        )));
    }
    let n = graph.num_positive();
    let p = quadratic_relations_gr(graph, field)?;
    let lhs = sandwich(&p_span(graph, field, v, j), n, 0, l + 1, caps.ambient)?
        .intersect(&p.r_intersect(l + 2, caps.ambient)?)?;
    let inner = sandwich(&s_span(graph, field, v, j - 1), n, 0, l + 2, caps.ambient)?
        .intersect(&p.r_intersect(l + 3, caps.ambient)?)?;
    let rhs = f_map(field, n, l + 3, 0, caps.ambient)?.image(&inner)?;
    Ok((lhs, rhs))
}

pub fn lemma44_check<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    v: VertexId,
    j: usize,
    l: usize,
    caps: &Caps,
) -> Result<bool> {
    let (lhs, rhs) = lemma44_sides(graph, field, v, j, l, caps)?;
    Ok(lhs == rhs)
}

/// The family `{V^i R V^(k-i-2) : 0 <= i <= k-2}` in the length-`k`
/// component, optionally preceded by `P_l(v) V^(k-1)`.
pub fn relation_family<F: Field>(
    graph: &LayeredGraph,
    p: &QuadraticPresentation<F>,
    k: usize,
    extra: Option<(VertexId, usize)>,
    cap: usize,
) -> Result<Vec<Subspace<F>>> {
    if k < 2 {
        return Err(Error::OutOfRange(format!(
            "relation family needs k >= 2, got {k}"
        )));
    }
    let n = p.generator_dim();
    component_dim(n, k, cap)?;
    let mut fam = Vec::new();
    if let Some((v, l)) = extra {
        fam.push(sandwich(&p_span(graph, p.field(), v, l), n, 0, k - 1, cap)?);
    }
    for i in 0..=k - 2 {
        fam.push(sandwich(p.relation_space(), n, i, k - 2 - i, cap)?);
    }
    Ok(fam)
}

/// Result of a lattice distributivity experiment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    pub generators: usize,
    pub size: usize,
    pub distributivity: Distributivity,
}

impl LatticeReport {
    pub fn is_distributive(&self) -> bool {
        self.distributivity == Distributivity::Distributive
    }
}

/// Closes the relation family of `gr A` in length `k` (with the optional
/// `P_l(v) V^(k-1)` member) and checks distributivity.
pub fn theorem46_check<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    k: usize,
    extra: Option<(VertexId, usize)>,
    caps: &Caps,
) -> Result<LatticeReport> {
    let p = quadratic_relations_gr(graph, field)?;
    let fam = relation_family(graph, &p, k, extra, caps.ambient)?;
    let lat = lattice_closure(&fam, caps.lattice)?;
    Ok(LatticeReport {
        generators: fam.len(),
        size: lat.len(),
        distributivity: is_distributive(&lat),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::graph::{chain, hypercube};
    use crate::relations::quadratic_relations_a;

    fn gf() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn dual_of_extremes() {
        let f = gf();
        let zero = QuadraticPresentation::new(3, Subspace::zero(&f, 9)).unwrap();
        assert!(quadratic_dual(&zero).relation_space().is_full());
        let full = QuadraticPresentation::new(3, Subspace::full(&f, 9)).unwrap();
        assert!(quadratic_dual(&full).relation_space().is_zero());
        let h = quadratic_relations_gr(&hypercube(2).unwrap(), &f).unwrap();
        assert_eq!(quadratic_dual(&h).relation_space().dim(), 8);
    }

    #[test]
    fn euler_residuals_of_small_cases() {
        let f = gf();
        let c = quadratic_relations_gr(&chain(3).unwrap(), &f).unwrap();
        assert_eq!(euler_check(&c, 4, 10_000).unwrap(), vec![0, 0, 0, 0]);
        let h = quadratic_relations_gr(&hypercube(2).unwrap(), &f).unwrap();
        assert_eq!(quadratic_dual(&h).hilbert(2, 100).unwrap(), vec![1, 3, 1]);
        assert_eq!(euler_check(&h, 5, 10_000).unwrap(), vec![0; 5]);
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
        assert!(compositions(2, 3).is_empty());
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn tor_of_free_algebra() {
        let f = gf();
        let c = quadratic_relations_gr(&chain(3).unwrap(), &f).unwrap();
        let t = tor_table(&c, 5, 10_000).unwrap();
        assert_eq!(t.get(0, 0), Some(1));
        assert_eq!(t.get(1, 1), Some(3));
        assert_eq!(t.get(2, 2), Some(0));
        assert!(t.koszul_up_to_bound());
    }

    #[test]
    fn tor_of_hypercube2() {
        let f = gf();
        let g = hypercube(2).unwrap();
        for p in [
            quadratic_relations_gr(&g, &f).unwrap(),
            quadratic_relations_a(&g, &f).unwrap(),
        ] {
            let t = tor_table(&p, 5, 10_000).unwrap();
            assert_eq!(t.get(1, 1), Some(3));
            assert_eq!(t.get(2, 2), Some(1));
            assert!(t.koszul_up_to_bound(), "{:?}", t.off_diagonal());
        }
    }

    #[test]
    fn tor_of_quantum_plane() {
        // x y - y x in two generators
        let f = gf();
        let r = Subspace::span(&f, 4, vec![vec![(1, 1), (2, f.from_i64(-1))]]);
        let p = QuadraticPresentation::new(2, r).unwrap();
        let t = tor_table(&p, 5, 1000).unwrap();
        assert_eq!(t.get(2, 2), Some(1));
        assert!(t.koszul_up_to_bound());
    }

    #[test]
    fn non_koszul_algebra_is_detected() {
        // x x + y y and x y - y y: the Hilbert series of the algebra and of
        // its dual are both 1 + 2t + 2t^2, so the Euler condition fails in
        // degree 4 and Tor_(3,4) is nonzero.
        let f = gf();
        let r = Subspace::span(
            &f,
            4,
            vec![vec![(0, 1), (3, 1)], vec![(1, 1), (3, f.from_i64(-1))]],
        );
        let p = QuadraticPresentation::new(2, r).unwrap();
        assert_eq!(p.hilbert(4, 100).unwrap(), vec![1, 2, 2, 0, 0]);
        assert_eq!(euler_check(&p, 5, 1000).unwrap(), vec![0, 0, 0, 4, 0]);
        let small = tor_table(&p, 5, 1000).unwrap();
        assert!(small.koszul_up_to_bound());
        let t = tor_table(&p, 7, 1000).unwrap();
        assert_eq!(t.off_diagonal(), vec![((3, 4), 4)]);
    }

    #[test]
    fn m3_is_not_distributive() {
        let f = gf();
        let lines: Vec<Subspace<PrimeField>> = [vec![(0, 1)], vec![(1, 1)], vec![(0, 1), (1, 1)]]
            .into_iter()
            .map(|r| Subspace::span(&f, 2, vec![r]))
            .collect();
        let lat = lattice_closure(&lines, 100).unwrap();
        assert_eq!(lat.len(), 5);
        assert!(matches!(
            is_distributive(&lat),
            Distributivity::Violated { .. }
        ));
    }

    #[test]
    fn small_closures() {
        let f = gf();
        let a = Subspace::span(&f, 3, vec![vec![(0, 1)], vec![(1, 1)]]);
        let lat = lattice_closure(std::slice::from_ref(&a), 10).unwrap();
        assert_eq!(lat.len(), 1);
        let b = Subspace::span(&f, 3, vec![vec![(1, 1)], vec![(2, 1)]]);
        let lat = lattice_closure(&[a, b], 10).unwrap();
        assert_eq!(lat.len(), 4);
        assert_eq!(is_distributive(&lat), Distributivity::Distributive);
        assert!(matches!(
            lattice_closure(lat.elements(), 3),
            Err(Error::LatticeCap { cap: 3 })
        ));
    }

    #[test]
    fn lemma_checks_on_hypercube2() {
        let f = gf();
        let g = hypercube(2).unwrap();
        let caps = Caps::default();
        for k in 2..=4 {
            assert!(lemma42_check(&g, &f, k, &caps).unwrap(), "k = {k}");
        }
        let top = g.vertex_by_name("{1,2}").unwrap();
        assert!(lemma44_check(&g, &f, top, 1, 0, &caps).unwrap());
        assert!(lemma44_check(&g, &f, top, 3, 0, &caps).unwrap());
        let r = theorem46_check(&g, &f, 4, None, &caps).unwrap();
        assert!(r.is_distributive());
        let r = theorem46_check(&g, &f, 4, Some((top, 1)), &caps).unwrap();
        assert!(r.is_distributive());
        assert_eq!(r.generators, 4);
    }
}
