//! The combinatorial basis of `gr A`: sequences of (vertex, multiplicity)
//! pairs in which no pair can be composed with the next.

use std::collections::HashMap;

use crate::error::Result;
use crate::field::Field;
use crate::graph::{LayeredGraph, VertexId};
use crate::relations::{full_relation_span, QuadraticPresentation};
use crate::tensor::component_dim;
use crate::Caps;

/// A vertex of positive level with a multiplicity `1 <= m <= level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisPair {
    pub vertex: VertexId,
    pub multiplicity: usize,
}

/// `p` composes with `q` when `b_p > b_q` and `b_q` sits exactly
/// `m_p` levels below `b_p`.
pub fn composable(graph: &LayeredGraph, p: BasisPair, q: BasisPair) -> bool {
    let (lp, lq) = (graph.level(p.vertex), graph.level(q.vertex));
    graph.greater_than(p.vertex, q.vertex) && lp >= p.multiplicity && lq == lp - p.multiplicity
}

fn pairs_up_to(graph: &LayeredGraph, degree: usize) -> Vec<BasisPair> {
    let mut out = Vec::new();
    for vertex in graph.positive_vertices() {
        for multiplicity in 1..=graph.level(vertex).min(degree) {
            out.push(BasisPair {
                vertex,
                multiplicity,
            });
        }
    }
    out
}

/// All basis words whose multiplicities sum to `degree`, in lexicographic
/// order of their pair sequences.
pub fn enumerate_basis(graph: &LayeredGraph, degree: usize) -> Vec<Vec<BasisPair>> {
    let pairs = pairs_up_to(graph, degree);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend(graph, &pairs, degree, &mut cur, &mut out);
    out
}

fn extend(
    graph: &LayeredGraph,
    pairs: &[BasisPair],
    remaining: usize,
    cur: &mut Vec<BasisPair>,
    out: &mut Vec<Vec<BasisPair>>,
) {
    if remaining == 0 {
        out.push(cur.clone());
        return;
    }
    for &q in pairs {
        if q.multiplicity > remaining {
            continue;
        }
        if let Some(&p) = cur.last() {
            if composable(graph, p, q) {
                continue;
            }
        }
        cur.push(q);
        extend(graph, pairs, remaining - q.multiplicity, cur, out);
        cur.pop();
    }
}

/// Number of basis words in each degree `0..=max`, by dynamic programming
/// over (remaining degree, last pair).
pub fn hilbert_from_basis(graph: &LayeredGraph, max: usize) -> Vec<usize> {
    let pairs = pairs_up_to(graph, max);
    let mut memo: HashMap<(usize, Option<BasisPair>), usize> = HashMap::new();
    (0..=max)
        .map(|d| count(graph, &pairs, d, None, &mut memo))
        .collect()
}

fn count(
    graph: &LayeredGraph,
    pairs: &[BasisPair],
    remaining: usize,
    last: Option<BasisPair>,
    memo: &mut HashMap<(usize, Option<BasisPair>), usize>,
) -> usize {
    if remaining == 0 {
        return 1;
    }
    if let Some(&c) = memo.get(&(remaining, last)) {
        return c;
    }
    let mut total = 0usize;
    for &q in pairs {
        if q.multiplicity > remaining || last.is_some_and(|p| composable(graph, p, q)) {
            continue;
        }
        total = total.saturating_add(count(
            graph,
            pairs,
            remaining - q.multiplicity,
            Some(q),
            memo,
        ));
    }
    memo.insert((remaining, last), total);
    total
}

/// Graded dimensions of a quadratic algebra, `n^k - dim I_k`.
pub fn hilbert_from_linalg<F: Field>(
    presentation: &QuadraticPresentation<F>,
    max: usize,
    caps: &Caps,
) -> Result<Vec<usize>> {
    presentation.hilbert(max, caps.ambient)
}

/// Graded dimensions of `A` from the full path-relation ideal, without
/// assuming quadratic generation.
pub fn hilbert_from_path_relations<F: Field>(
    graph: &LayeredGraph,
    field: &F,
    max: usize,
    caps: &Caps,
) -> Result<Vec<usize>> {
    let n = graph.num_positive();
    (0..=max)
        .map(|k| {
            let dim = component_dim(n, k, caps.ambient)?;
            let r = if k == 0 {
                0
            } else {
                full_relation_span(graph, field, k, caps)?.dim()
            };
            Ok(dim - r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{chain, hypercube};

    fn pair(g: &LayeredGraph, name: &str, m: usize) -> BasisPair {
        BasisPair {
            vertex: g.vertex_by_name(name).unwrap(),
            multiplicity: m,
        }
    }

    #[test]
    fn composability_examples() {
        let g = hypercube(2).unwrap();
        assert!(composable(&g, pair(&g, "{1,2}", 1), pair(&g, "{1}", 1)));
        assert!(!composable(&g, pair(&g, "{1,2}", 2), pair(&g, "{1}", 1)));
        assert!(!composable(&g, pair(&g, "{1}", 1), pair(&g, "{2}", 1)));
    }

    #[test]
    fn hypercube2_low_degrees() {
        let g = hypercube(2).unwrap();
        assert_eq!(enumerate_basis(&g, 0), vec![Vec::<BasisPair>::new()]);
        let d1 = enumerate_basis(&g, 1);
        assert_eq!(
            d1,
            vec![
                vec![pair(&g, "{1,2}", 1)],
                vec![pair(&g, "{1}", 1)],
                vec![pair(&g, "{2}", 1)]
            ]
        );
        let d2 = enumerate_basis(&g, 2);
        assert_eq!(d2.len(), 8);
        assert!(d2.contains(&vec![pair(&g, "{1,2}", 2)]));
        assert!(!d2.contains(&vec![pair(&g, "{1,2}", 1), pair(&g, "{1}", 1)]));
        assert_eq!(&hilbert_from_basis(&g, 2), &[1, 3, 8]);
    }

    #[test]
    fn enumeration_is_sorted_and_matches_counts() {
        let g = hypercube(3).unwrap();
        let h = hilbert_from_basis(&g, 4);
        for (d, &c) in h.iter().enumerate() {
            let words = enumerate_basis(&g, d);
            assert_eq!(words.len(), c);
            assert!(words.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn chain_is_free() {
        let c = chain(3).unwrap();
        assert_eq!(hilbert_from_basis(&c, 3), vec![1, 3, 9, 27]);
    }

    #[test]
    fn composable_implies_level_drop() {
        let g = hypercube(3).unwrap();
        let pairs = pairs_up_to(&g, 3);
        for &p in &pairs {
            for &q in &pairs {
                if composable(&g, p, q) {
                    assert!(g.level(q.vertex) < g.level(p.vertex));
                }
            }
        }
    }
}
