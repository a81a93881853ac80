#![allow(dead_code)]

use lkoszul::field::{Field, Matrix, Row, Subspace};
use lkoszul::graph::{GraphBuilder, LayeredGraph};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_row<F: Field, R: Rng>(
    rng: &mut R,
    field: &F,
    ambient: usize,
    density: f64,
) -> Row<F::Elem> {
    let mut row = Vec::new();
    for c in 0..ambient {
        if rng.gen_bool(density) {
            let x = field.from_i64(rng.gen_range(-3..=3));
            if !field.is_zero(&x) {
                row.push((c, x));
            }
        }
    }
    row
}

/// Spans `count` random vectors; small coefficients make dependencies common.
pub fn random_subspace<F: Field, R: Rng>(
    rng: &mut R,
    field: &F,
    ambient: usize,
    count: usize,
) -> Subspace<F> {
    let density = rng.gen_range(0.2..0.9);
    Subspace::span(
        field,
        ambient,
        (0..count)
            .map(|_| random_row(rng, field, ambient, density))
            .collect::<Vec<_>>(),
    )
}

/// A random subspace spanned by at most `ambient` random vectors.
pub fn random_subspace_any<F: Field, R: Rng>(
    rng: &mut R,
    field: &F,
    ambient: usize,
) -> Subspace<F> {
    let count = rng.gen_range(0..=ambient);
    random_subspace(rng, field, ambient, count)
}

pub fn random_matrix<F: Field, R: Rng>(
    rng: &mut R,
    field: &F,
    rows: usize,
    cols: usize,
) -> Matrix<F> {
    let density = rng.gen_range(0.2..0.9);
    Matrix::from_rows(
        field,
        cols,
        (0..rows)
            .map(|_| random_row(rng, field, cols, density))
            .collect(),
    )
}

/// A random valid layered graph with `1..=max_height` positive levels of
/// `1..=max_width` vertices; every positive vertex gets at least one edge.
pub fn random_layered_graph<R: Rng>(
    rng: &mut R,
    max_height: usize,
    max_width: usize,
) -> LayeredGraph {
    let height = rng.gen_range(1..=max_height);
    let mut b = GraphBuilder::new(height);
    let mut below = vec![b.vertex("*", 0).unwrap()];
    let density = rng.gen_range(0.3..1.0);
    for level in 1..=height {
        let width = rng.gen_range(1..=max_width);
        let mut here = Vec::new();
        for j in 0..width {
            let v = b.vertex(&format!("x{level}_{j}"), level).unwrap();
            let mut any = false;
            for &w in &below {
                if rng.gen_bool(density) {
                    b.edge(v, w);
                    any = true;
                }
            }
            if !any {
                b.edge(v, *below.choose(rng).unwrap());
            }
            here.push(v);
        }
        below = here;
    }
    b.build().unwrap()
}

/// Random graphs until a uniform one appears.
pub fn random_uniform_graph<R: Rng>(
    rng: &mut R,
    max_height: usize,
    max_width: usize,
) -> LayeredGraph {
    loop {
        let g = random_layered_graph(rng, max_height, max_width);
        if g.is_uniform() {
            return g;
        }
    }
}

pub fn shuffled_rows<F: Field, R: Rng>(rng: &mut R, s: &Subspace<F>) -> Vec<Row<F::Elem>> {
    // random invertible recombination: shuffle, then add earlier rows to later ones
    let f = s.field();
    let mut rows: Vec<Row<F::Elem>> = s.rows().to_vec();
    rows.shuffle(rng);
    for i in 1..rows.len() {
        let j = rng.gen_range(0..i);
        let c = f.from_i64(rng.gen_range(1..=4));
        let mut acc: std::collections::BTreeMap<usize, F::Elem> = rows[i].iter().cloned().collect();
        for (col, x) in &rows[j] {
            let e = acc.entry(*col).or_insert_with(|| f.zero());
            *e = f.add(e, &f.mul(&c, x));
        }
        rows[i] = acc.into_iter().filter(|(_, x)| !f.is_zero(x)).collect();
    }
    rows
}
