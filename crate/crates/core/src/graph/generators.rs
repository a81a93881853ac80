use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{GraphBuilder, LayeredGraph, STAR};

/// Largest supported hypercube dimension.
pub const MAX_HYPERCUBE: usize = 20;

fn subset_name(mask: u32, n: usize) -> String {
    if mask == 0 {
        return STAR.to_string();
    }
    let elems: Vec<String> = (0..n)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", elems.join(","))
}

/// The Boolean lattice of subsets of `{1..n}`; the empty set is `*`. The
/// distinguished edge of a subset removes its least element.
pub fn hypercube(n: usize) -> Result<LayeredGraph> {
    if n == 0 || n > MAX_HYPERCUBE {
        return Err(Error::OutOfRange(format!(
            "hypercube dimension must lie in 1..={MAX_HYPERCUBE}, got {n}"
        )));
    }
    let mut b = GraphBuilder::new(n);
    let count = 1u32 << n;
    let ids: Vec<usize> = (0..count)
        .map(|mask| b.vertex(&subset_name(mask, n), mask.count_ones() as usize))
        .collect::<Result<_>>()?;
    for mask in 1..count {
        for i in 0..n {
            if mask & (1 << i) != 0 {
                let e = b.edge(ids[mask as usize], ids[(mask & !(1 << i)) as usize]);
                if i == mask.trailing_zeros() as usize {
                    b.distinguish(ids[mask as usize], e);
                }
            }
        }
    }
    b.build()
}

/// One vertex `v1..vn` per positive level, each joined to the one below.
pub fn chain(n: usize) -> Result<LayeredGraph> {
    if n == 0 {
        return Err(Error::OutOfRange("chain length must be at least 1".into()));
    }
    let mut b = GraphBuilder::new(n);
    let mut below = b.vertex(STAR, 0)?;
    for i in 1..=n {
        let v = b.vertex(&format!("v{i}"), i)?;
        b.edge(v, below);
        below = v;
    }
    b.build()
}

/// `sizes[i]` vertices on level `i` (level 0 always holds only `*`), with
/// every vertex joined to every vertex one level down. Vertex `j` of level
/// `i` is named `v{i}_{j}`.
pub fn complete_layered(sizes: &[usize]) -> Result<LayeredGraph> {
    if sizes.is_empty() {
        return Err(Error::OutOfRange(
            "complete layered graph needs at least one level".into(),
        ));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::OutOfRange(format!("level {i} has size 0")));
    }
    let mut b = GraphBuilder::new(sizes.len() - 1);
    let mut below = vec![b.vertex(STAR, 0)?];
    for (level, &size) in sizes.iter().enumerate().skip(1) {
        let mut here = Vec::with_capacity(size);
        for j in 1..=size {
            let v = b.vertex(&format!("v{level}_{j}"), level)?;
            for &w in &below {
                b.edge(v, w);
            }
            here.push(v);
        }
        below = here;
    }
    b.build()
}

/// The smallest graph failing uniformity: `v` has children `u` and `w`
/// whose only children `a` and `b` differ.
pub fn non_uniform_witness() -> LayeredGraph {
    let mut b = GraphBuilder::new(3);
    let levels = [("v", 3), ("u", 2), ("w", 2), ("a", 1), ("b", 1), (STAR, 0)];
    let ids: HashMap<&str, usize> = levels
        .iter()
        .map(|&(name, level)| (name, b.vertex(name, level).expect("fixed names")))
        .collect();
    for (t, h) in [
        ("v", "u"),
        ("v", "w"),
        ("u", "a"),
        ("w", "b"),
        ("a", STAR),
        ("b", STAR),
    ] {
        b.edge(ids[t], ids[h]);
    }
    b.build().expect("witness is a valid layered graph")
}
