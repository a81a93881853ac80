//! Layered directed graphs with a unique minimal vertex `*`.
//!
//! Vertices are stored in canonical order: descending level, then name.
//! Consequently the vertices of positive level are exactly the ids
//! `0..num_positive()` and `*` is the last vertex; the tensor module uses
//! these ids directly as letters.

mod format;
mod generators;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub use format::{parse, parse_unvalidated, to_text};
pub use generators::{chain, complete_layered, hypercube, non_uniform_witness};

/// Name of the unique level-0 vertex.
pub const STAR: &str = "*";

/// Default bound on the number of paths returned by [`LayeredGraph::enumerate_paths`].
pub const DEFAULT_PATH_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub level: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
}

/// A broken standing hypothesis, reported by [`LayeredGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `*` is missing or does not sit at level 0.
    MissingStar,
    /// A vertex other than `*` has level 0.
    ExtraLevelZero { vertex: String },
    LevelAboveHeight {
        vertex: String,
        level: usize,
        height: usize,
    },
    /// An edge that does not drop exactly one level.
    LevelGap {
        tail: String,
        head: String,
        tail_level: usize,
        head_level: usize,
    },
    /// A vertex of positive level without outgoing edges.
    DeadVertex { vertex: String },
    /// The distinguished edge of a vertex does not start at it.
    BadDistinguished { vertex: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingStar => write!(f, "missing star: no vertex `*` at level 0"),
            Violation::ExtraLevelZero { vertex } => {
                write!(f, "extra minimal vertex: {vertex} has level 0")
            }
            Violation::LevelAboveHeight {
                vertex,
                level,
                height,
            } => write!(
                f,
                "level above height: {vertex} has level {level} > {height}"
            ),
            Violation::LevelGap {
                tail,
                head,
                tail_level,
                head_level,
            } => write!(
                f,
                "level gap: edge {tail} -> {head} goes from level {tail_level} to {head_level}"
            ),
            Violation::DeadVertex { vertex } => {
                write!(f, "dead vertex: {vertex} has no outgoing edge")
            }
            Violation::BadDistinguished { vertex } => {
                write!(
                    f,
                    "bad distinguished edge: edge chosen for {vertex} does not start there"
                )
            }
        }
    }
}

/// A nonempty sequence of head-to-tail composable edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn new(graph: &LayeredGraph, edges: Vec<EdgeId>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::OutOfRange("a path needs at least one edge".into()));
        }
        for e in &edges {
            if e.0 >= graph.edges.len() {
                return Err(Error::OutOfRange(format!("edge id {} does not exist", e.0)));
            }
        }
        for w in edges.windows(2) {
            if graph.edge(w[0]).head != graph.edge(w[1]).tail {
                return Err(Error::OutOfRange(format!(
                    "edges {} and {} are not consecutive",
                    w[0].0, w[1].0
                )));
            }
        }
        Ok(Self { edges })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn tail(&self, graph: &LayeredGraph) -> VertexId {
        graph.edge(self.edges[0]).tail
    }

    pub fn head(&self, graph: &LayeredGraph) -> VertexId {
        graph.edge(*self.edges.last().unwrap()).head
    }

    /// The vertices `v_0, v_1, ..., v_m` visited by the path.
    pub fn vertices(&self, graph: &LayeredGraph) -> Vec<VertexId> {
        let mut vs = Vec::with_capacity(self.edges.len() + 1);
        vs.push(self.tail(graph));
        vs.extend(self.edges.iter().map(|e| graph.edge(*e).head));
        vs
    }
}

/// Outcome of the uniformity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Uniformity {
    Uniform,
    /// `u` and `w` are children of `vertex` in different `∼_v` classes.
    NonUniform {
        vertex: VertexId,
        u: VertexId,
        w: VertexId,
    },
}

/// Incrementally assembles a graph from named vertices.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    height: usize,
    vertices: Vec<Vertex>,
    by_name: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    distinguished: HashMap<usize, usize>,
}

impl GraphBuilder {
    pub fn new(height: usize) -> Self {
        Self {
            height,
            ..Self::default()
        }
    }

    /// Adds a vertex and returns its builder index.
    pub fn vertex(&mut self, name: &str, level: usize) -> Result<usize> {
        if name.is_empty() || name.chars().any(char::is_whitespace) || name.starts_with('#') {
            return Err(Error::OutOfRange(format!("invalid vertex name `{name}`")));
        }
        if self.by_name.contains_key(name) {
            return Err(Error::OutOfRange(format!("duplicate vertex `{name}`")));
        }
        let idx = self.vertices.len();
        self.vertices.push(Vertex {
            name: name.to_string(),
            level,
        });
        self.by_name.insert(name.to_string(), idx);
        Ok(idx)
    }

    /// Adds an edge between builder indices; returns the builder edge index.
    pub fn edge(&mut self, tail: usize, head: usize) -> usize {
        assert!(tail < self.vertices.len() && head < self.vertices.len());
        self.edges.push((tail, head));
        self.edges.len() - 1
    }

    pub fn edge_by_name(&mut self, tail: &str, head: &str) -> Result<usize> {
        let t = *self
            .by_name
            .get(tail)
            .ok_or_else(|| Error::UnknownVertex(tail.to_string()))?;
        let h = *self
            .by_name
            .get(head)
            .ok_or_else(|| Error::UnknownVertex(head.to_string()))?;
        Ok(self.edge(t, h))
    }

    /// Overrides the default distinguished edge of a vertex.
    pub fn distinguish(&mut self, vertex: usize, edge: usize) {
        self.distinguished.insert(vertex, edge);
    }

    /// Distinguishes the first edge added from `tail` to `head`.
    pub fn distinguish_by_name(&mut self, tail: &str, head: &str) -> Result<()> {
        let t = *self
            .by_name
            .get(tail)
            .ok_or_else(|| Error::UnknownVertex(tail.to_string()))?;
        let h = *self
            .by_name
            .get(head)
            .ok_or_else(|| Error::UnknownVertex(head.to_string()))?;
        let e = self
            .edges
            .iter()
            .position(|&e| e == (t, h))
            .ok_or_else(|| Error::OutOfRange(format!("no edge {tail} -> {head}")))?;
        self.distinguish(t, e);
        Ok(())
    }

    /// Builds the graph and rejects it unless it satisfies every standing
    /// hypothesis.
    pub fn build(self) -> Result<LayeredGraph> {
        let g = self.build_unvalidated();
        let violations = g.validate();
        if violations.is_empty() {
            Ok(g)
        } else {
            Err(Error::InvalidGraph(violations))
        }
    }

    /// Builds the graph without checking the layering hypotheses; use
    /// [`LayeredGraph::validate`] to inspect it.
    pub fn build_unvalidated(self) -> LayeredGraph {
        let n = self.vertices.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            let (va, vb) = (&self.vertices[a], &self.vertices[b]);
            vb.level.cmp(&va.level).then_with(|| va.name.cmp(&vb.name))
        });
        let mut new_id = vec![0; n];
        for (pos, &old) in order.iter().enumerate() {
            new_id[old] = pos;
        }
        let vertices: Vec<Vertex> = order.iter().map(|&i| self.vertices[i].clone()).collect();

        let mut edge_order: Vec<usize> = (0..self.edges.len()).collect();
        edge_order.sort_by_key(|&e| {
            let (t, h) = self.edges[e];
            (new_id[t], new_id[h], e)
        });
        let mut new_edge = vec![0; self.edges.len()];
        for (pos, &old) in edge_order.iter().enumerate() {
            new_edge[old] = pos;
        }
        let edges: Vec<Edge> = edge_order
            .iter()
            .map(|&e| {
                let (t, h) = self.edges[e];
                Edge {
                    tail: VertexId(new_id[t]),
                    head: VertexId(new_id[h]),
                }
            })
            .collect();

        let mut out_edges = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.tail.0].push(EdgeId(i));
        }
        let mut distinguished: Vec<Option<EdgeId>> = out_edges
            .iter()
            .map(|out| {
                out.iter()
                    .min_by(|a, b| {
                        let ha = &vertices[edges[a.0].head.0].name;
                        let hb = &vertices[edges[b.0].head.0].name;
                        ha.cmp(hb).then(a.cmp(b))
                    })
                    .copied()
            })
            .collect();
        for (v, e) in self.distinguished {
            distinguished[new_id[v]] = Some(EdgeId(new_edge[e]));
        }
        let by_name = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.name.clone(), VertexId(i)))
            .collect();
        let num_positive = vertices.iter().filter(|v| v.level > 0).count();

        let mut g = LayeredGraph {
            height: self.height,
            vertices,
            edges,
            out_edges,
            distinguished,
            by_name,
            num_positive,
            reach: Vec::new(),
        };
        g.reach = (0..n).map(|v| g.reachable_from(VertexId(v))).collect();
        g
    }
}

/// An immutable layered graph.
#[derive(Clone, Debug)]
pub struct LayeredGraph {
    height: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<EdgeId>>,
    distinguished: Vec<Option<EdgeId>>,
    by_name: HashMap<String, VertexId>,
    num_positive: usize,
    reach: Vec<Vec<bool>>,
}

impl PartialEq for LayeredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.height == other.height
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.distinguished == other.distinguished
    }
}

impl LayeredGraph {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// `|V^+|`, the number of vertices of positive level.
    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    /// Vertices of positive level, in canonical order.
    pub fn positive_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.num_positive).map(VertexId)
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e.0]
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.0]
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.vertices[v.0].name
    }

    pub fn level(&self, v: VertexId) -> usize {
        self.vertices[v.0].level
    }

    pub fn vertex_by_name(&self, name: &str) -> Result<VertexId> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// The unique minimal vertex.
    pub fn star(&self) -> Option<VertexId> {
        self.by_name.get(STAR).copied()
    }

    pub fn distinguished(&self, v: VertexId) -> Option<EdgeId> {
        self.distinguished[v.0]
    }

    /// Vertices of the given level, in canonical order.
    pub fn level_set(&self, level: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(move |&v| self.level(v) == level)
    }

    /// Every standing hypothesis that fails, in a deterministic order.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        match self.star() {
            Some(s) if self.level(s) == 0 => {}
            _ => out.push(Violation::MissingStar),
        }
        for v in self.vertices() {
            let vx = self.vertex(v);
            if vx.level == 0 && vx.name != STAR {
                out.push(Violation::ExtraLevelZero {
                    vertex: vx.name.clone(),
                });
            }
            if vx.level > self.height {
                out.push(Violation::LevelAboveHeight {
                    vertex: vx.name.clone(),
                    level: vx.level,
                    height: self.height,
                });
            }
        }
        for e in &self.edges {
            let (lt, lh) = (self.level(e.tail), self.level(e.head));
            if lt != lh + 1 {
                out.push(Violation::LevelGap {
                    tail: self.name(e.tail).to_string(),
                    head: self.name(e.head).to_string(),
                    tail_level: lt,
                    head_level: lh,
                });
            }
        }
        for v in self.vertices() {
            if self.level(v) > 0 && self.out_edges[v.0].is_empty() {
                out.push(Violation::DeadVertex {
                    vertex: self.name(v).to_string(),
                });
            }
            if let Some(e) = self.distinguished[v.0] {
                if self.edges[e.0].tail != v {
                    out.push(Violation::BadDistinguished {
                        vertex: self.name(v).to_string(),
                    });
                }
            }
        }
        out
    }

    fn reachable_from(&self, v: VertexId) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for e in &self.out_edges[x.0] {
                let h = self.edges[e.0].head;
                if !seen[h.0] {
                    seen[h.0] = true;
                    queue.push_back(h);
                }
            }
        }
        seen
    }

    /// `v > w`: there is a nonempty path from `v` to `w`.
    pub fn greater_than(&self, v: VertexId, w: VertexId) -> bool {
        self.reach[v.0][w.0]
    }

    /// `S_i(v)`: the vertices of level `|v| - i` below `v`. Empty when `i`
    /// is zero or exceeds `|v|`.
    pub fn s_set(&self, v: VertexId, i: usize) -> Vec<VertexId> {
        let lv = self.level(v);
        if i == 0 || i > lv {
            return Vec::new();
        }
        self.vertices()
            .filter(|&w| self.level(w) == lv - i && self.greater_than(v, w))
            .collect()
    }

    /// The classes of `∼_v` on `S_1(v)`: connected components of the
    /// "shares a child" graph. Classes and their members are in canonical
    /// order.
    pub fn sim_classes(&self, v: VertexId) -> Result<Vec<Vec<VertexId>>> {
        if self.level(v) < 2 {
            return Err(Error::OutOfRange(format!(
                "sim classes need a vertex of level >= 2, {} has level {}",
                self.name(v),
                self.level(v)
            )));
        }
        let children = self.s_set(v, 1);
        let kids: Vec<BTreeSet<VertexId>> = children
            .iter()
            .map(|&u| self.s_set(u, 1).into_iter().collect())
            .collect();
        let mut class = vec![usize::MAX; children.len()];
        let mut classes = Vec::new();
        for start in 0..children.len() {
            if class[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![];
            let mut stack = vec![start];
            class[start] = id;
            while let Some(a) = stack.pop() {
                members.push(children[a]);
                for b in 0..children.len() {
                    if class[b] == usize::MAX && !kids[a].is_disjoint(&kids[b]) {
                        class[b] = id;
                        stack.push(b);
                    }
                }
            }
            members.sort();
            classes.push(members);
        }
        Ok(classes)
    }

    /// Uniformity: every vertex of level >= 2 has a single `∼_v` class.
    pub fn check_uniform(&self) -> Uniformity {
        for v in self.vertices() {
            if self.level(v) < 2 {
                continue;
            }
            let classes = self.sim_classes(v).expect("level checked");
            if classes.len() > 1 {
                return Uniformity::NonUniform {
                    vertex: v,
                    u: classes[0][0],
                    w: classes[1][0],
                };
            }
        }
        Uniformity::Uniform
    }

    pub fn is_uniform(&self) -> bool {
        self.check_uniform() == Uniformity::Uniform
    }

    /// Fails with [`Error::NonUniform`] naming the witness.
    pub fn require_uniform(&self) -> Result<()> {
        match self.check_uniform() {
            Uniformity::Uniform => Ok(()),
            Uniformity::NonUniform { vertex, u, w } => Err(Error::NonUniform {
                vertex: self.name(vertex).to_string(),
                u: self.name(u).to_string(),
                w: self.name(w).to_string(),
            }),
        }
    }

    /// All paths from `v` to `w`, depth first in edge order.
    pub fn enumerate_paths(&self, v: VertexId, w: VertexId, cap: usize) -> Result<Vec<Path>> {
        let mut out = Vec::new();
        let mut stack: Vec<EdgeId> = Vec::new();
        self.paths_rec(v, w, cap, &mut stack, &mut out)?;
        Ok(out)
    }

    fn paths_rec(
        &self,
        at: VertexId,
        target: VertexId,
        cap: usize,
        stack: &mut Vec<EdgeId>,
        out: &mut Vec<Path>,
    ) -> Result<()> {
        for &e in &self.out_edges[at.0] {
            let h = self.edges[e.0].head;
            if h != target && !self.greater_than(h, target) {
                continue;
            }
            stack.push(e);
            if h == target {
                if out.len() == cap {
                    return Err(Error::PathCap {
                        cap,
                        from: self.name(self.edges[stack[0].0].tail).to_string(),
                        to: self.name(target).to_string(),
                    });
                }
                out.push(Path {
                    edges: stack.clone(),
                });
            }
            // paths may continue through the target only in graphs with cycles,
            // which validated graphs exclude
            if h != target {
                self.paths_rec(h, target, cap, stack, out)?;
            }
            stack.pop();
        }
        Ok(())
    }

    /// `v = v^(0), v^(1), ..., v^(|v|) = *` along distinguished edges.
    pub fn tower(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = vec![v];
        let mut cur = v;
        while let Some(e) = self.distinguished[cur.0] {
            cur = self.edges[e.0].head;
            out.push(cur);
        }
        out
    }
}
