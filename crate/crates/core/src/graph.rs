//! Graph model shared by every algorithm: positively weighted digraphs,
//! vertex-weighted dags, paths, and the two text formats.
//!
//! Edge-list format (`.elist`): one `SRC DST COST` triple per line. A line
//! holding a single token declares an isolated vertex. Vertex-weighted format
//! (`.vwg`): `v NAME WEIGHT` lines and `e SRC DST` lines. In both, blank lines
//! and lines starting with `#` are ignored.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::tighten::{Correspondence, Poset};

pub type VertexId = usize;

#[derive(Debug, Clone, Default, PartialEq)]
struct Names {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl Names {
    fn from_vec(names: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidParameter(format!(
                    "vertex name {name:?} must be a nonempty token without whitespace"
                )));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        Ok(Names { names, index })
    }

    fn intern(&mut self, name: &str) -> VertexId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    fn lookup(&self, name: &str) -> Result<VertexId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v < self.names.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{v}")))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub cost: f64,
}

/// Directed graph with strictly positive edge costs. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDigraph {
    names: Names,
    edges: Vec<Edge>,
    out: Vec<Vec<(VertexId, f64)>>,
    inc: Vec<Vec<(VertexId, f64)>>,
}

impl WeightedDigraph {
    /// Builds a graph from vertex names and index-based edges.
    pub fn new(names: Vec<String>, edges: Vec<(VertexId, VertexId, f64)>) -> Result<Self> {
        Self::build(Names::from_vec(names)?, edges)
    }

    /// Builds a graph from named edges; vertex order is first appearance.
    pub fn from_named_edges<S: AsRef<str>>(edges: &[(S, S, f64)]) -> Result<Self> {
        let mut names = Names::default();
        let edges = edges
            .iter()
            .map(|(s, d, c)| (names.intern(s.as_ref()), names.intern(d.as_ref()), *c))
            .collect();
        Self::build(names, edges)
    }

    fn build(names: Names, edges: Vec<(VertexId, VertexId, f64)>) -> Result<Self> {
        let n = names.names.len();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        let mut list = Vec::with_capacity(edges.len());
        for (src, dst, cost) in edges {
            names.check(src)?;
            names.check(dst)?;
            if !(cost > 0.0 && cost.is_finite()) {
                return Err(Error::NonPositiveCost {
                    src: names.names[src].clone(),
                    dst: names.names[dst].clone(),
                    cost,
                });
            }
            if !seen.insert((src, dst)) {
                return Err(Error::DuplicateEdge {
                    src: names.names[src].clone(),
                    dst: names.names[dst].clone(),
                });
            }
            out[src].push((dst, cost));
            inc[dst].push((src, cost));
            list.push(Edge { src, dst, cost });
        }
        Ok(WeightedDigraph {
            names,
            edges: list,
            out,
            inc,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names.names
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.names.lookup(name)
    }

    /// Edges in input order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Outgoing `(target, cost)` pairs of `v`, in input order.
    pub fn successors(&self, v: VertexId) -> &[(VertexId, f64)] {
        &self.out[v]
    }

    pub fn successors_of(&self, name: &str) -> Result<Vec<(&str, f64)>> {
        let v = self.vertex(name)?;
        Ok(self.out[v].iter().map(|&(u, c)| (self.name(u), c)).collect())
    }

    pub fn predecessors(&self, v: VertexId) -> &[(VertexId, f64)] {
        &self.inc[v]
    }

    /// Cheapest edge entering `v`, or `f64::INFINITY` when `v` has none.
    pub fn min_predecessor_cost(&self, v: VertexId) -> f64 {
        self.inc[v]
            .iter()
            .map(|&(_, c)| c)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn min_predecessor_cost_of(&self, name: &str) -> Result<f64> {
        Ok(self.min_predecessor_cost(self.vertex(name)?))
    }

    pub fn edge_cost(&self, src: VertexId, dst: VertexId) -> Option<f64> {
        self.out[src]
            .iter()
            .find(|&&(u, _)| u == dst)
            .map(|&(_, c)| c)
    }

    /// Cost of a vertex sequence, or `None` if some step is not an edge.
    pub fn path_cost(&self, vertices: &[VertexId]) -> Option<f64> {
        vertices
            .windows(2)
            .try_fold(0.0, |acc, w| Some(acc + self.edge_cost(w[0], w[1])?))
    }

    pub fn min_edge_cost(&self) -> Option<f64> {
        self.edges.iter().map(|e| e.cost).reduce(f64::min)
    }
}

/// Acyclic graph whose edges strictly increase vertex weight.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexWeightedDag {
    names: Names,
    weights: Vec<f64>,
    edges: Vec<(VertexId, VertexId)>,
    out: Vec<Vec<VertexId>>,
    inc: Vec<Vec<VertexId>>,
}

impl VertexWeightedDag {
    pub fn new(
        names: Vec<String>,
        weights: Vec<f64>,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Self> {
        let names = Names::from_vec(names)?;
        if weights.len() != names.names.len() {
            return Err(Error::InvalidParameter(format!(
                "{} weights for {} vertices",
                weights.len(),
                names.names.len()
            )));
        }
        for (v, &w) in weights.iter().enumerate() {
            if !(w.is_finite() && w >= 0.0) {
                return Err(Error::InvalidWeight {
                    vertex: names.names[v].clone(),
                    weight: w,
                });
            }
        }
        let n = weights.len();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            names.check(u)?;
            names.check(v)?;
            if weights[u] >= weights[v] {
                return Err(Error::NonIncreasingWeight {
                    src: names.names[u].clone(),
                    dst: names.names[v].clone(),
                    src_weight: weights[u],
                    dst_weight: weights[v],
                });
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge {
                    src: names.names[u].clone(),
                    dst: names.names[v].clone(),
                });
            }
            out[u].push(v);
            inc[v].push(u);
        }
        Ok(VertexWeightedDag {
            names,
            weights,
            edges,
            out,
            inc,
        })
    }

    pub fn from_named<S: AsRef<str>>(vertices: &[(S, f64)], edges: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|(n, _)| n.as_ref().to_string()).collect();
        let weights = vertices.iter().map(|&(_, w)| w).collect();
        let lookup = Names::from_vec(names.clone())?;
        let edges = edges
            .iter()
            .map(|(s, d)| Ok((lookup.lookup(s.as_ref())?, lookup.lookup(d.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, weights, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names.names
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.names.lookup(name)
    }

    pub fn weight(&self, v: VertexId) -> f64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn successors(&self, v: VertexId) -> &[VertexId] {
        &self.out[v]
    }

    pub fn predecessors(&self, v: VertexId) -> &[VertexId] {
        &self.inc[v]
    }

    /// Derived cost `w(dst) - w(src)`; meaningful only along edges or paths.
    #[inline]
    pub fn distance(&self, src: VertexId, dst: VertexId) -> f64 {
        self.weights[dst] - self.weights[src]
    }

    /// Cheapest derived cost entering `v`, or `f64::INFINITY` for a source.
    pub fn min_predecessor_cost(&self, v: VertexId) -> f64 {
        self.inc[v]
            .iter()
            .map(|&u| self.distance(u, v))
            .fold(f64::INFINITY, f64::min)
    }

    /// Vertices by ascending weight, ties broken by input order.
    pub fn topological_order(&self) -> Vec<VertexId> {
        let mut order: Vec<VertexId> = self.vertices().collect();
        order.sort_by(|&a, &b| self.weights[a].total_cmp(&self.weights[b]).then(a.cmp(&b)));
        order
    }

    /// The partial order `E*` (reflexive-transitive closure of the edges).
    pub fn reachability_order(&self) -> Poset {
        let n = self.vertex_count();
        let order = self.topological_order();
        let mut leq = vec![false; n * n];
        for &v in &order {
            leq[v * n + v] = true;
            for &u in &self.inc[v] {
                // every predecessor precedes v in `order`, so its row is complete
                for a in 0..n {
                    if leq[a * n + u] {
                        leq[a * n + v] = true;
                    }
                }
            }
        }
        Poset::from_parts(self.names.names.clone(), leq, order)
    }

    /// Per-vertex lists of every `u` with a path `u ~> v`, `v` included,
    /// sorted topologically.
    pub fn reachability_closure(&self) -> Correspondence {
        Correspondence::full(Arc::new(self.reachability_order()))
    }

    pub fn to_edge_weighted(&self) -> WeightedDigraph {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (u, v, self.distance(u, v)))
            .collect();
        WeightedDigraph::build(self.names.clone(), edges)
            .expect("weight-increasing edges always have positive cost")
    }
}

/// Vertex sequence with its accumulated cost. Equality and hashing look at
/// the vertices only; the cost is a function of them.
#[derive(Debug, Clone)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub cost: f64,
}

impl Path {
    pub fn single(v: VertexId) -> Self {
        Path {
            vertices: vec![v],
            cost: 0.0,
        }
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn names<'g>(&self, names: &'g [String]) -> Vec<&'g str> {
        self.vertices.iter().map(|&v| names[v].as_str()).collect()
    }
}

impl PartialEq for Path {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for Path {}

impl Hash for Path {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_real(token: &str, line: usize, what: &str) -> Result<f64> {
    token.parse::<f64>().map_err(|_| Error::Parse {
        line,
        message: format!("{what} {token:?} is not a number"),
    })
}

/// Parses the `.elist` format.
pub fn parse_edge_list(text: &str) -> Result<WeightedDigraph> {
    let mut names = Names::default();
    let mut edges = Vec::new();
    for (line, tokens) in data_lines(text) {
        match tokens.as_slice() {
            [v] => {
                names.intern(v);
            }
            [s, d, c] => {
                let cost = parse_real(c, line, "cost")?;
                edges.push((names.intern(s), names.intern(d), cost));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `SRC DST COST`, found {} fields", tokens.len()),
                })
            }
        }
    }
    WeightedDigraph::build(names, edges)
}

pub fn render_edge_list(g: &WeightedDigraph) -> String {
    let mut out = String::new();
    // Declare vertices up front only when edge order alone would not
    // reproduce the vertex order (isolated vertices, or out-of-order ids).
    let mut appearance = Vec::with_capacity(g.vertex_count());
    let mut seen = vec![false; g.vertex_count()];
    for e in g.edges() {
        for v in [e.src, e.dst] {
            if !seen[v] {
                seen[v] = true;
                appearance.push(v);
            }
        }
    }
    if !appearance.iter().copied().eq(g.vertices()) {
        for v in g.vertices() {
            let _ = writeln!(out, "{}", g.name(v));
        }
    }
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", g.name(e.src), g.name(e.dst), e.cost);
    }
    out
}

/// Parses the `.vwg` format.
pub fn parse_vertex_weighted(text: &str) -> Result<VertexWeightedDag> {
    let mut names = Vec::new();
    let mut weights = Vec::new();
    let mut edge_names: Vec<(usize, String, String)> = Vec::new();
    for (line, tokens) in data_lines(text) {
        match tokens.as_slice() {
            ["v", name, w] => {
                names.push(name.to_string());
                weights.push(parse_real(w, line, "weight")?);
            }
            ["e", s, d] => edge_names.push((line, s.to_string(), d.to_string())),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: "expected `v NAME WEIGHT` or `e SRC DST`".to_string(),
                })
            }
        }
    }
    let lookup = Names::from_vec(names.clone())?;
    let edges = edge_names
        .iter()
        .map(|(_, s, d)| Ok((lookup.lookup(s)?, lookup.lookup(d)?)))
        .collect::<Result<Vec<_>>>()?;
    VertexWeightedDag::new(names, weights, edges)
}

pub fn render_vertex_weighted(g: &VertexWeightedDag) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let _ = writeln!(out, "v {} {}", g.name(v), g.weight(v));
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", g.name(u), g.name(v));
    }
    out
}
