//! Brute-force reference implementations.
//!
//! Nothing here calls into the algorithm modules: paths are enumerated by
//! plain recursion over the raw edge list, and the relational operators
//! evaluate their quantifiers over the whole universe.

use std::collections::HashSet;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Path, VertexId, VertexWeightedDag, WeightedDigraph};
use crate::tighten::Correspondence;
use crate::tightpair::TightPairSet;
use crate::tightpath::TightPathSet;

pub const DEFAULT_PATH_CAP: usize = 10_000_000;

struct Enumerator<'a> {
    adjacency: Vec<Vec<(VertexId, f64)>>,
    budget: Budget,
    cap: usize,
    out: &'a mut Vec<Path>,
}

impl Enumerator<'_> {
    fn grow(&mut self, vertices: &mut Vec<VertexId>, cost: f64) -> Result<()> {
        if self.out.len() >= self.cap {
            return Err(Error::OracleCapExceeded { cap: self.cap });
        }
        self.out.push(Path {
            vertices: vertices.clone(),
            cost,
        });
        let last = *vertices.last().expect("paths are nonempty");
        for i in 0..self.adjacency[last].len() {
            let (next, step) = self.adjacency[last][i];
            let total = cost + step;
            if self.budget.admits(total) {
                vertices.push(next);
                self.grow(vertices, total)?;
                vertices.pop();
            }
        }
        Ok(())
    }
}

fn adjacency(g: &WeightedDigraph) -> Vec<Vec<(VertexId, f64)>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in g.edges() {
        adj[e.src].push((e.dst, e.cost));
    }
    adj
}

/// Every path starting at `start` with cost within budget.
pub fn enumerate_bounded_paths_from(
    g: &WeightedDigraph,
    start: VertexId,
    budget: Budget,
    cap: usize,
) -> Result<Vec<Path>> {
    let mut out = Vec::new();
    let mut e = Enumerator {
        adjacency: adjacency(g),
        budget,
        cap,
        out: &mut out,
    };
    e.grow(&mut vec![start], 0.0)?;
    Ok(out)
}

/// Every path, from every start vertex, with cost within budget. Fails once
/// more than `cap` paths have been produced.
pub fn enumerate_bounded_paths(
    g: &WeightedDigraph,
    budget: Budget,
    cap: usize,
) -> Result<Vec<Path>> {
    let mut out = Vec::new();
    let mut e = Enumerator {
        adjacency: adjacency(g),
        budget,
        cap,
        out: &mut out,
    };
    for start in 0..g.vertex_count() {
        e.grow(&mut vec![start], 0.0)?;
    }
    Ok(out)
}

/// Bounded paths none of whose one-edge extensions stays within budget.
pub fn oracle_tight_paths(g: &WeightedDigraph, budget: Budget, cap: usize) -> Result<TightPathSet> {
    let bounded = enumerate_bounded_paths(g, budget, cap)?;
    Ok(bounded
        .into_iter()
        .filter(|p| {
            let (first, last) = (p.vertices[0], p.vertices[p.vertices.len() - 1]);
            g.edges().iter().all(|e| {
                let before = e.dst == first && budget.admits(p.cost + e.cost);
                let after = e.src == last && budget.admits(p.cost + e.cost);
                !before && !after
            })
        })
        .collect())
}

/// Endpoints of the tight paths of the derived edge-weighted graph.
pub fn oracle_tight_pairs(
    dag: &VertexWeightedDag,
    budget: Budget,
    cap: usize,
) -> Result<TightPairSet> {
    let g = dag.to_edge_weighted();
    let paths = oracle_tight_paths(&g, budget, cap)?;
    Ok(paths.iter().map(|p| (p.first(), p.last())).collect())
}

fn retain_literal(
    r: &Correspondence,
    mut survives: impl FnMut(&HashSet<(usize, usize)>, usize, usize) -> bool,
) -> Correspondence {
    let members: HashSet<(usize, usize)> = r.pairs().collect();
    let kept: Vec<(usize, usize)> = r
        .pairs()
        .filter(|&(a, b)| survives(&members, a, b))
        .collect();
    Correspondence::new(r.poset().clone(), kept).expect("subset of a valid relation")
}

/// `t(R)`, evaluating the universal quantifiers over all of `A x B`.
pub fn oracle_tighten(r: &Correspondence) -> Correspondence {
    let order = r.poset().clone();
    let n = order.len();
    retain_literal(r, |members, a, b| {
        (0..n).all(|a2| {
            (0..n).all(|b2| {
                let dominated = order.leq(a2, a) && order.leq(b, b2) && members.contains(&(a2, b2));
                !dominated || (a2 == a && b2 == b)
            })
        })
    })
}

pub fn oracle_left_tighten(r: &Correspondence) -> Correspondence {
    let order = r.poset().clone();
    let n = order.len();
    retain_literal(r, |members, a, b| {
        (0..n).all(|a2| !(order.leq(a2, a) && members.contains(&(a2, b))) || a2 == a)
    })
}

pub fn oracle_right_tighten(r: &Correspondence) -> Correspondence {
    let order = r.poset().clone();
    let n = order.len();
    retain_literal(r, |members, a, b| {
        (0..n).all(|b2| !(order.leq(b, b2) && members.contains(&(a, b2))) || b2 == b)
    })
}
