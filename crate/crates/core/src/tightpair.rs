//! Tight pairs on acyclic vertex-weighted graphs by depth-first search.
//!
//! Two variants share the same contract. [`tight_pairs_from_root_stacked`]
//! carries the distance from the root on the stack;
//! [`tight_pairs_from_root_weights`] recomputes it as `w(v) - w(root)`. Both
//! mark vertices visited when popped and skip a vertex popped a second time.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexWeightedDag};
use crate::tighten;

/// Set of `(first, last)` endpoint pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TightPairSet {
    pairs: BTreeSet<(VertexId, VertexId)>,
}

impl TightPairSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, first: VertexId, last: VertexId) -> bool {
        self.pairs.insert((first, last))
    }

    pub fn contains(&self, first: VertexId, last: VertexId) -> bool {
        self.pairs.contains(&(first, last))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.pairs
    }

    pub fn named(&self, names: &[String]) -> BTreeSet<(String, String)> {
        self.iter()
            .map(|(u, v)| (names[u].clone(), names[v].clone()))
            .collect()
    }

    /// Pairs ordered by `(w(u), w(v))`, ties by input order.
    pub fn sorted_by_weight(&self, dag: &VertexWeightedDag) -> Vec<(VertexId, VertexId)> {
        let mut pairs: Vec<_> = self.iter().collect();
        pairs.sort_by(|&(a, b), &(c, d)| {
            dag.weight(a)
                .total_cmp(&dag.weight(c))
                .then(dag.weight(b).total_cmp(&dag.weight(d)))
                .then((a, b).cmp(&(c, d)))
        });
        pairs
    }

    /// `U<TAB>V` lines in weight order.
    pub fn render(&self, dag: &VertexWeightedDag) -> String {
        self.sorted_by_weight(dag)
            .into_iter()
            .map(|(u, v)| format!("{}\t{}\n", dag.name(u), dag.name(v)))
            .collect()
    }
}

impl Extend<(VertexId, VertexId)> for TightPairSet {
    fn extend<I: IntoIterator<Item = (VertexId, VertexId)>>(&mut self, iter: I) {
        self.pairs.extend(iter);
    }
}

impl FromIterator<(VertexId, VertexId)> for TightPairSet {
    fn from_iter<I: IntoIterator<Item = (VertexId, VertexId)>>(iter: I) -> Self {
        TightPairSet {
            pairs: iter.into_iter().collect(),
        }
    }
}

fn check_root(dag: &VertexWeightedDag, root: VertexId) -> Result<()> {
    if root < dag.vertex_count() {
        Ok(())
    } else {
        Err(Error::UnknownVertex(format!("#{root}")))
    }
}

pub fn tight_pairs_from_root_stacked(
    dag: &VertexWeightedDag,
    root: VertexId,
    budget: Budget,
) -> Result<TightPairSet> {
    check_root(dag, root)?;
    let entry_cost = dag.min_predecessor_cost(root);
    let mut found = TightPairSet::new();
    let mut visited = vec![false; dag.vertex_count()];
    let mut stack = vec![(root, 0.0)];
    while let Some((v, dist)) = stack.pop() {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let mut may_extend = false;
        for &u in dag.successors(v) {
            let reach = dist + dag.distance(v, u);
            if budget.admits(reach) {
                if !visited[u] {
                    stack.push((u, reach));
                }
                may_extend = true;
            }
        }
        if !may_extend && budget.exceeded_by(entry_cost + dist) {
            found.insert(root, v);
        }
    }
    Ok(found)
}

pub fn tight_pairs_from_root_weights(
    dag: &VertexWeightedDag,
    root: VertexId,
    budget: Budget,
) -> Result<TightPairSet> {
    check_root(dag, root)?;
    let base = dag.weight(root);
    let entry_cost = dag
        .predecessors(root)
        .iter()
        .map(|&u| base - dag.weight(u))
        .fold(f64::INFINITY, f64::min);
    let mut found = TightPairSet::new();
    let mut visited = vec![false; dag.vertex_count()];
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let mut may_extend = false;
        for &u in dag.successors(v) {
            if budget.admits(dag.weight(u) - base) {
                if !visited[u] {
                    stack.push(u);
                }
                may_extend = true;
            }
        }
        if !may_extend && budget.exceeded_by(entry_cost + dag.weight(v) - base) {
            found.insert(root, v);
        }
    }
    Ok(found)
}

/// Which tight-pair algorithm to run on a vertex-weighted dag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairAlgorithm {
    /// Three-phase correspondence tightening.
    Tighten,
    /// DFS with distances on the stack.
    Stacked,
    /// DFS with distances from vertex weights.
    Weights,
}

impl PairAlgorithm {
    pub const ALL: [PairAlgorithm; 3] = [
        PairAlgorithm::Tighten,
        PairAlgorithm::Stacked,
        PairAlgorithm::Weights,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PairAlgorithm::Tighten => "tighten",
            PairAlgorithm::Stacked => "stacked",
            PairAlgorithm::Weights => "weights",
        }
    }
}

impl fmt::Display for PairAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PairAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tighten" => Ok(PairAlgorithm::Tighten),
            "stacked" => Ok(PairAlgorithm::Stacked),
            "weights" => Ok(PairAlgorithm::Weights),
            other => Err(Error::InvalidParameter(format!(
                "unknown pair algorithm {other:?} (expected tighten, stacked or weights)"
            ))),
        }
    }
}

/// Union over every vertex as root.
pub fn all_tight_pairs(
    dag: &VertexWeightedDag,
    budget: Budget,
    algorithm: PairAlgorithm,
) -> TightPairSet {
    let per_root = match algorithm {
        PairAlgorithm::Tighten => return tighten::tight_pairs_via_tightening(dag, budget),
        PairAlgorithm::Stacked => tight_pairs_from_root_stacked,
        PairAlgorithm::Weights => tight_pairs_from_root_weights,
    };
    let mut all = TightPairSet::new();
    for root in dag.vertices() {
        all.extend(per_root(dag, root, budget).expect("root is in range").iter());
    }
    all
}
