//! Correspondence tightening over finite partial orders.
//!
//! A [`Correspondence`] is a binary relation on the elements of a [`Poset`],
//! stored as one predecessor list per element: `R_v = { u : (u, v) in R }`.
//! Lists are kept sorted by a fixed linear extension of the order, which makes
//! minimality scans and list differences single forward passes.
//!
//! On a vertex-weighted dag the order is reachability, and
//! [`tight_pairs_via_tightening`] builds the bounded relation, left-tightens
//! it, then right-tightens the result.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::VertexWeightedDag;
use crate::tightpair::TightPairSet;

/// Finite partial order with an explicit `<=` matrix and a linear extension.
#[derive(Debug, Clone, PartialEq)]
pub struct Poset {
    names: Vec<String>,
    leq: Vec<bool>,
    order: Vec<usize>,
    position: Vec<usize>,
}

impl Poset {
    /// `leq` must already be reflexive, transitive and antisymmetric, and
    /// `order` must list every element consistently with it.
    pub(crate) fn from_parts(names: Vec<String>, leq: Vec<bool>, order: Vec<usize>) -> Self {
        let n = names.len();
        debug_assert_eq!(leq.len(), n * n);
        debug_assert_eq!(order.len(), n);
        let mut position = vec![0; n];
        for (i, &e) in order.iter().enumerate() {
            position[e] = i;
        }
        Poset {
            names,
            leq,
            order,
            position,
        }
    }

    /// Generates the order from `(a, b)` pairs meaning `a <= b`, closing them
    /// reflexively and transitively.
    pub fn from_relation(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::ElementOutOfRange { index: x, len: n });
                }
            }
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if leq[a * n + b] && leq[b * n + a] {
                    return Err(Error::NotAntisymmetric(names[a].clone(), names[b].clone()));
                }
            }
        }
        // a < b implies the down-set of a is strictly smaller than that of b
        let down: Vec<usize> = (0..n)
            .map(|b| (0..n).filter(|&a| leq[a * n + b]).count())
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&e| (down[e], e));
        Ok(Self::from_parts(names, leq, order))
    }

    /// Total order following the given sequence.
    pub fn chain(names: Vec<String>) -> Self {
        let n = names.len();
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relation(names, &pairs).expect("a chain is antisymmetric")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: usize) -> &str {
        &self.names[e]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.names.len() + b]
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Rank of `e` in the linear extension.
    #[inline]
    pub fn position(&self, e: usize) -> usize {
        self.position[e]
    }

    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }
}

/// Binary relation over one poset, as sorted per-element predecessor lists.
#[derive(Debug, Clone)]
pub struct Correspondence {
    poset: Arc<Poset>,
    preds: Vec<Vec<usize>>,
}

impl PartialEq for Correspondence {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.poset, &other.poset) || self.poset == other.poset)
            && self.preds == other.preds
    }
}

impl Correspondence {
    pub fn new(poset: Arc<Poset>, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = poset.len();
        let mut preds = vec![Vec::new(); n];
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::ElementOutOfRange { index: x, len: n });
                }
            }
            preds[b].push(a);
        }
        for list in &mut preds {
            list.sort_by_key(|&u| poset.position(u));
            list.dedup();
        }
        Ok(Correspondence { poset, preds })
    }

    pub fn empty(poset: Arc<Poset>) -> Self {
        let preds = vec![Vec::new(); poset.len()];
        Correspondence { poset, preds }
    }

    /// The order relation itself: every pair `u <= v`.
    pub fn full(poset: Arc<Poset>) -> Self {
        let n = poset.len();
        let mut preds = vec![Vec::new(); n];
        for (v, list) in preds.iter_mut().enumerate() {
            list.extend(
                poset
                    .linear_extension()
                    .iter()
                    .copied()
                    .filter(|&u| poset.leq(u, v)),
            );
        }
        Correspondence { poset, preds }
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    /// `R_v`, sorted along the linear extension.
    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.preds[v]
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let key = self.poset.position(a);
        self.preds[b]
            .binary_search_by_key(&key, |&u| self.poset.position(u))
            .is_ok()
    }

    pub fn len(&self) -> usize {
        self.preds.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.preds.iter().all(Vec::is_empty)
    }

    /// Pairs `(u, v)` grouped by `v` in element order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.preds
            .iter()
            .enumerate()
            .flat_map(|(v, list)| list.iter().map(move |&u| (u, v)))
    }

    pub fn pair_set(&self) -> BTreeSet<(usize, usize)> {
        self.pairs().collect()
    }

    pub fn named_pairs(&self) -> BTreeSet<(String, String)> {
        self.pairs()
            .map(|(a, b)| (self.poset.name(a).to_string(), self.poset.name(b).to_string()))
            .collect()
    }

    pub fn filter(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Self {
        let preds = self
            .preds
            .iter()
            .enumerate()
            .map(|(v, list)| list.iter().copied().filter(|&u| keep(u, v)).collect())
            .collect();
        Correspondence {
            poset: Arc::clone(&self.poset),
            preds,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.filter(|a, b| other.contains(a, b))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.pairs().all(|(a, b)| other.contains(a, b))
    }

    /// One `V: U1 U2 ...` line per element with a nonempty list.
    pub fn render_lists(&self) -> String {
        let mut out = String::new();
        for &v in self.poset.linear_extension() {
            let _ = write!(out, "{}:", self.poset.name(v));
            for &u in &self.preds[v] {
                let _ = write!(out, " {}", self.poset.name(u));
            }
            out.push('\n');
        }
        out
    }
}

/// Keeps `(a, b)` when no other `(a', b')` in `r` has `a' <= a` and `b <= b'`.
pub fn tighten(r: &Correspondence) -> Correspondence {
    let order = r.poset();
    let all: Vec<(usize, usize)> = r.pairs().collect();
    r.filter(|a, b| {
        !all.iter()
            .any(|&(a2, b2)| (a2, b2) != (a, b) && order.leq(a2, a) && order.leq(b, b2))
    })
}

/// Keeps `(a, b)` when `a` is minimal in `R_b`.
pub fn left_tighten(r: &Correspondence) -> Correspondence {
    let order = r.poset();
    let preds = r
        .preds
        .iter()
        .map(|list| {
            let mut kept: Vec<usize> = Vec::with_capacity(list.len());
            // anything strictly below u sits earlier in the list; checking the
            // kept prefix suffices because minimal elements dominate the rest
            for &u in list {
                if !kept.iter().any(|&m| order.lt(m, u)) {
                    kept.push(u);
                }
            }
            kept
        })
        .collect();
    Correspondence {
        poset: Arc::clone(order),
        preds,
    }
}

/// Keeps `(a, b)` when `b` is maximal among the partners of `a`.
///
/// For each `v` and each `u < v`, drops from `R_u` every element also in
/// `R_v`. Working in place is sound because the order is transitive: the
/// maximal holder of an element never loses it and strips it below.
pub fn right_tighten(r: &Correspondence) -> Correspondence {
    let order = r.poset();
    let mut preds = r.preds.clone();
    for &v in order.linear_extension().iter().rev() {
        if preds[v].is_empty() {
            continue;
        }
        for &u in order.linear_extension() {
            if order.position(u) >= order.position(v) {
                break;
            }
            if order.lt(u, v) && !preds[u].is_empty() {
                let upper = std::mem::take(&mut preds[v]);
                remove_sorted(&mut preds[u], &upper, order);
                preds[v] = upper;
            }
        }
    }
    Correspondence {
        poset: Arc::clone(order),
        preds,
    }
}

// Merge-like difference of two lists sorted by linear-extension position.
fn remove_sorted(target: &mut Vec<usize>, drop: &[usize], order: &Poset) {
    let mut j = 0;
    target.retain(|&x| {
        let px = order.position(x);
        while j < drop.len() && order.position(drop[j]) < px {
            j += 1;
        }
        !(j < drop.len() && drop[j] == x)
    });
}

/// `(a, b) in R` implies `a <= b`, and `a <= b <= c` with `(a, c) in R`
/// implies both `(a, b)` and `(b, c)` are in `R`.
pub fn is_convex(r: &Correspondence) -> bool {
    let order = r.poset();
    r.pairs().all(|(a, c)| {
        order.leq(a, c)
            && (0..order.len())
                .filter(|&b| order.leq(a, b) && order.leq(b, c))
                .all(|b| r.contains(a, b) && r.contains(b, c))
    })
}

/// `R_{G,gamma}` from a precomputed reachability closure: keeps `u` in `R_v`
/// when `w(v) - w(u)` is within budget. Reflexive pairs always survive.
pub fn bound_relation(
    closure: &Correspondence,
    dag: &VertexWeightedDag,
    budget: Budget,
) -> Correspondence {
    closure.filter(|u, v| budget.admits(dag.distance(u, v)))
}

pub fn build_correspondence(dag: &VertexWeightedDag, budget: Budget) -> Correspondence {
    bound_relation(&dag.reachability_closure(), dag, budget)
}

/// Relation after each of the three phases.
#[derive(Debug, Clone)]
pub struct TighteningPhases {
    pub bounded: Correspondence,
    pub left: Correspondence,
    pub right: Correspondence,
}

pub fn tightening_phases(
    closure: &Correspondence,
    dag: &VertexWeightedDag,
    budget: Budget,
) -> TighteningPhases {
    let bounded = bound_relation(closure, dag, budget);
    let left = left_tighten(&bounded);
    let right = right_tighten(&left);
    TighteningPhases {
        bounded,
        left,
        right,
    }
}

/// Tight pairs from a reachability closure computed beforehand.
pub fn tight_pairs_from_closure(
    closure: &Correspondence,
    dag: &VertexWeightedDag,
    budget: Budget,
) -> TightPairSet {
    let phases = tightening_phases(closure, dag, budget);
    phases.right.pairs().collect()
}

pub fn tight_pairs_via_tightening(dag: &VertexWeightedDag, budget: Budget) -> TightPairSet {
    tight_pairs_from_closure(&dag.reachability_closure(), dag, budget)
}
