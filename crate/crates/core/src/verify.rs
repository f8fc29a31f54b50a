//! Differential checking of every applicable algorithm against the oracle.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{VertexWeightedDag, WeightedDigraph};
use crate::oracle::{oracle_tight_pairs, oracle_tight_paths};
use crate::tightpair::{all_tight_pairs, PairAlgorithm, TightPairSet};
use crate::tightpath::{all_tight_paths, TightPathSet};

pub type PathRunner = Box<dyn Fn(&WeightedDigraph, Budget) -> TightPathSet>;
pub type PairRunner = Box<dyn Fn(&VertexWeightedDag, Budget) -> TightPairSet>;

#[derive(Debug, Clone)]
pub enum VerifyInput {
    Digraph(WeightedDigraph),
    Dag(VertexWeightedDag),
}

/// Named algorithms under test. Path runners apply to every input (a dag
/// through its derived edge-weighted graph, compared by endpoints); pair
/// runners only to dags.
pub struct Suite {
    paths: Vec<(String, PathRunner)>,
    pairs: Vec<(String, PairRunner)>,
}

impl Default for Suite {
    fn default() -> Self {
        Self::standard()
    }
}

impl Suite {
    pub fn empty() -> Self {
        Suite {
            paths: Vec::new(),
            pairs: Vec::new(),
        }
    }

    pub fn standard() -> Self {
        let mut suite =
            Suite::empty().with_path_algorithm("paths", Box::new(all_tight_paths));
        for algo in PairAlgorithm::ALL {
            suite = suite.with_pair_algorithm(
                algo.as_str(),
                Box::new(move |d, b| all_tight_pairs(d, b, algo)),
            );
        }
        suite
    }

    /// Standard suite with two broken runners: paths loses everything
    /// starting at the first vertex, weights loses its first pair. Exists to
    /// prove the harness notices.
    pub fn corrupted() -> Self {
        let mut suite = Suite::empty().with_path_algorithm(
            "paths",
            Box::new(|g, b| {
                all_tight_paths(g, b)
                    .iter()
                    .filter(|p| p.first() != 0)
                    .cloned()
                    .collect()
            }),
        );
        for algo in PairAlgorithm::ALL {
            let runner: PairRunner = if algo == PairAlgorithm::Weights {
                Box::new(move |d, b| all_tight_pairs(d, b, algo).iter().skip(1).collect())
            } else {
                Box::new(move |d, b| all_tight_pairs(d, b, algo))
            };
            suite = suite.with_pair_algorithm(algo.as_str(), runner);
        }
        suite
    }

    pub fn with_path_algorithm(mut self, name: &str, run: PathRunner) -> Self {
        self.paths.push((name.to_string(), run));
        self
    }

    pub fn with_pair_algorithm(mut self, name: &str, run: PairRunner) -> Self {
        self.pairs.push((name.to_string(), run));
        self
    }
}

/// Difference between one algorithm's output and the oracle's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub algorithm: String,
    /// Reported by the oracle only.
    pub missing_from_algorithm: BTreeSet<String>,
    /// Reported by the algorithm only.
    pub missing_from_oracle: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Match,
    Mismatch(Vec<Mismatch>),
    /// The oracle hit its path cap, so nothing was compared.
    Unverifiable { cap: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaReport {
    pub gamma: f64,
    pub algorithms: Vec<String>,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub entries: Vec<GammaReport>,
}

impl VerifyReport {
    pub fn has_mismatch(&self) -> bool {
        self.entries
            .iter()
            .any(|e| matches!(e.outcome, Outcome::Mismatch(_)))
    }

    pub fn has_unverifiable(&self) -> bool {
        self.entries
            .iter()
            .any(|e| matches!(e.outcome, Outcome::Unverifiable { .. }))
    }

    pub fn all_match(&self) -> bool {
        self.entries.iter().all(|e| e.outcome == Outcome::Match)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let algos = e.algorithms.join(",");
            match &e.outcome {
                Outcome::Match => {
                    let _ = writeln!(out, "gamma={}\tmatch\t{algos}", e.gamma);
                }
                Outcome::Unverifiable { cap } => {
                    let _ = writeln!(
                        out,
                        "gamma={}\tunverifiable at this gamma (oracle cap {cap})",
                        e.gamma
                    );
                }
                Outcome::Mismatch(ms) => {
                    let _ = writeln!(out, "gamma={}\tmismatch\t{algos}", e.gamma);
                    for m in ms {
                        let _ = writeln!(
                            out,
                            "  {}: missing from {}: [{}]",
                            m.algorithm,
                            m.algorithm,
                            m.missing_from_algorithm.iter().cloned().collect::<Vec<_>>().join("; ")
                        );
                        let _ = writeln!(
                            out,
                            "  {}: missing from oracle: [{}]",
                            m.algorithm,
                            m.missing_from_oracle.iter().cloned().collect::<Vec<_>>().join("; ")
                        );
                    }
                }
            }
        }
        out
    }
}

fn path_keys(set: &TightPathSet, names: &[String]) -> BTreeSet<String> {
    set.iter().map(|p| p.names(names).join(" ")).collect()
}

fn pair_keys(set: &TightPairSet, names: &[String]) -> BTreeSet<String> {
    set.iter()
        .map(|(u, v)| format!("{} {}", names[u], names[v]))
        .collect()
}

fn endpoint_keys(set: &TightPathSet, names: &[String]) -> BTreeSet<String> {
    set.iter()
        .map(|p| format!("{} {}", names[p.first()], names[p.last()]))
        .collect()
}

fn compare(algorithm: &str, got: BTreeSet<String>, want: &BTreeSet<String>) -> Option<Mismatch> {
    if &got == want {
        return None;
    }
    Some(Mismatch {
        algorithm: algorithm.to_string(),
        missing_from_algorithm: want.difference(&got).cloned().collect(),
        missing_from_oracle: got.difference(want).cloned().collect(),
    })
}

/// Checks `suite` against the oracle at one threshold.
pub fn verify_at(input: &VerifyInput, budget: Budget, suite: &Suite, cap: usize) -> GammaReport {
    let mut algorithms = Vec::new();
    let mut mismatches = Vec::new();
    let oracle = match input {
        VerifyInput::Digraph(g) => oracle_tight_paths(g, budget, cap).map(|s| path_keys(&s, g.names())),
        VerifyInput::Dag(d) => oracle_tight_pairs(d, budget, cap).map(|s| pair_keys(&s, d.names())),
    };
    let want = match oracle {
        Ok(w) => w,
        Err(Error::OracleCapExceeded { cap }) => {
            return GammaReport {
                gamma: budget.gamma(),
                algorithms,
                outcome: Outcome::Unverifiable { cap },
            }
        }
        Err(e) => unreachable!("oracle fails only on its cap: {e}"),
    };
    match input {
        VerifyInput::Digraph(g) => {
            for (name, run) in &suite.paths {
                algorithms.push(name.clone());
                mismatches.extend(compare(name, path_keys(&run(g, budget), g.names()), &want));
            }
        }
        VerifyInput::Dag(d) => {
            let derived = d.to_edge_weighted();
            for (name, run) in &suite.paths {
                algorithms.push(name.clone());
                let got = endpoint_keys(&run(&derived, budget), d.names());
                mismatches.extend(compare(name, got, &want));
            }
            for (name, run) in &suite.pairs {
                algorithms.push(name.clone());
                mismatches.extend(compare(name, pair_keys(&run(d, budget), d.names()), &want));
            }
        }
    }
    GammaReport {
        gamma: budget.gamma(),
        algorithms,
        outcome: if mismatches.is_empty() {
            Outcome::Match
        } else {
            Outcome::Mismatch(mismatches)
        },
    }
}

/// Runs [`verify_at`] for each threshold, sharing one tolerance.
pub fn verify(
    input: &VerifyInput,
    gammas: &[f64],
    tolerance: f64,
    suite: &Suite,
    cap: usize,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for &gamma in gammas {
        let budget = Budget::new(gamma)?.with_tolerance(tolerance)?;
        report.entries.push(verify_at(input, budget, suite, cap));
    }
    Ok(report)
}
