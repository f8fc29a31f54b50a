//! Threshold-sweep timing harness.
//!
//! Every (threshold, algorithm) cell becomes one [`BenchRecord`]. Graphs are
//! loaded and the reachability closure used by tightening is computed once
//! before timing starts. Cells whose algorithm needs a dag but got a cyclic
//! graph are recorded with `NA` and the sweep continues.

use std::fmt::{self, Write as _};
use std::io::{Read, Write};
use std::str::FromStr;
use std::time::Instant;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexWeightedDag, WeightedDigraph};
use crate::tighten::{tight_pairs_from_closure, Correspondence};
use crate::tightpair::{tight_pairs_from_root_stacked, tight_pairs_from_root_weights, TightPairSet};
use crate::tightpath::{all_tight_paths, tight_paths_from_root};

pub const CSV_HEADER: [&str; 7] = ["graph", "algo", "gamma", "seconds", "reps", "count", "total_len"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BenchAlgorithm {
    /// Path-tree traversal; runs on any graph.
    Paths,
    Tighten,
    Stacked,
    Weights,
}

impl BenchAlgorithm {
    pub const ALL: [BenchAlgorithm; 4] = [
        BenchAlgorithm::Paths,
        BenchAlgorithm::Tighten,
        BenchAlgorithm::Stacked,
        BenchAlgorithm::Weights,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BenchAlgorithm::Paths => "paths",
            BenchAlgorithm::Tighten => "tighten",
            BenchAlgorithm::Stacked => "stacked",
            BenchAlgorithm::Weights => "weights",
        }
    }
}

impl fmt::Display for BenchAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BenchAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BenchAlgorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown algorithm {s:?} (expected paths, tighten, stacked or weights)"
                ))
            })
    }
}

/// `count` equally spaced thresholds from `lo` to `hi` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaRange {
    lo: f64,
    hi: f64,
    count: usize,
}

impl GammaRange {
    pub fn new(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidParameter("threshold range needs at least 2 points".into()));
        }
        if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || lo >= hi {
            return Err(Error::InvalidParameter(format!(
                "threshold range needs 0 <= lo < hi, got {lo}:{hi}"
            )));
        }
        Ok(GammaRange { lo, hi, count })
    }

    pub fn values(&self) -> Vec<f64> {
        let step = (self.hi - self.lo) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| if i + 1 == self.count { self.hi } else { self.lo + i as f64 * step })
            .collect()
    }
}

impl FromStr for GammaRange {
    type Err = Error;

    /// `LO:HI:N`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("expected LO:HI:N, got {s:?}"));
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts[..] else {
            return Err(bad());
        };
        GammaRange::new(
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().parse().map_err(|_| bad())?,
            n.trim().parse().map_err(|_| bad())?,
        )
    }
}

/// One timed cell. `None` fields are written as `NA`.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub graph: String,
    pub algo: String,
    pub gamma: f64,
    /// Mean wall time over `reps` runs.
    pub seconds: Option<f64>,
    pub reps: u32,
    /// Tight paths or tight pairs found.
    pub count: Option<usize>,
    /// Summed path lengths in vertices; twice the count for pairs.
    pub total_len: Option<usize>,
}

/// Input of a sweep. A dag also runs the path traversal on its derived
/// edge-weighted graph.
#[derive(Debug, Clone)]
pub enum BenchGraph {
    Digraph(WeightedDigraph),
    Dag(VertexWeightedDag),
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub graph_id: String,
    pub algorithms: Vec<BenchAlgorithm>,
    pub gammas: GammaRange,
    pub reps: u32,
    pub warmup: u32,
    pub root: Option<String>,
}

struct Prepared<'a> {
    digraph: WeightedDigraph,
    dag: Option<&'a VertexWeightedDag>,
    closure: Option<Correspondence>,
    root: Option<VertexId>,
}

fn run_once(p: &Prepared<'_>, algo: BenchAlgorithm, budget: Budget) -> Option<(usize, usize)> {
    let pairs_out = |set: TightPairSet| Some((set.len(), 2 * set.len()));
    let per_root = |f: fn(&VertexWeightedDag, VertexId, Budget) -> Result<TightPairSet>| {
        let dag = p.dag?;
        let mut all = TightPairSet::new();
        let roots = match p.root {
            Some(r) => r..r + 1,
            None => dag.vertices(),
        };
        for r in roots {
            all.extend(f(dag, r, budget).expect("root is in range").iter());
        }
        pairs_out(all)
    };
    match algo {
        BenchAlgorithm::Paths => {
            let found = match p.root {
                Some(r) => tight_paths_from_root(&p.digraph, r, budget).expect("root is in range"),
                None => all_tight_paths(&p.digraph, budget),
            };
            Some((found.len(), found.total_length()))
        }
        BenchAlgorithm::Tighten => {
            let dag = p.dag?;
            let mut found = tight_pairs_from_closure(p.closure.as_ref()?, dag, budget);
            if let Some(r) = p.root {
                found = found.iter().filter(|&(u, _)| u == r).collect();
            }
            pairs_out(found)
        }
        BenchAlgorithm::Stacked => per_root(tight_pairs_from_root_stacked),
        BenchAlgorithm::Weights => per_root(tight_pairs_from_root_weights),
    }
}

/// Times every algorithm at every threshold, sequentially.
pub fn run_bench(graph: &BenchGraph, config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if config.algorithms.is_empty() {
        return Err(Error::InvalidParameter("no algorithms selected".into()));
    }
    if config.reps == 0 {
        return Err(Error::InvalidParameter("repetitions must be at least 1".into()));
    }
    let prepared = match graph {
        BenchGraph::Digraph(g) => Prepared {
            root: config.root.as_deref().map(|r| g.vertex(r)).transpose()?,
            digraph: g.clone(),
            dag: None,
            closure: None,
        },
        BenchGraph::Dag(d) => Prepared {
            root: config.root.as_deref().map(|r| d.vertex(r)).transpose()?,
            digraph: d.to_edge_weighted(),
            dag: Some(d),
            closure: config
                .algorithms
                .contains(&BenchAlgorithm::Tighten)
                .then(|| d.reachability_closure()),
        },
    };
    let mut records = Vec::new();
    for gamma in config.gammas.values() {
        let budget = Budget::new(gamma)?;
        for &algo in &config.algorithms {
            for _ in 0..config.warmup {
                run_once(&prepared, algo, budget);
            }
            let mut outcome = None;
            let start = Instant::now();
            for _ in 0..config.reps {
                outcome = run_once(&prepared, algo, budget);
                if outcome.is_none() {
                    break;
                }
            }
            let elapsed = start.elapsed().as_secs_f64();
            records.push(BenchRecord {
                graph: config.graph_id.clone(),
                algo: algo.to_string(),
                gamma,
                seconds: outcome.map(|_| elapsed / config.reps as f64),
                reps: config.reps,
                count: outcome.map(|o| o.0),
                total_len: outcome.map(|o| o.1),
            });
        }
    }
    Ok(records)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "NA".to_string(), |x| x.to_string())
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in records {
        w.write_record([
            r.graph.clone(),
            r.algo.clone(),
            r.gamma.to_string(),
            r.seconds.map_or_else(|| "NA".to_string(), |s| format!("{s:.6}")),
            r.reps.to_string(),
            opt(r.count),
            opt(r.total_len),
        ])
        .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(records: &[BenchRecord]) -> String {
    let mut buf = Vec::new();
    write_csv(records, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

fn field<T: FromStr>(raw: &str, name: &str, line: usize) -> Result<T> {
    raw.parse().map_err(|_| Error::Parse {
        line,
        message: format!("bad {name} value {raw:?}"),
    })
}

fn opt_field<T: FromStr>(raw: &str, name: &str, line: usize) -> Result<Option<T>> {
    if raw == "NA" {
        Ok(None)
    } else {
        field(raw, name, line).map(Some)
    }
}

/// Parses CSV produced by [`write_csv`], insisting on the exact header.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<BenchRecord>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).from_reader(input);
    let mut rows = rdr.records();
    let header = rows
        .next()
        .ok_or(Error::Parse {
            line: 1,
            message: "empty benchmark file".into(),
        })?
        .map_err(|e| Error::Io(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected header {}", CSV_HEADER.join(",")),
        });
    }
    let mut out = Vec::new();
    for (i, row) in rows.enumerate() {
        let line = i + 2;
        let row = row.map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        if row.len() != CSV_HEADER.len() {
            return Err(Error::Parse {
                line,
                message: format!("expected {} fields, found {}", CSV_HEADER.len(), row.len()),
            });
        }
        let reps: u32 = field(&row[4], "reps", line)?;
        if reps == 0 {
            return Err(Error::Parse {
                line,
                message: "reps must be at least 1".into(),
            });
        }
        out.push(BenchRecord {
            graph: row[0].to_string(),
            algo: row[1].to_string(),
            gamma: field(&row[2], "gamma", line)?,
            seconds: opt_field(&row[3], "seconds", line)?,
            reps,
            count: opt_field(&row[5], "count", line)?,
            total_len: opt_field(&row[6], "total_len", line)?,
        });
    }
    Ok(out)
}

fn algorithms_in(records: &[BenchRecord]) -> Vec<&str> {
    let mut algos: Vec<&str> = Vec::new();
    for r in records {
        if !algos.contains(&r.algo.as_str()) {
            algos.push(&r.algo);
        }
    }
    algos
}

fn gammas_in(records: &[BenchRecord]) -> Vec<f64> {
    let mut gammas: Vec<f64> = Vec::new();
    for r in records {
        if !gammas.contains(&r.gamma) {
            gammas.push(r.gamma);
        }
    }
    gammas
}

fn seconds_at(records: &[BenchRecord], algo: &str, gamma: f64) -> Option<f64> {
    records
        .iter()
        .find(|r| r.algo == algo && r.gamma == gamma)
        .and_then(|r| r.seconds)
}

/// Whitespace-separated columns for gnuplot: threshold, then one seconds
/// column per algorithm, `NaN` where a cell has no value.
pub fn render_gnuplot(records: &[BenchRecord]) -> String {
    let algos = algorithms_in(records);
    let mut out = format!("# gamma {}\n", algos.join(" "));
    for g in gammas_in(records) {
        let _ = write!(out, "{g}");
        for a in &algos {
            match seconds_at(records, a, g) {
                Some(s) => {
                    let _ = write!(out, " {s:.6}");
                }
                None => out.push_str(" NaN"),
            }
        }
        out.push('\n');
    }
    out
}

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Line chart of mean seconds against threshold, one polyline per algorithm.
pub fn render_svg(records: &[BenchRecord]) -> String {
    let (width, height, margin) = (640.0, 400.0, 50.0);
    let gammas = gammas_in(records);
    let algos = algorithms_in(records);
    let gmin = gammas.iter().copied().fold(f64::INFINITY, f64::min);
    let gmax = gammas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let smax = records
        .iter()
        .filter_map(|r| r.seconds)
        .fold(0.0, f64::max)
        .max(1e-9);
    let gspan = if gmax > gmin { gmax - gmin } else { 1.0 };
    let x = |g: f64| margin + (g - gmin) / gspan * (width - 2.0 * margin);
    let y = |s: f64| height - margin - s / smax * (height - 2.0 * margin);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<path d="M{m} {t} L{m} {b} L{r} {b}" stroke="black" fill="none"/>"#,
        m = margin,
        t = margin,
        b = height - margin,
        r = width - margin
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">gamma ({gmin} to {gmax})</text>"#,
        width / 2.0,
        height - 15.0
    );
    let _ = writeln!(
        out,
        r#"<text x="15" y="{}" transform="rotate(-90 15 {})" text-anchor="middle">seconds (max {smax:.6})</text>"#,
        height / 2.0,
        height / 2.0
    );
    for (i, a) in algos.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let points: Vec<String> = gammas
            .iter()
            .filter_map(|&g| seconds_at(records, a, g).map(|s| format!("{:.2},{:.2}", x(g), y(s))))
            .collect();
        if !points.is_empty() {
            let _ = writeln!(
                out,
                r#"<polyline points="{}" stroke="{colour}" fill="none" stroke-width="1.5"/>"#,
                points.join(" ")
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" fill="{colour}">{a}</text>"#,
            width - margin - 80.0,
            margin + 15.0 * i as f64
        );
    }
    out.push_str("</svg>\n");
    out
}
