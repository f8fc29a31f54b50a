//! Command-line front end.
//!
//! Exit status: 0 success, 1 usage, 2 invalid input, 3 verification
//! mismatch, 4 oracle cap reached during verification.

use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tightpaths::bench::{self, BenchAlgorithm, BenchConfig, BenchGraph, GammaRange};
use tightpaths::closure::{
    basic_antecedents, mine_closures, parse_transactions, render_antecedents, to_log_weighted_dag,
    BasicAntecedentPair, Confidence, EqualSupportPolicy,
};
use tightpaths::graph::{
    parse_edge_list, parse_vertex_weighted, render_edge_list, render_vertex_weighted,
};
use tightpaths::oracle::DEFAULT_PATH_CAP;
use tightpaths::synth;
use tightpaths::tighten::tightening_phases;
use tightpaths::tightpair::{
    all_tight_pairs, tight_pairs_from_root_stacked, tight_pairs_from_root_weights,
};
use tightpaths::tightpath::{all_tight_paths, tight_paths_from_root, TightPathSet};
use tightpaths::verify::{self, Suite, VerifyInput};
use tightpaths::{Budget, Error, PairAlgorithm, TightPairSet, VertexWeightedDag, WeightedDigraph};

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_CAP: u8 = 4;

#[derive(Parser)]
#[command(name = "tightpaths", version, about = "Tight paths and tight pairs under a cost threshold")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Tight paths of an edge list (or of the graph derived from a .vwg dag).
    Paths {
        graph: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        gamma: f64,
        /// Only paths starting here.
        #[arg(long)]
        root: Option<String>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        tolerance: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Tight pairs of a vertex-weighted dag.
    Pairs {
        dag: PathBuf,
        #[arg(long, required_unless_present = "to_elist", allow_negative_numbers = true)]
        gamma: Option<f64>,
        #[arg(long, default_value = "weights")]
        algo: PairAlgorithm,
        #[arg(long)]
        root: Option<String>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        tolerance: f64,
        /// Print the derived edge-weighted graph as an edge list and stop.
        #[arg(long)]
        to_elist: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Tight pairs by relation tightening, optionally showing each phase.
    Tighten {
        dag: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        gamma: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        tolerance: f64,
        /// Print the relation after bounding, left and right tightening.
        #[arg(long)]
        debug: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Closed item sets of a transaction file.
    Mine {
        data: PathBuf,
        #[arg(long, default_value_t = 1)]
        minsupp: u64,
        #[arg(long, value_enum, default_value_t = Emit::Vwg)]
        emit: Emit,
        #[arg(long, value_enum, default_value_t = EqualSupport::Reject)]
        equal_support: EqualSupport,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Basic antecedents at a confidence threshold.
    Antecedents {
        data: PathBuf,
        /// Decimal such as 0.6, or a fraction such as 2/3.
        #[arg(long)]
        conf: String,
        #[arg(long, default_value_t = 1)]
        minsupp: u64,
        /// Compute through tight pairs of the log-scaled dag instead of
        /// integer supports.
        #[arg(long)]
        via_pairs: bool,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Threshold sweep timing, written as CSV.
    Bench {
        graph: PathBuf,
        #[arg(long)]
        gamma_range: GammaRange,
        /// Comma-separated: paths, tighten, stacked, weights.
        #[arg(long, value_delimiter = ',', default_value = "paths,tighten,stacked,weights")]
        algo: Vec<BenchAlgorithm>,
        #[arg(long, default_value_t = 5)]
        reps: u32,
        #[arg(long, default_value_t = 0)]
        warmup: u32,
        #[arg(long)]
        root: Option<String>,
        /// Graph identifier for the CSV; defaults to the file stem.
        #[arg(long)]
        graph_id: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write an SVG line chart.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Also write gnuplot-ready columns.
        #[arg(long)]
        gnuplot: Option<PathBuf>,
    },
    /// Compare every applicable algorithm with the brute-force oracle.
    Verify {
        graph: PathBuf,
        #[arg(
            long,
            conflicts_with = "gamma_range",
            required_unless_present = "gamma_range",
            allow_negative_numbers = true
        )]
        gamma: Option<f64>,
        #[arg(long)]
        gamma_range: Option<GammaRange>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        tolerance: f64,
        /// Give up on a threshold once the oracle has enumerated this many
        /// bounded paths.
        #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
        cap: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a synthetic graph.
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Loops through the hub (double-loop).
        #[arg(long, default_value_t = 2)]
        loops: usize,
        /// Inner layers (layered-lattice).
        #[arg(long, default_value_t = 4)]
        layers: usize,
        /// Vertices per layer (layered-lattice).
        #[arg(long, default_value_t = 3)]
        width: usize,
        /// Vertex count (random kinds).
        #[arg(long, default_value_t = 10)]
        vertices: usize,
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        /// Largest integer edge cost (random-digraph).
        #[arg(long, default_value_t = 3)]
        max_cost: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Vwg,
    Lattice,
}

#[derive(Clone, Copy, ValueEnum)]
enum EqualSupport {
    Reject,
    Contract,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    DoubleLoop,
    LayeredLattice,
    RandomDag,
    RandomDigraph,
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter(_) => EXIT_USAGE,
            Error::OracleCapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T = ()> = std::result::Result<T, Failure>;

enum Loaded {
    Digraph(WeightedDigraph),
    Dag(VertexWeightedDag),
}

fn read(path: &FsPath) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INVALID,
        message: format!("{}: {e}", path.display()),
    })
}

fn in_file(path: &FsPath, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

/// `.vwg` files are dags; anything else is an edge list.
fn load(path: &FsPath) -> CliResult<Loaded> {
    let text = read(path)?;
    if path.extension().is_some_and(|e| e == "vwg") {
        parse_vertex_weighted(&text).map(Loaded::Dag)
    } else {
        parse_edge_list(&text).map(Loaded::Digraph)
    }
    .map_err(|e| in_file(path, e))
}

fn load_dag(path: &FsPath) -> CliResult<VertexWeightedDag> {
    let text = read(path)?;
    parse_vertex_weighted(&text).map_err(|e| in_file(path, e))
}

fn emit(out: Option<&FsPath>, text: &str) -> CliResult {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure {
            code: EXIT_INVALID,
            message: format!("{}: {e}", p.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn budget(gamma: f64, tolerance: f64) -> CliResult<Budget> {
    Ok(Budget::new(gamma)?.with_tolerance(tolerance)?)
}

fn csv_line(fields: &[&str]) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(fields).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8")
}

fn render_paths(set: &TightPathSet, names: &[String], format: Format) -> String {
    match format {
        Format::Tsv => set.render(names),
        Format::Csv => {
            let mut out = csv_line(&["path", "cost"]);
            for p in set.iter() {
                out.push_str(&csv_line(&[&p.names(names).join(" "), &p.cost.to_string()]));
            }
            out
        }
    }
}

fn render_pairs(set: &TightPairSet, dag: &VertexWeightedDag, format: Format) -> String {
    match format {
        Format::Tsv => set.render(dag),
        Format::Csv => {
            let mut out = csv_line(&["first", "last"]);
            for (u, v) in set.sorted_by_weight(dag) {
                out.push_str(&csv_line(&[dag.name(u), dag.name(v)]));
            }
            out
        }
    }
}

fn antecedents_via_pairs(
    lat: &tightpaths::closure::ClosureLattice,
    conf: &Confidence,
    tolerance: f64,
) -> CliResult<Vec<BasicAntecedentPair>> {
    let log = to_log_weighted_dag(lat, EqualSupportPolicy::Reject)?;
    let pairs = all_tight_pairs(
        &log.dag,
        budget(conf.log_threshold(), tolerance)?,
        PairAlgorithm::Weights,
    );
    let mut out: Vec<BasicAntecedentPair> = pairs
        .iter()
        .map(|(u, v)| {
            let (a, b) = (log.members[u][0], log.members[v][0]);
            BasicAntecedentPair {
                antecedent: lat.set(a).clone(),
                consequent: lat.set(b).clone(),
                antecedent_support: lat.support(a),
                consequent_support: lat.support(b),
                confidence: lat.support(b) as f64 / lat.support(a) as f64,
            }
        })
        .collect();
    out.sort_by_key(|p| (lat.index_of(&p.antecedent), lat.index_of(&p.consequent)));
    Ok(out)
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Paths {
            graph,
            gamma,
            root,
            tolerance,
            output,
        } => {
            let g = match load(&graph)? {
                Loaded::Digraph(g) => g,
                Loaded::Dag(d) => d.to_edge_weighted(),
            };
            let b = budget(gamma, tolerance)?;
            let found = match root {
                Some(r) => tight_paths_from_root(&g, g.vertex(&r)?, b)?,
                None => all_tight_paths(&g, b),
            };
            emit(output.out.as_deref(), &render_paths(&found, g.names(), output.format))
        }
        Command::Pairs {
            dag,
            gamma,
            algo,
            root,
            tolerance,
            to_elist,
            output,
        } => {
            let d = load_dag(&dag)?;
            if to_elist {
                return emit(output.out.as_deref(), &render_edge_list(&d.to_edge_weighted()));
            }
            let b = budget(gamma.expect("clap requires gamma"), tolerance)?;
            let found = match root {
                None => all_tight_pairs(&d, b, algo),
                Some(r) => {
                    let r = d.vertex(&r)?;
                    match algo {
                        PairAlgorithm::Stacked => tight_pairs_from_root_stacked(&d, r, b)?,
                        PairAlgorithm::Weights => tight_pairs_from_root_weights(&d, r, b)?,
                        PairAlgorithm::Tighten => all_tight_pairs(&d, b, algo)
                            .iter()
                            .filter(|&(u, _)| u == r)
                            .collect(),
                    }
                }
            };
            emit(output.out.as_deref(), &render_pairs(&found, &d, output.format))
        }
        Command::Tighten {
            dag,
            gamma,
            tolerance,
            debug,
            output,
        } => {
            let d = load_dag(&dag)?;
            let phases = tightening_phases(&d.reachability_closure(), &d, budget(gamma, tolerance)?);
            let mut text = String::new();
            if debug {
                for (title, rel) in [
                    ("bounded", &phases.bounded),
                    ("left-tightened", &phases.left),
                    ("right-tightened", &phases.right),
                ] {
                    text.push_str(&format!("# {title}\n{}", rel.render_lists()));
                }
                text.push_str("# pairs\n");
            }
            let pairs: TightPairSet = phases.right.pairs().collect();
            text.push_str(&render_pairs(&pairs, &d, output.format));
            emit(output.out.as_deref(), &text)
        }
        Command::Mine {
            data,
            minsupp,
            emit: what,
            equal_support,
            out,
        } => {
            let ds = parse_transactions(&read(&data)?).map_err(|e| in_file(&data, e))?;
            let lat = mine_closures(&ds, minsupp)?;
            let text = match what {
                Emit::Lattice => lat.render(),
                Emit::Vwg => {
                    let policy = match equal_support {
                        EqualSupport::Reject => EqualSupportPolicy::Reject,
                        EqualSupport::Contract => EqualSupportPolicy::Contract,
                    };
                    render_vertex_weighted(&to_log_weighted_dag(&lat, policy)?.dag)
                }
            };
            emit(out.as_deref(), &text)
        }
        Command::Antecedents {
            data,
            conf,
            minsupp,
            via_pairs,
            tolerance,
            out,
        } => {
            let conf: Confidence = conf.parse()?;
            let ds = parse_transactions(&read(&data)?).map_err(|e| in_file(&data, e))?;
            let lat = mine_closures(&ds, minsupp)?;
            let found = if via_pairs {
                antecedents_via_pairs(&lat, &conf, tolerance)?
            } else {
                basic_antecedents(&lat, &conf)
            };
            emit(out.as_deref(), &render_antecedents(ds.items(), &found))
        }
        Command::Bench {
            graph,
            gamma_range,
            algo,
            reps,
            warmup,
            root,
            graph_id,
            out,
            svg,
            gnuplot,
        } => {
            let input = match load(&graph)? {
                Loaded::Digraph(g) => BenchGraph::Digraph(g),
                Loaded::Dag(d) => BenchGraph::Dag(d),
            };
            let config = BenchConfig {
                graph_id: graph_id.unwrap_or_else(|| {
                    graph
                        .file_stem()
                        .map_or_else(|| "graph".into(), |s| s.to_string_lossy().into_owned())
                }),
                algorithms: algo,
                gammas: gamma_range,
                reps,
                warmup,
                root,
            };
            let records = bench::run_bench(&input, &config)?;
            if let Some(p) = svg {
                emit(Some(&p), &bench::render_svg(&records))?;
            }
            if let Some(p) = gnuplot {
                emit(Some(&p), &bench::render_gnuplot(&records))?;
            }
            emit(out.as_deref(), &bench::to_csv_string(&records))
        }
        Command::Verify {
            graph,
            gamma,
            gamma_range,
            tolerance,
            cap,
            inject_fault,
            out,
        } => {
            let input = match load(&graph)? {
                Loaded::Digraph(g) => VerifyInput::Digraph(g),
                Loaded::Dag(d) => VerifyInput::Dag(d),
            };
            let gammas = match (gamma, gamma_range) {
                (Some(g), _) => vec![g],
                (None, Some(r)) => r.values(),
                (None, None) => unreachable!("clap requires one of them"),
            };
            let suite = if inject_fault { Suite::corrupted() } else { Suite::standard() };
            let report = verify::verify(&input, &gammas, tolerance, &suite, cap)?;
            emit(out.as_deref(), &report.render())?;
            if report.has_mismatch() {
                Err(Failure {
                    code: EXIT_MISMATCH,
                    message: "verification mismatch".into(),
                })
            } else if report.has_unverifiable() {
                Err(Failure {
                    code: EXIT_CAP,
                    message: format!("oracle cap {cap} reached; some thresholds unverified"),
                })
            } else {
                Ok(())
            }
        }
        Command::Gen {
            kind,
            seed,
            loops,
            layers,
            width,
            vertices,
            edge_prob,
            max_cost,
            out,
        } => {
            let mut rng = synth::seeded(seed);
            let text = match kind {
                Kind::DoubleLoop => render_edge_list(&synth::double_loop(loops)?),
                Kind::LayeredLattice => {
                    render_vertex_weighted(&synth::layered_lattice(layers, width, &mut rng)?)
                }
                Kind::RandomDag => {
                    render_vertex_weighted(&synth::random_dag(vertices, edge_prob, &mut rng)?)
                }
                Kind::RandomDigraph => render_edge_list(&synth::random_digraph(
                    vertices, edge_prob, max_cost, &mut rng,
                )?),
            };
            emit(out.as_deref(), &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
