//! Command-line front end. Exit codes: 0 success or pass, 1 not-arrows or a
//! failed check, 2 usage error, 3 guard or budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arrowing::{arrows, SearchConfig};
use crate::clique::clique_number;
use crate::construct::{bounds_report, build_gamma, witness, ArrowInstance, MAIN_HYPOTHESIS_NOTE};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPermutation};
use crate::io::certificate::{Certificate, SearchSettings};
use crate::io::{dimacs, graph6};
use crate::oracle;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "folkman",
    version,
    about = "Vertex Folkman witness graphs and arrowing certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SearchArgs {
    /// Single-threaded search; output is byte-identical across runs.
    #[arg(long)]
    deterministic: bool,
    /// Abort the search after this many nodes (exit code 3).
    #[arg(long, value_name = "NODES")]
    budget: Option<u64>,
    /// Worker threads for the parallel search (0 = all cores).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            deterministic: self.deterministic,
            node_budget: self.budget,
            worker_width: self.threads,
            ..SearchConfig::default()
        }
    }

    fn settings(&self, symmetry: Vec<String>) -> SearchSettings {
        SearchSettings {
            deterministic: self.deterministic,
            node_budget: self.budget,
            symmetry,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build Γ_p or the witness graph K_{m-p-2} + Γ_p; prints graph6 and labels.
    Construct {
        #[arg(
            long,
            value_name = "P",
            conflicts_with = "witness",
            required_unless_present = "witness"
        )]
        gamma: Option<usize>,
        #[arg(long, value_name = "A1,...,AR", value_delimiter = ',')]
        witness: Option<Vec<usize>>,
    },
    /// Clique number with a witness clique.
    Clique {
        /// graph6 string, file holding one, `gamma:P`, or `witness:A1,...,AR`
        graph: String,
    },
    /// Decide whether GRAPH arrows the tuple; prints a certificate.
    Arrows {
        graph: String,
        #[arg(long, value_name = "A1,...,AR", value_delimiter = ',', required = true)]
        tuple: Vec<usize>,
        /// Use the cyclic automorphism of a graph constructed in this invocation.
        #[arg(long)]
        sigma: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Known bounds on F(a_1,...,a_r; m-1) for the tuple.
    Bounds {
        #[arg(long, value_name = "A1,...,AR", value_delimiter = ',', required = true)]
        tuple: Vec<usize>,
    },
    /// Run a verification suite or replay a certificate.
    Verify {
        #[arg(
            long,
            value_enum,
            required_unless_present = "replay",
            conflicts_with = "replay"
        )]
        suite: Option<Suite>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_name = "A1,...,AR", value_delimiter = ',')]
        tuple: Option<Vec<usize>>,
        /// Largest path length for the `paths` suite.
        #[arg(long, default_value_t = 16)]
        k_max: usize,
        /// Re-validate a certificate file.
        #[arg(long, value_name = "FILE")]
        replay: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Write a graph in another format.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        graph: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Suite {
    Prop1,
    Paths,
    Lemma1,
    Lemmas23,
    Theorem1,
    Corollary1,
    Main,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Graph6,
    Dimacs,
}

/// A graph read from the command line, with its labeling and automorphism
/// when it was constructed here.
pub struct LoadedGraph {
    pub graph: Graph,
    pub labels: Option<Vec<String>>,
    pub sigma: Option<VertexPermutation>,
}

fn parse_tuple(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("bad tuple entry {t:?}")))
        })
        .collect()
}

/// Resolves `gamma:P`, `witness:A1,...,AR`, a file path, or a graph6 string.
pub fn load_graph(arg: &str) -> Result<LoadedGraph> {
    if let Some(p) = arg.strip_prefix("gamma:") {
        let p = p
            .parse()
            .map_err(|_| Error::invalid(format!("bad p in {arg:?}")))?;
        let gamma = build_gamma(p)?;
        return Ok(LoadedGraph {
            labels: Some(gamma.labels()),
            sigma: Some(gamma.sigma.clone()),
            graph: gamma.graph,
        });
    }
    if let Some(t) = arg.strip_prefix("witness:") {
        let inst = ArrowInstance::new(parse_tuple(t)?, None)?;
        let w = witness(&inst)?;
        return Ok(LoadedGraph {
            labels: Some(w.labels()),
            sigma: Some(w.sigma()),
            graph: w.graph,
        });
    }
    let path = Path::new(arg);
    let text = if path.is_file() {
        let content = std::fs::read_to_string(path)?;
        content
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_owned)
            .ok_or_else(|| Error::parse(0, format!("no graph6 line in {arg}")))?
    } else {
        arg.to_owned()
    };
    Ok(LoadedGraph {
        graph: graph6::decode(&text)?,
        labels: None,
        sigma: None,
    })
}

fn exit_code(e: &Error) -> i32 {
    if e.is_resource_limit() {
        EXIT_LIMIT
    } else {
        EXIT_USAGE
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Construct {
            gamma,
            witness: tuple,
        } => {
            let (loaded, header) = match (gamma, tuple) {
                (Some(p), _) => (load_graph(&format!("gamma:{p}"))?, format!("# Γ_{p}")),
                (None, Some(t)) => {
                    let inst = ArrowInstance::new(t, None)?;
                    let w = witness(&inst)?;
                    let header = format!(
                        "# K_{} + Γ_{}; tuple={:?} m={} p={}",
                        w.clique_block, inst.p, inst.tuple, inst.m, inst.p
                    );
                    let loaded = LoadedGraph {
                        labels: Some(w.labels()),
                        sigma: Some(w.sigma()),
                        graph: w.graph,
                    };
                    (loaded, header)
                }
                (None, None) => return Err(Error::invalid("construct needs --gamma or --witness")),
            };
            let g = &loaded.graph;
            let mut text = graph6::encode(g)? + "\n";
            text += &format!("{header}\n# n={} edges={}\n", g.n(), g.edge_count());
            if let Some(labels) = &loaded.labels {
                text += &format!("# labels: {}\n", labels.join(" "));
            }
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Clique { graph } => {
            let loaded = load_graph(&graph)?;
            let result = clique_number(&loaded.graph);
            let cert = Certificate::for_clique(&loaded.graph, loaded.labels, &result)?;
            emit(out, &cert.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Arrows {
            graph,
            tuple,
            sigma,
            search,
        } => {
            let loaded = load_graph(&graph)?;
            let inst = ArrowInstance::new(tuple, None)?;
            let mut cfg = search.config();
            let mut symmetry = Vec::new();
            if sigma {
                let Some(s) = loaded.sigma.clone() else {
                    return Err(Error::invalid(
                        "--sigma needs a graph constructed in this invocation (gamma:P or witness:...)",
                    ));
                };
                cfg.symmetry_generators.push(s);
                symmetry.push("sigma".to_string());
            }
            let result = arrows(&loaded.graph, &inst, &cfg)?;
            let mut cert = Certificate::for_arrowing(
                &loaded.graph,
                loaded.labels,
                &inst,
                &result,
                search.settings(symmetry),
            )?;
            if graph.starts_with("witness:") {
                cert.notes.push(MAIN_HYPOTHESIS_NOTE.into());
            }
            emit(out, &cert.to_json())?;
            Ok(if result.arrows() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Bounds { tuple } => {
            let inst = ArrowInstance::new(tuple, None)?;
            let report = bounds_report(&inst);
            emit(
                out,
                &(serde_json::to_string_pretty(&report).expect("serializable") + "\n"),
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            p,
            tuple,
            k_max,
            replay,
            search,
        } => {
            if let Some(path) = replay {
                let text = std::fs::read_to_string(&path)?;
                let cert = Certificate::from_json(&text)?;
                return match cert.replay(&search.config()) {
                    Ok(()) => {
                        emit(
                            out,
                            &format!(
                                "accepted: {:?} certificate {}\n",
                                cert.verdict,
                                path.display()
                            ),
                        )?;
                        Ok(EXIT_OK)
                    }
                    Err(e @ Error::Certificate(_)) => {
                        let _ = writeln!(err, "rejected: {e}");
                        Ok(EXIT_NEGATIVE)
                    }
                    Err(e) => Err(e),
                };
            }
            let suite = suite.ok_or_else(|| Error::invalid("verify needs --suite or --replay"))?;
            let need_p = || p.ok_or_else(|| Error::invalid("this suite needs --p"));
            let cfg = search.config();
            let mut graph_meta = None;
            let reports = match suite {
                Suite::Prop1 => match &tuple {
                    Some(t) => vec![oracle::verify_prop1(t)?],
                    None => vec![oracle::verify_prop1_sweep(12, 4)],
                },
                Suite::Paths => vec![oracle::verify_path_complement(k_max)?],
                Suite::Lemma1 => vec![oracle::verify_lemma1(need_p()?)?],
                Suite::Lemmas23 => vec![oracle::verify_lemmas_2_3(need_p()?)?],
                Suite::Theorem1 => oracle::verify_theorem1(need_p()?, &cfg)?,
                Suite::Corollary1 => vec![oracle::verify_corollary1(need_p()?)?],
                Suite::Main => {
                    let t = tuple.ok_or_else(|| Error::invalid("the main suite needs --tuple"))?;
                    let inst = ArrowInstance::new(t, None)?;
                    let report = oracle::verify_main(&inst, &cfg)?;
                    let w = witness(&inst)?;
                    graph_meta = Some((graph6::encode(&w.graph)?, w.labels(), inst));
                    vec![report]
                }
            };
            let mut cert = Certificate::for_reports(reports);
            cert.search = Some(search.settings(Vec::new()));
            if let Some((g6, labels, inst)) = graph_meta {
                cert.graph_g6 = Some(g6);
                cert.labels = Some(labels);
                cert.instance = Some(inst);
            }
            emit(out, &cert.to_json())?;
            Ok(if cert.all_passed() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Export { format, graph } => {
            let loaded = load_graph(&graph)?;
            let text = match format {
                Format::Graph6 => graph6::encode(&loaded.graph)? + "\n",
                Format::Dimacs => dimacs::export_col(&loaded.graph),
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
    }
}
