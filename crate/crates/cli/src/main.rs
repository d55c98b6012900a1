//! `rw`: build, search and verify induced monochromatic bipartite copies.
//!
//! Exit codes: 0 found or verified, 1 absent or rejected, 2 budget exceeded,
//! 3 bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bipartite_ramsey::constructions::{complete_bipartite, embed_into_set_bipartite, set_bipartite};
use bipartite_ramsey::dot::export_dot;
use bipartite_ramsey::format::{
    parse_coloring, parse_graph, parse_homogeneous, parse_subset_coloring, parse_witness, write_coloring,
    write_graph, write_homogeneous, write_subset_coloring, write_witness, HostSpec,
};
use bipartite_ramsey::{
    derive_coloring, extract_induced, extract_monochromatic_complete, find_homogeneous_set,
    find_induced_mono_pattern, ramsey_number_exact, required_parameters, verify_witness, BipartiteGraph, Budget,
    Color, DerivedColor, EdgeColoring, Error, RightLabels,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "rw", version, about = "Induced monochromatic copies in two-colored B_{n,k}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// K_{n,k}
    Complete,
    /// B_{n,k}
    Setgraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorArg {
    #[value(name = "R", alias = "red")]
    Red,
    #[value(name = "B", alias = "blue")]
    Blue,
}

impl From<ColorArg> for Color {
    fn from(c: ColorArg) -> Self {
        match c {
            ColorArg::Red => Color::Red,
            ColorArg::Blue => Color::Blue,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print K_{n,k} or B_{n,k} in the graph format.
    Build {
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Also write a constant coloring of this color.
        #[arg(long, requires = "coloring_out")]
        color: Option<ColorArg>,
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Embed a pattern as an induced subgraph of B_{2c+d, c+1}.
    Embed { pattern: PathBuf },
    /// Monochromatic K_{a,b} in a two-colored K_{n,k}.
    ExtractComplete {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Derived coloring of the (2b-1)-subsets from a coloring of B_{n,2b-1}.
    DeriveColoring {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        b: usize,
    },
    /// Lexicographically first homogeneous s-set of a subset coloring.
    FindHomogeneous {
        subset_coloring: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Induced monochromatic B_{a,b} from a homogeneous set.
    ExtractInduced {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        homogeneous: PathBuf,
    },
    /// Induced monochromatic copy of a pattern in a colored B_{n,2c+1}.
    FindInduced {
        pattern: PathBuf,
        coloring: PathBuf,
        /// Host graph file.
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        host: Option<PathBuf>,
        /// Use B_{n,2c+1} as the host.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check a witness document.
    Verify {
        witness: PathBuf,
        /// Host graph; defaults to the document's host line.
        #[arg(long)]
        host: Option<PathBuf>,
        /// Coloring of the host; needed to check the claimed color.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Exact R_{arity,palette}(size) by exhaustive enumeration.
    RamseyNumber {
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        palette: u64,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        max_n: usize,
    },
    /// Constants the construction needs for a pattern.
    Params { pattern: PathBuf },
    /// Graphviz rendering of a graph.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

enum Outcome {
    Found,
    Absent,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> Result<BipartiteGraph> {
    parse_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_coloring(path: &Path, graph: &BipartiteGraph) -> Result<EdgeColoring> {
    parse_coloring(&read(path)?, graph).with_context(|| format!("parsing {}", path.display()))
}

fn host_spec(graph: &BipartiteGraph) -> Option<HostSpec> {
    if let Some(k) = graph.set_graph_arity() {
        Some(HostSpec::SetGraph { n: graph.left_count(), k })
    } else if graph.is_complete() && matches!(graph.labels(), RightLabels::Opaque(_)) {
        Some(HostSpec::Complete {
            n: graph.left_count(),
            k: graph.right_count(),
        })
    } else {
        None
    }
}

fn run(command: Command) -> Result<Outcome> {
    let budget = Budget::from_env()?;
    match command {
        Command::Build {
            kind,
            n,
            k,
            color,
            coloring_out,
        } => {
            let g = match kind {
                Kind::Complete => complete_bipartite(n, k)?,
                Kind::Setgraph => set_bipartite(n, k)?,
            };
            if let (Some(color), Some(path)) = (color, coloring_out) {
                let c = EdgeColoring::constant(&g, color.into());
                fs::write(&path, write_coloring(&g, &c)).with_context(|| format!("writing {}", path.display()))?;
            }
            print!("{}", write_graph(&g));
        }
        Command::Embed { pattern } => {
            let e = embed_into_set_bipartite(&load_graph(&pattern)?)?;
            eprintln!("embedded in B_{{{},{}}}", e.a, e.b);
            print!("{}", write_witness(&e.witness, Some(HostSpec::SetGraph { n: e.a, k: e.b })));
        }
        Command::ExtractComplete { graph, coloring, a, b } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring, &g)?;
            let w = extract_monochromatic_complete(&g, &c, a, b)?;
            print!("{}", write_witness(&w, host_spec(&g)));
        }
        Command::DeriveColoring { graph, coloring, b } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring, &g)?;
            print!("{}", write_subset_coloring(&derive_coloring(&g, &c, b)?));
        }
        Command::FindHomogeneous { subset_coloring, s } => {
            let sc = parse_subset_coloring(&read(&subset_coloring)?)
                .with_context(|| format!("parsing {}", subset_coloring.display()))?;
            match find_homogeneous_set(&sc, s, budget)? {
                Some(h) => print!("{}", write_homogeneous(&h)),
                None => {
                    println!("no homogeneous {s}-set in [{}]", sc.n());
                    return Ok(Outcome::Absent);
                }
            }
        }
        Command::ExtractInduced {
            graph,
            coloring,
            a,
            b,
            homogeneous,
        } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring, &g)?;
            let h = parse_homogeneous(&read(&homogeneous)?)
                .with_context(|| format!("parsing {}", homogeneous.display()))?;
            let derived = match h.value {
                Some(v) => DerivedColor::from_index(v, b)
                    .with_context(|| format!("value {v} is not a derived color for b = {b}"))?,
                None => {
                    if b == 0 || h.set.len() < 2 * b - 1 {
                        bail!("homogeneous set needs at least 2b - 1 elements");
                    }
                    let sc = derive_coloring(&g, &c, b)?;
                    let first = h.set.iter().take(2 * b - 1).collect();
                    DerivedColor::from_index(sc.value(first), b).expect("derived value")
                }
            };
            let w = extract_induced(h.set, derived, a, b, &g, &c)?;
            print!("{}", write_witness(&w, host_spec(&g)));
        }
        Command::FindInduced {
            pattern,
            coloring,
            host,
            n,
        } => {
            let p = load_graph(&pattern)?;
            let g = match (host, n) {
                (Some(path), _) => load_graph(&path)?,
                (None, Some(n)) => set_bipartite(n, 2 * p.left_count() + 1)?,
                (None, None) => unreachable!("clap requires --host or --n"),
            };
            let c = load_coloring(&coloring, &g)?;
            let params = required_parameters(&p)?;
            match find_induced_mono_pattern(&p, &g, &c, budget)? {
                Some(w) => print!("{}", write_witness(&w, host_spec(&g))),
                None => {
                    println!(
                        "no homogeneous {}-set in [{}]; a copy is guaranteed once n >= {}",
                        params.s,
                        g.left_count(),
                        params.n_formula
                    );
                    return Ok(Outcome::Absent);
                }
            }
        }
        Command::Verify { witness, host, coloring } => {
            let doc = parse_witness(&read(&witness)?).with_context(|| format!("parsing {}", witness.display()))?;
            let g = match (host, doc.host) {
                (Some(path), _) => load_graph(&path)?,
                (None, Some(declared)) => declared.build()?,
                (None, None) => bail!("no host: pass --host or add a host line to the witness"),
            };
            let c = coloring.map(|path| load_coloring(&path, &g)).transpose()?;
            let w = doc.resolve(&g)?;
            if verify_witness(&g, c.as_ref(), &w)? {
                println!("valid");
            } else {
                println!("invalid");
                return Ok(Outcome::Absent);
            }
        }
        Command::RamseyNumber {
            arity,
            palette,
            size,
            max_n,
        } => {
            let outcome = ramsey_number_exact(arity, palette, size, max_n, budget)?;
            if let Some(lb) = &outcome.lower_bound {
                eprintln!("coloring of [{}] with no homogeneous {size}-set:", lb.n());
                eprint!("{}", write_subset_coloring(lb));
            }
            match outcome.value {
                Some(n) => println!("{n}"),
                None => {
                    println!("R_{{{arity},{palette}}}({size}) > {max_n}");
                    return Ok(Outcome::Absent);
                }
            }
        }
        Command::Params { pattern } => {
            let p = required_parameters(&load_graph(&pattern)?)?;
            println!("c = {}", p.c);
            println!("d = {}", p.d);
            println!("a = {}", p.a);
            println!("b = {}", p.b);
            println!("k = {}", p.k);
            println!("s = {}", p.s);
            println!("palette = {}", p.palette);
            println!("n = {}", p.n_formula);
        }
        Command::Dot {
            graph,
            coloring,
            witness,
        } => {
            let g = load_graph(&graph)?;
            let c = coloring.map(|path| load_coloring(&path, &g)).transpose()?;
            let w = match witness {
                Some(path) => Some(
                    parse_witness(&read(&path)?)
                        .with_context(|| format!("parsing {}", path.display()))?
                        .resolve(&g)?,
                ),
                None => None,
            };
            print!("{}", export_dot(&g, c.as_ref(), w.as_ref())?);
        }
    }
    Ok(Outcome::Found)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(Outcome::Found) => ExitCode::SUCCESS,
        Ok(Outcome::Absent) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e.chain().any(|c| c.downcast_ref::<Error>().is_some_and(Error::is_budget));
            ExitCode::from(if budget { 2 } else { 3 })
        }
    }
}
