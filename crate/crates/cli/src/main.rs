//! `reslat`: validate, inspect and enumerate finite residuated lattices.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use reslat::canon::are_isomorphic;
use reslat::enumerate::{census, census_size, AlgebraClass, CensusOptions, CensusRow, ClassCounts};
use reslat::filters::{all_filters, idempotent_generator};
use reslat::graph::{
    comaximal_filter_graph, graph_isomorphic, invariants, invariants_with_partition, maximal_partition,
    nonzero_zero_divisor_graph, shape_name_of_form, vertex_name, zero_divisor_graph, LabeledGraph,
};
use reslat::io::{export_dot, parse_algebra, write_catalog};
use reslat::ResiduatedLattice;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "reslat",
    version,
    about = "Finite residuated lattices, their filters and comaximal filter graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Comaximal,
    Zerodiv,
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra file; exit 1 with every violation if invalid.
    Validate { file: PathBuf },
    /// Print the class flags (MTL, BL, Gödel, MV, Heyting, ...).
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List all filters with maximal/radical/prime markers and generators.
    Filters { file: PathBuf },
    /// Print a graph of the algebra, optionally as DOT.
    Graph {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: GraphKind,
        /// Drop the vertex 0 from the zero-divisor graph.
        #[arg(long)]
        nonzero_only: bool,
        /// Write DOT to this path (`-` for standard output).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Exact graph invariants as JSON.
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long)]
        nonzero_only: bool,
    },
    /// Decide isomorphism of two algebras, or of their comaximal filter
    /// graphs with --graphs. Exit 1 when not isomorphic.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        graphs: bool,
    },
    /// Enumerate all algebras of one size up to isomorphism.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value = "all")]
        class: AlgebraClass,
        #[arg(long, env = "RESLAT_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Write JSON-lines records (`-` for standard output).
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Suppress progress lines on standard error.
        #[arg(long, short)]
        quiet: bool,
    },
    /// Class counts, non-null graph counts and graph shapes for sizes 1..=max.
    Census {
        #[arg(long)]
        max: usize,
        #[arg(long, env = "RESLAT_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, short)]
        quiet: bool,
    },
}

/// Failure modes that map to distinct exit codes.
enum Failure {
    Negative(String),
    Usage(String),
    Budget,
}

fn load(path: &Path) -> Result<std::result::Result<ResiduatedLattice, Failure>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Ok(Err(Failure::Usage(format!("cannot read {}: {e}", path.display())))),
    };
    Ok(parse_algebra(&text).map_err(|e| {
        let mut msg = format!("{}: invalid algebra", path.display());
        for m in e.messages() {
            msg.push_str("\n  ");
            msg.push_str(&m);
        }
        Failure::Negative(msg)
    }))
}

macro_rules! load_or_fail {
    ($path:expr) => {
        match load($path)? {
            Ok(a) => a,
            Err(f) => return Ok(Err(f)),
        }
    };
}

fn build_graph(a: &ResiduatedLattice, kind: GraphKind, nonzero_only: bool) -> LabeledGraph {
    match kind {
        GraphKind::Comaximal => comaximal_filter_graph(a, &all_filters(a)),
        GraphKind::Zerodiv if nonzero_only => nonzero_zero_divisor_graph(a),
        GraphKind::Zerodiv => zero_divisor_graph(a),
    }
}

fn budget(seconds: Option<f64>) -> Result<Option<Duration>> {
    seconds
        .map(|s| Duration::try_from_secs_f64(s).context("budget must be a nonnegative number of seconds"))
        .transpose()
}

fn write_out(path: &Path, text: &str) -> Result<()> {
    if path == Path::new("-") {
        io::stdout().write_all(text.as_bytes())?;
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn open_out(path: &Path) -> Result<Box<dyn Write>> {
    Ok(if path == Path::new("-") {
        Box::new(io::stdout().lock())
    } else {
        Box::new(io::BufWriter::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        ))
    })
}

fn run(cli: Cli) -> Result<std::result::Result<(), Failure>> {
    match cli.command {
        Command::Validate { file } => {
            let a = load_or_fail!(&file);
            println!("valid: {} elements", a.size());
        }
        Command::Classify { file, json } => {
            let a = load_or_fail!(&file);
            let flags = a.classify();
            if json {
                println!("{}", serde_json::to_string_pretty(&flags)?);
            } else {
                let value = serde_json::to_value(flags)?;
                for (k, v) in value.as_object().expect("flags serialize as a map") {
                    println!("{k}: {v}");
                }
            }
        }
        Command::Filters { file } => {
            let a = load_or_fail!(&file);
            let fl = all_filters(&a);
            for (i, f) in fl.all.iter().enumerate() {
                let mut marks = Vec::new();
                if fl.maximal.contains(&i) {
                    marks.push("maximal");
                }
                if i == fl.radical {
                    marks.push("radical");
                }
                if fl.primes.contains(&i) {
                    marks.push("prime");
                }
                let gen = a.name(idempotent_generator(&a, f));
                let marks = if marks.is_empty() {
                    String::new()
                } else {
                    format!(" [{}]", marks.join(", "))
                };
                println!("F{} = {} = <{gen}>{marks}", i + 1, f.display(a.names()));
            }
            let maximal: Vec<String> = fl.maximal.iter().map(|i| format!("F{}", i + 1)).collect();
            println!("maximal: {}", maximal.join(" "));
            println!("radical: F{} = {}", fl.radical + 1, fl.radical().display(a.names()));
        }
        Command::Graph {
            file,
            kind,
            nonzero_only,
            dot,
        } => {
            let a = load_or_fail!(&file);
            let g = build_graph(&a, kind, nonzero_only);
            match dot {
                Some(path) => write_out(&path, &export_dot(&g, Some(&a)))?,
                None => {
                    println!("vertices: {}", g.vertex_count());
                    for v in 0..g.vertex_count() {
                        println!("  {v}: {}", vertex_name(Some(&a), g.label(v)));
                    }
                    println!("edges: {}", g.edge_count());
                    for (u, v) in g.edges() {
                        println!("  {u} -- {v}");
                    }
                }
            }
        }
        Command::Invariants {
            file,
            kind,
            nonzero_only,
        } => {
            let a = load_or_fail!(&file);
            let inv = match kind {
                GraphKind::Comaximal => {
                    let fl = all_filters(&a);
                    let g = comaximal_filter_graph(&a, &fl);
                    invariants_with_partition(&g, &maximal_partition(&fl, &g), fl.maximal.len())
                }
                GraphKind::Zerodiv => invariants(&build_graph(&a, kind, nonzero_only)),
            };
            println!("{}", serde_json::to_string_pretty(&inv)?);
        }
        Command::Iso { first, second, graphs } => {
            let a = load_or_fail!(&first);
            let b = load_or_fail!(&second);
            if graphs {
                let ga = build_graph(&a, GraphKind::Comaximal, false);
                let gb = build_graph(&b, GraphKind::Comaximal, false);
                let Some(map) = graph_isomorphic(&ga, &gb) else {
                    return Ok(Err(Failure::Negative(
                        "comaximal filter graphs are not isomorphic".into(),
                    )));
                };
                println!("comaximal filter graphs are isomorphic");
                for (v, &w) in map.iter().enumerate() {
                    println!(
                        "  {} -> {}",
                        vertex_name(Some(&a), ga.label(v)),
                        vertex_name(Some(&b), gb.label(w))
                    );
                }
            } else {
                let Some(map) = are_isomorphic(&a, &b) else {
                    return Ok(Err(Failure::Negative("algebras are not isomorphic".into())));
                };
                println!("algebras are isomorphic");
                for (x, &y) in map.iter().enumerate() {
                    println!("  {} -> {}", a.name(x), b.name(y));
                }
            }
        }
        Command::Enumerate {
            size,
            class,
            jobs,
            catalog,
            budget: secs,
            quiet,
        } => {
            if size == 0 || size > reslat::elements::MAX_SIZE {
                return Ok(Err(Failure::Usage(format!(
                    "size must be between 1 and {}",
                    reslat::elements::MAX_SIZE
                ))));
            }
            let opts = CensusOptions {
                jobs,
                budget: budget(secs)?,
                progress: !quiet,
            };
            let deadline = opts.budget.map(|b| std::time::Instant::now() + b);
            let Some(result) = census_size(size, &opts, deadline) else {
                println!("size {size}: skipped (budget exceeded)");
                return Ok(Err(Failure::Budget));
            };
            let chosen: Vec<_> = result.records.iter().filter(|r| class.contains(&r.flags)).collect();
            println!("size {size}, class {class}: {} algebras", chosen.len());
            if let Some(path) = catalog {
                write_catalog(open_out(&path)?, chosen)?;
            }
        }
        Command::Census {
            max,
            jobs,
            catalog,
            budget: secs,
            quiet,
        } => {
            if max == 0 || max > reslat::elements::MAX_SIZE {
                return Ok(Err(Failure::Usage(format!(
                    "max must be between 1 and {}",
                    reslat::elements::MAX_SIZE
                ))));
            }
            let opts = CensusOptions {
                jobs,
                budget: budget(secs)?,
                progress: !quiet,
            };
            let result = census(max, &opts);
            print_census(&result.rows().cloned().collect::<Vec<_>>(), &result.skipped);
            if let Some(path) = catalog {
                write_catalog(open_out(&path)?, result.records())?;
            }
            if result.budget_exceeded() {
                return Ok(Err(Failure::Budget));
            }
        }
    }
    Ok(Ok(()))
}

const TABLE_CLASSES: [AlgebraClass; 6] = [
    AlgebraClass::All,
    AlgebraClass::Mtl,
    AlgebraClass::Bl,
    AlgebraClass::Heyting,
    AlgebraClass::Godel,
    AlgebraClass::Mv,
];

fn print_counts(title: &str, rows: &[CensusRow], skipped: &[usize], pick: impl Fn(&CensusRow) -> ClassCounts) {
    println!("{title}");
    print!("{:>8}", "size");
    for c in TABLE_CLASSES {
        print!("{:>9}", c.name());
    }
    println!();
    for row in rows {
        let counts = pick(row);
        print!("{:>8}", row.size);
        for c in TABLE_CLASSES {
            print!("{:>9}", counts.get(c));
        }
        println!();
    }
    for n in skipped {
        println!("{n:>8}  skipped (budget exceeded)");
    }
}

fn print_census(rows: &[CensusRow], skipped: &[usize]) {
    print_counts("algebras", rows, skipped, |r| r.counts);
    println!();
    print_counts("non-null comaximal filter graphs", rows, skipped, |r| r.nonnull);
    println!();
    println!("graph shapes");
    for row in rows {
        for class in AlgebraClass::ALL {
            let shapes = row.shapes(class);
            if shapes.is_empty() {
                continue;
            }
            let mut named: Vec<(String, usize)> = shapes
                .iter()
                .map(|(form, &k)| (shape_name_of_form(&hex::decode(form).expect("hex form")), k))
                .collect();
            named.sort();
            let parts: Vec<String> = named.iter().map(|(name, k)| format!("{name}:{k}")).collect();
            println!("{:>8} {:<14} {}", row.size, class.name(), parts.join(" "));
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failure::Negative(msg))) => {
            // a closed pipe is not worth a panic
            let _ = writeln!(io::stdout(), "{msg}");
            ExitCode::from(EXIT_NEGATIVE)
        }
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Ok(Err(Failure::Budget)) => {
            eprintln!("budget exceeded");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
