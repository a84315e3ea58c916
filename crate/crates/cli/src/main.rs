mod expr;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use weylgraph::format::{write_dot, write_edge_list};
use weylgraph::iso::{are_isomorphic, automorphism_group};
use weylgraph::recognition::{classify_f4_candidate, is_cotriangular, local_profile, LocalTarget};

use expr::{eval, parse_expr, Value};

/// Weyl graphs, their comparison families and local recognition checks.
///
/// Graphs are given as expressions, e.g. `weyl:F4`, `sp:3`, `kneser:7,2`,
/// `quadric:4,+`, `twist(weyl:F4)`, `f4build(product(cycle:4,cycle:4,cycle:4))`
/// or a path to an edge-list file.
#[derive(Parser)]
#[command(name = "weylgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Kv,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph and write it as an edge list or DOT.
    Build {
        expr: String,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run local homogeneity, locally-like and cotriangularity checks.
    /// With no flags, `--local` is assumed.
    Check {
        expr: String,
        #[arg(long)]
        local: bool,
        /// Reference graph whose local graphs the input should have.
        #[arg(long, value_name = "EXPR")]
        like: Option<String>,
        #[arg(long)]
        cotriangular: bool,
    },
    /// Decide whether two graphs are isomorphic (color-preserving).
    Iso { a: String, b: String },
    /// Automorphism group: order, orbit sizes and generators.
    Aut { expr: String },
    /// Classify a connected graph locally like W(F4).
    Classify {
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Run the full verification suite and print a key = value report.
    Report {
        /// Seed for the randomized relabeling self-tests.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn load(src: &str) -> Result<Value> {
    let e = parse_expr(src).with_context(|| format!("in expression {src:?}"))?;
    eval(&e).with_context(|| format!("evaluating {src:?}"))
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {{
        $out.push_str(&format!($($arg)*));
        $out.push('\n');
    }};
}

fn emit(text: &str, output: Option<&PathBuf>, out: &mut String) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            out.push_str(text);
            Ok(())
        }
    }
}

/// Ok(true) when every requested check passed. Standard output is collected
/// in `out`.
fn run(cli: Cli, out: &mut String) -> Result<bool> {
    match cli.command {
        Command::Build { expr, format, output } => {
            let v = load(&expr)?;
            let text = match format {
                Format::Edges => write_edge_list(&v.graph, &v.strong),
                Format::Dot => write_dot(&v.graph, &v.strong),
            };
            emit(&text, output.as_ref(), out)?;
            Ok(true)
        }
        Command::Check {
            expr,
            local,
            like,
            cotriangular,
        } => {
            let g = load(&expr)?.graph;
            let mut ok = true;
            if local || (like.is_none() && !cotriangular) {
                let p = local_profile(&g)?;
                match p.witness {
                    None => say!(out, "locally homogeneous: yes"),
                    Some((a, b)) => {
                        ok = false;
                        say!(out, "locally homogeneous: no (vertices {a} and {b} have non-isomorphic local graphs)");
                    }
                }
            }
            if let Some(reference) = like {
                let h = load(&reference)?.graph;
                let c = LocalTarget::of(&h)?.check(&g)?;
                match c.witness {
                    None => say!(out, "locally like {reference}: yes"),
                    Some(v) => {
                        ok = false;
                        say!(out, "locally like {reference}: no (local graph at vertex {v} differs)");
                    }
                }
            }
            if cotriangular {
                match is_cotriangular(&g).witness {
                    None => say!(out, "cotriangular: yes"),
                    Some((x, y)) => {
                        ok = false;
                        say!(out, "cotriangular: no (non-adjacent pair {x}, {y} lies in no cotriangle)");
                    }
                }
            }
            Ok(ok)
        }
        Command::Iso { a, b } => {
            let (g, h) = (load(&a)?.graph, load(&b)?.graph);
            match are_isomorphic(&g, &h)? {
                Some(map) => {
                    say!(out, "isomorphic");
                    say!(out, "map: {}", map.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
                    Ok(true)
                }
                None => {
                    say!(out, "not isomorphic");
                    Ok(false)
                }
            }
        }
        Command::Aut { expr } => {
            let aut = automorphism_group(&load(&expr)?.graph)?;
            say!(out, "order: {}", aut.order);
            let sizes: Vec<String> = aut.orbit_sizes().iter().map(usize::to_string).collect();
            say!(out, "orbits: {}", sizes.join(" "));
            say!(out, "generators: {}", aut.generators.len());
            for p in &aut.generators {
                say!(out, "  {p}");
            }
            Ok(true)
        }
        Command::Classify { expr, format } => {
            let report = classify_f4_candidate(&load(&expr)?.graph)?;
            match format {
                ReportFormat::Text => say!(out, "{report}"),
                ReportFormat::Kv => out.push_str(&report.key_values("")),
            }
            Ok(true)
        }
        Command::Report { seed, output } => {
            let r = report::run(seed)?;
            emit(&r.render(), output.as_ref(), out)?;
            for f in r.failures() {
                eprintln!("failed: {f}");
            }
            Ok(r.passed())
        }
    }
}

fn main() -> ExitCode {
    let mut out = String::new();
    let status = run(Cli::parse(), &mut out);
    // a closed pipe on the reader's side is not an error
    let _ = std::io::stdout().write_all(out.as_bytes());
    match status {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
