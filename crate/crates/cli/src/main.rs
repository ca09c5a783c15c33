//! `eulergram` command-line tool.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports a failing
//! check, 2 on usage or parse errors.

mod render;

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eulergram::oracle::{self, PlaneTree};
use eulergram::symexp;
use eulergram::verify::{self, Suite, VerifyConfig};
use eulergram::{load_grammar_file, Grammar, Preset};

use render::Out;

#[derive(Parser)]
#[command(
    name = "eulergram",
    version,
    about = "Grammatical calculus for Eulerian-type polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a grammar's derivation to an expression repeatedly.
    Derive(DeriveArgs),
    /// Eulerian polynomial A_n(x,y).
    Eulerian(TableArgs),
    /// Second-order Eulerian polynomial C_n(x,y,z).
    SecondOrder(TableArgs),
    /// Andre polynomial E_n(x,y).
    Andre(TableArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Enumerate increasing trees with bounded out-degree.
    Trees(TreesArgs),
}

#[derive(Args)]
struct DeriveArgs {
    /// Preset name or path to a grammar file.
    #[arg(long)]
    grammar: String,
    #[arg(long, allow_hyphen_values = true)]
    start: String,
    #[arg(long, default_value_t = 1)]
    steps: u32,
    /// Require every right-hand-side identifier of a grammar file to have a rule.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value_t = Out::Text)]
    out: Out,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expand {
    None,
    Gamma,
    Elementary,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_enum, default_value_t = Expand::None)]
    expand: Expand,
    #[arg(long, value_enum, default_value_t = Out::Text)]
    out: Out,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    max_n: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random pairs per preset grammar in the leibniz suite.
    #[arg(long, default_value_t = 100)]
    pairs: usize,
    /// Run enumerating suites past their size limits.
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value_t = Out::Text)]
    out: Out,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountBy {
    Leaves,
    Profile,
    None,
}

#[derive(Args)]
struct TreesArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    max_degree: u32,
    /// Order children (plane trees); otherwise children are unordered.
    #[arg(long)]
    plane: bool,
    #[arg(long, value_enum, default_value_t = CountBy::None)]
    count_by: CountBy,
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value_t = Out::Text)]
    out: Out,
}

enum Failure {
    Usage(String),
    Verification,
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Derive(a) => run_derive(a),
        Command::Eulerian(a) => run_table(Family::Eulerian, a),
        Command::SecondOrder(a) => run_table(Family::SecondOrder, a),
        Command::Andre(a) => run_table(Family::Andre, a),
        Command::Verify(a) => run_verify(a),
        Command::Trees(a) => run_trees(a),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}

fn resolve_grammar(spec: &str, strict: bool) -> Result<Grammar, Failure> {
    if let Ok(preset) = spec.parse::<Preset>() {
        return Ok(preset.grammar());
    }
    if Path::new(spec).is_file() {
        return load_grammar_file(spec, strict).map_err(usage);
    }
    let names: Vec<_> = Preset::ALL.iter().map(|p| p.name()).collect();
    Err(Failure::Usage(format!(
        "`{spec}` is neither a preset ({}) nor a grammar file",
        names.join(", ")
    )))
}

fn run_derive(a: DeriveArgs) -> Result<String, Failure> {
    let g = resolve_grammar(&a.grammar, a.strict)?;
    let start = g.parse_expr(&a.start).map_err(usage)?;
    let result = g.iterate(&start, a.steps);
    Ok(match a.out {
        Out::Text => format!("{}\n", eulergram::print(&result)),
        Out::Json => render::json(&serde_json::json!({
            "grammar": a.grammar,
            "start": eulergram::print(&start),
            "steps": a.steps,
            "result": result.to_json(),
        })),
    })
}

#[derive(Clone, Copy)]
enum Family {
    Eulerian,
    SecondOrder,
    Andre,
}

fn run_table(family: Family, a: TableArgs) -> Result<String, Failure> {
    let p = match family {
        Family::Eulerian => eulergram::eulerian(a.n),
        Family::SecondOrder => eulergram::second_order(a.n),
        Family::Andre => eulergram::andre(a.n),
    }
    .map_err(usage)?;
    match a.expand {
        Expand::None => Ok(match a.out {
            Out::Text => format!("{}\n", eulergram::print(&p)),
            Out::Json => render::json(&serde_json::json!({ "n": a.n, "polynomial": p.to_json() })),
        }),
        Expand::Gamma => {
            let g = symexp::gamma_expand(&p).map_err(usage)?;
            Ok(match a.out {
                Out::Text => render::gamma_table(&g),
                Out::Json => render::json(&g.to_json()),
            })
        }
        Expand::Elementary => {
            let e = symexp::e_expand(&p).map_err(usage)?;
            Ok(match a.out {
                Out::Text => render::e_table(&e),
                Out::Json => render::json(&e.to_json()),
            })
        }
    }
}

fn run_verify(a: VerifyArgs) -> Result<String, Failure> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse::<Suite>().map_err(Failure::Usage)?]
    };
    if !a.force {
        for s in &suites {
            if let Some(limit) = s.enumeration_limit() {
                if a.max_n > limit {
                    return Err(Failure::Usage(format!(
                        "suite {s} enumerates up to n = {limit}; pass --force to run --max-n {}",
                        a.max_n
                    )));
                }
            }
        }
    }
    let config = VerifyConfig {
        max_n: a.max_n,
        seed: a.seed,
        random_pairs: a.pairs,
        ..VerifyConfig::default()
    };
    let report = verify::run_suites(&suites, &config);
    let text = match a.out {
        Out::Text => report.render_text(),
        Out::Json => render::json(&report.to_json()),
    };
    if report.passed() {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Verification)
    }
}

fn run_trees(a: TreesArgs) -> Result<String, Failure> {
    if !a.force && a.n as usize > oracle::MAX_TREE_N {
        return Err(Failure::Usage(format!(
            "tree enumeration is limited to n <= {}; pass --force to go further",
            oracle::MAX_TREE_N
        )));
    }
    let (n, bound) = (a.n as usize, a.max_degree as usize);
    Ok(match a.count_by {
        CountBy::Leaves => {
            let hist = oracle::tree_leaf_histogram(n, bound, a.plane);
            let rows = hist.iter().map(|(&k, &c)| (vec![k], c)).collect::<Vec<_>>();
            render::histogram(&["leaves"], &rows, a.out)
        }
        CountBy::Profile => {
            let hist = oracle::profile_histogram(n, bound, a.plane);
            let rows = hist
                .iter()
                .map(|(&(i, j, k), &c)| (vec![i, j, k], c))
                .collect::<Vec<_>>();
            render::histogram(&["i", "j", "k"], &rows, a.out)
        }
        CountBy::None => {
            let trees: Vec<PlaneTree> = oracle::enumerate_trees(n, bound, a.plane);
            match a.out {
                Out::Text => trees.iter().map(|t| format!("{t}\n")).collect(),
                Out::Json => render::json(&serde_json::Value::Array(
                    trees.iter().map(PlaneTree::to_json).collect(),
                )),
            }
        }
    })
}
