//! The `configpair` command line: parse expressions, run the library's
//! operations and print text or JSON.
//!
//! [`run`] does all the work and returns what would be printed, so the binary
//! and the tests share one code path.

pub mod json;
pub mod random;
pub mod selftest;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use configpair::cobracket::{cobracket, TensorDisplay};
use configpair::envelope::{expand_assoc, expand_graph, expand_prelie};
use configpair::freealg::{product, shuffle, Element};
use configpair::liedual::{kernel_member_element, long_graph_reduce};
use configpair::operads::{binary_generated_dim, dims, Family, OperadElement, MAX_ARITY};
use configpair::pairing::{pair_element, Algorithm};
use configpair::syntax::{parse_combo, Parse};
use configpair::{Error, Generator, LieExpr, LinearCombo, OrientedGraph, RootedTree, Side, Word};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::json;

/// What a single invocation prints and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    /// The command-line text did not describe a valid value.
    #[error(transparent)]
    Input(Error),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("{0}")]
    Domain(String),
    /// Checks ran and some failed; the report is still printed.
    #[error("{failed} check(s) failed")]
    Failed { report: String, failed: usize },
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            _ => 1,
        }
    }
}

type CliResult = std::result::Result<String, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "configpair",
    version,
    about = "Exact computations with the configuration pairing"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Assoc,
    Prelie,
    Graph,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Assoc => Side::Assoc,
            SideArg::Prelie => Side::PreLie,
            SideArg::Graph => Side::Graph,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgoArg {
    Expand,
    Recursive,
    Sigma,
    Rightnormed,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Algorithm {
        match a {
            AlgoArg::Expand => Algorithm::Expand,
            AlgoArg::Recursive => Algorithm::Recursive,
            AlgoArg::Sigma => Algorithm::Sigma,
            AlgoArg::Rightnormed => Algorithm::RightNormed,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Concat,
    Shuffle,
    Prelie,
    Graph,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Assoc,
    Lie,
    Prelie,
    Graph,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Assoc => Family::Assoc,
            FamilyArg::Lie => Family::Lie,
            FamilyArg::Prelie => Family::PreLie,
            FamilyArg::Graph => Family::Graph,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a Lie expression in the free associative, preLie or graph algebra.
    Expand {
        #[arg(long, value_enum)]
        side: SideArg,
        lie: String,
    },
    /// Pair a dual word/tree/graph combination with a Lie expression.
    Pair {
        #[arg(long, value_enum, default_value = "expand")]
        algo: AlgoArg,
        #[arg(long, value_enum)]
        side: SideArg,
        dual: String,
        lie: String,
    },
    /// Multiply two combinations.
    Product {
        #[arg(long, value_enum)]
        kind: KindArg,
        a: String,
        b: String,
    },
    /// Apply the cobracket to a dual combination.
    Cobracket {
        #[arg(long, value_enum)]
        side: SideArg,
        dual: String,
    },
    /// List Lyndon words.
    Lyndon {
        /// Comma-separated letters, in increasing order.
        #[arg(long, value_delimiter = ',')]
        alphabet: Vec<String>,
        #[arg(long)]
        max_len: usize,
    },
    /// Decide whether a dual combination lies in the kernel.
    KernelCheck {
        #[arg(long, value_enum)]
        side: SideArg,
        dual: String,
    },
    /// Rewrite a graph dual as long graphs starting at `base`.
    ReduceLong {
        #[arg(long)]
        base: String,
        dual: String,
    },
    /// Operad compositions, dimensions and axiom checks.
    Operad {
        #[command(subcommand)]
        op: OperadCommand,
    },
    /// Run the acceptance suite and print one line per criterion.
    Selftest,
}

#[derive(Debug, Subcommand)]
enum OperadCommand {
    /// `x ∘ᵢ y` for elements labeled 1..n.
    Compose {
        #[arg(long, value_enum)]
        family: FamilyArg,
        x: String,
        i: usize,
        y: String,
    },
    /// Dimensions of the arity-n spaces.
    Dims {
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, default_value_t = 5)]
        max_arity: usize,
    },
    /// Dimension of the part of arity n generated by binary operations.
    BinaryDim {
        #[arg(long, value_enum)]
        family: FamilyArg,
        n: usize,
    },
    /// Sample random elements and check associativity and disjoint-slot commutation.
    CheckAxioms {
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, default_value_t = 30)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Run one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => Outcome::ok(out),
        Err(CliError::Failed { report, failed }) => Outcome {
            code: 1,
            stdout: report,
            stderr: format!("error: {failed} check(s) failed\n"),
        },
        Err(e) => Outcome {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn input<B: Parse + Ord + Clone>(text: &str) -> Result<LinearCombo<B>, CliError> {
    parse_combo(text).map_err(CliError::Input)
}

fn dual_element(side: Side, text: &str) -> Result<Element, CliError> {
    Ok(match side {
        Side::Assoc => Element::Assoc(input(text)?),
        Side::PreLie => Element::PreLie(input(text)?),
        Side::Graph => Element::Graph(input(text)?),
    })
}

fn render_element(e: &Element, as_json: bool) -> String {
    match (e, as_json) {
        (Element::Assoc(c), true) => line(json::combo(c)),
        (Element::PreLie(c), true) => line(json::combo(c)),
        (Element::Graph(c), true) => line(json::combo(c)),
        (e, false) => line(e),
    }
}

fn dispatch(cli: &Cli) -> CliResult {
    let as_json = cli.json;
    match &cli.command {
        Command::Expand { side, lie } => {
            let l: LinearCombo<LieExpr> = input(lie)?;
            let e = match Side::from(*side) {
                Side::Assoc => Element::Assoc(l.map_linear(expand_assoc)),
                Side::PreLie => Element::PreLie(l.map_linear(expand_prelie)),
                Side::Graph => Element::Graph(l.map_linear(expand_graph)),
            };
            Ok(render_element(&e, as_json))
        }
        Command::Pair { algo, side, dual, lie } => {
            let side = Side::from(*side);
            let d = dual_element(side, dual)?;
            let l: LinearCombo<LieExpr> = input(lie)?;
            let v = pair_element(Algorithm::from(*algo), side, &d, &l)?;
            Ok(if as_json { line(json::value(&v)) } else { line(v) })
        }
        Command::Product { kind, a, b } => {
            let e = match kind {
                KindArg::Concat => Element::Assoc(product(&input::<Word>(a)?, &input(b)?)),
                KindArg::Shuffle => {
                    let (x, y) = (input::<Word>(a)?, input::<Word>(b)?);
                    Element::Assoc(x.bilinear(&y, shuffle))
                }
                KindArg::Prelie => Element::PreLie(product(&input::<RootedTree>(a)?, &input(b)?)),
                KindArg::Graph => Element::Graph(product(&input::<OrientedGraph>(a)?, &input(b)?)),
            };
            Ok(render_element(&e, as_json))
        }
        Command::Cobracket { side, dual } => Ok(match dual_element(Side::from(*side), dual)? {
            Element::Assoc(c) => render_tensor(&cobracket(&c), as_json),
            Element::PreLie(c) => render_tensor(&cobracket(&c), as_json),
            Element::Graph(c) => render_tensor(&cobracket(&c), as_json),
        }),
        Command::Lyndon { alphabet, max_len } => {
            let letters = alphabet
                .iter()
                .map(|s| Generator::new(s.trim()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::Input)?;
            let mut sorted = letters.clone();
            sorted.sort();
            sorted.dedup();
            if sorted != letters {
                return Err(CliError::Domain(
                    "the alphabet must be listed in increasing order without repeats".into(),
                ));
            }
            let words = configpair::freealg::lyndon_words(&letters, *max_len);
            Ok(if as_json {
                let names: Vec<String> = words.iter().map(|w| w.to_string()).collect();
                line(json!({ "words": names }))
            } else {
                words.iter().map(line).collect()
            })
        }
        Command::KernelCheck { side, dual } => {
            let member = kernel_member_element(&dual_element(Side::from(*side), dual)?);
            Ok(if as_json {
                line(json!({ "kernel": member }))
            } else {
                line(member)
            })
        }
        Command::ReduceLong { base, dual } => {
            let gamma: LinearCombo<OrientedGraph> = input(dual)?;
            let reduced = long_graph_reduce(&gamma, &Generator::new(base).map_err(CliError::Input)?)?;
            Ok(render_element(&Element::Graph(reduced), as_json))
        }
        Command::Operad { op } => operad(op, as_json),
        Command::Selftest => {
            let results = selftest::run_all();
            let report: String = results.iter().map(line).collect();
            let failed = results.iter().filter(|r| !r.passed).count();
            if failed == 0 {
                Ok(report)
            } else {
                Err(CliError::Failed { report, failed })
            }
        }
    }
}

fn render_tensor<B>(t: &configpair::TensorCombo<B>, as_json: bool) -> String
where
    B: Ord + Clone + std::fmt::Display + serde::Serialize,
{
    if as_json {
        line(json::tensor(t))
    } else {
        line(TensorDisplay(t))
    }
}

/// An operad element with arity read off its labels.
fn operad_element(family: Family, text: &str) -> Result<OperadElement, CliError> {
    fn arity<S: configpair::Shape<Label = usize>>(c: &LinearCombo<S>) -> Result<usize, CliError> {
        c.shapes()
            .next()
            .map(|s| s.weight())
            .ok_or_else(|| CliError::Domain("cannot read the arity of the zero element".into()))
    }
    Ok(match family {
        Family::Assoc => {
            let c: LinearCombo<Word<usize>> = input(text)?;
            OperadElement::assoc(arity(&c)?, c)?
        }
        Family::Lie => {
            let c: LinearCombo<LieExpr<usize>> = input(text)?;
            OperadElement::lie(arity(&c)?, c)?
        }
        Family::PreLie => {
            let c: LinearCombo<RootedTree<usize>> = input(text)?;
            OperadElement::prelie(arity(&c)?, c)?
        }
        Family::Graph => {
            let c: LinearCombo<OrientedGraph<usize>> = input(text)?;
            OperadElement::graph(arity(&c)?, c)?
        }
    })
}

fn render_operad(e: &OperadElement, as_json: bool) -> String {
    if !as_json {
        return line(e);
    }
    line(match e {
        OperadElement::Assoc(n, c) => json!({"arity": n, "combo": json::combo(c)}),
        OperadElement::Lie(n, c) => json!({"arity": n, "combo": json::combo(c)}),
        OperadElement::PreLie(n, c) => json!({"arity": n, "combo": json::combo(c)}),
        OperadElement::Graph(n, c) => json!({"arity": n, "combo": json::combo(c)}),
    })
}

fn families(f: Option<FamilyArg>) -> Vec<Family> {
    f.map_or(Family::ALL.to_vec(), |f| vec![f.into()])
}

fn operad(op: &OperadCommand, as_json: bool) -> CliResult {
    match op {
        OperadCommand::Compose { family, x, i, y } => {
            let family = Family::from(*family);
            let (x, y) = (operad_element(family, x)?, operad_element(family, y)?);
            Ok(render_operad(&x.compose(*i, &y)?, as_json))
        }
        OperadCommand::Dims { family, max_arity } => {
            if !(1..=MAX_ARITY).contains(max_arity) {
                return Err(CliError::Domain(format!("--max-arity must be in 1..={MAX_ARITY}")));
            }
            let mut table = serde_json::Map::new();
            let mut text = String::new();
            for f in families(*family) {
                let ds = (1..=*max_arity).map(|n| dims(f, n)).collect::<Result<Vec<_>, _>>()?;
                let cells: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
                let _ = writeln!(text, "{f}: {}", cells.join(" "));
                table.insert(f.to_string(), json!(ds));
            }
            Ok(if as_json {
                line(serde_json::Value::Object(table))
            } else {
                text
            })
        }
        OperadCommand::BinaryDim { family, n } => {
            let d = binary_generated_dim((*family).into(), *n)?;
            Ok(if as_json { line(json!({ "dim": d })) } else { line(d) })
        }
        OperadCommand::CheckAxioms { family, samples, seed } => {
            let mut rng = StdRng::seed_from_u64(*seed);
            let mut text = String::new();
            let mut summary = serde_json::Map::new();
            let mut failed = 0;
            for f in families(*family) {
                let (checks, failures) = check_axioms(&mut rng, f, *samples);
                failed += failures.len();
                let _ = writeln!(text, "{f}: {} of {checks} checks passed", checks - failures.len());
                for msg in &failures {
                    let _ = writeln!(text, "  {msg}");
                }
                summary.insert(f.to_string(), json!({"checks": checks, "failures": failures}));
            }
            let report = if as_json {
                line(serde_json::Value::Object(summary))
            } else {
                text
            };
            if failed == 0 {
                Ok(report)
            } else {
                Err(CliError::Failed { report, failed })
            }
        }
    }
}

/// Sequential and parallel composition laws on random elements of arity ≤ 3.
pub fn check_axioms(rng: &mut StdRng, family: Family, samples: usize) -> (usize, Vec<String>) {
    use rand::Rng;
    let mut checks = 0;
    let mut failures = Vec::new();
    for _ in 0..samples {
        let pick = |rng: &mut StdRng| {
            let n = rng.random_range(1..=3);
            random::operad_element(rng, family, n)
        };
        let (x, y, z) = (pick(rng), pick(rng), pick(rng));
        let (n, m) = (x.arity(), y.arity());
        let compose = |a: &OperadElement, i, b: &OperadElement| a.compose(i, b).expect("position in range");
        for i in 1..=n {
            for j in 1..=m {
                checks += 1;
                let lhs = compose(&compose(&x, i, &y), i + j - 1, &z);
                let rhs = compose(&x, i, &compose(&y, j, &z));
                if !lhs.equivalent(&rhs) {
                    failures.push(format!("({x}) ∘{i} ({y}) ∘{} ({z})", i + j - 1));
                }
            }
            for k in i + 1..=n {
                checks += 1;
                let lhs = compose(&compose(&x, i, &y), k + m - 1, &z);
                let rhs = compose(&compose(&x, k, &z), i, &y);
                if !lhs.equivalent(&rhs) {
                    failures.push(format!("({x}) ∘{i} ({y}), ∘{k} ({z})"));
                }
            }
        }
    }
    (checks, failures)
}
