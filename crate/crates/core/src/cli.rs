//! The `eqset` command line.
//!
//! Exit codes are uniform: 0 when the question asked is answered yes
//! (solvable, solution found, language empty, …), 1 when it is answered no,
//! 2 on malformed input.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::domain::{IntMatrix, IntVec, LinearSystem};
use crate::edt0l::{split_tuple, Edt0lSystem};
use crate::json::{int_from_json, int_to_json, vec_to_json};
use crate::lindio::analyze;
use crate::poly::{eval_poly_system, PolynomialSystem};
use crate::wordeq::{brute_force_wordeq, encode_equation, parse_equation, to_single_equation};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "eqset",
    version,
    about = "Solution sets of linear Diophantine systems, EDT0L languages and word equations"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide and enumerate `A x = c` over the naturals.
    Lindio(LindioArgs),
    /// Word equations: bounded solving and the matrix reduction.
    Wordeq {
        #[command(subcommand)]
        action: WordeqAction,
    },
    /// Query an EDT0L system given as JSON.
    Edt0l {
        #[command(subcommand)]
        action: Edt0lAction,
    },
}

#[derive(Args, Debug)]
pub struct LindioArgs {
    /// JSON `{"A": [[..]], "c": [..]}`: a file path, `-` for stdin, or inline text.
    pub input: String,
    /// Enumerate all solutions with coordinates up to this bound.
    #[arg(long)]
    pub bound: Option<u64>,
    /// Write the trimmed automaton in DOT format.
    #[arg(long)]
    pub emit_dot: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum WordeqAction {
    /// Exhaustive search over variable images up to a length cap.
    Solve {
        /// Equation over lowercase constants and uppercase variables, e.g. `abX=Yba`.
        equation: String,
        /// Longest variable image tried.
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// Print the polynomial system of the matrix encoding.
    Encode {
        /// Equation over lowercase constants and uppercase variables, e.g. `abX=Yba`.
        equation: String,
        /// Fold into a single equation via four squares.
        #[arg(long)]
        single: bool,
    },
    /// Evaluate the encoded system under an assignment file `{"X1": 1, ..}`.
    Check {
        /// Equation over lowercase constants and uppercase variables, e.g. `abX=Yba`.
        equation: String,
        /// JSON object mapping unknown names to integers.
        #[arg(long)]
        assign: PathBuf,
        /// Check the single-equation form instead.
        #[arg(long)]
        single: bool,
    },
}

#[derive(Args, Debug)]
pub struct SystemArgs {
    /// EDT0L system JSON file (`-` for stdin).
    pub system: String,
}

#[derive(Subcommand, Debug)]
pub enum Edt0lAction {
    /// Words of the language up to a length cap.
    Enumerate {
        #[command(flatten)]
        input: SystemArgs,
        /// Longest word listed.
        #[arg(long, default_value_t = 8)]
        cap: usize,
        /// Path length limit, used when some label erases a letter.
        #[arg(long, default_value_t = 32)]
        depth_cap: usize,
    },
    /// Is the language empty?
    Empty {
        #[command(flatten)]
        input: SystemArgs,
    },
    /// Does the trimmed automaton accept infinitely many compositions?
    Infinite {
        #[command(flatten)]
        input: SystemArgs,
    },
    /// Enumerate and split every word at the marker.
    Tuples {
        #[command(flatten)]
        input: SystemArgs,
        /// Longest word listed.
        #[arg(long, default_value_t = 8)]
        cap: usize,
        /// Path length limit, used when some label erases a letter.
        #[arg(long, default_value_t = 32)]
        depth_cap: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn answer(yes: bool, stdout: String) -> Self {
        Outcome {
            code: if yes { EXIT_YES } else { EXIT_NO },
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

type CliResult = Result<Outcome, String>;

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Lindio(args) => run_lindio(args, cli.format),
        Command::Wordeq { action } => run_wordeq(action, cli.format),
        Command::Edt0l { action } => run_edt0l(action, cli.format),
    };
    result.unwrap_or_else(Outcome::input_error)
}

fn read_input(source: &str) -> Result<String, String> {
    if source == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        return Ok(buf);
    }
    if source.trim_start().starts_with('{') {
        return Ok(source.to_string());
    }
    read_file(Path::new(source))
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Parses `{"A": [[..]], "c": [..]}`; integers may be numbers or strings.
pub fn parse_linear_system(text: &str) -> Result<LinearSystem, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let obj = v
        .as_object()
        .ok_or("$: expected an object with keys `A` and `c`")?;
    if let Some(k) = obj.keys().find(|k| *k != "A" && *k != "c") {
        return Err(format!("{k}: unknown field"));
    }
    let int =
        |v: &Value, path: String| int_from_json(v).ok_or(format!("{path}: expected an integer"));
    let rows = obj
        .get("A")
        .ok_or("A: missing field")?
        .as_array()
        .ok_or("A: expected an array of rows")?;
    let n = rows.len();
    if n == 0 {
        return Err("A: system must have at least one variable".to_string());
    }
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or(format!("A[{i}]: expected an array"))?;
        if row.len() != n {
            return Err(format!("A[{i}]: expected {n} entries, found {}", row.len()));
        }
        for (j, e) in row.iter().enumerate() {
            entries.push(int(e, format!("A[{i}][{j}]"))?);
        }
    }
    let c = obj
        .get("c")
        .ok_or("c: missing field")?
        .as_array()
        .ok_or("c: expected an array")?;
    if c.len() != n {
        return Err(format!("c: expected {n} entries, found {}", c.len()));
    }
    let c = c
        .iter()
        .enumerate()
        .map(|(i, e)| int(e, format!("c[{i}]")))
        .collect::<Result<Vec<BigInt>, _>>()?;
    let a = IntMatrix::new(n, n, entries).map_err(|e| e.to_string())?;
    let c = IntVec::new(c).map_err(|e| e.to_string())?;
    LinearSystem::new(a, c).map_err(|e| e.to_string())
}

fn run_lindio(args: &LindioArgs, format: Format) -> CliResult {
    let system = parse_linear_system(&read_input(&args.input)?)?;
    let analysis = analyze(&system).map_err(|e| e.to_string())?;
    let aut = &analysis.automaton;
    let report = &analysis.report;
    if let Some(path) = &args.emit_dot {
        std::fs::write(path, aut.to_dot()).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let solutions = args.bound.map(|b| analysis.solutions(b));
    let out = match format {
        Format::Dot => aut.to_dot(),
        Format::Json => {
            let mut v = json!({
                "solvable": report.solvable,
                "infinite": report.infinite,
                "witness": report.witness.as_ref().map(vec_to_json),
                "variables": system.dim(),
                "normalized_variables": analysis.normalized.dim(),
                "norm_bound": int_to_json(aut.norm_bound()),
                "states": aut.states().len(),
                "arcs": aut.arcs().len(),
            });
            if let (Some(b), Some(sols)) = (args.bound, &solutions) {
                v["bound"] = json!(b);
                v["solutions"] = Value::Array(sols.iter().map(vec_to_json).collect());
            }
            pretty(&v)
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "solvable: {}", report.solvable);
            let _ = writeln!(s, "infinite: {}", report.infinite);
            match &report.witness {
                Some(w) => {
                    let _ = writeln!(s, "witness: {w}");
                }
                None => s.push_str("witness: none\n"),
            }
            let _ = writeln!(
                s,
                "variables: {} (normalized: {})",
                system.dim(),
                analysis.normalized.dim()
            );
            let _ = writeln!(s, "states: {}", aut.states().len());
            let _ = writeln!(s, "arcs: {}", aut.arcs().len());
            if let (Some(b), Some(sols)) = (args.bound, &solutions) {
                let _ = writeln!(s, "solutions with coordinates <= {b}: {}", sols.len());
                for x in sols {
                    let _ = writeln!(s, "{x}");
                }
            }
            s
        }
    };
    Ok(Outcome::answer(report.solvable, out))
}

fn run_wordeq(action: &WordeqAction, format: Format) -> CliResult {
    if format == Format::Dot {
        return Err("--format dot is not available for wordeq".to_string());
    }
    match action {
        WordeqAction::Solve { equation, cap } => {
            let eq = parse_equation(equation).map_err(|e| e.to_string())?;
            let sols = brute_force_wordeq(&eq, *cap);
            let caveat = "bounded search only; no solution within the cap does not prove the equation unsolvable";
            let out = match format {
                Format::Json => {
                    let list: Vec<Value> = sols
                        .iter()
                        .map(|sigma| {
                            let map: serde_json::Map<String, Value> = eq
                                .variables()
                                .into_iter()
                                .map(|v| {
                                    let img = sigma
                                        .image(v)
                                        .map(|w| eq.alphabet().render(w))
                                        .unwrap_or_default();
                                    (eq.alphabet().name(v).to_string(), Value::String(img))
                                })
                                .collect();
                            Value::Object(map)
                        })
                        .collect();
                    let mut v =
                        json!({ "equation": eq.to_string(), "cap": cap, "solutions": list });
                    if sols.is_empty() {
                        v["note"] = json!(caveat);
                    }
                    pretty(&v)
                }
                _ => {
                    let mut s = String::new();
                    for sigma in &sols {
                        let _ = writeln!(s, "{}", sigma.render(eq.alphabet()));
                    }
                    let _ = writeln!(
                        s,
                        "found {} solution(s) with images of length <= {cap}",
                        sols.len()
                    );
                    if sols.is_empty() {
                        let _ = writeln!(s, "note: {caveat}");
                    }
                    s
                }
            };
            Ok(Outcome::answer(!sols.is_empty(), out))
        }
        WordeqAction::Encode { equation, single } => {
            let ps = encoded(equation, *single)?;
            let out = match format {
                Format::Json => pretty(&ps.to_json()),
                _ => ps.to_text(),
            };
            Ok(Outcome::answer(true, out))
        }
        WordeqAction::Check {
            equation,
            assign,
            single,
        } => {
            let ps = encoded(equation, *single)?;
            let assignment = parse_assignment(&read_file(assign)?)?;
            let ok = eval_poly_system(&ps, &assignment).map_err(|e| e.to_string())?;
            let out = match format {
                Format::Json => pretty(&json!({ "satisfied": ok })),
                _ => format!("satisfied: {ok}\n"),
            };
            Ok(Outcome::answer(ok, out))
        }
    }
}

fn encoded(equation: &str, single: bool) -> Result<PolynomialSystem, String> {
    let eq = parse_equation(equation).map_err(|e| e.to_string())?;
    let ps = encode_equation(&eq).map_err(|e| e.to_string())?;
    Ok(if single { to_single_equation(&ps) } else { ps })
}

fn parse_assignment(text: &str) -> Result<BTreeMap<String, BigInt>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let obj = v
        .as_object()
        .ok_or("$: expected an object of unknown -> integer")?;
    obj.iter()
        .map(|(k, v)| {
            int_from_json(v)
                .map(|i| (k.clone(), i))
                .ok_or(format!("{k}: expected an integer"))
        })
        .collect()
}

fn run_edt0l(action: &Edt0lAction, format: Format) -> CliResult {
    let source = match action {
        Edt0lAction::Enumerate { input, .. }
        | Edt0lAction::Empty { input }
        | Edt0lAction::Infinite { input }
        | Edt0lAction::Tuples { input, .. } => &input.system,
    };
    let sys = Edt0lSystem::from_json(&read_input(source)?).map_err(|e| e.to_string())?;
    if format == Format::Dot {
        return Ok(Outcome::answer(true, sys.automaton().to_dot()));
    }
    let show = |w: &crate::domain::Word| {
        if w.is_empty() {
            "ε".to_string()
        } else {
            sys.render(w)
        }
    };
    match action {
        Edt0lAction::Enumerate { cap, depth_cap, .. } => {
            let e = sys.enumerate(*cap, *depth_cap).map_err(|e| e.to_string())?;
            let out = match format {
                Format::Json => {
                    let words: Vec<String> = e.words.iter().map(|w| sys.render(w)).collect();
                    pretty(&json!({ "words": words, "truncated": e.truncated }))
                }
                _ => {
                    let mut s = String::new();
                    for w in &e.words {
                        let _ = writeln!(s, "{}", show(w));
                    }
                    if e.truncated {
                        let _ = writeln!(s, "truncated: true (depth cap {depth_cap})");
                    }
                    s
                }
            };
            Ok(Outcome::answer(!e.words.is_empty(), out))
        }
        Edt0lAction::Empty { .. } => {
            let empty = sys.is_empty();
            let out = match format {
                Format::Json => pretty(&json!({ "empty": empty })),
                _ => format!("empty: {empty}\n"),
            };
            Ok(Outcome::answer(empty, out))
        }
        Edt0lAction::Infinite { .. } => {
            let infinite = sys.is_language_infinite();
            let out = match format {
                Format::Json => pretty(&json!({ "infinite": infinite })),
                _ => format!("infinite: {infinite}\n"),
            };
            Ok(Outcome::answer(infinite, out))
        }
        Edt0lAction::Tuples { cap, depth_cap, .. } => {
            let marker = sys.alphabet().marker().ok_or("system has no marker")?;
            let e = sys.enumerate(*cap, *depth_cap).map_err(|e| e.to_string())?;
            let tuples: Vec<Vec<String>> = e
                .words
                .iter()
                .map(|w| {
                    split_tuple(w, marker)
                        .iter()
                        .map(|f| sys.render(f))
                        .collect()
                })
                .collect();
            let out = match format {
                Format::Json => pretty(&json!({ "tuples": tuples, "truncated": e.truncated })),
                _ => {
                    let mut s = String::new();
                    for t in &tuples {
                        let fields: Vec<&str> = t
                            .iter()
                            .map(|f| if f.is_empty() { "ε" } else { f.as_str() })
                            .collect();
                        let _ = writeln!(s, "({})", fields.join(", "));
                    }
                    if e.truncated {
                        let _ = writeln!(s, "truncated: true (depth cap {depth_cap})");
                    }
                    s
                }
            };
            Ok(Outcome::answer(!tuples.is_empty(), out))
        }
    }
}
