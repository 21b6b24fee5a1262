//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors. Output is deterministic for a fixed set of arguments.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::fock::FockVector;
use crate::multisegments::{canonical_tuple, MayaTuple, SegmentMultiset};
use crate::paths::{
    enumerate_components, enumerate_paths, highest_lift, n_reduce, path_energy, path_weight, tuple_energy,
    tuple_weight, HighestWeight, LevelPath,
};
use crate::quiverlab::{build_rep, conormal_sample, framing, moment_map, stability_test};
use crate::verify::{self, Bounds};
use crate::{AffineWeight, Error, Rank, YoungDiagram};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// Exact combinatorics of paths, Maya tuples and quiver components.
///
/// TSV output has one header line. Weights are written `u_0,...,u_n;deg` and
/// tuples, paths and diagrams as compact JSON.
#[derive(Debug, Parser)]
#[command(name = "quiverpaths", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

/// A highest weight `Λ = Σ Λ_{γ_i}` given by its rank and charges.
#[derive(Clone, Debug, Args)]
pub struct WeightArgs {
    /// Rank `n` of the cyclic quiver with `n + 1` vertices.
    #[arg(long)]
    pub n: u32,
    /// Weakly increasing charges, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    pub charges: Vec<i64>,
}

#[derive(Clone, Debug, Args)]
pub struct ModeArgs {
    /// Only n-reduced tuples (the default).
    #[arg(long, conflicts_with = "gl")]
    pub reduced: bool,
    /// All chain-ordered tuples, without reduction.
    #[arg(long)]
    pub gl: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List basis elements up to an energy bound.
    ///
    /// TSV columns: energy, weight, tuple (or path with --paths).
    Enumerate {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        max_energy: u64,
        #[command(flatten)]
        mode: ModeArgs,
        /// List paths instead of tuples.
        #[arg(long, conflicts_with = "gl")]
        paths: bool,
    },
    /// Weight multiplicities up to an energy bound.
    ///
    /// Counts are computed from tuples and from paths and must agree.
    /// TSV columns: energy, weight, count.
    Character {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        max_energy: u64,
    },
    /// Run the property suite.
    ///
    /// TSV columns: property, status, cases, counterexample, note.
    Verify {
        /// Use the full acceptance bounds.
        #[arg(long)]
        full: bool,
        /// First sampling seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Flip the sign of Δ_k to check that failures are reported.
        #[arg(long)]
        corrupt_delta: bool,
    },
    /// Apply an operator word to a Fock vector.
    ///
    /// The word is applied right to left, so "E0 F0" applies F_0 first.
    /// Letters are E, F, H followed by an integer content.
    /// TSV columns: parts, coeff.
    Fock {
        /// Operator word such as "E0 F-1 F0".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Start diagram as a JSON array; defaults to the empty diagram.
        #[arg(long)]
        start: Option<String>,
    },
    /// Highest lift of a path read as JSON `{"n","charges","prefix"}`.
    ///
    /// TSV columns: energy, weight, tuple.
    Lift {
        /// Input file; stdin when absent.
        input: Option<String>,
    },
    /// n-reduction of a tuple read as a JSON array of `{"parts","charge"}`.
    ///
    /// TSV columns: tuple.
    Reduce {
        #[arg(long)]
        n: u32,
        input: Option<String>,
    },
    /// Sampled stability of a multisegment read as JSON.
    ///
    /// Fails when fewer than half of the seeds agree with the greedy
    /// decomposition. TSV columns: seed, stable, agrees.
    QuiverCheck {
        /// Framing charges, comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        charges: Vec<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of seeds sampled.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        input: Option<String>,
    },
}

/// What went wrong, mapped to an exit code.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("invalid JSON: {e}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// A table with named columns, written as a JSON array of objects or as TSV.
struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                let objs: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let map: serde_json::Map<String, Value> = self
                            .columns
                            .iter()
                            .map(|c| c.to_string())
                            .zip(r.iter().cloned())
                            .collect();
                        Value::Object(map)
                    })
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&objs)?)
            }
            Format::Tsv => {
                writeln!(out, "{}", self.columns.join("\t"))?;
                for r in &self.rows {
                    let cells: Vec<String> = r.iter().map(tsv_cell).collect();
                    writeln!(out, "{}", cells.join("\t"))?;
                }
                Ok(())
            }
        }
    }
}

fn tsv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn weight_value(w: &AffineWeight) -> Value {
    Value::String(w.to_string())
}

fn highest_weight(w: &WeightArgs) -> Result<HighestWeight, Failure> {
    Ok(HighestWeight::new(Rank::new(w.n)?, w.charges.clone())?)
}

fn read_input(path: &Option<String>, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut s = String::new();
    match path {
        Some(p) if p != "-" => {
            s = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{p}: {e}")))?;
        }
        _ => {
            stdin.read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

fn cmd_enumerate(
    w: &WeightArgs,
    max_energy: u64,
    mode: &ModeArgs,
    paths: bool,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    let hw = highest_weight(w)?;
    let n = hw.rank();
    if paths {
        let mut table = Table::new(&["energy", "weight", "path"]);
        for p in enumerate_paths(&hw, max_energy) {
            table.push(vec![
                json!(path_energy(&p)),
                weight_value(&path_weight(&p)),
                to_value(&p),
            ]);
        }
        table.write(format, out)?;
        return Ok(());
    }
    let reduced = !mode.gl;
    let mut rows: Vec<(u64, MayaTuple)> = enumerate_components(&hw, max_energy, reduced)?
        .into_iter()
        .map(|t| (tuple_energy(&t, n), t))
        .collect();
    rows.sort();
    let mut table = Table::new(&["energy", "weight", "tuple"]);
    for (e, t) in rows {
        table.push(vec![json!(e), weight_value(&tuple_weight(&t, n)?), to_value(&t)]);
    }
    table.write(format, out)?;
    Ok(())
}

fn character_key(w: &AffineWeight) -> (i64, Vec<i64>) {
    (-w.deg, w.h.clone())
}

fn cmd_character(w: &WeightArgs, max_energy: u64, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let hw = highest_weight(w)?;
    let n = hw.rank();
    let mut from_tuples: BTreeMap<(i64, Vec<i64>), (AffineWeight, u64)> = BTreeMap::new();
    for t in enumerate_components(&hw, max_energy, true)? {
        let wt = tuple_weight(&t, n)?;
        from_tuples.entry(character_key(&wt)).or_insert((wt, 0)).1 += 1;
    }
    let mut from_paths: BTreeMap<(i64, Vec<i64>), (AffineWeight, u64)> = BTreeMap::new();
    for p in enumerate_paths(&hw, max_energy) {
        let wt = path_weight(&p);
        from_paths.entry(character_key(&wt)).or_insert((wt, 0)).1 += 1;
    }
    let mut table = Table::new(&["energy", "weight", "count"]);
    for ((energy, _), (wt, count)) in &from_tuples {
        table.push(vec![json!(energy), weight_value(wt), json!(count)]);
    }
    table.write(format, out)?;
    if from_tuples != from_paths {
        writeln!(err, "error: tuple and path multiplicities differ")?;
        return Err(Failure::Verification);
    }
    Ok(())
}

fn cmd_verify(full: bool, seed: u64, corrupt_delta: bool, format: Format, out: &mut dyn Write) -> Outcome {
    let mut b = if full { Bounds::full() } else { Bounds::quick() };
    b.seed = seed;
    b.corrupt_delta = corrupt_delta;
    let reports = verify::run_all(&b);
    let passed = reports.iter().all(|r| r.passed);
    match format {
        Format::Json => {
            let doc = json!({ "passed": passed, "properties": reports });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Format::Tsv => {
            let mut table = Table::new(&["property", "status", "cases", "counterexample", "note"]);
            for r in &reports {
                table.push(vec![
                    json!(r.name),
                    json!(if r.passed { "pass" } else { "fail" }),
                    json!(r.cases),
                    to_value(&r.counterexample),
                    to_value(&r.note),
                ]);
            }
            table.write(format, out)?;
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    E,
    F,
    H,
}

fn parse_word(word: &str) -> Result<Vec<(Op, i64)>, Failure> {
    let bad = |tok: &str| {
        Failure::Usage(format!(
            "malformed operator {tok:?}; expected E, F or H followed by an integer"
        ))
    };
    let ops: Vec<(Op, i64)> = word
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|tok| {
            let mut chars = tok.chars();
            let op = match chars.next() {
                Some('E') => Op::E,
                Some('F') => Op::F,
                Some('H') => Op::H,
                _ => return Err(bad(tok)),
            };
            let rest = chars.as_str().trim_start_matches('_');
            let k = rest.parse::<i64>().map_err(|_| bad(tok))?;
            Ok((op, k))
        })
        .collect::<Result<_, _>>()?;
    if ops.is_empty() {
        return Err(Failure::Usage("empty operator word".into()));
    }
    Ok(ops)
}

fn cmd_fock(word: &str, start: &Option<String>, format: Format, out: &mut dyn Write) -> Outcome {
    let ops = parse_word(word)?;
    let mut v = match start {
        Some(s) => FockVector::basis(serde_json::from_str::<YoungDiagram>(s)?),
        None => FockVector::vacuum(),
    };
    for &(op, k) in ops.iter().rev() {
        v = match op {
            Op::E => v.e_op(k),
            Op::F => v.f_op(k),
            Op::H => v.h_op(k),
        };
    }
    let mut table = Table::new(&["parts", "coeff"]);
    for (y, c) in v.iter() {
        table.push(vec![to_value(y), json!(c.to_string())]);
    }
    table.write(format, out)?;
    Ok(())
}

fn cmd_lift(input: &str, format: Format, out: &mut dyn Write) -> Outcome {
    let eta: LevelPath = serde_json::from_str(input)?;
    let t = highest_lift(&eta)?;
    let n = eta.highest_weight().rank();
    let mut table = Table::new(&["energy", "weight", "tuple"]);
    table.push(vec![
        json!(tuple_energy(&t, n)),
        weight_value(&tuple_weight(&t, n)?),
        to_value(&t),
    ]);
    table.write(format, out)?;
    Ok(())
}

fn cmd_reduce(n: u32, input: &str, format: Format, out: &mut dyn Write) -> Outcome {
    let t: MayaTuple = serde_json::from_str(input)?;
    let r = n_reduce(&t, Rank::new(n)?)?;
    let mut table = Table::new(&["tuple"]);
    table.push(vec![to_value(&r)]);
    table.write(format, out)?;
    Ok(())
}

fn cmd_quiver_check(
    charges: &[i64],
    seed: u64,
    seeds: u64,
    input: &str,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    if seeds == 0 {
        return Err(Failure::Usage("--seeds must be positive".into()));
    }
    let f: SegmentMultiset = serde_json::from_str(input)?;
    let greedy = canonical_tuple(&f, charges)?.is_tuple();
    let w = framing(f.kind(), charges);
    let x = build_rep(&f);
    let mut table = Table::new(&["seed", "stable", "agrees"]);
    let mut agree = 0;
    for s in seed..seed + seeds {
        let sample = conormal_sample(&x, s);
        if !moment_map(&sample).is_zero() {
            writeln!(err, "error: seed {s} gave a nonzero moment map")?;
            return Err(Failure::Verification);
        }
        let stable = stability_test(&sample, &w);
        agree += (stable == greedy) as u64;
        table.push(vec![json!(s), json!(stable), json!(stable == greedy)]);
    }
    table.write(format, out)?;
    writeln!(
        err,
        "greedy decomposition {}; {agree}/{seeds} seeds agree",
        if greedy { "succeeds" } else { "fails" }
    )?;
    if 2 * agree > seeds {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// The input file named by commands that read JSON, if any.
fn input_path(cmd: &Command) -> Option<&Option<String>> {
    match cmd {
        Command::Lift { input } | Command::Reduce { input, .. } | Command::QuiverCheck { input, .. } => Some(input),
        _ => None,
    }
}

fn dispatch(cli: &Cli, input: &str, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Enumerate {
            weight,
            max_energy,
            mode,
            paths,
        } => cmd_enumerate(weight, *max_energy, mode, *paths, format, out),
        Command::Character { weight, max_energy } => cmd_character(weight, *max_energy, format, out, err),
        Command::Verify {
            full,
            seed,
            corrupt_delta,
        } => cmd_verify(*full, *seed, *corrupt_delta, format, out),
        Command::Fock { word, start } => cmd_fock(word, start, format, out),
        Command::Lift { .. } => cmd_lift(input, format, out),
        Command::Reduce { n, .. } => cmd_reduce(*n, input, format, out),
        Command::QuiverCheck {
            charges, seed, seeds, ..
        } => cmd_quiver_check(charges, *seed, *seeds, input, format, out, err),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let input = match input_path(&cli.command).map(|p| read_input(p, stdin)).transpose() {
        Ok(text) => text.unwrap_or_default(),
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
        Err(Failure::Verification) => unreachable!("reading input does not verify"),
    };
    // Output is buffered so the command can run on the pool's threads.
    let (mut out_buf, mut err_buf) = (Vec::new(), Vec::new());
    let outcome = pool.install(|| dispatch(&cli, &input, &mut out_buf, &mut err_buf));
    let _ = out.write_all(&out_buf);
    let _ = err.write_all(&err_buf);
    match outcome {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("quiverpaths").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn word_parsing() {
        assert_eq!(
            parse_word("E0 F_-1,H2").ok(),
            Some(vec![(Op::E, 0), (Op::F, -1), (Op::H, 2)])
        );
        assert!(parse_word("G1").is_err());
        assert!(parse_word("F").is_err());
        assert!(parse_word("  ").is_err());
    }

    #[test]
    fn fock_examples() {
        let (code, out, _) = run_str(&["--format", "tsv", "fock", "--word", "F0"], "");
        assert_eq!((code, out.as_str()), (0, "parts\tcoeff\n[1]\t1\n"));
        let (code, out, _) = run_str(&["--format", "tsv", "fock", "--word", "E0 F0"], "");
        assert_eq!((code, out.as_str()), (0, "parts\tcoeff\n[]\t1\n"));
        let (code, _, err) = run_str(&["fock", "--word", "X0"], "");
        assert_eq!(code, 2);
        assert!(err.contains("malformed"));
    }

    #[test]
    fn enumerate_vacuum_row() {
        let (code, out, _) = run_str(
            &[
                "--format",
                "tsv",
                "enumerate",
                "--n",
                "1",
                "--charges",
                "0",
                "--max-energy",
                "0",
            ],
            "",
        );
        assert_eq!(code, 0);
        assert_eq!(out, "energy\tweight\ttuple\n0\t1,0;0\t[{\"parts\":[],\"charge\":0}]\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["enumerate", "--n", "1"], "").0, 2);
        assert_eq!(
            run_str(&["enumerate", "--n", "0", "--charges", "0", "--max-energy", "1"], "").0,
            2
        );
        assert_eq!(
            run_str(&["enumerate", "--n", "1", "--charges", "1,0", "--max-energy", "1"], "").0,
            2
        );
        assert_eq!(run_str(&["lift"], "not json").0, 2);
        assert_eq!(run_str(&["--help"], "").0, 0);
    }
}
