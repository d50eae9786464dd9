use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use infbraid::artin::braid_equal;
use infbraid::braid::{parse_braid, BraidWord};
use infbraid::combing::{comb, pure_equal, recombine, to_pure_generators, CombedForm};
use infbraid::completed::{
    completed_converges, completed_distance, embed_finite_full, CompletedBraid,
};
use infbraid::error::BraidError;
use infbraid::infperm::{normal_form, perm_metric, section_braid, InfPermutation};
use infbraid::pure::{parse_band_word, parse_band_word_auto, PureBraidWord};
use infbraid::stream::{
    distance, inf_inv, inf_mul, wild_braid, DepthBudget, Distance, InfinitePureBraid,
};

#[derive(Parser, Debug)]
#[command(
    name = "infbraid",
    version,
    about = "Braids, pure braid combings and infinite braids"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(clap::Args, Debug, Default)]
struct Opts {
    /// Strand count for braid expressions (inferred when omitted)
    #[arg(long)]
    strands: Option<usize>,
    /// Depth budget for infinite objects
    #[arg(long)]
    depth: Option<usize>,
    /// Number of series terms for permutation metrics
    #[arg(long)]
    precision: Option<usize>,
    /// Permutation argument, `perm: 1->2 2->1` or `id`
    #[arg(long = "perm")]
    perms: Vec<String>,
    /// Braid words, band words, combed forms or `@file`
    inputs: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Comb a pure braid into its kernel coordinates
    Comb(Opts),
    /// Multiply combed coordinates back into a band word
    Recombine(Opts),
    /// Product of the inputs, left to right
    Mul(Opts),
    /// Inverse of one input
    Inv(Opts),
    /// Compare two inputs
    Eq(Opts),
    /// The n-strand truncation of an infinite pure braid
    Truncate(Opts),
    /// Distance between two permutations or two pure braids
    Dist(Opts),
    /// First blocks of a permutation's normal form
    PermNf(Opts),
    /// Section braid of a permutation
    Section(Opts),
    /// Least index after which a sequence stays near the identity
    Converge(Opts),
    /// Truncation of the wild braid
    Wild(Opts),
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Contract(String),
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        if e.is_parse_error() {
            CliError::Parse(e.to_string())
        } else {
            CliError::Contract(e.to_string())
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn contract(msg: impl Into<String>) -> CliError {
    CliError::Contract(msg.into())
}

/// A parsed positional input.
#[derive(Debug, Clone)]
enum Value {
    Word(BraidWord),
    Band(PureBraidWord),
    Stream(InfinitePureBraid, usize),
}

fn read_arg(arg: &str) -> CliResult<String> {
    match arg.strip_prefix('@') {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| contract(format!("cannot read `{path}`: {e}")))
        }
        None => Ok(arg.to_string()),
    }
}

/// Inline combed forms may separate lines with `;`.
fn combed_text(text: &str) -> String {
    text.split(';')
        .map(str::trim)
        .collect::<Vec<_>>()
        .join("\n")
}

fn infer_strands(text: &str) -> usize {
    text.split_whitespace()
        .filter_map(|t| t.strip_prefix('s'))
        .filter_map(|t| t.trim_end_matches("^-1").parse::<usize>().ok())
        .max()
        .map_or(1, |i| i + 1)
}

fn parse_value(arg: &str, strands: Option<usize>) -> CliResult<Value> {
    let text = read_arg(arg)?;
    let t = text.trim();
    if t.starts_with("strands=") {
        return Ok(Value::Word(BraidWord::deserialize(t)?));
    }
    if t.starts_with("depth=") {
        let depth = t
            .lines()
            .next()
            .and_then(|h| h.trim_start_matches("depth=").trim().parse().ok())
            .unwrap_or(0);
        return Ok(Value::Stream(
            InfinitePureBraid::parse_prefix(&combed_text(t))?,
            depth,
        ));
    }
    if t.starts_with('k') {
        let c = CombedForm::parse(&combed_text(t))?;
        let depth = c.depth();
        return Ok(Value::Stream(InfinitePureBraid::from_combed(c), depth));
    }
    if t.contains('A') {
        return Ok(Value::Band(match strands {
            Some(n) => parse_band_word(t, n)?,
            None => parse_band_word_auto(t)?,
        }));
    }
    let n = strands.unwrap_or_else(|| infer_strands(t));
    Ok(Value::Word(parse_braid(t, n)?))
}

fn values(o: &Opts) -> CliResult<Vec<Value>> {
    o.inputs.iter().map(|a| parse_value(a, o.strands)).collect()
}

fn exactly<const N: usize>(o: &Opts, verb: &str) -> CliResult<[Value; N]> {
    let v = values(o)?;
    let got = v.len();
    v.try_into()
        .map_err(|_| contract(format!("`{verb}` takes {N} input(s), got {got}")))
}

fn need_depth(o: &Opts, verb: &str) -> CliResult<usize> {
    match o.depth {
        Some(0) => Err(contract("--depth must be at least 1")),
        Some(d) => Ok(d),
        None => Err(contract(format!("`{verb}` requires --depth"))),
    }
}

fn need_precision(o: &Opts, verb: &str) -> CliResult<usize> {
    match o.precision {
        Some(0) => Err(contract("--precision must be at least 1")),
        Some(p) => Ok(p),
        None => Err(contract(format!("`{verb}` requires --precision"))),
    }
}

fn to_pure(v: &Value) -> CliResult<PureBraidWord> {
    match v {
        Value::Word(w) => Ok(to_pure_generators(w)?),
        Value::Band(b) => Ok(b.clone()),
        Value::Stream(..) => Err(contract("expected a finite pure braid, got a stream")),
    }
}

fn to_stream(v: &Value) -> CliResult<InfinitePureBraid> {
    match v {
        Value::Stream(s, _) => Ok(s.clone()),
        Value::Band(b) => Ok(InfinitePureBraid::embed_pure(b)),
        Value::Word(w) => Ok(InfinitePureBraid::embed_finite(w)?),
    }
}

fn to_completed(v: &Value) -> CliResult<CompletedBraid> {
    match v {
        Value::Word(w) => Ok(embed_finite_full(w)?),
        other => Ok(CompletedBraid::new(
            to_stream(other)?,
            InfPermutation::identity(),
        )),
    }
}

fn to_sigma(v: &Value) -> CliResult<BraidWord> {
    match v {
        Value::Word(w) => Ok(w.clone()),
        Value::Band(b) => Ok(b.to_sigma()),
        Value::Stream(..) => Err(contract("expected a finite braid, got a stream")),
    }
}

fn has_stream(vs: &[Value]) -> bool {
    vs.iter().any(|v| matches!(v, Value::Stream(..)))
}

fn stream_prefix(s: &InfinitePureBraid, depth: usize) -> CliResult<String> {
    Ok(s.serialize_prefix(depth)?.trim_end().to_string())
}

fn single_perm(o: &Opts) -> CliResult<InfPermutation> {
    let mut texts: Vec<String> = o.perms.clone();
    for a in &o.inputs {
        texts.push(read_arg(a)?);
    }
    match texts.as_slice() {
        [t] => Ok(InfPermutation::parse(t)?),
        _ => Err(contract(format!(
            "expected one permutation, got {}",
            texts.len()
        ))),
    }
}

fn run(cli: &Cli) -> CliResult<String> {
    match &cli.verb {
        Verb::Comb(o) => {
            let [v] = exactly::<1>(o, "comb")?;
            let p = to_pure(&v)?;
            let depth = o.strands.unwrap_or(p.strands()).max(p.strands());
            Ok(comb(&p.with_strands(depth)?, depth)?
                .to_string()
                .trim_end()
                .to_string())
        }
        Verb::Recombine(o) => {
            let [v] = exactly::<1>(o, "recombine")?;
            match v {
                Value::Stream(s, depth) => Ok(recombine(&s.prefix(depth)?).to_string()),
                _ => Err(contract(
                    "`recombine` expects combed coordinates `k1 = ...`",
                )),
            }
        }
        Verb::Mul(o) => {
            let vs = values(o)?;
            if vs.is_empty() {
                return Err(contract("`mul` needs at least one input"));
            }
            if has_stream(&vs) {
                let depth = need_depth(o, "mul")?;
                let mut acc = to_stream(&vs[0])?;
                for v in &vs[1..] {
                    acc = inf_mul(&acc, &to_stream(v)?);
                }
                return stream_prefix(&acc, depth);
            }
            if vs.iter().all(|v| matches!(v, Value::Band(_))) {
                let mut acc = to_pure(&vs[0])?;
                for v in &vs[1..] {
                    acc = acc.concat(&to_pure(v)?);
                }
                return Ok(acc.free_reduce().to_string());
            }
            let mut acc = to_sigma(&vs[0])?;
            for v in &vs[1..] {
                acc = acc.concat(&to_sigma(v)?);
            }
            Ok(acc.free_reduce().to_string())
        }
        Verb::Inv(o) => {
            let [v] = exactly::<1>(o, "inv")?;
            match &v {
                Value::Stream(s, _) => stream_prefix(&inf_inv(s), need_depth(o, "inv")?),
                Value::Band(b) => Ok(b.inverse().to_string()),
                Value::Word(w) => Ok(w.inverse().to_string()),
            }
        }
        Verb::Eq(o) => {
            let [a, b] = exactly::<2>(o, "eq")?;
            if has_stream(&[a.clone(), b.clone()]) {
                let depth = need_depth(o, "eq")?;
                let d = distance(&to_stream(&a)?, &to_stream(&b)?, DepthBudget::new(depth)?)?;
                return Ok(match d {
                    Distance::Indistinguishable { budget } => {
                        format!("true (up to depth {budget})")
                    }
                    Distance::Differ { level } => format!("false (differ at level {level})"),
                });
            }
            let equal = match (&a, &b) {
                (Value::Band(x), Value::Band(y)) => {
                    let n = x.strands().max(y.strands());
                    pure_equal(&x.with_strands(n)?, &y.with_strands(n)?)?
                }
                _ => braid_equal(&to_sigma(&a)?, &to_sigma(&b)?),
            };
            Ok(equal.to_string())
        }
        Verb::Truncate(o) => {
            let depth = need_depth(o, "truncate")?;
            let [v] = exactly::<1>(o, "truncate")?;
            Ok(to_stream(&v)?.truncate(depth)?.to_string())
        }
        Verb::Dist(o) => {
            if !o.perms.is_empty() {
                let precision = need_precision(o, "dist")?;
                let mut texts = o.perms.clone();
                for a in &o.inputs {
                    texts.push(read_arg(a)?);
                }
                let [x, y] = <[String; 2]>::try_from(texts).map_err(|t| {
                    contract(format!(
                        "`dist --perm` compares 2 permutations, got {}",
                        t.len()
                    ))
                })?;
                let (x, y) = (InfPermutation::parse(&x)?, InfPermutation::parse(&y)?);
                return Ok(perm_metric(&x, &y, precision)?.to_string());
            }
            let depth = need_depth(o, "dist")?;
            let [a, b] = exactly::<2>(o, "dist")?;
            let budget = DepthBudget::new(depth)?;
            let pure_only = [&a, &b]
                .iter()
                .all(|v| !matches!(v, Value::Word(w) if !w.is_pure()));
            if pure_only {
                return Ok(distance(&to_stream(&a)?, &to_stream(&b)?, budget)?.to_string());
            }
            let precision = need_precision(o, "dist")?;
            let d = completed_distance(&to_completed(&a)?, &to_completed(&b)?, budget, precision)?;
            Ok(d.to_string())
        }
        Verb::PermNf(o) => {
            let depth = need_depth(o, "perm-nf")?;
            Ok(normal_form(&single_perm(o)?, depth)?.to_string())
        }
        Verb::Section(o) => {
            let depth = need_depth(o, "section")?;
            Ok(section_braid(&single_perm(o)?, depth)?.to_string())
        }
        Verb::Converge(o) => {
            let depth = need_depth(o, "converge")?;
            let seq = values(o)?
                .iter()
                .map(to_completed)
                .collect::<CliResult<Vec<_>>>()?;
            Ok(match completed_converges(&seq, depth)? {
                Some(n) => n.to_string(),
                None => "not found".to_string(),
            })
        }
        Verb::Wild(o) => {
            let depth = need_depth(o, "wild")?;
            if !o.inputs.is_empty() {
                return Err(contract("`wild` takes no inputs"));
            }
            Ok(wild_braid().truncate(depth)?.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Contract(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(2)
        }
    }
}
