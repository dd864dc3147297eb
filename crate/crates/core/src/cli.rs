//! The `fwl` command line.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::fock::{apply_e, apply_f, apply_k, FockVector};
use crate::partition::{n_left, n_right, Partition};
use crate::ring::{unit_ratio, Tolerance, WeightVec};
use crate::verify::{self, render_value, Family, RunConfig};
use crate::verma::{
    ev_jantzen_closed, gram_matrix, jantzen_s_closed, jantzen_valuation, shapovalov_det_closed, JantzenEngine,
};

#[derive(Parser, Debug)]
#[command(name = "fwl", version, about = "Misra-Miwa Fock space and U_q(gl_N) verification tools")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = TolArg::Signed)]
    tolerance: TolArg,
    /// Worker threads (0: one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TolArg {
    Strict,
    Signed,
    Unit,
}

impl From<TolArg> for Tolerance {
    fn from(t: TolArg) -> Self {
        match t {
            TolArg::Strict => Tolerance::Strict,
            TolArg::Signed => Tolerance::Signed,
            TolArg::Unit => Tolerance::Unit,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fock space operators.
    Fock {
        #[command(subcommand)]
        cmd: FockCmd,
    },
    /// Box data of a partition.
    Partition {
        #[command(subcommand)]
        cmd: PartitionCmd,
    },
    /// Shapovalov determinants.
    Shapovalov {
        #[command(subcommand)]
        cmd: ShapovalovCmd,
    },
    /// Jantzen numbers and their evaluations.
    Jantzen {
        #[command(subcommand)]
        cmd: JantzenCmd,
    },
    /// Batch verification.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    E,
    F,
    K,
}

#[derive(Subcommand, Debug)]
enum FockCmd {
    Apply {
        #[arg(long, value_enum, ignore_case = true)]
        op: Op,
        #[arg(long)]
        i: u32,
        #[arg(long, default_value_t = 2)]
        ell: u32,
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
    },
}

#[derive(Subcommand, Debug)]
enum PartitionCmd {
    Stats {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long, default_value_t = 2)]
        ell: u32,
    },
}

#[derive(Subcommand, Debug)]
enum ShapovalovCmd {
    Det {
        /// Weight coordinates, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long)]
        rank: usize,
        /// Also compute the Gram determinant and compare.
        #[arg(long)]
        engine: bool,
    },
}

#[derive(Subcommand, Debug)]
enum JantzenCmd {
    Closed {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        rank: usize,
    },
    Engine {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        rank: usize,
    },
    Ev {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        k: usize,
    },
    Val {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        ell: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    FockRelations,
    Theorem51,
    Prop52,
    Lemma62,
    Lemma63,
    Prop64,
    Prop65,
    Theorem61,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    family: FamilyArg,
    /// Residue counts, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    ell: Vec<u32>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, default_value_t = 4)]
    max_size: u32,
    #[arg(long, hide = true)]
    inject_failure: bool,
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

fn parse_weight(s: &str, rank: usize) -> Result<WeightVec> {
    let coords = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Invalid(format!("bad weight coordinate {x:?}"))))
        .collect::<Result<Vec<i64>>>()?;
    if coords.len() != rank {
        return Err(Error::Invalid(format!("weight has {} coordinates, rank is {rank}", coords.len())));
    }
    Ok(WeightVec::new(coords))
}

fn check_rank(rank: usize) -> Result<()> {
    if rank < 2 {
        return Err(Error::Invalid("rank must be at least 2".into()));
    }
    Ok(())
}

fn check_ell(ell: u32) -> Result<()> {
    if ell < 2 {
        return Err(Error::Invalid("ell must be at least 2".into()));
    }
    Ok(())
}

struct Out {
    format: Format,
    text: String,
    json: serde_json::Value,
}

fn emit(format: Format, text: String, json: serde_json::Value) -> Out {
    Out { format, text, json }
}

fn fock_cmd(cmd: FockCmd, format: Format) -> Result<Out> {
    let FockCmd::Apply { op, i, ell, partition } = cmd;
    check_ell(ell)?;
    if i >= ell {
        return Err(Error::IndexOutOfRange { index: i as usize, max: ell as usize - 1 });
    }
    let x = FockVector::basis(parse_partition(&partition)?);
    let y = match op {
        Op::E => apply_e(i, &x, ell),
        Op::F => apply_f(i, &x, ell),
        Op::K => apply_k(i, &x, ell),
    };
    Ok(emit(format, y.to_string(), serde_json::to_value(&y).unwrap()))
}

fn partition_cmd(cmd: PartitionCmd, format: Format) -> Result<Out> {
    let PartitionCmd::Stats { partition, ell } = cmd;
    check_ell(ell)?;
    let lam = parse_partition(&partition)?;
    let boxes: Vec<_> =
        lam.boxes().into_iter().map(|b| json!({ "box": b, "content": b.content(), "color": b.color(ell) })).collect();
    let mut addable = Vec::new();
    let mut text = format!("partition ({lam}), size {}, {} parts, ell = {ell}\n", lam.size(), lam.len());
    text.push_str("colors by row:\n");
    for r in 1..=lam.len() {
        let row: Vec<String> =
            (1..=lam.part(r)).map(|c| crate::partition::BoxRef::new(r as u32, c).color(ell).to_string()).collect();
        text.push_str(&format!("  {}\n", row.join(" ")));
    }
    text.push_str("addable boxes:\n");
    for b in lam.addable_boxes(ell, None) {
        let nl = n_left(&lam, b, ell)?;
        let nr = n_right(&lam, b, ell)?;
        text.push_str(&format!("  {b} content {} color {} N^l {nl} N^r {nr}\n", b.content(), b.color(ell)));
        addable.push(json!({ "box": b, "content": b.content(), "color": b.color(ell), "n_left": nl, "n_right": nr }));
    }
    text.push_str("removable boxes:\n");
    let removable: Vec<_> = lam
        .removable_boxes(ell, None)
        .into_iter()
        .map(|b| {
            text.push_str(&format!("  {b} content {} color {}\n", b.content(), b.color(ell)));
            json!({ "box": b, "content": b.content(), "color": b.color(ell) })
        })
        .collect();
    let j = json!({
        "partition": lam,
        "size": lam.size(),
        "parts": lam.len(),
        "ell": ell,
        "boxes": boxes,
        "addable": addable,
        "removable": removable,
    });
    Ok(emit(format, text.trim_end().to_string(), j))
}

fn shapovalov_cmd(cmd: ShapovalovCmd, format: Format) -> Result<Out> {
    let ShapovalovCmd::Det { eta, rank, engine } = cmd;
    check_rank(rank)?;
    let eta = parse_weight(&eta, rank)?;
    let closed = shapovalov_det_closed(&eta, rank);
    let mut text = closed.to_string();
    let mut j = json!({ "eta": eta, "rank": rank, "closed": closed.to_string() });
    if engine {
        let det = match eta.neg_root_coords() {
            Some(c) if c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0) => {
                let nu: Vec<u32> = c.iter().map(|&x| x as u32).collect();
                gram_matrix(rank, &WeightVec::zero(rank), &nu)?.det
            }
            _ => crate::ring::MultiRat::one(rank),
        };
        let u = unit_ratio(&det, &closed, false)?;
        text = format!("closed: {closed}\nengine: {det}\nunit: {}", u.is_some());
        j["engine"] = json!(det.to_string());
        j["unit"] = json!(u);
    }
    Ok(emit(format, text, j))
}

fn jantzen_cmd(cmd: JantzenCmd, format: Format, tol: Tolerance) -> Result<Out> {
    match cmd {
        JantzenCmd::Closed { k, rank } => {
            check_rank(rank)?;
            if k == 0 || k > rank {
                return Err(Error::IndexOutOfRange { index: k, max: rank });
            }
            let s = jantzen_s_closed(k, rank);
            Ok(emit(format, s.to_string(), json!({ "k": k, "rank": rank, "s": s.to_string() })))
        }
        JantzenCmd::Engine { k, rank } => {
            check_rank(rank)?;
            if k == 0 || k > rank {
                return Err(Error::IndexOutOfRange { index: k, max: rank });
            }
            let s = JantzenEngine::new(rank).s(k)?;
            let closed = jantzen_s_closed(k, rank);
            let u = unit_ratio(&s, &closed, false)?;
            let agrees = u.as_ref().is_some_and(|u| tol.accepts(u));
            let text = format!("{s}\nmatches closed form ({}): {agrees}", tol.name());
            Ok(emit(format, text, json!({ "k": k, "rank": rank, "s": s.to_string(), "unit": u, "agrees": agrees })))
        }
        JantzenCmd::Ev { partition, k } => {
            let lam = parse_partition(&partition)?;
            if k == 0 {
                return Err(Error::IndexOutOfRange { index: k, max: lam.len() + 1 });
            }
            let v = ev_jantzen_closed(&lam, k);
            let text = v.as_ref().map_or_else(|| "0".to_string(), render_value);
            let j = json!({ "partition": lam, "k": k, "value": v.as_ref().map(|r| r.to_string()), "rendered": text });
            Ok(emit(format, text, j))
        }
        JantzenCmd::Val { partition, k, ell } => {
            check_ell(ell)?;
            let lam = parse_partition(&partition)?;
            if k == 0 {
                return Err(Error::IndexOutOfRange { index: k, max: lam.len() + 1 });
            }
            let v = jantzen_valuation(&lam, k, ell)?;
            let text = v.map_or_else(|| "zero".to_string(), |x| x.to_string());
            Ok(emit(format, text, json!({ "partition": lam, "k": k, "ell": ell, "valuation": v })))
        }
    }
}

fn verify_cmd(args: VerifyArgs, format: Format, tol: Tolerance, jobs: usize) -> Result<(bool, Out)> {
    let families: Vec<Family> = match args.family {
        FamilyArg::All => Family::ALL.to_vec(),
        f => vec![Family::ALL[f as usize]],
    };
    let config = RunConfig {
        ell: args.ell,
        rank: args.rank,
        max_size: args.max_size,
        tolerance: tol,
        jobs,
        inject_failure: args.inject_failure,
    };
    let report = verify::run_families(&families, &config)?;
    let text = report.to_text();
    let ok = report.all_passed();
    Ok((ok, emit(format, text.trim_end().to_string(), serde_json::to_value(&report).unwrap())))
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Invalid(_) | Error::IndexOutOfRange { .. } | Error::NotAddable { .. } | Error::RankTooSmall { .. } => 2,
        _ => 1,
    }
}

/// Run one command line; returns the exit code and everything written to stdout.
pub fn run_command<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let format = cli.format;
    let tol: Tolerance = cli.tolerance.into();
    let result = match cli.command {
        Command::Fock { cmd } => fock_cmd(cmd, format).map(|o| (true, o)),
        Command::Partition { cmd } => partition_cmd(cmd, format).map(|o| (true, o)),
        Command::Shapovalov { cmd } => shapovalov_cmd(cmd, format).map(|o| (true, o)),
        Command::Jantzen { cmd } => jantzen_cmd(cmd, format, tol).map(|o| (true, o)),
        Command::Verify(args) => verify_cmd(args, format, tol, cli.jobs),
    };
    match result {
        Ok((ok, out)) => {
            let body = match out.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).unwrap(),
            };
            (if ok { 0 } else { 1 }, body + "\n")
        }
        Err(e) => (exit_code_for(&e), format!("error: {e}\n")),
    }
}

/// Entry point for the binary: parses `std::env::args`, prints, returns the exit code.
pub fn main() -> i32 {
    let (code, out) = run_command(std::env::args_os());
    if code == 2 || out.starts_with("error:") {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    code
}
