//! The `permdiag` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permdiag_core::bijection::{permutation_from_partition, phi, phi_inverse};
use permdiag_core::diagram::{dominant_partition, rank_diagram, Dominance};
use permdiag_core::dyck::{
    partition_path, path_partition, psi_bjs, psi_bjs_inverse, psi_k, psi_k_inverse,
};
use permdiag_core::enumeration::{ClosedForm, Statistic, StatisticTable};
use permdiag_core::pattern::{
    avoids, avoids_132, avoids_321, avoids_shifted_via_profile, diagram_avoidance_check,
    kind_pattern, occurrences, shifted_pattern, AvoidanceKind, DEFAULT_CAP,
};
use permdiag_core::{DyckPath, Error, Partition, Permutation, Permutations};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::format;
use crate::report::verify_parallel;

/// Environment variable that overrides the enumeration cap.
pub const NMAX_ENV: &str = "PERMDIAG_NMAX";

#[derive(Parser, Debug)]
#[command(
    name = "permdiag",
    version,
    about = "Rothe diagrams, 132-avoiding permutations and Dyck paths"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,

    /// Largest n that enumeration commands accept.
    #[arg(long, env = NMAX_ENV, default_value_t = DEFAULT_CAP, global = true)]
    pub nmax: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply Φ, Φ⁻¹, Ψ_BJS, Ψ_K or the path/partition correspondence.
    Map(MapArgs),
    /// Render the Rothe diagram of a permutation.
    Diagram(DiagramArgs),
    /// Count occurrences of a pattern.
    Count(CountArgs),
    /// Decide whether a permutation avoids a pattern.
    Check(CheckArgs),
    /// Closed-form rows or statistic distributions.
    Table(TableArgs),
    /// List every permutation of size n avoiding the given patterns.
    Generate(GenerateArgs),
    /// Run the identity suite and report one line per identity and n.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "input")]
pub struct MapInput {
    /// A 321- or 132-avoiding permutation, e.g. "1 4 7 2 3 8 5 6 10 9".
    #[arg(long)]
    pub perm: Option<String>,
    /// A Dyck path over U and D.
    #[arg(long)]
    pub path: Option<String>,
    /// A partition in Y_n, e.g. "[7,7,4,3,3,3,1,1,1]"; needs --n.
    #[arg(long, requires = "n")]
    pub partition: Option<String>,
}

#[derive(Args, Debug)]
pub struct MapArgs {
    #[command(flatten)]
    pub input: MapInput,
    #[arg(long)]
    pub n: Option<usize>,
    /// Treat --perm as a 132-avoider and apply Φ⁻¹ even if it also avoids 321.
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Args, Debug)]
pub struct DiagramArgs {
    #[arg(long)]
    pub perm: String,
    /// Show ranks instead of '#'.
    #[arg(long)]
    pub ranks: bool,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long)]
    pub perm: String,
    #[arg(long)]
    pub pattern: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Bruteforce,
    Diagram,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub perm: String,
    #[arg(long)]
    pub pattern: String,
    /// `diagram` needs a 132-avoiding permutation and a pattern of the form
    /// k…1, 1…k, 213…k or s(s+1)…k1…(s-1).
    #[arg(long, value_enum, default_value_t = Via::Bruteforce)]
    pub via: Via,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "what")]
pub struct TableWhat {
    /// catalan, narayana, ballot, rank_count or q_triangle.
    #[arg(long)]
    pub formula: Option<String>,
    /// des, exc, returns, durfee_rank, rtl_maxima, fixed_shift, corners or diagonal_corners.
    #[arg(long)]
    pub stat: Option<String>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub what: TableWhat,
    #[arg(long)]
    pub n: usize,
    /// Single entry of a formula row.
    #[arg(long)]
    pub k: Option<usize>,
    /// Patterns defining the class for --stat; defaults to "1 3 2".
    #[arg(long)]
    pub avoid: Vec<String>,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub avoid: Vec<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,
}

/// Failure modes of a command, mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` and runs the command. Returns the exit code:
/// 0 on success, 1 when verification reports a failure, 2 on bad input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_out = !e.use_stderr();
            let text = e.render().to_string();
            let _ = if to_out {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return if to_out { 0 } else { 2 };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let json = cli.format == OutputFormat::Json;
    match &cli.command {
        Command::Map(a) => map(a, json, out),
        Command::Diagram(a) => diagram(a, json, out),
        Command::Count(a) => count(a, json, out),
        Command::Check(a) => check(a, json, out),
        Command::Table(a) => table(a, cli.nmax, json, out),
        Command::Generate(a) => generate(a, cli.nmax, json, out),
        Command::Verify(a) => verify(a, cli.nmax, json, out, err),
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Outcome {
    writeln!(
        out,
        "{}",
        serde_json::to_string(v).expect("values serialize")
    )?;
    Ok(())
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    s.parse()
        .map_err(|e: Error| Failure::Usage(format!("--perm {s:?}: {e}")))
}

fn parse_pattern(s: &str) -> Result<Permutation, Failure> {
    s.parse()
        .map_err(|e: Error| Failure::Usage(format!("pattern {s:?}: {e}")))
}

fn check_cap(n: usize, cap: usize) -> Result<(), Failure> {
    if n > cap {
        return Err(Error::SizeTooLarge { n, cap }.into());
    }
    Ok(())
}

/// The three views of one Catalan object: a 321-avoider, the matching
/// 132-avoider, and their common path and partition.
struct Mapped {
    direction: &'static str,
    input: Value,
    p321: Permutation,
    p132: Permutation,
    partition: Partition,
    path: DyckPath,
}

fn map(a: &MapArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let m = if let Some(s) = &a.input.perm {
        let p = parse_perm(s)?;
        if !a.inverse && avoids_321(&p) {
            let image = phi(&p)?;
            let partition = dominant_partition(&image)
                .partition()
                .expect("image avoids 132");
            Mapped {
                direction: "phi",
                input: format::permutation_to_json(&p),
                path: psi_bjs(&p)?,
                p321: p,
                p132: image,
                partition,
            }
        } else if avoids_132(&p) {
            let partition = dominant_partition(&p).partition().expect("132-avoider");
            Mapped {
                direction: "phi_inverse",
                input: format::permutation_to_json(&p),
                path: psi_k(&p)?,
                p321: phi_inverse(&p)?,
                p132: p,
                partition,
            }
        } else {
            return Err(Failure::Usage(format!("{p} avoids neither 321 nor 132")));
        }
    } else if let Some(s) = &a.input.path {
        let path: DyckPath = s.parse()?;
        if a.n.is_some_and(|n| n != path.n()) {
            return Err(Failure::Usage("--n disagrees with the path length".into()));
        }
        Mapped {
            direction: "path",
            input: json!(path.to_string()),
            p321: psi_bjs_inverse(&path)?,
            p132: psi_k_inverse(&path)?,
            partition: path_partition(&path),
            path,
        }
    } else {
        let s = a
            .input
            .partition
            .as_deref()
            .expect("clap enforces one input");
        let n = a.n.expect("clap enforces --n");
        let lam: Partition = s.parse()?;
        let p132 = permutation_from_partition(&lam, n)?;
        Mapped {
            direction: "partition",
            input: format::partition_to_json(&lam),
            p321: phi_inverse(&p132)?,
            path: partition_path(&lam, n)?,
            p132,
            partition: lam,
        }
    };
    if json {
        return emit_json(
            out,
            &json!({
                "direction": m.direction,
                "input": m.input,
                "avoider_321": format::permutation_to_json(&m.p321),
                "avoider_132": format::permutation_to_json(&m.p132),
                "partition": format::partition_to_json(&m.partition),
                "path": format::path_to_json(&m.path),
            }),
        );
    }
    match m.direction {
        "phi" => writeln!(out, "phi: {}", m.p132)?,
        "phi_inverse" => writeln!(out, "phi_inverse: {}", m.p321)?,
        _ => {
            writeln!(out, "avoider_321: {}", m.p321)?;
            writeln!(out, "avoider_132: {}", m.p132)?;
        }
    }
    writeln!(out, "partition: {}", m.partition)?;
    writeln!(out, "path: {}", m.path)?;
    Ok(())
}

fn diagram(a: &DiagramArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let p = parse_perm(&a.perm)?;
    let r = rank_diagram(&p);
    let dom = dominant_partition(&p);
    if json {
        let mut v = format::diagram_to_json(&r);
        v["perm"] = format::permutation_to_json(&p);
        v["dominant"] = match &dom {
            Dominance::Dominant(l) => format::partition_to_json(l),
            Dominance::NotDominant { .. } => Value::Null,
        };
        v["count_132"] = json!(r.rank_sum());
        return emit_json(out, &v);
    }
    write!(out, "{}", format::ascii_diagram(&p, &r, a.ranks))?;
    writeln!(out, "cells: {}", r.base.len())?;
    let mut ess = String::new();
    for c in &r.essential {
        let _ = write!(ess, " {c}");
    }
    writeln!(out, "essential:{ess}")?;
    match dom {
        Dominance::Dominant(l) => writeln!(out, "dominant: {l}")?,
        Dominance::NotDominant { witness } => writeln!(out, "not dominant, witness {witness}")?,
    }
    if a.ranks {
        writeln!(out, "count_132: {}", r.rank_sum())?;
    }
    Ok(())
}

fn count(a: &CountArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let p = parse_perm(&a.perm)?;
    let q = parse_pattern(&a.pattern)?;
    let c = occurrences(&p, &q);
    if json {
        return emit_json(
            out,
            &json!({ "perm": p.to_string(), "pattern": q.to_string(), "occurrences": c }),
        );
    }
    writeln!(out, "{c}")?;
    Ok(())
}

/// The corner or profile criterion for `q`, if it has one.
fn diagram_criterion(p: &Permutation, q: &Permutation) -> Result<bool, Failure> {
    let k = q.len();
    if k >= 3 {
        for kind in AvoidanceKind::ALL {
            if kind_pattern(kind, k).as_ref() == Ok(q) {
                return Ok(diagram_avoidance_check(p, k, kind)?);
            }
        }
    }
    if k >= 2 {
        for s in 2..=k {
            if shifted_pattern(s, k).as_ref() == Ok(q) {
                return Ok(avoids_shifted_via_profile(p, s, k)?);
            }
        }
    }
    Err(Failure::Usage(format!(
        "no diagram criterion for the pattern {q}"
    )))
}

fn check(a: &CheckArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let p = parse_perm(&a.perm)?;
    let q = parse_pattern(&a.pattern)?;
    let avoids_q = match a.via {
        Via::Bruteforce => avoids(&p, std::slice::from_ref(&q)),
        Via::Diagram => diagram_criterion(&p, &q)?,
    };
    if json {
        let via = match a.via {
            Via::Bruteforce => "bruteforce",
            Via::Diagram => "diagram",
        };
        return emit_json(
            out,
            &json!({ "perm": p.to_string(), "pattern": q.to_string(), "via": via, "avoids": avoids_q }),
        );
    }
    writeln!(out, "{}", if avoids_q { "avoids" } else { "contains" })?;
    Ok(())
}

fn class_patterns(avoid: &[String]) -> Result<Vec<Permutation>, Failure> {
    if avoid.is_empty() {
        return Ok(vec![parse_pattern("1 3 2")?]);
    }
    avoid.iter().map(|s| parse_pattern(s)).collect()
}

/// The class of size `n` avoiding `pats`, enumerated in parallel blocks and
/// returned in lexicographic order.
fn par_class(n: usize, pats: &[Permutation]) -> Vec<Permutation> {
    (1..=n)
        .into_par_iter()
        .flat_map_iter(|first| Permutations::with_first(n, first).filter(|p| avoids(p, pats)))
        .collect()
}

fn table(a: &TableArgs, cap: usize, json: bool, out: &mut dyn Write) -> Outcome {
    if let Some(name) = &a.what.formula {
        let form: ClosedForm = name.parse()?;
        let row: Vec<(usize, String)> = match (form.arity(), a.k) {
            (1, _) => vec![(a.n, form.eval(&[a.n])?.to_string())],
            (_, Some(k)) => vec![(k, form.eval(&[a.n, k])?.to_string())],
            (_, None) => form
                .row(a.n)
                .into_iter()
                .map(|(k, v)| (k, v.to_string()))
                .collect(),
        };
        if json {
            let values: serde_json::Map<String, Value> =
                row.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            return emit_json(
                out,
                &json!({ "formula": form.name(), "n": a.n, "values": values }),
            );
        }
        for (k, v) in row {
            writeln!(out, "{k} {v}")?;
        }
        return Ok(());
    }
    let name = a
        .what
        .stat
        .as_deref()
        .expect("clap enforces one of --formula/--stat");
    let stat: Statistic = name.parse()?;
    check_cap(a.n, cap)?;
    let pats = class_patterns(&a.avoid)?;
    let values = par_class(a.n, &pats)
        .par_iter()
        .map(|p| stat.eval(p))
        .collect::<Result<Vec<_>, _>>()?;
    let t: StatisticTable = values.into_iter().collect();
    if json {
        let mut v = format::table_to_json(&t);
        v["statistic"] = json!(stat.name());
        v["n"] = json!(a.n);
        v["avoid"] = json!(pats.iter().map(|p| p.to_string()).collect::<Vec<_>>());
        return emit_json(out, &v);
    }
    for (v, c) in t.iter() {
        writeln!(out, "{v} {c}")?;
    }
    writeln!(out, "total {}", t.total())?;
    Ok(())
}

fn generate(a: &GenerateArgs, cap: usize, json: bool, out: &mut dyn Write) -> Outcome {
    check_cap(a.n, cap)?;
    let pats = class_patterns(&a.avoid)?;
    let class = par_class(a.n, &pats);
    if json {
        let list: Vec<Value> = class.iter().map(format::permutation_to_json).collect();
        return emit_json(
            out,
            &json!({ "n": a.n, "count": class.len(), "permutations": list }),
        );
    }
    for p in &class {
        writeln!(out, "{p}")?;
    }
    Ok(())
}

fn verify(
    a: &VerifyArgs,
    cap: usize,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    check_cap(a.n_max, cap.max(14))?;
    let report = verify_parallel(a.n_max);
    if json {
        let lines: Vec<Value> = report
            .outcomes
            .iter()
            .map(format::outcome_to_json)
            .collect();
        emit_json(
            out,
            &json!({ "n_max": a.n_max, "passed": report.passed(), "identities": lines }),
        )?;
    } else {
        write!(out, "{report}")?;
    }
    let failed = report.failures().count();
    writeln!(err, "{} checks, {failed} failed", report.outcomes.len())?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
