//! `pancake`: girths, relator checks and cycle censuses of pancake graphs.
//!
//! Exit codes: 0 success, 2 invalid input, 3 a computed value disagrees with
//! the published one, 4 a search ran out of budget.

mod claims;
mod table;

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use cubic_pancake::oracle::{materialize, naive_cycle_count, naive_girth, DEFAULT_MATERIALIZE_CAP};
use cubic_pancake::walk::{DEFAULT_DEPTH_CAP, DEFAULT_MAX_VERTICES};
use cubic_pancake::{
    canonicalize, census, custom_set, family_instances, full_pancake, generates_whole_group, girth,
    girth_many, is_relator, is_simple_cycle, BsKind, CensusBudget, CensusReport, CycleForm, Error,
    Execution, Family, GeneratorSet, GirthReport, Permutation, SearchLimits, SetSpec,
};

use crate::table::{Cell, Format, Table};

const EXIT_INVALID: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_EXHAUSTED: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "pancake",
    version,
    about = "Girths and short cycles of pancake graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,

    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Vertex budget for a single girth search.
    #[arg(long, global = true, env = "PANCAKE_MAX_VERTICES", default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,

    /// BFS layers a girth search may expand.
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH_CAP)]
    depth_cap: u32,

    /// Seed for randomized runs.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SetArgs {
    /// pr, bs1..bs6, or custom (with --gens, or inline as custom:2,4,5).
    #[arg(long)]
    set: String,

    /// Reversal indices for a custom set, e.g. 4,6,7.
    #[arg(long, value_delimiter = ',')]
    gens: Option<Vec<usize>>,
}

impl SetArgs {
    fn spec(&self) -> Result<SetSpec, Failure> {
        if self.set.eq_ignore_ascii_case("custom") {
            let gens = self
                .gens
                .clone()
                .ok_or_else(|| Failure::invalid("--set custom needs --gens"))?;
            return Ok(SetSpec::Custom(gens));
        }
        if self.gens.is_some() {
            return Err(Failure::invalid("--gens only applies to --set custom"));
        }
        self.set.parse().map_err(Failure::from)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact girth of one Cayley graph, with a witness cycle.
    Girth {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        n: usize,
        /// Cross-check against the brute-force oracle (n <= 7).
        #[arg(long)]
        oracle: bool,
    },
    /// Count simple cycles of one length through the identity.
    Census {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        n: usize,
        #[arg(long = "len")]
        length: usize,
        /// Compare against the published count.
        #[arg(long)]
        expect: bool,
        /// List forms in r-notation.
        #[arg(long)]
        pretty: bool,
        /// List forms as index arrays.
        #[arg(long)]
        forms: bool,
        /// Cross-check against the brute-force oracle (n <= 6, len <= 12).
        #[arg(long)]
        oracle: bool,
        /// Walk extensions allowed before giving up.
        #[arg(long, default_value_t = 1_000_000_000)]
        budget: u64,
    },
    /// Reproduce a published table over a range of n.
    #[command(group(ArgGroup::new("which").required(true).args(["theorem1", "bs6", "conjecture", "census_check"])))]
    Table {
        /// Girths of P_n^1..P_n^5 against their closed forms.
        #[arg(long)]
        theorem1: bool,
        /// Girths of P_n^6 against the published table.
        #[arg(long)]
        bs6: bool,
        /// Girth 28 plateau of P_n^6 for n >= 19.
        #[arg(long)]
        conjecture: bool,
        /// 6-, 7-, 8-cycle counts of P_n against the closed forms.
        #[arg(long)]
        census_check: bool,
        /// Inclusive range a..b (or a single n).
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
    },
    /// Check every instance of a canonical-form family at degree n.
    VerifyForms {
        /// c6, c7, c8 (all eight), c8_1..c8_8, c10, c12 or all.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Compare the fast searches with the brute-force oracle on small graphs.
    OracleCheck {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 50)]
        random_sets: usize,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self {
            code: if e.is_exhaustion() {
                EXIT_EXHAUSTED
            } else {
                EXIT_INVALID
            },
            message: e.to_string(),
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("not a number: {t:?}"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

struct Ctx {
    format: Format,
    limits: SearchLimits,
    seed: u64,
}

impl Ctx {
    fn emit(&self, table: &Table) {
        print!("{}", table.render(self.format));
    }

    fn emit_json<T: Serialize>(&self, value: &T) {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    }
}

fn notice(msg: &str) {
    eprintln!("note: {msg}");
}

fn status(ok: bool) -> &'static str {
    if ok {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn verdict(all_ok: bool) -> u8 {
    if all_ok {
        0
    } else {
        EXIT_MISMATCH
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        configure_threads(threads);
    }
    let ctx = Ctx {
        format: cli.format,
        limits: SearchLimits {
            depth_cap: cli.depth_cap,
            max_vertices: cli.max_vertices,
        },
        seed: cli.seed,
    };
    let outcome = match cli.command {
        Command::Girth { set, n, oracle } => cmd_girth(&ctx, &set, n, oracle),
        Command::Census {
            set,
            n,
            length,
            expect,
            pretty,
            forms,
            oracle,
            budget,
        } => cmd_census(
            &ctx,
            &set,
            n,
            length,
            CensusFlags {
                expect,
                pretty,
                forms,
                oracle,
            },
            CensusBudget {
                max_extensions: budget,
            },
        ),
        Command::Table {
            theorem1,
            bs6,
            conjecture,
            census_check,
            n,
        } => {
            if theorem1 {
                cmd_theorem1(&ctx, n.unwrap_or(4..=13))
            } else if bs6 {
                cmd_bs6(&ctx, n.unwrap_or(5..=19), 5)
            } else if conjecture {
                cmd_bs6(&ctx, n.unwrap_or(19..=33), 19)
            } else {
                debug_assert!(census_check);
                cmd_census_check(&ctx, n.unwrap_or(4..=7))
            }
        }
        Command::VerifyForms { family, n } => cmd_verify_forms(&ctx, &family, n),
        Command::OracleCheck {
            n_max,
            random_sets,
            max_len,
        } => cmd_oracle_check(&ctx, n_max, random_sets, max_len),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(threads: usize) {
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
    {
        notice(&format!("could not configure thread pool: {e}"));
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(_threads: usize) {
    notice("built without the parallel feature; --threads ignored");
}

#[derive(Serialize)]
struct GirthOutput<'a> {
    set: SetSpec,
    n: usize,
    #[serde(flatten)]
    report: &'a GirthReport,
    canonical_witness: CycleForm,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<usize>,
}

fn cmd_girth(ctx: &Ctx, set: &SetArgs, n: usize, oracle: bool) -> Result<u8, Failure> {
    let gs = set.spec()?.build(n)?;
    let report = girth(&gs, &ctx.limits)?;
    let canonical = canonicalize(&report.witness)?;
    let oracle_value = if oracle {
        if n > DEFAULT_MATERIALIZE_CAP {
            return Err(Failure::invalid(format!(
                "--oracle materializes the graph and needs n <= {DEFAULT_MATERIALIZE_CAP}"
            )));
        }
        Some(naive_girth(&materialize(&gs)?)?)
    } else {
        None
    };
    let ok = oracle_value.is_none_or(|v| v == report.girth);
    match ctx.format {
        Format::Json => ctx.emit_json(&GirthOutput {
            set: gs.spec(),
            n,
            report: &report,
            canonical_witness: canonical,
            oracle: oracle_value,
        }),
        Format::Md | Format::Tsv => {
            let mut headers = vec!["set", "n", "girth", "witness", "explored", "depth"];
            if oracle {
                headers.extend(["oracle", "status"]);
            }
            let mut t = Table::new(&headers);
            let mut row: Vec<Cell> = vec![
                format!("{} {gs}", gs.spec()).into(),
                n.into(),
                report.girth.into(),
                canonical.pretty().into(),
                report.explored.into(),
                (report.depth_reached as usize).into(),
            ];
            if let Some(v) = oracle_value {
                row.extend([v.into(), status(ok).into()]);
            }
            t.push(row);
            ctx.emit(&t);
        }
    }
    Ok(verdict(ok))
}

struct CensusFlags {
    expect: bool,
    pretty: bool,
    forms: bool,
    oracle: bool,
}

#[derive(Serialize)]
struct CensusOutput<'a> {
    #[serde(flatten)]
    report: &'a CensusReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<&'static str>,
}

fn cmd_census(
    ctx: &Ctx,
    set: &SetArgs,
    n: usize,
    length: usize,
    flags: CensusFlags,
    budget: CensusBudget,
) -> Result<u8, Failure> {
    let spec = set.spec()?;
    let gs = spec.build(n)?;
    let expected = if flags.expect {
        Some(claims::census_count(&gs.spec(), n, length).ok_or_else(|| {
            Failure::invalid(format!(
                "no published count for {} at n={n}, length {length}",
                gs.spec()
            ))
        })?)
    } else {
        None
    };
    let report = census(&gs, length, &budget)?;
    let oracle = if flags.oracle {
        let id = Permutation::identity(n)?;
        Some(naive_cycle_count(&materialize(&gs)?, &id, length)?)
    } else {
        None
    };
    let ok = expected.is_none_or(|e| e == report.per_vertex)
        && oracle.is_none_or(|o| o == report.per_vertex);
    let checked = flags.expect || flags.oracle;

    match ctx.format {
        Format::Json => ctx.emit_json(&CensusOutput {
            report: &report,
            expected,
            oracle,
            status: checked.then_some(status(ok)),
        }),
        Format::Md | Format::Tsv => {
            let mut headers = vec!["set", "n", "length", "per_vertex", "total"];
            let mut row: Vec<Cell> = vec![
                gs.spec().to_string().into(),
                n.into(),
                length.into(),
                report.per_vertex.into(),
                report
                    .total
                    .map_or(Cell::Text("overflow".into()), Cell::Int),
            ];
            if flags.expect {
                headers.push("expected");
                row.push(expected.into());
            }
            if flags.oracle {
                headers.push("oracle");
                row.push(oracle.into());
            }
            if checked {
                headers.push("status");
                row.push(status(ok).into());
            }
            let mut t = Table::new(&headers);
            t.push(row);
            ctx.emit(&t);
            if flags.pretty || flags.forms {
                println!();
                for form in &report.forms {
                    if flags.pretty {
                        println!("{}", form.pretty());
                    } else {
                        println!("{}", serde_json::to_string(form).unwrap());
                    }
                }
            }
        }
    }
    Ok(verdict(ok))
}

fn cmd_theorem1(ctx: &Ctx, range: RangeInclusive<usize>) -> Result<u8, Failure> {
    const KINDS: [BsKind; 5] = [
        BsKind::Bs1,
        BsKind::Bs2,
        BsKind::Bs3,
        BsKind::Bs4,
        BsKind::Bs5,
    ];
    let mut jobs: Vec<(usize, BsKind, GeneratorSet)> = Vec::new();
    for n in range.clone() {
        for kind in KINDS {
            match cubic_pancake::bs_set(kind, n) {
                Ok(gs) => jobs.push((n, kind, gs)),
                Err(e) => notice(&format!("skipping {kind} at n={n}: {e}")),
            }
        }
    }
    let sets: Vec<GeneratorSet> = jobs.iter().map(|(_, _, gs)| gs.clone()).collect();
    let results = girth_many(&sets, &ctx.limits, Execution::default());

    let mut t = Table::new(&["n", "P1", "P2", "P3", "P4", "P5", "status"]);
    let mut all_ok = true;
    for n in range {
        let mut row: Vec<Cell> = vec![n.into()];
        let mut mismatches = Vec::new();
        let mut any = false;
        for kind in KINDS {
            let Some(pos) = jobs.iter().position(|(m, k, _)| *m == n && *k == kind) else {
                row.push(Cell::Empty);
                continue;
            };
            any = true;
            let got = results[pos].clone()?.girth;
            let expected = claims::theorem_one_girth(kind, n).expect("admitted sets have a claim");
            if got != expected {
                mismatches.push(format!("P{}: {got}≠{expected}", kind.number()));
            }
            row.push(got.into());
        }
        if !any {
            continue;
        }
        all_ok &= mismatches.is_empty();
        row.push(if mismatches.is_empty() {
            "MATCH".into()
        } else {
            format!("MISMATCH ({})", mismatches.join(", ")).into()
        });
        t.push(row);
    }
    ctx.emit(&t);
    Ok(verdict(all_ok))
}

fn cmd_bs6(ctx: &Ctx, range: RangeInclusive<usize>, min: usize) -> Result<u8, Failure> {
    let mut ns = Vec::new();
    for n in range {
        if n < min {
            notice(&format!("skipping n={n}: below {min}"));
        } else {
            ns.push(n);
        }
    }
    let sets = ns
        .iter()
        .map(|&n| cubic_pancake::bs_set(BsKind::Bs6, n))
        .collect::<Result<Vec<_>, _>>()?;
    let results = girth_many(&sets, &ctx.limits, Execution::default());
    let mut t = Table::new(&["n", "girth", "expected", "source", "status", "witness"]);
    let mut all_ok = true;
    for (&n, result) in ns.iter().zip(results) {
        let report = result?;
        let claim = claims::bs6_girth(n).expect("n >= 5");
        let ok = report.girth == claim.value();
        all_ok &= ok;
        t.push(vec![
            n.into(),
            report.girth.into(),
            claim.value().into(),
            claim.source().into(),
            status(ok).into(),
            canonicalize(&report.witness)?.pretty().into(),
        ]);
    }
    ctx.emit(&t);
    Ok(verdict(all_ok))
}

fn cmd_census_check(ctx: &Ctx, range: RangeInclusive<usize>) -> Result<u8, Failure> {
    let mut jobs = Vec::new();
    for n in range {
        if n < 4 {
            notice(&format!(
                "skipping n={n}: the 7- and 8-cycle counts start at n=4"
            ));
            continue;
        }
        for length in 6..=8 {
            jobs.push((n, length));
        }
    }
    let results = Execution::default().map(jobs.clone(), |(n, length)| {
        full_pancake(n).and_then(|gs| census(&gs, length, &CensusBudget::default()))
    });
    let mut t = Table::new(&["n", "length", "per_vertex", "expected", "status"]);
    let mut all_ok = true;
    for ((n, length), result) in jobs.into_iter().zip(results) {
        let got = result?.per_vertex;
        let expected = claims::census_count(&SetSpec::FullPancake, n, length).expect("n >= 4");
        all_ok &= got == expected;
        t.push(vec![
            n.into(),
            length.into(),
            got.into(),
            expected.into(),
            status(got == expected).into(),
        ]);
    }
    ctx.emit(&t);
    Ok(verdict(all_ok))
}

fn cmd_verify_forms(ctx: &Ctx, family: &str, n: usize) -> Result<u8, Failure> {
    let families: Vec<Family> = match family.to_ascii_lowercase().as_str() {
        "all" => Family::ALL.to_vec(),
        "c8" => Family::eight_cycle_families().collect(),
        other => vec![other.parse()?],
    };
    Permutation::identity(n)?;
    let mut t = Table::new(&["family", "params", "form", "relator", "simple", "result"]);
    let mut all_ok = true;
    let mut count = 0;
    for fam in families {
        let instances = family_instances(fam, n);
        if instances.is_empty() {
            notice(&format!(
                "{fam} has no instances at n={n} (needs n >= {})",
                fam.min_degree()
            ));
        }
        for inst in instances {
            count += 1;
            let relator = is_relator(&inst.form, n)?;
            let simple = is_simple_cycle(&inst.form, n)?;
            all_ok &= relator && simple;
            t.push(vec![
                fam.name().into(),
                inst.parameters().into(),
                inst.form.pretty().into(),
                relator.to_string().into(),
                simple.to_string().into(),
                if relator && simple { "PASS" } else { "FAIL" }.into(),
            ]);
        }
    }
    ctx.emit(&t);
    eprintln!("{count} instances checked at n={n}");
    Ok(verdict(all_ok))
}

fn cmd_oracle_check(
    ctx: &Ctx,
    n_max: usize,
    random_sets: usize,
    max_len: usize,
) -> Result<u8, Failure> {
    if !(3..=6).contains(&n_max) {
        return Err(Failure::invalid("--n-max must be within 3..=6"));
    }
    let mut sets: Vec<GeneratorSet> = (3..=n_max).map(full_pancake).collect::<Result<_, _>>()?;
    for kind in BsKind::ALL {
        sets.extend((4..=n_max).filter_map(|n| cubic_pancake::bs_set(kind, n).ok()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut drawn = 0;
    while drawn < random_sets {
        let n = rng.random_range(3..=n_max);
        let mut pool: Vec<usize> = (2..=n).collect();
        pool.shuffle(&mut rng);
        let size = rng.random_range(2..=pool.len());
        let gs = custom_set(n, &pool[..size])?;
        if generates_whole_group(&gs)? {
            sets.push(gs);
            drawn += 1;
        }
    }

    let fast = girth_many(&sets, &ctx.limits, Execution::default());
    let mut t = Table::new(&["check", "case", "fast", "naive", "status"]);
    let mut all_ok = true;
    for (gs, result) in sets.iter().zip(fast) {
        let got = result?.girth;
        let naive = naive_girth(&materialize(gs)?)?;
        all_ok &= got == naive;
        t.push(vec![
            "girth".into(),
            format!("{} {gs} n={}", gs.spec(), gs.degree()).into(),
            got.into(),
            naive.into(),
            status(got == naive).into(),
        ]);
    }
    for n in 3..=n_max.min(5) {
        let pr = full_pancake(n)?;
        let dense = materialize(&pr)?;
        let id = Permutation::identity(n)?;
        for length in 3..=max_len.min(12) {
            let got = census(&pr, length, &CensusBudget::default())?.per_vertex;
            let naive = naive_cycle_count(&dense, &id, length)?;
            all_ok &= got == naive;
            t.push(vec![
                "census".into(),
                format!("pr n={n} len={length}").into(),
                got.into(),
                naive.into(),
                status(got == naive).into(),
            ]);
        }
    }
    ctx.emit(&t);
    Ok(verdict(all_ok))
}
