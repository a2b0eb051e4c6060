//! The `tgr` command line.
//!
//! Exit codes: 0 for YES / equal, 1 for NO / unequal, 2 for usage and
//! validation errors, 3 when a search budget or size guard is exceeded.
//! Commands that decide something end their output with
//! `RESULT <YES|NO> labels=<int>`.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use tgr_core::io::{
    parse_assignment, read_cnf, read_dm, read_file, read_g, read_rm, read_tg, write_dm, write_file, write_rm, write_tg,
};
use tgr_core::{metric_matrix, verify_ranged, verify_realization, Error, Metric, Strictness, TemporalGraph};
use tgr_hardness as hardness;
use tgr_oracle::{oracle_foremost_realizable, oracle_ranged, oracle_single_label_foremost, SearchBudget, Verdict};
use tgr_realize::{
    realize_foremost, realize_ns_foremost, realize_periodic_foremost, realize_periodic_shortest,
    realize_prescribed_foremost, realize_prescribed_ns_foremost, realize_ranged_foremost, CompatSearch, Outcome,
    RangedOptions, RangedOutcome,
};

#[derive(Parser, Debug)]
#[command(name = "tgr", version, about = "Temporal graph realization of distance matrices")]
struct Cli {
    /// Worker threads for the metric engine (default: TGR_THREADS, else all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build a temporal graph whose metric matrix is M.
    Realize(RealizeArgs),
    /// Build a temporal graph whose strict foremost matrix lies in the ranges of M.
    RealizeRanged(RangedArgs),
    /// Print the metric matrix of a temporal graph.
    Metric(MetricArgs),
    /// Compare a temporal graph with a matrix.
    Verify(VerifyArgs),
    /// Exhaustive reference deciders for tiny inputs.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Instance generators.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Hardness reductions.
    #[command(subcommand)]
    Reduce(ReduceCmd),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MetricName {
    Foremost,
    Fastest,
    Shortest,
}

impl From<MetricName> for Metric {
    fn from(m: MetricName) -> Metric {
        match m {
            MetricName::Foremost => Metric::Foremost,
            MetricName::Fastest => Metric::Fastest,
            MetricName::Shortest => Metric::Shortest,
        }
    }
}

fn strictness(non_strict: bool) -> Strictness {
    if non_strict {
        Strictness::NonStrict
    } else {
        Strictness::Strict
    }
}

#[derive(Args, Debug)]
struct RealizeArgs {
    /// `foremost`, or `shortest` together with --period.
    #[arg(long, value_enum)]
    metric: MetricName,
    #[arg(long)]
    non_strict: bool,
    /// Realize by a graph with period Δ.
    #[arg(long, value_name = "Δ")]
    period: Option<u64>,
    /// Only use edges of this static graph.
    #[arg(long, value_name = "G.g")]
    prescribed: Option<PathBuf>,
    #[arg(value_name = "M.dm")]
    input: PathBuf,
    #[arg(short, long, value_name = "OUT.tg")]
    output: Option<PathBuf>,
    /// Test edge compatibility by scanning all sources instead of the index.
    #[arg(long)]
    naive: bool,
}

#[derive(Args, Debug)]
struct RangedArgs {
    #[arg(value_name = "M.rm")]
    input: PathBuf,
    #[arg(short, long, value_name = "OUT.tg")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MetricArgs {
    #[arg(long, value_enum)]
    metric: MetricName,
    #[arg(long)]
    non_strict: bool,
    /// Ignore labels after this time; also bounds the unrolling of periodic graphs.
    #[arg(long)]
    horizon: Option<u64>,
    #[arg(value_name = "G.tg")]
    input: PathBuf,
    #[arg(short, long, value_name = "OUT.dm")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_name = "G.tg")]
    graph: PathBuf,
    #[arg(value_name = "M.dm", required_unless_present = "ranged")]
    matrix: Option<PathBuf>,
    #[arg(long, value_enum, required_unless_present = "ranged")]
    metric: Option<MetricName>,
    #[arg(long)]
    non_strict: bool,
    /// Check the strict foremost matrix against ranges instead.
    #[arg(long, value_name = "M.rm", conflicts_with = "matrix")]
    ranged: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// Any number of labels per edge.
    Foremost {
        #[arg(value_name = "M.dm")]
        input: PathBuf,
        #[arg(long)]
        non_strict: bool,
        #[command(flatten)]
        common: OracleCommon,
    },
    /// At most one label per edge, strict.
    SingleLabel {
        #[arg(value_name = "M.dm")]
        input: PathBuf,
        #[command(flatten)]
        common: OracleCommon,
    },
    /// Some determination of the ranges, strict.
    Ranged {
        #[arg(value_name = "M.rm")]
        input: PathBuf,
        #[command(flatten)]
        common: OracleCommon,
    },
}

#[derive(Args, Debug)]
struct OracleCommon {
    /// Maximum number of search nodes.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
    #[arg(short, long, value_name = "OUT.tg")]
    output: Option<PathBuf>,
}

impl OracleCommon {
    fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(n) = self.budget {
            b.max_labelings = n;
            b.max_determinations = n;
        }
        b
    }
}

#[derive(Subcommand, Debug)]
enum GenCmd {
    /// Matrix whose every realization needs Θ(N²) labels.
    Lbfamily {
        #[arg(value_name = "N")]
        n: usize,
        #[arg(short, long, value_name = "OUT.dm")]
        output: Option<PathBuf>,
        /// Write the star that realizes the matrix.
        #[arg(long, value_name = "OUT.tg")]
        witness_out: Option<PathBuf>,
    },
    /// Random multicolored clique instance with biclique structure.
    Mcc {
        k: usize,
        size: usize,
        #[arg(long)]
        plant: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long, value_name = "OUT.mcc")]
        output: Option<PathBuf>,
        /// Write the planted clique.
        #[arg(long, value_name = "OUT.clq", requires = "plant")]
        witness_out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ReduceCmd {
    /// CNF to single-label strict foremost realization.
    Sat2foremost1(SatArgs),
    /// CNF to ranged strict foremost realization.
    Sat2ranged(SatArgs),
    /// CNF to shortest-path realization.
    Sat2shortest(SatArgs),
    /// Multicolored clique to fastest-path realization.
    Mcc2fastest {
        #[arg(value_name = "I.mcc")]
        input: PathBuf,
        #[arg(long, value_name = "C.clq")]
        witness: Option<PathBuf>,
        /// Emit the periodic variant; the period is written as a `# period Δ` comment.
        #[arg(long)]
        periodic: bool,
        #[arg(short, long, value_name = "OUT.dm")]
        output: Option<PathBuf>,
        #[arg(long, value_name = "OUT.tg", requires = "witness")]
        witness_out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SatArgs {
    #[arg(value_name = "F.cnf")]
    input: PathBuf,
    /// Satisfying assignment; builds and checks the matching realization.
    #[arg(long, value_name = "A.asg")]
    witness: Option<PathBuf>,
    #[arg(short, long, value_name = "OUT")]
    output: Option<PathBuf>,
    #[arg(long, value_name = "OUT.tg", requires = "witness")]
    witness_out: Option<PathBuf>,
}

enum Status {
    Done,
    Yes(usize),
    No,
    Budget,
}

type Res = Result<Status, Error>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Err(msg) = configure_threads(cli.threads) {
        eprintln!("error: {msg}");
        return 2;
    }
    match dispatch(cli.cmd) {
        Ok(Status::Done) => 0,
        Ok(Status::Yes(labels)) => {
            println!("RESULT YES labels={labels}");
            0
        }
        Ok(Status::No) => {
            println!("RESULT NO labels=0");
            1
        }
        Ok(Status::Budget) => {
            println!("budget exceeded");
            3
        }
        Err(e @ Error::Guard(_)) => {
            eprintln!("error: {e}");
            3
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn configure_threads(flag: Option<usize>) -> Result<(), String> {
    let n = match flag {
        Some(n) => n,
        None => match std::env::var("TGR_THREADS") {
            Ok(s) => s.trim().parse().map_err(|_| format!("TGR_THREADS: expected a thread count, got `{s}`"))?,
            Err(_) => return Ok(()),
        },
    };
    if n == 0 {
        return Err("--threads must be positive".into());
    }
    // A pool may already exist when `run` is called repeatedly in one process.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn usage(msg: &str) -> Error {
    Error::InvalidInput(msg.to_string())
}

fn dispatch(cmd: Cmd) -> Res {
    match cmd {
        Cmd::Realize(a) => realize(a),
        Cmd::RealizeRanged(a) => {
            let r = read_rm(&a.input)?;
            match realize_ranged_foremost(&r, RangedOptions::default())? {
                RangedOutcome::Yes { graph, determined } => {
                    println!("# determined matrix");
                    for line in write_dm(&determined).lines() {
                        println!("# {line}");
                    }
                    emit(a.output.as_deref(), &write_tg(&graph))?;
                    Ok(Status::Yes(graph.label_count()))
                }
                RangedOutcome::No => {
                    println!("no determination of the ranges is realizable");
                    Ok(Status::No)
                }
            }
        }
        Cmd::Metric(a) => {
            let g = read_tg(&a.input)?;
            let d = metric_matrix(&g, a.metric.into(), strictness(a.non_strict), a.horizon);
            emit(a.output.as_deref(), &write_dm(&d))?;
            Ok(Status::Done)
        }
        Cmd::Verify(a) => verify(a),
        Cmd::Oracle(o) => oracle(o),
        Cmd::Gen(g) => generate(g),
        Cmd::Reduce(r) => reduce(r),
    }
}

fn realize(a: RealizeArgs) -> Res {
    let strict = strictness(a.non_strict);
    match (a.metric, a.period) {
        (MetricName::Foremost, _) => {}
        (MetricName::Shortest, Some(_)) => {}
        (MetricName::Shortest, None) => {
            return Err(usage("--metric shortest is only supported together with --period"));
        }
        (MetricName::Fastest, _) => return Err(usage("--metric fastest cannot be realized by this tool")),
    }
    if a.period.is_some() && (a.non_strict || a.prescribed.is_some() || a.naive) {
        return Err(usage("--period cannot be combined with --non-strict, --prescribed or --naive"));
    }
    if a.period == Some(0) {
        return Err(usage("--period must be positive"));
    }
    let search = if a.naive { CompatSearch::Naive } else { CompatSearch::Indexed };
    let allowed = a.prescribed.as_deref().map(read_g).transpose()?;
    if a.naive && a.non_strict && allowed.is_some() {
        return Err(usage("--naive has no effect with --non-strict --prescribed"));
    }
    let d = read_dm(&a.input)?;
    let outcome = match (a.metric, a.period, &allowed, strict) {
        (MetricName::Shortest, Some(p), _, _) => realize_periodic_shortest(&d, p)?,
        (_, Some(p), _, _) => realize_periodic_foremost(&d, p)?,
        (_, None, Some(g), Strictness::Strict) => realize_prescribed_foremost(&d, g, search)?,
        (_, None, Some(g), Strictness::NonStrict) => realize_prescribed_ns_foremost(&d, g)?,
        (_, None, None, Strictness::Strict) => realize_foremost(&d, search)?,
        (_, None, None, Strictness::NonStrict) => realize_ns_foremost(&d, search)?,
    };
    match outcome {
        Outcome::Yes(g) => {
            emit(a.output.as_deref(), &write_tg(&g))?;
            Ok(Status::Yes(g.label_count()))
        }
        Outcome::No { u, w } => {
            println!("not realizable: entry ({},{}) cannot be served", u + 1, w + 1);
            Ok(Status::No)
        }
    }
}

fn verify(a: VerifyArgs) -> Res {
    let g = read_tg(&a.graph)?;
    if let Some(rm) = &a.ranged {
        if a.non_strict || a.metric.is_some_and(|m| !matches!(m, MetricName::Foremost)) {
            return Err(usage("--ranged checks the strict foremost matrix only"));
        }
        let rep = verify_ranged(&g, &read_rm(rm)?)?;
        println!("{rep}");
        return Ok(if rep.ok() { Status::Yes(rep.label_count) } else { Status::No });
    }
    let (Some(m), Some(metric)) = (a.matrix, a.metric) else {
        return Err(usage("verify needs M.dm and --metric, or --ranged M.rm"));
    };
    let rep = verify_realization(&g, &read_dm(&m)?, metric.into(), strictness(a.non_strict))?;
    println!("{rep}");
    Ok(if rep.ok() { Status::Yes(rep.label_count) } else { Status::No })
}

fn verdict(v: Verdict<TemporalGraph>, out: Option<&Path>) -> Res {
    match v {
        Verdict::Yes(g) => {
            emit(out, &write_tg(&g))?;
            Ok(Status::Yes(g.label_count()))
        }
        Verdict::No => Ok(Status::No),
        Verdict::BudgetExceeded => Ok(Status::Budget),
    }
}

fn oracle(o: OracleCmd) -> Res {
    match o {
        OracleCmd::Foremost { input, non_strict, common } => {
            let d = read_dm(&input)?;
            verdict(oracle_foremost_realizable(&d, strictness(non_strict), common.budget())?, common.output.as_deref())
        }
        OracleCmd::SingleLabel { input, common } => {
            let d = read_dm(&input)?;
            verdict(oracle_single_label_foremost(&d, common.budget())?, common.output.as_deref())
        }
        OracleCmd::Ranged { input, common } => {
            let r = read_rm(&input)?;
            let v = match oracle_ranged(&r, common.budget())? {
                Verdict::Yes((g, _)) => Verdict::Yes(g),
                Verdict::No => Verdict::No,
                Verdict::BudgetExceeded => Verdict::BudgetExceeded,
            };
            verdict(v, common.output.as_deref())
        }
    }
}

fn generate(g: GenCmd) -> Res {
    match g {
        GenCmd::Lbfamily { n, output, witness_out } => {
            let (star, d) = hardness::gen_lower_bound_family(n)?;
            emit(output.as_deref(), &write_dm(&d))?;
            if let Some(p) = witness_out {
                write_file(&p, &write_tg(&star))?;
            }
            Ok(Status::Done)
        }
        GenCmd::Mcc { k, size, plant, seed, output, witness_out } => {
            let inst = hardness::gen_mcc_instance(k, size, plant, seed)?;
            emit(output.as_deref(), &hardness::write_mcc(&inst))?;
            if let (Some(p), Some(c)) = (witness_out, &inst.planted) {
                write_file(&p, &hardness::write_clique(c))?;
            }
            Ok(Status::Done)
        }
    }
}

fn reduce(r: ReduceCmd) -> Res {
    match r {
        ReduceCmd::Sat2foremost1(a) => {
            sat(a, |f| Ok(write_dm(&hardness::reduce_sat_to_foremost_single(f)?)), hardness::witness_foremost_single)
        }
        ReduceCmd::Sat2ranged(a) => {
            sat(a, |f| Ok(write_rm(&hardness::reduce_sat_to_ranged(f)?)), hardness::witness_ranged)
        }
        ReduceCmd::Sat2shortest(a) => {
            sat(a, |f| Ok(write_dm(&hardness::reduce_sat_to_shortest(f)?)), hardness::witness_shortest)
        }
        ReduceCmd::Mcc2fastest { input, witness, periodic, output, witness_out } => {
            let inst = hardness::read_mcc(&input)?;
            let d = hardness::reduce_mcc_to_fastest(&inst)?;
            let clique = witness.as_deref().map(|p| hardness::read_clique(p, inst.graph.n())).transpose()?;
            let mut graph = clique.map(|c| hardness::witness_fastest(&inst, &c)).transpose()?;
            let mut text = write_dm(&d);
            if periodic {
                let (_, period) = hardness::lift_fastest_to_periodic(&d)?;
                text = format!("# period {period}\n{text}");
                graph = graph.map(|g| hardness::periodic_witness(&g, period)).transpose()?;
            }
            emit(output.as_deref(), &text)?;
            finish_witness(graph, witness_out.as_deref())
        }
    }
}

fn sat(
    a: SatArgs,
    matrix: impl Fn(&tgr_core::CnfFormula) -> Result<String, Error>,
    witness: impl Fn(&tgr_core::CnfFormula, &tgr_core::Assignment) -> Result<TemporalGraph, Error>,
) -> Res {
    let f = read_cnf(&a.input)?;
    let text = matrix(&f)?;
    let graph = match &a.witness {
        Some(p) => {
            let asg = parse_assignment(&read_file(p)?, p, f.num_vars())?;
            Some(witness(&f, &asg)?)
        }
        None => None,
    };
    emit(a.output.as_deref(), &text)?;
    finish_witness(graph, a.witness_out.as_deref())
}

fn finish_witness(graph: Option<TemporalGraph>, out: Option<&Path>) -> Res {
    let Some(g) = graph else { return Ok(Status::Done) };
    if let Some(p) = out {
        write_file(p, &write_tg(&g))?;
    }
    Ok(Status::Yes(g.label_count()))
}
