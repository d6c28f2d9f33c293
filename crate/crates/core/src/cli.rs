//! The `maxchain` command line.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::{self, CacheEntry};
use crate::chains::{self, chain_length_set};
use crate::corpus::{self, evaluate_criteria, RunOptions, Status};
use crate::error::{Error, Result};
use crate::group::{PermGroup, DEFAULT_CAP};
use crate::lattice::{Lattice, LatticeOptions};
use crate::speclang::{self, Selector};
use crate::structure::{self, predicate_suite, supersolvable_oracle, verify_minimal_chain_theorems};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "maxchain", version, about = "Maximal chains in finite subgroup lattices")]
pub struct Cli {
    /// Largest group order to build.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Print tables instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,
    /// Neither read nor write the lattice cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// Group spec, e.g. "A(5)", "prod(A(5), C(2))", "@order75".
    #[arg(long, short)]
    pub group: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, predicates and distinguished subgroups.
    Info(GroupArg),
    /// Subgroup lattice size; --dot prints the Hasse diagram.
    Lattice {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        dot: bool,
    },
    /// Lengths of the maximal chains from a subgroup to the whole group.
    Chains {
        #[command(flatten)]
        group: GroupArg,
        /// trivial | whole | center | derived | frattini | fitting |
        /// "gens: <cycles>" | order:<k>:<i>
        #[arg(long, short, default_value = "trivial")]
        subgroup: String,
    },
    /// Count of subgroups with maximal chains of different lengths.
    Delta(GroupArg),
    /// Check the minimal-subgroup chain theorems and the supersolvability criteria.
    Verify(GroupArg),
    /// Run the corpus manifest and the claim table.
    Corpus {
        #[arg(long, short, default_value_t = 1)]
        jobs: usize,
        /// Include the slow stretch groups.
        #[arg(long)]
        slow: bool,
        /// Manifest file; the built-in one by default.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } | Error::ChainCapExceeded { .. } => EXIT_CAP,
        Error::CacheVersion { .. }
        | Error::CacheHashMismatch
        | Error::CacheCorrupt(_)
        | Error::Io(_) => EXIT_FALSIFIED,
        _ => EXIT_USAGE,
    }
}

struct Ctx {
    cap: usize,
    human: bool,
    cache_dir: Option<PathBuf>,
}

impl Ctx {
    fn group(&self, arg: &GroupArg) -> Result<Arc<PermGroup>> {
        Ok(Arc::new(speclang::build_str(&arg.group, self.cap)?))
    }

    /// Lattice from the cache when present; a damaged cache file is an error.
    fn lattice(&self, group: Arc<PermGroup>) -> Result<Lattice> {
        let options = LatticeOptions {
            cap: Some(self.cap),
            progress: true,
        };
        let Some(dir) = &self.cache_dir else {
            return Lattice::enumerate_with(group, &options);
        };
        if let Some(l) = cache::load(dir, group.clone())? {
            return Ok(l);
        }
        let started = Instant::now();
        let lattice = Lattice::enumerate_with(group, &options)?;
        cache::store(dir, &CacheEntry::from_lattice(&lattice, started.elapsed()))?;
        Ok(lattice)
    }
}

fn emit(out: &mut dyn Write, format: &str, body: impl Serialize) -> Result<()> {
    let mut value = serde_json::to_value(body).map_err(|e| Error::Io(e.to_string()))?;
    if let Value::Object(map) = &mut value {
        map.insert("format".into(), json!(format!("maxchain.{format}/1")));
    }
    let text = serde_json::to_string_pretty(&value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

/// Runs a parsed command line, writing the report to `out`; returns the
/// exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> i32 {
    let ctx = Ctx {
        cap: cli.cap,
        human: cli.human,
        cache_dir: (!cli.no_cache).then(cache::default_cache_dir),
    };
    let result = match &cli.command {
        Command::Info(g) => info(&ctx, g, out),
        Command::Lattice { group, dot } => lattice(&ctx, group, *dot, out),
        Command::Chains { group, subgroup } => chains(&ctx, group, subgroup, out),
        Command::Delta(g) => delta(&ctx, g, out),
        Command::Verify(g) => verify(&ctx, g, out),
        Command::Corpus {
            jobs,
            slow,
            manifest,
        } => run_corpus(&ctx, *jobs, *slow, manifest.as_ref(), out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn info(ctx: &Ctx, arg: &GroupArg, out: &mut dyn Write) -> Result<i32> {
    let group = ctx.group(arg)?;
    let l = ctx.lattice(group.clone())?;
    let report = structure::structure_report(&l);
    if ctx.human {
        let p = report.predicates;
        writeln!(out, "group        {}", group.label())?;
        writeln!(out, "order        {}", report.order)?;
        writeln!(out, "degree       {}", group.degree())?;
        writeln!(out, "subgroups    {}", l.len())?;
        writeln!(out, "abelian      {}", p.abelian)?;
        writeln!(out, "nilpotent    {}", p.nilpotent)?;
        writeln!(out, "supersolv.   {}", p.supersolvable)?;
        writeln!(out, "solvable     {}", p.solvable)?;
        writeln!(out, "|Z|          {}", report.center.order)?;
        writeln!(out, "|G'|         {}", report.derived.order)?;
        writeln!(out, "|Phi|        {}", report.frattini.order)?;
        writeln!(out, "|F|          {}", report.fitting.order)?;
        let mins: Vec<usize> = report.minimal_normals.iter().map(|n| n.order).collect();
        writeln!(out, "min. normal  {mins:?}")?;
    } else {
        emit(
            out,
            "info",
            json!({
                "group": group.label(),
                "degree": group.degree(),
                "generators": group.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "subgroups": l.len(),
                "report": report,
            }),
        )?;
    }
    Ok(EXIT_PASS)
}

fn lattice(ctx: &Ctx, arg: &GroupArg, dot: bool, out: &mut dyn Write) -> Result<i32> {
    let group = ctx.group(arg)?;
    let started = Instant::now();
    let l = ctx.lattice(group.clone())?;
    let millis = started.elapsed().as_millis() as u64;
    if dot {
        write!(out, "{}", l.to_dot())?;
    } else if ctx.human {
        writeln!(out, "{}: {} subgroups, {} Hasse edges ({millis} ms)", group.label(), l.len(), l.edge_count())?;
        let classes = l.conjugacy_classes();
        writeln!(out, "{} conjugacy classes of subgroups", classes.len())?;
    } else {
        emit(
            out,
            "lattice",
            json!({
                "group": group.label(),
                "order": group.order(),
                "nodes": l.len(),
                "edges": l.edge_count(),
                "conjugacy_classes": l.conjugacy_classes().len(),
                "millis": millis,
            }),
        )?;
    }
    Ok(EXIT_PASS)
}

fn chains(ctx: &Ctx, arg: &GroupArg, selector: &str, out: &mut dyn Write) -> Result<i32> {
    let group = ctx.group(arg)?;
    let l = ctx.lattice(group.clone())?;
    let node = Selector::parse(selector)?.resolve(&l)?;
    let report = chain_length_set(&l, node)?;
    if ctx.human {
        let orders = |c: &[usize]| c.iter().map(|&x| l.order(x).to_string()).collect::<Vec<_>>().join(" < ");
        writeln!(out, "subgroup of order {} in {}", report.subject_order, group.label())?;
        writeln!(out, "lengths   {:?}", report.lengths)?;
        writeln!(out, "graded    {}", report.graded)?;
        writeln!(out, "shortest  {}", orders(&report.witness_short))?;
        writeln!(out, "longest   {}", orders(&report.witness_long))?;
    } else {
        emit(out, "chains", json!({ "group": group.label(), "selector": selector, "report": report }))?;
    }
    Ok(EXIT_PASS)
}

fn delta(ctx: &Ctx, arg: &GroupArg, out: &mut dyn Write) -> Result<i32> {
    let group = ctx.group(arg)?;
    let l = ctx.lattice(group.clone())?;
    let report = chains::delta(&l);
    let by_order = report.by_order(&l);
    if ctx.human {
        writeln!(out, "delta({}) = {}", group.label(), report.value)?;
        for (order, count) in &by_order {
            writeln!(out, "  order {order:>5}: {count}")?;
        }
    } else {
        emit(
            out,
            "delta",
            json!({
                "group": group.label(),
                "value": report.value,
                "offenders": report.offenders,
                "offenders_by_order": by_order,
            }),
        )?;
    }
    Ok(EXIT_PASS)
}

fn verify(ctx: &Ctx, arg: &GroupArg, out: &mut dyn Write) -> Result<i32> {
    let group = ctx.group(arg)?;
    let l = ctx.lattice(group.clone())?;
    let verdict = verify_minimal_chain_theorems(&l);
    let recursive = predicate_suite(&l).supersolvable;
    let (identity_graded, prime_index) = supersolvable_oracle(&l);
    let agree = identity_graded == recursive && prime_index == recursive;
    let pass = verdict.consistent() && agree;
    if ctx.human {
        writeln!(out, "group                      {}", group.label())?;
        writeln!(out, "order-2/3 atoms graded     {}", verdict.hypothesis_23)?;
        writeln!(out, "all atoms graded           {}", verdict.hypothesis_all)?;
        writeln!(out, "solvable                   {}", verdict.solvable)?;
        writeln!(out, "supersolvable              {recursive}")?;
        writeln!(out, "identity interval graded   {identity_graded}")?;
        writeln!(out, "maximals of prime index    {prime_index}")?;
        if let Some(m) = verdict.complement {
            writeln!(out, "complement to F(G)         order {}", m.order)?;
        }
        for c in &verdict.clauses {
            writeln!(out, "  {:<50} {}", c.name, if c.holds { "holds" } else { "FAILS" })?;
        }
        writeln!(out, "{}", if pass { "pass" } else { "FALSIFIED" })?;
    } else {
        emit(
            out,
            "verify",
            json!({
                "group": group.label(),
                "verdict": verdict,
                "supersolvable": {
                    "recursive": recursive,
                    "identity_graded": identity_graded,
                    "maximal_prime_index": prime_index,
                    "agree": agree,
                },
                "pass": pass,
            }),
        )?;
    }
    Ok(if pass { EXIT_PASS } else { EXIT_FALSIFIED })
}

fn run_corpus(
    ctx: &Ctx,
    jobs: usize,
    slow: bool,
    manifest: Option<&PathBuf>,
    out: &mut dyn Write,
) -> Result<i32> {
    let entries = match manifest {
        Some(path) => corpus::parse_manifest(&std::fs::read_to_string(path)?)?,
        None => corpus::builtin_manifest(),
    };
    let entries: Vec<_> = entries.into_iter().filter(|e| slow || !e.slow).collect();
    let options = RunOptions {
        cap: ctx.cap,
        cache_dir: ctx.cache_dir.clone(),
        ..RunOptions::default()
    };
    let runs = corpus::run_corpus(&entries, &options, jobs);
    let criteria = evaluate_criteria(&runs);
    let groups_pass = runs
        .iter()
        .all(|r| r.outcome.as_ref().is_ok_and(|(rep, _)| rep.passed()));
    let pass = groups_pass && criteria.iter().all(|c| c.status != Status::Fail);

    if ctx.human {
        writeln!(out, "{:<10} {:>6} {:>6} {:>6} {:>8}  result", "group", "order", "nodes", "delta", "ms")?;
        for run in &runs {
            match &run.outcome {
                Ok((r, _)) => {
                    writeln!(
                        out,
                        "{:<10} {:>6} {:>6} {:>6} {:>8}  {}",
                        r.name,
                        r.order,
                        r.nodes,
                        r.delta,
                        r.millis,
                        if r.passed() { "pass" } else { "FAIL" }
                    )?;
                    for c in r.checks.iter().filter(|c| !c.passed) {
                        writeln!(out, "    {}: {}", c.name, c.detail)?;
                    }
                }
                Err(e) => writeln!(out, "{:<10} error: {e}", run.entry.name)?,
            }
        }
        writeln!(out)?;
        for c in &criteria {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            writeln!(out, "[{status}] {:>2}. {}", c.id, c.claim)?;
            writeln!(out, "          {}", c.detail)?;
        }
    } else {
        let groups: Vec<Value> = runs
            .iter()
            .map(|run| match &run.outcome {
                Ok((r, _)) => json!({
                    "name": r.name,
                    "spec": r.spec,
                    "order": r.order,
                    "nodes": r.nodes,
                    "edges": r.edges,
                    "delta": r.delta,
                    "predicates": r.predicates,
                    "millis": r.millis,
                    "passed": r.passed(),
                    "checks": r.checks,
                }),
                Err(e) => json!({ "name": run.entry.name, "spec": run.entry.spec, "error": e.to_string() }),
            })
            .collect();
        emit(out, "corpus", json!({ "groups": groups, "criteria": criteria, "pass": pass }))?;
    }
    Ok(if pass { EXIT_PASS } else { EXIT_FALSIFIED })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut argv = vec!["maxchain", "--no-cache"];
        argv.extend_from_slice(args);
        let cli = Cli::try_parse_from(argv).unwrap();
        let mut out = Vec::new();
        let code = run(&cli, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn chains_reports_lengths() {
        let (code, out) = run_args(&["chains", "--group", "A(4)", "--subgroup", "trivial"]);
        assert_eq!(code, EXIT_PASS);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["format"], "maxchain.chains/1");
        assert_eq!(v["report"]["lengths"], json!([2, 3]));
    }

    #[test]
    fn delta_of_a5() {
        let (code, out) = run_args(&["delta", "--group", "A(5)"]);
        assert_eq!(code, EXIT_PASS);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], 16);
    }

    #[test]
    fn verify_s4_is_vacuous() {
        let (code, out) = run_args(&["verify", "--group", "S(4)"]);
        assert_eq!(code, EXIT_PASS);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"]["hypothesis_all"], false);
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(run_args(&["info", "--group", "A(5"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["info", "--group", "@nothing"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--cap", "100", "info", "--group", "S(5)"]).0, EXIT_CAP);
        assert_eq!(run_args(&["chains", "--group", "A(4)", "--subgroup", "order:7:0"]).0, EXIT_USAGE);
    }

    #[test]
    fn human_tables() {
        let (code, out) = run_args(&["--human", "info", "--group", "S(4)"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("order        24"));
        let (_, out) = run_args(&["lattice", "--group", "C(6)", "--dot"]);
        assert!(out.starts_with("digraph"));
    }
}
