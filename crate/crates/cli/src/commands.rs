use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use fblow_core::blowup::{
    classify_blocks, fblowup, rees, villamayor_ideal, villamayor_of_blocks, BlockSummary, FractionalIdealRep,
};
use fblow_core::frobenius::pushforward;
use fblow_core::modpres::{block_decompose, graded_isomorphic, module_rank, prune, PresentedModule};
use fblow_core::{Config, Error};
use rayon::prelude::*;

use crate::catalog::{self, Entry};
use crate::dossier::{module_doc, rees_doc, strings, ChecksDoc, ComparisonDoc, Dossier, StatusDoc};
use crate::error::CliError;
use crate::spec::{build_matrix, load_matrix, parse_list, RingSpec};

/// Environment variable holding a global wall-clock budget in seconds.
pub const BUDGET_ENV: &str = "FBLOW_BUDGET_SECONDS";

#[derive(Debug, Parser)]
#[command(
    name = "fblow",
    version,
    about = "Frobenius pushforwards and F-blowups of surfaces over prime fields"
)]
pub struct Cli {
    /// Seed for randomized minor sampling.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Record per-stage wall-clock times in the dossier.
    #[arg(long, global = true)]
    pub timings: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pruned presentation of F^e_* R with its block decomposition.
    Push {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Villamayor ideal of F^e_* R or of a module read from a matrix file.
    Villamayor {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long, required_unless_present = "module", conflicts_with = "module")]
        e: Option<u32>,
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rees algebra of an ideal given as comma-separated generators.
    Rees {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full F-blowup dossier.
    Fblowup {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Prune and decompose a module, comparing its blocks pairwise.
    Decompose {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the built-in surfaces, export them, or run them all.
    Catalog {
        #[arg(long)]
        run_all: bool,
        #[arg(long, default_value_t = 1)]
        e: u32,
        /// Entries run at once.
        #[arg(long)]
        jobs: Option<usize>,
        /// Only these entries (comma-separated ids).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Directory for dossiers, or for ring and matrix files with --export.
        #[arg(long, default_value = "catalog-out")]
        out_dir: PathBuf,
        /// Write each entry's ring and companion matrices as JSON files.
        #[arg(long, conflicts_with = "run_all")]
        export: bool,
    },
}

/// Run configuration: seed from `--seed`, deadline from the environment.
pub fn config(seed: Option<u64>, budget_seconds: Option<&str>) -> Result<Config, CliError> {
    let mut cfg = Config::default();
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if let Some(text) = budget_seconds {
        let secs: f64 = text
            .trim()
            .parse()
            .ok()
            .filter(|s: &f64| s.is_finite() && *s > 0.0)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "{BUDGET_ENV} must be a positive number of seconds, got `{text}`"
                ))
            })?;
        cfg.budget = cfg.budget.with_timeout(Duration::from_secs_f64(secs));
    }
    Ok(cfg)
}

struct Clock {
    start: Instant,
    laps: Option<BTreeMap<String, u64>>,
}

impl Clock {
    fn new(enabled: bool) -> Self {
        Self {
            start: Instant::now(),
            laps: enabled.then(BTreeMap::new),
        }
    }

    fn lap(&mut self, stage: &str) {
        if let Some(l) = &mut self.laps {
            l.insert(stage.to_string(), self.start.elapsed().as_millis() as u64);
        }
    }

    fn finish(mut self, d: &mut Dossier) {
        self.lap("total");
        d.timings = self.laps;
    }
}

/// Budget errors mark the dossier incomplete and yield `None`.
fn partial<T>(d: &mut Dossier, r: fblow_core::Result<T>) -> Result<Option<T>, CliError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_budget() => {
            d.status = StatusDoc::incomplete(&e.to_string());
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

/// Pushforward, its rank and classified blocks, stopping at the first budget error.
fn push_and_classify(
    spec: &RingSpec,
    e: u32,
    cfg: &Config,
    d: &mut Dossier,
) -> Result<Option<Vec<BlockSummary>>, CliError> {
    let ring = spec.build(&cfg.budget)?;
    let Some(push) = partial(d, pushforward(&PresentedModule::free(&ring, 1), e, cfg))? else {
        return Ok(None);
    };
    let rank = partial(d, module_rank(&push, cfg))?;
    let mut blocks = None;
    if rank.is_some() {
        if let Some(parts) = partial(d, block_decompose(&push, cfg))? {
            blocks = partial(d, classify_blocks(parts, cfg))?;
        }
    }
    d.pushforward = Some(module_doc(&push, rank, blocks.as_deref().unwrap_or(&[])));
    Ok(blocks)
}

pub fn push(spec: &RingSpec, e: u32, cfg: &Config, timings: bool) -> Result<Dossier, CliError> {
    let clock = Clock::new(timings);
    let mut d = Dossier::new("push", spec, Some(e), cfg.seed);
    push_and_classify(spec, e, cfg, &mut d)?;
    clock.finish(&mut d);
    Ok(d)
}

pub fn villamayor_e(spec: &RingSpec, e: u32, cfg: &Config, timings: bool) -> Result<Dossier, CliError> {
    let mut clock = Clock::new(timings);
    let mut d = Dossier::new("villamayor", spec, Some(e), cfg.seed);
    if let Some(blocks) = push_and_classify(spec, e, cfg, &mut d)? {
        clock.lap("pushforward");
        let ring = spec.build(&cfg.budget)?;
        if let Some(ideal) = partial(&mut d, villamayor_of_blocks(&ring, &blocks, cfg))? {
            d.villamayor = Some(strings(ideal.generators()));
        }
    }
    clock.finish(&mut d);
    Ok(d)
}

pub fn villamayor_module(
    spec: &RingSpec,
    matrix: &[Vec<String>],
    cfg: &Config,
    timings: bool,
) -> Result<Dossier, CliError> {
    let clock = Clock::new(timings);
    let mut d = Dossier::new("villamayor", spec, None, cfg.seed);
    let ring = spec.build(&cfg.budget)?;
    let module = PresentedModule::new(build_matrix(&ring, matrix)?);
    let rank = partial(&mut d, module_rank(&module, cfg))?;
    d.module = Some(module_doc(&module, rank, &[]));
    if rank.is_some() {
        if let Some(ideal) = partial(&mut d, villamayor_ideal(&module, cfg))? {
            d.villamayor = Some(strings(ideal.generators()));
        }
    }
    clock.finish(&mut d);
    Ok(d)
}

pub fn rees_cmd(spec: &RingSpec, ideal: &str, cfg: &Config, timings: bool) -> Result<Dossier, CliError> {
    let clock = Clock::new(timings);
    let mut d = Dossier::new("rees", spec, None, cfg.seed);
    let ring = spec.build(&cfg.budget)?;
    let gens = parse_list(&ring, ideal)?;
    let ideal = FractionalIdealRep::new(&ring, gens)?;
    if let Some(p) = partial(&mut d, rees(&ideal, cfg))? {
        d.rees = Some(rees_doc(&p));
    }
    clock.finish(&mut d);
    Ok(d)
}

pub fn fblowup_cmd(command: &str, spec: &RingSpec, e: u32, cfg: &Config, timings: bool) -> Result<Dossier, CliError> {
    let clock = Clock::new(timings);
    let ring = spec.build(&cfg.budget)?;
    let report = fblowup(&ring, e, cfg)?;
    let mut d = Dossier::new(command, spec, Some(e), cfg.seed);
    d.fill_from_report(&report);
    clock.finish(&mut d);
    Ok(d)
}

pub fn decompose(spec: &RingSpec, matrix: &[Vec<String>], cfg: &Config, timings: bool) -> Result<Dossier, CliError> {
    let clock = Clock::new(timings);
    let mut d = Dossier::new("decompose", spec, None, cfg.seed);
    let ring = spec.build(&cfg.budget)?;
    let module = PresentedModule::new(build_matrix(&ring, matrix)?);
    let Some(pruned) = partial(&mut d, prune(&module, cfg))? else {
        return Ok(d);
    };
    let rank = partial(&mut d, module_rank(&pruned, cfg))?;
    let mut blocks = Vec::new();
    if rank.is_some() {
        if let Some(parts) = partial(&mut d, block_decompose(&pruned, cfg))? {
            blocks = partial(&mut d, classify_blocks(parts, cfg))?.unwrap_or_default();
        }
    }
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let (a, b) = (&blocks[i], &blocks[j]);
            let same = a.signature.is_some() && a.signature == b.signature;
            let isomorphic = if !same {
                (a.signature.is_some() && b.signature.is_some()).then_some(false)
            } else if a.class == b.class {
                Some(true)
            } else {
                partial(&mut d, graded_isomorphic(&a.module, &b.module, cfg))?.flatten()
            };
            d.comparisons.push(ComparisonDoc {
                blocks: [i, j],
                same_signature: same,
                isomorphic,
            });
        }
    }
    d.module = Some(module_doc(&pruned, rank, &blocks));
    clock.finish(&mut d);
    Ok(d)
}

/// One catalog entry: its F-blowup dossier, checked when `e = 1`.
pub fn run_entry(entry: &Entry, e: u32, cfg: &Config, timings: bool) -> Result<Dossier, CliError> {
    let mut d = fblowup_cmd("catalog", &entry.spec, e, cfg, timings)?;
    if e == 1 {
        let failures = catalog::check(entry, &d, cfg)?;
        d.checks = Some(ChecksDoc {
            passed: failures.is_empty(),
            failures,
        });
    }
    Ok(d)
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    {
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(text.as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
    }
    fs::rename(&tmp, path).map_err(io)
}

/// Outcome of one catalog entry in a batch run.
#[derive(Debug)]
pub struct EntryOutcome {
    pub id: String,
    pub result: Result<Dossier, CliError>,
}

impl EntryOutcome {
    pub fn line(&self) -> String {
        match &self.result {
            Err(e) => format!("{}: error: {e}", self.id),
            Ok(d) => {
                let state = if d.is_complete() { "complete" } else { "incomplete" };
                match &d.checks {
                    Some(c) if !c.passed => format!("{}: {state}, FAILED: {}", self.id, c.failures.join("; ")),
                    Some(_) => format!("{}: {state}, checks passed", self.id),
                    None => format!("{}: {state}", self.id),
                }
            }
        }
    }
}

pub fn run_catalog(
    entries: &[Entry],
    e: u32,
    jobs: Option<usize>,
    out_dir: &Path,
    cfg: &Config,
    timings: bool,
) -> Result<Vec<EntryOutcome>, CliError> {
    fs::create_dir_all(out_dir).map_err(|err| CliError::Io(format!("{}: {err}", out_dir.display())))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|err| CliError::Usage(err.to_string()))?;
    let outcomes: Vec<EntryOutcome> = pool.install(|| {
        entries
            .par_iter()
            .map(|entry| {
                let result = run_entry(entry, e, cfg, timings).and_then(|d| {
                    write_atomic(&out_dir.join(format!("{}.json", entry.id)), &d.to_json())?;
                    Ok(d)
                });
                EntryOutcome {
                    id: entry.id.clone(),
                    result,
                }
            })
            .collect()
    });
    Ok(outcomes)
}

fn selected(only: &[String]) -> Result<Vec<Entry>, CliError> {
    let all = catalog::entries();
    if only.is_empty() {
        return Ok(all);
    }
    only.iter()
        .map(|id| {
            all.iter()
                .find(|e| &e.id == id)
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("no catalog entry `{id}`")))
        })
        .collect()
}

fn export(entries: &[Entry], dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|err| CliError::Io(format!("{}: {err}", dir.display())))?;
    for e in entries {
        let text = serde_json::to_string_pretty(&e.spec).expect("ring spec serializes") + "\n";
        write_atomic(&dir.join(format!("{}.json", e.id)), &text)?;
        for c in &e.companions {
            let text = serde_json::to_string_pretty(&c.matrix()).expect("matrix serializes") + "\n";
            write_atomic(&dir.join(format!("{}-{}.json", e.id, c.name)), &text)?;
        }
    }
    Ok(())
}

fn listing(entries: &[Entry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!(
            "{:<10} {:<40} F_{}: {}",
            e.id,
            e.title,
            e.spec.characteristic,
            e.spec.relations.join(", ")
        ));
        if let Some(dup) = e.duplicate_of {
            out.push_str(&format!("  (same ring as {dup})"));
        }
        if !e.companions.is_empty() {
            let names: Vec<&str> = e.companions.iter().map(|c| c.name).collect();
            out.push_str(&format!("  [matrices: {}]", names.join(", ")));
        }
        out.push('\n');
    }
    out
}

fn emit(d: &Dossier, out: Option<&Path>) -> Result<(), CliError> {
    let text = d.to_json();
    match out {
        Some(p) => write_atomic(p, &text)?,
        None => print!("{text}"),
    }
    match &d.status.reason {
        Some(r) if !d.is_complete() => Err(CliError::Incomplete(r.clone())),
        _ => Ok(()),
    }
}

/// Runs a parsed command line.
pub fn run(cli: Cli, budget_seconds: Option<&str>) -> Result<(), CliError> {
    let cfg = config(cli.seed, budget_seconds)?;
    let t = cli.timings;
    match cli.command {
        Command::Push { ring, e, out } => emit(&push(&RingSpec::load(&ring)?, e, &cfg, t)?, out.as_deref()),
        Command::Villamayor { ring, e, module, out } => {
            let spec = RingSpec::load(&ring)?;
            let d = match (e, module) {
                (Some(e), None) => villamayor_e(&spec, e, &cfg, t)?,
                (None, Some(m)) => villamayor_module(&spec, &load_matrix(&m)?, &cfg, t)?,
                _ => return Err(CliError::Usage("give exactly one of --e and --module".into())),
            };
            emit(&d, out.as_deref())
        }
        Command::Rees { ring, ideal, out } => {
            emit(&rees_cmd(&RingSpec::load(&ring)?, &ideal, &cfg, t)?, out.as_deref())
        }
        Command::Fblowup { ring, e, out } => emit(
            &fblowup_cmd("fblowup", &RingSpec::load(&ring)?, e, &cfg, t)?,
            out.as_deref(),
        ),
        Command::Decompose { ring, matrix, out } => {
            let spec = RingSpec::load(&ring)?;
            emit(&decompose(&spec, &load_matrix(&matrix)?, &cfg, t)?, out.as_deref())
        }
        Command::Catalog {
            run_all,
            e,
            jobs,
            only,
            out_dir,
            export: do_export,
        } => {
            let entries = selected(&only)?;
            if do_export {
                return export(&entries, &out_dir);
            }
            if !run_all {
                print!("{}", listing(&entries));
                return Ok(());
            }
            if e == 0 {
                return Err(Error::InvalidArgument("the Frobenius power e must be at least 1".into()).into());
            }
            let outcomes = run_catalog(&entries, e, jobs, &out_dir, &cfg, t)?;
            for o in &outcomes {
                println!("{}", o.line());
            }
            catalog_status(&outcomes)
        }
    }
}

/// Failed checks or errors dominate budget flags.
fn catalog_status(outcomes: &[EntryOutcome]) -> Result<(), CliError> {
    let failed = outcomes.iter().find_map(|o| match &o.result {
        Err(e) => Some(CliError::Core(Error::Invariant(format!("{}: {e}", o.id)))),
        Ok(d) if d.checks.as_ref().is_some_and(|c| !c.passed) => Some(CliError::Core(Error::Invariant(format!(
            "{}: catalog checks failed",
            o.id
        )))),
        _ => None,
    });
    if let Some(err) = failed {
        return Err(err);
    }
    match outcomes
        .iter()
        .find(|o| o.result.as_ref().is_ok_and(|d| !d.is_complete()))
    {
        Some(o) => Err(CliError::Incomplete(format!("{} ran out of budget", o.id))),
        None => Ok(()),
    }
}
