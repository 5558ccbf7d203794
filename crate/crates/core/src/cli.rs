//! Batch command front end: computations, output formats, and the on-disk
//! result cache. The binary in `src/bin` is a thin argument-parsing wrapper
//! around [`run`], which is also what the determinism tests drive directly.

pub mod cache;

use crate::census;
use crate::error::{Error, Result};
use crate::golden::{self, format_paper_table_filtered};
use crate::json::{
    to_json_string, BnHomJson, CycleSetJson, KnHomJson,
};
use crate::perm::Degree;
use crate::shift::{enumerate_cycles, to_dot, CycleKind, CycleSet};
use crate::tower::{enumerate_hom_bn, enumerate_hom_kn, BnHom, KnHom};
use cache::Cache;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Paper,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KindFilter {
    All,
    Type1,
    Type2,
}

impl KindFilter {
    fn as_option(self) -> Option<CycleKind> {
        match self {
            KindFilter::All => None,
            KindFilter::Type1 => Some(CycleKind::TypeI),
            KindFilter::Type2 => Some(CycleKind::TypeII),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Command {
    Cycles { r: u8, kind: KindFilter },
    Extend { n: u32, r: u8 },
    Braid { n: u32, r: u8 },
    Census { n: u32, r: u8 },
    Conjecture { r: u8, n_max: u32 },
    VerifyPaper,
    Graph { r: u8 },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    pub cache_dir: Option<PathBuf>,
    pub no_cache: bool,
    /// 0 means "use the available parallelism".
    pub workers: usize,
}

impl RunConfig {
    pub fn new(command: Command, format: OutputFormat) -> Self {
        RunConfig {
            command,
            format,
            cache_dir: None,
            no_cache: false,
            workers: 0,
        }
    }
}

/// What a run produced: an exit status plus the full output text.
/// Status 0 = success, 1 = a verification or conjecture probe failed.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub status: i32,
    pub output: String,
}

fn effective_workers(w: usize) -> usize {
    if w > 0 {
        return w;
    }
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Executes one command. Output is deterministic for a fixed
/// `(command, format)` regardless of worker count or cache state.
pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(effective_workers(config.workers))
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot build worker pool: {e}")))?;
    let cache = Cache::new(config.cache_dir.clone(), config.no_cache)?;
    pool.install(|| dispatch(config, &cache))
}

fn dispatch(config: &RunConfig, cache: &Cache) -> Result<RunOutcome> {
    match config.command {
        Command::Cycles { r, kind } => {
            let cs = cached_cycles(r, cache)?;
            let output = match config.format {
                OutputFormat::Paper => format_paper_table_filtered(&cs, kind.as_option()),
                OutputFormat::Json => {
                    let mut dto = CycleSetJson::from(&cs);
                    if let Some(k) = kind.as_option() {
                        dto.cycles.retain(|c| c.kind == k);
                        dto.cycle_count = dto.cycles.len();
                        dto.total_reps = dto.cycles.iter().map(|c| c.period as u64).sum();
                    }
                    to_json_string(&dto)
                }
                OutputFormat::Dot => to_dot(&cs),
            };
            Ok(RunOutcome { status: 0, output })
        }
        Command::Graph { r } => {
            let cs = cached_cycles(r, cache)?;
            Ok(RunOutcome {
                status: 0,
                output: to_dot(&cs),
            })
        }
        Command::Extend { n, r } => {
            let hom = cached_kn(n, r, cache)?;
            let output = match config.format {
                OutputFormat::Json => to_json_string(&KnHomJson::from(&hom)),
                OutputFormat::Paper => format_extension_table(&hom),
                OutputFormat::Dot => {
                    return Err(Error::InvalidConfig(
                        "extend has no dot representation".into(),
                    ))
                }
            };
            Ok(RunOutcome { status: 0, output })
        }
        Command::Braid { n, r } => {
            let hom = cached_bn(n, r, cache)?;
            let output = match config.format {
                OutputFormat::Json => to_json_string(&BnHomJson::from(&hom)),
                OutputFormat::Paper => format_braid_table(&hom),
                OutputFormat::Dot => {
                    return Err(Error::InvalidConfig(
                        "braid has no dot representation".into(),
                    ))
                }
            };
            Ok(RunOutcome { status: 0, output })
        }
        Command::Census { n, r } => {
            let report = cached_census(n, r, cache)?;
            let output = match config.format {
                OutputFormat::Json => to_json_string(&report),
                OutputFormat::Paper => format_census_text(&report),
                OutputFormat::Dot => {
                    return Err(Error::InvalidConfig(
                        "census has no dot representation".into(),
                    ))
                }
            };
            Ok(RunOutcome { status: 0, output })
        }
        Command::Conjecture { r, n_max } => conjecture_sweep(r, n_max, config.format),
        Command::VerifyPaper => {
            let report = golden::verify_golden();
            let status = if report.all_passed() { 0 } else { 1 };
            let output = match config.format {
                OutputFormat::Json => {
                    #[derive(Serialize)]
                    struct CheckJson<'a> {
                        name: &'a str,
                        passed: bool,
                        detail: &'a str,
                    }
                    let checks: Vec<CheckJson> = report
                        .checks
                        .iter()
                        .map(|c| CheckJson {
                            name: &c.name,
                            passed: c.passed,
                            detail: &c.detail,
                        })
                        .collect();
                    to_json_string(&checks)
                }
                _ => report.render(),
            };
            Ok(RunOutcome { status, output })
        }
    }
}

fn degree_of(r: u8) -> Result<Degree> {
    Degree::new(r)
}

fn cached_cycles(r: u8, cache: &Cache) -> Result<CycleSet> {
    let d = degree_of(r)?;
    let key = cache::CacheKey::new("cycles", 3, r);
    if let Some(payload) = cache.lookup(&key) {
        if let Ok(dto) = serde_json::from_str::<CycleSetJson>(&payload) {
            if let Ok(cs) = CycleSet::try_from(&dto) {
                return Ok(cs);
            }
        }
        cache.warn_corrupt(&key);
    }
    let cs = enumerate_cycles(d);
    cache.store(&key, &to_json_string(&CycleSetJson::from(&cs)));
    Ok(cs)
}

fn cached_kn(n: u32, r: u8, cache: &Cache) -> Result<KnHom> {
    let d = degree_of(r)?;
    let key = cache::CacheKey::new("extend", n, r);
    if let Some(payload) = cache.lookup(&key) {
        if let Ok(dto) = serde_json::from_str::<KnHomJson>(&payload) {
            if let Ok(hom) = KnHom::try_from(&dto) {
                return Ok(hom);
            }
        }
        cache.warn_corrupt(&key);
    }
    let hom = enumerate_hom_kn(n, d)?;
    cache.store(&key, &to_json_string(&KnHomJson::from(&hom)));
    Ok(hom)
}

fn cached_bn(n: u32, r: u8, cache: &Cache) -> Result<BnHom> {
    let d = degree_of(r)?;
    let key = cache::CacheKey::new("braid", n, r);
    if let Some(payload) = cache.lookup(&key) {
        if let Ok(dto) = serde_json::from_str::<BnHomJson>(&payload) {
            if let Ok(hom) = BnHom::try_from(&dto) {
                return Ok(hom);
            }
        }
        cache.warn_corrupt(&key);
    }
    let hom = enumerate_hom_bn(n, d)?;
    cache.store(&key, &to_json_string(&BnHomJson::from(&hom)));
    Ok(hom)
}

fn cached_census(n: u32, r: u8, cache: &Cache) -> Result<census::CensusReport> {
    let d = degree_of(r)?;
    let key = cache::CacheKey::new("census", n, r);
    if let Some(payload) = cache.lookup(&key) {
        if let Ok(report) = serde_json::from_str::<census::CensusReport>(&payload) {
            return Ok(report);
        }
        cache.warn_corrupt(&key);
    }
    let report = census::census(n, d)?;
    cache.store(&key, &to_json_string(&report));
    Ok(report)
}

/// Extension listing, one line per distinct nontrivial `b`-sequence:
/// `[b_3, ..., b_{n-1}, [i0, i1], [i0, i1], ...]` with the carrying
/// vertices in canonical order. Level 3 falls back to the cycle table.
fn format_extension_table(hom: &KnHom) -> String {
    if hom.level() == 3 {
        let cycles: Vec<_> = hom.classes().iter().map(|c| c.cycle().clone()).collect();
        let cs = CycleSet::from_cycles(hom.degree(), cycles);
        return format_paper_table_filtered(&cs, None);
    }
    let mut groups: BTreeMap<Vec<u32>, Vec<(u32, u32)>> = BTreeMap::new();
    for class in hom.classes().iter().filter(|c| c.has_nontrivial_bseq()) {
        let bs: Vec<u32> = class.bseq().iter().map(|b| b.rank().0).collect();
        let (v0, v1) = class.cycle().canonical_vertex().ranks();
        groups.entry(bs).or_default().push((v0.0, v1.0));
    }
    let mut out = String::new();
    for (bs, vertices) in groups {
        let bs_text: Vec<String> = bs.iter().map(|b| b.to_string()).collect();
        let vs_text: Vec<String> = vertices
            .iter()
            .map(|(a, b)| format!("[{a}, {b}]"))
            .collect();
        let _ = writeln!(out, "[{}, {}]", bs_text.join(", "), vs_text.join(", "));
    }
    if out.is_empty() {
        out.push_str("no nontrivial extensions\n");
    }
    out
}

/// Braid listing, one line per class:
/// `B[i0, i1] b = [...] c = [...]` in canonical order.
fn format_braid_table(hom: &BnHom) -> String {
    let mut out = String::new();
    for class in hom.classes() {
        let (v0, v1) = class.tower().cycle().canonical_vertex().ranks();
        let bs: Vec<String> = class
            .tower()
            .bseq()
            .iter()
            .map(|b| b.rank().0.to_string())
            .collect();
        let cs: Vec<String> = class.lifts().iter().map(|c| c.rank().0.to_string()).collect();
        let _ = writeln!(
            out,
            "B[{}, {}] b = [{}] c = [{}]",
            v0.0,
            v1.0,
            bs.join(", "),
            cs.join(", ")
        );
    }
    if out.is_empty() {
        out.push_str("no braid representations\n");
    }
    out
}

fn format_census_text(report: &census::CensusReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", report.n);
    let _ = writeln!(out, "r: {}", report.degree);
    let _ = writeln!(out, "total representations: {}", report.total_reps);
    let _ = writeln!(out, "type I cycles: {}", report.type1_cycles);
    let _ = writeln!(out, "type II cycles: {}", report.type2_cycles);
    let _ = writeln!(out, "transitive representations: {}", report.transitive_reps);
    let _ = writeln!(out, "subgroups of index r: {}", report.subgroup_count);
    if let Some(holds) = report.conjecture_holds {
        let _ = writeln!(out, "conjecture holds here: {holds}");
    }
    out
}

/// Probes every `(n, r)` pair with `5 <= n <= n_max`, `2 <= r <= min(r_max, n)`
/// and prints a matrix; any FALSE cell is a counterexample and flips the
/// exit status to 1.
fn conjecture_sweep(r_max: u8, n_max: u32, format: OutputFormat) -> Result<RunOutcome> {
    degree_of(r_max)?;
    if n_max < 5 {
        return Err(Error::InvalidConfig(
            "conjecture sweep needs --n-max >= 5".into(),
        ));
    }
    let mut cells: Vec<(u32, u8, bool)> = Vec::new();
    for n in 5..=n_max {
        for r in 2..=r_max {
            if r as u32 > n {
                continue;
            }
            let holds = census::conjecture_probe(n, Degree::new(r)?)?;
            cells.push((n, r, holds));
        }
    }
    let any_false = cells.iter().any(|&(_, _, holds)| !holds);
    let output = match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Cell {
                n: u32,
                r: u8,
                holds: bool,
            }
            let rows: Vec<Cell> = cells
                .iter()
                .map(|&(n, r, holds)| Cell { n, r, holds })
                .collect();
            to_json_string(&rows)
        }
        _ => {
            let mut out = String::new();
            let _ = write!(out, "n\\r ");
            for r in 2..=r_max {
                let _ = write!(out, "{r:>6}");
            }
            out.push('\n');
            for n in 5..=n_max {
                let _ = write!(out, "{n:>4}");
                for r in 2..=r_max {
                    let cell = cells
                        .iter()
                        .find(|&&(cn, cr, _)| cn == n && cr == r)
                        .map(|&(_, _, holds)| if holds { "T" } else { "FALSE" })
                        .unwrap_or("-");
                    let _ = write!(out, "{cell:>6}");
                }
                out.push('\n');
            }
            if any_false {
                out.push_str("counterexample found\n");
            }
            out
        }
    };
    Ok(RunOutcome {
        status: if any_false { 1 } else { 0 },
        output,
    })
}
