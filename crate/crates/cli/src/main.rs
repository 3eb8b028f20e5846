use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use equifacet::combinat::{
    automorphisms, load_catalog, orbit_representatives, prune, BuiltinCatalog,
    EliminationVerdict, PolytopeGraph,
};
use equifacet::geom::{asymptotic_bounds, known_maxima, Realization};
use equifacet::realize::{optimize_sphere, verify_theorem, CandidateStatus, OptimizerConfig, RealizeError};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Parser)]
#[command(name = "equifacet", version, about = "Largest equifacetal polytopes inscribed in the unit sphere")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Known maxima next to optimizer values and the asymptotic bounds.
    Table {
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        out: Output,
    },
    /// Run the coloring pruner over a catalog.
    Prune {
        /// Catalog file. The names of the shipped catalogs also resolve
        /// (warmup.catalog, k7.catalog, k8.catalog).
        #[arg(long)]
        catalog: PathBuf,
        /// Only this class label.
        #[arg(long)]
        class: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Reproduce the maximum over the equifacetal polytopes with k vertices (7 or 8).
    Verify {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Maximize hull area over k points on the sphere.
    Optimize {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        budget: Budget,
        /// Weight of the facet-congruence penalty (0 for plain area).
        #[arg(long, default_value_t = 0.0)]
        penalty: f64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Clone)]
struct Budget {
    #[arg(long, default_value_t = 64)]
    restarts: usize,
    /// Moves per restart. Defaults to 4000, or 10000 when a penalty is set.
    #[arg(long)]
    iters: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Clone)]
struct Output {
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write `K,value,lower_aK,upper_bK` rows here.
    #[arg(long)]
    emit_bounds_csv: Option<PathBuf>,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs_digest: String,
    seed: Option<u64>,
    results: Value,
    best: Option<Best>,
    wall_time_s: f64,
}

#[derive(Serialize)]
struct Best {
    label: String,
    area: f64,
    points: Vec<[f64; 3]>,
    facets: Vec<[usize; 3]>,
}

impl Best {
    fn new(label: impl Into<String>, r: &Realization) -> Self {
        Self {
            label: label.into(),
            area: r.surface_area(),
            points: r.points.iter().map(|p| p.to_array()).collect(),
            facets: r.facets.clone(),
        }
    }
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<RealizeError> for Failure {
    fn from(e: RealizeError) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Outcome {
    report: RunReport,
    text: String,
    csv: Vec<(usize, f64)>,
    mismatch: Option<String>,
}

fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn resolve_catalog(path: &Path) -> Result<(String, Vec<PolytopeGraph>), Failure> {
    let source = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
            let builtin = [BuiltinCatalog::Warmup, BuiltinCatalog::K7, BuiltinCatalog::K8]
                .into_iter()
                .find(|b| path.parent().is_none_or(|p| p.as_os_str().is_empty()) && b.file_name() == name);
            match builtin {
                Some(b) => b.source().to_string(),
                None => return Err(Failure::Usage(format!("cannot read {}: {e}", path.display()))),
            }
        }
    };
    let graphs = load_catalog(&source).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok((source, graphs))
}

fn cmd_prune(catalog: &Path, class: Option<&str>) -> Result<Outcome, Failure> {
    let (source, graphs) = resolve_catalog(catalog)?;
    let graphs: Vec<PolytopeGraph> = match class {
        Some(label) => {
            let g: Vec<_> = graphs.into_iter().filter(|g| g.class_label == label).collect();
            if g.is_empty() {
                return Err(Failure::Usage(format!("no class {label} in {}", catalog.display())));
            }
            g
        }
        None => graphs,
    };
    let mut text = format!("{:<10} {:>6} {:>9} {:>7}  eliminated by\n", "class", "k", "colorings", "orbits");
    let mut classes = Vec::new();
    for g in &graphs {
        let verdicts = prune(g);
        let surv: Vec<_> = verdicts.iter().filter(|(_, v)| v.survives()).map(|(c, _)| *c).collect();
        let orbits = orbit_representatives(g, &surv, &automorphisms(g));
        let mut by_rule = std::collections::BTreeMap::new();
        for (_, v) in &verdicts {
            if let Some(r) = v.rule() {
                *by_rule.entry(r.to_string()).or_insert(0usize) += 1;
            }
        }
        let rules: Vec<String> = by_rule.iter().map(|(r, n)| format!("{r}:{n}")).collect();
        let _ = writeln!(
            text,
            "{:<10} {:>6} {:>9} {:>7}  {}  survivors={}",
            g.class_label,
            g.k(),
            verdicts.len(),
            orbits.len(),
            rules.join(" "),
            surv.len()
        );
        let colorings: Vec<Value> = verdicts
            .iter()
            .map(|(c, v)| {
                let mut entry = json!({ "mask": c.mask, "red_edges": c.red_edges(g) });
                match v {
                    EliminationVerdict::Eliminated { rule, witness } => {
                        entry["verdict"] = json!({ "rule": rule.to_string(), "witness": witness });
                    }
                    EliminationVerdict::Survives { antipodal_pairs } => {
                        entry["verdict"] = json!({ "survives": true, "antipodal_pairs": antipodal_pairs });
                    }
                }
                entry
            })
            .collect();
        classes.push(json!({
            "class_label": g.class_label,
            "name": g.name,
            "k": g.k(),
            "survivors": surv.len(),
            "survivor_orbits": orbits.len(),
            "orbit_representatives": orbits.iter().map(|c| c.mask).collect::<Vec<_>>(),
            "colorings": colorings,
        }));
    }
    let report = RunReport {
        command: format!("prune --catalog {}{}", catalog.display(), class.map(|c| format!(" --class {c}")).unwrap_or_default()),
        inputs_digest: digest(&[source.as_bytes(), class.unwrap_or("").as_bytes()]),
        seed: None,
        results: json!({ "classes": classes }),
        best: None,
        wall_time_s: 0.0,
    };
    Ok(Outcome { report, text, csv: Vec::new(), mismatch: None })
}

fn cmd_verify(k: usize) -> Result<Outcome, Failure> {
    if k != 7 && k != 8 {
        return Err(Failure::Usage(format!("verify supports --k 7 or --k 8, got {k}")));
    }
    let r = verify_theorem(k)?;
    let mut text = String::new();
    for c in &r.classes {
        let _ = writeln!(
            text,
            "{:<10} colorings={:<5} survivors={:<2} orbits={}",
            c.class_label, c.colorings, c.survivors, c.survivor_orbits
        );
        for cand in &c.candidates {
            let line = match &cand.status {
                CandidateStatus::Realized { h, a, b, area, equifacetal, .. } => format!(
                    "realized  h={h:.9} a={a:.9} b={b:.9} area={area:.9} equifacetal={equifacetal}"
                ),
                CandidateStatus::Refuted { reason } => format!("refuted   {reason}"),
                CandidateStatus::Cited { reason } => format!("cited     {reason}"),
                CandidateStatus::Unresolved => "unresolved".to_string(),
            };
            let _ = writeln!(text, "    {:<20} {line}", cand.label);
        }
    }
    let _ = writeln!(
        text,
        "max area {:.9} by {} (expected {:.9} by {}): {}",
        r.max_area,
        r.winner,
        r.expected_max,
        r.expected_winner,
        if r.reproduced { "reproduced" } else { "MISMATCH" }
    );
    let mismatch = (!r.reproduced).then(|| format!("got {} from {}", r.max_area, r.winner));
    let best = Best::new(&r.winner, &r.witness);
    let catalog = if k == 7 { BuiltinCatalog::K7 } else { BuiltinCatalog::K8 };
    let report = RunReport {
        command: format!("verify --k {k}"),
        inputs_digest: digest(&[catalog.source().as_bytes()]),
        seed: None,
        results: serde_json::to_value(&r).expect("report serializes"),
        best: Some(best),
        wall_time_s: 0.0,
    };
    Ok(Outcome { report, text, csv: vec![(k, r.max_area)], mismatch })
}

fn config(k: usize, budget: &Budget, penalty: f64) -> OptimizerConfig {
    let base = if penalty > 0.0 {
        OptimizerConfig { penalty, ..OptimizerConfig::congruent(k) }
    } else {
        OptimizerConfig { k, ..OptimizerConfig::default() }
    };
    OptimizerConfig {
        restarts: budget.restarts,
        iters: budget.iters.unwrap_or(base.iters),
        seed: budget.seed,
        ..base
    }
}

fn cmd_optimize(k: usize, budget: &Budget, penalty: f64) -> Result<Outcome, Failure> {
    let cfg = config(k, budget, penalty);
    let r = optimize_sphere(&cfg)?;
    let mut text = format!(
        "k={k} area={:.9} congruence_defect={:.3e} best_restart={}\n",
        r.area, r.congruence_defect, r.restart
    );
    for p in &r.realization.points {
        let _ = writeln!(text, "  {:>13.9} {:>13.9} {:>13.9}", p.x, p.y, p.z);
    }
    let report = RunReport {
        command: format!(
            "optimize --k {k} --restarts {} --iters {} --seed {} --penalty {}",
            cfg.restarts, cfg.iters, cfg.seed, cfg.penalty
        ),
        inputs_digest: digest(&[serde_json::to_string(&cfg).expect("config serializes").as_bytes()]),
        seed: Some(cfg.seed),
        results: json!({ "config": cfg, "area": r.area, "objective": r.objective,
                         "congruence_defect": r.congruence_defect, "restart": r.restart }),
        best: Some(Best::new(format!("optimize-k{k}"), &r.realization)),
        wall_time_s: 0.0,
    };
    Ok(Outcome { report, text, csv: vec![(k, r.area)], mismatch: None })
}

/// Rows whose value is attained inside the equifacetal family use the
/// penalized search; the others maximize plain area.
fn cmd_table(budget: &Budget) -> Result<Outcome, Failure> {
    let mut text = format!(
        "{:>3} {:>12} {:>12} {:>12} {:>10} {:>10}\n",
        "K", "closed_form", "optimizer", "plain_area", "a_K", "b_K"
    );
    let mut rows = Vec::new();
    let mut csv = Vec::new();
    for (k, closed) in known_maxima() {
        let plain = optimize_sphere(&config(k, budget, 0.0))?;
        let penalized = matches!(k, 7 | 8);
        let value = if penalized {
            optimize_sphere(&config(k, budget, OptimizerConfig::congruent(k).penalty))?.area
        } else {
            plain.area
        };
        let b = asymptotic_bounds(k);
        let _ = writeln!(
            text,
            "{k:>3} {closed:>12.6} {value:>12.6} {:>12.6} {:>10.4} {:>10.4}",
            plain.area, b.lower, b.upper
        );
        rows.push(json!({ "k": k, "closed_form": closed, "optimizer": value, "penalized": penalized,
                          "plain_area": plain.area, "lower_aK": b.lower, "upper_bK": b.upper }));
        csv.push((k, closed));
    }
    let report = RunReport {
        command: format!(
            "table --restarts {} --seed {}{}",
            budget.restarts,
            budget.seed,
            budget.iters.map(|i| format!(" --iters {i}")).unwrap_or_default()
        ),
        inputs_digest: digest(&[format!("{}:{:?}:{}", budget.restarts, budget.iters, budget.seed).as_bytes()]),
        seed: Some(budget.seed),
        results: json!({ "rows": rows }),
        best: None,
        wall_time_s: 0.0,
    };
    Ok(Outcome { report, text, csv, mismatch: None })
}

fn bounds_csv(rows: &[(usize, f64)]) -> String {
    let mut s = String::from("K,value,lower_aK,upper_bK\n");
    for &(k, v) in rows {
        let b = asymptotic_bounds(k);
        let _ = writeln!(s, "{k},{v},{},{}", b.lower, b.upper);
    }
    s
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    fs::write(path, body).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let start = Instant::now();
    let (outcome, out) = match &cli.command {
        Command::Table { budget, out } => (cmd_table(budget)?, out),
        Command::Prune { catalog, class, out } => (cmd_prune(catalog, class.as_deref())?, out),
        Command::Verify { k, out } => (cmd_verify(*k)?, out),
        Command::Optimize { k, budget, penalty, out } => (cmd_optimize(*k, budget, *penalty)?, out),
    };
    let Outcome { mut report, text, csv, mismatch } = outcome;
    report.wall_time_s = start.elapsed().as_secs_f64();
    print!("{text}");
    if let Some(path) = &out.out {
        let body = serde_json::to_string_pretty(&report).expect("report serializes");
        write_file(path, &(body + "\n"))?;
    }
    if let Some(path) = &out.emit_bounds_csv {
        write_file(path, &bounds_csv(&csv))?;
    }
    match mismatch {
        Some(m) => Err(Failure::Mismatch(m)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(m)) => {
            eprintln!("mismatch: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
