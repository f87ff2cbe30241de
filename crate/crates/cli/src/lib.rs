//! The `spk` command line: argument types, run reports and the commands
//! behind them. `main` only parses arguments, prints and exits.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use spk_core::family::connective_count;
use spk_core::matrix::{build_matrix, linear_spanning_set, spanning_set};
use spk_core::net::{
    check_classical_structure, check_stack, find_proof_net_with, parse_structure_file, to_dot, to_structure_file,
    Criterion, Failure, NetConfig,
};
use spk_core::prover::DEFAULT_BUDGET;
use spk_core::{
    check_derivation, crosscheck, crosscheck_family, decompose, parse_sequent, prove_with, sample_family, Class,
    CrossConfig, Error, FamilySpec, LogicId, Outcome, PosId, ProverConfig, Sequent, Summary,
};

/// Exit status for a provable sequent, a net, or a clean cross-check.
pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
/// Errors, disagreements and exhausted budgets.
pub const EXIT_TROUBLE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "spk", version, about = "Decide provability by sequent search, matrices and proof nets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Search budget: sequent nodes expanded, or linkings examined.
    #[arg(long, global = true, env = "SPK_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Only consider non-crossing axiom linkings, whatever the logic.
    #[arg(long, global = true)]
    pub planar_only: bool,
    /// Graph criterion at the bottom of the net check.
    #[arg(long, global = true, value_enum, default_value_t = CriterionArg::Switching)]
    pub criterion: CriterionArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a sequent and list its signed positions.
    Parse(SequentArgs),
    /// Decide a sequent with one method or all of them.
    Prove {
        #[command(flatten)]
        input: SequentArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Write a matrix, proof net, dot graph or derivation.
    Export {
        #[command(flatten)]
        input: SequentArgs,
        #[arg(long, value_enum)]
        kind: ExportKind,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every applicable method over a bounded family and compare.
    Crosscheck(FamilyArgs),
    /// Check a proof structure file against the correctness criteria.
    CheckStructure { path: PathBuf },
}

#[derive(Debug, Args)]
pub struct SequentArgs {
    #[arg(long, value_parser = parse_logic)]
    pub logic: LogicId,
    pub sequent: String,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_parser = parse_logic)]
    pub logic: LogicId,
    /// Number of atom names.
    #[arg(long)]
    pub atoms: Option<usize>,
    /// Maximum formula depth.
    #[arg(long)]
    pub depth: Option<usize>,
    /// Maximum antecedent length.
    #[arg(long)]
    pub width: Option<usize>,
    /// Maximum succedent length (multiple-conclusion logics).
    #[arg(long)]
    pub succedent: Option<usize>,
    /// Maximum connectives per sequent.
    #[arg(long)]
    pub connectives: Option<usize>,
    /// Check this many members chosen with `--seed` instead of all.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Axiom linkings per sequent given to the structure checks.
    #[arg(long, default_value_t = 100_000)]
    pub max_structures: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    Switching,
    Contraction,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Criterion {
        match c {
            CriterionArg::Switching => Criterion::Switching,
            CriterionArg::Contraction => Criterion::Contraction,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Sequent,
    Matrix,
    Net,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportKind {
    Matrix,
    Net,
    Dot,
    Derivation,
}

fn parse_logic(s: &str) -> Result<LogicId, String> {
    s.parse()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunMethod {
    Sequent,
    Matrix,
    Net,
}

impl RunMethod {
    pub fn name(self) -> &'static str {
        match self {
            RunMethod::Sequent => "sequent",
            RunMethod::Matrix => "matrix",
            RunMethod::Net => "net",
        }
    }
}

/// One method's verdict on one sequent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodRun {
    pub method: RunMethod,
    #[serde(flatten)]
    pub outcome: Outcome,
    /// Human-readable summary of the witness.
    pub witness: Option<String>,
    /// Why the best candidate net was rejected.
    pub failure: Option<Failure>,
    pub micros: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    /// Sequent search nodes expanded.
    pub expanded: u64,
    /// Atomic paths through the matrix, saturated at `u64::MAX`.
    pub paths: u64,
    pub linkings: u64,
    pub switchings: u64,
    pub contraction_steps: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub sequent: String,
    pub logic: LogicId,
    pub methods: Vec<MethodRun>,
    /// False iff two invoked methods reached different verdicts or one
    /// failed with an error.
    pub agreement: bool,
    pub counters: Counters,
}

impl RunReport {
    pub fn verdict(&self) -> Option<bool> {
        self.methods.iter().find_map(|m| match m.outcome {
            Outcome::Provable => Some(true),
            Outcome::Unprovable => Some(false),
            _ => None,
        })
    }

    pub fn exit_code(&self) -> u8 {
        let troubled = self.methods.iter().any(|m| matches!(m.outcome, Outcome::Limit(_) | Outcome::Error(_)));
        match self.verdict() {
            _ if troubled || !self.agreement => EXIT_TROUBLE,
            Some(true) => EXIT_YES,
            Some(false) => EXIT_NO,
            None => EXIT_TROUBLE,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}  [{}]\n", self.sequent, self.logic);
        for m in &self.methods {
            let (status, detail) = match &m.outcome {
                Outcome::Provable => ("provable", None),
                Outcome::Unprovable => ("unprovable", None),
                Outcome::Limit(d) => ("limit", Some(d)),
                Outcome::Error(d) => ("error", Some(d)),
            };
            out.push_str(&format!("  {:<8} {:<11} {:>9.3} ms", m.method.name(), status, m.micros as f64 / 1000.0));
            if let Some(d) = detail {
                out.push_str(&format!("  {d}"));
            }
            out.push('\n');
            if let Some(w) = &m.witness {
                out.push_str(&format!("    witness: {w}\n"));
            }
            if let Some(f) = &m.failure {
                out.push_str(&format!("    failure ({}): {f}\n", f.name()));
            }
        }
        let c = &self.counters;
        out.push_str(&format!(
            "  counters: {} expanded, {} paths, {} linkings, {} switchings, {} contraction steps\n",
            c.expanded, c.paths, c.linkings, c.switchings, c.contraction_steps
        ));
        out.push_str(&format!("  agreement: {}\n", self.agreement));
        out
    }
}

fn outcome<T>(r: &spk_core::Result<T>) -> Option<Outcome> {
    match r {
        Ok(_) => None,
        Err(e @ Error::ResourceLimit { .. }) => Some(Outcome::Limit(e.to_string())),
        Err(e) => Some(Outcome::Error(e.to_string())),
    }
}

fn yes_no(b: bool) -> Outcome {
    if b {
        Outcome::Provable
    } else {
        Outcome::Unprovable
    }
}

fn net_config(global: &Global) -> NetConfig {
    NetConfig {
        budget: global.budget,
        planar_only: global.planar_only.then_some(true),
        criterion: global.criterion.into(),
        ..NetConfig::default()
    }
}

fn run_method(method: RunMethod, sequent: &Sequent, global: &Global, counters: &mut Counters) -> MethodRun {
    let start = Instant::now();
    let mut run = MethodRun { method, outcome: Outcome::Unprovable, witness: None, failure: None, micros: 0 };
    match method {
        RunMethod::Sequent => {
            let r = prove_with(sequent, &ProverConfig { budget: global.budget });
            run.outcome = outcome(&r).unwrap_or(Outcome::Unprovable);
            if let Ok(v) = r {
                counters.expanded = v.stats.expanded;
                run.outcome = yes_no(v.provable);
                if let Some(d) = &v.witness {
                    if !check_derivation(d) {
                        run.outcome = Outcome::Error("derivation failed re-checking".into());
                    }
                    run.witness = Some(format!("derivation with {} rules, height {}", d.size(), d.height()));
                }
            }
        }
        RunMethod::Matrix => {
            let r = build_matrix(&decompose(sequent));
            run.outcome = outcome(&r).unwrap_or(Outcome::Unprovable);
            if let Ok(m) = r {
                counters.paths = u64::try_from(m.path_count()).unwrap_or(u64::MAX);
                let set = match sequent.logic() {
                    LogicId::Classical => spanning_set(&m),
                    _ => linear_spanning_set(&m),
                };
                run.outcome = yes_no(set.is_some());
                run.witness = set.map(|s| m.render_connections(&s));
            }
        }
        RunMethod::Net => {
            let r = find_proof_net_with(sequent, &net_config(global));
            run.outcome = outcome(&r).unwrap_or(Outcome::Unprovable);
            if let Ok(search) = r {
                counters.linkings = search.stats.linkings;
                counters.switchings = search.stats.switchings;
                counters.contraction_steps = search.stats.contraction_steps;
                run.outcome = yes_no(search.net.is_some());
                run.failure = search.verdict.failure;
                run.witness = search.net.map(|ps| {
                    let links: Vec<String> =
                        ps.axioms().iter().map(|&(a, b)| format!("({} {})", ps.render(a), ps.render(b))).collect();
                    format!("axiom links {}", links.join(" "))
                });
            }
        }
    }
    run.micros = start.elapsed().as_micros().try_into().unwrap_or(u64::MAX);
    run
}

/// Methods run by `--method all`: the matrix method is skipped for the
/// Lambek calculi, which have no matrix characterization here.
fn methods_for(method: MethodArg, logic: LogicId) -> Vec<RunMethod> {
    match method {
        MethodArg::Sequent => vec![RunMethod::Sequent],
        MethodArg::Matrix => vec![RunMethod::Matrix],
        MethodArg::Net => vec![RunMethod::Net],
        MethodArg::All => {
            let mut all = vec![RunMethod::Sequent];
            if !matches!(logic, LogicId::LambekL | LogicId::LambekLEps | LogicId::Nl) {
                all.push(RunMethod::Matrix);
            }
            all.push(RunMethod::Net);
            all
        }
    }
}

pub fn prove_report(sequent: &Sequent, method: MethodArg, global: &Global) -> RunReport {
    let mut counters = Counters::default();
    let methods: Vec<MethodRun> = methods_for(method, sequent.logic())
        .into_iter()
        .map(|m| run_method(m, sequent, global, &mut counters))
        .collect();
    let verdicts: Vec<bool> = methods
        .iter()
        .filter_map(|m| match m.outcome {
            Outcome::Provable => Some(true),
            Outcome::Unprovable => Some(false),
            _ => None,
        })
        .collect();
    // limits are inconclusive rather than dissenting; exit_code still reports them
    let errored = methods.iter().any(|m| matches!(m.outcome, Outcome::Error(_)));
    let agreement = !errored && verdicts.windows(2).all(|w| w[0] == w[1]);
    RunReport { sequent: sequent.to_string(), logic: sequent.logic(), methods, agreement, counters }
}

#[derive(Serialize)]
struct ParsedPosition {
    id: PosId,
    signed: String,
    class: Class,
    parent: Option<PosId>,
    children: Vec<PosId>,
}

#[derive(Serialize)]
struct Parsed {
    sequent: String,
    logic: LogicId,
    connectives: usize,
    positions: Vec<ParsedPosition>,
}

#[derive(Serialize)]
struct CrossReport<'a> {
    family: &'a FamilySpec,
    sampled: Option<usize>,
    seed: u64,
    #[serde(flatten)]
    summary: &'a Summary,
}

#[derive(Serialize)]
struct StructureReport {
    sequent: String,
    logic: LogicId,
    is_net: bool,
    failure: Option<Failure>,
}

fn read_sequent(args: &SequentArgs) -> anyhow::Result<Sequent> {
    parse_sequent(&args.sequent, args.logic).with_context(|| format!("cannot read `{}`", args.sequent))
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// What a command prints and the status it exits with.
pub struct Output {
    pub text: String,
    pub code: u8,
}

pub fn run(cli: &Cli) -> anyhow::Result<Output> {
    let global = &cli.global;
    let structured = global.format == Format::Structured;
    match &cli.command {
        Command::Parse(args) => {
            let sequent = read_sequent(args)?;
            let forest = decompose(&sequent);
            let parsed = Parsed {
                sequent: sequent.to_string(),
                logic: sequent.logic(),
                connectives: connective_count(&sequent),
                positions: forest
                    .positions()
                    .iter()
                    .map(|p| ParsedPosition {
                        id: p.id,
                        signed: p.signed(),
                        class: p.class,
                        parent: p.parent,
                        children: p.children.clone(),
                    })
                    .collect(),
            };
            let text = if structured {
                json(&parsed)?
            } else {
                let mut t = format!("{}\n", parsed.sequent);
                for p in &parsed.positions {
                    let parent = p.parent.map_or("-".to_string(), |q| q.to_string());
                    t.push_str(&format!(
                        "{:>4} {:<6} {:>6}  {}\n",
                        p.id,
                        format!("{:?}", p.class).to_lowercase(),
                        parent,
                        p.signed
                    ));
                }
                t
            };
            Ok(Output { text, code: EXIT_YES })
        }
        Command::Prove { input, method } => {
            let sequent = read_sequent(input)?;
            let report = prove_report(&sequent, *method, global);
            let text = if structured { json(&report)? } else { report.to_text() };
            Ok(Output { text, code: report.exit_code() })
        }
        Command::Export { input, kind, out } => {
            let sequent = read_sequent(input)?;
            let text = export(&sequent, *kind, global)?;
            match out {
                Some(path) => {
                    std::fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
                    Ok(Output { text: String::new(), code: EXIT_YES })
                }
                None => Ok(Output { text, code: EXIT_YES }),
            }
        }
        Command::Crosscheck(args) => {
            let mut spec = FamilySpec::new(args.logic);
            spec.atoms = args.atoms.unwrap_or(spec.atoms);
            spec.depth = args.depth.unwrap_or(spec.depth);
            spec.antecedent = args.width.unwrap_or(spec.antecedent);
            spec.succedent = args.succedent.unwrap_or(spec.succedent);
            spec.connectives = args.connectives.unwrap_or(spec.connectives);
            let config = CrossConfig { budget: global.budget, max_structures: args.max_structures };
            let summary = match args.sample {
                Some(n) => crosscheck(&sample_family(&spec, n, args.seed), &config),
                None => crosscheck_family(&spec, &config),
            };
            let code = if summary.ok() { EXIT_YES } else { EXIT_TROUBLE };
            let text = if structured {
                json(&CrossReport { family: &spec, sampled: args.sample, seed: args.seed, summary: &summary })?
            } else {
                summary_text(&spec, &summary)
            };
            Ok(Output { text, code })
        }
        Command::CheckStructure { path } => {
            let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            let ps = parse_structure_file(&text)?;
            let verdict = if ps.logic() == LogicId::Classical {
                check_classical_structure(&ps)?
            } else {
                check_stack(&ps, global.criterion.into())?
            };
            let report = StructureReport {
                sequent: ps.sequent().to_string(),
                logic: ps.logic(),
                is_net: verdict.is_net,
                failure: verdict.failure,
            };
            let text = if structured {
                json(&report)?
            } else {
                match &report.failure {
                    None => format!("{}  [{}]\n  proof net\n", report.sequent, report.logic),
                    Some(f) => {
                        format!("{}  [{}]\n  not a proof net ({}): {f}\n", report.sequent, report.logic, f.name())
                    }
                }
            };
            Ok(Output { text, code: if report.is_net { EXIT_YES } else { EXIT_NO } })
        }
    }
}

pub fn export(sequent: &Sequent, kind: ExportKind, global: &Global) -> anyhow::Result<String> {
    match kind {
        ExportKind::Matrix => Ok(build_matrix(&decompose(sequent))?.render() + "\n"),
        ExportKind::Net | ExportKind::Dot => {
            let search = find_proof_net_with(sequent, &net_config(global))?;
            let Some(ps) = search.net else { bail!(Error::NotProvable) };
            Ok(if kind == ExportKind::Net { to_structure_file(&ps) } else { to_dot(&ps) })
        }
        ExportKind::Derivation => {
            let verdict = prove_with(sequent, &ProverConfig { budget: global.budget })?;
            match verdict.witness {
                Some(d) => Ok(d.to_text()),
                None => bail!(Error::NotProvable),
            }
        }
    }
}

fn summary_text(spec: &FamilySpec, s: &Summary) -> String {
    let mut t = format!(
        "{}: atoms {}, depth {}, antecedent {}, succedent {}, connectives {}\n",
        spec.logic, spec.atoms, spec.depth, spec.antecedent, spec.succedent, spec.connectives
    );
    t.push_str(&format!("  sequents        {}\n", s.sequents));
    t.push_str(&format!("  provable        {}\n", s.provable));
    t.push_str(&format!("  agreements      {}\n", s.agreements));
    t.push_str(&format!("  disagreements   {}\n", s.disagreements));
    t.push_str(&format!("  limits          {}\n", s.limits));
    t.push_str(&format!("  structures      {}\n", s.structures));
    t.push_str(&format!("  dr/contraction mismatches {}\n", s.dr_contraction_mismatches));
    t.push_str(&format!("  step bound violations     {}\n", s.step_bound_violations));
    t.push_str(&format!("  bad witnesses             {}\n", s.bad_witnesses));
    for r in s.notable.iter().take(20) {
        let outcomes: Vec<String> = r
            .outcomes
            .iter()
            .map(|(m, o)| {
                let o = match o {
                    Outcome::Provable => "provable".to_string(),
                    Outcome::Unprovable => "unprovable".to_string(),
                    Outcome::Limit(d) => format!("limit ({d})"),
                    Outcome::Error(d) => format!("error ({d})"),
                };
                format!("{}={o}", m.name())
            })
            .collect();
        t.push_str(&format!("  ! {}  {}\n", r.sequent, outcomes.join(" ")));
    }
    if s.notable.len() > 20 {
        t.push_str(&format!("  ... {} more\n", s.notable.len() - 20));
    }
    t
}
