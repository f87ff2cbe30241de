//! Running every applicable method on a batch of sequents and comparing the
//! verdicts.
//!
//! Besides the verdicts, every axiom linking of every sequent is checked with
//! both graph criteria, which must agree, and contraction must finish within
//! one rule application per edge.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::family::{visit_family, FamilySpec};
use crate::logic::{decompose, LogicId, Sequent};
use crate::matrix::{build_matrix, linear_spanning_set, spanning_set};
use crate::net::{
    build_skeleton, check_stack, contract, dr_check, enumerate_linkings, find_proof_net_with, Criterion, NetConfig,
};
use crate::prover::{check_derivation, prove_with, ProverConfig, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Sequent,
    Matrix,
    Net,
    NetContraction,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Sequent => "sequent",
            Method::Matrix => "matrix",
            Method::Net => "net",
            Method::NetContraction => "net-contraction",
        }
    }

    /// Methods that decide provability in `logic`. Classical proof nets are
    /// searched only within bounded structural links, so they cannot refute
    /// and are left out.
    pub fn applicable(logic: LogicId) -> &'static [Method] {
        match logic {
            LogicId::Classical => &[Method::Sequent, Method::Matrix],
            LogicId::Mll | LogicId::Mill => &[Method::Sequent, Method::Matrix, Method::Net, Method::NetContraction],
            LogicId::LambekL | LogicId::LambekLEps | LogicId::Nl => {
                &[Method::Sequent, Method::Net, Method::NetContraction]
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    Provable,
    Unprovable,
    /// The method ran out of budget.
    Limit(String),
    Error(String),
}

impl Outcome {
    fn verdict(&self) -> Option<bool> {
        match self {
            Outcome::Provable => Some(true),
            Outcome::Unprovable => Some(false),
            _ => None,
        }
    }

    fn from_result(r: crate::Result<bool>) -> Outcome {
        match r {
            Ok(true) => Outcome::Provable,
            Ok(false) => Outcome::Unprovable,
            Err(e @ Error::ResourceLimit { .. }) => Outcome::Limit(e.to_string()),
            Err(e) => Outcome::Error(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossConfig {
    pub budget: u64,
    /// Linkings examined per sequent for the structure checks.
    pub max_structures: u64,
}

impl Default for CrossConfig {
    fn default() -> Self {
        CrossConfig { budget: DEFAULT_BUDGET, max_structures: 100_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequentReport {
    pub index: usize,
    pub sequent: String,
    pub outcomes: Vec<(Method, Outcome)>,
    pub agree: bool,
    pub structures: u64,
    pub dr_contraction_mismatches: u64,
    pub step_bound_violations: u64,
    /// Witnesses that failed independent re-checking.
    pub bad_witnesses: Vec<Method>,
}

impl SequentReport {
    pub fn verdict(&self) -> Option<bool> {
        self.outcomes.iter().find_map(|(_, o)| o.verdict())
    }

    pub fn limited(&self) -> bool {
        self.outcomes.iter().any(|(_, o)| matches!(o, Outcome::Limit(_)))
    }

    /// Anything other than full agreement with clean structure checks.
    pub fn notable(&self) -> bool {
        !self.agree
            || self.limited()
            || self.dr_contraction_mismatches > 0
            || self.step_bound_violations > 0
            || !self.bad_witnesses.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub sequents: usize,
    pub provable: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub limits: usize,
    pub structures: u64,
    pub dr_contraction_mismatches: u64,
    pub step_bound_violations: u64,
    pub bad_witnesses: usize,
    /// Reports of every sequent that was not a clean agreement.
    pub notable: Vec<SequentReport>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.disagreements == 0
            && self.dr_contraction_mismatches == 0
            && self.step_bound_violations == 0
            && self.bad_witnesses == 0
    }

    fn absorb(&mut self, other: Summary) {
        self.sequents += other.sequents;
        self.provable += other.provable;
        self.agreements += other.agreements;
        self.disagreements += other.disagreements;
        self.limits += other.limits;
        self.structures += other.structures;
        self.dr_contraction_mismatches += other.dr_contraction_mismatches;
        self.step_bound_violations += other.step_bound_violations;
        self.bad_witnesses += other.bad_witnesses;
        self.notable.extend(other.notable);
    }

    fn add(&mut self, r: SequentReport) {
        self.sequents += 1;
        if r.verdict() == Some(true) {
            self.provable += 1;
        }
        if r.agree {
            self.agreements += 1;
        } else {
            self.disagreements += 1;
        }
        if r.limited() {
            self.limits += 1;
        }
        self.structures += r.structures;
        self.dr_contraction_mismatches += r.dr_contraction_mismatches;
        self.step_bound_violations += r.step_bound_violations;
        self.bad_witnesses += r.bad_witnesses.len();
        if r.notable() {
            self.notable.push(r);
        }
    }
}

struct StructureScan {
    structures: u64,
    mismatches: u64,
    violations: u64,
    contraction_net: crate::Result<bool>,
}

/// Checks every linking with both graph criteria and records whether one
/// passes the full stack with contraction at the bottom.
fn scan_structures(sequent: &Sequent, limit: u64) -> StructureScan {
    let mut scan = StructureScan { structures: 0, mismatches: 0, violations: 0, contraction_net: Ok(false) };
    let skeleton = build_skeleton(sequent);
    for ps in enumerate_linkings(&skeleton, false) {
        if scan.structures == limit {
            scan.contraction_net = Err(Error::ResourceLimit { what: "structures per sequent", limit });
            break;
        }
        scan.structures += 1;
        let dr = dr_check(&ps);
        let run = contract(&ps);
        if dr.is_net != run.verdict.is_net {
            scan.mismatches += 1;
        }
        if run.steps > run.edges {
            scan.violations += 1;
        }
        if run.verdict.is_net && matches!(scan.contraction_net, Ok(false)) && sequent.logic() != LogicId::Classical {
            scan.contraction_net = check_stack(&ps, Criterion::Contraction).map(|v| v.is_net);
        }
    }
    scan
}

pub fn check_sequent(index: usize, sequent: &Sequent, config: &CrossConfig) -> SequentReport {
    let logic = sequent.logic();
    let mut outcomes = Vec::new();
    let mut bad_witnesses = Vec::new();
    let scan = scan_structures(sequent, config.max_structures);
    for &method in Method::applicable(logic) {
        let outcome = match method {
            Method::Sequent => {
                Outcome::from_result(prove_with(sequent, &ProverConfig { budget: config.budget }).map(|v| {
                    if v.witness.as_ref().is_some_and(|d| !check_derivation(d)) {
                        bad_witnesses.push(Method::Sequent);
                    }
                    v.provable
                }))
            }
            Method::Matrix => Outcome::from_result(build_matrix(&decompose(sequent)).map(|m| match logic {
                LogicId::Classical => spanning_set(&m).is_some(),
                _ => linear_spanning_set(&m).is_some(),
            })),
            Method::Net => {
                let net_config = NetConfig { budget: config.budget, ..NetConfig::default() };
                Outcome::from_result(find_proof_net_with(sequent, &net_config).map(|search| match &search.net {
                    Some(ps) => {
                        if !check_stack(ps, Criterion::Switching).is_ok_and(|v| v.is_net) {
                            bad_witnesses.push(Method::Net);
                        }
                        true
                    }
                    None => false,
                }))
            }
            Method::NetContraction => Outcome::from_result(scan.contraction_net.clone()),
        };
        outcomes.push((method, outcome));
    }
    let verdicts: Vec<bool> = outcomes.iter().filter_map(|(_, o)| o.verdict()).collect();
    let errored = outcomes.iter().any(|(_, o)| matches!(o, Outcome::Error(_)));
    let agree = !errored && verdicts.windows(2).all(|w| w[0] == w[1]);
    SequentReport {
        index,
        sequent: sequent.to_string(),
        outcomes,
        agree,
        structures: scan.structures,
        dr_contraction_mismatches: scan.mismatches,
        step_bound_violations: scan.violations,
        bad_witnesses,
    }
}

fn check_batch(offset: usize, sequents: &[Sequent], config: &CrossConfig) -> Summary {
    let reports: Vec<SequentReport> =
        sequents.par_iter().enumerate().map(|(i, s)| check_sequent(offset + i, s, config)).collect();
    let mut summary = Summary::default();
    for r in reports {
        summary.add(r);
    }
    summary
}

/// Checks the sequents in parallel; reports keep input order.
pub fn crosscheck(sequents: &[Sequent], config: &CrossConfig) -> Summary {
    check_batch(0, sequents, config)
}

const BATCH: usize = 1 << 14;

/// Checks every member of a family in batches, so the family is never held
/// in memory at once. Indices are positions in family order.
pub fn crosscheck_family(spec: &FamilySpec, config: &CrossConfig) -> Summary {
    let mut summary = Summary::default();
    let mut batch = Vec::with_capacity(BATCH);
    let mut offset = 0;
    visit_family(spec, |s| {
        batch.push(s);
        if batch.len() == BATCH {
            summary.absorb(check_batch(offset, &batch, config));
            offset += batch.len();
            batch.clear();
        }
    });
    summary.absorb(check_batch(offset, &batch, config));
    summary
}
