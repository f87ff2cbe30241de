//! Provability in classical, multiplicative linear and Lambek logics by three
//! independent methods: Cut-free sequent search, matrices of connections and
//! proof nets, plus the machinery to cross-check them against each other.

pub mod crosscheck;
pub mod error;
pub mod family;
pub mod logic;
pub mod matrix;
pub mod net;
pub mod prover;
pub mod syntax;

pub use crosscheck::{crosscheck, crosscheck_family, CrossConfig, Method, Outcome, SequentReport, Summary};
pub use error::{Error, Result, SourceSpan};
pub use family::{enumerate_family, sample_family, visit_family, FamilySpec};
pub use logic::{
    decompose, leaf_order, Antecedent, Class, Connective, DecompositionForest, Formula, LogicId, PosId, Position,
    Sequent, Sign, Structure,
};
pub use prover::{check_derivation, prove, prove_with, Derivation, ProverConfig, Rule, Verdict};
pub use syntax::{parse_formula, parse_sequent, print_formula, print_sequent};
