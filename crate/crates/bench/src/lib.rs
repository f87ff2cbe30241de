//! Benchmark inputs shared by the criterion suites.

use spk_core::{parse_sequent, FamilySpec, LogicId, Sequent};

/// The worked examples, one or more per logic.
pub const GOLDEN: &[(&str, LogicId)] = &[
    ("~A, B->A => ~B", LogicId::Classical),
    ("A@B, (B*C)^ => C-oA", LogicId::Mll),
    ("X => Y-o(X*Y)", LogicId::Mill),
    ("C.(C\\A)/B, B => A", LogicId::LambekL),
    ("(A , ((A\\B)/(C/D) , C/D)) => B", LogicId::Nl),
];

/// Harder inputs whose search spaces are still small enough to bench.
pub const WIDE: &[(&str, LogicId)] = &[
    ("(A*B)*(C*D) => (D*C)*(B*A)", LogicId::Mll),
    ("A-o(B-o(C-oD)), A, B, C => D", LogicId::Mill),
    ("A/B, B/C, C/D, D => A", LogicId::LambekL),
    ("(A->B)->A => A", LogicId::Classical),
];

pub fn sequent(text: &str, logic: LogicId) -> Sequent {
    parse_sequent(text, logic).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn golden() -> Vec<Sequent> {
    GOLDEN.iter().map(|&(t, l)| sequent(t, l)).collect()
}

pub fn wide() -> Vec<Sequent> {
    WIDE.iter().map(|&(t, l)| sequent(t, l)).collect()
}

/// A family small enough to cross-check in well under a second.
pub fn small_family(logic: LogicId) -> FamilySpec {
    let mut spec = FamilySpec::new(logic);
    spec.connectives = 2;
    spec
}
