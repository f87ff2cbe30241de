use std::collections::BTreeSet;

use spk_core::matrix::{
    build_matrix, linear_spanning_set, spanning_set, verify_connections, Connection, ConnectionSet, Mode, SequentMatrix,
};
use spk_core::{decompose, parse_sequent, prove, Error, LogicId};

fn matrix(text: &str, logic: LogicId) -> SequentMatrix {
    build_matrix(&decompose(&parse_sequent(text, logic).unwrap())).unwrap()
}

fn rendered_paths(m: &SequentMatrix) -> Vec<Vec<String>> {
    m.atomic_paths().map(|p| p.iter().map(|&a| m.render_atom(a)).collect()).collect()
}

#[test]
fn classical_golden_matrix() {
    let m = matrix("~A, B->A => ~B", LogicId::Classical);
    assert_eq!(m.render(), "[[A+] [B+ ; A-]] [B-]");
    assert_eq!(rendered_paths(&m), vec![vec!["A+", "B+", "B-"], vec!["A+", "A-", "B-"]]);
    let set = spanning_set(&m).unwrap();
    assert_eq!(m.render_connections(&set), "{<A+, A->, <B+, B->}");
    assert!(verify_connections(&m, &set, Mode::Classical).unwrap());
    assert!(!verify_connections(&m, &ConnectionSet::default(), Mode::Classical).unwrap());
}

#[test]
fn mll_golden_matrix() {
    let m = matrix("A@B, (B*C)^ => C-oA", LogicId::Mll);
    assert_eq!(m.render(), "[A- ; B-] [B+ ; C+] [C- A+]");
    let set = linear_spanning_set(&m).unwrap();
    assert_eq!(m.render_connections(&set), "{<B+, B->, <C+, C->, <A+, A->}");
    assert!(verify_connections(&m, &set, Mode::Linear).unwrap());
    let mut without_c = set.clone();
    let c = *set.connections.iter().find(|c| m.render_atom(c.positive) == "C+").unwrap();
    without_c.connections.remove(&c);
    assert!(!verify_connections(&m, &without_c, Mode::Linear).unwrap());
    // the path through C+ and C- is the one left uncovered
    let uncovered: Vec<_> = m
        .atomic_paths()
        .filter(|p| !without_c.connections.iter().any(|c| p.contains(&c.positive) && p.contains(&c.negative)))
        .collect();
    assert_eq!(uncovered.len(), 1);
    assert!(uncovered[0].contains(&c.positive) && uncovered[0].contains(&c.negative));
}

#[test]
fn trivial_matrices() {
    let m = matrix("A => A", LogicId::Classical);
    assert_eq!(m.render(), "A- A+");
    assert_eq!(m.atomic_paths().count(), 1);
    assert_eq!(spanning_set(&m).unwrap().connections.len(), 1);
    assert!(spanning_set(&matrix("A => B", LogicId::Classical)).is_none());
    let m = matrix("A => A", LogicId::Mll);
    assert_eq!(linear_spanning_set(&m).unwrap().connections.len(), 1);
}

#[test]
fn linear_spanning_rejects_reuse_and_redundancy() {
    let m = matrix("A => A*A", LogicId::Mll);
    assert!(linear_spanning_set(&m).is_none());
    assert!(!prove(&parse_sequent("A => A*A", LogicId::Mll).unwrap()).unwrap().provable);
    // a perfect spanning matching exists, but both connections share the only path
    let m = matrix("A*B => A@B", LogicId::Mll);
    assert!(linear_spanning_set(&m).is_none());
    let mut perfect = 0;
    m.for_each_perfect_matching(|_| {
        perfect += 1;
        true
    });
    assert_eq!(perfect, 1);
}

#[test]
fn lambek_has_no_matrix() {
    let f = decompose(&parse_sequent("A/B, B => A", LogicId::LambekL).unwrap());
    assert!(matches!(build_matrix(&f), Err(Error::UnsupportedLogic { .. })));
}

#[test]
fn foreign_positions_are_rejected() {
    let m = matrix("A => A", LogicId::Classical);
    let bogus = ConnectionSet {
        connections: BTreeSet::from([Connection { positive: spk_core::PosId(7), negative: spk_core::PosId(0) }]),
        spans: true,
        linear: false,
    };
    assert_eq!(verify_connections(&m, &bogus, Mode::Classical), Err(Error::ForeignPosition(7)));
}

#[test]
fn rendering_is_stable() {
    let a = matrix("(A|B)&~C, A->B => C|~A", LogicId::Classical).render();
    let b = matrix("(A|B)&~C, A->B => C|~A", LogicId::Classical).render();
    assert_eq!(a, b);
}
