use spk_core::prover::{check_derivation, check_derivation_report, prove, prove_with, Derivation, ProverConfig, Rule};
use spk_core::{parse_sequent, Connective, Error, Formula, LogicId, Sequent};

fn seq(text: &str, logic: LogicId) -> Sequent {
    parse_sequent(text, logic).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn provable(text: &str, logic: LogicId) -> bool {
    let v = prove(&seq(text, logic)).unwrap();
    if let Some(w) = &v.witness {
        check_derivation_report(w).unwrap_or_else(|e| panic!("{text}: bad witness {e}\n{}", w.to_text()));
        assert_eq!(w.sequent, seq(text, logic));
    }
    assert_eq!(v.provable, v.witness.is_some());
    v.provable
}

#[test]
fn classical_examples() {
    assert!(provable("~A, B->A => ~B", LogicId::Classical));
    assert!(provable("=> A | ~A", LogicId::Classical));
    assert!(provable("=> ((A->B)->A)->A", LogicId::Classical));
    assert!(provable("A & B => B & A", LogicId::Classical));
    assert!(provable("A => A, B", LogicId::Classical));
    assert!(!provable("A => B", LogicId::Classical));
    assert!(!provable("A | B => A & B", LogicId::Classical));
    assert!(!provable("=>", LogicId::Classical));
}

#[test]
fn mll_examples() {
    assert!(provable("A@B, (B*C)^ => C-oA", LogicId::Mll));
    assert!(provable("A*B => B*A", LogicId::Mll));
    assert!(provable("A, A => A*A", LogicId::Mll));
    assert!(provable("=> A@(A^)", LogicId::Mll));
    assert!(!provable("A*B => A@B", LogicId::Mll));
    assert!(!provable("A => A*A", LogicId::Mll));
    assert!(!provable("A, B => A", LogicId::Mll));
}

#[test]
fn mill_examples() {
    assert!(provable("X => Y-o(X*Y)", LogicId::Mill));
    assert!(!provable("X => (Y-oX)*Y", LogicId::Mill));
    assert!(provable("A, A-oB => B", LogicId::Mill));
    assert!(provable("=> A-oA", LogicId::Mill));
}

#[test]
fn lambek_examples() {
    assert!(provable("C.(C\\A)/B, B => A", LogicId::LambekL));
    assert!(!provable("A.B => B.A", LogicId::LambekL));
    assert!(provable("A/B, B => A", LogicId::LambekL));
    assert!(!provable("B, A/B => A", LogicId::LambekL));
    assert!(provable("A/B, B/C => A/C", LogicId::LambekL));
    assert!(provable("A => B/(A\\B)", LogicId::LambekL));
    assert!(!provable("B/(A/A) => B", LogicId::LambekL));
    assert!(provable("B/(A/A) => B", LogicId::LambekLEps));
    assert!(provable("=> A/A", LogicId::LambekLEps));
}

#[test]
fn nl_examples() {
    assert!(provable("(A , ((A\\B)/C , C)) => B", LogicId::Nl));
    assert!(!provable("((A , (A\\B)/C) , C) => B", LogicId::Nl));
    assert!(provable("((D , D\\A) , ((A\\B)/C , C)) => B", LogicId::Nl));
    assert!(provable("(A , ((A\\B)/(C/D) , C/D)) => B", LogicId::Nl));
    assert!(!provable("A/B => (A/C)/(B/C)", LogicId::Nl));
    assert!(provable("A/B => (A/C)/(B/C)", LogicId::LambekL));
    assert!(!provable("B/(A/A) => B", LogicId::Nl));
    assert!(provable("A => B/(A\\B)", LogicId::Nl));
}

#[test]
fn axiom_leaf() {
    for logic in LogicId::ALL {
        let v = prove(&seq("A => A", logic)).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.rule, Rule::Axiom);
        assert!(w.premises.is_empty());
    }
}

#[test]
fn empty_sequent_is_unprovable() {
    for logic in [LogicId::Classical, LogicId::Mll] {
        let empty = Sequent::list(logic, vec![], vec![]).unwrap();
        assert!(!prove(&empty).unwrap().provable, "{logic}");
    }
}

#[test]
fn budget_is_reported_separately() {
    let s = seq("A@B, (B*C)^ => C-oA", LogicId::Mll);
    let err = prove_with(&s, &ProverConfig { budget: 2 }).unwrap_err();
    assert!(matches!(err, Error::ResourceLimit { limit: 2, .. }));
}

fn node(text: &str, logic: LogicId, rule: Rule, premises: Vec<Derivation>) -> Derivation {
    Derivation::node(seq(text, logic), rule, premises)
}

/// The textbook MLL derivation, entered node by node.
fn mll_tree(swap: bool) -> Derivation {
    let m = LogicId::Mll;
    let ax = |t: &str| Derivation::leaf(seq(t, m));
    let par = node("A@B => A, B", m, Rule::Left(Connective::Par), vec![ax("A => A"), ax("B => B")]);
    let tensor_premises =
        if swap { vec![node("C => C", m, Rule::Axiom, vec![]), par] } else { vec![par, ax("C => C")] };
    let tensor = node("A@B, C => A, B*C", m, Rule::Right(Connective::Tensor), tensor_premises);
    let lolli = node("A@B => C-oA, B*C", m, Rule::Right(Connective::Lolli), vec![tensor]);
    node("A@B, (B*C)^ => C-oA", m, Rule::Left(Connective::Perp), vec![lolli])
}

#[test]
fn textbook_mll_derivation_checks() {
    assert!(check_derivation(&mll_tree(false)));
    let err = check_derivation_report(&mll_tree(true)).unwrap_err();
    assert_eq!(err.path, vec![0, 0]);
    assert!(check_derivation(&Derivation::leaf(seq("A => A", LogicId::Mll))));
    assert!(!check_derivation(&Derivation::leaf(seq("A => B", LogicId::Mll))));
}

#[test]
fn classical_check_allows_structural_slack() {
    let c = LogicId::Classical;
    let leaf = Derivation::leaf(seq("A => A", c));
    let w = node("A, B => A", c, Rule::Weakening, vec![leaf.clone()]);
    assert!(check_derivation(&w));
    let bad = node("B => A", c, Rule::Weakening, vec![leaf]);
    assert!(!check_derivation(&bad));
}

#[test]
fn witness_formulas_are_subformulas() {
    for (text, logic) in [
        ("~A, B->A => ~B", LogicId::Classical),
        ("A@B, (B*C)^ => C-oA", LogicId::Mll),
        ("C.(C\\A)/B, B => A", LogicId::LambekL),
        ("(A , ((A\\B)/(C/D) , C/D)) => B", LogicId::Nl),
    ] {
        let s = seq(text, logic);
        let subs: Vec<Formula> = s
            .antecedent_formulas()
            .into_iter()
            .chain(s.succedent())
            .flat_map(|f| f.subformulas().into_iter().cloned())
            .collect();
        let w = prove(&s).unwrap().witness.unwrap();
        for n in w.nodes() {
            for f in n.sequent.antecedent_formulas().into_iter().chain(n.sequent.succedent()) {
                assert!(subs.contains(f), "{f} in {text}");
            }
        }
    }
}

#[test]
fn derivation_text_has_one_line_per_rule() {
    let w = prove(&seq("A => A", LogicId::LambekL)).unwrap().witness.unwrap();
    assert_eq!(w.to_text(), "[Axiom] A => A\n");
    let w = prove(&seq("A@B, (B*C)^ => C-oA", LogicId::Mll)).unwrap().witness.unwrap();
    assert_eq!(w.to_text().lines().count(), w.size());
}
