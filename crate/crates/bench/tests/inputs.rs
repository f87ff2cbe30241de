use spk_bench::{golden, small_family, wide};
use spk_core::net::find_proof_net;
use spk_core::{enumerate_family, prove, LogicId};

#[test]
fn bench_inputs_are_provable() {
    for s in golden().iter().chain(&wide()) {
        assert!(prove(s).unwrap().provable, "{s}");
        if s.logic() != LogicId::Classical {
            assert!(find_proof_net(s).unwrap().net.is_some(), "{s}");
        }
    }
}

#[test]
fn small_families_are_small() {
    for logic in [LogicId::Mll, LogicId::LambekL, LogicId::Nl] {
        let n = enumerate_family(&small_family(logic)).len();
        assert!(n > 100 && n < 100_000, "{logic}: {n}");
    }
}
