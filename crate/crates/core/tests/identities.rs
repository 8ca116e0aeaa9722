use macdonald_core::combin::IntVector;
use macdonald_core::exactalg::FieldElem;
use macdonald_core::families::Families;
use macdonald_core::identities::checks;
use macdonald_core::identities::report::{Case, WITNESS_LIMIT};
use macdonald_core::identities::{default_shards, Registry, Shard, Status, Witness};
use proptest::prelude::*;

fn iv(v: &[i32]) -> IntVector {
    IntVector::from(v)
}

fn pass(ws: Vec<Witness>) {
    assert!(ws.is_empty(), "{ws:#?}");
}

#[test]
fn duality_examples() {
    let f = Families::new();
    pass(checks::duality(&f, &iv(&[0, 0]), &iv(&[0, 0])));
    pass(checks::duality(&f, &iv(&[1, 0]), &iv(&[0, 1])));
    pass(checks::duality(&f, &iv(&[-1, 2]), &iv(&[1, -2])));
    for m in 0..=5 {
        for r in 0..=5 {
            pass(checks::duality(&f, &iv(&[m]), &iv(&[r])));
        }
    }
}

#[test]
fn twisted_and_primed_duality_examples() {
    let f = Families::new();
    for (u, v) in [(iv(&[1, 0]), iv(&[0, 0])), (iv(&[2, 1]), iv(&[2, 1])), (iv(&[2]), iv(&[-1]))] {
        pass(checks::twisted_duality(&f, &u, &v));
        pass(checks::primed_duality(&f, &u, &v));
    }
}

#[test]
fn primed_construction_and_inversion() {
    let f = Families::new();
    for a in [iv(&[0, 0]), iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 2]), iv(&[0, 1, 1])] {
        pass(checks::primed_construction(&f, &a));
    }
    pass(checks::inversion(&f, &iv(&[-1, 2])));
}

#[test]
fn o_polynomial_examples() {
    let f = Families::new();
    for b in [iv(&[0, 0]), iv(&[1, 0]), iv(&[0, 1]), iv(&[2, 0]), iv(&[1, 1]), iv(&[0, 2])] {
        pass(checks::o_duality(&f, &iv(&[0, 0]), &b));
        pass(checks::o_duality(&f, &iv(&[1, 0]), &b));
        pass(checks::o_duality(&f, &iv(&[2, 0]), &b));
    }
}

#[test]
fn binomial_family_examples() {
    let f = Families::new();
    for a in [iv(&[0, 0]), iv(&[1, 0]), iv(&[1, 1]), iv(&[0, 2]), iv(&[3])] {
        pass(checks::binomial(&f, &a));
        pass(checks::dual_binomial(&f, &a));
    }
    let one = iv(&[1, 1]);
    pass(checks::orthogonality(&f, &one, &one));
    pass(checks::orthogonality(&f, &iv(&[1, 0]), &iv(&[0, 0])));
    pass(checks::orthogonality(&f, &one, &iv(&[1, 0])));
    pass(checks::orthogonality(&f, &iv(&[0, 2]), &iv(&[1, 0])));
}

#[test]
fn okounkov_examples() {
    let f = Families::new();
    pass(checks::okounkov(&f, &iv(&[0, 0]), &iv(&[0, 0])));
    pass(checks::okounkov(&f, &iv(&[1, 0]), &iv(&[2, 0])));
    pass(checks::okounkov(&f, &iv(&[2, 1]), &iv(&[1, 1])));
    pass(checks::symmetrizer(&f, &iv(&[1, 0])));
    pass(checks::symmetrizer(&f, &iv(&[2, 1, 0])));
}

#[test]
fn transfer_and_steps() {
    let f = Families::new();
    for v in [iv(&[1, 0]), iv(&[0, -1]), iv(&[1, 1]), iv(&[-1, 2]), iv(&[2])] {
        pass(checks::transfer(&f, &v));
    }
    pass(checks::duality_steps(&f, &iv(&[0, 0]), &iv(&[0, 0])));
    pass(checks::duality_steps(&f, &iv(&[1, 0]), &iv(&[0, 0])));
    pass(checks::duality_steps(&f, &iv(&[0, 0]), &iv(&[0, 1])));
}

#[test]
fn eval_relation_examples() {
    let f = Families::new();
    for a in [iv(&[0, 0]), iv(&[1, 0]), iv(&[0, 2]), iv(&[1, 0, 2])] {
        pass(checks::eval_relations(&f, &a));
    }
}

#[test]
fn registry_has_every_key() {
    let names: Vec<String> = Registry::standard().names().map(String::from).collect();
    let mut want = vec![
        "duality",
        "twisted-duality",
        "primed-duality",
        "theorem-a",
        "theorem-c",
        "binomial",
        "dual-binomial",
        "orthogonality",
        "okounkov",
        "transfer",
        "eval-relations",
        "hecke-relations",
        "duality-steps",
    ];
    want.sort();
    assert_eq!(names, want);
}

#[test]
fn reports_are_deterministic() {
    let reg = Registry::standard();
    let shard = [Shard { n: 2, min_entry: -1, max_entry: 2, max_weight: 2 }];
    let a = reg.run("duality", &Families::new(), &shard, false).unwrap();
    let b = reg.run("duality", &Families::new(), &shard, false).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a.status, Status::Pass);
    assert!(a.elapsed_ms.is_none());
    assert!(reg.run("no-such", &Families::new(), &shard, false).is_none());
}

#[test]
fn false_identity_is_reported() {
    let mut reg = Registry::new();
    reg.register("false", "1 = 2", |_, s| {
        let mut c = Case::new(&[("n", &IntVector::zeros(s.n))]);
        c.check("1 = 2", &FieldElem::one(), &FieldElem::from_int(2));
        (1, c.into_witnesses())
    });
    let r = reg.run("false", &Families::new(), &default_shards(), true).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.witnesses.len(), 3);
    assert_eq!(r.witnesses[0].lhs, "1");
    assert!(r.elapsed_ms.is_some());
    assert!(r.render_text().starts_with("FAIL false (3 cases"));
}

#[test]
fn long_witnesses_are_truncated() {
    let mut c = Case::new(&[]);
    c.fail("long", "x".repeat(WITNESS_LIMIT + 10), String::new());
    let w = c.into_witnesses();
    assert!(w[0].lhs.len() < WITNESS_LIMIT + 64);
    assert!(w[0].lhs.ends_with("[truncated, 4106 bytes]"));
}

fn small_vector(n: usize) -> impl Strategy<Value = IntVector> {
    prop::collection::vec(-1i32..=2, n).prop_map(IntVector::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn duality_is_symmetric(u in small_vector(2), v in small_vector(2)) {
        let f = Families::new();
        prop_assert!(checks::duality(&f, &u, &v).is_empty());
        prop_assert!(checks::duality_steps(&f, &u, &v).is_empty());
    }

    #[test]
    fn transfer_holds(v in small_vector(2)) {
        prop_assert!(checks::transfer(&Families::new(), &v).is_empty());
    }

    #[test]
    fn orthogonality_is_a_delta(a in prop::collection::vec(0i32..=2, 2), g in prop::collection::vec(0i32..=2, 2)) {
        let (a, g) = (IntVector::new(a), IntVector::new(g));
        prop_assert!(checks::orthogonality(&Families::new(), &a, &g).is_empty());
    }
}
