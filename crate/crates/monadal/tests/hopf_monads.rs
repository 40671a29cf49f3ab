use monadal::hopfalg::{check_hopf_algebra, HopfAlgebra};
use monadal::hopfmonad::{check_hopf_monad, hopf_monad_from_algebra, HopfMonad, Sampling, Side};
use monadal::{Category, FieldSpec};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn assert_pass(r: &monadal::Report) {
    assert!(r.passed(), "{}", r.render_text());
}

#[test]
fn identity_monads_pass() {
    for c in [Category::vec(q()), Category::cyclic(q(), 2), Category::cyclic(q(), 3), Category::s3(q())] {
        assert_pass(&check_hopf_monad(&HopfMonad::identity(&c), &Sampling::default()));
    }
}

fn algebras() -> Vec<HopfAlgebra> {
    let vec = Category::vec(q());
    let f7 = FieldSpec::prime(7).unwrap();
    let z3q = Category::cyclic_braided(f7, 3, f7.int(2));
    let sign = Category::cyclic_braided(q(), 2, q().int(-1));
    vec![
        HopfAlgebra::group_algebra(&vec, "kZ2", &HopfAlgebra::cyclic_table(2)).unwrap(),
        HopfAlgebra::group_algebra(&vec, "kS3", &Category::s3(q()).table).unwrap(),
        HopfAlgebra::sweedler(&vec).unwrap(),
        HopfAlgebra::group_algebra(&sign, "kZ2", &HopfAlgebra::cyclic_table(2)).unwrap(),
        HopfAlgebra::quantum_line(&sign, 2, &q().int(-1)).unwrap(),
        HopfAlgebra::quantum_line(&z3q, 3, &f7.int(2)).unwrap(),
    ]
}

#[test]
fn algebras_pass() {
    for h in algebras() {
        assert_pass(&check_hopf_algebra(&h));
    }
}

#[test]
fn algebra_monads_pass() {
    for h in algebras() {
        for side in [Side::Right, Side::Left] {
            let t = hopf_monad_from_algebra(&h, side).unwrap();
            assert_pass(&check_hopf_monad(&t, &Sampling::default()));
        }
    }
}

#[test]
fn corrupted_structure_is_caught() {
    let h = &algebras()[2];
    let mut bad = h.clone();
    bad.s = bad.cat.zero(&bad.a, &bad.a);
    let r = check_hopf_algebra(&bad);
    let failed: Vec<_> = r.failures().map(|c| c.id.clone()).collect();
    assert!(failed.contains(&"antipode_left".to_string()), "{failed:?}");

    let t = hopf_monad_from_algebra(h, Side::Right).unwrap();
    let two = t.cat.field.int(2);
    for which in ["mu", "sl", "sr", "T2"] {
        let nat = match which {
            "mu" => &t.mu,
            "sl" => &t.sl,
            "sr" => &t.sr,
            _ => &t.t2,
        };
        let s: Vec<u32> = vec![0; nat.arity];
        let m = nat.at_simple(&s).scale(&two);
        let broken = t.with(which, nat.with_component(&s, m).unwrap());
        let r = check_hopf_monad(&broken, &Sampling::default());
        assert!(!r.passed(), "{which} corruption undetected");
    }
    let r = check_hopf_monad(&t, &Sampling::default());
    assert!(r.checks.len() >= 29, "{}", r.render_text());
}
