//! Coends of braided categories, centralizers of Hopf algebras and the braided double.

use monadal::braided_double::{
    canonical_law_algebra, centralizer_algebra, check_coend, check_double_of_unit, coend, coend_hopf_of_monad,
    consistency_double, double_algebra, unit_reindex, yang_baxter,
};
use monadal::hopfalg::{check_hopf_algebra, classical_dual_cop, HopfAlgebra};
use monadal::hopfmonad::{hopf_monad_from_algebra, HopfMonad, Sampling, Side};
use monadal::{Category, FieldSpec, Obj, Report};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn assert_pass(r: &Report) {
    assert!(r.passed(), "{}", r.render_text());
}

fn sign() -> Category {
    Category::cyclic_braided(q(), 2, q().int(-1))
}

/// Vec_{Z3} over F_7 with χ(a,b) = 2^{ab}; 2 has order 3, so the monodromy is nontrivial.
fn z3_f7() -> Category {
    let f7 = FieldSpec::prime(7).unwrap();
    Category::cyclic_braided(f7, 3, f7.int(2))
}

fn kz2(c: &Category) -> HopfAlgebra {
    HopfAlgebra::group_algebra(c, "kZ2", &HopfAlgebra::cyclic_table(2)).unwrap()
}

#[test]
fn coend_of_vec_is_trivial() {
    let vec = Category::vec(q());
    let co = coend(&vec).unwrap();
    assert_eq!(co.c, Obj::unit());
    assert!(co.omega_is_trivial());
    let one = vec.id(&Obj::unit());
    for f in [&co.hopf.m, &co.hopf.u, &co.hopf.delta, &co.hopf.eps, &co.hopf.s] {
        assert_eq!(f, &one);
    }
    assert_pass(&check_coend(&co, &Sampling::default()));
}

/// Every braiding of Vec_{Z2} with trivial associator is symmetric, so ω = ε⊗ε for both
/// bicharacters; a non-symmetric braiding needs a larger group.
#[test]
fn coend_pairing_detects_symmetry() {
    let opts = Sampling::default();
    for c in [Category::cyclic_braided(q(), 2, q().one()), sign()] {
        let co = coend(&c).unwrap();
        assert_eq!(co.c, Obj(vec![0, 0]));
        assert!(co.omega_is_trivial());
        assert_pass(&check_coend(&co, &opts));
    }
    let co = coend(&z3_f7()).unwrap();
    assert_eq!(co.c, Obj(vec![0; 3]));
    assert!(!co.omega_is_trivial());
    assert_pass(&check_coend(&co, &opts));
}

#[test]
fn coend_of_trivial_monad_is_unit() {
    let vec = Category::vec(q());
    let mc = coend_hopf_of_monad(&HopfMonad::identity(&vec)).unwrap();
    assert_pass(&mc.report);
    assert_eq!(mc.hopf.a, Obj::unit());
}

#[test]
fn coend_of_identity_monad_is_coend_of_category() {
    for c in [sign(), z3_f7()] {
        let mc = coend_hopf_of_monad(&HopfMonad::identity(&c)).unwrap();
        assert_pass(&mc.report);
        let co = coend(&c).unwrap();
        let (x, y) = (&mc.hopf, &co.hopf);
        assert_eq!((&x.a, &x.m, &x.u, &x.delta, &x.eps, &x.s), (&y.a, &y.m, &y.u, &y.delta, &y.eps, &y.s));
    }
}

#[test]
fn coend_of_kz2_monad_is_dual_cop() {
    let vec = Category::vec(q());
    let a = kz2(&vec);
    let mc = coend_hopf_of_monad(&hopf_monad_from_algebra(&a, Side::Right).unwrap()).unwrap();
    assert_pass(&mc.report);
    let d = classical_dual_cop(&a).unwrap();
    let x = &mc.hopf;
    assert_eq!((&x.m, &x.u, &x.delta, &x.eps, &x.s), (&d.m, &d.u, &d.delta, &d.eps, &d.s));
    assert_pass(&check_hopf_algebra(&d));
}

#[test]
fn centralizer_of_unit_is_coend() {
    for c in [sign(), z3_f7()] {
        let co = coend(&c).unwrap();
        let za = centralizer_algebra(&HopfAlgebra::trivial(&c), &co).unwrap();
        assert_pass(&za.report);
        let ri = unit_reindex(&c, &za.za.a, &co.c).unwrap();
        assert_eq!(ri, c.id(&co.c));
        let (x, y) = (&za.za, &co.hopf);
        assert_eq!((&x.m, &x.u, &x.delta, &x.eps, &x.s), (&y.m, &y.u, &y.delta, &y.eps, &y.s));
        let law = canonical_law_algebra(&za).unwrap();
        assert_pass(&law.certificate);
        assert_eq!(law.omega, c.id(&co.c));
    }
}

#[test]
fn centralizer_of_kz2_and_h4() {
    let vec = Category::vec(q());
    let co = coend(&vec).unwrap();
    let za = centralizer_algebra(&kz2(&vec), &co).unwrap();
    assert_pass(&za.report);
    assert_eq!(za.za.dim(), 2);
    let h4 = HopfAlgebra::sweedler(&vec).unwrap();
    let zh = centralizer_algebra(&h4, &co).unwrap();
    assert_pass(&zh.report);
    assert_eq!(zh.za.dim(), 4);
    for z in [&za, &zh] {
        assert_pass(&canonical_law_algebra(z).unwrap().certificate);
    }
}

#[test]
fn double_of_kz2_and_h4() {
    let vec = Category::vec(q());
    let bd = double_algebra(&kz2(&vec)).unwrap();
    assert_eq!(bd.da.dim(), 4);
    assert_pass(&bd.report);
    let h4 = double_algebra(&HopfAlgebra::sweedler(&vec).unwrap()).unwrap();
    assert_eq!(h4.da.dim(), 16);
    assert_pass(&h4.report);
    assert!(yang_baxter(&h4.da, &h4.r));
    assert_pass(&consistency_double(&h4, &Sampling::default()).unwrap());
}

#[test]
fn double_of_unit_is_the_coend() {
    for c in [Category::vec(q()), sign(), z3_f7()] {
        assert_pass(&check_double_of_unit(&c).unwrap());
    }
}

#[test]
fn monad_and_algebra_doubles_agree() {
    let opts = Sampling::default();
    let vec = Category::vec(q());
    let unit = double_algebra(&HopfAlgebra::trivial(&vec)).unwrap();
    assert_pass(&consistency_double(&unit, &opts).unwrap());
    for c in [vec, sign()] {
        let bd = double_algebra(&kz2(&c)).unwrap();
        assert_pass(&consistency_double(&bd, &opts).unwrap());
    }
}

/// The quantum line k[x]/(x²) in sign-braided Vec_{Z2} has an odd generator.
#[test]
fn double_of_quantum_line() {
    let s = sign();
    let a = HopfAlgebra::quantum_line(&s, 2, &q().int(-1)).unwrap();
    let bd = double_algebra(&a).unwrap();
    assert_pass(&bd.report);
    assert_eq!(bd.da.dim(), 8);
    assert_pass(&consistency_double(&bd, &Sampling::default()).unwrap());
}
