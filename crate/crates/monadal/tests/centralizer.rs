//! Centralizers, the canonical law, doubles, center correspondence and coends of centers on
//! small pointed categories, with the expected values frozen.

use monadal::centralizer::{
    canonical_law, centralize, check_center_e, check_center_i, check_centralizer, check_double, check_nonrepresentability,
    check_z_morphism, coend_hopf, coend_of_center, double, z_on_monad_morphism, Centralizer,
};
use monadal::hopfalg::HopfAlgebra;
use monadal::hopfmonad::{check_monad_morphism, hopf_monad_from_algebra, HopfMonad, NatTrans, Sampling, Side, Words};
use monadal::{Category, FieldSpec, Mor, Obj, Report};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn assert_pass(r: &Report) {
    assert!(r.passed(), "{}", r.render_text());
}

fn sorted(o: &Obj) -> Vec<u32> {
    let mut v = o.0.clone();
    v.sort_unstable();
    v
}

fn kz2_monad(vec: &Category) -> (HopfAlgebra, HopfMonad) {
    let a = HopfAlgebra::group_algebra(vec, "kZ2", &HopfAlgebra::cyclic_table(2)).unwrap();
    let t = hopf_monad_from_algebra(&a, Side::Right).unwrap();
    (a, t)
}

#[test]
fn z_of_simples_in_s3() {
    let s3 = Category::s3(q());
    let cz = centralize(&HopfMonad::identity(&s3)).unwrap();
    assert_eq!(sorted(&cz.z.t_obj(&Obj::unit())), vec![0; 6]);
    // transpositions 1, 2, 3; 3-cycles 4, 5
    for x in 1..=3 {
        assert_eq!(sorted(&cz.z.t_obj(&Obj::simple(x))), vec![1, 1, 2, 2, 3, 3], "x = {x}");
    }
    for x in 4..=5 {
        assert_eq!(sorted(&cz.z.t_obj(&Obj::simple(x))), vec![4, 4, 4, 5, 5, 5], "x = {x}");
    }
    assert_pass(&check_centralizer(&cz, &Sampling::default()));
}

#[test]
fn z_of_identity_on_vec_is_identity() {
    let vec = Category::vec(q());
    let cz = centralize(&HopfMonad::identity(&vec)).unwrap();
    let x = Obj(vec![0, 0, 0]);
    assert_eq!(cz.z.t_obj(&x), x);
    assert_eq!(cz.z.mu(&x), vec.id(&x));
}

#[test]
fn representability_matches_centrality() {
    let s3 = Category::s3(q());
    for x in 0..6 {
        let (rep, r) = check_nonrepresentability(&s3, x).unwrap();
        assert_pass(&r);
        assert_eq!(rep, x == 0, "x = {x}");
    }
    let z4 = Category::cyclic(q(), 4);
    for x in 0..4 {
        let (rep, r) = check_nonrepresentability(&z4, x).unwrap();
        assert_pass(&r);
        assert!(rep);
    }
}

#[test]
fn canonical_law_on_vec_is_identity() {
    let vec = Category::vec(q());
    let cz = centralize(&HopfMonad::identity(&vec)).unwrap();
    let law = canonical_law(&cz, &Sampling::default()).unwrap();
    assert_eq!(law.omega.at_simple(&[0]), &vec.id(&Obj::unit()));
}

#[test]
fn canonical_law_on_z2_is_a_permutation() {
    let z2 = Category::cyclic(q(), 2);
    let cz = centralize(&HopfMonad::identity(&z2)).unwrap();
    let law = canonical_law(&cz, &Sampling::default()).unwrap();
    assert_pass(&law.certificate);
    for x in 0..2 {
        let o = law.omega.at_simple(&[x]);
        assert!(o.is_monomial(), "x = {x}");
        assert!(o.entries().all(|(_, _, v)| *v == z2.one()), "x = {x}");
    }
}

#[test]
fn canonical_law_of_iterated_centralizer() {
    let z2 = Category::cyclic(q(), 2);
    let cz1 = centralize(&HopfMonad::identity(&z2)).unwrap();
    let cz2 = centralize(&cz1.z).unwrap();
    assert_pass(&canonical_law(&cz2, &Sampling::simple_only()).unwrap().certificate);
}

#[test]
fn double_of_identity_on_vec_is_trivial() {
    let vec = Category::vec(q());
    let cz = centralize(&HopfMonad::identity(&vec)).unwrap();
    let dbl = double(&cz, &canonical_law(&cz, &Sampling::default()).unwrap()).unwrap();
    assert_eq!(dbl.d.t_obj(&Obj::unit()), Obj::unit());
    assert_eq!(dbl.r.at_simple(&[0, 0]), &vec.id(&Obj::unit()));
}

#[test]
fn double_of_identity_on_z2() {
    let z2 = Category::cyclic(q(), 2);
    let opts = Sampling::default();
    let cz = centralize(&HopfMonad::identity(&z2)).unwrap();
    let dbl = double(&cz, &canonical_law(&cz, &opts).unwrap()).unwrap();
    // D(V_g) = Z(V_g) = ⊕_h V_h* ⊗ V_g ⊗ V_h has |G| = 2 summands, both equal to V_g
    for g in 0..2 {
        assert_eq!(sorted(&dbl.d.t_obj(&Obj::simple(g))), vec![g, g]);
    }
    assert_pass(&check_double(&cz, &dbl, &opts, &opts));
}

#[test]
fn double_of_kz2_monad_has_dimension_four() {
    let vec = Category::vec(q());
    let (_, t) = kz2_monad(&vec);
    let opts = Sampling::default();
    let cz = centralize(&t).unwrap();
    let dbl = double(&cz, &canonical_law(&cz, &opts).unwrap()).unwrap();
    for n in 1..=3 {
        assert_eq!(dbl.d.t_obj(&Obj(vec![0; n])).len(), 4 * n);
    }
    assert_pass(&check_double(&cz, &dbl, &opts, &opts));
}

#[test]
fn center_correspondence_on_z3() {
    let z3 = Category::cyclic(q(), 3);
    let opts = Sampling::default();
    let cz = centralize(&HopfMonad::identity(&z3)).unwrap();
    let dbl = double(&cz, &canonical_law(&cz, &opts).unwrap()).unwrap();
    assert_pass(&check_center_e(&cz, 8, &opts));
    assert_pass(&check_center_i(&cz, &dbl, 8, &opts));
}

#[test]
fn coend_of_identity_on_vec_is_trivial() {
    let vec = Category::vec(q());
    let id = HopfMonad::identity(&vec);
    let one = vec.id(&Obj::unit());
    let r = NatTrans::build(&vec, "R", Words::rmatrix(&id.t).0, Words::rmatrix(&id.t).1, 2, |_| Ok(one.clone())).unwrap();
    let ch = coend_hopf(&id, &r).unwrap();
    assert_eq!(ch.carrier.m, Obj::unit());
    for f in [&ch.m, &ch.u, &ch.delta, &ch.eps, &ch.s, &ch.omega] {
        assert_eq!(f, &one);
    }
}

#[test]
fn coend_of_center_dimensions() {
    for (c, dim) in [(Category::vec(q()), 1), (Category::cyclic(q(), 2), 4)] {
        let cc = coend_of_center(&c).unwrap();
        assert_pass(&cc.report);
        assert_eq!(cc.via_double.dim(), dim);
        assert!(cc.via_double.carrier.m.0.iter().all(|&s| s == 0));
    }
}

fn unit_and_counit(vec: &Category, a: &HopfAlgebra, t: &HopfMonad) -> (NatTrans, NatTrans) {
    let id = HopfMonad::identity(vec);
    let (s, d) = Words::morphism(&id.t, &t.t);
    let eta = NatTrans::build(vec, "eta", s, d, 1, |v| Ok(t.eta(&Obj::simple(v[0])))).unwrap();
    let (s, d) = Words::morphism(&t.t, &id.t);
    let eps = NatTrans::build(vec, "id⊗eps", s, d, 1, |v| Ok(vec.tensor(&vec.id(&Obj::simple(v[0])), &a.eps))).unwrap();
    (eta, eps)
}

#[test]
fn z_on_monad_morphisms() {
    let vec = Category::vec(q());
    let opts = Sampling::default();
    let (a, t) = kz2_monad(&vec);
    let id = HopfMonad::identity(&vec);
    let (cz_t, cz_1): (Centralizer, Centralizer) = (centralize(&t).unwrap(), centralize(&id).unwrap());
    let (eta, eps) = unit_and_counit(&vec, &a, &t);
    assert_pass(&check_monad_morphism(&eta, &id, &t, &opts));
    assert_pass(&check_monad_morphism(&eps, &t, &id, &opts));

    // Z of the identity morphism is the identity
    let (s, d) = Words::morphism(&t.t, &t.t);
    let idt = NatTrans::build(&vec, "id", s, d, 1, |v| Ok(vec.id(&t.t_obj(&Obj::simple(v[0]))))).unwrap();
    let z_id = z_on_monad_morphism(&idt, &cz_t, &cz_t).unwrap();
    assert_eq!(z_id.at_simple(&[0]), &vec.id(&cz_t.z.t_obj(&Obj::unit())));

    // η: 1 → ?⊗kZ2 gives the projection Z_T(1) = A* → 1 dual to the unit
    let z_eta = z_on_monad_morphism(&eta, &cz_1, &cz_t).unwrap();
    assert_pass(&check_z_morphism(&eta, &z_eta, &cz_1, &cz_t, &opts));
    assert_eq!(z_eta.at_simple(&[0]), &vec.dual_mor(&a.u));

    // contravariance: Z_{ε∘η} = Z_η ∘ Z_ε, and ε∘η = id
    let z_eps = z_on_monad_morphism(&eps, &cz_t, &cz_1).unwrap();
    assert_pass(&check_z_morphism(&eps, &z_eps, &cz_t, &cz_1, &opts));
    let x = Obj::unit();
    let composite: Mor = z_eta.at(std::slice::from_ref(&x)).comp(&z_eps.at(std::slice::from_ref(&x)));
    assert_eq!(composite, vec.id(&cz_1.z.t_obj(&x)));
}
