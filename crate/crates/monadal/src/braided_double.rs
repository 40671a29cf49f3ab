//! Hopf algebras in braided pointed categories built from coends: the coend C with its
//! pairing, the Hopf algebra C_T representing the centralizer of a Hopf monad, the
//! centralizer Z(A) = A*⊗C of a Hopf algebra, its canonical distributive law, and the double
//! D(A) = A ⊗_Ω Z(A) with its R-matrix.
//!
//! Every structure morphism is solved from the defining identity against the universal
//! coaction, which determines it uniquely; the suites then verify the axioms exactly.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::centralizer::{
    canonical_law, centralize, coend_hopf, convolution_antipode, double, factor_through, pairing_axioms,
    CanonicalLaw, Centralizer, Double,
};
use crate::hopfalg::{check_algebra_rmatrix, check_hopf_algebra, classical_dual_cop, monad_rmatrix_from_algebra, HopfAlgebra};
use crate::hopfmonad::{
    check_family, check_monad_morphism, check_naturality, hopf_monad_from_algebra, HopfMonad, NatTrans, Sampling, Side,
    Word, Words,
};
use crate::report::{mismatch, Report};
use crate::scalars::Scalar;
use crate::semicat::{Category, Mor, Obj};
use crate::{Error, Result};

/// The canonical isomorphism that drops unit tensor factors, e.g. A*⊗𝟙 ≅ A* or 𝟙⊗𝟙*⊗C ≅ C.
/// The category is strict, so this is an identity; every unit-dropping step goes through
/// it so that cross-route comparisons stay explicit.
pub fn unit_reindex(c: &Category, with_units: &Obj, without: &Obj) -> Result<Mor> {
    if with_units != without {
        return Err(Error::Shape(format!("{with_units:?} and {without:?} differ by more than unit factors")));
    }
    Ok(c.id(with_units))
}

/// The coend C = ⊕_i V_i*⊗V_i of a braided category, with its universal coaction, its Hopf
/// structure and the pairing ω.
#[derive(Clone, Debug)]
pub struct Coend {
    pub c: Obj,
    /// i_Y: V_y*⊗V_y → C for each simple y.
    pub i_components: Vec<Mor>,
    /// δ_X = (id_X ⊗ i_X)(coev_X ⊗ id_X): X → X⊗C.
    pub delta_nat: NatTrans,
    pub hopf: HopfAlgebra,
    pub omega: Mor,
}

impl Coend {
    pub fn delta(&self, x: &Obj) -> Mor {
        self.delta_nat.at(std::slice::from_ref(x))
    }

    /// Whether ω is the trivial pairing ε⊗ε.
    pub fn omega_is_trivial(&self) -> bool {
        let c = &self.hopf.cat;
        self.omega == c.tensor(&self.hopf.eps, &self.hopf.eps)
    }
}

/// The braiding of a braided category as the R-matrix of the identity monad.
fn braiding_rmatrix(t: &HopfMonad) -> Result<NatTrans> {
    let c = &t.cat;
    let (src, dst) = Words::rmatrix(&t.t);
    NatTrans::build(c, "τ", src, dst, 2, |v| Ok(c.tau(&Obj::simple(v[0]), &Obj::simple(v[1]))))
}

/// The coend of a braided category: the centralizer coend of the identity monad, whose
/// module category is the category itself with its braiding.
pub fn coend(c: &Category) -> Result<Coend> {
    if !c.is_braided() {
        return Err(Error::NotBraided);
    }
    let t = HopfMonad::identity(c);
    let r = braiding_rmatrix(&t)?;
    let cz = centralize(&t)?;
    let ch = coend_hopf(&t, &r)?;
    let cobj = ch.carrier.m.clone();
    let one = Obj::unit();
    let i_components = c.simples().map(|y| cz.dinat(&one, &y)).collect();
    let delta_nat = NatTrans::build(
        c,
        "δ",
        Word::var(0),
        Word::tensor(Word::var(0), Word::Const(cobj.clone())),
        1,
        |v| Ok(cz.partial(&one, &Obj::simple(v[0]))),
    )?;
    let hopf = HopfAlgebra::new("C", c, cobj.clone(), ch.m, ch.u, ch.delta, ch.eps, ch.s)?;
    Ok(Coend { c: cobj, i_components, delta_nat, hopf, omega: ch.omega })
}

/// Naturality of δ, the defining formula of δ through i, the Hopf suite, and the pairing axioms.
pub fn check_coend(co: &Coend, opts: &Sampling) -> Report {
    let h = &co.hopf;
    let c = &h.cat;
    let mut rep = Report::new("coend");
    rep.cover("coend");
    check_naturality(&mut rep, &co.delta_nat, opts);
    let cases = c.simples().enumerate().map(|(y, vy)| {
        let want = c.tensor(&c.id(&vy), &co.i_components[y]).comp(&c.tensor(&c.coev(&vy), &c.id(&vy)));
        (format!("{vy:?}"), mismatch(&co.delta(&vy), &want))
    });
    rep.check_all("delta_through_i", cases.collect::<Vec<_>>());
    rep.merge(check_hopf_algebra(h));
    let loc = format!("dim {}", h.dim());
    pairing_axioms(&mut rep, c, &loc, &data(h), &co.omega, &c.tau(&h.a, &h.a));
    rep
}

fn data(h: &HopfAlgebra) -> crate::hopfalg::HopfData<'_> {
    crate::hopfalg::HopfData { a: &h.a, m: &h.m, u: &h.u, delta: &h.delta, eps: &h.eps, s: &h.s, s_inv: &h.s_inv }
}

/// The Hopf algebra C_T = ⊕_i T(V_i)*⊗V_i of a Hopf monad on a braided category, with the
/// isomorphism φ: Z_T → ? ⊗ C_T that represents the centralizer.
#[derive(Clone, Debug)]
pub struct MonadCoend {
    pub cz: Centralizer,
    pub hopf: HopfAlgebra,
    /// δ_Y = ∂_{𝟙,Y}: Y → T(Y)⊗C_T.
    pub delta_nat: NatTrans,
    /// The monad ? ⊗ C_T.
    pub monad: HopfMonad,
    /// φ_X: Z_T(X) → X⊗C_T, fixed by (id ⊗ φ_X)∂_{X,Y} = (τ_{X,T(Y)} ⊗ id)(id_X ⊗ δ_Y).
    pub phi: NatTrans,
    pub report: Report,
}

impl MonadCoend {
    pub fn delta(&self, y: &Obj) -> Mor {
        self.delta_nat.at(std::slice::from_ref(y))
    }
}

/// Builds C_T. With δ the coaction of C_T:
/// (id⊗Δ)δ_Y = (μ_Y⊗id⊗id)(δ_{T(Y)}⊗id)δ_Y, (id⊗ε)δ_Y = η_Y,
/// (id⊗m)(id_{T(Y1)}⊗τ_{C,T(Y2)}⊗id)(δ_{Y1}⊗δ_{Y2}) = (T_2⊗id)δ_{Y1⊗Y2}, u = (T_0⊗id)δ_𝟙,
/// and S is the convolution inverse of the identity.
pub fn coend_hopf_of_monad(t: &HopfMonad) -> Result<MonadCoend> {
    let c = &t.cat;
    if !c.is_braided() {
        return Err(Error::NotBraided);
    }
    let cz = centralize(t)?;
    let one = Obj::unit();
    let cobj = cz.z.t_obj(&one);
    let cc = c.tensor_obj(&cobj, &cobj);
    let idc = c.id(&cobj);
    let delta_nat = NatTrans::build(
        c,
        "δ",
        Word::var(0),
        Word::tensor(Word::ap(&t.t, Word::var(0)), Word::Const(cobj.clone())),
        1,
        |v| Ok(cz.partial(&one, &Obj::simple(v[0]))),
    )?;
    let dl = |y: &Obj| delta_nat.at(std::slice::from_ref(y));
    let simples: Vec<Obj> = c.simples().collect();

    let cases: Vec<_> = simples
        .par_iter()
        .map(|y| {
            let ty = t.t_obj(y);
            let xi = Mor::chain(&[&c.tensors(&[&t.mu(y), &idc, &idc]), &c.tensor(&dl(&ty), &idc), &dl(y)]);
            (ty, dl(y), xi)
        })
        .collect();
    let delta = factor_through(c, &cobj, &cc, &cases)?;
    let cases: Vec<_> = simples.iter().map(|y| (t.t_obj(y), dl(y), t.eta(y))).collect();
    let eps = factor_through(c, &cobj, &one, &cases)?;
    let pairs: Vec<(Obj, Obj)> =
        simples.iter().flat_map(|a| simples.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let cases: Vec<_> = pairs
        .par_iter()
        .map(|(y1, y2)| {
            let (t1, t2) = (t.t_obj(y1), t.t_obj(y2));
            let d = c.tensors(&[&c.id(&t1), &c.tau(&cobj, &t2), &idc]).comp(&c.tensor(&dl(y1), &dl(y2)));
            let xi = c.tensor(&t.t2(y1, y2), &idc).comp(&dl(&c.tensor_obj(y1, y2)));
            (c.tensor_obj(&t1, &t2), d, xi)
        })
        .collect();
    let m = factor_through(c, &cc, &cobj, &cases)?;
    let u = c.tensor(&t.t0(), &idc).comp(&dl(&one));
    let s = convolution_antipode(c, &cobj, &m, &u, &delta, &eps, true)?;
    let hopf = HopfAlgebra::new(format!("C[{}]", t.name), c, cobj.clone(), m, u, delta, eps, s)?;
    let monad = hopf_monad_from_algebra(&hopf, Side::Right)?;

    let (src, dst) = Words::morphism(&cz.z.t, &monad.t);
    let phi = NatTrans::build(c, "φ", src, dst, 1, |v| {
        let x = Obj::simple(v[0]);
        let to = c.tensor_obj(&x, &cobj);
        cz.factor(&x, &to, |y| {
            let ty = t.t_obj(y);
            c.tensor(&c.tau(&x, &ty), &idc).comp(&c.tensor(&c.id(&x), &dl(y)))
        })
    })?;

    let mut report = Report::new("coend_hopf_of_monad");
    report.cover("coend_hopf_of_monad");
    report.merge(check_hopf_algebra(&hopf));
    let opts = Sampling::default();
    let z = &cz.z;
    let inv_cases = c.simples().map(|x| {
        let ok = phi.at(std::slice::from_ref(&x)).inverse().is_ok();
        (format!("{x:?}"), (!ok).then(|| "φ is not invertible".to_string()))
    });
    report.check_all("phi_invertible", inv_cases.collect::<Vec<_>>());
    check_naturality(&mut report, &phi, &opts);
    check_family(&mut report, "phi_partial", c, 2, &opts, |v| {
        let (x, y) = (&v[0], &v[1]);
        let ty = t.t_obj(y);
        let l = c.tensor(&c.id(&ty), &phi.at(std::slice::from_ref(x))).comp(&cz.partial(x, y));
        let r = c.tensor(&c.tau(x, &ty), &idc).comp(&c.tensor(&c.id(x), &dl(y)));
        (l, r)
    });
    report.merge(check_monad_morphism(&phi, z, &monad, &opts));
    Ok(MonadCoend { cz, hopf, delta_nat, monad, phi, report })
}

/// The centralizer Z(A) = A*⊗C of a Hopf algebra, transported from C_{?⊗A} along ρ.
#[derive(Clone, Debug)]
pub struct CentralizerAlgebra {
    pub a: HopfAlgebra,
    pub mc: MonadCoend,
    /// ρ: C_{?⊗A} = ⊕_i (V_i⊗A)*⊗V_i → A*⊗C, blockwise the inverse of (A*⊗V_i* ≅ (V_i⊗A)*).
    pub rho: Mor,
    pub za: HopfAlgebra,
    pub report: Report,
}

fn reindex_rho(c: &Category, a: &Obj, ct: &Obj) -> Result<Mor> {
    let n = c.n();
    let da = c.dual_obj(a);
    // C = ⊕_i V_i*⊗V_i has one position per simple
    let dst = c.tensor_obj(&da, &Obj(vec![0; n]));
    let mut entries = Vec::new();
    let mut off = 0;
    for i in 0..n as u32 {
        let iso = c.dual_tensor_iso(&Obj::simple(i), a).inverse()?;
        for (r, q, v) in iso.entries() {
            debug_assert_eq!(iso.dst.len(), a.len());
            entries.push((r * n + i as usize, off + q, v.clone()));
        }
        off += iso.src.len();
    }
    Mor::from_entries(ct.clone(), dst, c.field, entries)
}

/// Transports a Hopf structure along an isomorphism ρ: A → B.
fn transport(h: &HopfAlgebra, name: &str, rho: &Mor) -> Result<HopfAlgebra> {
    let c = &h.cat;
    let ri = rho.inverse()?;
    let m = Mor::chain(&[rho, &h.m, &c.tensor(&ri, &ri)]);
    let delta = Mor::chain(&[&c.tensor(rho, rho), &h.delta, &ri]);
    HopfAlgebra::new(name, c, rho.dst.clone(), m, rho.comp(&h.u), delta, h.eps.comp(&ri), Mor::chain(&[rho, &h.s, &ri]))
}

/// Z(A) on A*⊗C. Over Vec it is compared with (A*)^cop after the unit reindexing A*⊗𝟙 ≅ A*.
pub fn centralizer_algebra(a: &HopfAlgebra, co: &Coend) -> Result<CentralizerAlgebra> {
    let c = &a.cat;
    let t = hopf_monad_from_algebra(a, Side::Right)?;
    let mc = coend_hopf_of_monad(&t)?;
    mc.report.clone().into_result()?;
    let rho = reindex_rho(c, &a.a, &mc.hopf.a)?;
    if rho.dst != c.tensor_obj(&c.dual_obj(&a.a), &co.c) {
        return Err(Error::Shape("Z(A) carrier differs from A*⊗C".into()));
    }
    let za = transport(&mc.hopf, &format!("Z({})", a.name), &rho)?;
    let mut report = Report::new("centralizer_algebra");
    report.cover("centralizer_algebra");
    report.merge(mc.report.clone());
    report.merge(check_hopf_algebra(&za));
    if c.n() == 1 {
        let classical = classical_dual_cop(a)?;
        let ri = unit_reindex(c, &za.a, &classical.a)?;
        let rii = ri.inverse()?;
        for (name, x, y) in [
            ("m", Mor::chain(&[&ri, &za.m, &c.tensor(&rii, &rii)]), &classical.m),
            ("u", ri.comp(&za.u), &classical.u),
            ("delta", Mor::chain(&[&c.tensor(&ri, &ri), &za.delta, &rii]), &classical.delta),
            ("eps", za.eps.comp(&rii), &classical.eps),
            ("S", Mor::chain(&[&ri, &za.s, &rii]), &classical.s),
        ] {
            report.check_eq(format!("classical_{name}"), "Vec", &x, y);
        }
    }
    report.clone().into_result()?;
    Ok(CentralizerAlgebra { a: a.clone(), mc, rho, za, report })
}

/// The canonical distributive law Ω: Z(A)⊗A → A⊗Z(A) and its inverse.
#[derive(Clone, Debug)]
pub struct AlgebraLaw {
    pub omega: Mor,
    pub omega_inv: Mor,
    pub monad_law: CanonicalLaw,
    pub certificate: Report,
}

/// ψ_X = (id_{X⊗A} ⊗ ρ) φ_{X⊗A}: Z_T(X⊗A) → X⊗A⊗Z(A).
fn psi_at(za: &CentralizerAlgebra, x: &Obj) -> Mor {
    let c = &za.a.cat;
    let xa = c.tensor_obj(x, &za.a.a);
    c.tensor(&c.id(&xa), &za.rho).comp(&za.mc.phi.at(std::slice::from_ref(&xa)))
}

/// (id_X ⊗ ρ) φ_X: Z_T(X) → X⊗Z(A).
fn chi_at(za: &CentralizerAlgebra, x: &Obj) -> Mor {
    let c = &za.a.cat;
    c.tensor(&c.id(x), &za.rho).comp(&za.mc.phi.at(std::slice::from_ref(x)))
}

/// Ω = (id_A ⊗ ρ) φ_A Ω^T_𝟙 ((ρφ_𝟙)⁻¹ ⊗ id_A), read off from the canonical law of ? ⊗ A.
///
/// The certificate holds the four distributive-law equations, comultiplicativity,
/// agreement of the extracted inverse with the matrix inverse and with
/// (S_B⁻¹⊗S_A⁻¹) τ⁻¹_{B,A} Ω τ_{A,B} (S_A⊗S_B), and agreement of the monad law with id ⊗ Ω.
pub fn canonical_law_algebra(za: &CentralizerAlgebra) -> Result<AlgebraLaw> {
    let (a, b) = (&za.a, &za.za);
    let c = &a.cat;
    let cz = &za.mc.cz;
    let monad_law = canonical_law(cz, &Sampling::default())?;
    let one = Obj::unit();
    let (oa, ob) = (&a.a, &b.a);
    let (ida, idb) = (c.id(oa), c.id(ob));
    let chi1 = chi_at(za, &one).retype(cz.z.t_obj(&one), ob.clone());
    let chi1_inv = chi1.inverse()?;
    let chia = chi_at(za, oa);
    let omega = Mor::chain(&[&chia, &monad_law.omega.at(std::slice::from_ref(&one)), &c.tensor(&chi1_inv, &ida)]);
    let omega_inv = Mor::chain(&[&c.tensor(&chi1, &ida), &monad_law.omega_inv.at(std::slice::from_ref(&one)), &chia.inverse()?]);

    let mut rep = Report::new("canonical_law_algebra");
    rep.cover("canonical_law_algebra");
    let ten = |f: &Mor, g: &Mor| c.tensor(f, g);
    rep.check_eq(
        "law_mult_b",
        "B⊗B⊗A",
        &omega.comp(&ten(&b.m, &ida)),
        &Mor::chain(&[&ten(&ida, &b.m), &ten(&omega, &idb), &ten(&idb, &omega)]),
    );
    rep.check_eq("law_unit_b", "A", &omega.comp(&ten(&b.u, &ida)), &ten(&ida, &b.u));
    rep.check_eq(
        "law_mult_a",
        "B⊗A⊗A",
        &omega.comp(&ten(&idb, &a.m)),
        &Mor::chain(&[&ten(&a.m, &idb), &ten(&ida, &omega), &ten(&omega, &ida)]),
    );
    rep.check_eq("law_unit_a", "B", &omega.comp(&ten(&idb, &a.u)), &ten(&a.u, &idb));
    rep.check_eq(
        "law_comultiplicative",
        "B⊗A",
        &Mor::chain(&[&c.tensors(&[&ida, &c.tau(oa, ob), &idb]), &ten(&a.delta, &b.delta), &omega]),
        &Mor::chain(&[&ten(&omega, &omega), &c.tensors(&[&idb, &c.tau(ob, oa), &ida]), &ten(&b.delta, &a.delta)]),
    );
    rep.check_eq("law_counit", "B⊗A", &ten(&a.eps, &b.eps).comp(&omega), &ten(&b.eps, &a.eps));
    match omega.inverse() {
        Ok(inv) => {
            rep.check_eq("inverse_matrix", "A⊗B", &omega_inv, &inv);
        }
        Err(e) => rep.fail("inverse_matrix", "A⊗B", e.to_string()),
    }
    let formula = Mor::chain(&[&ten(&b.s_inv, &a.s_inv), &c.tau_inv(oa, ob), &omega, &c.tau(oa, ob), &ten(&a.s, &b.s)]);
    rep.check_eq("inverse_antipode_formula", "A⊗B", &omega_inv, &formula);
    let cases: Vec<_> = c
        .simples()
        .map(|x| {
            let lhs = Mor::chain(&[
                &psi_at(za, &x),
                &monad_law.omega.at(std::slice::from_ref(&x)),
                &ten(&chi_at(za, &x).inverse().expect("φ is invertible"), &ida),
            ]);
            (format!("{x:?}"), mismatch(&lhs, &ten(&c.id(&x), &omega)))
        })
        .collect();
    rep.check_all("monad_law_is_id_tensor", cases);
    if !rep.passed() {
        return Err(Error::Validation(Box::new(rep)));
    }
    Ok(AlgebraLaw { omega, omega_inv, monad_law, certificate: rep })
}

/// The double D(A) = A ⊗_Ω Z(A) on A⊗A*⊗C with its R-matrix 𝔯: C⊗C → D(A)⊗D(A).
#[derive(Clone, Debug)]
pub struct BraidedDouble {
    pub a: HopfAlgebra,
    pub za: HopfAlgebra,
    pub omega: Mor,
    pub da: HopfAlgebra,
    pub r: Mor,
    pub coend: Coend,
    pub centralizer: CentralizerAlgebra,
    pub law: AlgebraLaw,
    /// The double of the monad ? ⊗ A.
    pub monad_double: Double,
    pub report: Report,
}

/// The twisted tensor product A ⊗_Ω B: m = (m_A⊗m_B)(id⊗Ω⊗id), the tensor-product coalgebra
/// (id⊗τ_{A,B}⊗id)(Δ_A⊗Δ_B), and S = Ω(S_B⊗S_A)τ_{A,B}, the braided anti-multiplicative
/// extension of the two antipodes.
pub fn twisted_product(a: &HopfAlgebra, b: &HopfAlgebra, omega: &Mor, name: &str) -> Result<HopfAlgebra> {
    let c = &a.cat;
    let (oa, ob) = (&a.a, &b.a);
    let (ida, idb) = (c.id(oa), c.id(ob));
    let m = c.tensor(&a.m, &b.m).comp(&c.tensors(&[&ida, omega, &idb]));
    let delta = c.tensors(&[&ida, &c.tau(oa, ob), &idb]).comp(&c.tensor(&a.delta, &b.delta));
    let s = Mor::chain(&[omega, &c.tensor(&b.s, &a.s), &c.tau(oa, ob)]);
    HopfAlgebra::new(name, c, c.tensor_obj(oa, ob), m, c.tensor(&a.u, &b.u), delta, c.tensor(&a.eps, &b.eps), s)
}

/// Solves 𝔯 from the R-matrix of the monad double transported along ψ:
/// (id_{Y⊗X} ⊗ 𝔯)(τ_{X⊗C,Y} ⊗ id_C)(δ_X ⊗ δ_Y) = (id_Y ⊗ τ_{X,D}⁻¹ ⊗ id_D)(ψ_Y ⊗ ψ_X) R_{X,Y}.
fn solve_r(co: &Coend, za: &CentralizerAlgebra, dbl: &Double, d: &Obj) -> Result<Mor> {
    let c = &za.a.cat;
    let cobj = &co.c;
    let pairs: Vec<(Obj, Obj)> = c.simples().flat_map(|x| c.simples().map(move |y| (x.clone(), y))).collect();
    let cases: Vec<_> = pairs
        .par_iter()
        .map(|(x, y)| {
            let xc = c.tensor_obj(x, cobj);
            let dd = c.tensor(&c.tau(&xc, y), &c.id(cobj)).comp(&c.tensor(&co.delta(x), &co.delta(y)));
            let rt = c.tensor(&psi_at(za, y), &psi_at(za, x)).comp(&dbl.r.at(&[x.clone(), y.clone()]));
            let e_inv = c.tensors(&[&c.id(y), &c.tau_inv(d, x), &c.id(d)]);
            (c.tensor_obj(y, x), dd, e_inv.comp(&rt))
        })
        .collect();
    factor_through(c, &c.tensor_obj(cobj, cobj), &c.tensor_obj(d, d), &cases)
}

/// r₁₂ r₁₃ r₂₃ = r₂₃ r₁₃ r₁₂ for an element r: 𝟙 → D⊗D over Vec. Products in D^{⊗3} are taken
/// factorwise on sparse coordinate vectors.
pub fn yang_baxter(d: &HopfAlgebra, r: &Mor) -> bool {
    let c = &d.cat;
    let n = d.a.len();
    let id = c.id(&d.a);
    let r12 = c.tensor(r, &d.u);
    let r23 = c.tensor(&d.u, r);
    let r13 = c.tensor(&id, &c.tau(&d.a, &d.a)).comp(&r12);
    let vec = |x: &Mor| -> BTreeMap<usize, Scalar> { x.col(0).iter().map(|(k, v)| (*k as usize, v.clone())).collect() };
    let mul = |x: &BTreeMap<usize, Scalar>, y: &BTreeMap<usize, Scalar>| {
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, xv) in x {
            for (j, yv) in y {
                let (xs, ys) = ([i / (n * n), i / n % n, i % n], [j / (n * n), j / n % n, j % n]);
                let cols: Vec<&[(u32, Scalar)]> = (0..3).map(|k| d.m.col(xs[k] * n + ys[k])).collect();
                let w = xv * yv;
                for (p, pv) in cols[0] {
                    for (q, qv) in cols[1] {
                        for (t, tv) in cols[2] {
                            let key = (*p as usize * n + *q as usize) * n + *t as usize;
                            let add = &(&(&w * pv) * qv) * tv;
                            let e = out.entry(key).or_insert_with(|| c.field.zero());
                            *e = &*e + &add;
                        }
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    };
    let (a, b, e) = (vec(&r12), vec(&r13), vec(&r23));
    mul(&mul(&a, &b), &e) == mul(&mul(&e, &b), &a)
}

/// Σ_i (e_i ⊗ ε) ⊗ (1 ⊗ f_i) over Vec, where f_i is the dual basis vector of e_i when `dual_basis`
/// and the vector with the same index otherwise.
pub fn classical_rmatrix(a: &HopfAlgebra, dual_basis: bool) -> Result<Mor> {
    let c = &a.cat;
    if c.n() != 1 {
        return Err(Error::Invalid("the classical R-matrix needs the category Vec".into()));
    }
    let n = a.a.len();
    let dn = n;
    let da = c.dual_obj(&a.a);
    let d = c.tensor_obj(&a.a, &da);
    let dd = c.tensor_obj(&d, &d);
    let units: Vec<(usize, Scalar)> = a.u.col(0).iter().map(|(r, v)| (*r as usize, v.clone())).collect();
    let counit: Vec<(usize, Scalar)> = c.dual_mor(&a.eps).col(0).iter().map(|(r, v)| (*r as usize, v.clone())).collect();
    let mut entries = Vec::new();
    for i in 0..n {
        let fi = if dual_basis { n - 1 - i } else { i };
        for (pe, ve) in &counit {
            for (pu, vu) in &units {
                let left = i * dn + pe;
                let right = pu * dn + fi;
                entries.push((left * d.len() + right, 0, ve * vu));
            }
        }
    }
    Mor::from_entries(Obj::unit(), dd, c.field, entries)
}

/// D(A) with 𝔯, and the suites: the law certificate, the Hopf suite of D(A), the R-matrix
/// axioms, and over Vec the Yang–Baxter equation.
pub fn double_algebra(a: &HopfAlgebra) -> Result<BraidedDouble> {
    let c = &a.cat;
    let co = coend(c)?;
    let centralizer = centralizer_algebra(a, &co)?;
    let law = canonical_law_algebra(&centralizer)?;
    let za = centralizer.za.clone();
    let da = twisted_product(a, &za, &law.omega, &format!("D({})", a.name))?;
    let monad_double = double(&centralizer.mc.cz, &law.monad_law)?;
    let r = solve_r(&co, &centralizer, &monad_double, &da.a)?;

    let mut report = Report::new("double_algebra");
    report.cover("double_algebra");
    report.merge(check_hopf_algebra(&da));
    report.merge(check_algebra_rmatrix(&da, &co, &r, &Sampling::default())?);
    let want = a.a.len() * a.a.len() * co.c.len();
    report.push("dimension", "D(A)", da.dim() == want, Some(format!("dim {} expected {want}", da.dim())));
    if c.n() == 1 {
        report.push("yang_baxter", "Vec", yang_baxter(&da, &r), Some("r12 r13 r23 ≠ r23 r13 r12".into()));
    }
    if !report.passed() {
        return Err(Error::Validation(Box::new(report)));
    }
    let omega = law.omega.clone();
    Ok(BraidedDouble { a: a.clone(), za, omega, da, r, coend: co, centralizer, law, monad_double, report })
}

/// ψ: D_{?⊗A} → ? ⊗ D(A) is an invertible morphism of Hopf monads carrying the R-matrix of
/// the monad double to the R-matrix encoded by 𝔯.
pub fn consistency_double(bd: &BraidedDouble, opts: &Sampling) -> Result<Report> {
    let c = &bd.a.cat;
    let za = &bd.centralizer;
    let dmon = &bd.monad_double.d;
    let target = hopf_monad_from_algebra(&bd.da, Side::Right)?;
    let (src, dst) = Words::morphism(&dmon.t, &target.t);
    let psi = NatTrans::build(c, "ψ", src, dst, 1, |v| Ok(psi_at(za, &Obj::simple(v[0]))))?;
    let mut rep = Report::new("consistency_double");
    rep.cover("consistency_double");
    let inv_cases = c.simples().map(|x| {
        let ok = psi.at(std::slice::from_ref(&x)).inverse().is_ok();
        (format!("{x:?}"), (!ok).then(|| "ψ is not invertible".to_string()))
    });
    rep.check_all("psi_invertible", inv_cases.collect::<Vec<_>>());
    check_naturality(&mut rep, &psi, opts);
    rep.merge(check_monad_morphism(&psi, dmon, &target, opts));
    let enc = monad_rmatrix_from_algebra(&bd.da, &bd.coend, &bd.r)?;
    check_family(&mut rep, "r_transport", c, 2, opts, |v| {
        let (x, y) = (&v[0], &v[1]);
        let psi = |o: &Obj| psi.at(std::slice::from_ref(o));
        (c.tensor(&psi(y), &psi(x)).comp(&bd.monad_double.r.at(&[x.clone(), y.clone()])), enc.at(&[x.clone(), y.clone()]))
    });
    Ok(rep)
}

/// D(𝟙) = C as Hopf algebras after dropping the unit factors, with 𝔯 = u_C ε_C ⊗ id_C.
pub fn check_double_of_unit(c: &Category) -> Result<Report> {
    let bd = double_algebra(&HopfAlgebra::trivial(c))?;
    let (d, h) = (&bd.da, &bd.coend.hopf);
    let mut rep = Report::new("double_of_unit");
    let ri = unit_reindex(c, &d.a, &h.a)?;
    let rii = ri.inverse()?;
    for (name, x, y) in [
        ("m", Mor::chain(&[&ri, &d.m, &c.tensor(&rii, &rii)]), &h.m),
        ("u", ri.comp(&d.u), &h.u),
        ("delta", Mor::chain(&[&c.tensor(&ri, &ri), &d.delta, &rii]), &h.delta),
        ("eps", d.eps.comp(&rii), &h.eps),
        ("S", Mor::chain(&[&ri, &d.s, &rii]), &h.s),
    ] {
        rep.check_eq(format!("d1_{name}"), "D(1) vs C", &x, y);
    }
    let want = c.tensor(&h.u.comp(&h.eps), &c.id(&h.a));
    rep.check_eq("d1_r", "D(1) vs C", &c.tensor(&ri, &ri).comp(&bd.r), &want);
    Ok(rep)
}
