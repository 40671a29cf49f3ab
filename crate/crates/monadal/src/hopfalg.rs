//! Hopf algebras in a braided pointed category, their modules with tensor products and
//! duals, and R-matrices valued in A ⊗ A over the coend.

use std::sync::Arc;

use crate::braided_double::Coend;
use crate::hopfmonad::{check_monad_rmatrix, hopf_monad_from_algebra, NatTrans, Sampling, Side, Words};
use crate::report::Report;
use crate::scalars::Scalar;
use crate::semicat::{Category, Mor, Obj};
use crate::{Error, Result};

/// A Hopf algebra object with its structure morphisms. `mirror` records that the algebra
/// lives in the mirror category, whose braiding is X⊗Y → Y⊗X given by τ⁻¹_{Y,X}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub name: String,
    pub cat: Category,
    pub a: Obj,
    pub m: Mor,
    pub u: Mor,
    pub delta: Mor,
    pub eps: Mor,
    pub s: Mor,
    pub s_inv: Mor,
    pub mirror: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpCop {
    Op,
    Cop,
    CopOp,
}

impl HopfAlgebra {
    /// Assembles a Hopf algebra, computing S⁻¹ by exact inversion. Shapes are checked; the
    /// axioms are left to `check_hopf_algebra`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(name: impl Into<String>, cat: &Category, a: Obj, m: Mor, u: Mor, delta: Mor, eps: Mor, s: Mor) -> Result<HopfAlgebra> {
        let aa = cat.tensor_obj(&a, &a);
        let one = Obj::unit();
        let shapes = [(&m, &aa, &a, "m"), (&u, &one, &a, "u"), (&delta, &a, &aa, "Δ"), (&eps, &a, &one, "ε"), (&s, &a, &a, "S")];
        for (f, src, dst, nm) in shapes {
            if &f.src != src || &f.dst != dst {
                return Err(Error::Shape(format!("{nm} has shape {:?} -> {:?}", f.src, f.dst)));
            }
        }
        let s_inv = s.inverse()?;
        Ok(HopfAlgebra { name: name.into(), cat: cat.clone(), a, m, u, delta, eps, s, s_inv, mirror: false })
    }

    /// The braiding in effect: τ, or its mirror.
    pub fn braid(&self, x: &Obj, y: &Obj) -> Mor {
        if self.mirror {
            self.cat.tau_inv(x, y)
        } else {
            self.cat.tau(x, y)
        }
    }

    /// The inverse braiding X⊗Y → Y⊗X, that is the inverse of `braid(y, x)`.
    pub fn braid_inv(&self, x: &Obj, y: &Obj) -> Mor {
        if self.mirror {
            self.cat.tau(x, y)
        } else {
            self.cat.tau_inv(x, y)
        }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    /// The trivial Hopf algebra 𝟙.
    pub fn trivial(cat: &Category) -> HopfAlgebra {
        let one = Obj::unit();
        let id = cat.id(&one);
        HopfAlgebra::new("1", cat, one, id.clone(), id.clone(), id.clone(), id.clone(), id).expect("unit Hopf algebra")
    }

    /// The group algebra kH of a finite group with Cayley table `table` (identity 0),
    /// concentrated in the unit degree.
    pub fn group_algebra(cat: &Category, name: &str, table: &[Vec<u32>]) -> Result<HopfAlgebra> {
        let n = table.len();
        let f = cat.field;
        let a = Obj(vec![0; n]);
        let aa = cat.tensor_obj(&a, &a);
        let one = Obj::unit();
        let inv: Vec<usize> = (0..n)
            .map(|g| (0..n).find(|&h| table[g][h] == 0).ok_or_else(|| Error::Invalid("group without inverses".into())))
            .collect::<Result<_>>()?;
        let m = Mor::from_entries(aa.clone(), a.clone(), f, (0..n).flat_map(|g| (0..n).map(move |h| (table[g][h] as usize, g * n + h, f.one()))))?;
        let u = Mor::from_entries(one.clone(), a.clone(), f, [(0, 0, f.one())])?;
        let delta = Mor::from_entries(a.clone(), aa, f, (0..n).map(|g| (g * n + g, g, f.one())))?;
        let eps = Mor::from_entries(a.clone(), one, f, (0..n).map(|g| (0, g, f.one())))?;
        let s = Mor::from_entries(a.clone(), a.clone(), f, (0..n).map(|g| (inv[g], g, f.one())))?;
        HopfAlgebra::new(name, cat, a, m, u, delta, eps, s)
    }

    /// Cayley table of Z_n.
    pub fn cyclic_table(n: u32) -> Vec<Vec<u32>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    /// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx with g² = 1, x² = 0,
    /// xg = −gx, Δg = g⊗g and Δx = x⊗1 + g⊗x, concentrated in the unit degree.
    pub fn sweedler(cat: &Category) -> Result<HopfAlgebra> {
        let f = cat.field;
        let a = Obj(vec![0; 4]);
        let aa = cat.tensor_obj(&a, &a);
        let one = Obj::unit();
        let k = |v: i64| f.int(v);
        // products b_i b_j = c b_k, recorded as (i, j, k, c)
        let prod: [(usize, usize, usize, i64); 11] = [
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (0, 2, 2, 1),
            (0, 3, 3, 1),
            (1, 0, 1, 1),
            (2, 0, 2, 1),
            (3, 0, 3, 1),
            (1, 1, 0, 1),
            (1, 2, 3, 1),
            (2, 1, 3, -1),
            (1, 3, 2, 1),
        ];
        let mut me: Vec<(usize, usize, Scalar)> = prod.iter().map(|&(i, j, t, c)| (t, i * 4 + j, k(c))).collect();
        me.push((2, 3 * 4 + 1, k(-1)));
        let m = Mor::from_entries(aa.clone(), a.clone(), f, me)?;
        let u = Mor::from_entries(one.clone(), a.clone(), f, [(0, 0, k(1))])?;
        let delta = Mor::from_entries(
            a.clone(),
            aa,
            f,
            [
                (0, 0, k(1)),
                (5, 1, k(1)),
                (2 * 4, 2, k(1)),
                (4 + 2, 2, k(1)),
                (3 * 4 + 1, 3, k(1)),
                (3, 3, k(1)),
            ],
        )?;
        let eps = Mor::from_entries(a.clone(), one, f, [(0, 0, k(1)), (0, 1, k(1))])?;
        let s = Mor::from_entries(a.clone(), a.clone(), f, [(0, 0, k(1)), (1, 1, k(1)), (3, 2, k(-1)), (2, 3, k(1))])?;
        HopfAlgebra::new("H4", cat, a, m, u, delta, eps, s)
    }

    /// The quantum line k[x]/(x^n) with x in degree 1 of Vec_{Z_n} braided by χ(a,b) = q^{ab},
    /// x primitive. Requires q to be a primitive n-th root of unity.
    pub fn quantum_line(cat: &Category, n: u32, q: &Scalar) -> Result<HopfAlgebra> {
        let f = cat.field;
        if cat.n() != n as usize {
            return Err(Error::Invalid("quantum line needs Vec_{Z_n}".into()));
        }
        let n = n as usize;
        let a = Obj((0..n as u32).collect());
        let aa = cat.tensor_obj(&a, &a);
        let one = Obj::unit();
        let qp = |e: usize| q.pow(e as i64).expect("root of unity");
        // Gaussian binomials [i+j choose i]_q via q-Pascal
        let mut binom = vec![vec![f.zero(); n + 1]; n + 1];
        for t in 0..=n {
            binom[t][0] = f.one();
            for i in 1..=t {
                let left = binom[t - 1][i - 1].clone();
                let right = if i < t { &qp(i) * &binom[t - 1][i] } else { f.zero() };
                binom[t][i] = &left + &right;
            }
        }
        let m = Mor::from_entries(
            aa.clone(),
            a.clone(),
            f,
            (0..n).flat_map(|i| (0..n).filter(move |j| i + j < n).map(move |j| (i + j, i * n + j, f.one()))),
        )?;
        let u = Mor::from_entries(one.clone(), a.clone(), f, [(0, 0, f.one())])?;
        let mut de = Vec::new();
        for t in 0..n {
            for i in 0..=t {
                let c = binom[t][i].clone();
                if !c.is_zero() {
                    de.push((i * n + (t - i), t, c));
                }
            }
        }
        let delta = Mor::from_entries(a.clone(), aa, f, de)?;
        let eps = Mor::from_entries(a.clone(), one, f, [(0, 0, f.one())])?;
        let s = Mor::from_entries(
            a.clone(),
            a.clone(),
            f,
            (0..n).map(|t| {
                let sign = if t % 2 == 0 { f.one() } else { f.int(-1) };
                (t, t, &sign * &qp(t * t.saturating_sub(1) / 2))
            }),
        )?;
        HopfAlgebra::new(format!("k[x]/x^{n}"), cat, a, m, u, delta, eps, s)
    }
}

/// The twelve bialgebra and antipode axioms and invertibility of S, each reported
/// separately, plus anti-multiplicativity of S.
pub fn check_hopf_algebra(h: &HopfAlgebra) -> Report {
    let mut rep = Report::new("check_hopf_algebra");
    rep.cover("check_hopf_algebra");
    let s = HopfData { a: &h.a, m: &h.m, u: &h.u, delta: &h.delta, eps: &h.eps, s: &h.s, s_inv: &h.s_inv };
    hopf_axioms(&mut rep, &h.cat, &h.name, &s, &h.braid(&h.a, &h.a));
    rep
}

/// Borrowed structure morphisms of a Hopf algebra object.
pub struct HopfData<'a> {
    pub a: &'a Obj,
    pub m: &'a Mor,
    pub u: &'a Mor,
    pub delta: &'a Mor,
    pub eps: &'a Mor,
    pub s: &'a Mor,
    pub s_inv: &'a Mor,
}

/// The Hopf algebra axioms with an explicit braiding `braid_aa`: A⊗A → A⊗A.
pub fn hopf_axioms(rep: &mut Report, c: &Category, loc: &str, h: &HopfData, braid_aa: &Mor) {
    let a = h.a;
    let one = Obj::unit();
    let ida = c.id(a);
    let ten = |f: &Mor, g: &Mor| c.tensor(f, g);
    let aa = c.tensor_obj(a, a);
    let shapes = [
        (h.m, &aa, a, "m"),
        (h.u, &one, a, "u"),
        (h.delta, a, &aa, "delta"),
        (h.eps, a, &one, "eps"),
        (h.s, a, a, "S"),
        (h.s_inv, a, a, "S_inv"),
        (braid_aa, &aa, &aa, "braiding"),
    ];
    for (f, src, dst, nm) in shapes {
        if &f.src != src || &f.dst != dst {
            rep.fail("shapes", loc, format!("{nm}: {:?} -> {:?}", f.src, f.dst));
            return;
        }
    }
    rep.pass("shapes", loc);
    rep.check_eq("assoc", loc, &h.m.comp(&ten(h.m, &ida)), &h.m.comp(&ten(&ida, h.m)));
    rep.check_eq("unit_left", loc, &h.m.comp(&ten(h.u, &ida)), &ida);
    rep.check_eq("unit_right", loc, &h.m.comp(&ten(&ida, h.u)), &ida);
    rep.check_eq("coassoc", loc, &ten(h.delta, &ida).comp(h.delta), &ten(&ida, h.delta).comp(h.delta));
    rep.check_eq("counit_left", loc, &ten(h.eps, &ida).comp(h.delta), &ida);
    rep.check_eq("counit_right", loc, &ten(&ida, h.eps).comp(h.delta), &ida);
    let mid = c.tensors(&[&ida, braid_aa, &ida]);
    rep.check_eq(
        "bialgebra_delta_m",
        loc,
        &h.delta.comp(h.m),
        &Mor::chain(&[&ten(h.m, h.m), &mid, &ten(h.delta, h.delta)]),
    );
    rep.check_eq("bialgebra_delta_u", loc, &h.delta.comp(h.u), &ten(h.u, h.u));
    rep.check_eq("bialgebra_eps_m", loc, &h.eps.comp(h.m), &ten(h.eps, h.eps));
    rep.check_eq("bialgebra_eps_u", loc, &h.eps.comp(h.u), &c.id(&one));
    let ue = h.u.comp(h.eps);
    rep.check_eq("antipode_left", loc, &Mor::chain(&[h.m, &ten(h.s, &ida), h.delta]), &ue);
    rep.check_eq("antipode_right", loc, &Mor::chain(&[h.m, &ten(&ida, h.s), h.delta]), &ue);
    let inv_ok = h.s.comp(h.s_inv) == ida && h.s_inv.comp(h.s) == ida;
    rep.push("antipode_invertible", loc, inv_ok, Some("S∘S_inv or S_inv∘S is not the identity".into()));
    rep.check_eq(
        "antipode_antimultiplicative",
        loc,
        &h.s.comp(h.m),
        &Mor::chain(&[h.m, braid_aa, &ten(h.s, h.s)]),
    );
}

/// Opposite, co-opposite, or both. Op and cop alone live in the mirror category.
pub fn op_cop(h: &HopfAlgebra, which: OpCop) -> HopfAlgebra {
    let a = &h.a;
    match which {
        OpCop::Op => HopfAlgebra {
            name: format!("{}^op", h.name),
            m: h.m.comp(&h.braid_inv(a, a)),
            s: h.s_inv.clone(),
            s_inv: h.s.clone(),
            mirror: !h.mirror,
            ..h.clone()
        },
        OpCop::Cop => HopfAlgebra {
            name: format!("{}^cop", h.name),
            delta: h.braid_inv(a, a).comp(&h.delta),
            s: h.s_inv.clone(),
            s_inv: h.s.clone(),
            mirror: !h.mirror,
            ..h.clone()
        },
        OpCop::CopOp => {
            let mut out = op_cop(&op_cop(h, OpCop::Cop), OpCop::Op);
            out.name = format!("{}^cop,op", h.name);
            out
        }
    }
}

/// The dual Hopf algebra with the co-opposite coproduct, for algebras over Vec.
pub fn classical_dual_cop(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let c = &h.cat;
    if c.n() != 1 {
        return Err(Error::Invalid("classical_dual_cop needs the category Vec".into()));
    }
    let a = &h.a;
    let iso = c.dual_tensor_iso(a, a);
    let dcop = h.braid_inv(a, a).comp(&h.delta);
    let m = c.dual_mor(&dcop).comp(&iso);
    let delta = iso.inverse()?.comp(&c.dual_mor(&h.m));
    let mut out = HopfAlgebra::new(
        format!("({}*)^cop", h.name),
        c,
        c.dual_obj(a),
        m,
        c.dual_mor(&h.eps),
        delta,
        c.dual_mor(&h.u),
        // the co-opposite coproduct takes the inverse antipode
        c.dual_mor(&h.s_inv),
    )?;
    out.mirror = h.mirror;
    Ok(out)
}

/// A module over a Hopf algebra; the action is A⊗M → M on the left or M⊗A → M on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleObj {
    pub m: Obj,
    pub r: Mor,
    pub side: Side,
}

/// Which dual of a module.
pub use crate::hopfmonad::DualSide;

impl ModuleObj {
    /// The regular module (A, m).
    pub fn free(h: &HopfAlgebra, side: Side) -> ModuleObj {
        ModuleObj { m: h.a.clone(), r: h.m.clone(), side }
    }

    /// The trivial module (1, ε).
    pub fn trivial(h: &HopfAlgebra, side: Side) -> ModuleObj {
        ModuleObj { m: Obj::unit(), r: h.eps.clone(), side }
    }

    /// The free module X⊗A (right) or A⊗X (left) on an object.
    pub fn induced(h: &HopfAlgebra, x: &Obj, side: Side) -> ModuleObj {
        let c = &h.cat;
        match side {
            Side::Right => ModuleObj { m: c.tensor_obj(x, &h.a), r: c.tensor(&c.id(x), &h.m), side },
            Side::Left => ModuleObj { m: c.tensor_obj(&h.a, x), r: c.tensor(&h.m, &c.id(x)), side },
        }
    }
}

pub fn check_module(h: &HopfAlgebra, md: &ModuleObj) -> Report {
    let c = &h.cat;
    let mut rep = Report::new("check_module");
    rep.cover("check_module");
    let (a, m) = (&h.a, &md.m);
    let loc = format!("{m:?}");
    let (ida, idm) = (c.id(a), c.id(m));
    match md.side {
        Side::Left => {
            let src = c.tensor_obj(a, m);
            if md.r.src != src || md.r.dst != *m {
                rep.fail("action_shape", loc, "left action must map A⊗M to M");
                return rep;
            }
            rep.pass("action_shape", &loc);
            rep.check_eq("action_assoc", &loc, &md.r.comp(&c.tensor(&h.m, &idm)), &md.r.comp(&c.tensor(&ida, &md.r)));
            rep.check_eq("action_unit", &loc, &md.r.comp(&c.tensor(&h.u, &idm)), &idm);
        }
        Side::Right => {
            let src = c.tensor_obj(m, a);
            if md.r.src != src || md.r.dst != *m {
                rep.fail("action_shape", loc, "right action must map M⊗A to M");
                return rep;
            }
            rep.pass("action_shape", &loc);
            rep.check_eq("action_assoc", &loc, &md.r.comp(&c.tensor(&idm, &h.m)), &md.r.comp(&c.tensor(&md.r, &ida)));
            rep.check_eq("action_unit", &loc, &md.r.comp(&c.tensor(&idm, &h.u)), &idm);
        }
    }
    rep
}

fn require(h: &HopfAlgebra, md: &ModuleObj) -> Result<()> {
    check_module(h, md).into_result().map(|_| ())
}

/// Tensor product of two modules on the same side.
pub fn module_tensor(h: &HopfAlgebra, x: &ModuleObj, y: &ModuleObj) -> Result<ModuleObj> {
    if x.side != y.side {
        return Err(Error::Invalid("module_tensor needs modules on the same side".into()));
    }
    require(h, x)?;
    require(h, y)?;
    Ok(module_tensor_unchecked(h, x, y))
}

pub(crate) fn module_tensor_unchecked(h: &HopfAlgebra, x: &ModuleObj, y: &ModuleObj) -> ModuleObj {
    let c = &h.cat;
    let a = &h.a;
    let (m, n) = (&x.m, &y.m);
    let rs = c.tensor(&x.r, &y.r);
    let r = match x.side {
        Side::Left => Mor::chain(&[
            &rs,
            &c.tensors(&[&c.id(a), &h.braid(a, m), &c.id(n)]),
            &c.tensor(&h.delta, &c.id(&c.tensor_obj(m, n))),
        ]),
        Side::Right => Mor::chain(&[
            &rs,
            &c.tensors(&[&c.id(m), &h.braid(n, a), &c.id(a)]),
            &c.tensor(&c.id(&c.tensor_obj(m, n)), &h.delta),
        ]),
    };
    ModuleObj { m: c.tensor_obj(m, n), r, side: x.side }
}

/// Left or right dual of a module.
pub fn module_dual(h: &HopfAlgebra, x: &ModuleObj, dual: DualSide) -> Result<ModuleObj> {
    require(h, x)?;
    Ok(module_dual_unchecked(h, x, dual))
}

pub(crate) fn module_dual_unchecked(h: &HopfAlgebra, x: &ModuleObj, dual: DualSide) -> ModuleObj {
    let c = &h.cat;
    let (a, m) = (&h.a, &x.m);
    let dm = c.dual_obj(m);
    let (ida, idm, iddm) = (c.id(a), c.id(m), c.id(&dm));
    let ten = |f: &Mor, g: &Mor| c.tensor(f, g);
    let r = match (x.side, dual) {
        (Side::Left, DualSide::Left) => Mor::chain(&[
            &ten(&c.ev(m), &iddm),
            &c.tensors(&[&iddm, &x.r.comp(&ten(&h.s, &idm)), &iddm]),
            &ten(&h.braid(a, &dm), &c.coev(m)),
        ]),
        (Side::Left, DualSide::Right) => Mor::chain(&[
            &ten(&iddm, &c.ev_r(m)),
            &c.tensors(&[&iddm, &x.r.comp(&h.braid_inv(m, a)), &iddm]),
            &c.tensors(&[&c.coev_r(m), &h.s_inv, &iddm]),
        ]),
        (Side::Right, DualSide::Left) => Mor::chain(&[
            &ten(&c.ev(m), &iddm),
            &c.tensors(&[&iddm, &x.r.comp(&h.braid_inv(a, m)), &iddm]),
            &c.tensors(&[&iddm, &h.s_inv, &c.coev(m)]),
        ]),
        (Side::Right, DualSide::Right) => Mor::chain(&[
            &ten(&iddm, &c.ev_r(m)),
            &c.tensors(&[&iddm, &x.r.comp(&ten(&idm, &h.s)), &iddm]),
            &ten(&c.coev_r(m), &h.braid(&dm, a)),
        ]),
    };
    let _ = ida;
    ModuleObj { m: dm, r, side: x.side }
}

/// Whether f intertwines two module actions.
pub fn is_module_map(h: &HopfAlgebra, f: &Mor, x: &ModuleObj, y: &ModuleObj) -> bool {
    let c = &h.cat;
    let ida = c.id(&h.a);
    match x.side {
        Side::Left => f.comp(&x.r) == y.r.comp(&c.tensor(&ida, f)),
        Side::Right => f.comp(&x.r) == y.r.comp(&c.tensor(f, &ida)),
    }
}

/// The R-matrix of the Hopf monad ? ⊗ A encoded by 𝔯: C⊗C → A⊗A,
/// R_{X,Y} = (id_Y ⊗ τ_{X,A} ⊗ id_A)(id_{Y⊗X} ⊗ 𝔯)(τ_{X⊗C,Y} ⊗ id_C)(δ_X ⊗ δ_Y).
pub fn monad_rmatrix_from_algebra(h: &HopfAlgebra, coend: &Coend, r: &Mor) -> Result<NatTrans> {
    let c = &h.cat;
    let (a, cc) = (&h.a, &coend.hopf.a);
    let want_src = c.tensor_obj(cc, cc);
    let want_dst = c.tensor_obj(a, a);
    if r.src != want_src || r.dst != want_dst {
        return Err(Error::Shape("r must map C⊗C to A⊗A".into()));
    }
    let t = Arc::new(crate::hopfmonad::Functor::new(
        format!("?⊗{}", h.name),
        (0..c.n() as u32).map(|i| c.tensor_obj(&Obj::simple(i), a)).collect(),
    ));
    let (src, dst) = Words::rmatrix(&t);
    NatTrans::build(c, "R", src, dst, 2, |v| {
        let (x, y) = (Obj::simple(v[0]), Obj::simple(v[1]));
        let xc = c.tensor_obj(&x, cc);
        Ok(Mor::chain(&[
            &c.tensors(&[&c.id(&y), &c.tau(&x, a), &c.id(a)]),
            &c.tensor(&c.id(&c.tensor_obj(&y, &x)), r),
            &c.tensor(&c.tau(&xc, &y), &c.id(cc)),
            &c.tensor(&coend.delta(&x), &coend.delta(&y)),
        ]))
    })
}

/// The R-matrix axioms for 𝔯, checked as the axioms of the encoded R-matrix of ? ⊗ A.
pub fn check_algebra_rmatrix(h: &HopfAlgebra, coend: &Coend, r: &Mor, opts: &Sampling) -> Result<Report> {
    let monad = hopf_monad_from_algebra(h, Side::Right)?;
    let rr = monad_rmatrix_from_algebra(h, coend, r)?;
    let mut rep = check_monad_rmatrix(&monad, &rr, opts);
    rep.pipeline = "check_algebra_rmatrix".into();
    rep.cover("check_algebra_rmatrix");
    Ok(rep)
}

/// The braiding c = (s ⊗ r) R_{M,N} of two right modules.
pub fn braiding_from_rmatrix(h: &HopfAlgebra, coend: &Coend, r: &Mor, x: &ModuleObj, y: &ModuleObj) -> Result<Mor> {
    if x.side != Side::Right || y.side != Side::Right {
        return Err(Error::Invalid("braidings are defined on right modules".into()));
    }
    let rr = monad_rmatrix_from_algebra(h, coend, r)?;
    Ok(h.cat.tensor(&y.r, &x.r).comp(&rr.at(&[x.m.clone(), y.m.clone()])))
}
