//! Centralizers of Hopf monads on pointed categories, the canonical distributive law, the
//! double with its R-matrix, the relative center, and coends of module categories.
//!
//! Z_T(X) is the direct sum over simples i of T(V_i)* ⊗ X ⊗ V_i, with the universal coaction
//! ∂_{X,Y} = (id ⊗ ι_Y)(coev_{T(Y)} ⊗ id_{X⊗Y}). A morphism out of Z_T(X) is fixed by its
//! composites with the dinatural maps i_{X,Y}, and every structure morphism of Z_T is
//! obtained by solving its defining identity through that factorization.

use std::sync::Arc;

use rayon::prelude::*;

use crate::hopfalg::{hopf_axioms, HopfData};
use crate::hopfmonad::{
    check_distributive_law, check_family, check_hopf_monad, check_monad_rmatrix, check_naturality, check_tmodule,
    compose_with_law, free_module, invert_law, is_tlinear, module_braiding, random_tmodule, tmodule_tensor,
    unit_module, Functor, HopfMonad, NatTrans, Sampling, TModule, Word, Words,
};
use crate::linalg::{solve_linear, solve_right};
use crate::report::{mismatch, Report};
use crate::semicat::{Category, Mor, Obj};
use crate::{Error, Result};

/// The centralizer Z_T of a Hopf monad T, with its universal coaction ∂.
#[derive(Clone, Debug)]
pub struct Centralizer {
    pub t: HopfMonad,
    pub z: HopfMonad,
    /// ∂_{X,Y}: X⊗Y → T(Y)⊗Z_T(X).
    pub del: NatTrans,
}

/// The functor Z_T on simples: V_x ↦ ⊕_i T(V_i)* ⊗ V_x ⊗ V_i.
pub fn z_functor(t: &HopfMonad) -> Functor {
    let c = &t.cat;
    let on_simple = (0..c.n() as u32)
        .map(|x| {
            let parts: Vec<Obj> = (0..c.n() as u32)
                .map(|i| {
                    let vi = Obj::simple(i);
                    c.tensor_objs(&[&c.dual_obj(&t.t_obj(&vi)), &Obj::simple(x), &vi])
                })
                .collect();
            Obj::concat(&parts.iter().collect::<Vec<_>>())
        })
        .collect();
    Functor::new(format!("Z[{}]", t.name), on_simple)
}

/// (ev_W ⊗ id)(id_{*W} ⊗ d): *W ⊗ S → L for d: S → W ⊗ L, computed entrywise.
pub(crate) fn bend(c: &Category, w: &Obj, l: &Obj, d: &Mor) -> Mor {
    let (nw, nl, ns) = (w.len(), l.len(), d.src.len());
    let src = c.tensor_obj(&c.dual_obj(w), &d.src);
    let entries: Vec<_> = d
        .entries()
        .map(|(r, s, v)| {
            let (wi, li) = (r / nl, r % nl);
            (li, (nw - 1 - wi) * ns + s, v.clone())
        })
        .collect();
    Mor::from_entries_unchecked(src, l.clone(), c.field, entries)
}

/// The unique f: C → L with (id_W ⊗ f) d = ξ for every case (W, d: S → W⊗C, ξ: S → W⊗L).
///
/// The bent maps of the d's must be jointly surjective onto C, as the dinatural maps of a
/// coend are; the solution is verified exactly.
pub fn factor_through(c: &Category, from: &Obj, to: &Obj, cases: &[(Obj, Mor, Mor)]) -> Result<Mor> {
    let (ks, gs): (Vec<Mor>, Vec<Mor>) =
        cases.par_iter().map(|(w, d, xi)| (bend(c, w, from, d), bend(c, w, to, xi))).unzip();
    if cases.is_empty() {
        return Err(Error::Solve("factor_through: no cases".into()));
    }
    let k = Mor::hcat(&ks);
    let g = Mor::hcat(&gs);
    if k.dst != *from || g.dst != *to {
        return Err(Error::Shape("factor_through: case shapes".into()));
    }
    solve_right(&g, &k)
}

fn sorted(o: &Obj) -> Vec<u32> {
    let mut v = o.0.clone();
    v.sort_unstable();
    v
}

impl Centralizer {
    pub fn cat(&self) -> &Category {
        &self.t.cat
    }

    pub fn partial(&self, x: &Obj, y: &Obj) -> Mor {
        self.del.at(&[x.clone(), y.clone()])
    }

    /// i_{X,Y} = (ev_{T(Y)} ⊗ id)(id ⊗ ∂_{X,Y}): T(Y)* ⊗ X ⊗ Y → Z_T(X).
    pub fn dinat(&self, x: &Obj, y: &Obj) -> Mor {
        bend(self.cat(), &self.t.t_obj(y), &self.z.t_obj(x), &self.partial(x, y))
    }

    /// ∂²_{X,Y1,Y2} = (id ⊗ ∂_{Z(X),Y2})(∂_{X,Y1} ⊗ id): X⊗Y1⊗Y2 → T(Y1)⊗T(Y2)⊗Z²(X).
    pub fn partial2(&self, x: &Obj, y1: &Obj, y2: &Obj) -> Mor {
        let c = self.cat();
        let zx = self.z.t_obj(x);
        c.tensor(&c.id(&self.t.t_obj(y1)), &self.partial(&zx, y2)).comp(&c.tensor(&self.partial(x, y1), &c.id(y2)))
    }

    /// Solves for f: Z_T(X) → L from the values (id ⊗ f)∂_{X,V_y} given by `xi` at each simple y.
    pub fn factor<F>(&self, x: &Obj, to: &Obj, xi: F) -> Result<Mor>
    where
        F: Fn(&Obj) -> Mor + Sync,
    {
        let c = self.cat();
        let cases: Vec<(Obj, Mor, Mor)> = c
            .simples()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|y| (self.t.t_obj(y), self.partial(x, y), xi(y)))
            .collect();
        factor_through(c, &self.z.t_obj(x), to, &cases)
    }
}

/// Builds Z_T with ∂, and solves the six structure morphisms from their defining identities:
/// (id⊗μ_X)∂² = (T_2⊗id)∂_{X,Y1⊗Y2}, u_X = (T_0⊗id)∂_{X,1},
/// (id⊗(Z_T)_2)∂_{X1⊗X2,Y} = (μ_Y⊗id)(∂_{X1,T(Y)}⊗id)(id⊗∂_{X2,Y}), (id⊗(Z_T)_0)∂_{1,Y} = η_Y,
/// and the antipodes from the dual coactions twisted by the antipodes of T.
pub fn centralize(t: &HopfMonad) -> Result<Centralizer> {
    let c = &t.cat;
    let zf = Arc::new(z_functor(t));
    let n = c.n() as u32;
    let offsets: Vec<usize> = (0..n).scan(0, |acc, i| {
        let o = *acc;
        *acc += t.t_obj(&Obj::simple(i)).len();
        Some(o)
    }).collect();
    let src = Word::tensor(Word::var(0), Word::var(1));
    let dst = Word::tensor(Word::ap(&t.t, Word::var(1)), Word::ap(&zf, Word::var(0)));
    let del = NatTrans::build(c, "partial", src, dst, 2, |v| {
        let (x, y) = (Obj::simple(v[0]), Obj::simple(v[1]));
        let ty = t.t_obj(&y);
        let zx = zf.apply_obj(&x);
        let nt = ty.len();
        let off = offsets[v[1] as usize];
        let entries = (0..nt).map(|b| (b * zx.len() + off + (nt - 1 - b), 0, c.one()));
        Mor::from_entries(c.tensor_obj(&x, &y), c.tensor_obj(&ty, &zx), c.field, entries)
    })?;
    let placeholder = HopfMonad::identity(c);
    let mut cz = Centralizer { t: t.clone(), z: HopfMonad { t: zf.clone(), ..placeholder }, del };
    let simples: Vec<Obj> = c.simples().collect();
    let zobj = |x: &Obj| zf.apply_obj(x);
    let id = |x: &Obj| c.id(x);
    let ten = |a: &Mor, b: &Mor| c.tensor(a, b);
    let part = |x: &Obj, y: &Obj| cz.partial(x, y);
    let cz_ref = &cz;

    let mu = |x: u32| {
        let x = Obj::simple(x);
        let zx = zobj(&x);
        let mut cases = Vec::new();
        for y1 in &simples {
            for y2 in &simples {
                let w = c.tensor_obj(&t.t_obj(y1), &t.t_obj(y2));
                let d = cz_ref.partial2(&x, y1, y2);
                let xi = ten(&t.t2(y1, y2), &id(&zx)).comp(&part(&x, &c.tensor_obj(y1, y2)));
                cases.push((w, d, xi));
            }
        }
        factor_through(c, &zobj(&zx), &zx, &cases)
    };
    let eta = |x: u32| {
        let x = Obj::simple(x);
        Ok(ten(&t.t0(), &id(&zobj(&x))).comp(&part(&x, &Obj::unit())))
    };
    let z2 = |x1: u32, x2: u32| {
        let (x1, x2) = (Obj::simple(x1), Obj::simple(x2));
        let x12 = c.tensor_obj(&x1, &x2);
        let (zx1, zx2) = (zobj(&x1), zobj(&x2));
        cz_ref.factor(&x12, &c.tensor_obj(&zx1, &zx2), |y| {
            let ty = t.t_obj(y);
            Mor::chain(&[
                &ten(&t.mu(y), &id(&c.tensor_obj(&zx1, &zx2))),
                &ten(&part(&x1, &ty), &id(&zx2)),
                &ten(&id(&x1), &part(&x2, y)),
            ])
        })
    };
    let z0 = cz.factor(&Obj::unit(), &Obj::unit(), |y| t.eta(y))?;
    let antipode = |x: u32, left: bool| {
        let x = Obj::simple(x);
        let zx = zobj(&x);
        let dzx = c.dual_obj(&zx);
        let dx = c.dual_obj(&x);
        let cases: Vec<(Obj, Mor, Mor)> = simples
            .par_iter()
            .map(|y| {
                let ty = t.t_obj(y);
                let dty = c.dual_obj(&ty);
                let dy = c.dual_obj(y);
                let s = if left { t.sr(y) } else { t.sl(y) };
                let inner = ten(&s, &id(&zx)).comp(&part(&x, &dty));
                let (iso_a, iso_b) = if left {
                    (c.dual_tensor_iso(&x, &dty), c.dual_tensor_iso(&dy, &zx))
                } else {
                    (c.dual_tensor_iso_r(&x, &dty), c.dual_tensor_iso_r(&dy, &zx))
                };
                let xi = Mor::chain(&[&iso_a.inverse().expect("permutation"), &c.dual_mor(&inner), &iso_b]);
                (ty, part(&dzx, y), xi)
            })
            .collect();
        factor_through(c, &zobj(&dzx), &dx, &cases)
    };
    let sl = |x: u32| antipode(x, true);
    let sr = |x: u32| antipode(x, false);
    let z = HopfMonad::from_components(c, format!("Z({})", t.name), zf.clone(), &mu, &eta, &z2, z0, &sl, &sr)?;
    cz.z = z;
    Ok(cz)
}

/// Hopf monad axioms of Z_T together with the defining identities of its structure, the
/// naturality of ∂, dinaturality of i, and the universal factorization property.
pub fn check_centralizer(cz: &Centralizer, opts: &Sampling) -> Report {
    let c = cz.cat();
    let (t, z) = (&cz.t, &cz.z);
    let mut rep = Report::new("check_centralizer");
    rep.cover("centralize");
    let id = |x: &Obj| c.id(x);
    let ten = |a: &Mor, b: &Mor| c.tensor(a, b);
    let part = |x: &Obj, y: &Obj| cz.partial(x, y);
    check_naturality(&mut rep, &cz.del, opts);
    let mut rng = opts.rng("dinat");
    let mut dinat = Vec::new();
    for _ in 0..opts.samples.max(1) {
        let x = c.random_obj(&mut rng, opts.max_len);
        let (y, y2) = (c.random_obj(&mut rng, opts.max_len), c.random_obj(&mut rng, opts.max_len));
        let f = c.random_mor(&mut rng, &y, &y2);
        let l = cz.dinat(&x, &y).comp(&c.tensors(&[&c.dual_mor(&t.t_mor(&f)), &id(&x), &id(&y)]));
        let r = cz.dinat(&x, &y2).comp(&c.tensors(&[&id(&c.dual_obj(&t.t_obj(&y2))), &id(&x), &f]));
        dinat.push((format!("{x:?} {y:?}->{y2:?}"), mismatch(&l, &r)));
    }
    rep.check_all("dinaturality", dinat);
    let mut rng = opts.rng("universal");
    let mut xs: Vec<Obj> = c.simples().collect();
    xs.extend((0..opts.samples).map(|_| c.random_obj(&mut rng, opts.max_len)));
    let univ: Vec<(String, Option<String>)> = xs
        .iter()
        .map(|x| {
            let parts: Vec<Mor> = c.simples().map(|y| cz.dinat(x, &y)).collect();
            let k = Mor::hcat(&parts);
            let ok = k.src.len() == k.dst.len() && k.inverse().is_ok();
            (format!("{x:?}"), (!ok).then(|| "dinatural maps do not form a bijection".to_string()))
        })
        .collect();
    rep.check_all("universal_factorization", univ);
    check_family(&mut rep, "defining_mu", c, 3, opts, |v| {
        let (x, y1, y2) = (&v[0], &v[1], &v[2]);
        let l = ten(&id(&c.tensor_obj(&t.t_obj(y1), &t.t_obj(y2))), &z.mu(x)).comp(&cz.partial2(x, y1, y2));
        let r = ten(&t.t2(y1, y2), &id(&z.t_obj(x))).comp(&part(x, &c.tensor_obj(y1, y2)));
        (l, r)
    });
    check_family(&mut rep, "defining_eta", c, 1, opts, |v| {
        let x = &v[0];
        (z.eta(x), ten(&t.t0(), &id(&z.t_obj(x))).comp(&part(x, &Obj::unit())))
    });
    check_family(&mut rep, "defining_z2", c, 3, opts, |v| {
        let (x1, x2, y) = (&v[0], &v[1], &v[2]);
        let ty = t.t_obj(y);
        let (zx1, zx2) = (z.t_obj(x1), z.t_obj(x2));
        let l = ten(&id(&ty), &z.t2(x1, x2)).comp(&part(&c.tensor_obj(x1, x2), y));
        let r = Mor::chain(&[
            &ten(&t.mu(y), &id(&c.tensor_obj(&zx1, &zx2))),
            &ten(&part(x1, &ty), &id(&zx2)),
            &ten(&id(x1), &part(x2, y)),
        ]);
        (l, r)
    });
    check_family(&mut rep, "defining_z0", c, 1, opts, |v| {
        let y = &v[0];
        (ten(&id(&t.t_obj(y)), &z.t0()).comp(&part(&Obj::unit(), y)), t.eta(y))
    });
    rep.merge(check_hopf_monad(z, opts));
    rep
}

/// Compares the simple multisets of Z(V_x), Z(1)⊗V_x and V_x⊗Z(1) for the centralizer of the
/// identity monad, and whether Z(V_x) ≅ V_x^{#G}. Returns that answer with the report; the
/// conjugation multiset ⊕_g g⁻¹xg serves as an independent oracle.
pub fn check_nonrepresentability(c: &Category, x: u32) -> Result<(bool, Report)> {
    let mut rep = Report::new("check_nonrepresentability");
    rep.cover("check_nonrepresentability");
    let cz = centralize(&HopfMonad::identity(c))?;
    let vx = Obj::simple(x);
    let z1 = cz.z.t_obj(&Obj::unit());
    let zx = sorted(&cz.z.t_obj(&vx));
    let left = sorted(&c.tensor_obj(&z1, &vx));
    let right = sorted(&c.tensor_obj(&vx, &z1));
    let power = vec![x; c.n()];
    let mut conj: Vec<u32> = (0..c.n() as u32).map(|g| c.mul(c.mul(c.inv(g), x), g)).collect();
    conj.sort_unstable();
    let loc = format!("x={x}");
    rep.push("conjugation_oracle", &loc, zx == conj, Some(format!("Z(x) = {zx:?}, oracle {conj:?}")));
    rep.push("unit_orbit_left", &loc, left == power, Some(format!("Z(1)⊗x = {left:?}")));
    rep.push("unit_orbit_right", &loc, right == power, Some(format!("x⊗Z(1) = {right:?}")));
    let representable = zx == power;
    let central = (0..c.n() as u32).all(|g| c.mul(g, x) == c.mul(x, g));
    rep.push(
        "representable_iff_central",
        &loc,
        representable == central,
        Some(format!("Z(x) ≅ x^n is {representable}, x central is {central}")),
    );
    Ok((representable, rep))
}

/// The components of Ω alone, without the certificate.
pub fn canonical_law_components(cz: &Centralizer) -> Result<NatTrans> {
    let c = cz.cat();
    let (t, z) = (&cz.t, &cz.z);
    let (src, dst) = Words::law(&t.t, &z.t);
    NatTrans::build(c, "Omega", src, dst, 1, |v| {
        let x = Obj::simple(v[0]);
        let tx = t.t_obj(&x);
        let blocks: Vec<Mor> = c
            .simples()
            .map(|vi| {
                let tvi = t.t_obj(&vi);
                let dtvi = c.dual_obj(&tvi);
                let ph = phi(t, &vi);
                let dec = c.decompose(&tvi);
                let t3 = t.t3(&dtvi, &x, &vi);
                let mut acc = Mor::zero(t3.src.clone(), z.t_obj(&tx), c.field);
                for vj in c.simples() {
                    let j = vj.0[0];
                    for a in 0..dec.multiplicity(j) {
                        let (p, q) = (dec.p(j, a, c.field), dec.q(j, a, c.field));
                        let left = c.dual_mor(&t.t_mor(&q)).comp(&ph);
                        let term = Mor::chain(&[&cz.dinat(&tx, &vj), &c.tensors(&[&left, &c.id(&tx), &p]), &t3]);
                        acc = acc.add(&term);
                    }
                }
                acc
            })
            .collect();
        Ok(Mor::hcat(&blocks))
    })
}

/// The canonical distributive law Ω: T Z_T → Z_T T, its inverse, and the certificate.
#[derive(Clone, Debug)]
pub struct CanonicalLaw {
    pub omega: NatTrans,
    pub omega_inv: NatTrans,
    pub certificate: Report,
}

/// φ_Y = *μ_Y s^l_{T(Y)} T(*μ_Y): T(T(Y)*) → T(T(Y))*.
fn phi(t: &HopfMonad, y: &Obj) -> Mor {
    let c = &t.cat;
    let dmu = c.dual_mor(&t.mu(y));
    Mor::chain(&[&dmu, &t.sl(&t.t_obj(y)), &t.t_mor(&dmu)])
}

/// Ω_X = Σ_{i,j,α} i_{T(X),V_j}(*T(q^{j,α}) φ_{V_i} ⊗ id ⊗ p^{j,α}) T_3(T(V_i)*, X, V_i) on the
/// summand T(T(V_i)*⊗X⊗V_i), with the certificate: Beck equations and comonoidality, the
/// characterization (μ_Y⊗Ω_X)T_2T(∂_{X,Y}) = (μ_Y⊗id)∂_{T(X),T(Y)}T_2(X,Y), and agreement
/// of the antipode formula for Ω⁻¹ with the matrix inverse.
pub fn canonical_law(cz: &Centralizer, opts: &Sampling) -> Result<CanonicalLaw> {
    let c = cz.cat();
    let (t, z) = (&cz.t, &cz.z);
    let omega = canonical_law_components(cz)?;
    let mut cert = Report::new("canonical_law");
    cert.cover("canonical_law");
    cert.cover("invert_law");
    cert.merge(check_distributive_law(t, z, &omega, opts));
    check_family(&mut cert, "characterization", c, 2, opts, |v| {
        let (x, y) = (&v[0], &v[1]);
        let (tx, ty, zx) = (t.t_obj(x), t.t_obj(y), z.t_obj(x));
        let om = omega.at(std::slice::from_ref(x));
        let l = Mor::chain(&[&c.tensor(&t.mu(y), &om), &t.t2(&ty, &zx), &t.t_mor(&cz.partial(x, y))]);
        let r = Mor::chain(&[&c.tensor(&t.mu(y), &c.id(&z.t_obj(&tx))), &cz.partial(&tx, &ty), &t.t2(x, y)]);
        (l, r)
    });
    let omega_inv = match invert_law(t, z, &omega) {
        Ok(inv) => {
            cert.pass("inverse_formula", "simples");
            inv
        }
        Err(e) => {
            cert.fail("inverse_formula", "simples", e.to_string());
            return Err(Error::Validation(Box::new(cert)));
        }
    };
    check_family(&mut cert, "inverse_right", c, 1, opts, |v| {
        let x = &v[0];
        let o = omega.at(std::slice::from_ref(x));
        (o.comp(&omega_inv.at(std::slice::from_ref(x))), c.id(&o.dst))
    });
    check_family(&mut cert, "inverse_left", c, 1, opts, |v| {
        let x = &v[0];
        let o = omega.at(std::slice::from_ref(x));
        (omega_inv.at(std::slice::from_ref(x)).comp(&o), c.id(&o.src))
    });
    let certificate = cert.into_result()?;
    Ok(CanonicalLaw { omega, omega_inv, certificate })
}

/// The double D_T = Z_T ∘_Ω T with its R-matrix R_{X,Y} = (u_{T(Y)} ⊗ Z_T(η_X))∂_{X,Y}.
#[derive(Clone, Debug)]
pub struct Double {
    pub d: HopfMonad,
    pub r: NatTrans,
}

/// The literal sum Σ_{i,α}(i_{T(Y),1}(*T_0 ⊗ T(q^{i,α}_Y)) ⊗ i_{T(X),V_i}(id ⊗ η_X ⊗ p^{i,α}_Y))
/// (coev_{T(V_i)} ⊗ id_{X⊗Y}) for the R-matrix of the double.
pub fn rmatrix_fusion_sum(cz: &Centralizer, x: &Obj, y: &Obj) -> Mor {
    let c = cz.cat();
    let t = &cz.t;
    let (tx, ty) = (t.t_obj(x), t.t_obj(y));
    let one = Obj::unit();
    let dec = c.decompose(y);
    let dt0 = c.dual_mor(&t.t0());
    let xy = c.tensor_obj(x, y);
    let mut acc = Mor::zero(xy.clone(), c.tensor_obj(&cz.z.t_obj(&ty), &cz.z.t_obj(&tx)), c.field);
    for vi in c.simples() {
        let i = vi.0[0];
        let tvi = t.t_obj(&vi);
        let co = c.tensor(&c.coev(&tvi), &c.id(&xy));
        for a in 0..dec.multiplicity(i) {
            let (p, q) = (dec.p(i, a, c.field), dec.q(i, a, c.field));
            let left = cz.dinat(&ty, &one).comp(&c.tensor(&dt0, &t.t_mor(&q)));
            let right = cz.dinat(&tx, &vi).comp(&c.tensors(&[&c.id(&c.dual_obj(&tvi)), &t.eta(x), &p]));
            acc = acc.add(&c.tensor(&left, &right).comp(&co));
        }
    }
    acc
}

/// Builds D_T and R, and asserts that R agrees with the literal fusion sum at every pair of
/// simples.
pub fn double(cz: &Centralizer, law: &CanonicalLaw) -> Result<Double> {
    let c = cz.cat();
    let (t, z) = (&cz.t, &cz.z);
    let d = compose_with_law(z, t, &law.omega)?;
    let (src, dst) = Words::rmatrix(&d.t);
    let r = NatTrans::build(c, "R", src, dst, 2, |v| {
        let (x, y) = (Obj::simple(v[0]), Obj::simple(v[1]));
        let formula = c.tensor(&z.eta(&t.t_obj(&y)), &z.t_mor(&t.eta(&x))).comp(&cz.partial(&x, &y));
        let literal = rmatrix_fusion_sum(cz, &x, &y);
        if formula != literal {
            return Err(Error::Falsified(format!(
                "R at ({x:?},{y:?}) differs from the fusion sum: {}",
                mismatch(&formula, &literal).unwrap_or_default()
            )));
        }
        Ok(formula)
    })?;
    Ok(Double { d, r })
}

/// check_hopf_monad for D_T and check_monad_rmatrix for R, with separate sampling depths.
pub fn check_double(cz: &Centralizer, dbl: &Double, hopf_opts: &Sampling, r_opts: &Sampling) -> Report {
    let c = cz.cat();
    let mut rep = Report::new("double");
    rep.cover("double");
    rep.cover("compose_with_law");
    rep.merge(check_hopf_monad(&dbl.d, hopf_opts));
    rep.merge(check_monad_rmatrix(&dbl.d, &dbl.r, r_opts));
    check_family(&mut rep, "rmatrix_fusion_sum", c, 2, r_opts, |v| {
        (dbl.r.at(&[v[0].clone(), v[1].clone()]), rmatrix_fusion_sum(cz, &v[0], &v[1]))
    });
    rep
}

/// A half-braiding relative to T: σ_Y: M⊗Y → T(Y)⊗M, natural in Y.
#[derive(Clone, Debug)]
pub struct HalfBraiding {
    pub m: Obj,
    pub sigma: NatTrans,
}

impl HalfBraiding {
    pub fn build<F>(t: &HopfMonad, m: &Obj, f: F) -> Result<HalfBraiding>
    where
        F: Fn(&Obj) -> Mor + Sync,
    {
        let src = Word::tensor(Word::Const(m.clone()), Word::var(0));
        let dst = Word::tensor(Word::ap(&t.t, Word::var(0)), Word::Const(m.clone()));
        let sigma = NatTrans::build(&t.cat, "sigma", src, dst, 1, |v| Ok(f(&Obj::simple(v[0]))))?;
        Ok(HalfBraiding { m: m.clone(), sigma })
    }

    pub fn at(&self, y: &Obj) -> Mor {
        self.sigma.at(std::slice::from_ref(y))
    }
}

/// (T_2⊗id)σ_{Y⊗Z} = (id⊗σ_Z)(σ_Y⊗id), (T_0⊗id)σ_1 = id, and naturality.
pub fn check_half_braiding(t: &HopfMonad, hb: &HalfBraiding, opts: &Sampling) -> Report {
    let c = &t.cat;
    let mut rep = Report::new("check_half_braiding");
    rep.cover("check_half_braiding");
    let m = &hb.m;
    check_family(&mut rep, "half_braiding_multiplicative", c, 2, opts, |v| {
        let (y, w) = (&v[0], &v[1]);
        let l = c.tensor(&t.t2(y, w), &c.id(m)).comp(&hb.at(&c.tensor_obj(y, w)));
        let r = c.tensor(&c.id(&t.t_obj(y)), &hb.at(w)).comp(&c.tensor(&hb.at(y), &c.id(w)));
        (l, r)
    });
    rep.check_eq("half_braiding_unit", format!("{m:?}"), &c.tensor(&t.t0(), &c.id(m)).comp(&hb.at(&Obj::unit())), &c.id(m));
    check_naturality(&mut rep, &hb.sigma, opts);
    rep
}

/// The product (M⊗N, ρ) with ρ_Y = (μ_Y⊗id)(σ_{T(Y)}⊗id_N)(id_M⊗γ_Y).
pub fn half_braiding_tensor(t: &HopfMonad, a: &HalfBraiding, b: &HalfBraiding) -> Result<HalfBraiding> {
    let c = &t.cat;
    let mn = c.tensor_obj(&a.m, &b.m);
    HalfBraiding::build(t, &mn, |y| {
        Mor::chain(&[
            &c.tensor(&t.mu(y), &c.id(&mn)),
            &c.tensor(&a.at(&t.t_obj(y)), &c.id(&b.m)),
            &c.tensor(&c.id(&a.m), &b.at(y)),
        ])
    })
}

/// The unit (1, η).
pub fn half_braiding_unit(t: &HopfMonad) -> Result<HalfBraiding> {
    HalfBraiding::build(t, &Obj::unit(), |y| t.eta(y))
}

/// E(M, r): σ_Y = (id ⊗ r)∂_{M,Y} for a Z_T-module.
pub fn half_braiding_e(cz: &Centralizer, md: &TModule) -> Result<HalfBraiding> {
    check_tmodule(&cz.z, md).into_result()?;
    let c = cz.cat();
    HalfBraiding::build(&cz.t, &md.m, |y| c.tensor(&c.id(&cz.t.t_obj(y)), &md.r).comp(&cz.partial(&md.m, y)))
}

/// E⁻¹: the action r: Z_T(M) → M with (id⊗r)∂_{M,Y} = σ_Y.
pub fn half_braiding_e_inverse(cz: &Centralizer, hb: &HalfBraiding) -> Result<TModule> {
    let r = cz.factor(&hb.m, &hb.m, |y| hb.at(y))?;
    Ok(TModule { m: hb.m.clone(), r })
}

/// I(M, r) for a D_T-module: the T-module (M, r u_{T(M)}) and the Z_T-action
/// ζ = r Z_T(η_M), which gives the half-braiding σ_{(N,s)} = (s⊗ζ)∂_{M,N} on T-modules.
#[derive(Clone, Debug)]
pub struct CenterObject {
    pub module: TModule,
    pub zeta: Mor,
}

impl CenterObject {
    /// σ_{(N,s)}: M⊗N → N⊗M.
    pub fn sigma(&self, cz: &Centralizer, n: &TModule) -> Mor {
        cz.cat().tensor(&n.r, &self.zeta).comp(&cz.partial(&self.module.m, &n.m))
    }
}

pub fn center_object_i(cz: &Centralizer, dbl: &Double, md: &TModule) -> Result<CenterObject> {
    check_tmodule(&dbl.d, md).into_result()?;
    let (t, z) = (&cz.t, &cz.z);
    let r = md.r.comp(&z.eta(&t.t_obj(&md.m)));
    let zeta = md.r.comp(&z.t_mor(&t.eta(&md.m)));
    Ok(CenterObject { module: TModule { m: md.m.clone(), r }, zeta })
}

/// Recovers the D_T-action from a center object: ζ is solved from σ on free modules via
/// (id⊗ζ)∂_{M,Y} = σ_{F(Y)}(id⊗η_Y), and the action is ζ Z_T(r).
pub fn center_object_i_inverse(cz: &Centralizer, obj: &CenterObject) -> Result<TModule> {
    let c = cz.cat();
    let t = &cz.t;
    let m = &obj.module.m;
    let zeta = cz.factor(m, m, |y| obj.sigma(cz, &free_module(t, y)).comp(&c.tensor(&c.id(m), &t.eta(y))))?;
    Ok(TModule { m: m.clone(), r: zeta.comp(&cz.z.t_mor(&obj.module.r)) })
}

/// E on `count` random Z_T-modules: half-braiding axioms, round trip through E⁻¹, strict
/// monoidality on consecutive pairs, and the unit.
pub fn check_center_e(cz: &Centralizer, count: usize, opts: &Sampling) -> Report {
    let (t, z) = (&cz.t, &cz.z);
    let mut rep = Report::new("center_e");
    rep.cover("half_braiding_E");
    let mut rng = opts.rng("center_e");
    let mods: Vec<TModule> = (0..count).map(|_| random_tmodule(z, &mut rng, opts.max_len)).collect();
    let inner = Sampling { samples: 1, ..*opts };
    let results: Vec<(String, Option<String>, Option<String>, Option<String>)> = mods
        .par_iter()
        .enumerate()
        .map(|(k, md)| {
            let loc = format!("module {k} on {:?}", md.m);
            let hb = match half_braiding_e(cz, md) {
                Ok(hb) => hb,
                Err(e) => return (loc, Some(e.to_string()), None, None),
            };
            let ax = check_half_braiding(t, &hb, &inner);
            let ax_m = ax.failures().next().map(|f| format!("{} {}", f.id, f.mismatch.clone().unwrap_or_default()));
            let rt = match half_braiding_e_inverse(cz, &hb) {
                Ok(back) => (back != *md).then(|| "E⁻¹E(M) differs from M".to_string()),
                Err(e) => Some(e.to_string()),
            };
            let other = &mods[(k + 1) % mods.len()];
            let mono = (|| -> Result<Option<String>> {
                let prod = tmodule_tensor(z, md, other)?;
                let lhs = half_braiding_e(cz, &prod)?;
                let rhs = half_braiding_tensor(t, &hb, &half_braiding_e(cz, other)?)?;
                Ok((lhs.sigma.table() != rhs.sigma.table()).then(|| "E(M⊗N) differs from E(M)⊗E(N)".to_string()))
            })()
            .unwrap_or_else(|e| Some(e.to_string()));
            (loc, ax_m, rt, mono)
        })
        .collect();
    rep.check_all("e_half_braiding_axioms", results.iter().map(|r| (r.0.clone(), r.1.clone())));
    rep.check_all("e_round_trip", results.iter().map(|r| (r.0.clone(), r.2.clone())));
    rep.check_all("e_monoidal", results.iter().map(|r| (r.0.clone(), r.3.clone())));
    let unit = half_braiding_e(cz, &unit_module(z)).and_then(|e| Ok((e, half_braiding_unit(t)?)));
    match unit {
        Ok((e, u)) => rep.push("e_unit", "unit module", e.m == u.m && e.sigma.table() == u.sigma.table(), Some("E(1, Z_0) differs from (1, η)".into())),
        Err(e) => rep.fail("e_unit", "unit module", e.to_string()),
    }
    rep
}

/// I on `count` random D_T-modules: the T-module, T-linearity, multiplicativity, unit and
/// naturality of σ on sampled T-modules, agreement of σ with the braiding of D_T-modules
/// from R, monoidality, and the round trip.
pub fn check_center_i(cz: &Centralizer, dbl: &Double, count: usize, opts: &Sampling) -> Report {
    let c = cz.cat();
    let t = &cz.t;
    let d = &dbl.d;
    let mut rep = Report::new("center_i");
    rep.cover("center_object_I");
    let mut rng = opts.rng("center_i");
    let mods: Vec<TModule> = (0..count).map(|_| random_tmodule(d, &mut rng, opts.max_len)).collect();
    let probes: Vec<(TModule, TModule)> =
        (0..count).map(|_| (random_tmodule(t, &mut rng, opts.max_len), random_tmodule(t, &mut rng, opts.max_len))).collect();
    type Row = (String, [Option<String>; 6]);
    let results: Vec<Row> = mods
        .par_iter()
        .enumerate()
        .map(|(k, md)| {
            let loc = format!("module {k} on {:?}", md.m);
            let err = |e: Error| -> Row { (loc.clone(), std::array::from_fn(|_| Some(e.to_string()))) };
            let obj = match center_object_i(cz, dbl, md) {
                Ok(o) => o,
                Err(e) => return err(e),
            };
            let m = &obj.module;
            let (n, p) = &probes[k];
            let tmod = check_tmodule(t, m).failures().next().map(|f| f.id.clone());
            let sn = obj.sigma(cz, n);
            let lin = (|| -> Result<Option<String>> {
                let (mn, nm) = (tmodule_tensor(t, m, n)?, tmodule_tensor(t, n, m)?);
                Ok((!is_tlinear(t, &sn, &mn, &nm)).then(|| "σ_N is not T-linear".to_string()))
            })()
            .unwrap_or_else(|e| Some(e.to_string()));
            let axioms = (|| -> Result<Option<String>> {
                let np = tmodule_tensor(t, n, p)?;
                let l = obj.sigma(cz, &np);
                let r = c.tensor(&c.id(&n.m), &obj.sigma(cz, p)).comp(&c.tensor(&sn, &c.id(&p.m)));
                if let Some(mm) = mismatch(&l, &r) {
                    return Ok(Some(format!("σ_(N⊗P): {mm}")));
                }
                if obj.sigma(cz, &unit_module(t)) != c.id(&m.m) {
                    return Ok(Some("σ_1 is not the identity".into()));
                }
                let fr = free_module(t, &n.m);
                let l = obj.sigma(cz, n).comp(&c.tensor(&c.id(&m.m), &n.r));
                let r = c.tensor(&n.r, &c.id(&m.m)).comp(&obj.sigma(cz, &fr));
                Ok(mismatch(&l, &r).map(|mm| format!("naturality: {mm}")))
            })()
            .unwrap_or_else(|e| Some(e.to_string()));
            let other = &mods[(k + 1) % mods.len()];
            let braid = (|| -> Result<Option<String>> {
                let o2 = center_object_i(cz, dbl, other)?;
                let l = obj.sigma(cz, &o2.module);
                let r = module_braiding(d, &dbl.r, md, other);
                Ok(mismatch(&l, &r))
            })()
            .unwrap_or_else(|e| Some(e.to_string()));
            let mono = (|| -> Result<Option<String>> {
                let o2 = center_object_i(cz, dbl, other)?;
                let prod = center_object_i(cz, dbl, &tmodule_tensor(d, md, other)?)?;
                if prod.module != tmodule_tensor(t, m, &o2.module)? {
                    return Ok(Some("underlying T-module of I(M⊗N) differs".into()));
                }
                let l = prod.sigma(cz, p);
                let r = c.tensor(&obj.sigma(cz, p), &c.id(&other.m)).comp(&c.tensor(&c.id(&m.m), &o2.sigma(cz, p)));
                Ok(mismatch(&l, &r))
            })()
            .unwrap_or_else(|e| Some(e.to_string()));
            let rt = match center_object_i_inverse(cz, &obj) {
                Ok(back) => (back != *md).then(|| "I⁻¹I(M) differs from M".to_string()),
                Err(e) => Some(e.to_string()),
            };
            (loc, [tmod, lin, axioms, braid, mono, rt])
        })
        .collect();
    let ids = ["i_tmodule", "i_sigma_tlinear", "i_half_braiding_axioms", "i_braiding_matches_r", "i_monoidal", "i_round_trip"];
    for (k, id) in ids.iter().enumerate() {
        rep.check_all(*id, results.iter().map(|r| (r.0.clone(), r.1[k].clone())));
    }
    rep
}

/// Coaction data of a coend C in δ-form: generator objects M_a with δ_a: M_a → M_a⊗C whose
/// bent maps are jointly surjective onto C, and the data needed to state the defining
/// identity of each structure morphism. The solutions are unique by the universal property.
pub(crate) struct CoactionSystem<'a> {
    pub c: &'a Category,
    pub carrier: Obj,
    pub gens: Vec<(Obj, Mor)>,
    /// δ_{M_a⊗M_b} for the tensor product object.
    pub tensor_coaction: &'a (dyn Fn(usize, usize) -> Mor + Sync),
    /// The braiding c_{C,M_b}: C⊗M_b → M_b⊗C.
    pub braid_c: &'a (dyn Fn(usize) -> Mor + Sync),
    /// The inverse monodromy (c_{M_b,M_a} c_{M_a,M_b})⁻¹.
    pub inverse_monodromy: &'a (dyn Fn(usize, usize) -> Mor + Sync),
    /// δ_1: 1 → C.
    pub unit_coaction: Mor,
}

impl CoactionSystem<'_> {
    /// (id_M⊗Δ)δ_M = (δ_M⊗id)δ_M.
    pub fn delta(&self) -> Result<Mor> {
        let c = self.c;
        let cc = c.tensor_obj(&self.carrier, &self.carrier);
        let cases: Vec<_> = self
            .gens
            .iter()
            .map(|(m, d)| (m.clone(), d.clone(), c.tensor(d, &c.id(&self.carrier)).comp(d)))
            .collect();
        factor_through(c, &self.carrier, &cc, &cases)
    }

    /// (id_M⊗ε)δ_M = id_M.
    pub fn eps(&self) -> Result<Mor> {
        let c = self.c;
        let cases: Vec<_> = self.gens.iter().map(|(m, d)| (m.clone(), d.clone(), c.id(m))).collect();
        factor_through(c, &self.carrier, &Obj::unit(), &cases)
    }

    /// (id_{M⊗N}⊗f)(id_M⊗c_{C,N}⊗id_C)(δ_M⊗δ_N) = rhs(a, b) for f: C⊗C → L.
    fn pair_solve(&self, to: &Obj, rhs: &(dyn Fn(usize, usize) -> Mor + Sync)) -> Result<Mor> {
        let c = self.c;
        let cobj = &self.carrier;
        let pairs: Vec<(usize, usize)> =
            (0..self.gens.len()).flat_map(|a| (0..self.gens.len()).map(move |b| (a, b))).collect();
        let cases: Vec<_> = pairs
            .par_iter()
            .map(|&(a, b)| {
                let ((ma, da), (mb, db)) = (&self.gens[a], &self.gens[b]);
                let d = c
                    .tensors(&[&c.id(ma), &(self.braid_c)(b), &c.id(cobj)])
                    .comp(&c.tensor(da, db));
                (c.tensor_obj(ma, mb), d, rhs(a, b))
            })
            .collect();
        factor_through(c, &c.tensor_obj(cobj, cobj), to, &cases)
    }

    pub fn m(&self) -> Result<Mor> {
        self.pair_solve(&self.carrier, self.tensor_coaction)
    }

    /// The pairing ω: C⊗C → 1, from the inverse monodromy.
    pub fn omega(&self) -> Result<Mor> {
        self.pair_solve(&Obj::unit(), self.inverse_monodromy)
    }

    pub fn u(&self) -> Mor {
        self.unit_coaction.clone()
    }
}

/// The antipode as the convolution inverse of the identity: m(S⊗id)Δ = uε when `left`,
/// otherwise m(id⊗S)Δ = uε.
pub(crate) fn convolution_antipode(c: &Category, a: &Obj, m: &Mor, u: &Mor, delta: &Mor, eps: &Mor, left: bool) -> Result<Mor> {
    let ida = c.id(a);
    solve_linear(
        a,
        a,
        c.field,
        |e| {
            let inner = if left { c.tensor(e, &ida) } else { c.tensor(&ida, e) };
            Mor::chain(&[m, &inner, delta])
        },
        &u.comp(eps),
    )
}

/// Pairing axioms for ω: C⊗C → 1, antipode symmetry and self-duality ω c(S⊗S) = ω.
pub(crate) fn pairing_axioms(rep: &mut Report, c: &Category, loc: &str, h: &HopfData, omega: &Mor, braid_cc: &Mor) {
    let a = h.a;
    let ida = c.id(a);
    let ten = |f: &Mor, g: &Mor| c.tensor(f, g);
    let mid = c.tensors(&[&ida, omega, &ida]);
    rep.check_eq(
        "pairing_m_left",
        loc,
        &omega.comp(&ten(h.m, &ida)),
        &Mor::chain(&[omega, &mid, &ten(&c.id(&c.tensor_obj(a, a)), h.delta)]),
    );
    rep.check_eq(
        "pairing_m_right",
        loc,
        &omega.comp(&ten(&ida, h.m)),
        &Mor::chain(&[omega, &mid, &ten(h.delta, &c.id(&c.tensor_obj(a, a)))]),
    );
    rep.check_eq("pairing_u_left", loc, &omega.comp(&ten(h.u, &ida)), h.eps);
    rep.check_eq("pairing_u_right", loc, &omega.comp(&ten(&ida, h.u)), h.eps);
    rep.check_eq("pairing_antipode", loc, &omega.comp(&ten(h.s, &ida)), &omega.comp(&ten(&ida, h.s)));
    rep.check_eq("pairing_self_dual", loc, &Mor::chain(&[omega, braid_cc, &ten(h.s, h.s)]), omega);
}

/// A Hopf algebra in the category of T-modules, with a Hopf pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoendHopf {
    pub carrier: TModule,
    pub delta: Mor,
    pub eps: Mor,
    pub m: Mor,
    pub u: Mor,
    pub s: Mor,
    pub s_inv: Mor,
    pub omega: Mor,
    /// The braiding c_{C,C} of the carrier with itself.
    pub braid_cc: Mor,
    /// The checks run while building the carrier.
    pub carrier_report: Report,
}

impl CoendHopf {
    pub fn data(&self) -> HopfData<'_> {
        HopfData {
            a: &self.carrier.m,
            m: &self.m,
            u: &self.u,
            delta: &self.delta,
            eps: &self.eps,
            s: &self.s,
            s_inv: &self.s_inv,
        }
    }

    pub fn dim(&self) -> usize {
        self.carrier.m.len()
    }
}

/// The coend (Z_T(1), α) of T-C with α = Z_T(T_0)Ω_1, checked as a T-module and against the
/// characterization α T(i_Y) = i_{T(Y)}(φ_Y⊗id)T_2(T(Y)*, Y).
pub fn coend_of_module_category(cz: &Centralizer, omega: &NatTrans) -> Result<(TModule, Report)> {
    let c = cz.cat();
    let (t, z) = (&cz.t, &cz.z);
    let one = Obj::unit();
    let alpha = z.t_mor(&t.t0()).comp(&omega.at(std::slice::from_ref(&one)));
    let md = TModule { m: z.t_obj(&one), r: alpha };
    let mut rep = Report::new("coend_of_module_category");
    rep.cover("coend_of_module_category");
    rep.merge(check_tmodule(t, &md));
    let cases: Vec<(String, Option<String>)> = c
        .simples()
        .map(|y| {
            let ty = t.t_obj(&y);
            let l = md.r.comp(&t.t_mor(&cz.dinat(&one, &y)));
            let r = Mor::chain(&[
                &cz.dinat(&one, &ty),
                &c.tensor(&phi(t, &y), &c.id(&ty)),
                &t.t2(&c.dual_obj(&ty), &y),
            ]);
            (format!("{y:?}"), mismatch(&l, &r))
        })
        .collect();
    rep.check_all("alpha_characterization", cases);
    Ok((md, rep.into_result()?))
}

/// The coend of T-C as a Hopf algebra in T-C for a quasitriangular T. Δ = (Z_T)_2(1,1),
/// ε = (Z_T)_0 and u = (T_0⊗id)∂_{1,1}; m and ω are solved from the universal coaction
/// δ_{(M,r)} = (r⊗id)∂_{1,M} on free modules, with the braiding of T-modules from R; S is the
/// convolution inverse of the identity. Δ and ε are also solved from δ and must agree.
pub fn coend_hopf(t: &HopfMonad, r: &NatTrans) -> Result<CoendHopf> {
    let c = &t.cat;
    let cz = centralize(t)?;
    let omega_law = canonical_law_components(&cz)?;
    let (carrier, carrier_report) = coend_of_module_category(&cz, &omega_law)?;
    let z = &cz.z;
    let one = Obj::unit();
    let cobj = carrier.m.clone();
    let coaction = |md: &TModule| c.tensor(&md.r, &c.id(&cobj)).comp(&cz.partial(&one, &md.m));
    let frees: Vec<TModule> = c.simples().map(|y| free_module(t, &y)).collect();
    let gens: Vec<(Obj, Mor)> = frees.iter().map(|f| (f.m.clone(), coaction(f))).collect();
    let tensor_coaction = |a: usize, b: usize| coaction(&crate::hopfmonad::tmodule_tensor_unchecked(t, &frees[a], &frees[b]));
    let braid_c = |b: usize| module_braiding(t, r, &carrier, &frees[b]);
    let inverse_monodromy = |a: usize, b: usize| {
        let mono = module_braiding(t, r, &frees[b], &frees[a]).comp(&module_braiding(t, r, &frees[a], &frees[b]));
        mono.inverse().expect("braidings are invertible")
    };
    let u = c.tensor(&t.t0(), &c.id(&cobj)).comp(&cz.partial(&one, &one));
    let sys = CoactionSystem {
        c,
        carrier: cobj.clone(),
        gens,
        tensor_coaction: &tensor_coaction,
        braid_c: &braid_c,
        inverse_monodromy: &inverse_monodromy,
        unit_coaction: u.clone(),
    };
    let (delta, eps) = (z.t2(&one, &one), z.t0());
    for (name, a, b) in [("Δ", &delta, &sys.delta()?), ("ε", &eps, &sys.eps()?)] {
        if a != b {
            return Err(Error::Falsified(format!(
                "coend {name}: structure of Z_T differs from the coaction solve: {}",
                mismatch(a, b).unwrap_or_default()
            )));
        }
    }
    let m = sys.m()?;
    let omega = sys.omega()?;
    let s = convolution_antipode(c, &cobj, &m, &u, &delta, &eps, true)?;
    let s_inv = s.inverse()?;
    let braid_cc = module_braiding(t, r, &carrier, &carrier);
    Ok(CoendHopf { carrier, delta, eps, m, u, s, s_inv, omega, braid_cc, carrier_report })
}

/// T-linearity of every structure morphism, the Hopf axioms in T-C with the supplied
/// braiding, and the pairing axioms.
pub fn check_coend_hopf(t: &HopfMonad, ch: &CoendHopf) -> Report {
    let c = &t.cat;
    let mut rep = Report::new("coend_hopf");
    rep.cover("coend_hopf");
    rep.merge(ch.carrier_report.clone());
    let cm = &ch.carrier;
    rep.merge(check_tmodule(t, cm));
    let cc = crate::hopfmonad::tmodule_tensor_unchecked(t, cm, cm);
    let one = unit_module(t);
    let lin = [
        ("m", &ch.m, &cc, cm),
        ("u", &ch.u, &one, cm),
        ("delta", &ch.delta, cm, &cc),
        ("eps", &ch.eps, cm, &one),
        ("S", &ch.s, cm, cm),
        ("omega", &ch.omega, &cc, &one),
        ("braiding", &ch.braid_cc, &cc, &cc),
    ];
    for (name, f, a, b) in lin {
        rep.push(format!("tlinear_{name}"), "carrier", is_tlinear(t, f, a, b), Some(format!("{name} is not T-linear")));
    }
    let loc = format!("dim {}", ch.dim());
    hopf_axioms(&mut rep, c, &loc, &ch.data(), &ch.braid_cc);
    pairing_axioms(&mut rep, c, &loc, &ch.data(), &ch.omega, &ch.braid_cc);
    rep
}

/// ∂_{1,Y} of a centralizer from the fusion sum Σ_{i,α}(T(q^{i,α}_Y) ⊗ ι_i)(coev_{T(V_i)} ⊗ p^{i,α}_Y),
/// without the natural-transformation assembly.
fn partial_unit_fusion(cz: &Centralizer, y: &Obj) -> Mor {
    let c = cz.cat();
    let t = &cz.t;
    let one = Obj::unit();
    let z1 = cz.z.t_obj(&one);
    let dec = c.decompose(y);
    let mut acc = Mor::zero(y.clone(), c.tensor_obj(&t.t_obj(y), &z1), c.field);
    for vi in c.simples() {
        let i = vi.0[0];
        let tvi = t.t_obj(&vi);
        let iota = cz.dinat(&one, &vi);
        for a in 0..dec.multiplicity(i) {
            let (p, q) = (dec.p(i, a, c.field), dec.q(i, a, c.field));
            let term = Mor::chain(&[
                &c.tensor(&t.t_mor(&q), &c.id(&z1)),
                &c.tensor(&c.id(&tvi), &iota),
                &c.tensor(&c.coev(&tvi), &p),
            ]);
            acc = acc.add(&term);
        }
    }
    acc
}

/// The two routes to the coend of the center Z(C) for C = Vec_G.
#[derive(Clone, Debug)]
pub struct CenterCoend {
    /// coend_hopf(Z, R) for the double of the identity monad.
    pub via_double: CoendHopf,
    /// Direct assembly from the iterated centralizer and half-braidings.
    pub direct: CoendHopf,
    pub report: Report,
}

/// The coend of Z(C) computed twice. The first route is coend_hopf for the double of the
/// identity monad. The second is assembled from Z_Z with ∂ from the fusion sum: α is solved
/// from its characterization, objects of the center are half-braidings E of free Z-modules
/// with the product formula for tensor products, the braiding is c_{M,N} = σ^M_N, and all
/// six structure morphisms come from the coaction, with S from the right convolution
/// identity. The two results must agree entry by entry.
pub fn coend_of_center(c: &Category) -> Result<CenterCoend> {
    let id = HopfMonad::identity(c);
    let cz1 = centralize(&id)?;
    let law1 = canonical_law(&cz1, &Sampling::simple_only())?;
    let dbl = double(&cz1, &law1)?;
    let via_double = coend_hopf(&dbl.d, &dbl.r)?;

    let z = &cz1.z;
    let cz2 = centralize(z)?;
    let one = Obj::unit();
    let cobj = cz2.z.t_obj(&one);
    let kk = Mor::hcat(&c.simples().map(|y| cz2.dinat(&one, &y)).collect::<Vec<_>>());
    let g = Mor::hcat(
        &c.simples()
            .map(|y| {
                let zy = z.t_obj(&y);
                Mor::chain(&[&cz2.dinat(&one, &zy), &c.tensor(&phi(z, &y), &c.id(&zy)), &z.t2(&c.dual_obj(&zy), &y)])
            })
            .collect::<Vec<_>>(),
    );
    let alpha = solve_right(&g, &z.t_mor(&kk))?;
    let carrier = TModule { m: cobj.clone(), r: alpha };
    let coaction = |md: &TModule| c.tensor(&md.r, &c.id(&cobj)).comp(&partial_unit_fusion(&cz2, &md.m));
    let frees: Vec<TModule> = c.simples().map(|y| free_module(z, &y)).collect();
    let hbs: Vec<HalfBraiding> = frees.iter().map(|f| half_braiding_e(&cz1, f)).collect::<Result<_>>()?;
    let hb_c = half_braiding_e(&cz1, &carrier)?;
    let products: Vec<Vec<TModule>> = (0..frees.len())
        .map(|a| {
            (0..frees.len())
                .map(|b| half_braiding_e_inverse(&cz1, &half_braiding_tensor(&id, &hbs[a], &hbs[b])?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let gens: Vec<(Obj, Mor)> = frees.iter().map(|f| (f.m.clone(), coaction(f))).collect();
    let tensor_coaction = |a: usize, b: usize| coaction(&products[a][b]);
    let braid_c = |b: usize| hb_c.at(&frees[b].m);
    let inverse_monodromy = |a: usize, b: usize| {
        let mono = hbs[b].at(&frees[a].m).comp(&hbs[a].at(&frees[b].m));
        mono.inverse().expect("half-braidings of the center are invertible")
    };
    let unit_z = half_braiding_e_inverse(&cz1, &half_braiding_unit(&id)?)?;
    let sys = CoactionSystem {
        c,
        carrier: cobj.clone(),
        gens,
        tensor_coaction: &tensor_coaction,
        braid_c: &braid_c,
        inverse_monodromy: &inverse_monodromy,
        unit_coaction: coaction(&unit_z),
    };
    let (delta, eps, u) = (sys.delta()?, sys.eps()?, sys.u());
    let m = sys.m()?;
    let omega = sys.omega()?;
    let s = convolution_antipode(c, &cobj, &m, &u, &delta, &eps, false)?;
    let s_inv = s.inverse()?;
    let braid_cc = hb_c.at(&cobj);
    let direct = CoendHopf { carrier, delta, eps, m, u, s, s_inv, omega, braid_cc, carrier_report: Report::default() };

    let mut report = Report::new("coend_of_center");
    report.cover("coend_of_center");
    let (a, b) = (&via_double, &direct);
    report.push("carrier_object", "routes", a.carrier.m == b.carrier.m, Some("carriers differ".into()));
    for (name, x, y) in [
        ("alpha", &a.carrier.r, &b.carrier.r),
        ("delta", &a.delta, &b.delta),
        ("eps", &a.eps, &b.eps),
        ("m", &a.m, &b.m),
        ("u", &a.u, &b.u),
        ("S", &a.s, &b.s),
        ("omega", &a.omega, &b.omega),
        ("braiding", &a.braid_cc, &b.braid_cc),
    ] {
        report.check_eq(format!("routes_agree_{name}"), "routes", x, y);
    }
    let n = c.n();
    report.push("carrier_dimension", format!("|G| = {n}"), a.dim() == n * n, Some(format!("dimension {}", a.dim())));
    report.merge(check_coend_hopf(&dbl.d, &via_double));
    Ok(CenterCoend { via_double, direct, report })
}

/// Z_f: Z_{T'} → Z_T for a monad morphism f: T → T', with components ⊕_i f_{V_i}* ⊗ id ⊗ id.
pub fn z_on_monad_morphism(f: &NatTrans, cz: &Centralizer, cz2: &Centralizer) -> Result<NatTrans> {
    let c = cz.cat();
    let (src, dst) = Words::morphism(&cz2.z.t, &cz.z.t);
    NatTrans::build(c, "Z_f", src, dst, 1, |v| {
        let x = Obj::simple(v[0]);
        let blocks: Vec<Mor> = c
            .simples()
            .map(|vi| c.tensors(&[&c.dual_mor(&f.at(std::slice::from_ref(&vi))), &c.id(&x), &c.id(&vi)]))
            .collect();
        Ok(direct_sum(c, &blocks))
    })
}

/// Block-diagonal direct sum of morphisms.
pub(crate) fn direct_sum(c: &Category, blocks: &[Mor]) -> Mor {
    let src = Obj::concat(&blocks.iter().map(|b| &b.src).collect::<Vec<_>>());
    let dst = Obj::concat(&blocks.iter().map(|b| &b.dst).collect::<Vec<_>>());
    let (mut rs, mut cs) = (0, 0);
    let mut entries = Vec::new();
    for b in blocks {
        entries.extend(b.entries().map(|(r, col, v)| (r + rs, col + cs, v.clone())));
        rs += b.dst.len();
        cs += b.src.len();
    }
    Mor::from_entries_unchecked(src, dst, c.field, entries)
}

/// The defining identity (id ⊗ Z_f)∂'_{X,Y} = (f_Y ⊗ id)∂_{X,Y} and naturality of Z_f.
pub fn check_z_morphism(f: &NatTrans, zf: &NatTrans, cz: &Centralizer, cz2: &Centralizer, opts: &Sampling) -> Report {
    let c = cz.cat();
    let mut rep = Report::new("z_on_monad_morphism");
    rep.cover("z_on_monad_morphism");
    check_family(&mut rep, "z_f_coaction", c, 2, opts, |v| {
        let (x, y) = (&v[0], &v[1]);
        let l = c.tensor(&c.id(&cz2.t.t_obj(y)), &zf.at(std::slice::from_ref(x))).comp(&cz2.partial(x, y));
        let r = c.tensor(&f.at(std::slice::from_ref(y)), &c.id(&cz.z.t_obj(x))).comp(&cz.partial(x, y));
        (l, r)
    });
    check_naturality(&mut rep, zf, opts);
    rep
}
