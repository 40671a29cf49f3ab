//! Hopf monads on a pointed category as finite component data.
//!
//! A linear endofunctor is given by its values on simples and extended additively: F(X) is the
//! concatenation of the F(V_{X[α]}) and F(f) places the scalar f(β,α) times an identity block.
//! Natural transformations between functor words store one matrix per tuple of simples; the
//! component at arbitrary objects is assembled from those through the coordinate
//! decompositions, without any matrix products.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::hopfalg::HopfAlgebra;
use crate::report::{mismatch, Report};
use crate::semicat::{Category, Mor, Obj};
use crate::{Error, Result};

/// A k-linear endofunctor, determined by its values on simples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    pub name: String,
    pub on_simple: Vec<Obj>,
}

impl Functor {
    pub fn new(name: impl Into<String>, on_simple: Vec<Obj>) -> Functor {
        Functor { name: name.into(), on_simple }
    }

    pub fn identity(n: usize) -> Functor {
        Functor::new("1", (0..n as u32).map(Obj::simple).collect())
    }

    pub fn apply_obj(&self, x: &Obj) -> Obj {
        Obj(x.0.iter().flat_map(|&s| self.on_simple[s as usize].0.iter().copied()).collect())
    }

    /// Start position of the block F(V_{X[α]}) inside F(X), for each α.
    pub fn offsets(&self, x: &Obj) -> Vec<usize> {
        let mut out = Vec::with_capacity(x.len());
        let mut acc = 0;
        for &s in &x.0 {
            out.push(acc);
            acc += self.on_simple[s as usize].len();
        }
        out
    }

    pub fn apply_mor(&self, f: &Mor) -> Mor {
        let (os, od) = (self.offsets(&f.src), self.offsets(&f.dst));
        let mut entries = Vec::new();
        for (r, c, v) in f.entries() {
            let size = self.on_simple[f.src.0[c] as usize].len();
            for t in 0..size {
                entries.push((od[r] + t, os[c] + t, v.clone()));
            }
        }
        Mor::from_entries_unchecked(self.apply_obj(&f.src), self.apply_obj(&f.dst), f.field(), entries)
    }

    /// The composite `self ∘ inner`.
    pub fn after(&self, inner: &Functor) -> Functor {
        Functor::new(
            format!("{}{}", self.name, inner.name),
            inner.on_simple.iter().map(|o| self.apply_obj(o)).collect(),
        )
    }
}

/// A formal functor word in numbered variables.
#[derive(Clone, Debug)]
pub enum Word {
    Var(usize),
    Unit,
    /// A fixed object, constant in all variables.
    Const(Obj),
    Tensor(Box<Word>, Box<Word>),
    Ap(Arc<Functor>, Box<Word>),
    Dual(Box<Word>),
}

/// A word evaluated at concrete objects, with the block offsets needed for index maps.
struct Node {
    obj: Obj,
    kids: Vec<Node>,
    offsets: Vec<usize>,
}

impl Word {
    pub fn var(k: usize) -> Word {
        Word::Var(k)
    }

    pub fn ap(f: &Arc<Functor>, w: Word) -> Word {
        Word::Ap(f.clone(), Box::new(w))
    }

    pub fn tensor(a: Word, b: Word) -> Word {
        Word::Tensor(Box::new(a), Box::new(b))
    }

    pub fn dual(w: Word) -> Word {
        Word::Dual(Box::new(w))
    }

    pub fn eval_obj(&self, cat: &Category, objs: &[Obj]) -> Obj {
        match self {
            Word::Var(k) => objs[*k].clone(),
            Word::Unit => Obj::unit(),
            Word::Const(o) => o.clone(),
            Word::Tensor(a, b) => cat.tensor_obj(&a.eval_obj(cat, objs), &b.eval_obj(cat, objs)),
            Word::Ap(f, a) => f.apply_obj(&a.eval_obj(cat, objs)),
            Word::Dual(a) => cat.dual_obj(&a.eval_obj(cat, objs)),
        }
    }

    /// Applies the word to morphisms. A variable under an odd number of duals contributes
    /// contravariantly, so the result then runs in the opposite direction.
    pub fn eval_mor(&self, cat: &Category, mors: &[Mor]) -> Mor {
        match self {
            Word::Var(k) => mors[*k].clone(),
            Word::Unit => cat.id(&Obj::unit()),
            Word::Const(o) => cat.id(o),
            Word::Tensor(a, b) => cat.tensor(&a.eval_mor(cat, mors), &b.eval_mor(cat, mors)),
            Word::Ap(f, a) => f.apply_mor(&a.eval_mor(cat, mors)),
            Word::Dual(a) => cat.dual_mor(&a.eval_mor(cat, mors)),
        }
    }

    fn count_vars(&self, counts: &mut [usize]) {
        match self {
            Word::Var(k) => counts[*k] += 1,
            Word::Unit | Word::Const(_) => {}
            Word::Tensor(a, b) => {
                a.count_vars(counts);
                b.count_vars(counts);
            }
            Word::Ap(_, a) | Word::Dual(a) => a.count_vars(counts),
        }
    }

    fn node(&self, cat: &Category, objs: &[Obj]) -> Node {
        match self {
            Word::Var(k) => Node { obj: objs[*k].clone(), kids: vec![], offsets: vec![] },
            Word::Unit => Node { obj: Obj::unit(), kids: vec![], offsets: vec![] },
            Word::Const(o) => Node { obj: o.clone(), kids: vec![], offsets: vec![] },
            Word::Tensor(a, b) => {
                let (na, nb) = (a.node(cat, objs), b.node(cat, objs));
                Node { obj: cat.tensor_obj(&na.obj, &nb.obj), kids: vec![na, nb], offsets: vec![] }
            }
            Word::Ap(f, a) => {
                let na = a.node(cat, objs);
                Node { obj: f.apply_obj(&na.obj), offsets: f.offsets(&na.obj), kids: vec![na] }
            }
            Word::Dual(a) => {
                let na = a.node(cat, objs);
                Node { obj: cat.dual_obj(&na.obj), kids: vec![na], offsets: vec![] }
            }
        }
    }

    /// The coordinate injection w(V_α) → w(X) induced by the positions α, as an index map.
    /// Duals of coordinate projections are again coordinate injections, so variance plays
    /// no role here.
    fn inject(&self, nx: &Node, nv: &Node, alpha: &[usize]) -> Vec<usize> {
        match self {
            Word::Var(k) => vec![alpha[*k]],
            Word::Unit => vec![0],
            Word::Const(o) => (0..o.len()).collect(),
            Word::Tensor(a, b) => {
                let ia = a.inject(&nx.kids[0], &nv.kids[0], alpha);
                let ib = b.inject(&nx.kids[1], &nv.kids[1], alpha);
                let nb = nx.kids[1].obj.len();
                let mut out = Vec::with_capacity(ia.len() * ib.len());
                for &i in &ia {
                    for &j in &ib {
                        out.push(i * nb + j);
                    }
                }
                out
            }
            Word::Ap(f, a) => {
                let ia = a.inject(&nx.kids[0], &nv.kids[0], alpha);
                let mut out = Vec::with_capacity(nv.obj.len());
                for (pv, &px) in ia.iter().enumerate() {
                    let size = f.on_simple[nv.kids[0].obj.0[pv] as usize].len();
                    out.extend((0..size).map(|t| nx.offsets[px] + t));
                }
                out
            }
            Word::Dual(a) => {
                let ia = a.inject(&nx.kids[0], &nv.kids[0], alpha);
                let (lv, lx) = (ia.len(), nx.kids[0].obj.len());
                (0..lv).map(|p| lx - 1 - ia[lv - 1 - p]).collect()
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Var(k) => write!(f, "X{k}"),
            Word::Unit => write!(f, "1"),
            Word::Const(o) => write!(f, "{o:?}"),
            Word::Tensor(a, b) => write!(f, "({a}⊗{b})"),
            Word::Ap(func, a) => write!(f, "{}({a})", func.name),
            Word::Dual(a) => write!(f, "*{a}"),
        }
    }
}

/// A natural transformation between two functor words, stored at tuples of simples.
pub struct NatTrans {
    pub name: String,
    pub cat: Category,
    pub src: Word,
    pub dst: Word,
    pub arity: usize,
    table: Vec<Mor>,
    cache: Mutex<HashMap<Vec<Obj>, Mor>>,
}

impl Clone for NatTrans {
    fn clone(&self) -> Self {
        NatTrans {
            name: self.name.clone(),
            cat: self.cat.clone(),
            src: self.src.clone(),
            dst: self.dst.clone(),
            arity: self.arity,
            table: self.table.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for NatTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NatTrans {}: {} -> {}", self.name, self.src, self.dst)
    }
}

/// All tuples of simple indices of the given arity, in lexicographic order.
pub fn simple_tuples(n: usize, arity: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..n as u32).map(move |s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}

impl NatTrans {
    /// Builds the table by evaluating `f` at every tuple of simples, checking each shape.
    pub fn build<F>(cat: &Category, name: impl Into<String>, src: Word, dst: Word, arity: usize, f: F) -> Result<NatTrans>
    where
        F: Fn(&[u32]) -> Result<Mor> + Sync,
    {
        let name = name.into();
        let tuples = simple_tuples(cat.n(), arity);
        let table: Vec<Mor> = tuples.par_iter().map(|s| f(s)).collect::<Result<Vec<_>>>()?;
        NatTrans::from_table(cat, name, src, dst, arity, table)
    }

    pub fn from_table(cat: &Category, name: impl Into<String>, src: Word, dst: Word, arity: usize, table: Vec<Mor>) -> Result<NatTrans> {
        let name = name.into();
        for w in [&src, &dst] {
            let mut counts = vec![0; arity];
            w.count_vars(&mut counts);
            if counts.iter().any(|&c| c > 1) {
                return Err(Error::Invalid(format!("{name}: word {w} repeats a variable")));
            }
        }
        let tuples = simple_tuples(cat.n(), arity);
        if table.len() != tuples.len() {
            return Err(Error::Shape(format!("{name}: expected {} components", tuples.len())));
        }
        for (s, m) in tuples.iter().zip(&table) {
            let objs: Vec<Obj> = s.iter().map(|&i| Obj::simple(i)).collect();
            if m.src != src.eval_obj(cat, &objs) || m.dst != dst.eval_obj(cat, &objs) {
                return Err(Error::Shape(format!(
                    "{name} at {s:?}: component {:?} -> {:?}, words give {:?} -> {:?}",
                    m.src,
                    m.dst,
                    src.eval_obj(cat, &objs),
                    dst.eval_obj(cat, &objs)
                )));
            }
        }
        Ok(NatTrans { name, cat: cat.clone(), src, dst, arity, table, cache: Mutex::new(HashMap::new()) })
    }

    fn index(&self, s: &[u32]) -> usize {
        s.iter().fold(0, |acc, &i| acc * self.cat.n() + i as usize)
    }

    pub fn at_simple(&self, s: &[u32]) -> &Mor {
        &self.table[self.index(s)]
    }

    pub fn table(&self) -> &[Mor] {
        &self.table
    }

    /// The component at arbitrary objects.
    pub fn try_at(&self, objs: &[Obj]) -> Result<Mor> {
        if objs.len() != self.arity {
            return Err(Error::Shape(format!("{}: arity {} but {} objects", self.name, self.arity, objs.len())));
        }
        if objs.iter().all(|o| o.len() == 1) {
            let s: Vec<u32> = objs.iter().map(|o| o.0[0]).collect();
            return Ok(self.at_simple(&s).clone());
        }
        if let Some(m) = self.cache.lock().unwrap().get(objs) {
            return Ok(m.clone());
        }
        let m = self.assemble(objs);
        self.cache.lock().unwrap().insert(objs.to_vec(), m.clone());
        Ok(m)
    }

    pub fn at(&self, objs: &[Obj]) -> Mor {
        self.try_at(objs).expect("natural transformation component")
    }

    fn assemble(&self, objs: &[Obj]) -> Mor {
        let cat = &self.cat;
        let (nsrc, ndst) = (self.src.node(cat, objs), self.dst.node(cat, objs));
        let mut entries = Vec::new();
        let mut alpha = vec![0usize; objs.len()];
        if objs.iter().all(|o| !o.is_empty()) {
            loop {
                let s: Vec<u32> = alpha.iter().zip(objs).map(|(&a, o)| o.0[a]).collect();
                let vs: Vec<Obj> = s.iter().map(|&i| Obj::simple(i)).collect();
                let (vsrc, vdst) = (self.src.node(cat, &vs), self.dst.node(cat, &vs));
                let smap = self.src.inject(&nsrc, &vsrc, &alpha);
                let dmap = self.dst.inject(&ndst, &vdst, &alpha);
                for (r, c, v) in self.at_simple(&s).entries() {
                    entries.push((dmap[r], smap[c], v.clone()));
                }
                let mut k = objs.len();
                loop {
                    if k == 0 {
                        return Mor::from_entries_unchecked(nsrc.obj, ndst.obj, cat.field, entries);
                    }
                    k -= 1;
                    alpha[k] += 1;
                    if alpha[k] < objs[k].len() {
                        break;
                    }
                    alpha[k] = 0;
                }
            }
        }
        Mor::from_entries_unchecked(nsrc.obj, ndst.obj, cat.field, entries)
    }

    /// Same components with one entry's table replaced; used to build corrupted inputs.
    pub fn with_component(&self, s: &[u32], m: Mor) -> Result<NatTrans> {
        let mut table = self.table.clone();
        let i = self.index(s);
        table[i] = m;
        NatTrans::from_table(&self.cat, self.name.clone(), self.src.clone(), self.dst.clone(), self.arity, table)
    }
}

/// Sampling parameters for randomized object-level checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub samples: usize,
    pub seed: u64,
    pub max_len: usize,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { samples: 4, seed: 0x5eed, max_len: 2 }
    }
}

impl Sampling {
    /// Only the tuples of simples, no random objects.
    pub fn simple_only() -> Sampling {
        Sampling { samples: 0, ..Default::default() }
    }

    pub fn rng(&self, label: &str) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf29ce484222325;
        for b in label.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x100000001b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

/// Tuples on which an equation family is evaluated: every tuple of simples, then
/// `samples` random tuples of objects.
pub fn test_tuples(cat: &Category, arity: usize, opts: &Sampling, label: &str) -> Vec<Vec<Obj>> {
    let mut out: Vec<Vec<Obj>> = simple_tuples(cat.n(), arity)
        .into_iter()
        .map(|s| s.into_iter().map(Obj::simple).collect())
        .collect();
    let mut rng = opts.rng(label);
    for _ in 0..opts.samples {
        out.push((0..arity).map(|_| cat.random_obj(&mut rng, opts.max_len)).collect());
    }
    out
}

/// Evaluates both sides of an equation on every test tuple and records one check.
pub fn check_family<F>(rep: &mut Report, id: &str, cat: &Category, arity: usize, opts: &Sampling, f: F)
where
    F: Fn(&[Obj]) -> (Mor, Mor) + Sync,
{
    let tuples = test_tuples(cat, arity, opts, id);
    let results: Vec<(String, Option<String>)> = tuples
        .par_iter()
        .map(|t| {
            let (l, r) = f(t);
            (format!("{t:?}"), mismatch(&l, &r))
        })
        .collect();
    rep.check_all(id, results);
}

/// Checks naturality of `nat` in each variable on random morphisms.
pub fn check_naturality(rep: &mut Report, nat: &NatTrans, opts: &Sampling) {
    let cat = &nat.cat;
    let id = format!("naturality_{}", nat.name);
    let mut rng = opts.rng(&id);
    let mut cases = Vec::new();
    for k in 0..nat.arity {
        for _ in 0..opts.samples.max(1) {
            let xs: Vec<Obj> = (0..nat.arity).map(|_| cat.random_obj(&mut rng, opts.max_len)).collect();
            let y = cat.random_obj(&mut rng, opts.max_len);
            let f = cat.random_mor(&mut rng, &xs[k], &y);
            let mut ys = xs.clone();
            ys[k] = y;
            let mors: Vec<Mor> = (0..nat.arity).map(|j| if j == k { f.clone() } else { cat.id(&xs[j]) }).collect();
            let sf = nat.src.eval_mor(cat, &mors);
            let df = nat.dst.eval_mor(cat, &mors);
            let (nx, ny) = (nat.at(&xs), nat.at(&ys));
            let m = if sf.src == nx.src {
                mismatch(&df.comp(&nx), &ny.comp(&sf))
            } else {
                mismatch(&nx.comp(&sf), &df.comp(&ny))
            };
            cases.push((format!("var {k} at {xs:?}"), m));
        }
    }
    rep.check_all(id, cases);
}

/// A Hopf monad: functor, product, unit, comonoidal structure and both antipodes.
#[derive(Clone, Debug)]
pub struct HopfMonad {
    pub name: String,
    pub cat: Category,
    pub t: Arc<Functor>,
    pub mu: NatTrans,
    pub eta: NatTrans,
    pub t2: NatTrans,
    pub t0: Mor,
    pub sl: NatTrans,
    pub sr: NatTrans,
}

/// Source and target words of the structure transformations of a monad on `t`.
pub struct Words;

impl Words {
    pub fn mu(t: &Arc<Functor>) -> (Word, Word) {
        (Word::ap(t, Word::ap(t, Word::var(0))), Word::ap(t, Word::var(0)))
    }
    pub fn eta(t: &Arc<Functor>) -> (Word, Word) {
        (Word::var(0), Word::ap(t, Word::var(0)))
    }
    pub fn t2(t: &Arc<Functor>) -> (Word, Word) {
        (
            Word::ap(t, Word::tensor(Word::var(0), Word::var(1))),
            Word::tensor(Word::ap(t, Word::var(0)), Word::ap(t, Word::var(1))),
        )
    }
    /// Both antipodes: T(*T(X)) → *X and T(T(X)∨) → X∨ (left and right duals coincide).
    pub fn antipode(t: &Arc<Functor>) -> (Word, Word) {
        (Word::ap(t, Word::dual(Word::ap(t, Word::var(0)))), Word::dual(Word::var(0)))
    }
    /// R-matrices: X ⊗ Y → T(Y) ⊗ T(X).
    pub fn rmatrix(t: &Arc<Functor>) -> (Word, Word) {
        (
            Word::tensor(Word::var(0), Word::var(1)),
            Word::tensor(Word::ap(t, Word::var(1)), Word::ap(t, Word::var(0))),
        )
    }
    /// Transformations T → T'.
    pub fn morphism(t: &Arc<Functor>, t2: &Arc<Functor>) -> (Word, Word) {
        (Word::ap(t, Word::var(0)), Word::ap(t2, Word::var(0)))
    }
    /// Distributive laws T P → P T.
    pub fn law(t: &Arc<Functor>, p: &Arc<Functor>) -> (Word, Word) {
        (Word::ap(t, Word::ap(p, Word::var(0))), Word::ap(p, Word::ap(t, Word::var(0))))
    }
}

type Comp1<'a> = &'a (dyn Fn(u32) -> Result<Mor> + Sync);
type Comp2<'a> = &'a (dyn Fn(u32, u32) -> Result<Mor> + Sync);

impl HopfMonad {
    /// Assembles a Hopf monad from component functions at simples.
    #[allow(clippy::too_many_arguments)]
    pub fn from_components(
        cat: &Category,
        name: impl Into<String>,
        t: Arc<Functor>,
        mu: Comp1,
        eta: Comp1,
        t2: Comp2,
        t0: Mor,
        sl: Comp1,
        sr: Comp1,
    ) -> Result<HopfMonad> {
        let (s, d) = Words::mu(&t);
        let mu = NatTrans::build(cat, "mu", s, d, 1, |x| mu(x[0]))?;
        let (s, d) = Words::eta(&t);
        let eta = NatTrans::build(cat, "eta", s, d, 1, |x| eta(x[0]))?;
        let (s, d) = Words::t2(&t);
        let t2 = NatTrans::build(cat, "T2", s, d, 2, |x| t2(x[0], x[1]))?;
        let (s, d) = Words::antipode(&t);
        let sl = NatTrans::build(cat, "sl", s.clone(), d.clone(), 1, |x| sl(x[0]))?;
        let sr = NatTrans::build(cat, "sr", s, d, 1, |x| sr(x[0]))?;
        let t1 = t.apply_obj(&Obj::unit());
        if t0.src != t1 || t0.dst != Obj::unit() {
            return Err(Error::Shape("T0 must map T(1) to 1".into()));
        }
        Ok(HopfMonad { name: name.into(), cat: cat.clone(), t, mu, eta, t2, t0, sl, sr })
    }

    /// The identity Hopf monad.
    pub fn identity(cat: &Category) -> HopfMonad {
        let t = Arc::new(Functor::identity(cat.n()));
        let id1 = |x: u32| Ok(cat.id(&Obj::simple(x)));
        let id2 = |x: u32, y: u32| Ok(cat.id(&Obj::simple(cat.mul(x, y))));
        let dual = |x: u32| Ok(cat.id(&Obj::simple(cat.inv(x))));
        HopfMonad::from_components(cat, "identity", t, &id1, &id1, &id2, cat.id(&Obj::unit()), &dual, &dual)
            .expect("identity monad")
    }

    pub fn t_obj(&self, x: &Obj) -> Obj {
        self.t.apply_obj(x)
    }

    pub fn t_mor(&self, f: &Mor) -> Mor {
        self.t.apply_mor(f)
    }

    pub fn mu(&self, x: &Obj) -> Mor {
        self.mu.at(std::slice::from_ref(x))
    }

    pub fn eta(&self, x: &Obj) -> Mor {
        self.eta.at(std::slice::from_ref(x))
    }

    pub fn t2(&self, x: &Obj, y: &Obj) -> Mor {
        self.t2.at(&[x.clone(), y.clone()])
    }

    pub fn t0(&self) -> Mor {
        self.t0.clone()
    }

    pub fn sl(&self, x: &Obj) -> Mor {
        self.sl.at(std::slice::from_ref(x))
    }

    pub fn sr(&self, x: &Obj) -> Mor {
        self.sr.at(std::slice::from_ref(x))
    }

    /// T_3(X,Y,Z) = (T_2(X,Y) ⊗ id) T_2(X⊗Y, Z).
    pub fn t3(&self, x: &Obj, y: &Obj, z: &Obj) -> Mor {
        let c = &self.cat;
        let xy = c.tensor_obj(x, y);
        c.tensor(&self.t2(x, y), &c.id(&self.t_obj(z))).comp(&self.t2(&xy, z))
    }

    /// The other composite (id ⊗ T_2(Y,Z)) T_2(X, Y⊗Z).
    pub fn t3_alt(&self, x: &Obj, y: &Obj, z: &Obj) -> Mor {
        let c = &self.cat;
        let yz = c.tensor_obj(y, z);
        c.tensor(&c.id(&self.t_obj(x)), &self.t2(y, z)).comp(&self.t2(x, &yz))
    }

    /// Replaces one structure transformation; used to build corrupted inputs in tests.
    pub fn with(&self, which: &str, nat: NatTrans) -> HopfMonad {
        let mut h = self.clone();
        match which {
            "mu" => h.mu = nat,
            "eta" => h.eta = nat,
            "T2" => h.t2 = nat,
            "sl" => h.sl = nat,
            "sr" => h.sr = nat,
            _ => panic!("unknown structure transformation {which}"),
        }
        h
    }
}

/// Every bimonad and antipode axiom, plus consequences, at all simple tuples and at random
/// objects, and naturality of each structure transformation.
pub fn check_hopf_monad(h: &HopfMonad, opts: &Sampling) -> Report {
    let c = &h.cat;
    let mut rep = Report::new("check_hopf_monad");
    rep.cover("check_hopf_monad");
    rep.cover("apply_functor");
    rep.cover("nat_component");
    let one = Obj::unit();
    let id = |x: &Obj| c.id(x);
    let ten = |a: &Mor, b: &Mor| c.tensor(a, b);
    let t = |x: &Obj| h.t_obj(x);

    check_family(&mut rep, "monad_assoc", c, 1, opts, |x| {
        let x = &x[0];
        (h.mu(x).comp(&h.t_mor(&h.mu(x))), h.mu(x).comp(&h.mu(&t(x))))
    });
    check_family(&mut rep, "monad_unit_left", c, 1, opts, |x| {
        let x = &x[0];
        (h.mu(x).comp(&h.eta(&t(x))), id(&t(x)))
    });
    check_family(&mut rep, "monad_unit_right", c, 1, opts, |x| {
        let x = &x[0];
        (h.mu(x).comp(&h.t_mor(&h.eta(x))), id(&t(x)))
    });
    check_family(&mut rep, "t3_coassoc", c, 3, opts, |v| (h.t3_alt(&v[0], &v[1], &v[2]), h.t3(&v[0], &v[1], &v[2])));
    check_family(&mut rep, "comonoidal_counit_right", c, 1, opts, |x| {
        let x = &x[0];
        (ten(&id(&t(x)), &h.t0()).comp(&h.t2(x, &one)), id(&t(x)))
    });
    check_family(&mut rep, "comonoidal_counit_left", c, 1, opts, |x| {
        let x = &x[0];
        (ten(&h.t0(), &id(&t(x))).comp(&h.t2(&one, x)), id(&t(x)))
    });
    check_family(&mut rep, "mu_comonoidal_t2", c, 2, opts, |v| {
        let (x, y) = (&v[0], &v[1]);
        let xy = c.tensor_obj(x, y);
        let l = h.t2(x, y).comp(&h.mu(&xy));
        let r = Mor::chain(&[&ten(&h.mu(x), &h.mu(y)), &h.t2(&t(x), &t(y)), &h.t_mor(&h.t2(x, y))]);
        (l, r)
    });
    check_family(&mut rep, "mu_comonoidal_t0", c, 0, opts, |_| {
        (h.t0().comp(&h.mu(&one)), h.t0().comp(&h.t_mor(&h.t0())))
    });
    check_family(&mut rep, "eta_comonoidal_t2", c, 2, opts, |v| {
        let (x, y) = (&v[0], &v[1]);
        (h.t2(x, y).comp(&h.eta(&c.tensor_obj(x, y))), ten(&h.eta(x), &h.eta(y)))
    });
    check_family(&mut rep, "eta_comonoidal_t0", c, 0, opts, |_| (h.t0().comp(&h.eta(&one)), id(&one)));

    check_family(&mut rep, "left_antipode_1", c, 1, opts, |x| {
        let x = &x[0];
        let (tx, dx, dtx) = (t(x), c.dual_obj(x), c.dual_obj(&t(x)));
        let l = Mor::chain(&[
            &h.t0(),
            &h.t_mor(&c.ev(x)),
            &h.t_mor(&ten(&c.dual_mor(&h.eta(x)), &id(x))),
        ]);
        let _ = dx;
        let r = Mor::chain(&[
            &c.ev(&tx),
            &ten(&h.sl(&tx).comp(&h.t_mor(&c.dual_mor(&h.mu(x)))), &id(&tx)),
            &h.t2(&dtx, x),
        ]);
        (l, r)
    });
    check_family(&mut rep, "left_antipode_2", c, 1, opts, |x| {
        let x = &x[0];
        let (tx, dx, dtx) = (t(x), c.dual_obj(x), c.dual_obj(&t(x)));
        let l = Mor::chain(&[&ten(&h.eta(x), &id(&dx)), &c.coev(x), &h.t0()]);
        let r = Mor::chain(&[&ten(&h.mu(x), &h.sl(x)), &h.t2(&tx, &dtx), &h.t_mor(&c.coev(&tx))]);
        (l, r)
    });
    check_family(&mut rep, "right_antipode_1", c, 1, opts, |x| {
        let x = &x[0];
        let (tx, dtx) = (t(x), c.dual_obj(&t(x)));
        let l = Mor::chain(&[
            &h.t0(),
            &h.t_mor(&c.ev_r(x)),
            &h.t_mor(&ten(&id(x), &c.dual_mor(&h.eta(x)))),
        ]);
        let r = Mor::chain(&[
            &c.ev_r(&tx),
            &ten(&id(&tx), &h.sr(&tx).comp(&h.t_mor(&c.dual_mor(&h.mu(x))))),
            &h.t2(x, &dtx),
        ]);
        (l, r)
    });
    check_family(&mut rep, "right_antipode_2", c, 1, opts, |x| {
        let x = &x[0];
        let (tx, dx, dtx) = (t(x), c.dual_obj(x), c.dual_obj(&t(x)));
        let l = Mor::chain(&[&ten(&id(&dx), &h.eta(x)), &c.coev_r(x), &h.t0()]);
        let r = Mor::chain(&[&ten(&h.sr(x), &h.mu(x)), &h.t2(&dtx, &tx), &h.t_mor(&c.coev_r(&tx))]);
        (l, r)
    });

    for (side, s) in [("sl", &h.sl), ("sr", &h.sr)] {
        let at = |x: &Obj| s.at(std::slice::from_ref(x));
        check_family(&mut rep, &format!("{side}_mu"), c, 1, opts, |x| {
            let x = &x[0];
            let dtx = c.dual_obj(&t(x));
            let l = at(x).comp(&h.mu(&dtx));
            let r = Mor::chain(&[&at(x), &h.t_mor(&at(&t(x))), &h.t_mor(&h.t_mor(&c.dual_mor(&h.mu(x))))]);
            (l, r)
        });
        check_family(&mut rep, &format!("{side}_eta"), c, 1, opts, |x| {
            let x = &x[0];
            (at(x).comp(&h.eta(&c.dual_obj(&t(x)))), c.dual_mor(&h.eta(x)))
        });
        check_family(&mut rep, &format!("{side}_t2"), c, 2, opts, |v| {
            let (x, y) = (&v[0], &v[1]);
            let xy = c.tensor_obj(x, y);
            let l = Mor::chain(&[
                &at(&xy),
                &h.t_mor(&c.dual_mor(&h.t2(x, y))),
                &h.t_mor(&c.dual_tensor_iso(&t(x), &t(y))),
            ]);
            let r = Mor::chain(&[
                &c.dual_tensor_iso(x, y),
                &ten(&at(y), &at(x)),
                &h.t2(&c.dual_obj(&t(y)), &c.dual_obj(&t(x))),
            ]);
            (l, r)
        });
        check_family(&mut rep, &format!("{side}_t0"), c, 0, opts, |_| {
            (at(&one).comp(&h.t_mor(&c.dual_mor(&h.t0()))), h.t0())
        });
    }
    check_family(&mut rep, "antipodes_inverse_rl", c, 1, opts, |x| {
        let x = &x[0];
        let l = h.sr(&c.dual_obj(&t(x))).comp(&h.t_mor(&c.dual_mor(&h.sl(x))));
        (l, id(&t(x)))
    });
    check_family(&mut rep, "antipodes_inverse_lr", c, 1, opts, |x| {
        let x = &x[0];
        let l = h.sl(&c.dual_obj(&t(x))).comp(&h.t_mor(&c.dual_mor(&h.sr(x))));
        (l, id(&t(x)))
    });
    for nat in [&h.mu, &h.eta, &h.t2, &h.sl, &h.sr] {
        check_naturality(&mut rep, nat, opts);
    }
    rep
}

/// Checks the four R-matrix axioms of a monad R-matrix R_{X,Y}: X⊗Y → T(Y)⊗T(X).
pub fn check_monad_rmatrix(h: &HopfMonad, r: &NatTrans, opts: &Sampling) -> Report {
    let c = &h.cat;
    let mut rep = Report::new("check_monad_rmatrix");
    rep.cover("check_monad_rmatrix");
    let one = Obj::unit();
    let id = |x: &Obj| c.id(x);
    let ten = |a: &Mor, b: &Mor| c.tensor(a, b);
    let t = |x: &Obj| h.t_obj(x);
    let rr = |x: &Obj, y: &Obj| r.at(&[x.clone(), y.clone()]);
    check_family(&mut rep, "rmatrix_1", c, 2, opts, |v| {
        let (x, y) = (&v[0], &v[1]);
        let mm = ten(&h.mu(y), &h.mu(x));
        let l = Mor::chain(&[&mm, &rr(&t(x), &t(y)), &h.t2(x, y)]);
        let r = Mor::chain(&[&mm, &h.t2(&t(y), &t(x)), &h.t_mor(&rr(x, y))]);
        (l, r)
    });
    check_family(&mut rep, "rmatrix_2", c, 3, opts, |v| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let xy = c.tensor_obj(x, y);
        let l = ten(&id(&t(z)), &h.t2(x, y)).comp(&rr(&xy, z));
        let r = Mor::chain(&[
            &ten(&h.mu(z), &id(&c.tensor_obj(&t(x), &t(y)))),
            &ten(&rr(x, &t(z)), &id(&t(y))),
            &ten(&id(x), &rr(y, z)),
        ]);
        (l, r)
    });
    check_family(&mut rep, "rmatrix_3", c, 3, opts, |v| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let yz = c.tensor_obj(y, z);
        let l = ten(&h.t2(y, z), &id(&t(x))).comp(&rr(x, &yz));
        let r = Mor::chain(&[
            &ten(&id(&c.tensor_obj(&t(y), &t(z))), &h.mu(x)),
            &ten(&id(&t(y)), &rr(&t(x), z)),
            &ten(&rr(x, y), &id(z)),
        ]);
        (l, r)
    });
    check_family(&mut rep, "rmatrix_4_left", c, 1, opts, |x| {
        let x = &x[0];
        (ten(&id(&t(x)), &h.t0()).comp(&rr(&one, x)), h.eta(x))
    });
    check_family(&mut rep, "rmatrix_4_right", c, 1, opts, |x| {
        let x = &x[0];
        (ten(&h.t0(), &id(&t(x))).comp(&rr(x, &one)), h.eta(x))
    });
    check_naturality(&mut rep, r, opts);
    rep
}

/// A module over a monad: an object with an action T(M) → M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TModule {
    pub m: Obj,
    pub r: Mor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualSide {
    Left,
    Right,
}

pub fn check_tmodule(h: &HopfMonad, md: &TModule) -> Report {
    let c = &h.cat;
    let mut rep = Report::new("check_tmodule");
    rep.cover("check_tmodule");
    let tm = h.t_obj(&md.m);
    if md.r.src != tm || md.r.dst != md.m {
        rep.fail("action_shape", format!("{:?}", md.m), "action must map T(M) to M");
        return rep;
    }
    rep.pass("action_shape", format!("{:?}", md.m));
    rep.check_eq("action_assoc", format!("{:?}", md.m), &md.r.comp(&h.t_mor(&md.r)), &md.r.comp(&h.mu(&md.m)));
    rep.check_eq("action_unit", format!("{:?}", md.m), &md.r.comp(&h.eta(&md.m)), &c.id(&md.m));
    rep
}

fn require_module(h: &HopfMonad, md: &TModule) -> Result<()> {
    check_tmodule(h, md).into_result().map(|_| ())
}

pub fn free_module(h: &HopfMonad, x: &Obj) -> TModule {
    TModule { m: h.t_obj(x), r: h.mu(x) }
}

/// The unit object (1, T_0).
pub fn unit_module(h: &HopfMonad) -> TModule {
    TModule { m: Obj::unit(), r: h.t0() }
}

/// (M⊗N, (r⊗s) T_2(M,N)).
pub fn tmodule_tensor(h: &HopfMonad, a: &TModule, b: &TModule) -> Result<TModule> {
    require_module(h, a)?;
    require_module(h, b)?;
    Ok(tmodule_tensor_unchecked(h, a, b))
}

pub(crate) fn tmodule_tensor_unchecked(h: &HopfMonad, a: &TModule, b: &TModule) -> TModule {
    let c = &h.cat;
    TModule { m: c.tensor_obj(&a.m, &b.m), r: c.tensor(&a.r, &b.r).comp(&h.t2(&a.m, &b.m)) }
}

/// Left dual (*M, s^l_M T(*r)) or right dual (M∨, s^r_M T(r∨)).
pub fn tmodule_dual(h: &HopfMonad, a: &TModule, side: DualSide) -> Result<TModule> {
    require_module(h, a)?;
    Ok(tmodule_dual_unchecked(h, a, side))
}

pub(crate) fn tmodule_dual_unchecked(h: &HopfMonad, a: &TModule, side: DualSide) -> TModule {
    let c = &h.cat;
    let s = match side {
        DualSide::Left => h.sl(&a.m),
        DualSide::Right => h.sr(&a.m),
    };
    TModule { m: c.dual_obj(&a.m), r: s.comp(&h.t_mor(&c.dual_mor(&a.r))) }
}

/// Whether f: M → N intertwines the actions.
pub fn is_tlinear(h: &HopfMonad, f: &Mor, a: &TModule, b: &TModule) -> bool {
    f.comp(&a.r) == b.r.comp(&h.t_mor(f))
}

/// A random module built from free modules by tensor products and duals.
pub fn random_tmodule(h: &HopfMonad, rng: &mut ChaCha8Rng, max_len: usize) -> TModule {
    use rand::Rng;
    let x = h.cat.random_obj(rng, max_len);
    let base = free_module(h, &x);
    match rng.gen_range(0..4) {
        0 => base,
        1 => tmodule_dual_unchecked(h, &base, DualSide::Left),
        2 => tmodule_dual_unchecked(h, &base, DualSide::Right),
        _ => tmodule_tensor_unchecked(h, &base, &unit_module(h)),
    }
}

/// The braiding (s⊗r) R_{M,N} of two modules induced by an R-matrix.
pub fn module_braiding(h: &HopfMonad, r: &NatTrans, a: &TModule, b: &TModule) -> Mor {
    h.cat.tensor(&b.r, &a.r).comp(&r.at(&[a.m.clone(), b.m.clone()]))
}

/// Monad-morphism and comonoidality equations for f: T → T', and module pullback.
pub fn check_monad_morphism(f: &NatTrans, t: &HopfMonad, t2: &HopfMonad, opts: &Sampling) -> Report {
    let c = &t.cat;
    let mut rep = Report::new("check_monad_morphism");
    rep.cover("check_monad_morphism");
    let fx = |x: &Obj| f.at(std::slice::from_ref(x));
    let one = Obj::unit();
    check_family(&mut rep, "morphism_mu", c, 1, opts, |x| {
        let x = &x[0];
        let l = fx(x).comp(&t.mu(x));
        let r = Mor::chain(&[&t2.mu(x), &fx(&t2.t_obj(x)), &t.t_mor(&fx(x))]);
        (l, r)
    });
    check_family(&mut rep, "morphism_eta", c, 1, opts, |x| (fx(&x[0]).comp(&t.eta(&x[0])), t2.eta(&x[0])));
    check_family(&mut rep, "morphism_t2", c, 2, opts, |v| {
        let (x, y) = (&v[0], &v[1]);
        (t2.t2(x, y).comp(&fx(&c.tensor_obj(x, y))), c.tensor(&fx(x), &fx(y)).comp(&t.t2(x, y)))
    });
    check_family(&mut rep, "morphism_t0", c, 0, opts, |_| (t2.t0().comp(&fx(&one)), t.t0()));
    if rep.passed() {
        let mut rng = opts.rng("pullback");
        let mut cases = Vec::new();
        for _ in 0..opts.samples.max(1) {
            let md = random_tmodule(t2, &mut rng, opts.max_len);
            let pulled = TModule { m: md.m.clone(), r: md.r.comp(&fx(&md.m)) };
            let sub = check_tmodule(t, &pulled);
            let m = sub.failures().next().map(|ch| format!("{}: {}", ch.id, ch.mismatch.clone().unwrap_or_default()));
            cases.push((format!("{:?}", md.m), m));
        }
        rep.check_all("pullback_modules", cases);
    }
    rep
}

/// The four Beck equations and comonoidality for Ω: TP → PT.
pub fn check_distributive_law(t: &HopfMonad, p: &HopfMonad, omega: &NatTrans, opts: &Sampling) -> Report {
    let c = &t.cat;
    let mut rep = Report::new("check_distributive_law");
    rep.cover("check_distributive_law");
    let om = |x: &Obj| omega.at(std::slice::from_ref(x));
    let (tt, pp) = (|x: &Obj| t.t_obj(x), |x: &Obj| p.t_obj(x));
    let one = Obj::unit();
    check_family(&mut rep, "beck_mult_p", c, 1, opts, |x| {
        let x = &x[0];
        let l = om(x).comp(&t.t_mor(&p.mu(x)));
        let r = Mor::chain(&[&p.mu(&tt(x)), &p.t_mor(&om(x)), &om(&pp(x))]);
        (l, r)
    });
    check_family(&mut rep, "beck_unit_p", c, 1, opts, |x| {
        let x = &x[0];
        (om(x).comp(&t.t_mor(&p.eta(x))), p.eta(&tt(x)))
    });
    check_family(&mut rep, "beck_mult_t", c, 1, opts, |x| {
        let x = &x[0];
        let l = om(x).comp(&t.mu(&pp(x)));
        let r = Mor::chain(&[&p.t_mor(&t.mu(x)), &om(&tt(x)), &t.t_mor(&om(x))]);
        (l, r)
    });
    check_family(&mut rep, "beck_unit_t", c, 1, opts, |x| {
        let x = &x[0];
        (om(x).comp(&t.eta(&pp(x))), p.t_mor(&t.eta(x)))
    });
    check_family(&mut rep, "law_comonoidal_t2", c, 2, opts, |v| {
        let (x, y) = (&v[0], &v[1]);
        let xy = c.tensor_obj(x, y);
        let pt2 = p.t2(&tt(x), &tt(y)).comp(&p.t_mor(&t.t2(x, y)));
        let tp2 = t.t2(&pp(x), &pp(y)).comp(&t.t_mor(&p.t2(x, y)));
        (pt2.comp(&om(&xy)), c.tensor(&om(x), &om(y)).comp(&tp2))
    });
    check_family(&mut rep, "law_comonoidal_t0", c, 0, opts, |_| {
        let pt0 = p.t0().comp(&p.t_mor(&t.t0()));
        let tp0 = t.t0().comp(&t.t_mor(&p.t0()));
        (pt0.comp(&om(&one)), tp0)
    });
    check_naturality(&mut rep, omega, opts);
    rep
}

/// The composite Hopf monad P ∘_Ω T for a comonoidal distributive law Ω: TP → PT.
pub fn compose_with_law(p: &HopfMonad, t: &HopfMonad, omega: &NatTrans) -> Result<HopfMonad> {
    check_distributive_law(t, p, omega, &Sampling::simple_only()).into_result()?;
    Ok(compose_with_law_unchecked(p, t, omega))
}

pub(crate) fn compose_with_law_unchecked(p: &HopfMonad, t: &HopfMonad, omega: &NatTrans) -> HopfMonad {
    let c = &t.cat;
    let pt = Arc::new(p.t.after(&t.t));
    let om = |x: &Obj| omega.at(std::slice::from_ref(x));
    let mu = |x: u32| {
        let x = Obj::simple(x);
        let tx = t.t_obj(&x);
        Ok(Mor::chain(&[&p.mu(&tx), &p.t_mor(&p.t_mor(&t.mu(&x))), &p.t_mor(&om(&tx))]))
    };
    let eta = |x: u32| {
        let x = Obj::simple(x);
        Ok(p.eta(&t.t_obj(&x)).comp(&t.eta(&x)))
    };
    let t2 = |x: u32, y: u32| {
        let (x, y) = (Obj::simple(x), Obj::simple(y));
        Ok(p.t2(&t.t_obj(&x), &t.t_obj(&y)).comp(&p.t_mor(&t.t2(&x, &y))))
    };
    let t0 = p.t0().comp(&p.t_mor(&t.t0()));
    let sl = |x: u32| {
        let x = Obj::simple(x);
        let px = p.t_obj(&x);
        Ok(Mor::chain(&[&p.sl(&x), &p.t_mor(&t.sl(&px)), &p.t_mor(&t.t_mor(&c.dual_mor(&om(&x))))]))
    };
    let sr = |x: u32| {
        let x = Obj::simple(x);
        let px = p.t_obj(&x);
        Ok(Mor::chain(&[&p.sr(&x), &p.t_mor(&t.sr(&px)), &p.t_mor(&t.t_mor(&c.dual_mor(&om(&x))))]))
    };
    let name = format!("{}∘{}", p.name, t.name);
    HopfMonad::from_components(c, name, pt, &mu, &eta, &t2, t0, &sl, &sr).expect("composite shapes")
}

/// The lift P̃(M, r) = (P(M), P(r) Ω_M) of a T-module.
pub fn lift_module(p: &HopfMonad, omega: &NatTrans, md: &TModule) -> TModule {
    TModule { m: p.t_obj(&md.m), r: p.t_mor(&md.r).comp(&omega.at(std::slice::from_ref(&md.m))) }
}

/// K((M,r), s) = (M, s P(r)): a T-module with a P̃-action gives a (P∘T)-module.
pub fn k_functor(p: &HopfMonad, md: &TModule, s: &Mor) -> TModule {
    TModule { m: md.m.clone(), r: s.comp(&p.t_mor(&md.r)) }
}

/// K⁻¹(A, α) = ((A, α u_{T(A)}), α P(η_A)).
pub fn k_inverse(p: &HopfMonad, t: &HopfMonad, md: &TModule) -> (TModule, Mor) {
    let a = &md.m;
    let r = md.r.comp(&p.eta(&t.t_obj(a)));
    let s = md.r.comp(&p.t_mor(&t.eta(a)));
    (TModule { m: a.clone(), r }, s)
}

/// Lift and composite consistency: lifted modules are T-modules with T-linear structure,
/// the middle unitary law, and the round trips through K.
pub fn check_lift(p: &HopfMonad, t: &HopfMonad, omega: &NatTrans, pt: &HopfMonad, opts: &Sampling) -> Report {
    let c = &t.cat;
    let mut rep = Report::new("check_lift");
    rep.cover("lift_monad");
    check_family(&mut rep, "middle_unitary", c, 1, opts, |x| {
        let x = &x[0];
        let ptx = pt.t_obj(x);
        let inner = p.eta(&t.t_obj(&p.t_obj(&t.t_obj(x)))).comp(&p.t_mor(&t.eta(&p.t_obj(&t.t_obj(x)))));
        let _ = inner;
        let l = pt.mu(x).comp(&p.t_mor(&t.eta(&p.t_obj(&t.t_obj(x)))).comp(&p.eta(&t.t_obj(x))));
        (l, c.id(&ptx))
    });
    let mut rng = opts.rng("lift");
    let mut lifted = Vec::new();
    let mut linear = Vec::new();
    let mut round = Vec::new();
    for _ in 0..opts.samples.max(1) {
        let md = random_tmodule(t, &mut rng, opts.max_len);
        let lm = lift_module(p, omega, &md);
        let sub = check_tmodule(t, &lm);
        lifted.push((format!("{:?}", md.m), sub.failures().next().map(|f| f.id.clone())));
        let llm = lift_module(p, omega, &lm);
        let ok_m = is_tlinear(t, &p.mu(&md.m), &llm, &lm);
        let ok_u = is_tlinear(t, &p.eta(&md.m), &md, &lm);
        linear.push((format!("{:?}", md.m), (!(ok_m && ok_u)).then(|| "product or unit not T-linear".to_string())));

        let x = c.random_obj(&mut rng, opts.max_len);
        let free = free_module(pt, &x);
        let (tm, s) = k_inverse(p, t, &free);
        let back = k_functor(p, &tm, &s);
        let pair_ok = check_tmodule(t, &tm).passed() && s.comp(&p.mu(&tm.m)) == s.comp(&p.t_mor(&s));
        let (tm2, s2) = k_inverse(p, t, &back);
        let m = if back != free {
            Some("K(K⁻¹(M)) differs from M".into())
        } else if tm2 != tm || s2 != s {
            Some("K⁻¹(K(N)) differs from N".into())
        } else if !pair_ok {
            Some("K⁻¹(M) is not a lifted-module pair".into())
        } else {
            None
        };
        round.push((format!("{x:?}"), m));
    }
    rep.check_all("lift_is_module", lifted);
    rep.check_all("lift_structure_linear", linear);
    rep.check_all("k_round_trip", round);
    rep
}

/// Ω⁻¹ by the antipode formula, cross-checked against direct inversion of each component.
pub fn invert_law(t: &HopfMonad, p: &HopfMonad, omega: &NatTrans) -> Result<NatTrans> {
    let c = &t.cat;
    let om = |x: &Obj| omega.at(std::slice::from_ref(x));
    let (s, d) = Words::law(&t.t, &p.t);
    let inv = NatTrans::build(c, "Omega_inv", d, s, 1, |x| {
        let x = Obj::simple(x[0]);
        let px = p.t_obj(&x);
        let y = c.dual_obj(&t.t_obj(&px));
        let py = p.t_obj(&y);
        let pt = |f: &Mor| p.t_mor(&t.t_mor(f));
        let formula = Mor::chain(&[
            &p.sr(&y),
            &p.t_mor(&t.sr(&py)),
            &pt(&c.dual_mor(&om(&y))),
            &pt(&c.dual_mor(&p.t_mor(&t.sl(&px)))),
            &pt(&c.dual_mor(&p.sl(&x))),
        ]);
        let direct = om(&x).inverse()?;
        if formula != direct {
            let m = mismatch(&formula, &direct).unwrap_or_default();
            return Err(Error::Falsified(format!("inverse law formula differs from matrix inverse at {x:?}: {m}")));
        }
        Ok(formula)
    })?;
    Ok(inv)
}

/// Which side the Hopf algebra acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Reindexing A ⊗ X → (A⊗?)(X): the additive extension orders positions by X first.
pub fn left_reindex(c: &Category, a: &Obj, x: &Obj) -> Mor {
    let (na, nx) = (a.len(), x.len());
    let dst = Obj(x.0.iter().flat_map(|&s| a.0.iter().map(move |&b| c.mul(b, s))).collect());
    let entries = (0..na).flat_map(|i| (0..nx).map(move |j| (j * na + i, i * nx + j)));
    Mor::from_entries_unchecked(c.tensor_obj(a, x), dst, c.field, entries.map(|(r, col)| (r, col, c.one())).collect::<Vec<_>>())
}

/// The Hopf monad ? ⊗ A (right) or A ⊗ ? (left) of a Hopf algebra in a braided category.
pub fn hopf_monad_from_algebra(h: &HopfAlgebra, side: Side) -> Result<HopfMonad> {
    let c = &h.cat;
    if !c.is_braided() {
        return Err(Error::NotBraided);
    }
    let a = h.a.clone();
    let da = c.dual_obj(&a);
    let id = |x: &Obj| c.id(x);
    let ten = |f: &Mor, g: &Mor| c.tensor(f, g);
    let tau = |x: &Obj, y: &Obj| h.braid(x, y);
    match side {
        Side::Right => {
            let t = Arc::new(Functor::new(
                format!("?⊗{}", h.name),
                (0..c.n() as u32).map(|i| c.tensor_obj(&Obj::simple(i), &a)).collect(),
            ));
            let mu = |x: u32| Ok(ten(&id(&Obj::simple(x)), &h.m));
            let eta = |x: u32| Ok(ten(&id(&Obj::simple(x)), &h.u));
            let t2 = |x: u32, y: u32| {
                let (x, y) = (Obj::simple(x), Obj::simple(y));
                let xy = c.tensor_obj(&x, &y);
                Ok(Mor::chain(&[&c.tensors(&[&id(&x), &tau(&y, &a), &id(&a)]), &ten(&id(&xy), &h.delta)]))
            };
            let sl = |x: u32| {
                let x = Obj::simple(x);
                let dx = c.dual_obj(&x);
                let iso = c.dual_tensor_iso(&x, &a).inverse()?;
                Ok(Mor::chain(&[
                    &ten(&c.ev(&a), &id(&dx)),
                    &ten(&id(&da), &tau(&dx, &a)),
                    &ten(&id(&c.tensor_obj(&da, &dx)), &h.s_inv),
                    &ten(&iso, &id(&a)),
                ]))
            };
            let sr = |x: u32| {
                let x = Obj::simple(x);
                let dx = c.dual_obj(&x);
                let iso = c.dual_tensor_iso(&x, &a).inverse()?;
                Ok(Mor::chain(&[
                    &ten(&c.ev_r(&a), &id(&dx)),
                    &tau(&c.tensor_obj(&da, &dx), &a),
                    &ten(&id(&c.tensor_obj(&da, &dx)), &h.s),
                    &ten(&iso, &id(&a)),
                ]))
            };
            HopfMonad::from_components(c, format!("?⊗{}", h.name), t, &mu, &eta, &t2, h.eps.clone(), &sl, &sr)
        }
        Side::Left => {
            let t = Arc::new(Functor::new(
                format!("{}⊗?", h.name),
                (0..c.n() as u32).map(|i| c.tensor_obj(&a, &Obj::simple(i))).collect(),
            ));
            let mu = |x: u32| {
                let x = Obj::simple(x);
                let ta = c.tensor_obj(&a, &x);
                Ok(ten(&h.m, &id(&x)).comp(&left_reindex(c, &a, &ta).inverse()?))
            };
            let eta = |x: u32| Ok(ten(&h.u, &id(&Obj::simple(x))));
            let t2 = |x: u32, y: u32| {
                let (x, y) = (Obj::simple(x), Obj::simple(y));
                Ok(Mor::chain(&[&c.tensors(&[&id(&a), &tau(&a, &x), &id(&y)]), &ten(&h.delta, &id(&c.tensor_obj(&x, &y)))]))
            };
            let sl = |x: u32| {
                let x = Obj::simple(x);
                let dx = c.dual_obj(&x);
                let d = c.dual_obj(&c.tensor_obj(&a, &x));
                let iso = c.dual_tensor_iso(&a, &x).inverse()?;
                Ok(Mor::chain(&[
                    &ten(&id(&dx), &c.ev(&a)),
                    &tau(&a, &c.tensor_obj(&dx, &da)),
                    &ten(&h.s, &id(&c.tensor_obj(&dx, &da))),
                    &ten(&id(&a), &iso),
                    &left_reindex(c, &a, &d).inverse()?,
                ]))
            };
            let sr = |x: u32| {
                let x = Obj::simple(x);
                let dx = c.dual_obj(&x);
                let d = c.dual_obj(&c.tensor_obj(&a, &x));
                let iso = c.dual_tensor_iso(&a, &x).inverse()?;
                Ok(Mor::chain(&[
                    &ten(&id(&dx), &c.ev_r(&a)),
                    &ten(&tau(&a, &dx), &id(&da)),
                    &ten(&h.s_inv, &id(&c.tensor_obj(&dx, &da))),
                    &ten(&id(&a), &iso),
                    &left_reindex(c, &a, &d).inverse()?,
                ]))
            };
            HopfMonad::from_components(c, format!("{}⊗?", h.name), t, &mu, &eta, &t2, h.eps.clone(), &sl, &sr)
        }
    }
}
