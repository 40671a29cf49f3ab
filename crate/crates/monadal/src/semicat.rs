//! Strict pointed fusion categories Vec_G (and Vec), with sparse graded morphism matrices.
//!
//! An object is a sequence of simple indices; a morphism X → Y is a matrix whose entry
//! (β, α) may be nonzero only when Y[β] = X[α]. Tensor products enumerate pairs
//! lexicographically, the unit object is the singleton `[0]`, and left and right duals
//! share one dual table with all evaluation scalars equal to 1.

use std::fmt;

use rand::Rng;

use crate::report::Report;
use crate::scalars::{FieldSpec, Scalar};
use crate::{Error, Result};

/// An object: a finite direct sum of simples, in positional order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj(pub Vec<u32>);

impl Obj {
    pub fn unit() -> Obj {
        Obj(vec![0])
    }

    pub fn simple(i: u32) -> Obj {
        Obj(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(parts: &[&Obj]) -> Obj {
        Obj(parts.iter().flat_map(|o| o.0.iter().copied()).collect())
    }

    /// Multiplicity of each simple index, as a sorted list.
    pub fn multiset(&self) -> Vec<(u32, usize)> {
        let mut v = self.0.clone();
        v.sort_unstable();
        let mut out: Vec<(u32, usize)> = Vec::new();
        for s in v {
            match out.last_mut() {
                Some((t, n)) if *t == s => *n += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A graded sparse matrix `dst × src`, stored by columns with rows sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mor {
    pub src: Obj,
    pub dst: Obj,
    field: FieldSpec,
    cols: Vec<Vec<(u32, Scalar)>>,
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mor {:?} -> {:?} {{", self.src, self.dst)?;
        for (r, c, v) in self.entries() {
            write!(f, " ({r},{c}):{v}")?;
        }
        write!(f, " }}")
    }
}

impl Mor {
    pub fn zero(src: Obj, dst: Obj, field: FieldSpec) -> Mor {
        let cols = vec![Vec::new(); src.len()];
        Mor { src, dst, field, cols }
    }

    pub fn id(x: &Obj, field: FieldSpec) -> Mor {
        let cols = (0..x.len()).map(|i| vec![(i as u32, field.one())]).collect();
        Mor { src: x.clone(), dst: x.clone(), field, cols }
    }

    /// Builds a morphism from `(row, col, value)` triples, summing repeats and rejecting
    /// entries that break the grading.
    pub fn from_entries<I>(src: Obj, dst: Obj, field: FieldSpec, entries: I) -> Result<Mor>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut m = Mor::zero(src, dst, field);
        for (r, c, v) in entries {
            if r >= m.dst.len() || c >= m.src.len() {
                return Err(Error::Shape(format!("entry ({r},{c}) out of range")));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch);
            }
            if v.is_zero() {
                continue;
            }
            if m.dst.0[r] != m.src.0[c] {
                return Err(Error::Shape(format!(
                    "entry ({r},{c}) joins simple {} to simple {}",
                    m.src.0[c], m.dst.0[r]
                )));
            }
            m.add_entry(r, c, v);
        }
        Ok(m)
    }

    /// Like [`Mor::from_entries`] for entries produced internally, where grading holds by
    /// construction.
    pub(crate) fn from_entries_unchecked<I>(src: Obj, dst: Obj, field: FieldSpec, entries: I) -> Mor
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut m = Mor::zero(src, dst, field);
        for (r, c, v) in entries {
            debug_assert_eq!(m.dst.0[r], m.src.0[c]);
            if !v.is_zero() {
                m.add_entry(r, c, v);
            }
        }
        m
    }

    fn add_entry(&mut self, r: usize, c: usize, v: Scalar) {
        let col = &mut self.cols[c];
        match col.binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(k) => {
                let s = &col[k].1 + &v;
                if s.is_zero() {
                    col.remove(k);
                } else {
                    col[k].1 = s;
                }
            }
            Err(k) => col.insert(k, (r as u32, v)),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.cols[c].binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(k) => self.cols[c][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn col(&self, c: usize) -> &[(u32, Scalar)] {
        &self.cols[c]
    }

    /// Nonzero entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r as usize, c, v)))
    }

    /// Nonzero entries in row-major order, as used by dumps.
    pub fn entries_row_major(&self) -> Vec<(usize, usize, Scalar)> {
        let mut v: Vec<(usize, usize, Scalar)> = self.entries().map(|(r, c, s)| (r, c, s.clone())).collect();
        v.sort_by_key(|e| (e.0, e.1));
        v
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// `self ∘ f`.
    pub fn comp(&self, f: &Mor) -> Mor {
        assert_eq!(
            f.dst, self.src,
            "compose: target {:?} does not match source {:?}",
            f.dst, self.src
        );
        let n = self.dst.len();
        let mut acc: Vec<Option<Scalar>> = vec![None; n];
        let mut touched: Vec<u32> = Vec::new();
        let mut cols = Vec::with_capacity(f.src.len());
        for fcol in &f.cols {
            for (k, a) in fcol {
                for (r, b) in &self.cols[*k as usize] {
                    let prod = a * b;
                    let slot = &mut acc[*r as usize];
                    match slot {
                        Some(x) => *x = &*x + &prod,
                        None => {
                            *slot = Some(prod);
                            touched.push(*r);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut col = Vec::with_capacity(touched.len());
            for r in touched.drain(..) {
                let v = acc[r as usize].take().unwrap();
                if !v.is_zero() {
                    col.push((r, v));
                }
            }
            cols.push(col);
        }
        Mor { src: f.src.clone(), dst: self.dst.clone(), field: self.field, cols }
    }

    pub fn try_comp(&self, f: &Mor) -> Result<Mor> {
        if f.dst != self.src {
            return Err(Error::Shape(format!("compose {:?} after {:?}", self.src, f.dst)));
        }
        Ok(self.comp(f))
    }

    pub fn add(&self, o: &Mor) -> Mor {
        assert!(self.src == o.src && self.dst == o.dst, "add: shape mismatch");
        let mut m = self.clone();
        for (r, c, v) in o.entries() {
            m.add_entry(r, c, v.clone());
        }
        m
    }

    pub fn sub(&self, o: &Mor) -> Mor {
        self.add(&o.scale(&self.field.int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Mor {
        if s.is_zero() {
            return Mor::zero(self.src.clone(), self.dst.clone(), self.field);
        }
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(r, v)| (*r, v * s)).collect())
            .collect();
        Mor { src: self.src.clone(), dst: self.dst.clone(), field: self.field, cols }
    }

    /// The transposed matrix, a morphism dst → src (grading is symmetric).
    pub fn transpose(&self) -> Mor {
        let mut cols: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); self.dst.len()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r as usize].push((c as u32, v.clone()));
            }
        }
        Mor { src: self.dst.clone(), dst: self.src.clone(), field: self.field, cols }
    }

    /// Same matrix, relabelled endpoints (must carry identical simple sequences).
    pub fn retype(&self, src: Obj, dst: Obj) -> Mor {
        assert_eq!(src, self.src);
        assert_eq!(dst, self.dst);
        self.clone()
    }

    /// The first `(row, col, lhs, rhs)` at which two equally shaped matrices differ.
    pub fn first_difference(&self, o: &Mor) -> Option<(usize, usize, Scalar, Scalar)> {
        for c in 0..self.src.len() {
            if self.cols[c] != o.cols[c] {
                let mut rows: Vec<u32> = self.cols[c].iter().chain(o.cols[c].iter()).map(|e| e.0).collect();
                rows.sort_unstable();
                rows.dedup();
                for r in rows {
                    let (a, b) = (self.get(r as usize, c), o.get(r as usize, c));
                    if a != b {
                        return Some((r as usize, c, a, b));
                    }
                }
            }
        }
        None
    }

    /// True when every column has exactly one nonzero entry and rows are distinct.
    pub fn is_monomial(&self) -> bool {
        if self.src.len() != self.dst.len() {
            return false;
        }
        let mut seen = vec![false; self.dst.len()];
        for col in &self.cols {
            if col.len() != 1 || seen[col[0].0 as usize] {
                return false;
            }
            seen[col[0].0 as usize] = true;
        }
        true
    }

    /// Inverse through exact elimination.
    pub fn inverse(&self) -> Result<Mor> {
        if self.is_monomial() {
            let mut cols: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); self.dst.len()];
            for (c, col) in self.cols.iter().enumerate() {
                let (r, v) = &col[0];
                cols[*r as usize].push((c as u32, v.inv().ok_or(Error::DivisionByZero)?));
            }
            return Ok(Mor { src: self.dst.clone(), dst: self.src.clone(), field: self.field, cols });
        }
        crate::linalg::solve_right(&Mor::id(&self.src, self.field), self)
    }

    /// Submatrix on selected rows and columns (in the given orders).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mor {
        let mut rowmap = vec![u32::MAX; self.dst.len()];
        for (i, r) in rows.iter().enumerate() {
            rowmap[*r] = i as u32;
        }
        let src = Obj(cols.iter().map(|c| self.src.0[*c]).collect());
        let dst = Obj(rows.iter().map(|r| self.dst.0[*r]).collect());
        let mut out = Mor::zero(src, dst, self.field);
        for (j, c) in cols.iter().enumerate() {
            let mut col: Vec<(u32, Scalar)> = self.cols[*c]
                .iter()
                .filter(|(r, _)| rowmap[*r as usize] != u32::MAX)
                .map(|(r, v)| (rowmap[*r as usize], v.clone()))
                .collect();
            col.sort_by_key(|e| e.0);
            out.cols[j] = col;
        }
        out
    }

    /// Horizontal concatenation `[a | b | ...]` of morphisms with a common target.
    pub fn hcat(parts: &[Mor]) -> Mor {
        let dst = parts[0].dst.clone();
        let field = parts[0].field;
        let src = Obj(parts.iter().flat_map(|p| p.src.0.iter().copied()).collect());
        let mut cols = Vec::with_capacity(src.len());
        for p in parts {
            assert_eq!(p.dst, dst, "hcat: targets differ");
            cols.extend(p.cols.iter().cloned());
        }
        Mor { src, dst, field, cols }
    }

    /// Vertical concatenation of morphisms with a common source.
    pub fn vcat(parts: &[Mor]) -> Mor {
        let ts: Vec<Mor> = parts.iter().map(|p| p.transpose()).collect();
        Mor::hcat(&ts).transpose()
    }

    /// Composes a chain written left to right as `a ∘ b ∘ c ∘ ...`.
    pub fn chain(parts: &[&Mor]) -> Mor {
        let mut it = parts.iter().rev();
        let mut acc = (*it.next().expect("non-empty chain")).clone();
        for p in it {
            acc = p.comp(&acc);
        }
        acc
    }
}

/// Coordinate decomposition of an object: for each simple index the positions carrying it.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub obj: Obj,
    /// `positions[i]` lists the positions α of X with X[α] = i, in positional order.
    pub positions: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn multiplicity(&self, i: u32) -> usize {
        self.positions[i as usize].len()
    }

    /// p^{i,α}: X → V_i.
    pub fn p(&self, i: u32, alpha: usize, field: FieldSpec) -> Mor {
        let pos = self.positions[i as usize][alpha];
        Mor::from_entries_unchecked(self.obj.clone(), Obj::simple(i), field, [(0, pos, field.one())])
    }

    /// q^{i,α}: V_i → X.
    pub fn q(&self, i: u32, alpha: usize, field: FieldSpec) -> Mor {
        let pos = self.positions[i as usize][alpha];
        Mor::from_entries_unchecked(Obj::simple(i), self.obj.clone(), field, [(pos, 0, field.one())])
    }
}

/// A strict pointed category: Vec_G for a finite group G with optional bicharacter braiding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Category {
    pub field: FieldSpec,
    /// Cayley table, `table[i][j] = i·j`, with 0 the identity.
    pub table: Vec<Vec<u32>>,
    /// `dual[i] = i⁻¹`.
    pub dual: Vec<u32>,
    /// Bicharacter χ(i, j) giving the braiding, when present.
    pub chi: Option<Vec<Vec<Scalar>>>,
}

impl Category {
    /// Builds the category from a Cayley table. Inverses are derived from the table; a
    /// table without two-sided inverses is still accepted so that `check` can report it.
    pub fn new(field: FieldSpec, table: Vec<Vec<u32>>, chi: Option<Vec<Vec<Scalar>>>) -> Result<Category> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Invalid("empty Cayley table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x as usize >= n) {
                return Err(Error::Invalid("Cayley table is not square over 0..n".into()));
            }
        }
        if let Some(c) = &chi {
            if c.len() != n || c.iter().any(|r| r.len() != n) {
                return Err(Error::Invalid("bicharacter table has wrong shape".into()));
            }
            if c.iter().flatten().any(|s| s.field() != field) {
                return Err(Error::FieldMismatch);
            }
        }
        let dual = (0..n)
            .map(|i| (0..n).find(|&j| table[i][j] == 0).unwrap_or(0) as u32)
            .collect();
        Ok(Category { field, table, dual, chi })
    }

    /// The category Vec (one simple object).
    pub fn vec(field: FieldSpec) -> Category {
        Category::new(field, vec![vec![0]], Some(vec![vec![field.one()]])).unwrap()
    }

    /// Vec_{Z_n} with the trivial braiding.
    pub fn cyclic(field: FieldSpec, n: u32) -> Category {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let chi = vec![vec![field.one(); n as usize]; n as usize];
        Category::new(field, table, Some(chi)).unwrap()
    }

    /// Vec_{Z_n} with braiding χ(a, b) = ζ^{ab} for a chosen root of unity ζ.
    pub fn cyclic_braided(field: FieldSpec, n: u32, zeta: Scalar) -> Category {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let chi = (0..n)
            .map(|a| (0..n).map(|b| zeta.pow((a * b) as i64).unwrap()).collect())
            .collect();
        Category::new(field, table, Some(chi)).unwrap()
    }

    /// Vec_{S3}, unbraided. Elements are permutations of {0,1,2} in the order
    /// e, (01), (02), (12), (012), (021).
    pub fn s3(field: FieldSpec) -> Category {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap() as u32;
        let table = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| {
                        let (a, b) = (perms[i], perms[j]);
                        idx([a[b[0]], a[b[1]], a[b[2]]])
                    })
                    .collect()
            })
            .collect();
        Category::new(field, table, None).unwrap()
    }

    pub fn n(&self) -> usize {
        self.table.len()
    }

    pub fn one(&self) -> Scalar {
        self.field.one()
    }

    pub fn is_braided(&self) -> bool {
        self.chi.is_some()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize][b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.dual[a as usize]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.n() as u32;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn simples(&self) -> impl Iterator<Item = Obj> {
        (0..self.n() as u32).map(Obj::simple)
    }

    pub fn unit(&self) -> Obj {
        Obj::unit()
    }

    pub fn id(&self, x: &Obj) -> Mor {
        Mor::id(x, self.field)
    }

    pub fn zero(&self, x: &Obj, y: &Obj) -> Mor {
        Mor::zero(x.clone(), y.clone(), self.field)
    }

    pub fn tensor_obj(&self, x: &Obj, y: &Obj) -> Obj {
        let mut v = Vec::with_capacity(x.len() * y.len());
        for &a in &x.0 {
            for &b in &y.0 {
                v.push(self.mul(a, b));
            }
        }
        Obj(v)
    }

    pub fn tensor_objs(&self, xs: &[&Obj]) -> Obj {
        let mut acc = xs[0].clone();
        for x in &xs[1..] {
            acc = self.tensor_obj(&acc, x);
        }
        acc
    }

    /// Kronecker product with the lexicographic ordering of positions.
    pub fn tensor(&self, f: &Mor, g: &Mor) -> Mor {
        let src = self.tensor_obj(&f.src, &g.src);
        let dst = self.tensor_obj(&f.dst, &g.dst);
        let (gs, gd) = (g.src.len(), g.dst.len());
        let mut m = Mor::zero(src, dst, self.field);
        for a in 0..f.src.len() {
            for b in 0..gs {
                let col = &mut m.cols[a * gs + b];
                for (r, x) in f.col(a) {
                    for (s, y) in g.col(b) {
                        col.push((*r * gd as u32 + *s, x * y));
                    }
                }
            }
        }
        m
    }

    /// `f_1 ⊗ f_2 ⊗ ... ⊗ f_k`.
    pub fn tensors(&self, fs: &[&Mor]) -> Mor {
        let mut acc = fs[0].clone();
        for f in &fs[1..] {
            acc = self.tensor(&acc, f);
        }
        acc
    }

    /// Left dual *X (equal to the right dual X∨): reversed sequence of inverses.
    pub fn dual_obj(&self, x: &Obj) -> Obj {
        Obj(x.0.iter().rev().map(|&a| self.inv(a)).collect())
    }

    /// ev_X: *X ⊗ X → 1.
    pub fn ev(&self, x: &Obj) -> Mor {
        let n = x.len();
        let src = self.tensor_obj(&self.dual_obj(x), x);
        Mor::from_entries_unchecked(src, Obj::unit(), self.field, (0..n).map(|a| (0, a * n + (n - 1 - a), self.one())))
    }

    /// coev_X: 1 → X ⊗ *X.
    pub fn coev(&self, x: &Obj) -> Mor {
        let n = x.len();
        let dst = self.tensor_obj(x, &self.dual_obj(x));
        Mor::from_entries_unchecked(Obj::unit(), dst, self.field, (0..n).map(|b| (b * n + (n - 1 - b), 0, self.one())))
    }

    /// Right evaluation ẽv_X: X ⊗ X∨ → 1.
    pub fn ev_r(&self, x: &Obj) -> Mor {
        let n = x.len();
        let src = self.tensor_obj(x, &self.dual_obj(x));
        Mor::from_entries_unchecked(src, Obj::unit(), self.field, (0..n).map(|b| (0, b * n + (n - 1 - b), self.one())))
    }

    /// Right coevaluation c̃oev_X: 1 → X∨ ⊗ X.
    pub fn coev_r(&self, x: &Obj) -> Mor {
        let n = x.len();
        let dst = self.tensor_obj(&self.dual_obj(x), x);
        Mor::from_entries_unchecked(Obj::unit(), dst, self.field, (0..n).map(|a| (a * n + (n - 1 - a), 0, self.one())))
    }

    /// The dual morphism *f = f∨: *Y → *X of f: X → Y (left and right duals coincide).
    pub fn dual_mor(&self, f: &Mor) -> Mor {
        let (nx, ny) = (f.src.len(), f.dst.len());
        let entries: Vec<(usize, usize, Scalar)> = f
            .entries()
            .map(|(r, c, v)| (nx - 1 - c, ny - 1 - r, v.clone()))
            .collect();
        Mor::from_entries_unchecked(self.dual_obj(&f.dst), self.dual_obj(&f.src), self.field, entries)
    }

    /// The canonical isomorphism *B ⊗ *A → *(A ⊗ B), characterized by
    /// ev_{A⊗B}(iso ⊗ id) = ev_B(id ⊗ ev_A ⊗ id).
    pub fn dual_tensor_iso(&self, a: &Obj, b: &Obj) -> Mor {
        let ab = self.tensor_obj(a, b);
        let (da, db) = (self.dual_obj(a), self.dual_obj(b));
        let dab = self.dual_obj(&ab);
        let inner = self.tensors(&[&self.id(&db), &self.ev(a), &self.id(b)]);
        let contract = self.ev(b).comp(&inner);
        let lhs = self.tensor(&contract, &self.id(&dab));
        let coev = self.tensor(&self.id(&self.tensor_obj(&db, &da)), &self.coev(&ab));
        lhs.comp(&coev)
    }

    /// The canonical isomorphism B∨ ⊗ A∨ → (A ⊗ B)∨ for right duals, characterized by
    /// ẽv_{A⊗B}(id ⊗ iso) = ẽv_A(id ⊗ ẽv_B ⊗ id).
    pub fn dual_tensor_iso_r(&self, a: &Obj, b: &Obj) -> Mor {
        let ab = self.tensor_obj(a, b);
        let (da, db) = (self.dual_obj(a), self.dual_obj(b));
        let dab = self.dual_obj(&ab);
        let inner = self.tensors(&[&self.id(a), &self.ev_r(b), &self.id(&da)]);
        let contract = self.ev_r(a).comp(&inner);
        let rhs = self.tensor(&self.id(&dab), &contract);
        let coev = self.tensor(&self.coev_r(&ab), &self.id(&self.tensor_obj(&db, &da)));
        rhs.comp(&coev)
    }

    fn chi(&self, a: u32, b: u32) -> Result<&Scalar> {
        Ok(&self.chi.as_ref().ok_or(Error::NotBraided)?[a as usize][b as usize])
    }

    /// τ_{X,Y}: X ⊗ Y → Y ⊗ X (or τ⁻¹_{Y,X}: X ⊗ Y → Y ⊗ X when `inverse`).
    pub fn braid(&self, x: &Obj, y: &Obj, inverse: bool) -> Result<Mor> {
        let (nx, ny) = (x.len(), y.len());
        let mut entries = Vec::with_capacity(nx * ny);
        for a in 0..nx {
            for b in 0..ny {
                let v = if inverse {
                    self.chi(y.0[b], x.0[a])?.inv().ok_or(Error::DivisionByZero)?
                } else {
                    self.chi(x.0[a], y.0[b])?.clone()
                };
                entries.push((b * nx + a, a * ny + b, v));
            }
        }
        Ok(Mor::from_entries_unchecked(self.tensor_obj(x, y), self.tensor_obj(y, x), self.field, entries))
    }

    /// τ_{X,Y}; panics when the category is not braided.
    pub fn tau(&self, x: &Obj, y: &Obj) -> Mor {
        self.braid(x, y, false).expect("braided category")
    }

    /// τ⁻¹_{Y,X}: X ⊗ Y → Y ⊗ X.
    pub fn tau_inv(&self, x: &Obj, y: &Obj) -> Mor {
        self.braid(x, y, true).expect("braided category")
    }

    /// The plain swap X ⊗ Y → Y ⊗ X with unit scalars (valid in any pointed category only
    /// between gradings that commute; used for reindexing).
    pub fn swap(&self, x: &Obj, y: &Obj) -> Mor {
        let (nx, ny) = (x.len(), y.len());
        let mut entries = Vec::with_capacity(nx * ny);
        for a in 0..nx {
            for b in 0..ny {
                entries.push((b * nx + a, a * ny + b, self.one()));
            }
        }
        Mor::from_entries(self.tensor_obj(x, y), self.tensor_obj(y, x), self.field, entries)
            .expect("swap of commuting gradings")
    }

    pub fn decompose(&self, x: &Obj) -> Decomposition {
        let mut positions = vec![Vec::new(); self.n()];
        for (a, &s) in x.0.iter().enumerate() {
            positions[s as usize].push(a);
        }
        Decomposition { obj: x.clone(), positions }
    }

    pub fn random_obj<R: Rng>(&self, rng: &mut R, max_len: usize) -> Obj {
        let len = rng.gen_range(1..=max_len);
        Obj((0..len).map(|_| rng.gen_range(0..self.n() as u32)).collect())
    }

    /// A random graded morphism with small integer entries.
    pub fn random_mor<R: Rng>(&self, rng: &mut R, x: &Obj, y: &Obj) -> Mor {
        let mut entries = Vec::new();
        for c in 0..x.len() {
            for r in 0..y.len() {
                if x.0[c] == y.0[r] && rng.gen_bool(0.7) {
                    entries.push((r, c, self.field.int(rng.gen_range(-3..=3))));
                }
            }
        }
        Mor::from_entries_unchecked(x.clone(), y.clone(), self.field, entries)
    }

    /// All objects of length `len` (used for exhaustive small checks).
    pub fn objects_of_len(&self, len: usize) -> Vec<Obj> {
        let n = self.n() as u32;
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    (0..n).map(move |s| {
                        let mut w = v.clone();
                        w.push(s);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(Obj).collect()
    }

    /// Axiom suite for the category data: group law, duals, zig-zags, and braiding.
    pub fn check(&self) -> Report {
        check_category(self, 2, 24, 0x5eed)
    }
}

/// Checks group-law associativity and unit, dual involutivity, the zig-zag identities
/// exhaustively on objects up to `depth` and on `samples` random longer objects, and,
/// when a braiding is present, the bicharacter laws and matrix-level hexagons.
pub fn check_category(cat: &Category, depth: usize, samples: usize, seed: u64) -> Report {
    use rand::SeedableRng;
    let mut rep = Report::new("check_category");
    rep.cover("check_category");
    let n = cat.n() as u32;

    let mut assoc = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let l = cat.mul(cat.mul(i, j), k);
                let r = cat.mul(i, cat.mul(j, k));
                if l != r {
                    assoc = Some(format!("({i}{j}){k} = {l} but {i}({j}{k}) = {r}"));
                    break 'outer;
                }
            }
        }
    }
    rep.push("tensor_associativity", format!("{n}^3 triples"), assoc.is_none(), assoc.clone());

    let unit_bad = (0..n).find(|&i| cat.mul(0, i) != i || cat.mul(i, 0) != i);
    rep.push("tensor_unit", "all simples", unit_bad.is_none(), unit_bad.map(|i| format!("simple {i}")));

    let dual_bad = (0..n).find(|&i| {
        let d = cat.inv(i);
        cat.inv(d) != i || cat.mul(i, d) != 0 || cat.mul(d, i) != 0
    });
    rep.push("dual_involutive", "all simples", dual_bad.is_none(), dual_bad.map(|i| format!("simple {i}")));
    if assoc.is_some() || unit_bad.is_some() || dual_bad.is_some() {
        return rep;
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut objs: Vec<Obj> = (1..=depth).flat_map(|l| cat.objects_of_len(l)).collect();
    for _ in 0..samples {
        objs.push(cat.random_obj(&mut rng, 4));
    }
    let zigzag = |x: &Obj| -> Option<String> {
        let dx = cat.dual_obj(x);
        let l1 = Mor::chain(&[
            &cat.tensor(&cat.id(x), &cat.ev(x)),
            &cat.tensor(&cat.coev(x), &cat.id(x)),
        ]);
        let l2 = Mor::chain(&[
            &cat.tensor(&cat.ev(x), &cat.id(&dx)),
            &cat.tensor(&cat.id(&dx), &cat.coev(x)),
        ]);
        let r1 = Mor::chain(&[
            &cat.tensor(&cat.ev_r(x), &cat.id(x)),
            &cat.tensor(&cat.id(x), &cat.coev_r(x)),
        ]);
        let r2 = Mor::chain(&[
            &cat.tensor(&cat.id(&dx), &cat.ev_r(x)),
            &cat.tensor(&cat.coev_r(x), &cat.id(&dx)),
        ]);
        crate::report::mismatch(&l1, &cat.id(x))
            .or_else(|| crate::report::mismatch(&l2, &cat.id(&dx)))
            .or_else(|| crate::report::mismatch(&r1, &cat.id(x)))
            .or_else(|| crate::report::mismatch(&r2, &cat.id(&dx)))
    };
    rep.check_all("zigzag", objs.iter().map(|x| (format!("{x:?}"), zigzag(x))));
    rep.cover("duality_data");

    let decomposition = |x: &Obj| -> Option<String> {
        let d = cat.decompose(x);
        let f = cat.field;
        let mut sum = cat.zero(x, x);
        for i in 0..n {
            for a in 0..d.multiplicity(i) {
                sum = sum.add(&d.q(i, a, f).comp(&d.p(i, a, f)));
                for b in 0..d.multiplicity(i) {
                    let want = if a == b { cat.id(&Obj::simple(i)) } else { cat.zero(&Obj::simple(i), &Obj::simple(i)) };
                    if let Some(m) = crate::report::mismatch(&d.p(i, a, f).comp(&d.q(i, b, f)), &want) {
                        return Some(format!("p^{i},{a} q^{i},{b}: {m}"));
                    }
                }
            }
        }
        crate::report::mismatch(&sum, &cat.id(x))
    };
    rep.check_all("decomposition", objs.iter().map(|x| (format!("{x:?}"), decomposition(x))));
    rep.cover("decompose");

    // interchange (f⊗g)(f'⊗g') = ff'⊗gg' and associativity of composition and tensor
    let mut cases = Vec::new();
    for _ in 0..samples.max(1) {
        let o: Vec<Obj> = (0..6).map(|_| cat.random_obj(&mut rng, 3)).collect();
        let (f1, f2) = (cat.random_mor(&mut rng, &o[0], &o[1]), cat.random_mor(&mut rng, &o[1], &o[2]));
        let (g1, g2) = (cat.random_mor(&mut rng, &o[3], &o[4]), cat.random_mor(&mut rng, &o[4], &o[5]));
        let h = cat.random_mor(&mut rng, &o[2], &o[0]);
        let m = crate::report::mismatch(&cat.tensor(&f2, &g2).comp(&cat.tensor(&f1, &g1)), &cat.tensor(&f2.comp(&f1), &g2.comp(&g1)))
            .or_else(|| crate::report::mismatch(&h.comp(&f2).comp(&f1), &h.comp(&f2.comp(&f1))))
            .or_else(|| {
                crate::report::mismatch(&cat.tensor(&cat.tensor(&f1, &g1), &h), &cat.tensor(&f1, &cat.tensor(&g1, &h)))
            });
        cases.push((format!("{:?}", o), m));
    }
    rep.check_all("tensor_bifunctor", cases);
    rep.cover("tensor");
    rep.cover("compose");

    // field axioms and the text round trip on random scalars of the base field
    let mut cases = Vec::new();
    let field = cat.field;
    for _ in 0..samples.max(1) {
        let mut draw = || {
            let num = field.int(rng.gen_range(-40..=40));
            let den = field.int(rng.gen_range(1..=12));
            &num * &den.inv().unwrap_or_else(|| field.one())
        };
        let (a, b, c) = (draw(), draw(), draw());
        let mut bad = None;
        if &(&a * &b) * &c != &a * &(&b * &c) || &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
            bad = Some(format!("associativity or distributivity at {a}, {b}, {c}"));
        }
        if let Some(ai) = a.inv() {
            if !(&a * &ai).is_one() {
                bad = Some(format!("{a}·{a}⁻¹ ≠ 1"));
            }
        }
        match crate::scalars::Scalar::parse(&a.render(), field) {
            Ok(back) if back == a => {}
            _ => bad = Some(format!("render/parse round trip fails at {a}")),
        }
        cases.push((format!("{a}, {b}, {c}"), bad));
    }
    rep.check_all("field_axioms", cases);
    rep.cover("scalar_arith");
    rep.cover("scalar_parse");

    if let Some(chi) = &cat.chi {
        let abelian = cat.is_abelian();
        rep.push("braided_requires_abelian", "group", abelian, Some("group is not abelian".into()));
        let mut bad = None;
        'b: for a in 0..n {
            for b in 0..n {
                if chi[a as usize][b as usize].is_zero() {
                    bad = Some(format!("chi({a},{b}) = 0"));
                    break 'b;
                }
                for c in 0..n {
                    let l = &chi[cat.mul(a, b) as usize][c as usize];
                    let r = &chi[a as usize][c as usize] * &chi[b as usize][c as usize];
                    if *l != r {
                        bad = Some(format!("chi({a}{b},{c}) != chi({a},{c})chi({b},{c})"));
                        break 'b;
                    }
                    let l = &chi[a as usize][cat.mul(b, c) as usize];
                    let r = &chi[a as usize][b as usize] * &chi[a as usize][c as usize];
                    if *l != r {
                        bad = Some(format!("chi({a},{b}{c}) != chi({a},{b})chi({a},{c})"));
                        break 'b;
                    }
                }
            }
        }
        rep.push("hexagon", "bicharacter laws", bad.is_none(), bad);
        rep.cover("braid");
        if abelian && rep.passed() {
            let hex = |x: &Obj, y: &Obj, z: &Obj| -> Option<String> {
                let xy = cat.tensor_obj(x, y);
                let yz = cat.tensor_obj(y, z);
                let l = cat.tau(&xy, z);
                let r = Mor::chain(&[
                    &cat.tensor(&cat.tau(x, z), &cat.id(y)),
                    &cat.tensor(&cat.id(x), &cat.tau(y, z)),
                ]);
                let l2 = cat.tau(x, &yz);
                let r2 = Mor::chain(&[
                    &cat.tensor(&cat.id(y), &cat.tau(x, z)),
                    &cat.tensor(&cat.tau(x, y), &cat.id(z)),
                ]);
                let inv = Mor::chain(&[&cat.tau_inv(y, x), &cat.tau(x, y)]);
                crate::report::mismatch(&l, &r)
                    .or_else(|| crate::report::mismatch(&l2, &r2))
                    .or_else(|| crate::report::mismatch(&inv, &cat.id(&xy)))
            };
            let mut cases = Vec::new();
            for _ in 0..samples.max(1) {
                let (x, y, z) = (cat.random_obj(&mut rng, 3), cat.random_obj(&mut rng, 3), cat.random_obj(&mut rng, 2));
                cases.push((format!("{x:?},{y:?},{z:?}"), hex(&x, &y, &z)));
            }
            rep.check_all("hexagon_matrices", cases);
            let natural = |x: &Obj, y: &Obj, rng: &mut rand_chacha::ChaCha8Rng| -> Option<String> {
                let x2 = cat.random_obj(rng, 3);
                let f = cat.random_mor(rng, x, &x2);
                let l = cat.tau(&x2, y).comp(&cat.tensor(&f, &cat.id(y)));
                let r = cat.tensor(&cat.id(y), &f).comp(&cat.tau(x, y));
                crate::report::mismatch(&l, &r)
            };
            let mut cases = Vec::new();
            for _ in 0..samples.max(1) {
                let (x, y) = (cat.random_obj(&mut rng, 3), cat.random_obj(&mut rng, 3));
                let m = natural(&x, &y, &mut rng);
                cases.push((format!("{x:?},{y:?}"), m));
            }
            rep.check_all("braiding_naturality", cases);
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn lex_tensor_convention() {
        let c = Category::s3(q());
        let (a, b, x) = (1, 4, 2);
        let t = c.tensor_obj(&Obj(vec![a, b]), &Obj(vec![x]));
        assert_eq!(t, Obj(vec![c.mul(a, x), c.mul(b, x)]));
        let z2 = Category::cyclic(q(), 2);
        assert_eq!(z2.tensor_obj(&Obj::simple(1), &Obj::simple(1)), Obj::unit());
    }

    #[test]
    fn shipped_instances_pass() {
        for c in [
            Category::vec(q()),
            Category::cyclic(q(), 2),
            Category::cyclic_braided(q(), 2, q().int(-1)),
            Category::cyclic(q(), 3),
            Category::s3(q()),
        ] {
            let r = c.check();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn corrupted_instances_fail() {
        let mut c = Category::s3(q());
        c.table[1][2] = 3;
        let r = c.check();
        assert!(!r.passed());
        assert!(r.failures().any(|f| f.id == "tensor_associativity"));
        let mut b = Category::cyclic(q(), 2);
        b.chi = Some(vec![vec![q().one(), q().one()], vec![q().one(), q().int(2)]]);
        let r = b.check();
        assert!(r.failures().any(|f| f.id == "hexagon"), "{r}");
    }

    #[test]
    fn sign_braiding_on_generator() {
        let c = Category::cyclic_braided(q(), 2, q().int(-1));
        let g = Obj::simple(1);
        let t = c.tau(&g, &g);
        assert_eq!(t.get(0, 0), q().int(-1));
        let triv = Category::cyclic(q(), 2);
        assert_eq!(triv.tau(&g, &g), triv.swap(&g, &g));
    }

    #[test]
    fn dual_mor_matches_ev_coev_formula() {
        let c = Category::s3(q());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x = c.random_obj(&mut rng, 4);
            let y = c.random_obj(&mut rng, 4);
            let f = c.random_mor(&mut rng, &x, &y);
            let (dx, dy) = (c.dual_obj(&x), c.dual_obj(&y));
            let left = Mor::chain(&[
                &c.tensor(&c.ev(&y), &c.id(&dx)),
                &c.tensors(&[&c.id(&dy), &f, &c.id(&dx)]),
                &c.tensor(&c.id(&dy), &c.coev(&x)),
            ]);
            assert_eq!(left, c.dual_mor(&f));
            let right = Mor::chain(&[
                &c.tensor(&c.id(&dx), &c.ev_r(&y)),
                &c.tensors(&[&c.id(&dx), &f, &c.id(&dy)]),
                &c.tensor(&c.coev_r(&x), &c.id(&dy)),
            ]);
            assert_eq!(right, c.dual_mor(&f));
        }
    }

    #[test]
    fn dual_tensor_iso_is_invertible_permutation() {
        let c = Category::s3(q());
        let (a, b) = (Obj(vec![1, 2]), Obj(vec![4, 0, 3]));
        let iso = c.dual_tensor_iso(&a, &b);
        assert!(iso.is_monomial());
        let ab = c.tensor_obj(&a, &b);
        let lhs = c.ev(&ab).comp(&c.tensor(&iso, &c.id(&ab)));
        let rhs = c.ev(&b).comp(&c.tensors(&[&c.id(&c.dual_obj(&b)), &c.ev(&a), &c.id(&b)]));
        assert_eq!(lhs, rhs);
        let iso_r = c.dual_tensor_iso_r(&a, &b);
        let lhs = c.ev_r(&ab).comp(&c.tensor(&c.id(&ab), &iso_r));
        let rhs = c.ev_r(&a).comp(&c.tensors(&[&c.id(&a), &c.ev_r(&b), &c.id(&c.dual_obj(&a))]));
        assert_eq!(lhs, rhs);
        // the pivotal structure is strict, so left and right isomorphisms agree
        assert_eq!(iso, iso_r);
    }

    #[test]
    fn decomposition_identities() {
        let c = Category::s3(q());
        let x = Obj(vec![1, 1, 3, 0, 1]);
        let d = c.decompose(&x);
        assert_eq!(d.multiplicity(1), 3);
        let mut sum = c.zero(&x, &x);
        for i in 0..6u32 {
            for a in 0..d.multiplicity(i) {
                sum = sum.add(&d.q(i, a, q()).comp(&d.p(i, a, q())));
                for j in 0..6u32 {
                    for b in 0..d.multiplicity(j) {
                        let pq = d.p(i, a, q()).comp(&d.q(j, b, q()));
                        if i == j && a == b {
                            assert_eq!(pq, c.id(&Obj::simple(i)));
                        } else {
                            assert!(pq.is_zero());
                        }
                    }
                }
            }
        }
        assert_eq!(sum, c.id(&x));
        let u = c.decompose(&Obj::unit());
        assert_eq!(u.p(0, 0, q()), c.id(&Obj::unit()));
    }

    #[test]
    fn grading_is_enforced() {
        let x = Obj(vec![0, 1]);
        assert!(Mor::from_entries(x.clone(), x.clone(), q(), [(0, 1, q().one())]).is_err());
        assert!(Mor::from_entries(x.clone(), x, q(), [(1, 1, q().one())]).is_ok());
    }
}
