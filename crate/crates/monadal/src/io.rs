//! JSON formats for categories, morphisms, Hopf algebras and Hopf monads, with loaders that
//! validate what they read and dumps whose output is byte-stable.
//!
//! Scalars are written as text in the scalar grammar: `int` or `int/int` over Q, `int` over F_p.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::hopfalg::{check_hopf_algebra, HopfAlgebra};
use crate::hopfmonad::{check_hopf_monad, simple_tuples, Functor, HopfMonad, NatTrans, Sampling, Words};
use crate::scalars::{FieldSpec, Scalar};
use crate::semicat::{check_category, Category, Mor, Obj};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Vec,
    VecG,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryJson {
    pub field: String,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cayley: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bicharacter: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorJson {
    pub src: Vec<u32>,
    pub dst: Vec<u32>,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfAlgebraJson {
    pub name: String,
    pub carrier: Vec<u32>,
    pub m: MorJson,
    pub u: MorJson,
    pub delta: MorJson,
    pub eps: MorJson,
    pub s: MorJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_inv: Option<MorJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub tuple: Vec<u32>,
    pub mor: MorJson,
}

/// A natural transformation stored at simple tuples in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatJson {
    pub name: String,
    pub src: String,
    pub dst: String,
    pub components: Vec<ComponentJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfMonadJson {
    pub name: String,
    pub on_simple: Vec<Vec<u32>>,
    pub mu: Vec<ComponentJson>,
    pub eta: Vec<ComponentJson>,
    pub t2: Vec<ComponentJson>,
    pub t0: MorJson,
    pub sl: Vec<ComponentJson>,
    pub sr: Vec<ComponentJson>,
}

fn parse_err(what: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!("{what}: line {}, column {}: {e}", e.line(), e.column()))
}

pub fn category_to_json(c: &Category) -> CategoryJson {
    let bicharacter = c.chi.as_ref().map(|chi| chi.iter().map(|r| r.iter().map(|s| s.render()).collect()).collect());
    if c.n() == 1 {
        return CategoryJson { field: c.field.render(), kind: Kind::Vec, cayley: None, bicharacter };
    }
    CategoryJson { field: c.field.render(), kind: Kind::VecG, cayley: Some(c.table.clone()), bicharacter }
}

/// Vec is braided by the trivial bicharacter unless one is given.
pub fn category_from_json(j: &CategoryJson) -> Result<Category> {
    let field = FieldSpec::parse(&j.field)?;
    let chi = j
        .bicharacter
        .as_ref()
        .map(|rows| {
            rows.iter()
                .enumerate()
                .map(|(a, r)| {
                    r.iter()
                        .enumerate()
                        .map(|(b, t)| {
                            Scalar::parse(t, field).map_err(|e| Error::Parse(format!("bicharacter[{a}][{b}]: {e}")))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    match j.kind {
        Kind::Vec => {
            if j.cayley.as_ref().is_some_and(|t| t.len() != 1) {
                return Err(Error::Parse("kind vec takes no Cayley table beyond [[0]]".into()));
            }
            let chi = chi.or_else(|| Some(vec![vec![field.one()]]));
            Category::new(field, vec![vec![0]], chi)
        }
        Kind::VecG => {
            let table = j.cayley.clone().ok_or_else(|| Error::Parse("kind vec_g needs a cayley table".into()))?;
            Category::new(field, table, chi)
        }
    }
}

pub fn mor_to_json(f: &Mor) -> MorJson {
    MorJson {
        src: f.src.0.clone(),
        dst: f.dst.0.clone(),
        entries: f.entries_row_major().into_iter().map(|(r, c, v)| (r, c, v.render())).collect(),
    }
}

pub fn mor_from_json(j: &MorJson, field: FieldSpec) -> Result<Mor> {
    let entries = j
        .entries
        .iter()
        .map(|(r, c, t)| Ok((*r, *c, Scalar::parse(t, field).map_err(|e| Error::Parse(format!("entry ({r},{c}): {e}")))?)))
        .collect::<Result<Vec<_>>>()?;
    Mor::from_entries(Obj(j.src.clone()), Obj(j.dst.clone()), field, entries)
}

pub fn hopf_to_json(h: &HopfAlgebra) -> HopfAlgebraJson {
    HopfAlgebraJson {
        name: h.name.clone(),
        carrier: h.a.0.clone(),
        m: mor_to_json(&h.m),
        u: mor_to_json(&h.u),
        delta: mor_to_json(&h.delta),
        eps: mor_to_json(&h.eps),
        s: mor_to_json(&h.s),
        s_inv: Some(mor_to_json(&h.s_inv)),
    }
}

/// Assembles a Hopf algebra without running the axiom suite. A supplied `s_inv` must be the
/// inverse of `s`.
pub fn hopf_from_json(j: &HopfAlgebraJson, c: &Category) -> Result<HopfAlgebra> {
    let f = c.field;
    let mor = |m: &MorJson, what: &str| mor_from_json(m, f).map_err(|e| Error::Parse(format!("{what}: {e}")));
    let h = HopfAlgebra::new(
        &j.name,
        c,
        Obj(j.carrier.clone()),
        mor(&j.m, "m")?,
        mor(&j.u, "u")?,
        mor(&j.delta, "delta")?,
        mor(&j.eps, "eps")?,
        mor(&j.s, "s")?,
    )?;
    if let Some(si) = &j.s_inv {
        if mor(si, "s_inv")? != h.s_inv {
            return Err(Error::Invalid("s_inv is not the inverse of s".into()));
        }
    }
    Ok(h)
}

pub fn nat_to_json(n: &NatTrans) -> Vec<ComponentJson> {
    simple_tuples(n.cat.n(), n.arity)
        .into_iter()
        .map(|t| ComponentJson { mor: mor_to_json(n.at_simple(&t)), tuple: t })
        .collect()
}

pub fn nat_dump(n: &NatTrans) -> NatJson {
    NatJson { name: n.name.clone(), src: n.src.to_string(), dst: n.dst.to_string(), components: nat_to_json(n) }
}

fn table_from_json(comps: &[ComponentJson], c: &Category, arity: usize, what: &str) -> Result<Vec<Mor>> {
    let tuples = simple_tuples(c.n(), arity);
    if comps.len() != tuples.len() {
        return Err(Error::Parse(format!("{what}: expected {} components, found {}", tuples.len(), comps.len())));
    }
    tuples
        .iter()
        .zip(comps)
        .map(|(t, comp)| {
            if &comp.tuple != t {
                return Err(Error::Parse(format!("{what}: component {:?} out of order, expected {t:?}", comp.tuple)));
            }
            mor_from_json(&comp.mor, c.field).map_err(|e| Error::Parse(format!("{what} at {t:?}: {e}")))
        })
        .collect()
}

pub fn monad_to_json(h: &HopfMonad) -> HopfMonadJson {
    HopfMonadJson {
        name: h.name.clone(),
        on_simple: h.t.on_simple.iter().map(|o| o.0.clone()).collect(),
        mu: nat_to_json(&h.mu),
        eta: nat_to_json(&h.eta),
        t2: nat_to_json(&h.t2),
        t0: mor_to_json(&h.t0),
        sl: nat_to_json(&h.sl),
        sr: nat_to_json(&h.sr),
    }
}

/// Assembles a Hopf monad without running the axiom suite.
pub fn monad_from_json(j: &HopfMonadJson, c: &Category) -> Result<HopfMonad> {
    if j.on_simple.len() != c.n() {
        return Err(Error::Parse(format!("on_simple: expected {} entries", c.n())));
    }
    let t = Arc::new(Functor::new(&j.name, j.on_simple.iter().map(|v| Obj(v.clone())).collect()));
    let nat = |comps: &[ComponentJson], name: &str, (s, d), arity| -> Result<NatTrans> {
        NatTrans::from_table(c, name, s, d, arity, table_from_json(comps, c, arity, name)?)
    };
    let antipode = Words::antipode(&t);
    Ok(HopfMonad {
        name: j.name.clone(),
        cat: c.clone(),
        mu: nat(&j.mu, "mu", Words::mu(&t), 1)?,
        eta: nat(&j.eta, "eta", Words::eta(&t), 1)?,
        t2: nat(&j.t2, "T2", Words::t2(&t), 2)?,
        t0: mor_from_json(&j.t0, c.field).map_err(|e| Error::Parse(format!("t0: {e}")))?,
        sl: nat(&j.sl, "sl", antipode.clone(), 1)?,
        sr: nat(&j.sr, "sr", antipode, 1)?,
        t,
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Reads and validates a category; a failing check is returned as `Error::Validation`.
pub fn load_category(path: &Path) -> Result<Category> {
    let j: CategoryJson = serde_json::from_str(&read(path)?).map_err(|e| parse_err(&path.display().to_string(), e))?;
    let c = category_from_json(&j)?;
    check_category(&c, 2, 24, 0x5eed).into_result()?;
    Ok(c)
}

/// Reads a Hopf algebra over `c` and runs its axiom suite.
pub fn load_hopf_algebra(path: &Path, c: &Category) -> Result<HopfAlgebra> {
    let j: HopfAlgebraJson = serde_json::from_str(&read(path)?).map_err(|e| parse_err(&path.display().to_string(), e))?;
    let h = hopf_from_json(&j, c)?;
    check_hopf_algebra(&h).into_result()?;
    Ok(h)
}

/// Reads a Hopf monad over `c` and runs its axiom suite with `opts`.
pub fn load_hopf_monad(path: &Path, c: &Category, opts: &Sampling) -> Result<HopfMonad> {
    let j: HopfMonadJson = serde_json::from_str(&read(path)?).map_err(|e| parse_err(&path.display().to_string(), e))?;
    let h = monad_from_json(&j, c)?;
    check_hopf_monad(&h, opts).into_result()?;
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfmonad::{hopf_monad_from_algebra, Side};

    #[test]
    fn round_trips() {
        let q = FieldSpec::Rationals;
        let sign = Category::cyclic_braided(q, 2, q.int(-1));
        let back = category_from_json(&category_to_json(&sign)).unwrap();
        assert_eq!(back.table, sign.table);
        assert_eq!(back.chi, sign.chi);
        let vec = Category::vec(q);
        let h = HopfAlgebra::sweedler(&vec).unwrap();
        let j = hopf_to_json(&h);
        let text = to_json_string(&j);
        let h2 = hopf_from_json(&serde_json::from_str(&text).unwrap(), &vec).unwrap();
        assert_eq!((h2.m, h2.delta, h2.s), (h.m.clone(), h.delta.clone(), h.s.clone()));
        let t = hopf_monad_from_algebra(&h, Side::Right).unwrap();
        let t2 = monad_from_json(&monad_to_json(&t), &vec).unwrap();
        assert_eq!(monad_to_json(&t2), monad_to_json(&t));
    }

    #[test]
    fn parse_errors_name_the_field() {
        let q = FieldSpec::Rationals;
        let j = MorJson { src: vec![0], dst: vec![0], entries: vec![(0, 0, "1/0".into())] };
        let err = mor_from_json(&j, q).unwrap_err().to_string();
        assert!(err.contains("entry (0,0)"), "{err}");
        let bad: std::result::Result<CategoryJson, _> = serde_json::from_str("{\"field\": \"Q\",\n \"kind\": \"vec_h\"}");
        let e = parse_err("x.json", bad.unwrap_err()).to_string();
        assert!(e.contains("line 2"), "{e}");
    }
}
