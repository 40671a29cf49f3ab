//! Named pipelines: each returns a report and the structure-constant dumps it produced.

use std::path::Path;

use serde_json::{json, Value};

use monadal::braided_double::{check_coend, coend, consistency_double, double_algebra};
use monadal::centralizer::{
    canonical_law, centralize, check_centralizer, check_double, coend_of_center, double, Centralizer, CoendHopf,
};
use monadal::hopfalg::{check_hopf_algebra, check_module, classical_dual_cop, op_cop, HopfAlgebra, ModuleObj, OpCop};
use monadal::hopfmonad::{check_hopf_monad, hopf_monad_from_algebra, HopfMonad, Sampling, Side};
use monadal::io::{hopf_to_json, monad_to_json, mor_to_json, nat_dump, to_json_string};
use monadal::semicat::check_category;
use monadal::{Category, Obj, Report, Result};

/// A file written next to the report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dump {
    pub name: String,
    pub contents: String,
}

impl Dump {
    pub fn json(name: impl Into<String>, v: &Value) -> Dump {
        Dump { name: name.into(), contents: to_json_string(v) }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub report: Report,
    pub dumps: Vec<Dump>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Text => r.render_text(),
        Format::Json => {
            let mut s = r.to_json();
            s.push('\n');
            s
        }
    }
}

/// Writes the report as `report.txt` or `report.json` and every dump into `dir`.
pub fn write_outcome(o: &Outcome, dir: &Path, format: Format) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let name = match format {
        Format::Text => "report.txt",
        Format::Json => "report.json",
    };
    std::fs::write(dir.join(name), emit_report(&o.report, format))?;
    for d in &o.dumps {
        std::fs::write(dir.join(&d.name), &d.contents)?;
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn run_check_category(c: &Category, opts: &Sampling) -> Outcome {
    Outcome { report: check_category(c, 2, opts.samples, opts.seed), dumps: Vec::new() }
}

/// The Hopf suite of H, of its opposite and co-opposite variants, of the classical dual over
/// Vec, and the module axioms on the regular, trivial and induced modules.
pub fn run_check_hopf_algebra(h: &HopfAlgebra) -> Outcome {
    let mut r = Report::new("check-hopf-algebra");
    r.merge(check_hopf_algebra(h));
    for (name, which) in [("op", OpCop::Op), ("cop", OpCop::Cop), ("cop_op", OpCop::CopOp)] {
        let mut sub = check_hopf_algebra(&op_cop(h, which));
        sub.pipeline = name.into();
        sub.cover("op_cop");
        r.merge(sub);
    }
    if h.cat.n() == 1 {
        match classical_dual_cop(h) {
            Ok(d) => {
                let mut sub = check_hopf_algebra(&d);
                sub.pipeline = "classical_dual_cop".into();
                sub.cover("classical_dual_cop");
                r.merge(sub);
            }
            Err(e) => r.fail("classical_dual_cop", &h.name, e.to_string()),
        }
    }
    for side in [Side::Left, Side::Right] {
        r.merge(check_module(h, &ModuleObj::free(h, side)));
        r.merge(check_module(h, &ModuleObj::trivial(h, side)));
        r.merge(check_module(h, &ModuleObj::induced(h, &Obj::simple(h.cat.n() as u32 - 1), side)));
    }
    Outcome { report: r, dumps: Vec::new() }
}

pub fn run_check_hopf_monad(t: &HopfMonad, opts: &Sampling) -> Outcome {
    Outcome { report: check_hopf_monad(t, opts), dumps: Vec::new() }
}

/// ? ⊗ H as a Hopf monad, recording the operation.
pub fn monad_of_algebra(h: &HopfAlgebra, rep: &mut Report) -> Result<HopfMonad> {
    rep.cover("hopf_monad_from_algebra");
    hopf_monad_from_algebra(h, Side::Right)
}

fn centralizer_dump(cz: &Centralizer) -> Value {
    json!({"T": to_value(&monad_to_json(&cz.t)), "Z": to_value(&monad_to_json(&cz.z)), "partial": to_value(&nat_dump(&cz.del))})
}

pub fn run_centralize(t: &HopfMonad, opts: &Sampling) -> Result<Outcome> {
    let cz = centralize(t)?;
    let report = check_centralizer(&cz, opts);
    Ok(Outcome { report, dumps: vec![Dump::json("centralizer.json", &centralizer_dump(&cz))] })
}

/// The canonical law and the double with its R-matrix; R is checked on `r_opts`.
pub fn run_double(t: &HopfMonad, opts: &Sampling, r_opts: &Sampling) -> Result<Outcome> {
    let cz = centralize(t)?;
    let law = canonical_law(&cz, opts)?;
    let dbl = double(&cz, &law)?;
    let mut report = Report::new("double");
    report.merge(law.certificate.clone());
    report.merge(check_double(&cz, &dbl, opts, r_opts));
    let v = json!({
        "D": to_value(&monad_to_json(&dbl.d)),
        "R": to_value(&nat_dump(&dbl.r)),
        "Omega": to_value(&nat_dump(&law.omega)),
    });
    Ok(Outcome { report, dumps: vec![Dump::json("double.json", &v)] })
}

pub fn coend_hopf_dump(ch: &CoendHopf) -> Value {
    json!({
        "carrier": ch.carrier.m.0,
        "alpha": to_value(&mor_to_json(&ch.carrier.r)),
        "m": to_value(&mor_to_json(&ch.m)),
        "u": to_value(&mor_to_json(&ch.u)),
        "delta": to_value(&mor_to_json(&ch.delta)),
        "eps": to_value(&mor_to_json(&ch.eps)),
        "S": to_value(&mor_to_json(&ch.s)),
        "omega": to_value(&mor_to_json(&ch.omega)),
    })
}

/// The coend of the center; with `braided`, the coend of the braided category itself.
pub fn run_coend(c: &Category, braided: bool, opts: &Sampling) -> Result<Outcome> {
    if braided {
        let co = coend(c)?;
        let report = check_coend(&co, opts);
        let v = json!({
            "carrier": co.c.0,
            "hopf": to_value(&hopf_to_json(&co.hopf)),
            "omega": to_value(&mor_to_json(&co.omega)),
            "omega_trivial": co.omega_is_trivial(),
        });
        return Ok(Outcome { report, dumps: vec![Dump::json("coend.json", &v)] });
    }
    let cc = coend_of_center(c)?;
    Ok(Outcome { report: cc.report.clone(), dumps: vec![Dump::json("coend.json", &coend_hopf_dump(&cc.via_double))] })
}

pub fn run_double_algebra(h: &HopfAlgebra, opts: &Sampling) -> Result<Outcome> {
    let bd = double_algebra(h)?;
    let mut report = Report::new("double-algebra");
    report.merge(bd.centralizer.report.clone());
    report.merge(bd.law.certificate.clone());
    report.merge(bd.report.clone());
    report.merge(consistency_double(&bd, opts)?);
    let v = json!({
        "A": to_value(&hopf_to_json(&bd.a)),
        "Z(A)": to_value(&hopf_to_json(&bd.za)),
        "Omega": to_value(&mor_to_json(&bd.omega)),
        "D(A)": to_value(&hopf_to_json(&bd.da)),
        "r": to_value(&mor_to_json(&bd.r)),
    });
    Ok(Outcome { report, dumps: vec![Dump::json("double_algebra.json", &v)] })
}
