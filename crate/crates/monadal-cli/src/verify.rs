//! The acceptance suite behind `verify-all`: eight criterion reports over the shipped fixtures,
//! an operation-coverage check, and a fixed set of structure-constant dumps.

use std::path::{Path, PathBuf};

use monadal::braided_double::{check_double_of_unit, consistency_double, double_algebra};
use monadal::centralizer::{
    canonical_law, centralize, check_center_e, check_center_i, check_centralizer, check_nonrepresentability,
    check_z_morphism, double, z_on_monad_morphism, Double,
};
use monadal::hopfalg::{check_module, HopfAlgebra, ModuleObj};
use monadal::hopfmonad::{check_hopf_monad, check_monad_morphism, HopfMonad, NatTrans, Sampling, Side, Words};
use monadal::io::{load_category, load_hopf_algebra, load_hopf_monad, monad_to_json};
use monadal::{Category, Obj, Report, Result};

use crate::oracle::compare_with_oracle;
use crate::pipelines::{
    emit_report, monad_of_algebra, run_check_category, run_check_hopf_algebra, run_coend, run_double,
    run_double_algebra, Dump, Format, Outcome,
};

/// Every operation the suite must exercise at least once.
pub const OPERATIONS: &[&str] = &[
    "scalar_arith",
    "scalar_parse",
    "tensor",
    "compose",
    "duality_data",
    "braid",
    "decompose",
    "check_category",
    "check_hopf_algebra",
    "op_cop",
    "classical_dual_cop",
    "check_module",
    "check_algebra_rmatrix",
    "apply_functor",
    "nat_component",
    "hopf_monad_from_algebra",
    "check_hopf_monad",
    "check_tmodule",
    "check_monad_morphism",
    "check_distributive_law",
    "compose_with_law",
    "invert_law",
    "centralize",
    "check_nonrepresentability",
    "canonical_law",
    "double",
    "half_braiding_E",
    "coend_of_module_category",
    "coend_of_center",
    "z_on_monad_morphism",
    "coend",
    "coend_hopf_of_monad",
    "centralizer_algebra",
    "canonical_law_algebra",
    "double_algebra",
    "consistency_double",
    "load_spec",
    "run_pipeline",
    "emit_report",
];

/// The criteria in order; `run_criterion` takes an index into this list.
pub const CRITERIA: &[&str] = &[
    "axiom_suites",
    "centralizer",
    "canonical_law",
    "double",
    "center_correspondence",
    "coend_of_center",
    "classical_oracle",
    "monad_algebra_consistency",
];

/// Fixture directory and sampling shared by all criteria.
#[derive(Clone, Debug)]
pub struct Context {
    pub fixtures: PathBuf,
    pub opts: Sampling,
}

impl Context {
    pub fn new(fixtures: impl Into<PathBuf>, opts: Sampling) -> Context {
        Context { fixtures: fixtures.into(), opts }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.fixtures.join(format!("{name}.json"))
    }

    fn category(&self, rep: &mut Report, name: &str) -> Result<Category> {
        rep.cover("load_spec");
        load_category(&self.path(name))
    }

    fn algebra(&self, rep: &mut Report, name: &str, c: &Category) -> Result<HopfAlgebra> {
        rep.cover("load_spec");
        load_hopf_algebra(&self.path(name), c)
    }
}

const CATEGORIES: &[&str] = &["vec", "vec_z2", "vec_z2_sign", "vec_z3", "vec_z3_f7", "vec_s3"];
const ALGEBRAS: &[&str] = &["kz2", "kz3", "ks3", "sweedler"];

/// The fixture files agree with the built-in constructors they were written from.
fn builtin_category(name: &str) -> Category {
    use monadal::FieldSpec;
    let q = FieldSpec::Rationals;
    let f7 = FieldSpec::prime(7).expect("prime");
    match name {
        "vec" => Category::vec(q),
        "vec_z2" => Category::cyclic(q, 2),
        "vec_z2_sign" => Category::cyclic_braided(q, 2, q.int(-1)),
        "vec_z3_f7" => Category::cyclic_braided(f7, 3, f7.int(2)),
        "vec_z3" => Category::cyclic(q, 3),
        _ => Category::s3(q),
    }
}

fn builtin_algebra(name: &str, vec: &Category) -> Result<HopfAlgebra> {
    match name {
        "kz2" => HopfAlgebra::group_algebra(vec, "kZ2", &HopfAlgebra::cyclic_table(2)),
        "kz3" => HopfAlgebra::group_algebra(vec, "kZ3", &HopfAlgebra::cyclic_table(3)),
        "ks3" => HopfAlgebra::group_algebra(vec, "kS3", &Category::s3(vec.field).table),
        _ => HopfAlgebra::sweedler(vec),
    }
}

fn sorted(o: &Obj) -> Vec<u32> {
    let mut v = o.0.clone();
    v.sort_unstable();
    v
}

fn retitle(mut r: Report, name: impl Into<String>) -> Report {
    r.pipeline = name.into();
    r
}

/// Axiom suites on every fixture: categories with their identity monads, Hopf algebras with
/// their variants, modules and the monads ? ⊗ H, and the shipped monad file.
fn axiom_suites(ctx: &Context) -> Result<Outcome> {
    let mut rep = Report::new("axiom_suites");
    for &name in CATEGORIES {
        let c = ctx.category(&mut rep, name)?;
        let b = builtin_category(name);
        rep.push("fixture_matches_builtin", name, c.table == b.table && c.chi == b.chi && c.field == b.field, None);
        rep.merge(retitle(run_check_category(&c, &ctx.opts).report, format!("{name}/check_category")));
        rep.merge(retitle(check_hopf_monad(&HopfMonad::identity(&c), &ctx.opts), format!("{name}/identity")));
    }
    let vec = ctx.category(&mut rep, "vec")?;
    for &name in ALGEBRAS {
        let h = ctx.algebra(&mut rep, name, &vec)?;
        let b = builtin_algebra(name, &vec)?;
        rep.push("fixture_matches_builtin", name, (&h.m, &h.delta, &h.s) == (&b.m, &b.delta, &b.s), None);
        rep.merge(retitle(run_check_hopf_algebra(&h).report, format!("{name}/check_hopf_algebra")));
        let t = monad_of_algebra(&h, &mut rep)?;
        rep.merge(retitle(check_hopf_monad(&t, &ctx.opts), format!("{name}/right_monad")));
    }
    let kz2 = ctx.algebra(&mut rep, "kz2", &vec)?;
    let t = load_hopf_monad(&ctx.path("kz2_right_monad"), &vec, &ctx.opts)?;
    rep.cover("load_spec");
    let built = monad_of_algebra(&kz2, &mut rep)?;
    rep.push("monad_fixture_matches_builtin", "kz2_right_monad", monad_to_json(&t) == monad_to_json(&built), None);
    // kZ2 read in the sign-braided category, where the monads ? ⊗ A and A ⊗ ? differ
    let sign = ctx.category(&mut rep, "vec_z2_sign")?;
    let ks = ctx.algebra(&mut rep, "kz2", &sign)?;
    rep.merge(retitle(check_module(&ks, &ModuleObj::induced(&ks, &Obj::simple(1), Side::Left)), "kz2_sign/module"));
    for side in [Side::Left, Side::Right] {
        rep.cover("hopf_monad_from_algebra");
        let t = monadal::hopfmonad::hopf_monad_from_algebra(&ks, side)?;
        rep.merge(retitle(check_hopf_monad(&t, &ctx.opts), format!("kz2_sign/{side:?}_monad")));
    }
    Ok(Outcome { report: rep, dumps: Vec::new() })
}

/// Z(1) and Z(transposition) on Vec_{S3}, representability against centrality, the
/// centralizer suite, and Z on the monad morphism ? ⊗ kZ2 → identity.
fn centralizer(ctx: &Context) -> Result<Outcome> {
    let mut rep = Report::new("centralizer");
    let s3 = ctx.category(&mut rep, "vec_s3")?;
    let cz = centralize(&HopfMonad::identity(&s3))?;
    let z1 = sorted(&cz.z.t_obj(&Obj::unit()));
    rep.push("z_of_unit", "S3", z1 == vec![0; 6], Some(format!("Z(1) = {z1:?}")));
    // the transpositions are 1, 2, 3
    let zt = sorted(&cz.z.t_obj(&Obj::simple(1)));
    rep.push("z_of_transposition", "S3", zt == vec![1, 1, 2, 2, 3, 3], Some(format!("Z((01)) = {zt:?}")));
    rep.merge(check_centralizer(&cz, &ctx.opts));
    for (name, want) in [("vec_s3", vec![true, false, false, false, false, false]), ("vec_z2", vec![true; 2]), ("vec_z3", vec![true; 3])] {
        let c = ctx.category(&mut rep, name)?;
        for (x, &w) in want.iter().enumerate() {
            let (representable, r) = check_nonrepresentability(&c, x as u32)?;
            rep.merge(retitle(r, format!("{name}/nonrepresentability")));
            rep.push("representability_expected", format!("{name} x={x}"), representable == w, Some(format!("got {representable}")));
        }
    }
    let vec = ctx.category(&mut rep, "vec")?;
    let kz2 = ctx.algebra(&mut rep, "kz2", &vec)?;
    let t = monad_of_algebra(&kz2, &mut rep)?;
    let id = HopfMonad::identity(&vec);
    let (src, dst) = Words::morphism(&t.t, &id.t);
    let f = NatTrans::build(&vec, "id⊗eps", src, dst, 1, |v| Ok(vec.tensor(&vec.id(&Obj::simple(v[0])), &kz2.eps)))?;
    rep.merge(retitle(check_monad_morphism(&f, &t, &id, &ctx.opts), "id_tensor_eps"));
    let (cz_t, cz_id) = (centralize(&t)?, centralize(&id)?);
    let zf = z_on_monad_morphism(&f, &cz_t, &cz_id)?;
    rep.merge(check_z_morphism(&f, &zf, &cz_t, &cz_id, &ctx.opts));
    Ok(Outcome { report: rep, dumps: Vec::new() })
}

fn law_cases(ctx: &Context, rep: &mut Report) -> Result<Vec<(String, HopfMonad)>> {
    let mut out = Vec::new();
    for name in ["vec_z2", "vec_z3", "vec_s3"] {
        let c = ctx.category(rep, name)?;
        out.push((format!("{name}/identity"), HopfMonad::identity(&c)));
    }
    let vec = ctx.category(rep, "vec")?;
    for name in ["kz2", "ks3"] {
        let h = ctx.algebra(rep, name, &vec)?;
        out.push((format!("vec/{name}"), monad_of_algebra(&h, rep)?));
    }
    Ok(out)
}

/// The canonical law certificate for the identity on Vec_{Z2}, Vec_{Z3}, Vec_{S3} and for
/// ? ⊗ kZ2 and ? ⊗ kS3 on Vec.
fn law(ctx: &Context) -> Result<Outcome> {
    let mut rep = Report::new("canonical_law");
    for (name, t) in law_cases(ctx, &mut rep)? {
        let cz = centralize(&t)?;
        let law = canonical_law(&cz, &ctx.opts)?;
        rep.merge(retitle(law.certificate, name));
    }
    Ok(Outcome { report: rep, dumps: Vec::new() })
}

/// D_T and R for the identity on Vec_{Z2} and Vec_{Z3} at full depth, and on Vec_{S3} with the
/// R-matrix axioms on simple pairs.
fn doubles(ctx: &Context) -> Result<Outcome> {
    let mut rep = Report::new("double");
    let mut dumps = Vec::new();
    for (name, r_opts) in [("vec_z2", ctx.opts), ("vec_z3", ctx.opts), ("vec_s3", Sampling { seed: ctx.opts.seed, ..Sampling::simple_only() })] {
        let c = ctx.category(&mut rep, name)?;
        rep.cover("run_pipeline");
        let o = run_double(&HopfMonad::identity(&c), &ctx.opts, &r_opts)?;
        rep.merge(retitle(o.report, name));
        if name == "vec_z2" {
            dumps.extend(o.dumps.into_iter().map(|d| Dump { name: format!("{name}_{}", d.name), ..d }));
        }
    }
    Ok(Outcome { report: rep, dumps })
}

fn identity_double(c: &Category, opts: &Sampling) -> Result<(monadal::centralizer::Centralizer, Double)> {
    let cz = centralize(&HopfMonad::identity(c))?;
    let law = canonical_law(&cz, opts)?;
    let dbl = double(&cz, &law)?;
    Ok((cz, dbl))
}

/// E on 20 random Z-modules and I on 20 random D-modules, on Vec_{Z2} and Vec_{S3}.
fn center(ctx: &Context) -> Result<Outcome> {
    let mut rep = Report::new("center_correspondence");
    for name in ["vec_z2", "vec_s3"] {
        let c = ctx.category(&mut rep, name)?;
        let (cz, dbl) = identity_double(&c, &ctx.opts)?;
        rep.merge(retitle(check_center_e(&cz, 20, &ctx.opts), format!("{name}/E")));
        rep.merge(retitle(check_center_i(&cz, &dbl, 20, &ctx.opts), format!("{name}/I")));
    }
    Ok(Outcome { report: rep, dumps: Vec::new() })
}

/// coend_of_center against coend_hopf(Z, R_Z) on Vec_{Z2}, Vec_{Z3}, Vec_{S3}.
fn coends(ctx: &Context) -> Result<Outcome> {
    let mut rep = Report::new("coend_of_center");
    let mut dumps = Vec::new();
    for name in ["vec_z2", "vec_z3", "vec_s3"] {
        let c = ctx.category(&mut rep, name)?;
        rep.cover("run_pipeline");
        let o = run_coend(&c, false, &ctx.opts)?;
        rep.merge(retitle(o.report, name));
        if name == "vec_s3" {
            dumps.extend(o.dumps.into_iter().map(|d| Dump { name: format!("{name}_{}", d.name), ..d }));
        }
    }
    Ok(Outcome { report: rep, dumps })
}

/// D(kG) against the textbook double for Z2, Z3, S3, and the suites for D(H4).
fn oracle(ctx: &Context) -> Result<Outcome> {
    let mut rep = Report::new("classical_oracle");
    let mut dumps = Vec::new();
    let vec = ctx.category(&mut rep, "vec")?;
    for name in ["kz2", "kz3", "ks3"] {
        let h = ctx.algebra(&mut rep, name, &vec)?;
        let table = match name {
            "kz2" => HopfAlgebra::cyclic_table(2),
            "kz3" => HopfAlgebra::cyclic_table(3),
            _ => Category::s3(vec.field).table,
        };
        let bd = double_algebra(&h)?;
        rep.merge(retitle(compare_with_oracle(&bd, name, &table), format!("{name}/oracle")));
        rep.merge(retitle(bd.report, format!("{name}/double")));
    }
    let h4 = ctx.algebra(&mut rep, "sweedler", &vec)?;
    rep.cover("run_pipeline");
    let o = run_double_algebra(&h4, &ctx.opts)?;
    rep.merge(retitle(o.report, "sweedler"));
    let kz2 = ctx.algebra(&mut rep, "kz2", &vec)?;
    let o = run_double_algebra(&kz2, &ctx.opts)?;
    dumps.extend(o.dumps.into_iter().map(|d| Dump { name: format!("kz2_{}", d.name), ..d }));
    Ok(Outcome { report: rep, dumps })
}

/// consistency_double for kZ2 over Vec and over sign-braided Vec_{Z2}, and D(1) = C on both
/// braidings of Vec_{Z2}.
fn consistency(ctx: &Context) -> Result<Outcome> {
    let mut rep = Report::new("monad_algebra_consistency");
    for cat in ["vec", "vec_z2_sign"] {
        let c = ctx.category(&mut rep, cat)?;
        let h = ctx.algebra(&mut rep, "kz2", &c)?;
        let bd = double_algebra(&h)?;
        rep.merge(retitle(bd.centralizer.report.clone(), format!("{cat}/centralizer_algebra")));
        rep.merge(retitle(bd.report.clone(), format!("{cat}/double_algebra")));
        rep.merge(retitle(consistency_double(&bd, &ctx.opts)?, format!("{cat}/consistency")));
    }
    let mut dumps = Vec::new();
    for cat in ["vec_z2_sign", "vec_z3_f7"] {
        let c = ctx.category(&mut rep, cat)?;
        rep.merge(retitle(check_double_of_unit(&c)?, format!("{cat}/double_of_unit")));
        rep.cover("run_pipeline");
        let o = run_coend(&c, true, &ctx.opts)?;
        rep.merge(retitle(o.report, format!("{cat}/coend")));
        dumps.extend(o.dumps.into_iter().map(|d| Dump { name: format!("{cat}_{}", d.name), ..d }));
    }
    Ok(Outcome { report: rep, dumps })
}

/// Runs criterion `k` of `CRITERIA`. A construction error becomes a failing record.
pub fn run_criterion(k: usize, ctx: &Context) -> Outcome {
    let f = match k {
        0 => axiom_suites,
        1 => centralizer,
        2 => law,
        3 => doubles,
        4 => center,
        5 => coends,
        6 => oracle,
        7 => consistency,
        _ => panic!("no criterion {k}"),
    };
    f(ctx).unwrap_or_else(|e| {
        let mut report = Report::new(CRITERIA[k]);
        report.fail("construction", CRITERIA[k], e.to_string());
        Outcome { report, dumps: Vec::new() }
    })
}

/// Every report survives the JSON round trip unchanged.
fn json_round_trip(r: &Report) -> bool {
    Report::from_json(&emit_report(r, Format::Json)).is_ok_and(|back| {
        back.pipeline == r.pipeline && back.checks == r.checks && back.coverage == r.coverage
    })
}

/// Combines the criterion outcomes into the verify-all outcome: one report whose sections are
/// the criteria, followed by the coverage check, plus per-criterion reports as dumps.
pub fn assemble(parts: Vec<Outcome>) -> Outcome {
    let mut all = Report::new("verify-all");
    let mut dumps = Vec::new();
    for (k, o) in parts.into_iter().enumerate() {
        let mut r = o.report;
        r.pipeline = CRITERIA[k].to_string();
        let ok = json_round_trip(&r);
        r.push("report_json_round_trip", CRITERIA[k], ok, None);
        r.cover("emit_report");
        dumps.push(Dump { name: format!("{}_{}.txt", k + 1, CRITERIA[k]), contents: emit_report(&r, Format::Text) });
        dumps.extend(o.dumps);
        all.merge(r);
    }
    all.cover("run_pipeline");
    let missing: Vec<&str> = OPERATIONS.iter().copied().filter(|op| !all.coverage.contains(*op)).collect();
    all.push(
        "coverage",
        format!("{} operations", OPERATIONS.len()),
        missing.is_empty(),
        Some(format!("not exercised: {}", missing.join(" "))),
    );
    Outcome { report: all, dumps }
}

pub fn verify_all(ctx: &Context) -> Outcome {
    assemble((0..CRITERIA.len()).map(|k| run_criterion(k, ctx)).collect())
}

/// The fixtures shipped at the workspace root.
pub fn default_fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}
