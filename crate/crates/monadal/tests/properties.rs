//! Randomized laws: field arithmetic, the monoidal structure, duality, braiding naturality,
//! morphism serialization and the coend pairing.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use monadal::braided_double::coend;
use monadal::io::{mor_from_json, mor_to_json};
use monadal::{Category, FieldSpec, Mor, Obj, Scalar};

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        prop::sample::select(vec![2u64, 3, 5, 7, 101]).prop_map(|p| FieldSpec::prime(p).unwrap()),
    ]
}

fn scalar(f: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..20).prop_map(move |(n, d)| {
        let d = f.int(d);
        match d.inv() {
            Some(i) => &f.int(n) * &i,
            None => f.int(n),
        }
    })
}

fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    fields().prop_flat_map(|f| (scalar(f), scalar(f), scalar(f)))
}

fn categories() -> Vec<Category> {
    let q = FieldSpec::Rationals;
    let f7 = FieldSpec::prime(7).unwrap();
    vec![
        Category::cyclic(q, 3),
        Category::s3(q),
        Category::cyclic_braided(q, 2, q.int(-1)),
        Category::cyclic_braided(f7, 3, f7.int(2)),
    ]
}

fn category() -> impl Strategy<Value = Category> {
    prop::sample::select(categories())
}

fn braided() -> impl Strategy<Value = Category> {
    prop::sample::select(categories().into_iter().filter(|c| c.is_braided()).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if let Some(i) = a.inv() {
            prop_assert!((&a * &i).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn render_parse_round_trip((a, _, _) in triple()) {
        prop_assert_eq!(Scalar::parse(&a.render(), a.field()).unwrap(), a);
    }

    #[test]
    fn interchange_and_associativity(c in category(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let objs: Vec<Obj> = (0..6).map(|_| c.random_obj(&mut rng, 3)).collect();
        let f = c.random_mor(&mut rng, &objs[0], &objs[1]);
        let g = c.random_mor(&mut rng, &objs[1], &objs[2]);
        let h = c.random_mor(&mut rng, &objs[3], &objs[4]);
        let k = c.random_mor(&mut rng, &objs[4], &objs[5]);
        prop_assert_eq!(c.tensor(&g, &k).comp(&c.tensor(&f, &h)), c.tensor(&g.comp(&f), &k.comp(&h)));
        prop_assert_eq!(c.tensor(&c.tensor(&f, &g), &h), c.tensor(&f, &c.tensor(&g, &h)));
        let e = c.random_mor(&mut rng, &objs[2], &objs[3]);
        prop_assert_eq!(h.comp(&e).comp(&g), h.comp(&e.comp(&g)));
    }

    #[test]
    fn duality(c in category(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = c.random_obj(&mut rng, 3);
        let y = c.random_obj(&mut rng, 3);
        let dx = c.dual_obj(&x);
        // zig-zags
        let zz = Mor::chain(&[&c.tensor(&c.id(&x), &c.ev(&x)), &c.tensor(&c.coev(&x), &c.id(&x))]);
        prop_assert_eq!(zz, c.id(&x));
        let zz = Mor::chain(&[&c.tensor(&c.ev(&x), &c.id(&dx)), &c.tensor(&c.id(&dx), &c.coev(&x))]);
        prop_assert_eq!(zz, c.id(&dx));
        // contravariant functoriality of the dual
        let f = c.random_mor(&mut rng, &x, &y);
        let g = c.random_mor(&mut rng, &y, &x);
        prop_assert_eq!(c.dual_mor(&g.comp(&f)), c.dual_mor(&f).comp(&c.dual_mor(&g)));
    }

    #[test]
    fn braiding_is_natural_and_invertible(c in braided(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let objs: Vec<Obj> = (0..4).map(|_| c.random_obj(&mut rng, 3)).collect();
        let f = c.random_mor(&mut rng, &objs[0], &objs[1]);
        let g = c.random_mor(&mut rng, &objs[2], &objs[3]);
        let l = c.tau(&objs[1], &objs[3]).comp(&c.tensor(&f, &g));
        let r = c.tensor(&g, &f).comp(&c.tau(&objs[0], &objs[2]));
        prop_assert_eq!(l, r);
        let (x, y) = (&objs[0], &objs[2]);
        // tau_inv(y, x) is the inverse of tau(x, y)
        prop_assert_eq!(c.tau_inv(y, x).comp(&c.tau(x, y)), c.id(&c.tensor_obj(x, y)));
    }

    #[test]
    fn morphisms_serialize(c in category(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = c.random_obj(&mut rng, 4);
        let y = c.random_obj(&mut rng, 4);
        let f = c.random_mor(&mut rng, &x, &y);
        prop_assert_eq!(mor_from_json(&mor_to_json(&f), c.field).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// ω(S⊗id) = ω(id⊗S) and ω(m⊗id) = ω(id⊗ω⊗id)(id⊗id⊗Δ) evaluated on random vectors of
    /// the coend of the non-symmetric Vec_{Z3} over F_7.
    #[test]
    fn coend_pairing_on_vectors(seed in any::<u64>()) {
        let c = Category::cyclic_braided(FieldSpec::prime(7).unwrap(), 3, FieldSpec::prime(7).unwrap().int(2));
        let co = coend(&c).unwrap();
        let h = &co.hopf;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let one = Obj::unit();
        let v = |rng: &mut ChaCha8Rng| c.random_mor(rng, &one, &h.a);
        let (x, y, z) = (v(&mut rng), v(&mut rng), v(&mut rng));
        let om = &co.omega;
        let l = om.comp(&c.tensor(&h.s.comp(&x), &y));
        let r = om.comp(&c.tensor(&x, &h.s.comp(&y)));
        prop_assert_eq!(l, r);
        let xy = h.m.comp(&c.tensor(&x, &y));
        let l = om.comp(&c.tensor(&xy, &z));
        let ida = c.id(&h.a);
        let mid = c.tensors(&[&ida, om, &ida]);
        let r = Mor::chain(&[om, &mid, &c.tensors(&[&x, &y, &h.delta.comp(&z)])]);
        prop_assert_eq!(l, r);
    }
}
