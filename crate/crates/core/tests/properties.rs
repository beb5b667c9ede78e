use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sigma2_k0::basis::{gen_isometry, gen_isometry_inverse};
use sigma2_k0::json::{parse_collection, parse_kclass, parse_twist_word, to_json};
use sigma2_k0::lattice::{euler_pairing, KClass, Surface};
use sigma2_k0::mutation::{apply_group_word, standard_collection, GroupLetter, GroupWord, NumCollection};
use sigma2_k0::sample;
use sigma2_k0::search::reduce_to_standard;
use sigma2_k0::twist::{is_k0_trivial, normalize, word_matrix, Sign, TwistGenerator, TwistWord};
use sigma2_k0::verify::{run_verify, Suite, VerifyBounds};

fn generator() -> impl Strategy<Value = TwistGenerator> {
    prop_oneof![
        4 => (-5i64..=5).prop_map(|a| TwistGenerator::Twist(a, Sign::Plus)),
        4 => (-5i64..=5).prop_map(|a| TwistGenerator::Twist(a, Sign::Minus)),
        1 => (-2i64..=2).prop_map(TwistGenerator::TensorOC),
        1 => (-2i64..=2).prop_map(TwistGenerator::Shift),
    ]
}

fn twist_word() -> impl Strategy<Value = TwistWord> {
    prop::collection::vec(generator(), 0..=12).prop_map(TwistWord::new)
}

fn letter(flips: bool) -> impl Strategy<Value = GroupLetter> {
    let n: usize = if flips { 10 } else { 6 };
    (0..n).prop_map(|k| match k {
        0..=5 => GroupLetter::Sigma { i: k / 2 + 1, inverse: k % 2 == 1 },
        _ => GroupLetter::Flip(k - 5),
    })
}

fn group_word(flips: bool, len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(letter(flips), 0..=len).prop_map(GroupWord::new)
}

fn collection() -> impl Strategy<Value = NumCollection> {
    group_word(true, 6).prop_map(|g| apply_group_word(&standard_collection(Surface::Sigma2), &g).unwrap())
}

fn apply(x: &NumCollection, g: &str) -> NumCollection {
    apply_group_word(x, &g.parse().unwrap()).unwrap()
}

proptest! {
    #[test]
    fn normal_form_is_sound(w in twist_word()) {
        let nf = normalize(&w).unwrap();
        prop_assert_eq!(word_matrix(&nf.to_word()).unwrap(), word_matrix(&w).unwrap());
        prop_assert_eq!(nf.has_odd_twist, w.twist_count() % 2 == 1);
        prop_assert_eq!(nf.shift, w.total_shift().unwrap());
    }

    #[test]
    fn normal_form_is_idempotent(w in twist_word()) {
        let nf = normalize(&w).unwrap();
        prop_assert_eq!(normalize(&nf.to_word()).unwrap(), nf);
    }

    #[test]
    fn trivial_words_have_trivial_normal_form(u in twist_word(), a in -5i64..=5) {
        let sq = TwistWord::new(vec![TwistGenerator::Twist(a, Sign::Plus); 2]);
        let w = u.compose(&sq).compose(&u.inverse());
        prop_assert!(is_k0_trivial(&w).unwrap());
        let nf = normalize(&w).unwrap();
        prop_assert_eq!((nf.m, nf.has_odd_twist, nf.shift), (0, false, 0));
    }

    #[test]
    fn braid_relations(x in collection()) {
        prop_assert_eq!(apply(&x, "s1,s2,s1"), apply(&x, "s2,s1,s2"));
        prop_assert_eq!(apply(&x, "s2,s3,s2"), apply(&x, "s3,s2,s3"));
        prop_assert_eq!(apply(&x, "s1,s3"), apply(&x, "s3,s1"));
        prop_assert_eq!(apply(&x, "-s2,s2"), x);
    }

    #[test]
    fn flips_follow_the_semidirect_rule(x in collection(), i in 1usize..=3, j in 1usize..=4, inv: bool) {
        let pj = if j == i { i + 1 } else if j == i + 1 { i } else { j };
        let s = if inv { format!("-s{i}") } else { format!("s{i}") };
        prop_assert_eq!(apply(&x, &format!("{s},f{j}")), apply(&x, &format!("f{pj},{s}")));
    }

    #[test]
    fn gen_isometry_preserves_collections(x in collection()) {
        let image: Vec<KClass> = x.classes().iter().map(|v| gen_isometry(v).unwrap()).collect();
        let gx = NumCollection::new(image.clone()).unwrap();
        prop_assert_eq!(gx.euler_matrix().unwrap(), x.euler_matrix().unwrap());
        let back: Vec<KClass> = image.iter().map(|v| gen_isometry_inverse(v).unwrap()).collect();
        prop_assert_eq!(back.as_slice(), x.classes());
    }

    #[test]
    fn gen_isometry_preserves_pairing(v in coords(), w in coords()) {
        let (v, w) = (KClass::from_coords(Surface::Sigma2, v), KClass::from_coords(Surface::Sigma2, w));
        prop_assert_eq!(
            euler_pairing(&gen_isometry(&v).unwrap(), &gen_isometry(&w).unwrap()).unwrap(),
            euler_pairing(&v, &w).unwrap()
        );
    }

    #[test]
    fn search_round_trip(g in group_word(true, 5)) {
        let std = standard_collection(Surface::Sigma2);
        let x = apply_group_word(&std, &g).unwrap();
        let w = reduce_to_standard(&x, 10).unwrap();
        prop_assert_eq!(apply_group_word(&x, &w).unwrap(), std);
    }

    #[test]
    fn json_round_trips(x in collection(), g in group_word(true, 8), w in twist_word()) {
        prop_assert_eq!(parse_collection(&to_json(&x)).unwrap(), x.clone());
        for v in x.classes() {
            prop_assert_eq!(parse_kclass(&to_json(v)).unwrap(), *v);
        }
        prop_assert_eq!(g.to_string().parse::<GroupWord>().unwrap(), g.clone());
        prop_assert_eq!(serde_json::from_str::<GroupWord>(&to_json(&g)).unwrap(), g);
        prop_assert_eq!(parse_twist_word(&to_json(&w)).unwrap(), w);
    }
}

fn coords() -> impl Strategy<Value = [i64; 4]> {
    [-30i64..=30, -30i64..=30, -30i64..=30, -30i64..=30]
}

#[test]
fn sampled_collections_are_full() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let x = sample::full_collection(&mut rng, Surface::Quadric, 8);
        assert!(x.is_full().unwrap());
    }
}

#[test]
fn verify_report_is_deterministic() {
    let bounds = VerifyBounds { random_pairs: 100, words: 100, collections: 100, ..VerifyBounds::default() };
    let a = run_verify(&Suite::ALL, 11, &bounds).unwrap();
    let b = run_verify(&Suite::ALL, 11, &bounds).unwrap();
    assert_eq!(a.to_json(false), b.to_json(false));
    assert!(a.passed(), "{a}");
    let names: Vec<&str> = a.suites.iter().map(|s| s.suite.as_str()).collect();
    assert_eq!(names, ["example-counter", "lattice", "mutation", "oracle", "transitivity", "twist"]);
}

#[test]
fn full_verify_with_default_bounds() {
    let r = run_verify(&Suite::ALL, 0, &VerifyBounds::default()).unwrap();
    assert!(r.passed(), "{r}");
    let transitivity = r.suites.iter().find(|s| s.suite == "transitivity").unwrap();
    assert_eq!(transitivity.cases, 200);
}
