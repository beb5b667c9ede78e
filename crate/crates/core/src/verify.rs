//! The relation and property suites behind `sigma2 verify`.
//!
//! Every suite draws from its own ChaCha stream derived from the run seed, so
//! suites can run in parallel and the report (ordered by suite name) is a
//! pure function of seed and bounds. Wall times are recorded but kept out of
//! the JSON unless asked for.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{gen_isometry, gen_isometry_inverse, standard_divisors};
use crate::cohomology::{hom_dims_line_bundles, line_bundle_cohomology, CohomologyDims};
use crate::error::{Error, Result};
use crate::lattice::{
    class_of_line_bundle, class_of_oc, dual_class, euler_pairing, intersect, serre_pair_check, tensor_line_bundle,
    KClass, PicClass, Surface,
};
use crate::mutation::{
    apply_group_word, enumerate_exceptional_classes, restriction_profile, standard_collection, GroupLetter, GroupWord,
    NumCollection, ScanBounds,
};
use crate::sample;
use crate::search::{reduce_with, SearchConfig};
use crate::twist::{is_k0_trivial, normalize, word_matrix, Sign, TwistGenerator, TwistWord, ODD_ANCHOR};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    ExampleCounter,
    Lattice,
    Mutation,
    Oracle,
    Transitivity,
    Twist,
}

impl Suite {
    /// Sorted by name.
    pub const ALL: [Suite; 6] =
        [Suite::ExampleCounter, Suite::Lattice, Suite::Mutation, Suite::Oracle, Suite::Transitivity, Suite::Twist];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ExampleCounter => "example-counter",
            Suite::Lattice => "lattice",
            Suite::Mutation => "mutation",
            Suite::Oracle => "oracle",
            Suite::Transitivity => "transitivity",
            Suite::Twist => "twist",
        }
    }

    fn stream(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyBounds {
    /// `|a|, |b|` box for the oracle comparisons.
    pub oracle_box: i64,
    pub random_pairs: usize,
    /// Coordinate bound for random classes.
    pub class_bound: i64,
    pub twist_a: i64,
    pub twist_m: i64,
    pub words: usize,
    pub word_len: usize,
    pub word_a: i64,
    pub collections: usize,
    pub collection_len: usize,
    pub transitivity_words: usize,
    pub transitivity_len: usize,
    pub transitivity_depth: usize,
    pub scan: ScanBounds,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds {
            oracle_box: 20,
            random_pairs: 1000,
            class_bound: 12,
            twist_a: 10,
            twist_m: 3,
            words: 1000,
            word_len: 12,
            word_a: 5,
            collections: 1000,
            collection_len: 6,
            transitivity_words: 200,
            transitivity_len: 8,
            transitivity_depth: 16,
            scan: ScanBounds { rank: 6, c1: 6, chi: 40 },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn cases(&self) -> u64 {
        self.suites.iter().map(|s| s.cases).sum()
    }

    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }

    /// The deterministic part of the report.
    pub fn without_timings(&self) -> VerifyReport {
        let mut r = self.clone();
        for s in &mut r.suites {
            s.wall_time_ms = None;
        }
        r
    }

    pub fn to_json(&self, timings: bool) -> String {
        let r = if timings { self.clone() } else { self.without_timings() };
        serde_json::to_string_pretty(&r).expect("report serializes")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            let status = if s.failures.is_empty() { "ok" } else { "FAILED" };
            write!(f, "{:<16} {:>7} cases  {:>3} failures  {status}", s.suite, s.cases, s.failures.len())?;
            if let Some(ms) = s.wall_time_ms {
                write!(f, "  {ms:.1} ms")?;
            }
            writeln!(f)?;
            for x in &s.failures {
                writeln!(f, "    {}: {} != {}", x.case, x.lhs, x.rhs)?;
            }
        }
        write!(f, "total: {} cases, {} failures", self.cases(), self.failure_count())
    }
}

pub fn run_verify(suites: &[Suite], seed: u64, bounds: &VerifyBounds) -> Result<VerifyReport> {
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    let results: Vec<Result<SuiteReport>> = suites.par_iter().map(|&s| run_suite(s, seed, bounds)).collect();
    Ok(VerifyReport { seed, suites: results.into_iter().collect::<Result<_>>()? })
}

pub fn run_suite(suite: Suite, seed: u64, bounds: &VerifyBounds) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite.stream());
    let mut ck = Checker { suite, cases: 0, failures: vec![] };
    match suite {
        Suite::Lattice => lattice_suite(&mut ck, &mut rng, bounds)?,
        Suite::Oracle => oracle_suite(&mut ck, bounds)?,
        Suite::Twist => twist_suite(&mut ck, &mut rng, bounds)?,
        Suite::Mutation => mutation_suite(&mut ck, &mut rng, bounds)?,
        Suite::Transitivity => transitivity_suite(&mut ck, &mut rng, bounds)?,
        Suite::ExampleCounter => example_counter_suite(&mut ck)?,
    }
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        cases: ck.cases,
        failures: ck.failures,
        wall_time_ms: Some(start.elapsed().as_secs_f64() * 1e3),
    })
}

struct Checker {
    suite: Suite,
    cases: u64,
    failures: Vec<Failure>,
}

impl Checker {
    fn eq<T: Serialize + PartialEq>(
        &mut self,
        case: impl Fn() -> String,
        lhs: Result<T>,
        rhs: Result<T>,
    ) -> Result<()> {
        let lhs = self.ok(&case, lhs)?;
        let rhs = self.ok(&case, rhs)?;
        self.cases += 1;
        if lhs != rhs {
            self.failures.push(Failure { case: case(), lhs: show(&lhs), rhs: show(&rhs) });
        }
        Ok(())
    }

    fn holds(&mut self, case: impl Fn() -> String, cond: Result<bool>) -> Result<()> {
        self.eq(case, cond, Ok(true))
    }

    fn ok<T>(&self, case: &impl Fn() -> String, r: Result<T>) -> Result<T> {
        r.map_err(|e| Error::Aborted { suite: self.suite.name().to_string(), case: case(), reason: e.to_string() })
    }
}

fn show<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn word(gens: &[TwistGenerator]) -> TwistWord {
    TwistWord::new(gens.to_vec())
}

fn t(a: i64) -> TwistGenerator {
    TwistGenerator::Twist(a, Sign::Plus)
}

fn ti(a: i64) -> TwistGenerator {
    TwistGenerator::Twist(a, Sign::Minus)
}

fn oc(m: i64) -> TwistGenerator {
    TwistGenerator::TensorOC(m)
}

fn lattice_suite(ck: &mut Checker, rng: &mut ChaCha8Rng, b: &VerifyBounds) -> Result<()> {
    for s in Surface::ALL {
        for _ in 0..b.random_pairs {
            let (u, v, w) = (
                sample::kclass(rng, s, b.class_bound),
                sample::kclass(rng, s, b.class_bound),
                sample::kclass(rng, s, b.class_bound),
            );
            let case = || format!("{s}: u={u}, v={v}, w={w}");
            ck.eq(
                case,
                u.checked_add(&v).and_then(|uv| euler_pairing(&uv, &w)),
                euler_pairing(&u, &w).and_then(|x| Ok(x + euler_pairing(&v, &w)?)),
            )?;
            ck.eq(
                case,
                v.checked_add(&w).and_then(|vw| euler_pairing(&u, &vw)),
                euler_pairing(&u, &v).and_then(|x| Ok(x + euler_pairing(&u, &w)?)),
            )?;
            ck.eq(case, dual_class(&w).and_then(|dw| euler_pairing(&dw, &dual_class(&v)?)), euler_pairing(&v, &w))?;
            ck.holds(case, serre_pair_check(&v, &w))?;

            let d = PicClass::new(s, rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            let case = || format!("{s}: v={v}, w={w}, d={d}");
            ck.eq(
                case,
                tensor_line_bundle(&v, &d).and_then(|vd| euler_pairing(&vd, &tensor_line_bundle(&w, &d)?)),
                euler_pairing(&v, &w),
            )?;
        }
    }
    let r = b.twist_a;
    for a in -r..=r {
        for c in -r..=r {
            let case = || format!("chi(O_C({a}), O_C({c}))");
            let lhs = class_of_oc(a).and_then(|x| euler_pairing(&x, &class_of_oc(c)?));
            ck.eq(case, lhs.clone(), class_of_oc(a - c).and_then(|x| euler_pairing(&x, &class_of_oc(0)?)))?;
            if a == c {
                ck.eq(case, lhs, Ok(2))?;
            }
        }
    }
    Ok(())
}

const STANDARD_GRAM: [[i64; 4]; 4] = [[1, 2, 4, 6], [0, 1, 2, 4], [0, 0, 1, 2], [0, 0, 0, 1]];

fn oracle_suite(ck: &mut Checker, b: &VerifyBounds) -> Result<()> {
    let r = b.oracle_box;
    for s in Surface::ALL {
        let k = s.canonical_class();
        for x in -r..=r {
            for y in -r..=r {
                let d = PicClass::new(s, x, y);
                let case = || format!("{s}: d={d}");
                let h = line_bundle_cohomology(&d);
                ck.eq(case, Ok(h.euler_characteristic()), class_of_line_bundle(&d).map(|v| v.chi as i128))?;
                let hd = ck.ok(&case, k.checked_sub(&d).map(|kd| line_bundle_cohomology(&kd)))?;
                ck.eq(case, Ok([h.h0, h.h1, h.h2]), Ok([hd.h2, hd.h1, hd.h0]))?;
            }
        }

        let divisors = standard_divisors(s);
        for i in 0..4 {
            for j in 0..4 {
                let case = || format!("{s}: hom(E{}, E{})", j + 1, i + 1);
                let h = hom_dims_line_bundles(&divisors[j], &divisors[i]);
                if i < j {
                    ck.eq(case, h.clone(), Ok(CohomologyDims::new(0, 0, 0)))?;
                }
                let v = ck.ok(&case, class_of_line_bundle(&divisors[j]))?;
                let w = ck.ok(&case, class_of_line_bundle(&divisors[i]))?;
                ck.eq(case, h.map(|h| h.euler_characteristic()), euler_pairing(&v, &w).map(i128::from))?;
            }
        }
        let std = standard_collection(s);
        ck.eq(|| format!("{s}: standard Gram matrix"), std.euler_matrix(), Ok(gram_rows(STANDARD_GRAM)))?;
    }

    let sigma = standard_collection(Surface::Sigma2);
    let case = || "gen(E_std) Gram matrix".to_string();
    let image: Vec<KClass> = ck.ok(&case, sigma.classes().iter().map(gen_isometry).collect())?;
    let image = ck.ok(&case, NumCollection::new(image))?;
    ck.eq(case, image.euler_matrix(), standard_collection(Surface::Quadric).euler_matrix())?;
    Ok(())
}

fn gram_rows(m: [[i64; 4]; 4]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

fn twist_suite(ck: &mut Checker, rng: &mut ChaCha8Rng, b: &VerifyBounds) -> Result<()> {
    let id = || Ok(crate::matrix::Mat4::IDENTITY);
    for a in -b.twist_a..=b.twist_a {
        ck.eq(|| format!("T_{a}^2"), word_matrix(&word(&[t(a), t(a)])), id())?;
        ck.eq(|| format!("T'_{a}^2"), word_matrix(&word(&[ti(a), ti(a)])), id())?;
        ck.eq(|| format!("T_{a} T'_{a}"), word_matrix(&word(&[t(a), ti(a)])), id())?;
        ck.eq(|| format!("T_{a} T_{}", a + 1), word_matrix(&word(&[t(a), t(a + 1)])), word_matrix(&word(&[oc(1)])))?;
        ck.eq(|| format!("T'_{a}"), word_matrix(&word(&[ti(a)])), word_matrix(&word(&[t(a + 1), oc(-1)])))?;
        for m in -b.twist_m..=b.twist_m {
            ck.eq(
                || format!("O({m}C) T_{a}"),
                word_matrix(&word(&[oc(m), t(a)])),
                word_matrix(&word(&[t(a - 2 * m), oc(m)])),
            )?;
        }
    }

    for n in 0..b.words {
        let w = sample::twist_word(rng, b.word_len, b.word_a);
        check_normal_form(ck, n, &w)?;
    }
    // conjugated twist squares are K0-trivial
    for n in 0..b.words / 4 {
        let u = sample::twist_word(rng, b.word_len / 2, b.word_a);
        let g = TwistGenerator::Twist(rng.gen_range(-b.word_a..=b.word_a), Sign::Plus);
        let g = if rng.gen() { g } else { g.inverse() };
        let w = u.compose(&word(&[g, g])).compose(&u.inverse());
        let case = || format!("trivial #{n}: {w}");
        ck.holds(case, is_k0_trivial(&w))?;
        check_normal_form(ck, n, &w)?;
    }
    Ok(())
}

fn check_normal_form(ck: &mut Checker, n: usize, w: &TwistWord) -> Result<()> {
    let case = || format!("word #{n}: {w}");
    let nf = ck.ok(&case, normalize(w))?;
    ck.eq(case, word_matrix(&nf.to_word()), word_matrix(w))?;
    ck.eq(case, Ok(nf.has_odd_twist), Ok(w.twist_count() % 2 == 1))?;
    ck.eq(case, Ok(nf.shift), w.total_shift())?;
    ck.eq(case, Ok(nf.odd_anchor), Ok(ODD_ANCHOR))?;
    ck.holds(case, Ok(nf.squares.windows(2).all(|p| p[1] != p[0].inverse())))?;
    if ck.ok(&case, is_k0_trivial(w))? {
        ck.eq(case, Ok((nf.m, nf.has_odd_twist)), Ok((0, false)))?;
    }
    Ok(())
}

fn apply(col: &NumCollection, g: &str) -> Result<NumCollection> {
    apply_group_word(col, &g.parse::<GroupWord>()?)
}

fn mutation_suite(ck: &mut Checker, rng: &mut ChaCha8Rng, b: &VerifyBounds) -> Result<()> {
    for n in 0..b.collections {
        let x = sample::full_collection(rng, Surface::Sigma2, b.collection_len);
        let case = || format!("collection #{n}: {x}");
        for i in 1..=2 {
            ck.eq(
                case,
                apply(&x, &format!("s{i},s{},s{i}", i + 1)),
                apply(&x, &format!("s{},s{i},s{}", i + 1, i + 1)),
            )?;
        }
        ck.eq(case, apply(&x, "s1,s3"), apply(&x, "s3,s1"))?;
        for i in 1..=3 {
            ck.eq(case, apply(&x, &format!("s{i},-s{i}")), Ok(x.clone()))?;
            ck.eq(case, apply(&x, &format!("-s{i},s{i}")), Ok(x.clone()))?;
            for j in 1..=4 {
                let pj = if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                };
                for sig in [format!("s{i}"), format!("-s{i}")] {
                    ck.eq(case, apply(&x, &format!("{sig},f{j}")), apply(&x, &format!("f{pj},{sig}")))?;
                }
            }
        }
        let det = ck.ok(&case, x.coordinate_matrix().and_then(|m| m.det()))?;
        for letter in sample_letters() {
            let y = ck.ok(&case, x.apply_letter(letter))?;
            ck.holds(case, NumCollection::new(y.classes().to_vec()).map(|z| z == y))?;
            ck.holds(case, y.is_full())?;
            ck.eq(case, y.coordinate_matrix().and_then(|m| m.det()).map(|d| d.abs()), Ok(det.abs()))?;
        }
        for v in x.classes() {
            if v.rank > 0 {
                let p = ck.ok(&case, restriction_profile(v))?;
                let deg = ck.ok(&case, intersect(&v.c1, &PicClass::curve()))?;
                ck.eq(case, Ok(v.rank * p.b + (v.rank - p.s)), Ok(deg))?;
                ck.holds(case, Ok(1 <= p.s && p.s <= v.rank))?;
            }
        }
        let image: Vec<KClass> = ck.ok(&case, x.classes().iter().map(gen_isometry).collect())?;
        let gx = ck.ok(&case, NumCollection::new(image.clone()))?;
        ck.eq(case, gx.euler_matrix(), x.euler_matrix())?;
        ck.eq(case, image.iter().map(gen_isometry_inverse).collect::<Result<Vec<_>>>(), Ok(x.classes().to_vec()))?;
    }

    let std = standard_collection(Surface::Sigma2);
    let twisted = |a: i64| std.apply_twist_word(&word(&[t(a)]));
    let case = || "(s1^-1 s2 s1) E_std = T_0 E_std".to_string();
    ck.holds(case, apply(&std, "-s1,s2,s1").and_then(|l| Ok(l.eq_up_to_signs(&twisted(0)?))))?;
    let case = || "(s3 s2 s3^-1) E_std = T_-1 E_std".to_string();
    ck.holds(case, apply(&std, "s3,s2,-s3").and_then(|l| Ok(l.eq_up_to_signs(&twisted(-1)?))))?;
    let case = || "T_-1 E_std = (O, O(C+f), O(C+2f), O(2C+3f))".to_string();
    let displayed: Vec<KClass> = [(0, 0), (1, 1), (1, 2), (2, 3)]
        .iter()
        .map(|&(a, b)| class_of_line_bundle(&PicClass::new(Surface::Sigma2, a, b)))
        .collect::<Result<_>>()?;
    ck.holds(case, twisted(-1).map(|c| c.classes().iter().zip(&displayed).all(|(x, y)| x.eq_up_to_sign(y))))?;

    let o = class_of_line_bundle(&PicClass::zero(Surface::Sigma2))?;
    let t0o = TwistGenerator::Twist(0, Sign::Plus).apply(&o)?;
    let o_minus_c = class_of_line_bundle(&PicClass::new(Surface::Sigma2, -1, 0))?;
    let o_f = class_of_line_bundle(&PicClass::fibre())?;
    let o_c2f = class_of_line_bundle(&PicClass::new(Surface::Sigma2, 1, 2))?;
    let r = euler_pairing(&o_minus_c, &o).and_then(|k| o_minus_c.minus_multiple(k, &o));
    ck.eq(|| "R_O O(-C) = T_0 O".to_string(), r, Ok(t0o))?;
    let l = euler_pairing(&o_f, &o_c2f).and_then(|k| o_c2f.minus_multiple(k, &o_f));
    ck.holds(|| "L_O(f) O(C+2f) = +-T_0 O".to_string(), l.map(|l| l.eq_up_to_sign(&t0o)))?;

    for s in Surface::ALL {
        let case = || format!("{s}: exceptional scan {:?}", b.scan);
        let scan = ck.ok(&case, enumerate_exceptional_classes(s, b.scan))?;
        ck.eq(case, Ok(show(&scan.rank_zero)), Ok("[]".to_string()))?;
        ck.holds(case, Ok(!scan.classes.is_empty()))?;
    }
    Ok(())
}

fn sample_letters() -> impl Iterator<Item = GroupLetter> {
    (1..=3).flat_map(|i| [GroupLetter::sigma(i), GroupLetter::sigma_inv(i)])
}

fn transitivity_suite(ck: &mut Checker, rng: &mut ChaCha8Rng, b: &VerifyBounds) -> Result<()> {
    let std = standard_collection(Surface::Sigma2);
    let config = SearchConfig::with_depth(b.transitivity_depth);
    for n in 0..b.transitivity_words {
        let g = sample::group_word(rng, b.transitivity_len, 4, true);
        let case = || format!("word #{n}: {g}");
        let x = ck.ok(&case, apply_group_word(&std, &g))?;
        match reduce_with(&x, config) {
            Ok(r) => ck.eq(case, apply_group_word(&x, &r.word), Ok(std.clone()))?,
            Err(e @ Error::NotFound { .. }) => {
                ck.cases += 1;
                ck.failures.push(Failure { case: case(), lhs: e.to_string(), rhs: show(&std) });
            }
            Err(e) => ck.ok(&case, Err(e))?,
        }
    }
    Ok(())
}

fn example_counter_suite(ck: &mut Checker) -> Result<()> {
    let s = Surface::Sigma2;
    let o = class_of_line_bundle(&PicClass::zero(s))?;
    let e = class_of_line_bundle(&PicClass::new(s, 1, 4))?;
    let t = |v: &KClass| TwistGenerator::Twist(-1, Sign::Plus).apply(v);
    ck.eq(|| "E1 = T_-1 O".to_string(), t(&o), Ok(o))?;
    let target = PicClass::new(s, 3, 4);
    ck.eq(|| "E2 = T_-1 O(C+4f)".to_string(), t(&e), class_of_line_bundle(&target))?;
    let kd = s.canonical_class().checked_add(&target)?;
    ck.eq(|| "K + 3C + 4f".to_string(), Ok(kd.coeffs()), Ok(PicClass::curve().coeffs()))?;
    ck.eq(|| "h0(K + 3C + 4f)".to_string(), Ok(line_bundle_cohomology(&kd).h0), Ok(1))?;
    ck.eq(|| "ext2(O(3C+4f), O)".to_string(), hom_dims_line_bundles(&target, &PicClass::zero(s)).map(|h| h.h2), Ok(1))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_list() {
        let r = run_verify(&[], 1, &VerifyBounds::default()).unwrap();
        assert!(r.suites.is_empty());
        assert!(r.passed());
    }

    #[test]
    fn unknown_suite() {
        assert_eq!("braid".parse::<Suite>(), Err(Error::UnknownSuite("braid".into())));
        assert_eq!("example-counter".parse::<Suite>(), Ok(Suite::ExampleCounter));
    }

    #[test]
    fn counter_example() {
        let r = run_verify(&[Suite::ExampleCounter], 0, &VerifyBounds::default()).unwrap();
        assert_eq!(r.suites[0].cases, 5);
        assert!(r.passed(), "{r}");
    }
}
