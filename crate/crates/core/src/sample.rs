//! Seeded random inputs shared by the verify suites, tests and examples.

use rand::Rng;

use crate::lattice::{KClass, Surface};
use crate::mutation::{apply_group_word, standard_collection, GroupLetter, GroupWord, NumCollection};
use crate::twist::{Sign, TwistGenerator, TwistWord};

pub fn kclass<R: Rng>(rng: &mut R, surface: Surface, bound: i64) -> KClass {
    let mut c = || rng.gen_range(-bound..=bound);
    KClass::from_coords(surface, [c(), c(), c(), c()])
}

/// Generator mix: mostly twists and inverse twists with `|a| <= max_a`, plus
/// occasional `O(mC)` and shifts.
pub fn twist_generator<R: Rng>(rng: &mut R, max_a: i64) -> TwistGenerator {
    match rng.gen_range(0..10) {
        0 => TwistGenerator::TensorOC(rng.gen_range(-2..=2)),
        1 => TwistGenerator::Shift(rng.gen_range(-2..=2)),
        2..=5 => TwistGenerator::Twist(rng.gen_range(-max_a..=max_a), Sign::Plus),
        _ => TwistGenerator::Twist(rng.gen_range(-max_a..=max_a), Sign::Minus),
    }
}

pub fn twist_word<R: Rng>(rng: &mut R, max_len: usize, max_a: i64) -> TwistWord {
    let len = rng.gen_range(0..=max_len);
    TwistWord::new((0..len).map(|_| twist_generator(rng, max_a)).collect())
}

pub fn group_letter<R: Rng>(rng: &mut R, n: usize, flips: bool) -> GroupLetter {
    let braid = 2 * (n - 1);
    let total = if flips { braid + n } else { braid };
    let k = rng.gen_range(0..total);
    if k < braid {
        GroupLetter::Sigma { i: k / 2 + 1, inverse: k % 2 == 1 }
    } else {
        GroupLetter::Flip(k - braid + 1)
    }
}

pub fn group_word<R: Rng>(rng: &mut R, max_len: usize, n: usize, flips: bool) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    GroupWord::new((0..len).map(|_| group_letter(rng, n, flips)).collect())
}

/// A full collection in the orbit of the standard one.
pub fn full_collection<R: Rng>(rng: &mut R, surface: Surface, max_len: usize) -> NumCollection {
    let g = group_word(rng, max_len, 4, true);
    apply_group_word(&standard_collection(surface), &g).expect("short words stay small")
}
