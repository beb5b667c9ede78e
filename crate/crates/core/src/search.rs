//! Bounded best-first search for a word in `G_4` taking a full numerical
//! exceptional collection to the standard one in `(K0 / +-)^4`.
//!
//! Nodes are ordered by `(height, depth, moves)` where the height is the sum
//! over slots of the smaller of `|v - s|_1` and `|v + s|_1` against the
//! standard class `s` in coordinates `(rank, a, b, chi)`. Moves are tried in
//! the fixed order `s1, -s1, s2, -s2, s3, -s3`, which makes the result
//! deterministic. Missing a solution within the bound says nothing about
//! whether one exists.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::lattice::KClass;
use crate::mutation::{standard_collection, GroupLetter, GroupWord, NumCollection};

const MOVES: [GroupLetter; 6] = [
    GroupLetter::Sigma { i: 1, inverse: false },
    GroupLetter::Sigma { i: 1, inverse: true },
    GroupLetter::Sigma { i: 2, inverse: false },
    GroupLetter::Sigma { i: 2, inverse: true },
    GroupLetter::Sigma { i: 3, inverse: false },
    GroupLetter::Sigma { i: 3, inverse: true },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of braid moves.
    pub depth: usize,
    /// Cap on expanded nodes; the search reports `NotFound` past it.
    pub max_expansions: usize,
}

impl SearchConfig {
    pub fn with_depth(depth: usize) -> Self {
        SearchConfig { depth, max_expansions: 200_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// `apply_group_word(col, word)` is exactly the standard collection.
    pub word: GroupWord,
    pub expanded: usize,
}

fn l1_distance(v: &KClass, s: &KClass) -> u128 {
    v.coords().iter().zip(s.coords()).map(|(&x, y)| (x as i128 - y as i128).unsigned_abs()).sum()
}

fn l1_distance_negated(v: &KClass, s: &KClass) -> u128 {
    v.coords().iter().zip(s.coords()).map(|(&x, y)| (x as i128 + y as i128).unsigned_abs()).sum()
}

pub fn height(col: &NumCollection, target: &NumCollection) -> u128 {
    col.classes().iter().zip(target.classes()).map(|(v, s)| l1_distance(v, s).min(l1_distance_negated(v, s))).sum()
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    height: u128,
    depth: usize,
    moves: Vec<u8>,
}

pub fn reduce_to_standard(col: &NumCollection, depth: usize) -> Result<GroupWord> {
    reduce_with(col, SearchConfig::with_depth(depth)).map(|r| r.word)
}

pub fn reduce_with(col: &NumCollection, config: SearchConfig) -> Result<Reduction> {
    if !col.is_full()? {
        return Err(Error::NotFull);
    }
    let target = standard_collection(col.surface());

    let mut frontier: BinaryHeap<Reverse<(Key, usize)>> = BinaryHeap::new();
    let mut states: Vec<NumCollection> = vec![col.clone()];
    let mut seen: HashMap<Vec<KClass>, usize> = HashMap::new();
    seen.insert(col.sign_normalized(), 0);
    frontier.push(Reverse((Key { height: height(col, &target), depth: 0, moves: vec![] }, 0)));

    let mut expanded = 0usize;
    while let Some(Reverse((key, idx))) = frontier.pop() {
        let state = states[idx].clone();
        if key.height == 0 {
            return Ok(Reduction { word: finish(&key.moves, &state, &target), expanded });
        }
        if expanded >= config.max_expansions {
            break;
        }
        expanded += 1;
        if key.depth >= config.depth {
            continue;
        }
        for (m, letter) in MOVES.iter().enumerate() {
            // undoing the previous move only revisits the parent
            if let Some(&last) = key.moves.last() {
                if MOVES[last as usize] == letter.inverse() {
                    continue;
                }
            }
            let child = match state.apply_letter(*letter) {
                Ok(c) => c,
                Err(Error::Overflow) => continue,
                Err(e) => return Err(e),
            };
            let depth = key.depth + 1;
            let norm = child.sign_normalized();
            if matches!(seen.get(&norm), Some(&d) if d <= depth) {
                continue;
            }
            seen.insert(norm, depth);
            let mut moves = key.moves.clone();
            moves.push(m as u8);
            let h = height(&child, &target);
            states.push(child);
            frontier.push(Reverse((Key { height: h, depth, moves }, states.len() - 1)));
        }
    }
    Err(Error::NotFound { depth: config.depth, expanded })
}

/// Turns the applied move sequence into a composition word and appends the
/// sign flips that make the result exactly standard.
fn finish(moves: &[u8], reached: &NumCollection, target: &NumCollection) -> GroupWord {
    let mut letters: Vec<GroupLetter> = reached
        .classes()
        .iter()
        .zip(target.classes())
        .enumerate()
        .filter(|(_, (v, s))| v != s)
        .map(|(i, _)| GroupLetter::Flip(i + 1))
        .collect();
    letters.extend(moves.iter().rev().map(|&m| MOVES[m as usize]));
    GroupWord::new(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Surface;
    use crate::mutation::apply_group_word;

    #[test]
    fn standard_needs_nothing() {
        let std = standard_collection(Surface::Sigma2);
        assert_eq!(reduce_to_standard(&std, 4).unwrap(), GroupWord::identity());
    }

    #[test]
    fn short_round_trip() {
        let std = standard_collection(Surface::Sigma2);
        let g: GroupWord = "s2,-s1".parse().unwrap();
        let col = apply_group_word(&std, &g).unwrap();
        let w = reduce_to_standard(&col, 8).unwrap();
        assert!(w.len() <= 4);
        assert_eq!(apply_group_word(&col, &w).unwrap(), std);
    }

    #[test]
    fn flips_are_restored() {
        let std = standard_collection(Surface::Sigma2);
        let g: GroupWord = "f2,s3,f1".parse().unwrap();
        let col = apply_group_word(&std, &g).unwrap();
        let w = reduce_to_standard(&col, 4).unwrap();
        assert_eq!(apply_group_word(&col, &w).unwrap(), std);
    }

    #[test]
    fn depth_zero_reports_not_found() {
        let std = standard_collection(Surface::Sigma2);
        let col = apply_group_word(&std, &"s1".parse().unwrap()).unwrap();
        assert!(matches!(reduce_to_standard(&col, 0), Err(Error::NotFound { depth: 0, .. })));
    }

    #[test]
    fn partial_collection_is_rejected() {
        let std = standard_collection(Surface::Sigma2);
        let short = NumCollection::new(std.classes()[..3].to_vec()).unwrap();
        assert_eq!(reduce_to_standard(&short, 4), Err(Error::NotFull));
    }

    #[test]
    fn quadric_round_trip() {
        let std = standard_collection(Surface::Quadric);
        let col = apply_group_word(&std, &"-s3,s1,s2".parse().unwrap()).unwrap();
        let w = reduce_to_standard(&col, 8).unwrap();
        assert_eq!(apply_group_word(&col, &w).unwrap(), std);
    }
}
