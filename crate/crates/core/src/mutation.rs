//! Numerical exceptional collections and the action of
//! `G_N = Z^N x| Br_N` on them.
//!
//! `sigma_i` sends `(e_i, e_{i+1})` to `(e_{i+1}, R_{e_{i+1}} e_i)` and
//! `sigma_i^{-1}` sends it to `(L_{e_i} e_{i+1}, e_i)`, where
//! `R_f e = e - chi(e,f) f` and `L_e f = f - chi(e,f) e`. Shifts act on `K0`
//! by sign, so only their parity survives.

use std::fmt;
use std::str::FromStr;

use crate::basis::{standard_classes, to_standard_coords};
use crate::error::{checked, Error, Result};
use crate::lattice::{euler_pairing, intersect, same_surface, KClass, PicClass, Surface};
use crate::matrix::Mat4;
use crate::twist::TwistWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumCollection {
    classes: Vec<KClass>,
}

impl NumCollection {
    /// Validates exceptionality and semiorthogonality.
    pub fn new(classes: Vec<KClass>) -> Result<Self> {
        if classes.is_empty() || classes.len() > 4 {
            return Err(Error::CollectionLength(classes.len()));
        }
        let s = classes[0].surface();
        for c in &classes {
            same_surface(s, c.surface())?;
        }
        for (i, e) in classes.iter().enumerate() {
            let value = euler_pairing(e, e)?;
            if value != 1 {
                return Err(Error::NotExceptional { index: i + 1, value });
            }
        }
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                let value = euler_pairing(&classes[j], &classes[i])?;
                if value != 0 {
                    return Err(Error::NotSemiorthogonal { i: i + 1, j: j + 1, value });
                }
            }
        }
        Ok(NumCollection { classes })
    }

    pub fn classes(&self) -> &[KClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn surface(&self) -> Surface {
        self.classes[0].surface()
    }

    /// Gram matrix `chi(e_i, e_j)`, only meaningful for length 4.
    pub fn euler_matrix(&self) -> Result<Vec<Vec<i64>>> {
        self.classes.iter().map(|v| self.classes.iter().map(|w| euler_pairing(v, w)).collect()).collect()
    }

    /// Coordinates of the classes in the standard basis, as columns.
    pub fn coordinate_matrix(&self) -> Result<Mat4> {
        if self.len() != 4 {
            return Err(Error::NotFull);
        }
        let cols = self.classes.iter().map(to_standard_coords).collect::<Result<Vec<_>>>()?;
        Ok(Mat4::from_columns([cols[0], cols[1], cols[2], cols[3]]))
    }

    pub fn is_full(&self) -> Result<bool> {
        if self.len() != 4 {
            return Ok(false);
        }
        Ok(self.coordinate_matrix()?.det()?.abs() == 1)
    }

    /// Equality in `(K0 / +-)^N`.
    pub fn eq_up_to_signs(&self, other: &NumCollection) -> bool {
        self.len() == other.len() && self.classes.iter().zip(&other.classes).all(|(a, b)| a.eq_up_to_sign(b))
    }

    pub fn sign_normalized(&self) -> Vec<KClass> {
        self.classes.iter().map(KClass::sign_normalized).collect()
    }

    fn check_braid_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        Ok(())
    }

    /// `sigma_i` (1-based): `(e_i, e_{i+1}) -> (e_{i+1}, e_i - chi(e_i, e_{i+1}) e_{i+1})`.
    pub fn right_mutation(&self, i: usize) -> Result<NumCollection> {
        self.check_braid_index(i)?;
        let (e, f) = (self.classes[i - 1], self.classes[i]);
        let r = e.minus_multiple(euler_pairing(&e, &f)?, &f)?;
        let mut classes = self.classes.clone();
        classes[i - 1] = f;
        classes[i] = r;
        Ok(NumCollection { classes })
    }

    /// `sigma_i^{-1}` (1-based): `(e_i, e_{i+1}) -> (e_{i+1} - chi(e_i, e_{i+1}) e_i, e_i)`.
    pub fn left_mutation(&self, i: usize) -> Result<NumCollection> {
        self.check_braid_index(i)?;
        let (e, f) = (self.classes[i - 1], self.classes[i]);
        let l = f.minus_multiple(euler_pairing(&e, &f)?, &e)?;
        let mut classes = self.classes.clone();
        classes[i - 1] = l;
        classes[i] = e;
        Ok(NumCollection { classes })
    }

    /// Sign flip of slot `i` (1-based), the image of an odd shift.
    pub fn flip(&self, i: usize) -> Result<NumCollection> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        let mut classes = self.classes.clone();
        classes[i - 1] = classes[i - 1].checked_neg()?;
        Ok(NumCollection { classes })
    }

    pub fn apply_letter(&self, letter: GroupLetter) -> Result<NumCollection> {
        match letter {
            GroupLetter::Sigma { i, inverse: false } => self.right_mutation(i),
            GroupLetter::Sigma { i, inverse: true } => self.left_mutation(i),
            GroupLetter::Flip(i) => self.flip(i),
        }
    }

    /// Applies a twist word to every class of the collection.
    pub fn apply_twist_word(&self, w: &TwistWord) -> Result<NumCollection> {
        let classes = self.classes.iter().map(|c| w.apply(c)).collect::<Result<Vec<_>>>()?;
        Ok(NumCollection { classes })
    }
}

impl fmt::Display for NumCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.classes.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn standard_collection(surface: Surface) -> NumCollection {
    NumCollection { classes: standard_classes(surface).to_vec() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupLetter {
    /// `sigma_i` or its inverse, `1 <= i <= N - 1`.
    Sigma { i: usize, inverse: bool },
    /// Odd shift of slot `i`, `1 <= i <= N`.
    Flip(usize),
}

impl GroupLetter {
    pub fn sigma(i: usize) -> Self {
        GroupLetter::Sigma { i, inverse: false }
    }

    pub fn sigma_inv(i: usize) -> Self {
        GroupLetter::Sigma { i, inverse: true }
    }

    pub fn inverse(self) -> Self {
        match self {
            GroupLetter::Sigma { i, inverse } => GroupLetter::Sigma { i, inverse: !inverse },
            GroupLetter::Flip(i) => GroupLetter::Flip(i),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            GroupLetter::Sigma { i, .. } => i >= 1 && i < n,
            GroupLetter::Flip(i) => i >= 1 && i <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLetter(format!("{self} for N = {n}")))
        }
    }
}

impl fmt::Display for GroupLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLetter::Sigma { i, inverse: false } => write!(f, "s{i}"),
            GroupLetter::Sigma { i, inverse: true } => write!(f, "-s{i}"),
            GroupLetter::Flip(i) => write!(f, "f{i}"),
        }
    }
}

impl FromStr for GroupLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLetter(s.to_string());
        let t = s.trim();
        let (inverse, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let index = |digits: &str| digits.parse::<usize>().map_err(|_| bad());
        if let Some(d) = body.strip_prefix('s') {
            Ok(GroupLetter::Sigma { i: index(d)?, inverse })
        } else if let Some(d) = body.strip_prefix('f') {
            // a flip is its own inverse; "-f2" would only be confusing
            if inverse {
                return Err(bad());
            }
            Ok(GroupLetter::Flip(index(d)?))
        } else {
            Err(bad())
        }
    }
}

/// An element of `G_N` written as a composition, leftmost letter outermost:
/// `"-s1,s2,s1"` is `sigma_1^{-1} . sigma_2 . sigma_1`, so `sigma_1` acts
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GroupWord {
    pub letters: Vec<GroupLetter>,
}

impl GroupWord {
    pub fn new(letters: Vec<GroupLetter>) -> Self {
        GroupWord { letters }
    }

    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `self . other`.
    pub fn compose(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }
    }

    pub fn braid_length(&self) -> usize {
        self.letters.iter().filter(|l| matches!(l, GroupLetter::Sigma { .. })).count()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(GroupWord::identity());
        }
        Ok(GroupWord { letters: s.split(',').map(str::parse).collect::<Result<_>>()? })
    }
}

pub fn right_mutation(col: &NumCollection, i: usize) -> Result<NumCollection> {
    col.right_mutation(i)
}

pub fn left_mutation(col: &NumCollection, i: usize) -> Result<NumCollection> {
    col.left_mutation(i)
}

pub fn apply_group_word(col: &NumCollection, g: &GroupWord) -> Result<NumCollection> {
    for l in &g.letters {
        l.validate(col.len())?;
    }
    g.letters.iter().rev().try_fold(col.clone(), |acc, l| acc.apply_letter(*l))
}

/// Splitting type `O_C(b)^s + O_C(b+1)^(r-s)` of an exceptional bundle
/// restricted to `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct RestrictionProfile {
    pub b: i64,
    pub s: i64,
}

/// Solves `rank * b + (rank - s) = c1.C` with `1 <= s <= rank`.
pub fn restriction_profile(v: &KClass) -> Result<RestrictionProfile> {
    if v.surface() != Surface::Sigma2 {
        return Err(Error::WrongSurface { expected: Surface::Sigma2, got: v.surface() });
    }
    if v.rank <= 0 {
        return Err(Error::NonPositiveRank(v.rank));
    }
    let value = euler_pairing(v, v)?;
    if value != 1 {
        return Err(Error::NotExceptional { index: 1, value });
    }
    let degree = intersect(&v.c1, &PicClass::curve())?;
    let b = degree.div_euclid(v.rank);
    let s = checked::sub(v.rank, degree.rem_euclid(v.rank))?;
    Ok(RestrictionProfile { b, s })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanBounds {
    pub rank: i64,
    pub c1: i64,
    pub chi: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScanResult {
    pub classes: Vec<KClass>,
    /// Solutions of `chi(e,e) = 1` with rank 0. Expected to stay empty.
    pub rank_zero: Vec<KClass>,
    pub examined: u64,
}

/// All `e` inside the box with `chi(e, e) = 1`; the zero box scans only the
/// zero class, which is not exceptional.
pub fn enumerate_exceptional_classes(surface: Surface, bounds: ScanBounds) -> Result<ScanResult> {
    let mut out = ScanResult::default();
    for rank in -bounds.rank..=bounds.rank {
        for a in -bounds.c1..=bounds.c1 {
            for b in -bounds.c1..=bounds.c1 {
                for chi in -bounds.chi..=bounds.chi {
                    out.examined += 1;
                    let e = KClass::new(rank, PicClass::new(surface, a, b), chi);
                    if euler_pairing(&e, &e)? == 1 {
                        if rank == 0 {
                            out.rank_zero.push(e);
                        }
                        out.classes.push(e);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `(T_{a_n} ... T_{a_1})(F)[m]` with `F` a bundle candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicObject {
    pub base: KClass,
    pub word: TwistWord,
    pub shift: i64,
}

impl SymbolicObject {
    pub fn realized_class(&self) -> Result<KClass> {
        let v = self.word.apply(&self.base)?;
        if self.shift % 2 == 0 {
            Ok(v)
        } else {
            v.checked_neg()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::class_of_line_bundle;

    const S: Surface = Surface::Sigma2;

    fn lb(a: i64, b: i64) -> KClass {
        class_of_line_bundle(&PicClass::new(S, a, b)).unwrap()
    }

    #[test]
    fn standard_gram_matrices() {
        let expected = vec![vec![1, 2, 4, 6], vec![0, 1, 2, 4], vec![0, 0, 1, 2], vec![0, 0, 0, 1]];
        for s in Surface::ALL {
            let std = standard_collection(s);
            assert_eq!(std.euler_matrix().unwrap(), expected);
            assert!(std.is_full().unwrap());
            assert!(NumCollection::new(std.classes().to_vec()).is_ok());
        }
    }

    #[test]
    fn orthogonal_pair_swaps() {
        // (O, O(-C)) is orthogonal in both directions
        let e = lb(0, 0);
        let f = lb(-1, 0);
        assert_eq!(euler_pairing(&e, &f).unwrap(), 0);
        let col = NumCollection::new(vec![e, f]).unwrap();
        let r = col.right_mutation(1).unwrap();
        assert_eq!(r.classes(), &[f, e]);
        let l = col.left_mutation(1).unwrap();
        assert_eq!(l.classes(), &[f, e]);
    }

    #[test]
    fn right_mutation_of_standard() {
        let std = standard_collection(S);
        let r = std.right_mutation(1).unwrap();
        let o_minus_2f = lb(0, 0).minus_multiple(2, &lb(0, 1)).unwrap();
        assert_eq!(r.classes()[..2], [lb(0, 1), o_minus_2f]);
        assert_eq!(r.left_mutation(1).unwrap(), std);
        assert_eq!(std.right_mutation(2).unwrap().left_mutation(2).unwrap(), std);
    }

    #[test]
    fn left_mutation_matches_twist_of_o() {
        let col = NumCollection::new(vec![lb(0, 1), lb(1, 2)]).unwrap();
        let l = col.left_mutation(1).unwrap();
        let expected = lb(1, 2).minus_multiple(2, &lb(0, 1)).unwrap();
        assert_eq!(l.classes()[0], expected);
        assert!(expected.eq_up_to_sign(&lb(-1, 0)));
    }

    #[test]
    fn index_errors() {
        let std = standard_collection(S);
        assert!(matches!(std.right_mutation(0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(std.left_mutation(4), Err(Error::IndexOutOfRange { .. })));
        let bad: GroupWord = "s4".parse().unwrap();
        assert!(matches!(apply_group_word(&std, &bad), Err(Error::InvalidLetter(_))));
    }

    #[test]
    fn validation_errors() {
        let err = NumCollection::new(vec![lb(0, 1), lb(0, 0)]).unwrap_err();
        assert_eq!(err, Error::NotSemiorthogonal { i: 1, j: 2, value: 2 });
        let not_exc = KClass::new(0, PicClass::curve(), 1);
        assert!(matches!(NumCollection::new(vec![not_exc]), Err(Error::NotExceptional { index: 1, .. })));
        assert!(matches!(NumCollection::new(vec![]), Err(Error::CollectionLength(0))));
    }

    #[test]
    fn group_word_strings() {
        let w: GroupWord = "s1,-s2,f3".parse().unwrap();
        assert_eq!(w.letters, vec![GroupLetter::sigma(1), GroupLetter::sigma_inv(2), GroupLetter::Flip(3)]);
        assert_eq!(w.to_string(), "s1,-s2,f3");
        assert_eq!("".parse::<GroupWord>().unwrap(), GroupWord::identity());
        assert!("x1".parse::<GroupWord>().is_err());
        assert!("-f1".parse::<GroupWord>().is_err());
    }

    #[test]
    fn empty_word_is_identity() {
        let std = standard_collection(S);
        assert_eq!(apply_group_word(&std, &GroupWord::identity()).unwrap(), std);
    }

    #[test]
    fn profiles() {
        assert_eq!(restriction_profile(&lb(1, 3)).unwrap(), RestrictionProfile { b: 1, s: 1 });
        assert_eq!(restriction_profile(&lb(0, 0)).unwrap(), RestrictionProfile { b: 0, s: 1 });
        assert_eq!(restriction_profile(&lb(1, 2)).unwrap(), RestrictionProfile { b: 0, s: 1 });
        assert_eq!(restriction_profile(&lb(-3, 1)).unwrap(), RestrictionProfile { b: 7, s: 1 });
        assert!(matches!(restriction_profile(&lb(0, 0).checked_neg().unwrap()), Err(Error::NonPositiveRank(-1))));
    }

    #[test]
    fn scan_edge_cases() {
        let zero = enumerate_exceptional_classes(S, ScanBounds { rank: 0, c1: 0, chi: 0 }).unwrap();
        assert!(zero.classes.is_empty());
        assert_eq!(zero.examined, 1);

        // Rank one slice: exactly the line bundle classes in the box.
        let res = enumerate_exceptional_classes(S, ScanBounds { rank: 1, c1: 3, chi: 40 }).unwrap();
        let mut rank_one: Vec<KClass> = res.classes.iter().filter(|c| c.rank == 1).copied().collect();
        let mut expected: Vec<KClass> =
            (-3..=3).flat_map(|a| (-3..=3).map(move |b| lb(a, b))).filter(|c| c.chi.abs() <= 40).collect();
        rank_one.sort();
        expected.sort();
        assert_eq!(rank_one, expected);
        assert!(res.rank_zero.is_empty());
    }

    #[test]
    fn symbolic_object_class() {
        use crate::twist::{Sign, TwistGenerator};
        let obj = SymbolicObject {
            base: lb(0, 0),
            word: TwistWord::new(vec![TwistGenerator::Twist(0, Sign::Plus)]),
            shift: 1,
        };
        assert_eq!(obj.realized_class().unwrap(), lb(-1, 0).checked_neg().unwrap());
    }
}
