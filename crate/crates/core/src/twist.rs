//! The group generated by the spherical twists `T_a = T_{O_C(a)}` on `Sigma2`,
//! its action on `K0`, and a normalizer into the shapes
//!
//! ```text
//! O(mC) . T_{a_n}^{+-2} ... T_{a_1}^{+-2}          (even)
//! O(mC) . T_0 . T_{a_n}^{+-2} ... T_{a_1}^{+-2}    (odd)
//! ```
//!
//! Words are compositions: `gens[0]` is the outermost functor, so the last
//! generator is applied first.
//!
//! The normalizer only uses the relations
//! `T_a T_{a+1} = O(C)`, `O(mC) T_a = T_{a-2m} O(mC)` and
//! `T'_a = T_{a+1} O(-C)`, so its output is equal to the input as a group
//! element whenever those relations hold. What we can actually check here
//! is equality of the `K0` matrices, which [`NormalForm::to_word`] plus
//! [`word_matrix`] provide.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basis::{standard_classes, to_standard_coords};
use crate::error::{checked, Error, Result};
use crate::lattice::{class_of_oc, euler_pairing, tensor_line_bundle, KClass, PicClass, Surface};
use crate::matrix::{KMatrix, Mat4};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwistGenerator {
    /// `T_a` for `Plus`, `T'_a = T_a^{-1}` for `Minus`.
    Twist(i64, Sign),
    /// `O(mC) (x) -`.
    TensorOC(i64),
    /// `[n]`, acting on `K0` by `(-1)^n`.
    Shift(i64),
}

impl TwistGenerator {
    pub fn inverse(self) -> TwistGenerator {
        match self {
            TwistGenerator::Twist(a, s) => TwistGenerator::Twist(a, s.flip()),
            TwistGenerator::TensorOC(m) => TwistGenerator::TensorOC(-m),
            TwistGenerator::Shift(n) => TwistGenerator::Shift(-n),
        }
    }

    pub fn apply(&self, v: &KClass) -> Result<KClass> {
        match *self {
            TwistGenerator::Twist(a, s) => twist_on_class(a, s, v),
            TwistGenerator::TensorOC(m) => {
                require_sigma2(v)?;
                tensor_line_bundle(v, &PicClass::new(Surface::Sigma2, m, 0))
            }
            TwistGenerator::Shift(n) => {
                if n % 2 == 0 {
                    Ok(*v)
                } else {
                    v.checked_neg()
                }
            }
        }
    }

    /// Matrix in the standard basis of `K0(Sigma2)`.
    pub fn matrix(&self) -> Result<KMatrix> {
        let cols = standard_classes(Surface::Sigma2)
            .iter()
            .map(|e| to_standard_coords(&self.apply(e)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat4::from_columns([cols[0], cols[1], cols[2], cols[3]]))
    }

    pub fn is_twist(&self) -> bool {
        matches!(self, TwistGenerator::Twist(..))
    }
}

impl fmt::Display for TwistGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistGenerator::Twist(a, Sign::Plus) => write!(f, "T{a}"),
            TwistGenerator::Twist(a, Sign::Minus) => write!(f, "T'{a}"),
            TwistGenerator::TensorOC(m) => write!(f, "O({m}C)"),
            TwistGenerator::Shift(n) => write!(f, "[{n}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TwistWord {
    pub gens: Vec<TwistGenerator>,
}

impl TwistWord {
    pub fn new(gens: Vec<TwistGenerator>) -> Self {
        TwistWord { gens }
    }

    pub fn identity() -> Self {
        TwistWord::default()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self . other`.
    pub fn compose(&self, other: &TwistWord) -> TwistWord {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        TwistWord { gens }
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord { gens: self.gens.iter().rev().map(|g| g.inverse()).collect() }
    }

    pub fn apply(&self, v: &KClass) -> Result<KClass> {
        self.gens.iter().rev().try_fold(*v, |acc, g| g.apply(&acc))
    }

    pub fn twist_count(&self) -> usize {
        self.gens.iter().filter(|g| g.is_twist()).count()
    }

    pub fn total_shift(&self) -> Result<i64> {
        self.gens.iter().try_fold(0i64, |acc, g| match g {
            TwistGenerator::Shift(n) => checked::add(acc, *n),
            _ => Ok(acc),
        })
    }
}

impl From<Vec<TwistGenerator>> for TwistWord {
    fn from(gens: Vec<TwistGenerator>) -> Self {
        TwistWord::new(gens)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn require_sigma2(v: &KClass) -> Result<()> {
    if v.surface() == Surface::Sigma2 {
        Ok(())
    } else {
        Err(Error::WrongSurface { expected: Surface::Sigma2, got: v.surface() })
    }
}

/// `T_a v = v - chi(alpha, v) alpha` and `T'_a v = v - chi(v, alpha) alpha`
/// with `alpha = [O_C(a)]`.
pub fn twist_on_class(a: i64, sign: Sign, v: &KClass) -> Result<KClass> {
    require_sigma2(v)?;
    let alpha = class_of_oc(a)?;
    let coeff = match sign {
        Sign::Plus => euler_pairing(&alpha, v)?,
        Sign::Minus => euler_pairing(v, &alpha)?,
    };
    v.minus_multiple(coeff, &alpha)
}

pub fn word_matrix(w: &TwistWord) -> Result<KMatrix> {
    w.gens.iter().try_fold(Mat4::IDENTITY, |acc, g| acc.mul(&g.matrix()?))
}

pub fn is_k0_trivial(w: &TwistWord) -> Result<bool> {
    Ok(word_matrix(w)?.is_identity())
}

/// Conjugation by the derived dual:
/// `(T_a -)^dual = T'_{-2-a}(-^dual)`, `O(mC)^dual = O(-mC)`, `[n] -> [-n]`.
pub fn dual_conjugate(w: &TwistWord) -> TwistWord {
    let gens = w
        .gens
        .iter()
        .map(|g| match *g {
            TwistGenerator::Twist(a, s) => TwistGenerator::Twist(-2 - a, s.flip()),
            TwistGenerator::TensorOC(m) => TwistGenerator::TensorOC(-m),
            TwistGenerator::Shift(n) => TwistGenerator::Shift(-n),
        })
        .collect();
    TwistWord { gens }
}

/// `T_a^{exponent}` with `exponent = +-2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Square {
    pub a: i64,
    pub exponent: i8,
}

impl Square {
    pub fn new(a: i64, sign: Sign) -> Self {
        Square { a, exponent: 2 * sign.as_i64() as i8 }
    }

    pub fn sign(&self) -> Sign {
        if self.exponent > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn inverse(self) -> Square {
        Square { a: self.a, exponent: -self.exponent }
    }

    fn generators(&self) -> [TwistGenerator; 2] {
        let g = TwistGenerator::Twist(self.a, self.sign());
        [g, g]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Tensor(i64),
    Square(Square),
}

impl Token {
    fn inverse(self) -> Token {
        match self {
            Token::Tensor(m) => Token::Tensor(-m),
            Token::Square(s) => Token::Square(s.inverse()),
        }
    }
}

fn tokens_to_word(tokens: &[Token]) -> TwistWord {
    let mut gens = Vec::with_capacity(2 * tokens.len());
    for t in tokens {
        match t {
            Token::Tensor(m) => gens.push(TwistGenerator::TensorOC(*m)),
            Token::Square(s) => gens.extend(s.generators()),
        }
    }
    TwistWord { gens }
}

/// `T_a T_b` as a word in `O(C)` and squares.
fn pair_tokens(a: i64, b: i64) -> Result<Vec<Token>> {
    if a <= b {
        // T_a T_b = (T_a T_{a+1}) (T'_{a+1})^2 (T_{a+1} T_b)
        let gap = checked::sub(b, a)?;
        let mut out = Vec::with_capacity(2 * gap as usize + 1);
        let mut c = a;
        while c < b {
            out.push(Token::Tensor(1));
            out.push(Token::Square(Square::new(c + 1, Sign::Minus)));
            c += 1;
        }
        out.push(Token::Square(Square::new(b, Sign::Plus)));
        Ok(out)
    } else {
        // T_a T_b = T_a^2 (T_b T_a)^{-1} T_b^2
        let mut out = vec![Token::Square(Square::new(a, Sign::Plus))];
        out.extend(pair_tokens(b, a)?.into_iter().rev().map(Token::inverse));
        out.push(Token::Square(Square::new(b, Sign::Plus)));
        Ok(out)
    }
}

/// Moves every tensor factor to the far left using
/// `T_a^{+-2} O(jC) = O(jC) T_{a+2j}^{+-2}`.
fn collect_tensors(tokens: &[Token]) -> Result<(i64, Vec<Square>)> {
    let mut right = 0i64;
    let mut squares = VecDeque::with_capacity(tokens.len());
    for t in tokens.iter().rev() {
        match *t {
            Token::Tensor(j) => right = checked::add(right, j)?,
            Token::Square(s) => {
                let a = checked::add(s.a, checked::mul(2, right)?)?;
                push_front_reduced(&mut squares, Square { a, exponent: s.exponent });
            }
        }
    }
    Ok((right, squares.into()))
}

fn push_front_reduced(squares: &mut VecDeque<Square>, s: Square) {
    if squares.front() == Some(&s.inverse()) {
        squares.pop_front();
    } else {
        squares.push_front(s);
    }
}

/// A word in `{O(C), T_c^{+-2}}` with the same `K0` matrix as `T_a T_b`
/// (and equal to it under the twist relations).
pub fn rewrite_pair(a: i64, b: i64) -> Result<TwistWord> {
    Ok(tokens_to_word(&pair_tokens(a, b)?))
}

/// The odd anchor used by [`normalize`].
pub const ODD_ANCHOR: i64 = 0;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm {
    pub m: i64,
    pub has_odd_twist: bool,
    pub odd_anchor: i64,
    /// Rightmost factors, listed outermost first like a word.
    pub squares: Vec<Square>,
    /// Total shift; shifts are central so they never interleave.
    pub shift: i64,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm { m: 0, has_odd_twist: false, odd_anchor: ODD_ANCHOR, squares: vec![], shift: 0 }
    }

    pub fn shift_parity(&self) -> bool {
        self.shift % 2 != 0
    }

    /// `O(mC) . [T_{a0}] . squares . [shift]`.
    pub fn to_word(&self) -> TwistWord {
        let mut gens = Vec::with_capacity(2 * self.squares.len() + 3);
        if self.m != 0 {
            gens.push(TwistGenerator::TensorOC(self.m));
        }
        if self.has_odd_twist {
            gens.push(TwistGenerator::Twist(self.odd_anchor, Sign::Plus));
        }
        for s in &self.squares {
            gens.extend(s.generators());
        }
        if self.shift != 0 {
            gens.push(TwistGenerator::Shift(self.shift));
        }
        TwistWord { gens }
    }
}

/// `O(mC) . [T_x] . squares`, built up by left multiplication.
struct Accumulator {
    m: i64,
    odd: Option<i64>,
    squares: VecDeque<Square>,
    shift: i64,
}

impl Accumulator {
    fn prepend_squares(&mut self, qs: Vec<Square>) {
        for s in qs.into_iter().rev() {
            push_front_reduced(&mut self.squares, s);
        }
    }

    fn left_mul(&mut self, g: TwistGenerator) -> Result<()> {
        match g {
            TwistGenerator::Shift(n) => self.shift = checked::add(self.shift, n)?,
            TwistGenerator::TensorOC(k) => self.m = checked::add(self.m, k)?,
            // T'_c = T_{c+1} O(-C)
            TwistGenerator::Twist(c, Sign::Minus) => {
                self.left_mul(TwistGenerator::TensorOC(-1))?;
                self.left_mul(TwistGenerator::Twist(checked::add(c, 1)?, Sign::Plus))?;
            }
            TwistGenerator::Twist(c, Sign::Plus) => {
                // T_c O(mC) = O(mC) T_{c+2m}
                let c = checked::add(c, checked::mul(2, self.m)?)?;
                match self.odd.take() {
                    None => self.odd = Some(c),
                    Some(x) => {
                        let (k, qs) = collect_tensors(&pair_tokens(c, x)?)?;
                        self.m = checked::add(self.m, k)?;
                        self.prepend_squares(qs);
                    }
                }
            }
        }
        Ok(())
    }

    /// Rewrites `T_x` as `O(-xC) T_0 S` with `S = T'_0^2 (T_0 T_{-x}) O(xC)`.
    fn move_anchor(&mut self) -> Result<()> {
        let Some(x) = self.odd else { return Ok(()) };
        if x == ODD_ANCHOR {
            return Ok(());
        }
        debug_assert_eq!(ODD_ANCHOR, 0);
        let mut tokens = vec![Token::Square(Square::new(0, Sign::Minus))];
        tokens.extend(pair_tokens(0, checked::neg(x)?)?);
        tokens.push(Token::Tensor(x));
        let (k, qs) = collect_tensors(&tokens)?;
        debug_assert_eq!(k, 0);
        self.m = checked::sub(self.m, x)?;
        self.odd = Some(ODD_ANCHOR);
        self.prepend_squares(qs);
        Ok(())
    }
}

pub fn normalize(w: &TwistWord) -> Result<NormalForm> {
    let mut acc = Accumulator { m: 0, odd: None, squares: VecDeque::new(), shift: 0 };
    for g in w.gens.iter().rev() {
        acc.left_mul(*g)?;
    }
    acc.move_anchor()?;
    Ok(NormalForm {
        m: acc.m,
        has_odd_twist: acc.odd.is_some(),
        odd_anchor: ODD_ANCHOR,
        squares: acc.squares.into(),
        shift: acc.shift,
    })
}
