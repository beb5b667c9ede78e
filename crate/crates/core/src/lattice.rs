//! Picard and Grothendieck lattices of the two surfaces.
//!
//! On `Sigma2` a divisor class is `aC + bf` with `C^2 = -2`, `f^2 = 0`,
//! `C.f = 1` and `K = -2C - 4f`. On the quadric `P1 x P1` it is a bidegree
//! `(d1, d2)` with `(d1,d2).(e1,e2) = d1 e2 + d2 e1` and `K = (-2,-2)`.
//!
//! A K0 class is stored as `(rank, c1, chi)` where `chi = chi(O, E)`. The
//! second Chern character then satisfies `ch2 = chi - rank + K.c1 / 2`, so
//! `2 ch2` is always an integer and is the only place a half-integer shows up.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{checked, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Surface {
    /// The Hirzebruch surface of degree two.
    Sigma2,
    /// `P1 x P1`, the generic fibre of the degeneration to `Sigma2`.
    Quadric,
}

impl Surface {
    pub const ALL: [Surface; 2] = [Surface::Sigma2, Surface::Quadric];

    pub fn canonical_class(self) -> PicClass {
        match self {
            Surface::Sigma2 => PicClass::new(self, -2, -4),
            Surface::Quadric => PicClass::new(self, -2, -2),
        }
    }

    /// `chi(O_X)`, which is 1 for both (rational) surfaces.
    pub fn chi_o(self) -> i64 {
        1
    }

    fn form(self, (a1, b1): (i64, i64), (a2, b2): (i64, i64)) -> Result<i64> {
        let cross = checked::add(checked::mul(a1, b2)?, checked::mul(a2, b1)?)?;
        match self {
            Surface::Sigma2 => checked::sub(cross, checked::mul(2, checked::mul(a1, a2)?)?),
            Surface::Quadric => Ok(cross),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Surface::Sigma2 => "sigma2",
            Surface::Quadric => "quadric",
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Surface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sigma2" => Ok(Surface::Sigma2),
            "quadric" => Ok(Surface::Quadric),
            other => Err(Error::Json(format!("unknown surface {other:?}"))),
        }
    }
}

/// A divisor class: `aC + bf` on `Sigma2`, bidegree `(a, b)` on the quadric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PicClass {
    pub surface: Surface,
    pub a: i64,
    pub b: i64,
}

impl PicClass {
    pub const fn new(surface: Surface, a: i64, b: i64) -> Self {
        PicClass { surface, a, b }
    }

    pub const fn zero(surface: Surface) -> Self {
        PicClass::new(surface, 0, 0)
    }

    /// The negative curve `C` on `Sigma2`.
    pub const fn curve() -> Self {
        PicClass::new(Surface::Sigma2, 1, 0)
    }

    /// The fibre class `f` on `Sigma2`.
    pub const fn fibre() -> Self {
        PicClass::new(Surface::Sigma2, 0, 1)
    }

    pub fn coeffs(&self) -> (i64, i64) {
        (self.a, self.b)
    }

    pub fn checked_add(&self, other: &PicClass) -> Result<PicClass> {
        same_surface(self.surface, other.surface)?;
        Ok(PicClass::new(self.surface, checked::add(self.a, other.a)?, checked::add(self.b, other.b)?))
    }

    pub fn checked_sub(&self, other: &PicClass) -> Result<PicClass> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_neg(&self) -> Result<PicClass> {
        Ok(PicClass::new(self.surface, checked::neg(self.a)?, checked::neg(self.b)?))
    }

    pub fn checked_scale(&self, k: i64) -> Result<PicClass> {
        Ok(PicClass::new(self.surface, checked::mul(self.a, k)?, checked::mul(self.b, k)?))
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.surface {
            Surface::Sigma2 => write!(f, "{}C{:+}f", self.a, self.b),
            Surface::Quadric => write!(f, "({},{})", self.a, self.b),
        }
    }
}

pub(crate) fn same_surface(s: Surface, t: Surface) -> Result<()> {
    if s == t {
        Ok(())
    } else {
        Err(Error::SurfaceMismatch(s, t))
    }
}

/// The intersection pairing on `Pic`.
pub fn intersect(d1: &PicClass, d2: &PicClass) -> Result<i64> {
    same_surface(d1.surface, d2.surface)?;
    d1.surface.form(d1.coeffs(), d2.coeffs())
}

/// An element of `K0` as `(rank, c1, chi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KClass {
    pub rank: i64,
    pub c1: PicClass,
    pub chi: i64,
}

impl KClass {
    pub const fn new(rank: i64, c1: PicClass, chi: i64) -> Self {
        KClass { rank, c1, chi }
    }

    pub const fn zero(surface: Surface) -> Self {
        KClass::new(0, PicClass::zero(surface), 0)
    }

    pub fn surface(&self) -> Surface {
        self.c1.surface
    }

    /// Coordinates `(rank, a, b, chi)`.
    pub fn coords(&self) -> [i64; 4] {
        [self.rank, self.c1.a, self.c1.b, self.chi]
    }

    pub fn from_coords(surface: Surface, [rank, a, b, chi]: [i64; 4]) -> Self {
        KClass::new(rank, PicClass::new(surface, a, b), chi)
    }

    /// `2 ch2 = 2 chi - 2 rank chi(O) + K.c1`.
    pub fn twice_ch2(&self) -> Result<i64> {
        let s = self.surface();
        let k_c1 = intersect(&s.canonical_class(), &self.c1)?;
        let two_chi = checked::mul(2, self.chi)?;
        let two_r = checked::mul(2, checked::mul(self.rank, s.chi_o())?)?;
        checked::add(checked::sub(two_chi, two_r)?, k_c1)
    }

    /// Inverse of [`KClass::twice_ch2`]: builds the class with the given
    /// rank, `c1` and doubled `ch2`.
    pub fn from_twice_ch2(rank: i64, c1: PicClass, twice_ch2: i64) -> Result<Self> {
        let s = c1.surface;
        let k_c1 = intersect(&s.canonical_class(), &c1)? as i128;
        let two_r = 2 * rank as i128 * s.chi_o() as i128;
        let two_chi = checked::add128(checked::add128(twice_ch2 as i128, two_r)?, -k_c1)?;
        Ok(KClass::new(rank, c1, checked::narrow(checked::halve(two_chi)?)?))
    }

    pub fn checked_add(&self, other: &KClass) -> Result<KClass> {
        Ok(KClass::new(
            checked::add(self.rank, other.rank)?,
            self.c1.checked_add(&other.c1)?,
            checked::add(self.chi, other.chi)?,
        ))
    }

    pub fn checked_sub(&self, other: &KClass) -> Result<KClass> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_neg(&self) -> Result<KClass> {
        Ok(KClass::new(checked::neg(self.rank)?, self.c1.checked_neg()?, checked::neg(self.chi)?))
    }

    pub fn checked_scale(&self, k: i64) -> Result<KClass> {
        Ok(KClass::new(checked::mul(self.rank, k)?, self.c1.checked_scale(k)?, checked::mul(self.chi, k)?))
    }

    /// `self - k * other`, the shape of every reflection and mutation.
    pub fn minus_multiple(&self, k: i64, other: &KClass) -> Result<KClass> {
        self.checked_sub(&other.checked_scale(k)?)
    }

    /// `v` and `-v` represent the same class up to an odd shift.
    pub fn eq_up_to_sign(&self, other: &KClass) -> bool {
        if self == other {
            return true;
        }
        matches!(other.checked_neg(), Ok(n) if &n == self)
    }

    /// Representative of `{v, -v}` with the first nonzero coordinate positive.
    pub fn sign_normalized(&self) -> KClass {
        match self.coords().iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => self.checked_neg().unwrap_or(*self),
            _ => *self,
        }
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[r={}, c1={}, chi={}]", self.rank, self.c1, self.chi)
    }
}

/// `[O(d)]`, with `chi` given by Riemann-Roch `chi(O) + d.(d - K)/2`.
pub fn class_of_line_bundle(d: &PicClass) -> Result<KClass> {
    let d_sq = intersect(d, d)?;
    KClass::from_twice_ch2(1, *d, d_sq)
}

/// `[O_C(a)] = [O(af)] - [O(af - C)]`.
pub fn class_of_oc(a: i64) -> Result<KClass> {
    let af = PicClass::new(Surface::Sigma2, 0, a);
    let shifted = af.checked_sub(&PicClass::curve())?;
    class_of_line_bundle(&af)?.checked_sub(&class_of_line_bundle(&shifted)?)
}

/// The Euler pairing `chi(v, w) = sum (-1)^i dim Ext^i`, via Riemann-Roch
/// applied to `v^dual . w`.
pub fn euler_pairing(v: &KClass, w: &KClass) -> Result<i64> {
    let s = v.surface();
    same_surface(s, w.surface())?;
    let k = s.canonical_class();
    let (rv, rw) = (v.rank as i128, w.rank as i128);
    let (hv, hw) = (v.twice_ch2()? as i128, w.twice_ch2()? as i128);
    let k_cv = intersect(&k, &v.c1)? as i128;
    let k_cw = intersect(&k, &w.c1)? as i128;
    let cv_cw = intersect(&v.c1, &w.c1)? as i128;
    let chi_o = s.chi_o() as i128;

    // c1(v^dual w) = rv cw - rw cv, 2 ch2(v^dual w) = rv hw + rw hv - 2 cv.cw
    let k_c1 = checked::add128(checked::mul128(rv, k_cw)?, -checked::mul128(rw, k_cv)?)?;
    let twice_ch2 = checked::add128(
        checked::add128(checked::mul128(rv, hw)?, checked::mul128(rw, hv)?)?,
        -checked::mul128(2, cv_cw)?,
    )?;
    let rank_term = checked::mul128(2, checked::mul128(checked::mul128(rv, rw)?, chi_o)?)?;
    let twice = checked::add128(checked::add128(rank_term, -k_c1)?, twice_ch2)?;
    checked::narrow(checked::halve(twice)?)
}

/// Derived dual: rank kept, `c1` negated, `ch2` kept.
pub fn dual_class(v: &KClass) -> Result<KClass> {
    KClass::from_twice_ch2(v.rank, v.c1.checked_neg()?, v.twice_ch2()?)
}

/// `v . [O(d)]`.
pub fn tensor_line_bundle(v: &KClass, d: &PicClass) -> Result<KClass> {
    same_surface(v.surface(), d.surface)?;
    let r = v.rank;
    let h = v.twice_ch2()?;
    // ch2 += c1.d + r d^2 / 2
    let c1_d = intersect(&v.c1, d)?;
    let d_sq = intersect(d, d)?;
    let h_new = checked::add(h, checked::add(checked::mul(2, c1_d)?, checked::mul(r, d_sq)?)?)?;
    let c1_new = v.c1.checked_add(&d.checked_scale(r)?)?;
    KClass::from_twice_ch2(r, c1_new, h_new)
}

/// Serre duality at the level of classes: `chi(v, w) = chi(w, v . K)`.
pub fn serre_pair_check(v: &KClass, w: &KClass) -> Result<bool> {
    let k = v.surface().canonical_class();
    Ok(euler_pairing(v, w)? == euler_pairing(w, &tensor_line_bundle(v, &k)?)?)
}
