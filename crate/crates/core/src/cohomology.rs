//! Dimensions `h^0, h^1, h^2` of line bundles, computed without
//! Riemann-Roch so they can serve as an oracle for the Euler pairing.
//!
//! On `Sigma2 = P(O + O(2))` with `C` the negative section,
//! `p_* O(aC + bf) = O(b) + O(b - 2) + ... + O(b - 2a)` for `a >= 0` and the
//! higher direct image vanishes for `a >= -1`. Classes with `a <= -2` are
//! handled by Serre duality. On the quadric we use Kunneth.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::{same_surface, PicClass, Surface};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CohomologyDims {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

impl CohomologyDims {
    pub const fn new(h0: u64, h1: u64, h2: u64) -> Self {
        CohomologyDims { h0, h1, h2 }
    }

    pub fn euler_characteristic(&self) -> i128 {
        self.h0 as i128 - self.h1 as i128 + self.h2 as i128
    }

    pub fn get(&self, i: usize) -> u64 {
        match i {
            0 => self.h0,
            1 => self.h1,
            2 => self.h2,
            _ => 0,
        }
    }

    fn serre_dual(self) -> Self {
        CohomologyDims::new(self.h2, self.h1, self.h0)
    }
}

/// `(h^0, h^1)` of `O(n)` on `P1`.
fn p1(n: i64) -> (u64, u64) {
    let n = n as i128;
    if n >= 0 {
        ((n + 1) as u64, 0)
    } else {
        (0, (-n - 1) as u64)
    }
}

fn sigma2(a: i64, b: i64) -> CohomologyDims {
    match a {
        a if a >= 0 => {
            let (h0, h1) = (0..=a).map(|k| p1(b - 2 * k)).fold((0, 0), |(x, y), (h0, h1)| (x + h0, y + h1));
            CohomologyDims::new(h0, h1, 0)
        }
        -1 => CohomologyDims::default(),
        // K - D = (-2 - a) C + (-4 - b) f with -2 - a >= 0
        _ => sigma2(-2 - a, -4 - b).serre_dual(),
    }
}

fn quadric(d1: i64, d2: i64) -> CohomologyDims {
    let (x0, x1) = p1(d1);
    let (y0, y1) = p1(d2);
    CohomologyDims::new(x0 * y0, x0 * y1 + x1 * y0, x1 * y1)
}

pub fn line_bundle_cohomology(d: &PicClass) -> CohomologyDims {
    match d.surface {
        Surface::Sigma2 => sigma2(d.a, d.b),
        Surface::Quadric => quadric(d.a, d.b),
    }
}

/// `dim Ext^i(O(d1), O(d2)) = h^i(O(d2 - d1))`.
pub fn hom_dims_line_bundles(d1: &PicClass, d2: &PicClass) -> Result<CohomologyDims> {
    same_surface(d1.surface, d2.surface)?;
    Ok(line_bundle_cohomology(&d2.checked_sub(d1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::class_of_line_bundle;

    fn s2(a: i64, b: i64) -> PicClass {
        PicClass::new(Surface::Sigma2, a, b)
    }

    #[test]
    fn sanity_anchors() {
        assert_eq!(line_bundle_cohomology(&s2(1, 0)), CohomologyDims::new(1, 1, 0));
        assert_eq!(line_bundle_cohomology(&s2(0, 1)), CohomologyDims::new(2, 0, 0));
        assert_eq!(line_bundle_cohomology(&s2(1, 2)), CohomologyDims::new(4, 0, 0));
        assert_eq!(line_bundle_cohomology(&s2(0, 0)), CohomologyDims::new(1, 0, 0));
        // K = -2C - 4f: h^2 = 1
        assert_eq!(line_bundle_cohomology(&s2(-2, -4)), CohomologyDims::new(0, 0, 1));
    }

    #[test]
    fn minus_one_row_vanishes() {
        for b in -10..=10 {
            assert_eq!(line_bundle_cohomology(&s2(-1, b)), CohomologyDims::default());
        }
    }

    #[test]
    fn ext_examples() {
        assert_eq!(hom_dims_line_bundles(&s2(0, 0), &s2(0, 1)).unwrap(), CohomologyDims::new(2, 0, 0));
        // O(-C-3f) sits in the a = -1 row.
        assert_eq!(hom_dims_line_bundles(&s2(1, 3), &s2(0, 0)).unwrap(), CohomologyDims::default());
        assert_eq!(line_bundle_cohomology(&s2(1, 1)).h0, 2);
        // Ext^2(O(3C+4f), O) = H^0(K + 3C + 4f)^* = H^0(C)^*
        let e = hom_dims_line_bundles(&s2(3, 4), &s2(0, 0)).unwrap();
        assert_eq!(e.h2, 1);
        assert_eq!(e.h2, line_bundle_cohomology(&s2(1, 0)).h0);
        let d = s2(4, -7);
        assert_eq!(hom_dims_line_bundles(&d, &d).unwrap(), CohomologyDims::new(1, 0, 0));
    }

    #[test]
    fn quadric_kunneth() {
        let q = |a, b| PicClass::new(Surface::Quadric, a, b);
        assert_eq!(line_bundle_cohomology(&q(1, 1)), CohomologyDims::new(4, 0, 0));
        assert_eq!(line_bundle_cohomology(&q(-2, 0)), CohomologyDims::new(0, 1, 0));
        assert_eq!(line_bundle_cohomology(&q(-2, -2)), CohomologyDims::new(0, 0, 1));
    }

    #[test]
    fn oracle_matches_riemann_roch_and_serre() {
        for s in Surface::ALL {
            let k = s.canonical_class();
            for a in -20..=20 {
                for b in -20..=20 {
                    let d = PicClass::new(s, a, b);
                    let h = line_bundle_cohomology(&d);
                    let rr = class_of_line_bundle(&d).unwrap().chi as i128;
                    assert_eq!(h.euler_characteristic(), rr, "{s} {d}");
                    let dual = line_bundle_cohomology(&k.checked_sub(&d).unwrap());
                    for i in 0..=2 {
                        assert_eq!(h.get(i), dual.get(2 - i));
                    }
                }
            }
        }
    }
}
