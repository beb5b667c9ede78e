//! The standard full exceptional collections as bases of `K0`, and the
//! isometry `K0(Sigma2) -> K0(P1 x P1)` that matches them term by term.

use crate::error::{Error, Result};
use crate::lattice::{class_of_line_bundle, KClass, PicClass, Surface};
use crate::matrix::Mat4;

/// Divisors of the standard collection:
/// `O, O(f), O(C+2f), O(C+3f)` on `Sigma2` and
/// `O, O(1,0), O(1,1), O(2,1)` on the quadric.
pub fn standard_divisors(surface: Surface) -> [PicClass; 4] {
    let pairs = match surface {
        Surface::Sigma2 => [(0, 0), (0, 1), (1, 2), (1, 3)],
        Surface::Quadric => [(0, 0), (1, 0), (1, 1), (2, 1)],
    };
    pairs.map(|(a, b)| PicClass::new(surface, a, b))
}

pub fn standard_classes(surface: Surface) -> [KClass; 4] {
    // Riemann-Roch on these small divisors cannot overflow.
    standard_divisors(surface).map(|d| class_of_line_bundle(&d).expect("small divisor"))
}

/// Columns are the `(rank, a, b, chi)` coordinates of the standard classes.
pub fn basis_matrix(surface: Surface) -> Mat4 {
    Mat4::from_columns(standard_classes(surface).map(|c| c.coords()))
}

fn inverse_basis(surface: Surface) -> &'static Mat4 {
    use std::sync::OnceLock;
    static SIGMA2: OnceLock<Mat4> = OnceLock::new();
    static QUADRIC: OnceLock<Mat4> = OnceLock::new();
    let cell = match surface {
        Surface::Sigma2 => &SIGMA2,
        Surface::Quadric => &QUADRIC,
    };
    cell.get_or_init(|| basis_matrix(surface).inverse().expect("standard collection is a basis"))
}

/// Coordinates of `v` in the standard basis.
pub fn to_standard_coords(v: &KClass) -> Result<[i64; 4]> {
    inverse_basis(v.surface()).apply(&v.coords())
}

pub fn from_standard_coords(surface: Surface, x: &[i64; 4]) -> Result<KClass> {
    Ok(KClass::from_coords(surface, basis_matrix(surface).apply(x)?))
}

/// The deformation isometry on `K0`: the `i`-th standard class of `Sigma2`
/// goes to the `i`-th standard class of the quadric.
pub fn gen_isometry(v: &KClass) -> Result<KClass> {
    if v.surface() != Surface::Sigma2 {
        return Err(Error::WrongSurface { expected: Surface::Sigma2, got: v.surface() });
    }
    from_standard_coords(Surface::Quadric, &to_standard_coords(v)?)
}

pub fn gen_isometry_inverse(v: &KClass) -> Result<KClass> {
    if v.surface() != Surface::Quadric {
        return Err(Error::WrongSurface { expected: Surface::Quadric, got: v.surface() });
    }
    from_standard_coords(Surface::Sigma2, &to_standard_coords(v)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_classes_are_bases() {
        for s in Surface::ALL {
            assert_eq!(basis_matrix(s).det().unwrap().abs(), 1);
            for (i, c) in standard_classes(s).iter().enumerate() {
                let mut e = [0; 4];
                e[i] = 1;
                assert_eq!(to_standard_coords(c).unwrap(), e);
            }
        }
    }

    #[test]
    fn gen_on_basis() {
        let o = class_of_line_bundle(&PicClass::zero(Surface::Sigma2)).unwrap();
        let oq = class_of_line_bundle(&PicClass::zero(Surface::Quadric)).unwrap();
        assert_eq!(gen_isometry(&o).unwrap(), oq);
        let of = class_of_line_bundle(&PicClass::fibre()).unwrap();
        let o10 = class_of_line_bundle(&PicClass::new(Surface::Quadric, 1, 0)).unwrap();
        assert_eq!(gen_isometry(&of).unwrap(), o10);
        assert!(gen_isometry(&o10).is_err());
    }
}
