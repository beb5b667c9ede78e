use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{checked, Error, Result};

/// A 4x4 integer matrix acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat4(pub [[i64; 4]; 4]);

pub type KMatrix = Mat4;

impl Mat4 {
    pub const IDENTITY: Mat4 = Mat4([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);

    pub fn from_columns(cols: [[i64; 4]; 4]) -> Self {
        let mut m = [[0; 4]; 4];
        for (j, col) in cols.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                m[i][j] = x;
            }
        }
        Mat4(m)
    }

    pub fn column(&self, j: usize) -> [i64; 4] {
        [self.0[0][j], self.0[1][j], self.0[2][j], self.0[3][j]]
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat4::IDENTITY
    }

    pub fn transpose(&self) -> Mat4 {
        let mut m = [[0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = self.0[j][i];
            }
        }
        Mat4(m)
    }

    pub fn scaled(&self, k: i64) -> Result<Mat4> {
        let mut m = self.0;
        for x in m.iter_mut().flatten() {
            *x = checked::mul(*x, k)?;
        }
        Ok(Mat4(m))
    }

    pub fn mul(&self, rhs: &Mat4) -> Result<Mat4> {
        let mut m = [[0i64; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                let mut acc = 0i64;
                for k in 0..4 {
                    acc = checked::add(acc, checked::mul(self.0[i][k], rhs.0[k][j])?)?;
                }
                *out = acc;
            }
        }
        Ok(Mat4(m))
    }

    pub fn apply(&self, v: &[i64; 4]) -> Result<[i64; 4]> {
        let mut out = [0i64; 4];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = 0i64;
            for (k, &x) in v.iter().enumerate() {
                acc = checked::add(acc, checked::mul(self.0[i][k], x)?)?;
            }
            *o = acc;
        }
        Ok(out)
    }

    fn minor(&self, row: usize, col: usize) -> [[i128; 3]; 3] {
        let mut m = [[0i128; 3]; 3];
        for (mi, i) in (0..4).filter(|&i| i != row).enumerate() {
            for (mj, j) in (0..4).filter(|&j| j != col).enumerate() {
                m[mi][mj] = self.0[i][j] as i128;
            }
        }
        m
    }

    fn det3(m: &[[i128; 3]; 3]) -> Result<i128> {
        let term = |a: i128, b: i128, c: i128, d: i128, e: i128| -> Result<i128> {
            let bc = checked::mul128(b, c)?;
            let de = checked::mul128(d, e)?;
            checked::mul128(a, checked::add128(bc, -de)?)
        };
        let t0 = term(m[0][0], m[1][1], m[2][2], m[1][2], m[2][1])?;
        let t1 = term(m[0][1], m[1][0], m[2][2], m[1][2], m[2][0])?;
        let t2 = term(m[0][2], m[1][0], m[2][1], m[1][1], m[2][0])?;
        checked::add128(checked::add128(t0, -t1)?, t2)
    }

    fn cofactor(&self, i: usize, j: usize) -> Result<i128> {
        let d = Self::det3(&self.minor(i, j))?;
        Ok(if (i + j).is_multiple_of(2) { d } else { -d })
    }

    /// Cofactor expansion along the first row, exact in `i128`.
    pub fn det(&self) -> Result<i128> {
        let mut acc = 0i128;
        for j in 0..4 {
            acc = checked::add128(acc, checked::mul128(self.0[0][j] as i128, self.cofactor(0, j)?)?)?;
        }
        Ok(acc)
    }

    /// Inverse of a unimodular matrix via the adjugate.
    pub fn inverse(&self) -> Result<Mat4> {
        let det = self.det()?;
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular(det));
        }
        let mut m = [[0i64; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = checked::narrow(self.cofactor(j, i)? * det)?;
            }
        }
        Ok(Mat4(m))
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.iter().map(|r| format!("{r:?}")).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let m = Mat4([[1, 2, 4, 6], [0, 1, 2, 4], [0, 0, 1, 2], [0, 0, 0, 1]]);
        assert_eq!(m.det().unwrap(), 1);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());

        let p = Mat4([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
        assert_eq!(p.det().unwrap(), 1);
        let swap = Mat4([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(swap.det().unwrap(), -1);
        assert_eq!(swap.inverse().unwrap(), swap);
    }

    #[test]
    fn non_unimodular_inverse_fails() {
        let m = Mat4::IDENTITY.scaled(2).unwrap();
        assert_eq!(m.det().unwrap(), 16);
        assert_eq!(m.inverse(), Err(Error::NotUnimodular(16)));
    }

    #[test]
    fn columns_round_trip() {
        let cols = [[1, 2, 3, 4], [5, 6, 7, 8], [9, 10, 11, 12], [13, 14, 15, 16]];
        let m = Mat4::from_columns(cols);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(&m.column(j), c);
        }
        assert_eq!(m.transpose().0, cols);
    }
}
