//! Fixed-size (2×2 and 4×4) dense matrices over either scalar tower.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalars::{ComplexFloat, ExactComplex, Scalar};

/// Which member of the conjugation family to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarKind {
    Conjugate,
    Transpose,
    Adjoint,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

pub type ExactMatrix = Matrix<ExactComplex>;
pub type FloatMatrix = Matrix<ComplexFloat>;

fn check_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 4 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(dim))
    }
}

impl<T: Scalar> Matrix<T> {
    /// Builds a matrix from row-major entries.
    pub fn from_vec(dim: usize, data: Vec<T>) -> Result<Self> {
        check_dim(dim)?;
        if data.len() != dim * dim {
            return Err(Error::MalformedMatrix { expected: dim * dim, actual: data.len() });
        }
        Ok(Matrix { dim, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let data: Vec<T> = rows.into_iter().flatten().collect();
        Matrix::from_vec(dim, data)
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        check_dim(dim)?;
        let data = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Ok(Matrix { dim, data })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Matrix::from_fn(dim, |_, _| T::zero())
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Matrix::from_fn(dim, |r, c| if r == c { T::one() } else { T::zero() })
    }

    /// Assembles a 4×4 matrix from four 2×2 blocks `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        for blk in [a, b, c, d] {
            if blk.dim != 2 {
                return Err(Error::DimensionMismatch { left: 2, right: blk.dim });
            }
        }
        Matrix::from_fn(4, |r, col| {
            let blk = match (r / 2, col / 2) {
                (0, 0) => a,
                (0, _) => b,
                (_, 0) => c,
                _ => d,
            };
            blk.get(r % 2, col % 2).clone()
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.dim + col]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.dim)
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.dim, right: other.dim })
        }
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let n = self.dim;
        Matrix::from_fn(n, |r, c| (0..n).fold(T::zero(), |acc, k| acc.add(&self.get(r, k).mul(other.get(k, c)))))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { dim: self.dim, data })
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Ok(Matrix { dim: self.dim, data })
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| k.mul(x))
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Matrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    pub fn conjugate(&self) -> Self {
        self.map(Scalar::conj)
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        Matrix { dim: n, data: (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect() }
    }

    pub fn adjoint(&self) -> Self {
        self.transpose().conjugate()
    }

    pub fn star(&self, kind: StarKind) -> Self {
        match kind {
            StarKind::Conjugate => self.conjugate(),
            StarKind::Transpose => self.transpose(),
            StarKind::Adjoint => self.adjoint(),
        }
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, k| acc.add(self.get(k, k)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows()
            .enumerate()
            .all(|(r, row)| row.iter().enumerate().all(|(c, x)| if r == c { *x == T::one() } else { x.is_zero() }))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: v.len() });
        }
        Ok(self.rows().map(|row| row.iter().zip(v).fold(T::zero(), |acc, (a, x)| acc.add(&a.mul(x)))).collect())
    }
}

impl ExactMatrix {
    /// Inverse by Gauss-Jordan elimination over the Gaussian rationals.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a: Vec<Vec<ExactComplex>> = self.rows().map(<[_]>::to_vec).collect();
        let mut inv: Vec<Vec<ExactComplex>> = (0..n)
            .map(|r| (0..n).map(|c| if r == c { ExactComplex::one() } else { ExactComplex::zero() }).collect())
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] = &a[col][c] / &p;
                inv[col][c] = &inv[col][c] / &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                    inv[r][c] = &inv[r][c] - &(&f * &inv[col][c]);
                }
            }
        }
        Matrix::from_rows(inv)
    }

    pub fn to_float(&self) -> FloatMatrix {
        Matrix { dim: self.dim, data: self.data.iter().map(ExactComplex::to_float).collect() }
    }
}

impl FloatMatrix {
    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.same_dim(other)?;
        Ok(self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    pub fn apply4(&self, v: &[ComplexFloat; 4]) -> [ComplexFloat; 4] {
        debug_assert_eq!(self.dim, 4);
        std::array::from_fn(|r| (0..4).map(|c| self.get(r, c) * v[c]).sum())
    }
}

macro_rules! binary_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        /// Panics on dimension mismatch; the fallible form is the named method.
        impl<T: Scalar> $tr<&Matrix<T>> for &Matrix<T> {
            type Output = Matrix<T>;
            fn $method(self, rhs: &Matrix<T>) -> Matrix<T> {
                self.$inner(rhs).expect("matrix dimension mismatch")
            }
        }
        impl<T: Scalar> $tr<Matrix<T>> for Matrix<T> {
            type Output = Matrix<T>;
            fn $method(self, rhs: Matrix<T>) -> Matrix<T> {
                (&self).$method(&rhs)
            }
        }
    };
}
binary_op!(Mul, mul, product);
binary_op!(Add, add, sum);
binary_op!(Sub, sub, difference);

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(Scalar::neg)
    }
}

impl<T: Scalar> Neg for Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        -&self
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (r, row) in cells.chunks(self.dim).enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.dim)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(rows: &[&[(i64, i64)]]) -> ExactMatrix {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&(a, b)| ExactComplex::from_ints(a, b)).collect()).collect(),
        )
        .unwrap()
    }

    fn sigma_x() -> ExactMatrix {
        ex(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]])
    }
    fn sigma_y() -> ExactMatrix {
        ex(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]])
    }
    fn sigma_z() -> ExactMatrix {
        ex(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]])
    }

    #[test]
    fn pauli_product() {
        // σx σy = i σz, multiplied out by hand from the 2×2 entries.
        let lhs = &sigma_x() * &sigma_y();
        assert_eq!(lhs, sigma_z().scale(&ExactComplex::i()));
    }

    #[test]
    fn identity_is_neutral() {
        let m = ex(&[&[(1, 2), (3, -1)], &[(0, 5), (-7, 0)]]);
        let id = ExactMatrix::identity(2).unwrap();
        assert_eq!(&id * &m, m);
        assert_eq!(&m * &id, m);
        assert_eq!(id.transpose(), id);
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert_eq!(ExactMatrix::identity(3).unwrap_err(), Error::UnsupportedDimension(3));
        let a = ExactMatrix::identity(2).unwrap();
        let b = ExactMatrix::identity(4).unwrap();
        assert_eq!(a.product(&b).unwrap_err(), Error::DimensionMismatch { left: 2, right: 4 });
        assert!(matches!(
            ExactMatrix::from_vec(2, vec![ExactComplex::zero(); 3]),
            Err(Error::MalformedMatrix { expected: 4, actual: 3 })
        ));
        let f = FloatMatrix::identity(2).unwrap();
        assert!(f.max_abs_diff(&FloatMatrix::identity(4).unwrap()).is_err());
    }

    #[test]
    fn inverse_of_i_times_matrix() {
        // (i M)(−i M) = M² = I for an involution M.
        let m = ex(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]);
        let im = m.scale(&ExactComplex::i());
        assert_eq!(im.inverse().unwrap(), m.scale(&ExactComplex::from_ints(0, -1)));
        assert_eq!(ExactMatrix::identity(4).unwrap().inverse().unwrap(), ExactMatrix::identity(4).unwrap());
    }

    #[test]
    fn singular_inverse_is_domain_error() {
        let m = ex(&[&[(1, 1), (2, 2)], &[(1, 0), (2, 0)]]);
        assert_eq!(m.inverse().unwrap_err(), Error::Singular);
    }

    #[test]
    fn max_abs_diff_cases() {
        let id = FloatMatrix::identity(4).unwrap();
        assert_eq!(id.max_abs_diff(&id).unwrap(), 0.0);
        let two = id.scale(&ComplexFloat::new(2.0, 0.0));
        assert_eq!(id.max_abs_diff(&two).unwrap(), 1.0);
    }

    #[test]
    fn star_family() {
        let m = ex(&[&[(1, 2), (3, -1)], &[(0, 5), (-7, 0)]]);
        assert_eq!(m.star(StarKind::Adjoint), m.conjugate().transpose());
        assert_eq!(m.star(StarKind::Transpose).get(0, 1), m.get(1, 0));
        assert_eq!(m.star(StarKind::Conjugate).get(0, 0), &ExactComplex::from_ints(1, -2));
    }
}
