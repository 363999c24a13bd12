use std::fmt;

use super::field::{FieldSpec, Scalar};
use super::matrix::Matrix;
use super::vector;
use crate::error::{Error, Result};

/// A linear subspace of `field^ambient_dim`.
///
/// The basis is kept in reduced row echelon form with no zero rows, so two
/// subspaces are equal as sets exactly when their basis matrices are equal,
/// and the derived `PartialEq`/`Hash` are set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonical span of arbitrary generators (zero vectors allowed).
    pub fn span<I>(field: FieldSpec, ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let rows: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        Self::from_matrix(&Matrix::from_rows(field, ambient_dim, rows))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let r = m.rref();
        let rows = r.matrix.row_vectors().take(r.rank).map(<[Scalar]>::to_vec).collect();
        Subspace {
            basis: Matrix::from_rows(m.field(), m.cols(), rows),
            pivots: r.pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// The canonical RREF basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the basis read off at the pivot
    /// columns; the result vanishes at every pivot.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim(), "vector length mismatch");
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = -&out[p];
            vector::axpy(&mut out, &c, self.basis.row(r));
        }
        out
    }

    /// Panics when `v` has the wrong length.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Coefficients of `v` in the canonical basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `sum_r coeffs[r] * basis_r`.
    pub fn combination(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = vector::zeros(self.field(), self.ambient_dim());
        for (r, c) in coeffs.iter().enumerate() {
            vector::axpy(&mut out, c, self.basis.row(r));
        }
        out
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.basis_vectors().all(|v| other.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let vectors = self
            .basis_vectors()
            .chain(other.basis_vectors())
            .map(<[Scalar]>::to_vec);
        Ok(Subspace::span(self.field(), self.ambient_dim(), vectors))
    }

    /// Zassenhaus: row-reduce `[u | u ; w | 0]`; the rows whose left half
    /// vanishes carry a basis of the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient_dim();
        let field = self.field();
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in self.basis_vectors() {
            rows.push(u.iter().chain(u).cloned().collect::<Vec<_>>());
        }
        for w in other.basis_vectors() {
            let mut row = w.to_vec();
            row.extend(vector::zeros(field, n));
            rows.push(row);
        }
        let r = Matrix::from_rows(field, 2 * n, rows).rref();
        let vectors = r
            .matrix
            .row_vectors()
            .take(r.rank)
            .filter(|row| vector::is_zero(&row[..n]))
            .map(|row| row[n..].to_vec());
        Ok(Subspace::span(field, n, vectors))
    }

    /// The canonical complement of `self` inside `outer`: the subspace of
    /// `outer` vanishing at every pivot column of `self`.
    pub fn complement_in(&self, outer: &Subspace) -> Result<Subspace> {
        if !self.is_subspace_of(outer)? {
            return Err(Error::NotContained);
        }
        let reduced = outer.basis_vectors().map(|w| self.reduce(w));
        Ok(Subspace::span(self.field(), self.ambient_dim(), reduced))
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient_dim());
        Subspace::span(
            self.field(),
            map.rows(),
            self.basis_vectors().map(|v| map.mul_vec(v)),
        )
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis_vectors().map(vector::display).collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}
