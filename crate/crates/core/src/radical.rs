//! The Jacobson radical via Dickson's trace-form criterion.
//!
//! For `x` in `A`, `x` lies in the radical iff `tr(L_{xy}) = 0` for every
//! `y` in `A`, where `L` is a faithful left regular representation: on `A`
//! itself when `A` has a unit, on the unitalization `A¹` otherwise. Both
//! give the same traces on `A`. The criterion needs characteristic 0 or `p`
//! larger than the dimension of the representation; outside that range
//! [`radical`] refuses with [`Error::UnsupportedCharacteristic`], and callers
//! that know the radical by other means can still go through [`certify`].

use crate::algebra::{Algebra, QuotientMap, Side, SidedIdeal};
use crate::arith::{Matrix, Subspace};
use crate::error::{Error, Result};

/// A certified radical together with the data downstream stages need.
#[derive(Clone, Debug)]
pub struct RadicalData {
    pub radical: SidedIdeal,
    /// Smallest `m >= 1` with `R^m = 0`.
    pub nilpotency_index: usize,
    /// `powers[k] = R^(k+1)`; the last entry is the zero space.
    pub powers: Vec<Subspace>,
    /// Trace form used to find the radical, absent when it was supplied.
    pub gram: Option<Matrix>,
    pub quotient: QuotientMap,
    /// Whether `A/R` was checked to have zero radical. False only when the
    /// trace criterion does not apply to the characteristic.
    pub quotient_semisimple_checked: bool,
}

impl RadicalData {
    pub fn space(&self) -> &Subspace {
        self.radical.space()
    }

    pub fn dim(&self) -> usize {
        self.radical.dim()
    }
}

/// Dimension of the faithful representation the trace form lives on:
/// `dim A` for unital `A`, `dim A + 1` otherwise.
pub fn representation_dim(algebra: &Algebra) -> usize {
    if algebra.find_identity().is_some() {
        algebra.dim()
    } else {
        algebra.dim() + 1
    }
}

/// Rejects characteristics where the trace criterion is unsound for
/// `algebra`.
pub fn check_characteristic(algebra: &Algebra) -> Result<()> {
    let p = algebra.field().characteristic();
    let dim = representation_dim(algebra);
    if p != 0 && p <= dim as u64 {
        return Err(Error::UnsupportedCharacteristic { p, dim });
    }
    Ok(())
}

/// `g_ij = tr(L_{e_i} L_{e_j}) = tr(L_{e_i e_j})`.
pub fn gram_matrix(algebra: &Algebra) -> Matrix {
    let n = algebra.dim();
    let field = algebra.field();
    // the adjoined unit adds nothing to the diagonal of L_{e_k}
    let traces: Vec<_> = (0..n)
        .map(|k| {
            let mut t = field.zero();
            for j in 0..n {
                t = &t + &algebra.basis_product(k, j)[j];
            }
            t
        })
        .collect();
    let mut gram = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut g = field.zero();
            for (c, t) in algebra.basis_product(i, j).iter().zip(&traces) {
                if !c.is_zero() {
                    g = &g + &(c * t);
                }
            }
            gram[(i, j)] = g;
        }
    }
    gram
}

/// The radical as the kernel of the trace form, certified.
pub fn radical(algebra: &Algebra) -> Result<RadicalData> {
    check_characteristic(algebra)?;
    let gram = gram_matrix(algebra);
    let space = gram.kernel();
    let mut data = certify(algebra, space)?;
    data.gram = Some(gram);
    Ok(data)
}

/// `N^k` for `k >= 1`, built as `N^k = span(N^(k-1) N)`.
pub fn ideal_power(algebra: &Algebra, ideal: &Subspace, k: usize) -> Subspace {
    assert!(k >= 1, "ideal powers start at 1");
    let mut acc = ideal.clone();
    for _ in 1..k {
        if acc.is_zero() {
            break;
        }
        acc = algebra.product_space(&acc, ideal);
    }
    acc
}

/// `[N, N^2, ..., 0]` if `N` is nilpotent, `None` otherwise.
pub fn power_chain(algebra: &Algebra, ideal: &Subspace) -> Option<Vec<Subspace>> {
    let mut chain = vec![ideal.clone()];
    loop {
        let last = chain.last().expect("nonempty");
        if last.is_zero() {
            return Some(chain);
        }
        let next = algebra.product_space(last, ideal);
        if next.dim() == last.dim() {
            return None;
        }
        chain.push(next);
    }
}

/// Certifies a proposed radical: two-sided, nilpotent, and (where the trace
/// criterion applies) with a quotient whose own radical is zero.
pub fn certify(algebra: &Algebra, space: Subspace) -> Result<RadicalData> {
    let radical = SidedIdeal::new(algebra, Side::TwoSided, space)
        .map_err(|_| Error::CertificationFailure("radical is not a two-sided ideal".into()))?;
    let powers = power_chain(algebra, radical.space())
        .ok_or_else(|| Error::CertificationFailure("radical is not nilpotent".into()))?;
    let nilpotency_index = powers.len();
    let quotient = algebra.quotient(&radical)?;
    let target = &quotient.target;
    let checked = check_characteristic(target).is_ok();
    if checked && !gram_matrix(target).kernel().is_zero() {
        return Err(Error::CertificationFailure(
            "quotient by the radical is not semisimple".into(),
        ));
    }
    Ok(RadicalData {
        radical,
        nilpotency_index,
        powers,
        gram: None,
        quotient,
        quotient_semisimple_checked: checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;
    use crate::arith::FieldSpec;
    use crate::corpus::{matrix_algebra, triangular};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn simple_algebra_has_no_radical() {
        let r = radical(&matrix_algebra(Q, 2)).unwrap();
        assert!(r.space().is_zero());
        assert_eq!(r.nilpotency_index, 1);
    }

    #[test]
    fn zero_algebra_is_all_radical() {
        let r = radical(&Algebra::zero_product(Q, 3)).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.nilpotency_index, 2);
    }

    #[test]
    fn triangular_radical() {
        let t2 = triangular(Q, 2);
        let r = radical(&t2).unwrap();
        assert_eq!(
            r.space(),
            &Subspace::span(Q, 3, [Element::from_i64(Q, &[0, 1, 0]).into_coords()])
        );
        assert_eq!(r.nilpotency_index, 2);
        assert!(ideal_power(&t2, r.space(), 2).is_zero());
    }

    #[test]
    fn strict_triangular_powers() {
        // T3 basis: E11 E12 E13 E22 E23 E33
        let t3 = triangular(Q, 3);
        let r = radical(&t3).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.nilpotency_index, 3);
        let sq = ideal_power(&t3, r.space(), 2);
        assert_eq!(
            sq,
            Subspace::span(Q, 6, [Element::from_i64(Q, &[0, 0, 1, 0, 0, 0]).into_coords()])
        );
        assert!(ideal_power(&t3, r.space(), 3).is_zero());
        assert!(ideal_power(&t3, &Subspace::zero(Q, 6), 4).is_zero());
    }

    #[test]
    fn characteristic_guard() {
        let f3 = FieldSpec::PrimeField(3);
        let err = radical(&triangular(f3, 2)).unwrap_err();
        assert_eq!(err, Error::UnsupportedCharacteristic { p: 3, dim: 3 });
        let err = radical(&Algebra::zero_product(FieldSpec::PrimeField(3), 2)).unwrap_err();
        assert_eq!(err, Error::UnsupportedCharacteristic { p: 3, dim: 3 });
        assert!(radical(&crate::corpus::matrix_algebra(FieldSpec::PrimeField(5), 2)).is_ok());
        assert!(radical(&triangular(FieldSpec::PrimeField(5), 2)).is_ok());
    }

    #[test]
    fn certify_rejects_non_nilpotent() {
        let t2 = triangular(Q, 2);
        let err = certify(&t2, Subspace::full(Q, 3)).unwrap_err();
        assert!(matches!(err, Error::CertificationFailure(_)));
        let left_only = t2.ideal_generated(Side::Left, &[Element::from_i64(Q, &[1, 0, 0])]);
        assert!(certify(&t2, left_only.into_space()).is_err());
    }
}
