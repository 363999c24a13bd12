//! Wedderburn–Malcev complements.
//!
//! A complement `S` with `A = S ⊕ R` is built by lifting `A/R` through the
//! chain `R ⊇ R² ⊇ R⁴ ⊇ … ⊇ 0`. Each layer `N/N²` is square-zero, so fixing
//! the multiplication of the current lifts modulo the next layer is one
//! linear system for corrections `n_i ∈ N`:
//!
//! ```text
//! d_ij + t_i n_j + n_i t_j − Σ_k γ_ij^k n_k ≡ 0   (mod N²)
//! ```
//!
//! where `d_ij = t_i t_j − Σ_k γ_ij^k t_k` is the multiplication defect and
//! `γ` are the structure constants of `A/R`. Separability of `A/R` (always
//! true over perfect fields) makes the system solvable.
//!
//! [`conjugate_to_contain`] then moves a complement onto a given idempotent
//! `e` with the unit `u = 1 + (e − e₀)(2e₀ − 1)` of the unitalization.

use crate::algebra::{Algebra, Element, SidedIdeal};
use crate::arith::{Matrix, Subspace};
use crate::error::{Error, Result};
use crate::radical::{self, RadicalData};

/// One layer of the lift.
#[derive(Clone, Debug)]
pub struct LiftStep {
    /// Columns are the lifts `t_i` before correction.
    pub lifts: Matrix,
    /// `d_ij` in row-major `(i, j)` order.
    pub defects: Vec<Element>,
    /// The corrections `n_i`.
    pub corrections: Vec<Element>,
}

#[derive(Clone, Debug)]
pub struct ComplementData {
    pub space: Subspace,
    /// Basis of `S` mapping onto the standard basis of `A/R`.
    pub basis: Vec<Element>,
    /// Structure constants of `S` in `basis`, equal to those of `A/R`.
    pub structure: Algebra,
    /// `R, R², R⁴, …, 0`.
    pub chain: Vec<Subspace>,
    pub steps: Vec<LiftStep>,
}

/// Outcome of the four defining checks of a complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplementChecks {
    pub subalgebra: bool,
    pub trivial_intersection: bool,
    pub spans: bool,
    pub semisimple: bool,
}

impl ComplementChecks {
    pub fn all(&self) -> bool {
        self.subalgebra && self.trivial_intersection && self.spans && self.semisimple
    }
}

/// `S·S ⊆ S`, `S ∩ R = 0`, `S + R = A` and `rad(S) = 0`.
///
/// The last check uses the trace form on the algebra carried by `S` when
/// the characteristic allows it. Otherwise it relies on the first three:
/// they make the projection an isomorphism `S ≅ A/R`, and `A/R` is
/// semisimple whenever `radical` really is the radical.
pub fn check_complement(algebra: &Algebra, radical: &Subspace, space: &Subspace) -> ComplementChecks {
    let subalgebra = algebra.is_subalgebra(space);
    let trivial_intersection = space.intersect(radical).map(|s| s.is_zero()).unwrap_or(false);
    let spans = space.sum(radical).map(|s| s.dim() == algebra.dim()).unwrap_or(false);
    let semisimple = subalgebra
        && match algebra.subalgebra(space) {
            Ok(s_alg) if radical::check_characteristic(&s_alg).is_ok() => {
                radical::gram_matrix(&s_alg).kernel().is_zero()
            }
            Ok(_) => trivial_intersection && spans,
            Err(_) => false,
        };
    ComplementChecks {
        subalgebra,
        trivial_intersection,
        spans,
        semisimple,
    }
}

impl ComplementData {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn checks(&self, algebra: &Algebra, rad: &RadicalData) -> ComplementChecks {
        check_complement(algebra, rad.space(), &self.space)
    }
}

/// Coordinates of `v ∈ upper` modulo `lower` in the canonical complement.
fn layer_coords(lower: &Subspace, layer: &Subspace, v: &[crate::arith::Scalar]) -> Vec<crate::arith::Scalar> {
    layer
        .coordinates(&lower.reduce(v))
        .expect("vector lies in the upper ideal")
}

/// Corrects `lifts` in place so that they multiply by `gamma` modulo
/// `lower`, given that they already do modulo `upper` and `upper² ⊆ lower`.
fn lift_layer(
    algebra: &Algebra,
    lifts: &mut [Element],
    gamma: &Algebra,
    upper: &Subspace,
    lower: &Subspace,
) -> Result<LiftStep> {
    let field = algebra.field();
    let s = lifts.len();
    let layer = lower.complement_in(upper)?;
    let m = layer.dim();
    let c: Vec<Element> = layer
        .basis_vectors()
        .map(|v| Element::new(v.to_vec()))
        .collect();

    let lifts_matrix = Matrix::from_columns(
        field,
        algebra.dim(),
        &lifts.iter().map(|t| t.coords().to_vec()).collect::<Vec<_>>(),
    );
    let mut defects = Vec::with_capacity(s * s);
    for i in 0..s {
        for j in 0..s {
            let mut d = algebra.mul(&lifts[i], &lifts[j]);
            for (k, g) in gamma.basis_product(i, j).iter().enumerate() {
                if !g.is_zero() {
                    d = &d - &lifts[k].scale(g);
                }
            }
            if !upper.contains(d.coords()) {
                return Err(Error::PostconditionFailed("defect outside the current layer"));
            }
            defects.push(d);
        }
    }

    // left[i][a] = [t_i c_a], right[a][j] = [c_a t_j], in layer coordinates
    let left: Vec<Vec<Vec<_>>> = lifts
        .iter()
        .map(|t| {
            c.iter()
                .map(|ca| layer_coords(lower, &layer, algebra.mul(t, ca).coords()))
                .collect()
        })
        .collect();
    let right: Vec<Vec<Vec<_>>> = c
        .iter()
        .map(|ca| {
            lifts
                .iter()
                .map(|t| layer_coords(lower, &layer, algebra.mul(ca, t).coords()))
                .collect()
        })
        .collect();

    let unknowns = s * m;
    let var = |i: usize, a: usize| i * m + a;
    let mut system = Matrix::zeros(field, s * s * m, unknowns);
    let mut rhs = Vec::with_capacity(s * s * m);
    for i in 0..s {
        for j in 0..s {
            let d = layer_coords(lower, &layer, defects[i * s + j].coords());
            for b in 0..m {
                let row = (i * s + j) * m + b;
                for a in 0..m {
                    let v = &system[(row, var(j, a))] + &left[i][a][b];
                    system[(row, var(j, a))] = v;
                    let v = &system[(row, var(i, a))] + &right[a][j][b];
                    system[(row, var(i, a))] = v;
                }
                for (k, g) in gamma.basis_product(i, j).iter().enumerate() {
                    if !g.is_zero() {
                        let v = &system[(row, var(k, b))] - g;
                        system[(row, var(k, b))] = v;
                    }
                }
                rhs.push(-&d[b]);
            }
        }
    }
    let y = system
        .solve(&rhs)
        .ok_or(Error::NoSolution("square-zero lifting system"))?;

    let mut corrections = Vec::with_capacity(s);
    for (i, t) in lifts.iter_mut().enumerate() {
        let n = Element::new(layer.combination(&y[var(i, 0)..var(i, 0) + m]));
        *t = &*t + &n;
        corrections.push(n);
    }
    Ok(LiftStep {
        lifts: lifts_matrix,
        defects,
        corrections,
    })
}

/// Lifts a subalgebra of `B/N` to a subalgebra of `B` when `N² = 0`.
/// `sbar` is given in the coordinates of the canonical quotient.
pub fn lift_step_square_zero(algebra: &Algebra, ideal: &SidedIdeal, sbar: &Subspace) -> Result<Subspace> {
    if !algebra.product_space(ideal.space(), ideal.space()).is_zero() {
        return Err(Error::NotSquareZero);
    }
    let q = algebra.quotient(ideal)?;
    if !q.target.is_subalgebra(sbar) {
        return Err(Error::NotSubalgebra);
    }
    let gamma = q.target.subalgebra(sbar)?;
    let mut lifts: Vec<Element> = sbar
        .basis_vectors()
        .map(|v| q.lift(&Element::new(v.to_vec())))
        .collect();
    let zero = Subspace::zero(algebra.field(), algebra.dim());
    lift_layer(algebra, &mut lifts, &gamma, ideal.space(), &zero)?;
    Ok(Subspace::span(
        algebra.field(),
        algebra.dim(),
        lifts.into_iter().map(Element::into_coords),
    ))
}

/// A complement `S` of the radical, lifted through `R ⊇ R² ⊇ R⁴ ⊇ …`.
pub fn complement(algebra: &Algebra, rad: &RadicalData) -> Result<ComplementData> {
    let mut chain = vec![rad.space().clone()];
    while !chain.last().expect("nonempty").is_zero() {
        let last = chain.last().expect("nonempty");
        let sq = algebra.product_space(last, last);
        if sq.dim() == last.dim() {
            return Err(Error::CertificationFailure("radical is not nilpotent".into()));
        }
        chain.push(sq);
    }

    let q = &rad.quotient;
    let gamma = q.target.clone();
    let mut lifts: Vec<Element> = (0..gamma.dim())
        .map(|i| q.lift(&gamma.basis_element(i)))
        .collect();
    let mut steps = Vec::new();
    for pair in chain.windows(2) {
        steps.push(lift_layer(algebra, &mut lifts, &gamma, &pair[0], &pair[1])?);
    }

    for i in 0..lifts.len() {
        for j in 0..lifts.len() {
            let mut expected = algebra.zero();
            for (k, g) in gamma.basis_product(i, j).iter().enumerate() {
                expected = &expected + &lifts[k].scale(g);
            }
            if algebra.mul(&lifts[i], &lifts[j]) != expected {
                return Err(Error::PostconditionFailed("lifted basis is not closed"));
            }
        }
    }
    let space = Subspace::span(
        algebra.field(),
        algebra.dim(),
        lifts.iter().map(|t| t.coords().to_vec()),
    );
    let data = ComplementData {
        space,
        basis: lifts,
        structure: gamma,
        chain,
        steps,
    };
    if !data.checks(algebra, rad).all() {
        return Err(Error::PostconditionFailed("complement failed certification"));
    }
    Ok(data)
}

#[derive(Clone, Debug)]
pub struct ConjugationData {
    pub e_target: Element,
    /// The element of the old complement with the same image as `e`.
    pub e0: Element,
    /// `(e − e₀)(2e₀ − 1)`, an element of `R`.
    pub r: Element,
    /// `1 + r` and its inverse, in the unitalization.
    pub u: Element,
    pub u_inv: Element,
}

/// Conjugates `s0` by a unit `1 + r`, `r ∈ R`, so that it contains the
/// idempotent `e`.
pub fn conjugate_to_contain(
    algebra: &Algebra,
    rad: &RadicalData,
    s0: &ComplementData,
    e: &Element,
) -> Result<(ComplementData, ConjugationData)> {
    if !algebra.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let q = &rad.quotient;
    let ebar = q.project(e);
    let images: Vec<Vec<_>> = s0
        .basis
        .iter()
        .map(|t| q.project(t).into_coords())
        .collect();
    let proj = Matrix::from_columns(algebra.field(), q.target.dim(), &images);
    let c = proj.solve(ebar.coords()).ok_or(Error::ProjectionMismatch)?;
    let mut e0 = algebra.zero();
    for (t, ci) in s0.basis.iter().zip(&c) {
        e0 = &e0 + &t.scale(ci);
    }
    if q.project(&e0) != ebar {
        return Err(Error::ProjectionMismatch);
    }

    let unital = algebra.unitalization();
    let a1 = &unital.algebra;
    let one = unital.unit();
    let field = algebra.field();
    let ue = unital.embed(e);
    let ue0 = unital.embed(&e0);
    let two_e0_minus_1 = &ue0.scale(&field.from_i64(2)) - &one;
    let r1 = a1.mul(&(&ue - &ue0), &two_e0_minus_1);
    let r = unital
        .restrict(&r1)
        .filter(|r| rad.space().contains(r.coords()))
        .ok_or(Error::PostconditionFailed("conjugating element outside the radical"))?;

    let u = &one + &r1;
    let minus_r = -&r1;
    let mut term = one.clone();
    let mut u_inv = one.clone();
    for _ in 0..=rad.nilpotency_index {
        term = a1.mul(&term, &minus_r);
        if term.is_zero() {
            break;
        }
        u_inv = &u_inv + &term;
    }
    if a1.mul(&u, &u_inv) != one || a1.mul(&u_inv, &u) != one {
        return Err(Error::PostconditionFailed("1 + r not inverted by its geometric series"));
    }
    let conjugate = |x: &Element| -> Result<Element> {
        let y = a1.mul(&a1.mul(&u, &unital.embed(x)), &u_inv);
        unital
            .restrict(&y)
            .ok_or(Error::PostconditionFailed("conjugate left A"))
    };
    if &conjugate(&e0)? != e {
        return Err(Error::PostconditionFailed("u e₀ u⁻¹ ≠ e"));
    }
    let basis = s0.basis.iter().map(conjugate).collect::<Result<Vec<_>>>()?;
    let space = Subspace::span(
        field,
        algebra.dim(),
        basis.iter().map(|t| t.coords().to_vec()),
    );
    if !space.contains(e.coords()) {
        return Err(Error::PostconditionFailed("conjugated complement misses e"));
    }
    let data = ComplementData {
        space,
        basis,
        structure: s0.structure.clone(),
        chain: s0.chain.clone(),
        steps: s0.steps.clone(),
    };
    if !data.checks(algebra, rad).all() {
        return Err(Error::PostconditionFailed("conjugated complement failed certification"));
    }
    let conj = ConjugationData {
        e_target: e.clone(),
        e0,
        r,
        u,
        u_inv,
    };
    Ok((data, conj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldSpec;
    use crate::corpus::{matrix_algebra, triangular};
    use crate::algebra::Side;
    use crate::radical::radical;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn el(v: &[i64]) -> Element {
        Element::from_i64(Q, v)
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::span(Q, n, vs.iter().map(|v| el(v).into_coords()))
    }

    fn square_zero_ideal(algebra: &Algebra, space: Subspace) -> Result<SidedIdeal> {
        SidedIdeal::new(algebra, Side::TwoSided, space)
    }

    #[test]
    fn square_zero_lift_with_zero_ideal() {
        let m2 = matrix_algebra(Q, 2);
        let zero = square_zero_ideal(&m2, Subspace::zero(Q, 4)).unwrap();
        let s = lift_step_square_zero(&m2, &zero, &Subspace::full(Q, 4)).unwrap();
        assert_eq!(s, Subspace::full(Q, 4));
    }

    #[test]
    fn square_zero_lift_triangular() {
        let t2 = triangular(Q, 2);
        let n = square_zero_ideal(&t2, span(3, &[&[0, 1, 0]])).unwrap();
        let s = lift_step_square_zero(&t2, &n, &Subspace::full(Q, 2)).unwrap();
        assert_eq!(s, span(3, &[&[1, 0, 0], &[0, 0, 1]]));
    }

    #[test]
    fn square_zero_lift_dual_numbers() {
        // basis {1, t}
        let dn = Algebra::from_products(Q, 2, |i, j| match (i, j) {
            (0, 0) => vec![Q.one(), Q.zero()],
            (0, 1) | (1, 0) => vec![Q.zero(), Q.one()],
            _ => vec![Q.zero(), Q.zero()],
        })
        .unwrap();
        let n = square_zero_ideal(&dn, span(2, &[&[0, 1]])).unwrap();
        let s = lift_step_square_zero(&dn, &n, &Subspace::full(Q, 1)).unwrap();
        assert_eq!(s, span(2, &[&[1, 0]]));
    }

    #[test]
    fn square_zero_lift_rejects_non_square_zero() {
        let t3 = triangular(Q, 3);
        let rad = radical(&t3).unwrap();
        let err = lift_step_square_zero(&t3, &rad.radical, &Subspace::full(Q, 3)).unwrap_err();
        assert_eq!(err, Error::NotSquareZero);
    }

    #[test]
    fn complements_of_fixtures() {
        let m2 = matrix_algebra(Q, 2);
        let c = complement(&m2, &radical(&m2).unwrap()).unwrap();
        assert_eq!(c.space, Subspace::full(Q, 4));

        let z = Algebra::zero_product(Q, 3);
        let c = complement(&z, &radical(&z).unwrap()).unwrap();
        assert!(c.space.is_zero());

        let t2 = triangular(Q, 2);
        let rad = radical(&t2).unwrap();
        let c = complement(&t2, &rad).unwrap();
        assert_eq!(c.space, span(3, &[&[1, 0, 0], &[0, 0, 1]]));
        assert!(c.checks(&t2, &rad).all());
    }

    #[test]
    fn worked_conjugation_on_t2() {
        let t2 = triangular(Q, 2);
        let rad = radical(&t2).unwrap();
        let s0 = complement(&t2, &rad).unwrap();
        let e = el(&[1, 1, 0]);
        let (s, conj) = conjugate_to_contain(&t2, &rad, &s0, &e).unwrap();
        assert_eq!(conj.e0, el(&[1, 0, 0]));
        assert_eq!(conj.r, el(&[0, -1, 0]));
        assert_eq!(conj.u, Element::from_i64(Q, &[0, -1, 0, 1]));
        assert_eq!(conj.u_inv, Element::from_i64(Q, &[0, 1, 0, 1]));
        assert_eq!(s.basis, vec![el(&[1, 1, 0]), el(&[0, -1, 1])]);
        assert_eq!(s.space, span(3, &[&[1, 1, 0], &[0, -1, 1]]));
    }

    #[test]
    fn conjugation_trivial_cases() {
        let t2 = triangular(Q, 2);
        let rad = radical(&t2).unwrap();
        let s0 = complement(&t2, &rad).unwrap();
        let (s, conj) = conjugate_to_contain(&t2, &rad, &s0, &el(&[1, 0, 0])).unwrap();
        assert!(conj.r.is_zero());
        assert_eq!(s.space, s0.space);
        let (s, conj) = conjugate_to_contain(&t2, &rad, &s0, &t2.zero()).unwrap();
        assert!(conj.e0.is_zero());
        assert_eq!(s.space, s0.space);
        assert_eq!(
            conjugate_to_contain(&t2, &rad, &s0, &el(&[0, 1, 0])).unwrap_err(),
            Error::NotIdempotent
        );
    }
}
