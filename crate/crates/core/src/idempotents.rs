//! Idempotent generators of left ideals.
//!
//! A left ideal `I` is *bar-minimal* when no smaller left ideal inside it
//! has the same image in `A/R`. Those are exactly the ideals `Ae` with `e`
//! idempotent, which turns minimality into a single linear system: find
//! `e` in `I` with `x e = x` for every basis vector `x` of `I`.
//!
//! Lifting an idempotent `f` of `A/R` that generates `Ī` goes through right
//! multiplication `φ_x : y ↦ y x` by a preimage `x`: shrink `I` along
//! `J ← J x` until `J x = J`, at which point `φ_x` is invertible on `J` and
//! `e = φ_x⁻¹(x)` is an idempotent with `ē = x̄` and `J = Ae`.
//! [`lift_idempotent_newton`] provides an independent route through the
//! polynomial `3e² − 2e³`.

use crate::algebra::{Algebra, Element, Side, SidedIdeal};
use crate::arith::{Matrix, Subspace};
use crate::error::{Error, Result};
use crate::radical::{self, RadicalData};

/// A left ideal together with an idempotent generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarMinimalIdeal {
    pub ideal: SidedIdeal,
    pub generator: Element,
    /// `e² = e`, `e ∈ I` and `x e = x` on a basis of `I` were all checked.
    pub certified: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftMethod {
    PhiInverse,
    NewtonIteration,
}

#[derive(Clone, Debug)]
pub struct LiftTrace {
    pub start: Element,
    /// `J_0 ⊇ J_1 ⊇ …`, ending at the stable subspace.
    pub chain: Vec<Subspace>,
    /// Matrix of `φ_x` on the stable subspace, in its canonical basis.
    pub phi_matrix: Option<Matrix>,
    pub result: Element,
    pub method: LiftMethod,
    pub steps: usize,
}

/// Output of [`bar_minimal_descend`].
#[derive(Clone, Debug)]
pub struct Descent {
    pub chain: Vec<Subspace>,
    /// The stable `J = I x^k` with `J x = J`.
    pub stable: Subspace,
    /// A seed inside `J` with the same image as `x`: `x` itself when it
    /// already lies in `J`, otherwise `x^(k+1)`.
    pub seed: Element,
}

/// Some `e ∈ space` with `x e = x` for every basis vector `x` of `space`
/// (free coefficients zero), or `None`.
fn right_unit_in(algebra: &Algebra, space: &Subspace) -> Option<Element> {
    let n = algebra.dim();
    let d = space.dim();
    let basis: Vec<Element> = space
        .basis_vectors()
        .map(|v| Element::new(v.to_vec()))
        .collect();
    let mut rows = Vec::with_capacity(d * n);
    let mut rhs = Vec::with_capacity(d * n);
    for x in &basis {
        let products: Vec<Element> = basis.iter().map(|b| algebra.mul(x, b)).collect();
        for m in 0..n {
            rows.push(products.iter().map(|p| p.coords()[m].clone()).collect());
            rhs.push(x.coords()[m].clone());
        }
    }
    let system = Matrix::from_rows(algebra.field(), d, rows);
    let c = system.solve(&rhs)?;
    Some(Element::new(space.combination(&c)))
}

/// An idempotent `f ∈ Ī` with `Ā f = Ī`, for a left ideal `Ī` of a
/// semisimple algebra. Returns `0` for `Ī = 0`.
///
/// Semisimplicity is checked through the trace form when the
/// characteristic allows it; otherwise the caller vouches for it (as
/// [`RadicalData::quotient`] does) and only the unit is checked.
pub fn semisimple_ideal_generator(abar: &Algebra, ibar: &Subspace) -> Result<Element> {
    if !abar.is_ideal(Side::Left, ibar) {
        return Err(Error::NotAnIdeal("left"));
    }
    if abar.find_identity().is_none() {
        return Err(Error::NotSemisimple);
    }
    if radical::check_characteristic(abar).is_ok()
        && !radical::gram_matrix(abar).kernel().is_zero()
    {
        return Err(Error::NotSemisimple);
    }
    right_unit_in(abar, ibar).ok_or(Error::NoSolution("idempotent generator in A/R"))
}

/// The canonical lifting seed of a non-nilpotent left ideal: the generator
/// `f` of `Ī` and the free-variables-zero preimage `x ∈ I` of `f`.
/// `None` when `I ⊆ R`.
pub fn lifting_seed(
    algebra: &Algebra,
    rad: &RadicalData,
    ideal: &SidedIdeal,
) -> Result<Option<(Element, Element)>> {
    let q = &rad.quotient;
    let ibar = q.project_space(ideal.space());
    if ibar.is_zero() {
        return Ok(None);
    }
    let f = semisimple_ideal_generator(&q.target, &ibar)?;
    let images: Vec<Vec<_>> = ideal
        .space()
        .basis_vectors()
        .map(|b| q.projection.mul_vec(b))
        .collect();
    let system = Matrix::from_columns(algebra.field(), q.target.dim(), &images);
    let c = system
        .solve(f.coords())
        .ok_or(Error::NoSolution("preimage of f inside I"))?;
    let x = Element::new(ideal.space().combination(&c));
    Ok(Some((f, x)))
}

fn right_multiple(algebra: &Algebra, space: &Subspace, x: &Element) -> Subspace {
    Subspace::span(
        algebra.field(),
        algebra.dim(),
        space
            .basis_vectors()
            .map(|v| algebra.mul(&Element::new(v.to_vec()), x).into_coords()),
    )
}

fn check_seed_bar(algebra: &Algebra, rad: &RadicalData, x: &Element) -> Result<Element> {
    let xbar = rad.quotient.project(x);
    if !rad.quotient.target.is_idempotent(&xbar) {
        return Err(Error::BadSeed("image of the seed is not idempotent"));
    }
    debug_assert_eq!(x.dim(), algebra.dim());
    Ok(xbar)
}

/// Iterates `J ← J x` from `J = I` to a fixpoint.
pub fn bar_minimal_descend(
    algebra: &Algebra,
    rad: &RadicalData,
    ideal: &SidedIdeal,
    x: &Element,
) -> Result<Descent> {
    if ideal.side() == Side::Right {
        return Err(Error::NotAnIdeal("left"));
    }
    if !ideal.space().contains(x.coords()) {
        return Err(Error::BadSeed("seed lies outside the ideal"));
    }
    let xbar = check_seed_bar(algebra, rad, x)?;
    let q = &rad.quotient;
    let ibar = q.project_space(ideal.space());
    let generated = q.target.ideal_generated(Side::Left, &[xbar]);
    if generated.space() != &ibar {
        return Err(Error::BadSeed("image of the seed does not generate the image of I"));
    }

    let mut chain = vec![ideal.space().clone()];
    loop {
        let current = chain.last().expect("nonempty");
        let next = right_multiple(algebra, current, x);
        if next.dim() == current.dim() {
            break;
        }
        chain.push(next);
    }
    let stable = chain.last().expect("nonempty").clone();
    let seed = if stable.contains(x.coords()) {
        x.clone()
    } else {
        algebra.pow(x, chain.len())
    };
    Ok(Descent {
        chain,
        stable,
        seed,
    })
}

/// `e = φ_x⁻¹(x)` on a subspace with `J x = J`.
pub fn lift_idempotent_phi(
    algebra: &Algebra,
    rad: &RadicalData,
    stable: &Subspace,
    x: &Element,
) -> Result<(Element, LiftTrace)> {
    if !stable.contains(x.coords()) {
        return Err(Error::BadSeed("seed lies outside J"));
    }
    let xbar = check_seed_bar(algebra, rad, x)?;
    if &right_multiple(algebra, stable, x) != stable {
        return Err(Error::NotStable);
    }
    let columns: Vec<Vec<_>> = stable
        .basis_vectors()
        .map(|b| {
            let bx = algebra.mul(&Element::new(b.to_vec()), x);
            stable.coordinates(bx.coords()).expect("J x ⊆ J")
        })
        .collect();
    let phi = Matrix::from_columns(algebra.field(), stable.dim(), &columns);
    let inv = phi.inverse().ok_or(Error::SingularPhi)?;
    let target = stable.coordinates(x.coords()).expect("x ∈ J");
    let e = Element::new(stable.combination(&inv.mul_vec(&target)));

    if !algebra.is_idempotent(&e) {
        return Err(Error::PostconditionFailed("φ-lift is not idempotent"));
    }
    if &algebra.mul(&e, x) != x {
        return Err(Error::PostconditionFailed("φ-lift does not satisfy e x = x"));
    }
    if rad.quotient.project(&e) != xbar {
        return Err(Error::PostconditionFailed("φ-lift has the wrong image in A/R"));
    }
    let trace = LiftTrace {
        start: x.clone(),
        chain: vec![stable.clone()],
        phi_matrix: Some(phi),
        result: e.clone(),
        method: LiftMethod::PhiInverse,
        steps: 1,
    };
    Ok((e, trace))
}

/// Descent followed by the φ-inverse lift, with the whole chain recorded.
pub fn lift_from_ideal(
    algebra: &Algebra,
    rad: &RadicalData,
    ideal: &SidedIdeal,
    x: &Element,
) -> Result<(Element, LiftTrace, Descent)> {
    let descent = bar_minimal_descend(algebra, rad, ideal, x)?;
    let (e, mut trace) = lift_idempotent_phi(algebra, rad, &descent.stable, &descent.seed)?;
    trace.start = x.clone();
    trace.chain = descent.chain.clone();
    trace.steps = descent.chain.len();
    Ok((e, trace, descent))
}

/// Smallest `s` with `2^s >= m`.
pub fn newton_step_bound(nilpotency_index: usize) -> usize {
    let mut s = 0;
    while (1usize << s) < nilpotency_index {
        s += 1;
    }
    s + 1
}

/// `e ← 3e² − 2e³` from `x` until `e² = e`.
pub fn lift_idempotent_newton(
    algebra: &Algebra,
    rad: &RadicalData,
    ideal: &SidedIdeal,
    x: &Element,
) -> Result<(Element, LiftTrace)> {
    if !ideal.space().contains(x.coords()) {
        return Err(Error::BadSeed("seed lies outside the ideal"));
    }
    let bound = newton_step_bound(rad.nilpotency_index);
    let field = algebra.field();
    let three = field.from_i64(3);
    let two = field.from_i64(2);
    let mut e = x.clone();
    let mut steps = 0;
    loop {
        let sq = algebra.mul(&e, &e);
        if sq == e {
            break;
        }
        if steps == bound {
            return Err(Error::NonTermination(bound));
        }
        let cube = algebra.mul(&sq, &e);
        e = &sq.scale(&three) - &cube.scale(&two);
        steps += 1;
    }
    let trace = LiftTrace {
        start: x.clone(),
        chain: vec![ideal.space().clone()],
        phi_matrix: None,
        result: e.clone(),
        method: LiftMethod::NewtonIteration,
        steps,
    };
    Ok((e, trace))
}

/// `Some` exactly when `I = Ae` for an idempotent `e`.
pub fn is_bar_minimal(algebra: &Algebra, ideal: &SidedIdeal) -> Option<BarMinimalIdeal> {
    if ideal.side() == Side::Right {
        return None;
    }
    let e = right_unit_in(algebra, ideal.space())?;
    let certified = algebra.is_idempotent(&e)
        && ideal.space().contains(e.coords())
        && ideal.space().basis_vectors().all(|v| {
            let x = Element::new(v.to_vec());
            algebra.mul(&x, &e) == x
        });
    Some(BarMinimalIdeal {
        ideal: ideal.clone(),
        generator: e,
        certified,
    })
}

/// `e₁e₂ = e₁` and `e₂e₁ = e₂`.
pub fn right_equivalent(algebra: &Algebra, e1: &Element, e2: &Element) -> Result<bool> {
    if !algebra.is_idempotent(e1) || !algebra.is_idempotent(e2) {
        return Err(Error::NotIdempotent);
    }
    Ok(&algebra.mul(e1, e2) == e1 && &algebra.mul(e2, e1) == e2)
}
