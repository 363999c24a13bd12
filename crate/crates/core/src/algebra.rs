//! Finite-dimensional associative algebras given by structure constants.
//!
//! An [`Algebra`] of dimension `n` over a field stores the full tensor
//! `c_{ij}^k` with `e_i e_j = sum_k c_{ij}^k e_k`. Elements are plain
//! coordinate vectors in that basis. Unitality is never assumed: the unit,
//! when one exists, is found by a linear solve, and [`Algebra::unitalization`]
//! always adjoins a fresh one.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::arith::{vector, FieldSpec, Matrix, Scalar, Subspace};
use crate::error::{Error, Result};

/// Coordinates of an algebra element in the structure-constant basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element(coords)
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Element(vector::zeros(field, dim))
    }

    pub fn basis(field: FieldSpec, dim: usize, i: usize) -> Self {
        Element(vector::unit(field, dim, i))
    }

    pub fn from_i64(field: FieldSpec, coords: &[i64]) -> Self {
        Element(coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.0)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element(vector::scale(c, &self.0))
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element(vector::add(&self.0, &rhs.0))
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element(vector::sub(&self.0, &rhs.0))
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element(vector::neg(&self.0))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&vector::display(&self.0))
    }
}

/// Which multiplications a subspace must absorb.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `a x` in the ideal for all `a` in the algebra.
    Left,
    /// `x a` in the ideal.
    Right,
    TwoSided,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        }
    }

    /// The side an ideal has in the opposite algebra.
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::TwoSided => Side::TwoSided,
        }
    }
}

/// A subspace certified to be closed under the multiplications of its side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SidedIdeal {
    side: Side,
    space: Subspace,
}

impl SidedIdeal {
    /// Checks closure and wraps.
    pub fn new(algebra: &Algebra, side: Side, space: Subspace) -> Result<Self> {
        if !algebra.is_ideal(side, &space) {
            return Err(Error::NotAnIdeal(side.name()));
        }
        Ok(SidedIdeal { side, space })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// A finite-dimensional associative algebra.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    /// `tensor[(i * dim + j) * dim + k] = c_{ij}^k`.
    tensor: Vec<Scalar>,
    basis_names: Option<Vec<String>>,
    identity: OnceLock<Option<Element>>,
    validated: bool,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.tensor == other.tensor
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Builds and validates an algebra from its full structure-constant
    /// tensor, laid out as `tensor[(i * dim + j) * dim + k] = c_{ij}^k`.
    pub fn new(field: FieldSpec, dim: usize, tensor: Vec<Scalar>) -> Result<Self> {
        let mut a = Self::unvalidated(field, dim, tensor)?;
        a.validate_associativity()?;
        a.validated = true;
        Ok(a)
    }

    /// Stores the tensor without the associativity check.
    pub fn unvalidated(field: FieldSpec, dim: usize, tensor: Vec<Scalar>) -> Result<Self> {
        if tensor.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: tensor.len(),
            });
        }
        if tensor.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Algebra {
            field,
            dim,
            tensor,
            basis_names: None,
            identity: OnceLock::new(),
            validated: false,
        })
    }

    /// Builds from a product rule on basis indices.
    pub fn from_products<F>(field: FieldSpec, dim: usize, mut product: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Vec<Scalar>,
    {
        let mut tensor = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                if p.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: p.len(),
                    });
                }
                tensor.extend(p);
            }
        }
        Self::new(field, dim, tensor)
    }

    /// For algebras derived from a validated one by an operation that
    /// preserves associativity (quotients, opposites, unitalization,
    /// restriction to a subalgebra).
    pub(crate) fn derived(field: FieldSpec, dim: usize, tensor: Vec<Scalar>) -> Self {
        debug_assert_eq!(tensor.len(), dim * dim * dim);
        Algebra {
            field,
            dim,
            tensor,
            basis_names: None,
            identity: OnceLock::new(),
            validated: true,
        }
    }

    /// The zero-multiplication algebra of dimension `dim`.
    pub fn zero_product(field: FieldSpec, dim: usize) -> Self {
        Self::derived(field, dim, vector::zeros(field, dim * dim * dim))
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.basis_names = Some(names);
        self
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.tensor
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.tensor[start..start + self.dim]
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field, self.dim)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.field, self.dim, i)
    }

    /// Checks `(e_i e_j) e_k = e_i (e_j e_k)` on all basis triples and
    /// reports the lexicographically first failure.
    pub fn validate_associativity(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul_coords(ij, self.basis_element(k).coords());
                    let jk = self.basis_product(j, k);
                    let right = self.mul_coords(self.basis_element(i).coords(), jk);
                    if left != right {
                        return Err(Error::NotAssociative {
                            i,
                            j,
                            k,
                            left: vector::display(&left),
                            right: vector::display(&right),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn mul_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                vector::axpy(&mut out, &(ai * bj), self.basis_product(i, j));
            }
        }
        out
    }

    /// The product `ab`. Panics if either element has the wrong length.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        assert_eq!(a.dim(), self.dim, "element from another algebra");
        assert_eq!(b.dim(), self.dim, "element from another algebra");
        Element(self.mul_coords(a.coords(), b.coords()))
    }

    pub fn try_mul(&self, a: &Element, b: &Element) -> Result<Element> {
        for x in [a, b] {
            if x.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: x.dim(),
                });
            }
        }
        Ok(self.mul(a, b))
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: &Element, k: usize) -> Element {
        assert!(k >= 1, "non-unital algebras have no zeroth power");
        let mut acc = a.clone();
        for _ in 1..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_idempotent(&self, e: &Element) -> bool {
        &self.mul(e, e) == e
    }

    /// Matrix of `y -> a y`.
    pub fn left_mul_operator(&self, a: &Element) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.mul_coords(a.coords(), self.basis_element(j).coords()))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y -> y a`.
    pub fn right_mul_operator(&self, a: &Element) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.mul_coords(self.basis_element(j).coords(), a.coords()))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// `span{u w : u in U, w in W}`.
    pub fn product_space(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let mut products = Vec::with_capacity(u.dim() * w.dim());
        for x in u.basis_vectors() {
            for y in w.basis_vectors() {
                products.push(self.mul_coords(x, y));
            }
        }
        Subspace::span(self.field, self.dim, products)
    }

    /// Whether `space` absorbs the multiplications required by `side`.
    pub fn is_ideal(&self, side: Side, space: &Subspace) -> bool {
        if space.ambient_dim() != self.dim || space.field() != self.field {
            return false;
        }
        let full = Subspace::full(self.field, self.dim);
        let left_ok = || {
            self.product_space(&full, space)
                .is_subspace_of(space)
                .unwrap_or(false)
        };
        let right_ok = || {
            self.product_space(space, &full)
                .is_subspace_of(space)
                .unwrap_or(false)
        };
        match side {
            Side::Left => left_ok(),
            Side::Right => right_ok(),
            Side::TwoSided => left_ok() && right_ok(),
        }
    }

    /// Whether `space` is closed under multiplication.
    pub fn is_subalgebra(&self, space: &Subspace) -> bool {
        self.product_space(space, space)
            .is_subspace_of(space)
            .unwrap_or(false)
    }

    /// Smallest subspace containing `generators` and closed under the
    /// multiplications of `side`. Generators are always included, so the
    /// result is correct without a unit.
    pub fn ideal_generated(&self, side: Side, generators: &[Element]) -> SidedIdeal {
        let full = Subspace::full(self.field, self.dim);
        let mut current = Subspace::span(
            self.field,
            self.dim,
            generators.iter().map(|g| g.coords().to_vec()),
        );
        loop {
            let mut next = current.clone();
            if matches!(side, Side::Left | Side::TwoSided) {
                next = next
                    .sum(&self.product_space(&full, &current))
                    .expect("same ambient space");
            }
            if matches!(side, Side::Right | Side::TwoSided) {
                next = next
                    .sum(&self.product_space(&current, &full))
                    .expect("same ambient space");
            }
            if next.dim() == current.dim() {
                return SidedIdeal {
                    side,
                    space: current,
                };
            }
            current = next;
        }
    }

    /// The multiplicative identity, if the algebra has one. Solves
    /// `e e_i = e_i = e_i e` for all `i` as one linear system.
    pub fn find_identity(&self) -> Option<Element> {
        self.identity
            .get_or_init(|| {
                let n = self.dim;
                let mut rows = Vec::with_capacity(2 * n * n);
                let mut rhs = Vec::with_capacity(2 * n * n);
                for i in 0..n {
                    for k in 0..n {
                        // (e e_i)_k = sum_j e_j c_{ji}^k
                        rows.push((0..n).map(|j| self.basis_product(j, i)[k].clone()).collect());
                        // (e_i e)_k = sum_j e_j c_{ij}^k
                        rows.push((0..n).map(|j| self.basis_product(i, j)[k].clone()).collect());
                        let delta = if i == k { self.field.one() } else { self.field.zero() };
                        rhs.push(delta.clone());
                        rhs.push(delta);
                    }
                }
                let m = Matrix::from_rows(self.field, n, rows);
                m.solve(&rhs).map(Element)
            })
            .clone()
    }

    /// Same space with multiplication `a * b = b a`.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mut tensor = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                tensor.extend_from_slice(self.basis_product(j, i));
            }
        }
        let mut op = Algebra::derived(self.field, n, tensor);
        op.validated = self.validated;
        op.basis_names = self.basis_names.clone();
        op
    }

    /// `k + A` with a freshly adjoined unit, placed last in the basis.
    pub fn unitalization(&self) -> Unitalization {
        let n = self.dim;
        let m = n + 1;
        let field = self.field;
        let mut tensor = vector::zeros(field, m * m * m);
        let at = |i: usize, j: usize, k: usize| (i * m + j) * m + k;
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    tensor[at(i, j, k)] = c.clone();
                }
            }
            tensor[at(i, n, i)] = field.one();
            tensor[at(n, i, i)] = field.one();
        }
        tensor[at(n, n, n)] = field.one();
        let mut embed = Matrix::zeros(field, m, n);
        for i in 0..n {
            embed[(i, i)] = field.one();
        }
        let algebra = Algebra::derived(field, m, tensor);
        algebra
            .identity
            .set(Some(Element::basis(field, m, n)))
            .expect("fresh lock");
        Unitalization { algebra, embed }
    }

    /// The algebra carried by a multiplicatively closed subspace, in the
    /// subspace's canonical basis.
    pub fn subalgebra(&self, space: &Subspace) -> Result<Algebra> {
        let d = space.dim();
        let basis: Vec<&[Scalar]> = space.basis_vectors().collect();
        let mut tensor = Vec::with_capacity(d * d * d);
        for x in &basis {
            for y in &basis {
                let p = self.mul_coords(x, y);
                let coords = space.coordinates(&p).ok_or(Error::NotSubalgebra)?;
                tensor.extend(coords);
            }
        }
        Ok(Algebra::derived(self.field, d, tensor))
    }

    /// Quotient by a two-sided ideal, with the canonical section that puts
    /// zeros on the pivot coordinates of the ideal.
    pub fn quotient(&self, ideal: &SidedIdeal) -> Result<QuotientMap> {
        if ideal.side != Side::TwoSided {
            return Err(Error::NotTwoSided);
        }
        let kernel = ideal.space.clone();
        let mut is_pivot = vec![false; self.dim];
        for &p in kernel.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.dim).filter(|&j| !is_pivot[j]).collect();
        let d = free.len();
        let field = self.field;

        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = kernel.reduce(v);
            free.iter().map(|&j| r[j].clone()).collect()
        };
        let mut tensor = Vec::with_capacity(d * d * d);
        for &a in &free {
            for &b in &free {
                tensor.extend(project(self.basis_product(a, b)));
            }
        }
        let target = Algebra::derived(field, d, tensor);

        let proj_cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| project(self.basis_element(j).coords()))
            .collect();
        let projection = Matrix::from_columns(field, d, &proj_cols);
        let mut section = Matrix::zeros(field, self.dim, d);
        for (a, &j) in free.iter().enumerate() {
            section[(j, a)] = field.one();
        }
        Ok(QuotientMap {
            kernel,
            target,
            projection,
            section,
        })
    }
}

/// `A¹ = k ⊕ A` together with the embedding `A -> A¹`.
#[derive(Clone, Debug)]
pub struct Unitalization {
    pub algebra: Algebra,
    /// `(n + 1) x n`, identity on the first `n` coordinates.
    pub embed: Matrix,
}

impl Unitalization {
    pub fn unit(&self) -> Element {
        self.algebra.basis_element(self.algebra.dim() - 1)
    }

    pub fn embed(&self, a: &Element) -> Element {
        Element(self.embed.mul_vec(a.coords()))
    }

    /// `x + c·1` for `x` in `A`.
    pub fn adjoin(&self, c: &Scalar, a: &Element) -> Element {
        let mut v = self.embed.mul_vec(a.coords());
        *v.last_mut().expect("unitalization has positive dimension") = c.clone();
        Element(v)
    }

    /// Back into `A`; `None` when the unit coordinate is nonzero.
    pub fn restrict(&self, x: &Element) -> Option<Element> {
        let (last, rest) = x.coords().split_last()?;
        last.is_zero().then(|| Element(rest.to_vec()))
    }
}

/// Projection `A -> A/N` with its fixed linear section.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub kernel: Subspace,
    pub target: Algebra,
    /// `dim(A/N) x dim(A)`.
    pub projection: Matrix,
    /// `dim(A) x dim(A/N)`; `projection * section = 1`.
    pub section: Matrix,
}

impl QuotientMap {
    pub fn project(&self, x: &Element) -> Element {
        Element(self.projection.mul_vec(x.coords()))
    }

    pub fn lift(&self, xbar: &Element) -> Element {
        Element(self.section.mul_vec(xbar.coords()))
    }

    pub fn project_space(&self, space: &Subspace) -> Subspace {
        space.image(&self.projection)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{matrix_algebra, triangular};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn el(v: &[i64]) -> Element {
        Element::from_i64(Q, v)
    }

    #[test]
    fn matrix_units_multiply() {
        let m2 = matrix_algebra(Q, 2);
        // basis E11, E12, E21, E22
        assert_eq!(m2.mul(&el(&[1, 0, 0, 0]), &el(&[0, 1, 0, 0])), el(&[0, 1, 0, 0]));
        let t2 = triangular(Q, 2);
        let x = el(&[1, 1, 0]);
        assert_eq!(t2.mul(&x, &x), x);
        let z = Algebra::zero_product(Q, 3);
        assert!(z.mul(&el(&[1, 2, 3]), &el(&[4, 5, 6])).is_zero());
    }

    #[test]
    fn perturbed_tensor_is_not_associative() {
        let m2 = matrix_algebra(Q, 2);
        let mut t = m2.tensor().to_vec();
        // c_{11}^1 in 1-based numbering
        t[0] = &t[0] + &Q.one();
        let err = Algebra::new(Q, 4, t).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
        assert!(m2.validate_associativity().is_ok());
    }

    #[test]
    fn regular_operators() {
        let t2 = triangular(Q, 2);
        assert_eq!(t2.left_mul_operator(&el(&[1, 0, 1])), Matrix::identity(Q, 3));
        assert!(t2.right_mul_operator(&t2.zero()).is_zero());
        let r = t2.right_mul_operator(&el(&[1, 0, 0]));
        assert_eq!(r.column(0), el(&[1, 0, 0]).into_coords());
        assert!(vector::is_zero(&r.column(1)));
        assert!(vector::is_zero(&r.column(2)));
    }

    #[test]
    fn identities() {
        assert_eq!(matrix_algebra(Q, 2).find_identity(), Some(el(&[1, 0, 0, 1])));
        assert_eq!(triangular(Q, 2).find_identity(), Some(el(&[1, 0, 1])));
        assert_eq!(Algebra::zero_product(Q, 2).find_identity(), None);
    }

    #[test]
    fn unitalization_of_zero_algebra_is_dual_numbers() {
        let u = Algebra::zero_product(Q, 1).unitalization();
        let expected = Algebra::from_products(Q, 2, |i, j| match (i, j) {
            (0, 0) => vec![Q.zero(), Q.zero()],
            (0, 1) | (1, 0) => vec![Q.one(), Q.zero()],
            _ => vec![Q.zero(), Q.one()],
        })
        .unwrap();
        assert_eq!(u.algebra, expected);
        assert!(u.algebra.find_identity().is_some());
        assert!(u.algebra.validate_associativity().is_ok());
    }

    #[test]
    fn unitalization_adjoins_new_unit() {
        let m2 = matrix_algebra(Q, 2);
        let u = m2.unitalization();
        assert_eq!(u.algebra.dim(), 5);
        let one_a = u.embed(&m2.find_identity().unwrap());
        assert_ne!(Some(one_a), u.algebra.find_identity());
        let ideal = u.embed.column(0);
        assert_eq!(ideal.len(), 5);
        let image = Subspace::full(Q, 4).image(&u.embed);
        assert!(u.algebra.is_ideal(Side::TwoSided, &image));
        assert_eq!(image.dim(), 4);
    }

    #[test]
    fn opposite_is_involution() {
        let t2 = triangular(Q, 2);
        assert_eq!(t2.opposite().opposite(), t2);
        let c = Algebra::from_products(Q, 2, |i, j| {
            let mut v = vector::zeros(Q, 2);
            v[(i + j) % 2] = Q.one();
            v
        })
        .unwrap();
        assert_eq!(c.opposite(), c);
    }

    #[test]
    fn opposite_left_ideals_are_right_ideals() {
        let m2 = matrix_algebra(Q, 2);
        let op = m2.opposite();
        let e11 = el(&[1, 0, 0, 0]);
        let left_op = op.ideal_generated(Side::Left, std::slice::from_ref(&e11));
        let right = m2.ideal_generated(Side::Right, &[e11]);
        assert_eq!(left_op.space(), right.space());
        // first row: E11, E12
        assert_eq!(
            right.space(),
            &Subspace::span(Q, 4, [el(&[1, 0, 0, 0]).into_coords(), el(&[0, 1, 0, 0]).into_coords()])
        );
    }

    #[test]
    fn generated_ideals() {
        let t2 = triangular(Q, 2);
        let i = t2.ideal_generated(Side::Left, &[el(&[0, 1, 0])]);
        assert_eq!(i.space(), &Subspace::span(Q, 3, [el(&[0, 1, 0]).into_coords()]));
        let m2 = matrix_algebra(Q, 2);
        let col = m2.ideal_generated(Side::Left, &[el(&[1, 0, 0, 0])]);
        assert_eq!(
            col.space(),
            &Subspace::span(Q, 4, [el(&[1, 0, 0, 0]).into_coords(), el(&[0, 0, 1, 0]).into_coords()])
        );
        assert!(m2.ideal_generated(Side::Left, &[]).space().is_zero());
    }

    #[test]
    fn quotients() {
        let t2 = triangular(Q, 2);
        let zero = SidedIdeal::new(&t2, Side::TwoSided, Subspace::zero(Q, 3)).unwrap();
        let q = t2.quotient(&zero).unwrap();
        assert_eq!(q.target, t2);
        assert_eq!(q.projection, Matrix::identity(Q, 3));

        let all = SidedIdeal::new(&t2, Side::TwoSided, Subspace::full(Q, 3)).unwrap();
        assert_eq!(t2.quotient(&all).unwrap().target.dim(), 0);

        let rad = SidedIdeal::new(&t2, Side::TwoSided, Subspace::span(Q, 3, [el(&[0, 1, 0]).into_coords()]))
            .unwrap();
        let q = t2.quotient(&rad).unwrap();
        let expected = Algebra::from_products(Q, 2, |i, j| {
            let mut v = vector::zeros(Q, 2);
            if i == j {
                v[i] = Q.one();
            }
            v
        })
        .unwrap();
        assert_eq!(q.target, expected);
        assert_eq!(q.projection.mul(&q.section), Matrix::identity(Q, 2));

        let left = t2.ideal_generated(Side::Left, &[el(&[1, 0, 0])]);
        assert_eq!(t2.quotient(&left).unwrap_err(), Error::NotTwoSided);
    }

    #[test]
    fn idempotence() {
        let m2 = matrix_algebra(Q, 2);
        assert!(m2.is_idempotent(&m2.zero()));
        assert!(m2.is_idempotent(&m2.find_identity().unwrap()));
        assert!(triangular(Q, 2).is_idempotent(&el(&[1, 1, 0])));
        assert!(!m2.is_idempotent(&el(&[2, 0, 0, 0])));
    }

    #[test]
    fn non_ideal_rejected() {
        let m2 = matrix_algebra(Q, 2);
        let s = Subspace::span(Q, 4, [el(&[1, 0, 0, 0]).into_coords()]);
        assert_eq!(
            SidedIdeal::new(&m2, Side::Left, s).unwrap_err(),
            Error::NotAnIdeal("left")
        );
    }
}
