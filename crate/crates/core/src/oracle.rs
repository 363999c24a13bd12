//! Brute-force oracles over tiny prime fields.
//!
//! Everything here works by exhaustive enumeration of elements or
//! subspaces, never by the linear algebra the main modules use to find
//! things. Size guards are hard errors: a claim is either exhaustive or not
//! made.

use std::fmt;

use crate::algebra::{Algebra, Element, Side};
use crate::arith::{FieldSpec, Matrix, Subspace};
use crate::error::{Error, Result};
use crate::idempotents::{is_bar_minimal, right_equivalent};
use crate::radical;

/// Caps on the domains the oracles agree to enumerate.
pub const MAX_ELEMENTS: u64 = 1_000_000;
pub const MAX_SUBSPACES: u64 = 20_000;
pub const MAX_RADICAL_ELEMENTS: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub instance: String,
    pub property: String,
    pub domain_size: u64,
    pub agreements: u64,
    pub counterexamples: Vec<String>,
}

impl OracleReport {
    pub fn new(instance: &str, property: &str) -> Self {
        OracleReport {
            instance: instance.to_string(),
            property: property.to_string(),
            domain_size: 0,
            agreements: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.domain_size += 1;
        if ok {
            self.agreements += 1;
        } else {
            self.counterexamples.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {}/{} agree",
            self.instance, self.property, self.agreements, self.domain_size
        )?;
        for c in &self.counterexamples {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}

fn prime_of(field: FieldSpec) -> Result<u64> {
    match field {
        FieldSpec::PrimeField(p) => Ok(p),
        FieldSpec::Rationals => Err(Error::TooLarge("cannot enumerate over Q".into())),
    }
}

fn checked_pow(p: u64, e: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Every vector of `GF(p)^n`, in lexicographic order of residues.
pub fn all_vectors(field: FieldSpec, n: usize, cap: u64) -> Result<Vec<Vec<crate::arith::Scalar>>> {
    let p = prime_of(field)?;
    let total = checked_pow(p, n)
        .filter(|&t| t <= cap)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{n} vectors exceed the cap {cap}")))?;
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut rest = idx;
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(field.element(rest % p));
            rest /= p;
        }
        v.reverse();
        out.push(v);
    }
    Ok(out)
}

/// Number of subspaces of `GF(p)^n`, or `None` on overflow.
pub fn subspace_count(p: u64, n: usize) -> Option<u64> {
    // Gaussian binomials via the recurrence [n,k] = [n-1,k-1] + p^k [n-1,k]
    let mut row: Vec<u64> = vec![1];
    for m in 1..=n {
        let mut next = vec![1u64; m + 1];
        for k in 1..m {
            let pk = checked_pow(p, k)?;
            next[k] = row[k - 1].checked_add(pk.checked_mul(row[k])?)?;
        }
        row = next;
    }
    row.iter().try_fold(0u64, |acc, &x| acc.checked_add(x))
}

/// All subspaces of `GF(p)^n`, one per reduced row echelon form.
pub fn all_subspaces(field: FieldSpec, n: usize, cap: u64) -> Result<Vec<Subspace>> {
    let p = prime_of(field)?;
    let count = subspace_count(p, n)
        .filter(|&c| c <= cap)
        .ok_or_else(|| Error::TooLarge(format!("subspaces of GF({p})^{n} exceed the cap {cap}")))?;
    let mut out = Vec::with_capacity(count as usize);
    for mask in 0u32..(1u32 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&c| mask & (1 << c) != 0).collect();
        // free slots: (row, column) right of the row's pivot, not a pivot column
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                let pivots = &pivots;
                (pc + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let fill = checked_pow(p, slots.len()).expect("bounded by the subspace count");
        for idx in 0..fill {
            let mut m = Matrix::zeros(field, pivots.len(), n);
            for (r, &pc) in pivots.iter().enumerate() {
                m[(r, pc)] = field.one();
            }
            let mut rest = idx;
            for &(r, c) in &slots {
                m[(r, c)] = field.element(rest % p);
                rest /= p;
            }
            out.push(Subspace::from_matrix(&m));
        }
    }
    debug_assert_eq!(out.len() as u64, count);
    Ok(out)
}

/// All subspaces of `outer`, as subspaces of the ambient space.
pub fn subspaces_of(outer: &Subspace, cap: u64) -> Result<Vec<Subspace>> {
    let field = outer.field();
    let n = outer.ambient_dim();
    Ok(all_subspaces(field, outer.dim(), cap)?
        .into_iter()
        .map(|s| Subspace::span(field, n, s.basis_vectors().map(|c| outer.combination(c))))
        .collect())
}

/// All `e` with `e² = e`.
pub fn brute_idempotents(algebra: &Algebra) -> Result<Vec<Element>> {
    Ok(all_vectors(algebra.field(), algebra.dim(), MAX_ELEMENTS)?
        .into_iter()
        .map(Element::new)
        .filter(|e| algebra.is_idempotent(e))
        .collect())
}

fn is_nilpotent_space(algebra: &Algebra, space: &Subspace) -> bool {
    radical::power_chain(algebra, space).is_some()
}

/// The largest nilpotent two-sided ideal, found among all subspaces.
pub fn brute_radical(algebra: &Algebra) -> Result<Subspace> {
    let candidates: Vec<Subspace> = all_subspaces(algebra.field(), algebra.dim(), MAX_SUBSPACES)?
        .into_iter()
        .filter(|s| algebra.is_ideal(Side::TwoSided, s) && is_nilpotent_space(algebra, s))
        .collect();
    let top = candidates
        .iter()
        .max_by_key(|s| s.dim())
        .expect("the zero ideal is always a candidate")
        .clone();
    for c in &candidates {
        if !c.is_subspace_of(&top)? {
            return Err(Error::PostconditionFailed("nilpotent ideals without a largest one"));
        }
    }
    Ok(top)
}

/// The literal definition: no left ideal `J ⊊ I` has `J + R = I + R`.
pub fn brute_bar_minimal(algebra: &Algebra, radical: &Subspace, ideal: &Subspace) -> Result<bool> {
    let target = ideal.sum(radical)?;
    for j in subspaces_of(ideal, MAX_SUBSPACES)? {
        if j.dim() < ideal.dim() && algebra.is_ideal(Side::Left, &j) && j.sum(radical)? == target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches `r ∈ R` with `(1 + r) S₂ (1 + r)⁻¹ = S₁`.
pub fn brute_malcev_conjugacy(
    algebra: &Algebra,
    radical: &Subspace,
    s1: &Subspace,
    s2: &Subspace,
) -> Result<Element> {
    let field = algebra.field();
    let p = prime_of(field)?;
    checked_pow(p, radical.dim())
        .filter(|&t| t <= MAX_RADICAL_ELEMENTS)
        .ok_or_else(|| Error::TooLarge(format!("radical has more than {MAX_RADICAL_ELEMENTS} elements")))?;
    let unital = algebra.unitalization();
    let a1 = &unital.algebra;
    let one = unital.unit();
    let basis2: Vec<Element> = s2.basis_vectors().map(|v| unital.embed(&Element::new(v.to_vec()))).collect();
    for coeffs in all_vectors(field, radical.dim(), MAX_RADICAL_ELEMENTS)? {
        let r = Element::new(radical.combination(&coeffs));
        let r1 = unital.embed(&r);
        let u = &one + &r1;
        // (1 + r)⁻¹ = 1 - r + r² - …, finite since r is nilpotent
        let mut u_inv = one.clone();
        let mut term = one.clone();
        for _ in 0..=algebra.dim() {
            term = a1.mul(&term, &(-&r1));
            if term.is_zero() {
                break;
            }
            u_inv = &u_inv + &term;
        }
        if a1.mul(&u, &u_inv) != one {
            continue;
        }
        let image: Option<Vec<Vec<_>>> = basis2
            .iter()
            .map(|s| {
                unital
                    .restrict(&a1.mul(&a1.mul(&u, s), &u_inv))
                    .map(Element::into_coords)
            })
            .collect();
        if let Some(image) = image {
            if &Subspace::span(field, algebra.dim(), image) == s1 {
                return Ok(r);
            }
        }
    }
    Err(Error::NoWitness)
}

/// Exhaustive data of a tiny algebra, shared by the property reports.
#[derive(Clone, Debug)]
pub struct TinyCensus {
    pub name: String,
    pub algebra: Algebra,
    pub radical: Subspace,
    pub left_ideals: Vec<Subspace>,
    pub idempotents: Vec<Element>,
}

impl TinyCensus {
    pub fn new(name: &str, algebra: &Algebra) -> Result<Self> {
        let radical = brute_radical(algebra)?;
        let left_ideals = all_subspaces(algebra.field(), algebra.dim(), MAX_SUBSPACES)?
            .into_iter()
            .filter(|s| algebra.is_ideal(Side::Left, s))
            .collect();
        Ok(TinyCensus {
            name: name.to_string(),
            algebra: algebra.clone(),
            radical,
            left_ideals,
            idempotents: brute_idempotents(algebra)?,
        })
    }

    fn left_of(&self, e: &Element) -> Subspace {
        self.algebra.ideal_generated(Side::Left, std::slice::from_ref(e)).into_space()
    }

    fn library_bar_minimal(&self, ideal: &Subspace) -> bool {
        crate::algebra::SidedIdeal::new(&self.algebra, Side::Left, ideal.clone())
            .ok()
            .and_then(|i| is_bar_minimal(&self.algebra, &i))
            .map(|m| m.certified)
            .unwrap_or(false)
    }

    /// Left ideals that are bar-minimal by the literal definition.
    pub fn brute_bar_minimal_ideals(&self) -> Result<Vec<Subspace>> {
        let mut out = Vec::new();
        for i in &self.left_ideals {
            if brute_bar_minimal(&self.algebra, &self.radical, i)? {
                out.push(i.clone());
            }
        }
        Ok(out)
    }

    /// Brute-force bar-minimality agrees with the idempotent criterion on
    /// every left ideal, and every `Ae` passes the criterion.
    pub fn characterization(&self) -> Result<OracleReport> {
        let mut rep = OracleReport::new(&self.name, "bar-minimal iff generated by an idempotent");
        for i in &self.left_ideals {
            let brute = brute_bar_minimal(&self.algebra, &self.radical, i)?;
            let lib = self.library_bar_minimal(i);
            rep.record(brute == lib, || format!("ideal {i}: brute {brute}, library {lib}"));
        }
        for e in &self.idempotents {
            let ae = self.left_of(e);
            let ok = self.library_bar_minimal(&ae)
                && brute_bar_minimal(&self.algebra, &self.radical, &ae)?;
            rep.record(ok, || format!("A e for e = {e} is not bar-minimal"));
        }
        Ok(rep)
    }

    /// Right equivalence of idempotents matches equality of `Ae`, and
    /// `e ↦ Ae` hits every bar-minimal left ideal.
    pub fn bijection(&self) -> Result<OracleReport> {
        let mut rep = OracleReport::new(&self.name, "right equivalence classes match bar-minimal ideals");
        let ideals: Vec<Subspace> = self.idempotents.iter().map(|e| self.left_of(e)).collect();
        for (a, e1) in self.idempotents.iter().enumerate() {
            for (b, e2) in self.idempotents.iter().enumerate() {
                let eq = right_equivalent(&self.algebra, e1, e2)?;
                let same = ideals[a] == ideals[b];
                rep.record(eq == same, || {
                    format!("e1 = {e1}, e2 = {e2}: right equivalent {eq}, same ideal {same}")
                });
            }
        }
        for i in self.brute_bar_minimal_ideals()? {
            let hit = ideals.contains(&i);
            rep.record(hit, || format!("bar-minimal ideal {i} is not A e for any idempotent"));
        }
        Ok(rep)
    }

    /// Minimal non-nilpotent left ideals are all of the form `Ae`.
    pub fn minimal_non_nilpotent(&self) -> Result<OracleReport> {
        let mut rep = OracleReport::new(&self.name, "minimal non-nilpotent left ideals are A e");
        let non_nil: Vec<&Subspace> = self
            .left_ideals
            .iter()
            .filter(|i| !is_nilpotent_space(&self.algebra, i))
            .collect();
        let ideals: Vec<Subspace> = self.idempotents.iter().map(|e| self.left_of(e)).collect();
        for i in &non_nil {
            let minimal = non_nil
                .iter()
                .all(|j| j.dim() >= i.dim() || !j.is_subspace_of(i).unwrap_or(false));
            if minimal {
                let hit = ideals.contains(i);
                rep.record(hit, || format!("minimal non-nilpotent ideal {i} has no idempotent generator"));
            }
        }
        Ok(rep)
    }

    /// Brute radical against the trace criterion, when the latter applies.
    pub fn radical_agreement(&self) -> Result<OracleReport> {
        let mut rep = OracleReport::new(&self.name, "brute radical equals trace-form radical");
        let lib = radical::radical(&self.algebra)?;
        let ok = lib.space() == &self.radical;
        rep.record(ok, || format!("brute {}, trace form {}", self.radical, lib.space()));
        Ok(rep)
    }
}
