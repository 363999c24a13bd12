//! Splitting a one-sided ideal along a Wedderburn–Malcev complement.
//!
//! For a left ideal `I` that is not nilpotent, lift an idempotent `e ∈ I`
//! with `Ae` bar-minimal, conjugate a complement `S` until `e ∈ S`, and read
//! off `I_S = I ∩ S`, `I_R = I ∩ R`. Right ideals go through the opposite
//! algebra: same `S`, same `R`, and `J = eA` in place of `Ae`.
//!
//! [`verify_split`] is the acceptance authority. It recomputes everything it
//! checks from the algebra, the ideal and the report, without touching any
//! state built by [`split_ideal`].

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::algebra::{Algebra, Element, Side, SidedIdeal};
use crate::arith::Subspace;
use crate::error::{Error, Result};
use crate::idempotents::{self, is_bar_minimal};
use crate::io::algebra_id;
use crate::radical::{self, RadicalData};
use crate::wedderburn::{self, ComplementData};

/// Names of the boolean checks in [`SplitReport::checks`].
pub const CHECK_NAMES: [&str; 10] = [
    "radical_R",
    "direct_sum_A",
    "subalgebra_S",
    "semisimple_S",
    "direct_sum_I",
    "e_idempotent",
    "e_in_S",
    "J_bar_minimal",
    "bar_J_equals_bar_I",
    "bar_I_S_equals_bar_I",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    /// SHA-256 of the canonical encoding of the algebra.
    pub algebra_id: String,
    pub side: Side,
    pub ideal: Subspace,
    pub radical: Subspace,
    pub s: Subspace,
    /// Zero when the ideal is nilpotent.
    pub e: Element,
    /// `Ae` for left ideals, `eA` for right ideals.
    pub j: Subspace,
    pub i_s: Subspace,
    pub i_r: Subspace,
    pub checks: BTreeMap<String, bool>,
}

impl SplitReport {
    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|&v| v)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        failed(&self.checks)
    }
}

/// Names of the checks that came out false.
pub fn failed(checks: &BTreeMap<String, bool>) -> Vec<&str> {
    checks
        .iter()
        .filter(|(_, &v)| !v)
        .map(|(k, _)| k.as_str())
        .collect()
}

/// Radical and one certified complement of an algebra, shared by every
/// ideal split against it.
#[derive(Debug)]
pub struct SplitContext {
    algebra: Algebra,
    id: String,
    rad: RadicalData,
    complement: ComplementData,
    opposite: OnceLock<Result<Box<SplitContext>>>,
}

impl SplitContext {
    pub fn new(algebra: &Algebra) -> Result<Self> {
        let rad = radical::radical(algebra).map_err(Error::at("radical"))?;
        Self::from_radical_data(algebra, rad)
    }

    /// For characteristics outside the trace criterion: the radical is
    /// supplied (e.g. by enumeration) and certified.
    pub fn with_radical(algebra: &Algebra, radical_space: Subspace) -> Result<Self> {
        let rad = radical::certify(algebra, radical_space).map_err(Error::at("radical"))?;
        Self::from_radical_data(algebra, rad)
    }

    fn from_radical_data(algebra: &Algebra, rad: RadicalData) -> Result<Self> {
        let complement = wedderburn::complement(algebra, &rad).map_err(Error::at("complement"))?;
        Ok(SplitContext {
            algebra: algebra.clone(),
            id: algebra_id(algebra),
            rad,
            complement,
            opposite: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn radical(&self) -> &RadicalData {
        &self.rad
    }

    pub fn complement(&self) -> &ComplementData {
        &self.complement
    }

    fn opposite(&self) -> Result<&SplitContext> {
        self.opposite
            .get_or_init(|| {
                let op = self.algebra.opposite();
                SplitContext::with_radical(&op, self.rad.space().clone()).map(Box::new)
            })
            .as_ref()
            .map(|b| b.as_ref())
            .map_err(Clone::clone)
    }

    /// Splits a left, right or two-sided ideal. Two-sided ideals are
    /// treated as left ideals.
    pub fn split(&self, ideal: &SidedIdeal) -> Result<SplitReport> {
        let mut report = match ideal.side() {
            Side::Left | Side::TwoSided => self.split_left(ideal.space())?,
            Side::Right => {
                let mut r = self.opposite()?.split_left(ideal.space())?;
                r.side = Side::Right;
                r
            }
        };
        report.algebra_id = self.id.clone();
        report.checks = verify_split_with_radical(&self.algebra, self.rad.space(), ideal, &report);
        Ok(report)
    }

    fn split_left(&self, ideal_space: &Subspace) -> Result<SplitReport> {
        let a = &self.algebra;
        let ideal = SidedIdeal::new(a, Side::Left, ideal_space.clone())?;
        let r = self.rad.space();
        let seed = idempotents::lifting_seed(a, &self.rad, &ideal).map_err(Error::at("lifting seed"))?;
        let (s, e) = match seed {
            None => (self.complement.space.clone(), a.zero()),
            Some((_, x)) => {
                let (e, _, _) = idempotents::lift_from_ideal(a, &self.rad, &ideal, &x)
                    .map_err(Error::at("idempotent lifting"))?;
                let (s, _) = wedderburn::conjugate_to_contain(a, &self.rad, &self.complement, &e)
                    .map_err(Error::at("conjugation"))?;
                (s.space, e)
            }
        };
        let i_s = ideal_space.intersect(&s)?;
        let i_r = ideal_space.intersect(r)?;
        let j = a.ideal_generated(Side::Left, std::slice::from_ref(&e)).into_space();
        Ok(SplitReport {
            algebra_id: self.id.clone(),
            side: Side::Left,
            ideal: ideal_space.clone(),
            radical: r.clone(),
            s,
            e,
            j,
            i_s,
            i_r,
            checks: BTreeMap::new(),
        })
    }
}

/// Runs the whole pipeline for one ideal.
pub fn split_ideal(algebra: &Algebra, ideal: &SidedIdeal) -> Result<SplitReport> {
    SplitContext::new(algebra)?.split(ideal)
}

/// [`split_ideal`] with a supplied radical.
pub fn split_ideal_with_radical(
    algebra: &Algebra,
    radical_space: Subspace,
    ideal: &SidedIdeal,
) -> Result<SplitReport> {
    SplitContext::with_radical(algebra, radical_space)?.split(ideal)
}

/// Right ideals through the opposite algebra.
pub fn split_right_ideal(algebra: &Algebra, ideal: &SidedIdeal) -> Result<SplitReport> {
    if ideal.side() == Side::Left {
        return Err(Error::NotAnIdeal("right"));
    }
    let right = SidedIdeal::new(algebra, Side::Right, ideal.space().clone())?;
    split_ideal(algebra, &right)
}

/// Independent check of a report. Recomputes the radical by the trace
/// criterion; where that criterion does not apply, the report's radical is
/// certified instead and `radical_R` records the outcome.
pub fn verify_split(algebra: &Algebra, ideal: &SidedIdeal, report: &SplitReport) -> BTreeMap<String, bool> {
    match radical::radical(algebra) {
        Ok(rad) => verify_split_with_radical(algebra, rad.space(), ideal, report),
        Err(_) => {
            let certified = radical::certify(algebra, report.radical.clone()).is_ok();
            let mut checks = verify_split_with_radical(algebra, &report.radical, ideal, report);
            checks.insert("radical_R".into(), certified);
            checks
        }
    }
}

/// [`verify_split`] against a radical the caller trusts.
pub fn verify_split_with_radical(
    algebra: &Algebra,
    radical_space: &Subspace,
    ideal: &SidedIdeal,
    report: &SplitReport,
) -> BTreeMap<String, bool> {
    let mut checks: BTreeMap<String, bool> = CHECK_NAMES.iter().map(|k| (k.to_string(), false)).collect();
    let n = algebra.dim();
    let field = algebra.field();
    let dims_ok = [&report.ideal, &report.radical, &report.s, &report.j, &report.i_s, &report.i_r]
        .iter()
        .all(|s| s.ambient_dim() == n && s.field() == field)
        && report.e.dim() == n
        && report.e.coords().iter().all(|c| c.field() == field)
        && radical_space.ambient_dim() == n;
    if !dims_ok {
        return checks;
    }
    let right = report.side == Side::Right;
    let op;
    let b = if right {
        op = algebra.opposite();
        &op
    } else {
        algebra
    };
    let mut set = |k: &str, v: bool| {
        checks.insert(k.to_string(), v);
    };
    let inter = |x: &Subspace, y: &Subspace| x.intersect(y).expect("same ambient space");
    let sum = |x: &Subspace, y: &Subspace| x.sum(y).expect("same ambient space");

    let r = radical_space;
    let s = &report.s;
    let i = ideal.space();
    set("radical_R", &report.radical == r);

    let side_ok = matches!(
        (report.side, ideal.side()),
        (Side::Right, Side::Right | Side::TwoSided) | (Side::Left, Side::Left | Side::TwoSided)
    );
    let wedderburn::ComplementChecks {
        subalgebra,
        trivial_intersection,
        spans,
        semisimple,
    } = wedderburn::check_complement(algebra, r, s);
    set("direct_sum_A", trivial_intersection && spans && s.dim() + r.dim() == n);
    set("subalgebra_S", subalgebra);
    set("semisimple_S", semisimple);

    let i_s_ok = report.i_s == inter(i, s);
    let i_r_ok = report.i_r == inter(i, r);
    let direct = inter(&report.i_s, &report.i_r).is_zero()
        && &sum(&report.i_s, &report.i_r) == i
        && report.i_s.dim() + report.i_r.dim() == i.dim();
    set(
        "direct_sum_I",
        side_ok && &report.ideal == i && i_s_ok && i_r_ok && direct,
    );

    let e = &report.e;
    set("e_idempotent", b.is_idempotent(e));
    set("e_in_S", s.contains(e.coords()));

    // J = Ae in the algebra in which the ideal is a left ideal
    let j = b.ideal_generated(Side::Left, std::slice::from_ref(e)).into_space();
    let j_min = report.j == j
        && j.is_subspace_of(i).unwrap_or(false)
        && SidedIdeal::new(b, Side::Left, j.clone())
            .ok()
            .and_then(|jj| is_bar_minimal(b, &jj))
            .map(|m| m.certified)
            .unwrap_or(false);
    set("J_bar_minimal", j_min);

    match SidedIdeal::new(algebra, Side::TwoSided, r.clone()).and_then(|ri| algebra.quotient(&ri)) {
        Ok(q) => {
            let ibar = q.project_space(i);
            set("bar_J_equals_bar_I", q.project_space(&j) == ibar);
            set("bar_I_S_equals_bar_I", q.project_space(&report.i_s) == ibar);
        }
        Err(_) => {
            set("bar_J_equals_bar_I", false);
            set("bar_I_S_equals_bar_I", false);
        }
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldSpec;
    use crate::corpus::{matrix_algebra, triangular};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn el(v: &[i64]) -> Element {
        Element::from_i64(Q, v)
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::span(Q, n, vs.iter().map(|v| el(v).into_coords()))
    }

    fn left(a: &Algebra, s: Subspace) -> SidedIdeal {
        SidedIdeal::new(a, Side::Left, s).unwrap()
    }

    #[test]
    fn triangular_left_ideal() {
        let t2 = triangular(Q, 2);
        let i = left(&t2, span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        let rep = split_ideal(&t2, &i).unwrap();
        assert_eq!(rep.s, span(3, &[&[1, 0, 0], &[0, 0, 1]]));
        assert_eq!(rep.e, el(&[1, 0, 0]));
        assert_eq!(rep.i_s, span(3, &[&[1, 0, 0]]));
        assert_eq!(rep.i_r, span(3, &[&[0, 1, 0]]));
        assert_eq!(rep.j, span(3, &[&[1, 0, 0]]));
        assert!(rep.all_passed(), "{:?}", rep.failed_checks());
        assert_eq!(rep.checks.len(), CHECK_NAMES.len());
    }

    #[test]
    fn nilpotent_ideal_lies_in_radical() {
        let t2 = triangular(Q, 2);
        let i = left(&t2, span(3, &[&[0, 1, 0]]));
        let rep = split_ideal(&t2, &i).unwrap();
        assert!(rep.i_s.is_zero());
        assert_eq!(rep.i_r, i.space().clone());
        assert!(rep.e.is_zero());
        assert!(rep.all_passed());
    }

    #[test]
    fn semisimple_column() {
        let m2 = matrix_algebra(Q, 2);
        // E11, E21
        let i = left(&m2, span(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]));
        let rep = split_ideal(&m2, &i).unwrap();
        assert_eq!(rep.s, Subspace::full(Q, 4));
        assert_eq!(rep.i_s, i.space().clone());
        assert!(rep.i_r.is_zero());
        assert!(rep.all_passed());
    }

    #[test]
    fn right_ideal_of_triangular() {
        let t2 = triangular(Q, 2);
        let i = SidedIdeal::new(&t2, Side::Right, span(3, &[&[0, 0, 1], &[0, 1, 0]])).unwrap();
        let rep = split_right_ideal(&t2, &i).unwrap();
        assert_eq!(rep.side, Side::Right);
        assert_eq!(rep.e, el(&[0, 0, 1]));
        assert_eq!(rep.i_s, span(3, &[&[0, 0, 1]]));
        assert_eq!(rep.i_r, span(3, &[&[0, 1, 0]]));
        assert!(rep.all_passed(), "{:?}", rep.failed_checks());

        let nil = SidedIdeal::new(&t2, Side::Right, span(3, &[&[0, 1, 0]])).unwrap();
        let rep = split_right_ideal(&t2, &nil).unwrap();
        assert_eq!(rep.i_r, nil.space().clone());
        assert!(rep.all_passed());
    }

    #[test]
    fn two_sided_ideal_in_semisimple_algebra() {
        let m2 = matrix_algebra(Q, 2);
        let whole = Subspace::full(Q, 4);
        let l = split_ideal(&m2, &SidedIdeal::new(&m2, Side::Left, whole.clone()).unwrap()).unwrap();
        let r = split_right_ideal(&m2, &SidedIdeal::new(&m2, Side::Right, whole.clone()).unwrap()).unwrap();
        assert_eq!(l.i_s, whole);
        assert_eq!(r.i_s, whole);
    }

    #[test]
    fn right_split_matches_opposite_left_split() {
        let t3 = triangular(Q, 3);
        let i = t3.ideal_generated(Side::Right, &[Element::from_i64(Q, &[1, 1, 0, 0, 1, 0])]);
        let rep = split_ideal(&t3, &i).unwrap();
        let op = t3.opposite();
        let as_left = SidedIdeal::new(&op, Side::Left, i.space().clone()).unwrap();
        let op_rep = split_ideal(&op, &as_left).unwrap();
        assert_eq!(
            (&rep.s, &rep.e, &rep.j, &rep.i_s, &rep.i_r, &rep.checks),
            (&op_rep.s, &op_rep.e, &op_rep.j, &op_rep.i_s, &op_rep.i_r, &op_rep.checks)
        );
    }

    #[test]
    fn tampered_reports_fail() {
        let t2 = triangular(Q, 2);
        let i = left(&t2, span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        let rep = split_ideal(&t2, &i).unwrap();

        let mut bad = rep.clone();
        bad.s = span(3, &[&[1, 0, 0], &[0, 1, 1]]);
        let checks = verify_split(&t2, &i, &bad);
        assert!(!checks["subalgebra_S"]);

        let mut bad = rep.clone();
        bad.i_s = Subspace::zero(Q, 3);
        let checks = verify_split(&t2, &i, &bad);
        assert_eq!(failed(&checks), vec!["bar_I_S_equals_bar_I", "direct_sum_I"]);

        let mut bad = rep;
        bad.e = el(&[1, 0, 1]);
        let checks = verify_split(&t2, &i, &bad);
        assert!(checks["e_idempotent"]);
        assert!(!checks["J_bar_minimal"]);
    }

    #[test]
    fn deterministic() {
        let t3 = triangular(Q, 3);
        let i = t3.ideal_generated(Side::Left, &[Element::from_i64(Q, &[1, 2, 0, 3, 0, 1])]);
        assert_eq!(split_ideal(&t3, &i).unwrap(), split_ideal(&t3, &i).unwrap());
    }
}
