//! Exact Wedderburn–Malcev decompositions of finite-dimensional associative
//! algebras, and the splitting `I = (I ∩ S) ⊕ (I ∩ R)` of one-sided ideals.
//!
//! Algebras are given by structure constants over `Q` or a prime field.
//! The pipeline is [`radical::radical`] → [`wedderburn::complement`] →
//! [`idempotents`] lifting → [`wedderburn::conjugate_to_contain`], wrapped
//! by [`splitting::split_ideal`]. Every stage certifies its own output and
//! [`splitting::verify_split`] re-checks a report from scratch.
//!
//! ```
//! use malcev::{corpus, split_ideal, Element, FieldSpec, Side};
//!
//! let q = FieldSpec::Rationals;
//! let t2 = corpus::triangular(q, 2); // basis E11, E12, E22
//! let i = t2.ideal_generated(Side::Left, &[Element::from_i64(q, &[1, 0, 0])]);
//! let report = split_ideal(&t2, &i).unwrap();
//! assert!(report.all_passed());
//! assert_eq!(report.i_s.dim() + report.i_r.dim(), i.dim());
//! ```

pub mod algebra;
pub mod arith;
pub mod corpus;
mod error;
pub mod idempotents;
pub mod io;
pub mod oracle;
pub mod radical;
pub mod splitting;
pub mod wedderburn;

pub use algebra::{Algebra, Element, QuotientMap, Side, SidedIdeal, Unitalization};
pub use arith::{FieldSpec, Matrix, Scalar, Subspace};
pub use error::{Error, Result};
pub use radical::RadicalData;
pub use splitting::{split_ideal, split_right_ideal, verify_split, SplitContext, SplitReport};
pub use wedderburn::ComplementData;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/radical.md")]
    mod radical {}
    #[doc = include_str!("../../../book/src/complements.md")]
    mod complements {}
    #[doc = include_str!("../../../book/src/idempotents.md")]
    mod idempotents {}
    #[doc = include_str!("../../../book/src/splitting.md")]
    mod splitting {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
