//! Exact-arithmetic toolkit for Lovász–Saks–Schrijver (LSS) ideals.
//!
//! The crate computes the combinatorial invariants that control the algebra of
//! `L_G(d)` (maximum degree, degeneracy, the positive matching decomposition
//! number) and ships a small Gröbner engine used to machine-check identities
//! about these ideals on small instances.

pub mod graph;
pub mod groebner;
pub mod harness;
pub mod lp;
pub mod matching;
pub mod pmd;
pub mod poly;
pub mod reports;

pub use graph::{Edge, EliminationOrder, Family, Graph, GraphError};
pub use groebner::{GroebnerError, IdealBasis, MonomialIdeal};
pub use matching::{check_certificate, is_positive_matching, is_positive_matching_fast, MatchingError, WeightCertificate};
pub use pmd::{pmd, Budget, PmdDecomposition, PmdError, PmdResult, PmdStatus};
pub use poly::{Monomial, Polynomial, TermOrder, VarId, WeightVector};
