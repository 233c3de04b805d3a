//! Symbolic models of almost simple algebraic groups over a field.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`] — Dynkin diagrams in Bourbaki numbering, Cartan matrices,
//!   positive-root enumeration, diagram symmetries, and identification of
//!   induced subdiagrams.
//! * [`intlat`] — exact integer lattice algebra: Smith and Hermite normal
//!   forms, saturated kernels, and finite-order torus elements written as
//!   rational exponent vectors modulo 1.
//! * [`titsindex`] — the index of a semisimple group: diagram, twisting
//!   action, distinguished orbits, and an optional division-algebra degree,
//!   with a compact text grammar and a validator.
//! * [`centralizer`] — centralizers of split subtori: induced sub-indices,
//!   commuting-torus descriptors, centers of simply connected subgroups, and
//!   glued-product descriptions of anisotropic quotients.
//! * [`classify`] — a rule table mapping (index, isogeny, field context) to
//!   a rationality verdict with per-rule citations.
//! * [`report`] — the JSON-stable report assembled from all of the above;
//!   this is what the command line front end prints.
//!
//! All lattice arithmetic is exact (`num-bigint` / `num-rational`); nothing
//! in the crate rounds.

pub mod intlat;
pub mod rootsys;
pub mod centralizer;
pub mod classify;
pub mod report;
pub mod titsindex;

pub use centralizer::{
    anisotropic_quotient_descriptor, center_contained, center_of_sc, centralizer_index,
    commuting_torus, DiagonalizableGroupDescriptor, GluedProductDescriptor, InducedIndex,
    IndexComponent, QuotientFactor,
};
pub use classify::{classify, rule_table, FiredRule, Rule, RuleClass, Verdict, VerdictClass};
pub use intlat::{IntMat, SmithForm, TorusElement};
pub use report::{batch_entry, build_report, BatchEntry, DimensionStats, KernelComponent, Report};
pub use rootsys::{
    cartan_datum, components, diagram_automorphisms, positive_roots, CartanDatum,
    DiagramComponent, Permutation, RootVector, SimpleType,
};
pub use titsindex::{
    parse_index, FieldContext, IsogenyTag, TitsIndex, Violation,
};

/// Crate-wide error type.
///
/// Syntax and validation failures are user errors (the CLI maps them to exit
/// code 2); `Internal` marks states the algorithms treat as unreachable for
/// valid inputs (exit code 3).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank {rank} is not valid for type {ty}")]
    InvalidRank { ty: rootsys::SimpleType, rank: usize },
    #[error("vertex {0} is out of range for this diagram")]
    VertexOutOfRange(usize),
    #[error("not a permutation of the diagram vertices")]
    BadPermutation,
    #[error("syntax error at byte {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("invalid index: {}", format_violations(.0))]
    InvalidIndex(Vec<titsindex::Violation>),
    #[error("orbit of vertex {0} is not distinguished")]
    NotDistinguished(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

fn format_violations(vs: &[titsindex::Violation]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
