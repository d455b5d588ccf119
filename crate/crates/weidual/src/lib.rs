//! Demi-matroids and their Wei-type dualities.
//!
//! The central object is the [`DemiMatroid`]: a ground set together
//! with two monotone, cardinality-bounded subset functions tied by a
//! complementation identity. Demi-matroids close under two involutions
//! — the dual (swap the functions) and the supplement
//! (`f̄(X) = f(E) - f(E-X)`) — and carry four weight profiles whose
//! derived feature sets S, T, U, V partition `{1, .., n}` in two ways.
//! This crate computes all of it and checks the partitions on every
//! structure it builds.
//!
//! Concrete front-ends produce demi-matroids from:
//!
//! * matroids via rank oracles (explicit bases, uniform) — [`matroid`];
//! * multigraphs via the cycle matroid, with bond/cycle sequences and
//!   closed forms for complete and complete bipartite graphs —
//!   [`graph`];
//! * transversal set systems via bipartite matching, with plug
//!   sequences — [`transversal`];
//! * linear codes over finite fields, with generalized Hamming weights
//!   — [`code`], backed by exact GF(p^m) arithmetic in [`gf`] and
//!   [`linalg`].
//!
//! All types are immutable after construction and all operations are
//! pure, so everything is freely shareable across threads.

pub mod code;
pub mod corpus;
pub mod demimatroid;
pub mod doc;
pub mod gf;
pub mod graph;
pub mod linalg;
pub mod matroid;
pub mod subset;
pub mod transversal;

pub use code::{subcode_minimum_weights, word_support, CodeError, LinearCode, OracleMode, WeightHierarchy};
pub use demimatroid::{
    check_partition, DemiMatroid, DemiMatroidError, DualityReport, FeatureSets, PartitionCheck,
    PartitionLaw, RankTable, SingletonBound, TableSide, WeightProfile,
};
pub use doc::{demimatroid_document, Artifact, DocError, FieldSpec, InputDocument};
pub use graph::{klm_closed_form, km_closed_form, BondCycleSequences, GraphError, Multigraph};
pub use gf::{FieldError, FiniteField};
pub use linalg::{Echelon, FieldMatrix, LinalgError};
pub use matroid::{
    min_irredundant_union, vamos, CircuitFamily, FlatProfile, IrredundantUnion, Matroid,
    MatroidError, RankOracle, StSets,
};
pub use subset::{GroundSet, GroundSetError, Mask, DEFAULT_ENUM_CAP, MAX_ELEMENTS};
pub use transversal::{SequenceDiscrepancy, SetSystem, TransversalError, TransversalSequences};
