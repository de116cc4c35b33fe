//! Toolkit for the rainbow generalized Turán function ex(n, H, rainbow-F):
//! extremal properly edge-colored constructions, exact pattern censuses,
//! rainbow-copy detection, the greedy rainbow-path step, and exhaustive
//! ground truth on tiny instances.
//!
//! All values here are immutable after construction and all operations are
//! pure functions, so everything can be shared freely across threads.

pub mod cge;
pub mod census;
pub mod constructions;
pub mod fit;
pub mod graph;
pub mod lemma;
pub mod oracle;
pub mod pattern;

pub use census::{
    automorphism_count, count_copies, count_copies_with, enumerate_copies, find_rainbow_copy,
    find_rainbow_copy_with, run_census, CensusError, CensusOptions, CensusReport, RainbowWitness,
    SubgraphCopy,
};
pub use constructions::{Construction, ConstructionSpec, Family, Provenance};
pub use fit::{fit_exponent, ExponentFit};
pub use graph::{ColorId, ColoredGraph, Edge, GraphError, PairClass, ProperViolation};
pub use lemma::{AlternatingPath, LemmaError, LemmaInstance, RainbowCycle};
pub use oracle::{
    exact_extremal, p4_characterize, rainbow_free_colorable, ColorSearchOutcome, ExtremalResult,
    ExtremalStatus, OracleError, P4Characterization, SearchBudget,
};
pub use pattern::{Pattern, PatternError};
