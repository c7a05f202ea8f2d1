//! Matroid computation library: connectivity analysis, wheel and whirl
//! constructions, canonical-form isomorphism, and exhaustive enumeration of
//! small matroids.
//!
//! Matroids are stored behind one of several representations (explicit basis
//! family, linear over a small prime field, graphic, uniform) with a shared
//! query interface. All derived objects (minors, duals, sums) materialize
//! basis families, so results never depend on the input representation.

pub mod census;
pub mod connectivity;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod iso;
pub mod matroid;
pub mod ops;
pub mod set;
pub mod suites;

pub use census::{census, CensusFilter, CensusRecord};
pub use connectivity::{PropertyFlags, SeparationWitness, SEARCH_MAX};
pub use construct::{recognize_wheel_or_whirl, wheel, whirl, WheelKind, WheelLabeling};
pub use enumerate::{enumerate_matroids, extend, modular_cuts, naive_enumerate, ModularCut};
pub use error::{Error, Result};
pub use io::{parse_matroid, read_matroid_file, serialize_matroid, write_matroid_file, NamedMatroid};
pub use iso::{are_isomorphic, canonical_form, CanonicalForm, CANONICAL_MAX};
pub use matroid::{Matroid, Rep};
pub use set::{ElementMap, ElementPartition, ElementSet, MAX_GROUND_SET};
pub use suites::{run_all, run_suite, Corpus, Suite, SuiteOutcome, SuiteReport, ALL_SUITES, DEFAULT_KMAX, DEFAULT_NMAX};
