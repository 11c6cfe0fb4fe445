//! Finite-algebra workbench for CI-groupoids.
//!
//! A groupoid `(Q, ·)` is *left CI* when some map `J_r : Q → Q` satisfies
//! `(x · y) · J_r(x) = y` for all `x, y`. Every left CI-groupoid turns out
//! to be a quasigroup with a bijective, unique `J_r`; this crate checks the
//! identity on Cayley tables, derives `J_r` and `J_l` from a bare table,
//! and enumerates all left CI-groupoids of small order to verify those
//! consequences exhaustively.
//!
//! ```
//! use ci_quasigroup::{classify, CayleyTable, Classification};
//!
//! let z3 = CayleyTable::cyclic_group(3).unwrap();
//! let report = classify(&z3).unwrap();
//! assert_eq!(report.classification, Classification::CiLoop);
//! assert_eq!(report.jr.unwrap().image(), &[0, 2, 1]);
//! ```
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod algebra;
pub mod ci;
pub mod cli;
pub mod error;
pub mod io;
pub mod search;

pub use algebra::{
    compose, identity_element, invert, invert_map, is_automorphism, is_bijective,
    is_left_quasigroup, is_quasigroup, is_right_quasigroup, left_translation, right_translation,
    CayleyTable, Element, Permutation, TotalMap,
};
pub use ci::{
    check_left_ci, check_right_ci, ci_loop_report, classify, derive_left_j, derive_right_j,
    solve_left, solve_left_unchecked, translation_form_holds, CiReport, Classification,
};
pub use error::{Error, Result};
pub use search::{
    canonical_form, enumerate, enumerate_classes, enumerate_oracle, enumerate_propagate,
    random_quasigroup, relabel, verify_theorem, CiStructure, IsoClass, Mode, SearchConfig,
    TheoremReport,
};
