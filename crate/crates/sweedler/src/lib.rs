//! Exact invariants of finite-dimensional Hopf algebras given by structure
//! constants over cyclotomic fields.
//!
//! The crate is layered bottom-up:
//!
//! * [`cyclo`] — arithmetic in Q(ζ_N) with exact rationals and explicit
//!   conductor tracking (never floating point, never numeric minimization);
//! * [`linalg`] — dense matrices with cyclotomic entries;
//! * [`structures`] — Hopf algebras as structure-constant tables, the axiom
//!   checker, duals, tensor products, group algebras, and automorphisms;
//! * [`reps`] — matrix representations and characters;
//! * [`invariants`] — twisted Sweedler powers, twisted exponents (by
//!   definition and through the order of a canonical element on V ⊗ H*),
//!   and twisted indicators (character-sum and trace forms);
//! * [`builtin`] — bundled example algebras, automorphisms, and modules;
//! * [`io`] — the on-disk algebra/representation formats with canonical,
//!   byte-stable export.
//!
//! Every computation is exact; two independently derived quantities are
//! compared with `==`, not with tolerances.

pub mod builtin;
pub mod cyclo;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod reps;
pub mod structures;

pub use cyclo::{parse_cyc, CycNumber, CycloError, Rational};
pub use invariants::{
    default_bound, find_integral, gamma_is_counit, indicator_charsum, indicator_report,
    indicator_trace, is_large_compared, q_element, twisted_exponent, twisted_exponent_via_q,
    twisted_power, ExponentResult, IndicatorMethod, IndicatorReport, InvariantError,
};
pub use io::{
    export_algebra, export_representation, import_algebra, import_representation, ImportedAlgebra,
    IoError,
};
pub use linalg::Matrix;
pub use reps::{character, regular_representation, verify_representation, Character, Representation};
pub use structures::{Elem, HopfAlgebra, HopfAutomorphism, StructureError, VerificationReport};
