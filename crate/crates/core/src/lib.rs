//! Simple closed curves on the once-punctured Klein bottle.
//!
//! π₁ of the punctured Klein bottle is free on `a` (one-sided) and `b`
//! (two-sided). This crate
//!
//! * reduces and canonicalizes words ([`word`]),
//! * applies the mapping class group generators `t_b`, `y`, `w1` ([`mcg`]),
//! * decides whether a conjugacy class is represented by a simple closed curve
//!   and reports the topology of its complement ([`classify`]),
//! * produces explicit generator sequences moving a curve to one of four base
//!   curves ([`orbit`]),
//! * evaluates the upper-triangular representation into PGL(2,ℝ) exactly and
//!   checks that it is non-injective yet kills no power of a simple closed
//!   curve ([`rep`], [`theorem`]).
//!
//! Conjugacy classes are considered up to inversion, matching the fact that an
//! unoriented curve determines a class only up to orientation.

pub mod checks;
pub mod classify;
pub mod error;
pub mod laurent;
pub mod mcg;
pub mod orbit;
pub mod perm;
pub mod rep;
pub mod theorem;
pub mod word;

pub use classify::{
    build_oracle_set, classify, classify_cyclic, enumerate_classes, ClassEntry, SccClass, SurfacePiece,
    TopoType,
};
pub use error::{Error, ParseError, Result};
pub use laurent::LaurentPoly;
pub use mcg::{EndoMap, McgGenerator, McgWord};
pub use orbit::{c0_elements, canonicalize, verify_canonicalization, BaseCurve, CanonicalizationResult};
pub use perm::{a5_image, Permutation5};
pub use rep::{kernel_witness, rho, rho_at, rho_letter, Params, RationalUTMatrix, UTMatrix};
pub use theorem::{check_params, verify_theorem41, ParamCheck, Report, Violation, ViolationKind};
pub use word::{parse_word, CyclicWord, ExponentPair, Generator, Letter, Word};
