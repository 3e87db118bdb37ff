//! Exact symbolic kernel for ordered colored rooted forests.
//!
//! The crate implements the graded Hopf algebra living on ordered forests —
//! the algebraic backbone of Lie-Butcher theory for Lie group integrators —
//! together with its unordered (Butcher / Connes-Kreimer) and free
//! associative relatives:
//!
//! * [`forest`]: trees, forests, the grammar, grading, the unordered
//!   quotient, symmetry coefficients;
//! * [`enumerate`]: bounded enumeration and colored Catalan counting;
//! * [`lincomb`]: exact-rational linear combinations, inner product,
//!   concatenation and shuffle products, tensor-square combinations;
//! * [`graft`]: left grafting (recursive and direct) and the
//!   Grossman-Larson product;
//! * [`cut`]: nodal/left/admissible/full/word cuts and their application;
//! * [`hopf`]: coproducts, antipodes, signed reversal, deconcatenation and
//!   convolution;
//! * [`butcher`]: the unordered Hopf algebra, symmetrization and its
//!   inverse and dual;
//! * [`series`]: truncated dual series, composition, inversion,
//!   logarithmic/exponential predicates, exp and log;
//! * [`verify`]: the exhaustive law battery behind `otree verify`.
//!
//! All scalars are exact rationals; every value is immutable and every
//! operation a pure function, so the whole kernel is thread-safe.
//!
//! ```
//! use otree_core::forest::parse_forest;
//! use otree_core::graft::gl_product;
//! use otree_core::hopf::antipode;
//! use otree_core::LinComb;
//!
//! let w = LinComb::from(parse_forest("(())").unwrap());
//! assert_eq!(gl_product(&w, &w).to_string(), "(())(()) + ((())()) + (((())))");
//! assert_eq!(antipode(&w).to_string(), "2·()() - (())");
//! ```

pub mod butcher;
pub mod cut;
pub mod enumerate;
pub mod forest;
pub mod graft;
pub mod hopf;
pub mod lincomb;
pub mod rational;
pub mod series;
pub mod verify;

pub use forest::{Color, Forest, Tree, UForest};
pub use lincomb::{LinComb, TensorComb};
pub use rational::Rational;
pub use series::{Series, USeries};
