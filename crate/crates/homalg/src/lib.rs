//! Exact-arithmetic commutative algebra over standard graded quotient rings.
//!
//! The crate works with rings `R = k[x_1..x_n]/I` where `I` is homogeneous,
//! `k` is the prime field `F_32003` or the rationals, and everything carries
//! the standard grading (all variables in degree 1). On top of multivariate
//! polynomial arithmetic and Buchberger's algorithm it builds finitely
//! presented graded modules, minimal free resolutions, Tor and Ext, and the
//! homological invariants derived from them (depth, grade, Serre conditions,
//! transposes, Fitting ideals, Hilbert series).
//!
//! No floating point is used anywhere; every answer is exact.

pub mod error;
pub mod field;
pub mod monomial;
pub mod poly;
pub mod parse;
pub mod ring;
pub mod groebner;
pub mod ideal;
pub mod matrix;
pub mod oracle;
pub mod hilbert;
pub mod fpmod;
pub mod homology;
pub mod invariants;

pub use error::{EngineError, Result};
pub use field::{Field, Gf32003, Rat};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Ambient, Polynomial, Term};
pub use ring::QuotientRing;
pub use ideal::Ideal;
pub use fpmod::{FPModule, FreeModule};
pub use hilbert::{HilbertFunction, HilbertSeries};
pub use homology::{BettiTable, DepthValue, PdResult, Resolution};
