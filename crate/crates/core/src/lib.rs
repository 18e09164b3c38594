//! Exact commutative-algebra workbench for blowup algebras of monomial-type
//! ideals: a Groebner engine over GF(p) or the rationals, combinatorial monomial
//! and numerical-semigroup ideal arithmetic, presentations of the Rees algebra,
//! associated graded ring and fiber cone, graded free resolutions with Betti
//! tables and Castelnuovo-Mumford regularity, reduction numbers, and executable
//! Gorenstein / Cohen-Macaulay diagnostics.
//!
//! The narrative guide lives in `book/`; its code snippets compile as doc-tests
//! of this crate (see the [`guide`] module).

pub mod error;
pub mod field;
pub mod monomial;
pub mod order;
pub mod ring;
pub mod poly;
mod parse;
pub mod linalg;
pub mod groebner;
pub mod local;
pub mod semigroup;
pub mod resolution;
pub mod blowup;
pub mod verify;
pub mod taskfile;
pub mod guide;

pub use error::{Error, Result};
pub use field::{Coeff, Gf, Rat, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use poly::Polynomial;
pub use ring::Ring;
