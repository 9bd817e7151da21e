//! Exact computer algebra for glued schemes.
//!
//! Closed subschemes of a scheme, presented as affine patches glued along
//! principal opens, are represented by compatible families of ideals —
//! one canonical reduced Groebner basis per patch. Scheme-theoretic
//! intersection and union become per-patch ideal sum and intersection,
//! pullback becomes ideal extension, and equality of subschemes becomes
//! structural equality of the canonical bases.
//!
//! The polynomial and Groebner layers are generic over an exact
//! coefficient field ([`Coefficient`]); everything geometric works over
//! the concrete rationals via the [`Poly`] alias.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod laws;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod samples;
pub mod scalar;
pub mod scheme;
pub mod subscheme;
pub mod text;

pub use algebra::{AffineAlgebra, Ideal, RingMap};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use monomial::{Monomial, MonomialOrder};
pub use report::Report;
pub use scalar::{rat, Coefficient, Rational};
pub use scheme::{localize, GlueRecord, GluedScheme, PatchMap, SchemeMorphism};
pub use subscheme::ClosedSubscheme;

/// The polynomial type every geometric layer of the library works with:
/// exact rational coefficients.
pub type Poly = poly::Polynomial<Rational>;
