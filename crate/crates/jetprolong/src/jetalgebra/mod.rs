//! Exact polynomial ring in jet variables whose coefficients are integer
//! combinations of partial derivatives of the vector-field components.
//!
//! Every value has a unique canonical form (sorted jet indices, sorted
//! monomial factors, merged terms, no zeros), so structural equality of two
//! canonical polynomials is equality of the formulas they denote.

mod dims;
mod jet;
mod poly;
mod symbol;

pub use dims::Dims;
pub use jet::{JetMonomial, JetVariable};
pub use poly::{CoefficientPolynomial, PolyBuilder, RawTerm, SymbolCombination, TermDiff};
pub use symbol::{DerivativeSymbol, Head};
