//! Exact grammatical calculus for Eulerian-type polynomials.
//!
//! A context-free grammar (a map from variables to polynomials) acts as a
//! formal derivative on Laurent polynomials with big-integer coefficients.
//! Iterating it produces the Eulerian polynomials `A_n(x,y)`, the trivariate
//! second-order Eulerian polynomials `C_n(x,y,z)` and the Andre polynomials;
//! [`symexp`] rewrites them in the gamma and elementary symmetric bases,
//! [`egf`] checks generating-function identities with truncated series, and
//! [`oracle`] recomputes everything by brute-force enumeration.
//! [`verify`] ties the routes together into named check suites.

pub mod egf;
pub mod expr;
pub mod grammar;
pub mod oracle;
pub mod poly;
pub mod symexp;
pub mod verify;

pub use egf::{EgfError, EgfSeries};
pub use expr::{parse, parse_in, print, ExprError};
pub use grammar::{
    andre, eulerian, load_grammar, load_grammar_file, second_order, Grammar, GrammarError, Preset,
};
pub use oracle::{Labeling, PlaneTree};
pub use poly::{Monomial, PolyError, Polynomial, Var};
pub use symexp::{EExpansion, ExpansionError, GammaExpansion};
pub use verify::{Check, Report, Suite, VerifyConfig};
