//! Exact arithmetic substrate: rationals, sparse multivariate polynomials,
//! dense univariate and bivariate polynomials, polynomial matrices.

mod bipoly;
pub(crate) mod intpoly;
pub mod linalg;
mod matrix;
mod monomial;
mod multipoly;
mod parse;
mod rational;
mod unipoly;

pub use bipoly::BiPoly;
pub(crate) use matrix::subsets;
pub use matrix::{jacobian, minors_k, PolyMatrix};
pub use monomial::Monomial;
pub use multipoly::{MultiPoly, Vars};
pub use parse::poly_parse;
pub use rational::{parse_rational, rat, ratio, Rational};
pub use unipoly::{squarefree_part, UniPoly};
