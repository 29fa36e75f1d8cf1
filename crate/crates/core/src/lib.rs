//! Exact arithmetic for polynomials over noncommutative division rings.
//!
//! Two concrete division algebras over Q are supported: quaternion algebras
//! `(a,b / Q)` and degree-3 cyclic algebras, the default one being
//! `(Q(th)/Q, th -> th^2 - 2, u^3 = 2)` with `th^3 - 3 th + 1 = 0`.
//!
//! On top of element arithmetic the crate provides the polynomial ring
//! `D[x]` with central `x`, right evaluation and right division, explicit
//! roots of products of linear factors, factor swapping, and a constructor
//! for quadratics having both infinitely many roots and infinitely many
//! non-roots inside one conjugacy class.
//!
//! ```
//! use skewroot_core::{parse_element, roots::linear_factor_roots, Algebra};
//!
//! let h = Algebra::hamilton();
//! let ds = vec![parse_element("i", &h).unwrap(), parse_element("1 + j", &h).unwrap()];
//! // P(x) = (x - (1 + j))(x - i); the first factor listed is the rightmost
//! let sol = linear_factor_roots(&ds).unwrap();
//! assert_eq!(sol.roots[1].zeta.to_string(), "1 + 2/3*i + 1/3*j + 2/3*k");
//! ```

pub mod algebra;
pub mod conjugacy;
pub mod error;
pub mod linalg;
pub mod rational;
pub mod roots;
pub mod skew_poly;
pub mod syntax;

pub use algebra::{Algebra, AlgebraDescriptor, CyclicCubic, Element};
pub use conjugacy::{
    are_conjugate, centralizer_basis, find_conjugator, minimal_polynomial, CentralPolynomial,
};
pub use error::{Error, Result};
pub use rational::Rational;
pub use roots::{CounterexampleReport, Root, RootSolution};
pub use skew_poly::SkewPolynomial;
pub use syntax::{parse_algebra, parse_element, parse_element_list, parse_poly};
