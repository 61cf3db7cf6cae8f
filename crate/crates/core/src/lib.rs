//! Computational commutative algebra over prime fields, aimed at codimension
//! two subschemes of projective space: Gröbner bases, free resolutions,
//! Ext and local cohomology, and the complete-intersection criteria for
//! subcanonical schemes.

pub mod cohomology;
pub mod construction;
pub mod error;
pub mod field;
pub mod groebner;
pub mod homology;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod subcanonical;
pub mod vector;

pub use error::{AlgebraError, Result};
pub use field::{PrimeField, DEFAULT_PRIME};
pub use groebner::GroebnerBasis;
pub use matrix::{pfaffian, GradedMatrix};
pub use monomial::Monomial;
pub use poly::Poly;
pub use ring::PolyRing;
pub use vector::Vector;
