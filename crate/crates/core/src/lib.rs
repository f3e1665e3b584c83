//! Exact computation and verification of Drazin-type inverses in matrix
//! rings, and of how they transfer between the products `ac` and `bd` of
//! quadruples satisfying `bdb = bac` and `dbd = acd`.
//!
//! ```
//! use drazinkit::{drazin::drazin_inverse, matrix::SquareMatrix, ring::RingSpec};
//!
//! let a = SquareMatrix::from_ints(RingSpec::rationals(), [[1, 1], [0, 0]]);
//! let cert = drazin_inverse(&a).unwrap();
//! assert!(cert.valid);
//! assert_eq!(cert.index, Some(1));
//! assert_eq!(cert.inverse, a);
//! ```

pub mod arith;
pub mod drazin;
pub mod error;
pub mod json;
pub mod lab;
pub mod matrix;
pub mod ring;
pub mod spectral;

pub use arith::{Poly, Rational};
pub use error::{Error, Result};
pub use matrix::SquareMatrix;
pub use ring::RingSpec;
