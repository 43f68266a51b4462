//! Skew-cyclic convolutional codes.
//!
//! The crate is layered bottom-up: [`galois`] fields, [`poly`] polynomials,
//! the cyclic ring `A = F[x]/(x^n-1)` in [`ring`], the skew polynomial ring
//! `A[z; σ]` in [`skew`], matrices over `F[z]` in [`linalg`], the
//! polynomial/matrix bridge in [`circulant`] and code-level constructions in
//! [`codes`].

pub mod circulant;
pub mod codes;
pub mod error;
pub mod fmat;
pub mod galois;
pub mod linalg;
pub mod poly;
pub mod ring;
pub mod skew;

pub use error::{Error, Result};
pub use galois::{Fe, Gf};
pub use poly::Poly;
