//! Exact construction of pointed Hopf algebras `u(D,0,0) = B(V)#kG` of finite Cartan
//! type, their duals and Drinfeld doubles, integrals, distinguished grouplikes, and
//! the Kauffman–Radford ribbon criterion.
//!
//! Every scalar is an exact element of a cyclotomic field ([`cyclotomic::CycNum`]).

pub mod abelian;
pub mod algebra;
pub mod appendix;
pub mod cartan;
pub mod cli;
pub mod cyclotomic;
pub mod double;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod ribbon;

pub use error::{Error, Result};
