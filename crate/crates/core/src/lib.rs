//! Exact computation in the mirabolic quantum Schur algebras `MU_v(2,d)`,
//! the algebra `MU_v(2)`, their simple modules and the mirabolic tensor
//! space, with a finite-field point-counting oracle.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decorated;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod pbw;
pub mod rep;
pub mod schur;
pub mod tensor;
pub mod word;
