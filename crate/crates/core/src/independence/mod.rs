//! Eisenstein independence over the completion at infinity: the
//! embedding of K into K_infinity and the triangularity certificate
//! for the lattice-sum matrix.

pub mod completion;
pub mod mmatrix;

pub use completion::{CompletionContext, KInfElem};
pub use mmatrix::{independence_certificate, m_matrix, MMatrix, MMatrixCertificate};
