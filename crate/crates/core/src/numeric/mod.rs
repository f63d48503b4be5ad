//! Small numerical kernels: adaptive quadrature, bracketing root search,
//! Lambert W, and a symmetric eigensolver for the tiny matrices used by the
//! density-matrix code.

pub mod eigen;
pub mod quadrature;
pub mod roots;
