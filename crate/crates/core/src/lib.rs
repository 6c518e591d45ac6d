//! Exact braided exterior algebras over crossed modules, with the braided
//! Fourier transform, Hodge star and the associated Laplacians.

pub mod scalars;
pub mod linalg;
pub mod braiding;
pub mod nichols;
pub mod report;
pub mod fourier;
pub mod qplane;
pub mod hodge;
pub mod finite_group;
pub mod qsl2;
pub mod suites;
pub mod tables;
