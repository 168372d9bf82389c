//! Exact computation of resultants of multihomogeneous polynomial systems as
//! Cayley determinants of Koszul complex slices, with the multiplicity
//! estimates (p-adic divisibility, directional order of vanishing) they
//! satisfy, and interpolation ideals on G_a x G_m inside P^1 x P^1.

pub mod arith;
pub mod exactla;
pub mod extpoly;
pub mod interp;
pub mod koszul;
pub mod modslice;
pub mod mpoly;
pub mod multiplicity;
pub mod resultant;

pub mod cli;
