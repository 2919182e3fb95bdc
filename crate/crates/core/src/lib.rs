//! Exact q-series, residue calculus over Q(√5) and Ramanujan–Fine integrals at level 10.

pub mod field5;
pub mod kernel10;
pub mod qseries;
pub mod rational;
pub mod search;
pub mod verify;
pub mod numeric;
