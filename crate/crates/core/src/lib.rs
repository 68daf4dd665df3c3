//! Exact computation of k-Schur functions and related symmetric functions.

pub mod cache;
pub mod exactalg;
pub mod kschur;
pub mod macdonald;
pub mod memo;
pub mod partitions;
pub mod symfunc;
pub mod tables;
pub mod vertex;
pub mod verify;
