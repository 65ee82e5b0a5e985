//! Finite groups that act freely on spheres: construction from invariant
//! tuples, enumeration, recognition from a Cayley table, and certified free
//! orthogonal representations.

pub mod builders;
pub mod class_equation;
pub mod cli;
pub mod error;
pub mod group;
pub mod numtheory;
pub mod recognition;
pub mod reps;
pub mod units;
pub mod wolf;

pub use error::{Error, Result};
pub use group::{Group, GroupHom, Subgroup};
