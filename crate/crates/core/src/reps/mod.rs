//! Free orthogonal representations: quaternion models of the core,
//! induction to the whole group, and numerical certification.

mod core;
mod embedding;
mod quat;
mod rep;

pub use self::core::{
    free_rep_core, free_representation, prime_generated_core, prime_generated_core_of, quaternion_rep, rotation_rep,
    CoreShape, PrimeCore,
};
pub use embedding::{
    hurwitz_table, hurwitz_units, icosian_table, icosians, quaternion_embedding, unit_table, BinaryKind, UnitTable,
    CLOSURE_TOL,
};
pub use quat::{left_mult_matrix, quat_mul, right_mult_matrix, Quat};
pub use rep::{
    commutant_dimension, dump_matrices, induce_rep, least_coset_reps, verify_free, FreenessCertificate,
    InducedStructure, RealRep, Verdict, DEFAULT_TOL,
};
