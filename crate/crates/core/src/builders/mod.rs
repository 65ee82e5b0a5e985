//! Named groups, space-form tuples, and the construction of a group from
//! its tuple.

mod build;
mod enumerate;
mod named;
mod tuple;

pub use build::{build_tuple, build_tuple_with_limit, StructuredGroup, Witnesses};
pub use enumerate::{count_by_order, enumerate_tuples};
pub use named::{binary_dihedral, cyclic, permutation_group, quaternion, sl2_3, sl2_5, sl2_matrices};
pub use tuple::{b_is_valid, validate_tuple, SpaceFormTuple, SpaceFormType, Violation};
