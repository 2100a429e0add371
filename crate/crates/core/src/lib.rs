//! Roots of Dehn twists about nonseparating circles on nonorientable surfaces.
//!
//! Conjugacy classes of roots of degree `n` correspond to equivalence classes
//! of arithmetic *data sets* (see [`dataset`]). This crate enumerates them,
//! computes maximal root degrees both by search and from closed-form case
//! analysis, studies primary roots, and checks the mod 2 homology obstruction
//! to square roots.

pub mod arithmetic;
pub mod dataset;
pub mod enumeration;
pub mod error;
pub mod homology;
pub mod max_degree;
pub mod primary;

pub use arithmetic::{
    mod_inverse, solve_composite_system, solve_simple_system, CongruenceSolution, Residue,
};
pub use dataset::{are_equivalent, Condition, ConePoint, DataSet, DataSetType, ValidationReport};
pub use enumeration::{
    enumerate_classes, enumerate_datasets, root_exists, root_exists_closed_form, GenusQuery, Shape,
};
pub use error::{Error, Result};
pub use homology::F2Matrix;
pub use max_degree::{
    caseb_census, exceptional_table, max_degree_bruteforce, max_degree_closed_form, CaseBCensus,
    CaseId, DegreeBound, MaxDegreeResult,
};
pub use primary::{
    construction_dataset, degree3_exists, primary_exists_bruteforce, primary_exists_closed_form,
    PrimaryQuery,
};
