//! Finite ai-semirings and exhaustive checks over them.

pub mod adapters;
pub mod check;
pub mod optimality;
pub mod semiring;
pub mod term;

pub use adapters::{
    semiring_from_matrices, semiring_from_matrices_uncapped, semiring_from_transformations,
    semiring_from_transformations_uncapped,
};
pub use check::{
    check_homomorphism, check_identity, check_identity_with, check_injective, check_isomorphism_exists,
    Binding, CheckOptions, CheckReport, Verdict, Witness,
};
pub use optimality::{absorption_identity, optimality_witnesses, power_identity, triangular_identities, OptimalityWitnesses};
pub use semiring::{FiniteSemiring, Operation, Ops};
pub use term::{eval_term, Identity, Term};
