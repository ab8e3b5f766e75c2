//! Concrete carriers packaged for the generic checks.

use std::sync::Arc;

use crate::boolean_matrix::{enumerate_matrices, enumerate_matrices_uncapped, mat_add, mat_mul, BoolMatrix, Shape};
use crate::chain_maps::{self, enumerate, enumerate_uncapped, MonoidClass, Transformation};
use crate::error::Result;

use super::semiring::FiniteSemiring;

pub fn semiring_name(class: MonoidClass, n: usize) -> String {
    format!("{}_{n}", class.name())
}

pub fn matrix_semiring_name(shape: Shape, n: usize) -> String {
    format!("{}({n})", shape.name())
}

/// `O_n`, `C_n` or `C-_n` under pointwise max and composition.
pub fn semiring_from_transformations(n: usize, class: MonoidClass) -> Result<FiniteSemiring<Transformation>> {
    transformations(enumerate(n, class)?, n, class)
}

/// As [`semiring_from_transformations`] without the enumeration cap.
pub fn semiring_from_transformations_uncapped(n: usize, class: MonoidClass) -> Result<FiniteSemiring<Transformation>> {
    transformations(enumerate_uncapped(n, class)?, n, class)
}

fn transformations(elements: Vec<Transformation>, n: usize, class: MonoidClass) -> Result<FiniteSemiring<Transformation>> {
    FiniteSemiring::new(
        semiring_name(class, n),
        elements,
        Arc::new(|a: &Transformation, b: &Transformation| chain_maps::add(a, b).expect("same chain")),
        Arc::new(|a: &Transformation, b: &Transformation| chain_maps::compose(a, b).expect("same chain")),
    )
}

/// Boolean matrices of the given shape under entrywise max and the max-min product.
pub fn semiring_from_matrices(n: usize, shape: Shape) -> Result<FiniteSemiring<BoolMatrix>> {
    matrices(enumerate_matrices(n, shape)?, n, shape)
}

pub fn semiring_from_matrices_uncapped(n: usize, shape: Shape) -> Result<FiniteSemiring<BoolMatrix>> {
    matrices(enumerate_matrices_uncapped(n, shape)?, n, shape)
}

fn matrices(elements: Vec<BoolMatrix>, n: usize, shape: Shape) -> Result<FiniteSemiring<BoolMatrix>> {
    FiniteSemiring::new(
        matrix_semiring_name(shape, n),
        elements,
        Arc::new(|a: &BoolMatrix, b: &BoolMatrix| mat_add(a, b).expect("same size")),
        Arc::new(|a: &BoolMatrix, b: &BoolMatrix| mat_mul(a, b).expect("same size")),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carrier_sizes() {
        let s = semiring_from_transformations(3, MonoidClass::Cminus).unwrap();
        assert_eq!(s.len(), 5);
        assert!(s.axioms_checked());
        assert_eq!(semiring_from_transformations(3, MonoidClass::O).unwrap().len(), 10);
        assert_eq!(semiring_from_matrices(2, Shape::Upper).unwrap().len(), 8);
        assert_eq!(s.name(), "C-_3");
    }

    #[test]
    fn caps_apply() {
        assert!(semiring_from_transformations(9, MonoidClass::O).is_err());
        assert!(semiring_from_matrices(5, Shape::Full).is_err());
    }

    #[test]
    fn large_carriers_skip_the_axiom_check() {
        let s = semiring_from_matrices(4, Shape::Upper).unwrap();
        assert_eq!(s.len(), 1024);
        assert!(!s.axioms_checked());
    }

    #[test]
    fn pow_matches_naive_composition() {
        let s = semiring_from_transformations(4, MonoidClass::O).unwrap();
        for a in 0..s.len() {
            let mut naive = a;
            for k in 1..8 {
                assert_eq!(s.pow(a, k), naive);
                assert_eq!(s.element(s.pow(a, k)), &chain_maps::power(s.element(a), k));
                naive = s.mul(naive, a);
            }
        }
    }
}
