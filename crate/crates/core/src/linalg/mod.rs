//! Exact integer and rational linear algebra.

mod enumerate;
mod forms;
mod kernel;
mod matrix;
mod normal_form;

pub use enumerate::{is_positive_definite, minimum, short_vectors, short_vectors_with_norms};
pub use forms::{discriminant_group, is_even, orthogonal_complement, signature, Signature};
pub use kernel::{
    in_lattice, in_rational_span, is_saturated, kernel_basis, row_rank, saturate,
    solve_in_lattice, solve_in_span,
};
pub use matrix::{int_matrix, Matrix};
pub use normal_form::{
    complete_to_basis, hnf, hnf_rank, invariant_factors, is_hnf, snf, unimodular_inverse,
};
