//! Integer kernels, saturation and lattice membership.

use num_traits::Zero;

use super::normal_form::{hnf, hnf_rank};
use super::Matrix;
use crate::scalar::Scalar;

/// Basis (as rows) of the integer kernel `{x ∈ ℤⁿ : m · x = 0}`, `n = m.cols()`.
///
/// The result is saturated: it spans the intersection of the rational kernel with ℤⁿ.
pub fn kernel_basis<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    // u · mᵀ = h; the rows of u opposite the zero rows of h span ker m.
    let (h, u) = hnf(&m.transpose());
    let rank = hnf_rank(&h);
    let mut k = u.select_rows(rank..u.rows());
    // Canonical representative of the kernel lattice.
    k = hnf(&k).0;
    k
}

/// Primitive closure of the row span: `(span_ℚ rows) ∩ ℤⁿ`, in Hermite normal form.
pub fn saturate<T: Scalar>(basis: &Matrix<T>) -> Matrix<T> {
    let annihilator = kernel_basis(basis);
    if annihilator.rows() == 0 {
        return Matrix::identity(basis.cols());
    }
    kernel_basis(&annihilator)
}

pub fn is_saturated<T: Scalar>(basis: &Matrix<T>) -> bool {
    let sat = saturate(basis);
    let (h, _) = hnf(basis);
    let rank = hnf_rank(&h);
    rank == sat.rows() && h.select_rows(0..rank) == sat
}

/// Rank of the row span.
pub fn row_rank<T: Scalar>(m: &Matrix<T>) -> usize {
    hnf_rank(&hnf(m).0)
}

/// Integer coefficients `x` with `x · basis = target`, if `target` lies in the row lattice.
pub fn solve_in_lattice<T: Scalar>(basis: &Matrix<T>, target: &[T]) -> Option<Vec<T>> {
    assert_eq!(basis.cols(), target.len());
    let (h, u) = hnf(basis);
    let rank = hnf_rank(&h);
    // Peel off pivots from the left.
    let mut rest = target.to_vec();
    let mut y = vec![T::zero(); basis.rows()];
    for (i, yi) in y.iter_mut().enumerate().take(rank) {
        let c = h.row(i).iter().position(|x| !x.is_zero()).expect("nonzero HNF row");
        if !rest[..c].iter().all(Zero::is_zero) {
            return None;
        }
        let (q, r) = rest[c].div_rem(&h[(i, c)]);
        if !r.is_zero() {
            return None;
        }
        for (j, v) in rest.iter_mut().enumerate() {
            *v = v.clone() - q.clone() * h[(i, j)].clone();
        }
        *yi = q;
    }
    if !rest.iter().all(Zero::is_zero) {
        return None;
    }
    Some(u.vec_mul(&y))
}

/// Rational coefficients `x` with `x · basis = target`, if `target` lies in the rational span.
pub fn solve_in_span<T: Scalar>(
    basis: &Matrix<T>,
    target: &[num_rational::Ratio<T>],
) -> Option<Vec<num_rational::Ratio<T>>> {
    basis.to_rational().solve_left(target)
}

pub fn in_rational_span<T: Scalar>(basis: &Matrix<T>, v: &[num_rational::Ratio<T>]) -> bool {
    if basis.rows() == 0 {
        return v.iter().all(Zero::is_zero);
    }
    solve_in_span(basis, v).is_some()
}

pub fn in_lattice<T: Scalar>(basis: &Matrix<T>, v: &[T]) -> bool {
    solve_in_lattice(basis, v).is_some()
}
