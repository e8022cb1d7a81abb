//! Invariants of integral symmetric bilinear forms.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::kernel::kernel_basis;
use super::normal_form::invariant_factors;
use super::Matrix;
use crate::error::{check_len, Error, Result};
use crate::scalar::Scalar;

/// Inertia of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(pos: usize, neg: usize, zero: usize) -> Self {
        Signature { pos, neg, zero }
    }

    pub fn rank(&self) -> usize {
        self.pos + self.neg + self.zero
    }
}

impl std::ops::Add for Signature {
    type Output = Signature;
    fn add(self, o: Signature) -> Signature {
        Signature::new(self.pos + o.pos, self.neg + o.neg, self.zero + o.zero)
    }
}

/// Exact inertia by symmetric Gaussian elimination over ℚ.
pub fn signature<T: Scalar>(gram: &Matrix<T>) -> Result<Signature> {
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut a = gram.to_rational();
    let mut n = a.rows();
    let mut sig = Signature::default();
    let mut k = 0;
    while k < n {
        if a[(k, k)].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                a.swap_rows(k, i);
                a.swap_cols(k, i);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // a_kk = 0 = a_jj and a_kj ≠ 0: e_k ↦ e_k + e_j gives a_kk = 2 a_kj.
                for c in 0..n {
                    let v = a[(k, c)].clone() + a[(j, c)].clone();
                    a[(k, c)] = v;
                }
                for r in 0..n {
                    let v = a[(r, k)].clone() + a[(r, j)].clone();
                    a[(r, k)] = v;
                }
            } else {
                // Row k vanishes on the active block: a radical direction.
                sig.zero += 1;
                n -= 1;
                a.swap_rows(k, n);
                a.swap_cols(k, n);
                continue;
            }
        }
        eliminate(&mut a, k, n);
        if a[(k, k)].is_positive() {
            sig.pos += 1;
        } else {
            sig.neg += 1;
        }
        k += 1;
    }
    Ok(sig)
}

fn eliminate<T: Scalar>(a: &mut Matrix<Ratio<T>>, k: usize, n: usize) {
    let p = a[(k, k)].clone();
    for i in k + 1..n {
        if a[(i, k)].is_zero() {
            continue;
        }
        let f = a[(i, k)].clone() / p.clone();
        for c in 0..n {
            let v = a[(i, c)].clone() - f.clone() * a[(k, c)].clone();
            a[(i, c)] = v;
        }
        for r in 0..n {
            let v = a[(r, i)].clone() - f.clone() * a[(r, k)].clone();
            a[(r, i)] = v;
        }
    }
}

/// Invariant factors `dᵢ > 1` of `coker(gram)`, ascending; empty for unimodular forms.
pub fn discriminant_group<T: Scalar>(gram: &Matrix<T>) -> Result<Vec<T>> {
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let d = invariant_factors(gram);
    if d.iter().any(Zero::is_zero) {
        return Err(Error::Degenerate);
    }
    Ok(d.into_iter().filter(|x| !x.is_one()).collect())
}

/// Saturated basis (rows) of `{x : (x, vᵢ) = 0 for every row vᵢ}`.
pub fn orthogonal_complement<T: Scalar>(gram: &Matrix<T>, vectors: &Matrix<T>) -> Result<Matrix<T>> {
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if vectors.rows() == 0 {
        return Ok(Matrix::identity(gram.rows()));
    }
    check_len(gram.rows(), vectors.cols(), "complement vector length")?;
    Ok(kernel_basis(&(vectors * gram)))
}

/// Whether every diagonal entry is even.
pub fn is_even<T: Scalar>(gram: &Matrix<T>) -> bool {
    (0..gram.rows()).all(|i| gram[(i, i)].is_even())
}
