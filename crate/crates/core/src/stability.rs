//! Comparison of twisted Hilbert polynomials.
//!
//! Coefficients are taken in the binomial basis,
//! `χ(m) = Σᵢ aᵢ·C(m+i, i)`, listed from `a_d` down to `a_0`. Since `C(m+i, i)`
//! has degree exactly `i` with positive leading term, the order of two such
//! polynomials for `m ≫ 0` is the lexicographic order of their coefficient
//! lists from the top degree down.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertCoeffs<T: Scalar = BigInt> {
    pub d: usize,
    /// `a_d, a_{d−1}, …, a_0`.
    pub a: Vec<Ratio<T>>,
}

impl<T: Scalar> HilbertCoeffs<T> {
    pub fn new(d: usize, a: Vec<Ratio<T>>) -> Result<Self> {
        if a.len() != d + 1 {
            return Err(Error::Dimension {
                expected: d + 1,
                found: a.len(),
                context: "Hilbert coefficients",
            });
        }
        Ok(HilbertCoeffs { d, a })
    }

    pub fn leading(&self) -> &Ratio<T> {
        &self.a[0]
    }

    /// Reduced coefficients `aᵢ / a_d`, top degree first.
    pub fn reduced(&self) -> Result<Vec<Ratio<T>>> {
        let lead = self.leading().clone();
        if !lead.is_positive() {
            return Err(Error::NonPositiveLeading);
        }
        Ok(self.a.iter().map(|x| x.clone() / lead.clone()).collect())
    }

    /// `a_{d−1} / a_d`, or zero in dimension zero.
    pub fn slope(&self) -> Result<Ratio<T>> {
        let red = self.reduced()?;
        Ok(red.get(1).cloned().unwrap_or_else(Ratio::zero))
    }

    /// Value at `m`, evaluated in the binomial basis.
    pub fn evaluate(&self, m: &Ratio<T>) -> Ratio<T> {
        let mut total = Ratio::zero();
        for (k, a) in self.a.iter().enumerate() {
            let i = self.d - k;
            // C(m+i, i) = Π_{j=1..i} (m + j) / j
            let mut binom = Ratio::from_integer(T::one());
            for j in 1..=i {
                let jj = Ratio::from_integer(T::from_usize(j).expect("small index"));
                binom = binom * (m.clone() + jj.clone()) / jj;
            }
            total = total + a.clone() * binom;
        }
        total
    }
}

/// Order of the reduced Hilbert polynomials `χ_F/a_d(F)` and `χ_E/a_d(E)` for `m ≫ 0`.
///
/// `Greater` means `F` destabilizes `E`. When `F` has smaller dimension its
/// reduced polynomial is eventually smaller.
pub fn stability_compare<T: Scalar>(f: &HilbertCoeffs<T>, e: &HilbertCoeffs<T>) -> Result<Ordering> {
    if f.d > e.d {
        return Err(Error::DimensionOrder);
    }
    let rf = f.reduced()?;
    let re = e.reduced()?;
    let mut padded = vec![Ratio::zero(); e.d - f.d];
    padded.extend(rf);
    Ok(padded.cmp(&re))
}

/// Compares `a_{d−1}(F)/a_d(F)` with `a_{d−1}(E)/a_d(E) + λ`.
///
/// `E` is of type `λ` when this is never `Greater` over its subsheaves.
pub fn type_lambda_compare<T: Scalar>(
    f: &HilbertCoeffs<T>,
    e: &HilbertCoeffs<T>,
    lambda: &Ratio<T>,
) -> Result<Ordering> {
    if f.d > e.d {
        return Err(Error::DimensionOrder);
    }
    Ok(f.slope()?.cmp(&(e.slope()? + lambda.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn h(a: &[i64]) -> HilbertCoeffs<i64> {
        HilbertCoeffs::new(a.len() - 1, a.iter().map(|&x| rat(x, 1)).collect()).unwrap()
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(stability_compare(&h(&[1, 1]), &h(&[2, 2])).unwrap(), Ordering::Equal);
        assert_eq!(stability_compare(&h(&[1, 2]), &h(&[2, 2])).unwrap(), Ordering::Greater);
        assert_eq!(stability_compare(&h(&[1, 0]), &h(&[1, 1])).unwrap(), Ordering::Less);
    }

    #[test]
    fn destabilizing_example_matches_evaluation() {
        let (f, e) = (h(&[1, 2]), h(&[2, 2]));
        let m = rat(1000, 1);
        let lhs = f.evaluate(&m) / f.leading().clone();
        let rhs = e.evaluate(&m) / e.leading().clone();
        assert!(lhs > rhs);
    }

    #[test]
    fn lower_dimension_is_smaller() {
        assert_eq!(stability_compare(&h(&[5]), &h(&[1, 0])).unwrap(), Ordering::Less);
        assert_eq!(stability_compare(&h(&[1, 0, 0]), &h(&[1, 0])), Err(Error::DimensionOrder));
    }

    #[test]
    fn nonpositive_leading_rejected() {
        assert_eq!(stability_compare(&h(&[0, 1]), &h(&[1, 1])), Err(Error::NonPositiveLeading));
        assert_eq!(stability_compare(&h(&[1, 1]), &h(&[-1, 1])), Err(Error::NonPositiveLeading));
    }

    #[test]
    fn type_lambda() {
        let (f, e) = (h(&[1, 3]), h(&[2, 2]));
        assert_eq!(type_lambda_compare(&f, &e, &rat(0, 1)).unwrap(), Ordering::Greater);
        assert_eq!(type_lambda_compare(&f, &e, &rat(2, 1)).unwrap(), Ordering::Equal);
        assert_eq!(type_lambda_compare(&f, &e, &rat(5, 2)).unwrap(), Ordering::Less);
    }

    #[test]
    fn evaluation_in_binomial_basis() {
        // a_1 C(m+1,1) + a_0 at m = 3: 2·4 + 5
        assert_eq!(h(&[2, 5]).evaluate(&rat(3, 1)), rat(13, 1));
    }
}
