//! Fincke–Pohst enumeration of short vectors in exact arithmetic.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{sign_normalize, Scalar};

/// `q(x) = Σᵢ dᵢ (xᵢ + Σ_{j>i} μᵢⱼ xⱼ)²`
struct Decomposition<T> {
    d: Vec<Ratio<T>>,
    mu: Matrix<Ratio<T>>,
}

fn decompose<T: Scalar>(gram: &Matrix<Ratio<T>>) -> Result<Decomposition<T>> {
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = gram.rows();
    let mut q = gram.clone();
    for i in 0..n {
        if !q[(i, i)].is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        for j in i + 1..n {
            q[(j, i)] = q[(i, j)].clone();
            let v = q[(i, j)].clone() / q[(i, i)].clone();
            q[(i, j)] = v;
        }
        for k in i + 1..n {
            for l in k..n {
                let v = q[(k, l)].clone() - q[(k, i)].clone() * q[(i, l)].clone();
                q[(k, l)] = v;
            }
        }
    }
    let d = (0..n).map(|i| q[(i, i)].clone()).collect();
    Ok(Decomposition { d, mu: q })
}

/// Whether a symmetric rational form is positive definite.
pub fn is_positive_definite<T: Scalar>(gram: &Matrix<Ratio<T>>) -> bool {
    decompose(gram).is_ok()
}

/// All nonzero integer vectors with `xᵀ · gram · x ≤ bound`, one per `±` pair.
///
/// The representative has its first nonzero coordinate positive; the list is
/// sorted lexicographically.
pub fn short_vectors<T: Scalar>(gram: &Matrix<Ratio<T>>, bound: &Ratio<T>) -> Result<Vec<Vec<T>>> {
    Ok(short_vectors_with_norms(gram, bound)?
        .into_iter()
        .map(|(x, _)| x)
        .collect())
}

/// Like [`short_vectors`], paired with the value of the form.
pub fn short_vectors_with_norms<T: Scalar>(
    gram: &Matrix<Ratio<T>>,
    bound: &Ratio<T>,
) -> Result<Vec<(Vec<T>, Ratio<T>)>> {
    let dec = decompose(gram)?;
    let n = gram.rows();
    let mut out = Vec::new();
    if n == 0 || !bound.is_positive() {
        return Ok(out);
    }
    let mut x = vec![T::zero(); n];
    descend(&dec, n, bound.clone(), bound, &mut x, &mut out);
    for (v, _) in out.iter_mut() {
        sign_normalize(v);
    }
    out.sort();
    Ok(out)
}

// Fix coordinate `level - 1` given the ones above it.
fn descend<T: Scalar>(
    dec: &Decomposition<T>,
    level: usize,
    remaining: Ratio<T>,
    bound: &Ratio<T>,
    x: &mut Vec<T>,
    out: &mut Vec<(Vec<T>, Ratio<T>)>,
) {
    if level == 0 {
        if x.iter().any(|v| !v.is_zero()) {
            out.push((x.clone(), bound.clone() - remaining));
        }
        return;
    }
    let i = level - 1;
    let n = x.len();
    let center = -(i + 1..n).fold(Ratio::zero(), |acc: Ratio<T>, j| {
        acc + dec.mu[(i, j)].clone() * Ratio::from_integer(x[j].clone())
    });
    let t = remaining.clone() / dec.d[i].clone();
    let Some((mut lo, hi)) = integer_window(&center, &t) else {
        return;
    };
    // Keep only vectors whose last nonzero coordinate is positive.
    if x[i + 1..].iter().all(Zero::is_zero) && lo.is_negative() {
        lo = T::zero();
    }
    let mut xi = lo;
    while xi <= hi {
        let diff = Ratio::from_integer(xi.clone()) - center.clone();
        let used = dec.d[i].clone() * diff.clone() * diff;
        if used <= remaining {
            x[i] = xi.clone();
            descend(dec, i, remaining.clone() - used, bound, x, out);
        }
        xi = xi + T::one();
    }
    x[i] = T::zero();
}

/// Integers `k` with `(k - c)² ≤ t`, as an inclusive window.
fn integer_window<T: Scalar>(c: &Ratio<T>, t: &Ratio<T>) -> Option<(T, T)> {
    if t.is_negative() {
        return None;
    }
    let s = t.ceil().to_integer().sqrt() + T::one();
    let fits = |k: &T| {
        let d = Ratio::from_integer(k.clone()) - c.clone();
        d.clone() * d <= *t
    };
    let mut lo = c.floor().to_integer() - s.clone();
    let mut hi = c.ceil().to_integer() + s;
    while lo <= hi && !fits(&lo) {
        lo = lo + T::one();
    }
    while hi >= lo && !fits(&hi) {
        hi = hi - T::one();
    }
    (lo <= hi).then_some((lo, hi))
}

/// Minimum of a positive-definite form on nonzero integer vectors; `None` in rank zero.
pub fn minimum<T: Scalar>(gram: &Matrix<Ratio<T>>) -> Result<Option<Ratio<T>>> {
    decompose(gram)?;
    let Some(bound) = (0..gram.rows()).map(|i| gram[(i, i)].clone()).min() else {
        return Ok(None);
    };
    Ok(short_vectors_with_norms(gram, &bound)?
        .into_iter()
        .map(|(_, q)| q)
        .min())
}
