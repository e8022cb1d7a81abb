//! Hermite and Smith normal forms over the integers.


use super::Matrix;
use crate::scalar::Scalar;

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular and `u · m = h`. Nonzero rows of `h`
/// come first, each pivot is positive and strictly to the right of the pivot
/// above it, and entries above a pivot lie in `[0, pivot)`.
pub fn hnf<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = Matrix::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h[(i, c)].is_zero() {
                continue;
            }
            if h[(r, c)].is_zero() {
                h.swap_rows(r, i);
                u.swap_rows(r, i);
                continue;
            }
            let a = h[(r, c)].clone();
            let b = h[(i, c)].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (p, q) = (-(b / g.clone()), a / g);
            combine_rows(&mut h, r, i, &x, &y, &p, &q);
            combine_rows(&mut u, r, i, &x, &y, &p, &q);
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        let pivot = h[(r, c)].clone();
        for i in 0..r {
            let f = h[(i, c)].div_floor(&pivot);
            if !f.is_zero() {
                add_row_multiple(&mut h, i, r, &-f.clone());
                add_row_multiple(&mut u, i, r, &-f);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Number of nonzero rows of a matrix in Hermite normal form.
pub fn hnf_rank<T: Scalar>(h: &Matrix<T>) -> usize {
    h.row_iter()
        .take_while(|row| row.iter().any(|x| !x.is_zero()))
        .count()
}

/// Checks the shape produced by [`hnf`].
pub fn is_hnf<T: Scalar>(h: &Matrix<T>) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..h.rows() {
        match h.row(i).iter().position(|x| !x.is_zero()) {
            None => seen_zero = true,
            Some(c) => {
                if seen_zero || last_pivot.is_some_and(|p| c <= p) {
                    return false;
                }
                let pivot = &h[(i, c)];
                if !pivot.is_positive() {
                    return false;
                }
                if (0..i).any(|k| h[(k, c)].is_negative() || h[(k, c)] >= *pivot) {
                    return false;
                }
                last_pivot = Some(c);
            }
        }
    }
    true
}

/// Smith normal form: `(s, u, v)` with `u · m · v = s`, `u` and `v` unimodular,
/// `s` diagonal with non-negative entries `d₁ | d₂ | …`.
pub fn snf<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, Matrix<T>, Matrix<T>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !s[(i, j)].is_zero()
                        && best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_snf(s, u, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = s[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let f = s[(i, t)].div_floor(&pivot);
                if !f.is_zero() {
                    add_row_multiple(&mut s, i, t, &-f.clone());
                    add_row_multiple(&mut u, i, t, &-f);
                }
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let f = s[(t, j)].div_floor(&pivot);
                if !f.is_zero() {
                    add_col_multiple(&mut s, j, t, &-f.clone());
                    add_col_multiple(&mut v, j, t, &-f);
                }
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(s[(i, j)].clone() % pivot.clone()).is_zero())
            });
            match bad {
                Some(i) => {
                    add_row_multiple(&mut s, t, i, &T::one());
                    add_row_multiple(&mut u, t, i, &T::one());
                }
                None => break,
            }
        }
    }
    finish_snf(s, u, v)
}

fn finish_snf<T: Scalar>(
    mut s: Matrix<T>,
    mut u: Matrix<T>,
    v: Matrix<T>,
) -> (Matrix<T>, Matrix<T>, Matrix<T>) {
    for i in 0..s.rows().min(s.cols()) {
        if s[(i, i)].is_negative() {
            negate_row(&mut s, i);
            negate_row(&mut u, i);
        }
    }
    (s, u, v)
}

/// Diagonal of a Smith normal form.
pub fn invariant_factors<T: Scalar>(m: &Matrix<T>) -> Vec<T> {
    let (s, _, _) = snf(m);
    (0..s.rows().min(s.cols())).map(|i| s[(i, i)].clone()).collect()
}

/// Inverse of a unimodular integer matrix.
pub fn unimodular_inverse<T: Scalar>(m: &Matrix<T>) -> Option<Matrix<T>> {
    m.to_rational().inverse()?.to_integer()
}

/// Completes a primitive vector `y` to a unimodular matrix whose first row is `y`.
pub fn complete_to_basis<T: Scalar>(y: &[T]) -> Option<Matrix<T>> {
    // u · yᵀ = (1, 0, …)ᵀ, hence the first column of u⁻¹ is yᵀ.
    let col = Matrix::new(y.len(), 1, y.to_vec());
    let (h, u) = hnf(&col);
    if y.is_empty() || !h[(0, 0)].is_one() {
        return None;
    }
    Some(unimodular_inverse(&u)?.transpose())
}

fn combine_rows<T: Scalar>(m: &mut Matrix<T>, r: usize, i: usize, x: &T, y: &T, p: &T, q: &T) {
    for j in 0..m.cols() {
        let a = m[(r, j)].clone();
        let b = m[(i, j)].clone();
        m[(r, j)] = x.clone() * a.clone() + y.clone() * b.clone();
        m[(i, j)] = p.clone() * a + q.clone() * b;
    }
}

fn negate_row<T: Scalar>(m: &mut Matrix<T>, r: usize) {
    for j in 0..m.cols() {
        m[(r, j)] = -m[(r, j)].clone();
    }
}

/// `row[dst] += f · row[src]`
fn add_row_multiple<T: Scalar>(m: &mut Matrix<T>, dst: usize, src: usize, f: &T) {
    for j in 0..m.cols() {
        let v = m[(dst, j)].clone() + f.clone() * m[(src, j)].clone();
        m[(dst, j)] = v;
    }
}

/// `col[dst] += f · col[src]`
fn add_col_multiple<T: Scalar>(m: &mut Matrix<T>, dst: usize, src: usize, f: &T) {
    for i in 0..m.rows() {
        let v = m[(i, dst)].clone() + f.clone() * m[(i, src)].clone();
        m[(i, dst)] = v;
    }
}
