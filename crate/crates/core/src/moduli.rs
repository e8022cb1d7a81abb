//! Numerical invariants of moduli spaces of twisted sheaves.

use num_bigint::BigInt;

use crate::brauer::{brauer_order, is_mukai_vector, BField};
use crate::error::{check_len, Error, Result};
use crate::lattice::{Lattice, Sublattice};
use crate::linalg::{complete_to_basis, kernel_basis, solve_in_lattice, Matrix};
use crate::mukai::{exp_twist, mukai_square, MukaiVector};
use crate::scalar::{content, int, Scalar};
use crate::walls::{general_for_bound, wall_bound_for};

/// `(v^⊥ ∩ C) / ℤv` together with the quotient map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicQuotient<T = BigInt> {
    pub lattice: Lattice<T>,
    pub perp_basis: Matrix<T>,
    pub proj: Matrix<T>,
}

/// Saturated basis (ambient coordinates) of `v^⊥` inside the row span of `container`.
fn perp_in<T: Scalar>(ambient: &Lattice<T>, container: &Matrix<T>, v: &[T]) -> Matrix<T> {
    let gv = ambient.gram().mul_vec(v);
    let functional = Matrix::new(1, container.rows(), container.mul_vec(&gv));
    let k = kernel_basis(&functional);
    &k * container
}

/// Quotient of `v^⊥ ∩ C` by `ℤv`, for isotropic `v` primitive in `C`.
pub(crate) fn isotropic_quotient<T: Scalar>(
    ambient: &Lattice<T>,
    container: &Matrix<T>,
    v: &[T],
) -> Result<IsotropicQuotient<T>> {
    let perp = perp_in(ambient, container, v);
    let y = solve_in_lattice(&perp, v).ok_or(Error::NotAlgebraic)?;
    let a = complete_to_basis(&y).ok_or_else(|| Error::NotPrimitive(content(&y).to_string()))?;
    let adapted = &a * &perp;
    let k = perp.rows();
    let quotient_rows = adapted.select_rows(1..k);
    let lattice = ambient.restrict(&quotient_rows)?;
    let a_inv = a.to_rational().inverse().and_then(|m| m.to_integer()).ok_or(Error::Identity("unimodular completion"))?;
    let cols: Vec<usize> = (1..k).collect();
    let proj = a_inv.select_cols(&cols);

    // The pairing descends: P G Pᵀ = proj · Q · projᵀ.
    let upstairs = ambient.gram().congruent(&perp);
    let downstairs = lattice.gram().congruent(&proj);
    if upstairs != downstairs {
        return Err(Error::Identity("pairing descent to v^perp / Zv"));
    }
    // Another lift of the quotient basis gives the same Gram matrix.
    let mut shifted = quotient_rows.clone();
    for i in 0..shifted.rows() {
        let f: T = int(i as i64 + 1);
        for j in 0..shifted.cols() {
            shifted[(i, j)] = shifted[(i, j)].clone() + f.clone() * v[j].clone();
        }
    }
    if ambient.gram().congruent(&shifted) != *lattice.gram() {
        return Err(Error::Identity("quotient Gram independent of lift"));
    }
    Ok(IsotropicQuotient {
        lattice,
        perp_basis: perp,
        proj,
    })
}

fn beauville_in<T: Scalar>(ambient: &Lattice<T>, container: &Matrix<T>, v: &[T]) -> Result<Lattice<T>> {
    let sq = ambient.square(v)?;
    if sq.is_negative() {
        return Err(Error::NegativeSquare(sq.to_string()));
    }
    if sq.is_zero() {
        return Ok(isotropic_quotient(ambient, container, v)?.lattice);
    }
    let perp = perp_in(ambient, container, v);
    ambient.restrict(&perp)
}

fn check_primitive<T: Scalar>(v: &[T]) -> Result<()> {
    let g = content(v);
    if g.is_zero() {
        Err(Error::ZeroVector)
    } else if !g.is_one() {
        Err(Error::NotPrimitive(g.to_string()))
    } else {
        Ok(())
    }
}

/// `v^⊥` when `⟨v,v⟩ > 0`, `v^⊥/ℤv` when `⟨v,v⟩ = 0`.
pub fn beauville_lattice<T: Scalar>(v: &[T], ambient: &Lattice<T>) -> Result<Lattice<T>> {
    check_len(ambient.rank(), v.len(), "Mukai vector")?;
    check_primitive(v)?;
    beauville_in(ambient, &Matrix::identity(ambient.rank()), v)
}

/// Integral classes of `H*` whose `T_{−ξ/r}`-transform has algebraic `H²` part.
pub fn algebraic_mukai_sublattice<T: Scalar>(b: &BField<T>, ns: &Sublattice<T>) -> Result<Matrix<T>> {
    let n = ns.ambient().rank();
    check_len(n, b.xi.len(), "B-field")?;
    // f_j annihilate NS; condition f_j · (r c − r' ξ) = 0 on (r', c, s).
    let annihilators = kernel_basis(ns.basis());
    let mut rows = Vec::with_capacity(annihilators.rows());
    for f in annihilators.row_iter() {
        let f_xi = crate::scalar::dot(f, &b.xi);
        let mut row = vec![-f_xi];
        row.extend(f.iter().map(|x| x.clone() * b.r.clone()));
        row.push(T::zero());
        rows.push(row);
    }
    if rows.is_empty() {
        return Ok(Matrix::identity(n + 2));
    }
    let m = Matrix::from_rows(rows, n + 2)?;
    Ok(kernel_basis(&m))
}

fn integral_mukai<T: Scalar>(v: &MukaiVector<T>, b: &BField<T>, ns: &Sublattice<T>) -> Result<Vec<T>> {
    check_len(ns.ambient().rank(), v.c.len(), "Mukai vector H2 part")?;
    let check = is_mukai_vector(v, b, ns)?;
    if !check.valid {
        return Err(Error::NotMukaiVector);
    }
    let u = exp_twist(v, &b.twist(), ns.ambient())?;
    let coords = u.integral_coords().ok_or(Error::NotMukaiVector)?;
    check_primitive(&coords)?;
    Ok(coords)
}

/// Beauville lattice restricted to the algebraic part of the twisted Hodge structure.
pub fn algebraic_beauville<T: Scalar>(
    v: &MukaiVector<T>,
    b: &BField<T>,
    ns: &Sublattice<T>,
) -> Result<Lattice<T>> {
    let u = integral_mukai(v, b, ns)?;
    let container = algebraic_mukai_sublattice(b, ns)?;
    let mukai = Lattice::mukai_over(ns.ambient());
    beauville_in(&mukai, &container, &u)
}

/// How the polarization enters [`moduli_report`].
#[derive(Clone, Copy, Debug)]
pub enum Polarization<'a, T> {
    /// Check generality of `H`, given in coordinates of the NS basis.
    Check(&'a [T]),
    /// Skip the generality check.
    AssumeGeneral,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliReport<T = BigInt> {
    pub pairing_square: T,
    pub dim: T,
    pub nonempty: bool,
    pub is_k3: bool,
    pub hilb_n: Option<T>,
    pub general_polarization_assumed: bool,
}

/// Invariants of the moduli space of `H`-semistable twisted sheaves with vector `v`.
pub fn moduli_report<T: Scalar>(
    v: &MukaiVector<T>,
    b: &BField<T>,
    ns: &Sublattice<T>,
    polarization: Polarization<'_, T>,
) -> Result<ModuliReport<T>> {
    if !v.r.is_positive() {
        return Err(Error::NonPositiveRank);
    }
    integral_mukai(v, b, ns)?;
    let sq = mukai_square(v, ns.ambient())?;
    if !sq.is_integer() {
        return Err(Error::NotMukaiVector);
    }
    let v2 = sq.to_integer();
    let two: T = int(2);
    if ns.ambient().is_even() && v2.is_odd() {
        return Err(Error::OddSquare(v2.to_string()));
    }
    let assumed = match polarization {
        Polarization::AssumeGeneral => true,
        Polarization::Check(h) => {
            let r0 = brauer_order(b, ns)?;
            let bound = wall_bound_for(&v.r, &r0, &crate::scalar::to_ratio(&v2))?;
            let witnesses = general_for_bound(h, &ns.lattice(), &bound)?;
            if !witnesses.is_empty() {
                return Err(Error::NotGeneral(witnesses.len()));
            }
            false
        }
    };
    let minus_two = -two.clone();
    let hilb_n = (v2 >= minus_two).then(|| v2.clone() / two.clone() + T::one());
    Ok(ModuliReport {
        dim: v2.clone() + two,
        nonempty: v2 >= minus_two,
        is_k3: v2.is_zero(),
        hilb_n,
        pairing_square: v2,
        general_polarization_assumed: assumed,
    })
}
