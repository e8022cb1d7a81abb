//! Certified isometries between lattices.
//!
//! These model cohomological Fourier–Mukai correspondences at the level of
//! the Mukai lattice: an [`Isometry`] is a matrix `M` acting on column
//! coordinate vectors with `Mᵀ · G_target · M = G_source`, checked whenever
//! one is built.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::One;

use crate::brauer::{twist_comparison_isometry, BField, BrauerWitness, TwistComparison};
use crate::error::{check_len, Error, Result};
use crate::lattice::{Lattice, Sublattice};
use crate::linalg::Matrix;
use crate::moduli::{isotropic_quotient, IsotropicQuotient};
use crate::scalar::{content, to_ratio, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry<T: Scalar = BigInt> {
    pub matrix: Matrix<Ratio<T>>,
    pub source: Lattice<T>,
    pub target: Lattice<T>,
}

impl<T: Scalar> Isometry<T> {
    /// Certifies `Mᵀ · G_target · M = G_source`.
    pub fn new(matrix: Matrix<Ratio<T>>, source: Lattice<T>, target: Lattice<T>) -> Result<Self> {
        check_len(source.rank(), matrix.cols(), "isometry columns")?;
        check_len(target.rank(), matrix.rows(), "isometry rows")?;
        let pulled = &(&matrix.transpose() * &target.gram().to_rational()) * &matrix;
        if pulled != source.gram().to_rational() {
            return Err(Error::NotIsometry);
        }
        Ok(Isometry {
            matrix,
            source,
            target,
        })
    }

    pub fn from_integer(matrix: Matrix<T>, source: Lattice<T>, target: Lattice<T>) -> Result<Self> {
        Self::new(matrix.to_rational(), source, target)
    }

    pub fn identity(lattice: Lattice<T>) -> Self {
        Isometry {
            matrix: Matrix::identity(lattice.rank()),
            source: lattice.clone(),
            target: lattice,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.matrix.to_integer().is_some()
    }

    pub fn integer_matrix(&self) -> Option<Matrix<T>> {
        self.matrix.to_integer()
    }

    pub fn apply(&self, x: &[Ratio<T>]) -> Result<Vec<Ratio<T>>> {
        check_len(self.source.rank(), x.len(), "isometry argument")?;
        Ok(self.matrix.mul_vec(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.matrix.inverse().ok_or(Error::Degenerate)?;
        Isometry::new(inv, self.target.clone(), self.source.clone())
    }
}

/// `g ∘ f`, re-certified.
pub fn compose<T: Scalar>(g: &Isometry<T>, f: &Isometry<T>) -> Result<Isometry<T>> {
    if f.target.gram() != g.source.gram() {
        return Err(Error::LatticeMismatch);
    }
    Isometry::new(&g.matrix * &f.matrix, f.source.clone(), g.target.clone())
}

/// Whether `⟨x, Ψ(y)⟩ = ⟨Ψ^∨(x), y⟩` for all `x ∈ L`, `y ∈ L'`, where
/// `psi: L' → L` and `psi_dual: L → L'`.
pub fn adjoint_check<T: Scalar>(psi: &Isometry<T>, psi_dual: &Isometry<T>) -> bool {
    if psi_dual.source.gram() != psi.target.gram() || psi_dual.target.gram() != psi.source.gram() {
        return false;
    }
    // G_L · Ψ = Ψ^∨ᵀ · G_L'
    let lhs = &psi.target.gram().to_rational() * &psi.matrix;
    let rhs = &psi_dual.matrix.transpose() * &psi.source.gram().to_rational();
    let holds = lhs == rhs;
    if holds && !psi.source.determinant().is_zero() && !psi.target.determinant().is_zero() {
        debug_assert!((&psi.matrix * &psi_dual.matrix).is_identity());
        debug_assert!((&psi_dual.matrix * &psi.matrix).is_identity());
    }
    holds
}

/// Matrix of `x ↦ e^B x` on `ℤ ⊕ h2 ⊕ ℤ`.
pub fn exp_twist_matrix<T: Scalar>(b: &[Ratio<T>], h2: &Lattice<T>) -> Result<Matrix<Ratio<T>>> {
    let n = h2.rank();
    check_len(n, b.len(), "B-field")?;
    let g = h2.gram().to_rational();
    let gb = g.mul_vec(b);
    let bb = crate::scalar::dot(b, &gb);
    let mut m = Matrix::identity(n + 2);
    // Column 0: image of (1,0,0) = (1, B, (B,B)/2).
    for i in 0..n {
        m[(i + 1, 0)] = b[i].clone();
    }
    m[(n + 1, 0)] = bb / to_ratio(&T::from_i64(2).expect("small"));
    // Column of eᵢ: (0, eᵢ, (B, eᵢ)).
    for i in 0..n {
        m[(n + 1, i + 1)] = gb[i].clone();
    }
    Ok(m)
}

/// `e^B` on the Mukai lattice over `h2`, certified.
pub fn exp_twist_isometry<T: Scalar>(b: &[Ratio<T>], h2: &Lattice<T>) -> Result<Isometry<T>> {
    let mukai = Lattice::mukai_over(h2);
    Isometry::new(exp_twist_matrix(b, h2)?, mukai.clone(), mukai)
}

/// `(r, c, s) ↦ (r, −c, s)` on a Mukai lattice with basis `(H⁰, H², H⁴)`.
pub fn duality<T: Scalar>(mukai: &Lattice<T>) -> Result<Isometry<T>> {
    let n = mukai.rank();
    if n < 2 {
        return Err(Error::Dimension {
            expected: 2,
            found: n,
            context: "Mukai lattice rank",
        });
    }
    let mut d = vec![-Ratio::one(); n];
    d[0] = Ratio::one();
    d[n - 1] = Ratio::one();
    Isometry::new(Matrix::diagonal(&d), mukai.clone(), mukai.clone())
}

/// The quotient `v^⊥/ℤv` for a primitive isotropic `v`, with its projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaProjection<T = BigInt> {
    pub quotient: Lattice<T>,
    /// Saturated basis of `v^⊥`, rows in ambient coordinates.
    pub perp_basis: Matrix<T>,
    /// Row vector of `v^⊥`-coordinates times `proj` gives quotient coordinates.
    pub proj: Matrix<T>,
}

impl<T: Scalar> ThetaProjection<T> {
    /// Projects an ambient vector of `v^⊥` to quotient coordinates.
    pub fn project(&self, x: &[T]) -> Result<Vec<T>> {
        check_len(self.perp_basis.cols(), x.len(), "ambient vector")?;
        let z = crate::linalg::solve_in_lattice(&self.perp_basis, x).ok_or(Error::NotIntegral)?;
        Ok(self.proj.vec_mul(&z))
    }
}

impl<T: Scalar> From<IsotropicQuotient<T>> for ThetaProjection<T> {
    fn from(q: IsotropicQuotient<T>) -> Self {
        ThetaProjection {
            quotient: q.lattice,
            perp_basis: q.perp_basis,
            proj: q.proj,
        }
    }
}

/// `v^⊥ → v^⊥/ℤv` for a primitive isotropic `v` in `ambient`.
pub fn theta_projection<T: Scalar>(v: &[T], ambient: &Lattice<T>) -> Result<ThetaProjection<T>> {
    check_len(ambient.rank(), v.len(), "isotropic vector")?;
    let sq = ambient.square(v)?;
    if !sq.is_zero() {
        return Err(Error::NotIsotropic(sq.to_string()));
    }
    let g = content(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !g.is_one() {
        return Err(Error::NotPrimitive(g.to_string()));
    }
    let full = Matrix::identity(ambient.rank());
    Ok(isotropic_quotient(ambient, &full, v)?.into())
}

/// Isometry between the twisted Mukai lattices of two lifts of one Brauer class.
pub fn hodge_isometry_between_twists<T: Scalar>(
    b: &BField<T>,
    b2: &BField<T>,
    w: &BrauerWitness<T>,
    ns: &Sublattice<T>,
) -> Result<TwistComparison<T>> {
    twist_comparison_isometry(b, b2, w, ns)
}
