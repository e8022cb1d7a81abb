//! Brauer classes represented by B-field lifts `(ξ, r)`.
//!
//! A lift stands for the class of `ξ/r` in `H²(X,ℚ) / (NS(X)⊗ℚ + H²(X,ℤ))`.
//! All membership questions reduce to the lattice `NS + m·H²` for a suitable
//! modulus `m`, handled with Hermite normal forms on the saturated NS basis.

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::error::{check_len, Error, Result};
use crate::isometry::{exp_twist_isometry, Isometry};
use crate::lattice::Sublattice;
use crate::linalg::{self, Matrix};
use crate::mukai::{exp_twist, MukaiVector};
use crate::scalar::{common_denominator, content, ratio_vec, to_ratio, Scalar};

/// B-field lift `ξ/r` with `ξ` an integral `H²` class and `r ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BField<T = BigInt> {
    pub xi: Vec<T>,
    pub r: T,
}

impl<T: Scalar> BField<T> {
    pub fn new(xi: Vec<T>, r: T) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::NonPositiveRank);
        }
        Ok(BField { xi, r })
    }

    /// The trivial class `(0, 1)`.
    pub fn trivial(rank: usize) -> Self {
        BField {
            xi: vec![T::zero(); rank],
            r: T::one(),
        }
    }

    /// `ξ / r`.
    pub fn twist(&self) -> Vec<Ratio<T>> {
        self.xi
            .iter()
            .map(|x| Ratio::new(x.clone(), self.r.clone()))
            .collect()
    }

    /// `−ξ / r`.
    pub fn neg_twist(&self) -> Vec<Ratio<T>> {
        self.twist().into_iter().map(|x| -x).collect()
    }
}

/// `(L, N)` with `r'ξ − rξ' = L + r r' N`, `L ∈ NS`, `N ∈ H²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrauerWitness<T = BigInt> {
    pub l: Vec<T>,
    pub n: Vec<T>,
}

impl<T: Scalar> BrauerWitness<T> {
    pub fn is_valid(&self, b: &BField<T>, b2: &BField<T>, ns: &Sublattice<T>) -> bool {
        let dim = ns.ambient().rank();
        if [self.l.len(), self.n.len(), b.xi.len(), b2.xi.len()]
            .iter()
            .any(|&k| k != dim)
        {
            return false;
        }
        let rr = b.r.clone() * b2.r.clone();
        let lhs_ok = (0..dim).all(|i| {
            b2.r.clone() * b.xi[i].clone() - b.r.clone() * b2.xi[i].clone()
                == self.l[i].clone() + rr.clone() * self.n[i].clone()
        });
        lhs_ok && ns_basis(ns).is_some_and(|basis| linalg::in_lattice(&basis, &self.l))
    }
}

// Saturated NS basis; Brauer arithmetic assumes NS primitive in H².
fn ns_basis<T: Scalar>(ns: &Sublattice<T>) -> Option<Matrix<T>> {
    if ns.rank() == 0 {
        return Some(Matrix::zeros(0, ns.ambient().rank()));
    }
    if ns.is_primitive() {
        Some(linalg::hnf(ns.basis()).0)
    } else {
        log::warn!("NS basis is not primitive in H²; using its saturation");
        Some(ns.saturated().basis().clone())
    }
}

/// Rows spanning `NS + m·H²`.
fn ns_plus_multiple<T: Scalar>(ns: &Matrix<T>, m: &T) -> Matrix<T> {
    let n = ns.cols();
    ns.vstack(&Matrix::identity(n).scale(m))
}

/// Order of the Brauer class of `ξ/r`: least `k ≥ 1` with `kξ ∈ NS + r·H²`.
pub fn brauer_order<T: Scalar>(b: &BField<T>, ns: &Sublattice<T>) -> Result<T> {
    let n = ns.ambient().rank();
    check_len(n, b.xi.len(), "B-field ξ")?;
    let basis = ns_basis(ns).expect("saturation exists");
    let (h, _) = linalg::hnf(&ns_plus_multiple(&basis, &b.r));
    // NS + rH² has full rank, so its HNF has exactly n nonzero rows.
    let square = h.select_rows(0..n);
    let coeffs = square
        .to_rational()
        .solve_left(&ratio_vec(&b.xi))
        .expect("full-rank lattice spans ℚⁿ");
    Ok(common_denominator(&coeffs))
}

/// Canonical witness that `ξ/r` and `ξ'/r'` define the same Brauer class.
///
/// `N` is reduced modulo the Hermite basis of NS (entries at pivot columns in
/// `[0, pivot)`), which determines it uniquely; then `L = r'ξ − rξ' − rr'N`.
pub fn brauer_equivalent<T: Scalar>(
    b: &BField<T>,
    b2: &BField<T>,
    ns: &Sublattice<T>,
) -> Result<Option<BrauerWitness<T>>> {
    let n = ns.ambient().rank();
    check_len(n, b.xi.len(), "B-field ξ")?;
    check_len(n, b2.xi.len(), "B-field ξ'")?;
    let basis = ns_basis(ns).expect("saturation exists");
    let rr = b.r.clone() * b2.r.clone();
    let target: Vec<T> = (0..n)
        .map(|i| b2.r.clone() * b.xi[i].clone() - b.r.clone() * b2.xi[i].clone())
        .collect();
    let Some(x) = linalg::solve_in_lattice(&ns_plus_multiple(&basis, &rr), &target) else {
        return Ok(None);
    };
    let mut nvec = x[basis.rows()..].to_vec();
    for row in basis.row_iter() {
        let c = row.iter().position(|v| !v.is_zero()).expect("HNF rows are nonzero");
        let q = nvec[c].div_floor(&row[c]);
        if !q.is_zero() {
            for (v, r) in nvec.iter_mut().zip(row) {
                *v = v.clone() - q.clone() * r.clone();
            }
        }
    }
    let l: Vec<T> = (0..n)
        .map(|i| target[i].clone() - rr.clone() * nvec[i].clone())
        .collect();
    let w = BrauerWitness { l, n: nvec };
    debug_assert!(w.is_valid(b, b2, ns));
    Ok(Some(w))
}

/// The two sides of the comparison square
/// `e^{L/rr'} ∘ e^{−ξ/r} = e^{−ξ'/r'} ∘ e^{−N}` on the Mukai lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistComparison<T: Scalar = BigInt> {
    /// `e^{−N}`: an integral isometry of `H*(X,ℤ)` carrying the `−ξ/r` Hodge
    /// structure to the `−ξ'/r'` one.
    pub lattice_map: Isometry<T>,
    /// `e^{L/rr'}`: carries `T_{−ξ/r}(H*ℤ)` onto `T_{−ξ'/r'}(H*ℤ)` inside `H*(X,ℚ)`.
    pub twist_map: Isometry<T>,
}

/// Certified comparison isometry between the twisted Mukai lattices of two
/// equivalent lifts.
pub fn twist_comparison_isometry<T: Scalar>(
    b: &BField<T>,
    b2: &BField<T>,
    w: &BrauerWitness<T>,
    ns: &Sublattice<T>,
) -> Result<TwistComparison<T>> {
    if !w.is_valid(b, b2, ns) {
        return Err(Error::InvalidWitness);
    }
    let h2 = ns.ambient();
    let neg_n: Vec<Ratio<T>> = w.n.iter().map(|x| -to_ratio(x)).collect();
    let rr = to_ratio(&(b.r.clone() * b2.r.clone()));
    let l_over: Vec<Ratio<T>> = w.l.iter().map(|x| to_ratio(x) / rr.clone()).collect();

    let lattice_map = exp_twist_isometry(&neg_n, h2)?;
    let twist_map = exp_twist_isometry(&l_over, h2)?;
    let t = exp_twist_isometry(&b.neg_twist(), h2)?;
    let t2 = exp_twist_isometry(&b2.neg_twist(), h2)?;

    let left = &twist_map.matrix * &t.matrix;
    let right = &t2.matrix * &lattice_map.matrix;
    if left != right {
        return Err(Error::Identity("comparison square commutes"));
    }
    let back = exp_twist_isometry(&b2.twist(), h2)?;
    let integral = &(&back.matrix * &twist_map.matrix) * &t.matrix;
    if integral.to_integer().is_none() || !lattice_map.is_integral() {
        return Err(Error::Identity("comparison map is integral"));
    }
    Ok(TwistComparison {
        lattice_map,
        twist_map,
    })
}

/// Outcome of the Mukai-vector test for a twisted class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MukaiCheck {
    /// `e^{ξ/r} v` is integral and the `H²` part of `v` lies in `NS ⊗ ℚ`.
    pub valid: bool,
    /// `e^{ξ/r} v` is integral with coordinate gcd 1.
    pub primitive: bool,
}

/// Whether `v` lies in `T_{−ξ/r}(H*(X,ℤ))` with algebraic `H²` part.
pub fn is_mukai_vector<T: Scalar>(
    v: &MukaiVector<T>,
    b: &BField<T>,
    ns: &Sublattice<T>,
) -> Result<MukaiCheck> {
    let h2 = ns.ambient();
    let u = exp_twist(v, &b.twist(), h2)?;
    let coords = u.integral_coords();
    let algebraic = ns.contains_rational(&v.c);
    let primitive = coords.as_ref().is_some_and(|c| content(c).is_one());
    Ok(MukaiCheck {
        valid: coords.is_some() && algebraic,
        primitive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;
    use crate::linalg::int_matrix;
    use crate::scalar::rat;

    fn u_with_diagonal_ns() -> Sublattice<i64> {
        Sublattice::new(Lattice::hyperbolic_plane(), int_matrix(&[&[1, 1]])).unwrap()
    }

    fn bf(xi: &[i64], r: i64) -> BField<i64> {
        BField::new(xi.to_vec(), r).unwrap()
    }

    #[test]
    fn order_examples() {
        let ns = u_with_diagonal_ns();
        assert_eq!(brauer_order(&bf(&[1, 1], 3), &ns).unwrap(), 1);
        assert_eq!(brauer_order(&bf(&[1, 0], 2), &ns).unwrap(), 2);
        assert_eq!(brauer_order(&bf(&[4, -2], 2), &ns).unwrap(), 1);
        assert_eq!(BField::<i64>::new(vec![1, 0], 0), Err(Error::NonPositiveRank));
    }

    #[test]
    fn equivalence_examples() {
        let ns = u_with_diagonal_ns();
        let b = bf(&[1, 0], 2);
        let w = brauer_equivalent(&b, &b, &ns).unwrap().unwrap();
        assert_eq!(w, BrauerWitness { l: vec![0, 0], n: vec![0, 0] });
        // ξ' = ξ + 2·(0,1) + (3,3)
        let b2 = bf(&[4, 5], 2);
        let w = brauer_equivalent(&b, &b2, &ns).unwrap().unwrap();
        assert!(w.is_valid(&b, &b2, &ns));
        assert_eq!(brauer_equivalent(&b, &bf(&[0, 0], 1), &ns).unwrap(), None);
    }

    #[test]
    fn comparison_of_identical_lifts_is_identity() {
        let ns = u_with_diagonal_ns();
        let b = bf(&[1, 0], 2);
        let w = brauer_equivalent(&b, &b, &ns).unwrap().unwrap();
        let cmp = twist_comparison_isometry(&b, &b, &w, &ns).unwrap();
        assert!(cmp.lattice_map.matrix.is_identity());
        assert!(cmp.twist_map.matrix.is_identity());
        let bad = BrauerWitness { l: vec![1, 0], n: vec![0, 0] };
        assert_eq!(twist_comparison_isometry(&b, &b, &bad, &ns), Err(Error::InvalidWitness));
    }

    #[test]
    fn mukai_vector_checks() {
        let ns = u_with_diagonal_ns();
        let triv = bf(&[0, 0], 1);
        let v = MukaiVector::<i64>::from_i64(1, &[1, 1], 0);
        assert_eq!(
            is_mukai_vector(&v, &triv, &ns).unwrap(),
            MukaiCheck { valid: true, primitive: true }
        );
        // (1, e, 0) is integral but e is not in NS ⊗ ℚ.
        let v = MukaiVector::<i64>::from_i64(1, &[1, 0], 0);
        assert!(!is_mukai_vector(&v, &triv, &ns).unwrap().valid);
        // 2·e^{−ξ/r}(1,0,0) with ξ = e + f, r = 2.
        let b = bf(&[1, 1], 2);
        let h2 = ns.ambient();
        let v = exp_twist(&MukaiVector::from_i64(2, &[0, 0], 0), &b.neg_twist(), h2).unwrap();
        assert_eq!(
            is_mukai_vector(&v, &b, &ns).unwrap(),
            MukaiCheck { valid: true, primitive: false }
        );
        let half = MukaiVector::new(1, vec![rat(1, 2), rat(1, 2)], rat(0, 1));
        assert_eq!(
            is_mukai_vector(&half, &triv, &ns).unwrap(),
            MukaiCheck { valid: false, primitive: false }
        );
    }
}
