//! Mukai vectors, the Mukai pairing and B-field twists.
//!
//! A Mukai vector `(r, c, s)` lives in `H⁰ ⊕ H² ⊕ H⁴` with rational `H²` and
//! `H⁴` parts. The `H²` coordinates are taken in the basis of whichever lattice
//! the caller passes in: the Néron–Severi lattice for purely algebraic work, or
//! the full K3 lattice when Brauer classes are involved.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;

use crate::brauer::BField;
use crate::error::{check_len, Error, Result};
use crate::lattice::Lattice;
use crate::scalar::{content, int, integral_vec, mod_floor, ratio_vec, to_ratio, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MukaiVector<T: Scalar = BigInt> {
    pub r: T,
    pub c: Vec<Ratio<T>>,
    pub s: Ratio<T>,
}

impl<T: Scalar> MukaiVector<T> {
    pub fn new(r: T, c: Vec<Ratio<T>>, s: Ratio<T>) -> Self {
        MukaiVector { r, c, s }
    }

    pub fn integral(r: T, c: Vec<T>, s: T) -> Self {
        MukaiVector {
            r,
            c: ratio_vec(&c),
            s: to_ratio(&s),
        }
    }

    /// Small-literal constructor.
    pub fn from_i64(r: i64, c: &[i64], s: i64) -> Self {
        Self::integral(int(r), c.iter().map(|&x| int(x)).collect(), int(s))
    }

    pub fn zero(rank: usize) -> Self {
        MukaiVector {
            r: T::zero(),
            c: vec![Ratio::zero(); rank],
            s: Ratio::zero(),
        }
    }

    /// Number of `H²` coordinates.
    pub fn h2_rank(&self) -> usize {
        self.c.len()
    }

    /// `(r, c…, s)` in the Mukai-lattice basis ordering.
    pub fn coords(&self) -> Vec<Ratio<T>> {
        let mut v = Vec::with_capacity(self.c.len() + 2);
        v.push(to_ratio(&self.r));
        v.extend(self.c.iter().cloned());
        v.push(self.s.clone());
        v
    }

    pub fn from_coords(coords: &[Ratio<T>]) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::Dimension {
                expected: 2,
                found: coords.len(),
                context: "Mukai coordinates",
            });
        }
        let n = coords.len();
        if !coords[0].is_integer() {
            return Err(Error::Malformed("rank component must be an integer".into()));
        }
        Ok(MukaiVector {
            r: coords[0].to_integer(),
            c: coords[1..n - 1].to_vec(),
            s: coords[n - 1].clone(),
        })
    }

    /// Integer coordinates `(r, c…, s)`, if all are integral.
    pub fn integral_coords(&self) -> Option<Vec<T>> {
        integral_vec(&self.coords())
    }

    pub fn is_integral(&self) -> bool {
        self.integral_coords().is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero() && self.c.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        MukaiVector {
            r: self.r.clone() + o.r.clone(),
            c: self
                .c
                .iter()
                .zip(&o.c)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
            s: self.s.clone() + o.s.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale_int(&-T::one()))
    }

    pub fn scale_int(&self, k: &T) -> Self {
        MukaiVector {
            r: k.clone() * self.r.clone(),
            c: self.c.iter().map(|x| x.clone() * to_ratio(k)).collect(),
            s: self.s.clone() * to_ratio(k),
        }
    }

    /// Rational coordinates scaled by `k`; the rank must stay integral.
    pub fn scale(&self, k: &Ratio<T>) -> Result<Self> {
        let coords: Vec<_> = self.coords().into_iter().map(|x| x * k.clone()).collect();
        Self::from_coords(&coords)
    }

    /// `x^∨ = (r, −c, s)`.
    pub fn dual(&self) -> Self {
        MukaiVector {
            r: self.r.clone(),
            c: self.c.iter().map(|x| -x.clone()).collect(),
            s: self.s.clone(),
        }
    }
}

impl<T: Scalar> fmt::Display for MukaiVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [", self.r)?;
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "], {})", self.s)
    }
}

/// Which surface fixes `√td`: `(1,0,1)` on a K3, `(1,0,0)` on an abelian surface.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SurfaceKind {
    #[default]
    K3,
    Abelian,
}

impl SurfaceKind {
    /// `H⁴` component of `√td`.
    pub fn sqrt_td_top<T: Scalar>(self) -> T {
        match self {
            SurfaceKind::K3 => T::one(),
            SurfaceKind::Abelian => T::zero(),
        }
    }
}

fn check_rank<T: Scalar>(v: &MukaiVector<T>, lattice: &Lattice<T>) -> Result<()> {
    check_len(lattice.rank(), v.h2_rank(), "Mukai vector H² coordinates")
}

/// `⟨v, w⟩ = (c, c') − r s' − r' s`.
pub fn mukai_pairing<T: Scalar>(
    v: &MukaiVector<T>,
    w: &MukaiVector<T>,
    lattice: &Lattice<T>,
) -> Result<Ratio<T>> {
    check_rank(v, lattice)?;
    check_rank(w, lattice)?;
    Ok(lattice.pairing_q(&v.c, &w.c)?
        - to_ratio(&v.r) * w.s.clone()
        - to_ratio(&w.r) * v.s.clone())
}

pub fn mukai_square<T: Scalar>(v: &MukaiVector<T>, lattice: &Lattice<T>) -> Result<Ratio<T>> {
    mukai_pairing(v, v, lattice)
}

/// Multiplication by `e^B`: `(r, c + rB, s + (B,c) + r(B,B)/2)`.
pub fn exp_twist<T: Scalar>(
    v: &MukaiVector<T>,
    b: &[Ratio<T>],
    lattice: &Lattice<T>,
) -> Result<MukaiVector<T>> {
    check_rank(v, lattice)?;
    check_len(lattice.rank(), b.len(), "B-field")?;
    let r = to_ratio(&v.r);
    let bc = lattice.pairing_q(b, &v.c)?;
    let bb = lattice.pairing_q(b, b)?;
    Ok(MukaiVector {
        r: v.r.clone(),
        c: v
            .c
            .iter()
            .zip(b)
            .map(|(c, b)| c.clone() + r.clone() * b.clone())
            .collect(),
        s: v.s.clone() + bc + r * bb / to_ratio(&int(2)),
    })
}

/// `ch · √td` for a sheaf with rank `r` and Chern classes `c1`, `c2`:
/// `(r, c1, (c1,c1)/2 − c2 + r·td₂/2)`.
pub fn mukai_from_chern<T: Scalar>(
    r: &T,
    c1: &[T],
    c2: &T,
    lattice: &Lattice<T>,
    surface: SurfaceKind,
) -> Result<MukaiVector<T>> {
    if r.is_negative() {
        return Err(Error::NonPositiveRank);
    }
    check_len(lattice.rank(), c1.len(), "c1")?;
    let c1sq = to_ratio(&lattice.square(c1)?);
    let top = surface.sqrt_td_top::<T>() * r.clone();
    Ok(MukaiVector {
        r: r.clone(),
        c: ratio_vec(c1),
        s: c1sq / to_ratio(&int(2)) - to_ratio(c2) + to_ratio(&top),
    })
}

/// Result of moving a twisted Mukai vector back to integral cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Untwisted<T: Scalar = BigInt> {
    /// `e^{ξ/r} v = (rk, D, a)`.
    pub vector: MukaiVector<T>,
    /// `[D mod rk]` with entries in `[0, |rk|)`; absent when not integral or `rk = 0`.
    pub w_class: Option<Vec<T>>,
    pub is_integral: bool,
}

/// Computes `e^{ξ/r} v` for the B-field lift `(ξ, r)` of the reference sheaf.
///
/// For integral results, checks `⟨v,v⟩ ≡ (D,D) mod 2·rk`.
pub fn untwist<T: Scalar>(v: &MukaiVector<T>, b: &BField<T>, h2: &Lattice<T>) -> Result<Untwisted<T>> {
    let vector = exp_twist(v, &b.twist(), h2)?;
    let is_integral = vector.is_integral();
    let mut w = None;
    if is_integral && !vector.r.is_zero() {
        let d: Vec<T> = vector.c.iter().map(|x| x.to_integer()).collect();
        let modulus = to_ratio(&(int::<T>(2) * vector.r.abs()));
        let gap = mukai_square(v, h2)? - to_ratio(&h2.square(&d)?);
        if !(gap / modulus).is_integer() {
            return Err(Error::Identity("<v,v> = (D,D) mod 2 rk"));
        }
        w = Some(w_class(&d, &vector.r)?);
    }
    Ok(Untwisted {
        vector,
        w_class: w,
        is_integral,
    })
}

/// `[D mod rk]` as least non-negative residues.
pub fn w_class<T: Scalar>(d: &[T], rk: &T) -> Result<Vec<T>> {
    if rk.is_zero() {
        return Err(Error::ZeroRank);
    }
    Ok(d.iter().map(|x| mod_floor(x, rk)).collect())
}

/// Splits an integral vector as `content · v₀` with `v₀` primitive.
pub fn primitive_part<T: Scalar>(v: &MukaiVector<T>) -> Result<(MukaiVector<T>, T)> {
    let coords = v.integral_coords().ok_or(Error::NotIntegral)?;
    let g = content(&coords);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let reduced: Vec<Ratio<T>> = coords.iter().map(|x| to_ratio(&(x.clone() / g.clone()))).collect();
    Ok((MukaiVector::from_coords(&reduced)?, g))
}

/// `−(r−1)(w,w) mod 2r` for an integer lift `w` of a class mod `r`.
///
/// The residue is checked to be unchanged under `w ↦ w + r·eᵢ`; a change is
/// reported as [`Error::LiftDependent`].
pub fn expected_c2_residue<T: Scalar>(r: &T, w: &[T], lattice: &Lattice<T>) -> Result<T> {
    if !r.is_positive() {
        return Err(Error::NonPositiveRank);
    }
    let residue = |x: &[T]| -> Result<T> {
        let sq = lattice.square(x)?;
        let v = -(r.clone() - T::one()) * sq;
        Ok(mod_floor(&v, &(int::<T>(2) * r.clone())))
    };
    let base = residue(w)?;
    for i in 0..w.len() {
        let mut shifted = w.to_vec();
        shifted[i] = shifted[i].clone() + r.clone();
        if residue(&shifted)? != base {
            return Err(Error::LiftDependent);
        }
    }
    Ok(base)
}

/// Defect of the Mukai square along an extension `0 → E₁ → E → E₂ → 0`.
///
/// With `vᵢ = lᵢ·v₀ + v_{Fᵢ}`, `v = v₁ + v₂` and `l = l₁ + l₂`, returns
/// `⟨v₁²⟩/l₁ + ⟨v₂²⟩/l₂ − ⟨v²⟩/l` after checking it equals
/// `⟨(l₂ v_{F₁} − l₁ v_{F₂})²⟩ / (l l₁ l₂)`.
#[allow(clippy::too_many_arguments)]
pub fn extension_defect<T: Scalar>(
    v1: &MukaiVector<T>,
    v2: &MukaiVector<T>,
    l1: &T,
    l2: &T,
    vf1: &MukaiVector<T>,
    vf2: &MukaiVector<T>,
    lattice: &Lattice<T>,
) -> Result<Ratio<T>> {
    if !l1.is_positive() || !l2.is_positive() {
        return Err(Error::NonPositiveRank);
    }
    for x in [v1, v2, vf1, vf2] {
        check_rank(x, lattice)?;
    }
    let (q1, q2) = (to_ratio(l1), to_ratio(l2));
    let base1 = v1.sub(vf1).coords();
    let base2 = v2.sub(vf2).coords();
    let consistent = base1
        .iter()
        .zip(&base2)
        .all(|(a, b)| a.clone() / q1.clone() == b.clone() / q2.clone());
    if !consistent {
        return Err(Error::InconsistentDecomposition);
    }
    let l = l1.clone() + l2.clone();
    let q = to_ratio(&l);
    let v = v1.add(v2);
    let lhs = mukai_square(v1, lattice)? / q1.clone() + mukai_square(v2, lattice)? / q2.clone()
        - mukai_square(&v, lattice)? / q.clone();
    let diff = vf1.scale_int(l2).sub(&vf2.scale_int(l1));
    let rhs = mukai_square(&diff, lattice)? / (q * q1 * q2);
    if lhs != rhs {
        return Err(Error::Identity("extension defect"));
    }
    Ok(lhs)
}

/// `⟨v,v⟩ ≥ −2l²`.
pub fn bogomolov_check<T: Scalar>(v: &MukaiVector<T>, l: &T, lattice: &Lattice<T>) -> Result<bool> {
    let bound = to_ratio(&(int::<T>(-2) * l.clone() * l.clone()));
    Ok(mukai_square(v, lattice)? >= bound)
}
