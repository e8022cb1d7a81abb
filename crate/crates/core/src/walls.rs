//! Walls in the ample cone for a Mukai vector of positive rank.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed};

use crate::error::{check_len, Error, Result};
use crate::lattice::Lattice;
use crate::linalg::{minimum, short_vectors, Matrix};
use crate::mukai::{mukai_square, MukaiVector};
use crate::scalar::{content, int, sign_normalize, to_ratio, Scalar};

/// The hyperplane `{L : (ξ, L) = 0}`, stored by primitive `ξ` with `norm = −(ξ,ξ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wall<T = BigInt> {
    pub norm: T,
    pub xi: Vec<T>,
    /// `ξ` is orthogonal to an endpoint of the queried segment.
    pub on_endpoint: bool,
}

/// Segment `[H0, H1]` in the ample cone of `ns` together with the vector `v`.
///
/// `v` carries its `H²` part in coordinates of `ns`; only its rank and square are used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallQuery<T: Scalar = BigInt> {
    pub ns: Lattice<T>,
    pub v: MukaiVector<T>,
    pub r0: T,
    pub h0: Vec<T>,
    pub h1: Vec<T>,
}

impl<T: Scalar> WallQuery<T> {
    pub fn bound(&self) -> Result<Ratio<T>> {
        wall_bound(&self.v, &self.r0, &self.ns)
    }

    /// Single-point query: `H0 = H1 = h`.
    pub fn at(ns: Lattice<T>, v: MukaiVector<T>, r0: T, h: Vec<T>) -> Self {
        WallQuery {
            ns,
            v,
            r0,
            h0: h.clone(),
            h1: h,
        }
    }
}

/// `B = (l²/4)(2l² + v²)` with `l = rk / r0`.
pub fn wall_bound_for<T: Scalar>(rk: &T, r0: &T, v2: &Ratio<T>) -> Result<Ratio<T>> {
    if !r0.is_positive() {
        return Err(Error::NotPositive("r0"));
    }
    if rk.is_zero() {
        return Err(Error::ZeroRank);
    }
    if rk.is_negative() {
        return Err(Error::NonPositiveRank);
    }
    let (l, rem) = rk.div_rem(r0);
    if !rem.is_zero() {
        return Err(Error::RankNotDivisible {
            rank: rk.to_string(),
            order: r0.to_string(),
        });
    }
    let l2 = to_ratio(&(l.clone() * l));
    let two: Ratio<T> = to_ratio(&int(2));
    let four: Ratio<T> = to_ratio(&int(4));
    Ok(l2.clone() / four * (two * l2 + v2.clone()))
}

pub fn wall_bound<T: Scalar>(v: &MukaiVector<T>, r0: &T, ns: &Lattice<T>) -> Result<Ratio<T>> {
    let v2 = mukai_square(v, ns)?;
    wall_bound_for(&v.r, r0, &v2)
}

fn check_polarization<T: Scalar>(h: &[T], ns: &Lattice<T>, name: &'static str) -> Result<T> {
    check_len(ns.rank(), h.len(), "polarization")?;
    let hh = ns.square(h)?;
    if !hh.is_positive() {
        return Err(Error::NotPositive(name));
    }
    Ok(hh)
}

/// Primitive `ξ ⊥ H` with `0 < −(ξ,ξ) ≤ bound`, sorted by `(norm, ξ)`.
pub(crate) fn general_for_bound<T: Scalar>(
    h: &[T],
    ns: &Lattice<T>,
    bound: &Ratio<T>,
) -> Result<Vec<Wall<T>>> {
    check_polarization(h, ns, "H")?;
    let perp = ns.orthogonal_complement(&Matrix::row_vec(h))?;
    if perp.rows() == 0 || !bound.is_positive() {
        return Ok(Vec::new());
    }
    let form = ns.gram().congruent(&perp).to_rational().scale(&-Ratio::one());
    let mut walls: Vec<Wall<T>> = short_vectors(&form, bound)?
        .into_iter()
        .filter(|z| content(z).is_one())
        .map(|z| {
            let mut xi = perp.vec_mul(&z);
            sign_normalize(&mut xi);
            let norm = -ns.square(&xi).expect("length checked");
            Wall {
                norm,
                xi,
                on_endpoint: true,
            }
        })
        .collect();
    walls.sort();
    Ok(walls)
}

/// Generality of a polarization and the walls through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generality<T = BigInt> {
    pub general: bool,
    pub witnesses: Vec<Wall<T>>,
}

/// Whether `h` lies on no wall for `q.v`; `q.h0` and `q.h1` are ignored.
pub fn is_general<T: Scalar>(h: &[T], q: &WallQuery<T>) -> Result<Generality<T>> {
    let witnesses = general_for_bound(h, &q.ns, &q.bound()?)?;
    Ok(Generality {
        general: witnesses.is_empty(),
        witnesses,
    })
}

/// `min_{[0,1]} (H_t, H_t)` for `H_t = (1 − t) H0 + t H1`.
fn min_square_on_segment<T: Scalar>(a: &Ratio<T>, b: &Ratio<T>, c: &Ratio<T>) -> Ratio<T> {
    // f(t) = a + 2(b − a) t + (a − 2b + c) t²
    let two: Ratio<T> = to_ratio(&int(2));
    let quad = a.clone() - two.clone() * b.clone() + c.clone();
    let mut best = a.clone().min(c.clone());
    if quad.is_positive() {
        let t = (a.clone() - b.clone()) / quad.clone();
        if t.is_positive() && t < Ratio::one() {
            let f = a.clone() + two * (b.clone() - a.clone()) * t.clone() + quad * t.clone() * t;
            best = best.min(f);
        }
    }
    best
}

/// Walls meeting the segment `[H0, H1]`, sorted by `(norm, ξ)`.
///
/// Each `ξ` is primitive with `(ξ, H0) ≥ 0`; when `(ξ, H0) = 0` the first nonzero
/// coordinate is positive instead.
pub fn walls_between<T: Scalar>(q: &WallQuery<T>) -> Result<Vec<Wall<T>>> {
    let ns = &q.ns;
    let a = to_ratio(&check_polarization(&q.h0, ns, "H0")?);
    let c = to_ratio(&check_polarization(&q.h1, ns, "H1")?);
    let b = to_ratio(&ns.pairing(&q.h0, &q.h1)?);
    if !b.is_positive() {
        return Err(Error::OppositeCones);
    }
    let bound = q.bound()?;
    if !bound.is_positive() {
        return Ok(Vec::new());
    }
    let two: Ratio<T> = to_ratio(&int(2));
    let m = min_square_on_segment(&a, &b, &c);
    let cmax = two.clone() * (a.clone() * a.clone()).max(b.clone() * b.clone()) / m - a.clone();
    let radius = bound.clone() + two.clone() * bound.clone() * cmax / a.clone();

    // q_{H0}(x) = 2 (x,H0)² / (H0,H0) − (x,x)
    let g = ns.gram().to_rational();
    let g0 = g.mul_vec(&crate::scalar::ratio_vec(&q.h0));
    let n = ns.rank();
    let mut majorant = Matrix::<Ratio<T>>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            majorant[(i, j)] = two.clone() * g0[i].clone() * g0[j].clone() / a.clone() - g[(i, j)].clone();
        }
    }

    let mut walls = Vec::new();
    for mut xi in short_vectors(&majorant, &radius)? {
        if !content(&xi).is_one() {
            continue;
        }
        let norm = -ns.square(&xi)?;
        if !norm.is_positive() || to_ratio(&norm) > bound {
            continue;
        }
        let mut s0 = ns.pairing(&xi, &q.h0)?;
        let mut s1 = ns.pairing(&xi, &q.h1)?;
        if (s0.clone() * s1.clone()).is_positive() {
            continue;
        }
        if s0.is_negative() || (s0.is_zero() && xi.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative())) {
            xi.iter_mut().for_each(|x| *x = -x.clone());
            s0 = -s0;
            s1 = -s1;
        }
        walls.push(Wall {
            norm,
            on_endpoint: s0.is_zero() || s1.is_zero(),
            xi,
        });
    }
    walls.sort();
    Ok(walls)
}

/// Whether `H0` and `H1` are general and no wall separates them.
pub fn same_chamber<T: Scalar>(q: &WallQuery<T>) -> Result<bool> {
    if !walls_between(q)?.is_empty() {
        return Ok(false);
    }
    Ok(is_general(&q.h0, q)?.general && is_general(&q.h1, q)?.general)
}

/// Outcome of the sufficient criterion `min{−D² : D ⊥ H} > B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongGenerality<T = BigInt> {
    pub holds: bool,
    /// `None` when `H^⊥ = 0` in `NS`.
    pub min_norm: Option<T>,
}

pub fn strong_generality<T: Scalar>(h: &[T], q: &WallQuery<T>) -> Result<StrongGenerality<T>> {
    check_polarization(h, &q.ns, "H")?;
    let bound = q.bound()?;
    let perp = q.ns.orthogonal_complement(&Matrix::row_vec(h))?;
    let form = q.ns.gram().congruent(&perp).to_rational().scale(&-Ratio::one());
    let min_norm = minimum(&form)?.map(|m| m.to_integer());
    let holds = match &min_norm {
        None => true,
        Some(m) => to_ratio(m) > bound,
    };
    Ok(StrongGenerality { holds, min_norm })
}
