//! Integral lattices: the K3 and Mukai lattices, direct sums and sublattices.

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::error::{check_len, Error, Result};
use crate::linalg::{self, Matrix, Signature};
use crate::scalar::{int, Scalar};

/// A free ℤ-module with an integral symmetric Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice<T = BigInt> {
    gram: Matrix<T>,
    name: Option<String>,
}

impl<T: Scalar> Lattice<T> {
    pub fn new(gram: Matrix<T>) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Lattice { gram, name: None })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(linalg::int_matrix(rows))
    }

    /// The zero lattice.
    pub fn empty() -> Self {
        Lattice {
            gram: Matrix::zeros(0, 0),
            name: None,
        }
    }

    /// `U = [[0,1],[1,0]]`.
    pub fn hyperbolic_plane() -> Self {
        Self::from_rows(&[&[0, 1], &[1, 0]]).unwrap().named("U")
    }

    /// The E8 root lattice with its form negated: diagonal −2, +1 on the Dynkin edges.
    ///
    /// Nodes are numbered as in Bourbaki: the chain 1-3-4-5-6-7-8 with node 2
    /// attached to node 4.
    pub fn e8_negative() -> Self {
        const EDGES: [(usize, usize); 7] = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
        let mut g = Matrix::diagonal(&vec![int::<T>(-2); 8]);
        for (a, b) in EDGES {
            g[(a, b)] = T::one();
            g[(b, a)] = T::one();
        }
        Lattice {
            gram: g,
            name: Some("E8(-1)".into()),
        }
    }

    /// `⟨n⟩`.
    pub fn rank_one(n: T) -> Self {
        Lattice {
            gram: Matrix::new(1, 1, vec![n]),
            name: None,
        }
    }

    /// `U³ ⊕ E8(−1)²`, the second cohomology of a K3 surface.
    pub fn k3() -> Self {
        let u = Self::hyperbolic_plane();
        let e = Self::e8_negative();
        u.direct_sum(&u)
            .direct_sum(&u)
            .direct_sum(&e)
            .direct_sum(&e)
            .named("K3")
    }

    /// Mukai lattice over the K3 lattice (rank 24).
    pub fn mukai() -> Self {
        Self::mukai_over(&Self::k3()).named("Mukai")
    }

    /// `ℤ ⊕ h2 ⊕ ℤ` with basis `(H⁰, h2…, H⁴)` and pairing
    /// `⟨(r,c,s),(r',c',s')⟩ = (c,c') − r s' − r' s`.
    pub fn mukai_over(h2: &Lattice<T>) -> Self {
        let n = h2.rank();
        let mut g = Matrix::zeros(n + 2, n + 2);
        for i in 0..n {
            for j in 0..n {
                g[(i + 1, j + 1)] = h2.gram[(i, j)].clone();
            }
        }
        g[(0, n + 1)] = -T::one();
        g[(n + 1, 0)] = -T::one();
        Lattice {
            gram: g,
            name: h2.name.as_ref().map(|s| format!("Mukai({s})")),
        }
    }

    pub fn direct_sum(&self, other: &Lattice<T>) -> Self {
        Lattice {
            gram: self.gram.block_diag(&other.gram),
            name: match (&self.name, &other.name) {
                (Some(a), Some(b)) => Some(format!("{a}+{b}")),
                _ => None,
            },
        }
    }

    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_even(&self) -> bool {
        linalg::is_even(&self.gram)
    }

    pub fn signature(&self) -> Signature {
        linalg::signature(&self.gram).expect("gram is symmetric by construction")
    }

    pub fn discriminant_group(&self) -> Result<Vec<T>> {
        linalg::discriminant_group(&self.gram)
    }

    pub fn is_unimodular(&self) -> bool {
        self.gram.det().abs().is_one()
    }

    pub fn determinant(&self) -> T {
        self.gram.det()
    }

    /// Bilinear form on integer coordinate vectors.
    pub fn pairing(&self, a: &[T], b: &[T]) -> Result<T> {
        check_len(self.rank(), a.len(), "lattice vector")?;
        check_len(self.rank(), b.len(), "lattice vector")?;
        Ok(self.gram.bilinear(a, b))
    }

    /// Bilinear form extended to ℚ-coordinates.
    pub fn pairing_q(&self, a: &[Ratio<T>], b: &[Ratio<T>]) -> Result<Ratio<T>> {
        check_len(self.rank(), a.len(), "lattice vector")?;
        check_len(self.rank(), b.len(), "lattice vector")?;
        Ok(self.gram.to_rational().bilinear(a, b))
    }

    pub fn square(&self, a: &[T]) -> Result<T> {
        self.pairing(a, a)
    }

    /// Saturated basis of the orthogonal complement of the given rows.
    pub fn orthogonal_complement(&self, vectors: &Matrix<T>) -> Result<Matrix<T>> {
        linalg::orthogonal_complement(&self.gram, vectors)
    }

    /// Same lattice with an integral basis change `rows(B)`: Gram `B · G · Bᵀ`.
    pub fn restrict(&self, basis: &Matrix<T>) -> Result<Lattice<T>> {
        check_len(self.rank(), basis.cols(), "sublattice basis width")?;
        Lattice::new(self.gram.congruent(basis))
    }
}

/// A sublattice given by basis rows in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sublattice<T = BigInt> {
    ambient: Lattice<T>,
    basis: Matrix<T>,
}

impl<T: Scalar> Sublattice<T> {
    pub fn new(ambient: Lattice<T>, basis: Matrix<T>) -> Result<Self> {
        check_len(ambient.rank(), basis.cols(), "sublattice basis width")?;
        if linalg::row_rank(&basis) != basis.rows() {
            return Err(Error::DependentBasis);
        }
        Ok(Sublattice { ambient, basis })
    }

    pub fn full(ambient: Lattice<T>) -> Self {
        let basis = Matrix::identity(ambient.rank());
        Sublattice { ambient, basis }
    }

    pub fn ambient(&self) -> &Lattice<T> {
        &self.ambient
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// `B · G · Bᵀ`.
    pub fn gram(&self) -> Matrix<T> {
        self.ambient.gram.congruent(&self.basis)
    }

    /// The sublattice as an abstract lattice.
    pub fn lattice(&self) -> Lattice<T> {
        Lattice {
            gram: self.gram(),
            name: None,
        }
    }

    pub fn is_primitive(&self) -> bool {
        linalg::is_saturated(&self.basis)
    }

    /// Primitive closure in the ambient lattice.
    pub fn saturated(&self) -> Self {
        Sublattice {
            ambient: self.ambient.clone(),
            basis: linalg::saturate(&self.basis),
        }
    }

    /// Whether an ambient vector lies in the ℚ-span.
    pub fn contains_rational(&self, v: &[Ratio<T>]) -> bool {
        linalg::in_rational_span(&self.basis, v)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        linalg::in_lattice(&self.basis, v)
    }

    /// Coordinates in the sublattice basis of a vector in its ℚ-span.
    pub fn coordinates(&self, v: &[Ratio<T>]) -> Option<Vec<Ratio<T>>> {
        if self.rank() == 0 {
            return v.iter().all(num_traits::Zero::is_zero).then(Vec::new);
        }
        linalg::solve_in_span(&self.basis, v)
    }

    pub fn embed(&self, coords: &[T]) -> Vec<T> {
        self.basis.vec_mul(coords)
    }

    pub fn embed_q(&self, coords: &[Ratio<T>]) -> Vec<Ratio<T>> {
        self.basis.to_rational().vec_mul(coords)
    }
}
