//! Exact lattice and Mukai-vector computations for twisted sheaves on K3 surfaces.
//!
//! Every type is generic over an integer [`Scalar`]; the aliases below fix it
//! to arbitrary-precision [`BigInt`].
//!
//! ```
//! use twisted_k3::{exp_twist, mukai_pairing, Int, Lattice, MukaiVector, Rat};
//!
//! let h2 = Lattice::<Int>::rank_one(2.into());
//! let v = MukaiVector::from_i64(1, &[0], -1);
//! assert_eq!(mukai_pairing(&v, &v, &h2).unwrap(), Rat::from_integer(2.into()));
//! let b = vec![Rat::new(1.into(), 2.into())];
//! let w = exp_twist(&v, &b, &h2).unwrap();
//! assert_eq!(mukai_pairing(&w, &w, &h2).unwrap(), Rat::from_integer(2.into()));
//! ```

pub mod brauer;
pub mod error;
pub mod isometry;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod moduli;
pub mod mukai;
pub mod scalar;
pub mod stability;
pub mod walls;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use brauer::{
    brauer_equivalent, brauer_order, is_mukai_vector, twist_comparison_isometry, BField,
    BrauerWitness, MukaiCheck, TwistComparison,
};
pub use error::{Error, ErrorKind, Result};
pub use isometry::{
    adjoint_check, compose, duality, exp_twist_isometry, hodge_isometry_between_twists,
    theta_projection, Isometry, ThetaProjection,
};
pub use lattice::{Lattice, Sublattice};
pub use linalg::{Matrix, Signature};
pub use moduli::{
    algebraic_beauville, beauville_lattice, moduli_report, ModuliReport, Polarization,
};
pub use mukai::{exp_twist, mukai_pairing, MukaiVector, SurfaceKind};
pub use scalar::Scalar;
pub use stability::{stability_compare, HilbertCoeffs};
pub use walls::{
    is_general, same_chamber, strong_generality, wall_bound, walls_between, Generality,
    StrongGenerality, Wall, WallQuery,
};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rat>;
pub type IntVec = Vec<Int>;
pub type RatVec = Vec<Rat>;
