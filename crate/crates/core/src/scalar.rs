//! Scalar traits.
//!
//! All arithmetic in this crate is exact. Integer code is generic over
//! [`Scalar`], implemented for `i64`, `i128` and [`BigInt`]; rational values
//! are `Ratio<T>` over the same scalar. Fixed-width scalars overflow on large
//! inputs (they panic in debug builds), so the crate-root aliases pick
//! `BigInt`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Exact integer scalar.
pub trait Scalar:
    Integer
    + Roots
    + Signed
    + Clone
    + Hash
    + FromPrimitive
    + ToPrimitive
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for BigInt {}

/// Ring element usable as a matrix entry: scalars and their ratios.
pub trait Entry:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + fmt::Debug
    + fmt::Display
{
}

impl<T> Entry for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + fmt::Debug
        + fmt::Display
{
}

/// Small-integer constant in any scalar type.
pub fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("i64 constant fits every scalar type")
}

pub fn rat<T: Scalar>(num: i64, den: i64) -> Ratio<T> {
    Ratio::new(int(num), int(den))
}

pub fn to_ratio<T: Scalar>(v: &T) -> Ratio<T> {
    Ratio::from_integer(v.clone())
}

pub fn ratio_vec<T: Scalar>(v: &[T]) -> Vec<Ratio<T>> {
    v.iter().map(to_ratio).collect()
}

/// Integer vector if every entry has denominator one.
pub fn integral_vec<T: Scalar>(v: &[Ratio<T>]) -> Option<Vec<T>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

/// Non-negative gcd of all entries; zero for an all-zero slice.
pub fn content<T: Scalar>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |g, x| g.gcd(x))
}

/// Least common multiple of the denominators.
pub fn common_denominator<T: Scalar>(v: &[Ratio<T>]) -> T {
    v.iter().fold(T::one(), |l, x| l.lcm(x.denom()))
}

/// Least non-negative residue of `a` modulo `|m|`.
pub fn mod_floor<T: Scalar>(a: &T, m: &T) -> T {
    a.mod_floor(&m.abs())
}

/// Negate `v` if its first nonzero entry is negative.
pub fn sign_normalize<T: Scalar>(v: &mut [T]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

pub fn dot<T: Entry>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}
