//! Minimal commutative-ring interface.
//!
//! Polynomials and skew matrices are generic over their coefficient ring so the
//! same kernels serve exact field constants ([`crate::Scalar`]) and symbolic
//! parameter polynomials ([`crate::MPoly`]).

pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}
