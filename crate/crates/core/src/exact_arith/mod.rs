//! Exact scalars: rationals, cyclotomic field elements and Laurent
//! polynomials.

pub mod cyclotomic;
pub mod laurent;
pub mod linalg;
pub mod rational;

pub use cyclotomic::{CyclotomicScalar, lcm, real_cmp, totient};
pub use laurent::LaurentPoly;
pub use rational::{Rational, format_rational, int, parse_rational, rat};

/// Coefficient ring for diagram algebras.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Scalar for CyclotomicScalar {
    fn zero_like(&self) -> Self {
        CyclotomicScalar::zero(self.order())
    }
    fn one_like(&self) -> Self {
        CyclotomicScalar::one(self.order())
    }
    fn is_zero(&self) -> bool {
        CyclotomicScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Scalar for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero()
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}
