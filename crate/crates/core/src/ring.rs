//! Scalar abstraction shared by strain matrices and exact linear algebra.
//!
//! The three scalar towers (rationals, multivariate polynomials, algebraic
//! numbers) all implement [`Ring`]; the two ordered field towers additionally
//! implement [`OrderedField`], which is what rank computations and sign tests
//! require. Ring operations take operands by reference and panic on
//! mixed-field misuse; fallible variants live on the concrete types.

use crate::algebraic::Algebraic;
use crate::rat::{Rat, Sign};
use num_traits::{One, Zero};

pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    /// Zero in the same ring context (variable universe, extension field).
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Exact test against the ring's zero.
    fn vanishes(&self) -> bool;
}

pub trait OrderedField: Ring {
    /// Multiplicative inverse; panics on zero.
    fn inv_ref(&self) -> Self;
    fn sign(&self) -> Sign;
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl OrderedField for Rat {
    fn inv_ref(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverting zero");
        Rat::one() / self
    }
    fn sign(&self) -> Sign {
        Sign::of(self)
    }
}

impl Ring for Algebraic {
    fn zero_like(&self) -> Self {
        Algebraic::zero()
    }
    fn one_like(&self) -> Self {
        Algebraic::one()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("mixed-field addition")
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("mixed-field subtraction")
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("mixed-field multiplication")
    }
    fn neg_ref(&self) -> Self {
        Algebraic::neg(self)
    }
    fn vanishes(&self) -> bool {
        Algebraic::is_zero(self)
    }
}

impl OrderedField for Algebraic {
    fn inv_ref(&self) -> Self {
        self.try_invert().expect("inverting zero")
    }
    fn sign(&self) -> Sign {
        Algebraic::sign(self)
    }
}
