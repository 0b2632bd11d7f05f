//! The field abstraction every coefficient type implements.
//!
//! Elements carry their own field descriptor (the radicand d, or the prime
//! p), so zero and one are obtained *from an existing element* rather than
//! from a global context. `Ord` is required so canonical forms can be
//! deduplicated and sorted deterministically.

use alloc::string::String;

/// How a coefficient renders inside a polynomial term.
pub enum CoeffDisplay {
    /// Plain magnitude preceded by a minus sign, e.g. `-3/2`.
    Neg(String),
    /// Plain magnitude, e.g. `3/2` or `sqrt(-3)`.
    Pos(String),
    /// Needs parentheses when multiplying a power of x, e.g. `(1 - sqrt(-3))`.
    Wrapped(String),
}

pub trait Field: Clone + PartialEq + Eq + PartialOrd + Ord + core::fmt::Debug + core::fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// The image of a small integer in the same field as `self`.
    fn from_i64_like(&self, n: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// None iff `self` is zero.
    fn inv(&self) -> Option<Self>;

    /// Exact squareness test; zero counts as a square.
    fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }
    /// Some y with y^2 = self, in a fixed canonical choice, when one exists.
    fn sqrt(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// Sign-aware rendering used by the polynomial pretty-printer.
    fn display_signed(&self) -> CoeffDisplay {
        CoeffDisplay::Wrapped(alloc::format!("{}", self))
    }

    fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}
