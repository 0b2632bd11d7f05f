//! Exact base fields: arbitrary-precision rationals and the real/imaginary
//! quadratic extensions `Q(sqrt(d))`.
//!
//! Elements of `Q(sqrt(d))` are stored on the basis `{1, sqrt(d)}` with
//! reduced rational coordinates, so equal values are bitwise equal and can
//! be used directly as map keys. The ring-of-integers basis is deliberately
//! not used: coordinates like `(-1 - sqrt(-3))/2` are still exact here.

use alloc::format;
use alloc::string::ToString;
use core::fmt;

use num_bigint::{BigInt, Sign as BigSign};
use num_traits::{One, Signed, Zero};

use crate::field::{CoeffDisplay, Field};
use crate::intops::is_squarefree_i64;

/// Reduced fraction with positive denominator; `num_rational` maintains the
/// canonical form after every operation.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactFieldError {
    /// The radicand has a square factor.
    NotSquarefree,
    /// d in {0, 1} defines no quadratic extension.
    DegenerateRadicand,
}

impl fmt::Display for ExactFieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactFieldError::NotSquarefree => write!(f, "radicand is not squarefree"),
            ExactFieldError::DegenerateRadicand => write!(f, "radicand must not be 0 or 1"),
        }
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact integer square root when n is a perfect square.
fn bigint_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.sign() == BigSign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// The non-negative square root of a rational square; `None` otherwise.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = bigint_sqrt_exact(r.numer())?;
    let den = bigint_sqrt_exact(r.denom())?;
    Some(Rational::new(num, den))
}

/// Descriptor of `Q(sqrt(d))` with d squarefree, d not in {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadFieldDesc {
    d: i64,
}

impl QuadFieldDesc {
    pub fn new(d: i64) -> Result<Self, ExactFieldError> {
        if d == 0 || d == 1 {
            return Err(ExactFieldError::DegenerateRadicand);
        }
        if !is_squarefree_i64(d) {
            return Err(ExactFieldError::NotSquarefree);
        }
        Ok(QuadFieldDesc { d })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn elem(&self, a: Rational, b: Rational) -> QuadExt {
        QuadExt { field: *self, a, b }
    }

    pub fn from_rational(&self, a: Rational) -> QuadExt {
        self.elem(a, Rational::zero())
    }

    pub fn from_i64(&self, n: i64) -> QuadExt {
        self.from_rational(rational_int(n))
    }

    pub fn zero(&self) -> QuadExt {
        self.from_i64(0)
    }

    pub fn one(&self) -> QuadExt {
        self.from_i64(1)
    }

    /// sqrt(d) itself.
    pub fn gen(&self) -> QuadExt {
        self.elem(Rational::zero(), Rational::one())
    }
}

impl fmt::Display for QuadFieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

/// `a + b*sqrt(d)` with reduced rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadExt {
    field: QuadFieldDesc,
    a: Rational,
    b: Rational,
}

impl QuadExt {
    pub fn field(&self) -> QuadFieldDesc {
        self.field
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conj(&self) -> QuadExt {
        QuadExt {
            field: self.field,
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a^2 - d*b^2`, a rational.
    pub fn norm(&self) -> Rational {
        let d = rational_int(self.field.d);
        &self.a * &self.a - d * &self.b * &self.b
    }

    fn assert_same_field(&self, rhs: &QuadExt) {
        assert!(
            self.field == rhs.field,
            "mixed quadratic fields: d = {} vs d = {}",
            self.field.d,
            rhs.field.d
        );
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            return write!(f, "{}", self.a);
        }
        let surd = format!("sqrt({})", self.field.d);
        let bmag = self.b.abs();
        let bterm = if One::is_one(&bmag) {
            surd
        } else {
            format!("{}*{}", bmag, surd)
        };
        if Zero::is_zero(&self.a) {
            if self.b.is_negative() {
                return write!(f, "-{}", bterm);
            }
            return write!(f, "{}", bterm);
        }
        let opsign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}", self.a, opsign, bterm)
    }
}

impl Field for QuadExt {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.field.from_i64(n)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }

    fn add(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        QuadExt {
            field: self.field,
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        QuadExt {
            field: self.field,
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let d = rational_int(self.field.d);
        QuadExt {
            field: self.field,
            a: &self.a * &rhs.a + &d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }

    fn neg(&self) -> Self {
        QuadExt {
            field: self.field,
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(a + b*sqrt(d)) = conj / norm; norm is nonzero since d is not
        // a rational square.
        let n = self.norm();
        let c = self.conj();
        Some(QuadExt {
            field: self.field,
            a: c.a / &n,
            b: c.b / &n,
        })
    }

    fn sqrt(&self) -> Option<Self> {
        quad_sqrt(self)
    }

    fn display_signed(&self) -> CoeffDisplay {
        if Zero::is_zero(&self.b) {
            if self.a.is_negative() {
                CoeffDisplay::Neg(self.a.abs().to_string())
            } else {
                CoeffDisplay::Pos(self.a.to_string())
            }
        } else if Zero::is_zero(&self.a) {
            let mag = QuadExt {
                field: self.field,
                a: Rational::zero(),
                b: self.b.abs(),
            };
            if self.b.is_negative() {
                CoeffDisplay::Neg(mag.to_string())
            } else {
                CoeffDisplay::Pos(mag.to_string())
            }
        } else {
            CoeffDisplay::Wrapped(self.to_string())
        }
    }
}

/// Exact square root in `Q(sqrt(d))`.
///
/// For x = a + b*sqrt(d), a root y = u + v*sqrt(d) must satisfy
/// u^2 + d*v^2 = a and 2uv = b; eliminating v gives u^2 = (a ± n)/2 with
/// n = sqrt(norm(x)) in Q, so everything reduces to `rational_sqrt`.
pub fn quad_sqrt(x: &QuadExt) -> Option<QuadExt> {
    let fld = x.field;
    if x.is_zero() {
        return Some(fld.zero());
    }
    if Zero::is_zero(&x.b) {
        // Either a is a rational square, or a/d is (then y = v*sqrt(d)).
        if let Some(u) = rational_sqrt(&x.a) {
            return Some(fld.from_rational(u));
        }
        let ad = &x.a / rational_int(fld.d);
        if let Some(v) = rational_sqrt(&ad) {
            return Some(fld.elem(Rational::zero(), v));
        }
        return None;
    }
    let n = rational_sqrt(&x.norm())?;
    let two = rational_int(2);
    for cand in [(&x.a + &n) / &two, (&x.a - &n) / &two] {
        if let Some(u) = rational_sqrt(&cand) {
            if Zero::is_zero(&u) {
                continue; // b != 0 needs u != 0
            }
            let v = &x.b / (&two * &u);
            let root = fld.elem(u, v);
            debug_assert!(root.mul(&root) == *x);
            return Some(root);
        }
    }
    None
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        rational_int(n)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self.clone()
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }

    fn display_signed(&self) -> CoeffDisplay {
        if self.is_negative() {
            CoeffDisplay::Neg(self.abs().to_string())
        } else {
            CoeffDisplay::Pos(self.to_string())
        }
    }
}

/// Convenience used by tests and seed-data construction.
pub fn quad(field: QuadFieldDesc, a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> QuadExt {
    field.elem(rational(a_num, a_den), rational(b_num, b_den))
}
