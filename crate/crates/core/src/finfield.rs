//! Prime fields `F_p` (p odd) and quadratic extensions `F_{p^2}` realized
//! as `F_p(sqrt(d))` for a non-residue d.
//!
//! The extension is always built with the *same* radicand d as the exact
//! quadratic field being reduced, never an arbitrary non-residue, so that
//! reducing divisor coefficients is literally coefficient-wise.

use alloc::vec::Vec;
use core::fmt;

use crate::field::{CoeffDisplay, Field};
use crate::intops::is_prime_u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinFieldError {
    /// p is not an odd prime.
    NotOddPrime,
    /// d is a square mod p, so F_p(sqrt(d)) would not be a field.
    NotInert,
}

impl fmt::Display for FinFieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinFieldError::NotOddPrime => write!(f, "p must be an odd prime"),
            FinFieldError::NotInert => write!(f, "d is a square mod p; F_p(sqrt(d)) is not a field"),
        }
    }
}

/// Legendre symbol (a|p) by Euler's criterion: a^((p-1)/2) mod p mapped
/// to {-1, 0, 1}.
pub fn legendre(a: i64, p: u64) -> i32 {
    assert!(p > 2 && is_prime_u64(p), "legendre needs an odd prime, got {}", p);
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let e = pow_mod(r, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        -1
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpDesc {
    p: u64,
}

impl FpDesc {
    pub fn new(p: u64) -> Result<Self, FinFieldError> {
        if p <= 2 || !is_prime_u64(p) {
            return Err(FinFieldError::NotOddPrime);
        }
        Ok(FpDesc { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp2Desc {
    p: u64,
    d: i64,
}

impl Fp2Desc {
    /// `F_p(sqrt(d))`; requires (d|p) = -1.
    pub fn new(p: u64, d: i64) -> Result<Self, FinFieldError> {
        if p <= 2 || !is_prime_u64(p) {
            return Err(FinFieldError::NotOddPrime);
        }
        if legendre(d, p) != -1 {
            return Err(FinFieldError::NotInert);
        }
        Ok(Fp2Desc { p, d })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    fn d_mod_p(&self) -> u64 {
        self.d.rem_euclid(self.p as i64) as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FqDesc {
    Fp(FpDesc),
    Fp2(Fp2Desc),
}

impl FqDesc {
    pub fn prime(p: u64) -> Result<Self, FinFieldError> {
        FpDesc::new(p).map(FqDesc::Fp)
    }

    pub fn quadratic(p: u64, d: i64) -> Result<Self, FinFieldError> {
        Fp2Desc::new(p, d).map(FqDesc::Fp2)
    }

    pub fn p(&self) -> u64 {
        match self {
            FqDesc::Fp(f) => f.p,
            FqDesc::Fp2(f) => f.p,
        }
    }

    /// Number of elements: p or p^2.
    pub fn size(&self) -> u64 {
        match self {
            FqDesc::Fp(f) => f.p,
            FqDesc::Fp2(f) => f.p * f.p,
        }
    }

    pub fn zero(&self) -> FqElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FqElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FqElem {
        let p = self.p();
        FqElem {
            desc: *self,
            a: n.rem_euclid(p as i64) as u64,
            b: 0,
        }
    }

    /// a + b*sqrt(d); the b part must be zero for prime fields.
    pub fn elem(&self, a: u64, b: u64) -> FqElem {
        let p = self.p();
        if let FqDesc::Fp(_) = self {
            assert!(b % p == 0, "prime field element with a surd part");
        }
        FqElem {
            desc: *self,
            a: a % p,
            b: b % p,
        }
    }

    /// sqrt(d) in F_p(sqrt(d)); panics on prime fields.
    pub fn gen(&self) -> FqElem {
        match self {
            FqDesc::Fp(_) => panic!("prime field has no quadratic generator"),
            FqDesc::Fp2(_) => self.elem(0, 1),
        }
    }

    /// All q elements, ordered by index a + b*p.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        let q = self.size();
        (0..q).map(move |i| self.from_index(i))
    }

    pub fn index(&self, x: &FqElem) -> u64 {
        debug_assert!(x.desc == *self);
        x.a + x.b * self.p()
    }

    pub fn from_index(&self, i: u64) -> FqElem {
        let p = self.p();
        match self {
            FqDesc::Fp(_) => FqElem {
                desc: *self,
                a: i % p,
                b: 0,
            },
            FqDesc::Fp2(_) => FqElem {
                desc: *self,
                a: i % p,
                b: (i / p) % p,
            },
        }
    }
}

impl fmt::Display for FqDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FqDesc::Fp(d) => write!(f, "F_{}", d.p),
            FqDesc::Fp2(d) => write!(f, "F_{}(sqrt({}))", d.p, d.d),
        }
    }
}

/// Element of F_p or F_p(sqrt(d)); coordinates reduced mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqElem {
    desc: FqDesc,
    a: u64,
    b: u64,
}

impl FqElem {
    pub fn desc(&self) -> FqDesc {
        self.desc
    }

    pub fn coords(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    /// Frobenius x -> x^p; on F_p(sqrt(d)) this is conjugation b -> -b.
    pub fn frobenius(&self) -> FqElem {
        self.pow_u64(self.desc.p())
    }

    fn assert_same_field(&self, rhs: &FqElem) {
        assert!(self.desc == rhs.desc, "mixed finite fields");
    }
}

/// Euler-criterion square test: x^((q-1)/2) = 1, with 0 counting as a
/// square.
pub fn is_square_fq(x: &FqElem) -> bool {
    if x.is_zero() {
        return true;
    }
    let q = x.desc.size();
    x.pow_u64((q - 1) / 2).is_one()
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.desc {
            FqDesc::Fp(_) => write!(f, "{}", self.a),
            FqDesc::Fp2(d) => {
                if self.b == 0 {
                    write!(f, "{}", self.a)
                } else if self.a == 0 {
                    if self.b == 1 {
                        write!(f, "sqrt({})", d.d())
                    } else {
                        write!(f, "{}*sqrt({})", self.b, d.d())
                    }
                } else if self.b == 1 {
                    write!(f, "{} + sqrt({})", self.a, d.d())
                } else {
                    write!(f, "{} + {}*sqrt({})", self.a, self.b, d.d())
                }
            }
        }
    }
}

impl Field for FqElem {
    fn zero_like(&self) -> Self {
        self.desc.zero()
    }

    fn one_like(&self) -> Self {
        self.desc.one()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.desc.from_i64(n)
    }

    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let p = self.desc.p();
        FqElem {
            desc: self.desc,
            a: (self.a + rhs.a) % p,
            b: (self.b + rhs.b) % p,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let p = self.desc.p();
        FqElem {
            desc: self.desc,
            a: (self.a + p - rhs.a) % p,
            b: (self.b + p - rhs.b) % p,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let p = self.desc.p();
        match self.desc {
            FqDesc::Fp(_) => FqElem {
                desc: self.desc,
                a: mul_mod(self.a, rhs.a, p),
                b: 0,
            },
            FqDesc::Fp2(d2) => {
                // (a + b*s)(c + e*s) = ac + d*be + (ae + bc)*s, s^2 = d
                let dm = d2.d_mod_p();
                let ac = mul_mod(self.a, rhs.a, p);
                let be = mul_mod(self.b, rhs.b, p);
                let ae = mul_mod(self.a, rhs.b, p);
                let bc = mul_mod(self.b, rhs.a, p);
                FqElem {
                    desc: self.desc,
                    a: (ac + mul_mod(dm, be, p)) % p,
                    b: (ae + bc) % p,
                }
            }
        }
    }

    fn neg(&self) -> Self {
        let p = self.desc.p();
        FqElem {
            desc: self.desc,
            a: (p - self.a) % p,
            b: (p - self.b) % p,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p = self.desc.p();
        match self.desc {
            FqDesc::Fp(_) => Some(FqElem {
                desc: self.desc,
                a: pow_mod(self.a, p - 2, p),
                b: 0,
            }),
            FqDesc::Fp2(d2) => {
                // conj / norm with norm = a^2 - d*b^2 in F_p*.
                let dm = d2.d_mod_p();
                let n = (mul_mod(self.a, self.a, p) + p * p
                    - mul_mod(dm, mul_mod(self.b, self.b, p), p))
                    % p;
                let ninv = pow_mod(n, p - 2, p);
                Some(FqElem {
                    desc: self.desc,
                    a: mul_mod(self.a, ninv, p),
                    b: mul_mod((p - self.b) % p, ninv, p),
                })
            }
        }
    }

    fn is_square(&self) -> bool {
        is_square_fq(self)
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(*self);
        }
        if self.is_one() {
            return Some(self.one_like());
        }
        if !is_square_fq(self) {
            return None;
        }
        // Direct search; fields here are small (q <= 10^6) and this only
        // runs once per curve/field setup.
        self.desc.elements().find(|y| y.mul(y) == *self)
    }

    fn display_signed(&self) -> CoeffDisplay {
        let s = alloc::format!("{}", self);
        if self.b != 0 && self.a != 0 {
            CoeffDisplay::Wrapped(s)
        } else {
            CoeffDisplay::Pos(s)
        }
    }
}

/// Exhaustive squaring table for an entire small field, indexed by
/// `desc.index`. Used by the counting scan and the square-test oracle.
pub fn squares_table(desc: &FqDesc) -> Vec<bool> {
    let q = desc.size() as usize;
    let mut t = alloc::vec![false; q];
    for x in desc.elements() {
        let s = x.mul(&x);
        t[desc.index(&s) as usize] = true;
    }
    t
}
