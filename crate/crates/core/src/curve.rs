//! The even-degree genus-2 model `y^2 = f(x)` with `deg f = 6`.
//!
//! On this model the smooth projective curve has two points at infinity
//! whenever the leading coefficient of f is a square in the base field;
//! `Sign::Plus` labels the branch where `y/x^3` tends to the canonical
//! square root of lc(f) (the root `+1` when lc = 1).

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactfield::{rational_int, Rational};
use crate::field::Field;
use crate::finfield::legendre;
use crate::intops::{is_prime_u64, is_squarefree_i64};
use crate::poly::{discriminant, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveError {
    /// disc(f) = 0: the sextic has a repeated root.
    SingularModel,
    /// The coefficient list does not describe a degree-6 polynomial.
    WrongDegree,
    /// Twisting radicand in {0, 1} or not squarefree.
    DegenerateRadicand,
    /// p divides d, so p neither splits nor stays inert.
    Ramified,
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveError::SingularModel => "singular model: discriminant vanishes",
            CurveError::WrongDegree => "coefficient list must give a degree-6 polynomial",
            CurveError::DegenerateRadicand => "twist radicand must be squarefree and not 0 or 1",
            CurveError::Ramified => "p divides the radicand (ramified prime)",
        };
        write!(f, "{}", s)
    }
}

/// `y^2 = c6 x^6 + ... + c0` with integer coefficients and disc(f) != 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Genus2Curve {
    coeffs: [i64; 7],
    label: String,
}

impl Genus2Curve {
    /// Validates degree and nonsingularity; coefficients constant-first.
    pub fn new(label: &str, coeffs: [i64; 7]) -> Result<Self, CurveError> {
        if coeffs[6] == 0 {
            return Err(CurveError::WrongDegree);
        }
        let c = Genus2Curve {
            coeffs,
            label: String::from(label),
        };
        if c.disc().is_zero() {
            return Err(CurveError::SingularModel);
        }
        Ok(c)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coeffs(&self) -> &[i64; 7] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> i64 {
        self.coeffs[6]
    }

    /// f as a polynomial over Q.
    pub fn poly_q(&self) -> Poly<Rational> {
        Poly::from_i64s(&rational_int(0), &self.coeffs)
    }

    /// f base-changed to the field of `like`.
    pub fn poly_in<F: Field>(&self, like: &F) -> Poly<F> {
        Poly::from_i64s(like, &self.coeffs)
    }

    /// Discriminant of the sextic (the polynomial discriminant; no
    /// minimal-model normalization is attempted).
    pub fn disc(&self) -> BigInt {
        let d = discriminant(&self.poly_q());
        debug_assert!(d.denom().abs() == BigInt::from(1) || d.numer().is_zero());
        d.numer() / d.denom()
    }

    /// `{2} + {odd p : p | disc(f)}` by trial division. This is a safe
    /// superset of the bad primes of any particular model normalization:
    /// every prime of genuinely bad reduction divides disc(f).
    pub fn bad_primes(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        out.insert(2);
        let disc = self.disc();
        let mut n = disc.magnitude().to_u128().expect("trial division supports |disc| up to u128 only");
        while n % 2 == 0 {
            n /= 2;
        }
        let mut p = 3u128;
        while p * p <= n {
            if n % p == 0 {
                out.insert(p as u64);
                while n % p == 0 {
                    n /= p;
                }
            }
            p += 2;
        }
        if n > 1 {
            out.insert(n as u64);
        }
        out
    }

    pub fn is_good_prime(&self, p: u64) -> bool {
        is_prime_u64(p) && !self.bad_primes().contains(&p)
    }

    /// Quadratic twist `y^2 = d*f(x)`, isomorphic to this curve over
    /// `Q(sqrt(d))` via (x, y) -> (x, y*sqrt(d)).
    pub fn twist(&self, d: i64) -> Result<Genus2Curve, CurveError> {
        if d == 0 || d == 1 || !is_squarefree_i64(d) {
            return Err(CurveError::DegenerateRadicand);
        }
        let mut coeffs = self.coeffs;
        for c in &mut coeffs {
            *c = c.checked_mul(d).expect("twist coefficient overflow");
        }
        let label = alloc::format!("{}^({})", self.label, d);
        Genus2Curve::new(&label, coeffs)
    }

    /// The two points at infinity over the field of `like`, present iff
    /// lc(f) is a square there.
    pub fn infinity_points<F: Field>(&self, like: &F) -> Vec<CurvePoint<F>> {
        let lc = like.from_i64_like(self.coeffs[6]);
        if lc.is_square() {
            alloc::vec![CurvePoint::Infinity(Sign::Plus), CurvePoint::Infinity(Sign::Minus)]
        } else {
            Vec::new()
        }
    }

    /// Exact membership test: `y^2 = f(x)` for affine points, squareness
    /// of lc(f) for the points at infinity.
    pub fn contains<F: Field>(&self, pt: &CurvePoint<F>, like: &F) -> bool {
        match pt {
            CurvePoint::Affine(x, y) => {
                let f = self.poly_in(like);
                y.mul(y) == f.eval(x)
            }
            CurvePoint::Infinity(_) => like.from_i64_like(self.coeffs[6]).is_square(),
        }
    }
}

impl fmt::Display for Genus2Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: y^2 = {}", self.label, self.poly_q())
    }
}

/// Branch label for the two points at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint<F> {
    Affine(F, F),
    Infinity(Sign),
}

impl<F: Field> CurvePoint<F> {
    /// Hyperelliptic involution: (x, y) -> (x, -y), infinity branches swap.
    pub fn involution(&self) -> CurvePoint<F> {
        match self {
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), y.neg()),
            CurvePoint::Infinity(s) => CurvePoint::Infinity(s.flip()),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity(_))
    }
}

impl<F: Field> fmt::Display for CurvePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Affine(x, y) => write!(f, "({}, {})", x, y),
            CurvePoint::Infinity(Sign::Plus) => write!(f, "inf+"),
            CurvePoint::Infinity(Sign::Minus) => write!(f, "inf-"),
        }
    }
}

/// p stays prime in the ring of integers of `Q(sqrt(d))` iff d is a
/// non-residue mod p.
pub fn is_inert(p: u64, d: i64) -> Result<bool, CurveError> {
    if d.rem_euclid(p as i64) == 0 {
        return Err(CurveError::Ramified);
    }
    Ok(legendre(d, p) == -1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{quad, QuadFieldDesc};

    pub(crate) fn c1() -> Genus2Curve {
        Genus2Curve::new("c1", [1, -4, 6, -2, 1, -2, 1]).unwrap()
    }

    pub(crate) fn c2() -> Genus2Curve {
        Genus2Curve::new("c2", [1, 4, 10, 10, 5, 2, 1]).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(c1().label(), "c1");
        assert_eq!(c2().leading_coeff(), 1);
        // (x-1)^2 (x^4 + 1) = x^6 - 2x^5 + x^4 + x^2 - 2x + 1 is singular.
        assert_eq!(
            Genus2Curve::new("sing", [1, -2, 1, 0, 1, -2, 1]),
            Err(CurveError::SingularModel)
        );
        assert_eq!(
            Genus2Curve::new("quintic", [1, 0, 0, 0, 0, 1, 0]),
            Err(CurveError::WrongDegree)
        );
    }

    #[test]
    fn bad_primes_c1_c2() {
        let bp1: Vec<u64> = c1().bad_primes().into_iter().collect();
        assert_eq!(bp1, alloc::vec![2, 13]);
        let bp2: Vec<u64> = c2().bad_primes().into_iter().collect();
        assert_eq!(bp2, alloc::vec![2, 3]);
    }

    #[test]
    fn disc_odd_part_signs() {
        // Odd prime divisors only; the power of 2 depends on the model
        // normalization and is deliberately not pinned.
        let d1 = c1().disc();
        assert!(d1.magnitude().to_u128().unwrap() % 13 == 0);
        let d2 = c2().disc();
        assert!(d2.magnitude().to_u128().unwrap() % 3 == 0);
    }

    #[test]
    fn bad_primes_x6_plus_1() {
        // disc(x^6 + 1) = -6^6, so {2, 3}.
        let c = Genus2Curve::new("e", [1, 0, 0, 0, 0, 0, 1]).unwrap();
        let bp: Vec<u64> = c.bad_primes().into_iter().collect();
        assert_eq!(bp, alloc::vec![2, 3]);
        assert_eq!(c.disc(), BigInt::from(-46656));
    }

    #[test]
    fn membership() {
        let k = QuadFieldDesc::new(-3).unwrap();
        let one = k.one();
        assert!(c1().contains(&CurvePoint::Affine(k.zero(), one.clone()), &one));
        assert!(!c1().contains(&CurvePoint::Affine(k.zero(), k.from_i64(2)), &one));
        // ((-1 - sqrt(-3))/2, (-3 - sqrt(-3))/2) lies on c2.
        let x = quad(k, -1, 2, -1, 2);
        let y = quad(k, -3, 2, -1, 2);
        assert!(c2().contains(&CurvePoint::Affine(x, y), &one));
    }

    #[test]
    fn infinity_points_present_iff_lc_square() {
        let ki = QuadFieldDesc::new(-1).unwrap();
        assert_eq!(c1().infinity_points(&ki.one()).len(), 2);
        let k3 = QuadFieldDesc::new(-3).unwrap();
        assert_eq!(c2().infinity_points(&k3.one()).len(), 2);
        let c = Genus2Curve::new("lc2", [1, 0, 0, 0, 0, 0, 2]).unwrap();
        assert!(c.infinity_points(&rational_int(1)).is_empty());
    }

    #[test]
    fn twists() {
        let t = c1().twist(-1).unwrap();
        assert_eq!(t.coeffs(), &[-1, 4, -6, 2, -1, 2, -1]);
        let t3 = c1().twist(-3).unwrap();
        assert_eq!(t3.coeffs(), &[-3, 12, -18, 6, -3, 6, -3]);
        assert_eq!(c1().twist(4), Err(CurveError::DegenerateRadicand));
        assert_eq!(c1().twist(1), Err(CurveError::DegenerateRadicand));

        // Twisting twice by d scales f by d^2, a model isomorphic over Q.
        let tt = t.twist(-1).unwrap();
        assert_eq!(tt.coeffs(), c1().coeffs());

        // bad_primes(twist) within bad_primes(c) + primes of d + {2}.
        for d in [-1i64, -3] {
            let tw = c1().twist(d).unwrap();
            let allowed: BTreeSet<u64> = c1()
                .bad_primes()
                .into_iter()
                .chain([2u64])
                .chain(crate::intops::factor_u128(d.unsigned_abs() as u128).into_iter().map(|(p, _)| p as u64))
                .collect();
            assert!(tw.bad_primes().is_subset(&allowed));
        }
    }

    #[test]
    fn inertness() {
        assert_eq!(is_inert(11, -1), Ok(true));
        assert_eq!(is_inert(17, -3), Ok(true));
        assert_eq!(is_inert(13, -1), Ok(false));
        assert_eq!(is_inert(3, -3), Err(CurveError::Ramified));
        // (-1|p) = -1 iff p = 3 mod 4; (-3|p) = -1 iff p = 2 mod 3.
        let mut p = 3u64;
        while p < 1000 {
            if is_prime_u64(p) {
                assert_eq!(is_inert(p, -1).unwrap(), p % 4 == 3, "p = {}", p);
                if p != 3 {
                    assert_eq!(is_inert(p, -3).unwrap(), p % 3 == 2, "p = {}", p);
                }
            }
            p += 2;
        }
    }
}
