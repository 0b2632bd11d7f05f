//! Exact arithmetic in the degree-0 divisor class group of the even-degree
//! genus-2 model `y^2 = f(x)`, deg f = 6, with its two points at infinity.
//!
//! # Representation
//!
//! Every class has a unique representative `[E - (inf+ + inf-)]` with E
//! effective of degree 2 (degree 0 for the identity). E splits into an
//! affine part cut out by a Mumford pair `(a, b)` (`a` monic of degree
//! <= 2, `deg b < deg a`, `a | b^2 - f`) plus `n_plus` copies of `inf+`
//! and `n_minus` copies of `inf-`. Uniqueness comes from Riemann-Roch:
//! a nonzero class has a one-dimensional space of such E, and the only
//! degree-2 pencil is the fibers of x, all equivalent to `inf+ + inf-`.
//!
//! The printed triple `(a(x), b(x), d)` encodes the infinity part in b:
//! when `d > deg a`, b has degree 3 and its leading coefficient is
//! `+sqrt(lc f)` for `inf+` or `-sqrt(lc f)` for `inf-`, with b matching
//! the branch expansion of y at that infinite point in its top
//! `d - deg a` coefficients and interpolating the affine part below.
//!
//! # Group law
//!
//! Composition is classical Cantor composition on the affine ideals
//! (infinity multiplicities simply add); reduction replaces the affine
//! part A by the involution of the residual intersection of `y - V` with
//! the curve, where V is re-lifted to degree 3 matching the branch
//! expansion on the heavier side of infinity. One such step, together
//! with cancelling `inf+ + inf-` pairs against the base divisor, always
//! lands on the canonical weight-2 form.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero as _};

use crate::curve::{CurvePoint, Genus2Curve, Sign};
use crate::exactfield::{QuadExt, Rational};
use crate::field::Field;
use crate::finfield::{Fp2Desc, FqDesc, FqElem};
use crate::intops::{divisors_u128, gcd_u128};
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobianError {
    /// a does not divide b^2 - f.
    NotOnJacobian,
    /// Weight outside {0, 1, 2} or smaller than deg a.
    BadWeight,
    /// Degree constraints on a or b violated (deg a <= 2; deg b <= 3 with
    /// a branch-matching cubic coefficient when infinity points are
    /// present).
    DegreeViolation,
    PointNotOnCurve,
    OrderExceedsBound,
    ClosureExceedsBound,
    /// The element list is not a subgroup (misses the identity or a sum).
    NotClosed,
    /// A coefficient denominator vanishes mod p.
    DenominatorDivisibleByP,
    BadReduction,
    /// The reduction target's radicand differs from the divisor's field.
    NotInert,
    /// lc(f) is not a square in the base field, so the two points at
    /// infinity are not rational and this representation does not apply.
    LeadingCoeffNotSquare,
    ScanBoundExceeded,
}

impl fmt::Display for JacobianError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            JacobianError::NotOnJacobian => "a(x) does not divide b(x)^2 - f(x)",
            JacobianError::BadWeight => "weight must lie in {0, 1, 2} and dominate deg a",
            JacobianError::DegreeViolation => "degree constraints on (a, b) violated",
            JacobianError::PointNotOnCurve => "point does not lie on the curve",
            JacobianError::OrderExceedsBound => "element order exceeds the stated bound",
            JacobianError::ClosureExceedsBound => "subgroup closure exceeds the stated bound",
            JacobianError::NotClosed => "element list is not closed under addition",
            JacobianError::DenominatorDivisibleByP => "coefficient denominator divisible by p",
            JacobianError::BadReduction => "reduction prime divides the discriminant",
            JacobianError::NotInert => "reduction target field mismatch",
            JacobianError::LeadingCoeffNotSquare => "lc(f) is not a square in the base field",
            JacobianError::ScanBoundExceeded => "field too large for exhaustive enumeration",
        };
        write!(f, "{}", s)
    }
}

/// Reduced divisor class: affine Mumford pair plus infinity multiplicities.
/// Total weight `deg a + n_plus + n_minus` is 0 (identity) or 2, and at
/// most one of the infinity counts is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MumfordDivisor<F> {
    a: Poly<F>,
    b: Poly<F>,
    n_plus: u32,
    n_minus: u32,
}

impl<F: Field> MumfordDivisor<F> {
    pub fn a(&self) -> &Poly<F> {
        &self.a
    }

    /// The reduced interpolation polynomial (deg b < deg a); the printed
    /// triple's cubic b comes from [`Jacobian::triple`].
    pub fn b(&self) -> &Poly<F> {
        &self.b
    }

    pub fn n_plus(&self) -> u32 {
        self.n_plus
    }

    pub fn n_minus(&self) -> u32 {
        self.n_minus
    }

    pub fn weight(&self) -> u32 {
        (self.a.degree().unwrap_or(0) as u32) + self.n_plus + self.n_minus
    }

    pub fn is_identity(&self) -> bool {
        self.weight() == 0
    }
}

/// Context for arithmetic on one curve over one field: the sextic, the
/// canonical square root of its leading coefficient, and the degree-3
/// polynomial part H of the branch expansion of y at `inf+`
/// (`y = H(x) + O(1/x)` on the plus branch).
#[derive(Debug, Clone)]
pub struct Jacobian<F: Field> {
    f: Poly<F>,
    fprime: Poly<F>,
    sqrt_lc: F,
    hplus: Poly<F>,
}

impl<F: Field> Jacobian<F> {
    pub fn new(curve: &Genus2Curve, like: &F) -> Result<Self, JacobianError> {
        Self::from_sextic(curve.poly_in(like))
    }

    pub fn from_sextic(f: Poly<F>) -> Result<Self, JacobianError> {
        assert_eq!(f.degree(), Some(6), "even genus-2 model needs deg f = 6");
        let lc = f.lc().unwrap().clone();
        let s = lc.sqrt().ok_or(JacobianError::LeadingCoeffNotSquare)?;
        // H = s x^3 + h2 x^2 + h1 x + h0 with f - H^2 of degree <= 2:
        // matching coefficients of x^5, x^4, x^3 in H^2 = f.
        let two_s_inv = s.add(&s).inv().expect("lc(f) != 0");
        let c5 = f.coeff_or_zero(5, &s);
        let c4 = f.coeff_or_zero(4, &s);
        let c3 = f.coeff_or_zero(3, &s);
        let h2 = c5.mul(&two_s_inv);
        let h1 = c4.sub(&h2.mul(&h2)).mul(&two_s_inv);
        let h0 = c3.sub(&h2.mul(&h1).add(&h2.mul(&h1))).mul(&two_s_inv);
        let hplus = Poly::new(alloc::vec![h0, h1, h2, s.clone()]);
        debug_assert!(f.sub(&hplus.mul(&hplus)).deg_or_neg() <= 2);
        let fprime = f.derivative();
        Ok(Jacobian {
            f,
            fprime,
            sqrt_lc: s,
            hplus,
        })
    }

    pub fn sextic(&self) -> &Poly<F> {
        &self.f
    }

    pub fn sqrt_lc(&self) -> &F {
        &self.sqrt_lc
    }

    fn one(&self) -> F {
        self.sqrt_lc.one_like()
    }

    pub fn identity(&self) -> MumfordDivisor<F> {
        MumfordDivisor {
            a: Poly::constant(self.one()),
            b: Poly::zero(),
            n_plus: 0,
            n_minus: 0,
        }
    }

    /// Is D a canonically reduced divisor on this Jacobian?
    pub fn is_valid(&self, d: &MumfordDivisor<F>) -> bool {
        let da = d.a.degree();
        if da.is_none() || !d.a.lc().map_or(false, |l| l.is_one()) {
            return false;
        }
        let da = da.unwrap();
        if da > 2 || d.b.deg_or_neg() >= da as isize {
            return false;
        }
        if d.n_plus > 0 && d.n_minus > 0 {
            return false;
        }
        let w = d.weight();
        if w != 0 && w != 2 {
            return false;
        }
        let t = d.b.mul(&d.b).sub(&self.f);
        t.rem(&d.a).map_or(false, |r| r.is_zero())
    }

    /// Validated construction from a printed-style triple `(a, b, d)`.
    /// b may have degree up to 3; when `d > deg a` its cubic coefficient
    /// must be one of the branch roots of lc(f) and selects the infinite
    /// point that carries the remaining `d - deg a` weight.
    pub fn make(&self, a: &Poly<F>, b: &Poly<F>, d: u32) -> Result<MumfordDivisor<F>, JacobianError> {
        if a.is_zero() {
            return Err(JacobianError::DegreeViolation);
        }
        let a = a.monic();
        let t = b.mul(b).sub(&self.f);
        if !t.rem(&a).unwrap().is_zero() {
            return Err(JacobianError::NotOnJacobian);
        }
        let da = a.degree().unwrap() as u32;
        if da > 2 {
            return Err(JacobianError::DegreeViolation);
        }
        if d > 2 || d < da {
            return Err(JacobianError::BadWeight);
        }
        if b.deg_or_neg() > 3 {
            return Err(JacobianError::DegreeViolation);
        }
        let extra = d - da;
        let (n_plus, n_minus) = if extra > 0 {
            if b.deg_or_neg() != 3 {
                return Err(JacobianError::DegreeViolation);
            }
            let cubic = b.lc().unwrap();
            if *cubic == self.sqrt_lc {
                (extra, 0)
            } else if *cubic == self.sqrt_lc.neg() {
                (0, extra)
            } else {
                return Err(JacobianError::DegreeViolation);
            }
        } else {
            (0, 0)
        };
        let bred = b.rem(&a).unwrap();
        // Even weight d: the class [E - (d/2)(inf+ + inf-)]. Odd weight
        // (d = 1): the class [E - inf+], normalized here by adding inf-
        // to E (same class, since -inf+ = inf- - (inf+ + inf-)). The
        // final `reduce` cancels any balanced infinity pair this creates.
        let mut nm = n_minus;
        if d % 2 == 1 {
            nm += 1;
        }
        Ok(self.reduce(a, bred, n_plus as i64, nm as i64))
    }

    /// Class of `[P + Q - inf+ - inf-]`.
    pub fn from_points(
        &self,
        p: &CurvePoint<F>,
        q: &CurvePoint<F>,
    ) -> Result<MumfordDivisor<F>, JacobianError> {
        if !self.contains_point(p) || !self.contains_point(q) {
            return Err(JacobianError::PointNotOnCurve);
        }
        let one = self.one();
        let div = match (p, q) {
            (CurvePoint::Infinity(s1), CurvePoint::Infinity(s2)) => {
                if s1 == s2 {
                    let (np, nm) = match s1 {
                        Sign::Plus => (2, 0),
                        Sign::Minus => (0, 2),
                    };
                    MumfordDivisor {
                        a: Poly::constant(one),
                        b: Poly::zero(),
                        n_plus: np,
                        n_minus: nm,
                    }
                } else {
                    self.identity()
                }
            }
            (CurvePoint::Affine(x, y), CurvePoint::Infinity(sgn))
            | (CurvePoint::Infinity(sgn), CurvePoint::Affine(x, y)) => {
                let a = Poly::new(alloc::vec![x.neg(), one]);
                let (np, nm) = match sgn {
                    Sign::Plus => (1, 0),
                    Sign::Minus => (0, 1),
                };
                MumfordDivisor {
                    a,
                    b: Poly::constant(y.clone()),
                    n_plus: np,
                    n_minus: nm,
                }
            }
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => {
                if x1 == x2 {
                    if *y1 == y2.neg() {
                        // Opposite points (or a doubled Weierstrass
                        // point): a full fiber, principal.
                        self.identity()
                    } else {
                        // y1 = y2 != 0: tangent lift at a doubled point;
                        // b = y1 + f'(x1)/(2 y1) (x - x1) matches y to
                        // second order.
                        let lin = Poly::new(alloc::vec![x1.neg(), one.clone()]);
                        let a = lin.mul(&lin);
                        let slope = self
                            .fprime
                            .eval(x1)
                            .div(&y1.add(y1))
                            .expect("tangent at a point with y != 0");
                        let b = Poly::new(alloc::vec![y1.sub(&slope.mul(x1)), slope]);
                        MumfordDivisor {
                            a,
                            b,
                            n_plus: 0,
                            n_minus: 0,
                        }
                    }
                } else {
                    let a = Poly::new(alloc::vec![x1.neg(), one.clone()])
                        .mul(&Poly::new(alloc::vec![x2.neg(), one.clone()]));
                    let slope = y2.sub(y1).div(&x2.sub(x1)).unwrap();
                    let b = Poly::new(alloc::vec![y1.sub(&slope.mul(x1)), slope]);
                    MumfordDivisor {
                        a,
                        b,
                        n_plus: 0,
                        n_minus: 0,
                    }
                }
            }
        };
        debug_assert!(self.is_valid(&div));
        Ok(div)
    }

    fn contains_point(&self, p: &CurvePoint<F>) -> bool {
        match p {
            CurvePoint::Affine(x, y) => y.mul(y) == self.f.eval(x),
            CurvePoint::Infinity(_) => true, // sqrt_lc exists by construction
        }
    }

    /// Cantor composition of the affine ideals; infinity counts add.
    /// Returns (U, V, n+, n-) with V reduced mod U.
    fn compose(
        &self,
        d1: &MumfordDivisor<F>,
        d2: &MumfordDivisor<F>,
    ) -> (Poly<F>, Poly<F>, i64, i64) {
        let (g0, e1, e2) = d1.a.xgcd(&d2.a);
        let vsum = d1.b.add(&d2.b);
        let (h, c1, c2) = g0.xgcd(&vsum);
        let u = d1.a.mul(&d2.a).exact_div(&h.mul(&h));
        let cross = e1.mul(&d1.a).mul(&d2.b).add(&e2.mul(&d2.a).mul(&d1.b));
        let num = c1.mul(&cross).add(&c2.mul(&d1.b.mul(&d2.b).add(&self.f)));
        let v = num.exact_div(&h).rem(&u).unwrap();
        (
            u,
            v,
            (d1.n_plus + d2.n_plus) as i64,
            (d1.n_minus + d2.n_minus) as i64,
        )
    }

    /// Reduce a composed state to the canonical weight-2 (or identity)
    /// form. One branch-matched reduction step plus cancellation of
    /// `inf+ + inf-` pairs always suffices from composed weight <= 4.
    fn reduce(&self, mut u: Poly<F>, mut v: Poly<F>, mut np: i64, mut nm: i64) -> MumfordDivisor<F> {
        let mut guard = 0;
        loop {
            // Cancel balanced infinity pairs against the base divisor.
            let k = np.min(nm);
            np -= k;
            nm -= k;
            let m = u.degree().expect("u is monic, never zero") as i64;
            let w = m + np + nm;
            if w <= 2 {
                break;
            }
            guard += 1;
            assert!(guard <= 4, "reduction failed to terminate");
            let vt = if m == 4 {
                v.clone()
            } else {
                // Re-lift v to degree 3 matching the branch expansion on
                // the heavier side: vt = v + u * quo(H - v, u) agrees
                // with H from x^3 down to x^deg(u).
                let h = if np >= nm {
                    self.hplus.clone()
                } else {
                    self.hplus.neg()
                };
                let q = h.sub(&v).divmod(&u).unwrap().0;
                v.add(&u.mul(&q))
            };
            let fv2 = self.f.sub(&vt.mul(&vt));
            assert!(!fv2.is_zero(), "f cannot be a square");
            let unew = fv2.exact_div(&u).monic();
            // div(y - vt) = A + A' + (k-3) inf+ - 3 inf- when vt matches
            // the plus branch to order k (mirrored for minus); k = 0 when
            // the cubic coefficient matches neither branch root.
            let k_match = 6 - fv2.deg_or_neg() as i64;
            let cubic = vt.coeff_or_zero(3, &self.sqrt_lc);
            if k_match >= 1 && cubic == self.sqrt_lc {
                np += 3 - k_match;
                nm += 3;
            } else if k_match >= 1 && cubic == self.sqrt_lc.neg() {
                np += 3;
                nm += 3 - k_match;
            } else {
                np += 3;
                nm += 3;
            }
            v = vt.neg().rem(&unew).unwrap();
            u = unew;
        }
        debug_assert!(np >= 0 && nm >= 0 && np.min(nm) == 0);
        let div = MumfordDivisor {
            a: u,
            b: v,
            n_plus: np as u32,
            n_minus: nm as u32,
        };
        debug_assert!(self.is_valid(&div));
        div
    }

    pub fn add(&self, d1: &MumfordDivisor<F>, d2: &MumfordDivisor<F>) -> MumfordDivisor<F> {
        if d1.is_identity() {
            return d2.clone();
        }
        if d2.is_identity() {
            return d1.clone();
        }
        let (u, v, np, nm) = self.compose(d1, d2);
        self.reduce(u, v, np, nm)
    }

    /// Class inverse: the hyperelliptic involution negates b and swaps
    /// the infinity branches.
    pub fn neg(&self, d: &MumfordDivisor<F>) -> MumfordDivisor<F> {
        MumfordDivisor {
            a: d.a.clone(),
            b: d.b.neg(),
            n_plus: d.n_minus,
            n_minus: d.n_plus,
        }
    }

    pub fn sub(&self, d1: &MumfordDivisor<F>, d2: &MumfordDivisor<F>) -> MumfordDivisor<F> {
        self.add(d1, &self.neg(d2))
    }

    /// n-fold sum by double-and-add; negative n through the involution.
    pub fn scalar_mul(&self, n: i128, d: &MumfordDivisor<F>) -> MumfordDivisor<F> {
        if n == 0 {
            return self.identity();
        }
        let (mut e, base) = if n < 0 {
            (n.unsigned_abs(), self.neg(d))
        } else {
            (n as u128, d.clone())
        };
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.add(&sq, &sq);
            }
        }
        acc
    }

    /// Least n >= 1 with n*D = 0, searched through the divisors of
    /// `bound` (in intended use `bound` is a group-order multiple, so the
    /// order divides it).
    pub fn element_order(&self, d: &MumfordDivisor<F>, bound: u128) -> Result<u128, JacobianError> {
        for n in divisors_u128(bound) {
            if self.scalar_mul(n as i128, d).is_identity() {
                return Ok(n);
            }
        }
        Err(JacobianError::OrderExceedsBound)
    }

    /// The full subgroup generated by `gens` (identity included),
    /// deduplicated by canonical form and sorted, provided it has at most
    /// `bound` elements.
    pub fn subgroup_closure(
        &self,
        gens: &[MumfordDivisor<F>],
        bound: usize,
    ) -> Result<Vec<MumfordDivisor<F>>, JacobianError> {
        let mut seen: BTreeSet<MumfordDivisor<F>> = BTreeSet::new();
        seen.insert(self.identity());
        let mut frontier: Vec<MumfordDivisor<F>> = alloc::vec![self.identity()];
        while let Some(e) = frontier.pop() {
            for g in gens {
                let s = self.add(&e, g);
                if seen.insert(s.clone()) {
                    if seen.len() > bound {
                        return Err(JacobianError::ClosureExceedsBound);
                    }
                    frontier.push(s);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Invariant-factor decomposition of a finite abelian group given by
    /// its element list. Orders of all elements determine the exponent;
    /// the full decomposition is the unique divisor chain matching the
    /// order statistics `#{x : d*x = 0} = prod_i gcd(n_i, d)`.
    pub fn group_structure(
        &self,
        elements: &[MumfordDivisor<F>],
    ) -> Result<GroupStructure, JacobianError> {
        let n = elements.len() as u128;
        let set: BTreeSet<&MumfordDivisor<F>> = elements.iter().collect();
        if !set.contains(&self.identity()) || set.len() != elements.len() {
            return Err(JacobianError::NotClosed);
        }
        if n == 1 {
            return Ok(GroupStructure { factors: Vec::new() });
        }
        // Addition table indices double as an order oracle: walking
        // k -> table[k][i] reaches the identity in ord(i) steps.
        let index: BTreeMap<&MumfordDivisor<F>, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut table = alloc::vec![alloc::vec![0usize; elements.len()]; elements.len()];
        for (i, d1) in elements.iter().enumerate() {
            for (j, d2) in elements.iter().enumerate().skip(i) {
                let s = self.add(d1, d2);
                let k = *index.get(&s).ok_or(JacobianError::NotClosed)?;
                table[i][j] = k;
                table[j][i] = k;
            }
        }
        let id = *index.get(&self.identity()).ok_or(JacobianError::NotClosed)?;
        let mut orders = Vec::with_capacity(elements.len());
        for i in 0..elements.len() {
            let mut k = i;
            let mut ord = 1u128;
            while k != id {
                k = table[k][i];
                ord += 1;
                if ord > n {
                    return Err(JacobianError::NotClosed);
                }
            }
            orders.push(ord);
        }
        let exponent = orders.iter().fold(1u128, |acc, &o| acc / gcd_u128(acc, o) * o);
        // Count, for each divisor dd of the exponent, the elements killed
        // by dd.
        let exp_divs = divisors_u128(exponent);
        let killed: Vec<(u128, u128)> = exp_divs
            .iter()
            .map(|&dd| (dd, orders.iter().filter(|&&o| dd % o == 0).count() as u128))
            .collect();
        let mut matches: Vec<Vec<u128>> = Vec::new();
        let mut chains = Vec::new();
        invariant_chains(n / exponent, exponent, &mut Vec::new(), &mut chains);
        for tail in chains {
            let mut cand = tail.clone();
            cand.push(exponent);
            let ok = killed.iter().all(|&(dd, cnt)| {
                let predicted: u128 = cand.iter().map(|&ni| gcd_u128(ni, dd)).product();
                predicted == cnt
            });
            if ok {
                matches.push(cand);
            }
        }
        assert_eq!(
            matches.len(),
            1,
            "order statistics determine a unique abelian group"
        );
        Ok(GroupStructure {
            factors: matches.pop().unwrap(),
        })
    }

    /// MAGMA-style printed triple `(a, b, d)` with the infinity part
    /// folded into a degree-3 b.
    pub fn triple(&self, d: &MumfordDivisor<F>) -> (Poly<F>, Poly<F>, u32) {
        let n_inf = d.n_plus + d.n_minus;
        if n_inf == 0 {
            return (d.a.clone(), d.b.clone(), d.weight());
        }
        let h = if d.n_plus > 0 {
            self.hplus.clone()
        } else {
            self.hplus.neg()
        };
        // Keep the top n_inf coefficients of the branch polynomial
        // (degrees 3, 2, ... down to 4 - n_inf), then interpolate the
        // affine part below them.
        let zero = self.sqrt_lc.zero_like();
        let mut top_coeffs = alloc::vec![zero; 4];
        for j in (4 - n_inf as usize)..4 {
            top_coeffs[j] = h.coeff_or_zero(j, &self.sqrt_lc);
        }
        let top = Poly::new(top_coeffs);
        let corr = d.b.sub(&top).rem(&d.a).unwrap();
        (d.a.clone(), top.add(&corr), d.weight())
    }

    /// `(a, b, d)` rendered like the published element lists.
    pub fn triple_string(&self, d: &MumfordDivisor<F>) -> String {
        let (a, b, w) = self.triple(d);
        alloc::format!("({}, {}, {})", a, b, w)
    }
}

/// Invariant factors n_1 | n_2 | ... | n_k with order = product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    factors: Vec<u128>,
}

impl GroupStructure {
    pub fn invariant_factors(&self) -> &[u128] {
        &self.factors
    }

    pub fn order(&self) -> u128 {
        self.factors.iter().product()
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        let mut first = true;
        for n in &self.factors {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z{}", n)?;
            first = false;
        }
        Ok(())
    }
}

/// Nondecreasing divisor chains with the given product, every entry > 1
/// dividing `cap`; recursion from the largest factor downwards.
fn invariant_chains(product: u128, cap: u128, prefix: &mut Vec<u128>, out: &mut Vec<Vec<u128>>) {
    if product == 1 {
        let mut chain = prefix.clone();
        chain.reverse();
        out.push(chain);
        return;
    }
    for d in divisors_u128(gcd_u128(product, cap)) {
        if d == 1 {
            continue;
        }
        prefix.push(d);
        invariant_chains(product / d, d, prefix, out);
        prefix.pop();
    }
}

fn rational_mod_p(r: &Rational, p: u64) -> Result<u64, JacobianError> {
    let pbig = BigInt::from(p);
    let den = r.denom().mod_floor(&pbig);
    if den.is_zero() {
        return Err(JacobianError::DenominatorDivisibleByP);
    }
    let num = r.numer().mod_floor(&pbig);
    let num = num.to_u64().expect("reduced below p");
    let den = den.to_u64().expect("reduced below p");
    // num * den^(p-2) mod p
    let mut inv = 1u64;
    let mut base = den % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = ((inv as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    Ok(((num as u128 * inv as u128) % p as u128) as u64)
}

fn quadext_mod_p(x: &QuadExt, target: &Fp2Desc) -> Result<FqElem, JacobianError> {
    if x.field().d() != target.d() {
        return Err(JacobianError::NotInert);
    }
    let desc = FqDesc::Fp2(*target);
    let a = rational_mod_p(x.rational_part(), target.p())?;
    let b = rational_mod_p(x.surd_part(), target.p())?;
    Ok(desc.elem(a, b))
}

/// Coefficient-wise reduction of a divisor over `Q(sqrt(d))` into
/// `F_p(sqrt(d))` at an inert prime p of good reduction. The prime-to-p
/// part of the torsion injects under this map, so orders of elements of
/// order coprime to p are preserved.
///
/// Infinity multiplicities carry over unchanged; the branch labels match
/// because both sides use the canonical square root of lc(f), and for the
/// curves handled here lc(f) = 1, whose canonical root is 1 in every
/// field.
pub fn reduce_divisor(
    div: &MumfordDivisor<QuadExt>,
    curve: &Genus2Curve,
    target: &Fp2Desc,
) -> Result<MumfordDivisor<FqElem>, JacobianError> {
    if curve.bad_primes().contains(&target.p()) {
        return Err(JacobianError::BadReduction);
    }
    let desc = FqDesc::Fp2(*target);
    let map_poly = |p: &Poly<QuadExt>| -> Result<Poly<FqElem>, JacobianError> {
        let mut coeffs = Vec::with_capacity(p.coeffs().len());
        for c in p.coeffs() {
            coeffs.push(quadext_mod_p(c, target)?);
        }
        Ok(Poly::new(coeffs))
    };
    let a = map_poly(&div.a)?;
    let b = map_poly(&div.b)?;
    if a.deg_or_neg() != div.a.deg_or_neg() {
        // Monic a cannot actually drop degree; a defensive check.
        return Err(JacobianError::BadReduction);
    }
    let out = MumfordDivisor {
        a,
        b,
        n_plus: div.n_plus,
        n_minus: div.n_minus,
    };
    let jac = Jacobian::new(curve, &desc.one())?;
    if !jac.is_valid(&out) {
        return Err(JacobianError::BadReduction);
    }
    Ok(out)
}

/// Every reduced divisor on `J(F_q)` by direct enumeration of canonical
/// forms: all valid Mumford pairs of degree <= 2 with every admissible
/// infinity decoration. Exhaustive oracle for group orders on small
/// fields.
pub fn enumerate_jacobian(
    curve: &Genus2Curve,
    desc: &FqDesc,
) -> Result<Vec<MumfordDivisor<FqElem>>, JacobianError> {
    if desc.size() > 4096 {
        return Err(JacobianError::ScanBoundExceeded);
    }
    let one = desc.one();
    let jac = Jacobian::new(curve, &one)?;
    let f = jac.sextic().clone();
    let mut out = Vec::new();
    out.push(jac.identity());
    // Weight 2, purely at infinity.
    for (np, nm) in [(2, 0), (0, 2)] {
        out.push(MumfordDivisor {
            a: Poly::constant(one.clone()),
            b: Poly::zero(),
            n_plus: np,
            n_minus: nm,
        });
    }
    // Weight 2, one affine point and one infinite point.
    for x0 in desc.elements() {
        let fx = f.eval(&x0);
        for y0 in desc.elements() {
            if y0.mul(&y0) == fx {
                for (np, nm) in [(1, 0), (0, 1)] {
                    out.push(MumfordDivisor {
                        a: Poly::new(alloc::vec![x0.neg(), one.clone()]),
                        b: Poly::constant(y0),
                        n_plus: np,
                        n_minus: nm,
                    });
                }
            }
        }
    }
    // Weight 2, affine pairs: a = x^2 + a1 x + a0, b = b1 x + b0 with
    // a | b^2 - f. Using x^2 = -a1 x - a0 mod a:
    // b^2 mod a = (2 b1 b0 - b1^2 a1) x + (b0^2 - b1^2 a0).
    for a1 in desc.elements() {
        for a0 in desc.elements() {
            let a = Poly::new(alloc::vec![a0, a1, one.clone()]);
            let fa = f.rem(&a).unwrap();
            let f1 = fa.coeff_or_zero(1, &one);
            let f0 = fa.coeff_or_zero(0, &one);
            for b1 in desc.elements() {
                let b1sq = b1.mul(&b1);
                let lin = b1.add(&b1).mul(&one); // 2 b1
                for b0 in desc.elements() {
                    let c1 = lin.mul(&b0).sub(&b1sq.mul(&a1));
                    if c1 != f1 {
                        continue;
                    }
                    let c0 = b0.mul(&b0).sub(&b1sq.mul(&a0));
                    if c0 == f0 {
                        out.push(MumfordDivisor {
                            a: a.clone(),
                            b: Poly::new(alloc::vec![b0, b1]),
                            n_plus: 0,
                            n_minus: 0,
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    debug_assert!(out.iter().all(|d| jac.is_valid(d)));
    Ok(out)
}
