//! Point counting over `F_p` and `F_{p^2}`, the L-polynomial of a genus-2
//! curve, Jacobian group orders, and the torsion bound obtained by taking
//! the gcd of Jacobian orders over inert primes of good reduction.
//!
//! For a genus-2 curve over `F_p` the zeta numerator is
//! `P(T) = 1 + c1*T + c2*T^2 + p*c1*T^3 + p^2*T^4`, and
//! `|J(F_p)| = P(1)`, `|J(F_{p^2})| = P(1) * P(-1)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use crate::curve::{is_inert, Genus2Curve};
use crate::field::Field;
use crate::finfield::{legendre, squares_table, FqDesc, FqElem};
use crate::intops::{factored_string, gcd_u128, is_prime_u64};
use crate::poly::Poly;

/// Exhaustive scans are capped at this many field elements.
pub const SCAN_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaError {
    /// The field characteristic divides the discriminant.
    BadReduction,
    ScanBoundExceeded,
    /// The two counts are arithmetically inconsistent; indicates a
    /// counting bug, not bad input.
    NonIntegralC2,
    PrimeNotInert,
    PrimeNotGood,
    EmptyWitnessList,
    /// Jacobian orders are only defined here over F_p and F_{p^2}.
    UnsupportedExtension,
}

impl fmt::Display for ZetaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ZetaError::BadReduction => "characteristic is a prime of bad reduction",
            ZetaError::ScanBoundExceeded => "field exceeds the exhaustive scan bound",
            ZetaError::NonIntegralC2 => "counts give a non-integral zeta coefficient",
            ZetaError::PrimeNotInert => "witness prime is not inert in the target field",
            ZetaError::PrimeNotGood => "witness prime must be an odd prime of good reduction",
            ZetaError::EmptyWitnessList => "need at least one witness prime",
            ZetaError::UnsupportedExtension => "extension degree must be 1 or 2",
        };
        write!(f, "{}", s)
    }
}

/// Affine point count of `y^2 = f(x)` over the x-range `[lo, hi)` of `F_q`
/// (elements ordered by index), using a precomputed squares table. Each
/// range is pure, so a scan can be partitioned across workers and summed.
pub fn affine_count_in_range(
    f: &Poly<FqElem>,
    desc: &FqDesc,
    table: &[bool],
    lo: u64,
    hi: u64,
) -> u64 {
    let mut n = 0u64;
    for i in lo..hi {
        let x = desc.from_index(i);
        let v = f.eval(&x);
        if v.is_zero() {
            n += 1;
        } else if table[desc.index(&v) as usize] {
            n += 2;
        }
    }
    n
}

/// `#C(F_q)`: affine points plus the two points at infinity when lc(f) is
/// a square in `F_q`.
pub fn count_points(curve: &Genus2Curve, desc: &FqDesc) -> Result<u64, ZetaError> {
    if curve.bad_primes().contains(&desc.p()) {
        return Err(ZetaError::BadReduction);
    }
    let q = desc.size();
    if q > SCAN_BOUND {
        return Err(ZetaError::ScanBoundExceeded);
    }
    let like = desc.one();
    let f = curve.poly_in(&like);
    let table = squares_table(desc);
    let affine = affine_count_in_range(&f, desc, &table, 0, q);
    let lc = like.from_i64_like(curve.leading_coeff());
    let at_infinity = if !lc.is_zero() && table[desc.index(&lc) as usize] {
        2
    } else {
        0
    };
    Ok(affine + at_infinity)
}

/// `P(T) = 1 + c1 T + c2 T^2 + p c1 T^3 + p^2 T^4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LPolynomial {
    p: u64,
    c1: i64,
    c2: i64,
}

impl LPolynomial {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn c1(&self) -> i64 {
        self.c1
    }

    pub fn c2(&self) -> i64 {
        self.c2
    }

    pub fn eval_at_one(&self) -> u128 {
        let p = self.p as i128;
        let v = 1 + self.c1 as i128 + self.c2 as i128 + p * self.c1 as i128 + p * p;
        debug_assert!(v > 0, "Weil bounds force P(1) > 0");
        v as u128
    }

    pub fn eval_at_minus_one(&self) -> u128 {
        let p = self.p as i128;
        let v = 1 - self.c1 as i128 + self.c2 as i128 - p * self.c1 as i128 + p * p;
        debug_assert!(v > 0, "Weil bounds force P(-1) > 0");
        v as u128
    }
}

impl fmt::Display for LPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "1 + ({})T + ({})T^2 + ({})T^3 + ({})T^4",
            self.c1,
            self.c2,
            self.p as i128 * self.c1 as i128,
            (self.p as i128) * (self.p as i128)
        )
    }
}

/// Canonical non-residue used to build `F_{p^2}` when only the count
/// matters (all quadratic extensions of `F_p` are isomorphic): -1 when
/// p = 3 mod 4, else the least positive non-residue.
fn canonical_nonresidue(p: u64) -> i64 {
    if p % 4 == 3 {
        return -1;
    }
    let mut s = 2i64;
    loop {
        if legendre(s, p) == -1 {
            return s;
        }
        s += 1;
    }
}

/// L-polynomial from the counts N1 = #C(F_p), N2 = #C(F_{p^2}):
/// c1 = N1 - (p + 1), c2 = ((p + 1 - N1)^2 - (p^2 + 1 - N2)) / 2.
pub fn l_polynomial(curve: &Genus2Curve, p: u64) -> Result<LPolynomial, ZetaError> {
    let fp = FqDesc::prime(p).map_err(|_| ZetaError::PrimeNotGood)?;
    let n1 = count_points(curve, &fp)? as i128;
    let fp2 = FqDesc::quadratic(p, canonical_nonresidue(p)).expect("nonresidue by construction");
    let n2 = count_points(curve, &fp2)? as i128;
    let p = p as i128;
    let c1 = n1 - (p + 1);
    let t = (p + 1 - n1) * (p + 1 - n1) - (p * p + 1 - n2);
    if t % 2 != 0 {
        return Err(ZetaError::NonIntegralC2);
    }
    Ok(LPolynomial {
        p: p as u64,
        c1: c1 as i64,
        c2: (t / 2) as i64,
    })
}

/// `|J(F_{p^k})|` for k = 1 or 2, derived from the L-polynomial over F_p.
/// The k = 2 order is `P(1) * P(-1)`: the reciprocal roots over `F_{p^2}`
/// are the squares of those over `F_p`, and `prod(1 - a_i^2)` factors as
/// `prod(1 - a_i) * prod(1 + a_i)`.
pub fn jacobian_order(curve: &Genus2Curve, p: u64, ext: u8) -> Result<u128, ZetaError> {
    let lp = l_polynomial(curve, p)?;
    match ext {
        1 => Ok(lp.eval_at_one()),
        2 => Ok(lp.eval_at_one() * lp.eval_at_minus_one()),
        _ => Err(ZetaError::UnsupportedExtension),
    }
}

/// One witness prime's contribution to a torsion bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRecord {
    pub p: u64,
    /// `|J(F_{p^2})|`.
    pub order: u128,
    /// The order with every factor of p removed; only the prime-to-p part
    /// of the torsion injects into `J(F_{p^2})`.
    pub prime_to_p: u128,
}

/// Result of bounding `|J(Q(sqrt(d)))_tors|` by reduction at inert primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionBoundReport {
    pub curve_label: String,
    pub radicand: i64,
    pub witnesses: Vec<WitnessRecord>,
    /// gcd over all witnesses of the prime-to-p parts; the torsion order
    /// divides this.
    pub bound: u128,
}

impl TorsionBoundReport {
    /// Stable machine-readable key/value rendering, one witness per line.
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "report = torsion-bound");
        let _ = writeln!(s, "curve = {}", self.curve_label);
        let _ = writeln!(s, "radicand = {}", self.radicand);
        for w in &self.witnesses {
            let _ = writeln!(
                s,
                "witness = p:{} order:{} factored:{} prime_to_p:{}",
                w.p,
                w.order,
                factored_string(w.order).replace(' ', ""),
                w.prime_to_p
            );
        }
        let _ = writeln!(s, "bound = {}", self.bound);
        s
    }
}

impl fmt::Display for TorsionBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "torsion bound for J({}) over Q(sqrt({})):",
            self.curve_label, self.radicand
        )?;
        for w in &self.witnesses {
            writeln!(
                f,
                "  p = {:<3} |J(F_{{{}^2}})| = {} = {}",
                w.p,
                w.p,
                w.order,
                factored_string(w.order)
            )?;
        }
        write!(f, "  bound = {}", self.bound)
    }
}

/// The torsion of `J(Q(sqrt(d)))` injects, prime-to-p, into `J(F_{p^2})`
/// at every inert prime p of good reduction, so its order divides
/// `gcd_p (|J(F_{p^2})| with the p-part removed)`.
pub fn torsion_bound(
    curve: &Genus2Curve,
    d: i64,
    primes: &[u64],
) -> Result<TorsionBoundReport, ZetaError> {
    if primes.is_empty() {
        return Err(ZetaError::EmptyWitnessList);
    }
    let bad = curve.bad_primes();
    let mut witnesses = Vec::new();
    let mut bound: u128 = 0;
    for &p in primes {
        if p < 3 || !is_prime_u64(p) || bad.contains(&p) {
            return Err(ZetaError::PrimeNotGood);
        }
        if !is_inert(p, d).map_err(|_| ZetaError::PrimeNotInert)? {
            return Err(ZetaError::PrimeNotInert);
        }
        let order = jacobian_order(curve, p, 2)?;
        let mut prime_to_p = order;
        while prime_to_p % (p as u128) == 0 {
            prime_to_p /= p as u128;
        }
        bound = gcd_u128(bound, prime_to_p);
        witnesses.push(WitnessRecord {
            p,
            order,
            prime_to_p,
        });
    }
    Ok(TorsionBoundReport {
        curve_label: String::from(curve.label()),
        radicand: d,
        witnesses,
        bound,
    })
}

/// Factored rendering re-exported for report printers.
pub fn order_factored(n: u128) -> String {
    factored_string(n)
}
