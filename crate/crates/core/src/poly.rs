//! Dense univariate polynomials over any [`Field`], constant term first.
//!
//! Everything here is exact: Euclidean division, monic gcd / extended gcd,
//! the Sylvester-matrix resultant and discriminant, and root finding
//! restricted to what the genus-2 machinery needs (degree <= 2 exactly over
//! `Q(sqrt(d))`, exhaustive scan over small `F_q`).

use alloc::vec::Vec;
use core::fmt;

use crate::exactfield::{quad_sqrt, QuadExt};
use crate::field::{CoeffDisplay, Field};
use crate::finfield::FqElem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyError {
    DivisionByZeroPoly,
    /// Root finding over exact fields only handles degree 1 and 2.
    DegreeOutOfRange,
    /// Exhaustive scans are capped at 10^6 field elements.
    ScanBoundExceeded,
}

impl PolyError {
    fn message(&self) -> &'static str {
        match self {
            PolyError::DivisionByZeroPoly => "polynomial division by zero",
            PolyError::DegreeOutOfRange => "exact root finding handles degree 1 and 2 only",
            PolyError::ScanBoundExceeded => "field too large for an exhaustive scan",
        }
    }
}

/// Dense polynomial; invariant: no trailing zero coefficients, so the zero
/// polynomial is the empty list and `degree()` is `None` for it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(alloc::vec![c])
    }

    /// c0 + c1 x + ... from small integers, in the field of `like`.
    pub fn from_i64s(like: &F, cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| like.from_i64_like(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counting as "very negative";
    /// convenient for degree comparisons.
    pub fn deg_or_neg(&self) -> isize {
        self.degree().map_or(-1, |d| d as isize)
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    /// Coefficient of x^i as an owned value, zero when absent.
    pub fn coeff_or_zero(&self, i: usize, like: &F) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| like.zero_like())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = alloc::vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, k: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    /// Euclidean division: f = q*g + r with deg r < deg g.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self), PolyError> {
        let gd = g.degree().ok_or(PolyError::DivisionByZeroPoly)?;
        let glc_inv = g.lc().unwrap().inv().expect("nonzero leading coefficient");
        let mut r = self.clone();
        let mut q_coeffs: Vec<F> = Vec::new();
        while let Some(rd) = r.degree() {
            if rd < gd {
                break;
            }
            let shift = rd - gd;
            let factor = r.lc().unwrap().mul(&glc_inv);
            if q_coeffs.len() < shift + 1 {
                q_coeffs.resize(shift + 1, factor.zero_like());
            }
            q_coeffs[shift] = q_coeffs[shift].add(&factor);
            // r -= factor * x^shift * g
            let mut sub = alloc::vec![factor.zero_like(); shift];
            sub.extend(g.coeffs.iter().map(|c| c.mul(&factor)));
            r = r.sub(&Poly::new(sub));
        }
        Ok((Poly::new(q_coeffs), r))
    }

    /// Division known to be exact; panics if a remainder appears (that
    /// would be a broken invariant in the Cantor arithmetic, not an input
    /// error).
    pub fn exact_div(&self, g: &Self) -> Self {
        let (q, r) = self.divmod(g).expect("exact_div by zero");
        assert!(r.is_zero(), "exact_div left a remainder");
        q
    }

    pub fn rem(&self, g: &Self) -> Result<Self, PolyError> {
        Ok(self.divmod(g)?.1)
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Poly::zero(),
            Some(l) => {
                if l.is_one() {
                    self.clone()
                } else {
                    self.scale(&l.inv().unwrap())
                }
            }
        }
    }

    /// Monic gcd by Euclid's algorithm; gcd(0, 0) is 0.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns monic g and (s, t) with s*self + t*rhs = g.
    pub fn xgcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let (zero, one) = match r0.coeffs.first().or_else(|| r1.coeffs.first()) {
            Some(c) => (Poly::zero(), Poly::constant(c.one_like())),
            None => return (Poly::zero(), Poly::zero(), Poly::zero()),
        };
        let mut s0 = one.clone();
        let mut s1 = zero.clone();
        let mut t0 = zero;
        let mut t1 = one;
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).unwrap();
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(l) = r0.lc() {
            if !l.is_one() {
                let li = l.inv().unwrap();
                r0 = r0.scale(&li);
                s0 = s0.scale(&li);
                t0 = t0.scale(&li);
            }
        }
        (r0, s0, t0)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_i64_like(i as i64)))
            .collect();
        Poly::new(out)
    }

    /// x^k * self.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = alloc::vec![zero; k];
        out.extend(self.coeffs.iter().cloned());
        Poly { coeffs: out }
    }
}

/// Resultant of f and g via the determinant of the Sylvester matrix,
/// computed by exact Gaussian elimination.
pub fn resultant<F: Field>(f: &Poly<F>, g: &Poly<F>) -> F {
    let m = f.degree().expect("resultant of the zero polynomial");
    let n = g.degree().expect("resultant of the zero polynomial");
    let like = f.lc().unwrap();
    if n == 0 {
        return g.lc().unwrap().pow_u64(m as u64);
    }
    if m == 0 {
        return f.lc().unwrap().pow_u64(n as u64);
    }
    let size = m + n;
    let zero = like.zero_like();
    let mut mat = alloc::vec![alloc::vec![zero.clone(); size]; size];
    // n rows of f's coefficients (highest first), then m rows of g's.
    for row in 0..n {
        for (k, c) in f.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    // Gaussian elimination tracking the determinant.
    let mut det = like.one_like();
    for col in 0..size {
        let pivot_row = match (col..size).find(|&r| !mat[r][col].is_zero()) {
            Some(r) => r,
            None => return zero,
        };
        if pivot_row != col {
            mat.swap(pivot_row, col);
            det = det.neg();
        }
        let pivot = mat[col][col].clone();
        det = det.mul(&pivot);
        let pinv = pivot.inv().unwrap();
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].mul(&pinv);
            for c in col..size {
                let delta = factor.mul(&mat[col][c]);
                mat[r][c] = mat[r][c].sub(&delta);
            }
        }
    }
    det
}

/// disc(f) = (-1)^(n(n-1)/2) * res(f, f') / lc(f).
pub fn discriminant<F: Field>(f: &Poly<F>) -> F {
    let n = f.degree().expect("discriminant needs deg >= 1");
    assert!(n >= 1);
    let fp = f.derivative();
    if fp.is_zero() {
        return f.lc().unwrap().zero_like();
    }
    let res = resultant(f, &fp);
    let sign_flip = (n * (n - 1) / 2) % 2 == 1;
    let r = res.div(f.lc().unwrap()).unwrap();
    if sign_flip {
        r.neg()
    } else {
        r
    }
}

/// All roots of f in `Q(sqrt(d))` with multiplicities, for deg f in {1, 2}.
pub fn roots_deg_le2_exact(f: &Poly<QuadExt>) -> Result<Vec<(QuadExt, usize)>, PolyError> {
    match f.degree() {
        Some(1) => {
            let c0 = f.coeff(0).cloned().unwrap_or_else(|| f.lc().unwrap().zero_like());
            let c1 = f.lc().unwrap();
            Ok(alloc::vec![(c0.neg().div(c1).unwrap(), 1)])
        }
        Some(2) => {
            let like = f.lc().unwrap().clone();
            let c0 = f.coeff_or_zero(0, &like);
            let c1 = f.coeff_or_zero(1, &like);
            let c2 = like.clone();
            let four = like.from_i64_like(4);
            let two = like.from_i64_like(2);
            let disc = c1.mul(&c1).sub(&four.mul(&c2).mul(&c0));
            match quad_sqrt(&disc) {
                None => Ok(Vec::new()),
                Some(s) => {
                    let denom = two.mul(&c2);
                    if s.is_zero() {
                        let r = c1.neg().div(&denom).unwrap();
                        Ok(alloc::vec![(r, 2)])
                    } else {
                        let r1 = c1.neg().add(&s).div(&denom).unwrap();
                        let r2 = c1.neg().sub(&s).div(&denom).unwrap();
                        let mut v = alloc::vec![(r1, 1), (r2, 1)];
                        v.sort();
                        Ok(v)
                    }
                }
            }
        }
        _ => Err(PolyError::DegreeOutOfRange),
    }
}

/// All roots of f in F_q by exhaustive evaluation; q capped at 10^6.
pub fn roots_brute_fq(f: &Poly<FqElem>) -> Result<Vec<FqElem>, PolyError> {
    let like = match f.coeffs().first() {
        Some(c) => *c,
        None => return Ok(Vec::new()),
    };
    let desc = like.desc();
    if desc.size() > 1_000_000 {
        return Err(PolyError::ScanBoundExceeded);
    }
    Ok(desc.elements().filter(|x| f.eval(x).is_zero()).collect())
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match c.display_signed() {
                CoeffDisplay::Neg(m) => (true, m),
                CoeffDisplay::Pos(m) => (false, m),
                CoeffDisplay::Wrapped(m) => (false, alloc::format!("({})", m)),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_unit_mag = mag == "1";
            match i {
                0 => write!(f, "{}", mag)?,
                1 => {
                    if is_unit_mag {
                        write!(f, "x")?
                    } else {
                        write!(f, "{}*x", mag)?
                    }
                }
                _ => {
                    if is_unit_mag {
                        write!(f, "x^{}", i)?
                    } else {
                        write!(f, "{}*x^{}", mag, i)?
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rational_int, QuadFieldDesc, Rational};
    use crate::finfield::FqDesc;
    use proptest::prelude::*;

    fn qpoly(cs: &[i64]) -> Poly<Rational> {
        Poly::from_i64s(&rational_int(0), cs)
    }

    /// f1 from the verification instances: x^6 - 2x^5 + x^4 - 2x^3 + 6x^2 - 4x + 1.
    fn f1() -> Poly<Rational> {
        qpoly(&[1, -4, 6, -2, 1, -2, 1])
    }

    #[test]
    fn divmod_factorization() {
        let f = qpoly(&[-1, 0, 1]); // x^2 - 1
        let g = qpoly(&[-1, 1]); // x - 1
        let (q, r) = f.divmod(&g).unwrap();
        assert_eq!(q, qpoly(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divmod_f1_by_x_squared() {
        let (q, r) = f1().divmod(&qpoly(&[0, 0, 1])).unwrap();
        assert_eq!(q, qpoly(&[6, -2, 1, -2, 1]));
        assert_eq!(r, qpoly(&[1, -4]));
        assert_eq!(q.degree(), Some(4));
    }

    #[test]
    fn divmod_constant_by_larger() {
        let c = qpoly(&[7]);
        let g = qpoly(&[1, 2, 3]);
        let (q, r) = c.divmod(&g).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, c);
    }

    #[test]
    fn divmod_by_zero_rejected() {
        assert_eq!(f1().divmod(&Poly::zero()), Err(PolyError::DivisionByZeroPoly));
    }

    #[test]
    fn gcd_common_root() {
        let f = qpoly(&[-1, 0, 1]); // (x-1)(x+1)
        let g = qpoly(&[1, -2, 1]); // (x-1)^2
        assert_eq!(f.gcd(&g), qpoly(&[-1, 1]));
    }

    #[test]
    fn gcd_f1_with_derivative_is_one() {
        // f1 is squarefree over Q.
        assert_eq!(f1().gcd(&f1().derivative()), qpoly(&[1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_normalization() {
        let g = qpoly(&[2, 4]);
        assert_eq!(Poly::<Rational>::zero().gcd(&g), g.monic());
        assert_eq!(g.monic().lc().unwrap(), &rational_int(1));
    }

    #[test]
    fn xgcd_bezout_identity() {
        let f = qpoly(&[-1, 0, 1]);
        let g = qpoly(&[1, -2, 1]);
        let (d, s, t) = f.xgcd(&g);
        assert_eq!(s.mul(&f).add(&t.mul(&g)), d);
        assert_eq!(d, f.gcd(&g));
    }

    #[test]
    fn discriminant_quadratic() {
        // x^2 + 1 -> -4, matching b^2 - 4ac.
        assert_eq!(discriminant(&qpoly(&[1, 0, 1])), rational_int(-4));
        // x^2 - 5x + 6 -> 1
        assert_eq!(discriminant(&qpoly(&[6, -5, 1])), rational_int(1));
    }

    /// Independent resultant oracle: Euclidean remainder sequence with the
    /// standard degree/leading-coefficient corrections.
    fn resultant_euclid(f: &Poly<Rational>, g: &Poly<Rational>) -> Rational {
        let zero = rational_int(0);
        let (m, n) = (f.deg_or_neg(), g.deg_or_neg());
        if m < 0 || n < 0 {
            return zero;
        }
        if n == 0 {
            return g.lc().unwrap().pow_u64(m as u64);
        }
        let r = f.rem(g).unwrap();
        if r.is_zero() {
            return zero;
        }
        let k = r.deg_or_neg();
        // res(f, g) = (-1)^(mn) lc(g)^(m - k) res(g, r)
        let sign = if (m * n) % 2 == 1 { -1 } else { 1 };
        let scale = g.lc().unwrap().pow_u64((m - k) as u64);
        rational_int(sign) * scale * resultant_euclid(g, &r)
    }

    #[test]
    fn sylvester_matches_euclid_resultant() {
        let cases = [
            (f1(), f1().derivative()),
            (qpoly(&[1, 0, 1]), qpoly(&[0, 2])),
            (qpoly(&[1, 4, 10, 10, 5, 2, 1]), qpoly(&[4, 20, 30, 20, 10, 6])),
            (qpoly(&[-2, 1, 7, 3]), qpoly(&[5, 0, -1, 0, 2])),
        ];
        for (f, g) in cases {
            assert_eq!(resultant(&f, &g), resultant_euclid(&f, &g), "f={} g={}", f, g);
        }
    }

    #[test]
    fn roots_quadratic_over_eisenstein_field() {
        let k = QuadFieldDesc::new(-3).unwrap();
        let f = Poly::from_i64s(&k.one(), &[1, 1, 1]); // x^2 + x + 1
        let roots = roots_deg_le2_exact(&f).unwrap();
        let omega = crate::exactfield::quad(k, -1, 2, 1, 2);
        let omega_bar = crate::exactfield::quad(k, -1, 2, -1, 2);
        let got: Vec<_> = roots.iter().map(|(r, _)| r.clone()).collect();
        assert!(got.contains(&omega) && got.contains(&omega_bar));
        for (r, _) in &roots {
            assert!(f.eval(r).is_zero());
        }
    }

    #[test]
    fn discriminant_of_product_with_linear_factor() {
        // disc(f * (x - c)) != 0 iff c is not a root of f and disc(f) != 0.
        let cases = [
            (qpoly(&[-1, 0, 1]), 2i64, true),  // (x^2-1)(x-2): all roots simple
            (qpoly(&[-1, 0, 1]), 1i64, false), // c = 1 is a root of x^2 - 1
            (qpoly(&[1, -2, 1]), 3i64, false), // disc(x^2-2x+1) = 0 already
        ];
        for (f, c, expect_nonzero) in cases {
            let lin = qpoly(&[-c, 1]);
            let d = discriminant(&f.mul(&lin));
            assert_eq!(!Field::is_zero(&d), expect_nonzero, "f={} c={}", f, c);
        }
    }

    #[test]
    fn exact_roots_match_small_height_search() {
        // Every root of height <= 20 found by brute force is found by the
        // quadratic formula, and vice versa.
        let k = QuadFieldDesc::new(-3).unwrap();
        let polys = [
            Poly::from_i64s(&k.one(), &[1, 1, 1]),
            Poly::from_i64s(&k.one(), &[1, 2, 1]),
            Poly::from_i64s(&k.one(), &[3, 0, 1]),  // x^2 + 3 = (x - sqrt(-3))(x + sqrt(-3))
            Poly::from_i64s(&k.one(), &[2, 0, 1]),  // x^2 + 2: no roots in Q(sqrt(-3))
            Poly::from_i64s(&k.one(), &[-2, 3, 2]), // (2x - 1)(x + 2)
        ];
        for f in polys {
            let exact: std::collections::BTreeSet<QuadExt> = roots_deg_le2_exact(&f)
                .unwrap()
                .into_iter()
                .map(|(r, _)| r)
                .collect();
            let mut searched = std::collections::BTreeSet::new();
            for w in 1i64..=20 {
                for u in -20i64..=20 {
                    for v in -20i64..=20 {
                        let cand = crate::exactfield::quad(k, u, w, v, w);
                        if f.eval(&cand).is_zero() {
                            searched.insert(cand);
                        }
                    }
                }
            }
            assert_eq!(exact, searched, "f = {}", f);
            for r in &exact {
                assert!(f.eval(r).is_zero());
            }
        }
    }

    #[test]
    fn roots_quadratic_over_gaussian_field_empty() {
        let k = QuadFieldDesc::new(-1).unwrap();
        let f = Poly::from_i64s(&k.one(), &[1, 1, 1]);
        assert!(roots_deg_le2_exact(&f).unwrap().is_empty());
    }

    #[test]
    fn roots_double_root() {
        let k = QuadFieldDesc::new(-1).unwrap();
        let f = Poly::from_i64s(&k.one(), &[0, 0, 1]); // x^2
        assert_eq!(roots_deg_le2_exact(&f).unwrap(), alloc::vec![(k.zero(), 2)]);
    }

    #[test]
    fn roots_degree_out_of_range() {
        let k = QuadFieldDesc::new(-1).unwrap();
        let f = Poly::from_i64s(&k.one(), &[1, 0, 0, 1]);
        assert_eq!(roots_deg_le2_exact(&f), Err(PolyError::DegreeOutOfRange));
        let c = Poly::from_i64s(&k.one(), &[5]);
        assert_eq!(roots_deg_le2_exact(&c), Err(PolyError::DegreeOutOfRange));
    }

    #[test]
    fn brute_roots_over_f5_and_f11() {
        let f5 = FqDesc::prime(5).unwrap();
        let f = Poly::from_i64s(&f5.one(), &[1, 0, 1]); // x^2 + 1
        let mut roots = roots_brute_fq(&f).unwrap();
        roots.sort();
        assert_eq!(roots, alloc::vec![f5.from_i64(2), f5.from_i64(3)]);

        let f11 = FqDesc::prime(11).unwrap();
        let g = Poly::from_i64s(&f11.one(), &[1, 0, 1]);
        assert!(roots_brute_fq(&g).unwrap().is_empty());
    }

    #[test]
    fn brute_roots_f1_mod_3_matches_evaluation_oracle() {
        let f3 = FqDesc::prime(3).unwrap();
        let f = Poly::from_i64s(&f3.one(), &[1, -4, 6, -2, 1, -2, 1]);
        let by_scan = roots_brute_fq(&f).unwrap();
        let by_eval: Vec<_> = f3.elements().filter(|x| f.eval(x).is_zero()).collect();
        assert_eq!(by_scan, by_eval);
        assert!(by_scan.is_empty()); // f1 has no roots mod 3
    }

    #[test]
    fn display_descending_terms() {
        assert_eq!(alloc::format!("{}", qpoly(&[1, -2])), "-2*x + 1");
        assert_eq!(alloc::format!("{}", qpoly(&[0, 0, 1])), "x^2");
        assert_eq!(alloc::format!("{}", qpoly(&[0, -1, 0, 1])), "x^3 - x");
        assert_eq!(alloc::format!("{}", Poly::<Rational>::zero()), "0");
    }

    prop_compose! {
        fn arb_qpoly(max_deg: usize)(cs in prop::collection::vec(-9i64..=9, 0..=max_deg + 1)) -> Poly<Rational> {
            qpoly(&cs)
        }
    }

    proptest! {
        #[test]
        fn divmod_roundtrip_q(f in arb_qpoly(6), g in arb_qpoly(4)) {
            prop_assume!(!g.is_zero());
            let (q, r) = f.divmod(&g).unwrap();
            prop_assert_eq!(q.mul(&g).add(&r), f.clone());
            prop_assert!(r.deg_or_neg() < g.deg_or_neg());
        }

        #[test]
        fn gcd_divides_both(f in arb_qpoly(5), g in arb_qpoly(5)) {
            prop_assume!(!f.is_zero() || !g.is_zero());
            let d = f.gcd(&g);
            prop_assert!(d.lc().unwrap().is_one());
            if !f.is_zero() {
                prop_assert!(f.rem(&d).unwrap().is_zero());
            }
            if !g.is_zero() {
                prop_assert!(g.rem(&d).unwrap().is_zero());
            }
        }

        #[test]
        fn divmod_roundtrip_f11(fc in prop::collection::vec(0i64..=10, 0..=7),
                                gc in prop::collection::vec(0i64..=10, 1..=5)) {
            let f11 = FqDesc::prime(11).unwrap();
            let f = Poly::from_i64s(&f11.one(), &fc);
            let g = Poly::from_i64s(&f11.one(), &gc);
            prop_assume!(!g.is_zero());
            let (q, r) = f.divmod(&g).unwrap();
            prop_assert_eq!(q.mul(&g).add(&r), f);
            prop_assert!(r.deg_or_neg() < g.deg_or_neg());
        }

        #[test]
        fn divmod_roundtrip_qi(fc in prop::collection::vec(-6i64..=6, 0..=6),
                               gc in prop::collection::vec(-6i64..=6, 1..=4)) {
            let k = QuadFieldDesc::new(-1).unwrap();
            let gen = k.gen();
            // Coefficients a + b*i with small a, b: reuse fc for a and its
            // reverse for b.
            let mk = |cs: &[i64]| {
                Poly::new(cs.iter().enumerate().map(|(idx, &a)| {
                    let b = cs[cs.len() - 1 - idx];
                    k.from_i64(a).add(&gen.mul(&k.from_i64(b)))
                }).collect())
            };
            let f = mk(&fc);
            let g = mk(&gc);
            prop_assume!(!g.is_zero());
            let (q, r) = f.divmod(&g).unwrap();
            prop_assert_eq!(q.mul(&g).add(&r), f);
            prop_assert!(r.deg_or_neg() < g.deg_or_neg());
        }
    }
}
