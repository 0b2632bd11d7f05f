//! Small-integer helpers shared by the field and counting modules.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

pub(crate) fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Trial-division primality test, exact for all u64 inputs that matter here
/// (witness primes and scan bounds stay far below 10^12).
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// d is squarefree iff no prime square divides it. Sign is ignored.
pub(crate) fn is_squarefree_i64(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let mut n = d.unsigned_abs();
    let mut k = 2u64;
    while k.saturating_mul(k) <= n {
        let kk = k * k;
        if n % kk == 0 {
            return false;
        }
        while n % k == 0 {
            n /= k;
        }
        k += 1;
    }
    true
}

/// Factor n by trial division. Complete for n < 10^12 within the prime
/// budget used by the curves here; any oversized leftover cofactor is
/// reported as a single (prime) factor.
pub(crate) fn factor_u128(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let push = |p: u128, e: u32, out: &mut Vec<(u128, u32)>| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e = 0;
    while n % 2 == 0 {
        n /= 2;
        e += 1;
    }
    push(2, e, &mut out);
    let mut p = 3u128;
    while p * p <= n && p < 2_000_000 {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        push(p, e, &mut out);
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// "2^4 * 3^2 * 7 * 13" style rendering; "1" for n <= 1.
pub(crate) fn factored_string(n: u128) -> String {
    let fs = factor_u128(n);
    if fs.is_empty() {
        let mut s = String::new();
        let _ = write!(s, "{}", n.max(1));
        return s;
    }
    let mut s = String::new();
    for (i, (p, e)) in fs.iter().enumerate() {
        if i > 0 {
            s.push_str(" * ");
        }
        if *e == 1 {
            let _ = write!(s, "{}", p);
        } else {
            let _ = write!(s, "{}^{}", p, e);
        }
    }
    s
}

/// All divisors of n in increasing order.
pub(crate) fn divisors_u128(n: u128) -> Vec<u128> {
    let fs = factor_u128(n);
    let mut divs = alloc::vec![1u128];
    for (p, e) in fs {
        let base = divs.clone();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p;
            for d in &base {
                divs.push(d * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}
