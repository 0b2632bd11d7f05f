//! Exact arithmetic on Jacobians of genus-2 curves given by an even-degree
//! model `y^2 = f(x)`, `deg f = 6`, together with the machinery needed to
//! pin down their torsion over the quadratic fields `Q(sqrt(d))`:
//!
//! * [`exactfield`]: arbitrary-precision rationals and the quadratic
//!   extensions `Q(sqrt(d))` used as exact base fields.
//! * [`finfield`]: prime fields `F_p` and quadratic extensions
//!   `F_p(sqrt(d))`, the reduction targets at inert primes.
//! * [`poly`]: dense univariate polynomials over any of those fields:
//!   division, gcd, resultants, small-degree root finding.
//! * [`curve`]: the sextic model, its points (including the two points at
//!   infinity), bad primes, quadratic twists.
//! * [`zeta`]: point counting over `F_q`, L-polynomials, Jacobian group
//!   orders, and the torsion bound by gcd over inert witness primes.
//! * [`jacobian`]: Mumford representation and Cantor composition/reduction
//!   balanced at the two infinite points, subgroup closure, abelian group
//!   structure, reduction of divisors mod p.
//! * [`pipeline`]: end-to-end verification instances: torsion bound,
//!   group enumeration, point extraction and side-condition obstruction.
//!
//! The crate is `no_std` (requires `alloc`); all values are immutable and
//! all operations are pure, so everything can be shared across threads.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod curve;
pub mod exactfield;
pub mod field;
pub mod finfield;
mod intops;
pub mod jacobian;
pub mod pipeline;
pub mod poly;
pub mod zeta;

pub use curve::{CurvePoint, Genus2Curve, Sign};
pub use exactfield::{QuadExt, QuadFieldDesc, Rational};
pub use field::Field;
pub use finfield::{Fp2Desc, FpDesc, FqDesc, FqElem};

pub use poly::Poly;

