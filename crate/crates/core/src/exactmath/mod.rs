//! Exact arithmetic: unbounded integers and rationals, prime fields and their
//! quadratic extensions, and univariate polynomials over 𝔽_p.

mod field;
mod integer;
mod poly;
mod rational;

pub use field::{FieldElement, GaloisField};
pub use integer::{gcd_u64, is_prime, mod_pow, vp, vp_u64};
pub use poly::{as_reduce, FpPolynomial};
pub use rational::{format_rational, parse_rational, rat, Rational};
