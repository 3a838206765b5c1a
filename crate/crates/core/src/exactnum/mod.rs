//! Exact arithmetic ground layer.
//!
//! Three types, each with a canonical form so that equality is bit-exact:
//!
//! - [`CycQ`]: numbers a + b*t in Q(t), where t is a primitive cube root of
//!   unity (t^2 = -1 - t). Stored as a pair of arbitrary-precision rationals.
//! - [`PolQ`]: polynomials in the indeterminate q with CycQ coefficients,
//!   stored in ascending degree order with a nonzero leading coefficient
//!   (the zero polynomial is the empty vector; its degree is `None`).
//! - [`RatQ`]: reduced rational functions num/den with gcd(num, den) = 1 and
//!   a monic denominator.
//!
//! The canonical string codec prints PolQ terms in strictly descending
//! degree, e.g. `q^3*t`, `q^4 - q^3`, `(1/2)*q^2`, with `t` denoting the
//! cube root of unity and `t^2` its square. The parser accepts the same
//! grammar (plus arbitrary sums/products of atoms).

mod codec;
mod cyc;
mod pol;
mod rat;

pub use codec::parse_pol;
pub use cyc::CycQ;
pub use pol::PolQ;
pub use rat::RatQ;

#[cfg(test)]
mod tests;
