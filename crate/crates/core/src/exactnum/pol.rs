use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;

use super::CycQ;
use crate::{Error, Result};

/// A polynomial in q over Q(t), stored in ascending degree order.
///
/// Canonical form: the coefficient vector is empty for the zero polynomial
/// and otherwise ends in a nonzero coefficient, so equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct PolQ {
    coeffs: Vec<CycQ>,
}

impl PolQ {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn from_coeffs(coeffs: Vec<CycQ>) -> Self {
        let mut p = PolQ { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        PolQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolQ::constant(CycQ::one())
    }

    pub fn constant(c: CycQ) -> Self {
        PolQ::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        PolQ::constant(CycQ::from_int(n))
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        PolQ::monomial(CycQ::one(), 1)
    }

    /// q^k.
    pub fn q_pow(k: usize) -> Self {
        PolQ::monomial(CycQ::one(), k)
    }

    pub fn monomial(c: CycQ, deg: usize) -> Self {
        if c.is_zero() {
            return PolQ::zero();
        }
        let mut coeffs = vec![CycQ::zero(); deg + 1];
        coeffs[deg] = c;
        PolQ { coeffs }
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&CycQ> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> CycQ {
        self.coeffs.get(i).cloned().unwrap_or_else(CycQ::zero)
    }

    pub fn coeffs(&self) -> &[CycQ] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// All coefficients in Q (fixed by conjugation).
    pub fn has_rational_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational())
    }

    pub fn scalar_mul(&self, c: &CycQ) -> Self {
        PolQ::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Coefficient-wise conjugation t -> t^2 (q is treated as real).
    pub fn conj(&self) -> Self {
        PolQ {
            coeffs: self.coeffs.iter().map(CycQ::conj).collect(),
        }
    }

    /// Substitute a Q(t) value for q.
    pub fn eval_cyc(&self, x: &CycQ) -> CycQ {
        let mut acc = CycQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Substitute a rational value for q (the specialization map).
    pub fn eval_rational(&self, q0: &BigRational) -> CycQ {
        self.eval_cyc(&CycQ::from_rational(q0.clone()))
    }

    /// Division with remainder over the field Q(t); `None` if `d` is zero.
    pub fn divrem(&self, d: &PolQ) -> Option<(PolQ, PolQ)> {
        let dd = d.degree()?;
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CycQ::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = &rem[rem.len() - 1] * &lead_inv;
            if !factor.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let t = &factor * dc;
                    rem[k + i] = &rem[k + i] - &t;
                }
                quot[k] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        Some((PolQ::from_coeffs(quot), PolQ::from_coeffs(rem)))
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(a: &PolQ, b: &PolQ) -> PolQ {
        if a.is_zero() {
            return b.make_monic();
        }
        if b.is_zero() {
            return a.make_monic();
        }
        if a.is_constant() || b.is_constant() {
            return PolQ::one();
        }
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.divrem(&y).unwrap();
            x = y;
            y = r;
        }
        x.make_monic()
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn make_monic(&self) -> PolQ {
        match self.leading() {
            None => PolQ::zero(),
            Some(lc) => self.scalar_mul(&lc.inv().unwrap()),
        }
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, d: &PolQ) -> Result<PolQ> {
        let (q, r) = self.divrem(d).ok_or(Error::ZeroDenominator)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonPolynomialTrace(format!("{} / {}", self, d)))
        }
    }
}

impl Add for &PolQ {
    type Output = PolQ;
    fn add(self, rhs: &PolQ) -> PolQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        PolQ::from_coeffs(out)
    }
}

impl Sub for &PolQ {
    type Output = PolQ;
    fn sub(self, rhs: &PolQ) -> PolQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) - &rhs.coeff(i));
        }
        PolQ::from_coeffs(out)
    }
}

impl Mul for &PolQ {
    type Output = PolQ;
    fn mul(self, rhs: &PolQ) -> PolQ {
        if self.is_zero() || rhs.is_zero() {
            return PolQ::zero();
        }
        let mut out = vec![CycQ::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolQ::from_coeffs(out)
    }
}

impl Neg for &PolQ {
    type Output = PolQ;
    fn neg(self) -> PolQ {
        PolQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident, $t:ty) => {
        impl $imp for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add, PolQ);
forward_owned_binop!(Sub, sub, PolQ);
forward_owned_binop!(Mul, mul, PolQ);

impl Neg for PolQ {
    type Output = PolQ;
    fn neg(self) -> PolQ {
        -&self
    }
}

impl fmt::Display for PolQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::codec::pol_to_string(self))
    }
}

impl fmt::Debug for PolQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolQ({})", self)
    }
}

impl std::str::FromStr for PolQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::codec::parse_pol(s)
    }
}
