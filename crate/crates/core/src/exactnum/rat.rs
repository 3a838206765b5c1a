use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{CycQ, PolQ};
use crate::{Error, Result};

/// A reduced rational function num/den in q over Q(t).
///
/// Canonical form: den is monic, gcd(num, den) = 1, and zero is 0/1. Two
/// equal fractions therefore have identical representations.
#[derive(Clone, PartialEq, Eq)]
pub struct RatQ {
    num: PolQ,
    den: PolQ,
}

impl RatQ {
    /// Normalize num/den into canonical form. Errors on a zero denominator.
    pub fn new(num: PolQ, den: PolQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatQ {
                num: PolQ::zero(),
                den: PolQ::one(),
            });
        }
        if den.is_one() {
            return Ok(RatQ {
                num,
                den: PolQ::one(),
            });
        }
        // constants are units: no gcd needed, only monic scaling
        if den.is_constant() || num.is_constant() {
            let lc_inv = den.leading().unwrap().inv().unwrap();
            let num = num.scalar_mul(&lc_inv);
            let den = den.scalar_mul(&lc_inv);
            return Ok(RatQ { num, den });
        }
        let g = PolQ::gcd(&num, &den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lc_inv = den.leading().unwrap().inv().unwrap();
        Ok(RatQ {
            num: num.scalar_mul(&lc_inv),
            den: den.scalar_mul(&lc_inv),
        })
    }

    pub fn from_pol(p: PolQ) -> Self {
        RatQ {
            num: p,
            den: PolQ::one(),
        }
    }

    pub fn from_cyc(c: CycQ) -> Self {
        RatQ::from_pol(PolQ::constant(c))
    }

    pub fn zero() -> Self {
        RatQ::from_pol(PolQ::zero())
    }

    pub fn one() -> Self {
        RatQ::from_pol(PolQ::one())
    }

    pub fn num(&self) -> &PolQ {
        &self.num
    }

    pub fn den(&self) -> &PolQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator, provided the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&PolQ> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatQ::new(self.den.clone(), self.num.clone()).expect("nonzero"))
    }

    pub fn conj(&self) -> Self {
        RatQ::new(self.num.conj(), self.den.conj()).expect("conj keeps den nonzero")
    }

    /// Checked division; `None` when dividing by zero.
    pub fn div(&self, rhs: &RatQ) -> Option<Self> {
        let inv = rhs.inv()?;
        Some(self * &inv)
    }
}

impl RatQ {
    /// Construct without reduction; requires gcd(num, den) = 1 and den
    /// monic (both inputs canonical).
    fn reduced_unchecked(num: PolQ, den: PolQ) -> RatQ {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatQ::zero();
        }
        debug_assert!(den.leading().is_some_and(|c| c.is_one()));
        RatQ { num, den }
    }

    fn add_signed(&self, rhs: &RatQ, negate: bool) -> RatQ {
        let rhs_num = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.is_zero() {
            return RatQ::reduced_unchecked(rhs_num, rhs.den.clone());
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatQ::new(&self.num + &rhs_num, self.den.clone()).expect("nonzero den");
        }
        let g = PolQ::gcd(&self.den, &rhs.den);
        if g.is_one() {
            // coprime denominators: the result is already reduced
            let num = &(&self.num * &rhs.den) + &(&rhs_num * &self.den);
            let den = &self.den * &rhs.den;
            return RatQ::reduced_unchecked(num, den);
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&rhs_num * &d1);
        let den = &self.den * &d2;
        RatQ::new(num, den).expect("nonzero den")
    }
}

impl Add for &RatQ {
    type Output = RatQ;
    fn add(self, rhs: &RatQ) -> RatQ {
        self.add_signed(rhs, false)
    }
}

impl Sub for &RatQ {
    type Output = RatQ;
    fn sub(self, rhs: &RatQ) -> RatQ {
        self.add_signed(rhs, true)
    }
}

impl Mul for &RatQ {
    type Output = RatQ;
    fn mul(self, rhs: &RatQ) -> RatQ {
        if self.is_zero() || rhs.is_zero() {
            return RatQ::zero();
        }
        // cross-cancel before multiplying; the factors stay coprime
        let g1 = PolQ::gcd(&self.num, &rhs.den);
        let g2 = PolQ::gcd(&rhs.num, &self.den);
        let num = &self.num.div_exact(&g1).expect("gcd divides")
            * &rhs.num.div_exact(&g2).expect("gcd divides");
        let den = &self.den.div_exact(&g2).expect("gcd divides")
            * &rhs.den.div_exact(&g1).expect("gcd divides");
        RatQ::reduced_unchecked(num, den)
    }
}

impl Neg for &RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        RatQ {
            num: -&self.num,
            den: self.den.clone(),
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
forward_owned_binop!(Add, add, RatQ);
forward_owned_binop!(Sub, sub, RatQ);
forward_owned_binop!(Mul, mul, RatQ);

impl Neg for RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        -&self
    }
}

impl fmt::Display for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatQ({})", self)
    }
}
