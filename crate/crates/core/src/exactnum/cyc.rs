use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

/// An element a + b*t of Q(t), t a primitive cube root of unity.
///
/// Multiplication reduces by t^2 = -1 - t. Complex conjugation maps
/// t to t^2, i.e. (a, b) to (a - b, -b).
#[derive(Clone, PartialEq, Eq)]
pub struct CycQ {
    a: BigRational,
    b: BigRational,
}

impl CycQ {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        CycQ { a, b }
    }

    pub fn zero() -> Self {
        CycQ::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        CycQ::new(BigRational::one(), BigRational::zero())
    }

    /// The cube root of unity t itself.
    pub fn theta() -> Self {
        CycQ::new(BigRational::zero(), BigRational::one())
    }

    /// t^2 = -1 - t.
    pub fn theta_sq() -> Self {
        CycQ::new(-BigRational::one(), -BigRational::one())
    }

    /// t^k for any integer exponent k (t has order 3).
    pub fn theta_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => CycQ::one(),
            1 => CycQ::theta(),
            _ => CycQ::theta_sq(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        CycQ::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }

    /// The rational number p/r as an element of Q(t).
    pub fn from_ratio(p: i64, r: i64) -> Self {
        assert!(r != 0, "zero denominator");
        CycQ::new(
            BigRational::new(BigInt::from(p), BigInt::from(r)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycQ::new(r, BigRational::zero())
    }

    /// 1/2, a coefficient that occurs throughout the f-vectors.
    pub fn half() -> Self {
        CycQ::from_ratio(1, 2)
    }

    pub fn rational_a(&self) -> &BigRational {
        &self.a
    }

    pub fn rational_b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True if the value lies in Q (no t-component).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Complex conjugation: t -> t^2.
    pub fn conj(&self) -> Self {
        CycQ::new(&self.a - &self.b, -self.b.clone())
    }

    /// Field norm x * conj(x) = a^2 - a*b + b^2, a nonnegative rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(CycQ::new(c.a / &n, c.b / &n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = CycQ::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The rational r with self = r * t^2, if there is one (a == b != 0).
    /// Used by the printer.
    pub(crate) fn theta_sq_multiple(&self) -> Option<BigRational> {
        if self.a == self.b && !self.a.is_zero() {
            Some(-self.a.clone())
        } else {
            None
        }
    }

    /// True for a strictly negative rational value.
    pub fn is_negative_rational(&self) -> bool {
        self.b.is_zero() && self.a.is_negative()
    }
}

impl Add for &CycQ {
    type Output = CycQ;
    fn add(self, rhs: &CycQ) -> CycQ {
        CycQ::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &CycQ {
    type Output = CycQ;
    fn sub(self, rhs: &CycQ) -> CycQ {
        CycQ::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &CycQ {
    type Output = CycQ;
    fn mul(self, rhs: &CycQ) -> CycQ {
        // (a + bt)(c + dt) = ac - bd + (ad + bc - bd) t
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad_bc = &self.a * &rhs.b + &self.b * &rhs.a;
        CycQ::new(ac - &bd, ad_bc - bd)
    }
}

impl Neg for &CycQ {
    type Output = CycQ;
    fn neg(self) -> CycQ {
        CycQ::new(-self.a.clone(), -self.b.clone())
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
forward_owned_binop!(Add, add, CycQ);
forward_owned_binop!(Sub, sub, CycQ);
forward_owned_binop!(Mul, mul, CycQ);

impl Neg for CycQ {
    type Output = CycQ;
    fn neg(self) -> CycQ {
        -&self
    }
}

impl fmt::Display for CycQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::codec::cyc_to_string(self))
    }
}

impl fmt::Debug for CycQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycQ({})", self)
    }
}
