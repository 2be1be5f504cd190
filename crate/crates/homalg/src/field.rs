use std::fmt::{self, Debug, Display};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{EngineError, Result};

/// An exact coefficient field. The two instances shipped are the prime field
/// `F_32003` and the rationals; both satisfy the field axioms exactly.
pub trait Field: Clone + PartialEq + Eq + Debug + Display + Send + Sync + 'static {
    /// Short name used in configs and reports ("gf32003", "qq").
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    /// `num/den` as a field element; rejects `den = 0`.
    fn from_fraction(num: i64, den: i64) -> Result<Self>;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; division by zero is rejected, never absorbed.
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }
}

const P: u64 = 32003;

/// The prime field `F_32003`, stored as a canonical residue in `0..32003`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gf32003(u64);

impl Gf32003 {
    pub fn new(n: i64) -> Self {
        Gf32003(n.rem_euclid(P as i64) as u64)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Gf32003(acc)
    }
}

impl Display for Gf32003 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Gf32003 {
    const NAME: &'static str = "gf32003";

    fn zero() -> Self {
        Gf32003(0)
    }

    fn one() -> Self {
        Gf32003(1)
    }

    fn from_i64(n: i64) -> Self {
        Gf32003::new(n)
    }

    fn from_fraction(num: i64, den: i64) -> Result<Self> {
        Gf32003::new(den)
            .inv()
            .map(|d| Gf32003::new(num).mul(&d))
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn is_one(&self) -> bool {
        self.0 == 1
    }

    fn add(&self, rhs: &Self) -> Self {
        Gf32003((self.0 + rhs.0) % P)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Gf32003((self.0 + P - rhs.0) % P)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Gf32003(self.0 * rhs.0 % P)
    }

    fn neg(&self) -> Self {
        Gf32003((P - self.0) % P)
    }

    fn inv(&self) -> Result<Self> {
        if self.0 == 0 {
            return Err(EngineError::DivisionByZero);
        }
        Ok(self.pow(P - 2))
    }
}

/// Arbitrary-precision rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rat(BigRational);

impl Rat {
    pub fn from_big(r: BigRational) -> Self {
        Rat(r)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Rat {
    const NAME: &'static str = "qq";

    fn zero() -> Self {
        Rat(BigRational::zero())
    }

    fn one() -> Self {
        Rat(BigRational::one())
    }

    fn from_i64(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_fraction(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(EngineError::DivisionByZero);
        }
        Ok(Rat(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rat(-&self.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(EngineError::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }
}
