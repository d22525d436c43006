//! Exact arithmetic in real quadratic fields Q(sqrt(d)).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

use crate::error::{Error, Result};

/// An element a + b sqrt(d) of Q(sqrt(d)), with d a fixed squarefree
/// positive integer carried alongside the coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    d: u64,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Result<Self> {
        if d == 0 || !is_squarefree_u64(d) {
            return Err(Error::InvalidParameter(format!(
                "radicand must be squarefree and positive, got {d}"
            )));
        }
        Ok(QuadExt { a, b, d })
    }

    pub fn from_ints(a: i64, b: i64, d: u64) -> Result<Self> {
        QuadExt::new(
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
            d,
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check_same_field(&self, other: &QuadExt) -> Result<()> {
        if self.d != other.d {
            return Err(Error::ShapeMismatch(format!(
                "mixed radicands {} and {}",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &QuadExt) -> Result<QuadExt> {
        self.check_same_field(other)?;
        Ok(QuadExt {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d,
        })
    }

    pub fn sub(&self, other: &QuadExt) -> Result<QuadExt> {
        self.check_same_field(other)?;
        Ok(QuadExt {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d,
        })
    }

    pub fn mul(&self, other: &QuadExt) -> Result<QuadExt> {
        self.check_same_field(other)?;
        let d = BigRational::from_integer(BigInt::from(self.d));
        Ok(QuadExt {
            a: &self.a * &other.a + &d * (&self.b * &other.b),
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d,
        })
    }

    pub fn scale(&self, s: &BigRational) -> QuadExt {
        QuadExt {
            a: &self.a * s,
            b: &self.b * s,
            d: self.d,
        }
    }

    /// Galois conjugate a - b sqrt(d).
    pub fn conjugate(&self) -> QuadExt {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// Field norm a^2 - d b^2 (the product with the conjugate).
    pub fn norm(&self) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - d * (&self.b * &self.b)
    }
}

fn is_squarefree_u64(mut n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
    }
}
