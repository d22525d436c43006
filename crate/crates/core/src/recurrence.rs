//! Integer linear recurrences driven by a characteristic polynomial, with
//! exact forward and backward term generation.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// A sequence x satisfying sum_j c_j x(n + j) = 0 for all n, where the c_j
/// are the ascending coefficients of the characteristic polynomial.
///
/// Terms are pinned by `initial`, a contiguous window starting at index
/// `start`. Extending forward needs |c_d| = 1 (d the degree); extending
/// backward needs |c_0| = 1. Both hold for the reciprocal characteristic
/// polynomials used in this crate, so every integer index is reachable.
#[derive(Debug, Clone)]
pub struct LinearRecurrence {
    char_coeffs: Vec<BigInt>,
    initial: Vec<BigInt>,
    start: i64,
}

impl LinearRecurrence {
    /// Build a recurrence from ascending characteristic coefficients and an
    /// initial window. The window must hold at least degree-many terms, and
    /// any surplus terms are verified against the recurrence.
    pub fn new(char_coeffs: Vec<BigInt>, initial: Vec<BigInt>, start: i64) -> Result<Self> {
        if char_coeffs.len() < 2 {
            return Err(Error::InvalidParameter(
                "characteristic polynomial must have degree at least 1".into(),
            ));
        }
        if char_coeffs.last().is_some_and(|c| c.is_zero()) {
            return Err(Error::InvalidParameter(
                "characteristic polynomial has a zero leading coefficient".into(),
            ));
        }
        let degree = char_coeffs.len() - 1;
        if initial.len() < degree {
            return Err(Error::InvalidParameter(format!(
                "need at least {degree} initial terms, got {}",
                initial.len()
            )));
        }
        let rec = LinearRecurrence {
            char_coeffs,
            initial,
            start,
        };
        // Surplus seed terms must already satisfy the recurrence.
        for w in 0..rec.initial.len().saturating_sub(degree) {
            let combo: BigInt = rec
                .char_coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c * &rec.initial[w + j])
                .sum();
            if !combo.is_zero() {
                return Err(Error::InconsistentSeed);
            }
        }
        Ok(rec)
    }

    pub fn from_char_poly(p: &LaurentPoly, initial: Vec<BigInt>, start: i64) -> Result<Self> {
        LinearRecurrence::new(p.dense_from_zero()?, initial, start)
    }

    pub fn degree(&self) -> usize {
        self.char_coeffs.len() - 1
    }

    pub fn char_coeffs(&self) -> &[BigInt] {
        &self.char_coeffs
    }

    /// The single term at `index`.
    pub fn term(&self, index: i64) -> Result<BigInt> {
        Ok(self.terms(index, 1)?.pop().unwrap())
    }

    /// `count` consecutive terms starting at index `from`.
    pub fn terms(&self, from: i64, count: usize) -> Result<Vec<BigInt>> {
        if count == 0 {
            return Ok(vec![]);
        }
        let d = self.degree();
        let mut window = self.initial.clone();
        let mut window_start = self.start;
        let last_needed = from + count as i64 - 1;

        // Extend forward: x(n + d) = -(sum_{j<d} c_j x(n+j)) / c_d.
        while window_start + window.len() as i64 <= last_needed {
            let lead = &self.char_coeffs[d];
            if !lead.abs().eq(&BigInt::from(1)) {
                return Err(Error::NonUnitCoefficient(
                    "forward extension needs leading coefficient +-1",
                ));
            }
            let base = window.len() - d;
            let acc: BigInt = (0..d).map(|j| &self.char_coeffs[j] * &window[base + j]).sum();
            window.push(-acc / lead);
        }

        // Extend backward: x(n) = -(sum_{j>0} c_j x(n+j)) / c_0.
        while window_start > from {
            let c0 = &self.char_coeffs[0];
            if !c0.abs().eq(&BigInt::from(1)) {
                return Err(Error::NonUnitCoefficient(
                    "backward extension needs constant coefficient +-1",
                ));
            }
            let acc: BigInt = (1..=d).map(|j| &self.char_coeffs[j] * &window[j - 1]).sum();
            window.insert(0, -acc / c0);
            window_start -= 1;
        }

        let offset = (from - window_start) as usize;
        Ok(window[offset..offset + count].to_vec())
    }
}
