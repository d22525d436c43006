//! Smith normal form, cokernels, and finitely generated abelian groups.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A finitely generated abelian group in invariant-factor form:
/// `Z_{d1} + ... + Z_{dm} + Z^free_rank` with `d1 | d2 | ... | dm`, each `di >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    invariant_factors: Vec<BigUint>,
    free_rank: usize,
}

impl AbelianGroup {
    pub fn new(invariant_factors: Vec<BigUint>, free_rank: usize) -> Result<Self> {
        let one = BigUint::one();
        for w in invariant_factors.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(Error::Inconsistency(format!(
                    "invariant factors out of divisibility order: {} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        if invariant_factors.iter().any(|d| *d <= one) {
            return Err(Error::Inconsistency(
                "invariant factors must be at least 2".into(),
            ));
        }
        Ok(AbelianGroup {
            invariant_factors,
            free_rank,
        })
    }

    /// Canonicalize an arbitrary direct sum of cyclic groups `Z_{a1} + ... + Z_{am}`
    /// into invariant-factor form. Zero orders contribute free rank.
    ///
    /// Works by replacing pairs (a, b) with (gcd, lcm) until every pair is in
    /// divisibility relation; this preserves the isomorphism class.
    pub fn from_cyclic_orders(orders: &[BigUint]) -> Self {
        let mut free_rank = 0usize;
        let mut v: Vec<BigUint> = Vec::new();
        for a in orders {
            if a.is_zero() {
                free_rank += 1;
            } else if !a.is_one() {
                v.push(a.clone());
            }
        }
        loop {
            let mut changed = false;
            for i in 0..v.len() {
                for j in 0..v.len() {
                    if i == j {
                        continue;
                    }
                    if !(&v[j] % &v[i]).is_zero() && !(&v[i] % &v[j]).is_zero() {
                        let g = v[i].gcd(&v[j]);
                        let l = &v[i] * &v[j] / &g;
                        v[i] = g;
                        v[j] = l;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        v.retain(|d| !d.is_one());
        v.sort();
        AbelianGroup {
            invariant_factors: v,
            free_rank,
        }
    }

    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    /// Order of the torsion part (product of the invariant factors).
    pub fn torsion_order(&self) -> BigUint {
        self.invariant_factors.iter().product()
    }

    /// The torsion subgroup (same invariant factors, free rank dropped).
    pub fn torsion(&self) -> AbelianGroup {
        AbelianGroup {
            invariant_factors: self.invariant_factors.clone(),
            free_rank: 0,
        }
    }
}

impl fmt::Display for AbelianGroup {
    /// Renders as `Z_{d1} ⊕ ... ⊕ Z_{dm}` (with a trailing `Z^r` for any free
    /// part); the trivial group renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z_{d}"))
            .collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" \u{2295} "))
    }
}

/// Smith normal form of an integer matrix.
///
/// Returns the full diagonal, length `min(rows, cols)`: nonnegative entries in
/// divisibility order `d1 | d2 | ...`, with zeros (if any) at the end.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigUint> {
    let rows = m.rows();
    let cols = m.cols();
    let dim = rows.min(cols);
    let mut a: Vec<Vec<BigInt>> =
        (0..rows).map(|i| (0..cols).map(|j| m[(i, j)].clone()).collect()).collect();

    let mut t = 0usize;
    while t < dim {
        // Pick the nonzero entry of smallest absolute value as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j].is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = best else {
            break; // remaining block is all zero
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        'reduce: loop {
            // Clear column t. A nonzero remainder is strictly smaller than the
            // pivot, so swapping it up makes progress.
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[i][t], &a[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let sub = &q * &a[t][j];
                        a[i][j] -= sub;
                    }
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    continue 'reduce;
                }
            }
            // Clear row t symmetrically.
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[t][j], &a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let sub = &q * &row[t];
                        row[j] -= sub;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    continue 'reduce;
                }
            }
            // Row and column are clear; make sure the pivot divides the rest of
            // the matrix, otherwise fold an offending row in and keep reducing.
            for i in t + 1..rows {
                if (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()) {
                    for j in t..cols {
                        let add = a[i][j].clone();
                        a[t][j] += add;
                    }
                    continue 'reduce;
                }
            }
            break;
        }
        t += 1;
    }

    let mut diag: Vec<BigUint> = Vec::with_capacity(dim);
    for s in 0..dim {
        diag.push(a[s][s].abs().to_biguint().expect("abs is nonnegative"));
    }
    diag
}

/// Quotient of a/b rounded to nearest (ties toward floor), so the remainder
/// satisfies |r| <= |b|/2.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_mod_floor(b);
    if r.abs() * 2 > b.abs() {
        q += 1;
    }
    q
}

/// Cokernel `Z^n / im(M)` of a square integer matrix, as an abelian group.
pub fn cokernel(m: &IntMatrix) -> Result<AbelianGroup> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let diag = smith_normal_form(m);
    let free_rank = diag.iter().filter(|d| d.is_zero()).count();
    let one = BigUint::one();
    let invariant_factors: Vec<BigUint> =
        diag.into_iter().filter(|d| !d.is_zero() && *d != one).collect();
    AbelianGroup::new(invariant_factors, free_rank)
}
