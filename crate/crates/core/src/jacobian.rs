//! The Jacobian (critical / sandpile) group of GP(n, k), computed two
//! independent ways: Smith form of the full Laplacian, and the cokernel of
//! A^n - I for the small companion matrix A of the Laplacian symbol.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::GpGraph;
use crate::matrix::IntMatrix;
use crate::poly::{companion_matrix, laplacian_symbol};
use crate::snf::{cokernel, AbelianGroup};

/// Which route computes the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobianMethod {
    /// Pick the companion route when its matrix is smaller than the
    /// Laplacian, otherwise go direct.
    Auto,
    /// Smith normal form of the full 2n x 2n Laplacian.
    Laplacian,
    /// Cokernel of A^n - I for the (2k'+2)-square companion matrix.
    Companion,
}

/// The shift k reduced to its equivalent in 1..=n/2: GP(n, k), GP(n, n - k),
/// and GP(n, k mod n) all have the same edges.
pub fn reduced_shift(n: u64, k: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "GP(n, k) needs n >= 3, got n = {n}"
        )));
    }
    let k = k % n;
    if k == 0 {
        return Err(Error::InvalidParameter(
            "GP(n, k) needs k not divisible by n".into(),
        ));
    }
    Ok(k.min(n - k))
}

/// Torsion of the Laplacian cokernel, computed by Smith normal form of the
/// full Laplacian. The graph is connected, so the free rank must be exactly
/// one; anything else is reported as an internal inconsistency.
pub fn jacobian_via_laplacian(n: u64, k: u64) -> Result<AbelianGroup> {
    let g = GpGraph::new(n, k)?;
    let coker = cokernel(&g.laplacian())?;
    expect_rank_one(n, k, &coker, "laplacian")?;
    Ok(coker.torsion())
}

/// Torsion of coker(A^n - I) where A is the companion matrix of the
/// Laplacian symbol for the reduced shift. This agrees with the Laplacian
/// route but works with a (2k'+2)-square matrix independent of n.
pub fn jacobian_via_companion(n: u64, k: u64) -> Result<AbelianGroup> {
    let kp = reduced_shift(n, k)?;
    let a = companion_matrix(&laplacian_symbol(kp))?;
    let s = a.rows();
    let power = a.pow(n)?;
    let mut m = power;
    for i in 0..s {
        m[(i, i)] -= BigInt::one();
    }
    let coker = cokernel(&m)?;
    expect_rank_one(n, k, &coker, "companion")?;
    Ok(coker.torsion())
}

fn expect_rank_one(n: u64, k: u64, coker: &AbelianGroup, route: &str) -> Result<()> {
    if coker.free_rank() != 1 {
        return Err(Error::Inconsistency(format!(
            "GP({n},{k}) {route} cokernel has free rank {}, expected 1",
            coker.free_rank()
        )));
    }
    Ok(())
}

/// The Jacobian group of GP(n, k) by the requested method.
pub fn jacobian(n: u64, k: u64, method: JacobianMethod) -> Result<AbelianGroup> {
    match method {
        JacobianMethod::Laplacian => jacobian_via_laplacian(n, k),
        JacobianMethod::Companion => jacobian_via_companion(n, k),
        JacobianMethod::Auto => {
            let kp = reduced_shift(n, k)?;
            if 2 * (kp + 1) < 2 * n {
                jacobian_via_companion(n, k)
            } else {
                jacobian_via_laplacian(n, k)
            }
        }
    }
}

/// The matrix A^n - I of the companion route, exposed for cross-checks.
pub fn companion_power_matrix(n: u64, k: u64) -> Result<IntMatrix> {
    let kp = reduced_shift(n, k)?;
    let a = companion_matrix(&laplacian_symbol(kp))?;
    let mut m = a.pow(n)?;
    for i in 0..m.rows() {
        m[(i, i)] -= BigInt::one();
    }
    Ok(m)
}
