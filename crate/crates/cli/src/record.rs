//! Serializable result records. Counts and invariant factors are decimal
//! strings so arbitrarily large values survive JSON round-trips unchanged.

use gpjac::AbelianGroup;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// One computed case. `invariant_factors` and `free_rank` are present when
/// the Jacobian group was computed, absent for tau-only queries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: u64,
    pub k: u64,
    /// Spanning-tree count in decimal.
    pub tau: String,
    /// Invariant factor decomposition of the Jacobian, smallest first.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub invariant_factors: Option<Vec<String>>,
    /// Free rank of the full Laplacian cokernel (1 for a connected graph).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub free_rank: Option<usize>,
    /// The route that actually ran (after `auto` resolution).
    pub method: String,
    pub elapsed_ms: u128,
}

impl OutputRecord {
    pub fn for_tau(n: u64, k: u64, tau: &BigUint, method: &str, elapsed_ms: u128) -> Self {
        OutputRecord {
            n,
            k,
            tau: tau.to_string(),
            invariant_factors: None,
            free_rank: None,
            method: method.to_string(),
            elapsed_ms,
        }
    }

    /// Record a computed Jacobian; tau is the group order.
    pub fn for_group(n: u64, k: u64, group: &AbelianGroup, method: &str, elapsed_ms: u128) -> Self {
        OutputRecord {
            n,
            k,
            tau: group.torsion_order().to_string(),
            invariant_factors: Some(
                group
                    .invariant_factors()
                    .iter()
                    .map(|f| f.to_string())
                    .collect(),
            ),
            free_rank: Some(1),
            method: method.to_string(),
            elapsed_ms,
        }
    }
}

/// Output of the `sequence` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parity: Option<String>,
    pub start: i64,
    /// Consecutive terms in decimal, beginning at index `start`.
    pub terms: Vec<String>,
}
