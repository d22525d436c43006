//! Generalized Petersen graphs GP(n, k) as explicit edge multisets, plus the
//! circulant matrices their Laplacian blocks are built from.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// The generalized Petersen graph GP(n, k): an inner circulant ring with step
/// k, an outer cycle, and a perfect matching of spokes between them.
///
/// Vertices are indexed with the inner ring first: inner vertex i is index i,
/// outer vertex i is index n + i, for i in 0..n. When 2k = 0 (mod n) the
/// inner ring degenerates to parallel edges (a multigraph); the edge list
/// keeps both copies so every vertex stays 3-regular.
#[derive(Debug, Clone)]
pub struct GpGraph {
    n: u64,
    k: u64,
    edges: Vec<(usize, usize)>,
}

impl GpGraph {
    pub fn new(n: u64, k: u64) -> Result<Self> {
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
        let n_us = n as usize;
        let k_us = k as usize;
        let mut edges = Vec::with_capacity(3 * n_us);
        for i in 0..n_us {
            edges.push(ordered(i, (i + k_us) % n_us)); // inner ring, step k
            edges.push((i, n_us + i)); // spoke
            edges.push(ordered(n_us + i, n_us + (i + 1) % n_us)); // outer cycle
        }
        edges.sort_unstable();
        Ok(GpGraph { n, k, edges })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n as usize
    }

    /// Edge multiset with both endpoints ordered low-to-high; parallel edges
    /// appear as repeated pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Adjacency matrix with multiplicities.
    pub fn adjacency(&self) -> IntMatrix {
        let v = self.vertex_count();
        let mut a = IntMatrix::zeros(v, v);
        for &(x, y) in &self.edges {
            a[(x, y)] += BigInt::from(1);
            a[(y, x)] += BigInt::from(1);
        }
        a
    }

    /// Graph Laplacian D - A; each row and column sums to zero.
    pub fn laplacian(&self) -> IntMatrix {
        let v = self.vertex_count();
        let a = self.adjacency();
        let mut l = IntMatrix::zeros(v, v);
        for i in 0..v {
            let mut degree = BigInt::from(0);
            for j in 0..v {
                degree += &a[(i, j)];
                l[(i, j)] = -&a[(i, j)];
            }
            l[(i, i)] += degree;
        }
        l
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// n-by-n integer circulant: entry (r, c) sums the coefficients of all
/// support pairs (exp, coeff) with exp congruent to c - r mod n.
pub fn circulant(n: usize, support: &[(i64, i64)]) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    let n_i = n as i64;
    for r in 0..n {
        for &(exp, coeff) in support {
            let c = (((r as i64 + exp) % n_i) + n_i) % n_i;
            m[(r, c as usize)] += BigInt::from(coeff);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn petersen_edge_list() {
        // GP(5, 2) is the Petersen graph: 15 edges, all simple.
        let g = GpGraph::new(5, 2).unwrap();
        let mut expected = vec![
            // inner ring (step 2): indices 0..4
            (0, 2),
            (1, 3),
            (2, 4),
            (0, 3),
            (1, 4),
            // spokes
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            // outer cycle: indices 5..9
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (5, 9),
        ];
        expected.sort_unstable();
        assert_eq!(g.edges(), expected.as_slice());
    }

    #[test]
    fn multigraph_case_doubles_inner_edges() {
        // GP(4, 2): 2k = n, so each inner edge appears twice.
        let g = GpGraph::new(4, 2).unwrap();
        let mut expected = vec![
            (0, 2),
            (0, 2),
            (1, 3),
            (1, 3),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
            (4, 5),
            (5, 6),
            (6, 7),
            (4, 7),
        ];
        expected.sort_unstable();
        assert_eq!(g.edges(), expected.as_slice());
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn shift_is_reduced_modulo_n() {
        let a = GpGraph::new(5, 7).unwrap();
        let b = GpGraph::new(5, 2).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert_eq!(a.k(), 2);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(GpGraph::new(2, 1).is_err());
        assert!(GpGraph::new(5, 5).is_err());
        assert!(GpGraph::new(6, 0).is_err());
        assert!(GpGraph::new(6, 12).is_err());
    }

    #[test]
    fn always_cubic_with_3n_edges() {
        for (n, k) in [(3u64, 1u64), (4, 2), (6, 3), (8, 4), (9, 3), (12, 5)] {
            let g = GpGraph::new(n, k).unwrap();
            assert_eq!(g.edge_count(), 3 * n as usize, "GP({n},{k})");
            let a = g.adjacency();
            for i in 0..g.vertex_count() {
                let deg: BigInt = (0..g.vertex_count()).map(|j| a[(i, j)].clone()).sum();
                assert_eq!(deg, BigInt::from(3), "degree of vertex {i} in GP({n},{k})");
            }
        }
    }

    #[test]
    fn adjacency_is_symmetric() {
        for (n, k) in [(5u64, 2u64), (4, 2), (10, 3)] {
            assert!(GpGraph::new(n, k).unwrap().adjacency().is_symmetric());
        }
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        for (n, k) in [(5u64, 2u64), (4, 2), (7, 3), (8, 4)] {
            let l = GpGraph::new(n, k).unwrap().laplacian();
            for i in 0..l.rows() {
                let row_sum: BigInt = (0..l.cols()).map(|j| l[(i, j)].clone()).sum();
                assert!(row_sum.is_zero(), "row {i} of GP({n},{k})");
            }
        }
    }

    #[test]
    fn laplacian_has_circulant_block_structure() {
        // With inner vertices first, the Laplacian is
        //   [ 3I - C(k)   -I        ]
        //   [ -I          3I - C(1) ]
        // where C(s) is the circulant with ones at offsets +-s.
        for (n, k) in [(5u64, 2u64), (4, 2), (7, 3), (9, 4), (6, 3)] {
            let l = GpGraph::new(n, k).unwrap().laplacian();
            let nu = n as usize;
            let three_i = circulant(nu, &[(0, 3)]);
            let c_k = circulant(nu, &[(k as i64, 1), (-(k as i64), 1)]);
            let c_1 = circulant(nu, &[(1, 1), (-1, 1)]);
            let inner_block = three_i.sub(&c_k).unwrap();
            let outer_block = three_i.sub(&c_1).unwrap();
            for r in 0..nu {
                for c in 0..nu {
                    assert_eq!(l[(r, c)], inner_block[(r, c)], "GP({n},{k}) inner");
                    assert_eq!(l[(nu + r, nu + c)], outer_block[(r, c)], "GP({n},{k}) outer");
                    let id = if r == c { BigInt::from(-1) } else { BigInt::zero() };
                    assert_eq!(l[(r, nu + c)], id, "GP({n},{k}) spoke block");
                    assert_eq!(l[(nu + r, c)], id, "GP({n},{k}) spoke block");
                }
            }
        }
    }

    #[test]
    fn circulant_row_zero_examples() {
        let c = circulant(5, &[(2, 1), (-2, 1)]);
        let row0: Vec<BigInt> = (0..5).map(|j| c[(0, j)].clone()).collect();
        assert_eq!(
            row0,
            [0, 0, 1, 1, 0].map(BigInt::from).to_vec()
        );
        // Offsets +2 and -2 coincide mod 4 and accumulate.
        let c = circulant(4, &[(2, 1), (-2, 1)]);
        let row0: Vec<BigInt> = (0..4).map(|j| c[(0, j)].clone()).collect();
        assert_eq!(row0, [0, 0, 2, 0].map(BigInt::from).to_vec());
    }

    #[test]
    fn circulant_rows_are_rotations() {
        let c = circulant(7, &[(1, 1), (-1, 1), (3, -2)]);
        for r in 1..7 {
            for j in 0..7 {
                assert_eq!(c[(r, (j + r) % 7)], c[(0, j)]);
            }
        }
    }
}
