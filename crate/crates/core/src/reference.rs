//! Known Jacobian groups and spanning-tree counts for GP(n, k) with
//! k = 2, 3, 4, used as regression anchors throughout the test suite.
//!
//! Factor lists are cyclic decompositions; a few are not divisibility
//! chains (or not sorted), so comparisons should go through
//! `AbelianGroup::from_cyclic_orders`, which canonicalizes.

/// One anchored case: GP(n, k) has `tau` spanning trees and Jacobian
/// isomorphic to the direct sum of the cyclic groups in `factors`.
#[derive(Debug, Clone, Copy)]
pub struct GoldenRow {
    pub n: u64,
    pub k: u64,
    pub tau: u64,
    pub factors: &'static [u64],
}

const fn row(n: u64, k: u64, tau: u64, factors: &'static [u64]) -> GoldenRow {
    GoldenRow { n, k, tau, factors }
}

/// GP(n, 2) for n = 3..=20.
///
/// The n = 13 count is 589332757 = 13 * 6733^2, the order of
/// Z_6733 + Z_87529.
pub const TABLE_K2: &[GoldenRow] = &[
    row(3, 2, 75, &[5, 15]),
    row(4, 2, 196, &[7, 28]),
    row(5, 2, 2000, &[2, 10, 10, 10]),
    row(6, 2, 7350, &[35, 210]),
    row(7, 2, 48223, &[83, 581]),
    row(8, 2, 207368, &[161, 1288]),
    row(9, 2, 1134225, &[355, 3195]),
    row(10, 2, 5184000, &[2, 12, 60, 60, 60]),
    row(11, 2, 26121491, &[1541, 16951]),
    row(12, 2, 121730700, &[7, 7, 1365, 1820]),
    row(13, 2, 589332757, &[6733, 87529]),
    row(14, 2, 2754594206, &[14027, 196378]),
    row(15, 2, 13053750000, &[5, 10, 10, 2950, 8850]),
    row(16, 2, 60837209104, &[61663, 986608]),
    row(17, 2, 284667318953, &[129403, 2199851]),
    row(18, 2, 1320621268050, &[270865, 4875570]),
    row(19, 2, 6127935174499, &[567911, 10790309]),
    row(20, 2, 28295350272000, &[4, 24, 120, 49560, 49560]),
];

/// GP(n, 3) for n = 4..=20.
pub const TABLE_K3: &[GoldenRow] = &[
    row(4, 3, 384, &[2, 8, 24]),
    row(5, 3, 2000, &[2, 10, 10, 10]),
    row(6, 3, 2916, &[3, 9, 108]),
    row(7, 3, 48223, &[83, 581]),
    row(8, 3, 248832, &[3, 3, 12, 48, 48]),
    row(9, 3, 751689, &[289, 2601]),
    row(10, 3, 6144000, &[4, 8, 40, 40, 120]),
    row(11, 3, 31528739, &[1693, 18623]),
    row(12, 3, 127744128, &[6, 2664, 7992]),
    row(13, 3, 785858125, &[5, 5, 1555, 20215]),
    row(14, 3, 3986498964, &[83, 83, 83, 6972]),
    row(15, 3, 18186486000, &[2, 10, 52230, 17410]),
    row(16, 3, 98993332224, &[3, 3, 24, 21408, 21408]),
    row(17, 3, 496614555113, &[170917, 2905589]),
    row(18, 3, 2373854909292, &[9, 148257, 1779084]),
    row(19, 3, 12225173493739, &[802141, 15240679]),
    row(20, 3, 60778610688000, &[2, 8, 8, 16, 80, 11120, 33360]),
];

/// GP(n, 4) for n = 5..=20.
pub const TABLE_K4: &[GoldenRow] = &[
    row(5, 4, 1805, &[19, 95]),
    row(6, 4, 7350, &[35, 210]),
    row(7, 4, 48223, &[83, 581]),
    row(8, 4, 42632, &[73, 584]),
    row(9, 4, 1134225, &[355, 3195]),
    row(10, 4, 6068410, &[779, 7790]),
    row(11, 4, 31528739, &[1693, 18623]),
    row(12, 4, 78336300, &[2555, 30660]),
    row(13, 4, 785858125, &[5, 5, 1555, 20215]),
    row(14, 4, 4293872366, &[17513, 245182]),
    row(15, 4, 21660000000, &[2, 2, 2, 10, 10, 10, 950, 2850]),
    row(16, 4, 81386960656, &[71321, 1141136]),
    row(17, 4, 552962478353, &[103, 1751, 1751, 1751]),
    row(18, 4, 2953251954450, &[405055, 7290990]),
    row(19, 4, 14906272578931, &[37, 37, 23939, 454841]),
    row(20, 4, 66513184046420, &[1823639, 36472780]),
];

/// All three anchored tables.
pub fn tables() -> [&'static [GoldenRow]; 3] {
    [TABLE_K2, TABLE_K3, TABLE_K4]
}

/// The anchored row for GP(n, k), if one exists.
pub fn lookup(n: u64, k: u64) -> Option<&'static GoldenRow> {
    tables()
        .into_iter()
        .flatten()
        .find(|r| r.n == n && r.k == k)
}
