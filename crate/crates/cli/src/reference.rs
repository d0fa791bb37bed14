//! Published reference values used to annotate computed results.

/// OEIS A383733: `P(C_n^(3), 3)` for `n = 6, 7, ..., 35`.
pub const A383733: [(usize, u64); 30] = [
    (6, 42),
    (7, 0),
    (8, 0),
    (9, 18),
    (10, 186),
    (11, 66),
    (12, 0),
    (13, 234),
    (14, 930),
    (15, 750),
    (16, 0),
    (17, 2244),
    (18, 4578),
    (19, 6498),
    (20, 120),
    (21, 18354),
    (22, 22314),
    (23, 50922),
    (24, 2496),
    (25, 139500),
    (26, 111390),
    (27, 378504),
    (28, 22008),
    (29, 1019466),
    (30, 559302),
    (31, 2730294),
    (32, 169536),
    (33, 7279668),
    (34, 2825406),
    (35, 19341210),
];

pub fn a383733(n: usize) -> Option<u64> {
    A383733.iter().find(|(m, _)| *m == n).map(|&(_, v)| v)
}

/// Previously reported chromatic numbers of `C_n^(3)`.
pub const REPORTED_CHI_K3: [(usize, usize); 4] = [(6, 3), (7, 4), (8, 4), (9, 3)];

/// Previously reported independence number of `C_7^(3)` and its witness set.
pub const REPORTED_ALPHA_C7_K3: (usize, [usize; 3]) = (3, [0, 2, 4]);
