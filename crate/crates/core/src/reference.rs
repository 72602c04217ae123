//! Reference values for the acceptance checks, written out by hand.
//!
//! Matrices use the slice ordering of [`crate::quiver`]: level descending,
//! then node ascending.

/// `C̃_11(m)` for `A1`, `m = 0..=11`.
pub const A1_CTILDE_11: [i64; 12] = [0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1];

/// `C̃_ii(m)` for `A2`, `m = 0..=14`.
pub const A2_CTILDE_II: [i64; 15] = [0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0, -1, 0, 1, 0];

/// `C̃_ij(m)` for `A2` with `i ≠ j`, `m = 0..=14`.
pub const A2_CTILDE_IJ: [i64; 15] = [0, 0, 1, 0, -1, 0, 0, 0, 1, 0, -1, 0, 0, 0, 1];

/// Level window of the `D4` reference slice.
pub const D4_WINDOW: (i64, i64) = (-5, 2);

pub const D4_B_TILDE: [[i64; 8]; 16] = [
    [-1, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 0],
    [1, 1, 1, -1, 0, 0, 0, 0],
    [0, 0, 0, 1, -1, 0, 0, 0],
    [0, 0, 0, 1, 0, -1, 0, 0],
    [0, 0, 0, 1, 0, 0, -1, 0],
    [-1, -1, -1, 0, 1, 1, 1, -1],
    [1, 0, 0, -1, 0, 0, 0, 1],
    [0, 1, 0, -1, 0, 0, 0, 1],
    [0, 0, 1, -1, 0, 0, 0, 1],
    [0, 0, 0, 1, -1, -1, -1, 0],
    [0, 0, 0, 0, 1, 0, 0, -1],
    [0, 0, 0, 0, 0, 1, 0, -1],
    [0, 0, 0, 0, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 0, 1],
];

pub const D4_LAMBDA: [[i64; 16]; 16] = [
    [0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 2, 2, 1, 1, 2],
    [0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 2, 1, 2],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 1, 1, 2, 2],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 3, 2, 2, 2, 4],
    [-1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 2],
    [0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2],
    [0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2],
    [-1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 3],
    [-1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1],
    [-1, -1, -1, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    [-1, -1, -1, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [-2, -2, -2, -3, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 1],
    [-2, -1, -1, -2, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0],
    [-1, -2, -1, -2, -1, -1, -1, -1, 0, -1, 0, 0, 0, 0, 0, 0],
    [-1, -1, -2, -2, -1, -1, -1, -1, 0, 0, -1, 0, 0, 0, 0, 0],
    [-2, -2, -2, -4, -2, -2, -2, -3, -1, -1, -1, -1, 0, 0, 0, 0],
];

pub const D4_PRODUCT: [[i64; 16]; 8] = [
    [0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0],
];

/// Mutation sequence for `(A2, i = 1, r = 0)`.
pub const A2_SEQUENCE: [(usize, i64); 5] = [(1, 4), (1, 2), (2, 3), (2, 1), (1, 4)];

/// Mutation sequence for `(D4, i = 1, r = 0)`.
pub const D4_SEQUENCE: [(usize, i64); 21] = [
    (1, 6),
    (1, 4),
    (1, 2),
    (3, 6),
    (3, 4),
    (3, 2),
    (4, 6),
    (4, 4),
    (4, 2),
    (2, 5),
    (2, 3),
    (2, 1),
    (1, 6),
    (1, 4),
    (3, 6),
    (3, 4),
    (4, 6),
    (4, 4),
    (2, 5),
    (2, 3),
    (1, 6),
];

/// A monomial `Π z_{i,r}^e` given as `((i, r), e)` factors.
pub type MonomialSpec = &'static [((usize, i64), i32)];

/// Level window of the `A2` mutation example.
pub const A2_WINDOW: (i64, i64) = (-1, 6);

/// Cluster variables along the `A2` sequence, at `t = 1`: the variable at
/// `(1,4)` after one step, at `(1,2)` after two, at `(2,3)` after three, and
/// at `(1,4)` after all five. Every coefficient is `1`.
pub const A2_CLASSICAL: [(&str, usize, &[MonomialSpec]); 4] = [
    (
        "z(1)[1,4]",
        1,
        &[
            &[((1, 2), 1), ((1, 4), -1), ((2, 5), 1)],
            &[((1, 4), -1), ((1, 6), 1), ((2, 3), 1)],
        ],
    ),
    (
        "z(1)[1,2]",
        2,
        &[
            &[((1, 0), 1), ((1, 4), -1), ((2, 5), 1)],
            &[
                ((1, 0), 1),
                ((1, 2), -1),
                ((1, 4), -1),
                ((1, 6), 1),
                ((2, 3), 1),
            ],
            &[((1, 2), -1), ((1, 6), 1), ((2, -1), 1)],
        ],
    ),
    (
        "z(1)[2,3]",
        3,
        &[
            &[((2, 1), 1), ((2, 3), -1)],
            &[((1, 2), 1), ((1, 4), -1), ((2, 5), 1), ((2, 3), -1)],
            &[((1, 4), -1), ((1, 6), 1)],
        ],
    ),
    (
        "z(2)[1,4]",
        5,
        &[
            &[((1, 0), 1), ((1, 2), -1)],
            &[((1, 2), -1), ((1, 4), 1), ((2, 1), 1), ((2, 3), -1)],
            &[((2, 3), -1), ((2, 5), 1)],
        ],
    ),
];
