//! Reference data shared by the integration tests and the CLI acceptance run.
#![allow(dead_code)]

pub type T3 = [i64; 3];

/// Initial triples for every parameter that has any.
pub const INITIAL: [(u64, &[T3]); 8] = [
    (9, &[[1, 1, 1]]),
    (8, &[[1, 1, 2]]),
    (6, &[[1, 2, 3]]),
    (5, &[[1, 4, 5]]),
    (4, &[[2, 2, 4]]),
    (3, &[[2, 4, 6], [3, 3, 3]]),
    (2, &[[3, 6, 9], [4, 4, 8]]),
    (1, &[[5, 20, 25], [6, 12, 18], [8, 8, 16], [9, 9, 9]]),
];

/// Drawn mutation trees: parameter, depth and edges.
pub const TREES: [(u64, usize, &[(T3, T3)]); 4] = [
    (
        9,
        4,
        &[
            ([1, 1, 1], [1, 1, 4]),
            ([1, 1, 4], [1, 4, 25]),
            ([1, 4, 25], [1, 25, 169]),
            ([1, 4, 25], [4, 25, 841]),
            ([1, 25, 169], [1, 169, 1156]),
            ([1, 25, 169], [25, 169, 37636]),
            ([4, 25, 841], [25, 841, 187489]),
            ([4, 25, 841], [4, 841, 28561]),
        ],
    ),
    (
        8,
        3,
        &[
            ([1, 1, 2], [1, 2, 9]),
            ([1, 2, 9], [1, 9, 50]),
            ([1, 2, 9], [2, 9, 121]),
            ([1, 9, 50], [1, 50, 289]),
            ([1, 9, 50], [9, 50, 3481]),
            ([2, 9, 121], [2, 121, 1681]),
            ([2, 9, 121], [9, 121, 8450]),
        ],
    ),
    (
        6,
        3,
        &[
            ([1, 2, 3], [2, 3, 25]),
            ([1, 2, 3], [1, 3, 8]),
            ([2, 3, 25], [3, 25, 392]),
            ([2, 3, 25], [2, 25, 243]),
            ([1, 3, 8], [3, 8, 121]),
            ([1, 3, 8], [1, 8, 27]),
            ([1, 8, 27], [1, 27, 98]),
            ([1, 8, 27], [8, 27, 1225]),
            ([3, 8, 121], [3, 121, 1922]),
            ([3, 8, 121], [8, 121, 5547]),
            ([2, 25, 243], [2, 243, 2401]),
            ([2, 25, 243], [25, 243, 35912]),
            ([3, 25, 392], [3, 392, 6241]),
            ([3, 25, 392], [25, 392, 57963]),
        ],
    ),
    (
        5,
        3,
        &[
            ([1, 4, 5], [1, 5, 9]),
            ([1, 4, 5], [4, 5, 81]),
            ([1, 5, 9], [1, 9, 20]),
            ([1, 5, 9], [5, 9, 196]),
            ([4, 5, 81], [4, 81, 1445]),
            ([4, 5, 81], [5, 81, 1849]),
            ([5, 81, 1849], [81, 1849, 744980]),
            ([5, 81, 1849], [5, 1849, 42436]),
            ([4, 81, 1445], [81, 1445, 582169]),
            ([4, 81, 1445], [4, 1445, 25921]),
            ([5, 9, 196], [9, 196, 8405]),
            ([5, 9, 196], [5, 196, 4489]),
            ([1, 9, 20], [9, 20, 841]),
            ([1, 9, 20], [1, 20, 49]),
        ],
    ),
];

pub const SERIES: [&str; 24] = [
    "9-1-0", "8-1-0", "6-1-0", "5-1-0", "4-2-1", "3-3-2", "3-2-1", "2-4-1", "2-4-3", "2-3-1", "2-3-2", "1-9-2", "1-9-5",
    "1-9-8", "1-8-1", "1-8-3", "1-8-5", "1-8-7", "1-6-1", "1-6-5", "1-5-1", "1-5-2", "1-5-3", "1-5-4",
];

/// Members of one node that are pairwise isomorphic: `(mu, u, etas)`.
pub const EXCEPTION_SETS: [(u64, T3, &[i64]); 3] =
    [(9, [1, 1, 1], &[2, 5, 8]), (9, [1, 1, 4], &[5, 8]), (8, [1, 1, 2], &[3, 7])];

/// Generator and degree matrix pairs `(mu, P, u, eta)`.
pub const PAIRS: [(u64, [T3; 2], T3, i64); 21] = [
    (1, [[1, 1, -2], [0, 1, -1]], [1, 1, 1], 0),
    (1, [[1, 1, -1], [0, -2, 1]], [1, 1, 2], 0),
    (1, [[1, 1, -1], [0, -3, 2]], [1, 2, 3], 0),
    (1, [[1, 1, -1], [0, -5, 4]], [1, 4, 5], 0),
    (2, [[1, 1, -1], [0, -4, 2]], [1, 1, 2], 1),
    // printed with -1 in the top right corner
    (3, [[1, 1, -2], [0, -3, 3]], [1, 1, 1], 2),
    (2, [[1, 1, -1], [0, -6, 4]], [1, 2, 3], 1),
    (4, [[1, 1, -1], [0, -8, 4]], [1, 1, 2], 1),
    // printed with -3 in the top right corner
    (4, [[2, 2, -2], [1, -3, 1]], [1, 1, 2], 3),
    (3, [[1, 1, -1], [0, -9, 6]], [1, 2, 3], 1),
    (3, [[3, 3, -3], [1, -2, 1]], [1, 2, 3], 2),
    (9, [[3, 3, -6], [1, -2, 1]], [1, 1, 1], 2),
    (8, [[1, 1, -1], [0, -16, 8]], [1, 1, 2], 1),
    (8, [[4, 4, -4], [1, -3, 1]], [1, 1, 2], 3),
    // printed with 0 in the bottom left corner
    (8, [[2, 2, -2], [1, -7, 3]], [1, 1, 2], 5),
    (6, [[1, 1, -1], [0, -18, 12]], [1, 2, 3], 1),
    (6, [[3, 3, -3], [2, -4, 2]], [1, 2, 3], 5),
    (5, [[1, 1, -1], [0, -25, 20]], [1, 4, 5], 1),
    (5, [[5, 5, -5], [3, -2, 1]], [1, 4, 5], 2),
    (5, [[5, 5, -5], [1, -4, 3]], [1, 4, 5], 3),
    (5, [[5, 5, -5], [2, -3, 2]], [1, 4, 5], 4),
];

/// The three pairs above as printed, none of which corresponds.
pub const MISPRINTS: [(u64, [T3; 2], T3, i64); 3] = [
    (3, [[1, 1, -1], [0, -3, 3]], [1, 1, 1], 2),
    (4, [[2, 2, -3], [1, -3, 1]], [1, 1, 2], 3),
    (8, [[2, 2, -2], [0, -7, 3]], [1, 1, 2], 5),
];

pub struct Example {
    pub mu: u64,
    pub u: T3,
    pub etas: &'static [i64],
    pub generators: &'static [[T3; 2]],
    pub iotas: &'static [T3],
    pub signs: &'static [&'static str],
    pub curves: &'static [[usize; 3]],
    /// Groups of isomorphic members, as indices into `etas`.
    pub classes: &'static [&'static [usize]],
}

pub const EXAMPLES: [Example; 5] = [
    Example {
        mu: 9,
        u: [1, 1, 1],
        etas: &[2, 5, 8],
        generators: &[[[3, 3, -6], [1, -2, 1]], [[1, 1, -2], [0, -9, 9]], [[3, 3, -6], [2, -1, -1]]],
        iotas: &[[3, 1, 3], [3, 3, 1], [1, 3, 3]],
        signs: &["+++", "+++", "+++"],
        curves: &[[2, 8, 2], [2, 2, 8], [8, 2, 2]],
        classes: &[&[0, 1, 2]],
    },
    Example {
        mu: 9,
        u: [1, 1, 4],
        etas: &[2, 5, 8],
        generators: &[[[2, 2, -1], [1, -17, 4]], [[6, 6, -3], [1, -5, 1]], [[6, 6, -3], [5, -1, -1]]],
        iotas: &[[3, 3, 2], [3, 1, 6], [1, 3, 6]],
        signs: &["+++", "+++", "+++"],
        curves: &[[2, 2, 9], [2, 8, 5], [8, 2, 5]],
        classes: &[&[0], &[1, 2]],
    },
    Example {
        mu: 9,
        u: [1, 4, 25],
        etas: &[2, 5, 8],
        generators: &[[[15, 15, -3], [2, -13, 2]], [[5, 5, -1], [1, -44, 7]], [[15, 15, -3], [7, -8, 1]]],
        iotas: &[[3, 2, 15], [3, 6, 5], [1, 6, 15]],
        signs: &["+++", "+++", "+++"],
        curves: &[[2, 9, 8], [2, 5, 12], [8, 5, 8]],
        classes: &[&[0], &[1], &[2]],
    },
    Example {
        mu: 8,
        u: [1, 1, 2],
        etas: &[1, 3, 5, 7],
        generators: &[
            [[1, 1, -1], [0, -16, 8]],
            [[4, 4, -4], [1, -3, 1]],
            [[2, 2, -2], [1, -7, 3]],
            [[4, 4, -4], [3, -1, -1]],
        ],
        iotas: &[[4, 4, 1], [2, 1, 4], [4, 4, 2], [1, 2, 4]],
        signs: &["--+", "+++", "--+", "+++"],
        curves: &[[1, 1, 15], [2, 7, 3], [3, 3, 4], [7, 2, 3]],
        classes: &[&[0], &[1, 3], &[2]],
    },
    Example {
        mu: 8,
        u: [1, 9, 2],
        etas: &[1, 3, 5, 7],
        generators: &[
            [[2, 2, -10], [1, -7, 31]],
            [[4, 4, -20], [3, -1, 3]],
            [[1, 1, -5], [0, -16, 72]],
            [[4, 4, -20], [1, -3, 13]],
        ],
        iotas: &[[4, 12, 2], [2, 3, 4], [4, 12, 1], [1, 6, 4]],
        signs: &["--+", "+++", "--+", "+++"],
        curves: &[[1, 11, 4], [2, 9, 3], [3, 3, 15], [7, 6, 3]],
        classes: &[&[0], &[1], &[2], &[3]],
    },
];

/// Constellations as multipliers of `x` with `u = (xi0 x0^2, xi1 x1^2, xi2 x2^2)`,
/// and the T-flag column.
pub fn constellations(id: &str) -> (&'static [T3], &'static str) {
    match id {
        "9-1-0" | "8-1-0" | "6-1-0" | "5-1-0" | "4-2-1" | "3-3-2" => (&[[1, 1, 1]], "+++"),
        "3-2-1" => (&[[1, 2, 1]], "+++"),
        "2-4-1" => (&[[2, 2, 1]], "+++"),
        "2-4-3" => (&[[1, 1, 2]], "+++"),
        "2-3-1" => (&[[3, 3, 3], [3, 3, 1]], "--+"),
        "2-3-2" => (&[[1, 1, 3]], "+++"),
        "1-9-2" | "1-9-5" => (&[[3, 1, 3], [3, 3, 1]], "+++"),
        "1-9-8" => (&[[1, 3, 3]], "+++"),
        "1-8-1" | "1-8-5" => (&[[4, 4, 1], [4, 4, 2]], "--+"),
        "1-8-3" => (&[[2, 1, 4]], "+++"),
        "1-8-7" => (&[[1, 2, 4]], "+++"),
        "1-6-1" => (&[[3, 6, 1], [3, 6, 3]], "--+"),
        "1-6-5" => (&[[1, 2, 3]], "+++"),
        "1-5-1" | "1-5-2" | "1-5-3" => (&[[5, 5, 1], [5, 5, 5]], "--+"),
        "1-5-4" => (&[[1, 1, 5]], "+++"),
        _ => panic!("unknown series {}", id),
    }
}

pub const EXACTLY_ONE_T: [&str; 7] = ["2-3-1", "1-8-1", "1-8-5", "1-6-1", "1-5-1", "1-5-2", "1-5-3"];

/// Series listed as self-adjacent at their base node.
pub const SELF_ADJACENT: [&str; 16] = [
    "8-1-0", "4-2-1", "2-4-1", "2-4-3", "1-8-1", "1-8-3", "1-8-5", "6-1-0", "3-2-1", "2-3-1", "2-3-2", "1-6-1", "1-6-5",
    "5-1-0", "1-5-1", "1-5-4",
];

/// Series listed as non-toric self-adjacent.
pub const LISTED_NON_TORIC: [&str; 6] = ["2-4-3", "1-8-3", "1-8-5", "1-6-5", "1-5-1", "1-5-4"];

/// What the construction and a direct K*-data search actually give.
pub const COMPUTED_NON_TORIC: [&str; 6] = ["2-4-3", "2-3-2", "1-8-3", "1-8-5", "1-6-5", "1-5-4"];

/// Adjacency figures. Nodes are written `u0,u1,u2;eta` or, where the eta is
/// supplied separately, `u0,u1,u2`.
pub mod figures {
    pub const TREE6_LEVELS: [&str; 15] = [
        "1,2,3;1", "1,8,3;1", "25,2,3;1", "1,8,27;1", "121,8,3;1", "25,2,243;1", "25,392,3;1", "1,98,27;1",
        "1225,8,27;1", "121,8,5547;1", "121,1922,3;1", "25,35912,243;1", "2401,2,243;1", "25,392,57963;1",
        "6241,392,3;1",
    ];
    pub const TREE6_EDGES: [(&str, &str, bool); 4] = [
        ("1,8,3;1", "1,8,27;1", false),
        ("25,2,3;1", "25,2,243;1", false),
        ("121,8,3;1", "121,8,5547;1", false),
        ("25,392,3;1", "25,392,57963;1", false),
    ];

    pub const TREE8_LEVELS: [&str; 16] = [
        "1,1,2", "1,9,2", "1,9,50", "9,121,2", "1,289,50", "9,3481,50", "9,121,8450", "121,1681,2", "1,289,1682",
        "289,114921,50", "9,3481,243602", "3481,1385329,50", "9,591361,8450", "121,8162449,8450", "121,1681,1623602",
        "1681,23409,2",
    ];
    pub const TREE8_BLACK: [(&str, &str); 5] = [
        ("1,9,2", "1,9,50"),
        ("9,121,2", "9,121,8450"),
        ("1,289,50", "1,289,1682"),
        ("9,3481,50", "9,3481,243602"),
        ("121,1681,2", "121,1681,1623602"),
    ];
    pub const T18_EXTRA_BLACK: [(&str, &str); 2] = [("1,9,50", "1,289,50"), ("9,121,8450", "9,591361,8450")];
    pub const T18_RED: [(&str, &str); 7] = [
        ("1,9,2", "9,121,2"),
        ("1,9,50", "9,3481,50"),
        ("9,121,2", "121,1681,2"),
        ("1,289,50", "289,114921,50"),
        ("9,3481,50", "3481,1385329,50"),
        ("9,121,8450", "121,8162449,8450"),
        ("121,1681,2", "1681,23409,2"),
    ];

    pub const TREE5_LEVELS: [&str; 15] = [
        "1,4,5", "1,9,5", "4,81,5", "1,9,20", "9,196,5", "4,81,1445", "81,1849,5", "1,49,20", "9,841,20", "196,4489,5",
        "9,196,8405", "4,25921,1445", "81,582169,1445", "1849,42436,5", "81,1849,744980",
    ];
    pub const TREE5_PAIRS: [(&str, &str); 4] =
        [("1,9,5", "1,9,20"), ("4,81,5", "4,81,1445"), ("9,196,5", "9,196,8405"), ("81,1849,5", "81,1849,744980")];

    /// Reduced parameter and the `(a, mu)` families whose graphs match its tree.
    pub const ISOMORPHIC_TO_TREE: [(u64, &[(u64, u64)]); 4] = [
        (9, &[(9, 1), (3, 3)]),
        (8, &[(8, 1), (4, 2)]),
        (6, &[(6, 1), (3, 2), (2, 3), (1, 6)]),
        (5, &[(5, 1), (1, 5)]),
    ];
}
