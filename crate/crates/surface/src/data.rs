//! Embedded printed data: generator actions, seed relations, the H-form,
//! the line parametrization, and the equation sets of the related
//! surfaces. Transcribed once, pinned by a content hash, and guarded by
//! structural tests (homogeneity, group orders, character traces,
//! stability of spans).

/// Action of G on (x1..x6, y1..y7): images of the variables under the two
/// standard generators.
pub const G_XY_GEN1: [&str; 13] = [
    "x2",
    "x1",
    "x4",
    "x3",
    "-x5",
    "(-2 + i) x1 - (2 - i) x2 + i x3 + i x4 - x6",
    "y2",
    "y1",
    "y4",
    "y3",
    "(1 + i) y1 - (1 + i) y2 - y3 + y4 + y5",
    "y6",
    "i y3 - i y4 + y7",
];

pub const G_XY_GEN2: [&str; 13] = [
    "x3",
    "-i x1 - x3",
    "x5",
    "x6",
    "-i x1 - i x2 - x3",
    "x1 + (1 - i) x2 - i x3 - x4 - x5 + x6",
    "y3",
    "y1",
    "y5",
    "y6",
    "y7",
    "-i y2 - i y3 - y4 - y6 - i y7",
    "-y1 + y2 + y3 - y5 + y7",
];

/// Action of the chosen G21 < G on (x1..x6, y1..y7): generators of order 7
/// and 3.
pub const G21_XY_GEN1: [&str; 13] = [
    "-i x1 - x3",
    "x3",
    "x6",
    "x5",
    "i x1 + i x2 + x3",
    "2 i x1 - (1 - i) x2 + i x3 + x4 + (1 + i) x5 - (1 - i) x6",
    "y1",
    "y3",
    "y6",
    "y5",
    "(-1 - i) y1 + (1 + i) y3 - y5 + y6 + y7",
    "-i y2 - i y3 - y4 - y6 - i y7",
    "-y1 + y2 + y3 - (1 - i) y5 - i y6 + y7",
];

pub const G21_XY_GEN2: [&str; 13] = [
    "(-1 - i) x1 - x2 - (1 - i) x3 - i x4 + x5 - x6",
    "i x1 + (1 + i) x2 + x3 - i x5",
    "-x1 - i x2 - i x3 - (1 - i) x4 - 2 x5",
    "(1 + i) x1 + x2 + x3 + i x6",
    "-i x2 - (1 + i) x3 + i x4 - (1 - i) x5 - i x6",
    "2 x1 + x2 + (1 - i) x3 + x6",
    "y1",
    "i y1 - i y2 - 2 i y3 - y4 + (1 + i) y5 - y6 - (1 + 2 i) y7",
    "-y3 + i y4 + i y6 - (1 - i) y7",
    "-y1 + (1 - i) y2 - 2 i y3 - y4 + i y5 - y6 - i y7",
    "y4",
    "(1 + i) y1 - (1 + i) y2 - y3 + y4 + y5",
    "(1 + i) y2 + (2 + i) y3 + (2 - i) y4 - y5 + (1 - 2 i) y6 + (2 + i) y7",
];

/// Action of G on (z1..z14), same two generators.
pub const G_Z_GEN1: [&str; 14] = [
    "z1",
    "z4 - z5 + z6",
    "z1 - z3",
    "z2 - z5 + z6",
    "z1 - z5",
    "z1 - z6",
    "z12 - z4 + z5 - z6",
    "-z11 + z13",
    "-z1 + z10 - z2 + z3 + z5 + z9",
    "-z10 + z2 + z4 - z5 + z6",
    "-z1 - z11",
    "z2 + z7",
    "-z1 - z11 + z8",
    "z10 + z11 + z14 - z2 + z3",
];

pub const G_Z_GEN2: [&str; 14] = [
    "z2 + z3",
    "-z2 - z7 + z9",
    "z1 + z2",
    "-z2 - z5 - z7 - z8",
    "-z7",
    "z2 + z6",
    "z10 + z7",
    "-z12",
    "z11 + z7",
    "z14 - z2 - z7",
    "-z12 - z2 + z4",
    "-z8",
    "-z12 - z2 + z4 - z5",
    "z12 + z13 - z4",
];

/// Action of G21 on (z1..z14).
pub const G21_Z_GEN1: [&str; 14] = [
    "z2 + z3",
    "-z5 + z6 - z8",
    "-z1 + z3",
    "z6 + z9",
    "z2 + z3 + z7",
    "z3 - z6",
    "z5 - z6",
    "-z5",
    "z1 + z11 + z14 - z3 - z9",
    "-z14 - z5 + z6 - z8 + z9",
    "z12 - z3 - z4",
    "z10 - z2 + z9",
    "-z3 - z4",
    "z1 + z13 + z14 - z9",
];

pub const G21_Z_GEN2: [&str; 14] = [
    "z11 + z14 - z3 - z4 + z6 - z9",
    "-z1 - z10 - z13 - z14 + z4 + z5 - z7 + z9",
    "z12 + z14 - z3 - z4 + z5 + z8 - z9",
    "-z10 - z13 - z14 + z2 + z4 + z9",
    "z11 - z13 - z3 + z6",
    "-z3 - z4 - z9",
    "z1 + z10 + z13 - z4 - z5 - z8",
    "-z1 - z11 + z5 + z8",
    "z13 + z3 - z5 - z8",
    "-z1 - z10 - z11 - z13 - z14 + z4 + z5 - z7 + z8 + z9",
    "-z11 + z4 + z8",
    "-z11 - z6 + z8",
    "-z11 - z14 + z4 + z9",
    "z11 + z3 - z5 - 2 z8",
];

/// The two seed quadrics whose G-translates span the 35-dimensional
/// relation space: the diagonal one and the bilinear one.
pub const SEED_DIAGONAL: &str = "\
x1^2 + 2 (4 y1^2 + (2 i) y1 y2 - (2 - 2 i) y2^2 - 2 y3^2 + (3 - 5 i) y3 y4 + \
(1 - 2 i) y4^2 - (2 - 2 i) y3 y5 + (3 + 3 i) y4 y5 - (2 - 2 i) y5^2 + \
(1 + 5 i) y3 y6 - 12 y4 y6 - (1 + 5 i) y5 y6 + (1 + 2 i) y6^2 + \
(1 + 5 i) y3 y7 + 4 y4 y7 - (1 - 3 i) y5 y7 + (2 - 12 i) y6 y7 + \
(1 + 2 i) y7^2 + (1 - i) y1 ((1 + i) y3 + (1 - 4 i) y4 + (1 - 3 i) y5 + \
y6 + y7) + (1 - i) y2 ((5 + i) y3 + 3 y4 + (3 - i) y5 - (6 + 7 i) y6 + \
(2 - 3 i) y7))";

pub const SEED_BILINEAR: &str = "\
(1 - i) ((-10 - 6 i) x3 y1 - (4 + 10 i) x4 y1 + (4 - 3 i) x5 y1 + \
(4 + i) x6 y1 + (5 - 9 i) x3 y2 + (2 - 4 i) x4 y2 + x5 y2 - \
(2 + 2 i) x6 y2 - (10 + 9 i) x3 y3 - (1 + i) x4 y3 + (1 + 6 i) x5 y3 + \
(1 + 10 i) x6 y3 + (2 - 6 i) x3 y4 - (1 - 5 i) x4 y4 - 8 x5 y4 + \
(1 + 7 i) x6 y4 + (2 + 9 i) x3 y5 - (4 - 2 i) x4 y5 + (1 + 3 i) x5 y5 - \
(5 + 2 i) x6 y5 - (10 - 3 i) x3 y6 + (2 + 2 i) x4 y6 + 4 x5 y6 + \
(13 - 5 i) x6 y6 + x1 ((3 + 2 i) y1 + (3 + 2 i) y2 - \
i ((13 + 3 i) y3 + (1 + 3 i) y4 + y5 + (1 - 12 i) y6 - (2 + 3 i) y7)) + \
x2 ((13 - 2 i) y1 + (1 + 7 i) y2 + (7 + 7 i) y3 - (2 + 2 i) y4 - \
(5 + 2 i) y5 + (7 - 2 i) y6 - (2 + 5 i) y7) + (5 + 9 i) x3 y7 - \
(4 - 2 i) x4 y7 + (1 - 6 i) x5 y7 - (2 - i) x6 y7)";

/// The G21-invariant canonical form: the linear equation of H.
pub const H_FORM: &str = "7 y1 + y2 + y3 - (2 + 3 i) y4 - (2 + 3 i) y5 + y6 + y7";

/// Parametrization of one of the 126 lines on S, per coordinate as a
/// linear polynomial in (u, v).
pub const LINE_COORDS: [&str; 13] = [
    "v",
    "u",
    "i v + (1 - i) u",
    "(-1 - 2 i) v + 2 i u",
    "(2 - i) v - 2 u",
    "(-2 + 2 i) v + 3 u",
    "(2 + 2 i) v - (1 + 3 i) u",
    "(-1 - i) v + 1/2 (1 + 3 i) u",
    "1/2 (-3 - i) v + 1/2 (3 + 3 i) u",
    "1/2 (1 - i) v - u",
    "2 v - (2 + i) u",
    "1/2 (-3 + i) v + 1/2 (3 + i) u",
    "1/2 (-1 - i) v + 1/2 (1 + i) u",
];

/// Equations of Z1 in WP(1,2,2,2,3,3,3,3) with coordinates W0..W7.
pub const Z1_EQUATIONS: [&str; 11] = [
    "-2 W1^2 + W2 W3 + W0 W7",
    "16 W0^5 + 152 W0^3 W1 + 21 W0 W1^2 + 2 W0 W2 W3 - W0 W3^2 - 16 W2 W5 + 432 W0^2 W6 + 54 W1 W6",
    "40 W0^3 W1 - 20 W0 W1^2 + 4 W0 W2^2 + 10 W0 W2 W3 - 108 W3 W4 + 432 W0^2 W6 + 216 W1 W6 - W1 W7",
    "8 W0^3 W2 + 68 W0 W1 W2 - 6 W0 W1 W3 - 432 W0^2 W4 - 216 W1 W4 - 512 W0^2 W5 - 64 W1 W5 + 216 W2 W6 + 108 W3 W6 - W2 W7",
    "-1280 W0^6 - 10624 W0^4 W1 + 7776 W0^2 W1^2 + 320 W1^3 - 80 W1 W2^2 + 80 W0^2 W3^2 - 48 W1 W3^2 + 3456 W0 W2 W4 - 46656 W4^2 + 512 W0 W3 W5 - 4096 W5^2 - 34560 W0^3 W6 - 1728 W0 W1 W6 + 128 W0^3 W7 + W7^2",
    "224 W0^4 W1 + 976 W0^2 W1^2 + 48 W1^3 - 18 W1 W2^2 - 2 W1 W3^2 + 1080 W0 W2 W4 - 11664 W4^2 + 128 W0 W3 W5 - 3456 W0 W1 W6 - 8 W0^3 W7 + 17 W0 W1 W7 + 54 W6 W7",
    "64 W0^6 + 640 W0^4 W1 + 209 W0^2 W1^2 + 8 W1^3 - W0^2 W2^2 - 4 W1 W2^2 - 4 W0^2 W3^2 + 324 W0 W2 W4 - 2916 W4^2 + 1728 W0^3 W6 - 108 W0 W1 W6 + 2916 W6^2 - 8 W0^3 W7 + 2 W0 W1 W7",
    "-160 W0^6 - 1520 W0^4 W1 - 334 W0^2 W1^2 - 8 W1^3 + W1 W2^2 + 10 W0^2 W3^2 + W1 W3^2 + 1728 W4 W5 - 4320 W0^3 W6 - 1188 W0 W1 W6 + 20 W0^3 W7 + 4 W0 W1 W7",
    "-32 W0^4 W2 - 256 W0^2 W1 W2 - 34 W1^2 W2 + 2 W2^3 + 16 W0^4 W3 + 176 W0^2 W1 W3 + 28 W1^2 W3 - W3^3 + 1728 W0^3 W4 + 1080 W0 W1 W4 + 2048 W0^3 W5 + 512 W0 W1 W5 - 648 W0 W2 W6 - W0 W2 W7 - 2 W0 W3 W7 + 54 W4 W7 + 16 W5 W7",
    "32 W0^4 W2 + 316 W0^2 W1 W2 - 32 W1^2 W2 + 2 W2^3 + 8 W0^2 W1 W3 + 20 W1^2 W3 - 432 W0 W1 W4 - 192 W0 W1 W5 + 1080 W0 W2 W6 + 3456 W5 W6 - 9 W0 W2 W7 + 2 W0 W3 W7 + 54 W4 W7",
    "-16 W0^4 W2 - 142 W0^2 W1 W2 - 8 W1^2 W2 + W2^3 - 8 W0^2 W1 W3 + 2 W1^2 W3 + 1836 W0 W1 W4 - 256 W0^3 W5 - 128 W0 W1 W5 - 324 W0 W2 W6 + 5832 W4 W6",
];

/// The linear form cutting 2C on Z.
pub const CURVE_LINEAR: &str = "U0";

/// The eighteen quadrics generating the ideal of the curve C together
/// with U0.
pub const CURVE_QUADRICS: [&str; 18] = [
    "-8 U1^2 - 2 U1 U2 + 2 U2^2 - 2 U1 U3 + 3 U4 U9 + 6 U6 U9",
    "16 U1^2 + 4 U2^2 - 4 U3^2 + 3 U6 U7",
    "20 U1^2 + 12 U1 U2 + 8 U1 U3 + 2 U3^2 + U5 U9",
    "-4 U1^2 - 8 U1 U2 + 6 U2^2 - 4 U1 U3 + U5 U8",
    "4 U1^2 + 2 U1 U2 - 2 U2^2 - 2 U1 U3 + 2 U3^2 + 3 U4 U8",
    "-2 U1^2 + U2 U3",
    "-6 U1 U4 - 6 U3 U4 - U3 U5 + 12 U1 U6 - 12 U2 U6 + 6 U8 U9",
    "-36 U1 U4 - 12 U3 U4 - 4 U1 U5 - 2 U2 U5 - 4 U3 U5 + 24 U1 U6 + 3 U7 U9",
    "36 U1 U4 + 2 U2 U5 + 4 U3 U5 - 24 U1 U6 - 24 U2 U6 + 3 U7 U8",
    "6 U1 U4 + 6 U3 U4 + U3 U5 + 12 U3 U6",
    "6 U1 U4 + 3 U2 U4 + U1 U5 + 12 U1 U6",
    "18 U6^2 - 2 U1 U8 + 3 U2 U8 - 6 U1 U9 + 4 U2 U9 + 3 U3 U9",
    "U5 U6 + 2 U1 U8 + 2 U1 U9 + 2 U2 U9",
    "U5^2 + 12 U1 U7 + 3 U2 U7 + 6 U3 U7 - 16 U1 U8 + 48 U1 U9 - 4 U2 U9",
    "9 U4 U6 + 4 U1 U8 + 6 U1 U9 - 5 U2 U9 - 3 U3 U9",
    "3 U4 U5 - 3 U1 U7 - 3 U3 U7 - 8 U1 U8 - 36 U1 U9 + 4 U2 U9",
    "18 U4^2 + 3 U3 U7 - 16 U1 U8 + 8 U2 U9 + 12 U3 U9",
    "2 U1 U8 + U3 U8 + 2 U1 U9 - U2 U9",
];
