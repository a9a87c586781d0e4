//! Hard-coded literals for the length-48 moonshine-frame worked example.
//! Everything downstream is computed; these are the published reference
//! values the pipeline asserts against.

/// Generator matrix of RM(1,4), the printed form.
pub const RM14_ROWS: [&str; 5] = [
    "1111111111111111",
    "1111111100000000",
    "1111000011110000",
    "1100110011001100",
    "1010101010101010",
];

/// The order-4 frame involution datum xi (blocks of 8):
/// 1100 0000 1100 0000 | 0110 0000 0110 0000 | 1010 0000 1010 0000.
pub const XI: &str = "110000001100000001100000011000001010000010100000";

/// kappa = (1000 0000 1000 0000 0...0): supports {1, 9} (1-based).
pub const KAPPA: &str = "100000001000000000000000000000000000000000000000";

/// Generator matrix of (C0)_xi, six rows of 48.
pub const C0_XI_ROWS: [&str; 6] = [
    "110000001100000000000000000000000000000000000000",
    "000000000000000001100000011000000000000000000000",
    "000000000000000000000000000000001010000010100000",
    "100000001000000001000000010000000000000000000000",
    "100000001000000000000000000000001000000010000000",
    "110000000000000001100000000000001010000000000000",
];

/// The (alpha, alpha, alpha) generators of D0: the first-block words.
pub const D0_TRIPLE_ALPHAS: [&str; 4] = [
    "1111111111111111",
    "1111000011110000",
    "1100110011001100",
    "1010101010101010",
];

/// Coset representative of D1 = (1^8 0^8)^3 + D0.
pub const D1_REP: &str = "111111110000000011111111000000001111111100000000";

/// W_D as (weight, coefficient) pairs.
pub const W_D: [(usize, u64); 5] = [(0, 1), (16, 3), (24, 120), (32, 3), (48, 1)];

/// W_{D + <xi>} as (weight, coefficient) pairs.
pub const W_D_XI: [(usize, u64); 9] = [
    (0, 1),
    (12, 2),
    (16, 3),
    (20, 30),
    (24, 184),
    (28, 30),
    (32, 3),
    (36, 2),
    (48, 1),
];

/// f = W_{D+<xi>} - W_D as (weight, coefficient) pairs.
pub const F_POLY: [(usize, u64); 5] = [(12, 2), (20, 30), (24, 64), (28, 30), (36, 2)];

/// The 24 supports (1-based pairs {i, i+8}) of the weight-2 words of
/// C0 + kappa.
pub fn weight2_supports() -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(24);
    for block in [0usize, 16, 32] {
        for i in 1..=8 {
            out.push((block + i, block + i + 8));
        }
    }
    out
}

/// Expected McKay-Thompson coefficients as (exponent-in-48ths, value):
/// q^{-1}: 1, q^0: 0, q^1: 276, q^2: 2048.
pub const MT_COEFFS: [(i64, i64); 4] = [(-48, 1), (0, 0), (48, 276), (96, 2048)];
