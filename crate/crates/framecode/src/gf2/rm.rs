use crate::gf2::{Codeword, LinearCode};

/// Reed-Muller code RM(r, m) of length 2^m: evaluations of degree-<= r
/// Boolean monomials.  The coordinate order matches the generator matrix
/// convention used for RM(1,4) in the length-48 frame data: coordinate j
/// carries the point with binary digits of j, and the degree-one generator
/// for variable i (1-based) is the indicator of "bit m-i of j is 0", so the
/// first generators read 1..10..0, 11110000..., 11001100..., 1010....
pub fn reed_muller(r: usize, m: usize) -> LinearCode {
    assert!(m as u32 <= 10, "length 2^m exceeds the ambient cap");
    assert!(r <= m);
    let n = 1usize << m;
    let mut rows = Vec::new();
    for subset in 0u32..1 << m {
        if subset.count_ones() as usize > r {
            continue;
        }
        let mut row = Codeword::zero(n);
        for j in 0..n {
            // product over i in subset of [bit m-i of j == 0]
            let mut val = true;
            for i in 1..=m {
                if subset >> (i - 1) & 1 == 1 && j >> (m - i) & 1 == 1 {
                    val = false;
                    break;
                }
            }
            if val {
                row.set(j, true);
            }
        }
        rows.push(row);
    }
    LinearCode::from_generators(n, rows).unwrap()
}
