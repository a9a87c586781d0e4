use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::gf2::{Codeword, LinearCode};

/// Exact weight enumerator W(x,y) = sum_w a_w x^{n-w} y^w of a linear code.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    len: usize,
    coeffs: Vec<BigUint>, // a_0 ..= a_n
}

impl WeightEnumerator {
    pub fn new(len: usize, coeffs: Vec<BigUint>) -> Self {
        assert_eq!(coeffs.len(), len + 1);
        WeightEnumerator { len, coeffs }
    }

    /// Builds from (weight, coefficient) pairs, all other coefficients zero.
    pub fn from_pairs(len: usize, pairs: &[(usize, u64)]) -> Self {
        let mut coeffs = vec![BigUint::zero(); len + 1];
        for &(w, a) in pairs {
            coeffs[w] = BigUint::from(a);
        }
        WeightEnumerator { len, coeffs }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeff(&self, w: usize) -> &BigUint {
        &self.coeffs[w]
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Total count sum_w a_w = |C| = 2^k; errors if not a power of two.
    pub fn dimension(&self) -> Result<usize> {
        let total: BigUint = self.coeffs.iter().sum();
        let bits = total.bits();
        if bits == 0 || total != BigUint::one() << (bits - 1) {
            return Err(Error::Internal(format!(
                "enumerator total {total} is not a power of two"
            )));
        }
        Ok(bits as usize - 1)
    }

    /// Nonzero terms as (weight, coefficient) pairs.
    pub fn terms(&self) -> Vec<(usize, BigUint)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(w, a)| (w, a.clone()))
            .collect()
    }
}

impl std::fmt::Debug for WeightEnumerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (w, a) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{a}*x^{}y^{}", self.len - w, w)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl LinearCode {
    /// Exact weight enumerator by direct enumeration of all 2^k codewords.
    ///
    /// With the `parallel` feature the enumeration splits over prefix
    /// combinations of the leading basis rows and runs Gray-code scans per
    /// chunk; the sequential fallback is a single Gray-code scan.
    pub fn weight_enumerator(&self, budgets: &Budgets) -> Result<WeightEnumerator> {
        budgets.check_enumeration("weight enumerator", 1u128 << self.dim().min(127))?;
        #[cfg(feature = "parallel")]
        let counts = {
            let k = self.dim();
            let t = k.saturating_sub(14).min(8);
            if t == 0 {
                gray_counts(self, &Codeword::zero(self.len()), t)
            } else {
                use rayon::prelude::*;
                (0u64..1 << t)
                    .into_par_iter()
                    .map(|prefix| {
                        let mut start = Codeword::zero(self.len());
                        for (i, b) in self.basis().iter().take(t).enumerate() {
                            if prefix >> i & 1 == 1 {
                                start.xor_assign(b);
                            }
                        }
                        gray_counts(self, &start, t)
                    })
                    .reduce(
                        || vec![0u64; self.len() + 1],
                        |mut a, b| {
                            for (x, y) in a.iter_mut().zip(b) {
                                *x += y;
                            }
                            a
                        },
                    )
            }
        };
        #[cfg(not(feature = "parallel"))]
        let counts = gray_counts(self, &Codeword::zero(self.len()), 0);
        Ok(WeightEnumerator::new(
            self.len(),
            counts.into_iter().map(BigUint::from).collect(),
        ))
    }

    /// Serial reference implementation, kept callable for benchmarking the
    /// parallel kernel against it.
    pub fn weight_enumerator_serial(&self, budgets: &Budgets) -> Result<WeightEnumerator> {
        budgets.check_enumeration("weight enumerator", 1u128 << self.dim().min(127))?;
        let counts = gray_counts(self, &Codeword::zero(self.len()), 0);
        Ok(WeightEnumerator::new(
            self.len(),
            counts.into_iter().map(BigUint::from).collect(),
        ))
    }
}

/// Weight histogram of `start + span(basis rows from `skip` on)` by Gray-code
/// enumeration.
fn gray_counts(code: &LinearCode, start: &Codeword, skip: usize) -> Vec<u64> {
    let rows = &code.basis()[skip..];
    let mut counts = vec![0u64; code.len() + 1];
    let mut current = start.clone();
    counts[current.weight() as usize] += 1;
    for idx in 1u64..1 << rows.len() {
        current.xor_assign(&rows[idx.trailing_zeros() as usize]);
        counts[current.weight() as usize] += 1;
    }
    counts
}

/// MacWilliams transform: W_{C^perp}(x,y) = 2^{-k} W_C(x+y, x-y), expanded
/// with exact integer arithmetic via Krawtchouk polynomials.
pub fn macwilliams(w: &WeightEnumerator, k: usize) -> Result<WeightEnumerator> {
    let n = w.len();
    let binom = pascal(n);
    let mut out = Vec::with_capacity(n + 1);
    let denom = BigInt::one() << k;
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (wt, a) in w.terms() {
            // K_j(wt) = sum_i (-1)^i C(wt,i) C(n-wt, j-i)
            let mut kraw = BigInt::zero();
            for i in 0..=j.min(wt) {
                if j - i > n - wt {
                    continue;
                }
                let term = BigInt::from(binom[wt][i].clone() * &binom[n - wt][j - i]);
                if i % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            acc += BigInt::from(a) * kraw;
        }
        let (q, r) = num_integer::Integer::div_rem(&acc, &denom);
        if !r.is_zero() || q.sign() == num_bigint::Sign::Minus {
            return Err(Error::Internal(format!(
                "MacWilliams transform produced non-enumerator coefficient {acc}/{denom} at weight {j}"
            )));
        }
        out.push(q.to_biguint().unwrap());
    }
    Ok(WeightEnumerator::new(n, out))
}

fn pascal(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigUint::one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}
