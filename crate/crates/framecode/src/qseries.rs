//! Exact truncated Laurent series in q^{1/48} for code-VOA characters and
//! McKay-Thompson series.
//!
//! Exponents are stored as integers in units of 1/48 — the LCM of the 1/48
//! character prefactor and the half-odd powers q^{n+1/2}.  Every series
//! carries a truncation exponent T: coefficients are exact for all
//! exponents <= T and absent beyond it, and multiplication propagates
//! truncations honestly (a product is only claimed exact where both factors
//! determine it).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf2::WeightEnumerator;

/// Scale factor: exponent e means q^{e/48}.
pub const UNIT: i64 = 48;

/// Default truncation: exact through q^8.
pub const DEFAULT_TRUNC: i64 = 8 * UNIT;

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    trunc: i64,
    coeffs: BTreeMap<i64, BigInt>,
}

impl QSeries {
    pub fn zero(trunc: i64) -> Self {
        QSeries {
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(trunc: i64) -> Self {
        Self::monomial(0, BigInt::one(), trunc)
    }

    /// c * q^{e/48}.
    pub fn monomial(e: i64, c: BigInt, trunc: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() && e <= trunc {
            coeffs.insert(e, c);
        }
        QSeries { trunc, coeffs }
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Coefficient at exponent e (in 1/48 units); e must be within the
    /// truncation for the answer to be meaningful.
    pub fn coeff(&self, e: i64) -> Result<BigInt> {
        if e > self.trunc {
            return Err(Error::Precondition(format!(
                "exponent {e}/48 beyond truncation {}/48",
                self.trunc
            )));
        }
        Ok(self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero))
    }

    pub fn truncate(&self, trunc: i64) -> QSeries {
        assert!(trunc <= self.trunc, "cannot extend a truncated series");
        QSeries {
            trunc,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| e <= trunc)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs = BTreeMap::new();
        for (&e, c) in self.coeffs.iter().chain(&other.coeffs) {
            if e <= trunc {
                let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
                *entry += c;
            }
        }
        coeffs.retain(|_, c: &mut BigInt| !c.is_zero());
        QSeries { trunc, coeffs }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> QSeries {
        if k.is_zero() {
            return QSeries::zero(self.trunc);
        }
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    /// Truncation-honest product: the result is exact through
    /// min(T_a + min_b, T_b + min_a).
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let min_a = self.min_exponent();
        let min_b = other.min_exponent();
        let (Some(min_a), Some(min_b)) = (min_a, min_b) else {
            return QSeries::zero(self.trunc.min(other.trunc));
        };
        let trunc = (self.trunc + min_b).min(other.trunc + min_a);
        let mut coeffs = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e <= trunc {
                    let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
                    *entry += ca * cb;
                }
            }
        }
        coeffs.retain(|_, c: &mut BigInt| !c.is_zero());
        QSeries { trunc, coeffs }
    }

    pub fn pow(&self, k: u32) -> QSeries {
        let mut acc = QSeries {
            trunc: i64::MAX / 4,
            coeffs: [(0, BigInt::one())].into_iter().collect(),
        };
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division by an integer; errors if any coefficient resists.
    pub fn div_exact(&self, k: &BigInt) -> Result<QSeries> {
        let mut coeffs = BTreeMap::new();
        for (&e, c) in &self.coeffs {
            let (q, r) = num_integer::Integer::div_rem(c, k);
            if !r.is_zero() {
                return Err(Error::Internal(format!(
                    "inexact division of coefficient {c} at exponent {e}/48 by {k}"
                )));
            }
            coeffs.insert(e, q);
        }
        Ok(QSeries {
            trunc: self.trunc,
            coeffs,
        })
    }

    /// Nonzero terms as (exponent-in-48ths, coefficient), ascending.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c.clone())).collect()
    }

    /// Human-readable lines "coeff q^p" with p in lowest terms.
    pub fn lines(&self) -> Vec<String> {
        self.terms()
            .iter()
            .map(|(e, c)| format!("{c} q^{}", format_exponent(*e)))
            .collect()
    }
}

/// Formats e/48 in lowest terms.
pub fn format_exponent(e: i64) -> String {
    let g = num_integer::Integer::gcd(&e, &UNIT);
    let (num, den) = (e / g, UNIT / g);
    if den == 1 {
        format!("{num}")
    } else {
        format!("{num}/{den}")
    }
}

impl std::fmt::Debug for QSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}q^{}", format_exponent(e))?;
        }
        write!(f, " + O(q^{})", format_exponent(self.trunc + 1))
    }
}

/// q^{-1/48} * prod_{n>=0} (1 +- q^{n+1/2}), exact through T; equals
/// ch L(1/2,0) + ch L(1/2,1/2) for +, and the difference for -.
pub fn product_half_odd(sign_plus: bool, trunc: i64) -> QSeries {
    let mut acc = QSeries::monomial(-1, BigInt::one(), trunc);
    let mut n = 0i64;
    loop {
        let e = UNIT * n + UNIT / 2; // (n + 1/2) in 1/48 units
        if e > trunc + 1 {
            break;
        }
        let factor = QSeries {
            trunc: i64::MAX / 4,
            coeffs: [
                (0, BigInt::one()),
                (e, if sign_plus { BigInt::one() } else { BigInt::from(-1) }),
            ]
            .into_iter()
            .collect(),
        };
        acc = acc.mul(&factor);
        n += 1;
    }
    acc
}

/// Evaluates an enumerator-shaped polynomial sum_w a_w A^{n-w} B^w at the
/// two half-odd products, with signed coefficients.
fn evaluate_at_products(
    n: usize,
    terms: &[(usize, BigInt)],
    trunc: i64,
) -> QSeries {
    // working margin: every power of A or B costs one unit of truncation
    let work = trunc + n as i64 + 2;
    let a = product_half_odd(true, work);
    let b = product_half_odd(false, work);
    let mut apow = Vec::with_capacity(n + 1);
    let mut bpow = Vec::with_capacity(n + 1);
    let mut pa = QSeries::one(i64::MAX / 4);
    let mut pb = QSeries::one(i64::MAX / 4);
    for _ in 0..=n {
        apow.push(pa.clone());
        bpow.push(pb.clone());
        pa = pa.mul(&a);
        pb = pb.mul(&b);
    }
    let eval_term = |(w, c): &(usize, BigInt)| apow[n - w].mul(&bpow[*w]).scale(c);
    #[cfg(feature = "parallel")]
    let total = {
        use rayon::prelude::*;
        terms
            .par_iter()
            .map(eval_term)
            .reduce(|| QSeries::zero(work), |x, y| x.add(&y))
    };
    #[cfg(not(feature = "parallel"))]
    let total = terms
        .iter()
        .map(eval_term)
        .fold(QSeries::zero(work), |x, y| x.add(&y));
    total.truncate(trunc)
}

fn signed_terms(w: &WeightEnumerator) -> Vec<(usize, BigInt)> {
    w.terms()
        .into_iter()
        .map(|(wt, c)| (wt, BigInt::from(c)))
        .collect()
}

/// Character of the code VOA of C from its own weight enumerator:
/// ch = sum_w a_w x^{n-w} y^w with x = (A+B)/2 and y = (A-B)/2.
pub fn code_voa_character(w: &WeightEnumerator, trunc: i64) -> Result<QSeries> {
    // expand in A, B instead: x^{n-w} y^w = 2^{-n} (A+B)^{n-w} (A-B)^w;
    // rather than binomial-expanding, evaluate x,y directly
    let n = w.len();
    let work = trunc + n as i64 + 2;
    let a = product_half_odd(true, work);
    let b = product_half_odd(false, work);
    let two = BigInt::from(2);
    let x = a.add(&b).div_exact(&two)?;
    let y = a.sub(&b).div_exact(&two)?;
    let mut xpow = Vec::with_capacity(n + 1);
    let mut ypow = Vec::with_capacity(n + 1);
    let mut px = QSeries::one(i64::MAX / 4);
    let mut py = QSeries::one(i64::MAX / 4);
    for _ in 0..=n {
        xpow.push(px.clone());
        ypow.push(py.clone());
        px = px.mul(&x);
        py = py.mul(&y);
    }
    let mut total = QSeries::zero(work);
    for (wt, c) in signed_terms(w) {
        if ypow[wt].min_exponent().is_none() {
            continue;
        }
        total = total.add(&xpow[n - wt].mul(&ypow[wt]).scale(&c));
    }
    Ok(total.truncate(trunc))
}

/// Same character via the MacWilliams route from the dual's enumerator:
/// ch = 2^{-k} W_D(A, B) where D = C^perp has dimension k.
pub fn code_voa_character_from_dual(
    w_dual: &WeightEnumerator,
    k: usize,
    trunc: i64,
) -> Result<QSeries> {
    let total = evaluate_at_products(w_dual.len(), &signed_terms(w_dual), trunc);
    total.div_exact(&(BigInt::one() << k))
}

/// McKay-Thompson series 2 ch_{V_{C0}} - ch_{V_C} computed from the
/// enumerators of D and D + <xi>:
/// 2^{-dim D} * (W_{D+<xi>} - W_D)(A, B).
pub fn mckay_thompson(
    w_d: &WeightEnumerator,
    w_dxi: &WeightEnumerator,
    trunc: i64,
) -> Result<QSeries> {
    if w_d.len() != w_dxi.len() {
        return Err(Error::LengthMismatch(w_d.len(), w_dxi.len()));
    }
    let k = w_d.dimension()?;
    if w_dxi.dimension()? != k + 1 {
        return Err(Error::Precondition(
            "second enumerator must belong to D + <xi> with xi outside D".into(),
        ));
    }
    let f: Vec<(usize, BigInt)> = (0..=w_d.len())
        .map(|w| (w, BigInt::from(w_dxi.coeff(w).clone()) - BigInt::from(w_d.coeff(w).clone())))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let series = evaluate_at_products(w_d.len(), &f, trunc);
    let out = series.div_exact(&(BigInt::one() << k))?;
    // the displayed series has no constant term; a nonzero one signals bad input
    if w_d.len() == 48 && !out.coeff(0).map(|c| c.is_zero()).unwrap_or(true) {
        return Err(Error::Internal(format!(
            "McKay-Thompson constant term {} is nonzero",
            out.coeff(0).unwrap()
        )));
    }
    Ok(out)
}
