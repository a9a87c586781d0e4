use std::fmt;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::gf2::Codeword;

/// A linear subspace of GF(2)^n in canonical reduced-row-echelon basis.
///
/// Pivot columns are strictly increasing and each pivot column is zero in
/// every other basis row, so two codes are equal iff their bases are
/// identical as data.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    len: usize,
    basis: Vec<Codeword>,
}

impl LinearCode {
    pub fn zero(len: usize) -> Self {
        LinearCode { len, basis: vec![] }
    }

    /// The full ambient space GF(2)^n.
    pub fn full(len: usize) -> Self {
        let basis = (0..len).map(|i| Codeword::from_support(len, &[i])).collect();
        LinearCode { len, basis }
    }

    /// Canonical span of the given rows; duplicate and dependent rows drop out.
    pub fn from_generators<I>(len: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = Codeword>,
    {
        let mut code = LinearCode::zero(len);
        for row in rows {
            if row.len() != len {
                return Err(Error::LengthMismatch(len, row.len()));
            }
            code.adjoin(row);
        }
        Ok(code)
    }

    /// Inserts one row, maintaining the reduced echelon invariant.
    fn adjoin(&mut self, mut row: Codeword) {
        for b in &self.basis {
            let p = b.leading_one().unwrap();
            if row.get(p) {
                row.xor_assign(b);
            }
        }
        let Some(pivot) = row.leading_one() else {
            return;
        };
        // clear the new pivot column in existing rows, then insert in order
        for b in &mut self.basis {
            if b.get(pivot) {
                b.xor_assign(&row);
            }
        }
        let pos = self
            .basis
            .partition_point(|b| b.leading_one().unwrap() < pivot);
        self.basis.insert(pos, row);
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Codeword] {
        &self.basis
    }

    /// Reduces `v` against the basis: the result is the canonical coset
    /// representative of `v + C`, which (with pivots cleared left to right)
    /// is also the lexicographically smallest element of that coset.
    pub fn reduce(&self, v: &Codeword) -> Codeword {
        let mut v = v.clone();
        for b in &self.basis {
            if v.get(b.leading_one().unwrap()) {
                v.xor_assign(b);
            }
        }
        v
    }

    /// Alias for [`reduce`](Self::reduce) emphasizing the coset-minimum view.
    pub fn coset_lex_min(&self, v: &Codeword) -> Codeword {
        self.reduce(v)
    }

    pub fn contains(&self, v: &Codeword) -> bool {
        v.len() == self.len && self.reduce(v).is_zero()
    }

    pub fn contains_code(&self, other: &LinearCode) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Nullspace of the basis matrix: `{ v : <b,v> = 0 for all b in C }`.
    pub fn dual(&self) -> LinearCode {
        // For RREF basis rows b_i with pivots p_i, each free column f yields
        // the dual row e_f + sum_i b_i[f] e_{p_i}.
        let pivots: Vec<usize> = self.basis.iter().map(|b| b.leading_one().unwrap()).collect();
        let mut is_pivot = vec![false; self.len];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(self.len - self.dim());
        for f in 0..self.len {
            if is_pivot[f] {
                continue;
            }
            let mut row = Codeword::from_support(self.len, &[f]);
            for (b, &p) in self.basis.iter().zip(&pivots) {
                if b.get(f) {
                    row.set(p, true);
                }
            }
            rows.push(row);
        }
        LinearCode::from_generators(self.len, rows).unwrap()
    }

    pub fn sum_codes(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        let mut code = self.clone();
        for b in &other.basis {
            code.adjoin(b.clone());
        }
        Ok(code)
    }

    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        Ok(self.dual().sum_codes(&other.dual())?.dual())
    }

    /// `C_gamma = { alpha in C : supp(alpha) in supp(gamma) }`.
    pub fn subcode_supported_on(&self, gamma: &Codeword) -> Result<LinearCode> {
        if self.len != gamma.len() {
            return Err(Error::LengthMismatch(self.len, gamma.len()));
        }
        let support_space = LinearCode::from_generators(
            self.len,
            gamma.support().iter().map(|&i| Codeword::from_support(self.len, &[i])),
        )?;
        self.intersect(&support_space)
    }

    /// Image of C under restriction to the support of `mask`; the result has
    /// ambient length wt(mask).
    pub fn puncture(&self, mask: &Codeword) -> Result<LinearCode> {
        if self.len != mask.len() {
            return Err(Error::LengthMismatch(self.len, mask.len()));
        }
        LinearCode::from_generators(
            mask.weight() as usize,
            self.basis.iter().map(|b| b.restrict(mask)),
        )
    }

    /// Re-embeds a code of length wt(mask) onto the support of `mask`.
    pub fn embed(&self, mask: &Codeword) -> LinearCode {
        assert_eq!(self.len, mask.weight() as usize);
        LinearCode::from_generators(mask.len(), self.basis.iter().map(|b| b.embed(mask)))
            .unwrap()
    }

    /// True iff every codeword has even weight (basis-checkable).
    pub fn is_even(&self) -> bool {
        self.basis.iter().all(|b| b.weight() % 2 == 0)
    }

    /// OR of all basis rows = union of all codeword supports.
    pub fn support_word(&self) -> Codeword {
        let mut out = Codeword::zero(self.len);
        for b in &self.basis {
            let words: Vec<u64> = out
                .words()
                .iter()
                .zip(b.words())
                .map(|(a, c)| a | c)
                .collect();
            out = Codeword::from_words(self.len, words);
        }
        out
    }

    /// Iterates over all 2^k codewords (no particular order); `budgets`
    /// guards the count.
    pub fn codewords(&self, budgets: &Budgets) -> Result<CodewordIter<'_>> {
        budgets.check_enumeration("codeword enumeration", 1u128 << self.dim().min(127))?;
        Ok(CodewordIter {
            code: self,
            index: 0,
            current: Codeword::zero(self.len),
        })
    }

    /// All words `v` with wt(v) <= wmax and `v in rep + C`, sorted
    /// lexicographically.
    pub fn coset_words_up_to_weight(
        &self,
        rep: &Codeword,
        wmax: u32,
        budgets: &Budgets,
    ) -> Result<Vec<Codeword>> {
        if self.len != rep.len() {
            return Err(Error::LengthMismatch(self.len, rep.len()));
        }
        let mut total: u128 = 0;
        for w in 0..=wmax {
            total += binomial_u128(self.len as u64, w as u64);
        }
        budgets.check_enumeration("coset low-weight enumeration", total)?;
        let target = self.reduce(rep);
        let mut hits = coset_scan(self, &target, wmax);
        hits.sort();
        Ok(hits)
    }

    /// Smallest weight in the coset `rep + C`, or `None` if it exceeds
    /// `bound`.
    pub fn coset_min_weight(
        &self,
        rep: &Codeword,
        bound: u32,
        budgets: &Budgets,
    ) -> Result<Option<u32>> {
        let target = self.reduce(rep);
        if target.is_zero() {
            return Ok(Some(0));
        }
        for w in 1..=bound {
            let mut total: u128 = 0;
            for ww in 0..=w {
                total += binomial_u128(self.len as u64, ww as u64);
            }
            budgets.check_enumeration("coset min-weight search", total)?;
            if !coset_scan(self, &target, w).is_empty() {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }
}

/// Gray-code iterator over all codewords of a code.
pub struct CodewordIter<'a> {
    code: &'a LinearCode,
    index: u64,
    current: Codeword,
}

impl<'a> Iterator for CodewordIter<'a> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        let n = 1u64 << self.code.dim();
        if self.index >= n {
            return None;
        }
        if self.index > 0 {
            let flip = self.index.trailing_zeros() as usize;
            self.current.xor_assign(&self.code.basis[flip]);
        }
        self.index += 1;
        Some(self.current.clone())
    }
}

/// Enumerates all weight-`<= wmax` words congruent to `target` mod C, where
/// `target` is already reduced.  Membership test: v is in target + C iff
/// reduce(v) == target.
fn coset_scan(code: &LinearCode, target: &Codeword, wmax: u32) -> Vec<Codeword> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let mut out: Vec<Codeword> = (0..code.len())
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut hits = Vec::new();
                if wmax >= 1 {
                    let mut v = Codeword::zero(code.len());
                    v.set(first, true);
                    scan_rec(code, target, wmax, first, &mut v, &mut hits);
                }
                hits
            })
            .collect();
        if code.reduce(&Codeword::zero(code.len())) == *target {
            out.push(Codeword::zero(code.len()));
        }
        out
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut hits = Vec::new();
        if target.is_zero() {
            hits.push(Codeword::zero(code.len()));
        }
        for first in 0..code.len() {
            if wmax >= 1 {
                let mut v = Codeword::zero(code.len());
                v.set(first, true);
                scan_rec(code, target, wmax, first, &mut v, &mut hits);
            }
        }
        hits
    }
}

/// Extends the partial word `v` (last set coordinate `last`) by coordinates
/// greater than `last`, collecting coset members of every weight <= wmax.
fn scan_rec(
    code: &LinearCode,
    target: &Codeword,
    wmax: u32,
    last: usize,
    v: &mut Codeword,
    hits: &mut Vec<Codeword>,
) {
    if &code.reduce(v) == target {
        hits.push(v.clone());
    }
    if v.weight() >= wmax {
        return;
    }
    for next in last + 1..code.len() {
        v.set(next, true);
        scan_rec(code, target, wmax, next, v, hits);
        v.set(next, false);
    }
}

pub(crate) fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}, {}] code", self.len, self.dim())?;
        for b in &self.basis {
            writeln!(f, "  {b}")?;
        }
        Ok(())
    }
}
