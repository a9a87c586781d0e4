//! The epsilon-cocycle and the quadratic-form bookkeeping attached to a code:
//! radicals, maximal self-orthogonal subcodes, duals within a support, and
//! the kappa vector that shifts a module label to its dual.

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::gf2::{Codeword, LinearCode};

/// Value of the 2-cocycle epsilon: a sign in {+1, -1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CocycleValue(pub i8);

impl CocycleValue {
    pub fn sign(self) -> i8 {
        self.0
    }
}

impl std::ops::Mul for CocycleValue {
    type Output = CocycleValue;
    fn mul(self, rhs: CocycleValue) -> CocycleValue {
        CocycleValue(self.0 * rhs.0)
    }
}

/// epsilon(alpha, beta) = (-1)^m with
/// m = #{(i,j) : i > j, alpha_i = 1, beta_j = 1},
/// the bilinear extension of epsilon(nu^i, nu^j) = -1 iff i > j.
///
/// Computed by a prefix-popcount sweep: for every set bit of alpha, count the
/// set bits of beta at strictly earlier coordinates.
pub fn epsilon(alpha: &Codeword, beta: &Codeword) -> Result<CocycleValue> {
    alpha.checked_same_len(beta)?;
    let mut m: u64 = 0;
    let mut before: u64 = 0; // ones of beta in earlier words
    for (&a, &b) in alpha.words().iter().zip(beta.words()) {
        let mut rest = a;
        while rest != 0 {
            let p = 63 - rest.leading_zeros(); // bit position, 63 = earliest coordinate
            rest &= !(1u64 << p);
            let earlier_in_word = if p == 63 { 0 } else { (b >> (p + 1)).count_ones() };
            m += before + earlier_in_word as u64;
        }
        before += b.count_ones() as u64;
    }
    Ok(CocycleValue(if m % 2 == 0 { 1 } else { -1 }))
}

/// Radical of the standard bilinear form on C: R = C intersect C^perp.
pub fn radical(c: &LinearCode) -> LinearCode {
    c.intersect(&c.dual()).expect("same length")
}

/// Deterministic maximal self-orthogonal subcode of C: scans all codewords
/// in lexicographic order and greedily adjoins every word compatible with
/// the current span.
///
/// Self-orthogonal words are even, so every such subcode lies in the even
/// subcode E of C, where the bilinear form is alternating; all maximal
/// totally isotropic subspaces of E then share the dimension
/// dim rad(E) + (dim E - dim rad(E))/2 (asserted), and each contains the
/// radical rad(E) = E intersect E^perp.
pub fn maximal_self_orthogonal_subcode(c: &LinearCode, budgets: &Budgets) -> Result<LinearCode> {
    let mut words: Vec<Codeword> = c.codewords(budgets)?.collect();
    words.sort();
    let mut h = LinearCode::zero(c.len());
    let mut picked: Vec<Codeword> = Vec::new();
    for w in words {
        if w.is_zero() || h.contains(&w) {
            continue;
        }
        if w.weight() % 2 != 0 {
            continue;
        }
        if picked.iter().any(|p| p.dot(&w)) {
            continue;
        }
        h = h.sum_codes(&LinearCode::from_generators(c.len(), [w.clone()])?)?;
        picked.push(w);
    }
    let even = c.intersect(
        &LinearCode::from_generators(c.len(), [Codeword::ones(c.len())])?.dual(),
    )?;
    let rad = even.intersect(&even.dual())?;
    debug_assert!(h.contains_code(&rad));
    if 2 * h.dim() != rad.dim() + even.dim() {
        return Err(Error::Internal(format!(
            "maximal self-orthogonal subcode has dim {}, expected dim rad(E) + (dim E - dim rad(E))/2 = {}",
            h.dim(),
            rad.dim() + (even.dim() - rad.dim()) / 2
        )));
    }
    Ok(h)
}

/// H^{perp beta}: the dual of H taken inside the coordinates of beta, i.e.
/// puncture to supp(beta), dualize in length wt(beta), re-embed on supp(beta).
pub fn perp_within(h: &LinearCode, beta: &Codeword) -> Result<LinearCode> {
    if h.len() != beta.len() {
        return Err(Error::LengthMismatch(h.len(), beta.len()));
    }
    if !h.support_word().supported_in(beta) {
        return Err(Error::Precondition(format!(
            "supp(H) not contained in supp(beta = {beta})"
        )));
    }
    Ok(h.puncture(beta)?.dual().embed(beta))
}

/// The lexicographically smallest kappa with supp(kappa) in supp(beta) and
/// <kappa, h> = wt(h)/2 mod 2 for every h in H.  The solution set is
/// kappa + H^{perp beta}.
///
/// Precondition: H self-orthogonal with supp(H) in supp(beta); this is
/// exactly what makes h -> wt(h)/2 mod 2 linear on H (checked on basis
/// pairs).
pub fn kappa_vector(h: &LinearCode, beta: &Codeword) -> Result<Codeword> {
    if h.len() != beta.len() {
        return Err(Error::LengthMismatch(h.len(), beta.len()));
    }
    if !h.support_word().supported_in(beta) {
        return Err(Error::Precondition("supp(H) not contained in supp(beta)".into()));
    }
    // linearity of wt/2 on H <=> H self-orthogonal: check basis pairs
    for (i, a) in h.basis().iter().enumerate() {
        if a.weight() % 2 != 0 {
            return Err(Error::Precondition(format!("H has odd-weight generator {a}")));
        }
        for b in &h.basis()[i..] {
            if a.dot(b) {
                return Err(Error::Precondition(format!(
                    "H not self-orthogonal: <{a},{b}> = 1, so wt/2 is not linear"
                )));
            }
        }
    }
    // solve <x, h_i> = wt(h_i)/2 mod 2 in the punctured space
    let m = beta.weight() as usize;
    let hp = h.puncture(beta)?;
    let mut rows: Vec<(Codeword, bool)> = hp
        .basis()
        .iter()
        .map(|r| (r.clone(), r.embed(beta).weight() / 2 % 2 == 1))
        .collect();
    // the punctured rows stay independent (supp(H) in supp(beta)), so
    // Gauss-Jordan always yields a particular solution with free vars = 0
    let mut eliminated: Vec<(usize, Codeword, bool)> = Vec::new();
    for (mut row, mut rhs) in rows.drain(..) {
        for (p, prow, prhs) in &eliminated {
            if row.get(*p) {
                row.xor_assign(prow);
                rhs ^= prhs;
            }
        }
        let p = row
            .leading_one()
            .ok_or_else(|| Error::Internal("dependent punctured basis row".into()))?;
        for (q, prow, prhs) in &mut eliminated {
            let _ = q;
            if prow.get(p) {
                prow.xor_assign(&row);
                *prhs ^= rhs;
            }
        }
        eliminated.push((p, row, rhs));
    }
    let mut solution = Codeword::zero(m);
    for (p, _, rhs) in &eliminated {
        solution.set(*p, *rhs);
    }
    // canonicalize to the lex-smallest solution modulo H^{perp beta}
    let kappa = hp.dual().coset_lex_min(&solution);
    Ok(kappa.embed(beta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> Codeword {
        Codeword::from_bits(s).unwrap()
    }

    fn code(len: usize, rows: &[&str]) -> LinearCode {
        LinearCode::from_generators(len, rows.iter().map(|s| cw(s))).unwrap()
    }

    #[test]
    fn epsilon_basics() {
        assert_eq!(epsilon(&cw("10"), &cw("01")).unwrap().sign(), 1);
        assert_eq!(epsilon(&cw("01"), &cw("10")).unwrap().sign(), -1);
        let b = cw("1011");
        assert_eq!(epsilon(&Codeword::zero(4), &b).unwrap().sign(), 1);
        // epsilon(alpha, alpha) = (-1)^{wt(wt-1)/2}
        assert_eq!(epsilon(&cw("1100"), &cw("1100")).unwrap().sign(), -1);
    }

    #[test]
    fn epsilon_identities_exhaustive() {
        let n = 5;
        let all: Vec<Codeword> = (0..1u32 << n)
            .map(|bits| {
                Codeword::from_support(
                    n,
                    &(0..n).filter(|i| bits >> i & 1 == 1).collect::<Vec<_>>(),
                )
            })
            .collect();
        for a in &all {
            for b in &all {
                let lhs = epsilon(a, b).unwrap().sign() * epsilon(b, a).unwrap().sign();
                let expected = if (a.dot(b) as u32 + a.weight() * b.weight()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(lhs, expected, "Eq (4.2) at {a}, {b}");
            }
            let self_sign = epsilon(a, a).unwrap().sign();
            let w = a.weight() as u64;
            assert_eq!(self_sign, if w * w.saturating_sub(1) / 2 % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn epsilon_crosses_word_boundary() {
        let mut a = Codeword::zero(130);
        a.set(129, true);
        let mut b = Codeword::zero(130);
        b.set(0, true);
        assert_eq!(epsilon(&a, &b).unwrap().sign(), -1);
        assert_eq!(epsilon(&b, &a).unwrap().sign(), 1);
    }

    #[test]
    fn radical_examples() {
        let c = code(5, &["11000", "00110", "00101"]);
        assert_eq!(radical(&c), code(5, &["11000"]));
        let sd = code(2, &["11"]);
        assert_eq!(radical(&sd), sd);
        let c2 = code(3, &["110", "011"]);
        assert_eq!(radical(&c2).dim(), 0);
    }

    #[test]
    fn maximal_self_orthogonal_dim() {
        let b = Budgets::default();
        // even-weight code n=4: R = <1111>, expect dim 2
        let even = code(4, &["1100", "0110", "0011"]);
        let h = maximal_self_orthogonal_subcode(&even, &b).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.contains(&cw("1111")));
        // self-orthogonal code maps to itself
        let so = code(4, &["1111"]);
        assert_eq!(maximal_self_orthogonal_subcode(&so, &b).unwrap(), so);
    }

    #[test]
    fn kappa_examples() {
        let h = code(4, &["1111"]);
        assert_eq!(kappa_vector(&h, &cw("1111")).unwrap(), cw("0000"));
        let h2 = code(4, &["1100"]);
        assert_eq!(kappa_vector(&h2, &cw("1111")).unwrap(), cw("0100"));
    }

    #[test]
    fn kappa_rejects_non_self_orthogonal() {
        let h = code(4, &["1110"]);
        assert!(matches!(
            kappa_vector(&h, &cw("1111")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn kappa_basis_independent() {
        // same code from shuffled, redundant generators gives the same kappa
        let beta = cw("111111");
        let h1 = code(6, &["110000", "001100"]);
        let h2 = code(6, &["111100", "001100", "110000"]);
        assert_eq!(h1, h2);
        assert_eq!(
            kappa_vector(&h1, &beta).unwrap(),
            kappa_vector(&h2, &beta).unwrap()
        );
    }

    #[test]
    fn radical_lemma_small() {
        // C_beta + H^{perp beta} = R^{perp beta}
        let b = Budgets::default();
        for rows in [
            vec!["1100", "0110", "0011"],
            vec!["1111", "1010"],
            vec!["1100"],
        ] {
            let c = code(4, &rows);
            let beta = cw("1111");
            let cb = c.subcode_supported_on(&beta).unwrap();
            let h = maximal_self_orthogonal_subcode(&cb, &b).unwrap();
            let r = radical(&cb);
            let lhs = cb.sum_codes(&perp_within(&h, &beta).unwrap()).unwrap();
            assert_eq!(lhs, perp_within(&r, &beta).unwrap());
        }
    }
}
