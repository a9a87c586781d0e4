//! The calculus of irreducible code-VOA module labels M_C(beta, gamma):
//! canonical labels, duality, fusion, simple-current detection, top weight
//! and top-level dimension.
//!
//! Labels never carry the paper's auxiliary map iota: all iota-choices fold
//! into gamma-shifts, so (beta, gamma mod C + R^{perp beta}) with
//! R = radical(C_beta) is a complete invariant, and gamma is stored as the
//! lexicographically smallest element of its class.

use num_rational::Rational64;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::gf2::{Codeword, LinearCode};
use crate::quadratic::{kappa_vector, maximal_self_orthogonal_subcode, perp_within, radical};
use crate::selfdual::find_self_dual_subcode_wrt;

/// Canonical label of an irreducible module over the code VOA of C.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleLabel {
    code: LinearCode,
    beta: Codeword,
    gamma: Codeword, // canonical: lex-min in gamma + (C + R^{perp beta})
}

impl std::fmt::Debug for ModuleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "M({}, {})", self.beta, self.gamma)
    }
}

/// Formal sum of labels with positive multiplicities, sorted by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSum {
    pub terms: Vec<(ModuleLabel, u32)>,
}

impl ModuleSum {
    fn from_labels(mut labels: Vec<ModuleLabel>) -> Self {
        labels.sort_by(|a, b| (&a.beta, &a.gamma).cmp(&(&b.beta, &b.gamma)));
        let mut terms: Vec<(ModuleLabel, u32)> = Vec::new();
        for l in labels {
            match terms.last_mut() {
                Some((prev, mult)) if *prev == l => *mult += 1,
                _ => terms.push((l, 1)),
            }
        }
        ModuleSum { terms }
    }

    pub fn single(label: ModuleLabel) -> Self {
        ModuleSum {
            terms: vec![(label, 1)],
        }
    }

    pub fn is_single(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1 == 1
    }
}

/// The subgroup C + R^{perp beta} that gamma is taken modulo.
fn gamma_modulus(code: &LinearCode, beta: &Codeword) -> Result<LinearCode> {
    let cb = code.subcode_supported_on(beta)?;
    let r = radical(&cb);
    code.sum_codes(&perp_within(&r, beta)?)
}

impl ModuleLabel {
    /// Builds the canonical label; beta must lie in C^perp.
    pub fn new(code: &LinearCode, beta: &Codeword, gamma: &Codeword) -> Result<Self> {
        if code.len() != beta.len() {
            return Err(Error::LengthMismatch(code.len(), beta.len()));
        }
        if code.len() != gamma.len() {
            return Err(Error::LengthMismatch(code.len(), gamma.len()));
        }
        if !code.dual().contains(beta) {
            return Err(Error::Precondition(format!("beta = {beta} not in C^perp")));
        }
        let modulus = gamma_modulus(code, beta)?;
        Ok(ModuleLabel {
            code: code.clone(),
            beta: beta.clone(),
            gamma: modulus.coset_lex_min(gamma),
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn beta(&self) -> &Codeword {
        &self.beta
    }

    pub fn gamma(&self) -> &Codeword {
        &self.gamma
    }

    fn with_gamma(&self, gamma: &Codeword) -> Result<Self> {
        ModuleLabel::new(&self.code, &self.beta, gamma)
    }

    /// kappa_vector for a maximal self-orthogonal H of C_beta.
    fn kappa(&self, budgets: &Budgets) -> Result<Codeword> {
        let cb = self.code.subcode_supported_on(&self.beta)?;
        let h = maximal_self_orthogonal_subcode(&cb, budgets)?;
        kappa_vector(&h, &self.beta)
    }

    /// Dual (contragredient) label: (beta, gamma + kappa_H); independent of
    /// the choice of H thanks to canonicalization.
    pub fn dual(&self, budgets: &Budgets) -> Result<Self> {
        let kappa = self.kappa(budgets)?;
        self.with_gamma(&(&self.gamma ^ &kappa))
    }

    /// Self-dual iff kappa_H lies in C + R^{perp beta}.
    pub fn is_self_dual(&self, budgets: &Budgets) -> Result<bool> {
        Ok(self.dual(budgets)? == *self)
    }

    /// Simple current iff C_beta contains a self-dual subcode w.r.t. beta.
    pub fn is_simple_current(&self, budgets: &Budgets) -> Result<bool> {
        Ok(find_self_dual_subcode_wrt(&self.code, &self.beta, false, budgets)?.is_some())
    }

    /// Lowest conformal weight: wt(beta)/16 plus half the minimum weight of
    /// the coset of gamma in C, both restricted to the complement of
    /// supp(beta).  (Cosets of C_beta in C biject with the punctured code,
    /// so the minimum over gamma + C of the weight outside beta equals the
    /// punctured coset minimum.)
    pub fn top_weight(&self, budgets: &Budgets) -> Result<Rational64> {
        let outside = self.beta.complement();
        let punctured = self.code.puncture(&outside)?;
        let gamma_out = self.gamma.restrict(&outside);
        let min = punctured
            .coset_min_weight(&gamma_out, budgets.max_coset_weight, budgets)?
            .ok_or_else(|| Error::Enumeration {
                what: "top-weight coset minimum above weight bound",
                needed: u128::from(budgets.max_coset_weight) + 1,
                limit: budgets.max_enumeration,
            })?;
        Ok(Rational64::new(self.beta.weight() as i64, 16)
            + Rational64::new(min as i64, 2))
    }

    /// Dimension of the top level: [C_beta : H] times the number of
    /// minimum-weight words in the punctured coset.
    pub fn top_level_dimension(&self, budgets: &Budgets) -> Result<u64> {
        let cb = self.code.subcode_supported_on(&self.beta)?;
        let h = maximal_self_orthogonal_subcode(&cb, budgets)?;
        let index = 1u64 << (cb.dim() - h.dim());
        let outside = self.beta.complement();
        let punctured = self.code.puncture(&outside)?;
        let gamma_out = self.gamma.restrict(&outside);
        let min = punctured
            .coset_min_weight(&gamma_out, budgets.max_coset_weight, budgets)?
            .ok_or_else(|| Error::Enumeration {
                what: "top-level coset minimum above weight bound",
                needed: u128::from(budgets.max_coset_weight) + 1,
                limit: budgets.max_enumeration,
            })?;
        let count = punctured
            .coset_words_up_to_weight(&gamma_out, min, budgets)?
            .iter()
            .filter(|w| w.weight() == min)
            .count() as u64;
        Ok(index * count)
    }
}

/// Number of irreducible labels sharing this beta: 2^n / |C + R^{perp beta}|.
pub fn count_modules_with_tau(code: &LinearCode, beta: &Codeword) -> Result<u128> {
    if !code.dual().contains(beta) {
        return Err(Error::Precondition(format!("beta = {beta} not in C^perp")));
    }
    let modulus = gamma_modulus(code, beta)?;
    Ok(1u128 << (code.len() - modulus.dim()))
}

/// Coset-module fusion: M(0, alpha) x M(0, beta) = M(0, alpha + beta).
pub fn fuse_coset(m1: &ModuleLabel, m2: &ModuleLabel) -> Result<ModuleSum> {
    if m1.code != m2.code {
        return Err(Error::Precondition("labels over different codes".into()));
    }
    if !m1.beta.is_zero() || !m2.beta.is_zero() {
        return Err(Error::Precondition("fuse_coset requires both beta = 0".into()));
    }
    Ok(ModuleSum::single(
        m1.with_gamma(&(&m1.gamma ^ &m2.gamma))?,
    ))
}

/// Fusing a coset module into a general label: M(0, alpha) x M(beta, gamma)
/// = M(beta, alpha + gamma), with top weight shifted by <alpha, alpha+beta>/2
/// modulo 1.
pub fn fuse_coset_general(
    alpha: &Codeword,
    m: &ModuleLabel,
) -> Result<(ModuleLabel, Rational64)> {
    let label = m.with_gamma(&(&m.gamma ^ alpha))?;
    let parity = alpha.dot(&(alpha ^ &m.beta));
    let shift = if parity {
        Rational64::new(1, 2)
    } else {
        Rational64::new(0, 1)
    };
    Ok((label, shift))
}

/// Transversal of C inside C + H^{perp beta} for a maximal self-orthogonal H
/// of C_beta.
fn dual_fusion_transversal(m: &ModuleLabel, budgets: &Budgets) -> Result<Vec<Codeword>> {
    let cb = m.code.subcode_supported_on(&m.beta)?;
    let h = maximal_self_orthogonal_subcode(&cb, budgets)?;
    let hperp = perp_within(&h, &m.beta)?;
    let mut span = m.code.clone();
    let mut extension: Vec<Codeword> = Vec::new();
    for row in hperp.basis() {
        let reduced = span.reduce(row);
        if !reduced.is_zero() {
            span = span.sum_codes(&LinearCode::from_generators(m.code.len(), [reduced.clone()])?)?;
            extension.push(reduced);
        }
    }
    budgets.check_enumeration("dual-fusion transversal", 1u128 << extension.len().min(127))?;
    let mut reps = Vec::with_capacity(1 << extension.len());
    for bits in 0u64..1 << extension.len() {
        let mut v = Codeword::zero(m.code.len());
        for (i, e) in extension.iter().enumerate() {
            if bits >> i & 1 == 1 {
                v.xor_assign(e);
            }
        }
        reps.push(v);
    }
    Ok(reps)
}

/// M x M* = sum over cosets of C in C + H^{perp beta} of M(0, delta).
pub fn fuse_with_dual(m: &ModuleLabel, budgets: &Budgets) -> Result<ModuleSum> {
    let labels = dual_fusion_transversal(m, budgets)?
        .into_iter()
        .map(|delta| ModuleLabel::new(&m.code, &Codeword::zero(m.code.len()), &delta))
        .collect::<Result<Vec<_>>>()?;
    Ok(ModuleSum::from_labels(labels))
}

/// Fusion of two labels with the same nonzero beta:
/// sum over the same transversal of M(0, gamma1 + gamma2 + kappa_H + delta).
pub fn fuse_same_beta(
    m1: &ModuleLabel,
    m2: &ModuleLabel,
    budgets: &Budgets,
) -> Result<ModuleSum> {
    if m1.code != m2.code {
        return Err(Error::Precondition("labels over different codes".into()));
    }
    if m1.beta != m2.beta {
        return Err(Error::Precondition("fuse_same_beta requires equal beta".into()));
    }
    let kappa = m1.kappa(budgets)?;
    let base = &(&m1.gamma ^ &m2.gamma) ^ &kappa;
    let labels = dual_fusion_transversal(m1, budgets)?
        .into_iter()
        .map(|delta| ModuleLabel::new(&m1.code, &Codeword::zero(m1.code.len()), &(&base ^ &delta)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ModuleSum::from_labels(labels))
}

/// General fusion dispatcher.  Fusion of two distinct nonzero 1/16-words has
/// no formula in this calculus and raises [`Error::UnsupportedFusion`].
pub fn fuse(m1: &ModuleLabel, m2: &ModuleLabel, budgets: &Budgets) -> Result<ModuleSum> {
    if m1.code != m2.code {
        return Err(Error::Precondition("labels over different codes".into()));
    }
    match (m1.beta.is_zero(), m2.beta.is_zero()) {
        (true, true) => fuse_coset(m1, m2),
        (true, false) => Ok(ModuleSum::single(fuse_coset_general(&m1.gamma, m2)?.0)),
        (false, true) => Ok(ModuleSum::single(fuse_coset_general(&m2.gamma, m1)?.0)),
        (false, false) if m1.beta == m2.beta => fuse_same_beta(m1, m2, budgets),
        _ => Err(Error::UnsupportedFusion),
    }
}
