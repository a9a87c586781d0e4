//! Code-theoretic data of the pointwise frame stabilizer: the code P of
//! extendable sigma-involutions, order classification of lifts, the
//! commutator pairing, and the C0/C1, D0/D1 graded split.

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::gf2::{Codeword, LinearCode};

/// P = { xi : alpha . xi in C for all alpha in D }.
///
/// The condition is linear in both xi and alpha, so it suffices to impose
/// <h . alpha, xi> = 0 for h ranging over parity checks of C and alpha over
/// a basis of D.
pub fn compute_p(c: &LinearCode, d: &LinearCode) -> Result<LinearCode> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch(c.len(), d.len()));
    }
    let checks = c.dual();
    let mut rows = Vec::new();
    for h in checks.basis() {
        for alpha in d.basis() {
            rows.push(h & alpha);
        }
    }
    Ok(LinearCode::from_generators(c.len(), rows)?.dual())
}

/// The mod-4 functional alpha -> wt(alpha . xi)/2 mod 2 on D, asserted
/// linear (a consequence of xi in P with C even).
fn mod4_functional(c: &LinearCode, d: &LinearCode, xi: &Codeword) -> Result<Vec<bool>> {
    for (i, a) in d.basis().iter().enumerate() {
        if (a & xi).weight() % 2 != 0 {
            return Err(Error::Internal(format!(
                "wt(alpha.xi) odd for alpha = {a}; C is not even or xi not in P"
            )));
        }
        for b in &d.basis()[i + 1..] {
            if (&(a & b) & xi).weight() % 2 != 0 {
                return Err(Error::Internal(format!(
                    "mod-4 functional not linear on D at pair {a}, {b}"
                )));
            }
        }
    }
    let _ = c;
    Ok(d.basis()
        .iter()
        .map(|a| (a & xi).weight() / 2 % 2 == 1)
        .collect())
}

fn require_in_p(c: &LinearCode, d: &LinearCode, xi: &Codeword) -> Result<LinearCode> {
    let p = compute_p(c, d)?;
    if !p.contains(xi) {
        return Err(Error::Precondition(format!("xi = {xi} not in P")));
    }
    Ok(p)
}

/// Order of the lifted automorphism attached to xi in P: 1 when xi is in
/// C^perp (the lift is a tau-involution already counted), 2 when
/// wt(alpha . xi) = 0 mod 4 on all of D, else 4.
pub fn order_of_lift(c: &LinearCode, d: &LinearCode, xi: &Codeword) -> Result<u8> {
    require_in_p(c, d, xi)?;
    if c.dual().contains(xi) {
        return Ok(1);
    }
    let f = mod4_functional(c, d, xi)?;
    Ok(if f.iter().any(|&v| v) { 4 } else { 2 })
}

/// True iff the lifts of xi1 and xi2 commute:
/// wt(alpha . xi1 . xi2) even for every alpha in D.
pub fn commute_lifts(
    c: &LinearCode,
    d: &LinearCode,
    xi1: &Codeword,
    xi2: &Codeword,
) -> Result<bool> {
    let p = require_in_p(c, d, xi1)?;
    if !p.contains(xi2) {
        return Err(Error::Precondition(format!("xi = {xi2} not in P")));
    }
    let mask = xi1 & xi2;
    Ok(d.basis().iter().all(|a| (a & &mask).weight() % 2 == 0))
}

/// Invariants of the pointwise frame stabilizer determined by the pair:
/// ranks of the extension 1 -> Z2^n/D^perp -> Stab -> P/C^perp -> 1, per-
/// generator orders, and the commutator pairing on a transversal basis.
#[derive(Debug, Clone)]
pub struct StabilizerDescription {
    pub p: LinearCode,
    pub tau_rank: usize,
    pub sigma_rank: usize,
    /// The group order is 2^group_order_exp.
    pub group_order_exp: usize,
    /// Lexicographically reduced echelon transversal of P/C^perp.
    pub generators: Vec<Codeword>,
    /// Order (2 or 4) of each generator's lift.
    pub generator_orders: Vec<u8>,
    /// Symmetric binary matrix; entry 1 means the two lifts do not commute.
    pub commutator_matrix: Vec<Vec<u8>>,
}

pub fn describe_stabilizer(c: &LinearCode, d: &LinearCode) -> Result<StabilizerDescription> {
    let p = compute_p(c, d)?;
    let cperp = c.dual();
    let tau_rank = c.len() - d.dual().dim();
    let sigma_rank = p.dim() - cperp.dim();
    // transversal: P's canonical basis rows reduced against C^perp, keeping
    // the independent ones
    let mut span = cperp.clone();
    let mut generators = Vec::new();
    for row in p.basis() {
        let reduced = span.reduce(row);
        if !reduced.is_zero() {
            span = span.sum_codes(&LinearCode::from_generators(c.len(), [reduced.clone()])?)?;
            generators.push(reduced);
        }
    }
    debug_assert_eq!(generators.len(), sigma_rank);
    let generator_orders = generators
        .iter()
        .map(|g| order_of_lift(c, d, g))
        .collect::<Result<Vec<_>>>()?;
    let mut commutator_matrix = vec![vec![0u8; generators.len()]; generators.len()];
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            let commute = commute_lifts(c, d, &generators[i], &generators[j])?;
            let bit = u8::from(!commute);
            commutator_matrix[i][j] = bit;
            commutator_matrix[j][i] = bit;
        }
    }
    Ok(StabilizerDescription {
        p,
        tau_rank,
        sigma_rank,
        group_order_exp: tau_rank + sigma_rank,
        generators,
        generator_orders,
        commutator_matrix,
    })
}

/// Quarter-turn phases indexing the Z4-graded set
/// D~ = (D0 x {+-1}) u (D1 x {+-i}).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    PlusOne,
    MinusOne,
    PlusI,
    MinusI,
}

/// The graded split of (C, D) by xi: C0 = ker <., xi> in C and
/// D0 = ker(wt(. . xi)/2 mod 2) in D, with canonical coset representatives
/// for the nontrivial parts.
#[derive(Debug, Clone)]
pub struct GradedSplit {
    pub xi: Codeword,
    pub c0: LinearCode,
    /// Lex-smallest representative of C1 = C \ C0, absent when C0 = C.
    pub c1_rep: Option<Codeword>,
    pub d0: LinearCode,
    /// Lex-smallest representative of D1 = D \ D0, absent when D0 = D.
    pub d1_rep: Option<Codeword>,
}

impl GradedSplit {
    /// Materializes D~ as (codeword, phase) pairs; guarded by the
    /// enumeration budget.
    pub fn dtilde(&self, budgets: &Budgets) -> Result<Vec<(Codeword, Phase)>> {
        budgets.check_enumeration("Dtilde enumeration", 2u128 << self.d0.dim().min(126))?;
        let mut out = Vec::new();
        for w in self.d0.codewords(budgets)? {
            out.push((w.clone(), Phase::PlusOne));
            out.push((w, Phase::MinusOne));
        }
        if let Some(rep) = &self.d1_rep {
            for w in self.d0.codewords(budgets)? {
                let v = &w ^ rep;
                out.push((v.clone(), Phase::PlusI));
                out.push((v, Phase::MinusI));
            }
        }
        Ok(out)
    }
}

/// Kernel of a linear functional on the code, given its values on the
/// canonical basis, together with the lex-smallest representative of the
/// nontrivial coset (if the functional is nonzero).
fn functional_kernel(
    code: &LinearCode,
    values: &[bool],
) -> Result<(LinearCode, Option<Codeword>)> {
    let Some(pivot_idx) = values.iter().position(|&v| v) else {
        return Ok((code.clone(), None));
    };
    let pivot_row = code.basis()[pivot_idx].clone();
    let mut rows = Vec::new();
    for (i, b) in code.basis().iter().enumerate() {
        if i == pivot_idx {
            continue;
        }
        rows.push(if values[i] { b ^ &pivot_row } else { b.clone() });
    }
    let kernel = LinearCode::from_generators(code.len(), rows)?;
    let rep = kernel.coset_lex_min(&pivot_row);
    Ok((kernel, Some(rep)))
}

pub fn graded_split(c: &LinearCode, d: &LinearCode, xi: &Codeword) -> Result<GradedSplit> {
    require_in_p(c, d, xi)?;
    let c_values: Vec<bool> = c.basis().iter().map(|b| b.dot(xi)).collect();
    let (c0, c1_rep) = functional_kernel(c, &c_values)?;
    let d_values = mod4_functional(c, d, xi)?;
    let (d0, d1_rep) = functional_kernel(d, &d_values)?;
    Ok(GradedSplit {
        xi: xi.clone(),
        c0,
        c1_rep,
        d0,
        d1_rep,
    })
}
