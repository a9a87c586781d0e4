//! Existence and construction of (doubly even) self-dual subcodes with
//! respect to a support word.
//!
//! A subcode H of C is self-dual w.r.t. beta when supp(H) = supp(beta) and
//! H equals its own dual taken inside the coordinates of beta.  After
//! puncturing C_beta to supp(beta) (length m = wt beta) this is the classical
//! question: does the punctured code contain a self-dual length-m code,
//! doubly even if requested?
//!
//! The search runs in the quotient by the radical.  Write K for the even
//! subcode of the punctured C_beta.  Any self-dual H satisfies
//! K^perp <= H = H^perp <= K, so K^perp <= K is necessary, and H/K^perp is a
//! maximal totally isotropic (resp. totally singular for the quadratic form
//! q(v) = wt(v)/2 mod 2) subspace of the nondegenerate space K/K^perp.  By
//! Witt's extension theorem every maximal totally singular subspace has the
//! same dimension, so a deterministic greedy extension is complete: it finds
//! a witness iff one exists.  This replaces a backtracking search over
//! punctured codewords, which is infeasible at the dimensions the length-48
//! frame requires (C_alpha of dimension 41 for alpha the all-one word).

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::gf2::{Codeword, LinearCode};
use crate::quadratic::perp_within;

/// True iff supp(H) = supp(beta) and H = H^{perp beta}.
pub fn is_self_dual_wrt(h: &LinearCode, beta: &Codeword) -> bool {
    if h.len() != beta.len() {
        return false;
    }
    if &h.support_word() != beta {
        // exception: the zero code is self-dual w.r.t. the zero word
        return beta.is_zero() && h.dim() == 0;
    }
    match perp_within(h, beta) {
        Ok(perp) => *h == perp,
        Err(_) => false,
    }
}

/// Finds a subcode H of C_beta with `is_self_dual_wrt(H, beta)`, doubly even
/// if requested, or proves none exists.
///
/// Every such H contains beta itself (its weights are even and its supports
/// fill beta), so beta must lie in C; otherwise the answer is immediately
/// "none".  The returned witness is deterministic.
pub fn find_self_dual_subcode_wrt(
    c: &LinearCode,
    beta: &Codeword,
    require_doubly_even: bool,
    budgets: &Budgets,
) -> Result<Option<LinearCode>> {
    if c.len() != beta.len() {
        return Err(Error::LengthMismatch(c.len(), beta.len()));
    }
    let m = beta.weight() as usize;
    if m % 2 != 0 {
        return Ok(None);
    }
    if beta.is_zero() {
        return Ok(Some(LinearCode::zero(c.len())));
    }
    if !c.contains(beta) {
        return Ok(None);
    }
    let punctured = c.subcode_supported_on(beta)?.puncture(beta)?;
    let Some(h) = grow_self_dual(&punctured, m, require_doubly_even, budgets)? else {
        return Ok(None);
    };
    let embedded = h.embed(beta);
    debug_assert!(is_self_dual_wrt(&embedded, beta));
    Ok(Some(embedded))
}

/// Extends a doubly even H containing the all-one vector to a doubly even
/// self-dual code of the full length (guaranteed to exist when 8 | n).
pub fn extend_to_doubly_even_self_dual(
    h: &LinearCode,
    budgets: &Budgets,
) -> Result<Option<LinearCode>> {
    let n = h.len();
    if n % 8 != 0 {
        return Err(Error::Precondition(format!("length {n} not divisible by 8")));
    }
    if !h.contains(&Codeword::ones(n)) {
        return Err(Error::Precondition("all-one vector not in H".into()));
    }
    check_doubly_even_basis(h)?;
    let ambient = LinearCode::full(n);
    let result = grow_from(h.clone(), &ambient, n, true, budgets)?;
    match result {
        Some(out) => Ok(Some(out)),
        // Existence is a theorem here (doubly even self-dual codes of length
        // 8k through any doubly even seed containing the all-one vector), so
        // a failed growth would be a bug, not a negative answer.
        None => Err(Error::Internal(
            "guaranteed doubly even self-dual extension not found".into(),
        )),
    }
}

/// Doubly even + pairwise orthogonal on the basis; for a self-orthogonal
/// code this certifies every codeword is doubly even.
fn check_doubly_even_basis(h: &LinearCode) -> Result<()> {
    for (i, a) in h.basis().iter().enumerate() {
        if a.weight() % 4 != 0 {
            return Err(Error::Precondition(format!(
                "generator {a} has weight {} not divisible by 4",
                a.weight()
            )));
        }
        for b in &h.basis()[i + 1..] {
            if a.dot(b) {
                return Err(Error::Precondition(format!(
                    "generators {a} and {b} are not orthogonal"
                )));
            }
        }
    }
    Ok(())
}

/// Searches for a self-dual (dim m/2) subcode of `code` (ambient length m).
fn grow_self_dual(
    code: &LinearCode,
    m: usize,
    doubly_even: bool,
    budgets: &Budgets,
) -> Result<Option<LinearCode>> {
    // restrict to the even-weight subcode: self-orthogonal words are even
    let even = code
        .intersect(&LinearCode::from_generators(m, [Codeword::ones(m)])?.dual())?;
    let seed = even.dual();
    // necessary: K^perp <= K (the radical of the form on K is exactly K^perp)
    if !even.contains_code(&seed) {
        return Ok(None);
    }
    if doubly_even && check_doubly_even_basis(&seed).is_err() {
        // H would have to contain K^perp, which is not doubly even
        return Ok(None);
    }
    grow_from(seed, &even, m, doubly_even, budgets)
}

/// Greedy Witt extension of `h` inside `space` up to dimension m/2.
///
/// Invariants maintained: h is self-orthogonal (doubly even if requested)
/// and space^perp <= h <= space.  At each step the candidates form
/// W = h^perp intersect space; a singular vector of the quotient W/h is
/// found among combinations of at most three quotient basis vectors (if all
/// basis vectors are nonsingular and all pairings are 1, the sum of any
/// three is singular; if no combination of size <= 3 works the quotient is
/// anisotropic and h is maximal).
fn grow_from(
    mut h: LinearCode,
    space: &LinearCode,
    m: usize,
    doubly_even: bool,
    budgets: &Budgets,
) -> Result<Option<LinearCode>> {
    let target = m / 2;
    let mut nodes: u64 = 0;
    while h.dim() < target {
        let w = h.dual().intersect(space)?;
        // deterministic complement basis of W over h
        let mut complement: Vec<Codeword> = Vec::new();
        let mut span = h.clone();
        for row in w.basis() {
            let reduced = span.reduce(row);
            if !reduced.is_zero() {
                complement.push(reduced.clone());
                span = span.sum_codes(&LinearCode::from_generators(m, [reduced])?)?;
            }
        }
        if complement.is_empty() {
            // h is already a maximal isotropic subspace short of dim m/2
            return Ok(None);
        }
        let v = if !doubly_even {
            // symplectic case: every vector of W is isotropic (even weight)
            Some(complement[0].clone())
        } else {
            find_singular(&complement, &mut nodes)
        };
        nodes += 1;
        if nodes > budgets.max_search_nodes {
            return Err(Error::SearchBudget { explored: nodes });
        }
        match v {
            // no singular vector in W \ h: h is maximal totally singular, and
            // by Witt's theorem all maximal ones share its dimension
            None => return Ok(None),
            Some(v) => {
                debug_assert!(v.weight() % 2 == 0);
                h = h.sum_codes(&LinearCode::from_generators(m, [v])?)?;
            }
        }
    }
    Ok(Some(h))
}

/// Singular vector (wt = 0 mod 4) among nonzero combinations of at most
/// three basis vectors of the quotient, in deterministic order.
fn find_singular(basis: &[Codeword], nodes: &mut u64) -> Option<Codeword> {
    let q = |v: &Codeword| v.weight() / 2 % 2 == 0;
    for b in basis {
        *nodes += 1;
        if q(b) {
            return Some(b.clone());
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            *nodes += 1;
            let s = a ^ b;
            if q(&s) {
                return Some(s);
            }
        }
    }
    // all q(b_i) = 1 and all pairings <b_i,b_j> = 1; then for distinct i,j,k
    // q(b_i+b_j+b_k) = 3 + 3 = 0 mod 2 — any triple works if one exists
    if basis.len() >= 3 {
        let s = &(&basis[0] ^ &basis[1]) ^ &basis[2];
        debug_assert!(q(&s));
        return Some(s);
    }
    None
}
