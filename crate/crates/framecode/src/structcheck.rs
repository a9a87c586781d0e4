//! Validation of candidate structure-code pairs (C, D) and the
//! F-admissibility criterion for holomorphic framed VOAs.

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::gf2::{Codeword, LinearCode};
use crate::selfdual::find_self_dual_subcode_wrt;

/// One named clause of a structure check, with a witness when it fails.
#[derive(Debug, Clone)]
pub struct Clause {
    pub name: &'static str,
    pub pass: bool,
    /// Lexicographically smallest failing witness, when one exists.
    pub witness: Option<Codeword>,
}

/// Pass/fail per clause; `pass()` iff every clause holds.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub clauses: Vec<Clause>,
}

impl StructureReport {
    pub fn pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.pass)
    }
}

fn clause_ok(name: &'static str) -> Clause {
    Clause {
        name,
        pass: true,
        witness: None,
    }
}

fn clause_fail(name: &'static str, witness: Codeword) -> Clause {
    Clause {
        name,
        pass: false,
        witness: Some(witness),
    }
}

/// Checks the four clauses a structure-code pair must satisfy:
/// (a) C even; (b) every word of D has weight divisible by 8; (c)
/// D <= C <= D^perp; (d) for every nonzero alpha in D, C_alpha contains a
/// doubly even self-dual subcode w.r.t. alpha.
///
/// Clause (b) and (d) scan all 2^{dim D} words of D (triple evenness and
/// subcode existence are not basis-reducible); with the `parallel` feature
/// clause (d) checks the words of D in parallel.
pub fn validate_structure_codes(
    c: &LinearCode,
    d: &LinearCode,
    budgets: &Budgets,
) -> Result<StructureReport> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch(c.len(), d.len()));
    }
    let mut clauses = Vec::new();

    // (a) C even
    let odd = c.basis().iter().filter(|b| b.weight() % 2 == 1).min();
    clauses.push(match odd {
        None => clause_ok("C even"),
        Some(w) => clause_fail("C even", w.clone()),
    });

    // (b) all weights of D divisible by 8
    let mut bad: Option<Codeword> = None;
    for w in d.codewords(budgets)? {
        if w.weight() % 8 != 0 && bad.as_ref().is_none_or(|b| w < *b) {
            bad = Some(w);
        }
    }
    clauses.push(match bad {
        None => clause_ok("wt(D) = 0 mod 8"),
        Some(w) => clause_fail("wt(D) = 0 mod 8", w),
    });

    // (c) D <= C <= D^perp
    let dperp = d.dual();
    let inclusion_witness = d
        .basis()
        .iter()
        .find(|b| !c.contains(b))
        .or_else(|| c.basis().iter().find(|b| !dperp.contains(b)));
    clauses.push(match inclusion_witness {
        None => clause_ok("D <= C <= D^perp"),
        Some(w) => clause_fail("D <= C <= D^perp", w.clone()),
    });

    // (d) doubly even self-dual subcode of C_alpha for every nonzero alpha
    let words: Vec<Codeword> = d.codewords(budgets)?.filter(|w| !w.is_zero()).collect();
    let check = |alpha: &Codeword| -> Result<Option<Codeword>> {
        Ok(
            match find_self_dual_subcode_wrt(c, alpha, true, budgets)? {
                Some(_) => None,
                None => Some(alpha.clone()),
            },
        )
    };
    #[cfg(feature = "parallel")]
    let failures: Vec<Option<Codeword>> = {
        use rayon::prelude::*;
        words
            .par_iter()
            .map(check)
            .collect::<Result<Vec<_>>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let failures: Vec<Option<Codeword>> = words.iter().map(check).collect::<Result<Vec<_>>>()?;
    let worst = failures.into_iter().flatten().min();
    clauses.push(match worst {
        None => clause_ok("doubly even self-dual subcode per alpha in D"),
        Some(w) => clause_fail("doubly even self-dual subcode per alpha in D", w),
    });

    Ok(StructureReport { clauses })
}

/// F-admissibility: (1) 16 | n, plus the structure clauses for the pair
/// (C, C^perp).
pub fn is_f_admissible(c: &LinearCode, budgets: &Budgets) -> Result<StructureReport> {
    let mut report = validate_structure_codes(c, &c.dual(), budgets)?;
    let length_clause = if c.len() % 16 == 0 {
        clause_ok("16 | n")
    } else {
        Clause {
            name: "16 | n",
            pass: false,
            witness: None,
        }
    };
    report.clauses.insert(0, length_clause);
    Ok(report)
}

/// The equivalent dual-side criterion: 16 | n, all-one in C^perp, and C^perp
/// triply even.  Must agree with [`is_f_admissible`] on every input.
pub fn is_f_admissible_via_dual(c: &LinearCode, budgets: &Budgets) -> Result<bool> {
    if c.len() % 16 != 0 {
        return Ok(false);
    }
    let d = c.dual();
    if !d.contains(&Codeword::ones(c.len())) {
        return Ok(false);
    }
    for w in d.codewords(budgets)? {
        if w.weight() % 8 != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Holomorphic iff the pair validates and C = D^perp.
pub fn is_holomorphic_pair(c: &LinearCode, d: &LinearCode, budgets: &Budgets) -> Result<bool> {
    Ok(validate_structure_codes(c, d, budgets)?.pass() && *c == d.dual())
}

/// Code-level induction: replaces C by an intermediate code E with
/// C <= E <= D^perp and re-validates the pair (E, D).
pub fn extend_structure_codes(
    c: &LinearCode,
    d: &LinearCode,
    e: &LinearCode,
    budgets: &Budgets,
) -> Result<(LinearCode, LinearCode, StructureReport)> {
    if !e.contains_code(c) || !d.dual().contains_code(e) {
        return Err(Error::Precondition(
            "inclusion chain C <= E <= D^perp violated".into(),
        ));
    }
    let report = validate_structure_codes(e, d, budgets)?;
    Ok((e.clone(), d.clone(), report))
}

/// The orbifold structure codes C' = C0 u (C1 + kappa), D' = D0 u (D1 + xi),
/// where C0/C1 split C by <., xi> and D0/D1 split D by wt(alpha.xi) mod 4.
///
/// Both unions must be linear (checked); both pairs are returned together
/// with the validation report of (C', D').
pub fn orbifold_codes(
    c: &LinearCode,
    d: &LinearCode,
    xi: &Codeword,
    kappa: &Codeword,
    budgets: &Budgets,
) -> Result<(LinearCode, LinearCode, StructureReport)> {
    let split = crate::stabilizer::graded_split(c, d, xi)?;
    let c_prime = shifted_union(&split.c0, split.c1_rep.as_ref(), kappa, "C0 u (C1+kappa)")?;
    let d_prime = shifted_union(&split.d0, split.d1_rep.as_ref(), xi, "D0 u (D1+xi)")?;
    let report = validate_structure_codes(&c_prime, &d_prime, budgets)?;
    Ok((c_prime, d_prime, report))
}

/// Builds A0 u (A1 + shift) as a linear code, where A1 = A0 + rep, and
/// verifies the union really is linear and of the expected size.
fn shifted_union(
    a0: &LinearCode,
    rep: Option<&Codeword>,
    shift: &Codeword,
    what: &str,
) -> Result<LinearCode> {
    let Some(rep) = rep else {
        // the grading is trivial: nothing to shift
        return Ok(a0.clone());
    };
    let moved = rep ^ shift;
    let union = a0.sum_codes(&LinearCode::from_generators(a0.len(), [moved.clone()])?)?;
    // linearity of the set union needs the shifted coset to stay disjoint
    // from A0 (sum of two shifted elements lands in A0 automatically)
    if a0.contains(&moved) || union.dim() != a0.dim() + 1 {
        return Err(Error::Precondition(format!(
            "{what} is not a disjoint linear union"
        )));
    }
    Ok(union)
}
