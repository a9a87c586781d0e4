//! The length-48 moonshine-frame worked example, run as a scripted pipeline
//! of executable assertions.
//!
//! The structure codes are D = Span{(1^16 0^32), (0^32 1^16),
//! (alpha,alpha,alpha) : alpha in RM(1,4)} and C = D^perp; the pipeline
//! reproduces the published computations on this pair: the stabilizer code P
//! and graded splits, the self-dual subcode (C0)_xi with its kappa vector,
//! the 24 weight-2 coset words, top weights, the three weight enumerators,
//! the McKay-Thompson series of the order-4 lift, the fusion table, and the
//! orbifold structure-code pairs.

pub mod data;

use num_bigint::BigInt;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::gf2::{reed_muller, Codeword, LinearCode, WeightEnumerator};
use crate::modules::{fuse_coset, fuse_coset_general, fuse_same_beta, ModuleLabel};
use crate::qseries::{mckay_thompson, QSeries, UNIT};
use crate::quadratic::kappa_vector;
use crate::selfdual::is_self_dual_wrt;
use crate::stabilizer::{compute_p, graded_split, order_of_lift};
use crate::structcheck::{
    is_f_admissible, is_f_admissible_via_dual, is_holomorphic_pair, orbifold_codes,
    validate_structure_codes,
};

fn cw(s: &str) -> Codeword {
    Codeword::from_bits(s).expect("literal bit string")
}

/// Builds the moonshine structure codes (C, D) with D of dimension 7 and
/// C = D^perp of dimension 41.
pub fn build_moonshine_codes() -> (LinearCode, LinearCode) {
    let mut rows = vec![
        cw(&("1".repeat(16) + &"0".repeat(32))),
        cw(&("0".repeat(32) + &"1".repeat(16))),
    ];
    for alpha in data::RM14_ROWS {
        rows.push(cw(&alpha.repeat(3)));
    }
    let d = LinearCode::from_generators(48, rows).expect("moonshine D");
    let c = d.dual();
    (c, d)
}

/// xi of the printed data.
pub fn xi() -> Codeword {
    cw(data::XI)
}

/// kappa of the printed data.
pub fn kappa() -> Codeword {
    cw(data::KAPPA)
}

/// One step of the demo: an executable assertion with its outcome.
#[derive(Debug, Clone)]
pub struct DemoStep {
    pub number: usize,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Ordered step results; the pipeline aborts at the first failure.
#[derive(Debug, Clone)]
pub struct DemoReport {
    pub steps: Vec<DemoStep>,
}

impl DemoReport {
    pub fn pass(&self) -> bool {
        self.steps.iter().all(|s| s.pass)
    }
}

struct Pipeline {
    steps: Vec<DemoStep>,
    failed: bool,
}

impl Pipeline {
    fn step<F>(&mut self, title: &'static str, f: F) -> Result<()>
    where
        F: FnOnce() -> Result<(bool, String)>,
    {
        if self.failed {
            return Ok(());
        }
        let (pass, detail) = f()?;
        self.steps.push(DemoStep {
            number: self.steps.len() + 1,
            title,
            pass,
            detail,
        });
        if !pass {
            self.failed = true;
        }
        Ok(())
    }
}

/// Runs the full pipeline at the given series truncation (in 1/48 units).
pub fn run_demo(trunc: i64, budgets: &Budgets) -> Result<DemoReport> {
    let (c, d) = build_moonshine_codes();
    let xi = xi();
    let kappa = kappa();
    let mut pl = Pipeline {
        steps: Vec::new(),
        failed: false,
    };

    // construction sanity: dimensions and the closed form of Eq (7.1)
    pl.step("structure codes: dim D = 7, C = D^perp of dim 41, pair validates", || {
        let report = validate_structure_codes(&c, &d, budgets)?;
        let pass = d.dim() == 7 && c.dim() == 41 && report.pass() && c.contains_code(&d);
        Ok((pass, format!("dim D = {}, dim C = {}", d.dim(), c.dim())))
    })?;

    pl.step("xi lies in P and P matches its closed form, dim 27", || {
        let p = compute_p(&c, &d)?;
        let closed = closed_form_p()?;
        let pass = p.contains(&xi) && p == closed && p.dim() == 27;
        Ok((pass, format!("dim P = {}", p.dim())))
    })?;

    pl.step("graded split reproduces the printed D0 and D1", || {
        let split = graded_split(&c, &d, &xi)?;
        let d0 = printed_d0()?;
        let rep_ok = match &split.d1_rep {
            Some(rep) => {
                d.contains(&cw(data::D1_REP))
                    && !split.d0.contains(&cw(data::D1_REP))
                    && split.d0.coset_lex_min(&cw(data::D1_REP)) == *rep
            }
            None => false,
        };
        let pass = split.d0 == d0 && rep_ok;
        Ok((pass, format!("dim D0 = {}", split.d0.dim())))
    })?;

    pl.step("order_of_lift(xi) = 4", || {
        let order = order_of_lift(&c, &d, &xi)?;
        Ok((order == 4, format!("order = {order}")))
    })?;

    pl.step("(C0)_xi equals the printed 6x48 span and is self-dual w.r.t. xi", || {
        let split = graded_split(&c, &d, &xi)?;
        let c0xi = split.c0.subcode_supported_on(&xi)?;
        let printed =
            LinearCode::from_generators(48, data::C0_XI_ROWS.iter().map(|s| cw(s)))?;
        let pass = c0xi == printed && is_self_dual_wrt(&c0xi, &xi);
        Ok((pass, format!("dim (C0)_xi = {}", c0xi.dim())))
    })?;

    pl.step("kappa satisfies the duality functional of (C0)_xi", || {
        let split = graded_split(&c, &d, &xi)?;
        let h = split.c0.subcode_supported_on(&xi)?;
        let functional_ok = h
            .basis()
            .iter()
            .all(|g| u32::from(kappa.dot(g)) == g.weight() / 2 % 2);
        // kappa must land in the class kappa_vector(H, xi) + H^{perp xi} = + H
        let canonical = kappa_vector(&h, &xi)?;
        let class_ok = h.contains(&(&kappa ^ &canonical));
        Ok((
            functional_ok && class_ok,
            format!("canonical kappa = {canonical}"),
        ))
    })?;

    pl.step("C0 + kappa has exactly the 24 printed weight-2 words", || {
        let split = graded_split(&c, &d, &xi)?;
        let words = split.c0.coset_words_up_to_weight(&kappa, 2, budgets)?;
        let weight2: Vec<&Codeword> = words.iter().filter(|w| w.weight() == 2).collect();
        let expected: Vec<Codeword> = data::weight2_supports()
            .iter()
            .map(|&(i, j)| Codeword::from_support(48, &[i - 1, j - 1]))
            .collect();
        let mut got: Vec<Codeword> = weight2.iter().map(|w| (*w).clone()).collect();
        let mut want = expected.clone();
        got.sort();
        want.sort();
        let pass = got == want && got.len() == 24;
        Ok((pass, format!("{} weight-2 words", got.len())))
    })?;

    pl.step("top weights and top-level dimensions of the two modules", || {
        let split = graded_split(&c, &d, &xi)?;
        let zero = Codeword::zero(48);
        let m_xi = ModuleLabel::new(&split.c0, &xi, &zero)?;
        let m_kappa = ModuleLabel::new(&split.c0, &zero, &kappa)?;
        let tw_xi = m_xi.top_weight(budgets)?;
        let td_xi = m_xi.top_level_dimension(budgets)?;
        let tw_k = m_kappa.top_weight(budgets)?;
        let td_k = m_kappa.top_level_dimension(budgets)?;
        let pass = tw_xi == num_rational::Rational64::new(3, 4)
            && td_xi == 1
            && tw_k == num_rational::Rational64::new(1, 1)
            && td_k == 24;
        Ok((
            pass,
            format!("(xi,0): ({tw_xi}, {td_xi}); (0,kappa): ({tw_k}, {td_k})"),
        ))
    })?;

    pl.step("weight enumerators W_D, W_{D+<xi>}, f match the printed polynomials", || {
        let (w_d, w_dxi, f) = moonshine_enumerators(&d, &xi, budgets)?;
        let pass = w_d == WeightEnumerator::from_pairs(48, &data::W_D)
            && w_dxi == WeightEnumerator::from_pairs(48, &data::W_D_XI)
            && f == data::F_POLY
                .iter()
                .map(|&(w, a)| (w, BigInt::from(a)))
                .collect::<Vec<_>>();
        Ok((pass, "three polynomials compared".into()))
    })?;

    pl.step("McKay-Thompson coefficients 1, 0, 276, 2048", || {
        let (w_d, w_dxi, _) = moonshine_enumerators(&d, &xi, budgets)?;
        let series = mckay_thompson(&w_d, &w_dxi, trunc)?;
        let mut pass = true;
        let mut shown = Vec::new();
        for (e, v) in data::MT_COEFFS {
            if e > trunc {
                continue;
            }
            let got = series.coeff(e)?;
            pass &= got == BigInt::from(v);
            shown.push(format!("q^{}: {got}", crate::qseries::format_exponent(e)));
        }
        Ok((pass, shown.join(", ")))
    })?;

    pl.step("the four printed fusion rules", || {
        let split = graded_split(&c, &d, &xi)?;
        let zero = Codeword::zero(48);
        let m0k = ModuleLabel::new(&split.c0, &zero, &kappa)?;
        let mxi0 = ModuleLabel::new(&split.c0, &xi, &zero)?;
        let mxik = ModuleLabel::new(&split.c0, &xi, &kappa)?;
        let m00 = ModuleLabel::new(&split.c0, &zero, &zero)?;
        // M(0,kappa) x M(0,kappa) = M(0,0)
        let r1 = fuse_coset(&m0k, &m0k)?;
        // M(0,kappa) x M(xi,0) = M(xi,kappa)
        let r2 = fuse_coset_general(&kappa, &mxi0)?.0;
        // M(xi,0) x M(xi,0) = M(0,kappa)
        let r3 = fuse_same_beta(&mxi0, &mxi0, budgets)?;
        // M(xi,0) x M(xi,kappa) = M(0,0)
        let r4 = fuse_same_beta(&mxi0, &mxik, budgets)?;
        let pass = r1.is_single()
            && r1.terms[0].0 == m00
            && r2 == mxik
            && r3.is_single()
            && r3.terms[0].0 == m0k
            && r4.is_single()
            && r4.terms[0].0 == m00;
        Ok((pass, "fusion table reproduced".into()))
    })?;

    pl.step("orbifold pairs: order-4 pair valid with triply even dual; order-2 pair holomorphic", || {
        let (c4, d4, report) = orbifold_codes(&c, &d, &xi, &kappa, budgets)?;
        let dual4 = c4.dual();
        let mut triply_even = true;
        for w in dual4.codewords(budgets)? {
            triply_even &= w.weight() % 8 == 0;
        }
        let holomorphic4 = is_holomorphic_pair(&c4, &d4, budgets)?;
        // the order-2 orbifold pair: (C0 u C1 u (C0+kappa) u (C1+kappa), D0)
        let split = graded_split(&c, &d, &xi)?;
        let c2 = c.sum_codes(&LinearCode::from_generators(48, [kappa.clone()])?)?;
        let holomorphic2 = is_holomorphic_pair(&c2, &split.d0, budgets)?;
        // both first codes are F-admissible, by clauses and by the dual route
        let adm4 = is_f_admissible(&c4, budgets)?.pass();
        let adm4_dual = is_f_admissible_via_dual(&c4, budgets)?;
        let pass = report.pass()
            && dual4 == d4
            && triply_even
            && holomorphic4
            && holomorphic2
            && adm4
            && adm4_dual;
        Ok((
            pass,
            format!(
                "order-4 pair dims ({}, {}), order-2 pair dims ({}, {})",
                c4.dim(),
                d4.dim(),
                c2.dim(),
                split.d0.dim()
            ),
        ))
    })?;

    Ok(DemoReport { steps: pl.steps })
}

/// The closed form of P: triples (alpha, beta, gamma) of RM(2,4) words with
/// alpha + beta + gamma in RM(1,4).
fn closed_form_p() -> Result<LinearCode> {
    let rm24 = reed_muller(2, 4);
    let mut triple_rows = Vec::new();
    for (block, _) in [0usize, 16, 32].iter().enumerate() {
        for row in rm24.basis() {
            let mut v = Codeword::zero(48);
            for i in 0..16 {
                if row.get(i) {
                    v.set(16 * block + i, true);
                }
            }
            triple_rows.push(v);
        }
    }
    let rm24_cubed = LinearCode::from_generators(48, triple_rows)?;
    // the sum condition: <(h,h,h), x> = 0 for h in a basis of RM(2,4)
    let sum_condition =
        LinearCode::from_generators(48, rm24.basis().iter().map(|h| {
            let s = h.to_string();
            cw(&s.repeat(3))
        }))?
        .dual();
    rm24_cubed.intersect(&sum_condition)
}

/// The printed D0 generators.
fn printed_d0() -> Result<LinearCode> {
    let mut rows = vec![
        cw(&("1".repeat(16) + &"0".repeat(32))),
        cw(&("0".repeat(32) + &"1".repeat(16))),
    ];
    for alpha in data::D0_TRIPLE_ALPHAS {
        rows.push(cw(&alpha.repeat(3)));
    }
    LinearCode::from_generators(48, rows)
}

/// W_D, W_{D+<xi>}, and their difference f (as signed pairs).
pub fn moonshine_enumerators(
    d: &LinearCode,
    xi: &Codeword,
    budgets: &Budgets,
) -> Result<(WeightEnumerator, WeightEnumerator, Vec<(usize, BigInt)>)> {
    let w_d = d.weight_enumerator(budgets)?;
    let dxi = d.sum_codes(&LinearCode::from_generators(d.len(), [xi.clone()])?)?;
    if dxi.dim() != d.dim() + 1 {
        return Err(Error::Precondition("xi already lies in D".into()));
    }
    let w_dxi = dxi.weight_enumerator(budgets)?;
    let f = (0..=d.len())
        .map(|w| {
            (
                w,
                BigInt::from(w_dxi.coeff(w).clone()) - BigInt::from(w_d.coeff(w).clone()),
            )
        })
        .filter(|(_, c)| !num_traits::Zero::is_zero(c))
        .collect();
    Ok((w_d, w_dxi, f))
}

/// Convenience wrapper returning the McKay-Thompson series of the moonshine
/// data directly.
pub fn moonshine_mt_series(trunc: i64) -> Result<QSeries> {
    let (_, d) = build_moonshine_codes();
    let budgets = Budgets::default();
    let (w_d, w_dxi, _) = moonshine_enumerators(&d, &xi(), &budgets)?;
    mckay_thompson(&w_d, &w_dxi, trunc)
}

/// Default demo truncation: exact through q^8.
pub fn default_trunc() -> i64 {
    8 * UNIT
}
