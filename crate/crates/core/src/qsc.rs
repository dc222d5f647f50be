//! Quantum synchronizable code parameters from nested pairs of
//! dual-containing cyclic codes of length 5p^s.

use serde::Serialize;

use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::spectrum::{CaseTag, Label};

/// Outcome of checking a pair (c1, c2) with c1 inside c2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QscCheck {
    pub eligible: bool,
    /// Why the pair was rejected; empty when eligible.
    pub reasons: Vec<String>,
}

/// (a_l, a_r)-[[n_out, k_out]]_q
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QscParams {
    pub a_l: u64,
    pub a_r: u64,
    pub n_out: u64,
    pub k_out: u64,
    pub q: u32,
}

impl std::fmt::Display for QscParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {})-[[{}, {}]]_{}",
            self.a_l, self.a_r, self.n_out, self.k_out, self.q
        )
    }
}

fn reciprocal_bound_failures(code: &CodeSpec, name: &str, reasons: &mut Vec<String>) {
    let sp = code.spectrum();
    let ps = code.family().ps();
    for (i, fac) in sp.factors().iter().enumerate() {
        let r = sp.recip_index(i);
        if r < i {
            continue;
        }
        let (a, b) = (code.exps()[i], code.exps()[r]);
        if a + b > ps {
            let partner = &sp.factors()[r].label;
            reasons.push(format!(
                "{name}: exponents of {} and {partner} sum to {} > {ps}",
                fac.label,
                a + b
            ));
        }
    }
}

/// Checks dominance, the reciprocal-pair bound and the misalignment
/// condition for a candidate pair, then confirms dual containment of both
/// codes by polynomial division.
pub fn check_qsc_pair(c1: &CodeSpec, c2: &CodeSpec) -> Result<QscCheck> {
    c1.is_subcode(c2)?;
    let mut reasons = Vec::new();
    let labels = c1.spectrum().labels();
    for (l, (i, j)) in labels.iter().zip(c1.exps().iter().zip(c2.exps())) {
        if j >= i {
            reasons.push(format!("exponent of {l} in c2 ({j}) is not below c1 ({i})"));
        }
    }
    reciprocal_bound_failures(c1, "c1", &mut reasons);
    reciprocal_bound_failures(c2, "c2", &mut reasons);

    let w = c1.family().ps_minus_one();
    let diffs: Vec<(Label, u64)> = labels
        .iter()
        .zip(c1.exps().iter().zip(c2.exps()))
        .map(|(&l, (&i, &j))| (l, i.saturating_sub(j)))
        .collect();
    let witness = diffs.iter().any(|&(r, dr)| {
        r != Label::U && (dr > w || (dr > 0 && diffs.iter().any(|&(o, d)| o != r && d > w)))
    });
    if !witness {
        reasons.push(format!("no factor other than U has an exponent gap above {w} (or a positive gap next to one that does)"));
    }

    // Confirm containment from the generator polynomials once the exponent
    // conditions hold; a pair failing those is already rejected.
    if reasons.is_empty() {
        for (code, name) in [(c1, "c1"), (c2, "c2")] {
            if !code.dual_containing_by_division() {
                reasons.push(format!("{name} does not contain its dual"));
            }
        }
    }
    Ok(QscCheck {
        eligible: reasons.is_empty(),
        reasons,
    })
}

/// k_out as the per-case formula in the exponents of c1.
pub fn printed_k_out(c1: &CodeSpec) -> i64 {
    let n = c1.n() as i64;
    let e = |l| c1.exp(l).unwrap() as i64;
    match c1.family().case() {
        CaseTag::C1 => n - 2 * (e(Label::U) + 4 * e(Label::Phi)),
        CaseTag::C2 => n - 2 * (e(Label::U) + 2 * e(Label::F1) + 2 * e(Label::F2)),
        CaseTag::C3 => n - 2 * c1.exps().iter().map(|&x| x as i64).sum::<i64>(),
    }
}

/// Parameters of the synchronizable code built from c1 with tolerances
/// (a_l, a_r).
pub fn qsc_params(c1: &CodeSpec, a_l: u64, a_r: u64) -> Result<QscParams> {
    let n = c1.n() as u64;
    let sum = a_l.saturating_add(a_r);
    if sum >= n {
        return Err(Error::ToleranceTooLarge { sum, n });
    }
    let k = printed_k_out(c1);
    if k < 0 {
        return Err(Error::NegativeK { k });
    }
    Ok(QscParams {
        a_l,
        a_r,
        n_out: n + sum,
        k_out: k as u64,
        q: c1.family().field().q(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{spec_at, CodeFamily, Family};
    use crate::field::make_field;

    fn family(p: u64) -> Family {
        CodeFamily::new(&make_field(p, 1).unwrap(), 1).unwrap()
    }

    fn code(fam: &Family, e: &[u64]) -> CodeSpec {
        CodeSpec::new(fam, e.to_vec()).unwrap()
    }

    #[test]
    fn worked_pair() {
        let fam = family(7);
        let c1 = code(&fam, &[1, 3]);
        let c2 = code(&fam, &[0, 0]);
        assert!(check_qsc_pair(&c1, &c2).unwrap().eligible);
        let p = qsc_params(&c1, 2, 3).unwrap();
        assert_eq!((p.n_out, p.k_out, p.q), (40, 9, 7));
        assert_eq!(p.to_string(), "(2, 3)-[[40, 9]]_7");
        assert_eq!(qsc_params(&c1, 0, 0).unwrap().n_out, 35);
        assert_eq!(
            qsc_params(&c1, 20, 15),
            Err(Error::ToleranceTooLarge { sum: 35, n: 35 })
        );
    }

    #[test]
    fn rejections() {
        let fam = family(7);
        let c1 = code(&fam, &[1, 3]);
        assert!(!check_qsc_pair(&c1, &c1).unwrap().eligible);
        let r = check_qsc_pair(&code(&fam, &[4, 4]), &code(&fam, &[0, 0])).unwrap();
        assert!(!r.eligible);
        assert!(r.reasons.iter().any(|s| s.contains("sum to 8")));
        let other = code(&family(11), &[0; 5]);
        assert_eq!(check_qsc_pair(&c1, &other), Err(Error::ContextMismatch));
    }

    #[test]
    fn k_out_is_n_minus_twice_degree() {
        for p in [7u64, 11, 19] {
            let fam = family(p);
            let zero = CodeSpec::full_space(&fam);
            for idx in 0..fam.spec_count().unwrap() {
                let c1 = spec_at(&fam, idx);
                if check_qsc_pair(&c1, &zero).unwrap().eligible {
                    assert_eq!(
                        printed_k_out(&c1),
                        fam.n() as i64 - 2 * c1.generator_degree() as i64
                    );
                }
            }
        }
    }

    #[test]
    fn f_labels_are_interchangeable() {
        let fam = family(19);
        for idx in (0..fam.spec_count().unwrap()).step_by(3) {
            let c1 = spec_at(&fam, idx);
            let e = c1.exps();
            let swapped = code(&fam, &[e[0], e[2], e[1]]);
            let c2 = code(&fam, &[e[0] / 2, e[1] / 3, e[2] / 3]);
            let c2s = code(&fam, &[c2.exps()[0], c2.exps()[2], c2.exps()[1]]);
            assert_eq!(
                check_qsc_pair(&c1, &c2).unwrap().eligible,
                check_qsc_pair(&swapped, &c2s).unwrap().eligible
            );
        }
    }
}
