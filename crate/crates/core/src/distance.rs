//! Minimum distance of repeated-root codes of length 5p^s.
//!
//! The exact engine uses d(C) = min_t P_t * d(C_t), where P_t is the weight
//! of (x-1)^t (the product of base-p digits plus one) and C_t is the length-5
//! code generated by the factors whose exponent exceeds t. A second evaluator
//! reproduces the published closed-form tables row by row so the two can be
//! compared.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::code::{CodeFamily, CodeSpec, Family};
use crate::error::{Error, Result};
use crate::oracle::Budget;
use crate::spectrum::{CaseTag, Label};

/// Base-p digits of t (least significant first) and their weight product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DigitProfile {
    pub t: u64,
    pub digits: Vec<u64>,
    pub p_t: u64,
}

pub fn pt_weight(t: u64, p: u64, s: u32) -> Result<DigitProfile> {
    let ps = p.pow(s);
    if t >= ps {
        return Err(Error::TOutOfRange { t, max: ps - 1 });
    }
    let mut digits = Vec::with_capacity(s as usize);
    let mut r = t;
    for _ in 0..s {
        digits.push(r % p);
        r /= p;
    }
    let p_t = digits.iter().map(|d| d + 1).product();
    Ok(DigitProfile { t, digits, p_t })
}

fn digit_product(mut t: u64, p: u64) -> u64 {
    let mut prod = 1;
    while t > 0 {
        prod *= t % p + 1;
        t /= p;
    }
    prod
}

/// The (beta, tau) with p^s - p^{s-tau} + beta p^{s-tau-1} < l <= p^s - p^{s-tau} + (beta+1) p^{s-tau-1}.
pub fn locate_beta_tau(l: u64, p: u64, s: u32) -> Result<(u64, u32)> {
    let ps = p.pow(s);
    if l == 0 || l >= ps {
        return Err(Error::LOutOfRange { l, max: ps - 1 });
    }
    for tau in 0..s {
        let block = p.pow(s - tau - 1);
        let start = ps - p.pow(s - tau);
        if l <= start + (p - 1) * block {
            return Ok(((l - start - 1) / block, tau));
        }
    }
    unreachable!("l < p^s always falls in some block")
}

/// min{P_t : l <= t < p^s}, which is (beta+2) p^tau for l >= 1 and 1 for l = 0.
pub fn min_pt_at_least(l: u64, p: u64, s: u32) -> Result<u64> {
    let ps = p.pow(s);
    if l >= ps {
        return Err(Error::LOutOfRange { l, max: ps - 1 });
    }
    if l == 0 {
        return Ok(1);
    }
    let (beta, tau) = locate_beta_tau(l, p, s)?;
    Ok((beta + 2) * p.pow(tau))
}

/// Smallest t in [lo, hi] minimizing P_t, with that minimum.
///
/// Any t > lo first exceeds lo at some digit k; rounding lo up at k gives a
/// number between lo and t whose P is no larger, so those roundings plus lo
/// itself are the only candidates.
fn min_pt_in_range(lo: u64, hi: u64, p: u64) -> (u64, u64) {
    let mut best = (lo, digit_product(lo, p));
    let mut unit = 1u64;
    let mut rest = lo;
    while rest > 0 || unit <= hi {
        let d = rest % p;
        if d + 1 < p {
            let c = (rest + 1) * unit;
            if c > hi {
                break;
            }
            let pc = digit_product(c, p);
            if pc < best.1 || (pc == best.1 && c < best.0) {
                best = (c, pc);
            }
        }
        rest /= p;
        match unit.checked_mul(p) {
            Some(u) => unit = u,
            None => break,
        }
    }
    best
}

/// A minimum distance, where the zero code is reported as 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u64),
    ZeroCode,
}

impl Distance {
    pub fn value(self) -> u64 {
        match self {
            Distance::Finite(d) => d,
            Distance::ZeroCode => 0,
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::ZeroCode => None,
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.value())
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Exact distance with the smallest minimizing t (absent for the zero code).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExactDistance {
    pub distance: Distance,
    pub witness_t: Option<u64>,
}

fn mask_degree(degrees: &[usize], mask: u8) -> usize {
    degrees
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, d)| d)
        .sum()
}

pub fn distance_exact(code: &CodeSpec) -> ExactDistance {
    if code.is_zero_code() {
        return ExactDistance {
            distance: Distance::ZeroCode,
            witness_t: None,
        };
    }
    let fam = code.family();
    let ps = fam.ps();
    let p = u64::from(fam.field().p());
    let degrees = code.spectrum().degrees();
    let mut bounds: Vec<u64> = code.exps().iter().copied().filter(|&e| e < ps).collect();
    bounds.push(0);
    bounds.sort_unstable();
    bounds.dedup();
    let mut best: Option<(u64, u64)> = None;
    for (j, &lo) in bounds.iter().enumerate() {
        let hi = bounds.get(j + 1).map_or(ps - 1, |&b| b - 1);
        let deg = mask_degree(&degrees, code.component_mask(lo));
        if deg == 5 {
            continue;
        }
        let (t, pt) = min_pt_in_range(lo, hi, p);
        let value = pt * (deg as u64 + 1);
        if best.is_none_or(|(v, _)| value < v) {
            best = Some((value, t));
        }
    }
    let (d, t) = best.expect("a nonzero code has some t with a nonzero component");
    ExactDistance {
        distance: Distance::Finite(d),
        witness_t: Some(t),
    }
}

/// Value produced by the published tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaperValue {
    Finite(u64),
    ZeroCode,
    Unsupported,
}

impl PaperValue {
    pub fn as_distance(self) -> Option<Distance> {
        match self {
            PaperValue::Finite(d) => Some(Distance::Finite(d)),
            PaperValue::ZeroCode => Some(Distance::ZeroCode),
            PaperValue::Unsupported => None,
        }
    }
}

impl Serialize for PaperValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PaperValue::Finite(d) => s.serialize_u64(*d),
            PaperValue::ZeroCode => s.serialize_u64(0),
            PaperValue::Unsupported => s.serialize_none(),
        }
    }
}

/// Table value plus the id of the row that produced it, e.g.
/// `c1/phi-major/saturated-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PaperDistance {
    pub value: PaperValue,
    pub row: Option<String>,
}

type SmallRow = (fn(&[u64], u64) -> bool, u64);

/// One printed table: exponents in the table's column order, the coefficient
/// of each column in the general rows, and the rows used when the last
/// column is zero.
struct TableLayout {
    id: &'static str,
    coeffs: &'static [u64],
    small: &'static [SmallRow],
}

const C1_U_MAJOR: TableLayout = TableLayout {
    id: "c1/u-major",
    coeffs: &[1, 2],
    small: &[(|e, _| e[0] > 0, 2)],
};

const C1_PHI_MAJOR: TableLayout = TableLayout {
    id: "c1/phi-major",
    coeffs: &[1, 4],
    small: &[
        (|e, w| e[0] <= w, 2),
        (|e, w| e[0] <= 2 * w, 3),
        (|_, _| true, 4),
    ],
};

const C2_U_OUTER: TableLayout = TableLayout {
    id: "c2/u-outer",
    coeffs: &[1, 2, 4],
    small: &[
        (|e, w| e[0] <= w && e[1] <= w, 2),
        (|e, w| e[0] > w && e[1] == 0, 2),
        (|e, w| e[0] > w && e[0] <= 2 * w && e[1] > 0, 3),
        (|e, w| e[0] > 2 * w && e[1] > 0, 4),
    ],
};

const C2_F_OUTER: TableLayout = TableLayout {
    id: "c2/f-outer",
    coeffs: &[1, 3, 4],
    small: &[
        (|e, w| e[0] <= w && e[1] <= w, 2),
        (|e, w| e[0] > w && e[1] == 0, 3),
        (|e, w| e[0] > w && e[0] <= 2 * w && e[1] > 0, 3),
        (|e, w| e[0] > 2 * w && e[1] > 0, 4),
    ],
};

/// Columns are reversed relative to the printed ascending order.
const C2_U_INNER: TableLayout = TableLayout {
    id: "c2/u-inner",
    coeffs: &[1, 3, 5],
    small: &[
        (|e, w| e[0] <= w && e[1] <= w, 2),
        (|e, w| e[0] > w && e[1] == 0, 3),
        (|e, w| e[0] > w && e[0] <= 2 * w && e[1] > 0, 3),
        (|e, w| e[0] > 2 * w && e[0] <= 3 * w && e[1] > 0, 4),
        (|e, w| e[0] > 3 * w && e[1] > 0, 5),
    ],
};

const C3_SORTED: TableLayout = TableLayout {
    id: "c3/sorted",
    coeffs: &[1, 2, 3, 4, 5],
    small: &[
        (|e, w| e[0] <= w && e[1] <= w && e[2] <= w && e[3] <= w, 2),
        (|e, w| e[0] > w && e[1] == 0 && e[2] == 0 && e[3] == 0, 2),
        (|e, w| e[0] > w && e[0] <= 2 * w && e[1] > 0, 3),
        (|e, w| e[0] > 2 * w && e[1] > 0 && e[2] == 0 && e[3] == 0, 3),
        (
            |e, w| e[0] > 2 * w && e[0] <= 3 * w && e[1] > 0 && e[2] > 0,
            4,
        ),
        (|e, w| e[0] > 3 * w && e[1] > 0 && e[2] > 0 && e[3] == 0, 4),
        (
            |e, w| {
                e[0] > 3 * w
                    && e[1] > 0
                    && e[1] <= w
                    && e[2] > 0
                    && e[2] <= w
                    && e[3] > 0
                    && e[3] <= w
            },
            4,
        ),
        (|e, w| e[0] > 3 * w && e[1] > w && e[2] > 0 && e[3] > 0, 5),
    ],
};

fn evaluate(layout: &TableLayout, e: &[u64], fam: &CodeFamily) -> PaperDistance {
    let ps = fam.ps();
    let w = fam.ps_minus_one();
    let p = u64::from(fam.field().p());
    let s = fam.s();
    let row = |kind: String| Some(format!("{}/{kind}", layout.id));
    if e.iter().all(|&x| x == 0) {
        return PaperDistance {
            value: PaperValue::Finite(1),
            row: row("full-space".into()),
        };
    }
    if e.iter().all(|&x| x == ps) {
        return PaperDistance {
            value: PaperValue::ZeroCode,
            row: row("zero-code".into()),
        };
    }
    if *e.last().unwrap() == 0 {
        return match layout.small.iter().position(|(pred, _)| pred(e, w)) {
            Some(i) => PaperDistance {
                value: PaperValue::Finite(layout.small[i].1),
                row: row(format!("small-{}", i + 1)),
            },
            None => PaperDistance {
                value: PaperValue::Unsupported,
                row: None,
            },
        };
    }
    // General rows: the leading columns may sit at p^s, the rest lie in
    // [1, p^s - 1] and each contributes coefficient * (beta+2) p^tau.
    let saturated = e.iter().take_while(|&&x| x == ps).count();
    if e[saturated..].contains(&ps) {
        return PaperDistance {
            value: PaperValue::Unsupported,
            row: None,
        };
    }
    let value = e[saturated..]
        .iter()
        .zip(&layout.coeffs[saturated..])
        .map(|(&x, &c)| c * min_pt_at_least(x, p, s).expect("exponent in [1, p^s - 1]"))
        .min()
        .unwrap();
    let kind = if saturated == 0 {
        "general".to_string()
    } else {
        format!("saturated-{saturated}")
    };
    PaperDistance {
        value: PaperValue::Finite(value),
        row: row(kind),
    }
}

/// Looks the code up in the published tables, choosing the table and column
/// order the way the tables are stated.
pub fn distance_paper_table(code: &CodeSpec) -> PaperDistance {
    let fam = code.family();
    let get = |l| code.exp(l).unwrap();
    match fam.case() {
        CaseTag::C1 => {
            let (i, j) = (get(Label::U), get(Label::Phi));
            if j <= i {
                evaluate(&C1_U_MAJOR, &[i, j], fam)
            } else {
                evaluate(&C1_PHI_MAJOR, &[j, i], fam)
            }
        }
        CaseTag::C2 => {
            let u = get(Label::U);
            let (a, b) = (get(Label::F1), get(Label::F2));
            let (hi, lo) = (a.max(b), a.min(b));
            if u >= hi {
                evaluate(&C2_U_OUTER, &[u, hi, lo], fam)
            } else if u <= lo {
                evaluate(&C2_U_INNER, &[hi, lo, u], fam)
            } else {
                evaluate(&C2_F_OUTER, &[hi, u, lo], fam)
            }
        }
        CaseTag::C3 => {
            let mut e = code.exps().to_vec();
            e.sort_unstable_by(|a, b| b.cmp(a));
            evaluate(&C3_SORTED, &e, fam)
        }
    }
}

/// Both evaluations of one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub exact: Distance,
    pub witness_t: Option<u64>,
    pub paper: PaperValue,
    pub paper_row: Option<String>,
    pub agrees: bool,
}

pub fn distance_report(code: &CodeSpec) -> DistanceReport {
    let exact = distance_exact(code);
    let paper = distance_paper_table(code);
    DistanceReport {
        exact: exact.distance,
        witness_t: exact.witness_t,
        paper: paper.value,
        paper_row: paper.row,
        agrees: paper.value.as_distance() == Some(exact.distance),
    }
}

/// A code whose exact distance differs from the table value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub code: CodeSpec,
    pub exact: Distance,
    pub paper: PaperValue,
    pub row: Option<String>,
}

impl Discrepancy {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "code": self.code.to_json(),
            "exact": self.exact,
            "paper": self.paper,
            "row": self.row,
        })
    }
}

/// Every code of the family (passing `filter`) where the two evaluations
/// disagree, in exponent-lexicographic order.
pub fn discrepancy_report<F>(
    family: &Family,
    filter: F,
    budget: &Budget,
) -> Result<Vec<Discrepancy>>
where
    F: Fn(&CodeSpec) -> bool + Sync,
{
    let count = budget.check_specs(family)?;
    Ok((0..count)
        .into_par_iter()
        .filter_map(|idx| {
            let code = crate::code::spec_at(family, idx);
            if !filter(&code) {
                return None;
            }
            let r = distance_report(&code);
            (!r.agrees).then_some(Discrepancy {
                code,
                exact: r.exact,
                paper: r.paper,
                row: r.paper_row,
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::spec_at;
    use crate::field::make_field;
    use crate::poly::Poly;

    fn family(p: u64, m: u32, s: u32) -> Family {
        CodeFamily::new(&make_field(p, m).unwrap(), s).unwrap()
    }

    fn code(fam: &Family, exps: &[u64]) -> CodeSpec {
        CodeSpec::new(fam, exps.to_vec()).unwrap()
    }

    /// Direct t-by-t minimization.
    fn sweep_distance(code: &CodeSpec) -> ExactDistance {
        let fam = code.family();
        let p = u64::from(fam.field().p());
        let degrees = code.spectrum().degrees();
        let mut best: Option<(u64, u64)> = None;
        for t in 0..fam.ps() {
            let deg = mask_degree(&degrees, code.component_mask(t));
            if deg == 5 {
                continue;
            }
            let v = digit_product(t, p) * (deg as u64 + 1);
            if best.is_none_or(|(b, _)| v < b) {
                best = Some((v, t));
            }
        }
        match best {
            Some((d, t)) => ExactDistance {
                distance: Distance::Finite(d),
                witness_t: Some(t),
            },
            None => ExactDistance {
                distance: Distance::ZeroCode,
                witness_t: None,
            },
        }
    }

    #[test]
    fn digit_profiles() {
        assert_eq!(pt_weight(0, 7, 1).unwrap().p_t, 1);
        assert_eq!(pt_weight(6, 7, 1).unwrap().p_t, 7);
        let d = pt_weight(13, 7, 2).unwrap();
        assert_eq!((d.digits.clone(), d.p_t), (vec![6, 1], 14));
        assert_eq!(
            pt_weight(49, 7, 2),
            Err(Error::TOutOfRange { t: 49, max: 48 })
        );
    }

    #[test]
    fn digit_product_is_weight_of_x_minus_one_power() {
        for (p, s) in [(7u64, 1u32), (7, 2), (11, 1), (11, 2)] {
            let f = make_field(p, 1).unwrap();
            let base = Poly::from_ints(&f, &[-1, 1]);
            let mut acc = Poly::one(&f);
            for t in 0..p.pow(s) {
                assert_eq!(pt_weight(t, p, s).unwrap().p_t, acc.weight() as u64);
                acc = acc.mul(&base).unwrap();
            }
        }
    }

    #[test]
    fn closed_form_minimum() {
        assert_eq!(min_pt_at_least(0, 7, 1).unwrap(), 1);
        assert_eq!(min_pt_at_least(1, 7, 1).unwrap(), 2);
        assert_eq!(min_pt_at_least(44, 7, 2).unwrap(), 21);
        assert_eq!(
            min_pt_at_least(49, 7, 2),
            Err(Error::LOutOfRange { l: 49, max: 48 })
        );
        for (p, s) in [
            (7u64, 1u32),
            (7, 2),
            (7, 3),
            (11, 1),
            (11, 2),
            (19, 1),
            (19, 2),
        ] {
            let ps = p.pow(s);
            let mut suffix_min = u64::MAX;
            let mut mins = vec![0; ps as usize];
            for t in (0..ps).rev() {
                suffix_min = suffix_min.min(digit_product(t, p));
                mins[t as usize] = suffix_min;
            }
            for l in 0..ps {
                assert_eq!(
                    min_pt_at_least(l, p, s).unwrap(),
                    mins[l as usize],
                    "p={p} s={s} l={l}"
                );
            }
        }
    }

    #[test]
    fn range_minimum_matches_scan() {
        for (p, s) in [(7u64, 2u32), (11, 2), (7, 3)] {
            let ps = p.pow(s);
            for lo in (0..ps).step_by(3) {
                for hi in (lo..ps).step_by(5) {
                    let scan = (lo..=hi).map(|t| (digit_product(t, p), t)).min().unwrap();
                    assert_eq!(
                        min_pt_in_range(lo, hi, p),
                        (scan.1, scan.0),
                        "lo={lo} hi={hi}"
                    );
                }
            }
        }
    }

    #[test]
    fn exact_examples() {
        let fam = family(7, 1, 1);
        assert_eq!(
            distance_exact(&code(&fam, &[1, 0])).distance,
            Distance::Finite(2)
        );
        assert_eq!(
            distance_exact(&code(&fam, &[7, 6])).distance,
            Distance::Finite(14)
        );
        assert_eq!(
            distance_exact(&code(&fam, &[6, 7])).distance,
            Distance::Finite(35)
        );
        assert_eq!(
            distance_exact(&code(&fam, &[2, 1])).distance,
            Distance::Finite(3)
        );
        let full = distance_exact(&CodeSpec::full_space(&fam));
        assert_eq!(
            (full.distance, full.witness_t),
            (Distance::Finite(1), Some(0))
        );
        assert_eq!(
            distance_exact(&CodeSpec::zero_code(&fam)).distance,
            Distance::ZeroCode
        );
    }

    #[test]
    fn interval_engine_matches_sweep() {
        for (p, m, s) in [
            (7u64, 1u32, 1u32),
            (7, 1, 2),
            (19, 1, 1),
            (11, 1, 1),
            (7, 2, 1),
            (13, 1, 2),
        ] {
            let fam = family(p, m, s);
            let count = fam.spec_count().unwrap();
            for idx in (0..count).step_by((count / 2000).max(1) as usize) {
                let c = spec_at(&fam, idx);
                assert_eq!(distance_exact(&c), sweep_distance(&c), "{:?}", c.exps());
            }
        }
    }

    #[test]
    fn paper_examples() {
        let fam = family(7, 1, 1);
        let r = distance_paper_table(&code(&fam, &[2, 1]));
        assert_eq!(
            (r.value, r.row.as_deref()),
            (PaperValue::Finite(3), Some("c1/u-major/general"))
        );
        let r = distance_paper_table(&code(&fam, &[6, 7]));
        assert_eq!(
            (r.value, r.row.as_deref()),
            (PaperValue::Finite(28), Some("c1/phi-major/saturated-1"))
        );
        let fam = family(11, 1, 1);
        let r = distance_paper_table(&code(&fam, &[11, 11, 11, 11, 10]));
        assert_eq!(
            (r.value, r.row.as_deref()),
            (PaperValue::Finite(55), Some("c3/sorted/saturated-4"))
        );
    }

    #[test]
    fn tables_cover_every_code() {
        for (p, m, s) in [
            (7u64, 1u32, 1u32),
            (7, 1, 2),
            (19, 1, 1),
            (11, 1, 1),
            (7, 2, 1),
        ] {
            let fam = family(p, m, s);
            for idx in 0..fam.spec_count().unwrap() {
                let c = spec_at(&fam, idx);
                assert_ne!(
                    distance_paper_table(&c).value,
                    PaperValue::Unsupported,
                    "{:?}",
                    c.exps()
                );
            }
        }
    }

    #[test]
    fn discrepancies_in_case_one() {
        let fam = family(7, 1, 1);
        let d = discrepancy_report(&fam, |_| true, &Budget::default()).unwrap();
        assert!(d
            .iter()
            .any(|x| x.code.exps() == [6, 7] && x.exact == Distance::Finite(35)));
        assert!(d
            .iter()
            .all(|x| x.row.as_deref().unwrap().starts_with("c1/phi-major")));
    }

    #[test]
    fn cases_two_and_three_agree() {
        for p in [11u64, 19] {
            let fam = family(p, 1, 1);
            assert!(discrepancy_report(&fam, |_| true, &Budget::default())
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn monotone_and_singleton() {
        let fam = family(7, 1, 2);
        let n = fam.n() as u64;
        for idx in (0..fam.spec_count().unwrap()).step_by(7) {
            let c = spec_at(&fam, idx);
            let Some(d) = distance_exact(&c).distance.finite() else {
                continue;
            };
            assert!(d <= n - c.dimension() + 1);
            let e = c.exps();
            if e[0] < fam.ps() {
                let bigger = code(&fam, &[e[0] + 1, e[1]]);
                assert!(distance_exact(&bigger).distance.value() >= d || bigger.is_zero_code());
            }
        }
    }
}
