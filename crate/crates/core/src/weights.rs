//! Weight distributions of the cyclic codes of length 5 and the MacWilliams
//! transform.
//!
//! Every divisor code of x^5 - 1 is MDS, so its weight distribution depends
//! only on q and deg g; the closed forms below are the standard MDS counts.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::code::SimpleRootCode;
use crate::error::{Error, Result};

/// A_0..A_n for a code of length n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightEnumerator {
    pub n: usize,
    pub counts: Vec<u128>,
}

impl WeightEnumerator {
    pub fn new(counts: Vec<u128>) -> WeightEnumerator {
        WeightEnumerator {
            n: counts.len() - 1,
            counts,
        }
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().map(|&c| BigInt::from(c)).sum()
    }

    /// Smallest nonzero weight carrying a codeword, if any.
    pub fn min_weight(&self) -> Option<usize> {
        self.counts
            .iter()
            .skip(1)
            .position(|&c| c != 0)
            .map(|i| i + 1)
    }

    /// Rows "weight,multiplicity", one per weight 0..=n.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,multiplicity\n");
        for (w, c) in self.counts.iter().enumerate() {
            writeln!(out, "{w},{c}").unwrap();
        }
        out
    }
}

fn to_counts(v: Vec<BigInt>) -> Result<Vec<u128>> {
    v.into_iter()
        .map(|c| c.to_u128().ok_or(Error::CountOverflow))
        .collect()
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Closed-form distribution of a length-5 cyclic code whose generator has
/// the given degree (0..=4) over GF(q).
pub fn weights_by_degree(degree: usize, q: u64) -> Result<WeightEnumerator> {
    let q = BigInt::from(q);
    let one = BigInt::one();
    let qm = &q - &one;
    let c = |v: i64| BigInt::from(v);
    let mut a = vec![BigInt::zero(); 6];
    a[0] = one.clone();
    match degree {
        0 => {
            for (i, slot) in a.iter_mut().enumerate() {
                *slot = binomial(5, i) * num_traits::pow(qm.clone(), i);
            }
        }
        1 => {
            a[2] = c(10) * &qm;
            a[3] = c(10) * &qm * (&q - 2);
            a[4] = c(5) * &qm * (&q * &q - c(3) * &q + 3);
            a[5] = &qm * (&q * &q * &q - c(4) * &q * &q + c(6) * &q - 4);
        }
        2 => {
            a[3] = c(10) * &qm;
            a[4] = c(5) * &qm * (&q - 3);
            a[5] = &qm * (&q * &q - c(4) * &q + 6);
        }
        3 => {
            a[4] = c(5) * &qm;
            a[5] = &qm * (&q - 4);
        }
        4 => a[5] = qm,
        _ => return Err(Error::ZeroComponent),
    }
    Ok(WeightEnumerator::new(to_counts(a)?))
}

/// Weight distribution of a nonzero length-5 cyclic code.
pub fn weight_table(src: &SimpleRootCode) -> Result<WeightEnumerator> {
    if src.is_zero_code() {
        return Err(Error::ZeroComponent);
    }
    weights_by_degree(
        src.generator_degree(),
        u64::from(src.spectrum().field().q()),
    )
}

/// Minimum distance of a length-5 cyclic code: deg g + 1, or `None` for the
/// zero code.
pub fn simple_distance(src: &SimpleRootCode) -> Option<u32> {
    (!src.is_zero_code()).then(|| src.generator_degree() as u32 + 1)
}

/// The component distance as listed in the published case analysis:
/// `None` when the generator is not listed, `Some(None)` for the zero code
/// (listed as infinite). Audit only: the listing gives 4 for phi5 and omits
/// the single roots x - w^i, i > 0.
pub fn printed_component_distance(src: &SimpleRootCode) -> Option<Option<u32>> {
    use crate::spectrum::{CaseTag, Label};
    if src.is_zero_code() {
        return Some(None);
    }
    let inc = src.included();
    let deg = src.generator_degree() as u32;
    let listed = match src.spectrum().case() {
        CaseTag::C1 => match inc.as_slice() {
            [] => 1,
            [Label::U] => 2,
            [Label::Phi] => 4,
            _ => return None,
        },
        CaseTag::C2 => deg + 1,
        CaseTag::C3 => match inc.as_slice() {
            [] => 1,
            [Label::U] => 2,
            [_] => return None,
            _ => deg + 1,
        },
    };
    Some(Some(listed))
}

/// Dual weight distribution of an [n, k] code over GF(q), computed exactly
/// with Krawtchouk sums.
pub fn macwilliams(a: &WeightEnumerator, k: u32, q: u64) -> Result<WeightEnumerator> {
    let n = a.n;
    let qb = BigInt::from(q);
    let size = num_traits::pow(qb.clone(), k as usize);
    let total = a.total();
    if total != size {
        return Err(Error::InconsistentEnumerator {
            total: total.to_string(),
            expected: size.to_string(),
        });
    }
    let qm: BigInt = &qb - 1;
    let qm_pows: Vec<BigInt> = (0..=n).map(|e| num_traits::pow(qm.clone(), e)).collect();
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, &ai) in a.counts.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            // Krawtchouk K_j(i)
            let mut kr = BigInt::zero();
            for h in 0..=j.min(i) {
                let term = binomial(i, h) * binomial(n - i, j - h) * &qm_pows[j - h];
                if h % 2 == 0 {
                    kr += term;
                } else {
                    kr -= term;
                }
            }
            acc += kr * BigInt::from(ai);
        }
        if !(&acc % &size).is_zero() {
            return Err(Error::Internal(format!(
                "MacWilliams coefficient {j} is not an integer"
            )));
        }
        out.push(acc / &size);
    }
    if out.iter().any(|b| b < &BigInt::zero()) {
        return Err(Error::Internal(
            "MacWilliams produced a negative count".into(),
        ));
    }
    Ok(WeightEnumerator::new(to_counts(out)?))
}
