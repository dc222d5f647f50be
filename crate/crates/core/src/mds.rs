//! Singleton defect and the classification of MDS codes of length 5p^s.
//!
//! A nonzero code is MDS exactly when deg g is 0, 1 or n - 1. The sweep
//! checks that claim against defects computed from the exact distance.

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{spec_at, CodeSpec, Family};
use crate::distance::{distance_exact, Distance};
use crate::error::{Error, Result};
use crate::oracle::Budget;

/// Which degree pattern made the code MDS.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MdsClause {
    /// The full space, d = 1.
    DegreeZero,
    /// One linear factor to the first power, d = 2.
    DegreeOne,
    /// A repetition-type code, d = n.
    DegreeNMinusOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MdsVerdict {
    pub is_mds: bool,
    /// n - k + 1 - d; absent for the zero code.
    pub defect: Option<u64>,
    pub clause: Option<MdsClause>,
    pub distance: Distance,
    pub degree: u64,
}

/// (n - k + 1) - d for a nonzero code.
pub fn singleton_defect(code: &CodeSpec) -> Result<u64> {
    let d = distance_exact(code)
        .distance
        .finite()
        .ok_or(Error::ZeroCodeHasNoDistance)?;
    let bound = code.n() as u64 - code.dimension() + 1;
    bound
        .checked_sub(d)
        .ok_or_else(|| Error::Internal(format!("distance {d} exceeds the Singleton bound {bound}")))
}

/// The clause the degree of g falls under, if any.
pub fn predicted_clause(code: &CodeSpec) -> Option<MdsClause> {
    if code.is_zero_code() {
        return None;
    }
    let deg = code.generator_degree();
    match deg {
        0 => Some(MdsClause::DegreeZero),
        1 => Some(MdsClause::DegreeOne),
        _ if deg + 1 == code.n() as u64 => Some(MdsClause::DegreeNMinusOne),
        _ => None,
    }
}

/// Verdict from the degree pattern, cross-checked against the Singleton defect.
pub fn classify_mds(code: &CodeSpec) -> Result<MdsVerdict> {
    let clause = predicted_clause(code);
    let distance = distance_exact(code).distance;
    let defect = match distance {
        Distance::ZeroCode => None,
        Distance::Finite(_) => Some(singleton_defect(code)?),
    };
    if clause.is_some() != (defect == Some(0)) {
        return Err(Error::Internal(format!(
            "exponents {:?}: degree clause {clause:?} but Singleton defect {defect:?}",
            code.exps()
        )));
    }
    Ok(MdsVerdict {
        is_mds: clause.is_some(),
        defect,
        clause,
        distance,
        degree: code.generator_degree(),
    })
}

/// Every code of the family with its verdict, in exponent-lexicographic order.
pub fn mds_verdicts(family: &Family, budget: &Budget) -> Result<Vec<(CodeSpec, MdsVerdict)>> {
    let count = budget.check_specs(family)?;
    (0..count)
        .into_par_iter()
        .map(|idx| {
            let code = spec_at(family, idx);
            classify_mds(&code).map(|v| (code, v))
        })
        .collect()
}

/// All MDS codes of the family, found from defects alone and required to
/// coincide with the degree classification.
pub fn mds_scan(family: &Family, budget: &Budget) -> Result<Vec<CodeSpec>> {
    let count = budget.check_specs(family)?;
    let by_defect: Vec<CodeSpec> = (0..count)
        .into_par_iter()
        .map(|idx| spec_at(family, idx))
        .filter(|c| !c.is_zero_code() && singleton_defect(c) == Ok(0))
        .collect();
    let by_degree: Vec<CodeSpec> = (0..count)
        .into_par_iter()
        .map(|idx| spec_at(family, idx))
        .filter(|c| predicted_clause(c).is_some())
        .collect();
    if by_defect != by_degree {
        return Err(Error::Internal(format!(
            "{} codes have zero defect but {} match a degree clause",
            by_defect.len(),
            by_degree.len()
        )));
    }
    Ok(by_defect)
}
