//! Cyclic codes of length 5p^s described by one exponent per factor of x^5 - 1.
//!
//! Over GF(p^m), x^{5p^s} - 1 = (x^5 - 1)^{p^s}, so every cyclic code of that
//! length is generated by a product of the spectrum factors with exponents in
//! [0, p^s]. A [`CodeFamily`] fixes the field and s; a [`CodeSpec`] picks the
//! exponents.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::spectrum::{CaseTag, Label, Spectrum};

/// All cyclic codes of length 5p^s over one field.
#[derive(Debug)]
pub struct CodeFamily {
    spectrum: Arc<Spectrum>,
    s: u32,
    ps: u64,
    n: usize,
}

pub type Family = Arc<CodeFamily>;

impl PartialEq for CodeFamily {
    fn eq(&self, other: &Self) -> bool {
        self.s == other.s && *self.spectrum == *other.spectrum
    }
}

impl Eq for CodeFamily {}

impl CodeFamily {
    pub fn new(field: &Field, s: u32) -> Result<Family> {
        if s == 0 {
            return Err(Error::ZeroS);
        }
        let p = u64::from(field.p());
        let ps = p
            .checked_pow(s)
            .filter(|ps| ps.checked_mul(5).is_some_and(|n| n <= u64::from(u32::MAX)))
            .ok_or_else(|| Error::Overflow {
                what: format!("5*{p}^{s}"),
            })?;
        Ok(Arc::new(CodeFamily {
            spectrum: Arc::new(Spectrum::new(field)),
            s,
            ps,
            n: 5 * ps as usize,
        }))
    }

    pub fn spectrum(&self) -> &Arc<Spectrum> {
        &self.spectrum
    }

    pub fn field(&self) -> &Field {
        self.spectrum.field()
    }

    pub fn case(&self) -> CaseTag {
        self.spectrum.case()
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// p^s, the largest admissible exponent.
    pub fn ps(&self) -> u64 {
        self.ps
    }

    /// p^{s-1}
    pub fn ps_minus_one(&self) -> u64 {
        self.ps / u64::from(self.field().p())
    }

    /// Code length 5p^s.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct exponent vectors, (p^s + 1)^{#factors}.
    pub fn spec_count(&self) -> Option<u64> {
        (self.ps + 1).checked_pow(self.spectrum.len() as u32)
    }
}

/// Decodes `index` in mixed radix p^s + 1, first factor most significant.
pub fn spec_at(family: &Family, mut index: u64) -> CodeSpec {
    let base = family.ps + 1;
    let mut exps = vec![0; family.spectrum.len()];
    for e in exps.iter_mut().rev() {
        *e = index % base;
        index /= base;
    }
    CodeSpec {
        family: family.clone(),
        exps,
    }
}

/// A cyclic code of length 5p^s: exponent per spectrum factor, in factor order.
#[derive(Clone, Debug)]
pub struct CodeSpec {
    family: Family,
    exps: Vec<u64>,
}

impl PartialEq for CodeSpec {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
            && (Arc::ptr_eq(&self.family, &other.family) || *self.family == *other.family)
    }
}

impl Eq for CodeSpec {}

/// Validates an exponent map: every label of the spectrum exactly once,
/// every exponent in [0, p^s].
pub fn make_code(family: &Family, exps: &BTreeMap<Label, u64>) -> Result<CodeSpec> {
    let sp = family.spectrum();
    if let Some(l) = exps.keys().find(|l| sp.index_of(**l).is_none()) {
        return Err(Error::UnknownLabel {
            label: l.to_string(),
        });
    }
    let v = sp
        .labels()
        .into_iter()
        .map(|l| {
            exps.get(&l).copied().ok_or_else(|| Error::MissingLabel {
                label: l.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    CodeSpec::new(family, v)
}

impl CodeSpec {
    /// Positional constructor; exponents follow the spectrum's factor order.
    pub fn new(family: &Family, exps: Vec<u64>) -> Result<CodeSpec> {
        let sp = family.spectrum();
        if exps.len() != sp.len() {
            return Err(Error::ExponentCount {
                expected: sp.len(),
                got: exps.len(),
            });
        }
        for (fac, &e) in sp.factors().iter().zip(&exps) {
            if e > family.ps {
                return Err(Error::ExponentOutOfRange {
                    label: fac.label.to_string(),
                    value: e,
                    max: family.ps,
                });
            }
        }
        Ok(CodeSpec {
            family: family.clone(),
            exps,
        })
    }

    pub fn full_space(family: &Family) -> CodeSpec {
        CodeSpec {
            family: family.clone(),
            exps: vec![0; family.spectrum.len()],
        }
    }

    pub fn zero_code(family: &Family) -> CodeSpec {
        CodeSpec {
            family: family.clone(),
            exps: vec![family.ps; family.spectrum.len()],
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn spectrum(&self) -> &Arc<Spectrum> {
        self.family.spectrum()
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn exp(&self, label: Label) -> Option<u64> {
        self.spectrum().index_of(label).map(|i| self.exps[i])
    }

    pub fn exps_map(&self) -> BTreeMap<Label, u64> {
        self.spectrum()
            .labels()
            .into_iter()
            .zip(self.exps.iter().copied())
            .collect()
    }

    pub fn n(&self) -> usize {
        self.family.n
    }

    pub fn is_zero_code(&self) -> bool {
        self.exps.iter().all(|&e| e == self.family.ps)
    }

    pub fn is_full_space(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Sum of exponent times factor degree.
    pub fn generator_degree(&self) -> u64 {
        self.exps
            .iter()
            .zip(self.spectrum().degrees())
            .map(|(&e, d)| e * d as u64)
            .sum()
    }

    pub fn dimension(&self) -> u64 {
        self.n() as u64 - self.generator_degree()
    }

    /// The product of factor^exponent; it divides x^n - 1.
    pub fn generator_poly(&self) -> Poly {
        let field = self.family.field();
        self.spectrum()
            .factors()
            .iter()
            .zip(&self.exps)
            .fold(Poly::one(field), |acc, (fac, &e)| {
                acc.mul(&fac.poly.pow(e, None).expect("same field"))
                    .expect("same field")
            })
    }

    fn with_exps(&self, exps: Vec<u64>) -> CodeSpec {
        CodeSpec {
            family: self.family.clone(),
            exps,
        }
    }

    /// Dual code from first principles: the reciprocal of the parity-check
    /// polynomial h = (x^n - 1)/g, factored back over the spectrum.
    pub fn dual_code(&self) -> CodeSpec {
        let field = self.family.field();
        let g = self.generator_poly();
        let h = Poly::x_n_minus_one(field, self.n())
            .div_exact(&g)
            .expect("g divides x^n - 1");
        let mut rest = h.reciprocal();
        let mut exps = Vec::with_capacity(self.exps.len());
        for fac in self.spectrum().factors() {
            let mut e = 0;
            loop {
                let (q, r) = rest.divrem(&fac.poly).expect("same field");
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            exps.push(e);
        }
        debug_assert_eq!(rest, Poly::one(field));
        self.with_exps(exps)
    }

    /// The dual by exponent algebra: exponent of L is p^s - e(recip(L)).
    /// Agrees with [`CodeSpec::dual_code`] and is much cheaper.
    pub fn reciprocal_complement(&self) -> CodeSpec {
        let sp = self.spectrum();
        let ps = self.family.ps;
        self.with_exps(
            (0..self.exps.len())
                .map(|i| ps - self.exps[sp.recip_index(i)])
                .collect(),
        )
    }

    /// Exponent-wise complement p^s - e(L) without reciprocal pairing. This
    /// is the dual only when every factor is self-reciprocal (C1, C2).
    pub fn exponent_complement(&self) -> CodeSpec {
        let ps = self.family.ps;
        self.with_exps(self.exps.iter().map(|&e| ps - e).collect())
    }

    /// The length-5 code generated by the factors with exponent above t.
    pub fn component_code(&self, t: u64) -> Result<SimpleRootCode> {
        let max = self.family.ps - 1;
        if t > max {
            return Err(Error::TOutOfRange { t, max });
        }
        Ok(SimpleRootCode {
            spectrum: self.spectrum().clone(),
            mask: self.component_mask(t),
        })
    }

    pub(crate) fn component_mask(&self, t: u64) -> u8 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > t)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    fn check_family(&self, other: &CodeSpec) -> Result<()> {
        if Arc::ptr_eq(&self.family, &other.family) || *self.family == *other.family {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Whether `self` is contained in `other`, i.e. other's generator divides ours.
    pub fn is_subcode(&self, other: &CodeSpec) -> Result<bool> {
        self.check_family(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a >= b))
    }

    /// C^perp is contained in C.
    pub fn is_dual_containing(&self) -> bool {
        self.reciprocal_complement()
            .is_subcode(self)
            .expect("same family")
    }

    /// The same question answered from polynomials alone: C^perp = <h*> is
    /// inside C = <g> exactly when g divides h*.
    pub fn dual_containing_by_division(&self) -> bool {
        let g = self.generator_poly();
        let h = Poly::x_n_minus_one(self.family.field(), self.n())
            .div_exact(&g)
            .expect("g divides x^n - 1");
        h.reciprocal().rem(&g).expect("g is nonzero").is_zero()
    }

    /// The published containment criterion: every exponent at most
    /// (p^s - 1)/2 in C1; U that small and F1 + F2 <= p^s in C2; U that small
    /// and W1 + W2 + W3 + W4 <= p^s in C3. Kept for auditing only; it is not
    /// equivalent to [`CodeSpec::is_dual_containing`] in C2 and C3.
    pub fn printed_dual_containing(&self) -> bool {
        let ps = self.family.ps;
        let half = (ps - 1) / 2;
        let e = &self.exps;
        match self.family.case() {
            CaseTag::C1 => e.iter().all(|&x| x <= half),
            CaseTag::C2 => e[0] <= half && e[1] + e[2] <= ps,
            CaseTag::C3 => e[0] <= half && e[1..].iter().sum::<u64>() <= ps,
        }
    }

    pub fn to_json(&self) -> Value {
        let f = self.family.field();
        let exps: Map<String, Value> = self
            .exps_map()
            .into_iter()
            .map(|(l, e)| (l.to_string(), Value::from(e)))
            .collect();
        json!({
            "p": f.p(),
            "m": f.m(),
            "s": self.family.s,
            "case": self.family.case(),
            "exps": exps,
        })
    }
}

/// Reads exponents given either as a label map (`{"U":2,"Phi":1}`) or as a
/// positional list in factor order (`[2,1]`).
pub fn parse_exps(family: &Family, value: &Value) -> Result<CodeSpec> {
    match value {
        Value::Object(map) => {
            let mut exps = BTreeMap::new();
            for (k, v) in map {
                let label: Label = k.parse()?;
                let e = v.as_u64().ok_or_else(|| {
                    Error::Invalid(format!("exponent of {k} is not a nonnegative integer"))
                })?;
                exps.insert(label, e);
            }
            make_code(family, &exps)
        }
        Value::Array(items) => {
            let exps = items
                .iter()
                .map(|v| {
                    v.as_u64().ok_or_else(|| {
                        Error::Invalid("exponents must be nonnegative integers".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            CodeSpec::new(family, exps)
        }
        _ => Err(Error::Invalid(
            "exponents must be a JSON object or array".into(),
        )),
    }
}

/// A cyclic code of length 5 generated by a subset of the spectrum factors.
#[derive(Clone, Debug)]
pub struct SimpleRootCode {
    spectrum: Arc<Spectrum>,
    mask: u8,
}

impl PartialEq for SimpleRootCode {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && *self.spectrum == *other.spectrum
    }
}

impl Eq for SimpleRootCode {}

impl SimpleRootCode {
    pub fn new(spectrum: &Arc<Spectrum>, included: &[Label]) -> Result<SimpleRootCode> {
        let mut mask = 0u8;
        for &l in included {
            let i = spectrum.index_of(l).ok_or_else(|| Error::UnknownLabel {
                label: l.to_string(),
            })?;
            mask |= 1 << i;
        }
        Ok(SimpleRootCode {
            spectrum: spectrum.clone(),
            mask,
        })
    }

    pub fn from_mask(spectrum: &Arc<Spectrum>, mask: u8) -> SimpleRootCode {
        debug_assert!(u32::from(mask) < 1 << spectrum.len());
        SimpleRootCode {
            spectrum: spectrum.clone(),
            mask,
        }
    }

    /// Every divisor code of x^5 - 1, by mask order (including the zero code).
    pub fn all(spectrum: &Arc<Spectrum>) -> Vec<SimpleRootCode> {
        (0..1u8 << spectrum.len())
            .map(|m| SimpleRootCode::from_mask(spectrum, m))
            .collect()
    }

    pub fn spectrum(&self) -> &Arc<Spectrum> {
        &self.spectrum
    }

    pub fn mask(&self) -> u8 {
        self.mask
    }

    pub fn included(&self) -> Vec<Label> {
        self.spectrum
            .factors()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask & (1 << i) != 0)
            .map(|(_, f)| f.label)
            .collect()
    }

    pub fn is_zero_code(&self) -> bool {
        u32::from(self.mask) == (1 << self.spectrum.len()) - 1
    }

    pub fn generator_degree(&self) -> usize {
        self.spectrum
            .factors()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask & (1 << i) != 0)
            .map(|(_, f)| f.degree())
            .sum()
    }

    pub fn dimension(&self) -> usize {
        5 - self.generator_degree()
    }

    pub fn generator(&self) -> Poly {
        let field = self.spectrum.field();
        self.spectrum
            .factors()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask & (1 << i) != 0)
            .fold(Poly::one(field), |acc, (_, f)| {
                acc.mul(&f.poly).expect("same field")
            })
    }

    /// Dual within length 5: reciprocals of the excluded factors.
    pub fn dual(&self) -> SimpleRootCode {
        let k = self.spectrum.len();
        let mask = (0..k)
            .filter(|&i| self.mask & (1 << i) == 0)
            .fold(0u8, |m, i| m | (1 << self.spectrum.recip_index(i)));
        SimpleRootCode {
            spectrum: self.spectrum.clone(),
            mask,
        }
    }

    /// e.g. `<U*Phi>`, or `<1>` for the full space.
    pub fn describe(&self) -> String {
        let inc = self.included();
        if inc.is_empty() {
            "<1>".into()
        } else {
            format!(
                "<{}>",
                inc.iter().map(|l| l.name()).collect::<Vec<_>>().join("*")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn family(p: u64, s: u32) -> Family {
        CodeFamily::new(&make_field(p, 1).unwrap(), s).unwrap()
    }

    fn map(pairs: &[(Label, u64)]) -> BTreeMap<Label, u64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn make_code_validation() {
        let fam = family(7, 1);
        let full = make_code(&fam, &map(&[(Label::U, 0), (Label::Phi, 0)])).unwrap();
        assert!(full.is_full_space());
        assert_eq!(full.dimension(), 35);
        let zero = make_code(&fam, &map(&[(Label::U, 7), (Label::Phi, 7)])).unwrap();
        assert!(zero.is_zero_code());
        assert_eq!(zero.dimension(), 0);
        assert!(matches!(
            make_code(&fam, &map(&[(Label::U, 8), (Label::Phi, 0)])),
            Err(Error::ExponentOutOfRange {
                value: 8,
                max: 7,
                ..
            })
        ));
        assert!(matches!(
            make_code(&fam, &map(&[(Label::U, 1)])),
            Err(Error::MissingLabel { .. })
        ));
        assert!(matches!(
            make_code(
                &fam,
                &map(&[(Label::U, 1), (Label::Phi, 1), (Label::W1, 0)])
            ),
            Err(Error::UnknownLabel { .. })
        ));
    }

    #[test]
    fn generators() {
        let fam = family(7, 1);
        let f = fam.field().clone();
        let g = CodeSpec::new(&fam, vec![1, 0]).unwrap().generator_poly();
        assert_eq!(g, Poly::from_ints(&f, &[-1, 1]));
        // (x-1)^7 phi5^7 = (x^7 - 1) phi5(x^7) = x^35 - 1 in characteristic 7.
        assert_eq!(
            CodeSpec::new(&fam, vec![7, 7]).unwrap().generator_poly(),
            Poly::x_n_minus_one(&f, 35)
        );
        assert_eq!(
            CodeSpec::new(&fam, vec![0, 1])
                .unwrap()
                .generator_poly()
                .to_string(),
            "x^4+x^3+x^2+x+1"
        );
    }

    #[test]
    fn dimensions() {
        let fam = family(7, 1);
        assert_eq!(CodeSpec::new(&fam, vec![1, 0]).unwrap().dimension(), 34);
        assert_eq!(CodeSpec::new(&fam, vec![6, 7]).unwrap().dimension(), 1);
    }

    #[test]
    fn duals() {
        let fam = family(7, 1);
        assert!(CodeSpec::full_space(&fam).dual_code().is_zero_code());
        assert_eq!(
            CodeSpec::new(&fam, vec![2, 3]).unwrap().dual_code().exps(),
            &[5, 4]
        );
        let fam = family(11, 1);
        let c = CodeSpec::new(&fam, vec![1, 2, 0, 0, 0]).unwrap();
        assert_eq!(c.dual_code().exps(), &[10, 11, 11, 11, 9]);
        assert_eq!(c.exponent_complement().exps(), &[10, 9, 11, 11, 11]);
    }

    #[test]
    fn dual_routes_agree_and_invert() {
        for (p, m, s) in [(7, 1, 1), (19, 1, 1), (11, 1, 1), (7, 1, 2), (7, 2, 1)] {
            let fam = CodeFamily::new(&make_field(p, m).unwrap(), s).unwrap();
            let count = fam.spec_count().unwrap();
            let step = (count / 150).max(1);
            for idx in (0..count).step_by(step as usize) {
                let c = spec_at(&fam, idx);
                let d = c.dual_code();
                assert_eq!(d, c.reciprocal_complement());
                assert_eq!(d.dual_code(), c);
                assert_eq!(c.dimension() + d.dimension(), c.n() as u64);
                assert_eq!(
                    c.generator_poly().degree().unwrap() as u64 + c.dimension(),
                    c.n() as u64
                );
            }
        }
    }

    #[test]
    fn component_codes() {
        let fam = family(7, 1);
        let c = CodeSpec::new(&fam, vec![2, 1]).unwrap();
        assert_eq!(c.component_code(1).unwrap().included(), vec![Label::U]);
        let zero = c.component_code(0).unwrap();
        assert_eq!(zero.included(), vec![Label::U, Label::Phi]);
        assert!(zero.is_zero_code());
        assert!(c.component_code(2).unwrap().included().is_empty());
        assert_eq!(
            c.component_code(7),
            Err(Error::TOutOfRange { t: 7, max: 6 })
        );
    }

    #[test]
    fn subcodes() {
        let fam = family(7, 1);
        let a = CodeSpec::new(&fam, vec![3, 2]).unwrap();
        assert!(a.is_subcode(&CodeSpec::full_space(&fam)).unwrap());
        assert!(a
            .is_subcode(&CodeSpec::new(&fam, vec![1, 2]).unwrap())
            .unwrap());
        assert!(!a
            .is_subcode(&CodeSpec::new(&fam, vec![4, 0]).unwrap())
            .unwrap());
        let other = CodeSpec::full_space(&family(7, 2));
        assert_eq!(a.is_subcode(&other), Err(Error::ContextMismatch));
    }

    /// Divisibility criterion for containment against explicit membership:
    /// every basis vector x^i h* of the dual is a multiple of g exactly when
    /// the exponent test says the dual is a subcode.
    #[test]
    fn dual_containment_matches_membership() {
        for p in [7u64, 11, 19] {
            let fam = family(p, 1);
            let count = fam.spec_count().unwrap();
            for idx in (0..count).step_by((count / 60).max(1) as usize) {
                let c = spec_at(&fam, idx);
                let d = c.dual_code();
                let g = c.generator_poly();
                let dual_gen = d.generator_poly();
                let member = (0..d.dimension() as usize).all(|i| {
                    let v = Poly::from_coeffs(fam.field(), dual_gen.cyclic_shift(i, c.n()));
                    v.rem(&g).unwrap().is_zero()
                });
                assert_eq!(d.is_subcode(&c).unwrap(), member, "{:?}", c.exps());
            }
        }
    }

    #[test]
    fn parse_map_and_list() {
        let fam = family(7, 1);
        let a = parse_exps(&fam, &serde_json::json!({"U": 2, "Phi": 1})).unwrap();
        let b = parse_exps(&fam, &serde_json::json!([2, 1])).unwrap();
        assert_eq!(a, b);
        assert!(parse_exps(&fam, &serde_json::json!({"U": -1, "Phi": 1})).is_err());
        assert_eq!(
            a.to_json(),
            serde_json::json!({"p": 7, "m": 1, "s": 1, "case": "C1", "exps": {"U": 2, "Phi": 1}})
        );
    }

    #[test]
    fn simple_root_duals() {
        let sp = family(11, 1).spectrum().clone();
        for c in SimpleRootCode::all(&sp) {
            let d = c.dual();
            assert_eq!(c.dimension() + d.dimension(), 5);
            assert_eq!(d.dual(), c);
        }
        let c = SimpleRootCode::new(&sp, &[Label::U, Label::W1]).unwrap();
        assert_eq!(c.dual().included(), vec![Label::W1, Label::W2, Label::W3]);
    }
}
