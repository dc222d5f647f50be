//! The labelled factorization of x^5 - 1 over GF(q).
//!
//! Which factors appear depends only on q mod 5:
//!
//! | case | q mod 5 | factors                                  |
//! |------|---------|------------------------------------------|
//! | C1   | 2, 3    | U = x - 1, Phi = x^4 + x^3 + x^2 + x + 1 |
//! | C2   | 4       | U, F1, F2 (self-reciprocal quadratics)   |
//! | C3   | 1       | U, W1..W4 with Wi = x - w^i              |
//!
//! In C2 the quadratics are `x^2 - a x + 1` for the two roots `a` of
//! `y^2 + y - 1` (the values of `w + w^{-1}`); F1 takes the smaller root.
//! The fifth root `w` lives in GF(q^2) there and is taken to be a root of F1,
//! so F1 carries the coset {1, 4} and F2 the coset {2, 3}.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// 5 does not divide q^2 - 1.
    C1,
    /// 5 divides q + 1 but not q - 1.
    C2,
    /// 5 divides q - 1.
    C3,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::C1 => "C1",
            CaseTag::C2 => "C2",
            CaseTag::C3 => "C3",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    U,
    Phi,
    F1,
    F2,
    W1,
    W2,
    W3,
    W4,
}

impl Label {
    pub const ALL: [Label; 8] = [
        Label::U,
        Label::Phi,
        Label::F1,
        Label::F2,
        Label::W1,
        Label::W2,
        Label::W3,
        Label::W4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Label::U => "U",
            Label::Phi => "Phi",
            Label::F1 => "F1",
            Label::F2 => "F2",
            Label::W1 => "W1",
            Label::W2 => "W2",
            Label::W3 => "W3",
            Label::W4 => "W4",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        Label::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownLabel {
                label: s.to_string(),
            })
    }
}

/// Classifies q by its residue mod 5.
pub fn classify_case(q: u64) -> Result<CaseTag> {
    match q % 5 {
        0 => Err(Error::FiveDividesQ { q }),
        1 => Ok(CaseTag::C3),
        4 => Ok(CaseTag::C2),
        _ => Ok(CaseTag::C1),
    }
}

/// Orbits of multiplication by q on Z/5, each sorted, ordered by smallest member.
pub fn cyclotomic_cosets(q: u64) -> Result<Vec<Vec<u32>>> {
    classify_case(q)?;
    let mult = (q % 5) as u32;
    let mut seen = [false; 5];
    let mut out = Vec::new();
    for start in 0..5u32 {
        if seen[start as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            orbit.push(x);
            x = x * mult % 5;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Factor {
    pub label: Label,
    pub poly: Poly,
    /// Exponents i of the roots w^i of this factor.
    pub coset: Vec<u32>,
}

impl Factor {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }
}

/// Case-classified factorization of x^5 - 1 with reciprocal pairing.
#[derive(Clone, Debug)]
pub struct Spectrum {
    field: Field,
    case: CaseTag,
    omega: Option<FieldElement>,
    factors: Vec<Factor>,
    recip: Vec<usize>,
}

impl PartialEq for Spectrum {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field
    }
}

impl Eq for Spectrum {}

impl Spectrum {
    /// Factors x^5 - 1 over the given field.
    pub fn new(field: &Field) -> Spectrum {
        let case = classify_case(u64::from(field.q())).expect("p >= 7 so 5 never divides q");
        let mut omega = None;
        let mut factors = vec![Factor {
            label: Label::U,
            poly: Poly::from_ints(field, &[-1, 1]),
            coset: vec![0],
        }];
        match case {
            CaseTag::C1 => factors.push(Factor {
                label: Label::Phi,
                poly: Poly::from_ints(field, &[1, 1, 1, 1, 1]),
                coset: vec![1, 2, 3, 4],
            }),
            CaseTag::C2 => {
                let minus_one = field.from_int(-1);
                let roots: Vec<FieldElement> = field
                    .elements()
                    .filter(|&y| {
                        field
                            .add(field.add(field.mul(y, y), y), minus_one)
                            .is_zero()
                    })
                    .collect();
                assert_eq!(roots.len(), 2, "y^2 + y - 1 splits when q = 4 mod 5");
                for (label, a, coset) in [
                    (Label::F1, roots[0], vec![1, 4]),
                    (Label::F2, roots[1], vec![2, 3]),
                ] {
                    let poly = Poly::from_coeffs(
                        field,
                        vec![FieldElement::ONE, field.neg(a), FieldElement::ONE],
                    );
                    factors.push(Factor { label, poly, coset });
                }
            }
            CaseTag::C3 => {
                let w = field.find_fifth_root().expect("q = 1 mod 5");
                omega = Some(w);
                for (i, label) in [Label::W1, Label::W2, Label::W3, Label::W4]
                    .into_iter()
                    .enumerate()
                {
                    let root = field.pow(w, i as u64 + 1);
                    let poly = Poly::from_coeffs(field, vec![field.neg(root), FieldElement::ONE]);
                    factors.push(Factor {
                        label,
                        poly,
                        coset: vec![i as u32 + 1],
                    });
                }
            }
        }
        let recip = factors
            .iter()
            .map(|f| {
                let r = f.poly.reciprocal();
                factors
                    .iter()
                    .position(|g| g.poly == r)
                    .expect("the reciprocal of a factor of x^5 - 1 is again a factor")
            })
            .collect();
        Spectrum {
            field: field.clone(),
            case,
            omega,
            factors,
            recip,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    /// The canonical primitive fifth root of unity, present in C3 only.
    pub fn omega(&self) -> Option<FieldElement> {
        self.omega
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn labels(&self) -> Vec<Label> {
        self.factors.iter().map(|f| f.label).collect()
    }

    pub fn index_of(&self, label: Label) -> Option<usize> {
        self.factors.iter().position(|f| f.label == label)
    }

    pub fn factor(&self, label: Label) -> Option<&Factor> {
        self.factors.iter().find(|f| f.label == label)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(Factor::degree).collect()
    }

    /// Index of the factor whose polynomial is the reciprocal of factor `i`.
    pub fn recip_index(&self, i: usize) -> usize {
        self.recip[i]
    }

    /// Label of the reciprocal factor.
    pub fn recip(&self, label: Label) -> Option<Label> {
        self.index_of(label)
            .map(|i| self.factors[self.recip[i]].label)
    }

    pub fn product(&self) -> Poly {
        self.factors.iter().fold(Poly::one(&self.field), |acc, f| {
            acc.mul(&f.poly).expect("same field")
        })
    }

    pub fn to_json(&self) -> Value {
        let f = &self.field;
        let factors: Vec<Value> = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, fac)| {
                json!({
                    "label": fac.label,
                    "poly": fac.poly.to_string(),
                    "degree": fac.degree(),
                    "coset": fac.coset,
                    "recip": self.factors[self.recip[i]].label,
                })
            })
            .collect();
        json!({
            "p": f.p(),
            "m": f.m(),
            "q": f.q(),
            "case": self.case,
            "omega": self.omega.map(|w| f.to_json(w)),
            "factors": factors,
            "cosets": cyclotomic_cosets(u64::from(f.q())).expect("q coprime to 5"),
        })
    }
}

/// Shorthand for [`Spectrum::new`].
pub fn factor_x5m1(field: &Field) -> Spectrum {
    Spectrum::new(field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn case_classification() {
        assert_eq!(classify_case(7), Ok(CaseTag::C1));
        assert_eq!(classify_case(13), Ok(CaseTag::C1));
        assert_eq!(classify_case(19), Ok(CaseTag::C2));
        assert_eq!(classify_case(49), Ok(CaseTag::C2));
        assert_eq!(classify_case(11), Ok(CaseTag::C3));
        assert_eq!(classify_case(25), Err(Error::FiveDividesQ { q: 25 }));
    }

    #[test]
    fn cosets() {
        // 7 = 2 mod 5: 1 -> 2 -> 4 -> 3
        assert_eq!(
            cyclotomic_cosets(7).unwrap(),
            vec![vec![0], vec![1, 2, 3, 4]]
        );
        // 19 = 4 mod 5: 1 <-> 4, 2 <-> 3
        assert_eq!(
            cyclotomic_cosets(19).unwrap(),
            vec![vec![0], vec![1, 4], vec![2, 3]]
        );
        assert_eq!(
            cyclotomic_cosets(11).unwrap(),
            (0..5).map(|i| vec![i]).collect::<Vec<_>>()
        );
        assert!(cyclotomic_cosets(35).is_err());
    }

    #[test]
    fn gf7_is_case_one() {
        let sp = Spectrum::new(&make_field(7, 1).unwrap());
        assert_eq!(sp.case(), CaseTag::C1);
        assert_eq!(sp.labels(), vec![Label::U, Label::Phi]);
        assert_eq!(
            sp.factor(Label::Phi).unwrap().poly.to_string(),
            "x^4+x^3+x^2+x+1"
        );
    }

    #[test]
    fn gf19_golden_quadratics() {
        // Roots of y^2 + y - 1 mod 19 are 4 and 14 (sqrt 5 = 9), giving
        // x^2 - 4x + 1 = x^2 + 15x + 1 and x^2 - 14x + 1 = x^2 + 5x + 1.
        let sp = Spectrum::new(&make_field(19, 1).unwrap());
        assert_eq!(sp.case(), CaseTag::C2);
        let polys: Vec<String> = sp.factors().iter().map(|f| f.poly.to_string()).collect();
        assert_eq!(polys, vec!["x+18", "x^2+15x+1", "x^2+5x+1"]);
    }

    #[test]
    fn gf11_linear_factors() {
        let f = make_field(11, 1).unwrap();
        let sp = Spectrum::new(&f);
        assert_eq!(sp.omega(), Some(f.from_int(3)));
        let roots: Vec<u32> = sp.factors()[1..]
            .iter()
            .map(|fac| f.neg(fac.poly.coeff(0)).packed())
            .collect();
        assert_eq!(roots, vec![3, 9, 5, 4]);
    }

    #[test]
    fn structural_invariants() {
        for (p, m) in [
            (7, 1),
            (13, 1),
            (19, 1),
            (29, 1),
            (11, 1),
            (31, 1),
            (7, 2),
            (11, 2),
            (13, 2),
            (7, 4),
        ] {
            let field = make_field(p, m).unwrap();
            let sp = Spectrum::new(&field);
            assert_eq!(
                sp.product(),
                Poly::x_n_minus_one(&field, 5),
                "q = {}",
                field.q()
            );
            let cosets = cyclotomic_cosets(u64::from(field.q())).unwrap();
            assert_eq!(sp.len(), cosets.len());
            let mut sizes: Vec<usize> = cosets.iter().map(Vec::len).collect();
            let mut degs = sp.degrees();
            sizes.sort_unstable();
            degs.sort_unstable();
            assert_eq!(sizes, degs);
            for (i, fac) in sp.factors().iter().enumerate() {
                let r = sp.recip_index(i);
                assert_eq!(sp.recip_index(r), i);
                assert_eq!(fac.poly.reciprocal(), sp.factors()[r].poly);
                // No roots in GF(q) for the non-linear factors.
                if fac.degree() > 1 {
                    assert!(field.elements().all(|x| !fac.poly.eval(x).is_zero()));
                }
                if fac.degree() == 4 {
                    // No monic quadratic divisor either.
                    for b in field.elements() {
                        for c in field.elements() {
                            let quad = Poly::from_coeffs(&field, vec![c, b, FieldElement::ONE]);
                            assert!(!fac.poly.rem(&quad).unwrap().is_zero());
                        }
                    }
                }
            }
            if let Some(w) = sp.omega() {
                for (i, fac) in sp.factors()[1..].iter().enumerate() {
                    assert!(fac.poly.eval(field.pow(w, i as u64 + 1)).is_zero());
                }
            }
        }
    }

    #[test]
    fn reciprocal_pairing() {
        let sp = Spectrum::new(&make_field(11, 1).unwrap());
        assert_eq!(sp.recip(Label::U), Some(Label::U));
        assert_eq!(sp.recip(Label::W1), Some(Label::W4));
        assert_eq!(sp.recip(Label::W2), Some(Label::W3));
        let sp = Spectrum::new(&make_field(19, 1).unwrap());
        assert_eq!(sp.recip(Label::F1), Some(Label::F1));
        assert_eq!(sp.recip(Label::F2), Some(Label::F2));
        assert_eq!(sp.recip(Label::Phi), None);
    }

    #[test]
    fn label_round_trip() {
        for l in Label::ALL {
            assert_eq!(l.name().parse::<Label>().unwrap(), l);
        }
        assert!("X".parse::<Label>().is_err());
    }
}
