//! Brute-force ground truth: enumerate every codeword, or check duality by
//! explicit inner products.
//!
//! A code of dimension k over GF(p^m) is a GF(p)-space of dimension km with
//! basis a^j x^i g(x) (a the field generator). Walking the coefficient vector
//! like an odometer changes the codeword by one basis vector per step, so
//! each step costs O(deg g) and weights are tracked incrementally.

use std::sync::Arc;

use rayon::prelude::*;

use crate::code::{CodeSpec, Family, SimpleRootCode};
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Poly;
use crate::weights::WeightEnumerator;

/// Environment variable overriding the default codeword budget.
pub const BUDGET_ENV: &str = "RRCODES_BUDGET";

/// Work limits for exhaustive computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest q^k the enumerators will walk.
    pub max_codewords: u64,
    /// Largest number of exponent vectors a sweep will visit.
    pub max_specs: u64,
}

impl Default for Budget {
    fn default() -> Self {
        let max_codewords = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&b| b > 0)
            .unwrap_or(1 << 22);
        Budget {
            max_codewords,
            max_specs: 1 << 20,
        }
    }
}

impl Budget {
    pub fn new(max_codewords: u64) -> Budget {
        Budget {
            max_codewords: max_codewords.max(1),
            ..Budget::default()
        }
    }

    pub fn with_max_specs(self, max_specs: u64) -> Budget {
        Budget {
            max_specs: max_specs.max(1),
            ..self
        }
    }

    /// Number of specs in the family, if the sweep fits.
    pub fn check_specs(&self, family: &Family) -> Result<u64> {
        let base = family.ps() + 1;
        let k = family.spectrum().len() as u32;
        match family.spec_count() {
            Some(c) if c <= self.max_specs => Ok(c),
            _ => Err(Error::BudgetExceeded {
                needed: format!("{base}^{k} specs"),
                budget: self.max_specs,
            }),
        }
    }

    fn check_codewords(&self, q: u32, k: u64) -> Result<()> {
        let fits = u32::try_from(k)
            .ok()
            .and_then(|k| u64::from(q).checked_pow(k))
            .is_some_and(|c| c <= self.max_codewords);
        if fits {
            Ok(())
        } else {
            Err(Error::BudgetExceeded {
                needed: format!("{q}^{k} codewords"),
                budget: self.max_codewords,
            })
        }
    }
}

/// Anything that is a cyclic code given by a generator dividing x^n - 1.
pub trait CyclicCode {
    fn field(&self) -> &Field;
    fn length(&self) -> usize;
    fn generator(&self) -> Poly;

    fn dimension(&self) -> usize {
        self.length() - self.generator().degree().expect("generator is nonzero")
    }
}

impl CyclicCode for CodeSpec {
    fn field(&self) -> &Field {
        self.family().field()
    }

    fn length(&self) -> usize {
        self.n()
    }

    fn generator(&self) -> Poly {
        self.generator_poly()
    }
}

impl CyclicCode for SimpleRootCode {
    fn field(&self) -> &Field {
        self.spectrum().field()
    }

    fn length(&self) -> usize {
        5
    }

    fn generator(&self) -> Poly {
        SimpleRootCode::generator(self)
    }
}

/// One nonzero GF(p) digit of a basis vector.
#[derive(Clone, Copy)]
struct Entry {
    /// Index into the flattened (coordinate, digit) layout.
    slot: u32,
    coord: u32,
    digit: u32,
}

/// Sparse GF(p)-basis vectors over the flattened (coordinate, digit) layout.
struct DigitBasis {
    p: u32,
    m: usize,
    n: usize,
    vecs: Vec<Vec<Entry>>,
}

fn digits_of(field: &Field, e: FieldElement) -> impl Iterator<Item = u32> {
    let p = field.p();
    let mut v = e.packed();
    (0..field.m()).map(move |_| {
        let d = v % p;
        v /= p;
        d
    })
}

impl DigitBasis {
    fn new(field: &Field, g: &Poly, n: usize, k: usize) -> DigitBasis {
        let m = field.m() as usize;
        let p = field.p();
        let mut vecs = Vec::with_capacity(k * m);
        for i in 0..k {
            let word = g.cyclic_shift(i, n);
            for j in 0..m {
                let scale = FieldElement::from_packed(p.pow(j as u32));
                let mut v = Vec::new();
                for (pos, &c) in word.iter().enumerate() {
                    for (d, digit) in digits_of(field, field.mul(scale, c)).enumerate() {
                        if digit != 0 {
                            v.push(Entry {
                                slot: (pos * m + d) as u32,
                                coord: pos as u32,
                                digit,
                            });
                        }
                    }
                }
                vecs.push(v);
            }
        }
        DigitBasis { p, m, n, vecs }
    }
}

/// Running codeword with per-coordinate nonzero digit counts.
struct Walker<'a> {
    basis: &'a DigitBasis,
    digits: Vec<u32>,
    nonzero: Vec<u32>,
    weight: usize,
}

impl<'a> Walker<'a> {
    fn new(basis: &'a DigitBasis) -> Walker<'a> {
        Walker {
            basis,
            digits: vec![0; basis.n * basis.m],
            nonzero: vec![0; basis.n],
            weight: 0,
        }
    }

    fn add(&mut self, idx: usize) {
        let p = self.basis.p;
        for e in &self.basis.vecs[idx] {
            let slot = e.slot as usize;
            let old = self.digits[slot];
            let mut new = old + e.digit;
            if new >= p {
                new -= p;
            }
            self.digits[slot] = new;
            let coord = e.coord as usize;
            if old == 0 {
                self.nonzero[coord] += 1;
                if self.nonzero[coord] == 1 {
                    self.weight += 1;
                }
            } else if new == 0 {
                self.nonzero[coord] -= 1;
                if self.nonzero[coord] == 0 {
                    self.weight -= 1;
                }
            }
        }
    }
}

/// Histogram of weights over all codewords.
fn enumerate(field: &Field, g: &Poly, n: usize, budget: &Budget) -> Result<Vec<u64>> {
    let k = n - g.degree().ok_or(Error::DivisionByZero)?;
    budget.check_codewords(field.q(), k as u64)?;
    let basis = Arc::new(DigitBasis::new(field, g, n, k));
    let total_digits = basis.vecs.len();
    let p = u64::from(basis.p);
    // Fix the top digits per chunk; enough chunks to keep every worker busy.
    let mut top = 0;
    while top < total_digits && p.pow(top as u32) < 256 {
        top += 1;
    }
    let low = total_digits - top;
    let chunks = p.pow(top as u32);
    let hist = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut w = Walker::new(&basis);
            let mut c = chunk;
            for d in low..total_digits {
                for _ in 0..c % p {
                    w.add(d);
                }
                c /= p;
            }
            let mut hist = vec![0u64; n + 1];
            let mut counter = vec![0u32; low];
            'walk: loop {
                hist[w.weight] += 1;
                let mut d = 0;
                loop {
                    if d == low {
                        break 'walk;
                    }
                    w.add(d);
                    if counter[d] + 1 < basis.p {
                        counter[d] += 1;
                        break;
                    }
                    counter[d] = 0;
                    d += 1;
                }
            }
            hist
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(hist)
}

/// Weight distribution by exhaustive enumeration.
pub fn brute_enumerator<C: CyclicCode>(code: &C, budget: &Budget) -> Result<WeightEnumerator> {
    let hist = enumerate(code.field(), &code.generator(), code.length(), budget)?;
    Ok(WeightEnumerator::new(
        hist.into_iter().map(u128::from).collect(),
    ))
}

/// Minimum nonzero weight by exhaustive enumeration.
pub fn brute_distance<C: CyclicCode>(code: &C, budget: &Budget) -> Result<Distance> {
    let hist = enumerate(code.field(), &code.generator(), code.length(), budget)?;
    Ok(match hist.iter().skip(1).position(|&c| c != 0) {
        Some(i) => Distance::Finite(i as u64 + 1),
        None => Distance::ZeroCode,
    })
}

/// Whether every basis word x^i g_a of `a` is orthogonal to every basis word
/// x^j g_b of `b` under the standard inner product.
pub fn brute_orthogonal(a: &CodeSpec, b: &CodeSpec, budget: &Budget) -> Result<bool> {
    if !(Arc::ptr_eq(a.family(), b.family()) || **a.family() == **b.family()) {
        return Err(Error::ContextMismatch);
    }
    let field = a.family().field();
    let n = a.n();
    let (ka, kb) = (a.dimension() as usize, b.dimension() as usize);
    let work = (ka as u64) * (kb as u64) * (n as u64);
    if work > budget.max_codewords.saturating_mul(16) {
        return Err(Error::BudgetExceeded {
            needed: format!("{work} multiplications"),
            budget: budget.max_codewords,
        });
    }
    let (ga, gb) = (a.generator_poly(), b.generator_poly());
    let words_b: Vec<Vec<FieldElement>> = (0..kb).map(|j| gb.cyclic_shift(j, n)).collect();
    Ok((0..ka).into_par_iter().all(|i| {
        let u = ga.cyclic_shift(i, n);
        words_b.iter().all(|v| {
            u.iter()
                .zip(v)
                .fold(FieldElement::ZERO, |acc, (&x, &y)| {
                    field.add(acc, field.mul(x, y))
                })
                .is_zero()
        })
    }))
}

/// Orthogonality of a code against its computed dual.
pub fn brute_dual_check(code: &CodeSpec, budget: &Budget) -> Result<bool> {
    brute_orthogonal(code, &code.dual_code(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeFamily;
    use crate::field::make_field;
    use crate::spectrum::Label;
    use crate::weights::weight_table;

    fn family(p: u64, m: u32) -> Family {
        CodeFamily::new(&make_field(p, m).unwrap(), 1).unwrap()
    }

    #[test]
    fn distances() {
        let fam = family(7, 1);
        let b = Budget::default();
        assert_eq!(
            brute_distance(&CodeSpec::new(&fam, vec![6, 7]).unwrap(), &b).unwrap(),
            Distance::Finite(35)
        );
        assert_eq!(
            brute_distance(&CodeSpec::new(&fam, vec![7, 6]).unwrap(), &b).unwrap(),
            Distance::Finite(14)
        );
        assert_eq!(
            brute_distance(&CodeSpec::zero_code(&fam), &b).unwrap(),
            Distance::ZeroCode
        );
        let u = SimpleRootCode::new(fam.spectrum(), &[Label::U]).unwrap();
        assert_eq!(brute_distance(&u, &b).unwrap(), Distance::Finite(2));
    }

    #[test]
    fn enumerators() {
        let b = Budget::default();
        let fam = family(11, 1);
        let u = SimpleRootCode::new(fam.spectrum(), &[Label::U]).unwrap();
        assert_eq!(
            brute_enumerator(&u, &b).unwrap().counts,
            vec![1, 0, 100, 900, 4550, 9090]
        );
        let fam = family(7, 1);
        let phi = SimpleRootCode::new(fam.spectrum(), &[Label::Phi]).unwrap();
        assert_eq!(
            brute_enumerator(&phi, &b).unwrap().counts,
            vec![1, 0, 0, 0, 0, 6]
        );
        let zero = SimpleRootCode::new(fam.spectrum(), &[Label::U, Label::Phi]).unwrap();
        assert_eq!(
            brute_enumerator(&zero, &b).unwrap().counts,
            vec![1, 0, 0, 0, 0, 0]
        );
    }

    #[test]
    fn extension_field_enumeration() {
        // GF(49) is a C2 field; compare every nonzero length-5 code small enough to walk.
        let fam = family(7, 2);
        for c in SimpleRootCode::all(fam.spectrum())
            .into_iter()
            .filter(|c| !c.is_zero_code() && c.dimension() <= 3)
        {
            let brute = brute_enumerator(&c, &Budget::default()).unwrap();
            assert_eq!(brute, weight_table(&c).unwrap(), "{}", c.describe());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let fam = family(7, 1);
        let err = brute_distance(&CodeSpec::full_space(&fam), &Budget::new(1000)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn duality() {
        let b = Budget::default();
        let fam = family(7, 1);
        assert!(brute_dual_check(&CodeSpec::full_space(&fam), &b).unwrap());
        let c = CodeSpec::new(&fam, vec![2, 3]).unwrap();
        assert_eq!(c.dual_code().exps(), &[5, 4]);
        assert!(brute_dual_check(&c, &b).unwrap());
        let fam = family(11, 1);
        let c = CodeSpec::new(&fam, vec![1, 2, 0, 0, 0]).unwrap();
        assert!(brute_dual_check(&c, &b).unwrap());
        assert!(!brute_orthogonal(&c, &c.exponent_complement(), &b).unwrap());
    }
}
