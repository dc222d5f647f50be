//! Dense univariate polynomials over a [`FieldCtx`](crate::field::FieldCtx).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Coefficients lowest degree first, with no trailing zeros. The zero
/// polynomial has an empty coefficient vector and no degree.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field.q(), self)
    }
}

pub(crate) fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, FieldElement::ONE)
    }

    pub fn constant(field: &Field, c: FieldElement) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    /// c·x^k
    pub fn monomial(field: &Field, c: FieldElement, k: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(field, coeffs)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, FieldElement::ONE, 1)
    }

    pub fn from_coeffs(field: &Field, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Integer coefficients mapped into the prime subfield.
    pub fn from_ints(field: &Field, ints: &[i64]) -> Poly {
        Poly::from_coeffs(field, ints.iter().map(|&k| field.from_int(k)).collect())
    }

    /// x^n - 1
    pub fn x_n_minus_one(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[0] = field.from_int(-1);
        coeffs[n] = FieldElement::ONE;
        Poly::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn compatible(&self, other: &Poly) -> Result<()> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.compatible(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::from_coeffs(f, coeffs))
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly {
            field: f.clone(),
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let f = &self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.compatible(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(f));
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::from_coeffs(f, out))
    }

    /// Quotient and remainder with `deg r < deg divisor`. A zero dividend
    /// gives `(0, 0)`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.compatible(divisor)?;
        let f = &self.field;
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(lead)?;
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElement::ZERO; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + db], lead_inv);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, d));
            }
        }
        rem.truncate(db);
        Ok((Poly::from_coeffs(f, quot), Poly::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal(
                "polynomial division left a remainder".into(),
            ))
        }
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(self.field.inv(l).expect("leading coefficient is nonzero")),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.compatible(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `self^e`, reduced modulo `modulus` when one is given.
    pub fn pow(&self, mut e: u64, modulus: Option<&Poly>) -> Result<Poly> {
        let reduce = |p: Poly| -> Result<Poly> {
            match modulus {
                Some(m) => p.rem(m),
                None => Ok(p),
            }
        };
        let mut base = reduce(self.clone())?;
        let mut acc = reduce(Poly::one(&self.field))?;
        while e > 0 {
            if e & 1 == 1 {
                acc = reduce(acc.mul(&base)?)?;
            }
            e >>= 1;
            if e > 0 {
                base = reduce(base.mul(&base)?)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Coefficient reversal `x^deg f(1/x)`.
    pub fn reversed(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Reversal normalized to be monic: the polynomial whose roots are the
    /// inverses of the roots of `self` (which must have nonzero constant term).
    pub fn reciprocal(&self) -> Poly {
        self.reversed().monic()
    }

    /// Cyclic shift by `k` positions modulo x^n - 1, as a length-n vector.
    pub fn cyclic_shift(&self, k: usize, n: usize) -> Vec<FieldElement> {
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let j = (i + k) % n;
            out[j] = f.add(out[j], c);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let f = &self.field;
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, "+")?;
            }
            first = false;
            let mut cs = f.format(c);
            if f.m() > 1 && cs.contains('+') && i > 0 {
                cs = format!("({cs})");
            }
            match (i, cs.as_str()) {
                (0, _) => write!(out, "{cs}")?,
                (1, "1") => write!(out, "x")?,
                (1, _) => write!(out, "{cs}x")?,
                (_, "1") => write!(out, "x^{i}")?,
                _ => write!(out, "{cs}x^{i}")?,
            }
        }
        Ok(())
    }
}
