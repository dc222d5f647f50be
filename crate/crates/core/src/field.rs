//! Arithmetic in GF(p^m) for primes p >= 7.
//!
//! Elements use the polynomial basis over GF(p). An element is stored as the
//! base-p packing `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` of its coefficient
//! vector, so the packed integer order is the lexicographic order of the
//! coefficient vector read from `c_{m-1}` down to `c_0`. Every canonical choice
//! in the crate (modulus, fifth root of unity, factor labels) uses that order.
//!
//! Multiplication goes through log/exp tables when `q <= TABLE_LIMIT`, and
//! through schoolbook multiplication modulo the defining polynomial otherwise.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

/// Fields up to this order get log/exp tables.
pub const TABLE_LIMIT: u32 = 1 << 20;

/// Shared handle to a field; contexts are immutable after construction.
pub type Field = Arc<FieldCtx>;

/// An element of some GF(p^m), in packed polynomial-basis form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The packed base-p value.
    pub fn packed(self) -> u32 {
        self.0
    }

    pub fn from_packed(v: u32) -> Self {
        FieldElement(v)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow,
}

/// Second operand of [`FieldCtx::fe_arith`]: an element, or an integer exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operand {
    Element(FieldElement),
    Int(u64),
}

struct LogTables {
    // exp has length 2(q-1) so that log a + log b never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    /// Monic defining polynomial over GF(p), lowest degree first, length m+1.
    modulus: Vec<u32>,
    tables: Option<LogTables>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Builds GF(p^m) with the smallest monic irreducible modulus of degree m
/// (by packed value of its lower coefficients). For m = 1 the modulus is x.
pub fn make_field(p: u64, m: u32) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::CompositeP { p });
    }
    if p < 7 {
        return Err(Error::PTooSmall { p });
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = p
        .checked_pow(m)
        .filter(|&q| q <= u64::from(u32::MAX))
        .ok_or_else(|| Error::Overflow {
            what: format!("{p}^{m}"),
        })?;
    let p = p as u32;
    let q = q as u32;
    let modulus = if m == 1 {
        vec![0, 1]
    } else {
        smallest_irreducible(p, m)
    };
    let mut ctx = FieldCtx {
        p,
        m,
        q,
        modulus,
        tables: None,
    };
    if q <= TABLE_LIMIT {
        ctx.tables = Some(ctx.build_tables());
    }
    Ok(Arc::new(ctx))
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = u64::from(p).pow(m);
    (0..count)
        .map(|packed| {
            let mut f = unpack_u64(packed, p, m as usize);
            f.push(1);
            f
        })
        .find(|f| fp_is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

fn unpack_u64(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((v % u64::from(p)) as u32);
        v /= u64::from(p);
    }
    out
}

/// Remainder of `a` modulo a monic `b` over GF(p); both lowest degree first.
fn fp_rem_monic(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let p = u64::from(p);
    let db = b.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|&c| u64::from(c)).collect();
    while r.len() > db {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let off = r.len() - db;
            for (i, &bc) in b[..db].iter().enumerate() {
                r[off + i] = (r[off + i] + p - lead * u64::from(bc) % p) % p;
            }
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = (f.len() - 1) as u32;
    for d in 1..=deg / 2 {
        let count = u64::from(p).pow(d);
        for packed in 0..count {
            let mut g = unpack_u64(packed, p, d as usize);
            g.push(1);
            if fp_rem_monic(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldCtx {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field order p^m.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Defining polynomial, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.q
    }

    fn check(&self, a: FieldElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Element from a coefficient vector (lowest degree first, at most m entries).
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::FieldMismatch);
        }
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            v = v * u64::from(self.p) + u64::from(c);
        }
        Ok(FieldElement(v as u32))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElement {
        FieldElement(k.rem_euclid(i64::from(self.p)) as u32)
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        unpack_u64(u64::from(a.0), self.p, self.m as usize)
    }

    /// All elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.m == 1 {
            return FieldElement(((u64::from(a.0) + u64::from(b.0)) % u64::from(self.p)) as u32);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..self.m {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.m == 1 {
            return FieldElement((self.p - a.0) % self.p);
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..self.m {
            let d = (self.p - x % self.p) % self.p;
            out += d * place;
            x /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        if self.m == 1 {
            return FieldElement(((u64::from(a.0) * u64::from(b.0)) % u64::from(self.p)) as u32);
        }
        match &self.tables {
            Some(t) => FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_schoolbook(a, b),
        }
    }

    /// Multiplication straight from the definition: polynomial product
    /// reduced modulo the defining polynomial. Builds the tables.
    pub fn mul_schoolbook(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = u64::from(self.p);
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * self.m as usize - 1];
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u64::from(xi) * u64::from(yj)) % p;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let r = fp_rem_monic(&prod, &self.modulus, self.p);
        self.element(&r[..r.len().min(self.m as usize)])
            .expect("reduced coefficients are in range")
    }

    /// Square-and-multiply; `pow(0, 0)` is 1.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => {
                let order = self.q - 1;
                FieldElement(t.exp[((order - t.log[a.0 as usize]) % order) as usize])
            }
            None => self.pow(a, u64::from(self.q) - 2),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Checked arithmetic entry point: validates operand membership first.
    pub fn fe_arith(&self, op: FieldOp, a: FieldElement, b: Operand) -> Result<FieldElement> {
        self.check(a)?;
        let elem = |b: Operand| match b {
            Operand::Element(e) => self.check(e).map(|_| e),
            Operand::Int(k) => Ok(self.from_int((k % u64::from(self.p)) as i64)),
        };
        match op {
            FieldOp::Add => Ok(self.add(a, elem(b)?)),
            FieldOp::Sub => Ok(self.sub(a, elem(b)?)),
            FieldOp::Mul => Ok(self.mul(a, elem(b)?)),
            FieldOp::Inv => self.inv(a),
            FieldOp::Pow => match b {
                Operand::Int(e) => Ok(self.pow(a, e)),
                Operand::Element(_) => Err(Error::Invalid("pow takes an integer exponent".into())),
            },
        }
    }

    /// The Frobenius map x -> x^p.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, u64::from(self.p))
    }

    /// Canonical primitive 5th root of unity: the smallest element (packed
    /// order) with w^5 = 1 and w != 1. Absent unless 5 | q - 1.
    pub fn find_fifth_root(&self) -> Option<FieldElement> {
        if self.q % 5 != 1 {
            return None;
        }
        self.elements()
            .skip(2)
            .find(|&a| self.pow(a, 5) == FieldElement::ONE)
    }

    /// Human-readable element: an integer for prime fields, otherwise a
    /// polynomial in the generator `a`.
    pub fn format(&self, e: FieldElement) -> String {
        if self.m == 1 {
            return e.0.to_string();
        }
        let terms: Vec<String> = self
            .coeffs(e)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// JSON form: integer for prime fields, coefficient list otherwise.
    pub fn to_json(&self, e: FieldElement) -> Value {
        if self.m == 1 {
            Value::from(e.0)
        } else {
            Value::from(self.coeffs(e))
        }
    }

    fn build_tables(&self) -> LogTables {
        let order = u64::from(self.q) - 1;
        let primes = prime_factors(order);
        let schoolbook_pow = |a: FieldElement, mut e: u64| {
            let (mut base, mut acc) = (a, FieldElement::ONE);
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.mul_schoolbook(acc, base);
                }
                base = self.mul_schoolbook(base, base);
                e >>= 1;
            }
            acc
        };
        let generator = (2..self.q)
            .map(FieldElement)
            .find(|&g| {
                primes
                    .iter()
                    .all(|&r| schoolbook_pow(g, order / r) != FieldElement::ONE)
            })
            .unwrap_or(FieldElement::ONE);
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut x = FieldElement::ONE;
        for i in 0..order as u32 {
            exp.push(x.0);
            log[x.0 as usize] = i;
            x = self.mul_schoolbook(x, generator);
        }
        exp.extend_from_within(..);
        LogTables { exp, log }
    }
}
