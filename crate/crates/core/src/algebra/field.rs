//! Finite fields GF(p^r) in a polynomial basis.
//!
//! Elements are identified by their index in the canonical order: the
//! coefficient vector (c_0, ..., c_{r-1}) of c_0 + c_1 a + ... over GF(p)
//! is read as base-p digits, least significant first. Index 0 is zero and
//! index 1 is one.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

const TABLE_LIMIT: u32 = 256;
const MAX_DEGREE: u32 = 8;

/// An element of a finite field, stored as its canonical index.
///
/// Arithmetic goes through the owning [`Field`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Fq(pub(crate) u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
struct Inner {
    p: u32,
    r: u32,
    q: u32,
    /// Monic modulus, low to high, length r + 1.
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    trace: Vec<u32>,
}

/// The field GF(q), q = p^r, together with its modulus.
///
/// Cloning is cheap.
#[derive(Clone, Debug)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p), both low to high.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let off = a.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                let sub = (lead as u64 * mi as u64 % p as u64) as u32;
                a[off + i] = (a[off + i] + p - sub) % p;
            }
        }
    }
    a
}

fn monic_polys(p: u32, deg: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(deg);
    (0..count).map(move |mut idx| {
        let mut v = Vec::with_capacity(deg as usize + 1);
        for _ in 0..deg {
            v.push((idx % p as u64) as u32);
            idx /= p as u64;
        }
        v.push(1);
        v
    })
}

/// Irreducibility over GF(p) by trial division against all monic
/// polynomials of degree 1..=deg/2.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() as u32 - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for g in monic_polys(p, d) {
            if poly_rem(modulus, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The least monic irreducible polynomial of degree `r` over GF(p),
/// ordering candidates by their coefficients from x^{r-1} down to x^0.
pub fn default_modulus(p: u32, r: u32) -> Vec<u32> {
    let count = (p as u64).pow(r);
    for idx in 0..count {
        // Digits of idx, most significant first, fill x^{r-1} .. x^0.
        let mut v = vec![0u32; r as usize + 1];
        v[r as usize] = 1;
        let mut t = idx;
        for i in 0..r as usize {
            v[i] = (t % p as u64) as u32;
            t /= p as u64;
        }
        if r == 1 || is_irreducible(&v, p) {
            return v;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// GF(p^r) with the given modulus (low to high, monic, degree r), or the
    /// default modulus when `None`.
    pub fn new(p: u32, r: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !is_prime(p) || p >= 1 << 16 {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        if r == 0 || r > MAX_DEGREE {
            return Err(Error::InvalidField(format!(
                "extension degree {r} outside 1..={MAX_DEGREE}"
            )));
        }
        let q64 = (p as u64).pow(r);
        if q64 > u32::MAX as u64 / 2 {
            return Err(Error::InvalidField(format!("field size {p}^{r} too large")));
        }
        let q = q64 as u32;
        let modulus = match modulus {
            None => default_modulus(p, r),
            Some(m) => {
                if m.len() != r as usize + 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus must have {} coefficients",
                        r + 1
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidField(
                        "modulus coefficient out of range".into(),
                    ));
                }
                if m[r as usize] != 1 {
                    return Err(Error::InvalidField("modulus must be monic".into()));
                }
                if !is_irreducible(&m, p) {
                    return Err(Error::InvalidField("modulus is reducible".into()));
                }
                m
            }
        };
        let mut inner = Inner {
            p,
            r,
            q,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            inv: Vec::new(),
            trace: Vec::new(),
        };
        if q <= TABLE_LIMIT {
            let qs = q as usize;
            inner.add = vec![0; qs * qs];
            inner.mul = vec![0; qs * qs];
            for a in 0..q {
                for b in 0..q {
                    inner.add[a as usize * qs + b as usize] = raw_add(&inner, a, b);
                    inner.mul[a as usize * qs + b as usize] = raw_mul(&inner, a, b);
                }
            }
            inner.inv = vec![0; qs];
            for a in 1..q {
                let b = (1..q)
                    .find(|&b| inner.mul[a as usize * qs + b as usize] == 1)
                    .expect("field elements are invertible");
                inner.inv[a as usize] = b;
            }
            inner.trace = (0..q).map(|a| raw_trace(&inner, a)).collect();
        }
        Ok(Field(Arc::new(inner)))
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn r(&self) -> u32 {
        self.0.r
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Fq {
        Fq(0)
    }

    pub fn one(&self) -> Fq {
        Fq(1)
    }

    pub fn element(&self, index: u32) -> Result<Fq> {
        if index < self.0.q {
            Ok(Fq(index))
        } else {
            Err(Error::InvalidField(format!(
                "element index {index} outside GF({})",
                self.0.q
            )))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.0.q).map(Fq)
    }

    /// Polynomial-basis coefficients of `a`, low to high.
    pub fn coeffs(&self, a: Fq) -> Vec<u32> {
        digits(&self.0, a.0)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Fq> {
        if c.len() != self.0.r as usize || c.iter().any(|&x| x >= self.0.p) {
            return Err(Error::InvalidField("bad coefficient vector".into()));
        }
        Ok(Fq(undigits(&self.0, c)))
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let i = &self.0;
        if i.add.is_empty() {
            Fq(raw_add(i, a.0, b.0))
        } else {
            Fq(i.add[a.0 as usize * i.q as usize + b.0 as usize])
        }
    }

    pub fn neg(&self, a: Fq) -> Fq {
        let i = &self.0;
        let d: Vec<u32> = digits(i, a.0).iter().map(|&c| (i.p - c) % i.p).collect();
        Fq(undigits(i, &d))
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        let i = &self.0;
        if i.mul.is_empty() {
            Fq(raw_mul(i, a.0, b.0))
        } else {
            Fq(i.mul[a.0 as usize * i.q as usize + b.0 as usize])
        }
    }

    pub fn pow(&self, a: Fq, mut e: u64) -> Fq {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a.is_zero() {
            return None;
        }
        let i = &self.0;
        if i.inv.is_empty() {
            Some(self.pow(a, i.q as u64 - 2))
        } else {
            Some(Fq(i.inv[a.0 as usize]))
        }
    }

    /// tr(a) = a + a^p + ... + a^{p^{r-1}}, returned as a value in 0..p.
    pub fn trace(&self, a: Fq) -> u32 {
        let i = &self.0;
        if i.trace.is_empty() {
            raw_trace(i, a.0)
        } else {
            i.trace[a.0 as usize]
        }
    }

    /// The trace as an element of the prime subfield.
    pub fn trace_elem(&self, a: Fq) -> Fq {
        Fq(self.trace(a))
    }

    pub fn dot(&self, u: &[Fq], v: &[Fq]) -> Fq {
        u.iter()
            .zip(v)
            .fold(self.zero(), |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Fq {
        Fq(v.rem_euclid(self.0.p as i64) as u32)
    }
}

fn digits(i: &Inner, mut a: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(i.r as usize);
    for _ in 0..i.r {
        d.push(a % i.p);
        a /= i.p;
    }
    d
}

fn undigits(i: &Inner, d: &[u32]) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * i.p + c)
}

fn raw_add(i: &Inner, a: u32, b: u32) -> u32 {
    if i.r == 1 {
        return (a + b) % i.p;
    }
    if i.p == 2 {
        return a ^ b;
    }
    let (da, db) = (digits(i, a), digits(i, b));
    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % i.p).collect();
    undigits(i, &s)
}

fn raw_mul(i: &Inner, a: u32, b: u32) -> u32 {
    if i.r == 1 {
        return (a as u64 * b as u64 % i.p as u64) as u32;
    }
    let (da, db) = (digits(i, a), digits(i, b));
    let mut prod = vec![0u32; 2 * i.r as usize - 1];
    for (x, &ca) in da.iter().enumerate() {
        for (y, &cb) in db.iter().enumerate() {
            prod[x + y] = ((prod[x + y] as u64 + ca as u64 * cb as u64) % i.p as u64) as u32;
        }
    }
    let mut rem = poly_rem(&prod, &i.modulus, i.p);
    rem.resize(i.r as usize, 0);
    undigits(i, &rem)
}

fn raw_trace(i: &Inner, a: u32) -> u32 {
    if i.r == 1 {
        return a;
    }
    let mut acc = 0u32;
    let mut cur = a;
    for _ in 0..i.r {
        acc = raw_add(i, acc, cur);
        // cur <- cur^p
        let mut pw = 1u32;
        for _ in 0..i.p {
            pw = raw_mul(i, pw, cur);
        }
        cur = pw;
    }
    debug_assert!(acc < i.p, "trace must land in the prime field");
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_trace_is_identity() {
        let f = Field::prime(2).unwrap();
        assert_eq!(f.trace(f.one()), 1);
        let f3 = Field::prime(3).unwrap();
        for a in f3.elements() {
            assert_eq!(f3.trace(a), a.index());
        }
    }

    #[test]
    fn gf4_trace_of_generator() {
        let f = Field::new(2, 2, Some(vec![1, 1, 1])).unwrap();
        let alpha = f.from_coeffs(&[0, 1]).unwrap();
        // alpha + alpha^2 = alpha + (alpha + 1) = 1
        assert_eq!(f.add(alpha, f.mul(alpha, alpha)), f.one());
        assert_eq!(f.trace(alpha), 1);
        assert_eq!(f.trace(f.zero()), 0);
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]);
        assert_eq!(default_modulus(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(default_modulus(2, 4), vec![1, 1, 0, 0, 1]);
        assert_eq!(default_modulus(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(Field::new(4, 1, None).is_err());
        assert!(Field::new(2, 2, Some(vec![1, 0, 1])).is_err());
        assert!(Field::new(2, 9, None).is_err());
    }

    #[test]
    fn field_axioms_small() {
        for (p, r) in [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2)] {
            let f = Field::new(p, r, None).unwrap();
            let q = f.q();
            assert_eq!(q, p.pow(r));
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                // Frobenius fixes the prime field image of the trace.
                assert_eq!(f.pow(f.trace_elem(a), p as u64), f.trace_elem(a));
            }
        }
    }

    #[test]
    fn untabled_matches_tabled() {
        let big = Field::new(2, 8, None).unwrap();
        let inner = &big.0;
        for a in [0u32, 1, 7, 100, 255] {
            for b in [0u32, 3, 200] {
                assert_eq!(big.mul(Fq(a), Fq(b)).0, raw_mul(inner, a, b));
            }
            assert_eq!(big.trace(Fq(a)), raw_trace(inner, a));
        }
        let huge = Field::new(3, 6, None).unwrap();
        let a = Fq(500);
        assert_eq!(huge.mul(a, huge.inv(a).unwrap()), huge.one());
    }
}
