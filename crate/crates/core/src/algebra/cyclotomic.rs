//! Exact additive characters: elements of Z[w] for w a primitive p-th root
//! of unity, and polynomials with such coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use super::field::{Field, Fq};
use super::poly::WeightPoly;
use crate::error::{Error, Result};

/// An element of Z[w]/(1 + w + ... + w^{p-1}), stored in the basis
/// w^0, ..., w^{p-2}. For p = 2 this is a plain integer (w = -1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclotomicInt {
    p: u32,
    coeffs: Vec<i128>,
}

impl CyclotomicInt {
    pub fn from_int(p: u32, v: i128) -> CyclotomicInt {
        let mut coeffs = vec![0; p as usize - 1];
        coeffs[0] = v;
        CyclotomicInt { p, coeffs }
    }

    /// w^t.
    pub fn root_power(p: u32, t: u32) -> CyclotomicInt {
        let mut full = vec![0i128; p as usize];
        full[(t % p) as usize] = 1;
        CyclotomicInt::reduce(p, full)
    }

    /// Reduces a length-p coefficient vector over w^0..w^{p-1}.
    fn reduce(p: u32, full: Vec<i128>) -> CyclotomicInt {
        let top = full[p as usize - 1];
        let coeffs = full[..p as usize - 1].iter().map(|&c| c - top).collect();
        CyclotomicInt { p, coeffs }
    }

    fn full(&self) -> Vec<i128> {
        let mut v = self.coeffs.clone();
        v.push(0);
        v
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Coefficients of w^0..w^{p-2}.
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn as_integer(&self) -> Option<i128> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.p, rhs.p, "cyclotomic orders differ");
        CyclotomicInt {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.p, rhs.p, "cyclotomic orders differ");
        let p = self.p as usize;
        let (a, b) = (self.full(), rhs.full());
        let mut out = vec![0i128; p];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[(i + j) % p] += x * y;
            }
        }
        CyclotomicInt::reduce(self.p, out)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.as_integer() {
            return write!(f, "{v}");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let mag = c.unsigned_abs();
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => write!(f, "w^{i}")?,
                _ => write!(f, "{mag}*w^{i}")?,
            }
        }
        Ok(())
    }
}

/// The additive character w^{tr(u v)}.
pub fn character(field: &Field, u: Fq, v: Fq) -> CyclotomicInt {
    CyclotomicInt::root_power(field.p(), field.trace(field.mul(u, v)))
}

/// The character w^{tr(u . v)} of two vectors.
pub fn character_vec(field: &Field, u: &[Fq], v: &[Fq]) -> Result<CyclotomicInt> {
    if u.len() != v.len() {
        return Err(Error::Dimension(
            "character of vectors of different length".into(),
        ));
    }
    Ok(CyclotomicInt::root_power(
        field.p(),
        field.trace(field.dot(u, v)),
    ))
}

/// A polynomial with coefficients in Z[w], kept as p polynomial parts over
/// the redundant spanning set w^0..w^{p-1}. Multiplying by w^t rotates parts.
#[derive(Clone, Debug)]
pub struct CycloPoly {
    parts: Vec<WeightPoly>,
}

impl CycloPoly {
    pub fn zero(p: u32) -> CycloPoly {
        CycloPoly {
            parts: vec![WeightPoly::zero(); p as usize],
        }
    }

    /// Adds w^t * f.
    pub fn add_rotated(&mut self, t: u32, f: &WeightPoly) {
        let p = self.parts.len();
        self.parts[t as usize % p] += f;
    }

    /// Adds w^t * g for the whole of g.
    pub fn add_rotated_poly(&mut self, t: u32, g: &CycloPoly) {
        let p = self.parts.len();
        for (i, part) in g.parts.iter().enumerate() {
            if !part.is_zero() {
                self.parts[(i + t as usize) % p] += part;
            }
        }
    }

    /// The value as an integer polynomial, or an error if any component
    /// along w^1..w^{p-2} survives reduction.
    pub fn into_integral(self) -> Result<WeightPoly> {
        let mut parts = self.parts;
        let p = parts.len();
        if p == 1 {
            return Ok(parts.pop().unwrap());
        }
        let top = parts.pop().unwrap();
        for part in &parts[1..] {
            if *part != top {
                return Err(Error::NonRational);
            }
        }
        Ok(&parts[0] - &top)
    }
}
