//! Sparse multivariate polynomials with integer coefficients over a fixed
//! variable alphabet, with optional truncation in `D`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// The variable alphabet, in canonical order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X,
    Y,
    XI,
    YI,
    XP,
    YP,
    XO,
    YO,
    D,
}

pub const NVARS: usize = 9;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::X,
        Var::Y,
        Var::XI,
        Var::YI,
        Var::XP,
        Var::YP,
        Var::XO,
        Var::YO,
        Var::D,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::XI => "x_I",
            Var::YI => "y_I",
            Var::XP => "x_P",
            Var::YP => "y_P",
            Var::XO => "x_O",
            Var::YO => "y_O",
            Var::D => "D",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }

    fn idx(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over the alphabet.
///
/// Ordered by total degree, then by exponent vector with larger exponents of
/// earlier variables first, so `x^3 + 3*x^2*y + 3*x*y^2 + y^3` and
/// `1 + 3*x*y^2 + y^3*D` are in canonical order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial([0; NVARS])
    }

    pub fn of(v: Var, e: u16) -> Monomial {
        let mut m = Monomial::one();
        m.0[v.idx()] = e;
        m
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.idx()]
    }

    pub fn with_exp(mut self, v: Var, e: u16) -> Monomial {
        self.0[v.idx()] = e;
        self
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        vars.iter().map(|&v| self.exp(v) as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NVARS];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i]
                .checked_add(other.0[i])
                .expect("exponent overflow");
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial with `i128` coefficients. No zero coefficient is stored.
///
/// When a truncation degree is set, terms with a `D` exponent above it are
/// dropped, and products inherit the tighter truncation. Equality compares
/// terms only.
#[derive(Clone, Debug, Default)]
pub struct WeightPoly {
    terms: BTreeMap<Monomial, i128>,
    dmax: Option<u32>,
}

impl PartialEq for WeightPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for WeightPoly {}

fn tighter(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn cadd(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("coefficient overflow")
}

fn cmul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("coefficient overflow")
}

impl WeightPoly {
    pub fn zero() -> WeightPoly {
        WeightPoly::default()
    }

    pub fn one() -> WeightPoly {
        WeightPoly::constant(1)
    }

    pub fn constant(c: i128) -> WeightPoly {
        let mut p = WeightPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> WeightPoly {
        WeightPoly::term(1, Monomial::of(v, 1))
    }

    pub fn term(c: i128, m: Monomial) -> WeightPoly {
        let mut p = WeightPoly::zero();
        p.add_term(m, c);
        p
    }

    /// `c * prod v^e`.
    pub fn monomial(c: i128, powers: &[(Var, u16)]) -> WeightPoly {
        let mut m = Monomial::one();
        for &(v, e) in powers {
            m.0[v.idx()] += e;
        }
        WeightPoly::term(c, m)
    }

    pub fn dmax(&self) -> Option<u32> {
        self.dmax
    }

    /// Sets the truncation degree, dropping terms above it.
    pub fn with_dmax(mut self, dmax: Option<u32>) -> WeightPoly {
        self.dmax = dmax;
        if let Some(d) = dmax {
            self.terms.retain(|m, _| m.exp(Var::D) as u32 <= d);
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i128)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> i128 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: i128) {
        if c == 0 {
            return;
        }
        if let Some(d) = self.dmax {
            if m.exp(Var::D) as u32 > d {
                return;
            }
        }
        let slot = self.terms.entry(m).or_insert(0);
        *slot = cadd(*slot, c);
        if *slot == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: i128) -> WeightPoly {
        if c == 0 {
            return WeightPoly::zero().with_dmax(self.dmax);
        }
        WeightPoly {
            terms: self.terms.iter().map(|(m, &v)| (*m, cmul(v, c))).collect(),
            dmax: self.dmax,
        }
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_exact(&self, d: i128) -> Result<WeightPoly> {
        if d == 0 {
            return Err(Error::NonIntegral { divisor: 0 });
        }
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            if c % d != 0 {
                return Err(Error::NonIntegral { divisor: d });
            }
            terms.insert(*m, c / d);
        }
        Ok(WeightPoly {
            terms,
            dmax: self.dmax,
        })
    }

    pub fn pow(&self, e: u32) -> WeightPoly {
        let mut acc = WeightPoly::one().with_dmax(self.dmax);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value with every variable set to 1.
    pub fn eval_ones(&self) -> i128 {
        self.terms.values().fold(0, |a, &c| cadd(a, c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn max_degree(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exp(v) as u32)
            .max()
            .unwrap_or(0)
    }

    /// The common total degree of all terms in `vars`, if there is one.
    /// The zero polynomial is homogeneous of every degree and yields `Ok(None)`.
    pub fn homogeneous_degree(&self, vars: &[Var]) -> std::result::Result<Option<u32>, ()> {
        let mut deg = None;
        for m in self.terms.keys() {
            let d = m.degree_in(vars);
            match deg {
                None => deg = Some(d),
                Some(x) if x != d => return Err(()),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// The coefficient of `D^i`, with `D` removed.
    pub fn d_coeff(&self, i: u32) -> WeightPoly {
        let mut out = WeightPoly::zero();
        for (m, &c) in &self.terms {
            if m.exp(Var::D) as u32 == i {
                out.add_term(m.with_exp(Var::D, 0), c);
            }
        }
        out
    }

    /// Multiplies by `D^k`, respecting truncation.
    pub fn shift_d(&self, k: u16) -> WeightPoly {
        let mut out = WeightPoly::zero().with_dmax(self.dmax);
        for (m, &c) in &self.terms {
            out.add_term(m.with_exp(Var::D, m.exp(Var::D) + k), c);
        }
        out
    }

    /// Substitution that must cover every variable present.
    pub fn substitute(&self, sub: &Substitution) -> Result<WeightPoly> {
        for m in self.terms.keys() {
            for v in Var::ALL {
                if m.exp(v) > 0 && !sub.images.contains_key(&v) {
                    return Err(Error::UnmappedVariable(v));
                }
            }
        }
        Ok(self.substitute_partial(sub))
    }

    /// Substitution leaving unmapped variables in place.
    pub fn substitute_partial(&self, sub: &Substitution) -> WeightPoly {
        let mut powers: BTreeMap<(Var, u16), WeightPoly> = BTreeMap::new();
        let mut out = WeightPoly::zero().with_dmax(self.dmax);
        for (m, &c) in &self.terms {
            let mut rest = Monomial::one();
            let mut acc = WeightPoly::constant(c).with_dmax(self.dmax);
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                match sub.images.get(&v) {
                    None => rest.0[v.idx()] = e,
                    Some(img) => {
                        let pw = powers
                            .entry((v, e))
                            .or_insert_with(|| img.clone().with_dmax(self.dmax).pow(e as u32));
                        acc = &acc * &*pw;
                    }
                }
            }
            for (am, ac) in acc.terms {
                out.add_term(am.mul(&rest), ac);
            }
        }
        out
    }

    /// Sets each listed variable to 1.
    pub fn set_ones(&self, vars: &[Var]) -> WeightPoly {
        let mut s = Substitution::new();
        for &v in vars {
            s = s.set(v, WeightPoly::one());
        }
        self.substitute_partial(&s)
    }

    /// Renames variables (several may map to the same target).
    pub fn rename(&self, pairs: &[(Var, Var)]) -> WeightPoly {
        let mut s = Substitution::new();
        for &(a, b) in pairs {
            s = s.set(a, WeightPoly::var(b));
        }
        self.substitute_partial(&s)
    }
}

/// A map from variables to polynomial images.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    images: BTreeMap<Var, WeightPoly>,
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn set(mut self, v: Var, image: WeightPoly) -> Substitution {
        self.images.insert(v, image);
        self
    }

    /// Maps `v` to `num / den`. Accepted only when `den` is the constant 1
    /// or -1; anything else is not a polynomial image.
    pub fn set_ratio(self, v: Var, num: WeightPoly, den: &WeightPoly) -> Result<Substitution> {
        if *den == WeightPoly::one() {
            Ok(self.set(v, num))
        } else if *den == WeightPoly::constant(-1) {
            Ok(self.set(v, -num))
        } else {
            Err(Error::NonPolynomial(v))
        }
    }
}

impl Add for &WeightPoly {
    type Output = WeightPoly;
    fn add(self, rhs: &WeightPoly) -> WeightPoly {
        let mut out = self.clone().with_dmax(tighter(self.dmax, rhs.dmax));
        for (m, &c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &WeightPoly {
    type Output = WeightPoly;
    fn sub(self, rhs: &WeightPoly) -> WeightPoly {
        let mut out = self.clone().with_dmax(tighter(self.dmax, rhs.dmax));
        for (m, &c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &WeightPoly {
    type Output = WeightPoly;
    fn mul(self, rhs: &WeightPoly) -> WeightPoly {
        let mut out = WeightPoly::zero().with_dmax(tighter(self.dmax, rhs.dmax));
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &rhs.terms {
                out.add_term(ma.mul(mb), cmul(ca, cb));
            }
        }
        out
    }
}

impl Neg for &WeightPoly {
    type Output = WeightPoly;
    fn neg(self) -> WeightPoly {
        self.scale(-1)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for WeightPoly {
            type Output = WeightPoly;
            fn $f(self, rhs: WeightPoly) -> WeightPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&WeightPoly> for WeightPoly {
            type Output = WeightPoly;
            fn $f(self, rhs: &WeightPoly) -> WeightPoly {
                (&self).$f(rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for WeightPoly {
    type Output = WeightPoly;
    fn neg(self) -> WeightPoly {
        self.scale(-1)
    }
}

impl AddAssign<&WeightPoly> for WeightPoly {
    fn add_assign(&mut self, rhs: &WeightPoly) {
        if let Some(d) = tighter(self.dmax, rhs.dmax) {
            if self.dmax != Some(d) {
                *self = std::mem::take(self).with_dmax(Some(d));
            }
        }
        for (m, &c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl SubAssign<&WeightPoly> for WeightPoly {
    fn sub_assign(&mut self, rhs: &WeightPoly) {
        *self += &(-rhs);
    }
}

impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Error from parsing a polynomial string; `col` is a 1-based character offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyParseError {
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.col, self.msg)
    }
}

impl std::error::Error for PolyParseError {}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> std::result::Result<T, PolyParseError> {
        Err(PolyParseError {
            col: self.pos + 1,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> std::result::Result<i128, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        match text.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("number out of range")
            }
        }
    }

    fn ident(&mut self) -> std::result::Result<Var, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphabetic() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        match Var::from_name(text) {
            Some(v) => Ok(v),
            None => {
                self.pos = start;
                self.err(format!("unknown variable '{text}'"))
            }
        }
    }

    fn factor(
        &mut self,
        m: &mut Monomial,
        c: &mut i128,
    ) -> std::result::Result<(), PolyParseError> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let n = self.number()?;
                *c = c.checked_mul(n).ok_or(PolyParseError {
                    col: self.pos + 1,
                    msg: "coefficient overflow".into(),
                })?;
            }
            Some(_) => {
                let v = self.ident()?;
                let mut e = 1i128;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    e = self.number()?;
                }
                let e: u16 = match e.try_into() {
                    Ok(e) => e,
                    Err(_) => return self.err("exponent out of range"),
                };
                m.0[v.idx()] += e;
            }
            None => return self.err("unexpected end of input"),
        }
        Ok(())
    }

    fn poly(&mut self) -> std::result::Result<WeightPoly, PolyParseError> {
        let mut out = WeightPoly::zero();
        let mut first = true;
        loop {
            let mut sign = 1i128;
            match self.peek() {
                Some(b'+') if !first => {
                    self.pos += 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                None if first => return self.err("empty polynomial"),
                _ if !first => return self.err("expected '+' or '-'"),
                _ => {}
            }
            let mut m = Monomial::one();
            let mut c = sign;
            self.factor(&mut m, &mut c)?;
            while self.peek() == Some(b'*') {
                self.pos += 1;
                self.factor(&mut m, &mut c)?;
            }
            out.add_term(m, c);
            first = false;
            if self.peek().is_none() {
                return Ok(out);
            }
        }
    }
}

impl FromStr for WeightPoly {
    type Err = PolyParseError;

    /// Parses the canonical form, e.g. `1 + 3*x*y^2 - y^3*D`. Terms may
    /// appear in any order and repeat; like terms are combined.
    fn from_str(s: &str) -> std::result::Result<WeightPoly, PolyParseError> {
        Parser {
            s: s.as_bytes(),
            pos: 0,
        }
        .poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> WeightPoly {
        s.parse().unwrap()
    }

    #[test]
    fn basic_products() {
        assert_eq!(p("1 + y") * p("1 - y"), p("1 - y^2"));
        let yd = p("y*D").with_dmax(Some(1));
        assert!((&yd * &yd).is_zero());
        let cube = p("x + y").pow(3);
        assert_eq!(cube.to_string(), "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
    }

    #[test]
    fn substitution() {
        let s = Substitution::new()
            .set(Var::X, p("x + y"))
            .set(Var::Y, p("x - y"));
        assert_eq!(p("x^3 + y^3").substitute(&s).unwrap(), p("2*x^3 + 6*x*y^2"));
        assert_eq!(WeightPoly::one().substitute(&s).unwrap(), WeightPoly::one());
        assert_eq!(
            p("x*D").substitute(&s),
            Err(Error::UnmappedVariable(Var::D))
        );
    }

    #[test]
    fn rational_image_rejected() {
        let r = Substitution::new().set_ratio(Var::Y, p("1 - y"), &p("1 + y"));
        assert_eq!(r.err(), Some(Error::NonPolynomial(Var::Y)));
        let ok = Substitution::new()
            .set_ratio(Var::Y, p("1 - y"), &p("-1"))
            .unwrap();
        assert_eq!(p("y^2").substitute(&ok).unwrap(), p("1 - 2*y + y^2"));
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(p("y^3*D + 3*y^2*x + 1").to_string(), "1 + 3*x*y^2 + y^3*D");
        assert_eq!(p("-3*x + 1").to_string(), "1 - 3*x");
        assert_eq!(p("-x").to_string(), "-x");
        assert_eq!(p("x - x").to_string(), "0");
        assert_eq!(p("x_I^2*x_P + y_I*y_P").to_string(), "y_I*y_P + x_I^2*x_P");
        assert_eq!(p("2*3*x").to_string(), "6*x");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<WeightPoly>().is_err());
        assert_eq!("x + z".parse::<WeightPoly>().unwrap_err().col, 5);
        assert!("x +".parse::<WeightPoly>().is_err());
        assert!("x y".parse::<WeightPoly>().is_err());
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("2*x + 4*y").div_exact(2).unwrap(), p("x + 2*y"));
        assert_eq!(
            p("2*x + 3*y").div_exact(2),
            Err(Error::NonIntegral { divisor: 2 })
        );
    }

    #[test]
    fn truncation_inherits_tighter() {
        let a = p("1 + D + D^2").with_dmax(Some(2));
        let b = p("1 + D").with_dmax(Some(1));
        let c = &a * &b;
        assert_eq!(c.dmax(), Some(1));
        assert_eq!(c, p("1 + 2*D"));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(
            p("x^2 + x*y").homogeneous_degree(&[Var::X, Var::Y]),
            Ok(Some(2))
        );
        assert_eq!(p("x^2 + y").homogeneous_degree(&[Var::X, Var::Y]), Err(()));
        assert_eq!(WeightPoly::zero().homogeneous_degree(&[Var::X]), Ok(None));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = WeightPoly> {
            prop::collection::vec((-5i128..=5, 0u16..3, 0u16..3, 0u16..2), 0..5).prop_map(|ts| {
                let mut out = WeightPoly::zero();
                for (c, a, b, d) in ts {
                    out.add_term(
                        Monomial::one()
                            .with_exp(Var::X, a)
                            .with_exp(Var::Y, b)
                            .with_exp(Var::D, d),
                        c,
                    );
                }
                out
            })
        }

        proptest! {
            #[test]
            fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert!((&a - &a).is_zero());
            }

            #[test]
            fn display_round_trips(a in arb_poly()) {
                let back: WeightPoly = a.to_string().parse().unwrap();
                prop_assert_eq!(back, a);
            }
        }
    }
}
