//! Square matrices of polynomials indexed by memory-state labels.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::poly::{Monomial, Var, WeightPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    labels: Vec<String>,
    entries: Vec<Vec<WeightPoly>>,
}

impl PolyMatrix {
    pub fn new(labels: Vec<String>, entries: Vec<Vec<WeightPoly>>) -> Result<PolyMatrix> {
        let n = labels.len();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!(
                "matrix must be {n}x{n} to match its labels"
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::Dimension("state labels must be distinct".into()));
        }
        Ok(PolyMatrix { labels, entries })
    }

    pub fn zeros(labels: Vec<String>) -> PolyMatrix {
        let n = labels.len();
        PolyMatrix {
            labels,
            entries: vec![vec![WeightPoly::zero(); n]; n],
        }
    }

    pub fn identity(labels: Vec<String>) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(labels);
        for i in 0..m.dim() {
            m.entries[i][i] = WeightPoly::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> &WeightPoly {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: WeightPoly) {
        self.entries[i][j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut WeightPoly {
        &mut self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<WeightPoly>] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(&WeightPoly) -> WeightPoly) -> PolyMatrix {
        PolyMatrix {
            labels: self.labels.clone(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&WeightPoly) -> Result<WeightPoly>) -> Result<PolyMatrix> {
        let mut entries = Vec::with_capacity(self.dim());
        for r in &self.entries {
            entries.push(r.iter().map(&f).collect::<Result<Vec<_>>>()?);
        }
        Ok(PolyMatrix {
            labels: self.labels.clone(),
            entries,
        })
    }

    pub fn transpose(&self) -> PolyMatrix {
        let n = self.dim();
        PolyMatrix {
            labels: self.labels.clone(),
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
                .collect(),
        }
    }

    fn check_same(&self, other: &PolyMatrix) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension(format!(
                "{}x{} against {}x{}",
                self.dim(),
                self.dim(),
                other.dim(),
                other.dim()
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check_same(other)?;
        let n = self.dim();
        let mut out = PolyMatrix::zeros(self.labels.clone());
        for i in 0..n {
            for t in 0..n {
                let a = &self.entries[i][t];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[t][j];
                    if !b.is_zero() {
                        out.entries[i][j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (ro, rb) in out.entries.iter_mut().zip(&other.entries) {
            for (o, b) in ro.iter_mut().zip(rb) {
                *o += b;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.add(&other.map(|p| -p))
    }

    /// Sum of every coefficient of every entry.
    pub fn eval_ones(&self) -> i128 {
        self.entries
            .iter()
            .flat_map(|r| r.iter())
            .map(WeightPoly::eval_ones)
            .sum()
    }

    /// `(row label, column label, entry)` for each nonzero entry.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &WeightPoly)> {
        self.entries.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(move |(j, p)| (i, j, p))
        })
    }

    /// Canonical text form: a header line with the state labels, then one
    /// line per row.
    pub fn render(&self) -> String {
        let mut s = String::new();
        writeln!(s, "states: {}", self.labels.join(" ")).unwrap();
        for (label, row) in self.labels.iter().zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(s, "{label}: [{}]", cells.join(", ")).unwrap();
        }
        s
    }

    /// Parses the output of [`PolyMatrix::render`].
    pub fn parse_text(text: &str) -> Result<PolyMatrix> {
        let perr = |line: usize, msg: String| Error::Parse { line, col: 1, msg };
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or_else(|| perr(1, "empty matrix".into()))?;
        let labels: Vec<String> = header
            .strip_prefix("states:")
            .ok_or_else(|| perr(hl + 1, "expected 'states:' header".into()))?
            .split_whitespace()
            .map(str::to_string)
            .collect();
        let mut entries = Vec::new();
        for (ln, line) in lines {
            let (label, rest) = line
                .split_once(':')
                .ok_or_else(|| perr(ln + 1, "expected '<label>: [...]'".into()))?;
            if labels.get(entries.len()).map(String::as_str) != Some(label.trim()) {
                return Err(perr(
                    ln + 1,
                    format!("unexpected row label '{}'", label.trim()),
                ));
            }
            let body = rest
                .trim()
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| perr(ln + 1, "row must be bracketed".into()))?;
            let row = body
                .split(',')
                .map(|cell| {
                    cell.parse::<WeightPoly>().map_err(|e| Error::Parse {
                        line: ln + 1,
                        col: e.col,
                        msg: e.msg,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push(row);
        }
        PolyMatrix::new(labels, entries)
    }

    pub fn to_structured(&self) -> StructuredMatrix {
        StructuredMatrix {
            labels: self.labels.clone(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(structured_poly).collect())
                .collect(),
        }
    }

    pub fn from_structured(s: &StructuredMatrix) -> Result<PolyMatrix> {
        let entries = s
            .entries
            .iter()
            .map(|r| r.iter().map(|t| poly_from_structured(t)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        PolyMatrix::new(s.labels.clone(), entries)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// One term of a polynomial in the structured output schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredTerm {
    pub coeff: i128,
    pub exponents: std::collections::BTreeMap<String, u16>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<Vec<StructuredTerm>>>,
}

pub fn structured_poly(p: &WeightPoly) -> Vec<StructuredTerm> {
    p.terms()
        .map(|(m, c)| StructuredTerm {
            coeff: c,
            exponents: Var::ALL
                .iter()
                .filter(|&&v| m.exp(v) > 0)
                .map(|&v| (v.name().to_string(), m.exp(v)))
                .collect(),
        })
        .collect()
}

pub fn poly_from_structured(terms: &[StructuredTerm]) -> Result<WeightPoly> {
    let mut p = WeightPoly::zero();
    for t in terms {
        let mut m = Monomial::one();
        for (name, &e) in &t.exponents {
            let v = Var::from_name(name).ok_or_else(|| Error::Parse {
                line: 1,
                col: 1,
                msg: format!("unknown variable '{name}'"),
            })?;
            m = m.with_exp(v, m.exp(v) + e);
        }
        p.add_term(m, t.coeff);
    }
    Ok(p)
}

/// For `M = I - N*D` with `N` free of `D`, returns `sum_{i<=d_max} N^i D^i`.
pub fn series_inverse(m: &PolyMatrix, d_max: u32) -> Result<PolyMatrix> {
    let n = m.dim();
    let mut nmat = PolyMatrix::zeros(m.labels.clone());
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j);
            if e.max_degree(Var::D) > 1 {
                return Err(Error::NotAffineInD);
            }
            let expect = if i == j {
                WeightPoly::one()
            } else {
                WeightPoly::zero()
            };
            if e.d_coeff(0) != expect {
                return Err(Error::NotAffineInD);
            }
            nmat.set(i, j, -e.d_coeff(1));
        }
    }
    power_sum(&nmat, d_max)
}

/// `sum_{i<=d_max} N^i D^i`, truncated at `d_max`.
pub fn power_sum(nmat: &PolyMatrix, d_max: u32) -> Result<PolyMatrix> {
    let mut acc = PolyMatrix::identity(nmat.labels.clone());
    let mut pw = PolyMatrix::identity(nmat.labels.clone());
    for i in 1..=d_max {
        pw = pw.mul(nmat)?;
        acc = acc.add(&pw.map(|p| p.shift_d(i as u16)))?;
    }
    Ok(acc.map(|p| p.clone().with_dmax(Some(d_max))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> WeightPoly {
        s.parse().unwrap()
    }

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn trivial_inverse() {
        let id = PolyMatrix::identity(labels(3));
        assert_eq!(series_inverse(&id, 4).unwrap(), id);
    }

    #[test]
    fn geometric_series() {
        let m = PolyMatrix::new(labels(1), vec![vec![p("1 - y*D")]]).unwrap();
        let r = series_inverse(&m, 3).unwrap();
        assert_eq!(*r.get(0, 0), p("1 + y*D + y^2*D^2 + y^3*D^3"));
    }

    #[test]
    fn rejects_non_affine() {
        let m = PolyMatrix::new(labels(1), vec![vec![p("1 - y*D^2")]]).unwrap();
        assert_eq!(series_inverse(&m, 3), Err(Error::NotAffineInD));
        let m = PolyMatrix::new(labels(1), vec![vec![p("2 - y*D")]]).unwrap();
        assert_eq!(series_inverse(&m, 3), Err(Error::NotAffineInD));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let n = PolyMatrix::new(
            labels(2),
            vec![vec![p("1"), p("y^2")], vec![p("y"), p("x*y")]],
        )
        .unwrap();
        let d = 5;
        let m = PolyMatrix::identity(labels(2))
            .sub(&n.map(|e| e.shift_d(1)))
            .unwrap();
        let r = series_inverse(&m, d).unwrap();
        let prod = m.map(|e| e.clone().with_dmax(Some(d))).mul(&r).unwrap();
        assert_eq!(prod, PolyMatrix::identity(labels(2)));
    }

    #[test]
    fn text_and_structured_round_trip() {
        let m = PolyMatrix::new(
            vec!["00".into(), "10".into()],
            vec![vec![p("1"), p("y_I*y_P - 2*x")], vec![p("0"), p("y^2*D")]],
        )
        .unwrap();
        assert_eq!(PolyMatrix::parse_text(&m.render()).unwrap(), m);
        let json = serde_json::to_string(&m.to_structured()).unwrap();
        let back: StructuredMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(PolyMatrix::from_structured(&back).unwrap(), m);
    }

    #[test]
    fn label_validation() {
        assert!(PolyMatrix::new(vec!["a".into(), "a".into()], vec![vec![p("0"); 2]; 2]).is_err());
        assert!(PolyMatrix::new(vec!["a".into()], vec![vec![p("0"); 2]]).is_err());
    }
}
