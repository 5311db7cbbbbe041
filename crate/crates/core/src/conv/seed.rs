//! Seed transformation matrices T = (C A; E B) and their constraint codes.

use crate::algebra::linalg::{self, FqMatrix};
use crate::algebra::{Field, Fq};
use crate::block::{LinearCode, DEFAULT_BUDGET};
use crate::error::{Error, Result};

/// A rate k/n convolutional encoder with m memory symbols, given by the
/// (m+k) x (m+n) matrix T. One time step maps (w : u) to (p : w') with
/// p = wC + uE and w' = wA + uB.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvSeed {
    field: Field,
    n: usize,
    k: usize,
    m: usize,
    t: FqMatrix,
    budget: u128,
}

fn sub_block(t: &FqMatrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> FqMatrix {
    t[rows].iter().map(|r| r[cols.clone()].to_vec()).collect()
}

impl ConvSeed {
    pub fn new(field: Field, n: usize, k: usize, m: usize, t: FqMatrix) -> Result<ConvSeed> {
        if t.len() != m + k || t.iter().any(|r| r.len() != m + n) {
            return Err(Error::Dimension(format!(
                "seed must be {}x{} for n={n}, k={k}, m={m}",
                m + k,
                m + n
            )));
        }
        if k > n {
            return Err(Error::Dimension(format!("k = {k} exceeds n = {n}")));
        }
        if t.iter().flatten().any(|x| x.index() >= field.q()) {
            return Err(Error::InvalidField("seed entry outside the field".into()));
        }
        let lower = sub_block(&t, m..m + k, 0..m + n);
        let rank = linalg::rank(&field, &lower);
        if rank != k {
            return Err(Error::RankDeficient(format!(
                "constraint generator has rank {}, expected {}",
                m + rank,
                m + k
            )));
        }
        Ok(ConvSeed {
            field,
            n,
            k,
            m,
            t,
            budget: DEFAULT_BUDGET,
        })
    }

    /// Builds T from its blocks C (m x n), A (m x m), E (k x n), B (k x m).
    pub fn from_blocks(
        field: Field,
        c: &FqMatrix,
        a: &FqMatrix,
        e: &FqMatrix,
        b: &FqMatrix,
    ) -> Result<ConvSeed> {
        let m = a.len();
        let k = e.len();
        let n = c.first().or(e.first()).map_or(0, |r| r.len());
        let mut t = Vec::with_capacity(m + k);
        for (cr, ar) in c.iter().zip(a) {
            t.push(cr.iter().chain(ar).copied().collect());
        }
        for (er, br) in e.iter().zip(b) {
            t.push(er.iter().chain(br).copied().collect());
        }
        if c.len() != m || b.len() != k {
            return Err(Error::Dimension(
                "seed blocks have inconsistent sizes".into(),
            ));
        }
        ConvSeed::new(field, n, k, m, t)
    }

    /// Reads T off a constraint generator (I_m | C A ; 0 | E B).
    pub fn from_constraint_generator(
        field: Field,
        n: usize,
        m: usize,
        g: &FqMatrix,
    ) -> Result<ConvSeed> {
        if g.len() < m || g.iter().any(|r| r.len() != 2 * m + n) {
            return Err(Error::Dimension(
                "constraint generator has the wrong shape".into(),
            ));
        }
        for (i, row) in g.iter().enumerate() {
            for (j, &x) in row[..m].iter().enumerate() {
                let want = if i == j { field.one() } else { field.zero() };
                if x != want {
                    return Err(Error::NoBlockForm(format!(
                        "entry ({}, {}) of the memory block is {x}, expected {want}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let t = g.iter().map(|r| r[m..].to_vec()).collect();
        ConvSeed::new(field, n, g.len() - m, m, t)
    }

    pub fn with_budget(mut self, budget: u128) -> ConvSeed {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> &FqMatrix {
        &self.t
    }

    pub fn c(&self) -> FqMatrix {
        sub_block(&self.t, 0..self.m, 0..self.n)
    }

    pub fn a(&self) -> FqMatrix {
        sub_block(&self.t, 0..self.m, self.n..self.n + self.m)
    }

    pub fn e(&self) -> FqMatrix {
        sub_block(&self.t, self.m..self.m + self.k, 0..self.n)
    }

    pub fn b(&self) -> FqMatrix {
        sub_block(&self.t, self.m..self.m + self.k, self.n..self.n + self.m)
    }

    /// G~ = (I_m | C A ; 0 | E B), columns ordered (w_j : p_j : w_{j+1}).
    pub fn constraint_generator(&self) -> FqMatrix {
        let f = &self.field;
        self.t
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut out: Vec<Fq> = (0..self.m)
                    .map(|j| if i == j { f.one() } else { f.zero() })
                    .collect();
                out.extend_from_slice(row);
                out
            })
            .collect()
    }

    pub fn constraint_code(&self) -> Result<LinearCode> {
        Ok(LinearCode::new(
            self.field.clone(),
            2 * self.m + self.n,
            self.constraint_generator(),
        )?
        .with_budget(self.budget))
    }

    /// One time step: (p, w') from (w, u).
    pub fn step(&self, w: &[Fq], u: &[Fq]) -> (Vec<Fq>, Vec<Fq>) {
        let wu: Vec<Fq> = w.iter().chain(u).copied().collect();
        let out = linalg::vec_mat(&self.field, &wu, &self.t, self.n + self.m);
        (out[..self.n].to_vec(), out[self.n..].to_vec())
    }
}

/// Index of a memory state; the first coordinate varies fastest.
pub fn state_index(q: u32, w: &[Fq]) -> usize {
    w.iter()
        .rev()
        .fold(0usize, |acc, x| acc * q as usize + x.index() as usize)
}

pub fn state_vector(q: u32, m: usize, mut idx: usize) -> Vec<Fq> {
    (0..m)
        .map(|_| {
            let x = Fq((idx % q as usize) as u32);
            idx /= q as usize;
            x
        })
        .collect()
}

/// Labels of the q^m memory states in canonical order. Symbols are written
/// as element indices, concatenated when q <= 10 and comma-separated
/// otherwise. The single state of a memoryless code is labelled `-`.
pub fn state_labels(q: u32, m: usize) -> Vec<String> {
    let count = (q as usize).pow(m as u32);
    (0..count)
        .map(|i| {
            if m == 0 {
                return "-".to_string();
            }
            let digits: Vec<String> = state_vector(q, m, i)
                .iter()
                .map(|x| x.index().to_string())
                .collect();
            digits.join(if q <= 10 { "" } else { "," })
        })
        .collect()
}

/// The constraint code of the dual encoder, returned as a seed (n, n-k, m).
///
/// A nullspace basis of G~ diag(I_m, I_n, -I_m) is row-reduced to the shape
/// (I_m | C' A' ; 0 | E' B'). Fails when the memory columns of that code do
/// not have full rank m.
pub fn dual_constraint_code(seed: &ConvSeed) -> Result<ConvSeed> {
    let f = &seed.field;
    let (n, m) = (seed.n, seed.m);
    let len = 2 * m + n;
    let g = seed.constraint_generator();
    let mut h = linalg::nullspace(f, &g, len);
    for row in h.iter_mut() {
        for x in row[m + n..].iter_mut() {
            *x = f.neg(*x);
        }
    }
    let pivots = linalg::rref_on(f, &mut h, m);
    if pivots.len() != m {
        return Err(Error::NoBlockForm(format!(
            "memory columns of the dual constraint code have rank {} < {m}",
            pivots.len()
        )));
    }
    // Canonicalise: reduce the lower block, then clear its pivots upstairs.
    let mut lower = h.split_off(m);
    let lower_pivots = linalg::rref(f, &mut lower);
    for row in h.iter_mut() {
        for (lrow, &pc) in lower.iter().zip(&lower_pivots) {
            let c = row[pc];
            if !c.is_zero() {
                for (x, &y) in row.iter_mut().zip(lrow) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
    }
    h.extend(lower);
    Ok(ConvSeed::from_constraint_generator(f.clone(), n, m, &h)?.with_budget(seed.budget))
}

/// A seed whose input symbols are copied to a block of output positions:
/// (C; E) = (0 C0; I_k E0) for leading information positions, or
/// (C0 0; E0 I_k) for trailing ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystematicConvSeed {
    base: ConvSeed,
    leading: bool,
}

fn check_systematic(seed: &ConvSeed, start: usize) -> bool {
    let f = &seed.field;
    let (c, e) = (seed.c(), seed.e());
    let k = seed.k;
    c.iter()
        .all(|r| r[start..start + k].iter().all(|x| x.is_zero()))
        && e.iter()
            .enumerate()
            .all(|(i, r)| (0..k).all(|j| r[start + j] == if i == j { f.one() } else { f.zero() }))
}

impl SystematicConvSeed {
    pub fn new(base: ConvSeed) -> Result<SystematicConvSeed> {
        if !check_systematic(&base, 0) {
            return Err(Error::Precondition(
                "seed is not systematic: expected C = (0 C0) and E = (I_k E0)".into(),
            ));
        }
        Ok(SystematicConvSeed {
            base,
            leading: true,
        })
    }

    pub fn new_trailing(base: ConvSeed) -> Result<SystematicConvSeed> {
        if !check_systematic(&base, base.n - base.k) {
            return Err(Error::Precondition(
                "seed is not systematic: expected C = (C0 0) and E = (E0 I_k)".into(),
            ));
        }
        Ok(SystematicConvSeed {
            base,
            leading: false,
        })
    }

    pub fn base(&self) -> &ConvSeed {
        &self.base
    }

    pub fn is_leading(&self) -> bool {
        self.leading
    }

    pub fn info_positions(&self) -> std::ops::Range<usize> {
        if self.leading {
            0..self.base.k
        } else {
            self.base.n - self.base.k..self.base.n
        }
    }

    fn parity_cols(&self) -> std::ops::Range<usize> {
        if self.leading {
            self.base.k..self.base.n
        } else {
            0..self.base.n - self.base.k
        }
    }

    pub fn a0(&self) -> FqMatrix {
        self.base.a()
    }

    pub fn b0(&self) -> FqMatrix {
        self.base.b()
    }

    pub fn c0(&self) -> FqMatrix {
        let cols = self.parity_cols();
        self.base
            .c()
            .iter()
            .map(|r| r[cols.clone()].to_vec())
            .collect()
    }

    pub fn e0(&self) -> FqMatrix {
        let cols = self.parity_cols();
        self.base
            .e()
            .iter()
            .map(|r| r[cols.clone()].to_vec())
            .collect()
    }

    /// The systematic encoder of the dual code, with the information
    /// positions on the other side.
    pub fn dual(&self) -> Result<SystematicConvSeed> {
        let d = dual_constraint_code(&self.base)?;
        let f = d.field.clone();
        let (n, m, kd) = (d.n, d.m, d.k);
        let info: std::ops::Range<usize> = if self.leading { n - kd..n } else { 0..kd };
        let mut g = d.constraint_generator();
        let (upper, lower) = g.split_at_mut(m);
        let sq: FqMatrix = lower
            .iter()
            .map(|r| r[m + info.start..m + info.end].to_vec())
            .collect();
        let inv = linalg::inverse(&f, &sq).ok_or_else(|| {
            Error::NoBlockForm(
                "dual encoder cannot be made systematic on the parity positions".into(),
            )
        })?;
        let new_lower = linalg::mat_mul(&f, &inv, &lower.to_vec(), kd, 2 * m + n);
        for row in upper.iter_mut() {
            for (i, lrow) in new_lower.iter().enumerate() {
                let c = row[m + info.start + i];
                if !c.is_zero() {
                    for (x, &y) in row.iter_mut().zip(lrow) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
        }
        let mut h: FqMatrix = upper.to_vec();
        h.extend(new_lower);
        let seed = ConvSeed::from_constraint_generator(f, n, m, &h)?.with_budget(self.base.budget);
        if self.leading {
            SystematicConvSeed::new_trailing(seed)
        } else {
            SystematicConvSeed::new(seed)
        }
    }

    /// The encoder with constraint generator
    /// (I_m F C0+F E0 A0+F B0 ; 0 I_k E0 B0), for an m x k matrix F.
    pub fn with_feedback(&self, fmat: &FqMatrix) -> Result<ConvSeed> {
        let b = &self.base;
        if fmat.len() != b.m || fmat.iter().any(|r| r.len() != b.k) {
            return Err(Error::Dimension(format!("F must be {}x{}", b.m, b.k)));
        }
        let f = &b.field;
        let mut t = b.t.clone();
        for (i, frow) in fmat.iter().enumerate() {
            for (j, &c) in frow.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for col in 0..b.n + b.m {
                    t[i][col] = f.add(t[i][col], f.mul(c, b.t[b.m + j][col]));
                }
            }
        }
        ConvSeed::new(f.clone(), b.n, b.k, b.m, t).map(|s| s.with_budget(b.budget))
    }
}
