//! Linear block codes over GF(q): enumeration, duals, weight generating
//! functions and their MacWilliams transforms.

use crate::algebra::linalg::{self, FqMatrix};
use crate::algebra::{Field, Fq, Substitution, Var, WeightPoly};
use crate::error::{Error, Result};

/// Default cap on the number of messages enumerated.
pub const DEFAULT_BUDGET: u128 = 1 << 26;

/// Checks that `base^exp` messages fit in `budget`.
pub fn check_budget(base: u32, exp: usize, budget: u128) -> Result<()> {
    let mut needed: u128 = 1;
    for _ in 0..exp {
        needed = needed.saturating_mul(base as u128);
    }
    if needed > budget {
        Err(Error::Budget {
            needed,
            limit: budget,
        })
    } else {
        Ok(())
    }
}

/// Calls `f` on `offset + u * rows` for every `u` in GF(q)^rows.len(), with
/// the first coordinate of `u` varying fastest. `f` also receives `u`.
pub fn for_each_in_coset(
    field: &Field,
    offset: &[Fq],
    rows: &FqMatrix,
    mut f: impl FnMut(&[Fq], &[Fq]),
) {
    let q = field.q() as usize;
    let len = offset.len();
    // diffs[t][a] = ((a+1) mod q) * row_t - a * row_t
    let diffs: Vec<Vec<Vec<Fq>>> = rows
        .iter()
        .map(|row| {
            let mults: Vec<Vec<Fq>> = field
                .elements()
                .map(|a| row.iter().map(|&x| field.mul(a, x)).collect())
                .collect();
            (0..q)
                .map(|a| {
                    let next = &mults[(a + 1) % q];
                    next.iter()
                        .zip(&mults[a])
                        .map(|(&x, &y)| field.sub(x, y))
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut word = offset.to_vec();
    let mut msg = vec![field.zero(); rows.len()];
    loop {
        f(&msg, &word);
        let mut t = 0;
        loop {
            if t == rows.len() {
                return;
            }
            let a = msg[t].index() as usize;
            let d = &diffs[t][a];
            for i in 0..len {
                word[i] = field.add(word[i], d[i]);
            }
            msg[t] = Fq(((a + 1) % q) as u32);
            if a + 1 < q {
                break;
            }
            t += 1;
        }
    }
}

pub fn weight(v: &[Fq]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// An [n, k] linear code given by a full-rank k x n generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    generator: FqMatrix,
    budget: u128,
}

impl LinearCode {
    pub fn new(field: Field, n: usize, generator: FqMatrix) -> Result<LinearCode> {
        if generator.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!(
                "generator rows must have length {n}"
            )));
        }
        if generator.iter().flatten().any(|x| x.index() >= field.q()) {
            return Err(Error::InvalidField(
                "generator entry outside the field".into(),
            ));
        }
        let k = generator.len();
        if k > n {
            return Err(Error::Dimension(format!("k = {k} exceeds n = {n}")));
        }
        let rank = linalg::rank(&field, &generator);
        if rank != k {
            return Err(Error::RankDeficient(format!(
                "generator has rank {rank}, expected {k}"
            )));
        }
        Ok(LinearCode {
            field,
            n,
            generator,
            budget: DEFAULT_BUDGET,
        })
    }

    /// Same code with a different enumeration budget.
    pub fn with_budget(mut self, budget: u128) -> LinearCode {
        self.budget = budget;
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &FqMatrix {
        &self.generator
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    /// Calls `f(u, uG)` for every message `u`, first coordinate fastest.
    pub fn for_each_codeword(&self, f: impl FnMut(&[Fq], &[Fq])) -> Result<()> {
        check_budget(self.field.q(), self.k(), self.budget)?;
        let zero = vec![self.field.zero(); self.n];
        for_each_in_coset(&self.field, &zero, &self.generator, f);
        Ok(())
    }
}

/// All codewords `uG` in message order.
pub fn enumerate_codewords(c: &LinearCode) -> Result<Vec<Vec<Fq>>> {
    let mut out = Vec::new();
    c.for_each_codeword(|_, w| out.push(w.to_vec()))?;
    Ok(out)
}

/// A generator of the dual code under the standard inner product.
pub fn dual_code(c: &LinearCode) -> LinearCode {
    let h = linalg::nullspace(&c.field, &c.generator, c.n);
    LinearCode {
        field: c.field.clone(),
        n: c.n,
        generator: h,
        budget: c.budget,
    }
}

/// Hamming weight generating function in `x`, `y`.
pub fn hwgf(c: &LinearCode) -> Result<WeightPoly> {
    let mut counts = vec![0i128; c.n + 1];
    c.for_each_codeword(|_, w| counts[weight(w)] += 1)?;
    Ok(weight_poly(&counts, c.n, Var::X, Var::Y))
}

/// `sum_w counts[w] * a^{n-w} b^w`.
pub(crate) fn weight_poly(counts: &[i128], n: usize, a: Var, b: Var) -> WeightPoly {
    let mut p = WeightPoly::zero();
    for (w, &c) in counts.iter().enumerate() {
        p += &WeightPoly::monomial(c, &[(a, (n - w) as u16), (b, w as u16)]);
    }
    p
}

fn pow_i(base: u32, e: usize) -> i128 {
    (0..e).fold(1i128, |a, _| a * base as i128)
}

fn check_bihomogeneous(g: &WeightPoly, vars: &[Var], deg: usize, what: &str) -> Result<()> {
    match g.homogeneous_degree(vars) {
        Ok(Some(d)) if d as usize != deg => Err(Error::NotHomogeneous(format!(
            "{what} has degree {d}, expected {deg}"
        ))),
        Err(()) => Err(Error::NotHomogeneous(format!("{what} is not homogeneous"))),
        _ => Ok(()),
    }
}

pub(crate) fn check_nonnegative(p: &WeightPoly) -> Result<()> {
    if p.is_nonnegative() {
        Ok(())
    } else {
        Err(Error::NegativeCoefficient(p.to_string()))
    }
}

/// The substitution x -> x + (q-1) y, y -> x - y.
pub fn hamming_substitution(q: u32) -> Substitution {
    let x = WeightPoly::var(Var::X);
    let y = WeightPoly::var(Var::Y);
    Substitution::new()
        .set(Var::X, &x + &y.scale(q as i128 - 1))
        .set(Var::Y, &x - &y)
}

/// The substitution swapping the input and parity roles:
/// (x_I, y_I, x_P, y_P) -> (x_P + (q-1) y_P, x_P - y_P, x_I + (q-1) y_I, x_I - y_I).
pub fn input_parity_substitution(q: u32) -> Substitution {
    let xi = WeightPoly::var(Var::XI);
    let yi = WeightPoly::var(Var::YI);
    let xp = WeightPoly::var(Var::XP);
    let yp = WeightPoly::var(Var::YP);
    let s = q as i128 - 1;
    Substitution::new()
        .set(Var::XI, &xp + &yp.scale(s))
        .set(Var::YI, &xp - &yp)
        .set(Var::XP, &xi + &yi.scale(s))
        .set(Var::YP, &xi - &yi)
}

/// Dual HWGF: g(x + (q-1)y, x - y) / q^k.
pub fn macwilliams_hwgf(g: &WeightPoly, k: usize, q: u32) -> Result<WeightPoly> {
    if g.homogeneous_degree(&[Var::X, Var::Y]).is_err() {
        return Err(Error::NotHomogeneous("weight enumerator".into()));
    }
    let out = g
        .substitute(&hamming_substitution(q))?
        .div_exact(pow_i(q, k))?;
    check_nonnegative(&out)?;
    Ok(out)
}

/// A code whose generator carries an identity block on its information
/// positions: the leading k columns (I_k | A) or, for systematic duals, the
/// trailing k columns (B | I_k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystematicCode {
    base: LinearCode,
    leading: bool,
}

fn is_identity_block(g: &FqMatrix, start: usize, field: &Field) -> bool {
    let k = g.len();
    g.iter().enumerate().all(|(i, row)| {
        (0..k).all(|j| row[start + j] == if i == j { field.one() } else { field.zero() })
    })
}

impl SystematicCode {
    /// Accepts a generator of the form (I_k | A).
    pub fn new(base: LinearCode) -> Result<SystematicCode> {
        if !is_identity_block(&base.generator, 0, &base.field) {
            return Err(Error::Precondition(
                "generator is not of the form (I_k | A)".into(),
            ));
        }
        Ok(SystematicCode {
            base,
            leading: true,
        })
    }

    /// Accepts a generator of the form (B | I_k).
    pub fn new_trailing(base: LinearCode) -> Result<SystematicCode> {
        let start = base.n - base.k();
        if !is_identity_block(&base.generator, start, &base.field) {
            return Err(Error::Precondition(
                "generator is not of the form (B | I_k)".into(),
            ));
        }
        Ok(SystematicCode {
            base,
            leading: false,
        })
    }

    pub fn base(&self) -> &LinearCode {
        &self.base
    }

    /// Information positions (column indices).
    pub fn info_positions(&self) -> std::ops::Range<usize> {
        if self.leading {
            0..self.base.k()
        } else {
            self.base.n - self.base.k()..self.base.n
        }
    }

    /// The systematic dual. For (I_k | A) this is (-A^T | I_{n-k}) with
    /// trailing information positions, and conversely.
    pub fn dual(&self) -> SystematicCode {
        let f = &self.base.field;
        let (n, k) = (self.base.n, self.base.k());
        let g = &self.base.generator;
        let mut rows = vec![vec![f.zero(); n]; n - k];
        for (j, row) in rows.iter_mut().enumerate() {
            if self.leading {
                // parity column k + j of G, negated, then identity
                for i in 0..k {
                    row[i] = f.neg(g[i][k + j]);
                }
                row[k + j] = f.one();
            } else {
                // G = (B | I_k) with B k x (n-k); dual is (I_{n-k} | -B^T)
                row[j] = f.one();
                for i in 0..k {
                    row[n - k + i] = f.neg(g[i][j]);
                }
            }
        }
        SystematicCode {
            base: LinearCode {
                field: f.clone(),
                n,
                generator: rows,
                budget: self.base.budget,
            },
            leading: !self.leading,
        }
    }
}

/// Input-parity weight generating function in x_I, y_I, x_P, y_P.
pub fn ipwgf(c: &SystematicCode) -> Result<WeightPoly> {
    let (n, k) = (c.base.n, c.base.k());
    let info = c.info_positions();
    let mut counts = vec![vec![0i128; n - k + 1]; k + 1];
    c.base.for_each_codeword(|_, w| {
        let wi = weight(&w[info.clone()]);
        counts[wi][weight(w) - wi] += 1;
    })?;
    Ok(input_parity_poly(&counts, k, n - k))
}

pub(crate) fn input_parity_poly(counts: &[Vec<i128>], k: usize, r: usize) -> WeightPoly {
    let mut p = WeightPoly::zero();
    for (i, row) in counts.iter().enumerate() {
        for (o, &c) in row.iter().enumerate() {
            p += &WeightPoly::monomial(
                c,
                &[
                    (Var::XI, (k - i) as u16),
                    (Var::YI, i as u16),
                    (Var::XP, (r - o) as u16),
                    (Var::YP, o as u16),
                ],
            );
        }
    }
    p
}

/// IPWGF of the systematic dual: swap the input and parity roles with
/// the character substitution, then divide by q^k.
pub fn macwilliams_ipwgf(g: &WeightPoly, k: usize, n: usize, q: u32) -> Result<WeightPoly> {
    check_bihomogeneous(g, &[Var::XI, Var::YI], k, "input part")?;
    check_bihomogeneous(g, &[Var::XP, Var::YP], n - k, "parity part")?;
    let out = g
        .substitute(&input_parity_substitution(q))?
        .div_exact(pow_i(q, k))?;
    check_nonnegative(&out)?;
    Ok(out)
}
