//! Polynomial generator matrices G(D) and the orthogonality of an encoder
//! with its dual.

use std::fmt;

use super::seed::ConvSeed;
use crate::algebra::linalg::{self, FqMatrix};
use crate::algebra::{Field, Fq};

/// A univariate polynomial over GF(q), low degree first.
pub type FqPoly = Vec<Fq>;

fn trim(mut p: FqPoly) -> FqPoly {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
    p
}

fn poly_add(f: &Field, a: &[Fq], b: &[Fq]) -> FqPoly {
    let len = a.len().max(b.len());
    trim(
        (0..len)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(Fq::ZERO);
                let y = b.get(i).copied().unwrap_or(Fq::ZERO);
                f.add(x, y)
            })
            .collect(),
    )
}

fn poly_neg(f: &Field, a: &[Fq]) -> FqPoly {
    a.iter().map(|&x| f.neg(x)).collect()
}

fn poly_mul(f: &Field, a: &[Fq], b: &[Fq]) -> FqPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Fq::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Determinant of a square matrix over GF(q)[D], by dynamic programming
/// over the set of columns already used.
pub fn poly_det(f: &Field, m: &[Vec<FqPoly>]) -> FqPoly {
    let n = m.len();
    if n == 0 {
        return vec![f.one()];
    }
    let mut dp: Vec<FqPoly> = vec![Vec::new(); 1 << n];
    dp[0] = vec![f.one()];
    for mask in 0usize..(1 << n) {
        let row = mask.count_ones() as usize;
        if row == n || dp[mask].is_empty() {
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) != 0 || m[row][col].is_empty() {
                continue;
            }
            // Placing `col` after larger used columns adds that many inversions.
            let inversions = (mask >> (col + 1)).count_ones();
            let mut term = poly_mul(f, &dp[mask], &m[row][col]);
            if inversions % 2 == 1 {
                term = poly_neg(f, &term);
            }
            let next = mask | (1 << col);
            dp[next] = poly_add(f, &dp[next], &term);
        }
    }
    dp[(1 << n) - 1].clone()
}

/// The k x n matrix G(D) = E + sum_{i>=1} B A^{i-1} C D^i, truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyGenMatrix {
    pub field: Field,
    pub k: usize,
    pub n: usize,
    /// `coeffs[i]` is the k x n coefficient of D^i.
    pub coeffs: Vec<FqMatrix>,
}

impl PolyGenMatrix {
    pub fn d_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Entry (i, j) as a polynomial in D.
    pub fn entry(&self, i: usize, j: usize) -> FqPoly {
        trim(self.coeffs.iter().map(|c| c[i][j]).collect())
    }
}

/// Writes a polynomial over GF(q) in D, with element indices as coefficients.
pub fn format_fq_poly(p: &[Fq]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let mono = match i {
                0 => String::new(),
                1 => "D".to_string(),
                _ => format!("D^{i}"),
            };
            match (c.index(), mono.is_empty()) {
                (v, true) => v.to_string(),
                (1, false) => mono,
                (v, false) => format!("{v}*{mono}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

impl fmt::Display for PolyGenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.k {
            let cells: Vec<String> = (0..self.n)
                .map(|j| format_fq_poly(&self.entry(i, j)))
                .collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn poly_generator(seed: &ConvSeed, d_max: usize) -> PolyGenMatrix {
    let f = seed.field();
    let (k, n, m) = (seed.k(), seed.n(), seed.m());
    let (a, c) = (seed.a(), seed.c());
    let mut coeffs = vec![seed.e()];
    // ba = B A^{i-1}
    let mut ba = seed.b();
    for _ in 1..=d_max {
        coeffs.push(linalg::mat_mul(f, &ba, &c, m, n));
        ba = linalg::mat_mul(f, &ba, &a, m, m);
    }
    PolyGenMatrix {
        field: f.clone(),
        k,
        n,
        coeffs,
    }
}

/// G(D) as numerator / denominator: returns (N(D), g(D)) with
/// g(D) = det(I - D A) and N(D) = g(D) G(D), a polynomial matrix of degree
/// at most m. Entry (i, j) of the first component is N_ij(D).
pub fn rational_generator(seed: &ConvSeed) -> (Vec<Vec<FqPoly>>, FqPoly) {
    let f = seed.field();
    let m = seed.m();
    let a = seed.a();
    let i_minus_da: Vec<Vec<FqPoly>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let c0 = if i == j { f.one() } else { f.zero() };
                    trim(vec![c0, f.neg(a[i][j])])
                })
                .collect()
        })
        .collect();
    let g = poly_det(f, &i_minus_da);
    let series = poly_generator(seed, m);
    let num = (0..seed.k())
        .map(|i| {
            (0..seed.n())
                .map(|j| {
                    let mut prod = poly_mul(f, &g, &series.entry(i, j));
                    prod.truncate(m + 1);
                    trim(prod)
                })
                .collect()
        })
        .collect();
    (num, g)
}

/// Outcome of [`orthogonality_check`]; `failures` names each relation that
/// does not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub failures: Vec<String>,
}

impl OrthogonalityReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn mm(f: &Field, a: &FqMatrix, b: &FqMatrix, inner: usize, cols: usize) -> FqMatrix {
    linalg::mat_mul(f, a, b, inner, cols)
}

fn sub(f: &Field, a: &FqMatrix, b: &FqMatrix) -> FqMatrix {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(&p, &q)| f.sub(p, q)).collect())
        .collect()
}

/// Checks that `dual` generates the dual code of `seed`:
/// the four block relations
///   I + C C'^T - A A'^T = 0,  E E'^T - B B'^T = 0,
///   C E'^T - A B'^T = 0,      E C'^T - B A'^T = 0,
/// and G(D) H(D^{-1})^T = 0, checked exactly on the numerators of the
/// rational generator matrices.
pub fn orthogonality_check(seed: &ConvSeed, dual: &ConvSeed) -> OrthogonalityReport {
    let mut failures = Vec::new();
    if seed.field() != dual.field() {
        failures.push("encoders are over different fields".to_string());
        return OrthogonalityReport { failures };
    }
    if seed.n() != dual.n() || seed.m() != dual.m() || seed.k() + dual.k() != seed.n() {
        failures.push(format!(
            "parameters (n={}, k={}, m={}) and (n={}, k={}, m={}) are not dual",
            seed.n(),
            seed.k(),
            seed.m(),
            dual.n(),
            dual.k(),
            dual.m()
        ));
        return OrthogonalityReport { failures };
    }
    let f = seed.field();
    let (n, k, kd, m) = (seed.n(), seed.k(), dual.k(), seed.m());
    let (a, b, c, e) = (seed.a(), seed.b(), seed.c(), seed.e());
    let (a2, b2, c2, e2) = (dual.a(), dual.b(), dual.c(), dual.e());
    let t = |x: &FqMatrix, cols: usize| linalg::transpose(x, cols);
    let mut r1 = sub(
        f,
        &mm(f, &c, &t(&c2, n), n, m),
        &mm(f, &a, &t(&a2, m), m, m),
    );
    for (i, row) in r1.iter_mut().enumerate() {
        row[i] = f.add(row[i], f.one());
    }
    let r2 = sub(
        f,
        &mm(f, &e, &t(&e2, n), n, kd),
        &mm(f, &b, &t(&b2, m), m, kd),
    );
    let r3 = sub(
        f,
        &mm(f, &c, &t(&e2, n), n, kd),
        &mm(f, &a, &t(&b2, m), m, kd),
    );
    let r4 = sub(
        f,
        &mm(f, &e, &t(&c2, n), n, m),
        &mm(f, &b, &t(&a2, m), m, m),
    );
    for (name, r) in [
        ("I + C C'^T - A A'^T = 0", r1),
        ("E E'^T - B B'^T = 0", r2),
        ("C E'^T - A B'^T = 0", r3),
        ("E C'^T - B A'^T = 0", r4),
    ] {
        if !linalg::is_zero(&r) {
            failures.push(format!("relation {name} fails"));
        }
    }
    // Numerators have degree <= m; coefficient of D^s in N_G(D) N_H(D^-1)^T
    // collects N_G[i] N_H[j]^T with i - j = s.
    let (ng, _) = rational_generator(seed);
    let (nh, _) = rational_generator(dual);
    let coef = |p: &FqPoly, i: usize| p.get(i).copied().unwrap_or(Fq::ZERO);
    'outer: for s in -(m as isize)..=(m as isize) {
        for r in 0..k {
            for col in 0..kd {
                let mut acc = f.zero();
                for i in 0..=m {
                    let j = i as isize - s;
                    if j < 0 || j > m as isize {
                        continue;
                    }
                    for l in 0..n {
                        acc = f.add(
                            acc,
                            f.mul(coef(&ng[r][l], i), coef(&nh[col][l], j as usize)),
                        );
                    }
                }
                if !acc.is_zero() {
                    failures.push(format!("G(D) H(D^-1)^T has a nonzero coefficient at D^{s}"));
                    break 'outer;
                }
            }
        }
    }
    OrthogonalityReport { failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conv::seed::{dual_constraint_code, SystematicConvSeed};

    fn mat(f: &Field, rows: &[&[u32]]) -> FqMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| f.element(x).unwrap()).collect())
            .collect()
    }

    fn p(f: &Field, c: &[u32]) -> FqPoly {
        trim(c.iter().map(|&x| f.element(x).unwrap()).collect())
    }

    fn example1(f: &Field) -> ConvSeed {
        ConvSeed::new(
            f.clone(),
            2,
            1,
            2,
            mat(f, &[&[0, 1, 0, 1], &[0, 0, 1, 0], &[1, 1, 1, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn determinant() {
        let f = Field::prime(3).unwrap();
        // [[1, D], [2D, 1+D]] -> 1 + D - 2D^2 = 1 + D + D^2 over GF(3)
        let m = vec![
            vec![p(&f, &[1]), p(&f, &[0, 1])],
            vec![p(&f, &[0, 2]), p(&f, &[1, 1])],
        ];
        assert_eq!(poly_det(&f, &m), p(&f, &[1, 1, 1]));
        let id3: Vec<Vec<FqPoly>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { p(&f, &[1]) } else { vec![] })
                    .collect()
            })
            .collect();
        assert_eq!(poly_det(&f, &id3), p(&f, &[1]));
    }

    #[test]
    fn example_generator() {
        let f = Field::prime(2).unwrap();
        let s = example1(&f);
        let g = poly_generator(&s, 7);
        assert_eq!(format_fq_poly(&g.entry(0, 0)), "1");
        // 1 + D/(1 + D^2) = 1 + D + D^3 + D^5 + D^7 + ...
        assert_eq!(format_fq_poly(&g.entry(0, 1)), "1 + D + D^3 + D^5 + D^7");
        let (num, den) = rational_generator(&s);
        assert_eq!(den, p(&f, &[1, 0, 1]));
        assert_eq!(num[0][0], p(&f, &[1, 0, 1]));
        assert_eq!(num[0][1], p(&f, &[1, 1, 1]));
    }

    #[test]
    fn degenerate_generators() {
        let f = Field::prime(2).unwrap();
        // A = 0: G(D) = E + BC D
        let s = ConvSeed::new(f.clone(), 2, 1, 1, mat(&f, &[&[1, 1, 0], &[1, 0, 1]])).unwrap();
        let g = poly_generator(&s, 4);
        assert_eq!(format_fq_poly(&g.entry(0, 0)), "1 + D");
        assert_eq!(format_fq_poly(&g.entry(0, 1)), "D");
        // B = 0: G(D) = E
        let s = ConvSeed::new(f.clone(), 2, 1, 1, mat(&f, &[&[1, 1, 1], &[1, 0, 0]])).unwrap();
        let g = poly_generator(&s, 4);
        assert_eq!(format_fq_poly(&g.entry(0, 0)), "1");
        assert_eq!(format_fq_poly(&g.entry(0, 1)), "0");
    }

    #[test]
    fn example_orthogonality() {
        let f = Field::prime(2).unwrap();
        let s = example1(&f);
        let d = dual_constraint_code(&s).unwrap();
        assert!(orthogonality_check(&s, &d).holds());
        let sd = SystematicConvSeed::new(s.clone()).unwrap().dual().unwrap();
        assert!(orthogonality_check(&s, sd.base()).holds());
        assert!(!orthogonality_check(&s, &s).holds());
        let f3 = Field::prime(3).unwrap();
        let s3 = ConvSeed::new(
            f3.clone(),
            3,
            1,
            1,
            mat(&f3, &[&[1, 2, 0, 1], &[1, 1, 1, 2]]),
        )
        .unwrap();
        let report = orthogonality_check(&s3, &s3);
        assert!(!report.holds());
        assert!(report.failures[0].contains("not dual"));
    }

    #[test]
    fn memoryless_orthogonality() {
        let f = Field::prime(3).unwrap();
        let s = ConvSeed::new(f.clone(), 2, 1, 0, mat(&f, &[&[1, 1]])).unwrap();
        let good = ConvSeed::new(f.clone(), 2, 1, 0, mat(&f, &[&[2, 1]])).unwrap();
        let bad = ConvSeed::new(f.clone(), 2, 1, 0, mat(&f, &[&[1, 1]])).unwrap();
        assert!(orthogonality_check(&s, &good).holds());
        let r = orthogonality_check(&s, &bad);
        assert!(r.failures.iter().any(|x| x.contains("E E'^T")));
    }
}
