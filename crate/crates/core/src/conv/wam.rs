//! Weight adjacency matrices of convolutional encoders and their
//! MacWilliams transforms.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::seed::{state_index, state_labels, state_vector, ConvSeed, SystematicConvSeed};
use crate::algebra::linalg::{self, FqMatrix};
use crate::algebra::{CycloPoly, Field, Fq, PolyMatrix, Substitution, Var, WeightPoly};
use crate::block::{
    check_budget, check_nonnegative, for_each_in_coset, hamming_substitution,
    input_parity_substitution, weight, LinearCode,
};
use crate::error::{Error, Result};

type Tally<K> = BTreeMap<(usize, K), i128>;

/// For every memory state w, counts transitions (w -> w') bucketed by
/// `key(u, p)`. Rows are computed in parallel and returned in state order.
fn tally<K, F>(seed: &ConvSeed, key: F) -> Result<Vec<Tally<K>>>
where
    K: Ord + Copy + Send,
    F: Fn(&[Fq], &[Fq]) -> K + Sync,
{
    let f = seed.field();
    let (n, k, m) = (seed.n(), seed.k(), seed.m());
    let q = f.q();
    check_budget(q, m + k, seed.budget())?;
    let upper: FqMatrix = seed.t()[..m].to_vec();
    let lower: FqMatrix = seed.t()[m..].to_vec();
    let states = (q as usize).pow(m as u32);
    Ok((0..states)
        .into_par_iter()
        .map(|wi| {
            let w = state_vector(q, m, wi);
            let offset = linalg::vec_mat(f, &w, &upper, n + m);
            let mut map = Tally::new();
            for_each_in_coset(f, &offset, &lower, |u, word| {
                let (p, w2) = word.split_at(n);
                *map.entry((state_index(q, w2), key(u, p))).or_insert(0) += 1;
            });
            map
        })
        .collect())
}

fn assemble<K: Copy>(
    labels: Vec<String>,
    tallies: Vec<Tally<K>>,
    poly: impl Fn(K) -> WeightPoly,
) -> PolyMatrix {
    let mut out = PolyMatrix::zeros(labels);
    for (i, t) in tallies.into_iter().enumerate() {
        for ((j, key), c) in t {
            *out.entry_mut(i, j) += &poly(key).scale(c);
        }
    }
    out
}

fn xy(a: Var, b: Var, total: usize, w: usize) -> WeightPoly {
    WeightPoly::monomial(1, &[(a, (total - w) as u16), (b, w as u16)])
}

/// The weight adjacency matrix in x, y: entry (w, w') enumerates the output
/// weights of the transitions w -> w'.
pub fn wam(seed: &ConvSeed) -> Result<PolyMatrix> {
    let n = seed.n();
    let t = tally(seed, |_, p| weight(p))?;
    Ok(assemble(labels_of(seed), t, |w| xy(Var::X, Var::Y, n, w)))
}

fn labels_of(seed: &ConvSeed) -> Vec<String> {
    state_labels(seed.field().q(), seed.m())
}

/// The input-parity WAM in x_I, y_I, x_P, y_P of a systematic encoder.
pub fn ipwam(seed: &SystematicConvSeed) -> Result<PolyMatrix> {
    let base = seed.base();
    let (n, k) = (base.n(), base.k());
    let info = seed.info_positions();
    let t = tally(base, |_, p| {
        let wi = weight(&p[info.clone()]);
        (wi, weight(p) - wi)
    })?;
    Ok(assemble(labels_of(base), t, |(i, o)| {
        &xy(Var::XI, Var::YI, k, i) * &xy(Var::XP, Var::YP, n - k, o)
    }))
}

/// The input-output WAM in x_I, y_I, x_O, y_O: input weight wt(u) against
/// output weight wt(p). Depends on the encoder, not only on the code.
pub fn iowam(seed: &ConvSeed) -> Result<PolyMatrix> {
    let (n, k) = (seed.n(), seed.k());
    let t = tally(seed, |u, p| (weight(u), weight(p)))?;
    Ok(assemble(labels_of(seed), t, |(i, o)| {
        &xy(Var::XI, Var::YI, k, i) * &xy(Var::XO, Var::YO, n, o)
    }))
}

/// The WAM of a block code of length 2m + n read as triples (w : p : w').
pub fn wam_of_constraint_code(code: &LinearCode, m: usize) -> Result<PolyMatrix> {
    let q = code.field().q();
    let n = code
        .n()
        .checked_sub(2 * m)
        .ok_or_else(|| Error::Dimension("code shorter than 2m".into()))?;
    let mut out = PolyMatrix::zeros(state_labels(q, m));
    let mut counts: BTreeMap<(usize, usize, usize), i128> = BTreeMap::new();
    code.for_each_codeword(|_, c| {
        let i = state_index(q, &c[..m]);
        let j = state_index(q, &c[m + n..]);
        *counts.entry((i, j, weight(&c[m..m + n]))).or_insert(0) += 1;
    })?;
    for ((i, j, w), c) in counts {
        *out.entry_mut(i, j) += &xy(Var::X, Var::Y, n, w).scale(c);
    }
    Ok(out)
}

/// Builds the encoder with constraint generator
/// (I_m F C0+F E0 A0+F B0 ; 0 I_k E0 B0) and returns its IOWAM from the
/// systematic data: entry (w, w') is
/// Δ_S(x_I, y_I, 1, 1)[w, w' - w F B0] * Λ(x_O, y_O)[w, w'].
///
/// Valid only when every entry of the target IOWAM is a single monomial;
/// this is checked against a direct enumeration of the assembled encoder.
pub fn iowam_from_systematic(seed: &SystematicConvSeed, fmat: &FqMatrix) -> Result<PolyMatrix> {
    if !seed.is_leading() {
        return Err(Error::Precondition(
            "information positions must lead".into(),
        ));
    }
    let assembled = seed.with_feedback(fmat)?;
    let direct = iowam(&assembled)?;
    if let Some((i, j, e)) = direct.nonzero().find(|(_, _, e)| e.len() > 1) {
        return Err(Error::Precondition(format!(
            "IOWAM entry ({}, {}) = {e} is not a monomial",
            direct.labels()[i],
            direct.labels()[j]
        )));
    }
    let base = seed.base();
    let f = base.field();
    let (m, q) = (base.m(), f.q());
    let delta_s = iowam(base)?.map(|e| e.set_ones(&[Var::XO, Var::YO]));
    let lam = wam(base)?.map(|e| e.rename(&[(Var::X, Var::XO), (Var::Y, Var::YO)]));
    let fb0 = linalg::mat_mul(f, fmat, &seed.b0(), base.k(), m);
    let states = lam.dim();
    let mut out = PolyMatrix::zeros(lam.labels().to_vec());
    for i in 0..states {
        let w = state_vector(q, m, i);
        let shift = linalg::vec_mat(f, &w, &fb0, m);
        for j in 0..states {
            let w2 = state_vector(q, m, j);
            let target: Vec<Fq> = w2.iter().zip(&shift).map(|(&a, &b)| f.sub(a, b)).collect();
            let left = delta_s.get(i, state_index(q, &target));
            out.set(i, j, left * lam.get(i, j));
        }
    }
    Ok(out)
}

/// Which weight refinement a transform acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weighting {
    /// Entries in x, y.
    Hamming,
    /// Entries in x_I, y_I, x_P, y_P; input and parity roles swap.
    InputParity,
}

impl Weighting {
    pub fn substitution(self, q: u32) -> Substitution {
        match self {
            Weighting::Hamming => hamming_substitution(q),
            Weighting::InputParity => input_parity_substitution(q),
        }
    }

    fn check_entry(self, e: &WeightPoly, n: usize, k: usize) -> Result<()> {
        let groups: Vec<(&[Var], usize)> = match self {
            Weighting::Hamming => vec![(&[Var::X, Var::Y], n)],
            Weighting::InputParity => vec![(&[Var::XI, Var::YI], k), (&[Var::XP, Var::YP], n - k)],
        };
        for (vars, deg) in groups {
            match e.homogeneous_degree(vars) {
                Ok(Some(d)) if d as usize != deg => {
                    return Err(Error::NotHomogeneous(format!(
                        "entry {e} has degree {d} in {}, expected {deg}",
                        vars.iter().map(|v| v.name()).collect::<Vec<_>>().join(",")
                    )))
                }
                Err(()) => return Err(Error::NotHomogeneous(format!("entry {e}"))),
                _ => {}
            }
        }
        Ok(())
    }
}

fn pow_i(base: u32, e: usize) -> i128 {
    (0..e).fold(1i128, |a, _| {
        a.checked_mul(base as i128).expect("scale overflow")
    })
}

/// F L F^dagger with F[a][b] = w^{tr(a . b)} over the q^m memory states.
/// The result must be free of irrational character components.
pub fn fourier_conjugate(field: &Field, m: usize, l: &PolyMatrix) -> Result<PolyMatrix> {
    let q = field.q();
    let p = field.p();
    let states = (q as usize).pow(m as u32);
    if l.dim() != states {
        return Err(Error::Dimension(format!(
            "matrix has {} states, expected {states}",
            l.dim()
        )));
    }
    let vecs: Vec<Vec<Fq>> = (0..states).map(|i| state_vector(q, m, i)).collect();
    let tr: Vec<Vec<u32>> = vecs
        .iter()
        .map(|a| vecs.iter().map(|b| field.trace(field.dot(a, b))).collect())
        .collect();
    let rows: Vec<Result<Vec<WeightPoly>>> = (0..states)
        .into_par_iter()
        .map(|a| {
            // y[v] = sum_w w^{tr(a.w)} L[w][v]
            let mut y: Vec<CycloPoly> = (0..states).map(|_| CycloPoly::zero(p)).collect();
            for (wi, row) in l.rows().iter().enumerate() {
                for (v, e) in row.iter().enumerate() {
                    if !e.is_zero() {
                        y[v].add_rotated(tr[a][wi], e);
                    }
                }
            }
            (0..states)
                .map(|b| {
                    let mut acc = CycloPoly::zero(p);
                    for (v, yv) in y.iter().enumerate() {
                        acc.add_rotated_poly((p - tr[v][b]) % p, yv);
                    }
                    acc.into_integral()
                })
                .collect()
        })
        .collect();
    let entries = rows.into_iter().collect::<Result<Vec<_>>>()?;
    PolyMatrix::new(l.labels().to_vec(), entries)
}

/// The MacWilliams transform of a WAM:
/// q^{-(m+k)} F L(x + (q-1) y, x - y) F^dagger, or the input-parity
/// analogue. The result must have nonnegative integer coefficients.
pub fn macwilliams_transform(
    l: &PolyMatrix,
    field: &Field,
    n: usize,
    k: usize,
    m: usize,
    weighting: Weighting,
) -> Result<PolyMatrix> {
    if k > n {
        return Err(Error::Dimension(format!("k = {k} exceeds n = {n}")));
    }
    for row in l.rows() {
        for e in row {
            weighting.check_entry(e, n, k)?;
        }
    }
    let sub = weighting.substitution(field.q());
    let lp = l.try_map(|e| e.substitute(&sub))?;
    let conj = fourier_conjugate(field, m, &lp)?;
    let scale = pow_i(field.q(), m + k);
    conj.try_map(|e| {
        let d = e.div_exact(scale)?;
        check_nonnegative(&d)?;
        Ok(d)
    })
}

/// The WAM of the dual code from the WAM of the code.
pub fn macwilliams_wam(
    l: &PolyMatrix,
    field: &Field,
    n: usize,
    k: usize,
    m: usize,
) -> Result<PolyMatrix> {
    macwilliams_transform(l, field, n, k, m, Weighting::Hamming)
}

/// The IPWAM of the dual systematic encoder from the IPWAM of the encoder.
pub fn macwilliams_ipwam(
    l: &PolyMatrix,
    field: &Field,
    n: usize,
    k: usize,
    m: usize,
) -> Result<PolyMatrix> {
    macwilliams_transform(l, field, n, k, m, Weighting::InputParity)
}

/// How to merge variables before printing or comparing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Collapse {
    /// Every x-type variable to 1 and every y-type variable to y.
    Y,
    /// x_I, x_P (and x) to 1.
    YiYp,
    /// x_I, x_O (and x) to 1.
    YiYo,
}

impl Collapse {
    pub fn apply(self, p: &WeightPoly) -> WeightPoly {
        match self {
            Collapse::Y => p.set_ones(&[Var::X, Var::XI, Var::XP, Var::XO]).rename(&[
                (Var::YI, Var::Y),
                (Var::YP, Var::Y),
                (Var::YO, Var::Y),
            ]),
            Collapse::YiYp => p.set_ones(&[Var::X, Var::XI, Var::XP]),
            Collapse::YiYo => p.set_ones(&[Var::X, Var::XI, Var::XO]),
        }
    }

    pub fn apply_matrix(self, l: &PolyMatrix) -> PolyMatrix {
        l.map(|e| self.apply(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(f: &Field, rows: &[&[u32]]) -> FqMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| f.element(x).unwrap()).collect())
            .collect()
    }

    fn pm(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::new(
            vec!["00".into(), "10".into(), "01".into(), "11".into()],
            rows.iter()
                .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn example1() -> SystematicConvSeed {
        let f = Field::prime(2).unwrap();
        let t = mat(&f, &[&[0, 1, 0, 1], &[0, 0, 1, 0], &[1, 1, 1, 0]]);
        SystematicConvSeed::new(ConvSeed::new(f, 2, 1, 2, t).unwrap()).unwrap()
    }

    fn lambda_y() -> PolyMatrix {
        pm(&[
            &["1", "y^2", "0", "0"],
            &["0", "0", "y", "y"],
            &["y^2", "1", "0", "0"],
            &["0", "0", "y", "y"],
        ])
    }

    #[test]
    fn example_ipwam() {
        let s = example1();
        let ip = Collapse::YiYp.apply_matrix(&ipwam(&s).unwrap());
        assert_eq!(
            ip,
            pm(&[
                &["1", "y_I*y_P", "0", "0"],
                &["0", "0", "y_P", "y_I"],
                &["y_I*y_P", "1", "0", "0"],
                &["0", "0", "y_I", "y_P"],
            ])
        );
        assert_eq!(Collapse::Y.apply_matrix(&ip), lambda_y());
        let l = wam(s.base()).unwrap();
        assert_eq!(l.eval_ones(), 8);
        assert_eq!(Collapse::Y.apply_matrix(&l), lambda_y());
        let collapsed = ipwam(&s).unwrap().map(|e| {
            e.rename(&[
                (Var::XI, Var::X),
                (Var::XP, Var::X),
                (Var::YI, Var::Y),
                (Var::YP, Var::Y),
            ])
        });
        assert_eq!(collapsed, l);
    }

    #[test]
    fn example_iowam() {
        let s = example1();
        let f = s.base().field().clone();
        let ns = s.with_feedback(&mat(&f, &[&[0], &[1]])).unwrap();
        let expect = pm(&[
            &["1", "y_I*y_O^2", "0", "0"],
            &["0", "0", "y_O", "y_I*y_O"],
            &["y_O^2", "y_I", "0", "0"],
            &["0", "0", "y_O", "y_I*y_O"],
        ]);
        let direct = iowam(&ns).unwrap();
        assert_eq!(Collapse::YiYo.apply_matrix(&direct), expect);
        let via = iowam_from_systematic(&s, &mat(&f, &[&[0], &[1]])).unwrap();
        assert_eq!(via, direct);
        let outputs_only = direct.map(|e| e.set_ones(&[Var::XI, Var::YI]));
        assert_eq!(Collapse::Y.apply_matrix(&outputs_only), lambda_y());
        assert_eq!(Collapse::Y.apply_matrix(&wam(&ns).unwrap()), lambda_y());
        // systematic: Δ = Λ(x_I x_O, y_I y_O, x_O, y_O)
        let sub = Substitution::new()
            .set(Var::XI, "x_I*x_O".parse().unwrap())
            .set(Var::YI, "y_I*y_O".parse().unwrap())
            .set(Var::XP, WeightPoly::var(Var::XO))
            .set(Var::YP, WeightPoly::var(Var::YO));
        let from_ip = ipwam(&s).unwrap().map(|e| e.substitute_partial(&sub));
        assert_eq!(iowam(s.base()).unwrap(), from_ip);
        // F = 0
        let zero = mat(&f, &[&[0], &[0]]);
        assert_eq!(
            iowam_from_systematic(&s, &zero).unwrap(),
            iowam(s.base()).unwrap()
        );
        // x_I = y_I = 1 gives the WAM
        let w = iowam(&ns).unwrap().map(|e| {
            e.set_ones(&[Var::XI, Var::YI])
                .rename(&[(Var::XO, Var::X), (Var::YO, Var::Y)])
        });
        assert_eq!(w, wam(&ns).unwrap());
    }

    #[test]
    fn example_dual_ipwam() {
        let s = example1();
        let b = s.base();
        let ip = ipwam(&s).unwrap();
        let dual = macwilliams_ipwam(&ip, b.field(), b.n(), b.k(), b.m()).unwrap();
        let expect = pm(&[
            &["1", "0", "y_I*y_P", "0"],
            &["y_I*y_P", "0", "1", "0"],
            &["0", "y_P", "0", "y_I"],
            &["0", "y_I", "0", "y_P"],
        ]);
        assert_eq!(Collapse::YiYp.apply_matrix(&dual), expect);
        assert_eq!(dual, ipwam(&s.dual().unwrap()).unwrap());
        let back = macwilliams_ipwam(&dual, b.field(), b.n(), b.n() - b.k(), b.m()).unwrap();
        assert_eq!(back, ip);
    }

    #[test]
    fn example_dual_wam() {
        let s = example1();
        let b = s.base();
        let l = wam(b).unwrap();
        let dual = macwilliams_wam(&l, b.field(), 2, 1, 2).unwrap();
        let h = crate::conv::seed::dual_constraint_code(b).unwrap();
        assert_eq!(dual, wam(&h).unwrap());
        assert_eq!(dual.eval_ones(), 8);
    }

    #[test]
    fn memoryless_reduces_to_block() {
        let f = Field::prime(3).unwrap();
        let s = ConvSeed::new(f.clone(), 3, 1, 0, mat(&f, &[&[1, 1, 2]])).unwrap();
        let l = wam(&s).unwrap();
        let code = s.constraint_code().unwrap();
        assert_eq!(*l.get(0, 0), crate::block::hwgf(&code).unwrap());
        let d = macwilliams_wam(&l, &f, 3, 1, 0).unwrap();
        assert_eq!(
            *d.get(0, 0),
            crate::block::macwilliams_hwgf(l.get(0, 0), 1, 3).unwrap()
        );
        let ss = SystematicConvSeed::new(s).unwrap();
        let sys_code = crate::block::SystematicCode::new(code).unwrap();
        assert_eq!(
            *ipwam(&ss).unwrap().get(0, 0),
            crate::block::ipwgf(&sys_code).unwrap()
        );
    }

    #[test]
    fn transform_rejects_bad_input() {
        let f = Field::prime(2).unwrap();
        let l = PolyMatrix::new(vec!["-".into()], vec![vec!["x + y^2".parse().unwrap()]]).unwrap();
        assert!(matches!(
            macwilliams_wam(&l, &f, 2, 1, 0),
            Err(Error::NotHomogeneous(_))
        ));
        let l =
            PolyMatrix::new(vec!["-".into()], vec![vec!["x^2 + y^2".parse().unwrap()]]).unwrap();
        assert!(matches!(
            macwilliams_wam(&l, &f, 2, 2, 0),
            Err(Error::NonIntegral { .. })
        ));
        assert!(matches!(
            macwilliams_wam(&l, &f, 2, 1, 1),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn iowam_from_systematic_rejects_non_monomial() {
        // Two inputs u, one output: several inputs share a transition.
        let f = Field::prime(2).unwrap();
        let t = mat(&f, &[&[0, 0, 1, 1], &[1, 0, 0, 1], &[0, 1, 1, 0]]);
        let s = SystematicConvSeed::new(ConvSeed::new(f.clone(), 3, 2, 1, t).unwrap()).unwrap();
        let r = iowam_from_systematic(&s, &mat(&f, &[&[0, 0]]));
        assert!(matches!(r, Err(Error::Precondition(_))));
    }
}
