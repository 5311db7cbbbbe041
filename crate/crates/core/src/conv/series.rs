//! Generating functions over trellis paths: total and free-distance
//! enumerators, free distance, and full-trellis duality.

use super::seed::SystematicConvSeed;
use super::wam::{fourier_conjugate, ipwam, macwilliams_transform, Weighting};
use crate::algebra::matrix::power_sum;
use crate::algebra::{Field, Monomial, PolyMatrix, Var, WeightPoly};
use crate::error::{Error, Result};

const WEIGHT_VARS: [Var; 4] = [Var::Y, Var::YI, Var::YP, Var::YO];

/// `sum_{i<=d_max} (e_0 N^i)[0] D^i`, by repeated row-vector products.
fn corner_series(nmat: &PolyMatrix, d_max: u32) -> WeightPoly {
    let dim = nmat.dim();
    let mut v: Vec<WeightPoly> = vec![WeightPoly::zero(); dim];
    v[0] = WeightPoly::one();
    let mut out = WeightPoly::one().with_dmax(Some(d_max));
    for i in 1..=d_max {
        v = row_times(&v, nmat);
        out += &v[0].shift_d(i as u16);
    }
    out
}

fn row_times(v: &[WeightPoly], nmat: &PolyMatrix) -> Vec<WeightPoly> {
    let dim = nmat.dim();
    let mut next = vec![WeightPoly::zero(); dim];
    for (t, vt) in v.iter().enumerate() {
        if vt.is_zero() {
            continue;
        }
        for (j, nj) in next.iter_mut().enumerate() {
            let e = nmat.get(t, j);
            if !e.is_zero() {
                *nj += &(vt * e);
            }
        }
    }
    next
}

/// W(D) = <0|(I - Λ D)^{-1}|0>, the enumerator of all walks from the zero
/// state back to it, truncated at D^{d_max}.
pub fn total_wgf(l: &PolyMatrix, d_max: u32) -> WeightPoly {
    corner_series(l, d_max)
}

/// The full-trellis matrix (I - Λ D)^{-1} truncated at D^{d_max}.
pub fn full_trellis(l: &PolyMatrix, d_max: u32) -> Result<PolyMatrix> {
    power_sum(l, d_max)
}

/// Total weight generating function of the dual code, through the
/// MacWilliams transform of the two-variable WAM with x set to 1 afterwards.
pub fn dual_total_wgf(
    l: &PolyMatrix,
    field: &Field,
    n: usize,
    k: usize,
    m: usize,
    d_max: u32,
) -> Result<WeightPoly> {
    let dual = macwilliams_transform(l, field, n, k, m, Weighting::Hamming)?;
    Ok(total_wgf(&dual.map(|e| e.set_ones(&[Var::X])), d_max))
}

/// The full-trellis matrix of the dual code directly from the full-trellis
/// matrix of the code: substitute, conjugate by F, and divide the D^d part
/// by q^{m + k d}. Entries of `full` must carry x (and D).
pub fn dual_full_trellis(
    full: &PolyMatrix,
    field: &Field,
    k: usize,
    m: usize,
    weighting: Weighting,
) -> Result<PolyMatrix> {
    let sub = weighting.substitution(field.q());
    let lp = full.try_map(|e| Ok(e.substitute_partial(&sub)))?;
    let conj = fourier_conjugate(field, m, &lp)?;
    let q = field.q() as i128;
    conj.try_map(|e| {
        let mut out = WeightPoly::zero().with_dmax(e.dmax());
        for (mono, c) in e.terms() {
            let d = mono.exp(Var::D) as usize;
            let scale = q.checked_pow((m + k * d) as u32).ok_or(Error::Overflow)?;
            if c % scale != 0 {
                return Err(Error::NonIntegral { divisor: scale });
            }
            out.add_term(*mono, c / scale);
        }
        Ok(out)
    })
}

/// Λ with its all-zero self-loop at state 0 removed.
fn without_zero_loop(l: &PolyMatrix) -> PolyMatrix {
    let mut nmat = l.clone();
    let e = l.get(0, 0);
    let zero_weight: Option<Monomial> = e
        .terms()
        .map(|(m, _)| *m)
        .find(|m| m.degree_in(&WEIGHT_VARS) == 0);
    if let Some(m) = zero_weight {
        nmat.entry_mut(0, 0).add_term(m, -1);
    }
    nmat
}

/// W_free(D) = <0|[I - (Λ - |0><0|) D]^{-1}|0>: concatenations of
/// fundamental paths, including the empty one.
pub fn free_wgf(l: &PolyMatrix, d_max: u32) -> WeightPoly {
    corner_series(&without_zero_loop(l), d_max)
}

/// The enumerator of single fundamental paths 0 -> ... -> 0 of length at
/// least one, with no intermediate visit to state 0.
pub fn fundamental_paths(l: &PolyMatrix, d_max: u32) -> WeightPoly {
    let nmat = without_zero_loop(l);
    let dim = nmat.dim();
    let mut out = WeightPoly::zero().with_dmax(Some(d_max));
    // v holds walks that left 0 and have not yet returned.
    let mut v: Vec<WeightPoly> = vec![WeightPoly::zero(); dim];
    v[0] = WeightPoly::one();
    for i in 1..=d_max {
        let next = row_times(&v, &nmat);
        out += &next[0].shift_d(i as u16);
        v = next;
        v[0] = WeightPoly::zero();
    }
    out
}

/// Result of a free-distance search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeDistance {
    Found(u32),
    /// No certified value: some path still open at depth `d_max` could
    /// remerge with smaller weight than anything seen.
    Undetermined {
        d_max: u32,
    },
    /// No path ever leaves the zero state with nonzero weight.
    NoNonzeroPaths,
}

fn min_weight(p: &WeightPoly) -> Option<u32> {
    p.terms().map(|(m, _)| m.degree_in(&WEIGHT_VARS)).min()
}

/// The least positive weight of a fundamental path, when certified within
/// `d_max` steps: a candidate from the fundamental paths found so far is
/// accepted only if every path still open after `d_max` steps already
/// has at least that weight.
pub fn free_distance(l: &PolyMatrix, d_max: u32) -> FreeDistance {
    let nmat = without_zero_loop(l);
    let dim = nmat.dim();
    let mut candidate: Option<u32> = None;
    let mut v: Vec<WeightPoly> = vec![WeightPoly::zero(); dim];
    v[0] = WeightPoly::one();
    for _ in 1..=d_max {
        let next = row_times(&v, &nmat);
        for (m, _) in next[0].terms() {
            let w = m.degree_in(&WEIGHT_VARS);
            if w > 0 {
                candidate = Some(candidate.map_or(w, |c| c.min(w)));
            }
        }
        v = next;
        v[0] = WeightPoly::zero();
    }
    let open = v.iter().filter_map(min_weight).min();
    match (candidate, open) {
        (Some(c), None) => FreeDistance::Found(c),
        (Some(c), Some(o)) if o >= c => FreeDistance::Found(c),
        (None, None) => FreeDistance::NoNonzeroPaths,
        _ => FreeDistance::Undetermined { d_max },
    }
}

/// W_C(y_I, y_P, D) and W_{C-dual}(y_I, y_P, D) of a systematic encoder,
/// the latter through the input-parity transform of the IPWAM.
pub fn ip_total_wgf(seed: &SystematicConvSeed, d_max: u32) -> Result<(WeightPoly, WeightPoly)> {
    let b = seed.base();
    let ip = ipwam(seed)?;
    let dual = macwilliams_transform(&ip, b.field(), b.n(), b.k(), b.m(), Weighting::InputParity)?;
    let ones = [Var::XI, Var::XP];
    Ok((
        total_wgf(&ip.map(|e| e.set_ones(&ones)), d_max),
        total_wgf(&dual.map(|e| e.set_ones(&ones)), d_max),
    ))
}
