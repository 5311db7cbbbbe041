//! Brute-force oracles and helpers shared by the integration tests. The
//! oracles only borrow field arithmetic and container types from the
//! library; every enumeration is written out here from the definitions.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use convwam::algebra::linalg::FqMatrix;
use convwam::algebra::{Field, Fq, PolyMatrix, Var, WeightPoly};
use convwam::conv::{state_labels, ConvSeed};
use convwam::quantum::{pauli_state_labels, EaqccSpec};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

pub fn all_fixtures() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixture(""))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    names
}

/// Runs the CLI in process: (exit code, stdout, stderr).
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("convwam").chain(args.iter().copied());
    let code = convwam::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Text of a matrix as the CLI prints it.
pub fn matrix_text(labels: &[&str], rows: &[[&str; 4]]) -> String {
    let mut s = format!("states: {}\n", labels.join(" "));
    for (l, r) in labels.iter().zip(rows) {
        s += &format!("{l}: [{}]\n", r.join(", "));
    }
    s
}

pub fn poly_matrix(labels: Vec<String>, rows: &[[&str; 4]]) -> PolyMatrix {
    let entries = rows
        .iter()
        .map(|r| r.iter().map(|e| e.parse::<WeightPoly>().unwrap()).collect())
        .collect();
    PolyMatrix::new(labels, entries).unwrap()
}

pub fn xy(c: i128, n: usize, w: usize) -> WeightPoly {
    WeightPoly::monomial(c, &[(Var::X, (n - w) as u16), (Var::Y, w as u16)])
}

/// Every vector of GF(q)^len, in odometer order.
pub fn all_vectors(f: &Field, len: usize) -> Vec<Vec<Fq>> {
    let q = f.q() as usize;
    let total = q.pow(len as u32);
    (0..total)
        .map(|mut idx| {
            (0..len)
                .map(|_| {
                    let d = (idx % q) as u32;
                    idx /= q;
                    f.element(d).unwrap()
                })
                .collect()
        })
        .collect()
}

fn combine(f: &Field, coeffs: &[Fq], rows: &FqMatrix, n: usize) -> Vec<Fq> {
    let mut out = vec![f.zero(); n];
    for (c, row) in coeffs.iter().zip(rows) {
        for (o, &r) in out.iter_mut().zip(row) {
            *o = f.add(*o, f.mul(*c, r));
        }
    }
    out
}

fn hamming(v: &[Fq]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

fn dot(f: &Field, a: &[Fq], b: &[Fq]) -> Fq {
    a.iter()
        .zip(b)
        .fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Hamming enumerator of the row span, by listing every combination.
/// Rows must be independent.
pub fn span_hwgf(f: &Field, rows: &FqMatrix, n: usize) -> WeightPoly {
    let mut counts = vec![0i128; n + 1];
    for c in all_vectors(f, rows.len()) {
        counts[hamming(&combine(f, &c, rows, n))] += 1;
    }
    counts
        .iter()
        .enumerate()
        .fold(WeightPoly::zero(), |acc, (w, &c)| &acc + &xy(c, n, w))
}

/// Input-parity enumerator of the row span; `info` marks the positions
/// weighted by x_I, y_I.
pub fn span_ipwgf(f: &Field, rows: &FqMatrix, info: &[bool]) -> WeightPoly {
    let n = info.len();
    let ki = info.iter().filter(|&&b| b).count();
    let mut counts: BTreeMap<(usize, usize), i128> = BTreeMap::new();
    for c in all_vectors(f, rows.len()) {
        let v = combine(f, &c, rows, n);
        let wi = (0..n).filter(|&i| info[i] && !v[i].is_zero()).count();
        let wp = (0..n).filter(|&i| !info[i] && !v[i].is_zero()).count();
        *counts.entry((wi, wp)).or_default() += 1;
    }
    let mut p = WeightPoly::zero();
    for ((wi, wp), c) in counts {
        p += &WeightPoly::monomial(
            c,
            &[
                (Var::XI, (ki - wi) as u16),
                (Var::YI, wi as u16),
                (Var::XP, (n - ki - wp) as u16),
                (Var::YP, wp as u16),
            ],
        );
    }
    p
}

fn state_of(f: &Field, w: &[Fq]) -> usize {
    let q = f.q() as usize;
    w.iter()
        .rev()
        .fold(0, |acc, x| acc * q + x.index() as usize)
}

/// One encoder step straight from T: (w : u) T = (p : w').
pub fn step(seed: &ConvSeed, w: &[Fq], u: &[Fq]) -> (Vec<Fq>, Vec<Fq>) {
    let f = seed.field();
    let wu: Vec<Fq> = w.iter().chain(u).copied().collect();
    let out = combine(f, &wu, seed.t(), seed.n() + seed.m());
    (out[..seed.n()].to_vec(), out[seed.n()..].to_vec())
}

/// WAM of the dual constraint code: every (w, p, w') in GF(q)^{2m+n} that
/// is orthogonal to each constraint codeword under diag(I, I, -I).
pub fn brute_dual_wam(seed: &ConvSeed) -> PolyMatrix {
    let f = seed.field();
    let (n, k, m) = (seed.n(), seed.k(), seed.m());
    // constraint codewords from the encoder equations
    let mut words = Vec::new();
    for wu in all_vectors(f, m + k) {
        let (p, w2) = step(seed, &wu[..m], &wu[m..]);
        let mut c = wu[..m].to_vec();
        c.extend(p);
        c.extend(w2.iter().map(|&x| f.neg(x)));
        words.push(c);
    }
    let states = (f.q() as usize).pow(m as u32);
    let mut entries = vec![vec![WeightPoly::zero(); states]; states];
    for v in all_vectors(f, 2 * m + n) {
        if words.iter().all(|c| dot(f, c, &v).is_zero()) {
            let i = state_of(f, &v[..m]);
            let j = state_of(f, &v[m + n..]);
            entries[i][j] += &xy(1, n, hamming(&v[m..m + n]));
        }
    }
    PolyMatrix::new(state_labels(f.q(), m), entries).unwrap()
}

/// Counts of walks 0 -> 0 of each length up to `depth`, by output weight:
/// `out[d][w]` is the number of input sequences of length d that return
/// the encoder to the zero state with total output weight w.
pub fn zero_walks(seed: &ConvSeed, depth: usize) -> Vec<BTreeMap<usize, i128>> {
    let f = seed.field();
    let inputs = all_vectors(f, seed.k());
    let mut out = vec![BTreeMap::new(); depth + 1];
    fn go(
        seed: &ConvSeed,
        inputs: &[Vec<Fq>],
        w: &[Fq],
        weight: usize,
        d: usize,
        depth: usize,
        out: &mut Vec<BTreeMap<usize, i128>>,
    ) {
        if w.iter().all(|x| x.is_zero()) {
            *out[d].entry(weight).or_default() += 1;
        }
        if d == depth {
            return;
        }
        for u in inputs {
            let (p, w2) = step(seed, w, u);
            go(seed, inputs, &w2, weight + hamming(&p), d + 1, depth, out);
        }
    }
    go(
        seed,
        &inputs,
        &vec![f.zero(); seed.m()],
        0,
        0,
        depth,
        &mut out,
    );
    out
}

/// sum_d sum_w count * y^w D^d from `zero_walks`.
pub fn walk_series(seed: &ConvSeed, depth: usize) -> WeightPoly {
    let mut p = WeightPoly::zero();
    for (d, ws) in zero_walks(seed, depth).iter().enumerate() {
        for (&w, &c) in ws {
            p += &WeightPoly::monomial(c, &[(Var::Y, w as u16), (Var::D, d as u16)]);
        }
    }
    p
}

/// Least weight of a fundamental path (0 -> ... -> 0, no intermediate
/// zero state, not the trivial all-zero step) of length at most `depth`.
pub fn min_fundamental_weight(seed: &ConvSeed, depth: usize) -> Option<usize> {
    let f = seed.field();
    let inputs = all_vectors(f, seed.k());
    let zero = vec![f.zero(); seed.m()];
    let mut best: Option<usize> = None;
    fn go(
        seed: &ConvSeed,
        inputs: &[Vec<Fq>],
        w: &[Fq],
        weight: usize,
        d: usize,
        depth: usize,
        best: &mut Option<usize>,
    ) {
        if d == depth {
            return;
        }
        for u in inputs {
            let (p, w2) = step(seed, w, u);
            let wt = weight + hamming(&p);
            if w2.iter().all(|x| x.is_zero()) {
                if wt > 0 {
                    *best = Some(best.map_or(wt, |b| b.min(wt)));
                }
            } else {
                go(seed, inputs, &w2, wt, d + 1, depth, best);
            }
        }
    }
    for u in &inputs {
        let (p, w2) = step(seed, &zero, u);
        let wt = hamming(&p);
        if w2.iter().all(|x| x.is_zero()) {
            if wt > 0 {
                best = Some(best.map_or(wt, |b| b.min(wt)));
            }
        } else {
            go(seed, &inputs, &w2, wt, 1, depth, &mut best);
        }
    }
    best
}

/// A Pauli word on up to 64 qubits as (z, x) bitmasks.
type Word = (u64, u64);

fn letter(w: Word, i: usize) -> usize {
    match ((w.0 >> i) & 1, (w.1 >> i) & 1) {
        (0, 0) => 0,
        (0, 1) => 1,
        (1, 1) => 2,
        _ => 3,
    }
}

fn commutes(a: Word, b: Word) -> bool {
    ((a.0 & b.1) ^ (a.1 & b.0)).count_ones() % 2 == 0
}

/// Words on 2m + n positions (memory in : physical : memory out) for the
/// generators of the group the WAM counts: Z and X on memory and logical
/// inputs, Z on ancillas.
fn logical_constraint_words(spec: &EaqccSpec) -> Vec<Word> {
    let seed = spec.seed();
    let r = spec.roles();
    let (n, m) = (spec.n(), spec.m());
    let mut inputs: Vec<(usize, bool)> = Vec::new();
    for &i in r.memory.iter().chain(&r.logical) {
        inputs.push((i, true));
        inputs.push((i, false));
    }
    for &i in &r.ancilla {
        inputs.push((i, true));
    }
    inputs
        .into_iter()
        .map(|(i, is_z)| {
            let img = if is_z {
                seed.z_image(i)
            } else {
                seed.x_image(i)
            };
            let (oz, ox) = (img.z_bits(), img.x_bits());
            let (iz, ix) = if is_z { (1u64 << i, 0) } else { (0, 1u64 << i) };
            let mut w: Word = (0, 0);
            let mut put = |pos: usize, z: u64, x: u64, from: usize| {
                w.0 |= ((z >> from) & 1) << pos;
                w.1 |= ((x >> from) & 1) << pos;
            };
            for (t, &q) in r.memory.iter().enumerate() {
                put(t, iz, ix, q);
            }
            for (t, &q) in r.physical.iter().enumerate() {
                put(m + t, oz, ox, q);
            }
            for (t, &q) in r.memory_out.iter().enumerate() {
                put(m + n + t, oz, ox, q);
            }
            w
        })
        .collect()
}

fn count_word(entries: &mut [Vec<WeightPoly>], w: Word, n: usize, m: usize) {
    let idx =
        |range: std::ops::Range<usize>| range.rev().fold(0usize, |acc, i| acc * 4 + letter(w, i));
    let i = idx(0..m);
    let j = idx(m + n..2 * m + n);
    let wt = (m..m + n).filter(|&p| letter(w, p) != 0).count();
    entries[i][j] += &xy(1, n, wt);
}

/// WAM as the span of the logical constraint words, listed subset by subset.
pub fn group_wam(spec: &EaqccSpec) -> PolyMatrix {
    let (n, m) = (spec.n(), spec.m());
    let gens = logical_constraint_words(spec);
    let states = 4usize.pow(m as u32);
    let mut entries = vec![vec![WeightPoly::zero(); states]; states];
    for mask in 0u64..(1 << gens.len()) {
        let mut w: Word = (0, 0);
        for (b, g) in gens.iter().enumerate() {
            if mask >> b & 1 == 1 {
                w = (w.0 ^ g.0, w.1 ^ g.1);
            }
        }
        count_word(&mut entries, w, n, m);
    }
    PolyMatrix::new(pauli_state_labels(m), entries).unwrap()
}

/// Dual WAM as the commutant of the logical constraint words, found by
/// testing every Pauli word on 2m + n qubits.
pub fn commutant_wam(spec: &EaqccSpec) -> PolyMatrix {
    let (n, m) = (spec.n(), spec.m());
    let len = 2 * m + n;
    let gens = logical_constraint_words(spec);
    let states = 4usize.pow(m as u32);
    let mut entries = vec![vec![WeightPoly::zero(); states]; states];
    for z in 0u64..(1 << len) {
        for x in 0u64..(1 << len) {
            if gens.iter().all(|&g| commutes(g, (z, x))) {
                count_word(&mut entries, (z, x), n, m);
            }
        }
    }
    PolyMatrix::new(pauli_state_labels(m), entries).unwrap()
}

pub fn mat(f: &Field, rows: &[&[u32]]) -> FqMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| f.element(x).unwrap()).collect())
        .collect()
}
