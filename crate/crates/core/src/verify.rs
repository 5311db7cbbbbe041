//! Identity checks against exhaustive oracles, one named result per
//! identity. Used by `verify all`.

use crate::algebra::linalg;
use crate::algebra::{Field, Fq, PolyMatrix, Var, WeightPoly};
use crate::block::{
    check_budget, dual_code, for_each_in_coset, hwgf, ipwgf, macwilliams_hwgf, macwilliams_ipwgf,
    weight, LinearCode, SystematicCode,
};
use crate::conv::seed::state_index;
use crate::conv::{
    dual_constraint_code, dual_full_trellis, dual_total_wgf, free_wgf, full_trellis, ipwam,
    macwilliams_ipwam, macwilliams_wam, orthogonality_check, state_labels, total_wgf, wam,
    Collapse, ConvSeed, Weighting,
};
use crate::error::Result;
use crate::formats::ConvFile;
use crate::quantum::{
    constraint_stabilizers, dual_spec, poly_check_matrix, quantum_dual_wam, quantum_macwilliams,
    quantum_wam, state_diagram, EaqccSpec, PauliWord,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }

    fn eq<T: PartialEq>(name: &str, a: &T, b: &T) -> Check {
        Check::new(name, a == b, if a == b { "" } else { "values differ" })
    }

    /// "PASS name" or "FAIL name: detail".
    pub fn line(&self) -> String {
        match (self.passed, self.detail.is_empty()) {
            (true, _) => format!("PASS {}", self.name),
            (false, true) => format!("FAIL {}", self.name),
            (false, false) => format!("FAIL {}: {}", self.name, self.detail),
        }
    }
}

fn all_vectors(field: &Field, len: usize, f: impl FnMut(&[Fq], &[Fq])) {
    let zeros = vec![field.zero(); len];
    for_each_in_coset(field, &zeros, &linalg::identity(field, len), f);
}

/// HWGF of the dual found by testing every word of GF(q)^n.
pub fn exhaustive_dual_hwgf(code: &LinearCode) -> Result<WeightPoly> {
    let f = code.field();
    let n = code.n();
    check_budget(f.q(), n, code.budget())?;
    let mut counts = vec![0i128; n + 1];
    all_vectors(f, n, |_, v| {
        if code.generator().iter().all(|g| f.dot(g, v).is_zero()) {
            counts[weight(v)] += 1;
        }
    });
    let mut p = WeightPoly::zero();
    for (w, &c) in counts.iter().enumerate() {
        p += &WeightPoly::monomial(c, &[(Var::X, (n - w) as u16), (Var::Y, w as u16)]);
    }
    Ok(p)
}

pub fn verify_block(code: &LinearCode) -> Result<Vec<Check>> {
    let q = code.field().q();
    let (n, k) = (code.n(), code.k());
    let w = hwgf(code)?;
    let oracle = exhaustive_dual_hwgf(code)?;
    let transformed = macwilliams_hwgf(&w, k, q)?;
    let mut checks = vec![
        Check::eq(
            "Hamming enumerator transform matches exhaustive dual",
            &transformed,
            &oracle,
        ),
        Check::eq(
            "dual generator spans the exhaustive dual",
            &hwgf(&dual_code(code))?,
            &oracle,
        ),
        Check::eq(
            "Hamming transform applied twice is the identity",
            &macwilliams_hwgf(&transformed, n - k, q)?,
            &w,
        ),
    ];
    let sys =
        SystematicCode::new(code.clone()).or_else(|_| SystematicCode::new_trailing(code.clone()));
    if let Ok(s) = sys {
        let ip = ipwgf(&s)?;
        checks.push(Check::eq(
            "input-parity transform matches the systematic dual",
            &macwilliams_ipwgf(&ip, k, n, q)?,
            &ipwgf(&s.dual())?,
        ));
    }
    Ok(checks)
}

/// WAM of the dual constraint code found by testing every (w, p, w') in
/// GF(q)^{2m+n} against G~ diag(I_m, I_n, -I_m).
pub fn exhaustive_dual_wam(seed: &ConvSeed) -> Result<PolyMatrix> {
    let f = seed.field();
    let (n, m) = (seed.n(), seed.m());
    let len = 2 * m + n;
    check_budget(f.q(), len, seed.budget())?;
    let g = seed.constraint_generator();
    let states = (f.q() as usize).pow(m as u32);
    let mut counts = vec![vec![vec![0i128; n + 1]; states]; states];
    all_vectors(f, len, |_, v| {
        let signed: Vec<Fq> = v
            .iter()
            .enumerate()
            .map(|(i, &x)| if i >= m + n { f.neg(x) } else { x })
            .collect();
        if g.iter().all(|row| f.dot(row, &signed).is_zero()) {
            let i = state_index(f.q(), &v[..m]);
            let j = state_index(f.q(), &v[m + n..]);
            counts[i][j][weight(&v[m..m + n])] += 1;
        }
    });
    let mut out = PolyMatrix::zeros(state_labels(f.q(), m));
    for (i, row) in counts.iter().enumerate() {
        for (j, cs) in row.iter().enumerate() {
            for (w, &c) in cs.iter().enumerate() {
                if c != 0 {
                    *out.entry_mut(i, j) +=
                        &WeightPoly::monomial(c, &[(Var::X, (n - w) as u16), (Var::Y, w as u16)]);
                }
            }
        }
    }
    Ok(out)
}

pub fn verify_conv(file: &ConvFile, d_max: u32) -> Result<Vec<Check>> {
    let seed = &file.seed;
    let f = seed.field();
    let (n, k, m) = (seed.n(), seed.k(), seed.m());
    let l = wam(seed)?;
    let oracle = exhaustive_dual_wam(seed)?;
    let transformed = macwilliams_wam(&l, f, n, k, m)?;
    let mut checks = vec![Check::eq(
        "WAM transform matches exhaustive dual constraint code",
        &transformed,
        &oracle,
    )];
    match dual_constraint_code(seed) {
        Ok(dual) => {
            checks.push(Check::eq(
                "dual encoder reproduces the transformed WAM",
                &wam(&dual)?,
                &oracle,
            ));
            let report = orthogonality_check(seed, &dual);
            checks.push(Check::new(
                "generator matrices are orthogonal",
                report.holds(),
                report.failures.join("; "),
            ));
        }
        Err(e) => checks.push(Check::new(
            "dual encoder reproduces the transformed WAM",
            false,
            e.to_string(),
        )),
    }
    checks.push(Check::eq(
        "WAM transform applied twice is the identity",
        &macwilliams_wam(&transformed, f, n, n - k, m)?,
        &l,
    ));
    if let Some(s) = &file.systematic {
        let dual = s.dual()?;
        checks.push(Check::eq(
            "input-parity WAM transform matches the systematic dual encoder",
            &macwilliams_ipwam(&ipwam(s)?, f, n, k, m)?,
            &ipwam(&dual)?,
        ));
        let report = orthogonality_check(seed, dual.base());
        checks.push(Check::new(
            "systematic dual generator is orthogonal",
            report.holds(),
            report.failures.join("; "),
        ));
    }
    let ly = Collapse::Y.apply_matrix(&l);
    let wc = total_wgf(&ly, d_max);
    let wf = free_wgf(&ly, d_max);
    let dd = WeightPoly::var(Var::D).with_dmax(Some(d_max));
    let one = WeightPoly::one();
    checks.push(Check::eq(
        "free-path series times (1 + total series D) gives the total series",
        &(&wf * &(&one + &(&wc * &dd))),
        &wc,
    ));
    checks.push(Check::eq(
        "total series times (1 - free-path series D) gives the free-path series",
        &(&wc * &(&one - &(&wf * &dd))),
        &wf,
    ));
    let direct = dual_total_wgf(&l, f, n, k, m, d_max)?;
    let trellis = dual_full_trellis(&full_trellis(&l, d_max)?, f, k, m, Weighting::Hamming)?;
    let via_trellis = trellis.get(0, 0).set_ones(&[Var::X]);
    let via_oracle = total_wgf(&oracle.map(|e| e.set_ones(&[Var::X])), d_max);
    checks.push(Check::eq(
        "dual total series agrees with the dual full trellis",
        &direct,
        &via_trellis,
    ));
    checks.push(Check::eq(
        "dual total series agrees with the exhaustive dual",
        &direct,
        &via_oracle,
    ));
    Ok(checks)
}

/// WAM of the commutant of the constraint code's logical group, found by
/// testing every Pauli word on 2m + n qubits. This is the dual WAM.
pub fn exhaustive_dual_quantum_wam(spec: &EaqccSpec) -> Result<PolyMatrix> {
    let (n, m) = (spec.n(), spec.m());
    let len = 2 * m + n;
    check_budget(4, len, spec.budget())?;
    let own = own_logical_words(spec);
    let mem_in: Vec<usize> = (0..m).collect();
    let phys: Vec<usize> = (m..m + n).collect();
    let mem_out: Vec<usize> = (m + n..len).collect();
    let states = 4usize.pow(m as u32);
    let mut counts = vec![vec![vec![0i128; n + 1]; states]; states];
    for bits in 0u64..(1u64 << (2 * len)) {
        let v = PauliWord::from_bits(len, bits, bits >> len);
        if own.iter().all(|g| g.symplectic(&v) == 0) {
            let i = v.restrict(&mem_in).state_index();
            let j = v.restrict(&mem_out).state_index();
            counts[i][j][v.restrict(&phys).weight()] += 1;
        }
    }
    let mut out = PolyMatrix::zeros(crate::quantum::pauli_state_labels(m));
    for (i, row) in counts.iter().enumerate() {
        for (j, cs) in row.iter().enumerate() {
            for (w, &c) in cs.iter().enumerate() {
                if c != 0 {
                    *out.entry_mut(i, j) +=
                        &WeightPoly::monomial(c, &[(Var::X, (n - w) as u16), (Var::Y, w as u16)]);
                }
            }
        }
    }
    Ok(out)
}

/// Generators of the group the WAM counts, on 2m + n positions.
fn own_logical_words(spec: &EaqccSpec) -> Vec<PauliWord> {
    spec.logical_inputs()
        .iter()
        .map(|g| spec.constraint_word(g))
        .collect()
}

pub fn verify_quantum(spec: &EaqccSpec, d_max: u32) -> Result<Vec<Check>> {
    let (n, k, c, a, m) = (spec.n(), spec.k(), spec.c(), spec.a(), spec.m());
    let l = quantum_wam(spec)?;
    let transformed = quantum_dual_wam(spec)?;
    let oracle = exhaustive_dual_quantum_wam(spec)?;
    let mut checks = vec![
        Check::eq(
            "WAM transform matches exhaustive commutant",
            &transformed,
            &oracle,
        ),
        Check::eq(
            "WAM transform matches the code with logical and ebit roles swapped",
            &transformed,
            &quantum_wam(&dual_spec(spec))?,
        ),
        Check::eq(
            "WAM transform applied twice is the identity",
            &quantum_macwilliams(&transformed, n, c, k, a, m)?,
            &l,
        ),
    ];
    let gens = constraint_stabilizers(spec);
    let ebit_start = 2 * m;
    let mut bad = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for (j, h) in gens.iter().enumerate().skip(i + 1) {
            let partners = i >= ebit_start && j < ebit_start + 2 * c && i % 2 == 0 && j == i + 1;
            if g.symplectic(h) != u8::from(partners) {
                bad.push(format!("{g} and {h}"));
            }
        }
    }
    checks.push(Check::new(
        "stabilizer generators commute except ebit partners",
        bad.is_empty(),
        bad.join("; "),
    ));
    if m <= crate::quantum::diagram::MAX_DIAGRAM_MEMORY {
        checks.push(Check::eq(
            "state diagram reproduces the WAM",
            &state_diagram(spec)?.wam(),
            &l,
        ));
    }
    let report = poly_check_matrix(spec, d_max).commutation_check();
    checks.push(Check::new(
        "logical rows commute with check matrix rows at every shift",
        report.violations.is_empty(),
        report.violations.join("; "),
    ));
    Ok(checks)
}
