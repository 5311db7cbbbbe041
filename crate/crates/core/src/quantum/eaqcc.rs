//! Entanglement-assisted quantum convolutional codes given by a Clifford
//! seed: role sets, duals, constraint stabilizers, WAMs and their
//! MacWilliams transform.

use rayon::prelude::*;

use crate::algebra::{PolyMatrix, Var, WeightPoly};
use crate::block::{check_budget, check_nonnegative, weight_poly, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::quantum::clifford::{validate_clifford, CliffordSeed};
use crate::quantum::pauli::{pauli_state_labels, PauliWord};

/// Qubit roles, 0-based. Input roles: memory, logical, ancilla, ebit.
/// Output roles: memory, physical. Order within each set matters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Roles {
    pub memory: Vec<usize>,
    pub logical: Vec<usize>,
    pub ancilla: Vec<usize>,
    pub ebit: Vec<usize>,
    pub memory_out: Vec<usize>,
    pub physical: Vec<usize>,
}

/// An ((n, k, c, m)) EA-QCC: a valid seed on n + m qubits plus roles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EaqccSpec {
    seed: CliffordSeed,
    n: usize,
    k: usize,
    c: usize,
    m: usize,
    roles: Roles,
    budget: u128,
}

fn check_partition(width: usize, sets: &[(&str, &[usize])]) -> Result<()> {
    let mut seen = vec![None; width];
    for (name, set) in sets {
        for &i in *set {
            if i >= width {
                return Err(Error::Precondition(format!(
                    "{name} position {} outside 1..={width}",
                    i + 1
                )));
            }
            if let Some(other) = seen[i] {
                return Err(Error::Precondition(format!(
                    "position {} is in both {other} and {name}",
                    i + 1
                )));
            }
            seen[i] = Some(*name);
        }
    }
    if let Some(i) = seen.iter().position(|s| s.is_none()) {
        return Err(Error::Precondition(format!(
            "position {} has no role among {}",
            i + 1,
            sets.iter().map(|s| s.0).collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(())
}

impl EaqccSpec {
    pub fn new(
        seed: CliffordSeed,
        n: usize,
        k: usize,
        c: usize,
        m: usize,
        roles: Roles,
    ) -> Result<EaqccSpec> {
        let report = validate_clifford(&seed);
        if !report.is_valid() {
            return Err(Error::InvalidSeed(report.violations.join("; ")));
        }
        if seed.width() != n + m {
            return Err(Error::Dimension(format!(
                "seed acts on {} qubits, expected n + m = {}",
                seed.width(),
                n + m
            )));
        }
        if k + c > n {
            return Err(Error::Dimension(format!(
                "k + c = {} exceeds n = {n}",
                k + c
            )));
        }
        let a = n - k - c;
        let sizes = [
            ("IM", roles.memory.len(), m),
            ("IL", roles.logical.len(), k),
            ("IA", roles.ancilla.len(), a),
            ("IE", roles.ebit.len(), c),
            ("IMout", roles.memory_out.len(), m),
            ("IP", roles.physical.len(), n),
        ];
        for (name, got, want) in sizes {
            if got != want {
                return Err(Error::Precondition(format!(
                    "{name} has {got} positions, expected {want}"
                )));
            }
        }
        check_partition(
            n + m,
            &[
                ("IM", &roles.memory),
                ("IL", &roles.logical),
                ("IA", &roles.ancilla),
                ("IE", &roles.ebit),
            ],
        )?;
        check_partition(
            n + m,
            &[("IMout", &roles.memory_out), ("IP", &roles.physical)],
        )?;
        Ok(EaqccSpec {
            seed,
            n,
            k,
            c,
            m,
            roles,
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn with_budget(mut self, budget: u128) -> EaqccSpec {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    pub fn seed(&self) -> &CliffordSeed {
        &self.seed
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn a(&self) -> usize {
        self.n - self.k - self.c
    }

    pub fn roles(&self) -> &Roles {
        &self.roles
    }

    /// Image of an input word on the 2m + n positions (M_in : P : M_out).
    pub(crate) fn constraint_word(&self, input: &PauliWord) -> PauliWord {
        let out = self.seed.apply(input);
        input
            .restrict(&self.roles.memory)
            .tensor(&out.restrict(&self.roles.physical))
            .tensor(&out.restrict(&self.roles.memory_out))
    }

    /// Input generators of the group counted by the WAM: Z and X on memory
    /// and logical positions, Z on ancillas.
    pub(crate) fn logical_inputs(&self) -> Vec<PauliWord> {
        self.inputs(&self.roles.logical)
    }

    /// Input generators of the simplified stabilizer group: Z and X on
    /// memory and ebit positions, Z on ancillas.
    pub(crate) fn stabilizer_inputs(&self) -> Vec<PauliWord> {
        self.inputs(&self.roles.ebit)
    }

    fn inputs(&self, paired: &[usize]) -> Vec<PauliWord> {
        let w = self.n + self.m;
        let mut gens = Vec::new();
        for &i in self.roles.memory.iter().chain(paired) {
            gens.push(PauliWord::z_at(w, i));
            gens.push(PauliWord::x_at(w, i));
        }
        gens.extend(self.roles.ancilla.iter().map(|&i| PauliWord::z_at(w, i)));
        gens
    }

    /// Calls `f(input, output)` for every element of the group generated by
    /// `gens`, in Gray-code order starting from the identity.
    pub(crate) fn for_each_in_group(
        &self,
        gens: &[PauliWord],
        mut f: impl FnMut(&PauliWord, &PauliWord),
    ) -> Result<()> {
        check_budget(2, gens.len(), self.budget)?;
        let images: Vec<PauliWord> = gens.iter().map(|g| self.seed.apply(g)).collect();
        let w = self.n + self.m;
        let (mut inp, mut out) = (PauliWord::identity(w), PauliWord::identity(w));
        f(&inp, &out);
        for step in 1u64..(1u64 << gens.len()) {
            let bit = step.trailing_zeros() as usize;
            inp = inp.mul(&gens[bit]);
            out = out.mul(&images[bit]);
            f(&inp, &out);
        }
        Ok(())
    }
}

/// The dual code: logical and ebit roles swapped, so (n, k, c, m) becomes
/// (n, c, k, m).
pub fn dual_spec(spec: &EaqccSpec) -> EaqccSpec {
    let mut d = spec.clone();
    std::mem::swap(&mut d.k, &mut d.c);
    std::mem::swap(&mut d.roles.logical, &mut d.roles.ebit);
    d
}

/// Generators of the simplified stabilizer group of the constraint code on
/// 2m + n positions (M_in : P : M_out): Z^M_j g_i and X^M_j h_i for memory
/// inputs, g_i and h_i for ebits, g_i for ancillas.
pub fn constraint_stabilizers(spec: &EaqccSpec) -> Vec<PauliWord> {
    spec.stabilizer_inputs()
        .iter()
        .map(|g| spec.constraint_word(g))
        .collect()
}

/// The 4^m x 4^m WAM in x, y. Entry (M, M') counts the elements
/// U(M ⊗ L ⊗ S^Z ⊗ I)U† of the logical group with output memory M', by
/// the weight of their physical part. The entries sum to 4^m 4^k 2^a at
/// x = y = 1.
pub fn quantum_wam(spec: &EaqccSpec) -> Result<PolyMatrix> {
    group_wam(spec, &spec.logical_inputs())
}

fn group_wam(spec: &EaqccSpec, gens: &[PauliWord]) -> Result<PolyMatrix> {
    let states = 4usize.pow(spec.m as u32);
    let n = spec.n;
    let mut counts = vec![vec![vec![0i128; n + 1]; states]; states];
    spec.for_each_in_group(gens, |inp, out| {
        let from = inp.restrict(&spec.roles.memory).state_index();
        let to = out.restrict(&spec.roles.memory_out).state_index();
        counts[from][to][out.restrict(&spec.roles.physical).weight()] += 1;
    })?;
    let entries = counts
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| weight_poly(c, n, Var::X, Var::Y))
                .collect()
        })
        .collect();
    PolyMatrix::new(pauli_state_labels(spec.m), entries)
}

/// (-1)^{<a, b>} for memory words with the given state indices.
fn pauli_sign(m: usize, a: usize, b: usize) -> i128 {
    let pa = PauliWord::from_state_index(m, a);
    let pb = PauliWord::from_state_index(m, b);
    if pa.symplectic(&pb) == 1 {
        -1
    } else {
        1
    }
}

/// The 4^m x 4^m Fourier matrix F^{⊗m} on memory Pauli words.
pub fn pauli_fourier(m: usize) -> Vec<Vec<i128>> {
    let states = 4usize.pow(m as u32);
    (0..states)
        .map(|a| (0..states).map(|b| pauli_sign(m, a, b)).collect())
        .collect()
}

/// The WAM of the dual code:
/// 4^{-m} 4^{-k} 2^{-a} F^{⊗m} L(x + 3y, x - y) F^{⊗m}.
/// Division must be exact and the result nonnegative.
pub fn quantum_macwilliams(
    l: &PolyMatrix,
    n: usize,
    k: usize,
    c: usize,
    a: usize,
    m: usize,
) -> Result<PolyMatrix> {
    if k + c + a != n {
        return Err(Error::Dimension(format!(
            "k + c + a = {} differs from n = {n}",
            k + c + a
        )));
    }
    let states = 4usize.pow(m as u32);
    if l.dim() != states {
        return Err(Error::Dimension(format!(
            "matrix has {} states, expected 4^{m} = {states}",
            l.dim()
        )));
    }
    for (_, _, e) in l.nonzero() {
        match e.homogeneous_degree(&[Var::X, Var::Y]) {
            Ok(Some(d)) if d as usize == n => {}
            _ => {
                return Err(Error::NotHomogeneous(format!(
                    "entry {e} is not homogeneous of degree {n} in x,y"
                )))
            }
        }
    }
    let sub = crate::block::hamming_substitution(4);
    let lp = l.try_map(|e| e.substitute(&sub))?;
    let f = pauli_fourier(m);
    let scale = 1i128
        .checked_shl((2 * m + 2 * k + a) as u32)
        .filter(|_| 2 * m + 2 * k + a < 126)
        .ok_or(Error::Overflow)?;
    let entries: Vec<Vec<WeightPoly>> = (0..states)
        .into_par_iter()
        .map(|r| {
            // y[v] = sum_w F[r][w] L'[w][v]
            let y: Vec<WeightPoly> = (0..states)
                .map(|v| {
                    let mut acc = WeightPoly::zero();
                    for w in 0..states {
                        let e = lp.get(w, v);
                        if !e.is_zero() {
                            acc += &e.scale(f[r][w]);
                        }
                    }
                    acc
                })
                .collect();
            (0..states)
                .map(|col| {
                    let mut acc = WeightPoly::zero();
                    for (v, yv) in y.iter().enumerate() {
                        if !yv.is_zero() {
                            acc += &yv.scale(f[v][col]);
                        }
                    }
                    let d = acc.div_exact(scale)?;
                    check_nonnegative(&d)?;
                    Ok(d)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::new(l.labels().to_vec(), entries)
}

/// Transform of a spec's own WAM with the spec's parameters.
pub fn quantum_dual_wam(spec: &EaqccSpec) -> Result<PolyMatrix> {
    quantum_macwilliams(
        &quantum_wam(spec)?,
        spec.n,
        spec.k,
        spec.c,
        spec.a(),
        spec.m,
    )
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn seed(z: &[&str], x: &[&str]) -> CliffordSeed {
        CliffordSeed::from_images(
            z.iter().map(|s| s.parse().unwrap()).collect(),
            x.iter().map(|s| s.parse().unwrap()).collect(),
        )
        .unwrap()
    }

    fn roles(
        im: &[usize],
        il: &[usize],
        ia: &[usize],
        ie: &[usize],
        imo: &[usize],
        ip: &[usize],
    ) -> Roles {
        let z = |v: &[usize]| v.iter().map(|i| i - 1).collect();
        Roles {
            memory: z(im),
            logical: z(il),
            ancilla: z(ia),
            ebit: z(ie),
            memory_out: z(imo),
            physical: z(ip),
        }
    }

    pub(crate) fn u1() -> EaqccSpec {
        let s = seed(&["ZIX", "XZY", "XYZ"], &["XXX", "YIY", "YXY"]);
        EaqccSpec::new(s, 2, 1, 1, 1, roles(&[1], &[2], &[], &[3], &[1], &[2, 3])).unwrap()
    }

    fn u2_seed() -> CliffordSeed {
        seed(&["ZII", "ZZI", "IZZ"], &["XXX", "IXX", "IIX"])
    }

    pub(crate) fn u2_ea() -> EaqccSpec {
        EaqccSpec::new(
            u2_seed(),
            2,
            1,
            1,
            1,
            roles(&[1], &[2], &[], &[3], &[1], &[2, 3]),
        )
        .unwrap()
    }

    /// The ((2,1,1)) QCC: ancilla on qubit 3, output memory on qubit 3.
    pub(crate) fn u2_qcc() -> EaqccSpec {
        EaqccSpec::new(
            u2_seed(),
            2,
            1,
            0,
            1,
            roles(&[1], &[2], &[3], &[], &[3], &[1, 2]),
        )
        .unwrap()
    }

    pub(crate) fn ymat(rows: &[[&str; 4]]) -> PolyMatrix {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<WeightPoly>().unwrap()).collect())
            .collect();
        PolyMatrix::new(pauli_state_labels(1), entries).unwrap()
    }

    fn at_x1(l: &PolyMatrix) -> PolyMatrix {
        l.map(|e| e.set_ones(&[Var::X]))
    }

    /// Homogenise a y-only matrix to degree n in x, y.
    fn homog(l: &PolyMatrix, n: u16) -> PolyMatrix {
        l.map(|e| {
            let mut out = WeightPoly::zero();
            for (mono, c) in e.terms() {
                let w = mono.exp(Var::Y);
                out += &WeightPoly::monomial(c, &[(Var::X, n - w), (Var::Y, w)]);
            }
            out
        })
    }

    #[test]
    fn u1_wam_matrix() {
        let l = quantum_wam(&u1()).unwrap();
        let want = ymat(&[
            ["1", "y^2", "y", "y"],
            ["y^2", "y^2", "y^2", "y^2"],
            ["y^2", "y", "y", "y^2"],
            ["y^2", "y", "y^2", "y"],
        ]);
        assert_eq!(at_x1(&l), want);
        assert_eq!(l.eval_ones(), 16);
    }

    #[test]
    fn u1_dual_is_transpose() {
        let spec = u1();
        let l = quantum_wam(&spec).unwrap();
        let dual = quantum_dual_wam(&spec).unwrap();
        assert_eq!(dual, l.transpose());
        assert_eq!(dual, quantum_wam(&dual_spec(&spec)).unwrap());
    }

    #[test]
    fn u2_matrix_and_diagonal_dual() {
        let spec = u2_ea();
        let l = quantum_wam(&spec).unwrap();
        let want = ymat(&[
            ["1 + y^2", "0", "0", "y + y^2"],
            ["0", "1 + y^2", "y + y^2", "0"],
            ["0", "y + y^2", "1 + y^2", "0"],
            ["y + y^2", "0", "0", "1 + y^2"],
        ]);
        assert_eq!(at_x1(&l), want);
        let dual = ymat(&[
            ["1 + y + 2*y^2", "0", "0", "0"],
            ["0", "y + 3*y^2", "0", "0"],
            ["0", "0", "y + 3*y^2", "0"],
            ["0", "0", "0", "1 + y + 2*y^2"],
        ]);
        assert_eq!(at_x1(&quantum_dual_wam(&spec).unwrap()), dual);
        assert_eq!(at_x1(&quantum_wam(&dual_spec(&spec)).unwrap()), dual);
    }

    #[test]
    fn qcc_recovered_from_its_dual() {
        let dual_l = ymat(&[
            ["1", "0", "0", "y"],
            ["0", "y^2", "y^2", "0"],
            ["0", "y^2", "y^2", "0"],
            ["y", "0", "0", "y^2"],
        ]);
        let spec = u2_qcc();
        let dual = dual_spec(&spec);
        assert_eq!(at_x1(&quantum_wam(&dual).unwrap()), dual_l);
        let recovered = quantum_macwilliams(&homog(&dual_l, 2), 2, 0, 1, 1, 1).unwrap();
        let want = ymat(&[
            ["1 + y^2", "y + y^2", "y + y^2", "2*y"],
            ["y + y^2", "2*y^2", "2*y^2", "y + y^2"],
            ["y + y^2", "2*y^2", "2*y^2", "y + y^2"],
            ["2*y", "y + y^2", "y + y^2", "1 + y^2"],
        ]);
        assert_eq!(at_x1(&recovered), want);
        assert_eq!(recovered, quantum_wam(&spec).unwrap());
    }

    #[test]
    fn double_transform_is_identity() {
        for spec in [u1(), u2_ea(), u2_qcc()] {
            let l = quantum_wam(&spec).unwrap();
            let d = quantum_dual_wam(&spec).unwrap();
            let back =
                quantum_macwilliams(&d, spec.n(), spec.c(), spec.k(), spec.a(), spec.m()).unwrap();
            assert_eq!(back, l);
        }
    }

    #[test]
    fn fourier_squares_to_scaled_identity() {
        let f = pauli_fourier(1);
        assert_eq!(f[1], vec![1, 1, -1, -1]);
        assert_eq!(f[2], vec![1, -1, 1, -1]);
        for i in 0..4 {
            for j in 0..4 {
                let s: i128 = (0..4).map(|t| f[i][t] * f[t][j]).sum();
                assert_eq!(s, if i == j { 4 } else { 0 });
            }
        }
    }

    #[test]
    fn stabilizer_generators() {
        let spec = u1();
        let gens = constraint_stabilizers(&spec);
        assert_eq!(gens.len(), 4);
        assert_eq!(gens[0].len(), 4);
        // Z^M ⊗ g_1 with g_1 = ZIX: memory-in Z, physical IX, memory-out Z.
        assert_eq!(gens[0].to_string(), "ZIXZ");
        for (i, g) in gens.iter().enumerate() {
            for (j, h) in gens.iter().enumerate() {
                // memory pairs commute on 2m + n positions; ebit pairs do not
                let partners = i / 2 == j / 2 && i != j && i >= 2 * spec.m();
                assert_eq!(g.symplectic(h), u8::from(partners), "{g} {h}");
            }
        }
        // its group is the group the dual WAM counts
        assert_eq!(
            group_wam(&spec, &spec.stabilizer_inputs()).unwrap(),
            quantum_wam(&dual_spec(&spec)).unwrap()
        );
    }

    #[test]
    fn degenerate_roles() {
        // k = n: only memory generators
        let s = CliffordSeed::identity(2);
        let r = Roles {
            memory: vec![0],
            logical: vec![1],
            memory_out: vec![0],
            physical: vec![1],
            ..Roles::default()
        };
        let spec = EaqccSpec::new(s.clone(), 1, 1, 0, 1, r).unwrap();
        assert_eq!(constraint_stabilizers(&spec).len(), 2);
        // m = 0, c = 0: a plain stabilizer code with one ancilla
        let r0 = Roles {
            logical: vec![0],
            ancilla: vec![1],
            physical: vec![0, 1],
            ..Roles::default()
        };
        let spec0 = EaqccSpec::new(s, 2, 1, 0, 0, r0).unwrap();
        assert_eq!(constraint_stabilizers(&spec0), vec!["IZ".parse().unwrap()]);
        let l = quantum_wam(&spec0).unwrap();
        assert_eq!(l.labels(), ["-"]);
        assert_eq!(
            *l.get(0, 0),
            "x^2 + 4*x*y + 3*y^2".parse::<WeightPoly>().unwrap()
        );
    }

    #[test]
    fn role_errors() {
        let s = u2_seed();
        let mut r = roles(&[1], &[2], &[], &[3], &[1], &[2, 3]);
        r.ebit = vec![1];
        assert!(matches!(
            EaqccSpec::new(s.clone(), 2, 1, 1, 1, r),
            Err(Error::Precondition(_))
        ));
        let r = roles(&[1], &[2], &[], &[3], &[1], &[2, 3]);
        assert!(EaqccSpec::new(s.clone(), 2, 2, 1, 1, r.clone()).is_err());
        let bad = seed(&["ZII", "XII", "IIZ"], &["IZI", "IXI", "IIX"]);
        assert!(matches!(
            EaqccSpec::new(bad, 2, 1, 1, 1, r),
            Err(Error::InvalidSeed(_))
        ));
    }

    #[test]
    fn dual_spec_is_involution() {
        let spec = u1();
        let d = dual_spec(&spec);
        assert_eq!((d.n(), d.k(), d.c(), d.m()), (2, 1, 1, 1));
        assert_eq!(d.roles().logical, vec![2]);
        assert_eq!(d.roles().ebit, vec![1]);
        assert_eq!(dual_spec(&d), spec);
    }
}
