//! Polynomial check matrices: impulse responses of the encoder for ancilla,
//! ebit and logical inputs as truncated Pauli series in D.

use std::fmt;

use crate::quantum::eaqcc::EaqccSpec;
use crate::quantum::pauli::PauliWord;

/// A truncated series sum_t D^t P_t of n-qubit Pauli words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliSeries {
    pub coeffs: Vec<PauliWord>,
    /// True when the memory returned to the identity within the truncation,
    /// so `coeffs` is the whole series.
    pub terminates: bool,
}

impl fmt::Display for PauliSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_identity())
            .map(|(t, p)| match t {
                0 => p.to_string(),
                1 => format!("D*{p}"),
                _ => format!("D^{t}*{p}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", terms.join(" + "))?;
        }
        if !self.terminates {
            write!(f, " + ...")?;
        }
        Ok(())
    }
}

/// Rows S^Z(D) (one per ancilla), S^E(D) (Z and X per ebit) and L(D)
/// (Z and X per logical qubit), truncated at D^d_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyCheckMatrix {
    pub s_z: Vec<PauliSeries>,
    pub s_e: Vec<PauliSeries>,
    pub logical: Vec<PauliSeries>,
    pub d_max: u32,
}

/// Rows of M_U for one input, split into the physical part and the
/// output-memory part (the (F A), (G B), (H C), (K E) blocks).
struct BlockRow {
    p: PauliWord,
    mem: PauliWord,
}

fn block_row(spec: &EaqccSpec, input: PauliWord) -> BlockRow {
    let out = spec.seed().apply(&input);
    BlockRow {
        p: out.restrict(&spec.roles().physical),
        mem: out.restrict(&spec.roles().memory_out),
    }
}

/// The memory rows (F A), two per memory qubit in Z, X order.
fn memory_rows(spec: &EaqccSpec) -> Vec<BlockRow> {
    let w = spec.n() + spec.m();
    spec.roles()
        .memory
        .iter()
        .flat_map(|&i| [PauliWord::z_at(w, i), PauliWord::x_at(w, i)])
        .map(|g| block_row(spec, g))
        .collect()
}

/// phi(v) (F A): the physical and memory parts produced one step after the
/// memory holds `v`.
fn step(rows: &[BlockRow], v: &PauliWord, n: usize) -> BlockRow {
    let mut acc = BlockRow {
        p: PauliWord::identity(n),
        mem: PauliWord::identity(v.len()),
    };
    for (j, bits) in v.phi().chunks(2).enumerate() {
        for (b, row) in bits.iter().zip(&rows[2 * j..2 * j + 2]) {
            if *b == 1 {
                acc.p = acc.p.mul(&row.p);
                acc.mem = acc.mem.mul(&row.mem);
            }
        }
    }
    acc
}

/// Expands r + D r_mem (I - DA)^{-1} F up to D^d_max.
fn series(rows: &[BlockRow], start: BlockRow, n: usize, d_max: u32) -> PauliSeries {
    let mut coeffs = vec![start.p];
    let mut mem = start.mem;
    for _ in 0..d_max {
        if mem.is_identity() {
            break;
        }
        let next = step(rows, &mem, n);
        coeffs.push(next.p);
        mem = next.mem;
    }
    PauliSeries {
        coeffs,
        terminates: mem.is_identity(),
    }
}

/// The polynomial check matrix S(D) = (S^Z(D); S^E(D)) and the logical
/// matrix L(D), read from the blocks of M_U. Role sets give the column
/// order, so no particular qubit layout of the seed is assumed.
pub fn poly_check_matrix(spec: &EaqccSpec, d_max: u32) -> PolyCheckMatrix {
    let w = spec.n() + spec.m();
    let rows = memory_rows(spec);
    let expand = |g: PauliWord| series(&rows, block_row(spec, g), spec.n(), d_max);
    let pairs = |set: &[usize]| -> Vec<PauliSeries> {
        set.iter()
            .flat_map(|&i| [PauliWord::z_at(w, i), PauliWord::x_at(w, i)])
            .map(expand)
            .collect()
    };
    PolyCheckMatrix {
        s_z: spec
            .roles()
            .ancilla
            .iter()
            .map(|&i| expand(PauliWord::z_at(w, i)))
            .collect(),
        s_e: pairs(&spec.roles().ebit),
        logical: pairs(&spec.roles().logical),
        d_max,
    }
}

/// Result of checking that every L row commutes with every S row under
/// all relative shifts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommutationReport {
    pub violations: Vec<String>,
    /// Pairs where neither series terminated, so no shift could be checked
    /// exactly.
    pub unchecked: usize,
}

/// sum_t <a_t, b_{t+s}> mod 2 for every shift s at which the truncation
/// still determines the sum; `None` if neither series terminates.
fn shifted_products(a: &PauliSeries, b: &PauliSeries, d_max: u32) -> Option<Vec<(i64, u8)>> {
    let (short, long, flip) = if b.terminates {
        (b, a, false)
    } else if a.terminates {
        (a, b, true)
    } else {
        return None;
    };
    let ls = short.coeffs.len() as i64;
    let d = d_max as i64;
    let mut out = Vec::new();
    // long index t, short index t + s; need every t with 0 <= t + s < ls
    // to satisfy t <= d unless the long series is complete.
    let lo = if long.terminates {
        -(long.coeffs.len() as i64)
    } else {
        ls - 1 - d
    };
    for s in lo..ls {
        let mut acc = 0u8;
        for (u, sw) in short.coeffs.iter().enumerate() {
            let t = u as i64 - s;
            if t >= 0 && (t as usize) < long.coeffs.len() {
                acc ^= long.coeffs[t as usize].symplectic(sw);
            }
        }
        out.push((if flip { -s } else { s }, acc));
    }
    Some(out)
}

impl PolyCheckMatrix {
    pub fn stabilizer_rows(&self) -> impl Iterator<Item = &PauliSeries> {
        self.s_z.iter().chain(&self.s_e)
    }

    pub fn commutation_check(&self) -> CommutationReport {
        let mut report = CommutationReport::default();
        for (i, l) in self.logical.iter().enumerate() {
            for (j, s) in self.stabilizer_rows().enumerate() {
                match shifted_products(l, s, self.d_max) {
                    None => report.unchecked += 1,
                    Some(v) => {
                        for (shift, bit) in v {
                            if bit == 1 {
                                report.violations.push(format!(
                                    "logical row {} and stabilizer row {} anticommute at shift {shift}",
                                    i + 1,
                                    j + 1
                                ));
                            }
                        }
                    }
                }
            }
        }
        report
    }
}

impl fmt::Display for PolyCheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.s_z.iter().enumerate() {
            writeln!(f, "SZ[{}] = {r}", i + 1)?;
        }
        for (i, r) in self.s_e.iter().enumerate() {
            writeln!(f, "SE[{}] = {r}", i + 1)?;
        }
        for (i, r) in self.logical.iter().enumerate() {
            writeln!(f, "L[{}] = {r}", i + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::clifford::CliffordSeed;
    use crate::quantum::eaqcc::tests::{u1, u2_ea, u2_qcc};
    use crate::quantum::eaqcc::Roles;

    #[test]
    fn qcc_stabilizer_terminates() {
        let h = poly_check_matrix(&u2_qcc(), 10);
        assert_eq!(h.s_z.len(), 1);
        assert!(h.s_e.is_empty());
        assert_eq!(h.s_z[0].to_string(), "IZ + D*ZI");
        assert!(h.s_z[0].terminates);
        let report = h.commutation_check();
        assert!(report.violations.is_empty(), "{:?}", report.violations);
    }

    #[test]
    fn ea_rows_commute_with_logicals() {
        for spec in [u1(), u2_ea()] {
            let h = poly_check_matrix(&spec, 12);
            assert_eq!(h.s_e.len(), 2);
            assert_eq!(h.logical.len(), 2);
            let report = h.commutation_check();
            assert!(report.violations.is_empty(), "{:?}", report.violations);
        }
    }

    #[test]
    fn memoryless_is_constant() {
        let s = CliffordSeed::identity(2);
        let r = Roles {
            logical: vec![0],
            ancilla: vec![1],
            physical: vec![0, 1],
            ..Roles::default()
        };
        let spec = EaqccSpec::new(s, 2, 1, 0, 0, r).unwrap();
        let h = poly_check_matrix(&spec, 5);
        assert_eq!(h.s_z[0].coeffs, vec!["IZ".parse().unwrap()]);
        assert!(h.s_z[0].terminates);
    }

    #[test]
    fn rendering() {
        let h = poly_check_matrix(&u2_qcc(), 4);
        let text = h.to_string();
        assert!(text.starts_with("SZ[1] = IZ + D*ZI\n"));
        assert!(text.contains("L[1] = "));
    }
}
