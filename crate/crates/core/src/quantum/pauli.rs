//! Pauli words modulo phase, in the binary symplectic representation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_QUBITS: usize = 64;

/// A tensor product of I, X, Y, Z on up to 64 qubits, phases discarded.
/// Bit i of `z` / `x` is the Z / X component on qubit i (0-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PauliWord {
    len: usize,
    z: u64,
    x: u64,
}

/// Single-qubit letters in state order.
pub const LETTERS: [char; 4] = ['I', 'X', 'Y', 'Z'];

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl PauliWord {
    pub fn identity(len: usize) -> PauliWord {
        assert!(len <= MAX_QUBITS, "at most {MAX_QUBITS} qubits");
        PauliWord { len, z: 0, x: 0 }
    }

    pub fn from_bits(len: usize, z: u64, x: u64) -> PauliWord {
        assert!(len <= MAX_QUBITS, "at most {MAX_QUBITS} qubits");
        PauliWord {
            len,
            z: z & mask(len),
            x: x & mask(len),
        }
    }

    /// Z on qubit i.
    pub fn z_at(len: usize, i: usize) -> PauliWord {
        PauliWord::from_bits(len, 1 << i, 0)
    }

    /// X on qubit i.
    pub fn x_at(len: usize, i: usize) -> PauliWord {
        PauliWord::from_bits(len, 0, 1 << i)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn z_bits(&self) -> u64 {
        self.z
    }

    pub fn x_bits(&self) -> u64 {
        self.x
    }

    pub fn is_identity(&self) -> bool {
        self.z == 0 && self.x == 0
    }

    /// Letter index on qubit i in the order I, X, Y, Z.
    pub fn letter_index(&self, i: usize) -> usize {
        match ((self.z >> i) & 1, (self.x >> i) & 1) {
            (0, 0) => 0,
            (0, 1) => 1,
            (1, 1) => 2,
            _ => 3,
        }
    }

    pub fn letter(&self, i: usize) -> char {
        LETTERS[self.letter_index(i)]
    }

    pub fn with_letter(mut self, i: usize, idx: usize) -> PauliWord {
        let (z, x) = [(0, 0), (0, 1), (1, 1), (1, 0)][idx];
        self.z = (self.z & !(1 << i)) | (z << i);
        self.x = (self.x & !(1 << i)) | (x << i);
        self
    }

    pub fn weight(&self) -> usize {
        (self.z | self.x).count_ones() as usize
    }

    /// The product modulo phase.
    pub fn mul(&self, other: &PauliWord) -> PauliWord {
        assert_eq!(self.len, other.len, "Pauli words of different length");
        PauliWord {
            len: self.len,
            z: self.z ^ other.z,
            x: self.x ^ other.x,
        }
    }

    /// 0 if the operators commute, 1 if they anticommute.
    pub fn symplectic(&self, other: &PauliWord) -> u8 {
        (((self.z & other.x) ^ (self.x & other.z)).count_ones() & 1) as u8
    }

    /// Binary image (z_1, x_1, z_2, x_2, ...), so I = 00, X = 01, Z = 10, Y = 11.
    pub fn phi(&self) -> Vec<u8> {
        (0..self.len)
            .flat_map(|i| [((self.z >> i) & 1) as u8, ((self.x >> i) & 1) as u8])
            .collect()
    }

    pub fn from_phi(bits: &[u8]) -> Result<PauliWord> {
        if bits.len() % 2 != 0 || bits.len() / 2 > MAX_QUBITS || bits.iter().any(|&b| b > 1) {
            return Err(Error::Dimension(
                "binary image must have even length of bits".into(),
            ));
        }
        let len = bits.len() / 2;
        let (mut z, mut x) = (0u64, 0u64);
        for i in 0..len {
            z |= (bits[2 * i] as u64) << i;
            x |= (bits[2 * i + 1] as u64) << i;
        }
        Ok(PauliWord { len, z, x })
    }

    /// The letters at `positions`, in that order.
    pub fn restrict(&self, positions: &[usize]) -> PauliWord {
        positions
            .iter()
            .enumerate()
            .fold(PauliWord::identity(positions.len()), |acc, (j, &p)| {
                acc.with_letter(j, self.letter_index(p))
            })
    }

    /// Concatenation `self ⊗ other`.
    pub fn tensor(&self, other: &PauliWord) -> PauliWord {
        PauliWord::from_bits(
            self.len + other.len,
            self.z | (other.z << self.len),
            self.x | (other.x << self.len),
        )
    }

    /// Index among the 4^len words with the first qubit varying fastest.
    pub fn state_index(&self) -> usize {
        (0..self.len)
            .rev()
            .fold(0, |acc, i| acc * 4 + self.letter_index(i))
    }

    pub fn from_state_index(len: usize, mut idx: usize) -> PauliWord {
        let mut w = PauliWord::identity(len);
        for i in 0..len {
            w = w.with_letter(i, idx % 4);
            idx /= 4;
        }
        w
    }
}

/// Labels of the 4^m memory states in canonical order. The single state of
/// a memoryless code is labelled `-`.
pub fn pauli_state_labels(m: usize) -> Vec<String> {
    (0..4usize.pow(m as u32))
        .map(|i| {
            if m == 0 {
                "-".to_string()
            } else {
                PauliWord::from_state_index(m, i).to_string()
            }
        })
        .collect()
}

/// Symplectic product of two words of equal length.
pub fn symplectic_product(g: &PauliWord, h: &PauliWord) -> Result<u8> {
    if g.len != h.len {
        return Err(Error::Dimension(format!(
            "Pauli words of length {} and {}",
            g.len, h.len
        )));
    }
    Ok(g.symplectic(h))
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.letter(i))?;
        }
        Ok(())
    }
}

impl FromStr for PauliWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<PauliWord> {
        let s = s.trim();
        if s.len() > MAX_QUBITS {
            return Err(Error::Dimension(format!("more than {MAX_QUBITS} qubits")));
        }
        let mut w = PauliWord::identity(s.len());
        for (i, ch) in s.chars().enumerate() {
            let idx = LETTERS.iter().position(|&c| c == ch).ok_or(Error::Parse {
                line: 1,
                col: i + 1,
                msg: format!("'{ch}' is not a Pauli letter"),
            })?;
            w = w.with_letter(i, idx);
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PauliWord {
        s.parse().unwrap()
    }

    #[test]
    fn symplectic_examples() {
        assert_eq!(symplectic_product(&w("X"), &w("Z")).unwrap(), 1);
        assert_eq!(symplectic_product(&w("XX"), &w("XX")).unwrap(), 0);
        assert_eq!(symplectic_product(&w("XZ"), &w("ZX")).unwrap(), 0);
        assert!(symplectic_product(&w("X"), &w("XX")).is_err());
    }

    #[test]
    fn binary_image() {
        assert_eq!(w("IXZY").phi(), vec![0, 0, 0, 1, 1, 0, 1, 1]);
        assert_eq!(PauliWord::from_phi(&w("YZX").phi()).unwrap(), w("YZX"));
        assert_eq!(w("XZ").mul(&w("ZZ")), w("YI"));
    }

    #[test]
    fn state_order() {
        assert_eq!(pauli_state_labels(1), vec!["I", "X", "Y", "Z"]);
        assert_eq!(pauli_state_labels(2)[1], "XI");
        assert_eq!(pauli_state_labels(2)[4], "IX");
        assert_eq!(w("ZY").state_index(), 3 + 4 * 2);
        assert_eq!(w("IYZ").restrict(&[2, 0]), w("ZI"));
        assert_eq!(w("XY").tensor(&w("Z")), w("XYZ"));
        assert_eq!(w("XYZI").weight(), 3);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb(len: usize) -> impl Strategy<Value = PauliWord> {
            (any::<u64>(), any::<u64>()).prop_map(move |(z, x)| PauliWord::from_bits(len, z, x))
        }

        proptest! {
            #[test]
            fn phi_is_a_homomorphism(a in arb(7), b in arb(7)) {
                let lhs = a.mul(&b).phi();
                let rhs: Vec<u8> = a.phi().iter().zip(b.phi()).map(|(x, y)| x ^ y).collect();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn symplectic_is_bilinear(a in arb(5), b in arb(5), c in arb(5)) {
                prop_assert_eq!(a.symplectic(&b.mul(&c)), a.symplectic(&b) ^ a.symplectic(&c));
                prop_assert_eq!(a.symplectic(&a), 0);
                prop_assert_eq!(a.symplectic(&b), b.symplectic(&a));
            }

            #[test]
            fn text_round_trip(a in arb(9)) {
                prop_assert_eq!(a.to_string().parse::<PauliWord>().unwrap(), a);
            }
        }
    }
}
