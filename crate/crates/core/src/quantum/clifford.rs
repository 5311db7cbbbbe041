//! Clifford seed transformations, stored as the images of Z_i and X_i.

use crate::error::{Error, Result};
use crate::quantum::pauli::{PauliWord, MAX_QUBITS};

/// A Clifford unitary U on `width` qubits modulo phase: `z_img[i] = U Z_i U†`
/// and `x_img[i] = U X_i U†`. Construction checks shapes only; use
/// [`validate_clifford`] for the commutation relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordSeed {
    z_img: Vec<PauliWord>,
    x_img: Vec<PauliWord>,
}

/// Outcome of [`validate_clifford`]: one message per violated relation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliffordReport {
    pub violations: Vec<String>,
}

impl CliffordReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl CliffordSeed {
    pub fn from_images(z_img: Vec<PauliWord>, x_img: Vec<PauliWord>) -> Result<CliffordSeed> {
        let w = z_img.len();
        if x_img.len() != w {
            return Err(Error::InvalidSeed(format!(
                "{w} Z images but {} X images",
                x_img.len()
            )));
        }
        if w == 0 || w > MAX_QUBITS {
            return Err(Error::InvalidSeed(format!(
                "width {w} outside 1..={MAX_QUBITS}"
            )));
        }
        if let Some(bad) = z_img.iter().chain(&x_img).find(|p| p.len() != w) {
            return Err(Error::InvalidSeed(format!(
                "image {bad} has length {}, expected {w}",
                bad.len()
            )));
        }
        Ok(CliffordSeed { z_img, x_img })
    }

    pub fn identity(width: usize) -> CliffordSeed {
        CliffordSeed {
            z_img: (0..width).map(|i| PauliWord::z_at(width, i)).collect(),
            x_img: (0..width).map(|i| PauliWord::x_at(width, i)).collect(),
        }
    }

    /// The product T_{h_last} ... T_{h_first} of symplectic transvections
    /// T_h(v) = v + <v, h> h. Always a valid seed.
    pub fn from_transvections(width: usize, hs: &[PauliWord]) -> Result<CliffordSeed> {
        let mut seed = CliffordSeed::identity(width);
        for h in hs {
            if h.len() != width {
                return Err(Error::Dimension(format!(
                    "transvection {h} on {} qubits, expected {width}",
                    h.len()
                )));
            }
            let t = |v: &PauliWord| {
                if v.symplectic(h) == 1 {
                    v.mul(h)
                } else {
                    *v
                }
            };
            seed.z_img.iter_mut().for_each(|v| *v = t(v));
            seed.x_img.iter_mut().for_each(|v| *v = t(v));
        }
        Ok(seed)
    }

    pub fn width(&self) -> usize {
        self.z_img.len()
    }

    pub fn z_image(&self, i: usize) -> PauliWord {
        self.z_img[i]
    }

    pub fn x_image(&self, i: usize) -> PauliWord {
        self.x_img[i]
    }

    /// U E U† modulo phase.
    pub fn apply(&self, e: &PauliWord) -> PauliWord {
        assert_eq!(e.len(), self.width(), "word length differs from seed width");
        (0..self.width()).fold(PauliWord::identity(self.width()), |acc, i| {
            let mut acc = acc;
            if (e.z_bits() >> i) & 1 == 1 {
                acc = acc.mul(&self.z_img[i]);
            }
            if (e.x_bits() >> i) & 1 == 1 {
                acc = acc.mul(&self.x_img[i]);
            }
            acc
        })
    }

    /// The binary matrix M_U whose rows are phi(g_1), phi(h_1), phi(g_2), ...
    /// so that phi(U E U†) = phi(E) M_U.
    pub fn m_u(&self) -> Vec<Vec<u8>> {
        self.z_img
            .iter()
            .zip(&self.x_img)
            .flat_map(|(g, h)| [g.phi(), h.phi()])
            .collect()
    }
}

/// Checks g_i * h_i = 1 and that every other pair of images commutes.
pub fn validate_clifford(seed: &CliffordSeed) -> CliffordReport {
    let w = seed.width();
    let mut report = CliffordReport::default();
    let name = |kind: char, i: usize| format!("{kind}{}", i + 1);
    let images: Vec<(String, PauliWord)> = (0..w)
        .flat_map(|i| [(name('Z', i), seed.z_img[i]), (name('X', i), seed.x_img[i])])
        .collect();
    for a in 0..images.len() {
        for b in a + 1..images.len() {
            let partners = a % 2 == 0 && b == a + 1;
            let want = u8::from(partners);
            let got = images[a].1.symplectic(&images[b].1);
            if got != want {
                report.violations.push(format!(
                    "images of {} ({}) and {} ({}) {}",
                    images[a].0,
                    images[a].1,
                    images[b].0,
                    images[b].1,
                    if got == 1 { "anticommute" } else { "commute" }
                ));
            }
        }
    }
    report
}
