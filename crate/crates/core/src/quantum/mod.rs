//! Pauli and symplectic algebra, Clifford seeds and EA-QCC enumerators.

pub mod check;
pub mod clifford;
pub mod diagram;
pub mod eaqcc;
pub mod pauli;

pub use check::{poly_check_matrix, CommutationReport, PauliSeries, PolyCheckMatrix};
pub use clifford::{validate_clifford, CliffordReport, CliffordSeed};
pub use diagram::{state_diagram, Edge, StateDiagram};
pub use eaqcc::{
    constraint_stabilizers, dual_spec, pauli_fourier, quantum_dual_wam, quantum_macwilliams,
    quantum_wam, EaqccSpec, Roles,
};
pub use pauli::{pauli_state_labels, symplectic_product, PauliWord};
