//! State diagrams of EA-QCCs: one edge per element of the logical group.

use std::fmt::Write as _;

use crate::algebra::{PolyMatrix, Var, WeightPoly};
use crate::error::{Error, Result};
use crate::quantum::eaqcc::EaqccSpec;
use crate::quantum::pauli::{pauli_state_labels, PauliWord};

/// Largest memory size for which a diagram is drawn.
pub const MAX_DIAGRAM_MEMORY: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub logical: PauliWord,
    pub physical: PauliWord,
}

impl Edge {
    /// "L,P"; an empty logical part prints as "-".
    pub fn label(&self) -> String {
        let l = if self.logical.is_empty() {
            "-".to_string()
        } else {
            self.logical.to_string()
        };
        format!("{l},{}", self.physical)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateDiagram {
    pub labels: Vec<String>,
    pub edges: Vec<Edge>,
    n: usize,
}

/// Nodes are memory words; each element U(M ⊗ L ⊗ S^Z ⊗ I)U† gives an edge
/// M -> M' labelled by (L, P).
pub fn state_diagram(spec: &EaqccSpec) -> Result<StateDiagram> {
    if spec.m() > MAX_DIAGRAM_MEMORY {
        return Err(Error::Precondition(format!(
            "state diagrams are limited to m <= {MAX_DIAGRAM_MEMORY}, got m = {}",
            spec.m()
        )));
    }
    let roles = spec.roles();
    let mut edges = Vec::new();
    spec.for_each_in_group(&spec.logical_inputs(), |inp, out| {
        edges.push(Edge {
            from: inp.restrict(&roles.memory).state_index(),
            to: out.restrict(&roles.memory_out).state_index(),
            logical: inp.restrict(&roles.logical),
            physical: out.restrict(&roles.physical),
        });
    })?;
    edges.sort_by_key(|e| {
        (
            e.from,
            e.to,
            e.logical.state_index(),
            e.physical.state_index(),
        )
    });
    Ok(StateDiagram {
        labels: pauli_state_labels(spec.m()),
        edges,
        n: spec.n(),
    })
}

impl StateDiagram {
    /// The WAM of the edges accepted by `keep`.
    pub fn wam_where(&self, keep: impl Fn(&Edge) -> bool) -> PolyMatrix {
        let mut l = PolyMatrix::zeros(self.labels.clone());
        for e in self.edges.iter().filter(|e| keep(e)) {
            let w = e.physical.weight() as u16;
            *l.entry_mut(e.from, e.to) +=
                &WeightPoly::monomial(1, &[(Var::X, self.n as u16 - w), (Var::Y, w)]);
        }
        l
    }

    /// The WAM of the whole diagram.
    pub fn wam(&self) -> PolyMatrix {
        self.wam_where(|_| true)
    }

    /// The WAM of the edges carrying the identity logical operator.
    pub fn zero_logical_wam(&self) -> PolyMatrix {
        self.wam_where(|e| e.logical.is_identity())
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph state_diagram {\n");
        for l in &self.labels {
            let _ = writeln!(s, "  \"{l}\";");
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.labels[e.from],
                self.labels[e.to],
                e.label()
            );
        }
        s.push_str("}\n");
        s
    }

    /// One line per edge: "from -> to : L,P".
    pub fn render(&self) -> String {
        let mut s = String::new();
        for e in &self.edges {
            let _ = writeln!(
                s,
                "{} -> {} : {}",
                self.labels[e.from],
                self.labels[e.to],
                e.label()
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::clifford::CliffordSeed;
    use crate::quantum::eaqcc::tests::{u1, u2_qcc};
    use crate::quantum::eaqcc::{dual_spec, quantum_wam, Roles};

    #[test]
    fn u1_diagram_edges() {
        let d = state_diagram(&u1()).unwrap();
        assert_eq!(d.labels.len(), 4);
        assert_eq!(d.edges.len(), 16);
        let label = |from: &str, to: &str| -> Vec<String> {
            d.edges
                .iter()
                .filter(|e| d.labels[e.from] == from && d.labels[e.to] == to)
                .map(|e| e.label())
                .collect()
        };
        assert_eq!(label("I", "X"), vec!["Z,ZY"]);
        assert_eq!(label("I", "I"), vec!["I,II"]);
        assert_eq!(label("X", "Z"), vec!["X,XZ"]);
        assert_eq!(label("Z", "I"), vec!["Y,ZX"]);
        assert_eq!(d.wam(), quantum_wam(&u1()).unwrap());
        assert!(d.to_dot().contains("\"I\" -> \"X\" [label=\"Z,ZY\"];"));
    }

    #[test]
    fn qcc_zero_logical_edges_give_dual() {
        let spec = u2_qcc();
        let d = state_diagram(&spec).unwrap();
        assert_eq!(
            d.zero_logical_wam(),
            quantum_wam(&dual_spec(&spec)).unwrap()
        );
    }

    #[test]
    fn identity_seed_passes_memory_through() {
        // memory on qubit 1 goes straight to output memory on qubit 1
        let r = Roles {
            memory: vec![0],
            logical: vec![1],
            memory_out: vec![0],
            physical: vec![1],
            ..Roles::default()
        };
        let spec = EaqccSpec::new(CliffordSeed::identity(2), 1, 1, 0, 1, r).unwrap();
        let d = state_diagram(&spec).unwrap();
        assert_eq!(d.edges.len(), 16);
        assert!(d.edges.iter().all(|e| e.from == e.to));
    }
}
