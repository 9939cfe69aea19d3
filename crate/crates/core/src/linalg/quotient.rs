//! Subquotients `L / N` of a free module and maps between them.
//!
//! Maps are given by an ambient integer matrix (acting on row vectors) that
//! carries the source lattice into the target lattice and the source
//! relations into the target relations. That inclusion pair is the
//! well-definedness certificate and is checked at construction.

use serde::Serialize;

use super::hnf::{Solver, Submodule};
use super::matrix::IntMatrix;
use super::snf::AbelianInvariants;
use super::LinalgError;
use crate::int::Int;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    lattice: Submodule,
    relations: Submodule,
}

impl Quotient {
    pub fn new(lattice: Submodule, relations: Submodule) -> Result<Self, LinalgError> {
        if !lattice.contains_module(&relations) {
            return Err(LinalgError::NotASubmodule);
        }
        Ok(Quotient { lattice, relations })
    }

    /// `L / 0`.
    pub fn free(lattice: Submodule) -> Self {
        let amb = lattice.ambient();
        Quotient {
            lattice,
            relations: Submodule::zero(amb),
        }
    }

    pub fn lattice(&self) -> &Submodule {
        &self.lattice
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    pub fn ambient(&self) -> usize {
        self.lattice.ambient()
    }

    pub fn invariants(&self) -> AbelianInvariants {
        self.lattice
            .quotient_invariants(&self.relations)
            .expect("relations contained in lattice")
    }

    pub fn is_zero_class(&self, v: &[Int]) -> bool {
        self.relations.contains(v)
    }

    pub fn same_class(&self, a: &[Int], b: &[Int]) -> bool {
        let diff: Vec<Int> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_zero_class(&diff)
    }

    /// `L / (N + kL)`, i.e. `Z/k (x) (L/N)`.
    pub fn reduce_mod(&self, k: &Int) -> Quotient {
        let rel = self
            .relations
            .sum(&self.lattice.scale(k))
            .expect("same ambient");
        Quotient {
            lattice: self.lattice.clone(),
            relations: rel,
        }
    }

    /// `L / (N + extra)` for `extra` inside `L`.
    pub fn with_extra_relations(&self, extra: &Submodule) -> Result<Quotient, LinalgError> {
        Quotient::new(self.lattice.clone(), self.relations.sum(extra)?)
    }
}

/// Which half of the well-definedness certificate holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub lattice_into_lattice: bool,
    pub relations_into_relations: bool,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.lattice_into_lattice && self.relations_into_relations
    }
}

#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: Quotient,
    target: Quotient,
    matrix: IntMatrix,
    certificate: Certificate,
}

impl QuotientMap {
    /// Build the induced map, failing when the certificate does not hold.
    pub fn new(source: Quotient, target: Quotient, matrix: IntMatrix) -> Result<Self, LinalgError> {
        let m = Self::unchecked(source, target, matrix)?;
        if !m.certificate.holds() {
            return Err(LinalgError::NotWellDefined(m.certificate));
        }
        Ok(m)
    }

    /// Build without insisting on well-definedness; the certificate is still
    /// computed and can be inspected.
    pub fn unchecked(source: Quotient, target: Quotient, matrix: IntMatrix) -> Result<Self, LinalgError> {
        if matrix.nrows() != source.ambient() || matrix.ncols() != target.ambient() {
            return Err(LinalgError::DimensionMismatch {
                expected: source.ambient(),
                found: matrix.nrows(),
            });
        }
        let lattice_into_lattice = source
            .lattice
            .generators()
            .all(|g| target.lattice.contains(&matrix.apply(g)));
        let relations_into_relations = source
            .relations
            .generators()
            .all(|g| target.relations.contains(&matrix.apply(g)));
        Ok(QuotientMap {
            source,
            target,
            matrix,
            certificate: Certificate {
                lattice_into_lattice,
                relations_into_relations,
            },
        })
    }

    pub fn source(&self) -> &Quotient {
        &self.source
    }

    pub fn target(&self) -> &Quotient {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn certificate(&self) -> Certificate {
        self.certificate
    }

    pub fn apply(&self, v: &[Int]) -> Vec<Int> {
        self.matrix.apply(v)
    }

    /// Image lattice `L_src * F + N_tgt`.
    pub fn image_lattice(&self) -> Submodule {
        self.source
            .lattice
            .image(&self.matrix)
            .sum(&self.target.relations)
            .expect("same ambient")
    }

    pub fn image(&self) -> AbelianInvariants {
        self.image_lattice()
            .quotient_invariants(&self.target.relations)
            .expect("relations inside image")
    }

    pub fn cokernel(&self) -> AbelianInvariants {
        self.target
            .lattice
            .quotient_invariants(&self.image_lattice())
            .expect("image inside target lattice")
    }

    /// `{x in L_src : x F in N_tgt}`.
    pub fn kernel_lattice(&self) -> Submodule {
        self.source
            .lattice
            .restrict_preimage(&self.matrix, &self.target.relations)
    }

    pub fn kernel(&self) -> AbelianInvariants {
        self.kernel_lattice()
            .quotient_invariants(&self.source.relations)
            .expect("relations inside kernel")
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Composite `next . self`.
    pub fn then(&self, next: &QuotientMap) -> Result<QuotientMap, LinalgError> {
        QuotientMap::new(
            self.source.clone(),
            next.target.clone(),
            self.matrix.mul(&next.matrix),
        )
    }

    /// Preimage finder: for a class in the target, a representative in the
    /// source lattice mapping onto it.
    pub fn lifter(&self) -> Lifter {
        let img = self.source.lattice.basis().mul(&self.matrix);
        let stacked = img.vstack(self.target.relations.basis());
        Lifter {
            solver: Solver::new(&stacked),
            source_basis: self.source.lattice.basis().clone(),
        }
    }

    /// True if `self` and `other` induce the same map on classes.
    pub fn agrees_with(&self, other: &QuotientMap) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.source.lattice.generators().all(|g| {
                self.target.same_class(&self.apply(g), &other.apply(g))
            })
    }
}

pub struct Lifter {
    solver: Solver,
    source_basis: IntMatrix,
}

impl Lifter {
    pub fn lift(&self, t: &[Int]) -> Option<Vec<Int>> {
        let y = self.solver.solve(t)?;
        let r = self.source_basis.nrows();
        Some(self.source_basis.apply(&y[..r]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::vec_from_i64;

    fn sub(amb: usize, rows: &[Vec<i64>]) -> Submodule {
        Submodule::from_generators(amb, rows.iter().map(|r| vec_from_i64(r)))
    }

    #[test]
    fn multiplication_by_two_on_z_mod_4() {
        let z = Submodule::full(1);
        let q = Quotient::new(z.clone(), sub(1, &[vec![4]])).unwrap();
        let f = QuotientMap::new(q.clone(), q.clone(), IntMatrix::from_i64(&[vec![2]])).unwrap();
        assert_eq!(f.kernel(), AbelianInvariants::cyclic(2));
        assert_eq!(f.cokernel(), AbelianInvariants::cyclic(2));
        assert_eq!(f.image(), AbelianInvariants::cyclic(2));
        let lift = f.lifter();
        assert!(lift.lift(&vec_from_i64(&[1])).is_none());
        let x = lift.lift(&vec_from_i64(&[6])).unwrap();
        assert!(q.same_class(&f.apply(&x), &vec_from_i64(&[6])));
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        let q4 = Quotient::new(Submodule::full(1), sub(1, &[vec![4]])).unwrap();
        let q3 = Quotient::new(Submodule::full(1), sub(1, &[vec![3]])).unwrap();
        let err = QuotientMap::new(q4, q3, IntMatrix::identity(1)).unwrap_err();
        assert!(matches!(err, LinalgError::NotWellDefined(c) if !c.relations_into_relations));
    }
}
