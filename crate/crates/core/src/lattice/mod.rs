//! Lattices with a symmetric or alternating integral form, root lattices and
//! the monodromy-type transformations acting on them.

mod modp;
mod report;
mod transform;
mod weyl;

pub use report::{lattice_report, LatticeReport, Which, LATTICE_KEYS};
pub use modp::{mod_p_quotient, quadratic_refinement, ModPQuotient, QuadraticRefinement};
pub use transform::{matrix_order, pham_reflection, pham_sign, pl_sign, pl_transvection, HermitianModule};
pub use weyl::{symplectic_group_order, weyl_image_order, WeylOrders, DEFAULT_ENUMERATION_CAP};

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::int::Int;
use crate::linalg::{bilinear, cokernel_invariants, AbelianInvariants, IntMatrix, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("gram matrix is not {0:?}")]
    ParityMismatch(Parity),
    #[error("form is not even")]
    NotEven,
    #[error("{0}")]
    Precondition(String),
    #[error("no quadratic refinement takes the required values")]
    Infeasible,
    #[error("enumeration exceeded {0} elements")]
    EnumerationCap(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Symmetric,
    Antisymmetric,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeWithForm {
    gram: IntMatrix,
    parity: Parity,
    vanishing: Vec<Vec<Int>>,
}

impl LatticeWithForm {
    pub fn new(gram: IntMatrix, parity: Parity) -> Result<Self, LatticeError> {
        let ok = gram.nrows() == gram.ncols()
            && match parity {
                Parity::Symmetric => gram.is_symmetric(),
                Parity::Antisymmetric => gram.is_antisymmetric(),
            };
        if !ok {
            return Err(LatticeError::ParityMismatch(parity));
        }
        Ok(LatticeWithForm {
            gram,
            parity,
            vanishing: Vec::new(),
        })
    }

    pub fn with_vanishing(mut self, vectors: Vec<Vec<Int>>) -> Self {
        assert!(vectors.iter().all(|v| v.len() == self.rank()));
        self.vanishing = vectors;
        self
    }

    pub fn rank(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn vanishing(&self) -> &[Vec<Int>] {
        &self.vanishing
    }

    pub fn pair(&self, x: &[Int], y: &[Int]) -> Int {
        bilinear(x, &self.gram, y)
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| Int::from(2i64).divides(&self.gram[(i, i)]))
    }

    pub fn discriminant_group(&self) -> AbelianInvariants {
        cokernel_invariants(&self.gram)
    }

    /// `T` preserves the form: `T G T^t = G`.
    pub fn preserved_by(&self, t: &IntMatrix) -> bool {
        t.mul(&self.gram).mul(&t.transpose()) == self.gram
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootType {
    A(usize),
    E6,
    E7,
}

/// Edges of the Dynkin diagram, 1-based, Bourbaki numbering for `E`.
fn dynkin_edges(t: RootType) -> (usize, Vec<(usize, usize)>) {
    match t {
        RootType::A(n) => (n, (1..n).map(|i| (i, i + 1)).collect()),
        RootType::E6 => (6, vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]),
        RootType::E7 => (7, vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)]),
    }
}

pub fn cartan_matrix(t: RootType) -> IntMatrix {
    let (n, edges) = dynkin_edges(t);
    let mut c = IntMatrix::scalar(n, &Int::from(2i64));
    for (a, b) in edges {
        c[(a - 1, b - 1)] = Int::from(-1i64);
        c[(b - 1, a - 1)] = Int::from(-1i64);
    }
    c
}

/// Root lattice with gram `sign * Cartan`, simple roots as the standard basis
/// and the simple roots as vanishing vectors.
pub fn root_lattice(t: RootType, sign: i64) -> LatticeWithForm {
    assert!(sign == 1 || sign == -1);
    let g = cartan_matrix(t).scale(&Int::from(sign));
    let n = g.nrows();
    let simple = IntMatrix::identity(n).to_rows();
    LatticeWithForm::new(g, Parity::Symmetric)
        .expect("Cartan matrices of simply laced types are symmetric")
        .with_vanishing(simple)
}

/// Matrix of the reflection in the `i`-th basis vector of a root lattice.
pub fn simple_reflection(l: &LatticeWithForm, i: usize) -> IntMatrix {
    let g = l.gram();
    let two = Int::from(2i64);
    let gii = &g[(i, i)];
    let mut s = IntMatrix::identity(l.rank());
    for j in 0..l.rank() {
        // e_j -> e_j - 2 (e_j, e_i) / (e_i, e_i) e_i
        let c = (&g[(j, i)] * &two).div_exact(gii);
        s[(j, i)] -= &c;
    }
    s
}

/// All roots, as the orbit of the simple roots under simple reflections.
pub fn roots(l: &LatticeWithForm) -> Vec<Vec<Int>> {
    let refl: Vec<IntMatrix> = (0..l.rank()).map(|i| simple_reflection(l, i)).collect();
    let mut seen: BTreeSet<Vec<Int>> = l.vanishing().iter().cloned().collect();
    let mut queue: VecDeque<Vec<Int>> = seen.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for s in &refl {
            let w = s.apply(&v);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().collect()
}
