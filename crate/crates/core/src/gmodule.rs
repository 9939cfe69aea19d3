//! Modules over the group ring of a cyclic group `mu_d`, presented as
//! `A / B` inside some `Z^N` with a generator acting by an integer matrix.

use thiserror::Error;

use crate::int::Int;
use crate::linalg::{IntMatrix, LinalgError, Quotient, QuotientMap, Submodule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("action matrix does not have order dividing {0}")]
    ActionOrder(usize),
    #[error("action does not preserve the presentation")]
    NotInvariant,
    #[error("g^{0} does not generate mu_{1}")]
    NotAGenerator(usize, usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug)]
pub struct EquivariantModule {
    d: usize,
    presentation: Quotient,
    action: IntMatrix,
}

impl EquivariantModule {
    pub fn new(d: usize, generators: Submodule, relations: Submodule, action: IntMatrix) -> Result<Self, ModuleError> {
        let presentation = Quotient::new(generators, relations)?;
        let n = presentation.ambient();
        if action.nrows() != n || action.ncols() != n {
            return Err(LinalgError::DimensionMismatch {
                expected: n,
                found: action.nrows(),
            }
            .into());
        }
        if !action.pow(d as u32).is_identity() {
            return Err(ModuleError::ActionOrder(d));
        }
        let a = presentation.lattice();
        let b = presentation.relations();
        // g has finite order, so g(A) in A forces g(A) = A
        if !a.contains_module(&a.image(&action)) || !b.contains_module(&b.image(&action)) {
            return Err(ModuleError::NotInvariant);
        }
        Ok(EquivariantModule {
            d,
            presentation,
            action,
        })
    }

    /// The regular representation `Z mu_d`.
    pub fn regular(d: usize) -> Self {
        let g = cyclic_shift(d);
        Self::new(d, Submodule::full(d), Submodule::zero(d), g).expect("regular representation")
    }

    /// `Z` with trivial action.
    pub fn trivial(d: usize) -> Self {
        Self::new(d, Submodule::full(1), Submodule::zero(1), IntMatrix::identity(1)).expect("trivial module")
    }

    /// The augmentation ideal inside `Z mu_d`.
    pub fn augmentation_ideal(d: usize) -> Self {
        let gens = (1..d).map(|i| {
            let mut v = vec![Int::ZERO; d];
            v[0] = Int::from(-1i64);
            v[i] = Int::ONE;
            v
        });
        Self::new(d, Submodule::from_generators(d, gens), Submodule::zero(d), cyclic_shift(d))
            .expect("augmentation ideal")
    }

    pub fn order(&self) -> usize {
        self.d
    }

    pub fn presentation(&self) -> &Quotient {
        &self.presentation
    }

    pub fn generators(&self) -> &Submodule {
        self.presentation.lattice()
    }

    pub fn relations(&self) -> &Submodule {
        self.presentation.relations()
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    pub fn ambient(&self) -> usize {
        self.presentation.ambient()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.presentation.invariants().invariant_factors.is_empty()
    }

    fn g_minus_one(&self) -> IntMatrix {
        self.action.sub(&IntMatrix::identity(self.ambient()))
    }

    /// `sum_k g^k` as a matrix.
    pub fn norm_matrix(&self) -> IntMatrix {
        let n = self.ambient();
        let mut acc = IntMatrix::zeros(n, n);
        let mut p = IntMatrix::identity(n);
        for _ in 0..self.d {
            acc = acc.add(&p);
            p = p.mul(&self.action);
        }
        acc
    }

    /// Lattice `{x in A : x(g - 1) in B}`.
    fn invariant_lattice(&self) -> Submodule {
        self.generators().restrict_preimage(&self.g_minus_one(), self.relations())
    }

    /// `A (g - 1) + B`, the lattice of `IM`.
    fn augmented_lattice(&self) -> Submodule {
        self.generators()
            .image(&self.g_minus_one())
            .sum(self.relations())
            .expect("same ambient")
    }

    /// `M^G`.
    pub fn invariants(&self) -> EquivariantModule {
        EquivariantModule {
            d: self.d,
            presentation: Quotient::new(self.invariant_lattice(), self.relations().clone())
                .expect("relations are invariant"),
            action: self.action.clone(),
        }
    }

    /// `IM` as a submodule of `M`.
    pub fn augmented_submodule(&self) -> EquivariantModule {
        EquivariantModule {
            d: self.d,
            presentation: Quotient::new(self.augmented_lattice(), self.relations().clone())
                .expect("relations inside IM"),
            action: self.action.clone(),
        }
    }

    /// `M_G = M / IM` together with the projection `M -> M_G`.
    pub fn coinvariants(&self) -> QuotientMap {
        let target = Quotient::new(self.generators().clone(), self.augmented_lattice()).expect("IM inside A");
        QuotientMap::new(self.presentation.clone(), target, IntMatrix::identity(self.ambient()))
            .expect("projection is well defined")
    }

    /// `(M / M^G)_G -> Z/d (x) M^G`, induced by the norm `m -> sum_g g m`.
    pub fn r_map(&self) -> QuotientMap {
        let inv = self.invariant_lattice();
        let source_rel = inv.sum(&self.augmented_lattice()).expect("same ambient");
        let source = Quotient::new(self.generators().clone(), source_rel).expect("inside A");
        let target = Quotient::new(inv.clone(), self.relations().clone())
            .expect("relations invariant")
            .reduce_mod(&Int::from(self.d));
        QuotientMap::new(source, target, self.norm_matrix()).expect("norm map is well defined")
    }

    /// `Z/d (x) M_G -> (IM)_G`, `[m] -> [(g0 - 1) m]` with `g0 = g^k`.
    ///
    /// The identification `mu_d = Z/d` sends `g0` to `1`; `k` must be a unit
    /// mod `d`.
    pub fn s_map(&self, k: usize) -> Result<QuotientMap, ModuleError> {
        if num_integer::gcd(k, self.d) != 1 {
            return Err(ModuleError::NotAGenerator(k, self.d));
        }
        let n = self.ambient();
        let im = self.augmented_lattice();
        let source = self.coinvariants().target().reduce_mod(&Int::from(self.d));
        let target_rel = im.image(&self.g_minus_one()).sum(self.relations())?;
        let target = Quotient::new(im, target_rel)?;
        let g0 = self.action.pow((k % self.d) as u32);
        Ok(QuotientMap::new(source, target, g0.sub(&IntMatrix::identity(n)))?)
    }
}

/// Permutation matrix of `y` acting on `Z mu_d` (basis `1, y, ..., y^{d-1}`).
pub fn cyclic_shift(d: usize) -> IntMatrix {
    let mut g = IntMatrix::zeros(d, d);
    for i in 0..d {
        g[(i, (i + 1) % d)] = Int::ONE;
    }
    g
}
