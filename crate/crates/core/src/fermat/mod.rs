//! Group-ring models for the primitive (co)homology of Fermat hypersurfaces
//! and of their cyclic covers.
//!
//! For a fixed degree `d`, level `k` is the hypersurface of dimension `k`,
//! living in `R^(k+1)`:
//!
//! * `P_k`, the ideal generated by `phi_k`, models reduced homology of the
//!   affine part (rank `(d-1)^(k+1)`), with `mu_d` acting through `y_k`;
//! * `J_{k+1} = P_k ∩ R(1 - y_k)` models primitive cohomology;
//! * `P_k / J_k u_k` models primitive homology;
//! * multiplication by `1 - y_k` is the map from homology to cohomology.
//!
//! The cover of the level `n - 1` hypersurface `Z'` is the level `n`
//! hypersurface `Z`.

mod complex;
mod diagram;
mod ranks;
mod report;

pub use complex::{verify_complex, ComplexReport};
pub use diagram::{build_diagram, verify_main, CornerDims, DiagramInstance, MainReport, PlusVariant};
pub use ranks::{closed_form_rank, rank_table, HalfRankCheck, RankEntry, RankTable, PRINTED_HALF_RANKS};
pub use report::{verify_case, CaseReport, Suite, SUITE_KEYS};

use serde::Serialize;
use thiserror::Error;

use crate::gmodule::{EquivariantModule, ModuleError};
use crate::group_ring::{ideal_basis, norm_embedding, GroupRingElement, RingError, RingShape};
use crate::int::Int;
use crate::linalg::{AbelianInvariants, Certificate, IntMatrix, LinalgError, Quotient, QuotientMap, Submodule};

pub const DEFAULT_CAP: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FermatError {
    #[error("invalid case n={n}, d={d}: need n >= 1 and d >= 2")]
    InvalidCase { n: usize, d: usize },
    #[error("case n={n}, d={d} has ambient rank {ambient}, above the cap {cap}")]
    CapExceeded { n: usize, d: usize, ambient: usize, cap: usize },
    #[error("map `{0}` is not well defined ({1:?})")]
    Certificate(&'static str, Certificate),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FermatCase {
    pub n: usize,
    pub d: usize,
}

impl FermatCase {
    pub fn new(n: usize, d: usize, cap: usize) -> Result<Self, FermatError> {
        if n < 1 || d < 2 {
            return Err(FermatError::InvalidCase { n, d });
        }
        let ambient = d
            .checked_pow(n as u32 + 1)
            .ok_or(FermatError::CapExceeded { n, d, ambient: usize::MAX, cap })?;
        if ambient > cap {
            return Err(FermatError::CapExceeded { n, d, ambient, cap });
        }
        Ok(FermatCase { n, d })
    }

    pub fn ambient(&self) -> usize {
        self.d.pow(self.n as u32 + 1)
    }

    pub fn shape(&self) -> RingShape {
        RingShape::new(self.d, self.n + 1).expect("d >= 2")
    }

    pub fn is_even(&self) -> bool {
        self.n % 2 == 0
    }

    /// `p_k(d)` from the closed form.
    pub fn p(&self, k: isize) -> Int {
        closed_form_rank(self.d as i64, k)
    }
}

/// `1 - y_k` acting on `R^(k+1)`.
pub(crate) fn one_minus_y_matrix(d: usize, k: usize) -> IntMatrix {
    let s = RingShape::new(d, k + 1).expect("d >= 2");
    GroupRingElement::one_minus_y(s, k as isize).expect("k in range").mult_matrix()
}

pub(crate) fn y_matrix(d: usize, k: usize) -> IntMatrix {
    let s = RingShape::new(d, k + 1).expect("d >= 2");
    GroupRingElement::y(s, k as isize).expect("k in range").mult_matrix()
}

/// Lattices attached to one level.
#[derive(Clone, Debug)]
pub struct Level {
    pub k: usize,
    /// `P_k` in `Z^(d^(k+1))`.
    pub ideal: Submodule,
    /// `J_k u_k`, the invariant part of `P_k`.
    pub invariant_part: Submodule,
    /// `J_{k+1}`.
    pub cohomology: Submodule,
}

impl Level {
    pub fn homology(&self) -> Quotient {
        Quotient::new(self.ideal.clone(), self.invariant_part.clone()).expect("J u inside P")
    }
}

/// Levels `0..=top` for a fixed degree.
#[derive(Clone, Debug)]
pub struct Tower {
    pub d: usize,
    pub levels: Vec<Level>,
}

impl Tower {
    pub fn new(d: usize, top: usize) -> Result<Self, FermatError> {
        let mut levels = Vec::with_capacity(top + 1);
        // J_0 = 0 inside Z
        let mut j = Submodule::zero(1);
        for k in 0..=top {
            let shape = RingShape::new(d, k + 1)?;
            let ideal = ideal_basis(shape, &[GroupRingElement::phi(shape, k as isize)?])?;
            let invariant_part = j.image(&norm_embedding(d, k));
            // R(1 - y_k) is the annihilator of u_k
            let u = GroupRingElement::u(shape, k)?.mult_matrix();
            let cohomology = ideal.restrict_kernel(&u);
            j = cohomology.clone();
            levels.push(Level {
                k,
                ideal,
                invariant_part,
                cohomology,
            });
        }
        Ok(Tower { d, levels })
    }

    pub fn level(&self, k: usize) -> &Level {
        &self.levels[k]
    }
}

/// The ideal of `phi_n` with `mu_d` acting by `y_n`.
#[derive(Clone, Debug)]
pub struct PhamModule {
    pub case: FermatCase,
    pub module: EquivariantModule,
}

pub fn pham_module(case: FermatCase) -> Result<PhamModule, FermatError> {
    let shape = case.shape();
    let ideal = ideal_basis(shape, &[GroupRingElement::phi(shape, case.n as isize)?])?;
    pham_module_from(case, ideal)
}

fn pham_module_from(case: FermatCase, ideal: Submodule) -> Result<PhamModule, FermatError> {
    let amb = case.ambient();
    assert_eq!(
        ideal.rank(),
        (case.d - 1).pow(case.n as u32 + 1),
        "rank of the Pham module"
    );
    let module = EquivariantModule::new(case.d, ideal, Submodule::zero(amb), y_matrix(case.d, case.n))?;
    Ok(PhamModule { case, module })
}

impl PhamModule {
    pub fn rank(&self) -> usize {
        self.module.generators().rank()
    }

    /// Smallest `k > 0` with `g^k` trivial on the module.
    pub fn action_order(&self) -> usize {
        let basis = self.module.generators().basis();
        let mut moved = basis.clone();
        for k in 1..=self.case.d {
            moved = moved.mul(self.module.action());
            if moved == *basis {
                return k;
            }
        }
        unreachable!("action has order dividing d")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsReport {
    pub expected_rank: Int,
    pub fixed_rank: usize,
    pub ideal_rank: usize,
    pub equal: bool,
    /// The intersection route and the annihilator route give the same `J_n`.
    pub routes_agree: bool,
    pub passed: bool,
}

/// Fixed points of `y_n` on `P_n`, compared with `(R φ_{n-1} ∩ R(1 - y_{n-1})) u_n`.
pub fn invariants_two_ways(case: FermatCase, tower: &Tower) -> Result<InvariantsReport, FermatError> {
    let (n, d) = (case.n, case.d);
    let pham = pham_module_from(case, tower.level(n).ideal.clone())?;
    let fixed = pham.module.invariants().generators().clone();

    let below = RingShape::new(d, n)?;
    let phi = ideal_basis(below, &[GroupRingElement::phi(below, n as isize - 1)?])?;
    let kill = ideal_basis(below, &[GroupRingElement::one_minus_y(below, n as isize - 1)?])?;
    let meet = phi.intersect(&kill)?;
    let via_ideals = meet.image(&norm_embedding(d, n));

    let routes_agree = meet == tower.level(n - 1).cohomology;
    let expected_rank = case.p(n as isize - 1);
    let equal = fixed == via_ideals;
    let passed = equal && routes_agree && Int::from(fixed.rank()) == expected_rank;
    Ok(InvariantsReport {
        expected_rank,
        fixed_rank: fixed.rank(),
        ideal_rank: via_ideals.rank(),
        equal,
        routes_agree,
        passed,
    })
}

/// Models of `H^P(Z')`, `H_P(Z)` and the duality map on `H_P(Z)`.
#[derive(Clone, Debug)]
pub struct PrimitivePair {
    pub case: FermatCase,
    /// `J_n`, inside `Z^(d^n)`.
    pub cohomology_below: Submodule,
    /// `P_n / J_n u_n`.
    pub homology: Quotient,
    /// `J_{n+1}`.
    pub cohomology: Submodule,
    /// Multiplication by `1 - y_n` from `homology` to `cohomology`.
    pub duality: QuotientMap,
}

pub fn primitive_pair(case: FermatCase, tower: &Tower) -> Result<PrimitivePair, FermatError> {
    let top = tower.level(case.n);
    let homology = top.homology();
    let target = Quotient::free(top.cohomology.clone());
    let duality = QuotientMap::new(homology.clone(), target, one_minus_y_matrix(case.d, case.n))
        .map_err(|e| match e {
            LinalgError::NotWellDefined(c) => FermatError::Certificate("duality", c),
            other => other.into(),
        })?;
    let pair = PrimitivePair {
        case,
        cohomology_below: tower.level(case.n - 1).cohomology.clone(),
        homology,
        cohomology: top.cohomology.clone(),
        duality,
    };
    assert_eq!(Int::from(pair.cohomology_below.rank()), case.p(case.n as isize - 1));
    assert_eq!(Int::from(pair.homology.invariants().free_rank), case.p(case.n as isize));
    assert_eq!(Int::from(pair.cohomology.rank()), case.p(case.n as isize));
    Ok(pair)
}

#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub ambient: usize,
    pub ideal_rank: usize,
    pub expected_ideal_rank: Int,
    pub homology: AbelianInvariants,
    pub expected_homology_rank: Int,
    pub cohomology_below_rank: usize,
    /// `rank J_n + rank H_P = rank P_n`.
    pub sequence_ranks_add_up: bool,
    pub passed: bool,
}

pub fn verify_ranks(case: FermatCase, pair: &PrimitivePair) -> RankReport {
    let ideal_rank = pair.homology.lattice().rank();
    let expected_ideal_rank = Int::from(case.d - 1).pow(case.n as u32 + 1);
    let homology = pair.homology.invariants();
    let expected_homology_rank = case.p(case.n as isize);
    let sequence_ranks_add_up = pair.cohomology_below.rank() + homology.free_rank == ideal_rank;
    let passed = Int::from(ideal_rank) == expected_ideal_rank
        && homology.invariant_factors.is_empty()
        && Int::from(homology.free_rank) == expected_homology_rank
        && sequence_ranks_add_up;
    RankReport {
        ambient: case.ambient(),
        ideal_rank,
        expected_ideal_rank,
        homology,
        expected_homology_rank,
        cohomology_below_rank: pair.cohomology_below.rank(),
        sequence_ranks_add_up,
        passed,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub kernel: AbelianInvariants,
    pub cokernel: AbelianInvariants,
    /// Kernel and cokernel after tensoring with `Z/d`.
    pub kernel_mod_d: AbelianInvariants,
    pub cokernel_mod_d: AbelianInvariants,
    pub equivariant: bool,
    pub passed: bool,
}

/// Kernel and cokernel of the duality map, integrally and mod `d`.
pub fn verify_compare(case: FermatCase, pair: &PrimitivePair) -> Result<CompareReport, FermatError> {
    let map = &pair.duality;
    let kernel = map.kernel();
    let cokernel = map.cokernel();
    let dd = Int::from(case.d);
    let reduced = QuotientMap::new(
        map.source().reduce_mod(&dd),
        map.target().reduce_mod(&dd),
        map.matrix().clone(),
    )?;
    let kernel_mod_d = reduced.kernel();
    let cokernel_mod_d = reduced.cokernel();
    let y = y_matrix(case.d, case.n);
    let equivariant = y.mul(map.matrix()) == map.matrix().mul(&y);
    let cyclic = AbelianInvariants::cyclic(case.d as i64);
    let passed = equivariant
        && if case.is_even() {
            kernel_mod_d == cyclic && cokernel_mod_d == cyclic && cokernel == cyclic
        } else {
            kernel.is_trivial() && cokernel.is_trivial() && kernel_mod_d.is_trivial() && cokernel_mod_d.is_trivial()
        };
    Ok(CompareReport {
        kernel,
        cokernel,
        kernel_mod_d,
        cokernel_mod_d,
        equivariant,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CoprimeReport {
    /// `P_n ∩ R(1 - y_n) = P_n (1 - y_n)`.
    pub intersection_is_product: bool,
    /// Index of the product inside the intersection.
    pub product_index: Option<Int>,
    /// Annihilator of `1 - y_n` in `P_n` equals `J_n u_n`.
    pub annihilator_matches: bool,
    /// Only odd `n` is asserted.
    pub asserted: bool,
    pub passed: bool,
}

pub fn verify_coprime(case: FermatCase, tower: &Tower) -> CoprimeReport {
    let top = tower.level(case.n);
    let f = one_minus_y_matrix(case.d, case.n);
    let product = top.ideal.image(&f);
    let intersection_is_product = product == top.cohomology;
    let product_index = top
        .cohomology
        .quotient_invariants(&product)
        .ok()
        .and_then(|q| q.order());
    let annihilator_matches = top.ideal.restrict_kernel(&f) == top.invariant_part;
    let asserted = !case.is_even();
    let passed = !asserted || (intersection_is_product && annihilator_matches);
    CoprimeReport {
        intersection_is_product,
        product_index,
        annihilator_matches,
        asserted,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(n: usize, d: usize) -> FermatCase {
        FermatCase::new(n, d, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn case_validation() {
        assert!(matches!(FermatCase::new(0, 3, 1024), Err(FermatError::InvalidCase { .. })));
        assert!(matches!(FermatCase::new(2, 1, 1024), Err(FermatError::InvalidCase { .. })));
        assert!(matches!(
            FermatCase::new(5, 4, 1024),
            Err(FermatError::CapExceeded { ambient: 4096, .. })
        ));
        assert!(FermatCase::new(5, 4, 4096).is_ok());
    }

    #[test]
    fn pham_module_ranks() {
        let m = pham_module(case(1, 2)).unwrap();
        assert_eq!((m.rank(), m.module.ambient()), (1, 4));
        let m = pham_module(case(2, 3)).unwrap();
        assert_eq!((m.rank(), m.module.ambient()), (8, 27));
        assert!(y_matrix(3, 2).pow(3).is_identity());
        for (n, d) in [(1, 3), (2, 2), (2, 4), (3, 3)] {
            assert_eq!(pham_module(case(n, d)).unwrap().action_order(), d);
        }
    }

    #[test]
    fn fixed_points_two_ways() {
        for (n, d, rank) in [(1, 2, 1), (2, 3, 2), (3, 2, 1)] {
            let c = case(n, d);
            let t = Tower::new(d, n).unwrap();
            let r = invariants_two_ways(c, &t).unwrap();
            assert!(r.passed, "{r:?}");
            assert_eq!(r.fixed_rank, rank);
        }
    }

    #[test]
    fn primitive_pair_ranks() {
        for (n, d, rank) in [(3, 3, 10), (2, 3, 6), (4, 3, 22)] {
            let c = case(n, d);
            let t = Tower::new(d, n).unwrap();
            let pair = primitive_pair(c, &t).unwrap();
            assert_eq!(pair.homology.invariants().free_rank, rank);
            assert_eq!(pair.cohomology.rank(), rank);
        }
        assert_eq!(case(4, 3).ambient(), 243);
    }

    #[test]
    fn duality_kernel_and_cokernel() {
        let cyc = AbelianInvariants::cyclic;
        for (n, d) in [(3, 3), (2, 3), (2, 4), (2, 2), (1, 5)] {
            let c = case(n, d);
            let t = Tower::new(d, n).unwrap();
            let r = verify_compare(c, &primitive_pair(c, &t).unwrap()).unwrap();
            assert!(r.passed, "{n} {d} {r:?}");
            assert!(r.kernel.is_trivial());
            if c.is_even() {
                assert_eq!(r.kernel_mod_d, cyc(d as i64));
                assert_eq!(r.cokernel, cyc(d as i64));
            } else {
                assert!(r.cokernel.is_trivial());
            }
        }
    }

    #[test]
    fn product_ideal_for_odd_dimension() {
        for (n, d) in [(1, 3), (3, 2), (2, 3)] {
            let c = case(n, d);
            let t = Tower::new(d, n).unwrap();
            let r = verify_coprime(c, &t);
            assert!(r.annihilator_matches);
            assert_eq!(r.intersection_is_product, !c.is_even());
            if c.is_even() {
                assert_eq!(r.product_index, Some(Int::from(d)));
            }
        }
    }
}
