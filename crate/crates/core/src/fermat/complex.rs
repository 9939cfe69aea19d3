//! The complex over the strata of a flag, built from the levels
//! `P_n, P_{n-1}, ..., P_0` with differential
//! `x -> x (1 - y_N) u_{N+1}` from level `N` to level `N + 1`.
//!
//! Degree `k` holds level `n - k`. The augmentation onto `H_P` at level `n`
//! has kernel `J_n u_n` in degree 0.

use serde::Serialize;

use super::{one_minus_y_matrix, FermatCase, FermatError, Tower};
use crate::group_ring::norm_embedding;
use crate::int::Int;
use crate::linalg::{AbelianInvariants, IntMatrix, Submodule};

#[derive(Clone, Debug, Serialize)]
pub struct ComplexReport {
    /// Ranks of the kernel complex, degree 0 first.
    pub ranks: Vec<usize>,
    pub squares_to_zero: bool,
    /// Every differential lands in the next term.
    pub well_defined: bool,
    pub homology: Vec<AbelianInvariants>,
    pub homology_mod_d: Vec<AbelianInvariants>,
    /// Degrees whose homology differs from `Z/d` (below `n`) or `0` (at `n`).
    pub unexpected_degrees: Vec<usize>,
    pub passed: bool,
}

/// Differential out of level `level`.
fn differential(d: usize, level: usize) -> IntMatrix {
    one_minus_y_matrix(d, level).mul(&norm_embedding(d, level + 1))
}

pub fn verify_complex(case: FermatCase, tower: &Tower) -> Result<ComplexReport, FermatError> {
    let (n, d) = (case.n, case.d);
    let dd = Int::from(d);
    // terms[k] is the degree-k term of the kernel complex
    let terms: Vec<Submodule> = (0..=n)
        .map(|k| {
            let lvl = tower.level(n - k);
            if k == 0 {
                lvl.invariant_part.clone()
            } else {
                lvl.ideal.clone()
            }
        })
        .collect();
    // diffs[k] maps degree k to degree k - 1, for k >= 1
    let diffs: Vec<Option<IntMatrix>> = (0..=n)
        .map(|k| (k > 0).then(|| differential(d, n - k)))
        .collect();

    let mut squares_to_zero = true;
    let mut well_defined = true;
    for k in 1..=n {
        let dk = diffs[k].as_ref().expect("k >= 1");
        well_defined &= terms[k - 1].contains_module(&terms[k].image(dk));
        if k >= 2 {
            squares_to_zero &= dk.mul(diffs[k - 1].as_ref().expect("k >= 1")).is_zero();
        }
    }

    let mut homology = Vec::with_capacity(n + 1);
    let mut homology_mod_d = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let amb = terms[k].ambient();
        let (cycles, cycles_mod) = match &diffs[k] {
            None => (terms[k].clone(), terms[k].clone()),
            Some(dk) => (
                terms[k].restrict_kernel(dk),
                terms[k].restrict_preimage(dk, &terms[k - 1].scale(&dd)),
            ),
        };
        let boundaries = match diffs.get(k + 1) {
            Some(Some(next)) => terms[k + 1].image(next),
            _ => Submodule::zero(amb),
        };
        homology.push(cycles.quotient_invariants(&boundaries)?);
        let boundaries_mod = boundaries.sum(&terms[k].scale(&dd))?;
        homology_mod_d.push(cycles_mod.quotient_invariants(&boundaries_mod)?);
    }

    let cyclic = AbelianInvariants::cyclic(d as i64);
    let unexpected_degrees: Vec<usize> = homology
        .iter()
        .enumerate()
        .filter(|(k, h)| if *k < n { **h != cyclic } else { !h.is_trivial() })
        .map(|(k, _)| k)
        .collect();
    let passed = squares_to_zero && well_defined && unexpected_degrees.is_empty();
    Ok(ComplexReport {
        ranks: terms.iter().map(Submodule::rank).collect(),
        squares_to_zero,
        well_defined,
        homology,
        homology_mod_d,
        unexpected_degrees,
        passed,
    })
}
