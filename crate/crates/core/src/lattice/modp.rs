use serde::Serialize;

use super::{LatticeError, LatticeWithForm, Parity};
use crate::int::Int;
use crate::linalg::{is_prime, FpMatrix, IntMatrix};

/// `L / pL` modulo the radical of the reduced form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPQuotient {
    pub p: u64,
    pub dim: usize,
    pub radical_dim: usize,
    /// Rows span the radical.
    pub radical: Vec<Vec<u64>>,
    /// Rows are lattice vectors whose images form a basis of the quotient.
    pub complement: FpMatrix,
    pub quotient_gram: FpMatrix,
    /// `dim x quotient_dim`; a row vector times this gives quotient coordinates.
    pub projection: FpMatrix,
}

impl ModPQuotient {
    pub fn quotient_dim(&self) -> usize {
        self.dim - self.radical_dim
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.quotient_dim() == 0 || self.quotient_gram.det() != 0
    }

    /// Alternating: `x . x = 0` for every `x`.
    pub fn is_alternating(&self) -> bool {
        let g = &self.quotient_gram;
        let q = self.quotient_dim();
        let p = self.p;
        (0..q).all(|i| g.get(i, i) == 0 && (0..q).all(|j| (g.get(i, j) + g.get(j, i)) % p == 0))
    }

    pub fn project(&self, v: &[Int]) -> Vec<u64> {
        let row = FpMatrix::from_int(&IntMatrix::from_rows(v.len(), vec![v.to_vec()]), self.p);
        row.mul(&self.projection).row(0).to_vec()
    }

    /// Matrix on the quotient induced by an isometry `t` of the lattice.
    pub fn induced(&self, t: &IntMatrix) -> FpMatrix {
        self.complement
            .mul(&FpMatrix::from_int(t, self.p))
            .mul(&self.projection)
    }

    pub fn pair(&self, x: &[u64], y: &[u64]) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                acc = (acc + xi * self.quotient_gram.get(i, j) % p * yj) % p;
            }
        }
        acc
    }
}

pub fn mod_p_quotient(l: &LatticeWithForm, p: u64) -> Result<ModPQuotient, LatticeError> {
    if !is_prime(p) {
        return Err(LatticeError::NotPrime(p));
    }
    let r = l.rank();
    let g = FpMatrix::from_int(l.gram(), p);
    let radical = g.left_kernel();
    let q = r - radical.len();

    // extend the radical by standard vectors to a basis
    let mut complement: Vec<Vec<u64>> = Vec::new();
    for i in 0..r {
        if complement.len() == q {
            break;
        }
        let mut e = vec![0u64; r];
        e[i] = 1;
        let mut rows = complement.clone();
        rows.push(e.clone());
        rows.extend(radical.iter().cloned());
        if FpMatrix::from_rows(p, r, &rows).rank() == rows.len() {
            complement.push(e);
        }
    }
    let mut basis = complement.clone();
    basis.extend(radical.iter().cloned());
    let inv = FpMatrix::from_rows(p, r, &basis)
        .inverse()
        .expect("complement and radical form a basis");
    let mut projection = FpMatrix::zeros(p, r, q);
    for i in 0..r {
        for j in 0..q {
            projection.set(i, j, inv.get(i, j));
        }
    }
    let c = FpMatrix::from_rows(p, r, &complement);
    let quotient_gram = c.mul(&g).mul(&c.transpose());
    Ok(ModPQuotient {
        p,
        dim: r,
        radical_dim: radical.len(),
        radical,
        complement: c,
        quotient_gram,
        projection,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuadraticRefinement {
    /// `q(x) = x . x / 2`.
    Integral {
        basis_values: Vec<Int>,
        vanishing_values: Vec<Int>,
        expected: i64,
        matches: bool,
    },
    /// `q(sum x_i e_i) = sum x_i q_i + sum_{i<j} x_i x_j (e_i . e_j)` over `F_2`.
    Mod2 {
        basis_values: Vec<u8>,
        #[serde(skip)]
        gram: Vec<Vec<u8>>,
    },
}

impl QuadraticRefinement {
    /// Value of the `F_2` form; `None` for the integral variant.
    pub fn eval_mod2(&self, x: &[u8]) -> Option<u8> {
        match self {
            QuadraticRefinement::Mod2 { basis_values, gram } => {
                let mut acc = 0u8;
                for i in 0..x.len() {
                    acc ^= x[i] & basis_values[i];
                    for j in i + 1..x.len() {
                        acc ^= x[i] & x[j] & gram[i][j];
                    }
                }
                Some(acc)
            }
            QuadraticRefinement::Integral { .. } => None,
        }
    }
}

/// Odd `n`: the even symmetric form halved, checked against
/// `(-1)^((n-1)(n-2)/2)` on the vanishing vectors. Even `n`: an `F_2`
/// refinement of the form mod 2 taking the value 1 on every vanishing vector.
pub fn quadratic_refinement(l: &LatticeWithForm, n: usize) -> Result<QuadraticRefinement, LatticeError> {
    if !l.is_even() {
        return Err(LatticeError::NotEven);
    }
    let r = l.rank();
    if n % 2 == 1 {
        if l.parity() != Parity::Symmetric {
            return Err(LatticeError::ParityMismatch(Parity::Symmetric));
        }
        let two = Int::from(2i64);
        let q = |v: &[Int]| l.pair(v, v).div_exact(&two);
        let basis_values = (0..r).map(|i| l.gram()[(i, i)].div_exact(&two)).collect();
        let vanishing_values: Vec<Int> = l.vanishing().iter().map(|v| q(v)).collect();
        let k = (n as i64 - 1) * (n as i64 - 2) / 2;
        let expected = if k % 2 == 0 { 1 } else { -1 };
        let matches = vanishing_values.iter().all(|v| *v == Int::from(expected));
        return Ok(QuadraticRefinement::Integral {
            basis_values,
            vanishing_values,
            expected,
            matches,
        });
    }

    let gram: Vec<Vec<u8>> = (0..r)
        .map(|i| (0..r).map(|j| l.gram()[(i, j)].mod_u64(2) as u8).collect())
        .collect();
    // unknowns q_i; one equation per vanishing vector, augmented column last
    let rows: Vec<Vec<u64>> = l
        .vanishing()
        .iter()
        .map(|v| {
            let x: Vec<u8> = v.iter().map(|c| c.mod_u64(2) as u8).collect();
            let mut rhs = 1u8;
            for i in 0..r {
                for j in i + 1..r {
                    rhs ^= x[i] & x[j] & gram[i][j];
                }
            }
            let mut row: Vec<u64> = x.iter().map(|&b| b as u64).collect();
            row.push(rhs as u64);
            row
        })
        .collect();
    let mut aug = FpMatrix::from_rows(2, r + 1, &rows);
    let pivots = aug.rref();
    if pivots.contains(&r) {
        return Err(LatticeError::Infeasible);
    }
    let mut basis_values = vec![0u8; r];
    for (row, &c) in pivots.iter().enumerate() {
        basis_values[c] = aug.get(row, r) as u8;
    }
    Ok(QuadraticRefinement::Mod2 { basis_values, gram })
}
