//! Smith normal form and finitely generated abelian group invariants.

use serde::Serialize;

use super::hnf::hnf;
use super::matrix::IntMatrix;
use crate::int::Int;

/// Smith decomposition `u * m * v = d`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// The diagonal of `d` (length `min(rows, cols)`), zeros included.
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.d.nrows().min(self.d.ncols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

struct Work {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    // row_i -= q * row_t
    fn row_op(&mut self, i: usize, t: usize, q: &Int) {
        row_axpy(&mut self.a, i, t, q);
        if let Some(u) = &mut self.u {
            row_axpy(u, i, t, q);
        }
    }

    // col_j -= q * col_t
    fn col_op(&mut self, j: usize, t: usize, q: &Int) {
        col_axpy(&mut self.a, j, t, q);
        if let Some(v) = &mut self.v {
            col_axpy(v, j, t, q);
        }
    }

    fn negate_row(&mut self, t: usize) {
        let m1 = Int::from(-1i64);
        for x in self.a.row_mut(t) {
            *x = &*x * &m1;
        }
        if let Some(u) = &mut self.u {
            for x in u.row_mut(t) {
                *x = &*x * &m1;
            }
        }
    }
}

fn row_axpy(m: &mut IntMatrix, i: usize, t: usize, q: &Int) {
    let src = m.row(t).to_vec();
    for (d, s) in m.row_mut(i).iter_mut().zip(&src) {
        if !s.is_zero() {
            d.sub_mul(q, s);
        }
    }
}

fn col_axpy(m: &mut IntMatrix, j: usize, t: usize, q: &Int) {
    for r in 0..m.nrows() {
        let s = m[(r, t)].clone();
        if !s.is_zero() {
            m[(r, j)].sub_mul(q, &s);
        }
    }
}

/// Quotient rounded to the nearest integer (keeps remainders small).
fn round_div(a: &Int, b: &Int) -> Int {
    let (q, r) = a.div_mod_floor(b);
    // r has the sign of b; move to the symmetric range
    let twice = &r + &r;
    if twice.cmp_abs(b) == std::cmp::Ordering::Greater {
        if b.is_negative() == r.is_negative() {
            &q + &Int::ONE
        } else {
            &q - &Int::ONE
        }
    } else {
        q
    }
}

fn reduce(a: IntMatrix, track: bool) -> Smith {
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut w = Work {
        a,
        u: track.then(|| IntMatrix::identity(rows)),
        v: track.then(|| IntMatrix::identity(cols)),
    };
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // minimal nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &w.a[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if x.cmp_abs(&w.a[(bi, bj)]).is_ge() => {}
                        _ => best = Some((i, j)),
                    }
                    if x.abs().is_one() {
                        break;
                    }
                }
                if let Some((bi, bj)) = best {
                    if w.a[(bi, bj)].abs().is_one() {
                        break;
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(w);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let p = w.a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if !w.a[(i, t)].is_zero() {
                    let q = round_div(&w.a[(i, t)], &p);
                    w.row_op(i, t, &q);
                    dirty |= !w.a[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !w.a[(t, j)].is_zero() {
                    let q = round_div(&w.a[(t, j)], &p);
                    w.col_op(j, t, &q);
                    dirty |= !w.a[(t, j)].is_zero();
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !p.divides(&w.a[(i, j)])));
            match bad {
                Some(i) => {
                    let m1 = Int::from(-1i64);
                    w.row_op(t, i, &m1);
                }
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }
    finish(w)
}

fn finish(w: Work) -> Smith {
    let (rows, cols) = (w.a.nrows(), w.a.ncols());
    Smith {
        u: w.u.unwrap_or_else(|| IntMatrix::zeros(rows, rows)),
        d: w.a,
        v: w.v.unwrap_or_else(|| IntMatrix::zeros(cols, cols)),
    }
}

/// Smith normal form with unimodular transforms: `u * m * v = d`.
///
/// Pivoting picks a minimal-absolute-value nonzero entry, so the output is
/// deterministic for a given input.
pub fn snf(m: &IntMatrix) -> Smith {
    reduce(m.clone(), true)
}

/// Invariant factors (diagonal of the Smith form, zeros included), computed
/// without transforms after a Hermite pre-reduction.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<Int> {
    let h = hnf(m);
    let s = reduce(h, false);
    let mut diag = s.diagonal();
    diag.retain(|x| !x.is_zero());
    diag
}

/// Structure of a finitely generated abelian group: `Z^free_rank` plus
/// `Z/d_1 + ... + Z/d_k` with `1 < d_1 | d_2 | ... | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianInvariants {
    pub invariant_factors: Vec<Int>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn cyclic(d: i64) -> Self {
        AbelianInvariants::from_diagonal(&[Int::from(d)], 0)
    }

    /// From a Smith diagonal (any order of nonzero entries allowed, units dropped).
    pub fn from_diagonal(diag: &[Int], free_rank: usize) -> Self {
        let mut f: Vec<Int> = diag
            .iter()
            .map(Int::abs)
            .filter(|x| !x.is_zero() && !x.is_one())
            .collect();
        f.sort();
        AbelianInvariants {
            invariant_factors: f,
            free_rank,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the group, `None` if infinite.
    pub fn order(&self) -> Option<Int> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().cloned().product())
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() + self.free_rank <= 1
    }

    /// Number of cyclic summands (the minimal number of generators).
    pub fn num_generators(&self) -> usize {
        self.invariant_factors.len() + self.free_rank
    }

    /// Dimension over `F_p` of `G / pG`.
    pub fn dim_mod(&self, p: &Int) -> usize {
        self.free_rank + self.invariant_factors.iter().filter(|f| p.gcd(f) != Int::ONE).count()
    }

    /// True when the group is `(Z/p)^k` for the given prime `p`; returns `k`.
    pub fn elementary_rank(&self, p: &Int) -> Option<usize> {
        (self.free_rank == 0 && self.invariant_factors.iter().all(|f| f == p))
            .then_some(self.invariant_factors.len())
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let fs = &self.invariant_factors;
        let mut i = 0;
        while i < fs.len() {
            let run = fs[i..].iter().take_while(|x| **x == fs[i]).count();
            parts.push(if run == 1 {
                format!("Z/{}", fs[i])
            } else {
                format!("(Z/{})^{run}", fs[i])
            });
            i += run;
        }
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Structure of `Z^cols / rowspace(m)`.
pub fn cokernel_invariants(m: &IntMatrix) -> AbelianInvariants {
    cokernel_invariants_with_cols(m, m.ncols())
}

pub(crate) fn cokernel_invariants_with_cols(m: &IntMatrix, cols: usize) -> AbelianInvariants {
    if m.nrows() == 0 || cols == 0 {
        return AbelianInvariants::from_diagonal(&[], cols);
    }
    let diag = smith_diagonal(m);
    AbelianInvariants::from_diagonal(&diag, cols - diag.len())
}

/// Rank of `m` modulo `q` for `q` prime or a prime power: the number of
/// Smith invariants not divisible by `q`.
pub fn mod_p_rank(m: &IntMatrix, q: u64) -> usize {
    let q = Int::from(q);
    smith_diagonal(m).iter().filter(|x| !q.divides(x)).count()
}

/// Rank over `Q`.
pub fn rank(m: &IntMatrix) -> usize {
    hnf(m).nrows()
}
