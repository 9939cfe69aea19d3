//! Row-style Hermite normal form and the [`Submodule`] type built on it.

use serde::Serialize;

use super::matrix::{is_zero_vec, IntMatrix};
use super::LinalgError;
use crate::int::Int;

/// Incremental row echelon basis of a subgroup of `Z^cols`.
///
/// Rows are kept sorted by pivot column. Insertion performs exact gcd
/// elimination; [`Echelon::finish`] normalizes to the canonical Hermite form
/// (positive pivots, entries above each pivot reduced into `[0, pivot)`).
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    cols: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<Int>>,
}

fn axpy_from(dst: &mut [Int], q: &Int, src: &[Int], start: usize) {
    // dst -= q * src on columns >= start
    for (d, s) in dst[start..].iter_mut().zip(&src[start..]) {
        if !s.is_zero() {
            d.sub_mul(q, s);
        }
    }
}

fn negate(v: &mut [Int]) {
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = -&*x;
        }
    }
}

impl Echelon {
    pub(crate) fn new(cols: usize) -> Self {
        Echelon {
            cols,
            pivots: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub(crate) fn insert(&mut self, mut v: Vec<Int>) {
        debug_assert_eq!(v.len(), self.cols);
        let mut from = 0;
        loop {
            let lead = match v[from..].iter().position(|x| !x.is_zero()) {
                Some(p) => from + p,
                None => return,
            };
            match self.pivots.binary_search(&lead) {
                Err(pos) => {
                    if v[lead].is_negative() {
                        negate(&mut v);
                    }
                    self.pivots.insert(pos, lead);
                    self.rows.insert(pos, v);
                    return;
                }
                Ok(pos) => {
                    let b = &mut self.rows[pos];
                    let (bp, vp) = (b[lead].clone(), v[lead].clone());
                    if bp.divides(&vp) {
                        let q = vp.div_exact(&bp);
                        axpy_from(&mut v, &q, b, lead);
                    } else {
                        let (g, s, t) = Int::ext_gcd(&bp, &vp);
                        let bq = bp.div_exact(&g);
                        let vq = vp.div_exact(&g);
                        let mut nb = vec![Int::ZERO; self.cols];
                        let mut nv = vec![Int::ZERO; self.cols];
                        for j in lead..self.cols {
                            let (x, y) = (&b[j], &v[j]);
                            let mut a = Int::ZERO;
                            a.add_mul(&s, x);
                            a.add_mul(&t, y);
                            nb[j] = a;
                            let mut c = Int::ZERO;
                            c.add_mul(&vq, x);
                            c.sub_mul(&bq, y);
                            nv[j] = c;
                        }
                        *b = nb;
                        v = nv;
                    }
                    from = lead + 1;
                }
            }
        }
    }

    /// Canonical Hermite form as a matrix (rows sorted by pivot column).
    pub(crate) fn finish(mut self) -> IntMatrix {
        let r = self.rows.len();
        for j in 0..r {
            let c = self.pivots[j];
            if self.rows[j][c].is_negative() {
                negate(&mut self.rows[j]);
            }
            let (head, tail) = self.rows.split_at_mut(j);
            let pivot_row = &tail[0];
            let p = &pivot_row[c];
            for row in head.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(p);
                if !q.is_zero() {
                    axpy_from(row, &q, pivot_row, c);
                }
            }
        }
        IntMatrix::from_rows(self.cols, self.rows)
    }
}

/// Hermite normal form of the row space of `m` (zero rows dropped).
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let mut e = Echelon::new(m.ncols());
    for r in m.rows_iter() {
        e.insert(r.to_vec());
    }
    e.finish()
}

/// Pivot column of each row of a matrix already in echelon form.
fn pivot_columns(h: &IntMatrix) -> Vec<usize> {
    h.rows_iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("zero row in echelon form"))
        .collect()
}

/// Solve `y * h = b` for `h` in row echelon form with no zero rows.
fn echelon_solve(h: &IntMatrix, pivots: &[usize], b: &[Int]) -> Option<Vec<Int>> {
    let mut res = b.to_vec();
    let mut y = Vec::with_capacity(h.nrows());
    for (i, &c) in pivots.iter().enumerate() {
        // columns left of this pivot are already final
        if res[..c].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let row = h.row(i);
        let (q, r) = res[c].div_mod_floor(&row[c]);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            axpy_from(&mut res, &q, row, c);
        }
        y.push(q);
    }
    if is_zero_vec(&res) {
        Some(y)
    } else {
        None
    }
}

/// Row echelon form together with a unimodular transform.
///
/// Returns `(h, u)` where `u` is square and unimodular, `u * m` has the rows
/// of `h` on top followed by zero rows, and the bottom rows of `u` span the
/// left kernel of `m`.
pub fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let r = m.nrows();
    let c = m.ncols();
    let aug = m.hstack(&IntMatrix::identity(r));
    let full = hnf(&aug);
    debug_assert_eq!(full.nrows(), r);
    let left = full.column_slice(0, c);
    let rank = left.rows_iter().take_while(|row| !is_zero_vec(row)).count();
    let h = left.select_rows(&(0..rank).collect::<Vec<_>>());
    let u = full.column_slice(c, c + r);
    (h, u)
}

/// Integer solution of `x * m = b`, if one exists.
pub fn solve(m: &IntMatrix, b: &[Int]) -> Result<Option<Vec<Int>>, LinalgError> {
    if b.len() != m.ncols() {
        return Err(LinalgError::DimensionMismatch {
            expected: m.ncols(),
            found: b.len(),
        });
    }
    let (h, u) = hnf_with_transform(m);
    let piv = pivot_columns(&h);
    Ok(echelon_solve(&h, &piv, b).map(|y| {
        let top = u.select_rows(&(0..y.len()).collect::<Vec<_>>());
        top.apply(&y)
    }))
}

/// Precomputed transform for repeated solves of `x * m = b`.
#[derive(Clone, Debug)]
pub struct Solver {
    h: IntMatrix,
    pivots: Vec<usize>,
    top: IntMatrix,
}

impl Solver {
    pub fn new(m: &IntMatrix) -> Self {
        let (h, u) = hnf_with_transform(m);
        let pivots = pivot_columns(&h);
        let top = u.select_rows(&(0..h.nrows()).collect::<Vec<_>>());
        Solver { h, pivots, top }
    }

    pub fn solve(&self, b: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(b.len(), self.h.ncols());
        echelon_solve(&self.h, &self.pivots, b).map(|y| self.top.apply(&y))
    }
}

/// Left kernel `{x : x * m = 0}` as a saturated submodule of `Z^rows`.
pub fn kernel_basis(m: &IntMatrix) -> Submodule {
    let r = m.nrows();
    let c = m.ncols();
    let full = hnf(&m.hstack(&IntMatrix::identity(r)));
    let gens: Vec<Vec<Int>> = full
        .rows_iter()
        .filter(|row| is_zero_vec(&row[..c]))
        .map(|row| row[c..].to_vec())
        .collect();
    Submodule::from_generators(r, gens)
}

/// A finitely generated subgroup of `Z^ambient`, stored by its canonical
/// Hermite basis. Two submodules are equal as subgroups iff they compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Submodule {
    ambient: usize,
    basis: IntMatrix,
}

impl std::fmt::Debug for Submodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Submodule(rank {} in Z^{}) {:?}", self.rank(), self.ambient, self.basis)
    }
}

impl Submodule {
    pub fn zero(ambient: usize) -> Self {
        Submodule {
            ambient,
            basis: IntMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Submodule {
            ambient,
            basis: IntMatrix::identity(ambient),
        }
    }

    pub fn from_generators<I>(ambient: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = Vec<Int>>,
    {
        let mut e = Echelon::new(ambient);
        for g in gens {
            assert_eq!(g.len(), ambient, "generator length mismatch");
            e.insert(g);
        }
        Submodule {
            ambient,
            basis: e.finish(),
        }
    }

    pub fn from_matrix(m: &IntMatrix) -> Self {
        Submodule {
            ambient: m.ncols(),
            basis: hnf(m),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn generators(&self) -> impl Iterator<Item = &[Int]> {
        self.basis.rows_iter()
    }

    fn pivots(&self) -> Vec<usize> {
        pivot_columns(&self.basis)
    }

    fn check_ambient(&self, other: &Submodule) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            Err(LinalgError::AmbientMismatch(self.ambient, other.ambient))
        } else {
            Ok(())
        }
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is not in the module.
    pub fn coords(&self, v: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(v.len(), self.ambient);
        echelon_solve(&self.basis, &self.pivots(), v)
    }

    /// Coordinates of many vectors at once, as the rows of a matrix.
    pub fn coords_matrix<'a, I>(&self, vs: I) -> Option<IntMatrix>
    where
        I: IntoIterator<Item = &'a [Int]>,
    {
        let piv = self.pivots();
        let mut rows = Vec::new();
        for v in vs {
            rows.push(echelon_solve(&self.basis, &piv, v)?);
        }
        Some(IntMatrix::from_rows(self.rank(), rows))
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_module(&self, other: &Submodule) -> bool {
        other.ambient == self.ambient && other.generators().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule, LinalgError> {
        self.check_ambient(other)?;
        Ok(Submodule::from_generators(
            self.ambient,
            self.basis.to_rows().into_iter().chain(other.basis.to_rows()),
        ))
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Submodule::zero(self.ambient));
        }
        let stacked = self.basis.vstack(&other.basis);
        let ker = kernel_basis(&stacked);
        let r = self.rank();
        let gens = ker
            .generators()
            .map(|x| self.basis.apply(&x[..r]))
            .collect::<Vec<_>>();
        Ok(Submodule::from_generators(self.ambient, gens))
    }

    /// `k * self`.
    pub fn scale(&self, k: &Int) -> Submodule {
        Submodule::from_matrix(&self.basis.scale(k))
    }

    /// Image under `x -> x * f`.
    pub fn image(&self, f: &IntMatrix) -> Submodule {
        assert_eq!(f.nrows(), self.ambient, "image: dimension mismatch");
        Submodule::from_matrix(&self.basis.mul(f))
    }

    /// `{a in self : a * f in target}`.
    pub fn restrict_preimage(&self, f: &IntMatrix, target: &Submodule) -> Submodule {
        assert_eq!(f.ncols(), target.ambient);
        if self.is_zero() {
            return self.clone();
        }
        let img = self.basis.mul(f);
        let stacked = img.vstack(&target.basis);
        let ker = kernel_basis(&stacked);
        let r = self.rank();
        Submodule::from_generators(
            self.ambient,
            ker.generators().map(|x| self.basis.apply(&x[..r])).collect::<Vec<_>>(),
        )
    }

    /// `{a in self : a * f = 0}`.
    pub fn restrict_kernel(&self, f: &IntMatrix) -> Submodule {
        self.restrict_preimage(f, &Submodule::zero(f.ncols()))
    }

    /// Smallest saturated submodule containing `self` (rational span meet `Z^n`).
    pub fn saturation(&self) -> Submodule {
        if self.is_zero() {
            return self.clone();
        }
        let complement = kernel_basis(&self.basis.transpose());
        if complement.is_zero() {
            return Submodule::full(self.ambient);
        }
        kernel_basis(&complement.basis.transpose())
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }

    /// Quotient `self / sub` as an abelian group; `sub` must be contained in `self`.
    pub fn quotient_invariants(&self, sub: &Submodule) -> Result<super::AbelianInvariants, LinalgError> {
        self.check_ambient(sub)?;
        let rel = self
            .coords_matrix(sub.generators())
            .ok_or(LinalgError::NotASubmodule)?;
        Ok(super::snf::cokernel_invariants_with_cols(&rel, self.rank()))
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
    fn hermite_form_is_canonical() {
        let a = sub(3, &[vec![2, 4, 6], vec![0, 3, 1]]);
        let b = sub(3, &[vec![2, 7, 7], vec![0, -3, -1], vec![2, 1, 5]]);
        assert_eq!(a, b);
        for (i, row) in a.basis().rows_iter().enumerate() {
            let c = row.iter().position(|x| !x.is_zero()).unwrap();
            assert!(row[c] > Int::ZERO);
            for j in 0..i {
                let above = &a.basis()[(j, c)];
                assert!(*above >= Int::ZERO && *above < row[c]);
            }
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&IntMatrix::zeros(2, 2)), Submodule::full(2));
        assert!(kernel_basis(&IntMatrix::identity(3)).is_zero());
        let k = kernel_basis(&IntMatrix::from_i64(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(k, sub(2, &[vec![1, -1]]));
    }

    #[test]
    fn intersection_and_sum_examples() {
        let x = sub(2, &[vec![1, 0]]);
        let y = sub(2, &[vec![0, 1]]);
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(x.intersect(&x).unwrap(), x);
        assert_eq!(x.sum(&Submodule::zero(2)).unwrap(), x);
        let a = sub(2, &[vec![2, 0], vec![0, 3]]);
        let b = sub(2, &[vec![3, 0], vec![0, 2]]);
        assert_eq!(a.intersect(&b).unwrap(), sub(2, &[vec![6, 0], vec![0, 6]]));
        assert!(x.intersect(&Submodule::zero(3)).is_err());
    }

    #[test]
    fn solve_examples() {
        let b = vec_from_i64(&[3, -4, 5]);
        assert_eq!(solve(&IntMatrix::identity(3), &b).unwrap(), Some(b.clone()));
        let m = IntMatrix::from_i64(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(solve(&m, &vec_from_i64(&[1, 0])).unwrap(), None);
        assert!(solve(&m, &vec_from_i64(&[1])).is_err());
    }

    #[test]
    fn saturation_example() {
        let a = sub(2, &[vec![2, 4]]);
        assert_eq!(a.saturation(), sub(2, &[vec![1, 2]]));
        assert!(!a.is_saturated());
    }
}
