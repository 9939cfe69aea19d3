//! The group ring `Z[y_0, ..., y_{m-1}] / (y_i^d - 1)` of `(Z/d)^m`.
//!
//! Elements are dense coefficient vectors over the monomial basis. The
//! monomial `y_0^{e_0} ... y_{m-1}^{e_{m-1}}` sits at index
//! `sum_i e_i * d^(m-1-i)`, i.e. lexicographic with `e_0` slowest. Reports
//! refer to these coordinates, so the order must not change.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::int::Int;
use crate::linalg::{IntMatrix, Submodule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("order must be at least 2, got {0}")]
    BadOrder(usize),
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(RingShape, RingShape),
    #[error("variable y_{index} out of range for {shape}")]
    VariableOutOfRange { index: isize, shape: RingShape },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RingShape {
    pub d: usize,
    pub m: usize,
}

impl fmt::Display for RingShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R_{}^({})", self.d, self.m)
    }
}

impl RingShape {
    pub fn new(d: usize, m: usize) -> Result<Self, RingError> {
        if d < 2 {
            return Err(RingError::BadOrder(d));
        }
        Ok(RingShape { d, m })
    }

    /// Free rank `d^m`.
    pub fn rank(&self) -> usize {
        self.d.pow(self.m as u32)
    }

    pub fn index(&self, exps: &[usize]) -> usize {
        assert_eq!(exps.len(), self.m);
        exps.iter().fold(0, |acc, &e| acc * self.d + e % self.d)
    }

    pub fn exponents(&self, mut idx: usize) -> Vec<usize> {
        let mut e = vec![0; self.m];
        for slot in e.iter_mut().rev() {
            *slot = idx % self.d;
            idx /= self.d;
        }
        e
    }

    /// Index of the product of two monomials.
    fn mono_mul(&self, a: usize, b: usize) -> usize {
        let d = self.d;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((a % d + b % d) % d) * place;
            a /= d;
            b /= d;
            place *= d;
        }
        out
    }

    /// Index of the inverse monomial.
    fn mono_inv(&self, a: usize) -> usize {
        let d = self.d;
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((d - a % d) % d) * place;
            a /= d;
            place *= d;
        }
        out
    }

    fn check_var(&self, k: isize) -> Result<(), RingError> {
        if k < -1 || k >= self.m as isize {
            Err(RingError::VariableOutOfRange {
                index: k,
                shape: *self,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupRingElement {
    shape: RingShape,
    coeffs: Vec<Int>,
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.shape)?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{:?}", c, self.shape.exponents(i))?;
        }
        write!(f, "]")
    }
}

impl GroupRingElement {
    pub fn zero(shape: RingShape) -> Self {
        GroupRingElement {
            shape,
            coeffs: vec![Int::ZERO; shape.rank()],
        }
    }

    pub fn one(shape: RingShape) -> Self {
        Self::monomial(shape, &vec![0; shape.m])
    }

    pub fn from_coeffs(shape: RingShape, coeffs: Vec<Int>) -> Self {
        assert_eq!(coeffs.len(), shape.rank(), "coefficient length");
        GroupRingElement { shape, coeffs }
    }

    pub fn monomial(shape: RingShape, exps: &[usize]) -> Self {
        let mut z = Self::zero(shape);
        z.coeffs[shape.index(exps)] = Int::ONE;
        z
    }

    /// The variable `y_k`; `y_{-1}` is the unit.
    pub fn y(shape: RingShape, k: isize) -> Result<Self, RingError> {
        shape.check_var(k)?;
        if k < 0 {
            return Ok(Self::one(shape));
        }
        let mut e = vec![0; shape.m];
        e[k as usize] = 1;
        Ok(Self::monomial(shape, &e))
    }

    /// `(y_0 - 1)(y_1 - y_0) ... (y_n - y_{n-1})`, or `1` for `n = -1`.
    pub fn phi(shape: RingShape, n: isize) -> Result<Self, RingError> {
        shape.check_var(n)?;
        let mut acc = Self::one(shape);
        for k in 0..=n {
            let f = &Self::y(shape, k)? - &Self::y(shape, k - 1)?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    /// `1 + y_k + ... + y_k^{d-1}`.
    pub fn u(shape: RingShape, k: usize) -> Result<Self, RingError> {
        shape.check_var(k as isize)?;
        let mut z = Self::zero(shape);
        let mut e = vec![0; shape.m];
        for j in 0..shape.d {
            e[k] = j;
            z.coeffs[shape.index(&e)] = Int::ONE;
        }
        Ok(z)
    }

    /// `1 - y_k`; zero for `k = -1`.
    pub fn one_minus_y(shape: RingShape, k: isize) -> Result<Self, RingError> {
        Ok(&Self::one(shape) - &Self::y(shape, k)?)
    }

    /// Sum of all group elements.
    pub fn norm_element(shape: RingShape) -> Self {
        GroupRingElement {
            shape,
            coeffs: vec![Int::ONE; shape.rank()],
        }
    }

    pub fn shape(&self) -> RingShape {
        self.shape
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Int> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Int::is_zero)
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, RingError> {
        if self.shape != other.shape {
            return Err(RingError::ShapeMismatch(self.shape, other.shape));
        }
        let mut out = Self::zero(self.shape);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[self.shape.mono_mul(i, j)].add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Int) -> Self {
        GroupRingElement {
            shape: self.shape,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// The anti-involution `g -> g^{-1}`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(self.shape);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[self.shape.mono_inv(i)] = c.clone();
        }
        out
    }

    /// Augmentation: sum of coefficients.
    pub fn augmentation(&self) -> Int {
        self.coeffs.iter().cloned().sum()
    }

    /// Co-augmentation `k -> k * (sum of all group elements)`.
    pub fn coaugmentation(shape: RingShape, k: &Int) -> Self {
        Self::norm_element(shape).scale(k)
    }

    /// Matrix of `x -> self * x`; row `i` holds the coefficients of
    /// `self * monomial_i`.
    pub fn mult_matrix(&self) -> IntMatrix {
        let n = self.shape.rank();
        let mut m = IntMatrix::zeros(n, n);
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for i in 0..n {
                m[(i, self.shape.mono_mul(i, k))] = a.clone();
            }
        }
        m
    }
}

macro_rules! elementwise {
    ($tr:ident, $f:ident, $op:tt) => {
        impl std::ops::$tr<&GroupRingElement> for &GroupRingElement {
            type Output = GroupRingElement;
            fn $f(self, rhs: &GroupRingElement) -> GroupRingElement {
                assert_eq!(self.shape, rhs.shape, "shape mismatch");
                GroupRingElement {
                    shape: self.shape,
                    coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a $op b).collect(),
                }
            }
        }
    };
}

elementwise!(Add, add, +);
elementwise!(Sub, sub, -);

/// Z-basis of the ideal generated by `gens`.
pub fn ideal_basis(shape: RingShape, gens: &[GroupRingElement]) -> Result<Submodule, RingError> {
    let n = shape.rank();
    let mut rows = Vec::with_capacity(n * gens.len());
    for g in gens {
        if g.shape != shape {
            return Err(RingError::ShapeMismatch(shape, g.shape));
        }
        for i in 0..n {
            let mut row = vec![Int::ZERO; n];
            for (k, a) in g.coeffs.iter().enumerate() {
                if !a.is_zero() {
                    row[shape.mono_mul(i, k)] = a.clone();
                }
            }
            rows.push(row);
        }
    }
    Ok(Submodule::from_generators(n, rows))
}

/// `R^(m) -> R^(m+k)`, monomials extended by zero exponents.
pub fn level_embedding(d: usize, from_m: usize, to_m: usize) -> IntMatrix {
    assert!(to_m >= from_m);
    let src = d.pow(from_m as u32);
    let tgt = d.pow(to_m as u32);
    let stride = tgt / src;
    let mut m = IntMatrix::zeros(src, tgt);
    for i in 0..src {
        m[(i, i * stride)] = Int::ONE;
    }
    m
}

/// `R^(m) -> R^(m+1)`, `x -> x * u_m`.
pub fn norm_embedding(d: usize, from_m: usize) -> IntMatrix {
    let src = d.pow(from_m as u32);
    let mut m = IntMatrix::zeros(src, src * d);
    for i in 0..src {
        for j in 0..d {
            m[(i, i * d + j)] = Int::ONE;
        }
    }
    m
}

/// `R^(m) -> R^(m-1)`, substituting `y_{m-1} = 1`.
pub fn last_variable_to_one(d: usize, m: usize) -> IntMatrix {
    assert!(m >= 1);
    let src = d.pow(m as u32);
    let mut out = IntMatrix::zeros(src, src / d);
    for i in 0..src {
        out[(i, i / d)] = Int::ONE;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(d: usize, m: usize) -> RingShape {
        RingShape::new(d, m).unwrap()
    }

    fn el(shape: RingShape, c: &[i64]) -> GroupRingElement {
        GroupRingElement::from_coeffs(shape, c.iter().map(|&x| Int::from(x)).collect())
    }

    #[test]
    fn index_order_is_lexicographic() {
        let s = sh(3, 2);
        assert_eq!(s.index(&[1, 0]), 3);
        assert_eq!(s.index(&[0, 2]), 2);
        assert_eq!(s.exponents(7), vec![2, 1]);
        assert!(RingShape::new(1, 2).is_err());
        assert_eq!(sh(5, 0).rank(), 1);
    }

    #[test]
    fn small_products() {
        let s = sh(3, 1);
        let y = GroupRingElement::y(s, 0).unwrap();
        let one = GroupRingElement::one(s);
        let a = &y - &one;
        assert_eq!(a.mul(&one).unwrap(), a);
        assert_eq!(a.mul(&a).unwrap(), el(s, &[1, -2, 1]));
        for d in 2..=5 {
            let s = sh(d, 1);
            let a = GroupRingElement::phi(s, 0).unwrap();
            assert!(a.mul(&GroupRingElement::u(s, 0).unwrap()).unwrap().is_zero());
        }
        let err = a.mul(&GroupRingElement::one(sh(3, 2))).unwrap_err();
        assert!(matches!(err, RingError::ShapeMismatch(..)));
    }

    #[test]
    fn phi_low_degree() {
        assert_eq!(GroupRingElement::phi(sh(2, 1), 0).unwrap(), el(sh(2, 1), &[-1, 1]));
        // y0 y1 - y1 - 1 + y0, index = 2 e0 + e1
        assert_eq!(GroupRingElement::phi(sh(2, 2), 1).unwrap(), el(sh(2, 2), &[-1, -1, 1, 1]));
        assert_eq!(GroupRingElement::phi(sh(3, 2), -1).unwrap(), GroupRingElement::one(sh(3, 2)));
        for d in 2..=4 {
            for n in 0..3 {
                let p = GroupRingElement::phi(sh(d, n + 1), n as isize).unwrap();
                assert!(p.augmentation().is_zero());
            }
        }
    }

    #[test]
    fn norm_element_identities() {
        let s = sh(3, 1);
        let u = GroupRingElement::u(s, 0).unwrap();
        assert_eq!(u, el(s, &[1, 1, 1]));
        for d in 2..=5 {
            for m in 1..=2 {
                let s = sh(d, m);
                let u = GroupRingElement::u(s, m - 1).unwrap();
                let y = GroupRingElement::y(s, m as isize - 1).unwrap();
                assert_eq!(u.mul(&y).unwrap(), u);
                assert_eq!(u.mul(&u).unwrap(), u.scale(&Int::from(d)));
            }
        }
    }

    #[test]
    fn augmentation_pair() {
        for d in 2..=6 {
            let s = sh(d, 1);
            let k = Int::from(7i64);
            let back = GroupRingElement::coaugmentation(s, &k).augmentation();
            assert_eq!(back, &k * &Int::from(d));
        }
    }

    #[test]
    fn multiplication_matrices() {
        let s = sh(3, 2);
        assert!(GroupRingElement::one(s).mult_matrix().is_identity());
        for k in 0..2 {
            let y = GroupRingElement::y(s, k).unwrap().mult_matrix();
            assert!(y.pow(3).is_identity());
            assert!(!y.is_identity());
            assert!(y.rows_iter().all(|r| r.iter().filter(|x| x.is_one()).count() == 1));
        }
        for d in 2..=4 {
            let s = sh(d, 2);
            assert!(GroupRingElement::one_minus_y(s, 1).unwrap().mult_matrix().det().is_zero());
        }
    }

    #[test]
    fn ideal_ranks() {
        let s = sh(3, 1);
        assert_eq!(ideal_basis(s, &[GroupRingElement::one(s)]).unwrap(), Submodule::full(3));
        assert_eq!(ideal_basis(s, &[GroupRingElement::u(s, 0).unwrap()]).unwrap().rank(), 1);
        for d in 2..=4 {
            for n in 0..3usize {
                let s = sh(d, n + 1);
                let p = GroupRingElement::phi(s, n as isize).unwrap();
                let ideal = ideal_basis(s, &[p]).unwrap();
                assert_eq!(ideal.rank(), (d - 1).pow(n as u32 + 1));
                for k in 0..=n as isize {
                    let y = GroupRingElement::y(s, k).unwrap().mult_matrix();
                    assert!(ideal.contains_module(&ideal.image(&y)));
                }
            }
        }
    }

    #[test]
    fn embeddings_agree_with_ring_operations() {
        let (d, m) = (3, 2);
        let small = sh(d, m);
        let big = sh(d, m + 1);
        let x = el(small, &[1, -2, 0, 3, 0, 0, 5, 1, -1]);
        let lifted = level_embedding(d, m, m + 1).apply(x.coeffs());
        let lifted = GroupRingElement::from_coeffs(big, lifted);
        let u = GroupRingElement::u(big, m).unwrap();
        let via_u = norm_embedding(d, m).apply(x.coeffs());
        assert_eq!(via_u, lifted.mul(&u).unwrap().into_coeffs());
        // substituting y_m = 1 sends u_m to d
        let back = last_variable_to_one(d, m + 1).apply(&via_u);
        assert_eq!(back, x.scale(&Int::from(d)).into_coeffs());
    }
}
