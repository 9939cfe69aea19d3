use super::{LatticeError, LatticeWithForm, Parity};
use crate::group_ring::{GroupRingElement, RingShape};
use crate::int::Int;
use crate::linalg::{bilinear, IntMatrix, Submodule};

fn sign_of(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign in front of the transvection term, `(-1)^(n(n+1)/2)`.
///
/// With this sign an odd-dimensional transvection sends `delta` to `-delta`
/// whenever `delta . delta = (-1)^m 2`, `n = 2m + 1`.
pub fn pl_sign(n: usize) -> i64 {
    sign_of(n * (n + 1) / 2)
}

/// Sign in front of the generalized reflection term, `(-1)^((n+1)(n+2)/2)`.
pub fn pham_sign(n: usize) -> i64 {
    sign_of((n + 1) * (n + 2) / 2)
}

/// `a -> a + s (a . delta) delta`, as a matrix acting on row vectors.
///
/// Odd `n` needs a symmetric form and `delta . delta = (-1)^m 2` for
/// `n = 2m + 1`; even `n` needs an alternating form.
pub fn pl_transvection(l: &LatticeWithForm, delta: &[Int], n: usize) -> Result<IntMatrix, LatticeError> {
    if delta.len() != l.rank() {
        return Err(LatticeError::Precondition(format!(
            "vector of length {} in a lattice of rank {}",
            delta.len(),
            l.rank()
        )));
    }
    let want = if n % 2 == 1 {
        Parity::Symmetric
    } else {
        Parity::Antisymmetric
    };
    if l.parity() != want {
        return Err(LatticeError::ParityMismatch(want));
    }
    if n % 2 == 1 {
        let m = (n - 1) / 2;
        let target = Int::from(2 * sign_of(m));
        let self_pair = l.pair(delta, delta);
        if self_pair != target {
            return Err(LatticeError::Precondition(format!(
                "delta . delta = {self_pair}, expected {target}"
            )));
        }
    }
    let s = Int::from(pl_sign(n));
    let g_delta: Vec<Int> = (0..l.rank())
        .map(|i| bilinear(&unit(l.rank(), i), l.gram(), delta))
        .collect();
    let mut t = IntMatrix::identity(l.rank());
    for i in 0..l.rank() {
        let c = &s * &g_delta[i];
        for (j, dj) in delta.iter().enumerate() {
            t[(i, j)] += &(&c * dj);
        }
    }
    Ok(t)
}

fn unit(n: usize, i: usize) -> Vec<Int> {
    let mut v = vec![Int::ZERO; n];
    v[i] = Int::ONE;
    v
}

/// Smallest `k <= max` with `m^k = I`.
pub fn matrix_order(m: &IntMatrix, max: usize) -> Option<usize> {
    let mut p = m.clone();
    for k in 1..=max {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}

/// A lattice with an order-`d` isometric action, viewed as an `R_d`-module.
///
/// The form is described by a variation form `L` invariant under the action;
/// the intersection form is `B = L + (-1)^n L^t` and the hermitian form is
/// `<a, b> = sum_k B(a, b g^k) y^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianModule {
    d: usize,
    n: usize,
    action: IntMatrix,
    variation: IntMatrix,
    generators: Vec<Vec<Int>>,
}

impl HermitianModule {
    pub fn new(
        d: usize,
        n: usize,
        action: IntMatrix,
        variation: IntMatrix,
        generators: Vec<Vec<Int>>,
    ) -> Result<Self, LatticeError> {
        let r = action.nrows();
        if action.ncols() != r || variation.nrows() != r || variation.ncols() != r {
            return Err(LatticeError::Precondition("action and form sizes differ".into()));
        }
        if generators.iter().any(|g| g.len() != r) {
            return Err(LatticeError::Precondition("generator of the wrong length".into()));
        }
        if !action.pow(d as u32).is_identity() {
            return Err(LatticeError::Precondition(format!("action does not have order dividing {d}")));
        }
        if action.mul(&variation).mul(&action.transpose()) != variation {
            return Err(LatticeError::Precondition("variation form is not invariant".into()));
        }
        Ok(HermitianModule {
            d,
            n,
            action,
            variation,
            generators,
        })
    }

    /// The augmentation ideal of `Z[y]/(y^d - 1)` on the basis `y^i (1 - y)`,
    /// `0 <= i <= d - 2`, generated by `1 - y`, with variation form
    /// `L(y^i delta, y^j delta) = l(j - i)`, `l(0) = -s`, `l(1) = s`,
    /// `s = pham_sign(n)`.
    pub fn standard(d: usize, n: usize) -> Self {
        assert!(d >= 2);
        let r = d - 1;
        let mut action = IntMatrix::zeros(r, r);
        for i in 0..r - 1 {
            action[(i, i + 1)] = Int::ONE;
        }
        for j in 0..r {
            action[(r - 1, j)] = Int::from(-1i64);
        }
        let s = pham_sign(n);
        let ell = |k: usize| -> i64 {
            match k % d {
                0 => -s,
                1 => s,
                _ => 0,
            }
        };
        let mut variation = IntMatrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                variation[(i, j)] = Int::from(ell(j + d - i));
            }
        }
        HermitianModule::new(d, n, action, variation, vec![unit(r, 0)])
            .expect("standard model is well formed")
    }

    pub fn order(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.action.nrows()
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    pub fn variation(&self) -> &IntMatrix {
        &self.variation
    }

    pub fn generators(&self) -> &[Vec<Int>] {
        &self.generators
    }

    pub fn intersection_form(&self) -> IntMatrix {
        let lt = self.variation.transpose();
        if self.n % 2 == 0 {
            self.variation.add(&lt)
        } else {
            self.variation.sub(&lt)
        }
    }

    pub fn as_lattice(&self) -> LatticeWithForm {
        let parity = if self.n % 2 == 0 {
            Parity::Symmetric
        } else {
            Parity::Antisymmetric
        };
        LatticeWithForm::new(self.intersection_form(), parity).expect("B^t = (-1)^n B by construction")
    }

    fn shape(&self) -> RingShape {
        RingShape::new(self.d, 1).expect("d >= 2")
    }

    pub fn hermitian(&self, a: &[Int], b: &[Int]) -> GroupRingElement {
        let form = self.intersection_form();
        let mut coeffs = Vec::with_capacity(self.d);
        let mut bg = b.to_vec();
        for _ in 0..self.d {
            coeffs.push(bilinear(a, &form, &bg));
            bg = self.action.apply(&bg);
        }
        GroupRingElement::from_coeffs(self.shape(), coeffs)
    }

    /// Hermitian gram on the `R_d`-generators.
    pub fn hermitian_gram(&self) -> Vec<Vec<GroupRingElement>> {
        self.generators
            .iter()
            .map(|a| self.generators.iter().map(|b| self.hermitian(a, b)).collect())
            .collect()
    }

    /// `conj <a, b> = (-1)^n <b, a>` on the generators.
    pub fn is_hermitian(&self) -> bool {
        let g = self.hermitian_gram();
        let sign = Int::from(sign_of(self.n));
        (0..g.len()).all(|i| (0..g.len()).all(|j| g[i][j].conj() == g[j][i].scale(&sign)))
    }

    /// `t` commutes with the action and preserves the intersection form, which
    /// together mean it preserves the hermitian form.
    pub fn preserves_form(&self, t: &IntMatrix) -> bool {
        let b = self.intersection_form();
        t.mul(&self.action) == self.action.mul(t) && t.mul(&b).mul(&t.transpose()) == b
    }
}

/// `a -> a + s sum_k L(a, delta g^k) delta g^k` with `s = pham_sign(n)`.
///
/// `delta` must span a saturated sublattice of type `A_{d-1}` under the
/// action, with `L` restricted to its orbit equal to the standard one.
pub fn pham_reflection(h: &HermitianModule, delta: &[Int]) -> Result<IntMatrix, LatticeError> {
    let r = h.rank();
    let d = h.order();
    if delta.len() != r {
        return Err(LatticeError::Precondition("vector of the wrong length".into()));
    }
    let mut orbit = vec![delta.to_vec()];
    for _ in 1..d {
        let next = h.action().apply(orbit.last().expect("nonempty"));
        orbit.push(next);
    }
    let violation = |msg: &str| Err(LatticeError::Precondition(msg.to_string()));
    let mut total = vec![Int::ZERO; r];
    for v in &orbit {
        for (t, x) in total.iter_mut().zip(v) {
            *t += x;
        }
    }
    if total.iter().any(|x| !x.is_zero()) {
        return violation("orbit of delta does not sum to zero");
    }
    let span = Submodule::from_generators(r, orbit[..d - 1].iter().cloned());
    if span.rank() != d - 1 || !span.is_saturated() {
        return violation("delta does not span a free summand of rank d - 1");
    }
    let s = pham_sign(h.n());
    for (k, v) in orbit.iter().enumerate() {
        let want = match k {
            0 => -s,
            1 => s,
            _ => 0,
        };
        if bilinear(delta, h.variation(), v) != Int::from(want) {
            return violation("variation form on the orbit of delta is not standard");
        }
    }
    let s = Int::from(s);
    let mut t = IntMatrix::identity(r);
    for i in 0..r {
        let e = unit(r, i);
        for v in &orbit {
            let c = &s * &bilinear(&e, h.variation(), v);
            if c.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                t[(i, j)] += &(&c * vj);
            }
        }
    }
    Ok(t)
}
