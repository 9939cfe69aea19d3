use rustc_hash::FxHashSet;
use serde::Serialize;

use super::{mod_p_quotient, simple_reflection, LatticeError, LatticeWithForm};
use crate::int::Int;
use crate::linalg::{solve, FpMatrix};

pub const DEFAULT_ENUMERATION_CAP: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylOrders {
    pub p: u64,
    pub group_order: u64,
    pub image_order: u64,
    pub faithful: bool,
    pub quotient_dim: usize,
}

/// Order of the group generated by reflections in the simple roots, and of
/// its image on the nondegenerate quotient of `L / pL`.
///
/// The first count is the orbit size of a regular vector, which for a simple
/// system equals the group order; the second is a closure over matrices.
pub fn weyl_image_order(l: &LatticeWithForm, p: u64, cap: usize) -> Result<WeylOrders, LatticeError> {
    let r = l.rank();
    let simple_ok = l.vanishing().len() == r
        && l.vanishing()
            .iter()
            .enumerate()
            .all(|(i, v)| v.iter().enumerate().all(|(j, x)| *x == Int::from((i == j) as i64)));
    if !simple_ok || (0..r).any(|i| l.gram()[(i, i)].abs() != Int::from(2i64)) {
        return Err(LatticeError::Precondition(
            "expected a root lattice on its simple roots".into(),
        ));
    }
    let quotient = mod_p_quotient(l, p)?;
    let group_order = orbit_size(l, cap)?;
    let gens: Vec<FpMatrix> = (0..r).map(|i| quotient.induced(&simple_reflection(l, i))).collect();
    let image_order = matrix_closure_size(&gens, quotient.quotient_dim(), p, cap)?;
    Ok(WeylOrders {
        p,
        group_order,
        image_order,
        faithful: group_order == image_order,
        quotient_dim: quotient.quotient_dim(),
    })
}

/// `|Sp_{2m}(F_q)|`.
pub fn symplectic_group_order(m: u32, q: u64) -> u64 {
    let mut order = q.pow(m * m);
    for i in 1..=m {
        order *= q.pow(2 * i) - 1;
    }
    order
}

fn orbit_size(l: &LatticeWithForm, cap: usize) -> Result<u64, LatticeError> {
    let r = l.rank();
    let g = l.gram();
    // v with (v, alpha_i) = det for every simple root
    let det = g.det();
    let target = vec![det; r];
    let start = solve(g, &target)?
        .ok_or_else(|| LatticeError::Precondition("no regular vector".into()))?;
    let start: Vec<i64> = start
        .iter()
        .map(|x| x.to_i64().ok_or_else(|| LatticeError::Precondition("regular vector too large".into())))
        .collect::<Result<_, _>>()?;
    let gram: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| g[(i, j)].to_i64().expect("small gram")).collect())
        .collect();
    let packer = Packer::new(r)?;

    // s_i changes only coordinate i: x_i -= 2 (x, a_i) / (a_i, a_i)
    let reflect = |x: &mut [i64], i: usize| {
        let pair: i64 = (0..r).map(|j| x[j] * gram[j][i]).sum();
        x[i] -= 2 * pair / gram[i][i];
    };

    let mut seen = FxHashSet::default();
    let first = packer.pack(&start)?;
    seen.insert(first);
    let mut frontier = vec![first];
    let mut x = vec![0i64; r];
    while let Some(key) = frontier.pop() {
        for i in 0..r {
            packer.unpack(key, &mut x);
            reflect(&mut x, i);
            let k = packer.pack(&x)?;
            if seen.insert(k) {
                if seen.len() > cap {
                    return Err(LatticeError::EnumerationCap(cap));
                }
                frontier.push(k);
            }
        }
    }
    Ok(seen.len() as u64)
}

struct Packer {
    bits: u32,
}

impl Packer {
    fn new(len: usize) -> Result<Self, LatticeError> {
        if len == 0 || len > 32 {
            return Err(LatticeError::Precondition(format!("cannot pack {len} coordinates")));
        }
        Ok(Packer {
            bits: (128 / len as u32).min(63),
        })
    }

    fn pack(&self, v: &[i64]) -> Result<u128, LatticeError> {
        let half = 1i64 << (self.bits - 1);
        let mut key = 0u128;
        for &x in v {
            if x < -half || x >= half {
                return Err(LatticeError::Precondition("orbit coordinates out of range".into()));
            }
            key = (key << self.bits) | (x + half) as u128;
        }
        Ok(key)
    }

    fn unpack(&self, mut key: u128, out: &mut [i64]) {
        let half = 1i64 << (self.bits - 1);
        let mask = (1u128 << self.bits) - 1;
        for x in out.iter_mut().rev() {
            *x = (key & mask) as i64 - half;
            key >>= self.bits;
        }
    }
}

fn matrix_closure_size(gens: &[FpMatrix], q: usize, p: u64, cap: usize) -> Result<u64, LatticeError> {
    let bits = (64 - (p - 1).leading_zeros()).max(1);
    if (q * q) as u32 * bits > 128 {
        return Err(LatticeError::Precondition("quotient too large to enumerate".into()));
    }
    let pack = |m: &[u64]| m.iter().fold(0u128, |key, &x| (key << bits) | x as u128);
    let gens: Vec<Vec<u64>> = gens
        .iter()
        .map(|g| (0..q).flat_map(|i| g.row(i).to_vec()).collect())
        .collect();
    let mut id = vec![0u64; q * q];
    for i in 0..q {
        id[i * q + i] = 1;
    }
    let unpack = |mut key: u128, out: &mut [u64]| {
        for x in out.iter_mut().rev() {
            *x = (key & ((1u128 << bits) - 1)) as u64;
            key >>= bits;
        }
    };
    let mut seen = FxHashSet::default();
    let first = pack(&id);
    seen.insert(first);
    let mut frontier = vec![first];
    let mut m = vec![0u64; q * q];
    let mut next = vec![0u64; q * q];
    while let Some(key) = frontier.pop() {
        unpack(key, &mut m);
        for g in &gens {
            for i in 0..q {
                for j in 0..q {
                    let mut acc = 0u64;
                    for k in 0..q {
                        acc += m[i * q + k] * g[k * q + j];
                    }
                    next[i * q + j] = acc % p;
                }
            }
            let k = pack(&next);
            if seen.insert(k) {
                if seen.len() > cap {
                    return Err(LatticeError::EnumerationCap(cap));
                }
                frontier.push(k);
            }
        }
    }
    Ok(seen.len() as u64)
}
