use std::collections::BTreeMap;

use serde::Serialize;

use super::{
    matrix_order, mod_p_quotient, pham_reflection, pl_transvection, quadratic_refinement, root_lattice, roots,
    symplectic_group_order, weyl_image_order, HermitianModule, LatticeError, LatticeWithForm, QuadraticRefinement,
    RootType,
};
use crate::statement::Statement;

pub const LATTICE_KEYS: [&str; 5] = ["e6-mod3", "e7-mod2", "pl-order", "pham-order", "quadratic-refinement"];

const E6_WEYL_ORDER: u64 = 51_840;
const E7_WEYL_ORDER: u64 = 2_903_040;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    E6,
    E7,
    Both,
}

impl Which {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "e6" => Some(Which::E6),
            "e7" => Some(Which::E7),
            "both" => Some(Which::Both),
            _ => None,
        }
    }

    fn types(self) -> Vec<RootType> {
        match self {
            Which::E6 => vec![RootType::E6],
            Which::E7 => vec![RootType::E7],
            Which::Both => vec![RootType::E6, RootType::E7],
        }
    }
}

fn name(t: RootType) -> String {
    match t {
        RootType::A(n) => format!("A{n}"),
        RootType::E6 => "E6".into(),
        RootType::E7 => "E7".into(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeReport {
    pub statements: BTreeMap<&'static str, Statement>,
    pub passed: bool,
}

#[derive(Serialize)]
struct LevelDetail {
    lattice: String,
    p: u64,
    discriminant: Vec<String>,
    roots: usize,
    radical_dim: usize,
    quotient_dim: usize,
    nondegenerate: bool,
    alternating: bool,
    group_order: u64,
    image_order: u64,
    faithful: bool,
}

fn level_detail(t: RootType, p: u64, cap: usize) -> Result<LevelDetail, LatticeError> {
    // the negative definite form, as for intersection pairings of odd dimension 3
    let l = root_lattice(t, -1);
    let q = mod_p_quotient(&l, p)?;
    let w = weyl_image_order(&l, p, cap)?;
    Ok(LevelDetail {
        lattice: name(t),
        p,
        discriminant: l
            .discriminant_group()
            .invariant_factors
            .iter()
            .map(|f| f.to_string())
            .collect(),
        roots: roots(&l).len(),
        radical_dim: q.radical_dim,
        quotient_dim: q.quotient_dim(),
        nondegenerate: q.is_nondegenerate(),
        alternating: q.is_alternating(),
        group_order: w.group_order,
        image_order: w.image_order,
        faithful: w.faithful,
    })
}

#[derive(Serialize)]
struct TransvectionDetail {
    lattice: String,
    n: usize,
    orders: Vec<Option<usize>>,
    preserves_form: bool,
}

fn transvection_detail(l: &LatticeWithForm, lattice: String, n: usize) -> Result<TransvectionDetail, LatticeError> {
    let mut orders = Vec::new();
    let mut preserves_form = true;
    for delta in l.vanishing() {
        let t = pl_transvection(l, delta, n)?;
        preserves_form &= l.preserved_by(&t);
        orders.push(matrix_order(&t, 8));
    }
    Ok(TransvectionDetail {
        lattice,
        n,
        orders,
        preserves_form,
    })
}

#[derive(Serialize)]
struct PhamDetail {
    d: usize,
    n: usize,
    order: Option<usize>,
    preserves_form: bool,
    hermitian: bool,
}

fn pham_detail(d: usize, n: usize) -> Result<PhamDetail, LatticeError> {
    let h = HermitianModule::standard(d, n);
    let t = pham_reflection(&h, &h.generators()[0])?;
    Ok(PhamDetail {
        d,
        n,
        order: matrix_order(&t, 2 * d),
        preserves_form: h.preserves_form(&t),
        hermitian: h.is_hermitian(),
    })
}

#[derive(Serialize)]
struct RefinementDetail {
    lattice: String,
    n: usize,
    refinement: QuadraticRefinement,
}

/// Checks on the E6 and E7 root lattices and on the standard order-`d`
/// reflection modules, keyed by [`LATTICE_KEYS`].
pub fn lattice_report(which: Which, cap: usize) -> Result<LatticeReport, LatticeError> {
    let mut statements = BTreeMap::new();
    let types = which.types();

    if types.contains(&RootType::E6) {
        let e = level_detail(RootType::E6, 3, cap)?;
        let pass = e.discriminant == ["3"]
            && e.roots == 72
            && e.radical_dim == 1
            && e.quotient_dim == 5
            && e.nondegenerate
            && e.group_order == E6_WEYL_ORDER
            && e.faithful;
        statements.insert("e6-mod3", Statement::new(pass, &e));
    }
    if types.contains(&RootType::E7) {
        let e = level_detail(RootType::E7, 2, cap)?;
        let pass = e.discriminant == ["2"]
            && e.radical_dim == 1
            && e.quotient_dim == 6
            && e.nondegenerate
            && e.alternating
            && e.group_order == E7_WEYL_ORDER
            && e.image_order == symplectic_group_order(3, 2);
        statements.insert("e7-mod2", Statement::new(pass, &e));
    }

    let mut pl = Vec::new();
    let mut refinements = Vec::new();
    for &t in &types {
        // n = 3: roots have self-intersection -2 and q(root) = -1
        let l = root_lattice(t, -1);
        pl.push(transvection_detail(&l, name(t), 3)?);
        refinements.push(RefinementDetail {
            lattice: name(t),
            n: 3,
            refinement: quadratic_refinement(&l, 3)?,
        });
    }
    let pass = pl.iter().all(|p| p.preserves_form && p.orders.iter().all(|o| *o == Some(2)));
    statements.insert("pl-order", Statement::new(pass, &pl));
    let pass = refinements
        .iter()
        .all(|r| matches!(r.refinement, QuadraticRefinement::Integral { matches: true, .. }));
    statements.insert("quadratic-refinement", Statement::new(pass, &refinements));

    let pham = (2..=5)
        .map(|d| pham_detail(d, 2))
        .collect::<Result<Vec<_>, _>>()?;
    let pass = pham
        .iter()
        .all(|p| p.order == Some(p.d) && p.preserves_form && p.hermitian);
    statements.insert("pham-order", Statement::new(pass, &pham));

    let passed = statements.values().all(|s| !s.failed());
    Ok(LatticeReport { statements, passed })
}
