//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every check is exact (tolerance 0). Runtime limits are wall-clock seconds.

use std::process::{Command, ExitCode};
use std::time::Instant;

use cyclocover::fermat::{
    build_diagram, invariants_two_ways, primitive_pair, verify_compare, verify_complex, verify_coprime, verify_main,
    verify_ranks, FermatCase, Tower,
};
use cyclocover::gmodule::EquivariantModule;
use cyclocover::group_ring::{ideal_basis, GroupRingElement, RingShape};
use cyclocover::lattice::{
    matrix_order, mod_p_quotient, pham_reflection, pl_transvection, root_lattice, HermitianModule, RootType,
    DEFAULT_ENUMERATION_CAP,
};
use cyclocover::linalg::AbelianInvariants;
use cyclocover::lattice::weyl_image_order;
use cyclocover::Int;

const RANK_GRID_SECONDS: f64 = 300.0;
const E6_SECONDS: f64 = 120.0;
const E7_SECONDS: f64 = 600.0;

/// n in 1..=3, d in 2..=5, plus (4, 3).
fn grid() -> Vec<(usize, usize)> {
    let mut g: Vec<(usize, usize)> = (1..=3).flat_map(|n| (2..=5).map(move |d| (n, d))).collect();
    g.push((4, 3));
    g
}

fn case(n: usize, d: usize) -> (FermatCase, Tower) {
    (FermatCase::new(n, d, 1024).unwrap(), Tower::new(d, n).unwrap())
}

/// `p_n(d)` by the alternating recurrence from `p_{-1} = 0`.
fn rank_oracle(n: usize, d: usize) -> i64 {
    let mut p = 0i64;
    for k in 0..=n {
        p = (d as i64 - 1).pow(k as u32 + 1) - p;
    }
    p
}

fn cyclic(d: usize) -> AbelianInvariants {
    AbelianInvariants::cyclic(d as i64)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (n, d) in grid() {
        let (c, tower) = case(n, d);
        let shape = RingShape::new(d, n + 1).unwrap();
        let phi = GroupRingElement::phi(shape, n as isize).unwrap();
        let ideal_rank = ideal_basis(shape, &[phi]).unwrap().rank();
        let r = verify_ranks(c, &primitive_pair(c, &tower).unwrap());
        let want = rank_oracle(n, d);
        let ok = ideal_rank == (d - 1).pow(n as u32 + 1)
            && r.homology.invariant_factors.is_empty()
            && r.homology.free_rank as i64 == want;
        if !ok {
            bad.push(format!("({n},{d}): ideal {ideal_rank}, quotient {}", r.homology));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        bad.is_empty() && secs < RANK_GRID_SECONDS,
        format!("13 cases in {secs:.1}s; mismatches: {bad:?}"),
    )
}

fn criterion_2() -> Outcome {
    let bad: Vec<_> = grid()
        .into_iter()
        .filter(|&(n, d)| {
            let (c, tower) = case(n, d);
            let r = invariants_two_ways(c, &tower).unwrap();
            !(r.equal && r.routes_agree)
        })
        .collect();
    outcome(bad.is_empty(), format!("unequal: {bad:?}"))
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    for (n, d) in grid() {
        let (c, tower) = case(n, d);
        let r = verify_compare(c, &primitive_pair(c, &tower).unwrap()).unwrap();
        let ok = if n % 2 == 1 {
            let product = verify_coprime(c, &tower);
            r.kernel.is_trivial()
                && r.cokernel.is_trivial()
                && r.kernel_mod_d.is_trivial()
                && r.cokernel_mod_d.is_trivial()
                && product.intersection_is_product
        } else {
            r.cokernel == cyclic(d) && r.kernel_mod_d == cyclic(d) && r.cokernel_mod_d == cyclic(d)
        };
        if !ok {
            bad.push(format!(
                "({n},{d}): ker {} coker {} (mod d: {} / {})",
                r.kernel, r.cokernel, r.kernel_mod_d, r.cokernel_mod_d
            ));
        }
    }
    outcome(bad.is_empty(), format!("mismatches: {bad:?}"))
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    let mut orders = Vec::new();
    for (n, d) in grid() {
        let (c, tower) = case(n, d);
        let r = verify_main(&build_diagram(c, &tower).unwrap()).unwrap();
        let order = r.first_kernel_order.clone();
        let divides = order
            .as_ref()
            .is_some_and(|o| Int::from(d).div_mod_floor(o).1.is_zero());
        let ok = r.first_surjective
            && r.factorization_commutes
            && r.first_kernel.is_cyclic()
            && divides
            && r.kernel_cyclic_dividing_d;
        orders.push(format!("({n},{d}):{}", order.map_or("inf".into(), |o| o.to_string())));
        if !ok {
            bad.push((n, d));
        }
    }
    outcome(bad.is_empty(), format!("kernel orders {}; failing {bad:?}", orders.join(" ")))
}

fn f_dim(a: &AbelianInvariants) -> usize {
    assert_eq!(a.free_rank, 0);
    a.invariant_factors.len()
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    for (n, d) in grid() {
        if ![2, 3, 5].contains(&d) {
            continue;
        }
        let (c, tower) = case(n, d);
        let r = verify_main(&build_diagram(c, &tower).unwrap()).unwrap();
        let below = rank_oracle(n - 1, d);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let corner = (below + sign) as usize;
        let image = if n % 2 == 0 { below } else { below - 1 } as usize;
        let dims = r.prime_dims.as_ref().expect("prime degree");
        let ok = f_dim(&r.corners.bottom_left) == corner
            && f_dim(&r.corners.bottom_right) == corner
            && dims.image == image
            && dims.passed;
        if !ok {
            bad.push(format!("({n},{d}): corners {} {}, image {}", dims.bottom_left, dims.bottom_right, dims.image));
        }
    }
    let (c, tower) = case(4, 3);
    let four = verify_main(&build_diagram(c, &tower).unwrap()).unwrap();
    let image_10 = four.prime_dims.as_ref().unwrap().image == 10;
    let (c, tower) = case(3, 3);
    let three = verify_main(&build_diagram(c, &tower).unwrap()).unwrap();
    let onto_6_5 = three.first_map == "right"
        && f_dim(&three.corners.top_right) == 6
        && f_dim(&three.corners.bottom_right) == 5
        && three.first_surjective
        && three.first_kernel_order == Some(Int::from(3i64));
    outcome(
        bad.is_empty() && image_10 && onto_6_5,
        format!("(4,3) image 10: {image_10}; (3,3) 6 onto 5 with kernel 3: {onto_6_5}; mismatches {bad:?}"),
    )
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=3 {
        for d in [2, 3] {
            let (c, tower) = case(n, d);
            let r = verify_complex(c, &tower).unwrap();
            let claimed = (0..n).all(|k| r.homology[k] == cyclic(d)) && r.homology[n].is_trivial();
            if !(r.squares_to_zero && claimed) {
                let h: Vec<String> = r.homology.iter().map(|a| a.to_string()).collect();
                bad.push(format!("({n},{d}): D^2=0 {}, H = [{}]", r.squares_to_zero, h.join(", ")));
            }
        }
    }
    outcome(bad.is_empty(), format!("mismatches: {bad:?}"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let e6 = root_lattice(RootType::E6, -1);
    let det = e6.gram().det().abs();
    let disc = e6.discriminant_group();
    let q = mod_p_quotient(&e6, 3).unwrap();
    let w = weyl_image_order(&e6, 3, DEFAULT_ENUMERATION_CAP).unwrap();
    let degrees: u64 = [2, 5, 6, 8, 9, 12].iter().product();
    let secs = start.elapsed().as_secs_f64();
    let pass = disc == cyclic(3)
        && det == Int::from(3i64)
        && q.radical_dim == 1
        && q.quotient_dim() == 5
        && q.is_nondegenerate()
        && w.image_order == w.group_order
        && w.group_order == degrees
        && w.faithful
        && secs < E6_SECONDS;
    outcome(
        pass,
        format!(
            "disc {disc}, radical {}, quotient {}, |W| {}, image {}, degree product {degrees}, {secs:.1}s",
            q.radical_dim,
            q.quotient_dim(),
            w.group_order,
            w.image_order
        ),
    )
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let e7 = root_lattice(RootType::E7, 1);
    let q = mod_p_quotient(&e7, 2).unwrap();
    let w = weyl_image_order(&e7, 2, DEFAULT_ENUMERATION_CAP).unwrap();
    // |Sp_6(F_2)| = 2^9 (2^2 - 1)(2^4 - 1)(2^6 - 1)
    let sp6: u64 = 512 * 3 * 15 * 63;
    let secs = start.elapsed().as_secs_f64();
    let pass = q.radical_dim == 1
        && q.quotient_dim() == 6
        && q.is_alternating()
        && q.is_nondegenerate()
        && w.image_order == 1_451_520
        && w.image_order == sp6
        && secs < E7_SECONDS;
    outcome(
        pass,
        format!(
            "radical {}, quotient {} (alternating {}), image {}, |W| {}, {secs:.1}s",
            q.radical_dim,
            q.quotient_dim(),
            q.is_alternating(),
            w.image_order,
            w.group_order
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    for (t, sign, n) in [(RootType::E6, -1, 3), (RootType::E7, -1, 3), (RootType::E7, 1, 1), (RootType::A(4), 1, 5)] {
        let l = root_lattice(t, sign);
        for delta in l.vanishing() {
            let m = pl_transvection(&l, delta, n).unwrap();
            if !(l.preserved_by(&m) && m.pow(2).is_identity() && !m.is_identity()) {
                bad.push(format!("{t:?} n={n}"));
            }
        }
    }
    for d in 2..=5 {
        for n in [0, 2, 4] {
            let h = HermitianModule::standard(d, n);
            let t = pham_reflection(&h, &h.generators()[0]).unwrap();
            if !(h.is_hermitian() && h.preserves_form(&t) && matrix_order(&t, 4 * d) == Some(d)) {
                bad.push(format!("standard d={d} n={n}"));
            }
            // the same lattice, seen as an odd-dimensional symmetric one
            let lat = h.as_lattice();
            for delta in h.generators() {
                let m = pl_transvection(&lat, delta, n + 1).unwrap();
                if !(lat.preserved_by(&m) && m.pow(2).is_identity()) {
                    bad.push(format!("A{} n={}", d - 1, n + 1));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("failures: {bad:?}"))
}

fn criterion_10() -> Outcome {
    let mut bad = Vec::new();
    for d in 2..=8 {
        let regular = EquivariantModule::regular(d).r_map();
        let trivial = EquivariantModule::trivial(d).r_map();
        let aug = EquivariantModule::augmentation_ideal(d);
        let coinv = aug.coinvariants().target().invariants();

        let shape = RingShape::new(d, 1).unwrap();
        let one_minus_y = GroupRingElement::one_minus_y(shape, 0).unwrap();
        let i1 = ideal_basis(shape, &[one_minus_y.clone()]).unwrap();
        let i2 = ideal_basis(shape, &[one_minus_y.mul(&one_minus_y).unwrap()]).unwrap();
        let i_mod_i2 = i1.quotient_invariants(&i2).unwrap();

        let ok = regular.is_isomorphism()
            && regular.source().invariants() == cyclic(d)
            && regular.target().invariants() == cyclic(d)
            && trivial.source().invariants().is_trivial()
            && trivial.target().invariants() == cyclic(d)
            && aug.r_map().target().invariants().is_trivial()
            && coinv == cyclic(d)
            && i_mod_i2 == cyclic(d);
        if !ok {
            bad.push(d);
        }
    }
    outcome(bad.is_empty(), format!("failing d: {bad:?}"))
}

fn checked_payload(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclocover"))
        .args(args)
        .env_remove("CYCLOCOVER_CAP")
        .output()
        .map_err(|e| e.to_string())?;
    let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    v.as_object_mut().ok_or("not an object")?.remove("timings");
    Ok(serde_json::to_string(&v).unwrap())
}

fn criterion_11() -> Outcome {
    let args = ["verify", "--n", "1..3", "--d", "2..3", "--suite", "all"];
    let a = checked_payload(&[&args[..], &["--jobs", "1"]].concat());
    let b = checked_payload(&[&args[..], &["--jobs", "4"]].concat());
    let c = checked_payload(&[&args[..], &["--jobs", "4"]].concat());
    match (a, b, c) {
        (Ok(a), Ok(b), Ok(c)) => outcome(a == b && b == c, format!("{} bytes, three runs", a.len())),
        (a, b, c) => outcome(false, format!("{a:?} {b:?} {c:?}")),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("rank formula", criterion_1),
        ("invariants two ways", criterion_2),
        ("duality kernel and cokernel", criterion_3),
        ("level structure square", criterion_4),
        ("prime degree dimensions", criterion_5),
        ("stratification complex", criterion_6),
        ("E6 level 3", criterion_7),
        ("E7 level 2", criterion_8),
        ("transformations", criterion_9),
        ("cyclic group micro-suite", criterion_10),
        ("determinism", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<28} {}  {}",
            i + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
