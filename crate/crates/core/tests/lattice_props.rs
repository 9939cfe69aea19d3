use cyclocover::fermat::{build_diagram, verify_main, FermatCase, Tower};
use cyclocover::lattice::{
    mod_p_quotient, pham_reflection, quadratic_refinement, root_lattice, HermitianModule, LatticeWithForm, Parity,
    RootType,
};
use cyclocover::linalg::{vec_from_i64, IntMatrix};
use cyclocover::Int;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Int> {
    (0..n).map(|_| Int::from(rng.gen_range(-9i64..=9))).collect()
}

#[test]
fn projection_intertwines_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (t, p) in [(RootType::E6, 3), (RootType::E7, 2), (RootType::A(4), 5), (RootType::A(3), 2)] {
        let l = root_lattice(t, -1);
        let q = mod_p_quotient(&l, p).unwrap();
        assert!(q.is_nondegenerate());
        for _ in 0..50 {
            let x = random_vec(&mut rng, l.rank());
            let y = random_vec(&mut rng, l.rank());
            let lhs = l.pair(&x, &y).mod_u64(p);
            assert_eq!(lhs, q.pair(&q.project(&x), &q.project(&y)), "{t:?} mod {p}");
        }
        // radical vectors project to zero
        for r in &q.radical {
            let v: Vec<Int> = r.iter().map(|&x| Int::from(x)).collect();
            assert!(q.project(&v).iter().all(|&c| c == 0));
        }
    }
}

/// `<T a, T b> = <a, b>` on random vectors, coefficientwise in `R_d`.
#[test]
fn reflection_preserves_hermitian_form_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 2..=4 {
        for n in 0..=3 {
            let h = HermitianModule::standard(d, n);
            let t = pham_reflection(&h, &h.generators()[0]).unwrap();
            for _ in 0..20 {
                let a = random_vec(&mut rng, h.rank());
                let b = random_vec(&mut rng, h.rank());
                assert_eq!(h.hermitian(&t.apply(&a), &t.apply(&b)), h.hermitian(&a, &b));
                let sign = Int::from(if n % 2 == 0 { 1i64 } else { -1 });
                assert_eq!(h.hermitian(&a, &b).conj(), h.hermitian(&b, &a).scale(&sign));
            }
        }
    }
}

/// Every `F_2` form on the symplectic plane with `q(e1) = 1`, by brute force.
#[test]
fn plane_refinements_by_enumeration() {
    let l = LatticeWithForm::new(IntMatrix::from_i64(&[vec![0, 1], vec![-1, 0]]), Parity::Antisymmetric)
        .unwrap()
        .with_vanishing(vec![vec_from_i64(&[1, 0])]);
    let vectors = [[0u8, 0], [1, 0], [0, 1], [1, 1]];
    let mut valid = Vec::new();
    for q1 in 0..2u8 {
        for q2 in 0..2u8 {
            let q = |x: [u8; 2]| (x[0] & q1) ^ (x[1] & q2) ^ (x[0] & x[1]);
            let polar_ok = vectors.iter().all(|&x| {
                vectors.iter().all(|&y| {
                    let s = [x[0] ^ y[0], x[1] ^ y[1]];
                    let pairing = (x[0] & y[1]) ^ (x[1] & y[0]);
                    q(s) == q(x) ^ q(y) ^ pairing
                })
            });
            if polar_ok && q([1, 0]) == 1 {
                valid.push((q1, q2));
            }
        }
    }
    assert_eq!(valid, vec![(1, 0), (1, 1)]);
    let found = quadratic_refinement(&l, 2).unwrap();
    let value = |x: [u8; 2]| found.eval_mod2(&x).unwrap();
    assert!(valid.contains(&(value([1, 0]), value([0, 1]))));
}

/// The E6 quotient mod 3 and the level-3 corner for cubic threefolds have the
/// same dimension.
#[test]
fn e6_quotient_matches_the_coinvariant_corner() {
    let q = mod_p_quotient(&root_lattice(RootType::E6, -1), 3).unwrap();
    let case = FermatCase::new(3, 3, 1024).unwrap();
    let tower = Tower::new(3, 3).unwrap();
    let r = verify_main(&build_diagram(case, &tower).unwrap()).unwrap();
    assert_eq!(r.corners.bottom_left.invariant_factors.len(), q.quotient_dim());
    assert_eq!(r.corners.bottom_right.invariant_factors.len(), q.quotient_dim());
}
