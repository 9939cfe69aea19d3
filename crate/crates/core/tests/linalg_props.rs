use cyclocover::linalg::{
    cokernel_invariants, hnf, kernel_basis, mod_p_rank, rank, smith_diagonal, snf, IntMatrix, Submodule,
};
use cyclocover::Int;
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
            .prop_map(|rows| IntMatrix::from_i64(&rows))
    })
}

/// Unimodular matrix as a product of elementary row operations.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for (i, j, k, swap) in ops {
            if swap {
                u.swap_rows(i, j);
            } else if i != j {
                for c in 0..n {
                    let v = &u[(j, c)] * &Int::from(k);
                    u[(i, c)] += &v;
                }
            }
        }
        u
    })
}

fn sub_of(ambient: usize, max_gens: usize) -> impl Strategy<Value = Submodule> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, ambient), 0..=max_gens).prop_map(move |gens| {
        Submodule::from_generators(ambient, gens.into_iter().map(|g| g.into_iter().map(Int::from).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_certificate(m in matrix(5, 5, 20)) {
        let s = snf(&m);
        prop_assert!(s.u.is_unimodular());
        prop_assert!(s.v.is_unimodular());
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        let k = s.d.nrows().min(s.d.ncols());
        for i in 0..s.d.nrows() {
            for j in 0..s.d.ncols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        for i in 0..k {
            prop_assert!(!s.d[(i, i)].is_negative());
            if i + 1 < k {
                prop_assert!(s.d[(i, i)].divides(&s.d[(i + 1, i + 1)]));
            }
        }
    }

    #[test]
    fn cokernel_is_invariant_under_unimodular_change(
        (m, u, v) in matrix(4, 4, 9).prop_flat_map(|m| {
            let (r, c) = (m.nrows(), m.ncols());
            (Just(m), unimodular(r), unimodular(c))
        })
    ) {
        prop_assert_eq!(cokernel_invariants(&u.mul(&m).mul(&v)), cokernel_invariants(&m));
        prop_assert_eq!(smith_diagonal(&u.mul(&m)), smith_diagonal(&m));
    }

    #[test]
    fn kernel_is_full_and_saturated(m in matrix(6, 4, 5)) {
        let k = kernel_basis(&m);
        prop_assert!(k.is_saturated());
        prop_assert!(k.basis().mul(&m).is_zero());
        prop_assert_eq!(k.rank() + rank(&m), m.nrows());
    }

    #[test]
    fn hermite_form_is_canonical((m, u) in matrix(4, 5, 9).prop_flat_map(|m| {
        let r = m.nrows();
        (Just(m), unimodular(r))
    })) {
        prop_assert_eq!(hnf(&u.mul(&m)), hnf(&m));
    }

    #[test]
    fn modular_law(a in sub_of(4, 3), b in sub_of(4, 3), c0 in sub_of(4, 3)) {
        // needs A inside C
        let c = c0.sum(&a).unwrap();
        let lhs = a.sum(&b).unwrap().intersect(&c).unwrap();
        let rhs = a.sum(&b.intersect(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn intersection_is_contained_and_maximal(a in sub_of(3, 3), b in sub_of(3, 3)) {
        let i = a.intersect(&b).unwrap();
        prop_assert!(a.contains_module(&i) && b.contains_module(&i));
        // rank(A + B) + rank(A & B) = rank A + rank B
        prop_assert_eq!(a.sum(&b).unwrap().rank() + i.rank(), a.rank() + b.rank());
    }

    #[test]
    fn quotient_order_is_index(a in sub_of(3, 4)) {
        let full = Submodule::full(3);
        let inv = full.quotient_invariants(&a).unwrap();
        if a.rank() == 3 {
            prop_assert_eq!(inv.order(), Some(a.basis().det().abs()));
        } else {
            prop_assert_eq!(inv.free_rank, 3 - a.rank());
        }
    }

    #[test]
    fn mod_p_rank_matches_elementary_divisors(m in matrix(4, 4, 12), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let diag = smith_diagonal(&m);
        let expected = diag.iter().filter(|x| !x.is_zero() && x.mod_u64(p) != 0).count();
        prop_assert_eq!(mod_p_rank(&m, p), expected);
    }
}
