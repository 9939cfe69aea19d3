//! The ideal generated by (y_0 - 1)(y_1 - y_0)...(y_n - y_{n-1}), its
//! invariant part, and the duality map given by multiplication by 1 - y_n.

use cyclocover::fermat::{invariants_two_ways, pham_module, primitive_pair, verify_compare, FermatCase, Tower};

fn main() {
    for (n, d) in [(1, 3), (2, 3), (2, 4), (3, 2)] {
        let case = FermatCase::new(n, d, 1024).unwrap();
        let tower = Tower::new(d, n).unwrap();
        let pham = pham_module(case).unwrap();
        let inv = invariants_two_ways(case, &tower).unwrap();
        let pair = primitive_pair(case, &tower).unwrap();
        let cmp = verify_compare(case, &pair).unwrap();
        println!(
            "n={n} d={d}: rank {} (expected {}), homology {}, invariants rank {} ({}), kernel {}, cokernel {}",
            pham.rank(),
            case.p(n as isize) + case.p(n as isize - 1),
            pair.homology.invariants(),
            inv.fixed_rank,
            if inv.passed { "two routes agree" } else { "routes differ" },
            cmp.kernel,
            cmp.cokernel,
        );
    }
}
