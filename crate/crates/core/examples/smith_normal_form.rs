//! Smith normal form, cokernels and reduction mod p of an integer matrix.

use cyclocover::lattice::{cartan_matrix, RootType};
use cyclocover::linalg::{cokernel_invariants, kernel_basis, mod_p_rank, snf, IntMatrix};

fn main() {
    let m = IntMatrix::from_i64(&[vec![2, 4], vec![6, 8]]);
    let s = snf(&m);
    println!("M = {m:?}");
    println!("D = {:?}", s.d);
    assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
    println!("U M V = D, det U = {}, det V = {}", s.u.det(), s.v.det());

    let e6 = cartan_matrix(RootType::E6);
    println!("coker(Cartan E6) = {}", cokernel_invariants(&e6));
    println!("rank of Cartan E6 mod 3 = {}", mod_p_rank(&e6, 3));

    let singular = IntMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
    println!("left kernel of {singular:?}: {:?}", kernel_basis(&singular).basis());
}
