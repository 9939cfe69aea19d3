//! Transvections in vanishing vectors, and the order-d reflections on the
//! standard module of rank d - 1.

use cyclocover::lattice::{
    matrix_order, pham_reflection, pl_transvection, root_lattice, HermitianModule, LatticeWithForm, Parity, RootType,
};
use cyclocover::linalg::{vec_from_i64, IntMatrix};

fn main() {
    let e6 = root_lattice(RootType::E6, -1);
    let t = pl_transvection(&e6, &e6.vanishing()[0], 3).unwrap();
    println!("E6, n = 3: order {:?}, preserves form {}", matrix_order(&t, 10), e6.preserved_by(&t));

    let plane = LatticeWithForm::new(IntMatrix::from_i64(&[vec![0, 1], vec![-1, 0]]), Parity::Antisymmetric).unwrap();
    let t = pl_transvection(&plane, &vec_from_i64(&[1, 0]), 2).unwrap();
    println!("symplectic plane, n = 2: T = {t:?}, finite order: {:?}", matrix_order(&t, 50));

    for d in 2..=5 {
        let h = HermitianModule::standard(d, 2);
        let t = pham_reflection(&h, &h.generators()[0]).unwrap();
        println!(
            "d = {d}: order {:?}, preserves hermitian form {}, <delta, delta> = {:?}",
            matrix_order(&t, 2 * d),
            h.preserves_form(&t),
            h.hermitian_gram()[0][0]
        );
    }
}
