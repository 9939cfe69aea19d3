//! The E7 root lattice modulo 2: a one-dimensional radical, a six-dimensional
//! symplectic quotient, and the image of the Weyl group on it.

use cyclocover::lattice::{
    mod_p_quotient, root_lattice, symplectic_group_order, weyl_image_order, RootType, DEFAULT_ENUMERATION_CAP,
};

fn main() {
    let e7 = root_lattice(RootType::E7, 1);
    println!("discriminant group: {:?}", e7.discriminant_group().invariant_factors);

    let q = mod_p_quotient(&e7, 2).expect("2 is prime");
    println!(
        "mod 2: radical dim {}, quotient dim {}, alternating {}, nondegenerate {}",
        q.radical_dim,
        q.quotient_dim(),
        q.is_alternating(),
        q.is_nondegenerate()
    );

    let w = weyl_image_order(&e7, 2, DEFAULT_ENUMERATION_CAP).expect("within the enumeration cap");
    println!("|W(E7)| = {}", w.group_order);
    println!("image on the quotient: {}", w.image_order);
    println!("|Sp6(F2)| = {}", symplectic_group_order(3, 2));
    println!("faithful: {}", w.faithful);
}
