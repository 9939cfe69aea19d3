//! The E6 root lattice with its negative definite form, reduced mod 3.

use cyclocover::lattice::{
    mod_p_quotient, quadratic_refinement, root_lattice, roots, weyl_image_order, RootType, DEFAULT_ENUMERATION_CAP,
};

fn main() {
    let e6 = root_lattice(RootType::E6, -1);
    println!("roots: {}", roots(&e6).len());
    println!("discriminant group: {}", e6.discriminant_group());

    let q = mod_p_quotient(&e6, 3).unwrap();
    println!(
        "mod 3: radical {:?} (dim {}), quotient dim {}, nondegenerate {}",
        q.radical,
        q.radical_dim,
        q.quotient_dim(),
        q.is_nondegenerate()
    );

    let w = weyl_image_order(&e6, 3, DEFAULT_ENUMERATION_CAP).unwrap();
    println!("|W(E6)| = {}, image mod 3 = {}, faithful {}", w.group_order, w.image_order, w.faithful);

    println!("quadratic refinement for n = 3: {:?}", quadratic_refinement(&e6, 3).unwrap());
}
