//! Arithmetic in Z[y_0, ..., y_{m-1}] / (y_i^d - 1).

use cyclocover::group_ring::{ideal_basis, GroupRingElement, RingShape};

fn main() {
    let shape = RingShape::new(3, 2).unwrap();
    let phi = GroupRingElement::phi(shape, 1).unwrap();
    let u0 = GroupRingElement::u(shape, 0).unwrap();
    println!("{shape}: rank {}", shape.rank());
    println!("phi_1 = {phi:?}");
    println!("u_0 = {u0:?}");
    println!("phi_1 * u_0 = {:?}", phi.mul(&u0).unwrap());
    println!("augmentation of phi_1 = {}", phi.augmentation());
    println!("conjugate of phi_1 = {:?}", phi.conj());

    let ideal = ideal_basis(shape, &[phi]).unwrap();
    println!("rank of the ideal generated by phi_1: {}", ideal.rank());
}
