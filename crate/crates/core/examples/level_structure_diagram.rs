//! The square of coinvariant groups relating level d structures, for a few
//! cases. Pass `n d` to pick one.

use cyclocover::fermat::{build_diagram, verify_main, FermatCase, Tower};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let cases = match args.as_slice() {
        [n, d] => vec![(*n, *d)],
        _ => vec![(2, 3), (3, 3), (4, 3), (2, 6)],
    };
    for (n, d) in cases {
        let case = FermatCase::new(n, d, 1024).unwrap();
        let tower = Tower::new(d, n).unwrap();
        let diagram = build_diagram(case, &tower).unwrap();
        let r = verify_main(&diagram).unwrap();
        println!("n={n} d={d}");
        let c = &r.corners;
        println!(
            "  corners: top {} | {}, bottom {} | {}",
            c.top_left, c.top_right, c.bottom_left, c.bottom_right
        );
        println!(
            "  first map `{}` onto: {}, kernel {} of order {}",
            r.first_map, r.first_surjective, r.first_kernel,
            r.first_kernel_order.map_or("infinite".to_string(), |o| o.to_string())
        );
        println!("  square commutes: {}, second map injective: {}", r.factorization_commutes, r.second_injective);
        if let Some(p) = &r.prime_dims {
            println!("  over F_{d}: corners {} and {}, image {}", p.bottom_left, p.bottom_right, p.image);
        }
    }
}
