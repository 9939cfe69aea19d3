//! The complex built from the duality maps of successive levels, and its
//! homology over Z and mod d.

use cyclocover::fermat::{verify_complex, FermatCase, Tower};

fn main() {
    for n in 1..=3 {
        for d in [2, 3] {
            let case = FermatCase::new(n, d, 1024).unwrap();
            let tower = Tower::new(d, n).unwrap();
            let r = verify_complex(case, &tower).unwrap();
            let h: Vec<String> = r.homology.iter().map(|a| a.to_string()).collect();
            let hd: Vec<String> = r.homology_mod_d.iter().map(|a| a.to_string()).collect();
            println!("n={n} d={d}: ranks {:?}, D^2 = 0: {}", r.ranks, r.squares_to_zero);
            println!("  homology      {}", h.join(" | "));
            println!("  homology mod d {}", hd.join(" | "));
        }
    }
}
