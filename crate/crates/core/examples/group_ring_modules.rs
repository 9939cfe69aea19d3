//! The two natural maps attached to a module over a cyclic group ring, on the
//! regular, trivial and augmentation-ideal modules.

use cyclocover::gmodule::EquivariantModule;

fn main() {
    for d in [2usize, 3, 6] {
        println!("d = {d}");
        for (name, m) in [
            ("regular", EquivariantModule::regular(d)),
            ("trivial", EquivariantModule::trivial(d)),
            ("augmentation ideal", EquivariantModule::augmentation_ideal(d)),
        ] {
            let r = m.r_map();
            let s = m.s_map(1).unwrap();
            println!(
                "  {name:>18}: coinvariants {}, r: {} -> {} (iso {}), s: {} -> {}",
                m.coinvariants().target().invariants(),
                r.source().invariants(),
                r.target().invariants(),
                r.is_isomorphism(),
                s.source().invariants(),
                s.target().invariants(),
            );
        }
    }
}
