//! p_n(d) from the closed form and from the recurrence.

use cyclocover::fermat::rank_table;

fn main() {
    let t = rank_table(6, 6);
    println!("{:>3} {:>3} {:>8} {:>8}  consistent", "d", "n", "closed", "rec");
    for e in &t.entries {
        println!("{:>3} {:>3} {:>8} {:>8}  {}", e.d, e.n, e.closed_form, e.recurrence, e.consistent);
    }
    let h = &t.half_ranks_d3;
    println!("half ranks for d = 3: {:?}", h.computed);
    println!("quoted list:          {:?} (differs at {:?})", h.printed, h.mismatches);
}
