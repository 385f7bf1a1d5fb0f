//! Degrees with a ratio-2 coefficient pair come from d² - 12k² = 1.

use sharpmap::constructions::pell_ratio_site;
use sharpmap::pell;

fn main() {
    let sols = pell::solutions(12, 5).unwrap();
    for s in &sols {
        println!("m = {}: d = {}, k = {}, d mod 4 = {}", s.index, s.d, s.k, pell::congruence_class(s.index).unwrap());
        assert!(s.satisfies_equation());
    }

    // The first two degrees, with the coefficient index where the ratio is 2.
    for d in [7u64, 97] {
        println!("d = {d}: ratio-2 pair at s = {}", pell_ratio_site(d).unwrap().unwrap());
    }

    let f61 = pell::fundamental_solution(61).unwrap();
    println!("\nfundamental solution for 61: ({}, {})", f61.d, f61.k);
}
