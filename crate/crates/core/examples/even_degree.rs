//! Even degree 2k: k inequivalent sharp polynomials with k + 2 terms.

use sharpmap::families::even_family;
use sharpmap::search::{minimal_terms, Budget};

fn main() {
    for k in 1..=4 {
        println!("degree {}:", 2 * k);
        for m in even_family(k).unwrap() {
            println!("  {}", m.poly);
        }
    }

    // The exhaustive search also finds (x + y)^2 at degree 2.
    for d in [2, 4] {
        let mt = minimal_terms(d, Some(2), &Budget::unlimited()).unwrap();
        println!("\ndegree {d}: minimal term count {}, none below (searched {:?})", mt.n_min, mt.empty_below);
        for p in mt.enumeration.polynomials() {
            println!("  {p}");
        }
    }
}
