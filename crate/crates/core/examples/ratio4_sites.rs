//! Coefficient pairs in ratio 4 and the degree-11 sharp polynomial they give.

use sharpmap::constructions::{ratio4_construct, ratio4_sites, ratio4_sites_missing_from_pell};
use sharpmap::families::k_coefficient;
use sharpmap::pell::generalized_solutions;

fn main() {
    for (r, s) in ratio4_sites(200) {
        let k: Vec<String> = (s..=s + 2).map(|t| k_coefficient(r, t).unwrap().to_string()).collect();
        println!("site (r, s) = ({r}, {s}), degree {}, K = {}", 2 * r + 1, k.join(", "));
    }
    assert!(ratio4_sites_missing_from_pell(200).is_empty());

    let bs: Vec<u64> = generalized_solutions(8, -7, 64).unwrap().iter().map(|g| g.b).collect();
    println!("a^2 - 8b^2 = -7, b <= 64: b = {bs:?}");

    println!("\n{}", ratio4_construct(5, 1).unwrap().poly);
}
