//! Every N >= T(n) is the number of terms of some V^k W^j s.

use sharpmap::gaps::{decompose_target, frobenius, gap_witness, t};

fn main() {
    for n in 2..=5 {
        println!("n = {n}: F(n, n-1) = {}, T(n) = {}", frobenius(n, n - 1).unwrap(), t(n));
    }

    let w = gap_witness(3, 8).unwrap();
    println!("\nn = 3, N = 8: j = {}, k = {}\n  {}", w.j, w.k, w.poly);
    let map = w.poly.to_monomial_map().unwrap();
    println!("  components independent of constants: {}", map.components_independent_of_constants());

    match decompose_target(4, 9) {
        Ok(jk) => println!("n = 4, N = 9: {jk:?}"),
        Err(e) => println!("n = 4, N = 9: {e}"),
    }
    println!("n = 1, N = 4: {}", gap_witness(1, 4).unwrap().poly);
}
