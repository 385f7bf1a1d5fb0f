//! From a polynomial in H to a monomial map between spheres, checked
//! numerically.

use sharpmap::constructions::q;

fn main() {
    let p = q(97).unwrap().poly;
    let map = p.to_monomial_map().unwrap();
    println!("q_97 gives a map from C^2 to C^{}", map.len());
    for (e, c) in map.components().iter().take(3) {
        println!("  sqrt({c}) z^{:?}", e.as_slice());
    }
    let residual = map.check_sphere_numeric(1000, 42);
    println!("max | |f(z)|^2 - 1 | over 1000 points: {residual:e}");
}
