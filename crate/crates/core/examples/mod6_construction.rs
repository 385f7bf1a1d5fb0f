//! Degrees 6k + 1 via the quartic line identity, and three sharp degree-7
//! polynomials.

use sharpmap::constructions::{mod6, mod6_c, q};
use sharpmap::families::f;

fn main() {
    let seven = [f(7).unwrap(), q(7).unwrap().poly, mod6(1).unwrap().poly];
    for p in &seven {
        println!("{p}");
    }
    for (i, a) in seven.iter().enumerate() {
        for b in &seven[..i] {
            assert!(!a.equivalent(b).unwrap());
        }
    }

    for k in 1..=5 {
        let c = mod6(k).unwrap();
        println!("k = {k}: degree {}, {} terms, c = {}", c.degree, c.poly.term_count(), mod6_c(k).unwrap());
    }
}
