//! h_m = f_{4m-1} - (4m-1) x^{2m-1} y (f_{2m-2} - 1) and its coefficients.

use sharpmap::constructions::{c_closed, c_sum, h, positivity_sides};

fn main() {
    for m in 2..=4 {
        println!("h_{m} = {}", h(m).unwrap().poly);
    }

    let m = 6;
    println!("\n2^(4m-1) times the coefficients of h_{m}:");
    for s in 1..=2 * m - 1 {
        let closed = c_closed(m, s).unwrap();
        assert_eq!(closed, c_sum(m, s).unwrap());
        println!("  s = {s:2}: {closed}");
    }

    let (lhs, rhs) = positivity_sides(50, 20).unwrap();
    println!("\nm = 50, s = 20: {} digits vs {} digits", lhs.to_string().len(), rhs.to_string().len());
}
