//! The odd-degree sharp family `f_d` and its coefficients `K(r, s)`.

use sharpmap::families::{f, k_coefficient};

fn main() {
    for d in [1u32, 3, 5, 7, 9, 11] {
        let p = f(d).unwrap();
        println!("f_{d:<2} = {p}");
        assert!(p.is_in_h());
        assert_eq!(p.term_count(), (d as usize + 3) / 2);
    }

    let r = 10;
    let ks: Vec<String> = (1..=r).map(|s| k_coefficient(r, s).unwrap().to_string()).collect();
    println!("\nK({r}, s) for s = 1..{r}: {}", ks.join(", "));

    // Degree 201 is still instant; the restriction to x + y = 1 is exact.
    let big = f(201).unwrap();
    println!("f_201: {} terms, in H: {}", big.term_count(), big.is_in_h());
}
