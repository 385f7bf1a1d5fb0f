//! q_d: a second sharp polynomial at each Pell degree.
//!
//! ```text
//! cargo run --release --example pell_construction -- 1351
//! ```

use sharpmap::constructions::q;
use sharpmap::families::f;

fn main() {
    let d: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let c = q(d).expect("d must come from d^2 - 12k^2 = 1");
    if d < 20 {
        println!("f_{d} = {}", f(d).unwrap());
        println!("q_{d} = {}", c.poly);
    }
    for step in &c.steps {
        println!("{}", serde_json::to_string(&step.to_json_value()).unwrap());
    }
    println!(
        "q_{d}: {} terms, in H: {}, equivalent to f_{d}: {}",
        c.poly.term_count(),
        c.poly.is_in_h(),
        c.poly.equivalent(&f(d).unwrap()).unwrap()
    );
}
