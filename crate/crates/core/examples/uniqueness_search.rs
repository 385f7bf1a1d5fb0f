//! Exhaustive uniqueness search at a given odd degree.
//!
//! ```text
//! cargo run --release --example uniqueness_search -- 7
//! ```

use sharpmap::search::{uniqueness_status, Budget};

fn main() {
    let d: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let budget = Budget::from_env();
    let report = uniqueness_status(d, &budget).expect("valid degree");
    println!("degree {d}: {:?}", report.status);
    if let Some(cert) = &report.certificate {
        println!(
            "  minimal terms {}, {} class(es), {} distinct, exhaustive {}",
            cert.min_terms, report.classes, report.distinct, cert.exhaustive
        );
        for p in &cert.representatives {
            println!("  {p}");
        }
        println!(
            "  {} supports examined, {} pruned, {} exact checks, {} ms",
            cert.stats.supports_examined, cert.stats.pruned, cert.stats.exact_checks, cert.stats.elapsed_ms
        );
    }
}
