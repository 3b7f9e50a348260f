//! Build a 3-sun system of a given order and print a summary.
//!
//! ```bash
//! cargo run --example construct_system -- 61
//! ```

use sun_systems::planner::recursion_base;
use sun_systems::{construct_3ss, Certificate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(37);
    let system = construct_3ss(m)?;
    let report = system.verify();
    println!(
        "K_{m}: {} blocks, {}",
        system.blocks.len(),
        report.summary()
    );
    if let Some(n) = recursion_base(m) {
        println!("built around a system of order {n} on ids {}..{m}", m - n);
    }
    let cert = Certificate::from_decomposition(&system);
    for line in cert.to_json().lines().take(8) {
        println!("{line}");
    }
    println!("  ...");
    Ok(())
}
