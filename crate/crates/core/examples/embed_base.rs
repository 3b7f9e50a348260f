//! Embed the 9-point system into every admissible order up to 60 and show
//! that orders below the bound are refused.

use sun_systems::oracle::base_system;
use sun_systems::planner::{is_admissible_order, min_embedding_order, Admissibility};
use sun_systems::{embed, Error};

fn main() -> Result<(), Error> {
    let base = base_system(9)?;
    println!("least order above 9: {}", min_embedding_order(9)?);
    for m in 10..=60 {
        if is_admissible_order(m) != Admissibility::Admissible {
            continue;
        }
        match embed(&base, m) {
            Ok(d) => {
                let u = m - 9;
                let kept = d
                    .blocks
                    .iter()
                    .filter(|b| b.iter().all(|&v| v >= u))
                    .count();
                println!(
                    "m = {m:>2}: {:>3} blocks, {kept} on the embedded points",
                    d.blocks.len()
                );
            }
            Err(e @ Error::BoundViolated { .. }) => println!("m = {m:>2}: {e}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
