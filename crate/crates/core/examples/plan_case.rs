//! Show how `K_{n+u} \ K_n` is split into generator calls.
//!
//! ```bash
//! cargo run --example plan_case -- 25 23
//! ```

use sun_systems::build_plan;
use sun_systems::planner::execute_plan;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>());
    let n = args.next().transpose()?.unwrap_or(25);
    let u = args.next().transpose()?.unwrap_or(23);

    let plan = build_plan(n, u)?;
    let p = plan.params;
    println!(
        "n = {n}, u = {u}: k = {}, r = {}, c = {}, s = {}, l = {}",
        p.k, p.r, p.c, p.s, p.l
    );
    println!("case {}", plan.case);
    for task in &plan.tasks {
        println!("  {task}");
    }
    plan.validate()?;
    let d = execute_plan(&plan)?;
    println!("{} blocks, {}", d.blocks.len(), d.verify().summary());
    Ok(())
}
