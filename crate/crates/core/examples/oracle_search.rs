//! Exact-cover search on small targets, with and without a hole.

use std::time::{Duration, Instant};

use sun_systems::design::HoleGraph;
use sun_systems::oracle::{brute_force_search, SearchOptions};
use sun_systems::planner::counting_feasible;
use sun_systems::SearchOutcome;

fn main() {
    let limit = Duration::from_secs(30);
    let targets = [(9, 0), (12, 0), (13, 0), (3, 9), (7, 9)];
    for (u, n) in targets {
        let g = HoleGraph::full(u, n);
        let count = counting_feasible(n, u);
        for bound in [true, false] {
            let options = SearchOptions {
                limit,
                cyclic_edge_bound: bound,
            };
            let start = Instant::now();
            let outcome = brute_force_search(&g, &options);
            let verdict = match &outcome {
                SearchOutcome::Found(suns) => format!("found {} suns", suns.len()),
                SearchOutcome::Infeasible => "no cover".to_string(),
                SearchOutcome::Timeout => "timed out".to_string(),
            };
            println!(
                "K_{} \\ K_{n} ({} edges, counting lhs {:>4}, bound {}): {verdict} in {:.2?}",
                u + n,
                g.edge_count(),
                count.lhs,
                if bound { "on " } else { "off" },
                start.elapsed()
            );
        }
    }
}
