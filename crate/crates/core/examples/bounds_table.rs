use sun_systems::planner::{
    counting_feasible, hole_residues, is_admissible_order, min_embedding_order, Admissibility,
};

fn main() {
    println!(
        "{:>4} {:>6} {:>10}  residues of m - n",
        "n", "m_min", "lhs at u"
    );
    for n in (9..=120).filter(|&n| is_admissible_order(n) == Admissibility::Admissible) {
        let m = min_embedding_order(n).expect("admissible");
        let lhs = counting_feasible(n, m - n).lhs;
        let below = counting_feasible(n, m - n - 1).lhs;
        println!(
            "{n:>4} {m:>6} {lhs:>10}  {:?}  (one less: {below})",
            hole_residues(n).expect("admissible")
        );
    }
}
