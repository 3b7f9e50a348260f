//! Exact-cover search for small decompositions, and the frozen base systems
//! of orders 9, 12 and 13 it produced.
//!
//! Columns are the target's edges and rows are the suns it contains. Each sun
//! is enumerated once: triangle listed in increasing order, pendants following
//! their triangle vertex. Branching always takes the first column with the
//! fewest rows, so results are reproducible.
//!
//! Every sun's triangle contains an edge with both ends cyclic, so a branch
//! dies once fewer such edges remain uncovered than suns are still needed.
//! At the root this is the counting condition `u >= 2n/5 + 1`.
//!
//! Search times are heavy-tailed in the row order, so the search restarts:
//! attempt 0 uses the enumeration order, attempt `i > 0` a ChaCha8 shuffle
//! seeded with `i`, each under a step budget following the Luby sequence. An
//! attempt that finishes inside its budget without a cover has exhausted the
//! whole space, which proves infeasibility.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::design::{HoleGraph, Sun, Vertex};
use crate::error::{Error, Result};
use crate::verify::{vertex_id, Block, Decomposition};

/// Result of [`brute_force_decompose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<Sun>),
    /// The search space was exhausted without a cover.
    Infeasible,
    Timeout,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

/// Dancing-links exact cover over a 0/1 matrix given row by row.
struct Dlx {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    row_of: Vec<usize>,
    size: Vec<usize>,
    /// Columns every row meets at least once, and how many are uncovered.
    scarce: Vec<bool>,
    scarce_left: usize,
    columns_left: usize,
    bounded: bool,
    row_width: usize,
    solution: Vec<usize>,
    deadline: Instant,
    steps: u64,
    budget: u64,
    stopped: bool,
}

impl Dlx {
    fn new(
        columns: usize,
        rows: &[Vec<usize>],
        scarce: &[bool],
        deadline: Instant,
        budget: u64,
    ) -> Dlx {
        let header = columns + 1;
        let mut d = Dlx {
            left: (0..header)
                .map(|i| if i == 0 { columns } else { i - 1 })
                .collect(),
            right: (0..header)
                .map(|i| if i == columns { 0 } else { i + 1 })
                .collect(),
            up: (0..header).collect(),
            down: (0..header).collect(),
            column: (0..header).collect(),
            row_of: vec![usize::MAX; header],
            size: vec![0; header],
            scarce: std::iter::once(false)
                .chain(scarce.iter().copied())
                .collect(),
            scarce_left: scarce.iter().filter(|&&x| x).count(),
            columns_left: columns,
            bounded: scarce.iter().any(|&x| x),
            row_width: rows.first().map_or(1, Vec::len),
            solution: Vec::new(),
            deadline,
            steps: 0,
            budget,
            stopped: false,
        };
        for (r, cols) in rows.iter().enumerate() {
            let mut first = None;
            for &c in cols {
                let col = c + 1;
                let node = d.up.len();
                d.column.push(col);
                d.row_of.push(r);
                d.up.push(d.up[col]);
                d.down.push(col);
                let above = d.up[col];
                d.down[above] = node;
                d.up[col] = node;
                d.size[col] += 1;
                match first {
                    None => {
                        d.left.push(node);
                        d.right.push(node);
                        first = Some(node);
                    }
                    Some(f) => {
                        let last = d.left[f];
                        d.left.push(last);
                        d.right.push(f);
                        d.right[last] = node;
                        d.left[f] = node;
                    }
                }
            }
        }
        d
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        self.columns_left -= 1;
        self.scarce_left -= usize::from(self.scarce[c]);
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                let col = self.column[j];
                self.size[col] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
        self.columns_left += 1;
        self.scarce_left += usize::from(self.scarce[c]);
    }

    /// True when a cover was found; the chosen rows are in `solution`.
    fn search(&mut self) -> bool {
        if self.right[0] == 0 {
            return true;
        }
        self.steps += 1;
        if self.steps > self.budget
            || (self.steps.is_multiple_of(1024) && Instant::now() >= self.deadline)
        {
            self.stopped = true;
        }
        if self.stopped || (self.bounded && self.scarce_left * self.row_width < self.columns_left) {
            return false;
        }
        let mut best = self.right[0];
        let mut c = best;
        while c != 0 {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        if self.size[best] == 0 {
            return false;
        }
        self.cover(best);
        let mut r = self.down[best];
        while r != best {
            self.solution.push(self.row_of[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            if self.search() {
                return true;
            }
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            self.solution.pop();
            if self.stopped {
                break;
            }
            r = self.down[r];
        }
        self.uncover(best);
        false
    }
}

/// Every sun contained in `target`, each automorphism class once.
pub fn candidate_suns(target: &HoleGraph) -> Vec<Sun> {
    let u = target.u();
    let vertices: Vec<Vertex> = (0..u)
        .map(Vertex::Cyclic)
        .chain((1..=target.t()).map(Vertex::Infinity))
        .collect();
    let n = vertices.len();
    let mut adj = vec![vec![false; n]; n];
    for e in target.edges() {
        let (a, b) = e.endpoints();
        let (a, b) = (vertex_id(a, u) as usize, vertex_id(b, u) as usize);
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] {
                continue;
            }
            for c in b + 1..n {
                if !adj[a][c] || !adj[b][c] {
                    continue;
                }
                for d in (0..n).filter(|&x| adj[a][x] && x != b && x != c) {
                    for e in (0..n).filter(|&x| adj[b][x] && x != a && x != c && x != d) {
                        for f in
                            (0..n).filter(|&x| adj[c][x] && x != a && x != b && x != d && x != e)
                        {
                            let v = [a, b, c, d, e, f].map(|i| vertices[i]);
                            out.push(Sun::new(v).expect("distinct by construction"));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Search settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub limit: Duration,
    /// Prune branches with fewer uncovered cyclic edges than suns still
    /// needed.
    pub cyclic_edge_bound: bool,
}

impl SearchOptions {
    pub fn new(limit: Duration) -> SearchOptions {
        SearchOptions {
            limit,
            cyclic_edge_bound: true,
        }
    }
}

/// Searches for a partition of `target` into suns within `limit`.
pub fn brute_force_decompose(target: &HoleGraph, limit: Duration) -> SearchOutcome {
    brute_force_search(target, &SearchOptions::new(limit))
}

pub fn brute_force_search(target: &HoleGraph, options: &SearchOptions) -> SearchOutcome {
    let deadline = Instant::now() + options.limit;
    let edges: Vec<_> = target.edges().into_iter().collect();
    if edges.is_empty() {
        return SearchOutcome::Found(Vec::new());
    }
    if edges.len() % 6 != 0 {
        return SearchOutcome::Infeasible;
    }
    let index: HashMap<_, _> = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let suns = candidate_suns(target);
    let rows: Vec<Vec<usize>> = suns
        .iter()
        .map(|s| s.edges().iter().map(|e| index[e]).collect())
        .collect();
    let scarce: Vec<bool> = edges
        .iter()
        .map(|e| {
            let (a, b) = e.endpoints();
            options.cyclic_edge_bound && !a.is_infinity() && !b.is_infinity()
        })
        .collect();
    let mut order: Vec<usize> = (0..rows.len()).collect();
    for attempt in 0u64.. {
        if attempt > 0 {
            if Instant::now() >= deadline {
                break;
            }
            order = (0..rows.len()).collect();
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(attempt));
        }
        let ordered: Vec<Vec<usize>> = order.iter().map(|&r| rows[r].clone()).collect();
        let budget = STEP_UNIT * luby(attempt + 1);
        let mut dlx = Dlx::new(edges.len(), &ordered, &scarce, deadline, budget);
        if dlx.search() {
            return SearchOutcome::Found(dlx.solution.iter().map(|&r| suns[order[r]]).collect());
        }
        if !dlx.stopped {
            return SearchOutcome::Infeasible;
        }
    }
    SearchOutcome::Timeout
}

const STEP_UNIT: u64 = 4096;

/// The Luby restart sequence 1, 1, 2, 1, 1, 2, 4, ... (1-indexed).
fn luby(i: u64) -> u64 {
    let mut k = 1;
    while (1u64 << k) - 1 < i {
        k += 1;
    }
    if (1u64 << k) - 1 == i {
        1 << (k - 1)
    } else {
        luby(i - (1 << (k - 1)) + 1)
    }
}

/// Searches for a 3-sun system of order `m`.
pub fn brute_force_complete(m: u32, limit: Duration) -> SearchOutcome {
    brute_force_decompose(&HoleGraph::full(m, 0), limit)
}

/// Searches for a decomposition of `K_{n+u} \ K_n`.
pub fn brute_force_hole(n: u32, u: u32, limit: Duration) -> SearchOutcome {
    brute_force_decompose(&HoleGraph::full(u, n), limit)
}

// First covers found by brute_force_complete, canonicalized.
const BASE_9: [Block; 6] = [
    [0, 1, 2, 3, 4, 5],
    [0, 4, 5, 6, 2, 1],
    [1, 3, 7, 6, 8, 0],
    [2, 6, 8, 7, 4, 0],
    [3, 5, 6, 2, 8, 7],
    [4, 7, 8, 3, 5, 1],
];

const BASE_12: [Block; 11] = [
    [0, 1, 2, 3, 4, 5],
    [0, 4, 5, 6, 2, 1],
    [0, 7, 8, 9, 1, 2],
    [1, 3, 10, 6, 2, 0],
    [1, 8, 9, 11, 3, 2],
    [2, 6, 11, 7, 3, 0],
    [3, 5, 7, 9, 8, 10],
    [4, 6, 10, 3, 5, 2],
    [4, 8, 11, 7, 6, 3],
    [5, 9, 10, 11, 6, 8],
    [7, 9, 11, 6, 4, 10],
];

const BASE_13: [Block; 13] = [
    [0, 1, 2, 3, 4, 5],
    [0, 4, 5, 6, 2, 1],
    [0, 7, 8, 9, 1, 2],
    [0, 10, 11, 12, 1, 2],
    [1, 3, 6, 8, 2, 4],
    [1, 9, 11, 12, 2, 3],
    [2, 6, 7, 10, 5, 3],
    [3, 5, 12, 8, 9, 2],
    [4, 7, 11, 3, 5, 6],
    [4, 9, 12, 10, 3, 8],
    [5, 8, 10, 11, 4, 3],
    [6, 8, 9, 12, 11, 10],
    [7, 10, 12, 9, 6, 11],
];

/// The frozen 3-sun system of order 9, 12 or 13.
pub fn base_system(n: u32) -> Result<Decomposition> {
    let blocks: Vec<Block> = match n {
        9 => BASE_9.to_vec(),
        12 => BASE_12.to_vec(),
        13 => BASE_13.to_vec(),
        _ => return Err(Error::UnsupportedBase(n)),
    };
    let d = Decomposition {
        m: n,
        hole: 0,
        blocks,
    };
    d.verify().into_result()?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LIMIT: Duration = Duration::from_secs(60);

    fn frozen_matches_search(m: u32) {
        let SearchOutcome::Found(suns) = brute_force_complete(m, LIMIT) else {
            panic!("no cover of K_{m}");
        };
        let found = Decomposition::from_suns(m, 0, &suns).canonicalized();
        assert_eq!(found, base_system(m).unwrap());
    }

    #[test]
    fn fixtures_reproduce() {
        frozen_matches_search(9);
        frozen_matches_search(12);
        frozen_matches_search(13);
        assert_eq!(base_system(10), Err(Error::UnsupportedBase(10)));
    }

    #[test]
    fn luby_sequence() {
        let seq: Vec<u64> = (1..=15).map(luby).collect();
        assert_eq!(seq, [1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8]);
    }

    #[test]
    fn infeasible_targets() {
        assert_eq!(brute_force_complete(4, LIMIT), SearchOutcome::Infeasible);
        assert_eq!(brute_force_hole(9, 3, LIMIT), SearchOutcome::Infeasible);
        let plain = SearchOptions {
            limit: LIMIT,
            cyclic_edge_bound: false,
        };
        let g = HoleGraph::full(3, 9);
        assert_eq!(brute_force_search(&g, &plain), SearchOutcome::Infeasible);
        assert_eq!(
            brute_force_complete(0, LIMIT),
            SearchOutcome::Found(Vec::new())
        );
    }

    #[test]
    fn small_hole_cover_verifies() {
        let g = HoleGraph::full(7, 9);
        let SearchOutcome::Found(suns) = brute_force_decompose(&g, LIMIT) else {
            panic!("no cover");
        };
        assert_eq!(suns.len(), 14);
        assert!(crate::verify::verify_partition(&suns, &g).ok);
    }

    #[test]
    fn alpha8_leave_base_is_found_by_search() {
        // a cover of <Z_21, {3,5,6,7,8,10}> by one orbit: search base blocks
        // with one vertex at 0 and check the frozen block is among them
        let u = 21;
        let want = crate::lemmas::leave_alpha8_s1(u).unwrap();
        let g = want.graph.clone();
        let found: Vec<Sun> = candidate_suns(&g)
            .into_iter()
            .filter(|s| {
                s.vertices()[0] == Vertex::Cyclic(0)
                    && crate::verify::verify_partition(&crate::design::orbit(s, u), &g).ok
            })
            .map(|s| s.canonical())
            .collect();
        let frozen = Sun::new(crate::lemmas::LEAVE_ALPHA8_S1_BASE.map(|x| Vertex::cyclic(x, u)))
            .unwrap()
            .canonical();
        assert!(found.contains(&frozen), "search found {found:?}");
    }
}
