//! Vertices, edges and 3-suns over `Z_u` extended by infinity points, together
//! with the difference arithmetic used by every construction in the crate.
//!
//! A graph `<Z_u ∪ H, D>` has the cyclic points `0..u`, the infinity points of
//! `H`, every edge `{i, j}` of `Z_u` whose difference `|i - j|_u` lies in `D`,
//! and every edge joining an infinity point to a cyclic point.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A point of `Z_u ∪ H`.
///
/// The derived ordering puts every cyclic point before every infinity point,
/// and orders each sort by index. Edge and certificate canonical forms rely on
/// this.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Cyclic(u32),
    Infinity(u32),
}

impl Vertex {
    /// The cyclic point `i mod u`.
    pub fn cyclic(i: i64, u: u32) -> Vertex {
        assert!(u > 0, "Z_0 has no points");
        Vertex::Cyclic(i.rem_euclid(i64::from(u)) as u32)
    }

    /// The infinity point `∞_k`, `k >= 1`.
    pub fn infinity(k: u32) -> Vertex {
        assert!(k >= 1, "infinity labels start at 1");
        Vertex::Infinity(k)
    }

    pub fn is_infinity(self) -> bool {
        matches!(self, Vertex::Infinity(_))
    }

    /// Translation by `i`: cyclic points shift mod `u`, infinity points are fixed.
    pub fn shift(self, i: i64, u: u32) -> Vertex {
        match self {
            Vertex::Cyclic(x) => Vertex::cyclic(i64::from(x) + i, u),
            inf => inf,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Cyclic(i) => write!(f, "{i}"),
            Vertex::Infinity(k) => write!(f, "∞{k}"),
        }
    }
}

/// An unordered pair of distinct vertices, stored smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: b, hi: a }),
            std::cmp::Ordering::Equal => Err(Error::InvalidEdge(format!("{a}-{b}"))),
        }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    /// The difference class of an edge inside `Z_u`, or `None` for an edge
    /// touching an infinity point.
    pub fn difference(self, u: u32) -> Option<u32> {
        match (self.lo, self.hi) {
            (Vertex::Cyclic(i), Vertex::Cyclic(j)) => canonical_difference(i, j, u).ok(),
            _ => None,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// The 3-sun `(a, b, c; d, e, f)`: triangle `(a, b, c)` with pendant edges
/// `{a, d}`, `{b, e}`, `{c, f}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sun([Vertex; 6]);

/// The six ways to list a sun's triangle, pendants following their vertex.
const TRIANGLE_ORDERS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 2, 0],
    [2, 0, 1],
    [1, 0, 2],
    [0, 2, 1],
    [2, 1, 0],
];

impl Sun {
    pub fn new(vertices: [Vertex; 6]) -> Result<Sun> {
        for i in 0..6 {
            for j in (i + 1)..6 {
                if vertices[i] == vertices[j] {
                    return Err(Error::DegenerateSun(Sun(vertices).to_string()));
                }
            }
        }
        Ok(Sun(vertices))
    }

    pub fn vertices(&self) -> &[Vertex; 6] {
        &self.0
    }

    pub fn triangle(&self) -> [Vertex; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn pendants(&self) -> [Vertex; 3] {
        [self.0[3], self.0[4], self.0[5]]
    }

    /// `{ab, bc, ca, ad, be, cf}` in canonical form.
    pub fn edges(&self) -> [Edge; 6] {
        let [a, b, c, d, e, f] = self.0;
        // vertices are pairwise distinct by construction
        [
            Edge::new(a, b).expect("distinct"),
            Edge::new(b, c).expect("distinct"),
            Edge::new(c, a).expect("distinct"),
            Edge::new(a, d).expect("distinct"),
            Edge::new(b, e).expect("distinct"),
            Edge::new(c, f).expect("distinct"),
        ]
    }

    /// Applies `f` to every vertex. Fails if the image is degenerate.
    pub fn map(&self, mut f: impl FnMut(Vertex) -> Vertex) -> Result<Sun> {
        Sun::new(self.0.map(&mut f))
    }

    /// The representative of this sun's automorphism class: the
    /// lexicographically smallest listing over all orderings of the triangle.
    pub fn canonical(&self) -> Sun {
        TRIANGLE_ORDERS
            .iter()
            .map(|p| {
                Sun([
                    self.0[p[0]],
                    self.0[p[1]],
                    self.0[p[2]],
                    self.0[p[0] + 3],
                    self.0[p[1] + 3],
                    self.0[p[2] + 3],
                ])
            })
            .min()
            .expect("six orderings")
    }
}

impl fmt::Display for Sun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = &self.0;
        write!(f, "({},{},{};{},{},{})", v[0], v[1], v[2], v[3], v[4], v[5])
    }
}

/// `|i - j|_u = min(|i - j|, u - |i - j|)` for distinct points of `Z_u`.
pub fn canonical_difference(i: u32, j: u32, u: u32) -> Result<u32> {
    let (i, j) = (i % u, j % u);
    if i == j {
        return Err(Error::InvalidEdge(format!("{i}-{j} in Z_{u}")));
    }
    let d = i.abs_diff(j);
    Ok(d.min(u - d))
}

/// Reduces an arbitrary integer difference to its class in `[1, ⌊u/2⌋]`.
/// Returns `None` when `d ≡ 0 (mod u)`.
pub fn reduce_difference(d: i64, u: u32) -> Option<u32> {
    let r = d.rem_euclid(i64::from(u)) as u32;
    (r != 0).then(|| r.min(u - r))
}

/// `s + i`, with cyclic coordinates taken mod `u`.
pub fn translate(s: &Sun, i: i64, u: u32) -> Sun {
    // translation is a bijection, so distinctness is preserved
    Sun(s.0.map(|v| v.shift(i, u)))
}

/// A base block together with the modulus generating its orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BaseBlock {
    pub sun: Sun,
    pub modulus: u32,
}

impl BaseBlock {
    pub fn new(sun: Sun, modulus: u32) -> Result<BaseBlock> {
        let sun = sun.map(|v| v.shift(0, modulus))?;
        Ok(BaseBlock { sun, modulus })
    }

    pub fn orbit(&self) -> Vec<Sun> {
        orbit(&self.sun, self.modulus)
    }
}

/// `[S + 0, S + 1, ..., S + (u - 1)]`.
pub fn orbit(base: &Sun, u: u32) -> Vec<Sun> {
    (0..i64::from(u)).map(|i| translate(base, i, u)).collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Splits the 2-factor of difference `d` into its `gcd(u, d)` cycles. Cycle
/// `j` starts at `j` and steps by `+d`.
pub fn cycles_of_difference(u: u32, d: u32) -> Result<Vec<Vec<u32>>> {
    if d == 0 || d > u / 2 {
        return Err(Error::InvalidGraph(format!(
            "difference {d} outside [1, {}]",
            u / 2
        )));
    }
    if 2 * d == u {
        return Err(Error::NotTwoFactor { u, d });
    }
    let g = gcd(u, d);
    let len = u / g;
    Ok((0..g)
        .map(|j| (0..len).map(|t| (j + t * d) % u).collect())
        .collect())
}

/// The graph `<Z_u ∪ {∞_1..∞_t}, D>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoleGraph {
    u: u32,
    t: u32,
    differences: BTreeSet<u32>,
}

impl HoleGraph {
    /// `D` must be a non-empty subset of `[1, ⌊u/2⌋]`.
    pub fn new(u: u32, t: u32, differences: impl IntoIterator<Item = u32>) -> Result<HoleGraph> {
        if u == 0 {
            return Err(Error::InvalidGraph("u must be positive".into()));
        }
        let differences: BTreeSet<u32> = differences.into_iter().collect();
        if differences.is_empty() {
            return Err(Error::InvalidGraph("empty difference set".into()));
        }
        if let Some(&bad) = differences.iter().find(|&&d| d == 0 || d > u / 2) {
            return Err(Error::InvalidGraph(format!(
                "difference {bad} outside [1, {}]",
                u / 2
            )));
        }
        Ok(HoleGraph { u, t, differences })
    }

    /// `<Z_u ∪ {∞_1..∞_t}, D_u>`, i.e. `K_{u+t} \ K_t`. With `t = 0` this is
    /// `K_u`. Degenerate orders (`u <= 1`) are allowed here.
    pub fn full(u: u32, t: u32) -> HoleGraph {
        HoleGraph {
            u,
            t,
            differences: (1..=u / 2).collect(),
        }
    }

    /// `Z_u` with no edges: the target of an empty leave.
    pub fn edgeless(u: u32) -> HoleGraph {
        HoleGraph {
            u,
            t: 0,
            differences: BTreeSet::new(),
        }
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn differences(&self) -> &BTreeSet<u32> {
        &self.differences
    }

    pub fn edge_count(&self) -> usize {
        let u = self.u as usize;
        let cyclic: usize = self
            .differences
            .iter()
            .map(|&d| if 2 * d == self.u { u / 2 } else { u })
            .sum();
        cyclic + self.t as usize * u
    }

    pub fn contains(&self, e: Edge) -> bool {
        match e.endpoints() {
            (Vertex::Cyclic(i), Vertex::Cyclic(j)) => {
                i < self.u
                    && j < self.u
                    && canonical_difference(i, j, self.u)
                        .is_ok_and(|d| self.differences.contains(&d))
            }
            (Vertex::Cyclic(i), Vertex::Infinity(k)) => i < self.u && k >= 1 && k <= self.t,
            _ => false,
        }
    }

    /// The exact edge set, in canonical order.
    pub fn edges(&self) -> BTreeSet<Edge> {
        let mut out = BTreeSet::new();
        let u = self.u;
        for &d in &self.differences {
            let count = if 2 * d == u { u / 2 } else { u };
            for i in 0..count {
                out.insert(
                    Edge::new(Vertex::Cyclic(i), Vertex::Cyclic((i + d) % u)).expect("d < u"),
                );
            }
        }
        for k in 1..=self.t {
            for i in 0..u {
                out.insert(Edge::new(Vertex::Cyclic(i), Vertex::Infinity(k)).expect("sorts"));
            }
        }
        out
    }
}

/// Shorthand for `hole_graph_edges` in the free-function style.
pub fn hole_graph_edges(g: &HoleGraph) -> BTreeSet<Edge> {
    g.edges()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(i: u32) -> Vertex {
        Vertex::Cyclic(i)
    }
    fn inf(k: u32) -> Vertex {
        Vertex::Infinity(k)
    }

    #[test]
    fn differences() {
        assert_eq!(canonical_difference(0, 4, 8).unwrap(), 4);
        assert_eq!(canonical_difference(1, 6, 7).unwrap(), 2);
        assert_eq!(canonical_difference(6, 1, 7).unwrap(), 2);
        assert_eq!(canonical_difference(0, 10, 19).unwrap(), 9);
        assert!(matches!(
            canonical_difference(3, 3, 7),
            Err(Error::InvalidEdge(_))
        ));
        assert_eq!(reduce_difference(10, 19), Some(9));
        assert_eq!(reduce_difference(-3, 11), Some(3));
        assert_eq!(reduce_difference(22, 11), None);
    }

    #[test]
    fn sun_edge_expansion() {
        let s = Sun::new([c(0), c(1), c(2), c(3), c(4), c(5)]).unwrap();
        let got: BTreeSet<Edge> = s.edges().into_iter().collect();
        let want: BTreeSet<Edge> = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
            .into_iter()
            .map(|(a, b)| Edge::new(c(a), c(b)).unwrap())
            .collect();
        assert_eq!(got, want);

        let s = Sun::new([inf(1), c(2), c(0), c(3), c(4), inf(2)]).unwrap();
        let got: BTreeSet<Edge> = s.edges().into_iter().collect();
        let want: BTreeSet<Edge> = [
            (inf(1), c(2)),
            (c(2), c(0)),
            (inf(1), c(0)),
            (inf(1), c(3)),
            (c(2), c(4)),
            (c(0), inf(2)),
        ]
        .into_iter()
        .map(|(a, b)| Edge::new(a, b).unwrap())
        .collect();
        assert_eq!(got, want);

        assert!(matches!(
            Sun::new([c(0), c(1), c(2), c(3), c(1), c(5)]),
            Err(Error::DegenerateSun(_))
        ));
    }

    #[test]
    fn edge_canonical_order() {
        let e = Edge::new(inf(1), c(5)).unwrap();
        assert_eq!(e.endpoints(), (c(5), inf(1)));
        assert_eq!(e, Edge::new(c(5), inf(1)).unwrap());
        assert!(Edge::new(c(2), c(2)).is_err());
    }

    #[test]
    fn translation() {
        let s = Sun::new([c(1), c(3), c(0), inf(1), c(8), c(4)]).unwrap();
        let t = translate(&s, 1, 11);
        assert_eq!(t, Sun::new([c(2), c(4), c(1), inf(1), c(9), c(5)]).unwrap());
        assert_eq!(translate(&s, 0, 11), s);
        assert_eq!(translate(&s, 11, 11), s);
        assert_eq!(translate(&s, -1, 11), translate(&s, 10, 11));
    }

    #[test]
    fn orbit_length() {
        let s = Sun::new([c(1), c(3), c(0), inf(1), inf(2), inf(3)]).unwrap();
        let o = orbit(&s, 9);
        assert_eq!(o.len(), 9);
        assert_eq!(o[0], s);
        let block = BaseBlock::new(s, 9).unwrap();
        assert_eq!(block.orbit(), o);
    }

    #[test]
    fn canonical_form_is_automorphism_invariant() {
        let s = Sun::new([c(4), c(1), c(7), c(2), inf(1), c(0)]).unwrap();
        let rotated = Sun::new([c(1), c(7), c(4), inf(1), c(0), c(2)]).unwrap();
        let reflected = Sun::new([c(1), c(4), c(7), inf(1), c(2), c(0)]).unwrap();
        assert_eq!(s.canonical(), rotated.canonical());
        assert_eq!(s.canonical(), reflected.canonical());
        let other = Sun::new([c(4), c(1), c(7), c(0), inf(1), c(2)]).unwrap();
        assert_ne!(s.canonical(), other.canonical());
    }

    #[test]
    fn cycles() {
        assert_eq!(
            cycles_of_difference(9, 3).unwrap(),
            vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]
        );
        let cs = cycles_of_difference(7, 3).unwrap();
        assert_eq!(cs, vec![vec![0, 3, 6, 2, 5, 1, 4]]);
        assert!(matches!(
            cycles_of_difference(8, 4),
            Err(Error::NotTwoFactor { .. })
        ));
    }

    #[test]
    fn cycles_cover_difference_class_once() {
        // independent count: every cycle step is a difference-d edge, and
        // the u steps are pairwise distinct
        for (u, d) in [(12, 2), (12, 3), (15, 5), (14, 4), (10, 1)] {
            let cs = cycles_of_difference(u, d).unwrap();
            let mut seen = BTreeSet::new();
            for cycle in &cs {
                assert_eq!(cycle.len() as u32, u / gcd(u, d));
                for w in 0..cycle.len() {
                    let (a, b) = (cycle[w], cycle[(w + 1) % cycle.len()]);
                    assert_eq!(canonical_difference(a, b, u).unwrap(), d);
                    assert!(seen.insert(Edge::new(c(a), c(b)).unwrap()));
                }
            }
            assert_eq!(seen.len() as u32, u);
        }
        assert_eq!(cycles_of_difference(12, 2).unwrap().len(), 2);
    }

    #[test]
    fn hole_graph_counts() {
        let g = HoleGraph::new(8, 2, [2]).unwrap();
        assert_eq!(g.edges().len(), 24);
        assert_eq!(g.edge_count(), 24);
        let g = HoleGraph::new(8, 0, [4]).unwrap();
        assert_eq!(g.edges().len(), 4);
        let g = HoleGraph::new(9, 12, [1, 2, 3, 4]).unwrap();
        assert_eq!(g.edges().len(), 144);
        assert_eq!(g, HoleGraph::full(9, 12));
        assert!(HoleGraph::new(8, 1, [5]).is_err());
        assert!(HoleGraph::new(8, 1, []).is_err());
    }

    #[test]
    fn full_graph_matches_brute_force_pair_count() {
        for u in 1..20u32 {
            for t in 0..6u32 {
                let g = HoleGraph::full(u, t);
                let n = (u + t) as usize;
                let hole = t as usize;
                let want = n * (n - 1) / 2 - hole * hole.saturating_sub(1) / 2;
                assert_eq!(g.edges().len(), want, "u={u} t={t}");
                assert_eq!(g.edge_count(), want);
            }
        }
    }
}
