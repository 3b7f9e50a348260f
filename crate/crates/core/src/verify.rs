//! Exact edge-partition checking.
//!
//! Every construction in the crate is accepted only after [`verify_partition`]
//! has compared the multiset of block edges with the target edge set.

use std::collections::HashMap;

use crate::design::{Edge, HoleGraph, Sun, Vertex};
use crate::error::{Error, Result};

/// A block with integer vertex ids, listed `[a, b, c, d, e, f]`.
pub type Block = [u32; 6];

/// A block list for `K_m \ K_n` (or `K_m` when `n = 0`).
///
/// The `u = m - n` cyclic points are the ids `0..u`; the hole occupies the top
/// ids `u..m`, with `∞_k` stored as `u + k - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub m: u32,
    pub hole: u32,
    pub blocks: Vec<Block>,
}

impl Decomposition {
    pub fn empty(m: u32, hole: u32) -> Decomposition {
        Decomposition {
            m,
            hole,
            blocks: Vec::new(),
        }
    }

    /// Packs suns over `Z_u ∪ {∞_1..∞_n}` into integer blocks.
    pub fn from_suns(u: u32, hole: u32, suns: &[Sun]) -> Decomposition {
        let blocks = suns
            .iter()
            .map(|s| s.vertices().map(|v| vertex_id(v, u)))
            .collect();
        Decomposition {
            m: u + hole,
            hole,
            blocks,
        }
    }

    pub fn u(&self) -> u32 {
        self.m - self.hole
    }

    /// `<Z_u ∪ {∞_1..∞_n}, D_u>`.
    pub fn target(&self) -> HoleGraph {
        HoleGraph::full(self.u(), self.hole)
    }

    pub fn vertex(&self, id: u32) -> Vertex {
        let u = self.u();
        if id < u {
            Vertex::Cyclic(id)
        } else {
            Vertex::Infinity(id - u + 1)
        }
    }

    /// The blocks as suns. Fails on an out-of-range id or a repeated vertex.
    pub fn suns(&self) -> Result<Vec<Sun>> {
        self.blocks
            .iter()
            .map(|b| {
                if let Some(&bad) = b.iter().find(|&&v| v >= self.m) {
                    return Err(Error::DegenerateSun(format!(
                        "{b:?}: vertex {bad} >= m = {}",
                        self.m
                    )));
                }
                Sun::new(b.map(|v| self.vertex(v)))
            })
            .collect()
    }

    /// Sorted blocks, each in its canonical automorphism representative.
    pub fn canonicalized(&self) -> Decomposition {
        let mut blocks: Vec<Block> = self.blocks.iter().map(canonical_block).collect();
        blocks.sort_unstable();
        Decomposition {
            m: self.m,
            hole: self.hole,
            blocks,
        }
    }

    pub fn verify(&self) -> VerificationReport {
        self.verify_against(&self.target())
    }

    pub fn verify_against(&self, target: &HoleGraph) -> VerificationReport {
        let mut malformed = Vec::new();
        let mut suns = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            if b.iter().any(|&v| v >= self.m) {
                malformed.push(*b);
                continue;
            }
            match Sun::new(b.map(|v| self.vertex(v))) {
                Ok(s) => suns.push(s),
                Err(_) => malformed.push(*b),
            }
        }
        let mut report = verify_partition(&suns, target);
        report.block_count = self.blocks.len();
        report.ok &= malformed.is_empty() && 6 * report.block_count == report.expected_edge_count;
        report.malformed_blocks = malformed;
        report
    }
}

pub(crate) fn vertex_id(v: Vertex, u: u32) -> u32 {
    match v {
        Vertex::Cyclic(i) => i,
        Vertex::Infinity(k) => u + k - 1,
    }
}

/// The smallest listing of an integer block over the six orderings of its
/// triangle (pendants follow their triangle vertex).
pub fn canonical_block(b: &Block) -> Block {
    const ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    ORDERS
        .iter()
        .map(|p| {
            [
                b[p[0]],
                b[p[1]],
                b[p[2]],
                b[p[0] + 3],
                b[p[1] + 3],
                b[p[2] + 3],
            ]
        })
        .min()
        .expect("six orderings")
}

/// Outcome of comparing a block list with a target edge set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub ok: bool,
    /// Target edges covered by no block.
    pub missing_edges: Vec<Edge>,
    /// One entry per surplus occurrence of a target edge.
    pub duplicated_edges: Vec<Edge>,
    /// Block edges that are not edges of the target.
    pub foreign_edges: Vec<Edge>,
    /// Integer blocks that do not form a sun (only reported for
    /// [`Decomposition`] input).
    pub malformed_blocks: Vec<Block>,
    pub block_count: usize,
    pub expected_edge_count: usize,
}

impl VerificationReport {
    pub fn into_result(self) -> Result<()> {
        if self.ok {
            Ok(())
        } else {
            Err(Error::VerificationFailed(self.summary()))
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{} blocks for {} edges: {} missing, {} duplicated, {} foreign, {} malformed",
            self.block_count,
            self.expected_edge_count,
            self.missing_edges.len(),
            self.duplicated_edges.len(),
            self.foreign_edges.len(),
            self.malformed_blocks.len()
        )
    }
}

/// Compares the multiset union of the blocks' edges with the edges of
/// `target`. Defects are reported, never raised.
pub fn verify_partition(blocks: &[Sun], target: &HoleGraph) -> VerificationReport {
    let mut seen: HashMap<Edge, u32> = HashMap::with_capacity(blocks.len() * 6);
    let mut foreign = Vec::new();
    for s in blocks {
        for e in s.edges() {
            if target.contains(e) {
                *seen.entry(e).or_insert(0) += 1;
            } else {
                foreign.push(e);
            }
        }
    }
    let mut missing = Vec::new();
    let mut duplicated = Vec::new();
    let expected = target.edges();
    for e in &expected {
        match seen.get(e).copied().unwrap_or(0) {
            0 => missing.push(*e),
            1 => {}
            k => duplicated.extend(std::iter::repeat_n(*e, k as usize - 1)),
        }
    }
    foreign.sort_unstable();
    let ok = missing.is_empty()
        && duplicated.is_empty()
        && foreign.is_empty()
        && 6 * blocks.len() == expected.len();
    VerificationReport {
        ok,
        missing_edges: missing,
        duplicated_edges: duplicated,
        foreign_edges: foreign,
        malformed_blocks: Vec::new(),
        block_count: blocks.len(),
        expected_edge_count: expected.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(i: u32) -> Vertex {
        Vertex::Cyclic(i)
    }

    // (0,1,2;3,4,5) + translates partition nothing in particular; use the
    // single orbit of (1,3,0;∞,8,4) over Z_11 from the five-difference
    // construction as a known-good block list.
    fn known_good() -> (Vec<Sun>, HoleGraph) {
        let base = Sun::new([c(1), c(3), c(0), Vertex::Infinity(1), c(8), c(4)]).unwrap();
        (
            crate::design::orbit(&base, 11),
            HoleGraph::new(11, 1, [1, 2, 3, 4, 5]).unwrap(),
        )
    }

    #[test]
    fn accepts_exact_partition() {
        let (blocks, g) = known_good();
        let r = verify_partition(&blocks, &g);
        assert!(r.ok, "{}", r.summary());
        assert_eq!(r.expected_edge_count, 66);
    }

    #[test]
    fn deleted_block_reports_six_missing() {
        let (mut blocks, g) = known_good();
        blocks.remove(3);
        let r = verify_partition(&blocks, &g);
        assert!(!r.ok);
        assert_eq!(r.missing_edges.len(), 6);
        assert!(r.duplicated_edges.is_empty());
    }

    #[test]
    fn duplicated_block_reports_six_duplicates() {
        let (mut blocks, g) = known_good();
        blocks.push(blocks[5]);
        let r = verify_partition(&blocks, &g);
        assert!(!r.ok);
        assert_eq!(r.duplicated_edges.len(), 6);
        assert!(r.missing_edges.is_empty());
    }

    #[test]
    fn foreign_edges_are_reported() {
        let (blocks, _) = known_good();
        let smaller = HoleGraph::new(11, 1, [1, 2, 3, 4]).unwrap();
        let r = verify_partition(&blocks, &smaller);
        assert!(!r.ok);
        assert_eq!(r.foreign_edges.len(), 11);
    }

    #[test]
    fn decomposition_round_trip_and_malformed_blocks() {
        let (blocks, _) = known_good();
        let d = Decomposition::from_suns(11, 1, &blocks);
        assert_eq!(d.m, 12);
        assert_eq!(d.suns().unwrap(), blocks);
        let g = HoleGraph::new(11, 1, [1, 2, 3, 4, 5]).unwrap();
        assert!(d.verify_against(&g).ok);

        let mut bad = d.clone();
        bad.blocks[0] = [0, 1, 2, 3, 1, 5];
        let r = bad.verify_against(&g);
        assert!(!r.ok);
        assert_eq!(r.malformed_blocks.len(), 1);

        let mut bad = d;
        bad.blocks[0][5] = 40;
        assert!(!bad.verify_against(&g).ok);
    }

    #[test]
    fn canonical_block_picks_smallest_listing() {
        assert_eq!(canonical_block(&[5, 3, 4, 0, 1, 2]), [3, 4, 5, 1, 2, 0]);
        assert_eq!(canonical_block(&[3, 4, 5, 1, 2, 0]), [3, 4, 5, 1, 2, 0]);
    }
}
