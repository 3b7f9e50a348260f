//! Block generators for the building-block graphs `<Z_u ∪ H, D>`.
//!
//! Each generator returns a [`LemmaOutput`]: the target graph and a block
//! list whose edges partition it. Infinity points are labelled `∞_1..∞_t`;
//! the planner relabels them when it glues outputs together.

mod half;
mod leave;
mod orbits;
mod small;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use half::{
    four_inf_1_half, seven_inf_1_half, six_inf_1_half, three_inf_12_half, three_inf_1_half,
};
pub use leave::{leave_alpha8_s1, leave_decomposition, leave_differences, LEAVE_ALPHA8_S1_BASE};
pub use orbits::{
    five_inf_single_diff, one_inf_five_diffs, one_inf_single_diff, select_ordered_differences,
    three_inf_three_diffs, two_inf_four_diffs,
};
pub use small::{eight_inf_diff_1_u3, four_inf_diff24, four_inf_diff2_mod12, two_inf_diff2};

use crate::design::{reduce_difference, HoleGraph, Sun, Vertex};
use crate::error::{precondition, Error, Result};
use crate::verify::{verify_partition, VerificationReport};

/// A target graph together with a block list claimed to partition it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaOutput {
    pub graph: HoleGraph,
    pub blocks: Vec<Sun>,
}

impl LemmaOutput {
    pub fn verify(&self) -> VerificationReport {
        verify_partition(&self.blocks, &self.graph)
    }
}

/// The available generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaKind {
    TwoInfDiff2,
    FourInfDiff2Mod12,
    FourInfDiff24,
    EightInfDiff1U3,
    ThreeInf1Half,
    FourInf1Half,
    SixInf1Half,
    SevenInf1Half,
    ThreeInf12Half,
    OneInfSingleDiff,
    OneInfFiveDiffs,
    TwoInfFourDiffs,
    ThreeInfThreeDiffs,
    FiveInfSingleDiff,
    Leave,
    LeaveAlpha8S1,
}

impl LemmaKind {
    pub const ALL: [LemmaKind; 16] = [
        LemmaKind::TwoInfDiff2,
        LemmaKind::FourInfDiff2Mod12,
        LemmaKind::FourInfDiff24,
        LemmaKind::EightInfDiff1U3,
        LemmaKind::ThreeInf1Half,
        LemmaKind::FourInf1Half,
        LemmaKind::SixInf1Half,
        LemmaKind::SevenInf1Half,
        LemmaKind::ThreeInf12Half,
        LemmaKind::OneInfSingleDiff,
        LemmaKind::OneInfFiveDiffs,
        LemmaKind::TwoInfFourDiffs,
        LemmaKind::ThreeInfThreeDiffs,
        LemmaKind::FiveInfSingleDiff,
        LemmaKind::Leave,
        LemmaKind::LeaveAlpha8S1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaKind::TwoInfDiff2 => "two_inf_diff2",
            LemmaKind::FourInfDiff2Mod12 => "four_inf_diff2_mod12",
            LemmaKind::FourInfDiff24 => "four_inf_diff24",
            LemmaKind::EightInfDiff1U3 => "eight_inf_diff_1_u3",
            LemmaKind::ThreeInf1Half => "three_inf_1_half",
            LemmaKind::FourInf1Half => "four_inf_1_half",
            LemmaKind::SixInf1Half => "six_inf_1_half",
            LemmaKind::SevenInf1Half => "seven_inf_1_half",
            LemmaKind::ThreeInf12Half => "three_inf_12_half",
            LemmaKind::OneInfSingleDiff => "one_inf_single_diff",
            LemmaKind::OneInfFiveDiffs => "one_inf_five_diffs",
            LemmaKind::TwoInfFourDiffs => "two_inf_four_diffs",
            LemmaKind::ThreeInfThreeDiffs => "three_inf_three_diffs",
            LemmaKind::FiveInfSingleDiff => "five_inf_single_diff",
            LemmaKind::Leave => "leave_decomposition",
            LemmaKind::LeaveAlpha8S1 => "leave_alpha8_s1",
        }
    }

    /// Number of infinity points the generator consumes.
    pub fn infinity_count(self) -> u32 {
        match self {
            LemmaKind::OneInfSingleDiff | LemmaKind::OneInfFiveDiffs => 1,
            LemmaKind::TwoInfDiff2 | LemmaKind::TwoInfFourDiffs => 2,
            LemmaKind::ThreeInf1Half
            | LemmaKind::ThreeInf12Half
            | LemmaKind::ThreeInfThreeDiffs => 3,
            LemmaKind::FourInfDiff2Mod12 | LemmaKind::FourInfDiff24 | LemmaKind::FourInf1Half => 4,
            LemmaKind::FiveInfSingleDiff => 5,
            LemmaKind::SixInf1Half => 6,
            LemmaKind::SevenInf1Half => 7,
            LemmaKind::EightInfDiff1U3 => 8,
            LemmaKind::Leave | LemmaKind::LeaveAlpha8S1 => 0,
        }
    }

    /// Number of free difference parameters, where the generator takes any.
    pub fn difference_arity(self) -> usize {
        match self {
            LemmaKind::OneInfSingleDiff | LemmaKind::FiveInfSingleDiff => 1,
            LemmaKind::OneInfFiveDiffs => 5,
            LemmaKind::TwoInfFourDiffs => 4,
            LemmaKind::ThreeInfThreeDiffs => 3,
            _ => 0,
        }
    }
}

impl fmt::Display for LemmaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        LemmaKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = LemmaKind::ALL.iter().map(|k| k.name()).collect();
                format!(
                    "unknown construction {s:?}; expected one of {}",
                    names.join(", ")
                )
            })
    }
}

/// A point as written in a block table: an integer taken mod `u`, or `∞_k`.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Pt {
    Z(i64),
    Inf(u32),
}

pub(crate) fn z(x: i64) -> Pt {
    Pt::Z(x)
}

pub(crate) const I1: Pt = Pt::Inf(1);
pub(crate) const I2: Pt = Pt::Inf(2);
pub(crate) const I3: Pt = Pt::Inf(3);
pub(crate) const I4: Pt = Pt::Inf(4);
pub(crate) const I5: Pt = Pt::Inf(5);
pub(crate) const I6: Pt = Pt::Inf(6);
pub(crate) const I7: Pt = Pt::Inf(7);
pub(crate) const I8: Pt = Pt::Inf(8);

/// Accumulates blocks written in table notation over `Z_u`.
pub(crate) struct Blocks {
    u: u32,
    suns: Vec<Sun>,
}

impl Blocks {
    pub(crate) fn new(u: u32) -> Blocks {
        Blocks {
            u,
            suns: Vec::new(),
        }
    }

    pub(crate) fn sun(&self, pts: [Pt; 6]) -> Result<Sun> {
        Sun::new(pts.map(|p| match p {
            Pt::Z(x) => Vertex::cyclic(x, self.u),
            Pt::Inf(k) => Vertex::Infinity(k),
        }))
    }

    pub(crate) fn push(&mut self, pts: [Pt; 6]) -> Result<()> {
        let s = self.sun(pts)?;
        self.suns.push(s);
        Ok(())
    }

    pub(crate) fn extend(&mut self, suns: impl IntoIterator<Item = Sun>) {
        self.suns.extend(suns);
    }

    /// Drops exact repeats, keeping first occurrences.
    pub(crate) fn dedup(&mut self) {
        let mut seen = BTreeSet::new();
        self.suns.retain(|s| seen.insert(*s));
    }

    pub(crate) fn finish(self, t: u32, differences: BTreeSet<u32>) -> Result<LemmaOutput> {
        Ok(LemmaOutput {
            graph: HoleGraph::new(self.u, t, differences)?,
            blocks: self.suns,
        })
    }
}

/// Reduces nominal differences into `[1, ⌊u/2⌋]`, requiring the reduced
/// values to be distinct.
pub(crate) fn reduced_set(
    construction: &'static str,
    u: u32,
    nominal: &[i64],
) -> Result<BTreeSet<u32>> {
    let mut out = BTreeSet::new();
    for &d in nominal {
        let r = reduce_difference(d, u).ok_or_else(|| {
            precondition(construction, format!("difference {d} vanishes mod {u}"))
        })?;
        if !out.insert(r) {
            return Err(precondition(
                construction,
                format!("differences {nominal:?} collide mod {u}"),
            ));
        }
    }
    Ok(out)
}

/// Parameters accepted by [`construct`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaArgs {
    pub differences: Vec<i64>,
    /// Leave parameters: block-family count `s`, variant `alpha`, and whether
    /// to omit the first orbit.
    pub s: u32,
    pub alpha: u32,
    pub skip_first: bool,
}

/// Runs generator `kind` on `Z_u` with the given parameters.
///
/// Differences are reduced into `[1, ⌊u/2⌋]` and used in the order given;
/// [`select_ordered_differences`] finds a working order for the orbit
/// generators.
pub fn construct(kind: LemmaKind, u: u32, args: &LemmaArgs) -> Result<LemmaOutput> {
    let arity = kind.difference_arity();
    if args.differences.len() != arity {
        return Err(precondition(
            kind.name(),
            format!(
                "expected {arity} differences, got {}",
                args.differences.len()
            ),
        ));
    }
    let reduced = || -> Result<Vec<u32>> {
        args.differences
            .iter()
            .map(|&d| {
                reduce_difference(d, u).ok_or_else(|| {
                    precondition(kind.name(), format!("difference {d} vanishes mod {u}"))
                })
            })
            .collect()
    };
    match kind {
        LemmaKind::TwoInfDiff2 => two_inf_diff2(u),
        LemmaKind::FourInfDiff2Mod12 => four_inf_diff2_mod12(u),
        LemmaKind::FourInfDiff24 => four_inf_diff24(u),
        LemmaKind::EightInfDiff1U3 => eight_inf_diff_1_u3(u),
        LemmaKind::ThreeInf1Half => three_inf_1_half(u),
        LemmaKind::FourInf1Half => four_inf_1_half(u),
        LemmaKind::SixInf1Half => six_inf_1_half(u),
        LemmaKind::SevenInf1Half => seven_inf_1_half(u),
        LemmaKind::ThreeInf12Half => three_inf_12_half(u),
        LemmaKind::OneInfSingleDiff => one_inf_single_diff(u, reduced()?[0]),
        LemmaKind::FiveInfSingleDiff => five_inf_single_diff(u, reduced()?[0]),
        LemmaKind::OneInfFiveDiffs => {
            let d = reduced()?;
            one_inf_five_diffs(u, [d[0], d[1], d[2], d[3], d[4]])
        }
        LemmaKind::TwoInfFourDiffs => {
            let d = reduced()?;
            two_inf_four_diffs(u, [d[0], d[1], d[2], d[3]])
        }
        LemmaKind::ThreeInfThreeDiffs => {
            let d = reduced()?;
            three_inf_three_diffs(u, [d[0], d[1], d[2]])
        }
        LemmaKind::Leave => leave_decomposition(u, args.s, args.alpha, args.skip_first),
        LemmaKind::LeaveAlpha8S1 => leave_alpha8_s1(u),
    }
}

/// The error for a precondition failure, shared by the submodules.
pub(crate) fn reject(construction: &'static str, detail: impl Into<String>) -> Error {
    precondition(construction, detail)
}
