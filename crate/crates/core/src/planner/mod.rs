//! Bounds, case dispatch, hole decompositions and embeddings.
//!
//! A 3-sun system of order `n` embeds in one of order `m > n` exactly when
//! `m` is admissible and `m >= 7n/5 + 1`. The embedding is built by covering
//! `K_m \ K_n`, with the hole as infinity points `∞_1..∞_n` and the `u = m - n`
//! new vertices as `Z_u`, by a [`Plan`] of generator calls.

mod cases;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::design::{reduce_difference, Sun, Vertex};
use crate::error::{precondition, Error, Result};
use crate::lemmas::{self, select_ordered_differences, LemmaArgs, LemmaKind, LemmaOutput};
use crate::oracle::base_system;
use crate::verify::Decomposition;

use cases::{CaseSpec, LeaveSpec};

/// How an order relates to the existence of a 3-sun system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissibility {
    /// `n ∈ {0, 1}`: the empty system.
    Trivial,
    /// `n = 4`: congruent, but `K_4` holds no 3-sun.
    NonExistent,
    Admissible,
    NotAdmissible,
}

impl Admissibility {
    /// True when a 3-sun system of this order exists.
    pub fn exists(self) -> bool {
        matches!(self, Admissibility::Trivial | Admissibility::Admissible)
    }

    /// True when the order satisfies `n ≡ 0, 1, 4, 9 (mod 12)`.
    pub fn congruent(self) -> bool {
        self != Admissibility::NotAdmissible
    }
}

pub fn is_admissible_order(n: u32) -> Admissibility {
    match (n, n % 12) {
        (0 | 1, _) => Admissibility::Trivial,
        (4, _) => Admissibility::NonExistent,
        (_, 0 | 1 | 4 | 9) => Admissibility::Admissible,
        _ => Admissibility::NotAdmissible,
    }
}

fn require_congruent(n: u32) -> Result<()> {
    if is_admissible_order(n).congruent() {
        Ok(())
    } else {
        Err(Error::NotAdmissible(n))
    }
}

/// Residues of `u` mod 12 making `n + u` admissible.
pub fn hole_residues(n: u32) -> Result<[u32; 4]> {
    match n % 12 {
        0 => Ok([0, 1, 4, 9]),
        1 => Ok([0, 3, 8, 11]),
        4 => Ok([0, 5, 8, 9]),
        9 => Ok([0, 3, 4, 7]),
        _ => Err(Error::NotAdmissible(n)),
    }
}

/// `n = 60k + 5r + c` with `0 <= r < 12`, `0 <= c < 5`.
fn split(n: u32) -> (u32, u32, u32) {
    (n / 60, (n % 60) / 5, n % 5)
}

const M_OFFSET: [u32; 5] = [1, 3, 4, 6, 7];
const U_OFFSET: [u32; 5] = [1, 2, 2, 3, 3];

/// The least `m > n` admitting an embedding: `84k + 7r + {1, 3, 4, 6, 7}[c]`
/// for `n = 60k + 5r + c`, the smallest integer at least `7n/5 + 1`.
pub fn min_embedding_order(n: u32) -> Result<u32> {
    require_congruent(n)?;
    let (k, r, c) = split(n);
    Ok(84 * k + 7 * r + M_OFFSET[c as usize])
}

/// `min_embedding_order(n) - n`.
pub fn min_hole_increment(n: u32) -> Result<u32> {
    require_congruent(n)?;
    let (k, r, c) = split(n);
    Ok(24 * k + 2 * r + U_OFFSET[c as usize])
}

/// The counting condition on `K_{n+u} \ K_n`: every sun has at most two
/// vertices in the hole, so `u(5u - 2n - 5)/2` must be non-negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountingCertificate {
    pub n: u32,
    pub u: u32,
    pub lhs: i64,
    pub feasible: bool,
}

pub fn counting_feasible(n: u32, u: u32) -> CountingCertificate {
    let (ni, ui) = (i64::from(n), i64::from(u));
    let lhs = ui * (5 * ui - 2 * ni - 5) / 2;
    CountingCertificate {
        n,
        u,
        lhs,
        feasible: lhs >= 0,
    }
}

/// The parameters indexing the dispatch table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmbeddingParams {
    pub n: u32,
    pub u: u32,
    pub k: u32,
    pub r: u32,
    pub c: u32,
    pub h: u32,
    pub s: u32,
    pub l: u32,
}

impl EmbeddingParams {
    pub fn new(n: u32, u: u32) -> Result<EmbeddingParams> {
        require_congruent(n)?;
        if n < 9 {
            return Err(precondition("build_plan", format!("needs n >= 9, got {n}")));
        }
        require_congruent(n + u)?;
        let u_min = min_hole_increment(n)?;
        if u < u_min {
            return Err(Error::BoundViolated {
                n,
                m: n + u,
                min: n + u_min,
            });
        }
        let (k, r, c) = split(n);
        let h = u - u_min;
        Ok(EmbeddingParams {
            n,
            u,
            k,
            r,
            c,
            h,
            s: h / 12,
            l: h % 12,
        })
    }
}

/// One generator call with its share of the differences and infinity points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanTask {
    pub kind: LemmaKind,
    /// Differences covered, as printed. For the orbit generators this is the
    /// working order; for the fixed-set generators it documents the set.
    pub differences: Vec<i64>,
    /// Global hole labels standing in for the generator's `∞_1, ∞_2, ...`.
    pub infinity: Vec<u32>,
    pub s: u32,
    pub alpha: u32,
    pub skip_first: bool,
}

impl PlanTask {
    fn new(kind: LemmaKind, differences: Vec<i64>) -> PlanTask {
        PlanTask {
            kind,
            differences,
            infinity: Vec::new(),
            s: 0,
            alpha: 0,
            skip_first: false,
        }
    }

    /// The reduced differences this task covers in `Z_u`.
    pub fn covered(&self, u: u32) -> Vec<Option<u32>> {
        self.differences
            .iter()
            .map(|&d| reduce_difference(d, u))
            .collect()
    }

    /// Runs the generator over `Z_u` with its local infinity labels.
    pub fn run(&self, u: u32) -> Result<LemmaOutput> {
        let differences = if self.kind.difference_arity() > 0 {
            self.differences.clone()
        } else {
            Vec::new()
        };
        let args = LemmaArgs {
            differences,
            s: self.s,
            alpha: self.alpha,
            skip_first: self.skip_first,
        };
        lemmas::construct(self.kind, u, &args)
    }
}

impl fmt::Display for PlanTask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.differences.iter().map(|d| d.to_string()).collect();
        write!(f, "{} {{{}}}", self.kind, ds.join(","))?;
        if !self.infinity.is_empty() {
            let first = self.infinity[0];
            let last = self.infinity[self.infinity.len() - 1];
            if first == last {
                write!(f, " on ∞{first}")?;
            } else {
                write!(f, " on ∞{first}..∞{last}")?;
            }
        }
        if matches!(self.kind, LemmaKind::Leave) {
            write!(f, " (s = {}, alpha = {}", self.s, self.alpha)?;
            if self.skip_first {
                f.write_str(", first orbit skipped")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A task list covering `<Z_u ∪ {∞_1..∞_n}, D_u>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plan {
    pub params: EmbeddingParams,
    /// The table entry that produced the plan.
    pub case: String,
    pub tasks: Vec<PlanTask>,
}

impl Plan {
    /// Checks that the reduced task differences partition `[1, ⌊u/2⌋]` and
    /// the infinity labels partition `1..=n`.
    pub fn validate(&self) -> Result<()> {
        let EmbeddingParams { n, u, .. } = self.params;
        let bad = |detail: String| Error::InvalidPlan { n, u, detail };
        let mut seen = BTreeSet::new();
        for task in &self.tasks {
            for (d, r) in task.differences.iter().zip(task.covered(u)) {
                let r = r.ok_or_else(|| bad(format!("{task}: difference {d} vanishes")))?;
                if !seen.insert(r) {
                    return Err(bad(format!("{task}: difference {r} covered twice")));
                }
            }
        }
        let want: BTreeSet<u32> = (1..=u / 2).collect();
        if seen != want {
            let missing: Vec<_> = want.difference(&seen).collect();
            return Err(bad(format!("differences {missing:?} uncovered")));
        }
        let mut labels: Vec<u32> = self
            .tasks
            .iter()
            .flat_map(|t| t.infinity.iter().copied())
            .collect();
        labels.sort_unstable();
        if labels != (1..=n).collect::<Vec<_>>() {
            return Err(bad(format!("infinity labels {labels:?} are not 1..={n}")));
        }
        for task in &self.tasks {
            if task.infinity.len() as u32 != task.kind.infinity_count() {
                return Err(bad(format!("{task}: wrong number of infinity points")));
            }
        }
        Ok(())
    }
}

fn orbit_kind(kind: LemmaKind) -> bool {
    matches!(
        kind,
        LemmaKind::OneInfFiveDiffs | LemmaKind::TwoInfFourDiffs | LemmaKind::ThreeInfThreeDiffs
    )
}

fn leave_task(p: &EmbeddingParams, alpha: u32, skip_first: bool) -> Option<PlanTask> {
    if p.s == 0 {
        return None;
    }
    let differences = lemmas::leave_differences(p.s, alpha, skip_first);
    if alpha == 8 && p.s == 1 {
        return Some(PlanTask::new(LemmaKind::LeaveAlpha8S1, differences));
    }
    let mut t = PlanTask::new(LemmaKind::Leave, differences);
    t.s = p.s;
    t.alpha = alpha;
    t.skip_first = skip_first;
    Some(t)
}

/// The task list for `K_{n+u} \ K_n`.
pub fn build_plan(n: u32, u: u32) -> Result<Plan> {
    let params = EmbeddingParams::new(n, u)?;
    let mut hits = cases::lookup(&params);
    if hits.len() > 1 {
        let labels: Vec<_> = hits.iter().map(|h| h.label.as_str()).collect();
        return Err(Error::InvalidPlan {
            n,
            u,
            detail: format!("several cases match: {}", labels.join(", ")),
        });
    }
    let CaseSpec {
        label,
        fixed,
        bulk,
        leave,
    } = hits.pop().ok_or(Error::NoCaseMatch { n, u })?;
    let mut tasks = Vec::new();
    for (kind, printed) in fixed {
        let differences = if orbit_kind(kind) {
            let reduced: Vec<u32> = printed
                .iter()
                .map(|&d| {
                    reduce_difference(d, u).ok_or_else(|| Error::InvalidPlan {
                        n,
                        u,
                        detail: format!("{kind}: difference {d} vanishes"),
                    })
                })
                .collect::<Result<_>>()?;
            select_ordered_differences(kind.name(), u, &reduced)?
                .into_iter()
                .map(i64::from)
                .collect()
        } else {
            printed
        };
        tasks.push(PlanTask::new(kind, differences));
    }
    for d in bulk {
        tasks.push(PlanTask::new(LemmaKind::FiveInfSingleDiff, vec![d]));
    }
    let mut next = 1;
    for task in &mut tasks {
        let count = task.kind.infinity_count();
        task.infinity = (next..next + count).collect();
        next += count;
    }
    if let LeaveSpec::Alpha { alpha, skip_first } = leave {
        tasks.extend(leave_task(&params, alpha, skip_first));
    }
    let plan = Plan {
        params,
        case: label,
        tasks,
    };
    plan.validate()?;
    Ok(plan)
}

fn relabel(out: &LemmaOutput, labels: &[u32]) -> Result<Vec<Sun>> {
    out.blocks
        .iter()
        .map(|s| {
            s.map(|v| match v {
                Vertex::Infinity(k) => Vertex::Infinity(labels[k as usize - 1]),
                c => c,
            })
        })
        .collect()
}

/// Runs every task of `plan` and returns the verified union.
pub fn execute_plan(plan: &Plan) -> Result<Decomposition> {
    let EmbeddingParams { n, u, .. } = plan.params;
    let mut suns = Vec::new();
    for task in &plan.tasks {
        let out = task.run(u)?;
        if out.graph.t() as usize != task.infinity.len() {
            return Err(Error::InvalidPlan {
                n,
                u,
                detail: format!("{task}: generator used {} infinity points", out.graph.t()),
            });
        }
        out.verify().into_result()?;
        suns.extend(relabel(&out, &task.infinity)?);
    }
    let d = Decomposition::from_suns(u, n, &suns);
    d.verify().into_result()?;
    Ok(d)
}

/// A verified decomposition of `K_{n+u} \ K_n` (cyclic ids `0..u`, hole
/// `u..u+n`).
pub fn decompose_hole(n: u32, u: u32) -> Result<Decomposition> {
    require_congruent(n)?;
    require_congruent(n + u)?;
    if u == 0 {
        return Ok(Decomposition::empty(n, n));
    }
    if n <= 1 {
        // a hole of at most one point constrains nothing
        let full = construct_3ss(n + u)?;
        return Ok(Decomposition {
            m: full.m,
            hole: n,
            blocks: full.blocks,
        });
    }
    if n == 4 {
        return Err(Error::NonExistent(n));
    }
    execute_plan(&build_plan(n, u)?)
}

/// Embeds a verified system of order `base.m` into one of order `m`.
///
/// The base vertex `v` becomes `v + (m - n)`; base blocks are kept as they are
/// otherwise, so the output restricted to the top `n` ids is the base.
pub fn embed(base: &Decomposition, m: u32) -> Result<Decomposition> {
    let n = base.m;
    if base.hole != 0 {
        return Err(precondition(
            "embed",
            "base must be a complete-graph system",
        ));
    }
    base.verify().into_result()?;
    require_congruent(m)?;
    if m == n {
        return Ok(base.clone());
    }
    let min = if n <= 1 {
        n + 1
    } else {
        min_embedding_order(n)?
    };
    if m < min {
        return Err(Error::BoundViolated { n, m, min });
    }
    let u = m - n;
    let hole = decompose_hole(n, u)?;
    let mut blocks = hole.blocks;
    blocks.extend(base.blocks.iter().map(|b| b.map(|v| v + u)));
    let out = Decomposition { m, hole: 0, blocks };
    out.verify().into_result()?;
    Ok(out)
}

fn memo() -> &'static Mutex<HashMap<u32, Decomposition>> {
    static MEMO: OnceLock<Mutex<HashMap<u32, Decomposition>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The order a system of order `m` is embedded from: the largest admissible
/// `n >= 9` with `m >= min_embedding_order(n)` and `m - n` a hole residue of
/// `n`.
pub fn recursion_base(m: u32) -> Option<u32> {
    (9..m).rev().find(|&n| {
        is_admissible_order(n) == Admissibility::Admissible
            && min_embedding_order(n).is_ok_and(|min| m >= min)
            && hole_residues(n).is_ok_and(|rs| rs.contains(&((m - n) % 12)))
    })
}

/// A verified 3-sun system of order `m`.
pub fn construct_3ss(m: u32) -> Result<Decomposition> {
    match is_admissible_order(m) {
        Admissibility::NotAdmissible => return Err(Error::NotAdmissible(m)),
        Admissibility::NonExistent => return Err(Error::NonExistent(m)),
        Admissibility::Trivial => return Ok(Decomposition::empty(m, 0)),
        Admissibility::Admissible => {}
    }
    if let Some(d) = memo().lock().expect("memo lock").get(&m) {
        return Ok(d.clone());
    }
    let d = match m {
        9 | 12 | 13 => base_system(m)?,
        _ => {
            let n = recursion_base(m).ok_or_else(|| {
                Error::VerificationFailed(format!("no recursion base for order {m}"))
            })?;
            embed(&construct_3ss(n)?, m)?
        }
    };
    memo().lock().expect("memo lock").insert(m, d.clone());
    Ok(d)
}
