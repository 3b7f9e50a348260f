//! Decompositions of `<Z_u, L>` for the leftover "small" differences.
//!
//! With `s` block families the leave is
//!
//! | `alpha` | `L`                              |
//! |---------|----------------------------------|
//! | 0       | `[1, 6s]`                        |
//! | 4       | `[3, 6s+2]`                      |
//! | 8       | `[3, 6s+4] \ {4, 6s+3}`          |
//!
//! and `skip_first` (only with `alpha = 0`) drops the first orbit, leaving
//! `[3, 6s] \ {2s+1, 4s, 5s, 5s+1}`.

use super::{reduced_set, reject, z, Blocks, LemmaOutput};
use crate::design::{orbit, HoleGraph};
use crate::error::Result;

/// Base block for the `alpha = 8`, `s = 1` leave `{3, 5, 6, 7, 8, 10}`:
/// triangle differences `{3, 7, 10}`, pendant differences `{5, 6, 8}`.
pub const LEAVE_ALPHA8_S1_BASE: [i64; 6] = [10, 3, 0, 15, 9, 8];

/// The nominal (unreduced) leave for the given parameters.
pub fn leave_differences(s: u32, alpha: u32, skip_first: bool) -> Vec<i64> {
    let s = i64::from(s);
    if s == 0 {
        return Vec::new();
    }
    let range = |a: i64, b: i64| (a..=b).collect::<Vec<_>>();
    match (alpha, skip_first) {
        (0, false) => range(1, 6 * s),
        (0, true) => range(3, 6 * s)
            .into_iter()
            .filter(|d| ![2 * s + 1, 4 * s, 5 * s, 5 * s + 1].contains(d))
            .collect(),
        (4, _) => range(3, 6 * s + 2),
        _ => range(3, 6 * s + 4)
            .into_iter()
            .filter(|&d| d != 4 && d != 6 * s + 3)
            .collect(),
    }
}

fn edgeless(u: u32) -> LemmaOutput {
    LemmaOutput {
        graph: HoleGraph::edgeless(u),
        blocks: Vec::new(),
    }
}

/// `<Z_u, L>` for `alpha ∈ {0, 4, 8}` and `u > 12s + alpha`.
///
/// `alpha = 8` also accepts `u = 12s + 7`, where the difference `6s + 4`
/// wraps to `6s + 3`. `alpha = 8` with `s = 1` is handled by
/// [`leave_alpha8_s1`].
pub fn leave_decomposition(u: u32, s: u32, alpha: u32, skip_first: bool) -> Result<LemmaOutput> {
    const NAME: &str = "leave_decomposition";
    if ![0, 4, 8].contains(&alpha) {
        return Err(reject(
            NAME,
            format!("alpha must be 0, 4 or 8, got {alpha}"),
        ));
    }
    if skip_first && alpha != 0 {
        return Err(reject(NAME, "skip_first requires alpha = 0"));
    }
    let wraps = alpha == 8 && u == 12 * s + 7;
    if u <= 12 * s + alpha && !wraps {
        return Err(reject(
            NAME,
            format!("needs u > 12s + alpha = {}, got {u}", 12 * s + alpha),
        ));
    }
    if alpha == 8 && s == 1 {
        return Err(reject(NAME, "alpha = 8 with s = 1 needs leave_alpha8_s1"));
    }
    if s == 0 {
        return Ok(edgeless(u));
    }
    let uu = i64::from(u);
    let si = i64::from(s);
    let mut b = Blocks::new(u);
    let mut bases = Vec::new();
    let first = match (skip_first, alpha) {
        (true, _) => 1,
        (false, 0) => 0,
        (false, 4) => {
            bases.push(b.sun([
                z(6 * si + 1),
                z(4 * si),
                z(0),
                z(si),
                z(9 * si),
                z(6 * si + 2),
            ])?);
            1
        }
        (false, _) => {
            bases.push(b.sun([
                z(6 * si + 1),
                z(4 * si),
                z(0),
                z(si),
                z(9 * si),
                z(6 * si + 4),
            ])?);
            bases.push(b.sun([
                z(5 * si + 2),
                z(5 * si - 1),
                z(0),
                z(3 * si),
                z(si),
                z(6 * si + 2),
            ])?);
            2
        }
    };
    for j in first..si {
        bases.push(b.sun([
            z(5 * si + 1 + j),
            z(5 * si - j),
            z(0),
            z(3 * si),
            z(si),
            z(uu - 2 - 2 * j),
        ])?);
    }
    for base in &bases {
        b.extend(orbit(base, u));
    }
    let nominal = leave_differences(s, alpha, skip_first);
    if nominal.is_empty() {
        return Ok(edgeless(u));
    }
    b.finish(0, reduced_set(NAME, u, &nominal)?)
}

/// `<Z_u, {3, 5, 6, 7, 8, 10}>` by one orbit of [`LEAVE_ALPHA8_S1_BASE`],
/// for `u > 20` (or `u = 19`, where 10 wraps to 9).
pub fn leave_alpha8_s1(u: u32) -> Result<LemmaOutput> {
    const NAME: &str = "leave_alpha8_s1";
    if u <= 20 && u != 19 {
        return Err(reject(NAME, format!("needs u > 20 or u = 19, got {u}")));
    }
    let mut b = Blocks::new(u);
    let base = b.sun(LEAVE_ALPHA8_S1_BASE.map(z))?;
    b.extend(orbit(&base, u));
    let nominal = leave_differences(1, 8, false);
    b.finish(0, reduced_set(NAME, u, &nominal)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diffs(out: &LemmaOutput) -> Vec<u32> {
        out.graph.differences().iter().copied().collect()
    }

    fn ok(out: &LemmaOutput) {
        let r = out.verify();
        assert!(r.ok, "{}: {:?}", r.summary(), r);
    }

    #[test]
    fn plain_leave() {
        let out = leave_decomposition(13, 1, 0, false).unwrap();
        assert_eq!(out.blocks.len(), 13);
        assert_eq!(diffs(&out), (1..=6).collect::<Vec<_>>());
        ok(&out);
    }

    #[test]
    fn shifted_leaves() {
        let out = leave_decomposition(17, 1, 4, false).unwrap();
        assert_eq!(out.blocks.len(), 17);
        assert_eq!(diffs(&out), (3..=8).collect::<Vec<_>>());
        ok(&out);
        let out = leave_decomposition(33, 2, 8, false).unwrap();
        assert_eq!(out.blocks.len(), 66);
        let want: Vec<u32> = (3..=16).filter(|&d| d != 4 && d != 15).collect();
        assert_eq!(diffs(&out), want);
        ok(&out);
    }

    #[test]
    fn wrapped_alpha8() {
        // u = 12s + 7: 6s + 4 wraps onto the missing 6s + 3
        let out = leave_decomposition(31, 2, 8, false).unwrap();
        let want: Vec<u32> = (3..=15).filter(|&d| d != 4).collect();
        assert_eq!(diffs(&out), want);
        ok(&out);
        assert!(leave_decomposition(32, 2, 8, false).is_err());
    }

    #[test]
    fn skip_first_orbit() {
        let out = leave_decomposition(37, 3, 0, true).unwrap();
        assert_eq!(out.blocks.len(), 2 * 37);
        let want: Vec<u32> = (3..=18).filter(|d| ![7, 12, 15, 16].contains(d)).collect();
        assert_eq!(diffs(&out), want);
        ok(&out);
        let out = leave_decomposition(15, 1, 0, true).unwrap();
        assert!(out.blocks.is_empty());
    }

    #[test]
    fn empty_and_rejected() {
        assert!(leave_decomposition(9, 0, 4, false)
            .unwrap()
            .blocks
            .is_empty());
        assert!(leave_decomposition(24, 2, 0, false).is_err());
        assert!(leave_decomposition(30, 1, 4, true).is_err());
        assert!(leave_decomposition(30, 1, 2, false).is_err());
        assert!(leave_decomposition(30, 1, 8, false).is_err());
    }

    #[test]
    fn alpha8_single_family() {
        for u in [19, 21, 23, 24, 40] {
            let out = leave_alpha8_s1(u).unwrap();
            assert_eq!(out.blocks.len(), u as usize);
            ok(&out);
        }
        assert!(leave_alpha8_s1(20).is_err());
        assert!(leave_alpha8_s1(18).is_err());
    }
}
