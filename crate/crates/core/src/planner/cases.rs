//! The dispatch table: for each class `c = n - 60k - 5r` and each hole
//! residue `l = h mod 12`, the generators whose difference sets and infinity
//! points together cover `<Z_u ∪ {∞_1..∞_n}, D_u>`.
//!
//! Differences are written as printed and reduced mod `u` later. The bulk set
//! `bulk` is covered by one five-point single-difference task per element.

use crate::lemmas::LemmaKind::{self, *};

use super::EmbeddingParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum LeaveSpec {
    None,
    Alpha { alpha: u32, skip_first: bool },
}

#[derive(Clone, Debug)]
pub(crate) struct CaseSpec {
    pub label: String,
    pub fixed: Vec<(LemmaKind, Vec<i64>)>,
    pub bulk: Vec<i64>,
    pub leave: LeaveSpec,
}

fn range(a: i64, b: i64) -> Vec<i64> {
    (a..=b).collect()
}

fn without(v: Vec<i64>, drop: &[i64]) -> Vec<i64> {
    v.into_iter().filter(|d| !drop.contains(d)).collect()
}

fn with(extra: &[i64], v: Vec<i64>) -> Vec<i64> {
    let mut out = extra.to_vec();
    out.extend(v);
    out
}

const fn alpha(a: u32) -> LeaveSpec {
    LeaveSpec::Alpha {
        alpha: a,
        skip_first: false,
    }
}

/// Every table entry matching `p`. A well-formed table yields exactly one;
/// the small orders 9, 13 and 21 replace their general entries.
pub(crate) fn lookup(p: &EmbeddingParams) -> Vec<CaseSpec> {
    let (k, r, s, l) = (i64::from(p.k), p.r, i64::from(p.s), p.l);
    let u = i64::from(p.u);
    let kk = 12 * k + i64::from(r);
    let k12 = 12 * k;
    let half = u / 2;
    let case = |n: u32, fixed: Vec<(LemmaKind, Vec<i64>)>, bulk: Vec<i64>, leave: LeaveSpec| {
        Some(CaseSpec {
            label: format!("class {} case {n}", p.c),
            fixed,
            bulk,
            leave,
        })
    };
    let small_order = |fixed: Vec<(LemmaKind, Vec<i64>)>, bulk: Vec<i64>| {
        Some(CaseSpec {
            label: format!("small order n = {}", p.n),
            fixed,
            bulk,
            leave: alpha(8),
        })
    };
    let mut hits = Vec::new();
    // n = 60k + 5r
    if p.c == 0 && l == 0 {
        hits.extend(case(1, vec![], range(6 * s + 1, kk + 6 * s), alpha(0)));
    }
    if p.c == 0 && matches!(r, 0 | 9) && l == 8 {
        hits.extend(case(
            2,
            vec![
                (ThreeInfThreeDiffs, vec![2, 6 * s + 3, 6 * s + 5]),
                (OneInfSingleDiff, vec![1]),
                (OneInfSingleDiff, vec![6 * s + 4]),
            ],
            range(6 * s + 6, kk + 6 * s + 4),
            alpha(4),
        ));
    }
    if p.c == 0 && matches!(r, 5 | 8) && l == 4 {
        hits.extend(case(
            3,
            vec![(FourInfDiff24, vec![2, 4]), (OneInfSingleDiff, vec![1])],
            without(range(6 * s + 3, kk + 6 * s + 2), &[6 * s + 4]),
            alpha(8),
        ));
    }
    if p.c == 0 && matches!(r, 0 | 8) && l == 3 {
        hits.extend(case(
            4,
            vec![(ThreeInf1Half, vec![1, half]), (TwoInfDiff2, vec![2])],
            range(6 * s + 3, kk + 6 * s + 1),
            alpha(4),
        ));
    }
    if p.c == 0 && matches!(r, 0) && l == 11 {
        hits.extend(case(
            5,
            vec![
                (ThreeInf12Half, vec![1, 2, half]),
                (TwoInfFourDiffs, vec![4, 6 * s + 3, 6 * s + 5, 6 * s + 7]),
            ],
            without(range(6 * s + 6, k12 + 6 * s + 5), &[6 * s + 7]),
            alpha(8),
        ));
    }
    if p.c == 0 && matches!(r, 5) && l == 1 {
        hits.extend(case(
            6,
            vec![(SixInf1Half, vec![1, half]), (FourInfDiff2Mod12, vec![2])],
            range(6 * s + 3, k12 + 6 * s + 5),
            alpha(4),
        ));
    }
    if p.c == 0 && matches!(r, 5 | 9) && l == 9 {
        hits.extend(case(
            7,
            vec![
                (ThreeInf1Half, vec![1, half]),
                (TwoInfFourDiffs, vec![2, 6 * s + 3, 6 * s + 4, 6 * s + 5]),
            ],
            range(6 * s + 6, kk + 6 * s + 4),
            alpha(4),
        ));
    }
    if p.c == 0 && matches!(r, 8) && l == 7 {
        hits.extend(case(
            8,
            vec![
                (ThreeInf12Half, vec![1, 2, half]),
                (OneInfSingleDiff, vec![4]),
                (OneInfSingleDiff, vec![6 * s + 5]),
            ],
            without(range(6 * s + 3, k12 + 6 * s + 11), &[6 * s + 4, 6 * s + 5]),
            alpha(8),
        ));
    }
    if p.c == 0 && matches!(r, 9) && l == 5 {
        hits.extend(case(
            9,
            vec![
                (ThreeInf1Half, vec![1, half]),
                (OneInfSingleDiff, vec![2]),
                (OneInfSingleDiff, vec![4]),
            ],
            without(range(6 * s + 3, k12 + 6 * s + 11), &[6 * s + 4]),
            alpha(8),
        ));
    }

    // n = 60k + 5r + 1
    if p.c == 1 && matches!(r, 4) && l == 5 && k == 0 {
        hits.extend(small_order(
            vec![
                (FourInfDiff24, vec![2, 4]),
                (OneInfSingleDiff, vec![1]),
                (OneInfSingleDiff, vec![6 * s + 7]),
            ],
            vec![6 * s + 3, 6 * s + 5, 6 * s + 6],
        ));
    }
    if p.c == 1 && matches!(r, 0 | 3) && l == 1 {
        hits.extend(case(
            1,
            vec![(OneInfSingleDiff, vec![6 * s + 2])],
            without(range(6 * s + 1, kk + 6 * s + 1), &[6 * s + 2]),
            alpha(0),
        ));
    }
    if p.c == 1 && l == 9 {
        hits.extend(case(
            2,
            vec![
                (ThreeInfThreeDiffs, vec![1, 6 * s + 3, 6 * s + 4]),
                (ThreeInfThreeDiffs, vec![2, 6 * s + 5, 6 * s + 7]),
            ],
            without(range(6 * s + 6, kk + 6 * s + 5), &[6 * s + 7]),
            alpha(4),
        ));
    }
    if p.c == 1 && matches!(r, 4 | 7) && l == 5 && !(r == 4 && k == 0) {
        hits.extend(case(
            3,
            vec![
                (FourInfDiff24, vec![2, 4]),
                (OneInfSingleDiff, vec![1]),
                (OneInfSingleDiff, vec![6 * s + 8]),
            ],
            without(range(6 * s + 3, kk + 6 * s + 3), &[6 * s + 4, 6 * s + 8]),
            alpha(8),
        ));
    }
    if p.c == 1 && matches!(r, 0 | 4) && l == 6 {
        hits.extend(case(
            4,
            vec![
                (ThreeInf1Half, vec![1, half]),
                (ThreeInfThreeDiffs, vec![2, 6 * s + 3, 6 * s + 5]),
            ],
            without(range(6 * s + 4, kk + 6 * s + 3), &[6 * s + 5]),
            alpha(4),
        ));
    }
    if p.c == 1 && matches!(r, 0) && l == 10 {
        hits.extend(case(
            5,
            vec![
                (SixInf1Half, vec![1, half]),
                (FourInfDiff2Mod12, vec![2]),
                (
                    OneInfFiveDiffs,
                    vec![4, 6 * s + 3, 6 * s + 5, 6 * s + 6, 6 * s + 7],
                ),
            ],
            range(6 * s + 8, k12 + 6 * s + 5),
            alpha(8),
        ));
    }
    if p.c == 1 && matches!(r, 3 | 7) && l == 0 {
        hits.extend(case(
            6,
            vec![(SixInf1Half, vec![1, half])],
            with(&[2], range(6 * s + 3, kk + 6 * s)),
            alpha(4),
        ));
    }
    if p.c == 1 && matches!(r, 3) && l == 4 {
        hits.extend(case(
            7,
            vec![
                (FourInf1Half, vec![1, half]),
                (OneInfSingleDiff, vec![2]),
                (OneInfSingleDiff, vec![6 * s + 5]),
            ],
            without(range(6 * s + 3, k12 + 6 * s + 5), &[6 * s + 5]),
            alpha(4),
        ));
    }
    if p.c == 1 && matches!(r, 4) && l == 2 {
        hits.extend(case(
            8,
            vec![(FourInf1Half, vec![1, half]), (TwoInfDiff2, vec![2])],
            range(6 * s + 3, k12 + 6 * s + 5),
            alpha(4),
        ));
    }
    if p.c == 1 && matches!(r, 7) && l == 8 {
        hits.extend(case(
            9,
            vec![
                (ThreeInf12Half, vec![1, 2, half]),
                (ThreeInfThreeDiffs, vec![4, 6 * s + 3, 6 * s + 7]),
            ],
            without(range(6 * s + 5, k12 + 6 * s + 11), &[6 * s + 7]),
            alpha(8),
        ));
    }

    // n = 60k + 5r + 2
    if p.c == 2 && matches!(r, 2 | 11) && l == 3 {
        hits.extend(case(
            1,
            vec![
                (OneInfSingleDiff, vec![6 * s + 2]),
                (OneInfSingleDiff, vec![6 * s + 4]),
            ],
            without(range(6 * s + 1, kk + 6 * s + 2), &[6 * s + 2, 6 * s + 4]),
            alpha(0),
        ));
    }
    if p.c == 2 && l == 7 {
        hits.extend(case(
            2,
            vec![(TwoInfFourDiffs, vec![1, 2, 6 * s + 3, 6 * s + 4])],
            range(6 * s + 5, kk + 6 * s + 4),
            alpha(4),
        ));
    }
    if p.c == 2 && matches!(r, 7 | 10) && l == 11 {
        hits.extend(case(
            3,
            vec![
                (ThreeInfThreeDiffs, vec![1, 6 * s + 3, 6 * s + 4]),
                (ThreeInfThreeDiffs, vec![2, 6 * s + 5, 6 * s + 7]),
                (OneInfSingleDiff, vec![6 * s + 8]),
            ],
            without(range(6 * s + 6, kk + 6 * s + 6), &[6 * s + 7, 6 * s + 8]),
            alpha(4),
        ));
    }
    if p.c == 2 && matches!(r, 2) && l == 6 {
        hits.extend(case(
            4,
            vec![
                (FourInf1Half, vec![1, half]),
                (ThreeInfThreeDiffs, vec![2, 6 * s + 3, 6 * s + 5]),
            ],
            without(range(6 * s + 4, k12 + 6 * s + 5), &[6 * s + 5]),
            alpha(4),
        ));
    }
    if p.c == 2 && matches!(r, 2 | 10) && l == 10 {
        hits.extend(case(
            5,
            vec![
                (SixInf1Half, vec![1, half]),
                (
                    OneInfFiveDiffs,
                    vec![2, 6 * s + 3, 6 * s + 4, 6 * s + 5, 6 * s + 6],
                ),
            ],
            range(6 * s + 7, kk + 6 * s + 5),
            alpha(4),
        ));
    }
    if p.c == 2 && matches!(r, 7 | 11) && l == 4 {
        hits.extend(case(
            6,
            vec![(ThreeInf1Half, vec![1, half]), (FourInfDiff24, vec![2, 4])],
            without(range(6 * s + 3, kk + 6 * s + 2), &[6 * s + 4]),
            alpha(8),
        ));
    }
    if p.c == 2 && matches!(r, 7) && l == 8 {
        hits.extend(case(
            7,
            vec![
                (ThreeInf1Half, vec![1, half]),
                (ThreeInfThreeDiffs, vec![2, 6 * s + 3, 6 * s + 5]),
                (OneInfSingleDiff, vec![6 * s + 7]),
            ],
            without(range(6 * s + 4, k12 + 6 * s + 11), &[6 * s + 5, 6 * s + 7]),
            alpha(4),
        ));
    }
    if p.c == 2 && matches!(r, 10) && l == 2 {
        hits.extend(case(
            8,
            vec![(SixInf1Half, vec![1, half]), (OneInfSingleDiff, vec![2])],
            range(6 * s + 3, k12 + 6 * s + 11),
            alpha(4),
        ));
    }
    if p.c == 2 && matches!(r, 11) && l == 0 {
        hits.extend(case(
            9,
            vec![(SevenInf1Half, vec![1, half])],
            with(&[2], range(6 * s + 3, k12 + 6 * s + 11)),
            alpha(4),
        ));
    }

    // n = 60k + 5r + 3
    if p.c == 3 && matches!(r, 2) && l == 5 && k == 0 {
        hits.extend(small_order(
            vec![
                (SixInf1Half, vec![1, 6 * s + 6]),
                (FourInfDiff2Mod12, vec![2]),
                (ThreeInfThreeDiffs, vec![4, 6 * s + 3, 6 * s + 5]),
            ],
            vec![],
        ));
    }
    if p.c == 3 && l == 4 {
        hits.extend(case(
            1,
            vec![(ThreeInfThreeDiffs, vec![1, 6 * s + 3, 6 * s + 4])],
            with(&[2], range(6 * s + 5, kk + 6 * s + 3)),
            alpha(4),
        ));
    }
    if p.c == 3 && matches!(r, 2 | 5) && l == 8 {
        hits.extend(case(
            2,
            vec![
                (TwoInfFourDiffs, vec![1, 6 * s + 3, 6 * s + 4, 6 * s + 5]),
                (OneInfSingleDiff, vec![2]),
            ],
            range(6 * s + 6, kk + 6 * s + 5),
            alpha(4),
        ));
    }
    if p.c == 3 && matches!(r, 6 | 9) && l == 0 && s == 0 {
        hits.extend(case(
            3,
            vec![(EightInfDiff1U3, vec![1, u / 3])],
            without(range(2, kk + 1), &[u / 3]),
            LeaveSpec::None,
        ));
    }
    if p.c == 3 && matches!(r, 6 | 9) && l == 0 && s > 0 {
        hits.extend(case(
            3,
            vec![
                (ThreeInfThreeDiffs, vec![1, 5 * s, 5 * s + 1]),
                (ThreeInfThreeDiffs, vec![2, 6 * s + 1, 6 * s + 3]),
                (OneInfSingleDiff, vec![6 * s + 2]),
                (OneInfSingleDiff, vec![6 * s + 4]),
            ],
            with(&[2 * s + 1, 4 * s], range(6 * s + 5, kk + 6 * s + 1)),
            LeaveSpec::Alpha {
                alpha: 0,
                skip_first: true,
            },
        ));
    }
    if p.c == 3 && matches!(r, 2 | 6) && l == 1 {
        hits.extend(case(
            4,
            vec![(ThreeInf1Half, vec![1, half])],
            with(&[2], range(6 * s + 3, kk + 6 * s + 1)),
            alpha(4),
        ));
    }
    if p.c == 3 && matches!(r, 2) && l == 5 && k > 0 {
        hits.extend(case(
            5,
            vec![
                (SixInf1Half, vec![1, half]),
                (FourInfDiff2Mod12, vec![2]),
                (ThreeInfThreeDiffs, vec![4, 6 * s + 3, 6 * s + 7]),
            ],
            without(range(6 * s + 5, k12 + 6 * s + 5), &[6 * s + 7]),
            alpha(8),
        ));
    }
    if p.c == 3 && matches!(r, 5 | 9) && l == 7 {
        hits.extend(case(
            6,
            vec![
                (SixInf1Half, vec![1, half]),
                (TwoInfFourDiffs, vec![2, 6 * s + 3, 6 * s + 4, 6 * s + 5]),
            ],
            range(6 * s + 6, kk + 6 * s + 4),
            alpha(4),
        ));
    }
    if p.c == 3 && matches!(r, 5) && l == 11 {
        hits.extend(case(
            7,
            vec![
                (FourInf1Half, vec![1, half]),
                (TwoInfFourDiffs, vec![2, 6 * s + 3, 6 * s + 5, 6 * s + 6]),
                (OneInfSingleDiff, vec![4]),
                (OneInfSingleDiff, vec![6 * s + 7]),
            ],
            range(6 * s + 8, k12 + 6 * s + 11),
            alpha(8),
        ));
    }
    if p.c == 3 && matches!(r, 6) && l == 9 {
        hits.extend(case(
            8,
            vec![
                (ThreeInf1Half, vec![1, half]),
                (ThreeInfThreeDiffs, vec![2, 6 * s + 3, 6 * s + 5]),
                (OneInfSingleDiff, vec![4]),
                (OneInfSingleDiff, vec![6 * s + 7]),
            ],
            without(range(6 * s + 6, k12 + 6 * s + 11), &[6 * s + 7]),
            alpha(8),
        ));
    }
    if p.c == 3 && matches!(r, 9) && l == 3 {
        hits.extend(case(
            9,
            vec![(ThreeInf12Half, vec![1, 2, half])],
            range(6 * s + 3, k12 + 6 * s + 11),
            alpha(4),
        ));
    }

    // n = 60k + 5r + 4
    if p.c == 4 && matches!(r, 1) && l == 2 && k == 0 {
        hits.extend(small_order(vec![(FourInfDiff24, vec![2, 4])], vec![1]));
    }
    if p.c == 4 && l == 2 && !(r == 1 && k == 0) {
        hits.extend(case(
            1,
            vec![(FourInfDiff24, vec![2, 4])],
            with(&[1, 6 * s + 3], range(6 * s + 5, kk + 6 * s + 2)),
            alpha(8),
        ));
    }
    if p.c == 4 && matches!(r, 0 | 9) && l == 6 {
        hits.extend(case(
            2,
            vec![
                (ThreeInfThreeDiffs, vec![1, 6 * s + 3, 6 * s + 4]),
                (OneInfSingleDiff, vec![2]),
            ],
            range(6 * s + 5, kk + 6 * s + 4),
            alpha(4),
        ));
    }
    if p.c == 4 && matches!(r, 1 | 4) && l == 10 {
        hits.extend(case(
            3,
            vec![
                (TwoInfFourDiffs, vec![1, 6 * s + 3, 6 * s + 5, 6 * s + 6]),
                (OneInfSingleDiff, vec![2]),
                (OneInfSingleDiff, vec![6 * s + 4]),
            ],
            range(6 * s + 7, kk + 6 * s + 6),
            alpha(4),
        ));
    }
    if p.c == 4 && matches!(r, 0 | 4) && l == 5 {
        hits.extend(case(
            4,
            vec![
                (SixInf1Half, vec![1, half]),
                (ThreeInfThreeDiffs, vec![2, 6 * s + 3, 6 * s + 5]),
            ],
            without(range(6 * s + 4, kk + 6 * s + 3), &[6 * s + 5]),
            alpha(4),
        ));
    }
    if p.c == 4 && matches!(r, 0) && l == 9 {
        hits.extend(case(
            5,
            vec![
                (FourInf1Half, vec![1, half]),
                (ThreeInfThreeDiffs, vec![2, 6 * s + 3, 6 * s + 5]),
                (OneInfSingleDiff, vec![4]),
                (OneInfSingleDiff, vec![6 * s + 7]),
            ],
            without(range(6 * s + 6, k12 + 6 * s + 5), &[6 * s + 7]),
            alpha(8),
        ));
    }
    if p.c == 4 && matches!(r, 1) && l == 7 {
        hits.extend(case(
            6,
            vec![
                (SevenInf1Half, vec![1, half]),
                (TwoInfFourDiffs, vec![2, 4, 6 * s + 3, 6 * s + 5]),
            ],
            range(6 * s + 6, k12 + 6 * s + 5),
            alpha(8),
        ));
    }
    if p.c == 4 && matches!(r, 1 | 9) && l == 11 {
        hits.extend(case(
            7,
            vec![
                (ThreeInf1Half, vec![1, half]),
                (OneInfFiveDiffs, vec![2, 4, 6 * s + 3, 6 * s + 5, 6 * s + 6]),
            ],
            range(6 * s + 7, kk + 6 * s + 6),
            alpha(8),
        ));
    }
    if p.c == 4 && matches!(r, 4) && l == 1 {
        hits.extend(case(
            8,
            vec![(FourInf1Half, vec![1, half])],
            with(&[2], range(6 * s + 3, k12 + 6 * s + 5)),
            alpha(4),
        ));
    }
    if p.c == 4 && matches!(r, 9) && l == 3 {
        hits.extend(case(
            9,
            vec![(ThreeInf1Half, vec![1, half]), (OneInfSingleDiff, vec![2])],
            range(6 * s + 3, k12 + 6 * s + 11),
            alpha(4),
        ));
    }
    hits
}
