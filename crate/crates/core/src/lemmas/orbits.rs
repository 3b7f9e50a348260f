//! Generators built from one base-block orbit, or from the cycles of a
//! single difference.

use super::{reject, z, Blocks, LemmaOutput, Pt, I1, I2, I3, I4, I5};
use crate::design::{cycles_of_difference, orbit};
use crate::error::Result;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_differences(name: &'static str, u: u32, ds: &[u32]) -> Result<()> {
    for (i, &d) in ds.iter().enumerate() {
        if d == 0 || d > u / 2 {
            return Err(reject(
                name,
                format!("difference {d} outside [1, {}]", u / 2),
            ));
        }
        if 2 * d == u {
            return Err(reject(
                name,
                format!("difference {d} is the half difference"),
            ));
        }
        if ds[..i].contains(&d) {
            return Err(reject(name, format!("difference {d} repeated")));
        }
    }
    Ok(())
}

/// Which form of the triangle condition `(d1, d2, d3)` satisfies, if any.
/// The difference form wins when both hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Triangle {
    Difference,
    Sum,
}

fn triangle_form(u: u32, d1: u32, d2: u32, d3: u32) -> Option<Triangle> {
    if i64::from(d2) - i64::from(d1) == i64::from(d3) {
        Some(Triangle::Difference)
    } else if d1 + d2 + d3 == u {
        Some(Triangle::Sum)
    } else {
        None
    }
}

fn first_vertex(form: Triangle, d1: u32) -> i64 {
    match form {
        Triangle::Difference => i64::from(d1),
        Triangle::Sum => -i64::from(d1),
    }
}

fn orbit_output(
    name: &'static str,
    u: u32,
    t: u32,
    base: [Pt; 6],
    ds: &[u32],
) -> Result<LemmaOutput> {
    let mut b = Blocks::new(u);
    let sun = b
        .sun(base)
        .map_err(|e| reject(name, format!("base block degenerates: {e}")))?;
    b.extend(orbit(&sun, u));
    b.finish(t, ds.iter().copied().collect())
}

fn five_diff_base(u: u32, d: [u32; 5]) -> Option<[Pt; 6]> {
    let [d1, d2, d3, d4, d5] = d;
    let form = triangle_form(u, d1, d2, d3)?;
    let (d2, d4, d5) = (i64::from(d2), i64::from(d4), i64::from(d5));
    let pendant = if (d2 + d5 - d4).rem_euclid(i64::from(u)) == 0 {
        -d4
    } else {
        d4
    };
    Some([
        z(first_vertex(form, d1)),
        z(d2),
        z(0),
        I1,
        z(d2 + d5),
        z(pendant),
    ])
}

fn four_diff_base(u: u32, d: [u32; 4]) -> Option<[Pt; 6]> {
    let [d1, d2, d3, d4] = d;
    let form = triangle_form(u, d1, d2, d3)?;
    Some([
        z(first_vertex(form, d1)),
        z(i64::from(d2)),
        z(0),
        I1,
        I2,
        z(i64::from(d4)),
    ])
}

fn three_diff_base(u: u32, d: [u32; 3]) -> Option<[Pt; 6]> {
    let [d1, d2, d3] = d;
    let form = triangle_form(u, d1, d2, d3)?;
    Some([
        z(first_vertex(form, d1)),
        z(i64::from(d2)),
        z(0),
        I1,
        I2,
        I3,
    ])
}

/// `<Z_u ∪ {∞}, {d1..d5}>` as the orbit of `(±d1, d2, 0; ∞, d2 + d5, ±d4)`.
///
/// The triangle needs `d3 = d2 - d1` (first vertex `d1`) or
/// `d1 + d2 + d3 = u` (first vertex `-d1`). The last pendant is `-d4` when
/// `d2 + d5 ≡ d4`.
pub fn one_inf_five_diffs(u: u32, d: [u32; 5]) -> Result<LemmaOutput> {
    const NAME: &str = "one_inf_five_diffs";
    check_differences(NAME, u, &d)?;
    let base = five_diff_base(u, d).ok_or_else(|| {
        reject(
            NAME,
            format!("{d:?}: need d3 = d2 - d1 or d1 + d2 + d3 = u"),
        )
    })?;
    orbit_output(NAME, u, 1, base, &d)
}

/// `<Z_u ∪ {∞_1, ∞_2}, {d1..d4}>` as the orbit of `(±d1, d2, 0; ∞_1, ∞_2, d4)`.
pub fn two_inf_four_diffs(u: u32, d: [u32; 4]) -> Result<LemmaOutput> {
    const NAME: &str = "two_inf_four_diffs";
    check_differences(NAME, u, &d)?;
    let base = four_diff_base(u, d).ok_or_else(|| {
        reject(
            NAME,
            format!("{d:?}: need d3 = d2 - d1 or d1 + d2 + d3 = u"),
        )
    })?;
    orbit_output(NAME, u, 2, base, &d)
}

/// `<Z_u ∪ {∞_1, ∞_2, ∞_3}, {d1, d2, d3}>` as the orbit of
/// `(±d1, d2, 0; ∞_1, ∞_2, ∞_3)`.
pub fn three_inf_three_diffs(u: u32, d: [u32; 3]) -> Result<LemmaOutput> {
    const NAME: &str = "three_inf_three_diffs";
    check_differences(NAME, u, &d)?;
    let base = three_diff_base(u, d).ok_or_else(|| {
        reject(
            NAME,
            format!("{d:?}: need d3 = d2 - d1 or d1 + d2 + d3 = u"),
        )
    })?;
    orbit_output(NAME, u, 3, base, &d)
}

/// Orders a set of 3, 4 or 5 differences for the orbit generators: the
/// lexicographically first permutation whose leading triple satisfies the
/// triangle condition and whose base block is non-degenerate.
pub fn select_ordered_differences(name: &'static str, u: u32, set: &[u32]) -> Result<Vec<u32>> {
    check_differences(name, u, set)?;
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    let blocks = Blocks::new(u);
    let usable = |p: &[u32]| -> bool {
        let base = match p.len() {
            3 => three_diff_base(u, [p[0], p[1], p[2]]),
            4 => four_diff_base(u, [p[0], p[1], p[2], p[3]]),
            5 => five_diff_base(u, [p[0], p[1], p[2], p[3], p[4]]),
            _ => None,
        };
        base.is_some_and(|b| blocks.sun(b).is_ok())
    };
    permutations(&sorted)
        .into_iter()
        .find(|p| usable(p))
        .ok_or_else(|| {
            reject(
                name,
                format!("no ordering of {sorted:?} forms a valid base block mod {u}"),
            )
        })
}

/// All permutations of `items` in lexicographic order (`items` sorted).
fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// `<Z_u ∪ {∞}, {d}>` where the cycles of `d` have length divisible by 3.
pub fn one_inf_single_diff(u: u32, d: u32) -> Result<LemmaOutput> {
    const NAME: &str = "one_inf_single_diff";
    if !u.is_multiple_of(3) {
        return Err(reject(NAME, format!("needs u ≡ 0 (mod 3), got {u}")));
    }
    check_differences(NAME, u, &[d])?;
    if 3 * d == u {
        return Err(reject(NAME, format!("difference {d} is u/3")));
    }
    let p = u / gcd(u, d);
    if !p.is_multiple_of(3) {
        return Err(reject(
            NAME,
            format!("cycle length {p} of difference {d} is not a multiple of 3"),
        ));
    }
    let cycles = cycles_of_difference(u, d)?;
    let q = p / 3;
    let mut b = Blocks::new(u);
    if q > 2 {
        let len = p as usize;
        for cycle in &cycles {
            let x = |k: usize| z(i64::from(cycle[(k - 1) % len]));
            for i in 0..q as usize {
                let o = 3 * i;
                b.push([I1, x(2 + o), x(3 + o), x(7 + o), x(1 + o), x(4 + o)])?;
            }
        }
    } else {
        // six-cycles linked in the order cycles_of_difference returns them
        let count = cycles.len();
        if count < 2 {
            return Err(reject(
                NAME,
                format!("a single 6-cycle cannot be linked (u = {u})"),
            ));
        }
        let x = |j: usize, k: usize| z(i64::from(cycles[j % count][k - 1]));
        for j in 0..count {
            b.push([I1, x(j, 2), x(j, 3), x(j + 1, 1), x(j, 1), x(j, 4)])?;
            b.push([I1, x(j, 5), x(j, 6), x(j + 1, 4), x(j, 4), x(j, 1)])?;
        }
    }
    b.finish(1, [d].into())
}

/// `<Z_u ∪ {∞_1..∞_5}, {d}>` for any `d != u/2`.
pub fn five_inf_single_diff(u: u32, d: u32) -> Result<LemmaOutput> {
    const NAME: &str = "five_inf_single_diff";
    check_differences(NAME, u, &[d])?;
    let cycles = cycles_of_difference(u, d)?;
    let mut b = Blocks::new(u);
    for cycle in &cycles {
        let len = cycle.len();
        let x = |k: usize| z(i64::from(cycle[(k - 1) % len]));
        let (q, r) = (len / 3, len % 3);
        for i in 0..q.saturating_sub(1) {
            let o = 3 * i;
            b.push([I1, x(1 + o), x(2 + o), x(3 + o), I4, I5])?;
            b.push([I2, x(2 + o), x(3 + o), x(4 + o), I4, I5])?;
            b.push([I3, x(3 + o), x(4 + o), x(5 + o), I4, I5])?;
        }
        let m = 3 * q;
        match r {
            0 => {
                b.push([I1, x(m - 2), x(m - 1), x(m), I4, I5])?;
                b.push([I2, x(m - 1), x(m), x(1), I4, I5])?;
                b.push([I3, x(m), x(1), x(2), I4, I5])?;
            }
            1 => {
                b.push([I1, x(m - 2), x(m - 1), x(m + 1), I4, I5])?;
                b.push([I2, x(m - 1), x(m), x(1), I4, I1])?;
                b.push([I3, x(m), x(m + 1), x(2), I4, I2])?;
                b.push([I5, x(m + 1), x(1), x(m), I4, I3])?;
            }
            _ => {
                b.push([I1, x(m - 2), x(m - 1), x(m + 2), I4, I5])?;
                b.push([I2, x(m - 1), x(m), x(1), I4, I5])?;
                b.push([I3, x(m), x(m + 1), x(2), I1, I2])?;
                b.push([I4, x(m + 1), x(m + 2), x(m), I1, I3])?;
                b.push([I5, x(m + 2), x(1), x(m + 1), I2, I3])?;
            }
        }
    }
    b.finish(5, [d].into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{Sun, Vertex};

    fn base_of(output: &LemmaOutput) -> Option<Sun> {
        output.blocks.first().copied()
    }

    fn ok(out: &LemmaOutput) {
        let r = out.verify();
        assert!(r.ok, "{}: {:?}", r.summary(), r);
    }

    fn c(i: u32) -> Vertex {
        Vertex::Cyclic(i)
    }

    #[test]
    fn single_difference_with_one_point() {
        let out = one_inf_single_diff(9, 2).unwrap();
        assert_eq!(out.blocks.len(), 3);
        ok(&out);
        let out = one_inf_single_diff(12, 2).unwrap();
        assert_eq!(out.blocks.len(), 4);
        ok(&out);
        assert!(one_inf_single_diff(9, 3).is_err());
        assert!(one_inf_single_diff(10, 2).is_err());
        assert!(one_inf_single_diff(12, 6).is_err());
        // gcd(12, 3) = 3 gives 4-cycles
        assert!(one_inf_single_diff(12, 3).is_err());
        assert!(one_inf_single_diff(6, 1).is_err());
    }

    #[test]
    fn five_differences_with_one_point() {
        let out = one_inf_five_diffs(11, [1, 3, 2, 4, 5]).unwrap();
        assert_eq!(
            base_of(&out).unwrap(),
            Sun::new([c(1), c(3), c(0), Vertex::Infinity(1), c(8), c(4)]).unwrap()
        );
        assert_eq!(out.blocks.len(), 11);
        ok(&out);
        let out = one_inf_five_diffs(13, [1, 3, 2, 4, 5]).unwrap();
        assert_eq!(out.blocks.len(), 13);
        ok(&out);
        // sum form: 2 + 5 + 6 = 13 puts -d1 first
        let out = one_inf_five_diffs(13, [2, 5, 6, 1, 3]).unwrap();
        assert_eq!(
            base_of(&out).unwrap(),
            Sun::new([c(11), c(5), c(0), Vertex::Infinity(1), c(8), c(1)]).unwrap()
        );
        ok(&out);
        // 5 is not a difference class of Z_9
        assert!(one_inf_five_diffs(9, [1, 3, 5, 2, 4]).is_err());
        // d2 + d5 = d4 switches the last pendant to -d4
        let out = one_inf_five_diffs(13, [1, 3, 2, 5, 2]).unwrap_err();
        assert!(out.to_string().contains("repeated"));
        let out = one_inf_five_diffs(15, [1, 3, 2, 7, 4]).unwrap();
        assert_eq!(base_of(&out).unwrap().vertices()[5], c(8));
        ok(&out);
    }

    #[test]
    fn four_differences_with_two_points() {
        let out = two_inf_four_diffs(9, [1, 3, 2, 4]).unwrap();
        assert_eq!(out.blocks.len(), 9);
        ok(&out);
        let out = two_inf_four_diffs(12, [1, 4, 3, 5]).unwrap();
        assert_eq!(out.blocks.len(), 12);
        ok(&out);
        assert!(two_inf_four_diffs(9, [1, 3, 4, 2]).is_err());
    }

    #[test]
    fn three_differences_with_three_points() {
        let out = three_inf_three_diffs(9, [1, 3, 2]).unwrap();
        assert_eq!(out.blocks.len(), 9);
        ok(&out);
        let out = three_inf_three_diffs(11, [3, 4, 1]).unwrap();
        assert_eq!(out.blocks.len(), 11);
        ok(&out);
        // 4 is the half difference of Z_8
        assert!(three_inf_three_diffs(8, [1, 3, 4]).is_err());
    }

    #[test]
    fn ordering_search() {
        assert_eq!(
            select_ordered_differences("t", 11, &[5, 4, 3, 2, 1]).unwrap(),
            vec![1, 3, 2, 4, 5]
        );
        assert_eq!(
            select_ordered_differences("t", 11, &[1, 3, 4]).unwrap(),
            vec![1, 4, 3]
        );
        assert_eq!(
            select_ordered_differences("t", 13, &[6, 5, 2]).unwrap(),
            vec![2, 5, 6]
        );
        assert!(select_ordered_differences("t", 20, &[1, 3, 5]).is_err());
    }

    #[test]
    fn single_difference_with_five_points() {
        let out = five_inf_single_diff(11, 1).unwrap();
        assert_eq!(out.blocks.len(), 11);
        ok(&out);
        let out = five_inf_single_diff(9, 3).unwrap();
        assert_eq!(out.blocks.len(), 9);
        ok(&out);
        assert!(five_inf_single_diff(8, 4).is_err());
        for (u, d) in [(8, 2), (10, 2), (12, 3), (7, 1), (16, 4)] {
            ok(&five_inf_single_diff(u, d).unwrap());
        }
    }
}
