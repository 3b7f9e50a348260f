//! Generators for `D = {2}`, `D = {2, 4}` and `D = {1, u/3}`.

use super::{reduced_set, reject, z, Blocks, LemmaOutput, I1, I2, I3, I4, I5, I6, I7, I8};
use crate::error::Result;

/// `<Z_u ∪ {∞_1, ∞_2}, {2}>` for `u ≡ 0 (mod 4)`, `u >= 8`.
pub fn two_inf_diff2(u: u32) -> Result<LemmaOutput> {
    const NAME: &str = "two_inf_diff2";
    if !u.is_multiple_of(4) || u < 8 {
        return Err(reject(
            NAME,
            format!("needs u ≡ 0 (mod 4) and u >= 8, got {u}"),
        ));
    }
    let mut b = Blocks::new(u);
    for i in 0..i64::from(u / 4) {
        let o = 4 * i;
        b.push([I1, z(2 + o), z(o), z(3 + o), z(4 + o), I2])?;
        b.push([I2, z(3 + o), z(1 + o), z(2 + o), z(5 + o), I1])?;
    }
    b.finish(2, [2].into())
}

/// `<Z_u ∪ {∞_1..∞_4}, {2}>` for `u ≡ 0 (mod 12)`.
pub fn four_inf_diff2_mod12(u: u32) -> Result<LemmaOutput> {
    const NAME: &str = "four_inf_diff2_mod12";
    if !u.is_multiple_of(12) || u == 0 {
        return Err(reject(NAME, format!("needs u ≡ 0 (mod 12), got {u}")));
    }
    let mut b = Blocks::new(u);
    for i in 0..i64::from(u / 12) {
        let o = 12 * i;
        b.push([I1, z(o), z(2 + o), z(7 + o), I3, I4])?;
        b.push([I1, z(4 + o), z(6 + o), z(9 + o), I3, I4])?;
        b.push([I1, z(8 + o), z(10 + o), z(11 + o), I3, I4])?;
        b.push([I2, z(2 + o), z(4 + o), z(1 + o), I3, I4])?;
        b.push([I2, z(6 + o), z(8 + o), z(7 + o), I3, I4])?;
        b.push([I2, z(10 + o), z(12 + o), z(11 + o), I3, I4])?;
        b.push([I3, z(1 + o), z(3 + o), z(9 + o), I1, I2])?;
        b.push([I3, z(5 + o), z(7 + o), z(11 + o), I1, z(9 + o)])?;
        b.push([I4, z(3 + o), z(5 + o), z(1 + o), I1, I2])?;
        b.push([I4, z(9 + o), z(11 + o), z(7 + o), I2, z(13 + o)])?;
    }
    b.finish(4, [2].into())
}

/// `<Z_u ∪ {∞_1..∞_4}, {2, 4}>` for `u >= 7`, `u != 8`, `u ≢ 2 (mod 4)`.
///
/// For `u = 7` the difference 4 wraps to 3 and the target is
/// `<Z_7 ∪ {∞_1..∞_4}, {2, 3}>`.
pub fn four_inf_diff24(u: u32) -> Result<LemmaOutput> {
    const NAME: &str = "four_inf_diff24";
    if u < 7 || u == 8 || u % 4 == 2 {
        return Err(reject(
            NAME,
            format!("needs u >= 7, u != 8 and u ≢ 2 (mod 4), got {u}"),
        ));
    }
    let k = i64::from(u / 4);
    let r = u % 4;
    let mut b = Blocks::new(u);
    for i in 0..(k - 2).max(0) {
        let o = 4 * i;
        b.push([I1, z(4 + o), z(6 + o), z(5 + o), z(8 + o), I4])?;
        b.push([I2, z(5 + o), z(7 + o), z(6 + o), z(9 + o), I1])?;
        b.push([I3, z(6 + o), z(8 + o), z(7 + o), z(10 + o), I2])?;
        b.push([I4, z(7 + o), z(9 + o), z(8 + o), z(11 + o), I3])?;
    }
    let q = 4 * k;
    match r {
        0 => {
            b.push([I1, z(0), z(2), z(1), z(4), I4])?;
            b.push([I2, z(1), z(3), z(2), z(5), I1])?;
            b.push([I3, z(2), z(4), z(3), z(6), I2])?;
            b.push([I4, z(3), z(5), z(4), z(7), I3])?;
            b.push([I1, z(q - 4), z(q - 2), z(q - 3), z(0), I4])?;
            b.push([I2, z(q - 3), z(q - 1), z(q - 2), z(1), I1])?;
            b.push([I3, z(q - 2), z(0), z(q - 1), z(2), I2])?;
            b.push([I4, z(q - 1), z(1), z(0), z(3), I3])?;
        }
        1 => {
            b.push([I1, z(0), z(2), z(1), z(4), I2])?;
            b.push([I2, z(1), z(3), z(0), z(5), I1])?;
            b.push([I3, z(2), z(4), z(3), z(6), I2])?;
            b.push([I4, z(3), z(5), z(4), z(7), I3])?;
            b.push([I1, z(q - 4), z(q - 2), z(q - 3), z(q), I2])?;
            b.push([I2, z(q - 3), z(q - 1), z(q), z(0), I1])?;
            b.push([I3, z(q - 2), z(q), z(q - 1), z(1), I1])?;
            b.push([I4, z(q - 1), z(0), z(q - 2), z(2), I3])?;
            b.push([I4, z(q), z(1), z(2), z(3), I3])?;
        }
        _ => {
            b.push([I1, z(0), z(2), z(1), z(4), I4])?;
            b.push([I2, z(1), z(3), z(2), z(5), I1])?;
            b.push([I3, z(2), z(4), z(3), z(6), I2])?;
            b.push([I4, z(3), z(5), z(4), z(7), I3])?;
            b.push([I1, z(q - 4), z(q - 2), z(q - 3), z(q), I4])?;
            b.push([I2, z(q - 3), z(q - 1), z(q - 2), z(q + 1), I1])?;
            b.push([I3, z(q - 2), z(q), z(q - 1), z(q + 2), I2])?;
            b.push([I4, z(q - 1), z(q + 1), z(q), z(0), I3])?;
            b.push([I1, z(q), z(q + 2), z(q + 1), z(1), I4])?;
            b.push([I2, z(q + 1), z(0), z(q + 2), z(2), I4])?;
            b.push([I3, z(q + 2), z(1), z(0), z(3), I4])?;
        }
    }
    if k < 2 {
        // the opening and closing groups coincide when k = 1
        b.dedup();
    }
    b.finish(4, reduced_set(NAME, u, &[2, 4])?)
}

/// `<Z_u ∪ {∞_1..∞_8}, {1, u/3}>` for `u ≡ 0 (mod 3)`, `u >= 12`.
pub fn eight_inf_diff_1_u3(u: u32) -> Result<LemmaOutput> {
    const NAME: &str = "eight_inf_diff_1_u3";
    if !u.is_multiple_of(3) || u < 12 {
        return Err(reject(
            NAME,
            format!("needs u ≡ 0 (mod 3) and u >= 12, got {u}"),
        ));
    }
    let uu = i64::from(u);
    let t = uu / 3;
    let mut b = Blocks::new(u);
    if u.is_multiple_of(6) {
        let p = uu / 6;
        for i in 0..p {
            let e = 2 * i;
            b.push([I1, z(e), z(t + e), z(2 * t + e), I5, I6])?;
            b.push([I1, z(1 + e), z(t + 1 + e), z(2 * t + 1 + e), I6, I5])?;
        }
        for i in 0..p - 1 {
            let e = 2 * i;
            b.push([I2, z(2 * t + e), z(t + e), z(2 + e), z(e), I5])?;
            b.push([I2, z(2 * t + 1 + e), z(t + 1 + e), z(3 + e), z(1 + e), I6])?;
        }
        b.push([I2, z(uu - 2), z(2 * t - 2), z(0), z(t - 2), I5])?;
        b.push([I2, z(uu - 1), z(2 * t - 1), z(1), z(t - 1), I6])?;
        for i in 0..p {
            let e = 2 * i;
            b.push([I3, z(e), z(1 + e), z(2 * t + e), I7, I8])?;
            b.push([I3, z(t + e), z(t + 1 + e), z(2 * t + 1 + e), I7, I8])?;
            b.push([I4, z(1 + e), z(2 + e), z(2 * t + 2 + e), I7, I8])?;
            b.push([I4, z(t + 1 + e), z(t + 2 + e), z(2 * t + 1 + e), I7, I8])?;
            b.push([I5, z(2 * t + e), z(2 * t + 1 + e), z(1 + e), I7, I8])?;
        }
        for i in 0..p - 1 {
            let e = 2 * i;
            b.push([I6, z(2 * t + 3 + e), z(2 * t + 4 + e), z(2 + e), I7, I8])?;
        }
        b.push([I6, z(2 * t + 1), z(2 * t + 2), z(2 * t), I7, I8])?;
    } else {
        // u = 6p + 3; ranges written as their inclusive upper ends
        let p = (uu - 3) / 6;
        let upto = |last: i64| 0..=last;
        for i in upto(p) {
            let e = 2 * i;
            b.push([I1, z(e), z(t + e), z(2 * t + e), I5, I6])?;
        }
        for i in upto(p - 1) {
            let e = 2 * i;
            b.push([I1, z(1 + e), z(t + 1 + e), z(2 * t + 1 + e), I6, I5])?;
        }
        for i in upto(p - 1) {
            let e = 2 * i;
            b.push([I2, z(2 * t + e), z(t + e), z(2 + e), z(e), I5])?;
        }
        b.push([I2, z(uu - 1), z(2 * t - 1), z(0), z(t - 1), I5])?;
        for i in upto(p - 2) {
            let e = 2 * i;
            b.push([I2, z(2 * t + 1 + e), z(t + 1 + e), z(3 + e), z(1 + e), I6])?;
        }
        b.push([I2, z(uu - 2), z(2 * t - 2), z(1), z(t - 2), I6])?;
        for i in 2..=p {
            let e = 2 * i;
            b.push([I3, z(e), z(1 + e), z(2 * t + e), I7, I8])?;
        }
        b.push([I3, z(0), z(1), z(2 * t), I6, I8])?;
        b.push([I3, z(2), z(3), z(2 * t + 2), I6, I8])?;
        for i in upto(p - 1) {
            let e = 2 * i;
            b.push([I3, z(t + 1 + e), z(t + 2 + e), z(2 * t + 1 + e), I7, I8])?;
        }
        for i in upto(p - 1) {
            let e = 2 * i;
            b.push([I4, z(1 + e), z(2 + e), z(2 * t + 2 + e), I7, I8])?;
        }
        for i in upto(p) {
            let e = 2 * i;
            b.push([I4, z(t + e), z(t + 1 + e), z(2 * t + 1 + e), I7, I8])?;
        }
        for i in upto(p - 1) {
            let e = 2 * i;
            b.push([I5, z(2 * t + e), z(2 * t + 1 + e), z(1 + e), I7, I8])?;
        }
        for i in upto(p - 2) {
            let e = 2 * i;
            b.push([I6, z(2 * t + 1 + e), z(2 * t + 2 + e), z(4 + e), I7, I8])?;
        }
        b.push([I6, z(uu - 2), z(uu - 1), z(2 * t), I7, I8])?;
        b.push([I7, z(uu - 1), z(0), z(2), I5, I8])?;
    }
    b.finish(8, [1, u / 3].into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn assert_ok(out: &LemmaOutput) {
        let r = out.verify();
        assert!(r.ok, "{}: {:?}", r.summary(), r);
    }

    #[test]
    fn two_infinity_points_difference_two() {
        let out = two_inf_diff2(8).unwrap();
        assert_eq!(out.blocks.len(), 4);
        assert_eq!(out.graph.edge_count(), 24);
        assert_ok(&out);
        assert_eq!(two_inf_diff2(12).unwrap().blocks.len(), 6);
        assert!(matches!(
            two_inf_diff2(6),
            Err(Error::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn four_infinity_points_difference_two() {
        let out = four_inf_diff2_mod12(12).unwrap();
        assert_eq!(out.blocks.len(), 10);
        assert_eq!(out.graph.edge_count(), 60);
        assert_ok(&out);
        assert_eq!(four_inf_diff2_mod12(24).unwrap().blocks.len(), 20);
        assert!(four_inf_diff2_mod12(16).is_err());
    }

    #[test]
    fn four_infinity_points_differences_two_four() {
        let out = four_inf_diff24(7).unwrap();
        assert_eq!(out.blocks.len(), 7);
        assert_eq!(
            out.graph.differences().iter().copied().collect::<Vec<_>>(),
            [2, 3]
        );
        assert_ok(&out);
        let out = four_inf_diff24(12).unwrap();
        assert_eq!(out.blocks.len(), 12);
        assert_ok(&out);
        assert!(four_inf_diff24(8).is_err());
        assert!(four_inf_diff24(6).is_err());
        assert!(four_inf_diff24(10).is_err());
    }

    #[test]
    fn eight_infinity_points() {
        let out = eight_inf_diff_1_u3(12).unwrap();
        assert_eq!(out.blocks.len(), 20);
        assert_ok(&out);
        let out = eight_inf_diff_1_u3(15).unwrap();
        assert_eq!(out.blocks.len(), 25);
        assert_ok(&out);
        assert!(eight_inf_diff_1_u3(9).is_err());
    }
}
