//! Generators whose difference set contains the half difference `u/2`.

use super::{reject, z, Blocks, LemmaOutput, I1, I2, I3, I4, I5, I6, I7};
use crate::error::Result;

fn require_mod4(name: &'static str, u: u32) -> Result<()> {
    // 3u/4 and 5u/4 blocks: u must be a multiple of 4, not merely even
    if !u.is_multiple_of(4) || u < 8 {
        return Err(reject(
            name,
            format!("needs u ≡ 0 (mod 4) and u >= 8, got {u}"),
        ));
    }
    Ok(())
}

fn require_mod12(name: &'static str, u: u32) -> Result<()> {
    if !u.is_multiple_of(12) || u == 0 {
        return Err(reject(name, format!("needs u ≡ 0 (mod 12), got {u}")));
    }
    Ok(())
}

/// `<Z_u ∪ {∞_1, ∞_2, ∞_3}, {1, u/2}>`.
pub fn three_inf_1_half(u: u32) -> Result<LemmaOutput> {
    require_mod4("three_inf_1_half", u)?;
    let (uu, h) = (i64::from(u), i64::from(u / 2));
    let quarter = uu / 4;
    let mut b = Blocks::new(u);
    for i in 0..quarter - 1 {
        let e = 2 * i;
        b.push([I1, z(e), z(1 + e), z(h + 2 + e), z(h + e), I3])?;
    }
    b.push([I1, z(h - 2), z(h - 1), z(h), z(uu - 2), I3])?;
    for i in 0..quarter {
        let e = 2 * i;
        b.push([I2, z(1 + e), z(h + 1 + e), z(e), z(2 + e), I1])?;
    }
    for i in 0..quarter {
        let e = 2 * i;
        b.push([I3, z(h + 1 + e), z(h + e), z(e), z(h + 2 + e), I2])?;
    }
    b.finish(3, [1, u / 2].into())
}

/// `<Z_u ∪ {∞_1..∞_4}, {1, u/2}>`.
pub fn four_inf_1_half(u: u32) -> Result<LemmaOutput> {
    require_mod12("four_inf_1_half", u)?;
    let h = i64::from(u / 2);
    let mut b = Blocks::new(u);
    for i in 0..i64::from(u / 12) {
        let o = 6 * i;
        b.push([I1, z(o), z(h + o), z(4 + o), I3, I2])?;
        b.push([I1, z(1 + o), z(h + 1 + o), z(5 + o), I4, I2])?;
        b.push([I1, z(2 + o), z(h + 2 + o), z(h + 3 + o), I4, I3])?;
        b.push([I2, z(1 + o), z(o), z(h + 3 + o), I3, I4])?;
        b.push([I2, z(2 + o), z(3 + o), z(h + 4 + o), z(1 + o), I4])?;
        b.push([I2, z(5 + o), z(4 + o), z(h + 5 + o), z(6 + o), z(3 + o)])?;
        b.push([I3, z(3 + o), z(h + 3 + o), z(2 + o), I1, z(h + 2 + o)])?;
        b.push([I3, z(4 + o), z(h + 4 + o), z(h + o), I4, I1])?;
        b.push([I3, z(5 + o), z(h + 5 + o), z(h + 1 + o), I4, I1])?;
        b.push([I4, z(h + 1 + o), z(h + 2 + o), z(h + 3 + o), z(h + o), I2])?;
        b.push([
            I4,
            z(h + 4 + o),
            z(h + 5 + o),
            z(h + o),
            z(h + 3 + o),
            z(h + 6 + o),
        ])?;
    }
    b.finish(4, [1, u / 2].into())
}

/// `<Z_u ∪ {∞_1..∞_6}, {1, u/2}>`.
pub fn six_inf_1_half(u: u32) -> Result<LemmaOutput> {
    require_mod4("six_inf_1_half", u)?;
    let (uu, h) = (i64::from(u), i64::from(u / 2));
    let quarter = uu / 4;
    let mut b = Blocks::new(u);
    for i in 0..quarter - 1 {
        let e = 2 * i;
        b.push([I1, z(e), z(1 + e), z(h + 2 + e), z(h + e), I3])?;
    }
    b.push([I1, z(h - 2), z(h - 1), z(h), z(uu - 2), I3])?;
    for i in 0..quarter {
        let e = 2 * i;
        b.push([I2, z(1 + e), z(h + 1 + e), z(e), I6, I1])?;
        b.push([I3, z(h + 1 + e), z(h + e), z(e), I6, I2])?;
        b.push([I4, z(1 + e), z(2 + e), z(h + 2 + e), I5, I6])?;
        b.push([I5, z(h + 1 + e), z(h + 2 + e), z(2 + e), I4, I6])?;
    }
    b.finish(6, [1, u / 2].into())
}

/// `<Z_u ∪ {∞_1..∞_7}, {1, u/2}>`.
pub fn seven_inf_1_half(u: u32) -> Result<LemmaOutput> {
    require_mod12("seven_inf_1_half", u)?;
    let h = i64::from(u / 2);
    let mut b = Blocks::new(u);
    for i in 0..i64::from(u / 12) {
        let o = 6 * i;
        b.push([I1, z(o), z(h + o), z(4 + o), I7, I2])?;
        b.push([I1, z(1 + o), z(h + 1 + o), z(h + 3 + o), I7, I4])?;
        b.push([I1, z(2 + o), z(h + 2 + o), z(h + 5 + o), I5, I2])?;
        b.push([I2, z(3 + o), z(h + 3 + o), z(o), I1, I4])?;
        b.push([I2, z(4 + o), z(h + 4 + o), z(2 + o), I7, I1])?;
        b.push([I2, z(5 + o), z(h + 5 + o), z(h + 1 + o), I1, I7])?;
        b.push([I3, z(o), z(1 + o), z(h + o), I5, I6])?;
        b.push([I3, z(2 + o), z(3 + o), z(h + 2 + o), I7, I6])?;
        b.push([I3, z(4 + o), z(5 + o), z(h + 5 + o), I5, I6])?;
        b.push([I4, z(1 + o), z(2 + o), z(h + 6 + o), I2, I6])?;
        b.push([I4, z(3 + o), z(4 + o), z(h + 4 + o), I7, I6])?;
        b.push([I4, z(5 + o), z(6 + o), z(h + 5 + o), I7, I6])?;
        b.push([I5, z(h + o), z(h + 1 + o), z(1 + o), I7, I3])?;
        b.push([I5, z(h + 2 + o), z(h + 3 + o), z(3 + o), I7, I3])?;
        b.push([I5, z(h + 4 + o), z(h + 5 + o), z(5 + o), I7, z(h + 6 + o)])?;
        b.push([I6, z(h + 1 + o), z(h + 2 + o), z(h + 5 + o), I7, I4])?;
        b.push([I6, z(h + 3 + o), z(h + 4 + o), z(h + 6 + o), I7, I3])?;
    }
    b.finish(7, [1, u / 2].into())
}

/// `<Z_u ∪ {∞_1, ∞_2, ∞_3}, {1, 2, u/2}>`.
pub fn three_inf_12_half(u: u32) -> Result<LemmaOutput> {
    require_mod12("three_inf_12_half", u)?;
    let h = i64::from(u / 2);
    let mut b = Blocks::new(u);
    for i in 0..i64::from(u / 12) {
        let o = 6 * i;
        b.push([I1, z(o), z(1 + o), z(h + 1 + o), z(h + o), z(3 + o)])?;
        b.push([I1, z(2 + o), z(3 + o), z(h + 5 + o), z(h + 2 + o), z(5 + o)])?;
        b.push([I1, z(4 + o), z(5 + o), z(h + 2 + o), z(h + 4 + o), z(7 + o)])?;
        b.push([I1, z(h + 3 + o), z(h + 4 + o), z(h + o), z(h + 2 + o), I2])?;
        b.push([
            I2,
            z(1 + o),
            z(h + 1 + o),
            z(h + 3 + o),
            z(2 + o),
            z(h + 2 + o),
        ])?;
        b.push([I2, z(3 + o), z(4 + o), z(2 + o), z(h + 3 + o), z(6 + o)])?;
        b.push([
            I2,
            z(5 + o),
            z(h + 5 + o),
            z(h + 2 + o),
            z(6 + o),
            z(h + 6 + o),
        ])?;
        b.push([I3, z(2 + o), z(o), z(1 + o), z(4 + o), I2])?;
        b.push([I3, z(h + 2 + o), z(h + o), z(4 + o), z(h + 4 + o), I2])?;
        b.push([
            I3,
            z(h + 1 + o),
            z(h + 3 + o),
            z(3 + o),
            z(h + o),
            z(h + 5 + o),
        ])?;
        b.push([
            I3,
            z(h + 5 + o),
            z(h + 4 + o),
            z(5 + o),
            z(h + 7 + o),
            z(h + 6 + o),
        ])?;
    }
    b.finish(3, [1, 2, u / 2].into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(out: Result<LemmaOutput>, blocks: usize) {
        let out = out.unwrap();
        assert_eq!(out.blocks.len(), blocks);
        let r = out.verify();
        assert!(r.ok, "{}: {:?}", r.summary(), r);
    }

    #[test]
    fn smallest_orders() {
        check(three_inf_1_half(8), 6);
        check(three_inf_1_half(12), 9);
        check(four_inf_1_half(12), 11);
        check(six_inf_1_half(8), 10);
        check(seven_inf_1_half(12), 17);
        check(three_inf_12_half(12), 11);
        check(three_inf_12_half(24), 22);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(three_inf_12_half(10).is_err());
        assert!(three_inf_1_half(10).is_err());
        assert!(three_inf_1_half(4).is_err());
        assert!(seven_inf_1_half(18).is_err());
        assert!(four_inf_1_half(8).is_err());
        assert!(six_inf_1_half(6).is_err());
    }
}
