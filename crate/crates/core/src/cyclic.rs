//! Cyclic-interval set algebra over the palette `[1, t]`: the four
//! interval/co-interval constructors, the cyclic distance `dif`, and
//! classification of color sets as intervals or t-cyclic intervals.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("palette size {0} exceeds the supported maximum of 64")]
    PaletteTooLarge(u32),
    #[error("palette size must be positive")]
    PaletteEmpty,
    #[error("color {color} outside palette [1, {t}]")]
    ColorOutOfRange { color: u32, t: u32 },
    #[error("mismatched palette sizes {0} and {1}")]
    PaletteMismatch(u32, u32),
    #[error("chained union over an empty list")]
    EmptyChain,
    #[error("chain member {0} is not a t-cyclic interval")]
    ChainMemberNotCyclic(usize),
    #[error("chain broken: members {0} and {1} are disjoint")]
    ChainBroken(usize, usize),
    #[error("chained union is not a t-cyclic interval")]
    ChainUnionNotCyclic,
}

/// A subset of the palette `[1, t]`, stored as a bitset. `t <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorSet {
    t: u32,
    bits: u64,
}

impl ColorSet {
    pub fn empty(t: u32) -> Result<ColorSet, AlgebraError> {
        if t == 0 {
            return Err(AlgebraError::PaletteEmpty);
        }
        if t > 64 {
            return Err(AlgebraError::PaletteTooLarge(t));
        }
        Ok(ColorSet { t, bits: 0 })
    }

    /// The full palette `[1, t]`.
    pub fn full(t: u32) -> Result<ColorSet, AlgebraError> {
        let mut s = ColorSet::empty(t)?;
        s.bits = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
        Ok(s)
    }

    pub(crate) fn from_bits(t: u32, bits: u64) -> ColorSet {
        debug_assert!((1..=64).contains(&t));
        debug_assert!(t == 64 || bits < (1u64 << t));
        ColorSet { t, bits }
    }

    pub fn from_colors(t: u32, colors: &[u32]) -> Result<ColorSet, AlgebraError> {
        let mut s = ColorSet::empty(t)?;
        for &c in colors {
            s.insert(c)?;
        }
        Ok(s)
    }

    pub fn insert(&mut self, color: u32) -> Result<(), AlgebraError> {
        if color < 1 || color > self.t {
            return Err(AlgebraError::ColorOutOfRange { color, t: self.t });
        }
        self.bits |= 1u64 << (color - 1);
        Ok(())
    }

    pub fn contains(&self, color: u32) -> bool {
        color >= 1 && color <= self.t && self.bits & (1u64 << (color - 1)) != 0
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn members(&self) -> Vec<u32> {
        (1..=self.t).filter(|&c| self.contains(c)).collect()
    }

    pub fn union(&self, other: &ColorSet) -> Result<ColorSet, AlgebraError> {
        if self.t != other.t {
            return Err(AlgebraError::PaletteMismatch(self.t, other.t));
        }
        Ok(ColorSet { t: self.t, bits: self.bits | other.bits })
    }

    pub fn intersection(&self, other: &ColorSet) -> Result<ColorSet, AlgebraError> {
        if self.t != other.t {
            return Err(AlgebraError::PaletteMismatch(self.t, other.t));
        }
        Ok(ColorSet { t: self.t, bits: self.bits & other.bits })
    }

    pub fn complement(&self) -> ColorSet {
        let full = ColorSet::full(self.t).expect("t validated at construction");
        ColorSet { t: self.t, bits: full.bits & !self.bits }
    }

    pub fn is_subset(&self, other: &ColorSet) -> bool {
        self.t == other.t && self.bits & !other.bits == 0
    }

    /// Nonempty set of consecutive integers.
    pub fn is_interval(&self) -> bool {
        if self.bits == 0 {
            return false;
        }
        let shifted = self.bits >> self.bits.trailing_zeros();
        shifted & (shifted + 1) == 0
    }

    /// Nonempty, and either an interval, the whole palette, or the
    /// complement (within `[1, t]`) of an interval.
    pub fn is_cyclic_interval(&self) -> bool {
        if self.bits == 0 {
            return false;
        }
        let comp = self.complement();
        self.is_interval() || comp.is_empty() || comp.is_interval()
    }
}

fn check_color(color: u32, t: u32) -> Result<(), AlgebraError> {
    if t == 0 {
        return Err(AlgebraError::PaletteEmpty);
    }
    if t > 64 {
        return Err(AlgebraError::PaletteTooLarge(t));
    }
    if color < 1 || color > t {
        return Err(AlgebraError::ColorOutOfRange { color, t });
    }
    Ok(())
}

/// `[min{i1,i2}, max{i1,i2}]`.
pub fn intcyc_closed_1(i1: u32, i2: u32, t: u32) -> Result<ColorSet, AlgebraError> {
    check_color(i1, t)?;
    check_color(i2, t)?;
    let (lo, hi) = (i1.min(i2), i1.max(i2));
    let mut s = ColorSet::empty(t)?;
    for c in lo..=hi {
        s.insert(c)?;
    }
    Ok(s)
}

/// Closed form minus the two endpoints.
pub fn intcyc_open_1(i1: u32, i2: u32, t: u32) -> Result<ColorSet, AlgebraError> {
    let mut s = intcyc_closed_1(i1, i2, t)?;
    s.bits &= !(1u64 << (i1 - 1));
    s.bits &= !(1u64 << (i2 - 1));
    Ok(s)
}

/// `[1, t]` minus the closed form.
pub fn intcyc_open_2(i1: u32, i2: u32, t: u32) -> Result<ColorSet, AlgebraError> {
    Ok(intcyc_closed_1(i1, i2, t)?.complement())
}

/// `[1, t]` minus the open form.
pub fn intcyc_closed_2(i1: u32, i2: u32, t: u32) -> Result<ColorSet, AlgebraError> {
    Ok(intcyc_open_1(i1, i2, t)?.complement())
}

/// `min(|closed_1|, |closed_2|) - 1`.
pub fn dif(i1: u32, i2: u32, t: u32) -> Result<u32, AlgebraError> {
    let a = intcyc_closed_1(i1, i2, t)?.len();
    let b = intcyc_closed_2(i1, i2, t)?.len();
    Ok(a.min(b) - 1)
}

/// Union of a chain of t-cyclic intervals with pairwise-consecutive
/// nonempty intersections. The union is itself checked to be a t-cyclic
/// interval and an error is returned if it is not.
pub fn chained_union(qs: &[ColorSet], t: u32) -> Result<ColorSet, AlgebraError> {
    if qs.is_empty() {
        return Err(AlgebraError::EmptyChain);
    }
    for (i, q) in qs.iter().enumerate() {
        if q.t() != t {
            return Err(AlgebraError::PaletteMismatch(q.t(), t));
        }
        if !q.is_cyclic_interval() {
            return Err(AlgebraError::ChainMemberNotCyclic(i));
        }
    }
    let mut acc = qs[0];
    for (i, q) in qs.iter().enumerate().skip(1) {
        if qs[i - 1].intersection(q)?.is_empty() {
            return Err(AlgebraError::ChainBroken(i - 1, i));
        }
        acc = acc.union(q)?;
    }
    if !acc.is_cyclic_interval() {
        return Err(AlgebraError::ChainUnionNotCyclic);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(t: u32, members: &[u32]) -> ColorSet {
        ColorSet::from_colors(t, members).unwrap()
    }

    #[test]
    fn intcyc_basics() {
        assert_eq!(intcyc_closed_1(2, 4, 5).unwrap(), set(5, &[2, 3, 4]));
        assert_eq!(intcyc_open_2(2, 4, 5).unwrap(), set(5, &[1, 5]));
        assert_eq!(intcyc_closed_2(2, 4, 5).unwrap(), set(5, &[1, 2, 4, 5]));
        assert_eq!(intcyc_open_1(2, 4, 5).unwrap(), set(5, &[3]));
    }

    #[test]
    fn intcyc_degenerate() {
        assert_eq!(intcyc_closed_1(3, 3, 7).unwrap(), set(7, &[3]));
        assert_eq!(intcyc_closed_2(3, 3, 7).unwrap(), ColorSet::full(7).unwrap());
    }

    #[test]
    fn intcyc_range_errors() {
        assert!(matches!(intcyc_closed_1(0, 3, 5), Err(AlgebraError::ColorOutOfRange { .. })));
        assert!(matches!(intcyc_closed_1(1, 6, 5), Err(AlgebraError::ColorOutOfRange { .. })));
    }

    #[test]
    fn dif_values() {
        assert_eq!(dif(2, 4, 5).unwrap(), 2);
        assert_eq!(dif(1, 5, 5).unwrap(), 1);
        for t in 1..=8 {
            for i in 1..=t {
                assert_eq!(dif(i, i, t).unwrap(), 0);
            }
        }
    }

    #[test]
    fn dif_symmetry() {
        for t in 1..=8 {
            for i1 in 1..=t {
                for i2 in 1..=t {
                    assert_eq!(dif(i1, i2, t).unwrap(), dif(i2, i1, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn partition_identities() {
        for t in 1..=8u32 {
            for i1 in 1..=t {
                for i2 in 1..=t {
                    let c1 = intcyc_closed_1(i1, i2, t).unwrap();
                    let o1 = intcyc_open_1(i1, i2, t).unwrap();
                    let o2 = intcyc_open_2(i1, i2, t).unwrap();
                    let c2 = intcyc_closed_2(i1, i2, t).unwrap();
                    let full = ColorSet::full(t).unwrap();
                    assert_eq!(c1.union(&o2).unwrap(), full);
                    assert!(c1.intersection(&o2).unwrap().is_empty());
                    assert_eq!(c2, o1.complement());
                    assert!(o1.is_subset(&c1));
                }
            }
        }
    }

    #[test]
    fn interval_classification() {
        assert!(set(7, &[3, 4, 5]).is_interval());
        assert!(!set(5, &[1, 3]).is_interval());
        assert!(!ColorSet::empty(5).unwrap().is_interval());
    }

    #[test]
    fn cyclic_classification() {
        assert!(set(5, &[4, 5, 1]).is_cyclic_interval());
        assert!(!set(5, &[1, 3]).is_cyclic_interval());
        for t in 1..=10 {
            assert!(ColorSet::full(t).unwrap().is_cyclic_interval());
        }
    }

    // Definitional search used only as a test oracle: does some
    // (i1, i2, j) witness produce exactly this set?
    pub(crate) fn is_cyclic_by_definition(s: &ColorSet) -> bool {
        if s.is_empty() {
            return false;
        }
        let t = s.t();
        for i1 in 1..=t {
            for i2 in 1..=t {
                if intcyc_closed_1(i1, i2, t).unwrap() == *s
                    || intcyc_closed_2(i1, i2, t).unwrap() == *s
                {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn cyclic_closed_form_matches_definition_small() {
        for t in 1..=8u32 {
            for bits in 0..(1u64 << t) {
                let s = ColorSet { t, bits };
                assert_eq!(
                    s.is_cyclic_interval(),
                    is_cyclic_by_definition(&s),
                    "t={} bits={:b}",
                    t,
                    bits
                );
            }
        }
    }

    #[test]
    fn every_interval_is_cyclic() {
        for t in 1..=9u32 {
            for bits in 0..(1u64 << t) {
                let s = ColorSet { t, bits };
                if s.is_interval() {
                    assert!(s.is_cyclic_interval());
                }
            }
        }
    }

    #[test]
    fn chained_union_cases() {
        let u = chained_union(&[set(4, &[1, 2]), set(4, &[2, 3])], 4).unwrap();
        assert_eq!(u, set(4, &[1, 2, 3]));
        let u = chained_union(&[set(4, &[4, 1]), set(4, &[1, 2])], 4).unwrap();
        assert_eq!(u, set(4, &[4, 1, 2]));
        assert!(u.is_cyclic_interval());
        assert_eq!(
            chained_union(&[set(4, &[1, 2]), set(4, &[3, 4])], 4),
            Err(AlgebraError::ChainBroken(0, 1))
        );
        assert!(matches!(
            chained_union(&[set(5, &[1, 3])], 5),
            Err(AlgebraError::ChainMemberNotCyclic(0))
        ));
        assert_eq!(chained_union(&[], 4), Err(AlgebraError::EmptyChain));
    }
}
