//! Partitions, half-integers, skew shapes, and the staircase families.
//!
//! All values are immutable after construction. Half-integers are stored as
//! twice their value, so every computation in the crate stays in exact
//! integer arithmetic.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A partition: weakly decreasing sequence of positive integers.
/// Trailing zeros are stripped on construction; the empty partition is legal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    /// Zeros are accepted and stripped.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::NotWeaklyDecreasing(w[1]));
            }
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part at `i`, padding with zeros past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells in the Young diagram.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part-wise containment, padding the shorter partition with zeros.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Multiplies every part by `factor`. A non-integer factor requires
    /// every part to be even.
    pub fn stretch(&self, factor: HalfInt) -> Result<Partition, Error> {
        let mut parts = Vec::with_capacity(self.len());
        for &p in &self.parts {
            let doubled = p * factor.twice() as usize;
            if !doubled.is_multiple_of(2) {
                return Err(Error::HalfIntStretchOddPart(p));
            }
            parts.push(doubled / 2);
        }
        Ok(Partition { parts })
    }

    /// Integer-factor stretch; total and never fails.
    pub fn stretch_int(&self, factor: usize) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| p * factor).collect(),
        }
    }
}

/// The staircase λ_n = (n, n-1, ..., 1); λ_0 is the empty partition.
pub fn staircase(n: usize) -> Partition {
    Partition {
        parts: (1..=n).rev().collect(),
    }
}

/// The double staircase α_n = (2n, 2n-2, ..., 2) = 2·λ_n.
pub fn double_staircase(n: usize) -> Partition {
    staircase(n).stretch_int(2)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses "(9,6,3)"; the empty partition is "()".
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("partition must be parenthesized: {s:?}")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part: {p:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// A positive half-integer, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfInt {
    twice: u64,
}

impl HalfInt {
    pub fn from_twice(twice: u64) -> Result<Self, Error> {
        if twice == 0 {
            return Err(Error::HalfIntZero);
        }
        Ok(HalfInt { twice })
    }

    pub fn from_int(v: u64) -> Self {
        HalfInt { twice: 2 * v }
    }

    pub fn twice(self) -> u64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    /// Integer value; panics if not an integer.
    pub fn as_integer(self) -> u64 {
        assert!(self.is_integer(), "half-odd value {self}");
        self.twice / 2
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Parses "2", "3/2", or "6/2".
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let twice = if let Some((num, den)) = s.split_once('/') {
            let num: u64 = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad half-integer: {s:?}")))?;
            match den.trim() {
                "2" => num,
                "1" => 2 * num,
                _ => return Err(Error::Parse(format!("denominator must be 1 or 2: {s:?}"))),
            }
        } else {
            2 * s
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad half-integer: {s:?}")))?
        };
        HalfInt::from_twice(twice)
    }
}

/// The skew shape outer/inner, with inner contained in outer.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Builds the skew shape outer/inner, failing with the first offending row
/// when containment does not hold.
pub fn skew(outer: Partition, inner: Partition) -> Result<SkewShape, Error> {
    for i in 0..inner.len() {
        if inner.part(i) > outer.part(i) {
            return Err(Error::NotContained {
                row: i + 1,
                inner: inner.part(i),
                outer: outer.part(i),
            });
        }
    }
    Ok(SkewShape { outer, inner })
}

impl SkewShape {
    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows, counting rows fully occupied by the inner shape.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// First column of row `i` (absolute, 0-based).
    pub fn row_start(&self, i: usize) -> usize {
        self.inner.part(i)
    }

    /// One past the last column of row `i`.
    pub fn row_end(&self, i: usize) -> usize {
        self.outer.part(i)
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.row_end(i) - self.row_start(i)
    }

    pub fn cell_count(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// True when no two cells of the shape share a column. Adjacent-row
    /// checks suffice because row intervals move weakly left going down.
    pub fn is_column_disjoint(&self) -> bool {
        (1..self.rows()).all(|i| self.row_end(i) <= self.row_start(i - 1))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(1), p(&[1]));
        assert_eq!(staircase(3), p(&[3, 2, 1]));
        assert_eq!(staircase(4), p(&[4, 3, 2, 1]));
        assert_eq!(staircase(0), Partition::empty());
        assert_eq!(double_staircase(1), p(&[2]));
        assert_eq!(double_staircase(2), p(&[4, 2]));
        assert_eq!(double_staircase(3), p(&[6, 4, 2]));
    }

    #[test]
    fn double_staircase_is_stretched_staircase() {
        for n in 0..=20 {
            assert_eq!(double_staircase(n), staircase(n).stretch_int(2));
        }
    }

    #[test]
    fn stretch_examples() {
        let three = HalfInt::from_int(3);
        assert_eq!(p(&[3, 2, 1]).stretch(three).unwrap(), p(&[9, 6, 3]));
        let three_halves = HalfInt::from_twice(3).unwrap();
        assert_eq!(p(&[4, 2]).stretch(three_halves).unwrap(), p(&[6, 3]));
        assert_eq!(p(&[2, 1]).stretch(HalfInt::from_int(1)).unwrap(), p(&[2, 1]));
        assert!(matches!(
            p(&[3, 2]).stretch(three_halves),
            Err(Error::HalfIntStretchOddPart(3))
        ));
    }

    #[test]
    fn stretch_composes() {
        let q = p(&[6, 4, 2]);
        let a = HalfInt::from_twice(3).unwrap(); // 3/2
        let b = HalfInt::from_int(2);
        let both = q.stretch(a).unwrap().stretch(b).unwrap();
        assert_eq!(both, q.stretch(HalfInt::from_int(3)).unwrap());
    }

    #[test]
    fn skew_examples() {
        let sh = skew(p(&[3, 2, 1]), p(&[1])).unwrap();
        assert_eq!(
            (0..3).map(|i| sh.row_len(i)).collect::<Vec<_>>(),
            vec![2, 2, 1]
        );
        assert_eq!(
            (0..3).map(|i| sh.row_start(i)).collect::<Vec<_>>(),
            vec![1, 0, 0]
        );
        assert_eq!(sh.cell_count(), 5);

        let empty = skew(p(&[2, 1]), p(&[2, 1])).unwrap();
        assert_eq!(empty.cell_count(), 0);

        assert!(matches!(
            skew(p(&[1]), p(&[2])),
            Err(Error::NotContained { row: 1, .. })
        ));
    }

    #[test]
    fn skew_cell_count_is_size_difference() {
        for n in 0..6 {
            let outer = staircase(n + 1);
            let inner = staircase(n);
            let sh = skew(outer.clone(), inner.clone()).unwrap();
            assert_eq!(sh.cell_count(), outer.size() - inner.size());
        }
    }

    #[test]
    fn theorem_family_shape_is_column_disjoint_rows_of_s() {
        for n in 1..=3usize {
            for s in 1..=4usize {
                let sh = skew(
                    staircase(2 * n).stretch_int(s),
                    staircase(2 * n - 1).stretch_int(s),
                )
                .unwrap();
                assert!(sh.is_column_disjoint());
                assert_eq!(sh.rows(), 2 * n);
                assert!((0..sh.rows()).all(|i| sh.row_len(i) == s));
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("(9,6,3)".parse::<Partition>().unwrap(), p(&[9, 6, 3]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[9, 6, 3]).to_string(), "(9,6,3)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());

        assert_eq!("3/2".parse::<HalfInt>().unwrap().twice(), 3);
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert_eq!("3/2".parse::<HalfInt>().unwrap().to_string(), "3/2");
        assert_eq!("4/2".parse::<HalfInt>().unwrap().to_string(), "2");
        assert!("0".parse::<HalfInt>().is_err());
    }

    #[test]
    fn trailing_zeros_stripped() {
        assert_eq!(Partition::new(vec![2, 0]).unwrap(), p(&[2]));
        assert_eq!(Partition::new(vec![0, 0]).unwrap(), Partition::empty());
    }
}
