//! Partitions and the rectangular boxes that bound them.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so two partitions compare
/// equal exactly when their Young diagrams coincide. Partitions index the
/// Schubert basis; ramification sequences (nondecreasing) are their
/// reversals and only appear at I/O boundaries, see [`Partition::reversed`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, rejecting sequences that increase anywhere.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be nonincreasing".into()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// The single-row partition `(a)`.
    pub fn row(a: u32) -> Self {
        if a == 0 {
            Self::empty()
        } else {
            Partition(alloc::vec![a])
        }
    }

    /// The single-column partition `(1^b)`.
    pub fn column(b: u32) -> Self {
        Partition(alloc::vec![1; b as usize])
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Partition(alloc::vec![cols; rows as usize])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Whether the diagram fits inside `shape`.
    pub fn fits(&self, shape: BoxShape) -> bool {
        self.len() <= shape.rows as usize && self.part(0) <= shape.cols
    }

    /// Whether `other`'s diagram is contained in this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Complement inside `shape`: `(cols - p[rows-1], ..., cols - p[0])`.
    pub fn complement_in(&self, shape: BoxShape) -> Result<Partition, Error> {
        if !self.fits(shape) {
            return Err(Error::PartitionOutsideBox {
                partition: self.clone(),
                shape,
            });
        }
        let parts: Vec<u32> = (0..shape.rows as usize)
            .rev()
            .map(|i| shape.cols - self.part(i))
            .collect();
        Partition::new(parts)
    }

    /// The `len`-long nondecreasing tuple obtained by reversing the parts,
    /// padded with leading zeros. This is how ramification sequences are
    /// written.
    pub fn reversed(&self, len: usize) -> Vec<u32> {
        (0..len.max(self.len())).rev().map(|i| self.part(i)).collect()
    }
}

/// Free function form of [`Partition::conjugate`].
pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// Free function form of [`Partition::complement_in`].
pub fn complement_in_box(p: &Partition, shape: BoxShape) -> Result<Partition, Error> {
    p.complement_in(shape)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses the comma-separated form, e.g. `"3,1,1"`. The empty string is the
/// empty partition; zeros are accepted and dropped.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(alloc::format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

/// A `rows x cols` rectangle; the Schubert basis of `Gr(rows, rows + cols)`
/// is indexed by the partitions fitting inside it.
///
/// `cols == 0` is allowed and models `Gr(k, k)`, a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxShape {
    pub rows: u32,
    pub cols: u32,
}

impl BoxShape {
    pub fn new(rows: u32, cols: u32) -> Result<Self, Error> {
        if rows == 0 {
            return Err(Error::InvalidBox { rows, cols });
        }
        Ok(BoxShape { rows, cols })
    }

    /// The box of `Gr(r+1, d+1)`.
    pub fn for_grassmannian(r: u32, d: u32) -> Result<Self, Error> {
        if d < r {
            return Err(Error::InvalidBox { rows: r + 1, cols: 0 });
        }
        BoxShape::new(r + 1, d - r)
    }

    pub fn dimension(&self) -> u32 {
        self.rows * self.cols
    }

    pub fn full(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols)
    }

    /// All partitions of `size` fitting in the box, in increasing order.
    pub fn partitions_of(&self, size: u32) -> Vec<Partition> {
        fn go(rows_left: u32, max: u32, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if rows_left == 0 || max == 0 || remaining > rows_left * max {
                return;
            }
            for p in (1..=max.min(remaining)).rev() {
                cur.push(p);
                go(rows_left - 1, p, remaining - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self.rows, self.cols, size, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for BoxShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn complement_examples() {
        let b23 = BoxShape::new(2, 3).unwrap();
        let b22 = BoxShape::new(2, 2).unwrap();
        assert_eq!(p(&[2, 1]).complement_in(b23).unwrap(), p(&[2, 1]));
        assert_eq!(Partition::empty().complement_in(b22).unwrap(), p(&[2, 2]));
        assert_eq!(p(&[3, 3]).complement_in(b23).unwrap(), Partition::empty());
        assert!(matches!(
            p(&[4]).complement_in(b23),
            Err(Error::PartitionOutsideBox { .. })
        ));
        assert!(p(&[1, 1, 1]).complement_in(b23).is_err());
    }

    #[test]
    fn canonical_form_strips_zeros() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[0]), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" 2, 2 ".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("-1".parse::<Partition>().is_err());
        assert_eq!(alloc::format!("{}", p(&[3, 1, 1])), "3,1,1");
        assert_eq!(alloc::format!("{}", Partition::empty()), "");
    }

    #[test]
    fn reversal_pads() {
        assert_eq!(p(&[3, 1]).reversed(3), vec![0, 1, 3]);
    }

    #[test]
    fn partitions_in_box() {
        let b = BoxShape::new(2, 2).unwrap();
        assert_eq!(b.partitions_of(2), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(b.partitions_of(0), vec![Partition::empty()]);
        assert_eq!(b.partitions_of(5), Vec::<Partition>::new());
        let total: usize = (0..=b.dimension()).map(|k| b.partitions_of(k).len()).sum();
        assert_eq!(total, 6); // C(4,2)
    }
}
