use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BoxShape, Partition};
use crate::error::Error;

/// An element of the integral cohomology ring of `Gr(rows, rows + cols)`,
/// written in the Schubert basis.
///
/// Terms are kept sparse: every key fits in the box and no coefficient is
/// zero. Iteration follows the partition order, so every derived quantity
/// is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    shape: BoxShape,
    terms: BTreeMap<Partition, BigInt>,
}

impl CohomologyClass {
    pub fn zero(shape: BoxShape) -> Self {
        CohomologyClass { shape, terms: BTreeMap::new() }
    }

    /// The unit `σ_0`.
    pub fn one(shape: BoxShape) -> Self {
        let mut c = Self::zero(shape);
        c.terms.insert(Partition::empty(), BigInt::one());
        c
    }

    /// The Schubert class `σ_λ`.
    pub fn schubert(shape: BoxShape, lambda: Partition) -> Result<Self, Error> {
        if !lambda.fits(shape) {
            return Err(Error::PartitionOutsideBox { partition: lambda, shape });
        }
        let mut c = Self::zero(shape);
        c.terms.insert(lambda, BigInt::one());
        Ok(c)
    }

    /// `σ_a`, zero when `a` exceeds the number of columns.
    pub fn special_row(shape: BoxShape, a: u32) -> Self {
        Self::schubert(shape, Partition::row(a)).unwrap_or_else(|_| Self::zero(shape))
    }

    /// `σ_{1^b}`, zero when `b` exceeds the number of rows.
    pub fn special_column(shape: BoxShape, b: u32) -> Self {
        Self::schubert(shape, Partition::column(b)).unwrap_or_else(|_| Self::zero(shape))
    }

    /// Builds a class from `(partition, coefficient)` pairs, summing repeats.
    /// Partitions outside the box are dropped.
    pub fn from_terms<I>(shape: BoxShape, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut c = Self::zero(shape);
        for (p, k) in terms {
            c.add_term(p, k);
        }
        c
    }

    pub fn shape(&self) -> BoxShape {
        self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Partition, BigInt> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Adds `k · σ_λ` in place, silently truncating out-of-box terms.
    pub fn add_term(&mut self, lambda: Partition, k: BigInt) {
        if k.is_zero() || !lambda.fits(self.shape) {
            return;
        }
        match self.terms.entry(lambda) {
            btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.shape);
        }
        CohomologyClass {
            shape: self.shape,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }

    /// Keeps only the terms of codimension `degree`.
    pub fn graded_piece(&self, degree: u32) -> Self {
        CohomologyClass {
            shape: self.shape,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether every term has codimension `degree`.
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|p| p.size() == degree)
    }

    /// Degree of the top-dimensional part: the coefficient of the full box.
    pub fn integrate(&self) -> BigInt {
        self.coefficient(&self.shape.full())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.same_box(other)?;
        let mut out = self.clone();
        for (p, k) in other.terms() {
            out.add_term(p.clone(), k.clone());
        }
        Ok(out)
    }

    /// `∫ self · other`, computed through the Poincaré pairing
    /// `∫ σ_λ σ_μ = δ(μ, complement of λ)`.
    pub fn pairing(&self, other: &Self) -> Result<BigInt, Error> {
        self.same_box(other)?;
        let top = self.shape.dimension();
        let mut total = BigInt::zero();
        for (lambda, a) in self.terms() {
            if lambda.size() > top {
                continue;
            }
            let dual = lambda
                .complement_in(self.shape)
                .expect("canonical terms fit in the box");
            if let Some(b) = other.terms.get(&dual) {
                total += a * b;
            }
        }
        Ok(total)
    }

    pub(crate) fn same_box(&self, other: &Self) -> Result<(), Error> {
        if self.shape != other.shape {
            return Err(Error::BoxMismatch { left: self.shape, right: other.shape });
        }
        Ok(())
    }
}

impl Add for &CohomologyClass {
    type Output = CohomologyClass;

    /// Panics on mismatched boxes; use [`CohomologyClass::checked_add`] to
    /// get an error instead.
    fn add(self, rhs: &CohomologyClass) -> CohomologyClass {
        self.checked_add(rhs).expect("box mismatch in addition")
    }
}

impl Neg for &CohomologyClass {
    type Output = CohomologyClass;

    fn neg(self) -> CohomologyClass {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub for &CohomologyClass {
    type Output = CohomologyClass;

    fn sub(self, rhs: &CohomologyClass) -> CohomologyClass {
        self + &(-rhs)
    }
}

/// Renders as `2*s[2,1] + s[3]`; the zero class prints as `0`.
impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, k)) in self.terms.iter().rev().enumerate() {
            let negative = k.sign() == num_bigint::Sign::Minus;
            let mag = if negative { -k } else { k.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "s[{p}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn b(rows: u32, cols: u32) -> BoxShape {
        BoxShape::new(rows, cols).unwrap()
    }

    fn s(shape: BoxShape, parts: &[u32]) -> CohomologyClass {
        CohomologyClass::schubert(shape, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn sparse_canonical_form() {
        let shape = b(2, 2);
        let x = s(shape, &[1]);
        let zero = &x - &x;
        assert!(zero.is_zero());
        let mut c = CohomologyClass::zero(shape);
        c.add_term(Partition::new(vec![3]).unwrap(), BigInt::from(5));
        assert!(c.is_zero(), "out-of-box term must not materialize");
    }

    #[test]
    fn integrate_reads_full_box() {
        let shape = b(2, 2);
        assert_eq!(s(shape, &[2, 2]).integrate(), BigInt::from(1));
        assert_eq!(s(shape, &[2, 1]).integrate(), BigInt::from(0));
        assert_eq!(CohomologyClass::zero(shape).integrate(), BigInt::from(0));
    }

    #[test]
    fn point_grassmannian_has_only_unit() {
        let shape = b(3, 0);
        assert_eq!(CohomologyClass::one(shape).integrate(), BigInt::from(1));
        assert!(CohomologyClass::special_row(shape, 1).is_zero());
    }

    #[test]
    fn box_mismatch() {
        let x = s(b(2, 2), &[1]);
        let y = s(b(2, 3), &[1]);
        assert!(matches!(x.checked_add(&y), Err(Error::BoxMismatch { .. })));
        assert!(matches!(x.pairing(&y), Err(Error::BoxMismatch { .. })));
    }

    #[test]
    fn display() {
        let shape = b(2, 2);
        let c = &(&s(shape, &[2]) + &s(shape, &[1, 1])) + &s(shape, &[2]);
        assert_eq!(format!("{c}"), "2*s[2] + s[1,1]");
        assert_eq!(format!("{}", CohomologyClass::one(shape)), "s[]");
        assert_eq!(format!("{}", -&s(shape, &[1])), "-s[1]");
    }
}
