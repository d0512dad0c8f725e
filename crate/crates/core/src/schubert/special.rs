//! The two families of classes every count here is built from: powers of
//! `σ_{1^r}` and the "total sum" `Σ_{α_0+…+α_r = T} Π σ_{α_i}`.

use super::pieri::{horizontal_strips, pieri_col};
use super::{BoxShape, CohomologyClass};

/// `σ_{1^r}^g` in a box with `r + 1` rows; the coefficient of `σ_λ` is
/// `β_λ`, the number of ways to grow `λ` by `g` vertical `r`-strips.
pub fn sigma1r_power_table(g: u32, shape: BoxShape) -> CohomologyClass {
    let r = shape.rows.saturating_sub(1);
    (0..g).fold(CohomologyClass::one(shape), |acc, _| pieri_col(&acc, r))
}

/// `Σ Π_{i=0}^{rows-1} σ_{α_i}` over ordered compositions of `total` into
/// `rows` nonnegative parts. Negative totals give zero; a zero total gives
/// the unit.
pub fn special_sum(total: i64, shape: BoxShape) -> CohomologyClass {
    if total < 0 || total > i64::from(shape.dimension()) {
        return CohomologyClass::zero(shape);
    }
    let total = total as u32;
    // Each round multiplies by Σ_a σ_a, keeping only what can still reach
    // the target degree.
    let mut acc = CohomologyClass::one(shape);
    for round in 0..shape.rows {
        let last = round + 1 == shape.rows;
        let mut next = CohomologyClass::zero(shape);
        for (p, k) in acc.terms() {
            let room = total - p.size();
            let lo = if last { room } else { 0 };
            for a in lo..=room.min(shape.cols) {
                for mu in horizontal_strips(p, a, shape) {
                    next.add_term(mu, k.clone());
                }
            }
        }
        acc = next;
    }
    acc.graded_piece(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::Partition;
    use alloc::format;
    use num_bigint::BigInt;

    fn shape(rows: u32, cols: u32) -> BoxShape {
        BoxShape::new(rows, cols).unwrap()
    }

    /// Number of semistandard tableaux of shape ν with entries in a
    /// `k`-letter alphabet: `Π_{i<j} (ν_i - ν_j + j - i) / (j - i)`.
    fn weyl_dimension(nu: &Partition, k: usize) -> BigInt {
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for i in 0..k {
            for j in i + 1..k {
                num *= i64::from(nu.part(i)) - i64::from(nu.part(j)) + (j - i) as i64;
                den *= (j - i) as i64;
            }
        }
        num / den
    }

    #[test]
    fn power_examples() {
        let c = sigma1r_power_table(2, shape(2, 3));
        assert_eq!(format!("{c}"), "s[2] + s[1,1]");
        let c = sigma1r_power_table(3, shape(2, 2));
        assert_eq!(format!("{c}"), "2*s[2,1]");
        assert_eq!(sigma1r_power_table(0, shape(3, 4)), CohomologyClass::one(shape(3, 4)));
    }

    #[test]
    fn special_sum_examples() {
        let b = shape(2, 3);
        assert_eq!(special_sum(0, b), CohomologyClass::one(b));
        assert!(special_sum(-3, b).is_zero());
        assert_eq!(format!("{}", special_sum(1, b)), "2*s[1]");
    }

    #[test]
    fn special_sum_counts_semistandard_tableaux() {
        // The coefficient of σ_ν is the number of fillings of ν by
        // horizontal strips labelled 0..r, i.e. a Weyl dimension.
        for (rows, cols) in [(1, 4), (2, 3), (3, 3), (4, 2)] {
            let b = shape(rows, cols);
            for total in 0..=b.dimension() {
                let c = special_sum(i64::from(total), b);
                for nu in b.partitions_of(total) {
                    assert_eq!(c.coefficient(&nu), weyl_dimension(&nu, rows as usize), "{b} {nu}");
                }
            }
        }
    }
}
