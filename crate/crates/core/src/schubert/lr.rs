//! Littlewood–Richardson products.
//!
//! `c^ν_{λμ}` counts semistandard fillings of the skew shape `ν/λ` with
//! content `μ` whose reverse reading word (rows top to bottom, each row
//! right to left) is a lattice word. The search below builds `ν` one row at
//! a time, so out-of-box shapes are never generated.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{BoxShape, CohomologyClass, Partition};
use crate::error::Error;

/// Data fixed while filling one row.
struct RowCtx<'a> {
    t: usize,
    max_value: usize,
    start: u32,
    room: u32,
    above_start: u32,
    above: &'a [u32],
    /// Content used by the rows above this one.
    prior: &'a [u32],
}

struct Search<'a> {
    lambda: &'a Partition,
    content: Vec<u32>,
    rows: usize,
    cols: u32,
    out: BTreeMap<Partition, u64>,
}

impl Search<'_> {
    /// Fill row `t`. `above` holds the values written in row `t-1`, which
    /// starts at column `above_start`; `above_end` is `ν_{t-1}`.
    fn row(&mut self, t: usize, above_start: u32, above: &[u32], above_end: u32, used: &mut Vec<u32>, nu: &mut Vec<u32>) {
        if t == self.rows {
            if used == &self.content {
                let shape = Partition::new(nu.clone()).expect("rows are nonincreasing");
                *self.out.entry(shape).or_insert(0) += 1;
            }
            return;
        }
        // Content still to place must fit in the remaining rows.
        let remaining: u32 = self.content.iter().zip(used.iter()).map(|(c, u)| c - u).sum();
        let free: u32 = (t..self.rows).map(|i| above_end.min(self.cols) - self.lambda.part(i).min(above_end)).sum();
        if remaining > free {
            return;
        }
        let start = self.lambda.part(t);
        if start > above_end {
            return;
        }
        let room = above_end.min(self.cols) - start;
        let max_value = (t + 1).min(self.content.len());
        let mut cells = Vec::with_capacity(room as usize);
        let prior = used.clone();
        let ctx = RowCtx { t, max_value, start, room, above_start, above, prior: &prior };
        self.values(&ctx, 1, used, &mut cells, nu);
    }

    /// Choose how many copies of value `v` go next in row `t`.
    fn values(&mut self, ctx: &RowCtx<'_>, v: usize, used: &mut Vec<u32>, cells: &mut Vec<u32>, nu: &mut Vec<u32>) {
        let RowCtx { t, max_value, start, room, above_start, above, prior } = *ctx;
        if v > max_value {
            let end = start + cells.len() as u32;
            nu.push(end);
            let row_cells = cells.clone();
            self.row(t + 1, start, &row_cells, end, used, nu);
            nu.pop();
            return;
        }
        let i = v - 1;
        let mut limit = (self.content[i] - used[i]).min(room - cells.len() as u32);
        if i > 0 {
            // Reading right to left, every v in this row precedes the v-1's.
            limit = limit.min(prior[i - 1].saturating_sub(used[i]));
        }
        let base_len = cells.len();
        let mut placed = 0;
        loop {
            self.values(ctx, v + 1, used, cells, nu);
            if placed == limit {
                break;
            }
            // Column strictness against the cell directly above.
            let x = start + cells.len() as u32;
            if x >= above_start {
                let idx = (x - above_start) as usize;
                match above.get(idx) {
                    Some(&a) if a as usize >= v => break,
                    _ => {}
                }
            }
            cells.push(v as u32);
            used[i] += 1;
            placed += 1;
        }
        cells.truncate(base_len);
        used[i] -= placed;
    }
}

/// Littlewood–Richardson coefficients `c^ν_{λμ}` for all `ν` in `shape`.
pub fn lr_coefficients(lambda: &Partition, mu: &Partition, shape: BoxShape) -> BTreeMap<Partition, u64> {
    if !lambda.fits(shape) || !mu.fits(shape) || lambda.size() + mu.size() > shape.dimension() {
        return BTreeMap::new();
    }
    let mut search = Search {
        lambda,
        content: mu.parts().to_vec(),
        rows: shape.rows as usize,
        cols: shape.cols,
        out: BTreeMap::new(),
    };
    let mut used = vec![0; mu.len()];
    search.row(0, 0, &[], shape.cols, &mut used, &mut Vec::new());
    search.out
}

/// Bilinear product of two classes in the same box.
pub fn lr_multiply(c1: &CohomologyClass, c2: &CohomologyClass) -> Result<CohomologyClass, Error> {
    c1.same_box(c2)?;
    let shape = c1.shape();
    let mut out = CohomologyClass::zero(shape);
    for (lambda, a) in c1.terms() {
        for (mu, b) in c2.terms() {
            let ab: BigInt = a * b;
            for (nu, c) in lr_coefficients(lambda, mu, shape) {
                out.add_term(nu, &ab * BigInt::from(c));
            }
        }
    }
    Ok(out)
}

/// `σ_λ · σ_μ` as a class.
pub fn schubert_product(lambda: &Partition, mu: &Partition, shape: BoxShape) -> Result<CohomologyClass, Error> {
    let a = CohomologyClass::schubert(shape, lambda.clone())?;
    let b = CohomologyClass::schubert(shape, mu.clone())?;
    lr_multiply(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::pieri::{pieri_col, pieri_row};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute force: every filling of ν/λ with values 1..ℓ(μ), checked
    /// against all tableau and lattice conditions directly.
    fn brute_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if !nu.contains(lambda) || nu.size() != lambda.size() + mu.size() {
            return 0;
        }
        let cells: Vec<(usize, u32)> = (0..nu.len())
            .flat_map(|i| (lambda.part(i)..nu.part(i)).map(move |j| (i, j)))
            .collect();
        let k = mu.len() as u32;
        if k == 0 {
            return u64::from(cells.is_empty());
        }
        let mut count = 0;
        let total = (k as u64).pow(cells.len() as u32);
        for code in 0..total {
            let mut c = code;
            let vals: Vec<u32> = cells
                .iter()
                .map(|_| {
                    let v = (c % k as u64) as u32 + 1;
                    c /= k as u64;
                    v
                })
                .collect();
            let at = |i: usize, j: u32| cells.iter().position(|&x| x == (i, j)).map(|q| vals[q]);
            let ok_rows = cells.iter().enumerate().all(|(q, &(i, j))| match at(i, j + 1) {
                Some(w) => vals[q] <= w,
                None => true,
            });
            let ok_cols = cells.iter().enumerate().all(|(q, &(i, j))| match at(i + 1, j) {
                Some(w) => vals[q] < w,
                None => true,
            });
            let mut content = vec![0u32; k as usize];
            let mut lattice = true;
            for i in 0..nu.len() {
                for j in (lambda.part(i)..nu.part(i)).rev() {
                    let v = at(i, j).unwrap() as usize;
                    content[v - 1] += 1;
                    if v > 1 && content[v - 1] > content[v - 2] {
                        lattice = false;
                    }
                }
            }
            if ok_rows && ok_cols && lattice && content == mu.parts() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn classic_coefficient_two() {
        let shape = BoxShape::new(3, 3).unwrap();
        let prod = schubert_product(&p(&[2, 1]), &p(&[2, 1]), shape).unwrap();
        assert_eq!(prod.coefficient(&p(&[3, 2, 1])), BigInt::from(2));
        assert_eq!(brute_lr(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn matches_brute_force_in_3x3() {
        let shape = BoxShape::new(3, 3).unwrap();
        let all: Vec<Partition> = (0..=4).flat_map(|k| shape.partitions_of(k)).collect();
        for lam in &all {
            for mu in &all {
                let fast = lr_coefficients(lam, mu, shape);
                for nu in shape.partitions_of(lam.size() + mu.size()) {
                    let expect = brute_lr(lam, mu, &nu);
                    assert_eq!(fast.get(&nu).copied().unwrap_or(0), expect, "{lam} * {mu} -> {nu}");
                }
            }
        }
    }

    #[test]
    fn unit_and_pieri_cases() {
        let shape = BoxShape::new(2, 2).unwrap();
        let x = CohomologyClass::schubert(shape, p(&[2, 1])).unwrap();
        let one = CohomologyClass::one(shape);
        assert_eq!(lr_multiply(&x, &one).unwrap(), x);
        assert_eq!(lr_multiply(&one, &x).unwrap(), x);
        let s1 = CohomologyClass::special_row(shape, 1);
        assert_eq!(lr_multiply(&x, &s1).unwrap(), pieri_row(&x, 1));
        let s11 = CohomologyClass::special_column(shape, 2);
        let y = CohomologyClass::schubert(shape, p(&[1, 1])).unwrap();
        assert_eq!(lr_multiply(&y, &s11).unwrap(), pieri_col(&y, 2));
    }

    #[test]
    fn mismatched_boxes() {
        let a = CohomologyClass::one(BoxShape::new(2, 2).unwrap());
        let b = CohomologyClass::one(BoxShape::new(2, 3).unwrap());
        assert!(matches!(lr_multiply(&a, &b), Err(Error::BoxMismatch { .. })));
    }
}
