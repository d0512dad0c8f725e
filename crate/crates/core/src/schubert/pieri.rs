//! Pieri rules: multiplication by the special classes `σ_a` (horizontal
//! strips) and `σ_{1^b}` (vertical strips).

use alloc::vec::Vec;

use super::{BoxShape, CohomologyClass, Partition};

/// All `μ ⊇ λ` inside `shape` such that `μ/λ` is a horizontal strip of
/// size `a` (no two added cells in one column).
pub fn horizontal_strips(lambda: &Partition, a: u32, shape: BoxShape) -> Vec<Partition> {
    fn go(
        i: usize,
        rows: usize,
        lambda: &Partition,
        cap: u32,
        left: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let base = lambda.part(i);
        // interlacing: λ_i <= μ_i <= λ_{i-1}
        let hi = cap.min(base + left);
        for mu in base..=hi {
            cur.push(mu);
            go(i + 1, rows, lambda, base, left - (mu - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lambda.fits(shape) {
        let rows = shape.rows as usize;
        go(0, rows, lambda, shape.cols, a, &mut Vec::with_capacity(rows), &mut out);
    }
    out
}

/// All `μ ⊇ λ` inside `shape` such that `μ/λ` is a vertical strip of size
/// `b` (no two added cells in one row).
pub fn vertical_strips(lambda: &Partition, b: u32, shape: BoxShape) -> Vec<Partition> {
    fn go(
        i: usize,
        rows: usize,
        lambda: &Partition,
        cols: u32,
        left: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("checked order"));
            }
            return;
        }
        if left as usize > rows - i {
            return;
        }
        let base = lambda.part(i);
        for add in 0..=1u32.min(left) {
            let mu = base + add;
            if mu > cols || (i > 0 && mu > cur[i - 1]) {
                continue;
            }
            cur.push(mu);
            go(i + 1, rows, lambda, cols, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lambda.fits(shape) {
        let rows = shape.rows as usize;
        go(0, rows, lambda, shape.cols, b, &mut Vec::with_capacity(rows), &mut out);
    }
    out
}

/// `c · σ_a`.
pub fn pieri_row(c: &CohomologyClass, a: u32) -> CohomologyClass {
    let shape = c.shape();
    let mut out = CohomologyClass::zero(shape);
    if a > shape.cols {
        return out;
    }
    for (lambda, k) in c.terms() {
        for mu in horizontal_strips(lambda, a, shape) {
            out.add_term(mu, k.clone());
        }
    }
    out
}

/// `c · σ_{1^b}`.
pub fn pieri_col(c: &CohomologyClass, b: u32) -> CohomologyClass {
    let shape = c.shape();
    let mut out = CohomologyClass::zero(shape);
    if b > shape.rows {
        return out;
    }
    for (lambda, k) in c.terms() {
        for mu in vertical_strips(lambda, b, shape) {
            out.add_term(mu, k.clone());
        }
    }
    out
}

/// `c · σ_1^n` by repeated Pieri.
pub fn times_sigma1_pow(c: &CohomologyClass, n: u32) -> CohomologyClass {
    (0..n).fold(c.clone(), |acc, _| pieri_row(&acc, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use num_bigint::BigInt;

    fn shape(rows: u32, cols: u32) -> BoxShape {
        BoxShape::new(rows, cols).unwrap()
    }

    fn s(b: BoxShape, parts: &[u32]) -> CohomologyClass {
        CohomologyClass::schubert(b, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn row_examples() {
        let b22 = shape(2, 2);
        let sq = pieri_row(&s(b22, &[1]), 1);
        assert_eq!(format!("{sq}"), "s[2] + s[1,1]");
        let b21 = shape(2, 1);
        assert_eq!(pieri_row(&s(b21, &[1]), 1), s(b21, &[1, 1]));
        assert_eq!(pieri_row(&s(b22, &[2, 1]), 1), s(b22, &[2, 2]));
        assert!(pieri_row(&s(b22, &[]), 3).is_zero());
    }

    #[test]
    fn col_examples() {
        let b22 = shape(2, 2);
        assert_eq!(pieri_col(&CohomologyClass::one(b22), 2), s(b22, &[1, 1]));
        assert_eq!(pieri_col(&s(b22, &[1]), 1), pieri_row(&s(b22, &[1]), 1));
        assert_eq!(pieri_col(&s(b22, &[1, 1]), 2), s(b22, &[2, 2]));
        assert!(pieri_col(&s(b22, &[]), 3).is_zero());
    }

    #[test]
    fn strips_of_size_zero_are_identity() {
        let b = shape(3, 3);
        let lam = Partition::new([2u32, 1]).unwrap();
        assert_eq!(horizontal_strips(&lam, 0, b), alloc::vec![lam.clone()]);
        assert_eq!(vertical_strips(&lam, 0, b), alloc::vec![lam]);
    }

    #[test]
    fn lines_meeting_four_lines() {
        let b22 = shape(2, 2);
        let c = times_sigma1_pow(&CohomologyClass::one(b22), 4);
        assert_eq!(c.integrate(), BigInt::from(2));
    }
}
