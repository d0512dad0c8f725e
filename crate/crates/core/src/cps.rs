//! Counts `L'_{g,d,k}` of degree-`d` pencils on a general `n`-pointed
//! genus-`g` curve sending the marked points to fixed general points of
//! `P^1`, where the first `k` targets coincide.
//!
//! The count is a difference of two integrals: the naive one on
//! `Gr(2, d+1)` minus the contribution of series with a base point at the
//! collision, which lives on `Gr(2, d)`.

use alloc::format;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::schubert::{pieri_row, special_sum, times_sigma1_pow, BoxShape, CohomologyClass};

/// A validated `(g, d, k)` with `n = 2d + 1 - g` and `1 <= k <= min(d, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CpsProblem {
    pub g: u32,
    pub d: u32,
    pub k: u32,
    pub n: i64,
}

impl CpsProblem {
    pub fn new(g: u32, d: u32, k: u32) -> Result<Self, Error> {
        let n = 2 * i64::from(d) + 1 - i64::from(g);
        if k == 0 || k > d || i64::from(k) > n {
            return Err(Error::InvalidK { k, d, n });
        }
        Ok(CpsProblem { g, d, k, n })
    }
}

/// `∫_{Gr(2,e+1)} σ_1^g σ_c · Σ_{i+j=2(e-1)-g-c} σ_i σ_j`; zero when
/// `e = 0` (there is no `Gr(2, 1)`).
fn pencil_integral(g: u32, e: u32, c: u32) -> BigInt {
    if e == 0 {
        return BigInt::zero();
    }
    let shape = BoxShape::new(2, e - 1).expect("two rows");
    let total = 2 * (i64::from(e) - 1) - i64::from(g) - i64::from(c);
    let sum = special_sum(total, shape);
    if sum.is_zero() {
        return BigInt::zero();
    }
    let class = times_sigma1_pow(&pieri_row(&CohomologyClass::one(shape), c), g);
    class.pairing(&sum).expect("same box")
}

/// The two-integral expression for any `k >= 1`, `d >= 0`, without range
/// checks. Outside `1 <= k <= min(d, n)` it vanishes identically.
pub fn cps_formula(g: u32, d: u32, k: u32) -> BigInt {
    assert!(k >= 1, "k starts at 1");
    let first = pencil_integral(g, d, k - 1);
    if k == 1 || d < 2 {
        // k = 1 has no excess term; for d < 2 the second Grassmannian
        // Gr(2, d) is empty.
        return first;
    }
    first - pencil_integral(g, d - 1, k - 2)
}

/// `L'_{g,d,k}`.
///
/// Panics if the difference comes out negative, which would mean the
/// Schubert computation is wrong.
pub fn cps_degree(p: &CpsProblem) -> BigInt {
    let v = cps_formula(p.g, p.d, p.k);
    assert!(!v.is_negative(), "negative L' at g={} d={} k={}: {v}", p.g, p.d, p.k);
    v
}

/// Both sides of the genus recursion
/// `L'_{g,d,1} = L'_{g-1,d-1,1} + L'_{g-1,d,2}` and
/// `L'_{g,d,k} = L'_{g-1,d-1,k-1} + L'_{g-1,d,k+1}` for `k > 1`.
///
/// The left side must be a valid problem with `g >= 1`. Right-hand terms
/// that fall outside the valid range are evaluated through
/// [`cps_formula`], which is zero there.
pub fn recursion_check(g: u32, d: u32, k: u32) -> Result<(BigInt, BigInt), Error> {
    let p = CpsProblem::new(g, d, k)?;
    if g == 0 {
        return Err(Error::InvalidParameter(format!("recursion needs g >= 1, got g = {g}")));
    }
    let lhs = cps_degree(&p);
    let first = if k == 1 {
        cps_formula(g - 1, d - 1, 1)
    } else {
        cps_formula(g - 1, d - 1, k - 1)
    };
    let rhs = first + cps_formula(g - 1, d, k + 1);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::pow;
    use crate::tevelev::tevelev_integral_for;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn examples() {
        assert_eq!(cps_degree(&CpsProblem::new(3, 4, 1).unwrap()), big(8));
        assert_eq!(cps_degree(&CpsProblem::new(2, 3, 2).unwrap()), big(3));
        for g in 0..8u32 {
            for k in 1..4u32 {
                let d = g + k;
                if let Ok(p) = CpsProblem::new(g, d, k) {
                    assert_eq!(cps_degree(&p), pow(2, g), "g={g} d={d} k={k}");
                }
            }
        }
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(recursion_check(3, 3, 1).unwrap(), (big(4), big(4)));
        for g in 1..8u32 {
            let (lhs, rhs) = recursion_check(g, g + 1, 1).unwrap();
            assert_eq!(lhs, pow(2, g));
            assert_eq!(rhs, lhs);
            assert_eq!(cps_formula(g - 1, g, 1), pow(2, g - 1));
            assert_eq!(cps_formula(g - 1, g + 1, 2), pow(2, g - 1));
        }
        let (lhs, rhs) = recursion_check(1, 1, 1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn invalid_k() {
        assert!(matches!(CpsProblem::new(2, 3, 0), Err(Error::InvalidK { .. })));
        assert!(matches!(CpsProblem::new(2, 3, 4), Err(Error::InvalidK { .. })));
        // n = 2*2 + 1 - 4 = 1
        assert!(matches!(CpsProblem::new(4, 2, 2), Err(Error::InvalidK { .. })));
        assert!(recursion_check(0, 2, 1).is_err());
    }

    #[test]
    fn formula_vanishes_outside_range() {
        for g in 0..8u32 {
            for d in 0..10u32 {
                for k in 1..12u32 {
                    if CpsProblem::new(g, d, k).is_err() {
                        assert!(cps_formula(g, d, k).is_zero(), "g={g} d={d} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn k_one_is_tevelev() {
        for g in 0..8u32 {
            for d in 1..g + 4 {
                let Ok(p) = CpsProblem::new(g, d, 1) else { continue };
                assert_eq!(cps_degree(&p), tevelev_integral_for(g, 1, d).unwrap().value);
            }
        }
    }
}
