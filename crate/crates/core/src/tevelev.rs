//! Counts `L_{g,r,d}` of degree-`d` maps from a general `n`-pointed genus-`g`
//! curve to `P^r` sending the marked points to fixed general points, and
//! the variants with extra ramification.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, exact_div, factorial, pow};
use crate::error::Error;
use crate::schubert::{lr_multiply, sigma1r_power_table, special_sum, BoxShape, CohomologyClass, Partition};

/// Which closed form, if any, is known to apply to a `(g, r, d)` triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regime {
    /// `d >= rg + r`, equivalently `n >= d + 2`: the count is `(r+1)^g`.
    LargeD,
    /// `n = r + 2`: the smallest `d` with a nonempty answer.
    MinimalN,
    /// Negative Brill–Noether number: no maps at all.
    Empty,
    /// Pencils, where the Schubert integral is known to be enumerative.
    RankOne,
    /// `r > 1` and intermediate `d`; the integral is only a formula value.
    Unproven,
}

impl Regime {
    /// Whether the Schubert integral is a proven count in this regime.
    pub fn is_proven(self) -> bool {
        !matches!(self, Regime::Unproven)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::LargeD => "LargeD",
            Regime::MinimalN => "MinimalN",
            Regime::Empty => "Empty",
            Regime::RankOne => "RankOne",
            Regime::Unproven => "Unproven",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A validated `(g, r, d)` with the derived marked-point count and
/// Brill–Noether number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountProblem {
    pub g: u32,
    pub r: u32,
    pub d: u32,
    /// Number of marked points; `n r = dr + d + r - rg`.
    pub n: i64,
    /// `ρ(g, r, d) = g - (r+1)(g - d + r)`.
    pub rho: i64,
    pub regime: Regime,
}

impl CountProblem {
    /// Every regime tag that applies, highest priority first.
    pub fn tags(&self) -> Vec<Regime> {
        let (g, r, d) = (i64::from(self.g), i64::from(self.r), i64::from(self.d));
        let mut tags = Vec::new();
        if d >= r * g + r {
            tags.push(Regime::LargeD);
        }
        if self.n == r + 2 {
            tags.push(Regime::MinimalN);
        }
        if self.rho < 0 {
            tags.push(Regime::Empty);
        }
        if self.r == 1 {
            tags.push(Regime::RankOne);
        }
        if tags.is_empty() {
            tags.push(Regime::Unproven);
        }
        tags
    }

    /// The box of `Gr(r+1, d+1)`; `None` when `d < r`.
    pub fn shape(&self) -> Option<BoxShape> {
        BoxShape::for_grassmannian(self.r, self.d).ok()
    }

    /// Degree of the special sum in the integral, `(r+1)(d-r) - rg`.
    pub fn special_total(&self) -> i64 {
        self.rho
    }
}

/// Validates `(g, r, d)` and derives `n`, `ρ` and the regime.
pub fn classify(g: u32, r: u32, d: u32) -> Result<CountProblem, Error> {
    if r == 0 || d == 0 {
        return Err(Error::InvalidParameter(format!("need r >= 1 and d >= 1, got r = {r}, d = {d}")));
    }
    let (gi, ri, di) = (i64::from(g), i64::from(r), i64::from(d));
    let numerator = di * ri + di + ri - ri * gi;
    if numerator % ri != 0 {
        return Err(Error::NotBalanced { numerator, r });
    }
    let n = numerator / ri;
    let rho = gi - (ri + 1) * (gi - di + ri);
    let mut p = CountProblem { g, r, d, n, rho, regime: Regime::Unproven };
    p.regime = p.tags()[0];
    Ok(p)
}

/// A Schubert-calculus value together with whether it is known to be a
/// genuine count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaValue {
    pub value: BigInt,
    pub proven: bool,
}

/// `(r+1)^g`, valid once `d >= rg + r`.
pub fn tevelev_large_d(p: &CountProblem) -> Result<BigInt, Error> {
    if p.d < p.r * p.g + p.r {
        return Err(Error::RegimeViolation(format!(
            "d = {} < rg + r = {}",
            p.d,
            p.r * p.g + p.r
        )));
    }
    Ok(pow(u64::from(p.r) + 1, p.g))
}

/// `∫_{Gr(r+1,d+1)} σ_{1^r}^g · Σ_{α_0+…+α_r=(r+1)(d-r)-rg} Π σ_{α_i}`.
pub fn tevelev_integral(p: &CountProblem) -> FormulaValue {
    let proven = p.regime.is_proven();
    if p.rho < 0 {
        return FormulaValue { value: BigInt::zero(), proven };
    }
    let shape = p.shape().expect("rho >= 0 forces d >= r");
    let beta = sigma1r_power_table(p.g, shape);
    let sum = special_sum(p.special_total(), shape);
    let value = beta.pairing(&sum).expect("same box");
    FormulaValue { value, proven }
}

/// [`classify`] followed by [`tevelev_integral`].
pub fn tevelev_integral_for(g: u32, r: u32, d: u32) -> Result<FormulaValue, Error> {
    Ok(tevelev_integral(&classify(g, r, d)?))
}

/// `(r+1)^g - (rg + 1)`: the count just below the large-degree range,
/// at `d = rg`.
pub fn boundary_value(g: u32, r: u32) -> Result<BigInt, Error> {
    if r == 0 || g == 0 {
        return Err(Error::RegimeViolation(format!("d = rg = {} must be positive", r * g)));
    }
    classify(g, r, r * g)?;
    Ok(pow(u64::from(r) + 1, g) - BigInt::from(u64::from(r) * u64::from(g) + 1))
}

/// `∫_{Gr(2,d+1)} σ_{a,b} · σ_1^g` in its two closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gr2Pairing {
    /// `(a - b + 1)/(g + 1) · C(g+1, d-b)`.
    pub ratio_form: BigInt,
    /// `C(g, d-b-1) - C(g, d-b)`.
    pub difference_form: BigInt,
}

/// Both closed forms of `∫ σ_{a,b} σ_1^g` on `Gr(2, d+1)`.
///
/// Panics if the ratio form does not divide exactly.
pub fn gr2_pairing_forms(a: u32, b: u32, g: u32, d: u32) -> Result<Gr2Pairing, Error> {
    if a < b || d == 0 || a > d - 1 {
        return Err(Error::InvalidParameter(format!("need d-1 >= a >= b >= 0, got a = {a}, b = {b}, d = {d}")));
    }
    let actual = i64::from(a) + i64::from(b) + i64::from(g);
    let expected = 2 * (i64::from(d) - 1);
    if actual != expected {
        return Err(Error::DegreeMismatch { actual, expected });
    }
    let (a, b, g, d) = (i64::from(a), i64::from(b), i64::from(g), i64::from(d));
    let num = BigInt::from(a - b + 1) * binomial(g + 1, d - b);
    let ratio_form = exact_div(&num, &BigInt::from(g + 1))
        .unwrap_or_else(|| panic!("(a-b+1) C(g+1,d-b) not divisible by g+1 at a={a} b={b} g={g} d={d}"));
    let difference_form = binomial(g, d - b - 1) - binomial(g, d - b);
    Ok(Gr2Pairing { ratio_form, difference_form })
}

/// `∫_{Gr(2,d+1)} σ_{a,b} · σ_1^g` for `a + b + g = 2(d - 1)`.
///
/// Panics if the two closed forms disagree.
pub fn gr2_pairing(a: u32, b: u32, g: u32, d: u32) -> Result<BigInt, Error> {
    let forms = gr2_pairing_forms(a, b, g, d)?;
    assert_eq!(forms.ratio_form, forms.difference_form, "closed forms disagree at a={a} b={b} g={g} d={d}");
    Ok(forms.ratio_form)
}

/// The three closed-form expressions for `L_{g,1,d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R1ClosedForms {
    /// `Σ_{α_0+α_1=2d-2-g} ∫ σ_1^g σ_{α_0} σ_{α_1}`, expanded with
    /// Giambelli and evaluated with [`gr2_pairing`].
    pub sum_form: BigInt,
    /// `Σ_i (2d-g-2i-1)^2/(g+1) · C(g+1, d-i)`.
    pub binomial_form: BigInt,
    /// `2^g - 2 Σ_{i<g-d} C(g,i) + (g-d-1) C(g,g-d) + (d-g-1) C(g,g-d+1)`.
    pub cps_form: BigInt,
}

impl R1ClosedForms {
    pub fn agree(&self) -> bool {
        self.sum_form == self.binomial_form && self.binomial_form == self.cps_form
    }
}

/// Evaluates the closed forms for pencils; needs `2d - 2 - g >= 0`.
pub fn r1_closed_forms(g: u32, d: u32) -> Result<R1ClosedForms, Error> {
    let (gi, di) = (i64::from(g), i64::from(d));
    let total = 2 * di - 2 - gi;
    if total < 0 {
        return Err(Error::RegimeViolation(format!("2d - 2 - g = {total} < 0")));
    }

    // σ_x σ_y = Σ_{j=0}^{y} σ_{x+j, y-j} for x >= y (iterated Giambelli);
    // terms with first part above d-1 vanish on Gr(2, d+1).
    let mut sum_form = BigInt::zero();
    for x in 0..=total {
        let y = total - x;
        let (hi, lo) = (x.max(y), x.min(y));
        for j in 0..=lo {
            let a = hi + j;
            if a > di - 1 {
                break;
            }
            sum_form += gr2_pairing(a as u32, (lo - j) as u32, g, d)?;
        }
    }

    let mut num = BigInt::zero();
    for i in 0..=total / 2 {
        let m = 2 * di - gi - 2 * i - 1;
        num += BigInt::from(m * m) * binomial(gi + 1, di - i);
    }
    let binomial_form = exact_div(&num, &BigInt::from(gi + 1))
        .unwrap_or_else(|| panic!("binomial form not integral at g={g} d={d}"));

    let mut cps_form = pow(2, g);
    for i in 0..gi - di {
        cps_form -= BigInt::from(2) * binomial(gi, i);
    }
    cps_form += BigInt::from(gi - di - 1) * binomial(gi, gi - di);
    cps_form += BigInt::from(di - gi - 1) * binomial(gi, gi - di + 1);

    Ok(R1ClosedForms { sum_form, binomial_form, cps_form })
}

/// Degree of the closure of the preimage of `Σ_λ` in the projective space
/// of `(r+1)`-tuples of degree-`d` polynomials:
/// `∫ σ_λ · Σ_{α_0+…+α_r=(r+1)(d-r)-|λ|} Π σ_{α_i}`.
pub fn pullback_degree(lambda: &Partition, r: u32, d: u32) -> Result<BigInt, Error> {
    let shape = BoxShape::for_grassmannian(r, d)?;
    let limit = d - r;
    if lambda.size() > limit {
        return Err(Error::CodimTooLarge { size: lambda.size(), limit });
    }
    let sigma = CohomologyClass::schubert(shape, lambda.clone())?;
    let total = i64::from(shape.dimension()) - i64::from(lambda.size());
    sigma.pairing(&special_sum(total, shape))
}

/// `Σ_{|λ|=rg} β_λ · deg(Σ̃_λ)`, the degeneration formula in the
/// large-degree range.
pub fn degeneration_sum(p: &CountProblem) -> Result<BigInt, Error> {
    if p.regime != Regime::LargeD {
        return Err(Error::RegimeViolation(format!(
            "degeneration sum needs d >= rg + r, got g={} r={} d={}",
            p.g, p.r, p.d
        )));
    }
    let shape = p.shape().expect("large d has d >= r");
    let beta = sigma1r_power_table(p.g, shape);
    let mut total = BigInt::zero();
    for (lambda, coeff) in beta.terms() {
        total += coeff * pullback_degree(lambda, p.r, p.d)?;
    }
    Ok(total)
}

/// Castelnuovo's count of `g^r_d` on a general curve when `ρ = 0`, with
/// `g = rs + s` and `d = rs + r`:
/// `g! · (1!·2!·…·r!) / (s!·(s+1)!·…·(s+r)!)`.
///
/// Panics if the quotient is not exact.
pub fn castelnuovo(r: u32, s: u32) -> Result<BigInt, Error> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidParameter(format!("need r, s >= 1, got r = {r}, s = {s}")));
    }
    let g = u64::from(r) * u64::from(s) + u64::from(s);
    let mut num = factorial(g);
    let mut den = BigInt::one();
    for i in 1..=u64::from(r) {
        num *= factorial(i);
    }
    for i in 0..=u64::from(r) {
        den *= factorial(u64::from(s) + i);
    }
    Ok(exact_div(&num, &den).unwrap_or_else(|| panic!("Castelnuovo quotient not integral at r={r} s={s}")))
}

/// `(g, r, d)` with extra ramification `λ_1, …, λ_m` imposed at further
/// general points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamifiedProblem {
    pub g: u32,
    pub r: u32,
    pub d: u32,
    pub ramification: Vec<Partition>,
    /// `Σ |λ_j|`.
    pub lambda_tot: u32,
    /// `n r = dr + d + r - λ_tot - gr`.
    pub n: i64,
}

impl RamifiedProblem {
    pub fn new(g: u32, r: u32, d: u32, ramification: Vec<Partition>) -> Result<Self, Error> {
        if r == 0 || d == 0 {
            return Err(Error::InvalidParameter(format!("need r >= 1 and d >= 1, got r = {r}, d = {d}")));
        }
        if let Some(bad) = ramification.iter().find(|l| l.len() > r as usize) {
            return Err(Error::InvalidPartition(format!(
                "ramification ({bad}) must have at most r = {r} nonzero parts"
            )));
        }
        let lambda_tot: u32 = ramification.iter().map(Partition::size).sum();
        let (gi, ri, di) = (i64::from(g), i64::from(r), i64::from(d));
        let numerator = di * ri + di + ri - i64::from(lambda_tot) - gi * ri;
        if numerator % ri != 0 {
            return Err(Error::NotBalanced { numerator, r });
        }
        Ok(RamifiedProblem { g, r, d, ramification, lambda_tot, n: numerator / ri })
    }

    pub fn m(&self) -> usize {
        self.ramification.len()
    }

    /// `d >= rg + r + λ_tot`.
    pub fn is_large_d(&self) -> bool {
        self.d >= self.r * self.g + self.r + self.lambda_tot
    }

    pub fn is_proven(&self) -> bool {
        self.is_large_d() || self.n == i64::from(self.r) + 2 || self.r == 1
    }
}

/// `(r+1)^g · Π_j deg(Σ̃_{λ_j})` in the large-degree range.
pub fn ramified_large_d(p: &RamifiedProblem) -> Result<BigInt, Error> {
    if !p.is_large_d() {
        return Err(Error::RegimeViolation(format!(
            "d = {} < rg + r + lambda_tot = {}",
            p.d,
            p.r * p.g + p.r + p.lambda_tot
        )));
    }
    let mut value = pow(u64::from(p.r) + 1, p.g);
    for lambda in &p.ramification {
        value *= pullback_degree(lambda, p.r, p.d)?;
    }
    Ok(value)
}

/// `∫ σ_{1^r}^g · Π_j σ_{λ_j} · Σ_{Σα_i=(r+1)(d-r)-rg-λ_tot} Π σ_{α_i}`.
pub fn ramified_integral(p: &RamifiedProblem) -> Result<FormulaValue, Error> {
    let proven = p.is_proven();
    let total = i64::from(p.r + 1) * (i64::from(p.d) - i64::from(p.r))
        - i64::from(p.r) * i64::from(p.g)
        - i64::from(p.lambda_tot);
    if total < 0 {
        return Ok(FormulaValue { value: BigInt::zero(), proven });
    }
    let shape = BoxShape::for_grassmannian(p.r, p.d)?;
    let mut class = sigma1r_power_table(p.g, shape);
    for lambda in &p.ramification {
        let sigma = CohomologyClass::schubert(shape, lambda.clone())?;
        class = lr_multiply(&class, &sigma)?;
    }
    let value = class.pairing(&special_sum(total, shape))?;
    Ok(FormulaValue { value, proven })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::times_sigma1_pow;
    use alloc::vec;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = classify(6, 1, 7).unwrap();
        assert_eq!((c.n, c.regime), (9, Regime::LargeD));
        assert!(matches!(classify(6, 2, 15), Err(Error::NotBalanced { numerator: 35, r: 2 })));
        let c = classify(4, 1, 2).unwrap();
        assert_eq!((c.rho, c.regime), (-2, Regime::Empty));
        assert_eq!(c.tags(), vec![Regime::Empty, Regime::RankOne]);
    }

    #[test]
    fn classify_invariants() {
        for g in 0..8u32 {
            for r in 1..4u32 {
                for d in 1..30u32 {
                    let Ok(c) = classify(g, r, d) else { continue };
                    let (gi, ri, di) = (i64::from(g), i64::from(r), i64::from(d));
                    assert_eq!(c.n * ri, di * ri + di + ri - ri * gi);
                    assert_eq!(c.rho, gi - (ri + 1) * (gi - di + ri));
                    // d >= rg + r iff n >= d + 2
                    assert_eq!(d >= r * g + r, c.n >= di + 2);
                    // n < r + 2 iff rho < 0
                    assert_eq!(c.n < ri + 2, c.rho < 0);
                }
            }
        }
    }

    #[test]
    fn minimal_n_and_unproven() {
        // g = 3, r = 2, d = 4: Castelnuovo case, n = r + 2.
        let c = classify(3, 2, 4).unwrap();
        assert_eq!((c.n, c.regime), (4, Regime::MinimalN));
        assert_eq!(tevelev_integral(&c), FormulaValue { value: big(1), proven: true });
        // r = 2, g = 3, d = 6: n = 7, not large, not minimal.
        let c = classify(3, 2, 6).unwrap();
        assert_eq!(c.regime, Regime::Unproven);
        assert!(!tevelev_integral(&c).proven);
    }

    #[test]
    fn large_d_examples() {
        assert_eq!(tevelev_large_d(&classify(6, 1, 7).unwrap()).unwrap(), big(64));
        assert_eq!(tevelev_large_d(&classify(1, 2, 4).unwrap()).unwrap(), big(3));
        assert_eq!(tevelev_large_d(&classify(0, 3, 3).unwrap()).unwrap(), big(1));
        assert!(matches!(
            tevelev_large_d(&classify(3, 1, 3).unwrap()),
            Err(Error::RegimeViolation(_))
        ));
    }

    #[test]
    fn integral_examples() {
        let v = tevelev_integral_for(2, 1, 2).unwrap();
        assert_eq!(v, FormulaValue { value: big(1), proven: true });
        assert_eq!(tevelev_integral_for(6, 1, 7).unwrap().value, big(64));
        assert_eq!(tevelev_integral_for(3, 1, 3).unwrap().value, big(4));
        assert_eq!(tevelev_integral_for(4, 1, 2).unwrap().value, big(0));
        assert!(tevelev_integral_for(6, 2, 15).is_err());
        // Gr(r+1, r+1) is a point.
        assert_eq!(tevelev_integral_for(0, 3, 3).unwrap().value, big(1));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary_value(3, 1).unwrap(), big(4));
        assert_eq!(boundary_value(2, 1).unwrap(), big(1));
        assert_eq!(boundary_value(1, 1).unwrap(), big(0));
        assert!(matches!(boundary_value(0, 2), Err(Error::RegimeViolation(_))));
        assert_eq!(boundary_value(2, 1).unwrap(), tevelev_integral_for(2, 1, 2).unwrap().value);
    }

    #[test]
    fn closed_form_examples() {
        let f = r1_closed_forms(6, 7).unwrap();
        assert!(f.agree());
        assert_eq!(f.sum_form, big(64));
        let f = r1_closed_forms(2, 2).unwrap();
        assert_eq!((f.sum_form.clone(), f.agree()), (big(1), true));
        let f = r1_closed_forms(3, 3).unwrap();
        assert_eq!((f.cps_form.clone(), f.agree()), (big(4), true));
        assert!(matches!(r1_closed_forms(6, 2), Err(Error::RegimeViolation(_))));
    }

    #[test]
    fn pairing_examples() {
        for d in 1..6 {
            assert_eq!(gr2_pairing(d - 1, d - 1, 0, d).unwrap(), big(1));
        }
        assert_eq!(gr2_pairing(0, 0, 2, 2).unwrap(), big(1));
        assert_eq!(gr2_pairing(2, 0, 2, 3).unwrap(), big(1));
        assert!(matches!(gr2_pairing(1, 0, 2, 3), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn pullback_examples() {
        for r in 1..4 {
            for d in r + 1..r + 5 {
                if r > d - r {
                    continue;
                }
                assert_eq!(pullback_degree(&Partition::column(r), r, d).unwrap(), big(i64::from(r) + 1));
                assert_eq!(pullback_degree(&Partition::empty(), r, d).unwrap(), big(1));
            }
        }
        assert_eq!(pullback_degree(&p(&[1]), 1, 3).unwrap(), big(2));
        assert!(matches!(
            pullback_degree(&p(&[2, 1]), 1, 3),
            Err(Error::CodimTooLarge { size: 3, limit: 2 })
        ));
    }

    #[test]
    fn degeneration_examples() {
        assert_eq!(degeneration_sum(&classify(2, 1, 4).unwrap()).unwrap(), big(4));
        assert_eq!(degeneration_sum(&classify(1, 2, 4).unwrap()).unwrap(), big(3));
        assert_eq!(degeneration_sum(&classify(0, 2, 2).unwrap()).unwrap(), big(1));
        assert!(degeneration_sum(&classify(3, 1, 3).unwrap()).is_err());
    }

    #[test]
    fn castelnuovo_examples() {
        assert_eq!(castelnuovo(1, 2).unwrap(), big(2));
        assert_eq!(castelnuovo(2, 1).unwrap(), big(1));
        assert_eq!(castelnuovo(1, 3).unwrap(), big(5));
        assert!(castelnuovo(0, 1).is_err());
    }

    #[test]
    fn ramified_examples() {
        let rp = RamifiedProblem::new(3, 1, 5, vec![]).unwrap();
        assert_eq!(ramified_large_d(&rp).unwrap(), big(8));
        assert_eq!(ramified_integral(&rp).unwrap().value, tevelev_integral_for(3, 1, 5).unwrap().value);

        let rp = RamifiedProblem::new(1, 1, 4, vec![p(&[1])]).unwrap();
        assert_eq!(ramified_large_d(&rp).unwrap(), big(4));
        assert_eq!(ramified_integral(&rp).unwrap(), FormulaValue { value: big(4), proven: true });

        let rp = RamifiedProblem::new(0, 1, 3, vec![p(&[1]), p(&[1])]).unwrap();
        assert_eq!(ramified_large_d(&rp).unwrap(), big(4));
        assert_eq!(ramified_integral(&rp).unwrap().value, big(4));

        // Pieri-only recomputation: σ_1^2 · σ_1 · (σ_0σ_1 + σ_1σ_0) = 2 σ_1^4.
        let rp = RamifiedProblem::new(2, 1, 3, vec![p(&[1])]).unwrap();
        assert!(ramified_large_d(&rp).is_err());
        let v = ramified_integral(&rp).unwrap();
        assert!(v.proven);
        let shape = BoxShape::new(2, 2).unwrap();
        let direct = times_sigma1_pow(&CohomologyClass::one(shape), 4).integrate() * 2;
        assert_eq!(v.value, direct);
        assert_eq!(v.value, big(4));

        assert!(RamifiedProblem::new(1, 1, 4, vec![p(&[1, 1])]).is_err());
        assert!(matches!(
            RamifiedProblem::new(1, 2, 4, vec![p(&[1])]),
            Err(Error::NotBalanced { .. })
        ));
    }
}
