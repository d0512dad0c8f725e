//! Parsers for command-line values: partitions, boxes, ranges and
//! Schubert monomials such as `s[1]^6 * s[2,1]`.

use std::ops::RangeInclusive;

use lincount_core::schubert::{lr_multiply, times_sigma1_pow, BoxShape, CohomologyClass, Partition};

use crate::error::CliError;

pub fn partition(input: &str) -> Result<Partition, CliError> {
    input
        .trim()
        .parse::<Partition>()
        .map_err(|e| CliError::parse("partition", input, e.to_string()))
}

/// `"K,M"`: `K` rows and `M` columns, the box of `Gr(K, K+M)`.
pub fn box_shape(input: &str) -> Result<BoxShape, CliError> {
    let err = |reason: &str| CliError::parse("box", input, reason);
    let (k, m) = input.split_once(',').ok_or_else(|| err("expected K,M"))?;
    let k: u32 = k.trim().parse().map_err(|_| err("K is not a nonnegative integer"))?;
    let m: u32 = m.trim().parse().map_err(|_| err("M is not a nonnegative integer"))?;
    Ok(BoxShape::new(k, m)?)
}

/// `"A..B"`, inclusive and nonempty.
pub fn range(what: &'static str, input: &str) -> Result<RangeInclusive<u32>, CliError> {
    let err = |reason: &str| CliError::parse(what, input, reason);
    let (a, b) = input.split_once("..").ok_or_else(|| err("expected A..B"))?;
    let a: u32 = a.trim().parse().map_err(|_| err("A is not a nonnegative integer"))?;
    let b: u32 = b.trim().parse().map_err(|_| err("B is not a nonnegative integer"))?;
    if a > b {
        return Err(err("empty range"));
    }
    Ok(a..=b)
}

/// One factor `s[λ]^e` of a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub lambda: Partition,
    pub exponent: u32,
}

/// Factors of `tok * tok * …` where `tok` is `s[a,b,…]` or `s[a,b,…]^e`.
pub fn monomial(input: &str) -> Result<Vec<Factor>, CliError> {
    let err = |reason: String| CliError::parse("expression", input, reason);
    if input.trim().is_empty() {
        return Err(err("empty expression".into()));
    }
    input
        .split('*')
        .map(|tok| {
            let tok = tok.trim();
            let rest = tok.strip_prefix("s[").ok_or_else(|| err(format!("factor {tok:?} must start with s[")))?;
            let (inner, tail) = rest.split_once(']').ok_or_else(|| err(format!("factor {tok:?} has no closing ]")))?;
            let lambda = partition(inner)?;
            let tail = tail.trim();
            let exponent = if tail.is_empty() {
                1
            } else {
                let e = tail.strip_prefix('^').ok_or_else(|| err(format!("unexpected {tail:?} after factor")))?;
                e.trim().parse().map_err(|_| err(format!("bad exponent {e:?}")))?
            };
            Ok(Factor { lambda, exponent })
        })
        .collect()
}

/// The product of the factors as a class in `shape`.
pub fn evaluate(factors: &[Factor], shape: BoxShape) -> Result<CohomologyClass, CliError> {
    let mut acc = CohomologyClass::one(shape);
    for f in factors {
        if f.lambda == Partition::row(1) {
            acc = times_sigma1_pow(&acc, f.exponent);
            continue;
        }
        let sigma = CohomologyClass::schubert(shape, f.lambda.clone())?;
        for _ in 0..f.exponent {
            acc = lr_multiply(&acc, &sigma)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_monomials() {
        let f = monomial("s[1]^6 * s[2,1]").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0], Factor { lambda: Partition::row(1), exponent: 6 });
        assert_eq!(f[1].lambda, Partition::new(vec![2, 1]).unwrap());
        assert_eq!(monomial("s[]").unwrap()[0].lambda, Partition::empty());
        for bad in ["", "t[1]", "s[1", "s[1]^x", "s[1]2", "s[1,2]"] {
            assert!(monomial(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn evaluates_in_a_box() {
        let b = box_shape("2,2").unwrap();
        let c = evaluate(&monomial("s[1]^4").unwrap(), b).unwrap();
        assert_eq!(c.integrate(), 2.into());
        let c = evaluate(&monomial("s[1]^2 * s[1,1]").unwrap(), b).unwrap();
        assert_eq!(c.integrate(), 1.into());
        assert!(evaluate(&monomial("s[3]").unwrap(), b).is_err());
    }

    #[test]
    fn parses_ranges_and_boxes() {
        assert_eq!(range("g-range", "2..5").unwrap(), 2..=5);
        assert!(range("g-range", "5..2").is_err());
        assert!(range("g-range", "5").is_err());
        assert!(box_shape("0,3").is_err());
        assert!(box_shape("2;3").is_err());
    }
}
