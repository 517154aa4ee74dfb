//! Vector literals: `"0,3/10,2/5,3/10,0"`, `"0, 0.3, 0.4, 0.3, 0"`, `"(0,24,36,36,24)"`.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralError(pub String);

impl std::fmt::Display for LiteralError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn entries(text: &str) -> Result<Vec<&str>, LiteralError> {
    let trimmed = text.trim();
    let inner = match (trimmed.chars().next(), trimmed.chars().last()) {
        (Some('('), Some(')')) | (Some('['), Some(']')) => &trimmed[1..trimmed.len() - 1],
        _ => trimmed,
    };
    if inner.trim().is_empty() {
        return Err(LiteralError("empty vector".into()));
    }
    Ok(inner.split(',').map(str::trim).collect())
}

/// Parses one entry: an integer, `p/q`, or a terminating decimal.
pub fn parse_rational(entry: &str) -> Result<BigRational, LiteralError> {
    let bad = || LiteralError(format!("cannot parse {entry:?} as an exact rational"));
    if entry.is_empty() {
        return Err(LiteralError("empty entry".into()));
    }
    if let Some((p, q)) = entry.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(LiteralError(format!("zero denominator in {entry:?}")));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = entry.split_once('.') {
        let (negative, whole) = match whole.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        let digits_only = |s: &str| s.chars().all(|c| c.is_ascii_digit());
        if !digits_only(whole) || !digits_only(frac) || (whole.is_empty() && frac.is_empty()) {
            return Err(bad());
        }
        let mantissa = format!("{whole}{frac}");
        let mut numer = BigInt::from_str(if mantissa.is_empty() { "0" } else { &mantissa })
            .map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10u32), frac.len());
        return Ok(BigRational::new(numer, denom));
    }
    BigInt::from_str(entry)
        .map(|p| BigRational::new(p, BigInt::one()))
        .map_err(|_| bad())
}

pub fn parse_rationals(text: &str) -> Result<Vec<BigRational>, LiteralError> {
    entries(text)?.into_iter().map(parse_rational).collect()
}

/// Parses a vector of non-negative integer counts.
pub fn parse_counts(text: &str) -> Result<Vec<BigUint>, LiteralError> {
    entries(text)?
        .into_iter()
        .map(|e| {
            BigUint::from_str(e)
                .map_err(|_| LiteralError(format!("count {e:?} is not a non-negative integer")))
        })
        .collect()
}
