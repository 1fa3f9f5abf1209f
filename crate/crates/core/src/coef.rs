//! Exact rational coefficients and small number-theoretic helpers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Coefficient type: arbitrary-precision rational.
pub type Coef = BigRational;

/// The rational `n/1`.
pub fn from_i64(n: i64) -> Coef {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Coef {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `2^e` as a rational, for possibly negative `e`.
pub fn pow2(e: i64) -> Coef {
    BigRational::from_integer(BigInt::from(2)).pow(e as i32)
}

/// `(-1)^e`.
pub fn sign(e: usize) -> Coef {
    if e % 2 == 0 {
        Coef::one()
    } else {
        -Coef::one()
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Coef {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    BigRational::from_integer(acc)
}

/// Euler zigzag numbers `E_0, E_1, ..., E_n` (tangent-secant numbers:
/// `sec t + tan t = sum E_n t^n / n!`), computed by the Seidel boustrophedon
/// recurrence.
pub fn euler_zigzag(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    // Row of the Seidel triangle, alternately extended left/right.
    let mut row = vec![BigInt::one()];
    out.push(BigInt::one());
    for k in 1..=n {
        let mut next = vec![BigInt::zero(); k + 1];
        if k % 2 == 1 {
            // Fill left to right.
            for i in 1..=k {
                next[i] = &next[i - 1] + &row[i - 1];
            }
            out.push(next[k].clone());
        } else {
            // Fill right to left.
            for i in (0..k).rev() {
                next[i] = &next[i + 1] + &row[i];
            }
            out.push(next[0].clone());
        }
        row = next;
    }
    out
}

/// Parse a rational from `"p"` or `"p/q"` decimal notation.
pub fn parse_coef(s: &str) -> Result<Coef> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("bad rational numerator {num:?}")))?;
    let q: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("bad rational denominator {den:?}")))?;
    if q.is_zero() {
        return Err(Error::parse("zero denominator"));
    }
    Ok(BigRational::new(p, q))
}

/// Render a rational as `"p"` or `"p/q"`.
pub fn format_coef(c: &Coef) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// True if the rational is negative (used for pretty-printing).
pub fn is_negative(c: &Coef) -> bool {
    c.is_negative()
}
