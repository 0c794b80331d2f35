//! Exact integer helpers shared by the formula modules.
//!
//! Binomials follow the convention `C(k, j) = 0` whenever `j < 0` or `k < j`,
//! including negative `k`. Reciprocal factorials follow `1/k! = 0` for `k < 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn factorial(k: u64) -> BigInt {
    (2..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `a! / b!` for `b <= a`, as a falling product.
pub fn factorial_ratio(a: u64, b: u64) -> BigInt {
    debug_assert!(b <= a);
    (b + 1..=a).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(k: i64, j: i64) -> BigInt {
    if j < 0 || k < j {
        return BigInt::zero();
    }
    let j = j.min(k - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * (k - i) / (i + 1);
    }
    acc
}

pub fn pow(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn int_rat(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Unwraps a rational that must be integral, naming the formula on failure.
pub fn into_integer(value: BigRational, what: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} = {value}")))
    }
}

pub fn require_positive(value: BigInt) -> Result<BigInt> {
    if value.is_positive() {
        Ok(value)
    } else {
        Err(Error::NonPositive(value))
    }
}

/// Exact determinant over the integers by fraction-free (Bareiss) elimination.
pub fn determinant(mut rows: Vec<Vec<BigInt>>) -> BigInt {
    let size = rows.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..size).find(|&r| !rows[r][k].is_zero()) {
                Some(r) => {
                    rows.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&rows[i][j] * &rows[k][k] - &rows[i][k] * &rows[k][j]) / &prev;
                rows[i][j] = v;
            }
        }
        prev = rows[k][k].clone();
    }
    sign * &rows[size - 1][size - 1]
}
