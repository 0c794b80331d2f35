//! Integer partitions and standard Young tableau counts.
//!
//! [`syt_count_hook`] evaluates the closed hook-length product;
//! [`syt_count_bruteforce`] fills diagrams cell by cell and never touches it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::factorial;
use crate::error::{Error, Result};

/// Default weight cap for [`syt_count_bruteforce`].
pub const BRUTE_FORCE_CAP: u32 = 12;

/// A weakly decreasing sequence of positive parts.
///
/// Stored without trailing zeros. Formulas that index `i = 1..e` over a
/// zero-padded view ask for it explicitly through [`Partition::padded`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts any weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The rectangle `(width^height)`; empty when either side is zero.
    pub fn rectangle(height: usize, width: u32) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Self {
            parts: vec![width; height],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based) of the zero-padded view.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Zero-padded view of exactly `length` parts.
    pub fn padded(&self, length: usize) -> Result<Vec<u32>> {
        if self.len() > length {
            return Err(Error::TooManyParts {
                partition: self.clone(),
                max: length,
            });
        }
        let mut out = self.parts.clone();
        out.resize(length, 0);
        Ok(out)
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Self { parts }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `3,1`, `(3,1)`, `[3, 1]` or `3 1`; the empty string and `()` give
/// the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::OutOfRange(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `total` with at most `max_parts` nonzero parts, in
/// reverse-lexicographic order.
pub fn enumerate_partitions(total: u32, max_parts: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        if slots == 0 {
            return;
        }
        for first in (1..=cap.min(rest)).rev() {
            // The remaining slots must be able to absorb what is left.
            if (first as u64) * (slots as u64) < rest as u64 {
                break;
            }
            prefix.push(first);
            go(rest - first, first, slots - 1, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    go(total, total, max_parts, &mut Vec::new(), &mut out);
    out
}

/// `lam + (width^height)`: adds `width` to each of the first `height` parts of
/// the zero-padded `lam`.
pub fn add_rectangle(lam: &Partition, height: usize, width: u32) -> Result<Partition> {
    let parts = lam
        .padded(height)?
        .into_iter()
        .map(|p| p + width)
        .collect();
    Partition::new(parts)
}

/// Number of standard Young tableaux of shape `lam` by the hook-length
/// product `|λ|! Π_{i<j} (λ_i − λ_j + j − i) / Π_i (λ_i + ℓ − i)!`.
pub fn syt_count_hook(lam: &Partition) -> BigInt {
    let rows = lam.len();
    let parts = lam.parts();
    let mut numerator = factorial(lam.weight() as u64);
    for i in 0..rows {
        for j in i + 1..rows {
            numerator *= (parts[i] - parts[j]) as u64 + (j - i) as u64;
        }
    }
    let denominator = (0..rows).fold(BigInt::one(), |acc, i| {
        acc * factorial(parts[i] as u64 + (rows - 1 - i) as u64)
    });
    debug_assert!((&numerator % &denominator).is_zero());
    numerator / denominator
}

/// Counts standard Young tableaux by placing `1, 2, …, |λ|` one at a time
/// into every admissible cell. Rejects shapes heavier than [`BRUTE_FORCE_CAP`].
pub fn syt_count_bruteforce(lam: &Partition) -> Result<BigInt> {
    syt_count_bruteforce_capped(lam, BRUTE_FORCE_CAP)
}

pub fn syt_count_bruteforce_capped(lam: &Partition, cap: u32) -> Result<BigInt> {
    let weight = lam.weight();
    if weight > cap {
        return Err(Error::SizeCap { weight, cap });
    }

    // filled[i] is how many cells of row i already hold a number. A new
    // number may go at the end of row i when the row is not full and the
    // cell above it is filled.
    fn place(shape: &[u32], filled: &mut [u32], remaining: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut count = 0;
        for i in 0..shape.len() {
            let room = filled[i] < shape[i];
            let supported = i == 0 || filled[i - 1] > filled[i];
            if room && supported {
                filled[i] += 1;
                count += place(shape, filled, remaining - 1);
                filled[i] -= 1;
            }
        }
        count
    }

    let mut filled = vec![0; lam.len()];
    Ok(BigInt::from(place(lam.parts(), &mut filled, weight)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_drops_zeros() {
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[3, 1]).padded(4).unwrap(), vec![3, 1, 0, 0]);
        assert!(p(&[1, 1, 1]).padded(2).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[2, 2, 0]".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("4 1".parse::<Partition>().unwrap(), p(&[4, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }

    #[test]
    fn json_is_canonical_array() {
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
        let back: Partition = serde_json::from_str("[2,1,0]").unwrap();
        assert_eq!(back, p(&[2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(0, 5), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3, 2), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(enumerate_partitions(2, 4), vec![p(&[2]), p(&[1, 1])]);
        assert!(enumerate_partitions(3, 0).is_empty());
        assert_eq!(enumerate_partitions(0, 0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4, 4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn partition_counts() {
        // p(k) for k = 0..=10
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (k, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_partitions(k as u32, k).len(), count);
        }
    }

    #[test]
    fn add_rectangle_examples() {
        assert_eq!(add_rectangle(&p(&[2]), 2, 1).unwrap(), p(&[3, 1]));
        assert_eq!(add_rectangle(&p(&[1, 1]), 2, 1).unwrap(), p(&[2, 2]));
        assert_eq!(add_rectangle(&Partition::empty(), 3, 0).unwrap(), Partition::empty());
        assert!(matches!(
            add_rectangle(&p(&[1, 1, 1]), 2, 1),
            Err(Error::TooManyParts { max: 2, .. })
        ));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(syt_count_hook(&p(&[3, 1])), BigInt::from(3));
        assert_eq!(syt_count_hook(&p(&[2, 2])), BigInt::from(2));
        assert_eq!(syt_count_hook(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(syt_count_hook(&Partition::empty()), BigInt::one());
        for k in 0..8 {
            assert_eq!(syt_count_hook(&p(&[k])), BigInt::one());
        }
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(syt_count_bruteforce(&p(&[3, 1])).unwrap(), BigInt::from(3));
        assert_eq!(syt_count_bruteforce(&Partition::empty()).unwrap(), BigInt::one());
        assert_eq!(syt_count_bruteforce(&p(&[2, 2, 1])).unwrap(), BigInt::from(5));
        assert!(matches!(
            syt_count_bruteforce(&p(&[7, 6])),
            Err(Error::SizeCap { weight: 13, cap: 12 })
        ));
        assert!(syt_count_bruteforce_capped(&p(&[7, 6]), 13).is_ok());
    }

    #[test]
    fn conjugate_shapes() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::rectangle(2, 3).conjugate(), Partition::rectangle(3, 2));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }
}
