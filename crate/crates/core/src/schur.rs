//! Schur polynomials `Δ_λ = det[s_{λ_i+j−i}]` in the Segre classes of the
//! twisted normal bundle, evaluated two ways: a Jacobi–Trudi determinant over
//! exact integers, and the closed product form available for Veronese
//! varieties.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, determinant, factorial, factorial_ratio, into_integer, pow, rat};
use crate::error::{ensure_range, Error, Result};
use crate::partitions::{enumerate_partitions, syt_count_hook, Partition};

/// The Veronese embedding `v_d(P^n) ⊆ P^N`, `N = C(n+d, d) − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VeroneseVariety {
    pub n: u32,
    pub d: u32,
    #[serde(rename = "N")]
    ambient_dim: u32,
}

impl VeroneseVariety {
    pub fn new(n: u32, d: u32) -> Result<Self> {
        ensure_range!(n >= 1, "Veronese variety needs n >= 1, got {n}");
        ensure_range!(d >= 2, "Veronese variety needs d >= 2, got {d}");
        let ambient: BigInt = binomial(n as i64 + d as i64, d as i64) - 1;
        let ambient_dim = ambient
            .to_u32()
            .ok_or_else(|| Error::OutOfRange(format!("ambient dimension of v_{d}(P^{n}) too large")))?;
        Ok(Self { n, d, ambient_dim })
    }

    /// `N`.
    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    /// The Segre classes `s_0, …, s_{n+1}` of the twisted normal bundle as
    /// coefficients of powers of the hyperplane class of `P^n`.
    pub fn segre_sequence(&self) -> SegreSequence {
        SegreSequence::new(
            (0..=self.n as i64 + 1)
                .map(|i| veronese_segre(self, i))
                .collect(),
        )
        .expect("s_0 = 1")
    }
}

/// `s_i = C(n+1, i)·(d−1)^i`, the coefficient of `h^i` in `(1 + (d−1)h)^{n+1}`.
pub fn veronese_segre(v: &VeroneseVariety, i: i64) -> BigInt {
    if i < 0 || i > v.n as i64 + 1 {
        return BigInt::zero();
    }
    binomial(v.n as i64 + 1, i) * pow(v.d as i64 - 1, i as u32)
}

/// `s_0 = 1, s_1, …, s_K`; indices outside `0..=K` read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreSequence {
    coefficients: Vec<BigInt>,
}

impl SegreSequence {
    pub fn new(coefficients: Vec<BigInt>) -> Result<Self> {
        if coefficients.first() != Some(&BigInt::one()) {
            return Err(Error::OutOfRange("a Segre sequence starts with s_0 = 1".into()));
        }
        Ok(Self { coefficients })
    }

    pub fn get(&self, i: i64) -> BigInt {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.coefficients.get(i))
            .cloned()
            .unwrap_or_default()
    }
}

/// Jacobi–Trudi determinant `det[s_{λ_i+j−i}]_{1≤i,j≤length}`.
pub fn schur_delta_determinant(s: &SegreSequence, lam: &Partition, length: usize) -> Result<BigInt> {
    let parts = lam.padded(length)?;
    let rows = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            (0..length)
                .map(|j| s.get(p as i64 + j as i64 - i as i64))
                .collect()
        })
        .collect();
    Ok(determinant(rows))
}

/// Closed form of `Δ_λ` for `v_d(P^n)`:
/// `(d−1)^{|λ|} f^λ / |λ|! · Π_{i=1}^{length} (n+i)!/(n+i−λ_i)!`, with
/// `1/k! = 0` for negative `k`.
pub fn schur_delta_veronese_closed(v: &VeroneseVariety, lam: &Partition, length: usize) -> Result<BigInt> {
    let parts = lam.padded(length)?;
    let weight = lam.weight();
    ensure_range!(weight <= v.n, "|λ| = {weight} exceeds n = {}", v.n);

    let mut product = BigInt::one();
    for (idx, &p) in parts.iter().enumerate() {
        let top = v.n as u64 + idx as u64 + 1;
        let Some(bottom) = top.checked_sub(p as u64) else {
            return Ok(BigInt::zero());
        };
        product *= factorial_ratio(top, bottom);
    }
    let numerator = pow(v.d as i64 - 1, weight) * syt_count_hook(lam) * product;
    into_integer(
        rat(numerator, factorial(weight as u64)),
        &format!("Δ_{lam} for v_{}(P^{})", v.d, v.n),
    )
}

/// `λ ↦ ∫_X Δ_λ(s)` for all partitions `λ ⊢ n`, the input to the
/// general-variety degree formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreIntegralTable {
    n: u32,
    ambient_dim: u32,
    entries: BTreeMap<Partition, BigInt>,
}

impl SegreIntegralTable {
    /// Requires `N >= n + 1`, an entry for every partition of `n`, and no
    /// entries of any other weight.
    pub fn new(n: u32, ambient_dim: u32, entries: BTreeMap<Partition, BigInt>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Schema("n must be positive".into()));
        }
        if ambient_dim < n + 1 {
            return Err(Error::Schema(format!("N = {ambient_dim} must be at least n + 1 = {}", n + 1)));
        }
        if let Some(bad) = entries.keys().find(|p| p.weight() != n) {
            return Err(Error::Schema(format!("entry {bad} does not have weight n = {n}")));
        }
        for lam in enumerate_partitions(n, n as usize) {
            if !entries.contains_key(&lam) {
                return Err(Error::MissingEntry(lam));
            }
        }
        Ok(Self {
            n,
            ambient_dim,
            entries,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    /// Lookup is padding-invariant since partitions are canonical.
    pub fn get(&self, lam: &Partition) -> Result<&BigInt> {
        self.entries
            .get(lam)
            .ok_or_else(|| Error::MissingEntry(lam.clone()))
    }

    /// Entries in reverse-lexicographic order, `(n)` first.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.entries.iter().rev()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TableDocument = serde_json::from_str(text)?;
        let mut entries = BTreeMap::new();
        for entry in doc.entries {
            let value: BigInt = entry
                .integral
                .trim()
                .parse()
                .map_err(|_| Error::Schema(format!("integral {:?} is not a decimal integer", entry.integral)))?;
            if entries.insert(entry.partition.clone(), value).is_some() {
                return Err(Error::Schema(format!("duplicate entry for {}", entry.partition)));
            }
        }
        Self::new(doc.n, doc.ambient_dim, entries)
    }

    pub fn to_json(&self) -> String {
        let doc = TableDocument {
            n: self.n,
            ambient_dim: self.ambient_dim,
            entries: self
                .entries()
                .map(|(partition, value)| TableEntry {
                    partition: partition.clone(),
                    integral: value.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDocument {
    n: u32,
    #[serde(rename = "N")]
    ambient_dim: u32,
    entries: Vec<TableEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableEntry {
    partition: Partition,
    integral: String,
}

/// Integral table of `v_d(P^n)` from the closed Schur form (`∫_{P^n} h^n = 1`).
pub fn veronese_integral_table(v: &VeroneseVariety) -> SegreIntegralTable {
    let entries = enumerate_partitions(v.n, v.n as usize)
        .into_iter()
        .map(|lam| {
            let value = schur_delta_veronese_closed(v, &lam, v.n as usize)
                .expect("|λ| = n and at most n parts");
            (lam, value)
        })
        .collect();
    SegreIntegralTable::new(v.n, v.ambient_dim, entries).expect("complete by construction")
}

/// Same table, but every entry is a Jacobi–Trudi determinant.
pub fn veronese_integral_table_by_determinant(v: &VeroneseVariety) -> SegreIntegralTable {
    let s = v.segre_sequence();
    let entries = enumerate_partitions(v.n, v.n as usize)
        .into_iter()
        .map(|lam| {
            let value = schur_delta_determinant(&s, &lam, v.n as usize).expect("at most n parts");
            (lam, value)
        })
        .collect();
    SegreIntegralTable::new(v.n, v.ambient_dim, entries).expect("complete by construction")
}

/// Table for a curve, whose only entry is `∫ s_1 = 2d + 2g − 2`.
pub fn curve_integral_table(ambient_dim: u32, degree: u32, genus: u32) -> Result<SegreIntegralTable> {
    let value = BigInt::from(2 * degree as i64 + 2 * genus as i64 - 2);
    let entries = BTreeMap::from([(Partition::new(vec![1])?, value)]);
    SegreIntegralTable::new(1, ambient_dim, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn v(n: u32, d: u32) -> VeroneseVariety {
        VeroneseVariety::new(n, d).unwrap()
    }

    #[test]
    fn variety_ranges() {
        assert_eq!(v(1, 4).ambient_dim(), 4);
        assert_eq!(v(2, 2).ambient_dim(), 5);
        assert_eq!(v(3, 3).ambient_dim(), 19);
        assert!(VeroneseVariety::new(2, 1).is_err());
        assert!(VeroneseVariety::new(0, 3).is_err());
    }

    #[test]
    fn segre_values() {
        assert_eq!(veronese_segre(&v(2, 2), 1), BigInt::from(3));
        assert_eq!(veronese_segre(&v(3, 5), 0), BigInt::one());
        assert_eq!(veronese_segre(&v(1, 4), 1), BigInt::from(6));
        assert_eq!(veronese_segre(&v(2, 3), 3), BigInt::from(8));
        assert_eq!(veronese_segre(&v(2, 3), 4), BigInt::zero());
        assert_eq!(veronese_segre(&v(2, 3), -1), BigInt::zero());
    }

    #[test]
    fn segre_sequence_needs_unit() {
        assert!(SegreSequence::new(vec![BigInt::from(2)]).is_err());
        assert!(SegreSequence::new(vec![]).is_err());
        let s = SegreSequence::new(vec![BigInt::one(), BigInt::from(5)]).unwrap();
        assert_eq!(s.get(1), BigInt::from(5));
        assert_eq!(s.get(2), BigInt::zero());
        assert_eq!(s.get(-1), BigInt::zero());
    }

    #[test]
    fn determinant_examples() {
        let s = v(2, 2).segre_sequence();
        for len in 1..4 {
            assert_eq!(schur_delta_determinant(&s, &Partition::empty(), len).unwrap(), BigInt::one());
        }
        assert_eq!(schur_delta_determinant(&s, &p(&[1, 1]), 2).unwrap(), BigInt::from(6));
        assert_eq!(schur_delta_determinant(&s, &p(&[2]), 2).unwrap(), BigInt::from(3));
        assert!(schur_delta_determinant(&s, &p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let x = v(2, 2);
        assert_eq!(schur_delta_veronese_closed(&x, &p(&[1, 1]), 2).unwrap(), BigInt::from(6));
        assert_eq!(schur_delta_veronese_closed(&x, &p(&[2]), 2).unwrap(), BigInt::from(3));
        assert_eq!(schur_delta_veronese_closed(&x, &Partition::empty(), 3).unwrap(), BigInt::one());
        assert!(schur_delta_veronese_closed(&x, &p(&[2, 1]), 2).is_err());
        assert!(schur_delta_veronese_closed(&x, &p(&[1, 1]), 1).is_err());
    }

    #[test]
    fn closed_form_ignores_extra_padding() {
        let x = v(3, 4);
        for lam in enumerate_partitions(3, 3) {
            let base = schur_delta_veronese_closed(&x, &lam, lam.len()).unwrap();
            for extra in 1..4 {
                assert_eq!(schur_delta_veronese_closed(&x, &lam, lam.len() + extra).unwrap(), base);
            }
        }
    }

    #[test]
    fn tables() {
        let table = veronese_integral_table(&v(1, 4));
        assert_eq!(table.get(&p(&[1])).unwrap(), &BigInt::from(6));

        let table = veronese_integral_table(&v(2, 2));
        assert_eq!(table.get(&p(&[2])).unwrap(), &BigInt::from(3));
        assert_eq!(table.get(&p(&[1, 1])).unwrap(), &BigInt::from(6));

        let table = veronese_integral_table(&v(2, 3));
        assert_eq!(table.get(&p(&[2])).unwrap(), &BigInt::from(12));
        assert_eq!(table.get(&p(&[1, 1])).unwrap(), &BigInt::from(24));

        for n in 1..=4 {
            for d in 2..=5 {
                let x = v(n, d);
                let table = veronese_integral_table(&x);
                assert_eq!(table, veronese_integral_table_by_determinant(&x));
                assert!(table.entries().all(|(_, e)| *e > BigInt::zero()));
            }
        }
    }

    #[test]
    fn table_json_round_trip() {
        let table = veronese_integral_table(&v(3, 3));
        let back = SegreIntegralTable::from_json(&table.to_json()).unwrap();
        assert_eq!(back, table);
    }

    #[test]
    fn table_validation() {
        let ok = r#"{"n": 2, "N": 5, "entries": [
            {"partition": [2, 0], "integral": "3"},
            {"partition": [1, 1], "integral": "6"}]}"#;
        let table = SegreIntegralTable::from_json(ok).unwrap();
        assert_eq!(table.get(&p(&[2])).unwrap(), &BigInt::from(3));

        let missing = r#"{"n": 2, "N": 5, "entries": [{"partition": [2], "integral": "3"}]}"#;
        assert!(matches!(SegreIntegralTable::from_json(missing), Err(Error::MissingEntry(_))));

        let wrong_weight = r#"{"n": 1, "N": 3, "entries": [
            {"partition": [1], "integral": "3"}, {"partition": [2], "integral": "1"}]}"#;
        assert!(matches!(SegreIntegralTable::from_json(wrong_weight), Err(Error::Schema(_))));

        let dup = r#"{"n": 1, "N": 3, "entries": [
            {"partition": [1], "integral": "3"}, {"partition": [1, 0], "integral": "1"}]}"#;
        assert!(matches!(SegreIntegralTable::from_json(dup), Err(Error::Schema(_))));

        let not_int = r#"{"n": 1, "N": 3, "entries": [{"partition": [1], "integral": "1.5"}]}"#;
        assert!(matches!(SegreIntegralTable::from_json(not_int), Err(Error::Schema(_))));

        let small_ambient = r#"{"n": 1, "N": 1, "entries": [{"partition": [1], "integral": "2"}]}"#;
        assert!(matches!(SegreIntegralTable::from_json(small_ambient), Err(Error::Schema(_))));

        assert!(matches!(SegreIntegralTable::from_json("{"), Err(Error::Json(_))));
    }

    #[test]
    fn curve_table() {
        let table = curve_integral_table(4, 5, 1).unwrap();
        assert_eq!(table.get(&p(&[1])).unwrap(), &BigInt::from(10));
    }
}
