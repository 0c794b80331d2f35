//! Grassmannians `G(d, r)` of rank-`d` quotients of an `r`-dimensional space,
//! measured in the Plücker embedding.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{ensure_range, Result};
use crate::partitions::{add_rectangle, enumerate_partitions, syt_count_hook, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GrassmannShape {
    /// Rank of the universal quotient.
    pub d: u32,
    /// Rank of the ambient space or bundle.
    pub r: u32,
}

impl GrassmannShape {
    pub fn new(d: u32, r: u32) -> Result<Self> {
        ensure_range!(d <= r, "Grassmannian G({d}, {r}) needs d <= r");
        Ok(Self { d, r })
    }

    /// The rectangle `ε = ((r−d)^d)`.
    pub fn rectangle(&self) -> Partition {
        Partition::rectangle(self.d as usize, self.r - self.d)
    }

    pub fn dim(&self) -> u64 {
        self.d as u64 * (self.r - self.d) as u64
    }

    /// `f^ε`. `G(0, r)` and `G(r, r)` are points of degree 1.
    pub fn degree(&self) -> BigInt {
        syt_count_hook(&self.rectangle())
    }

    /// Coefficients of the pushforward of `c_1(O(1))^k` from the Grassmann
    /// bundle: pairs `(λ, f^{λ+ε})` over partitions `λ ⊢ k − dim` with at most
    /// `d` parts. Shapes with `λ_1 > r − d` are kept; the Schur factor they
    /// multiply is responsible for vanishing.
    pub fn pushforward_coefficients(&self, k: u64) -> Result<Vec<(Partition, BigInt)>> {
        let dim = self.dim();
        ensure_range!(k >= dim, "pushforward of c_1^{k} needs k >= dim G = {dim}");
        let excess = u32::try_from(k - dim)
            .map_err(|_| crate::error::Error::OutOfRange(format!("k = {k} too large")))?;
        enumerate_partitions(excess, self.d as usize)
            .into_iter()
            .map(|lam| {
                let shifted = add_rectangle(&lam, self.d as usize, self.r - self.d)?;
                Ok((lam, syt_count_hook(&shifted)))
            })
            .collect()
    }
}

pub fn grassmann_dim(d: u32, r: u32) -> Result<u64> {
    Ok(GrassmannShape::new(d, r)?.dim())
}

pub fn grassmann_degree(d: u32, r: u32) -> Result<BigInt> {
    Ok(GrassmannShape::new(d, r)?.degree())
}
