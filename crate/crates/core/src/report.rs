//! Result records and their JSON/CSV forms. Big integers serialize as
//! decimal strings and rationals as `"p/q"` (or `"p"` when integral).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Main,
    Alternate,
    CurveClosed,
    SurfaceClosed,
    ThreefoldClosed,
    Boole,
    Generic,
    #[serde(rename = "m_eq_n_plus_1")]
    MEqNPlus1,
    GeneralCurve,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::Main,
        Method::Alternate,
        Method::CurveClosed,
        Method::SurfaceClosed,
        Method::ThreefoldClosed,
        Method::Boole,
        Method::Generic,
        Method::MEqNPlus1,
        Method::GeneralCurve,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Main => "main",
            Method::Alternate => "alternate",
            Method::CurveClosed => "curve_closed",
            Method::SurfaceClosed => "surface_closed",
            Method::ThreefoldClosed => "threefold_closed",
            Method::Boole => "boole",
            Method::Generic => "generic",
            Method::MEqNPlus1 => "m_eq_n_plus_1",
            Method::GeneralCurve => "general_curve",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// Degree and dimension of the variety of `m`-dimensional tangent spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub n: u32,
    /// Veronese degree; `None` for general-variety input.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(rename = "N")]
    pub ambient_dim: u32,
    pub m: u32,
    #[serde(rename = "dim_Xm")]
    pub dim: u64,
    #[serde(rename = "deg_Xm", serialize_with = "decimal")]
    pub degree: BigInt,
    pub method: Method,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub notes: String,
}

/// Degree bounds relative to `C(n + dim G, n)·deg G·deg X_n^*`,
/// `G = G(m−n, N−n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: u32,
    pub d: u32,
    #[serde(rename = "N")]
    pub ambient_dim: u32,
    pub m: u32,
    #[serde(serialize_with = "decimal")]
    pub degree: BigInt,
    #[serde(serialize_with = "decimal")]
    pub product: BigInt,
    #[serde(serialize_with = "fraction")]
    pub ratio: BigRational,
    #[serde(serialize_with = "fraction")]
    pub lower: BigRational,
    #[serde(serialize_with = "fraction")]
    pub upper: BigRational,
    /// `((N−m)/(N−n))^n`.
    #[serde(serialize_with = "fraction")]
    pub conjecture_upper: BigRational,
    /// `conjecture_upper · product`: the degree one would get if the twisted
    /// normal bundle split as equal line bundles. Not always an integer.
    #[serde(serialize_with = "fraction")]
    pub virtual_degree: BigRational,
    pub within_bounds: bool,
    pub within_conjecture: bool,
}

/// One row of an `m`-sweep for a fixed Veronese variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub m: u32,
    #[serde(rename = "dim_Xm")]
    pub dim: u64,
    #[serde(rename = "deg_Xm", serialize_with = "decimal")]
    pub degree: BigInt,
    #[serde(serialize_with = "fraction")]
    pub ratio: BigRational,
    #[serde(serialize_with = "fraction")]
    pub lower: BigRational,
    #[serde(serialize_with = "fraction")]
    pub upper: BigRational,
    #[serde(serialize_with = "fraction")]
    pub conjecture_upper: BigRational,
    pub within_conjecture: bool,
}

impl From<&BoundsReport> for TableRow {
    fn from(b: &BoundsReport) -> Self {
        Self {
            m: b.m,
            dim: crate::degrees::dim_formula(b.n, b.ambient_dim, b.m),
            degree: b.degree.clone(),
            ratio: b.ratio.clone(),
            lower: b.lower.clone(),
            upper: b.upper.clone(),
            conjecture_upper: b.conjecture_upper.clone(),
            within_conjecture: b.within_conjecture,
        }
    }
}

/// Conjecture scan over a range of varieties; violations are data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub rows: Vec<BoundsReport>,
    pub violations: Vec<BoundsReport>,
}

impl ScanReport {
    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }
}

pub fn decimal<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

pub fn fraction<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
            assert_eq!(serde_json::to_value(m).unwrap(), m.as_str());
        }
        assert!("fast".parse::<Method>().is_err());
    }

    #[test]
    fn report_json_shape() {
        let report = DegreeReport {
            n: 1,
            d: Some(4),
            ambient_dim: 4,
            m: 2,
            dim: 3,
            degree: BigInt::from(12),
            method: Method::Main,
            notes: String::new(),
        };
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"n":1,"d":4,"N":4,"m":2,"dim_Xm":3,"deg_Xm":"12","method":"main"}"#
        );
    }
}
