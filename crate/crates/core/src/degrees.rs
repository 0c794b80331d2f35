//! Degrees and dimensions of `X_m^*`, the image of the `m`-th Gauss map.
//!
//! Every formula is evaluated in reduced rationals and must land on a
//! positive integer; anything else is reported as an internal error.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorial, factorial_ratio, int_rat, into_integer, pow, rat, require_positive};
use crate::error::{ensure_range, Error, Result};
use crate::grassmann::GrassmannShape;
use crate::partitions::{add_rectangle, enumerate_partitions, syt_count_hook, Partition};
use crate::report::{BoundsReport, DegreeReport, Method, ScanReport};
use crate::schur::{SegreIntegralTable, VeroneseVariety};

/// `n + (N−m)(m−n)` without range checks.
pub fn dim_formula(n: u32, ambient_dim: u32, m: u32) -> u64 {
    n as u64 + (ambient_dim - m) as u64 * (m - n) as u64
}

fn check_index(n: u32, ambient_dim: u32, m: u32) -> Result<()> {
    ensure_range!(n >= 1, "n must be positive");
    ensure_range!(
        n <= m && m < ambient_dim,
        "m = {m} must satisfy n = {n} <= m <= N - 1 = {}",
        ambient_dim as i64 - 1
    );
    Ok(())
}

pub fn dim_xm(n: u32, ambient_dim: u32, m: u32) -> Result<u64> {
    check_index(n, ambient_dim, m)?;
    Ok(dim_formula(n, ambient_dim, m))
}

/// Degree of the ordinary Gauss image of `v_d(P^n)`: `(n+1)^n (d−1)^n`.
pub fn ordinary_degree(n: u32, d: u32) -> BigInt {
    pow(n as i64 + 1, n) * pow(d as i64 - 1, n)
}

/// Degree of the discriminant hypersurface: `(n+1)(d−1)^n`.
pub fn boole_degree(n: u32, d: u32) -> Result<BigInt> {
    ensure_range!(n >= 1, "n must be positive");
    ensure_range!(d >= 2, "d must be at least 2");
    Ok((n as i64 + 1) * pow(d as i64 - 1, n))
}

fn veronese_report(v: &VeroneseVariety, m: u32, degree: BigInt, method: Method) -> DegreeReport {
    DegreeReport {
        n: v.n,
        d: Some(v.d),
        ambient_dim: v.ambient_dim(),
        m,
        dim: dim_formula(v.n, v.ambient_dim(), m),
        degree,
        method,
        notes: String::new(),
    }
}

/// `Π_{i=1}^{len} (n+i)!/(n+i−λ_i)!` over the zero-padded `λ`.
fn factorial_window(n: u32, parts: &[u32]) -> BigInt {
    parts.iter().enumerate().fold(BigInt::one(), |acc, (idx, &p)| {
        let top = n as u64 + idx as u64 + 1;
        acc * factorial_ratio(top, top - p as u64)
    })
}

/// `Σ_{λ ⊢ weight, ℓ(λ) ≤ height} f^λ f^{λ+(width^height)} Π_{i≤height} (n+i)!/(n+i−λ_i)!`
fn weighted_shape_sum(n: u32, weight: u32, height: usize, width: u32) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for lam in enumerate_partitions(weight, height) {
        let shifted = add_rectangle(&lam, height, width)?;
        let window = factorial_window(n, &lam.padded(height)?);
        total += syt_count_hook(&lam) * syt_count_hook(&shifted) * window;
    }
    Ok(total)
}

/// Degree via the sum over `λ ⊢ n` with `ε = ((m−n)^{N−m})`.
pub fn degree_main(v: &VeroneseVariety, m: u32) -> Result<DegreeReport> {
    let (n, big_n) = (v.n, v.ambient_dim());
    check_index(n, big_n, m)?;
    let sum = weighted_shape_sum(n, n, (big_n - m) as usize, m - n)?;
    let prefactor = rat(
        ordinary_degree(n, v.d),
        factorial(n as u64) * pow(n as i64 + 1, n),
    );
    let degree = into_integer(prefactor * int_rat(sum), "main degree formula")?;
    Ok(veronese_report(v, m, require_positive(degree)?, Method::Main))
}

/// Degree via the alternating sum over `k` with `ε' = ((N−m)^{m−n})`.
///
/// At `m = n` the inner shapes have zero rows, so only `k = n` (the empty
/// shape) contributes.
pub fn degree_alternate(v: &VeroneseVariety, m: u32) -> Result<DegreeReport> {
    let (n, big_n) = (v.n, v.ambient_dim());
    check_index(n, big_n, m)?;
    let big_m = dim_formula(n, big_n, m) as i64;
    let mut total = BigRational::zero();
    for k in 0..=n {
        let inner = weighted_shape_sum(n, n - k, (m - n) as usize, big_n - m)?;
        if inner.is_zero() {
            continue;
        }
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        let coeff = rat(
            sign * pow(n as i64 + 1, k) * binomial(big_m, k as i64),
            factorial((n - k) as u64),
        );
        total += coeff * int_rat(inner);
    }
    let prefactor = rat(ordinary_degree(n, v.d), pow(n as i64 + 1, n));
    let degree = into_integer(prefactor * total, "alternate degree formula")?;
    Ok(veronese_report(v, m, require_positive(degree)?, Method::Alternate))
}

/// Single-sum formula for `m = n + 1`.
pub fn degree_m_np1(v: &VeroneseVariety) -> Result<DegreeReport> {
    let (n, big_n) = (v.n, v.ambient_dim());
    let m = n + 1;
    ensure_range!(m < big_n, "m = n + 1 = {m} exceeds N - 1 = {}", big_n - 1);
    let mut sum = BigInt::zero();
    for k in 0..=n {
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        sum += sign
            * pow(n as i64 + 1, k)
            * binomial(big_n as i64 - 1, k as i64)
            * binomial(n as i64 + 1, (n - k) as i64);
    }
    let prefactor = rat(ordinary_degree(n, v.d), pow(n as i64 + 1, n));
    let degree = into_integer(prefactor * int_rat(sum), "m = n + 1 formula")?;
    Ok(veronese_report(v, m, require_positive(degree)?, Method::MEqNPlus1))
}

/// Closed form for the rational normal curve `v_d(P^1) ⊆ P^d`.
pub fn degree_curve_closed(d: u32, m: u32) -> Result<DegreeReport> {
    let v = VeroneseVariety::new(1, d)?;
    check_index(1, d, m)?;
    // G(m−1, d−1) and G(d−m, d−1) are dual; compute both.
    let g = GrassmannShape::new(m - 1, d - 1)?;
    let dual = GrassmannShape::new(d - m, d - 1)?;
    let (deg_g, deg_dual) = (g.degree(), dual.degree());
    if deg_g != deg_dual {
        return Err(Error::Inconsistent(format!(
            "deg G({}, {}) = {deg_g} but deg G({}, {}) = {deg_dual}",
            m - 1,
            d - 1,
            d - m,
            d - 1
        )));
    }
    let first_gauss = BigInt::from(2 * (d as i64 - 1));
    let value = rat(d - m, d - 1) * int_rat(1 + dual.dim()) * int_rat(deg_g * first_gauss);
    let degree = into_integer(value, "rational normal curve formula")?;
    Ok(veronese_report(&v, m, require_positive(degree)?, Method::CurveClosed))
}

/// Smooth non-degenerate curve of degree `d` and genus `g` in `P^N`.
pub fn degree_general_curve(ambient_dim: u32, d: u32, g: u32, m: u32) -> Result<DegreeReport> {
    ensure_range!(ambient_dim >= 2, "curve must span P^N with N >= 2");
    ensure_range!(d >= 1, "curve degree must be positive");
    check_index(1, ambient_dim, m)?;
    let first_gauss = 2 * g as i64 - 2 + 2 * d as i64;
    ensure_range!(first_gauss > 0, "2g - 2 + 2d must be positive");
    let grass = GrassmannShape::new(ambient_dim - m, ambient_dim - 1)?;
    let value = rat(ambient_dim - m, ambient_dim - 1)
        * int_rat(1 + grass.dim())
        * int_rat(grass.degree() * first_gauss);
    let degree = into_integer(value, "general curve formula")?;
    Ok(DegreeReport {
        n: 1,
        d: Some(d),
        ambient_dim,
        m,
        dim: dim_formula(1, ambient_dim, m),
        degree: require_positive(degree)?,
        method: Method::GeneralCurve,
        notes: format!("genus {g}"),
    })
}

/// `C(n + dim G, n)·deg G·deg X_n^*` for `G = G(m−n, N−n)`.
fn grassmann_reference(n: u32, d: u32, ambient_dim: u32, m: u32) -> Result<BigInt> {
    let g = GrassmannShape::new(m - n, ambient_dim - n)?;
    Ok(binomial(n as i64 + g.dim() as i64, n as i64) * g.degree() * ordinary_degree(n, d))
}

/// Closed form for the Veronese surface, `e = N − m`.
pub fn degree_surface_closed(d: u32, m: u32) -> Result<DegreeReport> {
    let v = VeroneseVariety::new(2, d)?;
    let big_n = v.ambient_dim() as i64;
    check_index(2, v.ambient_dim(), m)?;
    let e = big_n - m as i64;
    let factor = rat(
        e * (3 * e * big_n - big_n - 5 * e - 1),
        3 * (big_n - 1) * (big_n - 2) * (big_n - 3),
    );
    let reference = grassmann_reference(2, d, v.ambient_dim(), m)?;
    let degree = into_integer(factor * int_rat(reference), "surface formula")?;
    Ok(veronese_report(&v, m, require_positive(degree)?, Method::SurfaceClosed))
}

/// Closed form for the Veronese threefold, `e = N − m`.
pub fn degree_threefold_closed(d: u32, m: u32) -> Result<DegreeReport> {
    let v = VeroneseVariety::new(3, d)?;
    let big_n = BigInt::from(v.ambient_dim());
    check_index(3, v.ambient_dim(), m)?;
    let e = BigInt::from(v.ambient_dim() as i64 - m as i64);
    let e2 = &e * &e;
    let numerator = &e
        * ((8 * &e2 - 6 * &e + 1) * &big_n * &big_n
            + (-42 * &e2 + 9 * &e + 6) * &big_n
            + 5 * (8 * &e2 + 3 * &e + 1));
    let denominator = (1..=5).fold(BigInt::from(8), |acc, k| acc * (&big_n - k));
    let reference = grassmann_reference(3, d, v.ambient_dim(), m)?;
    let degree = into_integer(rat(numerator, denominator) * int_rat(reference), "threefold formula")?;
    Ok(veronese_report(&v, m, require_positive(degree)?, Method::ThreefoldClosed))
}

/// Degree of the dual variety from an integral table: the entry at `(n)`.
pub fn katz_kleiman(table: &SegreIntegralTable) -> Result<BigInt> {
    Ok(table.get(&Partition::new(vec![table.n()])?)?.clone())
}

/// Outcome of the general-variety formula. A non-positive total means the
/// Gauss map is not generically finite (or the table is not geometric); it is
/// never a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenericOutcome {
    Degree(DegreeReport),
    NonPositive { total: BigInt },
}

/// `Σ_{λ ⊢ n, ℓ(λ) ≤ N−m} f^{λ+ε} ∫ Δ_λ` with `ε = ((m−n)^{N−m})`.
pub fn degree_generic(table: &SegreIntegralTable, m: u32) -> Result<GenericOutcome> {
    let (n, big_n) = (table.n(), table.ambient_dim());
    check_index(n, big_n, m)?;
    let grass = GrassmannShape::new(big_n - m, big_n - n)?;
    let mut total = BigInt::zero();
    for (lam, coeff) in grass.pushforward_coefficients(grass.dim() + n as u64)? {
        total += coeff * table.get(&lam)?;
    }
    if !total.is_positive() {
        return Ok(GenericOutcome::NonPositive { total });
    }
    Ok(GenericOutcome::Degree(DegreeReport {
        n,
        d: None,
        ambient_dim: big_n,
        m,
        dim: dim_formula(n, big_n, m),
        degree: total,
        method: Method::Generic,
        notes: "positive total certifies generic finiteness".into(),
    }))
}

/// Degree of `v_d(P^n)` at `m` by the named route. `boole` needs `m = N−1`,
/// `m_eq_n_plus_1` needs `m = n+1`, `curve_closed` and `general_curve` need
/// `n = 1` (the latter as the genus-0 curve of degree `d` in `P^d`).
pub fn degree_by_method(v: &VeroneseVariety, m: u32, method: Method) -> Result<DegreeReport> {
    let (n, big_n) = (v.n, v.ambient_dim());
    check_index(n, big_n, m)?;
    match method {
        Method::Main => degree_main(v, m),
        Method::Alternate => degree_alternate(v, m),
        Method::MEqNPlus1 => {
            ensure_range!(m == n + 1, "method m_eq_n_plus_1 needs m = n + 1 = {}", n + 1);
            degree_m_np1(v)
        }
        Method::CurveClosed => {
            ensure_range!(n == 1, "method curve_closed needs n = 1");
            degree_curve_closed(v.d, m)
        }
        Method::GeneralCurve => {
            ensure_range!(n == 1, "method general_curve needs n = 1");
            degree_general_curve(big_n, v.d, 0, m)
        }
        Method::SurfaceClosed => {
            ensure_range!(n == 2, "method surface_closed needs n = 2");
            degree_surface_closed(v.d, m)
        }
        Method::ThreefoldClosed => {
            ensure_range!(n == 3, "method threefold_closed needs n = 3");
            degree_threefold_closed(v.d, m)
        }
        Method::Boole => {
            ensure_range!(m + 1 == big_n, "method boole needs m = N - 1 = {}", big_n - 1);
            Ok(veronese_report(v, m, boole_degree(n, v.d)?, Method::Boole))
        }
        Method::Generic => match degree_generic(&crate::schur::veronese_integral_table(v), m)? {
            GenericOutcome::Degree(mut report) => {
                report.d = Some(v.d);
                Ok(report)
            }
            GenericOutcome::NonPositive { total } => Err(Error::NonPositive(total)),
        },
    }
}

/// `D(λ) = Π_{i=1}^{n} Π_{l=1}^{λ_i} (N−m+l−i)/(N−n+l−i)`.
///
/// Requires `N − n ≥ ℓ(λ)` so no denominator vanishes. A numerator factor of
/// zero appears exactly when `λ` has more than `N − m` rows.
pub fn d_lambda(lam: &Partition, n: u32, ambient_dim: u32, m: u32) -> Result<BigRational> {
    ensure_range!(m >= n && m < ambient_dim, "need n <= m <= N - 1");
    ensure_range!(
        lam.len() as u32 <= ambient_dim - n,
        "D(λ) needs at most N - n = {} rows",
        ambient_dim - n
    );
    let (free, fixed) = ((ambient_dim - m) as i64, (ambient_dim - n) as i64);
    let mut value = BigRational::one();
    for (idx, &p) in lam.parts().iter().enumerate() {
        let i = idx as i64 + 1;
        for l in 1..=p as i64 {
            value *= rat(free + l - i, fixed + l - i);
        }
    }
    Ok(value)
}

/// Sum for the `m = n` identity: `Σ_{λ ⊢ n} (f^λ)² Π_{i≤n} (n+i)!/(n+i−λ_i)!`
/// against `(n+1)^n n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub n: u32,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub equal: bool,
}

pub fn verify_identity(n: u32) -> Result<IdentityCheck> {
    ensure_range!(n >= 1, "identity needs n >= 1");
    let lhs = weighted_shape_sum(n, n, n as usize, 0)?;
    let rhs = pow(n as i64 + 1, n) * factorial(n as u64);
    Ok(IdentityCheck {
        n,
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Degree at `m` together with the bound sandwich and the conjectured bound.
pub fn bounds(v: &VeroneseVariety, m: u32) -> Result<BoundsReport> {
    let (n, big_n) = (v.n, v.ambient_dim());
    let degree = degree_main(v, m)?.degree;
    let product = grassmann_reference(n, v.d, big_n, m)?;
    let ratio = BigRational::new(degree.clone(), product.clone());

    let (n_i, big_n_i, m_i) = (n as i64, big_n as i64, m as i64);
    let lower = BigRational::new(
        binomial(big_n_i - m_i, n_i),
        binomial(big_n_i - n_i, n_i),
    );
    let upper = BigRational::new(
        binomial(big_n_i - m_i + n_i - 1, n_i),
        binomial(big_n_i - 1, n_i),
    );
    let conjecture_upper = num_traits::pow(rat(big_n_i - m_i, big_n_i - n_i), n as usize);
    let virtual_degree = &conjecture_upper * int_rat(product.clone());

    let within_bounds = lower <= ratio && ratio <= upper;
    if !within_bounds {
        return Err(Error::Inconsistent(format!(
            "ratio {ratio} outside [{lower}, {upper}] for v_{}(P^{n}), m = {m}",
            v.d
        )));
    }
    let within_conjecture = ratio <= conjecture_upper;
    Ok(BoundsReport {
        n,
        d: v.d,
        ambient_dim: big_n,
        m,
        degree,
        product,
        ratio,
        lower,
        upper,
        conjecture_upper,
        virtual_degree,
        within_bounds,
        within_conjecture,
    })
}

/// Bounds for every `m = n, …, N−1`.
pub fn sweep(v: &VeroneseVariety) -> Result<Vec<BoundsReport>> {
    (v.n..v.ambient_dim()).map(|m| bounds(v, m)).collect()
}

/// Evaluates the conjectured bound for every `(n, d, m)` in range.
pub fn conjecture_scan(n_range: RangeInclusive<u32>, d_range: RangeInclusive<u32>) -> Result<ScanReport> {
    ensure_range!(!n_range.is_empty(), "empty n range");
    ensure_range!(!d_range.is_empty(), "empty d range");
    let mut rows = Vec::new();
    for n in n_range {
        for d in d_range.clone() {
            rows.extend(sweep(&VeroneseVariety::new(n, d)?)?);
        }
    }
    let violations = rows.iter().filter(|r| !r.within_conjecture).cloned().collect();
    Ok(ScanReport { rows, violations })
}
