//! Verification suites: every closed form checked against an independent
//! route over a parameter sweep. Shared by the CLI `verify` command and the
//! test suites.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::degrees::{
    bounds, boole_degree, d_lambda, degree_alternate, degree_curve_closed, degree_general_curve,
    degree_generic, degree_m_np1, degree_main, degree_surface_closed, degree_threefold_closed,
    katz_kleiman, ordinary_degree, verify_identity, GenericOutcome,
};
use crate::error::Result;
use crate::partitions::{enumerate_partitions, syt_count_bruteforce_capped, syt_count_hook, Partition};
use crate::schur::{
    curve_integral_table, schur_delta_determinant, schur_delta_veronese_closed, veronese_integral_table,
    veronese_integral_table_by_determinant, VeroneseVariety,
};

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            ..Self::default()
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn check_eq<T: PartialEq + fmt::Display>(&mut self, left: &T, right: &T, context: impl fmt::Display) {
        self.check(left == right, || format!("{context}: {left} != {right}"));
    }

    fn record_error(&mut self, context: impl fmt::Display, err: impl fmt::Display) {
        self.checks += 1;
        self.failures.push(format!("{context}: {err}"));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {}/{} checks",
            self.name,
            self.checks - self.failures.len(),
            self.checks
        )
    }
}

/// Limits for the sweeps.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub identity_max_n: u32,
    pub identity_brute_max_n: u32,
    pub syt_max_weight: u32,
    pub brute_cap: u32,
    pub schur_max_n: u32,
    pub schur_max_d: u32,
    pub sweep_n: Vec<u32>,
    pub sweep_d: Vec<u32>,
    pub lemma_max_n: u32,
    pub lemma_max_ambient: u32,
    pub curve_max_ambient: u32,
    pub curve_max_genus: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            identity_max_n: 8,
            identity_brute_max_n: 5,
            syt_max_weight: 10,
            brute_cap: crate::partitions::BRUTE_FORCE_CAP,
            schur_max_n: 4,
            schur_max_d: 5,
            sweep_n: vec![1, 2, 3],
            sweep_d: vec![2, 3, 4],
            lemma_max_n: 5,
            lemma_max_ambient: 20,
            curve_max_ambient: 8,
            curve_max_genus: 3,
        }
    }
}

pub const SUITES: [&str; 7] = ["identity", "syt", "schur", "crossform", "bounds", "lemma", "generic"];

pub fn run_suite(name: &str, config: &SuiteConfig) -> Option<SuiteResult> {
    Some(match name {
        "identity" => identity_suite(config.identity_max_n, config.identity_brute_max_n, config.brute_cap),
        "syt" => syt_suite(config.syt_max_weight, config.brute_cap),
        "schur" => schur_suite(config.schur_max_n, config.schur_max_d),
        "crossform" => crossform_suite(&config.sweep_n, &config.sweep_d),
        "bounds" => bounds_suite(&config.sweep_n, &config.sweep_d),
        "lemma" => lemma_suite(config.lemma_max_n, config.lemma_max_ambient),
        "generic" => generic_suite(
            &config.sweep_n,
            &config.sweep_d,
            config.curve_max_ambient,
            config.curve_max_genus,
        ),
        _ => return None,
    })
}

/// The `m = n` identity for `1 ≤ n ≤ max_n`; for `n ≤ brute_max_n` the sum is
/// recomputed with brute-force tableau counts.
pub fn identity_suite(max_n: u32, brute_max_n: u32, cap: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("identity");
    for n in 1..=max_n {
        match verify_identity(n) {
            Ok(check) => {
                suite.check(check.equal, || format!("n = {n}: lhs {} != rhs {}", check.lhs, check.rhs));
                if n <= brute_max_n {
                    match brute_identity_lhs(n, cap) {
                        Ok(lhs) => suite.check_eq(&lhs, &check.rhs, format!("n = {n} (brute force)")),
                        Err(e) => suite.record_error(format!("n = {n}"), e),
                    }
                }
            }
            Err(e) => suite.record_error(format!("n = {n}"), e),
        }
    }
    suite
}

fn brute_identity_lhs(n: u32, cap: u32) -> Result<BigInt> {
    let mut lhs = BigInt::zero();
    for lam in enumerate_partitions(n, n as usize) {
        let f = syt_count_bruteforce_capped(&lam, cap)?;
        let mut window = BigInt::from(1);
        for (idx, &p) in lam.padded(n as usize)?.iter().enumerate() {
            let top = n as u64 + idx as u64 + 1;
            for k in top - p as u64 + 1..=top {
                window *= k;
            }
        }
        lhs += &f * &f * window;
    }
    Ok(lhs)
}

/// Hook-length counts against brute-force placement, plus the
/// `Σ (f^λ)² = k!` and conjugation checks.
pub fn syt_suite(max_weight: u32, cap: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("syt");
    for k in 0..=max_weight {
        let mut square_sum = BigInt::zero();
        for lam in enumerate_partitions(k, k as usize) {
            let hook = syt_count_hook(&lam);
            match syt_count_bruteforce_capped(&lam, cap) {
                Ok(brute) => suite.check_eq(&hook, &brute, format!("f^{lam}")),
                Err(e) => suite.record_error(format!("f^{lam}"), e),
            }
            suite.check_eq(&hook, &syt_count_hook(&lam.conjugate()), format!("f^{lam} vs conjugate"));
            square_sum += &hook * &hook;
        }
        suite.check_eq(&square_sum, &crate::arith::factorial(k as u64), format!("Σ (f^λ)^2 at k = {k}"));
    }
    suite
}

/// Closed Schur form against the Jacobi–Trudi determinant.
pub fn schur_suite(max_n: u32, max_d: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("schur");
    for n in 1..=max_n {
        for d in 2..=max_d {
            let v = match VeroneseVariety::new(n, d) {
                Ok(v) => v,
                Err(e) => {
                    suite.record_error(format!("v_{d}(P^{n})"), e);
                    continue;
                }
            };
            let s = v.segre_sequence();
            for weight in 0..=n {
                for lam in enumerate_partitions(weight, n as usize) {
                    for length in lam.len().max(1)..=n as usize {
                        let context = format!("Δ_{lam} on v_{d}(P^{n}), length {length}");
                        match (
                            schur_delta_veronese_closed(&v, &lam, length),
                            schur_delta_determinant(&s, &lam, length),
                        ) {
                            (Ok(closed), Ok(det)) => suite.check_eq(&closed, &det, context),
                            (Err(e), _) | (_, Err(e)) => suite.record_error(context, e),
                        }
                    }
                }
            }
        }
    }
    suite
}

/// Every available formula agrees with the main one at each `(n, d, m)`.
pub fn crossform_suite(ns: &[u32], ds: &[u32]) -> SuiteResult {
    let mut suite = SuiteResult::new("crossform");
    for &n in ns {
        for &d in ds {
            let Ok(v) = VeroneseVariety::new(n, d) else {
                suite.record_error(format!("v_{d}(P^{n})"), "invalid variety");
                continue;
            };
            let table = veronese_integral_table(&v);
            for m in n..v.ambient_dim() {
                let tag = format!("v_{d}(P^{n}), m = {m}");
                let main = match degree_main(&v, m) {
                    Ok(r) => r.degree,
                    Err(e) => {
                        suite.record_error(&tag, e);
                        continue;
                    }
                };
                let mut others: Vec<(&str, Result<BigInt>)> = vec![
                    ("alternate", degree_alternate(&v, m).map(|r| r.degree)),
                    (
                        "generic",
                        degree_generic(&table, m).map(|o| match o {
                            GenericOutcome::Degree(r) => r.degree,
                            GenericOutcome::NonPositive { total } => total,
                        }),
                    ),
                ];
                match n {
                    1 => others.push(("curve_closed", degree_curve_closed(d, m).map(|r| r.degree))),
                    2 => others.push(("surface_closed", degree_surface_closed(d, m).map(|r| r.degree))),
                    3 => others.push(("threefold_closed", degree_threefold_closed(d, m).map(|r| r.degree))),
                    _ => {}
                }
                if m == n + 1 {
                    others.push(("m_eq_n_plus_1", degree_m_np1(&v).map(|r| r.degree)));
                }
                if m + 1 == v.ambient_dim() {
                    others.push(("boole", boole_degree(n, d)));
                    others.push(("katz_kleiman", katz_kleiman(&table)));
                }
                if m == n {
                    others.push(("ordinary", Ok(ordinary_degree(n, d))));
                }
                for (name, value) in others {
                    match value {
                        Ok(value) => suite.check_eq(&value, &main, format!("{tag}: {name} vs main")),
                        Err(e) => suite.record_error(format!("{tag}: {name}"), e),
                    }
                }
            }
        }
    }
    suite
}

/// Bound sandwich; for curves all three values coincide.
pub fn bounds_suite(ns: &[u32], ds: &[u32]) -> SuiteResult {
    let mut suite = SuiteResult::new("bounds");
    for &n in ns {
        for &d in ds {
            let Ok(v) = VeroneseVariety::new(n, d) else {
                suite.record_error(format!("v_{d}(P^{n})"), "invalid variety");
                continue;
            };
            for m in n..v.ambient_dim() {
                let tag = format!("v_{d}(P^{n}), m = {m}");
                match bounds(&v, m) {
                    Ok(b) => {
                        suite.check(b.lower <= b.ratio && b.ratio <= b.upper, || {
                            format!("{tag}: {} <= {} <= {} fails", b.lower, b.ratio, b.upper)
                        });
                        if n == 1 {
                            suite.check(b.lower == b.ratio && b.ratio == b.upper, || {
                                format!("{tag}: curve bounds {} {} {} differ", b.lower, b.ratio, b.upper)
                            });
                        }
                    }
                    Err(e) => suite.record_error(tag, e),
                }
            }
        }
    }
    suite
}

/// `D((1^n)) ≤ D(λ) ≤ D((n))` for `λ ⊢ n`, `2n ≤ N ≤ max_ambient`.
pub fn lemma_suite(max_n: u32, max_ambient: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("lemma");
    for n in 1..=max_n {
        let column = Partition::rectangle(n as usize, 1);
        let row = Partition::rectangle(1, n);
        for big_n in 2 * n..=max_ambient {
            for m in n..big_n {
                let tag = format!("n = {n}, N = {big_n}, m = {m}");
                let (Ok(low), Ok(high)) = (d_lambda(&column, n, big_n, m), d_lambda(&row, n, big_n, m)) else {
                    suite.record_error(&tag, "endpoint evaluation failed");
                    continue;
                };
                for lam in enumerate_partitions(n, n as usize) {
                    match d_lambda(&lam, n, big_n, m) {
                        Ok(value) => suite.check(low <= value && value <= high, || {
                            format!("{tag}: D{lam} = {value} outside [{low}, {high}]")
                        }),
                        Err(e) => suite.record_error(&tag, e),
                    }
                }
            }
        }
    }
    suite
}

/// General-variety mode reproduces the Veronese formulas (from closed-form
/// and determinant tables) and the general curve formula.
pub fn generic_suite(ns: &[u32], ds: &[u32], curve_max_ambient: u32, curve_max_genus: u32) -> SuiteResult {
    let mut suite = SuiteResult::new("generic");
    let degree_of = |o: GenericOutcome| match o {
        GenericOutcome::Degree(r) => r.degree,
        GenericOutcome::NonPositive { total } => total,
    };
    for &n in ns {
        for &d in ds {
            let Ok(v) = VeroneseVariety::new(n, d) else {
                suite.record_error(format!("v_{d}(P^{n})"), "invalid variety");
                continue;
            };
            let closed = veronese_integral_table(&v);
            let det = veronese_integral_table_by_determinant(&v);
            for m in n..v.ambient_dim() {
                let tag = format!("v_{d}(P^{n}), m = {m}");
                let main = degree_main(&v, m).map(|r| r.degree);
                for (name, table) in [("closed table", &closed), ("determinant table", &det)] {
                    match (&main, degree_generic(table, m).map(degree_of)) {
                        (Ok(main), Ok(generic)) => suite.check_eq(&generic, main, format!("{tag}: {name}")),
                        (Err(e), _) => suite.record_error(&tag, e),
                        (_, Err(e)) => suite.record_error(&tag, e),
                    }
                }
            }
        }
    }
    for big_n in 2..=curve_max_ambient {
        for genus in 0..=curve_max_genus {
            for degree in 1..=curve_max_ambient {
                if 2 * genus + 2 * degree <= 2 {
                    continue;
                }
                let tag = format!("curve N = {big_n}, d = {degree}, g = {genus}");
                let table = match curve_integral_table(big_n, degree, genus) {
                    Ok(t) => t,
                    Err(e) => {
                        suite.record_error(&tag, e);
                        continue;
                    }
                };
                for m in 1..big_n {
                    match (
                        degree_generic(&table, m).map(degree_of),
                        degree_general_curve(big_n, degree, genus, m).map(|r| r.degree),
                    ) {
                        (Ok(a), Ok(b)) => suite.check_eq(&a, &b, format!("{tag}, m = {m}")),
                        (Err(e), _) | (_, Err(e)) => suite.record_error(format!("{tag}, m = {m}"), e),
                    }
                }
            }
        }
    }
    suite
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(identity_suite(4, 3, 12).passed());
        assert!(syt_suite(6, 12).passed());
        assert!(schur_suite(2, 3).passed());
        assert!(crossform_suite(&[1, 2], &[2, 3]).passed());
        assert!(bounds_suite(&[1, 2], &[2]).passed());
        assert!(lemma_suite(3, 8).passed());
        assert!(generic_suite(&[1], &[2, 3], 4, 1).passed());
    }

    #[test]
    fn cap_violation_is_a_failure() {
        let suite = syt_suite(5, 4);
        assert!(!suite.passed());
        assert!(suite.failures[0].contains("cap"));
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteConfig::default()).is_none());
        for name in SUITES {
            assert!(SUITES.contains(&name));
        }
    }
}
