//! Browser bindings. Every export returns a JSON string; errors come back
//! as thrown JS errors carrying the message.

use gaussdeg::{
    degree_generic, sweep, syt_count_bruteforce_capped, syt_count_hook, Error, GenericOutcome,
    Partition, SegreIntegralTable, VeroneseVariety, BRUTE_FORCE_CAP,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Keeps a single click from locking up the tab.
const MAX_AMBIENT_DIM: u32 = 100;
const MAX_N: u32 = 10;

/// Degrees, ratios and bounds for every `m` of `v_d(P^n)`.
pub fn sweep_json(n: u32, d: u32) -> Result<String, String> {
    let v = VeroneseVariety::new(n, d).map_err(|e| e.to_string())?;
    if n > MAX_N {
        return Err(format!("the demo stops at n = {MAX_N}"));
    }
    if v.ambient_dim() > MAX_AMBIENT_DIM {
        return Err(format!(
            "v_{d}(P^{n}) sits in P^{}; the demo stops at P^{MAX_AMBIENT_DIM}",
            v.ambient_dim()
        ));
    }
    let rows = sweep(&v).map_err(|e| e.to_string())?;
    Ok(json!({ "n": n, "d": d, "N": v.ambient_dim(), "rows": rows }).to_string())
}

/// Hook-length count of standard Young tableaux, plus the brute-force
/// count when the shape is small enough.
pub fn syt_json(shape: &str) -> Result<String, String> {
    let lam: Partition = shape.parse().map_err(|e: Error| e.to_string())?;
    let brute = match syt_count_bruteforce_capped(&lam, BRUTE_FORCE_CAP) {
        Ok(count) => Some(count.to_string()),
        Err(Error::SizeCap { .. }) => None,
        Err(e) => return Err(e.to_string()),
    };
    Ok(json!({
        "shape": lam,
        "weight": lam.weight(),
        "hook": syt_count_hook(&lam).to_string(),
        "brute_force": brute,
    })
    .to_string())
}

/// Degree of `X_m^*` from a pasted table of Segre-class integrals.
pub fn generic_json(table: &str, m: u32) -> Result<String, String> {
    let table = SegreIntegralTable::from_json(table).map_err(|e| e.to_string())?;
    match degree_generic(&table, m).map_err(|e| e.to_string())? {
        GenericOutcome::Degree(report) => serde_json::to_string(&report).map_err(|e| e.to_string()),
        GenericOutcome::NonPositive { total } => Err(format!(
            "total {total} is not positive: the Gauss map is not generically finite or the table is invalid"
        )),
    }
}

#[wasm_bindgen]
pub fn degree_sweep(n: u32, d: u32) -> Result<String, JsError> {
    sweep_json(n, d).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn syt_counts(shape: &str) -> Result<String, JsError> {
    syt_json(shape).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn generic_degree(table: &str, m: u32) -> Result<String, JsError> {
    generic_json(table, m).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gaussdeg::veronese_integral_table;
    use serde_json::Value;

    fn parse(text: &str) -> Value {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn sweep_of_conic_surface() {
        let out = parse(&sweep_json(2, 2).unwrap());
        assert_eq!(out["N"], 5);
        let degrees: Vec<&str> = out["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["degree"].as_str().unwrap())
            .collect();
        assert_eq!(degrees, ["9", "21", "3"]);
        assert_eq!(out["rows"][1]["ratio"], "7/18");
    }

    #[test]
    fn sweep_rejects_bad_input() {
        assert!(sweep_json(0, 2).is_err());
        assert!(sweep_json(2, 1).is_err());
        assert!(sweep_json(4, 10).unwrap_err().contains("demo stops"));
        assert!(sweep_json(11, 2).unwrap_err().contains("demo stops"));
        assert!(sweep_json(10, 2).is_ok());
    }

    #[test]
    fn syt_counts_agree() {
        let out = parse(&syt_json("3,1").unwrap());
        assert_eq!(out["hook"], "3");
        assert_eq!(out["brute_force"], "3");
        let big = parse(&syt_json("5,4,3,2,1").unwrap());
        assert_eq!(big["hook"], "292864");
        assert!(big["brute_force"].is_null());
        assert!(syt_json("1,3").is_err());
    }

    #[test]
    fn generic_matches_veronese() {
        let v = VeroneseVariety::new(1, 4).unwrap();
        let table = veronese_integral_table(&v).to_json();
        let out = parse(&generic_json(&table, 2).unwrap());
        assert_eq!(out["deg_Xm"], "12");
        let zero = r#"{"n": 1, "N": 4, "entries": [{"partition": [1], "integral": "0"}]}"#;
        assert!(generic_json(zero, 2).unwrap_err().contains("not positive"));
        assert!(generic_json("{}", 2).is_err());
    }
}
