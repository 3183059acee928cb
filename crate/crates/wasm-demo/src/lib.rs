//! Browser bindings for exploring a Nakayama algebra. Every export returns a
//! JSON string; failures come back as `{"error": "..."}` so the page never
//! has to catch exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use selfext_core::{NakayamaAlgebra, SerialModule, Shape};

fn algebra(series: &str, shape: &str) -> Result<NakayamaAlgebra, String> {
    let series: Vec<usize> = series
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{}` is not a positive integer", s.trim()))
        })
        .collect::<Result<_, _>>()?;
    let shape: Shape = shape.parse()?;
    NakayamaAlgebra::new(&series, shape).map_err(|e| e.to_string())
}

fn module(alg: &NakayamaAlgebra, vertex: usize, length: usize) -> Result<SerialModule, String> {
    alg.check(SerialModule::new(vertex, length)).map_err(|e| e.to_string())
}

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

/// Every indecomposable module with rigidity and projective dimension,
/// grouped by vertex.
#[wasm_bindgen]
pub fn module_grid(series: &str, shape: &str) -> String {
    respond(algebra(series, shape).map(|alg| {
        let rows: Vec<Value> = (0..alg.n())
            .map(|v| {
                let cells: Vec<Value> = (1..=alg.kupisch()[v])
                    .map(|k| {
                        let m = SerialModule::new(v, k);
                        json!({
                            "vertex": v,
                            "length": k,
                            "rigid": alg.is_rigid(m),
                            "projective": alg.is_projective(m),
                            "proj_dim": alg.proj_dim(m).to_string(),
                        })
                    })
                    .collect();
                json!(cells)
            })
            .collect();
        json!({
            "algebra": alg.to_string(),
            "dimension": alg.dimension(),
            "loewy_length": alg.loewy_length(),
            "global_dim": alg.global_dim().to_string(),
            "rows": rows,
        })
    }))
}

/// Self-extension dimensions `Ext^1..=depth(M, M)` and homological dimensions.
#[wasm_bindgen]
pub fn self_extensions(series: &str, shape: &str, vertex: usize, length: usize, depth: usize) -> String {
    respond(algebra(series, shape).and_then(|alg| {
        let m = module(&alg, vertex, length)?;
        let r = alg.report(m, depth.clamp(1, 60));
        Ok(json!({
            "module": m.to_string(),
            "rigid": r.rigid,
            "proj_dim": r.proj_dim.to_string(),
            "inj_dim": r.inj_dim.to_string(),
            "ext": r.ext_dims,
        }))
    }))
}

/// The syzygies `Ω^j M` until they repeat or vanish.
#[wasm_bindgen]
pub fn syzygy_orbit(series: &str, shape: &str, vertex: usize, length: usize) -> String {
    respond(algebra(series, shape).and_then(|alg| {
        let m = module(&alg, vertex, length)?;
        let (orbit, cycles) = alg.syzygy_orbit(m);
        let back_to = if cycles {
            alg.syzygy(*orbit.last().expect("orbit starts with M"))
                .map(|s| s.to_string())
        } else {
            None
        };
        Ok(json!({
            "orbit": orbit.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "cycles": cycles,
            "returns_to": back_to,
        }))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn grid_marks_the_non_rigid_interval() {
        let v = parse(module_grid("4,4", "cyclic"));
        assert_eq!(v["dimension"], 8);
        assert_eq!(v["rows"][0][1]["rigid"], false);
        assert_eq!(v["rows"][0][0]["rigid"], true);
        assert_eq!(v["rows"][0][3]["projective"], true);
    }

    #[test]
    fn extensions_and_orbits() {
        let v = parse(self_extensions("4,4", "cyclic", 0, 2, 5));
        assert_eq!(v["ext"], json!([1, 1, 1, 1, 1]));
        let v = parse(syzygy_orbit("2,3", "cyclic", 0, 1));
        assert_eq!(v["cycles"], false);
        assert_eq!(v["orbit"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn errors_are_json() {
        assert!(parse(module_grid("4,2", "cyclic"))["error"]
            .as_str()
            .unwrap()
            .contains("monotonicity"));
        assert!(parse(self_extensions("2,2", "cyclic", 0, 9, 3))["error"].is_string());
        assert!(parse(module_grid("x", "cyclic"))["error"].is_string());
    }
}
