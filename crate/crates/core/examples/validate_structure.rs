//! Read a structure from JSON and report which of its components are
//! well formed.

use qsep::nqm::{validate_structure, StructureDoc, MATRIX_TOL};

const QUBIT: &str = r#"{
  "systems": {"species": [{"name": "electron", "kind": "m"}], "ambient": {"electron": 1}},
  "spaces": [{
    "dimension": 2,
    "observables": [[[[0, 0], [1, 0]], [[1, 0], [0, 0]]], [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]],
    "unitaries": [[[[1, 0], [0, 0]], [[0, 0], [2, 0]]]]
  }],
  "borelians": [[{"lo": 0, "hi": 1}]]
}"#;

fn main() -> qsep::Result<()> {
    let doc: StructureDoc = serde_json::from_str(QUBIT).expect("well-formed JSON");
    let report = validate_structure(&doc.build()?, MATRIX_TOL);
    println!("ok = {}", report.ok);
    for f in &report.failures {
        println!("clause {}: {}", f.clause, f.detail);
    }
    Ok(())
}
