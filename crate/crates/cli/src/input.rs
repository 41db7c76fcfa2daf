//! Reading complexes, tables and presentations from files or stdin.

use std::fs;
use std::io::Read;

use serde_json::Value;
use zz_core::bicomplex::{json, Bicomplex};
use zz_core::cdga::{preset, CdgaPresentation};
use zz_core::decomposition::table_from_json;
use zz_core::bicomplex::MultiplicityTable;

use crate::Failure;

/// Read a path, or stdin for `None` and `-`.
pub fn read_source(path: Option<&str>) -> Result<(String, String), Failure> {
    match path {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::input(format!("stdin: {e}")))?;
            Ok(("<stdin>".into(), s))
        }
        Some(p) => fs::read_to_string(p).map(|s| (p.to_string(), s)).map_err(|e| Failure::input(format!("{p}: {e}"))),
    }
}

pub fn load_bicomplex(path: Option<&str>) -> Result<Bicomplex, Failure> {
    let (name, text) = read_source(path)?;
    json::from_json_str(&text).map_err(|e| Failure::from_core(e).context(&name))
}

pub fn load_table(path: Option<&str>) -> Result<MultiplicityTable, Failure> {
    let (name, text) = read_source(path)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{name}: parse error at line {}, column {}: {e}", e.line(), e.column())))?;
    table_from_json(&v).map_err(|e| Failure::from_core(e).context(&name))
}

/// A presentation given by `--preset NAME` or by a JSON file (stdin when neither is given).
pub fn load_presentation(preset_name: Option<&str>, path: Option<&str>) -> Result<CdgaPresentation, Failure> {
    match (preset_name, path) {
        (Some(_), Some(_)) => Err(Failure::input("give either --preset or an input file, not both")),
        (Some(n), None) => preset(n).map_err(Failure::from_core),
        (None, p) => {
            let (name, text) = read_source(p)?;
            CdgaPresentation::from_json_str(&text).map_err(|e| Failure::from_core(e).context(&name))
        }
    }
}

/// A preset name if it is one, otherwise a path.
pub fn load_presentation_ref(name: &str) -> Result<CdgaPresentation, Failure> {
    match preset(name) {
        Ok(p) => Ok(p),
        Err(_) => load_presentation(None, Some(name)),
    }
}
