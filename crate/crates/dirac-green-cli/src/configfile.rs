//! Simple key=value configuration files. Lines are `key = value` (spaces
//! optional, `#` starts a comment); keys use the long flag names. Values
//! from the file override the command-line flags.

use std::collections::BTreeMap;
use std::path::Path;

pub fn load(path: &Path) -> Result<BTreeMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!(
                "config line {} is not `key = value`: {raw:?}",
                lineno + 1
            ));
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

pub fn parse_f64(map: &BTreeMap<String, String>, key: &str, slot: &mut f64) -> Result<(), String> {
    if let Some(v) = map.get(key) {
        *slot = v
            .parse()
            .map_err(|_| format!("config key {key}: not a number: {v:?}"))?;
    }
    Ok(())
}

pub fn parse_opt_f64(
    map: &BTreeMap<String, String>,
    key: &str,
    slot: &mut Option<f64>,
) -> Result<(), String> {
    if let Some(v) = map.get(key) {
        *slot = Some(
            v.parse()
                .map_err(|_| format!("config key {key}: not a number: {v:?}"))?,
        );
    }
    Ok(())
}

pub fn parse_usize(
    map: &BTreeMap<String, String>,
    key: &str,
    slot: &mut usize,
) -> Result<(), String> {
    if let Some(v) = map.get(key) {
        *slot = v
            .parse()
            .map_err(|_| format!("config key {key}: not an integer: {v:?}"))?;
    }
    Ok(())
}

pub fn parse_i32(map: &BTreeMap<String, String>, key: &str, slot: &mut i32) -> Result<(), String> {
    if let Some(v) = map.get(key) {
        *slot = v
            .parse()
            .map_err(|_| format!("config key {key}: not an integer: {v:?}"))?;
    }
    Ok(())
}
