//! CSV and JSON table emitters. Numbers are written with the shortest
//! round-trip representation, so parsing an emitted table and re-evaluating
//! reproduces the values bit for bit.

use dirac_green::GreenMatrix;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (csv|json)")),
        }
    }
}

#[derive(Serialize)]
struct Row {
    r: f64,
    r_prime: f64,
    gpp: f64,
    gpm: f64,
    gmp: f64,
    gmm: f64,
}

#[derive(Serialize)]
struct Table {
    config: BTreeMap<String, String>,
    rows: Vec<Row>,
}

pub const MATRIX_HEADER: &str = "r,r_prime,gpp,gpm,gmp,gmm";

pub fn emit_matrix_rows(
    rows: &[GreenMatrix],
    format: Format,
    config: &BTreeMap<String, String>,
    out: &mut impl std::io::Write,
) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{MATRIX_HEADER}")?;
            for g in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    g.r, g.r_prime, g.gpp, g.gpm, g.gmp, g.gmm
                )?;
            }
        }
        Format::Json => {
            let table = Table {
                config: config.clone(),
                rows: rows
                    .iter()
                    .map(|g| Row {
                        r: g.r,
                        r_prime: g.r_prime,
                        gpp: g.gpp,
                        gpm: g.gpm,
                        gmp: g.gmp,
                        gmm: g.gmm,
                    })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&table)?)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trips_bitwise() {
        let g = GreenMatrix {
            r: 0.1 + 0.2, // deliberately non-representable decimal
            r_prime: 1.0 / 3.0,
            gpp: -8.858642e-2_f64.ln().exp() * -1.0,
            gpm: f64::MIN_POSITIVE * 3.0,
            gmp: 1.0e300,
            gmm: -0.0,
        };
        let mut buf = Vec::new();
        emit_matrix_rows(&[g], Format::Csv, &BTreeMap::new(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let line = text.lines().nth(1).unwrap();
        let vals: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(vals[0].to_bits(), g.r.to_bits());
        assert_eq!(vals[1].to_bits(), g.r_prime.to_bits());
        assert_eq!(vals[2].to_bits(), g.gpp.to_bits());
        assert_eq!(vals[3].to_bits(), g.gpm.to_bits());
        assert_eq!(vals[4].to_bits(), g.gmp.to_bits());
        assert_eq!(vals[5].to_bits(), g.gmm.to_bits());
    }
}
