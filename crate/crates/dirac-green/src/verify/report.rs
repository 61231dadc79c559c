use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// One named, tolerance-bearing verification outcome. `pass` is always
/// `measured <= tolerance`; the configuration echo carries every parameter
/// needed to reproduce the run bit-for-bit on the same build.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub configuration: BTreeMap<String, String>,
    pub measured: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub notes: String,
}

impl VerificationReport {
    pub fn new(
        check_id: impl Into<String>,
        configuration: ConfigEcho,
        measured: f64,
        tolerance: f64,
        notes: impl Into<String>,
    ) -> Self {
        let pass = measured <= tolerance;
        Self {
            check_id: check_id.into(),
            configuration: configuration.0,
            measured,
            tolerance,
            pass,
            notes: notes.into(),
        }
    }

    /// Informational report: recorded, never failing (infinite tolerance).
    pub fn informational(
        check_id: impl Into<String>,
        configuration: ConfigEcho,
        measured: f64,
        notes: impl Into<String>,
    ) -> Self {
        Self {
            check_id: check_id.into(),
            configuration: configuration.0,
            measured,
            tolerance: f64::INFINITY,
            pass: true,
            notes: notes.into(),
        }
    }

    /// One line of the summary table.
    pub fn summary_line(&self) -> String {
        format!(
            "{:<44} {:>5}  measured {:>12.4e}  tolerance {:>9.1e}  {}",
            self.check_id,
            if self.pass { "PASS" } else { "FAIL" },
            self.measured,
            self.tolerance,
            self.notes
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summary_line())
    }
}

/// Ordered key-value parameter echo. f64 values are formatted with the
/// shortest round-trip representation, so re-parsing reproduces the run
/// exactly.
#[derive(Debug, Clone, Default)]
pub struct ConfigEcho(pub BTreeMap<String, String>);

impl ConfigEcho {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }
}
