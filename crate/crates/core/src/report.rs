//! JSON reports: what was run, what came out, and which claims were checked.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub claim: String,
    /// Name of the mathematical fact the claim instantiates.
    pub anchor: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub assertions: Vec<Assertion>,
    started: Instant,
}

/// Anchor names used by the CLI.
pub mod anchors {
    pub const ODD_FAMILY: &str = "sharp odd-degree family f_d";
    pub const EVEN_FAMILY: &str = "even-degree sharp families";
    pub const PELL: &str = "Pell equation d^2 - 12k^2 = 1 and ratio-2 coefficients";
    pub const PELL_RESIDUE: &str = "residue of Pell degrees mod 4";
    pub const Q_FAMILY: &str = "non-uniqueness at Pell degrees";
    pub const H_FAMILY: &str = "non-uniqueness in degrees 3 mod 4";
    pub const H_COEFFICIENTS: &str = "coefficient formulas for h_m";
    pub const MOD6: &str = "non-uniqueness in degrees 1 mod 6";
    pub const RATIO4: &str = "ratio-4 sites and a^2 - 8b^2 = -7";
    pub const UNIQUENESS: &str = "uniqueness of sharp polynomials in small degree";
    pub const DEGREE_BOUND: &str = "degree bound d <= 2N - 3";
    pub const NO_GAPS: &str = "no gaps for N >= T(n)";
    pub const FROBENIUS: &str = "Frobenius number of n and n - 1";
    pub const INDEPENDENCE: &str = "independence of monomial components";
    pub const SIGNATURES: &str = "signature catalog for J";
    pub const MEMBERSHIP: &str = "membership in H";
    pub const SPHERE: &str = "monomial map sends sphere to sphere";
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            outputs: Value::Null,
            assertions: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn check(&mut self, claim: impl Into<String>, anchor: &str, pass: bool) -> &mut Self {
        self.assertions.push(Assertion {
            claim: claim.into(),
            anchor: anchor.to_string(),
            pass,
        });
        self
    }

    pub fn all_pass(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    /// Pretty JSON. Every wall-clock value sits under a key named `elapsed_ms`.
    pub fn to_json_string(&self) -> String {
        let v = serde_json::json!({
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "assertions": self.assertions,
            "timing": {"elapsed_ms": self.started.elapsed().as_millis() as u64},
        });
        serde_json::to_string_pretty(&v).expect("report serializes")
    }
}

/// Removes every `elapsed_ms` entry, for comparing reports across runs.
pub fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("elapsed_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}
