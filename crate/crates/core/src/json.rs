//! The JSON polynomial format shared by every command:
//!
//! ```text
//! {"nvars": n, "terms": [{"exp": [e1, ..., en], "coeff": "num/den"}, ...]}
//! ```
//!
//! Terms appear in canonical order (leading grlex term first) and every
//! coefficient is written as a reduced `num/den` string, `den >= 1`, so big
//! integers never pass through a float.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::PolyError;
use crate::poly::{ExponentVector, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

pub fn format_rational(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Accepts `num/den` or a bare integer; rejects decimals and zero denominators.
pub fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    let bad = || PolyError::Parse(format!("bad coefficient '{s}'"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(e, c)| TermJson {
                    exp: e.as_slice().to_vec(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolynomialJson> for Polynomial {
    type Error = PolyError;

    fn try_from(j: &PolynomialJson) -> Result<Self, PolyError> {
        if j.nvars == 0 {
            return Err(PolyError::NoVariables);
        }
        let mut p = Polynomial::zero(j.nvars);
        for t in &j.terms {
            if t.exp.len() != j.nvars {
                return Err(PolyError::ArityMismatch {
                    expected: j.nvars,
                    found: t.exp.len(),
                });
            }
            let e = ExponentVector::new(t.exp.clone());
            if p.contains(&e) {
                return Err(PolyError::Parse(format!("duplicate exponent {:?}", t.exp)));
            }
            let c = parse_rational(&t.coeff)?;
            if c.is_zero() {
                return Err(PolyError::Parse(format!("zero coefficient at {:?}", t.exp)));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Polynomial {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolynomialJson::from(self)).expect("polynomial JSON is always serializable")
    }

    /// Compact canonical serialization.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&PolynomialJson::from(self)).expect("polynomial JSON is always serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Polynomial, PolyError> {
        let j: PolynomialJson = serde_json::from_str(s).map_err(|e| PolyError::Parse(e.to_string()))?;
        Polynomial::try_from(&j)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Polynomial, PolyError> {
        let j: PolynomialJson =
            serde_json::from_value(v.clone()).map_err(|e| PolyError::Parse(e.to_string()))?;
        Polynomial::try_from(&j)
    }
}
