//! Proper monomial sphere maps and their polynomial shadows.
//!
//! A polynomial `p` in H(n) with squared coefficients `c_α` gives the map
//! `z ↦ (√c_α z^α)_α` with `‖f(z)‖² = p(|z_1|², ..., |z_n|²)`, which is 1 on
//! the unit sphere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::error::PolyError;
use crate::json::format_rational;
use crate::linalg::rank;
use crate::poly::{ExponentVector, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    nvars: usize,
    components: Vec<(ExponentVector, BigRational)>,
}

impl MonomialMap {
    /// Validates that squared coefficients are positive and exponents distinct.
    pub fn new(nvars: usize, components: Vec<(ExponentVector, BigRational)>) -> Result<Self, PolyError> {
        for (i, (e, c)) in components.iter().enumerate() {
            if e.nvars() != nvars {
                return Err(PolyError::ArityMismatch {
                    expected: nvars,
                    found: e.nvars(),
                });
            }
            if !c.is_positive() {
                return Err(PolyError::NotInH(format!("component {i} has non-positive squared modulus")));
            }
            if components[..i].iter().any(|(f, _)| f == e) {
                return Err(PolyError::NotInH(format!("component {i} repeats a monomial")));
            }
        }
        Ok(MonomialMap { nvars, components })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Target dimension N.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[(ExponentVector, BigRational)] {
        &self.components
    }

    /// `‖f(z)‖²` as a polynomial in `x_j = |z_j|²`.
    pub fn squared_norm_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(self.nvars, self.components.iter().cloned())
            .expect("components were validated at construction")
    }

    /// Maximum of `|‖f(z)‖² - 1|` over `samples` seeded random points of the
    /// unit sphere in C^n. Terms are evaluated in log space so coefficients
    /// far beyond the f64 range still contribute correctly.
    pub fn check_sphere_numeric(&self, samples: usize, seed: u64) -> f64 {
        assert!(samples >= 1, "need at least one sample");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let log_coeffs: Vec<f64> = self.components.iter().map(|(_, c)| ln_rational(c)).collect();
        let mut worst = 0.0f64;
        let mut moduli = vec![0.0f64; self.nvars];
        for _ in 0..samples {
            let mut norm = 0.0;
            for m in moduli.iter_mut() {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                *m = re * re + im * im;
                norm += *m;
            }
            let logs: Vec<f64> = moduli.iter().map(|m| (m / norm).ln()).collect();
            let value: f64 = self
                .components
                .iter()
                .zip(&log_coeffs)
                .map(|((e, _), lc)| {
                    let exponent: f64 = e
                        .as_slice()
                        .iter()
                        .zip(&logs)
                        .filter(|(&k, _)| k > 0)
                        .map(|(&k, l)| f64::from(k) * l)
                        .sum();
                    (lc + exponent).exp()
                })
                .sum();
            worst = worst.max((value - 1.0).abs());
        }
        worst
    }

    /// Checks that no nontrivial linear combination of the component monomials
    /// is constant: the monomials together with `1` are evaluated at `N + 1`
    /// integer points and the resulting matrix must have full rank. Components
    /// must also be distinct and nonconstant.
    pub fn components_independent_of_constants(&self) -> bool {
        if self.components.iter().any(|(e, _)| e.is_constant()) {
            return false;
        }
        let cols = self.components.len() + 1;
        // Points (1 + i, 2 + i^2, 3 + i^3, ...) separate distinct monomials of
        // moderate degree generically; a rank deficit would only be a false alarm.
        let rows: Vec<Vec<BigRational>> = (0..cols)
            .map(|i| {
                let point: Vec<BigInt> = (0..self.nvars)
                    .map(|j| BigInt::from(j as u64 + 2) + BigInt::from(i as u64).pow(j as u32 + 1))
                    .collect();
                let mut row = vec![BigRational::from_integer(BigInt::from(1))];
                row.extend(self.components.iter().map(|(e, _)| {
                    let v = e
                        .as_slice()
                        .iter()
                        .zip(&point)
                        .fold(BigInt::from(1), |acc, (&k, x)| acc * x.pow(k));
                    BigRational::from_integer(v)
                }));
                row
            })
            .collect();
        rank(&rows) == cols
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Component {
            exp: Vec<u32>,
            squared_modulus: String,
        }
        #[derive(Serialize)]
        struct MapJson {
            nvars: usize,
            target_dimension: usize,
            components: Vec<Component>,
        }
        serde_json::to_value(MapJson {
            nvars: self.nvars,
            target_dimension: self.components.len(),
            components: self
                .components
                .iter()
                .map(|(e, c)| Component {
                    exp: e.as_slice().to_vec(),
                    squared_modulus: format_rational(c),
                })
                .collect(),
        })
        .expect("map JSON is always serializable")
    }
}

impl Polynomial {
    /// The monomial map whose squared norm is this polynomial.
    pub fn to_monomial_map(&self) -> Result<MonomialMap, PolyError> {
        if !self.is_in_h() {
            return Err(PolyError::NotInH(self.to_string()));
        }
        MonomialMap::new(
            self.nvars(),
            self.terms().map(|(e, c)| (e.clone(), c.clone())).collect(),
        )
    }
}

/// Natural log of a positive rational, robust to values outside the f64 range.
pub(crate) fn ln_rational(c: &BigRational) -> f64 {
    debug_assert!(c.is_positive());
    ln_bigint(c.numer()) - ln_bigint(c.denom())
}

fn ln_bigint(v: &BigInt) -> f64 {
    debug_assert!(!v.is_zero());
    let bits = v.bits();
    if bits < 1000 {
        if let Some(f) = v.to_f64() {
            return f.abs().ln();
        }
    }
    let shift = bits - 60;
    let top = (v.abs() >> shift).to_f64().expect("60-bit value fits in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
