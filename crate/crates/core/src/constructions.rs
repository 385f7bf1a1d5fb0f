//! Sharp polynomials that are not equivalent to `f_d`.
//!
//! Each construction starts from `f_d` and rewrites a few consecutive terms
//! with an identity that holds on the line `x + y = 1`:
//!
//! * `x² + 2y = 1 + y²` where two neighbours of `f_d` are in ratio 2 ([`q`]),
//! * `x⁴ + 4x²y + 2y² = 1 + y⁴` on three neighbours ([`mod6`], [`ratio4_construct`]),
//! * `f_k = 1` for every `k` ([`h`]).
//!
//! Every rewrite is recorded as a [`ReplacementStep`] whose consumed and
//! produced terms agree on the line, and every output is checked for
//! membership in H, its degree, its term count and inequivalence to `f_d`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::ConstructionError;
use crate::families::{coefficient_ratio, f, k_coefficient};
use crate::json::format_rational;
use crate::pell;
use crate::poly::{ExponentVector, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineIdentity {
    /// `x² + 2y = 1 + y²`
    QuadraticRatioTwo,
    /// `x⁴ + 4x²y + 2y² = 1 + y⁴`
    QuarticRatioFour,
    /// `f_k = 1`
    FamilyIsOne,
}

impl LineIdentity {
    pub fn describe(self) -> &'static str {
        match self {
            LineIdentity::QuadraticRatioTwo => "x^2 + 2y = 1 + y^2",
            LineIdentity::QuarticRatioFour => "x^4 + 4x^2y + 2y^2 = 1 + y^4",
            LineIdentity::FamilyIsOne => "f_k = 1",
        }
    }
}

type Term = (ExponentVector, BigRational);

/// Terms taken out of a polynomial and the terms put back in their place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplacementStep {
    pub consumed: Vec<Term>,
    pub produced: Vec<Term>,
    pub identity: LineIdentity,
}

impl ReplacementStep {
    fn as_poly(terms: &[Term]) -> Polynomial {
        Polynomial::from_terms(2, terms.iter().cloned()).expect("two-variable terms")
    }

    /// Consumed minus produced restricts to zero on `x + y = 1`.
    pub fn is_valid(&self) -> bool {
        let diff = &Self::as_poly(&self.consumed) - &Self::as_poly(&self.produced);
        diff.restrict_to_hyperplane().is_zero()
    }

    fn apply(&self, p: &Polynomial) -> Polynomial {
        &(p - &Self::as_poly(&self.consumed)) + &Self::as_poly(&self.produced)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let terms = |ts: &[Term]| -> Vec<serde_json::Value> {
            ts.iter()
                .map(|(e, c)| serde_json::json!({"exp": e.as_slice(), "coeff": format_rational(c)}))
                .collect()
        };
        serde_json::json!({
            "identity": self.identity,
            "identity_text": self.identity.describe(),
            "consumed": terms(&self.consumed),
            "produced": terms(&self.produced),
        })
    }
}

/// A constructed polynomial together with the rewrites that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub degree: u32,
    pub poly: Polynomial,
    pub steps: Vec<ReplacementStep>,
}

impl Construction {
    pub fn trace_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.steps.iter().map(ReplacementStep::to_json_value).collect())
    }
}

fn mono(a: u64, b: u64) -> ExponentVector {
    ExponentVector::new(vec![a as u32, b as u32])
}

fn int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// Starts from `f_d`, applies `steps`, and checks the result is an
/// inequivalent sharp polynomial with `expected_terms` terms.
fn build(d: u32, steps: Vec<ReplacementStep>, expected_terms: usize) -> Result<Construction, ConstructionError> {
    let base = f(d)?;
    let mut poly = base.clone();
    for step in &steps {
        if !step.is_valid() {
            return Err(ConstructionError::InvariantViolated(format!(
                "replacement via {} does not vanish on the line",
                step.identity.describe()
            )));
        }
        poly = step.apply(&poly);
    }
    check_sharp(&poly, d, expected_terms, &base)?;
    Ok(Construction { degree: d, poly, steps })
}

fn check_sharp(p: &Polynomial, d: u32, expected_terms: usize, base: &Polynomial) -> Result<(), ConstructionError> {
    let fail = |what: String| Err(ConstructionError::InvariantViolated(what));
    if !p.has_positive_coefficients() {
        return fail(format!("degree {d}: negative coefficient"));
    }
    if !p.is_in_j() {
        return fail(format!("degree {d}: not identically 1 on the line"));
    }
    if p.degree() != i64::from(d) {
        return fail(format!("degree {d}: got degree {}", p.degree()));
    }
    if p.term_count() != expected_terms {
        return fail(format!("degree {d}: {} terms, expected {expected_terms}", p.term_count()));
    }
    if p.equivalent(base).expect("two variables") {
        return fail(format!("degree {d}: equivalent to f_{d}"));
    }
    Ok(())
}

/// For odd `d = 2r + 1`, the `s` with `K(r, s+1) = 2 K(r, s)`, i.e.
/// `s = r - √((r² + r)/3)`, present exactly when `d² = 12k² + 1`.
pub fn pell_ratio_site(d: u64) -> Result<Option<u64>, ConstructionError> {
    if d.is_multiple_of(2) {
        return Err(ConstructionError::EvenDegree(d));
    }
    let r = (d - 1) / 2;
    let Some(k) = pell::k_for_degree(12, &BigInt::from(d)) else {
        return Ok(None);
    };
    // (2r+1)² = 12k² + 1  <=>  r² + r = 3k²
    let k: u64 = k.try_into().expect("k < d fits in u64");
    debug_assert_eq!((r * r + r) / 3, k * k);
    if k == 0 || k >= r {
        return Ok(None);
    }
    let s = r - k;
    // K(r, s+1)/K(r, s) = (2r-2s+1)(2r-2s) / ((s+1)(2r-s))
    let (r2, s2) = (u128::from(r), u128::from(s));
    assert_eq!(
        (2 * r2 - 2 * s2 + 1) * (2 * r2 - 2 * s2),
        2 * (s2 + 1) * (2 * r2 - s2),
        "Pell site without ratio 2 at d = {d}"
    );
    Ok(Some(s))
}

/// `q_d`: `f_d` with `K x^a y^s + 2K x^{a-2} y^{s+1}` rewritten as
/// `K x^{a-2} y^s + K x^{a-2} y^{s+2}` (`a = d - 2s`).
pub fn q(d: u32) -> Result<Construction, ConstructionError> {
    let s = pell_ratio_site(u64::from(d))?.ok_or(ConstructionError::NoRatioTwoSite(u64::from(d)))?;
    let r = u64::from(d - 1) / 2;
    let a = 2 * r + 1 - 2 * s;
    let k = int(k_coefficient(r, s)?);
    let two_k = int(k_coefficient(r, s + 1)?);
    let step = ReplacementStep {
        consumed: vec![(mono(a, s), k.clone()), (mono(a - 2, s + 1), two_k)],
        produced: vec![(mono(a - 2, s), k.clone()), (mono(a - 2, s + 2), k)],
        identity: LineIdentity::QuadraticRatioTwo,
    };
    build(d, vec![step], (d as usize + 3) / 2)
}

/// `h_m = f_{4m-1} - (4m-1) x^{2m-1} y (f_{2m-2} - 1)`, sharp of degree `4m - 1`.
pub fn h(m: u32) -> Result<Construction, ConstructionError> {
    if m < 2 {
        return Err(ConstructionError::InvalidM(u64::from(m)));
    }
    let d = 4 * m - 1;
    let factor = ExponentVector::new(vec![2 * m - 1, 1]);
    let scale = int(BigInt::from(d));
    let consumed: Vec<Term> = f(2 * m - 2)?
        .mul_monomial(&factor, &scale)
        .terms()
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();
    let step = ReplacementStep {
        consumed,
        produced: vec![(factor, scale)],
        identity: LineIdentity::FamilyIsOne,
    };
    build(d, vec![step], 2 * m as usize + 1)
}

fn factorial_ratio(top: u64, bottom: u64) -> BigInt {
    // top! / bottom! for top >= bottom
    (bottom + 1..=top).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

fn factorial(n: u64) -> BigInt {
    factorial_ratio(n, 0)
}

fn check_c_range(m: u64, s: u64) -> Result<(), ConstructionError> {
    if m < 2 || s < 1 || s > 2 * m - 1 {
        return Err(ConstructionError::OutOfRange(format!("C_s needs m >= 2 and 1 <= s <= 2m-1, got m = {m}, s = {s}")));
    }
    Ok(())
}

/// `2^{4m-1}` times the coefficient of `x^{4m-1-2s} y^s` in `h_m`, closed form:
///
/// ```text
/// (4m-1) 2^{4m-1} ( (4m-s-2)! / ((4m-2s-1)! s!) - 2(m-1)(2m-s-2)! / ((2m-2s)! (s-1)!) )
/// ```
///
/// The second summand is absent for `s > m`.
pub fn c_closed(m: u64, s: u64) -> Result<BigInt, ConstructionError> {
    check_c_range(m, s)?;
    let first = BigRational::new(factorial_ratio(4 * m - s - 2, 4 * m - 2 * s - 1), factorial(s));
    let second = if s <= m {
        BigRational::new(
            BigInt::from(2 * (m - 1)) * factorial_ratio(2 * m - s - 2, 0),
            factorial(2 * m - 2 * s) * factorial(s - 1),
        )
    } else {
        BigRational::zero()
    };
    let scale = BigInt::from(4 * m - 1) * (BigInt::one() << (4 * m - 1));
    let v = (first - second) * int(scale);
    assert!(v.is_integer(), "closed form is not an integer at m = {m}, s = {s}");
    Ok(v.to_integer())
}

/// Same quantity as [`c_closed`] from the double binomial sums obtained by
/// expanding the radicals:
///
/// ```text
/// 2 Σ_{j=s}^{2m-1} C(4m-1, 2j) C(j, s) 4^s - (4m-1) 2^{2m+2} Σ_{l=s-1}^{m-1} C(2m-2, 2l) C(l, s-1) 4^{s-1}
/// ```
pub fn c_sum(m: u64, s: u64) -> Result<BigInt, ConstructionError> {
    check_c_range(m, s)?;
    let b = |n: u64, k: u64| num_integer::binomial(BigInt::from(n), BigInt::from(k));
    let four_s = BigInt::from(4).pow(s as u32);
    let first: BigInt = (s..=2 * m - 1).map(|j| b(4 * m - 1, 2 * j) * b(j, s)).sum::<BigInt>() * &four_s * 2;
    let second: BigInt = (s - 1..m).map(|l| b(2 * m - 2, 2 * l) * b(l, s - 1)).sum::<BigInt>()
        * BigInt::from(4).pow(s as u32 - 1)
        * BigInt::from(4 * m - 1)
        * (BigInt::one() << (2 * m + 2));
    Ok(first - second)
}

/// Both sides of the positivity inequality
/// `(4m-s-2)!/(4m-2s-1)! > 2(m-1) s (2m-s-2)!/(2m-2s)!`, for `3 <= s <= m-1`.
pub fn positivity_sides(m: u64, s: u64) -> Result<(BigInt, BigInt), ConstructionError> {
    if s < 3 || s + 1 > m {
        return Err(ConstructionError::OutOfRange(format!("need 3 <= s <= m-1, got m = {m}, s = {s}")));
    }
    let lhs = factorial_ratio(4 * m - s - 2, 4 * m - 2 * s - 1);
    let rhs = BigInt::from(2 * (m - 1) * s) * factorial_ratio(2 * m - s - 2, 2 * m - 2 * s);
    Ok((lhs, rhs))
}

/// `d = 6k + 1`: rewrites three neighbours of `f_d` around `s = 2k` with the
/// quartic identity, keeping part of the first one.
pub fn mod6(k: u32) -> Result<Construction, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::OutOfRange("mod6 needs k >= 1".into()));
    }
    let k64 = u64::from(k);
    let d = 6 * k + 1;
    let (r, s) = (3 * k64, 2 * k64);
    let k_prev = int(k_coefficient(r, s - 1)?);
    let k_mid = int(k_coefficient(r, s)?);
    let k_next = int(k_coefficient(r, s + 1)?);
    if &k_mid / &k_next != int(BigInt::from(2)) {
        return Err(ConstructionError::InvariantViolated(format!("K(r,s)/K(r,s+1) != 2 at k = {k}")));
    }
    let expected_prev_ratio = BigRational::new(
        BigInt::from(k64 * (4 * k64 + 1)),
        BigInt::from((2 * k64 + 3) * (k64 + 1)),
    );
    if &k_prev / &k_mid != expected_prev_ratio {
        return Err(ConstructionError::InvariantViolated(format!("K(r,s-1)/K(r,s) mismatch at k = {k}")));
    }
    let c = int(BigInt::from(4)) * &k_prev / &k_mid;
    if c <= BigRational::one() {
        return Err(ConstructionError::InvariantViolated(format!("c - 1 <= 0 at k = {k}")));
    }
    let quarter = &k_mid / int(BigInt::from(4));
    let base = 2 * r - 1 - 2 * s;
    let step = ReplacementStep {
        consumed: vec![
            (mono(base + 4, s - 1), quarter.clone()),
            (mono(base + 2, s), k_mid),
            (mono(base, s + 1), k_next),
        ],
        produced: vec![(mono(base, s - 1), quarter.clone()), (mono(base, s + 3), quarter)],
        identity: LineIdentity::QuarticRatioFour,
    };
    build(d, vec![step], 3 * k as usize + 2)
}

/// `c` in the mod-6 rewrite: `4 K(r, s-1) / K(r, s)` with `r = 3k`, `s = 2k`.
pub fn mod6_c(k: u32) -> Result<BigRational, ConstructionError> {
    let (r, s) = (3 * u64::from(k), 2 * u64::from(k));
    Ok(int(BigInt::from(4) * k_coefficient(r, s - 1)?) / int(k_coefficient(r, s)?))
}

/// All `(r, s)` with `r <= r_bound`, `1 <= s <= r - 2`, `K(r, s+1) = 4 K(r, s)`
/// and `K(r, s+2) >= 2 K(r, s)`.
pub fn ratio4_sites(r_bound: u64) -> Vec<(u64, u64)> {
    let mut sites = Vec::new();
    for r in 3..=r_bound {
        for s in 1..=r - 2 {
            let (r, s) = (u128::from(r), u128::from(s));
            if (2 * r - 2 * s + 1) * (2 * r - 2 * s) != 4 * (s + 1) * (2 * r - s) {
                continue;
            }
            let (r, s) = (r as u64, s as u64);
            let ks = k_coefficient(r, s).expect("in range");
            let ks2 = k_coefficient(r, s + 2).expect("in range");
            if ks2 >= BigInt::from(2) * ks {
                sites.push((r, s));
            }
        }
    }
    sites
}

/// The degree `2r + 1` of every ratio-4 site is an odd `b` with
/// `a² - 8b² = -7`; returns the sites whose degree is missing from that scan
/// (empty when consistent).
pub fn ratio4_sites_missing_from_pell(r_bound: u64) -> Vec<(u64, u64)> {
    let bs: Vec<u64> = pell::generalized_solutions(8, -7, 2 * r_bound + 1)
        .expect("8 is not a square")
        .into_iter()
        .map(|g| g.b)
        .collect();
    ratio4_sites(r_bound)
        .into_iter()
        .filter(|(r, _)| !bs.contains(&(2 * r + 1)))
        .collect()
}

/// Rewrites `K x^a y^s + 4K x^{a-2} y^{s+1} + 2K x^{a-4} y^{s+2}` (the last one
/// split off `K(r, s+2)`) as `K x^{a-4} y^s (1 + y⁴)`.
pub fn ratio4_construct(r: u64, s: u64) -> Result<Construction, ConstructionError> {
    let valid = r >= 3
        && s >= 1
        && s + 2 <= r
        && coefficient_ratio(r, s)? == int(BigInt::from(4))
        && k_coefficient(r, s + 2)? >= BigInt::from(2) * k_coefficient(r, s)?;
    if !valid {
        return Err(ConstructionError::InvalidSite { r, s });
    }
    let d = u32::try_from(2 * r + 1).map_err(|_| ConstructionError::OutOfRange(format!("r = {r} too large")))?;
    let a = 2 * r + 1 - 2 * s;
    let k = int(k_coefficient(r, s)?);
    let four = int(BigInt::from(4));
    let two = int(BigInt::from(2));
    let step = ReplacementStep {
        consumed: vec![
            (mono(a, s), k.clone()),
            (mono(a - 2, s + 1), &k * four),
            (mono(a - 4, s + 2), &k * two),
        ],
        produced: vec![(mono(a - 4, s), k.clone()), (mono(a - 4, s + 4), k)],
        identity: LineIdentity::QuarticRatioFour,
    };
    build(d, vec![step], r as usize + 2)
}
