//! Target dimensions without gaps, and sign patterns of polynomials in J.
//!
//! Starting from `s = x_1 + ... + x_n`, the operators [`w`] and [`v`] add
//! `n - 1` and `n` terms. Every `N - n` that is a nonnegative combination of
//! `n - 1` and `n` is therefore reached, which covers all `N >= T(n)` because
//! `T(n) = 1 + F(n, n-1) + n` with `F` the Frobenius number.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::GapError;
use crate::poly::{ExponentVector, Polynomial, Signature};
use crate::search::lp::{self, LpOutcome};

/// `ab - a - b`, the largest integer that is not a nonnegative combination
/// of coprime `a` and `b`. `(1, 0)` gives `-1`.
pub fn frobenius(a: u64, b: u64) -> Result<i64, GapError> {
    if a.gcd(&b) != 1 {
        return Err(GapError::NotCoprime(a, b));
    }
    Ok(a as i64 * b as i64 - a as i64 - b as i64)
}

/// `T(n) = n² - 2n + 2`.
pub fn t(n: u64) -> u64 {
    (n - 1) * (n - 1) + 1
}

fn check_h(p: &Polynomial) -> Result<(), GapError> {
    if p.is_in_h() {
        Ok(())
    } else {
        Err(GapError::NotInH)
    }
}

/// Highest-degree pure monomial in the last variable (the constant counts).
fn top_pure_term(p: &Polynomial) -> Result<(ExponentVector, BigRational), GapError> {
    p.terms()
        .filter(|(e, _)| e.is_pure_last())
        .max_by_key(|(e, _)| e.total_degree())
        .map(|(e, c)| (e.clone(), c.clone()))
        .ok_or(GapError::NoPureTerm)
}

fn replace_pure(p: &Polynomial, share: &BigRational) -> Result<Polynomial, GapError> {
    check_h(p)?;
    let (e, c) = top_pure_term(p)?;
    let moved = &c * share;
    let n = p.nvars();
    let mut out = p.clone();
    out.add_term(e.clone(), -moved.clone());
    for i in 0..n {
        out.add_term(e.mul(&ExponentVector::unit(n, i)), moved.clone());
    }
    Ok(out)
}

/// `W(p) = p - c x_n^d + c x_n^d s` on the top pure `x_n` term: `n - 1` new terms.
pub fn w(p: &Polynomial) -> Result<Polynomial, GapError> {
    replace_pure(p, &BigRational::one())
}

/// `V(p) = p - (c/2) x_n^d + (c/2) x_n^d s`: `n` new terms.
pub fn v(p: &Polynomial) -> Result<Polynomial, GapError> {
    replace_pure(p, &BigRational::new(1.into(), 2.into()))
}

/// Nonnegative `(j, k)` with `j(n-1) + kn = N - n`, minimal `j`.
pub fn decompose_target(n: u64, big_n: u64) -> Result<(u64, u64), GapError> {
    if n < 2 {
        return Err(GapError::InvalidDimension);
    }
    let not_rep = GapError::NotRepresentable { n, big_n };
    let Some(rest) = big_n.checked_sub(n) else {
        return Err(not_rep);
    };
    (0..=rest / (n - 1))
        .find(|j| (rest - j * (n - 1)).is_multiple_of(n))
        .map(|j| (j, (rest - j * (n - 1)) / n))
        .ok_or(not_rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// `V^k W^j s`
    Operators,
    /// `Σ_{i=1}^N x^i / N` in one variable.
    UniformSplit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapWitness {
    pub n: u64,
    pub big_n: u64,
    pub j: u64,
    pub k: u64,
    pub kind: WitnessKind,
    pub poly: Polynomial,
}

impl GapWitness {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "N": self.big_n,
            "j": self.j,
            "k": self.k,
            "kind": self.kind,
            "at_least_t": self.big_n >= t(self.n),
            "poly": self.poly.to_json_value(),
        })
    }
}

/// A member of H(n) with exactly `N` terms. For `n >= 2` this is `V^k W^j s`,
/// which exists exactly when `N - n` is representable (always for `N >= T(n)`).
pub fn gap_witness(n: u64, big_n: u64) -> Result<GapWitness, GapError> {
    if n == 0 || big_n == 0 {
        return Err(GapError::InvalidDimension);
    }
    if n == 1 {
        let c = BigRational::new(BigInt::one(), BigInt::from(big_n));
        let poly = Polynomial::from_terms(1, (1..=big_n as u32).map(|i| ([i], c.clone())))
            .expect("one variable");
        debug_assert!(poly.is_in_h());
        return Ok(GapWitness {
            n,
            big_n,
            j: 0,
            k: 0,
            kind: WitnessKind::UniformSplit,
            poly,
        });
    }
    let (j, k) = decompose_target(n, big_n)?;
    let mut poly = Polynomial::linear_sum(n as usize);
    for _ in 0..j {
        poly = w(&poly)?;
    }
    for _ in 0..k {
        poly = v(&poly)?;
    }
    assert!(poly.is_in_h(), "operator output left H");
    assert_eq!(poly.term_count() as u64, big_n, "term count for n = {n}");
    Ok(GapWitness {
        n,
        big_n,
        j,
        k,
        kind: WitnessKind::Operators,
        poly,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapTableRow {
    #[serde(rename = "N")]
    pub big_n: u64,
    pub representable: bool,
    pub j: Option<u64>,
    pub k: Option<u64>,
    pub at_least_t: bool,
}

/// Representability of every `N` in `1..=to` for domain dimension `n >= 2`.
pub fn gap_table(n: u64, to: u64) -> Result<Vec<GapTableRow>, GapError> {
    if n < 2 {
        return Err(GapError::InvalidDimension);
    }
    Ok((1..=to)
        .map(|big_n| {
            let d = decompose_target(n, big_n).ok();
            GapTableRow {
                big_n,
                representable: d.is_some(),
                j: d.map(|x| x.0),
                k: d.map(|x| x.1),
                at_least_t: big_n >= t(n),
            }
        })
        .collect())
}

/// Catalog recipes for elements of J with a prescribed signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignatureRecipe {
    /// `2 - s`, signature `(1, n)`.
    TwoMinusS { n: usize },
    /// `2s - 1`, signature `(n, 1)`.
    TwoSMinusOne { n: usize },
    /// `1 + x_1(1 - s)`, signature `(2, n)`.
    OnePlusXTimes { n: usize },
    /// `1 - x_1(1 - s)`, signature `(n + 1, 1)`.
    OneMinusXTimes { n: usize },
    /// `f_{2r+1}`, signature `(r + 2, 0)`.
    FOdd { r: u32 },
    /// `2 - f_{2r+1}`, signature `(1, r + 2)`.
    TwoMinusFOdd { r: u32 },
    /// `p + x_n^{d+1}(1 - s)`, signature `(a + 1, b + n)` from `(a, b)`.
    AppendNegative { base: Polynomial },
}

pub const RECIPE_TAGS: [&str; 7] = [
    "two_minus_s",
    "two_s_minus_one",
    "one_plus_x_times",
    "one_minus_x_times",
    "f_odd",
    "two_minus_f_odd",
    "append_negative",
];

impl SignatureRecipe {
    /// Parses a catalog tag. `n` feeds the recipes in `n` variables, `r` the
    /// two-variable ones; `append_negative` defaults to the base `1` in `n`
    /// variables.
    pub fn from_tag(tag: &str, n: usize, r: u32, base: Option<Polynomial>) -> Result<Self, GapError> {
        let needs_n = |n: usize| {
            if n == 0 {
                Err(GapError::BadParameter("n must be >= 1".into()))
            } else {
                Ok(n)
            }
        };
        Ok(match tag {
            "two_minus_s" => Self::TwoMinusS { n: needs_n(n)? },
            "two_s_minus_one" => Self::TwoSMinusOne { n: needs_n(n)? },
            "one_plus_x_times" => Self::OnePlusXTimes { n: needs_n(n)? },
            "one_minus_x_times" => Self::OneMinusXTimes { n: needs_n(n)? },
            "f_odd" => Self::FOdd { r },
            "two_minus_f_odd" => Self::TwoMinusFOdd { r },
            "append_negative" => Self::AppendNegative {
                base: match base {
                    Some(p) => p,
                    None => Polynomial::one(needs_n(n)?),
                },
            },
            other => return Err(GapError::UnknownRecipe(other.to_string())),
        })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Self::TwoMinusS { .. } => "two_minus_s",
            Self::TwoSMinusOne { .. } => "two_s_minus_one",
            Self::OnePlusXTimes { .. } => "one_plus_x_times",
            Self::OneMinusXTimes { .. } => "one_minus_x_times",
            Self::FOdd { .. } => "f_odd",
            Self::TwoMinusFOdd { .. } => "two_minus_f_odd",
            Self::AppendNegative { .. } => "append_negative",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureWitness {
    pub requested: Signature,
    pub poly: Polynomial,
    pub recipe: &'static str,
}

impl SignatureWitness {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "recipe": self.recipe,
            "requested": self.requested,
            "signature": self.poly.signature(),
            "in_j": self.poly.is_in_j(),
            "poly": self.poly.to_json_value(),
            "text": self.poly.to_string(),
        })
    }
}

/// Builds the catalog polynomial and checks it is in J with the advertised
/// signature.
pub fn signature_witness(recipe: &SignatureRecipe) -> Result<SignatureWitness, GapError> {
    let (poly, requested) = match recipe {
        &SignatureRecipe::TwoMinusS { n } => {
            let p = &Polynomial::constant(n, BigRational::from_integer(2.into())) - &Polynomial::linear_sum(n);
            (p, Signature::new(1, n))
        }
        &SignatureRecipe::TwoSMinusOne { n } => {
            let s = Polynomial::linear_sum(n);
            (&(&s + &s) - &Polynomial::one(n), Signature::new(n, 1))
        }
        &SignatureRecipe::OnePlusXTimes { n } => {
            let tail = &Polynomial::var(n, 0) * &(&Polynomial::one(n) - &Polynomial::linear_sum(n));
            (&Polynomial::one(n) + &tail, Signature::new(2, n))
        }
        &SignatureRecipe::OneMinusXTimes { n } => {
            let tail = &Polynomial::var(n, 0) * &(&Polynomial::one(n) - &Polynomial::linear_sum(n));
            (&Polynomial::one(n) - &tail, Signature::new(n + 1, 1))
        }
        &SignatureRecipe::FOdd { r } => {
            let p = crate::families::f(2 * r + 1).map_err(|e| GapError::BadParameter(e.to_string()))?;
            (p, Signature::new(r as usize + 2, 0))
        }
        &SignatureRecipe::TwoMinusFOdd { r } => {
            let p = crate::families::f(2 * r + 1).map_err(|e| GapError::BadParameter(e.to_string()))?;
            let two = Polynomial::constant(2, BigRational::from_integer(2.into()));
            (&two - &p, Signature::new(1, r as usize + 2))
        }
        SignatureRecipe::AppendNegative { base } => {
            if !base.is_in_j() {
                return Err(GapError::BadParameter("append_negative needs a base in J".into()));
            }
            let n = base.nvars();
            let d = base.degree().max(0) as u32;
            let mut e = vec![0u32; n];
            e[n - 1] = d + 1;
            let lift = Polynomial::monomial(ExponentVector::new(e), BigRational::one());
            let p = base + &(&lift * &(&Polynomial::one(n) - &Polynomial::linear_sum(n)));
            let sig = base.signature();
            (p, Signature::new(sig.n_plus + 1, sig.n_minus + n))
        }
    };
    assert!(poly.is_in_j(), "{} left J", recipe.tag());
    assert_eq!(poly.signature(), requested, "{} signature", recipe.tag());
    Ok(SignatureWitness {
        requested,
        poly,
        recipe: recipe.tag(),
    })
}

/// Exhaustive search for a two-variable element of J of degree at most
/// `max_degree` with signature `target`: every choice of positive and
/// negative monomials is tested for a solution with the prescribed strict
/// signs by exact linear programming.
pub fn find_signature_witness(target: Signature, max_degree: u32) -> Option<Polynomial> {
    let monos: Vec<(u32, u32)> = (0..=max_degree)
        .flat_map(|deg| (0..=deg).map(move |a| (a, deg - a)))
        .collect();
    let total = target.n_plus + target.n_minus;
    if total == 0 || total > monos.len() {
        return None;
    }
    let rows = max_degree as usize + 1;
    // x^a (1-x)^b as a coefficient vector in x.
    let restricted: Vec<Vec<BigRational>> = monos
        .iter()
        .map(|&(a, b)| {
            let mut col = vec![BigRational::zero(); rows];
            for k in 0..=b {
                let c = num_integer::binomial(BigInt::from(b), BigInt::from(k));
                let c = if k % 2 == 1 { -c } else { c };
                col[(a + k) as usize] += BigRational::from_integer(c);
            }
            col
        })
        .collect();
    let mut chosen = Vec::with_capacity(total);
    let mut found = None;
    choose(monos.len(), total, 0, &mut chosen, &mut |subset| {
        // Assign the first n_plus positions of each sign split.
        choose(total, target.n_plus, 0, &mut Vec::new(), &mut |plus| {
            let signs: Vec<bool> = (0..total).map(|i| plus.contains(&i)).collect();
            if let Some(c) = signed_feasible(&restricted, subset, &signs, rows) {
                let poly = Polynomial::from_terms(
                    2,
                    subset.iter().zip(c).map(|(&m, v)| ([monos[m].0, monos[m].1], v)),
                )
                .expect("two variables");
                found = Some(poly);
                return true;
            }
            false
        })
    });
    found
}

/// Visits `k`-subsets of `0..n` in lexicographic order; stops when `f` returns true.
fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if cur.len() == k {
        return f(cur);
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        let stop = choose(n, k, i + 1, cur, f);
        cur.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Coefficients with the given strict signs and `Σ c_i col_i = e_0`, if any.
fn signed_feasible(
    cols: &[Vec<BigRational>],
    subset: &[usize],
    positive: &[bool],
    rows: usize,
) -> Option<Vec<BigRational>> {
    // Magnitudes u_i = m_i + t with m_i >= 0, t in [0, 1]; maximize t.
    let n = subset.len();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = subset
                .iter()
                .zip(positive)
                .map(|(&m, &p)| if p { cols[m][r].clone() } else { -cols[m][r].clone() })
                .collect();
            let sum: BigRational = row.iter().sum();
            row.push(sum);
            row.push(BigRational::zero());
            row
        })
        .collect();
    let mut cap = vec![BigRational::zero(); n + 2];
    cap[n] = BigRational::one();
    cap[n + 1] = BigRational::one();
    a.push(cap);
    let mut b = vec![BigRational::zero(); rows + 1];
    b[0] = BigRational::one();
    b[rows] = BigRational::one();
    let mut objective = vec![BigRational::zero(); n + 2];
    objective[n] = BigRational::one();
    match lp::maximize(&a, &b, &objective) {
        LpOutcome::Optimal { x, value } if value.is_positive() => Some(
            x[..n]
                .iter()
                .zip(positive)
                .map(|(m, &p)| {
                    let u = m + &value;
                    if p {
                        u
                    } else {
                        -u
                    }
                })
                .collect(),
        ),
        _ => None,
    }
}
