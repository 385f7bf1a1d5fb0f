//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are keyed by [`ExponentVector`] and ordered graded-lexicographically.
//! Zero coefficients are never stored, so [`Polynomial::term_count`] is
//! structural. Everything here is a pure function of immutable values.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;

/// Exponents of one monomial, one entry per variable.
///
/// Ordering is graded lexicographic: total degree first, then the exponent
/// vectors compared entry by entry (so `x` > `y` for equal degree).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "exponent vector needs at least one variable");
        ExponentVector(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(vec![0; nvars])
    }

    /// `x_i` in `nvars` variables.
    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::new(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Nonzero only in the last variable (the constant counts, with degree 0).
    pub fn is_pure_last(&self) -> bool {
        let n = self.0.len();
        self.0[..n - 1].iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.nvars(), other.nvars());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The same monomial with variable order reversed (`x ↔ y` for two variables).
    pub fn reversed(&self) -> ExponentVector {
        let mut e = self.0.clone();
        e.reverse();
        ExponentVector(e)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector::new(v.to_vec())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Counts of strictly positive and strictly negative coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Signature {
    pub n_plus: usize,
    pub n_minus: usize,
}

impl Signature {
    pub fn new(n_plus: usize, n_minus: usize) -> Self {
        Signature { n_plus, n_minus }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n_plus, self.n_minus)
    }
}

/// A polynomial in `nvars` real variables with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 1, "a polynomial needs at least one variable");
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, i), BigRational::one())
    }

    /// `s = x_1 + ... + x_n`.
    pub fn linear_sum(nvars: usize) -> Self {
        (0..nvars).fold(Self::zero(nvars), |acc, i| acc + Self::var(nvars, i))
    }

    pub fn monomial(exp: ExponentVector, c: BigRational) -> Self {
        let mut p = Self::zero(exp.nvars());
        p.add_term(exp, c);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, E>(nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (E, BigRational)>,
        E: Into<ExponentVector>,
    {
        if nvars == 0 {
            return Err(PolyError::NoVariables);
        }
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            let e = e.into();
            if e.nvars() != nvars {
                return Err(PolyError::ArityMismatch {
                    expected: nvars,
                    found: e.nvars(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Integer-coefficient shorthand used heavily by the constructions and tests.
    pub fn from_int_terms<const N: usize>(terms: &[([u32; N], i64)]) -> Self {
        let mut p = Self::zero(N);
        for (e, c) in terms {
            p.add_term(ExponentVector::from(*e), BigRational::from_integer(BigInt::from(*c)));
        }
        p
    }

    /// Adds `c·x^e`, dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, e: ExponentVector, c: BigRational) {
        debug_assert_eq!(e.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Maximum total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| i64::from(e.total_degree()))
            .max()
            .unwrap_or(-1)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_constant() && c.is_one())
    }

    /// Coefficient of `x^e` (zero when absent).
    pub fn coeff(&self, e: &ExponentVector) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.terms.contains_key(e)
    }

    /// Terms in canonical order, leading (largest grlex) term first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms().map(|(e, _)| e.clone()).collect()
    }

    pub fn signature(&self) -> Signature {
        let n_plus = self.terms.values().filter(|c| c.is_positive()).count();
        Signature::new(n_plus, self.terms.len() - n_plus)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `c·x^e`.
    pub fn mul_monomial(&self, e: &ExponentVector, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(f, v)| (f.mul(e), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(self.nvars), |acc, _| &acc * self)
    }

    /// Reverses the variable order; for two variables this is `p(y, x)`.
    pub fn swap_variables(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.reversed(), c.clone())).collect(),
        }
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.as_slice()
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
            })
            .sum()
    }

    /// Every stored coefficient is strictly positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Least common multiple of the coefficient denominators.
    fn common_denominator(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Substitutes `x_n := 1 - (x_1 + ... + x_{n-1})`, eliminating the last
    /// variable exactly. For one variable the result is the constant `p(1)`,
    /// still reported as a one-variable polynomial.
    pub fn restrict_to_hyperplane(&self) -> Polynomial {
        let n = self.nvars;
        if n == 1 {
            let total: BigRational = self.terms.values().cloned().sum();
            return Polynomial::constant(1, total);
        }
        let den = self.common_denominator();
        let scaled: Vec<(&ExponentVector, BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| (e, (c * BigRational::from_integer(den.clone())).to_integer()))
            .collect();
        let ints = if n == 2 {
            restrict_two_vars(&scaled)
        } else {
            restrict_general(n, &scaled)
        };
        let mut out = Polynomial::zero(n - 1);
        for (e, c) in ints {
            out.add_term(e, BigRational::new(c, den.clone()));
        }
        out
    }

    /// Member of J(n): identically 1 on the hyperplane `x_1 + ... + x_n = 1`.
    pub fn is_in_j(&self) -> bool {
        self.restrict_to_hyperplane().is_one()
    }

    /// Member of H(n): in J(n) with every coefficient positive.
    pub fn is_in_h(&self) -> bool {
        self.has_positive_coefficients() && self.is_in_j()
    }

    /// Equivalence in H(2, d): equal, or equal after swapping the variables.
    pub fn equivalent(&self, other: &Polynomial) -> Result<bool, PolyError> {
        for p in [self, other] {
            if p.nvars != 2 {
                return Err(PolyError::UnsupportedArity(p.nvars));
            }
        }
        Ok(self == other || *self == other.swap_variables())
    }

    /// Coefficient of `x^a y^b` in a two-variable polynomial.
    pub fn coeff2(&self, a: u32, b: u32) -> BigRational {
        self.coeff(&ExponentVector::new(vec![a, b]))
    }
}

/// Horner evaluation in `y` with `y = 1 - x`, on a dense coefficient vector in `x`.
fn restrict_two_vars(terms: &[(&ExponentVector, BigInt)]) -> Vec<(ExponentVector, BigInt)> {
    let max_b = terms.iter().map(|(e, _)| e.as_slice()[1]).max().unwrap_or(0) as usize;
    let max_deg = terms.iter().map(|(e, _)| e.total_degree()).max().unwrap_or(0) as usize;
    let mut by_power: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); max_b + 1];
    for (e, c) in terms {
        by_power[e.as_slice()[1] as usize].push((e.as_slice()[0] as usize, c));
    }
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); max_deg + 1];
    let mut len = 0usize;
    for b in (0..=max_b).rev() {
        // acc <- acc * (1 - x)
        if len > 0 {
            for i in (1..=len).rev() {
                let prev = acc[i - 1].clone();
                acc[i] -= prev;
            }
            len += 1;
        }
        for &(a, c) in &by_power[b] {
            acc[a] += c;
            len = len.max(a + 1);
        }
    }
    acc.into_iter()
        .take(len)
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(a, c)| (ExponentVector::new(vec![a as u32]), c))
        .collect()
}

fn restrict_general(n: usize, terms: &[(&ExponentVector, BigInt)]) -> Vec<(ExponentVector, BigInt)> {
    let max_last = terms.iter().map(|(e, _)| e.as_slice()[n - 1]).max().unwrap_or(0);
    let mut by_power: BTreeMap<u32, Vec<(Vec<u32>, &BigInt)>> = BTreeMap::new();
    for (e, c) in terms {
        let s = e.as_slice();
        by_power
            .entry(s[n - 1])
            .or_default()
            .push((s[..n - 1].to_vec(), c));
    }
    let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for k in (0..=max_last).rev() {
        if !acc.is_empty() {
            // acc <- acc * (1 - x_1 - ... - x_{n-1})
            let mut next = acc.clone();
            for (mono, c) in &acc {
                for j in 0..n - 1 {
                    let mut m = mono.clone();
                    m[j] += 1;
                    *next.entry(m).or_insert_with(BigInt::zero) -= c;
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        if let Some(list) = by_power.get(&k) {
            for (mono, c) in list {
                let slot = acc.entry(mono.clone()).or_insert_with(BigInt::zero);
                *slot += *c;
                if slot.is_zero() {
                    acc.remove(mono);
                }
            }
        }
    }
    acc.into_iter()
        .map(|(m, c)| (ExponentVector::new(m), c))
        .collect()
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "subtracting polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials in different rings");
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                out.add_term(e.mul(f), c * d);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

const VAR_NAMES: [&str; 3] = ["x", "y", "z"];

fn var_name(nvars: usize, i: usize) -> String {
    if nvars <= VAR_NAMES.len() {
        VAR_NAMES[i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> = e
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| match k {
                    1 => var_name(self.nvars, j),
                    _ => format!("{}^{}", var_name(self.nvars, j), k),
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else if mag.is_integer() {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            } else {
                write!(f, "({})*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Shorthand for an exact rational `num/den`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an exact integer as a rational.
pub fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}
