//! Exhaustive search for sharp polynomials in two variables.
//!
//! A support `S` of monomials of degree at most `d` carries a polynomial in
//! H(2,d) iff the linear system
//!
//! ```text
//! Σ_{(a,b) ∈ S} c_{a,b} x^a y^b (x + y)^{d-a-b} = (x + y)^d
//! ```
//!
//! has a strictly positive solution. This is the homogenized form of
//! `p(x, 1-x) ≡ 1`: the coefficient of `x^i y^{d-i}` gives one equation per
//! `i = 0..=d`, and column `(a,b)` has entries `C(d-a-b, i-a)` on rows
//! `a..=d-b`.
//!
//! Supports are enumerated in lexicographic order of their sorted monomial
//! lists. Three pruning rules apply, each a necessary condition:
//!
//! 1. some monomial has degree exactly `d` (otherwise the degree is lower);
//! 2. some monomial has `b = 0` and some has `a = 0`, the constant counting
//!    for both (otherwise `p(1,0)` or `p(0,1)` vanishes);
//! 3. `S <= swap(S)`; the swapped polynomial solves the swapped support.
//!
//! Every surviving support is first reduced modulo a prime, column by column
//! along the enumeration. If the columns are independent mod `p` and the
//! right-hand side is not in their span mod `p`, the rational system is
//! inconsistent too (a full-rank rational solution would reduce mod `p`).
//! Everything else goes to the exact simplex in [`lp`].

pub mod lp;

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::SearchError;
use crate::linalg::rank;
use crate::poly::{ExponentVector, Polynomial};
use lp::LpOutcome;

/// Env var holding the default search budget in seconds.
pub const BUDGET_ENV: &str = "SHARPMAP_BUDGET_SECONDS";

/// A sorted set of two-variable monomials satisfying pruning rules 1 and 2.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Support {
    degree: u32,
    monomials: Vec<ExponentVector>,
}

impl Support {
    pub fn new(degree: u32, mut monomials: Vec<ExponentVector>) -> Result<Self, SearchError> {
        let bad = |msg: String| Err(SearchError::InvalidSupport(msg));
        if let Some(e) = monomials.iter().find(|e| e.nvars() != 2) {
            return bad(format!("monomial {:?} is not in two variables", e.as_slice()));
        }
        monomials.sort();
        monomials.dedup();
        let max = monomials.iter().map(ExponentVector::total_degree).max();
        if max != Some(degree) {
            return bad(format!("no monomial of degree {degree}"));
        }
        if !monomials.iter().any(|e| e.as_slice()[1] == 0) {
            return bad("no pure-x monomial".into());
        }
        if !monomials.iter().any(|e| e.as_slice()[0] == 0) {
            return bad("no pure-y monomial".into());
        }
        Ok(Support { degree, monomials })
    }

    pub fn from_pairs(degree: u32, pairs: &[(u32, u32)]) -> Result<Self, SearchError> {
        Self::new(degree, pairs.iter().map(|&(a, b)| ExponentVector::new(vec![a, b])).collect())
    }

    pub fn of_polynomial(p: &Polynomial) -> Result<Self, SearchError> {
        if p.nvars() != 2 || p.is_zero() {
            return Err(SearchError::InvalidSupport("need a nonzero two-variable polynomial".into()));
        }
        Self::new(p.degree() as u32, p.support())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn swapped(&self) -> Support {
        let mut monomials: Vec<ExponentVector> = self.monomials.iter().map(ExponentVector::reversed).collect();
        monomials.sort();
        Support {
            degree: self.degree,
            monomials,
        }
    }

    /// Lexicographically no larger than its swap.
    pub fn is_canonical(&self) -> bool {
        self.monomials <= self.swapped().monomials
    }

    fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.monomials.iter().map(|e| (e.as_slice()[0], e.as_slice()[1]))
    }
}

/// The `(d+1) × N` matrix and right-hand side of the homogenized system.
pub fn linear_system(support: &Support) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
    let d = u64::from(support.degree);
    let binom = |n: u64, k: u64| BigRational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)));
    let a = (0..=d)
        .map(|i| {
            support
                .pairs()
                .map(|(a, b)| {
                    let (a, b) = (u64::from(a), u64::from(b));
                    if a <= i && i + b <= d {
                        binom(d - a - b, i - a)
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let rhs = (0..=d).map(|i| binom(d, i)).collect();
    (a, rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FeasibilityStatus {
    Infeasible,
    Point,
    Polytope,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityResult {
    pub status: FeasibilityStatus,
    /// A strictly positive solution, in the support's monomial order.
    pub coefficients: Option<Vec<BigRational>>,
    /// Dimension of the positive solution set.
    pub freedom: usize,
}

impl FeasibilityResult {
    fn infeasible() -> Self {
        FeasibilityResult {
            status: FeasibilityStatus::Infeasible,
            coefficients: None,
            freedom: 0,
        }
    }

    pub fn polynomial(&self, support: &Support) -> Option<Polynomial> {
        let c = self.coefficients.as_ref()?;
        Some(
            Polynomial::from_terms(2, support.monomials.iter().cloned().zip(c.iter().cloned()))
                .expect("two-variable support"),
        )
    }
}

/// Decides whether `support` carries a member of H(2, d) with exactly these
/// monomials, by maximizing `t` subject to the system and `c >= t`.
pub fn feasible(support: &Support) -> FeasibilityResult {
    let (a, b) = linear_system(support);
    let n = support.len();
    // Variables c' = c - t (n of them) and t.
    let lifted: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.push(row.iter().sum());
            r
        })
        .collect();
    let mut objective = vec![BigRational::zero(); n + 1];
    objective[n] = BigRational::from_integer(1.into());
    let (x, t) = match lp::maximize(&lifted, &b, &objective) {
        LpOutcome::Infeasible => return FeasibilityResult::infeasible(),
        LpOutcome::Unbounded => unreachable!("nonnegative solutions of a covering system are bounded"),
        LpOutcome::Optimal { x, value } => (x, value),
    };
    if !t.is_positive() {
        return FeasibilityResult::infeasible();
    }
    let coefficients: Vec<BigRational> = x[..n].iter().map(|v| v + &t).collect();
    let freedom = n - rank(&a);
    let result = FeasibilityResult {
        status: if freedom == 0 {
            FeasibilityStatus::Point
        } else {
            FeasibilityStatus::Polytope
        },
        coefficients: Some(coefficients),
        freedom,
    };
    let p = result.polynomial(support).expect("coefficients present");
    assert!(p.is_in_h(), "simplex returned a non-member for {:?}", support.monomials);
    result
}

/// Time limit and parallelism for a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub shards: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { time: None, shards: 1 }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn seconds(s: f64) -> Self {
        Budget {
            time: Some(Duration::from_secs_f64(s)),
            shards: 1,
        }
    }

    /// Reads [`BUDGET_ENV`]; unlimited when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<f64>().ok())
            .filter(|s| s.is_finite() && *s > 0.0)
            .map_or_else(Self::unlimited, Self::seconds)
    }

    pub fn with_shards(self, shards: usize) -> Self {
        Budget {
            shards: shards.max(1),
            ..self
        }
    }

    fn deadline(&self, start: Instant) -> Option<Instant> {
        self.time.map(|t| start + t)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Supports passed to the feasibility filter.
    pub supports_examined: u64,
    /// Supports discarded by the pruning rules.
    pub pruned: u64,
    /// Supports that needed the exact simplex.
    pub exact_checks: u64,
    pub elapsed_ms: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.supports_examined += other.supports_examined;
        self.pruned += other.pruned;
        self.exact_checks += other.exact_checks;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub support: Support,
    pub result: FeasibilityResult,
}

impl SearchHit {
    pub fn polynomial(&self) -> Polynomial {
        self.result.polynomial(&self.support).expect("hits are feasible")
    }
}

/// Result of [`enumerate_sharp`]: one hit per feasible canonical support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub degree: u32,
    pub terms: usize,
    pub hits: Vec<SearchHit>,
    pub exhaustive: bool,
    pub stats: SearchStats,
}

impl Enumeration {
    pub fn has_polytope(&self) -> bool {
        self.hits.iter().any(|h| h.result.status == FeasibilityStatus::Polytope)
    }

    /// One representative per equivalence class, from the canonical supports.
    pub fn representatives(&self) -> Vec<Polynomial> {
        self.hits.iter().map(SearchHit::polynomial).collect()
    }

    /// Every polynomial found, swap images included, sorted and deduplicated.
    /// Polytope hits contribute only their sample point.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = self
            .hits
            .iter()
            .flat_map(|h| {
                let p = h.polynomial();
                let q = p.swap_variables();
                [p, q]
            })
            .collect();
        out.sort_by_key(|p| p.to_json_string());
        out.dedup();
        out
    }
}

const PRIME: u64 = 4_294_967_291;

fn mul_mod(a: u64, b: u64) -> u64 {
    a * b % PRIME
}

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a, PRIME - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

/// Precomputed data for one degree.
struct Catalog {
    degree: u32,
    rows: usize,
    pairs: Vec<(u32, u32)>,
    swap: Vec<usize>,
    top: Vec<bool>,
    pure_x: Vec<bool>,
    pure_y: Vec<bool>,
    columns: Vec<Vec<u64>>,
    rhs: Vec<u64>,
    /// Exact integer columns and rhs, when the binomials fit comfortably.
    exact: Option<(Vec<Vec<i128>>, Vec<i128>)>,
}

impl Catalog {
    fn new(d: u32) -> Self {
        let mut monos: Vec<ExponentVector> = (0..=d)
            .flat_map(|a| (0..=d - a).map(move |b| ExponentVector::new(vec![a, b])))
            .collect();
        monos.sort();
        let pairs: Vec<(u32, u32)> = monos.iter().map(|e| (e.as_slice()[0], e.as_slice()[1])).collect();
        let swap = pairs
            .iter()
            .map(|&(a, b)| pairs.iter().position(|&p| p == (b, a)).expect("closed under swap"))
            .collect();
        let rows = d as usize + 1;
        let mut pascal = vec![vec![0u64; rows]; rows];
        for n in 0..rows {
            pascal[n][0] = 1;
            for k in 1..=n {
                pascal[n][k] = (pascal[n - 1][k - 1] + if k < n { pascal[n - 1][k] } else { 0 }) % PRIME;
            }
        }
        let columns = pairs
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (a as usize, b as usize);
                (0..rows)
                    .map(|i| {
                        if a <= i && i + b <= d as usize {
                            pascal[d as usize - a - b][i - a]
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let exact = (d <= 40).then(|| {
            let mut big = vec![vec![0i128; rows]; rows];
            for n in 0..rows {
                big[n][0] = 1;
                for k in 1..=n {
                    big[n][k] = big[n - 1][k - 1] + if k < n { big[n - 1][k] } else { 0 };
                }
            }
            let cols = pairs
                .iter()
                .map(|&(a, b)| {
                    let (a, b) = (a as usize, b as usize);
                    (0..rows)
                        .map(|i| if a <= i && i + b <= d as usize { big[d as usize - a - b][i - a] } else { 0 })
                        .collect()
                })
                .collect();
            (cols, big[d as usize].clone())
        });
        Catalog {
            degree: d,
            exact,
            rows,
            top: pairs.iter().map(|&(a, b)| a + b == d).collect(),
            pure_x: pairs.iter().map(|&(_, b)| b == 0).collect(),
            pure_y: pairs.iter().map(|&(a, _)| a == 0).collect(),
            rhs: pascal[d as usize].clone(),
            pairs,
            swap,
            columns,
        }
    }

    fn support(&self, idx: &[usize]) -> Support {
        Support {
            degree: self.degree,
            monomials: idx
                .iter()
                .map(|&i| ExponentVector::new(vec![self.pairs[i].0, self.pairs[i].1]))
                .collect(),
        }
    }
}

/// Incremental elimination mod `PRIME` along one enumeration branch.
struct Elimination {
    /// basis[k]: k-th reduced column (zero at earlier pivots), normalized at its pivot.
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    /// residual[k]: rhs reduced against the first k basis vectors.
    residual: Vec<Vec<u64>>,
}

impl Elimination {
    fn new(cat: &Catalog, n: usize) -> Self {
        Elimination {
            basis: Vec::with_capacity(n),
            pivots: Vec::with_capacity(n),
            residual: vec![cat.rhs.clone()],
        }
    }

    /// Reduces `col` against the basis; returns the pivot row if independent.
    fn reduce(&self, col: &[u64], out: &mut [u64]) -> Option<usize> {
        out.copy_from_slice(col);
        for (v, &p) in self.basis.iter().zip(&self.pivots) {
            let f = out[p];
            if f != 0 {
                for (o, &x) in out.iter_mut().zip(v) {
                    if x != 0 {
                        *o = (*o + PRIME - mul_mod(f, x)) % PRIME;
                    }
                }
            }
        }
        out.iter().position(|&x| x != 0)
    }

    /// Pushes a reduced column with pivot `p`; false means it was dependent.
    fn push(&mut self, mut v: Vec<u64>, pivot: Option<usize>) -> bool {
        let Some(p) = pivot else {
            return false;
        };
        let inv = inv_mod(v[p]);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv);
        }
        let prev = self.residual.last().expect("residual stack");
        let f = prev[p];
        let next = prev
            .iter()
            .zip(&v)
            .map(|(&r, &x)| (r + PRIME - mul_mod(f, x)) % PRIME)
            .collect();
        self.residual.push(next);
        self.basis.push(v);
        self.pivots.push(p);
        true
    }

    fn pop(&mut self) {
        self.basis.pop();
        self.pivots.pop();
        self.residual.pop();
    }

    /// True when the rhs is provably outside the span of the current basis
    /// plus a reduced column `v` with pivot `p`.
    fn rhs_outside(&self, v: &[u64], p: usize) -> bool {
        let prev = self.residual.last().expect("residual stack");
        let f = mul_mod(prev[p], inv_mod(v[p]));
        prev.iter().zip(v).any(|(&r, &x)| !(r + PRIME - mul_mod(f, x)).is_multiple_of(PRIME))
    }
}

struct Shard<'a> {
    cat: &'a Catalog,
    n: usize,
    stop: &'a AtomicBool,
    deadline: Option<Instant>,
    idx: Vec<usize>,
    /// Number of dependent columns pushed along the current branch.
    dependent: usize,
    elim: Elimination,
    stats: SearchStats,
    hits: Vec<SearchHit>,
    ticks: u64,
    scratch: Vec<u64>,
}

impl Shard<'_> {
    fn out_of_time(&mut self) -> bool {
        self.ticks += 1;
        if self.ticks.is_multiple_of(4096) {
            if let Some(dl) = self.deadline {
                if Instant::now() >= dl {
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        self.stop.load(Ordering::Relaxed)
    }

    fn passes_rules(&self) -> bool {
        let cat = self.cat;
        let any = |flags: &[bool]| self.idx.iter().any(|&i| flags[i]);
        any(&cat.top) && any(&cat.pure_x) && any(&cat.pure_y)
    }

    fn is_canonical(&self) -> bool {
        let mut sw: Vec<usize> = self.idx.iter().map(|&i| self.cat.swap[i]).collect();
        sw.sort_unstable();
        self.idx <= sw
    }

    fn descend(&mut self, start: usize) -> bool {
        let m = self.cat.pairs.len();
        let depth = self.idx.len();
        if depth + 1 == self.n {
            for j in start..m {
                if self.out_of_time() {
                    return false;
                }
                self.idx.push(j);
                self.leaf();
                self.idx.pop();
            }
            return true;
        }
        for j in start..=m - (self.n - depth) {
            let mut v = vec![0u64; self.cat.rows];
            let pivot = self.elim.reduce(&self.cat.columns[j], &mut v);
            let independent = self.elim.push(v, pivot);
            if !independent {
                self.dependent += 1;
            }
            self.idx.push(j);
            let finished = self.descend(j + 1);
            self.idx.pop();
            if independent {
                self.elim.pop();
            } else {
                self.dependent -= 1;
            }
            if !finished {
                return false;
            }
        }
        true
    }

    fn leaf(&mut self) {
        if !self.passes_rules() || !self.is_canonical() {
            self.stats.pruned += 1;
            return;
        }
        self.stats.supports_examined += 1;
        let last = *self.idx.last().expect("nonempty");
        let mut v = std::mem::take(&mut self.scratch);
        v.resize(self.cat.rows, 0);
        let pivot = self.elim.reduce(&self.cat.columns[last], &mut v);
        let ruled_out = self.dependent == 0 && pivot.is_some_and(|p| self.elim.rhs_outside(&v, p));
        self.scratch = v;
        if ruled_out {
            return;
        }
        if self.dependent == 0 && pivot.is_some() {
            // Full column rank: the solution, if any, is unique, and only its
            // signs matter.
            if let Some((cols, rhs)) = &self.cat.exact {
                let cols: Vec<&[i128]> = self.idx.iter().map(|&i| cols[i].as_slice()).collect();
                if let Some(positive) = unique_solution_positive(&cols, rhs) {
                    if !positive {
                        return;
                    }
                }
            }
        }
        self.stats.exact_checks += 1;
        let support = self.cat.support(&self.idx);
        let result = feasible(&support);
        if result.status != FeasibilityStatus::Infeasible {
            self.hits.push(SearchHit { support, result });
        }
    }
}

/// For a full-column-rank system, whether the solution exists and is
/// strictly positive. Fraction-free Gauss–Jordan in `i128`; `None` on
/// overflow or an inexact division, leaving the decision to the caller.
fn unique_solution_positive(cols: &[&[i128]], rhs: &[i128]) -> Option<bool> {
    let n = cols.len();
    let rows = rhs.len();
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|i| cols.iter().map(|c| c[i]).chain(std::iter::once(rhs[i])).collect())
        .collect();
    let mut prev = 1i128;
    for k in 0..n {
        let p = (k..rows).find(|&i| m[i][k] != 0)?;
        m.swap(k, p);
        let pivot = m[k][k];
        for i in 0..rows {
            if i == k {
                continue;
            }
            let factor = m[i][k];
            for j in 0..=n {
                if j == k {
                    continue;
                }
                let num = pivot.checked_mul(m[i][j])?.checked_sub(factor.checked_mul(m[k][j])?)?;
                if num % prev != 0 {
                    return None;
                }
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = pivot;
    }
    if m[n..].iter().any(|row| row[n] != 0) {
        return Some(false);
    }
    Some((0..n).all(|i| m[i][n] != 0 && (m[i][n] > 0) == (m[i][i] > 0)))
}

fn enumerate_until(d: u32, n: usize, budget: &Budget, deadline: Option<Instant>) -> Result<Enumeration, SearchError> {
    if n < 2 {
        return Err(SearchError::InvalidTermCount(n));
    }
    if d == 0 {
        return Err(SearchError::InvalidSupport("degree must be positive".into()));
    }
    let start = Instant::now();
    let cat = Catalog::new(d);
    let m = cat.pairs.len();
    let stop = AtomicBool::new(false);
    let run = |first: usize| -> (Vec<SearchHit>, SearchStats, bool) {
        if stop.load(Ordering::Relaxed) {
            return (Vec::new(), SearchStats::default(), false);
        }
        let mut shard = Shard {
            cat: &cat,
            n,
            stop: &stop,
            deadline,
            idx: Vec::with_capacity(n),
            dependent: 0,
            elim: Elimination::new(&cat, n),
            stats: SearchStats::default(),
            hits: Vec::new(),
            ticks: 0,
            scratch: Vec::new(),
        };
        let mut v = vec![0u64; cat.rows];
        let pivot = shard.elim.reduce(&cat.columns[first], &mut v);
        if !shard.elim.push(v, pivot) {
            shard.dependent += 1;
        }
        shard.idx.push(first);
        let finished = shard.descend(first + 1);
        (shard.hits, shard.stats, finished)
    };
    let firsts: Vec<usize> = if n <= m { (0..=m - n).collect() } else { Vec::new() };
    let parts: Vec<(Vec<SearchHit>, SearchStats, bool)> = if budget.shards > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(budget.shards)
            .build()
            .map_err(|e| SearchError::InvalidSupport(format!("thread pool: {e}")))?;
        pool.install(|| firsts.par_iter().map(|&f| run(f)).collect())
    } else {
        firsts.iter().map(|&f| run(f)).collect()
    };
    let mut stats = SearchStats::default();
    let mut hits = Vec::new();
    let mut exhaustive = true;
    for (h, s, finished) in parts {
        hits.extend(h);
        stats.absorb(&s);
        exhaustive &= finished;
    }
    stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(Enumeration {
        degree: d,
        terms: n,
        hits,
        exhaustive,
        stats,
    })
}

/// All feasible canonical supports of size `n` at degree `d`. Partial results
/// come back with `exhaustive = false` when the budget runs out.
pub fn enumerate_sharp(d: u32, n: usize, budget: &Budget) -> Result<Enumeration, SearchError> {
    enumerate_until(d, n, budget, budget.deadline(Instant::now()))
}

/// Smallest term count that can occur at degree `d` by the degree bound
/// `d <= 2N - 3`.
pub fn term_lower_bound(d: u32) -> usize {
    (d as usize + 4) / 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalTerms {
    pub degree: u32,
    pub n_min: usize,
    /// Term counts below `n_min` that were searched exhaustively and found empty.
    pub empty_below: Vec<usize>,
    pub enumeration: Enumeration,
}

/// Searches `N = from, from+1, ...` until some support is feasible. `from`
/// defaults to [`term_lower_bound`]; pass `Some(2)` to confirm the bound by
/// search as well.
pub fn minimal_terms(d: u32, from: Option<usize>, budget: &Budget) -> Result<MinimalTerms, SearchError> {
    let deadline = budget.deadline(Instant::now());
    let first = from.unwrap_or_else(|| term_lower_bound(d)).max(2);
    if first > d as usize + 1 {
        return Err(SearchError::InvalidTermCount(first));
    }
    let mut empty_below = Vec::new();
    for n in first..=d as usize + 1 {
        let e = enumerate_until(d, n, budget, deadline)?;
        if !e.hits.is_empty() {
            return Ok(MinimalTerms {
                degree: d,
                n_min: n,
                empty_below,
                enumeration: e,
            });
        }
        if !e.exhaustive {
            return Err(SearchError::BudgetExceeded);
        }
        empty_below.push(n);
    }
    unreachable!("(x + y)^d has d + 1 terms")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UniquenessStatus {
    Unique,
    UniqueUpToEquivalence,
    Fails,
    Unknown,
}

/// Degree, minimal term count, class representatives and exhaustiveness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpCertificate {
    pub degree: u32,
    pub min_terms: usize,
    pub representatives: Vec<Polynomial>,
    pub exhaustive: bool,
    pub polytope: bool,
    pub empty_below: Vec<usize>,
    pub stats: SearchStats,
}

impl SharpCertificate {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "min_terms": self.min_terms,
            "representatives": self.representatives.iter().map(Polynomial::to_json_value).collect::<Vec<_>>(),
            "representatives_text": self.representatives.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "exhaustive": self.exhaustive,
            "polytope": self.polytope,
            "empty_below": self.empty_below,
            "search_stats": self.stats,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessReport {
    pub status: UniquenessStatus,
    pub distinct: usize,
    pub classes: usize,
    pub certificate: Option<SharpCertificate>,
}

impl UniquenessReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "status": self.status,
            "distinct_polynomials": self.distinct,
            "classes": self.classes,
            "certificate": self.certificate.as_ref().map(SharpCertificate::to_json_value),
        })
    }
}

/// Classifies degree `d`: one sharp polynomial, one swap class of two, or
/// more (including any positive-dimensional family). Fails can be decided
/// from partial results; the other outcomes need an exhaustive search.
pub fn uniqueness_status(d: u32, budget: &Budget) -> Result<UniquenessReport, SearchError> {
    let mt = match minimal_terms(d, None, budget) {
        Ok(mt) => mt,
        Err(SearchError::BudgetExceeded) => {
            return Ok(UniquenessReport {
                status: UniquenessStatus::Unknown,
                distinct: 0,
                classes: 0,
                certificate: None,
            })
        }
        Err(e) => return Err(e),
    };
    let e = &mt.enumeration;
    let distinct = e.polynomials().len();
    let classes = e.hits.len();
    let polytope = e.has_polytope();
    let status = if polytope || classes >= 2 {
        UniquenessStatus::Fails
    } else if !e.exhaustive {
        UniquenessStatus::Unknown
    } else if distinct == 1 {
        UniquenessStatus::Unique
    } else {
        UniquenessStatus::UniqueUpToEquivalence
    };
    Ok(UniquenessReport {
        status,
        distinct,
        classes,
        certificate: Some(SharpCertificate {
            degree: d,
            min_terms: mt.n_min,
            representatives: e.representatives(),
            exhaustive: e.exhaustive,
            polytope,
            empty_below: mt.empty_below,
            stats: e.stats,
        }),
    })
}
