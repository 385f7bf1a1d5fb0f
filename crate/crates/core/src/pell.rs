//! Pell equations `d² - λk² = 1` and bounded scans of `a² - D b² = N`.
//!
//! The degree sequence `7, 97, 1351, ...` comes from `λ = 12`: those odd `d`
//! are exactly the degrees `2r + 1` where two consecutive coefficients of the
//! sharp family stand in ratio 2.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::PellError;

/// `(d, k)` with `d² - λk² = 1`, the `index`-th power of the fundamental unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellSolution {
    pub d: BigInt,
    pub k: BigInt,
    pub lambda: u64,
    pub index: u32,
}

impl PellSolution {
    pub fn satisfies_equation(&self) -> bool {
        &self.d * &self.d - BigInt::from(self.lambda) * &self.k * &self.k == BigInt::one()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({"d": self.d.to_string(), "k": self.k.to_string(), "m": self.index})
    }
}

/// `a² - D b² = N` with `a, b > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralizedPellSolution {
    pub a: u64,
    pub b: u64,
    pub discriminant: u64,
    pub rhs: i64,
}

fn is_square(v: u64) -> bool {
    let r = v.sqrt();
    r * r == v
}

fn check_lambda(lambda: u64) -> Result<(), PellError> {
    if lambda < 2 || is_square(lambda) {
        return Err(PellError::InvalidLambda(lambda.to_string()));
    }
    Ok(())
}

/// Minimal positive solution from the continued fraction of `√λ`.
pub fn fundamental_solution(lambda: u64) -> Result<PellSolution, PellError> {
    check_lambda(lambda)?;
    let lam = BigInt::from(lambda);
    let a0 = BigInt::from(lambda.sqrt());
    let (mut m, mut q, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    // Convergents h_i / k_i.
    let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    loop {
        if &h * &h - &lam * &k * &k == BigInt::one() {
            return Ok(PellSolution {
                d: h,
                k,
                lambda,
                index: 1,
            });
        }
        m = &q * &a - &m;
        q = (&lam - &m * &m) / &q;
        a = (&a0 + &m) / &q;
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
}

/// The solutions with indices `1..=count`, by the recurrence
/// `d' = d₁d + λk₁k`, `k' = d₁k + k₁d`.
pub fn solutions(lambda: u64, count: u32) -> Result<Vec<PellSolution>, PellError> {
    let first = fundamental_solution(lambda)?;
    let lam = BigInt::from(lambda);
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = first.clone();
    for index in 1..=count {
        if index > 1 {
            let d = &first.d * &cur.d + &lam * &first.k * &cur.k;
            let k = &first.d * &cur.k + &first.k * &cur.d;
            cur = PellSolution { d, k, lambda, index };
        }
        out.push(cur.clone());
    }
    Ok(out)
}

pub fn solution_at(lambda: u64, m: u32) -> Result<PellSolution, PellError> {
    if m == 0 {
        return Err(PellError::InvalidIndex);
    }
    Ok(solutions(lambda, m)?.pop().expect("m >= 1 solutions were generated"))
}

/// If `d² - λk² = 1` for some integer `k > 0`, returns `k`.
pub fn k_for_degree(lambda: u64, d: &BigInt) -> Option<BigInt> {
    let num = d * d - BigInt::one();
    let lam = BigInt::from(lambda);
    if !num.is_positive() || !(&num % &lam).is_zero() {
        return None;
    }
    let k2 = num / lam;
    let k = k2.sqrt();
    (&k * &k == k2).then_some(k)
}

/// `d_m mod 4` for `λ = 12`: 3 for odd `m`, 1 for even `m`.
pub fn congruence_class(m: u32) -> Result<u32, PellError> {
    let sol = solution_at(12, m)?;
    let r = sol.d.mod_floor(&BigInt::from(4u8));
    Ok(r.try_into().expect("residue mod 4 fits in u32"))
}

/// All solutions of `a² - D b² = N` with `1 <= b <= b_bound`, by exact scan.
pub fn generalized_solutions(
    discriminant: u64,
    rhs: i64,
    b_bound: u64,
) -> Result<Vec<GeneralizedPellSolution>, PellError> {
    if discriminant == 0 || is_square(discriminant) {
        return Err(PellError::InvalidDiscriminant(discriminant.to_string()));
    }
    let mut out = Vec::new();
    for b in 1..=b_bound {
        let v = i128::from(rhs) + i128::from(discriminant) * i128::from(b) * i128::from(b);
        if v <= 0 {
            continue;
        }
        let a = (v as u128).sqrt();
        if a * a == v as u128 {
            out.push(GeneralizedPellSolution {
                a: a as u64,
                b,
                discriminant,
                rhs,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive oracle: smallest k >= 1 with λk² + 1 a perfect square.
    fn brute_fundamental(lambda: u64) -> (u64, u64) {
        (1u64..)
            .find_map(|k| {
                let v = lambda * k * k + 1;
                is_square(v).then(|| (v.sqrt(), k))
            })
            .unwrap()
    }

    #[test]
    fn fundamental_examples() {
        let s = fundamental_solution(12).unwrap();
        assert_eq!((s.d, s.k), (BigInt::from(7), BigInt::from(2)));
        let s = fundamental_solution(2).unwrap();
        assert_eq!((s.d, s.k), (BigInt::from(3), BigInt::from(2)));
        let s = fundamental_solution(3).unwrap();
        assert_eq!((s.d, s.k), (BigInt::from(2), BigInt::from(1)));
    }

    #[test]
    fn continued_fraction_matches_scan() {
        for lambda in 2..=20u64 {
            if is_square(lambda) {
                continue;
            }
            let s = fundamental_solution(lambda).unwrap();
            let (d, k) = brute_fundamental(lambda);
            assert_eq!((s.d, s.k), (BigInt::from(d), BigInt::from(k)), "lambda {lambda}");
        }
    }

    #[test]
    fn large_lambda() {
        // 61 has the famously large fundamental solution.
        let s = fundamental_solution(61).unwrap();
        assert_eq!(s.d, BigInt::from(1766319049u64));
        assert_eq!(s.k, BigInt::from(226153980u64));
    }

    #[test]
    fn rejects_bad_lambda() {
        assert!(fundamental_solution(16).is_err());
        assert!(fundamental_solution(1).is_err());
        assert!(fundamental_solution(0).is_err());
        assert!(solution_at(12, 0).is_err());
    }

    #[test]
    fn degree_sequence_for_twelve() {
        let ds: Vec<String> = solutions(12, 5).unwrap().iter().map(|s| s.d.to_string()).collect();
        assert_eq!(ds, ["7", "97", "1351", "18817", "262087"]);
        assert_eq!(solution_at(12, 2).unwrap().k, BigInt::from(28));
    }

    #[test]
    fn powers_match_recurrence() {
        // (d1 + k1√λ)^m expanded by the binomial theorem, split into rational
        // and √λ parts.
        for lambda in [2u64, 3, 5, 6, 7, 8, 10, 11, 12, 13] {
            let f = fundamental_solution(lambda).unwrap();
            for m in 2..=10u32 {
                let mut d = BigInt::zero();
                let mut k = BigInt::zero();
                for i in 0..=m {
                    let binom = num_integer::binomial(BigInt::from(m), BigInt::from(i));
                    let term = binom * f.d.pow(m - i) * f.k.pow(i) * BigInt::from(lambda).pow(i / 2);
                    if i % 2 == 0 {
                        d += term;
                    } else {
                        k += term;
                    }
                }
                let s = solution_at(lambda, m).unwrap();
                assert_eq!((s.d.clone(), s.k.clone()), (d, k));
                assert!(s.satisfies_equation());
            }
        }
    }

    #[test]
    fn increasing_and_exact() {
        for lambda in [2u64, 3, 5, 6, 7, 8, 10, 11, 12, 13] {
            let sols = solutions(lambda, 10).unwrap();
            assert!(sols.iter().all(PellSolution::satisfies_equation));
            assert!(sols.windows(2).all(|w| w[0].d < w[1].d && w[0].k < w[1].k));
        }
    }

    #[test]
    fn twelve_degrees_are_odd_with_alternating_residue() {
        for m in 1..=20u32 {
            let s = solution_at(12, m).unwrap();
            assert!(s.d.is_odd());
            assert_eq!(congruence_class(m).unwrap(), if m % 2 == 1 { 3 } else { 1 });
        }
        assert_eq!(congruence_class(3).unwrap(), 3);
        assert_eq!(1351 % 4, 3);
    }

    #[test]
    fn k_lookup() {
        assert_eq!(k_for_degree(12, &BigInt::from(97)), Some(BigInt::from(28)));
        assert_eq!(k_for_degree(12, &BigInt::from(5)), None);
        assert_eq!(k_for_degree(12, &BigInt::from(1)), None);
    }

    #[test]
    fn generalized_scan() {
        let bs: Vec<u64> = generalized_solutions(8, -7, 64).unwrap().iter().map(|s| s.b).collect();
        assert_eq!(bs, [1, 2, 4, 11, 23, 64]);
        let one = generalized_solutions(8, -7, 1).unwrap();
        assert_eq!((one[0].a, one[0].b), (1, 1));
        let bs: Vec<u64> = generalized_solutions(8, -7, 23).unwrap().iter().map(|s| s.b).collect();
        assert_eq!(bs, [1, 2, 4, 11, 23]);
        for s in generalized_solutions(8, -7, 1000).unwrap() {
            assert_eq!(i128::from(s.a).pow(2) - 8 * i128::from(s.b).pow(2), -7);
        }
        assert!(generalized_solutions(9, -7, 10).is_err());
    }
}
