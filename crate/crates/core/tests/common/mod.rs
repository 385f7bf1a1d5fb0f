//! Naive reference search: every subset of monomials, no pruning, no swap
//! reduction, and feasibility decided by enumerating basic solutions of the
//! affine system `p(x, 1 - x) = 1` rather than by the simplex.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use sharpmap::linalg::{rank, solve};
use sharpmap::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OracleHit {
    /// Unique solution: support and the polynomial.
    Point(Vec<(u32, u32)>, String),
    /// Positive-dimensional: support only.
    Polytope(Vec<(u32, u32)>),
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Column of `x^a (1-x)^b` in the basis `1, x, ..., x^d`.
fn column(a: u32, b: u32, d: u32) -> Vec<BigRational> {
    let mut col = vec![BigRational::zero(); d as usize + 1];
    for k in 0..=b {
        let c = num_integer::binomial(BigInt::from(b), BigInt::from(k));
        let c = if k % 2 == 1 { -c } else { c };
        col[(a + k) as usize] += BigRational::from_integer(c);
    }
    col
}

/// All members of H(2, d) with exactly `n` terms, one entry per support.
pub fn naive_sharp(d: u32, n: usize) -> BTreeSet<OracleHit> {
    let monos: Vec<(u32, u32)> = (0..=d).flat_map(|a| (0..=d - a).map(move |b| (a, b))).collect();
    let cols: Vec<Vec<BigRational>> = monos.iter().map(|&(a, b)| column(a, b, d)).collect();
    let mut rhs = vec![BigRational::zero(); d as usize + 1];
    rhs[0] = BigRational::from_integer(1.into());
    let mut out = BTreeSet::new();
    for subset in subsets(monos.len(), n) {
        let rows = |idx: &[usize]| -> Vec<Vec<BigRational>> {
            (0..=d as usize).map(|r| idx.iter().map(|&i| cols[subset[i]][r].clone()).collect()).collect()
        };
        // Vertices of {c >= 0 : A c = e_0}: nonnegative unique solutions on column subsets.
        let mut vertices: Vec<Vec<BigRational>> = Vec::new();
        for size in 1..=n {
            for basis in subsets(n, size) {
                let Some((x, free)) = solve(&rows(&basis), &rhs) else { continue };
                if free != 0 || x.iter().any(|v| v.is_negative()) {
                    continue;
                }
                let mut full = vec![BigRational::zero(); n];
                for (k, &i) in basis.iter().enumerate() {
                    full[i] = x[k].clone();
                }
                if !vertices.contains(&full) {
                    vertices.push(full);
                }
            }
        }
        if vertices.is_empty() {
            continue;
        }
        let count = BigRational::from_integer(BigInt::from(vertices.len()));
        let centroid: Vec<BigRational> =
            (0..n).map(|i| vertices.iter().map(|v| v[i].clone()).sum::<BigRational>() / &count).collect();
        if !centroid.iter().all(|c| c.is_positive()) {
            continue;
        }
        let support: Vec<(u32, u32)> = subset.iter().map(|&i| monos[i]).collect();
        if support.iter().all(|&(a, b)| a + b < d) {
            continue;
        }
        let all: Vec<usize> = (0..n).collect();
        if rank(&rows(&all)) == n {
            let p = Polynomial::from_terms(
                2,
                support.iter().zip(&centroid).map(|(&(a, b), c)| ([a, b], c.clone())),
            )
            .unwrap();
            assert!(p.is_in_h());
            out.insert(OracleHit::Point(sorted(support), p.to_json_string()));
        } else {
            out.insert(OracleHit::Polytope(sorted(support)));
        }
    }
    out
}

fn sorted(mut v: Vec<(u32, u32)>) -> Vec<(u32, u32)> {
    v.sort();
    v
}

/// The library's enumeration expanded by the swap, in the oracle's format.
pub fn library_sharp(d: u32, n: usize) -> BTreeSet<OracleHit> {
    let e = sharpmap::search::enumerate_sharp(d, n, &sharpmap::search::Budget::unlimited()).unwrap();
    assert!(e.exhaustive);
    let mut out = BTreeSet::new();
    for h in &e.hits {
        let support: Vec<(u32, u32)> =
            h.support.monomials().iter().map(|m| (m.as_slice()[0], m.as_slice()[1])).collect();
        let swapped: Vec<(u32, u32)> = support.iter().map(|&(a, b)| (b, a)).collect();
        match h.result.status {
            sharpmap::search::FeasibilityStatus::Point => {
                let p = h.polynomial();
                out.insert(OracleHit::Point(sorted(support), p.to_json_string()));
                out.insert(OracleHit::Point(sorted(swapped), p.swap_variables().to_json_string()));
            }
            _ => {
                out.insert(OracleHit::Polytope(sorted(support)));
                out.insert(OracleHit::Polytope(sorted(swapped)));
            }
        }
    }
    out
}
