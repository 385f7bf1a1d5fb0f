//! The sharp family `f_d` and the even-degree sharp families built from it.
//!
//! `f_d` is the sum of the `d`-th powers of the roots of `t² - xt - y`, plus
//! `(-1)^{d+1} y^d`. The power sums `g_d` satisfy `g_d = x g_{d-1} + y g_{d-2}`
//! with `g_0 = 2`, `g_1 = x`, which keeps everything in integers. Writing
//! `d = 2r + 1`,
//!
//! ```text
//! f_d = Σ_{s=0..r} K(r, s) x^{d-2s} y^s + y^d,   K(r, s) = (2r+1)/s · C(2r-s, s-1).
//! ```

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::FamilyError;
use crate::poly::{ExponentVector, Polynomial};

/// How a family member was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    F,
    EvenU { j: u32, l: u32, pick_x: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpFamilyElement {
    pub degree: u32,
    pub poly: Polynomial,
    pub provenance: Provenance,
}

/// Coefficients of `g_d` indexed by the power of `y`: `g_d = Σ c_s x^{d-2s} y^s`.
fn power_sum_coefficients(d: u32) -> Vec<BigInt> {
    let mut prev = vec![BigInt::from(2)]; // g_0
    if d == 0 {
        return prev;
    }
    let mut cur = vec![BigInt::one()]; // g_1 = x
    for n in 2..=d {
        let len = n as usize / 2 + 1;
        let mut next = vec![BigInt::zero(); len];
        for (s, c) in cur.iter().enumerate() {
            next[s] += c;
        }
        for (s, c) in prev.iter().enumerate() {
            next[s + 1] += c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `f_d` for `d >= 1`.
pub fn f(d: u32) -> Result<Polynomial, FamilyError> {
    if d == 0 {
        return Err(FamilyError::InvalidDegree(0));
    }
    let mut p = Polynomial::zero(2);
    for (s, c) in power_sum_coefficients(d).into_iter().enumerate() {
        let s = s as u32;
        p.add_term(ExponentVector::new(vec![d - 2 * s, s]), BigRational::from_integer(c));
    }
    let sign = if d % 2 == 1 { 1 } else { -1 };
    p.add_term(ExponentVector::new(vec![0, d]), BigRational::from_integer(BigInt::from(sign)));
    Ok(p)
}

/// `K(r, s) = (2r+1)/s · C(2r-s, s-1)` for `1 <= s <= r`.
pub fn k_coefficient(r: u64, s: u64) -> Result<BigInt, FamilyError> {
    if s < 1 || s > r {
        return Err(FamilyError::OutOfRange { r, s });
    }
    let num = BigInt::from(2 * r + 1) * binomial(BigInt::from(2 * r - s), BigInt::from(s - 1));
    let den = BigInt::from(s);
    assert!((&num % &den).is_zero(), "K({r}, {s}) is not an integer");
    Ok(num / den)
}

/// `K(r, s+1) / K(r, s)`, cross-checked against
/// `(2r-2s+1)(2r-2s) / ((s+1)(2r-s))`.
pub fn coefficient_ratio(r: u64, s: u64) -> Result<BigRational, FamilyError> {
    if s < 1 || s + 1 > r {
        return Err(FamilyError::OutOfRange { r, s });
    }
    let ratio = BigRational::new(k_coefficient(r, s + 1)?, k_coefficient(r, s)?);
    let closed = BigRational::new(
        BigInt::from((2 * r - 2 * s + 1) * (2 * r - 2 * s)),
        BigInt::from((s + 1) * (2 * r - s)),
    );
    assert_eq!(ratio, closed, "coefficient ratio identity failed at r = {r}, s = {s}");
    Ok(ratio)
}

/// `u = (f_{2j+1} - m) + m·f_{2l+1}` where `m` is `x^{2j+1}` (or `y^{2j+1}`).
/// Degree `2(j+l+1)`, `j + l + 3` terms.
pub fn even_u(j: u32, l: u32, pick_x: bool) -> Polynomial {
    let base = f(2 * j + 1).expect("odd degree is positive");
    let tail = f(2 * l + 1).expect("odd degree is positive");
    let exp = if pick_x {
        ExponentVector::new(vec![2 * j + 1, 0])
    } else {
        ExponentVector::new(vec![0, 2 * j + 1])
    };
    let one = BigRational::one();
    let m = Polynomial::monomial(exp.clone(), one.clone());
    &(&base - &m) + &tail.mul_monomial(&exp, &one)
}

/// `k` pairwise-inequivalent members of H(2, 2k), each with `k + 2` terms.
pub fn even_family(k: u32) -> Result<Vec<SharpFamilyElement>, FamilyError> {
    if k == 0 {
        return Err(FamilyError::InvalidK);
    }
    let members: Vec<SharpFamilyElement> = (0..k)
        .map(|j| {
            let l = k - 1 - j;
            SharpFamilyElement {
                degree: 2 * k,
                poly: even_u(j, l, true),
                provenance: Provenance::EvenU { j, l, pick_x: true },
            }
        })
        .collect();
    for (i, a) in members.iter().enumerate() {
        for b in &members[..i] {
            assert!(
                !a.poly.equivalent(&b.poly).expect("two variables"),
                "even family produced equivalent members"
            );
        }
    }
    Ok(members)
}

/// `f_d` wrapped with its provenance.
pub fn f_member(d: u32) -> Result<SharpFamilyElement, FamilyError> {
    Ok(SharpFamilyElement {
        degree: d,
        poly: f(d)?,
        provenance: Provenance::F,
    })
}
