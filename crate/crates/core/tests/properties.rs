use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use sharpmap::gaps::{decompose_target, gap_witness, v, w};
use sharpmap::search::Support;
use sharpmap::{families, ExponentVector, Polynomial};

fn coeff() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly(nvars: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), coeff()), 0..8).prop_map(move |terms| {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            p.add_term(ExponentVector::new(e), c);
        }
        p
    })
}

fn small_h() -> impl Strategy<Value = Polynomial> {
    prop_oneof![
        (0u32..8).prop_map(|k| families::f(2 * k + 1).unwrap()),
        (0u32..4, 0u32..4, any::<bool>()).prop_map(|(j, l, x)| families::even_u(j, l, x)),
        (2u32..5).prop_map(|n| Polynomial::linear_sum(n as usize)),
    ]
}

proptest! {
    #[test]
    fn equivalence_is_an_equivalence(p in poly(2, 4), q in poly(2, 4)) {
        prop_assert!(p.equivalent(&p).unwrap());
        prop_assert_eq!(p.equivalent(&q).unwrap(), q.equivalent(&p).unwrap());
        let ps = p.swap_variables();
        prop_assert!(p.equivalent(&ps).unwrap());
        // p ~ swap(p) and swap(p) ~ q imply p ~ q.
        if ps.equivalent(&q).unwrap() {
            prop_assert!(p.equivalent(&q).unwrap());
        }
        prop_assert_eq!(ps.swap_variables(), p);
    }

    #[test]
    fn restriction_is_linear(p in poly(3, 3), q in poly(3, 3), a in coeff()) {
        let lhs = (&p.scale(&a) + &q).restrict_to_hyperplane();
        let rhs = &p.restrict_to_hyperplane().scale(&a) + &q.restrict_to_hyperplane();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn restriction_agrees_with_evaluation(p in poly(2, 5), t in coeff()) {
        let r = p.restrict_to_hyperplane();
        let one = BigRational::from_integer(1.into());
        prop_assert_eq!(r.evaluate(std::slice::from_ref(&t)), p.evaluate(&[t.clone(), one - t]));
    }

    #[test]
    fn json_round_trip(p in poly(3, 6)) {
        let s = p.to_json_string();
        let back = Polynomial::from_json_str(&s).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_json_string(), s);
    }

    #[test]
    fn swap_canonical_form(pairs in prop::collection::btree_set((0u32..6, 0u32..6), 1..7)) {
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().filter(|&(a, b)| a + b <= 6).collect();
        pairs.extend([(6, 0), (0, 3)]);
        pairs.sort();
        pairs.dedup();
        let s = Support::from_pairs(6, &pairs).unwrap();
        let t = s.swapped();
        prop_assert_eq!(t.swapped(), s.clone());
        prop_assert_eq!(t.len(), s.len());
        // Exactly one of S, swap(S) is canonical unless they coincide.
        if s == t {
            prop_assert!(s.is_canonical());
        } else {
            prop_assert!(s.is_canonical() != t.is_canonical());
        }
    }

    #[test]
    fn operators_preserve_h(p in small_h(), ops in prop::collection::vec(any::<bool>(), 0..4)) {
        let n = p.nvars();
        let mut cur = p;
        for use_w in ops {
            let before = cur.term_count();
            let top = cur
                .support()
                .into_iter()
                .filter(|e| e.is_pure_last())
                .max_by_key(|e| e.total_degree())
                .unwrap();
            let fresh = (0..n)
                .map(|i| top.mul(&ExponentVector::unit(n, i)))
                .filter(|e| !cur.contains(e))
                .count();
            cur = if use_w { w(&cur).unwrap() } else { v(&cur).unwrap() };
            // W empties the top pure term; V keeps half of it.
            let expected = if use_w { before - 1 + fresh } else { before + fresh };
            prop_assert_eq!(cur.term_count(), expected);
            prop_assert!(cur.is_in_h());
        }
    }

    #[test]
    fn gap_witness_has_requested_size(n in 2u64..7, extra in 0u64..40) {
        let big_n = sharpmap::gaps::t(n) + extra;
        let (j, k) = decompose_target(n, big_n).unwrap();
        prop_assert_eq!(n + j * (n - 1) + k * n, big_n);
        let g = gap_witness(n, big_n).unwrap();
        prop_assert_eq!(g.poly.term_count() as u64, big_n);
        prop_assert!(g.poly.is_in_h());
    }
}
