use num_bigint::BigInt;
use proptest::prelude::*;

use qpv_core::partition::{ColouredPartition, Part};
use qpv_core::{
    pochhammer, Bound, Count, DilationSpec, Monomial, PartitionSystem, PochhammerBase, Series,
    Variables,
};

fn vars() -> Variables {
    Variables::acd()
}

/// Terms with colour degree at most the q-degree, so every dilation used
/// below maps them to nonnegative q-powers.
fn arb_terms(max_q: u32) -> impl Strategy<Value = Vec<(u32, [u32; 3], i64)>> {
    prop::collection::vec(
        (0..=max_q, 0u32..3, 0u32..3, 0u32..3, -5i64..=5).prop_map(|(q, a, c, d, coef)| {
            let a = a.min(q);
            let c = c.min(q - a);
            let d = d.min(q - a - c);
            (q, [a, c, d], coef)
        }),
        0..7,
    )
}

fn build(truncation: u32, terms: &[(u32, [u32; 3], i64)]) -> Series {
    Series::from_terms(
        &vars(),
        truncation,
        terms
            .iter()
            .filter(|(q, _, _)| *q <= truncation)
            .map(|(q, e, c)| (Monomial::new(*q, e), BigInt::from(*c))),
    )
    .unwrap()
}

fn arb_series() -> impl Strategy<Value = Series> {
    (1u32..=8).prop_flat_map(|n| arb_terms(n).prop_map(move |t| build(n, &t)))
}

fn arb_unit() -> impl Strategy<Value = Series> {
    (1u32..=8, prop::bool::ANY).prop_flat_map(|(n, neg)| {
        arb_terms(n).prop_map(move |t| {
            let mut t: Vec<_> = t.into_iter().filter(|(q, _, _)| *q > 0).collect();
            t.push((0, [0, 0, 0], if neg { -1 } else { 1 }));
            build(n, &t)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn addition_and_multiplication_commute(s in arb_series(), t in arb_series()) {
        prop_assert_eq!(&s + &t, &t + &s);
        prop_assert_eq!(&s * &t, &t * &s);
    }

    #[test]
    fn associative_and_distributive(s in arb_series(), t in arb_series(), u in arb_series()) {
        prop_assert_eq!(&(&s + &t) + &u, &s + &(&t + &u));
        prop_assert_eq!(&(&s * &t) * &u, &s * &(&t * &u));
        prop_assert_eq!(&s * &(&t + &u), &(&s * &t) + &(&s * &u));
    }

    #[test]
    fn unit_inverse_round_trip(s in arb_series(), u in arb_unit()) {
        let inv = u.invert_unit().unwrap();
        let n = s.truncation().min(u.truncation());
        prop_assert_eq!(&(&s * &inv) * &u, s.truncate(n));
        prop_assert_eq!(&u * &inv, Series::one(&vars(), u.truncation()));
    }

    #[test]
    fn pochhammer_step(neg in prop::bool::ANY, q in 0u32..3, a in 0u32..2, d in 0u32..2,
                       r in 1u32..4, k in 0u32..6, n in 1u32..12) {
        let v = vars();
        let base = PochhammerBase::new(neg, Monomial::new(q, &[a, 0, d]));
        let next = pochhammer(&v, &base, r, Count::Finite(k + 1), n).unwrap();
        let coef = BigInt::from(if neg { 1 } else { -1 });
        let factor = base.monomial.mul(&Monomial::q_power(r * k, &v));
        let step = pochhammer(&v, &base, r, Count::Finite(k), n).unwrap().mul_binomial(&coef, &factor);
        prop_assert_eq!(next, step);
    }

    #[test]
    fn substitution_is_multiplicative(s in arb_series(), t in arb_series(), which in 0usize..3) {
        let spec = [
            DilationSpec::new(2, &[("a", -1), ("d", 1)]),
            DilationSpec::new(4, &[("a", -3), ("c", -2), ("d", 3)]),
            DilationSpec::new(3, &[("a", -1), ("d", 1)]).eliminating(&["c"]),
        ][which].clone();
        let n = s.truncation().min(t.truncation());
        let lhs = (&s * &t).substitute(&spec, n).unwrap();
        let rhs = &s.substitute(&spec, n).unwrap() * &t.substitute(&spec, n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficients_add(s in arb_series(), t in arb_series()) {
        let sum = &s + &t;
        for (m, _) in s.terms().chain(t.terms()) {
            if m.q_exp() <= sum.truncation() {
                prop_assert_eq!(sum.coeff(m).unwrap(), s.coeff(m).unwrap() + t.coeff(m).unwrap());
            }
        }
    }

    #[test]
    fn json_round_trip(s in arb_series()) {
        prop_assert_eq!(Series::from_json(&s.to_json()).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tails_of_admissible_partitions_are_admissible(n in 0u32..12) {
        let sys = PartitionSystem::primc();
        for p in sys.enumerate_exact(n) {
            for i in 0..p.parts.len() {
                let tail = ColouredPartition { parts: p.parts[i..].to_vec() };
                prop_assert!(sys.is_admissible(&tail));
            }
        }
    }

    #[test]
    fn bounded_series_grow_with_the_bound(k in 1u32..6, x in 0usize..4, k2 in 0u32..3, x2 in 0usize..4) {
        let sys = PartitionSystem::primc();
        let v = vars();
        let lo = Part { value: k, colour: x };
        let hi = if (k + k2, x2) >= (k, x) { Part { value: k + k2, colour: x2 } } else { lo };
        let small = sys.generating_series_bounded(lo, Bound::AtMost, &v, 10).unwrap();
        let big = sys.generating_series_bounded(hi, Bound::AtMost, &v, 10).unwrap();
        prop_assert!((&big - &small).has_nonnegative_coefficients());
    }
}
