use proptest::prelude::*;
use schreier::ordinal::{Kind, Ordinal, Scheme};

// CNF ordinals with small coefficients and exponent trees of depth <= 2.
fn ordinal() -> impl Strategy<Value = Ordinal> {
    let leaf = (0u64..5).prop_map(Ordinal::nat);
    leaf.prop_recursive(2, 12, 3, |inner| {
        prop::collection::vec((inner, 1u64..4), 1..4).prop_map(|mut terms| {
            terms.sort_by(|a, b| b.0.cmp(&a.0));
            terms.dedup_by(|a, b| a.0 == b.0);
            Ordinal::from_terms(terms).expect("decreasing exponents")
        })
    })
}

fn positive() -> impl Strategy<Value = Ordinal> {
    ordinal().prop_filter("nonzero", |x| !x.is_zero())
}

// Limits whose exponents stay below w^2, so sequences are cheap to compute.
fn small_limit() -> impl Strategy<Value = Ordinal> {
    (0u64..3, 0u64..3, 1u64..3, 0u64..3).prop_map(|(a, b, c, d)| {
        let w = Ordinal::omega();
        let head = Ordinal::omega_power(w.mul_nat(a).add(&Ordinal::nat(b + 1))).mul_nat(d);
        head.add(&Ordinal::omega_power(w.mul_nat(c).add(&Ordinal::nat(b))))
    })
}

proptest! {
    #[test]
    fn terms_are_in_normal_form(x in ordinal()) {
        for pair in x.terms().windows(2) {
            prop_assert!(pair[0].exponent > pair[1].exponent);
        }
        prop_assert!(x.terms().iter().all(|t| t.coefficient >= 1));
    }

    #[test]
    fn display_parses_back(x in ordinal()) {
        let back: Ordinal = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn order_is_total_and_transitive(x in ordinal(), y in ordinal(), z in ordinal()) {
        prop_assert_eq!(x.cmp(&y), y.cmp(&x).reverse());
        if x <= y && y <= z {
            prop_assert!(x <= z);
        }
    }

    #[test]
    fn addition_is_associative(x in ordinal(), y in ordinal(), z in ordinal()) {
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
    }

    #[test]
    fn zero_is_an_identity(x in ordinal()) {
        prop_assert_eq!(x.add(&Ordinal::zero()), x.clone());
        prop_assert_eq!(Ordinal::zero().add(&x), x);
    }

    #[test]
    fn addition_is_monotone_on_the_right(x in ordinal(), y in ordinal(), z in ordinal()) {
        if y < z {
            prop_assert!(x.add(&y) < x.add(&z));
        }
        prop_assert!(x.add(&y) >= y);
    }

    #[test]
    fn successor_is_plus_one(x in ordinal()) {
        prop_assert_eq!(x.succ(), x.add(&Ordinal::one()));
        prop_assert_eq!(x.succ().classify(), Kind::Successor(x));
    }

    #[test]
    fn multiplication_by_naturals_is_repeated_addition(x in ordinal(), p in 0u64..5) {
        let mut sum = Ordinal::zero();
        for _ in 0..p {
            sum = sum.add(&x);
        }
        prop_assert_eq!(x.mul_nat(p), sum);
    }

    #[test]
    fn fundamental_sequences_increase_below_the_limit(x in small_limit(), n in 1u32..10) {
        for scheme in [Scheme::Wainer, Scheme::Intrinsic] {
            let a = x.fundamental_with(n, scheme).unwrap();
            let b = x.fundamental_with(n + 1, scheme).unwrap();
            prop_assert!(a < x);
            prop_assert!(a < b, "{} at {}: {} then {}", x, n, a, b);
        }
    }

    #[test]
    fn fundamental_sequences_are_cofinal(x in small_limit(), k in 0u32..6) {
        // a point below the limit, taken a little past a term of the sequence
        let beta = x.fundamental(k + 1).unwrap().add(&Ordinal::nat(u64::from(k)));
        prop_assert!(beta < x);
        let passed = (1..=40).any(|n| x.fundamental(n).unwrap() > beta);
        prop_assert!(passed, "no term of {} above {} by 40", x, beta);
    }

    #[test]
    fn fundamental_keeps_the_head(x in positive(), n in 1u32..8) {
        // (g + w^b)_n = g + (w^b)_n
        let terms = x.terms();
        let last = terms.last().unwrap();
        if last.exponent.is_zero() {
            return Ok(());
        }
        let mut head_terms: Vec<(Ordinal, u64)> = terms.iter().map(|t| (t.exponent.clone(), t.coefficient)).collect();
        let (e, c) = head_terms.pop().unwrap();
        let head = Ordinal::from_terms(head_terms).unwrap().add(&Ordinal::omega_power(e.clone()).mul_nat(c - 1));
        let w_e = Ordinal::omega_power(e);
        prop_assert_eq!(x.fundamental(n).unwrap(), head.add(&w_e.fundamental(n).unwrap()));
    }

    #[test]
    fn omega_sequence_is_the_predecessors(n in 1u32..100_000) {
        prop_assert_eq!(Ordinal::omega().fundamental(n).unwrap(), Ordinal::nat(u64::from(n) - 1));
    }

    #[test]
    fn section_index_is_below(x in positive(), n in 1u32..6) {
        let next = x.section_index(n, Scheme::Wainer).unwrap().unwrap();
        prop_assert!(next < x);
    }
}

#[test]
fn mixed_case_example() {
    let x: Ordinal = "w^2*2 + w*3".parse().unwrap();
    assert_eq!(x.fundamental(4).unwrap(), "w^2*2 + w*2 + 3".parse().unwrap());
}
