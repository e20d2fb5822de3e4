use proptest::prelude::*;
use schreier::family_core::{spread, thin_by_enumeration, check_thin};
use schreier::oracle::{all_subsets, k_subsets};
use schreier::ordinal::{Ordinal, Scheme};
use schreier::{Family, FamilySpec, FiniteSet, Nat, Window};

const UNIFORM: [&str; 13] = [
    "A:0", "A:1", "A:3", "A:w", "A:w+1", "A:w*2", "A:w^2", "A:w^w", "B:1", "B:2", "exL", "exR", "ex112",
];

const ORDINAL_FAMILIES: [&str; 8] = ["A:1", "A:3", "A:w", "A:w+1", "A:w*2", "A:w^2", "A:w^w", "A:w^2+w"];

fn fam(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

fn uniform() -> impl Strategy<Value = FamilySpec> {
    prop::sample::select(&UNIFORM[..]).prop_map(fam)
}

fn any_family() -> impl Strategy<Value = FamilySpec> {
    let extra = ["F:0", "F:1", "F:2", "F:w", "down:exL", "down:A:w+1", "star:A:w*2", "lift:A:w", "all"];
    prop::sample::select(UNIFORM.iter().chain(extra.iter()).copied().collect::<Vec<_>>()).prop_map(fam)
}

fn set_in(lo: Nat, hi: Nat, max_len: usize) -> impl Strategy<Value = FiniteSet> {
    prop::collection::btree_set(lo..=hi, 0..=max_len).prop_map(|s| FiniteSet::new(s.into_iter().collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sets_print_and_parse(s in set_in(1, 60, 10)) {
        let back: FiniteSet = s.to_string().parse().unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert!(s.as_slice().windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn unsorted_input_is_rejected(mut v in prop::collection::vec(1u32..30, 2..8)) {
        v.sort_unstable();
        v.reverse();
        if v.windows(2).any(|p| p[0] >= p[1]) {
            prop_assert!(FiniteSet::new(v.clone()).is_err());
        }
        prop_assert!(FiniteSet::new(vec![0, 3]).is_err());
    }

    #[test]
    fn prefix_test_is_monotone_and_covers_members(f in any_family(), s in set_in(1, 20, 8)) {
        if f.contains(&s) && !s.is_empty() {
            prop_assert_eq!(f.is_prefix(&s), Some(true), "{} {}", f, s);
        }
        if f.is_prefix(&s) == Some(true) {
            for p in s.prefixes() {
                prop_assert_ne!(f.is_prefix(&p), Some(false), "{} {} {}", f, s, p);
            }
        }
    }

    #[test]
    fn enumeration_is_membership_on_the_window(f in any_family(), lo in 1u32..6) {
        let w = Window::range(lo, lo + 9).unwrap();
        let listed: Vec<FiniteSet> = f.enumerate(&w).collect();
        let mut expected: Vec<FiniteSet> = all_subsets(w.ground()).into_iter().filter(|s| f.contains(s)).collect();
        expected.sort();
        prop_assert_eq!(listed, expected, "{}", f);
    }

    #[test]
    fn finite_families_are_k_subsets(k in 0u64..5, lo in 1u32..10, width in 0u32..10) {
        let w = Window::range(lo, lo + width).unwrap();
        let got: Vec<FiniteSet> = FamilySpec::a(Ordinal::nat(k)).enumerate(&w).collect();
        prop_assert_eq!(got, k_subsets(w.ground(), k as usize));
    }

    #[test]
    fn sections_follow_the_fundamental_sequence(i in 0usize..ORDINAL_FAMILIES.len(), m in 1u32..7) {
        let a = fam(ORDINAL_FAMILIES[i]);
        let w = Window::range(1, 15).unwrap();
        let xi = a.uniform_ordinal().unwrap();
        let xm = xi.section_index(m, Scheme::Wainer).unwrap().unwrap();
        let lower: Vec<FiniteSet> = FamilySpec::a(xm).enumerate(&w.above(m)).collect();
        prop_assert_eq!(a.section(m, &w), lower);
    }

    #[test]
    fn proper_prefixes_extend_by_any_larger_point(f in uniform(), s in set_in(1, 25, 7), gap in 1u32..20) {
        if f.is_prefix(&s) == Some(true) && !f.contains(&s) {
            let m = s.max_elem().unwrap_or(0) + gap;
            prop_assert_eq!(f.is_prefix(&s.pushed(m)), Some(true), "{} {} {}", f, s, m);
        }
    }

    #[test]
    fn down_closures_are_hereditary(f in uniform(), s in set_in(1, 25, 9)) {
        let d = f.clone().down();
        if d.contains(&s) {
            for x in s.iter() {
                prop_assert!(d.contains(&s.removed(x)), "{} {} {}", d, s, x);
            }
        }
        if f.contains(&s) {
            prop_assert!(d.contains(&s));
        }
    }

    #[test]
    fn schreier_families_are_spreading(a in 0u64..3, s in set_in(1, 12, 6), shift in prop::collection::vec(0u32..4, 6)) {
        let f = FamilySpec::f(Ordinal::nat(a));
        if f.contains(&s) {
            let mut acc = 0;
            let moved: Vec<Nat> = s.iter().zip(&shift).map(|(x, d)| { acc += d; x + acc }).collect();
            prop_assert!(f.contains(&FiniteSet::new(moved).unwrap()));
        }
    }

    #[test]
    fn uniform_members_lie_in_schreier_families(a in 0u64..3, s in set_in(1, 14, 9)) {
        let b = FamilySpec::b(Ordinal::nat(a));
        if b.contains(&s) {
            prop_assert!(FamilySpec::f(Ordinal::nat(a)).contains(&s), "B:{} {}", a, s);
        }
    }

    #[test]
    fn lift_prepends_a_point(s in set_in(2, 20, 6), m in 1u32..2) {
        let inner = fam("A:w");
        let lift = inner.clone().lift();
        prop_assert!(lift.contains(&FiniteSet::empty()));
        prop_assert_eq!(lift.contains(&s.prepended(m)), s.is_empty() || inner.contains(&s));
    }

    #[test]
    fn spreads_of_indices_land_in_the_set(idx in set_in(1, 8, 5), l in set_in(1, 40, 12)) {
        match spread(&idx, l.as_slice()) {
            Ok(img) => {
                prop_assert!(img.is_subset_of(&l));
                prop_assert_eq!(img.len(), idx.len());
            }
            Err(_) => prop_assert!(idx.max_elem().unwrap_or(0) as usize > l.len()),
        }
    }

    #[test]
    fn thin_search_matches_enumeration(f in uniform(), lo in 1u32..4) {
        let w = Window::range(lo, lo + 10).unwrap();
        prop_assert_eq!(f.thin_violation(&w), thin_by_enumeration(&f, &w));
        prop_assert!(check_thin(&f, &w).is_ok());
    }
}

#[test]
fn uniform_families_sit_inside_schreier_families_exhaustively() {
    let g: Vec<Nat> = (1..=12).collect();
    for a in 0..3u64 {
        let b = FamilySpec::b(Ordinal::nat(a));
        let f = FamilySpec::f(Ordinal::nat(a));
        for s in all_subsets(&g) {
            assert!(!b.contains(&s) || f.contains(&s), "B:{a} {s}");
        }
    }
}

#[test]
fn schreier_one_is_not_thin() {
    let v = fam("F:1").thin_violation(&Window::range(1, 6).unwrap()).unwrap();
    assert!(v.smaller.is_proper_initial_segment_of(&v.larger));
}
