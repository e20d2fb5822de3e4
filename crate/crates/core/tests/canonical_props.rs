use proptest::prelude::*;
use schreier::canonical::{canonical_rep, trichotomy, Trichotomy};
use schreier::cb_index::{symbolic_index, symbolic_rank};
use schreier::oracle::{closed_form, decompositions};
use schreier::ordinal::{Ordinal, Scheme};
use schreier::{Family, FamilySpec, FiniteSet, Nat};

const THIN: [&str; 10] = ["A:1", "A:2", "A:w", "A:w+1", "A:w*2", "A:w^2", "A:w^w", "B:2", "exL", "exR"];

fn fam(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

fn thin() -> impl Strategy<Value = FamilySpec> {
    prop::sample::select(&THIN[..]).prop_map(fam)
}

fn nonempty(lo: Nat, hi: Nat, max_len: usize) -> impl Strategy<Value = FiniteSet> {
    prop::collection::btree_set(lo..=hi, 1..=max_len).prop_map(|s| FiniteSet::new(s.into_iter().collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_blocks_reassemble(f in thin(), a in nonempty(1, 30, 14)) {
        let rep = canonical_rep(&f, &a).unwrap();
        prop_assert_eq!(rep.reassemble(), a.clone());
        prop_assert_eq!(rep.rep_type, rep.blocks.len());
        for b in &rep.blocks {
            prop_assert!(f.contains(b), "{} block {}", f, b);
        }
        for pair in rep.blocks.windows(2) {
            prop_assert!(pair[0].max_elem() < pair[1].min_elem());
        }
        prop_assert!(!f.contains(&rep.tail) || rep.tail.is_empty());
        prop_assert!(rep.tail.is_empty() || f.is_prefix(&rep.tail) == Some(true));
    }

    #[test]
    fn canonical_rep_is_the_only_decomposition(i in 0usize..4, a in nonempty(1, 16, 12)) {
        let f = fam(["A:2", "A:w", "A:w+1", "A:w*2"][i]);
        let cf = closed_form(&f).unwrap();
        let all = decompositions(&a, &cf);
        prop_assert_eq!(all, vec![canonical_rep(&f, &a).unwrap()]);
    }

    #[test]
    fn type_zero_means_proper_prefix(f in thin(), a in nonempty(1, 30, 10)) {
        let rep = canonical_rep(&f, &a).unwrap();
        let t = trichotomy(&f, &a).unwrap();
        prop_assert_eq!(rep.rep_type == 0, t == Trichotomy::ProperPrefixOfMember);
        match t {
            Trichotomy::ProperPrefixOfMember => {
                prop_assert!(f.is_prefix(&a) == Some(true) && !f.contains(&a));
            }
            Trichotomy::ExtendsMember(p) => {
                prop_assert!(p.is_initial_segment_of(&a) && f.contains(&p));
                prop_assert_eq!(Some(&p), rep.blocks.first());
            }
        }
    }

    #[test]
    fn rank_drops_along_end_extensions(f in thin(), a in nonempty(1, 25, 8)) {
        if f.is_prefix(&a) != Some(true) {
            return Ok(());
        }
        let mut prev = symbolic_rank(&f, &FiniteSet::empty()).unwrap();
        prop_assert_eq!(symbolic_index(&f.clone().down()), Some(prev.succ()));
        for k in 1..=a.len() {
            let r = symbolic_rank(&f, &a.prefix(k)).unwrap();
            prop_assert!(r < prev, "{}: rank of {} is {} after {}", f, a.prefix(k), r, prev);
            prev = r;
        }
        prop_assert_eq!(prev.is_zero(), f.contains(&a));
    }

    #[test]
    fn rank_reads_the_section(i in 0usize..7, a in nonempty(1, 25, 6)) {
        let f = fam(THIN[i]);
        if f.is_prefix(&a) != Some(true) {
            return Ok(());
        }
        let n = a.min_elem().unwrap();
        let xi = f.uniform_ordinal().unwrap();
        let xn = xi.section_index(n, Scheme::Wainer).unwrap().unwrap();
        prop_assert_eq!(symbolic_rank(&f, &a).unwrap(), symbolic_rank(&FamilySpec::a(xn), &a.tail()).unwrap());
    }

    #[test]
    fn singletons_in_the_omega_family(n in 1u32..10_000) {
        let r = symbolic_rank(&fam("A:w"), &FiniteSet::singleton(n)).unwrap();
        prop_assert_eq!(r, Ordinal::nat(u64::from(n) - 1));
    }
}
