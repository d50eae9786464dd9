mod common;

use std::collections::BTreeSet;

use infbraid::artin::braid_equal;
use infbraid::braid::{BraidWord, Generator};
use infbraid::combing::{comb, comb_sigma, pure_equal, recombine, CombedForm};
use infbraid::completed::{
    completed_agree, completed_inv, completed_mul, embed_finite_full, CompletedBraid,
};
use infbraid::free_group::{FreeLetter, FreeWord};
use infbraid::infperm::{
    normal_form, parse_finite_perm, perm_metric, section_braid, InfPermutation, PermNormalForm,
};
use infbraid::permutation::FinPermutation;
use infbraid::pure::{BandLetter, PureBraidWord};
use infbraid::stream::{distance, inf_inv, inf_mul, DepthBudget, InfinitePureBraid};
use proptest::prelude::*;

fn sigma_word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..strands, any::<bool>()), 0..=max_len).prop_map(move |gs| {
        let letters = gs
            .into_iter()
            .map(|(i, pos)| Generator::new(i, if pos { 1 } else { -1 }))
            .collect();
        BraidWord::new(strands, letters).unwrap()
    })
}

fn band_word(strands: usize, max_len: usize) -> impl Strategy<Value = PureBraidWord> {
    prop::collection::vec(
        (2..=strands, any::<prop::sample::Index>(), any::<bool>()),
        0..=max_len,
    )
    .prop_map(move |ls| {
        let letters = ls
            .into_iter()
            .map(|(j, i, pos)| {
                BandLetter::new(i.index(j - 1) + 1, j, if pos { 1 } else { -1 }).unwrap()
            })
            .collect();
        PureBraidWord::new(strands, letters).unwrap()
    })
}

fn free_word(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((1..=rank, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        FreeWord::from_letters(
            rank,
            ls.into_iter()
                .map(|(i, pos)| FreeLetter::new(i, if pos { 1 } else { -1 })),
        )
        .unwrap()
    })
}

fn combed(depth: usize, max_len: usize) -> impl Strategy<Value = CombedForm> {
    (1..=depth)
        .map(|n| {
            if n == 1 {
                Just(FreeWord::identity(0)).boxed()
            } else {
                free_word(n - 1, max_len).boxed()
            }
        })
        .collect::<Vec<_>>()
        .prop_map(|coords| CombedForm::from_coords(coords).unwrap())
}

fn permutation(max_size: usize) -> impl Strategy<Value = FinPermutation> {
    (1..=max_size)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|images| FinPermutation::from_images(images).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn free_group_laws(u in free_word(3, 10), v in free_word(3, 10), w in free_word(3, 10)) {
        prop_assert!(u.mul(&u.inverse()).is_empty());
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        prop_assert_eq!(u.mul(&v).inverse(), v.inverse().mul(&u.inverse()));
    }

    #[test]
    fn band_and_sigma_combing_agree(w in band_word(4, 8)) {
        let direct = comb(&w, 4).unwrap();
        let via_sigma = comb_sigma(&w.to_sigma()).unwrap();
        prop_assert_eq!(direct, via_sigma);
    }

    #[test]
    fn combing_round_trip(w in band_word(4, 8)) {
        let back = recombine(&comb(&w, 4).unwrap()).with_strands(4).unwrap();
        prop_assert!(pure_equal(&back, &w).unwrap());
    }

    #[test]
    fn combing_is_a_normal_form(w in band_word(3, 6), v in band_word(3, 6)) {
        // equal braids comb identically, unequal ones do not
        let same = pure_equal(&w, &v).unwrap();
        prop_assert_eq!(comb(&w, 3).unwrap() == comb(&v, 3).unwrap(), same);
    }

    #[test]
    fn braid_serialization_round_trip(w in sigma_word(5, 12)) {
        prop_assert_eq!(BraidWord::deserialize(&w.serialize()).unwrap(), w);
    }

    #[test]
    fn combed_text_round_trip(c in combed(5, 6)) {
        prop_assert_eq!(CombedForm::parse(&c.to_string()).unwrap(), c.clone());
        let s = InfinitePureBraid::from_combed(c.clone());
        let back = InfinitePureBraid::parse_prefix(&s.serialize_prefix(5).unwrap()).unwrap();
        prop_assert_eq!(back.prefix(5).unwrap(), c);
    }

    #[test]
    fn forgetting_commutes_with_products(u in sigma_word(4, 8), v in sigma_word(4, 8)) {
        // forget the strand starting at position 4 of u v, compared by tracking it through both
        let keep: BTreeSet<usize> = (1..=3).collect();
        let whole = u.concat(&v).forget_strands(&keep).unwrap();
        let pu = u.perm_of();
        let mid: BTreeSet<usize> = keep.iter().map(|&i| pu.apply(i)).collect();
        let parts = u.forget_strands(&keep).unwrap().concat(&v.forget_strands(&mid).unwrap());
        prop_assert!(braid_equal(&whole, &parts));
    }

    #[test]
    fn stream_group_laws(a in combed(4, 4), b in combed(4, 4), c in combed(4, 4)) {
        let (a, b, c) = (
            InfinitePureBraid::from_combed(a),
            InfinitePureBraid::from_combed(b),
            InfinitePureBraid::from_combed(c),
        );
        let budget = DepthBudget::new(4).unwrap();
        let one = inf_mul(&a, &inf_inv(&a));
        prop_assert!(distance(&one, &InfinitePureBraid::identity(), budget).unwrap().value().is_none());
        let left = inf_mul(&inf_mul(&a, &b), &c);
        let right = inf_mul(&a, &inf_mul(&b, &c));
        prop_assert!(distance(&left, &right, budget).unwrap().value().is_none());
        // truncation is a homomorphism
        let ab = inf_mul(&a, &b).truncate(4).unwrap();
        let prod = a.truncate(4).unwrap().concat(&b.truncate(4).unwrap());
        prop_assert!(pure_equal(&ab, &prod.with_strands(4).unwrap()).unwrap());
    }

    #[test]
    fn stream_metric_is_an_ultrametric(a in combed(5, 3), b in combed(5, 3), c in combed(5, 3)) {
        let s = |x: CombedForm| InfinitePureBraid::from_combed(x);
        let (a, b, c) = (s(a), s(b), s(c));
        let budget = DepthBudget::new(5).unwrap();
        let d = |x: &InfinitePureBraid, y: &InfinitePureBraid| distance(x, y, budget).unwrap().upper_bound();
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert!(d(&a, &c) <= d(&a, &b).max(d(&b, &c)));
    }

    #[test]
    fn normal_form_invariant(p in permutation(12), k in 1usize..=14) {
        let t = InfPermutation::from_finite(&p);
        let nf = normal_form(&t, k).unwrap();
        for (j, &m) in nf.blocks().iter().enumerate() {
            prop_assert!(m > j);
        }
        for i in 1..=k {
            prop_assert_eq!(nf.apply_composite_inverse(i), p.inverse().apply(i));
        }
        prop_assert_eq!(PermNormalForm::parse(&nf.to_string()).unwrap(), nf);
    }

    #[test]
    fn section_realizes_permutation(p in permutation(10), k in 1usize..=10) {
        let t = InfPermutation::from_finite(&p);
        let s = section_braid(&t, k).unwrap();
        for i in 1..=k {
            prop_assert_eq!(s.perm_of().apply(i), p.apply(i));
        }
    }

    #[test]
    fn section_is_continuous(p in permutation(10), rho in permutation(16), k in 1usize..=8) {
        // tau' = tau then rho, where rho is rebuilt to fix tau({1..S})
        let settle = (1..=k)
            .map(|j| p.apply(j).max(p.inverse().apply(j)))
            .max()
            .unwrap()
            .max(k);
        let pinned: BTreeSet<usize> = (1..=settle).map(|i| p.apply(i)).collect();
        let free: Vec<usize> = (1..=16).filter(|i| !pinned.contains(i)).collect();
        let mut shuffled: Vec<usize> = rho.images().iter().copied().filter(|i| !pinned.contains(i)).collect();
        shuffled.truncate(free.len());
        let mut images: Vec<usize> = (1..=16).collect();
        for (&from, &to) in free.iter().zip(&shuffled) {
            images[from - 1] = to;
        }
        let r = FinPermutation::from_images(images).unwrap();
        let t1 = InfPermutation::from_finite(&p);
        let t2 = InfPermutation::from_finite(&p.then(&r));
        for i in 1..=settle {
            prop_assert_eq!(t1.image(i).unwrap(), t2.image(i).unwrap());
        }
        prop_assert_eq!(normal_form(&t1, k).unwrap(), normal_form(&t2, k).unwrap());
    }

    #[test]
    fn perm_metric_properties(a in permutation(12), b in permutation(12), n in 1usize..=20) {
        let (a, b) = (InfPermutation::from_finite(&a), InfPermutation::from_finite(&b));
        let short = perm_metric(&a, &b, n).unwrap();
        let long = perm_metric(&a, &b, n + 1).unwrap();
        prop_assert!(short <= long);
        prop_assert!(long < infbraid::dyadic::Dyadic::one());
        prop_assert_eq!(short, perm_metric(&b, &a, n).unwrap());
    }

    #[test]
    fn permutation_text_round_trip(p in permutation(9)) {
        let back = parse_finite_perm(&p.to_string()).unwrap();
        for i in 1..=12 {
            prop_assert_eq!(back.apply(i), p.apply(i));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn embedding_is_a_homomorphism(u in sigma_word(4, 8), v in sigma_word(4, 8)) {
        let prod = completed_mul(&embed_finite_full(&u).unwrap(), &embed_finite_full(&v).unwrap());
        let direct = embed_finite_full(&u.concat(&v)).unwrap();
        prop_assert!(completed_agree(&prod, &direct, 5).unwrap());
    }

    #[test]
    fn completed_inverse(u in sigma_word(4, 8)) {
        let x = embed_finite_full(&u).unwrap();
        let inv = completed_inv(&x);
        prop_assert!(completed_agree(&completed_mul(&inv, &x), &CompletedBraid::identity(), 5).unwrap());
        prop_assert!(completed_agree(&inv, &embed_finite_full(&u.inverse()).unwrap(), 5).unwrap());
    }
}
