mod common;

use apwidth::sample::{random_mixed_word, random_reduced_word};
use apwidth::{group_mul, hamming, reduce, ReducedWord, Word};
use common::{all_words_up_to, naive_reduce, w};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check_word_laws(u: &Word, v: &Word) {
    let ru = reduce(u);
    assert_eq!(
        ru.expand().letters(),
        naive_reduce(u.letters()).as_slice(),
        "{u}"
    );
    assert_eq!(reduce(&ru.expand()), ru);
    assert_eq!(reduce(&u.concat(v)), group_mul(&ru, &reduce(v)).unwrap());
    assert_eq!(u.reverse().reverse(), *u);
    assert_eq!(u.concat(v).reverse(), v.reverse().concat(&u.reverse()));
    assert_eq!(reduce(&u.reverse()).expand(), ru.reverse().expand());
    assert!(group_mul(&ru, &reduce(&u.invert())).unwrap().is_identity());
    assert_eq!(hamming(u, &u.reverse()).unwrap() % 2, 0);
    assert_eq!(u.to_string().parse::<Word>().unwrap(), *u);
    assert_eq!(ru.to_string().parse::<ReducedWord>().unwrap(), ru);
    assert_eq!(ru.to_string(), ru.expand().to_string());
}

#[test]
fn exhaustive_rank_two_up_to_six() {
    let words: Vec<Word> = all_words_up_to(2, 6).collect();
    let short: Vec<&Word> = words.iter().filter(|x| x.len() <= 3).collect();
    for u in &words {
        for v in &short {
            check_word_laws(u, v);
        }
    }
}

#[test]
fn random_words_up_to_64() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100_000 {
        let u = random_mixed_word(3, 64, &mut rng);
        let v = random_mixed_word(3, 64, &mut rng);
        check_word_laws(&u, &v);
    }
}

#[test]
fn concatenation_is_a_monoid() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let a = random_reduced_word(2, 10, &mut rng);
        let b = random_mixed_word(2, 10, &mut rng);
        let c = random_mixed_word(2, 10, &mut rng);
        assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
        assert_eq!(a.concat(&Word::empty()), a);
        assert_eq!(Word::empty().concat(&a), a);
        assert_eq!(a.concat(&b).len(), a.len() + b.len());
    }
}

#[test]
fn syllable_invariants_hold_after_reduction() {
    for x in all_words_up_to(2, 6) {
        let r = reduce(&x);
        for pair in r.syllables().windows(2) {
            assert_ne!(pair[0].generator(), pair[1].generator());
        }
        assert!(r.syllables().iter().all(|s| s.exponent() != 0));
    }
    assert_eq!(reduce(&w("abBAb")).to_string(), "b^1");
}

fn letters() -> impl Strategy<Value = Word> {
    prop::collection::vec((0u32..3, any::<bool>()), 0..64).prop_map(|v| {
        v.into_iter()
            .map(|(g, pos)| {
                if pos {
                    apwidth::Letter::pos(g)
                } else {
                    apwidth::Letter::neg(g)
                }
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn reduce_agrees_with_naive(u in letters(), v in letters()) {
        check_word_laws(&u, &v);
    }

    #[test]
    fn group_mul_is_associative(a in letters(), b in letters(), c in letters()) {
        let (a, b, c) = (reduce(&a), reduce(&b), reduce(&c));
        let left = group_mul(&group_mul(&a, &b).unwrap(), &c).unwrap();
        let right = group_mul(&a, &group_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
