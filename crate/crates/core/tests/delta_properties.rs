mod common;

use apwidth::delta::{lemma_bound, product_ap_bound, single_ap_bound};
use apwidth::sample::{random_mixed_word, random_reduced_word};
use apwidth::{defect, delta, delta_reduced, reduce, Word};
use common::{all_words, all_words_up_to, is_pal, naive_delta, w};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn frozen_values_from_the_letter_level_oracle() {
    assert_eq!(naive_delta(w("a b^2 a^3 b").letters()), 1);
    assert_eq!(naive_delta(w("abBAb").letters()), 0);
    assert_eq!(naive_delta(w("abaabbaaabbb").letters()), 2);
    let product = w("ab^2").concat(&w("ba^2"));
    assert_eq!(naive_delta(product.letters()), 0);
    assert_eq!(
        naive_delta(w("ab^2").letters()) + naive_delta(w("ba^2").letters()),
        2
    );

    assert_eq!(delta(&w("a b^2 a^3 b")), 1);
    let s = defect(&[w("ab^2"), w("ba^2")]);
    assert_eq!((s.delta_product, s.delta_sum, s.defect), (0, 2, 2));
}

#[test]
fn inversion_and_reversal_negate_exhaustively() {
    for x in all_words_up_to(2, 8) {
        let d = delta(&x);
        assert_eq!(delta(&x.invert()), -d, "{x}");
        let r = reduce(&x);
        assert_eq!(delta_reduced(&r.reverse()), -d);
        let bound = r.syllable_count().saturating_sub(1) as i64;
        assert!(d.abs() <= bound);
        if is_pal(x.letters()) {
            assert_eq!(d, 0);
        }
    }
}

#[test]
fn inversion_negates_on_long_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..20_000 {
        let x = random_mixed_word(3, 200, &mut rng);
        assert_eq!(delta(&x.invert()), -delta(&x));
    }
}

#[test]
fn syllable_delta_matches_letter_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50_000 {
        let x = random_mixed_word(2, 60, &mut rng);
        assert_eq!(delta(&x), naive_delta(x.letters()), "{x}");
    }
    for x in all_words_up_to(2, 7) {
        assert_eq!(delta(&x), naive_delta(x.letters()), "{x}");
    }
}

#[test]
fn pairs_of_short_words_have_defect_at_most_six() {
    let words: Vec<Word> = all_words_up_to(2, 4).collect();
    let mut worst = 0;
    for u in &words {
        for v in &words {
            let s = defect(&[u.clone(), v.clone()]);
            assert!(s.defect <= 6, "{u} {v}");
            worst = worst.max(s.defect);
        }
    }
    assert!(worst > 0);
}

#[test]
fn random_tuples_respect_six_n() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..20_000 {
        let n = rng.random_range(0..8);
        let factors: Vec<Word> = (0..n).map(|_| random_mixed_word(2, 40, &mut rng)).collect();
        let s = defect(&factors);
        assert_eq!(s.bound, lemma_bound(n));
        assert!(s.holds(), "{:?}", s);
    }
}

#[test]
fn witnesses_attain_the_syllable_bound() {
    for n in 1..50u64 {
        let wn = apwidth::witness(n).unwrap();
        assert_eq!(delta_reduced(&wn), wn.syllable_count() as i64 / 2 - 1);
        assert_eq!(naive_delta(wn.expand().letters()), n as i64 - 1);
    }
}

#[test]
fn bound_formulas() {
    assert_eq!(single_ap_bound(0), 12);
    assert_eq!(single_ap_bound(1), 36);
    assert_eq!(product_ap_bound(0, 2), 36);
    assert_eq!(product_ap_bound(1, 3), 126);
    assert_eq!(product_ap_bound(2, 0), 0);
}

#[test]
fn single_letters_and_reduced_walks() {
    for x in all_words(3, 1) {
        assert_eq!(delta(&x), 0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = random_reduced_word(2, 30, &mut rng);
    assert_eq!(reduce(&x).expand(), x);
}
