//! The two normal-ordering engines are developed independently: one rewrites
//! with the commutation relation, the other enumerates coloured contractions.
//! Agreement over exhaustive and randomized word sets is the core correctness
//! argument of the crate.

use normord_core::{
    enumerate_contractions, normal_order_contraction, normal_order_rewrite, Generator, ModeSystem,
    Word,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn alphabet(modes: u32) -> Vec<Generator> {
    let mut letters = Vec::new();
    for mode in 1..=modes {
        letters.push(Generator::annihilator(mode));
        letters.push(Generator::creator(mode));
    }
    letters
}

/// All words of exactly `len` letters over the full alphabet of `modes` modes.
fn words_of_len(modes: u32, len: usize) -> Vec<Word> {
    let letters = alphabet(modes);
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for word in &words {
            for &letter in &letters {
                let mut extended = word.clone();
                extended.push(letter);
                next.push(extended);
            }
        }
        words = next;
    }
    words.into_iter().map(Word::from_letters).collect()
}

#[test]
fn engines_agree_exhaustively_two_modes() {
    for sys in [ModeSystem::coupled(2), ModeSystem::noncoupled(2)] {
        for len in 0..=5 {
            for word in words_of_len(2, len) {
                let rewritten = normal_order_rewrite(&word, &sys);
                let contracted = normal_order_contraction(&word, &sys);
                assert_eq!(
                    rewritten,
                    contracted,
                    "engines disagree on {:?} (len {len})",
                    word.pretty(2)
                );
            }
        }
    }
}

#[test]
fn contraction_count_matches_evaluation_at_one() {
    // Setting every generator to 1 turns the normal form into the number of
    // coloured contractions, since each matching contributes coefficient 1.
    let sys = ModeSystem::coupled(2);
    for len in 0..=5 {
        for word in words_of_len(2, len) {
            let nf = normal_order_rewrite(&word, &sys);
            let count = enumerate_contractions(&word, &sys).matchings().len();
            assert_eq!(nf.eval_at_one(), BigInt::from(count), "{}", word.pretty(2));
        }
    }
}

fn word_strategy(modes: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=modes, prop::bool::ANY), 0..=max_len).prop_map(|letters| {
        Word::from_letters(
            letters
                .into_iter()
                .map(|(mode, dagger)| {
                    if dagger {
                        Generator::creator(mode)
                    } else {
                        Generator::annihilator(mode)
                    }
                })
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn engines_agree_three_modes(word in word_strategy(3, 8)) {
        let coupled = ModeSystem::coupled(3);
        let noncoupled = ModeSystem::noncoupled(3);
        prop_assert_eq!(
            normal_order_rewrite(&word, &coupled),
            normal_order_contraction(&word, &coupled)
        );
        prop_assert_eq!(
            normal_order_rewrite(&word, &noncoupled),
            normal_order_contraction(&word, &noncoupled)
        );
    }

    #[test]
    fn engines_agree_custom_coupling(word in word_strategy(3, 7)) {
        // ring coupling: each mode couples to itself and its successor
        let matrix = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![true, false, true],
        ];
        let sys = ModeSystem::from_matrix(matrix).expect("unit diagonal");
        prop_assert_eq!(
            normal_order_rewrite(&word, &sys),
            normal_order_contraction(&word, &sys)
        );
    }
}
