//! Parser round trips: pretty-printing any word must parse back to the same
//! word, canonical names must work at every mode count, and error positions
//! must point at the offending byte.

use normord_core::{parse_word, parse_word_capped, Generator, ModeSystem, ParseErrorKind, Word};
use proptest::prelude::*;

fn words_of_len(modes: u32, len: usize) -> Vec<Word> {
    let mut letters = Vec::new();
    for mode in 1..=modes {
        letters.push(Generator::annihilator(mode));
        letters.push(Generator::creator(mode));
    }
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
fn pretty_parse_roundtrip_exhaustive() {
    for modes in 1..=3u32 {
        let sys = ModeSystem::coupled(modes as usize);
        for len in 0..=4 {
            for word in words_of_len(modes, len) {
                let text = word.pretty(modes as usize);
                let parsed = parse_word(&text, &sys).unwrap_or_else(|e| {
                    panic!("failed to reparse {text:?}: {e}");
                });
                assert_eq!(parsed, word, "{text}");
            }
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
    fn pretty_parse_roundtrip_many_modes(word in word_strategy(6, 12)) {
        // six modes force the canonical a1..a6 spelling
        let sys = ModeSystem::coupled(6);
        let text = word.pretty(6);
        prop_assert_eq!(parse_word(&text, &sys).unwrap(), word);
    }
}

#[test]
fn alias_and_canonical_names_coexist_at_low_mode_counts() {
    let sys = ModeSystem::coupled(4);
    let via_alias = parse_word("a b+ c^2 d+", &sys).unwrap();
    let via_canonical = parse_word("a1 a2+ a3^2 a4+", &sys).unwrap();
    assert_eq!(via_alias, via_canonical);
}

#[test]
fn alias_is_rejected_beyond_four_modes() {
    let sys = ModeSystem::coupled(5);
    let err = parse_word("a3 b", &sys).unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::AliasUnavailable('b'));
    assert_eq!(err.position, 4);
}

#[test]
fn error_positions_point_at_the_offending_byte() {
    let sys = ModeSystem::coupled(2);

    let err = parse_word("a b ? c", &sys).unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('?'));
    assert_eq!(err.position, 5);

    let err = parse_word("a b3+", &sys).unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('3'));
    assert_eq!(err.position, 4);

    let err = parse_word("a a5+", &sys).unwrap_err();
    assert_eq!(
        err.kind,
        ParseErrorKind::ModeOutOfRange { mode: 5, modes: 2 }
    );
    assert_eq!(err.position, 3);

    let err = parse_word("a+^", &sys).unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('^'));
    assert_eq!(err.position, 3);
}

#[test]
fn tabs_and_newlines_separate_tokens() {
    let sys = ModeSystem::coupled(2);
    let word = parse_word("a\tb+\n a2^2", &sys).unwrap();
    assert_eq!(word.pretty(2), "a b+ b^2");
}

#[test]
fn length_cap_applies_to_the_expanded_word() {
    let sys = ModeSystem::coupled(1);
    assert!(parse_word_capped("a^16", &sys, 16).is_ok());
    let err = parse_word_capped("a^17", &sys, 16).unwrap_err();
    match err.kind {
        ParseErrorKind::TooLong { len, cap } => {
            assert!(len > cap);
            assert_eq!(cap, 16);
        }
        other => panic!("unexpected kind {other:?}"),
    }
    // zero exponents expand to nothing and stay under any cap
    assert!(parse_word_capped("a^0 a+^0", &sys, 0).is_ok());
}
