//! Words in the generators and integer combinations of words.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::modes::ModeSystem;

/// One letter of the operator alphabet: annihilator `a_mode` or creator
/// `a_mode+`. Mode indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub mode: u32,
    pub dagger: bool,
}

impl Generator {
    pub fn annihilator(mode: u32) -> Generator {
        Generator {
            mode,
            dagger: false,
        }
    }

    pub fn creator(mode: u32) -> Generator {
        Generator { mode, dagger: true }
    }
}

/// The textual name of a generator: aliases `a..d` when at most four modes
/// exist, canonical `a1..aN` otherwise, with `+` marking a creator.
pub fn generator_name(g: Generator, modes: usize) -> String {
    let mut s = String::new();
    if modes <= 4 {
        s.push((b'a' + (g.mode - 1) as u8) as char);
    } else {
        let _ = write!(s, "a{}", g.mode);
    }
    if g.dagger {
        s.push('+');
    }
    s
}

/// A finite (possibly empty) sequence of generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Generator>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Generator>) -> Word {
        Word { letters }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True if every letter's mode lies within `sys`.
    pub fn is_valid_for(&self, sys: &ModeSystem) -> bool {
        self.letters
            .iter()
            .all(|g| g.mode >= 1 && g.mode as usize <= sys.modes())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Renders the word in the grammar accepted by the parser: letters left to
    /// right, runs of an identical letter compressed to `x^k`. The empty word
    /// renders as the empty string.
    pub fn pretty(&self, modes: usize) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let g = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == g {
                run += 1;
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&generator_name(g, modes));
            if run > 1 {
                let _ = write!(out, "^{run}");
            }
            i += run;
        }
        out
    }
}

/// The word `(a_mode+ a_mode)^power`, the given power of a number operator.
/// Power 0 yields the empty word.
pub fn number_word(sys: &ModeSystem, mode: u32, power: u32) -> Word {
    assert!(
        mode >= 1 && mode as usize <= sys.modes(),
        "mode index out of range"
    );
    let mut letters = Vec::with_capacity(2 * power as usize);
    for _ in 0..power {
        letters.push(Generator::creator(mode));
        letters.push(Generator::annihilator(mode));
    }
    Word { letters }
}

/// `word` with every letter of the given mode removed, order preserved.
pub fn mode_delete(word: &Word, mode: u32) -> Word {
    Word {
        letters: word
            .letters
            .iter()
            .copied()
            .filter(|g| g.mode != mode)
            .collect(),
    }
}

/// Collapses every mode onto a single one: each creator becomes `a1+`, each
/// annihilator becomes `a1`, positions preserved.
pub fn sunglasses_word(word: &Word) -> Word {
    Word {
        letters: word
            .letters
            .iter()
            .map(|g| Generator {
                mode: 1,
                dagger: g.dagger,
            })
            .collect(),
    }
}

/// An integer linear combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordSum {
    terms: BTreeMap<Word, BigInt>,
}

impl WordSum {
    pub fn new() -> WordSum {
        WordSum::default()
    }

    pub fn add_term(&mut self, coeff: BigInt, word: Word) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            // need the key again, so look it up through retain
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Binomial expansion of the power of the number-difference operator
/// `(N_1 - N_2)^power` for a two-mode system:
/// `sum_k binom(power, k) (-1)^k N_1^(power-k) N_2^k`.
///
/// The expansion treats the two number operators as commuting, which holds in
/// the noncoupled case; callers use it for that consistency check.
pub fn number_difference_power(sys: &ModeSystem, power: u32) -> WordSum {
    assert_eq!(sys.modes(), 2, "number difference needs exactly two modes");
    let mut ws = WordSum::new();
    for k in 0..=power {
        let coeff = binomial(BigInt::from(power), BigInt::from(k));
        let coeff = if k % 2 == 0 { coeff } else { -coeff };
        let word = number_word(sys, 1, power - k).concat(&number_word(sys, 2, k));
        ws.add_term(coeff, word);
    }
    ws
}
