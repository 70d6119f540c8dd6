//! Normal ordering by enumerating coloured contractions.
//!
//! A matching of a word picks disjoint position pairs (p, q) with p < q,
//! an annihilator at p, a creator at q, and coupled modes. Removing the
//! matched letters leaves a residual word; rearranging the residual with all
//! creators first (the double dot operation) gives one normally ordered
//! monomial. The normal form of the word is the sum of the double dots of
//! all residuals, the null matching included. This is the second, fully
//! independent route to the result of [`crate::rewrite`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::modes::ModeSystem;
use crate::monomial::{Monomial, NormalForm};
use crate::word::{Generator, Word};

/// A set of disjoint (annihilator, creator) position pairs, 1-based and
/// sorted by first coordinate.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching from pairs in any order; they are sorted by first
    /// coordinate. Validity against a word is a separate question, answered
    /// by [`Matching::is_valid_for`].
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Matching {
        pairs.sort();
        Matching { pairs }
    }

    pub fn null() -> Matching {
        Matching::default()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of contracted pairs.
    pub fn degree(&self) -> usize {
        self.pairs.len()
    }

    /// Checks every structural rule: positions in range and pairwise
    /// disjoint, p < q, annihilator at p, creator at q, modes coupled.
    pub fn is_valid_for(&self, word: &Word, sys: &ModeSystem) -> bool {
        let letters = word.letters();
        let mut used = alloc::vec![false; letters.len()];
        for &(p, q) in &self.pairs {
            if p < 1 || q > letters.len() || p >= q {
                return false;
            }
            if used[p - 1] || used[q - 1] {
                return false;
            }
            used[p - 1] = true;
            used[q - 1] = true;
            let lo = letters[p - 1];
            let hi = letters[q - 1];
            if lo.dagger || !hi.dagger {
                return false;
            }
            if !sys.kappa(lo.mode, hi.mode) {
                return false;
            }
        }
        true
    }
}

/// All matchings of a word, in listing order: ascending degree, then
/// lexicographic on the pair lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionSet {
    word: Word,
    matchings: Vec<Matching>,
}

impl ContractionSet {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }
}

/// Enumerates every matching of `word` over `sys`, the null matching
/// included, by recursing over annihilator positions: each annihilator is
/// either left free or paired with an unused later creator of a coupled
/// mode. The collected matchings are sorted by (degree, pairs).
pub fn enumerate_contractions(word: &Word, sys: &ModeSystem) -> ContractionSet {
    assert!(
        word.is_valid_for(sys),
        "word uses a mode outside the system"
    );
    let letters = word.letters();
    let annihilators: Vec<usize> = (0..letters.len()).filter(|&i| !letters[i].dagger).collect();
    let creators: Vec<usize> = (0..letters.len()).filter(|&i| letters[i].dagger).collect();
    let mut matchings = Vec::new();
    let mut used_creator = alloc::vec![false; letters.len()];
    let mut current: Vec<(usize, usize)> = Vec::new();

    struct Search<'a> {
        letters: &'a [Generator],
        sys: &'a ModeSystem,
        annihilators: &'a [usize],
        creators: &'a [usize],
    }

    fn recurse(
        ctx: &Search<'_>,
        next: usize,
        used_creator: &mut [bool],
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
    ) {
        if next == ctx.annihilators.len() {
            out.push(Matching::new(current.clone()));
            return;
        }
        let p = ctx.annihilators[next];
        // branch 1: leave this annihilator unmatched
        recurse(ctx, next + 1, used_creator, current, out);
        // branch 2: pair it with each admissible later creator
        for &q in ctx.creators {
            if q < p || used_creator[q] {
                continue;
            }
            if !ctx.sys.kappa(ctx.letters[p].mode, ctx.letters[q].mode) {
                continue;
            }
            used_creator[q] = true;
            current.push((p + 1, q + 1));
            recurse(ctx, next + 1, used_creator, current, out);
            current.pop();
            used_creator[q] = false;
        }
    }

    recurse(
        &Search {
            letters,
            sys,
            annihilators: &annihilators,
            creators: &creators,
        },
        0,
        &mut used_creator,
        &mut current,
        &mut matchings,
    );
    matchings.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.pairs.cmp(&b.pairs))
    });
    ContractionSet {
        word: word.clone(),
        matchings,
    }
}

/// The word left after removing every letter matched by `matching`.
pub fn residual_word(word: &Word, matching: &Matching) -> Word {
    let mut remove = alloc::vec![false; word.len()];
    for &(p, q) in matching.pairs() {
        remove[p - 1] = true;
        remove[q - 1] = true;
    }
    Word::from_letters(
        word.letters()
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove[*i])
            .map(|(_, g)| *g)
            .collect(),
    )
}

/// The double dot operation: rearrange all creators to the left, so only the
/// letter counts of the word survive.
pub fn double_dot(word: &Word, modes: usize) -> Monomial {
    Monomial::from_letter_counts(word.letters(), modes)
}

/// Normal ordering through contraction enumeration: the sum of the double
/// dots of all residuals.
pub fn normal_order_contraction(word: &Word, sys: &ModeSystem) -> NormalForm {
    let set = enumerate_contractions(word, sys);
    let mut nf = NormalForm::zero(sys.modes());
    for m in set.matchings() {
        let residual = residual_word(&set.word, m);
        nf.add_term(BigInt::one(), double_dot(&residual, sys.modes()));
    }
    nf
}

/// Matching counts grouped by degree.
pub fn degree_histogram(set: &ContractionSet) -> BTreeMap<usize, u64> {
    let mut hist = BTreeMap::new();
    for m in set.matchings() {
        *hist.entry(m.degree()).or_insert(0u64) += 1;
    }
    hist
}
