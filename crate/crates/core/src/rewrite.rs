//! Normal ordering by commutator rewriting.
//!
//! The single rewrite rule replaces an adjacent pair (annihilator `a_i`,
//! creator `a_j+`) by the swapped pair plus, when the modes are coupled, the
//! contracted word with both letters removed. A worklist of coefficiented
//! letter sequences is reduced until every sequence has all creators on the
//! left; those are tallied into a normal form.
//!
//! Each rewrite strictly decreases the number of (annihilator, creator)
//! inversions of a sequence, so the reduction terminates. The rule choice
//! (leftmost or rightmost inversion) does not affect the result; the two
//! strategies exist so that callers can test exactly that.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::modes::ModeSystem;
use crate::monomial::{Monomial, NormalForm};
use crate::word::{Generator, Word, WordSum};

/// Which adjacent inversion the rewrite loop reduces first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Result of a rewrite run together with the number of rule applications.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteTrace {
    pub steps: u64,
    pub result: NormalForm,
}

fn find_inversion(letters: &[Generator], strategy: Strategy) -> Option<usize> {
    let positions = (0..letters.len().saturating_sub(1))
        .filter(|&p| !letters[p].dagger && letters[p + 1].dagger);
    match strategy {
        Strategy::Leftmost => positions.min(),
        Strategy::Rightmost => positions.max(),
    }
}

#[cfg(debug_assertions)]
fn inversion_count(letters: &[Generator]) -> usize {
    let mut count = 0;
    let mut creators_seen = 0;
    for g in letters.iter().rev() {
        if g.dagger {
            creators_seen += 1;
        } else {
            count += creators_seen;
        }
    }
    count
}

/// Normally orders `word` with the given strategy, reporting the number of
/// rewrite steps taken.
pub fn normal_order_rewrite_with(
    word: &Word,
    sys: &ModeSystem,
    strategy: Strategy,
) -> RewriteTrace {
    assert!(
        word.is_valid_for(sys),
        "word uses a mode outside the system"
    );
    let mut nf = NormalForm::zero(sys.modes());
    let mut steps = 0u64;
    let mut worklist: Vec<(BigInt, Vec<Generator>)> =
        vec![(BigInt::one(), word.letters().to_vec())];
    while let Some((coeff, letters)) = worklist.pop() {
        match find_inversion(&letters, strategy) {
            None => {
                nf.add_term(coeff, Monomial::from_letter_counts(&letters, sys.modes()));
            }
            Some(p) => {
                steps += 1;
                #[cfg(debug_assertions)]
                let before = inversion_count(&letters);
                let annihilator = letters[p];
                let creator = letters[p + 1];
                let mut swapped = letters.clone();
                swapped.swap(p, p + 1);
                #[cfg(debug_assertions)]
                debug_assert!(inversion_count(&swapped) < before);
                if sys.kappa(annihilator.mode, creator.mode) {
                    let mut contracted = letters;
                    contracted.drain(p..=p + 1);
                    #[cfg(debug_assertions)]
                    debug_assert!(inversion_count(&contracted) < before);
                    worklist.push((coeff.clone(), contracted));
                }
                worklist.push((coeff, swapped));
            }
        }
    }
    RewriteTrace { steps, result: nf }
}

/// Normally orders `word` over `sys`.
pub fn normal_order_rewrite(word: &Word, sys: &ModeSystem) -> NormalForm {
    normal_order_rewrite_with(word, sys, Strategy::Leftmost).result
}

/// Normally orders an integer combination of words term by term.
pub fn normal_order_wordsum(ws: &WordSum, sys: &ModeSystem) -> NormalForm {
    let mut nf = NormalForm::zero(sys.modes());
    for (word, coeff) in ws.terms() {
        let part = normal_order_rewrite(word, sys).scale(coeff);
        nf = nf.add(&part);
    }
    nf
}

/// The normal form of the commutator `uv - vu`.
pub fn commutator_nf(u: &Word, v: &Word, sys: &ModeSystem) -> NormalForm {
    let uv = normal_order_rewrite(&u.concat(v), sys);
    let vu = normal_order_rewrite(&v.concat(u), sys);
    uv.sub(&vu)
}

/// Product of two normal forms, renormalised: every cross term is the word
/// concatenation of the two monomials, normally ordered again.
pub fn nf_mul(x: &NormalForm, y: &NormalForm, sys: &ModeSystem) -> NormalForm {
    assert_eq!(x.modes(), sys.modes());
    assert_eq!(y.modes(), sys.modes());
    let mut out = NormalForm::zero(sys.modes());
    for (mx, cx) in x.terms() {
        let wx = mx.to_word();
        for (my, cy) in y.terms() {
            let product = normal_order_rewrite(&wx.concat(&my.to_word()), sys);
            out = out.add(&product.scale(&(cx * cy)));
        }
    }
    out
}
