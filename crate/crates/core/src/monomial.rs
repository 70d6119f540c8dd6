//! Normally ordered monomials and integer combinations of them.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::word::{Generator, Word};

/// A normally ordered monomial over `n` modes, stored as exponent vectors:
/// `creators[m]` is the power of the mode-(m+1) creator and `annihilators[m]`
/// the power of the mode-(m+1) annihilator. As an operator it reads with all
/// creators first in ascending mode order, then all annihilators in
/// descending mode order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub creators: Vec<u32>,
    pub annihilators: Vec<u32>,
}

impl Monomial {
    pub fn new(creators: Vec<u32>, annihilators: Vec<u32>) -> Monomial {
        assert_eq!(creators.len(), annihilators.len());
        Monomial {
            creators,
            annihilators,
        }
    }

    pub fn identity(modes: usize) -> Monomial {
        Monomial {
            creators: alloc::vec![0; modes],
            annihilators: alloc::vec![0; modes],
        }
    }

    pub fn modes(&self) -> usize {
        self.creators.len()
    }

    pub fn is_identity(&self) -> bool {
        self.creators.iter().all(|&e| e == 0) && self.annihilators.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> usize {
        self.creators
            .iter()
            .chain(self.annihilators.iter())
            .map(|&e| e as usize)
            .sum()
    }

    /// Counts the letters of a word whose creators all stand left of its
    /// annihilators. Only the multiset of letters matters.
    pub fn from_letter_counts(letters: &[Generator], modes: usize) -> Monomial {
        let mut m = Monomial::identity(modes);
        for g in letters {
            let slot = (g.mode - 1) as usize;
            if g.dagger {
                m.creators[slot] += 1;
            } else {
                m.annihilators[slot] += 1;
            }
        }
        m
    }

    /// The monomial as a word: creators in ascending mode order, then
    /// annihilators in descending mode order.
    pub fn to_word(&self) -> Word {
        let n = self.modes();
        let mut letters = Vec::with_capacity(self.total_degree());
        for mode in 1..=n as u32 {
            for _ in 0..self.creators[(mode - 1) as usize] {
                letters.push(Generator::creator(mode));
            }
        }
        for mode in (1..=n as u32).rev() {
            for _ in 0..self.annihilators[(mode - 1) as usize] {
                letters.push(Generator::annihilator(mode));
            }
        }
        Word::from_letters(letters)
    }

    /// Word-grammar text of the monomial; the identity renders as `1`.
    pub fn pretty(&self) -> String {
        if self.is_identity() {
            String::from("1")
        } else {
            self.to_word().pretty(self.modes())
        }
    }
}

/// An integer combination of normally ordered monomials over a fixed number
/// of modes. Zero coefficients are pruned on insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    modes: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl NormalForm {
    pub fn zero(modes: usize) -> NormalForm {
        NormalForm {
            modes,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(modes: usize) -> NormalForm {
        let mut nf = NormalForm::zero(modes);
        nf.add_term(BigInt::one(), Monomial::identity(modes));
        nf
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn add_term(&mut self, coeff: BigInt, monomial: Monomial) {
        assert_eq!(monomial.modes(), self.modes, "mode count mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &NormalForm) -> NormalForm {
        assert_eq!(self.modes, other.modes);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }

    pub fn neg(&self) -> NormalForm {
        NormalForm {
            modes: self.modes,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &NormalForm) -> NormalForm {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigInt) -> NormalForm {
        if factor.is_zero() {
            return NormalForm::zero(self.modes);
        }
        NormalForm {
            modes: self.modes,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, monomial: &Monomial) -> BigInt {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Sum of all coefficients, the result of sending every generator to 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Terms in display order: descending total degree, then descending
    /// lexicographic order on (creators, annihilators).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(ma, _), (mb, _)| {
            mb.total_degree().cmp(&ma.total_degree()).then_with(|| {
                (&mb.creators, &mb.annihilators).cmp(&(&ma.creators, &ma.annihilators))
            })
        });
        v
    }

    /// Human-readable rendering, e.g. `a+ b+ b^2 a^2 + 2 a+ b a^2 - b^2`.
    /// Unit coefficients are omitted except on the identity monomial. The
    /// zero combination renders as `0`.
    pub fn pretty(&self) -> String {
        use core::fmt::Write as _;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mag.is_one() && !m.is_identity() {
                out.push_str(&m.pretty());
            } else if m.is_identity() {
                let _ = write!(out, "{mag}");
            } else {
                let _ = write!(out, "{mag} {}", m.pretty());
            }
        }
        out
    }
}

/// Collapses every mode onto a single one: each monomial maps to the 1-mode
/// monomial with its total creator and total annihilator degrees, summing
/// coefficients.
pub fn sunglasses_nf(nf: &NormalForm) -> NormalForm {
    let mut out = NormalForm::zero(1);
    for (m, c) in nf.terms() {
        let i: u32 = m.creators.iter().sum();
        let j: u32 = m.annihilators.iter().sum();
        out.add_term(c.clone(), Monomial::new(alloc::vec![i], alloc::vec![j]));
    }
    out
}
