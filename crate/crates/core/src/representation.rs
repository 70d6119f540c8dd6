//! A differential-operator model of the coupled algebra, checked exactly.
//!
//! The model lives on functions of n variables spanned by the basis
//! `phi(m, k) = e^(m s) s^k` with `s = x_1 + ... + x_n`, m any integer and
//! k a natural number. Every annihilator acts as `e^s d/dx_i`, which on the
//! basis gives `m phi(m+1, k) + k phi(m+1, k-1)` for every i alike. Every
//! creator acts as multiplication by `sigma e^(-s)`, i.e. `sigma
//! phi(m-1, k)`, where the sign `sigma` is the one configurable choice:
//!
//! * [`SignConvention::Literal`]: `sigma = +1`, the operators exactly as
//!   classically displayed. The commutator of an annihilator with a creator
//!   then acts as -1 on every basis element.
//! * [`SignConvention::Corrected`]: `sigma = -1`. All defining relations of
//!   the coupled algebra hold exactly; this is the default everywhere.
//!
//! Coefficients are exact rationals, so every verdict here is exact.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::word::{generator_name, Generator, Word};

/// Sign of the creator action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConvention {
    /// Creator multiplies by `+e^(-s)`.
    Literal,
    /// Creator multiplies by `-e^(-s)`; the defining relations hold.
    Corrected,
}

/// A representation instance: number of modes and sign convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepConfig {
    pub modes: usize,
    pub sign: SignConvention,
}

impl RepConfig {
    pub fn corrected(modes: usize) -> RepConfig {
        RepConfig {
            modes,
            sign: SignConvention::Corrected,
        }
    }

    pub fn literal(modes: usize) -> RepConfig {
        RepConfig {
            modes,
            sign: SignConvention::Literal,
        }
    }
}

/// A finite rational combination of basis functions, keyed by (m, k).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FunctionElement {
    terms: BTreeMap<(i64, u32), BigRational>,
}

impl FunctionElement {
    pub fn zero() -> FunctionElement {
        FunctionElement::default()
    }

    /// The basis function `phi(m, k)`.
    pub fn basis(m: i64, k: u32) -> FunctionElement {
        let mut f = FunctionElement::default();
        f.add_term(BigRational::one(), (m, k));
        f
    }

    pub fn add_term(&mut self, coeff: BigRational, key: (i64, u32)) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &FunctionElement) -> FunctionElement {
        let mut out = self.clone();
        for (&key, c) in other.terms.iter() {
            out.add_term(c.clone(), key);
        }
        out
    }

    pub fn sub(&self, other: &FunctionElement) -> FunctionElement {
        let mut out = self.clone();
        for (&key, c) in other.terms.iter() {
            out.add_term(-c.clone(), key);
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> FunctionElement {
        if factor.is_zero() {
            return FunctionElement::zero();
        }
        FunctionElement {
            terms: self
                .terms
                .iter()
                .map(|(&key, c)| (key, c * factor))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, u32), &BigRational)> {
        self.terms.iter()
    }

    /// If `self == lambda * phi(m, k)`, the scalar `lambda` (zero included);
    /// otherwise None.
    pub fn scalar_on_basis(&self, key: (i64, u32)) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&key) {
                return Some(c.clone());
            }
        }
        None
    }
}

/// Action of one generator on an element.
pub fn apply_generator(cfg: &RepConfig, g: Generator, f: &FunctionElement) -> FunctionElement {
    assert!(
        g.mode >= 1 && g.mode as usize <= cfg.modes,
        "mode index out of range"
    );
    let mut out = FunctionElement::zero();
    if g.dagger {
        let sigma = match cfg.sign {
            SignConvention::Literal => BigRational::one(),
            SignConvention::Corrected => -BigRational::one(),
        };
        for (&(m, k), c) in f.terms.iter() {
            out.add_term(c * &sigma, (m - 1, k));
        }
    } else {
        for (&(m, k), c) in f.terms.iter() {
            out.add_term(c * BigRational::from_integer(BigInt::from(m)), (m + 1, k));
            if k > 0 {
                out.add_term(
                    c * BigRational::from_integer(BigInt::from(k)),
                    (m + 1, k - 1),
                );
            }
        }
    }
    out
}

/// Action of a word, rightmost letter first.
pub fn apply_word(cfg: &RepConfig, word: &Word, f: &FunctionElement) -> FunctionElement {
    let mut out = f.clone();
    for &g in word.letters().iter().rev() {
        out = apply_generator(cfg, g, &out);
    }
    out
}

fn commutator_action(cfg: &RepConfig, u: &Word, v: &Word, f: &FunctionElement) -> FunctionElement {
    let uv = apply_word(cfg, u, &apply_word(cfg, v, f));
    let vu = apply_word(cfg, v, &apply_word(cfg, u, f));
    uv.sub(&vu)
}

/// One commutation relation's outcome over a swept basis range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationRow {
    /// Display name like `[a,b+]`.
    pub pair: String,
    /// The scalar the relation requires: 0 or 1.
    pub expected: u8,
    /// The scalar the action turned out to be across the whole range, if it
    /// was a consistent scalar at all.
    pub observed: Option<BigRational>,
    pub pass: bool,
}

/// Outcome of sweeping all defining relations over a basis range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub config: RepConfig,
    pub m_range: i64,
    pub k_max: u32,
    pub rows: Vec<RelationRow>,
}

impl RelationReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

fn gname(g: Generator, modes: usize) -> String {
    generator_name(g, modes)
}

/// Sweeps every defining relation of the coupled algebra, plus the pairwise
/// commutators of the number operators, over all basis functions with
/// `|m| <= m_range` and `k <= k_max`. Each relation must act as its scalar
/// (0 or 1) on every basis element; the row records the scalar actually
/// observed when there is a consistent one.
pub fn verify_relations(cfg: &RepConfig, m_range: i64, k_max: u32) -> RelationReport {
    let n = cfg.modes as u32;
    let mut rows = Vec::new();

    let mut relation = |u: Word, v: Word, name: String, expected: u8| {
        let mut observed: Option<BigRational> = None;
        let mut consistent = true;
        for m in -m_range..=m_range {
            for k in 0..=k_max {
                let f = FunctionElement::basis(m, k);
                let action = commutator_action(cfg, &u, &v, &f);
                match action.scalar_on_basis((m, k)) {
                    None => {
                        consistent = false;
                    }
                    Some(lambda) => match &observed {
                        None => observed = Some(lambda),
                        Some(prev) => {
                            if *prev != lambda {
                                consistent = false;
                            }
                        }
                    },
                }
                if !consistent {
                    break;
                }
            }
            if !consistent {
                break;
            }
        }
        let observed = if consistent { observed } else { None };
        let pass = observed
            .as_ref()
            .is_some_and(|l| *l == BigRational::from_integer(BigInt::from(expected)));
        rows.push(RelationRow {
            pair: name,
            expected,
            observed,
            pass,
        });
    };

    let one = |g: Generator| Word::from_letters(alloc::vec![g]);
    for i in 1..=n {
        for j in 1..=n {
            let u = Generator::annihilator(i);
            let v = Generator::creator(j);
            relation(
                one(u),
                one(v),
                format!("[{},{}]", gname(u, cfg.modes), gname(v, cfg.modes)),
                1,
            );
        }
    }
    for i in 1..=n {
        for j in i..=n {
            let u = Generator::annihilator(i);
            let v = Generator::annihilator(j);
            relation(
                one(u),
                one(v),
                format!("[{},{}]", gname(u, cfg.modes), gname(v, cfg.modes)),
                0,
            );
        }
    }
    for i in 1..=n {
        for j in i..=n {
            let u = Generator::creator(i);
            let v = Generator::creator(j);
            relation(
                one(u),
                one(v),
                format!("[{},{}]", gname(u, cfg.modes), gname(v, cfg.modes)),
                0,
            );
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            let nu = Word::from_letters(alloc::vec![
                Generator::creator(i),
                Generator::annihilator(i)
            ]);
            let nv = Word::from_letters(alloc::vec![
                Generator::creator(j),
                Generator::annihilator(j)
            ]);
            let name = format!(
                "[N{},N{}]",
                gname(Generator::annihilator(i), cfg.modes),
                gname(Generator::annihilator(j), cfg.modes)
            );
            relation(nu, nv, name, 0);
        }
    }

    RelationReport {
        config: *cfg,
        m_range,
        k_max,
        rows,
    }
}
