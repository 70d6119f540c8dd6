//! Exact normal ordering for coupled multi-mode boson operators.
//!
//! A mode system fixes `n` modes and a 0/1 coupling matrix kappa with unit
//! diagonal: the defining relations are `[a_i, a_j+] = kappa[i][j]`, with
//! creators commuting among themselves and annihilators likewise. Two
//! presets matter most: `coupled` (all ones) and `noncoupled` (identity).
//!
//! The crate normal orders words over these generators by two fully
//! independent engines, one rewriting commutators ([`rewrite`]) and one
//! enumerating coloured contractions ([`contraction`]), so every result can
//! be cross-checked. On top of the engines sit coloured Stirling and Bell
//! numbers with their recursions and generating polynomials ([`stirling`]),
//! arc-diagram renderings of contractions ([`diagram`]), and an exact
//! differential-operator model of the coupled algebra
//! ([`representation`]).
//!
//! Everything is exact: coefficients are big integers (rationals in the
//! function-space model), and the crate is `no_std` (alloc only).

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod contraction;
pub mod diagram;
pub mod modes;
pub mod monomial;
pub mod parse;
pub mod report;
pub mod representation;
pub mod rewrite;
pub mod stirling;
pub mod word;

pub use contraction::{
    degree_histogram, double_dot, enumerate_contractions, normal_order_contraction, residual_word,
    ContractionSet, Matching,
};
pub use diagram::{default_palette, render_ascii, render_svg, DiagramSpec};
pub use modes::ModeSystem;
pub use monomial::{sunglasses_nf, Monomial, NormalForm};
pub use parse::{parse_word, parse_word_capped, render_error, ParseError, ParseErrorKind};
pub use report::{CheckItem, CheckReport};
pub use representation::{
    apply_generator, apply_word, verify_relations, FunctionElement, RelationReport, RelationRow,
    RepConfig, SignConvention,
};
pub use rewrite::{
    commutator_nf, nf_mul, normal_order_rewrite, normal_order_rewrite_with, normal_order_wordsum,
    RewriteTrace, Strategy,
};
pub use stirling::{
    apply_gen_recurrence, check_cnr_recursion, check_gen_recurrences, check_stirling_recursions,
    classical_bell, classical_stirling, cnr_table, cnr_word, coloured_bell_first,
    coloured_bell_second, coloured_stirling_first, coloured_stirling_second, first_type_word,
    gen_polynomial, monomial_index, second_type_word, CnrMiddleFactor, CnrTable, GenPolynomial,
    GenRecurrence, StirlingTable, TableKind, Var,
};
pub use word::{
    generator_name, mode_delete, number_difference_power, number_word, sunglasses_word, Generator,
    Word, WordSum,
};
