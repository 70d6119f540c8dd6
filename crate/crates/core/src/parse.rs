//! Text grammar for operator words.
//!
//! A word is a whitespace-separated sequence of letter tokens. Each token is
//! a mode name, an optional `+` marking a creator, and an optional `^k`
//! repetition. Mode names are always accepted in the canonical form `a1`,
//! `a2`, ...; the bare aliases `a`, `b`, `c`, `d` are accepted only when the
//! system has at most four modes.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::modes::ModeSystem;
use crate::word::{Generator, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// A character that no token may start with or contain.
    UnexpectedChar(char),
    /// A numeric field (mode index or exponent) that does not fit in u32.
    InvalidNumber,
    /// A mode index outside 1..=modes.
    ModeOutOfRange { mode: u32, modes: usize },
    /// A bare alias letter used while the system has more than four modes.
    AliasUnavailable(char),
    /// Expansion of the word would exceed the configured length cap.
    TooLong { len: usize, cap: usize },
}

/// A parse failure, carrying the 1-based byte position where it occurred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(
                    f,
                    "unexpected character '{c}' at position {}",
                    self.position
                )
            }
            ParseErrorKind::InvalidNumber => {
                write!(f, "number too large at position {}", self.position)
            }
            ParseErrorKind::ModeOutOfRange { mode, modes } => write!(
                f,
                "mode {mode} out of range for a {modes}-mode system at position {}",
                self.position
            ),
            ParseErrorKind::AliasUnavailable(c) => write!(
                f,
                "alias '{c}' needs a system of at most four modes at position {}; use a1..aN",
                self.position
            ),
            ParseErrorKind::TooLong { len, cap } => write!(
                f,
                "word expands to {len} letters, over the cap of {cap} (position {})",
                self.position
            ),
        }
    }
}

impl core::error::Error for ParseError {}

/// Parses `text` into a word over `sys` with no length cap.
pub fn parse_word(text: &str, sys: &ModeSystem) -> Result<Word, ParseError> {
    parse_word_capped(text, sys, usize::MAX)
}

/// Parses `text` into a word over `sys`, failing if the expanded word would
/// be longer than `cap` letters.
pub fn parse_word_capped(text: &str, sys: &ModeSystem, cap: usize) -> Result<Word, ParseError> {
    let bytes = text.as_bytes();
    let mut letters: Vec<Generator> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let token_start = i;
        let c = bytes[i] as char;
        if !c.is_ascii_lowercase() {
            return Err(ParseError {
                position: i + 1,
                kind: ParseErrorKind::UnexpectedChar(char_at(text, i)),
            });
        }
        i += 1;
        let mode: u32 = if i < bytes.len() && bytes[i].is_ascii_digit() {
            // digits continue a token only in the canonical a<N> spelling
            if c != 'a' {
                return Err(ParseError {
                    position: i + 1,
                    kind: ParseErrorKind::UnexpectedChar(char_at(text, i)),
                });
            }
            let (value, next) = read_number(bytes, i).ok_or(ParseError {
                position: i + 1,
                kind: ParseErrorKind::InvalidNumber,
            })?;
            i = next;
            value
        } else if ('a'..='d').contains(&c) {
            if sys.modes() > 4 {
                return Err(ParseError {
                    position: token_start + 1,
                    kind: ParseErrorKind::AliasUnavailable(c),
                });
            }
            (c as u32) - ('a' as u32) + 1
        } else {
            return Err(ParseError {
                position: token_start + 1,
                kind: ParseErrorKind::UnexpectedChar(c),
            });
        };
        if mode < 1 || mode as usize > sys.modes() {
            return Err(ParseError {
                position: token_start + 1,
                kind: ParseErrorKind::ModeOutOfRange {
                    mode,
                    modes: sys.modes(),
                },
            });
        }
        let mut dagger = false;
        if i < bytes.len() && bytes[i] == b'+' {
            dagger = true;
            i += 1;
        }
        let mut exponent: u32 = 1;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                let (position, kind) = if i < bytes.len() {
                    (i + 1, ParseErrorKind::UnexpectedChar(char_at(text, i)))
                } else {
                    (i, ParseErrorKind::UnexpectedChar('^'))
                };
                return Err(ParseError { position, kind });
            }
            let (value, next) = read_number(bytes, i).ok_or(ParseError {
                position: i + 1,
                kind: ParseErrorKind::InvalidNumber,
            })?;
            i = next;
            exponent = value;
        }
        let new_len = letters.len().saturating_add(exponent as usize);
        if new_len > cap {
            return Err(ParseError {
                position: token_start + 1,
                kind: ParseErrorKind::TooLong { len: new_len, cap },
            });
        }
        let g = Generator { mode, dagger };
        for _ in 0..exponent {
            letters.push(g);
        }
    }
    Ok(Word::from_letters(letters))
}

fn char_at(text: &str, byte: usize) -> char {
    text[byte..].chars().next().unwrap_or('?')
}

fn read_number(bytes: &[u8], start: usize) -> Option<(u32, usize)> {
    let mut value: u32 = 0;
    let mut i = start;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        value = value
            .checked_mul(10)?
            .checked_add((bytes[i] - b'0') as u32)?;
        i += 1;
    }
    Some((value, i))
}

/// Renders a parse error with a caret line pointing at the offending byte.
pub fn render_error(text: &str, err: &ParseError) -> String {
    use core::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "{err}");
    let _ = writeln!(out, "  {text}");
    let col = err.position.saturating_sub(1).min(text.len());
    let _ = write!(out, "  {}^", " ".repeat(col));
    out
}
