//! The symbolic five-valued logic over {true, contradictory, hesitant,
//! unknown, false}.
//!
//! The logic extends Belnap's four values with *hesitant*. The departure
//! from Belnap sits entirely in how contradictory and unknown interact:
//! here `c ∪ u = h` and `c ∩ u = h`, where Belnap has `t` and `f`.
//!
//! Binary connectives are stored as golden 5x5 tables in the row/column
//! order t, c, h, u, f. Equivalence and implication are implemented
//! compositionally from union and complement; tests check them against the
//! printed tables entry for entry.

use LogicValue5::{Contradictory as C, False as F, Hesitant as H, True as T, Unknown as U};

/// One of the five logical values. No linear truth order is defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum LogicValue5 {
    True = 0,
    Contradictory = 1,
    Hesitant = 2,
    Unknown = 3,
    False = 4,
}

/// All five values in table order t, c, h, u, f.
pub const VALUES: [LogicValue5; 5] = [T, C, H, U, F];

impl LogicValue5 {
    /// Single-letter symbol used in table dumps.
    pub fn symbol(self) -> char {
        match self {
            T => 't',
            C => 'c',
            H => 'h',
            U => 'u',
            F => 'f',
        }
    }

    #[inline]
    fn idx(self) -> usize {
        self as usize
    }
}

impl std::fmt::Display for LogicValue5 {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(out, "{}", self.symbol())
    }
}

/// Union. Identity element f, absorbing element t, and `c ∪ u = h`.
///
/// | ∪ | t | c | h | u | f |
/// |---|---|---|---|---|---|
/// | t | t | t | t | t | t |
/// | c | t | c | h | h | c |
/// | h | t | h | h | h | h |
/// | u | t | h | h | u | u |
/// | f | t | c | h | u | f |
const UNION: [[LogicValue5; 5]; 5] = [
    [T, T, T, T, T],
    [T, C, H, H, C],
    [T, H, H, H, H],
    [T, H, H, U, U],
    [T, C, H, U, F],
];

/// Intersection. Identity element t, absorbing element f, and `c ∩ u = h`.
///
/// | ∩ | t | c | h | u | f |
/// |---|---|---|---|---|---|
/// | t | t | c | h | u | f |
/// | c | c | c | h | h | f |
/// | h | h | h | h | h | f |
/// | u | u | h | h | u | f |
/// | f | f | f | f | f | f |
const INTERSECTION: [[LogicValue5; 5]; 5] = [
    [T, C, H, U, F],
    [C, C, H, H, F],
    [H, H, H, H, F],
    [U, H, H, U, F],
    [F, F, F, F, F],
];

/// Complement: swaps t and f, fixes c, h, u.
const COMPLEMENT: [LogicValue5; 5] = [F, C, H, U, T];

/// Negation: swaps t and f, swaps c and u, fixes h.
const NEGATION: [LogicValue5; 5] = [F, U, H, C, T];

/// Dual: swaps c and u, fixes t, h, f.
const DUAL: [LogicValue5; 5] = [T, U, H, C, F];

pub fn union_sym(x: LogicValue5, y: LogicValue5) -> LogicValue5 {
    UNION[x.idx()][y.idx()]
}

pub fn intersection_sym(x: LogicValue5, y: LogicValue5) -> LogicValue5 {
    INTERSECTION[x.idx()][y.idx()]
}

pub fn complement_sym(x: LogicValue5) -> LogicValue5 {
    COMPLEMENT[x.idx()]
}

pub fn negation_sym(x: LogicValue5) -> LogicValue5 {
    NEGATION[x.idx()]
}

pub fn dual_sym(x: LogicValue5) -> LogicValue5 {
    DUAL[x.idx()]
}

/// Equivalence, defined compositionally: `x ↔ y = (¬x ∪ y) ∩ (x ∪ ¬y)`.
pub fn equivalence_sym(x: LogicValue5, y: LogicValue5) -> LogicValue5 {
    intersection_sym(
        union_sym(complement_sym(x), y),
        union_sym(x, complement_sym(y)),
    )
}

/// S-implication, defined compositionally: `x → y = ¬x ∪ y`.
pub fn s_implication_sym(x: LogicValue5, y: LogicValue5) -> LogicValue5 {
    union_sym(complement_sym(x), y)
}
