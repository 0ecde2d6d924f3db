//! Plain-text dumps of the five-valued truth tables, in the same row and
//! column order as the printed tables: t, c, h, u, f.

use crate::logic5::{
    complement_sym, dual_sym, equivalence_sym, intersection_sym, negation_sym, s_implication_sym,
    union_sym, LogicValue5, VALUES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    Union,
    Intersection,
    Complement,
    Negation,
    Dual,
    Equivalence,
    Implication,
}

impl TableKind {
    fn name(self) -> &'static str {
        match self {
            TableKind::Union => "union",
            TableKind::Intersection => "intersection",
            TableKind::Complement => "complement",
            TableKind::Negation => "negation",
            TableKind::Dual => "dual",
            TableKind::Equivalence => "equivalence",
            TableKind::Implication => "implication",
        }
    }
}

/// Renders the requested table. Binary connectives produce a 5x5 grid with
/// a header naming the operator and the column order; unary operators
/// produce a two-column value map.
pub fn render_table(kind: TableKind) -> String {
    match kind {
        TableKind::Union => render_binary(kind, union_sym),
        TableKind::Intersection => render_binary(kind, intersection_sym),
        TableKind::Equivalence => render_binary(kind, equivalence_sym),
        TableKind::Implication => render_binary(kind, s_implication_sym),
        TableKind::Complement => render_unary(kind, complement_sym),
        TableKind::Negation => render_unary(kind, negation_sym),
        TableKind::Dual => render_unary(kind, dual_sym),
    }
}

fn render_binary(kind: TableKind, op: fn(LogicValue5, LogicValue5) -> LogicValue5) -> String {
    let mut text = String::from(kind.name());
    for col in VALUES {
        text.push(' ');
        text.push(col.symbol());
    }
    text.push('\n');
    for row in VALUES {
        text.push(row.symbol());
        for col in VALUES {
            text.push(' ');
            text.push(op(row, col).symbol());
        }
        text.push('\n');
    }
    text
}

fn render_unary(kind: TableKind, op: fn(LogicValue5) -> LogicValue5) -> String {
    let mut text = String::from(kind.name());
    text.push('\n');
    for row in VALUES {
        text.push(row.symbol());
        text.push(' ');
        text.push(op(row).symbol());
        text.push('\n');
    }
    text
}
