//! Rendering ASTs back to source text.
//!
//! Printing inserts the minimal parentheses needed under the precedence
//! `!` > `*` > `+` > `;` (binary operators left-associative), so
//! `parse_comb(pretty(c))` returns `c` for every AST. `pretty_with_names`
//! additionally collapses subterms that match a name-table definition.

use std::fmt;

use crate::library::Library;
use crate::syntax::{Comb, FinType};

fn prec(c: &Comb) -> u8 {
    match c {
        Comb::Seq(..) => 0,
        Comb::ParPlus(..) => 1,
        Comb::ParStar(..) => 2,
        Comb::Inv(..) => 3,
        _ => 4,
    }
}

fn atom_name(c: &Comb) -> Option<&'static str> {
    Some(match c {
        Comb::Id => "id",
        Comb::SwapPlus => "swap+",
        Comb::SwapStar => "swap*",
        Comb::UniteStar => "unite*",
        Comb::UnitiStar => "uniti*",
        Comb::Dist => "dist",
        Comb::Factor => "factor",
        Comb::FoldBool => "fold2",
        Comb::UnfoldBool => "unfold2",
        _ => return None,
    })
}

fn go(c: &Comb, names: Option<&Library>, ctx: u8, out: &mut String) {
    if let Some(table) = names {
        if let Some(name) = table.name_of(c) {
            out.push_str(name);
            return;
        }
    }
    if let Some(name) = atom_name(c) {
        out.push_str(name);
        return;
    }
    let p = prec(c);
    let wrap = p < ctx;
    if wrap {
        out.push('(');
    }
    match c {
        Comb::Inv(inner) => {
            out.push('!');
            go(inner, names, 3, out);
        }
        Comb::Seq(a, b) => {
            go(a, names, 0, out);
            out.push_str(" ; ");
            go(b, names, 1, out);
        }
        Comb::ParPlus(a, b) => {
            go(a, names, 1, out);
            out.push_str(" + ");
            go(b, names, 2, out);
        }
        Comb::ParStar(a, b) => {
            go(a, names, 2, out);
            out.push_str(" * ");
            go(b, names, 3, out);
        }
        _ => unreachable!("atoms handled above"),
    }
    if wrap {
        out.push(')');
    }
}

/// Canonical rendering, re-parsable by `parse_comb`.
pub fn pretty(c: &Comb) -> String {
    let mut out = String::new();
    go(c, None, 0, &mut out);
    out
}

/// Rendering that prints a name wherever a whole subterm matches a table
/// definition. Re-parsable against the same table.
pub fn pretty_with_names(c: &Comb, names: &Library) -> String {
    let mut out = String::new();
    go(c, Some(names), 0, &mut out);
    out
}

impl fmt::Display for Comb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty(self))
    }
}

pub fn pretty_type(t: &FinType) -> String {
    fn go(t: &FinType, ctx: u8, out: &mut String) {
        let p = match t {
            FinType::Sum(..) => 1,
            FinType::Prod(..) => 2,
            _ => 3,
        };
        let wrap = p < ctx;
        if wrap {
            out.push('(');
        }
        match t {
            FinType::Zero => out.push('0'),
            FinType::One => out.push('1'),
            FinType::Two => out.push('2'),
            FinType::Sum(a, b) => {
                go(a, 1, out);
                out.push_str(" + ");
                go(b, 2, out);
            }
            FinType::Prod(a, b) => {
                go(a, 2, out);
                out.push_str(" * ");
                go(b, 3, out);
            }
        }
        if wrap {
            out.push(')');
        }
    }
    let mut out = String::new();
    go(t, 0, &mut out);
    out
}

impl fmt::Display for FinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty_type(self))
    }
}
