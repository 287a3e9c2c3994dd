//! Concrete syntax.
//!
//! Program files (`.pi`) hold `def NAME = comb` bindings and an optional
//! `main = comb`; derivation files (`.pid`) hold a named step trace.
//! Operator precedence is `!` > `*` > `+` > `;` with all binary operators
//! left-associative. Comments run from `--` to end of line. Names resolve
//! against earlier definitions and the builtin library.

use std::fmt;

use thiserror::Error;

use crate::library::Library;
use crate::rewrite::{Derivation, Direction, Rule, Step};
use crate::semantics::Value;
use crate::syntax::{Comb, FinType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: expected {}, found {found}", expected_list(.expected))]
    Syntax {
        line: usize,
        col: usize,
        found: String,
        expected: Vec<String>,
    },
    #[error("{line}:{col}: unknown name '{name}'")]
    UnknownName {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("{line}:{col}: duplicate definition of '{name}'")]
    DuplicateName {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("{line}:{col}: '{name}' is reserved and cannot be defined")]
    ReservedName {
        line: usize,
        col: usize,
        name: String,
    },
}

fn expected_list(expected: &[String]) -> String {
    match expected {
        [] => "nothing".to_string(),
        [one] => one.clone(),
        many => format!("one of {}", many.join(", ")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(usize),
    ZeroB,
    OneB,
    Semi,
    Plus,
    Star,
    Bang,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Eq,
    FatArrow,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Num(n) => write!(f, "'{n}'"),
            Tok::ZeroB => write!(f, "'0b'"),
            Tok::OneB => write!(f, "'1b'"),
            Tok::Semi => write!(f, "';'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Bang => write!(f, "'!'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::LBracket => write!(f, "'['"),
            Tok::RBracket => write!(f, "']'"),
            Tok::Comma => write!(f, "','"),
            Tok::Colon => write!(f, "':'"),
            Tok::Eq => write!(f, "'='"),
            Tok::FatArrow => write!(f, "'=>'"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else if c.is_some() {
                col += 1;
            }
            c
        }};
    }
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if c == '-' {
            // '--' begins a comment; a lone '-' is not a token
            let mut look = chars.clone();
            look.next();
            if look.peek() == Some(&'-') {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
                continue;
            }
            return Err(ParseError::Syntax {
                line: tline,
                col: tcol,
                found: "'-'".to_string(),
                expected: vec!["a token".to_string()],
            });
        }
        if c.is_ascii_digit() {
            let mut text = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    text.push(d);
                    bump!();
                } else {
                    break;
                }
            }
            // boolean literals 0b / 1b
            if (text == "0" || text == "1") && chars.peek() == Some(&'b') {
                let mut look = chars.clone();
                look.next();
                let boundary = !matches!(look.peek(), Some(d) if d.is_ascii_alphanumeric() || *d == '_');
                if boundary {
                    bump!();
                    out.push(Spanned {
                        tok: if text == "0" { Tok::ZeroB } else { Tok::OneB },
                        line: tline,
                        col: tcol,
                    });
                    continue;
                }
            }
            let n: usize = text.parse().map_err(|_| ParseError::Syntax {
                line: tline,
                col: tcol,
                found: format!("'{text}'"),
                expected: vec!["a number".to_string()],
            })?;
            out.push(Spanned {
                tok: Tok::Num(n),
                line: tline,
                col: tcol,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut text = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    text.push(d);
                    bump!();
                } else {
                    break;
                }
            }
            // the starred/summed primitives lex as single tokens
            if matches!(text.as_str(), "swap" | "unite" | "uniti") {
                if let Some(&op) = chars.peek() {
                    if op == '+' || op == '*' {
                        text.push(op);
                        bump!();
                    }
                }
            }
            out.push(Spanned {
                tok: Tok::Ident(text),
                line: tline,
                col: tcol,
            });
            continue;
        }
        let tok = match c {
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '!' => Tok::Bang,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '=' => {
                bump!();
                if chars.peek() == Some(&'>') {
                    bump!();
                    out.push(Spanned {
                        tok: Tok::FatArrow,
                        line: tline,
                        col: tcol,
                    });
                } else {
                    out.push(Spanned {
                        tok: Tok::Eq,
                        line: tline,
                        col: tcol,
                    });
                }
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    line: tline,
                    col: tcol,
                    found: format!("'{other}'"),
                    expected: vec!["a token".to_string()],
                })
            }
        };
        bump!();
        out.push(Spanned {
            tok,
            line: tline,
            col: tcol,
        });
    }
    Ok(out)
}

const RESERVED: &[&str] = &[
    "id", "swap+", "swap*", "unite*", "uniti*", "dist", "factor", "fold2", "unfold2", "def",
    "main", "swap", "unite", "uniti", "derivation", "step", "at", "fwd", "bwd", "inl", "inr",
];

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    names: &'a Library,
    locals: Library,
}

impl<'a> Parser<'a> {
    fn new(src: &str, names: &'a Library) -> Result<Parser<'a>, ParseError> {
        Ok(Parser {
            toks: lex(src)?,
            pos: 0,
            names,
            locals: Library::default(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos) {
            Some(s) => (s.line, s.col),
            None => self
                .toks
                .last()
                .map(|s| (s.line, s.col + 1))
                .unwrap_or((1, 1)),
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(t) => t.to_string(),
            None => "end of input".to_string(),
        }
    }

    fn err(&self, expected: &[&str]) -> ParseError {
        let (line, col) = self.here();
        ParseError::Syntax {
            line,
            col,
            found: self.found(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.err(&[what]))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err(&["end of input"]))
        }
    }

    fn resolve(&self, name: &str) -> Option<Comb> {
        self.locals
            .get(name)
            .or_else(|| self.names.get(name))
            .cloned()
    }

    // comb := seq-chain of plus-chains of star-chains of bang-prefixed atoms
    fn comb(&mut self) -> Result<Comb, ParseError> {
        let mut left = self.comb_plus()?;
        while self.eat(&Tok::Semi) {
            let right = self.comb_plus()?;
            left = Comb::seq(left, right);
        }
        Ok(left)
    }

    fn comb_plus(&mut self) -> Result<Comb, ParseError> {
        let mut left = self.comb_star()?;
        while self.eat(&Tok::Plus) {
            let right = self.comb_star()?;
            left = Comb::par_plus(left, right);
        }
        Ok(left)
    }

    fn comb_star(&mut self) -> Result<Comb, ParseError> {
        let mut left = self.comb_bang()?;
        while self.eat(&Tok::Star) {
            let right = self.comb_bang()?;
            left = Comb::par_star(left, right);
        }
        Ok(left)
    }

    fn comb_bang(&mut self) -> Result<Comb, ParseError> {
        if self.eat(&Tok::Bang) {
            Ok(Comb::inv(self.comb_bang()?))
        } else {
            self.comb_atom()
        }
    }

    fn comb_atom(&mut self) -> Result<Comb, ParseError> {
        const EXPECTED: &[&str] = &[
            "'id'", "'swap+'", "'swap*'", "'unite*'", "'uniti*'", "'dist'", "'factor'", "'fold2'",
            "'unfold2'", "a name", "'!'", "'('",
        ];
        let (line, col) = self.here();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.comb()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "id" => Ok(Comb::Id),
                    "swap+" => Ok(Comb::SwapPlus),
                    "swap*" => Ok(Comb::SwapStar),
                    "unite*" => Ok(Comb::UniteStar),
                    "uniti*" => Ok(Comb::UnitiStar),
                    "dist" => Ok(Comb::Dist),
                    "factor" => Ok(Comb::Factor),
                    "fold2" => Ok(Comb::FoldBool),
                    "unfold2" => Ok(Comb::UnfoldBool),
                    other => self.resolve(other).ok_or(ParseError::UnknownName {
                        line,
                        col,
                        name: other.to_string(),
                    }),
                }
            }
            _ => Err(self.err(EXPECTED)),
        }
    }

    // type := sum-chain of prod-chains of atoms
    fn fin_type(&mut self) -> Result<FinType, ParseError> {
        let mut left = self.type_prod()?;
        while self.eat(&Tok::Plus) {
            let right = self.type_prod()?;
            left = FinType::sum(left, right);
        }
        Ok(left)
    }

    fn type_prod(&mut self) -> Result<FinType, ParseError> {
        let mut left = self.type_atom()?;
        while self.eat(&Tok::Star) {
            let right = self.type_atom()?;
            left = FinType::prod(left, right);
        }
        Ok(left)
    }

    fn type_atom(&mut self) -> Result<FinType, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(0)) => {
                self.pos += 1;
                Ok(FinType::Zero)
            }
            Some(Tok::Num(1)) => {
                self.pos += 1;
                Ok(FinType::One)
            }
            Some(Tok::Num(2)) => {
                self.pos += 1;
                Ok(FinType::Two)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.fin_type()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.err(&["'0'", "'1'", "'2'", "'('"])),
        }
    }

    fn value(&mut self) -> Result<Value, ParseError> {
        match self.peek().cloned() {
            Some(Tok::ZeroB) => {
                self.pos += 1;
                Ok(Value::Zero2)
            }
            Some(Tok::OneB) => {
                self.pos += 1;
                Ok(Value::One2)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                if self.eat(&Tok::RParen) {
                    return Ok(Value::Unit);
                }
                let a = self.value()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.value()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Value::pair(a, b))
            }
            Some(Tok::Ident(name)) if name == "inl" => {
                self.pos += 1;
                Ok(Value::inl(self.value()?))
            }
            Some(Tok::Ident(name)) if name == "inr" => {
                self.pos += 1;
                Ok(Value::inr(self.value()?))
            }
            _ => Err(self.err(&["'()'", "'0b'", "'1b'", "'inl'", "'inr'", "'('"])),
        }
    }

    fn name(&mut self, what: &str) -> Result<(String, usize, usize), ParseError> {
        let (line, col) = self.here();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok((name, line, col))
            }
            _ => Err(self.err(&[what])),
        }
    }

    fn program(&mut self) -> Result<Program, ParseError> {
        let mut defs = Vec::new();
        let mut main = None;
        loop {
            if self.eat_keyword("def") {
                let (name, line, col) = self.name("a name")?;
                if RESERVED.contains(&name.as_str()) {
                    return Err(ParseError::ReservedName { line, col, name });
                }
                if self.resolve(&name).is_some() {
                    return Err(ParseError::DuplicateName { line, col, name });
                }
                self.expect(Tok::Eq, "'='")?;
                let body = self.comb()?;
                self.locals
                    .define(&name, body.clone())
                    .map_err(|_| ParseError::DuplicateName { line, col, name: name.clone() })?;
                defs.push((name, body));
                continue;
            }
            if self.eat_keyword("main") {
                self.expect(Tok::Eq, "'='")?;
                main = Some(self.comb()?);
                self.expect_end()?;
                break;
            }
            self.expect_end()?;
            break;
        }
        Ok(Program { defs, main })
    }

    fn derivation(&mut self) -> Result<(String, Derivation), ParseError> {
        if !self.eat_keyword("derivation") {
            return Err(self.err(&["'derivation'"]));
        }
        let (name, _, _) = self.name("a derivation name")?;
        self.expect(Tok::Colon, "':'")?;
        let start = self.comb()?;
        self.expect(Tok::FatArrow, "'=>'")?;
        let claimed_end = self.comb()?;
        let mut steps = Vec::new();
        while self.eat_keyword("step") {
            let (rule_name, line, col) = self.name("a rule name")?;
            let rule = match rule_name.as_str() {
                "assocL" => Rule::AssocL,
                "assocR" => Rule::AssocR,
                "idL" => Rule::IdL,
                "idR" => Rule::IdR,
                "cancelAdj" => Rule::CancelAdj,
                "swapNat" => Rule::SwapNat,
                "unitiNat" => Rule::UnitiNat,
                other => {
                    return Err(ParseError::Syntax {
                        line,
                        col,
                        found: format!("'{other}'"),
                        expected: vec![
                            "'assocL'".into(),
                            "'assocR'".into(),
                            "'idL'".into(),
                            "'idR'".into(),
                            "'cancelAdj'".into(),
                            "'swapNat'".into(),
                            "'unitiNat'".into(),
                        ],
                    })
                }
            };
            if !self.eat_keyword("at") {
                return Err(self.err(&["'at'"]));
            }
            self.expect(Tok::LBracket, "'['")?;
            let mut position = Vec::new();
            if !self.eat(&Tok::RBracket) {
                loop {
                    match self.advance() {
                        Some(Tok::Num(n)) => position.push(n),
                        _ => {
                            self.pos = self.pos.saturating_sub(1);
                            return Err(self.err(&["a child index"]));
                        }
                    }
                    if self.eat(&Tok::RBracket) {
                        break;
                    }
                    self.expect(Tok::Comma, "','")?;
                }
            }
            let direction = if self.eat_keyword("fwd") {
                Direction::Forward
            } else if self.eat_keyword("bwd") {
                Direction::Backward
            } else {
                return Err(self.err(&["'fwd'", "'bwd'"]));
            };
            steps.push(Step {
                rule,
                position,
                direction,
            });
        }
        self.expect_end()?;
        Ok((
            name,
            Derivation {
                start,
                steps,
                claimed_end,
            },
        ))
    }
}

/// A parsed `.pi` file: the definitions in order, plus the optional
/// `main` program.
#[derive(Debug, Clone)]
pub struct Program {
    pub defs: Vec<(String, Comb)>,
    pub main: Option<Comb>,
}

/// Parse a combinator, resolving names against the builtin library.
pub fn parse_comb(src: &str) -> Result<Comb, ParseError> {
    parse_comb_with(src, &crate::library::builtin_library())
}

/// Parse a combinator against an explicit name table.
pub fn parse_comb_with(src: &str, names: &Library) -> Result<Comb, ParseError> {
    let mut p = Parser::new(src, names)?;
    let c = p.comb()?;
    p.expect_end()?;
    Ok(c)
}

pub fn parse_type(src: &str) -> Result<FinType, ParseError> {
    let empty = Library::default();
    let mut p = Parser::new(src, &empty)?;
    let t = p.fin_type()?;
    p.expect_end()?;
    Ok(t)
}

pub fn parse_value(src: &str) -> Result<Value, ParseError> {
    let empty = Library::default();
    let mut p = Parser::new(src, &empty)?;
    let v = p.value()?;
    p.expect_end()?;
    Ok(v)
}

/// Parse a `.pi` program file against the builtin library.
pub fn parse_program(src: &str) -> Result<Program, ParseError> {
    let builtins = crate::library::builtin_library();
    let mut p = Parser::new(src, &builtins)?;
    p.program()
}

/// Parse a `.pid` derivation file: name, start, steps and claimed end.
pub fn parse_derivation(src: &str) -> Result<(String, Derivation), ParseError> {
    let builtins = crate::library::builtin_library();
    let mut p = Parser::new(src, &builtins)?;
    p.derivation()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn seq_is_left_associative() {
        let c = parse_comb("unfold2 ; swap+ ; fold2").unwrap();
        assert_eq!(
            c,
            Comb::seq(
                Comb::seq(Comb::UnfoldBool, Comb::SwapPlus),
                Comb::FoldBool
            )
        );
        assert_eq!(c, library::not_gate());
    }

    #[test]
    fn single_token_and_inverse_grouping() {
        assert_eq!(parse_comb("id").unwrap(), Comb::Id);
        assert_eq!(
            parse_comb("!(id ; id)").unwrap(),
            Comb::inv(Comb::seq(Comb::Id, Comb::Id))
        );
        // '!' binds tighter than ';'
        assert_eq!(
            parse_comb("!id ; id").unwrap(),
            Comb::seq(Comb::inv(Comb::Id), Comb::Id)
        );
    }

    #[test]
    fn precedence_star_over_plus_over_seq() {
        let c = parse_comb("id + id * id ; id").unwrap();
        assert_eq!(
            c,
            Comb::seq(
                Comb::par_plus(Comb::Id, Comb::par_star(Comb::Id, Comb::Id)),
                Comb::Id
            )
        );
    }

    #[test]
    fn names_resolve_against_builtins() {
        assert_eq!(parse_comb("not").unwrap(), library::not_gate());
        assert_eq!(parse_comb("toffoli").unwrap(), library::toffoli());
        let err = parse_comb("nonesuch").unwrap_err();
        assert!(matches!(err, ParseError::UnknownName { .. }));
    }

    #[test]
    fn errors_carry_line_and_column() {
        let err = parse_comb("id ;\n; id").unwrap_err();
        match err {
            ParseError::Syntax { line, col, .. } => {
                assert_eq!((line, col), (2, 1));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn comments_are_skipped() {
        let src = "-- negation, twice\nnot ; not -- trailing";
        assert_eq!(
            parse_comb(src).unwrap(),
            Comb::seq(library::not_gate(), library::not_gate())
        );
    }

    #[test]
    fn types_parse_with_product_precedence() {
        assert_eq!(
            parse_type("2 + 1 * 2").unwrap(),
            FinType::sum(FinType::Two, FinType::prod(FinType::One, FinType::Two))
        );
        assert_eq!(
            parse_type("(2 + 1) * 0").unwrap(),
            FinType::prod(FinType::sum(FinType::Two, FinType::One), FinType::Zero)
        );
    }

    #[test]
    fn values_parse() {
        assert_eq!(parse_value("()").unwrap(), Value::Unit);
        assert_eq!(
            parse_value("(1b,(1b,0b))").unwrap(),
            Value::pair(Value::One2, Value::pair(Value::One2, Value::Zero2))
        );
        assert_eq!(
            parse_value("inl inr ()").unwrap(),
            Value::inl(Value::inr(Value::Unit))
        );
        assert_eq!(
            parse_value("( 0b , 1b )").unwrap(),
            Value::pair(Value::Zero2, Value::One2)
        );
    }

    #[test]
    fn program_files_bind_defs_in_order() {
        let src = "def nn = not ; not\ndef nnn = nn ; not\nmain = nnn";
        let prog = parse_program(src).unwrap();
        assert_eq!(prog.defs.len(), 2);
        let not = library::not_gate();
        assert_eq!(
            prog.main.unwrap(),
            Comb::seq(Comb::seq(not.clone(), not.clone()), not)
        );
    }

    #[test]
    fn program_rejects_duplicates_and_reserved_names() {
        assert!(matches!(
            parse_program("def not = id").unwrap_err(),
            ParseError::DuplicateName { .. }
        ));
        assert!(matches!(
            parse_program("def x = id\ndef x = id").unwrap_err(),
            ParseError::DuplicateName { .. }
        ));
        assert!(matches!(
            parse_program("def main = id").unwrap_err(),
            ParseError::ReservedName { .. }
        ));
    }

    #[test]
    fn derivation_files_parse() {
        let src = "derivation demo : not ; not => not ; not\n  step assocL at [] fwd\n  step assocR at [] bwd";
        // assocL at root of a two-node seq will fail at replay, but parsing
        // is purely syntactic.
        let (name, d) = parse_derivation(src).unwrap();
        assert_eq!(name, "demo");
        assert_eq!(d.steps.len(), 2);
        assert_eq!(d.steps[0].rule, Rule::AssocL);
        assert_eq!(d.steps[0].position, Vec::<usize>::new());
        assert_eq!(d.steps[0].direction, Direction::Forward);
        assert_eq!(d.steps[1].direction, Direction::Backward);
    }

    #[test]
    fn derivation_positions_parse() {
        let src = "derivation p : not3 => not3\n  step cancelAdj at [1,1,0] fwd";
        let (_, d) = parse_derivation(src).unwrap();
        assert_eq!(d.steps[0].position, vec![1, 1, 0]);
    }
}
