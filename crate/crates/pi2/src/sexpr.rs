//! Stable s-expression rendering of level-2 proofs, re-parsable for
//! round trips through the CLI.

use thiserror::Error;

use crate::theory::{Comb1, Comb2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SexprError {
    #[error("unbalanced parenthesis in s-expression")]
    Unbalanced,
    #[error("unexpected atom '{0}'")]
    UnexpectedAtom(String),
    #[error("form '{head}' takes {expected} arguments, got {got}")]
    Arity {
        head: String,
        expected: usize,
        got: usize,
    },
    #[error("trailing input after s-expression")]
    Trailing,
}

pub fn comb1_to_sexpr(p: &Comb1) -> String {
    // Display on Comb1 already prints s-expression form.
    p.to_string()
}

pub fn comb2_to_sexpr(u: &Comb2) -> String {
    match u {
        Comb2::Id2(p) => format!("(id2 {p})"),
        Comb2::Inv2(u) => format!("(inv2 {})", comb2_to_sexpr(u)),
        Comb2::Seq2(u, v) => format!("(seq2 {} {})", comb2_to_sexpr(u), comb2_to_sexpr(v)),
        Comb2::Idl(p) => format!("(idl {p})"),
        Comb2::Idr(p) => format!("(idr {p})"),
        Comb2::Assoc(p, q, r) => format!("(assoc {p} {q} {r})"),
        Comb2::Par2(u, v) => format!("(par2 {} {})", comb2_to_sexpr(u), comb2_to_sexpr(v)),
        Comb2::InvCong(u) => format!("(inv-cong {})", comb2_to_sexpr(u)),
        Comb2::InvRightUnit(p) => format!("(inv-right-unit {p})"),
        Comb2::InvLeftUnit(p) => format!("(inv-left-unit {p})"),
        Comb2::InvId => "inv-id".to_string(),
        Comb2::InvNot => "inv-not".to_string(),
        Comb2::InvSeq(p, q) => format!("(inv-seq {p} {q})"),
        Comb2::InvInv(p) => format!("(inv-inv {p})"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Atom(String),
    List(Vec<Node>),
}

fn tokenize(src: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in src.chars() {
        match c {
            '(' | ')' => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(c.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn read(tokens: &[String], pos: &mut usize) -> Result<Node, SexprError> {
    match tokens.get(*pos) {
        None => Err(SexprError::Unbalanced),
        Some(t) if t == "(" => {
            *pos += 1;
            let mut items = Vec::new();
            loop {
                match tokens.get(*pos) {
                    None => return Err(SexprError::Unbalanced),
                    Some(t) if t == ")" => {
                        *pos += 1;
                        return Ok(Node::List(items));
                    }
                    _ => items.push(read(tokens, pos)?),
                }
            }
        }
        Some(t) if t == ")" => Err(SexprError::Unbalanced),
        Some(atom) => {
            *pos += 1;
            Ok(Node::Atom(atom.clone()))
        }
    }
}

fn node_to_comb1(node: &Node) -> Result<Comb1, SexprError> {
    match node {
        Node::Atom(a) => match a.as_str() {
            "id" => Ok(Comb1::Id),
            "not" => Ok(Comb1::Not),
            other => Err(SexprError::UnexpectedAtom(other.to_string())),
        },
        Node::List(items) => {
            let head = match items.first() {
                Some(Node::Atom(h)) => h.as_str(),
                _ => return Err(SexprError::UnexpectedAtom("(".to_string())),
            };
            let args = &items[1..];
            let arity = |n: usize| -> Result<(), SexprError> {
                if args.len() == n {
                    Ok(())
                } else {
                    Err(SexprError::Arity {
                        head: head.to_string(),
                        expected: n,
                        got: args.len(),
                    })
                }
            };
            match head {
                "inv" => {
                    arity(1)?;
                    Ok(Comb1::inv(node_to_comb1(&args[0])?))
                }
                "seq" => {
                    arity(2)?;
                    Ok(Comb1::seq(node_to_comb1(&args[0])?, node_to_comb1(&args[1])?))
                }
                other => Err(SexprError::UnexpectedAtom(other.to_string())),
            }
        }
    }
}

fn node_to_comb2(node: &Node) -> Result<Comb2, SexprError> {
    match node {
        Node::Atom(a) => match a.as_str() {
            "inv-id" => Ok(Comb2::InvId),
            "inv-not" => Ok(Comb2::InvNot),
            other => Err(SexprError::UnexpectedAtom(other.to_string())),
        },
        Node::List(items) => {
            let head = match items.first() {
                Some(Node::Atom(h)) => h.as_str(),
                _ => return Err(SexprError::UnexpectedAtom("(".to_string())),
            };
            let args = &items[1..];
            let arity = |n: usize| -> Result<(), SexprError> {
                if args.len() == n {
                    Ok(())
                } else {
                    Err(SexprError::Arity {
                        head: head.to_string(),
                        expected: n,
                        got: args.len(),
                    })
                }
            };
            match head {
                "id2" => {
                    arity(1)?;
                    Ok(Comb2::Id2(node_to_comb1(&args[0])?))
                }
                "inv2" => {
                    arity(1)?;
                    Ok(Comb2::inv2(node_to_comb2(&args[0])?))
                }
                "seq2" => {
                    arity(2)?;
                    Ok(Comb2::seq2(node_to_comb2(&args[0])?, node_to_comb2(&args[1])?))
                }
                "idl" => {
                    arity(1)?;
                    Ok(Comb2::Idl(node_to_comb1(&args[0])?))
                }
                "idr" => {
                    arity(1)?;
                    Ok(Comb2::Idr(node_to_comb1(&args[0])?))
                }
                "assoc" => {
                    arity(3)?;
                    Ok(Comb2::Assoc(
                        node_to_comb1(&args[0])?,
                        node_to_comb1(&args[1])?,
                        node_to_comb1(&args[2])?,
                    ))
                }
                "par2" => {
                    arity(2)?;
                    Ok(Comb2::par2(node_to_comb2(&args[0])?, node_to_comb2(&args[1])?))
                }
                "inv-cong" => {
                    arity(1)?;
                    Ok(Comb2::inv_cong(node_to_comb2(&args[0])?))
                }
                "inv-right-unit" => {
                    arity(1)?;
                    Ok(Comb2::InvRightUnit(node_to_comb1(&args[0])?))
                }
                "inv-left-unit" => {
                    arity(1)?;
                    Ok(Comb2::InvLeftUnit(node_to_comb1(&args[0])?))
                }
                "inv-seq" => {
                    arity(2)?;
                    Ok(Comb2::InvSeq(
                        node_to_comb1(&args[0])?,
                        node_to_comb1(&args[1])?,
                    ))
                }
                "inv-inv" => {
                    arity(1)?;
                    Ok(Comb2::InvInv(node_to_comb1(&args[0])?))
                }
                other => Err(SexprError::UnexpectedAtom(other.to_string())),
            }
        }
    }
}

pub fn parse_comb2_sexpr(src: &str) -> Result<Comb2, SexprError> {
    let tokens = tokenize(src);
    let mut pos = 0;
    let node = read(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(SexprError::Trailing);
    }
    node_to_comb2(&node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::{canonical, not_not_id};

    #[test]
    fn not_not_id_renders_as_documented() {
        assert_eq!(
            comb2_to_sexpr(&not_not_id()),
            "(seq2 (par2 (inv2 inv-not) (id2 not)) (inv-left-unit not))"
        );
    }

    #[test]
    fn rendering_round_trips() {
        let samples = vec![
            not_not_id(),
            canonical(&Comb1::seq(Comb1::Not, Comb1::Not)).witness,
            canonical(&Comb1::inv(Comb1::seq(Comb1::Id, Comb1::Not))).witness,
            Comb2::Assoc(Comb1::Id, Comb1::Not, Comb1::inv(Comb1::Id)),
            Comb2::InvSeq(Comb1::Not, Comb1::Id),
            Comb2::InvId,
        ];
        for u in samples {
            let text = comb2_to_sexpr(&u);
            assert_eq!(parse_comb2_sexpr(&text), Ok(u), "{text}");
        }
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert_eq!(parse_comb2_sexpr("(id2"), Err(SexprError::Unbalanced));
        assert_eq!(
            parse_comb2_sexpr("(id2 not) extra"),
            Err(SexprError::Trailing)
        );
        assert!(matches!(
            parse_comb2_sexpr("(id2 maybe)"),
            Err(SexprError::UnexpectedAtom(_))
        ));
        assert!(matches!(
            parse_comb2_sexpr("(seq2 inv-id)"),
            Err(SexprError::Arity { .. })
        ));
    }
}