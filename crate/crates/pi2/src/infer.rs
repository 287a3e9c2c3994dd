//! Type inference for combinators.
//!
//! Primitives are polymorphic (`swap*` works at any product type), so each
//! occurrence gets fresh type variables and the term's composition
//! constraints are solved by unification. A term is accepted only when the
//! constraints are consistent; `infer` additionally demands that every
//! variable is fixed, rejecting programs such as a bare `id` as `Ambiguous`.

use std::fmt;

use thiserror::Error;

use crate::syntax::{Comb, FinType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("type mismatch: cannot unify {left} with {right}")]
    Mismatch { left: String, right: String },
    #[error("ambiguous type: {dom} <-> {cod} leaves type variables unresolved")]
    Ambiguous { dom: String, cod: String },
}

/// Internal type skeleton: a finite type with unification variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Ty {
    Zero,
    One,
    Two,
    Sum(Box<Ty>, Box<Ty>),
    Prod(Box<Ty>, Box<Ty>),
    Var(u32),
}

impl Ty {
    fn sum(a: Ty, b: Ty) -> Ty {
        Ty::Sum(Box::new(a), Box::new(b))
    }

    fn prod(a: Ty, b: Ty) -> Ty {
        Ty::Prod(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Products bind tighter than sums; parenthesise accordingly.
        fn go(t: &Ty, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
            let prec = match t {
                Ty::Sum(..) => 1,
                Ty::Prod(..) => 2,
                _ => 3,
            };
            if prec < ctx {
                write!(f, "(")?;
            }
            match t {
                Ty::Zero => write!(f, "0")?,
                Ty::One => write!(f, "1")?,
                Ty::Two => write!(f, "2")?,
                Ty::Sum(a, b) => {
                    go(a, f, 1)?;
                    write!(f, " + ")?;
                    go(b, f, 2)?;
                }
                Ty::Prod(a, b) => {
                    go(a, f, 2)?;
                    write!(f, " * ")?;
                    go(b, f, 3)?;
                }
                Ty::Var(n) => write!(f, "t{n}")?,
            }
            if prec < ctx {
                write!(f, ")")?;
            }
            Ok(())
        }
        go(self, f, 0)
    }
}

impl From<&FinType> for Ty {
    fn from(t: &FinType) -> Ty {
        match t {
            FinType::Zero => Ty::Zero,
            FinType::One => Ty::One,
            FinType::Two => Ty::Two,
            FinType::Sum(a, b) => Ty::sum(Ty::from(&**a), Ty::from(&**b)),
            FinType::Prod(a, b) => Ty::prod(Ty::from(&**a), Ty::from(&**b)),
        }
    }
}

#[derive(Default)]
struct Unifier {
    bindings: Vec<Option<Ty>>,
}

impl Unifier {
    fn fresh(&mut self) -> Ty {
        self.bindings.push(None);
        Ty::Var(self.bindings.len() as u32 - 1)
    }

    /// Chase variable bindings one level.
    fn shallow(&self, t: &Ty) -> Ty {
        let mut cur = t.clone();
        while let Ty::Var(v) = cur {
            match &self.bindings[v as usize] {
                Some(bound) => cur = bound.clone(),
                None => return Ty::Var(v),
            }
        }
        cur
    }

    fn occurs(&self, v: u32, t: &Ty) -> bool {
        match self.shallow(t) {
            Ty::Var(w) => w == v,
            Ty::Sum(a, b) | Ty::Prod(a, b) => self.occurs(v, &a) || self.occurs(v, &b),
            _ => false,
        }
    }

    fn unify(&mut self, left: &Ty, right: &Ty) -> Result<(), TypeError> {
        let l = self.shallow(left);
        let r = self.shallow(right);
        match (l, r) {
            (Ty::Var(v), Ty::Var(w)) if v == w => Ok(()),
            (Ty::Var(v), t) | (t, Ty::Var(v)) => {
                if self.occurs(v, &t) {
                    return Err(self.mismatch(&Ty::Var(v), &t));
                }
                self.bindings[v as usize] = Some(t);
                Ok(())
            }
            (Ty::Zero, Ty::Zero) | (Ty::One, Ty::One) | (Ty::Two, Ty::Two) => Ok(()),
            (Ty::Sum(a1, b1), Ty::Sum(a2, b2)) | (Ty::Prod(a1, b1), Ty::Prod(a2, b2)) => {
                self.unify(&a1, &a2)?;
                self.unify(&b1, &b2)
            }
            (l, r) => Err(self.mismatch(&l, &r)),
        }
    }

    fn mismatch(&self, left: &Ty, right: &Ty) -> TypeError {
        TypeError::Mismatch {
            left: self.resolve(left).to_string(),
            right: self.resolve(right).to_string(),
        }
    }

    /// Fully substitute bindings into a type.
    fn resolve(&self, t: &Ty) -> Ty {
        match self.shallow(t) {
            Ty::Sum(a, b) => Ty::sum(self.resolve(&a), self.resolve(&b)),
            Ty::Prod(a, b) => Ty::prod(self.resolve(&a), self.resolve(&b)),
            other => other,
        }
    }

    fn visit(&mut self, c: &Comb) -> Result<(Ty, Ty), TypeError> {
        match c {
            Comb::Id => {
                let a = self.fresh();
                Ok((a.clone(), a))
            }
            Comb::SwapPlus => {
                let (a, b) = (self.fresh(), self.fresh());
                Ok((Ty::sum(a.clone(), b.clone()), Ty::sum(b, a)))
            }
            Comb::SwapStar => {
                let (a, b) = (self.fresh(), self.fresh());
                Ok((Ty::prod(a.clone(), b.clone()), Ty::prod(b, a)))
            }
            Comb::UniteStar => {
                let a = self.fresh();
                Ok((Ty::prod(Ty::One, a.clone()), a))
            }
            Comb::UnitiStar => {
                let a = self.fresh();
                Ok((a.clone(), Ty::prod(Ty::One, a)))
            }
            Comb::Dist => {
                let (a, b, c) = (self.fresh(), self.fresh(), self.fresh());
                Ok((
                    Ty::prod(Ty::sum(a.clone(), b.clone()), c.clone()),
                    Ty::sum(Ty::prod(a, c.clone()), Ty::prod(b, c)),
                ))
            }
            Comb::Factor => {
                let (a, b, c) = (self.fresh(), self.fresh(), self.fresh());
                Ok((
                    Ty::sum(Ty::prod(a.clone(), c.clone()), Ty::prod(b.clone(), c.clone())),
                    Ty::prod(Ty::sum(a, b), c),
                ))
            }
            Comb::FoldBool => Ok((Ty::sum(Ty::One, Ty::One), Ty::Two)),
            Comb::UnfoldBool => Ok((Ty::Two, Ty::sum(Ty::One, Ty::One))),
            Comb::Inv(p) => {
                let (dom, cod) = self.visit(p)?;
                Ok((cod, dom))
            }
            Comb::Seq(p, q) => {
                let (dom_p, cod_p) = self.visit(p)?;
                let (dom_q, cod_q) = self.visit(q)?;
                self.unify(&cod_p, &dom_q)?;
                Ok((dom_p, cod_q))
            }
            Comb::ParPlus(p, q) => {
                let (dom_p, cod_p) = self.visit(p)?;
                let (dom_q, cod_q) = self.visit(q)?;
                Ok((Ty::sum(dom_p, dom_q), Ty::sum(cod_p, cod_q)))
            }
            Comb::ParStar(p, q) => {
                let (dom_p, cod_p) = self.visit(p)?;
                let (dom_q, cod_q) = self.visit(q)?;
                Ok((Ty::prod(dom_p, dom_q), Ty::prod(cod_p, cod_q)))
            }
        }
    }
}

fn ground(t: &Ty) -> Option<FinType> {
    match t {
        Ty::Zero => Some(FinType::Zero),
        Ty::One => Some(FinType::One),
        Ty::Two => Some(FinType::Two),
        Ty::Sum(a, b) => Some(FinType::sum(ground(a)?, ground(b)?)),
        Ty::Prod(a, b) => Some(FinType::prod(ground(a)?, ground(b)?)),
        Ty::Var(_) => None,
    }
}

/// Infer the unique monomorphic typing of a term.
///
/// Fails with `Mismatch` when composition constraints conflict and with
/// `Ambiguous` when the term does not fix all its type variables.
pub fn infer(c: &Comb) -> Result<(FinType, FinType), TypeError> {
    let mut u = Unifier::default();
    let (dom, cod) = u.visit(c)?;
    let dom = u.resolve(&dom);
    let cod = u.resolve(&cod);
    match (ground(&dom), ground(&cod)) {
        (Some(d), Some(c)) => Ok((d, c)),
        _ => Err(TypeError::Ambiguous {
            dom: dom.to_string(),
            cod: cod.to_string(),
        }),
    }
}

/// Check that a term's typing constraints are consistent, allowing
/// unresolved variables. Used where a subterm is examined outside the
/// context that would pin its type down.
pub fn consistent(c: &Comb) -> Result<(), TypeError> {
    Unifier::default().visit(c).map(|_| ())
}

/// Like `infer`, but additionally constrain the term's endpoints to the
/// given types.
pub fn infer_at(c: &Comb, dom: &FinType, cod: &FinType) -> Result<(), TypeError> {
    let mut u = Unifier::default();
    let (d, k) = u.visit(c)?;
    u.unify(&d, &Ty::from(dom))?;
    u.unify(&k, &Ty::from(cod))
}

/// Infer a common monomorphic typing for two terms, unifying their
/// endpoints jointly, so one term's constraints may pin the other's
/// variables (`id ; id` against a boolean program, say).
pub fn infer_common(c1: &Comb, c2: &Comb) -> Result<(FinType, FinType), TypeError> {
    let mut u = Unifier::default();
    let (d1, k1) = u.visit(c1)?;
    let (d2, k2) = u.visit(c2)?;
    u.unify(&d1, &d2)?;
    u.unify(&k1, &k2)?;
    let dom = u.resolve(&d1);
    let cod = u.resolve(&k1);
    match (ground(&dom), ground(&cod)) {
        (Some(d), Some(c)) => Ok((d, c)),
        _ => Err(TypeError::Ambiguous {
            dom: dom.to_string(),
            cod: cod.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn not_types_at_two() {
        assert_eq!(
            infer(&library::not_gate()),
            Ok((FinType::Two, FinType::Two))
        );
    }

    #[test]
    fn toffoli_types_at_two_cubed() {
        let t = FinType::prod(FinType::Two, FinType::prod(FinType::Two, FinType::Two));
        assert_eq!(infer(&library::toffoli()), Ok((t.clone(), t)));
    }

    #[test]
    fn seq_mismatch_is_rejected() {
        let bad = Comb::seq(Comb::FoldBool, Comb::FoldBool);
        assert!(matches!(infer(&bad), Err(TypeError::Mismatch { .. })));
    }

    #[test]
    fn bare_id_is_ambiguous() {
        assert!(matches!(infer(&Comb::Id), Err(TypeError::Ambiguous { .. })));
        // Consistency still holds: nothing conflicts.
        assert!(consistent(&Comb::Id).is_ok());
    }

    #[test]
    fn adjoint_swaps_inferred_endpoints() {
        for (name, def) in library::builtin_library().entries() {
            match infer(def) {
                Ok((dom, cod)) => assert_eq!(infer(&def.adjoint()), Ok((cod, dom)), "{name}"),
                // id1/id3 are open; their adjoints must stay consistent
                Err(TypeError::Ambiguous { .. }) => {
                    assert!(consistent(&def.adjoint()).is_ok(), "{name}")
                }
                Err(e) => panic!("{name}: {e}"),
            }
        }
    }

    #[test]
    fn infer_at_pins_polymorphic_terms() {
        assert!(infer_at(&Comb::Id, &FinType::Two, &FinType::Two).is_ok());
        assert!(infer_at(&Comb::Id, &FinType::Two, &FinType::One).is_err());
    }
}
