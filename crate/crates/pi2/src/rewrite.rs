//! Equational rewriting at positions, and replay-checking of derivations.
//!
//! A step names a rule, a position (path of child indices through the
//! term), and a direction. Rules are local rewrites on sequential
//! composition: reassociation, unit elimination, cancellation of a term
//! against its structural adjoint, and the two naturality laws consumed
//! by unit-conjugated circuits (`swap*` past a product map, `uniti*` past
//! an `id * f`).
//!
//! Rule applications are validated per instance rather than proven
//! schematically: whenever the surrounding term is fully typed, the
//! rewrite must preserve both the endpoint types and the denoted
//! permutation. On terms whose own typing leaves variables open (a bare
//! `swap* ; swap*`, say) only constraint consistency is checked, since
//! there is no carrier to enumerate.

use std::fmt;

use thiserror::Error;

use crate::infer::{self, TypeError};
use crate::library;
use crate::semantics;
use crate::syntax::Comb;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `p ; (q ; r)  ~>  (p ; q) ; r`
    AssocL,
    /// `(p ; q) ; r  ~>  p ; (q ; r)`
    AssocR,
    /// `id ; p  ~>  p`
    IdL,
    /// `p ; id  ~>  p`
    IdR,
    /// `p ; q  ~>  id` whenever `q` is the structural adjoint of `p`
    CancelAdj,
    /// `swap* ; (f * g)  ~>  (g * f) ; swap*`
    SwapNat,
    /// `uniti* ; (id * f)  ~>  f ; uniti*`
    UnitiNat,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::AssocL => "assocL",
            Rule::AssocR => "assocR",
            Rule::IdL => "idL",
            Rule::IdR => "idR",
            Rule::CancelAdj => "cancelAdj",
            Rule::SwapNat => "swapNat",
            Rule::UnitiNat => "unitiNat",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Forward => f.write_str("fwd"),
            Direction::Backward => f.write_str("bwd"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub position: Vec<usize>,
    pub direction: Direction,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos = self
            .position
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{} at [{pos}] {}", self.rule, self.direction)
    }
}

/// A claimed equational trace: replaying `steps` from `start` must land
/// exactly on `claimed_end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub start: Comb,
    pub steps: Vec<Step>,
    pub claimed_end: Comb,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("position {position:?} does not address a subterm")]
    BadPosition { position: Vec<usize> },
    #[error("rule {rule} ({direction}) does not match the subterm '{subterm}'")]
    PatternMismatch {
        rule: Rule,
        direction: Direction,
        subterm: String,
    },
    #[error("ill-typed instance: {0}")]
    IllTypedInstance(TypeError),
    #[error("rule {rule} changed the meaning of '{before}' (internal error)")]
    RuleUnsound { rule: Rule, before: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("step {index}: {source}")]
    Step {
        index: usize,
        #[source]
        source: RewriteError,
    },
    #[error("replay ended at '{got}', claimed end is '{claimed}'")]
    FinalMismatch { got: String, claimed: String },
    #[error("start and claimed end are not extensionally equal (internal error)")]
    NotEquivalent,
}

/// The local rewrite, with no context validation.
fn rewrite_local(sub: &Comb, rule: Rule, dir: Direction) -> Option<Comb> {
    use Direction::{Backward, Forward};
    match (rule, dir) {
        (Rule::AssocL, Forward) | (Rule::AssocR, Backward) => match sub {
            Comb::Seq(p, qr) => match &**qr {
                Comb::Seq(q, r) => Some(Comb::seq(
                    Comb::seq((**p).clone(), (**q).clone()),
                    (**r).clone(),
                )),
                _ => None,
            },
            _ => None,
        },
        (Rule::AssocR, Forward) | (Rule::AssocL, Backward) => match sub {
            Comb::Seq(pq, r) => match &**pq {
                Comb::Seq(p, q) => Some(Comb::seq(
                    (**p).clone(),
                    Comb::seq((**q).clone(), (**r).clone()),
                )),
                _ => None,
            },
            _ => None,
        },
        (Rule::IdL, Forward) => match sub {
            Comb::Seq(p, q) if **p == Comb::Id => Some((**q).clone()),
            _ => None,
        },
        (Rule::IdL, Backward) => Some(Comb::seq(Comb::Id, sub.clone())),
        (Rule::IdR, Forward) => match sub {
            Comb::Seq(p, q) if **q == Comb::Id => Some((**p).clone()),
            _ => None,
        },
        (Rule::IdR, Backward) => Some(Comb::seq(sub.clone(), Comb::Id)),
        // Either factor may be the structural adjoint of the other; the
        // two readings differ for `!`-wrapped terms.
        (Rule::CancelAdj, Forward) => match sub {
            Comb::Seq(p, q) if **q == p.adjoint() || **p == q.adjoint() => Some(Comb::Id),
            _ => None,
        },
        // There is no way to recover which pair was cancelled, so the
        // backward direction never matches.
        (Rule::CancelAdj, Backward) => None,
        (Rule::SwapNat, Forward) => match sub {
            Comb::Seq(sw, par) if **sw == Comb::SwapStar => match &**par {
                Comb::ParStar(f, g) => Some(Comb::seq(
                    Comb::par_star((**g).clone(), (**f).clone()),
                    Comb::SwapStar,
                )),
                _ => None,
            },
            _ => None,
        },
        (Rule::SwapNat, Backward) => match sub {
            Comb::Seq(par, sw) if **sw == Comb::SwapStar => match &**par {
                Comb::ParStar(g, f) => Some(Comb::seq(
                    Comb::SwapStar,
                    Comb::par_star((**f).clone(), (**g).clone()),
                )),
                _ => None,
            },
            _ => None,
        },
        (Rule::UnitiNat, Forward) => match sub {
            Comb::Seq(un, par) if **un == Comb::UnitiStar => match &**par {
                Comb::ParStar(i, f) if **i == Comb::Id => {
                    Some(Comb::seq((**f).clone(), Comb::UnitiStar))
                }
                _ => None,
            },
            _ => None,
        },
        (Rule::UnitiNat, Backward) => match sub {
            Comb::Seq(f, un) if **un == Comb::UnitiStar => Some(Comb::seq(
                Comb::UnitiStar,
                Comb::par_star(Comb::Id, (**f).clone()),
            )),
            _ => None,
        },
    }
}

/// Apply one step. The result differs from `c` only at the step's
/// position and — whenever `c` is fully typed — is validated to keep the
/// same endpoints and the same permutation.
pub fn apply_step(c: &Comb, step: &Step) -> Result<Comb, RewriteError> {
    let sub = c
        .subterm(&step.position)
        .ok_or_else(|| RewriteError::BadPosition {
            position: step.position.clone(),
        })?;
    let rewritten = rewrite_local(sub, step.rule, step.direction).ok_or_else(|| {
        RewriteError::PatternMismatch {
            rule: step.rule,
            direction: step.direction,
            subterm: sub.to_string(),
        }
    })?;
    let result = c
        .replace(&step.position, rewritten)
        .expect("position was validated by subterm lookup");
    match infer::infer(c) {
        Ok((dom, cod)) => {
            // Fully typed context: the result must type at the same
            // endpoints and denote the same permutation.
            infer::infer_at(&result, &dom, &cod).map_err(RewriteError::IllTypedInstance)?;
            for v in semantics::enumerate(&dom) {
                let before = semantics::apply_unchecked(c, v.clone());
                let after = semantics::apply_unchecked(&result, v);
                match (before, after) {
                    (Ok(a), Ok(b)) if a == b => {}
                    _ => {
                        return Err(RewriteError::RuleUnsound {
                            rule: step.rule,
                            before: sub.to_string(),
                        })
                    }
                }
            }
        }
        Err(TypeError::Ambiguous { .. }) => {
            // Open term: no carrier to enumerate; require the rewrite to
            // keep the typing constraints consistent.
            infer::consistent(&result).map_err(RewriteError::IllTypedInstance)?;
        }
        Err(e) => return Err(RewriteError::IllTypedInstance(e)),
    }
    Ok(result)
}

/// Replay a derivation. On success returns the full trace
/// (`steps.len() + 1` terms, starting with `start`).
pub fn check_derivation(d: &Derivation) -> Result<Vec<Comb>, DerivationError> {
    let mut trace = Vec::with_capacity(d.steps.len() + 1);
    trace.push(d.start.clone());
    let mut current = d.start.clone();
    for (index, step) in d.steps.iter().enumerate() {
        current = apply_step(&current, step)
            .map_err(|source| DerivationError::Step { index, source })?;
        trace.push(current.clone());
    }
    if current != d.claimed_end {
        return Err(DerivationError::FinalMismatch {
            got: current.to_string(),
            claimed: d.claimed_end.to_string(),
        });
    }
    // Every step preserved meaning where a carrier existed; the
    // end-to-end comparison can only be decided when the pair fixes a
    // type, so an ambiguous pair (a derivation over open identities)
    // passes on the strength of the per-step checks.
    match semantics::semantically_equal(&d.start, &d.claimed_end) {
        Ok(true) => {}
        Err(semantics::EvalError::IllTyped(TypeError::Ambiguous { .. })) => {}
        _ => return Err(DerivationError::NotEquivalent),
    }
    Ok(trace)
}

fn step(rule: Rule, position: &[usize], direction: Direction) -> Step {
    Step {
        rule,
        position: position.to_vec(),
        direction,
    }
}

/// The bundled 11-step optimisation of `not3` down to `not`: reassociate,
/// push the product map past `swap*`, cancel `swap* ; swap*`, eliminate
/// units, commute the payload out of the `uniti*` conjugation, cancel
/// `uniti* ; unite*`, and drop the trailing identity.
pub fn notopt() -> Derivation {
    use Direction::Forward as Fwd;
    Derivation {
        start: library::not3(),
        steps: vec![
            step(Rule::AssocL, &[1], Fwd),
            step(Rule::SwapNat, &[1, 0], Fwd),
            step(Rule::AssocR, &[1], Fwd),
            step(Rule::AssocL, &[1, 1], Fwd),
            step(Rule::CancelAdj, &[1, 1, 0], Fwd),
            step(Rule::IdL, &[1, 1], Fwd),
            step(Rule::AssocL, &[], Fwd),
            step(Rule::UnitiNat, &[0], Fwd),
            step(Rule::AssocR, &[], Fwd),
            step(Rule::CancelAdj, &[1], Fwd),
            step(Rule::IdR, &[], Fwd),
        ],
        claimed_end: library::not_gate(),
    }
}
