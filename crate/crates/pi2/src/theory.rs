//! The two-level proof theory of the boolean sub-language.
//!
//! `Comb1` is the sub-language over the single type `2`: identity and
//! negation closed under inverse and sequencing. `Comb2` terms are proofs
//! that two `Comb1` programs are equivalent; they carry their endpoints
//! structurally, and `check2` verifies both well-formedness and the
//! semantic soundness of those endpoints. `canonical` decides, with a
//! checkable witness, whether a program is the identity or negation —
//! which makes the level-2 theory complete: `complete1` produces a proof
//! between any two programs in the same semantic class, and no proof can
//! exist across classes.

use std::fmt;

use thiserror::Error;

use crate::library;
use crate::semantics;
use crate::syntax::{Comb, FinType};

/// A level-1 term of the boolean sub-language. Negation is atomic here;
/// `embed` maps it to its defined form in the extended fragment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Comb1 {
    Id,
    Not,
    Inv(Box<Comb1>),
    Seq(Box<Comb1>, Box<Comb1>),
}

impl Comb1 {
    pub fn inv(c: Comb1) -> Comb1 {
        Comb1::Inv(Box::new(c))
    }

    pub fn seq(p: Comb1, q: Comb1) -> Comb1 {
        Comb1::Seq(Box::new(p), Box::new(q))
    }

    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            Comb1::Id | Comb1::Not => 1,
            Comb1::Inv(c) => 1 + c.size(),
            Comb1::Seq(p, q) => 1 + p.size() + q.size(),
        }
    }

    /// The corresponding extended-fragment term, with `Not` expanded to
    /// its library definition.
    pub fn embed(&self) -> Comb {
        match self {
            Comb1::Id => Comb::Id,
            Comb1::Not => library::not_gate(),
            Comb1::Inv(c) => Comb::inv(c.embed()),
            Comb1::Seq(p, q) => Comb::seq(p.embed(), q.embed()),
        }
    }

    /// Recognise an extended term as a term of the sub-language: built
    /// from `id`, the literal negation definition, inverse and
    /// sequencing. Anything else is rejected.
    pub fn from_extended(c: &Comb) -> Result<Comb1, TheoryError> {
        if *c == library::not_gate() {
            return Ok(Comb1::Not);
        }
        match c {
            Comb::Id => Ok(Comb1::Id),
            Comb::Inv(inner) => Ok(Comb1::inv(Comb1::from_extended(inner)?)),
            Comb::Seq(p, q) => Ok(Comb1::seq(
                Comb1::from_extended(p)?,
                Comb1::from_extended(q)?,
            )),
            other => Err(TheoryError::NotInSubLanguage {
                construct: other.to_string(),
            }),
        }
    }

    /// The permutation on the two-element carrier, via the extended
    /// semantics of the embedding. Every sub-language term types at the
    /// boolean endpoints, so this is total.
    pub fn perm(&self) -> semantics::Perm {
        semantics::to_perm_at(&self.embed(), &FinType::Two, &FinType::Two)
            .expect("sub-language terms are well typed at 2 <-> 2")
    }
}

impl fmt::Display for Comb1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comb1::Id => write!(f, "id"),
            Comb1::Not => write!(f, "not"),
            Comb1::Inv(c) => write!(f, "(inv {c})"),
            Comb1::Seq(p, q) => write!(f, "(seq {p} {q})"),
        }
    }
}

/// Name of a canonical form: the identity or negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    Id,
    Not,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Which::Id => write!(f, "ID"),
            Which::Not => write!(f, "NOT"),
        }
    }
}

/// The canonical program named by a `Which`.
pub fn refine(w: Which) -> Comb1 {
    match w {
        Which::Id => Comb1::Id,
        Which::Not => Comb1::Not,
    }
}

/// A level-2 term: a proof of equivalence between two level-1 programs.
///
/// The groups of constructors: identity/inverse/composition of proofs;
/// unit and associativity laws for sequencing; congruence under
/// sequencing and inverse; and the inversion laws (cancellation, inverse
/// of identity, of negation, of a composite, and of an inverse).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Comb2 {
    Id2(Comb1),
    Inv2(Box<Comb2>),
    Seq2(Box<Comb2>, Box<Comb2>),
    Idl(Comb1),
    Idr(Comb1),
    Assoc(Comb1, Comb1, Comb1),
    Par2(Box<Comb2>, Box<Comb2>),
    InvCong(Box<Comb2>),
    InvRightUnit(Comb1),
    InvLeftUnit(Comb1),
    InvId,
    InvNot,
    InvSeq(Comb1, Comb1),
    InvInv(Comb1),
}

impl Comb2 {
    pub fn inv2(u: Comb2) -> Comb2 {
        Comb2::Inv2(Box::new(u))
    }

    pub fn seq2(u: Comb2, v: Comb2) -> Comb2 {
        Comb2::Seq2(Box::new(u), Box::new(v))
    }

    pub fn par2(u: Comb2, v: Comb2) -> Comb2 {
        Comb2::Par2(Box::new(u), Box::new(v))
    }

    pub fn inv_cong(u: Comb2) -> Comb2 {
        Comb2::InvCong(Box::new(u))
    }

    /// Size: proof nodes plus the sizes of embedded level-1 arguments.
    pub fn size(&self) -> usize {
        match self {
            Comb2::Id2(p)
            | Comb2::Idl(p)
            | Comb2::Idr(p)
            | Comb2::InvRightUnit(p)
            | Comb2::InvLeftUnit(p)
            | Comb2::InvInv(p) => 1 + p.size(),
            Comb2::Inv2(u) | Comb2::InvCong(u) => 1 + u.size(),
            Comb2::Seq2(u, v) | Comb2::Par2(u, v) => 1 + u.size() + v.size(),
            Comb2::Assoc(p, q, r) => 1 + p.size() + q.size() + r.size(),
            Comb2::InvSeq(p, q) => 1 + p.size() + q.size(),
            Comb2::InvId | Comb2::InvNot => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("proof composition mismatch: {left} does not meet {right}")]
    EndpointMismatch { left: String, right: String },
    #[error("term uses extended-fragment construct {construct} outside the sub-language")]
    NotInSubLanguage { construct: String },
    #[error("soundness violation: well-formed proof with inequivalent endpoints {lhs} and {rhs}")]
    SoundnessViolation { lhs: String, rhs: String },
    #[error("no proof exists: {p} and {q} are in different semantic classes")]
    SemanticMismatch { p: String, q: String },
    #[error("level-3 cells require parallel proofs")]
    NotParallel,
}

/// The endpoints a proof term asserts, read off its structure. The only
/// failure is a `Seq2` whose middle programs differ.
pub fn endpoints2(u: &Comb2) -> Result<(Comb1, Comb1), TheoryError> {
    match u {
        Comb2::Id2(p) => Ok((p.clone(), p.clone())),
        Comb2::Inv2(inner) => {
            let (l, r) = endpoints2(inner)?;
            Ok((r, l))
        }
        Comb2::Seq2(u1, u2) => {
            let (l1, r1) = endpoints2(u1)?;
            let (l2, r2) = endpoints2(u2)?;
            if r1 != l2 {
                return Err(TheoryError::EndpointMismatch {
                    left: r1.to_string(),
                    right: l2.to_string(),
                });
            }
            Ok((l1, r2))
        }
        Comb2::Idl(p) => Ok((Comb1::seq(Comb1::Id, p.clone()), p.clone())),
        Comb2::Idr(p) => Ok((Comb1::seq(p.clone(), Comb1::Id), p.clone())),
        Comb2::Assoc(p, q, r) => Ok((
            Comb1::seq(Comb1::seq(p.clone(), q.clone()), r.clone()),
            Comb1::seq(p.clone(), Comb1::seq(q.clone(), r.clone())),
        )),
        Comb2::Par2(u1, u2) => {
            let (l1, r1) = endpoints2(u1)?;
            let (l2, r2) = endpoints2(u2)?;
            Ok((Comb1::seq(l1, l2), Comb1::seq(r1, r2)))
        }
        Comb2::InvCong(inner) => {
            let (l, r) = endpoints2(inner)?;
            Ok((Comb1::inv(l), Comb1::inv(r)))
        }
        Comb2::InvRightUnit(p) => Ok((
            Comb1::seq(p.clone(), Comb1::inv(p.clone())),
            Comb1::Id,
        )),
        Comb2::InvLeftUnit(p) => Ok((
            Comb1::seq(Comb1::inv(p.clone()), p.clone()),
            Comb1::Id,
        )),
        Comb2::InvId => Ok((Comb1::inv(Comb1::Id), Comb1::Id)),
        Comb2::InvNot => Ok((Comb1::inv(Comb1::Not), Comb1::Not)),
        Comb2::InvSeq(p, q) => Ok((
            Comb1::inv(Comb1::seq(p.clone(), q.clone())),
            Comb1::seq(Comb1::inv(q.clone()), Comb1::inv(p.clone())),
        )),
        Comb2::InvInv(p) => Ok((Comb1::inv(Comb1::inv(p.clone())), p.clone())),
    }
}

/// Well-formedness plus soundness: the endpoints must exist and denote
/// the same permutation. Sub-language programs all live at the boolean
/// endpoints, so the comparison is pinned there. A semantic failure on a
/// structurally well-formed proof is an implementation bug and is
/// reported as its own error class.
pub fn check2(u: &Comb2) -> Result<(), TheoryError> {
    let (lhs, rhs) = endpoints2(u)?;
    let two = FinType::Two;
    match semantics::semantically_equal_at(&lhs.embed(), &rhs.embed(), &two, &two) {
        Ok(true) => Ok(()),
        _ => Err(TheoryError::SoundnessViolation {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }),
    }
}

/// The derived proof that negation composed with itself is the identity:
/// rewrite the first factor to an inverse, then cancel.
pub fn not_not_id() -> Comb2 {
    Comb2::seq2(
        Comb2::par2(Comb2::inv2(Comb2::InvNot), Comb2::Id2(Comb1::Not)),
        Comb2::InvLeftUnit(Comb1::Not),
    )
}

/// A canonical-form result: the name of the class and a proof that the
/// input is equivalent to `refine(which)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub which: Which,
    pub witness: Comb2,
}

/// Decide the canonical form of a sub-language program, by structural
/// recursion, producing a proof at every step. Total.
pub fn canonical(c: &Comb1) -> CanonicalForm {
    match c {
        Comb1::Id => CanonicalForm {
            which: Which::Id,
            witness: Comb2::Id2(Comb1::Id),
        },
        Comb1::Not => CanonicalForm {
            which: Which::Not,
            witness: Comb2::Id2(Comb1::Not),
        },
        Comb1::Inv(inner) => {
            let sub = canonical(inner);
            // inv c ~ inv (refine w) ~ refine w, since both canonical
            // forms are self-inverse.
            let (which, last) = match sub.which {
                Which::Id => (Which::Id, Comb2::InvId),
                Which::Not => (Which::Not, Comb2::InvNot),
            };
            CanonicalForm {
                which,
                witness: Comb2::seq2(Comb2::inv_cong(sub.witness), last),
            }
        }
        Comb1::Seq(p, q) => {
            let cp = canonical(p);
            let cq = canonical(q);
            let par = Comb2::par2(cp.witness, cq.witness);
            let (which, last) = match (cp.which, cq.which) {
                (Which::Id, Which::Id) => (Which::Id, Comb2::Idl(Comb1::Id)),
                (Which::Id, Which::Not) => (Which::Not, Comb2::Idl(Comb1::Not)),
                (Which::Not, Which::Id) => (Which::Not, Comb2::Idr(Comb1::Not)),
                (Which::Not, Which::Not) => (Which::Id, not_not_id()),
            };
            CanonicalForm {
                which,
                witness: Comb2::seq2(par, last),
            }
        }
    }
}

/// Completeness at level 1: a proof between any two programs of the same
/// semantic class, chaining `p`'s canonicalisation with the inverse of
/// `q`'s. Fails exactly when the classes differ, in which case no proof
/// can exist.
pub fn complete1(p: &Comb1, q: &Comb1) -> Result<Comb2, TheoryError> {
    let cp = canonical(p);
    let cq = canonical(q);
    if cp.which != cq.which {
        return Err(TheoryError::SemanticMismatch {
            p: p.to_string(),
            q: q.to_string(),
        });
    }
    Ok(Comb2::seq2(cp.witness, Comb2::inv2(cq.witness)))
}

/// The unique level-3 cell between two parallel proofs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comb3 {
    u: Comb2,
    v: Comb2,
}

impl Comb3 {
    /// Construct the truncation cell; the proofs must be parallel.
    pub fn trunc(u: Comb2, v: Comb2) -> Result<Comb3, TheoryError> {
        if endpoints2(&u)? != endpoints2(&v)? {
            return Err(TheoryError::NotParallel);
        }
        Ok(Comb3 { u, v })
    }

    pub fn source(&self) -> &Comb2 {
        &self.u
    }

    pub fn target(&self) -> &Comb2 {
        &self.v
    }

    /// The level-1 endpoints shared by both sides.
    pub fn endpoints(&self) -> (Comb1, Comb1) {
        endpoints2(&self.u).expect("validated at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nn() -> Comb1 {
        Comb1::seq(Comb1::Not, Comb1::Not)
    }

    #[test]
    fn endpoints_of_unit_laws() {
        assert_eq!(
            endpoints2(&Comb2::Idl(Comb1::Not)),
            Ok((Comb1::seq(Comb1::Id, Comb1::Not), Comb1::Not))
        );
        assert_eq!(
            endpoints2(&Comb2::InvNot),
            Ok((Comb1::inv(Comb1::Not), Comb1::Not))
        );
        assert_eq!(
            endpoints2(&Comb2::InvSeq(Comb1::Id, Comb1::Not)),
            Ok((
                Comb1::inv(Comb1::seq(Comb1::Id, Comb1::Not)),
                Comb1::seq(Comb1::inv(Comb1::Not), Comb1::inv(Comb1::Id))
            ))
        );
    }

    #[test]
    fn seq2_requires_matching_endpoints() {
        let bad = Comb2::seq2(Comb2::Id2(Comb1::Id), Comb2::Idl(Comb1::Not));
        assert!(matches!(
            endpoints2(&bad),
            Err(TheoryError::EndpointMismatch { .. })
        ));
        assert!(matches!(
            check2(&bad),
            Err(TheoryError::EndpointMismatch { .. })
        ));
    }

    #[test]
    fn not_not_id_has_the_right_endpoints_and_checks() {
        let w = not_not_id();
        assert_eq!(endpoints2(&w), Ok((nn(), Comb1::Id)));
        assert_eq!(check2(&w), Ok(()));
        // the underlying permutations agree: [1,0] . [1,0] = [0,1]
        assert_eq!(nn().perm(), Comb1::Id.perm());
        assert!(nn().perm().is_identity());
    }

    #[test]
    fn canonical_base_cases() {
        let c = canonical(&Comb1::Id);
        assert_eq!(c.which, Which::Id);
        assert_eq!(c.witness, Comb2::Id2(Comb1::Id));
        let c = canonical(&Comb1::Not);
        assert_eq!(c.which, Which::Not);
        assert_eq!(c.witness, Comb2::Id2(Comb1::Not));
    }

    #[test]
    fn canonical_of_double_negation() {
        let c = canonical(&nn());
        assert_eq!(c.which, Which::Id);
        assert_eq!(
            c.witness,
            Comb2::seq2(
                Comb2::par2(Comb2::Id2(Comb1::Not), Comb2::Id2(Comb1::Not)),
                not_not_id()
            )
        );
        assert_eq!(endpoints2(&c.witness), Ok((nn(), Comb1::Id)));
        assert_eq!(check2(&c.witness), Ok(()));
    }

    #[test]
    fn canonical_of_inverses() {
        let c = canonical(&Comb1::inv(Comb1::Not));
        assert_eq!(c.which, Which::Not);
        assert_eq!(
            endpoints2(&c.witness),
            Ok((Comb1::inv(Comb1::Not), Comb1::Not))
        );
        assert_eq!(check2(&c.witness), Ok(()));
    }

    #[test]
    fn refine_names_the_two_classes() {
        assert_eq!(refine(Which::Id), Comb1::Id);
        assert_eq!(refine(Which::Not), Comb1::Not);
        assert_ne!(refine(Which::Id).perm(), refine(Which::Not).perm());
    }

    #[test]
    fn complete1_links_programs_of_one_class() {
        let p = Comb1::seq(Comb1::Id, Comb1::Id);
        let q = Comb1::seq(Comb1::Not, Comb1::seq(Comb1::Id, Comb1::Not));
        let w = complete1(&p, &q).unwrap();
        assert_eq!(endpoints2(&w), Ok((p.clone(), q)));
        assert_eq!(check2(&w), Ok(()));
        // reflexivity through the same witness twice
        let w = complete1(&p, &p).unwrap();
        assert_eq!(endpoints2(&w), Ok((p.clone(), p)));
        assert_eq!(check2(&w), Ok(()));
    }

    #[test]
    fn complete1_refuses_cross_class_pairs() {
        assert!(matches!(
            complete1(&Comb1::Id, &Comb1::Not),
            Err(TheoryError::SemanticMismatch { .. })
        ));
    }

    #[test]
    fn sub_language_recognition() {
        let ok = Comb::seq(library::not_gate(), Comb::inv(Comb::Id));
        assert_eq!(
            Comb1::from_extended(&ok),
            Ok(Comb1::seq(Comb1::Not, Comb1::inv(Comb1::Id)))
        );
        assert!(matches!(
            Comb1::from_extended(&Comb::SwapStar),
            Err(TheoryError::NotInSubLanguage { .. })
        ));
        // embed then recognise is the identity
        let t = Comb1::seq(Comb1::inv(nn()), Comb1::Not);
        assert_eq!(Comb1::from_extended(&t.embed()), Ok(t));
    }

    #[test]
    fn trunc_requires_parallel_proofs() {
        let u = canonical(&nn()).witness;
        let v = complete1(&nn(), &Comb1::Id).unwrap();
        // both have endpoints (not;not, id)
        let cell = Comb3::trunc(u.clone(), v).unwrap();
        assert_eq!(cell.endpoints(), (nn(), Comb1::Id));
        let w = Comb2::Id2(Comb1::Id);
        assert!(matches!(
            Comb3::trunc(u, w),
            Err(TheoryError::NotParallel)
        ));
    }
}
