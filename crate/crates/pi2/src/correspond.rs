//! Mappings between the boolean sub-language and the loop model, with
//! executable soundness and completeness round trips at levels 1–3.
//!
//! Level 0 is trivial: each side has a single point (the boolean type on
//! the syntax side, its code in the model), so the level-0 maps are
//! constant and carry no code here. Level 1 interprets programs as loops
//! and quotes loops back as canonical programs; level 2 sends proofs to
//! the unique model cell over their interpreted endpoints; and at level 3
//! both sides are degenerate, so coherence is a confirmation rather than
//! a computation.

use thiserror::Error;

use crate::model::{Loop, ModelError, TwoCell};
use crate::theory::{self, canonical, endpoints2, Comb1, Comb2, Comb3, TheoryError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondError {
    #[error("malformed proof: {0}")]
    Malformed(#[from] TheoryError),
    #[error("soundness violation: a well-formed proof interpreted to distinct loops (internal error)")]
    SoundnessViolation,
    #[error("classifier disagreement on {term} (internal error)")]
    AgreementViolation { term: String },
    #[error("proof endpoints are not quoted programs: {endpoint}")]
    NotQuotedEndpoints { endpoint: String },
}

/// Interpret a program as a loop: identity and negation go to the two
/// group elements, inversion to group inverse, sequencing to
/// composition.
pub fn interp1(p: &Comb1) -> Loop {
    match p {
        Comb1::Id => Loop::IDENTITY,
        Comb1::Not => Loop::NEGATION,
        Comb1::Inv(q) => interp1(q).invert(),
        Comb1::Seq(p, q) => interp1(p).compose(interp1(q)),
    }
}

/// Quote a loop back into syntax via its classification.
pub fn quote1(l: Loop) -> Comb1 {
    theory::refine(l.classify())
}

/// Interpret a proof as the (unique) model cell over its interpreted
/// endpoints. Well-formed proofs always land on the diagonal; a missing
/// cell would mean the level-2 theory proved a false equation.
pub fn interp2(u: &Comb2) -> Result<TwoCell, CorrespondError> {
    let (lhs, rhs) = endpoints2(u)?;
    TwoCell::between(interp1(&lhs), interp1(&rhs))
        .map_err(|_: ModelError| CorrespondError::SoundnessViolation)
}

/// Quote a model cell as a reflexivity proof on the quoted loop.
pub fn quote2(c: &TwoCell) -> Comb2 {
    Comb2::Id2(quote1(c.source()))
}

/// Level-1 soundness, syntax side: a proof that `p` equals the quote of
/// its interpretation. The canonicalizer and the model classifier must
/// agree on `p`'s class; they compute the same permutation by different
/// routes, so disagreement is an internal error.
pub fn sound1(p: &Comb1) -> Result<Comb2, CorrespondError> {
    let c = canonical(p);
    if c.which != interp1(p).classify() {
        return Err(CorrespondError::AgreementViolation {
            term: p.to_string(),
        });
    }
    Ok(c.witness)
}

/// Level-1 completeness, model side: a checked proof between quoted
/// programs yields the cell between the corresponding loops. The
/// endpoints must be literal quotes (`id` or `not`).
pub fn complete1_sem(u: &Comb2) -> Result<TwoCell, CorrespondError> {
    let (lhs, rhs) = endpoints2(u)?;
    let as_loop = |c: &Comb1| match c {
        Comb1::Id => Ok(Loop::IDENTITY),
        Comb1::Not => Ok(Loop::NEGATION),
        other => Err(CorrespondError::NotQuotedEndpoints {
            endpoint: other.to_string(),
        }),
    };
    let (s, t) = (as_loop(&lhs)?, as_loop(&rhs)?);
    TwoCell::between(s, t).map_err(|_| CorrespondError::SoundnessViolation)
}

/// Level-3 coherence: any two parallel truncation cells are identified.
/// Both syntax (one constructor) and model (unique 2-cells) are
/// degenerate at this level, so the confirmation is unconditional once
/// parallelism holds.
pub fn triviality_level3(a: &Comb3, b: &Comb3) -> Result<(), CorrespondError> {
    // Parallel cells share one level-1 endpoint pair; each cell's own
    // sides were already forced parallel at construction.
    if a.endpoints() != b.endpoints() {
        return Err(CorrespondError::Malformed(TheoryError::NotParallel));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::{check2, complete1, not_not_id, Which};

    fn nn() -> Comb1 {
        Comb1::seq(Comb1::Not, Comb1::Not)
    }

    #[test]
    fn interp1_known_values() {
        assert_eq!(interp1(&Comb1::Not), Loop::NEGATION);
        assert_eq!(interp1(&nn()), Loop::IDENTITY);
        assert_eq!(interp1(&Comb1::inv(Comb1::Id)), Loop::IDENTITY);
    }

    #[test]
    fn quote_then_interp_is_identity_on_loops() {
        for l in Loop::all() {
            assert_eq!(interp1(&quote1(l)), l);
        }
        assert_eq!(quote1(Loop::IDENTITY), Comb1::Id);
        assert_eq!(quote1(Loop::NEGATION), Comb1::Not);
    }

    #[test]
    fn interp1_is_a_homomorphism() {
        let samples = [
            Comb1::Id,
            Comb1::Not,
            nn(),
            Comb1::inv(nn()),
            Comb1::seq(Comb1::inv(Comb1::Not), Comb1::Id),
        ];
        for p in &samples {
            for q in &samples {
                assert_eq!(
                    interp1(&Comb1::seq(p.clone(), q.clone())),
                    interp1(p).compose(interp1(q))
                );
            }
            assert_eq!(interp1(&Comb1::inv(p.clone())), interp1(p).invert());
        }
    }

    #[test]
    fn interp2_lands_on_the_diagonal() {
        let cell = interp2(&not_not_id()).unwrap();
        assert_eq!(cell.source(), Loop::IDENTITY);
        let cell = interp2(&Comb2::Id2(Comb1::Not)).unwrap();
        assert_eq!(cell.source(), Loop::NEGATION);
        // inversion of a proof interprets to the same (unique) cell
        let u = not_not_id();
        assert_eq!(interp2(&Comb2::inv2(u.clone())), interp2(&u));
    }

    #[test]
    fn quote2_produces_checked_reflexivity_proofs() {
        for l in Loop::all() {
            let cell = TwoCell::between(l, l).unwrap();
            let u = quote2(&cell);
            assert_eq!(u, Comb2::Id2(quote1(l)));
            assert_eq!(check2(&u), Ok(()));
        }
    }

    #[test]
    fn sound1_round_trips_programs() {
        let p = nn();
        let w = sound1(&p).unwrap();
        assert_eq!(check2(&w), Ok(()));
        assert_eq!(
            endpoints2(&w),
            Ok((p.clone(), quote1(interp1(&p))))
        );
        let w = sound1(&Comb1::Not).unwrap();
        assert_eq!(w, Comb2::Id2(Comb1::Not));
    }

    #[test]
    fn complete1_sem_accepts_quoted_endpoints_only() {
        let u = complete1(&quote1(Loop::IDENTITY), &quote1(Loop::IDENTITY)).unwrap();
        let cell = complete1_sem(&u).unwrap();
        assert_eq!(cell.source(), Loop::IDENTITY);
        let refl_on_composite = Comb2::Id2(nn());
        assert!(matches!(
            complete1_sem(&refl_on_composite),
            Err(CorrespondError::NotQuotedEndpoints { .. })
        ));
    }

    #[test]
    fn level3_triviality_on_parallel_pairs() {
        let u = canonical(&nn()).witness;
        let v = complete1(&nn(), &Comb1::Id).unwrap();
        let a = Comb3::trunc(u.clone(), v.clone()).unwrap();
        let b = Comb3::trunc(u, v).unwrap();
        assert_eq!(triviality_level3(&a, &b), Ok(()));
    }

    #[test]
    fn classifiers_agree_on_simple_terms() {
        for p in [Comb1::Id, Comb1::Not, nn(), Comb1::inv(Comb1::Not)] {
            assert_eq!(canonical(&p).which, interp1(&p).classify());
        }
        assert_eq!(interp1(&Comb1::Not).classify(), Which::Not);
    }
}
