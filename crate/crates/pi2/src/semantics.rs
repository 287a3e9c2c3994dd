//! Denotational semantics over enumerated finite carriers.
//!
//! Every well-typed combinator denotes a bijection between the carriers of
//! its endpoint types. The evaluator is bidirectional: running a term
//! backwards applies the inverse bijection without materialising the
//! adjoint term. `to_perm` tabulates a term against the canonical carrier
//! enumeration, which makes extensional equality decidable.

use std::fmt;

use thiserror::Error;

use crate::infer::{self, TypeError};
use crate::syntax::{Comb, FinType};

/// An inhabitant of a finite type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Unit,
    Zero2,
    One2,
    InL(Box<Value>),
    InR(Box<Value>),
    Pair(Box<Value>, Box<Value>),
}

impl Value {
    pub fn inl(v: Value) -> Value {
        Value::InL(Box::new(v))
    }

    pub fn inr(v: Value) -> Value {
        Value::InR(Box::new(v))
    }

    pub fn pair(a: Value, b: Value) -> Value {
        Value::Pair(Box::new(a), Box::new(b))
    }

    pub fn inhabits(&self, t: &FinType) -> bool {
        match (self, t) {
            (Value::Unit, FinType::One) => true,
            (Value::Zero2, FinType::Two) | (Value::One2, FinType::Two) => true,
            (Value::InL(v), FinType::Sum(a, _)) => v.inhabits(a),
            (Value::InR(v), FinType::Sum(_, b)) => v.inhabits(b),
            (Value::Pair(a, b), FinType::Prod(s, t)) => a.inhabits(s) && b.inhabits(t),
            _ => false,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Unit => write!(f, "()"),
            Value::Zero2 => write!(f, "0b"),
            Value::One2 => write!(f, "1b"),
            Value::InL(v) => write!(f, "inl {v}"),
            Value::InR(v) => write!(f, "inr {v}"),
            Value::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// All inhabitants of a type in the canonical order: left injections
/// first, products lexicographic with the left component outermost.
pub fn enumerate(t: &FinType) -> Vec<Value> {
    match t {
        FinType::Zero => Vec::new(),
        FinType::One => vec![Value::Unit],
        FinType::Two => vec![Value::Zero2, Value::One2],
        FinType::Sum(a, b) => {
            let mut out: Vec<Value> = enumerate(a).into_iter().map(Value::inl).collect();
            out.extend(enumerate(b).into_iter().map(Value::inr));
            out
        }
        FinType::Prod(a, b) => {
            let bs = enumerate(b);
            enumerate(a)
                .into_iter()
                .flat_map(|va| bs.iter().map(move |vb| Value::pair(va.clone(), vb.clone())))
                .collect()
        }
    }
}

/// A permutation of `{0..len-1}`, stored as the image of each index under
/// the canonical enumeration order. Construction validates bijectivity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn new(map: Vec<usize>) -> Result<Perm, EvalError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &j in &map {
            if j >= n || seen[j] {
                return Err(EvalError::NotBijective { map });
            }
            seen[j] = true;
        }
        Ok(Perm { map })
    }

    pub fn identity(n: usize) -> Perm {
        Perm {
            map: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` then `other`, as functions applied left to right.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm {
            map: self.map.iter().map(|&i| other.map[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Perm { map: inv }
    }

    /// Cycle notation over indices, fixed points omitted; the identity
    /// renders as `()`.
    pub fn cycles(&self) -> String {
        let mut seen = vec![false; self.map.len()];
        let mut out = String::new();
        for start in 0..self.map.len() {
            if seen[start] || self.map[start] == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&i.to_string());
                first = false;
                i = self.map[i];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("ill-typed program: {0}")]
    IllTyped(#[from] TypeError),
    #[error("value {value} does not inhabit {expected}")]
    ValueTypeMismatch { value: String, expected: String },
    #[error("programs have different endpoints and cannot be compared")]
    EndpointMismatch,
    #[error("map {map:?} is not a bijection")]
    NotBijective { map: Vec<usize> },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Fwd,
    Bwd,
}

impl Dir {
    fn flip(self) -> Dir {
        match self {
            Dir::Fwd => Dir::Bwd,
            Dir::Bwd => Dir::Fwd,
        }
    }
}

fn shape_error(c: &Comb, v: &Value) -> EvalError {
    EvalError::ValueTypeMismatch {
        value: v.to_string(),
        expected: format!("the domain of {c}"),
    }
}

fn apply(c: &Comb, v: Value, dir: Dir) -> Result<Value, EvalError> {
    match (c, dir) {
        (Comb::Id, _) => Ok(v),
        (Comb::SwapPlus, _) => match v {
            Value::InL(a) => Ok(Value::InR(a)),
            Value::InR(a) => Ok(Value::InL(a)),
            v => Err(shape_error(c, &v)),
        },
        (Comb::SwapStar, _) => match v {
            Value::Pair(a, b) => Ok(Value::Pair(b, a)),
            v => Err(shape_error(c, &v)),
        },
        (Comb::UniteStar, Dir::Fwd) | (Comb::UnitiStar, Dir::Bwd) => match v {
            Value::Pair(u, a) if *u == Value::Unit => Ok(*a),
            v => Err(shape_error(c, &v)),
        },
        (Comb::UnitiStar, Dir::Fwd) | (Comb::UniteStar, Dir::Bwd) => {
            Ok(Value::pair(Value::Unit, v))
        }
        (Comb::Dist, Dir::Fwd) | (Comb::Factor, Dir::Bwd) => match v {
            Value::Pair(l, c2) => match *l {
                Value::InL(a) => Ok(Value::inl(Value::Pair(a, c2))),
                Value::InR(b) => Ok(Value::inr(Value::Pair(b, c2))),
                l => Err(shape_error(c, &l)),
            },
            v => Err(shape_error(c, &v)),
        },
        (Comb::Factor, Dir::Fwd) | (Comb::Dist, Dir::Bwd) => match v {
            Value::InL(p) => match *p {
                Value::Pair(a, c2) => Ok(Value::pair(Value::InL(a), *c2)),
                p => Err(shape_error(c, &p)),
            },
            Value::InR(p) => match *p {
                Value::Pair(b, c2) => Ok(Value::pair(Value::InR(b), *c2)),
                p => Err(shape_error(c, &p)),
            },
            v => Err(shape_error(c, &v)),
        },
        (Comb::FoldBool, Dir::Fwd) | (Comb::UnfoldBool, Dir::Bwd) => match v {
            Value::InL(u) if *u == Value::Unit => Ok(Value::Zero2),
            Value::InR(u) if *u == Value::Unit => Ok(Value::One2),
            v => Err(shape_error(c, &v)),
        },
        (Comb::UnfoldBool, Dir::Fwd) | (Comb::FoldBool, Dir::Bwd) => match v {
            Value::Zero2 => Ok(Value::inl(Value::Unit)),
            Value::One2 => Ok(Value::inr(Value::Unit)),
            v => Err(shape_error(c, &v)),
        },
        (Comb::Inv(p), dir) => apply(p, v, dir.flip()),
        (Comb::Seq(p, q), Dir::Fwd) => apply(q, apply(p, v, Dir::Fwd)?, Dir::Fwd),
        (Comb::Seq(p, q), Dir::Bwd) => apply(p, apply(q, v, Dir::Bwd)?, Dir::Bwd),
        (Comb::ParPlus(p, q), dir) => match v {
            Value::InL(a) => Ok(Value::inl(apply(p, *a, dir)?)),
            Value::InR(b) => Ok(Value::inr(apply(q, *b, dir)?)),
            v => Err(shape_error(c, &v)),
        },
        (Comb::ParStar(p, q), dir) => match v {
            Value::Pair(a, b) => Ok(Value::pair(apply(p, *a, dir)?, apply(q, *b, dir)?)),
            v => Err(shape_error(c, &v)),
        },
    }
}

fn checked(c: &Comb, v: &Value, dir: Dir) -> Result<Value, EvalError> {
    let (dom, cod) = infer::infer(c)?;
    let source = match dir {
        Dir::Fwd => dom,
        Dir::Bwd => cod,
    };
    if !v.inhabits(&source) {
        return Err(EvalError::ValueTypeMismatch {
            value: v.to_string(),
            expected: crate::pretty::pretty_type(&source),
        });
    }
    apply(c, v.clone(), dir)
}

/// Run a combinator forwards on a value.
pub fn eval(c: &Comb, v: &Value) -> Result<Value, EvalError> {
    checked(c, v, Dir::Fwd)
}

/// Structural forward application without the type-checking front door.
/// Callers must have established that `v` fits the term's domain.
pub(crate) fn apply_unchecked(c: &Comb, v: Value) -> Result<Value, EvalError> {
    apply(c, v, Dir::Fwd)
}

/// Run a combinator backwards, applying the inverse bijection. Agrees with
/// `eval` of the adjoint.
pub fn eval_rev(c: &Comb, v: &Value) -> Result<Value, EvalError> {
    checked(c, v, Dir::Bwd)
}

/// Forward evaluation at explicitly given endpoints, for terms whose own
/// typing leaves variables open.
pub fn eval_at(c: &Comb, dom: &FinType, cod: &FinType, v: &Value) -> Result<Value, EvalError> {
    checked_at(c, dom, cod, v, Dir::Fwd)
}

/// Backward evaluation at explicitly given endpoints.
pub fn eval_rev_at(c: &Comb, dom: &FinType, cod: &FinType, v: &Value) -> Result<Value, EvalError> {
    checked_at(c, dom, cod, v, Dir::Bwd)
}

fn checked_at(
    c: &Comb,
    dom: &FinType,
    cod: &FinType,
    v: &Value,
    dir: Dir,
) -> Result<Value, EvalError> {
    infer::infer_at(c, dom, cod)?;
    let source = match dir {
        Dir::Fwd => dom,
        Dir::Bwd => cod,
    };
    if !v.inhabits(source) {
        return Err(EvalError::ValueTypeMismatch {
            value: v.to_string(),
            expected: crate::pretty::pretty_type(source),
        });
    }
    apply(c, v.clone(), dir)
}

/// Tabulate a well-typed term as a permutation of carrier indices:
/// entry `i` is the index of `eval(c, enumerate(dom)[i])` in
/// `enumerate(cod)`.
pub fn to_perm(c: &Comb) -> Result<Perm, EvalError> {
    let (dom, cod) = infer::infer(c)?;
    tabulate(c, &dom, &cod)
}

/// Tabulate at explicitly given endpoints, for terms whose own typing
/// leaves variables open.
pub fn to_perm_at(c: &Comb, dom: &FinType, cod: &FinType) -> Result<Perm, EvalError> {
    infer::infer_at(c, dom, cod)?;
    tabulate(c, dom, cod)
}

fn tabulate(c: &Comb, dom: &FinType, cod: &FinType) -> Result<Perm, EvalError> {
    let inputs = enumerate(dom);
    let outputs = enumerate(cod);
    let mut map = Vec::with_capacity(inputs.len());
    for v in inputs {
        let out = apply(c, v, Dir::Fwd)?;
        let j = outputs
            .iter()
            .position(|w| *w == out)
            .ok_or_else(|| EvalError::ValueTypeMismatch {
                value: out.to_string(),
                expected: crate::pretty::pretty_type(cod),
            })?;
        map.push(j);
    }
    Perm::new(map)
}

/// Extensional equality: both terms type at common endpoints and agree
/// on every carrier element. Endpoints are inferred jointly, so a
/// polymorphic term is compared at the type its partner fixes; a pair
/// that fixes no type at all is rejected as ambiguous.
pub fn semantically_equal(c1: &Comb, c2: &Comb) -> Result<bool, EvalError> {
    infer::consistent(c1)?;
    infer::consistent(c2)?;
    match infer::infer_common(c1, c2) {
        Ok((dom, _)) => agree_on(c1, c2, &dom),
        Err(e @ TypeError::Ambiguous { .. }) => Err(EvalError::IllTyped(e)),
        Err(TypeError::Mismatch { .. }) => Err(EvalError::EndpointMismatch),
    }
}

/// Extensional equality at explicitly given endpoints; both terms must
/// type there.
pub fn semantically_equal_at(
    c1: &Comb,
    c2: &Comb,
    dom: &FinType,
    cod: &FinType,
) -> Result<bool, EvalError> {
    infer::infer_at(c1, dom, cod)?;
    infer::infer_at(c2, dom, cod)?;
    agree_on(c1, c2, dom)
}

fn agree_on(c1: &Comb, c2: &Comb, dom: &FinType) -> Result<bool, EvalError> {
    for v in enumerate(dom) {
        if apply(c1, v.clone(), Dir::Fwd)? != apply(c2, v, Dir::Fwd)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    fn two() -> FinType {
        FinType::Two
    }

    #[test]
    fn enumeration_order_is_fixed() {
        assert_eq!(enumerate(&two()), vec![Value::Zero2, Value::One2]);
        let tt = FinType::prod(two(), two());
        let vals = enumerate(&tt);
        assert_eq!(
            vals,
            vec![
                Value::pair(Value::Zero2, Value::Zero2),
                Value::pair(Value::Zero2, Value::One2),
                Value::pair(Value::One2, Value::Zero2),
                Value::pair(Value::One2, Value::One2),
            ]
        );
        assert_eq!(enumerate(&FinType::Zero), Vec::<Value>::new());
        assert_eq!(
            enumerate(&FinType::prod(two(), FinType::prod(two(), two()))).len(),
            8
        );
    }

    #[test]
    fn swap_plus_swaps_injections() {
        let c = Comb::par_plus(Comb::Id, Comb::Id); // pin 1+1 via fold
        let prog = Comb::seq(Comb::UnfoldBool, Comb::seq(c, Comb::FoldBool));
        assert_eq!(eval(&prog, &Value::Zero2), Ok(Value::Zero2));
        let sw = Comb::seq(Comb::UnfoldBool, Comb::seq(Comb::SwapPlus, Comb::FoldBool));
        assert_eq!(eval(&sw, &Value::Zero2), Ok(Value::One2));
    }

    #[test]
    fn cnot_flips_iff_control_set() {
        // Behavioral contract of the controlled construction at f = not.
        let cnot = library::cnot();
        for b in [Value::Zero2, Value::One2] {
            let fixed = eval(&cnot, &Value::pair(Value::Zero2, b.clone())).unwrap();
            assert_eq!(fixed, Value::pair(Value::Zero2, b.clone()));
        }
        assert_eq!(
            eval(&cnot, &Value::pair(Value::One2, Value::Zero2)),
            Ok(Value::pair(Value::One2, Value::One2))
        );
        assert_eq!(
            eval(&cnot, &Value::pair(Value::One2, Value::One2)),
            Ok(Value::pair(Value::One2, Value::Zero2))
        );
    }

    // Independent model of the toffoli gate as a boolean function.
    fn toffoli_oracle(b0: bool, b1: bool, b2: bool) -> (bool, bool, bool) {
        (b0, b1, b2 != (b0 && b1))
    }

    fn bit(b: bool) -> Value {
        if b {
            Value::One2
        } else {
            Value::Zero2
        }
    }

    #[test]
    fn toffoli_matches_boolean_oracle_on_all_eight_rows() {
        let toffoli = library::toffoli();
        for i in 0..8u8 {
            let (b0, b1, b2) = (i & 4 != 0, i & 2 != 0, i & 1 != 0);
            let input = Value::pair(bit(b0), Value::pair(bit(b1), bit(b2)));
            let (e0, e1, e2) = toffoli_oracle(b0, b1, b2);
            let expected = Value::pair(bit(e0), Value::pair(bit(e1), bit(e2)));
            assert_eq!(eval(&toffoli, &input), Ok(expected), "row {i}");
        }
    }

    #[test]
    fn to_perm_tabulates_programs() {
        let id_at_two = Comb::seq(Comb::UnfoldBool, Comb::FoldBool);
        assert_eq!(to_perm(&id_at_two).unwrap().as_slice(), &[0, 1]);
        assert_eq!(to_perm(&library::not_gate()).unwrap().as_slice(), &[1, 0]);
        let nn = Comb::seq(library::not_gate(), library::not_gate());
        assert_eq!(to_perm(&nn).unwrap().as_slice(), &[0, 1]);
        // toffoli swaps exactly the last two enumeration indices
        assert_eq!(
            to_perm(&library::toffoli()).unwrap().as_slice(),
            &[0, 1, 2, 3, 4, 5, 7, 6]
        );
    }

    #[test]
    fn perm_rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::new(vec![0, 2]).is_err());
        assert!(Perm::new(vec![1, 0]).is_ok());
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(Perm::identity(3).cycles(), "()");
        assert_eq!(Perm::new(vec![1, 0]).unwrap().cycles(), "(0 1)");
        assert_eq!(
            Perm::new(vec![0, 1, 2, 3, 4, 5, 7, 6]).unwrap().cycles(),
            "(6 7)"
        );
    }

    #[test]
    fn semantic_classes_of_the_six_programs() {
        let lib = library::builtin_library();
        let id1 = lib.get("id1").unwrap();
        let id2 = lib.get("id2").unwrap();
        let not1 = lib.get("not1").unwrap();
        assert_eq!(semantically_equal(id1, id2), Ok(true));
        assert_eq!(semantically_equal(id1, not1), Ok(false));
        let not3 = lib.get("not3").unwrap();
        assert_eq!(semantically_equal(not3, &library::not_gate()), Ok(true));
    }

    #[test]
    fn endpoint_mismatch_is_an_error() {
        assert_eq!(
            semantically_equal(&Comb::FoldBool, &library::not_gate()),
            Err(EvalError::EndpointMismatch)
        );
    }

    #[test]
    fn eval_rejects_ill_typed_and_foreign_values() {
        assert!(matches!(
            eval(&Comb::Id, &Value::Unit),
            Err(EvalError::IllTyped(_))
        ));
        assert!(matches!(
            eval(&library::not_gate(), &Value::Unit),
            Err(EvalError::ValueTypeMismatch { .. })
        ));
    }

    #[test]
    fn backward_evaluation_inverts_forward() {
        let toffoli = library::toffoli();
        let (dom, _) = infer::infer(&toffoli).unwrap();
        for v in enumerate(&dom) {
            let fwd = eval(&toffoli, &v).unwrap();
            assert_eq!(eval_rev(&toffoli, &fwd), Ok(v.clone()));
            // and the adjoint route agrees
            assert_eq!(eval(&toffoli.adjoint(), &fwd), Ok(v));
        }
    }
}
