//! The builtin program library: boolean negation, the controlled-`f`
//! construction, `cnot`, `toffoli`, and the six two-endpoint reference
//! programs `id1..id3`, `not1..not3`.
//!
//! These are the names the parser resolves when a source file mentions an
//! identifier that is not a primitive.

use crate::syntax::Comb;

/// Boolean negation, lifted from `swap+` through the bool isos:
/// `unfold2 ; swap+ ; fold2`.
pub fn not_gate() -> Comb {
    Comb::seq(
        Comb::seq(Comb::UnfoldBool, Comb::SwapPlus),
        Comb::FoldBool,
    )
}

/// Condition `f : a <-> a` on an incoming boolean: unfold the boolean,
/// distribute it over the payload, apply `f` only in the `inr` branch,
/// then factor and refold so the control line is reconstituted.
pub fn controlled(f: Comb) -> Comb {
    Comb::seq(
        Comb::par_star(Comb::UnfoldBool, Comb::Id),
        Comb::seq(
            Comb::Dist,
            Comb::seq(
                Comb::par_plus(Comb::Id, Comb::par_star(Comb::Id, f)),
                Comb::seq(Comb::Factor, Comb::par_star(Comb::FoldBool, Comb::Id)),
            ),
        ),
    )
}

pub fn cnot() -> Comb {
    controlled(not_gate())
}

pub fn toffoli() -> Comb {
    controlled(cnot())
}

/// `f` conjugated into the left slot of a `_ * 1` product:
/// `uniti* ; swap* ; (f * id) ; swap* ; unite*`, right-nested.
fn conjugated_by_unit(f: Comb) -> Comb {
    Comb::seq(
        Comb::UnitiStar,
        Comb::seq(
            Comb::SwapStar,
            Comb::seq(
                Comb::par_star(f, Comb::Id),
                Comb::seq(Comb::SwapStar, Comb::UniteStar),
            ),
        ),
    )
}

pub fn id1() -> Comb {
    Comb::seq(Comb::Id, Comb::Id)
}

pub fn id2() -> Comb {
    Comb::seq(Comb::seq(not_gate(), Comb::Id), not_gate())
}

pub fn id3() -> Comb {
    conjugated_by_unit(Comb::Id)
}

pub fn not1() -> Comb {
    Comb::seq(Comb::Id, not_gate())
}

pub fn not2() -> Comb {
    Comb::seq(Comb::seq(not_gate(), not_gate()), not_gate())
}

pub fn not3() -> Comb {
    conjugated_by_unit(not_gate())
}

/// An ordered name -> definition table.
#[derive(Debug, Clone, Default)]
pub struct Library {
    entries: Vec<(String, Comb)>,
}

impl Library {
    pub fn get(&self, name: &str) -> Option<&Comb> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.get(name).is_some()
    }

    /// Add a definition; fails if the name is already bound.
    pub fn define(&mut self, name: &str, def: Comb) -> Result<(), String> {
        if self.contains(name) {
            return Err(format!("name '{name}' is already defined"));
        }
        self.entries.push((name.to_string(), def));
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &Comb)> {
        self.entries.iter().map(|(n, c)| (n.as_str(), c))
    }

    /// Reverse lookup: the first name whose definition equals `c`.
    pub fn name_of(&self, c: &Comb) -> Option<&str> {
        self.entries
            .iter()
            .find(|(_, def)| def == c)
            .map(|(n, _)| n.as_str())
    }
}

/// The library of builtin programs.
pub fn builtin_library() -> Library {
    let mut lib = Library::default();
    for (name, def) in [
        ("not", not_gate()),
        ("cnot", cnot()),
        ("toffoli", toffoli()),
        ("id1", id1()),
        ("id2", id2()),
        ("id3", id3()),
        ("not1", not1()),
        ("not2", not2()),
        ("not3", not3()),
    ] {
        lib.define(name, def).expect("builtin names are distinct");
    }
    lib
}
