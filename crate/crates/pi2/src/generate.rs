//! Seeded random generation of types, well-typed terms, and derivations.
//!
//! Generation is type-directed, so every produced term is well typed by
//! construction: starting from a domain type, each step either emits a
//! primitive applicable at that type or recurses through a combinator
//! form. A fixed seed reproduces the same stream, which keeps the
//! randomized suites and the CLI byte-deterministic.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::rewrite::{apply_step, Derivation, Direction, Rule, Step};
use crate::syntax::{Comb, FinType};
use crate::theory::Comb1;

pub struct TermGen {
    rng: StdRng,
}

impl TermGen {
    pub fn new(seed: u64) -> TermGen {
        TermGen {
            rng: StdRng::seed_from_u64(seed),
        }
    }

    /// A random finite type with carrier size at most `max_card`.
    pub fn fin_type(&mut self, max_card: usize) -> FinType {
        for _ in 0..16 {
            let t = self.fin_type_depth(3);
            if t.size() <= max_card {
                return t;
            }
        }
        match max_card {
            0 => FinType::Zero,
            1 => FinType::One,
            _ => FinType::Two,
        }
    }

    fn fin_type_depth(&mut self, depth: usize) -> FinType {
        let leaf = depth == 0 || self.rng.random_bool(0.4);
        if leaf {
            return match self.rng.random_range(0..10) {
                0 => FinType::Zero,
                1..=4 => FinType::One,
                _ => FinType::Two,
            };
        }
        let a = self.fin_type_depth(depth - 1);
        let b = self.fin_type_depth(depth - 1);
        if self.rng.random_bool(0.5) {
            FinType::sum(a, b)
        } else {
            FinType::prod(a, b)
        }
    }

    /// A random well-typed term with the given domain; returns the term
    /// and its codomain. `budget` bounds the node count.
    pub fn comb_from(&mut self, dom: &FinType, budget: usize) -> (Comb, FinType) {
        if budget <= 1 {
            return self.primitive_from(dom);
        }
        let half = (budget - 1) / 2;
        let rest = budget - 1 - half;
        match self.rng.random_range(0..10) {
            // sequential composition
            0..=3 => {
                let (first, mid) = self.comb_from(dom, half.max(1));
                let (second, cod) = self.comb_from(&mid, rest);
                (Comb::seq(first, second), cod)
            }
            // inversion: run a generated term backwards
            4 => {
                let (c, cod) = self.comb_to(dom, budget - 1);
                (Comb::inv(c), cod)
            }
            // parallel forms when the domain splits
            5 | 6 => match dom {
                FinType::Sum(a, b) => {
                    let (p, ca) = self.comb_from(a, half.max(1));
                    let (q, cb) = self.comb_from(b, rest);
                    (Comb::par_plus(p, q), FinType::sum(ca, cb))
                }
                FinType::Prod(a, b) => {
                    let (p, ca) = self.comb_from(a, half.max(1));
                    let (q, cb) = self.comb_from(b, rest);
                    (Comb::par_star(p, q), FinType::prod(ca, cb))
                }
                _ => self.primitive_from(dom),
            },
            _ => self.primitive_from(dom),
        }
    }

    /// A random well-typed term with the given codomain; returns the term
    /// and its domain.
    fn comb_to(&mut self, cod: &FinType, budget: usize) -> (Comb, FinType) {
        let (c, dom) = self.comb_from(cod, budget);
        (c.adjoint(), dom)
    }

    fn primitive_from(&mut self, dom: &FinType) -> (Comb, FinType) {
        let mut candidates: Vec<(Comb, FinType)> = vec![(Comb::Id, dom.clone())];
        candidates.push((Comb::UnitiStar, FinType::prod(FinType::One, dom.clone())));
        match dom {
            FinType::Two => {
                candidates.push((Comb::UnfoldBool, FinType::sum(FinType::One, FinType::One)));
            }
            FinType::Sum(a, b) => {
                candidates.push((Comb::SwapPlus, FinType::sum((**b).clone(), (**a).clone())));
                if **a == FinType::One && **b == FinType::One {
                    candidates.push((Comb::FoldBool, FinType::Two));
                }
                // factor needs the shape (a*c) + (b*c)
                if let (FinType::Prod(x, c1), FinType::Prod(y, c2)) = (&**a, &**b) {
                    if c1 == c2 {
                        candidates.push((
                            Comb::Factor,
                            FinType::prod(FinType::sum((**x).clone(), (**y).clone()), (**c1).clone()),
                        ));
                    }
                }
            }
            FinType::Prod(a, b) => {
                candidates.push((Comb::SwapStar, FinType::prod((**b).clone(), (**a).clone())));
                if **a == FinType::One {
                    candidates.push((Comb::UniteStar, (**b).clone()));
                }
                if let FinType::Sum(x, y) = &**a {
                    candidates.push((
                        Comb::Dist,
                        FinType::sum(
                            FinType::prod((**x).clone(), (**b).clone()),
                            FinType::prod((**y).clone(), (**b).clone()),
                        ),
                    ));
                }
            }
            _ => {}
        }
        let i = self.rng.random_range(0..candidates.len());
        candidates.swap_remove(i)
    }

    /// A random sub-language term with exactly `size` nodes.
    pub fn comb1(&mut self, size: usize) -> Comb1 {
        if size <= 1 {
            return if self.rng.random_bool(0.5) {
                Comb1::Id
            } else {
                Comb1::Not
            };
        }
        if size == 2 || self.rng.random_bool(0.3) {
            Comb1::inv(self.comb1(size - 1))
        } else {
            let left = self.rng.random_range(1..size - 1);
            Comb1::seq(self.comb1(left), self.comb1(size - 1 - left))
        }
    }

    /// A random derivation: apply `steps` randomly chosen applicable
    /// steps to `start` and record the replay result as the claimed end.
    pub fn derivation(&mut self, start: &Comb, steps: usize) -> Derivation {
        let mut current = start.clone();
        let mut taken = Vec::new();
        const RULES: [Rule; 7] = [
            Rule::AssocL,
            Rule::AssocR,
            Rule::IdL,
            Rule::IdR,
            Rule::CancelAdj,
            Rule::SwapNat,
            Rule::UnitiNat,
        ];
        for _ in 0..steps {
            let mut applicable = Vec::new();
            for position in current.positions() {
                for rule in RULES {
                    for direction in [Direction::Forward, Direction::Backward] {
                        // Identity introduction grows terms without bound;
                        // keep it rare so traces stay interesting.
                        let is_growth = matches!(rule, Rule::IdL | Rule::IdR)
                            && direction == Direction::Backward;
                        if is_growth && current.size() > 24 {
                            continue;
                        }
                        let step = Step {
                            rule,
                            position: position.clone(),
                            direction,
                        };
                        if let Ok(next) = apply_step(&current, &step) {
                            applicable.push((step, next));
                        }
                    }
                }
            }
            if applicable.is_empty() {
                break;
            }
            let i = self.rng.random_range(0..applicable.len());
            let (step, next) = applicable.swap_remove(i);
            taken.push(step);
            current = next;
        }
        Derivation {
            start: start.clone(),
            steps: taken,
            claimed_end: current,
        }
    }
}
