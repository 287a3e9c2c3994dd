//! Abstract syntax for the reversible combinator fragment.
//!
//! Types are finite (`0`, `1`, `2`, sums, products); combinators denote
//! bijections between the carriers of two such types. The booleans `2` are
//! primitive, with `fold2`/`unfold2` mediating between `2` and `1 + 1`, so
//! boolean negation is a derived program rather than an AST node.

/// A finite type. `size` gives the cardinality of its carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FinType {
    Zero,
    One,
    Two,
    Sum(Box<FinType>, Box<FinType>),
    Prod(Box<FinType>, Box<FinType>),
}

impl FinType {
    pub fn sum(left: FinType, right: FinType) -> FinType {
        FinType::Sum(Box::new(left), Box::new(right))
    }

    pub fn prod(left: FinType, right: FinType) -> FinType {
        FinType::Prod(Box::new(left), Box::new(right))
    }

    /// Number of inhabitants.
    pub fn size(&self) -> usize {
        match self {
            FinType::Zero => 0,
            FinType::One => 1,
            FinType::Two => 2,
            FinType::Sum(a, b) => a.size() + b.size(),
            FinType::Prod(a, b) => a.size() * b.size(),
        }
    }
}

/// A combinator of the extended fragment.
///
/// Every well-typed term denotes a bijection; `Inv` runs a term backwards,
/// `Seq` composes, and the `Par` forms act componentwise on sums and
/// products.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Comb {
    Id,
    SwapPlus,
    SwapStar,
    UniteStar,
    UnitiStar,
    Dist,
    Factor,
    FoldBool,
    UnfoldBool,
    Inv(Box<Comb>),
    Seq(Box<Comb>, Box<Comb>),
    ParPlus(Box<Comb>, Box<Comb>),
    ParStar(Box<Comb>, Box<Comb>),
}

impl Comb {
    pub fn inv(c: Comb) -> Comb {
        Comb::Inv(Box::new(c))
    }

    pub fn seq(first: Comb, second: Comb) -> Comb {
        Comb::Seq(Box::new(first), Box::new(second))
    }

    pub fn par_plus(left: Comb, right: Comb) -> Comb {
        Comb::ParPlus(Box::new(left), Box::new(right))
    }

    pub fn par_star(left: Comb, right: Comb) -> Comb {
        Comb::ParStar(Box::new(left), Box::new(right))
    }

    /// The structural inverse. Self-inverse primitives map to themselves,
    /// paired primitives swap, `Seq` reverses, and `Inv` collapses.
    pub fn adjoint(&self) -> Comb {
        match self {
            Comb::Id => Comb::Id,
            Comb::SwapPlus => Comb::SwapPlus,
            Comb::SwapStar => Comb::SwapStar,
            Comb::UniteStar => Comb::UnitiStar,
            Comb::UnitiStar => Comb::UniteStar,
            Comb::Dist => Comb::Factor,
            Comb::Factor => Comb::Dist,
            Comb::FoldBool => Comb::UnfoldBool,
            Comb::UnfoldBool => Comb::FoldBool,
            Comb::Inv(c) => (**c).clone(),
            Comb::Seq(p, q) => Comb::seq(q.adjoint(), p.adjoint()),
            Comb::ParPlus(p, q) => Comb::par_plus(p.adjoint(), q.adjoint()),
            Comb::ParStar(p, q) => Comb::par_star(p.adjoint(), q.adjoint()),
        }
    }

    /// Node count of the AST.
    pub fn size(&self) -> usize {
        match self {
            Comb::Inv(c) => 1 + c.size(),
            Comb::Seq(p, q) | Comb::ParPlus(p, q) | Comb::ParStar(p, q) => 1 + p.size() + q.size(),
            _ => 1,
        }
    }

    /// Child at index `i`: `Inv` has one child (index 0), the binary nodes
    /// have two (0 = left, 1 = right), primitives none.
    pub fn child(&self, i: usize) -> Option<&Comb> {
        match (self, i) {
            (Comb::Inv(c), 0) => Some(c),
            (Comb::Seq(p, _), 0) | (Comb::ParPlus(p, _), 0) | (Comb::ParStar(p, _), 0) => Some(p),
            (Comb::Seq(_, q), 1) | (Comb::ParPlus(_, q), 1) | (Comb::ParStar(_, q), 1) => Some(q),
            _ => None,
        }
    }

    /// Subterm addressed by a path of child indices; `None` if the path
    /// walks off the tree.
    pub fn subterm(&self, position: &[usize]) -> Option<&Comb> {
        let mut cur = self;
        for &i in position {
            cur = cur.child(i)?;
        }
        Some(cur)
    }

    /// Rebuild the term with the subterm at `position` replaced.
    pub fn replace(&self, position: &[usize], replacement: Comb) -> Option<Comb> {
        match position.split_first() {
            None => Some(replacement),
            Some((&i, rest)) => {
                let rebuilt = self.child(i)?.replace(rest, replacement)?;
                Some(match (self, i) {
                    (Comb::Inv(_), 0) => Comb::inv(rebuilt),
                    (Comb::Seq(_, q), 0) => Comb::seq(rebuilt, (**q).clone()),
                    (Comb::Seq(p, _), 1) => Comb::seq((**p).clone(), rebuilt),
                    (Comb::ParPlus(_, q), 0) => Comb::par_plus(rebuilt, (**q).clone()),
                    (Comb::ParPlus(p, _), 1) => Comb::par_plus((**p).clone(), rebuilt),
                    (Comb::ParStar(_, q), 0) => Comb::par_star(rebuilt, (**q).clone()),
                    (Comb::ParStar(p, _), 1) => Comb::par_star((**p).clone(), rebuilt),
                    _ => return None,
                })
            }
        }
    }

    /// All valid positions in the term, in preorder.
    pub fn positions(&self) -> Vec<Vec<usize>> {
        fn walk(c: &Comb, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(prefix.clone());
            for i in 0..2 {
                if let Some(child) = c.child(i) {
                    prefix.push(i);
                    walk(child, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }
}
