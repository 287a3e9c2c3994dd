//! Exhaustive enumeration of terms by AST size, for oracle sweeps.
//!
//! Size counts nodes: atoms are 1, `inv` adds 1, `seq` adds 1 plus both
//! children. Proof terms count their embedded level-1 arguments the same
//! way. Enumeration order is deterministic.

use crate::theory::{endpoints2, Comb1, Comb2};

/// All sub-language terms of size exactly `n`.
fn comb1_of_size(n: usize, memo: &mut Vec<Vec<Comb1>>) -> Vec<Comb1> {
    while memo.len() <= n {
        let k = memo.len();
        let mut out = Vec::new();
        if k == 1 {
            out.push(Comb1::Id);
            out.push(Comb1::Not);
        } else if k >= 2 {
            for c in memo[k - 1].clone() {
                out.push(Comb1::inv(c));
            }
            for i in 1..k - 1 {
                let j = k - 1 - i;
                for p in memo[i].clone() {
                    for q in &memo[j] {
                        out.push(Comb1::seq(p.clone(), q.clone()));
                    }
                }
            }
        }
        memo.push(out);
    }
    memo[n].clone()
}

/// All sub-language terms of size `1..=max_size`, in size order.
pub fn comb1_up_to(max_size: usize) -> Vec<Comb1> {
    let mut memo: Vec<Vec<Comb1>> = vec![Vec::new()];
    let mut out = Vec::new();
    for n in 1..=max_size {
        out.extend(comb1_of_size(n, &mut memo));
    }
    out
}

/// All well-formed proof terms of size `1..=max_size`, in size order.
/// Every returned term has consistent endpoints (`endpoints2` succeeds);
/// the only constructor that can fail, `seq2`, is filtered during
/// generation.
pub fn comb2_up_to(max_size: usize) -> Vec<Comb2> {
    let mut c1_memo: Vec<Vec<Comb1>> = vec![Vec::new()];
    let c1 = |n: usize, memo: &mut Vec<Vec<Comb1>>| comb1_of_size(n, memo);

    let mut by_size: Vec<Vec<Comb2>> = vec![Vec::new()];
    for k in 1..=max_size {
        let mut out = Vec::new();
        if k == 1 {
            out.push(Comb2::InvId);
            out.push(Comb2::InvNot);
        }
        // unary constructors over a level-1 argument
        if k >= 2 {
            for p in c1(k - 1, &mut c1_memo) {
                out.push(Comb2::Id2(p.clone()));
                out.push(Comb2::Idl(p.clone()));
                out.push(Comb2::Idr(p.clone()));
                out.push(Comb2::InvRightUnit(p.clone()));
                out.push(Comb2::InvLeftUnit(p.clone()));
                out.push(Comb2::InvInv(p));
            }
            for u in by_size[k - 1].clone() {
                out.push(Comb2::inv2(u.clone()));
                out.push(Comb2::inv_cong(u));
            }
        }
        if k >= 3 {
            for i in 1..k - 1 {
                let j = k - 1 - i;
                for p in c1(i, &mut c1_memo) {
                    for q in c1(j, &mut c1_memo) {
                        out.push(Comb2::InvSeq(p.clone(), q));
                    }
                }
                for u in by_size[i].clone() {
                    for v in by_size[j].clone() {
                        out.push(Comb2::par2(u.clone(), v.clone()));
                        let chained = Comb2::seq2(u.clone(), v);
                        if endpoints2(&chained).is_ok() {
                            out.push(chained);
                        }
                    }
                }
            }
        }
        if k >= 4 {
            for i in 1..k {
                for j in 1..k {
                    if i + j >= k - 1 {
                        continue;
                    }
                    let l = k - 1 - i - j;
                    for p in c1(i, &mut c1_memo) {
                        for q in c1(j, &mut c1_memo) {
                            for r in c1(l, &mut c1_memo) {
                                out.push(Comb2::Assoc(p.clone(), q.clone(), r.clone()));
                            }
                        }
                    }
                }
            }
        }
        by_size.push(out);
    }
    by_size.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::check2;

    #[test]
    fn counts_follow_the_recurrence() {
        // f(1)=2, f(n) = f(n-1) + sum f(i)f(n-1-i)
        let counts: Vec<usize> = (1..=7).map(|n| comb1_up_to(n).len()).collect();
        assert_eq!(counts, vec![2, 4, 10, 24, 66, 188, 570]);
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let terms = comb1_up_to(5);
        let mut set = std::collections::HashSet::new();
        for t in &terms {
            assert!(set.insert(t.clone()), "duplicate {t}");
        }
    }

    #[test]
    fn sizes_are_respected() {
        for t in comb1_up_to(6) {
            assert!(t.size() <= 6);
        }
        for u in comb2_up_to(5) {
            assert!(u.size() <= 5, "{u:?}");
        }
    }

    #[test]
    fn every_enumerated_proof_is_well_formed_and_sound() {
        let proofs = comb2_up_to(5);
        assert!(!proofs.is_empty());
        for u in &proofs {
            assert_eq!(check2(u), Ok(()), "{u:?}");
        }
    }
}
