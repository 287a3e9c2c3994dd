//! The correspondence verification suite: exhaustive and randomized
//! sweeps over terms and proofs, checking every round-trip invariant
//! between the sub-language and the loop model.
//!
//! The sweeps are embarrassingly parallel, so each section maps a pure
//! check over a pre-generated population. With the `parallel` feature
//! (on by default) the map runs on rayon; `ExecMode::Sequential` — the
//! only mode when the feature is off — keeps everything on one thread.
//! Random populations are generated up front from a fixed seed, so both
//! modes produce identical reports.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::correspond::{
    complete1_sem, interp1, interp2, quote1, quote2, sound1, triviality_level3,
};
use crate::enumerate::{comb1_up_to, comb2_up_to};
use crate::generate::TermGen;
use crate::model::Loop;
use crate::theory::{canonical, check2, complete1, endpoints2, Comb1, Comb3};

/// How to drive a sweep over independent checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[cfg_attr(feature = "parallel", default)]
    Parallel,
}

/// Run `check` over `items`, counting failures and keeping the first few
/// messages for the report.
fn sweep<T, F>(mode: ExecMode, items: &[T], check: F) -> (usize, Vec<String>)
where
    T: Sync,
    F: Fn(&T) -> Result<(), String> + Sync,
{
    let failures: Vec<String> = match mode {
        ExecMode::Sequential => items.iter().filter_map(|t| check(t).err()).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => items.par_iter().filter_map(|t| check(t).err()).collect(),
    };
    let count = failures.len();
    (count, failures.into_iter().take(5).collect())
}

#[derive(Debug, Clone)]
pub struct SectionReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub sample_failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub sections: Vec<SectionReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.failures == 0)
    }

    pub fn total_checked(&self) -> usize {
        self.sections.iter().map(|s| s.checked).sum()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    /// Exhaustive bound on sub-language term size.
    pub max_size: usize,
    /// Number of random larger terms per randomized section.
    pub random_samples: usize,
    pub seed: u64,
    pub mode: ExecMode,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_size: 7,
            random_samples: 1000,
            seed: 0x9e3779b9,
            mode: ExecMode::default(),
        }
    }
}

fn section<T, F>(
    name: &'static str,
    mode: ExecMode,
    items: &[T],
    check: F,
) -> SectionReport
where
    T: Sync,
    F: Fn(&T) -> Result<(), String> + Sync,
{
    let (failures, sample_failures) = sweep(mode, items, check);
    SectionReport {
        name,
        checked: items.len(),
        failures,
        sample_failures,
    }
}

/// Run the full round-trip suite.
pub fn run_roundtrip_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut sections = Vec::new();
    let mode = cfg.mode;

    // (a) interp1 . quote1 is the identity on loops
    let loops: Vec<Loop> = Loop::all().to_vec();
    sections.push(section("interp1 . quote1 = id", mode, &loops, |l| {
        if interp1(&quote1(*l)) == *l {
            Ok(())
        } else {
            Err(format!("loop {l:?} does not round trip"))
        }
    }));

    // populations
    let exhaustive = comb1_up_to(cfg.max_size);
    let mut gen = TermGen::new(cfg.seed);
    let random_large: Vec<Comb1> = (0..cfg.random_samples)
        .map(|i| gen.comb1(cfg.max_size + 1 + (i % 10)))
        .collect();
    let mut population = exhaustive.clone();
    population.extend(random_large.iter().cloned());

    // (b) sound1 produces checked witnesses with the right endpoints
    sections.push(section("sound1 checks", mode, &population, |p| {
        let w = sound1(p).map_err(|e| format!("{p}: {e}"))?;
        check2(&w).map_err(|e| format!("{p}: witness fails check2: {e}"))?;
        let (lhs, rhs) = endpoints2(&w).map_err(|e| format!("{p}: {e}"))?;
        let expected = quote1(interp1(p));
        if lhs == *p && rhs == expected {
            Ok(())
        } else {
            Err(format!("{p}: witness endpoints ({lhs}, {rhs})"))
        }
    }));

    // classifier agreement, with the brute-force permutation as oracle
    sections.push(section(
        "canonical vs semantic classifier",
        mode,
        &population,
        |p| {
            let syntactic = canonical(p).which;
            let model = interp1(p).classify();
            let brute = if p.perm().is_identity() {
                crate::theory::Which::Id
            } else {
                crate::theory::Which::Not
            };
            if syntactic == model && model == brute {
                Ok(())
            } else {
                Err(format!(
                    "{p}: canonical {syntactic}, model {model}, brute force {brute}"
                ))
            }
        },
    ));

    // homomorphism of the interpretation
    let hom_pairs: Vec<(Comb1, Comb1)> = {
        let mut g = TermGen::new(cfg.seed ^ 0x5bd1e995);
        (0..cfg.random_samples)
            .map(|i| (g.comb1(1 + i % 9), g.comb1(1 + (i / 2) % 9)))
            .collect()
    };
    sections.push(section("interp1 homomorphism", mode, &hom_pairs, |(p, q)| {
        let seq_ok =
            interp1(&Comb1::seq(p.clone(), q.clone())) == interp1(p).compose(interp1(q));
        let inv_ok = interp1(&Comb1::inv(p.clone())) == interp1(p).invert();
        if seq_ok && inv_ok {
            Ok(())
        } else {
            Err(format!("homomorphism fails on ({p}, {q})"))
        }
    }));

    // (c) complete1 succeeds exactly on equal interpretations
    let pair_bound = cfg.max_size.min(4);
    let small = comb1_up_to(pair_bound);
    let mut pairs: Vec<(Comb1, Comb1)> = Vec::new();
    for p in &small {
        for q in &small {
            pairs.push((p.clone(), q.clone()));
        }
    }
    let mut g = TermGen::new(cfg.seed ^ 0xdeadbeef);
    for i in 0..cfg.random_samples {
        pairs.push((g.comb1(1 + i % 12), g.comb1(1 + (i / 3) % 12)));
    }
    sections.push(section(
        "complete1 iff equal interpretation",
        mode,
        &pairs,
        |(p, q)| {
            let same_loop = interp1(p) == interp1(q);
            match complete1(p, q) {
                Ok(w) => {
                    if !same_loop {
                        return Err(format!("({p}, {q}): witness across classes"));
                    }
                    check2(&w).map_err(|e| format!("({p}, {q}): {e}"))?;
                    let (lhs, rhs) = endpoints2(&w).map_err(|e| format!("({p}, {q}): {e}"))?;
                    if lhs == *p && rhs == *q {
                        Ok(())
                    } else {
                        Err(format!("({p}, {q}): witness endpoints ({lhs}, {rhs})"))
                    }
                }
                Err(_) if same_loop => Err(format!("({p}, {q}): no witness within a class")),
                Err(_) => Ok(()),
            }
        },
    ));

    // (d) interp2 is total on well-formed proofs, and quoting back checks
    let proofs = comb2_up_to(5);
    sections.push(section("interp2 total on proofs", mode, &proofs, |u| {
        let cell = interp2(u).map_err(|e| format!("{e}"))?;
        let back = quote2(&cell);
        check2(&back).map_err(|e| format!("quote2 fails check2: {e}"))?;
        let (lhs, rhs) = endpoints2(u).map_err(|e| format!("{e}"))?;
        let (ql, qr) = endpoints2(&back).map_err(|e| format!("{e}"))?;
        if ql == quote1(interp1(&lhs)) && qr == quote1(interp1(&rhs)) {
            Ok(())
        } else {
            Err("quoted endpoints disagree with interpreted endpoints".to_string())
        }
    }));

    // complete1_sem on proofs with quoted endpoints
    let quoted_proofs: Vec<_> = proofs
        .iter()
        .filter(|u| {
            endpoints2(u).is_ok_and(|(l, r)| {
                matches!(l, Comb1::Id | Comb1::Not) && matches!(r, Comb1::Id | Comb1::Not)
            })
        })
        .cloned()
        .collect();
    sections.push(section(
        "complete1_sem on quoted endpoints",
        mode,
        &quoted_proofs,
        |u| {
            let cell = complete1_sem(u).map_err(|e| format!("{e}"))?;
            let (lhs, _) = endpoints2(u).map_err(|e| format!("{e}"))?;
            if cell.source() == interp1(&lhs) {
                Ok(())
            } else {
                Err("cell sits at the wrong loop".to_string())
            }
        },
    ));

    // (e) level-3 triviality on parallel pairs of proofs
    let mut by_endpoints: std::collections::HashMap<String, Vec<&crate::theory::Comb2>> =
        std::collections::HashMap::new();
    for u in &proofs {
        if let Ok((l, r)) = endpoints2(u) {
            by_endpoints
                .entry(format!("{l}|{r}"))
                .or_default()
                .push(u);
        }
    }
    let mut parallel_pairs = Vec::new();
    for group in by_endpoints.values() {
        for pair in group.windows(2) {
            parallel_pairs.push((pair[0].clone(), pair[1].clone()));
        }
    }
    parallel_pairs.sort_by_key(|(a, b)| (format!("{a:?}"), format!("{b:?}")));
    sections.push(section(
        "level-3 triviality",
        mode,
        &parallel_pairs,
        |(u, v)| {
            let a = Comb3::trunc(u.clone(), u.clone()).map_err(|e| format!("{e}"))?;
            let b = Comb3::trunc(u.clone(), v.clone()).map_err(|e| format!("{e}"))?;
            triviality_level3(&a, &b).map_err(|e| format!("{e}"))
        },
    ));

    SuiteReport { sections }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_sequentially_at_small_size() {
        let cfg = SuiteConfig {
            max_size: 5,
            random_samples: 100,
            mode: ExecMode::Sequential,
            ..SuiteConfig::default()
        };
        let report = run_roundtrip_suite(&cfg);
        for s in &report.sections {
            assert_eq!(s.failures, 0, "{}: {:?}", s.name, s.sample_failures);
        }
        assert!(report.passed());
        assert!(report.total_checked() > 1000);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_and_sequential_reports_agree() {
        let base = SuiteConfig {
            max_size: 4,
            random_samples: 50,
            ..SuiteConfig::default()
        };
        let seq = run_roundtrip_suite(&SuiteConfig {
            mode: ExecMode::Sequential,
            ..base
        });
        let par = run_roundtrip_suite(&SuiteConfig {
            mode: ExecMode::Parallel,
            ..base
        });
        let view = |r: &SuiteReport| {
            r.sections
                .iter()
                .map(|s| (s.name, s.checked, s.failures))
                .collect::<Vec<_>>()
        };
        assert_eq!(view(&seq), view(&par));
    }
}
