use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::*;
use super::corpus::{generate_corpus, CorpusSpec};
use crate::axioms::{check_ring_axioms, AxiomMode};
use crate::classify::is_field;
use crate::construct::zmod;
use crate::decide::Method;
use crate::error::Result;
use crate::ideal::{all_ideals, generate_raw, square_is_zero, Ideal};
use crate::ring::Ring;
use crate::Caps;

/// Largest ring handed to the oracle/fast agreement check.
pub const AGREEMENT_SIZE: usize = 64;

/// Rings above this size get a sampled axiom check during verification.
pub const AXIOM_FULL_SIZE: usize = 64;

/// Random triples drawn per ring by the sampled axiom check.
pub const AXIOM_SAMPLES: usize = 4096;

/// Aggregate result of running checks over a corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub spec: CorpusSpec,
    pub method: Method,
    pub corpus_size: usize,
    /// How each finite check stands in for its general statement.
    pub finite_analogs: BTreeMap<TheoremId, &'static str>,
    /// Corpus rings whose tables fail an axiom check. Rings larger than
    /// [`AXIOM_FULL_SIZE`] are checked on triples drawn with the spec's seed.
    pub axiom_failures: Vec<String>,
    /// Sorted by theorem, then instance descriptor.
    pub results: Vec<TheoremCheckResult>,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.axiom_failures.is_empty() && self.results.iter().all(|r| r.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremCheckResult> {
        self.results.iter().filter(|r| !r.holds)
    }
}

enum Task {
    Free(Ring, usize),
    Field(Ring, usize),
    Dup(Ring, Ideal),
    Product(Ring, Ring),
    Coincide(Ring, Ideal),
    Reduced(Ring),
    FullDup(Ring),
    Noetherian(Ring),
    Local(Ring),
    Agree(Ring),
}

impl Task {
    fn run(&self, method: Method, caps: &Caps) -> Result<TheoremCheckResult> {
        match self {
            Task::Free(a, k) => check_free_idealization_transfer(a, *k, method, caps),
            Task::Field(f, k) => check_field_idealization(f, *k, method, caps),
            Task::Dup(r, i) => check_duplication_transfer(r, i, method, caps),
            Task::Product(a, b) => check_product_transfer(a, b, method, caps),
            Task::Coincide(r, i) => check_idealization_coincidence(r, i, caps),
            Task::Reduced(r) => check_duplication_reduced(r, caps),
            Task::FullDup(r) => check_full_duplication_is_product(r, caps),
            Task::Noetherian(r) => check_noetherian(r, method, caps),
            Task::Local(r) => check_local_structure(r, method, caps),
            Task::Agree(r) => check_method_agreement(r, caps),
        }
    }
}

fn fits_power(size: usize, exp: u32, bound: usize) -> bool {
    (size as u128).pow(exp) <= bound as u128
}

fn tasks_for(id: TheoremId, corpus: &[Ring], caps: &Caps) -> Result<Vec<Task>> {
    let bound = caps.lattice_ring_size;
    let mut tasks = Vec::new();
    match id {
        TheoremId::FreeIdealization => {
            for a in corpus {
                for k in 1..=2 {
                    if fits_power(a.size(), k + 1, bound) {
                        tasks.push(Task::Free(a.clone(), k as usize));
                    }
                }
            }
        }
        TheoremId::FieldIdealization => {
            for f in corpus {
                if is_field(f)? {
                    for k in 1..=3 {
                        if fits_power(f.size(), k + 1, bound) {
                            tasks.push(Task::Field(f.clone(), k as usize));
                        }
                    }
                }
            }
        }
        TheoremId::DuplicationTransfer => {
            for r in corpus {
                for i in all_ideals(r, caps)? {
                    if r.size() * i.len() <= bound {
                        tasks.push(Task::Dup(r.clone(), i));
                    }
                }
            }
        }
        TheoremId::ProductTransfer => {
            for q in 2..=5 {
                tasks.push(Task::Product(zmod(q)?, zmod(q)?));
            }
            for (i, a) in corpus.iter().enumerate() {
                for b in &corpus[i..] {
                    if a.size() * b.size() <= bound {
                        tasks.push(Task::Product(a.clone(), b.clone()));
                    }
                }
            }
        }
        TheoremId::Coincidence => {
            for (n, g) in [(4, 2), (9, 3), (25, 5)] {
                let r = zmod(n)?;
                let i = generate_raw(&r, &[g]);
                tasks.push(Task::Coincide(r, i));
            }
            for r in corpus {
                for i in all_ideals(r, caps)? {
                    if !i.is_zero() && square_is_zero(r, &i)? && r.size() * i.len() <= bound {
                        tasks.push(Task::Coincide(r.clone(), i));
                    }
                }
            }
        }
        TheoremId::DuplicationReduced => {
            for r in corpus {
                if is_field(r)? {
                    tasks.push(Task::Reduced(r.clone()));
                }
            }
        }
        TheoremId::FullDuplication => {
            for r in corpus {
                if r.size() * r.size() <= bound {
                    tasks.push(Task::FullDup(r.clone()));
                }
            }
        }
        TheoremId::Noetherian => tasks.extend(corpus.iter().cloned().map(Task::Noetherian)),
        TheoremId::LocalStructure => tasks.extend(corpus.iter().cloned().map(Task::Local)),
        TheoremId::MethodAgreement => tasks.extend(
            corpus
                .iter()
                .filter(|r| r.size() <= AGREEMENT_SIZE)
                .cloned()
                .map(Task::Agree),
        ),
    }
    Ok(tasks)
}

/// Runs the given checks over the corpus described by `spec`.
///
/// Instances are checked in parallel; the report is sorted, so it does not
/// depend on scheduling. A result with the same theorem and instance as an
/// earlier one is dropped.
pub fn run_verification(
    ids: &[TheoremId],
    spec: &CorpusSpec,
    method: Method,
    caps: &Caps,
) -> Result<VerificationReport> {
    let corpus = generate_corpus(spec, caps)?;
    let mut tasks = Vec::new();
    for &id in ids {
        tasks.extend(tasks_for(id, &corpus, caps)?);
    }
    let mut results = tasks
        .par_iter()
        .map(|t| t.run(method, caps))
        .collect::<Result<Vec<_>>>()?;
    results.sort_by(|a, b| (a.theorem, &a.instance).cmp(&(b.theorem, &b.instance)));
    results.dedup_by(|a, b| a.theorem == b.theorem && a.instance == b.instance);
    let mut axiom_failures: Vec<String> = corpus
        .par_iter()
        .filter(|r| {
            let mode = if r.size() <= AXIOM_FULL_SIZE {
                AxiomMode::Full
            } else {
                AxiomMode::Sampled(AXIOM_SAMPLES)
            };
            !check_ring_axioms(r, mode, caps, spec.seed).passed()
        })
        .map(|r| r.label().to_string())
        .collect();
    axiom_failures.sort();
    Ok(VerificationReport {
        spec: spec.clone(),
        method,
        corpus_size: corpus.len(),
        finite_analogs: ids.iter().map(|&id| (id, id.finite_analog())).collect(),
        axiom_failures,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CorpusSpec {
        CorpusSpec {
            max_size: 8,
            depth: 2,
            moduli: (2..=8).collect(),
            seed: 1,
        }
    }

    #[test]
    fn everything_holds_on_a_small_corpus() {
        let report =
            run_verification(&TheoremId::ALL, &small(), Method::Fast, &Caps::default()).unwrap();
        assert!(
            report.holds(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
        for id in TheoremId::ALL {
            assert!(
                report.results.iter().any(|r| r.theorem == id),
                "no instance for {id}"
            );
        }
    }

    #[test]
    fn report_is_sorted_and_repeatable() {
        let ids = [TheoremId::DuplicationTransfer, TheoremId::ProductTransfer];
        let a = run_verification(&ids, &small(), Method::Fast, &Caps::default()).unwrap();
        let b = run_verification(&ids, &small(), Method::Fast, &Caps::default()).unwrap();
        assert_eq!(a, b);
        assert!(a
            .results
            .windows(2)
            .all(|w| (w[0].theorem, &w[0].instance) < (w[1].theorem, &w[1].instance)));
        assert!(a.results.iter().any(|r| r.instance == "product(Z/2, Z/2)"));
    }
}
