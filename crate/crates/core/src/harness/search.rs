use rayon::prelude::*;
use serde::Serialize;

use super::corpus::{generate_corpus, CorpusSpec};
use crate::construct::duplication;
use crate::decide::{is_strong_a_ring, Method};
use crate::error::Result;
use crate::ideal::all_ideals;
use crate::ring::Ring;
use crate::Caps;

/// Outcome of the search for `(R, I)` with `R` strong (A) but `R ⋈ I` not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub spec: CorpusSpec,
    pub method: Method,
    /// Pairs `(R, I)` with `I` proper and `|R ⋈ I|` within the size bound.
    pub instances_examined: usize,
    /// Examined pairs whose base ring is strong (A).
    pub strong_base_instances: usize,
    /// Pairs with `I = R` that were left out. `R ⋈ R` is `R × R`, never
    /// strong (A), so these would all be trivial hits.
    pub improper_excluded: usize,
    /// Descriptors of `R ⋈ I` for every hit, sorted.
    pub hits: Vec<String>,
}

impl SearchReport {
    pub fn found(&self) -> bool {
        !self.hits.is_empty()
    }

    pub fn outcome(&self) -> &'static str {
        if self.found() {
            "found"
        } else {
            "none found"
        }
    }
}

#[derive(Default)]
struct Tally {
    examined: usize,
    strong_base: usize,
    improper: usize,
    hits: Vec<String>,
}

fn search_ring(r: &Ring, spec: &CorpusSpec, method: Method, caps: &Caps) -> Result<Tally> {
    let mut t = Tally::default();
    let base_strong = is_strong_a_ring(r, method, caps)?.verdict;
    for ideal in all_ideals(r, caps)? {
        if r.size() * ideal.len() > spec.max_size {
            continue;
        }
        if ideal.len() == r.size() {
            t.improper += 1;
            continue;
        }
        t.examined += 1;
        if !base_strong {
            continue;
        }
        t.strong_base += 1;
        let d = duplication(r, &ideal)?;
        if !is_strong_a_ring(&d, method, caps)?.verdict {
            t.hits.push(d.label().to_string());
        }
    }
    Ok(t)
}

/// Searches every corpus ring and every proper ideal with `|R ⋈ I|` at
/// most `spec.max_size` for a strong (A) base whose duplication is not
/// strong (A).
pub fn search_duplication_converse(
    spec: &CorpusSpec,
    method: Method,
    caps: &Caps,
) -> Result<SearchReport> {
    let corpus = generate_corpus(spec, caps)?;
    let tallies = corpus
        .par_iter()
        .map(|r| search_ring(r, spec, method, caps))
        .collect::<Result<Vec<_>>>()?;
    let mut report = SearchReport {
        spec: spec.clone(),
        method,
        instances_examined: 0,
        strong_base_instances: 0,
        improper_excluded: 0,
        hits: Vec::new(),
    };
    for t in tallies {
        report.instances_examined += t.examined;
        report.strong_base_instances += t.strong_base;
        report.improper_excluded += t.improper;
        report.hits.extend(t.hits);
    }
    report.hits.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_has_no_hits_by_oracle() {
        let spec = CorpusSpec::default().with_max_size(16);
        let report = search_duplication_converse(&spec, Method::Oracle, &Caps::default()).unwrap();
        assert_eq!(report.outcome(), "none found");
        assert!(report.instances_examined > 0);
        assert!(report.strong_base_instances > 0);
        assert!(report.improper_excluded > 0);
    }

    #[test]
    fn dup_z4_along_2_is_examined_and_not_a_hit() {
        let spec = CorpusSpec {
            max_size: 8,
            depth: 1,
            moduli: vec![4],
            seed: 0,
        };
        let report = search_duplication_converse(&spec, Method::Fast, &Caps::default()).unwrap();
        // ideals 0 and <2>; Z/4 ⋈ Z/4 has 16 elements and is out of range anyway
        assert_eq!(report.instances_examined, 2);
        assert_eq!(report.strong_base_instances, 2);
        assert!(!report.found());
    }

    #[test]
    fn empty_corpus() {
        let spec = CorpusSpec {
            moduli: vec![],
            ..CorpusSpec::default()
        };
        let report = search_duplication_converse(&spec, Method::Fast, &Caps::default()).unwrap();
        assert_eq!(report.instances_examined, 0);
        assert_eq!(report.outcome(), "none found");
    }
}
