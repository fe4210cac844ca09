use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::construct::{duplication, idealization, poly_quotient, product, quotient, zmod};
use crate::error::Result;
use crate::ideal::all_ideals;
use crate::iso::{fingerprint, ring_isomorphic, Fingerprint};
use crate::module::{module_free, module_quotient};
use crate::ring::Ring;
use crate::Caps;

/// Bounds for corpus generation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    /// Largest ring emitted.
    pub max_size: usize,
    /// Construction nesting depth; `Z/n` has depth 1.
    pub depth: usize,
    /// Moduli of the base rings.
    pub moduli: Vec<u64>,
    /// Seed for the randomized parts of a run (sampled axiom checks).
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_size: 256,
            depth: 2,
            moduli: (2..=32).collect(),
            seed: 0,
        }
    }
}

impl CorpusSpec {
    pub fn with_max_size(mut self, max_size: usize) -> Self {
        self.max_size = max_size;
        self
    }
}

/// Monic moduli used for polynomial quotients: X^2, X^3, X^2 + X + 1.
const POLY_MODULI: [&[u64]; 3] = [&[0, 0, 1], &[0, 0, 0, 1], &[1, 1, 1]];

struct Dedup<'c> {
    caps: &'c Caps,
    kept: Vec<Ring>,
    labels: HashSet<String>,
    buckets: HashMap<Fingerprint, Vec<usize>>,
}

impl Dedup<'_> {
    fn offer(&mut self, ring: Ring) -> Result<()> {
        if ring.size() < 2 || self.labels.contains(ring.label()) {
            return Ok(());
        }
        if ring.size() <= self.caps.iso_size {
            let fp = fingerprint(&ring);
            let bucket = self.buckets.entry(fp).or_default();
            for &i in bucket.iter() {
                if ring_isomorphic(&self.kept[i], &ring, self.caps)? {
                    return Ok(());
                }
            }
            bucket.push(self.kept.len());
        }
        self.labels.insert(ring.label().to_string());
        self.kept.push(ring);
        Ok(())
    }
}

/// Deterministically enumerates construction expressions up to the given
/// depth and size, dropping rings isomorphic to an earlier one when they
/// are small enough for the isomorphism search.
///
/// Each layer applies, to every ring of the previous layers and in this
/// order: products of pairs; trivial extensions by `free(1)`, `free(2)`;
/// duplications along every ideal; quotients and trivial extensions by
/// quotient modules for each proper nonzero ideal; polynomial quotients by
/// `X^2`, `X^3`, `X^2 + X + 1`.
pub fn generate_corpus(spec: &CorpusSpec, caps: &Caps) -> Result<Vec<Ring>> {
    let mut dedup = Dedup {
        caps,
        kept: Vec::new(),
        labels: HashSet::new(),
        buckets: HashMap::new(),
    };
    if spec.depth == 0 {
        return Ok(Vec::new());
    }
    for &n in &spec.moduli {
        if n >= 2 && n as usize <= spec.max_size {
            dedup.offer(zmod(n)?)?;
        }
    }
    let fits = |a: usize, b: usize| a.checked_mul(b).is_some_and(|s| s <= spec.max_size);
    for _ in 1..spec.depth {
        let pool = dedup.kept.clone();
        for (i, a) in pool.iter().enumerate() {
            for b in &pool[i..] {
                if fits(a.size(), b.size()) {
                    dedup.offer(product(a, b)?)?;
                }
            }
        }
        for r in &pool {
            let s = r.size();
            for k in 1..=2 {
                if (s as u128).pow(k + 1) <= spec.max_size as u128 {
                    dedup.offer(idealization(r, &module_free(r, k as usize)?)?)?;
                }
            }
            if s <= caps.lattice_ring_size {
                let lattice = all_ideals(r, caps)?;
                for ideal in lattice.iter().filter(|i| fits(s, i.len())) {
                    dedup.offer(duplication(r, ideal)?)?;
                }
                for ideal in lattice.iter().filter(|i| !i.is_zero() && i.len() < s) {
                    dedup.offer(quotient(r, ideal)?)?;
                    let m = module_quotient(r, ideal)?;
                    if fits(s, m.size()) {
                        dedup.offer(idealization(r, &m)?)?;
                    }
                }
            }
            for f in POLY_MODULI {
                let degree = f.len() - 1;
                if (s as u128).pow(degree as u32) <= spec.max_size as u128 {
                    let coeffs: Vec<u32> = f.iter().map(|&c| r.from_int(c)).collect();
                    dedup.offer(poly_quotient(r, &coeffs)?)?;
                }
            }
        }
    }
    Ok(dedup.kept)
}
