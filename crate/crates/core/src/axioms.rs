//! Exhaustive and sampled verification of ring and module axioms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::module::RingModule;
use crate::ring::Ring;
use crate::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomMode {
    Full,
    Sampled(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: &'static str,
    pub passed: bool,
    /// First failing triple `(x, y, z)`; unused positions are zero.
    pub counterexample: Option<[u32; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub ring: String,
    pub mode: AxiomMode,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

struct Tally {
    results: Vec<AxiomResult>,
}

impl Tally {
    fn new(names: &[&'static str]) -> Self {
        Tally {
            results: names
                .iter()
                .map(|&axiom| AxiomResult {
                    axiom,
                    passed: true,
                    counterexample: None,
                })
                .collect(),
        }
    }

    #[inline]
    fn check(&mut self, i: usize, ok: bool, triple: [u32; 3]) {
        if !ok && self.results[i].passed {
            self.results[i].passed = false;
            self.results[i].counterexample = Some(triple);
        }
    }
}

const RING_AXIOMS: [&str; 9] = [
    "add_associative",
    "add_commutative",
    "add_identity",
    "add_inverse",
    "mul_associative",
    "mul_commutative",
    "mul_identity",
    "distributive",
    "nontrivial_or_zero_is_one",
];

fn ring_triple(r: &Ring, t: &mut Tally, x: u32, y: u32, z: u32) {
    t.check(0, r.add(r.add(x, y), z) == r.add(x, r.add(y, z)), [x, y, z]);
    t.check(4, r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)), [x, y, z]);
    t.check(
        7,
        r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)),
        [x, y, z],
    );
}

fn ring_pair(r: &Ring, t: &mut Tally, x: u32, y: u32) {
    t.check(1, r.add(x, y) == r.add(y, x), [x, y, 0]);
    t.check(5, r.mul(x, y) == r.mul(y, x), [x, y, 0]);
}

fn ring_single(r: &Ring, t: &mut Tally, x: u32) {
    t.check(2, r.add(x, r.zero()) == x, [x, 0, 0]);
    t.check(3, r.add(x, r.neg(x)) == r.zero(), [x, 0, 0]);
    t.check(6, r.mul(x, r.one()) == x, [x, 0, 0]);
}

/// Checks the commutative-ring axioms. `Full` above
/// [`Caps::axiom_full_size`] falls back to `10 * |R|` sampled triples; the
/// report records the mode actually used.
pub fn check_ring_axioms(ring: &Ring, mode: AxiomMode, caps: &Caps, seed: u64) -> AxiomReport {
    let n = ring.size() as u32;
    let mode = match mode {
        AxiomMode::Full if ring.size() > caps.axiom_full_size => {
            AxiomMode::Sampled(10 * ring.size())
        }
        m => m,
    };
    let mut t = Tally::new(&RING_AXIOMS);
    t.check(8, n >= 2 || ring.zero() == ring.one(), [0, 0, 0]);
    if n >= 2 {
        t.check(8, ring.zero() != ring.one(), [0, 0, 0]);
    }
    match mode {
        AxiomMode::Full => {
            for x in 0..n {
                ring_single(ring, &mut t, x);
                for y in 0..n {
                    ring_pair(ring, &mut t, x, y);
                    for z in 0..n {
                        ring_triple(ring, &mut t, x, y, z);
                    }
                }
            }
        }
        AxiomMode::Sampled(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..k {
                let (x, y, z) = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                ring_single(ring, &mut t, x);
                ring_pair(ring, &mut t, x, y);
                ring_triple(ring, &mut t, x, y, z);
            }
        }
    }
    AxiomReport {
        ring: ring.label().to_string(),
        mode,
        results: t.results,
    }
}

const MODULE_AXIOMS: [&str; 7] = [
    "add_associative",
    "add_commutative",
    "add_inverse",
    "scale_distributes_over_vectors",
    "scale_distributes_over_scalars",
    "scale_compatible",
    "scale_identity",
];

/// Exhaustive module-axiom check; intended for small modules.
pub fn check_module_axioms(module: &RingModule) -> AxiomReport {
    let a = module.base();
    let mut t = Tally::new(&MODULE_AXIOMS);
    let zero = module.zero();
    for e in module.elements() {
        t.check(2, module.add(e, module.neg(e)) == zero, [e, 0, 0]);
        t.check(6, module.scale(a.one(), e) == e, [e, 0, 0]);
        for f in module.elements() {
            t.check(1, module.add(e, f) == module.add(f, e), [e, f, 0]);
            for g in module.elements() {
                t.check(
                    0,
                    module.add(module.add(e, f), g) == module.add(e, module.add(f, g)),
                    [e, f, g],
                );
            }
            for s in a.elements() {
                t.check(
                    3,
                    module.scale(s, module.add(e, f))
                        == module.add(module.scale(s, e), module.scale(s, f)),
                    [s, e, f],
                );
            }
        }
        for s in a.elements() {
            for u in a.elements() {
                t.check(
                    4,
                    module.scale(a.add(s, u), e)
                        == module.add(module.scale(s, e), module.scale(u, e)),
                    [s, u, e],
                );
                t.check(
                    5,
                    module.scale(a.mul(s, u), e) == module.scale(s, module.scale(u, e)),
                    [s, u, e],
                );
            }
        }
    }
    AxiomReport {
        ring: format!("{} over {}", module, a),
        mode: AxiomMode::Full,
        results: t.results,
    }
}
