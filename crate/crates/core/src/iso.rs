//! Bounded brute-force ring isomorphism for small rings.
//!
//! Candidates are pruned by per-element invariants; a partial map is
//! grown by closing it under addition and multiplication, so a ring
//! isomorphism is pinned down by the images of a ring-generating set.

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::Caps;

/// Isomorphism-invariant data about one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementInvariant {
    additive_order: u32,
    unit: bool,
    idempotent: bool,
    /// Least k with x^k = 0, or 0 if x is not nilpotent.
    nil_index: u32,
    annihilator_size: u32,
    principal_size: u32,
    square_additive_order: u32,
}

/// Sorted multiset of element invariants; equal for isomorphic rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    size: usize,
    characteristic: usize,
    invariants: Vec<ElementInvariant>,
}

fn element_invariants(ring: &Ring) -> Vec<ElementInvariant> {
    let units = &ring.classes().units;
    let n = ring.size();
    let mut seen = vec![false; n];
    ring.elements()
        .map(|x| {
            let mut annihilator_size = 0;
            seen.iter_mut().for_each(|s| *s = false);
            let mut principal_size = 0;
            for y in ring.elements() {
                let p = ring.mul(x, y);
                if p == ring.zero() {
                    annihilator_size += 1;
                }
                if !seen[p as usize] {
                    seen[p as usize] = true;
                    principal_size += 1;
                }
            }
            let mut nil_index = 0;
            let mut power = x;
            for k in 1..=n as u32 {
                if power == ring.zero() {
                    nil_index = k;
                    break;
                }
                power = ring.mul(power, x);
            }
            let square = ring.mul(x, x);
            ElementInvariant {
                additive_order: ring.additive_order(x) as u32,
                unit: units.contains(x as usize),
                idempotent: square == x,
                nil_index,
                annihilator_size,
                principal_size,
                square_additive_order: ring.additive_order(square) as u32,
            }
        })
        .collect()
}

pub fn fingerprint(ring: &Ring) -> Fingerprint {
    let mut invariants = element_invariants(ring);
    invariants.sort();
    Fingerprint {
        size: ring.size(),
        characteristic: ring.characteristic(),
        invariants,
    }
}

/// Partial map closed under + and *; `None` on inconsistency.
#[derive(Clone)]
struct PartialIso {
    image: Vec<u32>,
    used: Vec<bool>,
    domain: Vec<u32>,
}

const UNSET: u32 = u32::MAX;

impl PartialIso {
    fn assign(&mut self, a: u32, b: u32, pending: &mut Vec<u32>) -> bool {
        match self.image[a as usize] {
            UNSET => {
                if self.used[b as usize] {
                    return false;
                }
                self.image[a as usize] = b;
                self.used[b as usize] = true;
                pending.push(a);
                true
            }
            existing => existing == b,
        }
    }

    fn extend(&mut self, r1: &Ring, r2: &Ring, a: u32, b: u32) -> bool {
        let mut pending = Vec::new();
        if !self.assign(a, b, &mut pending) {
            return false;
        }
        while let Some(x) = pending.pop() {
            let fx = self.image[x as usize];
            self.domain.push(x);
            for i in 0..self.domain.len() {
                let y = self.domain[i];
                let fy = self.image[y as usize];
                if !self.assign(r1.add(x, y), r2.add(fx, fy), &mut pending)
                    || !self.assign(r1.mul(x, y), r2.mul(fx, fy), &mut pending)
                {
                    return false;
                }
            }
        }
        true
    }
}

/// True iff some bijection preserving 0, 1, addition and multiplication
/// exists between the two rings.
pub fn ring_isomorphic(r1: &Ring, r2: &Ring, caps: &Caps) -> Result<bool> {
    if r1.size() != r2.size() {
        return Ok(false);
    }
    if r1.size() > caps.iso_size {
        return Err(Error::cap(
            "ring size for isomorphism search",
            r1.size(),
            caps.iso_size,
        ));
    }
    let inv1 = element_invariants(r1);
    let inv2 = element_invariants(r2);
    let (mut s1, mut s2) = (inv1.clone(), inv2.clone());
    s1.sort();
    s2.sort();
    if s1 != s2 || r1.characteristic() != r2.characteristic() {
        return Ok(false);
    }
    let n = r1.size();
    let mut start = PartialIso {
        image: vec![UNSET; n],
        used: vec![false; n],
        domain: Vec::new(),
    };
    if !start.extend(r1, r2, r1.zero(), r2.zero()) || !start.extend(r1, r2, r1.one(), r2.one()) {
        return Ok(false);
    }
    let candidates = |x: u32| -> Vec<u32> {
        r2.elements()
            .filter(|&y| inv2[y as usize] == inv1[x as usize])
            .collect()
    };
    Ok(search(r1, r2, &start, &candidates))
}

fn search(r1: &Ring, r2: &Ring, state: &PartialIso, candidates: &dyn Fn(u32) -> Vec<u32>) -> bool {
    if state.domain.len() == r1.size() {
        return true;
    }
    // branch on the unmapped element with the fewest candidates
    let next = r1
        .elements()
        .filter(|&x| state.image[x as usize] == UNSET)
        .map(|x| (candidates(x), x))
        .min_by_key(|(c, x)| (c.len(), *x));
    let Some((options, x)) = next else {
        return true;
    };
    for y in options {
        if state.used[y as usize] {
            continue;
        }
        let mut trial = state.clone();
        if trial.extend(r1, r2, x, y) && search(r1, r2, &trial, candidates) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{idealization, poly_quotient, product, zmod};
    use crate::module::module_free;

    #[test]
    fn characteristic_separates() {
        let caps = Caps::default();
        let z4 = zmod(4).unwrap();
        let dual = poly_quotient(&zmod(2).unwrap(), &[0, 0, 1]).unwrap();
        assert!(!ring_isomorphic(&z4, &dual, &caps).unwrap());
        assert!(ring_isomorphic(&z4, &z4, &caps).unwrap());
    }

    #[test]
    fn same_fingerprint_family() {
        let caps = Caps::default();
        let f2 = zmod(2).unwrap();
        let a = idealization(&f2, &module_free(&f2, 2).unwrap()).unwrap();
        let b = poly_quotient(&f2, &[0, 0, 0, 1]).unwrap();
        // F2[x,y]/(x,y)^2 has x^2 = 0 for all maximal elements, F2[X]/(X^3) does not
        assert!(!ring_isomorphic(&a, &b, &caps).unwrap());
        let c = product(&f2, &product(&f2, &f2).unwrap()).unwrap();
        let d = product(&product(&f2, &f2).unwrap(), &f2).unwrap();
        assert!(ring_isomorphic(&c, &d, &caps).unwrap());
        assert_eq!(fingerprint(&c), fingerprint(&d));
    }

    #[test]
    fn cap_enforced() {
        let caps = Caps {
            iso_size: 16,
            ..Caps::default()
        };
        let r = zmod(32).unwrap();
        assert!(matches!(
            ring_isomorphic(&r, &r, &caps),
            Err(Error::CapExceeded { .. })
        ));
        assert!(!ring_isomorphic(&r, &zmod(31).unwrap(), &caps).unwrap());
    }
}
