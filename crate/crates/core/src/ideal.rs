//! Ideals as materialized member sets, with generation, sums,
//! annihilators and full lattice enumeration.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::expr::IdealExpr;
use crate::ring::{Element, Ring, RingId};
use crate::Caps;

#[derive(Clone)]
pub struct Ideal {
    ring: RingId,
    generators: Vec<u32>,
    members: FixedBitSet,
    count: usize,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("generators", &self.generators)
            .field("members", &self.member_list())
            .finish()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for Ideal {}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by size, then lexicographically by sorted member list.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.count
            .cmp(&other.count)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl Ideal {
    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn member_list(&self) -> Vec<u32> {
        self.members.ones().map(|x| x as u32).collect()
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.contains(x as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.count == 1
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Builder::new(ring).finish()
    }

    pub fn whole(ring: &Ring) -> Ideal {
        generate_raw(ring, &[ring.one()])
    }

    /// Same member set, generators replaced by the greedy canonical list.
    pub fn canonical(&self, ring: &Ring) -> Ideal {
        let mut b = Builder::new(ring);
        for x in self.members.ones() {
            b.absorb(x as u32);
        }
        debug_assert_eq!(b.members, self.members);
        b.finish()
    }

    /// Generator list as an expression in the ring's literal syntax.
    pub fn to_expr(&self, ring: &Ring) -> IdealExpr {
        IdealExpr::new(self.generators.iter().map(|&g| ring.decode(g)).collect())
    }
}

/// Incremental ideal closure over a member bitset.
pub(crate) struct Builder<'r> {
    ring: &'r Ring,
    members: FixedBitSet,
    list: Vec<u32>,
    generators: Vec<u32>,
}

impl<'r> Builder<'r> {
    pub fn new(ring: &'r Ring) -> Self {
        let mut members = FixedBitSet::with_capacity(ring.size());
        members.insert(ring.zero() as usize);
        Builder {
            ring,
            members,
            list: vec![ring.zero()],
            generators: Vec::new(),
        }
    }

    pub fn from_ideal(ring: &'r Ring, ideal: &Ideal) -> Self {
        Builder {
            ring,
            members: ideal.members.clone(),
            list: ideal.member_list(),
            generators: ideal.generators.clone(),
        }
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.contains(x as usize)
    }

    /// Adds `g` as a generator. Returns false if it was already a member.
    pub fn absorb(&mut self, g: u32) -> bool {
        self.try_absorb(g, None) == Some(true)
    }

    /// Like [`absorb`](Self::absorb) but gives up as soon as a member of
    /// `forbidden` enters the ideal, returning `None`; the builder is then
    /// left in a partial state and must be discarded.
    pub fn try_absorb(&mut self, g: u32, forbidden: Option<&FixedBitSet>) -> Option<bool> {
        if self.contains(g) {
            return Some(false);
        }
        self.generators.push(g);
        for r in self.ring.elements() {
            let t = self.ring.mul(r, g);
            if !self.extend_additive(t, forbidden) {
                return None;
            }
        }
        Some(true)
    }

    /// H + <t> as the union of cosets H + kt.
    fn extend_additive(&mut self, t: u32, forbidden: Option<&FixedBitSet>) -> bool {
        if self.contains(t) {
            return true;
        }
        let old = self.list.len();
        let mut shift = t;
        while !self.contains(shift) {
            for i in 0..old {
                let s = self.ring.add(self.list[i], shift);
                if forbidden.is_some_and(|f| f.contains(s as usize)) {
                    return false;
                }
                self.members.insert(s as usize);
                self.list.push(s);
            }
            shift = self.ring.add(shift, t);
        }
        true
    }

    pub fn finish(self) -> Ideal {
        Ideal {
            ring: self.ring.id(),
            count: self.list.len(),
            generators: self.generators,
            members: self.members,
        }
    }
}

pub(crate) fn generate_raw(ring: &Ring, gens: &[u32]) -> Ideal {
    let mut b = Builder::new(ring);
    for &g in gens {
        b.absorb(g);
    }
    let mut ideal = b.finish();
    ideal.generators = gens.to_vec();
    ideal
}

/// Smallest ideal containing `gens`; the generator list is kept as given.
pub fn ideal_generate(ring: &Ring, gens: &[Element]) -> Result<Ideal> {
    let raw = gens
        .iter()
        .map(|&g| ring.index_of(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(generate_raw(ring, &raw))
}

fn check_ring(ring: &Ring, ideal: &Ideal) -> Result<()> {
    if ideal.ring != ring.id() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Ann(I) = {a : aI = 0}, tested against the generators of `I` only.
pub fn annihilator(ring: &Ring, ideal: &Ideal) -> Result<Ideal> {
    check_ring(ring, ideal)?;
    Ok(annihilator_raw(ring, &ideal.generators))
}

pub(crate) fn annihilator_members(ring: &Ring, gens: &[u32]) -> FixedBitSet {
    let zero = ring.zero();
    let mut members = FixedBitSet::with_capacity(ring.size());
    for a in ring.elements() {
        if gens.iter().all(|&g| ring.mul(a, g) == zero) {
            members.insert(a as usize);
        }
    }
    members
}

pub(crate) fn annihilator_raw(ring: &Ring, gens: &[u32]) -> Ideal {
    from_members(ring, annihilator_members(ring, gens))
}

/// Wraps a member set already known to be an ideal.
pub(crate) fn from_members(ring: &Ring, members: FixedBitSet) -> Ideal {
    let ideal = Ideal {
        ring: ring.id(),
        generators: Vec::new(),
        count: members.count_ones(..),
        members,
    };
    ideal.canonical(ring)
}

pub fn ideal_sum(ring: &Ring, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_ring(ring, i)?;
    check_ring(ring, j)?;
    let mut gens = i.generators.clone();
    gens.extend_from_slice(&j.generators);
    Ok(generate_raw(ring, &gens))
}

pub fn ideal_equals(i: &Ideal, j: &Ideal) -> Result<bool> {
    if i.ring != j.ring {
        return Err(Error::RingMismatch);
    }
    Ok(i.members == j.members)
}

pub fn ideal_contains(ring: &Ring, ideal: &Ideal, x: Element) -> Result<bool> {
    check_ring(ring, ideal)?;
    Ok(ideal.contains(ring.index_of(x)?))
}

pub fn is_proper(ring: &Ring, ideal: &Ideal) -> Result<bool> {
    check_ring(ring, ideal)?;
    Ok(ideal.count < ring.size())
}

/// Every product of two members is zero.
pub fn square_is_zero(ring: &Ring, ideal: &Ideal) -> Result<bool> {
    check_ring(ring, ideal)?;
    let members = ideal.member_list();
    Ok(members
        .iter()
        .all(|&x| members.iter().all(|&y| ring.mul(x, y) == ring.zero())))
}

/// True iff some member is a regular element. On a finite ring this
/// forces the ideal to be the whole ring.
pub fn is_regular_ideal(ring: &Ring, ideal: &Ideal) -> Result<bool> {
    check_ring(ring, ideal)?;
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    let zd = &ring.classes().zero_divisors;
    Ok(ideal.members.ones().any(|x| !zd.contains(x)))
}

/// The complete ideal lattice, sorted by [`Ideal`]'s order, each ideal
/// carrying canonical generators.
///
/// Computed as the join-closure of the principal ideals: every ideal of a
/// finite ring is a finite sum of principal ideals.
pub fn all_ideals(ring: &Ring, caps: &Caps) -> Result<Vec<Ideal>> {
    if ring.size() > caps.lattice_ring_size {
        return Err(Error::cap(
            "ring size for ideal lattice",
            ring.size(),
            caps.lattice_ring_size,
        ));
    }
    let mut principals: Vec<(u32, Ideal)> = Vec::new();
    let mut seen: HashMap<FixedBitSet, Ideal> = HashMap::new();
    for x in ring.elements() {
        let p = generate_raw(ring, &[x]);
        if !seen.contains_key(&p.members) {
            seen.insert(p.members.clone(), p.clone());
            principals.push((x, p));
        }
    }
    if seen.len() > caps.max_ideals {
        return Err(Error::cap("number of ideals", seen.len(), caps.max_ideals));
    }
    let mut queue: Vec<Ideal> = principals.iter().map(|(_, p)| p.clone()).collect();
    while let Some(i) = queue.pop() {
        for (x, p) in &principals {
            if p.is_subset(&i) {
                continue;
            }
            let mut b = Builder::from_ideal(ring, &i);
            b.absorb(*x);
            let j = b.finish();
            if !seen.contains_key(&j.members) {
                if seen.len() >= caps.max_ideals {
                    return Err(Error::cap(
                        "number of ideals",
                        seen.len() + 1,
                        caps.max_ideals,
                    ));
                }
                seen.insert(j.members.clone(), j.clone());
                queue.push(j);
            }
        }
    }
    let mut lattice: Vec<Ideal> = seen.into_values().map(|i| i.canonical(ring)).collect();
    lattice.sort();
    Ok(lattice)
}
