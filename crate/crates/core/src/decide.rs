//! Deciders for property (A) and strong property (A).
//!
//! A ring has property (A) when every finitely generated ideal made of
//! zero-divisors has a nonzero annihilator, and strong property (A) when
//! every ideal generated by finitely many zero-divisors does, even when
//! that ideal is the whole ring. In a finite ring every ideal is finitely
//! generated, so quantifying over the full ideal lattice is exact.
//!
//! Each property has two routes:
//!
//! * `Oracle` enumerates the whole lattice and tests each qualifying ideal.
//! * `Fast` tests only the maximal qualifying ideals, which suffices because
//!   `I ⊆ J` implies `Ann(J) ⊆ Ann(I)`. For (A) these are the maximal
//!   ideals: an ideal inside `Z(R)`, a finite union of primes, lies in one
//!   of them. For strong (A) it is the single ideal `<Z(R)>`.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::classify::non_units;
use crate::error::{Error, Result};
use crate::ideal::{all_ideals, annihilator_members, generate_raw, Builder, Ideal};
use crate::ring::Ring;
use crate::Caps;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    #[default]
    Fast,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "fast" => Ok(Method::Fast),
            other => Err(Error::InvalidArgument(format!("unknown method '{other}'"))),
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Fast => "fast",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Property {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "strong_A")]
    StrongA,
}

/// A tested ideal together with its least nonzero annihilating element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatedIdeal {
    pub ideal: Ideal,
    pub annihilator: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Zero-divisors generating an ideal whose annihilator is zero,
    /// shrunk to an inclusion-minimal list.
    Failure { generators: Vec<u32> },
    /// One entry per maximal tested ideal.
    Success { annihilated: Vec<AnnihilatedIdeal> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub ring: String,
    pub property: Property,
    pub verdict: bool,
    pub method: Method,
    pub witness: Witness,
    pub ideals_examined: usize,
}

impl PropertyReport {
    pub fn failure_generators(&self) -> Option<&[u32]> {
        match &self.witness {
            Witness::Failure { generators } => Some(generators),
            Witness::Success { .. } => None,
        }
    }
}

fn nonzero(ring: &Ring) -> Result<()> {
    if ring.is_zero_ring() {
        Err(Error::ZeroRing)
    } else {
        Ok(())
    }
}

/// `Z(R)`; on a finite ring this is exactly the set of non-units.
pub fn zero_divisor_set(ring: &Ring) -> Result<Vec<u32>> {
    nonzero(ring)?;
    Ok(ring
        .classes()
        .zero_divisors
        .ones()
        .map(|x| x as u32)
        .collect())
}

fn least_nonzero(ring: &Ring, set: &FixedBitSet) -> Option<u32> {
    set.ones().map(|x| x as u32).find(|&x| x != ring.zero())
}

/// Least nonzero element killing every generator, if any.
fn nonzero_annihilator(ring: &Ring, gens: &[u32]) -> Option<u32> {
    least_nonzero(ring, &annihilator_members(ring, gens))
}

pub fn is_a_ring(ring: &Ring, method: Method, caps: &Caps) -> Result<PropertyReport> {
    nonzero(ring)?;
    let (verdict, witness, examined) = match method {
        Method::Oracle => a_oracle(ring, caps)?,
        Method::Fast => a_fast(ring),
    };
    Ok(PropertyReport {
        ring: ring.label().to_string(),
        property: Property::A,
        verdict,
        method,
        witness,
        ideals_examined: examined,
    })
}

pub fn is_strong_a_ring(ring: &Ring, method: Method, caps: &Caps) -> Result<PropertyReport> {
    nonzero(ring)?;
    let (verdict, witness, examined) = match method {
        Method::Oracle => strong_oracle(ring, caps)?,
        Method::Fast => strong_fast(ring),
    };
    Ok(PropertyReport {
        ring: ring.label().to_string(),
        property: Property::StrongA,
        verdict,
        method,
        witness,
        ideals_examined: examined,
    })
}

/// Ideals that are maximal under inclusion within `tested` (sorted).
fn maximal_among(tested: &[&Ideal]) -> Vec<Ideal> {
    tested
        .iter()
        .filter(|i| !tested.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
        .map(|i| (*i).clone())
        .collect()
}

fn failure_from(ring: &Ring, gens: Vec<u32>) -> Witness {
    let generators = shrink_raw(ring, gens);
    Witness::Failure { generators }
}

fn success_from(ring: &Ring, maximal: Vec<Ideal>) -> Result<Witness> {
    let annihilated = maximal
        .into_iter()
        .map(|ideal| {
            let annihilator = nonzero_annihilator(ring, ideal.generators()).ok_or_else(|| {
                Error::Precondition("maximal tested ideal lost its annihilator".into())
            })?;
            Ok(AnnihilatedIdeal { ideal, annihilator })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Witness::Success { annihilated })
}

type Outcome = (bool, Witness, usize);

fn a_oracle(ring: &Ring, caps: &Caps) -> Result<Outcome> {
    let lattice = all_ideals(ring, caps)?;
    let zd = &ring.classes().zero_divisors;
    let tested: Vec<&Ideal> = lattice
        .iter()
        .filter(|i| i.members().is_subset(zd))
        .collect();
    let failing = tested
        .iter()
        .find(|i| nonzero_annihilator(ring, i.generators()).is_none());
    if let Some(bad) = failing {
        return Ok((false, failure_from(ring, bad.member_list()), tested.len()));
    }
    Ok((
        true,
        success_from(ring, maximal_among(&tested))?,
        tested.len(),
    ))
}

/// The maximal ideals, found by covering the non-units: each uncovered
/// non-unit is grown greedily (in index order) into a maximal ideal.
pub fn maximal_ideals(ring: &Ring) -> Result<Vec<Ideal>> {
    nonzero(ring)?;
    let units = &ring.classes().units;
    let non_units = non_units(ring);
    let mut covered = FixedBitSet::with_capacity(ring.size());
    let mut found = Vec::new();
    for x in non_units.ones().map(|x| x as u32) {
        if covered.contains(x as usize) {
            continue;
        }
        let mut current = generate_raw(ring, &[x]);
        for y in non_units.ones().map(|y| y as u32) {
            if current.contains(y) {
                continue;
            }
            let mut b = Builder::from_ideal(ring, &current);
            if b.try_absorb(y, Some(units)).is_some() {
                current = b.finish();
            }
        }
        covered.union_with(current.members());
        found.push(current.canonical(ring));
    }
    found.sort();
    Ok(found)
}

fn a_fast(ring: &Ring) -> Outcome {
    let maximal = maximal_ideals(ring).expect("nonzero ring checked by caller");
    let examined = maximal.len();
    if let Some(bad) = maximal
        .iter()
        .find(|m| nonzero_annihilator(ring, m.generators()).is_none())
    {
        return (false, failure_from(ring, bad.member_list()), examined);
    }
    let witness = success_from(ring, maximal).expect("annihilators checked above");
    (true, witness, examined)
}

fn strong_oracle(ring: &Ring, caps: &Caps) -> Result<Outcome> {
    let lattice = all_ideals(ring, caps)?;
    let zd = &ring.classes().zero_divisors;
    let tested: Vec<&Ideal> = lattice
        .iter()
        .filter(|i| {
            let mut inside = i.members().clone();
            inside.intersect_with(zd);
            let gens: Vec<u32> = inside.ones().map(|x| x as u32).collect();
            generate_raw(ring, &gens).members() == i.members()
        })
        .collect();
    // the lattice is sorted ascending, so the last failure is the largest
    let failing = tested
        .iter()
        .rev()
        .find(|i| nonzero_annihilator(ring, i.generators()).is_none());
    if let Some(bad) = failing {
        let mut inside = bad.members().clone();
        inside.intersect_with(zd);
        let gens = inside.ones().map(|x| x as u32).collect();
        return Ok((false, failure_from(ring, gens), tested.len()));
    }
    Ok((
        true,
        success_from(ring, maximal_among(&tested))?,
        tested.len(),
    ))
}

fn strong_fast(ring: &Ring) -> Outcome {
    let zd: Vec<u32> = ring
        .classes()
        .zero_divisors
        .ones()
        .map(|x| x as u32)
        .collect();
    let mut b = Builder::new(ring);
    for &z in &zd {
        b.absorb(z);
    }
    let spanned = b.finish();
    match nonzero_annihilator(ring, spanned.generators()) {
        None => (false, failure_from(ring, zd), 1),
        Some(_) => {
            let witness = success_from(ring, vec![spanned.canonical(ring)])
                .expect("annihilator checked above");
            (true, witness, 1)
        }
    }
}

/// Greedy in-order removal keeping `Ann(<gens>) = 0`.
pub fn shrink_witness(ring: &Ring, gens: &[u32]) -> Result<Vec<u32>> {
    nonzero(ring)?;
    if gens.iter().any(|&g| g as usize >= ring.size()) {
        return Err(Error::InvalidArgument("generator out of range".into()));
    }
    let zd = &ring.classes().zero_divisors;
    if let Some(&g) = gens.iter().find(|&&g| !zd.contains(g as usize)) {
        return Err(Error::Precondition(format!(
            "{} is not a zero-divisor",
            ring.display(g)
        )));
    }
    if nonzero_annihilator(ring, gens).is_some() {
        return Err(Error::Precondition(
            "generated ideal has a nonzero annihilator".into(),
        ));
    }
    Ok(shrink_raw(ring, gens.to_vec()))
}

fn shrink_raw(ring: &Ring, mut gens: Vec<u32>) -> Vec<u32> {
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if nonzero_annihilator(ring, &rest).is_none() {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens
}
