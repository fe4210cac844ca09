//! Finite-instance checks of the transfer results for trivial extensions,
//! duplications and products.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::classify::{is_field, is_local, is_reduced};
use crate::construct::{
    duplication, duplication_embedded, duplication_parts, idealization, product,
};
use crate::decide::{is_a_ring, is_strong_a_ring, Method};
use crate::error::{Error, Result};
use crate::expr::{elaborate, parse_ring_expr, RingExpr};
use crate::ideal::{all_ideals, is_regular_ideal, square_is_zero, Ideal};
use crate::module::{module_free, module_ideal};
use crate::ring::Ring;
use crate::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    /// Products of (A)-rings are (A)-rings and never strong (A).
    #[serde(rename = "ex2.1")]
    ProductTransfer,
    /// Both properties pass between `A` and `A ∝ A^k`.
    #[serde(rename = "thm2.2")]
    FreeIdealization,
    /// `K ∝ K^n` over a field is strong (A).
    #[serde(rename = "lem2.6")]
    FieldIdealization,
    /// Both properties descend from `R ⋈ I` to `R`.
    #[serde(rename = "thm3.1")]
    DuplicationTransfer,
    /// `R ⋈ R` is the product `R × R`.
    #[serde(rename = "lem3.2")]
    FullDuplication,
    /// With `I^2 = 0`, duplication and trivial extension share their tables.
    #[serde(rename = "coincidence")]
    Coincidence,
    /// Duplications of a field are reduced.
    #[serde(rename = "reduced")]
    DuplicationReduced,
    /// Every finite ring has property (A).
    #[serde(rename = "noetherian")]
    Noetherian,
    /// Strong (A) coincides with being local.
    #[serde(rename = "structure")]
    LocalStructure,
    /// Oracle and fast deciders agree.
    #[serde(rename = "agreement")]
    MethodAgreement,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::ProductTransfer,
        TheoremId::FreeIdealization,
        TheoremId::FieldIdealization,
        TheoremId::DuplicationTransfer,
        TheoremId::FullDuplication,
        TheoremId::Coincidence,
        TheoremId::DuplicationReduced,
        TheoremId::Noetherian,
        TheoremId::LocalStructure,
        TheoremId::MethodAgreement,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::ProductTransfer => "ex2.1",
            TheoremId::FreeIdealization => "thm2.2",
            TheoremId::FieldIdealization => "lem2.6",
            TheoremId::DuplicationTransfer => "thm3.1",
            TheoremId::FullDuplication => "lem3.2",
            TheoremId::Coincidence => "coincidence",
            TheoremId::DuplicationReduced => "reduced",
            TheoremId::Noetherian => "noetherian",
            TheoremId::LocalStructure => "structure",
            TheoremId::MethodAgreement => "agreement",
        }
    }

    /// How the finite instances stand in for the general statement.
    pub fn finite_analog(self) -> &'static str {
        match self {
            TheoremId::ProductTransfer => {
                "the product of two copies of a polynomial ring over a field is replaced by products of finite rings"
            }
            TheoremId::FreeIdealization => {
                "free modules are free modules of finite rank over finite rings; a finite ring is its own total quotient ring, so the quotient-ring variants of this statement reduce to this check and to the field case"
            }
            TheoremId::FieldIdealization => {
                "a domain with a torsion-free module is replaced by a finite field with a free module of finite rank"
            }
            TheoremId::DuplicationTransfer => {
                "a regular ideal of a finite ring contains a unit, so the regular-ideal clause is checked with I = R"
            }
            TheoremId::FullDuplication => {
                "a finite ring is its own total ring of quotients, so the quotient-ring identity becomes R ⋈ R = R × R"
            }
            TheoremId::Coincidence => "checked for ideals with I^2 = 0 in finite rings",
            TheoremId::DuplicationReduced => "a finite domain is a field, whose only ideals are 0 and R",
            TheoremId::Noetherian => {
                "finite rings are Noetherian, so rings without property (A) cannot occur in a finite corpus"
            }
            TheoremId::LocalStructure => "corpus observation about finite rings, not a general statement",
            TheoremId::MethodAgreement => "implementation cross-check",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheckResult {
    pub theorem: TheoremId,
    /// Construction expression the check was run on.
    pub instance: String,
    pub holds: bool,
    /// Every verdict the check computed, by name.
    pub observations: BTreeMap<String, bool>,
    /// Which clause failed, when `holds` is false.
    pub counterexample: Option<String>,
}

struct Outcome {
    theorem: TheoremId,
    instance: String,
    observations: BTreeMap<String, bool>,
    failures: Vec<&'static str>,
}

impl Outcome {
    fn new(theorem: TheoremId, instance: &Ring) -> Self {
        Outcome {
            theorem,
            instance: instance.label().to_string(),
            observations: BTreeMap::new(),
            failures: Vec::new(),
        }
    }

    fn observe(&mut self, name: &str, value: bool) -> bool {
        self.observations.insert(name.to_string(), value);
        value
    }

    fn require(&mut self, clause: &'static str, ok: bool) {
        if !ok {
            self.failures.push(clause);
        }
    }

    fn finish(self) -> TheoremCheckResult {
        TheoremCheckResult {
            theorem: self.theorem,
            instance: self.instance,
            holds: self.failures.is_empty(),
            observations: self.observations,
            counterexample: (!self.failures.is_empty()).then(|| self.failures.join("; ")),
        }
    }
}

fn within(ring_size: usize, caps: &Caps) -> Result<()> {
    if ring_size > caps.lattice_ring_size {
        return Err(Error::cap(
            "constructed ring size",
            ring_size,
            caps.lattice_ring_size,
        ));
    }
    Ok(())
}

fn strong(ring: &Ring, method: Method, caps: &Caps) -> Result<bool> {
    Ok(is_strong_a_ring(ring, method, caps)?.verdict)
}

fn prop_a(ring: &Ring, method: Method, caps: &Caps) -> Result<bool> {
    Ok(is_a_ring(ring, method, caps)?.verdict)
}

/// `A` and `A ∝ A^k` agree on both properties.
pub fn check_free_idealization_transfer(
    a: &Ring,
    rank: usize,
    method: Method,
    caps: &Caps,
) -> Result<TheoremCheckResult> {
    if a.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    within(
        (a.size() as u128)
            .pow(rank as u32 + 1)
            .min(usize::MAX as u128) as usize,
        caps,
    )?;
    let r = idealization(a, &module_free(a, rank)?)?;
    let mut out = Outcome::new(TheoremId::FreeIdealization, &r);
    let (sa, sr) = (strong(a, method, caps)?, strong(&r, method, caps)?);
    let (pa, pr) = (prop_a(a, method, caps)?, prop_a(&r, method, caps)?);
    out.observe("strong_A(base)", sa);
    out.observe("strong_A(extension)", sr);
    out.observe("A(base)", pa);
    out.observe("A(extension)", pr);
    out.require("strong (A) differs between base and extension", sa == sr);
    out.require("(A) differs between base and extension", pa == pr);
    Ok(out.finish())
}

/// `K ∝ K^n` is strong (A), hence (A), when `K` is a field.
pub fn check_field_idealization(
    k: &Ring,
    rank: usize,
    method: Method,
    caps: &Caps,
) -> Result<TheoremCheckResult> {
    if k.is_zero_ring() || !is_field(k)? {
        return Err(Error::NotAField(k.label().to_string()));
    }
    within(
        (k.size() as u128)
            .pow(rank as u32 + 1)
            .min(usize::MAX as u128) as usize,
        caps,
    )?;
    let r = idealization(k, &module_free(k, rank)?)?;
    let mut out = Outcome::new(TheoremId::FieldIdealization, &r);
    let s = out.observe("strong_A(extension)", strong(&r, method, caps)?);
    let a = out.observe("A(extension)", prop_a(&r, method, caps)?);
    out.require("extension is not strong (A)", s);
    out.require("extension is not (A)", a);
    Ok(out.finish())
}

/// Both properties descend from `R ⋈ I` to `R`; for a regular ideal
/// (here `I = R`) property (A) also ascends.
pub fn check_duplication_transfer(
    r: &Ring,
    ideal: &Ideal,
    method: Method,
    caps: &Caps,
) -> Result<TheoremCheckResult> {
    if r.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    within(r.size() * ideal.len(), caps)?;
    let s = duplication(r, ideal)?;
    let mut out = Outcome::new(TheoremId::DuplicationTransfer, &s);
    let (sr, ss) = (strong(r, method, caps)?, strong(&s, method, caps)?);
    let (pr, ps) = (prop_a(r, method, caps)?, prop_a(&s, method, caps)?);
    out.observe("strong_A(base)", sr);
    out.observe("strong_A(duplication)", ss);
    out.observe("A(base)", pr);
    out.observe("A(duplication)", ps);
    out.require("duplication strong (A) but base not", !ss || sr);
    out.require("duplication (A) but base not", !ps || pr);
    let regular = out.observe("regular_ideal", is_regular_ideal(r, ideal)?);
    if regular {
        out.require(
            "regular ideal is not the whole ring",
            ideal.len() == r.size(),
        );
        out.require("(A) differs across a regular-ideal duplication", ps == pr);
    }
    Ok(out.finish())
}

/// Products of (A)-rings are (A)-rings, and never strong (A).
pub fn check_product_transfer(
    r1: &Ring,
    r2: &Ring,
    method: Method,
    caps: &Caps,
) -> Result<TheoremCheckResult> {
    within(r1.size().saturating_mul(r2.size()), caps)?;
    let p = product(r1, r2)?;
    let mut out = Outcome::new(TheoremId::ProductTransfer, &p);
    let a1 = out.observe("A(left)", prop_a(r1, method, caps)?);
    let a2 = out.observe("A(right)", prop_a(r2, method, caps)?);
    let ap = out.observe("A(product)", prop_a(&p, method, caps)?);
    let sp = out.observe("strong_A(product)", strong(&p, method, caps)?);
    out.require("factors (A) but product not", !(a1 && a2) || ap);
    out.require("product is strong (A)", !sp);
    Ok(out.finish())
}

/// With `I^2 = 0`, `R ⋈ I` and `R ∝ I` have identical tables under the
/// identity pairing of `(r, e)` coordinates.
pub fn check_idealization_coincidence(
    r: &Ring,
    ideal: &Ideal,
    caps: &Caps,
) -> Result<TheoremCheckResult> {
    if !square_is_zero(r, ideal)? {
        return Err(Error::Precondition(format!(
            "{} does not square to zero in {r}",
            ideal.to_expr(r)
        )));
    }
    within(r.size() * ideal.len(), caps)?;
    let dup = duplication(r, ideal)?;
    let ext = idealization(r, &module_ideal(r, ideal)?)?;
    let mut out = Outcome::new(TheoremId::Coincidence, &dup);
    let same_mul = dup
        .elements()
        .all(|x| dup.elements().all(|y| dup.mul(x, y) == ext.mul(x, y)));
    let same_add = dup
        .elements()
        .all(|x| dup.elements().all(|y| dup.add(x, y) == ext.add(x, y)));
    out.observe("multiplication_tables_identical", same_mul);
    out.observe("addition_tables_identical", same_add);
    out.require("multiplication tables differ", same_mul);
    out.require("addition tables differ", same_add);
    Ok(out.finish())
}

/// Every duplication of a field is reduced.
pub fn check_duplication_reduced(r: &Ring, caps: &Caps) -> Result<TheoremCheckResult> {
    if r.is_zero_ring() || !is_field(r)? {
        return Err(Error::NotAField(r.label().to_string()));
    }
    let mut out = Outcome::new(TheoremId::DuplicationReduced, r);
    for ideal in all_ideals(r, caps)? {
        let d = duplication(r, &ideal)?;
        let reduced = out.observe(&format!("reduced({d})"), is_reduced(&d)?);
        out.require("a duplication has a nonzero nilpotent", reduced);
    }
    Ok(out.finish())
}

/// `R ⋈ R` equals `R × R` under `(r, e) ↦ (r, r + e)`, table for table.
pub fn check_full_duplication_is_product(r: &Ring, caps: &Caps) -> Result<TheoremCheckResult> {
    within(r.size() * r.size(), caps)?;
    let d = duplication(r, &Ideal::whole(r))?;
    let p = product(r, r)?;
    let mut out = Outcome::new(TheoremId::FullDuplication, &d);
    let n = r.size() as u32;
    let map: Vec<u32> = d
        .elements()
        .map(|x| duplication_embedded(&d, x).map(|(a, b)| a * n + b))
        .collect::<Result<_>>()?;
    let mut hit = vec![false; p.size()];
    map.iter().for_each(|&y| hit[y as usize] = true);
    let bijective = out.observe("bijective", hit.iter().all(|&h| h));
    let tables = d.elements().all(|x| {
        d.elements().all(|y| {
            map[d.mul(x, y) as usize] == p.mul(map[x as usize], map[y as usize])
                && map[d.add(x, y) as usize] == p.add(map[x as usize], map[y as usize])
        })
    });
    out.observe("tables_match", tables);
    out.require("embedding is not a bijection", bijective);
    out.require("tables differ under the embedding", tables);
    Ok(out.finish())
}

/// Property (A) holds; a failure is a bug signal on a finite ring.
pub fn check_noetherian(r: &Ring, method: Method, caps: &Caps) -> Result<TheoremCheckResult> {
    let mut out = Outcome::new(TheoremId::Noetherian, r);
    let a = out.observe("A", prop_a(r, method, caps)?);
    out.require("finite ring without property (A)", a);
    Ok(out.finish())
}

/// Strong (A) iff local.
pub fn check_local_structure(r: &Ring, method: Method, caps: &Caps) -> Result<TheoremCheckResult> {
    let mut out = Outcome::new(TheoremId::LocalStructure, r);
    let s = out.observe("strong_A", strong(r, method, caps)?);
    let l = out.observe("local", is_local(r)?);
    out.require("strong (A) and locality disagree", s == l);
    Ok(out.finish())
}

/// Oracle and fast routes give the same verdicts and witnesses.
pub fn check_method_agreement(r: &Ring, caps: &Caps) -> Result<TheoremCheckResult> {
    let mut out = Outcome::new(TheoremId::MethodAgreement, r);
    let (ao, af) = (
        is_a_ring(r, Method::Oracle, caps)?,
        is_a_ring(r, Method::Fast, caps)?,
    );
    let (so, sf) = (
        is_strong_a_ring(r, Method::Oracle, caps)?,
        is_strong_a_ring(r, Method::Fast, caps)?,
    );
    out.observe("A(oracle)", ao.verdict);
    out.observe("A(fast)", af.verdict);
    out.observe("strong_A(oracle)", so.verdict);
    out.observe("strong_A(fast)", sf.verdict);
    out.require("(A) verdicts disagree", ao.verdict == af.verdict);
    out.require("strong (A) verdicts disagree", so.verdict == sf.verdict);
    out.require("(A) witnesses disagree", ao.witness == af.witness);
    out.require("strong (A) witnesses disagree", so.witness == sf.witness);
    Ok(out.finish())
}

fn operands_of_dup(expr: &RingExpr) -> Result<(Ring, Ideal)> {
    let ring = elaborate(expr)?;
    let (base, ideal) = duplication_parts(&ring)
        .ok_or_else(|| Error::InvalidArgument(format!("{expr} is not a duplication")))?;
    Ok((base.clone(), ideal.clone()))
}

impl TheoremCheckResult {
    /// Rebuilds the instance from its expression and runs the check again.
    pub fn reverify(&self, method: Method, caps: &Caps) -> Result<TheoremCheckResult> {
        let expr = parse_ring_expr(&self.instance)?;
        let mismatch =
            || Error::InvalidArgument(format!("instance {} has the wrong shape", self.instance));
        match self.theorem {
            TheoremId::FreeIdealization | TheoremId::FieldIdealization => {
                let RingExpr::Idealize(a, crate::expr::ModuleExpr::Free(k)) = &expr else {
                    return Err(mismatch());
                };
                let a = elaborate(a)?;
                if self.theorem == TheoremId::FreeIdealization {
                    check_free_idealization_transfer(&a, *k as usize, method, caps)
                } else {
                    check_field_idealization(&a, *k as usize, method, caps)
                }
            }
            TheoremId::DuplicationTransfer => {
                let (r, i) = operands_of_dup(&expr)?;
                check_duplication_transfer(&r, &i, method, caps)
            }
            TheoremId::Coincidence => {
                let (r, i) = operands_of_dup(&expr)?;
                check_idealization_coincidence(&r, &i, caps)
            }
            TheoremId::FullDuplication => {
                let (r, _) = operands_of_dup(&expr)?;
                check_full_duplication_is_product(&r, caps)
            }
            TheoremId::ProductTransfer => {
                let RingExpr::Product(a, b) = &expr else {
                    return Err(mismatch());
                };
                check_product_transfer(&elaborate(a)?, &elaborate(b)?, method, caps)
            }
            TheoremId::DuplicationReduced => check_duplication_reduced(&elaborate(&expr)?, caps),
            TheoremId::Noetherian => check_noetherian(&elaborate(&expr)?, method, caps),
            TheoremId::LocalStructure => check_local_structure(&elaborate(&expr)?, method, caps),
            TheoremId::MethodAgreement => check_method_agreement(&elaborate(&expr)?, caps),
        }
    }
}
