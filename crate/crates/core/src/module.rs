//! Finite modules over a finite ring: the `E` of a trivial extension.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::{ElemExpr, ModuleExpr};
use crate::ideal::Ideal;
use crate::ring::{Cosets, Ring};

pub(crate) enum Shape {
    /// k-vectors, first coordinate most significant in the index.
    Free { rank: usize },
    /// Cosets `A / I`.
    Quotient { cosets: Cosets },
    /// The ideal itself as a submodule of `A`, indexed by member position.
    Ideal {
        members: Vec<u32>,
        position: Vec<u32>,
    },
    /// Tuples, first summand most significant in the index.
    DirectSum { parts: Vec<RingModule> },
}

struct ModuleData {
    base: Ring,
    expr: ModuleExpr,
    size: usize,
    shape: Shape,
}

#[derive(Clone)]
pub struct RingModule(Arc<ModuleData>);

impl fmt::Debug for RingModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RingModule({} over {}, |E| = {})",
            self.0.expr, self.0.base, self.0.size
        )
    }
}

impl fmt::Display for RingModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.expr)
    }
}

fn check_ideal(base: &Ring, ideal: &Ideal) -> Result<()> {
    if ideal.ring_id() != base.id() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `A^k` with its standard basis.
pub fn module_free(base: &Ring, rank: usize) -> Result<RingModule> {
    if rank == 0 {
        return Err(Error::InvalidArgument(
            "free module rank must be at least 1".into(),
        ));
    }
    let size = (base.size() as u128).pow(rank as u32);
    if size > crate::ring::MAX_RING_SIZE as u128 {
        return Err(Error::cap(
            "module size",
            usize::try_from(size).unwrap_or(usize::MAX),
            crate::ring::MAX_RING_SIZE,
        ));
    }
    Ok(RingModule(Arc::new(ModuleData {
        base: base.clone(),
        expr: ModuleExpr::Free(rank as u64),
        size: size as usize,
        shape: Shape::Free { rank },
    })))
}

/// The cyclic module `A / I`.
pub fn module_quotient(base: &Ring, ideal: &Ideal) -> Result<RingModule> {
    check_ideal(base, ideal)?;
    let cosets = Cosets::new(base.size(), &ideal.member_list(), |x, y| base.add(x, y));
    Ok(RingModule(Arc::new(ModuleData {
        base: base.clone(),
        expr: ModuleExpr::QuotMod(ideal.to_expr(base)),
        size: cosets.reps.len(),
        shape: Shape::Quotient { cosets },
    })))
}

/// The ideal `I` viewed as an `A`-submodule of `A`.
pub fn module_ideal(base: &Ring, ideal: &Ideal) -> Result<RingModule> {
    check_ideal(base, ideal)?;
    let members = ideal.member_list();
    let mut position = vec![u32::MAX; base.size()];
    for (p, &m) in members.iter().enumerate() {
        position[m as usize] = p as u32;
    }
    Ok(RingModule(Arc::new(ModuleData {
        base: base.clone(),
        expr: ModuleExpr::IdealMod(ideal.to_expr(base)),
        size: members.len(),
        shape: Shape::Ideal { members, position },
    })))
}

pub fn module_direct_sum(parts: &[RingModule]) -> Result<RingModule> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidArgument("direct sum needs at least one summand".into()))?;
    if parts.iter().any(|p| !p.base().same_ring(first.base())) {
        return Err(Error::RingMismatch);
    }
    let size = parts
        .iter()
        .try_fold(1usize, |acc, p| acc.checked_mul(p.size()));
    let size = match size {
        Some(s) if s <= crate::ring::MAX_RING_SIZE => s,
        _ => {
            return Err(Error::cap(
                "module size",
                usize::MAX,
                crate::ring::MAX_RING_SIZE,
            ))
        }
    };
    Ok(RingModule(Arc::new(ModuleData {
        base: first.base().clone(),
        expr: ModuleExpr::DSum(parts.iter().map(|p| p.expr().clone()).collect()),
        size,
        shape: Shape::DirectSum {
            parts: parts.to_vec(),
        },
    })))
}

impl RingModule {
    pub fn base(&self) -> &Ring {
        &self.0.base
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn expr(&self) -> &ModuleExpr {
        &self.0.expr
    }

    pub(crate) fn shape(&self) -> &Shape {
        &self.0.shape
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.size as u32
    }

    /// Standard basis `c_1..c_k` of a free module, `None` otherwise.
    pub fn basis(&self) -> Option<Vec<u32>> {
        let Shape::Free { rank } = self.0.shape else {
            return None;
        };
        let s = self.0.base.size() as u32;
        let one = self.0.base.one();
        Some(
            (0..rank)
                .map(|i| one * s.pow((rank - 1 - i) as u32))
                .collect(),
        )
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        let base = &self.0.base;
        match &self.0.shape {
            Shape::Free { rank } => {
                digitwise(x, y, base.size() as u32, *rank, |a, b| base.add(a, b))
            }
            Shape::Quotient { cosets } => {
                cosets.class_of[base.add(cosets.reps[x as usize], cosets.reps[y as usize]) as usize]
            }
            Shape::Ideal { members, position } => {
                position[base.add(members[x as usize], members[y as usize]) as usize]
            }
            Shape::DirectSum { parts } => {
                let (mut x, mut y) = (x, y);
                let mut place = 1u32;
                let mut out = 0u32;
                for part in parts.iter().rev() {
                    let s = part.size() as u32;
                    out += part.add(x % s, y % s) * place;
                    place *= s;
                    x /= s;
                    y /= s;
                }
                out
            }
        }
    }

    pub fn neg(&self, x: u32) -> u32 {
        let base = &self.0.base;
        match &self.0.shape {
            Shape::Free { rank } => digitwise(x, 0, base.size() as u32, *rank, |a, _| base.neg(a)),
            Shape::Quotient { cosets } => {
                cosets.class_of[base.neg(cosets.reps[x as usize]) as usize]
            }
            Shape::Ideal { members, position } => position[base.neg(members[x as usize]) as usize],
            Shape::DirectSum { parts } => {
                let mut x = x;
                let mut place = 1u32;
                let mut out = 0u32;
                for part in parts.iter().rev() {
                    let s = part.size() as u32;
                    out += part.neg(x % s) * place;
                    place *= s;
                    x /= s;
                }
                out
            }
        }
    }

    /// Scalar multiplication `a * e` by a base-ring element.
    pub fn scale(&self, a: u32, e: u32) -> u32 {
        let base = &self.0.base;
        match &self.0.shape {
            Shape::Free { rank } => {
                digitwise(e, 0, base.size() as u32, *rank, |v, _| base.mul(a, v))
            }
            Shape::Quotient { cosets } => {
                cosets.class_of[base.mul(a, cosets.reps[e as usize]) as usize]
            }
            Shape::Ideal { members, position } => {
                position[base.mul(a, members[e as usize]) as usize]
            }
            Shape::DirectSum { parts } => {
                let mut e = e;
                let mut place = 1u32;
                let mut out = 0u32;
                for part in parts.iter().rev() {
                    let s = part.size() as u32;
                    out += part.scale(a, e % s) * place;
                    place *= s;
                    e /= s;
                }
                out
            }
        }
    }

    pub fn decode(&self, e: u32) -> ElemExpr {
        let base = &self.0.base;
        match &self.0.shape {
            Shape::Free { rank: 1 } => base.decode(e),
            Shape::Free { rank } => {
                let s = base.size() as u32;
                let mut digits: Vec<u32> = (0..*rank)
                    .scan(e, |rest, _| {
                        let d = *rest % s;
                        *rest /= s;
                        Some(d)
                    })
                    .collect();
                digits.reverse();
                ElemExpr::vector(digits.into_iter().map(|d| base.decode(d)).collect())
            }
            Shape::Quotient { cosets } => base.decode(cosets.reps[e as usize]),
            Shape::Ideal { members, .. } => base.decode(members[e as usize]),
            Shape::DirectSum { parts } => {
                let mut e = e;
                let mut items = Vec::with_capacity(parts.len());
                for part in parts.iter().rev() {
                    let s = part.size() as u32;
                    items.push(part.decode(e % s));
                    e /= s;
                }
                items.reverse();
                ElemExpr::vector(items)
            }
        }
    }

    pub fn display(&self, e: u32) -> String {
        self.decode(e).to_string()
    }
}

fn digitwise(x: u32, y: u32, s: u32, rank: usize, op: impl Fn(u32, u32) -> u32) -> u32 {
    let (mut x, mut y) = (x, y);
    let mut place = 1u32;
    let mut out = 0u32;
    for _ in 0..rank {
        out += op(x % s, y % s) * place;
        place = place.wrapping_mul(s);
        x /= s;
        y /= s;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::zmod;
    use crate::ideal::ideal_generate;

    #[test]
    fn free_module_basis() {
        let a = zmod(2).unwrap();
        let m = module_free(&a, 2).unwrap();
        assert_eq!(m.size(), 4);
        let basis = m.basis().unwrap();
        let shown: Vec<String> = basis.iter().map(|&b| m.display(b)).collect();
        assert_eq!(shown, vec!["[1,0]", "[0,1]"]);
        assert!(module_free(&a, 0).is_err());
    }

    #[test]
    fn quotient_module_is_torsion() {
        let a = zmod(4).unwrap();
        let i = ideal_generate(&a, &[a.element(2).unwrap()]).unwrap();
        let m = module_quotient(&a, &i).unwrap();
        assert_eq!(m.size(), 2);
        for e in m.elements() {
            assert_eq!(m.scale(2, e), m.zero());
        }
        assert!(m.basis().is_none());
    }

    #[test]
    fn direct_sum_sizes() {
        let a = zmod(6).unwrap();
        let two = ideal_generate(&a, &[a.element(2).unwrap()]).unwrap();
        let three = ideal_generate(&a, &[a.element(3).unwrap()]).unwrap();
        let m = module_direct_sum(&[
            module_quotient(&a, &two).unwrap(),
            module_quotient(&a, &three).unwrap(),
        ])
        .unwrap();
        assert_eq!(m.size(), 6);
        assert!(module_direct_sum(&[]).is_err());
        let other = module_free(&zmod(6).unwrap(), 1).unwrap();
        assert_eq!(
            module_direct_sum(&[module_free(&a, 1).unwrap(), other]).unwrap_err(),
            Error::RingMismatch
        );
    }
}
