use super::{ElemExpr, IdealExpr, ModuleExpr, RingExpr, Span};
use crate::construct;
use crate::error::{Error, Result};
use crate::ideal::{generate_raw, Ideal};
use crate::module::{self, RingModule, Shape};
use crate::ring::{poly_index, Kind, Ring};

fn invalid(span: Span, message: impl Into<String>) -> Error {
    Error::Elaboration {
        line: span.line,
        column: span.column,
        message: message.into(),
    }
}

/// Builds the ring an expression describes.
pub fn elaborate(expr: &RingExpr) -> Result<Ring> {
    match expr {
        RingExpr::Zmod(n) => construct::zmod(*n),
        RingExpr::Product(a, b) => construct::product(&elaborate(a)?, &elaborate(b)?),
        RingExpr::Quot(r, i) => {
            let ring = elaborate(r)?;
            let ideal = elaborate_ideal(&ring, i)?;
            construct::quotient(&ring, &ideal)
        }
        RingExpr::Dup(r, i) => {
            let ring = elaborate(r)?;
            let ideal = elaborate_ideal(&ring, i)?;
            construct::duplication(&ring, &ideal)
        }
        RingExpr::PolyQuot(r, coeffs) => {
            let ring = elaborate(r)?;
            let f = coeffs
                .iter()
                .map(|c| elaborate_element(&ring, c))
                .collect::<Result<Vec<_>>>()?;
            construct::poly_quotient(&ring, &f)
        }
        RingExpr::Idealize(r, m) => {
            let ring = elaborate(r)?;
            let module = elaborate_module(&ring, m)?;
            construct::idealization(&ring, &module)
        }
    }
}

pub fn elaborate_ideal(ring: &Ring, ideal: &IdealExpr) -> Result<Ideal> {
    let gens = ideal
        .generators
        .iter()
        .map(|g| elaborate_element(ring, g))
        .collect::<Result<Vec<_>>>()?;
    Ok(generate_raw(ring, &gens))
}

pub fn elaborate_module(ring: &Ring, expr: &ModuleExpr) -> Result<RingModule> {
    match expr {
        ModuleExpr::Free(k) => module::module_free(ring, *k as usize),
        ModuleExpr::QuotMod(i) => module::module_quotient(ring, &elaborate_ideal(ring, i)?),
        ModuleExpr::IdealMod(i) => module::module_ideal(ring, &elaborate_ideal(ring, i)?),
        ModuleExpr::DSum(parts) => {
            let parts = parts
                .iter()
                .map(|p| elaborate_module(ring, p))
                .collect::<Result<Vec<_>>>()?;
            module::module_direct_sum(&parts)
        }
    }
}

/// Resolves an element literal against the shape of `ring`.
///
/// An integer literal always means the image of that integer in the ring.
pub fn elaborate_element(ring: &Ring, elem: &ElemExpr) -> Result<u32> {
    if let ElemExpr::Int(v, _) = elem {
        return Ok(ring.from_int(*v));
    }
    let span = elem.span();
    match (ring.kind(), elem) {
        (Kind::Quotient { base, cosets, .. }, _) => {
            let x = elaborate_element(base, elem)?;
            Ok(cosets.class_of[x as usize])
        }
        (Kind::Product { left, right }, ElemExpr::Pair(a, b, _)) => {
            let a = elaborate_element(left, a)?;
            let b = elaborate_element(right, b)?;
            Ok(a * right.size() as u32 + b)
        }
        (Kind::Idealization { base, module }, ElemExpr::Pair(a, e, _)) => {
            let a = elaborate_element(base, a)?;
            let e = module_element(module, e)?;
            Ok(a * module.size() as u32 + e)
        }
        (
            Kind::Duplication {
                base,
                members,
                position,
                ..
            },
            ElemExpr::Pair(r, e, _),
        ) => {
            let r = elaborate_element(base, r)?;
            let espan = e.span();
            let e = elaborate_element(base, e)?;
            let p = position[e as usize];
            if p == u32::MAX {
                return Err(invalid(
                    espan,
                    format!("{} is not in the duplicated ideal", base.display(e)),
                ));
            }
            Ok(r * members.len() as u32 + p)
        }
        (Kind::PolyQuotient { base, lower }, ElemExpr::Vector(items, _)) => {
            if items.len() > lower.len() {
                return Err(invalid(
                    span,
                    format!(
                        "expected at most {} coefficients, found {}",
                        lower.len(),
                        items.len()
                    ),
                ));
            }
            let mut digits = items
                .iter()
                .map(|c| elaborate_element(base, c))
                .collect::<Result<Vec<_>>>()?;
            digits.resize(lower.len(), base.zero());
            Ok(poly_index(&digits, base.size()))
        }
        _ => Err(invalid(
            span,
            format!("literal '{elem}' does not fit ring {ring}"),
        )),
    }
}

/// Resolves a literal as an element of `module`.
pub fn module_element(module: &RingModule, elem: &ElemExpr) -> Result<u32> {
    let base = module.base();
    let span = elem.span();
    match (module.shape(), elem) {
        (Shape::Free { rank: 1 }, ElemExpr::Vector(items, _)) if items.len() == 1 => {
            elaborate_element(base, &items[0])
        }
        (Shape::Free { rank: 1 }, _) => elaborate_element(base, elem),
        (Shape::Free { rank }, ElemExpr::Vector(items, _)) => {
            if items.len() != *rank {
                return Err(invalid(
                    span,
                    format!("expected {rank} coordinates, found {}", items.len()),
                ));
            }
            let s = base.size() as u32;
            items
                .iter()
                .try_fold(0u32, |acc, c| Ok(acc * s + elaborate_element(base, c)?))
        }
        (Shape::Quotient { cosets }, _) => {
            let x = elaborate_element(base, elem)?;
            Ok(cosets.class_of[x as usize])
        }
        (Shape::Ideal { position, .. }, _) => {
            let x = elaborate_element(base, elem)?;
            match position[x as usize] {
                u32::MAX => Err(invalid(
                    span,
                    format!("{} is not in the ideal", base.display(x)),
                )),
                p => Ok(p),
            }
        }
        (Shape::DirectSum { parts }, ElemExpr::Vector(items, _)) => {
            if items.len() != parts.len() {
                return Err(invalid(
                    span,
                    format!("expected {} components, found {}", parts.len(), items.len()),
                ));
            }
            parts.iter().zip(items).try_fold(0u32, |acc, (p, item)| {
                Ok(acc * p.size() as u32 + module_element(p, item)?)
            })
        }
        (_, ElemExpr::Int(0, _)) => Ok(module.zero()),
        _ => Err(invalid(
            span,
            format!("literal '{elem}' does not fit module {module}"),
        )),
    }
}
