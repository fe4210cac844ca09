//! Ring constructors: `Z/n`, products, quotients, monic polynomial
//! quotients, trivial extensions `A ∝ E` and amalgamated duplications `R ⋈ I`.

use crate::error::{Error, Result};
use crate::expr::{ElemExpr, RingExpr};
use crate::ideal::Ideal;
use crate::module::RingModule;
use crate::ring::{split, Cosets, Kind, Ring, MAX_RING_SIZE};

fn expr_of(ring: &Ring) -> Result<RingExpr> {
    ring.expr().cloned().ok_or_else(|| {
        Error::InvalidArgument(format!("ring '{ring}' has no construction expression"))
    })
}

fn checked_size(a: usize, b: usize) -> Result<usize> {
    match a.checked_mul(b) {
        Some(s) if s <= MAX_RING_SIZE => Ok(s),
        _ => Err(Error::cap("ring size", a.saturating_mul(b), MAX_RING_SIZE)),
    }
}

/// `Z/n`; index `i` is the residue `i`. `zmod(1)` is the zero ring.
pub fn zmod(n: u64) -> Result<Ring> {
    if n == 0 {
        return Err(Error::InvalidArgument("modulus must be at least 1".into()));
    }
    if n as usize > MAX_RING_SIZE {
        return Err(Error::cap("ring size", n as usize, MAX_RING_SIZE));
    }
    let modulus = n as u32;
    Ring::build(
        RingExpr::Zmod(n),
        n as usize,
        0,
        1 % modulus,
        Kind::Zmod { modulus },
    )
}

/// Componentwise product; index `(a, b)` is `a * |R2| + b`.
pub fn product(left: &Ring, right: &Ring) -> Result<Ring> {
    if left.is_zero_ring() || right.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    let size = checked_size(left.size(), right.size())?;
    let n = right.size() as u32;
    let expr = RingExpr::Product(Box::new(expr_of(left)?), Box::new(expr_of(right)?));
    Ring::build(
        expr,
        size,
        left.zero() * n + right.zero(),
        left.one() * n + right.one(),
        Kind::Product {
            left: left.clone(),
            right: right.clone(),
        },
    )
}

/// `R / I`, each coset represented by its least index. `R / R` is the
/// zero ring.
pub fn quotient(ring: &Ring, ideal: &Ideal) -> Result<Ring> {
    if ideal.ring_id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    let cosets = Cosets::new(ring.size(), &ideal.member_list(), |x, y| ring.add(x, y));
    let size = cosets.reps.len();
    let zero = cosets.class_of[ring.zero() as usize];
    let one = cosets.class_of[ring.one() as usize];
    let expr = RingExpr::Quot(Box::new(expr_of(ring)?), ideal.to_expr(ring));
    Ring::build(
        expr,
        size,
        zero,
        one,
        Kind::Quotient {
            base: ring.clone(),
            ideal: ideal.clone(),
            cosets,
        },
    )
}

/// `R[X] / (f)` for monic `f` of degree `n >= 1`, given as base-ring
/// element indices, constant term first.
pub fn poly_quotient(ring: &Ring, modulus: &[u32]) -> Result<Ring> {
    if modulus.len() < 2 {
        return Err(Error::InvalidArgument(
            "modulus must have degree at least 1".into(),
        ));
    }
    if modulus.iter().any(|&c| c as usize >= ring.size()) {
        return Err(Error::InvalidArgument("coefficient out of range".into()));
    }
    let (lead, lower) = modulus.split_last().expect("length checked");
    if *lead != ring.one() {
        return Err(Error::NotMonic);
    }
    let n = lower.len();
    let size = (0..n).try_fold(1usize, |acc, _| checked_size(acc, ring.size()))?;
    let coeffs = modulus.iter().map(|&c| ring.decode(c)).collect();
    let expr = RingExpr::PolyQuot(Box::new(expr_of(ring)?), coeffs);
    Ring::build(
        expr,
        size,
        0,
        ring.one(),
        Kind::PolyQuotient {
            base: ring.clone(),
            lower: lower.to_vec(),
        },
    )
}

/// Trivial ring extension `A ∝ E` with `(a, e)(a', e') = (aa', ae' + a'e)`.
pub fn idealization(ring: &Ring, module: &RingModule) -> Result<Ring> {
    if !module.base().same_ring(ring) {
        return Err(Error::RingMismatch);
    }
    let size = checked_size(ring.size(), module.size())?;
    let m = module.size() as u32;
    let expr = RingExpr::Idealize(Box::new(expr_of(ring)?), module.expr().clone());
    Ring::build(
        expr,
        size,
        ring.zero() * m + module.zero(),
        ring.one() * m + module.zero(),
        Kind::Idealization {
            base: ring.clone(),
            module: module.clone(),
        },
    )
}

/// Amalgamated duplication `R ⋈ I` stored in `(r, e)` coordinates with
/// `(r, e)(s, f) = (rs, rf + se + ef)`.
pub fn duplication(ring: &Ring, ideal: &Ideal) -> Result<Ring> {
    if ideal.ring_id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    let members = ideal.member_list();
    let mut position = vec![u32::MAX; ring.size()];
    for (p, &e) in members.iter().enumerate() {
        position[e as usize] = p as u32;
    }
    let size = checked_size(ring.size(), members.len())?;
    let m = members.len() as u32;
    let expr = RingExpr::Dup(Box::new(expr_of(ring)?), ideal.to_expr(ring));
    let zero = ring.zero() * m + position[ring.zero() as usize];
    let one = ring.one() * m + position[ring.zero() as usize];
    Ring::build(
        expr,
        size,
        zero,
        one,
        Kind::Duplication {
            base: ring.clone(),
            ideal: ideal.clone(),
            members,
            position,
        },
    )
}

/// The pair `(r, r + e)` in `R × R` for an element `(r, e)` of `R ⋈ I`.
pub fn duplication_embedded(dup: &Ring, x: u32) -> Result<(u32, u32)> {
    let Kind::Duplication { base, members, .. } = dup.kind() else {
        return Err(Error::InvalidArgument(format!(
            "'{dup}' is not a duplication"
        )));
    };
    let (r, p) = split(x, members.len());
    Ok((r, base.add(r, members[p as usize])))
}

/// Display form `(r,r+e)` of a duplication element.
pub fn duplication_embedded_display(dup: &Ring, x: u32) -> Result<ElemExpr> {
    let (a, b) = duplication_embedded(dup, x)?;
    let Kind::Duplication { base, .. } = dup.kind() else {
        unreachable!()
    };
    Ok(ElemExpr::pair(base.decode(a), base.decode(b)))
}

/// The base ring and ideal a duplication was built from.
pub fn duplication_parts(dup: &Ring) -> Option<(&Ring, &Ideal)> {
    match dup.kind() {
        Kind::Duplication { base, ideal, .. } => Some((base, ideal)),
        _ => None,
    }
}

/// The base ring and module of a trivial extension.
pub fn idealization_parts(ring: &Ring) -> Option<(&Ring, &RingModule)> {
    match ring.kind() {
        Kind::Idealization { base, module } => Some((base, module)),
        _ => None,
    }
}

pub fn product_parts(ring: &Ring) -> Option<(&Ring, &Ring)> {
    match ring.kind() {
        Kind::Product { left, right } => Some((left, right)),
        _ => None,
    }
}

pub fn quotient_parts(ring: &Ring) -> Option<(&Ring, &Ideal)> {
    match ring.kind() {
        Kind::Quotient { base, ideal, .. } => Some((base, ideal)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_ring_axioms, AxiomMode};
    use crate::ideal::{generate_raw, ideal_generate};
    use crate::iso::ring_isomorphic;
    use crate::module::{module_free, module_ideal, module_quotient};
    use crate::Caps;

    fn find(ring: &Ring, literal: &str) -> u32 {
        ring.elements()
            .find(|&x| ring.display(x) == literal)
            .unwrap_or_else(|| panic!("{literal} not in {ring}"))
    }

    #[test]
    fn zmod_basics() {
        assert!(zmod(0).is_err());
        let z1 = zmod(1).unwrap();
        assert!(z1.is_zero_ring());
        assert_eq!(z1.zero(), z1.one());
        let z4 = zmod(4).unwrap();
        assert_eq!(z4.mul(2, 2), 0);
        assert_eq!(z4.mul(3, 3), 1);
        let z6 = zmod(6).unwrap();
        assert_eq!(z6.mul(2, 3), 0);
    }

    #[test]
    fn product_idempotents_multiply_to_zero() {
        let f2 = zmod(2).unwrap();
        let r = product(&f2, &f2).unwrap();
        let (e1, e2) = (find(&r, "(1,0)"), find(&r, "(0,1)"));
        assert_eq!(r.display(r.mul(e1, e2)), "(0,0)");
        assert_eq!(
            product(&f2, &zmod(1).unwrap()).unwrap_err(),
            Error::ZeroRing
        );
    }

    #[test]
    fn crt_product() {
        let caps = Caps::default();
        let r = product(&zmod(2).unwrap(), &zmod(3).unwrap()).unwrap();
        let z6 = zmod(6).unwrap();
        // explicit CRT bijection x -> (x mod 2, x mod 3)
        let map = |x: u32| find(&r, &format!("({},{})", x % 2, x % 3));
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(map(z6.add(x, y)), r.add(map(x), map(y)));
                assert_eq!(map(z6.mul(x, y)), r.mul(map(x), map(y)));
            }
        }
        assert!(ring_isomorphic(&z6, &r, &caps).unwrap());
    }

    #[test]
    fn quotients() {
        let caps = Caps::default();
        let z12 = zmod(12).unwrap();
        let four = generate_raw(&z12, &[4]);
        let q = quotient(&z12, &four).unwrap();
        assert_eq!(q.size(), 4);
        let z4 = zmod(4).unwrap();
        // coset of x maps to x mod 4; reps are 0..3 so tables coincide
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(q.mul(x, y), z4.mul(x, y));
                assert_eq!(q.add(x, y), z4.add(x, y));
            }
        }
        assert!(ring_isomorphic(&q, &z4, &caps).unwrap());
        let same = quotient(&z12, &Ideal::zero(&z12)).unwrap();
        assert!(ring_isomorphic(&same, &z12, &caps).unwrap());
        let zero = quotient(&z12, &Ideal::whole(&z12)).unwrap();
        assert!(zero.is_zero_ring());
    }

    #[test]
    fn poly_quotients() {
        let caps = Caps::default();
        let f2 = zmod(2).unwrap();
        let dual = poly_quotient(&f2, &[0, 0, 1]).unwrap();
        assert_eq!(dual.size(), 4);
        let x = find(&dual, "[0,1]");
        assert_eq!(dual.mul(x, x), dual.zero());

        let gf4 = poly_quotient(&f2, &[1, 1, 1]).unwrap();
        for a in gf4.elements().filter(|&a| a != 0) {
            assert!(
                gf4.elements().any(|b| gf4.mul(a, b) == gf4.one()),
                "{} not a unit",
                gf4.display(a)
            );
        }
        let z5 = zmod(5).unwrap();
        let lin = poly_quotient(&z5, &[0, 1]).unwrap();
        assert!(ring_isomorphic(&lin, &z5, &caps).unwrap());
        assert_eq!(
            poly_quotient(&zmod(4).unwrap(), &[0, 0, 2]).unwrap_err(),
            Error::NotMonic
        );
        assert!(poly_quotient(&f2, &[1]).is_err());
    }

    #[test]
    fn cubic_reduction() {
        // Z/3[X]/(X^3 - X - 1): X^3 = X + 1
        let z3 = zmod(3).unwrap();
        let r = poly_quotient(&z3, &[2, 2, 0, 1]).unwrap();
        let x = find(&r, "[0,1,0]");
        let x2 = r.mul(x, x);
        assert_eq!(r.display(x2), "[0,0,1]");
        assert_eq!(r.display(r.mul(x2, x)), "[1,1,0]");
        assert_eq!(r.display(r.mul(x2, x2)), "[0,1,1]");
    }

    #[test]
    fn idealization_examples() {
        let caps = Caps::default();
        let f2 = zmod(2).unwrap();
        let r = idealization(&f2, &module_free(&f2, 1).unwrap()).unwrap();
        let (one_one, zero_one) = (find(&r, "(1,1)"), find(&r, "(0,1)"));
        assert_eq!(r.display(r.mul(one_one, one_one)), "(1,0)");
        assert_eq!(r.display(r.mul(zero_one, zero_one)), "(0,0)");
        let dual = poly_quotient(&f2, &[0, 0, 1]).unwrap();
        // (a, e) -> a + eX: index a*2 + e vs digits a + 2e
        let map = |v: u32| find(&dual, &format!("[{},{}]", v / 2, v % 2));
        for x in r.elements() {
            for y in r.elements() {
                assert_eq!(map(r.mul(x, y)), dual.mul(map(x), map(y)));
                assert_eq!(map(r.add(x, y)), dual.add(map(x), map(y)));
            }
        }
        assert!(ring_isomorphic(&r, &dual, &caps).unwrap());

        let z4 = zmod(4).unwrap();
        let two = generate_raw(&z4, &[2]);
        let r = idealization(&z4, &module_quotient(&z4, &two).unwrap()).unwrap();
        assert_eq!(r.size(), 8);
        assert!(check_ring_axioms(&r, AxiomMode::Full, &caps, 0).passed());
        let other = zmod(4).unwrap();
        assert_eq!(
            idealization(&other, &module_free(&z4, 1).unwrap()).unwrap_err(),
            Error::RingMismatch
        );
    }

    #[test]
    fn square_zero_pairs_multiply_to_zero() {
        let z3 = zmod(3).unwrap();
        let m = module_free(&z3, 2).unwrap();
        let r = idealization(&z3, &m).unwrap();
        let e_size = m.size() as u32;
        for e in 0..e_size {
            for f in 0..e_size {
                assert_eq!(r.mul(e, f), r.zero());
            }
        }
    }

    #[test]
    fn duplication_examples() {
        let caps = Caps::default();
        let z4 = zmod(4).unwrap();
        let two = ideal_generate(&z4, &[z4.element(2).unwrap()]).unwrap();
        let d = duplication(&z4, &two).unwrap();
        assert_eq!(d.size(), 8);
        let idz = idealization(&z4, &module_ideal(&z4, &two).unwrap()).unwrap();
        for x in d.elements() {
            for y in d.elements() {
                assert_eq!(d.mul(x, y), idz.mul(x, y));
                assert_eq!(d.add(x, y), idz.add(x, y));
            }
        }
        let trivial = duplication(&z4, &Ideal::zero(&z4)).unwrap();
        assert!(ring_isomorphic(&trivial, &z4, &caps).unwrap());
        let x = find(&d, "(1,2)");
        assert_eq!(
            duplication_embedded_display(&d, x).unwrap().to_string(),
            "(1,3)"
        );
        assert!(duplication_embedded(&z4, 0).is_err());
    }

    #[test]
    fn full_duplication_is_product() {
        let f2 = zmod(2).unwrap();
        let d = duplication(&f2, &Ideal::whole(&f2)).unwrap();
        let p = product(&f2, &f2).unwrap();
        let map = |x: u32| {
            let (a, b) = duplication_embedded(&d, x).unwrap();
            a * 2 + b
        };
        for x in d.elements() {
            for y in d.elements() {
                assert_eq!(map(d.mul(x, y)), p.mul(map(x), map(y)));
            }
        }
    }

    #[test]
    fn constructions_satisfy_axioms() {
        let caps = Caps::default();
        let z6 = zmod(6).unwrap();
        let three = generate_raw(&z6, &[3]);
        let rings = vec![
            product(&zmod(4).unwrap(), &zmod(6).unwrap()).unwrap(),
            quotient(&z6, &three).unwrap(),
            poly_quotient(&z6, &[1, 0, 0, 1]).unwrap(),
            duplication(&z6, &three).unwrap(),
            idealization(&z6, &module_free(&z6, 2).unwrap()).unwrap(),
        ];
        for r in rings {
            let report = check_ring_axioms(&r, AxiomMode::Full, &caps, 0);
            assert!(report.passed(), "{r}: {report:?}");
        }
    }
}
