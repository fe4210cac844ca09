//! Elementwise classification: units, zero-divisors, regular and
//! nilpotent elements, and the ring-level predicates built on them.
//!
//! Zero counts as a zero-divisor in every nonzero ring. All queries reject
//! the zero ring.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ring::{Element, Ring};

fn nonzero(ring: &Ring) -> Result<()> {
    if ring.is_zero_ring() {
        Err(Error::ZeroRing)
    } else {
        Ok(())
    }
}

pub fn is_unit(ring: &Ring, x: Element) -> Result<bool> {
    nonzero(ring)?;
    let x = ring.index_of(x)?;
    Ok(ring.classes().units.contains(x as usize))
}

pub fn is_zero_divisor(ring: &Ring, x: Element) -> Result<bool> {
    nonzero(ring)?;
    let x = ring.index_of(x)?;
    Ok(ring.classes().zero_divisors.contains(x as usize))
}

pub fn is_regular(ring: &Ring, x: Element) -> Result<bool> {
    is_zero_divisor(ring, x).map(|z| !z)
}

pub fn is_nilpotent(ring: &Ring, x: Element) -> Result<bool> {
    nonzero(ring)?;
    let x = ring.index_of(x)?;
    Ok(nilpotent_raw(ring, x))
}

/// Walks the powers of `x` until zero or a repeat; at most `|R|` steps.
pub(crate) fn nilpotent_raw(ring: &Ring, x: u32) -> bool {
    let mut power = x;
    for _ in 0..ring.size() {
        if power == ring.zero() {
            return true;
        }
        power = ring.mul(power, x);
    }
    power == ring.zero()
}

pub fn is_reduced(ring: &Ring) -> Result<bool> {
    nonzero(ring)?;
    Ok(ring
        .elements()
        .all(|x| x == ring.zero() || !nilpotent_raw(ring, x)))
}

/// Non-units closed under addition.
pub fn is_local(ring: &Ring) -> Result<bool> {
    nonzero(ring)?;
    let non_units: Vec<u32> = non_units(ring).ones().map(|x| x as u32).collect();
    let units = &ring.classes().units;
    for (i, &x) in non_units.iter().enumerate() {
        for &y in &non_units[i..] {
            if units.contains(ring.add(x, y) as usize) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every nonzero element is a unit.
pub fn is_field(ring: &Ring) -> Result<bool> {
    nonzero(ring)?;
    Ok(ring.classes().units.count_ones(..) == ring.size() - 1)
}

pub fn units(ring: &Ring) -> Result<Vec<u32>> {
    nonzero(ring)?;
    Ok(ring.classes().units.ones().map(|x| x as u32).collect())
}

pub(crate) fn non_units(ring: &Ring) -> FixedBitSet {
    let mut set = ring.classes().units.clone();
    set.toggle_range(..);
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{duplication, product, zmod};
    use crate::ideal::Ideal;

    fn el(r: &Ring, i: usize) -> Element {
        r.element(i).unwrap()
    }

    #[test]
    fn units_and_zero_divisors_of_z4() {
        let r = zmod(4).unwrap();
        assert!(is_unit(&r, el(&r, 3)).unwrap());
        assert!(!is_unit(&r, el(&r, 2)).unwrap());
        assert!(is_zero_divisor(&r, el(&r, 2)).unwrap());
        assert!(is_zero_divisor(&r, el(&r, 0)).unwrap());
        assert!(is_regular(&r, el(&r, 3)).unwrap());
        assert!(!is_regular(&r, el(&r, 2)).unwrap());
        assert!(is_nilpotent(&r, el(&r, 2)).unwrap());
        assert!(!is_nilpotent(&r, el(&r, 3)).unwrap());
    }

    #[test]
    fn field_has_only_zero_as_zero_divisor() {
        let r = zmod(5).unwrap();
        assert!(!is_zero_divisor(&r, el(&r, 3)).unwrap());
        assert!(is_field(&r).unwrap());
    }

    #[test]
    fn idempotent_is_not_a_unit() {
        let f2 = zmod(2).unwrap();
        let r = product(&f2, &f2).unwrap();
        // (1,0) has index 2
        assert_eq!(r.display(2), "(1,0)");
        assert!(!is_unit(&r, el(&r, 2)).unwrap());
        assert!(!is_local(&r).unwrap());
    }

    #[test]
    fn reducedness() {
        assert!(is_reduced(&zmod(6).unwrap()).unwrap());
        assert!(!is_reduced(&zmod(4).unwrap()).unwrap());
        let f2 = zmod(2).unwrap();
        assert!(is_reduced(&duplication(&f2, &Ideal::whole(&f2)).unwrap()).unwrap());
    }

    #[test]
    fn locality() {
        assert!(is_local(&zmod(8).unwrap()).unwrap());
        assert!(!is_local(&zmod(6).unwrap()).unwrap());
        assert!(is_local(&zmod(7).unwrap()).unwrap());
    }

    #[test]
    fn zero_ring_rejected() {
        let r = zmod(1).unwrap();
        let z = el(&r, 0);
        assert_eq!(is_unit(&r, z).unwrap_err(), Error::ZeroRing);
        assert_eq!(is_zero_divisor(&r, z).unwrap_err(), Error::ZeroRing);
        assert_eq!(is_regular(&r, z).unwrap_err(), Error::ZeroRing);
        assert_eq!(is_nilpotent(&r, z).unwrap_err(), Error::ZeroRing);
        assert_eq!(is_reduced(&r).unwrap_err(), Error::ZeroRing);
        assert_eq!(is_local(&r).unwrap_err(), Error::ZeroRing);
    }

    #[test]
    fn foreign_element_rejected() {
        let a = zmod(4).unwrap();
        let b = zmod(4).unwrap();
        assert_eq!(is_unit(&a, el(&b, 1)).unwrap_err(), Error::RingMismatch);
    }
}
