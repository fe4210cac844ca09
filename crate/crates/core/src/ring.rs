//! The finite-ring handle and its structural arithmetic.
//!
//! Every ring is a universe of indices `0..size` together with exact
//! addition, multiplication and negation. Index `0` is always the zero
//! element. Rings with at most [`TABLE_THRESHOLD`] elements precompute
//! full Cayley tables; larger rings evaluate operations structurally
//! through the construction that built them.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::expr::{ElemExpr, RingExpr};
use crate::ideal::Ideal;
use crate::module::RingModule;

/// Rings up to this many elements memoize their operation tables.
pub const TABLE_THRESHOLD: usize = 256;

/// Constructors refuse to build rings larger than this.
pub const MAX_RING_SIZE: usize = 1 << 22;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

impl RingId {
    pub(crate) fn fresh() -> Self {
        RingId(NEXT_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// An element tagged with the ring it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    ring: RingId,
    index: u32,
}

impl Element {
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn ring_id(self) -> RingId {
        self.ring
    }
}

/// Coset bookkeeping shared by quotient rings and quotient modules.
#[derive(Clone, Debug)]
pub(crate) struct Cosets {
    /// Least base index in each class, ascending.
    pub reps: Vec<u32>,
    /// Class of every base index.
    pub class_of: Vec<u32>,
}

impl Cosets {
    /// Partitions `0..size` into cosets of the additive subgroup `members`.
    pub fn new(size: usize, members: &[u32], add: impl Fn(u32, u32) -> u32) -> Self {
        let mut class_of = vec![u32::MAX; size];
        let mut reps = Vec::with_capacity(size / members.len().max(1));
        for x in 0..size as u32 {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let class = reps.len() as u32;
            reps.push(x);
            for &m in members {
                class_of[add(x, m) as usize] = class;
            }
        }
        Cosets { reps, class_of }
    }
}

pub(crate) enum Kind {
    Zmod {
        modulus: u32,
    },
    Product {
        left: Ring,
        right: Ring,
    },
    Quotient {
        base: Ring,
        ideal: Ideal,
        cosets: Cosets,
    },
    /// Coefficient vectors `c_0 + c_1 X + ... + c_{n-1} X^{n-1}` modulo a
    /// monic polynomial; `lower` holds its coefficients below the leading one.
    /// Index = sum of `c_i * |base|^i`.
    PolyQuotient {
        base: Ring,
        lower: Vec<u32>,
    },
    /// Pairs `(a, e)`; index = `a * |E| + e`.
    Idealization {
        base: Ring,
        module: RingModule,
    },
    /// Pairs `(r, e)` with `e` in the ideal; index = `r * |I| + position(e)`.
    Duplication {
        base: Ring,
        ideal: Ideal,
        members: Vec<u32>,
        position: Vec<u32>,
    },
    /// Given only by its tables.
    Table,
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

/// Per-element unit / zero-divisor classification, computed once.
pub(crate) struct Classification {
    pub units: FixedBitSet,
    pub zero_divisors: FixedBitSet,
}

pub(crate) struct RingData {
    id: RingId,
    expr: Option<RingExpr>,
    label: String,
    size: usize,
    zero: u32,
    one: u32,
    pub(crate) kind: Kind,
    tables: Option<Tables>,
    classes: OnceLock<Classification>,
}

/// A finite commutative ring with identity. Cheap to clone.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({}, |R| = {})", self.0.label, self.0.size)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.label)
    }
}

impl Ring {
    pub(crate) fn build(
        expr: RingExpr,
        size: usize,
        zero: u32,
        one: u32,
        kind: Kind,
    ) -> Result<Ring> {
        if size > MAX_RING_SIZE {
            return Err(Error::cap("ring size", size, MAX_RING_SIZE));
        }
        let label = expr.to_string();
        let mut data = RingData {
            id: RingId::fresh(),
            expr: Some(expr),
            label,
            size,
            zero,
            one,
            kind,
            tables: None,
            classes: OnceLock::new(),
        };
        if size <= TABLE_THRESHOLD {
            let n = size as u32;
            let mut add = Vec::with_capacity(size * size);
            let mut mul = Vec::with_capacity(size * size);
            for x in 0..n {
                for y in 0..n {
                    add.push(data.structural_add(x, y));
                    mul.push(data.structural_mul(x, y));
                }
            }
            let neg = (0..n).map(|x| data.structural_neg(x)).collect();
            data.tables = Some(Tables { add, mul, neg });
        }
        Ok(Ring(Arc::new(data)))
    }

    /// Builds a ring directly from Cayley tables (row-major, `size * size`).
    ///
    /// Only the shapes are validated; use
    /// [`check_ring_axioms`](crate::axioms::check_ring_axioms) to confirm
    /// the tables actually describe a commutative ring.
    pub fn from_tables(
        label: impl Into<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: u32,
        one: u32,
    ) -> Result<Ring> {
        let size = (add.len() as f64).sqrt() as usize;
        if size == 0 || size * size != add.len() || mul.len() != add.len() {
            return Err(Error::InvalidArgument(
                "tables must be square and equally sized".into(),
            ));
        }
        if add.iter().chain(&mul).any(|&v| v as usize >= size)
            || zero as usize >= size
            || one as usize >= size
        {
            return Err(Error::InvalidArgument("table entry out of range".into()));
        }
        let neg = (0..size)
            .map(|x| {
                (0..size as u32)
                    .find(|&y| add[x * size + y as usize] == zero)
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!("element {x} has no additive inverse"))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Ring(Arc::new(RingData {
            id: RingId::fresh(),
            expr: None,
            label: label.into(),
            size,
            zero,
            one,
            kind: Kind::Table,
            tables: Some(Tables { add, mul, neg }),
            classes: OnceLock::new(),
        })))
    }

    pub fn id(&self) -> RingId {
        self.0.id
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn zero(&self) -> u32 {
        self.0.zero
    }

    pub fn one(&self) -> u32 {
        self.0.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.0.size == 1
    }

    /// The construction expression, absent for table-defined rings.
    pub fn expr(&self) -> Option<&RingExpr> {
        self.0.expr.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn has_tables(&self) -> bool {
        self.0.tables.is_some()
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.0.kind
    }

    pub fn same_ring(&self, other: &Ring) -> bool {
        self.0.id == other.0.id
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.size as u32
    }

    pub fn element(&self, index: usize) -> Result<Element> {
        if index >= self.0.size {
            return Err(Error::InvalidArgument(format!(
                "index {index} out of range for a ring of size {}",
                self.0.size
            )));
        }
        Ok(Element {
            ring: self.0.id,
            index: index as u32,
        })
    }

    /// Unwraps an element after checking it belongs to this ring.
    pub fn index_of(&self, x: Element) -> Result<u32> {
        if x.ring != self.0.id {
            return Err(Error::RingMismatch);
        }
        Ok(x.index)
    }

    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.add[x as usize * self.0.size + y as usize],
            None => self.0.structural_add(x, y),
        }
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.mul[x as usize * self.0.size + y as usize],
            None => self.0.structural_mul(x, y),
        }
    }

    #[inline]
    pub fn neg(&self, x: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.neg[x as usize],
            None => self.0.structural_neg(x),
        }
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    /// Image of a non-negative integer under the canonical map from Z.
    pub fn from_int(&self, k: u64) -> u32 {
        let mut acc = self.zero();
        let mut base = self.one();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn pow(&self, x: u32, mut e: u64) -> u32 {
        let mut acc = self.one();
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Additive order of `x`.
    pub fn additive_order(&self, x: u32) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != self.zero() {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one())
    }

    /// Structured display form of an element, parseable back by
    /// [`elaborate_element`](crate::expr::elaborate_element).
    pub fn decode(&self, x: u32) -> ElemExpr {
        match &self.0.kind {
            Kind::Zmod { .. } | Kind::Table => ElemExpr::int(x as u64),
            Kind::Product { left, right } => {
                let (a, b) = split(x, right.size());
                ElemExpr::pair(left.decode(a), right.decode(b))
            }
            Kind::Quotient { base, cosets, .. } => base.decode(cosets.reps[x as usize]),
            Kind::PolyQuotient { base, lower } => {
                let coeffs = poly_digits(x, base.size(), lower.len());
                ElemExpr::vector(coeffs.into_iter().map(|c| base.decode(c)).collect())
            }
            Kind::Idealization { base, module } => {
                let (a, e) = split(x, module.size());
                ElemExpr::pair(base.decode(a), module.decode(e))
            }
            Kind::Duplication { base, members, .. } => {
                let (r, p) = split(x, members.len());
                ElemExpr::pair(base.decode(r), base.decode(members[p as usize]))
            }
        }
    }

    pub fn display(&self, x: u32) -> String {
        self.decode(x).to_string()
    }

    pub(crate) fn classes(&self) -> &Classification {
        self.0.classes.get_or_init(|| self.classify())
    }

    /// Scans each element until a definitional witness turns up: `xy = 1`
    /// makes `x` a unit, `xy = 0` with `y != 0` a zero-divisor. In a finite
    /// ring exactly one of the two exists, so every scan terminates with a
    /// witness; table rings that are not rings may leave elements in neither set.
    fn classify(&self) -> Classification {
        let n = self.size();
        let (zero, one) = (self.zero(), self.one());
        let mut units = FixedBitSet::with_capacity(n);
        let mut zero_divisors = FixedBitSet::with_capacity(n);
        if n < 2 {
            return Classification {
                units,
                zero_divisors,
            };
        }
        for x in self.elements() {
            if units[x as usize] {
                continue;
            }
            for y in self.elements() {
                let p = self.mul(x, y);
                if p == one {
                    units.insert(x as usize);
                    units.insert(y as usize);
                    break;
                }
                if p == zero && y != zero {
                    zero_divisors.insert(x as usize);
                    break;
                }
            }
        }
        Classification {
            units,
            zero_divisors,
        }
    }
}

#[inline]
pub(crate) fn split(x: u32, inner: usize) -> (u32, u32) {
    let inner = inner as u32;
    (x / inner, x % inner)
}

pub(crate) fn poly_digits(mut x: u32, base: usize, n: usize) -> Vec<u32> {
    let b = base as u32;
    (0..n)
        .map(|_| {
            let d = x % b;
            x /= b;
            d
        })
        .collect()
}

pub(crate) fn poly_index(digits: &[u32], base: usize) -> u32 {
    digits
        .iter()
        .rev()
        .fold(0u32, |acc, &d| acc * base as u32 + d)
}

impl RingData {
    fn structural_add(&self, x: u32, y: u32) -> u32 {
        match &self.kind {
            Kind::Zmod { modulus } => ((x as u64 + y as u64) % *modulus as u64) as u32,
            Kind::Product { left, right } => {
                let n = right.size() as u32;
                let (a, b) = split(x, n as usize);
                let (c, d) = split(y, n as usize);
                left.add(a, c) * n + right.add(b, d)
            }
            Kind::Quotient { base, cosets, .. } => {
                cosets.class_of[base.add(cosets.reps[x as usize], cosets.reps[y as usize]) as usize]
            }
            Kind::PolyQuotient { base, lower } => {
                let s = base.size();
                let xs = poly_digits(x, s, lower.len());
                let ys = poly_digits(y, s, lower.len());
                let sum: Vec<u32> = xs.iter().zip(&ys).map(|(&a, &b)| base.add(a, b)).collect();
                poly_index(&sum, s)
            }
            Kind::Idealization { base, module } => {
                let m = module.size() as u32;
                let (a, e) = split(x, m as usize);
                let (b, f) = split(y, m as usize);
                base.add(a, b) * m + module.add(e, f)
            }
            Kind::Duplication {
                base,
                members,
                position,
                ..
            } => {
                let m = members.len() as u32;
                let (r, p) = split(x, m as usize);
                let (s, q) = split(y, m as usize);
                let e = base.add(members[p as usize], members[q as usize]);
                base.add(r, s) * m + position[e as usize]
            }
            Kind::Table => unreachable!("table rings always carry tables"),
        }
    }

    fn structural_mul(&self, x: u32, y: u32) -> u32 {
        match &self.kind {
            Kind::Zmod { modulus } => ((x as u64 * y as u64) % *modulus as u64) as u32,
            Kind::Product { left, right } => {
                let n = right.size() as u32;
                let (a, b) = split(x, n as usize);
                let (c, d) = split(y, n as usize);
                left.mul(a, c) * n + right.mul(b, d)
            }
            Kind::Quotient { base, cosets, .. } => {
                cosets.class_of[base.mul(cosets.reps[x as usize], cosets.reps[y as usize]) as usize]
            }
            Kind::PolyQuotient { base, lower } => {
                let s = base.size();
                let n = lower.len();
                let xs = poly_digits(x, s, n);
                let ys = poly_digits(y, s, n);
                let mut prod = vec![base.zero(); 2 * n - 1];
                for (i, &a) in xs.iter().enumerate() {
                    if a == base.zero() {
                        continue;
                    }
                    for (j, &b) in ys.iter().enumerate() {
                        prod[i + j] = base.add(prod[i + j], base.mul(a, b));
                    }
                }
                // X^n = -(lower), eliminate from the top degree down
                for d in (n..2 * n - 1).rev() {
                    let c = prod[d];
                    if c == base.zero() {
                        continue;
                    }
                    for (j, &f) in lower.iter().enumerate() {
                        let t = d - n + j;
                        prod[t] = base.sub(prod[t], base.mul(c, f));
                    }
                    prod[d] = base.zero();
                }
                poly_index(&prod[..n], s)
            }
            Kind::Idealization { base, module } => {
                let m = module.size() as u32;
                let (a, e) = split(x, m as usize);
                let (b, f) = split(y, m as usize);
                let tail = module.add(module.scale(a, f), module.scale(b, e));
                base.mul(a, b) * m + tail
            }
            Kind::Duplication {
                base,
                members,
                position,
                ..
            } => {
                let m = members.len() as u32;
                let (r, p) = split(x, m as usize);
                let (s, q) = split(y, m as usize);
                let (e, f) = (members[p as usize], members[q as usize]);
                let tail = base.add(base.add(base.mul(r, f), base.mul(s, e)), base.mul(e, f));
                base.mul(r, s) * m + position[tail as usize]
            }
            Kind::Table => unreachable!("table rings always carry tables"),
        }
    }

    fn structural_neg(&self, x: u32) -> u32 {
        match &self.kind {
            Kind::Zmod { modulus } => (*modulus - x) % *modulus,
            Kind::Product { left, right } => {
                let n = right.size() as u32;
                let (a, b) = split(x, n as usize);
                left.neg(a) * n + right.neg(b)
            }
            Kind::Quotient { base, cosets, .. } => {
                cosets.class_of[base.neg(cosets.reps[x as usize]) as usize]
            }
            Kind::PolyQuotient { base, lower } => {
                let s = base.size();
                let xs = poly_digits(x, s, lower.len());
                let neg: Vec<u32> = xs.iter().map(|&a| base.neg(a)).collect();
                poly_index(&neg, s)
            }
            Kind::Idealization { base, module } => {
                let m = module.size() as u32;
                let (a, e) = split(x, m as usize);
                base.neg(a) * m + module.neg(e)
            }
            Kind::Duplication {
                base,
                members,
                position,
                ..
            } => {
                let m = members.len() as u32;
                let (r, p) = split(x, m as usize);
                base.neg(r) * m + position[base.neg(members[p as usize]) as usize]
            }
            Kind::Table => unreachable!("table rings always carry tables"),
        }
    }
}
