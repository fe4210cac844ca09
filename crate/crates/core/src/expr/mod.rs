//! Ring construction expressions.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := "Z/" INT
//!         | "product(" expr "," expr ")"
//!         | "quot(" expr "," ideal ")"
//!         | "polyquot(" expr "," poly ")"
//!         | "idealize(" expr "," module ")"
//!         | "dup(" expr "," ideal ")"
//! ideal  := "ideal(" [elem {"," elem}] ")"
//! module := "free(" INT ")" | "quotmod(" ideal ")" | "idealmod(" ideal ")"
//!         | "dsum(" module {"," module} ")"
//! elem   := INT | "(" elem "," elem ")" | "[" elem {"," elem} "]"
//! poly   := "[" elem {"," elem} "]"      constant term first, monic
//! ```
//!
//! An `INT` element literal denotes the image of that integer under the
//! canonical map from the integers, so `3` in `Z/4` is the residue 3 and
//! `1` is the identity of any ring.

mod elaborate;
mod parse;

use std::fmt;

pub use elaborate::{elaborate, elaborate_element, elaborate_module};
pub use parse::{parse_element, parse_ring_expr};

/// Source position of a node, 1-based.
///
/// Spans never take part in equality: two trees that differ only in where
/// they were parsed from compare equal.
#[derive(Clone, Copy, Debug, Default)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Span {}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingExpr {
    Zmod(u64),
    Product(Box<RingExpr>, Box<RingExpr>),
    Quot(Box<RingExpr>, IdealExpr),
    PolyQuot(Box<RingExpr>, Vec<ElemExpr>),
    Idealize(Box<RingExpr>, ModuleExpr),
    Dup(Box<RingExpr>, IdealExpr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealExpr {
    pub generators: Vec<ElemExpr>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    Free(u64),
    QuotMod(IdealExpr),
    IdealMod(IdealExpr),
    DSum(Vec<ModuleExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElemExpr {
    Int(u64, Span),
    Pair(Box<ElemExpr>, Box<ElemExpr>, Span),
    Vector(Vec<ElemExpr>, Span),
}

impl ElemExpr {
    pub fn int(v: u64) -> Self {
        ElemExpr::Int(v, Span::default())
    }

    pub fn pair(a: ElemExpr, b: ElemExpr) -> Self {
        ElemExpr::Pair(Box::new(a), Box::new(b), Span::default())
    }

    pub fn vector(items: Vec<ElemExpr>) -> Self {
        ElemExpr::Vector(items, Span::default())
    }

    pub fn span(&self) -> Span {
        match self {
            ElemExpr::Int(_, s) | ElemExpr::Pair(_, _, s) | ElemExpr::Vector(_, s) => *s,
        }
    }
}

impl IdealExpr {
    pub fn new(generators: Vec<ElemExpr>) -> Self {
        IdealExpr {
            generators,
            span: Span::default(),
        }
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl fmt::Display for ElemExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemExpr::Int(v, _) => write!(f, "{v}"),
            ElemExpr::Pair(a, b, _) => write!(f, "({a},{b})"),
            ElemExpr::Vector(items, _) => {
                f.write_str("[")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ideal(")?;
        write_list(f, &self.generators)?;
        f.write_str(")")
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::Free(k) => write!(f, "free({k})"),
            ModuleExpr::QuotMod(i) => write!(f, "quotmod({i})"),
            ModuleExpr::IdealMod(i) => write!(f, "idealmod({i})"),
            ModuleExpr::DSum(parts) => {
                f.write_str("dsum(")?;
                write_list(f, parts)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "Z/{n}"),
            RingExpr::Product(a, b) => write!(f, "product({a}, {b})"),
            RingExpr::Quot(r, i) => write!(f, "quot({r}, {i})"),
            RingExpr::PolyQuot(r, coeffs) => {
                write!(f, "polyquot({r}, ")?;
                write!(f, "{}", ElemExpr::vector(coeffs.clone()))?;
                f.write_str(")")
            }
            RingExpr::Idealize(r, m) => write!(f, "idealize({r}, {m})"),
            RingExpr::Dup(r, i) => write!(f, "dup({r}, {i})"),
        }
    }
}

impl RingExpr {
    /// Nesting depth: `Z/n` has depth 1.
    pub fn depth(&self) -> usize {
        match self {
            RingExpr::Zmod(_) => 1,
            RingExpr::Product(a, b) => 1 + a.depth().max(b.depth()),
            RingExpr::Quot(r, _)
            | RingExpr::PolyQuot(r, _)
            | RingExpr::Idealize(r, _)
            | RingExpr::Dup(r, _) => 1 + r.depth(),
        }
    }
}
