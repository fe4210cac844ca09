use super::{ElemExpr, IdealExpr, ModuleExpr, RingExpr, Span};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

pub fn parse_ring_expr(text: &str) -> Result<RingExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let expr = p.ring()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(expr)
}

/// Parses a lone element literal such as `(1,0)` or `[0,1]`.
pub fn parse_element(text: &str) -> Result<ElemExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.elem()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn span_at(&self, pos: usize) -> Span {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(pos, |nl| pos - nl - 1) + 1;
        Span { line, column }
    }

    fn span(&self) -> Span {
        self.span_at(self.pos)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let span = self.span();
        Error::Parse {
            line: span.line,
            column: span.column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => Err(self.error(format!("expected '{c}', found '{found}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn keyword(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a construction name"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected an integer"));
        }
        let value = rest[..len]
            .parse()
            .map_err(|_| self.error("integer literal out of range"))?;
        self.pos += len;
        Ok(value)
    }

    fn ring(&mut self) -> Result<RingExpr> {
        let start = self.pos;
        let name = self.keyword()?;
        match name {
            "Z" => {
                self.expect('/')?;
                Ok(RingExpr::Zmod(self.int()?))
            }
            "product" => {
                self.expect('(')?;
                let a = self.ring()?;
                self.expect(',')?;
                let b = self.ring()?;
                self.expect(')')?;
                Ok(RingExpr::Product(Box::new(a), Box::new(b)))
            }
            "quot" | "dup" => {
                self.expect('(')?;
                let r = self.ring()?;
                self.expect(',')?;
                let i = self.ideal()?;
                self.expect(')')?;
                Ok(if name == "quot" {
                    RingExpr::Quot(Box::new(r), i)
                } else {
                    RingExpr::Dup(Box::new(r), i)
                })
            }
            "polyquot" => {
                self.expect('(')?;
                let r = self.ring()?;
                self.expect(',')?;
                let poly = match self.elem()? {
                    ElemExpr::Vector(items, _) => items,
                    other => {
                        let s = other.span();
                        return Err(Error::Parse {
                            line: s.line,
                            column: s.column,
                            message: "expected a coefficient vector".into(),
                        });
                    }
                };
                self.expect(')')?;
                Ok(RingExpr::PolyQuot(Box::new(r), poly))
            }
            "idealize" => {
                self.expect('(')?;
                let r = self.ring()?;
                self.expect(',')?;
                let m = self.module()?;
                self.expect(')')?;
                Ok(RingExpr::Idealize(Box::new(r), m))
            }
            other => {
                self.pos = start;
                self.skip_ws();
                Err(self.error(format!("unknown ring construction '{other}'")))
            }
        }
    }

    fn ideal(&mut self) -> Result<IdealExpr> {
        self.skip_ws();
        let span = self.span();
        let start = self.pos;
        if self.keyword()? != "ideal" {
            self.pos = start;
            return Err(self.error("expected 'ideal('"));
        }
        self.expect('(')?;
        let mut generators = Vec::new();
        if self.peek() != Some(')') {
            generators.push(self.elem()?);
            while self.peek() == Some(',') {
                self.pos += 1;
                generators.push(self.elem()?);
            }
        }
        self.expect(')')?;
        Ok(IdealExpr { generators, span })
    }

    fn module(&mut self) -> Result<ModuleExpr> {
        let start = self.pos;
        let name = self.keyword()?;
        self.expect('(')?;
        let m = match name {
            "free" => ModuleExpr::Free(self.int()?),
            "quotmod" => ModuleExpr::QuotMod(self.ideal()?),
            "idealmod" => ModuleExpr::IdealMod(self.ideal()?),
            "dsum" => {
                let mut parts = vec![self.module()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    parts.push(self.module()?);
                }
                ModuleExpr::DSum(parts)
            }
            other => {
                self.pos = start;
                self.skip_ws();
                return Err(self.error(format!("unknown module construction '{other}'")));
            }
        };
        self.expect(')')?;
        Ok(m)
    }

    fn elem(&mut self) -> Result<ElemExpr> {
        let c = self.peek();
        let span = self.span();
        match c {
            Some('(') => {
                self.pos += 1;
                let a = self.elem()?;
                self.expect(',')?;
                let b = self.elem()?;
                self.expect(')')?;
                Ok(ElemExpr::Pair(Box::new(a), Box::new(b), span))
            }
            Some('[') => {
                self.pos += 1;
                let mut items = vec![self.elem()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    items.push(self.elem()?);
                }
                self.expect(']')?;
                Ok(ElemExpr::Vector(items, span))
            }
            Some(d) if d.is_ascii_digit() => Ok(ElemExpr::Int(self.int()?, span)),
            Some(found) => Err(self.error(format!("expected an element literal, found '{found}'"))),
            None => Err(self.error("expected an element literal, found end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_duplication() {
        let e = parse_ring_expr("dup(Z/4, ideal(2))").unwrap();
        assert_eq!(
            e,
            RingExpr::Dup(
                Box::new(RingExpr::Zmod(4)),
                IdealExpr::new(vec![ElemExpr::int(2)])
            )
        );
    }

    #[test]
    fn parses_idealization() {
        let e = parse_ring_expr("idealize(Z/2, free(1))").unwrap();
        assert_eq!(
            e,
            RingExpr::Idealize(Box::new(RingExpr::Zmod(2)), ModuleExpr::Free(1))
        );
    }

    #[test]
    fn missing_comma_is_positioned() {
        match parse_ring_expr("product(Z/2 Z/2)") {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!((line, column), (1, 13));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn multiline_positions() {
        match parse_ring_expr("product(\n  Z/2,\n  Z/x)") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 5)),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_trailing_and_unknown() {
        assert!(parse_ring_expr("Z/4 Z/4").is_err());
        assert!(parse_ring_expr("ring(Z/4)").is_err());
        assert!(parse_ring_expr("polyquot(Z/2, 3)").is_err());
        assert!(parse_ring_expr("idealize(Z/2, tensor(1))").is_err());
        assert!(parse_ring_expr("").is_err());
    }

    #[test]
    fn nested_and_empty_ideal() {
        let src =
            "quot(idealize(product(Z/2, Z/3), dsum(free(2), quotmod(ideal((1,0))))), ideal())";
        let e = parse_ring_expr(src).unwrap();
        assert_eq!(e.to_string(), src);
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_ring_expr("  polyquot( Z/2 ,[ 1 , 1, 1 ] ) ").unwrap();
        let b = parse_ring_expr("polyquot(Z/2, [1,1,1])").unwrap();
        assert_eq!(a, b);
    }
}
