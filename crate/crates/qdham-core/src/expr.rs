//! Tiny constructor language for the graphs used around here:
//!
//! ```text
//! expr := func "(" args ")"
//! func := kn | e | star | path | cycle | bip | h | join | union | rep | comp
//! ```
//!
//! `kn`, `e`, `star`, `path`, `cycle` take one integer; `bip` and `h` take
//! two; `rep` takes an integer and an expression; `join` and `union` take two
//! expressions; `comp` takes one. Whitespace is insignificant. `star(k)` is
//! the star with k leaves, `h(t, n)` the extremal balanced bipartite graph
//! with parts of size n.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::build_h;
use crate::graph::{
    complete, complete_bipartite, cycle, disjoint_union, empty, join, path, replicate, star, Graph,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Complete(u32),
    Empty(u32),
    Star(u32),
    Path(u32),
    Cycle(u32),
    Bipartite(u32, u32),
    HGraph(u32, u32),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    Rep(u32, Box<GraphExpr>),
    Complement(Box<GraphExpr>),
}

impl GraphExpr {
    /// Build the denoted graph; integer-range violations surface here.
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphExpr::Complete(n) => complete(*n as usize),
            GraphExpr::Empty(n) => empty(*n as usize),
            GraphExpr::Star(k) => star(*k as usize),
            GraphExpr::Path(n) => path(*n as usize),
            GraphExpr::Cycle(n) => cycle(*n as usize),
            GraphExpr::Bipartite(a, b) => complete_bipartite(*a as usize, *b as usize),
            GraphExpr::HGraph(t, n) => build_h(*t as usize, *n as usize),
            GraphExpr::Join(a, b) => Ok(join(&a.build()?, &b.build()?)),
            GraphExpr::Union(a, b) => Ok(disjoint_union(&a.build()?, &b.build()?)),
            GraphExpr::Rep(k, e) => replicate(*k as usize, &e.build()?),
            GraphExpr::Complement(e) => Ok(e.build()?.complement()),
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Complete(n) => write!(f, "kn({n})"),
            GraphExpr::Empty(n) => write!(f, "e({n})"),
            GraphExpr::Star(k) => write!(f, "star({k})"),
            GraphExpr::Path(n) => write!(f, "path({n})"),
            GraphExpr::Cycle(n) => write!(f, "cycle({n})"),
            GraphExpr::Bipartite(a, b) => write!(f, "bip({a},{b})"),
            GraphExpr::HGraph(t, n) => write!(f, "h({t},{n})"),
            GraphExpr::Join(a, b) => write!(f, "join({a},{b})"),
            GraphExpr::Union(a, b) => write!(f, "union({a},{b})"),
            GraphExpr::Rep(k, e) => write!(f, "rep({k},{e})"),
            GraphExpr::Complement(e) => write!(f, "comp({e})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Expr { msg: msg.into(), offset: self.pos })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => self.err(format!("expected '{}', found '{}'", c as char, got as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a constructor name");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .to_string())
    }

    fn integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        match text.parse::<u32>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err(format!("integer '{text}' out of range"))
            }
        }
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        let name_pos = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?;
        self.expect(b'(')?;
        let node = match name.as_str() {
            "kn" | "e" | "star" | "path" | "cycle" => {
                let k = self.integer()?;
                match name.as_str() {
                    "kn" => GraphExpr::Complete(k),
                    "e" => GraphExpr::Empty(k),
                    "star" => GraphExpr::Star(k),
                    "path" => GraphExpr::Path(k),
                    _ => GraphExpr::Cycle(k),
                }
            }
            "bip" | "h" => {
                let a = self.integer()?;
                self.expect(b',')?;
                let b = self.integer()?;
                if name == "bip" {
                    GraphExpr::Bipartite(a, b)
                } else {
                    GraphExpr::HGraph(a, b)
                }
            }
            "rep" => {
                let k = self.integer()?;
                self.expect(b',')?;
                let e = self.expr()?;
                GraphExpr::Rep(k, Box::new(e))
            }
            "join" | "union" => {
                let a = self.expr()?;
                if self.peek() == Some(b')') {
                    return self.err(format!("'{name}' takes 2 arguments, found 1"));
                }
                self.expect(b',')?;
                let b = self.expr()?;
                if name == "join" {
                    GraphExpr::Join(Box::new(a), Box::new(b))
                } else {
                    GraphExpr::Union(Box::new(a), Box::new(b))
                }
            }
            "comp" => GraphExpr::Complement(Box::new(self.expr()?)),
            other => {
                self.pos = name_pos;
                return self.err(format!("unknown constructor '{other}'"));
            }
        };
        self.expect(b')')?;
        Ok(node)
    }
}

/// Parse a DSL expression to its syntax tree.
pub fn parse_expr(text: &str) -> Result<GraphExpr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input after expression");
    }
    Ok(e)
}

/// Parse and build in one step.
pub fn graph_from_expr(text: &str) -> Result<Graph> {
    parse_expr(text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn builds_named_graphs() {
        let g = graph_from_expr("join(kn(3), bip(2,5))").unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 3 + 10 + 3 * 7));

        let g = graph_from_expr("join(kn(4), e(4))").unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 22));

        let g = graph_from_expr("rep(5, e(1))").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 0));

        let g = graph_from_expr(" comp ( cycle ( 5 ) ) ").unwrap();
        assert!(is_isomorphic(&g, &graph_from_expr("cycle(5)").unwrap()).unwrap());
    }

    #[test]
    fn arity_and_syntax_errors() {
        match parse_expr("join(kn(3), union(bip(2,5)))") {
            Err(Error::Expr { msg, .. }) => assert!(msg.contains("2 arguments")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_expr("kn()"), Err(Error::Expr { .. })));
        assert!(matches!(parse_expr("foo(3)"), Err(Error::Expr { .. })));
        assert!(matches!(parse_expr("kn(3) junk"), Err(Error::Expr { .. })));
        assert!(matches!(parse_expr("kn(3"), Err(Error::Expr { .. })));
        // range violations surface at build time
        assert!(graph_from_expr("kn(0)").is_err());
        assert!(graph_from_expr("e(0)").is_err());
        assert!(graph_from_expr("cycle(2)").is_err());
        assert!(graph_from_expr("h(2,3)").is_err());
    }

    #[test]
    fn display_roundtrip() {
        for text in [
            "join(kn(3),union(kn(3),e(2)))",
            "rep(3,comp(path(4)))",
            "h(2,4)",
            "star(5)",
        ] {
            let ast = parse_expr(text).unwrap();
            let printed = ast.to_string();
            assert_eq!(parse_expr(&printed).unwrap(), ast);
            assert_eq!(printed, text);
        }
    }
}
