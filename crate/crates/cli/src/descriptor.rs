//! Group descriptors:
//!
//! ```text
//! descriptor := name "(" args ")" | "paper.g1" | "paper.g2" | "paper.g3"
//! name       := "pgl2" | "psl2" | "alt" | "sym" | "frobfield" | "perm"
//! args       := integer ("," integer)*
//!             | degree ";" [cycle-list ("," cycle-list)*]      (perm only)
//! cycle-list := ("(" integer+ ")")+
//! ```
//!
//! Whitespace is allowed between tokens; points inside a cycle are
//! whitespace-separated.

use std::fmt;
use std::sync::Arc;

use pgx_core::constructions;
use pgx_core::{Group, Permutation};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descriptor {
    Pgl2(u64),
    Psl2(u64),
    Alt(usize),
    Sym(usize),
    FrobField {
        p: u32,
        k: u32,
        m: u64,
    },
    /// Generators in disjoint cycle notation, as written.
    Perm {
        degree: usize,
        generators: Vec<Vec<Vec<u32>>>,
    },
    PaperG1,
    PaperG2,
    PaperG3,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownName,
    Arity,
    Value,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::UnknownName => "unknown name",
            ParseErrorKind::Arity => "arity mismatch",
            ParseErrorKind::Value => "invalid value",
        })
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(
                ParseErrorKind::Syntax,
                format!("expected '{want}', found '{c}'"),
            )),
            None => Err(self.err(
                ParseErrorKind::Syntax,
                format!("expected '{want}', found end of input"),
            )),
        }
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self
            .peek()
            .filter(|c| c.is_ascii_alphanumeric() || *c == '.')
        {
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(ParseErrorKind::Syntax, "expected an integer"));
        }
        self.text[start..self.pos].parse().map_err(|_| ParseError {
            position: start,
            kind: ParseErrorKind::Value,
            message: "integer too large".into(),
        })
    }

    fn end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(
                ParseErrorKind::Syntax,
                format!("unexpected '{c}' after descriptor"),
            )),
        }
    }

    fn int_args(&mut self) -> Result<Vec<(usize, u64)>, ParseError> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(')') {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            out.push((self.pos, self.integer()?));
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }

    fn cycle_list(&mut self, degree: usize) -> Result<Vec<Vec<u32>>, ParseError> {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut used = vec![false; degree];
        self.skip_ws();
        if self.peek() != Some('(') {
            return Err(self.err(ParseErrorKind::Syntax, "expected '(' opening a cycle"));
        }
        while self.eat('(') {
            let mut cycle = Vec::new();
            loop {
                self.skip_ws();
                if self.peek() == Some(')') {
                    break;
                }
                let at = self.pos;
                let point = self.integer()?;
                if point == 0 || point > degree as u64 {
                    return Err(ParseError {
                        position: at,
                        kind: ParseErrorKind::Value,
                        message: format!("point {point} outside 1..={degree}"),
                    });
                }
                if std::mem::replace(&mut used[point as usize - 1], true) {
                    return Err(ParseError {
                        position: at,
                        kind: ParseErrorKind::Value,
                        message: format!("point {point} repeated; cycles must be disjoint"),
                    });
                }
                cycle.push(point as u32);
            }
            if cycle.is_empty() {
                return Err(self.err(ParseErrorKind::Syntax, "empty cycle"));
            }
            self.expect(')')?;
            cycles.push(cycle);
            self.skip_ws();
        }
        Ok(cycles)
    }
}

pub fn parse_descriptor(text: &str) -> Result<Descriptor, ParseError> {
    let mut p = Parser { text, pos: 0 };
    p.skip_ws();
    let name_at = p.pos;
    let name = p.word();
    let unknown = |name: &str| ParseError {
        position: name_at,
        kind: ParseErrorKind::UnknownName,
        message: if name.is_empty() {
            "expected a descriptor name".into()
        } else {
            format!("'{name}' is not a known group")
        },
    };
    let out = match name {
        "paper.g1" => Descriptor::PaperG1,
        "paper.g2" => Descriptor::PaperG2,
        "paper.g3" => Descriptor::PaperG3,
        "perm" => {
            p.expect('(')?;
            p.skip_ws();
            let degree = p.integer()? as usize;
            p.expect(';')?;
            let mut generators = Vec::new();
            p.skip_ws();
            if p.peek() != Some(')') {
                loop {
                    generators.push(p.cycle_list(degree)?);
                    if !p.eat(',') {
                        break;
                    }
                }
            }
            p.expect(')')?;
            Descriptor::Perm { degree, generators }
        }
        "pgl2" | "psl2" | "alt" | "sym" | "frobfield" => {
            p.expect('(')?;
            let args = p.int_args()?;
            p.expect(')')?;
            let want = if name == "frobfield" { 3 } else { 1 };
            if args.len() != want {
                return Err(ParseError {
                    position: name_at,
                    kind: ParseErrorKind::Arity,
                    message: format!("{name} takes {want} argument(s), got {}", args.len()),
                });
            }
            let narrow = |(at, v): (usize, u64)| -> Result<u32, ParseError> {
                u32::try_from(v).map_err(|_| ParseError {
                    position: at,
                    kind: ParseErrorKind::Value,
                    message: format!("{v} is too large"),
                })
            };
            match name {
                "pgl2" => Descriptor::Pgl2(args[0].1),
                "psl2" => Descriptor::Psl2(args[0].1),
                "alt" => Descriptor::Alt(narrow(args[0])? as usize),
                "sym" => Descriptor::Sym(narrow(args[0])? as usize),
                _ => Descriptor::FrobField {
                    p: narrow(args[0])?,
                    k: narrow(args[1])?,
                    m: args[2].1,
                },
            }
        }
        other => return Err(unknown(other)),
    };
    p.end()?;
    Ok(out)
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Pgl2(q) => write!(f, "pgl2({q})"),
            Descriptor::Psl2(q) => write!(f, "psl2({q})"),
            Descriptor::Alt(n) => write!(f, "alt({n})"),
            Descriptor::Sym(n) => write!(f, "sym({n})"),
            Descriptor::FrobField { p, k, m } => write!(f, "frobfield({p},{k},{m})"),
            Descriptor::PaperG1 => f.write_str("paper.g1"),
            Descriptor::PaperG2 => f.write_str("paper.g2"),
            Descriptor::PaperG3 => f.write_str("paper.g3"),
            Descriptor::Perm { degree, generators } => {
                let gens: Vec<String> = generators
                    .iter()
                    .map(|cycles| {
                        cycles
                            .iter()
                            .map(|c| {
                                let pts: Vec<String> = c.iter().map(u32::to_string).collect();
                                format!("({})", pts.join(" "))
                            })
                            .collect()
                    })
                    .collect();
                if gens.is_empty() {
                    write!(f, "perm({degree};)")
                } else {
                    write!(f, "perm({degree}; {})", gens.join(", "))
                }
            }
        }
    }
}

impl Descriptor {
    pub fn build(&self) -> pgx_core::Result<Arc<Group>> {
        match self {
            Descriptor::Pgl2(q) => constructions::pgl2(*q),
            Descriptor::Psl2(q) => constructions::psl2(*q),
            Descriptor::Alt(n) => constructions::alternating(*n),
            Descriptor::Sym(n) => constructions::symmetric(*n),
            Descriptor::FrobField { p, k, m } => constructions::frobenius_field(*p, *k, *m),
            Descriptor::PaperG1 => constructions::paper_g1(),
            Descriptor::PaperG2 => constructions::paper_g2(),
            Descriptor::PaperG3 => constructions::paper_g3(),
            Descriptor::Perm { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|cycles| Permutation::from_cycles(*degree, cycles))
                    .collect::<pgx_core::Result<Vec<_>>>()?;
                Group::permutations(self.to_string(), *degree, gens, None)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_descriptors() {
        assert_eq!(parse_descriptor("pgl2(9)").unwrap(), Descriptor::Pgl2(9));
        assert_eq!(
            parse_descriptor("  psl2( 9 ) ").unwrap(),
            Descriptor::Psl2(9)
        );
        assert_eq!(
            parse_descriptor("frobfield(3,4,80)").unwrap(),
            Descriptor::FrobField { p: 3, k: 4, m: 80 }
        );
        assert_eq!(parse_descriptor("paper.g2").unwrap(), Descriptor::PaperG2);
    }

    #[test]
    fn permutation_descriptors() {
        let d = parse_descriptor("perm(5; (1 2)(3 4), (1 3)(2 4), (1 2 3))").unwrap();
        assert_eq!(
            d,
            Descriptor::Perm {
                degree: 5,
                generators: vec![
                    vec![vec![1, 2], vec![3, 4]],
                    vec![vec![1, 3], vec![2, 4]],
                    vec![vec![1, 2, 3]],
                ],
            }
        );
        assert_eq!(d.to_string(), "perm(5; (1 2)(3 4), (1 3)(2 4), (1 2 3))");
        assert_eq!(d.build().unwrap().order().unwrap(), 12);

        let trivial = parse_descriptor("perm(1;)").unwrap();
        assert_eq!(trivial.to_string(), "perm(1;)");
        assert_eq!(trivial.build().unwrap().order().unwrap(), 1);
    }

    #[test]
    fn errors_carry_kind_and_position() {
        let e = parse_descriptor("pgl3(9)").unwrap_err();
        assert_eq!((e.kind, e.position), (ParseErrorKind::UnknownName, 0));
        let e = parse_descriptor("frobfield(3,4)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Arity);
        let e = parse_descriptor("pgl2(9").unwrap_err();
        assert_eq!((e.kind, e.position), (ParseErrorKind::Syntax, 6));
        let e = parse_descriptor("perm(3; (1 4))").unwrap_err();
        assert_eq!((e.kind, e.position), (ParseErrorKind::Value, 11));
        let e = parse_descriptor("perm(3; (1 2)(2 3))").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Value);
        let e = parse_descriptor("pgl2(9) x").unwrap_err();
        assert_eq!((e.kind, e.position), (ParseErrorKind::Syntax, 8));
        assert!(e.to_string().contains("position 8"));
    }
}
