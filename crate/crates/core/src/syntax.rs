//! Parsers for the term and arrow grammars.
//!
//! Terms:
//!
//! ```text
//! O:  t := ident | I | ( t o[nat] t )
//! Oe: t := ident | I | ( t o[nword] t )
//! Ou: t := nword*ident | nword*I | ( t o t )
//! ```
//!
//! Insertion chains without parentheses associate to the left, so the
//! outermost parentheses may be omitted. Whitespace is insignificant.
//!
//! Arrows are built from `1[t]`, `beta[..]`, `ibeta[..]`, `theta[..]`,
//! `mu[t, a]`, `imu[t, a]`, `lam[t]`, `ilam[t]`, composition `v . u` and
//! insertion `(v o u)` (`(v o[a] u)` in the nominal calculus). Nominal basic
//! arrows take paired indices, e.g. `theta[h, b, g, a, f]`.

use crate::addresses::NWord;
use crate::error::{Error, Result};
use crate::terms::{is_ident, Flavor, RawTerm};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Dot,
    Star,
    Word(String),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<(Vec<Token>, (usize, usize))> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let simple = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            '.' => Some(Tok::Dot),
            '*' => Some(Tok::Star),
            _ => None,
        };
        if let Some(tok) = simple {
            chars.next();
            column += 1;
            out.push(Token {
                tok,
                line: l,
                column: col,
            });
        } else if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                    word.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            out.push(Token {
                tok: Tok::Word(word),
                line: l,
                column: col,
            });
        } else {
            return Err(Error::Syntax {
                line: l,
                column: col,
                expected: vec!["a term or arrow token".to_string()],
            });
        }
    }
    Ok((out, (line, column)))
}

/// Unvalidated arrow syntax tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawArrow {
    Id(RawTerm),
    /// `beta`, `ibeta` or `theta` with their index terms.
    Basic(BasicKind, Vec<RawIndex>),
    Mu(RawTerm, NWord),
    MuInv(RawTerm, NWord),
    Lambda(RawTerm),
    LambdaInv(RawTerm),
    Comp(Box<RawArrow>, Box<RawArrow>),
    Ins(Box<RawArrow>, Box<RawArrow>),
    InsAt(Box<RawArrow>, NWord, Box<RawArrow>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Beta,
    BetaInv,
    Theta,
}

/// An argument of a basic arrow: a term, or an address in nominal index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawIndex {
    Term(RawTerm),
    Word(NWord),
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
    flavor: Flavor,
}

impl Parser {
    fn new(text: &str, flavor: Flavor) -> Result<Self> {
        let (toks, end) = lex(text)?;
        Ok(Parser {
            toks,
            pos: 0,
            end,
            flavor,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.tok)
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        let (line, column) = match self.toks.get(self.pos) {
            Some(t) => (t.line, t.column),
            None => self.end,
        };
        Err(Error::Syntax {
            line,
            column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Word(x)) if x == w)
    }

    fn word(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => self.fail(&[what]),
        }
    }

    fn nword(&mut self) -> Result<NWord> {
        let save = self.pos;
        let w = self.word("an address")?;
        w.parse().or_else(|_| {
            self.pos = save;
            self.fail(&["an address"])
        })
    }

    fn nat(&mut self) -> Result<usize> {
        let save = self.pos;
        let w = self.word("a natural number")?;
        w.parse().or_else(|_| {
            self.pos = save;
            self.fail(&["a natural number"])
        })
    }

    fn ident(&mut self) -> Result<String> {
        let save = self.pos;
        let w = self.word("a generator name")?;
        if is_ident(&w) {
            Ok(w)
        } else {
            self.pos = save;
            self.fail(&["a generator name"])
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            self.fail(&["end of input"])
        }
    }

    /// Parses the insertion operator following a left operand, if present.
    fn term_op(&mut self) -> Result<Option<TermOp>> {
        if !self.is_word("o") {
            return Ok(None);
        }
        self.pos += 1;
        match self.flavor {
            Flavor::Ou => Ok(Some(TermOp::Plain)),
            Flavor::O => {
                self.expect(Tok::LBrack, "`[`")?;
                let n = self.nat()?;
                self.expect(Tok::RBrack, "`]`")?;
                Ok(Some(TermOp::Num(n)))
            }
            Flavor::Oe => {
                self.expect(Tok::LBrack, "`[`")?;
                let a = self.nword()?;
                self.expect(Tok::RBrack, "`]`")?;
                Ok(Some(TermOp::Addr(a)))
            }
        }
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut acc = self.term_primary()?;
        while let Some(op) = self.term_op()? {
            let rhs = self.term_primary()?;
            acc = op.apply(acc, rhs);
        }
        Ok(acc)
    }

    fn term_primary(&mut self) -> Result<RawTerm> {
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let t = self.term()?;
            self.expect(Tok::RParen, "`)` or `o`")?;
            return Ok(t);
        }
        match self.flavor {
            Flavor::Ou => {
                let a = self
                    .nword()
                    .or_else(|_| self.fail(&["`(`", "an address"]))?;
                self.expect(Tok::Star, "`*`")?;
                if self.is_word("I") {
                    self.pos += 1;
                    Ok(RawTerm::AddrUnit(a))
                } else {
                    Ok(RawTerm::AddrGen(a, self.ident()?))
                }
            }
            _ => {
                if self.is_word("I") {
                    self.pos += 1;
                    Ok(RawTerm::Unit)
                } else {
                    self.ident()
                        .map(RawTerm::Gen)
                        .or_else(|_| self.fail(&["`(`", "`I`", "a generator name"]))
                }
            }
        }
    }

    fn arrow(&mut self) -> Result<RawArrow> {
        let mut acc = self.arrow_primary()?;
        while self.peek() == Some(&Tok::Dot) {
            self.pos += 1;
            let rhs = self.arrow_primary()?;
            acc = RawArrow::Comp(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn arrow_primary(&mut self) -> Result<RawArrow> {
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let v = self.arrow()?;
            if self.is_word("o") {
                self.pos += 1;
                let node = if self.flavor == Flavor::Oe {
                    self.expect(Tok::LBrack, "`[`")?;
                    let a = self.nword()?;
                    self.expect(Tok::RBrack, "`]`")?;
                    let u = self.arrow()?;
                    RawArrow::InsAt(Box::new(v), a, Box::new(u))
                } else {
                    let u = self.arrow()?;
                    RawArrow::Ins(Box::new(v), Box::new(u))
                };
                self.expect(Tok::RParen, "`)`")?;
                return Ok(node);
            }
            self.expect(Tok::RParen, "`)`, `.` or `o`")?;
            return Ok(v);
        }
        const HEADS: [&str; 9] = [
            "`(`", "`1`", "`beta`", "`ibeta`", "`theta`", "`mu`", "`imu`", "`lam`", "`ilam`",
        ];
        let head = match self.peek() {
            Some(Tok::Word(w)) if self.peek_at(1) == Some(&Tok::LBrack) => w.clone(),
            _ => return self.fail(&HEADS),
        };
        let kind = match head.as_str() {
            "beta" => Some(BasicKind::Beta),
            "ibeta" => Some(BasicKind::BetaInv),
            "theta" => Some(BasicKind::Theta),
            "1" | "mu" | "imu" | "lam" | "ilam" => None,
            _ => return self.fail(&HEADS),
        };
        self.pos += 2;
        let node = if let Some(kind) = kind {
            let mut idx = vec![RawIndex::Term(self.term()?)];
            let pairs = self.flavor == Flavor::Oe;
            for _ in 0..2 {
                self.expect(Tok::Comma, "`,`")?;
                if pairs {
                    idx.push(RawIndex::Word(self.nword()?));
                    self.expect(Tok::Comma, "`,`")?;
                }
                idx.push(RawIndex::Term(self.term()?));
            }
            RawArrow::Basic(kind, idx)
        } else {
            let t = self.term()?;
            match head.as_str() {
                "1" => RawArrow::Id(t),
                "lam" => RawArrow::Lambda(t),
                "ilam" => RawArrow::LambdaInv(t),
                _ => {
                    self.expect(Tok::Comma, "`,`")?;
                    let a = self.nword()?;
                    if head == "mu" {
                        RawArrow::Mu(t, a)
                    } else {
                        RawArrow::MuInv(t, a)
                    }
                }
            }
        };
        self.expect(Tok::RBrack, "`]`")?;
        Ok(node)
    }
}

enum TermOp {
    Plain,
    Num(usize),
    Addr(NWord),
}

impl TermOp {
    fn apply(self, g: RawTerm, f: RawTerm) -> RawTerm {
        let (g, f) = (Box::new(g), Box::new(f));
        match self {
            TermOp::Plain => RawTerm::Ins(g, f),
            TermOp::Num(n) => RawTerm::InsAt(g, n, f),
            TermOp::Addr(a) => RawTerm::InsAtWord(g, a, f),
        }
    }
}

/// Parses a term of the given flavor into an unvalidated tree.
pub fn parse_raw_term(text: &str, flavor: Flavor) -> Result<RawTerm> {
    let mut p = Parser::new(text, flavor)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parses an arrow whose index terms are of the given flavor
/// (`Ou` for the diversified calculus, `Oe` for the nominal one).
pub fn parse_raw_arrow(text: &str, flavor: Flavor) -> Result<RawArrow> {
    if flavor == Flavor::O {
        return Err(Error::FlavorMismatch(
            "arrow terms are written over Ou or Oe terms".to_string(),
        ));
    }
    let mut p = Parser::new(text, flavor)?;
    let a = p.arrow()?;
    p.finish()?;
    Ok(a)
}
