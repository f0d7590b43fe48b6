//! Terms of the three operad calculi: numeric insertion (`O`), nominal
//! insertion (`Oe`) and diversified, addressed insertion (`Ou`), each with an
//! optional non-unitary restriction.
//!
//! Terms are validated when built: every insertion node is legitimate, and
//! the signature (`α`, `s`, or `(s, t)`) is cached on the node.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::addresses::{arity_insert, scale, strip, NWord, NominalArity};
use crate::error::{Error, Result, TreePath};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Numeric arities, insertion `∘_n`.
    O,
    /// Nominal arities, insertion `∘_a`.
    Oe,
    /// Addressed generators, insertion `∘` driven by `s` and `t`.
    Ou,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::O => "O",
            Flavor::Oe => "Oe",
            Flavor::Ou => "Ou",
        })
    }
}

/// A primitive operation symbol with its arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub name: Arc<str>,
    pub arity: u32,
}

impl Generator {
    pub fn new(name: &str, arity: u32) -> Self {
        Generator {
            name: Arc::from(name),
            arity,
        }
    }

    /// Source arity of the generator placed at address `a`.
    pub fn source_at(&self, a: &NWord) -> NominalArity {
        if self.arity == 1 {
            NominalArity::singleton(a.clone())
        } else {
            scale(a, &NominalArity::nbar(self.arity))
        }
    }
}

pub(crate) fn is_ident(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "I"
        && name != "o"
}

/// Generator names with their arities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorSignature {
    entries: BTreeMap<String, u32>,
}

impl GeneratorSignature {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, arity: u32) -> Self {
        self.insert(name, arity).expect("valid generator");
        self
    }

    pub fn insert(&mut self, name: &str, arity: u32) -> Result<()> {
        if !is_ident(name) {
            return Err(Error::InvalidSignature(format!(
                "`{name}` is not a valid generator name"
            )));
        }
        if self.entries.insert(name.to_string(), arity).is_some() {
            return Err(Error::InvalidSignature(format!(
                "generator `{name}` declared twice"
            )));
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<Generator> {
        self.entries
            .get(name)
            .map(|&arity| Generator::new(name, arity))
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.entries.iter().map(|(n, &a)| Generator::new(n, a))
    }

    /// Parses one `ident nat` pair per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut sig = GeneratorSignature::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(name), Some(arity), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::InvalidSignature(format!(
                    "line {}: expected `name arity`",
                    lineno + 1
                )));
            };
            let arity = arity.parse::<u32>().map_err(|_| {
                Error::InvalidSignature(format!("line {}: bad arity `{arity}`", lineno + 1))
            })?;
            sig.insert(name, arity)?;
        }
        Ok(sig)
    }
}

/// Cached signature of a term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Signature {
    Arity(usize),
    Source(NominalArity),
    SourceTarget(NominalArity, NWord),
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Signature::Arity(n) => write!(f, "alpha = {n}"),
            Signature::Source(s) => write!(f, "s = {s}"),
            Signature::SourceTarget(s, t) => write!(f, "s = {s}, t = {t}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermNode {
    /// `x` (O, Oe).
    Gen(Generator),
    /// `Ι` (O, Oe).
    Unit,
    /// `a·x` (Ou).
    AddrGen(NWord, Generator),
    /// `a·Ι` (Ou).
    AddrUnit(NWord),
    /// `g ∘ f` (Ou).
    Ins(Term, Term),
    /// `γ ∘_n φ` (O).
    InsAt(Term, usize, Term),
    /// `g ∘_a f` (Oe).
    InsAtWord(Term, NWord, Term),
}

/// A validated term with its cached signature.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    flavor: Flavor,
    unitary: bool,
    node: Arc<TermNode>,
    sig: Signature,
}

fn illegit(reason: String) -> Error {
    Error::IllegitimateInsertion {
        path: Vec::new(),
        reason,
    }
}

fn prepend_path(err: Error, step: u8) -> Error {
    match err {
        Error::IllegitimateInsertion { mut path, reason } => {
            path.insert(0, step);
            Error::IllegitimateInsertion { path, reason }
        }
        other => other,
    }
}

impl Term {
    fn check_pair(g: &Term, f: &Term, flavor: Flavor) -> Result<()> {
        if g.flavor != flavor || f.flavor != flavor {
            return Err(Error::FlavorMismatch(format!(
                "cannot combine {} and {} terms with a {flavor} insertion",
                g.flavor, f.flavor
            )));
        }
        if g.unitary != f.unitary {
            return Err(Error::FlavorMismatch(
                "cannot combine unitary and non-unitary terms".to_string(),
            ));
        }
        Ok(())
    }

    /// Generator leaf `x` of `O` or `Oe`.
    pub fn generator(flavor: Flavor, unitary: bool, gen: &Generator) -> Result<Term> {
        let sig = match flavor {
            Flavor::O => Signature::Arity(gen.arity as usize),
            Flavor::Oe => Signature::Source(gen.source_at(&NWord::empty())),
            Flavor::Ou => {
                return Err(Error::FlavorMismatch(
                    "Ou generator leaves carry an address".to_string(),
                ))
            }
        };
        Ok(Term {
            flavor,
            unitary,
            node: Arc::new(TermNode::Gen(gen.clone())),
            sig,
        })
    }

    /// Unit leaf `Ι` of unitary `O` or `Oe`.
    pub fn unit(flavor: Flavor) -> Result<Term> {
        let sig = match flavor {
            Flavor::O => Signature::Arity(1),
            Flavor::Oe => Signature::Source(NominalArity::singleton(NWord::empty())),
            Flavor::Ou => {
                return Err(Error::FlavorMismatch(
                    "Ou unit leaves carry an address".to_string(),
                ))
            }
        };
        Ok(Term {
            flavor,
            unitary: true,
            node: Arc::new(TermNode::Unit),
            sig,
        })
    }

    /// Addressed generator `a·x` of `Ou`.
    pub fn addr_gen(unitary: bool, a: NWord, gen: &Generator) -> Term {
        let s = gen.source_at(&a);
        Term {
            flavor: Flavor::Ou,
            unitary,
            sig: Signature::SourceTarget(s, a.clone()),
            node: Arc::new(TermNode::AddrGen(a, gen.clone())),
        }
    }

    /// Addressed unit `a·Ι` of unitary `Ou`.
    pub fn addr_unit(a: NWord) -> Term {
        Term {
            flavor: Flavor::Ou,
            unitary: true,
            sig: Signature::SourceTarget(NominalArity::singleton(a.clone()), a.clone()),
            node: Arc::new(TermNode::AddrUnit(a)),
        }
    }

    /// `g ∘ f` in `Ou`, legitimate when `t(f) ∈ s(g)`.
    pub fn insert(g: &Term, f: &Term) -> Result<Term> {
        Term::check_pair(g, f, Flavor::Ou)?;
        let (sg, tg) = g.source_target();
        let (sf, tf) = f.source_target();
        if !sg.contains(tf) {
            return Err(illegit(format!("t = {tf} is not a member of s = {sg}")));
        }
        let s = arity_insert(sg, tf, sf)?;
        Ok(Term {
            flavor: Flavor::Ou,
            unitary: g.unitary,
            sig: Signature::SourceTarget(s, tg.clone()),
            node: Arc::new(TermNode::Ins(g.clone(), f.clone())),
        })
    }

    /// `γ ∘_n φ` in `O`, legitimate when `1 ≤ n ≤ α(γ)`.
    pub fn insert_at(g: &Term, n: usize, f: &Term) -> Result<Term> {
        Term::check_pair(g, f, Flavor::O)?;
        let ag = g.arity();
        if n == 0 || n > ag {
            return Err(illegit(format!("index {n} outside 1..={ag}")));
        }
        Ok(Term {
            flavor: Flavor::O,
            unitary: g.unitary,
            sig: Signature::Arity(ag - 1 + f.arity()),
            node: Arc::new(TermNode::InsAt(g.clone(), n, f.clone())),
        })
    }

    /// `g ∘_a f` in `Oe`, legitimate when `a ∈ s(g)`.
    pub fn insert_at_word(g: &Term, a: &NWord, f: &Term) -> Result<Term> {
        Term::check_pair(g, f, Flavor::Oe)?;
        let sg = g.source();
        if !sg.contains(a) {
            return Err(illegit(format!("{a} is not a member of s = {sg}")));
        }
        let s = arity_insert(sg, a, &scale(a, f.source()))?;
        Ok(Term {
            flavor: Flavor::Oe,
            unitary: g.unitary,
            sig: Signature::Source(s),
            node: Arc::new(TermNode::InsAtWord(g.clone(), a.clone(), f.clone())),
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    pub fn node(&self) -> &TermNode {
        &self.node
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    /// `α` of an `O` term.
    ///
    /// Panics on other flavors.
    pub fn arity(&self) -> usize {
        match &self.sig {
            Signature::Arity(n) => *n,
            _ => panic!("arity of a {} term", self.flavor),
        }
    }

    /// `s` of an `Oe` or `Ou` term.
    ///
    /// Panics on `O` terms.
    pub fn source(&self) -> &NominalArity {
        match &self.sig {
            Signature::Source(s) | Signature::SourceTarget(s, _) => s,
            Signature::Arity(_) => panic!("nominal arity of an O term"),
        }
    }

    /// `t` of an `Ou` term.
    ///
    /// Panics on other flavors.
    pub fn target(&self) -> &NWord {
        match &self.sig {
            Signature::SourceTarget(_, t) => t,
            _ => panic!("target address of a {} term", self.flavor),
        }
    }

    pub fn source_target(&self) -> (&NominalArity, &NWord) {
        (self.source(), self.target())
    }

    /// Operands of an insertion node, `(g, f)` for `g ∘ f`.
    pub fn operands(&self) -> Option<(&Term, &Term)> {
        match &*self.node {
            TermNode::Ins(g, f) | TermNode::InsAt(g, _, f) | TermNode::InsAtWord(g, _, f) => {
                Some((g, f))
            }
            _ => None,
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.operands().is_none()
    }

    pub fn is_unit_leaf(&self) -> bool {
        matches!(&*self.node, TermNode::Unit | TermNode::AddrUnit(_))
    }

    /// Number of leaves (generator and unit occurrences).
    pub fn size(&self) -> usize {
        match self.operands() {
            Some((g, f)) => g.size() + f.size(),
            None => 1,
        }
    }

    pub fn contains_unit(&self) -> bool {
        match self.operands() {
            Some((g, f)) => g.contains_unit() || f.contains_unit(),
            None => self.is_unit_leaf(),
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<Term> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Term>) {
        match self.operands() {
            Some((g, f)) => {
                g.collect_leaves(out);
                f.collect_leaves(out);
            }
            None => out.push(self.clone()),
        }
    }

    /// Rebuilds the same kind of insertion node over new operands.
    pub fn rebuild(&self, g: &Term, f: &Term) -> Result<Term> {
        match &*self.node {
            TermNode::Ins(..) => Term::insert(g, f),
            TermNode::InsAt(_, n, _) => Term::insert_at(g, *n, f),
            TermNode::InsAtWord(_, a, _) => Term::insert_at_word(g, a, f),
            _ => Err(Error::OutOfDomain("a leaf has no operands".to_string())),
        }
    }

    pub fn subterm(&self, path: &[u8]) -> Option<&Term> {
        match path.split_first() {
            None => Some(self),
            Some((step, rest)) => {
                let (g, f) = self.operands()?;
                if *step == 0 { g } else { f }.subterm(rest)
            }
        }
    }

    /// Replaces the subterm at `path`, revalidating the spine.
    pub fn replace(&self, path: &[u8], new: &Term) -> Result<Term> {
        match path.split_first() {
            None => Ok(new.clone()),
            Some((step, rest)) => {
                let (g, f) = self
                    .operands()
                    .ok_or_else(|| Error::OutOfDomain("path leaves the term".to_string()))?;
                if *step == 0 {
                    self.rebuild(&g.replace(rest, new)?, f)
                } else {
                    self.rebuild(g, &f.replace(rest, new)?)
                }
            }
        }
    }

    /// Paths of all subterms, in pre-order.
    pub fn positions(&self) -> Vec<TreePath> {
        let mut out = Vec::new();
        self.collect_positions(&mut Vec::new(), &mut out);
        out
    }

    fn collect_positions(&self, here: &mut TreePath, out: &mut Vec<TreePath>) {
        out.push(here.clone());
        if let Some((g, f)) = self.operands() {
            here.push(0);
            g.collect_positions(here, out);
            here.pop();
            here.push(1);
            f.collect_positions(here, out);
            here.pop();
        }
    }

    /// Same term viewed as a non-unitary term, if it contains no unit.
    pub fn to_non_unitary(&self) -> Option<Term> {
        if self.contains_unit() {
            return None;
        }
        Some(self.with_unitary(false))
    }

    /// Same term with the unitarity flag changed; units must be absent when clearing it.
    pub(crate) fn with_unitary(&self, unitary: bool) -> Term {
        let node = match &*self.node {
            TermNode::Ins(g, f) => TermNode::Ins(g.with_unitary(unitary), f.with_unitary(unitary)),
            TermNode::InsAt(g, n, f) => {
                TermNode::InsAt(g.with_unitary(unitary), *n, f.with_unitary(unitary))
            }
            TermNode::InsAtWord(g, a, f) => {
                TermNode::InsAtWord(g.with_unitary(unitary), a.clone(), f.with_unitary(unitary))
            }
            leaf => leaf.clone(),
        };
        Term {
            flavor: self.flavor,
            unitary,
            node: Arc::new(node),
            sig: self.sig.clone(),
        }
    }

    /// Recomputes the signature bottom-up, ignoring every cache.
    pub fn recompute_signature(&self) -> Signature {
        match (&*self.node, self.flavor) {
            (TermNode::Gen(x), Flavor::O) => Signature::Arity(x.arity as usize),
            (TermNode::Gen(x), _) => Signature::Source(x.source_at(&NWord::empty())),
            (TermNode::Unit, Flavor::O) => Signature::Arity(1),
            (TermNode::Unit, _) => Signature::Source(NominalArity::singleton(NWord::empty())),
            (TermNode::AddrGen(a, x), _) => Signature::SourceTarget(x.source_at(a), a.clone()),
            (TermNode::AddrUnit(a), _) => {
                Signature::SourceTarget(NominalArity::singleton(a.clone()), a.clone())
            }
            (TermNode::InsAt(g, _, f), _) => {
                let (Signature::Arity(ag), Signature::Arity(af)) =
                    (g.recompute_signature(), f.recompute_signature())
                else {
                    unreachable!("O operands")
                };
                Signature::Arity(ag - 1 + af)
            }
            (TermNode::InsAtWord(g, a, f), _) => {
                let (Signature::Source(sg), Signature::Source(sf)) =
                    (g.recompute_signature(), f.recompute_signature())
                else {
                    unreachable!("Oe operands")
                };
                Signature::Source(arity_insert(&sg, a, &scale(a, &sf)).expect("legitimate node"))
            }
            (TermNode::Ins(g, f), _) => {
                let (Signature::SourceTarget(sg, tg), Signature::SourceTarget(sf, tf)) =
                    (g.recompute_signature(), f.recompute_signature())
                else {
                    unreachable!("Ou operands")
                };
                Signature::SourceTarget(arity_insert(&sg, &tf, &sf).expect("legitimate node"), tg)
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.node {
            TermNode::Gen(x) => f.write_str(&x.name),
            TermNode::Unit => f.write_str("I"),
            TermNode::AddrGen(a, x) => write!(f, "{a}*{}", x.name),
            TermNode::AddrUnit(a) => write!(f, "{a}*I"),
            TermNode::Ins(g, h) => write!(f, "({g} o {h})"),
            TermNode::InsAt(g, n, h) => write!(f, "({g} o[{n}] {h})"),
            TermNode::InsAtWord(g, a, h) => write!(f, "({g} o[{a}] {h})"),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Term[{}{}]({self})",
            self.flavor,
            if self.unitary { "" } else { "-" }
        )
    }
}

/// Unvalidated syntax tree, as produced by the parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawTerm {
    Gen(String),
    Unit,
    AddrGen(NWord, String),
    AddrUnit(NWord),
    Ins(Box<RawTerm>, Box<RawTerm>),
    InsAt(Box<RawTerm>, usize, Box<RawTerm>),
    InsAtWord(Box<RawTerm>, NWord, Box<RawTerm>),
}

/// Validates a raw syntax tree into a [`Term`] of the requested flavor.
pub fn build(
    signature: &GeneratorSignature,
    flavor: Flavor,
    unitary: bool,
    raw: &RawTerm,
) -> Result<Term> {
    let wrong = |what: &str| {
        Err(Error::FlavorMismatch(format!(
            "{what} does not belong to the {flavor} grammar"
        )))
    };
    let unit_banned = || {
        Err(Error::IllegitimateInsertion {
            path: Vec::new(),
            reason: "unit leaf in a non-unitary term".to_string(),
        })
    };
    match raw {
        RawTerm::Gen(name) => match flavor {
            Flavor::Ou => wrong("an unaddressed generator"),
            _ => Term::generator(flavor, unitary, &signature.get(name)?),
        },
        RawTerm::Unit => match flavor {
            Flavor::Ou => wrong("an unaddressed unit"),
            _ if !unitary => unit_banned(),
            _ => Term::unit(flavor),
        },
        RawTerm::AddrGen(a, name) => match flavor {
            Flavor::Ou => Ok(Term::addr_gen(unitary, a.clone(), &signature.get(name)?)),
            _ => wrong("an addressed generator"),
        },
        RawTerm::AddrUnit(a) => match flavor {
            Flavor::Ou if !unitary => unit_banned(),
            Flavor::Ou => Ok(Term::addr_unit(a.clone())),
            _ => wrong("an addressed unit"),
        },
        RawTerm::Ins(g, f) | RawTerm::InsAt(g, _, f) | RawTerm::InsAtWord(g, _, f) => {
            let g = build(signature, flavor, unitary, g).map_err(|e| prepend_path(e, 0))?;
            let f = build(signature, flavor, unitary, f).map_err(|e| prepend_path(e, 1))?;
            match (raw, flavor) {
                (RawTerm::Ins(..), Flavor::Ou) => Term::insert(&g, &f),
                (RawTerm::InsAt(_, n, _), Flavor::O) => Term::insert_at(&g, *n, &f),
                (RawTerm::InsAtWord(_, a, _), Flavor::Oe) => Term::insert_at_word(&g, a, &f),
                (RawTerm::Ins(..), _) => wrong("an unindexed insertion"),
                (RawTerm::InsAt(..), _) => wrong("a numerically indexed insertion"),
                _ => wrong("an address-indexed insertion"),
            }
        }
    }
}

/// The cached signature: `α` for `O`, `s` for `Oe`, `(s, t)` for `Ou`.
pub fn signature_of(f: &Term) -> &Signature {
    f.signature()
}

fn require_ou(f: &Term) -> Result<()> {
    if f.flavor() != Flavor::Ou {
        return Err(Error::FlavorMismatch(format!(
            "expected an Ou term, got {}",
            f.flavor()
        )));
    }
    Ok(())
}

/// `a·f`: prefixes every leaf address with `a`.
pub fn scale_term(a: &NWord, f: &Term) -> Result<Term> {
    require_ou(f)?;
    Ok(scale_ou(a, f))
}

pub(crate) fn scale_ou(a: &NWord, f: &Term) -> Term {
    if a.is_empty() {
        return f.clone();
    }
    match f.node() {
        TermNode::AddrGen(b, x) => Term::addr_gen(f.unitary, a.concat(b), x),
        TermNode::AddrUnit(b) => Term::addr_unit(a.concat(b)),
        TermNode::Ins(g, h) => {
            Term::insert(&scale_ou(a, g), &scale_ou(a, h)).expect("scaling preserves legitimacy")
        }
        _ => unreachable!("Ou term"),
    }
}

/// `b\f`: removes the prefix `b` from every leaf address.
pub fn strip_term(b: &NWord, f: &Term) -> Result<Term> {
    require_ou(f)?;
    match f.node() {
        TermNode::AddrGen(c, x) => Ok(Term::addr_gen(f.unitary, strip(b, c)?, x)),
        TermNode::AddrUnit(c) => Ok(Term::addr_unit(strip(b, c)?)),
        TermNode::Ins(g, h) => Term::insert(&strip_term(b, g)?, &strip_term(b, h)?),
        _ => unreachable!("Ou term"),
    }
}
