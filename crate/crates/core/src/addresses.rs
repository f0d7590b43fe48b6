//! Tree addresses: words over the positive integers, and nominal arities
//! (finite prefix-free sets of such words) with their insertion calculus.
//!
//! Words are written as digit groups joined by `-` (`1-2-11`), with `e` for
//! the empty word. Arities are written `{w1,w2,...}` in canonical order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers, the address of a tree vertex.
///
/// The derived order is the canonical (length, then digitwise) order used
/// for iteration and serialization. It is *not* the lexicographic order of
/// [`lex_compare`].
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct NWord(Vec<u32>);

impl NWord {
    /// The empty word `e`.
    pub fn empty() -> Self {
        NWord(Vec::new())
    }

    pub fn new(digits: Vec<u32>) -> Result<Self> {
        if digits.contains(&0) {
            return Err(Error::OutOfDomain(
                "address digits must be positive".to_string(),
            ));
        }
        Ok(NWord(digits))
    }

    /// Single-digit word.
    pub fn digit(n: u32) -> Self {
        assert!(n > 0, "address digits must be positive");
        NWord(vec![n])
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &NWord) -> NWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        NWord(v)
    }

    pub fn child(&self, n: u32) -> NWord {
        assert!(n > 0, "address digits must be positive");
        let mut v = self.0.clone();
        v.push(n);
        NWord(v)
    }

    /// True when `self` is an initial segment (not necessarily proper) of `other`.
    pub fn is_initial_segment_of(&self, other: &NWord) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Proper initial segments, from `e` up to the parent.
    pub fn proper_prefixes(&self) -> impl Iterator<Item = NWord> + '_ {
        (0..self.0.len()).map(move |k| NWord(self.0[..k].to_vec()))
    }
}

impl PartialOrd for NWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for NWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NWord({self})")
    }
}

impl FromStr for NWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(NWord::empty());
        }
        let bad = || Error::OutOfDomain(format!("`{s}` is not an address"));
        let digits = s
            .split('-')
            .map(|part| part.parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        NWord::new(digits).map_err(|_| bad())
    }
}

impl From<NWord> for String {
    fn from(w: NWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for NWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Removes the initial segment `prefix` from `word` (`a\ab = b`).
pub fn strip(prefix: &NWord, word: &NWord) -> Result<NWord> {
    if prefix.is_initial_segment_of(word) {
        Ok(NWord(word.0[prefix.0.len()..].to_vec()))
    } else {
        Err(Error::NotAPrefix {
            prefix: prefix.clone(),
            word: word.clone(),
        })
    }
}

/// Verdict of the lexicographic comparison of two addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexOrder {
    Less,
    Greater,
    /// Equal words, or one is an initial segment of the other.
    IncomparableOrEqual,
}

/// Lexicographic comparison, defined only where the two words diverge.
pub fn lex_compare(a1: &NWord, a2: &NWord) -> LexOrder {
    for (x, y) in a1.0.iter().zip(&a2.0) {
        match x.cmp(y) {
            Ordering::Less => return LexOrder::Less,
            Ordering::Greater => return LexOrder::Greater,
            Ordering::Equal => {}
        }
    }
    LexOrder::IncomparableOrEqual
}

/// A finite prefix-free set of addresses.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct NominalArity(BTreeSet<NWord>);

/// True iff no member is a proper initial segment of another.
pub fn is_nominal_arity<'a>(words: impl IntoIterator<Item = &'a NWord>) -> bool {
    find_prefix_pair(&words.into_iter().cloned().collect()).is_none()
}

fn find_prefix_pair(words: &BTreeSet<NWord>) -> Option<(NWord, NWord)> {
    // In digitwise order every word between `a` and an extension `ab` also
    // extends `a`, so adjacent pairs suffice.
    let mut sorted: Vec<&NWord> = words.iter().collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    let mut last: Option<&NWord> = None;
    for w in sorted {
        if let Some(p) = last {
            if p.is_initial_segment_of(w) && p != w {
                return Some((p.clone(), w.clone()));
            }
        }
        last = Some(w);
    }
    None
}

impl NominalArity {
    pub fn new(words: impl IntoIterator<Item = NWord>) -> Result<Self> {
        let set: BTreeSet<NWord> = words.into_iter().collect();
        if let Some((shorter, longer)) = find_prefix_pair(&set) {
            return Err(Error::NotPrefixFree { shorter, longer });
        }
        Ok(NominalArity(set))
    }

    pub fn empty() -> Self {
        NominalArity(BTreeSet::new())
    }

    pub fn singleton(a: NWord) -> Self {
        NominalArity(std::iter::once(a).collect())
    }

    /// `n̄ = {1, ..., n}`, with `0̄ = ∅`.
    pub fn nbar(n: u32) -> Self {
        NominalArity((1..=n).map(NWord::digit).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: &NWord) -> bool {
        self.0.contains(a)
    }

    /// Members in canonical (length, digitwise) order.
    pub fn iter(&self) -> impl Iterator<Item = &NWord> {
        self.0.iter()
    }

    /// Members in lexicographic order, which is the rank order of [`k_index`].
    pub fn lex_sorted(&self) -> Vec<&NWord> {
        let mut v: Vec<&NWord> = self.0.iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

impl fmt::Display for NominalArity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for NominalArity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NominalArity({self})")
    }
}

impl FromStr for NominalArity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::OutOfDomain(format!("`{s}` is not an arity")))?;
        if inner.trim().is_empty() {
            return Ok(NominalArity::empty());
        }
        NominalArity::new(
            inner
                .split(',')
                .map(str::parse)
                .collect::<Result<Vec<NWord>>>()?,
        )
    }
}

impl From<NominalArity> for String {
    fn from(x: NominalArity) -> String {
        x.to_string()
    }
}

impl TryFrom<String> for NominalArity {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// `a` is a prefix of `x` when every member of `x` extends `a`.
/// Vacuously true for the empty arity.
pub fn is_prefix_of_arity(a: &NWord, x: &NominalArity) -> bool {
    x.iter().all(|c| a.is_initial_segment_of(c))
}

/// `a·X = {ab | b ∈ X}`.
pub fn scale(a: &NWord, x: &NominalArity) -> NominalArity {
    NominalArity(x.iter().map(|b| a.concat(b)).collect())
}

/// `Y ∘_a X = (Y − {a}) ∪ X`, legitimate when `a ∈ Y` and `a` is a prefix of `X`.
pub fn arity_insert(y: &NominalArity, a: &NWord, x: &NominalArity) -> Result<NominalArity> {
    if !y.contains(a) {
        return Err(Error::IllegitimateInsertion {
            path: Vec::new(),
            reason: format!("{a} is not a member of {y}"),
        });
    }
    if !is_prefix_of_arity(a, x) {
        return Err(Error::IllegitimateInsertion {
            path: Vec::new(),
            reason: format!("{a} is not a prefix of {x}"),
        });
    }
    let mut out = y.0.clone();
    out.remove(a);
    out.extend(x.iter().cloned());
    Ok(NominalArity(out))
}

/// Rank of `a` in `x` under the lexicographic order, starting at 1.
pub fn k_index(x: &NominalArity, a: &NWord) -> Result<usize> {
    if !x.contains(a) {
        return Err(Error::OutOfDomain(format!("{a} is not a member of {x}")));
    }
    Ok(x.iter()
        .filter(|b| lex_compare(b, a) == LexOrder::Less)
        .count()
        + 1)
}

/// Inverse of [`k_index`]: the member of rank `n`.
pub fn k_inverse(x: &NominalArity, n: usize) -> Result<NWord> {
    if n == 0 || n > x.len() {
        return Err(Error::OutOfDomain(format!(
            "rank {n} outside 1..={} for {x}",
            x.len()
        )));
    }
    Ok(x.lex_sorted()[n - 1].clone())
}
