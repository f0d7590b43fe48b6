//! Word categories presented by adjacent transpositions, with block
//! ("bracket") arrows, a terminating rewrite system to a unique normal form,
//! and the graph semantics that decides equality of arrows.
//!
//! Arrows are stored as step sequences in application order: the first step
//! acts on the source word.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Objects and generating transpositions of a word category.
pub trait GammaSet<A> {
    fn is_object(&self, word: &[A]) -> bool;

    /// Whether `A[p,q]B: ApqB → AqpB` is a generator.
    fn has_generator(&self, prefix: &[A], p: &A, q: &A, suffix: &[A]) -> bool;
}

/// Every word is an object and every adjacent transposition a generator.
#[derive(Debug, Clone, Copy, Default)]
pub struct FullSymmetric;

impl<A> GammaSet<A> for FullSymmetric {
    fn is_object(&self, _: &[A]) -> bool {
        true
    }

    fn has_generator(&self, _: &[A], _: &A, _: &A, _: &[A]) -> bool {
        true
    }
}

/// An explicit, finite set of generators over string atoms. Every word is an
/// object.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiniteGamma {
    generators: BTreeSet<(Vec<String>, String, String, Vec<String>)>,
}

impl FiniteGamma {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, prefix: &[&str], p: &str, q: &str, suffix: &[&str]) {
        self.generators.insert((
            prefix.iter().map(|s| s.to_string()).collect(),
            p.to_string(),
            q.to_string(),
            suffix.iter().map(|s| s.to_string()).collect(),
        ));
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Parses `A | p q | B` lines, `-` standing for the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let mut gamma = FiniteGamma::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |column: usize| Error::Syntax {
                line: i + 1,
                column,
                expected: vec!["`A | p q | B`".to_string()],
            };
            let parts: Vec<&str> = line.split('|').collect();
            if parts.len() != 3 {
                return Err(bad(1));
            }
            let pq: Vec<&str> = parts[1].split_whitespace().collect();
            if pq.len() != 2 {
                return Err(bad(parts[0].len() + 2));
            }
            let prefix = parse_word(parts[0]);
            let suffix = parse_word(parts[2]);
            gamma
                .generators
                .insert((prefix, pq[0].to_string(), pq[1].to_string(), suffix));
        }
        Ok(gamma)
    }
}

impl GammaSet<String> for FiniteGamma {
    fn is_object(&self, _: &[String]) -> bool {
        true
    }

    fn has_generator(&self, prefix: &[String], p: &String, q: &String, suffix: &[String]) -> bool {
        self.generators
            .contains(&(prefix.to_vec(), p.clone(), q.clone(), suffix.to_vec()))
    }
}

/// Splits a word on whitespace; `-` (or nothing) is the empty word.
pub fn parse_word(text: &str) -> Vec<String> {
    let text = text.trim();
    if text == "-" {
        return Vec::new();
    }
    text.split_whitespace().map(str::to_string).collect()
}

/// One step of an arrow: `A[r,S]B: ArSB → ASrB`. A generator is a bracket
/// with `|S| = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bracket<A> {
    pub prefix: Vec<A>,
    pub r: A,
    pub s: Vec<A>,
    pub suffix: Vec<A>,
}

impl<A: Clone + Eq> Bracket<A> {
    pub fn new(prefix: Vec<A>, r: A, s: Vec<A>, suffix: Vec<A>) -> Self {
        Bracket {
            prefix,
            r,
            s,
            suffix,
        }
    }

    pub fn source(&self) -> Vec<A> {
        let mut w = self.prefix.clone();
        w.push(self.r.clone());
        w.extend(self.s.iter().cloned());
        w.extend(self.suffix.iter().cloned());
        w
    }

    pub fn target(&self) -> Vec<A> {
        let mut w = self.prefix.clone();
        w.extend(self.s.iter().cloned());
        w.push(self.r.clone());
        w.extend(self.suffix.iter().cloned());
        w
    }

    /// Position of `r` after the step, counted from 1: `|A| + 1 + |S|`.
    pub fn end(&self) -> usize {
        self.prefix.len() + 1 + self.s.len()
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_empty()
    }

    fn len(&self) -> usize {
        self.prefix.len() + 1 + self.s.len() + self.suffix.len()
    }

    /// Single-transposition expansion `A S_<i [r, s_i] S_>i B`, in application order.
    pub fn expand(&self) -> Vec<Bracket<A>> {
        (0..self.s.len())
            .map(|i| {
                let mut prefix = self.prefix.clone();
                prefix.extend(self.s[..i].iter().cloned());
                let mut suffix = self.s[i + 1..].to_vec();
                suffix.extend(self.suffix.iter().cloned());
                Bracket::new(prefix, self.r.clone(), vec![self.s[i].clone()], suffix)
            })
            .collect()
    }

    fn apply_to(&self, positions: &mut [usize]) {
        let k = self.prefix.len();
        let n = self.s.len();
        positions[k..=k + n].rotate_left(1);
    }
}

fn join<A: fmt::Display>(w: &[A]) -> String {
    w.iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl<A: fmt::Display> fmt::Display for Bracket<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.prefix.is_empty() {
            parts.push(join(&self.prefix));
        }
        parts.push(format!("[{}, {}]", self.r, join(&self.s)));
        if !self.suffix.is_empty() {
            parts.push(join(&self.suffix));
        }
        f.write_str(&parts.join(" "))
    }
}

/// An arrow: a source word and a chain of bracket steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermArrow<A> {
    source: Vec<A>,
    steps: Vec<Bracket<A>>,
}

impl<A: Clone + Eq + fmt::Debug> PermArrow<A> {
    pub fn identity(word: Vec<A>) -> Self {
        PermArrow {
            source: word,
            steps: Vec::new(),
        }
    }

    /// `A[p,q]B`, checked against `gamma`.
    pub fn generator(
        gamma: &impl GammaSet<A>,
        prefix: Vec<A>,
        p: A,
        q: A,
        suffix: Vec<A>,
    ) -> Result<Self> {
        bracket(gamma, prefix, p, vec![q], suffix)
    }

    /// Builds an arrow from steps without consulting any generator set.
    pub fn from_steps(source: Vec<A>, steps: Vec<Bracket<A>>) -> Result<Self> {
        let mut cur = source.clone();
        for (i, st) in steps.iter().enumerate() {
            if st.source() != cur {
                return Err(Error::TypeMismatch {
                    path: Vec::new(),
                    reason: format!("step {} does not start at {:?}", i + 1, cur),
                });
            }
            cur = st.target();
        }
        Ok(PermArrow { source, steps })
    }

    pub fn source(&self) -> &[A] {
        &self.source
    }

    pub fn target(&self) -> Vec<A> {
        self.steps
            .last()
            .map(|s| s.target())
            .unwrap_or_else(|| self.source.clone())
    }

    pub fn steps(&self) -> &[Bracket<A>] {
        &self.steps
    }

    /// `next ∘ self`: first `self`, then `next`.
    pub fn then(&self, next: &PermArrow<A>) -> Result<Self> {
        if self.target() != next.source {
            return Err(Error::TypeMismatch {
                path: Vec::new(),
                reason: format!(
                    "cannot compose: target {:?} differs from source {:?}",
                    self.target(),
                    next.source
                ),
            });
        }
        let mut steps = self.steps.clone();
        steps.extend(next.steps.iter().cloned());
        Ok(PermArrow {
            source: self.source.clone(),
            steps,
        })
    }

    /// The same arrow with every bracket expanded to single transpositions.
    pub fn expanded(&self) -> Self {
        PermArrow {
            source: self.source.clone(),
            steps: self.steps.iter().flat_map(|s| s.expand()).collect(),
        }
    }
}

/// `A[r,S]B`, checked step by step against `gamma`.
pub fn bracket<A: Clone + Eq + fmt::Debug>(
    gamma: &impl GammaSet<A>,
    prefix: Vec<A>,
    r: A,
    s: Vec<A>,
    suffix: Vec<A>,
) -> Result<PermArrow<A>> {
    let b = Bracket::new(prefix, r, s, suffix);
    if !gamma.is_object(&b.source()) {
        return Err(Error::GeneratorMissing(format!(
            "identity on {:?}",
            b.source()
        )));
    }
    for g in b.expand() {
        if !gamma.has_generator(&g.prefix, &g.r, &g.s[0], &g.suffix) {
            return Err(Error::GeneratorMissing(format!(
                "{:?}[{:?}, {:?}]{:?}",
                g.prefix, g.r, g.s[0], g.suffix
            )));
        }
    }
    let source = b.source();
    let steps = if b.is_identity() { Vec::new() } else { vec![b] };
    Ok(PermArrow { source, steps })
}

/// Position bijection: `map[i]` is where the atom at source position `i` ends up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermGraph {
    pub map: Vec<usize>,
}

impl PermGraph {
    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }
}

pub fn graph<A: Clone + Eq>(u: &PermArrow<A>) -> PermGraph {
    // `at[k]` = source position of the atom currently at position `k`.
    let mut at: Vec<usize> = (0..u.source.len()).collect();
    for s in &u.steps {
        s.apply_to(&mut at);
    }
    let mut map = vec![0; at.len()];
    for (k, &i) in at.iter().enumerate() {
        map[i] = k;
    }
    PermGraph { map }
}

/// `u = v` iff they have the same type and the same graph.
pub fn perm_eq<A: Clone + Eq + fmt::Debug>(u: &PermArrow<A>, v: &PermArrow<A>) -> Result<bool> {
    if u.source != v.source || u.target() != v.target() {
        return Err(Error::TypeMismatch {
            path: Vec::new(),
            reason: "arrows of different types".to_string(),
        });
    }
    Ok(graph(u) == graph(v))
}

/// Rewriting statistics gathered while normalizing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RewriteStats {
    pub steps: usize,
    /// Rewrites after which the measure failed to decrease; always zero.
    pub measure_violations: usize,
}

/// `Σ (|C_i| + 1 + |S_i|) · i` over the steps in application order.
pub fn measure<A: Clone + Eq>(steps: &[Bracket<A>]) -> usize {
    steps
        .iter()
        .enumerate()
        .map(|(i, s)| s.end() * (i + 1))
        .sum()
}

/// Normal form: nonempty brackets whose end positions strictly decrease in
/// application order (equivalently, right contexts strictly increase).
pub fn normal_form<A: Clone + Eq + fmt::Debug>(u: &PermArrow<A>) -> PermArrow<A> {
    normal_form_with_stats(u).0
}

pub fn normal_form_with_stats<A: Clone + Eq + fmt::Debug>(
    u: &PermArrow<A>,
) -> (PermArrow<A>, RewriteStats) {
    let mut steps: Vec<Bracket<A>> = u.steps.iter().flat_map(|s| s.expand()).collect();
    let mut stats = RewriteStats::default();
    let mut m = measure(&steps);
    while let Some(next) = rewrite_once(&steps) {
        steps = next;
        stats.steps += 1;
        let m2 = measure(&steps);
        if m2 >= m {
            stats.measure_violations += 1;
        }
        m = m2;
    }
    let out = PermArrow {
        source: u.source.clone(),
        steps,
    };
    debug_assert_eq!(out.target(), u.target());
    (out, stats)
}

/// Applies the first applicable rule, scanning from the first step.
fn rewrite_once<A: Clone + Eq>(steps: &[Bracket<A>]) -> Option<Vec<Bracket<A>>> {
    if let Some(i) = steps.iter().position(|s| s.is_identity()) {
        let mut out = steps.to_vec();
        out.remove(i);
        return Some(out);
    }
    let i = (0..steps.len().saturating_sub(1)).find(|&i| steps[i].end() <= steps[i + 1].end())?;
    let (x, y) = (&steps[i], &steps[i + 1]);
    let replacement = rewrite_pair(x, y);
    let mut out = steps[..i].to_vec();
    out.extend(replacement);
    out.extend(steps[i + 2..].iter().cloned());
    Some(out)
}

/// Rewrites `y ∘ x` (first `x`) when `end(x) ≤ end(y)`.
fn rewrite_pair<A: Clone + Eq>(x: &Bracket<A>, y: &Bracket<A>) -> Vec<Bracket<A>> {
    let n = x.len();
    debug_assert_eq!(n, y.len());
    let ex = x.end();
    let a = y.prefix.len();
    // Current word (x's target): A S r B; y moves the atom at position a past Q.
    let w = x.target();
    let ey = y.end();
    if a >= ex {
        // Disjoint: y acts inside x's right context.
        let src = x.source();
        let y2 = Bracket::new(
            src[..a].to_vec(),
            y.r.clone(),
            y.s.clone(),
            src[ey..].to_vec(),
        );
        let mid = y2.target();
        let x2 = Bracket::new(
            x.prefix.clone(),
            x.r.clone(),
            x.s.clone(),
            mid[ex..].to_vec(),
        );
        return vec![y2, x2];
    }
    if a == ex - 1 {
        // y keeps moving the atom x just moved: merge.
        let mut s = x.s.clone();
        s.extend(y.s.iter().cloned());
        return vec![Bracket::new(
            x.prefix.clone(),
            x.r.clone(),
            s,
            w[ey..].to_vec(),
        )];
    }
    let k = x.prefix.len();
    let final_word = y.target();
    if a >= k {
        // y moves an atom p of S past the rest of S, r, and U:
        // A r S1 p S2 U B2  →  A r S1 S2 U p B2  →  A S1 S2 r U p B2.
        let j = a - k; // |S1|
        let src = x.source();
        let p = y.r.clone();
        let s1 = &x.s[..j];
        let s2 = &x.s[j + 1..];
        let u_len = ey - ex;
        let b2 = &w[ey..];
        let mut pre = x.prefix.clone();
        pre.push(x.r.clone());
        pre.extend(s1.iter().cloned());
        let mut q = s2.to_vec();
        q.extend(src[ex..ex + u_len].iter().cloned());
        let first = Bracket::new(pre, p.clone(), q, b2.to_vec());
        let mut s12 = s1.to_vec();
        s12.extend(s2.iter().cloned());
        let mut suf = src[ex..ex + u_len].to_vec();
        suf.push(p);
        suf.extend(b2.iter().cloned());
        let second = Bracket::new(x.prefix.clone(), x.r.clone(), s12, suf);
        debug_assert!(second.target() == final_word);
        return vec![first, second];
    }
    // y moves an atom p of A past the rest of A, S, r and U:
    // A1 p A2 r S U B2  →  A1 A2 r S U p B2  →  A1 A2 S r U p B2.
    let a1 = &x.prefix[..a];
    let p = y.r.clone();
    let a2 = &x.prefix[a + 1..];
    let src = x.source();
    let u_part = &src[ex..ey];
    let b2 = &src[ey..];
    let mut q = a2.to_vec();
    q.push(x.r.clone());
    q.extend(x.s.iter().cloned());
    q.extend(u_part.iter().cloned());
    let first = Bracket::new(a1.to_vec(), p.clone(), q, b2.to_vec());
    let mut pre = a1.to_vec();
    pre.extend(a2.iter().cloned());
    let mut suf = u_part.to_vec();
    suf.push(p);
    suf.extend(b2.iter().cloned());
    let second = Bracket::new(pre, x.r.clone(), x.s.clone(), suf);
    debug_assert!(second.target() == final_word);
    vec![first, second]
}

/// Whether an arrow is in normal form.
pub fn is_normal<A: Clone + Eq>(u: &PermArrow<A>) -> bool {
    u.steps.iter().all(|s| !s.is_identity()) && u.steps.windows(2).all(|w| w[0].end() > w[1].end())
}

/// Outcome of probing the closure condition on a generator set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GammaReport {
    pub instances_checked: usize,
    pub violations: Vec<String>,
}

impl GammaReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

type Gen<A> = (Vec<A>, A, A, Vec<A>);

fn gen_of<A: Clone>(w: &[A], i: usize) -> Gen<A> {
    (
        w[..i].to_vec(),
        w[i].clone(),
        w[i + 1].clone(),
        w[i + 2..].to_vec(),
    )
}

fn swap<A: Clone>(w: &[A], i: usize) -> Vec<A> {
    let mut v = w.to_vec();
    v.swap(i, i + 1);
    v
}

/// Checks, on every instance found in the probe words, that whenever all
/// generators on one side of the interchange or braid equation are present,
/// so are those on the other side.
pub fn check_gamma<A: Clone + Eq + fmt::Debug>(
    gamma: &impl GammaSet<A>,
    probes: &[Vec<A>],
) -> GammaReport {
    let mut report = GammaReport::default();
    let has = |g: &Gen<A>| gamma.has_generator(&g.0, &g.1, &g.2, &g.3);
    let mut compare = |name: &str, w: &[A], lhs: Vec<Gen<A>>, rhs: Vec<Gen<A>>| {
        report.instances_checked += 1;
        let l = lhs.iter().all(has);
        let r = rhs.iter().all(has);
        if l != r {
            let (present, missing) = if l { (&lhs, &rhs) } else { (&rhs, &lhs) };
            let gone: Vec<_> = missing.iter().filter(|g| !has(g)).collect();
            report.violations.push(format!(
                "{name} at {w:?}: {present:?} present but {gone:?} missing"
            ));
        }
    };
    for w in probes {
        let n = w.len();
        // A r s U p q B
        for i in 0..n.saturating_sub(1) {
            for j in i + 2..n.saturating_sub(1) {
                let lhs = vec![gen_of(w, i), gen_of(&swap(w, i), j)];
                let rhs = vec![gen_of(w, j), gen_of(&swap(w, j), i)];
                compare("interchange", w, lhs, rhs);
            }
        }
        // A p r s B
        for i in 0..n.saturating_sub(2) {
            let w1 = swap(w, i + 1);
            let w2 = swap(&w1, i);
            let lhs = vec![gen_of(w, i + 1), gen_of(&w1, i), gen_of(&w2, i + 1)];
            let v1 = swap(w, i);
            let v2 = swap(&v1, i + 1);
            let rhs = vec![gen_of(w, i), gen_of(&v1, i + 1), gen_of(&v2, i)];
            compare("braid", w, lhs, rhs);
        }
    }
    report
}
