use std::fmt;

use super::{arrow_oe_to_ou, Arrow, ArrowNode, AssocKind};
use crate::error::{Error, Result};
use crate::perm::{graph, Bracket, GammaSet, PermArrow, PermGraph};
use crate::terms::{Flavor, Term};

/// Whether all parentheses associate to the left and no unit occurs, or the
/// object is a single unit atom.
pub fn is_normal_object(f: &Term) -> bool {
    if f.is_leaf() {
        return true;
    }
    fn comb(f: &Term) -> bool {
        match f.operands() {
            None => !f.is_unit_leaf(),
            Some((g, h)) => h.is_leaf() && !h.is_unit_leaf() && comb(g),
        }
    }
    comb(f)
}

/// No `β`, `μ⁻¹` or `λ⁻¹` occurs.
pub fn is_directed(u: &Arrow) -> bool {
    match u.node() {
        ArrowNode::Assoc {
            kind: AssocKind::Beta,
            ..
        }
        | ArrowNode::MuInv(..)
        | ArrowNode::LambdaInv(..) => false,
        ArrowNode::Comp(v, w) | ArrowNode::Ins(v, w) | ArrowNode::InsAt(v, _, w) => {
            is_directed(v) && is_directed(w)
        }
        _ => true,
    }
}

/// The normal form of a `WOu` object and a directed arrow reaching it.
pub fn normalize_object(f: &Term) -> Result<(Term, Arrow)> {
    if f.flavor() != Flavor::Ou {
        return Err(Error::FlavorMismatch(
            "objects are normalized in WOu".to_string(),
        ));
    }
    Ok(normalize(f))
}

fn normalize(f: &Term) -> (Term, Arrow) {
    let Some((g, h)) = f.operands() else {
        return (f.clone(), Arrow::id(f));
    };
    let (g1, a) = normalize(g);
    let (h1, b) = normalize(h);
    let step = Arrow::ins(&a, &b).expect("normalization preserves s and t");
    let (n, c) = merge(&g1, &h1);
    (n, compose(&c, &step))
}

/// `v ∘ u`, dropping identities.
fn compose(v: &Arrow, u: &Arrow) -> Arrow {
    let id = |a: &Arrow| match a.node() {
        ArrowNode::Id(_) => true,
        ArrowNode::Ins(..) => a.source() == a.target() && all_ids(a),
        _ => false,
    };
    if id(u) {
        return v.clone();
    }
    if id(v) {
        return u.clone();
    }
    Arrow::comp(v, u).expect("composable")
}

fn all_ids(a: &Arrow) -> bool {
    match a.node() {
        ArrowNode::Id(_) => true,
        ArrowNode::Ins(v, u) => all_ids(v) && all_ids(u),
        _ => false,
    }
}

/// Normalizes `g ∘ h` for normal `g` and `h`.
fn merge(g: &Term, h: &Term) -> (Term, Arrow) {
    let gh = Term::insert(g, h).expect("legitimate");
    if h.is_unit_leaf() {
        let a = Arrow::mu(g, h.target()).expect("unit on the right");
        return (g.clone(), a);
    }
    if g.is_unit_leaf() {
        return (h.clone(), Arrow::lambda(h).expect("unit on the left"));
    }
    match h.operands() {
        None => (gh.clone(), Arrow::id(&gh)),
        Some((h1, q)) => {
            let b = Arrow::beta_inv(g, h1, q).expect("left reassociation");
            let (n1, a) = merge(g, h1);
            let n = Term::insert(&n1, q).expect("s is preserved");
            let step = Arrow::ins(&a, &Arrow::id(q)).expect("typed");
            (n, compose(&step, &b))
        }
    }
}

/// The atom word of an object: its non-unit leaves in order, or the single
/// unit atom `t(f)·Ι` when only units occur.
pub fn strict_word(f: &Term) -> Vec<Term> {
    let w = raw_word(f);
    if w.is_empty() {
        vec![Term::addr_unit(f.target().clone())]
    } else {
        w
    }
}

fn raw_word(f: &Term) -> Vec<Term> {
    f.leaves()
        .into_iter()
        .filter(|l| !l.is_unit_leaf())
        .collect()
}

/// An arrow of the strictified category: a chain of adjacent transpositions
/// between atom words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictArrow {
    pub source: Vec<Term>,
    pub target: Vec<Term>,
    pub steps: Vec<Bracket<Term>>,
}

impl StrictArrow {
    pub fn to_perm(&self) -> PermArrow<Term> {
        PermArrow::from_steps(self.source.clone(), self.steps.clone()).expect("strict steps chain")
    }

    pub fn graph(&self) -> PermGraph {
        graph(&self.to_perm())
    }
}

fn show_word(w: &[Term]) -> String {
    w.iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for StrictArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "source: {}", show_word(&self.source))?;
        writeln!(f, "target: {}", show_word(&self.target))?;
        if self.steps.is_empty() {
            write!(f, "identity")
        } else {
            let lines: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", lines.join("\n"))
        }
    }
}

/// Strictifies a `WOu` arrow: `β`, `μ`, `λ` and their inverses vanish and
/// every `θ` becomes a block swap of atom words, decomposed into adjacent
/// transpositions.
pub fn strictify(u: &Arrow) -> Result<StrictArrow> {
    if u.flavor() != Flavor::Ou {
        return Err(Error::FlavorMismatch(
            "strictification is defined on WOu arrows".to_string(),
        ));
    }
    let mut steps = Vec::new();
    collect(u, &[], &[], &mut steps);
    Ok(StrictArrow {
        source: strict_word(u.source()),
        target: strict_word(u.target()),
        steps,
    })
}

fn collect(u: &Arrow, pre: &[Term], suf: &[Term], out: &mut Vec<Bracket<Term>>) {
    match u.node() {
        ArrowNode::Assoc {
            kind: AssocKind::Theta,
            h,
            g,
            f,
            ..
        } => {
            let hw = raw_word(h);
            let p = raw_word(g);
            let q = raw_word(f);
            // Move q_1, …, q_m in turn to the left past p_k, …, p_1.
            for j in 0..q.len() {
                for i in (0..p.len()).rev() {
                    if p[i] == q[j] {
                        // Crossing equal atoms leaves the word as it is.
                        continue;
                    }
                    let mut prefix = pre.to_vec();
                    prefix.extend(hw.iter().cloned());
                    prefix.extend(q[..j].iter().cloned());
                    prefix.extend(p[..i].iter().cloned());
                    let mut suffix = p[i + 1..].to_vec();
                    suffix.extend(q[j + 1..].iter().cloned());
                    suffix.extend(suf.iter().cloned());
                    out.push(Bracket::new(
                        prefix,
                        p[i].clone(),
                        vec![q[j].clone()],
                        suffix,
                    ));
                }
            }
        }
        ArrowNode::Comp(v, w) => {
            collect(w, pre, suf, out);
            collect(v, pre, suf, out);
        }
        ArrowNode::Ins(v, w) => {
            let mut pre2 = pre.to_vec();
            pre2.extend(raw_word(v.source()));
            collect(w, &pre2, suf, out);
            let mut suf2 = raw_word(w.target());
            suf2.extend(suf.iter().cloned());
            collect(v, pre, &suf2, out);
        }
        _ => {}
    }
}

/// The strictified category as a generator set: objects are atom words that
/// assemble into a legitimate left comb (or a single unit atom), generators
/// swap two distinct adjacent atoms between objects.
#[derive(Debug, Clone, Copy, Default)]
pub struct StrictGamma;

impl GammaSet<Term> for StrictGamma {
    fn is_object(&self, word: &[Term]) -> bool {
        match word {
            [] => false,
            [a] => a.is_leaf(),
            [first, rest @ ..] => {
                if word.iter().any(|a| !a.is_leaf() || a.is_unit_leaf()) {
                    return false;
                }
                let mut acc = first.clone();
                for a in rest {
                    match Term::insert(&acc, a) {
                        Ok(t) => acc = t,
                        Err(_) => return false,
                    }
                }
                true
            }
        }
    }

    fn has_generator(&self, prefix: &[Term], p: &Term, q: &Term, suffix: &[Term]) -> bool {
        if p == q {
            return false;
        }
        let mut w: Vec<Term> = prefix.to_vec();
        w.push(p.clone());
        w.push(q.clone());
        w.extend(suffix.iter().cloned());
        if !self.is_object(&w) {
            return false;
        }
        let n = prefix.len();
        w.swap(n, n + 1);
        self.is_object(&w)
    }
}

/// Decides `u = v`: arrows are equal exactly when their types coincide.
///
/// The decision is cross-checked by strictifying both arrows and comparing
/// their graphs; a disagreement is reported as `Soundness`.
pub fn arrow_eq(u: &Arrow, v: &Arrow) -> Result<bool> {
    if u.flavor() != v.flavor() || u.is_unitary() != v.is_unitary() {
        return Err(Error::FlavorMismatch(
            "arrows of different calculi cannot be compared".to_string(),
        ));
    }
    if u.source() != v.source() || u.target() != v.target() {
        return Ok(false);
    }
    let (su, sv) = if u.flavor() == Flavor::Oe {
        (
            strictify(&arrow_oe_to_ou(u)?)?,
            strictify(&arrow_oe_to_ou(v)?)?,
        )
    } else {
        (strictify(u)?, strictify(v)?)
    };
    if su.graph() != sv.graph() {
        return Err(Error::Soundness(format!(
            "arrows of the same type {} -> {} strictify to different graphs",
            u.source(),
            u.target()
        )));
    }
    Ok(true)
}
