//! Arrow terms of the weak categories over diversified (`WOu`) and nominal
//! (`WOe`) terms: typing, the arrow-level translations, object
//! normalization, strictification into words, and the equality decision.

mod axioms;
mod strict;

use std::fmt;
use std::sync::Arc;

use crate::addresses::{strip, NWord};
use crate::error::{Error, Result};
use crate::syntax::{BasicKind, RawArrow, RawIndex};
use crate::terms::{build, scale_ou, Flavor, GeneratorSignature, RawTerm, Term, TermNode};
use crate::translate::{oe_to_ou, ou_to_oe};

pub use axioms::{AxiomFamily, Equation};
pub use strict::{
    arrow_eq, is_directed, is_normal_object, normalize_object, strict_word, strictify, StrictArrow,
    StrictGamma,
};

/// The three associativity arrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AssocKind {
    /// `β: (h∘g)∘f → h∘(g∘f)`.
    Beta,
    /// `β⁻¹: h∘(g∘f) → (h∘g)∘f`.
    BetaInv,
    /// `θ: (h∘g)∘f → (h∘f)∘g`.
    Theta,
}

impl AssocKind {
    fn keyword(self) -> &'static str {
        match self {
            AssocKind::Beta => "beta",
            AssocKind::BetaInv => "ibeta",
            AssocKind::Theta => "theta",
        }
    }
}

impl From<BasicKind> for AssocKind {
    fn from(k: BasicKind) -> Self {
        match k {
            BasicKind::Beta => AssocKind::Beta,
            BasicKind::BetaInv => AssocKind::BetaInv,
            BasicKind::Theta => AssocKind::Theta,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ArrowNode {
    Id(Term),
    /// Associativity arrow; nominal arrows carry the index pair `(b, a)`
    /// of `ζ_{h,(b,g),(a,f)}`.
    Assoc {
        kind: AssocKind,
        h: Term,
        g: Term,
        f: Term,
        idx: Option<(NWord, NWord)>,
    },
    Mu(Term, NWord),
    MuInv(Term, NWord),
    Lambda(Term),
    LambdaInv(Term),
    /// `v ∘ u`: first `u`, then `v`.
    Comp(Arrow, Arrow),
    /// `v ∘ u` on the insertion level (`WOu`).
    Ins(Arrow, Arrow),
    /// `v ∘_a u` (`WOe`).
    InsAt(Arrow, NWord, Arrow),
}

/// A well-typed arrow term with cached source and target.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    node: Arc<ArrowNode>,
    source: Term,
    target: Term,
}

fn bad_index(reason: String) -> Error {
    Error::IllegitimateIndex {
        path: Vec::new(),
        reason,
    }
}

fn prepend(err: Error, step: u8) -> Error {
    match err {
        Error::TypeMismatch { mut path, reason } => {
            path.insert(0, step);
            Error::TypeMismatch { path, reason }
        }
        Error::IllegitimateIndex { mut path, reason } => {
            path.insert(0, step);
            Error::IllegitimateIndex { path, reason }
        }
        Error::IllegitimateInsertion { mut path, reason } => {
            path.insert(0, step);
            Error::IllegitimateInsertion { path, reason }
        }
        other => other,
    }
}

fn as_index(err: Error, what: &str) -> Error {
    match err {
        Error::IllegitimateInsertion { reason, .. } => bad_index(format!("{what}: {reason}")),
        other => other,
    }
}

impl Arrow {
    fn make(node: ArrowNode, source: Term, target: Term) -> Arrow {
        Arrow {
            node: Arc::new(node),
            source,
            target,
        }
    }

    pub fn id(f: &Term) -> Arrow {
        Arrow::make(ArrowNode::Id(f.clone()), f.clone(), f.clone())
    }

    /// `β`, `β⁻¹` or `θ` indexed by `h, g, f` (`WOu`).
    pub fn assoc(kind: AssocKind, h: &Term, g: &Term, f: &Term) -> Result<Arrow> {
        for t in [h, g, f] {
            if t.flavor() != Flavor::Ou {
                return Err(Error::FlavorMismatch(
                    "WOu arrows are indexed by Ou terms".to_string(),
                ));
            }
        }
        let name = kind.keyword();
        let (src, tgt) = match kind {
            AssocKind::Beta | AssocKind::BetaInv => {
                let left = Term::insert(h, g)
                    .and_then(|hg| Term::insert(&hg, f))
                    .map_err(|e| as_index(e, &format!("{name}: (h o g) o f")))?;
                let right = Term::insert(g, f)
                    .and_then(|gf| Term::insert(h, &gf))
                    .map_err(|e| as_index(e, &format!("{name}: h o (g o f)")))?;
                if kind == AssocKind::Beta {
                    (left, right)
                } else {
                    (right, left)
                }
            }
            AssocKind::Theta => {
                let left = Term::insert(h, g)
                    .and_then(|hg| Term::insert(&hg, f))
                    .map_err(|e| as_index(e, "theta: (h o g) o f"))?;
                let right = Term::insert(h, f)
                    .and_then(|hf| Term::insert(&hf, g))
                    .map_err(|e| as_index(e, "theta: (h o f) o g"))?;
                (left, right)
            }
        };
        Ok(Arrow::make(
            ArrowNode::Assoc {
                kind,
                h: h.clone(),
                g: g.clone(),
                f: f.clone(),
                idx: None,
            },
            src,
            tgt,
        ))
    }

    pub fn beta(h: &Term, g: &Term, f: &Term) -> Result<Arrow> {
        Arrow::assoc(AssocKind::Beta, h, g, f)
    }

    pub fn beta_inv(h: &Term, g: &Term, f: &Term) -> Result<Arrow> {
        Arrow::assoc(AssocKind::BetaInv, h, g, f)
    }

    pub fn theta(h: &Term, g: &Term, f: &Term) -> Result<Arrow> {
        Arrow::assoc(AssocKind::Theta, h, g, f)
    }

    /// `ζ_{h,(b,g),(a,f)}` (`WOe`).
    pub fn assoc_e(
        kind: AssocKind,
        h: &Term,
        b: &NWord,
        g: &Term,
        a: &NWord,
        f: &Term,
    ) -> Result<Arrow> {
        for t in [h, g, f] {
            if t.flavor() != Flavor::Oe {
                return Err(Error::FlavorMismatch(
                    "WOe arrows are indexed by Oe terms".to_string(),
                ));
            }
        }
        let name = kind.keyword();
        let (src, tgt) = match kind {
            AssocKind::Beta | AssocKind::BetaInv => {
                let left = Term::insert_at_word(h, b, g)
                    .and_then(|hg| Term::insert_at_word(&hg, &b.concat(a), f))
                    .map_err(|e| as_index(e, &format!("{name}: (h o[b] g) o[ba] f")))?;
                let right = Term::insert_at_word(g, a, f)
                    .and_then(|gf| Term::insert_at_word(h, b, &gf))
                    .map_err(|e| as_index(e, &format!("{name}: h o[b] (g o[a] f)")))?;
                if kind == AssocKind::Beta {
                    (left, right)
                } else {
                    (right, left)
                }
            }
            AssocKind::Theta => {
                let left = Term::insert_at_word(h, b, g)
                    .and_then(|hg| Term::insert_at_word(&hg, a, f))
                    .map_err(|e| as_index(e, "theta: (h o[b] g) o[a] f"))?;
                let right = Term::insert_at_word(h, a, f)
                    .and_then(|hf| Term::insert_at_word(&hf, b, g))
                    .map_err(|e| as_index(e, "theta: (h o[a] f) o[b] g"))?;
                (left, right)
            }
        };
        Ok(Arrow::make(
            ArrowNode::Assoc {
                kind,
                h: h.clone(),
                g: g.clone(),
                f: f.clone(),
                idx: Some((b.clone(), a.clone())),
            },
            src,
            tgt,
        ))
    }

    fn unit_term(f: &Term, a: &NWord) -> Result<Term> {
        if !f.is_unitary() {
            return Err(bad_index(
                "unit arrows exist only in the unitary calculus".to_string(),
            ));
        }
        match f.flavor() {
            Flavor::Ou => Ok(Term::addr_unit(a.clone())),
            Flavor::Oe => Term::unit(Flavor::Oe),
            Flavor::O => Err(Error::FlavorMismatch(
                "arrows are indexed by Ou or Oe terms".to_string(),
            )),
        }
    }

    /// `f ∘ a·Ι` (or `f ∘_a Ι`), the larger side of `μ_{f,a}`.
    fn mu_side(f: &Term, a: &NWord) -> Result<Term> {
        let unit = Arrow::unit_term(f, a)?;
        match f.flavor() {
            Flavor::Ou => Term::insert(f, &unit),
            _ => Term::insert_at_word(f, a, &unit),
        }
        .map_err(|e| as_index(e, "mu"))
    }

    /// `t(f)·Ι ∘ f` (or `Ι ∘_e f`), the larger side of `λ_f`.
    fn lambda_side(f: &Term) -> Result<Term> {
        match f.flavor() {
            Flavor::Ou => {
                let unit = Arrow::unit_term(f, f.target())?;
                Term::insert(&unit, f)
            }
            _ => {
                let unit = Arrow::unit_term(f, &NWord::empty())?;
                Term::insert_at_word(&unit, &NWord::empty(), f)
            }
        }
        .map_err(|e| as_index(e, "lam"))
    }

    pub fn mu(f: &Term, a: &NWord) -> Result<Arrow> {
        let big = Arrow::mu_side(f, a)?;
        Ok(Arrow::make(
            ArrowNode::Mu(f.clone(), a.clone()),
            big,
            f.clone(),
        ))
    }

    pub fn mu_inv(f: &Term, a: &NWord) -> Result<Arrow> {
        let big = Arrow::mu_side(f, a)?;
        Ok(Arrow::make(
            ArrowNode::MuInv(f.clone(), a.clone()),
            f.clone(),
            big,
        ))
    }

    pub fn lambda(f: &Term) -> Result<Arrow> {
        let big = Arrow::lambda_side(f)?;
        Ok(Arrow::make(ArrowNode::Lambda(f.clone()), big, f.clone()))
    }

    pub fn lambda_inv(f: &Term) -> Result<Arrow> {
        let big = Arrow::lambda_side(f)?;
        Ok(Arrow::make(ArrowNode::LambdaInv(f.clone()), f.clone(), big))
    }

    fn check_pair(v: &Arrow, u: &Arrow) -> Result<()> {
        if v.flavor() != u.flavor() || v.is_unitary() != u.is_unitary() {
            return Err(Error::FlavorMismatch(
                "arrows of different calculi cannot be combined".to_string(),
            ));
        }
        Ok(())
    }

    /// `v ∘ u`: first `u`, then `v`.
    pub fn comp(v: &Arrow, u: &Arrow) -> Result<Arrow> {
        Arrow::check_pair(v, u)?;
        if u.target != v.source {
            return Err(Error::TypeMismatch {
                path: Vec::new(),
                reason: format!(
                    "target {} of the first arrow differs from source {} of the second",
                    u.target, v.source
                ),
            });
        }
        Ok(Arrow::make(
            ArrowNode::Comp(v.clone(), u.clone()),
            u.source.clone(),
            v.target.clone(),
        ))
    }

    /// Composite of a chain given in application order.
    pub fn chain(steps: &[Arrow]) -> Result<Arrow> {
        let mut it = steps.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::OutOfDomain("empty composite".to_string()))?
            .clone();
        it.try_fold(first, |acc, next| Arrow::comp(next, &acc))
    }

    /// `v ∘ u: g∘f → g'∘f'` for `v: g → g'`, `u: f → f'` (`WOu`).
    pub fn ins(v: &Arrow, u: &Arrow) -> Result<Arrow> {
        Arrow::check_pair(v, u)?;
        if v.flavor() != Flavor::Ou {
            return Err(Error::FlavorMismatch(
                "unindexed insertion of arrows belongs to WOu".to_string(),
            ));
        }
        let src = Term::insert(&v.source, &u.source)?;
        let tgt = Term::insert(&v.target, &u.target)?;
        Ok(Arrow::make(ArrowNode::Ins(v.clone(), u.clone()), src, tgt))
    }

    /// `v ∘_a u: g ∘_a f → g' ∘_a f'` (`WOe`).
    pub fn ins_at(v: &Arrow, a: &NWord, u: &Arrow) -> Result<Arrow> {
        Arrow::check_pair(v, u)?;
        if v.flavor() != Flavor::Oe {
            return Err(Error::FlavorMismatch(
                "indexed insertion of arrows belongs to WOe".to_string(),
            ));
        }
        let src = Term::insert_at_word(&v.source, a, &u.source)?;
        let tgt = Term::insert_at_word(&v.target, a, &u.target)?;
        Ok(Arrow::make(
            ArrowNode::InsAt(v.clone(), a.clone(), u.clone()),
            src,
            tgt,
        ))
    }

    /// The basic arrow `basic` acting on the subterm of `object` at `path`,
    /// with identities on the rest of the object.
    pub fn in_context(object: &Term, path: &[u8], basic: &Arrow) -> Result<Arrow> {
        let Some((step, rest)) = path.split_first() else {
            if object != &basic.source {
                return Err(Error::TypeMismatch {
                    path: Vec::new(),
                    reason: format!("{} is not the source of {basic}", object),
                });
            }
            return Ok(basic.clone());
        };
        let (g, f) = object
            .operands()
            .ok_or_else(|| Error::OutOfDomain("path leaves the object".to_string()))?;
        let (v, u) = if *step == 0 {
            (Arrow::in_context(g, rest, basic)?, Arrow::id(f))
        } else {
            (Arrow::id(g), Arrow::in_context(f, rest, basic)?)
        };
        match object.node() {
            TermNode::InsAtWord(_, a, _) => Arrow::ins_at(&v, a, &u),
            _ => Arrow::ins(&v, &u),
        }
    }

    pub fn node(&self) -> &ArrowNode {
        &self.node
    }

    pub fn source(&self) -> &Term {
        &self.source
    }

    pub fn target(&self) -> &Term {
        &self.target
    }

    /// `Ou` for `WOu` arrows, `Oe` for `WOe` arrows.
    pub fn flavor(&self) -> Flavor {
        self.source.flavor()
    }

    pub fn is_unitary(&self) -> bool {
        self.source.is_unitary()
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match &*self.node {
            ArrowNode::Comp(v, u) | ArrowNode::Ins(v, u) | ArrowNode::InsAt(v, _, u) => {
                1 + v.size() + u.size()
            }
            _ => 1,
        }
    }

    /// Recomputes the type bottom-up, ignoring the caches.
    pub fn recompute_type(&self) -> Result<(Term, Term)> {
        let a = self.rebuild()?;
        Ok((a.source, a.target))
    }

    fn rebuild(&self) -> Result<Arrow> {
        match &*self.node {
            ArrowNode::Id(f) => Ok(Arrow::id(f)),
            ArrowNode::Assoc {
                kind,
                h,
                g,
                f,
                idx: None,
            } => Arrow::assoc(*kind, h, g, f),
            ArrowNode::Assoc {
                kind,
                h,
                g,
                f,
                idx: Some((b, a)),
            } => Arrow::assoc_e(*kind, h, b, g, a, f),
            ArrowNode::Mu(f, a) => Arrow::mu(f, a),
            ArrowNode::MuInv(f, a) => Arrow::mu_inv(f, a),
            ArrowNode::Lambda(f) => Arrow::lambda(f),
            ArrowNode::LambdaInv(f) => Arrow::lambda_inv(f),
            ArrowNode::Comp(v, u) => Arrow::comp(&v.rebuild()?, &u.rebuild()?),
            ArrowNode::Ins(v, u) => Arrow::ins(&v.rebuild()?, &u.rebuild()?),
            ArrowNode::InsAt(v, a, u) => Arrow::ins_at(&v.rebuild()?, a, &u.rebuild()?),
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.node {
            ArrowNode::Id(f) => write!(fm, "1[{f}]"),
            ArrowNode::Assoc {
                kind,
                h,
                g,
                f,
                idx: None,
            } => write!(fm, "{}[{h}, {g}, {f}]", kind.keyword()),
            ArrowNode::Assoc {
                kind,
                h,
                g,
                f,
                idx: Some((b, a)),
            } => write!(fm, "{}[{h}, {b}, {g}, {a}, {f}]", kind.keyword()),
            ArrowNode::Mu(f, a) => write!(fm, "mu[{f}, {a}]"),
            ArrowNode::MuInv(f, a) => write!(fm, "imu[{f}, {a}]"),
            ArrowNode::Lambda(f) => write!(fm, "lam[{f}]"),
            ArrowNode::LambdaInv(f) => write!(fm, "ilam[{f}]"),
            ArrowNode::Comp(v, u) => {
                if matches!(u.node(), ArrowNode::Comp(..)) {
                    write!(fm, "{v} . ({u})")
                } else {
                    write!(fm, "{v} . {u}")
                }
            }
            ArrowNode::Ins(v, u) => write!(fm, "({v} o {u})"),
            ArrowNode::InsAt(v, a, u) => write!(fm, "({v} o[{a}] {u})"),
        }
    }
}

impl fmt::Debug for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arrow({self} : {} -> {})", self.source, self.target)
    }
}

/// Validates a raw arrow; index terms are built in `Ou` for `WOu` arrows and
/// in `Oe` for `WOe` arrows, as selected by `flavor`.
pub fn typecheck(
    raw: &RawArrow,
    signature: &GeneratorSignature,
    flavor: Flavor,
    unitary: bool,
) -> Result<Arrow> {
    let term = |t: &RawTerm| build(signature, flavor, unitary, t);
    match raw {
        RawArrow::Id(t) => Ok(Arrow::id(&term(t)?)),
        RawArrow::Basic(kind, idx) => {
            let terms: Vec<&RawTerm> = idx
                .iter()
                .filter_map(|i| match i {
                    RawIndex::Term(t) => Some(t),
                    RawIndex::Word(_) => None,
                })
                .collect();
            let words: Vec<&NWord> = idx
                .iter()
                .filter_map(|i| match i {
                    RawIndex::Word(w) => Some(w),
                    RawIndex::Term(_) => None,
                })
                .collect();
            let (h, g, f) = (term(terms[0])?, term(terms[1])?, term(terms[2])?);
            match (flavor, words.as_slice()) {
                (Flavor::Ou, []) => Arrow::assoc((*kind).into(), &h, &g, &f),
                (Flavor::Oe, [b, a]) => Arrow::assoc_e((*kind).into(), &h, b, &g, a, &f),
                _ => Err(Error::FlavorMismatch(
                    "basic arrow indices do not match the calculus".to_string(),
                )),
            }
        }
        RawArrow::Mu(t, a) => Arrow::mu(&term(t)?, a),
        RawArrow::MuInv(t, a) => Arrow::mu_inv(&term(t)?, a),
        RawArrow::Lambda(t) => Arrow::lambda(&term(t)?),
        RawArrow::LambdaInv(t) => Arrow::lambda_inv(&term(t)?),
        RawArrow::Comp(v, u) => {
            let v = typecheck(v, signature, flavor, unitary).map_err(|e| prepend(e, 0))?;
            let u = typecheck(u, signature, flavor, unitary).map_err(|e| prepend(e, 1))?;
            Arrow::comp(&v, &u)
        }
        RawArrow::Ins(v, u) => {
            let v = typecheck(v, signature, flavor, unitary).map_err(|e| prepend(e, 0))?;
            let u = typecheck(u, signature, flavor, unitary).map_err(|e| prepend(e, 1))?;
            Arrow::ins(&v, &u)
        }
        RawArrow::InsAt(v, a, u) => {
            let v = typecheck(v, signature, flavor, unitary).map_err(|e| prepend(e, 0))?;
            let u = typecheck(u, signature, flavor, unitary).map_err(|e| prepend(e, 1))?;
            Arrow::ins_at(&v, a, &u)
        }
    }
}

fn require(u: &Arrow, flavor: Flavor) -> Result<()> {
    if u.flavor() != flavor {
        return Err(Error::FlavorMismatch(format!(
            "expected an arrow over {flavor} terms, got one over {}",
            u.flavor()
        )));
    }
    Ok(())
}

/// `a·u`: prefixes every address in the indices of a `WOu` arrow.
pub fn scale_arrow(a: &NWord, u: &Arrow) -> Result<Arrow> {
    require(u, Flavor::Ou)?;
    Ok(scale_rec(a, u))
}

fn scale_rec(a: &NWord, u: &Arrow) -> Arrow {
    let s = |t: &Term| scale_ou(a, t);
    match u.node() {
        ArrowNode::Id(f) => Ok(Arrow::id(&s(f))),
        ArrowNode::Assoc { kind, h, g, f, .. } => Arrow::assoc(*kind, &s(h), &s(g), &s(f)),
        ArrowNode::Mu(f, b) => Arrow::mu(&s(f), &a.concat(b)),
        ArrowNode::MuInv(f, b) => Arrow::mu_inv(&s(f), &a.concat(b)),
        ArrowNode::Lambda(f) => Arrow::lambda(&s(f)),
        ArrowNode::LambdaInv(f) => Arrow::lambda_inv(&s(f)),
        ArrowNode::Comp(v, w) => Arrow::comp(&scale_rec(a, v), &scale_rec(a, w)),
        ArrowNode::Ins(v, w) => Arrow::ins(&scale_rec(a, v), &scale_rec(a, w)),
        ArrowNode::InsAt(..) => unreachable!("WOu arrow"),
    }
    .expect("scaling preserves typing")
}

/// `U` on arrows: `WOe → WOu`.
pub fn arrow_oe_to_ou(u: &Arrow) -> Result<Arrow> {
    require(u, Flavor::Oe)?;
    Ok(arrow_u(u))
}

fn arrow_u(u: &Arrow) -> Arrow {
    let tu = |t: &Term| oe_to_ou(t).expect("Oe term");
    match u.node() {
        ArrowNode::Id(f) => Ok(Arrow::id(&tu(f))),
        ArrowNode::Assoc {
            kind,
            h,
            g,
            f,
            idx: Some((b, a)),
        } => {
            let fa = match kind {
                AssocKind::Theta => a.clone(),
                _ => b.concat(a),
            };
            Arrow::assoc(*kind, &tu(h), &scale_ou(b, &tu(g)), &scale_ou(&fa, &tu(f)))
        }
        ArrowNode::Mu(f, a) => Arrow::mu(&tu(f), a),
        ArrowNode::MuInv(f, a) => Arrow::mu_inv(&tu(f), a),
        ArrowNode::Lambda(f) => Arrow::lambda(&tu(f)),
        ArrowNode::LambdaInv(f) => Arrow::lambda_inv(&tu(f)),
        ArrowNode::Comp(v, w) => Arrow::comp(&arrow_u(v), &arrow_u(w)),
        ArrowNode::InsAt(v, a, w) => Arrow::ins(&arrow_u(v), &scale_rec(a, &arrow_u(w))),
        _ => unreachable!("WOe arrow"),
    }
    .expect("U preserves typing")
}

/// `E` on arrows: `WOu → WOe`.
pub fn arrow_ou_to_oe(u: &Arrow) -> Result<Arrow> {
    require(u, Flavor::Ou)?;
    Ok(arrow_e(u))
}

fn rel(b: &NWord, a: &NWord) -> NWord {
    strip(b, a).expect("target addresses extend the outer target")
}

fn arrow_e(u: &Arrow) -> Arrow {
    let te = |t: &Term| ou_to_oe(t).expect("Ou term");
    match u.node() {
        ArrowNode::Id(f) => Ok(Arrow::id(&te(f))),
        ArrowNode::Assoc { kind, h, g, f, .. } => {
            let b = rel(h.target(), g.target());
            let a = match kind {
                AssocKind::Theta => rel(h.target(), f.target()),
                _ => rel(g.target(), f.target()),
            };
            Arrow::assoc_e(*kind, &te(h), &b, &te(g), &a, &te(f))
        }
        ArrowNode::Mu(f, a) => Arrow::mu(&te(f), &rel(f.target(), a)),
        ArrowNode::MuInv(f, a) => Arrow::mu_inv(&te(f), &rel(f.target(), a)),
        ArrowNode::Lambda(f) => Arrow::lambda(&te(f)),
        ArrowNode::LambdaInv(f) => Arrow::lambda_inv(&te(f)),
        ArrowNode::Comp(v, w) => Arrow::comp(&arrow_e(v), &arrow_e(w)),
        ArrowNode::Ins(v, w) => {
            let a = rel(v.source().target(), w.source().target());
            Arrow::ins_at(&arrow_e(v), &a, &arrow_e(w))
        }
        ArrowNode::InsAt(..) => unreachable!("WOu arrow"),
    }
    .expect("E preserves typing")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_raw_arrow;

    fn sig() -> GeneratorSignature {
        GeneratorSignature::new().with("x", 2).with("y", 3)
    }

    fn arrow(s: &str) -> Result<Arrow> {
        typecheck(&parse_raw_arrow(s, Flavor::Ou)?, &sig(), Flavor::Ou, true)
    }

    fn arrow_e(s: &str) -> Result<Arrow> {
        typecheck(&parse_raw_arrow(s, Flavor::Oe)?, &sig(), Flavor::Oe, true)
    }

    #[test]
    fn theta_typing() {
        let a = arrow("theta[e*x, 1*x, 2*x]").unwrap();
        assert_eq!(a.source().to_string(), "((e*x o 1*x) o 2*x)");
        assert_eq!(a.target().to_string(), "((e*x o 2*x) o 1*x)");
        assert_eq!(a.source().source(), a.target().source());
    }

    #[test]
    fn beta_round_trip_typing() {
        let a = arrow("beta[e*x, 1*x, 1-1*x] . ibeta[e*x, 1*x, 1-1*x]").unwrap();
        assert_eq!(a.source(), a.target());
        assert_eq!(a.source().to_string(), "(e*x o (1*x o 1-1*x))");
    }

    #[test]
    fn type_errors() {
        assert!(matches!(
            arrow("1[e*x] . 1[1*x]"),
            Err(Error::TypeMismatch { .. })
        ));
        assert!(matches!(
            arrow("theta[e*x, 1*x, 1-1*x]"),
            Err(Error::IllegitimateIndex { .. })
        ));
        assert!(matches!(
            arrow("(1[e*x] o 1[3*x])"),
            Err(Error::IllegitimateInsertion { .. })
        ));
        match arrow("1[e*x] . (1[e*x] . 1[2*x])") {
            Err(Error::TypeMismatch { path, .. }) => assert_eq!(path, vec![1]),
            other => panic!("{other:?}"),
        }
        let nu = typecheck(
            &parse_raw_arrow("mu[e*x, 1]", Flavor::Ou).unwrap(),
            &sig(),
            Flavor::Ou,
            false,
        );
        assert!(nu.is_err());
    }

    #[test]
    fn units() {
        let m = arrow("mu[e*x, 2]").unwrap();
        assert_eq!(m.source().to_string(), "(e*x o 2*I)");
        let l = arrow("lam[(e*x o 1*x)]").unwrap();
        assert_eq!(l.source().to_string(), "(e*I o (e*x o 1*x))");
        let le = arrow_e("lam[x]").unwrap();
        assert_eq!(le.source().to_string(), "(I o[e] x)");
    }

    #[test]
    fn printing_reparses() {
        for s in [
            "theta[e*x, 1*x, 2*x] . (1[(e*x o 1*x)] o 1[2*x])",
            "1[e*x] . (1[e*x] . 1[e*x])",
            "(beta[e*x, 1*x, 1-1*x] o 1[2*x])",
        ] {
            let a = arrow(s).unwrap();
            let b = arrow(&a.to_string()).unwrap();
            assert_eq!(a, b, "{s}");
        }
        let e = arrow_e("theta[x, 1, x, 2, x]").unwrap();
        assert_eq!(e.to_string(), "theta[x, 1, x, 2, x]");
    }

    #[test]
    fn translations() {
        let e = arrow_e("theta[x, 1, x, 2, x]").unwrap();
        let u = arrow_oe_to_ou(&e).unwrap();
        assert_eq!(u.to_string(), "theta[e*x, 1*x, 2*x]");
        assert_eq!(arrow_ou_to_oe(&u).unwrap(), e);
        let b = arrow("beta[e*x, 1*x, 1-2*x]").unwrap();
        let be = arrow_ou_to_oe(&b).unwrap();
        assert_eq!(be.to_string(), "beta[x, 1, x, 2, x]");
        assert_eq!(arrow_oe_to_ou(&be).unwrap(), b);
        let c = arrow_e("(mu[x, 1] o[2] lam[x])").unwrap();
        assert_eq!(arrow_ou_to_oe(&arrow_oe_to_ou(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn context_embedding() {
        let obj = "((e*x o 2*x) o (1*x o 1-1*x))"
            .parse::<TestTerm>()
            .unwrap()
            .0;
        let inner = obj.subterm(&[1]).unwrap();
        let (g, f) = inner.operands().unwrap();
        let root = "e*x o 2*x".parse::<TestTerm>().unwrap().0;
        let b = Arrow::beta_inv(&root, g, f).unwrap();
        assert_eq!(b.source(), &obj);
        let th = Arrow::theta(
            &"e*x".parse::<TestTerm>().unwrap().0,
            &"2*x".parse::<TestTerm>().unwrap().0,
            &"1*x".parse::<TestTerm>().unwrap().0,
        )
        .unwrap();
        let ctx = Arrow::in_context(
            &"((e*x o 2*x) o 1*x) o 1-1*x".parse::<TestTerm>().unwrap().0,
            &[0],
            &th,
        )
        .unwrap();
        assert_eq!(ctx.to_string(), "(theta[e*x, 2*x, 1*x] o 1[1-1*x])");
        assert_eq!(ctx.target().to_string(), "(((e*x o 1*x) o 2*x) o 1-1*x)");
        assert!(Arrow::in_context(&obj, &[1], &th).is_err());
    }

    struct TestTerm(Term);

    impl std::str::FromStr for TestTerm {
        type Err = Error;
        fn from_str(s: &str) -> Result<Self> {
            let raw = crate::syntax::parse_raw_term(s, Flavor::Ou)?;
            Ok(TestTerm(build(&sig(), Flavor::Ou, true, &raw)?))
        }
    }
}
