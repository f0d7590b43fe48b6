//! Translations between the calculi and the term-equality decision.
//!
//! `ε: O → Oe` and `τ: Oe → O` convert between numeric and nominal indices
//! through the rank maps `K`; `U: Oe → Ou` diversifies a term by addressing
//! every generator occurrence, and `E: Ou → Oe` forgets the addresses.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::addresses::{k_index, k_inverse, strip, NWord};
use crate::error::{Error, Result};
use crate::terms::{scale_ou, Flavor, Term, TermNode};

fn require(f: &Term, flavor: Flavor) -> Result<()> {
    if f.flavor() != flavor {
        return Err(Error::FlavorMismatch(format!(
            "expected an {flavor} term, got {}",
            f.flavor()
        )));
    }
    Ok(())
}

/// `ε`: numeric to nominal insertion.
pub fn o_to_oe(phi: &Term) -> Result<Term> {
    require(phi, Flavor::O)?;
    Ok(eps(phi))
}

fn eps(phi: &Term) -> Term {
    let u = phi.is_unitary();
    match phi.node() {
        TermNode::Gen(x) => Term::generator(Flavor::Oe, u, x).expect("Oe leaf"),
        TermNode::Unit => Term::unit(Flavor::Oe).expect("Oe unit"),
        TermNode::InsAt(g, n, f) => {
            let g = eps(g);
            let a = k_inverse(g.source(), *n).expect("|s(ε(γ))| = α(γ)");
            Term::insert_at_word(&g, &a, &eps(f)).expect("ε preserves legitimacy")
        }
        _ => unreachable!("O term"),
    }
}

/// `τ`: nominal to numeric insertion.
pub fn oe_to_o(f: &Term) -> Result<Term> {
    require(f, Flavor::Oe)?;
    Ok(tau(f))
}

fn tau(f: &Term) -> Term {
    let u = f.is_unitary();
    match f.node() {
        TermNode::Gen(x) => Term::generator(Flavor::O, u, x).expect("O leaf"),
        TermNode::Unit => Term::unit(Flavor::O).expect("O unit"),
        TermNode::InsAtWord(g, a, h) => {
            let n = k_index(g.source(), a).expect("a ∈ s(g)");
            Term::insert_at(&tau(g), n, &tau(h)).expect("τ preserves legitimacy")
        }
        _ => unreachable!("Oe term"),
    }
}

/// `U`: `U(x) = e·x`, `U(g ∘_a f) = U(g) ∘ a·U(f)`.
pub fn oe_to_ou(f: &Term) -> Result<Term> {
    require(f, Flavor::Oe)?;
    Ok(diversify(f))
}

fn diversify(f: &Term) -> Term {
    match f.node() {
        TermNode::Gen(x) => Term::addr_gen(f.is_unitary(), NWord::empty(), x),
        TermNode::Unit => Term::addr_unit(NWord::empty()),
        TermNode::InsAtWord(g, a, h) => Term::insert(&diversify(g), &scale_ou(a, &diversify(h)))
            .expect("U preserves legitimacy"),
        _ => unreachable!("Oe term"),
    }
}

/// `E`: `E(a·x) = x`, `E(g ∘ f) = E(g) ∘_{t(g)\t(f)} E(f)`.
pub fn ou_to_oe(f: &Term) -> Result<Term> {
    require(f, Flavor::Ou)?;
    Ok(forget(f))
}

fn forget(f: &Term) -> Term {
    match f.node() {
        TermNode::AddrGen(_, x) => Term::generator(Flavor::Oe, f.is_unitary(), x).expect("Oe leaf"),
        TermNode::AddrUnit(_) => Term::unit(Flavor::Oe).expect("Oe unit"),
        TermNode::Ins(g, h) => {
            let a = strip(g.target(), h.target()).expect("t(g) is a prefix of t(f)");
            Term::insert_at_word(&forget(g), &a, &forget(h)).expect("E preserves legitimacy")
        }
        _ => unreachable!("Ou term"),
    }
}

/// Translates any term into `Ou` (via `ε` and `U` as needed).
pub fn to_ou(f: &Term) -> Term {
    match f.flavor() {
        Flavor::O => diversify(&eps(f)),
        Flavor::Oe => diversify(f),
        Flavor::Ou => f.clone(),
    }
}

/// Translates an `Ou` term into the requested flavor.
pub fn from_ou(f: &Term, flavor: Flavor) -> Result<Term> {
    require(f, Flavor::Ou)?;
    Ok(match flavor {
        Flavor::Ou => f.clone(),
        Flavor::Oe => forget(f),
        Flavor::O => tau(&forget(f)),
    })
}

/// Translates a term of any flavor into any other.
pub fn translate(f: &Term, to: Flavor) -> Term {
    match (f.flavor(), to) {
        (a, b) if a == b => f.clone(),
        (Flavor::O, Flavor::Oe) => eps(f),
        (Flavor::Oe, Flavor::O) => tau(f),
        _ => from_ou(&to_ou(f), to).expect("Ou term"),
    }
}

fn atom_key(t: &Term) -> (&NWord, bool, &str) {
    match t.node() {
        TermNode::AddrGen(a, x) => (a, x.arity != 1, &x.name),
        TermNode::AddrUnit(a) => (a, false, "I"),
        _ => unreachable!("atom"),
    }
}

/// Canonical representative of the equality class of `f`, as an `Ou` term.
///
/// Units are erased (unless nothing else remains) and the remaining atoms are
/// rebuilt as a left comb in address order. In the non-unitary calculus the
/// leftmost atom cannot move, since every equation keeps it at the head of
/// the term, so it stays in front; with units it can be exchanged with other
/// atoms at the same address.
pub fn canonical_form(f: &Term) -> Term {
    let f = to_ou(f);
    let mut atoms: Vec<Term> = f
        .leaves()
        .into_iter()
        .filter(|l| !l.is_unit_leaf())
        .collect();
    if atoms.is_empty() {
        return Term::addr_unit(f.target().clone());
    }
    let head = if f.is_unitary() {
        None
    } else {
        Some(atoms.remove(0))
    };
    atoms.sort_by(|x, y| atom_key(x).cmp(&atom_key(y)));
    let mut order = head.into_iter().chain(atoms);
    let first = order.next().expect("nonempty");
    order.fold(first, |acc, atom| {
        Term::insert(&acc, &atom).expect("address order keeps every insertion legitimate")
    })
}

/// Decides `f = g` in the equational theory of their common flavor.
pub fn term_eq(f: &Term, g: &Term) -> Result<bool> {
    if f.flavor() != g.flavor() {
        return Err(Error::FlavorMismatch(format!(
            "cannot compare {} with {}",
            f.flavor(),
            g.flavor()
        )));
    }
    if f.is_unitary() != g.is_unitary() {
        return Err(Error::FlavorMismatch(
            "cannot compare unitary with non-unitary terms".to_string(),
        ));
    }
    if f.signature() != g.signature() {
        return Ok(false);
    }
    Ok(canonical_form(f) == canonical_form(g))
}

/// Default bound on the number of distinct terms explored by the oracle.
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// Every `Ou` term reachable from `f` by the axiomatic equations, applied in
/// either direction at any position.
///
/// Introducing units is unbounded in principle, so terms may carry at most
/// `max_units` unit atoms (at least as many as `f` has). Exceeding `bound`
/// distinct terms yields `BoundExceeded` with the terms found so far.
pub fn closure_oracle(f: &Term, bound: usize, max_units: usize) -> Result<BTreeSet<Term>> {
    require(f, Flavor::Ou)?;
    let max_units = max_units.max(count_units(f));
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(f.clone());
    queue.push_back(f.clone());
    while let Some(cur) = queue.pop_front() {
        for next in neighbours(&cur, max_units) {
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= bound {
                return Err(Error::BoundExceeded {
                    bound,
                    partial: Box::new(seen.into_iter().collect()),
                });
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(seen.into_iter().collect())
}

fn count_units(f: &Term) -> usize {
    f.leaves().iter().filter(|l| l.is_unit_leaf()).count()
}

/// One-step rewrites of `t` at its root.
fn root_rewrites(t: &Term, allow_new_unit: bool) -> Vec<Term> {
    let mut out = Vec::new();
    if let Some((l, f)) = t.operands() {
        if let Some((h, g)) = l.operands() {
            // (h∘g)∘f = h∘(g∘f)
            if let Ok(r) = Term::insert(g, f).and_then(|gf| Term::insert(h, &gf)) {
                out.push(r);
            }
            // (h∘g)∘f = (h∘f)∘g
            if let Ok(r) = Term::insert(h, f).and_then(|hf| Term::insert(&hf, g)) {
                out.push(r);
            }
        }
        if let Some((g, f2)) = f.operands() {
            // h∘(g∘f) = (h∘g)∘f
            if let Ok(r) = Term::insert(l, g).and_then(|hg| Term::insert(&hg, f2)) {
                out.push(r);
            }
        }
        // f∘a·Ι = f and t(f)·Ι∘f = f
        if f.is_unit_leaf() {
            out.push(l.clone());
        }
        if l.is_unit_leaf() && l.target() == f.target() {
            out.push(f.clone());
        }
    }
    if allow_new_unit && t.is_unitary() {
        for a in t.source().iter() {
            out.push(Term::insert(t, &Term::addr_unit(a.clone())).expect("a ∈ s(t)"));
        }
        out.push(Term::insert(&Term::addr_unit(t.target().clone()), t).expect("t(t) ∈ {t(t)}"));
    }
    out
}

fn neighbours(t: &Term, max_units: usize) -> Vec<Term> {
    let allow_new_unit = count_units(t) < max_units;
    let mut out = Vec::new();
    for path in t.positions() {
        let sub = t.subterm(&path).expect("position of t");
        for r in root_rewrites(sub, allow_new_unit) {
            out.push(t.replace(&path, &r).expect("equations preserve s and t"));
        }
    }
    out
}
