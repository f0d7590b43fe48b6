#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use weakop_core::arrows::{Arrow, Equation};
use weakop_core::polytopes::moves;
use weakop_core::{Flavor, Generator, GeneratorSignature, NWord, Term};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn sig(pairs: &[(&str, u32)]) -> GeneratorSignature {
    pairs
        .iter()
        .fold(GeneratorSignature::new(), |s, (n, a)| s.with(n, *a))
}

pub fn gens(sig: &GeneratorSignature) -> Vec<Generator> {
    sig.generators().collect()
}

/// Random `O` term with `leaves` leaves.
pub fn random_o(r: &mut Rng8, gens: &[Generator], unitary: bool, leaves: usize) -> Term {
    if leaves <= 1 {
        if unitary && r.gen_bool(0.2) {
            return Term::unit(Flavor::O).unwrap();
        }
        return Term::generator(Flavor::O, unitary, gens.choose(r).unwrap()).unwrap();
    }
    let k = r.gen_range(1..leaves);
    let g = random_o(r, gens, unitary, k);
    let f = random_o(r, gens, unitary, leaves - k);
    let n = r.gen_range(1..=g.arity());
    Term::insert_at(&g, n, &f).unwrap()
}

/// Random `Oe` term with `leaves` leaves.
pub fn random_oe(r: &mut Rng8, gens: &[Generator], unitary: bool, leaves: usize) -> Term {
    if leaves <= 1 {
        if unitary && r.gen_bool(0.2) {
            return Term::unit(Flavor::Oe).unwrap();
        }
        return Term::generator(Flavor::Oe, unitary, gens.choose(r).unwrap()).unwrap();
    }
    let k = r.gen_range(1..leaves);
    let g = random_oe(r, gens, unitary, k);
    let f = random_oe(r, gens, unitary, leaves - k);
    let a = g
        .source()
        .iter()
        .collect::<Vec<_>>()
        .choose(r)
        .cloned()
        .unwrap()
        .clone();
    Term::insert_at_word(&g, &a, &f).unwrap()
}

/// Random word of length `0..=max_len` over digits `1..=max_digit`.
pub fn random_word(r: &mut Rng8, max_len: usize, max_digit: u32) -> NWord {
    let n = r.gen_range(0..=max_len);
    NWord::new((0..n).map(|_| r.gen_range(1..=max_digit)).collect()).unwrap()
}

/// Random atoms hanging together as a tree rooted at `root`: each new atom
/// occupies a free slot of the atoms placed so far.
pub fn random_atoms(
    r: &mut Rng8,
    gens: &[Generator],
    unitary: bool,
    units: usize,
    atoms: usize,
    root: NWord,
) -> Vec<Term> {
    let mut kinds: Vec<bool> = std::iter::repeat_n(false, atoms.max(1))
        .chain(std::iter::repeat_n(true, if unitary { units } else { 0 }))
        .collect();
    kinds[1..].shuffle(r);
    let mut slots = vec![root];
    let mut out = Vec::new();
    for is_unit in kinds {
        let i = r.gen_range(0..slots.len());
        let a = slots.swap_remove(i);
        if is_unit {
            out.push(Term::addr_unit(a.clone()));
            slots.push(a);
        } else {
            let g = gens.choose(r).unwrap();
            let t = Term::addr_gen(unitary, a.clone(), g);
            slots.extend(t.source().iter().cloned());
            out.push(t);
        }
    }
    out
}

/// Joins `pieces` by random legitimate insertions until one term remains.
pub fn random_assembly(r: &mut Rng8, mut pieces: Vec<Term>) -> Option<Term> {
    while pieces.len() > 1 {
        let mut pairs = Vec::new();
        for (i, g) in pieces.iter().enumerate() {
            for (j, f) in pieces.iter().enumerate() {
                if i != j && g.source().contains(f.target()) {
                    pairs.push((i, j));
                }
            }
        }
        let &(i, j) = pairs.choose(r)?;
        let t = Term::insert(&pieces[i], &pieces[j]).ok()?;
        let (hi, lo) = (i.max(j), i.min(j));
        pieces.swap_remove(hi);
        pieces.swap_remove(lo);
        pieces.push(t);
    }
    pieces.pop()
}

/// Random `Ou` term with the given numbers of generator and unit atoms.
pub fn random_ou(
    r: &mut Rng8,
    gens: &[Generator],
    unitary: bool,
    units: usize,
    atoms: usize,
) -> Term {
    loop {
        let root = random_word(r, 2, 2);
        let pieces = random_atoms(r, gens, unitary, units, atoms, root);
        if let Some(t) = random_assembly(r, pieces) {
            return t;
        }
    }
}

/// Basic arrows out of `t`, including unit introductions and eliminations
/// when `t` is unitary.
pub fn all_moves(t: &Term) -> Vec<Arrow> {
    let mut out: Vec<Arrow> = moves(t).into_iter().map(|m| m.arrow).collect();
    if !t.is_unitary() {
        return out;
    }
    for path in t.positions() {
        let s = t.subterm(&path).unwrap();
        let mut basics = Vec::new();
        for a in s.source().iter() {
            basics.extend(Arrow::mu_inv(s, a));
        }
        basics.extend(Arrow::lambda_inv(s));
        if let Some((g, f)) = s.operands() {
            if f.is_unit_leaf() {
                basics.extend(Arrow::mu(g, f.target()));
            }
            if g.is_unit_leaf() && g.target() == f.target() {
                basics.extend(Arrow::lambda(f));
            }
        }
        for b in basics {
            out.push(Arrow::in_context(t, &path, &b).unwrap());
        }
    }
    out
}

/// Composite of up to `len` random basic arrows out of `t`, keeping unit
/// atoms below `max_units`.
pub fn random_arrow(r: &mut Rng8, t: &Term, len: usize, max_units: usize) -> Arrow {
    let mut u = Arrow::id(t);
    for _ in 0..len {
        let cands: Vec<Arrow> = all_moves(u.target())
            .into_iter()
            .filter(|m| unit_count(m.target()) <= max_units)
            .collect();
        let Some(m) = cands.choose(r) else { break };
        u = Arrow::comp(m, &u).unwrap();
    }
    u
}

pub fn unit_count(t: &Term) -> usize {
    t.leaves().iter().filter(|l| l.is_unit_leaf()).count()
}

fn four_factor(s: &Term) -> Option<(&Term, &Term, &Term, &Term)> {
    let (jhg, f) = s.operands()?;
    let (jh, g) = jhg.operands()?;
    let (j, h) = jh.operands()?;
    Some((j, h, g, f))
}

/// Every equation instance (with random arrows for the natural ones) whose
/// two sides start at `s`.
pub fn local_equations(r: &mut Rng8, s: &Term) -> Vec<Equation> {
    let mut out = Vec::new();
    if let Some((j, h, g, f)) = four_factor(s) {
        out.extend(Equation::beta_pent(j, h, g, f));
        out.extend(Equation::theta_yb(j, h, g, f));
        out.extend(Equation::beta_theta1(j, h, g, f));
        out.extend(Equation::beta_theta2(j, h, g, f));
    }
    if let Some((l, f)) = s.operands() {
        out.extend(Equation::ins1(l, f));
        let v1 = random_arrow(r, l, 1, 1);
        let v2 = random_arrow(r, v1.target(), 1, 1);
        let u1 = random_arrow(r, f, 1, 1);
        let u2 = random_arrow(r, u1.target(), 1, 1);
        out.extend(Equation::ins2(&v2, &v1, &u2, &u1));
        if let Some((h, g)) = l.operands() {
            if let Ok([e, _]) = Equation::beta_beta(h, g, f) {
                out.push(e);
            }
            out.extend(Equation::theta_theta(h, g, f));
            let mut args = [Arrow::id(h), Arrow::id(g), Arrow::id(f)];
            let k = r.gen_range(0..3);
            args[k] = random_arrow(r, args[k].source(), 2, 1);
            out.extend(Equation::beta_nat(&args[0], &args[1], &args[2]));
            out.extend(Equation::theta_nat(&args[0], &args[1], &args[2]));
            if g.is_unit_leaf() {
                if g.target() == f.target() {
                    out.extend(Equation::beta_mu_lambda(h, f));
                } else {
                    out.extend(Equation::theta_mu(h, g.target(), f));
                }
            }
        }
        if let Some((g, f2)) = f.operands() {
            if let Ok([_, e]) = Equation::beta_beta(l, g, f2) {
                out.push(e);
            }
        }
        if f.is_unit_leaf() {
            if let Ok([e, _]) = Equation::mu_mu(l, f.target()) {
                out.push(e);
            }
            let u = random_arrow(r, l, 2, 1);
            out.extend(Equation::mu_nat(&u, f.target()));
        }
        if l.is_unit_leaf() && l.target() == f.target() {
            if let Ok([e, _]) = Equation::lambda_lambda(f) {
                out.push(e);
            }
            let u = random_arrow(r, f, 2, 1);
            out.extend(Equation::lambda_nat(&u));
        }
    }
    if s.is_unitary() {
        if let Some(a) = s.source().iter().next() {
            if let Ok([_, e]) = Equation::mu_mu(s, a) {
                out.push(e);
            }
        }
        if let Ok([_, e]) = Equation::lambda_lambda(s) {
            out.push(e);
        }
    }
    out
}
