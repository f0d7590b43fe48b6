//! Deterministic workloads shared by the benchmarks.

use std::collections::BTreeMap;

use weakop_core::perm::{FullSymmetric, PermArrow};
use weakop_core::polytopes::parse_labels;
use weakop_core::{Arrow, Generator, NWord, Term, TreeInput};

fn binary() -> Generator {
    Generator::new("x", 2)
}

/// `(((e*x o 1*x) o 2*x) o 1-1*x) ...`: a left comb of `n` binary atoms
/// filling the complete tree breadth first.
pub fn comb(n: usize) -> Term {
    let x = binary();
    let mut slots = std::collections::VecDeque::from([NWord::empty()]);
    let mut t: Option<Term> = None;
    for _ in 0..n {
        let a = slots.pop_front().expect("binary tree always has a slot");
        slots.extend([a.child(1), a.child(2)]);
        let atom = Term::addr_gen(false, a, &x);
        t = Some(match t {
            None => atom,
            Some(g) => Term::insert(&g, &atom).expect("slot is free"),
        });
    }
    t.expect("n > 0")
}

/// A composite of `len` θ steps out of a comb with `n` atoms.
pub fn theta_chain(n: usize, len: usize) -> Arrow {
    let mut u = Arrow::id(&comb(n));
    for i in 0..len {
        let t = u.target().clone();
        let step = t
            .positions()
            .into_iter()
            .filter_map(|p| {
                let s = t.subterm(&p)?;
                let (hg, f) = s.operands()?;
                let (h, g) = hg.operands()?;
                let th = Arrow::theta(h, g, f).ok()?;
                Arrow::in_context(&t, &p, &th).ok()
            })
            .nth(i % 2);
        match step {
            Some(s) => u = Arrow::comp(&s, &u).expect("chain"),
            None => break,
        }
    }
    u
}

/// The reversal permutation on `n` distinct letters as adjacent swaps.
pub fn reversal(n: usize) -> PermArrow<u32> {
    let mut u = PermArrow::identity((0..n as u32).collect());
    for i in 0..n {
        for j in 0..n - 1 - i {
            let w = u.target();
            let g = PermArrow::generator(
                &FullSymmetric,
                w[..j].to_vec(),
                w[j],
                w[j + 1],
                w[j + 2..].to_vec(),
            )
            .expect("all swaps are generators");
            u = u.then(&g).expect("chain");
        }
    }
    u
}

/// Five binary vertices: the root, both children and both children of `1`.
pub fn balanced_tree() -> TreeInput {
    let sig = weakop_core::GeneratorSignature::new().with("x", 2);
    let labels = parse_labels("e x\n1 x\n2 x\n1-1 x\n1-2 x\n").expect("labels");
    TreeInput::new(
        &sig,
        "{1-1-1,1-1-2,1-2-1,1-2-2,2-1,2-2}".parse().expect("leaves"),
        &labels,
        &BTreeMap::new(),
    )
    .expect("valid tree")
}
