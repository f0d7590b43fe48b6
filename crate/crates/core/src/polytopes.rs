//! Objects, basic-arrow edges and equation faces of `WOu⁻(X, e)` for
//! tree-shaped inputs, with S-tree names and DOT/JSON emission.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::addresses::{NWord, NominalArity};
use crate::arrows::{Arrow, AssocKind, AxiomFamily, Equation};
use crate::error::{show_path, Error, Result, TreePath};
use crate::terms::{Generator, GeneratorSignature, Term};

/// A finite tree given by its leaves, with a generator on every non-leaf vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeInput {
    leaves: NominalArity,
    atoms: BTreeMap<NWord, Generator>,
    names: BTreeMap<NWord, String>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidTree(msg.into())
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

impl TreeInput {
    /// `labels` maps every non-leaf vertex to a generator name; `rename`
    /// optionally gives inner vertices short names (default: the address).
    pub fn new(
        sig: &GeneratorSignature,
        leaves: NominalArity,
        labels: &BTreeMap<NWord, String>,
        rename: &BTreeMap<NWord, String>,
    ) -> Result<TreeInput> {
        if leaves.is_empty() {
            return Err(invalid("the leaf set is empty"));
        }
        if leaves.contains(&NWord::empty()) {
            return Err(invalid("the root cannot be a leaf"));
        }
        let mut children: BTreeMap<NWord, BTreeSet<u32>> = BTreeMap::new();
        for x in leaves.iter() {
            let d = x.digits();
            for k in 0..d.len() {
                let v = NWord::new(d[..k].to_vec())?;
                children.entry(v).or_default().insert(d[k]);
            }
        }
        let mut atoms = BTreeMap::new();
        for (v, digits) in &children {
            let n = digits.len() as u32;
            if digits.iter().copied().ne(1..=n) {
                return Err(invalid(format!(
                    "children of vertex {v} are not numbered 1..{n}"
                )));
            }
            if n < 2 {
                return Err(invalid(format!("vertex {v} has a single child")));
            }
            let name = labels
                .get(v)
                .ok_or_else(|| invalid(format!("vertex {v} has no label")))?;
            let gen = sig.get(name)?;
            if gen.arity != n {
                return Err(invalid(format!(
                    "vertex {v} has {n} children but {name} has arity {}",
                    gen.arity
                )));
            }
            atoms.insert(v.clone(), gen);
        }
        if let Some(v) = labels.keys().find(|v| !atoms.contains_key(*v)) {
            return Err(invalid(format!(
                "label given for {v}, which is not a vertex"
            )));
        }
        let mut names = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for v in atoms.keys().filter(|v| !v.is_empty()) {
            let name = rename.get(v).cloned().unwrap_or_else(|| v.to_string());
            if !valid_name(&name) {
                return Err(invalid(format!("`{name}` is not a valid vertex name")));
            }
            if !seen.insert(name.clone()) {
                return Err(invalid(format!("vertex name `{name}` is used twice")));
            }
            names.insert(v.clone(), name);
        }
        if let Some(v) = rename.keys().find(|v| !names.contains_key(*v)) {
            return Err(invalid(format!("{v} is not an inner vertex")));
        }
        Ok(TreeInput {
            leaves,
            atoms,
            names,
        })
    }

    pub fn leaves(&self) -> &NominalArity {
        &self.leaves
    }

    /// The atoms `a·label(a)`, one per non-leaf vertex.
    pub fn atoms(&self) -> Vec<Term> {
        self.atoms
            .iter()
            .map(|(a, g)| Term::addr_gen(false, a.clone(), g))
            .collect()
    }

    /// Inner vertices (neither root nor leaf) with their display names.
    pub fn inner_vertices(&self) -> &BTreeMap<NWord, String> {
        &self.names
    }

    /// Whether objects and S-trees are in bijection: every generator used
    /// has arity at least two, and distinct generators have distinct arities.
    pub fn stree_bijective(&self) -> bool {
        let mut by_arity: BTreeMap<u32, &str> = BTreeMap::new();
        self.atoms
            .values()
            .all(|g| g.arity >= 2 && *by_arity.entry(g.arity).or_insert(&g.name) == &*g.name)
    }
}

fn parse_pairs(text: &str, what: &str) -> Result<BTreeMap<NWord, String>> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [addr, name] = parts[..] else {
            return Err(Error::Syntax {
                line: i + 1,
                column: 1,
                expected: vec![format!("`address {what}`")],
            });
        };
        let a: NWord = addr.parse()?;
        if out.insert(a.clone(), name.to_string()).is_some() {
            return Err(invalid(format!("address {a} is listed twice")));
        }
    }
    Ok(out)
}

/// Parses lines `address generator` (`#` starts a comment).
pub fn parse_labels(text: &str) -> Result<BTreeMap<NWord, String>> {
    parse_pairs(text, "generator")
}

/// Parses lines `address name` (`#` starts a comment).
pub fn parse_rename(text: &str) -> Result<BTreeMap<NWord, String>> {
    parse_pairs(text, "name")
}

/// A destruction record: `·` sequences vertex removals, `+` runs
/// independent destructions in parallel.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum STree {
    Vertex(String),
    Seq(Vec<STree>),
    Par(Vec<STree>),
}

impl STree {
    fn vertices_into(&self, out: &mut Vec<String>) {
        match self {
            STree::Vertex(v) => out.push(v.clone()),
            STree::Seq(xs) | STree::Par(xs) => xs.iter().for_each(|x| x.vertices_into(out)),
        }
    }

    /// Vertex names, sorted.
    pub fn vertices(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.vertices_into(&mut out);
        out.sort();
        out
    }

    /// `x · y`, flattened.
    pub fn seq(x: STree, y: Option<STree>) -> STree {
        let mut items = match x {
            STree::Seq(xs) => xs,
            other => vec![other],
        };
        match y {
            None => {}
            Some(STree::Seq(ys)) => items.extend(ys),
            Some(other) => items.push(other),
        }
        if items.len() == 1 {
            items.pop().unwrap()
        } else {
            STree::Seq(items)
        }
    }

    /// `x + y`, flattened with branches in canonical order; `None` is empty.
    pub fn par(parts: impl IntoIterator<Item = Option<STree>>) -> Option<STree> {
        let mut items = Vec::new();
        for p in parts.into_iter().flatten() {
            match p {
                STree::Par(xs) => items.extend(xs),
                other => items.push(other),
            }
        }
        items.sort_by_cached_key(|x| (x.vertices(), x.to_string()));
        match items.len() {
            0 => None,
            1 => items.pop(),
            _ => Some(STree::Par(items)),
        }
    }

    /// The S-tree of an object; `None` for a single atom.
    pub fn of_term(f: &Term, input: &TreeInput) -> Option<STree> {
        let (g, h) = f.operands()?;
        let name = input
            .names
            .get(h.target())
            .cloned()
            .unwrap_or_else(|| h.target().to_string());
        let rest = STree::par([STree::of_term(g, input), STree::of_term(h, input)]);
        Some(STree::seq(STree::Vertex(name), rest))
    }

    /// Rebuilds the object whose S-tree is `s` (`None` for the root atom alone).
    pub fn to_term(s: Option<&STree>, input: &TreeInput) -> Result<Term> {
        let by_name: BTreeMap<&str, &NWord> =
            input.names.iter().map(|(a, n)| (n.as_str(), a)).collect();
        let all: BTreeSet<NWord> = input.atoms.keys().cloned().collect();
        assemble(s, all, &by_name, input)
    }

    /// Parses `c.((b.a)+d)` and normalizes it.
    pub fn parse(text: &str) -> Result<STree> {
        let toks: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_sum(&toks, &mut pos)?;
        if pos != toks.len() {
            return Err(stree_syntax(pos, "end of input"));
        }
        Ok(t)
    }
}

fn stree_syntax(pos: usize, expected: &str) -> Error {
    Error::Syntax {
        line: 1,
        column: pos + 1,
        expected: vec![expected.to_string()],
    }
}

fn parse_sum(t: &[char], pos: &mut usize) -> Result<STree> {
    let mut parts = vec![Some(parse_seq(t, pos)?)];
    while t.get(*pos) == Some(&'+') {
        *pos += 1;
        parts.push(Some(parse_seq(t, pos)?));
    }
    Ok(STree::par(parts).expect("nonempty"))
}

fn parse_seq(t: &[char], pos: &mut usize) -> Result<STree> {
    let mut items = vec![parse_atom(t, pos)?];
    while t.get(*pos) == Some(&'.') {
        *pos += 1;
        items.push(parse_atom(t, pos)?);
    }
    let last = items.pop().expect("nonempty");
    Ok(items
        .into_iter()
        .rev()
        .fold(last, |acc, x| STree::seq(x, Some(acc))))
}

fn parse_atom(t: &[char], pos: &mut usize) -> Result<STree> {
    if t.get(*pos) == Some(&'(') {
        *pos += 1;
        let inner = parse_sum(t, pos)?;
        if t.get(*pos) != Some(&')') {
            return Err(stree_syntax(*pos, "`)`"));
        }
        *pos += 1;
        return Ok(inner);
    }
    let start = *pos;
    while t
        .get(*pos)
        .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '-')
    {
        *pos += 1;
    }
    if start == *pos {
        return Err(stree_syntax(start, "a vertex name or `(`"));
    }
    Ok(STree::Vertex(t[start..*pos].iter().collect()))
}

/// Builds the term over `atoms` destroyed as recorded by `s`.
fn assemble(
    s: Option<&STree>,
    atoms: BTreeSet<NWord>,
    by_name: &BTreeMap<&str, &NWord>,
    input: &TreeInput,
) -> Result<Term> {
    let bad = |msg: String| invalid(format!("S-tree does not fit the tree: {msg}"));
    let Some(s) = s else {
        if atoms.len() != 1 {
            return Err(bad(format!(
                "{} atoms left at a leaf of the S-tree",
                atoms.len()
            )));
        }
        let a = atoms.into_iter().next().unwrap();
        return Ok(Term::addr_gen(false, a.clone(), &input.atoms[&a]));
    };
    let tail;
    let (head, rest): (&STree, Vec<&STree>) = match s {
        STree::Vertex(_) => (s, Vec::new()),
        STree::Seq(xs) if xs.len() == 2 => match &xs[1] {
            STree::Par(ys) => (&xs[0], ys.iter().collect()),
            other => (&xs[0], vec![other]),
        },
        STree::Seq(xs) => {
            tail = STree::Seq(xs[1..].to_vec());
            (&xs[0], vec![&tail])
        }
        STree::Par(_) => return Err(bad("two parallel destructions of one piece".into())),
    };
    let STree::Vertex(name) = head else {
        return Err(bad("a sequence must start with a vertex".into()));
    };
    let v = *by_name
        .get(name.as_str())
        .ok_or_else(|| bad(format!("unknown vertex `{name}`")))?;
    if !atoms.contains(v) {
        return Err(bad(format!("vertex `{name}` is not available here")));
    }
    let (below, above): (BTreeSet<NWord>, BTreeSet<NWord>) =
        atoms.into_iter().partition(|a| v.is_initial_segment_of(a));
    let within = |c: &STree, set: &BTreeSet<NWord>| {
        c.vertices()
            .iter()
            .all(|n| by_name.get(n.as_str()).is_some_and(|a| set.contains(*a)))
    };
    let mut up = Vec::new();
    let mut down = Vec::new();
    for c in rest {
        if within(c, &below) {
            down.push(c);
        } else if within(c, &above) {
            up.push(c);
        } else {
            return Err(bad(format!("component {c} straddles vertex `{name}`")));
        }
    }
    if up.len() > 1 || down.len() > 1 {
        return Err(bad("two parallel destructions of one piece".into()));
    }
    let g = assemble(up.first().copied(), above, by_name, input)?;
    let f = assemble(down.first().copied(), below, by_name, input)?;
    Term::insert(&g, &f)
}

impl fmt::Display for STree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            STree::Vertex(v) => write!(f, "{v}"),
            STree::Seq(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ".")?;
                    }
                    match x {
                        STree::Par(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            STree::Par(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    match x {
                        STree::Seq(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

/// Every non-unitary `Ou` term using each atom once, with `s = X` and `t = e`.
pub fn enumerate_objects(input: &TreeInput) -> Vec<Term> {
    let start: BTreeSet<Term> = input.atoms().into_iter().collect();
    let mut seen = BTreeSet::new();
    let mut out = BTreeSet::new();
    let mut stack = vec![start];
    while let Some(state) = stack.pop() {
        if state.len() == 1 {
            let f = state.into_iter().next().unwrap();
            if f.source() == &input.leaves && f.target().is_empty() {
                out.insert(f);
            }
            continue;
        }
        for g in &state {
            for f in &state {
                if g == f || !g.source().contains(f.target()) {
                    continue;
                }
                let Ok(gf) = Term::insert(g, f) else { continue };
                let mut next = state.clone();
                next.remove(g);
                next.remove(f);
                next.insert(gf);
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// A basic arrow (`β`, `β⁻¹` or `θ`) out of a term, at a subterm position.
#[derive(Debug, Clone)]
pub struct Move {
    pub path: TreePath,
    pub kind: AssocKind,
    pub basic: Arrow,
    pub arrow: Arrow,
}

impl Move {
    pub fn target(&self) -> &Term {
        self.arrow.target()
    }
}

/// All basic arrows with source `t`.
pub fn moves(t: &Term) -> Vec<Move> {
    let mut out = Vec::new();
    for path in t.positions() {
        let sub = t.subterm(&path).expect("position of t");
        let Some((l, r)) = sub.operands() else {
            continue;
        };
        let mut basics = Vec::new();
        if let Some((h, g)) = l.operands() {
            basics.push((AssocKind::Beta, Arrow::beta(h, g, r)));
            basics.push((AssocKind::Theta, Arrow::theta(h, g, r)));
        }
        if let Some((g, f)) = r.operands() {
            basics.push((AssocKind::BetaInv, Arrow::beta_inv(l, g, f)));
        }
        for (kind, basic) in basics {
            let Ok(basic) = basic else { continue };
            if basic.source() != sub {
                continue;
            }
            let arrow = Arrow::in_context(t, &path, &basic).expect("basic arrow fits");
            out.push(Move {
                path: path.clone(),
                kind,
                basic,
                arrow,
            });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeLabel {
    #[serde(rename = "β")]
    Beta,
    #[serde(rename = "θ")]
    Theta,
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeLabel::Beta => "β",
            EdgeLabel::Theta => "θ",
        })
    }
}

/// An edge `from → to`; for `β` edges `from` is the source of `β`.
#[derive(Debug, Clone)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: EdgeLabel,
    pub position: TreePath,
    pub arrow: Arrow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub cycle: Vec<usize>,
    pub family: AxiomFamily,
}

#[derive(Debug, Clone)]
pub struct Vertex {
    pub object: Term,
    pub name: String,
}

#[derive(Debug, Clone)]
pub struct Skeleton {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
}

/// Names objects by their S-trees and orders them by name.
pub fn name_objects(objects: &[Term], input: &TreeInput) -> Vec<Vertex> {
    let mut vs: Vec<Vertex> = objects
        .iter()
        .map(|f| Vertex {
            object: f.clone(),
            name: STree::of_term(f, input)
                .map(|s| s.to_string())
                .unwrap_or_else(|| "1".to_string()),
        })
        .collect();
    vs.sort_by(|a, b| (&a.name, &a.object).cmp(&(&b.name, &b.object)));
    vs
}

fn index_of(vertices: &[Vertex]) -> BTreeMap<&Term, usize> {
    vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (&v.object, i))
        .collect()
}

/// One undirected edge per pair of objects related by a single `β` or `θ`.
pub fn edges(vertices: &[Vertex]) -> Vec<Edge> {
    let index = index_of(vertices);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (i, v) in vertices.iter().enumerate() {
        for m in moves(&v.object) {
            let label = match m.kind {
                AssocKind::Beta => EdgeLabel::Beta,
                AssocKind::Theta => EdgeLabel::Theta,
                AssocKind::BetaInv => continue,
            };
            let Some(&j) = index.get(m.target()) else {
                continue;
            };
            if i == j || !seen.insert((i.min(j), i.max(j))) {
                continue;
            }
            out.push(Edge {
                from: i,
                to: j,
                label,
                position: m.path.clone(),
                arrow: m.arrow.clone(),
            });
        }
    }
    out.sort_by_key(|e| (e.from.min(e.to), e.from.max(e.to)));
    out
}

/// Objects visited by an arrow that is a composite of basic arrows.
fn path_of(a: &Arrow) -> Vec<Term> {
    match a.node() {
        crate::arrows::ArrowNode::Comp(v, u) => {
            let mut p = path_of(u);
            p.extend(path_of(v).into_iter().skip(1));
            p
        }
        _ => vec![a.source().clone(), a.target().clone()],
    }
}

fn cycle_of(eq: &Equation) -> Vec<Term> {
    let mut cycle = path_of(&eq.lhs);
    let rhs = path_of(&eq.rhs);
    cycle.extend(rhs[1..rhs.len() - 1].iter().rev().cloned());
    cycle
}

fn four_factor(s: &Term) -> Option<(&Term, &Term, &Term, &Term)> {
    let (jhg, f) = s.operands()?;
    let (jh, g) = jhg.operands()?;
    let (j, h) = jh.operands()?;
    Some((j, h, g, f))
}

type FourFactor = fn(&Term, &Term, &Term, &Term) -> Result<Equation>;

/// Local face candidates rooted at `s`: boundary cycles with their equation.
fn local_faces(s: &Term) -> Vec<(Vec<Term>, AxiomFamily)> {
    let mut out = Vec::new();
    if let Some((j, h, g, f)) = four_factor(s) {
        let builders: [FourFactor; 4] = [
            Equation::beta_pent,
            Equation::theta_yb,
            Equation::beta_theta1,
            Equation::beta_theta2,
        ];
        for build in builders {
            if let Ok(eq) = build(j, h, g, f) {
                out.push((cycle_of(&eq), eq.family));
            }
        }
    }
    let Some((hg, f)) = s.operands() else {
        return out;
    };
    if let Some((h, g)) = hg.operands() {
        let (ih, ig, i_f) = (Arrow::id(h), Arrow::id(g), Arrow::id(f));
        let nat = |w: &Arrow, v: &Arrow, u: &Arrow, out: &mut Vec<_>| {
            for eq in [Equation::beta_nat(w, v, u), Equation::theta_nat(w, v, u)]
                .into_iter()
                .flatten()
            {
                out.push((cycle_of(&eq), eq.family));
            }
        };
        for m in moves(h) {
            nat(&m.arrow, &ig, &i_f, &mut out);
        }
        for m in moves(g) {
            nat(&ih, &m.arrow, &i_f, &mut out);
        }
        for m in moves(f) {
            nat(&ih, &ig, &m.arrow, &mut out);
        }
    }
    let (l, r) = (hg, f);
    for ml in moves(l) {
        for mr in moves(r) {
            let Ok(eq) =
                Equation::ins2(&Arrow::id(ml.target()), &ml.arrow, &mr.arrow, &Arrow::id(r))
            else {
                continue;
            };
            out.push((cycle_of(&eq), eq.family));
        }
    }
    out
}

fn canonical_cycle(mut c: Vec<usize>) -> Vec<usize> {
    let k = (0..c.len()).min_by_key(|&i| c[i]).unwrap_or(0);
    c.rotate_left(k);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

/// Two-dimensional faces found by instantiating the equations at every
/// object and subterm; deduplicated by vertex set.
pub fn classify_faces(vertices: &[Vertex], edges: &[Edge]) -> Vec<Face> {
    let index = index_of(vertices);
    let edge_set: BTreeSet<(usize, usize)> = edges
        .iter()
        .map(|e| (e.from.min(e.to), e.from.max(e.to)))
        .collect();
    let mut by_set: BTreeMap<BTreeSet<usize>, Face> = BTreeMap::new();
    for v in vertices {
        let obj = &v.object;
        for path in obj.positions() {
            let s = obj.subterm(&path).expect("position of object");
            for (local, family) in local_faces(s) {
                let Ok(cycle) = local
                    .iter()
                    .map(|t| obj.replace(&path, t).map(|o| index.get(&o).copied()))
                    .collect::<Result<Option<Vec<usize>>>>()
                else {
                    continue;
                };
                let Some(cycle) = cycle else { continue };
                let set: BTreeSet<usize> = cycle.iter().copied().collect();
                if set.len() != cycle.len() || cycle.len() < 3 {
                    continue;
                }
                let closed = (0..cycle.len()).all(|i| {
                    let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                    edge_set.contains(&(a.min(b), a.max(b)))
                });
                if !closed {
                    continue;
                }
                by_set.entry(set).or_insert(Face {
                    cycle: canonical_cycle(cycle),
                    family,
                });
            }
        }
    }
    let mut faces: Vec<Face> = by_set.into_values().collect();
    faces.sort_by(|a, b| (a.family, &a.cycle).cmp(&(b.family, &b.cycle)));
    faces
}

impl Skeleton {
    pub fn build(input: &TreeInput) -> Skeleton {
        let vertices = name_objects(&enumerate_objects(input), input);
        let edges = edges(&vertices);
        let faces = classify_faces(&vertices, &edges);
        Skeleton {
            vertices,
            edges,
            faces,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn edge_count(&self, label: EdgeLabel) -> usize {
        self.edges.iter().filter(|e| e.label == label).count()
    }

    pub fn face_counts(&self) -> BTreeMap<AxiomFamily, usize> {
        let mut out = BTreeMap::new();
        for f in &self.faces {
            *out.entry(f.family).or_insert(0) += 1;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph skeleton {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", v.name));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  n{} -- n{} [label=\"{}\"];\n",
                e.from, e.to, e.label
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct V<'a> {
            index: usize,
            name: &'a str,
            term: String,
        }
        #[derive(Serialize)]
        struct E {
            from: usize,
            to: usize,
            label: EdgeLabel,
            position: String,
        }
        #[derive(Serialize)]
        struct F<'a> {
            cycle: &'a [usize],
            equation: &'static str,
        }
        #[derive(Serialize)]
        struct S<'a> {
            vertices: Vec<V<'a>>,
            edges: Vec<E>,
            faces: Vec<F<'a>>,
        }
        let doc = S {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(index, v)| V {
                    index,
                    name: &v.name,
                    term: v.object.to_string(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| E {
                    from: e.from,
                    to: e.to,
                    label: e.label,
                    position: show_path(&e.position),
                })
                .collect(),
            faces: self
                .faces
                .iter()
                .map(|f| F {
                    cycle: &f.cycle,
                    equation: f.family.name(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

pub fn emit(skeleton: &Skeleton, format: Format) -> String {
    match format {
        Format::Dot => skeleton.to_dot(),
        Format::Json => skeleton.to_json(),
    }
}
