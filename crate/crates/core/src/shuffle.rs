//! The shuffle product of a delegation and the equations it satisfies.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::clans::{Delegation, Mode, RefinedIndex, Source, Team};
use crate::constructs::{cartesian, enumerate, restrict_unchecked, validate, Construct};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::qalgebra::{graft, LinearConstruct, QPolynomial};

/// How the parameter `q` is treated while multiplying.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QMode {
    /// Keep `q` as a formal variable.
    Symbolic,
    /// Substitute an integer for `q` at every step.
    At(i64),
}

impl QMode {
    /// Strict teams multiply with a formal `q`; semi-strict ones at `q = -1`.
    pub fn default_for(mode: Mode) -> QMode {
        match mode {
            Mode::Strict => QMode::Symbolic,
            Mode::SemiStrict => QMode::At(-1),
        }
    }

    pub fn power(self, exp: u32) -> QPolynomial {
        match self {
            QMode::Symbolic => QPolynomial::q_pow(exp),
            QMode::At(v) => QPolynomial::constant(num_traits::pow(num_bigint::BigInt::from(v), exp as usize)),
        }
    }

    fn settle(self, a: LinearConstruct) -> LinearConstruct {
        match self {
            QMode::Symbolic => a,
            QMode::At(v) => a.evaluate_q(v),
        }
    }
}

type MemoKey = (Hypergraph, Vec<Hypergraph>, Vec<Construct>);

/// Recursive evaluator with a cache local to one top-level call.
struct Engine {
    q: QMode,
    memo: HashMap<MemoKey, LinearConstruct>,
}

fn subsets(n: usize) -> impl Iterator<Item = BTreeSet<usize>> {
    let mut all: Vec<BTreeSet<usize>> = (1u64..(1u64 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    all.sort();
    all.into_iter()
}

impl Engine {
    fn new(q: QMode) -> Self {
        Engine { q, memo: HashMap::new() }
    }

    fn product(&mut self, team: &Team, cs: &[Construct]) -> Result<LinearConstruct> {
        if team.arity() == 1 && team.participants()[0] == *team.whole() {
            return Ok(LinearConstruct::from_construct(cs[0].clone()));
        }
        let key = (team.whole().clone(), team.participants().to_vec(), cs.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let mut acc = LinearConstruct::zero(team.whole().carrier().clone());
        for b_set in subsets(team.arity()) {
            let summand = self.product_b(team, cs, &b_set)?;
            acc.add_assign(&summand.scale(&self.q.power(b_set.len() as u32 - 1)))?;
        }
        self.memo.insert(key, acc.clone());
        Ok(acc)
    }

    fn product_b(&mut self, team: &Team, cs: &[Construct], b_set: &BTreeSet<usize>) -> Result<LinearConstruct> {
        let x_sets: BTreeMap<usize, VertexSet> = b_set.iter().map(|&b| (b, cs[b].root().clone())).collect();
        let root = x_sets.values().fold(VertexSet::new(), |acc, x| acc.union(x));
        let d = team.decompose(b_set, &x_sets)?;
        let mut children = Vec::with_capacity(d.subteams.len());
        for (sub, srcs) in d.subteams.iter().zip(&d.sources) {
            let sub_cs: Vec<Construct> = srcs
                .iter()
                .map(|s| match s {
                    Source::Refined(RefinedIndex::Kept(a)) => cs[*a].clone(),
                    Source::Refined(RefinedIndex::Split(b, j)) => cs[*b].children()[*j].clone(),
                    Source::Dissolved(_, v) => Construct::leaf(VertexSet::singleton(*v)),
                })
                .collect();
            children.push(self.product(sub, &sub_cs)?);
        }
        graft(&root, &children)
    }
}

fn check_linear_parts(team: &Team, parts: &[LinearConstruct]) -> Result<()> {
    if parts.len() != team.arity() {
        return Err(Error::Arity {
            expected: team.arity(),
            found: parts.len(),
        });
    }
    for (h, p) in team.participants().iter().zip(parts) {
        if p.carrier() != h.carrier() {
            return Err(Error::MixedHypergraphs(p.carrier().to_string(), h.carrier().to_string()));
        }
        for (c, _) in p.terms() {
            validate(h, c)?;
        }
    }
    Ok(())
}

fn expand_linear(
    team: &Team,
    parts: &[LinearConstruct],
    mut f: impl FnMut(&[Construct]) -> Result<LinearConstruct>,
) -> Result<LinearConstruct> {
    let options: Vec<Vec<(Construct, QPolynomial)>> = parts
        .iter()
        .map(|p| p.terms().map(|(c, q)| (c.clone(), q.clone())).collect())
        .collect();
    let mut acc = LinearConstruct::zero(team.whole().carrier().clone());
    for choice in cartesian(&options) {
        let cs: Vec<Construct> = choice.iter().map(|(c, _)| c.clone()).collect();
        let coeff = choice
            .iter()
            .fold(QPolynomial::one(), |acc, (_, q)| &acc * q);
        acc.add_assign(&f(&cs)?.scale(&coeff))?;
    }
    Ok(acc)
}

/// The product `∗(δ)`, with `q` symbolic for strict teams and `q = -1` for
/// semi-strict ones.
pub fn shuffle(d: &Delegation) -> Result<LinearConstruct> {
    shuffle_with(d, QMode::default_for(d.team().mode()))
}

pub fn shuffle_with(d: &Delegation, q: QMode) -> Result<LinearConstruct> {
    let out = Engine::new(q).product(d.team(), d.constructs())?;
    Ok(q.settle(out))
}

/// The unweighted summand `∗_B(δ)`.
pub fn shuffle_b(d: &Delegation, b_set: &BTreeSet<usize>) -> Result<LinearConstruct> {
    shuffle_b_with(d, b_set, QMode::default_for(d.team().mode()))
}

pub fn shuffle_b_with(d: &Delegation, b_set: &BTreeSet<usize>, q: QMode) -> Result<LinearConstruct> {
    check_positions(d.team(), b_set)?;
    let out = Engine::new(q).product_b(d.team(), d.constructs(), b_set)?;
    Ok(q.settle(out))
}

fn check_positions(team: &Team, b_set: &BTreeSet<usize>) -> Result<()> {
    if b_set.is_empty() {
        return Err(Error::PreconditionViolated("empty set of positions".into()));
    }
    if let Some(&b) = b_set.iter().find(|&&b| b >= team.arity()) {
        return Err(Error::PreconditionViolated(format!("no participant at position {b}")));
    }
    Ok(())
}

/// `∗` extended to linear constructs by multilinearity.
pub fn shuffle_linear(team: &Team, parts: &[LinearConstruct], q: QMode) -> Result<LinearConstruct> {
    check_linear_parts(team, parts)?;
    let mut engine = Engine::new(q);
    let out = expand_linear(team, parts, |cs| engine.product(team, cs))?;
    Ok(q.settle(out))
}

/// `∗_B` on linear constructs. Every position in `B` must carry a sum whose
/// terms share one root.
pub fn shuffle_b_linear(team: &Team, parts: &[LinearConstruct], b_set: &BTreeSet<usize>, q: QMode) -> Result<LinearConstruct> {
    check_linear_parts(team, parts)?;
    check_positions(team, b_set)?;
    if parts.iter().any(LinearConstruct::is_empty) {
        return Ok(LinearConstruct::zero(team.whole().carrier().clone()));
    }
    for &b in b_set {
        if parts[b].common_root().is_none() {
            return Err(Error::UnrootedAtB(b));
        }
    }
    let mut engine = Engine::new(q);
    let out = expand_linear(team, parts, |cs| engine.product_b(team, cs, b_set))?;
    Ok(q.settle(out))
}

/// The three binary operations `≺ = ∗_{l}`, `· = ∗_{l,r}`, `≻ = ∗_{r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trio {
    pub prec: LinearConstruct,
    pub dot: LinearConstruct,
    pub succ: LinearConstruct,
}

pub fn trio(d: &Delegation) -> Result<Trio> {
    trio_with(d, QMode::default_for(d.team().mode()))
}

pub fn trio_with(d: &Delegation, q: QMode) -> Result<Trio> {
    if d.team().arity() != 2 {
        return Err(Error::Arity {
            expected: 2,
            found: d.team().arity(),
        });
    }
    let mut engine = Engine::new(q);
    let mut run = |b: &[usize]| -> Result<LinearConstruct> {
        let b_set: BTreeSet<usize> = b.iter().copied().collect();
        Ok(q.settle(engine.product_b(d.team(), d.constructs(), &b_set)?))
    };
    Ok(Trio {
        prec: run(&[0])?,
        dot: run(&[0, 1])?,
        succ: run(&[1])?,
    })
}

/// The exponent of `q` carried by `u` in products over `team`.
pub fn measure(team: &Team, u: &Construct) -> Result<u32> {
    validate(team.whole(), u)?;
    if !team.is_strict() {
        return Err(Error::NotStrict("measure is defined for strict teams".into()));
    }
    measure_rec(team, u)
}

fn measure_rec(team: &Team, u: &Construct) -> Result<u32> {
    let root = u.root();
    let x_sets: BTreeMap<usize, VertexSet> = team
        .participants()
        .iter()
        .enumerate()
        .map(|(a, h)| (a, root.intersection(h.carrier())))
        .filter(|(_, x)| !x.is_empty())
        .collect();
    let b_set: BTreeSet<usize> = x_sets.keys().copied().collect();
    let d = team.decompose(&b_set, &x_sets)?;
    let mut mu = b_set.len() as u32 - 1;
    // components and children are both ordered by minimum vertex
    for (sub, child) in d.subteams.iter().zip(u.children()) {
        mu += measure_rec(sub, child)?;
    }
    Ok(mu)
}

/// Largest whole carrier accepted by [`shuffle_nonrecursive`].
pub const NONRECURSIVE_LIMIT: usize = 10;

/// The product read off from all constructs of the whole: `U` appears with
/// coefficient `q^μ(U)` exactly when it restricts to every `C_a`.
pub fn shuffle_nonrecursive(d: &Delegation) -> Result<LinearConstruct> {
    let team = d.team();
    if team.whole().len() > NONRECURSIVE_LIMIT {
        return Err(Error::TooLarge(format!(
            "{} vertices, at most {NONRECURSIVE_LIMIT} allowed",
            team.whole().len()
        )));
    }
    if !team.is_strict() {
        return Err(Error::NotStrict("non-recursive product needs a strict team".into()));
    }
    let mut out = LinearConstruct::zero(team.whole().carrier().clone());
    for u in enumerate(team.whole())? {
        let matches = team
            .participants()
            .iter()
            .zip(d.constructs())
            .all(|(h, c)| restrict_unchecked(&u, h) == *c);
        if matches {
            let mu = measure_rec(team, &u)?;
            out.add_term(u, QPolynomial::q_pow(mu))?;
        }
    }
    Ok(out)
}

/// Both sides of an equation between linear constructs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides {
    pub lhs: LinearConstruct,
    pub rhs: LinearConstruct,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

struct Grafting {
    grafted: Team,
    inner_positions: std::ops::Range<usize>,
}

fn prepare_grafting(outer: &Team, pos: usize, inner: &Team, constructs: &[Construct]) -> Result<Grafting> {
    let grafted = outer.graft(pos, inner)?;
    if constructs.len() != grafted.arity() {
        return Err(Error::Arity {
            expected: grafted.arity(),
            found: constructs.len(),
        });
    }
    for (h, c) in grafted.participants().iter().zip(constructs) {
        validate(h, c)?;
    }
    Ok(Grafting {
        grafted,
        inner_positions: pos..pos + inner.arity(),
    })
}

/// Outer factors with the inner result placed at `pos`.
fn outer_parts(outer: &Team, pos: usize, g: &Grafting, constructs: &[Construct], at_pos: LinearConstruct) -> Vec<LinearConstruct> {
    (0..outer.arity())
        .map(|a| {
            if a == pos {
                at_pos.clone()
            } else {
                let i = if a < pos { a } else { a + g.inner_positions.len() - 1 };
                LinearConstruct::from_construct(constructs[i].clone())
            }
        })
        .collect()
}

/// Both sides of the polydendriform equation for `B''` in the grafted team.
pub fn polydendriform_sides(
    outer: &Team,
    pos: usize,
    inner: &Team,
    constructs: &[Construct],
    b2: &BTreeSet<usize>,
    q: QMode,
) -> Result<Sides> {
    let g = prepare_grafting(outer, pos, inner, constructs)?;
    check_positions(&g.grafted, b2)?;
    let lhs = shuffle_b_with(&Delegation::new_unchecked(g.grafted.clone(), constructs.to_vec()), b2, q)?;

    let inner_cs = constructs[g.inner_positions.clone()].to_vec();
    let inner_d = Delegation::new_unchecked(inner.clone(), inner_cs);
    let to_outer = |i: usize| if i < pos { i } else { i + 1 - inner.arity() };
    let b_inner: BTreeSet<usize> = b2
        .iter()
        .filter(|i| g.inner_positions.contains(i))
        .map(|i| i - pos)
        .collect();
    let b_outer: BTreeSet<usize> = b2
        .iter()
        .filter(|i| !g.inner_positions.contains(i))
        .map(|&i| to_outer(i))
        .collect();

    let rhs = if b_inner.is_empty() {
        let inner_all = shuffle_with(&inner_d, q)?;
        let parts = outer_parts(outer, pos, &g, constructs, inner_all);
        shuffle_b_linear(outer, &parts, &b_outer, q)?
    } else {
        let inner_b = shuffle_b_with(&inner_d, &b_inner, q)?;
        let parts = outer_parts(outer, pos, &g, constructs, inner_b);
        let mut b = b_outer;
        b.insert(pos);
        shuffle_b_linear(outer, &parts, &b, q)?
    };
    Ok(Sides { lhs, rhs })
}

pub fn check_polydendriform(
    outer: &Team,
    pos: usize,
    inner: &Team,
    constructs: &[Construct],
    b2: &BTreeSet<usize>,
) -> Result<bool> {
    let q = QMode::default_for(outer.graft(pos, inner)?.mode());
    Ok(polydendriform_sides(outer, pos, inner, constructs, b2, q)?.holds())
}

/// `∗(δ'')` against `∗(…, ∗(δ'), …)`.
pub fn associativity_sides(outer: &Team, pos: usize, inner: &Team, constructs: &[Construct], q: QMode) -> Result<Sides> {
    let g = prepare_grafting(outer, pos, inner, constructs)?;
    let lhs = shuffle_with(&Delegation::new_unchecked(g.grafted.clone(), constructs.to_vec()), q)?;
    let inner_d = Delegation::new_unchecked(inner.clone(), constructs[g.inner_positions.clone()].to_vec());
    let inner_all = shuffle_with(&inner_d, q)?;
    let parts = outer_parts(outer, pos, &g, constructs, inner_all);
    let rhs = shuffle_linear(outer, &parts, q)?;
    Ok(Sides { lhs, rhs })
}

/// Associativity with the default `q` for the grafted team's mode.
pub fn check_associativity(outer: &Team, pos: usize, inner: &Team, constructs: &[Construct]) -> Result<bool> {
    let q = QMode::default_for(outer.graft(pos, inner)?.mode());
    Ok(associativity_sides(outer, pos, inner, constructs, q)?.holds())
}

/// The seven tridendriform equations, named by their shape.
pub const TRIDENDRIFORM_EQUATIONS: [&str; 7] = [
    "(a<b)<c = a<(b*c)",
    "(a>b)<c = a>(b<c)",
    "(a*b)>c = a>(b>c)",
    "(a.b).c = a.(b.c)",
    "(a>b).c = a>(b.c)",
    "(a<b).c = a.(b>c)",
    "(a.b)<c = a.(b<c)",
];

/// The four binary teams used to bracket a ternary team `(H1, H2, H3)`.
#[derive(Clone, Debug)]
pub struct Bracketings {
    /// `(H12, H3)` over the whole.
    pub left_outer: Team,
    /// `(H1, H2)` over `H12`.
    pub left_inner: Team,
    /// `(H1, H23)` over the whole.
    pub right_outer: Team,
    /// `(H2, H3)` over `H23`.
    pub right_inner: Team,
}

impl Bracketings {
    pub fn new(team: &Team) -> Result<Bracketings> {
        if team.arity() != 3 {
            return Err(Error::Arity {
                expected: 3,
                found: team.arity(),
            });
        }
        let u = team.universe().clone();
        let p = team.participants();
        let member = |c: VertexSet| -> Result<Hypergraph> {
            u.member(&c).ok_or_else(|| Error::NotInUniverse {
                universe: u.to_string(),
                carrier: c.to_string(),
            })
        };
        let h12 = member(p[0].carrier().union(p[1].carrier()))?;
        let h23 = member(p[1].carrier().union(p[2].carrier()))?;
        let mode = team.mode();
        Ok(Bracketings {
            left_outer: Team::from_hypergraphs(u.clone(), vec![h12.clone(), p[2].clone()], team.whole().clone(), mode)?,
            left_inner: Team::from_hypergraphs(u.clone(), vec![p[0].clone(), p[1].clone()], h12, mode)?,
            right_outer: Team::from_hypergraphs(u.clone(), vec![p[0].clone(), h23.clone()], team.whole().clone(), mode)?,
            right_inner: Team::from_hypergraphs(u, vec![p[1].clone(), p[2].clone()], h23, mode)?,
        })
    }
}

#[derive(Clone, Copy)]
enum Op {
    Prec,
    Dot,
    Succ,
    Star,
}

fn binary(team: &Team, op: Op, a: &LinearConstruct, b: &LinearConstruct, q: QMode) -> Result<LinearConstruct> {
    let parts = [a.clone(), b.clone()];
    let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<usize>>();
    match op {
        Op::Prec => shuffle_b_linear(team, &parts, &set(&[0]), q),
        Op::Dot => shuffle_b_linear(team, &parts, &set(&[0, 1]), q),
        Op::Succ => shuffle_b_linear(team, &parts, &set(&[1]), q),
        Op::Star => shuffle_linear(team, &parts, q),
    }
}

/// Both sides of the seven tridendriform equations on `(a, b, c)`.
pub fn tridendriform_sides(team: &Team, constructs: &[Construct], q: QMode) -> Result<Vec<Sides>> {
    let br = Bracketings::new(team)?;
    if constructs.len() != 3 {
        return Err(Error::Arity {
            expected: 3,
            found: constructs.len(),
        });
    }
    for (h, c) in team.participants().iter().zip(constructs) {
        validate(h, c)?;
    }
    let [a, b, c] = [0, 1, 2].map(|i| LinearConstruct::from_construct(constructs[i].clone()));
    use Op::*;
    // (inner op, outer op) for the left bracketing, then for the right one
    let shapes = [
        ((Prec, Prec), (Star, Prec)),
        ((Succ, Prec), (Prec, Succ)),
        ((Star, Succ), (Succ, Succ)),
        ((Dot, Dot), (Dot, Dot)),
        ((Succ, Dot), (Dot, Succ)),
        ((Prec, Dot), (Succ, Dot)),
        ((Dot, Prec), (Prec, Dot)),
    ];
    shapes
        .iter()
        .map(|&((li, lo), (ri, ro))| {
            let ab = binary(&br.left_inner, li, &a, &b, q)?;
            let lhs = binary(&br.left_outer, lo, &ab, &c, q)?;
            let bc = binary(&br.right_inner, ri, &b, &c, q)?;
            let rhs = binary(&br.right_outer, ro, &a, &bc, q)?;
            Ok(Sides { lhs, rhs })
        })
        .collect()
}
