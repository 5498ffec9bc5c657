//! Checks of the algebraic identities over sampled or exhaustive inputs,
//! reporting the first counterexample found.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use rand::Rng;

use crate::clans::{Delegation, Mode, Reach, Team, Universe};
use crate::constructs::{enumerate, restrict_construct, tube_to_construct, tubing, Construct, Tubing};
use crate::encodings::{
    associahedron_encode, br_shuffle, erosohedron_counts, hypercube_decode, hypercube_encode, hypercube_trio_words,
    lr_trio_trees, permutohedron_decode, permutohedron_encode, CubeWord, PackedWord, SchroederTree, TreeSum, WordSum,
};
use crate::error::{Error, Result};
use crate::hypergraph::VertexSet;
use crate::qalgebra::{LinearConstruct, QPolynomial};
use crate::sampling::{all_delegations, all_teams, normalized_carriers, Grafting, Sampler};
use crate::shuffle::{
    associativity_sides, polydendriform_sides, shuffle_nonrecursive, shuffle_with, tridendriform_sides, trio_with,
    QMode, Sides, TRIDENDRIFORM_EQUATIONS,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    StrictAssoc,
    SemistrictAssoc,
    Tridendriform,
    Polydendriform,
    OracleAgreement,
    CoeffSum,
    StrictnessLemma,
    TubingLemma,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::StrictAssoc,
        Suite::SemistrictAssoc,
        Suite::Tridendriform,
        Suite::Polydendriform,
        Suite::OracleAgreement,
        Suite::CoeffSum,
        Suite::StrictnessLemma,
        Suite::TubingLemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::StrictAssoc => "strict-assoc",
            Suite::SemistrictAssoc => "semistrict-assoc",
            Suite::Tridendriform => "tridendriform",
            Suite::Polydendriform => "polydendriform",
            Suite::OracleAgreement => "oracle-agreement",
            Suite::CoeffSum => "coeff-sum",
            Suite::StrictnessLemma => "strictness-lemma",
            Suite::TubingLemma => "tubing-lemma",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub universe: Arc<Universe>,
    pub max_carrier: usize,
    pub seed: u64,
    /// Number of random inputs for sampled suites.
    pub samples: usize,
    /// Largest carrier checked exhaustively; larger ones are sampled.
    pub exhaustive_limit: usize,
}

impl SuiteConfig {
    pub fn new(universe: Arc<Universe>, max_carrier: usize, seed: u64) -> Self {
        SuiteConfig {
            universe,
            max_carrier,
            seed,
            samples: 100,
            exhaustive_limit: 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub universe: String,
    pub cases: usize,
    pub failures: usize,
    /// Inputs for which the identity does not apply, such as teams that
    /// turn out not to be semi-strict.
    pub skipped: usize,
    pub counterexample: Option<String>,
}

impl Report {
    /// At least one case ran and none failed.
    pub fn passed(&self) -> bool {
        self.cases > 0 && self.failures == 0
    }
}

struct Tally {
    cases: usize,
    failures: usize,
    skipped: usize,
    first: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: 0,
            skipped: 0,
            first: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    /// Records the outcome of a check that may hit an input outside the
    /// identity's scope (a team that is not semi-strict, a missing member).
    fn record_result(&mut self, r: Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, describe),
            Err(Error::NotSemiStrict(_) | Error::NotInUniverse { .. } | Error::NotOrdered(_) | Error::NotStrict(_)) => {
                self.skipped += 1
            }
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }

    fn finish(self, suite: Suite, u: &Universe) -> Report {
        Report {
            suite,
            universe: u.to_string(),
            cases: self.cases,
            failures: self.failures,
            skipped: self.skipped,
            counterexample: self.first,
        }
    }
}

/// The mode under which a universe's products are taken.
pub fn natural_mode(u: &Universe) -> Mode {
    if u.is_restrictohedron() {
        Mode::Strict
    } else {
        Mode::SemiStrict
    }
}

fn describe_team(t: &Team) -> String {
    let parts: Vec<String> = t.participants().iter().map(|h| h.carrier().to_string()).collect();
    format!("team [{}] over {}", parts.join(", "), t.whole().carrier())
}

fn describe_constructs(cs: &[Construct]) -> String {
    let v: Vec<String> = cs.iter().map(Construct::to_string).collect();
    format!("[{}]", v.join(", "))
}

fn describe_sides(s: &Sides) -> String {
    format!("lhs = {}; rhs = {}", s.lhs, s.rhs)
}

fn describe_grafting(g: &Grafting) -> String {
    format!(
        "outer {} grafted at {} with inner {}; constructs {}",
        describe_team(&g.outer),
        g.pos,
        describe_team(&g.inner),
        describe_constructs(&g.constructs)
    )
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Report> {
    if cfg.max_carrier == 0 {
        return Err(Error::PreconditionViolated("max carrier must be positive".into()));
    }
    let tally = match suite {
        Suite::StrictAssoc => assoc(cfg, Mode::Strict, QMode::Symbolic),
        Suite::SemistrictAssoc => assoc(cfg, Mode::SemiStrict, QMode::At(-1)),
        Suite::Tridendriform => tridendriform(cfg)?,
        Suite::Polydendriform => polydendriform(cfg),
        Suite::OracleAgreement => oracle_agreement(cfg)?,
        Suite::CoeffSum => coeff_sum(cfg),
        Suite::StrictnessLemma => strictness(cfg)?,
        Suite::TubingLemma => tubing_lemma(cfg)?,
    };
    Ok(tally.finish(suite, &cfg.universe))
}

/// Random grafting with a result of at least three vertices.
fn sample_grafting(s: &mut Sampler, max_carrier: usize, mode: Mode) -> Option<Grafting> {
    let size = s.rng().random_range(3..=max_carrier.max(3));
    let outer = s.rng().random_range(2..=(size - 1).min(3));
    let inner = s.rng().random_range(2..=(size + 1 - outer).min(3));
    s.grafting(size, outer, inner, mode)
}

fn assoc(cfg: &SuiteConfig, mode: Mode, q: QMode) -> Tally {
    let mut s = Sampler::new(cfg.universe.clone(), cfg.seed);
    let mut t = Tally::new();
    for _ in 0..cfg.samples {
        let Some(g) = sample_grafting(&mut s, cfg.max_carrier, mode) else {
            t.skipped += 1;
            continue;
        };
        let sides = associativity_sides(&g.outer, g.pos, &g.inner, &g.constructs, q);
        let holds = sides.as_ref().map(Sides::holds).map_err(Clone::clone);
        t.record_result(holds, || {
            let extra = sides.as_ref().map(describe_sides).unwrap_or_default();
            format!("{}; {extra}", describe_grafting(&g))
        });
    }
    t
}

fn polydendriform(cfg: &SuiteConfig) -> Tally {
    let mode = natural_mode(&cfg.universe);
    let q = QMode::default_for(mode);
    let mut s = Sampler::new(cfg.universe.clone(), cfg.seed);
    let mut t = Tally::new();
    for _ in 0..cfg.samples {
        let Some(g) = sample_grafting(&mut s, cfg.max_carrier, mode) else {
            t.skipped += 1;
            continue;
        };
        let n = g.constructs.len();
        for mask in 1u32..(1 << n) {
            let b2: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let sides = polydendriform_sides(&g.outer, g.pos, &g.inner, &g.constructs, &b2, q);
            let holds = sides.as_ref().map(Sides::holds).map_err(Clone::clone);
            t.record_result(holds, || {
                let extra = sides.as_ref().map(describe_sides).unwrap_or_default();
                format!("{}; B'' = {b2:?}; {extra}", describe_grafting(&g))
            });
        }
    }
    t
}

fn check_tridendriform(t: &mut Tally, d: &Delegation, q: QMode) {
    match tridendriform_sides(d.team(), d.constructs(), q) {
        Ok(all) => {
            for (name, sides) in TRIDENDRIFORM_EQUATIONS.iter().zip(&all) {
                t.record(sides.holds(), || {
                    format!(
                        "{name} on {} with {}; {}",
                        describe_team(d.team()),
                        describe_constructs(d.constructs()),
                        describe_sides(sides)
                    )
                });
            }
        }
        Err(e) => t.record_result(Err(e), || {
            format!("{} with {}", describe_team(d.team()), describe_constructs(d.constructs()))
        }),
    }
}

fn tridendriform(cfg: &SuiteConfig) -> Result<Tally> {
    let u = &cfg.universe;
    let mode = natural_mode(u);
    let q = QMode::default_for(mode);
    let mut t = Tally::new();
    for size in 3..=cfg.max_carrier.min(cfg.exhaustive_limit) {
        for whole in normalized_carriers(u, size) {
            for team in all_teams(u, &whole, 3, mode, true) {
                for d in all_delegations(&team)? {
                    check_tridendriform(&mut t, &d, q);
                }
            }
        }
    }
    if cfg.max_carrier > cfg.exhaustive_limit {
        let mut s = Sampler::new(u.clone(), cfg.seed);
        for _ in 0..cfg.samples {
            let size = s.rng().random_range(3..=cfg.max_carrier);
            match s.team(size, 3, mode) {
                Some(team) => {
                    let d = s.delegation(&team);
                    check_tridendriform(&mut t, &d, q);
                }
                None => t.skipped += 1,
            }
        }
    }
    Ok(t)
}

fn coeff_sum(cfg: &SuiteConfig) -> Tally {
    let mode = natural_mode(&cfg.universe);
    let mut s = Sampler::new(cfg.universe.clone(), cfg.seed);
    let mut t = Tally::new();
    for _ in 0..cfg.samples {
        let size = s.rng().random_range(2..=cfg.max_carrier.max(2));
        let arity = s.rng().random_range(2..=size.min(4));
        let Some(team) = s.team(size, arity, mode) else {
            t.skipped += 1;
            continue;
        };
        let d = s.delegation(&team);
        let product = shuffle_with(&d, QMode::At(-1));
        let ok = product.as_ref().map(|p| p.coefficient_sum() == QPolynomial::one()).map_err(Clone::clone);
        t.record_result(ok, || {
            let shown = product.as_ref().map(ToString::to_string).unwrap_or_default();
            format!("{} with {}; product {shown}", describe_team(&team), describe_constructs(d.constructs()))
        });
    }
    t
}

fn strictness(cfg: &SuiteConfig) -> Result<Tally> {
    let u = &cfg.universe;
    let mut t = Tally::new();
    for size in 2..=cfg.max_carrier.min(8) {
        for whole in normalized_carriers(u, size) {
            for team in all_teams(u, &whole, 0, Mode::SemiStrict, false) {
                let fast = team.is_strict();
                let slow = team.brute_force_strict()?;
                t.record(fast == slow, || {
                    format!("{}: criterion says {fast}, definition says {slow}", describe_team(&team))
                });
            }
        }
    }
    Ok(t)
}

fn tubing_lemma(cfg: &SuiteConfig) -> Result<Tally> {
    let u = &cfg.universe;
    let mut t = Tally::new();
    for size in 1..=cfg.max_carrier {
        for carrier in normalized_carriers(u, size) {
            let Some(l) = u.member(&carrier) else { continue };
            let hs: Vec<_> = carrier.nonempty_subsets().iter().filter_map(|y| u.member(y)).collect();
            for s in enumerate(&l)? {
                let tubes = tubing(&s);
                for h in &hs {
                    let Ok(r) = restrict_construct(&s, &l, h) else {
                        t.skipped += 1;
                        continue;
                    };
                    let lhs = tubing(&r);
                    let rhs: Tubing = tubes.iter().flat_map(|tube| tubing(&tube_to_construct(tube, h))).collect();
                    t.record(lhs == rhs, || {
                        format!("S = {s} on {}, H on {}: restriction {r}", l.carrier(), h.carrier())
                    });
                }
            }
        }
    }
    Ok(t)
}

fn interval_pair(a: usize, b: usize) -> (VertexSet, VertexSet, VertexSet) {
    let (a, b) = (a as i64, b as i64);
    (VertexSet::interval(1, a), VertexSet::interval(a + 1, a + b), VertexSet::interval(1, a + b))
}

fn binary_team(u: &Arc<Universe>, a: usize, b: usize, mode: Mode) -> Result<Team> {
    let (x, y, whole) = interval_pair(a, b);
    Team::make(u.clone(), &[x, y], &whole, mode)
}

fn oracle_agreement(cfg: &SuiteConfig) -> Result<Tally> {
    let u = &cfg.universe;
    let mut t = Tally::new();
    let n = cfg.max_carrier;
    match &**u {
        Universe::Gamma(Reach::Infinite) => permutohedron_oracle(&mut t, u, n.min(6))?,
        Universe::Gamma(Reach::Finite(1)) => associahedron_oracle(&mut t, u, n.min(cfg.exhaustive_limit))?,
        Universe::Hypercube => hypercube_oracle(&mut t, u, n.min(cfg.exhaustive_limit))?,
        Universe::Simplex => {
            for m in 1..=n.min(10) {
                let count = enumerate(&u.member(&VertexSet::interval(1, m as i64)).expect("simplex"))?.len();
                t.record(count == (1 << m) - 1, || format!("simplex on {m} vertices has {count} faces"));
            }
        }
        Universe::Erosohedron => {
            for m in 2..=n.min(7) {
                let h = crate::clans::erosohedron_hypergraph(&VertexSet::interval(1, m as i64));
                let by_nodes = crate::constructs::count_by_nodes(&h)?;
                let formula = erosohedron_counts(m as u32);
                // a face of dimension k is a construct with m - k nodes
                let mut by_dim = vec![BigUint::from(0u32); m];
                for (i, c) in by_nodes.iter().enumerate() {
                    if let Some(k) = m.checked_sub(i + 1) {
                        by_dim[k] = c.clone();
                    }
                }
                let total: BigUint = by_nodes.iter().sum();
                t.record(by_dim == formula.faces_by_dim && total == formula.total, || {
                    format!("erosohedron on {m} vertices: enumeration {by_dim:?}, formula {:?}", formula.faces_by_dim)
                });
            }
        }
        _ => {}
    }
    if u.is_restrictohedron() {
        recursive_oracle(&mut t, cfg);
    }
    if t.cases == 0 {
        return Err(Error::PreconditionViolated(format!("no oracle available for {u}")));
    }
    Ok(t)
}

/// Recursive against non-recursive product on sampled strict delegations.
fn recursive_oracle(t: &mut Tally, cfg: &SuiteConfig) {
    let mut s = Sampler::new(cfg.universe.clone(), cfg.seed);
    for _ in 0..cfg.samples {
        let size = s.rng().random_range(2..=cfg.max_carrier.clamp(2, crate::shuffle::NONRECURSIVE_LIMIT));
        let arity = s.rng().random_range(2..=size.min(4));
        let Some(team) = s.team(size, arity, Mode::Strict) else {
            t.skipped += 1;
            continue;
        };
        let d = s.delegation(&team);
        let ok = shuffle_with(&d, QMode::Symbolic).and_then(|a| Ok(a == shuffle_nonrecursive(&d)?));
        t.record_result(ok, || format!("{} with {}", describe_team(&team), describe_constructs(d.constructs())));
    }
}

fn packed_words(len: usize) -> Vec<PackedWord> {
    let mut out = Vec::new();
    let options: Vec<Vec<u32>> = (0..len).map(|_| (1..=len as u32).collect()).collect();
    for w in crate::constructs::cartesian(&options) {
        if let Ok(p) = PackedWord::new(w) {
            out.push(p);
        }
    }
    out
}

fn encode_words(l: &LinearConstruct, x: &VertexSet) -> Result<BTreeMap<PackedWord, QPolynomial>> {
    l.terms()
        .map(|(c, p)| Ok((permutohedron_encode(c, x)?, p.clone())))
        .collect()
}

fn unit_sum(words: BTreeSet<PackedWord>) -> BTreeMap<PackedWord, QPolynomial> {
    words.into_iter().map(|w| (w, QPolynomial::one())).collect()
}

fn at_one(m: BTreeMap<PackedWord, QPolynomial>) -> BTreeMap<PackedWord, QPolynomial> {
    m.into_iter()
        .map(|(w, p)| (w, QPolynomial::constant(p.evaluate(1))))
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

fn permutohedron_oracle(t: &mut Tally, u: &Arc<Universe>, max_total: usize) -> Result<()> {
    for a in 1..max_total {
        for b in 1..=max_total - a {
            let team = binary_team(u, a, b, Mode::Strict)?;
            let (x, y, whole) = interval_pair(a, b);
            for f in packed_words(a) {
                for g in packed_words(b) {
                    let cs = vec![permutohedron_decode(&f, &x)?, permutohedron_decode(&g, &y)?];
                    let d = Delegation::new(team.clone(), cs)?;
                    let tr = trio_with(&d, QMode::Symbolic)?;
                    let words = br_shuffle(&f, &g);
                    let ok = at_one(encode_words(&tr.prec, &whole)?) == unit_sum(words.prec)
                        && at_one(encode_words(&tr.dot, &whole)?) == unit_sum(words.dot)
                        && at_one(encode_words(&tr.succ, &whole)?) == unit_sum(words.succ);
                    t.record(ok, || format!("packed words {f} and {g}"));
                }
            }
        }
    }
    Ok(())
}

fn encode_trees(l: &LinearConstruct, x: &VertexSet) -> Result<TreeSum> {
    l.terms()
        .map(|(c, p)| Ok((associahedron_encode(c, x)?, p.clone())))
        .collect()
}

fn associahedron_oracle(t: &mut Tally, u: &Arc<Universe>, max_total: usize) -> Result<()> {
    for a in 1..max_total {
        for b in 1..=max_total - a {
            let team = binary_team(u, a, b, Mode::Strict)?;
            let (x, y, whole) = interval_pair(a, b);
            for c1 in enumerate(&team.participants()[0])? {
                for c2 in enumerate(&team.participants()[1])? {
                    let s: SchroederTree = associahedron_encode(&c1, &x)?;
                    let r: SchroederTree = associahedron_encode(&c2, &y)?;
                    let d = Delegation::new(team.clone(), vec![c1.clone(), c2.clone()])?;
                    let tr = trio_with(&d, QMode::Symbolic)?;
                    let trees = lr_trio_trees(&s, &r);
                    let ok = encode_trees(&tr.prec, &whole)? == trees.prec
                        && encode_trees(&tr.dot, &whole)? == trees.dot
                        && encode_trees(&tr.succ, &whole)? == trees.succ;
                    t.record(ok, || format!("trees {s} and {r} (constructs {c1} and {c2})"));
                }
            }
        }
    }
    Ok(())
}

fn encode_cube(l: &LinearConstruct, x: &VertexSet) -> Result<WordSum> {
    l.terms()
        .map(|(c, p)| {
            let k = i64::try_from(p.evaluate(-1)).map_err(|_| Error::TooLarge("coefficient".into()))?;
            Ok((hypercube_encode(c, x)?, k))
        })
        .filter(|r| !matches!(r, Ok((_, 0))))
        .collect()
}

fn hypercube_oracle(t: &mut Tally, u: &Arc<Universe>, max_total: usize) -> Result<()> {
    for m in 1..=max_total {
        let x = VertexSet::interval(1, m as i64);
        let faces = enumerate(&u.member(&x).expect("hypercube"))?;
        t.record(faces.len() == 3usize.pow(m as u32 - 1), || {
            format!("hypercube on {m} vertices has {} faces", faces.len())
        });
        for c in &faces {
            let round = hypercube_encode(c, &x).and_then(|w: CubeWord| hypercube_decode(&w, &x));
            t.record(round.as_ref().ok() == Some(c), || format!("word round trip of {c}"));
        }
    }
    for a in 1..max_total {
        for b in 1..=max_total - a {
            let team = binary_team(u, a, b, Mode::SemiStrict)?;
            let (x, y, whole) = interval_pair(a, b);
            for c1 in enumerate(&team.participants()[0])? {
                for c2 in enumerate(&team.participants()[1])? {
                    let (w1, w2) = (hypercube_encode(&c1, &x)?, hypercube_encode(&c2, &y)?);
                    let d = Delegation::new(team.clone(), vec![c1.clone(), c2.clone()])?;
                    let tr = trio_with(&d, QMode::At(-1))?;
                    let words = hypercube_trio_words(&w1, &w2);
                    let ok = encode_cube(&tr.prec, &whole)? == words.prec
                        && encode_cube(&tr.dot, &whole)? == words.dot
                        && encode_cube(&tr.succ, &whole)? == words.succ;
                    t.record(ok, || format!("cube words {w1} and {w2}"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(suite: Suite, u: Universe, max: usize) -> Report {
        let mut cfg = SuiteConfig::new(Arc::new(u), max, 1);
        cfg.samples = 10;
        run_suite(suite, &cfg).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("assoc".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for (suite, u) in [
            (Suite::StrictAssoc, Universe::gamma(2)),
            (Suite::SemistrictAssoc, Universe::Simplex),
            (Suite::Tridendriform, Universe::gamma(1)),
            (Suite::CoeffSum, Universe::Hypercube),
            (Suite::StrictnessLemma, Universe::Simplex),
            (Suite::TubingLemma, Universe::gamma(2)),
            (Suite::OracleAgreement, Universe::permutohedra()),
        ] {
            let r = run(suite, u, 4);
            assert!(r.passed(), "{r:?}");
        }
    }
}
